pub mod cli;
pub mod dict;
pub mod error;
pub mod grading;
pub mod oracle;
pub mod render;
pub mod rootsys;
pub mod schubert;
pub mod singloc;
pub mod space;
pub mod weyl;
