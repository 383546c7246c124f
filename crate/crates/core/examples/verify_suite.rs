//! Runs every independent check on the default suite of spaces.

use cominuscule::oracle::{desk_suite, verify_space};

fn main() -> Result<(), cominuscule::error::Error> {
    let mut violations = 0;
    for (kind, rank, node) in desk_suite() {
        let report = verify_space(kind, rank, node)?;
        violations += report.violations.len();
        println!(
            "{:8} {:4} proper classes, {} violations, {} discrepancies",
            report.space,
            report.proper_classes,
            report.violations.len(),
            report.discrepancies.len()
        );
    }
    println!("total violations: {violations}");
    Ok(())
}
