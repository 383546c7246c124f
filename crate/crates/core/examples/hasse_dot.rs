//! Graphviz source for the Freudenthal-variety Hasse diagram; pipe into
//! `dot -Tsvg` to draw it.

use cominuscule::render::hasse_dot;
use cominuscule::rootsys::Kind;
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

fn main() -> Result<(), cominuscule::error::Error> {
    let diagram = HasseDiagram::new(Space::new(Kind::E7, 7, 7)?)?;
    print!("{}", hasse_dot(&diagram)?);
    Ok(())
}
