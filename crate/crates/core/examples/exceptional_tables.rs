//! Class tables with singular loci for the Cayley plane and the Freudenthal
//! variety, in the `list` TSV layout.

use cominuscule::render::{list_rows, list_tsv};
use cominuscule::rootsys::Kind;
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

fn main() -> Result<(), cominuscule::error::Error> {
    for (kind, rank) in [(Kind::E6, 6), (Kind::E7, 7)] {
        let diagram = HasseDiagram::new(Space::new(kind, rank, rank)?)?;
        println!("# {}", diagram.space().label());
        print!("{}", list_tsv(diagram.space(), &list_rows(&diagram)?));
    }
    Ok(())
}
