//! The Hasse diagram of the Cayley plane: classes by dimension, reduced
//! words and Bruhat covers.

use cominuscule::rootsys::Kind;
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

fn main() -> Result<(), cominuscule::error::Error> {
    let diagram = HasseDiagram::new(Space::new(Kind::E6, 6, 6)?)?;
    println!("{}: {} classes, {} covers", diagram.space().label(), diagram.len(), diagram.cover_edges().len());
    for (k, class) in diagram.classes().iter().enumerate() {
        let covers: Vec<usize> = diagram.cover_edges().iter().filter(|e| e.1 == k).map(|e| e.0).collect();
        println!("#{k:2} dim {:2} word {:16} covers {covers:?}", class.dim(), format!("{:?}", class.element.word()));
    }
    Ok(())
}
