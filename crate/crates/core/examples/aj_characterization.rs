//! Each Schubert class is determined by a pair (a, J): its inversion set is
//! the set of roots of g_1 of Z_J-level at most a.

use cominuscule::rootsys::Kind;
use cominuscule::schubert::{aj_of, aj_search, class_table, ideal_of_aj, AJ};
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

fn main() -> Result<(), cominuscule::error::Error> {
    let space = Space::new(Kind::E7, 7, 7)?;
    let aj = AJ::parse("5:1356", 7)?;
    let ideal = ideal_of_aj(&space, &aj)?;
    println!("{} in {}: {} roots", aj.display(Kind::E7), space.label(), ideal.dim());
    for root in space.roots_of(ideal.set()) {
        println!("  {root}");
    }
    println!("recovered label: {}", aj_of(&space, ideal)?.display(Kind::E7));
    let all: Vec<String> = aj_search(&space, ideal.set()).iter().map(|x| x.display(Kind::E7)).collect();
    println!("every (a,J) with this level filter: {all:?}");

    let diagram = HasseDiagram::new(Space::new(Kind::A, 5, 3)?)?;
    println!("\n{}:", diagram.space().label());
    for rec in class_table(&diagram)? {
        println!("  dim {:2}  {}", rec.dim, rec.label.display(Kind::A));
    }
    Ok(())
}
