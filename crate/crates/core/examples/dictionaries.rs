//! Translating (a, J) to partitions for Grassmannians, Lagrangian
//! Grassmannians and spinor varieties, and to linear sections for quadrics.

use cominuscule::dict::{aj_to_partition, partition_to_aj, quadric_dict, Flavor, Parity, Partition};
use cominuscule::render::{dict_rows, dict_tsv};
use cominuscule::rootsys::Kind;
use cominuscule::schubert::AJ;
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

fn main() -> Result<(), cominuscule::error::Error> {
    let gr = Space::new(Kind::A, 12, 5)?;
    let lambda = aj_to_partition(&gr, &AJ::new(2, [2, 3, 7, 9, 12]))?;
    println!("Gr(5,13): 2:2,3,7,9,12 ↔ {lambda}");
    let back = partition_to_aj(&gr, &Partition::parse("(3,4,7,11,12)", Flavor::Grassmann, 12, 5)?)?;
    println!("Gr(5,13): (3,4,7,11,12) ↔ {}", back.display(Kind::A));

    for (kind, n) in [(Kind::C, 5), (Kind::D, 6)] {
        let diagram = HasseDiagram::new(Space::new(kind, n, n)?)?;
        println!("\n# {}", diagram.space().label());
        print!("{}", dict_tsv(&dict_rows(&diagram)?));
    }

    println!("\n# Q^7 = B4/P1");
    for aj in [AJ::new(0, [2]), AJ::new(1, [3])] {
        let d = quadric_dict(Parity::Odd, 4, &aj)?;
        println!("{}\t{}\tdim {}", aj.display(Kind::B), d.geometry, d.dimension());
    }
    Ok(())
}
