//! Positive roots, highest roots and cominuscule nodes of every supported type.

use cominuscule::rootsys::{Kind, RootSystem};
use cominuscule::space::Space;

fn main() -> Result<(), cominuscule::error::Error> {
    for (kind, rank) in [(Kind::A, 4), (Kind::B, 4), (Kind::C, 4), (Kind::D, 5), (Kind::E6, 6), (Kind::E7, 7)] {
        let rs = RootSystem::new(kind, rank)?;
        let cominuscule: Vec<usize> = (1..=rank).filter(|&i| Space::new(kind, rank, i).is_ok()).collect();
        let name = if kind.is_exceptional() { kind.to_string() } else { format!("{kind}{rank}") };
        println!(
            "{name}: {} positive roots, highest root {}, |W| = {}, cominuscule nodes {cominuscule:?}",
            rs.positive_roots().len(),
            rs.highest_root(),
            rs.weyl_order()
        );
    }
    Ok(())
}
