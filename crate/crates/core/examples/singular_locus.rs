//! The singular locus of the Gr(5,11) class with a = 2, J = {2,3,6,8,10}:
//! the witnesses ε, the excised roots, and the two components.

use cominuscule::rootsys::Kind;
use cominuscule::schubert::{ideal_of_aj, AJ};
use cominuscule::singloc::{min_codim_analysis, pi_set, sing_components};
use cominuscule::space::Space;

fn main() -> Result<(), cominuscule::error::Error> {
    let space = Space::new(Kind::A, 10, 5)?;
    let aj = AJ::new(2, [2, 3, 6, 8, 10]);
    let ctx = aj.context(&space)?;
    let pi: Vec<String> = pi_set(&ctx).iter().map(|r| r.to_string()).collect();
    println!("Π = {{{}}}", pi.join(", "));
    let report = sing_components(&space, ideal_of_aj(&space, &aj)?)?;
    for c in &report.components {
        let excised: Vec<String> = c.excised.iter().map(|r| r.to_string()).collect();
        println!(
            "ε = {}: remove {{{}}} → {} (codim {})",
            c.epsilon,
            excised.join(", "),
            c.label.display(Kind::A),
            c.codim
        );
    }
    println!("predicted number of components: {:?}", report.predicted_count);
    if let Some(analysis) = min_codim_analysis(&space, &report) {
        println!("minimum codimension {} (bound {})", analysis.min_codim, analysis.bound);
    }
    Ok(())
}
