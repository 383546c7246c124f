//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the report is printed as-is; exits nonzero if any line fails.

mod common;

use std::time::Duration;

use cominuscule::rootsys::Kind;
use common::*;

const ALL: &[&str] = &["A", "B", "C", "D", "E6", "E7"];

fn all_of(checks: &[Check]) -> Check {
    let mut notes = Vec::new();
    for c in checks {
        notes.push(c.clone()?);
    }
    Ok(notes.join("; "))
}

fn main() {
    let (reports, elapsed) = verify_all(&criterion_spaces());
    let classes: usize = reports.iter().map(|r| r.proper_classes).sum();

    let oracle = all_of(&[
        checks_clean(&reports, &["maximality oracle", "graph count", "simple-root Π", "excision shape"], ALL),
        if elapsed < Duration::from_secs(60) {
            Ok(format!("{} spaces, {classes} proper classes, {:.2} s", reports.len(), elapsed.as_secs_f64()))
        } else {
            Err(format!("took {elapsed:?}"))
        },
    ]);

    let corollaries = all_of(&[
        checks_clean(&reports, &["smooth iff a = 0", "a = 1 gives one component"], ALL),
        checks_clean(&reports, &["codimension bound"], &["A", "C", "D", "E6", "E7"]),
        checks_clean(&reports, &["component count formula"], &["A", "C", "D"]),
        checks_clean(&reports, &["codimension equality"], &["A", "C"]),
        Ok(format!(
            "{} disagreements with the unproved spinor equality criterion reported separately",
            discrepancy_count(&reports)
        )),
    ]);

    let structural = all_of(&[
        checks_clean(
            &reports,
            &["bijectivity", "closed complement", "reconstruction", "(a,J) search", "stabilizer", "bigrade vanishing"],
            ALL,
        ),
        checks_clean(&reports, &["dictionary round trip", "partition dimension"], &["A", "C", "D"]),
        checks_clean(&reports, &["quadric dimension", "quadric admissible list"], &["B", "D"]),
    ]);

    let results: [(&str, Check); 8] = [
        ("E6/P6 golden table", exceptional_table(Kind::E6, 6, "e6p6.tsv", Duration::from_secs(1))),
        ("E7/P7 golden table", exceptional_table(Kind::E7, 7, "e7p7.tsv", Duration::from_secs(2))),
        (
            "Hasse figures",
            all_of(&[
                hasse_figure(Kind::E6, 6, 27, 36, &E6_BOTTOM, &E6_TOP),
                hasse_figure(Kind::E7, 7, 56, 84, &E7_BOTTOM, &E7_TOP),
            ]),
        ),
        ("Gr(5,11) worked example", worked_example()),
        (
            "dictionary tables",
            all_of(&[dictionary_table(Kind::C, 5, "lg5.tsv"), dictionary_table(Kind::D, 6, "s6.tsv"), gr513_example()]),
        ),
        ("oracle equivalence", oracle),
        ("corollary suite", corollaries),
        ("structural invariants", structural),
    ];

    let mut failed = 0;
    for (k, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(note) => println!("criterion {}: PASS  {name} ({note})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({why})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
