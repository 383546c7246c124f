//! Transcribed tables and figures, and the checks shared by the golden tests
//! and the acceptance report.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use cominuscule::oracle::{verify_space, VerificationReport};
use cominuscule::render::{self, ListRow};
use cominuscule::rootsys::{Kind, Root};
use cominuscule::schubert::{ideal_of_aj, ClassLabel, AJ};
use cominuscule::singloc::{delta_w_eps, pi_set, sing_components};
use cominuscule::space::Space;
use cominuscule::weyl::HasseDiagram;

pub type Check = Result<String, String>;

/// Tab-separated rows of a file in `tests/data`.
pub fn fixture(name: &str) -> Vec<Vec<String>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines().filter(|l| !l.is_empty()).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

pub fn diagram(kind: Kind, rank: usize, node: usize) -> HasseDiagram {
    HasseDiagram::new(Space::new(kind, rank, node).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word_digits(word: &str) -> Vec<usize> {
    word.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

/// Compares the class table of an exceptional space with a transcribed
/// table (`dim, word, a:J, Sing`). Classes are matched through the ideal of
/// the table word, so the comparison does not depend on word choice.
pub fn exceptional_table(kind: Kind, rank: usize, file: &str, budget: Duration) -> Check {
    let start = Instant::now();
    let diagram = diagram(kind, rank, rank);
    let rows = render::list_rows(&diagram).map_err(|e| e.to_string())?;
    let tsv = render::list_tsv(diagram.space(), &rows);
    let elapsed = start.elapsed();
    let table = fixture(file);
    let proper: Vec<&ListRow> = rows.iter().filter(|r| r.record.label.aj().is_some()).collect();
    ensure(proper.len() == table.len(), || format!("{} proper classes, table has {}", proper.len(), table.len()))?;
    let mut seen = BTreeSet::new();
    for fields in &table {
        let (dim, word, aj, sing) = (&fields[0], &fields[1], &fields[2], &fields[3]);
        let index = diagram.class_of_word(&word_digits(word)).map_err(|e| format!("{word}: {e}"))?;
        seen.insert(index);
        let row = &rows[index];
        let ours = tsv.lines().nth(index).unwrap();
        let cols: Vec<&str> = ours.split('\t').collect();
        ensure(cols[0] == dim, || format!("{word}: dim {} vs {dim}", cols[0]))?;
        ensure(cols[2] == aj, || format!("{word}: a:J {} vs {aj}", cols[2]))?;
        ensure(cols[3] == sing, || format!("{word}: Sing `{}` vs `{sing}`", cols[3]))?;
        ensure(row.record.dim.to_string() == *dim, || format!("{word}: record dim"))?;
    }
    ensure(seen.len() == table.len(), || "two table rows name the same class".into())?;
    ensure(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
    Ok(format!("{} rows match, {:.1} ms", table.len(), elapsed.as_secs_f64() * 1e3))
}

/// Table words that differ from the emitted canonical words.
pub fn word_mismatches(kind: Kind, rank: usize, file: &str) -> Vec<(String, String)> {
    let diagram = diagram(kind, rank, rank);
    fixture(file)
        .iter()
        .filter_map(|fields| {
            let index = diagram.class_of_word(&word_digits(&fields[1])).ok()?;
            let ours = render::format_word(diagram.classes()[index].element.word(), rank);
            (ours != fields[1]).then(|| (fields[1].clone(), ours))
        })
        .collect()
}

/// A cover edge by the labels of its endpoints.
pub type Edge = (&'static str, &'static str);

/// Transcribed cover edges whose lower end lies at or below (bottom) or at
/// or above (top) the given dimension.
pub struct EdgeWindow {
    pub dim: usize,
    pub edges: &'static [Edge],
}

pub const E6_BOTTOM: EdgeWindow =
    EdgeWindow { dim: 3, edges: &[("o", "0:5"), ("0:5", "0:4"), ("0:4", "0:23"), ("0:23", "0:12"), ("0:23", "0:3")] };
pub const E6_TOP: EdgeWindow =
    EdgeWindow { dim: 12, edges: &[("2:15", "3:35"), ("1:3", "3:35"), ("3:35", "2:4"), ("2:4", "1:2"), ("1:2", "X")] };
pub const E7_BOTTOM: EdgeWindow = EdgeWindow {
    dim: 4,
    edges: &[("o", "0:6"), ("0:6", "0:5"), ("0:5", "0:4"), ("0:4", "0:23"), ("0:23", "0:12"), ("0:23", "0:3")],
};
pub const E7_TOP: EdgeWindow = EdgeWindow {
    dim: 22,
    edges: &[("2:5", "4:25"), ("3:26", "4:25"), ("4:25", "3:4"), ("3:4", "2:3"), ("2:3", "1:1"), ("1:1", "X")],
};

/// Node and edge counts, plus the transcribed bottom and top edges.
pub fn hasse_figure(
    kind: Kind,
    rank: usize,
    nodes: usize,
    edges: usize,
    bottom: &EdgeWindow,
    top: &EdgeWindow,
) -> Check {
    let diagram = diagram(kind, rank, rank);
    ensure(diagram.len() == nodes, || format!("{} nodes, figure has {nodes}", diagram.len()))?;
    ensure(diagram.cover_edges().len() == edges, || {
        format!("{} edges, figure has {edges}", diagram.cover_edges().len())
    })?;
    let table = cominuscule::schubert::class_table(&diagram).map_err(|e| e.to_string())?;
    let label = |k: usize| table[k].label.display(kind);
    for (range, window) in [((0, bottom.dim), bottom), ((top.dim, usize::MAX), top)] {
        let ours: BTreeSet<(String, String)> = diagram
            .cover_edges()
            .iter()
            .filter(|&&(lo, _)| table[lo].dim >= range.0 && table[lo].dim <= range.1)
            .map(|&(lo, hi)| (label(lo), label(hi)))
            .collect();
        let expected: BTreeSet<(String, String)> =
            window.edges.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect();
        ensure(ours == expected, || format!("edges {ours:?}, figure {expected:?}"))?;
    }
    Ok(format!("{nodes} nodes, {edges} edges, {} transcribed edges match", bottom.edges.len() + top.edges.len()))
}

/// `α_s + … + α_t` in `A_10`.
pub fn alpha(s: usize, t: usize) -> Root {
    Root::new((1..=10).map(|k| i32::from(k >= s && k <= t)).collect())
}

/// The Gr(5,11) class with `a = 2`, `J = {2,3,6,8,10}`.
pub fn worked_example() -> Check {
    let space = Space::new(Kind::A, 10, 5).unwrap();
    let aj = AJ::new(2, [2, 3, 6, 8, 10]);
    let ctx = aj.context(&space).map_err(|e| e.to_string())?;
    let pi: BTreeSet<Root> = pi_set(&ctx).into_iter().collect();
    let expected_pi: BTreeSet<Root> = [alpha(3, 5), alpha(4, 7)].into_iter().collect();
    ensure(pi == expected_pi, || format!("Π = {pi:?}"))?;
    let set = |v: Vec<Root>| v.into_iter().collect::<BTreeSet<_>>();
    for (eps, expected) in [
        (alpha(3, 5), vec![alpha(1, 5), alpha(2, 5), alpha(3, 5), alpha(3, 6), alpha(3, 7)]),
        (alpha(4, 7), vec![alpha(3, 7), alpha(4, 7), alpha(4, 8), alpha(4, 9)]),
    ] {
        let got = set(delta_w_eps(&ctx, &eps).map_err(|e| e.to_string())?);
        ensure(got == set(expected.clone()), || format!("Δ(w,{eps}) = {got:?}"))?;
    }
    let ideal = ideal_of_aj(&space, &aj).map_err(|e| e.to_string())?;
    let report = sing_components(&space, ideal).map_err(|e| e.to_string())?;
    let got: BTreeSet<(ClassLabel, usize)> = report.components.iter().map(|c| (c.label.clone(), c.codim)).collect();
    let expected: BTreeSet<(ClassLabel, usize)> =
        [(ClassLabel::Proper(AJ::new(0, [3, 10])), 5), (ClassLabel::Proper(AJ::new(2, [2, 4, 6, 7, 10])), 4)]
            .into_iter()
            .collect();
    ensure(got == expected, || format!("components {got:?}"))?;
    Ok("Π, both Δ(w,ε) and both components match".into())
}

/// Compares `dict` output with a transcribed partition table, as sets of
/// rows (the printed table is laid out in columns).
pub fn dictionary_table(kind: Kind, n: usize, file: &str) -> Check {
    let diagram = diagram(kind, n, n);
    let rows = render::dict_rows(&diagram).map_err(|e| e.to_string())?;
    let ours: BTreeSet<String> = render::dict_tsv(&rows).lines().map(str::to_string).collect();
    let table: BTreeSet<String> = fixture(file).iter().map(|f| f.join("\t")).collect();
    ensure(ours == table, || {
        format!(
            "missing {:?}, extra {:?}",
            table.difference(&ours).collect::<Vec<_>>(),
            ours.difference(&table).collect::<Vec<_>>()
        )
    })?;
    Ok(format!("{} rows", table.len()))
}

/// The Gr(5,13) example: `a = 2`, `J = {2,3,7,9,12}` ↔ `λ = (3,4,7,11,12)`.
pub fn gr513_example() -> Check {
    use cominuscule::dict::{aj_to_partition, partition_to_aj, Flavor, Partition};
    let space = Space::new(Kind::A, 12, 5).unwrap();
    let aj = AJ::new(2, [2, 3, 7, 9, 12]);
    let lambda = aj_to_partition(&space, &aj).map_err(|e| e.to_string())?;
    ensure(lambda.to_string() == "(3,4,7,11,12)", || format!("λ = {lambda}"))?;
    let parsed = Partition::parse("(3,4,7,11,12)", Flavor::Grassmann, 12, 5).map_err(|e| e.to_string())?;
    let back = partition_to_aj(&space, &parsed).map_err(|e| e.to_string())?;
    ensure(back == ClassLabel::Proper(aj), || format!("a:J = {back:?}"))?;
    Ok("(3,4,7,11,12) ↔ 2:2,3,7,9,12".into())
}

/// Every space named by the oracle-equivalence criterion.
pub fn criterion_spaces() -> Vec<(Kind, usize, usize)> {
    let mut out = Vec::new();
    for rank in 1..=7 {
        for node in 1..=rank {
            out.push((Kind::A, rank, node));
        }
    }
    out.extend((2..=5).map(|n| (Kind::C, n, n)));
    out.extend((3..=6).map(|n| (Kind::D, n, n)));
    out.extend((2..=5).map(|n| (Kind::B, n, 1)));
    out.extend((3..=6).map(|n| (Kind::D, n, 1)));
    out.push((Kind::E6, 6, 6));
    out.push((Kind::E7, 7, 7));
    out
}

pub fn verify_all(spaces: &[(Kind, usize, usize)]) -> (Vec<VerificationReport>, Duration) {
    let start = Instant::now();
    let reports = spaces.iter().map(|&(k, r, n)| verify_space(k, r, n).unwrap()).collect();
    (reports, start.elapsed())
}

/// No violations of the named checks, and each was evaluated at least once
/// on some space of each listed kind.
pub fn checks_clean(reports: &[VerificationReport], checks: &[&str], kinds: &[&str]) -> Check {
    let mut evaluated = 0;
    for check in checks {
        let bad: Vec<String> = reports
            .iter()
            .flat_map(|r| r.violations.iter().filter(|v| v.check == *check).map(|v| v.to_string()))
            .collect();
        ensure(bad.is_empty(), || format!("{} violations of `{check}`: {}", bad.len(), bad[0]))?;
        for kind in kinds {
            let n: usize = reports
                .iter()
                .filter(|r| r.space.starts_with(kind))
                .map(|r| r.checks.get(check).copied().unwrap_or(0))
                .sum();
            ensure(n > 0, || format!("`{check}` never evaluated on {kind}"))?;
            evaluated += n;
        }
    }
    Ok(format!("{evaluated} evaluations, 0 violations"))
}

pub fn discrepancy_count(reports: &[VerificationReport]) -> usize {
    reports.iter().map(|r| r.discrepancies.len()).sum()
}
