//! Byte-stable TSV, JSON and DOT renderings of class tables, singular loci,
//! dictionaries and Hasse diagrams.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dict::{self, parity_of, quadric_dict, Flavor};
use crate::error::Result;
use crate::rootsys::{Kind, Root};
use crate::schubert::{class_table, ClassLabel, ClassRecord};
use crate::singloc::{sing_components, SingReport};
use crate::space::Space;
use crate::weyl::HasseDiagram;

/// A class table row together with its singular locus.
#[derive(Clone, Debug)]
pub struct ListRow {
    pub record: ClassRecord,
    pub sing: SingReport,
}

/// Class table plus singular loci for every class of the diagram.
pub fn list_rows(diagram: &HasseDiagram) -> Result<Vec<ListRow>> {
    let space = diagram.space();
    class_table(diagram)?
        .into_iter()
        .map(|record| {
            let sing = sing_components(space, record.ideal)?;
            Ok(ListRow { record, sing })
        })
        .collect()
}

/// Letters concatenated for ranks below 10, comma separated otherwise.
pub fn format_word(word: &[usize], rank: usize) -> String {
    let letters: Vec<String> = word.iter().map(|j| j.to_string()).collect();
    letters.join(if rank < 10 { "" } else { "," })
}

/// `dim, word, a:J, Sing`, tab separated; Sing entries are joined by `", "`. The endpoints print `-` in the
/// last two columns, and the identity also in the word column.
pub fn list_tsv(space: &Space, rows: &[ListRow]) -> String {
    let kind = space.kind();
    let mut out = String::new();
    for row in rows {
        let rec = &row.record;
        let word = if rec.word.is_empty() { "-".to_string() } else { format_word(&rec.word, space.rank()) };
        let (label, sing) = match &rec.label {
            ClassLabel::Proper(aj) => {
                let entries: Vec<String> = row.sing.components.iter().map(|c| c.label.display(kind)).collect();
                (aj.display(kind), entries.join(", "))
            }
            _ => ("-".to_string(), "-".to_string()),
        };
        writeln!(out, "{}\t{}\t{}\t{}", rec.dim, word, label, sing).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub kind: Kind,
    pub rank: usize,
    pub node: usize,
}

impl SpaceJson {
    pub fn of(space: &Space) -> Self {
        SpaceJson { kind: space.kind(), rank: space.rank(), node: space.node() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingJson {
    pub a: Option<u32>,
    #[serde(rename = "J")]
    pub marks: Vec<usize>,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub dim: usize,
    pub word: Vec<usize>,
    pub a: Option<u32>,
    #[serde(rename = "J")]
    pub marks: Vec<usize>,
    pub sing: Vec<SingJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListJson {
    pub space: SpaceJson,
    pub classes: Vec<ClassJson>,
}

fn label_parts(label: &ClassLabel) -> (Option<u32>, Vec<usize>) {
    match label {
        ClassLabel::Proper(aj) => (Some(aj.a), aj.marks().to_vec()),
        _ => (None, Vec::new()),
    }
}

pub fn list_json(space: &Space, rows: &[ListRow]) -> ListJson {
    let classes = rows
        .iter()
        .map(|row| {
            let (a, marks) = label_parts(&row.record.label);
            let sing = row
                .sing
                .components
                .iter()
                .map(|c| {
                    let (a, marks) = label_parts(&c.label);
                    SingJson { a, marks, codim: c.codim }
                })
                .collect();
            ClassJson { dim: row.record.dim, word: row.record.word.clone(), a, marks, sing }
        })
        .collect();
    ListJson { space: SpaceJson::of(space), classes }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub a: Option<u32>,
    #[serde(rename = "J")]
    pub marks: Vec<usize>,
    pub label: String,
    pub codim: usize,
    pub dim: usize,
    pub epsilon: Vec<i32>,
    pub excised: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingReportJson {
    pub space: SpaceJson,
    pub dim: usize,
    pub word: Vec<usize>,
    pub a: Option<u32>,
    #[serde(rename = "J")]
    pub marks: Vec<usize>,
    pub label: String,
    pub components: Vec<ComponentJson>,
    pub predicted_count: Option<usize>,
    pub min_codim: Option<usize>,
}

fn coeffs(r: &Root) -> Vec<i32> {
    r.coeffs().to_vec()
}

/// Roots are given as coefficient vectors over the simple roots; `ε` is the
/// positive root whose negative is the highest weight of the corresponding
/// `g_{0,0}`-submodule of `g_{-1}`.
pub fn sing_json(space: &Space, dim: usize, word: &[usize], report: &SingReport) -> SingReportJson {
    let kind = space.kind();
    let (a, marks) = label_parts(&report.label);
    let components = report
        .components
        .iter()
        .map(|c| {
            let (a, marks) = label_parts(&c.label);
            ComponentJson {
                a,
                marks,
                label: c.label.display(kind),
                codim: c.codim,
                dim: c.ideal.dim(),
                epsilon: coeffs(&c.epsilon),
                excised: c.excised.iter().map(coeffs).collect(),
            }
        })
        .collect();
    SingReportJson {
        space: SpaceJson::of(space),
        dim,
        word: word.to_vec(),
        a,
        marks,
        label: report.label.display(kind),
        components,
        predicted_count: report.predicted_count,
        min_codim: report.min_codim,
    }
}

/// One row of a dictionary table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictRow {
    pub dim: usize,
    pub label: String,
    pub a: Option<u32>,
    #[serde(rename = "J")]
    pub marks: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub geometry: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DictJson {
    pub space: SpaceJson,
    pub rows: Vec<DictRow>,
}

/// The dictionary table of a classical space: partitions (types A, C, D at
/// the last node) or quadric geometry (`B_n/P_1`, `D_n/P_1`).
pub fn dict_rows(diagram: &HasseDiagram) -> Result<Vec<DictRow>> {
    let space = diagram.space();
    let flavor = dict::flavor_of(space);
    let parity = parity_of(space);
    if flavor.is_none() && parity.is_none() {
        return Err(crate::error::Error::Dictionary(format!("{} has no dictionary", space.label())));
    }
    let n = space.rank();
    class_table(diagram)?
        .into_iter()
        .map(|rec| {
            let (a, marks) = label_parts(&rec.label);
            let mut row = DictRow {
                dim: rec.dim,
                label: rec.label.display(space.kind()),
                a,
                marks,
                partition: None,
                r: None,
                geometry: None,
            };
            if flavor.is_some() {
                row.partition = Some(dict::endpoint_partition(space, &rec.label)?.parts().to_vec());
            }
            if let (Some(Flavor::Spinor), Some(aj)) = (flavor, rec.label.aj()) {
                row.r = Some(dict::spinor_r(n, aj));
            }
            if let (Some(parity), Some(aj)) = (parity, rec.label.aj()) {
                row.geometry = Some(quadric_dict(parity, n, aj)?.geometry.to_string());
            }
            Ok(row)
        })
        .collect()
}

/// Table 3/4 layout: `λ, a:J` (plus `r` for spinor varieties); quadrics
/// print `a:J, geometry`. Endpoint labels print as `-`.
pub fn dict_tsv(rows: &[DictRow]) -> String {
    let has_r = rows.iter().any(|row| row.r.is_some());
    let mut out = String::new();
    for row in rows {
        let label = if row.a.is_some() { row.label.as_str() } else { "-" };
        let mut fields = Vec::new();
        if let Some(p) = &row.partition {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            fields.push(format!("({})", parts.join(",")));
        }
        fields.push(label.to_string());
        if has_r {
            fields.push(row.r.map_or("-".to_string(), |r| r.to_string()));
        }
        if let Some(g) = &row.geometry {
            fields.push(g.clone());
        }
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}

/// Graphviz rendering of the Hasse diagram, bottom to top by dimension.
pub fn hasse_dot(diagram: &HasseDiagram) -> Result<String> {
    let space = diagram.space();
    let table = class_table(diagram)?;
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", space.label()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for (k, rec) in table.iter().enumerate() {
        writeln!(out, "  c{k} [label=\"{}\"];", rec.label.display(space.kind())).unwrap();
    }
    let top_dim = table.last().map_or(0, |r| r.dim);
    for dim in 0..=top_dim {
        let members: Vec<String> =
            table.iter().enumerate().filter(|(_, r)| r.dim == dim).map(|(k, _)| format!("c{k};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
    }
    for &(lo, hi) in diagram.cover_edges() {
        writeln!(out, "  c{lo} -> c{hi};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// Cover edges as `lower, upper` label pairs, one per line.
pub fn hasse_tsv(diagram: &HasseDiagram) -> Result<String> {
    let kind = diagram.space().kind();
    let table = class_table(diagram)?;
    let mut out = String::new();
    for &(lo, hi) in diagram.cover_edges() {
        writeln!(out, "{}\t{}", table[lo].label.display(kind), table[hi].label.display(kind)).unwrap();
    }
    Ok(out)
}
