mod common;

use std::time::Duration;

use cominuscule::rootsys::Kind;
use common::*;

#[test]
fn cayley_plane_table_matches() {
    exceptional_table(Kind::E6, 6, "e6p6.tsv", Duration::from_secs(1)).unwrap();
}

#[test]
fn freudenthal_table_matches() {
    exceptional_table(Kind::E7, 7, "e7p7.tsv", Duration::from_secs(2)).unwrap();
}

#[test]
fn table_words_are_reproduced_byte_for_byte() {
    assert_eq!(word_mismatches(Kind::E6, 6, "e6p6.tsv"), vec![]);
    assert_eq!(word_mismatches(Kind::E7, 7, "e7p7.tsv"), vec![]);
}

#[test]
fn two_component_rows() {
    let diagram = diagram(Kind::E7, 7, 7);
    let rows = cominuscule::render::list_rows(&diagram).unwrap();
    let tsv = cominuscule::render::list_tsv(diagram.space(), &rows);
    for expected in ["15\t765432456713452\t5:1356\t1:5, 2:14", "16\t7654324567134524\t4:146\t1:5, 1:12"] {
        assert!(tsv.lines().any(|l| l == expected), "{expected}");
    }
}

#[test]
fn lagrangian_grassmannian_table_matches() {
    assert_eq!(dictionary_table(Kind::C, 5, "lg5.tsv").unwrap(), "32 rows");
}

#[test]
fn spinor_table_matches() {
    assert_eq!(dictionary_table(Kind::D, 6, "s6.tsv").unwrap(), "32 rows");
}

#[test]
fn grassmannian_partition_example() {
    gr513_example().unwrap();
}
