use proptest::prelude::*;

use cominuscule::rootsys::Kind;
use cominuscule::schubert::{aj_of, class_table, ideal_of_aj, ClassLabel, InversionIdeal, AJ};
use cominuscule::space::Space;
use cominuscule::weyl::{bruhat_leq, HasseDiagram};

fn spaces() -> impl Strategy<Value = (Kind, usize, usize)> {
    prop_oneof![
        (1usize..=8).prop_flat_map(|n| (Just(Kind::A), Just(n), 1..=n)),
        (2usize..=6).prop_map(|n| (Kind::C, n, n)),
        (3usize..=7).prop_map(|n| (Kind::D, n, n)),
        (2usize..=6).prop_map(|n| (Kind::B, n, 1)),
        (4usize..=7).prop_map(|n| (Kind::D, n, 1)),
        Just((Kind::E6, 6, 6)),
        Just((Kind::E7, 7, 7)),
    ]
}

proptest! {
    #[test]
    fn aj_literals_round_trip(a in 0u32..20, marks in prop::collection::btree_set(1usize..30, 0..8)) {
        let aj = AJ::new(a, marks.iter().copied());
        prop_assert_eq!(AJ::parse(&aj.display(Kind::A), 30).unwrap(), aj.clone());
        if marks.iter().all(|&j| j < 10) {
            prop_assert_eq!(AJ::parse(&aj.display(Kind::E7), 7).unwrap(), aj);
        }
    }

    #[test]
    fn labels_determine_classes((kind, rank, node) in spaces(), pick in any::<prop::sample::Index>()) {
        let space = Space::new(kind, rank, node).unwrap();
        let diagram = HasseDiagram::new(space.clone()).unwrap();
        let class = &diagram.classes()[pick.index(diagram.len())];
        let ideal = InversionIdeal::new(&space, class.ideal).unwrap();
        match aj_of(&space, ideal).unwrap() {
            ClassLabel::Proper(aj) => prop_assert_eq!(ideal_of_aj(&space, &aj).unwrap(), ideal),
            ClassLabel::Bottom => prop_assert!(class.ideal.is_empty()),
            ClassLabel::Top => prop_assert_eq!(class.ideal, space.full_set()),
        }
        prop_assert_eq!(diagram.class_of_word(class.element.word()).unwrap(), pick.index(diagram.len()));
    }

    #[test]
    fn covers_are_bruhat_relations((kind, rank, node) in spaces()) {
        let diagram = HasseDiagram::new(Space::new(kind, rank, node).unwrap()).unwrap();
        let table = class_table(&diagram).unwrap();
        for &(lo, hi) in diagram.cover_edges() {
            prop_assert!(bruhat_leq(diagram.classes()[lo].ideal, diagram.classes()[hi].ideal));
            prop_assert_eq!(table[lo].dim + 1, table[hi].dim);
        }
    }
}
