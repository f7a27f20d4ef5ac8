use gemkit::small_covers::{
    compact_form, cover_label, enumerate_characteristic_functions, listed_function, printed_tables,
    reduce_to_crystallization, reduced_cover, s1_figure, small_cover_gem, subgraph_s, CharacteristicFunction,
    PolytopeP,
};
use gemkit::{canonical_signature, isomorphic, GemError, SignatureMode};

#[test]
fn s1_drawing_matches_generated_gem() {
    let gem = small_cover_gem(&listed_function(1).unwrap()).unwrap();
    let s = subgraph_s(&gem).unwrap();
    assert_eq!(s.graph().num_vertices(), 64);
    assert!(s.same_edges_by_label(&s1_figure()));
}

#[test]
fn subgraphs_s_agree_across_covers() {
    let first = subgraph_s(&small_cover_gem(&listed_function(1).unwrap()).unwrap()).unwrap();
    let sig = canonical_signature(first.graph(), SignatureMode::FixedColors);
    for i in 2..=7 {
        let s = subgraph_s(&small_cover_gem(&listed_function(i).unwrap()).unwrap()).unwrap();
        assert_eq!(canonical_signature(s.graph(), SignatureMode::FixedColors), sig, "λ{i}");
    }
}

#[test]
fn compact_forms_match_printed_tables() {
    let tables = printed_tables();
    assert_eq!(tables.len(), 7);
    for i in 1..=7 {
        let l = listed_function(i).unwrap();
        let cf = compact_form(&small_cover_gem(&l).unwrap(), &l).unwrap();
        assert_eq!(cf.index, i);
        assert_eq!(cf.table, tables[i - 1]);
        assert_eq!(cf.row_sets.len(), 4);
        assert_eq!(cf.column_sets.len(), 4);
    }
}

#[test]
fn compact_form_rejects_wrong_function() {
    let gem = small_cover_gem(&listed_function(1).unwrap()).unwrap();
    let other = listed_function(3).unwrap();
    assert!(matches!(compact_form(&gem, &other), Err(GemError::PreconditionFailed(_))));
}

#[test]
fn reduction_moves_replay() {
    let l = listed_function(4).unwrap();
    let gem = small_cover_gem(&l).unwrap();
    let red = reduce_to_crystallization(&gem, &compact_form(&gem, &l).unwrap()).unwrap();
    assert_eq!(red.moves.len(), 4);
    let mut cur = gem;
    for m in &red.moves {
        cur = m.apply(&cur).unwrap();
    }
    assert!(cur.same_edges_by_label(&red.gem));
    assert!(red.gem.vertex(&cover_label(0, 1)).is_err());
}

#[test]
fn reduced_covers_are_distinct_from_fixed_color_pairs() {
    let a = reduced_cover(1).unwrap().gem;
    for i in 2..=7 {
        let b = reduced_cover(i).unwrap().gem;
        assert!(isomorphic(a.graph(), b.graph(), true).unwrap().is_none(), "Γ1′ ≅ Γ{i}′");
    }
}

#[test]
fn enumeration_is_exhaustive_and_valid() {
    let fs = enumerate_characteristic_functions();
    for (i, f) in fs.iter().enumerate() {
        assert_eq!(*f, listed_function(i + 1).unwrap());
        assert_eq!(&f.values()[..4], &[1, 2, 4, 8]);
    }
    assert!(PolytopeP::new().is_simple());
    assert!(matches!(listed_function(8), Err(GemError::PreconditionFailed(_)) | Err(GemError::InvalidCharacteristicFunction(_))));
    assert!(CharacteristicFunction::new([1, 1, 4, 8, 3, 12]).is_err());
}
