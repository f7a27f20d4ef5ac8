mod common;

use gemkit::torus::{audit_cycle_lengths, stated_permutation, torus_gem, torus_gem_with_budget};
use gemkit::{genus_for, regular_genus, GemError};
use num_rational::Ratio;

#[test]
fn matches_cube_geometry() {
    for n in 1..=4 {
        let (geo, orders) = common::geometric_torus(n);
        let t = torus_gem(n).unwrap();
        assert_eq!(t.graph(), &geo, "n = {n}");
        for (v, o) in orders.iter().enumerate() {
            let digits: String = o.iter().map(|&x| char::from_digit(x as u32 + 1, 10).unwrap()).collect();
            assert_eq!(t.label(v), digits);
        }
    }
}

#[test]
fn boundary_walk_is_first_last_swap() {
    let t = torus_gem(3).unwrap();
    let g = t.graph();
    for v in 0..g.num_vertices() {
        let mut u = v;
        for c in [3, 2, 1, 2, 3] {
            u = g.neighbor(c, u);
        }
        assert_eq!(g.neighbor(0, v), u);
        let (a, b) = (t.label(v), t.label(u));
        let mut swapped: Vec<char> = a.chars().collect();
        let last = swapped.len() - 1;
        swapped.swap(0, last);
        assert_eq!(b, swapped.into_iter().collect::<String>());
    }
}

#[test]
fn crystallizations_of_tori() {
    for n in 2..=5 {
        let g = torus_gem(n).unwrap();
        assert!(g.graph().is_contracted().contracted, "n = {n}");
        assert!(g.graph().is_bipartite(), "n = {n}");
        let audit = audit_cycle_lengths(&g).unwrap();
        assert!(audit.lengths_4_or_6, "n = {n}");
        // the stated pairs carry only 4-cycles from n = 4 on
        assert_eq!(audit.stated_pairs_all_4, n >= 4, "n = {n}");
    }
    assert_eq!(regular_genus(torus_gem(2).unwrap().graph()).min, Ratio::from_integer(1));
    assert_eq!(regular_genus(torus_gem(3).unwrap().graph()).min, Ratio::from_integer(3));
    let t4 = torus_gem(4).unwrap();
    assert_eq!(genus_for(t4.graph(), &stated_permutation(4).unwrap()).unwrap().rho, Ratio::from_integer(16));
}

#[test]
fn budget_errors() {
    assert_eq!(
        torus_gem_with_budget(6, 1000).unwrap_err(),
        GemError::BudgetExceeded { needed: 5040, budget: 1000 }
    );
    assert!(torus_gem(0).is_err());
}
