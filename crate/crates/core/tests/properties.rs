mod common;

use gemkit::io::{parse_gem, render_gem};
use gemkit::iso::canonical_form;
use gemkit::moves::{add_dipole, cancel_dipole, find_dipoles, DipoleSpec};
use gemkit::{
    bicolored_cycle_lengths, canonical_signature, euler_characteristic, genus_for, isomorphic, regular_genus,
    ColorSet, ColoredGraph, CyclicPermutation, LabeledGem, SignatureMode,
};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn graph(seed: u64, k: usize, half: usize) -> ColoredGraph {
    common::random_graph(&mut StdRng::seed_from_u64(seed), k, 2 * half)
}

fn perm(seed: u64, n: usize) -> Vec<usize> {
    common::random_perm(&mut StdRng::seed_from_u64(seed), n)
}

fn small_gems() -> Vec<ColoredGraph> {
    vec![
        common::order_two(5),
        gemkit::constructions::s2xs1_standard().into_graph(),
        gemkit::constructions::t3_standard().into_graph(),
        gemkit::torus::torus_gem(3).unwrap().into_graph(),
        gemkit::constructions::g1_prime().into_graph(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn union_find_matches_flood_fill(seed: u64, k in 2usize..=5, half in 1usize..=20, bits: u32) {
        let g = graph(seed, k, half);
        let cs = ColorSet::from_bits(bits & ((1 << k) - 1));
        prop_assert_eq!(g.count_components(cs), common::flood_fill_count(&g, cs));
    }

    #[test]
    fn iso_matches_brute_force(seed: u64, other: u64, k in 2usize..=4, half in 1usize..=5, free: bool) {
        let g = graph(seed, k, half);
        let h = if other % 2 == 0 {
            let p = perm(other, 2 * half);
            let s = perm(other ^ 1, k);
            g.relabel(&p).unwrap().permute_colors(&s).unwrap()
        } else {
            graph(other, k, half)
        };
        let fast = isomorphic(&g, &h, free).unwrap();
        prop_assert_eq!(fast.is_some(), common::brute_force_isomorphic(&g, &h, free));
        if let Some(iso) = fast {
            prop_assert!(iso.verify(&g, &h));
        }
    }

    #[test]
    fn chi_eps_from_cycle_lengths(seed: u64, k in 3usize..=5, half in 1usize..=12, pick: usize) {
        let g = graph(seed, k, half);
        let all = CyclicPermutation::all(k);
        let eps = &all[pick % all.len()];
        let report = genus_for(&g, eps).unwrap();
        let mut sum = 0i64;
        for (a, b) in eps.pairs() {
            let lens = bicolored_cycle_lengths(&g, a, b).unwrap();
            prop_assert_eq!(lens.iter().sum::<usize>(), g.num_vertices());
            sum += lens.len() as i64;
        }
        let n = k as i64 - 1;
        prop_assert_eq!(report.chi, sum + (1 - n) * g.num_vertices() as i64 / 2);
        prop_assert_eq!(report.rho, Ratio::from_integer(1) - Ratio::new(report.chi, 2));
    }

    #[test]
    fn genus_invariant_under_color_permutation(seed: u64, k in 3usize..=5, half in 1usize..=12, pick: usize) {
        let g = graph(seed, k, half);
        let sigma = perm(seed.rotate_left(7), k);
        let h = g.permute_colors(&sigma).unwrap();
        prop_assert_eq!(regular_genus(&g).min, regular_genus(&h).min);
        let all = CyclicPermutation::all(k);
        let eps = &all[pick % all.len()];
        let moved = eps.map_colors(&sigma).unwrap();
        prop_assert_eq!(genus_for(&g, eps).unwrap().rho, genus_for(&h, &moved).unwrap().rho);
    }

    #[test]
    fn invariants_ignore_vertex_labels(seed: u64, k in 2usize..=5, half in 1usize..=15) {
        let g = graph(seed, k, half);
        let h = g.relabel(&perm(!seed, g.num_vertices())).unwrap();
        prop_assert_eq!(g.face_counts(), h.face_counts());
        prop_assert_eq!(regular_genus(&g).min, regular_genus(&h).min);
        prop_assert_eq!(g.is_bipartite(), h.is_bipartite());
        for mode in [SignatureMode::FixedColors, SignatureMode::UpToColorPermutation] {
            prop_assert_eq!(canonical_signature(&g, mode), canonical_signature(&h, mode));
            prop_assert_eq!(canonical_form(&g, mode), canonical_form(&h, mode));
        }
    }

    #[test]
    fn dipole_round_trip(which in 0usize..5, seed: u64, at: usize, h_pick: usize) {
        let g = &small_gems()[which];
        let n = g.dimension();
        let h = 1 + h_pick % n;
        let colors: ColorSet = perm(seed, n + 1)[..h].iter().copied().collect();
        let big = add_dipole(g, at % g.num_vertices(), colors).unwrap();
        prop_assert_eq!(euler_characteristic(&big), euler_characteristic(g));
        prop_assert_eq!(big.is_bipartite(), g.is_bipartite());
        if (2..n).contains(&h) {
            prop_assert_eq!(big.is_contracted().contracted, g.is_contracted().contracted);
        }
        let v = g.num_vertices();
        prop_assert!(find_dipoles(&big, h).iter().any(|d| (d.v1, d.v2) == (v, v + 1)));
        let back = cancel_dipole(&big, &DipoleSpec { v1: v, v2: v + 1, colors }).unwrap();
        prop_assert_eq!(&back.graph, g);
    }

    #[test]
    fn gem_text_round_trip(seed: u64, k in 2usize..=6, half in 1usize..=10, labeled: bool) {
        let g = graph(seed, k, half);
        let gem = if labeled {
            let labels = (0..g.num_vertices()).map(|v| format!("x{}", v * 7 % 101)).collect();
            LabeledGem::new(g, labels).unwrap()
        } else {
            LabeledGem::unlabeled(g)
        };
        let back = parse_gem(&render_gem(&gem)).unwrap();
        prop_assert_eq!(back.graph(), gem.graph());
        prop_assert_eq!(back.labels(), gem.labels());
    }
}
