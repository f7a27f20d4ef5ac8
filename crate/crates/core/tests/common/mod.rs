#![allow(dead_code)]

use std::collections::VecDeque;

use gemkit::constructions::{g1_prime, g1_prime_figure, g2_prime, g2_prime_figure, product_gem, s2xs1_standard, t3_standard};
use gemkit::small_covers::{listed_function, reduced_cover, small_cover_gem};
use gemkit::torus::torus_gem;
use gemkit::{ColorSet, ColoredGraph, LabeledGem};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn order_two(k: usize) -> ColoredGraph {
    ColoredGraph::from_pairs(k, &vec![vec![(0, 1)]; k]).unwrap()
}

/// Every named graph, with a short name.
pub fn catalogue() -> Vec<(String, LabeledGem)> {
    let mut out = vec![
        ("order-two".to_string(), LabeledGem::unlabeled(order_two(5))),
        ("s2xs1".into(), s2xs1_standard()),
        ("t3".into(), t3_standard()),
        ("g1".into(), product_gem(&s2xs1_standard()).unwrap()),
        ("g2".into(), product_gem(&t3_standard()).unwrap()),
        ("g1prime".into(), g1_prime()),
        ("g1prime-fig".into(), g1_prime_figure()),
        ("g2prime".into(), g2_prime()),
        ("g2prime-fig".into(), g2_prime_figure()),
    ];
    for n in 2..=4 {
        out.push((format!("torus{n}"), torus_gem(n).unwrap()));
    }
    for i in 1..=7 {
        out.push((format!("cover{i}"), small_cover_gem(&listed_function(i).unwrap()).unwrap()));
        out.push((format!("cover{i}-reduced"), reduced_cover(i).unwrap().gem));
    }
    out
}

/// Component count by breadth-first flood fill over an adjacency list.
pub fn flood_fill_count(g: &ColoredGraph, colors: ColorSet) -> usize {
    let v = g.num_vertices();
    let mut adj = vec![Vec::new(); v];
    for (c, a, b) in g.edges() {
        if colors.contains(c) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; v];
    let mut count = 0;
    for s in 0..v {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    count
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A random graph: each color an independent random perfect matching.
pub fn random_graph<R: Rng>(rng: &mut R, k: usize, v: usize) -> ColoredGraph {
    let pairs: Vec<Vec<(usize, usize)>> = (0..k)
        .map(|_| {
            let p = random_perm(rng, v);
            p.chunks(2).map(|c| (c[0], c[1])).collect()
        })
        .collect();
    ColoredGraph::from_pairs(k, &pairs).unwrap()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    gemkit::torus::perms_lex(n)
        .into_iter()
        .map(|p| p.into_iter().map(usize::from).collect())
        .collect()
}

/// Exhaustive search over vertex bijections (and color bijections when
/// allowed), extending partial maps in vertex order.
pub fn brute_force_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph, allow_color_perm: bool) -> bool {
    if g1.n_colors() != g2.n_colors() || g1.num_vertices() != g2.num_vertices() {
        return false;
    }
    let k = g1.n_colors();
    let sigmas = if allow_color_perm { all_perms(k) } else { vec![(0..k).collect()] };
    let v = g1.num_vertices();
    fn extend(
        g1: &ColoredGraph,
        g2: &ColoredGraph,
        sigma: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let x = map.len();
        if x == g1.num_vertices() {
            return true;
        }
        for y in 0..g2.num_vertices() {
            if used[y] {
                continue;
            }
            // edges back into the mapped prefix must land on the right images
            let ok = (0..g1.n_colors()).all(|c| {
                let w = g1.neighbor(c, x);
                w > x || g2.neighbor(sigma[c], y) == map[w]
            });
            if !ok {
                continue;
            }
            map.push(y);
            used[y] = true;
            if extend(g1, g2, sigma, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    sigmas.iter().any(|sigma| {
        let mut map = Vec::with_capacity(v);
        let mut used = vec![false; v];
        extend(g1, g2, sigma, &mut map, &mut used)
    })
}

/// Isomorphism by propagation: in each component, try every image of one
/// vertex and follow colored edges.
pub fn propagation_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph, allow_color_perm: bool) -> bool {
    if g1.n_colors() != g2.n_colors() || g1.num_vertices() != g2.num_vertices() {
        return false;
    }
    let k = g1.n_colors();
    if !g1.is_connected() || !g2.is_connected() {
        return brute_force_isomorphic(g1, g2, allow_color_perm);
    }
    let sigmas = if allow_color_perm { all_perms(k) } else { vec![(0..k).collect()] };
    let v = g1.num_vertices();
    sigmas.iter().any(|sigma| {
        (0..v).any(|target| {
            let mut map = vec![usize::MAX; v];
            let mut back = vec![usize::MAX; v];
            map[0] = target;
            back[target] = 0;
            let mut q = VecDeque::from([0usize]);
            while let Some(x) = q.pop_front() {
                for c in 0..k {
                    let (w, z) = (g1.neighbor(c, x), g2.neighbor(sigma[c], map[x]));
                    if map[w] == usize::MAX {
                        if back[z] != usize::MAX {
                            return false;
                        }
                        map[w] = z;
                        back[z] = w;
                        q.push_back(w);
                    } else if map[w] != z {
                        return false;
                    }
                }
            }
            true
        })
    })
}

/// The n-torus gem built literally from cube geometry: simplices are monotone
/// vertex chains of {0,1}^{n+1}, facets are matched by vertex sets, and the
/// boundary facets (color 0) are glued by walking colors n, …, 1, …, n.
/// Returns the graph and, per vertex, the chain's step order.
pub fn geometric_torus(n: usize) -> (ColoredGraph, Vec<Vec<usize>>) {
    let dim = n + 1;
    let orders = all_perms(dim);
    let chains: Vec<Vec<u32>> = orders
        .iter()
        .map(|o| {
            let mut pts = vec![0u32];
            for &axis in o {
                pts.push(pts.last().unwrap() | 1 << axis);
            }
            pts.pop(); // drop the top corner: a simplex of its link
            pts
        })
        .collect();
    let v = chains.len();
    let mut inv = vec![vec![usize::MAX; v]; dim];
    // colors 1..n: the facet without the point of weight c
    for c in 1..dim {
        for a in 0..v {
            let face: Vec<u32> = chains[a].iter().copied().filter(|p| p.count_ones() != c as u32).collect();
            for b in 0..v {
                if b != a {
                    let other: Vec<u32> = chains[b].iter().copied().filter(|p| p.count_ones() != c as u32).collect();
                    if other == face {
                        inv[c][a] = b;
                    }
                }
            }
        }
    }
    // color 0 by the walk n, n-1, ..., 1, ..., n
    let mut walk: Vec<usize> = (1..=n).rev().collect();
    walk.extend(2..=n);
    for a in 0..v {
        let mut u = a;
        for &c in &walk {
            u = inv[c][u];
        }
        inv[0][a] = u;
    }
    (ColoredGraph::from_involutions(inv).unwrap(), orders)
}
