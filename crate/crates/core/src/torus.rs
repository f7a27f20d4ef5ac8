//! Crystallizations of the n-torus from the staircase triangulation of the
//! (n+1)-cube.
//!
//! Top simplices of the cube are monotone lattice paths, one per permutation
//! of the coordinates. Deleting the final vertex leaves a simplex of the link
//! whose vertex of color k is the point reached after k steps. The k-colored facet for
//! 1 ≤ k ≤ n is shared with the path that swaps steps k and k+1; the
//! 0-colored facets lie on the cube boundary and are glued by the walk
//! n, n−1, …, 1, …, n, which amounts to swapping the first and last step.

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::invariants::{bicolored_cycle_lengths, CyclicPermutation};
use crate::labels::LabeledGem;

pub const DEFAULT_BUDGET: usize = 40320;

/// Lexicographic rank of a permutation of `0..len`.
pub fn perm_rank(p: &[u8]) -> usize {
    let mut rank = 0;
    for i in 0..p.len() {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (p.len() - i) + smaller;
    }
    rank
}

/// All permutations of `0..len` in lexicographic order.
pub fn perms_lex(len: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..len as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..len.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..len).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

pub fn torus_gem(n: usize) -> Result<LabeledGem> {
    torus_gem_with_budget(n, DEFAULT_BUDGET)
}

/// The torus gem with `(n+1)!` vertices, refusing sizes above `budget`.
pub fn torus_gem_with_budget(n: usize, budget: usize) -> Result<LabeledGem> {
    if n == 0 {
        return Err(GemError::PreconditionFailed("dimension must be at least 1".into()));
    }
    let needed = (1..=n + 1).try_fold(1usize, |acc, k| acc.checked_mul(k));
    match needed {
        Some(v) if v <= budget && n < 20 => {}
        _ => {
            return Err(GemError::BudgetExceeded {
                needed: needed.unwrap_or(usize::MAX),
                budget,
            })
        }
    }
    let perms = perms_lex(n + 1);
    let mut inv = vec![vec![0; perms.len()]; n + 1];
    let mut q = vec![0u8; n + 1];
    for (v, p) in perms.iter().enumerate() {
        for (c, row) in inv.iter_mut().enumerate() {
            q.copy_from_slice(p);
            if c == 0 {
                q.swap(0, n);
            } else {
                q.swap(c - 1, c);
            }
            row[v] = perm_rank(&q);
        }
    }
    let labels = perms
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| char::from_digit(x as u32 + 1, 36).unwrap())
                .collect()
        })
        .collect();
    LabeledGem::new(ColoredGraph::from_involutions(inv)?, labels)
}

/// The cyclic permutation at which every consecutive pair gives 4-cycles:
/// (0,2,…,n,1,3,…,n−1) for even n, (0,2,…,n−1,1,n,n−2,…,3) for odd n.
pub fn stated_permutation(n: usize) -> Result<CyclicPermutation> {
    let mut seq: Vec<usize> = (0..=n).step_by(2).collect();
    if n.is_multiple_of(2) {
        seq.extend((1..n).step_by(2));
    } else {
        seq.push(1);
        seq.extend((3..=n).rev().step_by(2));
    }
    CyclicPermutation::new(&seq)
}

/// 1 + (n+1)!(n−3)/8, the genus at the stated permutation for n ≥ 4.
pub fn conjectured_genus(n: usize) -> Option<i64> {
    if n < 4 {
        return None;
    }
    let f: i64 = (1..=n as i64 + 1).product();
    Some(1 + f * (n as i64 - 3) / 8)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleAudit {
    /// Every bicolored cycle has length 4 or 6.
    pub lengths_4_or_6: bool,
    /// Every consecutive pair of the stated permutation gives only 4-cycles.
    pub stated_pairs_all_4: bool,
}

impl CycleAudit {
    pub fn passed(&self) -> bool {
        self.lengths_4_or_6 && self.stated_pairs_all_4
    }
}

pub fn audit_cycle_lengths(gem: &LabeledGem) -> Result<CycleAudit> {
    let g = gem.graph();
    let k = g.n_colors();
    let mut lengths_4_or_6 = true;
    for i in 0..k {
        for j in i + 1..k {
            lengths_4_or_6 &= bicolored_cycle_lengths(g, i, j)?
                .iter()
                .all(|&l| l == 4 || l == 6);
        }
    }
    let eps = stated_permutation(g.dimension())?;
    let mut stated_pairs_all_4 = true;
    for (a, b) in eps.pairs() {
        stated_pairs_all_4 &= bicolored_cycle_lengths(g, a, b)?.iter().all(|&l| l == 4);
    }
    Ok(CycleAudit {
        lengths_4_or_6,
        stated_pairs_all_4,
    })
}
