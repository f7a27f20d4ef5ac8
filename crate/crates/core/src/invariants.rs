//! Regular genus, Euler characteristic, the genus lower bound and the
//! weak semi-simple test.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{GemError, Result};
use crate::graph::{ColorSet, ColoredGraph};

/// A cyclic order of all colors, up to rotation and reflection.
/// Stored with `seq[0] == 0` and `seq[1] < seq[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicPermutation {
    seq: Vec<usize>,
}

impl CyclicPermutation {
    pub fn new(seq: &[usize]) -> Result<Self> {
        crate::graph::check_permutation(seq, seq.len())?;
        if seq.len() < 2 {
            return Err(GemError::InvalidPermutation(format!("{seq:?}")));
        }
        let k = seq.len();
        let start = seq.iter().position(|&c| c == 0).unwrap();
        let mut rot: Vec<usize> = (0..k).map(|i| seq[(start + i) % k]).collect();
        if rot[1] > rot[k - 1] {
            rot[1..].reverse();
        }
        Ok(Self { seq: rot })
    }

    /// Every canonical cyclic permutation of `0..n_colors`, in lexicographic order.
    pub fn all(n_colors: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (1..n_colors).collect();
        permutations(&mut rest, 0, &mut |p| {
            if p.len() < 2 || p[0] < p[p.len() - 1] {
                let mut seq = vec![0];
                seq.extend_from_slice(p);
                out.push(Self { seq });
            }
        });
        out.sort();
        out
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn n_colors(&self) -> usize {
        self.seq.len()
    }

    /// The consecutive pairs (ε_i, ε_{i+1}), cyclically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.seq.len();
        (0..k).map(move |i| (self.seq[i], self.seq[(i + 1) % k]))
    }

    /// Applies a color relabeling: color c becomes `sigma[c]`.
    pub fn map_colors(&self, sigma: &[usize]) -> Result<Self> {
        let seq: Vec<usize> = self.seq.iter().map(|&c| sigma[c]).collect();
        Self::new(&seq)
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.seq.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

impl fmt::Debug for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CyclicPermutation {
    type Err = GemError;

    /// Accepts `0,2,4,1,3` or `(0,2,4,1,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let seq = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| GemError::InvalidPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&seq)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub permutation: CyclicPermutation,
    /// g_{ε_i ε_{i+1}} for i = 0..=n.
    pub pair_counts: Vec<usize>,
    pub chi: i64,
    pub rho: Ratio<i64>,
}

impl GenusReport {
    fn from_counts(permutation: CyclicPermutation, pair_counts: Vec<usize>, v: usize) -> Self {
        let n = permutation.n_colors() as i64 - 1;
        let sum: i64 = pair_counts.iter().map(|&g| g as i64).sum();
        let chi = sum + (1 - n) * v as i64 / 2;
        let rho = Ratio::from_integer(1) - Ratio::new(chi, 2);
        Self {
            permutation,
            pair_counts,
            chi,
            rho,
        }
    }

    pub fn rho_integer(&self) -> Option<i64> {
        self.rho.is_integer().then(|| self.rho.to_integer())
    }

    /// The genus, for a graph the caller knows to be a gem of a closed manifold.
    pub fn manifold_genus(&self) -> Result<i64> {
        match self.rho_integer() {
            Some(r) if r >= 0 => Ok(r),
            _ => Err(GemError::PreconditionFailed(format!(
                "rho = {} is not a non-negative integer",
                self.rho
            ))),
        }
    }
}

/// Table of g_{ij} over all color pairs.
pub fn pair_count_table(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let k = g.n_colors();
    let mut t = vec![vec![0; k]; k];
    for i in 0..k {
        t[i][i] = g.count_components(ColorSet::single(i));
        for j in i + 1..k {
            let c = g.count_components([i, j].into_iter().collect());
            t[i][j] = c;
            t[j][i] = c;
        }
    }
    t
}

fn check_perm_colors(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<()> {
    if eps.n_colors() != g.n_colors() {
        return Err(GemError::PermutationColorMismatch {
            expected: g.n_colors(),
            found: eps.n_colors(),
        });
    }
    Ok(())
}

pub fn genus_for(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<GenusReport> {
    check_perm_colors(g, eps)?;
    let counts = eps
        .pairs()
        .map(|(a, b)| g.count_components([a, b].into_iter().collect()))
        .collect();
    Ok(GenusReport::from_counts(eps.clone(), counts, g.num_vertices()))
}

#[derive(Clone, Debug)]
pub struct RegularGenus {
    pub min: Ratio<i64>,
    /// Minimizing permutations in lexicographic order.
    pub argmin: Vec<CyclicPermutation>,
    /// One report per canonical permutation, in lexicographic order.
    pub reports: Vec<GenusReport>,
}

/// Exhaustive minimum of ρ_ε over all cyclic permutations.
pub fn regular_genus(g: &ColoredGraph) -> RegularGenus {
    let table = pair_count_table(g);
    let reports: Vec<GenusReport> = CyclicPermutation::all(g.n_colors())
        .into_iter()
        .map(|eps| {
            let counts = eps.pairs().map(|(a, b)| table[a][b]).collect();
            GenusReport::from_counts(eps, counts, g.num_vertices())
        })
        .collect();
    let min = reports.iter().map(|r| r.rho).min().expect("at least one permutation");
    let argmin = reports
        .iter()
        .filter(|r| r.rho == min)
        .map(|r| r.permutation.clone())
        .collect();
    RegularGenus {
        min,
        argmin,
        reports,
    }
}

pub fn euler_characteristic(g: &ColoredGraph) -> i64 {
    g.face_counts()
        .iter()
        .enumerate()
        .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// The lower bound 2χ + 5m − 4 on the regular genus of a closed 4-manifold
/// with Euler characteristic χ and fundamental group of rank m.
pub fn genus_lower_bound(chi: i64, m: u32) -> i64 {
    2 * chi + 5 * m as i64 - 4
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakSemiSimple {
    pub holds: bool,
    /// g of {ε_i, ε_{i+2}, ε_{i+4}} for i = 0..5; the tested family.
    pub triple_counts: Vec<usize>,
    /// g of {ε_i, ε_{i+1}, ε_{i+2}} for i = 0..5; reported only.
    pub consecutive_counts: Vec<usize>,
}

/// Weak semi-simplicity of a 4-dimensional crystallization with respect to ε.
///
/// The tested triples are {ε_i, ε_{i+2}, ε_{i+4}}. For these, the identity
/// ρ_ε = 2χ − 4 + Σ_i (g_{ε_i ε_{i+2} ε_{i+4}} − 1) holds on crystallizations,
/// so all five counts equal m+1 exactly when ρ_ε meets the 2χ+5m−4 bound.
pub fn is_weak_semi_simple(g: &ColoredGraph, eps: &CyclicPermutation, m: u32) -> Result<WeakSemiSimple> {
    if g.dimension() != 4 {
        return Err(GemError::DimensionUnsupported(g.dimension()));
    }
    check_perm_colors(g, eps)?;
    let e = eps.as_slice();
    let triple = |step: usize| -> Vec<usize> {
        (0..5)
            .map(|i| {
                let set: ColorSet = (0..3).map(|t| e[(i + t * step) % 5]).collect();
                g.count_components(set)
            })
            .collect()
    };
    let triple_counts = triple(2);
    let consecutive_counts = triple(1);
    Ok(WeakSemiSimple {
        holds: triple_counts.iter().all(|&c| c == m as usize + 1),
        triple_counts,
        consecutive_counts,
    })
}

/// Lengths of all {i,j}-colored cycles, ascending.
pub fn bicolored_cycle_lengths(g: &ColoredGraph, i: usize, j: usize) -> Result<Vec<usize>> {
    g.check_colors([i, j].into_iter().collect())?;
    if i == j {
        return Err(GemError::PreconditionFailed(format!("colors {i} and {j} coincide")));
    }
    let v = g.num_vertices();
    let mut seen = vec![false; v];
    let mut lengths = Vec::new();
    for s in 0..v {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut u = s;
        loop {
            seen[u] = true;
            let w = g.neighbor(i, u);
            seen[w] = true;
            len += 2;
            u = g.neighbor(j, w);
            if u == s {
                break;
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_two(k: usize) -> ColoredGraph {
        ColoredGraph::from_pairs(k, &vec![vec![(0, 1)]; k]).unwrap()
    }

    #[test]
    fn canonical_counts() {
        assert_eq!(CyclicPermutation::all(2).len(), 1);
        assert_eq!(CyclicPermutation::all(3).len(), 1);
        assert_eq!(CyclicPermutation::all(4).len(), 3);
        assert_eq!(CyclicPermutation::all(5).len(), 12);
        assert_eq!(CyclicPermutation::all(6).len(), 60);
        assert_eq!(CyclicPermutation::all(7).len(), 360);
    }

    #[test]
    fn normalizes_rotation_and_reflection() {
        let a = CyclicPermutation::new(&[2, 4, 1, 3, 0]).unwrap();
        let b = CyclicPermutation::new(&[3, 1, 4, 2, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(0,2,4,1,3)");
        assert_eq!("(0,3,1,4,2)".parse::<CyclicPermutation>().unwrap(), a);
        assert!("0,1,1".parse::<CyclicPermutation>().is_err());
    }

    #[test]
    fn order_two_genus_zero() {
        let g = order_two(5);
        for eps in CyclicPermutation::all(5) {
            let r = genus_for(&g, &eps).unwrap();
            assert_eq!(r.chi, 2);
            assert_eq!(r.manifold_genus(), Ok(0));
        }
        assert_eq!(euler_characteristic(&g), 2);
        let w = is_weak_semi_simple(&g, &CyclicPermutation::all(5)[0], 0).unwrap();
        assert!(w.holds);
        assert_eq!(bicolored_cycle_lengths(&g, 0, 1).unwrap(), vec![2]);
    }

    #[test]
    fn mismatched_permutation() {
        let g = order_two(4);
        let eps = CyclicPermutation::all(5)[0].clone();
        assert_eq!(
            genus_for(&g, &eps),
            Err(GemError::PermutationColorMismatch { expected: 4, found: 5 })
        );
        assert_eq!(
            is_weak_semi_simple(&g, &CyclicPermutation::all(4)[0], 0),
            Err(GemError::DimensionUnsupported(3))
        );
    }

    #[test]
    fn bound_values() {
        assert_eq!(genus_lower_bound(0, 2), 6);
        assert_eq!(genus_lower_bound(0, 4), 16);
        assert_eq!(genus_lower_bound(1, 2), 8);
    }
}
