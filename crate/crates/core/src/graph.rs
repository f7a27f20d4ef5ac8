//! Edge-colored regular multigraphs stored as one involution per color.

use std::fmt;

use crate::dsu::UnionFind;
use crate::error::{GemError, Result};

pub const MAX_COLORS: usize = 32;

/// A subset of the color set, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const fn empty() -> Self {
        ColorSet(0)
    }

    /// All colors `0..n_colors`.
    pub fn full(n_colors: usize) -> Self {
        debug_assert!(n_colors <= MAX_COLORS);
        if n_colors == 32 {
            ColorSet(u32::MAX)
        } else {
            ColorSet((1u32 << n_colors) - 1)
        }
    }

    pub fn single(c: usize) -> Self {
        ColorSet(1 << c)
    }

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, c: usize) -> bool {
        c < MAX_COLORS && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: usize) {
        self.0 |= 1 << c;
    }

    pub fn without(self, c: usize) -> Self {
        ColorSet(self.0 & !(1 << c))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Complement inside `0..n_colors`.
    pub fn complement(self, n_colors: usize) -> Self {
        ColorSet(Self::full(n_colors).0 & !self.0)
    }

    pub fn max_color(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_COLORS).filter(move |&c| self.contains(c))
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Connected components of a restricted graph. Ids are dense and ordered by
/// the smallest vertex in each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub ids: Vec<usize>,
    pub count: usize,
}

impl ComponentLabeling {
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.ids[a] == self.ids[b]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionReport {
    pub contracted: bool,
    /// `counts[j]` is the number of components after deleting color j.
    pub counts: Vec<usize>,
}

/// An (n+1)-regular, properly edge-colored, loopless multigraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    inv: Vec<Vec<usize>>,
}

/// Builds a graph from one pair list per color.
pub fn new_graph(n_colors: usize, pairs_per_color: &[Vec<(usize, usize)>]) -> Result<ColoredGraph> {
    ColoredGraph::from_pairs(n_colors, pairs_per_color)
}

impl ColoredGraph {
    pub fn from_pairs(n_colors: usize, pairs_per_color: &[Vec<(usize, usize)>]) -> Result<Self> {
        if pairs_per_color.len() != n_colors {
            return Err(GemError::ColorCountMismatch {
                left: n_colors,
                right: pairs_per_color.len(),
            });
        }
        let num_vertices = pairs_per_color.first().map_or(0, |p| 2 * p.len());
        let mut inv = vec![vec![usize::MAX; num_vertices]; n_colors];
        for (c, pairs) in pairs_per_color.iter().enumerate() {
            for &(a, b) in pairs {
                for v in [a, b] {
                    if v >= num_vertices {
                        return Err(GemError::VertexCountMismatch {
                            color: c,
                            expected: num_vertices,
                            found: v + 1,
                        });
                    }
                }
                if a == b {
                    return Err(GemError::LoopEdge { color: c, vertex: a });
                }
                for v in [a, b] {
                    if inv[c][v] != usize::MAX {
                        return Err(GemError::DuplicateVertexInColor { color: c, vertex: v });
                    }
                }
                inv[c][a] = b;
                inv[c][b] = a;
            }
            let found = inv[c].iter().filter(|&&w| w != usize::MAX).count();
            if found != num_vertices {
                return Err(GemError::VertexCountMismatch {
                    color: c,
                    expected: num_vertices,
                    found,
                });
            }
        }
        Self::from_involutions(inv)
    }

    /// Validates and wraps raw involutions, `inv[c][v]` being the c-neighbor of v.
    pub fn from_involutions(inv: Vec<Vec<usize>>) -> Result<Self> {
        let n_colors = inv.len();
        let num_vertices = inv.first().map_or(0, Vec::len);
        if n_colors < 2 || num_vertices < 2 {
            return Err(GemError::TooSmall {
                colors: n_colors,
                vertices: num_vertices,
            });
        }
        if n_colors > MAX_COLORS {
            return Err(GemError::ColorOutOfRange {
                color: n_colors - 1,
                n_colors: MAX_COLORS,
            });
        }
        if num_vertices % 2 == 1 {
            return Err(GemError::OddVertexCount(num_vertices));
        }
        for (c, row) in inv.iter().enumerate() {
            if row.len() != num_vertices {
                return Err(GemError::VertexCountMismatch {
                    color: c,
                    expected: num_vertices,
                    found: row.len(),
                });
            }
            for (v, &w) in row.iter().enumerate() {
                if w >= num_vertices {
                    return Err(GemError::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
                if w == v {
                    return Err(GemError::LoopEdge { color: c, vertex: v });
                }
                if row[w] != v {
                    return Err(GemError::DuplicateVertexInColor { color: c, vertex: w });
                }
            }
        }
        Ok(Self { inv })
    }

    pub fn n_colors(&self) -> usize {
        self.inv.len()
    }

    /// The dimension n of the encoded manifold (colors are 0..=n).
    pub fn dimension(&self) -> usize {
        self.inv.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.inv[0].len()
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.n_colors())
    }

    #[inline]
    pub fn neighbor(&self, c: usize, v: usize) -> usize {
        self.inv[c][v]
    }

    pub fn involution(&self, c: usize) -> &[usize] {
        &self.inv[c]
    }

    pub fn involutions(&self) -> &[Vec<usize>] {
        &self.inv
    }

    /// Edges as `(color, a, b)` with `a < b`, colors ascending then by `a`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.inv.iter().enumerate().flat_map(|(c, row)| {
            row.iter()
                .enumerate()
                .filter(|(v, &w)| *v < w)
                .map(move |(v, &w)| (c, v, w))
        })
    }

    /// Colors of the edges joining `a` and `b`.
    pub fn colors_between(&self, a: usize, b: usize) -> ColorSet {
        (0..self.n_colors()).filter(|&c| self.inv[c][a] == b).collect()
    }

    pub fn check_colors(&self, colors: ColorSet) -> Result<()> {
        match colors.max_color() {
            Some(c) if c >= self.n_colors() => Err(GemError::ColorOutOfRange {
                color: c,
                n_colors: self.n_colors(),
            }),
            _ => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(GemError::VertexOutOfRange {
                vertex: v,
                num_vertices: self.num_vertices(),
            })
        }
    }

    /// Components of the spanning subgraph on the given colors.
    pub fn restrict(&self, colors: ColorSet) -> Result<ComponentLabeling> {
        self.check_colors(colors)?;
        let v = self.num_vertices();
        let mut uf = UnionFind::new(v);
        for c in colors.iter() {
            for (a, &b) in self.inv[c].iter().enumerate() {
                if a < b {
                    uf.union(a, b);
                }
            }
        }
        let mut root_id = vec![usize::MAX; v];
        let mut ids = Vec::with_capacity(v);
        let mut count = 0;
        for x in 0..v {
            let r = uf.find(x);
            if root_id[r] == usize::MAX {
                root_id[r] = count;
                count += 1;
            }
            ids.push(root_id[r]);
        }
        Ok(ComponentLabeling { ids, count })
    }

    /// g_C, the number of components of the subgraph on colors C.
    pub fn count_components(&self, colors: ColorSet) -> usize {
        let mut uf = UnionFind::new(self.num_vertices());
        for c in colors.iter().filter(|&c| c < self.n_colors()) {
            for (a, &b) in self.inv[c].iter().enumerate() {
                if a < b {
                    uf.union(a, b);
                }
            }
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.count_components(self.all_colors()) == 1
    }

    pub fn is_contracted(&self) -> ContractionReport {
        let all = self.all_colors();
        let counts: Vec<usize> = (0..self.n_colors())
            .map(|j| self.count_components(all.without(j)))
            .collect();
        ContractionReport {
            contracted: counts.iter().all(|&g| g == 1),
            counts,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A proper 2-coloring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let v = self.num_vertices();
        let mut side: Vec<Option<bool>> = vec![None; v];
        let mut stack = Vec::new();
        for s in 0..v {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for row in &self.inv {
                    let w = row[u];
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Number of k-simplices of the dual complex for k = 0..=n.
    pub fn face_counts(&self) -> Vec<usize> {
        let k = self.n_colors();
        let mut counts = vec![0; k];
        for bits in 1u32..(1 << k) {
            let c = ColorSet::from_bits(bits);
            counts[c.len() - 1] += self.count_components(c.complement(k));
        }
        counts
    }

    /// Renumbers vertices: vertex v becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.num_vertices())?;
        let mut inv = vec![vec![0; self.num_vertices()]; self.n_colors()];
        for (c, row) in self.inv.iter().enumerate() {
            for (v, &w) in row.iter().enumerate() {
                inv[c][perm[v]] = perm[w];
            }
        }
        Self::from_involutions(inv)
    }

    /// Recolors edges: color c becomes `sigma[c]`.
    pub fn permute_colors(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.n_colors() {
            return Err(GemError::PermutationColorMismatch {
                expected: self.n_colors(),
                found: sigma.len(),
            });
        }
        check_permutation(sigma, self.n_colors())?;
        let mut inv = vec![Vec::new(); self.n_colors()];
        for (c, row) in self.inv.iter().enumerate() {
            inv[sigma[c]] = row.clone();
        }
        Self::from_involutions(inv)
    }

    /// The graph restricted to `vertices` and `colors`, which must be closed
    /// under those colors. Returns the subgraph with colors renumbered in
    /// ascending order and vertices in the given order.
    pub fn induced(&self, vertices: &[usize], colors: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let mut inv = Vec::with_capacity(colors.len());
        for &c in colors {
            self.check_colors(ColorSet::single(c))?;
            let mut row = Vec::with_capacity(vertices.len());
            for &v in vertices {
                let w = pos[self.inv[c][v]];
                if w == usize::MAX {
                    return Err(GemError::PreconditionFailed(format!(
                        "vertex {v} leaves the vertex set along color {c}"
                    )));
                }
                row.push(w);
            }
            inv.push(row);
        }
        Self::from_involutions(inv)
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ColoredGraph({} colors, {} vertices)",
            self.n_colors(),
            self.num_vertices()
        )
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(GemError::InvalidPermutation(format!(
            "length {} instead of {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(GemError::InvalidPermutation(format!("{perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}
