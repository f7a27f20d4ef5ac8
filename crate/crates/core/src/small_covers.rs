//! Small covers over the prism P = Δ² × Δ²: characteristic functions, the
//! 96-vertex gems built from a fixed 6-simplex decomposition of P, their
//! compact forms and the reduction to 52-vertex crystallizations.

use std::fmt;

use rayon::prelude::*;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::io::parse_gem;
use crate::iso::{canonical_signature, SignatureMode};
use crate::labels::LabeledGem;
use crate::moves::Move;

const FACETS: &str = include_str!("../data/facets.txt");
const COMPACT_FORMS: &str = include_str!("../data/compact_forms.txt");
const S1_FIG: &str = include_str!("../data/s1_fig.gem");

/// A vertex v_s^j of P, where s = i + j for the product vertex (a_i, b_j).
pub type PVertex = (u8, u8);

pub const FACES: [[PVertex; 6]; 6] = [
    [(0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (3, 1)],
    [(0, 0), (1, 0), (2, 0), (2, 2), (3, 2), (4, 2)],
    [(0, 0), (1, 1), (2, 2), (1, 0), (2, 1), (3, 2)],
    [(0, 0), (1, 1), (2, 2), (2, 0), (3, 1), (4, 2)],
    [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (4, 2)],
    [(1, 0), (2, 1), (3, 2), (2, 0), (3, 1), (4, 2)],
];

/// The 4-simplices t¹..t⁶; the vertex at position i carries color i.
pub const SIMPLICES: [[PVertex; 5]; 6] = [
    [(0, 0), (1, 0), (2, 0), (3, 1), (4, 2)],
    [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2)],
    [(0, 0), (1, 0), (2, 1), (3, 2), (4, 2)],
    [(0, 0), (1, 1), (2, 1), (3, 1), (4, 2)],
    [(0, 0), (1, 1), (2, 1), (3, 2), (4, 2)],
    [(0, 0), (1, 1), (2, 2), (3, 2), (4, 2)],
];

/// Where the i-colored 3-face of a simplex goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacePartner {
    /// Shared with simplex t^k (1-based) of the same copy.
    Internal(usize),
    /// Lies on facet F_l (1-based).
    Boundary(usize),
}

impl fmt::Display for FacePartner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacePartner::Internal(k) => write!(f, "t{k}"),
            FacePartner::Boundary(l) => write!(f, "F{l}"),
        }
    }
}

/// The prism with its facets and simplex decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeP {
    pub vertices: Vec<PVertex>,
    /// `partners[j-1][i]` for simplex t^j and color i.
    pub partners: [[FacePartner; 5]; 6],
}

impl Default for PolytopeP {
    fn default() -> Self {
        Self::new()
    }
}

impl PolytopeP {
    pub fn new() -> Self {
        let mut vertices: Vec<PVertex> = FACES.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut partners = [[FacePartner::Internal(0); 5]; 6];
        for (j, t) in SIMPLICES.iter().enumerate() {
            for i in 0..5 {
                let face: Vec<PVertex> = (0..5).filter(|&x| x != i).map(|x| t[x]).collect();
                let internal: Vec<usize> = (0..6)
                    .filter(|&k| k != j && face.iter().all(|v| SIMPLICES[k].contains(v)))
                    .collect();
                let boundary: Vec<usize> = (0..6)
                    .filter(|&l| face.iter().all(|v| FACES[l].contains(v)))
                    .collect();
                partners[j][i] = match (internal.as_slice(), boundary.as_slice()) {
                    ([k], []) => {
                        let dropped = SIMPLICES[*k].iter().position(|v| !face.contains(v));
                        assert_eq!(dropped, Some(i), "shared face changes color");
                        FacePartner::Internal(k + 1)
                    }
                    ([], [l]) => FacePartner::Boundary(l + 1),
                    _ => panic!("face {i} of t{} is neither internal nor boundary", j + 1),
                };
            }
        }
        Self { vertices, partners }
    }

    /// Facets (1-based) containing a vertex.
    pub fn faces_at(&self, v: PVertex) -> Vec<usize> {
        (0..6).filter(|&l| FACES[l].contains(&v)).map(|l| l + 1).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.vertices.iter().all(|&v| self.faces_at(v).len() == 4)
    }
}

/// The face-partner table as shipped in the data file.
pub fn facet_table_data() -> [[FacePartner; 5]; 6] {
    let mut out = [[FacePartner::Internal(0); 5]; 6];
    let rows = FACETS
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    for (j, row) in rows.enumerate() {
        let toks: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(toks[0], format!("t{}", j + 1));
        assert_eq!(toks.len(), 6, "every simplex has five face partners");
        for (i, t) in toks[1..].iter().enumerate() {
            let n: usize = t[1..].parse().unwrap();
            out[j][i] = if t.starts_with('t') {
                FacePartner::Internal(n)
            } else {
                FacePartner::Boundary(n)
            };
        }
    }
    out
}

/// Subscript word of w ∈ Z₂⁴: the indices of the set bits, or `0`.
pub fn word(w: u8) -> String {
    let s: String = (0..4)
        .filter(|b| w >> b & 1 == 1)
        .map(|b| char::from(b'1' + b))
        .collect();
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn parse_word(s: &str) -> Option<u8> {
    if s == "0" {
        return Some(0);
    }
    let mut w = 0u8;
    for ch in s.chars() {
        let b = ch.to_digit(10).filter(|d| (1..=4).contains(d))? as u8 - 1;
        if w >> b & 1 == 1 {
            return None;
        }
        w |= 1 << b;
    }
    (!s.is_empty()).then_some(w)
}

fn gf2_rank(vs: &[u8]) -> usize {
    let mut basis: Vec<u8> = Vec::new();
    for &v in vs {
        let mut x = v;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
        }
    }
    basis.len()
}

/// λ : {F₁..F₆} → Z₂⁴, with bit b−1 holding coordinate b.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacteristicFunction {
    values: [u8; 6],
}

impl CharacteristicFunction {
    pub fn new(values: [u8; 6]) -> Result<Self> {
        let p = PolytopeP::new();
        if let Some(x) = values.iter().find(|&&x| x >= 16) {
            return Err(GemError::InvalidCharacteristicFunction(format!("value {x} outside Z2^4")));
        }
        for &v in &p.vertices {
            let at: Vec<u8> = p.faces_at(v).iter().map(|&l| values[l - 1]).collect();
            if gf2_rank(&at) != 4 {
                return Err(GemError::InvalidCharacteristicFunction(format!(
                    "facets at v{}^{} do not span",
                    v.0, v.1
                )));
            }
        }
        Ok(Self { values })
    }

    /// λ(F_i) = e_i for i ≤ 4, with the given values on F₅ and F₆.
    pub fn canonical(f5: u8, f6: u8) -> Result<Self> {
        Self::new([1, 2, 4, 8, f5, f6])
    }

    pub fn values(&self) -> [u8; 6] {
        self.values
    }

    /// λ(F_l) for 1-based l.
    pub fn value(&self, l: usize) -> u8 {
        self.values[l - 1]
    }

    /// Applies a linear map given by the images of e₁..e₄.
    pub fn transform(&self, theta: [u8; 4]) -> Self {
        let apply = |x: u8| (0..4).filter(|b| x >> b & 1 == 1).fold(0, |acc, b| acc ^ theta[b]);
        Self {
            values: self.values.map(apply),
        }
    }
}

impl fmt::Display for CharacteristicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=6).map(|l| format!("F{l}={}", word(self.value(l)))).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for CharacteristicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ({self})")
    }
}

/// (λ(F₅), λ(F₆)) for λ₁..λ₇ in the order they are usually listed.
pub const LISTED: [(u8, u8); 7] = [
    (0b0011, 0b1100),
    (0b0011, 0b1111),
    (0b0011, 0b1101),
    (0b0011, 0b1110),
    (0b1111, 0b1100),
    (0b0111, 0b1100),
    (0b1011, 0b1100),
];

/// λ_i for i in 1..=7.
pub fn listed_function(i: usize) -> Result<CharacteristicFunction> {
    let (f5, f6) = *LISTED
        .get(i.wrapping_sub(1))
        .ok_or_else(|| GemError::PreconditionFailed(format!("no characteristic function {i}")))?;
    CharacteristicFunction::canonical(f5, f6)
}

/// Every characteristic function with λ(F_i) = e_i for i ≤ 4, found by brute
/// force and ordered as λ₁..λ₇.
pub fn enumerate_characteristic_functions() -> Vec<CharacteristicFunction> {
    let mut found: Vec<CharacteristicFunction> = (0..16u8)
        .flat_map(|a| (0..16u8).map(move |b| (a, b)))
        .filter_map(|(a, b)| CharacteristicFunction::canonical(a, b).ok())
        .collect();
    let rank = |l: &CharacteristicFunction| {
        LISTED
            .iter()
            .position(|&(a, b)| (a, b) == (l.value(5), l.value(6)))
            .unwrap_or(LISTED.len())
    };
    found.sort_by_key(|l| (rank(l), *l));
    found
}

/// Whether `b = θ ∘ a` for some automorphism θ of Z₂⁴.
pub fn dj_equivalent(a: &CharacteristicFunction, b: &CharacteristicFunction) -> bool {
    // a(F1..F4) is a basis since F1..F4 meet at v0^0; θ is fixed by it.
    let coords = |x: u8| -> u8 {
        (0..16u8)
            .find(|&c| (0..4).filter(|i| c >> i & 1 == 1).fold(0, |acc, i| acc ^ a.values[i]) == x)
            .expect("images of F1..F4 span")
    };
    let theta = |x: u8| -> u8 {
        let c = coords(x);
        (0..4).filter(|i| c >> i & 1 == 1).fold(0, |acc, i| acc ^ b.values[i])
    };
    gf2_rank(&b.values[..4]) == 4 && (4..6).all(|l| theta(a.values[l]) == b.values[l])
}

/// Vertex id of T_w^j in a small-cover gem.
pub fn cover_vertex(w: u8, j: usize) -> usize {
    w as usize * 6 + (j - 1)
}

pub fn cover_label(w: u8, j: usize) -> String {
    format!("T_{{{}}}^{j}", word(w))
}

/// Inverse of [`cover_label`].
pub fn parse_cover_label(s: &str) -> Option<(u8, usize)> {
    let rest = s.strip_prefix("T_{")?;
    let (w, j) = rest.split_once("}^")?;
    let j: usize = j.parse().ok().filter(|j| (1..=6).contains(j))?;
    Some((parse_word(w)?, j))
}

/// The 96-vertex gem of the small cover: vertices T_w^j, w ∈ Z₂⁴, j ∈ 1..6.
/// Internal faces stay in copy w; a face on facet F moves to copy w + λ(F).
pub fn small_cover_gem(l: &CharacteristicFunction) -> Result<LabeledGem> {
    let l = CharacteristicFunction::new(l.values)?;
    let p = PolytopeP::new();
    let mut inv = vec![vec![0; 96]; 5];
    for w in 0..16u8 {
        for j in 1..=6 {
            for (i, row) in inv.iter_mut().enumerate() {
                row[cover_vertex(w, j)] = match p.partners[j - 1][i] {
                    FacePartner::Internal(k) => cover_vertex(w, k),
                    FacePartner::Boundary(f) => cover_vertex(w ^ l.value(f), j),
                };
            }
        }
    }
    let labels = (0..96).map(|v| cover_label((v / 6) as u8, v % 6 + 1)).collect();
    let graph = ColoredGraph::from_involutions(inv).map_err(|e| GemError::InvalidCharacteristicFunction(e.to_string()))?;
    LabeledGem::new(graph, labels)
}

/// The subgraph S spanned by T_w^j, j ∈ 2..5, on colors 0,1,3,4, stored
/// with those colors renumbered 0,1,2,3.
pub fn subgraph_s(gem: &LabeledGem) -> Result<LabeledGem> {
    let vertices: Vec<usize> = (0..gem.graph().num_vertices())
        .filter(|&v| matches!(parse_cover_label(gem.label(v)), Some((_, 2..=5))))
        .collect();
    let graph = gem.graph().induced(&vertices, &[0, 1, 3, 4])?;
    let labels = vertices.iter().map(|&v| gem.label(v).to_string()).collect();
    LabeledGem::new(graph, labels)
}

/// The shipped drawing of S for λ₁.
pub fn s1_figure() -> LabeledGem {
    parse_gem(S1_FIG).expect("embedded gem file is valid")
}

/// The printed compact-form tables: `printed_tables()[i-1]` belongs to λ_i.
pub fn printed_tables() -> Vec<[[u8; 4]; 4]> {
    let mut out = Vec::new();
    let mut cur: Vec<[u8; 4]> = Vec::new();
    for line in COMPACT_FORMS.lines().map(|l| l.split('#').next().unwrap().trim()) {
        if line.is_empty() {
            continue;
        }
        if line.starts_with("lambda") {
            continue;
        }
        let row: Vec<u8> = line.split_whitespace().map(|t| parse_word(t).unwrap()).collect();
        cur.push(row.try_into().unwrap());
        if cur.len() == 4 {
            out.push([cur[0], cur[1], cur[2], cur[3]]);
            cur.clear();
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CompactForm {
    /// 1-based index of the matching listed function.
    pub index: usize,
    /// Printed layout: rows are {0,1}-cycles, columns {3,4}-cycles.
    pub table: [[u8; 4]; 4],
    /// Subscript sets of the {0,1}-cycles of S, recomputed, each sorted.
    pub row_sets: Vec<[u8; 4]>,
    /// Subscript sets of the {3,4}-cycles of S, recomputed, each sorted.
    pub column_sets: Vec<[u8; 4]>,
    pub s: LabeledGem,
}

fn cycle_subscripts(s: &LabeledGem, a: usize, b: usize) -> Result<Vec<[u8; 4]>> {
    let comps = s.graph().restrict([a, b].into_iter().collect())?;
    let mut members: Vec<Vec<u8>> = vec![Vec::new(); comps.count];
    for v in 0..s.graph().num_vertices() {
        let (w, _) = parse_cover_label(s.label(v)).expect("cover label");
        members[comps.ids[v]].push(w);
    }
    let mut sets = Vec::new();
    for mut m in members {
        if m.len() != 8 {
            return Err(GemError::PreconditionFailed(format!(
                "a {{{a},{b}}}-cycle of S has length {}",
                m.len()
            )));
        }
        m.sort_unstable();
        m.dedup();
        let set: [u8; 4] = m.try_into().map_err(|_| {
            GemError::PreconditionFailed("a cycle of S does not meet exactly four copies".into())
        })?;
        sets.push(set);
    }
    sets.sort_unstable();
    sets.dedup();
    Ok(sets)
}

/// Extracts S, recomputes its cycle subscript sets and checks them against
/// the printed table for `l`.
pub fn compact_form(gem: &LabeledGem, l: &CharacteristicFunction) -> Result<CompactForm> {
    let index = LISTED
        .iter()
        .position(|&(a, b)| *l == CharacteristicFunction { values: [1, 2, 4, 8, a, b] })
        .ok_or_else(|| GemError::PreconditionFailed(format!("no printed compact form for {l}")))?
        + 1;
    let table = printed_tables()[index - 1];
    let s = subgraph_s(gem)?;
    if s.graph().num_vertices() != 64 {
        return Err(GemError::PreconditionFailed(format!(
            "S has {} vertices",
            s.graph().num_vertices()
        )));
    }
    let row_sets = cycle_subscripts(&s, 0, 1)?;
    let column_sets = cycle_subscripts(&s, 2, 3)?;
    let sorted = |mut x: [u8; 4]| {
        x.sort_unstable();
        x
    };
    let mut printed_rows: Vec<[u8; 4]> = table.iter().map(|&r| sorted(r)).collect();
    printed_rows.sort_unstable();
    let mut printed_cols: Vec<[u8; 4]> = (0..4)
        .map(|c| sorted([table[0][c], table[1][c], table[2][c], table[3][c]]))
        .collect();
    printed_cols.sort_unstable();
    if printed_rows != row_sets || printed_cols != column_sets {
        return Err(GemError::PreconditionFailed(format!(
            "printed compact form {index} disagrees with the cycles of S"
        )));
    }
    Ok(CompactForm {
        index,
        table,
        row_sets,
        column_sets,
        s,
    })
}

fn cycle_through(g: &ColoredGraph, v: usize, a: usize, b: usize) -> Vec<usize> {
    let mut out = vec![v];
    let mut u = g.neighbor(a, v);
    let mut c = b;
    while u != v {
        out.push(u);
        u = g.neighbor(c, u);
        c = if c == a { b } else { a };
    }
    out
}

fn glue_along(gem: &LabeledGem, from: &[usize], color: usize) -> Move {
    let g = gem.graph();
    Move::Glue {
        color,
        from: from.iter().map(|&v| gem.label(v).to_string()).collect(),
        to: from.iter().map(|&v| gem.label(g.neighbor(color, v)).to_string()).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub gem: LabeledGem,
    pub trace: Vec<usize>,
    pub moves: Vec<Move>,
}

/// Four polyhedral glue moves taking the 96-vertex gem to a crystallization:
/// the {0,4}-cycles through T_0^1 and T_0^6 along color 2, the j ∈ {2,4}
/// vertices of the fourth row along color 3, and the surviving j ∈ {2,3}
/// vertices of the third column along color 1.
pub fn reduce_to_crystallization(gem: &LabeledGem, cf: &CompactForm) -> Result<Reduction> {
    let mut cur = gem.clone();
    let mut trace = vec![cur.graph().num_vertices()];
    let mut moves = Vec::new();
    let mut step = |cur: &mut LabeledGem, m: Move| -> Result<()> {
        let index = moves.len();
        *cur = m.apply(cur).map_err(|e| GemError::Step {
            index,
            source: Box::new(e),
        })?;
        trace.push(cur.graph().num_vertices());
        moves.push(m);
        Ok(())
    };
    for start in [cover_label(0, 1), cover_label(0, 6)] {
        let lambda = cycle_through(cur.graph(), cur.vertex(&start)?, 0, 4);
        let m = glue_along(&cur, &lambda, 2);
        step(&mut cur, m)?;
    }
    let row: Vec<usize> = cf.table[3]
        .iter()
        .flat_map(|&w| [2, 4].map(|j| cover_label(w, j)))
        .map(|l| cur.vertex(&l))
        .collect::<Result<_>>()?;
    let m = glue_along(&cur, &row, 3);
    step(&mut cur, m)?;
    let column: Vec<usize> = (0..4)
        .flat_map(|r| [2, 3].map(|j| cover_label(cf.table[r][2], j)))
        .filter_map(|l| cur.vertex(&l).ok())
        .collect();
    let m = glue_along(&cur, &column, 1);
    step(&mut cur, m)?;
    Ok(Reduction {
        gem: cur,
        trace,
        moves,
    })
}

/// Builds, reduces and returns the crystallization for λ_i.
pub fn reduced_cover(i: usize) -> Result<Reduction> {
    let l = listed_function(i)?;
    let gem = small_cover_gem(&l)?;
    let cf = compact_form(&gem, &l)?;
    reduce_to_crystallization(&gem, &cf)
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub reduced: Vec<LabeledGem>,
    /// Classes of 1-based indices under fixed-color isomorphism.
    pub classes: Vec<Vec<usize>>,
    /// Classes allowing a permutation of colors.
    pub classes_up_to_color: Vec<Vec<usize>>,
}

fn group(sigs: &[Vec<u8>]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, s) in sigs.iter().enumerate() {
        match classes.iter_mut().find(|c| sigs[c[0] - 1] == *s) {
            Some(c) => c.push(i + 1),
            None => classes.push(vec![i + 1]),
        }
    }
    classes
}

/// Canonical-signature classes of the seven reduced crystallizations.
pub fn classify_covers() -> Result<Classification> {
    let reduced: Vec<LabeledGem> = (1..=7)
        .into_par_iter()
        .map(|i| reduced_cover(i).map(|r| r.gem))
        .collect::<Result<_>>()?;
    let sigs = |mode| -> Vec<Vec<u8>> {
        reduced
            .iter()
            .map(|g| canonical_signature(g.graph(), mode).bytes)
            .collect()
    };
    Ok(Classification {
        classes: group(&sigs(SignatureMode::FixedColors)),
        classes_up_to_color: group(&sigs(SignatureMode::UpToColorPermutation)),
        reduced,
    })
}
