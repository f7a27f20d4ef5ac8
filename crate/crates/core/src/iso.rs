//! Isomorphism and canonical signatures of colored graphs.
//!
//! In a connected properly edge-colored graph an isomorphism is fixed by the
//! image of one vertex, so a breadth-first numbering that scans colors in a
//! fixed order is a complete invariant once the start vertex is chosen. The
//! canonical code of a component is the least such numbering over start
//! vertices, where starts are first narrowed to those with the least profile
//! of bicolored cycle lengths. Components are coded separately and sorted.

use std::fmt;

use rayon::prelude::*;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::torus::perms_lex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignatureMode {
    FixedColors,
    UpToColorPermutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalSignature {
    pub mode: SignatureMode,
    pub bytes: Vec<u8>,
}

impl CanonicalSignature {
    /// 64-bit FNV-1a digest of the signature bytes, for display.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for &b in &self.bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        h
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.fingerprint())
    }
}

/// A colored isomorphism: vertex v goes to `vertex_map[v]` and color c to
/// `color_map[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub color_map: Vec<usize>,
}

impl Isomorphism {
    pub fn verify(&self, g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
        g1.n_colors() == g2.n_colors()
            && g1.num_vertices() == g2.num_vertices()
            && (0..g1.n_colors()).all(|c| {
                (0..g1.num_vertices()).all(|v| {
                    self.vertex_map[g1.neighbor(c, v)] == g2.neighbor(self.color_map[c], self.vertex_map[v])
                })
            })
    }
}

/// Canonical numbering of a graph under one color order.
struct Canon {
    code: Vec<u32>,
    /// `order[p]` is the vertex at canonical position p.
    order: Vec<usize>,
    /// Old color to new color.
    sigma: Vec<usize>,
}

/// Cycle length through each vertex for every color pair, indexed by pair.
struct CycleTable {
    k: usize,
    lengths: Vec<Vec<u32>>,
}

impl CycleTable {
    fn new(g: &ColoredGraph) -> Self {
        let k = g.n_colors();
        let v = g.num_vertices();
        let mut lengths = vec![Vec::new(); k * k];
        for a in 0..k {
            for b in a + 1..k {
                let mut len = vec![0u32; v];
                for s in 0..v {
                    if len[s] != 0 {
                        continue;
                    }
                    let mut cyc = vec![s];
                    let mut u = g.neighbor(a, s);
                    let mut c = b;
                    while u != s {
                        cyc.push(u);
                        u = g.neighbor(c, u);
                        c = if c == a { b } else { a };
                    }
                    for &x in &cyc {
                        len[x] = cyc.len() as u32;
                    }
                }
                lengths[a * k + b] = len.clone();
                lengths[b * k + a] = len;
            }
        }
        Self { k, lengths }
    }

    /// Profile of v with pairs listed in new-color order.
    fn profile(&self, v: usize, sigma_inv: &[usize]) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k * (self.k - 1) / 2);
        for a in 0..self.k {
            for b in a + 1..self.k {
                out.push(self.lengths[sigma_inv[a] * self.k + sigma_inv[b]][v]);
            }
        }
        out
    }
}

fn bfs_code(
    g: &ColoredGraph,
    start: usize,
    sigma_inv: &[usize],
    num: &mut [u32],
    best: Option<&[u32]>,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let mut queue = vec![start];
    num[start] = 0;
    let mut code = Vec::new();
    let mut less = best.is_none();
    let mut head = 0;
    let mut result = None;
    'walk: while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &c in sigma_inv {
            let w = g.neighbor(c, u);
            if num[w] == u32::MAX {
                num[w] = queue.len() as u32;
                queue.push(w);
            }
            let x = num[w];
            if !less {
                let b = best.unwrap()[code.len()];
                if x > b {
                    break 'walk;
                }
                less = x < b;
            }
            code.push(x);
        }
        if head == queue.len() {
            result = Some(());
        }
    }
    for &v in &queue {
        num[v] = u32::MAX;
    }
    result.map(|_| (code, queue))
}

fn canon_with(g: &ColoredGraph, sigma: &[usize], table: &CycleTable) -> Canon {
    let k = g.n_colors();
    let mut sigma_inv = vec![0; k];
    for (c, &s) in sigma.iter().enumerate() {
        sigma_inv[s] = c;
    }
    let comps = g.restrict(g.all_colors()).unwrap();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); comps.count];
    for v in 0..g.num_vertices() {
        members[comps.ids[v]].push(v);
    }
    let mut num = vec![u32::MAX; g.num_vertices()];
    let mut parts: Vec<(Vec<u32>, Vec<usize>)> = members
        .iter()
        .map(|m| {
            let profiles: Vec<Vec<u32>> = m.iter().map(|&v| table.profile(v, &sigma_inv)).collect();
            let least = profiles.iter().min().unwrap();
            let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
            for (&s, p) in m.iter().zip(&profiles) {
                if p != least {
                    continue;
                }
                if let Some(found) = bfs_code(g, s, &sigma_inv, &mut num, best.as_ref().map(|b| b.0.as_slice())) {
                    if best.as_ref().is_none_or(|b| found.0 < b.0) {
                        best = Some(found);
                    }
                }
            }
            best.unwrap()
        })
        .collect();
    parts.sort_by(|a, b| (a.1.len(), &a.0).cmp(&(b.1.len(), &b.0)));
    let mut code = vec![k as u32, g.num_vertices() as u32, parts.len() as u32];
    let mut order = Vec::with_capacity(g.num_vertices());
    for (c, o) in parts {
        code.push(o.len() as u32);
        code.extend(c);
        order.extend(o);
    }
    Canon {
        code,
        order,
        sigma: sigma.to_vec(),
    }
}

fn canon(g: &ColoredGraph, mode: SignatureMode) -> Canon {
    let table = CycleTable::new(g);
    let k = g.n_colors();
    match mode {
        SignatureMode::FixedColors => canon_with(g, &(0..k).collect::<Vec<_>>(), &table),
        SignatureMode::UpToColorPermutation => perms_lex(k)
            .into_par_iter()
            .map(|p| {
                let sigma: Vec<usize> = p.iter().map(|&x| x as usize).collect();
                canon_with(g, &sigma, &table)
            })
            .min_by(|a, b| (&a.code, &a.sigma).cmp(&(&b.code, &b.sigma)))
            .unwrap(),
    }
}

fn encode(code: &[u32]) -> Vec<u8> {
    let wide = code.iter().any(|&x| x > u16::MAX as u32);
    let mut out = vec![u8::from(wide)];
    for &x in code {
        if wide {
            out.extend(x.to_be_bytes());
        } else {
            out.extend((x as u16).to_be_bytes());
        }
    }
    out
}

pub fn canonical_signature(g: &ColoredGraph, mode: SignatureMode) -> CanonicalSignature {
    CanonicalSignature {
        mode,
        bytes: encode(&canon(g, mode).code),
    }
}

/// Relabels `g` into canonical vertex order (and color order in
/// color-permutation mode).
pub fn canonical_form(g: &ColoredGraph, mode: SignatureMode) -> ColoredGraph {
    let c = canon(g, mode);
    let mut pos = vec![0; g.num_vertices()];
    for (p, &v) in c.order.iter().enumerate() {
        pos[v] = p;
    }
    g.relabel(&pos)
        .and_then(|h| h.permute_colors(&c.sigma))
        .expect("canonical order is a permutation")
}

pub fn isomorphic(g1: &ColoredGraph, g2: &ColoredGraph, allow_color_perm: bool) -> Result<Option<Isomorphism>> {
    if g1.n_colors() != g2.n_colors() {
        return Err(GemError::ColorCountMismatch {
            left: g1.n_colors(),
            right: g2.n_colors(),
        });
    }
    if g1.num_vertices() != g2.num_vertices() {
        return Ok(None);
    }
    let mode = if allow_color_perm {
        SignatureMode::UpToColorPermutation
    } else {
        SignatureMode::FixedColors
    };
    let (c1, c2) = rayon::join(|| canon(g1, mode), || canon(g2, mode));
    if c1.code != c2.code {
        return Ok(None);
    }
    let mut vertex_map = vec![0; g1.num_vertices()];
    for (&a, &b) in c1.order.iter().zip(&c2.order) {
        vertex_map[a] = b;
    }
    let mut sigma2_inv = vec![0; g2.n_colors()];
    for (c, &s) in c2.sigma.iter().enumerate() {
        sigma2_inv[s] = c;
    }
    let color_map = c1.sigma.iter().map(|&s| sigma2_inv[s]).collect();
    let iso = Isomorphism { vertex_map, color_map };
    if !iso.verify(g1, g2) {
        return Err(GemError::ResultInvalid("isomorphism witness failed replay".into()));
    }
    Ok(Some(iso))
}
