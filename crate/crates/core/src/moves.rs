//! Dipole, glue and combined moves, and scripted move sequences.

use std::fmt;
use std::str::FromStr;

use crate::error::{GemError, ParseError, Result};
use crate::graph::{ColorSet, ColoredGraph};
use crate::labels::LabeledGem;

/// Two vertices joined by exactly the edges of `colors`, lying in different
/// components of the graph on the remaining colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DipoleSpec {
    pub v1: usize,
    pub v2: usize,
    pub colors: ColorSet,
}

/// Polyhedral glue move data. The bijection maps `lambda1[k]` to `lambda2[k]`.
///
/// The moved sets are assumed to represent balls; only the combinatorial
/// conditions are checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueMoveSpec {
    pub lambda1: Vec<usize>,
    pub lambda2: Vec<usize>,
    pub color: usize,
}

/// Combined move: `v1`–`v2` and `v1p`–`v2p` are k-edges, `v1`–`v1p` and
/// `v2`–`v2p` are joined by both i and j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombinedMoveSpec {
    pub v1: usize,
    pub v2: usize,
    pub v1p: usize,
    pub v2p: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Result of a move: the new graph and where each old vertex went.
#[derive(Clone, Debug)]
pub struct Moved {
    pub graph: ColoredGraph,
    pub old_to_new: Vec<Option<usize>>,
}

fn check_dipole(g: &ColoredGraph, d: &DipoleSpec) -> Result<()> {
    g.check_vertex(d.v1)?;
    g.check_vertex(d.v2)?;
    g.check_colors(d.colors)?;
    let h = d.colors.len();
    if h == 0 || h > g.dimension() {
        return Err(GemError::NotADipole(format!(
            "size {h} outside 1..={}",
            g.dimension()
        )));
    }
    if d.v1 == d.v2 {
        return Err(GemError::NotADipole("endpoints coincide".into()));
    }
    let joined = g.colors_between(d.v1, d.v2);
    if joined != d.colors {
        return Err(GemError::NotADipole(format!(
            "vertices are joined by {joined}, not {}",
            d.colors
        )));
    }
    let rest = g.restrict(d.colors.complement(g.n_colors()))?;
    if rest.same(d.v1, d.v2) {
        return Err(GemError::NotADipole(
            "endpoints share a component of the complementary colors".into(),
        ));
    }
    Ok(())
}

/// All h-dipoles, ordered by `(v1, v2)` with `v1 < v2`.
pub fn find_dipoles(g: &ColoredGraph, h: usize) -> Vec<DipoleSpec> {
    let mut out = Vec::new();
    if h == 0 || h > g.dimension() {
        return out;
    }
    let mut labelings = std::collections::HashMap::new();
    for v1 in 0..g.num_vertices() {
        let mut partners: Vec<usize> = (0..g.n_colors()).map(|c| g.neighbor(c, v1)).collect();
        partners.sort_unstable();
        partners.dedup();
        for v2 in partners.into_iter().filter(|&w| w > v1) {
            let colors = g.colors_between(v1, v2);
            if colors.len() != h {
                continue;
            }
            let rest = labelings
                .entry(colors)
                .or_insert_with(|| g.restrict(colors.complement(g.n_colors())).unwrap());
            if !rest.same(v1, v2) {
                out.push(DipoleSpec { v1, v2, colors });
            }
        }
    }
    out
}

/// Deletes `lambda1 ∪ lambda2` and, for every color c and u in `lambda1`
/// whose c-neighbor p survives, joins p to the c-neighbor of the image of u.
fn glue_core(g: &ColoredGraph, lambda1: &[usize], lambda2: &[usize]) -> Result<Moved> {
    let v = g.num_vertices();
    let mut removed = vec![false; v];
    for &u in lambda1.iter().chain(lambda2) {
        removed[u] = true;
    }
    let mut inv = g.involutions().to_vec();
    for c in 0..g.n_colors() {
        for (&u, &w) in lambda1.iter().zip(lambda2) {
            let p = g.neighbor(c, u);
            if removed[p] {
                continue;
            }
            let q = g.neighbor(c, w);
            if removed[q] {
                return Err(GemError::PhiNotIsomorphism(format!(
                    "color {c}: {u} leaves the set but its image {w} does not"
                )));
            }
            inv[c][p] = q;
            inv[c][q] = p;
        }
    }
    let mut old_to_new = vec![None; v];
    let mut next = 0;
    for (x, slot) in old_to_new.iter_mut().enumerate() {
        if !removed[x] {
            *slot = Some(next);
            next += 1;
        }
    }
    let compact: Vec<Vec<usize>> = inv
        .iter()
        .map(|row| {
            (0..v)
                .filter(|&x| !removed[x])
                .map(|x| {
                    old_to_new[row[x]].ok_or_else(|| {
                        GemError::ResultInvalid(format!("vertex {x} still points at a deleted vertex"))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let graph = ColoredGraph::from_involutions(compact).map_err(|e| GemError::ResultInvalid(e.to_string()))?;
    Ok(Moved { graph, old_to_new })
}

pub fn cancel_dipole(g: &ColoredGraph, d: &DipoleSpec) -> Result<Moved> {
    check_dipole(g, d)?;
    glue_core(g, &[d.v1], &[d.v2])
}

/// Inserts an h-dipole on two new vertices `V` and `V+1` next to `at_vertex`.
///
/// For every color c outside `colors`, the c-edge at `at_vertex` is cut:
/// `at_vertex` is joined to `V` and its old partner to `V+1`.
pub fn add_dipole(g: &ColoredGraph, at_vertex: usize, colors: ColorSet) -> Result<ColoredGraph> {
    g.check_vertex(at_vertex)?;
    g.check_colors(colors)?;
    if colors.is_empty() || colors.len() > g.dimension() {
        return Err(GemError::PreconditionFailed(format!(
            "dipole size {} outside 1..={}",
            colors.len(),
            g.dimension()
        )));
    }
    let v = g.num_vertices();
    let (x, y) = (v, v + 1);
    let mut inv: Vec<Vec<usize>> = g.involutions().to_vec();
    for (c, row) in inv.iter_mut().enumerate() {
        row.extend([0, 0]);
        if colors.contains(c) {
            row[x] = y;
            row[y] = x;
        } else {
            let w = row[at_vertex];
            row[at_vertex] = x;
            row[x] = at_vertex;
            row[w] = y;
            row[y] = w;
        }
    }
    ColoredGraph::from_involutions(inv)
}

fn check_glue(g: &ColoredGraph, m: &GlueMoveSpec) -> Result<()> {
    g.check_colors(ColorSet::single(m.color))?;
    if m.lambda1.is_empty() || m.lambda1.len() != m.lambda2.len() {
        return Err(GemError::PreconditionFailed(format!(
            "vertex sets of sizes {} and {}",
            m.lambda1.len(),
            m.lambda2.len()
        )));
    }
    let v = g.num_vertices();
    let mut side = vec![0u8; v];
    let mut image = vec![usize::MAX; v];
    for (&u, &w) in m.lambda1.iter().zip(&m.lambda2) {
        g.check_vertex(u)?;
        g.check_vertex(w)?;
        if side[u] != 0 || side[w] != 0 || u == w {
            return Err(GemError::PreconditionFailed(
                "vertex sets overlap or repeat a vertex".into(),
            ));
        }
        side[u] = 1;
        side[w] = 2;
        image[u] = w;
    }
    for &u in &m.lambda1 {
        if g.neighbor(m.color, u) != image[u] {
            return Err(GemError::MissingIColoredMatching {
                vertex: u,
                color: m.color,
            });
        }
    }
    for c in (0..g.n_colors()).filter(|&c| c != m.color) {
        for &u in &m.lambda1 {
            let p = g.neighbor(c, u);
            let q = g.neighbor(c, image[u]);
            let ok = if side[p] == 1 { q == image[p] } else { side[q] != 2 };
            if !ok {
                return Err(GemError::PhiNotIsomorphism(format!(
                    "color {c} edge at vertex {u} is not carried to the image"
                )));
            }
        }
    }
    let hat = g.restrict(g.all_colors().without(m.color))?;
    let mut comps1: Vec<usize> = m.lambda1.iter().map(|&u| hat.ids[u]).collect();
    comps1.sort_unstable();
    if m.lambda2.iter().any(|&w| comps1.binary_search(&hat.ids[w]).is_ok()) {
        return Err(GemError::SameComponentInIHat(m.color));
    }
    Ok(())
}

pub fn polyhedral_glue(g: &ColoredGraph, m: &GlueMoveSpec) -> Result<Moved> {
    check_glue(g, m)?;
    glue_core(g, &m.lambda1, &m.lambda2)
}

fn check_combined(g: &ColoredGraph, m: &CombinedMoveSpec) -> Result<()> {
    let fail = |s: &str| Err(GemError::PreconditionFailed(s.to_string()));
    for v in [m.v1, m.v2, m.v1p, m.v2p] {
        g.check_vertex(v)?;
    }
    let colors: ColorSet = [m.i, m.j, m.k].into_iter().collect();
    g.check_colors(colors)?;
    if colors.len() != 3 {
        return fail("colors i, j, k must be distinct");
    }
    if g.neighbor(m.k, m.v1) != m.v2 {
        return fail("v1 and v2 are not joined by color k");
    }
    if g.neighbor(m.k, m.v1p) != m.v2p {
        return fail("v1' and v2' are not joined by color k");
    }
    for c in [m.i, m.j] {
        if g.neighbor(c, m.v1) != m.v1p {
            return fail("v1 and v1' are not joined by both i and j");
        }
        if g.neighbor(c, m.v2) != m.v2p {
            return fail("v2 and v2' are not joined by both i and j");
        }
    }
    let rest = g.restrict(colors.complement(g.n_colors()))?;
    let mut ids = [m.v1, m.v2, m.v1p, m.v2p].map(|v| rest.ids[v]);
    ids.sort_unstable();
    if ids.windows(2).any(|w| w[0] == w[1]) {
        return fail("the four vertices are not in four distinct components without i, j, k");
    }
    let ij: ColorSet = [m.i, m.j].into_iter().collect();
    if g.restrict(ij.complement(g.n_colors()))?.same(m.v1, m.v1p) {
        return fail("the two pairs share a component without i, j");
    }
    Ok(())
}

pub fn combined_move(g: &ColoredGraph, m: &CombinedMoveSpec) -> Result<Moved> {
    check_combined(g, m)?;
    glue_core(g, &[m.v1, m.v2], &[m.v1p, m.v2p])
}

/// The same move as two dipole cancellations: the 2-dipole on the pair with
/// the smaller vertex first, then the 3-dipole on the other pair.
pub fn combined_as_dipoles(g: &ColoredGraph, m: &CombinedMoveSpec) -> Result<Moved> {
    check_combined(g, m)?;
    let ij: ColorSet = [m.i, m.j].into_iter().collect();
    let ijk: ColorSet = [m.i, m.j, m.k].into_iter().collect();
    let (first, second) = if m.v1.min(m.v1p) < m.v2.min(m.v2p) {
        ((m.v1, m.v1p), (m.v2, m.v2p))
    } else {
        ((m.v2, m.v2p), (m.v1, m.v1p))
    };
    let a = cancel_dipole(g, &DipoleSpec { v1: first.0, v2: first.1, colors: ij })?;
    let map = |v: usize| a.old_to_new[v].expect("survives the first cancellation");
    let b = cancel_dipole(
        &a.graph,
        &DipoleSpec {
            v1: map(second.0),
            v2: map(second.1),
            colors: ijk,
        },
    )?;
    let old_to_new = a
        .old_to_new
        .iter()
        .map(|x| x.and_then(|y| b.old_to_new[y]))
        .collect();
    Ok(Moved {
        graph: b.graph,
        old_to_new,
    })
}

/// One scripted move, referring to vertices by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    Dipole {
        v1: String,
        v2: String,
        colors: ColorSet,
    },
    Glue {
        color: usize,
        from: Vec<String>,
        to: Vec<String>,
    },
    Combined {
        k: usize,
        i: usize,
        j: usize,
        pair: (String, String),
        pair_p: (String, String),
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug)]
pub struct ScriptRun {
    pub gem: LabeledGem,
    /// Vertex counts before the first move and after each move.
    pub trace: Vec<usize>,
}

impl Move {
    pub fn apply(&self, gem: &LabeledGem) -> Result<LabeledGem> {
        let g = gem.graph();
        let moved = match self {
            Move::Dipole { v1, v2, colors } => cancel_dipole(
                g,
                &DipoleSpec {
                    v1: gem.vertex(v1)?,
                    v2: gem.vertex(v2)?,
                    colors: *colors,
                },
            )?,
            Move::Glue { color, from, to } => {
                let spec = GlueMoveSpec {
                    lambda1: from.iter().map(|l| gem.vertex(l)).collect::<Result<_>>()?,
                    lambda2: to.iter().map(|l| gem.vertex(l)).collect::<Result<_>>()?,
                    color: *color,
                };
                polyhedral_glue(g, &spec)?
            }
            Move::Combined { k, i, j, pair, pair_p } => combined_move(
                g,
                &CombinedMoveSpec {
                    v1: gem.vertex(&pair.0)?,
                    v2: gem.vertex(&pair.1)?,
                    v1p: gem.vertex(&pair_p.0)?,
                    v2p: gem.vertex(&pair_p.1)?,
                    i: *i,
                    j: *j,
                    k: *k,
                },
            )?,
        };
        gem.remap(moved.graph, &moved.old_to_new)
    }
}

pub fn run_script(gem: &LabeledGem, script: &MoveScript) -> Result<ScriptRun> {
    let mut cur = gem.clone();
    let mut trace = vec![cur.graph().num_vertices()];
    for (index, m) in script.moves.iter().enumerate() {
        cur = m.apply(&cur).map_err(|e| GemError::Step {
            index,
            source: Box::new(e),
        })?;
        trace.push(cur.graph().num_vertices());
    }
    Ok(ScriptRun { gem: cur, trace })
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Dipole { v1, v2, colors } => {
                let cs: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
                write!(f, "dipole {v1} {v2} {}", cs.join(","))
            }
            Move::Glue { color, from, to } => {
                write!(f, "glue {color} [{}] -> [{}]", from.join(","), to.join(","))
            }
            Move::Combined { k, i, j, pair, pair_p } => write!(
                f,
                "combined {k} {{{i},{j}}} ({},{}) ({},{})",
                pair.0, pair.1, pair_p.0, pair_p.1
            ),
        }
    }
}

impl fmt::Display for MoveScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Cursor over one script line, tracking the column for error messages.
struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn word(&mut self) -> std::result::Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        if end == 0 {
            return Err(self.err("unexpected end of line"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    fn expect(&mut self, token: &str) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{token}`")))
        }
    }

    fn color(&mut self) -> std::result::Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
        rest[..end].parse().map_err(|_| self.err("expected a color")).inspect(|_| {
            self.pos = start + end;
        })
    }

    /// Comma-separated labels up to the closing delimiter.
    fn list(&mut self, open: &str, close: char) -> std::result::Result<Vec<String>, ParseError> {
        self.expect(open)?;
        let rest = &self.text[self.pos..];
        let end = rest.find(close).ok_or_else(|| self.err(format!("missing `{close}`")))?;
        let items: Vec<String> = rest[..end].split(',').map(|s| s.trim().to_string()).collect();
        if items.iter().any(|s| s.is_empty() || s.contains(char::is_whitespace)) {
            return Err(self.err("malformed label list"));
        }
        self.pos += end + close.len_utf8();
        Ok(items)
    }

    fn pair(&mut self) -> std::result::Result<(String, String), ParseError> {
        let items = self.list("(", ')')?;
        match <[String; 2]>::try_from(items) {
            Ok([a, b]) => Ok((a, b)),
            Err(_) => Err(self.err("expected two labels")),
        }
    }

    fn finish(&mut self) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.text.len() {
            Err(self.err("trailing input"))
        } else {
            Ok(())
        }
    }
}

impl FromStr for MoveScript {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut moves = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let text = raw.split('#').next().unwrap();
            if text.trim().is_empty() {
                continue;
            }
            let mut cur = Cursor {
                line: idx + 1,
                text,
                pos: 0,
            };
            let keyword_col = cur.pos;
            let m = match cur.word()? {
                "dipole" => {
                    let v1 = cur.word()?.to_string();
                    let v2 = cur.word()?.to_string();
                    cur.skip_ws();
                    let rest = &cur.text[cur.pos..];
                    let colors = rest
                        .trim()
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<std::result::Result<ColorSet, _>>()
                        .map_err(|_| cur.err("expected a comma-separated color list"))?;
                    cur.pos = cur.text.len();
                    Move::Dipole { v1, v2, colors }
                }
                "glue" => {
                    let color = cur.color()?;
                    let from = cur.list("[", ']')?;
                    cur.expect("->")?;
                    let to = cur.list("[", ']')?;
                    if from.len() != to.len() {
                        return Err(cur.err("lists differ in length"));
                    }
                    Move::Glue { color, from, to }
                }
                "combined" => {
                    let k = cur.color()?;
                    let ij = cur.list("{", '}')?;
                    let parse = |t: &String| t.parse::<usize>().ok();
                    let (i, j) = match ij.iter().map(parse).collect::<Option<Vec<_>>>().as_deref() {
                        Some(&[i, j]) => (i, j),
                        _ => return Err(cur.err("expected `{i,j}`")),
                    };
                    let pair = cur.pair()?;
                    let pair_p = cur.pair()?;
                    Move::Combined { k, i, j, pair, pair_p }
                }
                other => {
                    return Err(ParseError::new(
                        idx + 1,
                        keyword_col + 1 + (text.len() - text.trim_start().len()),
                        format!("unknown move `{other}`"),
                    ))
                }
            };
            cur.finish()?;
            moves.push(m);
        }
        Ok(MoveScript { moves })
    }
}
