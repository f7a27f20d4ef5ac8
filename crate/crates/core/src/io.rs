//! Gem text format, DOT export and facet-gluing tables.
//!
//! ```text
//! # comment
//! gem 1
//! colors 5
//! vertices 2
//! label 0 v0          (optional, one line per vertex)
//! c 0: 0-1
//! ...
//! ```

use std::fmt::Write;

use crate::error::{GemError, ParseError, Result};
use crate::graph::ColoredGraph;
use crate::labels::LabeledGem;

pub const FORMAT_VERSION: usize = 1;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn column_of(line: &str, token: &str) -> usize {
    let base = line.as_ptr() as usize;
    token.as_ptr() as usize - base + 1
}

/// Splits on whitespace, keeping each token's 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    line.split_whitespace().map(|t| (column_of(line, t), t)).collect()
}

fn parse_num(line_no: usize, col: usize, t: &str, what: &str) -> std::result::Result<usize, ParseError> {
    t.parse()
        .map_err(|_| ParseError::new(line_no, col, format!("expected {what}, found `{t}`")))
}

pub fn parse_gem(text: &str) -> Result<LabeledGem> {
    let mut header: Vec<usize> = Vec::new();
    let mut n_colors = 0;
    let mut num_vertices = 0;
    let mut labels: Option<Vec<Option<String>>> = None;
    let mut rows: Vec<Option<Vec<usize>>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap();
        let toks = tokens(line);
        let Some(&(col0, key)) = toks.first() else {
            continue;
        };
        let perr = |col: usize, msg: String| -> GemError { ParseError::new(line_no, col, msg).into() };
        match header.len() {
            0..=2 => {
                let expected = ["gem", "colors", "vertices"][header.len()];
                if key != expected || toks.len() != 2 {
                    return Err(perr(col0, format!("expected `{expected} <number>`")));
                }
                let (col, t) = toks[1];
                let value = parse_num(line_no, col, t, "a number")?;
                match header.len() {
                    0 if value != FORMAT_VERSION => {
                        return Err(perr(col, format!("unsupported format version {value}")));
                    }
                    1 => {
                        if !(2..=crate::graph::MAX_COLORS).contains(&value) {
                            return Err(perr(col, format!("color count {value} out of range")));
                        }
                        n_colors = value;
                        rows = vec![None; n_colors];
                    }
                    2 => {
                        if value < 2 {
                            return Err(perr(col, "need at least 2 vertices".into()));
                        }
                        if value % 2 == 1 {
                            return Err(GemError::AtLine {
                                line: line_no,
                                source: Box::new(GemError::OddVertexCount(value)),
                            });
                        }
                        num_vertices = value;
                    }
                    _ => {}
                }
                header.push(value);
            }
            _ if key == "label" => {
                if rows.iter().any(Option::is_some) {
                    return Err(perr(col0, "labels must precede edge lines".into()));
                }
                if toks.len() != 3 {
                    return Err(perr(col0, "expected `label <id> <string>`".into()));
                }
                let (col, t) = toks[1];
                let v = parse_num(line_no, col, t, "a vertex id")?;
                if v >= num_vertices {
                    return Err(perr(col, format!("vertex {v} out of range")));
                }
                let table = labels.get_or_insert_with(|| vec![None; num_vertices]);
                if table[v].is_some() {
                    return Err(perr(col, format!("vertex {v} labeled twice")));
                }
                table[v] = Some(toks[2].1.to_string());
            }
            _ if key == "c" => {
                let (col, t) = *toks
                    .get(1)
                    .ok_or_else(|| perr(col0, "expected `c <color>:`".into()))?;
                let Some(num) = t.strip_suffix(':') else {
                    return Err(perr(col, "expected `<color>:`".into()));
                };
                let c = parse_num(line_no, col, num, "a color")?;
                if c >= n_colors {
                    return Err(GemError::AtLine {
                        line: line_no,
                        source: Box::new(GemError::ColorOutOfRange { color: c, n_colors }),
                    });
                }
                if rows[c].is_some() {
                    return Err(perr(col, format!("color {c} listed twice")));
                }
                let at = |e: GemError| GemError::AtLine {
                    line: line_no,
                    source: Box::new(e),
                };
                let mut row = vec![usize::MAX; num_vertices];
                for &(col, t) in &toks[2..] {
                    let (a, b) = t
                        .split_once('-')
                        .ok_or_else(|| perr(col, format!("expected `a-b`, found `{t}`")))?;
                    let a = parse_num(line_no, col, a, "a vertex id")?;
                    let b = parse_num(line_no, col, b, "a vertex id")?;
                    for v in [a, b] {
                        if v >= num_vertices {
                            return Err(at(GemError::VertexOutOfRange { vertex: v, num_vertices }));
                        }
                    }
                    if a == b {
                        return Err(at(GemError::LoopEdge { color: c, vertex: a }));
                    }
                    for v in [a, b] {
                        if row[v] != usize::MAX {
                            return Err(at(GemError::DuplicateVertexInColor { color: c, vertex: v }));
                        }
                    }
                    row[a] = b;
                    row[b] = a;
                }
                let found = row.iter().filter(|&&w| w != usize::MAX).count();
                if found != num_vertices {
                    return Err(at(GemError::VertexCountMismatch {
                        color: c,
                        expected: num_vertices,
                        found,
                    }));
                }
                rows[c] = Some(row);
            }
            _ => return Err(perr(col0, format!("unexpected `{key}`"))),
        }
    }
    if header.len() < 3 {
        return Err(ParseError::new(last_line + 1, 1, "incomplete header").into());
    }
    if let Some(c) = rows.iter().position(Option::is_none) {
        return Err(ParseError::new(last_line + 1, 1, format!("color {c} has no edge line")).into());
    }
    let graph = ColoredGraph::from_involutions(rows.into_iter().map(Option::unwrap).collect())?;
    match labels {
        None => Ok(LabeledGem::unlabeled(graph)),
        Some(table) => {
            if let Some(v) = table.iter().position(Option::is_none) {
                return Err(ParseError::new(last_line + 1, 1, format!("vertex {v} has no label")).into());
            }
            LabeledGem::new(graph, table.into_iter().map(Option::unwrap).collect())
        }
    }
}

/// Canonical text: colors ascending, pairs sorted by their smaller endpoint.
/// Label lines are omitted when every label is the vertex id.
pub fn render_gem(gem: &LabeledGem) -> String {
    let g = gem.graph();
    let mut out = String::new();
    writeln!(out, "gem {FORMAT_VERSION}").unwrap();
    writeln!(out, "colors {}", g.n_colors()).unwrap();
    writeln!(out, "vertices {}", g.num_vertices()).unwrap();
    if !gem.has_default_labels() {
        for (v, l) in gem.labels().iter().enumerate() {
            writeln!(out, "label {v} {l}").unwrap();
        }
    }
    for c in 0..g.n_colors() {
        write!(out, "c {c}:").unwrap();
        for v in 0..g.num_vertices() {
            let w = g.neighbor(c, v);
            if v < w {
                write!(out, " {v}-{w}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(gem: &LabeledGem) -> String {
    let g = gem.graph();
    let mut out = String::from("graph gem {\n  node [shape=circle, fontsize=10];\n");
    for l in gem.labels() {
        writeln!(out, "  {};", dot_id(l)).unwrap();
    }
    for (c, a, b) in g.edges() {
        writeln!(
            out,
            "  {} -- {} [color=\"{}\", label=\"{c}\"];",
            dot_id(gem.label(a)),
            dot_id(gem.label(b)),
            PALETTE[c % PALETTE.len()]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Tab-separated facet-gluing table: one row per top simplex, one column per
/// color giving the simplex glued across the facet opposite that color.
pub fn export_gluings(gem: &LabeledGem) -> String {
    let g = gem.graph();
    let mut out = String::from("simplex");
    for c in 0..g.n_colors() {
        write!(out, "\tc{c}").unwrap();
    }
    out.push('\n');
    for v in 0..g.num_vertices() {
        write!(out, "{}", gem.label(v)).unwrap();
        for c in 0..g.n_colors() {
            write!(out, "\t{}", gem.label(g.neighbor(c, v))).unwrap();
        }
        out.push('\n');
    }
    out
}
