//! Explicit crystallizations and the product construction for M × S¹.

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::io::parse_gem;
pub use crate::labels::LabeledGem;
use crate::moves::{run_script, MoveScript, ScriptRun};

const S2XS1: &str = include_str!("../data/s2xs1.gem");
const T3: &str = include_str!("../data/t3.gem");
const G1PRIME_FIG: &str = include_str!("../data/g1prime_fig.gem");
const G2PRIME_FIG: &str = include_str!("../data/g2prime_fig.gem");
const G1PRIME_SCRIPT: &str = include_str!("../data/g1prime.moves");
const G2PRIME_SCRIPT: &str = include_str!("../data/g2prime.moves");

fn embedded(text: &str) -> LabeledGem {
    parse_gem(text).expect("embedded gem file is valid")
}

/// The 8-vertex crystallization of S² × S¹.
pub fn s2xs1_standard() -> LabeledGem {
    embedded(S2XS1)
}

/// The 24-vertex crystallization of the 3-torus.
pub fn t3_standard() -> LabeledGem {
    embedded(T3)
}

/// The 40-vertex crystallization of S² × S¹ × S¹ as drawn.
pub fn g1_prime_figure() -> LabeledGem {
    embedded(G1PRIME_FIG)
}

/// The 120-vertex crystallization of the 4-torus as drawn.
pub fn g2_prime_figure() -> LabeledGem {
    embedded(G2PRIME_FIG)
}

pub fn g1_prime_script() -> MoveScript {
    G1PRIME_SCRIPT.parse().expect("embedded script is valid")
}

pub fn g2_prime_script() -> MoveScript {
    G2PRIME_SCRIPT.parse().expect("embedded script is valid")
}

/// One of the four block types of the product gem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    B,
    C,
    D,
}

impl Block {
    /// `(base color, product color)` pairs; the base color not listed is dropped.
    pub fn color_map(self) -> [(usize, usize); 3] {
        match self {
            Block::A => [(0, 4), (1, 0), (2, 1)],
            Block::B => [(0, 4), (1, 0), (3, 3)],
            Block::C => [(0, 4), (2, 2), (3, 3)],
            Block::D => [(1, 1), (2, 2), (3, 3)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Block::A => "A",
            Block::B => "B",
            Block::C => "C",
            Block::D => "D",
        }
    }
}

/// Block order in the product gem: D, C, B, A, D', C', B', A'.
pub const BLOCK_ORDER: [(Block, bool); 8] = [
    (Block::D, false),
    (Block::C, false),
    (Block::B, false),
    (Block::A, false),
    (Block::D, true),
    (Block::C, true),
    (Block::B, true),
    (Block::A, true),
];

/// Id offset of a block in the product gem built from a `p`-vertex base.
pub fn block_offset(block: Block, primed: bool, p: usize) -> usize {
    BLOCK_ORDER
        .iter()
        .position(|&b| b == (block, primed))
        .unwrap()
        * p
}

/// The gem of M × S¹ built from a 4-colored crystallization of M: eight
/// recolored copies of the base, chained A–B–C–D by colors 2, 1, 0 and joined
/// across the two chains by color 3 (A–A') and color 4 (D–D').
pub fn product_gem(base: &LabeledGem) -> Result<LabeledGem> {
    let g = base.graph();
    if g.n_colors() != 4 {
        return Err(GemError::BaseNotCrystallization(format!("{} colors", g.n_colors())));
    }
    let report = g.is_contracted();
    if !report.contracted {
        return Err(GemError::BaseNotCrystallization(format!(
            "complement counts {:?}",
            report.counts
        )));
    }
    let p = g.num_vertices();
    let mut inv = vec![vec![usize::MAX; 8 * p]; 5];
    let mut labels = Vec::with_capacity(8 * p);
    for &(block, primed) in &BLOCK_ORDER {
        let off = block_offset(block, primed, p);
        for v in 0..p {
            for (bc, c) in block.color_map() {
                inv[c][off + v] = off + g.neighbor(bc, v);
            }
            labels.push(format!(
                "{}^{{{}{}}}",
                base.label(v),
                block.name(),
                if primed { "'" } else { "" }
            ));
        }
    }
    let mut join = |x: usize, y: usize, c: usize| {
        for v in 0..p {
            inv[c][x + v] = y + v;
            inv[c][y + v] = x + v;
        }
    };
    for primed in [false, true] {
        for (x, y, c) in [(Block::A, Block::B, 2), (Block::B, Block::C, 1), (Block::C, Block::D, 0)] {
            join(block_offset(x, primed, p), block_offset(y, primed, p), c);
        }
    }
    join(block_offset(Block::A, false, p), block_offset(Block::A, true, p), 3);
    join(block_offset(Block::D, false, p), block_offset(Block::D, true, p), 4);
    let graph = ColoredGraph::from_involutions(inv)?;
    LabeledGem::new(graph, labels)
}

/// Runs a script from the product gem of `base`.
pub fn reduce_product(base: &LabeledGem, script: &MoveScript) -> Result<ScriptRun> {
    run_script(&product_gem(base)?, script)
}

/// The 40-vertex crystallization of S² × S¹ × S¹, by moves from the product gem.
pub fn g1_prime() -> LabeledGem {
    reduce_product(&s2xs1_standard(), &g1_prime_script())
        .expect("scripted reduction applies")
        .gem
}

/// The 120-vertex crystallization of the 4-torus, by moves from the product gem.
pub fn g2_prime() -> LabeledGem {
    reduce_product(&t3_standard(), &g2_prime_script())
        .expect("scripted reduction applies")
        .gem
}
