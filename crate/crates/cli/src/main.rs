//! `gem`: build, inspect and compare graph-encoded manifolds.
//!
//! Exit status is 0 on success, 1 on a validation or precondition failure
//! and 2 on a parse error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gemkit::constructions::{g1_prime_script, g2_prime_script, product_gem, reduce_product, s2xs1_standard, t3_standard};
use gemkit::io::{export_dot, export_gluings, parse_gem, render_gem};
use gemkit::iso::canonical_form;
use gemkit::moves::{run_script, MoveScript};
use gemkit::small_covers::{classify_covers, listed_function, reduced_cover, small_cover_gem};
use gemkit::torus::torus_gem;
use gemkit::{
    bicolored_cycle_lengths, canonical_signature, euler_characteristic, genus_for, genus_lower_bound,
    is_weak_semi_simple, isomorphic, regular_genus, CyclicPermutation, GemError, GenusReport, LabeledGem,
    SignatureMode,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gem", version, about = "Graph-encoded manifolds: constructions, genus, moves, isomorphism")]
struct Cli {
    /// Emit a JSON report instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named gem and print it in gem format.
    Build {
        #[command(subcommand)]
        target: Target,
        /// Write the gem here instead of standard output.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Small-cover utilities.
    SmallCover {
        #[command(subcommand)]
        action: SmallCoverAction,
    },
    /// Validate a gem file and report its basic structure.
    Check { file: PathBuf },
    /// Regular genus: the minimum over cyclic permutations, one permutation, or all.
    Genus {
        file: PathBuf,
        #[arg(long, conflicts_with = "all")]
        perm: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Lengths of the bicolored cycles on a pair of colors.
    Cycles {
        file: PathBuf,
        /// Two colors, e.g. `0,2`.
        #[arg(long)]
        pair: String,
    },
    /// Euler characteristic and face counts of the dual complex.
    Chi { file: PathBuf },
    /// The lower bound 2χ + 5m − 4 on the regular genus of a 4-manifold.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[arg(long)]
        rank: u32,
    },
    /// Weak semi-simplicity of a 4-dimensional crystallization.
    Wss {
        file: PathBuf,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        rank: u32,
    },
    /// Apply a move script and print the resulting gem.
    Moves {
        file: PathBuf,
        #[arg(long)]
        script: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Decide isomorphism and print a witness.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Allow a permutation of the colors.
        #[arg(long)]
        color_perm: bool,
    },
    /// Canonical signature, optionally with the canonical form.
    Canon {
        file: PathBuf,
        #[arg(long)]
        color_perm: bool,
        /// Also print the canonically relabeled gem.
        #[arg(long)]
        form: bool,
    },
    /// Convert a gem to DOT, a facet-gluing table, or canonical gem text.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Target {
    /// The 8-vertex crystallization of S² × S¹.
    S2xs1,
    /// The 24-vertex crystallization of the 3-torus.
    T3,
    /// The 8p-vertex gem of M × S¹ from a p-vertex crystallization of M.
    ProductGem { file: PathBuf },
    /// The 40-vertex crystallization of S² × S¹ × S¹.
    G1prime,
    /// The 120-vertex crystallization of the 4-torus.
    G2prime,
    /// The (n+1)!-vertex crystallization of the n-torus from the cube.
    TorusCube {
        #[arg(long)]
        n: usize,
    },
    /// The 96-vertex small-cover gem for λ_i, or its 52-vertex reduction.
    SmallCover {
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        reduced: bool,
    },
}

#[derive(Subcommand)]
enum SmallCoverAction {
    /// Isomorphism classes of the seven reduced crystallizations.
    Classify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Gluings,
    Gem,
}

#[derive(Debug)]
enum CliError {
    Gem(GemError),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl From<GemError> for CliError {
    fn from(e: GemError) -> Self {
        CliError::Gem(e)
    }
}

impl From<gemkit::ParseError> for CliError {
    fn from(e: gemkit::ParseError) -> Self {
        CliError::Gem(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_text(path: &PathBuf) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.clone(), e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
}

fn load(path: &PathBuf) -> CliResult<LabeledGem> {
    Ok(parse_gem(&read_text(path)?)?)
}

fn write_out(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(p.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A malformed `--perm` is an argument error, like any other bad flag value.
fn parse_perm(s: &str) -> CliResult<CyclicPermutation> {
    s.parse().map_err(|e: GemError| CliError::Usage(format!("--perm: {e}")))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn report_json(r: &GenusReport) -> Value {
    json!({
        "permutation": r.permutation.to_string(),
        "pair_counts": r.pair_counts,
        "chi": r.chi,
        "rho": r.rho.to_string(),
    })
}

/// A built gem plus the vertex-count trace of the moves that produced it.
struct Built {
    name: String,
    gem: LabeledGem,
    trace: Option<Vec<usize>>,
}

fn build(target: &Target) -> CliResult<Built> {
    let (name, gem, trace) = match target {
        Target::S2xs1 => ("s2xs1".to_string(), s2xs1_standard(), None),
        Target::T3 => ("t3".into(), t3_standard(), None),
        Target::ProductGem { file } => ("product-gem".into(), product_gem(&load(file)?)?, None),
        Target::G1prime => {
            let run = reduce_product(&s2xs1_standard(), &g1_prime_script())?;
            ("g1prime".into(), run.gem, Some(run.trace))
        }
        Target::G2prime => {
            let run = reduce_product(&t3_standard(), &g2_prime_script())?;
            ("g2prime".into(), run.gem, Some(run.trace))
        }
        Target::TorusCube { n } => (format!("torus-cube {n}"), torus_gem(*n)?, None),
        Target::SmallCover { lambda, reduced: false } => (
            format!("small-cover {lambda}"),
            small_cover_gem(&listed_function(*lambda)?)?,
            None,
        ),
        Target::SmallCover { lambda, reduced: true } => {
            let r = reduced_cover(*lambda)?;
            (format!("small-cover {lambda} reduced"), r.gem, Some(r.trace))
        }
    };
    Ok(Built { name, gem, trace })
}

/// Runs one command, returning the text (or JSON) to print.
fn run(cli: &Cli) -> CliResult<String> {
    let mut s = String::new();
    let json = cli.json;
    let value: Value = match &cli.command {
        Command::Build { target, out } => {
            let b = build(target)?;
            let text = render_gem(&b.gem);
            if json {
                if out.is_some() {
                    write_out(out, &text)?;
                }
                json!({
                    "name": b.name,
                    "vertices": b.gem.graph().num_vertices(),
                    "colors": b.gem.graph().n_colors(),
                    "trace": b.trace,
                    "gem": if out.is_some() { Value::Null } else { Value::from(text) },
                })
            } else {
                writeln!(s, "# built: {}", b.name).unwrap();
                if let Some(t) = &b.trace {
                    writeln!(s, "# trace: {}", join(t)).unwrap();
                }
                s.push_str(&text);
                write_out(out, &s)?;
                return Ok(String::new());
            }
        }
        Command::SmallCover {
            action: SmallCoverAction::Classify,
        } => {
            let c = classify_covers()?;
            let fmt = |cls: &[Vec<usize>]| {
                cls.iter()
                    .map(|c| format!("{{{}}}", c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            if !json {
                writeln!(s, "classes {}", fmt(&c.classes)).unwrap();
                writeln!(s, "classes-up-to-color {}", fmt(&c.classes_up_to_color)).unwrap();
                for (i, g) in c.reduced.iter().enumerate() {
                    let sig = canonical_signature(g.graph(), SignatureMode::FixedColors);
                    writeln!(s, "lambda {} vertices {} signature {sig}", i + 1, g.graph().num_vertices()).unwrap();
                }
                return Ok(s);
            }
            json!({ "classes": c.classes, "classes_up_to_color": c.classes_up_to_color })
        }
        Command::Check { file } => {
            let gem = load(file)?;
            let g = gem.graph();
            let rep = g.is_contracted();
            let v = json!({
                "vertices": g.num_vertices(),
                "colors": g.n_colors(),
                "dimension": g.dimension(),
                "connected": g.is_connected(),
                "bipartite": g.is_bipartite(),
                "contracted": rep.contracted,
                "complement_counts": rep.counts,
                "chi": euler_characteristic(g),
            });
            if !json {
                for key in ["vertices", "colors", "dimension", "connected", "bipartite", "contracted"] {
                    writeln!(s, "{} {}", key.replace('_', "-"), v[key]).unwrap();
                }
                writeln!(s, "complement-counts {}", join(&rep.counts)).unwrap();
                writeln!(s, "chi {}", v["chi"]).unwrap();
                return Ok(s);
            }
            v
        }
        Command::Genus { file, perm, all } => {
            let gem = load(file)?;
            let g = gem.graph();
            if let Some(p) = perm {
                let r = genus_for(g, &parse_perm(p)?)?;
                if !json {
                    writeln!(s, "perm {}", r.permutation).unwrap();
                    writeln!(s, "pair-counts {}", join(&r.pair_counts)).unwrap();
                    writeln!(s, "chi-eps {}", r.chi).unwrap();
                    writeln!(s, "rho {}", r.rho).unwrap();
                    return Ok(s);
                }
                report_json(&r)
            } else {
                let rg = regular_genus(g);
                if !json {
                    if *all {
                        for r in &rg.reports {
                            writeln!(s, "{} pair-counts {} chi-eps {} rho {}", r.permutation, join(&r.pair_counts), r.chi, r.rho)
                                .unwrap();
                        }
                    }
                    writeln!(s, "regular-genus {}", rg.min).unwrap();
                    writeln!(s, "argmin {}", join(&rg.argmin)).unwrap();
                    return Ok(s);
                }
                json!({
                    "regular_genus": rg.min.to_string(),
                    "argmin": rg.argmin.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "reports": if *all { rg.reports.iter().map(report_json).collect() } else { Vec::new() },
                })
            }
        }
        Command::Cycles { file, pair } => {
            let gem = load(file)?;
            let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
            let colors: Vec<usize> = parts
                .iter()
                .map(|p| p.parse().map_err(|_| CliError::Usage(format!("bad color `{p}` in --pair"))))
                .collect::<CliResult<_>>()?;
            let [i, j] = colors[..] else {
                return Err(CliError::Usage("--pair takes two colors, e.g. 0,2".into()));
            };
            let lens = bicolored_cycle_lengths(gem.graph(), i, j)?;
            let mut census: Vec<(usize, usize)> = Vec::new();
            for &l in &lens {
                match census.last_mut() {
                    Some((len, n)) if *len == l => *n += 1,
                    _ => census.push((l, 1)),
                }
            }
            if !json {
                writeln!(s, "pair {{{i},{j}}}").unwrap();
                writeln!(s, "cycles {}", lens.len()).unwrap();
                for (l, n) in &census {
                    writeln!(s, "length {l} count {n}").unwrap();
                }
                return Ok(s);
            }
            json!({
                "pair": [i, j],
                "cycles": lens.len(),
                "census": census.iter().map(|&(l, n)| json!({"length": l, "count": n})).collect::<Vec<_>>(),
            })
        }
        Command::Chi { file } => {
            let gem = load(file)?;
            let faces = gem.graph().face_counts();
            let chi = euler_characteristic(gem.graph());
            if !json {
                writeln!(s, "faces {}", join(&faces)).unwrap();
                writeln!(s, "chi {chi}").unwrap();
                return Ok(s);
            }
            json!({ "faces": faces, "chi": chi })
        }
        Command::Bound { chi, rank } => {
            let b = genus_lower_bound(*chi, *rank);
            if !json {
                return Ok(format!("bound {b}\n"));
            }
            json!({ "chi": chi, "rank": rank, "bound": b })
        }
        Command::Wss { file, perm, rank } => {
            let gem = load(file)?;
            let w = is_weak_semi_simple(gem.graph(), &parse_perm(perm)?, *rank)?;
            if !json {
                writeln!(s, "holds {}", w.holds).unwrap();
                writeln!(s, "target {}", rank + 1).unwrap();
                writeln!(s, "triples {}", join(&w.triple_counts)).unwrap();
                writeln!(s, "consecutive {}", join(&w.consecutive_counts)).unwrap();
                return Ok(s);
            }
            json!({
                "holds": w.holds,
                "target": rank + 1,
                "triple_counts": w.triple_counts,
                "consecutive_counts": w.consecutive_counts,
            })
        }
        Command::Moves { file, script, out } => {
            let gem = load(file)?;
            let script: MoveScript = read_text(script)?.parse()?;
            let r = run_script(&gem, &script)?;
            let text = render_gem(&r.gem);
            if !json {
                write_out(out, &format!("# trace: {}\n{text}", join(&r.trace)))?;
                return Ok(String::new());
            }
            if out.is_some() {
                write_out(out, &text)?;
            }
            json!({
                "trace": r.trace,
                "vertices": r.gem.graph().num_vertices(),
                "gem": if out.is_some() { Value::Null } else { Value::from(text) },
            })
        }
        Command::Iso { a, b, color_perm } => {
            let (ga, gb) = (load(a)?, load(b)?);
            let iso = isomorphic(ga.graph(), gb.graph(), *color_perm)?;
            if !json {
                writeln!(s, "isomorphic {}", iso.is_some()).unwrap();
                if let Some(iso) = &iso {
                    writeln!(s, "color-map {}", join(&iso.color_map)).unwrap();
                    for (v, &w) in iso.vertex_map.iter().enumerate() {
                        writeln!(s, "{} -> {}", ga.label(v), gb.label(w)).unwrap();
                    }
                }
                return Ok(s);
            }
            match iso {
                Some(iso) => json!({
                    "isomorphic": true,
                    "color_map": iso.color_map,
                    "vertex_map": iso.vertex_map.iter().enumerate()
                        .map(|(v, &w)| json!([ga.label(v), gb.label(w)]))
                        .collect::<Vec<_>>(),
                }),
                None => json!({ "isomorphic": false }),
            }
        }
        Command::Canon { file, color_perm, form } => {
            let gem = load(file)?;
            let mode = if *color_perm {
                SignatureMode::UpToColorPermutation
            } else {
                SignatureMode::FixedColors
            };
            let sig = canonical_signature(gem.graph(), mode);
            let canon = form.then(|| render_gem(&LabeledGem::unlabeled(canonical_form(gem.graph(), mode))));
            if !json {
                writeln!(s, "signature {sig}").unwrap();
                writeln!(s, "bytes {}", sig.to_hex()).unwrap();
                if let Some(text) = canon {
                    s.push_str(&text);
                }
                return Ok(s);
            }
            json!({ "signature": sig.to_string(), "bytes": sig.to_hex(), "form": canon })
        }
        Command::Export { file, format, out } => {
            let gem = load(file)?;
            let text = match format {
                Format::Dot => export_dot(&gem),
                Format::Gluings => export_gluings(&gem),
                Format::Gem => render_gem(&gem),
            };
            write_out(out, &text)?;
            return Ok(String::new());
        }
    };
    Ok(format!("{}\n", serde_json::to_string_pretty(&value).unwrap()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, msg) = match &e {
                CliError::Gem(g) if g.is_parse() => (2, format!("parse error: {g}")),
                CliError::Gem(g) => (1, g.to_string()),
                CliError::Io(p, err) => (1, format!("{}: {err}", p.display())),
                CliError::Usage(m) => (2, m.clone()),
            };
            if cli.json {
                println!("{}", json!({ "error": msg, "exit_code": code }));
            }
            eprintln!("gem: {msg}");
            ExitCode::from(code)
        }
    }
}
