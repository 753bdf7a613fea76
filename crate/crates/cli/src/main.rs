use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use cutpoly::classify::classify;
use cutpoly::generate::{gen_k33free, ComponentKind, GeneratorSpec};
use cutpoly::graph::parse_graph;
use cutpoly::maxcut::{maxcut_bruteforce, maxcut_with, LeafOrder};
use cutpoly::polytope::{brute_hull, facet_description, InequalitySystem};
use cutpoly::spqr::{k33_decompose, EdgeKind};
use cutpoly::verify::verify;
use cutpoly::{Error, Graph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cutpoly",
    version,
    about = "MaxCut and cut polytopes of K3,3-minor-free graphs"
)]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum cut value, optionally with a witness side.
    Maxcut {
        file: PathBuf,
        /// Enumerate all cuts instead.
        #[arg(long)]
        brute: bool,
        /// Also print the node set of one side (1-indexed).
        #[arg(long)]
        witness: bool,
        /// Eliminate SPR leaves in a seeded random order.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Blocks, SPR-trees and component classes.
    Decompose { file: PathBuf },
    /// Complete facet list of the cut polytope.
    Facets {
        file: PathBuf,
        /// Convex hull of all cuts instead.
        #[arg(long)]
        brute: bool,
    },
    /// Whether the cut polytope is simple and/or simplicial.
    Classify {
        file: PathBuf,
        /// Read the verdicts off the convex hull instead.
        #[arg(long)]
        brute: bool,
    },
    /// Cross-check every solver against its brute-force oracle.
    Verify {
        file: PathBuf,
        /// A facet file to compare with the computed description.
        facets: Option<PathBuf>,
    },
    /// Random K3,3-minor-free graph from 2-sums of K5 and planar triangulations.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated kinds: `k5` or `tri:<min>-<max>`.
        #[arg(long, default_value = "k5")]
        components: String,
        /// Delete the glued edge of every 2-sum.
        #[arg(long)]
        non_strict: bool,
        /// Probability of deleting each further edge.
        #[arg(long, default_value_t = 0.0)]
        delete: f64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        wmin: i64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        wmax: i64,
    },
}

enum Outcome {
    Ok(String),
    Mismatch(String),
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_indexed(nodes: &[usize]) -> String {
    nodes.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn parse_components(s: &str) -> anyhow::Result<Vec<ComponentKind>> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            if part == "k5" {
                return Ok(ComponentKind::K5);
            }
            let Some(range) = part.strip_prefix("tri:") else {
                bail!("unknown component kind {part:?}");
            };
            let (a, b) = range.split_once('-').context("expected tri:<min>-<max>")?;
            Ok(ComponentKind::Triangulation {
                min_nodes: a.parse()?,
                max_nodes: b.parse()?,
            })
        })
        .collect()
}

fn cmd_maxcut(g: &Graph, brute: bool, witness: bool, seed: Option<u64>) -> anyhow::Result<String> {
    let r = if brute {
        maxcut_bruteforce(g)?
    } else {
        maxcut_with(g, seed.map_or(LeafOrder::LowestId, LeafOrder::Shuffled))?
    };
    let mut out = format!("value {}\n", r.value);
    if witness {
        let side: Vec<String> = r.cut.side_nodes().iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "side {}", side.join(" "))?;
    }
    Ok(out)
}

fn cmd_decompose(g: &Graph) -> anyhow::Result<String> {
    let d = k33_decompose(g);
    let mut out = String::new();
    writeln!(out, "k33-minor-free {}", yes_no(d.is_k33_minor_free))?;
    writeln!(out, "maximal {}", yes_no(d.is_maximal))?;
    if let Some(w) = &d.witness {
        writeln!(out, "witness nodes={}", one_indexed(w))?;
    }
    for (bi, (block, tree)) in d.blocks.iter().zip(&d.trees).enumerate() {
        let Some(tree) = tree else {
            writeln!(out, "block {bi} bridge edges={}", block.edges[0])?;
            continue;
        };
        writeln!(out, "block {bi} nodes={}", one_indexed(&block.nodes))?;
        for (id, node) in tree.nodes.iter().enumerate() {
            let edges: Vec<String> = node
                .skeleton
                .edges
                .iter()
                .map(|e| match e.kind {
                    EdgeKind::Original(i) => format!("e{i}"),
                    EdgeKind::Virtual(p) => format!("v{p}"),
                })
                .collect();
            writeln!(
                out,
                "node {id} kind={} nodes={} edges={}",
                node.kind,
                one_indexed(&node.skeleton.nodes),
                edges.join(",")
            )?;
        }
        for t in &tree.tree_edges {
            writeln!(out, "tree {} {} via {}", t.a, t.b, t.pair)?;
        }
    }
    for c in &d.components {
        let node = c.tree_node.map_or("-".to_string(), |n| n.to_string());
        writeln!(
            out,
            "component block={} node={node} class={:?} nodes={}",
            c.block,
            c.class,
            one_indexed(&c.nodes)
        )?;
    }
    Ok(out)
}

fn cmd_classify(g: &Graph, brute: bool) -> anyhow::Result<String> {
    let mut out = String::new();
    if brute {
        let (simple, simplicial) = cutpoly::classify::brute_classify(&g.without_isolated().0)?;
        writeln!(out, "simple {}", yes_no(simple))?;
        writeln!(out, "simplicial {}", yes_no(simplicial))?;
        writeln!(out, "reason vertex-facet incidences of the hull")?;
        return Ok(out);
    }
    let r = classify(g);
    writeln!(out, "simple {}", yes_no(r.simple))?;
    writeln!(out, "simplicial {}", yes_no(r.simplicial))?;
    writeln!(out, "reason simple: {}", r.simple_reason)?;
    writeln!(out, "reason simplicial: {}", r.simplicial_reason)?;
    Ok(out)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let text = match &cli.command {
        Command::Maxcut {
            file,
            brute,
            witness,
            seed,
        } => cmd_maxcut(&read_graph(file)?, *brute, *witness, *seed)?,
        Command::Decompose { file } => cmd_decompose(&read_graph(file)?)?,
        Command::Facets { file, brute } => {
            let g = read_graph(file)?;
            let sys = if *brute {
                brute_hull(&cutpoly::graph::enumerate_cuts(&g)?)?
            } else {
                facet_description(&g)?
            };
            sys.to_text()
        }
        Command::Classify { file, brute } => cmd_classify(&read_graph(file)?, *brute)?,
        Command::Verify { file, facets } => {
            let g = read_graph(file)?;
            let given = match facets {
                Some(p) => {
                    let t = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    Some(InequalitySystem::parse_text(&t).with_context(|| format!("parsing {}", p.display()))?)
                }
                None => None,
            };
            let report = verify(&g, given.as_ref())?;
            let text = format!("{report}\n");
            if !report.passed() {
                return Ok(Outcome::Mismatch(text));
            }
            text
        }
        Command::Gen {
            seed,
            components,
            non_strict,
            delete,
            wmin,
            wmax,
        } => {
            let mut spec = GeneratorSpec::new(*seed, parse_components(components)?);
            spec.strict = !non_strict;
            spec.deletion_probability = *delete;
            spec.weight_range = (*wmin, *wmax);
            gen_k33free(&spec)?.to_text()
        }
    };
    Ok(Outcome::Ok(text))
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Outcome::Ok(t)) => (t, 0),
        Ok(Outcome::Mismatch(t)) => (t, EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            let unsupported = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::HasK33Minor { .. } | Error::UnsupportedClass { .. })
            );
            return ExitCode::from(if unsupported { EXIT_UNSUPPORTED } else { EXIT_INPUT });
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(code)
}
