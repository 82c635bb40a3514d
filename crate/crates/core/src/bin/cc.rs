use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cc_core::clustering::{edge_add_delta, graph_cc, local_ccs};
use cc_core::enumeration::{enumerate_forms, enumerate_forms_with_workers, DegreeConstraint};
use cc_core::generators::{caveman, caveman_rewired, family_b, g_kl, BSkeleton};
use cc_core::harness::{
    verify_caveman_rewire, verify_theorem1, verify_theorem23, verify_theorem4, TheoremReport,
};
use cc_core::structure::{blocks, classify_block, graph_type, is_in_b, is_in_b0, s_set, BlockKind};
use cc_core::{parse_graph6, to_graph6, Graph, GraphType};

/// Exact clustering coefficients and exhaustive checks of clustering bounds.
#[derive(Parser)]
#[command(name = "cc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clustering coefficient of each graph6 line.
    Compute {
        /// Also print each local coefficient.
        #[arg(long)]
        per_vertex: bool,
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Change of the clustering coefficient when adding edge uv.
    Delta {
        #[arg(short)]
        u: usize,
        #[arg(short)]
        v: usize,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Construct a graph and print it as graph6.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Block structure and family membership, one JSON object per graph.
    Classify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// All graphs of order n up to isomorphism, as sorted canonical graph6.
    Enumerate(EnumerateArgs),
    /// Exhaustively check one of the bounds.
    Verify {
        which: Theorem,
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short = 'l')]
        ell: Option<usize>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// The k-regular ring of l copies of K_(k+1) - e.
    Gkl(KL),
    /// The connected caveman graph.
    Caveman(KL),
    /// The caveman graph with one edge moved inside the first copy.
    CavemanRewired(KL),
    /// A member of the subcubic extremal family built from a marked tree.
    FamilyB {
        #[arg(long)]
        skeleton: PathBuf,
    },
}

#[derive(Args)]
struct KL {
    #[arg(short)]
    k: usize,
    #[arg(short = 'l')]
    ell: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(short)]
    n: usize,
    #[arg(long, conflicts_with = "regular")]
    max_deg: Option<usize>,
    #[arg(long)]
    regular: Option<usize>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    count_only: bool,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    T1,
    T23,
    T4,
    Caveman,
}

fn open(input: &str) -> anyhow::Result<Box<dyn BufRead>> {
    if input == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let f = File::open(input).with_context(|| format!("cannot open {input}"))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

/// Calls `f` with each non-empty input line and its parsed graph.
fn for_each_graph(
    input: &str,
    mut f: impl FnMut(&str, &Graph) -> anyhow::Result<()>,
) -> anyhow::Result<()> {
    for (i, line) in open(input)?.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).with_context(|| format!("line {}", i + 1))?;
        f(line, &g)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Classification {
    graph6: String,
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_kinds: Vec<&'static str>,
    cut_vertices: Vec<usize>,
    #[serde(rename = "type")]
    ty: GraphType,
    all_blocks_basic: bool,
    s_set: Vec<usize>,
    /// Family membership is only defined for order at least 6.
    in_b0: Option<bool>,
    in_b: Option<bool>,
}

fn kind_name(kind: BlockKind) -> &'static str {
    match kind {
        BlockKind::K2 => "K2",
        BlockKind::K3 => "K3",
        BlockKind::Diamond => "diamond",
        BlockKind::Other => "other",
    }
}

fn classify(line: &str, g: &Graph) -> anyhow::Result<Classification> {
    let dec = blocks(g)?;
    let block_kinds = dec
        .blocks
        .iter()
        .map(|b| classify_block(g, b).map(kind_name))
        .collect::<cc_core::Result<_>>()?;
    let summary = graph_type(g)?;
    let (in_b0, in_b) = if g.order() >= 6 {
        (Some(is_in_b0(g)?), Some(is_in_b(g)?))
    } else {
        (None, None)
    };
    Ok(Classification {
        graph6: line.to_string(),
        n: g.order(),
        blocks: dec.blocks.clone(),
        block_kinds,
        cut_vertices: dec.cut_vertices.clone(),
        ty: summary.ty,
        all_blocks_basic: summary.all_blocks_basic,
        s_set: s_set(g),
        in_b0,
        in_b,
    })
}

fn report(
    which: Theorem,
    k: Option<usize>,
    n: Option<usize>,
    ell: Option<usize>,
) -> anyhow::Result<TheoremReport> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("missing -{flag}"));
    Ok(match which {
        Theorem::T1 => verify_theorem1(need(k, "k")?, need(n, "n")?)?,
        Theorem::T23 => verify_theorem23(need(n, "n")?)?,
        Theorem::T4 => verify_theorem4(need(n, "n")?)?,
        Theorem::Caveman => verify_caveman_rewire(need(k, "k")?, need(ell, "l")?)?,
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Compute { per_vertex, input } => {
            for_each_graph(&input, |line, g| {
                let c = graph_cc(g)?;
                writeln!(out, "{line} {c} {}", c.to_decimal())?;
                if per_vertex {
                    for (u, cu) in local_ccs(g).iter().enumerate() {
                        writeln!(out, "  {u} {cu} {}", cu.to_decimal())?;
                    }
                }
                Ok(())
            })?;
        }
        Command::Delta { u, v, input } => {
            for_each_graph(&input, |line, g| {
                let d = edge_add_delta(g, u, v)?;
                writeln!(out, "{line} {d} {}", d.to_decimal())?;
                Ok(())
            })?;
        }
        Command::Gen { family } => {
            let g = match family {
                GenFamily::Gkl(p) => g_kl(p.k, p.ell)?,
                GenFamily::Caveman(p) => caveman(p.k, p.ell)?,
                GenFamily::CavemanRewired(p) => caveman_rewired(p.k, p.ell)?,
                GenFamily::FamilyB { skeleton } => {
                    let text = std::fs::read_to_string(&skeleton)
                        .with_context(|| format!("cannot read {}", skeleton.display()))?;
                    let sk: BSkeleton = serde_json::from_str(&text).context("invalid skeleton")?;
                    family_b(&sk)?
                }
            };
            writeln!(out, "{}", to_graph6(&g)?)?;
        }
        Command::Classify { input } => {
            for_each_graph(&input, |line, g| {
                let c = classify(line, g).with_context(|| format!("cannot classify {line}"))?;
                writeln!(out, "{}", serde_json::to_string(&c)?)?;
                Ok(())
            })?;
        }
        Command::Enumerate(args) => {
            let mut c = match (args.max_deg, args.regular) {
                (Some(d), None) => DegreeConstraint::max_degree(d),
                (None, Some(k)) => DegreeConstraint::regular(k),
                (None, None) => DegreeConstraint::any(),
                (Some(_), Some(_)) => bail!("--max-deg and --regular are exclusive"),
            };
            if args.connected {
                c = c.connected();
            }
            let forms = match args.workers {
                Some(w) => enumerate_forms_with_workers(args.n, c, w)?,
                None => enumerate_forms(args.n, c)?,
            };
            if args.count_only {
                writeln!(out, "{}", forms.len())?;
            } else {
                for f in forms {
                    writeln!(out, "{f}")?;
                }
            }
        }
        Command::Verify {
            which,
            k,
            n,
            ell,
            json,
        } => {
            let r = report(which, k, n, ell)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else {
                write!(out, "{}", r.summary())?;
            }
            out.flush()?;
            return Ok(r.passed());
        }
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
