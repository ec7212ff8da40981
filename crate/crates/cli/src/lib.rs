//! `tgraph`: command-line front end over `temporal-core`.
//!
//! Exit codes: 0 success or property holds, 1 property fails or nothing
//! found, 2 usage or input error, 3 an enumeration guard tripped.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use temporal_core::gadgets::{
    build_gadget_graph, max_xor_brute, reduce_maxxor_to_3, xor_satisfied_count,
};
use temporal_core::journeys::{fastest_journey, foremost_journeys, shortest_weighted_journey};
use temporal_core::labelings::{self, ConnectivityProperty};
use temporal_core::menger::{foremost_disjoint_packing, menger, multi_source_packing, DisjointnessMode};
use temporal_core::verify::{self, is_edge_kernel, kernel_witnesses, EdgeKernel};
use temporal_core::{Error, Label, Labeling, Limits, StaticGraph, TemporalGraph};

use format::{parse_cnf, parse_temporal_graph, serialize_cnf, serialize_temporal_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Environment variable overriding every node-count guard.
pub const GUARD_ENV: &str = "TG_GUARD_NODES";

#[derive(Parser, Debug)]
#[command(name = "tgraph", version, about = "Temporal graph toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Foremost journeys from a source departing no earlier than --start.
    Foremost {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        start: Label,
        #[arg(long)]
        target: Option<usize>,
    },
    /// Minimum-weight journey (needs `w=` on every edge).
    Shortest {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
    },
    /// Minimum-duration journey.
    Fastest {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
    },
    /// Maximum disjoint journeys, a minimum separator and witnesses.
    Menger {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value = "out")]
        mode: DisjointnessMode,
    },
    /// Earliest arrival of Q out-disjoint journeys.
    Pack {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(short = 'q', long)]
        q: usize,
    },
    /// Route tokens from several sources to one target.
    Tokens {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated `node:count` pairs.
        #[arg(long)]
        sources: String,
        #[arg(long)]
        target: usize,
    },
    /// Emit a labeling of the input graph (its labels are ignored).
    Label {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check a connectivity property.
    #[command(group(ArgGroup::new("input").required(true).args(["graph", "all"])))]
    Verify {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Check every `*.tg` file in a directory.
        #[arg(long)]
        all: Option<PathBuf>,
        #[arg(long)]
        property: ConnectivityProperty,
        #[arg(long)]
        age_max: Option<u32>,
    },
    /// Exact temporality or temporal cost by exhaustive search.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long)]
        property: ConnectivityProperty,
        #[arg(long)]
        age_max: Option<u32>,
    },
    /// Check whether a set of edges is an edge kernel.
    Kernel {
        #[arg(long)]
        check: PathBuf,
        /// Comma-separated `u-v` pairs.
        #[arg(long)]
        edges: String,
    },
    /// Build the gadget graph of a Max-XOR(3) formula.
    Gadget {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        emit_graph: PathBuf,
        /// Assignment as a 0/1 string, variable 1 first.
        #[arg(long, requires = "emit_labeling")]
        assign: Option<String>,
        #[arg(long, requires = "assign")]
        emit_labeling: Option<PathBuf>,
    },
    /// Max-XOR by brute force, or the three-occurrence reduction.
    #[command(group(ArgGroup::new("op").required(true).args(["reduce3", "brute"])))]
    Maxxor {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        reduce3: bool,
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scheme {
    Ring2,
    Dag,
    Reach,
    Tree,
    Tradeoff,
    BfsReach,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Metric {
    Temporality,
    Cost,
}

/// Failure carrying its exit code.
struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if e.is_guard() { EXIT_GUARD } else { EXIT_USAGE };
        Fail(code, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

fn limits_from_env() -> std::result::Result<Limits, Fail> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|n| Limits::default().with_node_limit(n))
            .map_err(|_| usage(format!("{GUARD_ENV} must be a node count, got {v:?}"))),
        Err(_) => Ok(Limits::default()),
    }
}

fn read(path: &Path) -> std::result::Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Fail> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path, err: &mut dyn Write) -> std::result::Result<TemporalGraph, Fail> {
    let parsed = parse_temporal_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    for w in parsed.warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

fn node_pairs(spec: &str) -> std::result::Result<Vec<(usize, usize)>, Fail> {
    spec.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once(['-', ':'])
                .ok_or_else(|| usage(format!("expected a pair, got {t:?}")))?;
            let a = a.trim().parse().map_err(|_| usage(format!("bad number in {t:?}")))?;
            let b = b.trim().parse().map_err(|_| usage(format!("bad number in {t:?}")))?;
            Ok((a, b))
        })
        .collect()
}

fn bool_exit(out: &mut dyn Write, ok: bool) -> Outcome {
    let _ = writeln!(out, "{ok}");
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}

fn verify_one(tg: &TemporalGraph, prop: ConnectivityProperty, age_max: Option<u32>, lim: &Limits) -> Result<bool, Error> {
    let age_ok = age_max.is_none_or(|a| tg.age().is_none_or(|x| x <= a));
    Ok(age_ok && verify::preserves(tg, prop, lim)?)
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let lim = limits_from_env()?;
    match cmd {
        Cmd::Foremost {
            graph,
            source,
            start,
            target,
        } => {
            let tg = load(&graph, err)?;
            let table = foremost_journeys(&tg, source, start)?;
            let targets: Vec<usize> = match target {
                Some(v) => vec![v],
                None => (0..tg.node_count()).filter(|&v| v != source).collect(),
            };
            let mut found = false;
            for v in targets {
                if v >= tg.node_count() {
                    return Err(usage(format!("target {v} out of range")));
                }
                if let Some(j) = table.journey_to(v) {
                    let _ = writeln!(out, "{j}");
                    found = true;
                }
            }
            Ok(if found { EXIT_OK } else { EXIT_FALSE })
        }
        Cmd::Shortest { graph, source, target } => {
            let tg = load(&graph, err)?;
            print_journey(out, shortest_weighted_journey(&tg, source, target)?.map(|j| {
                let w = j.weight(&tg).map(|w| format!(" # weight {w}")).unwrap_or_default();
                format!("{j}{w}")
            }))
        }
        Cmd::Fastest { graph, source, target } => {
            let tg = load(&graph, err)?;
            print_journey(out, fastest_journey(&tg, source, target)?.map(|j| {
                let d = j.duration().map(|d| format!(" # duration {d}")).unwrap_or_default();
                format!("{j}{d}")
            }))
        }
        Cmd::Menger {
            graph,
            source,
            target,
            mode,
        } => {
            let tg = load(&graph, err)?;
            let r = menger(&tg, source, target, mode)?;
            let _ = writeln!(out, "k {}", r.k);
            let _ = writeln!(out, "separator {}", r.separator);
            for j in &r.witnesses {
                let _ = writeln!(out, "{j}");
            }
            Ok(EXIT_OK)
        }
        Cmd::Pack {
            graph,
            source,
            target,
            q,
        } => {
            let tg = load(&graph, err)?;
            match foremost_disjoint_packing(&tg, source, target, q)? {
                Some(p) => {
                    let _ = writeln!(out, "arrival {}", p.arrival);
                    for j in &p.journeys {
                        let _ = writeln!(out, "{j}");
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    let _ = writeln!(out, "none");
                    Ok(EXIT_FALSE)
                }
            }
        }
        Cmd::Tokens {
            graph,
            sources,
            target,
        } => {
            let tg = load(&graph, err)?;
            let sources = node_pairs(&sources)?;
            match multi_source_packing(&tg, &sources, target)? {
                Some(p) => {
                    let _ = writeln!(out, "hypothesis {}", p.hypothesis_holds);
                    for j in &p.journeys {
                        let _ = writeln!(out, "{j}");
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    let _ = writeln!(out, "none");
                    Ok(EXIT_FALSE)
                }
            }
        }
        Cmd::Label { scheme, graph, k } => {
            let g = load(&graph, err)?.graph().clone();
            let labeling = label(scheme, &g, k)?;
            let tg = TemporalGraph::new(g, &labeling)?;
            let _ = write!(out, "{}", serialize_temporal_graph(&tg));
            Ok(EXIT_OK)
        }
        Cmd::Verify {
            graph,
            all,
            property,
            age_max,
        } => match (graph, all) {
            (Some(path), _) => {
                let tg = load(&path, err)?;
                bool_exit(out, verify_one(&tg, property, age_max, &lim)?)
            }
            (None, Some(dir)) => verify_dir(&dir, property, age_max, &lim, out, err),
            (None, None) => Err(usage("--graph or --all is required")),
        },
        Cmd::Oracle {
            graph,
            metric,
            property,
            age_max,
        } => {
            let g = load(&graph, err)?.graph().clone();
            let v = match metric {
                Metric::Temporality => verify::oracle_temporality(&g, property, age_max, &lim)?,
                Metric::Cost => verify::oracle_temporal_cost(&g, property, age_max, &lim)?,
            };
            match v {
                Some(v) => {
                    let _ = writeln!(out, "{v}");
                    Ok(EXIT_OK)
                }
                None => {
                    let _ = writeln!(out, "none");
                    Ok(EXIT_FALSE)
                }
            }
        }
        Cmd::Kernel { check, edges } => {
            let g = load(&check, err)?.graph().clone();
            let kernel = EdgeKernel::new(node_pairs(&edges)?);
            if is_edge_kernel(&g, &kernel, &lim)? {
                return bool_exit(out, true);
            }
            let _ = writeln!(out, "false");
            for (perm, path) in kernel_witnesses(&g, &kernel, &lim)? {
                if path.is_none() {
                    let order: Vec<String> = perm
                        .iter()
                        .map(|&i| format!("{}-{}", kernel.edges[i].0, kernel.edges[i].1))
                        .collect();
                    let _ = writeln!(out, "unrealized {}", order.join(","));
                }
            }
            Ok(EXIT_FALSE)
        }
        Cmd::Gadget {
            cnf,
            emit_graph,
            assign,
            emit_labeling,
        } => {
            let phi = parse_cnf(&read(&cnf)?)?;
            let gg = build_gadget_graph(&phi)?;
            let bare = TemporalGraph::new(gg.graph.clone(), &Labeling::new())?;
            write_file(&emit_graph, &serialize_temporal_graph(&bare))?;
            let _ = writeln!(out, "vars {}", gg.vars());
            let _ = writeln!(out, "clauses {}", gg.formula.clause_count());
            let _ = writeln!(out, "nodes {}", gg.graph.node_count());
            let _ = writeln!(out, "edges {}", gg.graph.edge_count());
            if let (Some(bits), Some(path)) = (assign, emit_labeling) {
                let tau = parse_bits(&bits)?;
                let lab = gg.labeling_from_assignment(&tau)?;
                let k = xor_satisfied_count(&gg.formula, &tau)?;
                let tg = TemporalGraph::new(gg.graph.clone(), &lab)?;
                write_file(&path, &serialize_temporal_graph(&tg))?;
                let _ = writeln!(out, "satisfied {k}");
                let _ = writeln!(out, "cost {}", lab.cost());
            }
            Ok(EXIT_OK)
        }
        Cmd::Maxxor { cnf, reduce3, brute } => {
            let phi = parse_cnf(&read(&cnf)?)?;
            if reduce3 {
                let _ = write!(out, "{}", serialize_cnf(&reduce_maxxor_to_3(&phi)));
            }
            if brute {
                let (k, tau) = max_xor_brute(&phi, &lim)?;
                let bits: String = tau.iter().map(|&b| if b { '1' } else { '0' }).collect();
                let _ = writeln!(out, "opt {k}");
                let _ = writeln!(out, "assignment {bits}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn print_journey(out: &mut dyn Write, line: Option<String>) -> Outcome {
    match line {
        Some(l) => {
            let _ = writeln!(out, "{l}");
            Ok(EXIT_OK)
        }
        None => {
            let _ = writeln!(out, "none");
            Ok(EXIT_FALSE)
        }
    }
}

fn parse_bits(bits: &str) -> std::result::Result<Vec<bool>, Fail> {
    bits.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(usage(format!("assignment must be 0/1 characters, got {c:?}"))),
        })
        .collect()
}

fn label(scheme: Scheme, g: &StaticGraph, k: Option<usize>) -> std::result::Result<Labeling, Fail> {
    let ring = || -> std::result::Result<usize, Fail> {
        let n = g.node_count();
        let want = temporal_core::graph::directed_ring(n)?;
        if g.edges() != want.edges() || !g.is_directed() {
            return Err(usage("scheme needs the directed ring 0→1→…→n−1→0"));
        }
        Ok(n)
    };
    Ok(match scheme {
        Scheme::Ring2 => labelings::label_ring_all_paths(ring()?)?,
        Scheme::Tradeoff => {
            let k = k.ok_or_else(|| usage("--k is required for tradeoff"))?;
            labelings::label_ring_tradeoff(ring()?, k)?
        }
        Scheme::Dag => labelings::label_dag_all_paths(g)?,
        Scheme::Reach => labelings::label_reach(g),
        Scheme::Tree => labelings::label_tree_all_paths(g)?,
        Scheme::BfsReach => labelings::label_reach_diameter_bfs(g)?.labeling,
    })
}

/// One line per `*.tg` file, sorted by name. Exit code is the worst seen,
/// ranked usage error > guard > false > ok.
fn verify_dir(
    dir: &Path,
    prop: ConnectivityProperty,
    age_max: Option<u32>,
    lim: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let entries = fs::read_dir(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tg"))
        .collect();
    files.sort();
    let rank = |c: i32| [EXIT_OK, EXIT_FALSE, EXIT_GUARD, EXIT_USAGE].iter().position(|&x| x == c).unwrap();
    let mut worst = EXIT_OK;
    for f in files {
        let name = f.file_name().unwrap().to_string_lossy().into_owned();
        let (code, verdict) = match load(&f, err).and_then(|tg| Ok(verify_one(&tg, prop, age_max, lim)?)) {
            Ok(true) => (EXIT_OK, "true".to_string()),
            Ok(false) => (EXIT_FALSE, "false".to_string()),
            Err(Fail(c, msg)) => (c, format!("error {msg}")),
        };
        let _ = writeln!(out, "{name} {verdict}");
        if rank(code) > rank(worst) {
            worst = code;
        }
    }
    Ok(worst)
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
