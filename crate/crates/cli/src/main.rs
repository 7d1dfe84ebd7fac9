use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gencol::constructions::families;
use gencol::constructions::{run_adversary, AdversaryConfig, DominationMode, GoodMode};
use gencol::graph::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use gencol::report::{cmd_param, cmd_solve, cmd_verify, Inputs, Report, SolveOp, Status, VerifyCaps};
use gencol::solvers::Caps;
use gencol::suites::{all_graphs, cmd_lemma, cmd_question, Question, Suite, SuiteConfig};
use gencol::{Builtin, Error, Graph, Rational};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "gencol", version, about = "Generalized (f,p)-proper colorings with checkable certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; tables are a view of the JSON report.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Record wall time in the report (reports are then no longer reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a graph parameter.
    Param {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        f: String,
    },
    /// Run a solver: chi, choosable, col or island.
    Solve {
        op: String,
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        f: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Emit a graph as graph6 or an edge list.
    Generate {
        /// A named graph (petersen, robertson, C5, K3,3, fan9, fanjoin:2,
        /// pathpower:12:3), `bipartite` or `gnp`.
        kind: String,
        /// Part size (bipartite) or order (gnp).
        #[arg(long)]
        n: Option<usize>,
        /// Expected degree for bipartite, as an integer or a/b.
        #[arg(long)]
        d: Option<String>,
        /// Edge probability for gnp, as a/b.
        #[arg(long)]
        prob: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Run the adversarial list pipeline and report its conditions.
    Adversary {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check condition (c) on this many random subsets instead of all.
        #[arg(long)]
        good_trials: Option<usize>,
        /// Largest list size with exact condition (c).
        #[arg(long, default_value_t = 3)]
        cap_good_s: usize,
        /// Random colorings of B when exact domination is out of reach.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Largest number of colorings of B enumerated exactly.
        #[arg(long, default_value_t = 1_000_000)]
        cap_domination: u64,
        /// Random extended list colorings searched for a dense monochromatic subgraph.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Re-check the certificate in a report file.
    Verify {
        report: PathBuf,
        /// Largest vertex set searched exhaustively for islands.
        #[arg(long, default_value_t = 16)]
        cap_exhaustive_n: usize,
        /// Largest number of list colorings enumerated.
        #[arg(long, default_value_t = 1_000_000)]
        cap_colorings: u64,
    },
    /// Run a check suite: lemma1, nofan, addit, path, coldens, mindeg,
    /// estim, pipeline, identity or peeling.
    Lemma {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        graphs: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        smax: Option<usize>,
    },
    /// Search small graphs for violations of q1 or q2.
    Question {
        question: String,
        /// All graphs up to this order, one per isomorphism class.
        #[arg(long, conflicts_with = "graph6_file")]
        max_n: Option<usize>,
        /// File with one graph6 string per line.
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        p_min: u64,
        #[arg(long, default_value_t = 2)]
        p_max: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct GraphSource {
    /// Edge-list file.
    #[arg(long, group = "source")]
    graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long, group = "source")]
    graph6: Option<String>,
    /// Named graph.
    #[arg(long, group = "source")]
    named: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.graph {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(from_edge_list(&text)?);
        }
        if let Some(g6) = &self.graph6 {
            return Ok(from_graph6(g6)?);
        }
        if let Some(name) = &self.named {
            return Ok(families::named(name)?);
        }
        Err(usage("a graph is required: --graph FILE, --graph6 STRING or --named NAME"))
    }
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, default_value_t = Caps::default().chi_n)]
    cap_chi_n: usize,
    #[arg(long, default_value_t = Caps::default().choose_n)]
    cap_choose_n: usize,
    #[arg(long, default_value_t = Caps::default().choose_s)]
    cap_choose_s: usize,
    #[arg(long, default_value_t = Caps::default().col_n)]
    cap_col_n: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            chi_n: self.cap_chi_n,
            choose_n: self.cap_choose_n,
            choose_s: self.cap_choose_s,
            col_n: self.cap_col_n,
        }
    }
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::Precondition(msg.into()).into()
}

fn parse_rational(text: &str) -> Result<Rational> {
    let (a, b) = text.split_once('/').unwrap_or((text, "1"));
    let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
    if b == 0 {
        bail!(usage(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(a, b))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Param { graph, f } => Ok(cmd_param(&graph.load()?, f.parse::<Builtin>()?)?),
        Command::Solve {
            op,
            graph,
            f,
            p,
            s,
            caps,
        } => Ok(cmd_solve(
            &graph.load()?,
            op.parse::<SolveOp>()?,
            f.parse()?,
            *p,
            *s,
            &caps.caps(),
        )?),
        Command::Generate {
            kind,
            n,
            d,
            prob,
            seed,
            emit,
        } => {
            let g = match kind.as_str() {
                "bipartite" => {
                    let n = n.ok_or_else(|| usage("bipartite needs --n"))?;
                    let d = parse_rational(d.as_deref().ok_or_else(|| usage("bipartite needs --d"))?)?;
                    families::random_bipartite(n, d, *seed)?
                }
                "gnp" => {
                    let n = n.ok_or_else(|| usage("gnp needs --n"))?;
                    let prob = parse_rational(prob.as_deref().ok_or_else(|| usage("gnp needs --prob"))?)?;
                    families::random_gnp(n, prob, *seed)?
                }
                name => families::named(name)?,
            };
            let text = match emit {
                Emit::Graph6 => to_graph6(&g),
                Emit::EdgeList => to_edge_list(&g),
            };
            let inputs = Inputs::for_graph(&g).param("kind", kind).param("seed", seed);
            Ok(Report::new(
                "generate",
                inputs,
                json!({ "n": g.n(), "edges": g.edge_count(), "text": text }),
            ))
        }
        Command::Adversary {
            graph,
            s,
            k,
            d,
            seed,
            good_trials,
            cap_good_s,
            samples,
            cap_domination,
            trials,
        } => {
            let g = graph.load()?;
            let mut cfg = AdversaryConfig::new(*s, *k, *d, *seed);
            cfg.good = match good_trials {
                Some(t) => GoodMode::Sampled { trials: *t, seed: *seed },
                None => GoodMode::Exact { cap_s: *cap_good_s },
            };
            cfg.domination = DominationMode::Sampled {
                samples: *samples,
                seed: *seed,
            };
            cfg.exact_domination_cap = *cap_domination;
            cfg.extensions = *trials;
            let state = run_adversary(&g, &cfg)?;
            let mut inputs = Inputs::for_graph(&g).param("config", &cfg);
            inputs.seeds = vec![*seed];
            let mut r = Report::new("adversary", inputs, serde_json::to_value(&state)?);
            r.status = if state.estimate { Status::Estimate } else { Status::Exact };
            Ok(r)
        }
        Command::Verify {
            report,
            cap_exhaustive_n,
            cap_colorings,
        } => {
            let text = fs::read_to_string(report).with_context(|| format!("reading {}", report.display()))?;
            let parsed: Report = serde_json::from_str(&text).map_err(|e| Error::Certificate(format!("malformed report: {e}")))?;
            let caps = VerifyCaps {
                exhaustive_n: *cap_exhaustive_n,
                colorings: *cap_colorings,
            };
            Ok(cmd_verify(&parsed, &caps)?)
        }
        Command::Lemma {
            suite,
            seed,
            trials,
            graphs,
            i,
            t,
            n,
            smax,
        } => {
            let cfg = SuiteConfig {
                seed: *seed,
                trials: *trials,
                graphs: *graphs,
                i: *i,
                t: *t,
                n: *n,
                smax: *smax,
            };
            Ok(cmd_lemma(suite.parse::<Suite>()?, &cfg)?)
        }
        Command::Question {
            question,
            max_n,
            graph6_file,
            p_min,
            p_max,
            caps,
        } => {
            let q: Question = question.parse()?;
            let graphs = match (max_n, graph6_file) {
                (_, Some(path)) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .map(from_graph6)
                        .collect::<gencol::Result<Vec<_>>>()?
                }
                (max_n, None) => {
                    let mut all = Vec::new();
                    for n in 1..=max_n.unwrap_or(5) {
                        all.extend(all_graphs(n)?);
                    }
                    all
                }
            };
            if p_min > p_max || *p_min == 0 {
                bail!(usage("need 1 <= --p-min <= --p-max"));
            }
            Ok(cmd_question(q, &graphs, (*p_min, *p_max), &caps.caps())?)
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Flat view: scalars as `key: value`, arrays of objects as tables.
fn render_table(r: &Report) -> String {
    let mut out = format!("command: {}\nstatus: {:?}\npass: {}\n", r.command, r.status, r.pass);
    let Value::Object(map) = &r.result else {
        out.push_str(&format!("result: {}\n", scalar(&r.result)));
        return out;
    };
    for (key, value) in map {
        match value {
            Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                let cols: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
                out.push_str(&format!("{key}:\n  {}\n", cols.join("\t")));
                for row in rows {
                    let cells: Vec<String> = cols.iter().map(|c| scalar(&row[c])).collect();
                    out.push_str(&format!("  {}\n", cells.join("\t")));
                }
            }
            Value::Object(_) | Value::Array(_) => out.push_str(&format!("{key}: {value}\n")),
            _ => out.push_str(&format!("{key}: {}\n", scalar(value))),
        }
    }
    out
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => EXIT_CAP,
        Some(Error::Certificate(msg)) if msg.contains("unverifiable at cap") => EXIT_CAP,
        Some(Error::Certificate(_)) | Some(Error::Unbounded(_)) => EXIT_FAIL,
        Some(_) => EXIT_USAGE,
        None if err.downcast_ref::<std::io::Error>().is_some() => EXIT_USAGE,
        None if err.downcast_ref::<std::num::ParseIntError>().is_some() => EXIT_USAGE,
        None => EXIT_FAIL,
    }
}

/// What one invocation prints and how it exits.
struct Outcome {
    code: u8,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn error(code: u8, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut report = match run(cli) {
        Ok(r) => r,
        Err(e) => return Outcome::error(exit_code(&e), format!("error: {e:#}\n")),
    };
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Table => render_table(&report),
    };
    let stdout = match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                return Outcome::error(EXIT_USAGE, format!("error: writing {}: {e}\n", path.display()));
            }
            String::new()
        }
        None => text,
    };
    Outcome {
        code: if report.pass { 0 } else { EXIT_FAIL },
        stdout,
        stderr: String::new(),
    }
}

fn main() -> ExitCode {
    let outcome = execute(&Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code)
}

#[cfg(test)]
mod tests;
