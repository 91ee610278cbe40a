use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use extremamatch::dot::to_dot;
use extremamatch::events::{events_to_poset, read_events, write_events};
use extremamatch::graph_json::GraphDocument;
use extremamatch::params::ParameterDocument;
use extremamatch::pipeline::{
    pattern_from_events, run_match, sample_parameter, sample_seeds, validate, witness_doc, TrajectoryDoc, ValidateOptions,
    DEFAULT_VERTEX_CAP,
};
use extremamatch_core::downset::poset_to_downset_graph_capped;
use extremamatch_core::rational::{parse_rational, ratio, Rational};
use extremamatch_core::simulate::{events_to_chain_poset, integrate};
use extremamatch_core::switching::{build_search_graph, check_regular, parse_network, Decomposition, EdgeRule, RegulatoryNetwork, SampleRanges};

/// `poset show` prints exact linear-extension counts up to this size.
const EXTENSION_LIMIT: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "extremamatch", version, about = "Match extrema sequences from time series against switching-system network models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pattern graphs from interval tables of extrema
    #[command(subcommand)]
    Pattern(PatternCmd),
    /// Search graphs from a network and a parameter
    #[command(subcommand)]
    Search(SearchCmd),
    /// Decide whether a pattern graph is matched by a search graph
    Match(MatchArgs),
    /// Match data against many sampled regular parameters of a network
    Validate(ValidateArgs),
    /// Integrate the switching ODE from a start point
    Simulate(SimulateArgs),
    /// Parameters
    #[command(subcommand)]
    Param(ParamCmd),
    /// Posets of extrema
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Export graphs
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Subcommand)]
enum PatternCmd {
    Build {
        events: PathBuf,
        /// Order variables as the nodes of this network
        #[arg(long)]
        network: Option<PathBuf>,
        /// Abort when the down-set graph would exceed this many vertices
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    Build {
        network: PathBuf,
        param: PathBuf,
        #[arg(long, default_value = "existential")]
        edge_rule: EdgeRule,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct MatchArgs {
    pattern: PathBuf,
    search: PathBuf,
    /// Require the search path to return to its start
    #[arg(long)]
    cycle: bool,
    /// Write the matching path pair here
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Pattern start vertex (default: meta root)
    #[arg(long)]
    from: Option<String>,
    /// Pattern end vertex (default: meta leaf)
    #[arg(long)]
    to: Option<String>,
}

#[derive(Args)]
struct RangeArgs {
    /// Lower end of every sampling range
    #[arg(long, default_value = "0.1")]
    range_lo: String,
    /// Upper end of every sampling range
    #[arg(long, default_value = "10")]
    range_hi: String,
    /// Decimal places kept in sampled values
    #[arg(long, default_value_t = 3)]
    decimals: u32,
}

impl RangeArgs {
    fn ranges(&self) -> Result<SampleRanges> {
        let lo = parse_rational(&self.range_lo).map_err(|e| anyhow!("--range-lo: {e}"))?;
        let hi = parse_rational(&self.range_hi).map_err(|e| anyhow!("--range-hi: {e}"))?;
        if lo <= ratio(0, 1) || lo > hi {
            bail!("sampling range must satisfy 0 < lo <= hi");
        }
        let r = (lo, hi);
        Ok(SampleRanges {
            gamma: r.clone(),
            low: r.clone(),
            high: r.clone(),
            theta: r,
            decimals: self.decimals,
            ..SampleRanges::default()
        })
    }
}

#[derive(Args)]
struct ValidateArgs {
    network: PathBuf,
    events: PathBuf,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "existential")]
    edge_rule: EdgeRule,
    #[arg(long)]
    cycle: bool,
    #[command(flatten)]
    ranges: RangeArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    network: PathBuf,
    param: PathBuf,
    /// Start point, comma separated, one value per node
    #[arg(long)]
    x0: String,
    #[arg(long, default_value_t = 50)]
    max_crossings: usize,
    /// Also write the events as an interval table
    #[arg(long)]
    events_out: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ParamCmd {
    Sample {
        network: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        ranges: RangeArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    Show { events: PathBuf },
}

#[derive(Subcommand)]
enum ExportCmd {
    Dot {
        graph: PathBuf,
        #[arg(long, default_value = "G")]
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn network(path: &Path) -> Result<RegulatoryNetwork> {
    parse_network(&read(path)?).with_context(|| format!("parsing network {}", path.display()))
}

fn regular_parameter(rn: &RegulatoryNetwork, path: &Path) -> Result<extremamatch_core::switching::Parameter> {
    let z = ParameterDocument::parse(&read(path)?)?.to_parameter(rn)?;
    if let Err(violations) = check_regular(rn, &z) {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        bail!("parameter is not regular:\n  {}", lines.join("\n  "));
    }
    Ok(z)
}

fn vertex(g: &extremamatch_core::LabeledDigraph, given: Option<&String>, meta: Option<&String>, what: &str) -> Result<usize> {
    let id = given.or(meta).ok_or_else(|| anyhow!("pattern has no {what} in meta; pass --{}", if what == "root" { "from" } else { "to" }))?;
    g.index_of(id).ok_or_else(|| anyhow!("pattern has no vertex `{id}`"))
}

/// `Ok(true)` maps to success, `Ok(false)` to a clean negative answer.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Pattern(PatternCmd::Build { events, network: net, cap, output }) => {
            let order = net.as_deref().map(network).transpose()?;
            let p = pattern_from_events(&read(&events)?, order.as_ref().map(|rn| rn.nodes()), cap)?;
            log::info!("pattern graph: {} vertices, {} edges", p.graph().vertex_count(), p.graph().edge_count());
            emit(output.as_deref(), &GraphDocument::from_pattern(&p).to_json())?;
        }
        Command::Search(SearchCmd::Build { network: net, param, edge_rule, output }) => {
            let rn = network(&net)?;
            let z = regular_parameter(&rn, &param)?;
            let s = build_search_graph(&rn, &z, edge_rule)?;
            emit(output.as_deref(), &GraphDocument::from_search(&s, rn.nodes()).to_json())?;
        }
        Command::Match(args) => {
            let pdoc = GraphDocument::parse(&read(&args.pattern)?)?;
            let sdoc = GraphDocument::parse(&read(&args.search)?)?;
            if pdoc.variables != sdoc.variables {
                bail!("variable order differs: pattern {:?}, search {:?}", pdoc.variables, sdoc.variables);
            }
            let (p, s) = (pdoc.graph()?, sdoc.graph()?);
            let from = vertex(&p, args.from.as_ref(), pdoc.meta.root.as_ref(), "root")?;
            let to = vertex(&p, args.to.as_ref(), pdoc.meta.leaf.as_ref(), "leaf")?;
            let start = Instant::now();
            let found = run_match(&p, &s, from, to, args.cycle)?;
            log::info!("matching took {:?}", start.elapsed());
            let summary = found.as_ref().map(|w| witness_doc(&p, &s, w, args.cycle));
            if let (Some(path), Some(w)) = (&args.witness, &summary) {
                fs::write(path, json(w)).with_context(|| format!("writing {}", path.display()))?;
            }
            let mode = if args.cycle { "cycle" } else { "path" };
            print!("{}", json(&serde_json::json!({ "matched": summary.is_some(), "mode": mode, "witness": summary })));
            return Ok(found.is_some());
        }
        Command::Validate(args) => {
            let opts = ValidateOptions {
                samples: args.samples,
                seed: args.seed,
                rule: args.edge_rule,
                cycle: args.cycle,
                ranges: args.ranges.ranges()?,
            };
            let start = Instant::now();
            let report = validate(&read(&args.network)?, &read(&args.events)?, &opts)?;
            eprintln!("validate: {} of {} samples matched in {:.2?}", report.matches, report.samples, start.elapsed());
            emit(args.output.as_deref(), &json(&report))?;
        }
        Command::Simulate(args) => {
            let rn = network(&args.network)?;
            let z = regular_parameter(&rn, &args.param)?;
            let x0: Vec<Rational> = args
                .x0
                .split(',')
                .map(|t| parse_rational(t.trim()).map_err(|e| anyhow!("--x0 `{t}`: {e}")))
                .collect::<Result<_>>()?;
            let rec = integrate(&rn, &z, &x0, args.max_crossings)?;
            if let Some(path) = &args.events_out {
                let poset = events_to_chain_poset(&rn, &rec)?;
                fs::write(path, write_events(poset.events())).with_context(|| format!("writing {}", path.display()))?;
            }
            let dec = Decomposition::new(&rn, &z);
            emit(args.output.as_deref(), &json(&TrajectoryDoc::new(&rn, &dec, &rec)))?;
        }
        Command::Param(ParamCmd::Sample { network: net, seed, ranges, output }) => {
            let rn = network(&net)?;
            let seed = sample_seeds(seed, 1)[0];
            let z = sample_parameter(&rn, seed, &ranges.ranges()?)?;
            emit(output.as_deref(), &ParameterDocument::from_parameter(&rn, &z).to_json())?;
        }
        Command::Poset(PosetCmd::Show { events }) => {
            let poset = events_to_poset(read_events(read(&events)?.as_bytes())?, None)?;
            let order = poset.order();
            println!("elements: {}", order.len());
            println!("relations: {}", order.relation_count());
            println!("width: {}", order.width());
            match poset_to_downset_graph_capped(order, DEFAULT_VERTEX_CAP) {
                Ok(g) => {
                    println!("down sets: {}", g.vertex_count());
                    let count = g.count_root_leaf_paths();
                    if count <= EXTENSION_LIMIT.into() {
                        println!("linear extensions: {count}");
                    } else {
                        println!("linear extensions: more than {EXTENSION_LIMIT}");
                    }
                }
                Err(e) => println!("down sets: not enumerated ({e})"),
            }
        }
        Command::Export(ExportCmd::Dot { graph, name, output }) => {
            let doc = GraphDocument::parse(&read(&graph)?)?;
            doc.graph()?;
            emit(output.as_deref(), &to_dot(&doc, &name))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("EXTREMAMATCH_LOG", "warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
