//! `modcompl`: complement Büchi automata given in HOA format.
//!
//! Exit codes: 0 success, 1 failed check or other error, 2 unreadable or
//! unparsable input, 3 rank enumeration cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modcompl::check::{find_disagreement, lassos, Lasso};
use modcompl::framework::prepare;
use modcompl::hoa::{parse_hoa, to_hoa};
use modcompl::{
    complement, BuchiIndex, Error, NacAlgorithm, Options, PartitionPolicy, Partitioning, SinkMode, Strategy, Tela,
};
use serde::Serialize;

const STATS_SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "modcompl", version, about = "Modular complementation of Büchi automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complement a Büchi automaton and print the result as HOA.
    Complement {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        opts: ConstructionArgs,
        /// Print a JSON line with statistics to standard error.
        #[arg(long)]
        stats: bool,
        /// Write the complement here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the SCC classification and the chosen partitioning.
    Classify {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = PartitionArg::Default)]
        partition: PartitionArg,
        /// Treat initially deterministic blocks as plain DAC blocks.
        #[arg(long)]
        no_idac: bool,
    },
    /// Compare an automaton with its complements on all short lasso words.
    Check {
        input: Option<PathBuf>,
        #[command(flatten)]
        opts: ConstructionArgs,
        /// Strategies to check; all of them when not given.
        #[arg(long = "check-strategy", value_enum)]
        strategies: Vec<StrategyArg>,
        /// Check this automaton instead of computing complements.
        #[arg(long)]
        complement: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_prefix: usize,
        #[arg(long, default_value_t = 3)]
        max_period: usize,
    },
}

#[derive(Args)]
struct ConstructionArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Sync)]
    strategy: StrategyArg,
    #[arg(long, value_enum, default_value_t = PartitionArg::Default)]
    partition: PartitionArg,
    #[arg(long, value_enum, default_value_t = NacArg::Rank)]
    nac: NacArg,
    /// One breakpoint for all IWC and DAC blocks.
    #[arg(long)]
    shared_breakpoint: bool,
    /// Turn off simulation-based pruning of reached sets.
    #[arg(long)]
    no_sim_pruning: bool,
    #[arg(long, value_enum, default_value_t = SinkArg::CompleteInput)]
    sink: SinkArg,
    /// Treat initially deterministic blocks as plain DAC blocks.
    #[arg(long)]
    no_idac: bool,
    /// Largest number of rankings a single lift may produce.
    #[arg(long)]
    lift_cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Sync,
    Postponed,
    Rr,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionArg {
    Default,
    PerScc,
    MergeAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum NacArg {
    Rank,
}

#[derive(Clone, Copy, ValueEnum)]
enum SinkArg {
    CompleteInput,
    AcceptingSink,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Sync => Strategy::Sync,
            StrategyArg::Postponed => Strategy::Postponed,
            StrategyArg::Rr => Strategy::RoundRobin,
        }
    }
}

impl From<PartitionArg> for PartitionPolicy {
    fn from(p: PartitionArg) -> Self {
        match p {
            PartitionArg::Default => PartitionPolicy::Default,
            PartitionArg::PerScc => PartitionPolicy::PerScc,
            PartitionArg::MergeAll => PartitionPolicy::MergeAll,
        }
    }
}

impl ConstructionArgs {
    fn options(&self) -> Options {
        let defaults = Options::default();
        Options {
            strategy: self.strategy.into(),
            partition: self.partition.into(),
            use_idac: !self.no_idac,
            shared_breakpoint: self.shared_breakpoint,
            simulation_pruning: !self.no_sim_pruning,
            sink: match self.sink {
                SinkArg::CompleteInput => SinkMode::CompleteInput,
                SinkArg::AcceptingSink => SinkMode::AcceptingSink,
            },
            nac: match self.nac {
                NacArg::Rank => NacAlgorithm::Rank,
            },
            lift_cap: self.lift_cap.unwrap_or(defaults.lift_cap),
        }
    }
}

enum Failure {
    Input(String),
    Library(Error),
    Output(String),
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Library(e) => match e {
                Error::Syntax { .. } | Error::Unsupported(_) | Error::NotBuchi(_) | Error::InvalidAutomaton(_) => 2,
                Error::RankCapExceeded { .. } => 3,
                _ => 1,
            },
            Failure::Output(_) | Failure::CheckFailed => 1,
        }
    }
}

#[derive(Serialize)]
struct BlockStats {
    class: String,
    states: Vec<usize>,
}

#[derive(Serialize)]
struct Stats {
    schema: u32,
    strategy: String,
    input_states: usize,
    states: usize,
    transitions: usize,
    colours: u32,
    acceptance: String,
    blocks: Vec<BlockStats>,
    wall_time_ms: f64,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn load(path: Option<&PathBuf>) -> Result<Tela, Failure> {
    Ok(parse_hoa(&read_input(path)?)?)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Output(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Output(e.to_string())),
    }
}

fn run_complement(
    input: Option<&PathBuf>,
    args: &ConstructionArgs,
    stats: bool,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let a = load(input)?;
    let opts = args.options();
    let start = Instant::now();
    let c = complement(&a, &opts)?;
    let elapsed = start.elapsed();
    write_output(output, &to_hoa(&c.tela))?;
    if stats {
        let s = Stats {
            schema: STATS_SCHEMA,
            strategy: opts.strategy.to_string(),
            input_states: a.num_states(),
            states: c.tela.num_states(),
            transitions: c.tela.num_transitions(),
            colours: c.tela.colour_count(),
            acceptance: c.tela.acceptance().to_string(),
            blocks: c
                .partitioning
                .blocks
                .iter()
                .map(|b| BlockStats {
                    class: b.class.to_string(),
                    states: b.states.iter().collect(),
                })
                .collect(),
            wall_time_ms: elapsed.as_secs_f64() * 1000.0,
        };
        let line = serde_json::to_string(&s).map_err(|e| Failure::Output(e.to_string()))?;
        eprintln!("{line}");
    }
    Ok(())
}

fn run_classify(input: Option<&PathBuf>, partition: PartitionArg, no_idac: bool) -> Result<(), Failure> {
    let a = prepare(&load(input)?, SinkMode::AcceptingSink)?;
    let idx = BuchiIndex::new(&a)?;
    let sccs = idx.sccs();
    let mut out = String::new();
    for s in sccs.sccs() {
        let mut flags = vec![if s.is_trivial { "trivial" } else { "nontrivial" }];
        flags.push(if s.is_accepting { "accepting" } else { "non-accepting" });
        if s.is_inherently_weak {
            flags.push("inherently-weak");
        }
        if s.is_deterministic {
            flags.push("deterministic");
        }
        out.push_str(&format!("scc {} {}: {} [{}]\n", s.id, s.states, flags.join(", "), s.class()));
    }
    let mut p = Partitioning::new(&a, sccs, partition.into());
    if no_idac {
        p = p.without_idac();
    }
    let elevator = if sccs.is_elevator() { "yes" } else { "no" };
    out.push_str(&format!("elevator: {elevator}; blocks: {p}\n"));
    write_output(None, &out)
}

fn run_check(
    input: Option<&PathBuf>,
    args: &ConstructionArgs,
    strategies: &[StrategyArg],
    given: Option<&PathBuf>,
    bounds: (usize, usize),
) -> Result<(), Failure> {
    let a = load(input)?;
    let sample: Vec<Lasso> = lassos(a.num_symbols(), bounds.0, bounds.1);
    let mut candidates: Vec<(String, Tela)> = Vec::new();
    if let Some(path) = given {
        candidates.push((path.display().to_string(), load(Some(path))?));
    } else {
        let chosen: Vec<Strategy> = if strategies.is_empty() {
            Strategy::ALL.to_vec()
        } else {
            strategies.iter().map(|&s| s.into()).collect()
        };
        for s in chosen {
            let opts = Options {
                strategy: s,
                ..args.options()
            };
            candidates.push((s.to_string(), complement(&a, &opts)?.tela));
        }
    }
    let mut ok = true;
    let mut out = String::new();
    for (name, c) in &candidates {
        match find_disagreement(&a, c, &sample)? {
            None => out.push_str(&format!("PASS {name}: {} lassos\n", sample.len())),
            Some(l) => {
                ok = false;
                out.push_str(&format!("FAIL {name}: {}\n", l.render(&a)));
            }
        }
    }
    write_output(None, &out)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::CheckFailed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Complement {
            input,
            opts,
            stats,
            output,
        } => run_complement(input.as_ref(), opts, *stats, output.as_ref()),
        Command::Classify {
            input,
            partition,
            no_idac,
        } => run_classify(input.as_ref(), *partition, *no_idac),
        Command::Check {
            input,
            opts,
            strategies,
            complement,
            max_prefix,
            max_period,
        } => run_check(
            input.as_ref(),
            opts,
            strategies,
            complement.as_ref(),
            (*max_prefix, *max_period),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) | Failure::Output(m) => eprintln!("modcompl: {m}"),
                Failure::Library(e) => eprintln!("modcompl: {e}"),
                Failure::CheckFailed => {}
            }
            ExitCode::from(f.code())
        }
    }
}
