//! Top-level constructions and the `complement` entry point.

mod blocks;
mod explore;
mod renumber;
mod rr;
mod sync;

use std::fmt;
use std::str::FromStr;

pub use blocks::{units, RrActive, RrBlock, RrPassive, SyncBlock, SyncState, Unit};
pub use explore::Construction;
pub use renumber::ColourRenumbering;
pub use rr::{mod_compl_rr, RrMacro};
pub use sync::{mod_compl_sync, SyncMacro};

use crate::algorithms::rank::DEFAULT_LIFT_CAP;
use crate::automaton::{complete, ensure_buchi, strip_extra_scc_accepting, Tela};
use crate::error::{Error, Result};
use crate::index::BuchiIndex;
use crate::partition::{PartitionPolicy, Partitioning};
use crate::scc::SccDecomposition;
use crate::simulation::Simulation;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Sync,
    Postponed,
    RoundRobin,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Sync, Strategy::Postponed, Strategy::RoundRobin];
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sync" => Ok(Strategy::Sync),
            "postponed" => Ok(Strategy::Postponed),
            "rr" => Ok(Strategy::RoundRobin),
            _ => Err(Error::Unsupported(format!("unknown strategy `{s}`"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Sync => "sync",
            Strategy::Postponed => "postponed",
            Strategy::RoundRobin => "rr",
        })
    }
}

/// How words whose reached set runs empty are handled.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SinkMode {
    /// Complete the input with a rejecting sink first.
    #[default]
    CompleteInput,
    /// Leave the input alone; empty reached sets go to an accepting sink.
    AcceptingSink,
}

impl FromStr for SinkMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete-input" => Ok(SinkMode::CompleteInput),
            "accepting-sink" => Ok(SinkMode::AcceptingSink),
            _ => Err(Error::Unsupported(format!("unknown sink mode `{s}`"))),
        }
    }
}

/// Algorithm for NAC blocks. Only the rank-based one is available.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum NacAlgorithm {
    #[default]
    Rank,
}

impl FromStr for NacAlgorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rank" => Ok(NacAlgorithm::Rank),
            _ => Err(Error::Unsupported(format!("unknown NAC algorithm `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub strategy: Strategy,
    pub partition: PartitionPolicy,
    /// Use the co-Büchi construction for blocks that qualify.
    pub use_idac: bool,
    pub shared_breakpoint: bool,
    pub simulation_pruning: bool,
    pub sink: SinkMode,
    pub nac: NacAlgorithm,
    /// Upper bound on the number of rankings one lift may produce.
    pub lift_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            strategy: Strategy::Sync,
            partition: PartitionPolicy::Default,
            use_idac: true,
            shared_breakpoint: false,
            simulation_pruning: true,
            sink: SinkMode::CompleteInput,
            nac: NacAlgorithm::Rank,
            lift_cap: DEFAULT_LIFT_CAP,
        }
    }
}

/// A complement together with what it was built from.
#[derive(Clone, Debug)]
pub struct Complement {
    pub tela: Tela,
    /// The automaton actually complemented (after preprocessing).
    pub input: Tela,
    pub partitioning: Partitioning,
    pub units: Vec<Unit>,
}

/// Preprocessing shared by every strategy: accepting marks outside SCCs are
/// dropped and, in the default sink mode, the input is completed.
pub fn prepare(a: &Tela, sink: SinkMode) -> Result<Tela> {
    ensure_buchi(a)?;
    a.validate()?;
    let a = strip_extra_scc_accepting(a);
    Ok(match sink {
        SinkMode::CompleteInput => complete(&a),
        SinkMode::AcceptingSink => a,
    })
}

pub(crate) fn partition_for(a: &Tela, sccs: &SccDecomposition, opts: &Options) -> Partitioning {
    let p = Partitioning::new(a, sccs, opts.partition);
    if opts.use_idac {
        p
    } else {
        p.without_idac()
    }
}

/// Complements the Büchi automaton `a`.
pub fn complement(a: &Tela, opts: &Options) -> Result<Complement> {
    let input = prepare(a, opts.sink)?;
    let idx = BuchiIndex::new(&input)?;
    let partitioning = partition_for(&input, idx.sccs(), opts);
    let units = units(&partitioning, opts.shared_breakpoint);
    let tela = match opts.strategy {
        Strategy::Sync => build_sync(&input, &idx, &units, opts)?,
        Strategy::RoundRobin => build_rr(&input, &idx, &units, opts)?,
        Strategy::Postponed => crate::lang::postp_compl(&input, &units, opts)?,
    };
    Ok(Complement {
        tela,
        input,
        partitioning,
        units,
    })
}

fn simulation_for(input: &Tela, idx: &BuchiIndex, opts: &Options) -> Option<Simulation> {
    opts.simulation_pruning
        .then(|| Simulation::with_sccs(input, idx.sccs()))
}

/// The synchronous construction over already prepared input and units.
pub fn build_sync(input: &Tela, idx: &BuchiIndex, units: &[Unit], opts: &Options) -> Result<Tela> {
    let sim = simulation_for(input, idx, opts);
    let algs = units
        .iter()
        .map(|u| SyncBlock::new(idx, u, opts.lift_cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(mod_compl_sync(input, idx, sim.as_ref(), &algs)?.tela)
}

/// The round-robin construction over already prepared input and units.
pub fn build_rr(input: &Tela, idx: &BuchiIndex, units: &[Unit], opts: &Options) -> Result<Tela> {
    let sim = simulation_for(input, idx, opts);
    let algs = units
        .iter()
        .map(|u| RrBlock::new(idx, u, opts.lift_cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(mod_compl_rr(input, idx, sim.as_ref(), &algs)?.tela)
}
