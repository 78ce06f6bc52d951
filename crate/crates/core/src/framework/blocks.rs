//! Per-block algorithm selection for both top levels.

use crate::algorithms::dac::{Dac, DacPassive, DacRr, DacState};
use crate::algorithms::idac::{Idac, IdacState};
use crate::algorithms::iwc::{Iwc, IwcRr, IwcState};
use crate::algorithms::rank::{Rank, RankActive, RankPassive};
use crate::algorithms::shared::{Shared, SharedState};
use crate::algorithms::{PartialComplement, Phase, Phaseless, RoundRobinComplement, Step, Successors, Union};
use crate::automaton::{Acceptance, StateSet};
use crate::error::Result;
use crate::index::BuchiIndex;
use crate::partition::{BlockClass, PartitionBlock, Partitioning};

/// What one top-level component complements: a single block, or several iwc
/// and dac blocks sharing one breakpoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Unit {
    Single(PartitionBlock),
    Shared(Vec<PartitionBlock>),
}

impl Unit {
    pub fn states(&self) -> StateSet {
        match self {
            Unit::Single(b) => b.states.clone(),
            Unit::Shared(bs) => {
                let mut s = StateSet::new();
                for b in bs {
                    s.union_with(&b.states);
                }
                s
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Unit::Single(b) => b.to_string(),
            Unit::Shared(bs) => {
                let inner: Vec<String> = bs.iter().map(|b| b.to_string()).collect();
                format!("shared[{}]", inner.join(", "))
            }
        }
    }
}

/// Groups the blocks into units; with `shared`, every iwc and dac block joins
/// one shared-breakpoint unit placed where the first of them was.
pub fn units(partitioning: &Partitioning, shared: bool) -> Vec<Unit> {
    let capable = |b: &PartitionBlock| matches!(b.class, BlockClass::Iwc | BlockClass::Dac);
    let mut out = Vec::new();
    let mut members = Vec::new();
    let mut slot = None;
    for b in &partitioning.blocks {
        if shared && capable(b) {
            slot.get_or_insert(out.len());
            members.push(b.clone());
        } else {
            out.push(Unit::Single(b.clone()));
        }
    }
    if let Some(at) = slot {
        out.insert(at, Unit::Shared(members));
    }
    out
}

#[derive(Clone, Debug)]
pub enum SyncBlock<'a> {
    Iwc(Iwc<'a>),
    Dac(Dac<'a>),
    Idac(Idac<'a>),
    Rank(Union<Rank<'a>>),
    Shared(Shared<'a>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SyncState {
    Iwc(IwcState),
    Dac(DacState),
    Idac(IdacState),
    Rank(Phase<RankPassive, RankActive>),
    Shared(SharedState),
}

impl<'a> SyncBlock<'a> {
    pub fn new(idx: &'a BuchiIndex, unit: &Unit, lift_cap: usize) -> Result<Self> {
        Ok(match unit {
            Unit::Shared(bs) => SyncBlock::Shared(Shared::from_blocks(idx, bs)?),
            Unit::Single(b) => {
                let p = b.states.clone();
                match b.class {
                    BlockClass::Iwc => SyncBlock::Iwc(Iwc::new(idx, p)),
                    BlockClass::Dac => SyncBlock::Dac(Dac::new(idx, p)),
                    BlockClass::Idac => SyncBlock::Idac(Idac::new(idx, p)),
                    BlockClass::Nac => SyncBlock::Rank(Union(Rank::with_cap(idx, p, lift_cap))),
                }
            }
        })
    }
}

fn wrap<S, T>(v: Successors<S>, f: impl Fn(S) -> T) -> Successors<T> {
    v.into_iter().map(|(s, c)| (f(s), c)).collect()
}

impl PartialComplement for SyncBlock<'_> {
    type State = SyncState;

    fn name(&self) -> &'static str {
        match self {
            SyncBlock::Iwc(g) => g.name(),
            SyncBlock::Dac(g) => g.name(),
            SyncBlock::Idac(g) => g.name(),
            SyncBlock::Rank(g) => g.name(),
            SyncBlock::Shared(g) => g.name(),
        }
    }

    fn colour_count(&self) -> u32 {
        match self {
            SyncBlock::Iwc(g) => g.colour_count(),
            SyncBlock::Dac(g) => g.colour_count(),
            SyncBlock::Idac(g) => g.colour_count(),
            SyncBlock::Rank(g) => g.colour_count(),
            SyncBlock::Shared(g) => g.colour_count(),
        }
    }

    fn acceptance(&self) -> Acceptance {
        match self {
            SyncBlock::Iwc(g) => g.acceptance(),
            SyncBlock::Dac(g) => g.acceptance(),
            SyncBlock::Idac(g) => g.acceptance(),
            SyncBlock::Rank(g) => g.acceptance(),
            SyncBlock::Shared(g) => g.acceptance(),
        }
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<SyncState>> {
        Ok(match self {
            SyncBlock::Iwc(g) => g.initial(init)?.into_iter().map(SyncState::Iwc).collect(),
            SyncBlock::Dac(g) => g.initial(init)?.into_iter().map(SyncState::Dac).collect(),
            SyncBlock::Idac(g) => g.initial(init)?.into_iter().map(SyncState::Idac).collect(),
            SyncBlock::Rank(g) => g.initial(init)?.into_iter().map(SyncState::Rank).collect(),
            SyncBlock::Shared(g) => g.initial(init)?.into_iter().map(SyncState::Shared).collect(),
        })
    }

    fn successors(&self, step: &Step, m: &SyncState) -> Result<Successors<SyncState>> {
        Ok(match (self, m) {
            (SyncBlock::Iwc(g), SyncState::Iwc(x)) => wrap(g.successors(step, x)?, SyncState::Iwc),
            (SyncBlock::Dac(g), SyncState::Dac(x)) => wrap(g.successors(step, x)?, SyncState::Dac),
            (SyncBlock::Idac(g), SyncState::Idac(x)) => wrap(g.successors(step, x)?, SyncState::Idac),
            (SyncBlock::Rank(g), SyncState::Rank(x)) => wrap(g.successors(step, x)?, SyncState::Rank),
            (SyncBlock::Shared(g), SyncState::Shared(x)) => {
                wrap(g.successors(step, x)?, SyncState::Shared)
            }
            _ => unreachable!("partial macrostate does not belong to its block"),
        })
    }

    fn render(&self, m: &SyncState) -> String {
        match (self, m) {
            (SyncBlock::Iwc(g), SyncState::Iwc(x)) => g.render(x),
            (SyncBlock::Dac(g), SyncState::Dac(x)) => g.render(x),
            (SyncBlock::Idac(g), SyncState::Idac(x)) => g.render(x),
            (SyncBlock::Rank(g), SyncState::Rank(x)) => g.render(x),
            (SyncBlock::Shared(g), SyncState::Shared(x)) => g.render(x),
            _ => unreachable!("partial macrostate does not belong to its block"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum RrBlock<'a> {
    Iwc(IwcRr<'a>),
    Dac(DacRr<'a>),
    Idac(Phaseless<Idac<'a>>),
    Rank(Rank<'a>),
    Shared(Phaseless<Shared<'a>>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RrPassive {
    Iwc(StateSet),
    Dac(DacPassive),
    Idac(IdacState),
    Rank(RankPassive),
    Shared(SharedState),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RrActive {
    Iwc(IwcState),
    Dac(DacState),
    Idac(IdacState),
    Rank(RankActive),
    Shared(SharedState),
}

impl<'a> RrBlock<'a> {
    pub fn new(idx: &'a BuchiIndex, unit: &Unit, lift_cap: usize) -> Result<Self> {
        Ok(match unit {
            Unit::Shared(bs) => RrBlock::Shared(Phaseless(Shared::from_blocks(idx, bs)?)),
            Unit::Single(b) => {
                let p = b.states.clone();
                match b.class {
                    BlockClass::Iwc => RrBlock::Iwc(IwcRr::new(idx, p)),
                    BlockClass::Dac => RrBlock::Dac(DacRr::new(idx, p)),
                    BlockClass::Idac => RrBlock::Idac(Phaseless(Idac::new(idx, p))),
                    BlockClass::Nac => RrBlock::Rank(Rank::with_cap(idx, p, lift_cap)),
                }
            }
        })
    }
}

fn wrap_phase<P, A, P2, A2>(
    v: Successors<Phase<P, A>>,
    fp: impl Fn(P) -> P2,
    fa: impl Fn(A) -> A2,
) -> Successors<Phase<P2, A2>> {
    v.into_iter()
        .map(|(s, c)| {
            let s = match s {
                Phase::Passive(p) => Phase::Passive(fp(p)),
                Phase::Active(a) => Phase::Active(fa(a)),
            };
            (s, c)
        })
        .collect()
}

impl RoundRobinComplement for RrBlock<'_> {
    type Passive = RrPassive;
    type Active = RrActive;

    fn name(&self) -> &'static str {
        match self {
            RrBlock::Iwc(g) => g.name(),
            RrBlock::Dac(g) => g.name(),
            RrBlock::Idac(g) => g.name(),
            RrBlock::Rank(g) => g.name(),
            RrBlock::Shared(g) => g.name(),
        }
    }

    fn colour_count(&self) -> u32 {
        match self {
            RrBlock::Iwc(g) => g.colour_count(),
            RrBlock::Dac(g) => g.colour_count(),
            RrBlock::Idac(g) => g.colour_count(),
            RrBlock::Rank(g) => g.colour_count(),
            RrBlock::Shared(g) => g.colour_count(),
        }
    }

    fn acceptance(&self) -> Acceptance {
        match self {
            RrBlock::Iwc(g) => g.acceptance(),
            RrBlock::Dac(g) => g.acceptance(),
            RrBlock::Idac(g) => g.acceptance(),
            RrBlock::Rank(g) => g.acceptance(),
            RrBlock::Shared(g) => g.acceptance(),
        }
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<RrPassive>> {
        Ok(match self {
            RrBlock::Iwc(g) => g.initial(init)?.into_iter().map(RrPassive::Iwc).collect(),
            RrBlock::Dac(g) => g.initial(init)?.into_iter().map(RrPassive::Dac).collect(),
            RrBlock::Idac(g) => g.initial(init)?.into_iter().map(RrPassive::Idac).collect(),
            RrBlock::Rank(g) => g.initial(init)?.into_iter().map(RrPassive::Rank).collect(),
            RrBlock::Shared(g) => g.initial(init)?.into_iter().map(RrPassive::Shared).collect(),
        })
    }

    fn passive_successors(&self, step: &Step, m: &RrPassive) -> Result<Successors<RrPassive>> {
        Ok(match (self, m) {
            (RrBlock::Iwc(g), RrPassive::Iwc(x)) => wrap(g.passive_successors(step, x)?, RrPassive::Iwc),
            (RrBlock::Dac(g), RrPassive::Dac(x)) => wrap(g.passive_successors(step, x)?, RrPassive::Dac),
            (RrBlock::Idac(g), RrPassive::Idac(x)) => {
                wrap(g.passive_successors(step, x)?, RrPassive::Idac)
            }
            (RrBlock::Rank(g), RrPassive::Rank(x)) => {
                wrap(g.passive_successors(step, x)?, RrPassive::Rank)
            }
            (RrBlock::Shared(g), RrPassive::Shared(x)) => {
                wrap(g.passive_successors(step, x)?, RrPassive::Shared)
            }
            _ => unreachable!("partial macrostate does not belong to its block"),
        })
    }

    fn lift(&self, m: &RrPassive) -> Result<Vec<RrActive>> {
        Ok(match (self, m) {
            (RrBlock::Iwc(g), RrPassive::Iwc(x)) => g.lift(x)?.into_iter().map(RrActive::Iwc).collect(),
            (RrBlock::Dac(g), RrPassive::Dac(x)) => g.lift(x)?.into_iter().map(RrActive::Dac).collect(),
            (RrBlock::Idac(g), RrPassive::Idac(x)) => g.lift(x)?.into_iter().map(RrActive::Idac).collect(),
            (RrBlock::Rank(g), RrPassive::Rank(x)) => g.lift(x)?.into_iter().map(RrActive::Rank).collect(),
            (RrBlock::Shared(g), RrPassive::Shared(x)) => {
                g.lift(x)?.into_iter().map(RrActive::Shared).collect()
            }
            _ => unreachable!("partial macrostate does not belong to its block"),
        })
    }

    fn active_successors(&self, step: &Step, m: &RrActive) -> Result<Successors<Phase<RrPassive, RrActive>>> {
        Ok(match (self, m) {
            (RrBlock::Iwc(g), RrActive::Iwc(x)) => {
                wrap_phase(g.active_successors(step, x)?, RrPassive::Iwc, RrActive::Iwc)
            }
            (RrBlock::Dac(g), RrActive::Dac(x)) => {
                wrap_phase(g.active_successors(step, x)?, RrPassive::Dac, RrActive::Dac)
            }
            (RrBlock::Idac(g), RrActive::Idac(x)) => {
                wrap_phase(g.active_successors(step, x)?, RrPassive::Idac, RrActive::Idac)
            }
            (RrBlock::Rank(g), RrActive::Rank(x)) => {
                wrap_phase(g.active_successors(step, x)?, RrPassive::Rank, RrActive::Rank)
            }
            (RrBlock::Shared(g), RrActive::Shared(x)) => {
                wrap_phase(g.active_successors(step, x)?, RrPassive::Shared, RrActive::Shared)
            }
            _ => unreachable!("partial macrostate does not belong to its block"),
        })
    }

    fn render_passive(&self, m: &RrPassive) -> String {
        match (self, m) {
            (RrBlock::Iwc(g), RrPassive::Iwc(x)) => g.render_passive(x),
            (RrBlock::Dac(g), RrPassive::Dac(x)) => g.render_passive(x),
            (RrBlock::Idac(g), RrPassive::Idac(x)) => g.render_passive(x),
            (RrBlock::Rank(g), RrPassive::Rank(x)) => g.render_passive(x),
            (RrBlock::Shared(g), RrPassive::Shared(x)) => g.render_passive(x),
            _ => unreachable!("partial macrostate does not belong to its block"),
        }
    }

    fn render_active(&self, m: &RrActive) -> String {
        match (self, m) {
            (RrBlock::Iwc(g), RrActive::Iwc(x)) => g.render_active(x),
            (RrBlock::Dac(g), RrActive::Dac(x)) => g.render_active(x),
            (RrBlock::Idac(g), RrActive::Idac(x)) => g.render_active(x),
            (RrBlock::Rank(g), RrActive::Rank(x)) => g.render_active(x),
            (RrBlock::Shared(g), RrActive::Shared(x)) => g.render_active(x),
            _ => unreachable!("partial macrostate does not belong to its block"),
        }
    }
}
