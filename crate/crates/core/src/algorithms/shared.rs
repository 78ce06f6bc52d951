//! A single breakpoint shared by several iwc and dac blocks.

use super::dac::{Dac, DacStep};
use super::iwc::Iwc;
use super::{acc_colour, PartialComplement, Step, Successors};
use crate::automaton::{Acceptance, ColourSet, StateSet};
use crate::error::{Error, Result};
use crate::index::BuchiIndex;
use crate::partition::{BlockClass, PartitionBlock};

#[derive(Clone, Debug)]
pub enum Member<'a> {
    Iwc(Iwc<'a>),
    Dac(Dac<'a>),
}

impl Member<'_> {
    fn block(&self) -> &StateSet {
        match self {
            Member::Iwc(m) => m.block(),
            Member::Dac(m) => m.block(),
        }
    }
}

/// A member's part of the composite macrostate, without its breakpoint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Part {
    Iwc { c: StateSet },
    Dac { c: StateSet, s: StateSet },
}

impl Part {
    fn check(&self) -> &StateSet {
        match self {
            Part::Iwc { c } | Part::Dac { c, .. } => c,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SharedState {
    pub parts: Vec<Part>,
    pub b: StateSet,
}

#[derive(Clone, Debug)]
pub struct Shared<'a> {
    members: Vec<Member<'a>>,
}

impl<'a> Shared<'a> {
    pub fn new(members: Vec<Member<'a>>) -> Self {
        Shared { members }
    }

    /// Builds the composite over iwc and dac blocks; any other class is rejected.
    pub fn from_blocks(idx: &'a BuchiIndex, blocks: &[PartitionBlock]) -> Result<Self> {
        let members = blocks
            .iter()
            .map(|b| match b.class {
                BlockClass::Iwc => Ok(Member::Iwc(Iwc::new(idx, b.states.clone()))),
                BlockClass::Dac => Ok(Member::Dac(Dac::new(idx, b.states.clone()))),
                other => Err(Error::NotBreakpointCapable(format!("{other} block {}", b.states))),
            })
            .collect::<Result<_>>()?;
        Ok(Shared::new(members))
    }

    pub fn members(&self) -> &[Member<'a>] {
        &self.members
    }

    fn union_of_checks(parts: &[Part]) -> StateSet {
        let mut all = StateSet::new();
        for p in parts {
            all.union_with(p.check());
        }
        all
    }
}

impl PartialComplement for Shared<'_> {
    type State = SharedState;

    fn name(&self) -> &'static str {
        "shared"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<SharedState>> {
        let parts: Vec<Part> = self
            .members
            .iter()
            .map(|m| {
                let c = init.intersection(m.block());
                match m {
                    Member::Iwc(_) => Part::Iwc { c },
                    Member::Dac(_) => Part::Dac { c, s: StateSet::new() },
                }
            })
            .collect();
        let b = Self::union_of_checks(&parts);
        Ok(vec![SharedState { parts, b }])
    }

    fn successors(&self, step: &Step, m: &SharedState) -> Result<Successors<SharedState>> {
        let mut parts = Vec::with_capacity(self.members.len());
        let mut star = StateSet::new();
        let mut eligible = Vec::new();
        for (j, (member, part)) in self.members.iter().zip(&m.parts).enumerate() {
            let b = m.b.intersection(member.block());
            match (member, part) {
                (Member::Iwc(alg), Part::Iwc { .. }) => {
                    let c = alg.check_set(step);
                    star.union_with(&alg.breakpoint_image(step, &b, &c));
                    parts.push(Part::Iwc { c });
                }
                (Member::Dac(alg), Part::Dac { s, .. }) => {
                    let Some(DacStep { c, s }) = alg.track(step, s) else {
                        return Ok(Vec::new());
                    };
                    star.union_with(&alg.breakpoint_image(step, &b, &c));
                    if alg.may_guess_safe(step, &b) {
                        eligible.push(j);
                    }
                    parts.push(Part::Dac { c, s });
                }
                _ => unreachable!("macrostate does not match the composite's members"),
            }
        }
        let emit = star.is_empty();
        let b = if emit { Self::union_of_checks(&parts) } else { star };
        let colour = acc_colour(emit);
        let mut out = vec![(
            SharedState {
                parts: parts.clone(),
                b: b.clone(),
            },
            colour,
        )];
        // every non-empty subset of the eligible dac members may declare its
        // share of the breakpoint safe
        for mask in 1u64..(1u64 << eligible.len()) {
            let mut guessed = parts.clone();
            let mut rest = b.clone();
            for (bit, &j) in eligible.iter().enumerate() {
                if mask & (1 << bit) == 0 {
                    continue;
                }
                let block = self.members[j].block();
                if let Part::Dac { c, s } = &mut guessed[j] {
                    s.union_with(&b.intersection(block));
                    c.subtract(s);
                }
                rest.subtract(block);
            }
            let (rest, colour): (StateSet, ColourSet) = if rest.is_empty() {
                (Self::union_of_checks(&guessed), acc_colour(true))
            } else {
                (rest, colour)
            };
            out.push((SharedState { parts: guessed, b: rest }, colour));
        }
        Ok(out)
    }

    fn render(&self, m: &SharedState) -> String {
        let parts: Vec<String> = m
            .parts
            .iter()
            .map(|p| match p {
                Part::Iwc { c } => c.to_string(),
                Part::Dac { c, s } => format!("({c},{s})"),
            })
            .collect();
        format!("({};{})", parts.join(","), m.b)
    }
}
