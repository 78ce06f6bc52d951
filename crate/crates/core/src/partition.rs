//! Partition blocks and partitioning policies.

use std::fmt;
use std::str::FromStr;

use crate::automaton::{StateSet, Tela};
use crate::scc::{is_initial_deterministic_block, SccClass, SccDecomposition};

/// Which partial algorithm a block is handed to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockClass {
    Iwc,
    Dac,
    Idac,
    Nac,
}

impl fmt::Display for BlockClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockClass::Iwc => "IWC",
            BlockClass::Dac => "DAC",
            BlockClass::Idac => "IDAC",
            BlockClass::Nac => "NAC",
        })
    }
}

/// A union of accepting SCCs together with the class selecting its algorithm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionBlock {
    pub states: StateSet,
    pub class: BlockClass,
}

impl fmt::Display for PartitionBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, self.states)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum PartitionPolicy {
    /// All IWCs in one block, all DACs in one block, every NAC on its own.
    #[default]
    Default,
    /// One block per accepting SCC.
    PerScc,
    /// A single block holding every accepting SCC.
    MergeAll,
}

impl FromStr for PartitionPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default" => Ok(PartitionPolicy::Default),
            "per-scc" => Ok(PartitionPolicy::PerScc),
            "merge-all" => Ok(PartitionPolicy::MergeAll),
            other => Err(format!("unknown partition policy `{other}`")),
        }
    }
}

/// An ordered sequence of pairwise disjoint blocks covering every accepting SCC.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Partitioning {
    pub blocks: Vec<PartitionBlock>,
}

impl Partitioning {
    pub fn new(a: &Tela, sccs: &SccDecomposition, policy: PartitionPolicy) -> Self {
        let det_block = |states: StateSet| {
            let class = if is_initial_deterministic_block(a, sccs, &states) {
                BlockClass::Idac
            } else {
                BlockClass::Dac
            };
            PartitionBlock { states, class }
        };
        let mut blocks = Vec::new();
        match policy {
            PartitionPolicy::Default => {
                let mut iwc = StateSet::new();
                let mut dac = StateSet::new();
                let mut nacs = Vec::new();
                for c in sccs.accepting() {
                    match c.class() {
                        SccClass::Iwc => iwc.union_with(&c.states),
                        SccClass::Dac => dac.union_with(&c.states),
                        SccClass::Nac => nacs.push(c.states.clone()),
                        SccClass::NonAccepting => unreachable!(),
                    }
                }
                if !iwc.is_empty() {
                    blocks.push(PartitionBlock {
                        states: iwc,
                        class: BlockClass::Iwc,
                    });
                }
                if !dac.is_empty() {
                    blocks.push(det_block(dac));
                }
                blocks.extend(nacs.into_iter().map(|states| PartitionBlock {
                    states,
                    class: BlockClass::Nac,
                }));
            }
            PartitionPolicy::PerScc => {
                for c in sccs.accepting() {
                    blocks.push(match c.class() {
                        SccClass::Iwc => PartitionBlock {
                            states: c.states.clone(),
                            class: BlockClass::Iwc,
                        },
                        SccClass::Dac => det_block(c.states.clone()),
                        _ => PartitionBlock {
                            states: c.states.clone(),
                            class: BlockClass::Nac,
                        },
                    });
                }
            }
            PartitionPolicy::MergeAll => {
                let mut all = StateSet::new();
                let (mut weak, mut det) = (true, true);
                for c in sccs.accepting() {
                    all.union_with(&c.states);
                    weak &= c.is_inherently_weak;
                    det &= c.is_deterministic;
                }
                if !all.is_empty() {
                    blocks.push(if weak {
                        PartitionBlock {
                            states: all,
                            class: BlockClass::Iwc,
                        }
                    } else if det {
                        det_block(all)
                    } else {
                        PartitionBlock {
                            states: all,
                            class: BlockClass::Nac,
                        }
                    });
                }
            }
        }
        Partitioning { blocks }
    }

    /// The same partitioning with every IDAC block handed to dac instead.
    pub fn without_idac(mut self) -> Self {
        for b in &mut self.blocks {
            if b.class == BlockClass::Idac {
                b.class = BlockClass::Dac;
            }
        }
        self
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Checks disjointness and exact coverage of the accepting SCCs.
    pub fn is_valid_for(&self, sccs: &SccDecomposition) -> bool {
        let mut covered = StateSet::new();
        for b in &self.blocks {
            if b.states.is_empty() || covered.intersects(&b.states) {
                return false;
            }
            covered.union_with(&b.states);
        }
        let mut accepting = StateSet::new();
        for c in sccs.accepting() {
            accepting.union_with(&c.states);
        }
        covered == accepting
    }
}

impl fmt::Display for Partitioning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("none");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
