//! The synchronous top level: every block steps at every transition.

use std::fmt::Write;

use super::explore::{product, Construction, Explorer, Moves};
use super::renumber::ColourRenumbering;
use crate::algorithms::{PartialComplement, Step};
use crate::automaton::{Acceptance, StateSet, Tela};
use crate::error::Result;
use crate::index::BuchiIndex;
use crate::simulation::{prune_with, Simulation};

/// `(H, M_1, .., M_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SyncMacro<S> {
    pub reached: StateSet,
    pub parts: Vec<S>,
}

/// Builds the reachable part of the synchronous complement of `a` from one
/// partial algorithm per block. An empty list of blocks yields the universal
/// automaton.
pub fn mod_compl_sync<A: PartialComplement>(
    a: &Tela,
    idx: &BuchiIndex,
    sim: Option<&Simulation>,
    algs: &[A],
) -> Result<Construction<SyncMacro<A::State>>> {
    if algs.is_empty() {
        return Ok(Construction {
            tela: Tela::universal(a.alphabet().clone()),
            macrostates: vec![None],
        });
    }
    let ren = ColourRenumbering::new(algs.iter().map(|g| g.colour_count()))?;
    let acceptance = Acceptance::conjunction(
        algs.iter()
            .enumerate()
            .map(|(j, g)| ren.renumber_condition(&g.acceptance(), j))
            .collect::<Result<Vec<_>>>()?,
    )
    .unwrap();

    let init = prune_with(sim, a.initial_set());
    let initial = if init.is_empty() {
        Moves::Sink
    } else {
        let lists = algs
            .iter()
            .map(|g| Ok(g.initial(&init)?.into_iter().map(|m| (m, Default::default())).collect()))
            .collect::<Result<Vec<Vec<_>>>>()?;
        Moves::To(
            product(&lists)
                .into_iter()
                .map(|(parts, c)| {
                    (
                        SyncMacro {
                            reached: init.clone(),
                            parts,
                        },
                        c,
                    )
                })
                .collect(),
        )
    };

    let explorer = Explorer {
        alphabet: a.alphabet(),
        colour_count: ren.total(),
        acceptance,
    };
    explorer.run(
        initial,
        |m, symbol| {
            let next = prune_with(sim, idx.post(&m.reached, symbol));
            if next.is_empty() {
                return Ok(Moves::Sink);
            }
            let step = Step {
                reached: &m.reached,
                symbol,
                next: &next,
            };
            let mut lists = Vec::with_capacity(algs.len());
            for (j, (g, part)) in algs.iter().zip(&m.parts).enumerate() {
                let succ = g
                    .successors(&step, part)?
                    .into_iter()
                    .map(|(s, c)| Ok((s, ren.renumber_set(c, j)?)))
                    .collect::<Result<Vec<_>>>()?;
                if succ.is_empty() {
                    return Ok(Moves::To(Vec::new()));
                }
                lists.push(succ);
            }
            Ok(Moves::To(
                product(&lists)
                    .into_iter()
                    .map(|(parts, c)| {
                        (
                            SyncMacro {
                                reached: next.clone(),
                                parts,
                            },
                            c,
                        )
                    })
                    .collect(),
            ))
        },
        |m| {
            let mut s = format!("({}", m.reached);
            for (g, part) in algs.iter().zip(&m.parts) {
                let _ = write!(s, ",{}", g.render(part));
            }
            s.push(')');
            s
        },
    )
}
