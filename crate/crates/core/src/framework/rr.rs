//! The round-robin top level: one block is active at a time and the turn
//! passes on whenever the active block falls back to its passive phase.

use std::fmt::Write;

use super::explore::{product, Construction, Explorer, Moves};
use super::renumber::ColourRenumbering;
use crate::algorithms::{Phase, RoundRobinComplement, Step};
use crate::automaton::{Acceptance, ColourSet, StateSet, Tela};
use crate::error::Result;
use crate::index::BuchiIndex;
use crate::simulation::{prune_with, Simulation};

/// `(H, M_1, .., M_n, ℓ)` with `ℓ` zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RrMacro<P, A> {
    pub reached: StateSet,
    pub parts: Vec<Phase<P, A>>,
    pub active: usize,
}

type Part<R> = Phase<<R as RoundRobinComplement>::Passive, <R as RoundRobinComplement>::Active>;

/// Builds the reachable part of the round-robin complement of `a`.
pub fn mod_compl_rr<R: RoundRobinComplement>(
    a: &Tela,
    idx: &BuchiIndex,
    sim: Option<&Simulation>,
    algs: &[R],
) -> Result<Construction<RrMacro<R::Passive, R::Active>>> {
    if algs.is_empty() {
        return Ok(Construction {
            tela: Tela::universal(a.alphabet().clone()),
            macrostates: vec![None],
        });
    }
    let n = algs.len();
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
        let mut lists: Vec<Vec<(Part<R>, ColourSet)>> = Vec::with_capacity(n);
        for (j, g) in algs.iter().enumerate() {
            let mut list = Vec::new();
            for m in g.initial(&init)? {
                if j == 0 {
                    for l in g.lift(&m)? {
                        list.push((Phase::Active(l), ColourSet::EMPTY));
                    }
                } else {
                    list.push((Phase::Passive(m), ColourSet::EMPTY));
                }
            }
            lists.push(list);
        }
        Moves::To(
            product(&lists)
                .into_iter()
                .map(|(parts, c)| {
                    (
                        RrMacro {
                            reached: init.clone(),
                            parts,
                            active: 0,
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
            let mut lists: Vec<Vec<(Part<R>, ColourSet)>> = Vec::with_capacity(n);
            for (j, (g, part)) in algs.iter().zip(&m.parts).enumerate() {
                let succ = match part {
                    Phase::Active(x) => g.active_successors(&step, x)?,
                    Phase::Passive(x) => g
                        .passive_successors(&step, x)?
                        .into_iter()
                        .map(|(s, c)| (Phase::Passive(s), c))
                        .collect(),
                };
                debug_assert_eq!(part.is_active(), j == m.active);
                let succ = succ
                    .into_iter()
                    .map(|(s, c)| Ok((s, ren.renumber_set(c, j)?)))
                    .collect::<Result<Vec<_>>>()?;
                if succ.is_empty() {
                    return Ok(Moves::To(Vec::new()));
                }
                lists.push(succ);
            }
            let mut out = Vec::new();
            for (parts, c) in product(&lists) {
                let l = m.active;
                if parts[l].is_active() {
                    out.push((
                        RrMacro {
                            reached: next.clone(),
                            parts,
                            active: l,
                        },
                        c,
                    ));
                    continue;
                }
                let l2 = (l + 1) % n;
                let Phase::Passive(p) = &parts[l2] else {
                    unreachable!("only the active block may be in its active phase");
                };
                for lifted in algs[l2].lift(p)? {
                    let mut parts = parts.clone();
                    parts[l2] = Phase::Active(lifted);
                    out.push((
                        RrMacro {
                            reached: next.clone(),
                            parts,
                            active: l2,
                        },
                        c,
                    ));
                }
            }
            Ok(Moves::To(out))
        },
        |m| {
            let mut s = format!("({}", m.reached);
            for (g, part) in algs.iter().zip(&m.parts) {
                let _ = write!(s, ",{}", g.render(part));
            }
            let _ = write!(s, ",{})", m.active + 1);
            s
        },
    )
}
