//! Co-Büchi complementation of initial deterministic blocks.

use super::{acc_colour, PartialComplement, Step, Successors};
use crate::automaton::{Acceptance, StateId, StateSet};
use crate::error::{Error, Result};
use crate::index::BuchiIndex;

/// The unique block state currently reached, or `None` for the empty marker.
pub type IdacState = Option<StateId>;

#[derive(Clone, Debug)]
pub struct Idac<'a> {
    idx: &'a BuchiIndex,
    block: StateSet,
}

impl<'a> Idac<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        Idac { idx, block }
    }

    fn single(&self, s: &StateSet) -> Result<IdacState> {
        let inside = s.intersection(&self.block);
        match inside.len() {
            0 => Ok(None),
            1 => Ok(inside.only()),
            _ => Err(Error::Precondition(format!(
                "block {} is reached in {} states at once and is not initial deterministic",
                self.block, inside
            ))),
        }
    }
}

impl PartialComplement for Idac<'_> {
    type State = IdacState;

    fn name(&self) -> &'static str {
        "idac"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Fin(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<IdacState>> {
        Ok(vec![self.single(init)?])
    }

    fn successors(&self, step: &Step, m: &IdacState) -> Result<Successors<IdacState>> {
        let next = self.single(step.next)?;
        let accepting = match (*m, next) {
            (Some(q), Some(r)) => self.idx.is_accepting(q, step.symbol, r),
            _ => false,
        };
        Ok(vec![(next, acc_colour(accepting))])
    }

    fn render(&self, m: &IdacState) -> String {
        match m {
            Some(q) => q.to_string(),
            None => "{}".to_string(),
        }
    }
}
