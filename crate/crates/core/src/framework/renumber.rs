use crate::automaton::{Acceptance, ColourSet, MAX_COLOURS};
use crate::error::{Error, Result};

/// Shifts each block's colours past those of the blocks before it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColourRenumbering {
    offsets: Vec<u32>,
    counts: Vec<u32>,
}

impl ColourRenumbering {
    pub fn new(counts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let counts: Vec<u32> = counts.into_iter().collect();
        let mut offsets = Vec::with_capacity(counts.len());
        let mut total: u32 = 0;
        for &k in &counts {
            offsets.push(total);
            total = total.saturating_add(k);
        }
        if total > MAX_COLOURS {
            return Err(Error::TooManyColours(total));
        }
        Ok(ColourRenumbering { offsets, counts })
    }

    pub fn total(&self) -> u32 {
        self.offsets.last().map_or(0, |o| o + self.counts.last().unwrap())
    }

    pub fn offset(&self, block: usize) -> u32 {
        self.offsets[block]
    }

    /// Colour `c` of block `block` (zero-based) in the combined numbering.
    pub fn renumber(&self, c: u32, block: usize) -> Result<u32> {
        let count = self.counts[block];
        if c >= count {
            return Err(Error::ColourOutOfRange {
                colour: c,
                block,
                count,
            });
        }
        Ok(c + self.offsets[block])
    }

    pub fn renumber_set(&self, cs: ColourSet, block: usize) -> Result<ColourSet> {
        if cs.bound() > self.counts[block] {
            return Err(Error::ColourOutOfRange {
                colour: cs.bound() - 1,
                block,
                count: self.counts[block],
            });
        }
        cs.shifted(self.offsets[block])
    }

    pub fn renumber_condition(&self, alpha: &Acceptance, block: usize) -> Result<Acceptance> {
        if alpha.max_colour() >= self.counts[block] {
            return Err(Error::ColourOutOfRange {
                colour: alpha.max_colour(),
                block,
                count: self.counts[block],
            });
        }
        Ok(alpha.shifted(self.offsets[block]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_sums() {
        let r = ColourRenumbering::new([1, 1]).unwrap();
        assert_eq!(r.renumber(0, 0), Ok(0));
        assert_eq!(r.renumber(0, 1), Ok(1));
        let r = ColourRenumbering::new([2, 1, 3]).unwrap();
        assert_eq!(r.renumber(2, 2), Ok(5));
        assert_eq!(r.total(), 6);
        assert_eq!(
            r.renumber(1, 1),
            Err(Error::ColourOutOfRange {
                colour: 1,
                block: 1,
                count: 1
            })
        );
    }

    #[test]
    fn conditions_and_sets_shift_together() {
        let r = ColourRenumbering::new([1, 2]).unwrap();
        assert_eq!(
            r.renumber_condition(&Acceptance::Inf(0).and(Acceptance::Fin(1)), 1),
            Ok(Acceptance::Inf(1).and(Acceptance::Fin(2)))
        );
        let cs: ColourSet = [0, 1].into_iter().collect();
        assert_eq!(r.renumber_set(cs, 1), Ok([1, 2].into_iter().collect()));
        assert!(r.renumber_set(cs, 0).is_err());
    }

    #[test]
    fn too_many_colours() {
        assert_eq!(ColourRenumbering::new([40, 30]), Err(Error::TooManyColours(70)));
    }
}
