use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of colours a single automaton may use.
pub const MAX_COLOURS: u32 = 64;

/// A set of colours, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColourSet(u64);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    pub fn singleton(c: u32) -> Self {
        debug_assert!(c < MAX_COLOURS);
        ColourSet(1 << c)
    }

    pub fn from_bits(bits: u64) -> Self {
        ColourSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: u32) -> bool {
        c < MAX_COLOURS && self.0 & (1 << c) != 0
    }

    pub fn insert(&mut self, c: u32) {
        debug_assert!(c < MAX_COLOURS);
        self.0 |= 1 << c;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 | other.0)
    }

    pub fn intersects(self, other: ColourSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Shifts every colour up by `offset`.
    pub fn shifted(self, offset: u32) -> Result<ColourSet> {
        if self.0 == 0 {
            return Ok(self);
        }
        let top = 63 - self.0.leading_zeros();
        if top + offset >= MAX_COLOURS {
            return Err(Error::TooManyColours(top + offset + 1));
        }
        Ok(ColourSet(self.0 << offset))
    }

    /// The largest colour in the set plus one, or zero when empty.
    pub fn bound(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let c = rest.trailing_zeros();
            rest &= rest - 1;
            Some(c)
        })
    }
}

impl FromIterator<u32> for ColourSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut s = ColourSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
