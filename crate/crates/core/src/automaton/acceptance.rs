//! Emerson-Lei acceptance conditions.

use std::fmt;

use super::ColourSet;
use crate::error::{Error, Result};

/// Largest number of disjuncts [`Acceptance::dnf`] is willing to produce.
pub const DNF_LIMIT: usize = 4096;

/// A positive Boolean formula over `Inf(c)` and `Fin(c)` atoms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Acceptance {
    Inf(u32),
    Fin(u32),
    And(Box<Acceptance>, Box<Acceptance>),
    Or(Box<Acceptance>, Box<Acceptance>),
}

/// One disjunct of a condition in disjunctive normal form: every colour in
/// `fin` must be seen finitely often and every colour in `inf` infinitely often.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Clause {
    pub fin: ColourSet,
    pub inf: ColourSet,
}

impl Clause {
    pub fn holds(&self, infinitely_often: ColourSet) -> bool {
        !self.fin.intersects(infinitely_often) && self.inf.is_subset(infinitely_often)
    }
}

impl Acceptance {
    pub fn and(self, other: Acceptance) -> Acceptance {
        Acceptance::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Acceptance) -> Acceptance {
        Acceptance::Or(Box::new(self), Box::new(other))
    }

    /// Left-nested conjunction; `None` for an empty sequence.
    pub fn conjunction(parts: impl IntoIterator<Item = Acceptance>) -> Option<Acceptance> {
        parts.into_iter().reduce(Acceptance::and)
    }

    /// Satisfaction of the condition by the set of colours seen infinitely often.
    pub fn eval(&self, m: ColourSet) -> bool {
        match self {
            Acceptance::Inf(c) => m.contains(*c),
            Acceptance::Fin(c) => !m.contains(*c),
            Acceptance::And(l, r) => l.eval(m) && r.eval(m),
            Acceptance::Or(l, r) => l.eval(m) || r.eval(m),
        }
    }

    /// The same formula with every atom's colour shifted by `offset`.
    pub fn shifted(&self, offset: u32) -> Acceptance {
        match self {
            Acceptance::Inf(c) => Acceptance::Inf(c + offset),
            Acceptance::Fin(c) => Acceptance::Fin(c + offset),
            Acceptance::And(l, r) => l.shifted(offset).and(r.shifted(offset)),
            Acceptance::Or(l, r) => l.shifted(offset).or(r.shifted(offset)),
        }
    }

    /// Every colour mentioned by an atom.
    pub fn colours(&self) -> ColourSet {
        match self {
            Acceptance::Inf(c) | Acceptance::Fin(c) => ColourSet::singleton(*c),
            Acceptance::And(l, r) | Acceptance::Or(l, r) => l.colours().union(r.colours()),
        }
    }

    pub fn max_colour(&self) -> u32 {
        match self {
            Acceptance::Inf(c) | Acceptance::Fin(c) => *c,
            Acceptance::And(l, r) | Acceptance::Or(l, r) => l.max_colour().max(r.max_colour()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Acceptance::Inf(_) | Acceptance::Fin(_) => 0,
            Acceptance::And(l, r) | Acceptance::Or(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Expands the condition into a list of clauses whose disjunction is
    /// equivalent to it.
    pub fn dnf(&self) -> Result<Vec<Clause>> {
        let clauses = match self {
            Acceptance::Inf(c) => vec![Clause {
                fin: ColourSet::EMPTY,
                inf: ColourSet::singleton(*c),
            }],
            Acceptance::Fin(c) => vec![Clause {
                fin: ColourSet::singleton(*c),
                inf: ColourSet::EMPTY,
            }],
            Acceptance::Or(l, r) => {
                let mut out = l.dnf()?;
                for c in r.dnf()? {
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
                out
            }
            Acceptance::And(l, r) => {
                let (l, r) = (l.dnf()?, r.dnf()?);
                if l.len().saturating_mul(r.len()) > DNF_LIMIT {
                    return Err(Error::ConditionTooLarge(DNF_LIMIT));
                }
                let mut out = Vec::with_capacity(l.len() * r.len());
                for a in &l {
                    for b in &r {
                        let c = Clause {
                            fin: a.fin.union(b.fin),
                            inf: a.inf.union(b.inf),
                        };
                        // a clause requiring some colour both finitely and
                        // infinitely often can never hold
                        if !c.fin.intersects(c.inf) && !out.contains(&c) {
                            out.push(c);
                        }
                    }
                }
                out
            }
        };
        if clauses.len() > DNF_LIMIT {
            return Err(Error::ConditionTooLarge(DNF_LIMIT));
        }
        Ok(clauses)
    }

    /// `&` binds tighter than `|` and both associate to the left, so a
    /// right operand of the same operator needs parentheses to read back as
    /// the same tree.
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: Ctx) -> fmt::Result {
        let (l, r, op, ctx_l, ctx_r, paren) = match self {
            Acceptance::Inf(c) => return write!(f, "Inf({c})"),
            Acceptance::Fin(c) => return write!(f, "Fin({c})"),
            Acceptance::And(l, r) => (l, r, "&", Ctx::AndLeft, Ctx::AndRight, ctx == Ctx::AndRight),
            Acceptance::Or(l, r) => (l, r, "|", Ctx::OrLeft, Ctx::OrRight, ctx != Ctx::Top && ctx != Ctx::OrLeft),
        };
        if paren {
            write!(f, "(")?;
        }
        l.fmt_prec(f, ctx_l)?;
        write!(f, " {op} ")?;
        r.fmt_prec(f, ctx_r)?;
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Ctx {
    Top,
    AndLeft,
    AndRight,
    OrLeft,
    OrRight,
}

/// Renders the condition in HOA syntax.
impl fmt::Display for Acceptance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, Ctx::Top)
    }
}
