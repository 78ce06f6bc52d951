//! Comparing an automaton and its complement on lasso words.

use crate::automaton::{Symbol, Tela};
use crate::error::Result;
use crate::lang::member_lasso;

/// A lasso word `u·v^ω`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lasso {
    pub u: Vec<Symbol>,
    pub v: Vec<Symbol>,
}

impl Lasso {
    pub fn render(&self, t: &Tela) -> String {
        let word = |w: &[Symbol]| {
            w.iter()
                .map(|&a| format!("[{}]", t.alphabet().symbol_name(a)))
                .collect::<Vec<_>>()
                .join("")
        };
        format!("{}({})^w", word(&self.u), word(&self.v))
    }
}

fn words(symbols: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..symbols).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every lasso with `|u| <= max_prefix` and `1 <= |v| <= max_period`.
pub fn lassos(symbols: usize, max_prefix: usize, max_period: usize) -> Vec<Lasso> {
    let mut out = Vec::new();
    for lu in 0..=max_prefix {
        for u in words(symbols, lu) {
            for lv in 1..=max_period {
                for v in words(symbols, lv) {
                    out.push(Lasso { u: u.clone(), v });
                }
            }
        }
    }
    out
}

/// The first lasso accepted by both or by neither automaton.
pub fn find_disagreement(a: &Tela, complement: &Tela, sample: &[Lasso]) -> Result<Option<Lasso>> {
    for l in sample {
        if member_lasso(&l.u, &l.v, a)? == member_lasso(&l.u, &l.v, complement)? {
            return Ok(Some(l.clone()));
        }
    }
    Ok(None)
}

/// The first lasso on which the two automata differ.
pub fn find_difference(t1: &Tela, t2: &Tela, sample: &[Lasso]) -> Result<Option<Lasso>> {
    for l in sample {
        if member_lasso(&l.u, &l.v, t1)? != member_lasso(&l.u, &l.v, t2)? {
            return Ok(Some(l.clone()));
        }
    }
    Ok(None)
}
