//! Emerson-Lei emptiness and lasso-word membership.

use std::collections::VecDeque;

use crate::automaton::{Clause, ColourSet, StateId, StateSet, Symbol, Tela};
use crate::error::{Error, Result};
use crate::scc::tarjan;

/// A component of the graph left after removing a clause's Fin edges, with
/// the colours on its internal edges.
struct Witness {
    states: Vec<StateId>,
    clause: Clause,
}

fn find_witness(t: &Tela) -> Result<Option<Witness>> {
    let clauses = t.acceptance().dnf()?;
    let reachable = t.reachable();
    for clause in clauses {
        let allowed = |c: ColourSet| !c.intersects(clause.fin);
        let succ = |q: StateId| {
            t.transitions_from(q)
                .filter(|tr| allowed(tr.colours))
                .map(|tr| tr.target)
                .collect::<Vec<_>>()
        };
        for comp in tarjan(t.num_states(), succ) {
            if !reachable.contains(comp[0]) {
                continue;
            }
            let members: StateSet = comp.iter().copied().collect();
            let mut seen = ColourSet::EMPTY;
            let mut has_edge = false;
            for &q in &comp {
                for tr in t.transitions_from(q) {
                    if members.contains(tr.target) && allowed(tr.colours) {
                        has_edge = true;
                        seen = seen.union(tr.colours);
                    }
                }
            }
            if has_edge && clause.inf.is_subset(seen) {
                return Ok(Some(Witness {
                    states: comp,
                    clause,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether the automaton accepts no word.
pub fn is_empty(t: &Tela) -> Result<bool> {
    Ok(find_witness(t)?.is_none())
}

/// Shortest word leading from `from` to a state satisfying `goal`, using only
/// edges accepted by `edge`. Returns the word and the state reached.
fn bfs(
    t: &Tela,
    from: &[StateId],
    edge: impl Fn(StateId, Symbol, StateId, ColourSet) -> bool,
    goal: impl Fn(StateId) -> bool,
) -> Option<(Vec<Symbol>, StateId)> {
    let mut parent: Vec<Option<(StateId, Symbol)>> = vec![None; t.num_states()];
    let mut seen = StateSet::new();
    let mut queue = VecDeque::new();
    for &q in from {
        if seen.insert(q) {
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        if goal(q) {
            let mut word = Vec::new();
            let mut cur = q;
            while let Some((p, a)) = parent[cur] {
                word.push(a);
                cur = p;
            }
            word.reverse();
            return Some((word, q));
        }
        for tr in t.transitions_from(q) {
            if edge(q, tr.symbol, tr.target, tr.colours) && seen.insert(tr.target) {
                parent[tr.target] = Some((q, tr.symbol));
                queue.push_back(tr.target);
            }
        }
    }
    None
}

/// An accepted lasso `(u, v)` if the language is not empty.
pub fn find_accepting_lasso(t: &Tela) -> Result<Option<(Vec<Symbol>, Vec<Symbol>)>> {
    let Some(w) = find_witness(t)? else {
        return Ok(None);
    };
    let members: StateSet = w.states.iter().copied().collect();
    let inside = |p: StateId, _a: Symbol, q: StateId, c: ColourSet| {
        members.contains(p) && members.contains(q) && !c.intersects(w.clause.fin)
    };
    let (u, start) = bfs(t, t.initial(), |_, _, _, _| true, |q| members.contains(q))
        .expect("witness component is reachable");

    // A cycle from `start` through one edge of every required colour. With no
    // colour required, any internal edge will do.
    let mut targets: Vec<Option<u32>> = w.clause.inf.iter().map(Some).collect();
    if targets.is_empty() {
        targets.push(None);
    }
    let mut v = Vec::new();
    let mut cur = start;
    for colour in targets {
        let mut best: Option<(Vec<Symbol>, StateId)> = None;
        for &p in &w.states {
            for tr in t.transitions_from(p) {
                let fits = colour.is_none_or(|c| tr.colours.contains(c));
                if fits && inside(p, tr.symbol, tr.target, tr.colours) {
                    let (mut path, _) = bfs(t, &[cur], inside, |q| q == p).expect("component is strongly connected");
                    path.push(tr.symbol);
                    if best.as_ref().is_none_or(|(b, _)| path.len() < b.len()) {
                        best = Some((path, tr.target));
                    }
                }
            }
        }
        let (path, end) = best.expect("clause colours occur inside the component");
        v.extend(path);
        cur = end;
    }
    let (back, _) = bfs(t, &[cur], inside, |q| q == start).expect("component is strongly connected");
    v.extend(back);
    Ok(Some((u, v)))
}

/// Product of `t` with the single-run automaton of `u·v^ω`.
fn lasso_product(u: &[Symbol], v: &[Symbol], t: &Tela) -> Tela {
    let len = u.len() + v.len();
    let next_pos = |i: usize| if i + 1 < len { i + 1 } else { u.len() };
    let letter = |i: usize| if i < u.len() { u[i] } else { v[i - u.len()] };
    let n = t.num_states();
    let mut p = Tela::new(
        t.alphabet().clone(),
        len * n,
        t.colour_count(),
        t.acceptance().clone(),
    );
    for &q in t.initial() {
        p.add_initial(q);
    }
    for i in 0..len {
        let a = letter(i);
        let j = next_pos(i);
        for q in 0..n {
            for &(r, c) in t.successors(q, a) {
                p.add_transition(i * n + q, a, j * n + r, c);
            }
        }
    }
    p
}

/// Whether `t` accepts the word `u·v^ω`.
pub fn member_lasso(u: &[Symbol], v: &[Symbol], t: &Tela) -> Result<bool> {
    if v.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if let Some(&a) = u.iter().chain(v).find(|&&a| a >= t.num_symbols()) {
        return Err(Error::InvalidAutomaton(format!("symbol {a} is not in the alphabet")));
    }
    Ok(!is_empty(&lasso_product(u, v, t))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{Acceptance, Alphabet};

    fn one_loop(acc: Acceptance) -> Tela {
        let mut t = Tela::new(Alphabet::with_propositions(0), 1, 1, acc);
        t.add_initial(0);
        t.add_transition(0, 0, 0, ColourSet::singleton(0));
        t
    }

    #[test]
    fn single_loop() {
        assert!(!is_empty(&one_loop(Acceptance::Inf(0))).unwrap());
        assert!(is_empty(&one_loop(Acceptance::Fin(0))).unwrap());
    }

    #[test]
    fn two_loops_in_one_component() {
        let mut t = Tela::new(
            Alphabet::with_propositions(1),
            2,
            2,
            Acceptance::Inf(0).and(Acceptance::Inf(1)),
        );
        t.add_initial(0);
        t.add_transition(0, 0, 0, ColourSet::singleton(0));
        t.add_transition(0, 1, 1, ColourSet::EMPTY);
        t.add_transition(1, 0, 1, ColourSet::singleton(1));
        t.add_transition(1, 1, 0, ColourSet::EMPTY);
        assert!(!is_empty(&t).unwrap());
        let (u, v) = find_accepting_lasso(&t).unwrap().unwrap();
        assert!(member_lasso(&u, &v, &t).unwrap());

        // the same loops in separate components
        let mut s = Tela::new(t.alphabet().clone(), 2, 2, t.acceptance().clone());
        s.add_initial(0);
        s.add_transition(0, 0, 0, ColourSet::singleton(0));
        s.add_transition(0, 1, 1, ColourSet::EMPTY);
        s.add_transition(1, 0, 1, ColourSet::singleton(1));
        assert!(is_empty(&s).unwrap());
    }

    #[test]
    fn unreachable_component_does_not_count() {
        let mut t = Tela::new_buchi(Alphabet::with_propositions(0), 2);
        t.add_initial(0);
        t.add_transition(1, 0, 1, ColourSet::singleton(0));
        assert!(is_empty(&t).unwrap());
    }

    #[test]
    fn lasso_membership() {
        let t = one_loop(Acceptance::Inf(0));
        assert!(member_lasso(&[], &[0], &t).unwrap());
        assert_eq!(member_lasso(&[0], &[], &t), Err(Error::EmptyPeriod));
    }
}
