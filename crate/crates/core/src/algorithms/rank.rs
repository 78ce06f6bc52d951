//! Rank-based complementation of a general accepting block.
//!
//! Runs that have not yet entered the block's region are summarised by a box
//! state `⊡`. Ranks are assigned to the states of the region, which is the
//! block together with every state lying on a path between two block states.

use std::collections::BTreeMap;
use std::fmt;

use super::{acc_colour, Phase, RoundRobinComplement, Step, Successors};
use crate::automaton::{Acceptance, StateId, StateSet};
use crate::error::{Error, Result};
use crate::index::BuchiIndex;

/// Default bound on the number of rankings a single lift may enumerate.
pub const DEFAULT_LIFT_CAP: usize = 200_000;

/// Largest ranking domain for which maximal rankings are enumerated at all.
pub const MAX_LIFT_DOMAIN: usize = 12;

/// A region state or the box.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BoxState {
    State(StateId),
    Box,
}

impl fmt::Display for BoxState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxState::State(q) => write!(f, "{q}"),
            BoxState::Box => f.write_str("⊡"),
        }
    }
}

/// A set of region states plus possibly the box.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WaitSet {
    pub states: StateSet,
    pub boxed: bool,
}

impl fmt::Display for WaitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.states.iter().map(|q| q.to_string()).collect();
        if self.boxed {
            parts.push("⊡".to_string());
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A partial ranking, kept sorted by key.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Ranking(Vec<(BoxState, u32)>);

impl Ranking {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (BoxState, u32)>) -> Self {
        let map: BTreeMap<_, _> = pairs.into_iter().collect();
        Ranking(map.into_iter().collect())
    }

    pub fn get(&self, q: BoxState) -> Option<u32> {
        self.0
            .binary_search_by_key(&q, |&(k, _)| k)
            .ok()
            .map(|i| self.0[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoxState, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_box(&self) -> bool {
        self.0.last().is_some_and(|&(k, _)| k == BoxState::Box)
    }

    /// The largest rank; `None` for the empty ranking.
    pub fn rank(&self) -> Option<u32> {
        self.0.iter().map(|&(_, v)| v).max()
    }

    /// Region states with rank `v`.
    pub fn states_with(&self, v: u32) -> StateSet {
        self.0
            .iter()
            .filter_map(|&(k, r)| match k {
                BoxState::State(q) if r == v => Some(q),
                _ => None,
            })
            .collect()
    }

    /// Odd rank and onto the odd numbers up to it.
    pub fn is_tight(&self) -> bool {
        let Some(r) = self.rank() else {
            return false;
        };
        r % 2 == 1 && (1..=r).step_by(2).all(|v| self.0.iter().any(|&(_, x)| x == v))
    }

    /// Tight and, if the box is present, the box alone carries the top rank.
    pub fn is_box_tight(&self) -> bool {
        if !self.is_tight() {
            return false;
        }
        match self.get(BoxState::Box) {
            None => true,
            Some(b) => {
                let r = self.rank().unwrap();
                b == r && self.0.iter().all(|&(k, v)| k == BoxState::Box || v < r)
            }
        }
    }

    fn domain(&self) -> WaitSet {
        WaitSet {
            states: self
                .0
                .iter()
                .filter_map(|&(k, _)| match k {
                    BoxState::State(q) => Some(q),
                    BoxState::Box => None,
                })
                .collect(),
            boxed: self.has_box(),
        }
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RankPassive {
    Waiting(WaitSet),
    Tight(Ranking),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RankActive {
    Waiting(WaitSet),
    /// `(f, O, i)`: the ranking, the runs of even rank `i` still owing an
    /// accepting visit, and `i` itself.
    Tight { f: Ranking, o: StateSet, i: u32 },
}

impl RankPassive {
    pub fn ranking(&self) -> Option<&Ranking> {
        match self {
            RankPassive::Tight(f) => Some(f),
            RankPassive::Waiting(_) => None,
        }
    }
}

impl RankActive {
    pub fn ranking(&self) -> Option<&Ranking> {
        match self {
            RankActive::Tight { f, .. } => Some(f),
            RankActive::Waiting(_) => None,
        }
    }
}

fn even_floor(v: u32) -> u32 {
    v & !1
}

#[derive(Clone, Debug)]
pub struct Rank<'a> {
    idx: &'a BuchiIndex,
    block: StateSet,
    region: StateSet,
    coreach: StateSet,
    lift_cap: usize,
}

impl<'a> Rank<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        Self::with_cap(idx, block, DEFAULT_LIFT_CAP)
    }

    pub fn with_cap(idx: &'a BuchiIndex, block: StateSet, lift_cap: usize) -> Self {
        let coreach = idx.coreach_set(&block);
        let region = idx.reach_set(&block).intersection(&coreach);
        Rank {
            idx,
            block,
            region,
            coreach,
            lift_cap,
        }
    }

    pub fn block(&self) -> &StateSet {
        &self.block
    }

    /// Block states plus states on paths between them.
    pub fn region(&self) -> &StateSet {
        &self.region
    }

    /// Largest rank any ranking of this instance can use.
    pub fn rank_bound(&self) -> u32 {
        2 * (self.region.len() as u32 + 1) - 1
    }

    /// Region states entered from outside the region.
    fn entries(&self, step: &Step) -> StateSet {
        let outside = step.reached.difference(&self.region);
        let mut e = self.idx.post(&outside, step.symbol);
        e.intersect_with(&self.region);
        e.intersect_with(step.next);
        e
    }

    /// Whether some run outside the region may still enter the block.
    fn box_alive(&self, step: &Step) -> bool {
        step.next.difference(&self.region).intersects(&self.coreach)
    }

    fn region_post(&self, step: &Step, u: &StateSet) -> StateSet {
        let mut e = self.idx.post(u, step.symbol);
        e.intersect_with(&self.region);
        e.intersect_with(step.next);
        e
    }

    fn ext(&self, step: &Step, w: &WaitSet) -> WaitSet {
        let mut states = self.region_post(step, &w.states);
        let mut boxed = false;
        if w.boxed {
            states.union_with(&self.entries(step));
            boxed = self.box_alive(step);
        }
        WaitSet { states, boxed }
    }

    fn accepting_in_block(&self, p: StateId, step: &Step, q: StateId) -> bool {
        self.block.contains(p) && self.block.contains(q) && self.idx.is_accepting(p, step.symbol, q)
    }

    /// The pointwise largest successor ranking, if it is box-tight with the same rank.
    pub fn maxrank(&self, step: &Step, f: &Ranking) -> Option<Ranking> {
        let r = f.rank()?;
        let mut g: BTreeMap<BoxState, u32> = BTreeMap::new();
        let mut bound = |k: BoxState, v: u32| {
            g.entry(k).and_modify(|x| *x = (*x).min(v)).or_insert(v);
        };
        for (k, v) in f.iter() {
            match k {
                BoxState::State(p) => {
                    for t in self.idx.succ(p, step.symbol).iter() {
                        if self.region.contains(t) && step.next.contains(t) {
                            let cap = if self.accepting_in_block(p, step, t) {
                                even_floor(v)
                            } else {
                                v
                            };
                            bound(BoxState::State(t), cap);
                        }
                    }
                }
                BoxState::Box => {
                    for t in self.entries(step).iter() {
                        bound(BoxState::State(t), v);
                    }
                    if self.box_alive(step) {
                        bound(BoxState::Box, v);
                    }
                }
            }
        }
        if g.contains_key(&BoxState::Box) {
            for (k, v) in g.iter_mut() {
                if *k != BoxState::Box {
                    *v = (*v).min(r.saturating_sub(1));
                }
            }
        }
        let g = Ranking(g.into_iter().collect());
        (g.rank() == Some(r) && g.is_box_tight()).then_some(g)
    }

    /// All pointwise-maximal box-tight rankings with the given domain.
    pub fn max_tight_rankings(&self, dom: &WaitSet) -> Result<Vec<Ranking>> {
        let states: Vec<StateId> = dom.states.iter().collect();
        let m = states.len();
        let size = m + dom.boxed as usize;
        if size == 0 {
            return Ok(Vec::new());
        }
        // number of odd ranks below the top that individual states must cover
        let max_k = if dom.boxed { m } else { m - 1 };
        let mut total: usize = 0;
        let mut perms: usize = 1;
        for k in 0..=max_k {
            if k > 0 {
                perms = perms.saturating_mul(m - k + 1);
            }
            total = total.saturating_add(perms);
        }
        if size > MAX_LIFT_DOMAIN || total > self.lift_cap {
            return Err(Error::RankCapExceeded {
                domain: size,
                limit: self.lift_cap,
            });
        }
        let mut out = Vec::with_capacity(total);
        let mut chosen = Vec::new();
        let mut used = vec![false; m];
        for k in 0..=max_k {
            let r = 2 * k as u32 + 1;
            let rest = if dom.boxed { r - 1 } else { r };
            enumerate(&states, k, &mut chosen, &mut used, &mut |chosen: &[usize]| {
                let mut pairs: Vec<(BoxState, u32)> = Vec::with_capacity(size);
                for (j, &q) in states.iter().enumerate() {
                    let v = match chosen.iter().position(|&c| c == j) {
                        Some(pos) => 2 * pos as u32 + 1,
                        None => rest,
                    };
                    pairs.push((BoxState::State(q), v));
                }
                if dom.boxed {
                    pairs.push((BoxState::Box, r));
                }
                out.push(Ranking(pairs));
            });
        }
        Ok(out)
    }

    fn lift_waiting(&self, w: &WaitSet) -> Result<Vec<RankActive>> {
        let mut out = vec![RankActive::Waiting(w.clone())];
        for g in self.max_tight_rankings(w)? {
            let o = g.states_with(0);
            out.push(RankActive::Tight { f: g, o, i: 0 });
        }
        Ok(out)
    }

    fn tight_active(&self, f: Ranking, o: StateSet, i: u32) -> (Phase<RankPassive, RankActive>, crate::automaton::ColourSet) {
        let r = f.rank().unwrap();
        if o.is_empty() && i + 1 == r {
            (Phase::Passive(RankPassive::Tight(f)), acc_colour(true))
        } else {
            (Phase::Active(RankActive::Tight { f, o, i }), acc_colour(false))
        }
    }
}

/// Calls `visit` with every ordered selection of `k` distinct indices.
fn enumerate(
    states: &[StateId],
    k: usize,
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for j in 0..states.len() {
        if !used[j] {
            used[j] = true;
            chosen.push(j);
            enumerate(states, k, chosen, used, visit);
            chosen.pop();
            used[j] = false;
        }
    }
}

impl RoundRobinComplement for Rank<'_> {
    type Passive = RankPassive;
    type Active = RankActive;

    fn name(&self) -> &'static str {
        "rank"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<RankPassive>> {
        let states = init.intersection(&self.region);
        let boxed = init.difference(&self.region).intersects(&self.coreach);
        Ok(vec![RankPassive::Waiting(WaitSet { states, boxed })])
    }

    fn passive_successors(&self, step: &Step, m: &RankPassive) -> Result<Successors<RankPassive>> {
        Ok(match m {
            RankPassive::Waiting(w) => vec![(RankPassive::Waiting(self.ext(step, w)), acc_colour(false))],
            RankPassive::Tight(f) => self
                .maxrank(step, f)
                .map(|g| (RankPassive::Tight(g), acc_colour(false)))
                .into_iter()
                .collect(),
        })
    }

    fn lift(&self, m: &RankPassive) -> Result<Vec<RankActive>> {
        Ok(match m {
            RankPassive::Waiting(w) => self.lift_waiting(w)?,
            RankPassive::Tight(f) => vec![RankActive::Tight {
                o: f.states_with(0),
                f: f.clone(),
                i: 0,
            }],
        })
    }

    fn active_successors(
        &self,
        step: &Step,
        m: &RankActive,
    ) -> Result<Successors<Phase<RankPassive, RankActive>>> {
        match m {
            RankActive::Waiting(w) => {
                let u = self.ext(step, w);
                if w.states.is_empty() {
                    return Ok(vec![(Phase::Passive(RankPassive::Waiting(u)), acc_colour(true))]);
                }
                Ok(self
                    .lift_waiting(&u)?
                    .into_iter()
                    .map(|a| (Phase::Active(a), acc_colour(false)))
                    .collect())
            }
            RankActive::Tight { f, o, i } => {
                let Some(g) = self.maxrank(step, f) else {
                    return Ok(Vec::new());
                };
                let r = g.rank().unwrap();
                let mut out = Vec::with_capacity(2);
                if o.is_empty() {
                    let i2 = (i + 2) % (r + 1);
                    let o2 = g.states_with(i2);
                    out.push(self.tight_active(g, o2, i2));
                } else {
                    let m2 = self.region_post(step, o).intersection(&g.states_with(*i));
                    if *i != 0 && !m2.is_empty() {
                        let lowered = Ranking(
                            g.iter()
                                .map(|(k, v)| match k {
                                    BoxState::State(q) if m2.contains(q) => (k, v - 1),
                                    _ => (k, v),
                                })
                                .collect(),
                        );
                        out.push(self.tight_active(g, m2, *i));
                        out.push(self.tight_active(lowered, StateSet::new(), *i));
                    } else {
                        out.push(self.tight_active(g, m2, *i));
                    }
                }
                Ok(out)
            }
        }
    }

    fn render_passive(&self, m: &RankPassive) -> String {
        match m {
            RankPassive::Waiting(w) => format!("W{w}"),
            RankPassive::Tight(f) => f.to_string(),
        }
    }

    fn render_active(&self, m: &RankActive) -> String {
        match m {
            RankActive::Waiting(w) => format!("W{w}*"),
            RankActive::Tight { f, o, i } => format!("({f},{o},{i})"),
        }
    }
}

impl RankPassive {
    pub fn domain(&self) -> WaitSet {
        match self {
            RankPassive::Waiting(w) => w.clone(),
            RankPassive::Tight(f) => f.domain(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{Alphabet, ColourSet, Tela};

    fn self_loop(accepting: bool) -> Tela {
        let mut t = Tela::new_buchi(Alphabet::new(vec![]), 1);
        t.add_initial(0);
        let c = if accepting { ColourSet::singleton(0) } else { ColourSet::EMPTY };
        t.add_transition(0, 0, 0, c);
        t
    }

    fn step<'s>(h: &'s StateSet, next: &'s StateSet) -> Step<'s> {
        Step {
            reached: h,
            symbol: 0,
            next,
        }
    }

    #[test]
    fn maxrank_keeps_rejecting_loops() {
        let a = self_loop(false);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::new(&idx, StateSet::singleton(0));
        let f = Ranking::from_pairs([(BoxState::State(0), 1)]);
        let h = StateSet::singleton(0);
        assert_eq!(rank.maxrank(&step(&h, &h), &f), Some(f));
    }

    #[test]
    fn maxrank_fails_on_accepting_loop_of_rank_one() {
        let a = self_loop(true);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::new(&idx, StateSet::singleton(0));
        let f = Ranking::from_pairs([(BoxState::State(0), 1)]);
        let h = StateSet::singleton(0);
        assert_eq!(rank.maxrank(&step(&h, &h), &f), None);
    }

    #[test]
    fn lift_of_singletons() {
        let a = self_loop(false);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::new(&idx, StateSet::singleton(0));
        let lifted = rank
            .lift(&RankPassive::Waiting(WaitSet {
                states: StateSet::singleton(0),
                boxed: false,
            }))
            .unwrap();
        assert_eq!(lifted.len(), 2);
        assert_eq!(
            lifted[1],
            RankActive::Tight {
                f: Ranking::from_pairs([(BoxState::State(0), 1)]),
                o: StateSet::new(),
                i: 0
            }
        );
        let empty = rank.lift(&RankPassive::Waiting(WaitSet::default())).unwrap();
        assert_eq!(empty, vec![RankActive::Waiting(WaitSet::default())]);
    }

    #[test]
    fn lift_with_box_puts_box_on_top() {
        let a = self_loop(false);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::new(&idx, StateSet::singleton(0));
        let dom = WaitSet {
            states: StateSet::singleton(0),
            boxed: true,
        };
        let got = rank.max_tight_rankings(&dom).unwrap();
        assert_eq!(
            got,
            vec![
                Ranking::from_pairs([(BoxState::State(0), 0), (BoxState::Box, 1)]),
                Ranking::from_pairs([(BoxState::State(0), 1), (BoxState::Box, 3)]),
            ]
        );
        assert!(got.iter().all(Ranking::is_box_tight));
    }

    /// Every box-tight ranking over the domain, by brute force.
    fn all_box_tight(states: &[StateId], boxed: bool) -> Vec<Ranking> {
        let size = states.len() + boxed as usize;
        let top = 2 * size as u32;
        let mut out = Vec::new();
        let mut vals = vec![0u32; size];
        loop {
            let mut pairs: Vec<(BoxState, u32)> =
                states.iter().zip(&vals).map(|(&q, &v)| (BoxState::State(q), v)).collect();
            if boxed {
                pairs.push((BoxState::Box, vals[size - 1]));
            }
            let f = Ranking::from_pairs(pairs);
            if f.is_box_tight() {
                out.push(f);
            }
            let mut j = 0;
            while j < size {
                vals[j] += 1;
                if vals[j] <= top {
                    break;
                }
                vals[j] = 0;
                j += 1;
            }
            if j == size {
                return out;
            }
        }
    }

    fn dominated(f: &Ranking, g: &Ranking) -> bool {
        f.rank() == g.rank() && f.iter().all(|(k, v)| g.get(k).is_some_and(|w| v <= w))
    }

    #[test]
    fn lift_enumerates_exactly_the_maximal_rankings() {
        let a = self_loop(false);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::new(&idx, StateSet::singleton(0));
        for (states, boxed) in [(vec![0, 1], false), (vec![0, 1], true), (vec![0, 1, 2], false), (vec![0, 1, 2], true)] {
            let all = all_box_tight(&states, boxed);
            let maximal: std::collections::HashSet<Ranking> = all
                .iter()
                .filter(|f| !all.iter().any(|g| g != *f && dominated(f, g)))
                .cloned()
                .collect();
            let dom = WaitSet {
                states: states.iter().copied().collect(),
                boxed,
            };
            let got: std::collections::HashSet<Ranking> =
                rank.max_tight_rankings(&dom).unwrap().into_iter().collect();
            assert_eq!(got, maximal, "domain {states:?} boxed {boxed}");
        }
    }

    #[test]
    fn lift_cap_is_enforced() {
        let a = self_loop(false);
        let idx = BuchiIndex::new(&a).unwrap();
        let rank = Rank::with_cap(&idx, StateSet::singleton(0), 10);
        let dom = WaitSet {
            states: (0..5).collect(),
            boxed: false,
        };
        assert_eq!(
            rank.max_tight_rankings(&dom),
            Err(Error::RankCapExceeded { domain: 5, limit: 10 })
        );
    }
}
