//! Random automata and an independent lasso-membership oracle for the
//! integration tests.
#![allow(dead_code)]

use modcompl::scc::SccClass;
use modcompl::{Acceptance, Alphabet, ColourSet, SccDecomposition, Symbol, Tela};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Shape parameters for random Büchi automata.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub states: usize,
    /// Probability of a second successor for a (state, symbol) pair.
    pub branching: f64,
    pub accepting: f64,
}

/// A complete Büchi automaton over two symbols with one initial state.
pub fn random_ba(rng: &mut StdRng, shape: Shape) -> Tela {
    let n = shape.states;
    let mut t = Tela::new_buchi(Alphabet::binary(), n);
    t.add_initial(0);
    for q in 0..n {
        for a in 0..2 {
            let k = if rng.random_bool(shape.branching) { 2 } else { 1 };
            let mut targets = Vec::new();
            for _ in 0..k {
                let target = rng.random_range(0..n);
                // no parallel edges differing only in colour
                if targets.contains(&target) {
                    continue;
                }
                targets.push(target);
                let c = if rng.random_bool(shape.accepting) {
                    ColourSet::singleton(0)
                } else {
                    ColourSet::EMPTY
                };
                t.add_transition(q, a, target, c);
            }
        }
    }
    t
}

pub fn classes(t: &Tela) -> Vec<SccClass> {
    let d = SccDecomposition::new(t);
    d.sccs().iter().map(|c| c.class()).collect()
}

/// `count` random complete BAs with at most `max_states` states; quarters of
/// the sample are forced to contain an IWC, a DAC, a NAC and both a
/// non-accepting and an accepting component respectively.
pub fn stratified_bas(seed: u64, count: usize, max_states: usize) -> Vec<Tela> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let want = match out.len() % 4 {
            0 => SccClass::Iwc,
            1 => SccClass::Dac,
            2 => SccClass::Nac,
            _ => SccClass::NonAccepting,
        };
        let shape = Shape {
            states: r.random_range(1..=max_states),
            branching: match want {
                SccClass::Nac => 0.35,
                _ => r.random_range(0.0..0.2),
            },
            accepting: r.random_range(0.1..0.6),
        };
        let t = random_ba(&mut r, shape);
        let cs = classes(&t);
        let ok = match want {
            SccClass::NonAccepting => {
                cs.contains(&SccClass::NonAccepting) && cs.iter().any(|c| *c != SccClass::NonAccepting)
            }
            c => cs.contains(&c),
        };
        if ok {
            out.push(t);
        }
    }
    out
}

/// A random condition over `colours` colours with nesting depth at most `depth`.
pub fn random_condition(rng: &mut StdRng, colours: u32, depth: usize) -> Acceptance {
    if depth <= 1 || rng.random_bool(0.3) {
        let c = rng.random_range(0..colours);
        return if rng.random_bool(0.5) {
            Acceptance::Inf(c)
        } else {
            Acceptance::Fin(c)
        };
    }
    let l = random_condition(rng, colours, depth - 1);
    let r = random_condition(rng, colours, depth - 1);
    if rng.random_bool(0.5) {
        l.and(r)
    } else {
        l.or(r)
    }
}

/// A random TELA, not necessarily complete, possibly with several initial states.
pub fn random_tela(rng: &mut StdRng, max_states: usize, max_colours: u32, depth: usize) -> Tela {
    let n = rng.random_range(1..=max_states);
    let k = rng.random_range(1..=max_colours);
    let acc = random_condition(rng, k, depth);
    let mut t = Tela::new(Alphabet::binary(), n, k, acc);
    t.add_initial(0);
    if n > 1 && rng.random_bool(0.3) {
        t.add_initial(rng.random_range(1..n));
    }
    for q in 0..n {
        for a in 0..2 {
            for _ in 0..rng.random_range(0..=2) {
                let mut c = ColourSet::EMPTY;
                for colour in 0..k {
                    if rng.random_bool(0.35) {
                        c.insert(colour);
                    }
                }
                t.add_transition(q, a, rng.random_range(0..n), c);
            }
        }
    }
    t
}

/// Every lasso `(u, v)` with `|u| <= max_u`, `1 <= |v| <= max_v` over `symbols` letters.
pub fn all_lassos(symbols: usize, max_u: usize, max_v: usize) -> Vec<(Vec<Symbol>, Vec<Symbol>)> {
    fn words(symbols: usize, len: usize) -> Vec<Vec<Symbol>> {
        (0..symbols.pow(len as u32))
            .map(|mut x| {
                (0..len)
                    .map(|_| {
                        let a = x % symbols;
                        x /= symbols;
                        a
                    })
                    .collect()
            })
            .collect()
    }
    let mut out = Vec::new();
    for lu in 0..=max_u {
        for u in words(symbols, lu) {
            for lv in 1..=max_v {
                for v in words(symbols, lv) {
                    out.push((u.clone(), v));
                }
            }
        }
    }
    out
}

/// Membership of `u·v^ω` decided without the library's emptiness check, on
/// the product of `t` with the lasso.
pub fn oracle_accepts(t: &Tela, u: &[Symbol], v: &[Symbol]) -> bool {
    let len = u.len() + v.len();
    let n = t.num_states();
    let letter = |i: usize| if i < u.len() { u[i] } else { v[i - u.len()] };
    let next_pos = |i: usize| if i + 1 < len { i + 1 } else { u.len() };
    // node = pos * n + q
    let mut edges: Vec<Vec<(usize, ColourSet)>> = vec![Vec::new(); len * n];
    for i in 0..len {
        for q in 0..n {
            for &(r, c) in t.successors(q, letter(i)) {
                edges[i * n + q].push((next_pos(i) * n + r, c));
            }
        }
    }
    has_accepting_cycle(&edges, t.initial(), t.acceptance())
}

/// Non-emptiness of `t`, decided the same way as [`oracle_accepts`].
pub fn oracle_nonempty(t: &Tela) -> bool {
    let edges: Vec<Vec<(usize, ColourSet)>> = (0..t.num_states())
        .map(|q| t.transitions_from(q).map(|tr| (tr.target, tr.colours)).collect())
        .collect();
    has_accepting_cycle(&edges, t.initial(), t.acceptance())
}

/// For every colour set `M` satisfying the condition, look for a reachable
/// component of the graph restricted to edges coloured inside `M` whose
/// internal edges together carry every colour of `M`.
fn has_accepting_cycle(edges: &[Vec<(usize, ColourSet)>], initial: &[usize], acc: &Acceptance) -> bool {
    let nodes = edges.len();
    let mut reach = vec![false; nodes];
    let mut stack: Vec<usize> = initial.to_vec();
    for &q in &stack {
        reach[q] = true;
    }
    while let Some(x) = stack.pop() {
        for &(y, _) in &edges[x] {
            if !reach[y] {
                reach[y] = true;
                stack.push(y);
            }
        }
    }
    let mut used = ColourSet::EMPTY;
    for out in edges {
        for &(_, c) in out {
            used = used.union(c);
        }
    }
    let used: Vec<u32> = used.iter().collect();
    for mask in 0u64..(1 << used.len()) {
        let m: ColourSet = used
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        if !acc.eval(m) {
            continue;
        }
        let allowed = |c: ColourSet| c.is_subset(m);
        let comp = components(edges, &reach, allowed);
        let mut seen = vec![ColourSet::EMPTY; nodes];
        let mut cyclic = vec![false; nodes];
        for x in (0..nodes).filter(|&x| reach[x]) {
            for &(y, c) in &edges[x] {
                if allowed(c) && comp[x] == comp[y] {
                    cyclic[comp[x]] = true;
                    seen[comp[x]] = seen[comp[x]].union(c);
                }
            }
        }
        if (0..nodes).any(|k| cyclic[k] && m.is_subset(seen[k])) {
            return true;
        }
    }
    false
}

/// Kosaraju over the nodes marked in `live`, using only allowed edges.
/// Returns a component id per node (`usize::MAX` for dead nodes).
fn components(
    edges: &[Vec<(usize, ColourSet)>],
    live: &[bool],
    allowed: impl Fn(ColourSet) -> bool,
) -> Vec<usize> {
    let n = edges.len();
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        for &(y, c) in &edges[x] {
            if live[x] && live[y] && allowed(c) {
                rev[y].push(x);
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for root in (0..n).filter(|&x| live[x]) {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(&(x, i)) = stack.last() {
            if let Some(&(y, c)) = edges[x].get(i) {
                stack.last_mut().unwrap().1 += 1;
                if live[y] && allowed(c) && !visited[y] {
                    visited[y] = true;
                    stack.push((y, 0));
                }
            } else {
                order.push(x);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &root in order.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = next;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &rev[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn fixture(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub const FIXTURES: [&str; 6] = ["b1.hoa", "b1_state.hoa", "b2.hoa", "b1_b2.hoa", "nac.hoa", "two_dac.hoa"];

pub fn load(name: &str) -> Tela {
    modcompl::hoa::parse_hoa(&fixture(name)).unwrap()
}

/// Whether the identity map is an isomorphism: same state and colour counts,
/// alphabet, initial states, acceptance and transitions.
pub fn same_automaton(a: &Tela, b: &Tela) -> bool {
    let sorted = |t: &Tela| {
        let mut v: Vec<_> = t
            .transitions()
            .map(|tr| (tr.source, tr.symbol, tr.target, tr.colours.bits()))
            .collect();
        v.sort();
        v
    };
    let init = |t: &Tela| {
        let mut v = t.initial().to_vec();
        v.sort();
        v
    };
    a.num_states() == b.num_states()
        && a.colour_count() == b.colour_count()
        && a.alphabet() == b.alphabet()
        && a.acceptance() == b.acceptance()
        && init(a) == init(b)
        && sorted(a) == sorted(b)
}
