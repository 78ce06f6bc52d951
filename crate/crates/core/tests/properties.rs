mod common;

use common::*;
use modcompl::automaton::{complete, restrict_accepting};
use modcompl::framework::{mod_compl_sync, prepare, units, SyncBlock, SyncState};
use modcompl::lang::{intersect, is_empty, member_lasso, reduce};
use modcompl::scc::delta_scc;
use modcompl::{
    complement, Acceptance, BlockClass, BuchiIndex, ColourSet, Options, PartitionPolicy, Partitioning, SccClass,
    SccDecomposition, Simulation, SinkMode, StateId, StateSet, Strategy, Tela,
};
use proptest::prelude::*;
use rand::Rng;

fn ba(seed: u64, max_states: usize) -> Tela {
    let mut r = rng(seed);
    let shape = Shape {
        states: r.random_range(1..=max_states),
        branching: r.random_range(0.0..0.5),
        accepting: r.random_range(0.1..0.6),
    };
    random_ba(&mut r, shape)
}

/// Drops a random set of transitions so that the result is usually incomplete.
fn thinned(t: &Tela, seed: u64) -> Tela {
    let mut r = rng(seed ^ 0x5eed);
    let mut out = Tela::new(t.alphabet().clone(), t.num_states(), t.colour_count(), t.acceptance().clone());
    for &q in t.initial() {
        out.add_initial(q);
    }
    for tr in t.transitions() {
        if r.random_bool(0.7) {
            out.add_transition(tr.source, tr.symbol, tr.target, tr.colours);
        }
    }
    out
}

fn with_initial(t: &Tela, q: StateId) -> Tela {
    let mut out = Tela::new(t.alphabet().clone(), t.num_states(), t.colour_count(), t.acceptance().clone());
    out.add_initial(q);
    for tr in t.transitions() {
        out.add_transition(tr.source, tr.symbol, tr.target, tr.colours);
    }
    out
}

fn sample() -> Vec<(Vec<usize>, Vec<usize>)> {
    all_lassos(2, 2, 3)
}

/// Whether some cycle inside `scc` avoids accepting transitions, by explicit
/// enumeration of simple cycles.
fn has_rejecting_cycle(a: &Tela, scc: &StateSet) -> bool {
    fn dfs(a: &Tela, scc: &StateSet, start: StateId, q: StateId, seen: &mut Vec<StateId>) -> bool {
        for tr in a.transitions_from(q) {
            if !scc.contains(tr.target) || tr.colours.contains(0) {
                continue;
            }
            if tr.target == start {
                return true;
            }
            if tr.target > start && !seen.contains(&tr.target) {
                seen.push(tr.target);
                if dfs(a, scc, start, tr.target, seen) {
                    return true;
                }
                seen.pop();
            }
        }
        false
    }
    scc.iter().any(|s| dfs(a, scc, s, s, &mut vec![s]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pure_inf_conditions_are_monotone(seed in any::<u64>(), m in 0u64..16, extra in 0u64..16) {
        let mut r = rng(seed);
        let mut acc = Acceptance::Inf(r.random_range(0..4));
        for _ in 0..r.random_range(0..4) {
            let leaf = Acceptance::Inf(r.random_range(0..4));
            acc = if r.random_bool(0.5) { acc.and(leaf) } else { acc.or(leaf) };
        }
        let small = ColourSet::from_bits(m);
        let big = ColourSet::from_bits(m | extra);
        prop_assert!(!acc.eval(small) || acc.eval(big));
    }

    #[test]
    fn completion_is_complete_and_keeps_the_language(seed in any::<u64>()) {
        let a = thinned(&ba(seed, 5), seed);
        let c = complete(&a);
        prop_assert!(c.is_complete());
        for (u, v) in sample() {
            prop_assert_eq!(oracle_accepts(&a, &u, &v), oracle_accepts(&c, &u, &v));
        }
    }

    #[test]
    fn restricting_accepting_keeps_the_shape(seed in any::<u64>(), keep in any::<u8>()) {
        let a = ba(seed, 6);
        let s: StateSet = (0..a.num_states()).filter(|q| keep & (1 << q) != 0).collect();
        let b = restrict_accepting(&a, &s);
        prop_assert_eq!(a.num_states(), b.num_states());
        prop_assert_eq!(a.initial(), b.initial());
        let edges = |t: &Tela| {
            let mut v: Vec<_> = t.transitions().map(|t| (t.source, t.symbol, t.target)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(edges(&a), edges(&b));
        for tr in b.transitions() {
            prop_assert!(!tr.colours.contains(0) || s.contains(tr.source));
        }
    }

    #[test]
    fn partitions_are_disjoint_and_cover_accepting_sccs(seed in any::<u64>()) {
        let a = complete(&ba(seed, 8));
        let sccs = SccDecomposition::new(&a);
        for policy in [PartitionPolicy::Default, PartitionPolicy::PerScc, PartitionPolicy::MergeAll] {
            let p = Partitioning::new(&a, &sccs, policy);
            prop_assert!(p.is_valid_for(&sccs));
            let mut covered = StateSet::new();
            for b in &p.blocks {
                prop_assert!(covered.is_disjoint(&b.states));
                covered.union_with(&b.states);
            }
            let mut accepting = StateSet::new();
            for s in sccs.accepting() {
                accepting.union_with(&s.states);
            }
            prop_assert_eq!(covered, accepting);
        }
    }

    #[test]
    fn inherent_weakness_matches_cycle_enumeration(seed in any::<u64>()) {
        let a = ba(seed, 8);
        let sccs = SccDecomposition::new(&a);
        for s in sccs.sccs().iter().filter(|s| s.is_accepting) {
            prop_assert_eq!(s.is_inherently_weak, !has_rejecting_cycle(&a, &s.states), "{:?}", s.states);
        }
    }

    #[test]
    fn scc_successors_are_successors(seed in any::<u64>(), bits in any::<u8>()) {
        let a = ba(seed, 8);
        let sccs = SccDecomposition::new(&a);
        let idx = BuchiIndex::new(&a).unwrap();
        let u: StateSet = (0..a.num_states()).filter(|q| bits & (1 << q) != 0).collect();
        for sym in a.alphabet().symbols() {
            prop_assert!(delta_scc(&a, &sccs, &u, sym).is_subset(&idx.post(&u, sym)));
        }
    }

    #[test]
    fn pruning_keeps_a_dominating_state(seed in any::<u64>(), bits in any::<u8>()) {
        let a = ba(seed, 8);
        let sim = Simulation::new(&a).unwrap();
        let s: StateSet = (0..a.num_states()).filter(|q| bits & (1 << q) != 0).collect();
        let p = sim.prune(&s);
        prop_assert!(p.is_subset(&s));
        prop_assert_eq!(sim.prune(&p), p.clone());
        for q in s.iter() {
            prop_assert!(p.contains(q) || p.iter().any(|q2| sim.simulates(q2, q)));
        }
    }

    #[test]
    fn simulation_implies_language_inclusion(seed in any::<u64>()) {
        let a = ba(seed, 5);
        let sim = Simulation::new(&a).unwrap();
        let lassos = sample();
        for p in 0..a.num_states() {
            for q in 0..a.num_states() {
                if p == q || !sim.simulates(q, p) {
                    continue;
                }
                let (ap, aq) = (with_initial(&a, p), with_initial(&a, q));
                for (u, v) in &lassos {
                    prop_assert!(!oracle_accepts(&ap, u, v) || oracle_accepts(&aq, u, v));
                }
            }
        }
    }

    #[test]
    fn block_states_respect_their_invariants(seed in any::<u64>()) {
        let a = ba(seed, 6);
        let input = prepare(&a, SinkMode::CompleteInput).unwrap();
        let idx = BuchiIndex::new(&input).unwrap();
        for shared in [false, true] {
            let p = Partitioning::new(&input, idx.sccs(), PartitionPolicy::PerScc);
            let us = units(&p, shared);
            let algs: Vec<_> = us.iter().map(|u| SyncBlock::new(&idx, u, 1 << 16).unwrap()).collect();
            let c = mod_compl_sync(&input, &idx, None, &algs).unwrap();
            let mut h = vec![None; c.tela.num_states()];
            for (q, m) in c.macrostates.iter().enumerate() {
                let Some(m) = m else { continue };
                h[q] = Some(m.reached.clone());
                prop_assert_eq!(m.parts.len(), us.len());
                for (part, unit) in m.parts.iter().zip(&us) {
                    let inside = m.reached.intersection(&unit.states());
                    match part {
                        SyncState::Iwc(s) => {
                            prop_assert!(s.b.is_subset(&s.c));
                            prop_assert!(s.c.is_subset(&inside));
                        }
                        SyncState::Dac(s) => {
                            prop_assert!(s.c.is_disjoint(&s.s));
                            prop_assert!(s.b.is_subset(&s.c.union(&s.s)));
                            prop_assert!(s.c.union(&s.s).is_subset(&inside));
                        }
                        SyncState::Idac(s) => {
                            prop_assert!(s.is_none_or(|q| inside.contains(q)));
                        }
                        _ => {}
                    }
                }
            }
            // reached sets follow the subset construction
            for tr in c.tela.transitions() {
                if let (Some(x), Some(y)) = (&h[tr.source], &h[tr.target]) {
                    prop_assert_eq!(y, &idx.post(x, tr.symbol));
                }
            }
            // colours of distinct blocks never overlap
            prop_assert!(c.tela.transitions().all(|t| t.colours.bound() <= c.tela.colour_count()));
        }
    }

    #[test]
    fn weak_and_deterministic_blocks_branch_little(seed in any::<u64>()) {
        let a = ba(seed, 6);
        let input = prepare(&a, SinkMode::CompleteInput).unwrap();
        let idx = BuchiIndex::new(&input).unwrap();
        let p = Partitioning::new(&input, idx.sccs(), PartitionPolicy::PerScc);
        for unit in units(&p, false) {
            let alg = SyncBlock::new(&idx, &unit, 1 << 16).unwrap();
            let c = mod_compl_sync(&input, &idx, None, std::slice::from_ref(&alg)).unwrap();
            let limit = match alg {
                SyncBlock::Iwc(_) | SyncBlock::Idac(_) => 1,
                SyncBlock::Dac(_) => 2,
                _ => continue,
            };
            for q in 0..c.tela.num_states() {
                for sym in c.tela.alphabet().symbols() {
                    let n = c.tela.successors(q, sym).len();
                    prop_assert!(n <= limit, "{} successors in {}", n, unit.describe());
                }
            }
            // a single block keeps its own condition
            let acc = c.tela.acceptance();
            prop_assert!(matches!(acc, Acceptance::Inf(0) | Acceptance::Fin(0)), "{}", acc);
        }
    }

    #[test]
    fn complement_disagrees_with_input_everywhere(seed in any::<u64>(), s in 0usize..3) {
        let a = ba(seed, 5);
        let strategy = Strategy::ALL[s];
        let c = complement(&a, &Options { strategy, ..Options::default() }).unwrap();
        for (u, v) in sample() {
            prop_assert_ne!(oracle_accepts(&a, &u, &v), oracle_accepts(&c.tela, &u, &v));
        }
    }

    #[test]
    fn membership_distributes_over_intersection(s1 in any::<u64>(), s2 in any::<u64>()) {
        let mut r1 = rng(s1);
        let mut r2 = rng(s2);
        let t1 = random_tela(&mut r1, 4, 2, 2);
        let t2 = random_tela(&mut r2, 4, 2, 2);
        let both = intersect(&t1, &t2).unwrap();
        for (u, v) in sample() {
            let lhs = member_lasso(&u, &v, &both).unwrap();
            let rhs = member_lasso(&u, &v, &t1).unwrap() && member_lasso(&u, &v, &t2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduction_keeps_membership(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_tela(&mut r, 6, 3, 3);
        let small = reduce(&t);
        prop_assert!(small.num_states() <= t.num_states());
        for (u, v) in sample() {
            prop_assert_eq!(member_lasso(&u, &v, &t).unwrap(), member_lasso(&u, &v, &small).unwrap());
        }
    }

    #[test]
    fn member_lasso_matches_the_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_tela(&mut r, 5, 3, 3);
        for (u, v) in sample() {
            prop_assert_eq!(member_lasso(&u, &v, &t).unwrap(), oracle_accepts(&t, &u, &v));
        }
        prop_assert_eq!(is_empty(&t).unwrap(), !oracle_nonempty(&t));
    }
}

#[test]
fn idac_is_never_larger_than_dac_on_fixtures() {
    for name in FIXTURES {
        let a = load(name);
        let with_idac = complement(&a, &Options::default()).unwrap();
        if !with_idac.partitioning.blocks.iter().any(|b| b.class == BlockClass::Idac) {
            continue;
        }
        let without = complement(
            &a,
            &Options {
                use_idac: false,
                ..Options::default()
            },
        )
        .unwrap();
        assert!(with_idac.tela.num_states() <= without.tela.num_states(), "{name}");
    }
}

#[test]
fn b2_with_idac_has_at_most_n_plus_one_states() {
    let a = load("b2.hoa");
    let c = complement(&a, &Options::default()).unwrap();
    assert_eq!(c.partitioning.blocks[0].class, BlockClass::Idac);
    assert!(c.tela.num_states() <= a.num_states() + 1);
}

#[test]
fn stratified_sample_has_every_class() {
    let bas = stratified_bas(1, 40, 6);
    for class in [SccClass::Iwc, SccClass::Dac, SccClass::Nac, SccClass::NonAccepting] {
        assert!(bas.iter().any(|a| classes(a).contains(&class)), "{class:?}");
    }
}
