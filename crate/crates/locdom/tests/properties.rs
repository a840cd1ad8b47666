//! Property-based invariants over random digraphs, cross-checked against
//! the exhaustive oracles in `common`.

mod common;

use common::*;
use locdom::bounds::{self, Ratio};
use locdom::certify::{self, Claim, Witness};
use locdom::digraph::PairRelation;
use locdom::families::{generate, Family, FamilySpec};
use locdom::{acyclic, exact, tournaments, Digraph, VertexSet};
use proptest::prelude::*;

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1)).prop_map(move |bits| {
            let mut arcs = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        if bits[i] {
                            arcs.push((u, v));
                        }
                        i += 1;
                    }
                }
            }
            Digraph::build(n, &arcs).unwrap()
        })
    })
}

fn digraph_and_set(max_n: usize) -> impl Strategy<Value = (Digraph, VertexSet)> {
    digraph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let s = VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v]));
            (g.clone(), s)
        })
    })
}

proptest! {
    /// A certificate for the combined claim is valid exactly when both
    /// single-claim certificates are.
    #[test]
    fn ld_is_conjunction_of_parts((g, s) in digraph_and_set(9)) {
        let ld = certify::is_locating_dominating(&g, &s);
        let dom = certify::is_dominating(&g, &s);
        let loc = certify::is_locating(&g, &s);
        prop_assert_eq!(ld.valid, dom.valid && loc.valid);
        prop_assert_eq!(ld.claim, Claim::LocatingDominating);
        // all three agree with the definition-level oracle
        let mask = s.iter().fold(0u64, |m, v| m | 1 << v);
        prop_assert_eq!(dom.valid, dominating_ok(&g, mask));
        prop_assert_eq!(loc.valid, locating_ok(&g, mask));
    }

    /// Witnesses really violate the claim they refute.
    #[test]
    fn witnesses_are_genuine((g, s) in digraph_and_set(9)) {
        match certify::is_locating_dominating(&g, &s).witness {
            None => {}
            Some(Witness::Undominated(v)) => {
                prop_assert!(!s.contains(v));
                prop_assert!(!g.in_neighbours(v).intersects(&s));
            }
            Some(Witness::UnlocatedPair(u, v)) => {
                prop_assert!(!s.contains(u) && !s.contains(v));
                prop_assert_eq!(certify::trace(&g, &s, u), certify::trace(&g, &s, v));
            }
        }
    }

    /// Supersets of locating-dominating sets stay locating-dominating.
    #[test]
    fn ld_sets_are_monotone((g, s) in digraph_and_set(8)) {
        if certify::is_locating_dominating(&g, &s).valid {
            for v in 0..g.n() {
                let mut bigger = s.clone();
                bigger.insert(v);
                prop_assert!(certify::is_locating_dominating(&g, &bigger).valid);
            }
        }
    }

    /// The S-partition is a partition of V∖S into trace classes, and n1+n2
    /// counts its parts.
    #[test]
    fn s_partition_round_trips((g, s) in digraph_and_set(9)) {
        let p = certify::s_partition(&g, &s);
        let mut seen = VertexSet::empty(g.n());
        for part in &p.parts {
            prop_assert!(!part.members.is_empty());
            prop_assert!(seen.is_disjoint(&part.members));
            seen.union_with(&part.members);
            for v in part.members.iter() {
                prop_assert_eq!(certify::trace(&g, &s, v), part.trace.clone());
            }
        }
        prop_assert_eq!(seen, s.complement());
        prop_assert_eq!(p.n1 + p.n2, p.parts.len());
        let distinct_traces = {
            let mut ts: Vec<_> = p.parts.iter().map(|q| q.trace.clone()).collect();
            ts.sort();
            ts.dedup();
            ts.len()
        };
        prop_assert_eq!(distinct_traces, p.parts.len());
    }

    /// Exact solvers agree with the exhaustive oracle, and the witness is
    /// optimal and valid.
    #[test]
    fn exact_matches_oracle(g in digraph_strategy(7)) {
        let gamma = exact::gamma(&g, 16).unwrap();
        prop_assert_eq!(gamma.value, brute_gamma(&g));
        prop_assert!(certify::is_dominating(&g, &gamma.witness).valid);

        let sep = exact::sep(&g, 16).unwrap();
        prop_assert_eq!(sep.value, brute_sep(&g));
        prop_assert!(certify::is_locating(&g, &sep.witness).valid);

        let ld = exact::ld(&g, 16).unwrap();
        prop_assert_eq!(ld.value, brute_ld(&g));
        prop_assert!(certify::is_locating_dominating(&g, &ld.witness).valid);

        // the sandwich LD − 1 ≤ SEP ≤ LD and γ ≤ LD
        prop_assert!(ld.value.saturating_sub(1) <= sep.value && sep.value <= ld.value);
        prop_assert!(gamma.value <= ld.value);
    }

    /// The returned witness is the canonical one: first valid subset in
    /// (size, lexicographic) enumeration order. SEP and LD also respect the
    /// n−1 ceilings.
    #[test]
    fn exact_witnesses_are_canonical(g in digraph_strategy(6)) {
        let n = g.n();
        let gamma = exact::gamma(&g, 16).unwrap();
        prop_assert_eq!(gamma.witness.to_vec(), brute_canonical_witness(&g, dominating_ok).1);
        let sep = exact::sep(&g, 16).unwrap();
        prop_assert_eq!(sep.witness.to_vec(), brute_canonical_witness(&g, locating_ok).1);
        let ld = exact::ld(&g, 16).unwrap();
        prop_assert_eq!(ld.witness.to_vec(), brute_canonical_witness(&g, ld_ok).1);

        prop_assert!(sep.value < n || n == 0);
        if g.arc_count() > 0 {
            prop_assert!(ld.value < n);
        }
    }

    /// Pair relations are symmetric, and the quasi-twin arm matches the
    /// spelled-out definition.
    #[test]
    fn pair_relation_symmetric(g in digraph_strategy(8)) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let a = g.pair_relation(u, v).unwrap();
                let b = g.pair_relation(v, u).unwrap();
                prop_assert_eq!(a, b);
                prop_assert_eq!(
                    matches!(a, PairRelation::QuasiTwin { .. }),
                    quasi_twins_naive(&g, u, v)
                );
            }
        }
    }

    /// No three vertices are pairwise quasi-twins.
    #[test]
    fn no_quasi_twin_triangle(g in digraph_strategy(12)) {
        let quasi = |a: usize, b: usize| {
            matches!(g.pair_relation(a, b).unwrap(), PairRelation::QuasiTwin { .. })
        };
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                for z in y + 1..g.n() {
                    prop_assert!(!(quasi(x, y) && quasi(y, z) && quasi(x, z)));
                }
            }
        }
    }

    /// Twin-free digraphs have at most one source.
    #[test]
    fn twin_free_digraphs_have_at_most_one_source(g in digraph_strategy(9)) {
        if g.is_twin_free() {
            prop_assert!(g.sources().len() <= 1);
        }
    }

    /// The twin-class lower bound: every twin class meets any valid LD set
    /// in all but at most one vertex.
    #[test]
    fn twin_classes_meet_ld_sets(g in digraph_strategy(7)) {
        let ld = exact::ld(&g, 16).unwrap();
        for class in exact::twin_classes(&g) {
            let inside = class.intersection(&ld.witness).len();
            prop_assert!(inside + 1 >= class.len());
        }
        prop_assert!(exact::twin_class_lower_bound(&g) <= ld.value);
    }
}

proptest! {
    /// Bondy reductions on random families over larger ground sets.
    #[test]
    fn bondy_reduce_on_random_families(
        member_masks in proptest::collection::btree_set(0u32..1024, 1..=8)
    ) {
        let ground = VertexSet::full(10);
        let members: Vec<VertexSet> = member_masks
            .iter()
            .map(|&m| VertexSet::from_vertices(10, (0..10).filter(|&v| m >> v & 1 == 1)))
            .collect();
        let family = acyclic::SetFamily { ground, members: members.clone() };
        let l = acyclic::bondy_reduce(&family).unwrap();
        prop_assert!(l.len() < members.len().max(1));
        let traces: Vec<VertexSet> = members.iter().map(|m| m.intersection(&l)).collect();
        for i in 0..traces.len() {
            for j in i + 1..traces.len() {
                prop_assert_ne!(&traces[i], &traces[j]);
            }
        }
        if members.iter().all(|m| !m.is_empty()) {
            let l = acyclic::bondy_locate_dominate(&family).unwrap();
            prop_assert!(l.len() <= members.len());
            for m in &members {
                prop_assert!(!m.intersection(&l).is_empty());
            }
        }
    }
}

#[test]
fn exact_witnesses_are_canonical_exhaustively_to_order_4() {
    for n in 1..=4 {
        for g in locdom::families::enumerate_all(n).unwrap() {
            assert_eq!(
                exact::gamma(&g, 16).unwrap().witness.to_vec(),
                brute_canonical_witness(&g, dominating_ok).1,
                "gamma witness on {g:?}"
            );
            assert_eq!(
                exact::sep(&g, 16).unwrap().witness.to_vec(),
                brute_canonical_witness(&g, locating_ok).1,
                "sep witness on {g:?}"
            );
            assert_eq!(
                exact::ld(&g, 16).unwrap().witness.to_vec(),
                brute_canonical_witness(&g, ld_ok).1,
                "ld witness on {g:?}"
            );
        }
    }
}

#[test]
fn no_quasi_twin_triple_on_larger_random_digraphs() {
    for seed in 0..40 {
        let n = 20 + (seed as usize) % 31; // up to 50
        let p = [(1, 10), (1, 2), (9, 10)][seed as usize % 3];
        let g = generate(&FamilySpec::with_seed(Family::RandomDigraph { n, p }, seed)).unwrap();
        let quasi: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| {
                matches!(g.pair_relation(u, v).unwrap(), PairRelation::QuasiTwin { .. })
            })
            .collect();
        for (i, &(a, b)) in quasi.iter().enumerate() {
            for &(c, d) in &quasi[i + 1..] {
                let third = match (a == c, a == d, b == c, b == d) {
                    (true, _, _, _) => Some((b, d)),
                    (_, true, _, _) => Some((b, c)),
                    (_, _, true, _) => Some((a, d)),
                    (_, _, _, true) => Some((a, c)),
                    _ => None,
                };
                if let Some((x, y)) = third {
                    assert!(
                        !matches!(g.pair_relation(x, y).unwrap(), PairRelation::QuasiTwin { .. }),
                        "pairwise quasi-twin triple via ({a},{b}), ({c},{d})"
                    );
                }
            }
        }
    }
}

#[test]
fn tournament_constructions_hold_on_random_instances() {
    for seed in 0..120 {
        let n = 3 + (seed as usize * 7) % 60;
        let g = generate(&FamilySpec::with_seed(Family::RandomTournament { n }, seed)).unwrap();
        let loc = tournaments::tournament_locating_set(&g).unwrap();
        assert!(loc.len() <= n / 2);
        assert!(certify::is_locating(&g, &loc).valid);
        let ld = tournaments::tournament_ld_set(&g).unwrap();
        assert!(ld.len() <= n.div_ceil(2));
        assert!(certify::is_locating_dominating(&g, &ld).valid);
    }
}

#[test]
fn acyclic_construction_holds_on_random_dags() {
    for seed in 0..120 {
        let n = 2 + (seed as usize * 5) % 40;
        let g = generate(&FamilySpec::with_seed(
            Family::RandomTwinFreeDag { n, p: (1, 2) },
            seed,
        ))
        .unwrap();
        let set = acyclic::acyclic_ld_set(&g).unwrap();
        assert!(certify::is_locating_dominating(&g, &set).valid);
        assert!(set.len() <= n.div_ceil(2));
    }
}

#[test]
fn general_method_traces_are_coherent() {
    for seed in 0..60 {
        let n = 5 + (seed as usize * 3) % 20;
        let g = generate(&FamilySpec::with_seed(
            Family::RandomSourceFreeTwinFree { n, p: (1, 2) },
            seed,
        ))
        .unwrap();
        let (set, trace) = bounds::ld_source_free_twin_free(&g, 40).unwrap();
        assert!(trace.initial_s.is_subset_of(&trace.final_s));
        assert_eq!(trace.d1.len(), trace.final_s.len() + trace.n1);
        assert_eq!(trace.d2.len(), n - trace.n1 - trace.n2);
        assert!(trace.bound.admits(set.len()));
        // maximality of the grown set
        for v in 0..n {
            if trace.final_s.contains(v) {
                continue;
            }
            let mut bigger = trace.final_s.clone();
            bigger.insert(v);
            let parts = certify::s_partition(&g, &bigger).part_count();
            assert!(!Ratio::HALF.holds_for(parts, bigger.len()));
        }
    }
}
