//! Locating-dominating sets of size ⌈n/2⌉ for twin-free acyclic digraphs,
//! built from a source-level decomposition and a constructive form of
//! Bondy's theorem on distinguishing set families.

use crate::bitset::VertexSet;
use crate::certify;
use crate::digraph::Digraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcyclicError {
    #[error("digraph contains a directed cycle")]
    NotAcyclic,
    #[error("digraph has twins {0} and {1}")]
    NotTwinFree(usize, usize),
    #[error("digraph has multiple sources: {0:?}")]
    MultipleSources(Vec<usize>),
    #[error("digraph has no vertices")]
    NoVertices,
    #[error("family members {0} and {1} coincide")]
    DuplicateMembers(usize, usize),
    #[error("family member {0} is empty")]
    EmptyMember(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

fn internal(msg: impl Into<String>) -> AcyclicError {
    AcyclicError::InternalInvariantViolation(msg.into())
}

/// A ground set together with a sequence of subsets to be distinguished by
/// their intersections (traces) with a subset of the ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub ground: VertexSet,
    pub members: Vec<VertexSet>,
}

fn traces_distinct_on(members: &[VertexSet], l: &VertexSet) -> bool {
    let traces: Vec<VertexSet> = members.iter().map(|m| m.intersection(l)).collect();
    for i in 0..traces.len() {
        for j in i + 1..traces.len() {
            if traces[i] == traces[j] {
                return false;
            }
        }
    }
    true
}

/// Bondy's theorem, constructively: given pairwise distinct members, find
/// L ⊆ ground with |L| ≤ |members| − 1 keeping all traces distinct. Greedy:
/// while |L| ≥ |members|, drop the least element whose removal keeps traces
/// distinct (one always exists).
pub fn bondy_reduce(family: &SetFamily) -> Result<VertexSet, AcyclicError> {
    let members = &family.members;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if members[i].intersection(&family.ground) == members[j].intersection(&family.ground) {
                return Err(AcyclicError::DuplicateMembers(i, j));
            }
        }
    }
    if members.is_empty() {
        return Ok(VertexSet::empty(family.ground.universe()));
    }
    let mut l = family.ground.clone();
    while l.len() >= members.len() {
        let mut removed = false;
        for e in l.clone().iter() {
            let mut candidate = l.clone();
            candidate.remove(e);
            if traces_distinct_on(members, &candidate) {
                l = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            return Err(internal(
                "no removable element although |L| >= |members|",
            ));
        }
    }
    Ok(l)
}

/// Variant that also forces every trace to be nonempty (locate *and*
/// dominate): run the reduction with the empty set adjoined to the family,
/// giving |L| ≤ |members| and traces distinct from ∅.
pub fn bondy_locate_dominate(family: &SetFamily) -> Result<VertexSet, AcyclicError> {
    for (i, m) in family.members.iter().enumerate() {
        if m.intersection(&family.ground).is_empty() {
            return Err(AcyclicError::EmptyMember(i));
        }
    }
    let mut extended = family.members.clone();
    extended.push(VertexSet::empty(family.ground.universe()));
    bondy_reduce(&SetFamily {
        ground: family.ground.clone(),
        members: extended,
    })
}

/// The source-peeling decomposition: L_0 is the unique source, L_i the
/// sources of what remains after removing L_0, …, L_{i−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub levels: Vec<VertexSet>,
    pub level_of: Vec<usize>,
}

pub fn level_decomposition(g: &Digraph) -> Result<LevelDecomposition, AcyclicError> {
    let n = g.n();
    if n == 0 {
        return Err(AcyclicError::NoVertices);
    }
    let sources = g.sources();
    match sources.len() {
        0 => return Err(AcyclicError::NotAcyclic),
        1 => {}
        _ => return Err(AcyclicError::MultipleSources(sources.to_vec())),
    }
    let mut remaining = VertexSet::full(n);
    let mut levels = Vec::new();
    let mut level_of = vec![usize::MAX; n];
    while !remaining.is_empty() {
        let level = VertexSet::from_vertices(
            n,
            remaining
                .iter()
                .filter(|&v| !g.in_neighbours(v).intersects(&remaining)),
        );
        if level.is_empty() {
            return Err(AcyclicError::NotAcyclic);
        }
        for v in level.iter() {
            level_of[v] = levels.len();
        }
        remaining.subtract(&level);
        levels.push(level);
    }
    // the construction's three claims, re-checked
    for (u, v) in g.arcs() {
        if level_of[u] >= level_of[v] {
            return Err(internal(format!(
                "arc ({u}, {v}) does not go strictly forward across levels"
            )));
        }
    }
    for (i, level) in levels.iter().enumerate().skip(1) {
        for v in level.iter() {
            if !g.in_neighbours(v).intersects(&levels[i - 1]) {
                return Err(internal(format!(
                    "vertex {v} in level {i} has no in-neighbour one level up"
                )));
            }
        }
    }
    Ok(LevelDecomposition { levels, level_of })
}

/// A locating-dominating set of size at most ⌈n/2⌉ for a twin-free acyclic
/// digraph. Levels are processed top-down; within each level, one Bondy
/// reduction on the previous level locates-and-dominates the partition
/// representatives, and one reduction per multi-vertex part separates its
/// members using strictly earlier levels.
pub fn acyclic_ld_set(g: &Digraph) -> Result<VertexSet, AcyclicError> {
    let n = g.n();
    if n == 0 {
        return Ok(VertexSet::empty(0));
    }
    if let Some((u, v)) = g.find_twin_pair() {
        return Err(AcyclicError::NotTwinFree(u, v));
    }
    if !g.is_acyclic() {
        return Err(AcyclicError::NotAcyclic);
    }
    let decomposition = match level_decomposition(g) {
        Ok(d) => d,
        Err(AcyclicError::MultipleSources(src)) => {
            return Err(internal(format!(
                "twin-free digraph claims multiple sources {src:?}"
            )))
        }
        Err(e) => return Err(e),
    };
    let levels = &decomposition.levels;
    let m = levels.len() - 1;
    let source = levels[0]
        .min_vertex()
        .expect("level 0 holds the unique source");

    // below[i] = union of levels 0..i
    let mut below = vec![VertexSet::empty(n)];
    for level in levels.iter() {
        let mut next = below.last().unwrap().clone();
        next.union_with(level);
        below.push(next);
    }

    let mut picked = VertexSet::empty(n);
    for i in (1..=m).rev() {
        let mut lprime = levels[i].clone();
        lprime.subtract(&picked);
        if lprime.is_empty() {
            continue;
        }
        // partition L'_i by trace on the previous level
        let mut parts: Vec<(VertexSet, VertexSet)> = Vec::new(); // (trace, members)
        for v in lprime.iter() {
            let t = g.in_neighbours(v).intersection(&levels[i - 1]);
            match parts.iter_mut().find(|(trace, _)| *trace == t) {
                Some((_, members)) => members.insert(v),
                None => parts.push((t, VertexSet::singleton(n, v))),
            }
        }

        let rep_traces: Vec<VertexSet> = parts.iter().map(|(t, _)| t.clone()).collect();
        let s_set = bondy_locate_dominate(&SetFamily {
            ground: levels[i - 1].clone(),
            members: rep_traces,
        })
        .map_err(|e| internal(format!("level {i} representative reduction failed: {e}")))?;

        let mut d_i = s_set;
        for (_, members) in parts.iter().filter(|(_, m)| m.len() >= 2) {
            let ground = below[i - 1].clone(); // levels strictly before i−1
            let member_traces: Vec<VertexSet> = members
                .iter()
                .map(|v| g.in_neighbours(v).intersection(&ground))
                .collect();
            let s_j = bondy_reduce(&SetFamily {
                ground,
                members: member_traces,
            })
            .map_err(|e| {
                internal(format!(
                    "part {members} of level {i} is not separable below: {e}"
                ))
            })?;
            d_i.union_with(&s_j);
        }

        if d_i.len() > lprime.len() {
            return Err(internal(format!(
                "level {i} selected {} vertices for {} targets",
                d_i.len(),
                lprime.len()
            )));
        }
        picked.union_with(&d_i);
    }

    let mut d = picked;
    d.insert(source);
    if !certify::is_locating_dominating(g, &d).valid {
        return Err(internal(format!("constructed set {d} is not locating-dominating")));
    }
    if d.len() > n.div_ceil(2) {
        return Err(internal(format!(
            "constructed set of size {} exceeds ⌈n/2⌉ = {}",
            d.len(),
            n.div_ceil(2)
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{self, DEFAULT_LIMIT};
    use crate::families::{generate, Family, FamilySpec};

    fn family(ground: &[usize], members: &[&[usize]]) -> SetFamily {
        let universe = ground.iter().chain(members.iter().flat_map(|m| m.iter())).max().map_or(0, |&v| v + 1);
        SetFamily {
            ground: VertexSet::from_vertices(universe, ground.iter().copied()),
            members: members
                .iter()
                .map(|m| VertexSet::from_vertices(universe, m.iter().copied()))
                .collect(),
        }
    }

    #[test]
    fn bondy_reduce_chain_family() {
        let f = family(&[0, 1, 2], &[&[0], &[0, 1], &[0, 1, 2]]);
        let l = bondy_reduce(&f).unwrap();
        assert_eq!(l.to_vec(), vec![1, 2]);
    }

    #[test]
    fn bondy_reduce_degenerate_families() {
        let single = family(&[5, 6], &[&[5]]);
        assert!(bondy_reduce(&single).unwrap().is_empty());
        let minimal = family(&[0], &[&[], &[0]]);
        assert_eq!(bondy_reduce(&minimal).unwrap().to_vec(), vec![0]);
        let duplicates = family(&[0, 1], &[&[0], &[0]]);
        assert_eq!(
            bondy_reduce(&duplicates).unwrap_err(),
            AcyclicError::DuplicateMembers(0, 1)
        );
    }

    #[test]
    fn bondy_locate_dominate_examples() {
        let f = family(&[0, 1], &[&[0], &[1]]);
        let l = bondy_locate_dominate(&f).unwrap();
        assert_eq!(l.to_vec(), vec![0, 1]);

        let single = family(&[3], &[&[3]]);
        assert_eq!(bondy_locate_dominate(&single).unwrap().to_vec(), vec![3]);

        let chain = family(&[0, 1, 2], &[&[0], &[0, 1], &[0, 1, 2]]);
        let l = bondy_locate_dominate(&chain).unwrap();
        assert!(l.len() <= 3);
        for m in &chain.members {
            assert!(!m.intersection(&l).is_empty());
        }

        let empty_member = family(&[0, 1], &[&[0], &[]]);
        assert_eq!(
            bondy_locate_dominate(&empty_member).unwrap_err(),
            AcyclicError::EmptyMember(1)
        );
    }

    #[test]
    fn levels_of_path() {
        let g = generate(&FamilySpec::new(Family::DirectedPath { n: 5 })).unwrap();
        let d = level_decomposition(&g).unwrap();
        assert_eq!(d.levels.len(), 5);
        for (i, level) in d.levels.iter().enumerate() {
            assert_eq!(level.to_vec(), vec![i]);
        }
    }

    #[test]
    fn levels_of_layered_instance() {
        // 0 → 1; 1 → {2,3}; 2 → {4,5}; 3 → {5,6}; plus 0→6, 0→3, 1→4
        let g = Digraph::build(
            7,
            &[
                (0, 1),
                (1, 3),
                (1, 2),
                (2, 4),
                (2, 5),
                (3, 5),
                (3, 6),
                (0, 6),
                (0, 3),
                (1, 4),
            ],
        )
        .unwrap();
        let d = level_decomposition(&g).unwrap();
        let sizes: Vec<usize> = d.levels.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3]);
        assert!(g.is_twin_free());
        let set = acyclic_ld_set(&g).unwrap();
        assert!(set.len() <= 4);
    }

    #[test]
    fn level_errors() {
        let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(level_decomposition(&c3).unwrap_err(), AcyclicError::NotAcyclic);
        let two_sources = Digraph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            level_decomposition(&two_sources).unwrap_err(),
            AcyclicError::MultipleSources(vec![0, 1])
        );
        assert_eq!(
            level_decomposition(&Digraph::build(0, &[]).unwrap()).unwrap_err(),
            AcyclicError::NoVertices
        );
    }

    #[test]
    fn acyclic_ld_on_paths_and_transitive_tournaments() {
        for n in [1, 2, 5, 9] {
            let g = generate(&FamilySpec::new(Family::DirectedPath { n })).unwrap();
            let set = acyclic_ld_set(&g).unwrap();
            assert!(set.len() <= n.div_ceil(2), "P_{n}");
        }
        let tt6 = generate(&FamilySpec::new(Family::TransitiveTournament { n: 6 })).unwrap();
        let set = acyclic_ld_set(&tt6).unwrap();
        assert!(set.len() <= 3);
        assert_eq!(exact::ld(&tt6, DEFAULT_LIMIT).unwrap().value, 3);
    }

    #[test]
    fn acyclic_ld_on_random_twin_free_dags() {
        for seed in 0..30 {
            let g = generate(&FamilySpec::with_seed(
                Family::RandomTwinFreeDag { n: 30, p: (1, 2) },
                seed,
            ))
            .unwrap();
            let set = acyclic_ld_set(&g).unwrap();
            assert!(certify::is_locating_dominating(&g, &set).valid);
            assert!(set.len() <= 15);
        }
    }

    #[test]
    fn acyclic_ld_rejects_bad_inputs() {
        let c3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(acyclic_ld_set(&c3).unwrap_err(), AcyclicError::NotAcyclic);
        let twins = Digraph::build(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            acyclic_ld_set(&twins).unwrap_err(),
            AcyclicError::NotTwinFree(0, 1)
        );
    }
}
