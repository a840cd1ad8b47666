//! Definitional verifiers for dominating / locating / locating-dominating
//! sets, and the S-partition machinery the constructive bounds are built on.
//!
//! All verdicts carry a canonical witness on failure (least undominated
//! vertex, or lexicographically least unlocated pair), so a failing
//! certificate is reproducible and independently checkable.

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Dominating,
    Locating,
    LocatingDominating,
}

impl Claim {
    pub fn as_str(&self) -> &'static str {
        match self {
            Claim::Dominating => "dominating",
            Claim::Locating => "locating",
            Claim::LocatingDominating => "locating-dominating",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A vertex outside the set with no in-neighbour in the set.
    Undominated(usize),
    /// Two vertices outside the set with equal traces.
    UnlocatedPair(usize, usize),
}

/// A vertex set together with a claimed property and its verification verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub set: VertexSet,
    pub claim: Claim,
    pub valid: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("vertex {0} is not a member of the given set")]
    VertexNotInS(usize),
}

/// Trace of `v` with respect to `s`: `N⁻(v) ∩ S`.
pub fn trace(g: &Digraph, s: &VertexSet, v: usize) -> VertexSet {
    g.in_neighbours(v).intersection(s)
}

/// Least vertex outside `s` with empty trace, if any.
fn first_undominated(g: &Digraph, s: &VertexSet) -> Option<usize> {
    (0..g.n()).find(|&v| !s.contains(v) && !g.in_neighbours(v).intersects(s))
}

/// Lexicographically least pair outside `s` with equal traces, if any.
fn first_unlocated_pair(g: &Digraph, s: &VertexSet) -> Option<(usize, usize)> {
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let traces: Vec<VertexSet> = outside.iter().map(|&v| trace(g, s, v)).collect();
    for i in 0..outside.len() {
        for j in i + 1..outside.len() {
            if traces[i] == traces[j] {
                return Some((outside[i], outside[j]));
            }
        }
    }
    None
}

pub fn is_dominating(g: &Digraph, s: &VertexSet) -> Certificate {
    assert_eq!(s.universe(), g.n());
    let witness = first_undominated(g, s).map(Witness::Undominated);
    Certificate {
        set: s.clone(),
        claim: Claim::Dominating,
        valid: witness.is_none(),
        witness,
    }
}

pub fn is_locating(g: &Digraph, s: &VertexSet) -> Certificate {
    assert_eq!(s.universe(), g.n());
    let witness = first_unlocated_pair(g, s).map(|(u, v)| Witness::UnlocatedPair(u, v));
    Certificate {
        set: s.clone(),
        claim: Claim::Locating,
        valid: witness.is_none(),
        witness,
    }
}

/// Locating and dominating: every vertex outside `s` has a nonempty trace and
/// traces are pairwise distinct. Domination is checked first, so the witness
/// on a doubly-failing set is the least undominated vertex.
pub fn is_locating_dominating(g: &Digraph, s: &VertexSet) -> Certificate {
    assert_eq!(s.universe(), g.n());
    let witness = first_undominated(g, s)
        .map(Witness::Undominated)
        .or_else(|| first_unlocated_pair(g, s).map(|(u, v)| Witness::UnlocatedPair(u, v)));
    Certificate {
        set: s.clone(),
        claim: Claim::LocatingDominating,
        valid: witness.is_none(),
        witness,
    }
}

/// One part of an S-partition: the vertices of `V∖S` sharing a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPart {
    pub trace: VertexSet,
    pub members: VertexSet,
}

/// The partition of `V∖S` grouping vertices by equal trace, with parts
/// ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPartition {
    pub base: VertexSet,
    pub parts: Vec<SPart>,
    /// Number of parts of size exactly 1.
    pub n1: usize,
    /// Number of parts of size at least 2.
    pub n2: usize,
}

impl SPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

pub fn s_partition(g: &Digraph, s: &VertexSet) -> SPartition {
    assert_eq!(s.universe(), g.n());
    let mut parts: Vec<SPart> = Vec::new();
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let t = trace(g, s, v);
        match parts.iter_mut().find(|p| p.trace == t) {
            Some(part) => part.members.insert(v),
            None => parts.push(SPart {
                trace: t,
                members: VertexSet::singleton(g.n(), v),
            }),
        }
    }
    // scanning vertices in ascending order already yields parts ordered by
    // least member; keep the sort as a guard
    parts.sort_by_key(|p| p.members.min_vertex());
    let n1 = parts.iter().filter(|p| p.members.len() == 1).count();
    let n2 = parts.len() - n1;
    SPartition {
        base: s.clone(),
        parts,
        n1,
        n2,
    }
}

/// `{ w ∉ S : N⁻(w) ∩ S = {v} }` — the vertices outside `s` dominated by `v`
/// and by no other member of `s`.
pub fn external_private_neighbours(
    g: &Digraph,
    s: &VertexSet,
    v: usize,
) -> Result<VertexSet, CertifyError> {
    assert_eq!(s.universe(), g.n());
    if !s.contains(v) {
        return Err(CertifyError::VertexNotInS(v));
    }
    let mut out = VertexSet::empty(g.n());
    for w in g.out_neighbours(v).iter() {
        if !s.contains(w) {
            let t = trace(g, s, w);
            if t.len() == 1 && t.contains(v) {
                out.insert(w);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    fn c3() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn two_c3() -> Digraph {
        Digraph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()
    }

    #[test]
    fn dominating_on_c3() {
        let g = c3();
        assert!(is_dominating(&g, &VertexSet::from_vertices(3, [0, 1])).valid);
        let cert = is_dominating(&g, &VertexSet::singleton(3, 0));
        assert!(!cert.valid);
        assert_eq!(cert.witness, Some(Witness::Undominated(2)));
        assert!(is_dominating(&g, &VertexSet::full(3)).valid);
    }

    #[test]
    fn locating_empty_set_on_c3() {
        let g = c3();
        let cert = is_locating(&g, &VertexSet::empty(3));
        assert!(!cert.valid);
        assert_eq!(cert.witness, Some(Witness::UnlocatedPair(0, 1)));
    }

    #[test]
    fn locating_all_but_one() {
        // any set of size n−1 is a locating set
        let g = two_c3();
        for v in 0..6 {
            let mut s = VertexSet::full(6);
            s.remove(v);
            assert!(is_locating(&g, &s).valid);
        }
    }

    #[test]
    fn locating_tt5_even_positions() {
        // transitive tournament v1..v5, locating set {v2, v4}
        let mut arcs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                arcs.push((i, j));
            }
        }
        let g = Digraph::build(5, &arcs).unwrap();
        assert!(is_locating(&g, &VertexSet::from_vertices(5, [1, 3])).valid);
    }

    #[test]
    fn ld_is_conjunction() {
        let g = c3();
        let cert = is_locating_dominating(&g, &VertexSet::singleton(3, 0));
        assert!(!cert.valid);
        assert_eq!(cert.witness, Some(Witness::Undominated(2)));
        assert!(is_locating_dominating(&g, &VertexSet::from_vertices(3, [0, 1])).valid);
    }

    #[test]
    fn s_partition_c3() {
        let g = c3();
        let p = s_partition(&g, &VertexSet::from_vertices(3, [0, 1]));
        assert_eq!(p.parts.len(), 1);
        assert_eq!(p.parts[0].members.to_vec(), vec![2]);
        assert_eq!(p.parts[0].trace.to_vec(), vec![1]);
        assert_eq!((p.n1, p.n2), (1, 0));
    }

    #[test]
    fn s_partition_full_base() {
        let g = c3();
        let p = s_partition(&g, &VertexSet::full(3));
        assert!(p.parts.is_empty());
        assert_eq!((p.n1, p.n2), (0, 0));
    }

    #[test]
    fn s_partition_two_triangles() {
        let g = two_c3();
        let p = s_partition(&g, &VertexSet::from_vertices(6, [0, 1, 3, 4]));
        assert_eq!(p.parts.len(), 2);
        assert_eq!(p.parts[0].members.to_vec(), vec![2]);
        assert_eq!(p.parts[0].trace.to_vec(), vec![1]);
        assert_eq!(p.parts[1].members.to_vec(), vec![5]);
        assert_eq!(p.parts[1].trace.to_vec(), vec![4]);
    }

    #[test]
    fn private_neighbours_c3() {
        let g = c3();
        let s = VertexSet::from_vertices(3, [0, 1]);
        assert_eq!(
            external_private_neighbours(&g, &s, 1).unwrap().to_vec(),
            vec![2]
        );
        assert!(external_private_neighbours(&g, &s, 0).unwrap().is_empty());
        assert_eq!(
            external_private_neighbours(&g, &s, 2).unwrap_err(),
            CertifyError::VertexNotInS(2)
        );
        let full = VertexSet::full(3);
        assert!(external_private_neighbours(&g, &full, 0).unwrap().is_empty());
    }
}
