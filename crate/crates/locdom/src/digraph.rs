//! Loopless simple digraphs with bitset neighbourhoods, plus the structural
//! predicates (twins, quasi-twins, sources, tournaments, connectivity) that
//! gate every algorithm in this crate.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("pair relation queried on a single vertex")]
    SameVertex,
}

/// Relation of an unordered vertex pair under the in-neighbourhood twin
/// definitions. At most one variant holds per pair; when a pair satisfies
/// both the open and the closed definition (possible only with identical
/// in-sets and no arc between the two), it is reported as `OpenTwin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    /// Equal open in-neighbourhoods.
    OpenTwin,
    /// Equal closed in-neighbourhoods.
    ClosedTwin,
    /// `N⁻(x) = N⁻(y) ∪ {y}`; `in_neighbour` is the vertex `y`.
    QuasiTwin { in_neighbour: usize },
    None,
}

/// Structural flags computed in one pass, used as algorithm preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub is_source_free: bool,
    pub is_twin_free: bool,
    pub is_quasi_twin_free: bool,
    pub is_acyclic: bool,
    pub is_tournament: bool,
    pub is_transitive_tournament: bool,
    pub is_strongly_connected: bool,
    pub is_connected: bool,
}

/// A loopless simple digraph on vertices `0..n`. Immutable after `build`;
/// both neighbourhood directions are materialized as bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    m: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    pub fn build(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph, DigraphError> {
        let mut out = vec![VertexSet::empty(n); n];
        let mut inn = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for &(u, v) in arcs {
            if u >= n {
                return Err(DigraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(DigraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if out[u].contains(v) {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            out[u].insert(v);
            inn[v].insert(u);
            m += 1;
        }
        Ok(Digraph { n, m, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    /// Open in-neighbourhood `N⁻(v)`.
    #[inline]
    pub fn in_neighbours(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    /// Open out-neighbourhood `N⁺(v)`.
    #[inline]
    pub fn out_neighbours(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    /// Closed in-neighbourhood `N⁻[v] = N⁻(v) ∪ {v}`.
    pub fn closed_in_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.inn[v].clone();
        s.insert(v);
        s
    }

    /// Closed out-neighbourhood `N⁺[v] = N⁺(v) ∪ {v}`.
    pub fn closed_out_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.out[v].clone();
        s.insert(v);
        s
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.out[u].iter() {
                arcs.push((u, v));
            }
        }
        arcs
    }

    /// A copy of this digraph with `extra` arcs added.
    pub fn with_arcs(&self, extra: &[(usize, usize)]) -> Result<Digraph, DigraphError> {
        let mut arcs = self.arcs();
        arcs.extend_from_slice(extra);
        Digraph::build(self.n, &arcs)
    }

    pub fn sources(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, self.vertices().filter(|&v| self.inn[v].is_empty()))
    }

    pub fn sinks(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, self.vertices().filter(|&v| self.out[v].is_empty()))
    }

    pub fn pair_relation(&self, u: usize, v: usize) -> Result<PairRelation, DigraphError> {
        if u == v {
            return Err(DigraphError::SameVertex);
        }
        if u >= self.n {
            return Err(DigraphError::VertexOutOfRange(u));
        }
        if v >= self.n {
            return Err(DigraphError::VertexOutOfRange(v));
        }
        if self.inn[u] == self.inn[v] {
            return Ok(PairRelation::OpenTwin);
        }
        if self.closed_in_neighbours(u) == self.closed_in_neighbours(v) {
            return Ok(PairRelation::ClosedTwin);
        }
        // N⁻(x) = N⁻(y) ∪ {y}
        let quasi = |x: usize, y: usize| {
            self.inn[x].contains(y) && {
                let mut without = self.inn[x].clone();
                without.remove(y);
                without == self.inn[y]
            }
        };
        if quasi(u, v) {
            return Ok(PairRelation::QuasiTwin { in_neighbour: v });
        }
        if quasi(v, u) {
            return Ok(PairRelation::QuasiTwin { in_neighbour: u });
        }
        Ok(PairRelation::None)
    }

    /// All pairs `u < v` whose relation is not `None`.
    pub fn related_pairs(&self) -> Vec<(usize, usize, PairRelation)> {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.pair_relation(u, v).unwrap() {
                    PairRelation::None => {}
                    rel => pairs.push((u, v, rel)),
                }
            }
        }
        pairs
    }

    /// No pair of open or closed twins.
    pub fn is_twin_free(&self) -> bool {
        self.find_twin_pair().is_none()
    }

    /// First pair (lexicographic) of open or closed twins, if any.
    pub fn find_twin_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.pair_relation(u, v).unwrap() {
                    PairRelation::OpenTwin | PairRelation::ClosedTwin => return Some((u, v)),
                    _ => {}
                }
            }
        }
        None
    }

    pub fn is_quasi_twin_free(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if matches!(
                    self.pair_relation(u, v).unwrap(),
                    PairRelation::QuasiTwin { .. }
                ) {
                    return false;
                }
            }
        }
        true
    }

    /// Unique topological order with ascending tie-break, or `None` on a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        // min-heap behaviour via sorted stack (descending, pop from back)
        ready.sort_unstable_by(|a, b| b.cmp(a));
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for w in self.out[v].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    let pos = ready.partition_point(|&x| x > w);
                    ready.insert(pos, w);
                }
            }
        }
        if order.len() == self.n {
            Some(order)
        } else {
            None
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn is_tournament(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_arc(u, v) == self.has_arc(v, u) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_transitive_tournament(&self) -> bool {
        self.is_tournament() && self.is_acyclic()
    }

    fn reachable(&self, start: usize, forward: bool) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let nbrs = if forward { &self.out[v] } else { &self.inn[v] };
            for w in nbrs.iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable(0, true).len() == self.n && self.reachable(0, false).len() == self.n
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.out[v].iter().chain(self.inn[v].iter()) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    pub fn structural_profile(&self) -> StructuralProfile {
        let sources = self.sources();
        let sinks = self.sinks();
        let is_tournament = self.is_tournament();
        let is_acyclic = self.is_acyclic();
        StructuralProfile {
            is_source_free: sources.is_empty(),
            sources: sources.to_vec(),
            sinks: sinks.to_vec(),
            is_twin_free: self.is_twin_free(),
            is_quasi_twin_free: self.is_quasi_twin_free(),
            is_acyclic,
            is_tournament,
            is_transitive_tournament: is_tournament && is_acyclic,
            is_strongly_connected: self.is_strongly_connected(),
            is_connected: self.is_connected(),
        }
    }

    /// Subgraph induced by `verts`. Returns the subgraph (on `0..verts.len()`)
    /// together with the map from new indices back to the original labels.
    pub fn induced(&self, verts: &VertexSet) -> (Digraph, Vec<usize>) {
        let labels = verts.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut arcs = Vec::new();
        for &u in &labels {
            for v in self.out[u].intersection(verts).iter() {
                arcs.push((index[u], index[v]));
            }
        }
        let g = Digraph::build(labels.len(), &arcs).expect("induced subgraph is valid");
        (g, labels)
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn p3() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_c3() {
        let g = c3();
        assert_eq!(g.n(), 3);
        assert_eq!(g.arc_count(), 3);
        assert_eq!(g.in_neighbours(0).to_vec(), vec![2]);
        assert_eq!(g.out_neighbours(0).to_vec(), vec![1]);
    }

    #[test]
    fn build_single_vertex() {
        let g = Digraph::build(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Digraph::build(3, &[(0, 0)]).unwrap_err(),
            DigraphError::LoopArc(0)
        );
        assert_eq!(
            Digraph::build(3, &[(0, 1), (0, 1)]).unwrap_err(),
            DigraphError::DuplicateArc(0, 1)
        );
        assert_eq!(
            Digraph::build(3, &[(0, 3)]).unwrap_err(),
            DigraphError::VertexOutOfRange(3)
        );
    }

    #[test]
    fn arc_input_order_is_irrelevant() {
        let a = Digraph::build(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let b = Digraph::build(4, &[(1, 2), (0, 1), (2, 3)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.arcs(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    // Fig. 1: a=0, b=1 with common in-neighbours {2,3,4}.
    fn fig1(extra: &[(usize, usize)]) -> Digraph {
        let mut arcs = vec![(2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (4, 1)];
        arcs.extend_from_slice(extra);
        Digraph::build(5, &arcs).unwrap()
    }

    #[test]
    fn pair_relation_open_twins() {
        let g = fig1(&[]);
        assert_eq!(g.pair_relation(0, 1).unwrap(), PairRelation::OpenTwin);
        assert_eq!(g.pair_relation(1, 0).unwrap(), PairRelation::OpenTwin);
    }

    #[test]
    fn pair_relation_quasi_twins() {
        // arc a→b added: N⁻(b) = N⁻(a) ∪ {a}
        let g = fig1(&[(0, 1)]);
        assert_eq!(
            g.pair_relation(0, 1).unwrap(),
            PairRelation::QuasiTwin { in_neighbour: 0 }
        );
        assert_eq!(
            g.pair_relation(1, 0).unwrap(),
            PairRelation::QuasiTwin { in_neighbour: 0 }
        );
    }

    #[test]
    fn pair_relation_closed_twins() {
        let g = fig1(&[(0, 1), (1, 0)]);
        assert_eq!(g.pair_relation(0, 1).unwrap(), PairRelation::ClosedTwin);
    }

    #[test]
    fn pair_relation_none_on_c3() {
        let g = c3();
        assert_eq!(g.pair_relation(0, 1).unwrap(), PairRelation::None);
        assert_eq!(g.pair_relation(0, 0).unwrap_err(), DigraphError::SameVertex);
    }

    #[test]
    fn profile_p3() {
        let p = p3().structural_profile();
        assert_eq!(p.sources, vec![0]);
        assert_eq!(p.sinks, vec![2]);
        assert!(p.is_twin_free);
        assert!(p.is_acyclic);
        assert!(!p.is_tournament);
        assert!(!p.is_quasi_twin_free); // 0,1 are quasi-twins in a path
    }

    #[test]
    fn profile_c3() {
        let p = c3().structural_profile();
        assert!(p.is_tournament);
        assert!(!p.is_transitive_tournament);
        assert!(p.is_strongly_connected);
        assert!(p.is_source_free);
    }

    #[test]
    fn topological_order_is_ascending_tiebreak() {
        let g = Digraph::build(4, &[(2, 0), (3, 0)]).unwrap();
        assert_eq!(g.topological_order().unwrap(), vec![1, 2, 3, 0]);
        assert!(c3().topological_order().is_none());
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = Digraph::build(5, &[(1, 3), (3, 4), (4, 1)]).unwrap();
        let (sub, labels) = g.induced(&VertexSet::from_vertices(5, [1, 3, 4]));
        assert_eq!(labels, vec![1, 3, 4]);
        assert_eq!(sub.arcs(), vec![(0, 1), (1, 2), (2, 0)]);
    }
}
