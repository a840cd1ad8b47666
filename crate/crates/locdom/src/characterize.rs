//! Polynomial-time checkers for the extremal cases: digraphs whose minimum
//! locating set, or locating-dominating set, has size n−1.
//!
//! SEP(G) = n−1 holds exactly when every vertex is universal or a sink.
//! LD(G) = n−1 holds for a connected digraph exactly when n = 3, or G is a
//! directed star, or V(G) splits into sources S1, a bidirected clique C and
//! sinks S2 with all arcs S1→(C∪S2) and C→S2 present and nothing else.

use crate::bitset::VertexSet;
use crate::digraph::Digraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("digraph is not connected")]
    NotConnected,
    #[error("order {0} is below the minimum of 2")]
    TooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalReason {
    /// LD = n−1 because the order is three.
    OrderThree,
    /// LD = n−1 because the digraph is a directed star.
    DirectedStar { centre: usize },
    /// LD = n−1 via the sources / bidirected clique / sinks partition.
    S1CS2Partition {
        s1: VertexSet,
        c: VertexSet,
        s2: VertexSet,
    },
    /// SEP = n−1: every vertex is universal or a sink.
    AllUniversalOrSink {
        universal: VertexSet,
        sinks: VertexSet,
    },
    /// SEP < n−1, witnessed by a vertex that is neither universal nor a sink.
    Counterexample { vertex: usize },
    NotExtremal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalVerdict {
    pub holds: bool,
    pub reason: ExtremalReason,
}

/// SEP(G) = n−1 iff every vertex is universal or a sink.
pub fn sep_is_n_minus_1(g: &Digraph) -> ExtremalVerdict {
    let n = g.n();
    for v in 0..n {
        let d = g.out_degree(v);
        if d != 0 && d != n - 1 {
            return ExtremalVerdict {
                holds: false,
                reason: ExtremalReason::Counterexample { vertex: v },
            };
        }
    }
    let universal = VertexSet::from_vertices(n, (0..n).filter(|&v| g.out_degree(v) == n - 1));
    let mut sinks = universal.complement();
    if n == 1 {
        sinks = VertexSet::full(1); // the single vertex is a sink
    }
    ExtremalVerdict {
        holds: true,
        reason: ExtremalReason::AllUniversalOrSink { universal, sinks },
    }
}

/// All arcs of the candidate partition are present and nothing else exists.
fn partition_matches(g: &Digraph, s1: &VertexSet, c: &VertexSet, s2: &VertexSet) -> bool {
    let mut c_and_s2 = c.clone();
    c_and_s2.union_with(s2);
    let required = s1.len() * c_and_s2.len() + c.len() * c.len().saturating_sub(1)
        + c.len() * s2.len();
    if g.arc_count() != required {
        return false;
    }
    for u in s1.iter() {
        for w in c_and_s2.iter() {
            if !g.has_arc(u, w) {
                return false;
            }
        }
    }
    for u in c.iter() {
        for w in c.iter() {
            if u != w && !g.has_arc(u, w) {
                return false;
            }
        }
        for w in s2.iter() {
            if !g.has_arc(u, w) {
                return false;
            }
        }
    }
    true
}

/// LD(G) = n−1 for a connected digraph of order at least 2.
pub fn ld_is_n_minus_1(g: &Digraph) -> Result<ExtremalVerdict, CharacterizeError> {
    let n = g.n();
    if n < 2 {
        return Err(CharacterizeError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(CharacterizeError::NotConnected);
    }
    if n == 3 {
        return Ok(ExtremalVerdict {
            holds: true,
            reason: ExtremalReason::OrderThree,
        });
    }

    // (b) directed star: some vertex belongs to every arc
    let arcs = g.arcs();
    let (a, b) = arcs[0]; // connected with n ≥ 2 guarantees an arc
    for centre in [a.min(b), a.max(b)] {
        if arcs.iter().all(|&(u, v)| u == centre || v == centre) {
            return Ok(ExtremalVerdict {
                holds: true,
                reason: ExtremalReason::DirectedStar { centre },
            });
        }
    }

    // (c) S1/C/S2: the classification is forced up to two degenerate
    // single-vertex placements
    let in_zero = VertexSet::from_vertices(n, (0..n).filter(|&v| g.in_degree(v) == 0));
    let out_zero = VertexSet::from_vertices(n, (0..n).filter(|&v| g.out_degree(v) == 0));
    let mut middle = VertexSet::full(n);
    middle.subtract(&in_zero);
    middle.subtract(&out_zero);

    let mut candidates: Vec<(VertexSet, VertexSet, VertexSet)> =
        vec![(in_zero.clone(), middle.clone(), out_zero.clone())];
    if in_zero.len() == 1 && middle.is_empty() {
        candidates.push((VertexSet::empty(n), in_zero.clone(), out_zero.clone()));
    }
    if out_zero.len() == 1 && middle.is_empty() {
        candidates.push((in_zero.clone(), out_zero.clone(), VertexSet::empty(n)));
    }
    for (s1, c, s2) in candidates {
        if partition_matches(g, &s1, &c, &s2) {
            return Ok(ExtremalVerdict {
                holds: true,
                reason: ExtremalReason::S1CS2Partition { s1, c, s2 },
            });
        }
    }
    Ok(ExtremalVerdict {
        holds: false,
        reason: ExtremalReason::NotExtremal,
    })
}
