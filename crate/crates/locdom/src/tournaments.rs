//! Locating and locating-dominating sets of size ⌊n/2⌋ / ⌈n/2⌉ for
//! tournaments: the transitive base case and the recursive parity-splitting
//! algorithm for the general case.
//!
//! The recursion partitions the tournament around a pivot (a vertex, an arc
//! or a directed triangle) chosen so that enough parts have odd size, solves
//! the parts independently and joins them with the pivot vertices. Pivots
//! are picked deterministically (least vertex, least arc, least triangle),
//! so outputs are reproducible.

use crate::bitset::VertexSet;
use crate::certify;
use crate::digraph::Digraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error("digraph is not a tournament")]
    NotTournament,
    #[error("tournament is not transitive")]
    NotTransitive,
    #[error("tournament is transitive, no directed triangle exists")]
    IsTransitive,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// Pivot of one recursion step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    Vertex(usize),
    Arc(usize, usize),
    Triangle(usize, usize, usize),
}

impl Pivot {
    fn vertices(&self) -> Vec<usize> {
        match *self {
            Pivot::Vertex(x) => vec![x],
            Pivot::Arc(x, y) => vec![x, y],
            Pivot::Triangle(x, y, z) => vec![x, y, z],
        }
    }
}

/// One part of a pivot partition: the vertices whose in-neighbours among the
/// pivot are exactly `key`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPart {
    pub key: VertexSet,
    pub members: VertexSet,
}

/// The partition of the non-pivot vertices keyed by their in-neighbour
/// subset of the pivot. Parts appear in key-mask order (V_0 first), with
/// empty parts kept so the parity pattern is positional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentSplit {
    pub pivot: Pivot,
    pub parts: Vec<SplitPart>,
}

impl TournamentSplit {
    pub fn new(g: &Digraph, pivot: Pivot) -> TournamentSplit {
        let pivots = pivot.vertices();
        let n = g.n();
        let mut parts: Vec<SplitPart> = (0..1usize << pivots.len())
            .map(|mask| SplitPart {
                key: VertexSet::from_vertices(
                    n,
                    pivots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p),
                ),
                members: VertexSet::empty(n),
            })
            .collect();
        for v in 0..n {
            if pivots.contains(&v) {
                continue;
            }
            let mut mask = 0;
            for (i, &p) in pivots.iter().enumerate() {
                if g.in_neighbours(v).contains(p) {
                    mask |= 1 << i;
                }
            }
            parts[mask].members.insert(v);
        }
        let covered: usize = parts.iter().map(|p| p.members.len()).sum();
        debug_assert_eq!(covered, n - pivots.len(), "parts cover V minus the pivot");
        TournamentSplit { pivot, parts }
    }

    /// Size parity per part, in part order (`true` = odd).
    pub fn parities(&self) -> Vec<bool> {
        self.parts.iter().map(|p| p.members.len() % 2 == 1).collect()
    }

    /// The pivot vertices as a set over a universe of size `n`.
    pub fn pivot_vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.pivot.vertices())
    }

    pub fn odd_part_count(&self) -> usize {
        self.parities().iter().filter(|&&odd| odd).count()
    }
}

/// One step of the recursion, for inspection and serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub depth: usize,
    pub objective: &'static str,
    pub order: usize,
    pub action: TraceAction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceAction {
    TransitiveBase,
    VertexPivot(usize),
    ArcPivot(usize, usize),
    TrianglePivot(usize, usize, usize),
    /// Odd-order step: a locating set was patched into a dominating one by
    /// adding the unique undominated vertex, if there was one.
    DominationPatch(Option<usize>),
}

fn require_tournament(g: &Digraph) -> Result<(), TournamentError> {
    if g.is_tournament() {
        Ok(())
    } else {
        Err(TournamentError::NotTournament)
    }
}

/// The unique vertex ordering of a transitive tournament with all arcs
/// pointing forward, recovered from the out-degree sequence.
pub fn transitive_order(g: &Digraph) -> Result<Vec<usize>, TournamentError> {
    require_tournament(g)?;
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.out_degree(v)));
    for (i, &v) in order.iter().enumerate() {
        if g.out_degree(v) != n - 1 - i {
            return Err(TournamentError::NotTransitive);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_arc(order[i], order[j]) {
                return Err(TournamentError::NotTransitive);
            }
        }
    }
    Ok(order)
}

/// {v_i : i odd} in the transitive order — a minimum locating-dominating set
/// of size ⌈n/2⌉ for a transitive tournament.
pub fn transitive_ld_set(g: &Digraph) -> Result<VertexSet, TournamentError> {
    let order = transitive_order(g)?;
    Ok(VertexSet::from_vertices(
        g.n(),
        order.iter().step_by(2).copied(),
    ))
}

/// A minimum locating set of size ⌊n/2⌋ for a transitive tournament:
/// {v_i : i even} when n is odd; for even n the locating and
/// locating-dominating numbers coincide and the LD set is returned.
pub fn transitive_locating_set(g: &Digraph) -> Result<VertexSet, TournamentError> {
    let order = transitive_order(g)?;
    if g.n() % 2 == 1 {
        Ok(VertexSet::from_vertices(
            g.n(),
            order.iter().skip(1).step_by(2).copied(),
        ))
    } else {
        transitive_ld_set(g)
    }
}

/// Least directed triangle x→y→z→x, lexicographic over ordered triples.
pub fn find_directed_triangle(g: &Digraph) -> Result<(usize, usize, usize), TournamentError> {
    require_tournament(g)?;
    let n = g.n();
    for x in 0..n {
        for y in 0..n {
            if y == x || !g.has_arc(x, y) {
                continue;
            }
            for z in 0..n {
                if z != x && z != y && g.has_arc(y, z) && g.has_arc(z, x) {
                    return Ok((x, y, z));
                }
            }
        }
    }
    Err(TournamentError::IsTransitive)
}

fn lift(local: &VertexSet, map: &[usize], universe: usize) -> VertexSet {
    VertexSet::from_vertices(universe, local.iter().map(|v| map[v]))
}

/// Recurse into every part of `split` with `rec`, merging the lifted results.
fn recurse_parts(
    g: &Digraph,
    orig_labels: &[usize],
    split: &TournamentSplit,
    skip_key_empty_for_ld: bool,
    log: &mut Vec<TraceEntry>,
    depth: usize,
) -> VertexSet {
    let mut result = VertexSet::empty(g.n());
    for (i, part) in split.parts.iter().enumerate() {
        if part.members.is_empty() {
            continue;
        }
        let (sub, map) = g.induced(&part.members);
        let orig_sub: Vec<usize> = map.iter().map(|&l| orig_labels[l]).collect();
        let local = if skip_key_empty_for_ld && i == 0 {
            ld_rec(&sub, &orig_sub, log, depth + 1)
        } else {
            locating_rec(&sub, &orig_sub, log, depth + 1)
        };
        result.union_with(&lift(&local, &map, g.n()));
    }
    result
}

/// Locating set of size ≤ ⌊n/2⌋ for a tournament, in local labels.
fn locating_rec(
    g: &Digraph,
    orig_labels: &[usize],
    log: &mut Vec<TraceEntry>,
    depth: usize,
) -> VertexSet {
    let n = g.n();
    let entry = |action| TraceEntry {
        depth,
        objective: "locating",
        order: n,
        action,
    };
    if n == 0 {
        return VertexSet::empty(0);
    }
    if transitive_order(g).is_ok() {
        log.push(entry(TraceAction::TransitiveBase));
        return transitive_locating_set(g).expect("transitive base");
    }

    // (1) a vertex with odd in- or out-degree: split into N⁻(x) and N⁺(x)
    if let Some(x) = (0..n).find(|&x| g.in_degree(x) % 2 == 1 || g.out_degree(x) % 2 == 1) {
        log.push(entry(TraceAction::VertexPivot(orig_labels[x])));
        let split = TournamentSplit::new(g, Pivot::Vertex(x));
        let mut s = recurse_parts(g, orig_labels, &split, false, log, depth);
        s.insert(x);
        return s;
    }

    // (2) an arc whose {x,y}-partition has at least three odd parts
    for x in 0..n {
        for y in g.out_neighbours(x).iter() {
            let split = TournamentSplit::new(g, Pivot::Arc(x, y));
            if split.odd_part_count() >= 3 {
                log.push(entry(TraceAction::ArcPivot(orig_labels[x], orig_labels[y])));
                let mut s = recurse_parts(g, orig_labels, &split, false, log, depth);
                s.insert(x);
                s.insert(y);
                return s;
            }
        }
    }

    // (3) a directed triangle; its partition always has at least four odd parts
    let (x, y, z) = find_directed_triangle(g).expect("non-transitive tournament has a triangle");
    log.push(entry(TraceAction::TrianglePivot(
        orig_labels[x],
        orig_labels[y],
        orig_labels[z],
    )));
    let split = TournamentSplit::new(g, Pivot::Triangle(x, y, z));
    let mut s = recurse_parts(g, orig_labels, &split, false, log, depth);
    s.insert(x);
    s.insert(y);
    s.insert(z);
    s
}

/// Locating-dominating set of size ≤ ⌈n/2⌉ for a tournament, local labels.
fn ld_rec(g: &Digraph, orig_labels: &[usize], log: &mut Vec<TraceEntry>, depth: usize) -> VertexSet {
    let n = g.n();
    let entry = |action| TraceEntry {
        depth,
        objective: "locating-dominating",
        order: n,
        action,
    };
    if n == 0 {
        return VertexSet::empty(0);
    }
    if transitive_order(g).is_ok() {
        log.push(entry(TraceAction::TransitiveBase));
        return transitive_ld_set(g).expect("transitive base");
    }

    if n % 2 == 1 {
        // locating set plus at most one vertex to dominate the unique
        // undominated vertex
        let mut s = locating_rec(g, orig_labels, log, depth + 1);
        let cert = certify::is_dominating(g, &s);
        let patched = match cert.witness {
            Some(certify::Witness::Undominated(v)) => {
                s.insert(v);
                Some(orig_labels[v])
            }
            _ => None,
        };
        log.push(entry(TraceAction::DominationPatch(patched)));
        return s;
    }

    // (1) a vertex with even in-degree: LD on N⁻(x), locating on N⁺(x)
    if let Some(x) = (0..n).find(|&x| g.in_degree(x).is_multiple_of(2)) {
        log.push(entry(TraceAction::VertexPivot(orig_labels[x])));
        let split = TournamentSplit::new(g, Pivot::Vertex(x));
        // parts: [V_0 = non-in-neighbours? no: key ∅ = N⁺(x) ... ] — key {x}
        // marks the out-neighbours of x; V_0 (key ∅) is N⁻(x).
        let mut s = VertexSet::empty(n);
        for (i, part) in split.parts.iter().enumerate() {
            if part.members.is_empty() {
                continue;
            }
            let (sub, map) = g.induced(&part.members);
            let orig_sub: Vec<usize> = map.iter().map(|&l| orig_labels[l]).collect();
            let local = if i == 0 {
                ld_rec(&sub, &orig_sub, log, depth + 1)
            } else {
                locating_rec(&sub, &orig_sub, log, depth + 1)
            };
            s.union_with(&lift(&local, &map, n));
        }
        s.insert(x);
        return s;
    }

    // (2) an arc x→y with V_y odd: LD on V_0, locating on the rest
    for x in 0..n {
        for y in g.out_neighbours(x).iter() {
            let split = TournamentSplit::new(g, Pivot::Arc(x, y));
            // key order: [∅, {x}, {y}, {x,y}] — V_y is index 2
            if split.parts[2].members.len() % 2 == 1 {
                log.push(entry(TraceAction::ArcPivot(orig_labels[x], orig_labels[y])));
                let mut s = recurse_parts(g, orig_labels, &split, true, log, depth);
                s.insert(x);
                s.insert(y);
                return s;
            }
        }
    }

    // (3) a directed triangle: LD on V_0, locating on the seven other parts
    let (x, y, z) = find_directed_triangle(g).expect("non-transitive tournament has a triangle");
    log.push(entry(TraceAction::TrianglePivot(
        orig_labels[x],
        orig_labels[y],
        orig_labels[z],
    )));
    let split = TournamentSplit::new(g, Pivot::Triangle(x, y, z));
    let mut s = recurse_parts(g, orig_labels, &split, true, log, depth);
    s.insert(x);
    s.insert(y);
    s.insert(z);
    s
}

fn identity_labels(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// A locating set of size at most ⌊n/2⌋ for any tournament.
pub fn tournament_locating_set(g: &Digraph) -> Result<VertexSet, TournamentError> {
    Ok(tournament_locating_set_traced(g)?.0)
}

/// As [`tournament_locating_set`], also returning the recursion log.
pub fn tournament_locating_set_traced(
    g: &Digraph,
) -> Result<(VertexSet, Vec<TraceEntry>), TournamentError> {
    require_tournament(g)?;
    let mut log = Vec::new();
    let s = locating_rec(g, &identity_labels(g.n()), &mut log, 0);
    if !certify::is_locating(g, &s).valid {
        return Err(TournamentError::InternalInvariantViolation(format!(
            "constructed set {s} is not locating"
        )));
    }
    if s.len() > g.n() / 2 {
        return Err(TournamentError::InternalInvariantViolation(format!(
            "locating set of size {} exceeds ⌊n/2⌋ = {}",
            s.len(),
            g.n() / 2
        )));
    }
    Ok((s, log))
}

/// A locating-dominating set of size at most ⌈n/2⌉ for any tournament.
pub fn tournament_ld_set(g: &Digraph) -> Result<VertexSet, TournamentError> {
    Ok(tournament_ld_set_traced(g)?.0)
}

/// As [`tournament_ld_set`], also returning the recursion log.
pub fn tournament_ld_set_traced(
    g: &Digraph,
) -> Result<(VertexSet, Vec<TraceEntry>), TournamentError> {
    require_tournament(g)?;
    let mut log = Vec::new();
    let s = ld_rec(g, &identity_labels(g.n()), &mut log, 0);
    if !certify::is_locating_dominating(g, &s).valid {
        return Err(TournamentError::InternalInvariantViolation(format!(
            "constructed set {s} is not locating-dominating"
        )));
    }
    if s.len() > g.n().div_ceil(2) {
        return Err(TournamentError::InternalInvariantViolation(format!(
            "LD set of size {} exceeds ⌈n/2⌉ = {}",
            s.len(),
            g.n().div_ceil(2)
        )));
    }
    Ok((s, log))
}
