//! Exact minimum dominating (γ), locating (SEP) and locating-dominating (LD)
//! sets by pruned exhaustive search.
//!
//! The canonical answer is defined by enumerating subsets in increasing
//! cardinality and lexicographic order within a cardinality; the first valid
//! set wins. The search below is an iterative-deepening DFS that visits
//! subsets in exactly that order and prunes only subtrees that provably
//! contain no valid set of the current size, so the returned witness is the
//! canonical one while staying fast enough for the n=40 instances the
//! constructive pipelines feed it.
//!
//! Vertex sets are manipulated as `u64` masks, which caps the solver at 64
//! vertices regardless of the configured limit.

use crate::bitset::VertexSet;
use crate::digraph::{Digraph, PairRelation};
use thiserror::Error;

/// Default cap on the instance size accepted by the exact solvers.
pub const DEFAULT_LIMIT: usize = 24;

/// Hard cap from the mask representation.
const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("instance has {n} vertices, exact solver limit is {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Result of an exact search: the optimum value, the canonical witness and
/// the number of search nodes explored (diagnostics).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    pub witness: VertexSet,
    pub explored: u64,
}

struct Masks {
    n: usize,
    all: u64,
    in_open: Vec<u64>,
    in_closed: Vec<u64>,
    /// N⁺[v]: the vertices dominated by picking v.
    cover: Vec<u64>,
}

fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0u64, |m, v| m | (1 << v))
}

impl Masks {
    fn new(g: &Digraph) -> Masks {
        let n = g.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let in_open: Vec<u64> = (0..n).map(|v| mask_of(g.in_neighbours(v))).collect();
        let in_closed: Vec<u64> = (0..n).map(|v| in_open[v] | (1 << v)).collect();
        let cover: Vec<u64> = (0..n)
            .map(|v| mask_of(g.out_neighbours(v)) | (1 << v))
            .collect();
        Masks {
            n,
            all,
            in_open,
            in_closed,
            cover,
        }
    }
}

#[inline]
fn high_mask(all: u64, v: usize) -> u64 {
    if v >= 64 {
        0
    } else {
        all & (u64::MAX << v)
    }
}

fn check_limit(g: &Digraph, limit: usize) -> Result<(), ExactError> {
    let effective = limit.min(MASK_LIMIT);
    if g.n() > effective {
        return Err(ExactError::TooLarge {
            n: g.n(),
            limit: effective,
        });
    }
    Ok(())
}

/// Lower bound on any dominating set: a greedy disjoint packing of candidate
/// dominator sets. Returns `None` when some vertex cannot be dominated at
/// all (prune), otherwise the packing size.
#[inline]
fn cover_packing(
    masks: &Masks,
    covered: u64,
    next: usize,
    budget: usize,
) -> Option<usize> {
    let future = high_mask(masks.all, next);
    let mut uncovered = masks.all & !covered;
    let mut used = 0u64;
    let mut need = 0usize;
    while uncovered != 0 {
        let w = uncovered.trailing_zeros() as usize;
        uncovered &= uncovered - 1;
        let cand = if w >= next {
            masks.in_closed[w] & future
        } else {
            masks.in_open[w] & future
        };
        if cand == 0 {
            return None;
        }
        if cand & used == 0 {
            need += 1;
            if need > budget {
                return None;
            }
            used |= cand;
        }
    }
    Some(need)
}

/// All traces of the vertices outside `chosen` are pairwise distinct.
fn traces_distinct(masks: &Masks, chosen: u64, scratch: &mut Vec<u64>) -> bool {
    scratch.clear();
    let mut outside = masks.all & !chosen;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        scratch.push(masks.in_open[v] & chosen);
    }
    scratch.sort_unstable();
    scratch.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy)]
enum Objective {
    Gamma,
    Sep,
    Ld,
}

struct Search<'a> {
    masks: &'a Masks,
    objective: Objective,
    explored: u64,
    chosen: Vec<usize>,
    frozen: Vec<usize>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    /// Lexicographically least valid completion of the current prefix, or
    /// `None`. `rem` vertices are still to be picked, all from `next..n`.
    fn dfs(&mut self, next: usize, chosen_mask: u64, covered: u64, rem: usize) -> Option<Vec<usize>> {
        self.explored += 1;
        let dominating_objective = !matches!(self.objective, Objective::Sep);

        // Shortcut for the domination-only objective: once everything is
        // covered, any completion is valid and the least one is the next
        // `rem` consecutive vertices.
        if matches!(self.objective, Objective::Gamma) && covered == self.masks.all {
            let mut out = self.chosen.clone();
            out.extend(next..next + rem);
            return Some(out);
        }

        if rem == 0 {
            let dominated = covered == self.masks.all;
            let valid = match self.objective {
                Objective::Gamma => dominated,
                Objective::Sep => traces_distinct(self.masks, chosen_mask, &mut self.scratch),
                Objective::Ld => {
                    dominated && traces_distinct(self.masks, chosen_mask, &mut self.scratch)
                }
            };
            return valid.then(|| self.chosen.clone());
        }

        if self.masks.n - next < rem {
            return None;
        }

        if dominating_objective && cover_packing(self.masks, covered, next, rem).is_none() {
            return None;
        }

        let v = next;

        // include v
        let skip_include = matches!(self.objective, Objective::Gamma)
            && self.masks.cover[v] & !covered == 0;
        if !skip_include {
            self.chosen.push(v);
            let hit = self.dfs(
                v + 1,
                chosen_mask | (1 << v),
                covered | self.masks.cover[v],
                rem - 1,
            );
            self.chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }

        // exclude v: v can no longer enter the set on this branch
        if matches!(self.objective, Objective::Sep | Objective::Ld) {
            let reachable = chosen_mask | high_mask(self.masks.all, v + 1);
            for &u in &self.frozen {
                let separators = self.masks.in_open[u] ^ self.masks.in_open[v];
                if separators & reachable == 0 {
                    return None; // u and v can never be located
                }
            }
            self.frozen.push(v);
            let hit = self.dfs(v + 1, chosen_mask, covered, rem);
            self.frozen.pop();
            hit
        } else {
            self.dfs(v + 1, chosen_mask, covered, rem)
        }
    }
}

fn solve(g: &Digraph, limit: usize, objective: Objective, lb: usize) -> Result<ExactResult, ExactError> {
    check_limit(g, limit)?;
    let n = g.n();
    if n == 0 {
        return Ok(ExactResult {
            value: 0,
            witness: VertexSet::empty(0),
            explored: 0,
        });
    }
    let masks = Masks::new(g);
    let mut explored = 0u64;
    for k in lb..=n {
        let mut search = Search {
            masks: &masks,
            objective,
            explored: 0,
            chosen: Vec::with_capacity(k),
            frozen: Vec::with_capacity(n),
            scratch: Vec::with_capacity(n),
        };
        let hit = search.dfs(0, 0, 0, k);
        explored += search.explored;
        if let Some(vs) = hit {
            return Ok(ExactResult {
                value: k,
                witness: VertexSet::from_vertices(n, vs),
                explored,
            });
        }
    }
    unreachable!("the full vertex set is always valid");
}

/// Smallest k such that at most `2^k - slack` distinct traces can injectively
/// label the `n - k` outside vertices.
fn information_lower_bound(n: usize, empty_allowed: bool) -> usize {
    for k in 0..=n {
        let capacity = if k >= 63 {
            u64::MAX
        } else {
            (1u64 << k) - if empty_allowed { 0 } else { 1 }
        };
        if (n - k) as u64 <= capacity {
            return k;
        }
    }
    n
}

/// Minimum dominating set.
pub fn gamma(g: &Digraph, limit: usize) -> Result<ExactResult, ExactError> {
    check_limit(g, limit)?;
    let lb = if g.n() == 0 {
        0
    } else {
        let masks = Masks::new(g);
        cover_packing(&masks, 0, 0, g.n()).unwrap_or(g.n()).max(1)
    };
    solve(g, limit, Objective::Gamma, lb)
}

/// Minimum locating set.
pub fn sep(g: &Digraph, limit: usize) -> Result<ExactResult, ExactError> {
    check_limit(g, limit)?;
    let lb = twin_class_lower_bound(g).max(information_lower_bound(g.n(), true));
    solve(g, limit, Objective::Sep, lb)
}

/// Minimum locating-dominating set.
pub fn ld(g: &Digraph, limit: usize) -> Result<ExactResult, ExactError> {
    check_limit(g, limit)?;
    let lb = twin_class_lower_bound(g)
        .max(information_lower_bound(g.n(), false))
        .max(gamma(g, limit)?.value);
    solve(g, limit, Objective::Ld, lb)
}

/// Greedy partition of the vertices into maximal classes of pairwise twins or
/// quasi-twins. Each vertex joins the first class it is related to all
/// members of. Singleton classes are included.
pub fn twin_classes(g: &Digraph) -> Vec<VertexSet> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let home = classes.iter_mut().find(|class| {
            class.iter().all(|&u| {
                !matches!(g.pair_relation(u, v).unwrap(), PairRelation::None)
            })
        });
        match home {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
        .into_iter()
        .map(|c| VertexSet::from_vertices(g.n(), c))
        .collect()
}

/// Σ (|class| − 1) over the greedy twin classes. Any locating-dominating set
/// misses at most one vertex of each class, so this is a lower bound on LD.
pub fn twin_class_lower_bound(g: &Digraph) -> usize {
    twin_classes(g).iter().map(|c| c.len() - 1).sum()
}
