//! Definition-level oracles used to cross-check the library: straight loops
//! over bitmask subsets, independent of the bitset machinery and of the
//! pruned searches in the crate.

#![allow(dead_code)]

use locdom::Digraph;

pub fn dominating_ok(g: &Digraph, s: u64) -> bool {
    (0..g.n()).all(|v| {
        s >> v & 1 == 1 || g.in_neighbours(v).iter().any(|u| s >> u & 1 == 1)
    })
}

fn outside_traces(g: &Digraph, s: u64) -> Vec<u64> {
    (0..g.n())
        .filter(|&v| s >> v & 1 == 0)
        .map(|v| {
            g.in_neighbours(v)
                .iter()
                .filter(|&u| s >> u & 1 == 1)
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect()
}

pub fn locating_ok(g: &Digraph, s: u64) -> bool {
    let mut traces = outside_traces(g, s);
    traces.sort_unstable();
    traces.windows(2).all(|w| w[0] != w[1])
}

pub fn ld_ok(g: &Digraph, s: u64) -> bool {
    dominating_ok(g, s) && locating_ok(g, s)
}

fn min_size(g: &Digraph, valid: impl Fn(&Digraph, u64) -> bool) -> usize {
    let n = g.n();
    assert!(n <= 16, "oracle is exhaustive, keep instances small");
    let mut best = n;
    for mask in 0..(1u64 << n) {
        if (mask.count_ones() as usize) < best && valid(g, mask) {
            best = mask.count_ones() as usize;
        }
    }
    best
}

pub fn brute_gamma(g: &Digraph) -> usize {
    min_size(g, dominating_ok)
}

pub fn brute_sep(g: &Digraph) -> usize {
    min_size(g, locating_ok)
}

pub fn brute_ld(g: &Digraph) -> usize {
    min_size(g, ld_ok)
}

/// Quasi-twin test straight from the definition: N⁻(x) = N⁻(y) ∪ {y}.
pub fn quasi_twins_naive(g: &Digraph, x: usize, y: usize) -> bool {
    let one_way = |x: usize, y: usize| {
        let mut expected: Vec<usize> = g.in_neighbours(y).iter().collect();
        expected.push(y);
        expected.sort_unstable();
        g.in_neighbours(x).iter().collect::<Vec<_>>() == expected
    };
    one_way(x, y) || one_way(y, x)
}

/// Canonical witness by literal enumeration: subsets by increasing size,
/// lexicographic within a size, first valid wins.
pub fn brute_canonical_witness(
    g: &Digraph,
    valid: impl Fn(&Digraph, u64) -> bool,
) -> (usize, Vec<usize>) {
    let n = g.n();
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if valid(g, mask) {
                return (k, idx);
            }
            // next k-combination in lexicographic order
            let mut i = k;
            loop {
                if i == 0 {
                    idx.clear();
                    break;
                }
                i -= 1;
                if idx[i] < n - (k - i) {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
            if idx.is_empty() && k > 0 {
                break;
            }
            if k == 0 {
                break;
            }
        }
    }
    (n, (0..n).collect())
}
