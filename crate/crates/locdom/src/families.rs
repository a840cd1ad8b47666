//! Deterministic generators for the named instance families and seeded
//! random models, plus exhaustive enumeration of all labelled digraphs of
//! small order.
//!
//! Every generator re-checks its defining predicate after construction and
//! reports `PredicateFailed` instead of handing out a wrong instance. Random
//! models are deterministic given the seed (ChaCha8 stream) and the
//! rejection-sampled ones retry up to [`RETRY_LIMIT`] times.

use crate::digraph::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

/// Retry budget for rejection-sampled random models.
pub const RETRY_LIMIT: usize = 200;

/// Largest order accepted by [`enumerate_all`] (2^(n(n−1)) labelled digraphs).
pub const ENUMERATION_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family spec: {0}")]
    BadSpec(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("generator bug: {family} instance failed predicate '{predicate}'")]
    PredicateFailed { family: String, predicate: String },
    #[error("rejection sampling gave up after {attempts} attempts ({rejected_structure} structural rejections, {rejected_twins} twin rejections)")]
    RetryLimitExceeded {
        attempts: usize,
        rejected_structure: usize,
        rejected_twins: usize,
    },
    #[error("enumeration of order {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Orientation of one leaf of a directed star relative to the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafOrientation {
    /// Arc from the leaf into the centre.
    In,
    /// Arc from the centre to the leaf.
    Out,
    /// Both arcs.
    Both,
}

impl LeafOrientation {
    fn from_char(c: char) -> Option<Self> {
        match c {
            'i' => Some(LeafOrientation::In),
            'o' => Some(LeafOrientation::Out),
            'b' => Some(LeafOrientation::Both),
            _ => None,
        }
    }

    fn as_char(&self) -> char {
        match self {
            LeafOrientation::In => 'i',
            LeafOrientation::Out => 'o',
            LeafOrientation::Both => 'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// k disjoint directed triangles, a sink-then-source hub pair s, t.
    Gk { k: usize },
    /// k stacked directed triangles forming a tournament of order 3k.
    Tk { k: usize },
    TransitiveTournament { n: usize },
    DirectedPath { n: usize },
    DirectedCycle { n: usize },
    /// Centre 0, leaves 1..n−1 with per-leaf orientations (pattern repeats).
    DirectedStar { n: usize, pattern: Vec<LeafOrientation> },
    /// Sources S1, bidirected clique C, sinks S2 with all arcs
    /// S1→(C∪S2) and C→S2.
    Thm33Family { s1: usize, c: usize, s2: usize },
    BidirectedComplete { n: usize },
    BidirectedStar { n: usize },
    RandomDigraph { n: usize, p: (u32, u32) },
    RandomTournament { n: usize },
    RandomDag { n: usize, p: (u32, u32) },
    RandomSourceFreeTwinFree { n: usize, p: (u32, u32) },
    RandomTwinFreeDag { n: usize, p: (u32, u32) },
}

/// A declarative instance description: family, parameters and seed.
/// The seed only matters for the random families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, seed: 0 }
    }

    pub fn with_seed(family: Family, seed: u64) -> Self {
        FamilySpec { family, seed }
    }

    /// Parse the textual form, e.g. `gk:k=3`, `star:n=6,pattern=iob`,
    /// `rand-tournament:n=50,seed=9`.
    pub fn parse(text: &str) -> Result<FamilySpec, FamilyError> {
        let bad = |msg: &str| FamilyError::BadSpec(format!("{msg} in '{text}'"));
        let (name, rest) = match text.split_once(':') {
            Some((name, rest)) => (name, rest),
            None => (text, ""),
        };
        let mut k = None;
        let mut n = None;
        let mut s1 = None;
        let mut c = None;
        let mut s2 = None;
        let mut p = None;
        let mut seed = 0u64;
        let mut pattern: Option<Vec<LeafOrientation>> = None;
        for item in rest.split(',').filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(&format!("expected key=value, got '{item}'")))?;
            let int = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad(&format!("'{value}' is not a non-negative integer")))
            };
            match key {
                "k" => k = Some(int()?),
                "n" => n = Some(int()?),
                "s1" => s1 = Some(int()?),
                "c" => c = Some(int()?),
                "s2" => s2 = Some(int()?),
                "seed" => {
                    seed = value
                        .parse::<u64>()
                        .map_err(|_| bad(&format!("'{value}' is not a valid seed")))?
                }
                "p" => {
                    let (num, den) = value
                        .split_once('/')
                        .ok_or_else(|| bad("probability must be written num/den"))?;
                    let num = num
                        .parse::<u32>()
                        .map_err(|_| bad("bad probability numerator"))?;
                    let den = den
                        .parse::<u32>()
                        .map_err(|_| bad("bad probability denominator"))?;
                    if den == 0 || num > den {
                        return Err(bad("probability must satisfy 0 <= num/den <= 1"));
                    }
                    p = Some((num, den));
                }
                "pattern" => {
                    let mut v = Vec::new();
                    for ch in value.chars() {
                        v.push(
                            LeafOrientation::from_char(ch)
                                .ok_or_else(|| bad("pattern chars must be i, o or b"))?,
                        );
                    }
                    if v.is_empty() {
                        return Err(bad("pattern must be nonempty"));
                    }
                    pattern = Some(v);
                }
                _ => return Err(bad(&format!("unknown key '{key}'"))),
            }
        }
        let need_k = || k.ok_or_else(|| bad("missing k"));
        let need_n = || n.ok_or_else(|| bad("missing n"));
        let p_or_half = p.unwrap_or((1, 2));
        let family = match name {
            "gk" => Family::Gk { k: need_k()? },
            "tk" => Family::Tk { k: need_k()? },
            "tt" => Family::TransitiveTournament { n: need_n()? },
            "path" => Family::DirectedPath { n: need_n()? },
            "cycle" => Family::DirectedCycle { n: need_n()? },
            "star" => Family::DirectedStar {
                n: need_n()?,
                pattern: pattern.unwrap_or_else(|| vec![LeafOrientation::Both]),
            },
            "thm33" => Family::Thm33Family {
                s1: s1.ok_or_else(|| bad("missing s1"))?,
                c: c.ok_or_else(|| bad("missing c"))?,
                s2: s2.ok_or_else(|| bad("missing s2"))?,
            },
            "bicomplete" => Family::BidirectedComplete { n: need_n()? },
            "bistar" => Family::BidirectedStar { n: need_n()? },
            "rand-digraph" => Family::RandomDigraph {
                n: need_n()?,
                p: p_or_half,
            },
            "rand-tournament" => Family::RandomTournament { n: need_n()? },
            "rand-dag" => Family::RandomDag {
                n: need_n()?,
                p: p_or_half,
            },
            "rand-sftf" => Family::RandomSourceFreeTwinFree {
                n: need_n()?,
                p: p_or_half,
            },
            "rand-tfdag" => Family::RandomTwinFreeDag {
                n: need_n()?,
                p: p_or_half,
            },
            _ => return Err(bad(&format!("unknown family '{name}'"))),
        };
        Ok(FamilySpec { family, seed })
    }

    fn is_random(&self) -> bool {
        matches!(
            self.family,
            Family::RandomDigraph { .. }
                | Family::RandomTournament { .. }
                | Family::RandomDag { .. }
                | Family::RandomSourceFreeTwinFree { .. }
                | Family::RandomTwinFreeDag { .. }
        )
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |f: &mut fmt::Formatter<'_>, (num, den): (u32, u32)| write!(f, ",p={num}/{den}");
        match &self.family {
            Family::Gk { k } => write!(f, "gk:k={k}")?,
            Family::Tk { k } => write!(f, "tk:k={k}")?,
            Family::TransitiveTournament { n } => write!(f, "tt:n={n}")?,
            Family::DirectedPath { n } => write!(f, "path:n={n}")?,
            Family::DirectedCycle { n } => write!(f, "cycle:n={n}")?,
            Family::DirectedStar { n, pattern } => {
                write!(f, "star:n={n},pattern=")?;
                for o in pattern {
                    write!(f, "{}", o.as_char())?;
                }
            }
            Family::Thm33Family { s1, c, s2 } => write!(f, "thm33:s1={s1},c={c},s2={s2}")?,
            Family::BidirectedComplete { n } => write!(f, "bicomplete:n={n}")?,
            Family::BidirectedStar { n } => write!(f, "bistar:n={n}")?,
            Family::RandomDigraph { n, p: pr } => {
                write!(f, "rand-digraph:n={n}")?;
                p(f, *pr)?;
            }
            Family::RandomTournament { n } => write!(f, "rand-tournament:n={n}")?,
            Family::RandomDag { n, p: pr } => {
                write!(f, "rand-dag:n={n}")?;
                p(f, *pr)?;
            }
            Family::RandomSourceFreeTwinFree { n, p: pr } => {
                write!(f, "rand-sftf:n={n}")?;
                p(f, *pr)?;
            }
            Family::RandomTwinFreeDag { n, p: pr } => {
                write!(f, "rand-tfdag:n={n}")?;
                p(f, *pr)?;
            }
        }
        if self.is_random() {
            write!(f, ",seed={}", self.seed)?;
        }
        Ok(())
    }
}

fn check(
    g: Digraph,
    family: &str,
    predicates: &[(&str, bool)],
) -> Result<Digraph, FamilyError> {
    for (name, ok) in predicates {
        if !ok {
            return Err(FamilyError::PredicateFailed {
                family: family.to_string(),
                predicate: name.to_string(),
            });
        }
    }
    Ok(g)
}

fn triangle_arcs(block: usize) -> [(usize, usize); 3] {
    let b = 3 * block;
    [(b, b + 1), (b + 1, b + 2), (b + 2, b)]
}

fn gen_gk(k: usize) -> Result<Digraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadParams("gk requires k >= 1".into()));
    }
    let n = 3 * k + 2;
    let (s, t) = (3 * k, 3 * k + 1);
    let mut arcs = Vec::new();
    for b in 0..k {
        arcs.extend(triangle_arcs(b));
    }
    for v in 0..3 * k {
        arcs.push((v, s));
        arcs.push((t, v));
    }
    arcs.push((s, t));
    let g = Digraph::build(n, &arcs).expect("gk arcs are valid");
    let p = g.structural_profile();
    check(
        g,
        "gk",
        &[
            ("source-free", p.is_source_free),
            ("twin-free", p.is_twin_free),
            ("quasi-twin-free", p.is_quasi_twin_free),
            ("strongly-connected", p.is_strongly_connected),
        ],
    )
}

fn gen_tk(k: usize) -> Result<Digraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadParams("tk requires k >= 1".into()));
    }
    let n = 3 * k;
    let mut arcs = Vec::new();
    for b in 0..k {
        arcs.extend(triangle_arcs(b));
    }
    for i in 0..k {
        for j in i + 1..k {
            for u in 3 * i..3 * i + 3 {
                for v in 3 * j..3 * j + 3 {
                    arcs.push((u, v));
                }
            }
        }
    }
    let g = Digraph::build(n, &arcs).expect("tk arcs are valid");
    let tournament = g.is_tournament();
    check(g, "tk", &[("tournament", tournament)])
}

fn gen_tt(n: usize) -> Result<Digraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParams("tt requires n >= 1".into()));
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            arcs.push((i, j));
        }
    }
    let g = Digraph::build(n, &arcs).expect("tt arcs are valid");
    let transitive = g.is_transitive_tournament();
    check(g, "tt", &[("transitive tournament", transitive)])
}

fn gen_path(n: usize) -> Result<Digraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParams("path requires n >= 1".into()));
    }
    let arcs: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Digraph::build(n, &arcs).expect("path arcs are valid"))
}

fn gen_cycle(n: usize) -> Result<Digraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParams("cycle requires n >= 2".into()));
    }
    let mut arcs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    arcs.push((n - 1, 0));
    let g = Digraph::build(n, &arcs).expect("cycle arcs are valid");
    let strong = g.is_strongly_connected();
    check(g, "cycle", &[("strongly-connected", strong)])
}

fn star_arcs(n: usize, pattern: &[LeafOrientation]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for leaf in 1..n {
        match pattern[(leaf - 1) % pattern.len()] {
            LeafOrientation::In => arcs.push((leaf, 0)),
            LeafOrientation::Out => arcs.push((0, leaf)),
            LeafOrientation::Both => {
                arcs.push((leaf, 0));
                arcs.push((0, leaf));
            }
        }
    }
    arcs
}

fn is_directed_star(g: &Digraph, centre: usize) -> bool {
    g.n() >= 2
        && g.arcs()
            .iter()
            .all(|&(u, v)| u == centre || v == centre)
        && (0..g.n()).all(|v| g.in_degree(v) + g.out_degree(v) > 0)
}

fn gen_star(n: usize, pattern: &[LeafOrientation]) -> Result<Digraph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParams("star requires n >= 2".into()));
    }
    if pattern.is_empty() {
        return Err(FamilyError::BadParams("star pattern must be nonempty".into()));
    }
    let g = Digraph::build(n, &star_arcs(n, pattern)).expect("star arcs are valid");
    let star = is_directed_star(&g, 0);
    check(g, "star", &[("directed star", star)])
}

fn gen_thm33(s1: usize, c: usize, s2: usize) -> Result<Digraph, FamilyError> {
    let n = s1 + c + s2;
    if n == 0 {
        return Err(FamilyError::BadParams("thm33 requires s1+c+s2 >= 1".into()));
    }
    let c_range = s1..s1 + c;
    let s2_range = s1 + c..n;
    let mut arcs = Vec::new();
    for u in 0..s1 {
        for v in s1..n {
            arcs.push((u, v));
        }
    }
    for u in c_range.clone() {
        for v in c_range.clone() {
            if u != v {
                arcs.push((u, v));
            }
        }
        for v in s2_range.clone() {
            arcs.push((u, v));
        }
    }
    let g = Digraph::build(n, &arcs).expect("thm33 arcs are valid");
    if !g.is_connected() {
        return Err(FamilyError::BadParams(format!(
            "thm33 parts s1={s1}, c={c}, s2={s2} yield a disconnected digraph"
        )));
    }
    Ok(g)
}

fn gen_bicomplete(n: usize) -> Result<Digraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParams("bicomplete requires n >= 1".into()));
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    Ok(Digraph::build(n, &arcs).expect("bicomplete arcs are valid"))
}

fn ratio(p: (u32, u32)) -> Result<(u32, u32), FamilyError> {
    if p.1 == 0 || p.0 > p.1 {
        return Err(FamilyError::BadParams(format!(
            "probability {}/{} is not in [0,1]",
            p.0, p.1
        )));
    }
    Ok(p)
}

fn gen_random_digraph(rng: &mut ChaCha8Rng, n: usize, p: (u32, u32)) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_ratio(p.0, p.1) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::build(n, &arcs).expect("random arcs are valid")
}

fn gen_random_tournament(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_ratio(1, 2) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::build(n, &arcs).expect("tournament arcs are valid")
}

fn gen_random_dag(rng: &mut ChaCha8Rng, n: usize, p: (u32, u32)) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_ratio(p.0, p.1) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::build(n, &arcs).expect("dag arcs are valid")
}

fn rejection_sample(
    rng: &mut ChaCha8Rng,
    mut gen: impl FnMut(&mut ChaCha8Rng) -> Digraph,
    structural_ok: impl Fn(&Digraph) -> bool,
) -> Result<Digraph, FamilyError> {
    let mut rejected_structure = 0;
    let mut rejected_twins = 0;
    for _ in 0..RETRY_LIMIT {
        let g = gen(rng);
        if !structural_ok(&g) {
            rejected_structure += 1;
            continue;
        }
        if !g.is_twin_free() {
            rejected_twins += 1;
            continue;
        }
        return Ok(g);
    }
    Err(FamilyError::RetryLimitExceeded {
        attempts: RETRY_LIMIT,
        rejected_structure,
        rejected_twins,
    })
}

/// Generate the digraph described by `spec`. Deterministic: the same spec
/// (including seed) always yields the identical digraph.
pub fn generate(spec: &FamilySpec) -> Result<Digraph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.family {
        Family::Gk { k } => gen_gk(*k),
        Family::Tk { k } => gen_tk(*k),
        Family::TransitiveTournament { n } => gen_tt(*n),
        Family::DirectedPath { n } => gen_path(*n),
        Family::DirectedCycle { n } => gen_cycle(*n),
        Family::DirectedStar { n, pattern } => gen_star(*n, pattern),
        Family::Thm33Family { s1, c, s2 } => gen_thm33(*s1, *c, *s2),
        Family::BidirectedComplete { n } => gen_bicomplete(*n),
        Family::BidirectedStar { n } => gen_star(*n, &[LeafOrientation::Both]),
        Family::RandomDigraph { n, p } => {
            let p = ratio(*p)?;
            Ok(gen_random_digraph(&mut rng, *n, p))
        }
        Family::RandomTournament { n } => {
            let g = gen_random_tournament(&mut rng, *n);
            let tournament = g.is_tournament();
            check(g, "rand-tournament", &[("tournament", tournament)])
        }
        Family::RandomDag { n, p } => {
            let p = ratio(*p)?;
            let g = gen_random_dag(&mut rng, *n, p);
            let acyclic = g.is_acyclic();
            check(g, "rand-dag", &[("acyclic", acyclic)])
        }
        Family::RandomSourceFreeTwinFree { n, p } => {
            let p = ratio(*p)?;
            rejection_sample(
                &mut rng,
                |rng| gen_random_digraph(rng, *n, p),
                |g| g.sources().is_empty(),
            )
        }
        Family::RandomTwinFreeDag { n, p } => {
            let p = ratio(*p)?;
            rejection_sample(&mut rng, |rng| gen_random_dag(rng, *n, p), |_| true)
        }
    }
}

/// Stream every labelled loopless digraph on `n` vertices exactly once, in
/// ascending arc-bitmask order over the lexicographic ordered-pair list.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Digraph>, FamilyError> {
    if n > ENUMERATION_LIMIT {
        return Err(FamilyError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let arcs: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Digraph::build(n, &arcs).expect("enumerated arcs are valid")
    }))
}
