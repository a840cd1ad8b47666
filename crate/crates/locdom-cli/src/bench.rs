//! Benchmark report across digraph classes: for each class, the published
//! bound, the sizes produced by the in-scope constructions on sampled
//! instances, and the exact optima where the instance is small enough.
//!
//! Sampling is seeded per (class, n, index), so reports are byte-identical
//! across runs regardless of the worker pool.

use locdom::bounds;
use locdom::exact;
use locdom::families::{generate, Family, FamilySpec};
use locdom::{acyclic, tournaments, Digraph, VertexSet};
use rayon::prelude::*;
use serde_json::Value;

const SAMPLE_RETRIES: u64 = 200;

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowClass {
    SourceFree,
    TwinFreeSourceFree,
    QuasiTwinFreeSourceFree,
    Tournament,
    AcyclicTwinFree,
    StronglyConnected,
}

const SAMPLED_CLASSES: [RowClass; 6] = [
    RowClass::SourceFree,
    RowClass::TwinFreeSourceFree,
    RowClass::QuasiTwinFreeSourceFree,
    RowClass::Tournament,
    RowClass::AcyclicTwinFree,
    RowClass::StronglyConnected,
];

impl RowClass {
    fn label(&self) -> &'static str {
        match self {
            RowClass::SourceFree => "source-free",
            RowClass::TwinFreeSourceFree => "twin-free source-free",
            RowClass::QuasiTwinFreeSourceFree => "twin-free source-free quasi-twin-free",
            RowClass::Tournament => "tournament",
            RowClass::AcyclicTwinFree => "acyclic twin-free",
            RowClass::StronglyConnected => "strongly connected",
        }
    }

    fn gamma_bound(&self) -> &'static str {
        match self {
            RowClass::SourceFree
            | RowClass::TwinFreeSourceFree
            | RowClass::QuasiTwinFreeSourceFree => "ceil(2n/3)",
            RowClass::Tournament => "ceil(log2 n)",
            RowClass::AcyclicTwinFree | RowClass::StronglyConnected => "ceil(n/2)",
        }
    }

    fn ld_bound(&self) -> &'static str {
        match self {
            RowClass::SourceFree | RowClass::StronglyConnected => "n-1",
            RowClass::TwinFreeSourceFree => "4n/5",
            RowClass::QuasiTwinFreeSourceFree => "3n/4",
            RowClass::Tournament | RowClass::AcyclicTwinFree => "ceil(n/2)",
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

fn derive_seed(base: u64, class: usize, n: usize, sample: usize, attempt: u64) -> u64 {
    let mut s = splitmix64(base ^ 0xA076_1D64_78BD_642F);
    for part in [class as u64, n as u64, sample as u64, attempt] {
        s = splitmix64(s ^ part);
    }
    s
}

fn sample_instance(class: RowClass, n: usize, base: u64, sample: usize) -> Option<Digraph> {
    let class_idx = SAMPLED_CLASSES.iter().position(|&c| c == class).unwrap();
    for attempt in 0..SAMPLE_RETRIES {
        let seed = derive_seed(base, class_idx, n, sample, attempt);
        let candidate = match class {
            RowClass::SourceFree | RowClass::StronglyConnected => generate(&FamilySpec::with_seed(
                Family::RandomDigraph { n, p: (1, 2) },
                seed,
            ))
            .ok(),
            RowClass::TwinFreeSourceFree | RowClass::QuasiTwinFreeSourceFree => {
                generate(&FamilySpec::with_seed(
                    Family::RandomSourceFreeTwinFree { n, p: (1, 2) },
                    seed,
                ))
                .ok()
            }
            RowClass::Tournament => {
                generate(&FamilySpec::with_seed(Family::RandomTournament { n }, seed)).ok()
            }
            RowClass::AcyclicTwinFree => generate(&FamilySpec::with_seed(
                Family::RandomTwinFreeDag { n, p: (1, 2) },
                seed,
            ))
            .ok(),
        }?;
        let accept = match class {
            RowClass::SourceFree => candidate.sources().is_empty(),
            RowClass::StronglyConnected => candidate.is_strongly_connected(),
            RowClass::QuasiTwinFreeSourceFree => candidate.is_quasi_twin_free(),
            _ => true,
        };
        if accept {
            return Some(candidate);
        }
    }
    None
}

/// V(G) minus the head of the least arc: a locating-dominating set of size
/// n−1 in any digraph with at least one arc.
fn all_but_one_ld_set(g: &Digraph) -> Option<VertexSet> {
    let (_, head) = g.arcs().into_iter().next()?;
    let mut s = VertexSet::full(g.n());
    s.remove(head);
    Some(s)
}

fn construct_size(class: RowClass, g: &Digraph, limit: usize) -> Option<usize> {
    match class {
        RowClass::SourceFree | RowClass::StronglyConnected => {
            all_but_one_ld_set(g).map(|s| s.len())
        }
        RowClass::TwinFreeSourceFree | RowClass::QuasiTwinFreeSourceFree => {
            bounds::ld_source_free_twin_free(g, limit)
                .ok()
                .map(|(s, _)| s.len())
        }
        RowClass::Tournament => tournaments::tournament_ld_set(g).ok().map(|s| s.len()),
        RowClass::AcyclicTwinFree => acyclic::acyclic_ld_set(g).ok().map(|s| s.len()),
    }
}

#[derive(Debug, Clone, Default)]
struct Agg {
    max: Option<usize>,
    sum: usize,
    count: usize,
}

impl Agg {
    fn push(&mut self, v: usize) {
        self.max = Some(self.max.map_or(v, |m| m.max(v)));
        self.sum += v;
        self.count += 1;
    }

    fn max_cell(&self) -> String {
        self.max.map_or(String::new(), |m| m.to_string())
    }

    fn mean_cell(&self) -> String {
        if self.count == 0 {
            String::new()
        } else {
            format!("{:.3}", self.sum as f64 / self.count as f64)
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub section: &'static str,
    pub class: String,
    pub n: usize,
    pub samples: usize,
    pub gamma_bound: String,
    pub exact_gamma_max: String,
    pub exact_gamma_mean: String,
    pub ld_bound: String,
    pub construct_ld_max: String,
    pub construct_ld_mean: String,
    pub exact_ld_max: String,
    pub exact_ld_mean: String,
}

struct SampleResult {
    construct: Option<usize>,
    exact_gamma: Option<usize>,
    exact_ld: Option<usize>,
}

fn measure(class: RowClass, g: &Digraph, limit: usize) -> SampleResult {
    let within = g.n() <= limit;
    SampleResult {
        construct: construct_size(class, g, limit),
        exact_gamma: within.then(|| exact::gamma(g, limit).unwrap().value),
        exact_ld: within.then(|| exact::ld(g, limit).unwrap().value),
    }
}

fn sampled_rows(config: &BenchConfig) -> Vec<ReportRow> {
    let mut jobs: Vec<(RowClass, usize, usize)> = Vec::new();
    for &class in &SAMPLED_CLASSES {
        for n in 4..=config.max_n {
            for i in 0..config.samples {
                jobs.push((class, n, i));
            }
        }
    }
    let results: Vec<Option<SampleResult>> = jobs
        .par_iter()
        .map(|&(class, n, i)| {
            sample_instance(class, n, config.seed, i).map(|g| measure(class, &g, config.limit))
        })
        .collect();

    let mut rows = Vec::new();
    for &class in &SAMPLED_CLASSES {
        for n in 4..=config.max_n {
            let mut construct = Agg::default();
            let mut exact_gamma = Agg::default();
            let mut exact_ld = Agg::default();
            let mut count = 0;
            for (job, result) in jobs.iter().zip(&results) {
                if job.0 != class || job.1 != n {
                    continue;
                }
                if let Some(r) = result {
                    count += 1;
                    if let Some(v) = r.construct {
                        construct.push(v);
                    }
                    if let Some(v) = r.exact_gamma {
                        exact_gamma.push(v);
                    }
                    if let Some(v) = r.exact_ld {
                        exact_ld.push(v);
                    }
                }
            }
            rows.push(ReportRow {
                section: "sampled",
                class: class.label().to_string(),
                n,
                samples: count,
                gamma_bound: class.gamma_bound().to_string(),
                exact_gamma_max: exact_gamma.max_cell(),
                exact_gamma_mean: exact_gamma.mean_cell(),
                ld_bound: class.ld_bound().to_string(),
                construct_ld_max: construct.max_cell(),
                construct_ld_mean: construct.mean_cell(),
                exact_ld_max: exact_ld.max_cell(),
                exact_ld_mean: exact_ld.mean_cell(),
            });
        }
    }
    rows
}

fn family_rows(config: &BenchConfig) -> Vec<ReportRow> {
    let mut entries: Vec<(String, Digraph, RowClass, &'static str)> = Vec::new();
    for k in 1..=3 {
        let spec = FamilySpec::new(Family::Gk { k });
        entries.push((
            spec.to_string(),
            generate(&spec).unwrap(),
            RowClass::TwinFreeSourceFree,
            "2(n-2)/3",
        ));
    }
    for k in 1..=3 {
        let spec = FamilySpec::new(Family::Tk { k });
        entries.push((
            spec.to_string(),
            generate(&spec).unwrap(),
            RowClass::Tournament,
            "ceil(n/2)",
        ));
    }
    for n in 2..=10 {
        let spec = FamilySpec::new(Family::TransitiveTournament { n });
        entries.push((
            spec.to_string(),
            generate(&spec).unwrap(),
            RowClass::Tournament,
            "ceil(n/2)",
        ));
    }
    for n in 2..=12 {
        let spec = FamilySpec::new(Family::DirectedPath { n });
        entries.push((
            spec.to_string(),
            generate(&spec).unwrap(),
            RowClass::AcyclicTwinFree,
            "ceil(n/2)",
        ));
    }

    entries
        .into_iter()
        .map(|(class, g, row_class, formula)| {
            let result = measure(row_class, &g, config.limit);
            let mut construct = Agg::default();
            let mut exact_gamma = Agg::default();
            let mut exact_ld = Agg::default();
            if let Some(v) = result.construct {
                construct.push(v);
            }
            if let Some(v) = result.exact_gamma {
                exact_gamma.push(v);
            }
            if let Some(v) = result.exact_ld {
                exact_ld.push(v);
            }
            ReportRow {
                section: "family",
                class,
                n: g.n(),
                samples: 1,
                gamma_bound: row_class.gamma_bound().to_string(),
                exact_gamma_max: exact_gamma.max_cell(),
                exact_gamma_mean: exact_gamma.mean_cell(),
                ld_bound: formula.to_string(),
                construct_ld_max: construct.max_cell(),
                construct_ld_mean: construct.mean_cell(),
                exact_ld_max: exact_ld.max_cell(),
                exact_ld_mean: exact_ld.mean_cell(),
            }
        })
        .collect()
}

pub fn run(config: &BenchConfig) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    if config.samples > 0 {
        rows.extend(sampled_rows(config));
    }
    rows.extend(family_rows(config));
    rows
}

pub const CSV_HEADER: &str = "section,class,n,samples,gamma_bound,exact_gamma_max,exact_gamma_mean,ld_bound,construct_ld_max,construct_ld_mean,exact_ld_max,exact_ld_mean";

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.section,
            r.class,
            r.n,
            r.samples,
            r.gamma_bound,
            r.exact_gamma_max,
            r.exact_gamma_mean,
            r.ld_bound,
            r.construct_ld_max,
            r.construct_ld_mean,
            r.exact_ld_max,
            r.exact_ld_mean
        ));
    }
    out
}

pub fn to_text(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<40} {:>3} {:>7} {:>12} {:>8} {:>8} {:>10} {:>9} {:>9} {:>8} {:>8}\n",
        "class", "n", "samples", "gamma_bound", "eg_max", "eg_mean", "ld_bound", "cons_max",
        "cons_mean", "eld_max", "eld_mean"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<40} {:>3} {:>7} {:>12} {:>8} {:>8} {:>10} {:>9} {:>9} {:>8} {:>8}\n",
            r.class,
            r.n,
            r.samples,
            r.gamma_bound,
            r.exact_gamma_max,
            r.exact_gamma_mean,
            r.ld_bound,
            r.construct_ld_max,
            r.construct_ld_mean,
            r.exact_ld_max,
            r.exact_ld_mean
        ));
    }
    out
}

pub fn to_json(rows: &[ReportRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                serde_json::json!({
                    "section": r.section,
                    "class": r.class,
                    "n": r.n,
                    "samples": r.samples,
                    "gamma_bound": r.gamma_bound,
                    "exact_gamma_max": r.exact_gamma_max,
                    "exact_gamma_mean": r.exact_gamma_mean,
                    "ld_bound": r.ld_bound,
                    "construct_ld_max": r.construct_ld_max,
                    "construct_ld_mean": r.construct_ld_mean,
                    "exact_ld_max": r.exact_ld_max,
                    "exact_ld_mean": r.exact_ld_mean,
                })
            })
            .collect(),
    )
}
