//! Command-line front end: digraph file I/O, analysis, exact and
//! constructive solving, verification and the benchmark report.
//!
//! Exit codes: 0 success, 1 invalid certificate/claim, 2 input error,
//! 3 resource limit.

mod bench;
mod cert;
mod file;

use cert::{BoundJson, CertificateJson};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use locdom::bounds::{self, BoundsError, Ratio};
use locdom::certify::{self, Claim};
use locdom::exact::{self, ExactError};
use locdom::families::FamilySpec;
use locdom::{acyclic, characterize, tournaments, Digraph, VertexSet};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "locdom",
    version,
    about = "Locating-dominating sets in digraphs: analyze, solve, generate, verify, bench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for randomized commands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Vertex-count limit for the exact solvers
    #[arg(long = "limit-n", global = true, default_value_t = exact::DEFAULT_LIMIT)]
    limit_n: usize,

    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,

    /// Embed the construction trace in certificates
    #[arg(long, global = true)]
    trace: bool,

    /// Emit the digraph in DOT format instead of the usual output
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: predicate flags, twin pairs, sources and sinks
    Analyze { file: PathBuf },
    /// Compute a minimum (--exact) or constructed (--construct) set
    #[command(group(ArgGroup::new("mode").required(true).args(["exact", "construct"])))]
    Solve {
        file: PathBuf,
        /// Exhaustive search for the optimum
        #[arg(long)]
        exact: bool,
        /// Run the strongest applicable constructive pipeline
        #[arg(long)]
        construct: bool,
        /// Which number to compute
        #[arg(long, value_enum, default_value_t = Objective::Ld)]
        objective: Objective,
        /// Pipeline parameters, e.g. x=1/2
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Generate a named or random family instance (see README for specs)
    Generate {
        spec: String,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a claimed set against a digraph
    Verify {
        file: PathBuf,
        /// Comma-separated vertex list, e.g. 0,3,7
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        claim: ClaimArg,
    },
    /// Check the extremal characterizations (SEP = n−1, LD = n−1)
    Characterize { file: PathBuf },
    /// Benchmark table across digraph classes
    Bench {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Also write the report as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Objective {
    Gamma,
    Sep,
    Ld,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    Dominating,
    Locating,
    Ld,
}

impl ClaimArg {
    fn claim(&self) -> Claim {
        match self {
            ClaimArg::Dominating => Claim::Dominating,
            ClaimArg::Locating => Claim::Locating,
            ClaimArg::Ld => Claim::LocatingDominating,
        }
    }
}

/// Write to stdout, exiting quietly when the consumer closed the pipe.
fn emit(text: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_fmt(text) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("stdout write failed: {e}");
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(format_args!("{}\n", format_args!($($arg)*))) };
}

macro_rules! out_raw {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

/// Failure with the exit code mandated by the CLI contract.
struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn input(message: impl Into<String>) -> AppError {
        AppError {
            code: 2,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> AppError {
        AppError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<ExactError> for AppError {
    fn from(e: ExactError) -> AppError {
        AppError::resource(e.to_string())
    }
}

impl From<BoundsError> for AppError {
    fn from(e: BoundsError) -> AppError {
        match e {
            BoundsError::TooLarge(inner) => AppError::resource(inner.to_string()),
            other => AppError::input(other.to_string()),
        }
    }
}

fn read_digraph(path: &Path) -> Result<Digraph, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::input(format!("cannot read {}: {e}", path.display())))?;
    file::parse(&text).map_err(|e| AppError::input(format!("{}: {e}", path.display())))
}

fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, AppError> {
    let mut s = VertexSet::empty(n);
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = item
            .parse()
            .map_err(|_| AppError::input(format!("bad vertex '{item}' in set")))?;
        if v >= n {
            return Err(AppError::input(format!(
                "vertex {v} out of range for a digraph of order {n}"
            )));
        }
        s.insert(v);
    }
    Ok(s)
}

fn print_certificate(cert: &CertificateJson, as_json: bool) {
    if as_json {
        out!("{}", serde_json::to_string(cert).unwrap());
    } else {
        out!(
            "claim: {}\nset: {:?} (size {})\nvalid: {}",
            cert.claim, cert.set, cert.size, cert.valid
        );
        if let Some(w) = &cert.witness {
            match w {
                cert::WitnessJson::Undominated(v) => out!("witness: vertex {v} undominated"),
                cert::WitnessJson::UnlocatedPair(u, v) => {
                    out!("witness: pair ({u}, {v}) not located")
                }
            }
        }
        if let Some(b) = &cert.bound {
            out!("bound: {} = {}", b.name, b.value);
        }
    }
}

fn cmd_analyze(path: &Path, as_json: bool, dot: bool) -> Result<u8, AppError> {
    let g = read_digraph(path)?;
    if dot {
        out_raw!("{}", file::to_dot(&g));
        return Ok(0);
    }
    let profile = g.structural_profile();
    let pairs = g.related_pairs();
    if as_json {
        let pair_json: Vec<Value> = pairs
            .iter()
            .map(|(u, v, rel)| {
                let kind = match rel {
                    locdom::PairRelation::OpenTwin => "open-twin",
                    locdom::PairRelation::ClosedTwin => "closed-twin",
                    locdom::PairRelation::QuasiTwin { .. } => "quasi-twin",
                    locdom::PairRelation::None => unreachable!(),
                };
                json!({"u": u, "v": v, "kind": kind})
            })
            .collect();
        let report = json!({
            "n": g.n(),
            "arc_count": g.arc_count(),
            "sources": profile.sources,
            "sinks": profile.sinks,
            "source_free": profile.is_source_free,
            "twin_free": profile.is_twin_free,
            "quasi_twin_free": profile.is_quasi_twin_free,
            "acyclic": profile.is_acyclic,
            "tournament": profile.is_tournament,
            "transitive_tournament": profile.is_transitive_tournament,
            "strongly_connected": profile.is_strongly_connected,
            "connected": profile.is_connected,
            "related_pairs": pair_json,
        });
        out!("{report}");
    } else {
        out!("n = {}, arcs = {}", g.n(), g.arc_count());
        out!("sources: {:?}, sinks: {:?}", profile.sources, profile.sinks);
        out!(
            "twin-free: {}, quasi-twin-free: {}, acyclic: {}, tournament: {}",
            profile.is_twin_free,
            profile.is_quasi_twin_free,
            profile.is_acyclic,
            profile.is_tournament
        );
        out!(
            "transitive tournament: {}, strongly connected: {}, connected: {}",
            profile.is_transitive_tournament,
            profile.is_strongly_connected,
            profile.is_connected
        );
        for (u, v, rel) in pairs {
            out!("pair ({u}, {v}): {rel:?}");
        }
    }
    Ok(0)
}

fn exact_certificate(
    g: &Digraph,
    objective: Objective,
    limit: usize,
    want_trace: bool,
) -> Result<CertificateJson, AppError> {
    let (result, claim) = match objective {
        Objective::Gamma => (exact::gamma(g, limit)?, Claim::Dominating),
        Objective::Sep => (exact::sep(g, limit)?, Claim::Locating),
        Objective::Ld => (exact::ld(g, limit)?, Claim::LocatingDominating),
    };
    let cert = match claim {
        Claim::Dominating => certify::is_dominating(g, &result.witness),
        Claim::Locating => certify::is_locating(g, &result.witness),
        Claim::LocatingDominating => certify::is_locating_dominating(g, &result.witness),
    };
    let trace = want_trace.then(|| json!({"method": "exact", "explored": result.explored}));
    let bound = Some(BoundJson {
        name: "exact".into(),
        value: result.value as f64,
    });
    Ok(CertificateJson::new(g, &cert, bound, trace))
}

fn parse_x_param(params: &[String]) -> Result<Option<Ratio>, AppError> {
    let mut x = None;
    for p in params {
        let (key, value) = p
            .split_once('=')
            .ok_or_else(|| AppError::input(format!("bad --param '{p}', expected key=value")))?;
        match key {
            "x" => {
                let (num, den) = value
                    .split_once('/')
                    .ok_or_else(|| AppError::input("x must be a fraction num/den"))?;
                let num: u64 = num.parse().map_err(|_| AppError::input("bad x numerator"))?;
                let den: u64 = den.parse().map_err(|_| AppError::input("bad x denominator"))?;
                x = Some(
                    Ratio::checked(num, den)
                        .ok_or_else(|| AppError::input("x must satisfy 0 < x <= 1"))?,
                );
            }
            other => return Err(AppError::input(format!("unknown --param '{other}'"))),
        }
    }
    Ok(x)
}

fn construct_certificate(
    g: &Digraph,
    objective: Objective,
    limit: usize,
    x_override: Option<Ratio>,
    want_trace: bool,
) -> Result<CertificateJson, AppError> {
    if objective == Objective::Gamma {
        return Err(AppError::input(
            "constructions target locating(-dominating) sets; use --exact for gamma",
        ));
    }
    let n = g.n();
    let profile = g.structural_profile();

    if profile.is_tournament {
        if objective == Objective::Sep {
            let (set, log) = tournaments::tournament_locating_set_traced(g)
                .map_err(|e| AppError::input(e.to_string()))?;
            let cert = certify::is_locating(g, &set);
            let bound = Some(BoundJson {
                name: "tournament ⌊n/2⌋".into(),
                value: (n / 2) as f64,
            });
            let trace = want_trace.then(|| cert::tournament_trace_json(&log));
            return Ok(CertificateJson::new(g, &cert, bound, trace));
        }
        let (set, log) =
            tournaments::tournament_ld_set_traced(g).map_err(|e| AppError::input(e.to_string()))?;
        let cert = certify::is_locating_dominating(g, &set);
        let bound = Some(BoundJson {
            name: "tournament ⌈n/2⌉".into(),
            value: n.div_ceil(2) as f64,
        });
        let trace = want_trace.then(|| cert::tournament_trace_json(&log));
        return Ok(CertificateJson::new(g, &cert, bound, trace));
    }

    let as_claim = |set: &VertexSet| match objective {
        Objective::Sep => certify::is_locating(g, set),
        _ => certify::is_locating_dominating(g, set),
    };

    if profile.is_acyclic && profile.is_twin_free {
        let set = acyclic::acyclic_ld_set(g).map_err(|e| AppError::input(e.to_string()))?;
        let cert = as_claim(&set);
        let bound = Some(BoundJson {
            name: "acyclic twin-free ⌈n/2⌉".into(),
            value: n.div_ceil(2) as f64,
        });
        let trace = if want_trace {
            Some(cert::level_decomposition_json(
                &acyclic::level_decomposition(g).map_err(|e| AppError::input(e.to_string()))?,
            ))
        } else {
            None
        };
        return Ok(CertificateJson::new(g, &cert, bound, trace));
    }

    if profile.is_source_free && profile.is_twin_free {
        let (set, gm_trace) = match x_override {
            Some(x) => {
                let s = bounds::half_parts_dominating_set(g, limit)?;
                bounds::ld_from_dominating(g, &s, x)?
            }
            None => bounds::ld_source_free_twin_free(g, limit)?,
        };
        let cert = as_claim(&set);
        let bound = Some(BoundJson {
            name: format!("source-free twin-free {}", gm_trace.bound.name),
            value: gm_trace.bound.value(),
        });
        let trace = want_trace.then(|| cert::general_method_trace_json(&gm_trace));
        return Ok(CertificateJson::new(g, &cert, bound, trace));
    }

    if profile.is_twin_free && n >= 3 {
        let (set, tf_trace) = bounds::ld_twin_free(g, limit)?;
        let cert = as_claim(&set);
        let bound = Some(BoundJson {
            name: format!("twin-free {}", tf_trace.bound().name),
            value: tf_trace.bound().value(),
        });
        let trace = want_trace.then(|| cert::twin_free_trace_json(&tf_trace));
        return Ok(CertificateJson::new(g, &cert, bound, trace));
    }

    // no pipeline applies; report every violated precondition
    let mut reasons = vec!["not a tournament".to_string()];
    if !profile.is_acyclic {
        reasons.push("not acyclic".into());
    }
    if !profile.is_source_free {
        reasons.push(format!("has a source: {:?}", profile.sources));
    }
    if let Some((u, v)) = g.find_twin_pair() {
        reasons.push(format!("has twins ({u}, {v})"));
    }
    if n < 3 {
        reasons.push(format!("order {n} is below 3"));
    }
    Err(AppError::input(format!(
        "no applicable construction: {}",
        reasons.join("; ")
    )))
}

fn cmd_solve(
    path: &Path,
    exact_mode: bool,
    objective: Objective,
    params: &[String],
    limit: usize,
    as_json: bool,
    want_trace: bool,
) -> Result<u8, AppError> {
    let g = read_digraph(path)?;
    let x = parse_x_param(params)?;
    let cert = if exact_mode {
        exact_certificate(&g, objective, limit, want_trace)?
    } else {
        construct_certificate(&g, objective, limit, x, want_trace)?
    };
    print_certificate(&cert, as_json);
    Ok(if cert.valid { 0 } else { 1 })
}

fn cmd_generate(
    spec_text: &str,
    out: Option<&Path>,
    global_seed: u64,
    dot: bool,
) -> Result<u8, AppError> {
    let mut spec = FamilySpec::parse(spec_text).map_err(|e| AppError::input(e.to_string()))?;
    if !spec_text.contains("seed=") {
        spec.seed = global_seed;
    }
    let g = locdom::families::generate(&spec).map_err(|e| AppError::input(e.to_string()))?;
    let text = if dot {
        file::to_dot(&g)
    } else {
        file::serialize(&g, &[format!("spec: {spec}")])
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::input(format!("cannot write {}: {e}", path.display())))?,
        None => out_raw!("{text}"),
    }
    Ok(0)
}

fn cmd_verify(
    path: &Path,
    set_text: &str,
    claim: ClaimArg,
    as_json: bool,
) -> Result<u8, AppError> {
    let g = read_digraph(path)?;
    let set = parse_vertex_set(set_text, g.n())?;
    let cert = match claim.claim() {
        Claim::Dominating => certify::is_dominating(&g, &set),
        Claim::Locating => certify::is_locating(&g, &set),
        Claim::LocatingDominating => certify::is_locating_dominating(&g, &set),
    };
    let cert_json = CertificateJson::new(&g, &cert, None, None);
    print_certificate(&cert_json, as_json);
    Ok(if cert.valid { 0 } else { 1 })
}

fn cmd_characterize(path: &Path, as_json: bool) -> Result<u8, AppError> {
    let g = read_digraph(path)?;
    let sep = characterize::sep_is_n_minus_1(&g);
    let ld = characterize::ld_is_n_minus_1(&g);
    let reason_json = |r: &characterize::ExtremalReason| match r {
        characterize::ExtremalReason::OrderThree => json!({"kind": "order-three"}),
        characterize::ExtremalReason::DirectedStar { centre } => {
            json!({"kind": "directed-star", "centre": centre})
        }
        characterize::ExtremalReason::S1CS2Partition { s1, c, s2 } => json!({
            "kind": "s1-c-s2-partition",
            "s1": s1.to_vec(), "c": c.to_vec(), "s2": s2.to_vec(),
        }),
        characterize::ExtremalReason::AllUniversalOrSink { universal, sinks } => json!({
            "kind": "all-universal-or-sink",
            "universal": universal.to_vec(), "sinks": sinks.to_vec(),
        }),
        characterize::ExtremalReason::Counterexample { vertex } => {
            json!({"kind": "counterexample", "vertex": vertex})
        }
        characterize::ExtremalReason::NotExtremal => json!({"kind": "not-extremal"}),
    };
    let ld_json = match &ld {
        Ok(v) => json!({"holds": v.holds, "reason": reason_json(&v.reason)}),
        Err(e) => json!({"error": e.to_string()}),
    };
    if as_json {
        out!(
            "{}",
            json!({
                "sep_is_n_minus_1": {"holds": sep.holds, "reason": reason_json(&sep.reason)},
                "ld_is_n_minus_1": ld_json,
            })
        );
    } else {
        out!("SEP = n-1: {} ({:?})", sep.holds, sep.reason);
        match ld {
            Ok(v) => out!("LD  = n-1: {} ({:?})", v.holds, v.reason),
            Err(e) => out!("LD  = n-1: not applicable ({e})"),
        }
    }
    Ok(0)
}

fn cmd_bench(
    max_n: usize,
    samples: usize,
    seed: u64,
    limit: usize,
    csv: Option<&Path>,
    as_json: bool,
) -> Result<u8, AppError> {
    let config = bench::BenchConfig {
        max_n,
        samples,
        seed,
        limit,
    };
    let rows = bench::run(&config);
    if as_json {
        out!("{}", bench::to_json(&rows));
    } else {
        out_raw!("{}", bench::to_text(&rows));
    }
    if let Some(path) = csv {
        std::fs::write(path, bench::to_csv(&rows))
            .map_err(|e| AppError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, AppError> {
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(file, cli.json, cli.dot),
        Command::Solve {
            file,
            exact,
            construct: _,
            objective,
            params,
        } => cmd_solve(
            file,
            *exact,
            *objective,
            params,
            cli.limit_n,
            cli.json,
            cli.trace,
        ),
        Command::Generate { spec, out } => {
            cmd_generate(spec, out.as_deref(), cli.seed, cli.dot)
        }
        Command::Verify { file, set, claim } => cmd_verify(file, set, *claim, cli.json),
        Command::Characterize { file } => cmd_characterize(file, cli.json),
        Command::Bench {
            max_n,
            samples,
            csv,
        } => cmd_bench(*max_n, *samples, cli.seed, cli.limit_n, csv.as_deref(), cli.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if as_json {
                eprintln!("{}", json!({"error": e.message}));
            } else {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
