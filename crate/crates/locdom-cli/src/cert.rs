//! JSON shapes emitted by the CLI. Struct field order fixes the key order,
//! so serializations are byte-stable across runs.

use locdom::bounds::{ChosenConstruction, GeneralMethodTrace, TwinFreeTrace};
use locdom::certify::{Certificate, Witness};
use locdom::tournaments::{TraceAction, TraceEntry};
use locdom::{acyclic::LevelDecomposition, Digraph, VertexSet};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphJson {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_digraph(g: &Digraph) -> GraphJson {
        GraphJson {
            n: g.n(),
            arcs: g.arcs(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum WitnessJson {
    Undominated(usize),
    UnlocatedPair(usize, usize),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundJson {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateJson {
    pub graph: GraphJson,
    pub claim: String,
    pub set: Vec<usize>,
    pub size: usize,
    pub valid: bool,
    pub witness: Option<WitnessJson>,
    pub bound: Option<BoundJson>,
    pub trace: Option<Value>,
}

impl CertificateJson {
    pub fn new(
        g: &Digraph,
        cert: &Certificate,
        bound: Option<BoundJson>,
        trace: Option<Value>,
    ) -> CertificateJson {
        CertificateJson {
            graph: GraphJson::from_digraph(g),
            claim: cert.claim.as_str().to_string(),
            set: cert.set.to_vec(),
            size: cert.set.len(),
            valid: cert.valid,
            witness: cert.witness.map(|w| match w {
                Witness::Undominated(v) => WitnessJson::Undominated(v),
                Witness::UnlocatedPair(u, v) => WitnessJson::UnlocatedPair(u, v),
            }),
            bound,
            trace,
        }
    }
}

fn set_json(s: &VertexSet) -> Value {
    Value::from(s.to_vec())
}

pub fn general_method_trace_json(t: &GeneralMethodTrace) -> Value {
    json!({
        "method": "dominating-set-growth",
        "x": format!("{}", t.x),
        "initial_s": set_json(&t.initial_s),
        "final_s": set_json(&t.final_s),
        "n1": t.n1,
        "n2": t.n2,
        "d1": set_json(&t.d1),
        "d1_prime": set_json(&t.d1_prime),
        "d2": set_json(&t.d2),
        "chosen": match t.chosen {
            ChosenConstruction::D1 => "d1",
            ChosenConstruction::D1Prime => "d1_prime",
            ChosenConstruction::D2 => "d2",
        },
        "bound": { "name": t.bound.name.clone(), "value": t.bound.value() },
    })
}

pub fn twin_free_trace_json(t: &TwinFreeTrace) -> Value {
    match t {
        TwinFreeTrace::SourceFree(inner) => json!({
            "method": "source-free",
            "inner": general_method_trace_json(inner),
        }),
        TwinFreeTrace::Patched {
            source,
            x_set,
            inner,
            ..
        } => json!({
            "method": "source-patch",
            "source": source,
            "x_set": set_json(x_set),
            "inner": general_method_trace_json(inner),
        }),
        TwinFreeTrace::ExactFallback { .. } => json!({
            "method": "exact-fallback",
        }),
    }
}

pub fn level_decomposition_json(d: &LevelDecomposition) -> Value {
    json!({
        "method": "level-decomposition",
        "levels": d.levels.iter().map(set_json).collect::<Vec<_>>(),
    })
}

pub fn tournament_trace_json(log: &[TraceEntry]) -> Value {
    let steps: Vec<Value> = log
        .iter()
        .map(|e| {
            let action = match e.action {
                TraceAction::TransitiveBase => json!({"kind": "transitive-base"}),
                TraceAction::VertexPivot(x) => json!({"kind": "vertex", "pivot": [x]}),
                TraceAction::ArcPivot(x, y) => json!({"kind": "arc", "pivot": [x, y]}),
                TraceAction::TrianglePivot(x, y, z) => {
                    json!({"kind": "triangle", "pivot": [x, y, z]})
                }
                TraceAction::DominationPatch(v) => json!({"kind": "domination-patch", "added": v}),
            };
            json!({
                "depth": e.depth,
                "objective": e.objective,
                "order": e.order,
                "action": action,
            })
        })
        .collect();
    json!({ "method": "tournament-recursion", "steps": steps })
}
