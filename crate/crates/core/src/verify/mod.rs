//! Mechanical checks of the identities and theorems, each producing a report
//! that carries a replayable witness when it fails.

mod sweep;
mod theorems;
mod trees;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::engine::{csf_delcon, csf_stable, csf_subsets, EngineConfig};
use crate::error::{CsfError, Result};
use crate::graph::{canonical_key, GraphFile, WeightedGraph};
use crate::symfunc::SymFunc;

pub use sweep::{default_corpus, run_check, summarize, CheckOptions};
pub use theorems::{
    check_e_positivity, sink_sum, sink_sum_materialized, verify_all_cycles, verify_closed_forms,
    verify_cycle_relation, verify_engines, verify_fig1_pair, verify_flip, verify_hook_coefficient,
    verify_involution, verify_p_positivity, verify_sink_theorem, verify_sink_theorem_all,
    verify_stanley_sinks, E_TOP_NOTE,
};
pub use trees::{search_equal_trees, TreeCollision, TreeSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Engines,
    Involution,
    PPositivity,
    Cycles,
    Sinks,
    Stanley,
    Hook,
    EPositivity,
    Fig1,
    Flip,
    ClosedForms,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Engines,
        Check::Involution,
        Check::PPositivity,
        Check::Cycles,
        Check::Sinks,
        Check::Stanley,
        Check::Hook,
        Check::EPositivity,
        Check::Fig1,
        Check::Flip,
        Check::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Engines => "engines",
            Check::Involution => "involution",
            Check::PPositivity => "p-positivity",
            Check::Cycles => "cycles",
            Check::Sinks => "sinks",
            Check::Stanley => "stanley",
            Check::Hook => "hook",
            Check::EPositivity => "e-positivity",
            Check::Fig1 => "fig1",
            Check::Flip => "flip",
            Check::ClosedForms => "closed-forms",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CsfError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CsfError::Parse(format!("unknown check {s:?}")))
    }
}

/// Outcome of one check on one instance. A failing report always has a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check: Check,
    pub instance: Value,
    pub pass: bool,
    pub witness: Option<Value>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(check: Check, instance: Value) -> Self {
        VerificationReport {
            check,
            instance,
            pass: true,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn failed(check: Check, instance: Value, witness: Value) -> Self {
        VerificationReport {
            check,
            instance,
            pass: false,
            witness: Some(witness),
            notes: Vec::new(),
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn compare(check: Check, instance: Value, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            VerificationReport::passed(check, instance)
        } else {
            VerificationReport::failed(check, instance, witness())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("check".into(), json!(self.check.name()));
        out.insert("pass".into(), json!(self.pass));
        out.insert("instance".into(), self.instance.clone());
        if let Some(w) = &self.witness {
            out.insert("witness".into(), w.clone());
        }
        if !self.notes.is_empty() {
            out.insert("notes".into(), json!(self.notes));
        }
        Value::Object(out)
    }
}

/// Graph file plus fingerprint and any extra parameters.
pub(crate) fn describe(g: &WeightedGraph, extra: Value) -> Value {
    let mut out = Map::new();
    out.insert(
        "graph".into(),
        serde_json::to_value(GraphFile::from_graph(g, None)).expect("graph files serialize"),
    );
    out.insert(
        "fingerprint".into(),
        canonical_key(g, usize::MAX).map_or(Value::Null, |k| json!(k.to_hex())),
    );
    if let Value::Object(extra) = extra {
        out.extend(extra);
    }
    Value::Object(out)
}

/// `X` by deletion-contraction, confirmed against an independent engine.
#[allow(clippy::result_large_err)]
pub(crate) fn crosschecked(check: Check, g: &WeightedGraph) -> std::result::Result<SymFunc, VerificationReport> {
    let delcon = csf_delcon(g).value;
    let config = EngineConfig::default();
    let (name, other) = match csf_subsets(g, &config) {
        Ok(r) => ("subsets", r.value),
        Err(_) => ("stable", csf_stable(g).value),
    };
    if delcon == other {
        Ok(delcon)
    } else {
        Err(VerificationReport::failed(
            check,
            describe(g, json!({})),
            json!({"reason": "engine disagreement", "delcon": delcon.to_json(), name: other.to_json()}),
        ))
    }
}

/// `(-1)^{d-n}`.
pub(crate) fn excess_sign(g: &WeightedGraph) -> i64 {
    if (g.total_weight() - g.n()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
