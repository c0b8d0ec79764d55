//! Corpus drivers for the verifiers.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::theorems::{
    check_e_positivity, verify_all_cycles, verify_closed_forms, verify_engines, verify_fig1_pair,
    verify_flip_all, verify_hook_coefficient, verify_involution, verify_p_positivity,
    verify_sink_theorem_all, verify_stanley_sinks,
};
use super::{Check, VerificationReport};
use crate::corpus::CorpusSpec;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest vertex count (for closed forms: largest total size).
    pub n: usize,
    pub max_weight: u32,
    /// Switches to a random corpus of `count` graphs.
    pub seed: Option<u64>,
    pub count: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            n: 4,
            max_weight: 2,
            seed: None,
            count: None,
        }
    }
}

/// The corpus a check runs over; `None` for checks with a fixed instance set.
pub fn default_corpus(check: Check, opts: &CheckOptions) -> Option<CorpusSpec> {
    let unit_only = matches!(check, Check::Stanley | Check::Hook);
    let max_weight = if unit_only { 1 } else { opts.max_weight };
    let mut spec = CorpusSpec::exhaustive(opts.n, max_weight);
    spec = match check {
        Check::Fig1 | Check::ClosedForms => return None,
        Check::Stanley | Check::Hook | Check::EPositivity => spec,
        _ => spec.with_multigraphs(),
    };
    if let Some(seed) = opts.seed {
        spec = spec.random(seed, opts.count.unwrap_or(100));
    } else if let Some(cap) = opts.count {
        spec = spec.capped(cap);
    }
    Some(spec)
}

/// Runs one check over its corpus, reports in corpus order.
pub fn run_check(check: Check, opts: &CheckOptions) -> Result<Vec<VerificationReport>> {
    match check {
        Check::Fig1 => return Ok(vec![verify_fig1_pair()?]),
        Check::ClosedForms => return verify_closed_forms(opts.n),
        _ => {}
    }
    let spec = default_corpus(check, opts).expect("corpus-driven check");
    let mut out = Vec::new();
    for g in spec.instances() {
        let report = match check {
            Check::Engines => verify_engines(&g)?,
            Check::Involution => verify_involution(&g)?,
            Check::PPositivity => verify_p_positivity(&g)?,
            Check::Cycles => verify_all_cycles(&g)?,
            Check::Sinks => verify_sink_theorem_all(&g)?,
            Check::Stanley => verify_stanley_sinks(&g)?,
            Check::Hook => {
                if !g.is_connected() {
                    continue;
                }
                verify_hook_coefficient(&g)?
            }
            Check::EPositivity => check_e_positivity(&g)?,
            Check::Flip => verify_flip_all(&g, None)?,
            Check::Fig1 | Check::ClosedForms => unreachable!(),
        };
        out.push(report);
    }
    Ok(out)
}

/// `{"summary": {check: {"pass": p, "fail": f}}, "total": t, "failed": f}`.
pub fn summarize(reports: &[VerificationReport]) -> Value {
    let mut per: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for r in reports {
        let entry = per.entry(r.check.name()).or_default();
        if r.pass {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let summary: serde_json::Map<String, Value> = per
        .into_iter()
        .map(|(k, (p, f))| (k.to_string(), json!({"pass": p, "fail": f})))
        .collect();
    json!({"summary": summary, "total": reports.len(), "failed": failed})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let opts = CheckOptions {
            n: 3,
            max_weight: 2,
            ..CheckOptions::default()
        };
        for check in Check::ALL {
            let reports = run_check(check, &opts).unwrap();
            assert!(!reports.is_empty(), "{check}");
            assert!(reports.iter().all(|r| r.pass), "{check}");
        }
    }

    #[test]
    fn summary_counts() {
        let opts = CheckOptions {
            n: 2,
            ..CheckOptions::default()
        };
        let reports = run_check(Check::Engines, &opts).unwrap();
        let s = summarize(&reports);
        assert_eq!(s["failed"], 0);
        assert_eq!(s["summary"]["engines"]["pass"], reports.len());
    }
}
