//! Three independent evaluators of the weighted chromatic symmetric function.

mod delcon;
mod specialize;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::graph::{
    canonical_key, memo_bound_from_env, stable_partition_counts, CanonicalKey, EdgeId,
    WeightedGraph, DEFAULT_MEMO_BOUND,
};
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};

pub use delcon::{csf_delcon, DelconEngine, Pivot};
pub use specialize::{chromatic_polynomial, chromatic_value, weak_csf_truncated, ChromaticPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Stable,
    Subsets,
    Delcon,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Stable, Engine::Subsets, Engine::Delcon];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Stable => "stable",
            Engine::Subsets => "subsets",
            Engine::Delcon => "delcon",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = CsfError;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| CsfError::Parse(format!("unknown engine {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest vertex count for which the deletion-contraction memo is used.
    pub memo_bound: usize,
    /// Largest edge count the subset expansion accepts.
    pub subset_edge_limit: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            memo_bound: DEFAULT_MEMO_BOUND,
            subset_edge_limit: 24,
        }
    }
}

impl EngineConfig {
    /// Defaults, with the memo bound taken from `CSF_MEMO_BOUND` when set.
    pub fn from_env() -> Self {
        EngineConfig {
            memo_bound: memo_bound_from_env(),
            ..EngineConfig::default()
        }
    }
}

/// A computed CSF, always stored in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsfResult {
    pub value: SymFunc,
    pub engine: Engine,
    pub fingerprint: Option<CanonicalKey>,
}

impl CsfResult {
    fn new(g: &WeightedGraph, value: SymFunc, engine: Engine, config: &EngineConfig) -> Self {
        debug_assert_eq!(value.basis(), Basis::P);
        debug_assert_eq!(value.degree(), g.total_weight());
        CsfResult {
            value,
            engine,
            fingerprint: canonical_key(g, config.memo_bound),
        }
    }
}

/// `Σ_λ |St_λ| · ∏ r_i(λ)! · m_λ`, converted to the power-sum basis.
pub fn csf_stable(g: &WeightedGraph) -> CsfResult {
    csf_stable_with(g, &EngineConfig::default())
}

fn csf_stable_with(g: &WeightedGraph, config: &EngineConfig) -> CsfResult {
    let mut m = SymFunc::zero(Basis::M, g.total_weight());
    for (lambda, count) in stable_partition_counts(g) {
        let c = Rational::from_integer((lambda.multiplicity_factorial() * count).into());
        m.add_term(lambda, &c);
    }
    CsfResult::new(g, m.convert(Basis::P), Engine::Stable, config)
}

/// `Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}` over all edge sub-multisets.
pub fn csf_subsets(g: &WeightedGraph, config: &EngineConfig) -> Result<CsfResult> {
    let m = g.num_edges();
    if m > config.subset_edge_limit || m >= 64 {
        return Err(CsfError::TooManyEdges {
            edges: m,
            limit: config.subset_edge_limit,
        });
    }
    let edges = g.index_edges();
    let mut signed: BTreeMap<Partition, i64> = BTreeMap::new();
    for mask in 0..(1u64 << m) {
        let mut uf = crate::graph::UnionFind::new(g.n());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(u, v);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *signed.entry(uf.component_partition(g.weights())).or_insert(0) += sign;
    }
    let value = SymFunc::from_int_terms(Basis::P, g.total_weight(), signed)?;
    Ok(CsfResult::new(g, value, Engine::Subsets, config))
}

/// Dispatches to one engine. Deletion-contraction uses a fresh memo for this call.
pub fn csf(g: &WeightedGraph, engine: Engine, config: &EngineConfig) -> Result<CsfResult> {
    match engine {
        Engine::Stable => Ok(csf_stable_with(g, config)),
        Engine::Subsets => csf_subsets(g, config),
        Engine::Delcon => Ok(DelconEngine::new(*config).compute(g)),
    }
}

/// Checks `X(G/e) = X(G\e) - X(G)`. `X(G)` comes from the stable-partition
/// engine and the two minors from deletion-contraction.
pub fn csf_uncontract_check(g: &WeightedGraph, e: EdgeId) -> Result<bool> {
    let engine = delcon::shared();
    let contracted = engine.compute(&g.contract_edge(e)?.graph).value;
    let deleted = engine.compute(&g.delete_edge(e)?).value;
    let whole = csf_stable(g).value;
    Ok(contracted == deleted.sub(&whole)?)
}
