//! Deletion-contraction with an isomorphism-aware memo.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::{CsfResult, Engine, EngineConfig};
use crate::graph::{canonical_key, CanonicalKey, EdgeId, WeightedGraph};
use crate::symfunc::{Basis, SymFunc};

/// Which edge the recursion splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pivot {
    /// Smallest `(min id, max id, occurrence)`.
    #[default]
    First,
    Last,
}

/// `X(G) = X(G\e) - X(G/e)`, bottoming out at `p_λ` for edgeless graphs and
/// at zero for graphs with a loop. The memo is insert-once and shared by all
/// callers of the same engine.
#[derive(Debug, Default)]
pub struct DelconEngine {
    config: EngineConfig,
    pivot: Pivot,
    cache: RwLock<HashMap<CanonicalKey, SymFunc>>,
}

impl DelconEngine {
    pub fn new(config: EngineConfig) -> Self {
        DelconEngine {
            config,
            pivot: Pivot::First,
            cache: RwLock::default(),
        }
    }

    pub fn with_pivot(config: EngineConfig, pivot: Pivot) -> Self {
        DelconEngine {
            pivot,
            ..DelconEngine::new(config)
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.read().expect("memo poisoned").len()
    }

    pub fn compute(&self, g: &WeightedGraph) -> CsfResult {
        CsfResult::new(g, self.value(g), Engine::Delcon, &self.config)
    }

    fn value(&self, g: &WeightedGraph) -> SymFunc {
        let d = g.total_weight();
        if g.has_loop() {
            return SymFunc::zero(Basis::P, d);
        }
        if g.num_edges() == 0 {
            return SymFunc::basis_element(Basis::P, g.weight_partition());
        }
        let key = canonical_key(g, self.config.memo_bound);
        if let Some(k) = &key {
            if let Some(hit) = self.cache.read().expect("memo poisoned").get(k) {
                return hit.clone();
            }
        }
        let e = match self.pivot {
            Pivot::First => EdgeId(0),
            Pivot::Last => EdgeId(g.num_edges() - 1),
        };
        let deleted = self.value(&g.delete_edge(e).expect("pivot exists"));
        let contracted = self.value(&g.contract_edge(e).expect("pivot exists").graph);
        let value = deleted.sub(&contracted).expect("minors share degree and basis");
        if let Some(k) = key {
            self.cache
                .write()
                .expect("memo poisoned")
                .entry(k)
                .or_insert_with(|| value.clone());
        }
        value
    }
}

static SHARED: OnceLock<DelconEngine> = OnceLock::new();

/// The process-wide engine configured from the environment.
pub(crate) fn shared() -> &'static DelconEngine {
    SHARED.get_or_init(|| DelconEngine::new(EngineConfig::from_env()))
}

/// Deletion-contraction through the process-wide memo.
pub fn csf_delcon(g: &WeightedGraph) -> CsfResult {
    shared().compute(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::csf_stable;
    use crate::graph::families;

    #[test]
    fn pivot_choice_and_memo_do_not_matter() {
        let graphs = [
            families::path(&[1, 2, 1, 3, 2]),
            families::cycle(&[1, 2, 2, 1]),
            WeightedGraph::with_weights(&[1, 1, 2], &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap(),
            families::complete(&[1, 1, 1, 1, 1]),
        ];
        let no_memo = EngineConfig {
            memo_bound: 0,
            ..EngineConfig::default()
        };
        for g in &graphs {
            let first = DelconEngine::new(EngineConfig::default()).compute(g).value;
            let last = DelconEngine::with_pivot(EngineConfig::default(), Pivot::Last).compute(g).value;
            let uncached = DelconEngine::new(no_memo).compute(g).value;
            assert_eq!(first, last);
            assert_eq!(first, uncached);
            assert_eq!(first, csf_stable(g).value);
        }
    }

    #[test]
    fn memo_fills_and_is_reused() {
        let engine = DelconEngine::new(EngineConfig::default());
        let g = families::complete(&[1; 5]);
        let a = engine.compute(&g).value;
        let filled = engine.cached_entries();
        assert!(filled > 0);
        let b = engine.compute(&g).value;
        assert_eq!(a, b);
        assert_eq!(engine.cached_entries(), filled);
        let off = DelconEngine::new(EngineConfig {
            memo_bound: 0,
            ..EngineConfig::default()
        });
        off.compute(&g);
        assert_eq!(off.cached_entries(), 0);
    }
}
