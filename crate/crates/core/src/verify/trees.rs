//! Search for weighted trees with equal CSF.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::corpus::weight_vectors;
use crate::engine::csf_delcon;
use crate::graph::{canonical_key, families, GraphFile, WeightedGraph};
use crate::symfunc::SymFunc;

/// Above this many labelled weighted trees, the search samples instead.
const EXHAUSTIVE_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq)]
pub struct TreeCollision {
    pub a: WeightedGraph,
    pub b: WeightedGraph,
    /// Whether the trees become isomorphic once weights are forgotten.
    pub same_underlying_tree: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TreeSearch {
    pub labelled_trees: usize,
    pub classes: usize,
    pub sampled: bool,
    pub collisions: Vec<TreeCollision>,
}

impl TreeSearch {
    pub fn to_json(&self) -> Value {
        let collisions: Vec<Value> = self
            .collisions
            .iter()
            .map(|c| {
                json!({
                    "a": serde_json::to_value(GraphFile::from_graph(&c.a, None)).unwrap(),
                    "b": serde_json::to_value(GraphFile::from_graph(&c.b, None)).unwrap(),
                    "same_underlying_tree": c.same_underlying_tree,
                })
            })
            .collect();
        let cross = self.collisions.iter().filter(|c| !c.same_underlying_tree).count();
        json!({
            "labelled_trees": self.labelled_trees,
            "isomorphism_classes": self.classes,
            "sampled": self.sampled,
            "collisions": collisions,
            "non_isomorphic_underlying": cross,
        })
    }
}

/// 64-bit FNV-1a of the CSF's canonical serialization, used only for bucketing.
fn fingerprint(x: &SymFunc) -> u64 {
    x.to_json()
        .to_string()
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
        })
}

fn pruefer_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n.saturating_sub(2) {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn tree(sequence: &[usize], weights: &[u32]) -> WeightedGraph {
    if weights.len() < 2 {
        families::edgeless(weights)
    } else {
        families::tree_from_pruefer(sequence, weights)
    }
}

/// Every weighted tree on `n` vertices with weights in `1..=max_weight`
/// (sampled with `seed` when the labelled count is too large), grouped up to
/// isomorphism and bucketed by CSF; every reported pair is confirmed exactly.
pub fn search_equal_trees(n: usize, max_weight: u32, seed: u64) -> TreeSearch {
    let sequences = pruefer_sequences(n.max(1));
    let total = sequences.len().saturating_mul((max_weight as usize).saturating_pow(n as u32));
    let sampled = total > EXHAUSTIVE_LIMIT;

    let mut trees = Vec::new();
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..EXHAUSTIVE_LIMIT {
            let s = &sequences[rng.gen_range(0..sequences.len())];
            let w: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
            trees.push(tree(s, &w));
        }
    } else {
        let weightings = weight_vectors(n, max_weight);
        for s in &sequences {
            for w in &weightings {
                trees.push(tree(s, w));
            }
        }
    }
    let labelled_trees = trees.len();

    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for t in trees {
        if seen.insert(canonical_key(&t, usize::MAX).unwrap()) {
            classes.push(t);
        }
    }

    let mut buckets: BTreeMap<u64, Vec<(usize, SymFunc)>> = BTreeMap::new();
    for (i, t) in classes.iter().enumerate() {
        let x = csf_delcon(t).value;
        buckets.entry(fingerprint(&x)).or_default().push((i, x));
    }
    let mut collisions = Vec::new();
    for bucket in buckets.values() {
        for (i, (a, xa)) in bucket.iter().enumerate() {
            for (b, xb) in &bucket[i + 1..] {
                if xa == xb {
                    let (ta, tb) = (&classes[*a], &classes[*b]);
                    let same_underlying_tree = canonical_key(&ta.with_unit_weights(), usize::MAX)
                        == canonical_key(&tb.with_unit_weights(), usize::MAX);
                    collisions.push(TreeCollision {
                        a: ta.clone(),
                        b: tb.clone(),
                        same_underlying_tree,
                    });
                }
            }
        }
    }
    TreeSearch {
        labelled_trees,
        classes: classes.len(),
        sampled,
        collisions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertices_never_collide() {
        let r = search_equal_trees(2, 4, 0);
        assert!(r.collisions.is_empty());
        assert_eq!(r.classes, 10);
    }

    #[test]
    fn sequences_count() {
        assert_eq!(pruefer_sequences(5).len(), 125);
        assert_eq!(pruefer_sequences(2).len(), 1);
    }
}
