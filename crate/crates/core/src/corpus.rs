//! Deterministic graph corpora for sweeps.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{canonical_key, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusMode {
    /// All labelled simple graphs on each vertex count, with every weight assignment.
    Exhaustive,
    /// Random graphs from a seeded generator, deduplicated up to isomorphism.
    Random { seed: u64, count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_weight: u32,
    /// Without this flag every graph with an edge also appears with its first
    /// edge doubled and with a loop at its first vertex.
    pub simple_only: bool,
    pub mode: CorpusMode,
    pub cap: Option<usize>,
}

impl CorpusSpec {
    pub fn exhaustive(max_vertices: usize, max_weight: u32) -> Self {
        CorpusSpec {
            min_vertices: 1,
            max_vertices,
            max_weight,
            simple_only: true,
            mode: CorpusMode::Exhaustive,
            cap: None,
        }
    }

    pub fn with_multigraphs(mut self) -> Self {
        self.simple_only = false;
        self
    }

    pub fn vertices(mut self, min: usize, max: usize) -> Self {
        self.min_vertices = min;
        self.max_vertices = max;
        self
    }

    pub fn random(mut self, seed: u64, count: usize) -> Self {
        self.mode = CorpusMode::Random { seed, count };
        self
    }

    pub fn capped(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    /// The instance stream; identical for identical specs.
    pub fn instances(&self) -> Vec<WeightedGraph> {
        let mut out = match self.mode {
            CorpusMode::Exhaustive => self.exhaustive_instances(),
            CorpusMode::Random { seed, count } => self.random_instances(seed, count),
        };
        if let Some(cap) = self.cap {
            out.truncate(cap);
        }
        out
    }

    fn exhaustive_instances(&self) -> Vec<WeightedGraph> {
        let mut out = Vec::new();
        for n in self.min_vertices..=self.max_vertices {
            let pairs = all_pairs(n);
            let weightings = weight_vectors(n, self.max_weight);
            for mask in 0..1u64 << pairs.len() {
                let edges: Vec<(usize, usize)> = (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                for w in &weightings {
                    let g = WeightedGraph::with_weights(w, &edges).expect("valid corpus graph");
                    if !self.simple_only {
                        out.extend(multigraph_variants(&g));
                    }
                    out.push(g);
                }
            }
        }
        out
    }

    fn random_instances(&self, seed: u64, count: usize) -> Vec<WeightedGraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let attempts = count.saturating_mul(50).max(100);
        for _ in 0..attempts {
            if out.len() >= count {
                break;
            }
            let n = rng.gen_range(self.min_vertices..=self.max_vertices);
            let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=self.max_weight)).collect();
            let mut edges: Vec<(usize, usize)> =
                all_pairs(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
            if !self.simple_only && !edges.is_empty() {
                match rng.gen_range(0..4) {
                    0 => edges.push(edges[0]),
                    1 => edges.push((0, 0)),
                    _ => {}
                }
            }
            let g = WeightedGraph::with_weights(&weights, &edges).expect("valid corpus graph");
            let key = canonical_key(&g, usize::MAX).expect("unbounded");
            if seen.insert(key) {
                out.push(g);
            }
        }
        out
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Every vector in `{1..max}^n`, first coordinate varying fastest.
pub fn weight_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=max).map(move |x| {
                    let mut next = w.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

/// The graph with its first edge doubled, and with a loop at its first vertex.
fn multigraph_variants(g: &WeightedGraph) -> Vec<WeightedGraph> {
    let Some(&(u, v)) = g.edges().first() else {
        return Vec::new();
    };
    let first = g.ids()[0];
    vec![g.add_edge(u, v).unwrap(), g.add_edge(first, first).unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sizes() {
        assert_eq!(CorpusSpec::exhaustive(5, 1).vertices(5, 5).instances().len(), 1024);
        let small = CorpusSpec::exhaustive(4, 3).instances();
        assert_eq!(small.len(), 3 + 2 * 9 + 8 * 27 + 64 * 81);
        let multi = CorpusSpec::exhaustive(2, 1).with_multigraphs().instances();
        // n=1: one graph; n=2: edgeless, edge, doubled edge, edge with loop
        assert_eq!(multi.len(), 5);
        assert!(multi.iter().any(|g| g.has_loop()));
        assert!(multi.iter().any(|g| !g.is_simple() && !g.has_loop()));
    }

    #[test]
    fn random_mode_is_deterministic_and_deduplicated() {
        let spec = CorpusSpec::exhaustive(6, 2).vertices(3, 6).random(7, 40);
        let a = spec.instances();
        assert_eq!(a, spec.instances());
        assert_eq!(a.len(), 40);
        let keys: HashSet<_> = a.iter().map(|g| canonical_key(g, 64).unwrap()).collect();
        assert_eq!(keys.len(), a.len());
        assert_ne!(a, spec.random(8, 40).instances());
    }
}
