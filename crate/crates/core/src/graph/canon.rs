//! Isomorphism-invariant keys for small weighted multigraphs.
//!
//! Vertices are first split into classes by colour refinement seeded with
//! (weight, loop count). The key is the lexicographically smallest
//! lower-triangular multiplicity encoding over all orderings that list the
//! classes in colour order. Candidates that are twins of an already tried
//! candidate are skipped, since swapping twins is an automorphism.

use std::cmp::Ordering;
use std::fmt;

use super::WeightedGraph;

pub const DEFAULT_MEMO_BOUND: usize = 10;

/// The vertex bound for [`canonical_key`], from `CSF_MEMO_BOUND` when set.
pub fn memo_bound_from_env() -> usize {
    std::env::var("CSF_MEMO_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MEMO_BOUND)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// `None` when the graph has more than `bound` vertices.
pub fn canonical_key(g: &WeightedGraph, bound: usize) -> Option<CanonicalKey> {
    let n = g.n();
    if n > bound {
        return None;
    }
    let mut mult = vec![vec![0u32; n]; n];
    let mut loops = vec![0u32; n];
    for (u, v) in g.index_edges() {
        if u == v {
            loops[u] += 1;
        } else {
            mult[u][v] += 1;
            mult[v][u] += 1;
        }
    }
    let colour = refine(g.weights(), &loops, &mult);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    let slot_colour: Vec<usize> = order.iter().map(|&v| colour[v]).collect();

    let mut header: Vec<u32> = vec![n as u32];
    for &v in &order {
        header.push(g.weights()[v]);
        header.push(loops[v]);
    }

    let mut search = Search {
        mult: &mult,
        loops: &loops,
        colour: &colour,
        slot_colour: &slot_colour,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::with_capacity(n * n / 2),
        best: None,
    };
    search.run(Ordering::Equal);

    let mut words = header;
    words.extend(search.best.unwrap_or_default());
    Some(CanonicalKey(
        words.iter().flat_map(|w| w.to_le_bytes()).collect(),
    ))
}

/// Stable colour refinement; colours are ranks of sorted signatures, so they
/// depend only on the isomorphism class.
fn refine(weights: &[u32], loops: &[u32], mult: &[Vec<u32>]) -> Vec<usize> {
    let n = weights.len();
    let seed: Vec<(u32, u32)> = (0..n).map(|v| (weights[v], loops[v])).collect();
    let mut colour = ranks(&seed);
    loop {
        let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(usize, u32)> = (0..n)
                    .filter(|&u| mult[v][u] > 0)
                    .map(|u| (colour[u], mult[v][u]))
                    .collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let next = ranks(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn ranks<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = items.to_vec();
    distinct.sort();
    distinct.dedup();
    items
        .iter()
        .map(|x| distinct.binary_search(x).unwrap())
        .collect()
}

struct Search<'a> {
    mult: &'a [Vec<u32>],
    loops: &'a [u32],
    colour: &'a [usize],
    slot_colour: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn twins(&self, a: usize, b: usize) -> bool {
        self.loops[a] == self.loops[b]
            && (0..self.mult.len())
                .all(|x| x == a || x == b || self.mult[a][x] == self.mult[b][x])
    }

    /// `state` compares the current prefix with the same prefix of the best encoding.
    fn run(&mut self, state: Ordering) {
        let p = self.placed.len();
        if p == self.slot_colour.len() {
            if self.best.is_none() || state == Ordering::Less {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let want = self.slot_colour[p];
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.mult.len() {
            if self.used[v] || self.colour[v] != want {
                continue;
            }
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);

            let start = self.current.len();
            let mut next = state;
            for &u in &self.placed {
                let word = self.mult[v][u];
                if next == Ordering::Equal {
                    if let Some(best) = &self.best {
                        next = word.cmp(&best[self.current.len()]);
                    }
                }
                self.current.push(word);
                if next == Ordering::Greater {
                    break;
                }
            }
            if next != Ordering::Greater {
                self.placed.push(v);
                self.used[v] = true;
                self.run(next);
                self.used[v] = false;
                self.placed.pop();
            }
            self.current.truncate(start);
        }
    }
}
