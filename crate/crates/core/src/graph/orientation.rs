//! Orientations of the edge multiset, acyclicity, sinks and sink maps.

use std::collections::BTreeMap;

use super::{Contraction, EdgeId, VertexId, WeightedGraph};
use crate::error::{CsfError, Result};

/// One `(tail, head)` pair per edge occurrence, parallel to [`WeightedGraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    arcs: Vec<(VertexId, VertexId)>,
}

impl Orientation {
    /// Checks that `arcs[i]` orients `g.edges()[i]`.
    pub fn new(g: &WeightedGraph, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        if arcs.len() != g.num_edges() {
            return Err(CsfError::InvalidOrientation(format!(
                "{} arcs for {} edges",
                arcs.len(),
                g.num_edges()
            )));
        }
        for (i, (&(t, h), &(u, v))) in arcs.iter().zip(g.edges()).enumerate() {
            if (t.min(h), t.max(h)) != (u, v) {
                return Err(CsfError::InvalidOrientation(format!(
                    "arc {t}->{h} does not orient edge #{i} ({u},{v})"
                )));
            }
        }
        Ok(Orientation { arcs })
    }

    /// Bit `i` of `mask` set means edge `i` points from its larger to its smaller id.
    pub fn from_mask(g: &WeightedGraph, mask: u64) -> Self {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        Orientation { arcs }
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn arc(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.arcs
            .get(e.0)
            .copied()
            .ok_or_else(|| CsfError::EdgeNotFound(e.to_string()))
    }

    /// Swaps head and tail of one occurrence. Flipping a loop changes nothing.
    pub fn flip(&self, e: EdgeId) -> Result<Orientation> {
        let (t, h) = self.arc(e)?;
        let mut arcs = self.arcs.clone();
        arcs[e.0] = (h, t);
        Ok(Orientation { arcs })
    }

    /// No directed cycle; a loop or an opposite parallel pair is a cycle.
    pub fn is_acyclic(&self, g: &WeightedGraph) -> bool {
        if self.arcs.iter().any(|&(t, h)| t == h) {
            return false;
        }
        let n = g.n();
        let mut indegree = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(t, h) in &self.arcs {
            let (ti, hi) = (g.index_of(t).unwrap(), g.index_of(h).unwrap());
            out[ti].push(hi);
            indegree[hi] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &h in &out[v] {
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    stack.push(h);
                }
            }
        }
        seen == n
    }

    /// Vertices that are never a tail, in id order.
    pub fn sinks(&self, g: &WeightedGraph) -> Vec<VertexId> {
        g.ids()
            .iter()
            .copied()
            .filter(|v| !self.arcs.iter().any(|&(t, _)| t == *v))
            .collect()
    }

    /// Vertices that are never a head, in id order.
    pub fn sources(&self, g: &WeightedGraph) -> Vec<VertexId> {
        g.ids()
            .iter()
            .copied()
            .filter(|v| !self.arcs.iter().any(|&(_, h)| h == *v))
            .collect()
    }
}

/// Every acyclic orientation, in increasing mask order. Graphs with loops have none.
pub fn acyclic_orientations(g: &WeightedGraph) -> Result<Vec<Orientation>> {
    Ok(acyclic_masks(g)?
        .into_iter()
        .map(|m| Orientation::from_mask(g, m))
        .collect())
}

/// Masks (see [`Orientation::from_mask`]) of all acyclic orientations.
pub(crate) fn acyclic_masks(g: &WeightedGraph) -> Result<Vec<u64>> {
    const LIMIT: usize = 30;
    let m = g.num_edges();
    if m > LIMIT {
        return Err(CsfError::TooManyEdges {
            edges: m,
            limit: LIMIT,
        });
    }
    if g.has_loop() {
        return Ok(Vec::new());
    }
    if g.n() > 64 {
        return Ok((0..1u64 << m)
            .filter(|&mask| Orientation::from_mask(g, mask).is_acyclic(g))
            .collect());
    }
    let edges = g.index_edges();
    let n = g.n();
    let mut out = Vec::new();
    let mut succ = vec![0u64; n];
    for mask in 0..(1u64 << m) {
        succ.iter_mut().for_each(|s| *s = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                succ[v] |= 1 << u;
            } else {
                succ[u] |= 1 << v;
            }
        }
        if bitmask_acyclic(&succ) {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Repeatedly strips vertices with no remaining successor.
fn bitmask_acyclic(succ: &[u64]) -> bool {
    let n = succ.len();
    let mut alive: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    loop {
        let mut removed = 0u64;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if succ[v] & alive == 0 {
                removed |= 1 << v;
            }
        }
        if removed == 0 {
            return alive == 0;
        }
        alive &= !removed;
    }
}

/// `(G/e, γ/e)`: surviving arcs keep their direction with both endpoints of
/// `e` renamed to the merged vertex, so arcs between them become loops `v* -> v*`.
pub fn contract_orientation(
    g: &WeightedGraph,
    gamma: &Orientation,
    e: EdgeId,
) -> Result<(Contraction, Orientation)> {
    if gamma.arcs.len() != g.num_edges() {
        return Err(CsfError::InvalidOrientation("orientation/graph mismatch".into()));
    }
    let (a, b) = g.edge(e)?;
    let contraction = g.contract_edge(e)?;
    let rename = |x: VertexId| match contraction.merged {
        Some(fresh) if x == a || x == b => fresh,
        _ => x,
    };
    let mut arcs = vec![(0, 0); contraction.graph.num_edges()];
    for (i, &(t, h)) in gamma.arcs.iter().enumerate() {
        if let Some(EdgeId(pos)) = contraction.edge_map[i] {
            arcs[pos] = (rename(t), rename(h));
        }
    }
    let oriented = Orientation::new(&contraction.graph, arcs)?;
    Ok((contraction, oriented))
}

/// A choice of nonempty `S(v) ⊆ {1..w(v)}` for every sink `v` of an orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkMap {
    sets: BTreeMap<VertexId, Vec<u32>>,
}

impl SinkMap {
    pub fn new(
        g: &WeightedGraph,
        gamma: &Orientation,
        sets: BTreeMap<VertexId, Vec<u32>>,
    ) -> Result<Self> {
        let sinks = gamma.sinks(g);
        if sets.keys().copied().collect::<Vec<_>>() != sinks {
            return Err(CsfError::InvalidOrientation(
                "sink map domain must be the sink set".into(),
            ));
        }
        for (&v, s) in &sets {
            let w = g.weight(v).unwrap();
            let strictly_increasing = s.windows(2).all(|p| p[0] < p[1]);
            if s.is_empty() || !strictly_increasing || s.iter().any(|&x| x == 0 || x > w) {
                return Err(CsfError::InvalidOrientation(format!(
                    "bad subset {s:?} at sink {v} of weight {w}"
                )));
            }
        }
        Ok(SinkMap { sets })
    }

    pub fn sets(&self) -> &BTreeMap<VertexId, Vec<u32>> {
        &self.sets
    }

    /// Sink weight: total size of the chosen subsets.
    pub fn swt(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }

    /// Every sink map of `gamma`, materialized.
    pub fn enumerate(g: &WeightedGraph, gamma: &Orientation) -> Vec<SinkMap> {
        let mut out = vec![BTreeMap::new()];
        for v in gamma.sinks(g) {
            let w = g.weight(v).unwrap();
            let subsets: Vec<Vec<u32>> = (1u32..1 << w)
                .map(|bits| (1..=w).filter(|&i| bits >> (i - 1) & 1 == 1).collect())
                .collect();
            out = out
                .into_iter()
                .flat_map(|partial| {
                    subsets.iter().map(move |s| {
                        let mut next = partial.clone();
                        next.insert(v, s.clone());
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(|sets| SinkMap { sets }).collect()
    }
}
