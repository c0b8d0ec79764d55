//! Vertex-weighted multigraphs.
//!
//! Vertex ids are opaque integers. Edges are kept as a sorted list of
//! normalized `(min, max)` pairs, so parallel copies sit next to each other
//! and an [`EdgeId`] (a position in that list) also fixes the occurrence.

mod canon;
mod cycles;
pub mod families;
mod io;
mod orientation;
mod partitions;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{CsfError, Result};
use crate::partition::Partition;

pub use canon::{canonical_key, memo_bound_from_env, CanonicalKey, DEFAULT_MEMO_BOUND};
pub use cycles::{is_cycle, simple_cycles};
pub use io::GraphFile;
pub(crate) use orientation::acyclic_masks;
pub use orientation::{acyclic_orientations, contract_orientation, Orientation, SinkMap};
pub use partitions::{
    connected_partition_types, connected_partitions, count_stable_partitions,
    stable_partition_counts, stable_partitions, ConnectedPartition,
};

pub type VertexId = u32;

/// Position of an edge occurrence in [`WeightedGraph::edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    ids: Vec<VertexId>,
    weights: Vec<u32>,
    edges: Vec<(VertexId, VertexId)>,
}

/// Result of contracting one edge.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: WeightedGraph,
    /// The fresh vertex; `None` when the contracted edge was a loop.
    pub merged: Option<VertexId>,
    /// Where each edge of the original graph went; `None` for the contracted edge.
    pub edge_map: Vec<Option<EdgeId>>,
}

fn normalize((u, v): (VertexId, VertexId)) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    /// Builds a graph from `(id, weight)` vertices and an edge multiset.
    pub fn new(
        vertices: impl IntoIterator<Item = (VertexId, u32)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Ok(Self::new_tracked(vertices, edges)?.0)
    }

    /// Like [`WeightedGraph::new`], also returning the sorted position of each input edge.
    pub(crate) fn new_tracked(
        vertices: impl IntoIterator<Item = (VertexId, u32)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<(Self, Vec<EdgeId>)> {
        let mut vs: Vec<(VertexId, u32)> = vertices.into_iter().collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(CsfError::InvalidGraph("duplicate vertex id".into()));
        }
        if let Some((id, _)) = vs.iter().find(|(_, w)| *w == 0) {
            return Err(CsfError::InvalidGraph(format!("vertex {id} has weight 0")));
        }
        let (ids, weights): (Vec<_>, Vec<_>) = vs.into_iter().unzip();
        let input: Vec<(VertexId, VertexId)> = edges.into_iter().map(normalize).collect();
        for &(u, v) in &input {
            for x in [u, v] {
                if ids.binary_search(&x).is_err() {
                    return Err(CsfError::InvalidGraph(format!(
                        "edge ({u},{v}) uses undeclared vertex {x}"
                    )));
                }
            }
        }
        let mut order: Vec<usize> = (0..input.len()).collect();
        order.sort_by_key(|&i| input[i]);
        let mut position = vec![EdgeId(0); input.len()];
        for (pos, &i) in order.iter().enumerate() {
            position[i] = EdgeId(pos);
        }
        let edges = order.iter().map(|&i| input[i]).collect();
        Ok((
            WeightedGraph {
                ids,
                weights,
                edges,
            },
            position,
        ))
    }

    /// Vertices `0..weights.len()` with the given weights.
    pub fn with_weights(weights: &[u32], edges: &[(usize, usize)]) -> Result<Self> {
        WeightedGraph::new(
            weights.iter().enumerate().map(|(i, &w)| (i as VertexId, w)),
            edges.iter().map(|&(u, v)| (u as VertexId, v as VertexId)),
        )
    }

    /// Vertices `0..n`, all of weight 1.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        WeightedGraph::with_weights(&vec![1; n], edges)
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.ids.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn index_of(&self, id: VertexId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn weight(&self, id: VertexId) -> Option<u32> {
        self.index_of(id).map(|i| self.weights[i])
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges
            .get(e.0)
            .copied()
            .ok_or_else(|| CsfError::EdgeNotFound(e.to_string()))
    }

    /// Every occurrence of the edge `{u, v}`.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let key = normalize((u, v));
        let start = self.edges.partition_point(|&x| x < key);
        (start..self.edges.len())
            .take_while(|&i| self.edges[i] == key)
            .map(EdgeId)
            .collect()
    }

    /// The first occurrence of `{u, v}`, or an error if there is none.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.edges_between(u, v)
            .first()
            .copied()
            .ok_or_else(|| CsfError::EdgeNotFound(format!("({u},{v})")))
    }

    /// Edges as pairs of vertex indices.
    pub fn index_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.index_of(u).unwrap(), self.index_of(v).unwrap()))
            .collect()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loop() && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// The sorted vertex weights, i.e. the type of the all-singletons partition.
    pub fn weight_partition(&self) -> Partition {
        Partition::from_parts(self.weights.clone()).expect("weights are positive")
    }

    fn max_id(&self) -> Option<VertexId> {
        self.ids.last().copied()
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<WeightedGraph> {
        self.edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e.0);
        Ok(g)
    }

    /// `G \ S` for a set of distinct edge occurrences.
    pub fn delete_edges(&self, subset: &[EdgeId]) -> Result<WeightedGraph> {
        let drop: BTreeSet<usize> = subset.iter().map(|e| e.0).collect();
        if drop.len() != subset.len() {
            return Err(CsfError::InvalidGraph("repeated edge in deletion set".into()));
        }
        for &e in subset {
            self.edge(e)?;
        }
        let mut g = self.clone();
        g.edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, &uv)| uv)
            .collect();
        Ok(g)
    }

    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<WeightedGraph> {
        for x in [u, v] {
            if self.index_of(x).is_none() {
                return Err(CsfError::InvalidGraph(format!("no vertex {x}")));
            }
        }
        let mut g = self.clone();
        let key = normalize((u, v));
        let pos = g.edges.partition_point(|&x| x <= key);
        g.edges.insert(pos, key);
        Ok(g)
    }

    /// `G / e` with weights `w / e`. A loop is simply deleted; otherwise both
    /// endpoints merge into a fresh vertex (id one above the current maximum)
    /// carrying their combined weight, and the other edges between them become loops.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Contraction> {
        let (a, b) = self.edge(e)?;
        if a == b {
            let graph = self.delete_edge(e)?;
            let edge_map = (0..self.edges.len())
                .map(|i| match i.cmp(&e.0) {
                    std::cmp::Ordering::Less => Some(EdgeId(i)),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(EdgeId(i - 1)),
                })
                .collect();
            return Ok(Contraction {
                graph,
                merged: None,
                edge_map,
            });
        }
        let fresh = self.max_id().expect("edge implies a vertex") + 1;
        let merged_weight = self.weight(a).unwrap() + self.weight(b).unwrap();
        let mut ids = Vec::with_capacity(self.n() - 1);
        let mut weights = Vec::with_capacity(self.n() - 1);
        for (id, w) in self.vertices() {
            if id != a && id != b {
                ids.push(id);
                weights.push(w);
            }
        }
        ids.push(fresh);
        weights.push(merged_weight);

        let relabel = |x: VertexId| if x == a || x == b { fresh } else { x };
        let mut moved: Vec<((VertexId, VertexId), usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e.0)
            .map(|(i, &(u, v))| (normalize((relabel(u), relabel(v))), i))
            .collect();
        moved.sort_by_key(|&(uv, _)| uv);
        let mut edge_map = vec![None; self.edges.len()];
        for (pos, &(_, i)) in moved.iter().enumerate() {
            edge_map[i] = Some(EdgeId(pos));
        }
        let graph = WeightedGraph {
            ids,
            weights,
            edges: moved.into_iter().map(|(uv, _)| uv).collect(),
        };
        Ok(Contraction {
            graph,
            merged: Some(fresh),
            edge_map,
        })
    }

    /// Contraction of a simple graph followed by removing loops and duplicate edges.
    pub fn simple_contract(&self, e: EdgeId) -> Result<WeightedGraph> {
        if !self.is_simple() {
            return Err(CsfError::NotSimple);
        }
        let mut g = self.contract_edge(e)?.graph;
        g.edges.retain(|&(u, v)| u != v);
        g.edges.dedup();
        Ok(g)
    }

    /// Connected components as sets of vertex indices, each sorted, ordered by smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n());
        for (u, v) in self.index_edges() {
            uf.union(u, v);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.n() {
            groups.entry(uf.find(i)).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Weights of the components of the spanning subgraph `(V, S)`, sorted.
    pub fn lambda_of_subset(&self, subset: &[EdgeId]) -> Result<Partition> {
        let mut uf = UnionFind::new(self.n());
        for &e in subset {
            let (u, v) = self.edge(e)?;
            uf.union(self.index_of(u).unwrap(), self.index_of(v).unwrap());
        }
        Ok(uf.component_partition(&self.weights))
    }

    /// The same graph with vertex weights replaced (in vertex order).
    pub fn reweighted(&self, weights: &[u32]) -> Result<WeightedGraph> {
        if weights.len() != self.n() {
            return Err(CsfError::InvalidGraph("weight vector length".into()));
        }
        WeightedGraph::new(
            self.ids.iter().copied().zip(weights.iter().copied()),
            self.edges.iter().copied(),
        )
    }

    pub fn with_unit_weights(&self) -> WeightedGraph {
        WeightedGraph {
            weights: vec![1; self.n()],
            ..self.clone()
        }
    }

    /// Applies `map` to every vertex id; `map` must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> Result<WeightedGraph> {
        WeightedGraph::new(
            self.vertices().map(|(id, w)| (map(id), w)),
            self.edges.iter().map(|&(u, v)| (map(u), map(v))),
        )
    }

    /// Disjoint union; vertices of `other` are shifted above this graph's ids.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        let shift = self.max_id().map_or(0, |m| m + 1);
        let shifted = other.relabel(|x| x + shift).expect("shift is injective");
        WeightedGraph::new(
            self.vertices().chain(shifted.vertices()),
            self.edges.iter().chain(shifted.edges.iter()).copied(),
        )
        .expect("disjoint ids")
    }

    /// Compact single-line description, e.g. `w=[1,2] e=[(0,1)]`.
    pub fn describe(&self) -> String {
        let vs: Vec<String> = self.vertices().map(|(id, w)| format!("{id}:{w}")).collect();
        let es: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("[{}] [{}]", vs.join(" "), es.join(" "))
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn component_partition(&mut self, weights: &[u32]) -> Partition {
        let mut totals = vec![0u32; weights.len()];
        for (i, &w) in weights.iter().enumerate() {
            let r = self.find(i);
            totals[r] += w;
        }
        totals.retain(|&t| t > 0);
        Partition::from_parts(totals).expect("positive totals")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn triangle() -> WeightedGraph {
        WeightedGraph::unweighted(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(WeightedGraph::new([(0, 1), (0, 2)], []).is_err());
        assert!(WeightedGraph::new([(0, 0)], []).is_err());
        assert!(WeightedGraph::new([(0, 1)], [(0, 1)]).is_err());
        let g = WeightedGraph::new([(5, 2), (3, 1)], [(5, 3), (3, 3)]).unwrap();
        assert_eq!(g.ids(), &[3, 5]);
        assert_eq!(g.edges(), &[(3, 3), (3, 5)]);
        assert_eq!(g.total_weight(), 3);
    }

    #[test]
    fn deletion_keeps_multiset_semantics() {
        let path = triangle().delete_edge(EdgeId(2)).unwrap();
        assert_eq!(path.edges(), &[(0, 1), (0, 2)]);
        let double = WeightedGraph::unweighted(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.delete_edge(EdgeId(0)).unwrap().edges(), &[(0, 1)]);
        let looped = WeightedGraph::unweighted(1, &[(0, 0)]).unwrap();
        assert_eq!(looped.delete_edge(EdgeId(0)).unwrap().num_edges(), 0);
        assert!(looped.delete_edge(EdgeId(1)).is_err());
        assert!(triangle().find_edge(0, 0).is_err());
    }

    #[test]
    fn contraction_of_triangle_edge() {
        let c = triangle().contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.merged, Some(3));
        assert_eq!(c.graph.ids(), &[2, 3]);
        assert_eq!(c.graph.weights(), &[1, 2]);
        assert_eq!(c.graph.edges(), &[(2, 3), (2, 3)]);
        assert_eq!(c.edge_map, vec![None, Some(EdgeId(0)), Some(EdgeId(1))]);
    }

    #[test]
    fn contraction_merges_weights() {
        let g = WeightedGraph::with_weights(&[2, 1], &[(0, 1)]).unwrap();
        let c = g.contract_edge(EdgeId(0)).unwrap().graph;
        assert_eq!(c.n(), 1);
        assert_eq!(c.weights(), &[3]);
        assert_eq!(c.num_edges(), 0);
    }

    #[test]
    fn contracting_a_loop_deletes_it() {
        let g = WeightedGraph::with_weights(&[2, 1], &[(0, 0), (0, 1)]).unwrap();
        let c = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.merged, None);
        assert_eq!(c.graph, g.delete_edge(EdgeId(0)).unwrap());
    }

    #[test]
    fn parallel_edges_become_loops() {
        let g = WeightedGraph::unweighted(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let c = g.contract_edge(EdgeId(1)).unwrap().graph;
        assert_eq!(c.edges(), &[(2, 2), (2, 2)]);
    }

    #[test]
    fn simple_contractions() {
        let c = triangle().simple_contract(EdgeId(0)).unwrap();
        assert_eq!(c.edges().len(), 1);
        assert_eq!(c.weight_partition(), partition![2, 1]);

        let square = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let c = square.simple_contract(EdgeId(0)).unwrap();
        assert_eq!(c.num_edges(), 3);
        assert!(c.is_simple());
        assert_eq!(c.weight_partition(), partition![2, 1, 1]);

        let path = WeightedGraph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
        let c = path.simple_contract(path.find_edge(0, 1).unwrap()).unwrap();
        assert_eq!(c.num_edges(), 1);
        assert_eq!(c.weight_partition(), partition![2, 1]);

        let double = WeightedGraph::unweighted(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(double.simple_contract(EdgeId(0)), Err(CsfError::NotSimple));
    }

    #[test]
    fn lambda_of_subsets() {
        let g = WeightedGraph::with_weights(&[3, 1, 2], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.lambda_of_subset(&[]).unwrap(), partition![3, 2, 1]);
        let t = triangle();
        assert_eq!(t.lambda_of_subset(&[EdgeId(0)]).unwrap(), partition![2, 1]);
        assert_eq!(t.lambda_of_subset(&[EdgeId(0), EdgeId(1)]).unwrap(), partition![3]);
    }

    #[test]
    fn contraction_preserves_weight_and_drops_one_vertex() {
        let g = WeightedGraph::with_weights(&[1, 2, 3, 1], &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
            .unwrap();
        for e in g.edge_ids() {
            let c = g.contract_edge(e).unwrap().graph;
            assert_eq!(c.total_weight(), g.total_weight());
            assert_eq!(c.n(), g.n() - 1);
            assert_eq!(c.num_edges(), g.num_edges() - 1);
        }
    }

    #[test]
    fn union_shifts_ids() {
        let u = triangle().disjoint_union(&triangle());
        assert_eq!(u.n(), 6);
        assert_eq!(u.components().len(), 2);
    }
}
