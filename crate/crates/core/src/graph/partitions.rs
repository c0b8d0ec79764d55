//! Stable and connected set partitions of the vertex set.

use std::collections::{BTreeMap, BTreeSet};

use super::{VertexId, WeightedGraph};
use crate::error::{CsfError, Result};
use crate::partition::Partition;

/// Neighbour bitmasks by vertex index, plus a flag per vertex for carrying a loop.
fn adjacency(g: &WeightedGraph) -> (Vec<u128>, Vec<bool>) {
    assert!(g.n() <= 128, "set-partition enumeration supports at most 128 vertices");
    let mut adj = vec![0u128; g.n()];
    let mut looped = vec![false; g.n()];
    for (u, v) in g.index_edges() {
        if u == v {
            looped[u] = true;
        } else {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    (adj, looped)
}

/// Visits every set partition of `0..n` (as block bitmasks) accepted by `fits`,
/// which decides whether vertex `v` may join a block.
fn for_each_set_partition(
    n: usize,
    fits: &dyn Fn(u128, usize) -> bool,
    visit: &mut dyn FnMut(&[u128]),
) {
    fn go(
        v: usize,
        n: usize,
        blocks: &mut Vec<u128>,
        fits: &dyn Fn(u128, usize) -> bool,
        visit: &mut dyn FnMut(&[u128]),
    ) {
        if v == n {
            visit(blocks);
            return;
        }
        for i in 0..blocks.len() {
            if fits(blocks[i], v) {
                blocks[i] |= 1 << v;
                go(v + 1, n, blocks, fits, visit);
                blocks[i] &= !(1u128 << v);
            }
        }
        if fits(0, v) {
            blocks.push(1 << v);
            go(v + 1, n, blocks, fits, visit);
            blocks.pop();
        }
    }
    go(0, n, &mut Vec::new(), fits, visit);
}

fn block_weight(g: &WeightedGraph, block: u128) -> u32 {
    (0..g.n())
        .filter(|i| block >> i & 1 == 1)
        .map(|i| g.weights()[i])
        .sum()
}

fn block_type(g: &WeightedGraph, blocks: &[u128]) -> Partition {
    Partition::from_parts(blocks.iter().map(|&b| block_weight(g, b)).collect())
        .expect("blocks are nonempty")
}

fn block_ids(g: &WeightedGraph, block: u128) -> Vec<VertexId> {
    (0..g.n())
        .filter(|i| block >> i & 1 == 1)
        .map(|i| g.ids()[i])
        .collect()
}

/// All partitions of the vertex set into stable sets, blocks as sorted id lists.
pub fn stable_partitions(g: &WeightedGraph) -> Vec<Vec<Vec<VertexId>>> {
    let (adj, looped) = adjacency(g);
    let fits = |block: u128, v: usize| !looped[v] && adj[v] & block == 0;
    let mut out = Vec::new();
    for_each_set_partition(g.n(), &fits, &mut |blocks| {
        out.push(blocks.iter().map(|&b| block_ids(g, b)).collect());
    });
    out
}

/// `|St_λ|` for every type `λ` that occurs.
pub fn stable_partition_counts(g: &WeightedGraph) -> BTreeMap<Partition, u64> {
    let (adj, looped) = adjacency(g);
    let fits = |block: u128, v: usize| !looped[v] && adj[v] & block == 0;
    let mut counts = BTreeMap::new();
    for_each_set_partition(g.n(), &fits, &mut |blocks| {
        *counts.entry(block_type(g, blocks)).or_insert(0) += 1;
    });
    counts
}

/// `|St_λ(G, w)|`.
pub fn count_stable_partitions(g: &WeightedGraph, lambda: &Partition) -> Result<u64> {
    if lambda.size() != g.total_weight() {
        return Err(CsfError::DegreeMismatch {
            left: lambda.size(),
            right: g.total_weight(),
        });
    }
    Ok(stable_partition_counts(g).get(lambda).copied().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedPartition {
    pub blocks: Vec<Vec<VertexId>>,
    pub kind: Partition,
}

fn induces_connected(adj: &[u128], block: u128) -> bool {
    let start = block & block.wrapping_neg();
    let mut reached = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & block & !reached;
        reached |= new;
        frontier |= new;
    }
    reached == block
}

/// Every partition of the vertex set whose blocks induce connected subgraphs.
pub fn connected_partitions(g: &WeightedGraph) -> Vec<ConnectedPartition> {
    let (adj, _) = adjacency(g);
    let mut out = Vec::new();
    for_each_set_partition(g.n(), &|_, _| true, &mut |blocks| {
        if blocks.iter().all(|&b| induces_connected(&adj, b)) {
            out.push(ConnectedPartition {
                blocks: blocks.iter().map(|&b| block_ids(g, b)).collect(),
                kind: block_type(g, blocks),
            });
        }
    });
    out
}

/// The set of types of connected partitions.
pub fn connected_partition_types(g: &WeightedGraph) -> BTreeSet<Partition> {
    connected_partitions(g).into_iter().map(|c| c.kind).collect()
}
