//! Simple cycles of a multigraph as sets of edge occurrences.

use std::collections::BTreeMap;

use super::{EdgeId, WeightedGraph};

/// Every simple cycle: loops (length 1), pairs of parallel occurrences
/// (length 2), and cycles through three or more distinct vertices with every
/// choice of occurrence per edge. Each cycle is returned once, edges sorted.
pub fn simple_cycles(g: &WeightedGraph) -> Vec<Vec<EdgeId>> {
    let n = g.n();
    let edges = g.index_edges();
    let mut out: Vec<Vec<EdgeId>> = Vec::new();

    let mut incident: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u == v {
            out.push(vec![EdgeId(i)]);
        } else {
            incident[u].push((v, EdgeId(i)));
            incident[v].push((u, EdgeId(i)));
        }
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i] == edges[j] && edges[i].0 != edges[i].1 {
                out.push(vec![EdgeId(i), EdgeId(j)]);
            }
        }
    }

    // Longer cycles: the smallest vertex is the start, and the second vertex
    // is smaller than the last one so each direction is counted once.
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        let mut vertices = vec![start];
        let mut path = Vec::new();
        extend(start, start, &incident, &mut on_path, &mut vertices, &mut path, &mut out);
    }

    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn extend(
    start: usize,
    at: usize,
    incident: &[Vec<(usize, EdgeId)>],
    on_path: &mut Vec<bool>,
    vertices: &mut Vec<usize>,
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
) {
    for &(next, e) in &incident[at] {
        if next == start && vertices.len() >= 3 && vertices[1] < *vertices.last().unwrap() {
            let mut cycle = path.clone();
            cycle.push(e);
            out.push(cycle);
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            vertices.push(next);
            path.push(e);
            extend(start, next, incident, on_path, vertices, path, out);
            path.pop();
            vertices.pop();
            on_path[next] = false;
        }
    }
}

/// Whether the edge occurrences form exactly one simple cycle.
pub fn is_cycle(g: &WeightedGraph, cycle: &[EdgeId]) -> bool {
    if cycle.is_empty() {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    let edges = g.index_edges();
    for e in &sorted {
        let Some(&(u, v)) = edges.get(e.0) else {
            return false;
        };
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    if degree.values().any(|&d| d != 2) {
        return false;
    }
    let mut uf = super::UnionFind::new(g.n());
    for e in &sorted {
        let (u, v) = edges[e.0];
        uf.union(u, v);
    }
    let root = uf.find(*degree.keys().next().unwrap());
    degree.keys().all(|&v| uf.find(v) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn complete_graph_cycle_counts() {
        // K4: 4 triangles and 3 four-cycles; K5: 10 + 15 + 12
        assert_eq!(simple_cycles(&families::complete(&[1; 4])).len(), 7);
        assert_eq!(simple_cycles(&families::complete(&[1; 5])).len(), 37);
        assert!(simple_cycles(&families::path(&[1; 5])).is_empty());
    }

    #[test]
    fn multigraph_cycles() {
        let g = WeightedGraph::unweighted(3, &[(0, 0), (0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        let cycles = simple_cycles(&g);
        // one loop, one parallel pair, two triangles (one per copy of 0-1)
        assert_eq!(cycles.len(), 4);
        for c in &cycles {
            assert!(is_cycle(&g, c), "{c:?}");
        }
    }

    #[test]
    fn rejects_non_cycles() {
        let g = families::complete(&[1; 4]);
        assert!(!is_cycle(&g, &[]));
        assert!(!is_cycle(&g, &[EdgeId(0)]));
        let all: Vec<EdgeId> = g.edge_ids().collect();
        assert!(!is_cycle(&g, &all));
        // two disjoint 2-cycles
        let g = WeightedGraph::unweighted(4, &[(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
        assert!(!is_cycle(&g, &[EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]));
        assert!(is_cycle(&g, &[EdgeId(2), EdgeId(3)]));
    }
}
