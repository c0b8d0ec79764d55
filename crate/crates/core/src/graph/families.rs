//! Standard graph families.

use super::WeightedGraph;
use crate::partition::Partition;

fn build(weights: &[u32], edges: Vec<(usize, usize)>) -> WeightedGraph {
    WeightedGraph::with_weights(weights, &edges).expect("family weights must be positive")
}

/// Complete graph on `weights.len()` vertices.
pub fn complete(weights: &[u32]) -> WeightedGraph {
    let n = weights.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    build(weights, edges)
}

pub fn edgeless(weights: &[u32]) -> WeightedGraph {
    build(weights, Vec::new())
}

pub fn path(weights: &[u32]) -> WeightedGraph {
    let edges = (1..weights.len()).map(|i| (i - 1, i)).collect();
    build(weights, edges)
}

/// Cycle through the vertices in order. One vertex gives a loop and two give a double edge.
pub fn cycle(weights: &[u32]) -> WeightedGraph {
    let n = weights.len();
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 0 {
        edges.push((n - 1, 0));
    }
    build(weights, edges)
}

/// `K^λ`: the complete graph whose vertex weights are the parts of `λ`.
pub fn clique_of(lambda: &Partition) -> WeightedGraph {
    complete(lambda.parts())
}

/// The complement of `K^λ`: isolated vertices weighted by the parts of `λ`.
pub fn anticlique_of(lambda: &Partition) -> WeightedGraph {
    edgeless(lambda.parts())
}

/// Disjoint union of unit-weight cliques of the given sizes.
pub fn disjoint_cliques(sizes: &[usize]) -> WeightedGraph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for &k in sizes {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((offset + i, offset + j));
            }
        }
        offset += k;
    }
    build(&vec![1; offset], edges)
}

/// The labelled tree with the given Prüfer sequence on `weights.len()` vertices.
pub fn tree_from_pruefer(sequence: &[usize], weights: &[u32]) -> WeightedGraph {
    let n = weights.len();
    assert!(
        n >= 2 && sequence.len() == n - 2 && sequence.iter().all(|&x| x < n),
        "Prüfer sequence must have length n-2 with entries below n"
    );
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(weights, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(complete(&[1; 5]).num_edges(), 10);
        assert_eq!(path(&[1; 5]).num_edges(), 4);
        assert_eq!(cycle(&[1; 5]).num_edges(), 5);
        assert_eq!(cycle(&[1]).edges(), &[(0, 0)]);
        assert_eq!(cycle(&[1, 1]).edges(), &[(0, 1), (0, 1)]);
        assert_eq!(disjoint_cliques(&[2, 3]).num_edges(), 4);
    }

    #[test]
    fn pruefer_trees() {
        let t = tree_from_pruefer(&[3, 3, 3], &[1; 5]);
        assert_eq!(t.num_edges(), 4);
        assert!(t.is_connected());
        let mut count = 0;
        for a in 0..4 {
            for b in 0..4 {
                let t = tree_from_pruefer(&[a, b], &[1; 4]);
                assert!(t.is_connected() && t.num_edges() == 3);
                count += 1;
            }
        }
        assert_eq!(count, 16);
    }
}
