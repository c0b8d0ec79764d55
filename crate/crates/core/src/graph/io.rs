//! JSON graph files.
//!
//! `{"vertices":[{"id":0,"weight":1},...],"edges":[[0,1],...],"orientation":[[0,1],...]}`
//! where the optional orientation lists one `[tail, head]` per edge, in file order.

use serde::{Deserialize, Serialize};

use super::{EdgeId, Orientation, VertexId, WeightedGraph};
use crate::error::{CsfError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: VertexId,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<[VertexId; 2]>>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        serde_json::from_str(text).map_err(|e| CsfError::Parse(e.to_string()))
    }

    /// The graph, plus the orientation re-indexed to the graph's sorted edge list.
    pub fn build(&self) -> Result<(WeightedGraph, Option<Orientation>)> {
        let (g, position) = WeightedGraph::new_tracked(
            self.vertices.iter().map(|v| (v.id, v.weight)),
            self.edges.iter().map(|&[u, v]| (u, v)),
        )?;
        let Some(arcs) = &self.orientation else {
            return Ok((g, None));
        };
        if arcs.len() != self.edges.len() {
            return Err(CsfError::InvalidOrientation(format!(
                "{} orientation entries for {} edges",
                arcs.len(),
                self.edges.len()
            )));
        }
        let mut sorted = vec![(0, 0); arcs.len()];
        for (i, &[t, h]) in arcs.iter().enumerate() {
            let [u, v] = self.edges[i];
            if (t.min(h), t.max(h)) != (u.min(v), u.max(v)) {
                return Err(CsfError::InvalidOrientation(format!(
                    "entry {i} [{t},{h}] does not orient edge [{u},{v}]"
                )));
            }
            let EdgeId(pos) = position[i];
            sorted[pos] = (t, h);
        }
        let gamma = Orientation::new(&g, sorted)?;
        Ok((g, Some(gamma)))
    }

    pub fn from_graph(g: &WeightedGraph, gamma: Option<&Orientation>) -> GraphFile {
        GraphFile {
            vertices: g
                .vertices()
                .map(|(id, weight)| VertexEntry { id, weight })
                .collect(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            orientation: gamma.map(|o| o.arcs().iter().map(|&(t, h)| [t, h]).collect()),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_follows_edge_sorting() {
        let text = r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":2},{"id":2,"weight":1}],
            "edges":[[2,1],[0,1],[1,0]],"orientation":[[2,1],[1,0],[0,1]]}"#;
        let file = GraphFile::parse(text).unwrap();
        let (g, gamma) = file.build().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(gamma.unwrap().arcs(), &[(1, 0), (0, 1), (2, 1)]);
    }

    #[test]
    fn round_trip() {
        let g = WeightedGraph::with_weights(&[1, 3], &[(0, 1), (1, 1)]).unwrap();
        let gamma = Orientation::from_mask(&g, 0b01);
        let text = GraphFile::from_graph(&g, Some(&gamma)).to_json_string();
        let (g2, gamma2) = GraphFile::parse(&text).unwrap().build().unwrap();
        assert_eq!(g, g2);
        assert_eq!(Some(gamma), gamma2);
        let plain = GraphFile::from_graph(&g, None).to_json_string();
        assert!(!plain.contains("orientation"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GraphFile::parse("{").is_err());
        let bad_orient = r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":1}],
            "edges":[[0,1]],"orientation":[[1,1]]}"#;
        assert!(GraphFile::parse(bad_orient).unwrap().build().is_err());
        let bad_weight = r#"{"vertices":[{"id":0,"weight":0}],"edges":[]}"#;
        assert!(GraphFile::parse(bad_weight).unwrap().build().is_err());
    }
}
