//! JSON file formats: ribbon graphs (with optional degrees) and cutting sets.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ribbon::{default_edge_ids, RibbonGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    /// Half-edges in ρ order: each maps to the next, the last to the first.
    pub rotation: Vec<String>,
}

/// Textual ribbon graph: vertices with their rotations and the ι-pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RibbonSpec {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<[String; 2]>,
    /// Optional names for the edges, parallel to `edges`. Absent means
    /// `e1, e2, ...`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_ids: Option<Vec<String>>,
}

impl RibbonSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Convenience constructor from borrowed string tables.
    pub fn from_rotations(vertices: &[(&str, Option<u32>, &[&str])], edges: &[(&str, &str)]) -> Self {
        RibbonSpec {
            vertices: vertices
                .iter()
                .map(|(id, degree, rot)| VertexSpec {
                    id: id.to_string(),
                    degree: *degree,
                    rotation: rot.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
            edges: edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            edge_ids: None,
        }
    }

    pub fn from_owned(vertices: Vec<(String, Option<u32>, Vec<String>)>, edges: Vec<(String, String)>) -> Self {
        RibbonSpec {
            vertices: vertices
                .into_iter()
                .map(|(id, degree, rotation)| VertexSpec { id, degree, rotation })
                .collect(),
            edges: edges.into_iter().map(|(a, b)| [a, b]).collect(),
            edge_ids: None,
        }
    }

    /// Describes `g`. Rotations start at the smallest half-edge index of each
    /// star so that parsing the result reproduces the same indices.
    pub fn from_graph(g: &RibbonGraph, degrees: Option<&[u32]>) -> Self {
        let vertices = (0..g.num_vertices())
            .map(|v| VertexSpec {
                id: g.vertex_id(v).to_string(),
                degree: degrees.map(|d| d[v]),
                rotation: g.star(v).iter().map(|&h| g.half_edge_id(h).to_string()).collect(),
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|&[a, b]| [g.half_edge_id(a).to_string(), g.half_edge_id(b).to_string()])
            .collect();
        let edge_ids = (g.edge_ids() != default_edge_ids(g.num_edges()).as_slice()).then(|| g.edge_ids().to_vec());
        RibbonSpec { vertices, edges, edge_ids }
    }

    /// Degrees in vertex order, if every vertex has one.
    pub fn degrees(&self) -> Option<Vec<u32>> {
        self.vertices.iter().map(|v| v.degree).collect()
    }
}

/// One entry of a cutting-set file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutEntry {
    pub vertex: String,
    pub half_edge: String,
}

pub fn parse_cut_file(text: &str) -> Result<Vec<CutEntry>> {
    Ok(serde_json::from_str(text)?)
}
