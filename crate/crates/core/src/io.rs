//! JSON graph format: `{"vertices": n, "edges": [[tail, head], ...]}`.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

pub fn load_graph<R: Read>(source: R) -> Result<Graph> {
    let file: GraphFile =
        serde_json::from_reader(source).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::new(file.vertices, file.edges.iter().map(|e| (e[0], e[1])).collect())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    load_graph(text.as_bytes())
}

pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile {
        vertices: g.n(),
        edges: g.edges().iter().map(|&(t, h)| [t, h]).collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}
