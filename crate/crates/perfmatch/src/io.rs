use std::collections::BTreeMap;

use perfmatch_core::decomposition::{ApexTreeDecomposition, TorsoRotation};
use perfmatch_core::planar::RotationSystem;
use perfmatch_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Graph(#[from] perfmatch_core::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(FormatError::Invalid(msg.into()))
}

/// A rotation given either as one list per vertex or as an object keyed
/// by vertex id.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RotationDoc {
    Lists(Vec<Vec<usize>>),
    Map(BTreeMap<String, Vec<usize>>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphIn {
    n: usize,
    edges: Vec<Vec<i64>>,
    #[serde(default)]
    rotation: Option<RotationDoc>,
}

#[derive(Serialize)]
struct GraphOut<'a> {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rotation: Option<&'a [Vec<usize>]>,
}

fn vertex_key(key: &str) -> Result<usize> {
    key.parse().or_else(|_| invalid(format!("rotation key {key:?} is not a vertex id")))
}

/// A graph document, with its rotation system when one is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
}

/// Parses `{"n": .., "edges": [[u, v, w?], ..], "rotation"?: ..}`. Missing
/// weights default to 1; a rotation is checked against the graph.
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let doc: GraphIn = serde_json::from_str(text)?;
    let mut g = Graph::new(doc.n);
    for e in &doc.edges {
        let (u, v, w) = match e.as_slice() {
            [u, v] => (*u, *v, 1),
            [u, v, w] => (*u, *v, *w),
            _ => return invalid(format!("edge {e:?} is not a [u, v] or [u, v, w] array")),
        };
        if u < 0 || v < 0 {
            return invalid(format!("edge {e:?} has a negative endpoint"));
        }
        g.add_weighted_edge(u as usize, v as usize, w)?;
    }
    let rotation = match doc.rotation {
        None => None,
        Some(RotationDoc::Lists(lists)) => Some(RotationSystem::new(&g, lists)?),
        Some(RotationDoc::Map(map)) => {
            let mut lists = vec![Vec::new(); doc.n];
            for (k, list) in map {
                let v = vertex_key(&k)?;
                match lists.get_mut(v) {
                    Some(slot) => *slot = list,
                    None => return invalid(format!("rotation names vertex {v} outside the graph")),
                }
            }
            Some(RotationSystem::new(&g, lists)?)
        }
    };
    Ok(GraphFile { graph: g, rotation })
}

/// Canonical JSON for a graph: edges in ascending order with explicit
/// weights, rotation as one list per vertex.
pub fn graph_to_json(g: &Graph, rotation: Option<&RotationSystem>) -> String {
    let lists: Option<Vec<Vec<usize>>> = rotation.map(|r| (0..r.n()).map(|v| r.rotation(v).to_vec()).collect());
    let out = GraphOut {
        n: g.n(),
        edges: g.edges().map(|((u, v), w)| (u, v, w)).collect(),
        rotation: lists.as_deref(),
    };
    serde_json::to_string(&out).expect("graph serializes")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: u64,
    bag: Vec<usize>,
    #[serde(default)]
    apex: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<usize>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionDoc {
    nodes: Vec<NodeDoc>,
    #[serde(default)]
    edges: Vec<(u64, u64)>,
    root: u64,
}

/// A decomposition together with the file's node ids, indexed like the
/// decomposition's nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionFile {
    pub decomposition: ApexTreeDecomposition,
    pub ids: Vec<u64>,
}

impl DecompositionFile {
    /// Node ids ascending from 0 in node order.
    pub fn with_sequential_ids(decomposition: ApexTreeDecomposition) -> Self {
        let ids = (0..decomposition.len() as u64).collect();
        DecompositionFile { decomposition, ids }
    }
}

/// Parses `{"nodes": [{id, bag, apex, rotation?}], "edges": [[parent,
/// child]], "root": id}`.
pub fn parse_decomposition(text: &str) -> Result<DecompositionFile> {
    let doc: DecompositionDoc = serde_json::from_str(text)?;
    let mut index = BTreeMap::new();
    for (i, node) in doc.nodes.iter().enumerate() {
        if index.insert(node.id, i).is_some() {
            return invalid(format!("node id {} appears twice", node.id));
        }
    }
    let lookup = |id: u64| match index.get(&id) {
        Some(&i) => Ok(i),
        None => invalid(format!("unknown node id {id}")),
    };
    let edges = doc
        .edges
        .iter()
        .map(|&(p, c)| Ok((lookup(p)?, lookup(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let root = lookup(doc.root)?;
    let bags = doc.nodes.iter().map(|n| n.bag.iter().copied().collect()).collect();
    let apex = doc.nodes.iter().map(|n| n.apex.iter().copied().collect()).collect();
    let mut d = ApexTreeDecomposition::new(bags, apex, &edges, root)?;
    for (i, node) in doc.nodes.iter().enumerate() {
        if let Some(map) = &node.rotation {
            let rot: TorsoRotation = map
                .iter()
                .map(|(k, list)| Ok((vertex_key(k)?, list.clone())))
                .collect::<Result<_>>()?;
            d.set_rotation(i, rot)?;
        }
    }
    let ids = doc.nodes.iter().map(|n| n.id).collect();
    Ok(DecompositionFile { decomposition: d, ids })
}

pub fn decomposition_to_json(file: &DecompositionFile) -> String {
    let d = &file.decomposition;
    let nodes = (0..d.len())
        .map(|t| NodeDoc {
            id: file.ids[t],
            bag: d.bag(t).iter().copied().collect(),
            apex: d.apex(t).iter().copied().collect(),
            rotation: d
                .rotation(t)
                .map(|r| r.iter().map(|(v, list)| (v.to_string(), list.clone())).collect()),
        })
        .collect();
    let doc = DecompositionDoc {
        nodes,
        edges: d.tree_edges().into_iter().map(|(p, c)| (file.ids[p], file.ids[c])).collect(),
        root: file.ids[d.root()],
    };
    serde_json::to_string(&doc).expect("decomposition serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use perfmatch_core::generators::grid_with_embedding;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"n":4,"edges":[[0,1],[1,2,3],[2,3,-2],[3,0,1]]}"#;
        let file = parse_graph(text).unwrap();
        assert_eq!(file.graph.weight(1, 2), Some(3));
        assert_eq!(file.graph.weight(0, 1), Some(1));
        let out = graph_to_json(&file.graph, None);
        assert_eq!(out, r#"{"n":4,"edges":[[0,1,1],[0,3,1],[1,2,3],[2,3,-2]]}"#);
        assert_eq!(graph_to_json(&parse_graph(&out).unwrap().graph, None), out);
    }

    #[test]
    fn rotation_forms() {
        let (g, r) = grid_with_embedding(2, 3);
        let out = graph_to_json(&g, Some(&r));
        let back = parse_graph(&out).unwrap();
        assert_eq!(back.rotation.as_ref(), Some(&r));
        assert_eq!(graph_to_json(&back.graph, back.rotation.as_ref()), out);

        let keyed = r#"{"n":3,"edges":[[0,1],[1,2],[0,2]],"rotation":{"0":[1,2],"1":[2,0],"2":[0,1]}}"#;
        assert!(parse_graph(keyed).unwrap().rotation.is_some());
        let wrong = r#"{"n":3,"edges":[[0,1],[1,2]],"rotation":{"0":[1,2],"1":[2,0],"2":[1]}}"#;
        assert!(matches!(parse_graph(wrong), Err(FormatError::Graph(_))));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(matches!(parse_graph("{"), Err(FormatError::Json(_))));
        assert!(matches!(parse_graph(r#"{"n":2,"edges":[[0]]}"#), Err(FormatError::Invalid(_))));
        assert!(matches!(parse_graph(r#"{"n":2,"edges":[[0,2]]}"#), Err(FormatError::Graph(_))));
        assert!(matches!(parse_graph(r#"{"n":2,"edges":[[1,1]]}"#), Err(FormatError::Graph(_))));
        assert!(parse_graph(r#"{"n":2,"edges":[],"extra":1}"#).is_err());
    }

    #[test]
    fn decomposition_round_trip() {
        let text = r#"{"nodes":[{"id":7,"bag":[0,1,2]},{"id":3,"bag":[1,2,3],"apex":[3],"rotation":{"1":[2],"2":[1]}}],"edges":[[7,3]],"root":7}"#;
        let file = parse_decomposition(text).unwrap();
        assert_eq!(file.ids, vec![7, 3]);
        assert_eq!(file.decomposition.children(0), &[1]);
        let out = decomposition_to_json(&file);
        assert_eq!(parse_decomposition(&out).unwrap(), file);
        assert_eq!(decomposition_to_json(&parse_decomposition(&out).unwrap()), out);
    }

    #[test]
    fn rejects_bad_decompositions() {
        let dup = r#"{"nodes":[{"id":1,"bag":[0]},{"id":1,"bag":[0]}],"edges":[[1,1]],"root":1}"#;
        assert!(matches!(parse_decomposition(dup), Err(FormatError::Invalid(_))));
        let cycle = r#"{"nodes":[{"id":0,"bag":[0]},{"id":1,"bag":[0]}],"edges":[[0,1],[1,0]],"root":0}"#;
        assert!(matches!(parse_decomposition(cycle), Err(FormatError::Graph(_))));
        let missing = r#"{"nodes":[{"id":0,"bag":[0]}],"edges":[],"root":5}"#;
        assert!(parse_decomposition(missing).is_err());
    }
}
