//! JSON, DOT and text forms of decomposition trees.

use std::fmt::Write;

use hdecomp::decomposition::{Node, NodeId, Tree};
use hdecomp::{Dihypergraph, Edge, VertexSet};
use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
struct JsonEdge<'a> {
    body: Vec<&'a str>,
    head: &'a str,
}

#[derive(Serialize)]
struct JsonFactor<'a> {
    vertices: Vec<&'a str>,
    edges: Vec<JsonEdge<'a>>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonNode<'a> {
    Leaf { leaf: &'a str },
    Internal { label: Vec<JsonEdge<'a>>, left: Box<JsonNode<'a>>, right: Box<JsonNode<'a>> },
    Factor { factor: JsonFactor<'a> },
}

fn json_edge<'a>(t: &'a Tree, e: &Edge) -> JsonEdge<'a> {
    let u = t.universe();
    JsonEdge { body: e.body().iter().map(|&v| u.name(v)).collect(), head: u.name(e.head()) }
}

/// Serializes `t` using the nested schema: `{"leaf": v}`,
/// `{"label": [...], "left": ..., "right": ...}` and
/// `{"factor": {"vertices": [...], "edges": [...]}}`.
pub fn tree_to_json(t: &Tree) -> String {
    let u = t.universe();
    let mut built: Vec<Option<JsonNode>> = (0..t.len()).map(|_| None).collect();
    for id in t.preorder().into_iter().rev() {
        let node = match t.node(id) {
            Node::Leaf(v) => JsonNode::Leaf { leaf: u.name(*v) },
            Node::Factor(g) => JsonNode::Factor {
                factor: JsonFactor {
                    vertices: g.vertices().iter().map(|v| u.name(v)).collect(),
                    edges: g.edges().iter().map(|e| json_edge(t, e)).collect(),
                },
            },
            Node::Internal { label, left, right } => JsonNode::Internal {
                label: label.iter().map(|e| json_edge(t, e)).collect(),
                left: Box::new(built[left.index()].take().expect("child built first")),
                right: Box::new(built[right.index()].take().expect("child built first")),
            },
        };
        built[id.index()] = Some(node);
    }
    let root = built[t.root().index()].take().expect("root built");
    serde_json::to_string(&root).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeJsonError {
    /// Not a tree in the expected schema.
    Malformed(String),
    /// Well-formed, but names something that is not part of the instance.
    Foreign(String),
}

impl std::fmt::Display for TreeJsonError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeJsonError::Malformed(m) => write!(f, "malformed tree: {m}"),
            TreeJsonError::Foreign(m) => f.write_str(m),
        }
    }
}

fn malformed(m: impl Into<String>) -> TreeJsonError {
    TreeJsonError::Malformed(m.into())
}

fn keys(v: &Value) -> Result<Vec<&str>, TreeJsonError> {
    let obj = v.as_object().ok_or_else(|| malformed("node is not an object"))?;
    let mut k: Vec<&str> = obj.keys().map(String::as_str).collect();
    k.sort_unstable();
    Ok(k)
}

fn name_of(h: &Dihypergraph, v: &Value) -> Result<hdecomp::VertexId, TreeJsonError> {
    let s = v.as_str().ok_or_else(|| malformed("vertex name is not a string"))?;
    h.vertex(s).ok_or_else(|| TreeJsonError::Foreign(format!("`{s}` is not a vertex of the instance")))
}

fn edge_of(h: &Dihypergraph, v: &Value) -> Result<Edge, TreeJsonError> {
    if keys(v)? != ["body", "head"] {
        return Err(malformed("an edge has exactly the keys `body` and `head`"));
    }
    let body = v["body"]
        .as_array()
        .ok_or_else(|| malformed("edge body is not a list"))?
        .iter()
        .map(|b| name_of(h, b))
        .collect::<Result<Vec<_>, _>>()?;
    let head = name_of(h, &v["head"])?;
    Edge::new(body, head).ok_or_else(|| TreeJsonError::Foreign("edge with an empty body or its head in its body".into()))
}

fn edges_of(h: &Dihypergraph, v: &Value) -> Result<Vec<Edge>, TreeJsonError> {
    v.as_array()
        .ok_or_else(|| malformed("edge list is not a list"))?
        .iter()
        .map(|e| edge_of(h, e))
        .collect()
}

/// Reads a tree in the schema of [`tree_to_json`] over the vertices of `h`.
pub fn tree_from_json(h: &Dihypergraph, text: &str) -> Result<Tree, TreeJsonError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let value: Value = serde::Deserialize::deserialize(&mut de).map_err(|e: serde_json::Error| malformed(e.to_string()))?;
    de.end().map_err(|e| malformed(e.to_string()))?;

    const PENDING: NodeId = NodeId(u32::MAX);
    let mut nodes: Vec<Node> = Vec::new();
    let mut stack: Vec<(&Value, Option<(NodeId, bool)>)> = vec![(&value, None)];
    while let Some((v, parent)) = stack.pop() {
        let id = NodeId(nodes.len() as u32);
        let node = match keys(v)?.as_slice() {
            ["leaf"] => Node::Leaf(name_of(h, &v["leaf"])?),
            ["factor"] => {
                let f = &v["factor"];
                if keys(f)? != ["edges", "vertices"] {
                    return Err(malformed("a factor has exactly the keys `vertices` and `edges`"));
                }
                let vertices: VertexSet = f["vertices"]
                    .as_array()
                    .ok_or_else(|| malformed("factor vertices are not a list"))?
                    .iter()
                    .map(|x| name_of(h, x))
                    .collect::<Result<_, _>>()?;
                let edges = edges_of(h, &f["edges"])?;
                let g = Dihypergraph::from_parts(h.universe().clone(), vertices, edges)
                    .map_err(|e| TreeJsonError::Foreign(format!("factor is not a dihypergraph: {e}")))?;
                Node::Factor(g)
            }
            ["label", "left", "right"] => {
                let label = edges_of(h, &v["label"])?;
                stack.push((&v["right"], Some((id, false))));
                stack.push((&v["left"], Some((id, true))));
                Node::Internal { label, left: PENDING, right: PENDING }
            }
            other => return Err(malformed(format!("unexpected node keys {other:?}"))),
        };
        nodes.push(node);
        if let Some((p, is_left)) = parent {
            if let Node::Internal { left, right, .. } = &mut nodes[p.index()] {
                *if is_left { left } else { right } = id;
            }
        }
    }
    Tree::from_parts(h.universe().clone(), nodes, NodeId(0)).map_err(|e| malformed(e.to_string()))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn edge_line(t: &Tree, e: &Edge) -> String {
    let u = t.universe();
    let body: String = e.body().iter().map(|&v| u.name(v)).collect::<Vec<_>>().join(",");
    format!("{body}→{}", u.name(e.head()))
}

/// Graphviz rendering: internal nodes show their label edges, leaves their
/// vertex, factor leaves their vertices and edges.
pub fn tree_to_dot(t: &Tree) -> String {
    let u = t.universe();
    let order = t.preorder();
    let mut pos = vec![0usize; t.len()];
    for (i, id) in order.iter().enumerate() {
        pos[id.index()] = i;
    }
    let mut out = String::from("digraph htree {\n  node [fontname=\"monospace\"];\n");
    for (i, &id) in order.iter().enumerate() {
        match t.node(id) {
            Node::Leaf(v) => {
                writeln!(out, "  n{i} [shape=ellipse, label=\"{}\"];", dot_escape(u.name(*v))).unwrap();
            }
            Node::Factor(g) => {
                let mut lines = vec![g.display_set(g.vertices()).to_string()];
                lines.extend(g.edges().iter().map(|e| edge_line(t, e)));
                let label: Vec<String> = lines.iter().map(|l| dot_escape(l)).collect();
                writeln!(out, "  n{i} [shape=box, style=rounded, label=\"{}\"];", label.join("\\n")).unwrap();
            }
            Node::Internal { label, .. } => {
                let lines: Vec<String> = label.iter().map(|e| dot_escape(&edge_line(t, e))).collect();
                let text = if lines.is_empty() { "∅".to_string() } else { lines.join("\\n") };
                writeln!(out, "  n{i} [shape=box, label=\"{text}\"];").unwrap();
            }
        }
    }
    for (i, &id) in order.iter().enumerate() {
        if let Some((l, r)) = t.node(id).children() {
            writeln!(out, "  n{i} -> n{};", pos[l.index()]).unwrap();
            writeln!(out, "  n{i} -> n{};", pos[r.index()]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// One line per node in preorder; children are referred to by position.
pub fn tree_to_text(t: &Tree) -> String {
    let u = t.universe();
    let order = t.preorder();
    let mut pos = vec![0usize; t.len()];
    for (i, id) in order.iter().enumerate() {
        pos[id.index()] = i;
    }
    let mut out = String::new();
    for (i, &id) in order.iter().enumerate() {
        match t.node(id) {
            Node::Leaf(v) => writeln!(out, "{i}: leaf {}", u.name(*v)).unwrap(),
            Node::Factor(g) => {
                let edges: Vec<String> = g.edges().iter().map(|e| u.display_edge(e).to_string()).collect();
                writeln!(out, "{i}: factor {} [{}]", g.display_set(g.vertices()), edges.join("; ")).unwrap();
            }
            Node::Internal { label, left, right } => {
                let edges: Vec<String> = label.iter().map(|e| u.display_edge(e).to_string()).collect();
                writeln!(out, "{i}: split [{}] children {} {}", edges.join("; "), pos[left.index()], pos[right.index()]).unwrap();
            }
        }
    }
    out
}
