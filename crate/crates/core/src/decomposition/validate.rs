use std::fmt;

use super::tree::{Node, NodeId, Tree};
use crate::connectivity::is_body_connected;
use crate::dihypergraph::{same_universe, Dihypergraph, Edge};
use crate::vertex_set::VertexId;

/// The tree condition a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// (i) leaf labels are vertices of the dihypergraph.
    LeafLabel,
    /// (ii) internal labels are sets of edges of the dihypergraph.
    InternalLabel,
    /// (iii) a labelled edge has its body under one child and its head
    /// under the other.
    Separation,
    /// (iv) labels partition vertices and edges.
    Partition,
    /// A factor leaf is not body-connected.
    FactorConnectivity,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::LeafLabel => "(i) leaf labels",
            Condition::InternalLabel => "(ii) internal labels",
            Condition::Separation => "(iii) body/head separation",
            Condition::Partition => "(iv) partition of vertices and edges",
            Condition::FactorConnectivity => "factor leaf connectivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeViolation {
    pub condition: Condition,
    pub node: Option<NodeId>,
    pub detail: String,
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} violated", self.condition)?;
        if let Some(n) = self.node {
            write!(f, " at node {}", n.0)?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl std::error::Error for TreeViolation {}

fn violation(condition: Condition, node: Option<NodeId>, detail: String) -> TreeViolation {
    TreeViolation { condition, node, detail }
}

/// Checks `tree` against `h`. Conditions are checked in order and the
/// first failure is reported.
pub(crate) fn validate(h: &Dihypergraph, tree: &Tree, allow_factors: bool) -> Result<(), TreeViolation> {
    if !same_universe(h.universe(), tree.universe()) {
        return Err(violation(
            Condition::LeafLabel,
            None,
            "tree and dihypergraph use different vertex universes".into(),
        ));
    }
    let u = h.universe();
    let order = tree.preorder();

    // (i)
    for &id in &order {
        match tree.node(id) {
            Node::Leaf(v) if !h.vertices().contains(*v) => {
                return Err(violation(
                    Condition::LeafLabel,
                    Some(id),
                    format!("`{}` is not a vertex", u.name(*v)),
                ));
            }
            Node::Factor(g) if !allow_factors => {
                return Err(violation(
                    Condition::LeafLabel,
                    Some(id),
                    format!("factor leaf on {} where a single vertex is required", g.display_set(g.vertices())),
                ));
            }
            Node::Factor(g) => {
                if let Some(v) = g.vertices().iter().find(|&v| !h.vertices().contains(v)) {
                    return Err(violation(
                        Condition::LeafLabel,
                        Some(id),
                        format!("`{}` is not a vertex", u.name(v)),
                    ));
                }
            }
            _ => {}
        }
    }

    // (ii)
    for &id in &order {
        let edges: &[Edge] = match tree.node(id) {
            Node::Internal { label, .. } => label,
            Node::Factor(g) => g.edges(),
            Node::Leaf(_) => continue,
        };
        if let Some(e) = edges.iter().find(|e| !h.contains_edge(e)) {
            return Err(violation(
                Condition::InternalLabel,
                Some(id),
                format!("`{}` is not an edge", u.display_edge(e)),
            ));
        }
    }

    // (iii): leaves below a node occupy a contiguous range of positions in
    // left-to-right order.
    let mut span = vec![(0usize, 0usize); tree.len()];
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); u.len()];
    let mut next = 0usize;
    for &id in &order {
        match tree.node(id) {
            Node::Leaf(v) => {
                positions[v.index()].push(next);
                span[id.index()] = (next, next + 1);
                next += 1;
            }
            Node::Factor(g) => {
                let start = next;
                for v in g.vertices() {
                    positions[v.index()].push(next);
                    next += 1;
                }
                span[id.index()] = (start, next);
            }
            Node::Internal { .. } => {}
        }
    }
    for &id in order.iter().rev() {
        if let Node::Internal { left, right, .. } = tree.node(id) {
            span[id.index()] = (span[left.index()].0, span[right.index()].1);
        }
    }
    let under = |v: VertexId, (lo, hi): (usize, usize)| {
        let ps = &positions[v.index()];
        let i = ps.partition_point(|&p| p < lo);
        i < ps.len() && ps[i] < hi
    };
    for &id in &order {
        if let Node::Internal { label, left, right } = tree.node(id) {
            let (l, r) = (span[left.index()], span[right.index()]);
            for e in label {
                let body_left = e.body().iter().all(|&b| under(b, l));
                let body_right = e.body().iter().all(|&b| under(b, r));
                let ok = (body_left && under(e.head(), r)) || (body_right && under(e.head(), l));
                if !ok {
                    return Err(violation(
                        Condition::Separation,
                        Some(id),
                        format!("`{}` does not separate body and head between the children", u.display_edge(e)),
                    ));
                }
            }
        }
    }

    // (iv)
    for (v, ps) in positions.iter().enumerate() {
        if ps.len() > 1 {
            return Err(violation(
                Condition::Partition,
                None,
                format!("vertex `{}` labels {} leaves", u.name(VertexId::from(v)), ps.len()),
            ));
        }
    }
    if let Some(v) = h.vertices().iter().find(|v| positions[v.index()].is_empty()) {
        return Err(violation(
            Condition::Partition,
            None,
            format!("vertex `{}` labels no leaf", u.name(v)),
        ));
    }
    let mut seen: Vec<Option<NodeId>> = vec![None; h.edges().len()];
    for &id in &order {
        let edges: &[Edge] = match tree.node(id) {
            Node::Internal { label, .. } => label,
            Node::Factor(g) => g.edges(),
            Node::Leaf(_) => continue,
        };
        for e in edges {
            let i = h.edges().binary_search(e).expect("checked under (ii)");
            if let Some(prev) = seen[i] {
                return Err(violation(
                    Condition::Partition,
                    Some(id),
                    format!("edge `{}` also labels node {}", u.display_edge(e), prev.0),
                ));
            }
            seen[i] = Some(id);
        }
    }
    if let Some(i) = seen.iter().position(Option::is_none) {
        return Err(violation(
            Condition::Partition,
            None,
            format!("edge `{}` labels no node", u.display_edge(&h.edges()[i])),
        ));
    }

    if allow_factors {
        for &id in &order {
            if let Node::Factor(g) = tree.node(id) {
                if g.vertex_count() < 2 || !is_body_connected(g) {
                    return Err(violation(
                        Condition::FactorConnectivity,
                        Some(id),
                        format!("factor on {} is not body-connected", g.display_set(g.vertices())),
                    ));
                }
            }
        }
    }
    Ok(())
}
