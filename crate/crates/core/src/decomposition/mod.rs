//! Splits, hierarchical decomposition trees and their checks.

mod builder;
mod tree;
mod validate;

pub use tree::{FactorTree, HTree, Node, NodeId, Tree};
pub use validate::{Condition, TreeViolation};

use crate::connectivity::body_connected_components;
use crate::dihypergraph::Dihypergraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use builder::{Builder, Mode};

/// Whether the bipartition `(u1, u2)` keeps every body on one side.
pub fn is_split(h: &Dihypergraph, u1: &VertexSet, u2: &VertexSet) -> Result<bool> {
    h.check_bipartition(u1, u2)?;
    Ok(h.edges().iter().all(|e| e.body_within(u1) || e.body_within(u2)))
}

/// The split `(C, U ∖ C)` where `C` is the body-connected component holding
/// the smallest vertex, or `None` if `h` is body-connected.
pub fn find_split(h: &Dihypergraph) -> Result<Option<(VertexSet, VertexSet)>> {
    if h.vertex_count() < 2 {
        return Err(Error::TooFewVertices(h.vertex_count()));
    }
    let parts = body_connected_components(h);
    if parts.len() == 1 {
        return Ok(None);
    }
    let c = parts.blocks()[0].clone();
    let rest = h.vertices().difference(&c);
    Ok(Some((c, rest)))
}

/// Result of [`build_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildOutcome {
    Tree(HTree),
    /// The recursion reached a body-connected subhypergraph on `component`
    /// (at least two vertices), so no tree exists.
    Fail { component: VertexSet },
}

impl BuildOutcome {
    pub fn tree(self) -> Option<HTree> {
        match self {
            BuildOutcome::Tree(t) => Some(t),
            BuildOutcome::Fail { .. } => None,
        }
    }

    pub fn is_tree(&self) -> bool {
        matches!(self, BuildOutcome::Tree(_))
    }
}

/// Builds a tree for `h`, splitting off the component of the smallest
/// vertex at every step (left child = that component).
pub fn build_tree(h: &Dihypergraph) -> BuildOutcome {
    match Builder::new(h, Mode::Strict).run() {
        Ok(tree) => BuildOutcome::Tree(HTree::new(tree).expect("strict mode emits no factor leaf")),
        Err(component) => BuildOutcome::Fail { component },
    }
}

/// Same recursion as [`build_tree`], but body-connected subhypergraphs
/// become factor leaves instead of failing.
pub fn build_factor_tree(h: &Dihypergraph) -> FactorTree {
    let tree = Builder::new(h, Mode::Factors).run().expect("factor mode never fails");
    FactorTree::new(tree)
}

pub fn validate_htree(h: &Dihypergraph, t: &HTree) -> std::result::Result<(), TreeViolation> {
    validate::validate(h, t, false)
}

/// Like [`validate_htree`], but factor leaves are allowed and must be
/// body-connected subhypergraphs.
pub fn validate_factor_tree(h: &Dihypergraph, t: &FactorTree) -> std::result::Result<(), TreeViolation> {
    validate::validate(h, t, true)
}

/// Restricts a tree of `h` to a tree of `h[subset]`. Nodes whose children
/// both reach `subset` keep the part of their label inside `subset`; the
/// other nodes are replaced by their child that reaches `subset`.
pub fn restrict_htree(h: &Dihypergraph, t: &HTree, subset: &VertexSet) -> Result<HTree> {
    if subset.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    h.check_subset(subset)?;
    validate_htree(h, t).map_err(|v| Error::InvalidTree(v.to_string()))?;

    let mut mapped: Vec<Option<NodeId>> = vec![None; t.len()];
    let mut nodes = Vec::new();
    for id in t.preorder().into_iter().rev() {
        mapped[id.index()] = match t.node(id) {
            Node::Leaf(v) if subset.contains(*v) => {
                nodes.push(Node::Leaf(*v));
                Some(NodeId(nodes.len() as u32 - 1))
            }
            Node::Leaf(_) | Node::Factor(_) => None,
            Node::Internal { label, left, right } => match (mapped[left.index()], mapped[right.index()]) {
                (Some(l), Some(r)) => {
                    let label = label.iter().filter(|e| e.is_within(subset)).cloned().collect();
                    nodes.push(Node::Internal { label, left: l, right: r });
                    Some(NodeId(nodes.len() as u32 - 1))
                }
                (one, None) | (None, one) => one,
            },
        };
    }
    let root = mapped[t.root().index()].expect("subset is nonempty and covered by the leaves");
    let tree = Tree::from_raw(t.universe().clone(), nodes, root).renumbered();
    HTree::new(tree)
}

/// The dihypergraph a tree describes: all leaf vertices, and all labels
/// and factor edges.
pub fn reconstruct(t: &Tree) -> Result<Dihypergraph> {
    let mut vertices = VertexSet::new();
    let mut edges = Vec::new();
    for id in t.preorder() {
        match t.node(id) {
            Node::Leaf(v) => {
                if !vertices.insert(*v) {
                    return Err(Error::InconsistentTree(format!("vertex `{}` repeats", t.universe().name(*v))));
                }
            }
            Node::Factor(g) => {
                if !vertices.is_disjoint(g.vertices()) {
                    return Err(Error::InconsistentTree("factor leaves overlap".into()));
                }
                vertices = vertices.union(g.vertices());
                edges.extend(g.edges().iter().cloned());
            }
            Node::Internal { label, .. } => edges.extend(label.iter().cloned()),
        }
    }
    let count = edges.len();
    let g = Dihypergraph::from_parts(t.universe().clone(), vertices, edges)
        .map_err(|e| Error::InconsistentTree(e.to_string()))?;
    if g.edges().len() != count {
        return Err(Error::InconsistentTree("an edge labels several nodes".into()));
    }
    Ok(g)
}
