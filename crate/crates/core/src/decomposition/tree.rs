use std::ops::Deref;
use std::sync::Arc;

use crate::dihypergraph::{same_universe, Dihypergraph, Edge, Universe};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

/// Index of a node in a [`Tree`] arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    /// A single vertex.
    Leaf(VertexId),
    /// A body-connected subhypergraph with at least two vertices.
    Factor(Dihypergraph),
    /// An edge set whose bodies sit under one child and heads under the other.
    Internal { label: Vec<Edge>, left: NodeId, right: NodeId },
}

impl Node {
    pub fn children(&self) -> Option<(NodeId, NodeId)> {
        match *self {
            Node::Internal { left, right, .. } => Some((left, right)),
            _ => None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        !matches!(self, Node::Internal { .. })
    }
}

/// Full rooted binary tree stored as an arena of nodes.
///
/// Deep trees (a digraph yields a path-shaped spine) are common, so every
/// traversal here is iterative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    universe: Arc<Universe>,
    nodes: Vec<Node>,
    root: NodeId,
}

impl Tree {
    pub(crate) fn from_raw(universe: Arc<Universe>, nodes: Vec<Node>, root: NodeId) -> Self {
        Tree { universe, nodes, root }
    }

    /// Assembles a tree from an arena, checking only its shape: child ids
    /// are in range, every node but the root has exactly one parent, and
    /// every node is reachable from the root.
    pub fn from_parts(universe: Arc<Universe>, nodes: Vec<Node>, root: NodeId) -> Result<Self> {
        let n = nodes.len();
        if root.index() >= n {
            return Err(Error::InconsistentTree("root id out of range".into()));
        }
        let mut parents = vec![0u32; n];
        for node in &nodes {
            match node {
                Node::Internal { left, right, .. } => {
                    for c in [left, right] {
                        if c.index() >= n {
                            return Err(Error::InconsistentTree(format!("child id {} out of range", c.0)));
                        }
                        parents[c.index()] += 1;
                    }
                }
                Node::Factor(g) if !same_universe(g.universe(), &universe) => {
                    return Err(Error::UniverseMismatch);
                }
                _ => {}
            }
        }
        if parents[root.index()] != 0 {
            return Err(Error::InconsistentTree("root has a parent".into()));
        }
        if let Some(i) = (0..n).find(|&i| i != root.index() && parents[i] != 1) {
            return Err(Error::InconsistentTree(format!("node {i} has {} parents", parents[i])));
        }
        let tree = Tree { universe, nodes, root };
        if tree.preorder().len() != n {
            return Err(Error::InconsistentTree("unreachable nodes".into()));
        }
        Ok(tree)
    }

    pub fn into_parts(self) -> (Arc<Universe>, Vec<Node>, NodeId) {
        (self.universe, self.nodes, self.root)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids, parent before children and left before right.
    pub fn preorder(&self) -> Vec<NodeId> {
        self.preorder_from(self.root)
    }

    pub fn preorder_from(&self, start: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![start];
        while let Some(id) = stack.pop() {
            out.push(id);
            if let Some((l, r)) = self.node(id).children() {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }

    /// Vertices of the leaves below `id` (factor leaves contribute all of
    /// their vertices).
    pub fn ground(&self, id: NodeId) -> VertexSet {
        let mut set = VertexSet::new();
        for n in self.preorder_from(id) {
            match self.node(n) {
                Node::Leaf(v) => {
                    set.insert(*v);
                }
                Node::Factor(g) => set = set.union(g.vertices()),
                Node::Internal { .. } => {}
            }
        }
        set
    }

    /// Ground set of every node at once, indexed by node id.
    pub fn grounds(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.nodes.len()];
        for id in self.preorder().into_iter().rev() {
            out[id.index()] = match self.node(id) {
                Node::Leaf(v) => VertexSet::singleton(*v),
                Node::Factor(g) => g.vertices().clone(),
                Node::Internal { left, right, .. } => out[left.index()].union(&out[right.index()]),
            };
        }
        out
    }

    pub fn factor_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Factor(_))).count()
    }

    /// Leaves and factor leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<NodeId> {
        self.preorder().into_iter().filter(|&id| self.node(id).is_leaf()).collect()
    }

    /// Renumbers the arena so node ids follow preorder.
    pub(crate) fn renumbered(self) -> Tree {
        let order = self.preorder();
        let mut new_id = vec![NodeId(u32::MAX); self.nodes.len()];
        for (i, id) in order.iter().enumerate() {
            new_id[id.index()] = NodeId(i as u32);
        }
        let mut slots: Vec<Option<Node>> = self.nodes.into_iter().map(Some).collect();
        let nodes = order
            .iter()
            .map(|id| match slots[id.index()].take().unwrap() {
                Node::Internal { label, left, right } => Node::Internal {
                    label,
                    left: new_id[left.index()],
                    right: new_id[right.index()],
                },
                other => other,
            })
            .collect();
        Tree { universe: self.universe, nodes, root: NodeId(0) }
    }
}

/// A tree whose leaves are single vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTree(Tree);

impl HTree {
    /// Fails if the tree has a factor leaf.
    pub fn new(tree: Tree) -> Result<Self> {
        if tree.factor_count() > 0 {
            return Err(Error::InvalidTree("factor leaf in a tree of vertices".into()));
        }
        Ok(HTree(tree))
    }

    pub fn into_tree(self) -> Tree {
        self.0
    }
}

impl Deref for HTree {
    type Target = Tree;

    fn deref(&self) -> &Tree {
        &self.0
    }
}

/// A tree whose leaves are single vertices or body-connected factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTree(Tree);

impl FactorTree {
    pub fn new(tree: Tree) -> Self {
        FactorTree(tree)
    }

    pub fn into_tree(self) -> Tree {
        self.0
    }

    /// The same tree as an [`HTree`], if it has no nontrivial factor.
    pub fn into_htree(self) -> std::result::Result<HTree, FactorTree> {
        if self.0.factor_count() == 0 {
            Ok(HTree(self.0))
        } else {
            Err(self)
        }
    }

    /// Subhypergraph carried by each leaf, in left-to-right order. Single
    /// vertices yield edgeless one-vertex dihypergraphs.
    pub fn factors(&self) -> Vec<Dihypergraph> {
        self.leaves()
            .into_iter()
            .map(|id| match self.node(id) {
                Node::Factor(g) => g.clone(),
                Node::Leaf(v) => {
                    Dihypergraph::from_parts(self.universe().clone(), VertexSet::singleton(*v), vec![]).unwrap()
                }
                Node::Internal { .. } => unreachable!(),
            })
            .collect()
    }
}

impl From<HTree> for FactorTree {
    fn from(t: HTree) -> Self {
        FactorTree(t.0)
    }
}

impl Deref for FactorTree {
    type Target = Tree;

    fn deref(&self) -> &Tree {
        &self.0
    }
}
