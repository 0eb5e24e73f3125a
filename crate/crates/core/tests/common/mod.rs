#![allow(dead_code)]

use hdecomp::connectivity::body_connected_components;
use hdecomp::decomposition::{Node, NodeId, Tree};
use hdecomp::{Dihypergraph, VertexSet};
use proptest::prelude::*;

/// Instances on vertices `1..=n` with up to `max_edges` edges. Each edge is
/// drawn as a body mask and a head; invalid draws are dropped.
pub fn dihypergraph(max_n: usize, max_edges: usize, max_body: usize) -> impl Strategy<Value = Dihypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let edge = (1u32..(1 << n), 0..n);
        prop::collection::vec(edge, 0..=max_edges).prop_map(move |raw| {
            let edges: Vec<(Vec<usize>, usize)> = raw
                .into_iter()
                .filter(|&(b, h)| b >> h & 1 == 0 && (b.count_ones() as usize) <= max_body)
                .map(|(b, h)| ((0..n).filter(|i| b >> i & 1 == 1).map(|i| i + 1).collect(), h + 1))
                .collect();
            let refs: Vec<(&[usize], usize)> = edges.iter().map(|(b, h)| (b.as_slice(), *h)).collect();
            hdecomp::fixtures::numbered(n, &refs)
        })
    })
}

/// A nonempty subset of the vertices of `h`, chosen by `mask`.
pub fn subset(h: &Dihypergraph, mask: u64) -> VertexSet {
    let vs = h.vertices().to_vec();
    let mut s: VertexSet = vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| *v).collect();
    if s.is_empty() {
        s.insert(vs[(mask as usize) % vs.len()]);
    }
    s
}

/// Direct recursive construction: peel the component of the smallest
/// vertex, recompute everything on the two induced parts. Nodes are
/// numbered in preorder.
pub fn literal_tree(h: &Dihypergraph, factors: bool) -> Option<Tree> {
    let mut nodes = Vec::new();
    literal_node(h, factors, &mut nodes)?;
    Some(Tree::from_parts(h.universe().clone(), nodes, NodeId(0)).expect("well-formed arena"))
}

fn literal_node(h: &Dihypergraph, factors: bool, nodes: &mut Vec<Node>) -> Option<NodeId> {
    let id = NodeId(nodes.len() as u32);
    if h.vertex_count() == 1 {
        nodes.push(Node::Leaf(h.vertices().min().unwrap()));
        return Some(id);
    }
    let comps = body_connected_components(h);
    if comps.len() == 1 {
        if !factors {
            return None;
        }
        nodes.push(Node::Factor(h.clone()));
        return Some(id);
    }
    let c = comps.blocks()[0].clone();
    let rest = h.vertices().difference(&c);
    let label = h.bipartite_part(&c, &rest).unwrap();
    nodes.push(Node::Internal { label, left: NodeId(0), right: NodeId(0) });
    let l = literal_node(&h.induced(&c).unwrap(), factors, nodes)?;
    let r = literal_node(&h.induced(&rest).unwrap(), factors, nodes)?;
    if let Node::Internal { left, right, .. } = &mut nodes[id.index()] {
        *left = l;
        *right = r;
    }
    Some(id)
}
