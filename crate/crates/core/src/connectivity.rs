//! Body-connectivity.
//!
//! Two vertices are body-connected when a sequence of edges links them such
//! that consecutive vertices share a body. Heads play no role, and neither
//! do unit edges (a singleton body links nothing).

use std::collections::VecDeque;

use crate::dihypergraph::{Dihypergraph, Edge};
use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

/// Disjoint-set forest with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
            rank: vec![0; len],
        }
    }

    /// Makes `i` a singleton again. Callers must reset every element of a
    /// set together.
    pub(crate) fn reset(&mut self, i: usize) {
        self.parent[i] = i as u32;
        self.rank[i] = 0;
    }

    pub fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = i;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; returns false if they were already
    /// merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb as u32,
            std::cmp::Ordering::Greater => self.parent[rb] = ra as u32,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra as u32;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Disjoint vertex blocks covering a vertex set, ordered by their smallest
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Sorts `blocks` into canonical order. Blocks must be nonempty and
    /// pairwise disjoint.
    pub fn from_blocks(mut blocks: Vec<VertexSet>) -> Self {
        blocks.sort_by_key(|b| b.min());
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: VertexId) -> Option<&VertexSet> {
        self.blocks.iter().find(|b| b.contains(v))
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.blocks
    }
}

/// Body-connected components of `h`, in canonical order.
pub fn body_connected_components(h: &Dihypergraph) -> Partition {
    let n = h.universe().len();
    let mut uf = UnionFind::new(n);
    for e in h.edges() {
        let body = e.body();
        for w in &body[1..] {
            uf.union(body[0].index(), w.index());
        }
    }
    let mut slot = vec![u32::MAX; n];
    let mut blocks: Vec<VertexSet> = Vec::new();
    for v in h.vertices() {
        let r = uf.find(v.index());
        if slot[r] == u32::MAX {
            slot[r] = blocks.len() as u32;
            blocks.push(VertexSet::new());
        }
        blocks[slot[r] as usize].insert(v);
    }
    // vertices are visited in ascending order, so blocks already are canonical
    Partition { blocks }
}

pub fn is_body_connected(h: &Dihypergraph) -> bool {
    body_connected_components(h).len() == 1
}

/// Alternating vertex/edge sequence where consecutive vertices both belong
/// to the body of the edge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl BodyPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A shortest body-path from `from` to `to`, if they are body-connected.
/// The path from a vertex to itself has no edges.
pub fn body_path(h: &Dihypergraph, from: VertexId, to: VertexId) -> Result<Option<BodyPath>> {
    for v in [from, to] {
        if !h.vertices().contains(v) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
    }
    if from == to {
        return Ok(Some(BodyPath { vertices: vec![from], edges: vec![] }));
    }
    let n = h.universe().len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        if e.body().len() >= 2 {
            for v in e.body() {
                incident[v.index()].push(i);
            }
        }
    }
    let mut pred: Vec<Option<(VertexId, usize)>> = vec![None; n];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &ei in &incident[v.index()] {
            for &w in h.edges()[ei].body() {
                if seen.insert(w) {
                    pred[w.index()] = Some((v, ei));
                    if w == to {
                        return Ok(Some(unwind(h, &pred, from, to)));
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(None)
}

fn unwind(h: &Dihypergraph, pred: &[Option<(VertexId, usize)>], from: VertexId, to: VertexId) -> BodyPath {
    let mut vertices = vec![to];
    let mut edges = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, ei) = pred[cur.index()].expect("predecessor recorded during search");
        edges.push(h.edges()[ei].clone());
        vertices.push(p);
        cur = p;
    }
    vertices.reverse();
    edges.reverse();
    BodyPath { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(h: &Dihypergraph, p: &Partition) -> Vec<Vec<String>> {
        p.blocks().iter().map(|b| h.universe().set_names(b)).collect()
    }

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(uf.union(3, 4));
        assert!(!uf.union(1, 0));
        assert_eq!(uf.find(0), uf.find(1));
        assert_ne!(uf.find(0), uf.find(3));
        assert!(uf.union(1, 4));
        assert_eq!(uf.find(0), uf.find(3));
    }

    #[test]
    fn split_example_components() {
        let h = fixtures::split_example();
        let p = body_connected_components(&h);
        assert_eq!(names(&h, &p), vec![vec!["1", "2", "3"], vec!["4", "5", "6"], vec!["7"]]);
        assert!(!is_body_connected(&h));
    }

    #[test]
    fn triangle_is_connected() {
        let h = fixtures::body_connected_triangle();
        assert_eq!(body_connected_components(&h).len(), 1);
        assert!(is_body_connected(&h));
        assert!(is_body_connected(&fixtures::edgeless(1)));
    }

    #[test]
    fn digraph_components_are_singletons() {
        let h = fixtures::numbered(4, &[(&[1], 2), (&[2], 3)]);
        assert_eq!(body_connected_components(&h).len(), 4);
    }

    #[test]
    fn body_paths() {
        let h = fixtures::split_example();
        let v = |n: &str| h.vertex(n).unwrap();
        let p = body_path(&h, v("4"), v("6")).unwrap().unwrap();
        assert_eq!(p.vertices, vec![v("4"), v("5"), v("6")]);
        let shown: Vec<String> = p.edges.iter().map(|e| h.display_edge(e).to_string()).collect();
        assert_eq!(shown, vec!["4 5 -> 6", "5 6 -> 2"]);
        assert_eq!(body_path(&h, v("1"), v("5")).unwrap(), None);
        let same = body_path(&h, v("3"), v("3")).unwrap().unwrap();
        assert!(same.is_empty());
        assert!(body_path(&h, v("1"), VertexId(99)).is_err());
    }
}
