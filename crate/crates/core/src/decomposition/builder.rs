//! Tree construction.
//!
//! The recursive formulation peels off the body-connected component `C`
//! that holds the smallest vertex, builds `H[C]` as the left child and
//! `H[U ∖ C]` as the right child. Recomputing the components of
//! `H[U ∖ C]` from scratch along the right spine is quadratic (a digraph
//! peels one vertex at a time), so each frame here keeps the components of
//! its remaining vertex set as blocks and only recomputes a block when an
//! edge whose body lies in it lost its head to a peeled component. Removing
//! vertices only removes edges, so components can only split, and a block
//! that lost no edge is still a component.
//!
//! Every vertex carries the id of the innermost frame that owns it. An edge
//! is alive in a frame iff all of its vertices carry that frame's id.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::tree::{Node, NodeId, Tree};
use crate::connectivity::UnionFind;
use crate::dihypergraph::{Dihypergraph, Edge};
use crate::vertex_set::{VertexId, VertexSet};

const PENDING: NodeId = NodeId(u32::MAX);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Stop at the first body-connected subhypergraph.
    Strict,
    /// Keep body-connected subhypergraphs as factor leaves.
    Factors,
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Root,
    Left(NodeId),
    Right(NodeId),
}

/// Compressed per-vertex edge lists.
struct Incidence {
    offsets: Vec<u32>,
    items: Vec<u32>,
}

impl Incidence {
    fn build(n: usize, edges: &[Edge], select: impl Fn(&Edge) -> Vec<VertexId>) -> Self {
        let lists: Vec<Vec<VertexId>> = edges.iter().map(select).collect();
        let mut offsets = vec![0u32; n + 1];
        for l in &lists {
            for v in l {
                offsets[v.index() + 1] += 1;
            }
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut items = vec![0u32; offsets[n] as usize];
        for (e, l) in lists.iter().enumerate() {
            for v in l {
                items[fill[v.index()] as usize] = e as u32;
                fill[v.index()] += 1;
            }
        }
        Incidence { offsets, items }
    }

    #[inline]
    fn of(&self, v: VertexId) -> &[u32] {
        &self.items[self.offsets[v.index()] as usize..self.offsets[v.index() + 1] as usize]
    }
}

struct Block {
    vertices: Vec<VertexId>,
    dirty: bool,
}

struct Frame {
    scope: u32,
    blocks: Vec<Block>,
    /// (smallest vertex, block index)
    heap: BinaryHeap<Reverse<(VertexId, u32)>>,
    remaining: usize,
    slot: Slot,
}

pub(crate) struct Builder<'a> {
    h: &'a Dihypergraph,
    edges: &'a [Edge],
    body_inc: Incidence,
    head_inc: Incidence,
    scope: Vec<u32>,
    block_of: Vec<u32>,
    uf: UnionFind,
    group_stamp: Vec<u32>,
    group_slot: Vec<u32>,
    stamp: u32,
    edge_mark: Vec<u32>,
    peel: u32,
    next_scope: u32,
    nodes: Vec<Node>,
    root: NodeId,
    mode: Mode,
}

impl<'a> Builder<'a> {
    pub(crate) fn new(h: &'a Dihypergraph, mode: Mode) -> Self {
        let n = h.universe().len();
        let edges = h.edges();
        let mut scope = vec![u32::MAX; n];
        for v in h.vertices() {
            scope[v.index()] = 0;
        }
        Builder {
            h,
            edges,
            body_inc: Incidence::build(n, edges, |e| e.body().to_vec()),
            head_inc: Incidence::build(n, edges, |e| vec![e.head()]),
            scope,
            block_of: vec![0; n],
            uf: UnionFind::new(n),
            group_stamp: vec![0; n],
            group_slot: vec![0; n],
            stamp: 0,
            edge_mark: vec![0; edges.len()],
            peel: 0,
            next_scope: 1,
            nodes: Vec::new(),
            root: PENDING,
            mode,
        }
    }

    /// Builds the tree, or returns the first body-connected vertex set
    /// (with at least two vertices) met in strict mode.
    pub(crate) fn run(mut self) -> Result<Tree, VertexSet> {
        let all: Vec<VertexId> = self.h.vertices().iter().collect();
        let mut stack: Vec<Frame> = Vec::new();
        self.open(all, 0, Slot::Root, &mut stack)?;

        while let Some(frame) = stack.last_mut() {
            let Reverse((_, b)) = frame.heap.pop().expect("a frame always holds its remaining vertices");
            let b = b as usize;
            if frame.blocks[b].dirty {
                let verts = std::mem::take(&mut frame.blocks[b].vertices);
                let pieces = self.components(&verts, frame.scope);
                if pieces.len() == 1 {
                    frame.blocks[b] = Block { vertices: verts, dirty: false };
                    frame.heap.push(Reverse((frame.blocks[b].vertices[0], b as u32)));
                } else {
                    for p in pieces {
                        let idx = frame.blocks.len() as u32;
                        for v in &p {
                            self.block_of[v.index()] = idx;
                        }
                        frame.heap.push(Reverse((p[0], idx)));
                        frame.blocks.push(Block { vertices: p, dirty: false });
                    }
                }
                continue;
            }

            let component = std::mem::take(&mut frame.blocks[b].vertices);
            if component.len() == frame.remaining {
                let (slot, scope) = (frame.slot, frame.scope);
                stack.pop();
                if component.len() == 1 {
                    self.place(slot, Node::Leaf(component[0]));
                } else {
                    self.indecomposable(component, scope, slot)?;
                }
                continue;
            }

            let outer = frame.scope;
            let inner = self.next_scope;
            self.next_scope += 1;
            for v in &component {
                self.scope[v.index()] = inner;
            }
            let label = self.peel_label(&component, outer, inner, &mut frame.blocks);
            let id = self.place(frame.slot, Node::Internal { label, left: PENDING, right: PENDING });
            frame.slot = Slot::Right(id);
            frame.remaining -= component.len();
            self.open(component, inner, Slot::Left(id), &mut stack)?;
        }

        debug_assert!(self.root != PENDING);
        Ok(Tree::from_raw(self.h.universe().clone(), self.nodes, self.root))
    }

    /// Starts the construction for `verts`, all of which carry `scope`.
    fn open(&mut self, verts: Vec<VertexId>, scope: u32, slot: Slot, stack: &mut Vec<Frame>) -> Result<(), VertexSet> {
        if verts.len() == 1 {
            self.place(slot, Node::Leaf(verts[0]));
            return Ok(());
        }
        let pieces = self.components(&verts, scope);
        if pieces.len() == 1 {
            return self.indecomposable(verts, scope, slot);
        }
        let mut frame = Frame {
            scope,
            blocks: Vec::with_capacity(pieces.len()),
            heap: BinaryHeap::with_capacity(pieces.len()),
            remaining: verts.len(),
            slot,
        };
        for (idx, p) in pieces.into_iter().enumerate() {
            for v in &p {
                self.block_of[v.index()] = idx as u32;
            }
            frame.heap.push(Reverse((p[0], idx as u32)));
            frame.blocks.push(Block { vertices: p, dirty: false });
        }
        stack.push(frame);
        Ok(())
    }

    fn indecomposable(&mut self, verts: Vec<VertexId>, scope: u32, slot: Slot) -> Result<(), VertexSet> {
        match self.mode {
            Mode::Strict => Err(verts.into_iter().collect()),
            Mode::Factors => {
                let mut edges = Vec::new();
                for &v in &verts {
                    for &e in self.body_inc.of(v) {
                        let edge = &self.edges[e as usize];
                        if edge.body()[0] == v && edge.vertices().all(|u| self.scope[u.index()] == scope) {
                            edges.push(edge.clone());
                        }
                    }
                }
                let sub = Dihypergraph::from_parts(self.h.universe().clone(), verts.into_iter().collect(), edges)
                    .expect("edges of an induced subhypergraph");
                self.place(slot, Node::Factor(sub));
                Ok(())
            }
        }
    }

    fn place(&mut self, slot: Slot, node: Node) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(node);
        match slot {
            Slot::Root => self.root = id,
            Slot::Left(p) => {
                if let Node::Internal { left, .. } = &mut self.nodes[p.index()] {
                    *left = id;
                }
            }
            Slot::Right(p) => {
                if let Node::Internal { right, .. } = &mut self.nodes[p.index()] {
                    *right = id;
                }
            }
        }
        id
    }

    /// Body-connected components of the vertices `verts` (sorted, all in
    /// `scope`), using only edges alive in `scope`. Pieces come out sorted
    /// by smallest vertex.
    fn components(&mut self, verts: &[VertexId], scope: u32) -> Vec<Vec<VertexId>> {
        for v in verts {
            self.uf.reset(v.index());
        }
        for &v in verts {
            for &e in self.body_inc.of(v) {
                let edge = &self.edges[e as usize];
                let body = edge.body();
                if body.len() < 2 || body[0] != v || self.scope[edge.head().index()] != scope {
                    continue;
                }
                if body[1..].iter().any(|u| self.scope[u.index()] != scope) {
                    continue;
                }
                for u in &body[1..] {
                    self.uf.union(v.index(), u.index());
                }
            }
        }
        self.stamp += 1;
        let mut pieces: Vec<Vec<VertexId>> = Vec::new();
        for &v in verts {
            let r = self.uf.find(v.index());
            if self.group_stamp[r] != self.stamp {
                self.group_stamp[r] = self.stamp;
                self.group_slot[r] = pieces.len() as u32;
                pieces.push(Vec::new());
            }
            pieces[self.group_slot[r] as usize].push(v);
        }
        pieces
    }

    /// Edges between the peeled component (now in scope `inner`) and the
    /// rest of the frame (scope `outer`). Blocks holding the body of an
    /// edge whose head was just peeled are marked dirty.
    fn peel_label(&mut self, component: &[VertexId], outer: u32, inner: u32, blocks: &mut [Block]) -> Vec<Edge> {
        self.peel += 1;
        let mut picked: Vec<u32> = Vec::new();
        for &v in component {
            for &e in self.body_inc.of(v).iter().chain(self.head_inc.of(v)) {
                if self.edge_mark[e as usize] == self.peel {
                    continue;
                }
                self.edge_mark[e as usize] = self.peel;
                let edge = &self.edges[e as usize];
                let mut crosses = false;
                let mut alive = true;
                for u in edge.vertices() {
                    let s = self.scope[u.index()];
                    if s == outer {
                        crosses = true;
                    } else if s != inner {
                        alive = false;
                        break;
                    }
                }
                if alive && crosses {
                    picked.push(e);
                    let body = edge.body();
                    if body.len() >= 2 && self.scope[edge.head().index()] == inner {
                        blocks[self.block_of[body[0].index()] as usize].dirty = true;
                    }
                }
            }
        }
        picked.sort_unstable();
        picked.into_iter().map(|e| self.edges[e as usize].clone()).collect()
    }
}
