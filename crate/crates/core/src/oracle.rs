//! Brute-force reference implementations for small instances.
//!
//! These work on bitmasks over the vertex list and share no code with the
//! connectivity, decomposition or closure modules, so they can be used to
//! cross-check them.

use std::collections::{HashMap, VecDeque};

use crate::closure::ClosureSystem;
use crate::connectivity::Partition;

use crate::dihypergraph::Dihypergraph;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

pub const COMPONENT_LIMIT: usize = 12;
pub const SPLIT_LIMIT: usize = 12;
pub const DECOMPOSABLE_LIMIT: usize = 8;
pub const CLOSED_SETS_LIMIT: usize = 12;

/// Edges as (body mask, head bit) over the positions of the vertex list.
struct Masks {
    vertices: Vec<VertexId>,
    edges: Vec<(u32, u32)>,
}

impl Masks {
    fn new(h: &Dihypergraph, limit: usize) -> Result<Self> {
        let size = h.vertex_count();
        if size > limit {
            return Err(Error::InstanceTooLarge { size, limit });
        }
        let vertices = h.vertices().to_vec();
        let bit = |v: VertexId| 1u32 << vertices.iter().position(|&u| u == v).expect("edge vertex");
        let edges = h
            .edges()
            .iter()
            .map(|e| (e.body().iter().fold(0, |m, &v| m | bit(v)), bit(e.head())))
            .collect();
        Ok(Masks { vertices, edges })
    }

    fn full(&self) -> u32 {
        ((1u64 << self.vertices.len()) - 1) as u32
    }

    fn to_set(&self, mask: u32) -> VertexSet {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Breadth-first search on the graph joining two vertices when some
    /// body holds both.
    fn components(&self) -> Vec<u32> {
        let n = self.vertices.len();
        let mut adjacent = vec![0u32; n];
        for &(b, _) in &self.edges {
            if b.count_ones() >= 2 {
                for (i, a) in adjacent.iter_mut().enumerate() {
                    if b >> i & 1 == 1 {
                        *a |= b & !(1 << i);
                    }
                }
            }
        }
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << start;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    if adjacent[v] >> w & 1 == 1 && comp >> w & 1 == 0 {
                        comp |= 1 << w;
                        queue.push_back(w);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn splits(&self, u1: u32, u2: u32) -> bool {
        self.edges.iter().all(|&(b, _)| b & !u1 == 0 || b & !u2 == 0)
    }
}

/// Body-connected components, each as a vertex set, in order of smallest
/// vertex.
pub fn oracle_body_components(h: &Dihypergraph) -> Result<Partition> {
    let m = Masks::new(h, COMPONENT_LIMIT)?;
    Ok(Partition::from_blocks(m.components().into_iter().map(|c| m.to_set(c)).collect()))
}

/// The first split found by scanning all bipartitions `(U1, U2)` with the
/// smallest vertex in `U1`, in increasing order of the mask of `U1`.
pub fn oracle_has_split(h: &Dihypergraph) -> Result<Option<(VertexSet, VertexSet)>> {
    let m = Masks::new(h, SPLIT_LIMIT)?;
    let full = m.full();
    let n = m.vertices.len();
    if n < 2 {
        return Ok(None);
    }
    for rest in 0..(1u32 << (n - 1)) - 1 {
        let u1 = 1 | rest << 1;
        let u2 = full & !u1;
        if m.splits(u1, u2) {
            return Ok(Some((m.to_set(u1), m.to_set(u2))));
        }
    }
    Ok(None)
}

/// Whether an H-tree exists, by trying every split at every level.
pub fn oracle_is_hdecomposable(h: &Dihypergraph) -> Result<bool> {
    let m = Masks::new(h, DECOMPOSABLE_LIMIT)?;
    let mut memo = HashMap::new();
    Ok(decomposable(&m, m.full(), &mut memo))
}

fn decomposable(m: &Masks, set: u32, memo: &mut HashMap<u32, bool>) -> bool {
    if set.count_ones() <= 1 {
        return true;
    }
    if let Some(&r) = memo.get(&set) {
        return r;
    }
    let low = set & set.wrapping_neg();
    let others = set & !low;
    let mut result = false;
    // Enumerate every proper subset of `others` to join `low` on one side.
    let mut sub = others;
    loop {
        let u1 = low | sub;
        if u1 != set {
            let u2 = set & !u1;
            let inside = |e: &&(u32, u32)| (e.0 | e.1) & !set == 0;
            let ok = m
                .edges
                .iter()
                .filter(inside)
                .all(|&(b, _)| b & !u1 == 0 || b & !u2 == 0);
            if ok && decomposable(m, u1, memo) && decomposable(m, u2, memo) {
                result = true;
                break;
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
    memo.insert(set, result);
    result
}

/// Every subset of the vertex set that is closed under the edges.
pub fn oracle_closed_sets(h: &Dihypergraph) -> Result<ClosureSystem> {
    let m = Masks::new(h, CLOSED_SETS_LIMIT)?;
    let sets = (0..=m.full())
        .filter(|&f| m.edges.iter().all(|&(b, hd)| b & !f != 0 || hd & f != 0))
        .map(|f| m.to_set(f))
        .collect();
    Ok(ClosureSystem::from_family(h.universe().clone(), h.vertices().clone(), sets))
}
