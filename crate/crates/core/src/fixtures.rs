//! Small named instances and random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dihypergraph::Dihypergraph;
use crate::vertex_set::VertexSet;

fn build(n: usize, edges: &[(&[usize], usize)]) -> Dihypergraph {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges = edges
        .iter()
        .map(|(b, h)| (b.iter().map(|i| i.to_string()).collect::<Vec<_>>(), h.to_string()));
    Dihypergraph::new(names, edges).expect("fixture is well formed")
}

/// Vertices `1..=n`, edges given as `(body, head)` over those numbers.
pub fn numbered(n: usize, edges: &[(&[usize], usize)]) -> Dihypergraph {
    build(n, edges)
}

/// `([7], {(12,3), (3,1), (56,2), (23,7), (45,6), (5,7)})`: split by
/// `{1,2,3} | {4,5,6,7}` but not by `{1,3} | {2,4,5,6,7}`.
pub fn split_example() -> Dihypergraph {
    build(
        7,
        &[(&[1, 2], 3), (&[3], 1), (&[5, 6], 2), (&[2, 3], 7), (&[4, 5], 6), (&[5], 7)],
    )
}

/// `([3], {(12,3), (13,2)})`: body-connected, has no split.
pub fn body_connected_triangle() -> Dihypergraph {
    build(3, &[(&[1, 2], 3), (&[1, 3], 2)])
}

/// `([8], {(12,3), (23,4), (34,5), (56,7), (67,8)})`: decomposable in
/// several different ways.
pub fn two_chains() -> Dihypergraph {
    build(8, &[(&[1, 2], 3), (&[2, 3], 4), (&[3, 4], 5), (&[5, 6], 7), (&[6, 7], 8)])
}

/// `([3], {(2,1), (13,2)})`: its closure system is a meet-sublattice but not
/// a sublattice of the product over its only split `{1,3} | {2}`.
pub fn non_sublattice_example() -> Dihypergraph {
    build(3, &[(&[2], 1), (&[1, 3], 2)])
}

pub fn edgeless(n: usize) -> Dihypergraph {
    build(n, &[])
}

/// Two edgeless sides `1..=k` and `k+1..=2k`; every pair of distinct
/// vertices on one side implies every vertex of the other side.
///
/// Returns the dihypergraph with both sides.
pub fn cross_complete(k: usize) -> (Dihypergraph, VertexSet, VertexSet) {
    let left: Vec<usize> = (1..=k).collect();
    let right: Vec<usize> = (k + 1..=2 * k).collect();
    let mut edges: Vec<(Vec<usize>, usize)> = Vec::new();
    for (from, to) in [(&left, &right), (&right, &left)] {
        for (i, &a) in from.iter().enumerate() {
            for &b in &from[i + 1..] {
                for &t in to.iter() {
                    edges.push((vec![a, b], t));
                }
            }
        }
    }
    let refs: Vec<(&[usize], usize)> = edges.iter().map(|(b, h)| (b.as_slice(), *h)).collect();
    let h = build(2 * k, &refs);
    let u1 = h.vertex_set(left.iter().map(|i| i.to_string())).unwrap();
    let u2 = h.vertex_set(right.iter().map(|i| i.to_string())).unwrap();
    (h, u1, u2)
}

fn random_edge<R: Rng>(rng: &mut R, pool: &[usize], heads: &[usize], max_body: usize) -> (Vec<usize>, usize) {
    let head = *heads.choose(rng).unwrap();
    let candidates: Vec<usize> = pool.iter().copied().filter(|&v| v != head).collect();
    let k = rng.gen_range(1..=max_body.min(candidates.len()).max(1));
    let body = candidates.choose_multiple(rng, k).copied().collect();
    (body, head)
}

/// Uniformly random dihypergraph on `1..=n` with `m` edge draws (duplicates
/// collapse) and body sizes in `1..=max_body`.
pub fn random<R: Rng>(rng: &mut R, n: usize, m: usize, max_body: usize) -> Dihypergraph {
    let all: Vec<usize> = (1..=n).collect();
    let edges: Vec<(Vec<usize>, usize)> = if n < 2 {
        Vec::new()
    } else {
        (0..m).map(|_| random_edge(rng, &all, &all, max_body)).collect()
    };
    from_numbered(n, &edges)
}

/// Random digraph with `m` unit edges on `n` vertices.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Dihypergraph {
    assert!(n >= 2);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let a = rng.gen_range(1..=n);
        let mut b = rng.gen_range(1..n);
        if b >= a {
            b += 1;
        }
        edges.push((vec![a], b));
    }
    from_numbered(n, &edges)
}

/// Random H-decomposable dihypergraph: a random binary hierarchy over
/// `1..=n` is drawn first, and each edge draw picks a node of it, puts the
/// body on one side and the head on the other.
pub fn random_decomposable<R: Rng>(rng: &mut R, n: usize, m: usize, max_body: usize) -> Dihypergraph {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    let mut splits: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut stack = vec![all];
    while let Some(part) = stack.pop() {
        if part.len() < 2 {
            continue;
        }
        let cut = rng.gen_range(1..part.len());
        let (a, b) = (part[..cut].to_vec(), part[cut..].to_vec());
        splits.push((a.clone(), b.clone()));
        stack.push(a);
        stack.push(b);
    }
    let mut edges = Vec::new();
    if !splits.is_empty() {
        for _ in 0..m {
            let (a, b) = splits.choose(rng).unwrap();
            let (body_side, head_side) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            let k = rng.gen_range(1..=max_body.min(body_side.len()));
            let body: Vec<usize> = body_side.choose_multiple(rng, k).copied().collect();
            edges.push((body, *head_side.choose(rng).unwrap()));
        }
    }
    from_numbered(n, &edges)
}

/// Which crossing edges a [`random_with_split`] instance receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    /// No crossing edge at all.
    None,
    /// Crossing bodies lie in the first part, heads in the second.
    FromFirst,
    /// Crossing bodies lie in the second part, heads in the first.
    FromSecond,
    /// Crossing edges in both directions.
    Both,
}

/// Random instance built around the split `1..=n1 | n1+1..=n1+n2`: each part
/// gets `inner` random internal edges, and `crossing` edges are added per
/// `kind`.
pub fn random_with_split<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    inner: usize,
    crossing: usize,
    kind: Crossing,
    max_body: usize,
) -> (Dihypergraph, VertexSet, VertexSet) {
    let left: Vec<usize> = (1..=n1).collect();
    let right: Vec<usize> = (n1 + 1..=n1 + n2).collect();
    let mut edges = Vec::new();
    for side in [&left, &right] {
        if side.len() >= 2 {
            for _ in 0..inner {
                edges.push(random_edge(rng, side, side, max_body));
            }
        }
    }
    for _ in 0..crossing {
        let forward = match kind {
            Crossing::None => break,
            Crossing::FromFirst => true,
            Crossing::FromSecond => false,
            Crossing::Both => rng.gen_bool(0.5),
        };
        let (from, to) = if forward { (&left, &right) } else { (&right, &left) };
        let k = rng.gen_range(1..=max_body.min(from.len()));
        let body: Vec<usize> = from.choose_multiple(rng, k).copied().collect();
        edges.push((body, *to.choose(rng).unwrap()));
    }
    let h = from_numbered(n1 + n2, &edges);
    let u1 = h.vertex_set(left.iter().map(|i| i.to_string())).unwrap();
    let u2 = h.vertex_set(right.iter().map(|i| i.to_string())).unwrap();
    (h, u1, u2)
}

fn from_numbered(n: usize, edges: &[(Vec<usize>, usize)]) -> Dihypergraph {
    let refs: Vec<(&[usize], usize)> = edges.iter().map(|(b, h)| (b.as_slice(), *h)).collect();
    build(n, &refs)
}
