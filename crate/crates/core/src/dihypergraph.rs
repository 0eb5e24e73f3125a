//! Directed hypergraphs whose edges have a set-valued body and a single head.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

/// Interned vertex names.
///
/// A universe is shared (via `Arc`) by a dihypergraph and everything
/// derived from it: induced subhypergraphs, trees and closure systems all
/// speak about the same `VertexId`s.
#[derive(Debug, Default)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl Universe {
    fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = VertexId(self.names.len() as u32);
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), v);
        v
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn display_set<'a>(&'a self, set: &'a VertexSet) -> SetDisplay<'a> {
        SetDisplay { universe: self, set }
    }

    pub fn display_edge<'a>(&'a self, edge: &'a Edge) -> EdgeDisplay<'a> {
        EdgeDisplay { universe: self, edge }
    }

    pub fn set_names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.name(v).to_owned()).collect()
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

/// Two handles denote the same universe when they are the same allocation
/// or intern the same names in the same order.
pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// A hyperedge `(body, head)`. The body is nonempty, sorted, duplicate-free
/// and does not contain the head.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    body: Box<[VertexId]>,
    head: VertexId,
}

impl Edge {
    /// Builds an edge from raw ids. Returns `None` if the body is empty or
    /// contains the head.
    pub fn new(body: impl IntoIterator<Item = VertexId>, head: VertexId) -> Option<Edge> {
        let mut body: Vec<VertexId> = body.into_iter().collect();
        body.sort_unstable();
        body.dedup();
        if body.is_empty() || body.binary_search(&head).is_ok() {
            return None;
        }
        Some(Edge { body: body.into_boxed_slice(), head })
    }

    pub fn body(&self) -> &[VertexId] {
        &self.body
    }

    pub fn head(&self) -> VertexId {
        self.head
    }

    pub fn is_unit(&self) -> bool {
        self.body.len() == 1
    }

    /// Body followed by head.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.body.iter().copied().chain(std::iter::once(self.head))
    }

    /// Whether `body ∪ {head}` is contained in `set`.
    pub fn is_within(&self, set: &VertexSet) -> bool {
        set.contains(self.head) && set.contains_all(self.body.iter())
    }

    pub fn body_within(&self, set: &VertexSet) -> bool {
        set.contains_all(self.body.iter())
    }
}

/// A dihypergraph `(U, E)`. Immutable once built.
#[derive(Debug, Clone)]
pub struct Dihypergraph {
    universe: Arc<Universe>,
    vertices: VertexSet,
    edges: Vec<Edge>,
}

impl Dihypergraph {
    /// Builds a dihypergraph from vertex names and `(body names, head name)`
    /// pairs. Duplicate vertices and duplicate edges collapse.
    pub fn new<V, B, S, I>(vertices: V, edges: I) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        I: IntoIterator<Item = (B, S)>,
        B: IntoIterator<Item = S>,
    {
        let mut universe = Universe::default();
        for name in vertices {
            universe.intern(name.as_ref());
        }
        if universe.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut parsed = Vec::new();
        for (body, head) in edges {
            let head_name = head.as_ref();
            let h = universe
                .lookup(head_name)
                .ok_or_else(|| Error::UnknownVertex(head_name.to_owned()))?;
            let mut b = Vec::new();
            for name in body {
                let name = name.as_ref();
                b.push(universe.lookup(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))?);
            }
            if b.is_empty() {
                return Err(Error::EmptyBody { head: head_name.to_owned() });
            }
            let edge = Edge::new(b, h).ok_or_else(|| Error::HeadInBody { head: head_name.to_owned() })?;
            parsed.push(edge);
        }
        let vertices = (0..universe.len()).map(VertexId::from).collect();
        Ok(Self::assemble(Arc::new(universe), vertices, parsed))
    }

    /// Builds a dihypergraph over an existing universe.
    pub fn from_parts(universe: Arc<Universe>, vertices: VertexSet, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(v) = vertices.iter().find(|v| v.index() >= universe.len()) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        for e in &edges {
            if let Some(v) = e.vertices().find(|&v| !vertices.contains(v)) {
                let name = universe.names.get(v.index()).cloned().unwrap_or_else(|| format!("#{}", v.0));
                return Err(Error::UnknownVertex(name));
            }
        }
        Ok(Self::assemble(universe, vertices, edges))
    }

    fn assemble(universe: Arc<Universe>, vertices: VertexSet, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Dihypergraph { universe, vertices, edges }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn name(&self, v: VertexId) -> &str {
        self.universe.name(v)
    }

    /// Looks up a vertex of this dihypergraph by name.
    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.universe.lookup(name).filter(|&v| self.vertices.contains(v))
    }

    /// Resolves a list of names to a vertex set of this dihypergraph.
    pub fn vertex_set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<VertexSet> {
        names
            .into_iter()
            .map(|n| self.vertex(n.as_ref()).ok_or_else(|| Error::UnknownVertex(n.as_ref().to_owned())))
            .collect()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in canonical order (body lexicographic, then head).
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_digraph(&self) -> bool {
        self.edges.iter().all(Edge::is_unit)
    }

    /// `|U| + Σ |B(e)| + 1`.
    pub fn size(&self) -> usize {
        self.vertex_count() + self.edges.iter().map(|e| e.body.len()).sum::<usize>() + 1
    }

    pub(crate) fn check_subset(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| !self.vertices.contains(v)) {
            Some(v) => Err(Error::UnknownVertex(self.describe(v))),
            None => Ok(()),
        }
    }

    fn describe(&self, v: VertexId) -> String {
        self.universe.names.get(v.index()).cloned().unwrap_or_else(|| format!("#{}", v.0))
    }

    /// The subhypergraph induced by `subset`: its edges are those of `self`
    /// contained in `subset`.
    pub fn induced(&self, subset: &VertexSet) -> Result<Dihypergraph> {
        if subset.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_subset(subset)?;
        let edges = self.edges.iter().filter(|e| e.is_within(subset)).cloned().collect();
        Ok(Dihypergraph {
            universe: self.universe.clone(),
            vertices: subset.clone(),
            edges,
        })
    }

    pub(crate) fn check_bipartition(&self, u1: &VertexSet, u2: &VertexSet) -> Result<()> {
        self.check_subset(u1)?;
        self.check_subset(u2)?;
        if u1.is_empty() || u2.is_empty() {
            return Err(Error::NotABipartition("both parts must be nonempty".into()));
        }
        if !u1.is_disjoint(u2) {
            return Err(Error::NotABipartition("parts overlap".into()));
        }
        if u1.len() + u2.len() != self.vertex_count() {
            return Err(Error::NotABipartition("parts do not cover the vertex set".into()));
        }
        Ok(())
    }

    /// Edges contained in neither part of the bipartition `(u1, u2)`.
    pub fn bipartite_part(&self, u1: &VertexSet, u2: &VertexSet) -> Result<Vec<Edge>> {
        self.check_bipartition(u1, u2)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| !e.is_within(u1) && !e.is_within(u2))
            .cloned()
            .collect())
    }

    pub fn display_edge<'a>(&'a self, e: &'a Edge) -> EdgeDisplay<'a> {
        self.universe.display_edge(e)
    }

    pub fn display_set<'a>(&'a self, s: &'a VertexSet) -> SetDisplay<'a> {
        self.universe.display_set(s)
    }
}

impl PartialEq for Dihypergraph {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe)
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for Dihypergraph {}

pub struct EdgeDisplay<'a> {
    universe: &'a Universe,
    edge: &'a Edge,
}

impl fmt::Display for EdgeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.edge.body.iter() {
            write!(f, "{} ", self.universe.name(*v))?;
        }
        write!(f, "-> {}", self.universe.name(self.edge.head))
    }
}

pub struct SetDisplay<'a> {
    universe: &'a Universe,
    set: &'a VertexSet,
}

impl fmt::Display for SetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.universe.name(v))?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn edge(h: &Dihypergraph, body: &[&str], head: &str) -> Edge {
        Edge::new(body.iter().map(|n| h.vertex(n).unwrap()), h.vertex(head).unwrap()).unwrap()
    }

    #[test]
    fn split_example_shape() {
        let h = fixtures::split_example();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.edges().len(), 6);
        assert_eq!(h.size(), 18);
    }

    #[test]
    fn single_vertex() {
        let h = Dihypergraph::new(["1"], Vec::<(Vec<&str>, &str)>::new()).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert!(h.is_edgeless());
        assert_eq!(h.size(), 2);
    }

    #[test]
    fn duplicates_collapse() {
        let h = Dihypergraph::new(["1", "2", "3", "2"], [(vec!["1", "3"], "2"), (vec!["3", "1"], "2")]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges().len(), 1);
        let h = Dihypergraph::new(["1", "2", "3"], [(vec!["1", "2"], "3")]).unwrap();
        assert_eq!(h.size(), 6);
    }

    #[test]
    fn construction_errors() {
        let none: Vec<(Vec<&str>, &str)> = vec![];
        assert_eq!(Dihypergraph::new(Vec::<&str>::new(), none), Err(Error::EmptyVertexSet));
        assert_eq!(
            Dihypergraph::new(["1", "2"], [(vec!["1", "2"], "2")]),
            Err(Error::HeadInBody { head: "2".into() })
        );
        assert_eq!(
            Dihypergraph::new(["1", "2"], [(vec![], "2")]),
            Err(Error::EmptyBody { head: "2".into() })
        );
        assert_eq!(
            Dihypergraph::new(["1", "2"], [(vec!["9"], "2")]),
            Err(Error::UnknownVertex("9".into()))
        );
    }

    #[test]
    fn induced_examples() {
        let h = fixtures::split_example();
        let u1 = h.vertex_set(["1", "2", "3"]).unwrap();
        let h1 = h.induced(&u1).unwrap();
        assert_eq!(h1.edges(), &[edge(&h, &["1", "2"], "3"), edge(&h, &["3"], "1")]);
        let u2 = h.vertex_set(["4", "5", "6", "7"]).unwrap();
        let h2 = h.induced(&u2).unwrap();
        assert_eq!(h2.edges(), &[edge(&h, &["4", "5"], "6"), edge(&h, &["5"], "7")]);
        assert_eq!(h.induced(h.vertices()).unwrap(), h);
        assert_eq!(h.induced(&VertexSet::new()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn bipartite_part_examples() {
        let h = fixtures::split_example();
        let u1 = h.vertex_set(["1", "2", "3"]).unwrap();
        let u2 = h.vertex_set(["4", "5", "6", "7"]).unwrap();
        let mut expected = vec![edge(&h, &["5", "6"], "2"), edge(&h, &["2", "3"], "7")];
        expected.sort();
        assert_eq!(h.bipartite_part(&u1, &u2).unwrap(), expected);

        let e = fixtures::edgeless(4);
        let (a, b) = (e.vertex_set(["1", "2"]).unwrap(), e.vertex_set(["3", "4"]).unwrap());
        assert!(e.bipartite_part(&a, &b).unwrap().is_empty());

        let t = Dihypergraph::new(["1", "2", "3"], [(vec!["1", "2"], "3")]).unwrap();
        let (a, b) = (t.vertex_set(["1", "2"]).unwrap(), t.vertex_set(["3"]).unwrap());
        assert_eq!(t.bipartite_part(&a, &b).unwrap().len(), 1);
        assert!(matches!(t.bipartite_part(&a, &a), Err(Error::NotABipartition(_))));
    }
}
