//! Closure systems of dihypergraphs.
//!
//! A set `F` is closed when every edge with its body inside `F` also has its
//! head inside `F`. The closed sets of a dihypergraph form a closure system
//! (a family containing the ground set and closed under intersection), and
//! the decomposition trees of the dihypergraph carry over to it.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::decomposition::{build_factor_tree, is_split, FactorTree, Node};
use crate::dihypergraph::{same_universe, Dihypergraph, Universe};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Default bound on the ground set size for closed-set enumeration.
pub const DEFAULT_LIMIT: usize = 24;

/// A family of subsets of `ground` that contains `ground` and is closed
/// under intersection. Sets are kept in canonical order (size, then
/// lexicographic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSystem {
    universe: Arc<Universe>,
    ground: VertexSet,
    sets: Vec<VertexSet>,
}

impl ClosureSystem {
    /// Validates and normalizes a family of sets.
    pub fn new(universe: Arc<Universe>, ground: VertexSet, sets: Vec<VertexSet>) -> Result<Self> {
        let cs = Self::from_family(universe, ground, sets);
        cs.check_invariants()?;
        Ok(cs)
    }

    /// Sorts and deduplicates without checking the invariants.
    pub(crate) fn from_family(universe: Arc<Universe>, ground: VertexSet, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        ClosureSystem { universe, ground, sets }
    }

    /// Checks that every set lies in the ground set, that the ground set is
    /// a member and that the family is closed under intersection.
    pub fn check_invariants(&self) -> Result<()> {
        if let Some(s) = self.sets.iter().find(|s| !s.is_subset(&self.ground)) {
            return Err(Error::NotAClosureSystem(format!(
                "{} is not inside the ground set",
                self.universe.display_set(s)
            )));
        }
        if !self.contains(&self.ground) {
            return Err(Error::NotAClosureSystem("ground set missing".into()));
        }
        if let Some((a, b)) = intersection_escape(&self.sets, |s| self.contains(s)) {
            return Err(Error::NotAClosureSystem(format!(
                "{} ∩ {} is missing",
                self.universe.display_set(&a),
                self.universe.display_set(&b)
            )));
        }
        Ok(())
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    /// Members as name lists, in canonical order.
    pub fn names(&self) -> Vec<Vec<String>> {
        self.sets.iter().map(|s| self.universe.set_names(s)).collect()
    }

    pub fn display_set<'a>(&'a self, s: &'a VertexSet) -> impl fmt::Display + 'a {
        self.universe.display_set(s)
    }
}

impl fmt::Display for ClosureSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.universe.display_set(s))?;
        }
        f.write_str("}")
    }
}

fn intersection_escape(sets: &[VertexSet], member: impl Fn(&VertexSet) -> bool) -> Option<(VertexSet, VertexSet)> {
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !member(&a.intersection(b)) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Forward chaining over a fixed dihypergraph.
///
/// Each edge keeps a count of body vertices not yet derived; an edge fires
/// when its count drops to zero.
pub struct ForwardChainer<'a> {
    h: &'a Dihypergraph,
    body_edges: Vec<Vec<u32>>,
}

impl<'a> ForwardChainer<'a> {
    pub fn new(h: &'a Dihypergraph) -> Self {
        let mut body_edges = vec![Vec::new(); h.universe().len()];
        for (i, e) in h.edges().iter().enumerate() {
            for v in e.body() {
                body_edges[v.index()].push(i as u32);
            }
        }
        ForwardChainer { h, body_edges }
    }

    /// Least closed superset of `x`. `x` must lie within the vertex set.
    pub fn close(&self, x: &VertexSet) -> VertexSet {
        let edges = self.h.edges();
        let mut missing: Vec<u32> = edges.iter().map(|e| e.body().len() as u32).collect();
        let mut closed = x.clone();
        let mut queue: VecDeque<_> = x.iter().collect();
        while let Some(v) = queue.pop_front() {
            for &e in &self.body_edges[v.index()] {
                let m = &mut missing[e as usize];
                *m -= 1;
                if *m == 0 {
                    let head = edges[e as usize].head();
                    if closed.insert(head) {
                        queue.push_back(head);
                    }
                }
            }
        }
        closed
    }
}

/// Least closed superset of `x` in `h`.
pub fn forward_chain(h: &Dihypergraph, x: &VertexSet) -> Result<VertexSet> {
    h.check_subset(x)?;
    Ok(ForwardChainer::new(h).close(x))
}

pub fn is_closed(h: &Dihypergraph, f: &VertexSet) -> Result<bool> {
    h.check_subset(f)?;
    Ok(h.edges().iter().all(|e| !e.body_within(f) || f.contains(e.head())))
}

fn check_limit(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::GroundSetTooLarge { size, limit })
    } else {
        Ok(())
    }
}

/// All closed sets of `h`, found by walking the lattice upwards from the
/// closure of the empty set: each closed `F` yields the closures of
/// `F ∪ {x}` for `x ∉ F`.
pub fn enumerate_closed_sets(h: &Dihypergraph, limit: usize) -> Result<ClosureSystem> {
    check_limit(h.vertex_count(), limit)?;
    let chain = ForwardChainer::new(h);
    let bottom = chain.close(&VertexSet::new());
    let mut seen: HashSet<VertexSet> = HashSet::from([bottom.clone()]);
    let mut queue = VecDeque::from([bottom]);
    while let Some(f) = queue.pop_front() {
        for x in h.vertices().difference(&f).iter() {
            let mut g = f.clone();
            g.insert(x);
            let g = chain.close(&g);
            if !seen.contains(&g) {
                seen.insert(g.clone());
                queue.push_back(g);
            }
        }
    }
    Ok(ClosureSystem::from_family(
        h.universe().clone(),
        h.vertices().clone(),
        seen.into_iter().collect(),
    ))
}

/// `{F ∩ subset | F ∈ family}` on ground `subset`.
pub fn trace(family: &ClosureSystem, subset: &VertexSet) -> Result<ClosureSystem> {
    if let Some(v) = subset.iter().find(|&v| !family.ground.contains(v)) {
        return Err(Error::UnknownVertex(
            family.universe.names().get(v.index()).cloned().unwrap_or_else(|| format!("#{}", v.0)),
        ));
    }
    let sets = family.sets.iter().map(|s| s.intersection(subset)).collect();
    Ok(ClosureSystem::from_family(family.universe.clone(), subset.clone(), sets))
}

/// Pairwise unions of two closure systems on disjoint ground sets.
pub fn product(a: &ClosureSystem, b: &ClosureSystem) -> Result<ClosureSystem> {
    if !same_universe(&a.universe, &b.universe) {
        return Err(Error::UniverseMismatch);
    }
    if !a.ground.is_disjoint(&b.ground) {
        return Err(Error::OverlappingGrounds);
    }
    let mut sets = Vec::with_capacity(a.len() * b.len());
    for x in &a.sets {
        for y in &b.sets {
            sets.push(x.union(y));
        }
    }
    Ok(ClosureSystem::from_family(a.universe.clone(), a.ground.union(&b.ground), sets))
}

fn member(f: &ClosureSystem, s: &VertexSet) -> Result<()> {
    if f.contains(s) {
        Ok(())
    } else {
        Err(Error::NotAMember)
    }
}

/// Greatest lower bound of two members: their intersection.
pub fn meet(f: &ClosureSystem, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    member(f, a)?;
    member(f, b)?;
    Ok(a.intersection(b))
}

/// Least upper bound of two members: the intersection of all members
/// containing both.
pub fn join(f: &ClosureSystem, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    member(f, a)?;
    member(f, b)?;
    Ok(join_unchecked(f, &a.union(b)))
}

fn join_unchecked(f: &ClosureSystem, both: &VertexSet) -> VertexSet {
    f.sets
        .iter()
        .filter(|s| s.is_superset(both))
        .fold(f.ground.clone(), |acc, s| acc.intersection(s))
}

/// Why a family fails to be a (meet-)sublattice of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeViolation {
    /// A member of the smaller family is not in the larger one.
    NotContained(VertexSet),
    /// The meet of the pair in the larger family escapes the smaller one.
    Meet(VertexSet, VertexSet),
    /// The join of the pair in the larger family escapes the smaller one.
    Join(VertexSet, VertexSet),
}

/// First witness against `f` being a meet-sublattice of `g`, if any.
pub fn meet_sublattice_violation(f: &ClosureSystem, g: &ClosureSystem) -> Option<LatticeViolation> {
    if let Some(s) = f.sets.iter().find(|s| !g.contains(s)) {
        return Some(LatticeViolation::NotContained(s.clone()));
    }
    intersection_escape(&f.sets, |s| f.contains(s)).map(|(a, b)| LatticeViolation::Meet(a, b))
}

/// First witness against `f` being a sublattice of `g`, if any. Pairs are
/// visited in canonical order.
pub fn sublattice_violation(f: &ClosureSystem, g: &ClosureSystem) -> Option<LatticeViolation> {
    if let Some(v) = meet_sublattice_violation(f, g) {
        return Some(v);
    }
    for (i, a) in f.sets.iter().enumerate() {
        for b in &f.sets[i + 1..] {
            if !f.contains(&join_unchecked(g, &a.union(b))) {
                return Some(LatticeViolation::Join(a.clone(), b.clone()));
            }
        }
    }
    None
}

pub fn is_meet_sublattice(f: &ClosureSystem, g: &ClosureSystem) -> bool {
    meet_sublattice_violation(f, g).is_none()
}

pub fn is_sublattice(f: &ClosureSystem, g: &ClosureSystem) -> bool {
    sublattice_violation(f, g).is_none()
}

/// Outcome of one conditional item of the split theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ItemStatus {
    Holds,
    /// The item's hypothesis is false for this split.
    DoesNotApply,
    Violation(String),
}

impl ItemStatus {
    pub fn is_violation(&self) -> bool {
        matches!(self, ItemStatus::Violation(_))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ItemStatus::Holds => "holds",
            ItemStatus::DoesNotApply => "does-not-apply",
            ItemStatus::Violation(_) => "VIOLATION",
        }
    }
}

/// Relationship between the closed sets of `h` and those of the two sides
/// of a split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTheoremReport {
    pub closed: ClosureSystem,
    pub first: ClosureSystem,
    pub second: ClosureSystem,
    /// Every closed set meets each side in a closed set of that side, and
    /// the closure system lies in the product of the sides.
    pub item_i: ItemStatus,
    /// Without crossing edges the closure system is the product.
    pub item_ii: ItemStatus,
    /// With every crossing body in the first side, both traces equal the
    /// sides' closure systems.
    pub item_iii: ItemStatus,
    /// Mirror image of `item_iii`.
    pub item_iv: ItemStatus,
}

impl SplitTheoremReport {
    pub fn items(&self) -> [(&'static str, &ItemStatus); 4] {
        [
            ("i", &self.item_i),
            ("ii", &self.item_ii),
            ("iii", &self.item_iii),
            ("iv", &self.item_iv),
        ]
    }

    pub fn has_violation(&self) -> bool {
        self.items().iter().any(|(_, s)| s.is_violation())
    }
}

fn traces_match(closed: &ClosureSystem, first: &ClosureSystem, second: &ClosureSystem) -> Result<ItemStatus> {
    for side in [first, second] {
        let t = trace(closed, side.ground())?;
        if t != *side {
            return Ok(ItemStatus::Violation(format!(
                "trace on {} is {t}, expected {side}",
                closed.universe.display_set(side.ground())
            )));
        }
    }
    Ok(ItemStatus::Holds)
}

/// Checks every item of the split theorem on the split `(u1, u2)`.
pub fn check_split_theorem(h: &Dihypergraph, u1: &VertexSet, u2: &VertexSet, limit: usize) -> Result<SplitTheoremReport> {
    if !is_split(h, u1, u2)? {
        return Err(Error::NotASplit("a body meets both parts".into()));
    }
    check_limit(h.vertex_count(), limit)?;
    let closed = enumerate_closed_sets(h, limit)?;
    let first = enumerate_closed_sets(&h.induced(u1)?, limit)?;
    let second = enumerate_closed_sets(&h.induced(u2)?, limit)?;
    let both = product(&first, &second)?;
    let crossing = h.bipartite_part(u1, u2)?;

    let mut item_i = ItemStatus::Holds;
    for f in closed.sets() {
        let (a, b) = (f.intersection(u1), f.intersection(u2));
        if !first.contains(&a) || !second.contains(&b) || !both.contains(f) {
            item_i = ItemStatus::Violation(format!(
                "closed set {} does not split into closed parts",
                closed.universe.display_set(f)
            ));
            break;
        }
    }

    let item_ii = if !crossing.is_empty() {
        ItemStatus::DoesNotApply
    } else if closed.sets() == both.sets() {
        ItemStatus::Holds
    } else {
        ItemStatus::Violation(format!("closure system {closed} differs from product {both}"))
    };

    let item_iii = if crossing.iter().all(|e| e.body_within(u1)) {
        traces_match(&closed, &first, &second)?
    } else {
        ItemStatus::DoesNotApply
    };
    let item_iv = if crossing.iter().all(|e| e.body_within(u2)) {
        traces_match(&closed, &first, &second)?
    } else {
        ItemStatus::DoesNotApply
    };

    Ok(SplitTheoremReport { closed, first, second, item_i, item_ii, item_iii, item_iv })
}

/// A factor tree whose every node is annotated with the closure system of
/// the subhypergraph induced by its leaves.
#[derive(Debug, Clone)]
pub struct ClosureTree {
    pub tree: FactorTree,
    /// Indexed by node id.
    pub systems: Vec<ClosureSystem>,
}

impl ClosureTree {
    pub fn root_system(&self) -> &ClosureSystem {
        &self.systems[self.tree.root().index()]
    }

    /// Closure systems of the leaves, left to right.
    pub fn factor_systems(&self) -> Vec<&ClosureSystem> {
        self.tree.leaves().into_iter().map(|id| &self.systems[id.index()]).collect()
    }
}

pub fn decompose_closure(h: &Dihypergraph, limit: usize) -> Result<ClosureTree> {
    check_limit(h.vertex_count(), limit)?;
    let tree = build_factor_tree(h);
    let systems = tree
        .grounds()
        .iter()
        .map(|g| enumerate_closed_sets(&h.induced(g)?, limit))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosureTree { tree, systems })
}

/// The closure system of `h` against the product of its factor systems.
#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub closed: ClosureSystem,
    pub product: ClosureSystem,
    pub factors: usize,
    pub violation: Option<LatticeViolation>,
}

pub fn check_corollary(h: &Dihypergraph, limit: usize) -> Result<CorollaryReport> {
    let ct = decompose_closure(h, limit)?;
    let leaves = ct.factor_systems();
    let mut prod = leaves[0].clone();
    for f in &leaves[1..] {
        prod = product(&prod, f)?;
    }
    let closed = ct.root_system().clone();
    let violation = meet_sublattice_violation(&closed, &prod);
    Ok(CorollaryReport { closed, product: prod, factors: leaves.len(), violation })
}

/// True if `tree`'s leaves are all trivial, i.e. the closure system splits
/// down to single vertices.
pub fn is_fully_split(tree: &FactorTree) -> bool {
    tree.nodes().iter().all(|n| !matches!(n, Node::Factor(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn family(h: &Dihypergraph, sets: &[&[&str]]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = sets.iter().map(|s| h.vertex_set(s.iter()).unwrap()).collect();
        v.sort();
        v
    }

    /// Powerset scan, for cross-checking only.
    fn powerset_closed(h: &Dihypergraph) -> Vec<VertexSet> {
        let vs = h.vertices().to_vec();
        let mut out: Vec<VertexSet> = (0..1u32 << vs.len())
            .map(|m| vs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, v)| *v).collect())
            .filter(|s| is_closed(h, s).unwrap())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn forward_chain_examples() {
        let h = fixtures::split_example();
        let x = h.vertex_set(["5", "6"]).unwrap();
        assert_eq!(forward_chain(&h, &x).unwrap(), h.vertex_set(["2", "5", "6", "7"]).unwrap());
        let g = fixtures::non_sublattice_example();
        let two = g.vertex_set(["2"]).unwrap();
        assert_eq!(forward_chain(&g, &two).unwrap(), g.vertex_set(["1", "2"]).unwrap());
        let top = g.vertices().clone();
        assert_eq!(forward_chain(&g, &top).unwrap(), top);
    }

    #[test]
    fn closedness() {
        let g = fixtures::non_sublattice_example();
        assert!(!is_closed(&g, &g.vertex_set(["1", "3"]).unwrap()).unwrap());
        assert!(is_closed(&g, g.vertices()).unwrap());
        let h = fixtures::split_example();
        assert!(is_closed(&h, &VertexSet::new()).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let g = fixtures::non_sublattice_example();
        let f = enumerate_closed_sets(&g, DEFAULT_LIMIT).unwrap();
        assert_eq!(f.sets(), family(&g, &[&[], &["1"], &["3"], &["1", "2"], &["1", "2", "3"]]));
        assert_eq!(f.sets(), powerset_closed(&g));

        assert_eq!(enumerate_closed_sets(&fixtures::edgeless(2), DEFAULT_LIMIT).unwrap().len(), 4);
        let d = fixtures::numbered(2, &[(&[1], 2)]);
        let f = enumerate_closed_sets(&d, DEFAULT_LIMIT).unwrap();
        assert_eq!(f.sets(), family(&d, &[&[], &["2"], &["1", "2"]]));

        assert_eq!(
            enumerate_closed_sets(&fixtures::edgeless(5), 4),
            Err(Error::GroundSetTooLarge { size: 5, limit: 4 })
        );
    }

    #[test]
    fn traces_and_products() {
        let g = fixtures::non_sublattice_example();
        let f = enumerate_closed_sets(&g, DEFAULT_LIMIT).unwrap();
        let u1 = g.vertex_set(["1", "3"]).unwrap();
        let u2 = g.vertex_set(["2"]).unwrap();
        let f1 = trace(&f, &u1).unwrap();
        let f2 = trace(&f, &u2).unwrap();
        assert_eq!(f1.sets(), family(&g, &[&[], &["1"], &["3"], &["1", "3"]]));
        assert_eq!(f2.sets(), family(&g, &[&[], &["2"]]));
        assert_eq!(trace(&f, g.vertices()).unwrap(), f);

        let p = product(&f1, &f2).unwrap();
        assert_eq!(p.len(), 8);
        p.check_invariants().unwrap();
        assert_eq!(product(&f1, &f1), Err(Error::OverlappingGrounds));
    }

    #[test]
    fn lattice_operations() {
        let g = fixtures::non_sublattice_example();
        let f = enumerate_closed_sets(&g, DEFAULT_LIMIT).unwrap();
        let s = |n: &[&str]| g.vertex_set(n).unwrap();
        assert_eq!(join(&f, &s(&["1"]), &s(&["3"])).unwrap(), s(&["1", "2", "3"]));
        assert_eq!(meet(&f, &s(&["1"]), &s(&["1", "2"])).unwrap(), s(&["1"]));
        assert_eq!(join(&f, &s(&["1"]), &s(&["1", "2"])).unwrap(), s(&["1", "2"]));
        assert_eq!(meet(&f, &s(&["3"]), &s(&["3"])).unwrap(), s(&["3"]));
        assert_eq!(join(&f, &s(&["3"]), &s(&["3"])).unwrap(), s(&["3"]));
        assert_eq!(meet(&f, &s(&["2"]), &s(&["3"])), Err(Error::NotAMember));
    }

    #[test]
    fn sublattice_checks() {
        let g = fixtures::non_sublattice_example();
        let f = enumerate_closed_sets(&g, DEFAULT_LIMIT).unwrap();
        let p = product(
            &trace(&f, &g.vertex_set(["1", "3"]).unwrap()).unwrap(),
            &trace(&f, &g.vertex_set(["2"]).unwrap()).unwrap(),
        )
        .unwrap();
        assert!(is_meet_sublattice(&f, &p));
        let s = |n: &[&str]| g.vertex_set(n).unwrap();
        assert_eq!(sublattice_violation(&f, &p), Some(LatticeViolation::Join(s(&["1"]), s(&["3"]))));
        assert!(is_sublattice(&f, &f));

        let chain = ClosureSystem::new(g.universe().clone(), g.vertices().clone(), vec![VertexSet::new(), g.vertices().clone()]).unwrap();
        assert!(is_sublattice(&chain, &f));
        assert!(is_meet_sublattice(&chain, &p));
    }

    #[test]
    fn invalid_families_are_rejected() {
        let g = fixtures::edgeless(3);
        let s = |n: &[&str]| g.vertex_set(n).unwrap();
        let u = g.universe().clone();
        assert!(ClosureSystem::new(u.clone(), g.vertices().clone(), vec![s(&["1"])]).is_err());
        assert!(ClosureSystem::new(u, g.vertices().clone(), vec![s(&["1", "2"]), s(&["2", "3"]), g.vertices().clone()]).is_err());
    }

    #[test]
    fn split_theorem_examples() {
        let h = fixtures::split_example();
        let (u1, u2) = (h.vertex_set(["1", "2", "3"]).unwrap(), h.vertex_set(["4", "5", "6", "7"]).unwrap());
        let r = check_split_theorem(&h, &u1, &u2, DEFAULT_LIMIT).unwrap();
        assert_eq!(r.item_i, ItemStatus::Holds);
        assert_eq!(r.item_ii, ItemStatus::DoesNotApply);
        assert_eq!(r.item_iii, ItemStatus::DoesNotApply);
        assert_eq!(r.item_iv, ItemStatus::DoesNotApply);

        let e = fixtures::edgeless(4);
        let (a, b) = (e.vertex_set(["1", "2"]).unwrap(), e.vertex_set(["3", "4"]).unwrap());
        let r = check_split_theorem(&e, &a, &b, DEFAULT_LIMIT).unwrap();
        for (_, s) in r.items() {
            assert_eq!(s, &ItemStatus::Holds);
        }

        let g = fixtures::non_sublattice_example();
        let (a, b) = (g.vertex_set(["1", "3"]).unwrap(), g.vertex_set(["2"]).unwrap());
        let r = check_split_theorem(&g, &a, &b, DEFAULT_LIMIT).unwrap();
        assert_eq!(r.item_i, ItemStatus::Holds);
        assert_eq!(r.item_ii, ItemStatus::DoesNotApply);
        assert_eq!(r.first.sets(), family(&g, &[&[], &["1"], &["3"], &["1", "3"]]));
        assert_eq!(r.second.sets(), family(&g, &[&[], &["2"]]));

        let (a, b) = (h.vertex_set(["1", "3"]).unwrap(), h.vertex_set(["2", "4", "5", "6", "7"]).unwrap());
        assert!(matches!(check_split_theorem(&h, &a, &b, DEFAULT_LIMIT), Err(Error::NotASplit(_))));
    }

    #[test]
    fn closure_tree_examples() {
        let g = fixtures::non_sublattice_example();
        let ct = decompose_closure(&g, DEFAULT_LIMIT).unwrap();
        assert_eq!(ct.root_system(), &enumerate_closed_sets(&g, DEFAULT_LIMIT).unwrap());
        let leaves: Vec<usize> = ct.factor_systems().iter().map(|f| f.len()).collect();
        assert_eq!(leaves, vec![2, 2, 2]);

        let one = fixtures::edgeless(1);
        let ct = decompose_closure(&one, DEFAULT_LIMIT).unwrap();
        assert_eq!(ct.systems.len(), 1);
        assert_eq!(ct.root_system().len(), 2);

        let h = fixtures::split_example();
        let ct = decompose_closure(&h, DEFAULT_LIMIT).unwrap();
        assert_eq!(ct.root_system(), &enumerate_closed_sets(&h, DEFAULT_LIMIT).unwrap());
        assert!(is_fully_split(&ct.tree));
    }

    #[test]
    fn corollary_on_factor() {
        let h = fixtures::numbered(4, &[(&[1, 2], 3), (&[1, 3], 2), (&[2, 3], 4)]);
        let r = check_corollary(&h, DEFAULT_LIMIT).unwrap();
        assert_eq!(r.factors, 2);
        assert_eq!(r.violation, None);
    }
}
