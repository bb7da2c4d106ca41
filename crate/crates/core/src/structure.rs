//! Structural analysis of extremal graphs: LC classes up to isomorphism,
//! induced obstruction patterns inside orbits, and a small catalog of named
//! graphs.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::canon::{are_isomorphic, canonical_form, CanonicalForm};
use crate::codec::Graph6Code;
use crate::graph::{full_mask, Graph, Row, VertexSet};
use crate::orbit::enumerate_orbit;
use crate::par::{find_map_first, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternName {
    W5,
    BW3,
    W7,
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternName::W5 => "W5",
            PatternName::BW3 => "BW3",
            PatternName::W7 => "W7",
        })
    }
}

/// A circle-graph obstruction to look for as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionPattern {
    pub name: PatternName,
    pub graph: Graph,
}

impl ObstructionPattern {
    pub fn new(name: PatternName) -> Self {
        let graph = match name {
            PatternName::W5 => wheel(5),
            PatternName::W7 => wheel(7),
            PatternName::BW3 => {
                // C6 on 0..6, hub 6 on the alternating vertices 0, 2, 4.
                let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
                edges.extend([(6, 0), (6, 2), (6, 4)]);
                Graph::from_edges(7, &edges).expect("fixed pattern")
            }
        };
        ObstructionPattern { name, graph }
    }

    pub fn all() -> [ObstructionPattern; 3] {
        [PatternName::W5, PatternName::BW3, PatternName::W7].map(Self::new)
    }
}

/// `W_k`: the cycle `C_k` on `0..k` plus a hub `k` adjacent to all of it.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (k, i)));
    Graph::from_edges(k + 1, &edges).expect("wheel fits")
}

/// A vertex set of `host` inducing a copy of `pattern`, if any.
///
/// `result[i]` is the host vertex playing pattern vertex `i`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (n, m) = (host.order(), pattern.order());
    if m > n || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // Pattern vertices in an order where each one after the first is
    // adjacent to an earlier one when possible, higher degree first.
    let mut order = Vec::with_capacity(m);
    let mut placed: Row = 0;
    while order.len() < m {
        let frontier: Row = order.iter().fold(0, |acc, &u| acc | pattern.neighbors(u).0) & !placed;
        let pool = if frontier != 0 {
            frontier
        } else {
            full_mask(m) & !placed
        };
        let v = VertexSet(pool)
            .iter()
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("pool is nonempty");
        order.push(v);
        placed |= 1 << v;
    }
    let mut by_degree = vec![0 as Row; m];
    for (slot, &p) in by_degree.iter_mut().zip(&order) {
        *slot = (0..n)
            .filter(|&h| host.degree(h) >= pattern.degree(p))
            .fold(0, |acc, h| acc | 1 << h);
    }
    let mut image = vec![0usize; m];
    let all = full_mask(n);
    if extend(host, pattern, &order, &by_degree, all, 0, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    by_degree: &[Row],
    all: Row,
    depth: usize,
    used: Row,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = by_degree[depth] & !used;
    for &q in &order[..depth] {
        let h = host.neighbors(image[q]).0;
        cand &= if pattern.has_edge(p, q) { h } else { all & !h };
    }
    for h in VertexSet(cand).iter() {
        image[p] = h;
        if extend(
            host,
            pattern,
            order,
            by_degree,
            all,
            depth + 1,
            used | 1 << h,
            image,
        ) {
            return true;
        }
    }
    false
}

/// A witness: the orbit member (with its BFS index) and the vertex set
/// inducing the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub index: usize,
    pub member: Graph,
    pub vertices: VertexSet,
}

/// The first orbit member of `g`, in BFS order, containing `p` induced.
pub fn find_induced_pattern_in_orbit(g: &Graph, p: &ObstructionPattern) -> Option<PatternWitness> {
    find_induced_pattern_in_orbit_with(g, p, Execution::default())
}

pub fn find_induced_pattern_in_orbit_with(
    g: &Graph,
    p: &ObstructionPattern,
    exec: Execution,
) -> Option<PatternWitness> {
    if p.graph.order() > g.order() {
        return None;
    }
    let orbit = enumerate_orbit(g, None);
    find_map_first(&orbit.members, exec, |h| find_induced(h, &p.graph)).map(|(index, image)| {
        PatternWitness {
            index,
            member: orbit.members[index],
            vertices: VertexSet::from_vertices(image),
        }
    })
}

/// Codes grouped into LC-equivalence classes up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcClassPartition {
    /// Classes in order of first appearance; codes keep their input order.
    pub classes: Vec<Vec<Graph6Code>>,
}

impl LcClassPartition {
    /// Index of the class holding `code`.
    pub fn class_of(&self, code: &Graph6Code) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(code))
    }
}

/// The least canonical form over the LC orbit of `g`; equal for two graphs
/// iff one is isomorphic to a member of the other's orbit.
pub fn orbit_class_key(g: &Graph) -> CanonicalForm {
    enumerate_orbit(g, None)
        .members
        .iter()
        .map(canonical_form)
        .min()
        .expect("an orbit contains its root")
}

pub fn lc_class_partition(codes: &[Graph6Code]) -> LcClassPartition {
    let mut index: FxHashMap<CanonicalForm, usize> = FxHashMap::default();
    let mut classes: Vec<Vec<Graph6Code>> = Vec::new();
    for code in codes {
        let key = orbit_class_key(&code.decode());
        let slot = *index.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(code.clone());
    }
    LcClassPartition { classes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Petersen,
    PetersenComplement,
    C5JoinC5,
    TriangularPrism,
    Complete(usize),
    Edgeless(usize),
    Cycle(usize),
}

impl NamedGraph {
    pub fn graph(self) -> Graph {
        match self {
            NamedGraph::Petersen => petersen(),
            NamedGraph::PetersenComplement => petersen().complement(),
            NamedGraph::C5JoinC5 => {
                let c5 = Graph::cycle(5).expect("C5");
                c5.join(&c5).expect("10 vertices fit")
            }
            NamedGraph::TriangularPrism => Graph::cycle(6).expect("C6").complement(),
            NamedGraph::Complete(n) => Graph::complete(n).expect("valid order"),
            NamedGraph::Edgeless(n) => Graph::empty(n).expect("valid order"),
            NamedGraph::Cycle(n) => Graph::cycle(n).expect("valid order"),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Petersen => f.write_str("Petersen"),
            NamedGraph::PetersenComplement => f.write_str("co-Petersen"),
            NamedGraph::C5JoinC5 => f.write_str("C5 join C5"),
            NamedGraph::TriangularPrism => f.write_str("triangular prism"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Edgeless(n) => write!(f, "E{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("Petersen graph")
}

/// Catalog entries isomorphic to `g`, in catalog order.
pub fn identify_named(g: &Graph) -> Vec<NamedGraph> {
    let n = g.order();
    let mut catalog = vec![];
    if n == 10 {
        catalog.extend([
            NamedGraph::Petersen,
            NamedGraph::PetersenComplement,
            NamedGraph::C5JoinC5,
        ]);
    }
    if n == 6 {
        catalog.push(NamedGraph::TriangularPrism);
    }
    catalog.extend([NamedGraph::Complete(n), NamedGraph::Edgeless(n)]);
    if n >= 3 {
        catalog.push(NamedGraph::Cycle(n));
    }
    catalog
        .into_iter()
        .filter(|c| are_isomorphic(g, &c.graph()))
        .collect()
}
