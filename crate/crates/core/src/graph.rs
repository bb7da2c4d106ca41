//! Labeled simple graphs stored as adjacency-row bitmasks.
//!
//! A [`Graph`] holds at most [`MAX_VERTICES`] vertices; row `v` has bit `u`
//! set iff `uv` is an edge. Every operation is a pure function returning a
//! new value, so graphs are `Copy` and can be hashed on the raw row tuple.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Largest supported vertex count. One `u16` per adjacency row.
pub const MAX_VERTICES: usize = 16;

/// A row bitmask / vertex set word.
pub type Row = u16;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> Row {
    1 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn full_mask(n: usize) -> Row {
    if n >= MAX_VERTICES {
        Row::MAX
    } else {
        (1 << n) - 1
    }
}

/// A set of vertices of some graph, as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub Row);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | bit(v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the set bits of a row, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub Row);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

/// A labeled simple graph on vertices `0..n`.
///
/// Equality, ordering and hashing act on the labeled row tuple. Rows at
/// positions `>= n` are always zero, so the derived comparisons are exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    rows: [Row; MAX_VERTICES],
}

impl Hash for Graph {
    #[inline]
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Four words instead of sixteen `write_u16` calls.
        let r = &self.rows;
        for w in 0..4 {
            let i = 4 * w;
            let word = r[i] as u64
                | (r[i + 1] as u64) << 16
                | (r[i + 2] as u64) << 32
                | (r[i + 3] as u64) << 48;
            state.write_u64(word);
        }
        state.write_u8(self.n);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// The cycle `C_n` with edges `i(i+1)` and `(n-1)0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The path `P_n` with edges `i(i+1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: &[Row]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        g.rows[..n].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    /// Unchecked constructor for internal hot paths; invariants must hold.
    #[inline]
    pub(crate) fn from_rows_unchecked(n: usize, rows: [Row; MAX_VERTICES]) -> Self {
        let g = Graph { n: n as u8, rows };
        debug_assert!(g.validate().is_ok(), "invalid rows: {g:?}");
        g
    }

    /// Checks symmetry, looplessness and that no bit at position `>= n` is set.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let mask = full_mask(n);
        for v in 0..MAX_VERTICES {
            let r = self.rows[v];
            if v >= n {
                if r != 0 {
                    return Err(Error::InvalidRows(format!(
                        "row {v} beyond order {n} is nonzero"
                    )));
                }
                continue;
            }
            if r & !mask != 0 {
                return Err(Error::InvalidRows(format!(
                    "row {v} has bits beyond order {n}"
                )));
            }
            if r & bit(v) != 0 {
                return Err(Error::InvalidRows(format!("loop at vertex {v}")));
            }
            for u in BitIter(r) {
                if self.rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidRows(format!("asymmetric pair {u},{v}")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Adjacency rows `0..n`.
    #[inline]
    pub fn rows(&self) -> &[Row] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub(crate) fn raw_rows(&self) -> &[Row; MAX_VERTICES] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| BitIter(self.rows[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Local complementation `G*v`: complements the subgraph induced on `N(v)`.
    pub fn local_complement(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(self.local_complement_unchecked(v))
    }

    /// `G*v` without the range check. Toggles `N(v) \ {u}` in every row `u ∈ N(v)`.
    #[inline]
    pub fn local_complement_unchecked(&self, v: usize) -> Self {
        let mut out = *self;
        let m = self.rows[v];
        let mut it = m;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            out.rows[u] ^= m & !bit(u);
        }
        out
    }

    /// Pivot `G×vw = G*v*w*v` at the edge `vw`.
    pub fn pivot(&self, v: usize, w: usize) -> Result<Self> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if !self.has_edge(v, w) {
            return Err(Error::NotAnEdge(v, w));
        }
        Ok(self
            .local_complement_unchecked(v)
            .local_complement_unchecked(w)
            .local_complement_unchecked(v))
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let all = full_mask(n);
        let mut out = *self;
        for v in 0..n {
            out.rows[v] = !self.rows[v] & all & !bit(v);
        }
        out
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let (a, b) = (self.order(), other.order());
        check_order(a + b)?;
        let mut out = Graph::empty(a + b)?;
        out.rows[..a].copy_from_slice(self.rows());
        for v in 0..b {
            out.rows[a + v] = other.rows[v] << a;
        }
        Ok(out)
    }

    /// Join `G∇H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let (a, b) = (self.order(), other.order());
        let mut out = self.disjoint_union(other)?;
        let left = full_mask(a);
        let right = full_mask(a + b) & !left;
        for v in 0..a {
            out.rows[v] |= right;
        }
        for v in a..a + b {
            out.rows[v] |= left;
        }
        Ok(out)
    }

    /// Subgraph induced on `s`, relabeled `0..|s|` in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if s.0 & !full_mask(self.order()) != 0 {
            let v = (s.0 & !full_mask(self.order())).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            });
        }
        let kept: Vec<usize> = s.iter().collect();
        let mut out = Graph::empty(kept.len())?;
        for (i, &u) in kept.iter().enumerate() {
            let mut row = 0;
            for (j, &w) in kept.iter().enumerate() {
                if self.rows[u] & bit(w) != 0 {
                    row |= bit(j);
                }
            }
            out.rows[i] = row;
        }
        Ok(out)
    }

    /// Relabels by `perm`: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidPermutation);
        }
        let mut seen: Row = 0;
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return Err(Error::InvalidPermutation);
            }
            seen |= bit(p);
        }
        let mut rows = [0; MAX_VERTICES];
        for v in 0..n {
            rows[perm[v]] = BitIter(self.rows[v]).fold(0, |r, u| r | bit(perm[u]));
        }
        Ok(Graph::from_rows_unchecked(n, rows))
    }

    /// Whether the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        self.component_of(0).len() == n
    }

    /// Connected component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidOrder(0))
    } else if n > MAX_VERTICES {
        Err(Error::CapacityExceeded {
            requested: n,
            capacity: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn lc_of_triangle_at_zero_is_path_centered_at_zero() {
        let g = k3().local_complement(0).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert_eq!(g.local_complement(0).unwrap(), k3());
    }

    #[test]
    fn lc_of_edgeless_is_identity() {
        let e = Graph::empty(5).unwrap();
        for v in 0..5 {
            assert_eq!(e.local_complement(v).unwrap(), e);
        }
    }

    #[test]
    fn lc_rejects_out_of_range_vertex() {
        assert!(matches!(
            k3().local_complement(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn pivot_on_path() {
        let p3 = Graph::path(3).unwrap();
        let by_hand = p3
            .local_complement(0)
            .unwrap()
            .local_complement(1)
            .unwrap()
            .local_complement(0)
            .unwrap();
        // P3*0 = P3 (N(0)={1}); then *1 toggles 02 -> K3; then *0 toggles 12 -> edges 01,02.
        assert_eq!(by_hand, Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert_eq!(p3.pivot(0, 1).unwrap(), by_hand);
        assert!(matches!(p3.pivot(0, 2), Err(Error::NotAnEdge(0, 2))));
    }

    #[test]
    fn pivot_on_triangle_matches_composition() {
        let g = k3();
        let chain = g
            .local_complement(0)
            .unwrap()
            .local_complement(1)
            .unwrap()
            .local_complement(0)
            .unwrap();
        assert_eq!(g.pivot(0, 1).unwrap(), chain);
        assert_eq!(g.pivot(0, 1).unwrap().pivot(0, 1).unwrap(), g);
    }

    #[test]
    fn complement_and_products() {
        assert_eq!(
            Graph::empty(4).unwrap().complement(),
            Graph::complete(4).unwrap()
        );
        let e1 = Graph::empty(1).unwrap();
        assert_eq!(e1.join(&e1).unwrap(), Graph::complete(2).unwrap());
        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e2.disjoint_union(&e3).unwrap(), Graph::empty(5).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let two = c5.disjoint_union(&c5).unwrap();
        assert_eq!(two.order(), 10);
        assert_eq!(two.edge_count(), 10);
        assert!((0..10).all(|v| two.degree(v) == 2));

        let wheel = e1.join(&c5).unwrap();
        assert_eq!(wheel.order(), 6);
        assert_eq!(wheel.degree(0), 5);
        assert!((1..6).all(|v| wheel.degree(v) == 3));
    }

    #[test]
    fn capacity_is_enforced() {
        let big = Graph::empty(10).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::CapacityExceeded { requested: 20, .. })
        ));
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let h = c5
            .induced_subgraph(VertexSet::from_vertices([0, 2, 4]))
            .unwrap();
        // original 0,2,4 -> new 0,1,2; only the edge 40 survives, as new 0-2.
        assert_eq!(h, Graph::from_edges(3, &[(0, 2)]).unwrap());
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.induced_subgraph(VertexSet::from_vertices([0, 1]))
                .unwrap(),
            Graph::complete(2).unwrap()
        );
        assert!(matches!(
            k4.induced_subgraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b000]).is_err());
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
    }

    #[test]
    fn permute_relabels() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let q = p.permute(&[0, 2, 1]).unwrap();
        assert_eq!(q, Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap());
        assert!(p.permute(&[0, 0, 1]).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_connected());
        let two = c5.disjoint_union(&c5).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.component_of(7), VertexSet(0b11111 << 5));
    }
}
