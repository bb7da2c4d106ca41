//! Canonical labeling by partition refinement and individualization.
//!
//! The canonical form of a graph is the lexicographically least adjacency-row
//! tuple over all leaves of the individualization-refinement search tree.
//! Subtrees are pruned with automorphisms discovered at equal leaves, which
//! keeps highly symmetric graphs (`E_n`, `K_n`) polynomial.
//!
//! Cells of an ordered partition are kept at stable offsets: a cell that
//! starts at position `p` keeps starting there after it is split, so a
//! vertex individualized at offset `p` ends up with canonical label `p`.

use crate::graph::{bit, full_mask, BitIter, Graph, Row, MAX_VERTICES};

/// An isomorphism-invariant key: equal iff the graphs are isomorphic.
///
/// Ordered first by order and then by the packed upper triangle of the
/// canonical row tuple, which orders like the row tuple itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    key: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Packed upper-triangle bits, row 0 most significant.
    pub fn key(&self) -> u128 {
        self.key
    }

    /// Big-endian bytes: the order followed by the 16-byte key.
    pub fn to_bytes(&self) -> [u8; 17] {
        let mut out = [0; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.key.to_be_bytes());
        out
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = [0 as Row; MAX_VERTICES];
        let mut shift = n * (n.saturating_sub(1)) / 2;
        for i in 0..n {
            let width = n - 1 - i;
            shift -= width;
            let upper = ((self.key >> shift) as Row) & full_mask(width);
            rows[i] |= ((upper as u32) << (i + 1)) as Row;
            for j in BitIter(upper) {
                rows[i + 1 + j] |= bit(i);
            }
        }
        Graph::from_rows_unchecked(n, rows)
    }
}

#[inline]
fn pack(n: usize, rows: &[Row; MAX_VERTICES]) -> u128 {
    let mut key = 0u128;
    for (i, &r) in rows.iter().enumerate().take(n) {
        key = (key << (n - 1 - i)) | ((r as u32) >> (i + 1)) as u128;
    }
    key
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form plus a labeling: vertex `v` of `g` maps to `labels[v]`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut search = Search {
        rows: g.raw_rows(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    let mut root = Partition::unit(n);
    root.refine(search.rows, 1);
    search.visit(root);
    let best = search.best.expect("search visits at least one leaf");
    (
        CanonicalForm {
            n: n as u8,
            key: best.key,
        },
        best.labels[..n].iter().map(|&l| l as usize).collect(),
    )
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

#[derive(Clone, Copy)]
struct Partition {
    n: usize,
    /// `cells[p]` is the cell starting at offset `p`, zero elsewhere.
    cells: [Row; MAX_VERTICES],
    starts: Row,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_VERTICES];
        cells[0] = full_mask(n);
        Partition {
            n,
            cells,
            starts: 1,
        }
    }

    #[inline]
    fn is_discrete(&self) -> bool {
        self.starts.count_ones() as usize == self.n
    }

    /// Refines to an equitable partition, processing pending splitter
    /// offsets lowest first.
    fn refine(&mut self, rows: &[Row; MAX_VERTICES], mut pending: Row) {
        while pending != 0 && !self.is_discrete() {
            let p = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let splitter = self.cells[p];
            for q in BitIter(self.starts) {
                let cell = self.cells[q];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut buckets = [0 as Row; MAX_VERTICES + 1];
                let mut used = 0u32;
                for v in BitIter(cell) {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    buckets[c] |= bit(v);
                    used |= 1 << c;
                }
                if used.count_ones() == 1 {
                    continue;
                }
                let mut off = q;
                let mut u = used;
                while u != 0 {
                    let c = u.trailing_zeros() as usize;
                    u &= u - 1;
                    self.cells[off] = buckets[c];
                    self.starts |= bit(off);
                    pending |= bit(off);
                    off += buckets[c].count_ones() as usize;
                }
            }
        }
    }

    /// Places `v` as a singleton at the start of the cell at offset `q`.
    fn individualize(&self, q: usize, v: usize) -> Self {
        let mut out = *self;
        let rest = self.cells[q] & !bit(v);
        out.cells[q] = bit(v);
        out.cells[q + 1] = rest;
        out.starts |= bit(q + 1);
        out
    }
}

struct Leaf {
    key: u128,
    labels: [u8; MAX_VERTICES],
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [Row; MAX_VERTICES],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<[u8; MAX_VERTICES]>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(d)` to unwind to the node at depth `d`.
    fn visit(&mut self, part: Partition) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part);
        }
        let depth = self.prefix.len();
        let q = BitIter(part.starts)
            .find(|&q| part.cells[q].count_ones() > 1)
            .expect("non-discrete partition has a nontrivial cell");
        let cell = part.cells[q];
        let mut explored: Row = 0;
        for v in BitIter(cell) {
            if explored != 0 && self.orbit_closure(explored) & bit(v) != 0 {
                continue;
            }
            let mut child = part.individualize(q, v);
            child.refine(self.rows, bit(q));
            self.prefix.push(v);
            let jump = self.visit(child);
            self.prefix.pop();
            explored |= bit(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition) -> Option<usize> {
        let n = self.n;
        let mut labels = [0u8; MAX_VERTICES];
        for p in 0..n {
            labels[part.cells[p].trailing_zeros() as usize] = p as u8;
        }
        let mut relabeled = [0 as Row; MAX_VERTICES];
        for v in 0..n {
            relabeled[labels[v] as usize] =
                BitIter(self.rows[v]).fold(0, |r, u| r | bit(labels[u] as usize));
        }
        let key = pack(n, &relabeled);
        let leaf = Leaf {
            key,
            labels,
            path: self.prefix.clone(),
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                key,
                labels,
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("best is set with first");
        for other in [first, best] {
            if other.key == key {
                let auto = compose_inverse(&other.labels, &labels, n);
                let d = common_prefix(&other.path, &self.prefix);
                self.autos.push(auto);
                return Some(d);
            }
        }
        if key < best.key {
            self.best = Some(leaf);
        }
        None
    }

    /// Closure of `set` under the stored automorphisms that fix the current
    /// prefix pointwise.
    fn orbit_closure(&self, set: Row) -> Row {
        let mut closure = set;
        loop {
            let mut next = closure;
            for a in &self.autos {
                if self.prefix.iter().any(|&v| a[v] as usize != v) {
                    continue;
                }
                for v in BitIter(closure) {
                    next |= bit(a[v] as usize);
                }
            }
            if next == closure {
                return closure;
            }
            closure = next;
        }
    }
}

/// `v -> other^{-1}(labels(v))`: maps each vertex to the vertex holding the
/// same canonical position in the other leaf.
fn compose_inverse(
    other: &[u8; MAX_VERTICES],
    labels: &[u8; MAX_VERTICES],
    n: usize,
) -> [u8; MAX_VERTICES] {
    let mut inv = [0u8; MAX_VERTICES];
    for v in 0..n {
        inv[other[v] as usize] = v as u8;
    }
    let mut out = [0u8; MAX_VERTICES];
    for v in 0..n {
        out[v] = inv[labels[v] as usize];
    }
    out
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
