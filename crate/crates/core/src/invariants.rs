//! Exact invariants of small graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, BitIter, Graph, Row, VertexSet, MAX_VERTICES};

/// Largest order accepted by [`char_poly`].
pub const CHAR_POLY_MAX_ORDER: usize = 12;

/// A distance-like quantity that may be unbounded (diameter of a
/// disconnected graph, girth of a forest). Renders as `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub order: usize,
    pub edge_count: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub diameter: Distance,
    pub girth: Distance,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
}

impl InvariantRecord {
    pub fn of(g: &Graph) -> Self {
        InvariantRecord {
            order: g.order(),
            edge_count: g.edge_count(),
            alpha: independence_number(g),
            omega: clique_number(g),
            chi: chromatic_number(g),
            diameter: diameter(g),
            girth: girth(g),
            degree_sequence: degree_sequence(g),
            connected: g.is_connected(),
        }
    }
}

/// Degree sequence in compressed exponent notation, e.g. `[9,7^2,5^5,3^2]`.
pub fn format_degree_sequence(seq: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        let d = seq[i];
        let run = seq[i..].iter().take_while(|&&x| x == d).count();
        parts.push(if run == 1 {
            format!("{d}")
        } else {
            format!("{d}^{run}")
        });
        i += run;
    }
    format!("[{}]", parts.join(","))
}

/// Does `g` have an independent set of size `k`?
///
/// Branches on the lowest-index candidate; the candidate mask is narrowed to
/// the non-neighbors of every chosen vertex. Returns on the first witness.
pub fn has_independent_set(g: &Graph, k: usize) -> bool {
    fn search(rows: &[Row; MAX_VERTICES], cand: Row, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !bit(v);
        search(rows, rest & !rows[v], need - 1) || (rows[v] & rest != 0 && search(rows, rest, need))
    }
    search(g.raw_rows(), g.vertices().0, k)
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_capped(g, g.order())
}

/// `min(α(g), cap)`, stopping as soon as an independent set of size `cap`
/// is found.
pub fn independence_number_capped(g: &Graph, cap: usize) -> usize {
    fn search(rows: &[Row; MAX_VERTICES], cand: Row, size: usize, best: &mut usize, cap: usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !bit(v);
        search(rows, rest & !rows[v], size + 1, best, cap);
        // A vertex with no candidate neighbours is always worth taking.
        if *best < cap && rows[v] & rest != 0 {
            search(rows, rest, size, best, cap);
        }
    }
    let mut best = 0;
    search(g.raw_rows(), g.vertices().0, 0, &mut best, cap);
    best.min(cap)
}

/// A maximum independent set, lowest-index-first among ties found.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    fn search(rows: &[Row; MAX_VERTICES], cand: Row, chosen: Row, best: &mut Row) {
        if cand == 0 {
            if chosen.count_ones() > best.count_ones() {
                *best = chosen;
            }
            return;
        }
        if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !bit(v);
        search(rows, rest & !rows[v], chosen | bit(v), best);
        if rows[v] & rest != 0 {
            search(rows, rest, chosen, best);
        }
    }
    let mut best = 0;
    search(g.raw_rows(), g.vertices().0, 0, &mut best);
    VertexSet(best)
}

pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// Exact chromatic number by iterative deepening on k-colourability.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    let rows = g.raw_rows();
    if g.edge_count() == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    fn colour(
        rows: &[Row; MAX_VERTICES],
        order: &[usize],
        classes: &mut Vec<Row>,
        k: usize,
    ) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        for c in 0..classes.len() {
            if classes[c] & rows[v] == 0 {
                classes[c] |= bit(v);
                if colour(rows, rest, classes, k) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            if colour(rows, rest, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }

    let lower = greedy_clique(g).max(1);
    (lower..=n)
        .find(|&k| colour(rows, &order, &mut Vec::with_capacity(k), k))
        .expect("n colours always suffice")
}

fn greedy_clique(g: &Graph) -> usize {
    (0..g.order())
        .map(|start| {
            let mut cand = g.raw_rows()[start];
            let mut size = 1;
            while cand != 0 {
                let v = BitIter(cand)
                    .max_by_key(|&u| (g.raw_rows()[u] & cand).count_ones())
                    .expect("nonempty");
                cand &= g.raw_rows()[v];
                size += 1;
            }
            size
        })
        .max()
        .unwrap_or(0)
}

/// Degrees in descending order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// BFS layer distances from `src`; unreachable vertices are `usize::MAX`.
fn distances_from(g: &Graph, src: usize) -> [usize; MAX_VERTICES] {
    let mut dist = [usize::MAX; MAX_VERTICES];
    dist[src] = 0;
    let mut seen = bit(src);
    let mut frontier = bit(src);
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0;
        for u in BitIter(frontier) {
            next |= g.raw_rows()[u];
        }
        next &= !seen;
        for u in BitIter(next) {
            dist[u] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

pub fn diameter(g: &Graph) -> Distance {
    if !g.is_connected() {
        return Distance::Infinite;
    }
    let n = g.order();
    let d = (0..n)
        .map(|v| distances_from(g, v)[..n].iter().copied().max().unwrap_or(0))
        .max()
        .unwrap_or(0);
    Distance::Finite(d)
}

/// Length of a shortest cycle: the minimum over edges `uw` of the distance
/// from `u` to `w` once `uw` is removed, plus one.
pub fn girth(g: &Graph) -> Distance {
    let mut best = usize::MAX;
    for (u, w) in g.edges() {
        let mut rows = *g.raw_rows();
        rows[u] &= !bit(w);
        rows[w] &= !bit(u);
        let mut seen = bit(u);
        let mut frontier = bit(u);
        let mut d = 0;
        while frontier != 0 && frontier & bit(w) == 0 && d + 1 < best {
            d += 1;
            let mut next = 0;
            for x in BitIter(frontier) {
                next |= rows[x];
            }
            frontier = next & !seen;
            seen |= next;
        }
        if frontier & bit(w) != 0 {
            best = best.min(d + 1);
        }
    }
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// Connected components, ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut left = g.vertices().0;
    let mut out = Vec::new();
    while left != 0 {
        let c = g.component_of(left.trailing_zeros() as usize);
        left &= !c.0;
        out.push(c);
    }
    out
}

/// Polynomial with exact integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial(pub Vec<i128>);

impl IntPolynomial {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coefficient(&self, power: usize) -> i128 {
        self.0.get(power).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 && p > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match p {
                0 => write!(f, "{sign}{coef}")?,
                1 => write!(f, "{sign}{coef}x")?,
                _ => write!(f, "{sign}{coef}x^{p}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// recurrence over `i128`.
pub fn char_poly(g: &Graph) -> Result<IntPolynomial> {
    let n = g.order();
    if n > CHAR_POLY_MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: n,
            capacity: CHAR_POLY_MAX_ORDER,
        });
    }
    let rows = g.raw_rows();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    // M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
    let mut m = [[0i128; MAX_VERTICES]; MAX_VERTICES];
    for k in 1..=n {
        let mut am = [[0i128; MAX_VERTICES]; MAX_VERTICES];
        for i in 0..n {
            for u in BitIter(rows[i]) {
                for j in 0..n {
                    am[i][j] += m[u][j];
                }
            }
        }
        for (i, row) in am.iter_mut().enumerate().take(n) {
            row[i] += coeffs[n - k + 1];
        }
        m = am;
        let mut trace = 0i128;
        for i in 0..n {
            for u in BitIter(rows[i]) {
                trace += m[u][i];
            }
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -trace / k as i128;
    }
    Ok(IntPolynomial(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::decode;

    #[test]
    fn alpha_basics() {
        assert_eq!(independence_number(&decode("IUZ~vz}}o").unwrap()), 2);
        assert_eq!(independence_number(&Graph::complete(6).unwrap()), 1);
        let c5 = Graph::cycle(5).unwrap();
        assert!(has_independent_set(&c5, 2));
        assert!(!has_independent_set(&c5, 3));
        assert!(has_independent_set(&Graph::empty(4).unwrap(), 4));
        assert!(!has_independent_set(&decode("IUZ~vz}}o").unwrap(), 3));
        assert_eq!(independence_number_capped(&Graph::empty(9).unwrap(), 4), 4);
    }

    #[test]
    fn mis_is_independent_and_maximum() {
        let g = decode("ICQdbh{NO").unwrap();
        let s = maximum_independent_set(&g);
        assert_eq!(s.len(), independence_number(&g));
        assert!(s.iter().all(|v| g.neighbors(v).0 & s.0 == 0));
    }

    #[test]
    fn clique_and_colouring() {
        assert_eq!(clique_number(&Graph::empty(4).unwrap()), 1);
        assert_eq!(clique_number(&Graph::complete(5).unwrap()), 5);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(chromatic_number(&Graph::complete(7).unwrap()), 7);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&decode("IUZ~vz}}o").unwrap()), 6);
        assert_eq!(chromatic_number(&decode("ICQ`fm}~w").unwrap()), 5);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(
            degree_sequence(&decode("ICQb`twlw").unwrap()),
            [7, 5, 5, 5, 5, 5, 3, 3, 3, 3]
        );
        assert_eq!(
            degree_sequence(&decode("ICQ`fm}~w").unwrap()),
            [9, 7, 7, 5, 5, 5, 5, 5, 3, 3]
        );
        assert_eq!(degree_sequence(&Graph::empty(3).unwrap()), [0, 0, 0]);
        assert_eq!(
            format_degree_sequence(&[9, 7, 7, 5, 5, 5, 5, 5, 3, 3]),
            "[9,7^2,5^5,3^2]"
        );
    }

    #[test]
    fn distances() {
        assert_eq!(diameter(&decode("ICQdbh{NO").unwrap()), Distance::Finite(3));
        assert_eq!(diameter(&decode("ICQ`fn}no").unwrap()), Distance::Finite(2));
        assert_eq!(diameter(&Graph::empty(2).unwrap()), Distance::Infinite);
        assert_eq!(diameter(&Graph::empty(1).unwrap()), Distance::Finite(0));
        assert_eq!(Distance::Infinite.to_string(), "inf");
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&Graph::cycle(5).unwrap()), Distance::Finite(5));
        assert_eq!(girth(&Graph::cycle(6).unwrap()), Distance::Finite(6));
        assert_eq!(girth(&Graph::complete(4).unwrap()), Distance::Finite(3));
        assert_eq!(girth(&Graph::path(6).unwrap()), Distance::Infinite);
        // K_{2,3} has girth 4.
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(girth(&k23), Distance::Finite(4));
    }

    #[test]
    fn component_lists() {
        let c5 = Graph::cycle(5).unwrap();
        let two = c5.disjoint_union(&c5).unwrap();
        assert_eq!(
            components(&two),
            [VertexSet(0b11111), VertexSet(0b11111 << 5)]
        );
        assert_eq!(components(&c5), [c5.vertices()]);
        assert_eq!(components(&Graph::empty(4).unwrap()).len(), 4);
    }

    #[test]
    fn small_char_polys() {
        assert_eq!(
            char_poly(&Graph::complete(2).unwrap()).unwrap().0,
            [-1, 0, 1]
        );
        assert_eq!(
            char_poly(&Graph::empty(4).unwrap()).unwrap().0,
            [0, 0, 0, 0, 1]
        );
        assert!(char_poly(&Graph::empty(13).unwrap()).is_err());
        assert_eq!(IntPolynomial(vec![-1, 0, 1]).to_string(), "x^2-1");
    }
}
