//! Naive reference implementations used as oracles.
//!
//! Nothing here touches the bitmask machinery: graphs are vectors of
//! adjacency sets and everything is recomputed by plain enumeration.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use vmr::classifier::{Phase, PhaseRecord};
use vmr::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefGraph {
    pub adj: Vec<BTreeSet<usize>>,
}

impl RefGraph {
    pub fn new(n: usize) -> Self {
        RefGraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut r = RefGraph::new(g.order());
        for (u, v) in g.edges() {
            r.add_edge(u, v);
        }
        r
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = self.edge_list();
        Graph::from_edges(self.n(), &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complements the neighbourhood of `v`, pair by pair.
    pub fn local_complement(&self, v: usize) -> RefGraph {
        let mut out = self.clone();
        let nb: Vec<usize> = self.adj[v].iter().copied().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i], nb[j]);
                if out.has_edge(a, b) {
                    out.adj[a].remove(&b);
                    out.adj[b].remove(&a);
                } else {
                    out.add_edge(a, b);
                }
            }
        }
        out
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Largest independent set, by checking every subset.
    pub fn alpha(&self) -> usize {
        let n = self.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if s.len() > best && self.is_independent(&s) {
                best = s.len();
            }
        }
        best
    }

    pub fn permute(&self, perm: &[usize]) -> RefGraph {
        let mut out = RefGraph::new(self.n());
        for (u, v) in self.edge_list() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = vec![];
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut q = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = q.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, vs: &[usize]) -> RefGraph {
        let mut out = RefGraph::new(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }
}

/// BFS orbit, local complementation at every vertex in ascending order.
pub fn ref_orbit(g: &RefGraph) -> Vec<RefGraph> {
    let mut seen = HashSet::from([g.clone()]);
    let mut order = vec![g.clone()];
    let mut head = 0;
    while head < order.len() {
        let cur = order[head].clone();
        head += 1;
        for v in 0..cur.n() {
            let h = cur.local_complement(v);
            if seen.insert(h.clone()) {
                order.push(h);
            }
        }
    }
    order
}

pub fn ref_beta(g: &RefGraph) -> usize {
    ref_orbit(g).iter().map(RefGraph::alpha).max().unwrap()
}

/// Three-phase classification without a budget.
pub fn ref_classify(g: &Graph, k: usize) -> PhaseRecord {
    let r = RefGraph::from_graph(g);
    let code = vmr::encode(g);
    let a = r.alpha();
    if a >= k {
        return PhaseRecord {
            code,
            phase: Phase::P1,
            explored: 0,
            max_alpha: a,
        };
    }
    let mut seen = HashSet::from([r.clone()]);
    let mut queue = VecDeque::from([r]);
    let mut explored = 0;
    let mut max_alpha = 0;
    while let Some(cur) = queue.pop_front() {
        explored += 1;
        let a = cur.alpha();
        max_alpha = max_alpha.max(a);
        if a >= k {
            return PhaseRecord {
                code,
                phase: Phase::P2,
                explored,
                max_alpha,
            };
        }
        for v in 0..cur.n() {
            let h = cur.local_complement(v);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    PhaseRecord {
        code,
        phase: Phase::P3,
        explored,
        max_alpha,
    }
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = RefGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..(1 << pairs.len())).map(move |mask| {
        let mut g = RefGraph::new(n);
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        g
    })
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![];
    heap(n, &mut a, &mut out);
    out
}

/// Least sorted edge list over all relabelings.
pub fn naive_canon(g: &RefGraph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e = g.permute(p).edge_list();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

/// Integer polynomial product, lowest degree first.
pub fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `det(x I - A)` by fraction-free Gaussian elimination.
pub fn char_det_at(g: &Graph, x: i128) -> i128 {
    let n = g.order();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        x
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
