//! Breadth-first enumeration of LC orbits.
//!
//! The orbit of a labeled graph is explored with a FIFO queue; neighbours of
//! a member are generated by local complementation at each vertex in
//! ascending order. The visited set is keyed on the raw labeled rows.
//!
//! Budgets count members dequeued and tested. A search that has tested
//! `budget` members and still has unexplored members queued stops with
//! [`Outcome::Budget`].

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashSet;
use sha2::{Digest, Sha256};

use crate::codec::{encode, Graph6Code};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{components, independence_number, independence_number_capped};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// A member with an independent set of size `k` was found.
    Found,
    /// The whole orbit was explored without finding one.
    Exhausted,
    /// The budget ran out first.
    Budget,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Found => "FOUND",
            Outcome::Exhausted => "EXHAUSTED",
            Outcome::Budget => "BUDGET",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub outcome: Outcome,
    /// Distinct labeled graphs dequeued and tested.
    pub explored: usize,
    /// Largest independence number among tested members.
    pub max_alpha_seen: usize,
    /// Present iff `outcome == Found`.
    pub witness: Option<Graph>,
}

/// The members of an orbit in BFS order.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub members: Vec<Graph>,
    /// Set when a budget cut the enumeration short.
    pub truncated: bool,
}

/// Reusable BFS buffers. Searching many graphs in a row through one
/// explorer avoids reallocating the visited set for every orbit.
#[derive(Default)]
pub struct OrbitExplorer {
    visited: FxHashSet<Graph>,
    queue: Vec<Graph>,
}

impl OrbitExplorer {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self, root: Graph) {
        self.visited.clear();
        self.queue.clear();
        self.visited.insert(root);
        self.queue.push(root);
    }

    /// Queues every unvisited `g*v`. Vertices of degree < 2 leave `g` fixed.
    #[inline]
    fn expand(&mut self, g: &Graph) {
        for v in 0..g.order() {
            if g.degree(v) < 2 {
                continue;
            }
            let h = g.local_complement_unchecked(v);
            if self.visited.insert(h) {
                self.queue.push(h);
            }
        }
    }

    pub fn enumerate(&mut self, g: &Graph, budget: Option<usize>) -> Orbit {
        self.reset(*g);
        let limit = budget.unwrap_or(usize::MAX);
        let mut head = 0;
        while head < self.queue.len() && head < limit {
            let cur = self.queue[head];
            head += 1;
            self.expand(&cur);
        }
        let truncated = head < self.queue.len();
        let mut members = std::mem::take(&mut self.queue);
        members.truncate(head);
        Orbit { members, truncated }
    }

    pub fn search(&mut self, g: &Graph, k: usize, budget: Option<usize>) -> Result<OrbitSummary> {
        if k == 0 {
            return Err(Error::InvalidTarget(k));
        }
        self.reset(*g);
        let limit = budget.unwrap_or(usize::MAX);
        let mut head = 0;
        let mut max_alpha = 0;
        while head < self.queue.len() {
            let cur = self.queue[head];
            head += 1;
            let a = independence_number_capped(&cur, k);
            if a >= k {
                return Ok(OrbitSummary {
                    outcome: Outcome::Found,
                    explored: head,
                    max_alpha_seen: max_alpha.max(independence_number(&cur)),
                    witness: Some(cur),
                });
            }
            max_alpha = max_alpha.max(a);
            self.expand(&cur);
            if head >= limit && head < self.queue.len() {
                return Ok(OrbitSummary {
                    outcome: Outcome::Budget,
                    explored: head,
                    max_alpha_seen: max_alpha,
                    witness: None,
                });
            }
        }
        Ok(OrbitSummary {
            outcome: Outcome::Exhausted,
            explored: head,
            max_alpha_seen: max_alpha,
            witness: None,
        })
    }
}

/// All distinct labeled graphs LC-reachable from `g`, in BFS order.
pub fn enumerate_orbit(g: &Graph, budget: Option<usize>) -> Orbit {
    OrbitExplorer::new().enumerate(g, budget)
}

/// Searches the orbit of `g` for a member with `α >= k`, testing each
/// member (the root included) as it is dequeued.
pub fn orbit_search(g: &Graph, k: usize, budget: Option<usize>) -> Result<OrbitSummary> {
    OrbitExplorer::new().search(g, k, budget)
}

/// `β(g)`: the largest independence number over the whole orbit.
pub fn beta(g: &Graph) -> usize {
    enumerate_orbit(g, None)
        .members
        .iter()
        .map(independence_number)
        .max()
        .expect("an orbit contains its root")
}

/// `β` as the sum of `β` over connected components.
pub fn beta_disconnected(g: &Graph) -> usize {
    components(g)
        .into_iter()
        .map(|c| beta(&g.induced_subgraph(c).expect("components are nonempty")))
        .sum()
}

/// SHA-256 over the members sorted by row tuple, each serialized as its `n`
/// rows in big-endian `u16`.
pub fn orbit_digest(members: &[Graph]) -> [u8; 32] {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    let mut h = Sha256::new();
    for g in &sorted {
        for r in g.rows() {
            h.update(r.to_be_bytes());
        }
    }
    h.finalize().into()
}

/// A reproducible proof that no orbit member of `code` has `α >= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub code: Graph6Code,
    pub k: usize,
    pub orbit_size: usize,
    pub max_alpha: usize,
    pub digest: [u8; 32],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateField {
    K,
    OrbitSize,
    MaxAlpha,
    Digest,
}

impl fmt::Display for CertificateField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateField::K => "k",
            CertificateField::OrbitSize => "orbit_size",
            CertificateField::MaxAlpha => "max_alpha",
            CertificateField::Digest => "digest",
        })
    }
}

/// The first field of a certificate that disagrees with a fresh enumeration.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("certificate field {field}: recorded {recorded}, recomputed {recomputed}")]
pub struct CertificateMismatch {
    pub field: CertificateField,
    pub recorded: String,
    pub recomputed: String,
}

pub fn make_certificate(code: &Graph6Code, k: usize) -> Result<Certificate> {
    let g = code.decode();
    let summary = orbit_search(&g, k, None)?;
    if summary.outcome == Outcome::Found {
        return Err(Error::WitnessExists {
            code: code.to_string(),
            k,
        });
    }
    let orbit = enumerate_orbit(&g, None);
    debug_assert_eq!(orbit.members.len(), summary.explored);
    Ok(Certificate {
        code: code.clone(),
        k,
        orbit_size: orbit.members.len(),
        max_alpha: summary.max_alpha_seen,
        digest: orbit_digest(&orbit.members),
    })
}

/// Re-enumerates the orbit and checks every recorded field.
pub fn verify_certificate(c: &Certificate) -> Result<(), CertificateMismatch> {
    let orbit = enumerate_orbit(&c.code.decode(), None);
    let max_alpha = orbit
        .members
        .iter()
        .map(independence_number)
        .max()
        .expect("an orbit contains its root");
    let mismatch = |field, recorded: String, recomputed: String| CertificateMismatch {
        field,
        recorded,
        recomputed,
    };
    if c.max_alpha >= c.k || c.k == 0 {
        return Err(mismatch(
            CertificateField::K,
            c.k.to_string(),
            format!("k > {}", c.max_alpha),
        ));
    }
    if orbit.members.len() != c.orbit_size {
        return Err(mismatch(
            CertificateField::OrbitSize,
            c.orbit_size.to_string(),
            orbit.members.len().to_string(),
        ));
    }
    if max_alpha != c.max_alpha {
        return Err(mismatch(
            CertificateField::MaxAlpha,
            c.max_alpha.to_string(),
            max_alpha.to_string(),
        ));
    }
    let digest = orbit_digest(&orbit.members);
    if digest != c.digest {
        return Err(mismatch(
            CertificateField::Digest,
            to_hex(&c.digest),
            to_hex(&digest),
        ));
    }
    Ok(())
}

pub fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn from_hex(s: &str) -> Option<[u8; 32]> {
    if s.len() != 64 || !s.is_ascii() {
        return None;
    }
    let mut out = [0u8; 32];
    for (i, byte) in out.iter_mut().enumerate() {
        *byte = u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok()?;
    }
    Some(out)
}

impl fmt::Display for Certificate {
    /// `key=value` lines: code, k, orbit_size, max_alpha, digest.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code={}", self.code)?;
        writeln!(f, "k={}", self.k)?;
        writeln!(f, "orbit_size={}", self.orbit_size)?;
        writeln!(f, "max_alpha={}", self.max_alpha)?;
        writeln!(f, "digest={}", to_hex(&self.digest))
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: String| Error::CertificateFormat(m);
        let (mut code, mut k, mut size, mut alpha, mut digest) = (None, None, None, None, None);
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got {line:?}")))?;
            let num = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad(format!("{key}: not an integer")))
            };
            match key {
                "code" => code = Some(Graph6Code::new(value)?),
                "k" => k = Some(num()?),
                "orbit_size" => size = Some(num()?),
                "max_alpha" => alpha = Some(num()?),
                "digest" => {
                    digest = Some(
                        from_hex(value).ok_or_else(|| bad("digest: not 64 hex digits".into()))?,
                    )
                }
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        let missing = |name: &str| bad(format!("missing {name}"));
        Ok(Certificate {
            code: code.ok_or_else(|| missing("code"))?,
            k: k.ok_or_else(|| missing("k"))?,
            orbit_size: size.ok_or_else(|| missing("orbit_size"))?,
            max_alpha: alpha.ok_or_else(|| missing("max_alpha"))?,
            digest: digest.ok_or_else(|| missing("digest"))?,
        })
    }
}

/// Convenience for callers holding a graph rather than a code.
pub fn certificate_for(g: &Graph, k: usize) -> Result<Certificate> {
    make_certificate(&encode(g), k)
}
