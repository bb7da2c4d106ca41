//! Isomorph-free generation of all graphs of a given order.
//!
//! Level `n` is built from level `n - 1` by adding a vertex with every
//! possible neighbourhood, canonicalizing, and keeping one graph per
//! canonical form. Graphs are emitted in ascending canonical-form order as
//! their canonically labeled representatives.

use rustc_hash::FxHashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, Row, MAX_VERTICES};
use crate::par::{map_with_state, Execution};

/// Largest order generated without an explicit long-run opt-in.
pub const DESK_MAX_ORDER: usize = 9;
/// Largest order the generator accepts at all.
pub const LONG_RUN_MAX_ORDER: usize = 10;

/// Parents extended per parallel batch; bounds the transient key buffers.
const BATCH: usize = 2048;

#[derive(Clone, Copy, Debug, Default)]
pub struct GenOptions {
    /// Permit orders above [`DESK_MAX_ORDER`].
    pub long_run: bool,
    pub execution: Execution,
}

/// One generated order: the sorted set of canonical forms.
#[derive(Clone, Debug)]
pub struct GenLevel {
    n: usize,
    forms: Vec<CanonicalForm>,
}

impl GenLevel {
    /// Order 1: the single vertex.
    pub fn first() -> Self {
        GenLevel {
            n: 1,
            forms: vec![canonical_form(&Graph::empty(1).expect("order 1"))],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of isomorphism classes at this order.
    pub fn emitted(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[CanonicalForm] {
        &self.forms
    }

    /// Canonical representatives in ascending canonical-form order.
    pub fn graphs(&self) -> impl ExactSizeIterator<Item = Graph> + '_ {
        self.forms.iter().map(CanonicalForm::to_graph)
    }

    /// All classes of order `n + 1`.
    pub fn extend(&self, exec: Execution) -> Result<GenLevel> {
        let n = self.n;
        if n + 1 > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                requested: n + 1,
                capacity: MAX_VERTICES,
            });
        }
        let parents: Vec<Graph> = self.graphs().collect();
        let mut seen: FxHashSet<CanonicalForm> = FxHashSet::default();
        for batch in parents.chunks(BATCH) {
            let children = map_with_state(
                batch,
                exec,
                || (),
                |_, parent| {
                    let mut local = FxHashSet::default();
                    for mask in 0..(1u32 << n) {
                        local.insert(canonical_form(&add_vertex(parent, mask as Row)));
                    }
                    local
                },
            );
            for local in children {
                seen.extend(local);
            }
        }
        let mut forms: Vec<_> = seen.into_iter().collect();
        forms.sort_unstable();
        Ok(GenLevel { n: n + 1, forms })
    }
}

/// `g` plus a new vertex `n` adjacent to `mask`.
fn add_vertex(g: &Graph, mask: Row) -> Graph {
    let n = g.order();
    let mut rows = *g.raw_rows();
    rows[n] = mask;
    for (u, row) in rows.iter_mut().enumerate().take(n) {
        if mask & bit(u) != 0 {
            *row |= bit(n);
        }
    }
    Graph::from_rows_unchecked(n + 1, rows)
}

fn check_order(n: usize, opts: &GenOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    if n > LONG_RUN_MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: n,
            capacity: LONG_RUN_MAX_ORDER,
        });
    }
    if n > DESK_MAX_ORDER && !opts.long_run {
        return Err(Error::LongRunRequired(n));
    }
    Ok(())
}

/// The generated level for order `n`.
pub fn generate_level(n: usize, opts: GenOptions) -> Result<GenLevel> {
    check_order(n, &opts)?;
    let mut level = GenLevel::first();
    while level.order() < n {
        level = level.extend(opts.execution)?;
    }
    Ok(level)
}

/// One graph per isomorphism class on `n` vertices (`n <= 9`).
pub fn generate_all(n: usize) -> Result<Vec<Graph>> {
    generate_all_with(n, GenOptions::default())
}

pub fn generate_all_with(n: usize, opts: GenOptions) -> Result<Vec<Graph>> {
    Ok(generate_level(n, opts)?.graphs().collect())
}

/// One graph per isomorphism class of connected graphs on `n` vertices.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>> {
    generate_connected_with(n, GenOptions::default())
}

pub fn generate_connected_with(n: usize, opts: GenOptions) -> Result<Vec<Graph>> {
    Ok(generate_level(n, opts)?
        .graphs()
        .filter(Graph::is_connected)
        .collect())
}
