//! Three-phase classification of graphs for the predicate "`E_k` is a
//! vertex-minor of `G`".
//!
//! * P1: `α(G) >= k`, no orbit work.
//! * P2: the orbit search finds a member with `α >= k`.
//! * P3: the whole orbit was explored and every member has `α < k`.
//! * P3_BUDGETED: the search budget ran out first.
//!
//! Streams are classified in chunks; chunks may be processed in parallel but
//! counts and Phase-3 records come out exactly as a sequential run would
//! produce them.

use std::fmt;

use crate::codec::{encode, Graph6Code};
use crate::error::{Error, Result};
use crate::generator::{generate_level, GenOptions};
use crate::graph::Graph;
use crate::invariants::independence_number;
use crate::orbit::{beta_disconnected, OrbitExplorer, Outcome};
use crate::par::{map_with_state, Execution};

/// Graphs classified per parallel batch.
const CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    P1,
    P2,
    P3,
    P3Budgeted,
}

impl Phase {
    /// P3 or P3_BUDGETED.
    pub fn is_phase3(self) -> bool {
        matches!(self, Phase::P3 | Phase::P3Budgeted)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::P1 => "P1",
            Phase::P2 => "P2",
            Phase::P3 => "P3",
            Phase::P3Budgeted => "P3_BUDGETED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseRecord {
    pub code: Graph6Code,
    pub phase: Phase,
    /// Orbit members tested; 0 for P1.
    pub explored: usize,
    /// For P1 this is `α(G)`; otherwise the largest `α` among tested members.
    pub max_alpha: usize,
}

impl fmt::Display for PhaseRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.code, self.phase, self.explored, self.max_alpha
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhaseCounts {
    pub n: usize,
    pub k: usize,
    pub budget: Option<usize>,
    pub total: usize,
    pub p1: usize,
    pub p2: usize,
    pub p3: usize,
    pub p3_budgeted: usize,
}

impl PhaseCounts {
    pub fn new(n: usize, k: usize, budget: Option<usize>) -> Self {
        PhaseCounts {
            n,
            k,
            budget,
            ..Default::default()
        }
    }

    pub fn record(&mut self, phase: Phase) {
        self.total += 1;
        match phase {
            Phase::P1 => self.p1 += 1,
            Phase::P2 => self.p2 += 1,
            Phase::P3 => self.p3 += 1,
            Phase::P3Budgeted => self.p3_budgeted += 1,
        }
    }

    /// Adds the tallies of `other`, which must share `k` and `budget`.
    pub fn merge(&mut self, other: &PhaseCounts) {
        debug_assert_eq!((self.k, self.budget), (other.k, other.budget));
        self.total += other.total;
        self.p1 += other.p1;
        self.p2 += other.p2;
        self.p3 += other.p3;
        self.p3_budgeted += other.p3_budgeted;
    }

    /// `p3 + p3_budgeted`.
    pub fn p3_total(&self) -> usize {
        self.p3 + self.p3_budgeted
    }

    pub const TSV_HEADER: &'static str = "n\tk\tbudget\ttotal\tp1\tp2\tp3\tp3_budgeted";

    pub fn tsv_row(&self) -> String {
        let budget = self
            .budget
            .map_or_else(|| "-".to_string(), |b| b.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n, self.k, budget, self.total, self.p1, self.p2, self.p3, self.p3_budgeted
        )
    }
}

impl fmt::Display for PhaseCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let budget = self
            .budget
            .map_or_else(|| "none".to_string(), |b| b.to_string());
        writeln!(f, "order:        {}", self.n)?;
        writeln!(f, "target k:     {}", self.k)?;
        writeln!(f, "budget:       {budget}")?;
        writeln!(f, "total:        {}", self.total)?;
        writeln!(f, "phase 1:      {}", self.p1)?;
        writeln!(f, "phase 2:      {}", self.p2)?;
        writeln!(f, "phase 3:      {}", self.p3)?;
        writeln!(f, "phase 3 (budget hit): {}", self.p3_budgeted)?;
        write!(f, "phase 3 total: {}", self.p3_total())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Cap on orbit members tested per graph.
    pub budget: Option<usize>,
    /// Decide disconnected graphs from per-component `β` instead of a
    /// whole-orbit search. Changes `explored` in the records, not phases.
    pub disconnected_fast_path: bool,
    pub execution: Execution,
}

/// Classifies graphs one at a time, reusing orbit buffers between calls.
#[derive(Default)]
pub struct Classifier {
    explorer: OrbitExplorer,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classify(&mut self, g: &Graph, k: usize, opts: &ClassifyOptions) -> PhaseRecord {
        let code = encode(g);
        let alpha = independence_number(g);
        if alpha >= k {
            return PhaseRecord {
                code,
                phase: Phase::P1,
                explored: 0,
                max_alpha: alpha,
            };
        }
        if opts.disconnected_fast_path && !g.is_connected() {
            let beta = beta_disconnected(g);
            return PhaseRecord {
                code,
                phase: if beta >= k { Phase::P2 } else { Phase::P3 },
                explored: 0,
                max_alpha: beta,
            };
        }
        let s = self
            .explorer
            .search(g, k, opts.budget)
            .expect("k > alpha >= 0, so k is a valid target");
        PhaseRecord {
            code,
            phase: match s.outcome {
                Outcome::Found => Phase::P2,
                Outcome::Exhausted => Phase::P3,
                Outcome::Budget => Phase::P3Budgeted,
            },
            explored: s.explored,
            max_alpha: s.max_alpha_seen,
        }
    }
}

/// Classifies a single graph.
pub fn classify_one(g: &Graph, k: usize, budget: Option<usize>) -> PhaseRecord {
    let opts = ClassifyOptions {
        budget,
        ..Default::default()
    };
    Classifier::new().classify(g, k, &opts)
}

/// Classifies a stream of `(line, graph)` items, all of one order.
///
/// Phase-3 records (P3 and P3_BUDGETED) are passed to `sink` in input order.
/// The first malformed item aborts the run with its error. An empty stream
/// yields zero counts with `n = 0`.
pub fn classify_stream<I, F>(
    input: I,
    k: usize,
    opts: &ClassifyOptions,
    mut sink: F,
) -> Result<PhaseCounts>
where
    I: IntoIterator<Item = Result<(usize, Graph)>>,
    F: FnMut(&PhaseRecord) -> Result<()>,
{
    let mut counts = PhaseCounts::new(0, k, opts.budget);
    let mut order = None;
    let mut chunk = Vec::with_capacity(CHUNK);
    let mut input = input.into_iter();
    loop {
        chunk.clear();
        for item in input.by_ref() {
            let (line, g) = item?;
            match order {
                None => order = Some(g.order()),
                Some(n) if n != g.order() => {
                    return Err(Error::MixedOrders {
                        line,
                        expected: n,
                        found: g.order(),
                    })
                }
                Some(_) => {}
            }
            chunk.push(g);
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let records = map_with_state(&chunk, opts.execution, Classifier::new, |c, g| {
            c.classify(g, k, opts)
        });
        for r in &records {
            counts.record(r.phase);
            if r.phase.is_phase3() {
                sink(r)?;
            }
        }
    }
    counts.n = order.unwrap_or(0);
    Ok(counts)
}

/// Numbers a plain iterator of graphs from line 1 for [`classify_stream`].
pub fn numbered<I: IntoIterator<Item = Graph>>(
    graphs: I,
) -> impl Iterator<Item = Result<(usize, Graph)>> {
    graphs.into_iter().enumerate().map(|(i, g)| Ok((i + 1, g)))
}

/// Supplies complete censuses: one graph per isomorphism class of each order.
pub trait GraphSource {
    fn census(&mut self, n: usize) -> Result<Vec<Graph>>;
}

/// Censuses from the built-in generator.
#[derive(Clone, Copy, Debug, Default)]
pub struct GeneratorSource {
    pub options: GenOptions,
}

impl GraphSource for GeneratorSource {
    fn census(&mut self, n: usize) -> Result<Vec<Graph>> {
        Ok(generate_level(n, self.options)?.graphs().collect())
    }
}

/// Smallest `n >= n_start` whose census has no Phase-3 graph for `k`.
///
/// Orbits are searched without a budget, so a Phase-3 graph is a genuine
/// counterexample. Errors from the source (for instance an order it cannot
/// supply) end the search.
pub fn ramsey_value_search(
    k: usize,
    n_start: usize,
    source: &mut dyn GraphSource,
    execution: Execution,
) -> Result<usize> {
    let opts = ClassifyOptions {
        execution,
        ..Default::default()
    };
    let mut n = n_start.max(1);
    loop {
        let census = source.census(n)?;
        let counts = classify_stream(numbered(census), k, &opts, |_| Ok(()))?;
        if counts.p3_total() == 0 {
            return Ok(n);
        }
        n += 1;
    }
}
