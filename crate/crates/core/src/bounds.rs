//! Lower bounds on `R_vm(k)` from disjoint unions of building blocks.
//!
//! A disjoint union `H_1 + ... + H_r` has `β = Σ β(H_i)`. If that sum is at
//! most `k - 1` the union has no `E_k` vertex-minor, so
//! `R_vm(k) > Σ |H_i|`.

use crate::codec::decode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orbit::beta;
use crate::EXTREMAL_CODES;

/// `log2(3)`.
pub const LOG2_3: f64 = 1.584_962_500_721_156_2;

/// Largest `k` for which `2^k - 1` fits in the table.
pub const TABLE_MAX_K: usize = 127;

/// A graph together with its `β`, computed from the full orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    graph: Graph,
    beta: usize,
}

impl BlockSpec {
    pub fn new(graph: Graph) -> Self {
        BlockSpec {
            beta: beta(&graph),
            graph,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// `Σ |H_i| + 1` when `Σ β(H_i) <= k - 1`.
pub fn building_block_bound(blocks: &[BlockSpec], k: usize) -> Option<usize> {
    let beta: usize = blocks.iter().map(BlockSpec::beta).sum();
    (beta < k).then(|| blocks.iter().map(BlockSpec::order).sum::<usize>() + 1)
}

/// `10q + v(r) + 1` where `k - 1 = 3q + r` and `v = (0, 2, 6)`.
pub fn corollary_bound(k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidTarget(k));
    }
    let (q, r) = ((k - 1) / 3, (k - 1) % 3);
    Ok(10 * q + [0, 2, 6][r] + 1)
}

/// The blocks behind [`corollary_bound`]: `q` copies of a 10-vertex
/// counterexample (`β = 3`) and, for `r = 1` or `2`, `K2` (`β = 1`) or the
/// triangular prism (`β = 2`).
pub fn corollary_blocks(k: usize) -> Result<Vec<BlockSpec>> {
    if k < 2 {
        return Err(Error::InvalidTarget(k));
    }
    let (q, r) = ((k - 1) / 3, (k - 1) % 3);
    let ten = BlockSpec::new(decode(EXTREMAL_CODES[0]).expect("valid code"));
    let mut blocks = vec![ten; q];
    match r {
        1 => blocks.push(BlockSpec::new(Graph::complete(2)?)),
        2 => blocks.push(BlockSpec::new(Graph::cycle(6)?.complement())),
        _ => {}
    }
    Ok(blocks)
}

/// `⌊k² / (2 log2 3)⌋`, the leading term of the asymptotic lower bound.
///
/// Panics if the floor is not stable under a relative perturbation of
/// `1e-12`, which would mean `f64` cannot settle it.
pub fn asymptotic_leading(k: usize) -> usize {
    let x = (k * k) as f64 / (2.0 * LOG2_3);
    let lo = (x * (1.0 - 1e-12)).floor();
    let hi = (x * (1.0 + 1e-12)).floor();
    assert_eq!(lo, hi, "floor of k^2/(2 log2 3) is unstable at k={k}");
    x.floor() as usize
}

/// `R_vm(k)` where it is known exactly.
pub fn known_value(k: usize) -> Option<usize> {
    match k {
        2 => Some(3),
        3 => Some(7),
        4 => Some(11),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub explicit_lower: usize,
    /// `2^k - 1`.
    pub upper_2k: u128,
    pub asymptotic_leading: usize,
    pub known_value: Option<usize>,
}

impl BoundRow {
    pub const TSV_HEADER: &'static str =
        "k\texplicit_lower\tupper_2k\tasymptotic_leading\tknown_value";

    pub fn tsv_row(&self) -> String {
        let known = self
            .known_value
            .map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.k, self.explicit_lower, self.upper_2k, self.asymptotic_leading, known
        )
    }
}

/// Rows for `k = 2..=k_max`.
pub fn bound_table(k_max: usize) -> Result<Vec<BoundRow>> {
    if !(2..=TABLE_MAX_K).contains(&k_max) {
        return Err(Error::InvalidTarget(k_max));
    }
    (2..=k_max)
        .map(|k| {
            Ok(BoundRow {
                k,
                explicit_lower: corollary_bound(k)?,
                upper_2k: (1u128 << k) - 1,
                asymptotic_leading: asymptotic_leading(k),
                known_value: known_value(k),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_values() {
        let got: Vec<_> = (2..=9).map(|k| corollary_bound(k).unwrap()).collect();
        assert_eq!(got, [3, 7, 11, 13, 17, 21, 23, 27]);
        assert!(corollary_bound(1).is_err());
    }

    #[test]
    fn prism_plus_counterexample() {
        let blocks = [
            BlockSpec::new(decode(EXTREMAL_CODES[2]).unwrap()),
            BlockSpec::new(Graph::cycle(6).unwrap().complement()),
        ];
        assert_eq!(
            blocks.iter().map(BlockSpec::beta).collect::<Vec<_>>(),
            [3, 2]
        );
        assert_eq!(building_block_bound(&blocks, 6), Some(17));
        assert_eq!(building_block_bound(&blocks, 5), None);
        assert_eq!(
            building_block_bound(&[BlockSpec::new(Graph::complete(2).unwrap())], 2),
            Some(3)
        );
    }

    #[test]
    fn table_rows() {
        let t = bound_table(8).unwrap();
        assert_eq!(t.len(), 7);
        let r3 = t[1];
        assert_eq!(
            (r3.k, r3.explicit_lower, r3.upper_2k, r3.asymptotic_leading),
            (3, 7, 7, 2)
        );
        let r8 = t[6];
        assert_eq!((r8.explicit_lower, r8.asymptotic_leading), (23, 20));
        assert_eq!(t[0].asymptotic_leading, 1);
        assert_eq!(bound_table(2).unwrap().len(), 1);
        assert!(bound_table(1).is_err());
    }
}
