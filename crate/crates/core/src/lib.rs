//! Vertex-minor Ramsey numbers by exhaustive search over local-complementation
//! orbits.
//!
//! A graph `G` contains the edgeless graph `E_k` as a vertex-minor exactly
//! when some graph in its LC orbit has an independent set of size `k`. The
//! crate enumerates orbits by BFS over bitmask graphs, classifies whole
//! censuses of graphs by that predicate, and analyses the extremal graphs.

pub mod bounds;
pub mod canon;
pub mod classifier;
pub mod codec;
mod error;
pub mod generator;
pub mod graph;
pub mod invariants;
pub mod orbit;
pub mod par;
pub mod structure;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use codec::{decode, encode, Graph6Code};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};

/// The six 10-vertex graphs with no `E_4` vertex-minor, `G1` through `G6`.
pub const EXTREMAL_CODES: [&str; 6] = [
    "ICQ`fm}~w",
    "ICQ`fn}no",
    "ICQdbh{NO",
    "ICQb`pzlw",
    "ICQb`twlw",
    "IUZ~vz}}o",
];
