//! Double-star sequences and the general second Zagreb index of simple graphs.
//!
//! - [`exactnum`]: exact scalars, Stirling and Comtet numbers, product sets.
//! - [`graph`]: simple graphs, edge-list and graph6 parsing, standard families.
//! - [`starseq`]: the double-star and frequency triangles and the transforms
//!   between them.
//! - [`zagreb`]: `M2^(p)` by three routes, its rational generating function
//!   and linear recurrence.
//! - [`oracle`]: brute-force references used by tests and `verify`.
//! - [`verify`]: the per-graph identity suite behind `dstar verify`.

pub mod exactnum;
pub mod graph;
pub mod oracle;
pub mod starseq;
pub mod verify;
pub mod zagreb;

pub use exactnum::{ExactInt, ExactRational, NatSet, SetPolynomial};
pub use graph::{Family, Graph, GraphError};
pub use starseq::{StarTriangle, TriangleError};
pub use zagreb::{RationalGF, RecurrenceReport};
