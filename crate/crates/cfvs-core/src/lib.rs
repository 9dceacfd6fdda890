//! Connected feedback vertex set (CFVS) toolkit.
//!
//! A connected feedback vertex set of a multigraph G is a set F of at most k
//! vertices such that G - F is a forest and G[F] is connected. Two solver
//! routes are provided:
//!
//! * [`cfvs::cfvs_decide`]: enumerate compact representations of minimal
//!   feedback vertex sets ([`enumerate`]), then look for a small connected
//!   tree meeting every set of some representation via a group Steiner tree
//!   solver built on inclusion-exclusion counting of branching walks
//!   ([`steiner`]).
//! * [`dp::dp_solve`]: a dynamic program over nice tree decompositions
//!   ([`td`]) whose rows are (S, P, Y) partition tuples.
//!
//! Brute-force oracles, instance generators and benchmark series round out
//! the toolkit; the `cfvs` binary exposes everything on the command line.

pub mod bench;
pub mod cfvs;
pub mod dp;
pub mod enumerate;
pub mod gen;
pub mod graph;
pub mod io;
pub mod partition;
pub mod set;
pub mod stats;
pub mod steiner;
pub mod td;

pub use cfvs::{cfvs_bruteforce, cfvs_decide, cvc_to_cfvs, CfvsInstance, CfvsSolution, SolveMethod};
pub use graph::Graph;
pub use partition::Partition;
pub use set::VertexSet;
pub use stats::SolveStats;
