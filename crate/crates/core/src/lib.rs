//! Exact computation of element-order statistics on finite groups.
//!
//! The library builds finite groups as dense Cayley tables (from
//! constructors, permutation generators, or text files), computes the
//! order-sum statistics ψ and ψ_π with their cyclic-group benchmarks,
//! certifies the order-divisibility partition onto the cyclic group of the
//! same order by integer max-flow, counts solutions of x^d = 1 per divisor,
//! classifies when a group attains the cyclic ψ_π benchmark (a normal
//! complement plus a cyclic witness), and sweeps all of this over a built-in
//! corpus of small groups.
//!
//! Everything is exact integer arithmetic; overflow is an error, never a
//! wrap. With the default `parallel` feature the element and corpus loops
//! run on a work-stealing pool; disabling it yields a dependency-free
//! sequential build with identical results.

pub mod arith;
pub mod catalog;
pub mod detect;
pub mod error;
mod exec;
pub mod group;
pub mod partition;
pub mod psi;

pub use arith::{psi_cyclic, psi_pi_cyclic, PrimeSet};
pub use catalog::{build, default_corpus, parse_spec, BuildOptions, Corpus, GroupSpec};
pub use detect::{
    detect_equality_structure, ratio_scan, search_question, verify_main_theorem, PiPolicy,
    VerificationReport,
};
pub use error::{Error, Result};
pub use group::{ElementSet, FiniteGroup, Permutation};
pub use partition::{
    build_network, count_solutions, frobenius_sweep, max_flow_partition, validate_certificate,
    PartitionCertificate,
};
pub use psi::{order_spectrum, pi_decompose, psi, psi_pi, psi_pi_crosschecked, psi_report};
