//! Exact and asymptotic statistics of hook numbers in restricted partition
//! classes.
//!
//! For a partition class `L` and `h >= 1`, the hook count of `h` at size `n`
//! is the total number of cells with hook length `h` over all members of `L`
//! of size `n`. For partitions into odd parts these are written `a_h(n)`, for
//! distinct parts `b_h(n)`; the self-conjugate and distinct-odd analogues are
//! `a*_h(n)` and `b*_h(n)`.
//!
//! The crate is organized as:
//!
//! * [`partitions`]: enumeration of the classes and the brute-force hook
//!   oracle.
//! * [`qseries`]: exact truncated power series and the generating functions
//!   for `a_h(n)`, `b_h(n)`.
//! * [`exactconst`]: the leading constants `alpha_h`, `beta_h`, `gamma_h`
//!   in exact arithmetic over `Q` and `Q + Q log 2`.
//! * [`asymptotics`]: floating point main terms and their comparison with
//!   exact counts.
//! * [`conjectures`]: evidence scans for the starred statistics.

pub mod asymptotics;
pub mod conjectures;
pub mod error;
pub mod exactconst;

pub mod partitions;
pub mod qseries;

pub use error::{Error, Result};
pub use exactconst::{Log2Number, Rational};

pub use partitions::{Partition, PartitionClass};
pub use qseries::{FormalSeries, QPolynomial};
