//! Statistics of class groups and Picard groups of quadratic extensions.
//!
//! The crate has four layers:
//!
//! * [`abelian`] — exact combinatorics of finite abelian p-groups: partitions,
//!   automorphism/homomorphism/surjection counts, orbits of the automorphism
//!   group on elements (pointed classes), quotients, torsion.
//! * [`measures`] — the Cohen-Lenstra measures `mu^u` and the pointed measure
//!   `mu` on pointed p-groups, their moment sums, random-matrix cokernel
//!   samplers, and the conditional predictions these measures imply.
//! * [`ff`] — quadratic extensions of F_q(t) as hyperelliptic curves
//!   y^2 = f(x): enumeration, point counts and L-polynomials, explicit
//!   Riemann-Roch spaces, divisor class groups with the distinguished class
//!   delta = infty_1 - infty_2, and family scans.
//! * [`nf`] — quadratic number fields via binary quadratic forms: class
//!   groups, the split-prime difference class, local masses, and
//!   discriminant-density checks.
//!
//! [`report`] and [`cache`] carry the experiment plumbing shared by the CLI.
//!
//! Scans and samplers are data-parallel over rayon when the `parallel`
//! feature (default) is enabled; `Parallelism::Sequential` forces the
//! single-threaded path, which produces identical output.

pub mod abelian;
pub mod cache;
pub mod ff;
pub mod measures;
pub mod nf;
pub mod par;
pub mod report;
pub mod snf;
pub mod stats;

pub use par::Parallelism;
