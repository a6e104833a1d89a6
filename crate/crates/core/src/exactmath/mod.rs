//! Exact scalars and polynomials: rationals, the quadratic field Q(√161),
//! multivariate polynomials, and the symbolic identity checks that rest on them.

pub mod identity;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod sparse;

pub use identity::{IdentityCheck, IdentityReport};
pub use poly::{Field, Polynomial, RatFn};
pub use quad::QuadNum;
pub use rational::{fmt_rational, int, monus, parse_rational, rat, to_f64, Rational};
pub use sparse::{sparse_q, verify_sparse_identities, verify_sparse_identities_with, SparseBoundForm};
