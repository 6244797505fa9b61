//! Exact computation of intersection pairings in the rational cohomology
//! ring of the moduli space of rank-2, odd-degree stable bundles over a
//! genus-g surface (equivalently, the twisted SU(2) character variety).
//!
//! The ring is generated by classes `f` (degree 2), `a` (degree 4) and
//! `b1..b2g` (degree 3); every top-degree pairing against the fundamental
//! class reduces to a Bernoulli-number closed form through the handle
//! recursion for powers of `gamma = 2 * sum_k b_k b_{k+g}`. Everything on
//! that side is exact rational arithmetic.
//!
//! A separate numerical module probes the representation variety itself:
//! the commutator product map on `(SU(2))^{2g}`, regularity of `-I`,
//! freeness of the conjugation action, and the dimension count.
//!
//! Modules:
//! - [`exact`]: arbitrary-precision rationals, Bernoulli numbers,
//!   binomials and factorial quotients.
//! - [`monomial`]: graded-commutative monomials, Koszul-sign
//!   normalization, parsing and rendering.
//! - [`pairing`]: pairing evaluation, Gram matrices of the Poincaré
//!   pairing, dual partners, the `a^g = 0` vanishing check.
//! - [`repvar`]: unit-quaternion model of the representation variety and
//!   its rank/dimension checks.
//! - [`cli`]: the `charvar` command-line front end.

pub mod cli;
pub mod error;
pub mod exact;
pub mod monomial;
pub mod pairing;
pub mod repvar;

pub use error::{Error, Result};
pub use exact::{bernoulli, binomial, factorial_quotient, Rational};
pub use monomial::{
    multiply, normalize, parse_monomial, CohClass, Genus, Monomial, NormalizedMonomial,
};
pub use pairing::{
    closed_form_pairing, dual_json, dual_partner, enumerate_monomials, functional,
    gamma_subset_pairing, gram, newstead_check, pair_monomial, power_pairing, rank_and_radical,
    table, table_json, Generator, GramMatrix, NewsteadReport, PairingQuery, SignConvention,
    TableRow,
};
pub use repvar::{
    base_point, dimension_report, jacobian_rank, mu, random_fiber_point, stabilizer_rank,
    DimensionReport, RepReport, Su2Tuple, UnitQuaternion,
};
