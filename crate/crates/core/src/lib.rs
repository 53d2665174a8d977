//! Exact algebra for sequences over commutative rings with identity.
//!
//! A sequence `(a_0, a_1, ..., a_{N-1})` holds the coefficients of a
//! truncated exponential generating function, term `n` being the coefficient
//! of `t^n / n!`. On top of a small exact-ring kernel ([`ring`]) the crate
//! offers the binomial-convolution (Hurwitz) product with its inverses,
//! ordinary and exponential composition, partial Bell polynomial tables,
//! Stirling-type transforms, an isomorphism between unit-headed sequences
//! and their exponent sequences ([`tau`]), and generation and recovery of
//! binomial-type polynomial families ([`binomial`]). Everything is exact:
//! no floating point, and divisions are either ring inversions or
//! lift-to-fraction-field steps whose results are checked on the way back.

pub mod binomial;
pub mod cli;
pub mod comb;
pub mod error;
pub mod inversion;
pub mod io;
pub mod oeis;
pub mod ring;
pub mod series;
pub mod tau;
pub mod transforms;

pub use binomial::{
    a_from_binomial, binomial_from_u, binomial_from_u_in, family, is_binomial_type, pa_coefficient,
    pa_polynomials, pa_polynomials_in, u_from_binomial, u_from_binomial_unchecked,
    BinomialTypeFailure, BinomialTypeReport, Family, PolySeq,
};
pub use comb::{
    binomial as binomial_coefficient, exponential_bell_partial, factorial, falling_factorial,
    ordinary_bell_complete, ordinary_bell_partial, stirling1_unsigned, stirling2, BellArguments,
};
pub use error::{Error, Result};
pub use inversion::{
    check_comp_invertible, comp_inverse, comp_inverse_closed, comp_inverse_via_cinv,
    hurwitz_inverse, hurwitz_inverse_bell, hurwitz_inverse_via_relinv,
};
pub use io::{
    parse_seq, parse_value_literal, read_seq_file, serialize_seq, SeqDocument, CONVENTION,
};
pub use oeis::{lookup as oeis_lookup, OeisHit, OeisMode};
pub use ring::{embed_constant, Polynomial, Ring, RingKind, RingValue};
pub use series::{seq_from_bigints, Seq};
pub use tau::{basis_element, basis_power, tau_forward, tau_inverse, UnitSeq};
pub use transforms::{alt_sign, stirling, stirling_inverse, TransformSpec};
