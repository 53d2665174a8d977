//! Sequence transforms and their inverses.
//!
//! A [`TransformSpec`] names one of the endomorphism-style transforms of the
//! Hurwitz ring: composition by a fixed inner sequence, the componentwise
//! geometric twist, alternating signs, and the Stirling transform pair. Specs
//! have a stable text form (`altsign`, `stirling`, `stirling-inv`,
//! `beta:<value>`, `mu:<term,term,...>`) used by the CLI.

use std::fmt;

use crate::comb::{stirling1_unsigned, stirling2};
use crate::error::{Error, Result};
use crate::inversion::comp_inverse;
use crate::io::parse_value_literal;
use crate::ring::{Ring, RingValue};
use crate::series::Seq;

/// `b_n = (-1)^n a_n`.
pub fn alt_sign(a: &Seq) -> Seq {
    let terms = a
        .terms()
        .iter()
        .enumerate()
        .map(|(n, t)| if n % 2 == 1 { t.neg() } else { t.clone() })
        .collect();
    Seq::new(a.ring().clone(), terms).expect("same shape as the input")
}

/// Stirling transform `b_n = sum_h S(n,h) a_h`.
pub fn stirling(a: &Seq) -> Seq {
    let ring = a.ring().clone();
    let terms = (0..a.len())
        .map(|n| {
            let mut acc = ring.zero();
            for h in 0..=n {
                acc = acc.add(&a.terms()[h].scale(&stirling2(n, h)));
            }
            acc
        })
        .collect();
    Seq::new(ring, terms).expect("same shape as the input")
}

/// Inverse Stirling transform `b_n = sum_h (-1)^{n-h} c(n,h) a_h` with
/// unsigned first-kind Stirling numbers `c(n,h)`.
pub fn stirling_inverse(a: &Seq) -> Seq {
    let ring = a.ring().clone();
    let terms = (0..a.len())
        .map(|n| {
            let mut acc = ring.zero();
            for h in 0..=n {
                let mut c = stirling1_unsigned(n, h);
                if (n - h) % 2 == 1 {
                    c = -c;
                }
                acc = acc.add(&a.terms()[h].scale(&c));
            }
            acc
        })
        .collect();
    Seq::new(ring, terms).expect("same shape as the input")
}

/// A named transform with enough data to apply or invert it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformSpec {
    /// `a ↦ a ∘ b` for a fixed `b` with `b_0 = 0`.
    ComposeBy(Seq),
    /// `a ↦ a ⊙ (1, r, r^2, ...)`.
    HadamardBeta(RingValue),
    /// `a_n ↦ (-1)^n a_n`.
    AltSign,
    /// The Stirling transform.
    Stirling,
    /// Its inverse.
    StirlingInverse,
}

impl TransformSpec {
    /// Composition transform; the inner sequence must start with zero.
    pub fn compose_by(b: Seq) -> Result<TransformSpec> {
        if !b.terms()[0].is_zero() {
            return Err(Error::NotZeroOfOrderOne);
        }
        Ok(TransformSpec::ComposeBy(b))
    }

    pub fn apply(&self, a: &Seq) -> Result<Seq> {
        match self {
            TransformSpec::ComposeBy(b) => a.compose_egf(b),
            TransformSpec::HadamardBeta(r) => a.hadamard(&Seq::beta(r, a.len())),
            TransformSpec::AltSign => Ok(alt_sign(a)),
            TransformSpec::Stirling => Ok(stirling(a)),
            TransformSpec::StirlingInverse => Ok(stirling_inverse(a)),
        }
    }

    /// The transform that undoes this one (up to truncation lengths).
    pub fn inverted(&self) -> Result<TransformSpec> {
        match self {
            TransformSpec::ComposeBy(b) => Ok(TransformSpec::ComposeBy(comp_inverse(b)?)),
            TransformSpec::HadamardBeta(r) => Ok(TransformSpec::HadamardBeta(r.inverse()?)),
            TransformSpec::AltSign => Ok(TransformSpec::AltSign),
            TransformSpec::Stirling => Ok(TransformSpec::StirlingInverse),
            TransformSpec::StirlingInverse => Ok(TransformSpec::Stirling),
        }
    }

    /// Parse the text form; `ring` supplies the ring for `beta:` and `mu:`
    /// payload literals.
    pub fn parse(text: &str, ring: &Ring) -> Result<TransformSpec> {
        let text = text.trim();
        match text {
            "altsign" => return Ok(TransformSpec::AltSign),
            "stirling" => return Ok(TransformSpec::Stirling),
            "stirling-inv" => return Ok(TransformSpec::StirlingInverse),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("beta:") {
            let r = parse_value_literal(ring, rest)?;
            return Ok(TransformSpec::HadamardBeta(r));
        }
        if let Some(rest) = text.strip_prefix("mu:") {
            let terms = rest
                .split(',')
                .map(|part| parse_value_literal(ring, part))
                .collect::<Result<Vec<_>>>()?;
            let b = Seq::new(ring.clone(), terms)?;
            return TransformSpec::compose_by(b);
        }
        Err(Error::Parse {
            message: format!("unknown transform {text:?}"),
            line: 0,
            column: 0,
        })
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformSpec::ComposeBy(b) => {
                let parts: Vec<String> = b.terms().iter().map(|t| t.to_string()).collect();
                write!(f, "mu:{}", parts.join(","))
            }
            TransformSpec::HadamardBeta(r) => write!(f, "beta:{r}"),
            TransformSpec::AltSign => write!(f, "altsign"),
            TransformSpec::Stirling => write!(f, "stirling"),
            TransformSpec::StirlingInverse => write!(f, "stirling-inv"),
        }
    }
}
