//! Commutative rings with identity, represented at runtime: exact integers,
//! rationals, integers modulo n, and nested univariate polynomial rings.
//!
//! A [`Ring`] is a cheap-to-clone shared descriptor; a [`RingValue`] is an
//! element tagged with its ring. Binary value operations require both sides
//! to carry equal descriptors — sequence- and polynomial-level entry points
//! check this and report [`Error::RingMismatch`], after which elementwise
//! arithmetic treats a mismatch as a caller bug.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// What a [`Ring`] describes.
#[derive(Debug, PartialEq, Eq)]
pub enum RingKind {
    /// The ring of integers.
    Integers,
    /// The field of rationals.
    Rationals,
    /// Integers modulo `n`, with `n >= 2`.
    IntegersMod(BigUint),
    /// Univariate polynomials over `base` in the named variable.
    Polynomials { base: Ring, variable: String },
}

/// Shared descriptor of a commutative ring with identity.
///
/// Equality compares the whole descriptor tree, with a pointer fast path for
/// clones of the same handle.
#[derive(Debug, Clone, Eq)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn integers() -> Ring {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(RingKind::Rationals))
    }

    /// Integers modulo `n`; fails for `n < 2`.
    pub fn integers_mod(n: impl Into<BigUint>) -> Result<Ring> {
        let n = n.into();
        if n < BigUint::from(2u32) {
            return Err(Error::InvalidRing {
                message: format!("modulus must be at least 2, got {n}"),
            });
        }
        Ok(Ring(Arc::new(RingKind::IntegersMod(n))))
    }

    /// Polynomials over `base` in `variable`; the variable must be an
    /// identifier and distinct from every variable already used in `base`.
    pub fn polynomials(base: &Ring, variable: &str) -> Result<Ring> {
        if !is_identifier(variable) {
            return Err(Error::InvalidRing {
                message: format!("invalid variable name {variable:?}"),
            });
        }
        if base.uses_variable(variable) {
            return Err(Error::InvalidRing {
                message: format!("variable {variable:?} already used in {base}"),
            });
        }
        Ok(Ring(Arc::new(RingKind::Polynomials {
            base: base.clone(),
            variable: variable.to_string(),
        })))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    /// True when this descriptor (at any nesting depth) binds `name`.
    pub fn uses_variable(&self, name: &str) -> bool {
        match self.kind() {
            RingKind::Polynomials { base, variable } => {
                variable == name || base.uses_variable(name)
            }
            _ => false,
        }
    }

    /// The generator bound to `name`, embedded as an element of this ring.
    pub fn variable(&self, name: &str) -> Option<RingValue> {
        match self.kind() {
            RingKind::Polynomials { base, variable } => {
                if variable == name {
                    let coeffs = vec![base.zero(), base.one()];
                    Some(RingValue {
                        ring: self.clone(),
                        payload: Payload::Poly(Polynomial {
                            ring: self.clone(),
                            coeffs,
                        }),
                    })
                } else {
                    let inner = base.variable(name)?;
                    Some(RingValue {
                        ring: self.clone(),
                        payload: Payload::Poly(Polynomial {
                            ring: self.clone(),
                            coeffs: vec![inner],
                        }),
                    })
                }
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> RingValue {
        let payload = match self.kind() {
            RingKind::Integers => Payload::Int(BigInt::zero()),
            RingKind::Rationals => Payload::Rat(BigRational::zero()),
            RingKind::IntegersMod(_) => Payload::Res(BigUint::zero()),
            RingKind::Polynomials { .. } => Payload::Poly(Polynomial {
                ring: self.clone(),
                coeffs: Vec::new(),
            }),
        };
        RingValue {
            ring: self.clone(),
            payload,
        }
    }

    pub fn one(&self) -> RingValue {
        self.from_integer(&BigInt::one())
    }

    /// Canonical image of an integer under the unique map from the integers.
    pub fn from_integer(&self, k: &BigInt) -> RingValue {
        let payload = match self.kind() {
            RingKind::Integers => Payload::Int(k.clone()),
            RingKind::Rationals => Payload::Rat(BigRational::from_integer(k.clone())),
            RingKind::IntegersMod(n) => {
                let m = BigInt::from_biguint(Sign::Plus, n.clone());
                let r = k.mod_floor(&m);
                Payload::Res(r.to_biguint().expect("mod_floor is nonnegative"))
            }
            RingKind::Polynomials { base, .. } => {
                let c = base.from_integer(k);
                let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
                Payload::Poly(Polynomial {
                    ring: self.clone(),
                    coeffs,
                })
            }
        };
        RingValue {
            ring: self.clone(),
            payload,
        }
    }

    pub fn from_i64(&self, k: i64) -> RingValue {
        self.from_integer(&BigInt::from(k))
    }

    /// Descriptor with every integer layer replaced by the rationals;
    /// `None` when a modular layer makes that impossible.
    pub(crate) fn rational_lift(&self) -> Option<Ring> {
        match self.kind() {
            RingKind::Integers | RingKind::Rationals => Some(Ring::rationals()),
            RingKind::IntegersMod(_) => None,
            RingKind::Polynomials { base, variable } => {
                let lifted = base.rational_lift()?;
                Some(Ring::polynomials(&lifted, variable).expect("variable set is unchanged"))
            }
        }
    }

    /// Parse a ring descriptor: `Z`, `Q`, `Zmod:<n>`, or `Poly:<var>:<base>`.
    pub fn parse(text: &str) -> Result<Ring> {
        let text = text.trim();
        if text == "Z" {
            return Ok(Ring::integers());
        }
        if text == "Q" {
            return Ok(Ring::rationals());
        }
        if let Some(rest) = text.strip_prefix("Zmod:") {
            let n: BigUint = rest.trim().parse().map_err(|_| Error::InvalidRing {
                message: format!("bad modulus {rest:?}"),
            })?;
            return Ring::integers_mod(n);
        }
        if let Some(rest) = text.strip_prefix("Poly:") {
            let (variable, base) = rest.split_once(':').ok_or_else(|| Error::InvalidRing {
                message: format!("expected Poly:<var>:<base>, got {text:?}"),
            })?;
            let base = Ring::parse(base)?;
            return Ring::polynomials(&base, variable.trim());
        }
        Err(Error::InvalidRing {
            message: format!("unknown ring descriptor {text:?}"),
        })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::IntegersMod(n) => write!(f, "Zmod:{n}"),
            RingKind::Polynomials { base, variable } => write!(f, "Poly:{variable}:{base}"),
        }
    }
}

/// An element of a [`Ring`], tagged with its descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingValue {
    ring: Ring,
    payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Payload {
    Int(BigInt),
    Rat(BigRational),
    Res(BigUint),
    Poly(Polynomial),
}

fn mismatch(left: &Ring, right: &Ring) -> Error {
    Error::RingMismatch {
        left: left.to_string(),
        right: right.to_string(),
    }
}

impl RingValue {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn modulus(&self) -> &BigUint {
        match self.ring.kind() {
            RingKind::IntegersMod(n) => n,
            _ => unreachable!("residue payload outside a modular ring"),
        }
    }

    fn assert_same_ring(&self, other: &RingValue) {
        assert!(
            self.ring == other.ring,
            "ring mismatch in value arithmetic: {} vs {}",
            self.ring,
            other.ring
        );
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => v.is_zero(),
            Payload::Rat(v) => v.is_zero(),
            Payload::Res(v) => v.is_zero(),
            Payload::Poly(p) => p.coeffs.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => v.is_one(),
            Payload::Rat(v) => v.is_one(),
            Payload::Res(v) => v.is_one(),
            Payload::Poly(p) => p.degree() == Some(0) && p.coeffs[0].is_one(),
        }
    }

    pub fn add(&self, other: &RingValue) -> RingValue {
        self.assert_same_ring(other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a + b),
            (Payload::Rat(a), Payload::Rat(b)) => Payload::Rat(a + b),
            (Payload::Res(a), Payload::Res(b)) => Payload::Res((a + b) % self.modulus()),
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(a.add_raw(b)),
            _ => unreachable!("payload kind disagrees with ring descriptor"),
        };
        RingValue {
            ring: self.ring.clone(),
            payload,
        }
    }

    pub fn neg(&self) -> RingValue {
        let payload = match &self.payload {
            Payload::Int(a) => Payload::Int(-a),
            Payload::Rat(a) => Payload::Rat(-a),
            Payload::Res(a) => {
                if a.is_zero() {
                    Payload::Res(BigUint::zero())
                } else {
                    Payload::Res(self.modulus() - a)
                }
            }
            Payload::Poly(p) => Payload::Poly(p.neg_raw()),
        };
        RingValue {
            ring: self.ring.clone(),
            payload,
        }
    }

    pub fn sub(&self, other: &RingValue) -> RingValue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingValue) -> RingValue {
        self.assert_same_ring(other);
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a * b),
            (Payload::Rat(a), Payload::Rat(b)) => Payload::Rat(a * b),
            (Payload::Res(a), Payload::Res(b)) => Payload::Res((a * b) % self.modulus()),
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(a.mul_raw(b)),
            _ => unreachable!("payload kind disagrees with ring descriptor"),
        };
        RingValue {
            ring: self.ring.clone(),
            payload,
        }
    }

    /// Multiply by the image of an integer.
    pub fn scale(&self, k: &BigInt) -> RingValue {
        self.mul(&self.ring.from_integer(k))
    }

    pub fn pow(&self, exp: u64) -> RingValue {
        let mut result = self.ring.one();
        let mut square = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        result
    }

    /// Multiplicative-unit test: `±1` among integers, nonzero rationals,
    /// residues coprime to the modulus, and unit constants among polynomials.
    pub fn is_unit(&self) -> bool {
        match &self.payload {
            Payload::Int(v) => v.is_one() || (-v).is_one(),
            Payload::Rat(v) => !v.is_zero(),
            Payload::Res(v) => v.gcd(self.modulus()).is_one(),
            Payload::Poly(p) => p.degree() == Some(0) && p.coeffs[0].is_unit(),
        }
    }

    pub fn inverse(&self) -> Result<RingValue> {
        let not_a_unit = || Error::NotAUnit {
            value: self.to_string(),
            ring: self.ring.to_string(),
        };
        let payload = match &self.payload {
            Payload::Int(v) => {
                if v.is_one() || (-v).is_one() {
                    Payload::Int(v.clone())
                } else {
                    return Err(not_a_unit());
                }
            }
            Payload::Rat(v) => {
                if v.is_zero() {
                    return Err(not_a_unit());
                }
                Payload::Rat(v.recip())
            }
            Payload::Res(v) => {
                let n = BigInt::from_biguint(Sign::Plus, self.modulus().clone());
                let e = BigInt::from_biguint(Sign::Plus, v.clone()).extended_gcd(&n);
                if !e.gcd.is_one() {
                    return Err(not_a_unit());
                }
                let inv = e.x.mod_floor(&n);
                Payload::Res(inv.to_biguint().expect("mod_floor is nonnegative"))
            }
            Payload::Poly(p) => {
                if p.degree() != Some(0) {
                    return Err(not_a_unit());
                }
                let c = p.coeffs[0].inverse().map_err(|_| not_a_unit())?;
                Payload::Poly(Polynomial {
                    ring: self.ring.clone(),
                    coeffs: vec![c],
                })
            }
        };
        Ok(RingValue {
            ring: self.ring.clone(),
            payload,
        })
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.payload {
            Payload::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.payload {
            Payload::Rat(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<&BigUint> {
        match &self.payload {
            Payload::Res(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match &self.payload {
            Payload::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Copy of this value in `target`, where `target` is this value's ring
    /// with integer layers replaced by rationals.
    pub(crate) fn lift_into(&self, target: &Ring) -> RingValue {
        if self.ring == *target {
            return self.clone();
        }
        let payload = match (&self.payload, target.kind()) {
            (Payload::Int(v), RingKind::Rationals) => {
                Payload::Rat(BigRational::from_integer(v.clone()))
            }
            (Payload::Poly(p), RingKind::Polynomials { base, .. }) => {
                let coeffs = p.coeffs.iter().map(|c| c.lift_into(base)).collect();
                Payload::Poly(Polynomial {
                    ring: target.clone(),
                    coeffs,
                })
            }
            _ => unreachable!("lift target does not match the value's shape"),
        };
        RingValue {
            ring: target.clone(),
            payload,
        }
    }

    /// Inverse of [`lift_into`]: map back onto `target`, failing with
    /// [`Error::RetractFailed`] when a rational coordinate is not an integer.
    pub(crate) fn retract_into(&self, target: &Ring) -> Result<RingValue> {
        if self.ring == *target {
            return Ok(self.clone());
        }
        let payload = match (&self.payload, target.kind()) {
            (Payload::Rat(v), RingKind::Integers) => {
                if v.is_integer() {
                    Payload::Int(v.to_integer())
                } else {
                    return Err(Error::RetractFailed {
                        value: self.to_string(),
                    });
                }
            }
            (Payload::Poly(p), RingKind::Polynomials { base, .. }) => {
                let coeffs = p
                    .coeffs
                    .iter()
                    .map(|c| c.retract_into(base))
                    .collect::<Result<Vec<_>>>()?;
                Payload::Poly(Polynomial {
                    ring: target.clone(),
                    coeffs,
                })
            }
            _ => unreachable!("retract target does not match the value's shape"),
        };
        Ok(RingValue {
            ring: target.clone(),
            payload,
        })
    }
}

/// The element of `target` that a value of a nested coefficient ring embeds
/// to; fails when the value's ring is not a coefficient ring of `target`.
pub fn embed_constant(target: &Ring, value: &RingValue) -> Result<RingValue> {
    if *target == *value.ring() {
        return Ok(value.clone());
    }
    match target.kind() {
        RingKind::Polynomials { base, .. } => {
            let inner = embed_constant(base, value)?;
            let coeffs = if inner.is_zero() {
                Vec::new()
            } else {
                vec![inner]
            };
            Ok(RingValue {
                ring: target.clone(),
                payload: Payload::Poly(Polynomial {
                    ring: target.clone(),
                    coeffs,
                }),
            })
        }
        _ => Err(mismatch(target, value.ring())),
    }
}

/// A univariate polynomial, stored as coefficients over the base ring in
/// ascending degree order with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    coeffs: Vec<RingValue>,
}

impl Polynomial {
    /// Build a polynomial in the given polynomial ring from ascending
    /// coefficients; checks the descriptor kind and every coefficient's ring.
    pub fn new(ring: &Ring, coeffs: Vec<RingValue>) -> Result<Polynomial> {
        let base = match ring.kind() {
            RingKind::Polynomials { base, .. } => base,
            _ => {
                return Err(Error::InvalidRing {
                    message: format!("{ring} is not a polynomial ring"),
                })
            }
        };
        for c in &coeffs {
            if c.ring() != base {
                return Err(mismatch(base, c.ring()));
            }
        }
        let mut p = Polynomial {
            ring: ring.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(RingValue::is_zero) {
            self.coeffs.pop();
        }
    }

    /// The polynomial ring this polynomial lives in.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        match self.ring.kind() {
            RingKind::Polynomials { base, .. } => base,
            _ => unreachable!("polynomial payload outside a polynomial ring"),
        }
    }

    pub fn variable(&self) -> &str {
        match self.ring.kind() {
            RingKind::Polynomials { variable, .. } => variable,
            _ => unreachable!("polynomial payload outside a polynomial ring"),
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[RingValue] {
        &self.coeffs
    }

    /// Coefficient of the given degree, zero beyond the stored range.
    pub fn coeff(&self, degree: usize) -> RingValue {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(|| self.base().zero())
    }

    fn add_raw(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.base().zero();
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a.add(b));
        }
        let mut p = Polynomial {
            ring: self.ring.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    fn neg_raw(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(RingValue::neg).collect(),
        }
    }

    fn mul_raw(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial {
                ring: self.ring.clone(),
                coeffs: Vec::new(),
            };
        }
        let zero = self.base().zero();
        let mut coeffs = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut p = Polynomial {
            ring: self.ring.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(mismatch(&self.ring, &other.ring));
        }
        Ok(self.add_raw(other))
    }

    pub fn neg(&self) -> Polynomial {
        self.neg_raw()
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(mismatch(&self.ring, &other.ring));
        }
        Ok(self.mul_raw(other))
    }

    /// Evaluate at a point of the base ring.
    pub fn eval(&self, at: &RingValue) -> Result<RingValue> {
        if at.ring() != self.base() {
            return Err(mismatch(self.base(), at.ring()));
        }
        self.eval_in(at)
    }

    /// Evaluate at a point of any ring that this polynomial's coefficients
    /// embed into (substitution).
    pub fn eval_in(&self, at: &RingValue) -> Result<RingValue> {
        let target = at.ring();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&embed_constant(target, c)?);
        }
        Ok(acc)
    }
}

/// Wrap a polynomial as a value of its own ring.
impl From<Polynomial> for RingValue {
    fn from(p: Polynomial) -> RingValue {
        let mut p = p;
        p.normalize();
        RingValue {
            ring: p.ring.clone(),
            payload: Payload::Poly(p),
        }
    }
}

// --- canonical rendering ----------------------------------------------------

/// Sign-split rendering of a coefficient: `(negative, magnitude)` where the
/// magnitude is parenthesized when it is a sum.
fn coefficient_fragment(value: &RingValue) -> (bool, String) {
    match &value.payload {
        Payload::Int(v) => (v.is_negative(), v.magnitude().to_string()),
        Payload::Rat(v) => {
            let mag = v.abs();
            if mag.is_integer() {
                (v.is_negative(), mag.numer().to_string())
            } else {
                (v.is_negative(), format!("{}/{}", mag.numer(), mag.denom()))
            }
        }
        Payload::Res(v) => (false, v.to_string()),
        Payload::Poly(p) => match p.degree() {
            None => (false, "0".to_string()),
            Some(0) => coefficient_fragment(&p.coeffs[0]),
            Some(d) if p.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 => {
                // a monomial joins the outer sum without parentheses
                let (negative, magnitude) = coefficient_fragment(&p.coeffs[d]);
                let var = if d == 1 {
                    p.variable().to_string()
                } else {
                    format!("{}^{d}", p.variable())
                };
                let body = if magnitude == "1" {
                    var
                } else {
                    format!("{magnitude}*{var}")
                };
                (negative, body)
            }
            Some(_) => (false, format!("({p})")),
        },
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        if self.coeffs.len() == 1 {
            // a constant prints as its base-ring value, with no parentheses
            return write!(f, "{}", self.coeffs[0]);
        }
        let variable = self.variable();
        let mut out = String::new();
        for degree in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[degree];
            if c.is_zero() {
                continue;
            }
            let (negative, magnitude) = coefficient_fragment(c);
            let body = match degree {
                0 => magnitude,
                _ => {
                    let var = if degree == 1 {
                        variable.to_string()
                    } else {
                        format!("{variable}^{degree}")
                    };
                    if magnitude == "1" {
                        var
                    } else {
                        format!("{magnitude}*{var}")
                    }
                }
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Int(v) => write!(f, "{v}"),
            Payload::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Payload::Res(v) => write!(f, "{v}"),
            Payload::Poly(p) => write!(f, "{p}"),
        }
    }
}

// --- construction helpers used across the crate -----------------------------

impl RingValue {
    /// Build a rational value in the rationals ring.
    pub fn rational(numer: BigInt, denom: BigInt) -> Result<RingValue> {
        if denom.is_zero() {
            return Err(Error::InvalidRing {
                message: "zero denominator".to_string(),
            });
        }
        Ok(RingValue {
            ring: Ring::rationals(),
            payload: Payload::Rat(BigRational::new(numer, denom)),
        })
    }

    /// Exact conversion to `f64` when the value is a small enough integer;
    /// used nowhere in the algebra, only for display heuristics in the CLI.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.payload {
            Payload::Int(v) => v.to_i64(),
            Payload::Res(v) => v.to_i64(),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::integers()
    }

    fn q() -> Ring {
        Ring::rationals()
    }

    #[test]
    fn descriptor_round_trip() {
        for text in [
            "Z",
            "Q",
            "Zmod:7",
            "Poly:x:Z",
            "Poly:x:Poly:a:Q",
            "Zmod:360360",
        ] {
            let ring = Ring::parse(text).unwrap();
            assert_eq!(ring.to_string(), text);
        }
    }

    #[test]
    fn descriptor_rejects_garbage() {
        for text in [
            "",
            "R",
            "Zmod:1",
            "Zmod:x",
            "Poly:x",
            "Poly:1x:Z",
            "Poly:x:Poly:x:Z",
        ] {
            assert!(Ring::parse(text).is_err(), "{text:?} should not parse");
        }
    }

    #[test]
    fn integer_units() {
        let r = z();
        assert!(r.from_i64(1).is_unit());
        assert!(r.from_i64(-1).is_unit());
        assert!(!r.from_i64(2).is_unit());
        assert!(!r.from_i64(0).is_unit());
        assert_eq!(r.from_i64(-1).inverse().unwrap(), r.from_i64(-1));
        assert!(r.from_i64(3).inverse().is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let r = q();
        let half = RingValue::rational(BigInt::from(1), BigInt::from(2)).unwrap();
        let third = RingValue::rational(BigInt::from(1), BigInt::from(3)).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum.to_string(), "5/6");
        assert_eq!(half.inverse().unwrap(), r.from_i64(2));
        assert!(r.zero().inverse().is_err());
    }

    #[test]
    fn modular_inverse_matches_definition() {
        let r = Ring::integers_mod(10u32).unwrap();
        let three = r.from_i64(3);
        let inv = three.inverse().unwrap();
        assert!(three.mul(&inv).is_one());
        assert!(r.from_i64(4).inverse().is_err());
        assert!(!r.from_i64(5).is_unit());
        // negative representatives reduce into range
        assert_eq!(r.from_i64(-3), r.from_i64(7));
    }

    #[test]
    fn polynomial_arithmetic_and_degree() {
        let rx = Ring::polynomials(&z(), "x").unwrap();
        let x = rx.variable("x").unwrap();
        let p = x.mul(&x).add(&rx.one()); // x^2 + 1
        let q = x.sub(&rx.one()); // x - 1
        let prod = p.mul(&q);
        assert_eq!(prod.to_string(), "x^3-x^2+x-1");
        let poly = prod.as_polynomial().unwrap();
        assert_eq!(poly.degree(), Some(3));
        assert!(rx.zero().as_polynomial().unwrap().degree().is_none());
        assert_eq!(poly.eval(&z().from_i64(2)).unwrap(), z().from_i64(5));
    }

    #[test]
    fn polynomial_units_are_unit_constants() {
        let rx = Ring::polynomials(&q(), "x").unwrap();
        let x = rx.variable("x").unwrap();
        assert!(!x.is_unit());
        assert!(rx.from_i64(7).is_unit());
        assert_eq!(rx.from_i64(7).inverse().unwrap().to_string(), "1/7");
        let zx = Ring::polynomials(&z(), "x").unwrap();
        assert!(!zx.from_i64(7).is_unit());
        assert!(zx.from_i64(-1).is_unit());
    }

    #[test]
    fn nested_variables_resolve_at_depth() {
        let za = Ring::polynomials(&z(), "a").unwrap();
        let zax = Ring::polynomials(&za, "x").unwrap();
        let a = zax.variable("a").unwrap();
        let x = zax.variable("x").unwrap();
        let v = x.mul(&x).sub(&a.mul(&x)); // x^2 - a*x
        assert_eq!(v.to_string(), "x^2-a*x");
        assert!(zax.variable("y").is_none());
    }

    #[test]
    fn nested_coefficients_parenthesize() {
        let za = Ring::polynomials(&z(), "a").unwrap();
        let zax = Ring::polynomials(&za, "x").unwrap();
        let a = zax.variable("a").unwrap();
        let x = zax.variable("x").unwrap();
        let two = zax.from_i64(2);
        // (a + 2) * x^2 has a sum coefficient, so it is parenthesized
        let v = a.add(&two).mul(&x).mul(&x);
        assert_eq!(v.to_string(), "(a+2)*x^2");
    }

    #[test]
    fn embed_and_eval_in_nested_ring() {
        let za = Ring::polynomials(&z(), "a").unwrap();
        let zax = Ring::polynomials(&za, "x").unwrap();
        let a_in_za = za.variable("a").unwrap();
        let embedded = embed_constant(&zax, &a_in_za).unwrap();
        assert_eq!(embedded, zax.variable("a").unwrap());
        assert!(embed_constant(&za, &zax.one()).is_err());
    }

    #[test]
    fn lift_and_retract_round_trip() {
        let v = z().from_i64(-42);
        let lifted = v.lift_into(&q());
        assert_eq!(lifted.to_string(), "-42");
        assert_eq!(lifted.retract_into(&z()).unwrap(), v);
        let half = RingValue::rational(BigInt::from(1), BigInt::from(2)).unwrap();
        assert!(matches!(
            half.retract_into(&z()),
            Err(Error::RetractFailed { .. })
        ));
    }

    #[test]
    fn from_integer_reduces_in_modular_polynomials() {
        let r = Ring::integers_mod(5u32).unwrap();
        let rx = Ring::polynomials(&r, "x").unwrap();
        // 10 maps to 0, so the constant polynomial must normalize to zero
        assert!(rx.from_i64(10).is_zero());
        assert_eq!(rx.from_i64(7), rx.from_i64(2));
    }
}
