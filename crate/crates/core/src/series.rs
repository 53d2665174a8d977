//! Truncated sequences over a commutative ring and their products.
//!
//! A sequence of length `N` holds terms `a_0 .. a_{N-1}`, read as the first
//! `N` coefficients of an exponential generating function written in the
//! `a_n t^n / n!` convention. Binary operations pair terms up to the shorter
//! length, so every computed term is exact for the corresponding infinite
//! sequence — truncation never feeds back into earlier terms.

use num_bigint::BigInt;

use crate::comb::{
    binomial, exponential_bell_table, factorial, ordinary_bell_table, BellArguments,
};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingValue};

/// A finite prefix of a sequence over one ring; never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq {
    ring: Ring,
    terms: Vec<RingValue>,
}

/// How to carry out divisions by factorials in a given ring.
pub(crate) enum DivisionPlan {
    /// Every needed factorial is a unit; divide in place.
    Native,
    /// Integer-shaped ring: compute over the rational lift, then retract,
    /// failing if a result is not integral.
    LiftRetract { lifted: Ring },
}

/// Decide how divisions by `1!, ..., n_max!` can be performed in `ring`.
pub(crate) fn division_plan(ring: &Ring, n_max: usize) -> Result<DivisionPlan> {
    // if n_max! is a unit then so is every smaller factorial (each divides it)
    if ring.from_integer(&factorial(n_max)).is_unit() {
        return Ok(DivisionPlan::Native);
    }
    if let Some(lifted) = ring.rational_lift() {
        return Ok(DivisionPlan::LiftRetract { lifted });
    }
    let n = (1..=n_max)
        .find(|&k| !ring.from_integer(&factorial(k)).is_unit())
        .unwrap_or(n_max);
    Err(Error::FactorialNotInvertible { n })
}

fn check_same_ring(a: &Seq, b: &Seq) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch {
            left: a.ring.to_string(),
            right: b.ring.to_string(),
        });
    }
    Ok(())
}

impl Seq {
    /// Wrap terms as a sequence; at least one term, all in `ring`.
    pub fn new(ring: Ring, terms: Vec<RingValue>) -> Result<Seq> {
        if terms.is_empty() {
            return Err(Error::LengthTooShort { needed: 1, got: 0 });
        }
        for t in &terms {
            if *t.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: t.ring().to_string(),
                });
            }
        }
        Ok(Seq { ring, terms })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(ring: &Ring, terms: &[i64]) -> Seq {
        assert!(!terms.is_empty(), "a sequence needs at least one term");
        Seq {
            ring: ring.clone(),
            terms: terms.iter().map(|&k| ring.from_i64(k)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction a sequence has at least one term
    }

    pub fn terms(&self) -> &[RingValue] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> Result<&RingValue> {
        self.terms.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            limit: self.terms.len(),
        })
    }

    /// First `n` terms, `1 <= n <= len`.
    pub fn truncate(&self, n: usize) -> Result<Seq> {
        if n == 0 || n > self.terms.len() {
            return Err(Error::LengthTooShort {
                needed: n.max(1),
                got: self.terms.len(),
            });
        }
        Ok(Seq {
            ring: self.ring.clone(),
            terms: self.terms[..n].to_vec(),
        })
    }

    // --- named sequences ---------------------------------------------------

    /// `(0, 0, ..., 0)`.
    pub fn zeros(ring: &Ring, n: usize) -> Seq {
        assert!(n >= 1);
        Seq {
            ring: ring.clone(),
            terms: vec![ring.zero(); n],
        }
    }

    /// `(1, 1, 1, ...)`, the Hadamard identity.
    pub fn ones(ring: &Ring, n: usize) -> Seq {
        assert!(n >= 1);
        Seq {
            ring: ring.clone(),
            terms: vec![ring.one(); n],
        }
    }

    /// `(1, 0, 0, ...)`, the identity for the Hurwitz and Cauchy products.
    pub fn hurwitz_identity(ring: &Ring, n: usize) -> Seq {
        assert!(n >= 1);
        let mut terms = vec![ring.zero(); n];
        terms[0] = ring.one();
        Seq {
            ring: ring.clone(),
            terms,
        }
    }

    /// `(0, 1, 0, 0, ...)`, the two-sided identity for composition.
    pub fn composition_identity(ring: &Ring, n: usize) -> Seq {
        assert!(n >= 2, "the composition identity needs at least two terms");
        let mut terms = vec![ring.zero(); n];
        terms[1] = ring.one();
        Seq {
            ring: ring.clone(),
            terms,
        }
    }

    /// Geometric sequence `(1, r, r^2, ...)`.
    pub fn beta(r: &RingValue, n: usize) -> Seq {
        assert!(n >= 1);
        let ring = r.ring().clone();
        let mut terms = Vec::with_capacity(n);
        let mut acc = ring.one();
        for k in 0..n {
            if k > 0 {
                acc = acc.mul(r);
            }
            terms.push(acc.clone());
        }
        Seq { ring, terms }
    }

    /// `(0!, 1!, 2!, ...)` mapped into `ring`.
    pub fn factorials(ring: &Ring, n: usize) -> Seq {
        assert!(n >= 1);
        let terms = (0..n).map(|k| ring.from_integer(&factorial(k))).collect();
        Seq {
            ring: ring.clone(),
            terms,
        }
    }

    // --- additive structure ------------------------------------------------

    pub fn add(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        let n = self.len().min(other.len());
        let terms = (0..n).map(|i| self.terms[i].add(&other.terms[i])).collect();
        Ok(Seq {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Seq {
        Seq {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(RingValue::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Seq) -> Result<Seq> {
        self.add(&other.neg())
    }

    /// Multiply every term by one ring element.
    pub fn scale(&self, v: &RingValue) -> Result<Seq> {
        if v.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: v.ring().to_string(),
            });
        }
        Ok(Seq {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| t.mul(v)).collect(),
        })
    }

    // --- the three products ------------------------------------------------

    /// Componentwise (Hadamard) product.
    pub fn hadamard(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        let n = self.len().min(other.len());
        let terms = (0..n).map(|i| self.terms[i].mul(&other.terms[i])).collect();
        Ok(Seq {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Binomial convolution `c_n = sum_h C(n,h) a_h b_{n-h}` — the Hurwitz
    /// product, i.e. the coefficientwise product of e.g.f.s.
    pub fn hurwitz(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        let n = self.len().min(other.len());
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.ring.zero();
            for h in 0..=i {
                let w = self.terms[h].mul(&other.terms[i - h]);
                acc = acc.add(&w.scale(&binomial(i, h)));
            }
            terms.push(acc);
        }
        Ok(Seq {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Plain convolution `c_n = sum_h a_h b_{n-h}` — the Cauchy product.
    pub fn cauchy(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        let n = self.len().min(other.len());
        let mut terms = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = self.ring.zero();
            for h in 0..=i {
                acc = acc.add(&self.terms[h].mul(&other.terms[i - h]));
            }
            terms.push(acc);
        }
        Ok(Seq {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Hurwitz-product power `a^{*m}`; `m = 0` gives the identity.
    pub fn hurwitz_power(&self, m: u64) -> Seq {
        let mut result = Seq::hurwitz_identity(&self.ring, self.len());
        let mut square = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.hurwitz(&square).expect("same ring and length");
            }
            e >>= 1;
            if e > 0 {
                square = square.hurwitz(&square).expect("same ring and length");
            }
        }
        result
    }

    // --- the n!-grading map ------------------------------------------------

    /// `b_n = n! a_n`; turns the Cauchy product into the Hurwitz product.
    pub fn gamma(&self) -> Seq {
        let terms = (0..self.len())
            .map(|n| self.terms[n].scale(&factorial(n)))
            .collect();
        Seq {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `b_n = a_n / n!`, the inverse of [`Seq::gamma`].
    pub fn gamma_inv(&self) -> Result<Seq> {
        let n = self.len();
        match division_plan(&self.ring, n.saturating_sub(1))? {
            DivisionPlan::Native => {
                let terms = (0..n)
                    .map(|k| {
                        let inv = self
                            .ring
                            .from_integer(&factorial(k))
                            .inverse()
                            .expect("checked by the division plan");
                        self.terms[k].mul(&inv)
                    })
                    .collect();
                Ok(Seq {
                    ring: self.ring.clone(),
                    terms,
                })
            }
            DivisionPlan::LiftRetract { lifted } => {
                let lifted_seq = self.lift_into(&lifted);
                let divided = lifted_seq.gamma_inv()?;
                divided.retract_into(&self.ring)
            }
        }
    }

    pub(crate) fn lift_into(&self, target: &Ring) -> Seq {
        Seq {
            ring: target.clone(),
            terms: self.terms.iter().map(|t| t.lift_into(target)).collect(),
        }
    }

    pub(crate) fn retract_into(&self, target: &Ring) -> Result<Seq> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.retract_into(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Seq {
            ring: target.clone(),
            terms,
        })
    }

    // --- shifts ------------------------------------------------------------

    /// Drop the leading term: `(a_1, a_2, ...)`.
    pub fn shift_minus(&self) -> Result<Seq> {
        if self.len() < 2 {
            return Err(Error::LengthTooShort {
                needed: 2,
                got: self.len(),
            });
        }
        Ok(Seq {
            ring: self.ring.clone(),
            terms: self.terms[1..].to_vec(),
        })
    }

    /// Prepend a term: `(u, a_0, a_1, ...)`.
    pub fn shift_plus(&self, u: RingValue) -> Result<Seq> {
        if u.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: u.ring().to_string(),
            });
        }
        let mut terms = Vec::with_capacity(self.len() + 1);
        terms.push(u);
        terms.extend_from_slice(&self.terms);
        Ok(Seq {
            ring: self.ring.clone(),
            terms,
        })
    }

    // --- composition -------------------------------------------------------

    /// E.g.f. composition `(a ∘ b)` for `b_0 = 0`, via exponential partial
    /// Bell polynomials: `c_n = sum_k a_k Bh_{n,k}(b_1, b_2, ...)`.
    pub fn compose_egf(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        if !other.terms[0].is_zero() {
            return Err(Error::NotZeroOfOrderOne);
        }
        let n = self.len().min(other.len());
        let args = BellArguments::new(self.ring.clone(), other.terms[1..n].to_vec())?;
        let table = exponential_bell_table(&args, n - 1);
        Ok(self.compose_with_table(&table, n))
    }

    /// O.g.f. composition for `b_0 = 0`, via ordinary partial Bell
    /// polynomials: `c_n = sum_k a_k B_{n,k}(b_1, b_2, ...)`.
    pub fn compose_ogf(&self, other: &Seq) -> Result<Seq> {
        check_same_ring(self, other)?;
        if !other.terms[0].is_zero() {
            return Err(Error::NotZeroOfOrderOne);
        }
        let n = self.len().min(other.len());
        let args = BellArguments::new(self.ring.clone(), other.terms[1..n].to_vec())?;
        let table = ordinary_bell_table(&args, n - 1);
        Ok(self.compose_with_table(&table, n))
    }

    fn compose_with_table(&self, table: &[Vec<RingValue>], n: usize) -> Seq {
        let mut terms = Vec::with_capacity(n);
        for row in table.iter().take(n) {
            let mut acc = self.ring.zero();
            for (k, bell) in row.iter().enumerate() {
                acc = acc.add(&self.terms[k].mul(bell));
            }
            terms.push(acc);
        }
        Seq {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// True when the first `m` terms vanish.
    pub fn is_zero_of_order(&self, m: usize) -> bool {
        self.terms.iter().take(m).all(RingValue::is_zero)
    }
}

/// Map integer literals into a ring-tagged sequence.
pub fn seq_from_bigints(ring: &Ring, values: &[BigInt]) -> Seq {
    assert!(!values.is_empty());
    Seq {
        ring: ring.clone(),
        terms: values.iter().map(|v| ring.from_integer(v)).collect(),
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
    fn constructors_and_accessors() {
        let a = Seq::from_i64s(&z(), &[1, 2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(*a.term(2).unwrap(), z().from_i64(3));
        assert!(matches!(a.term(3), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(a.truncate(2).unwrap(), Seq::from_i64s(&z(), &[1, 2]));
        assert!(a.truncate(0).is_err());
        assert!(a.truncate(4).is_err());
        assert!(Seq::new(z(), vec![]).is_err());
        assert!(Seq::new(z(), vec![q().one()]).is_err());
    }

    #[test]
    fn hurwitz_of_ones_is_powers_of_two() {
        let a = Seq::ones(&z(), 8);
        let c = a.hurwitz(&a).unwrap();
        let expected = Seq::from_i64s(&z(), &[1, 2, 4, 8, 16, 32, 64, 128]);
        assert_eq!(c, expected);
    }

    #[test]
    fn cauchy_of_ones_counts_terms() {
        let a = Seq::ones(&z(), 6);
        let c = a.cauchy(&a).unwrap();
        assert_eq!(c, Seq::from_i64s(&z(), &[1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn product_identities() {
        let a = Seq::from_i64s(&z(), &[3, -1, 4, 1, -5, 9]);
        let e_hurwitz = Seq::hurwitz_identity(&z(), 6);
        let e_hadamard = Seq::ones(&z(), 6);
        assert_eq!(a.hurwitz(&e_hurwitz).unwrap(), a);
        assert_eq!(a.cauchy(&e_hurwitz).unwrap(), a);
        assert_eq!(a.hadamard(&e_hadamard).unwrap(), a);
    }

    #[test]
    fn binary_operations_truncate_to_shorter_input() {
        let a = Seq::from_i64s(&z(), &[1, 1, 1, 1, 1, 1]);
        let b = Seq::from_i64s(&z(), &[1, 1, 1]);
        assert_eq!(a.hurwitz(&b).unwrap().len(), 3);
        assert_eq!(a.add(&b).unwrap().len(), 3);
        // truncation commutes with the product
        let full = a.hurwitz(&a).unwrap().truncate(3).unwrap();
        assert_eq!(a.hurwitz(&b).unwrap(), full);
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = Seq::ones(&z(), 3);
        let b = Seq::ones(&q(), 3);
        assert!(matches!(a.hurwitz(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(
            a.shift_plus(q().zero()),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn gamma_turns_cauchy_into_hurwitz() {
        let a = Seq::from_i64s(&z(), &[2, -1, 3, 0, 5]);
        let b = Seq::from_i64s(&z(), &[1, 4, -2, 7, 1]);
        let lhs = a.cauchy(&b).unwrap().gamma();
        let rhs = a.gamma().hurwitz(&b.gamma()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_inverse_round_trips() {
        let a = Seq::from_i64s(&q(), &[5, -3, 7, 2, -8, 1]);
        assert_eq!(a.gamma().gamma_inv().unwrap(), a);
        assert_eq!(a.gamma_inv().unwrap().gamma(), a);
        // over Z the retraction step demands exact divisibility
        let b = Seq::from_i64s(&z(), &[1, 2, 6, 24]);
        assert_eq!(b.gamma_inv().unwrap(), Seq::from_i64s(&z(), &[1, 2, 3, 4]));
        let c = Seq::from_i64s(&z(), &[1, 1, 1]);
        assert!(matches!(c.gamma_inv(), Err(Error::RetractFailed { .. })));
    }

    #[test]
    fn gamma_inverse_needs_invertible_factorials() {
        let r = Ring::integers_mod(6u32).unwrap();
        let a = Seq::ones(&r, 5);
        // 2! = 2 shares a factor with 6, so it is the first non-unit factorial
        assert!(matches!(
            a.gamma_inv(),
            Err(Error::FactorialNotInvertible { n: 2 })
        ));
        // short enough prefixes still work: 0! and 1! are units
        assert!(a.truncate(2).unwrap().gamma_inv().is_ok());
    }

    #[test]
    fn gamma_maps_ones_to_factorials() {
        assert_eq!(Seq::ones(&z(), 7).gamma(), Seq::factorials(&z(), 7));
    }

    #[test]
    fn shifts() {
        let a = Seq::from_i64s(&z(), &[1, 2, 3]);
        assert_eq!(a.shift_minus().unwrap(), Seq::from_i64s(&z(), &[2, 3]));
        assert_eq!(
            a.shift_plus(z().from_i64(9)).unwrap(),
            Seq::from_i64s(&z(), &[9, 1, 2, 3])
        );
        let single = Seq::from_i64s(&z(), &[7]);
        assert!(matches!(
            single.shift_minus(),
            Err(Error::LengthTooShort { .. })
        ));
    }

    #[test]
    fn beta_is_geometric_and_multiplicative() {
        let two = z().from_i64(2);
        let three = z().from_i64(3);
        assert_eq!(Seq::beta(&two, 5), Seq::from_i64s(&z(), &[1, 2, 4, 8, 16]));
        let lhs = Seq::beta(&two, 6).hadamard(&Seq::beta(&three, 6)).unwrap();
        assert_eq!(lhs, Seq::beta(&two.mul(&three), 6));
    }

    #[test]
    fn composition_identities() {
        let id = Seq::composition_identity(&z(), 6);
        let a = Seq::from_i64s(&z(), &[2, -1, 3, 5, 0, 7]);
        let b = Seq::from_i64s(&z(), &[0, 1, -2, 4, -8, 16]);
        assert_eq!(a.compose_egf(&id).unwrap(), a);
        assert_eq!(id.compose_egf(&b).unwrap(), b);
        assert_eq!(a.compose_ogf(&id).unwrap(), a);
        assert_eq!(id.compose_ogf(&b).unwrap(), b);
    }

    #[test]
    fn composition_requires_zero_leading_term() {
        let a = Seq::ones(&z(), 4);
        assert!(matches!(a.compose_egf(&a), Err(Error::NotZeroOfOrderOne)));
        assert!(matches!(a.compose_ogf(&a), Err(Error::NotZeroOfOrderOne)));
    }

    #[test]
    fn egf_composition_yields_bell_numbers() {
        // exp composed with (e^t - 1): terms are the Bell numbers
        let e = Seq::ones(&z(), 8);
        let mut inner = Seq::ones(&z(), 8);
        inner = {
            let mut t = inner.terms().to_vec();
            t[0] = z().zero();
            Seq::new(z(), t).unwrap()
        };
        let bell = e.compose_egf(&inner).unwrap();
        assert_eq!(bell, Seq::from_i64s(&z(), &[1, 1, 2, 5, 15, 52, 203, 877]));
    }

    #[test]
    fn ogf_composition_counts_compositions() {
        // (0,1,1,1,...) composed into itself o.g.f.-style gives 2^(n-1)
        let a = {
            let mut t = Seq::ones(&z(), 7).terms().to_vec();
            t[0] = z().zero();
            Seq::new(z(), t).unwrap()
        };
        let c = a.compose_ogf(&a).unwrap();
        assert_eq!(c, Seq::from_i64s(&z(), &[0, 1, 2, 4, 8, 16, 32]));
    }

    #[test]
    fn egf_composition_is_associative() {
        let a = Seq::from_i64s(&z(), &[1, 3, -2, 5, 1, -1]);
        let b = Seq::from_i64s(&z(), &[0, 1, 4, -1, 2, 3]);
        let c = Seq::from_i64s(&z(), &[0, 2, -1, 1, 0, 5]);
        let lhs = a.compose_egf(&b).unwrap().compose_egf(&c).unwrap();
        let rhs = a.compose_egf(&b.compose_egf(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hurwitz_power_matches_repeated_products() {
        let a = Seq::from_i64s(&z(), &[1, 2, 3, 4, 5]);
        assert_eq!(a.hurwitz_power(0), Seq::hurwitz_identity(&z(), 5));
        assert_eq!(a.hurwitz_power(1), a);
        let square = a.hurwitz(&a).unwrap();
        assert_eq!(a.hurwitz_power(2), square);
        assert_eq!(a.hurwitz_power(3), square.hurwitz(&a).unwrap());
    }

    #[test]
    fn hurwitz_distributes_over_addition() {
        let a = Seq::from_i64s(&z(), &[1, -2, 3, 7]);
        let b = Seq::from_i64s(&z(), &[0, 5, -1, 2]);
        let c = Seq::from_i64s(&z(), &[4, 4, 0, -3]);
        let lhs = a.hurwitz(&b.add(&c).unwrap()).unwrap();
        let rhs = a.hurwitz(&b).unwrap().add(&a.hurwitz(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
