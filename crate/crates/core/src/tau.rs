//! The isomorphism between the additive group of sequences and the
//! multiplicative group of unit-headed sequences under the Hurwitz product.
//!
//! The target group is generated (termwise, to any finite length) by the
//! basis sequences `b^(1) = (1, 1, 1, ...)` and, for `i >= 2`,
//! `b^(i) = (1, 0, ..., 0, 1, 0, ...)` with the second one at index `i`.
//! Raising `b^(i)` to a ring-element exponent has integer structure
//! constants, and the map `x ↦ prod_i (b^(i))^{x_{i-1}}` is the isomorphism
//! implemented here.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::comb::{factorial, falling_factorial};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingValue};
use crate::series::Seq;

/// A sequence whose leading term is exactly one: an element of the
/// multiplicative group of the Hurwitz ring that tau maps onto.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSeq(Seq);

impl UnitSeq {
    pub fn new(seq: Seq) -> Result<UnitSeq> {
        if !seq.terms()[0].is_one() {
            return Err(Error::NotUnitHeaded);
        }
        Ok(UnitSeq(seq))
    }

    pub fn seq(&self) -> &Seq {
        &self.0
    }

    pub fn into_seq(self) -> Seq {
        self.0
    }

    pub fn ring(&self) -> &Ring {
        self.0.ring()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The basis sequence `b^(i)` truncated to `n` terms, `i >= 1`.
pub fn basis_element(i: usize, ring: &Ring, n: usize) -> Seq {
    assert!(i >= 1, "basis elements are indexed from 1");
    assert!(n >= 1);
    if i == 1 {
        return Seq::ones(ring, n);
    }
    let mut terms = vec![ring.zero(); n];
    terms[0] = ring.one();
    if i < n {
        terms[i] = ring.one();
    }
    Seq::new(ring.clone(), terms).expect("terms built in the target ring")
}

/// Structure constant `(ik)! / (k! (i!)^k)`: the number of partitions of an
/// `ik`-set into `k` blocks of size `i`, always an integer.
pub(crate) fn block_partition_count(i: usize, k: usize) -> BigInt {
    let denom = factorial(k) * factorial(i).pow(k as u32);
    let (q, r) = num_integer::Integer::div_rem(&factorial(i * k), &denom);
    debug_assert!(r.is_zero(), "(ik)! is divisible by k!(i!)^k");
    q
}

/// `(b^(i))^e` for a ring-element exponent `e`, truncated to `n` terms.
///
/// For `i = 1` this is the geometric sequence `(e^k)`; for `i >= 2` the term
/// at index `ik` is `falling(e, k)` times the block-partition count, and all
/// other terms vanish.
pub fn basis_power(i: usize, e: &RingValue, n: usize) -> Seq {
    assert!(i >= 1, "basis elements are indexed from 1");
    assert!(n >= 1);
    let ring = e.ring().clone();
    if i == 1 {
        return Seq::beta(e, n);
    }
    let mut terms = vec![ring.zero(); n];
    terms[0] = ring.one();
    let mut k = 1usize;
    while i * k < n {
        terms[i * k] = falling_factorial(e, k).scale(&block_partition_count(i, k));
        k += 1;
    }
    Seq::new(ring, terms).expect("terms built in the target ring")
}

/// The isomorphism: map exponents `x = (x_0, ..., x_{n-2})` to the product
/// `prod_{i=1..n-1} (b^(i))^{x_{i-1}}` of length `n`.
pub fn tau_forward(x: &Seq, n: usize) -> Result<UnitSeq> {
    if x.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(1),
            got: x.len(),
        });
    }
    let ring = x.ring().clone();
    let mut acc = Seq::hurwitz_identity(&ring, n);
    for (idx, e) in x.terms().iter().enumerate() {
        acc = acc.hurwitz(&basis_power(idx + 1, e, n))?;
    }
    UnitSeq::new(acc)
}

/// Invert the isomorphism: recover the exponent sequence of length `n - 1`
/// from a unit-headed sequence of length `n >= 2`.
///
/// Works over any ring: term `i` of the forward image depends on `x_{i-1}`
/// with unit coefficient, so each exponent is peeled off by one subtraction.
pub fn tau_inverse(a: &UnitSeq) -> Result<Seq> {
    let n = a.len();
    if n < 2 {
        return Err(Error::LengthTooShort { needed: 2, got: n });
    }
    let ring = a.ring().clone();
    let mut x: Vec<RingValue> = vec![a.seq().terms()[1].clone()];
    for i in 2..n {
        // the image of (x_0, ..., x_{i-2}, 0) agrees with tau(x) below index
        // i, and differs at index i by exactly x_{i-1}
        let mut partial = x.clone();
        partial.push(ring.zero());
        let probe = Seq::new(ring.clone(), partial)?;
        let t = tau_forward(&probe, i + 1)?;
        x.push(a.seq().terms()[i].sub(&t.seq().terms()[i]));
    }
    Seq::new(ring, x)
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
    fn block_partition_counts() {
        assert_eq!(block_partition_count(2, 1), BigInt::from(1));
        assert_eq!(block_partition_count(2, 2), BigInt::from(3));
        assert_eq!(block_partition_count(2, 3), BigInt::from(15));
        assert_eq!(block_partition_count(3, 2), BigInt::from(10));
        assert_eq!(block_partition_count(4, 2), BigInt::from(35));
    }

    #[test]
    fn basis_powers_expand_binomially() {
        let two = z().from_i64(2);
        assert_eq!(
            basis_power(2, &two, 5),
            Seq::from_i64s(&z(), &[1, 0, 2, 0, 6])
        );
        // squaring the basis element directly gives the same sequence
        let b2 = basis_element(2, &z(), 5);
        assert_eq!(b2.hurwitz(&b2).unwrap(), basis_power(2, &two, 5));
        // exponent 1 recovers the basis element
        for i in 1..=4 {
            assert_eq!(basis_power(i, &z().one(), 6), basis_element(i, &z(), 6));
        }
        // exponent 0 gives the Hurwitz identity
        assert_eq!(
            basis_power(3, &z().zero(), 6),
            Seq::hurwitz_identity(&z(), 6)
        );
    }

    #[test]
    fn basis_powers_add_exponents() {
        let e = q().from_i64(5);
        let f = RingValue::rational(BigInt::from(-3), BigInt::from(2)).unwrap();
        for i in 1..=3usize {
            let lhs = basis_power(i, &e, 7)
                .hurwitz(&basis_power(i, &f, 7))
                .unwrap();
            assert_eq!(lhs, basis_power(i, &e.add(&f), 7), "i = {i}");
        }
    }

    #[test]
    fn first_basis_power_is_geometric() {
        let e = z().from_i64(3);
        assert_eq!(
            basis_power(1, &e, 5),
            Seq::from_i64s(&z(), &[1, 3, 9, 27, 81])
        );
    }

    #[test]
    fn tau_of_zero_is_the_identity() {
        let x = Seq::zeros(&z(), 5);
        let image = tau_forward(&x, 6).unwrap();
        assert_eq!(*image.seq(), Seq::hurwitz_identity(&z(), 6));
    }

    #[test]
    fn tau_length_contract() {
        let x = Seq::zeros(&z(), 3);
        assert!(matches!(
            tau_forward(&x, 6),
            Err(Error::LengthMismatch {
                expected: 5,
                got: 3
            })
        ));
        assert!(tau_forward(&x, 4).is_ok());
    }

    #[test]
    fn tau_symbolic_expansion() {
        // over Z[x0][x1][x2][x3], tau of the generator tuple expands to
        // known polynomials in the exponents
        let mut ring = z();
        for v in ["x0", "x1", "x2", "x3"] {
            ring = Ring::polynomials(&ring, v).unwrap();
        }
        let x0 = ring.variable("x0").unwrap();
        let x1 = ring.variable("x1").unwrap();
        let x2 = ring.variable("x2").unwrap();
        let x3 = ring.variable("x3").unwrap();
        let x = Seq::new(
            ring.clone(),
            vec![x0.clone(), x1.clone(), x2.clone(), x3.clone()],
        )
        .unwrap();
        let image = tau_forward(&x, 5).unwrap();
        let t = image.seq().terms();
        assert!(t[0].is_one());
        assert_eq!(t[1], x0);
        assert_eq!(t[2], x0.pow(2).add(&x1));
        assert_eq!(t[3], x0.pow(3).add(&x0.mul(&x1).scale(&3.into())).add(&x2));
        let expected4 = x0
            .pow(4)
            .add(&x0.pow(2).mul(&x1).scale(&6.into()))
            .add(&x1.pow(2).scale(&3.into()))
            .sub(&x1.scale(&3.into()))
            .add(&x0.mul(&x2).scale(&4.into()))
            .add(&x3);
        assert_eq!(t[4], expected4);
    }

    #[test]
    fn tau_is_a_group_homomorphism() {
        let x = Seq::from_i64s(&z(), &[2, -1, 3, 5, 0]);
        let y = Seq::from_i64s(&z(), &[-4, 2, 1, -3, 7]);
        let lhs = tau_forward(&x.add(&y).unwrap(), 6).unwrap();
        let rhs = tau_forward(&x, 6)
            .unwrap()
            .seq()
            .hurwitz(tau_forward(&y, 6).unwrap().seq())
            .unwrap();
        assert_eq!(*lhs.seq(), rhs);
    }

    #[test]
    fn tau_round_trips() {
        let rings: Vec<Ring> = vec![z(), q(), Ring::integers_mod(12u32).unwrap()];
        for ring in rings {
            let x = Seq::from_i64s(&ring, &[3, -2, 5, 7, -1, 4]);
            let image = tau_forward(&x, 7).unwrap();
            assert_eq!(tau_inverse(&image).unwrap(), x, "ring {ring}");
        }
        // and the other way: start from a unit-headed sequence
        let a = UnitSeq::new(Seq::from_i64s(&z(), &[1, 4, -2, 8, 3, -5, 11])).unwrap();
        let x = tau_inverse(&a).unwrap();
        assert_eq!(tau_forward(&x, 7).unwrap(), a);
    }

    #[test]
    fn tau_inverse_worked_example() {
        // over Z[a1]..[a4]: the exponents of (1, a1, a2, a3, a4)
        let mut ring = z();
        for v in ["a1", "a2", "a3", "a4"] {
            ring = Ring::polynomials(&ring, v).unwrap();
        }
        let a1 = ring.variable("a1").unwrap();
        let a2 = ring.variable("a2").unwrap();
        let a3 = ring.variable("a3").unwrap();
        let a4 = ring.variable("a4").unwrap();
        let a = UnitSeq::new(
            Seq::new(
                ring.clone(),
                vec![ring.one(), a1.clone(), a2.clone(), a3.clone(), a4.clone()],
            )
            .unwrap(),
        )
        .unwrap();
        let x = tau_inverse(&a).unwrap();
        assert_eq!(x.terms()[0], a1);
        assert_eq!(x.terms()[1], a2.sub(&a1.pow(2)));
        let x2 = a3
            .add(&a1.pow(3).scale(&2.into()))
            .sub(&a1.mul(&a2).scale(&3.into()));
        assert_eq!(x.terms()[2], x2);
        let x3 = a4
            .sub(&a1.pow(2).scale(&3.into()))
            .sub(&a1.pow(4).scale(&6.into()))
            .add(&a2.scale(&3.into()))
            .add(&a1.pow(2).mul(&a2).scale(&12.into()))
            .sub(&a2.pow(2).scale(&3.into()))
            .sub(&a1.mul(&a3).scale(&4.into()));
        assert_eq!(x.terms()[3], x3);
    }

    #[test]
    fn unit_seq_rejects_other_heads() {
        assert!(matches!(
            UnitSeq::new(Seq::from_i64s(&z(), &[2, 1])),
            Err(Error::NotUnitHeaded)
        ));
        assert!(matches!(
            tau_inverse(&UnitSeq::new(Seq::from_i64s(&z(), &[1])).unwrap()),
            Err(Error::LengthTooShort { .. })
        ));
    }
}
