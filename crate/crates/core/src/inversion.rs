//! Inverses for the Hurwitz product and for e.g.f. composition.
//!
//! Each inverse comes in several algorithmic forms with identical contracts;
//! the variants trade divisions for Bell polynomial evaluations and serve as
//! cross-checks on one another. Divisions by factorials follow the plan from
//! [`crate::series`]: performed natively when the factorials are units, and
//! over the rational lift with an exactness check when the ring is built
//! from the integers.

use crate::comb::{binomial, factorial, ordinary_bell_table, BellArguments};
use crate::error::{Error, Result};
use crate::series::{division_plan, DivisionPlan, Seq};

/// Inverse for the Hurwitz product by the triangular recurrence
/// `b_0 = a_0^{-1}`, `b_n = -a_0^{-1} sum_{h=1..n} C(n,h) a_h b_{n-h}`.
///
/// Needs nothing beyond a unit leading term, in any ring.
pub fn hurwitz_inverse(a: &Seq) -> Result<Seq> {
    let ring = a.ring().clone();
    let head_inv = a.terms()[0].inverse()?;
    let n = a.len();
    let mut b = Vec::with_capacity(n);
    b.push(head_inv.clone());
    for i in 1..n {
        let mut acc = ring.zero();
        for h in 1..=i {
            let w = a.terms()[h].mul(&b[i - h]);
            acc = acc.add(&w.scale(&binomial(i, h)));
        }
        b.push(acc.mul(&head_inv).neg());
    }
    Seq::new(ring, b)
}

/// Inverse for the Hurwitz product in closed form: `b_n = n! B_n(g) a_0^{-1}`
/// where `B_n` is the complete ordinary Bell polynomial and
/// `g_j = -a_j / (a_0 j!)`.
pub fn hurwitz_inverse_bell(a: &Seq) -> Result<Seq> {
    let ring = a.ring().clone();
    if !a.terms()[0].is_unit() {
        return Err(Error::NotAUnit {
            value: a.terms()[0].to_string(),
            ring: ring.to_string(),
        });
    }
    let n = a.len();
    match division_plan(&ring, n.saturating_sub(1))? {
        DivisionPlan::LiftRetract { lifted } => {
            let b = hurwitz_inverse_bell(&a.lift_into(&lifted))?;
            b.retract_into(&ring)
        }
        DivisionPlan::Native => {
            let head_inv = a.terms()[0].inverse()?;
            let g = (1..n)
                .map(|j| {
                    let jfac_inv = ring
                        .from_integer(&factorial(j))
                        .inverse()
                        .expect("checked by the division plan");
                    a.terms()[j].mul(&head_inv).mul(&jfac_inv).neg()
                })
                .collect::<Vec<_>>();
            let args = BellArguments::new(ring.clone(), g)?;
            let table = ordinary_bell_table(&args, n - 1);
            let mut b = Vec::with_capacity(n);
            for (i, row) in table.iter().enumerate() {
                let mut complete = ring.zero();
                for v in row {
                    complete = complete.add(v);
                }
                b.push(complete.scale(&factorial(i)).mul(&head_inv));
            }
            Seq::new(ring, b)
        }
    }
}

/// Inverse for the Hurwitz product through the relative compositional
/// inverse: `a^{-1} = λ_-((λ_{+,0} a)^{(-1)}) ∘ λ_{+,0}(a)`.
///
/// Division-free apart from the single inversion of `a_0`, so it works in
/// rings where factorials are not invertible.
pub fn hurwitz_inverse_via_relinv(a: &Seq) -> Result<Seq> {
    let head = &a.terms()[0];
    if !head.is_unit() {
        return Err(Error::NotAUnit {
            value: head.to_string(),
            ring: a.ring().to_string(),
        });
    }
    let lam = a.shift_plus(a.ring().zero())?;
    let lam_inv = comp_inverse(&lam)?;
    lam_inv.shift_minus()?.compose_egf(&lam)
}

pub fn check_comp_invertible(a: &Seq) -> Result<()> {
    if a.len() < 2 {
        return Err(Error::LengthTooShort {
            needed: 2,
            got: a.len(),
        });
    }
    if !a.terms()[0].is_zero() || !a.terms()[1].is_unit() {
        return Err(Error::NotInvertibleForComposition);
    }
    Ok(())
}

/// Compositional inverse of `a` (with `a_0 = 0`, `a_1` a unit) by solving
/// `(a ∘ g)[n] = identity[n]` term by term.
///
/// Division-free apart from the single inversion of `a_1`.
pub fn comp_inverse(a: &Seq) -> Result<Seq> {
    check_comp_invertible(a)?;
    let ring = a.ring().clone();
    let a1_inv = a.terms()[1].inverse()?;
    let mut g = vec![ring.zero(), a1_inv.clone()];
    for n in 2..a.len() {
        // with g_n set to zero, (a ∘ g)[n] collects every term except a_1 g_n
        g.push(ring.zero());
        let probe = Seq::new(ring.clone(), g.clone())?;
        let t = a.compose_egf(&probe)?.terms()[n].clone();
        g[n] = t.mul(&a1_inv).neg();
    }
    Seq::new(ring, g)
}

/// Compositional inverse in closed form:
/// `b_n = (n-1)! a_1^{-n} sum_j (-1)^j C(n-1+j, j) B_{n-1,j}(ā)` with
/// `ā_i = a_{i+1} / (a_1 (i+1)!)`.
pub fn comp_inverse_closed(a: &Seq) -> Result<Seq> {
    check_comp_invertible(a)?;
    let ring = a.ring().clone();
    let n_len = a.len();
    match division_plan(&ring, n_len.saturating_sub(1))? {
        DivisionPlan::LiftRetract { lifted } => {
            let b = comp_inverse_closed(&a.lift_into(&lifted))?;
            b.retract_into(&ring)
        }
        DivisionPlan::Native => {
            let a1_inv = a.terms()[1].inverse()?;
            let abar = (1..n_len.saturating_sub(1))
                .map(|i| {
                    let fac_inv = ring
                        .from_integer(&factorial(i + 1))
                        .inverse()
                        .expect("checked by the division plan");
                    a.terms()[i + 1].mul(&a1_inv).mul(&fac_inv)
                })
                .collect::<Vec<_>>();
            let args = BellArguments::new(ring.clone(), abar)?;
            let table = ordinary_bell_table(&args, n_len - 1);
            let mut b = vec![ring.zero()];
            for n in 1..n_len {
                let mut acc = ring.zero();
                for (j, bell) in table[n - 1].iter().enumerate() {
                    let mut w = bell.scale(&binomial(n - 1 + j, j));
                    if j % 2 == 1 {
                        w = w.neg();
                    }
                    acc = acc.add(&w);
                }
                let scaled = acc.scale(&factorial(n - 1)).mul(&a1_inv.pow(n as u64));
                b.push(scaled);
            }
            Seq::new(ring, b)
        }
    }
}

/// Relative compositional inverse: for `a` with a unit leading term, the
/// compositional inverse of `λ_{+,0}(a)`, one term longer than `a`:
/// `λ_{n+1} = n! sum_k (a^{-1}_k / k!) B_{n,k}(λ_1/1!, λ_2/2!, ...)`.
pub fn comp_inverse_via_cinv(a: &Seq) -> Result<Seq> {
    let ring = a.ring().clone();
    if !a.terms()[0].is_unit() {
        return Err(Error::NotAUnit {
            value: a.terms()[0].to_string(),
            ring: ring.to_string(),
        });
    }
    let n_len = a.len();
    match division_plan(&ring, n_len.saturating_sub(1))? {
        DivisionPlan::LiftRetract { lifted } => {
            let b = comp_inverse_via_cinv(&a.lift_into(&lifted))?;
            b.retract_into(&ring)
        }
        DivisionPlan::Native => {
            let a_inv = hurwitz_inverse(a)?;
            let fac_inv = |k: usize| {
                ring.from_integer(&factorial(k))
                    .inverse()
                    .expect("checked by the division plan")
            };
            let mut lam = vec![ring.zero()];
            let mut lam_bar: Vec<crate::ring::RingValue> = Vec::new();
            for n in 0..n_len {
                let args = BellArguments::new(ring.clone(), lam_bar.clone())?;
                let table = ordinary_bell_table(&args, n);
                let mut acc = ring.zero();
                for (k, bell) in table[n].iter().enumerate() {
                    acc = acc.add(&a_inv.terms()[k].mul(&fac_inv(k)).mul(bell));
                }
                let next = acc.scale(&factorial(n));
                lam_bar.push(next.mul(&fac_inv(n + 1)));
                lam.push(next);
            }
            Seq::new(ring, lam)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn z() -> Ring {
        Ring::integers()
    }

    fn q() -> Ring {
        Ring::rationals()
    }

    #[test]
    fn inverse_of_ones_alternates() {
        for ring in [z(), q()] {
            let a = Seq::ones(&ring, 6);
            let b = hurwitz_inverse(&a).unwrap();
            assert_eq!(b, Seq::from_i64s(&ring, &[1, -1, 1, -1, 1, -1]));
            let product = a.hurwitz(&b).unwrap();
            assert_eq!(product, Seq::hurwitz_identity(&ring, 6));
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = Seq::from_i64s(&q(), &[3, 1, 4, 1, 5, 9]);
        let b = hurwitz_inverse(&a).unwrap();
        let e = Seq::hurwitz_identity(&q(), 6);
        assert_eq!(a.hurwitz(&b).unwrap(), e);
        assert_eq!(b.hurwitz(&a).unwrap(), e);
    }

    #[test]
    fn symbolic_inverse_matches_known_expansion() {
        // over Q[a1][a2][a3], the inverse of (1, a1, a2, a3) starts
        // 1, -a1, 2 a1^2 - a2, -6 a1^3 + 6 a1 a2 - a3
        let mut ring = q();
        for v in ["a1", "a2", "a3"] {
            ring = Ring::polynomials(&ring, v).unwrap();
        }
        let a1 = ring.variable("a1").unwrap();
        let a2 = ring.variable("a2").unwrap();
        let a3 = ring.variable("a3").unwrap();
        let a = Seq::new(
            ring.clone(),
            vec![ring.one(), a1.clone(), a2.clone(), a3.clone()],
        )
        .unwrap();
        let b = hurwitz_inverse(&a).unwrap();
        assert_eq!(b.terms()[0], ring.one());
        assert_eq!(b.terms()[1], a1.neg());
        let expect2 = a1.mul(&a1).scale(&2.into()).sub(&a2);
        assert_eq!(b.terms()[2], expect2);
        let a1cubed = a1.mul(&a1).mul(&a1);
        let expect3 = a1
            .mul(&a2)
            .scale(&6.into())
            .sub(&a1cubed.scale(&6.into()))
            .sub(&a3);
        assert_eq!(b.terms()[3], expect3);
    }

    #[test]
    fn bell_form_agrees_with_recurrence() {
        let a = Seq::from_i64s(&q(), &[2, 7, -3, 1, 4, -9, 5]);
        assert_eq!(
            hurwitz_inverse_bell(&a).unwrap(),
            hurwitz_inverse(&a).unwrap()
        );
        // over Z the answer is computed through the rational lift
        let b = Seq::from_i64s(&z(), &[-1, 5, 2, -7, 3]);
        assert_eq!(
            hurwitz_inverse_bell(&b).unwrap(),
            hurwitz_inverse(&b).unwrap()
        );
        // over Z/7, factorials through 6! are invertible
        let m7 = Ring::integers_mod(7u32).unwrap();
        let c = Seq::from_i64s(&m7, &[3, 1, 6, 2, 5, 0, 4]);
        assert_eq!(
            hurwitz_inverse_bell(&c).unwrap(),
            hurwitz_inverse(&c).unwrap()
        );
    }

    #[test]
    fn bell_form_rejects_bad_factorials() {
        let m8 = Ring::integers_mod(8u32).unwrap();
        let a = Seq::from_i64s(&m8, &[3, 1, 1, 1]);
        assert!(matches!(
            hurwitz_inverse_bell(&a),
            Err(Error::FactorialNotInvertible { n: 2 })
        ));
    }

    #[test]
    fn relinv_form_agrees_and_avoids_divisions() {
        let a = Seq::from_i64s(&q(), &[5, -2, 3, 1, -1, 2]);
        assert_eq!(
            hurwitz_inverse_via_relinv(&a).unwrap(),
            hurwitz_inverse(&a).unwrap()
        );
        // works modulo 8 where the Bell form cannot divide by 2!
        let m8 = Ring::integers_mod(8u32).unwrap();
        let b = Seq::from_i64s(&m8, &[3, 2, 7, 4, 1]);
        assert_eq!(
            hurwitz_inverse_via_relinv(&b).unwrap(),
            hurwitz_inverse(&b).unwrap()
        );
        // and over plain Z with a unit head
        let c = Seq::from_i64s(&z(), &[-1, 9, 4, -3, 2, 8]);
        assert_eq!(
            hurwitz_inverse_via_relinv(&c).unwrap(),
            hurwitz_inverse(&c).unwrap()
        );
    }

    #[test]
    fn non_units_are_rejected() {
        let a = Seq::from_i64s(&z(), &[2, 1, 1]);
        assert!(matches!(hurwitz_inverse(&a), Err(Error::NotAUnit { .. })));
        assert!(matches!(
            hurwitz_inverse_bell(&a),
            Err(Error::NotAUnit { .. })
        ));
        assert!(matches!(
            hurwitz_inverse_via_relinv(&a),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn comp_inverse_of_shifted_ones() {
        let a = Seq::from_i64s(&q(), &[0, 1, 1, 1, 1]);
        let g = comp_inverse(&a).unwrap();
        assert_eq!(g, Seq::from_i64s(&q(), &[0, 1, -1, 2, -6]));
        let id = Seq::composition_identity(&q(), 5);
        assert_eq!(a.compose_egf(&g).unwrap(), id);
        assert_eq!(g.compose_egf(&a).unwrap(), id);
    }

    #[test]
    fn comp_inverse_stays_integral_over_z() {
        let a = Seq::from_i64s(&z(), &[0, -1, 4, 7, -2, 5]);
        let g = comp_inverse(&a).unwrap();
        let id = Seq::composition_identity(&z(), 6);
        assert_eq!(a.compose_egf(&g).unwrap(), id);
        assert_eq!(g.compose_egf(&a).unwrap(), id);
    }

    #[test]
    fn comp_inverse_preconditions() {
        assert!(matches!(
            comp_inverse(&Seq::from_i64s(&z(), &[0])),
            Err(Error::LengthTooShort { .. })
        ));
        assert!(matches!(
            comp_inverse(&Seq::from_i64s(&z(), &[1, 1, 1])),
            Err(Error::NotInvertibleForComposition)
        ));
        assert!(matches!(
            comp_inverse(&Seq::from_i64s(&z(), &[0, 2, 1])),
            Err(Error::NotInvertibleForComposition)
        ));
    }

    #[test]
    fn closed_form_agrees_with_solver() {
        let a = Seq::from_i64s(&q(), &[0, 3, -1, 2, 5, -4, 1]);
        assert_eq!(comp_inverse_closed(&a).unwrap(), comp_inverse(&a).unwrap());
        let b = Seq::from_i64s(&z(), &[0, 1, 3, -5, 2, 7]);
        assert_eq!(comp_inverse_closed(&b).unwrap(), comp_inverse(&b).unwrap());
        let c = Seq::from_i64s(&q(), &[0, 1, 1, 1, 1]);
        assert_eq!(
            comp_inverse_closed(&c).unwrap(),
            Seq::from_i64s(&q(), &[0, 1, -1, 2, -6])
        );
    }

    #[test]
    fn relative_inverse_extends_by_one_term() {
        let a = Seq::from_i64s(&q(), &[1, 1, 1, 1]);
        let lam = comp_inverse_via_cinv(&a).unwrap();
        assert_eq!(lam, Seq::from_i64s(&q(), &[0, 1, -1, 2, -6]));
        // same thing as shifting first and inverting compositionally
        let shifted = a.shift_plus(q().zero()).unwrap();
        assert_eq!(lam, comp_inverse(&shifted).unwrap());
        // and the variant is exact over the integers via the lift
        let b = Seq::from_i64s(&z(), &[1, 4, -2, 3, 6]);
        let expect = comp_inverse(&b.shift_plus(z().zero()).unwrap()).unwrap();
        assert_eq!(comp_inverse_via_cinv(&b).unwrap(), expect);
    }
}
