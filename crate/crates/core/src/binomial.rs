//! Polynomial sequences of binomial type: generation, recovery, and checks.
//!
//! A sequence of polynomials `q_0, q_1, ...` over `R` is of binomial type
//! when `q_0 = 1` and `q_n(x + y) = sum_h C(n,h) q_h(x) q_{n-h}(y)` for all
//! `n` — the rows of Pascal-style convolution identities that the powers,
//! Touchard, Laguerre, Abel, and Pochhammer families all satisfy. Such a
//! family is determined by a single exponent sequence `u` through the tau
//! isomorphism applied to `x·u`, and both directions of that correspondence
//! are implemented here, division-free.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::comb::{
    binomial, exponential_bell_table, factorial, falling_factorial, stirling1_unsigned, stirling2,
    BellArguments,
};
use crate::error::{Error, Result};
use crate::ring::{embed_constant, Ring, RingKind, RingValue};
use crate::series::Seq;
use crate::tau::{block_partition_count, tau_forward, UnitSeq};

/// A sequence of polynomials: terms live in a polynomial ring and the
/// leading term is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeq(Seq);

impl PolySeq {
    pub fn new(seq: Seq) -> Result<PolySeq> {
        if !matches!(seq.ring().kind(), RingKind::Polynomials { .. }) {
            return Err(Error::InvalidRing {
                message: format!("{} is not a polynomial ring", seq.ring()),
            });
        }
        if !seq.terms()[0].is_one() {
            return Err(Error::NotUnitHeaded);
        }
        Ok(PolySeq(seq))
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

    /// The coefficient ring under the outer variable.
    pub fn base_ring(&self) -> &Ring {
        match self.0.ring().kind() {
            RingKind::Polynomials { base, .. } => base,
            _ => unreachable!("checked at construction"),
        }
    }

    pub fn variable(&self) -> &str {
        match self.0.ring().kind() {
            RingKind::Polynomials { variable, .. } => variable,
            _ => unreachable!("checked at construction"),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// First variable name from `x, t, z, x0, x1, ...` not already bound in `ring`.
fn fresh_variable(ring: &Ring, preferred: &[&str]) -> String {
    for name in preferred {
        if !ring.uses_variable(name) {
            return (*name).to_string();
        }
    }
    (0..)
        .map(|k| format!("{}{k}", preferred[0]))
        .find(|name| !ring.uses_variable(name))
        .expect("some indexed name is unused")
}

fn outer_variable(base: &Ring) -> Result<(Ring, RingValue, String)> {
    let name = fresh_variable(base, &["x", "t", "z"]);
    let ring = Ring::polynomials(base, &name)?;
    let var = ring.variable(&name).expect("just adjoined");
    Ok((ring, var, name))
}

/// The first `n` polynomials `p_m = sum_k falling(x, k) Bh_{m,k}(a_1, a_2, ...)`
/// attached to a unit-headed sequence `a`; division-free.
///
/// For genuinely binomial-type data these are the basic polynomials with
/// `p_m(1) = a_m`; the construction itself works for any unit-headed `a`.
pub fn pa_polynomials(a: &UnitSeq, n: usize) -> Result<PolySeq> {
    let (ring, _, name) = outer_variable(a.ring())?;
    pa_polynomials_in(a, n, &ring, &name)
}

pub fn pa_polynomials_in(a: &UnitSeq, n: usize, ring: &Ring, variable: &str) -> Result<PolySeq> {
    if n == 0 || n > a.len() {
        return Err(Error::LengthTooShort {
            needed: n.max(1),
            got: a.len(),
        });
    }
    let x = ring.variable(variable).ok_or_else(|| Error::InvalidRing {
        message: format!("{ring} does not bind {variable:?}"),
    })?;
    let base = a.ring().clone();
    let args = BellArguments::new(base, a.seq().terms()[1..n].to_vec())?;
    let table = exponential_bell_table(&args, n - 1);
    let mut terms = Vec::with_capacity(n);
    for row in &table {
        let mut acc = ring.zero();
        for (k, bell) in row.iter().enumerate() {
            acc = acc.add(&falling_factorial(&x, k).mul(&embed_constant(ring, bell)?));
        }
        terms.push(acc);
    }
    PolySeq::new(Seq::new(ring.clone(), terms)?)
}

/// Coefficient of `x^j` in the `n`-th attached polynomial, division-free:
/// `c_j = sum_h (-1)^h c(h+j, j) Bh_{n,h+j}(a_1, a_2, ...)` with unsigned
/// first-kind Stirling numbers `c`.
pub fn pa_coefficient(a: &UnitSeq, n: usize, j: usize) -> Result<RingValue> {
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, limit: n });
    }
    if n + 1 > a.len() {
        return Err(Error::LengthTooShort {
            needed: n + 1,
            got: a.len(),
        });
    }
    let ring = a.ring().clone();
    let args = BellArguments::new(ring.clone(), a.seq().terms()[1..=n].to_vec())?;
    let table = exponential_bell_table(&args, n);
    let mut acc = ring.zero();
    for h in 0..=(n - j) {
        let mut c = stirling1_unsigned(h + j, j);
        if h % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&table[n][h + j].scale(&c));
    }
    Ok(acc)
}

/// Weight of `u_{i-1}` in the linear-coefficient recurrence: for a divisor
/// `i` of `m` with quotient `k = m/i`, this is
/// `(-1)^k m! / (k (i!)^k)`, always an integer.
fn recovery_weight(m: usize, i: usize) -> BigInt {
    let k = m / i;
    let mut w = block_partition_count(i, k) * factorial(k - 1);
    if k % 2 == 1 {
        w = -w;
    }
    w
}

/// The binomial-type family generated by an exponent sequence `u`: the first
/// `n` terms of `tau(x·u_0, x·u_1, ...)`, a sequence of polynomials in `x`.
pub fn binomial_from_u(u: &Seq, n: usize) -> Result<PolySeq> {
    let (ring, _, name) = outer_variable(u.ring())?;
    binomial_from_u_in(u, n, &ring, &name)
}

pub fn binomial_from_u_in(u: &Seq, n: usize, ring: &Ring, variable: &str) -> Result<PolySeq> {
    if n < 2 || u.len() < n - 1 {
        return Err(Error::LengthTooShort {
            needed: n.saturating_sub(1).max(1),
            got: u.len(),
        });
    }
    let x = ring.variable(variable).ok_or_else(|| Error::InvalidRing {
        message: format!("{ring} does not bind {variable:?}"),
    })?;
    let mut terms = Vec::with_capacity(n - 1);
    for v in &u.terms()[..n - 1] {
        terms.push(x.mul(&embed_constant(ring, v)?));
    }
    let xu = Seq::new(ring.clone(), terms)?;
    let image = tau_forward(&xu, n)?;
    PolySeq::new(image.into_seq())
}

/// Recover the exponent sequence from a binomial-type family, reading only
/// the linear coefficients: `u_{m-1} = c_{1,m} + sum w(m, i) u_{i-1}` over
/// proper divisors `i` of `m`.
///
/// The result is verified by regenerating the family unless the unchecked
/// variant is used.
pub fn u_from_binomial(q: &PolySeq) -> Result<Seq> {
    let u = u_from_binomial_unchecked(q)?;
    let regenerated = binomial_from_u_in(&u, q.len(), q.ring(), q.variable())?;
    for (index, (ours, theirs)) in regenerated
        .seq()
        .terms()
        .iter()
        .zip(q.seq().terms())
        .enumerate()
    {
        if ours != theirs {
            return Err(Error::NotBinomialType { index });
        }
    }
    Ok(u)
}

/// [`u_from_binomial`] without the regeneration check; cheaper, but silently
/// wrong when the input is not actually of binomial type.
pub fn u_from_binomial_unchecked(q: &PolySeq) -> Result<Seq> {
    let n = q.len();
    if n < 2 {
        return Err(Error::LengthTooShort { needed: 2, got: n });
    }
    let base = q.base_ring().clone();
    let mut u: Vec<RingValue> = Vec::with_capacity(n - 1);
    for m in 1..n {
        let poly = q.seq().terms()[m]
            .as_polynomial()
            .expect("terms of a PolySeq are polynomials");
        if !poly.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm { index: m });
        }
        // proper divisors i of m with 2 <= i <= m/2; the i = 1 factor is
        // geometric and contributes nothing linear at index m >= 2
        let mut next = poly.coeff(1);
        for i in 2..m {
            if m % i == 0 {
                next = next.add(&u[i - 1].scale(&recovery_weight(m, i)));
            }
        }
        u.push(next);
    }
    Seq::new(base, u)
}

/// Outcome of the binomial-type check.
#[derive(Debug, Clone)]
pub struct BinomialTypeReport {
    pub holds: bool,
    /// For a failing family: the first index where the identity breaks,
    /// with both sides of the identity at that index.
    pub failure: Option<BinomialTypeFailure>,
}

/// One counterexample to the binomial-type identity.
#[derive(Debug, Clone)]
pub struct BinomialTypeFailure {
    pub index: usize,
    /// `q_n(x + y)` expanded in `R[x][y]`.
    pub q_of_sum: RingValue,
    /// `sum_h C(n,h) q_h(x) q_{n-h}(y)` in the same ring.
    pub convolution: RingValue,
}

/// Decide whether `q` satisfies the binomial-type identity, by expanding
/// both sides in the bivariate ring `R[x][y]` term by term.
pub fn is_binomial_type(q: &PolySeq) -> Result<BinomialTypeReport> {
    let ring_x = q.ring().clone();
    let y_name = fresh_variable(&ring_x, &["y", "w", "v"]);
    let ring_xy = Ring::polynomials(&ring_x, &y_name)?;
    let x = ring_xy
        .variable(q.variable())
        .expect("outer variable is still bound");
    let y = ring_xy.variable(&y_name).expect("just adjoined");
    let x_plus_y = x.add(&y);

    let n = q.len();
    let mut in_x = Vec::with_capacity(n); // q_h(x) as elements of R[x][y]
    let mut in_y = Vec::with_capacity(n); // q_h(y) likewise
    let mut at_sum = Vec::with_capacity(n); // q_h(x + y)
    for term in q.seq().terms() {
        let poly = term.as_polynomial().expect("terms are polynomials");
        in_x.push(embed_constant(&ring_xy, term)?);
        in_y.push(poly.eval_in(&y)?);
        at_sum.push(poly.eval_in(&x_plus_y)?);
    }
    for idx in 0..n {
        let mut convolution = ring_xy.zero();
        for h in 0..=idx {
            let w = in_x[h].mul(&in_y[idx - h]);
            convolution = convolution.add(&w.scale(&binomial(idx, h)));
        }
        if convolution != at_sum[idx] {
            return Ok(BinomialTypeReport {
                holds: false,
                failure: Some(BinomialTypeFailure {
                    index: idx,
                    q_of_sum: at_sum[idx].clone(),
                    convolution,
                }),
            });
        }
    }
    Ok(BinomialTypeReport {
        holds: true,
        failure: None,
    })
}

/// Recover the unit-headed value sequence `a_m = q_m(1)` from a
/// binomial-type family, verifying that the family is regenerated by
/// [`pa_polynomials`].
pub fn a_from_binomial(q: &PolySeq) -> Result<UnitSeq> {
    let base = q.base_ring().clone();
    let one = base.one();
    let terms = q
        .seq()
        .terms()
        .iter()
        .map(|t| t.as_polynomial().expect("terms are polynomials").eval(&one))
        .collect::<Result<Vec<_>>>()?;
    let a = UnitSeq::new(Seq::new(base, terms)?)?;
    let regenerated = pa_polynomials_in(&a, q.len(), q.ring(), q.variable())?;
    for (index, (ours, theirs)) in regenerated
        .seq()
        .terms()
        .iter()
        .zip(q.seq().terms())
        .enumerate()
    {
        if ours != theirs {
            return Err(Error::NotBinomialType { index });
        }
    }
    Ok(a)
}

/// The built-in binomial-type families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `x^n` over the integers.
    Powers,
    /// `sum_k (-1)^k (n!/k!) C(n-1,k-1) x^k`.
    Laguerre,
    /// `sum_k S(n,k) x^k`, the Bell / exponential polynomials.
    Touchard,
    /// `x (x - n a)^{n-1}` over `Z[a]`.
    Abel,
    /// Rising factorials `x (x+1) ... (x+n-1)`.
    Pochhammer,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "powers" => Ok(Family::Powers),
            "laguerre" => Ok(Family::Laguerre),
            "touchard" => Ok(Family::Touchard),
            "abel" => Ok(Family::Abel),
            "pochhammer" => Ok(Family::Pochhammer),
            _ => Err(Error::Usage {
                message: format!("unknown family {s:?}"),
            }),
        }
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Powers => "powers",
            Family::Laguerre => "laguerre",
            Family::Touchard => "touchard",
            Family::Abel => "abel",
            Family::Pochhammer => "pochhammer",
        }
    }
}

/// The first `n` polynomials of a built-in family.
pub fn family(f: Family, n: usize) -> Result<PolySeq> {
    assert!(n >= 1);
    let z = Ring::integers();
    match f {
        Family::Powers => {
            let (ring, x, _) = outer_variable(&z)?;
            let terms = (0..n).map(|m| x.pow(m as u64)).collect();
            PolySeq::new(Seq::new(ring, terms)?)
        }
        Family::Laguerre => {
            let (ring, x, _) = outer_variable(&z)?;
            let mut terms = vec![ring.one()];
            for m in 1..n {
                let mut acc = ring.zero();
                for k in 1..=m {
                    // n!/k! as a falling product keeps everything integral
                    let scale: BigInt = factorial(m) / factorial(k) * binomial(m - 1, k - 1);
                    let mut w = x.pow(k as u64).scale(&scale);
                    if k % 2 == 1 {
                        w = w.neg();
                    }
                    acc = acc.add(&w);
                }
                terms.push(acc);
            }
            PolySeq::new(Seq::new(ring, terms)?)
        }
        Family::Touchard => {
            let (ring, x, _) = outer_variable(&z)?;
            let terms = (0..n)
                .map(|m| {
                    let mut acc = ring.zero();
                    for k in 0..=m {
                        acc = acc.add(&x.pow(k as u64).scale(&stirling2(m, k)));
                    }
                    acc
                })
                .collect();
            PolySeq::new(Seq::new(ring, terms)?)
        }
        Family::Abel => {
            let base = Ring::polynomials(&z, "a")?;
            let (ring, x, _) = outer_variable(&base)?;
            let a = ring.variable("a").expect("bound in the base");
            let mut terms = vec![ring.one()];
            for m in 1..n {
                let shift = x.sub(&a.scale(&BigInt::from(m)));
                terms.push(x.mul(&shift.pow(m as u64 - 1)));
            }
            PolySeq::new(Seq::new(ring, terms)?)
        }
        Family::Pochhammer => {
            let (ring, x, _) = outer_variable(&z)?;
            let mut terms = vec![ring.one()];
            let mut acc = ring.one();
            for m in 1..n {
                acc = acc.mul(&x.add(&ring.from_i64(m as i64 - 1)));
                terms.push(acc.clone());
            }
            PolySeq::new(Seq::new(ring, terms)?)
        }
    }
}
