//! Integer combinatorics and Bell polynomial evaluation over arbitrary rings.
//!
//! Partial Bell polynomials are evaluated with the division-free recurrences
//!   B(n,k)  = sum_{j=1..n-k+1} x_j * B(n-j, k-1)            (ordinary)
//!   Bh(n,k) = sum_{j=1..n-k+1} C(n-1, j-1) * x_j * Bh(n-j, k-1)  (exponential)
//! with B(0,0) = 1 and B(n,0) = B(0,k) = 0 otherwise. Tables are built per
//! call; there are no global caches.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingValue};

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= BigInt::from(i);
    }
    out
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Stirling number of the second kind `S(n, k)`: set partitions of an
/// `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // row-by-row recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += BigInt::from(j) * v;
            next[j + 1] += v;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Unsigned Stirling number of the first kind `c(n, k)`: permutations of an
/// `n`-set with exactly `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += BigInt::from(m - 1) * v;
            next[j + 1] += v;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Falling factorial `v (v-1) ... (v-k+1)` in the value's ring.
pub fn falling_factorial(value: &RingValue, k: usize) -> RingValue {
    let ring = value.ring();
    let mut out = ring.one();
    for i in 0..k {
        out = out.mul(&value.sub(&ring.from_i64(i as i64)));
    }
    out
}

/// Arguments `x_1, x_2, ...` for Bell polynomial evaluation, all drawn from
/// one ring; indices beyond the stored prefix read as zero.
#[derive(Debug, Clone)]
pub struct BellArguments {
    ring: Ring,
    values: Vec<RingValue>,
}

impl BellArguments {
    pub fn new(ring: Ring, values: Vec<RingValue>) -> Result<BellArguments> {
        for v in &values {
            if *v.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: v.ring().to_string(),
                });
            }
        }
        Ok(BellArguments { ring, values })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `x_j` with 1-based `j`.
    fn x(&self, j: usize) -> RingValue {
        debug_assert!(j >= 1);
        self.values
            .get(j - 1)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }
}

fn bell_table(args: &BellArguments, n_max: usize, exponential: bool) -> Vec<Vec<RingValue>> {
    let zero = args.ring.zero();
    let mut table: Vec<Vec<RingValue>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![zero.clone(); n + 1];
        if n == 0 {
            row[0] = args.ring.one();
        }
        for k in 1..=n {
            let mut acc = zero.clone();
            for j in 1..=(n - k + 1) {
                let mut term = args.x(j).mul(&table[n - j][k - 1]);
                if exponential {
                    term = term.scale(&binomial(n - 1, j - 1));
                }
                acc = acc.add(&term);
            }
            row[k] = acc;
        }
        table.push(row);
    }
    table
}

/// Rows `0..=n_max` of the ordinary partial Bell triangle for `args`.
pub(crate) fn ordinary_bell_table(args: &BellArguments, n_max: usize) -> Vec<Vec<RingValue>> {
    bell_table(args, n_max, false)
}

/// Rows `0..=n_max` of the exponential partial Bell triangle for `args`.
pub(crate) fn exponential_bell_table(args: &BellArguments, n_max: usize) -> Vec<Vec<RingValue>> {
    bell_table(args, n_max, true)
}

/// Ordinary partial Bell polynomial `B_{n,k}` at `args`.
pub fn ordinary_bell_partial(args: &BellArguments, n: usize, k: usize) -> RingValue {
    if k > n {
        return args.ring.zero();
    }
    ordinary_bell_table(args, n)[n][k].clone()
}

/// Complete ordinary Bell polynomial `B_n = sum_k B_{n,k}` at `args`.
pub fn ordinary_bell_complete(args: &BellArguments, n: usize) -> RingValue {
    let table = ordinary_bell_table(args, n);
    let mut acc = args.ring.zero();
    for v in &table[n] {
        acc = acc.add(v);
    }
    acc
}

/// Exponential partial Bell polynomial at `args`.
pub fn exponential_bell_partial(args: &BellArguments, n: usize, k: usize) -> RingValue {
    if k > n {
        return args.ring.zero();
    }
    exponential_bell_table(args, n)[n][k].clone()
}
