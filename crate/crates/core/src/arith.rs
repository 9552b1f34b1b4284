//! Exact integer helpers: checked 128-bit arithmetic, extended gcd,
//! Legendre/Kronecker symbols at odd primes, primality and square tests.
//!
//! All arithmetic on form coefficients goes through the checked helpers in
//! this module. Overflow surfaces as [`Error::Overflow`] instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};

/// Coefficient type for forms and matrices.
pub type Int = i128;

#[inline]
pub fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub fn neg(a: Int) -> Result<Int> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: Int, b: Int) -> Int {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    // Only overflows for gcd = 2^127, i.e. both inputs i128::MIN or zero.
    x as Int
}

/// Extended Euclid: returns `(g, lambda, mu)` with `g = gcd(a, b) > 0` and
/// `lambda * a + mu * b = g`.
pub fn xgcd(a: Int, b: Int) -> Result<(Int, Int, Int)> {
    if a == 0 && b == 0 {
        return Err(Error::UndefinedGcd);
    }
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1): (Int, Int) = (1, 0);
    let (mut t0, mut t1): (Int, Int) = (0, 1);
    while r1 != 0 {
        let q = r0.checked_div(r1).ok_or(Error::Overflow)?;
        (r0, r1) = (r1, sub(r0, mul(q, r1)?)?);
        (s0, s1) = (s1, sub(s0, mul(q, s1)?)?);
        (t0, t1) = (t1, sub(t0, mul(q, t1)?)?);
    }
    if r0 < 0 {
        Ok((neg(r0)?, neg(s0)?, neg(t0)?))
    } else {
        Ok((r0, s0, t0))
    }
}

/// Floor division (rounds toward negative infinity).
pub fn div_floor(a: Int, b: Int) -> Result<Int> {
    if b == 0 {
        return Err(Error::Overflow);
    }
    let q = a.checked_div(b).ok_or(Error::Overflow)?;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        sub(q, 1)
    } else {
        Ok(q)
    }
}

/// Representative of `a` modulo `m` in `[0, |m|)`.
pub fn mod_floor(a: Int, m: Int) -> Int {
    a.rem_euclid(m)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: Int, m: Int) -> Option<Int> {
    let (g, lambda, _) = xgcd(a, m).ok()?;
    (g == 1).then(|| mod_floor(lambda, m))
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: Int) -> Option<Int> {
    (n >= 0).then(|| n.isqrt())
}

pub fn is_perfect_square(n: Int) -> bool {
    match isqrt(n) {
        Some(r) => r * r == n,
        None => false,
    }
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    // Double-and-add keeps every intermediate below 2m.
    let (mut a, mut b, mut acc) = (a % m, b % m, 0u128);
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// The first twelve primes are a deterministic Miller-Rabin witness set for
// n < 3.3 * 10^24, which covers every 64-bit input.
const MR_BASES: [u128; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// True iff `f` is a prime other than 2.
pub fn is_odd_prime(f: Int) -> bool {
    if f < 3 || f % 2 == 0 {
        return false;
    }
    let n = f as u128;
    for p in MR_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Kronecker symbol `(d / f)` for an odd prime `f` (the Legendre symbol),
/// computed by Euler's criterion.
pub fn kronecker(d: Int, f: Int) -> Result<i32> {
    if !is_odd_prime(f) {
        return Err(Error::UnsupportedModulus(f));
    }
    let residue = mod_floor(d, f) as u128;
    if residue == 0 {
        return Ok(0);
    }
    let m = f as u128;
    Ok(if pow_mod(residue, (m - 1) / 2, m) == 1 {
        1
    } else {
        -1
    })
}

fn is_squarefree(n: Int) -> bool {
    let mut n = n.unsigned_abs();
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// A discriminant: a non-square integer congruent to 0 or 1 modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Discriminant(Int);

impl Discriminant {
    pub fn new(value: Int) -> Result<Self> {
        if is_perfect_square(value) {
            return Err(Error::SquareDiscriminant(value));
        }
        if !matches!(mod_floor(value, 4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(value));
        }
        Ok(Discriminant(value))
    }

    pub fn value(self) -> Int {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Fundamental discriminants are those with no discriminant `D / f^2`
    /// for an integer `f > 1`.
    pub fn is_fundamental(self) -> bool {
        let d = self.0;
        match mod_floor(d, 4) {
            1 => is_squarefree(d),
            0 => matches!(mod_floor(d / 4, 4), 2 | 3) && is_squarefree(d / 4),
            _ => false,
        }
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
