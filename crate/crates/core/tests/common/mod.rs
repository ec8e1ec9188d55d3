//! Brute-force oracles, independent of the series engine they certify.
//!
//! Everything here works directly on `BigRational` with explicit nested sums,
//! no `Series` type, no caches: the closed form
//!
//! ```text
//! exp((w^3 + z^3) h / 24) * Σ_{n>=0} n!/(2n+1)! [ wz(w+z) h / 2 ]^n
//! ```
//!
//! is expanded term by term, and the string-equation recursion is replayed on
//! those raw coefficients. Expected values in the test suites were computed
//! with these oracles before being frozen as literals.

// Not every test target uses every oracle.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use tautring_core::Rational;

pub fn fact(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn ratio(numer: BigInt, denom: BigInt) -> BigRational {
    BigRational::new(numer, denom)
}

/// Convert an oracle value into the engine's rational type.
pub fn to_core(r: &BigRational) -> Rational {
    Rational::from_big(r.numer().clone(), r.denom().clone())
}

/// Coefficient of `w^a z^b h^g` in the two-variable closed form, by direct
/// expansion: choose the exponential powers `i` (for `w^3`) and `j` (for
/// `z^3`) and the kernel power `n` with `i + j + n = g`, then match the
/// binomial split of `(w + z)^n`.
pub fn eq6_coeff(a: u32, b: u32, g: u32) -> BigRational {
    let mut total = BigRational::zero();
    for n in 0..=g as i64 {
        for i in 0..=(g as i64 - n) {
            let j = g as i64 - n - i;
            let s = a as i64 - 3 * i - n;
            let t = b as i64 - 3 * j - n;
            if s < 0 || t < 0 || s + t != n {
                continue;
            }
            // n!/(2n+1)! * C(n, s) / 2^n  *  1/(24^i i!)  *  1/(24^j j!)
            let numer = fact(n as u64) * binom(n as u64, s as u64);
            let denom = fact(2 * n as u64 + 1)
                * BigInt::from(2).pow(n as u32)
                * BigInt::from(24).pow(i as u32)
                * fact(i as u64)
                * BigInt::from(24).pow(j as u32)
                * fact(j as u64);
            total += ratio(numer, denom);
        }
    }
    total
}

/// `<t_{3g-2}>_g = 1/(24^g g!)`.
pub fn one_point_oracle(g: u32) -> BigRational {
    ratio(BigInt::one(), BigInt::from(24).pow(g) * fact(g as u64))
}

/// `<t_a t_b>_g` by replaying the string-equation recursion on the raw
/// closed-form coefficients: `P_k = eq6(k, 3g-k) - P_{k-1}`, `P_{<0} = 0`.
pub fn two_point_oracle(a: u32, b: u32, g: u32) -> BigRational {
    if a as i64 + b as i64 != 3 * g as i64 - 1 {
        return BigRational::zero();
    }
    let mut p = BigRational::zero();
    for k in 0..=a {
        p = eq6_coeff(k, 3 * g - k, g) - p;
    }
    p
}

/// `g! / (2^{g-2} (2g)!)`, written integrally as `4 g! / (2^g (2g)!)`.
pub fn eq5_rhs(g: u32) -> BigRational {
    ratio(
        BigInt::from(4) * fact(g as u64),
        BigInt::from(2).pow(g) * fact(2 * g as u64),
    )
}
