//! Exact Bernoulli numbers and the closed-form target values they feed.
//!
//! Convention: `b_0 = 1` and `Σ_{i=0}^{n} C(n+1, i) b_i = 0` for `n ≥ 1`.
//! This fixes `b_1 = -1/2`, `b_2 = 1/6`, `b_3 = 0`, `b_4 = -1/30`, matching
//! the listed reference values; only the even-index numbers are ever used
//! downstream, so the sign choice at `b_1` is immaterial.

use alloc::vec::Vec;

use crate::rational::{binomial, factorial, Rational};

/// Bernoulli numbers `b_0 .. b_max`, computed once by the defining recurrence.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Build the table through index `max` (inclusive).
    pub fn up_to(max: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(max + 1);
        values.push(Rational::one());
        for n in 1..=max {
            // C(n+1, n) b_n = -Σ_{i<n} C(n+1, i) b_i
            let mut acc = Rational::zero();
            for (i, b) in values.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += Rational::from_bigint(binomial(n as u64 + 1, i as u64)) * b;
            }
            values.push(-acc / Rational::integer(n as i64 + 1));
        }
        BernoulliTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `b_k`. Panics beyond the constructed range.
    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }
}

/// The `k`-th Bernoulli number, computed from scratch.
pub fn bernoulli(k: usize) -> Rational {
    BernoulliTable::up_to(k).get(k).clone()
}

/// `|b_{2g}| (g-1)! / (2^g (2g)!)` — the closed-form value of the degree-(g-2)
/// kappa pairing against the top lambda product, nonzero for every `g ≥ 2`.
pub fn lemma2_target(g: u32) -> Rational {
    assert!(g >= 2, "lemma2_target requires g >= 2, got {g}");
    let b2g = bernoulli(2 * g as usize).abs();
    let numer = b2g * Rational::from_bigint(factorial(g as u64 - 1));
    let denom = Rational::integer(2).pow(g as i64) * Rational::from_bigint(factorial(2 * g as u64));
    numer / denom
}

/// `g! / (2^{g-1} (2g)!)` — the right-hand side of the kappa-pairing identity
/// that [`lemma2_target`] reduces to.
pub fn eq3_target(g: u32) -> Rational {
    assert!(g >= 2, "eq3_target requires g >= 2, got {g}");
    Rational::from_bigint(factorial(g as u64))
        / (Rational::integer(2).pow(g as i64 - 1) * Rational::from_bigint(factorial(2 * g as u64)))
}
