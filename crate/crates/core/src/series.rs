//! Truncated multivariate formal power series with sparse rational coefficients.
//!
//! A `Series` lives in an explicit [`Context`]: an ordered list of distinct
//! variable names, one of which is designated the genus counter (written `h`
//! throughout; it only ever tracks the genus grading). Two series interoperate
//! only when their contexts agree — mixing, say, a `{w,z,h}` series with an
//! `{x,y,z,h}` series is a bug and panics.
//!
//! Invariants:
//! - no stored coefficient is zero;
//! - every stored monomial respects the truncation caps;
//! - all coefficients are exact rationals in lowest terms.
//!
//! Truncation follows one policy: a computation targeting maximum genus `G`
//! caps the genus variable at `G`, each remaining variable at `3G+2`, and the
//! total non-genus degree at `3G+4`. The dimension constraint keeps every
//! generating function in this crate homogeneous of total degree `3g` in its
//! genus-`g` slice, and the differential-equation checks raise degrees by at
//! most four, so these caps lose nothing.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use alloc::collections::BTreeMap;

use crate::rational::Rational;

/// Degree caps for a series computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Maximum exponent of the genus counter.
    pub hbar_cap: u32,
    /// Maximum exponent of each non-genus variable.
    pub var_cap: u32,
    /// Maximum total degree summed over the non-genus variables.
    pub total_cap: u32,
}

impl Truncation {
    /// The standard caps for a computation through genus `g`.
    pub fn for_max_genus(g: u32) -> Self {
        Truncation {
            hbar_cap: g,
            var_cap: 3 * g + 2,
            total_cap: 3 * g + 4,
        }
    }
}

/// A variable context: ordered distinct names, the genus-counter index, and
/// the truncation caps. Contexts are plain values; two series may be combined
/// exactly when their contexts are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    vars: Vec<String>,
    hbar: usize,
    trunc: Truncation,
}

impl Context {
    /// Panics if the names are not distinct or `hbar` is not among them.
    pub fn new(vars: &[&str], hbar: &str, trunc: Truncation) -> Self {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            assert!(
                !names[i + 1..].contains(v),
                "duplicate variable `{v}` in context"
            );
        }
        let hbar_idx = names
            .iter()
            .position(|v| v == hbar)
            .unwrap_or_else(|| panic!("genus counter `{hbar}` not in variable list"));
        Context {
            vars: names,
            hbar: hbar_idx,
            trunc,
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|s| s.as_str())
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn hbar_index(&self) -> usize {
        self.hbar
    }

    fn index_of(&self, var: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == var)
            .unwrap_or_else(|| panic!("unknown variable `{var}`"))
    }

    /// Build a monomial from `(name, exponent)` pairs; unnamed variables get 0.
    pub fn monomial(&self, entries: &[(&str, u32)]) -> Monomial {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in entries {
            exps[self.index_of(name)] += e;
        }
        Monomial(exps)
    }

    /// True when the monomial survives the truncation caps.
    pub fn admits(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.0.len(), self.vars.len());
        let mut total = 0u32;
        for (i, &e) in m.0.iter().enumerate() {
            if i == self.hbar {
                if e > self.trunc.hbar_cap {
                    return false;
                }
            } else {
                if e > self.trunc.var_cap {
                    return false;
                }
                total += e;
            }
        }
        total <= self.trunc.total_cap
    }

    /// Render a monomial with this context's variable names, e.g. `w^2*z*h`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .zip(self.vars.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| {
                if e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector, one entry per variable of the owning context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// A truncated formal power series over a [`Context`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    ctx: Context,
    coeffs: BTreeMap<Monomial, Rational>,
}

impl Series {
    pub fn zero(ctx: &Context) -> Self {
        Series {
            ctx: ctx.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Context) -> Self {
        Series::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Context, value: Rational) -> Self {
        let mut s = Series::zero(ctx);
        if !value.is_zero() {
            s.coeffs
                .insert(Monomial(vec![0; ctx.vars.len()]), value);
        }
        s
    }

    /// A single term `coeff * monomial`. Panics if the monomial violates the
    /// truncation caps: inputs must be constructed within the computed order.
    pub fn term(ctx: &Context, entries: &[(&str, u32)], coeff: Rational) -> Self {
        let m = ctx.monomial(entries);
        assert!(
            ctx.admits(&m),
            "term {} exceeds the truncation caps",
            ctx.format_monomial(&m)
        );
        let mut s = Series::zero(ctx);
        if !coeff.is_zero() {
            s.coeffs.insert(m, coeff);
        }
        s
    }

    /// As [`Series::term`], but a monomial beyond the caps truncates to the
    /// zero series instead of panicking. This is how the closed-form builders
    /// seed their expansions: in a window that cannot hold the term, the term
    /// contributes nothing.
    pub fn term_truncated(ctx: &Context, entries: &[(&str, u32)], coeff: Rational) -> Self {
        let m = ctx.monomial(entries);
        let mut s = Series::zero(ctx);
        if ctx.admits(&m) && !coeff.is_zero() {
            s.coeffs.insert(m, coeff);
        }
        s
    }

    /// Build from `(monomial, coefficient)` pairs, summing duplicates and
    /// dropping zeros. Panics if any monomial violates the truncation caps.
    pub fn from_terms<I>(ctx: &Context, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut coeffs = BTreeMap::new();
        for (m, v) in terms {
            assert!(
                ctx.admits(&m),
                "term {} exceeds the truncation caps",
                ctx.format_monomial(&m)
            );
            Self::insert_add(&mut coeffs, m, v);
        }
        Series {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.coeffs.iter()
    }

    /// Exact stored coefficient, zero if absent. Panics when the monomial lies
    /// beyond the truncation caps — the caller asked for an order that was
    /// never computed.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        assert!(
            self.ctx.admits(m),
            "coefficient of {} requested beyond the computed truncation",
            self.ctx.format_monomial(m)
        );
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient lookup by `(name, exponent)` pairs.
    pub fn coefficient_at(&self, entries: &[(&str, u32)]) -> Rational {
        self.coefficient(&self.ctx.monomial(entries))
    }

    fn constant_term(&self) -> Rational {
        let m = Monomial(vec![0; self.ctx.vars.len()]);
        self.coeffs.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    fn assert_same_context(&self, other: &Series, op: &str) {
        assert!(
            self.ctx == other.ctx,
            "context mismatch in {op}: {:?} vs {:?}",
            self.ctx.vars,
            other.ctx.vars
        );
    }

    fn insert_add(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, v: Rational) {
        if v.is_zero() {
            return;
        }
        match map.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        self.assert_same_context(other, "add");
        let mut coeffs = self.coeffs.clone();
        for (m, v) in &other.coeffs {
            Self::insert_add(&mut coeffs, m.clone(), v.clone());
        }
        Series {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, v)| (m.clone(), -v))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Series {
        if factor.is_zero() {
            return Series::zero(&self.ctx);
        }
        Series {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, v)| (m.clone(), v * factor))
                .collect(),
        }
    }

    /// Exact truncated product: terms beyond the caps are dropped. Because the
    /// excluded monomials are closed under multiplication, this quotient is a
    /// ring homomorphism and the ring axioms hold exactly.
    pub fn mul(&self, other: &Series) -> Series {
        self.assert_same_context(other, "mul");
        let mut coeffs = BTreeMap::new();
        for (ma, va) in &self.coeffs {
            for (mb, vb) in &other.coeffs {
                let m = ma.mul(mb);
                if self.ctx.admits(&m) {
                    Self::insert_add(&mut coeffs, m, va * vb);
                }
            }
        }
        Series {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, n: u32) -> Series {
        let mut acc = Series::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `exp(s) = Σ s^k / k!`. Panics unless the constant term is zero; the sum
    /// then terminates because each power raises the minimum degree.
    pub fn exp(&self) -> Series {
        assert!(
            self.constant_term().is_zero(),
            "exp requires a zero constant term"
        );
        let mut acc = Series::one(&self.ctx);
        let mut term = Series::one(&self.ctx);
        let mut k: u64 = 1;
        loop {
            term = term.mul(self).scale(&Rational::from_big(
                1.into(),
                num_bigint::BigInt::from(k),
            ));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            k += 1;
        }
        acc
    }

    /// Formal logarithm `log(1 + u) = Σ (-1)^{m+1} u^m / m`. Panics unless the
    /// constant term is one.
    pub fn log(&self) -> Series {
        assert!(
            self.constant_term() == Rational::one(),
            "log requires a constant term equal to 1"
        );
        let u = self.sub(&Series::one(&self.ctx));
        let mut acc = Series::zero(&self.ctx);
        let mut power = Series::one(&self.ctx);
        let mut m: u64 = 1;
        loop {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let coef = Rational::alternating_sign(m + 1)
                * Rational::from_big(1.into(), num_bigint::BigInt::from(m));
            acc = acc.add(&power.scale(&coef));
            m += 1;
        }
        acc
    }

    /// Exact formal derivative with respect to `var`.
    pub fn partial_derivative(&self, var: &str) -> Series {
        let idx = self.ctx.index_of(var);
        let mut coeffs = BTreeMap::new();
        for (m, v) in &self.coeffs {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            Self::insert_add(
                &mut coeffs,
                Monomial(exps),
                v * &Rational::integer(e as i64),
            );
        }
        Series {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Substitute `var -> -var`: scales each coefficient by `(-1)^exponent`.
    pub fn substitute_sign(&self, var: &str) -> Series {
        let idx = self.ctx.index_of(var);
        Series {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, v)| {
                    let sign = Rational::alternating_sign(m.0[idx] as u64);
                    (m.clone(), v * &sign)
                })
                .collect(),
        }
    }

    /// Set `var` to zero but keep it in the context: retains exactly the
    /// monomials free of `var`.
    pub fn set_zero(&self, var: &str) -> Series {
        let idx = self.ctx.index_of(var);
        Series {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.0[idx] == 0)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    /// Set `var` to zero and remove it from the context. The genus counter
    /// cannot be removed.
    pub fn restrict_zero(&self, var: &str) -> Series {
        let idx = self.ctx.index_of(var);
        assert!(
            idx != self.ctx.hbar,
            "cannot restrict the genus counter to zero"
        );
        let vars: Vec<&str> = self
            .ctx
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let hbar_name = self.ctx.vars[self.ctx.hbar].clone();
        let ctx = Context::new(&vars, &hbar_name, self.ctx.trunc);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(m, _)| m.0[idx] == 0)
            .map(|(m, v)| {
                let exps: Vec<u32> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != idx)
                    .map(|(_, &e)| e)
                    .collect();
                (Monomial(exps), v.clone())
            })
            .collect();
        Series { ctx, coeffs }
    }

    /// The part of the series with genus-counter exponent exactly `g`.
    pub fn hbar_slice(&self, g: u32) -> Series {
        let idx = self.ctx.hbar;
        Series {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.0[idx] == g)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn max_hbar_degree(&self) -> Option<u32> {
        let idx = self.ctx.hbar;
        self.coeffs.keys().map(|m| m.0[idx]).max()
    }

    /// Replace one coefficient, dropping the entry when the value is zero.
    /// This is a plain data edit, used both by builders and by the mutation
    /// self-tests of the verification harness.
    pub fn with_coefficient(&self, m: &Monomial, value: Rational) -> Series {
        assert!(
            self.ctx.admits(m),
            "coefficient at {} lies beyond the truncation caps",
            self.ctx.format_monomial(m)
        );
        let mut coeffs = self.coeffs.clone();
        if value.is_zero() {
            coeffs.remove(m);
        } else {
            coeffs.insert(m.clone(), value);
        }
        Series {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = self.ctx.format_monomial(m);
            if mono == "1" {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}*{mono}")?;
            }
        }
        Ok(())
    }
}
