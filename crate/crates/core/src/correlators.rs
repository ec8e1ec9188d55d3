//! The intersection-number engine.
//!
//! Everything here is driven by one closed form and one differential
//! equation. The closed form gives the three-point functions with a zero
//! insertion as the coefficients of
//!
//! ```text
//! D(w, z) = exp((w^3 + z^3) h / 24) * Σ_{n≥0} n!/(2n+1)! [ wz(w+z) h / 2 ]^n
//! ```
//!
//! where `h` counts the genus. Two-point values follow from the string
//! equation `<t_0 t_a t_b> = <t_{a-1} t_b> + <t_a t_{b-1}>` by a triangular
//! recursion, and the remaining three-point values (all indices positive) are
//! the unique solution of the per-genus linear system obtained by matching
//! monomials in the translated KdV equation for `E(x, y, z) = <t(x)t(y)t(z)>`.
//! A one-point closed form `<t_{3g-2}>_g = 1/(24^g g!)` completes the set.
//!
//! All values are memoized in a [`CorrelatorEngine`]; a cached value always
//! equals the value recomputed from scratch. Indices with the wrong dimension
//! (`Σ d_i != 3g - 3 + n`) yield zero, and a tau with a negative index reads
//! as zero wherever shifted sums produce one.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{LinearSystem, SolveError};
use crate::rational::{binomial, factorial, Rational};
use crate::series::{Context, Series, Truncation};

/// A genus together with a sorted multiset of tau indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TauWord {
    genus: u32,
    indices: Vec<u32>,
}

impl TauWord {
    /// Canonical form: indices sorted ascending (correlators are symmetric).
    pub fn new(genus: u32, indices: &[u32]) -> Self {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        TauWord { genus, indices }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn arity(&self) -> usize {
        self.indices.len()
    }

    /// The dimension constraint: `Σ indices = 3g - 3 + n`.
    pub fn dimension_ok(&self) -> bool {
        let sum: i64 = self.indices.iter().map(|&d| d as i64).sum();
        sum == 3 * self.genus as i64 - 3 + self.indices.len() as i64
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, d) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "t{d}")?;
        }
        write!(f, ">_{}", self.genus)
    }
}

/// A signed formal combination of brackets with the genus left open; each
/// bracket is later evaluated at the unique genus its dimension admits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTauCombination {
    terms: Vec<(i8, Vec<u32>)>,
}

impl SignedTauCombination {
    /// Panics if two terms carry the same index multiset.
    pub fn new(terms: Vec<(i8, Vec<u32>)>) -> Self {
        let mut canonical: Vec<(i8, Vec<u32>)> = terms
            .into_iter()
            .map(|(s, mut ix)| {
                assert!(s == 1 || s == -1, "sign must be +1 or -1");
                ix.sort_unstable();
                (s, ix)
            })
            .collect();
        for i in 0..canonical.len() {
            for j in i + 1..canonical.len() {
                assert!(
                    canonical[i].1 != canonical[j].1,
                    "duplicate bracket in signed combination"
                );
            }
        }
        canonical.sort();
        SignedTauCombination { terms: canonical }
    }

    pub fn terms(&self) -> &[(i8, Vec<u32>)] {
        &self.terms
    }

    /// Σ sign · bracket, each bracket at its dimension-resolved genus.
    pub fn evaluate(&self, engine: &mut CorrelatorEngine) -> Rational {
        let mut acc = Rational::zero();
        for (sign, indices) in &self.terms {
            let ix: Vec<i64> = indices.iter().map(|&d| d as i64).collect();
            let v = engine.evaluate_bracket(&ix);
            acc += if *sign > 0 { v } else { -v };
        }
        acc
    }
}

/// The translation of a kappa-class pair into tau brackets:
/// `k_a k_b -> <t_{a+1} t_{b+1}> - <t_{a+b+1}>`.
pub fn kappa_pair_to_tau(a: u32, b: u32) -> SignedTauCombination {
    SignedTauCombination::new(vec![(1, vec![a + 1, b + 1]), (-1, vec![a + b + 1])])
}

/// The standard variable context for two-variable generating functions.
pub fn wz_context(max_genus: u32) -> Context {
    Context::new(&["w", "z", "h"], "h", Truncation::for_max_genus(max_genus))
}

/// The three-variable context used by the full three-point function.
pub fn xyz_context(max_genus: u32) -> Context {
    Context::new(&["x", "y", "z", "h"], "h", Truncation::for_max_genus(max_genus))
}

/// `Σ_{n≥0} n!/(2n+1)! [ va·vb·(va+vb)·h / 2 ]^n` in the given context.
pub fn kernel_sum_in(ctx: &Context, va: &str, vb: &str) -> Series {
    let base = Series::term_truncated(ctx, &[(va, 2), (vb, 1), ("h", 1)], Rational::new(1, 2))
        .add(&Series::term_truncated(
            ctx,
            &[(va, 1), (vb, 2), ("h", 1)],
            Rational::new(1, 2),
        ));
    let mut acc = Series::one(ctx);
    let mut power = Series::one(ctx);
    let mut n: u64 = 1;
    loop {
        power = power.mul(&base);
        if power.is_zero() {
            break;
        }
        let coef = Rational::from_big(factorial(n), factorial(2 * n + 1));
        acc = acc.add(&power.scale(&coef));
        n += 1;
    }
    acc
}

/// `exp(v^3 h / 24)` in the given context.
pub fn exp_cube_in(ctx: &Context, v: &str) -> Series {
    Series::term_truncated(ctx, &[(v, 3), ("h", 1)], Rational::new(1, 24)).exp()
}

/// The closed form for `<t_0 t(va) t(vb)>`, built in an arbitrary context.
pub fn d_series_in(ctx: &Context, va: &str, vb: &str) -> Series {
    let exp_part = Series::term_truncated(ctx, &[(va, 3), ("h", 1)], Rational::new(1, 24))
        .add(&Series::term_truncated(
            ctx,
            &[(vb, 3), ("h", 1)],
            Rational::new(1, 24),
        ))
        .exp();
    exp_part.mul(&kernel_sum_in(ctx, va, vb))
}

/// `<t_0 t(w) t(z)>` through genus `max_genus`, over `{w, z, h}`.
pub fn d_series(max_genus: u32) -> Series {
    let ctx = wz_context(max_genus);
    d_series_in(&ctx, "w", "z")
}

/// The closed form for `F(w, z) = E(w, z, -z)`:
/// `exp(w^3 h/24) Σ_{a,b} (w^3)^a (w z^2)^b h^{a+b} (a+b)!/(2^{a+b-1}(2a+2b+2)!) C(a+b+1, 2a+1)`.
pub fn f_series(max_genus: u32) -> Series {
    let ctx = wz_context(max_genus);
    let mut sum = Series::zero(&ctx);
    for a in 0..=max_genus {
        for b in 0..=(max_genus - a) {
            let n = (a + b) as u64;
            let choose = binomial(n + 1, 2 * a as u64 + 1);
            if choose.is_zero() {
                continue;
            }
            let coef = Rational::from_big(factorial(n) * choose, factorial(2 * n + 2))
                * Rational::integer(2).pow(1 - n as i64);
            sum = sum.add(&Series::term(
                &ctx,
                &[("w", 3 * a + b), ("z", 2 * b), ("h", a + b)],
                coef,
            ));
        }
    }
    exp_cube_in(&ctx, "w").mul(&sum)
}

/// Memoizing correlator engine, valid through a fixed maximum genus.
///
/// Construction is cheap; the two-point tables and the per-genus linear
/// solves happen lazily, the first time a value of that genus is requested.
pub struct CorrelatorEngine {
    max_genus: u32,
    d: Series,
    cache: BTreeMap<TauWord, Rational>,
    two_point_done: Vec<bool>,
    e_done: Vec<bool>,
    /// Boundary terms of the three-point equation that do not involve the
    /// genus being solved; shared across genera.
    e_boundary_rhs: Option<Series>,
}

impl CorrelatorEngine {
    pub fn new(max_genus: u32) -> Self {
        CorrelatorEngine {
            max_genus,
            d: d_series(max_genus),
            cache: BTreeMap::new(),
            two_point_done: vec![false; max_genus as usize + 1],
            e_done: vec![false; max_genus as usize + 1],
            e_boundary_rhs: None,
        }
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    /// The `D` series the zero-index three-point values are read from.
    pub fn d(&self) -> &Series {
        &self.d
    }

    fn assert_genus(&self, g: u32, what: &str) {
        assert!(
            g <= self.max_genus,
            "{what} at genus {g} exceeds the constructed truncation (max genus {})",
            self.max_genus
        );
    }

    /// `<t_{3g-2}>_g = 1/(24^g g!)`. Panics at `g = 0`: no one-point
    /// correlator exists there.
    pub fn one_point(&mut self, g: u32) -> Rational {
        assert!(g >= 1, "no one-point correlator exists at genus 0");
        let word = TauWord::new(g, &[3 * g - 2]);
        if let Some(v) = self.cache.get(&word) {
            return v.clone();
        }
        let v = (Rational::integer(24).pow(g as i64)
            * Rational::from_bigint(factorial(g as u64)))
        .recip();
        self.cache.insert(word, v.clone());
        v
    }

    /// `<t_0 t_a t_b>_g`: the coefficient of `w^a z^b h^g` in `D`. Zero when
    /// the dimension constraint fails.
    pub fn three_point_with_zero(&mut self, a: u32, b: u32, g: u32) -> Rational {
        if a as i64 + b as i64 != 3 * g as i64 {
            return Rational::zero();
        }
        self.assert_genus(g, "three-point value");
        let word = TauWord::new(g, &[0, a, b]);
        if let Some(v) = self.cache.get(&word) {
            return v.clone();
        }
        let v = self.d.coefficient_at(&[("w", a), ("z", b), ("h", g)]);
        self.cache.insert(word, v.clone());
        v
    }

    /// `<t_a t_b>_g` by the string-equation recursion. Zero unless
    /// `a + b = 3g - 1`.
    pub fn two_point(&mut self, a: u32, b: u32, g: u32) -> Rational {
        if a as i64 + b as i64 != 3 * g as i64 - 1 {
            return Rational::zero();
        }
        self.assert_genus(g, "two-point value");
        self.ensure_two_point(g);
        self.cache
            .get(&TauWord::new(g, &[a, b]))
            .cloned()
            .expect("two-point table populated for this genus")
    }

    /// Solve `P_k = <t_0 t_k t_{3g-k}> - P_{k-1}` with `P_{<0} = 0`, where
    /// `P_k = <t_k t_{3g-1-k}>_g`. The recursion is one-sided; the palindrome
    /// `P_k = P_{3g-1-k}` and the final step `P_{3g-1} = <t_0 t_{3g} t_0>`
    /// are theorems and are asserted here as overdetermination checks.
    fn ensure_two_point(&mut self, g: u32) {
        assert!(g >= 1, "the string recursion needs a stable range, g >= 1");
        if self.two_point_done[g as usize] {
            return;
        }
        let top = 3 * g; // a + b = 3g - 1
        let mut p: Vec<Rational> = Vec::with_capacity(top as usize);
        for k in 0..top {
            let q = self.three_point_with_zero(k, top - k, g);
            let prev = if k == 0 {
                Rational::zero()
            } else {
                p[k as usize - 1].clone()
            };
            p.push(q - prev);
        }
        let q_top = self.three_point_with_zero(top, 0, g);
        assert_eq!(
            q_top,
            p[top as usize - 1],
            "string recursion closure failed at genus {g}"
        );
        for k in 0..top {
            let mirror = &p[(top - 1 - k) as usize];
            assert_eq!(
                &p[k as usize], mirror,
                "two-point palindrome failed at genus {g}, k = {k}"
            );
        }
        for k in 0..top {
            self.cache
                .insert(TauWord::new(g, &[k, top - 1 - k]), p[k as usize].clone());
        }
        self.two_point_done[g as usize] = true;
    }

    /// `<t_a t_b t_c>_g` for arbitrary indices. Zero unless `a + b + c = 3g`;
    /// all-positive triples come from the per-genus linear solve.
    pub fn three_point(&mut self, a: u32, b: u32, c: u32, g: u32) -> Rational {
        if a as i64 + b as i64 + c as i64 != 3 * g as i64 {
            return Rational::zero();
        }
        self.assert_genus(g, "three-point value");
        let mut ix = [a, b, c];
        ix.sort_unstable();
        if ix[0] == 0 {
            return self.three_point_with_zero(ix[1], ix[2], g);
        }
        self.ensure_e(g);
        self.cache
            .get(&TauWord::new(g, &ix))
            .cloned()
            .expect("three-point table populated for this genus")
    }

    /// The full symmetric table `{(a,b,c) sorted, a+b+c = 3g} -> value`.
    pub fn e_table(&mut self, g: u32) -> Vec<((u32, u32, u32), Rational)> {
        self.assert_genus(g, "three-point table");
        self.ensure_e(g);
        let mut out = Vec::new();
        for a in 0..=g * 3 {
            for b in a..=g * 3 {
                let rest = 3 * g as i64 - a as i64 - b as i64;
                if rest < b as i64 {
                    continue;
                }
                let c = rest as u32;
                out.push(((a, b, c), self.three_point(a, b, c, g)));
            }
        }
        out
    }

    fn ensure_e(&mut self, g: u32) {
        for genus in 0..=g {
            if !self.e_done[genus as usize] {
                self.solve_e_at(genus);
                self.e_done[genus as usize] = true;
            }
        }
    }

    fn ensure_e_boundary(&mut self) {
        if self.e_boundary_rhs.is_some() {
            return;
        }
        let ctx = xyz_context(self.max_genus);
        let one = |v: &str| Series::term(&ctx, &[(v, 1)], Rational::one());
        let (x, y, z) = (one("x"), one("y"), one("z"));
        let exp_x = exp_cube_in(&ctx, "x");
        let exp_y = exp_cube_in(&ctx, "y");
        let exp_z = exp_cube_in(&ctx, "z");
        let d_xy = d_series_in(&ctx, "x", "y");
        let d_xz = d_series_in(&ctx, "x", "z");
        let d_yz = d_series_in(&ctx, "y", "z");
        let two = Rational::integer(2);

        let y_plus_z = y.add(&z);
        let t1 = exp_x.mul(&y_plus_z.pow(2)).mul(&d_yz);
        let t2 = x.mul(&z).mul(&d_xy).mul(&exp_z);
        let t3 = x.mul(&y).mul(&d_xz).mul(&exp_y);
        let t5 = x.mul(&y_plus_z).mul(&exp_x).mul(&d_yz).scale(&two);
        let t6 = x.mul(&x.add(&y)).mul(&d_xy).mul(&exp_z).scale(&two);
        let t7 = x.mul(&x.add(&z)).mul(&d_xz).mul(&exp_y).scale(&two);

        let sum = t1.add(&t2).add(&t3).add(&t5).add(&t6).add(&t7);
        self.e_boundary_rhs = Some(sum);
    }

    /// Assemble the genus-`g` slice of `E = <t(x) t(y) t(z)>` as a series in
    /// the given `{x, y, z, h}` context, spreading each table value over the
    /// distinct permutations of its index triple.
    pub fn e_slice(&mut self, g: u32, ctx: &Context) -> Series {
        let mut terms: Vec<(crate::series::Monomial, Rational)> = Vec::new();
        for ((a, b, c), v) in self.e_table(g) {
            if v.is_zero() {
                continue;
            }
            let mut perms: Vec<[u32; 3]> = vec![
                [a, b, c],
                [a, c, b],
                [b, a, c],
                [b, c, a],
                [c, a, b],
                [c, b, a],
            ];
            perms.sort_unstable();
            perms.dedup();
            for [p, q, r] in perms {
                terms.push((
                    ctx.monomial(&[("x", p), ("y", q), ("z", r), ("h", g)]),
                    v.clone(),
                ));
            }
        }
        Series::from_terms(ctx, terms)
    }

    /// Assemble `E` through genus `through_genus` in the given context.
    pub fn e_series(&mut self, through_genus: u32, ctx: &Context) -> Series {
        let mut acc = Series::zero(ctx);
        for g in 0..=through_genus {
            acc = acc.add(&self.e_slice(g, ctx));
        }
        acc
    }

    /// Match every monomial `x^A y^B z^C h^g` with `A + B + C = 3g + 2` in the
    /// translated KdV equation for `E`, impose full symmetry on the unknowns,
    /// substitute boundary and lower-genus data, and solve exactly. The system
    /// is overdetermined; consistency and uniqueness are checked, not assumed.
    fn solve_e_at(&mut self, g: u32) {
        // Unknowns: sorted triples with all indices >= 1 summing to 3g.
        let mut unknown_index: BTreeMap<(u32, u32, u32), usize> = BTreeMap::new();
        for a in 1..=g * 3 {
            for b in a..=g * 3 {
                let rest = 3 * g as i64 - a as i64 - b as i64;
                if rest < b as i64 {
                    continue;
                }
                unknown_index.insert((a, b, rest as u32), unknown_index.len());
            }
        }
        if unknown_index.is_empty() {
            return;
        }

        self.ensure_e_boundary();
        let ctx = xyz_context(self.max_genus);

        // The h-shifted self-coupling term: (x+y+z)^4 x E h / 4 contributes
        // the genus-(g-1) slice of E to the genus-g equations.
        let t8_slice = {
            let prev = self.e_slice(g - 1, &ctx);
            let x = Series::term(&ctx, &[("x", 1)], Rational::one());
            let xyz = Series::term(&ctx, &[("x", 1)], Rational::one())
                .add(&Series::term(&ctx, &[("y", 1)], Rational::one()))
                .add(&Series::term(&ctx, &[("z", 1)], Rational::one()));
            xyz.pow(4)
                .mul(&x)
                .mul(&prev)
                .mul(&Series::term(&ctx, &[("h", 1)], Rational::one()))
                .scale(&Rational::new(1, 4))
        };

        // (x+y+z)^2 as exponent shifts with multinomial weights.
        let square_shifts: [([i64; 3], i64); 6] = [
            ([2, 0, 0], 1),
            ([0, 2, 0], 1),
            ([0, 0, 2], 1),
            ([1, 1, 0], 2),
            ([1, 0, 1], 2),
            ([0, 1, 1], 2),
        ];
        // x(x+y+z) as exponent shifts.
        let linear_shifts: [[i64; 3]; 3] = [[2, 0, 0], [1, 1, 0], [1, 0, 1]];

        let mut system = LinearSystem::new(unknown_index.len());
        let degree = 3 * g as i64 + 2;
        for big_a in 0..=degree {
            for big_b in 0..=(degree - big_a) {
                let big_c = degree - big_a - big_b;
                let mono = [big_a, big_b, big_c];

                let mut coeffs: Vec<(usize, Rational)> = Vec::new();
                let mut rhs = {
                    let boundary = self.e_boundary_rhs.as_ref().unwrap();
                    boundary.coefficient_at(&[
                        ("x", big_a as u32),
                        ("y", big_b as u32),
                        ("z", big_c as u32),
                        ("h", g),
                    ])
                } + t8_slice.coefficient_at(&[
                    ("x", big_a as u32),
                    ("y", big_b as u32),
                    ("z", big_c as u32),
                    ("h", g),
                ]);

                // Accumulate `coef * <t_p t_q t_r>` into the equation, moving
                // known (zero-index) values to the right-hand side.
                let accumulate =
                    |eng: &mut CorrelatorEngine,
                     coeffs: &mut Vec<(usize, Rational)>,
                     rhs: &mut Rational,
                     shifted: [i64; 3],
                     coef: Rational| {
                        if shifted.iter().any(|&e| e < 0) {
                            return;
                        }
                        let mut ix = [shifted[0] as u32, shifted[1] as u32, shifted[2] as u32];
                        ix.sort_unstable();
                        if ix[0] == 0 {
                            let known = eng.three_point_with_zero(ix[1], ix[2], g);
                            *rhs -= coef * known;
                        } else {
                            let col = unknown_index[&(ix[0], ix[1], ix[2])];
                            coeffs.push((col, coef));
                        }
                    };

                let euler = Rational::integer(2 * big_a + 1);
                for (shift, w) in &square_shifts {
                    let shifted = [mono[0] - shift[0], mono[1] - shift[1], mono[2] - shift[2]];
                    accumulate(
                        self,
                        &mut coeffs,
                        &mut rhs,
                        shifted,
                        &euler * &Rational::integer(*w),
                    );
                }
                for shift in &linear_shifts {
                    let shifted = [mono[0] - shift[0], mono[1] - shift[1], mono[2] - shift[2]];
                    accumulate(self, &mut coeffs, &mut rhs, shifted, Rational::integer(-1));
                }

                if let Err(SolveError::Inconsistent) = system.add_equation(coeffs, rhs) {
                    panic!(
                        "ode-inconsistent: the three-point equation at genus {g} \
                         contradicts itself at monomial x^{big_a} y^{big_b} z^{big_c}"
                    );
                }
            }
        }

        let solution = match system.solve_unique() {
            Ok(s) => s,
            Err(SolveError::Underdetermined { rank }) => panic!(
                "ode-underdetermined: the three-point equation at genus {g} \
                 fixes only {rank} of {} unknowns",
                unknown_index.len()
            ),
            Err(SolveError::Inconsistent) => unreachable!("detected during assembly"),
        };
        for ((a, b, c), col) in unknown_index {
            self.cache
                .insert(TauWord::new(g, &[a, b, c]), solution[col].clone());
        }
    }

    /// Dispatch on arity; memoized. Zero when the dimension constraint fails;
    /// panics with "unsupported arity" outside one to three insertions.
    pub fn correlator(&mut self, word: &TauWord) -> Rational {
        match word.arity() {
            1..=3 => {}
            n => panic!("unsupported arity: {n} insertions (supported: 1, 2, or 3)"),
        }
        if !word.dimension_ok() {
            return Rational::zero();
        }
        let ix = word.indices();
        match word.arity() {
            1 => self.one_point(word.genus()),
            2 => self.two_point(ix[0], ix[1], word.genus()),
            _ => self.three_point(ix[0], ix[1], ix[2], word.genus()),
        }
    }

    /// Evaluate a bracket written without a genus subscript: the dimension
    /// constraint picks the unique admissible genus, and brackets with no
    /// admissible genus — including any negative index — read as zero.
    pub fn evaluate_bracket(&mut self, indices: &[i64]) -> Rational {
        if indices.iter().any(|&d| d < 0) {
            return Rational::zero();
        }
        let n = indices.len() as i64;
        let sum: i64 = indices.iter().sum();
        let three_g = sum - n + 3;
        if three_g < 0 || three_g % 3 != 0 {
            return Rational::zero();
        }
        let ix: Vec<u32> = indices.iter().map(|&d| d as u32).collect();
        let word = TauWord::new((three_g / 3) as u32, &ix);
        self.correlator(&word)
    }

    /// Every word currently memoized. Used by the mutation self-tests.
    pub fn cached_words(&self) -> Vec<TauWord> {
        self.cache.keys().cloned().collect()
    }

    /// Testing hook: add 1 to a cached correlator so the verification suites
    /// can prove they would notice a wrong value. Panics if the word has not
    /// been computed yet.
    pub fn perturb(&mut self, word: &TauWord) {
        let v = self
            .cache
            .get_mut(word)
            .unwrap_or_else(|| panic!("perturb: {word} is not cached"));
        *v += Rational::one();
    }

    /// Testing hook: overwrite a cached correlator (used to restore a value
    /// after a mutation sweep). Panics if the word has not been computed yet.
    pub fn set_cached(&mut self, word: &TauWord, value: Rational) {
        let v = self
            .cache
            .get_mut(word)
            .unwrap_or_else(|| panic!("set_cached: {word} is not cached"));
        *v = value;
    }
}
