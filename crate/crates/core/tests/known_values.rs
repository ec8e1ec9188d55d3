//! Frozen expected values, re-derived by the brute-force oracles before
//! being compared against the engine. A literal only appears here after the
//! oracle in `common/` reproduced it.

mod common;

use common::{eq5_rhs, eq6_coeff, one_point_oracle, to_core, two_point_oracle};
use tautring_core::correlators::{d_series, CorrelatorEngine};
use tautring_core::Rational;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn one_point_spot_values() {
    let mut eng = CorrelatorEngine::new(3);
    for (g, frozen) in [(1, r(1, 24)), (2, r(1, 1152)), (3, r(1, 82944))] {
        assert_eq!(to_core(&one_point_oracle(g)), frozen, "oracle at g={g}");
        assert_eq!(eng.one_point(g), frozen, "engine at g={g}");
    }
}

#[test]
fn two_point_spot_values() {
    let mut eng = CorrelatorEngine::new(2);

    let frozen_11 = r(1, 24);
    assert_eq!(to_core(&two_point_oracle(1, 1, 1)), frozen_11);
    assert_eq!(eng.two_point(1, 1, 1), frozen_11);

    let frozen_23 = r(29, 5760);
    assert_eq!(to_core(&two_point_oracle(2, 3, 2)), frozen_23);
    assert_eq!(eng.two_point(2, 3, 2), frozen_23);
}

#[test]
fn three_point_with_zero_spot_values() {
    let mut eng = CorrelatorEngine::new(2);

    let frozen = r(11, 1440);
    assert_eq!(to_core(&eq6_coeff(4, 2, 2)), frozen);
    assert_eq!(eng.three_point_with_zero(4, 2, 2), frozen);

    // The genus-1 closed-form slice.
    assert_eq!(to_core(&eq6_coeff(3, 0, 1)), r(1, 24));
    assert_eq!(to_core(&eq6_coeff(2, 1, 1)), r(1, 12));
    assert_eq!(eng.three_point_with_zero(2, 1, 1), r(1, 12));
}

#[test]
fn triple_ones_from_alternating_sum() {
    // The alternating genus-1 sum <t_2 t_0 t_1> - <t_1 t_1 t_1> + <t_0 t_2 t_1>
    // equals 2!/(2^0 4!) = 1/12, so <t_1 t_1 t_1>_1 = 2*eq6(2,1,1) - 1/12.
    let derived = to_core(&(eq6_coeff(2, 1, 1) + eq6_coeff(2, 1, 1) - eq5_rhs(2)));
    let frozen = r(1, 12);
    assert_eq!(derived, frozen);

    let mut eng = CorrelatorEngine::new(1);
    assert_eq!(eng.three_point(1, 1, 1, 1), frozen);
}

#[test]
fn d_series_agrees_with_oracle_everywhere() {
    let d = d_series(4);
    let mut eng = CorrelatorEngine::new(4);
    for g in 0..=4u32 {
        for a in 0..=3 * g {
            let b = 3 * g - a;
            let oracle = to_core(&eq6_coeff(a, b, g));
            assert_eq!(
                d.coefficient_at(&[("w", a), ("z", b), ("h", g)]),
                oracle,
                "coefficient ({a},{b},{g})"
            );
            assert_eq!(eng.three_point_with_zero(a, b, g), oracle);
        }
    }
}

#[test]
fn two_point_table_agrees_with_oracle() {
    let mut eng = CorrelatorEngine::new(4);
    for g in 1..=4u32 {
        for a in 0..3 * g {
            let b = 3 * g - 1 - a;
            assert_eq!(
                eng.two_point(a, b, g),
                to_core(&two_point_oracle(a, b, g)),
                "two-point ({a},{b})_{g}"
            );
        }
    }
}

#[test]
fn f_consistency_through_genus_six() {
    let mut eng = CorrelatorEngine::new(6);
    for g in 0..=6 {
        let rep = tautring_core::identities::verify_f_consistency(&mut eng, g);
        assert!(rep.passed, "{rep:?}");
    }
}

#[test]
fn genus_two_three_point_table_matches_literature() {
    // Classical reference values; none of them enters the solver as input.
    let mut eng = CorrelatorEngine::new(2);
    assert_eq!(eng.three_point(2, 2, 2, 2), r(7, 240));
    assert_eq!(eng.three_point(1, 2, 3, 2), r(29, 1440));
    assert_eq!(eng.three_point(1, 1, 4, 2), r(1, 96));
}

#[test]
fn dilaton_scaling_emerges_from_the_solve() {
    // <t_1 t_a t_b>_g = 2g <t_a t_b>_g is never used in construction; the
    // linear solve must reproduce it on its own.
    let mut eng = CorrelatorEngine::new(6);
    for g in 1..=6u32 {
        for a in 1..3 * g {
            let b = 3 * g - 1 - a;
            let three = eng.three_point(1, a, b, g);
            let two = eng.two_point(a, b, g);
            assert_eq!(
                three,
                Rational::integer(2 * g as i64) * two,
                "dilaton scaling at ({a},{b})_{g}"
            );
        }
    }
}
