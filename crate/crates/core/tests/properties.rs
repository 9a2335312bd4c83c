//! Invariants checked over randomized inputs and over exhaustive grids.

use std::collections::BTreeSet;

use morphcheck::bounds::{
    asymptotic_necessary, c_top_pullback_y, c_top_x, degree_f, hurwitz_check, max_poly_degree,
    relaxed_holds,
};
use morphcheck::chow::{twisted_top_chern, ChowClass, CompleteIntersectionSpec};
use morphcheck::feasibility::{
    classify_case, classify_m, generate_table, holding_set, CharProfile, MorphismCase, Overall, Status,
};
use morphcheck::numerics::{
    descartes_sign_changes, frac, int, parse, phi, phi_two_gap, phi_two_gap_coefficients, pow, render,
    Rational,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| frac(p, q))
}

/// Direct sum of the defining monomials, independent of the library's
/// recurrence.
fn phi_by_definition(degree: u32, x: &Rational, y: &Rational) -> Rational {
    (0..=degree).map(|j| pow(x, degree - j) * pow(y, j)).sum()
}

proptest! {
    #[test]
    fn phi_matches_definition(n in 0u32..12, x in small_rational(), y in small_rational()) {
        prop_assert_eq!(phi(n, &x, &y), phi_by_definition(n, &x, &y));
    }

    #[test]
    fn phi_recurrence(n in 1u32..16, x in small_rational(), y in small_rational()) {
        prop_assert_eq!(phi(n, &x, &y), &x * phi(n - 1, &x, &y) + pow(&y, n));
    }

    #[test]
    fn phi_symmetric(n in 0u32..16, x in small_rational(), y in small_rational()) {
        prop_assert_eq!(phi(n, &x, &y), phi(n, &y, &x));
    }

    #[test]
    fn phi_telescopes(n in 0u32..16, x in small_rational(), y in small_rational()) {
        prop_assume!(x != y);
        prop_assert_eq!((&x - &y) * phi(n, &x, &y), pow(&x, n + 1) - pow(&y, n + 1));
    }

    #[test]
    fn rational_text_round_trip(p in any::<i64>(), q in 1i64..i64::MAX) {
        let value = frac(p, q);
        let text = render(&value);
        prop_assert_eq!(parse(&text).unwrap(), value.clone());
        prop_assert_eq!(render(&parse(&text).unwrap()), text);
        prop_assert!(value.denom().is_positive());
    }

    #[test]
    fn gap_polynomial_expansion_agrees_with_evaluation(n in 1u32..40, x in small_rational()) {
        prop_assert_eq!(phi_two_gap_coefficients(n).evaluate(&x), phi_two_gap(n, &x));
    }
}

fn class_strategy() -> impl Strategy<Value = (CompleteIntersectionSpec, Vec<Rational>, Vec<Rational>, Vec<Rational>)> {
    (2u32..7, 1u32..6).prop_flat_map(|(n, d)| {
        let spec = CompleteIntersectionSpec::hypersurface(n, d).unwrap();
        let len = spec.dim() as usize + 1;
        (
            Just(spec),
            prop::collection::vec(small_rational(), len),
            prop::collection::vec(small_rational(), len),
            prop::collection::vec(small_rational(), len),
        )
    })
}

proptest! {
    #[test]
    fn ring_laws((spec, a, b, c) in class_strategy()) {
        let a = ChowClass::from_coefficients(&spec, a);
        let b = ChowClass::from_coefficients(&spec, b);
        let c = ChowClass::from_coefficients(&spec, c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ChowClass::one(&spec), a.clone());
    }

    #[test]
    fn series_inverse_is_two_sided((spec, a, _b, _c) in class_strategy()) {
        let a = ChowClass::from_coefficients(&spec, a);
        prop_assume!(!a.coefficient(0).is_zero());
        let inv = a.series_inverse().unwrap();
        prop_assert_eq!(&a * &inv, ChowClass::one(&spec));
        prop_assert_eq!(&inv * &a, ChowClass::one(&spec));
    }
}

#[test]
fn sign_change_argument_on_rational_grid() {
    for n in 3..=64u32 {
        let coeffs = phi_two_gap_coefficients(n);
        assert_eq!(descartes_sign_changes(&coeffs), 1, "N = {n}");
        assert!(phi_two_gap(n, &int(0)).is_negative());
        assert!(!phi_two_gap(n, &int(3)).is_negative());
        // One positive root below 3, so P stays non-negative from 3 on.
        for k in 0..=24 {
            let x = int(3) + frac(k, 4);
            assert!(!phi_two_gap(n, &x).is_negative(), "N = {n}, x = {x}");
        }
    }
}

#[test]
fn formula_equals_series_oracle() {
    for n in 4..=9 {
        for d in 1..=25 {
            let spec = CompleteIntersectionSpec::hypersurface(n, d).unwrap();
            for m in 1..=10 {
                assert_eq!(c_top_x(n, d, m), twisted_top_chern(&spec, 2 * i64::from(m)), "n={n} d={d} m={m}");
            }
        }
    }
}

#[test]
fn pullback_factors_through_target() {
    for n in 4..=9 {
        for e in 1..=25 {
            let target = twisted_top_chern(&CompleteIntersectionSpec::hypersurface(n, e).unwrap(), 2);
            for d in 1..=25 {
                for m in 1..=10 {
                    let expected = degree_f(n, d, e, m) * &target;
                    assert_eq!(c_top_pullback_y(n, d, e, m), expected);
                    assert_eq!(c_top_pullback_y(n, d, e, m), degree_f(n, d, e, m) * c_top_x(n, e, 1));
                }
            }
        }
    }
}

#[test]
fn identity_saturates() {
    for n in 4..=9 {
        for e in 3..=20 {
            let s = hurwitz_check(n, e, e, 1);
            assert!(s.holds);
            assert_eq!(s.lhs, s.rhs);
        }
    }
}

/// Consequences of the Hurwitz inequality on
/// `n = 4..6`, `d, e = 3..20`.
#[test]
fn hurwitz_consequences_on_grid() {
    for n in 4..=6 {
        for d in 3..=20 {
            for e in 3..=20 {
                let bound = max_poly_degree(n, d, e);
                for m in 1..=bound.relaxed_threshold {
                    if !hurwitz_check(n, d, e, m).holds {
                        continue;
                    }
                    assert!(relaxed_holds(n, d, e, m), "relaxed n={n} d={d} e={e} m={m}");
                    if e >= 5 {
                        assert!(d - 1 > m * (e - 2), "gap n={n} d={d} e={e} m={m}");
                    }
                    assert!(d >= e, "d >= e n={n} d={d} e={e} m={m}");
                    if d == e {
                        assert_eq!(m, 1, "d = e forces m = 1, n={n} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn search_is_complete() {
    for n in 4..=6 {
        for d in 1..=20 {
            for e in 3..=20 {
                let bound = max_poly_degree(n, d, e);
                assert!(bound.max_degree <= bound.relaxed_threshold);
                for m in bound.max_degree + 1..=4 * bound.max_degree + 4 {
                    assert!(!hurwitz_check(n, d, e, m).holds, "n={n} d={d} e={e} m={m}");
                }
                for m in bound.relaxed_threshold..bound.relaxed_threshold + 5 {
                    assert!(!relaxed_holds(n, d, e, m));
                }
            }
        }
    }
}

#[test]
fn small_m_rules_are_implied_in_char0() {
    for n in 4..=6 {
        for d in 1..=30 {
            for e in 3..=30 {
                let report = classify_case(n, d, e, CharProfile::CHAR0).unwrap();
                for v in report.verdicts.iter().filter(|v| v.status != Status::Excluded) {
                    if v.m == 1 {
                        assert_eq!(d, e, "n={n} d={d} e={e}");
                    }
                    if v.m == 2 {
                        assert_eq!(d, 2 * e, "n={n} d={d} e={e}");
                    }
                }
            }
        }
    }
}

#[test]
fn survivors_vanish_for_large_n() {
    const N: u32 = 17;
    for d in 1..=20 {
        for e in 4..=20 {
            for m in 1..=10 {
                let residual = i64::from(e * m) - i64::from(d);
                if asymptotic_necessary(d, e, m) || residual < i64::from(e) {
                    continue;
                }
                for n in N..=32 {
                    let v = classify_m(&MorphismCase::new(n, d, e, m, CharProfile::CHAR0).unwrap());
                    assert_ne!(v.status, Status::Survives, "n={n} d={d} e={e} m={m}");
                }
            }
        }
    }
}

#[test]
fn strict_rules_never_lose_rows() {
    for n in 4..=5 {
        for e in 3..=7 {
            for base in [CharProfile::CHAR0, CharProfile::POS_CHAR] {
                let loose = holding_set(&generate_table(n, e, 30, base).unwrap());
                let strict = holding_set(&generate_table(n, e, 30, base.strict()).unwrap());
                assert!(loose.is_subset(&strict), "n={n} e={e} {base}");
            }
        }
    }
}

#[test]
fn verdicts_are_total_and_replayable() {
    for n in 4..=6 {
        for d in 1..=20 {
            for e in 3..=12 {
                for profile in [
                    CharProfile::CHAR0,
                    CharProfile::POS_CHAR,
                    CharProfile::CHAR0.strict(),
                    CharProfile::POS_CHAR.strict(),
                ] {
                    let report = classify_case(n, d, e, profile).unwrap();
                    let ms: Vec<u32> = report.verdicts.iter().map(|v| v.m).collect();
                    assert_eq!(ms, (1..=report.max_degree).collect::<Vec<_>>());
                    for v in &report.verdicts {
                        assert_eq!(v.replay(), v.status);
                        assert_eq!(v.rules.len(), profile.rules().len());
                        let forced = v.status == Status::ExtensionForced;
                        assert_eq!(forced, v.status != Status::Excluded && e * v.m == d);
                    }
                    assert_eq!(Overall::from_verdicts(&report.verdicts), report.overall);
                    let diag_ms: BTreeSet<u32> = report.diagnostics.iter().map(|g| g.m).collect();
                    let open_ms: BTreeSet<u32> =
                        report.verdicts.iter().filter(|v| v.status != Status::Excluded).map(|v| v.m).collect();
                    assert_eq!(diag_ms, open_ms);
                }
            }
        }
    }
}
