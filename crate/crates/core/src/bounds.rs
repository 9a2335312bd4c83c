//! Closed forms for the two sides of the Hurwitz-type inequality on a
//! morphism `f: X_d -> Y_e` of hypersurfaces in `Pⁿ` with polynomial degree
//! `m`, the weaker necessary condition derived from it, and the certified
//! search for the largest admissible `m`.
//!
//! Left side: `deg c_{n-1}(Ω¹_X(2m))`. Right side: `deg f^* c_{n-1}(Ω¹_Y(2))`.
//! A morphism can only exist when left >= right.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{require, Result};
use crate::numerics::{frac, int, phi_int, pow, render, Rational};

/// `(-1)^(n+1)`
fn sign(n: u32) -> BigInt {
    if n % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn assert_positive(name: &str, v: u32) {
    assert!(v >= 1, "{name} must be >= 1, got {v}");
}

/// Validates the standing hypotheses `n >= 4, d >= 1, e >= 3, m >= 1`.
pub fn check_morphism_params(n: u32, d: u32, e: u32, m: u32) -> Result<()> {
    check_pair_params(n, d, e)?;
    require(m >= 1, || format!("polynomial degree m must be >= 1, got {m}"))
}

/// Validates `n >= 4, d >= 1, e >= 3`.
pub fn check_pair_params(n: u32, d: u32, e: u32) -> Result<()> {
    require(n >= 4, || format!("n must be >= 4, got {n}"))?;
    require(d >= 1, || format!("d must be >= 1, got {d}"))?;
    require(e >= 3, || format!("e must be >= 3, got {e}"))
}

/// `deg c_{n-1}(Ω¹_X(2m))` for a degree-`d` hypersurface `X ⊂ Pⁿ`:
///
/// `[d(2m-1) Φ_{n-1}(2m-1, d-1) + (d-1)^n + (-1)^(n+1)] / (2m)`
///
/// # Panics
/// If `n < 2`, `d == 0` or `m == 0`.
pub fn c_top_x(n: u32, d: u32, m: u32) -> Rational {
    assert!(n >= 2, "n must be >= 2, got {n}");
    assert_positive("d", d);
    assert_positive("m", m);
    let x = BigInt::from(2 * u64::from(m) - 1);
    let y = BigInt::from(d) - 1;
    let numerator = BigInt::from(d) * &x * phi_int(n - 1, &x, &y) + num_traits::pow(y, n as usize) + sign(n);
    Rational::new(numerator, BigInt::from(2 * u64::from(m)))
}

/// `deg f = d·m^(n-1)/e`, without any integrality check.
pub fn degree_f(n: u32, d: u32, e: u32, m: u32) -> Rational {
    assert!(n >= 2, "n must be >= 2, got {n}");
    assert_positive("d", d);
    assert_positive("e", e);
    assert_positive("m", m);
    int(d) * pow(&int(m), n - 1) / int(e)
}

/// `deg f^* c_{n-1}(Ω¹_Y(2))`:
///
/// `(d·m^(n-1)/e) · [e Φ_{n-1}(1, e-1) + (e-1)^n + (-1)^(n+1)] / 2`
pub fn c_top_pullback_y(n: u32, d: u32, e: u32, m: u32) -> Rational {
    let y = BigInt::from(e) - 1;
    let bracket = BigInt::from(e) * phi_int(n - 1, &BigInt::one(), &y) + num_traits::pow(y, n as usize) + sign(n);
    degree_f(n, d, e, m) * Rational::new(bracket, BigInt::from(2))
}

/// Both sides of the Hurwitz-type inequality and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzSides {
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

/// Evaluates `c_top_x(n, d, m) >= c_top_pullback_y(n, d, e, m)`. A failure
/// rules out every separable morphism `X_d -> Y_e` of polynomial degree `m`.
///
/// # Panics
/// If `n < 4`, `d == 0`, `e < 3` or `m == 0`.
pub fn hurwitz_check(n: u32, d: u32, e: u32, m: u32) -> HurwitzSides {
    check_morphism_params(n, d, e, m).unwrap_or_else(|err| panic!("{err}"));
    let lhs = c_top_x(n, d, m);
    let rhs = c_top_pullback_y(n, d, e, m);
    let holds = lhs >= rhs;
    HurwitzSides { lhs, rhs, holds }
}

/// Both sides of `Φ_{n-1}((d-1)/m, 2) > (e-1)^(n-1) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelaxedSides {
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
}

pub fn relaxed_sides(n: u32, d: u32, e: u32, m: u32) -> RelaxedSides {
    check_morphism_params(n, d, e, m).unwrap_or_else(|err| panic!("{err}"));
    // m^(n-1) Φ_{n-1}((d-1)/m, 2) = Φ_{n-1}(d-1, 2m)
    let scaled = phi_int(n - 1, &(BigInt::from(d) - 1), &BigInt::from(2 * u64::from(m)));
    let lhs = Rational::new(scaled, num_traits::pow(BigInt::from(m), (n - 1) as usize));
    let rhs = pow(&(int(e) - int(1)), n - 1) + int(1);
    let holds = lhs > rhs;
    RelaxedSides { lhs, rhs, holds }
}

/// The strict relaxed inequality. It is implied by [`hurwitz_check`], and
/// its left side is non-increasing in `m`, so once it fails it fails for
/// every larger `m`.
pub fn relaxed_holds(n: u32, d: u32, e: u32, m: u32) -> bool {
    relaxed_sides(n, d, e, m).holds
}

/// Result of [`max_poly_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolyDegreeBound {
    /// Largest `m` passing the Hurwitz check, 0 if none does.
    pub max_degree: u32,
    /// First `m` at which the relaxed inequality fails. Every `m` at or
    /// above it fails Hurwitz, so the scan below it is exhaustive.
    pub relaxed_threshold: u32,
}

/// Scans `m = 1, 2, ...` until the relaxed inequality fails, recording the
/// largest `m` for which the Hurwitz inequality holds.
///
/// Terminates for `e >= 3`: the relaxed left side tends to `2^(n-1)` while
/// the right side is at least `2^(n-1) + 1`.
pub fn max_poly_degree(n: u32, d: u32, e: u32) -> PolyDegreeBound {
    check_pair_params(n, d, e).unwrap_or_else(|err| panic!("{err}"));
    let mut max_degree = 0;
    let mut m = 1;
    loop {
        if hurwitz_check(n, d, e, m).holds {
            max_degree = m;
        }
        if !relaxed_holds(n, d, e, m) {
            return PolyDegreeBound {
                max_degree,
                relaxed_threshold: m,
            };
        }
        m += 1;
    }
}

/// `d - 1 >= m(e - 1)`, the large-`n` limit of the Hurwitz inequality.
pub fn asymptotic_necessary(d: u32, e: u32, m: u32) -> bool {
    u64::from(d) > u64::from(m) * (u64::from(e) - 1)
}

/// `α = (em - d)·m^(n-2) / e`. Above this characteristic the residual
/// divisor argument still applies to separable morphisms.
pub fn separability_threshold(n: u32, d: u32, e: u32, m: u32) -> Result<Rational> {
    check_morphism_params(n, d, e, m)?;
    let em = u64::from(e) * u64::from(m);
    require(em >= u64::from(d), || {
        format!("separability threshold needs em >= d, got em = {em} < d = {d}")
    })?;
    Ok(frac(em - u64::from(d), e) * pow(&int(m), n - 2))
}

pub(crate) fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn c_top_x_examples() {
        assert_eq!(c_top_x(4, 4, 3), int(920));
        assert_eq!(c_top_x(4, 1, 1), int(0));
        assert_eq!(c_top_x(4, 3, 1), int(30));
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(c_top_pullback_y(4, 4, 3, 3), int(1080));
        assert_eq!(c_top_pullback_y(4, 14, 5, 4), int(60928));
        for e in 1..30 {
            assert_eq!(c_top_pullback_y(4, e, e, 1), c_top_x(4, e, 1));
        }
    }

    #[test]
    fn degree_f_examples() {
        assert_eq!(degree_f(4, 3, 3, 1), int(1));
        assert_eq!(degree_f(4, 4, 3, 3), int(36));
        assert_eq!(degree_f(4, 24, 5, 7), frac(8232, 5));
    }

    #[test]
    fn hurwitz_examples() {
        let s = hurwitz_check(4, 4, 3, 3);
        assert_eq!((s.lhs, s.rhs, s.holds), (int(920), int(1080), false));
        let s = hurwitz_check(4, 5, 3, 3);
        assert_eq!((s.lhs, s.rhs, s.holds), (int(1580), int(1350), true));
        for e in 3..15 {
            let s = hurwitz_check(4, e, e, 1);
            assert!(s.holds);
            assert_eq!(s.lhs, s.rhs);
        }
    }

    #[test]
    #[should_panic(expected = "e must be >= 3")]
    fn hurwitz_rejects_quadric_target() {
        hurwitz_check(4, 4, 2, 1);
    }

    #[test]
    fn relaxed_examples() {
        let r = relaxed_sides(4, 4, 3, 3);
        assert_eq!((r.lhs, r.rhs), (int(15), int(9)));
        assert!(r.holds);
        // The left side approaches 2^(n-1) = 8 from above; 8 < 2^3 + 1.
        assert!(!relaxed_holds(4, 4, 3, 1000));
        assert!(!relaxed_holds(4, 1, 3, 1));
    }

    #[test]
    fn max_degree_examples() {
        let b = max_poly_degree(4, 3, 3);
        assert_eq!(b.max_degree, 1);
        assert!(b.relaxed_threshold >= 1);
        assert_eq!(max_poly_degree(4, 1, 5).max_degree, 0);
        let b = max_poly_degree(4, 24, 5);
        assert!(b.max_degree >= 7);
        assert!(b.max_degree <= b.relaxed_threshold);
        assert_eq!(hurwitz_check(4, 24, 5, 7).lhs, int(579_984));
        assert_eq!(hurwitz_check(4, 24, 5, 7).rhs, int(559_776));
    }

    #[test]
    fn asymptotic_examples() {
        for e in 1..10 {
            assert!(asymptotic_necessary(e, e, 1));
            assert!(asymptotic_necessary(2 * e, e, 2));
        }
        assert!(!asymptotic_necessary(24, 5, 7));
    }

    #[test]
    fn separability_examples() {
        assert_eq!(separability_threshold(4, 15, 5, 3).unwrap(), int(0));
        assert_eq!(separability_threshold(4, 4, 3, 3).unwrap(), int(15));
        assert_eq!(separability_threshold(4, 24, 5, 7).unwrap(), frac(539, 5));
        assert!(matches!(separability_threshold(4, 10, 3, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn param_checks_name_the_violation() {
        let msg = check_morphism_params(3, 1, 3, 1).unwrap_err().to_string();
        assert!(msg.contains("n must be >= 4"), "{msg}");
        let msg = check_morphism_params(4, 1, 3, 0).unwrap_err().to_string();
        assert!(msg.contains("m must be >= 1"), "{msg}");
    }
}
