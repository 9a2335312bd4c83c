//! Exact scalar arithmetic and the sign analysis behind the polynomial
//! inequality used to bound the polynomial degree.
//!
//! Every scalar in the crate is a [`Rational`], a reduced fraction of
//! arbitrary-precision integers. Integers are the case `denominator == 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision exact rational. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds a rational from any integer value.
pub fn int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Builds `num / den`, reduced. Panics if `den` is zero.
pub fn frac<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn render(value: &Rational) -> String {
    value.to_string()
}

/// Parses the canonical text form (also accepts unreduced fractions, which
/// are normalised).
pub fn parse(text: &str) -> Result<Rational, Error> {
    let trimmed = text.trim();
    match trimmed.split_once('/') {
        Some((_, den)) if den.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') => {
            Err(Error::Parse(format!("zero denominator in {trimmed:?}")))
        }
        _ => Rational::from_str(trimmed).map_err(|_| Error::Parse(format!("not a rational: {trimmed:?}"))),
    }
}

/// `x^k` for a non-negative integer exponent.
pub fn pow(x: &Rational, k: u32) -> Rational {
    num_traits::pow(x.clone(), k as usize)
}

/// `Φ_N(x, y) = x^N + x^(N-1) y + ... + y^N`, the complete homogeneous sum of
/// degree `N` in two variables.
pub fn phi(degree: u32, x: &Rational, y: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut y_pow = Rational::one();
    for _ in 0..degree {
        y_pow *= y;
        acc = acc * x + &y_pow;
    }
    acc
}

/// [`phi`] over the integers.
pub fn phi_int(degree: u32, x: &BigInt, y: &BigInt) -> BigInt {
    let mut acc = BigInt::one();
    let mut y_pow = BigInt::one();
    for _ in 0..degree {
        y_pow *= y;
        acc = acc * x + &y_pow;
    }
    acc
}

/// A dense univariate polynomial; entry `i` is the coefficient of `x^i`.
/// Trailing zeros are allowed and preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientList(pub Vec<Rational>);

impl CoefficientList {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        CoefficientList(coefficients)
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coefficients: I) -> Self {
        CoefficientList(coefficients.into_iter().map(int).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CoefficientList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Number of sign changes in the nonzero coefficients, read in increasing
/// degree. Zeros are skipped.
pub fn descartes_sign_changes(poly: &CoefficientList) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for c in poly.coefficients().iter().filter(|c| !c.is_zero()) {
        let positive = c.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                changes += 1;
            }
        }
        last = Some(positive);
    }
    changes
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients of `P(x) = (x + 1)^N + 1 - Φ_N(x, 2)`, expanded exactly.
/// The list has length `N + 1`; the `x^N` entry is always zero.
pub fn phi_two_gap_coefficients(degree: u32) -> CoefficientList {
    let two = BigInt::from(2);
    let coefficients = (0..=degree)
        .map(|k| {
            // (x+1)^N contributes binom(N, k); Φ_N(x, 2) contributes 2^(N-k).
            let mut c = binomial(degree, k) - num_traits::pow(two.clone(), (degree - k) as usize);
            if k == 0 {
                c += 1;
            }
            Rational::from_integer(c)
        })
        .collect();
    CoefficientList(coefficients)
}

/// Direct evaluation of `P(x) = (x + 1)^N + 1 - Φ_N(x, 2)`.
pub fn phi_two_gap(degree: u32, x: &Rational) -> Rational {
    pow(&(x + Rational::one()), degree) + Rational::one() - phi(degree, x, &int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0, &int(17), &frac(-3, 4)), int(1));
        assert_eq!(phi(3, &frac(7, 2), &int(0)), pow(&frac(7, 2), 3));
        // 125 + 75 + 45 + 27
        assert_eq!(phi(3, &int(5), &int(3)), int(272));
        assert_eq!(phi_int(3, &BigInt::from(5), &BigInt::from(3)), BigInt::from(272));
        assert_eq!(phi_int(0, &BigInt::from(5), &BigInt::from(3)), BigInt::from(1));
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(descartes_sign_changes(&CoefficientList::from_integers([-1, 1])), 1);
        assert_eq!(descartes_sign_changes(&CoefficientList::from_integers([1, 0, 2])), 0);
        assert_eq!(descartes_sign_changes(&CoefficientList::from_integers([])), 0);
        assert_eq!(descartes_sign_changes(&CoefficientList::from_integers([0, 0])), 0);
        assert_eq!(descartes_sign_changes(&CoefficientList::from_integers([3, -1, 0, 0, 2, -5])), 3);
    }

    #[test]
    fn phi_two_gap_cubic() {
        // (x+1)^3 + 1 - (x^3 + 2x^2 + 4x + 8) = x^2 - x - 6
        let p = phi_two_gap_coefficients(3);
        assert_eq!(p, CoefficientList::from_integers([-6, -1, 1, 0]));
        assert_eq!(descartes_sign_changes(&p), 1);
        assert_eq!(phi_two_gap(3, &int(0)), int(-6));
        assert_eq!(phi_two_gap(3, &int(3)), int(0));
    }

    #[test]
    fn phi_two_gap_at_zero_closed_form() {
        for n in 1..20u32 {
            let expected = int(2) - pow(&int(2), n);
            assert_eq!(phi_two_gap(n, &int(0)), expected);
            assert_eq!(phi_two_gap_coefficients(n).coefficients()[0], expected);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("").is_err());
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(render(&frac(8232, 5)), "8232/5");
        assert_eq!(render(&frac(-10, 4)), "-5/2");
        assert_eq!(render(&frac(12, 4)), "3");
    }
}
