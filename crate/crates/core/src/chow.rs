//! Truncated Chow-ring arithmetic on a complete intersection `X ⊂ Pⁿ`.
//!
//! Only classes pulled back from the ambient projective space are needed, so
//! the ring is `Q[h] / (h^(dim X + 1))` where `h` is the hyperplane class.
//! The degree map sends `h^(dim X)` to the degree of `X`, the product of the
//! multidegree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{require, Error, Result};
use crate::numerics::{int, pow, Rational};

/// A complete intersection in `Pⁿ` described by its ambient dimension and
/// the degrees of its defining equations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionSpec {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersectionSpec {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self> {
        require(n >= 2, || format!("ambient dimension n must be >= 2, got {n}"))?;
        require(!degrees.is_empty(), || "at least one defining degree is required".into())?;
        require((degrees.len() as u32) < n, || {
            format!("codimension {} must be < n = {n}", degrees.len())
        })?;
        require(degrees.iter().all(|&a| a >= 1), || {
            "every defining degree must be >= 1".into()
        })?;
        Ok(CompleteIntersectionSpec { n, degrees })
    }

    /// A hypersurface of degree `d` in `Pⁿ`.
    pub fn hypersurface(n: u32, d: u32) -> Result<Self> {
        Self::new(n, vec![d])
    }

    pub fn ambient_dim(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn dim(&self) -> u32 {
        self.n - self.codim()
    }

    /// Degree of `X`, the value of `h^(dim X)` under the degree map.
    pub fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&a| BigInt::from(a)).product()
    }
}

impl fmt::Display for CompleteIntersectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X(")?;
        for (i, a) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ") in P^{}", self.n)
    }
}

/// A class `sum_i c_i h^i` in the truncated Chow ring of a complete
/// intersection. Dense storage, length exactly `dim X + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    spec: CompleteIntersectionSpec,
    coefficients: Vec<Rational>,
}

impl ChowClass {
    pub fn zero(spec: &CompleteIntersectionSpec) -> Self {
        ChowClass {
            spec: spec.clone(),
            coefficients: vec![Rational::zero(); spec.dim() as usize + 1],
        }
    }

    pub fn one(spec: &CompleteIntersectionSpec) -> Self {
        Self::constant(spec, Rational::one())
    }

    pub fn constant(spec: &CompleteIntersectionSpec, value: Rational) -> Self {
        let mut class = Self::zero(spec);
        class.coefficients[0] = value;
        class
    }

    /// `coefficient · h^power`; vanishes when `power > dim X`.
    pub fn monomial(spec: &CompleteIntersectionSpec, coefficient: Rational, power: u32) -> Self {
        let mut class = Self::zero(spec);
        if let Some(slot) = class.coefficients.get_mut(power as usize) {
            *slot = coefficient;
        }
        class
    }

    pub fn hyperplane(spec: &CompleteIntersectionSpec) -> Self {
        Self::monomial(spec, Rational::one(), 1)
    }

    /// Builds a class from `coefficients`; entries past `h^(dim X)` are
    /// dropped and missing entries are zero.
    pub fn from_coefficients(spec: &CompleteIntersectionSpec, coefficients: Vec<Rational>) -> Self {
        let mut class = Self::zero(spec);
        for (slot, c) in class.coefficients.iter_mut().zip(coefficients) {
            *slot = c;
        }
        class
    }

    /// `1 + a·h` for an integer `a`.
    pub fn linear(spec: &CompleteIntersectionSpec, a: impl Into<BigInt>) -> Self {
        Self::from_coefficients(spec, vec![Rational::one(), int(a)])
    }

    pub fn spec(&self) -> &CompleteIntersectionSpec {
        &self.spec
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Rational {
        &self.coefficients[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        ChowClass {
            spec: self.spec.clone(),
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn checked_mul(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let len = self.coefficients.len();
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..len - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(ChowClass {
            spec: self.spec.clone(),
            coefficients: out,
        })
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<ChowClass> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(ChowClass {
            spec: self.spec.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        (0..k).fold(ChowClass::one(&self.spec), |acc, _| &acc * self)
    }

    /// Multiplicative inverse in the truncated ring. Fails when the constant
    /// term is zero.
    pub fn series_inverse(&self) -> Result<ChowClass> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let len = self.coefficients.len();
        let mut inv: Vec<Rational> = Vec::with_capacity(len);
        inv.push(c0.recip());
        for k in 1..len {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coefficients[j] * &inv[k - j];
            }
            inv.push(-acc / c0);
        }
        Ok(ChowClass {
            spec: self.spec.clone(),
            coefficients: inv,
        })
    }

    /// The degree map: top coefficient times `deg X`. Lower-degree parts
    /// are ignored.
    pub fn degree(&self) -> Rational {
        let top = self.coefficients.last().expect("class is never empty");
        top * Rational::from_integer(self.spec.degree())
    }
}

impl Mul<&ChowClass> for &ChowClass {
    type Output = ChowClass;

    /// Panics if the operands live on different complete intersections.
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.checked_mul(rhs).expect("multiplying classes on different varieties")
    }
}

impl Add<&ChowClass> for &ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.checked_add(rhs).expect("adding classes on different varieties")
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        self.scale(&-Rational::one())
    }
}

impl Sub<&ChowClass> for &ChowClass {
    type Output = ChowClass;

    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*h")?,
                _ => write!(f, "{c}*h^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Degree of a class; see [`ChowClass::degree`].
pub fn chow_degree(class: &ChowClass) -> Rational {
    class.degree()
}

/// Total Chern class of the cotangent sheaf, `(1 - h)^(n+1) / prod_i (1 - a_i h)`,
/// from the Euler sequence and the conormal sequence of `X ⊂ Pⁿ`.
pub fn cotangent_total_chern(spec: &CompleteIntersectionSpec) -> ChowClass {
    let euler = ChowClass::linear(spec, -1).pow(spec.ambient_dim() + 1);
    spec.degrees().iter().fold(euler, |acc, &a| {
        let conormal = ChowClass::linear(spec, -BigInt::from(a));
        let inverse = conormal
            .series_inverse()
            .expect("1 - a*h always has unit constant term");
        &acc * &inverse
    })
}

/// Degree of `c_top(Ω¹_X(t))`. Twisting a rank-`r` sheaf by a line bundle with
/// first Chern class `t·h` gives `c_r = sum_i c_i · (t h)^(r - i)`.
pub fn twisted_top_chern(spec: &CompleteIntersectionSpec, t: i64) -> Rational {
    let total = cotangent_total_chern(spec);
    let rank = spec.dim();
    let twist = ChowClass::monomial(spec, int(t), 1);
    let mut top = ChowClass::zero(spec);
    for i in 0..=rank {
        let c_i = ChowClass::monomial(spec, total.coefficient(i as usize).clone(), i);
        top = &top + &(&c_i * &twist.pow(rank - i));
    }
    top.degree()
}

/// `sum_{j=0}^{i} (-1)^j binom(n+1, j) d^(i-j)`, the closed form of the `i`-th
/// cotangent Chern coefficient of a degree-`d` hypersurface.
pub fn hypersurface_chern_coefficient(n: u32, d: u32, i: u32) -> Rational {
    let mut acc = Rational::zero();
    let mut binom = BigInt::one();
    for j in 0..=i {
        let term = Rational::from_integer(binom.clone()) * pow(&int(d), i - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
    }
    acc
}
