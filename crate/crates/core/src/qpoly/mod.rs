//! Exact integer polynomial arithmetic in `q`, the q-analogue constructors, and
//! evaluation at roots of unity by reduction modulo cyclotomic polynomials.

mod analogues;
mod bivariate;
mod cyclotomic;
mod laurent;

pub use analogues::{
    eulerian_poly, face_poly, gaussian_binomial, plethysm_e, plethysm_h, q_catalan, q_factorial,
    q_fuss_catalan_a, q_int, root_of_unity_binomial, subst_t_q_inverse,
};
pub use bivariate::BivariatePolynomial;
pub use cyclotomic::{cyclotomic, eval_at_root, CyclotomicResidue};
pub use laurent::LaurentPolynomial;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: {dividend} is not a multiple of {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("value at a primitive {order}-th root of unity is not an integer (residue {residue})")]
    NonIntegerEvaluation { order: u64, residue: IntPolynomial },
    #[error("negative exponent q^{exponent} after substitution")]
    NegativeExponent { exponent: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Dense polynomial with arbitrary-precision integer coefficients; index `i`
/// holds the coefficient of `q^i`. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * q^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `f(q^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        let mut coeffs = vec![BigInt::zero(); self.degree().map_or(0, |d| d * k + 1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division in `Z[q]`. Fails with `InexactDivision` as soon as a
    /// quotient coefficient would leave the integers.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), QPolyError> {
        let lead = divisor.leading().ok_or(QPolyError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        let monic = lead.is_one();
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = if monic {
                top.clone()
            } else {
                let (c, r) = top.div_rem(lead);
                if !r.is_zero() {
                    return Err(self.inexact(divisor));
                }
                c
            };
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `h` with `self = divisor * h`, or `InexactDivision`.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, QPolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(self.inexact(divisor))
        }
    }

    fn inexact(&self, divisor: &Self) -> QPolyError {
        QPolyError::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        }
    }

    /// Residue modulo `1 - q^n`: `a_i` is the sum of the coefficients whose
    /// exponent is congruent to `i` mod `n`.
    pub fn fold_mod(&self, n: usize) -> Vec<BigInt> {
        assert!(n >= 1, "fold_mod needs n >= 1");
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % n] += c;
        }
        out
    }

    /// Adds one to the coefficient of `q^i`.
    pub fn bump_coeff(&self, i: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() <= i {
            coeffs.resize(i + 1, BigInt::zero());
        }
        coeffs[i] += 1;
        Self::new(coeffs)
    }
}

/// Residue of `f` modulo `1 - q^n`.
pub fn fold_mod_qn(f: &IntPolynomial, n: usize) -> Vec<BigInt> {
    f.fold_mod(n)
}

/// Exact quotient `f / g` in `Z[q]`.
pub fn exact_divide(f: &IntPolynomial, g: &IntPolynomial) -> Result<IntPolynomial, QPolyError> {
    f.exact_divide(g)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, i as i64, "q", first)?;
            first = false;
        }
        Ok(())
    }
}

/// Writes `c*var^exp` in compact form (`2q^3`, `-q`, `+1`).
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &BigInt,
    exp: i64,
    var: &str,
    first: bool,
) -> fmt::Result {
    if c.is_negative() {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let mag = c.abs();
    if exp == 0 {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}")?;
    }
    match exp {
        1 => f.write_str(var),
        e => write!(f, "{var}^{e}"),
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1, 2, 1, 1]).to_string(), "1+q+2q^2+q^3+q^4");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q+3q^3");
        assert_eq!(p(&[-2]).to_string(), "-2");
    }

    #[test]
    fn exact_division_by_hand() {
        let f = p(&[1, 1, 2, 1, 1]);
        assert_eq!(f.exact_divide(&p(&[1, 1, 1])).unwrap(), p(&[1, 0, 1]));
        assert_eq!(f.exact_divide(&IntPolynomial::one()).unwrap(), f);
        assert!(matches!(
            p(&[1, 1]).exact_divide(&p(&[1, 0, 1])),
            Err(QPolyError::InexactDivision { .. })
        ));
        assert!(matches!(
            f.exact_divide(&IntPolynomial::zero()),
            Err(QPolyError::DivisionByZero)
        ));
    }

    #[test]
    fn non_monic_division() {
        // (2 + 4q)(1 + q) = 2 + 6q + 4q^2
        let f = p(&[2, 6, 4]);
        assert_eq!(f.exact_divide(&p(&[2, 4])).unwrap(), p(&[1, 1]));
        assert!(p(&[1, 3]).exact_divide(&p(&[0, 2])).is_err());
    }

    #[test]
    fn folding() {
        assert_eq!(
            p(&[1, 1, 2, 1, 1]).fold_mod(3),
            vec![BigInt::from(2); 3]
        );
        assert_eq!(
            IntPolynomial::zero().fold_mod(4),
            vec![BigInt::zero(); 4]
        );
        assert_eq!(
            IntPolynomial::monomial(1, 5).fold_mod(3),
            vec![BigInt::zero(), BigInt::zero(), BigInt::one()]
        );
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.substitute_power(2), p(&[1, 0, 1]));
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(a.bump_coeff(3), p(&[1, 1, 0, 1]));
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }
}
