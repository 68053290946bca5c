use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CyclotomicResidue, LaurentPolynomial};

/// Sparse polynomial in `q` and `t`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, BigInt::one());
        p
    }

    /// Builds from `(q_exp, t_exp, coeff)` triples.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, i64)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    /// Adds `c q^i t^j`.
    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `t = q^-1`; the term `q^i t^j` becomes `q^(i-j)`.
    pub fn subst_t_q_inverse(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| (i as i64 - j as i64, c.clone())),
        )
    }

    /// `F(omega^a, omega^b)` for a primitive `order`-th root `omega`, as an
    /// element of the cyclotomic residue ring.
    pub fn eval_at_roots(&self, order: u64, a: u64, b: u64) -> CyclotomicResidue {
        CyclotomicResidue::from_exponents(
            self.terms.iter().map(|(&(i, j), c)| {
                let e = (a % order) * (i as u64 % order) + (b % order) * (j as u64 % order);
                (e % order, c)
            }),
            order,
        )
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if !mag.is_one() || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
            }
            for (var, e) in [("q", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    e => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::IntPolynomial;

    #[test]
    fn substitution_examples() {
        let f = BivariatePolynomial::from_terms([(2, 2, 1), (1, 1, 1)]);
        assert_eq!(
            f.subst_t_q_inverse().into_polynomial().unwrap(),
            IntPolynomial::constant(2)
        );
        let g = BivariatePolynomial::from_terms([(3, 1, 1)]);
        assert_eq!(
            g.subst_t_q_inverse().into_polynomial().unwrap(),
            IntPolynomial::monomial(1, 2)
        );
        assert_eq!(
            BivariatePolynomial::one().subst_t_q_inverse().into_polynomial().unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut f = BivariatePolynomial::from_terms([(1, 0, 2)]);
        f.add_term(1, 0, BigInt::from(-2));
        assert!(f.is_zero());
    }

    #[test]
    fn display_and_root_evaluation() {
        let f = BivariatePolynomial::from_terms([(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(f.to_string(), "1+qt+q^2t^2");
        assert_eq!(f.eval_at_roots(3, 1, 1).as_integer(), Some(BigInt::zero()));
        assert_eq!(f.eval_at_roots(3, 1, 2).as_integer(), Some(BigInt::from(3)));
    }
}
