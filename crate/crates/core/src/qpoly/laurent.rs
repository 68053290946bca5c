use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{write_term, IntPolynomial, QPolyError};

/// Laurent polynomial `sum_i c_i q^(lowest + i)`. The first and last stored
/// coefficients are nonzero; zero is the empty sequence with `lowest == 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    lowest: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn new(lowest: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { lowest, coeffs };
        p.normalize();
        p
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        let (Some(&lo), Some(&hi)) = (acc.keys().next(), acc.keys().next_back()) else {
            return Self::default();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in acc {
            coeffs[(e - lo) as usize] = c;
        }
        LaurentPolynomial { lowest: lo, coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.lowest = if self.coeffs.is_empty() {
            0
        } else {
            self.lowest + lead as i64
        };
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Converts to an ordinary polynomial, failing on any negative exponent.
    pub fn into_polynomial(self) -> Result<IntPolynomial, QPolyError> {
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        if self.lowest < 0 {
            return Err(QPolyError::NegativeExponent {
                exponent: self.lowest,
            });
        }
        Ok(IntPolynomial::new(self.coeffs).shift(self.lowest as usize))
    }
}

impl From<IntPolynomial> for LaurentPolynomial {
    fn from(p: IntPolynomial) -> Self {
        LaurentPolynomial::new(0, p.coeffs().to_vec())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, self.lowest + i as i64, "q", first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let p = LaurentPolynomial::new(-3, vec![0.into(), 2.into(), 0.into(), 0.into()]);
        assert_eq!(p.lowest_exponent(), -2);
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(p.to_string(), "2q^-2");
        assert!(LaurentPolynomial::new(5, vec![0.into()]).is_zero());
    }

    #[test]
    fn polynomial_conversion() {
        let p = LaurentPolynomial::from_terms([(2, BigInt::from(1)), (0, BigInt::from(3))]);
        assert_eq!(
            p.into_polynomial().unwrap(),
            IntPolynomial::from_i64s(&[3, 0, 1])
        );
        let neg = LaurentPolynomial::from_terms([(-1, BigInt::from(1))]);
        assert_eq!(
            neg.into_polynomial(),
            Err(QPolyError::NegativeExponent { exponent: -1 })
        );
        // Cancelling terms leave nothing behind.
        let z = LaurentPolynomial::from_terms([(-1, BigInt::from(1)), (-1, BigInt::from(-1))]);
        assert!(z.is_zero());
    }
}
