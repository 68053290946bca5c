use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPolynomial, QPolyError};
use crate::numbers::divisors;

/// The `d`-th cyclotomic polynomial, obtained by dividing `q^d - 1` by every
/// `Phi_e` with `e` a proper divisor of `d`. Results are memoized.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic polynomial index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&d) {
        return p.clone();
    }
    let mut acc = &IntPolynomial::monomial(1, d as usize) - &IntPolynomial::one();
    for e in divisors(d) {
        if e == d {
            break;
        }
        acc = acc
            .exact_divide(&cyclotomic(e))
            .expect("Phi_e divides q^d - 1 for e | d");
    }
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(d, acc.clone());
    acc
}

/// An element of `Z[q]/Phi_d(q)`, i.e. a value in the cyclotomic integers
/// `Z[omega_d]` written in the power basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicResidue {
    order: u64,
    residue: IntPolynomial,
}

impl CyclotomicResidue {
    /// Reduce `f` modulo `Phi_d`. Folding modulo `q^d - 1` first keeps the
    /// long division short.
    pub fn reduce(f: &IntPolynomial, d: u64) -> Self {
        assert!(d >= 1, "root of unity order must be positive");
        let folded = IntPolynomial::new(f.fold_mod(d as usize));
        Self::from_folded(folded, d)
    }

    /// Reduce `sum_e c_e q^e` where exponents are taken mod `d`.
    pub fn from_exponents<'a>(terms: impl IntoIterator<Item = (u64, &'a BigInt)>, d: u64) -> Self {
        assert!(d >= 1, "root of unity order must be positive");
        let mut folded = vec![BigInt::zero(); d as usize];
        for (e, c) in terms {
            folded[(e % d) as usize] += c;
        }
        Self::from_folded(IntPolynomial::new(folded), d)
    }

    fn from_folded(folded: IntPolynomial, d: u64) -> Self {
        let (_, residue) = folded
            .div_rem(&cyclotomic(d))
            .expect("cyclotomic polynomials are monic");
        CyclotomicResidue { order: d, residue }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn residue(&self) -> &IntPolynomial {
        &self.residue
    }

    /// The rational integer this residue represents, if it is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn into_integer(self) -> Result<BigInt, QPolyError> {
        self.as_integer()
            .ok_or(QPolyError::NonIntegerEvaluation {
                order: self.order,
                residue: self.residue,
            })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        Self::reduce(&(&self.residue + &other.residue), self.order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        Self::reduce(&(&self.residue * &other.residue), self.order)
    }
}

/// `f(omega)` for a primitive `d`-th root of unity `omega`, provided it is a
/// rational integer (then it is the same for every primitive `d`-th root).
pub fn eval_at_root(f: &IntPolynomial, d: u64) -> Result<BigInt, QPolyError> {
    if d == 0 {
        return Err(QPolyError::Precondition(
            "root of unity order must be positive".into(),
        ));
    }
    CyclotomicResidue::reduce(f, d).into_integer()
}
