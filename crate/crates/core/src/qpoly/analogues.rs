//! q-analogue constructors. Everything stays in `Z[q]`: products are built
//! directly and quotients go through exact division, which fails loudly if a
//! formula was instantiated wrongly.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{BivariatePolynomial, IntPolynomial, LaurentPolynomial, QPolyError};
use crate::numbers::multichoose;
use crate::perms::{stat_genfun, Permutation, Statistic};

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::from(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).map(q_int).product()
}

/// Gaussian binomial via `[m, j] = [m-1, j] + q^(m-j) [m-1, j-1]`, so no
/// division is ever performed. Zero outside `0 <= k <= n`.
pub fn gaussian_binomial(n: usize, k: i64) -> IntPolynomial {
    if k < 0 || k as usize > n {
        return IntPolynomial::zero();
    }
    let k = k as usize;
    // row[j] holds [m, j] for the current m.
    let mut row = vec![IntPolynomial::zero(); k + 1];
    row[0] = IntPolynomial::one();
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            let shifted = row[j - 1].shift(m - j);
            row[j] += &shifted;
        }
    }
    row.swap_remove(k)
}

/// `[n+k-1, k]_q` at a primitive `d`-th root of unity, for `d | n`:
/// `C(n/d + k/d - 1, k/d)` when `d | k`, zero otherwise.
pub fn root_of_unity_binomial(n: u64, k: u64, d: u64) -> Result<BigInt, QPolyError> {
    if d == 0 || n % d != 0 {
        return Err(QPolyError::Precondition(format!(
            "root order {d} must divide n = {n}"
        )));
    }
    if k % d != 0 {
        return Ok(BigInt::zero());
    }
    Ok(multichoose(n / d, k / d).into())
}

/// `Cat_n(q) = [2n, n]_q / [n+1]_q`
pub fn q_catalan(n: usize) -> Result<IntPolynomial, QPolyError> {
    gaussian_binomial(2 * n, n as i64).exact_divide(&q_int(n + 1))
}

/// Type-A q-Fuss-Catalan number `prod_{i=1}^{n-1} [mn+i+1]_q / [i+1]_q`.
pub fn q_fuss_catalan_a(n: usize, m: usize) -> Result<IntPolynomial, QPolyError> {
    if n == 0 || m == 0 {
        return Err(QPolyError::Precondition("q-Fuss-Catalan needs n, m >= 1".into()));
    }
    let num: IntPolynomial = (1..n).map(|i| q_int(m * n + i + 1)).product();
    let den: IntPolynomial = (1..n).map(|i| q_int(i + 1)).product();
    num.exact_divide(&den)
}

/// Descent generating function over the symmetric group on `n` letters.
pub fn eulerian_poly(n: usize) -> IntPolynomial {
    stat_genfun(Permutation::all(n), Statistic::Des)
}

/// The variables `q^e` (with multiplicity) that a plethystic substitution of
/// `f` feeds into a symmetric function.
fn plethystic_alphabet(f: &IntPolynomial) -> Result<Vec<usize>, QPolyError> {
    if !f.is_nonnegative() {
        return Err(QPolyError::Precondition(
            "plethysm needs nonnegative coefficients".into(),
        ));
    }
    let mut vars = Vec::new();
    for (e, c) in f.coeffs().iter().enumerate() {
        let m = c
            .to_usize()
            .ok_or_else(|| QPolyError::Precondition("coefficient too large".into()))?;
        vars.extend(std::iter::repeat(e).take(m));
    }
    Ok(vars)
}

/// `h_k[f]`: the complete homogeneous symmetric function of degree `k`
/// evaluated at the monomials of `f`.
pub fn plethysm_h(k: usize, f: &IntPolynomial) -> Result<IntPolynomial, QPolyError> {
    let vars = plethystic_alphabet(f)?;
    let mut h = vec![IntPolynomial::zero(); k + 1];
    h[0] = IntPolynomial::one();
    for &e in &vars {
        // adjoining z = q^e: h_j <- h_j + z * h_{j-1}(new)
        for j in 1..=k {
            let add = h[j - 1].shift(e);
            h[j] += &add;
        }
    }
    Ok(h.swap_remove(k))
}

/// `e_k[f]`: the elementary symmetric function of degree `k` at the monomials
/// of `f`. Requires `k <= f(1)`.
pub fn plethysm_e(k: usize, f: &IntPolynomial) -> Result<IntPolynomial, QPolyError> {
    let vars = plethystic_alphabet(f)?;
    if k > vars.len() {
        return Err(QPolyError::Precondition(format!(
            "e_{k} needs at least {k} variables, f(1) = {}",
            vars.len()
        )));
    }
    let mut e_k = vec![IntPolynomial::zero(); k + 1];
    e_k[0] = IntPolynomial::one();
    for &e in &vars {
        for j in (1..=k).rev() {
            let add = e_k[j - 1].shift(e);
            e_k[j] += &add;
        }
    }
    Ok(e_k.swap_remove(k))
}

/// q-count of the `k`-dimensional faces of the cyclic polytope `CP(n, d)`:
/// `sum_{j=1}^{d/2} ([n]_q [n-j, j]_q / [n-j]_q) [j, k+1-j]_q`.
pub fn face_poly(k: usize, n: usize, d: usize) -> Result<IntPolynomial, QPolyError> {
    if d == 0 || d % 2 != 0 || k >= d || n <= d {
        return Err(QPolyError::Precondition(format!(
            "face polynomial needs d even and positive, 0 <= k < d, n > d (got k={k}, n={n}, d={d})"
        )));
    }
    let mut total = IntPolynomial::zero();
    for j in 1..=d / 2 {
        let lead = (&q_int(n) * &gaussian_binomial(n - j, j as i64)).exact_divide(&q_int(n - j))?;
        total += &(&lead * &gaussian_binomial(j, k as i64 + 1 - j as i64));
    }
    Ok(total)
}

/// `F(q, q^-1)`
pub fn subst_t_q_inverse(f: &BivariatePolynomial) -> LaurentPolynomial {
    f.subst_t_q_inverse()
}
