//! Exact-arithmetic toolkit for the cyclic sieving phenomenon.
//!
//! The crate builds the classical sieving families (multisets, subsets,
//! rectangular tableaux under promotion, noncrossing objects under rotation,
//! triangulations, conjugacy classes), their q-analogue polynomials, and checks
//! `#X^g = f(omega_o(g))` for every group element in two independent ways: by
//! exact reduction modulo cyclotomic polynomials and by orbit census against
//! `f mod (1 - q^n)`.

pub mod catalan;
pub mod numbers;
pub mod partition;
pub mod perms;
pub mod qpoly;
pub mod sieve;
pub mod tableaux;

pub use partition::Partition;
pub use perms::Permutation;
pub use qpoly::IntPolynomial;

/// Concatenates single-digit items (`[1, 2, 5]` -> `"125"`); falls back to a
/// dot-separated list as soon as any item has two digits.
pub fn compact_join(items: &[usize]) -> String {
    if items.iter().all(|&x| x < 10) {
        items.iter().map(|x| char::from(b'0' + *x as u8)).collect()
    } else {
        items
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(".")
    }
}
