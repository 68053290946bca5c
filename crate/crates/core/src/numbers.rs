//! Small integer helpers shared by the counting formulas.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of `k`-element multisets drawn from an `n`-element set.
pub fn multichoose(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n == 0 {
        return BigUint::zero();
    }
    binomial(n + k - 1, k)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Multiplicative order of `j` in the cyclic group of order `n`.
pub fn element_order(n: u64, j: u64) -> u64 {
    n / gcd(n, j)
}
