//! Permutations of `[n]` in one-line notation, their cycle structure, and the
//! statistics `inv`, `maj`, `des`, `exc` with their generating functions.
//!
//! Entries are 1-based and composition is right to left: `(u * v)(i) = u(v(i))`.

use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::numbers::lcm;
use crate::partition::Partition;
use crate::qpoly::{BivariatePolynomial, IntPolynomial};

/// Largest `n` for which a conjugacy class is enumerated by filtering all of
/// the symmetric group.
pub const DEFAULT_CLASS_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("one-line word {0:?} is not a permutation of [n]")]
    NotAPermutation(Vec<usize>),
    #[error("cycle notation {0:?} is invalid for n = {1}")]
    BadCycles(String, usize),
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("permutation of [{len}] does not act on [{n}]")]
    SizeMismatch { len: usize, n: usize },
}

pub type CycleType = Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(PermError::NotAPermutation(one_line));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The long cycle `(1, 2, ..., n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation((1..=n).map(|i| i % n + 1).collect())
    }

    /// Builds a permutation of `[n]` from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut w: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        let bad = || PermError::BadCycles(format!("{cycles:?}"), n);
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x] {
                    return Err(bad());
                }
                used[x] = true;
                w[x - 1] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation(w))
    }

    /// Parses cycle notation such as `(1,2,4)(3,5)` on `[n]`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self, PermError> {
        let bad = || PermError::BadCycles(s.to_string(), n);
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let cycle = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            if cycle.is_empty() {
                return Err(bad());
            }
            cycles.push(cycle);
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut out = Self::identity(self.len());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    /// `c * self * c^-1`
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.compose(self).compose(&c.inverse())
    }

    /// Extends to a permutation of `[n]` fixing the new points.
    pub fn extend_to(&self, n: usize) -> Result<Self, PermError> {
        if n < self.len() {
            return Err(PermError::SizeMismatch { len: self.len(), n });
        }
        let mut w = self.0.clone();
        w.extend(self.len() + 1..=n);
        Ok(Permutation(w))
    }

    /// Disjoint cycles including fixed points, each starting at its minimum,
    /// listed by increasing minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len() + 1];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn stat(&self, which: Statistic) -> usize {
        stat(self, which)
    }

    /// Cycle notation, omitting fixed points; the identity prints as `()`.
    pub fn cycle_notation(&self) -> String {
        let s: String = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let body: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", body.join(","))
            })
            .collect();
        if s.is_empty() {
            "()".into()
        } else {
            s
        }
    }

    /// Every permutation of `[n]` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Digit string for `n <= 9`, dot separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::compact_join(&self.0))
    }
}

/// Accepts `31524`, `3,1,5,2,4`, `3.1.5.2.4`, or `3 1 5 2 4`.
impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let sep = |c: char| c == ',' || c == '.' || c.is_whitespace();
        let parsed: Option<Vec<usize>> = if s.contains(sep) {
            s.split(sep)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Permutation::new(parsed.ok_or_else(|| PermError::NotAPermutation(Vec::new()))?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Inv,
    Maj,
    Des,
    Exc,
}

impl FromStr for Statistic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inv" => Ok(Statistic::Inv),
            "maj" => Ok(Statistic::Maj),
            "des" => Ok(Statistic::Des),
            "exc" => Ok(Statistic::Exc),
            other => Err(format!("unknown statistic {other:?}")),
        }
    }
}

/// Descent set `{i : w_i > w_(i+1)}` (1-based positions).
pub fn descents(w: &Permutation) -> impl Iterator<Item = usize> + '_ {
    w.0.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
}

pub fn stat(w: &Permutation, which: Statistic) -> usize {
    let v = &w.0;
    match which {
        Statistic::Inv => (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
            .sum(),
        Statistic::Maj => descents(w).sum(),
        Statistic::Des => descents(w).count(),
        Statistic::Exc => v.iter().enumerate().filter(|&(i, &x)| x > i + 1).count(),
    }
}

/// `sum_{w in X} q^(stat w)`
pub fn stat_genfun<I>(perms: I, which: Statistic) -> IntPolynomial
where
    I: IntoIterator,
    I::Item: Borrow<Permutation>,
{
    let mut counts: Vec<BigInt> = Vec::new();
    for w in perms {
        let s = stat(w.borrow(), which);
        if counts.len() <= s {
            counts.resize(s + 1, BigInt::default());
        }
        counts[s] += 1;
    }
    IntPolynomial::new(counts)
}

pub fn cycle_type(w: &Permutation) -> CycleType {
    w.cycle_type()
}

/// All permutations with cycle type `lambda`, by filtering the whole group.
pub fn conjugacy_class(lambda: &CycleType, cap: usize) -> Result<Vec<Permutation>, PermError> {
    let n = lambda.size();
    if n > cap {
        return Err(PermError::CapExceeded { n, cap });
    }
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| &w.cycle_type() == lambda)
        .collect())
}

/// `sum_{w in class} q^(maj w) t^(exc w)`
pub fn maj_exc_genfun(lambda: &CycleType, cap: usize) -> Result<BivariatePolynomial, PermError> {
    let mut f = BivariatePolynomial::zero();
    for w in conjugacy_class(lambda, cap)? {
        f.add_term(
            stat(&w, Statistic::Maj) as u32,
            stat(&w, Statistic::Exc) as u32,
            BigInt::from(1),
        );
    }
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// Every cycle has length `o(g)`.
    Free,
    /// Every cycle has length `o(g)` except a single fixed point.
    NearlyFree,
    Neither,
}

/// Classifies how `g`, extended by fixed points to `[n]`, acts on `[n]`.
pub fn nearly_free_kind(g: &Permutation, n: usize) -> Result<ActionKind, PermError> {
    let g = g.extend_to(n)?;
    let order = g.order() as usize;
    let lens: Vec<usize> = g.cycles().iter().map(Vec::len).collect();
    let off = lens.iter().filter(|&&l| l != order).count();
    Ok(match off {
        0 => ActionKind::Free,
        1 if lens.contains(&1) => ActionKind::NearlyFree,
        _ => ActionKind::Neither,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::factorial;
    use crate::qpoly::{eulerian_poly, q_factorial};

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn statistics_of_31524() {
        let x = w("31524");
        assert_eq!(x.stat(Statistic::Inv), 4);
        assert_eq!(x.stat(Statistic::Maj), 4);
        assert_eq!(descents(&x).collect::<Vec<_>>(), vec![1, 3]);
        for which in [Statistic::Inv, Statistic::Maj, Statistic::Des, Statistic::Exc] {
            assert_eq!(Permutation::identity(6).stat(which), 0);
        }
    }

    #[test]
    fn table_of_four_statistics_on_s3() {
        // (word, inv, maj, des, exc)
        let table = [
            ("123", 0, 0, 0, 0),
            ("132", 1, 2, 1, 1),
            ("213", 1, 1, 1, 1),
            ("231", 2, 2, 1, 2),
            ("312", 2, 1, 1, 1),
            ("321", 3, 3, 2, 1),
        ];
        for (s, inv, maj, des, exc) in table {
            let x = w(s);
            assert_eq!(
                [Statistic::Inv, Statistic::Maj, Statistic::Des, Statistic::Exc]
                    .map(|st| x.stat(st)),
                [inv, maj, des, exc],
                "{s}"
            );
        }
    }

    #[test]
    fn mahonian_and_eulerian_equidistribution() {
        assert_eq!(
            stat_genfun(Permutation::all(3), Statistic::Inv),
            IntPolynomial::from_i64s(&[1, 2, 2, 1])
        );
        for n in 0..=6 {
            let all = Permutation::all(n);
            let inv = stat_genfun(&all, Statistic::Inv);
            assert_eq!(inv, q_factorial(n));
            assert_eq!(stat_genfun(&all, Statistic::Maj), inv);
            let des = stat_genfun(&all, Statistic::Des);
            assert_eq!(stat_genfun(&all, Statistic::Exc), des);
            assert_eq!(des, eulerian_poly(n));
        }
    }

    #[test]
    fn cycle_types() {
        let g = Permutation::parse_cycles("(1,5,2)(3,7)(4,8,9)(6)", 9).unwrap();
        assert_eq!(g.cycle_type().parts(), &[3, 3, 2, 1]);
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(w("231").cycle_type().parts(), &[3]);
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn composition_is_right_to_left() {
        let u = w("213");
        let v = w("132");
        // (u v)(1) = u(v(1)) = u(1) = 2
        assert_eq!(u.compose(&v).one_line(), &[2, 3, 1]);
        assert_eq!(u.compose(&u), Permutation::identity(3));
        let c = Permutation::long_cycle(4);
        assert_eq!(c.one_line(), &[2, 3, 4, 1]);
        assert_eq!(c.pow(4), Permutation::identity(4));
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(4));
    }

    #[test]
    fn parsing() {
        assert!("3152".parse::<Permutation>().is_err());
        assert_eq!("3,1,2".parse::<Permutation>().unwrap(), w("312"));
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert_eq!(
            Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap().cycle_notation(),
            "(1,2)(3,4)"
        );
        assert_eq!(Permutation::identity(3).cycle_notation(), "()");
    }

    #[test]
    fn conjugacy_classes() {
        let three = Partition::new(vec![3]).unwrap();
        assert_eq!(
            conjugacy_class(&three, 8).unwrap(),
            vec![w("231"), w("312")]
        );
        let ones = Partition::new(vec![1; 4]).unwrap();
        assert_eq!(conjugacy_class(&ones, 8).unwrap(), vec![Permutation::identity(4)]);
        let two_one = Partition::new(vec![2, 1]).unwrap();
        let mut cls = conjugacy_class(&two_one, 8).unwrap();
        cls.sort();
        assert_eq!(cls, vec![w("132"), w("213"), w("321")]);
        assert!(matches!(
            conjugacy_class(&Partition::new(vec![9]).unwrap(), 8),
            Err(PermError::CapExceeded { .. })
        ));
    }

    #[test]
    fn classes_partition_the_group() {
        for n in 0..=6 {
            let total: usize = Partition::all(n)
                .iter()
                .map(|la| conjugacy_class(la, 8).unwrap().len())
                .sum();
            assert_eq!(num_bigint::BigUint::from(total), factorial(n as u64));
        }
    }

    #[test]
    fn maj_exc_generating_functions() {
        let three = Partition::new(vec![3]).unwrap();
        assert_eq!(
            maj_exc_genfun(&three, 8).unwrap(),
            BivariatePolynomial::from_terms([(2, 2, 1), (1, 1, 1)])
        );
        let two_one = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            maj_exc_genfun(&two_one, 8).unwrap(),
            BivariatePolynomial::from_terms([(1, 1, 1), (2, 1, 1), (3, 1, 1)])
        );
        assert_eq!(
            maj_exc_genfun(&Partition::new(vec![1; 5]).unwrap(), 8).unwrap(),
            BivariatePolynomial::one()
        );
    }

    #[test]
    fn nearly_free_classification() {
        let g = Permutation::parse_cycles("(1,2)(3,4)(5,6)", 6).unwrap();
        assert_eq!(nearly_free_kind(&g, 6).unwrap(), ActionKind::Free);
        assert_eq!(nearly_free_kind(&g, 7).unwrap(), ActionKind::NearlyFree);
        assert_eq!(nearly_free_kind(&g, 8).unwrap(), ActionKind::Neither);
        let h = Permutation::parse_cycles("(1,2,4)(3,5)", 5).unwrap();
        assert_eq!(nearly_free_kind(&h, 5).unwrap(), ActionKind::Neither);
        assert_eq!(
            nearly_free_kind(&Permutation::identity(3), 3).unwrap(),
            ActionKind::Free
        );
        assert!(nearly_free_kind(&g, 5).is_err());
    }

    #[test]
    fn nearly_free_orders_divide() {
        for n in 0..=6 {
            for g in Permutation::all(n) {
                let o = g.order() as usize;
                if nearly_free_kind(&g, n).unwrap() != ActionKind::Neither {
                    assert!(n % o == 0 || (n - 1) % o == 0, "{g}");
                }
            }
        }
    }
}
