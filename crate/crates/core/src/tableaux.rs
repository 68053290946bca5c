//! Standard and semistandard Young tableaux in English notation: hooklength
//! counts, promotion, evacuation, the staircase-to-rectangle injection, RSK
//! for words and for matrices, and the ballot-word bijection to matchings.
//!
//! Public accessors use 1-based `(row, column)` coordinates.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::catalan::Matching;
use crate::numbers::factorial;
use crate::partition::Partition;
use crate::perms::Permutation;
use crate::qpoly::{self, IntPolynomial, QPolyError};

/// Default upper bound on `n` for [`enumerate_syt`].
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("not a standard Young tableau: {0}")]
    NotStandard(String),
    #[error("not a semistandard Young tableau: {0}")]
    NotSemistandard(String),
    #[error("expected shape {expected}, found {found}")]
    ShapeViolation { expected: String, found: Partition },
    #[error("shapes of P {p} and Q {q} differ")]
    ShapeMismatch { p: Partition, q: Partition },
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("matrix is not rectangular")]
    Ragged,
    #[error("matching {0} is crossing")]
    Crossing(String),
    #[error("cannot parse tableau from {0:?}")]
    Parse(String),
}

fn shape_of(rows: &[Vec<usize>]) -> Option<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect()).ok()
}

fn rows_label(rows: &[Vec<usize>]) -> String {
    let small = rows.iter().flatten().all(|&x| x < 10);
    rows.iter()
        .map(|r| {
            if small {
                crate::compact_join(r)
            } else {
                r.iter().map(ToString::to_string).collect::<Vec<_>>().join(".")
            }
        })
        .collect::<Vec<_>>()
        .join("/")
}

fn is_sep(c: char) -> bool {
    c == ' ' || c == ',' || c == '.'
}

/// Rows separated by `/`. Entries are separated by spaces, commas or dots;
/// when no separator appears anywhere, each digit is an entry.
fn parse_rows(s: &str, digits: bool) -> Result<Vec<Vec<usize>>, TableauError> {
    let err = || TableauError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            let row = row.trim();
            if digits {
                row.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                    .collect()
            } else {
                row.split(is_sep)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| err()))
                    .collect()
            }
        })
        .collect()
}

/// Tries digit-per-entry first, then one integer per row (a tall column
/// with two-digit entries has no separators).
fn parse_with<T>(s: &str, build: impl Fn(Vec<Vec<usize>>) -> Result<T, TableauError>) -> Result<T, TableauError> {
    if s.contains(is_sep) {
        return build(parse_rows(s, false)?);
    }
    parse_rows(s, true)
        .and_then(&build)
        .or_else(|e| build(parse_rows(s, false)?).map_err(|_| e))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SYTableau {
    rows: Vec<Vec<usize>>,
}

impl SYTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let bad = |why: &str| TableauError::NotStandard(format!("{}: {why}", rows_label(&rows)));
        if rows.iter().any(Vec::is_empty) || shape_of(&rows).is_none() {
            return Err(bad("rows do not form a partition shape"));
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(bad("entries are not 1..n"));
            }
            seen[x] = true;
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(bad("a row does not increase"));
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(lo, hi)| lo <= hi) {
                return Err(bad("a column does not increase"));
            }
        }
        Ok(SYTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// 1-based `(row, col)` of entry `x`.
    pub fn position(&self, x: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, r)| {
            r.iter().position(|&y| y == x).map(|j| (i + 1, j + 1))
        })
    }

    /// Reflection of cells `(i, j) -> (j, i)`.
    pub fn transpose(&self) -> SYTableau {
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        SYTableau { rows }
    }

    /// Descents: `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let ballot = ballot_sequence(self);
        (1..self.size()).filter(|&i| ballot[i] > ballot[i - 1]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Slash-joined rows, e.g. `125/34`.
    pub fn label(&self) -> String {
        rows_label(&self.rows)
    }
}

impl fmt::Display for SYTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SYTableau {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_with(s, SYTableau::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SSYTableau {
    rows: Vec<Vec<usize>>,
}

impl SSYTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let bad = |why: &str| {
            TableauError::NotSemistandard(format!("{}: {why}", rows_label(&rows)))
        };
        if rows.iter().any(Vec::is_empty) || shape_of(&rows).is_none() {
            return Err(bad("rows do not form a partition shape"));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(bad("entries must be positive"));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(bad("a row decreases"));
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(lo, hi)| lo <= hi) {
                return Err(bad("a column does not strictly increase"));
            }
        }
        Ok(SSYTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated shape")
    }

    /// `mu_k` is the number of entries equal to `k`, for `k = 1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut mu = vec![0; max];
        for &x in self.rows.iter().flatten() {
            mu[x - 1] += 1;
        }
        mu
    }

    pub fn label(&self) -> String {
        rows_label(&self.rows)
    }
}

impl fmt::Display for SSYTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SSYTableau {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_with(s, SSYTableau::new)
    }
}

impl From<SYTableau> for SSYTableau {
    fn from(t: SYTableau) -> Self {
        SSYTableau { rows: t.rows }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonnegMatrix {
    entries: Vec<Vec<u64>>,
}

impl NonnegMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self, TableauError> {
        if entries.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(TableauError::Ragged);
        }
        Ok(NonnegMatrix { entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        NonnegMatrix { entries: vec![vec![0; cols]; rows] }
    }

    /// Entry 1 at `(i, w_i)`.
    pub fn permutation_matrix(w: &Permutation) -> Self {
        let n = w.len();
        let mut m = Self::zeros(n, n);
        for (i, &wi) in w.one_line().iter().enumerate() {
            m.entries[i][wi - 1] = 1;
        }
        m
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn n_rows(&self) -> usize {
        self.entries.len()
    }

    pub fn n_cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.n_cols())
            .map(|j| self.entries.iter().map(|r| r[j]).sum())
            .collect()
    }

    /// Columns `(i, j)` repeated `M_{i,j}` times, lexicographic with the top
    /// entry first; indices are 1-based.
    pub fn biword(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }
}

/// `h_{i,j} = arm + leg + 1`, row-major.
pub fn hooklengths(la: &Partition) -> Vec<Vec<usize>> {
    let conj = la.conjugate();
    (0..la.len())
        .map(|i| {
            (0..la.row_len(i))
                .map(|j| (la.row_len(i) - j - 1) + (conj.row_len(j) - i - 1) + 1)
                .collect()
        })
        .collect()
}

/// Number of standard tableaux of shape `la`, by the hooklength formula.
pub fn count_syt(la: &Partition) -> BigUint {
    let hooks: BigUint = hooklengths(la)
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * h);
    let nf = factorial(la.size() as u64);
    assert!(
        (&nf % &hooks) == BigUint::default(),
        "hook product does not divide n! for {la}"
    );
    nf / hooks
}

/// `[n]_q! / prod [h_{i,j}]_q`
pub fn q_count_syt(la: &Partition) -> Result<IntPolynomial, QPolyError> {
    let denom: IntPolynomial = hooklengths(la)
        .iter()
        .flatten()
        .map(|&h| qpoly::q_int(h))
        .product();
    qpoly::exact_divide(&qpoly::q_factorial(la.size()), &denom)
}

/// Every standard tableau of shape `la`, sorted.
pub fn enumerate_syt(la: &Partition, cap: usize) -> Result<Vec<SYTableau>, TableauError> {
    fn go(la: &Partition, k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<SYTableau>) {
        if k > la.size() {
            out.push(SYTableau { rows: rows.clone() });
            return;
        }
        for i in 0..la.len() {
            let len = rows.get(i).map_or(0, Vec::len);
            let above = if i == 0 { usize::MAX } else { rows[i - 1].len() };
            if len < la.row_len(i) && len < above {
                if i == rows.len() {
                    rows.push(Vec::new());
                }
                rows[i].push(k);
                go(la, k + 1, rows, out);
                rows[i].pop();
                if rows[i].is_empty() {
                    rows.pop();
                }
            }
            if len == 0 {
                break;
            }
        }
    }
    let n = la.size();
    if n > cap {
        return Err(TableauError::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    go(la, 1, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// One promotion pass on the non-frozen cells, which must hold `1..=m` in
/// a partition-shaped region containing `(0, 0)`. Returns the corner where
/// the dot stopped, with `value` placed there.
fn promotion_pass(rows: &mut [Vec<usize>], frozen: &[Vec<bool>], value: usize) -> (usize, usize) {
    let open = |i: usize, j: usize| frozen.get(i).and_then(|r| r.get(j)) == Some(&false);
    let (mut i, mut j) = (0, 0);
    loop {
        let below = open(i + 1, j).then(|| rows[i + 1][j]);
        let right = open(i, j + 1).then(|| rows[i][j + 1]);
        let next = match (below, right) {
            (Some(b), Some(r)) if b < r => (i + 1, j),
            (Some(_), Some(_)) => (i, j + 1),
            (Some(_), None) => (i + 1, j),
            (None, Some(_)) => (i, j + 1),
            (None, None) => break,
        };
        rows[i][j] = rows[next.0][next.1];
        (i, j) = next;
    }
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            if !frozen[r][c] && (r, c) != (i, j) {
                *x -= 1;
            }
        }
    }
    rows[i][j] = value;
    (i, j)
}

/// Promotion: remove 1, slide the hole out to a corner, decrement, put `n`
/// in the vacated corner.
pub fn promote(t: &SYTableau) -> SYTableau {
    let mut rows = t.rows.clone();
    let frozen: Vec<Vec<bool>> = rows.iter().map(|r| vec![false; r.len()]).collect();
    if t.size() > 0 {
        promotion_pass(&mut rows, &frozen, t.size());
    }
    SYTableau { rows }
}

/// Inverse of [`promote`].
pub fn demote(t: &SYTableau) -> SYTableau {
    let n = t.size();
    let mut rows = t.rows.clone();
    let Some((pi, pj)) = t.position(n) else {
        return t.clone();
    };
    let (mut i, mut j) = (pi - 1, pj - 1);
    while (i, j) != (0, 0) {
        let up = (i > 0).then(|| rows[i - 1][j]);
        let left = (j > 0).then(|| rows[i][j - 1]);
        let next = match (up, left) {
            (Some(u), Some(l)) if u > l => (i - 1, j),
            (Some(_), Some(_)) => (i, j - 1),
            (Some(_), None) => (i - 1, j),
            (None, _) => (i, j - 1),
        };
        rows[i][j] = rows[next.0][next.1];
        (i, j) = next;
    }
    for x in rows.iter_mut().flatten() {
        *x += 1;
    }
    rows[0][0] = 1;
    SYTableau { rows }
}

pub fn promote_pow(t: &SYTableau, k: usize) -> SYTableau {
    (0..k).fold(t.clone(), |acc, _| promote(&acc))
}

/// `N` promotions; after the `i`-th the entry `N - i + 1` is frozen where
/// the dot stopped, and later passes leave frozen cells alone.
pub fn evacuate(t: &SYTableau) -> SYTableau {
    let n = t.size();
    let mut rows = t.rows.clone();
    let mut frozen: Vec<Vec<bool>> = rows.iter().map(|r| vec![false; r.len()]).collect();
    for i in 1..=n {
        let (r, c) = promotion_pass(&mut rows, &frozen, n - i + 1);
        frozen[r][c] = true;
    }
    SYTableau { rows }
}

/// Injection of staircase tableaux `sc_n` into rectangles `(n^{n+1})`:
/// evacuate, complement `x -> n(n+1) + 1 - x`, reflect in the anti-diagonal,
/// and paste the result onto `t`.
pub fn pon_wang_iota(t: &SYTableau) -> Result<SYTableau, TableauError> {
    let n = t.rows.len();
    let sc = Partition::staircase(n);
    if t.shape() != sc {
        return Err(TableauError::ShapeViolation {
            expected: format!("staircase {sc}"),
            found: t.shape(),
        });
    }
    let total = n * (n + 1);
    let mut rows = vec![vec![0; n]; n + 1];
    for (i, r) in t.rows.iter().enumerate() {
        rows[i][..r.len()].copy_from_slice(r);
    }
    for (i, r) in evacuate(t).rows.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            rows[n - j][n - 1 - i] = total + 1 - x;
        }
    }
    if n == 0 {
        rows.clear();
    }
    SYTableau::new(rows)
}

/// Row insertion of `x`; returns the 0-based cell that was added.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return (i, row.len() - 1);
            }
        }
    }
    rows.push(vec![x]);
    (rows.len() - 1, 0)
}

/// Removes the last cell of row `i` and bumps it back out of the top row.
fn reverse_bump(rows: &mut Vec<Vec<usize>>, i: usize) -> usize {
    let mut y = rows[i].pop().expect("nonempty row");
    if rows[i].is_empty() {
        rows.pop();
    }
    for r in (0..i).rev() {
        let k = rows[r]
            .iter()
            .rposition(|&z| z < y)
            .expect("reverse bump finds a smaller entry");
        y = std::mem::replace(&mut rows[r][k], y);
    }
    y
}

fn insert_biword(pairs: impl IntoIterator<Item = (usize, usize)>) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (top, bottom) in pairs {
        let (i, _) = row_insert(&mut p, bottom);
        if i == q.len() {
            q.push(Vec::new());
        }
        q[i].push(top);
    }
    (p, q)
}

/// Undo [`insert_biword`]: the largest entry of `q` (rightmost among ties)
/// marks the last cell added.
fn extract_biword(
    mut p: Vec<Vec<usize>>,
    mut q: Vec<Vec<usize>>,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    while !q.is_empty() {
        let (i, top) = q
            .iter()
            .enumerate()
            .map(|(i, r)| (i, *r.last().expect("nonempty row")))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty tableau");
        q[i].pop();
        if q[i].is_empty() {
            q.pop();
        }
        pairs.push((top, reverse_bump(&mut p, i)));
    }
    pairs.reverse();
    pairs
}

/// Schensted insertion of `w_1 ... w_n`, with the recording tableau.
pub fn rsk_word(w: &Permutation) -> (SYTableau, SYTableau) {
    let (p, q) = insert_biword(w.one_line().iter().copied().enumerate().map(|(i, x)| (i + 1, x)));
    (SYTableau { rows: p }, SYTableau { rows: q })
}

pub fn rsk_word_inverse(p: &SYTableau, q: &SYTableau) -> Result<Permutation, TableauError> {
    if p.shape() != q.shape() {
        return Err(TableauError::ShapeMismatch { p: p.shape(), q: q.shape() });
    }
    let word = extract_biword(p.rows.clone(), q.rows.clone())
        .into_iter()
        .map(|(_, x)| x)
        .collect();
    Ok(Permutation::new(word).expect("inverse of a standard pair is a permutation"))
}

/// Knuth's insertion of the lexicographic biword of `m`.
pub fn rsk_matrix(m: &NonnegMatrix) -> (SSYTableau, SSYTableau) {
    let (p, q) = insert_biword(m.biword());
    (SSYTableau { rows: p }, SSYTableau { rows: q })
}

/// Recovers the `rows x cols` matrix from a pair of equal-shape tableaux.
pub fn rsk_matrix_inverse(
    p: &SSYTableau,
    q: &SSYTableau,
    rows: usize,
    cols: usize,
) -> Result<NonnegMatrix, TableauError> {
    if p.shape() != q.shape() {
        return Err(TableauError::ShapeMismatch { p: p.shape(), q: q.shape() });
    }
    let mut m = NonnegMatrix::zeros(rows, cols);
    for (i, j) in extract_biword(p.rows.clone(), q.rows.clone()) {
        if i > rows || j > cols {
            return Err(TableauError::Ragged);
        }
        m.entries[i - 1][j - 1] += 1;
    }
    Ok(m)
}

/// `b_m` is the (1-based) row containing `m`.
pub fn ballot_sequence(t: &SYTableau) -> Vec<usize> {
    let mut b = vec![0; t.size()];
    for (i, row) in t.rows.iter().enumerate() {
        for &x in row {
            b[x - 1] = i + 1;
        }
    }
    b
}

/// Every prefix has at least as many `i`s as `i + 1`s.
pub fn is_ballot(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &b in word {
        if b == 0 {
            return false;
        }
        if counts.len() < b {
            counts.resize(b, 0);
        }
        counts[b - 1] += 1;
        if b > 1 && counts[b - 1] > counts[b - 2] {
            return false;
        }
    }
    true
}

/// Reads the ballot word of a two-row rectangle as parentheses and matches
/// them.
pub fn tableau_to_matching(t: &SYTableau) -> Result<Matching, TableauError> {
    let shape = t.shape();
    let n = shape.row_len(0);
    if shape != Partition::rectangle(2, n) {
        return Err(TableauError::ShapeViolation {
            expected: "two equal rows".into(),
            found: shape,
        });
    }
    let mut open = Vec::new();
    let mut edges = Vec::new();
    for (pos, b) in ballot_sequence(t).into_iter().enumerate() {
        if b == 1 {
            open.push(pos + 1);
        } else {
            let a = open.pop().expect("ballot word closes only open parentheses");
            edges.push((a, pos + 1));
        }
    }
    Ok(Matching::new(edges).expect("parenthesis matching is a perfect matching"))
}

/// Left endpoints form the first row, right endpoints the second.
pub fn matching_to_tableau(m: &Matching) -> Result<SYTableau, TableauError> {
    if !m.is_noncrossing() {
        return Err(TableauError::Crossing(m.label()));
    }
    if m.edges().is_empty() {
        return Ok(SYTableau { rows: Vec::new() });
    }
    let mut top: Vec<usize> = m.edges().iter().map(|e| e.0).collect();
    let mut bottom: Vec<usize> = m.edges().iter().map(|e| e.1).collect();
    top.sort_unstable();
    bottom.sort_unstable();
    SYTableau::new(vec![top, bottom])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SYTableau {
        s.parse().unwrap()
    }

    fn shape(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation_and_labels() {
        assert!("12/3".parse::<SYTableau>().is_ok());
        assert!("13/2".parse::<SYTableau>().is_ok());
        assert!("21/3".parse::<SYTableau>().is_err());
        assert!("1/23".parse::<SYTableau>().is_err());
        assert!("12/4".parse::<SYTableau>().is_err());
        assert!("13/12".parse::<SYTableau>().is_err());
        let big = t("1 3 6/2 4 8/5 7 11/9 10 12");
        assert_eq!(big.label(), "1.3.6/2.4.8/5.7.11/9.10.12");
        assert_eq!(big.label().parse::<SYTableau>().unwrap(), big);
        assert_eq!(big.entry(3, 3), Some(11));
        assert_eq!(big.position(11), Some((3, 3)));
        let column: SYTableau = (1..=10).map(|i| i.to_string()).collect::<Vec<_>>().join("/").parse().unwrap();
        assert_eq!(column.label().parse::<SYTableau>().unwrap(), column);
        assert!("112/23".parse::<SSYTableau>().is_ok());
        assert!("12/12".parse::<SSYTableau>().is_err());
        assert_eq!("1123/2".parse::<SSYTableau>().unwrap().content(), vec![2, 2, 1]);
    }

    #[test]
    fn hooks() {
        let la = shape(&[5, 4, 4, 2]);
        assert_eq!(hooklengths(&la)[1][1], 5);
        assert_eq!(hooklengths(&shape(&[3, 2])), vec![vec![4, 3, 1], vec![2, 1]]);
        assert_eq!(hooklengths(&shape(&[1])), vec![vec![1]]);
    }

    #[test]
    fn hooklength_counts() {
        assert_eq!(count_syt(&shape(&[3, 2])), BigUint::from(5u32));
        assert_eq!(count_syt(&shape(&[7])), BigUint::from(1u32));
        assert_eq!(count_syt(&shape(&[3, 3])), BigUint::from(5u32));
        assert_eq!(count_syt(&Partition::rectangle(4, 4)), BigUint::from(24024u32));
    }

    #[test]
    fn q_hooklength() {
        assert_eq!(q_count_syt(&shape(&[3, 2])).unwrap(), IntPolynomial::from_i64s(&[1, 1, 1, 1, 1]));
        assert_eq!(q_count_syt(&shape(&[4])).unwrap(), IntPolynomial::one());
        let c3 = q_count_syt(&shape(&[3, 3])).unwrap();
        assert_eq!(c3, IntPolynomial::from_i64s(&[1, 0, 1, 1, 1, 0, 1]));
        assert_eq!(c3, qpoly::q_catalan(3).unwrap());
    }

    #[test]
    fn q_hooklength_matches_major_index_sum() {
        for n in 0..=7 {
            for la in Partition::all(n) {
                let b: usize = la.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
                let mut coeffs = vec![0i64; n * n + 1];
                for tab in enumerate_syt(&la, 12).unwrap() {
                    coeffs[tab.maj()] += 1;
                }
                let maj_sum = IntPolynomial::from_i64s(&coeffs);
                assert_eq!(maj_sum, q_count_syt(&la).unwrap().shift(b), "{la}");
            }
        }
    }

    #[test]
    fn enumeration() {
        let labels: Vec<String> =
            enumerate_syt(&shape(&[3, 2]), 12).unwrap().iter().map(SYTableau::label).collect();
        assert_eq!(labels, vec!["123/45", "124/35", "125/34", "134/25", "135/24"]);
        assert_eq!(enumerate_syt(&shape(&[1, 1, 1]), 12).unwrap(), vec![t("1/2/3")]);
        assert_eq!(enumerate_syt(&shape(&[2, 2]), 12).unwrap().len(), 2);
        assert!(enumerate_syt(&Partition::rectangle(4, 4), 12).is_err());
        for n in 0..=8 {
            for la in Partition::all(n) {
                let all = enumerate_syt(&la, 12).unwrap();
                assert_eq!(BigUint::from(all.len()), count_syt(&la), "{la}");
            }
        }
    }

    #[test]
    fn promotion_examples() {
        assert_eq!(promote(&t("135/246/7")), t("124/357/6"));
        assert_eq!(promote(&t("12345")), t("12345"));
        let cycle = ["123/456", "125/346", "134/256"];
        for k in 0..3 {
            assert_eq!(promote(&t(cycle[k])), t(cycle[(k + 1) % 3]));
        }
        assert_eq!(promote(&t("124/356")), t("135/246"));
        assert_eq!(promote(&t("135/246")), t("124/356"));
    }

    #[test]
    fn demotion_inverts_promotion() {
        for n in 0..=7 {
            for la in Partition::all(n) {
                for tab in enumerate_syt(&la, 12).unwrap() {
                    assert_eq!(demote(&promote(&tab)), tab);
                    assert_eq!(promote(&demote(&tab)), tab);
                }
            }
        }
    }

    #[test]
    fn haiman_rectangles() {
        for (m, n) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
            for tab in enumerate_syt(&Partition::rectangle(m, n), 12).unwrap() {
                assert_eq!(promote_pow(&tab, m * n), tab);
            }
        }
    }

    #[test]
    fn edelman_greene_staircases() {
        for n in 1..=4 {
            for tab in enumerate_syt(&Partition::staircase(n), 12).unwrap() {
                assert_eq!(promote_pow(&tab, n * (n + 1) / 2), tab.transpose());
            }
        }
    }

    #[test]
    fn evacuation() {
        assert_eq!(evacuate(&t("136/24/5")), t("125/36/4"));
        assert_eq!(evacuate(&t("1")), t("1"));
        for n in 0..=7 {
            for la in Partition::all(n) {
                for tab in enumerate_syt(&la, 12).unwrap() {
                    assert_eq!(evacuate(&evacuate(&tab)), tab);
                }
            }
        }
    }

    #[test]
    fn iota() {
        assert_eq!(pon_wang_iota(&t("136/24/5")).unwrap(), t("1 3 6/2 4 8/5 7 11/9 10 12"));
        assert_eq!(pon_wang_iota(&t("1")).unwrap(), t("1/2"));
        assert!(pon_wang_iota(&t("12/34")).is_err());
        let sc2 = enumerate_syt(&Partition::staircase(2), 12).unwrap();
        for tab in &sc2 {
            assert_eq!(promote(&pon_wang_iota(tab).unwrap()), pon_wang_iota(&promote(tab)).unwrap());
        }
        for n in 1..=4 {
            let mut images: Vec<SYTableau> = enumerate_syt(&Partition::staircase(n), 12)
                .unwrap()
                .iter()
                .map(|x| pon_wang_iota(x).unwrap())
                .collect();
            let count = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), count);
            for (tab, img) in enumerate_syt(&Partition::staircase(n), 12).unwrap().iter().zip(
                enumerate_syt(&Partition::staircase(n), 12).unwrap().iter().map(|x| pon_wang_iota(x).unwrap()),
            ) {
                assert_eq!(promote(&img), pon_wang_iota(&promote(tab)).unwrap());
            }
        }
    }

    #[test]
    fn rsk_examples() {
        let w: Permutation = "31452".parse().unwrap();
        let (p, q) = rsk_word(&w);
        assert_eq!((p.clone(), q.clone()), (t("125/34"), t("134/25")));
        assert_eq!(rsk_word_inverse(&p, &q).unwrap(), w);
        let (p, q) = rsk_word(&Permutation::identity(4));
        assert_eq!((p, q), (t("1234"), t("1234")));

        let m = NonnegMatrix::new(vec![vec![1, 2, 0], vec![1, 0, 1]]).unwrap();
        let (p, q) = rsk_matrix(&m);
        assert_eq!(p, "1123/2".parse().unwrap());
        assert_eq!(q, "1112/2".parse().unwrap());
        assert_eq!(rsk_matrix_inverse(&p, &q, 2, 3).unwrap(), m);

        let (pm, qm) = rsk_matrix(&NonnegMatrix::permutation_matrix(&w));
        let (pw, qw) = rsk_word(&w);
        assert_eq!((pm, qm), (pw.into(), qw.into()));

        let (p, q) = rsk_matrix(&NonnegMatrix::zeros(2, 2));
        assert!(p.rows().is_empty() && q.rows().is_empty());
    }

    #[test]
    fn rsk_word_is_a_bijection() {
        for n in 0..=6 {
            let mut pairs = Vec::new();
            for w in Permutation::all(n) {
                let (p, q) = rsk_word(&w);
                assert_eq!(p.shape(), q.shape());
                assert_eq!(rsk_word_inverse(&p, &q).unwrap(), w);
                pairs.push((p, q));
            }
            let count = pairs.len();
            pairs.sort();
            pairs.dedup();
            assert_eq!(pairs.len(), count);
        }
        for n in 0..=7 {
            let total: BigUint = Partition::all(n).iter().map(|la| count_syt(la).pow(2)).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    fn matrices_with_margins(mu: &[u64], nu: &[u64]) -> Vec<NonnegMatrix> {
        fn go(i: usize, mu: &[u64], nu: &mut Vec<u64>, cur: &mut Vec<Vec<u64>>, out: &mut Vec<NonnegMatrix>) {
            if i == mu.len() {
                if nu.iter().all(|&x| x == 0) {
                    out.push(NonnegMatrix { entries: cur.clone() });
                }
                return;
            }
            fn fill(j: usize, left: u64, row: &mut Vec<u64>, i: usize, mu: &[u64], nu: &mut Vec<u64>, cur: &mut Vec<Vec<u64>>, out: &mut Vec<NonnegMatrix>) {
                if j == nu.len() {
                    if left == 0 {
                        cur.push(row.clone());
                        go(i + 1, mu, nu, cur, out);
                        cur.pop();
                    }
                    return;
                }
                for x in 0..=left.min(nu[j]) {
                    row.push(x);
                    nu[j] -= x;
                    fill(j + 1, left - x, row, i, mu, nu, cur, out);
                    nu[j] += x;
                    row.pop();
                }
            }
            fill(0, mu[i], &mut Vec::new(), i, mu, nu, cur, out);
        }
        let mut out = Vec::new();
        go(0, mu, &mut nu.to_vec(), &mut Vec::new(), &mut out);
        out
    }

    fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn rsk_matrix_is_a_bijection_on_each_margin_class() {
        for total in 0..=6u64 {
            for (r, c) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
                for mu in compositions(total, r) {
                    for nu in compositions(total, c) {
                        let mut seen = Vec::new();
                        for m in matrices_with_margins(&mu, &nu) {
                            assert_eq!(m.row_sums(), mu);
                            let (p, q) = rsk_matrix(&m);
                            assert_eq!(p.shape(), q.shape());
                            let ct = |v: Vec<usize>, len: usize| {
                                let mut v: Vec<u64> = v.into_iter().map(|x| x as u64).collect();
                                v.resize(len, 0);
                                v
                            };
                            assert_eq!(ct(p.content(), c), nu);
                            assert_eq!(ct(q.content(), r), mu);
                            assert_eq!(rsk_matrix_inverse(&p, &q, r, c).unwrap(), m);
                            seen.push((p, q));
                        }
                        let count = seen.len();
                        seen.sort();
                        seen.dedup();
                        assert_eq!(seen.len(), count);
                    }
                }
            }
        }
    }

    #[test]
    fn ballot_words() {
        assert_eq!(ballot_sequence(&t("135/246/7")), vec![1, 2, 1, 2, 1, 2, 3]);
        assert_eq!(ballot_sequence(&t("1234")), vec![1, 1, 1, 1]);
        assert_eq!(ballot_sequence(&t("12/34")), vec![1, 1, 2, 2]);
        for la in Partition::all(6) {
            for tab in enumerate_syt(&la, 12).unwrap() {
                assert!(is_ballot(&ballot_sequence(&tab)));
            }
        }
        assert!(!is_ballot(&[1, 2, 2]));
    }

    #[test]
    fn matchings_from_two_row_tableaux() {
        assert_eq!(tableau_to_matching(&t("1245/3678")).unwrap().label(), "18,23,47,56");
        assert_eq!(tableau_to_matching(&t("12/34")).unwrap().label(), "14,23");
        assert!(tableau_to_matching(&t("123/45")).is_err());
        let mut images: Vec<String> = enumerate_syt(&Partition::rectangle(2, 3), 12)
            .unwrap()
            .iter()
            .map(|x| tableau_to_matching(x).unwrap().label())
            .collect();
        images.sort();
        assert_eq!(images, vec!["12,34,56", "12,36,45", "14,23,56", "16,23,45", "16,25,34"]);
    }

    #[test]
    fn promotion_is_clockwise_rotation_on_matchings() {
        for n in 0..=6 {
            for tab in enumerate_syt(&Partition::rectangle(2, n), 12).unwrap() {
                let m = tableau_to_matching(&tab).unwrap();
                assert_eq!(matching_to_tableau(&m).unwrap(), tab);
                assert_eq!(tableau_to_matching(&promote(&tab)).unwrap(), m.rotated(-1));
            }
        }
    }
}
