use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(n^m)`: `m` rows of length `n`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition(Vec::new());
        }
        Partition(vec![cols; rows])
    }

    /// `(n, n-1, ..., 1)`
    pub fn staircase(n: usize) -> Self {
        Partition((1..=n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.row_len(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        col < self.row_len(row)
    }

    /// Cells `(row, col)` in reading order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Cells with no cell to the right or below, 0-based.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.row_len(i + 1) < self.row_len(i))
            .map(|i| (i, self.row_len(i) - 1))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `3,2,1`, `(3,2,1)` or `3 2 1`.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| PartitionError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}
