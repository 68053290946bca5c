//! Noncrossing set partitions, noncrossing perfect matchings, and polygon
//! triangulations, with rotation actions and the Catalan-type counts.
//!
//! Every object is kept in canonical form (sorted blocks, sorted edges,
//! normalized diagonals) so that structural equality is object equality.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::numbers::binomial;

/// Default upper bound on `n` for the enumerations in this module.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalanError {
    #[error("blocks {0:?} do not partition [{1}]")]
    NotAPartition(Vec<Vec<usize>>, usize),
    #[error("edges {0:?} are not a perfect matching")]
    NotAMatching(Vec<(usize, usize)>),
    #[error("diagonals {0:?} do not triangulate the {1}-gon")]
    NotATriangulation(Vec<(usize, usize)>, usize),
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Rotation by the `step`-th power of the long cycle `(1, 2, ..., n)`.
fn rotate_point(i: usize, n: usize, step: i64) -> usize {
    ((i as i64 - 1 + step).rem_euclid(n as i64) + 1) as usize
}

fn pair_label(a: usize, b: usize) -> String {
    crate::compact_join(&[a, b])
}

fn check_cap(n: usize, cap: usize) -> Result<(), CatalanError> {
    if n > cap {
        Err(CatalanError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, CatalanError> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(CatalanError::NotAPartition(blocks, n));
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(CatalanError::NotAPartition(blocks, n));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(CatalanError::NotAPartition(blocks, n));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(self)
    }

    pub fn rotated(&self, step: i64) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| rotate_point(x, self.n, step)).collect())
            .collect();
        SetPartition::new(self.n, blocks).expect("rotation preserves partitions")
    }

    /// Blocks as compact strings joined by commas, e.g. `1,23`.
    pub fn label(&self) -> String {
        self.blocks
            .iter()
            .map(|b| crate::compact_join(b))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// No `a < c < b < d` with `a, b` in one block and `c, d` in another.
pub fn is_noncrossing(pi: &SetPartition) -> bool {
    let mut block_of = vec![0; pi.n + 1];
    for (k, b) in pi.blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = k;
        }
    }
    let n = pi.n;
    for a in 1..=n {
        for c in a + 1..=n {
            if block_of[c] == block_of[a] {
                continue;
            }
            for b in c + 1..=n {
                if block_of[b] != block_of[a] {
                    continue;
                }
                for d in b + 1..=n {
                    if block_of[d] == block_of[c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every set partition of `[n]`, from restricted growth strings.
pub fn enumerate_set_partitions(n: usize) -> Vec<SetPartition> {
    fn go(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if i == n {
            let mut blocks = vec![Vec::new(); max];
            for (x, &b) in rgs.iter().enumerate() {
                blocks[b].push(x + 1);
            }
            out.push(SetPartition { n, blocks });
            return;
        }
        for b in 0..=max {
            rgs.push(b);
            go(i + 1, n, rgs, max.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Noncrossing partitions of `elems`: the first element is either a
/// singleton, or joined to a later `elems[j]`, splitting the rest into the
/// stretch strictly between them and the stretch from `elems[j]` on.
fn nc_partitions_of(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = elems.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for mut p in nc_partitions_of(rest) {
        p.push(vec![first]);
        out.push(p);
    }
    for j in 1..elems.len() {
        let inner = nc_partitions_of(&elems[1..j]);
        let outer = nc_partitions_of(&elems[j..]);
        for a in &inner {
            for b in &outer {
                let mut p = a.clone();
                for block in b {
                    let mut block = block.clone();
                    if block.contains(&elems[j]) {
                        block.push(first);
                    }
                    p.push(block);
                }
                out.push(p);
            }
        }
    }
    out
}

pub fn enumerate_nc_partitions(n: usize, cap: usize) -> Result<Vec<SetPartition>, CatalanError> {
    check_cap(n, cap)?;
    let elems: Vec<usize> = (1..=n).collect();
    let mut out: Vec<SetPartition> = nc_partitions_of(&elems)
        .into_iter()
        .map(|blocks| SetPartition::new(n, blocks).expect("generator yields partitions"))
        .collect();
    out.sort();
    Ok(out)
}

/// Perfect matching of `[2n]`; edges `(a, b)` with `a < b`, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self, CatalanError> {
        let points = 2 * edges.len();
        let mut seen = vec![false; points + 1];
        for &(a, b) in &edges {
            for x in [a, b] {
                if x == 0 || x > points || seen[x] {
                    return Err(CatalanError::NotAMatching(edges));
                }
                seen[x] = true;
            }
        }
        let mut edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of matched points, `2n`.
    pub fn points(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn is_noncrossing(&self) -> bool {
        self.edges.iter().all(|&(a, b)| {
            self.edges
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    pub fn partner(&self, x: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn rotated(&self, step: i64) -> Self {
        let n = self.points();
        Matching::new(
            self.edges
                .iter()
                .map(|&(a, b)| (rotate_point(a, n, step), rotate_point(b, n, step)))
                .collect(),
        )
        .expect("rotation preserves matchings")
    }

    /// Edges as compact pairs joined by commas, e.g. `18,23,47,56`.
    pub fn label(&self) -> String {
        self.edges
            .iter()
            .map(|&(a, b)| pair_label(a, b))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Noncrossing perfect matchings on `[2n]`.
pub fn enumerate_nc_matchings(n: usize, cap: usize) -> Result<Vec<Matching>, CatalanError> {
    fn go(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        // points lo..hi (exclusive), even count
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for partner in (lo + 1..hi).step_by(2) {
            for inside in go(lo + 1, partner) {
                for outside in go(partner + 1, hi) {
                    let mut e = vec![(lo, partner)];
                    e.extend(inside.iter().copied());
                    e.extend(outside);
                    out.push(e);
                }
            }
        }
        out
    }
    check_cap(n, cap)?;
    let mut out: Vec<Matching> = go(1, 2 * n + 1)
        .into_iter()
        .map(|e| Matching::new(e).expect("generator yields matchings"))
        .collect();
    out.sort();
    Ok(out)
}

/// Triangulation of a convex `n`-gon with vertices `1..=n` in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

fn is_side(a: usize, b: usize, n: usize) -> bool {
    b == a + 1 || (a == 1 && b == n)
}

fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    pub fn new(n: usize, diagonals: Vec<(usize, usize)>) -> Result<Self, CatalanError> {
        let bad = |d: &Vec<(usize, usize)>| CatalanError::NotATriangulation(d.clone(), n);
        if n < 3 || diagonals.len() != n - 3 {
            return Err(bad(&diagonals));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in &diagonals {
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || b > n || a == b || is_side(a, b, n) || !set.insert((a, b)) {
                return Err(bad(&diagonals));
            }
        }
        for &x in &set {
            if set.iter().any(|&y| chords_cross(x, y)) {
                return Err(bad(&diagonals));
            }
        }
        Ok(Triangulation { n, diagonals: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.diagonals.iter().copied()
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        is_side(a, b, self.n) || self.diagonals.contains(&(a, b))
    }

    /// The `n - 2` triangles, as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if !self.is_edge(a, b) {
                    continue;
                }
                for c in b + 1..=n {
                    if self.is_edge(a, c) && self.is_edge(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// One step sends vertex `i` to `i + 1` (mod `n`), a clockwise turn.
    pub fn rotated(&self, step: i64) -> Self {
        let diagonals = self
            .diagonals
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (rotate_point(a, self.n, step), rotate_point(b, self.n, step));
                (x.min(y), x.max(y))
            })
            .collect();
        Triangulation { n: self.n, diagonals }
    }

    /// Diagonals as compact pairs joined by commas; the triangle is `-`.
    pub fn label(&self) -> String {
        if self.diagonals.is_empty() {
            return "-".into();
        }
        self.diagonals
            .iter()
            .map(|&(a, b)| pair_label(a, b))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All triangulations of the convex `n`-gon (`n >= 3`).
pub fn enumerate_triangulations(n: usize, cap: usize) -> Result<Vec<Triangulation>, CatalanError> {
    fn go(verts: &[usize], n: usize) -> Vec<Vec<(usize, usize)>> {
        if verts.len() < 3 {
            return vec![Vec::new()];
        }
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        let mut out = Vec::new();
        // apex of the triangle resting on the edge first..last
        for k in 1..verts.len() - 1 {
            let apex = verts[k];
            for left in go(&verts[..=k], n) {
                for right in go(&verts[k..], n) {
                    let mut d = left.clone();
                    d.extend(right.iter().copied());
                    for (a, b) in [(first, apex), (apex, last)] {
                        if !is_side(a, b, n) {
                            d.push((a, b));
                        }
                    }
                    out.push(d);
                }
            }
        }
        out
    }
    check_cap(n, cap)?;
    if n < 3 {
        return Ok(Vec::new());
    }
    let verts: Vec<usize> = (1..=n).collect();
    let mut out: Vec<Triangulation> = go(&verts, n)
        .into_iter()
        .map(|d| Triangulation::new(n, d).expect("generator yields triangulations"))
        .collect();
    out.sort();
    Ok(out)
}

/// Vertices are colored `1, 2, 1, 2, ...` clockwise from vertex 1; proper
/// means no triangle has all three vertices the same color.
pub fn is_proper_triangulation(t: &Triangulation) -> bool {
    t.triangles()
        .iter()
        .all(|tri| !(tri[0] % 2 == tri[1] % 2 && tri[1] % 2 == tri[2] % 2))
}

pub fn catalan_number(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `Cat_{n,m} = C((m+1)n, n) / (mn + 1)`
pub fn fuss_catalan(n: u64, m: u64) -> BigUint {
    binomial((m + 1) * n, n) / (m * n + 1)
}

/// Number of proper triangulations of the `(big_n + 2)`-gon.
pub fn proper_count(big_n: u64) -> BigUint {
    let n = big_n / 2;
    if big_n % 2 == 0 {
        (BigUint::from(2u32).pow(n as u32) * binomial(3 * n, n)) / (2 * n + 1)
    } else {
        (BigUint::from(2u32).pow(n as u32 + 1) * binomial(3 * n + 1, n)) / (2 * n + 2)
    }
}
