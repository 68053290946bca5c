//! Cyclic actions as index permutations, orbit censuses, and the two
//! equivalent checks of the sieving identity `#X^g = f(omega_o(g))`.

mod bicsp;
mod block;
pub mod registry;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalan::CatalanError;
use crate::numbers::{element_order, gcd};
use crate::perms::PermError;
use crate::qpoly::{CyclotomicResidue, IntPolynomial, QPolyError};
use crate::tableaux::TableauError;

pub use bicsp::{verify_bicsp, BicspCell, BicspReport};
pub use block::verify_block_partition;
pub use registry::{Caps, Family, PlethysmKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} needs parameter --{param}")]
    MissingParam { family: String, param: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded { what: String, value: String, cap: String },
    #[error("generator {0} does not act nearly freely")]
    NotNearlyFree(String),
    #[error("generator is not a permutation of the {0} objects")]
    NotABijection(usize),
    #[error("the action does not map the set to itself: {0} leaves it")]
    NotClosed(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("generator order {perm_order} does not divide the group order {group_order}")]
    OrderMismatch { perm_order: u64, group_order: u64 },
    #[error("f(1) = {value} but the set has {size} elements")]
    SizeMismatch { size: usize, value: String },
    #[error("the two generators do not commute")]
    NonCommutingActions,
    #[error("statistic generating function {found} differs from {expected}")]
    StatisticMismatch { expected: String, found: String },
    #[error("blocks do not partition the {0} indices")]
    InvalidBlocks(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Catalan(#[from] CatalanError),
    #[error(transparent)]
    QPoly(#[from] QPolyError),
}

impl SieveError {
    /// Errors that signal a broken invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            SieveError::SizeMismatch { .. }
                | SieveError::NotABijection(_)
                | SieveError::NotClosed(_)
                | SieveError::DuplicateLabel(_)
                | SieveError::OrderMismatch { .. }
                | SieveError::QPoly(_)
        )
    }
}

/// `g^k` for an index permutation, by repeated squaring.
fn perm_pow(g: &[usize], mut k: u64) -> Vec<usize> {
    let mut result: Vec<usize> = (0..g.len()).collect();
    let mut base = g.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            result = result.iter().map(|&i| base[i]).collect();
        }
        base = base.iter().map(|&i| base[i]).collect();
        k >>= 1;
    }
    result
}

fn perm_order(g: &[usize]) -> u64 {
    let mut seen = vec![false; g.len()];
    let mut order = 1u64;
    for start in 0..g.len() {
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = g[i];
            len += 1;
        }
        if len > 0 {
            order = order / gcd(order, len) * len;
        }
    }
    order
}

/// A cyclic group of order `group_order` acting on labelled objects through
/// the powers of one generator. The generator may act non-faithfully, so
/// its order as a permutation only has to divide `group_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    labels: Vec<String>,
    generator: Vec<usize>,
    group_order: u64,
}

impl CyclicAction {
    pub fn new(labels: Vec<String>, generator: Vec<usize>, group_order: u64) -> Result<Self, SieveError> {
        let size = labels.len();
        let mut seen = vec![false; size];
        if generator.len() != size {
            return Err(SieveError::NotABijection(size));
        }
        for &i in &generator {
            if i >= size || seen[i] {
                return Err(SieveError::NotABijection(size));
            }
            seen[i] = true;
        }
        let perm_order = perm_order(&generator);
        if group_order == 0 || group_order % perm_order != 0 {
            return Err(SieveError::OrderMismatch { perm_order, group_order });
        }
        Ok(CyclicAction { labels, generator, group_order })
    }

    /// Materializes `act` on `objects`, ordered by label.
    pub fn from_objects<T>(
        objects: Vec<T>,
        label: impl Fn(&T) -> String,
        act: impl Fn(&T) -> T,
        group_order: u64,
    ) -> Result<Self, SieveError> {
        let mut keyed: Vec<(String, T)> = objects.into_iter().map(|o| (label(&o), o)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let mut index = HashMap::with_capacity(keyed.len());
        for (i, (l, _)) in keyed.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(SieveError::DuplicateLabel(l.clone()));
            }
        }
        let generator = keyed
            .iter()
            .map(|(_, o)| {
                let image = label(&act(o));
                index.get(&image).copied().ok_or(SieveError::NotClosed(image))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = keyed.into_iter().map(|(l, _)| l).collect();
        CyclicAction::new(labels, generator, group_order)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generator(&self) -> &[usize] {
        &self.generator
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Order of the generator as a permutation of the objects.
    pub fn permutation_order(&self) -> u64 {
        perm_order(&self.generator)
    }

    /// Index permutation of `generator^j`.
    pub fn power(&self, j: u64) -> Vec<usize> {
        perm_pow(&self.generator, j % self.group_order)
    }

    /// `o(g^j) = order / gcd(order, j)`
    pub fn element_order(&self, j: u64) -> u64 {
        element_order(self.group_order, j)
    }

    /// Number of objects fixed by `generator^j`.
    pub fn fixed_count(&self, j: u64) -> usize {
        self.power(j).iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    pub fn orbits(&self) -> Vec<Orbit> {
        orbit_decompose(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<usize>,
    pub stabilizer_order: u64,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Orbits in order of their smallest member; members in generator order.
pub fn orbit_decompose(action: &CyclicAction) -> Vec<Orbit> {
    let mut seen = vec![false; action.size()];
    let mut out = Vec::new();
    for start in 0..action.size() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            members.push(i);
            i = action.generator[i];
        }
        let stabilizer_order = action.group_order / members.len() as u64;
        out.push(Orbit { members, stabilizer_order });
    }
    out
}

pub fn fixed_count(action: &CyclicAction, j: u64) -> usize {
    action.fixed_count(j)
}

/// A candidate sieving triple together with where it came from.
#[derive(Clone, Debug)]
pub struct CspInstance {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub action: CyclicAction,
    pub polynomial: IntPolynomial,
}

impl CspInstance {
    pub fn new(
        family: impl Into<String>,
        params: BTreeMap<String, String>,
        action: CyclicAction,
        polynomial: IntPolynomial,
    ) -> Result<Self, SieveError> {
        let value = polynomial.eval_at_one();
        if value != BigInt::from(action.size()) {
            return Err(SieveError::SizeMismatch { size: action.size(), value: value.to_string() });
        }
        Ok(CspInstance { family: family.into(), params, action, polynomial })
    }

    /// Test hook: the same instance with coefficient `i` increased by one.
    /// The result deliberately breaks `f(1) = #X`.
    pub fn corrupted(&self, i: usize) -> Self {
        CspInstance { polynomial: self.polynomial.bump_coeff(i), ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Checker {
    Roots,
    Orbits,
    Both,
}

impl std::str::FromStr for Checker {
    type Err = SieveError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "roots" => Ok(Checker::Roots),
            "orbits" => Ok(Checker::Orbits),
            "both" => Ok(Checker::Both),
            _ => Err(SieveError::InvalidParams(format!("unknown checker {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// One group element `g^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub j: u64,
    pub elem_order: u64,
    pub fixed: u64,
    /// `f(omega)` as a decimal integer, or `nonint:<residue>` when the value
    /// is not a rational integer.
    pub eval: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// One residue class `i` of exponents mod the group order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueRow {
    pub i: u64,
    pub a: i64,
    pub census: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Number of orbits with a given size and stabilizer order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub size: u64,
    pub stab: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub size: u64,
    pub order: u64,
    pub polynomial: String,
    pub checker: Checker,
    pub rows: Vec<RootRow>,
    pub orbits: Vec<OrbitClass>,
    pub a: Vec<i64>,
    pub census: Vec<ResidueRow>,
    pub roots_verdict: Option<Verdict>,
    pub orbits_verdict: Option<Verdict>,
    pub verdict: Verdict,
}

/// Compares `#X^{g^j}` with `f(omega_{o(g^j)})` for every `j`, in ascending
/// `j`.
pub fn verify_csp_roots(inst: &CspInstance) -> Vec<RootRow> {
    let action = &inst.action;
    (0..action.group_order)
        .into_par_iter()
        .map(|j| {
            let d = action.element_order(j);
            let fixed = action.fixed_count(j) as u64;
            let value = CyclotomicResidue::reduce(&inst.polynomial, d);
            let (eval, matches) = match value.as_integer() {
                Some(v) => (v.to_string(), v == BigInt::from(fixed)),
                None => (format!("nonint:{}", value.residue()), false),
            };
            RootRow { j, elem_order: d, fixed, eval, matches }
        })
        .collect()
}

/// `#{orbits O : s(O) | i}`, with every `s` dividing 0.
pub fn orbit_census(action: &CyclicAction) -> Vec<u64> {
    let stabs: Vec<u64> = orbit_decompose(action).iter().map(|o| o.stabilizer_order).collect();
    (0..action.group_order)
        .map(|i| stabs.iter().filter(|&&s| i % s == 0).count() as u64)
        .collect()
}

/// Compares `f mod (1 - q^order)` coefficientwise with the orbit census.
pub fn verify_csp_orbits(inst: &CspInstance) -> Vec<ResidueRow> {
    let folded = inst.polynomial.fold_mod(inst.action.group_order as usize);
    orbit_census(&inst.action)
        .into_iter()
        .zip(folded)
        .enumerate()
        .map(|(i, (census, a))| ResidueRow {
            i: i as u64,
            matches: a == BigInt::from(census),
            a: a.to_i64().unwrap_or(i64::MAX),
            census,
        })
        .collect()
}

pub fn orbit_histogram(action: &CyclicAction) -> Vec<OrbitClass> {
    let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for o in orbit_decompose(action) {
        *counts.entry((o.len() as u64, o.stabilizer_order)).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((size, stab), count)| OrbitClass { size, stab, count })
        .collect()
}

/// Runs the selected checkers and assembles the report.
pub fn check(inst: &CspInstance, checker: Checker) -> CspReport {
    let action = &inst.action;
    let run_roots = checker != Checker::Orbits;
    let run_orbits = checker != Checker::Roots;
    let rows = if run_roots { verify_csp_roots(inst) } else { Vec::new() };
    let census = if run_orbits { verify_csp_orbits(inst) } else { Vec::new() };
    let roots_verdict = run_roots.then(|| Verdict::from_bool(rows.iter().all(|r| r.matches)));
    let orbits_verdict = run_orbits.then(|| Verdict::from_bool(census.iter().all(|r| r.matches)));
    let verdict = Verdict::from_bool(
        roots_verdict.is_none_or(Verdict::passed) && orbits_verdict.is_none_or(Verdict::passed),
    );
    CspReport {
        family: inst.family.clone(),
        params: inst.params.clone(),
        size: action.size() as u64,
        order: action.group_order,
        polynomial: inst.polynomial.to_string(),
        checker,
        rows,
        orbits: orbit_histogram(action),
        a: census.iter().map(|r| r.a).collect(),
        census,
        roots_verdict,
        orbits_verdict,
        verdict,
    }
}
