//! The catalogue of sieving families: each builds its set, generator and
//! polynomial from a handful of integer parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{CspInstance, CyclicAction, SieveError};
use crate::catalan::{self, Matching, SetPartition, Triangulation};
use crate::numbers::{binomial, factorial, multichoose};
use crate::partition::Partition;
use crate::perms::{self, nearly_free_kind, ActionKind, Permutation};
use crate::qpoly::{self, IntPolynomial};
use crate::tableaux::{self, SYTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest allowed `#X`.
    pub size: u64,
    /// Largest allowed group order.
    pub order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { size: 200_000, order: 10_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlethysmKind {
    /// `h_k[f]`: `k`-multisets of the base set.
    H,
    /// `e_k[f]`: `k`-subsets of the base set.
    E,
}

impl FromStr for PlethysmKind {
    type Err = SieveError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "h" => Ok(PlethysmKind::H),
            "e" => Ok(PlethysmKind::E),
            _ => Err(SieveError::InvalidParams(format!("plethysm kind must be h or e, got {s:?}"))),
        }
    }
}

impl fmt::Display for PlethysmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlethysmKind::H => "h",
            PlethysmKind::E => "e",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `[n]` under the long cycle, with `[n]_q`.
    Cycle { n: usize },
    Multiset { n: usize, k: usize, gen: Option<Permutation> },
    Subset { n: usize, k: usize, gen: Option<Permutation> },
    /// Tableaux of the `m x n` rectangle (`m` rows) under promotion.
    SytRect { m: usize, n: usize },
    /// Noncrossing perfect matchings of `[2n]` under rotation.
    Ncm { n: usize },
    /// Noncrossing partitions of `[n]` under rotation.
    Ncp { n: usize },
    /// Triangulations of the `(n + 2)`-gon under rotation.
    Triangulation { n: usize },
    /// A conjugacy class of `S_n` under conjugation by the long cycle.
    ConjClass { lambda: Partition },
    /// Proper triangulations of the `(n + 2)`-gon, `n` even.
    ProperTriangulation { n: usize },
    /// Induced action on `k`-multisets (`h`) or `k`-subsets (`e`) of a base
    /// family.
    Plethysm { base: Box<Family>, k: usize, kind: PlethysmKind },
}

pub struct FamilyInfo {
    pub id: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { id: "cycle", params: "--n N (N >= 1)", summary: "[n] under rotation; f = [n]_q" },
    FamilyInfo {
        id: "multiset",
        params: "--n N (N >= 1) --k K [--gen G, nearly free on [N]]",
        summary: "k-multisets of [n]; f = [n+k-1 choose k]_q",
    },
    FamilyInfo {
        id: "subset",
        params: "--n N (N >= 1) --k K [--gen G, nearly free on [N]]",
        summary: "k-subsets of [n]; f = [n choose k]_q",
    },
    FamilyInfo {
        id: "syt_rect",
        params: "--m ROWS --n COLS (both >= 1)",
        summary: "standard tableaux of a rectangle under promotion; f = q-hooklength",
    },
    FamilyInfo {
        id: "ncm",
        params: "--n N (N >= 1)",
        summary: "noncrossing matchings of [2n] under rotation; f = f^(n,n)(q)",
    },
    FamilyInfo { id: "ncp", params: "--n N (N >= 1)", summary: "noncrossing partitions of [n] under rotation; f = Cat_n(q)" },
    FamilyInfo {
        id: "triangulation",
        params: "--n N (N >= 1)",
        summary: "triangulations of the (n+2)-gon under rotation; f = Cat_n(q)",
    },
    FamilyInfo {
        id: "conj_class",
        params: "--lambda L (partition of n <= 8)",
        summary: "cycle type class under conjugation by (1..n); f = maj/exc generating function at t = 1/q",
    },
    FamilyInfo {
        id: "proper_triangulation",
        params: "--n N (even, N >= 2)",
        summary: "2-colored proper triangulations of the (N+2)-gon under rotation",
    },
    FamilyInfo {
        id: "plethysm",
        params: "--base FAMILY:key=val,... --k K --kind h|e",
        summary: "k-multisets (h) or k-subsets (e) of a base family; f = h_k[f] or e_k[f]",
    },
];

fn need<T: FromStr>(family: &str, params: &BTreeMap<String, String>, key: &str) -> Result<T, SieveError> {
    let raw = params.get(key).ok_or_else(|| SieveError::MissingParam {
        family: family.into(),
        param: key.into(),
    })?;
    raw.parse()
        .map_err(|_| SieveError::InvalidParams(format!("--{key} {raw:?} is not valid")))
}

fn positive(value: usize, what: &str) -> Result<usize, SieveError> {
    if value == 0 {
        Err(SieveError::InvalidParams(format!("{what} must be at least 1")))
    } else {
        Ok(value)
    }
}

/// Cycle notation like `(1,2)(3,4)` or one-line notation, on `[n]`.
fn parse_generator(s: &str, n: usize) -> Result<Permutation, SieveError> {
    if s.trim_start().starts_with('(') {
        Ok(Permutation::parse_cycles(s, n)?)
    } else {
        Ok(s.parse::<Permutation>()?.extend_to(n)?)
    }
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Multiset { .. } => "multiset",
            Family::Subset { .. } => "subset",
            Family::SytRect { .. } => "syt_rect",
            Family::Ncm { .. } => "ncm",
            Family::Ncp { .. } => "ncp",
            Family::Triangulation { .. } => "triangulation",
            Family::ConjClass { .. } => "conj_class",
            Family::ProperTriangulation { .. } => "proper_triangulation",
            Family::Plethysm { .. } => "plethysm",
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            p.insert(k.to_string(), v);
        };
        match self {
            Family::Cycle { n }
            | Family::Ncm { n }
            | Family::Ncp { n }
            | Family::Triangulation { n }
            | Family::ProperTriangulation { n } => put("n", n.to_string()),
            Family::Multiset { n, k, gen } | Family::Subset { n, k, gen } => {
                put("n", n.to_string());
                put("k", k.to_string());
                if let Some(g) = gen {
                    put("gen", g.cycle_notation());
                }
            }
            Family::SytRect { m, n } => {
                put("m", m.to_string());
                put("n", n.to_string());
            }
            Family::ConjClass { lambda } => {
                put("lambda", lambda.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            }
            Family::Plethysm { base, k, kind } => {
                put("base", base.to_string());
                put("k", k.to_string());
                put("kind", kind.to_string());
            }
        }
        p
    }

    pub fn from_params(id: &str, params: &BTreeMap<String, String>) -> Result<Self, SieveError> {
        let allowed: &[&str] = match id {
            "cycle" | "ncm" | "ncp" | "triangulation" | "proper_triangulation" => &["n"],
            "multiset" | "subset" => &["n", "k", "gen"],
            "syt_rect" => &["m", "n"],
            "conj_class" => &["lambda"],
            "plethysm" => &["base", "k", "kind"],
            _ => return Err(SieveError::UnknownFamily(id.to_string())),
        };
        if let Some(extra) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(SieveError::InvalidParams(format!("{id} does not take --{extra}")));
        }
        let n = || need::<usize>(id, params, "n");
        Ok(match id {
            "cycle" => Family::Cycle { n: positive(n()?, "n")? },
            "multiset" | "subset" => {
                let n = positive(n()?, "n")?;
                let k = need(id, params, "k")?;
                let gen = params.get("gen").map(|g| parse_generator(g, n)).transpose()?;
                if id == "multiset" {
                    Family::Multiset { n, k, gen }
                } else {
                    Family::Subset { n, k, gen }
                }
            }
            "syt_rect" => Family::SytRect {
                m: positive(need(id, params, "m")?, "m")?,
                n: positive(n()?, "n")?,
            },
            "ncm" => Family::Ncm { n: positive(n()?, "n")? },
            "ncp" => Family::Ncp { n: positive(n()?, "n")? },
            "triangulation" => Family::Triangulation { n: positive(n()?, "n")? },
            "conj_class" => {
                let lambda: Partition = need(id, params, "lambda")?;
                if lambda.is_empty() {
                    return Err(SieveError::InvalidParams("lambda must be nonempty".into()));
                }
                Family::ConjClass { lambda }
            }
            "proper_triangulation" => {
                let n = n()?;
                if n == 0 || n % 2 == 1 {
                    return Err(SieveError::InvalidParams(format!(
                        "proper_triangulation needs an even n >= 2 (odd polygons have no rotation action), got {n}"
                    )));
                }
                Family::ProperTriangulation { n }
            }
            "plethysm" => Family::Plethysm {
                base: Box::new(need(id, params, "base")?),
                k: need(id, params, "k")?,
                kind: need(id, params, "kind")?,
            },
            _ => unreachable!("checked above"),
        })
    }

    pub fn group_order(&self) -> u64 {
        match self {
            Family::Cycle { n } | Family::Ncp { n } => *n as u64,
            Family::Multiset { n, gen, .. } | Family::Subset { n, gen, .. } => {
                gen.as_ref().map_or(*n as u64, Permutation::order)
            }
            Family::SytRect { m, n } => (m * n) as u64,
            Family::Ncm { n } => 2 * *n as u64,
            Family::Triangulation { n } | Family::ProperTriangulation { n } => *n as u64 + 2,
            Family::ConjClass { lambda } => lambda.size() as u64,
            Family::Plethysm { base, .. } => base.group_order(),
        }
    }

    /// `#X`, computed from a closed formula before anything is enumerated.
    pub fn expected_size(&self) -> BigUint {
        let u = |x: usize| x as u64;
        match self {
            Family::Cycle { n } => BigUint::from(*n),
            Family::Multiset { n, k, .. } => multichoose(u(*n), u(*k)),
            Family::Subset { n, k, .. } => binomial(u(*n), u(*k)),
            Family::SytRect { m, n } => tableaux::count_syt(&Partition::rectangle(*m, *n)),
            Family::Ncm { n } | Family::Ncp { n } | Family::Triangulation { n } => {
                catalan::catalan_number(u(*n))
            }
            Family::ConjClass { lambda } => {
                let mut z = BigUint::from(1u32);
                let mut i = 0;
                while i < lambda.len() {
                    let part = lambda.parts()[i];
                    let mult = lambda.parts().iter().filter(|&&p| p == part).count();
                    z *= BigUint::from(part).pow(mult as u32) * factorial(mult as u64);
                    i += mult;
                }
                factorial(u(lambda.size())) / z
            }
            Family::ProperTriangulation { n } => catalan::proper_count(u(*n)),
            Family::Plethysm { base, k, kind } => {
                let b = base.expected_size().to_u64().unwrap_or(u64::MAX);
                match kind {
                    PlethysmKind::H => multichoose(b, u(*k)),
                    PlethysmKind::E => binomial(b, u(*k)),
                }
            }
        }
    }

    fn check_caps(&self, caps: &Caps) -> Result<(), SieveError> {
        let order = self.group_order();
        if order > caps.order {
            return Err(SieveError::CapExceeded {
                what: "group order".into(),
                value: order.to_string(),
                cap: caps.order.to_string(),
            });
        }
        let size = self.expected_size();
        if size > BigUint::from(caps.size) {
            return Err(SieveError::CapExceeded {
                what: "#X".into(),
                value: size.to_string(),
                cap: caps.size.to_string(),
            });
        }
        if let Family::Plethysm { base, .. } = self {
            base.check_caps(caps)?;
        }
        Ok(())
    }

    pub fn instantiate(&self, caps: &Caps) -> Result<CspInstance, SieveError> {
        self.check_caps(caps)?;
        let order = self.group_order();
        let (action, f) = match self {
            Family::Cycle { n } => {
                let action = CyclicAction::from_objects(
                    (1..=*n).collect(),
                    |i: &usize| i.to_string(),
                    |i| i % n + 1,
                    order,
                )?;
                (action, qpoly::q_int(*n))
            }
            Family::Multiset { n, k, gen } | Family::Subset { n, k, gen } => {
                let g = match gen {
                    Some(g) => {
                        if nearly_free_kind(g, *n)? == ActionKind::Neither {
                            return Err(SieveError::NotNearlyFree(g.cycle_notation()));
                        }
                        g.clone()
                    }
                    None => Permutation::long_cycle(*n),
                };
                let multi = matches!(self, Family::Multiset { .. });
                let objects = if multi { multisets(*n, *k) } else { subsets(*n, *k) };
                let action = CyclicAction::from_objects(
                    objects,
                    |s: &Vec<usize>| set_label(s),
                    |s| {
                        let mut image: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
                        image.sort_unstable();
                        image
                    },
                    order,
                )?;
                let f = if multi {
                    qpoly::gaussian_binomial(n + k - 1, *k as i64)
                } else {
                    qpoly::gaussian_binomial(*n, *k as i64)
                };
                (action, f)
            }
            Family::SytRect { m, n } => {
                let shape = Partition::rectangle(*m, *n);
                let action = CyclicAction::from_objects(
                    tableaux::enumerate_syt(&shape, usize::MAX)?,
                    SYTableau::label,
                    tableaux::promote,
                    order,
                )?;
                (action, tableaux::q_count_syt(&shape)?)
            }
            Family::Ncm { n } => {
                let action = CyclicAction::from_objects(
                    catalan::enumerate_nc_matchings(*n, usize::MAX)?,
                    Matching::label,
                    |m| m.rotated(1),
                    order,
                )?;
                (action, tableaux::q_count_syt(&Partition::rectangle(2, *n))?)
            }
            Family::Ncp { n } => {
                let action = CyclicAction::from_objects(
                    catalan::enumerate_nc_partitions(*n, usize::MAX)?,
                    SetPartition::label,
                    |p| p.rotated(1),
                    order,
                )?;
                (action, qpoly::q_catalan(*n)?)
            }
            Family::Triangulation { n } => {
                let action = CyclicAction::from_objects(
                    catalan::enumerate_triangulations(n + 2, usize::MAX)?,
                    Triangulation::label,
                    |t| t.rotated(1),
                    order,
                )?;
                (action, qpoly::q_catalan(*n)?)
            }
            Family::ConjClass { lambda } => {
                let n = lambda.size();
                let c = Permutation::long_cycle(n);
                let class = perms::conjugacy_class(lambda, perms::DEFAULT_CLASS_CAP)?;
                let action = CyclicAction::from_objects(
                    class,
                    |w: &Permutation| w.to_string(),
                    |w| w.conjugate_by(&c),
                    order,
                )?;
                let genfun = perms::maj_exc_genfun(lambda, perms::DEFAULT_CLASS_CAP)?;
                (action, qpoly::subst_t_q_inverse(&genfun).into_polynomial()?)
            }
            Family::ProperTriangulation { n } => {
                let proper: Vec<Triangulation> = catalan::enumerate_triangulations(n + 2, usize::MAX)?
                    .into_iter()
                    .filter(catalan::is_proper_triangulation)
                    .collect();
                let action = CyclicAction::from_objects(proper, Triangulation::label, |t| t.rotated(1), order)?;
                (action, roichman_sagan_poly(n / 2)?)
            }
            Family::Plethysm { base, k, kind } => {
                let base_inst = base.instantiate(caps)?;
                let b = &base_inst.action;
                let objects: Vec<Vec<usize>> = match kind {
                    PlethysmKind::H => multisets(b.size(), *k),
                    PlethysmKind::E => subsets(b.size(), *k),
                };
                let labels = b.labels();
                let gen = b.generator();
                let action = CyclicAction::from_objects(
                    objects,
                    |s: &Vec<usize>| {
                        let parts: Vec<&str> = s.iter().map(|&i| labels[i - 1].as_str()).collect();
                        format!("[{}]", parts.join(" "))
                    },
                    |s| {
                        let mut image: Vec<usize> = s.iter().map(|&i| gen[i - 1] + 1).collect();
                        image.sort_unstable();
                        image
                    },
                    order,
                )?;
                let f = match kind {
                    PlethysmKind::H => qpoly::plethysm_h(*k, &base_inst.polynomial)?,
                    PlethysmKind::E => qpoly::plethysm_e(*k, &base_inst.polynomial)?,
                };
                (action, f)
            }
        };
        CspInstance::new(self.id(), self.params(), action, f)
    }
}

/// `family:key=val,key=val`; a comma-separated piece without `=` continues
/// the previous value, so `conj_class:lambda=2,1` works.
impl FromStr for Family {
    type Err = SieveError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (id, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut params: BTreeMap<String, String> = BTreeMap::new();
        let mut last: Option<String> = None;
        for piece in rest.split(',').filter(|p| !p.is_empty()) {
            match (piece.split_once('='), &last) {
                (Some((k, v)), _) => {
                    params.insert(k.trim().to_string(), v.trim().to_string());
                    last = Some(k.trim().to_string());
                }
                (None, Some(k)) => {
                    let v = params.get_mut(k).expect("previous key present");
                    v.push(',');
                    v.push_str(piece.trim());
                }
                (None, None) => {
                    return Err(SieveError::InvalidParams(format!("cannot parse family spec {s:?}")))
                }
            }
        }
        Family::from_params(id.trim(), &params)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}:{}", self.id(), params.join(","))
    }
}

/// Parses and instantiates in one step.
pub fn instantiate(id: &str, params: &BTreeMap<String, String>, caps: &Caps) -> Result<CspInstance, SieveError> {
    Family::from_params(id, params)?.instantiate(caps)
}

fn set_label(s: &[usize]) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        crate::compact_join(s)
    }
}

/// Weakly increasing `k`-sequences over `1..=n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing `k`-sequences over `1..=n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    multisets(n.saturating_sub(k.saturating_sub(1)), k)
        .into_iter()
        .map(|m| m.iter().enumerate().map(|(i, x)| x + i).collect())
        .collect()
}

/// `[2]_{q^2} ([2]_q^{n-1} - [2]_q^{c-1} + 2^{c-1}) [3n choose n]_q / [2n+1]_q`
/// with `c = ceil(n/2)`: the q-analogue for proper triangulations of the
/// `(2n + 2)`-gon.
pub fn roichman_sagan_poly(n: usize) -> Result<IntPolynomial, SieveError> {
    if n == 0 {
        return Err(SieveError::InvalidParams("the polygon needs at least 4 vertices".into()));
    }
    let two = qpoly::q_int(2);
    let c = n.div_ceil(2);
    let bracket = &(&two.pow(n as u32 - 1) - &two.pow(c as u32 - 1))
        + &IntPolynomial::constant(1i64 << (c - 1));
    let numerator = &(&two.substitute_power(2) * &bracket) * &qpoly::gaussian_binomial(3 * n, n as i64);
    Ok(qpoly::exact_divide(&numerator, &qpoly::q_int(2 * n + 1))?)
}
