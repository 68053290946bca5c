use std::collections::BTreeMap;
use std::fmt::Write;

use csp_lab::sieve::registry::FamilyInfo;
use csp_lab::sieve::{orbit_decompose, CspInstance, CspReport, Verdict};
use serde::Serialize;

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
    }
}

fn params_line(params: &BTreeMap<String, String>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn family_list(families: &[FamilyInfo]) -> String {
    let width = families.iter().map(|f| f.id.len()).max().unwrap_or(0);
    let mut s = String::new();
    for f in families {
        let _ = writeln!(s, "{:width$}  {}", f.id, f.summary);
        let _ = writeln!(s, "{:width$}    {}", "", f.params);
    }
    s
}

pub fn report(r: &CspReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "family: {}  {}", r.family, params_line(&r.params));
    let _ = writeln!(s, "#X = {}, group order {}", r.size, r.order);
    let _ = writeln!(s, "f(q) = {}", r.polynomial);
    if !r.rows.is_empty() {
        let _ = writeln!(s, "{:>6} {:>7} {:>8} {:>10}  match", "j", "o(g^j)", "#X^g", "f(w)");
        for row in &r.rows {
            let _ = writeln!(
                s,
                "{:>6} {:>7} {:>8} {:>10}  {}",
                row.j,
                row.elem_order,
                row.fixed,
                row.eval,
                if row.matches { "yes" } else { "NO" }
            );
        }
    }
    let _ = write!(s, "orbits:");
    for o in &r.orbits {
        let _ = write!(s, " {}x(size {}, stab {})", o.count, o.size, o.stab);
    }
    let _ = writeln!(s);
    if !r.census.is_empty() {
        let join = |v: Vec<String>| v.join(",");
        let _ = writeln!(s, "a      = ({})", join(r.census.iter().map(|c| c.a.to_string()).collect()));
        let _ = writeln!(s, "census = ({})", join(r.census.iter().map(|c| c.census.to_string()).collect()));
        let bad: Vec<String> = r.census.iter().filter(|c| !c.matches).map(|c| c.i.to_string()).collect();
        if !bad.is_empty() {
            let _ = writeln!(s, "mismatched residues: {}", bad.join(","));
        }
    }
    if let Some(v) = r.roots_verdict {
        let _ = writeln!(s, "roots checker: {}", verdict(v));
    }
    if let Some(v) = r.orbits_verdict {
        let _ = writeln!(s, "orbits checker: {}", verdict(v));
    }
    let _ = writeln!(s, "verdict: {}", verdict(r.verdict));
    s
}

#[derive(Serialize)]
pub struct OrbitRow {
    pub size: usize,
    pub stab: u64,
    pub members: Vec<String>,
}

#[derive(Serialize)]
pub struct OrbitTable {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub order: u64,
    pub orbits: Vec<OrbitRow>,
    pub a: Vec<String>,
}

impl OrbitTable {
    pub fn new(inst: &CspInstance) -> Self {
        let labels = inst.action.labels();
        let orbits = orbit_decompose(&inst.action)
            .into_iter()
            .map(|o| OrbitRow {
                size: o.len(),
                stab: o.stabilizer_order,
                members: o.members.iter().map(|&i| labels[i].clone()).collect(),
            })
            .collect();
        OrbitTable {
            family: inst.family.clone(),
            params: inst.params.clone(),
            order: inst.action.group_order(),
            orbits,
            a: inst
                .polynomial
                .fold_mod(inst.action.group_order() as usize)
                .iter()
                .map(ToString::to_string)
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "family: {}  {}", self.family, params_line(&self.params));
        let _ = writeln!(s, "group order {}, {} orbits", self.order, self.orbits.len());
        for o in &self.orbits {
            let _ = writeln!(s, "size {:>4}  stab {:>4}  ({})", o.size, o.stab, o.members.join(" "));
        }
        let _ = writeln!(s, "a = ({})", self.a.join(","));
        s
    }
}
