use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{perm_pow, SieveError, Verdict};
use crate::numbers::lcm;
use crate::qpoly::BivariatePolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicspCell {
    pub j: u64,
    pub k: u64,
    pub fixed: u64,
    pub eval: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicspReport {
    pub orders: (u64, u64),
    pub embeddings: (u64, u64),
    pub cells: Vec<BicspCell>,
    pub verdict: Verdict,
}

/// Checks `#X^{(g^j, h^k)} = F(omega^{e1 j}, omega'^{e2 k})` for every cell,
/// where `omega` and `omega'` are the canonical primitive roots of orders
/// `order1` and `order2`, and the embeddings send the generators to their
/// `e1`-th and `e2`-th powers.
#[allow(clippy::too_many_arguments)]
pub fn verify_bicsp(
    size: usize,
    gen1: &[usize],
    order1: u64,
    gen2: &[usize],
    order2: u64,
    e1: u64,
    e2: u64,
    f: &BivariatePolynomial,
) -> Result<BicspReport, SieveError> {
    for g in [gen1, gen2] {
        let mut seen = vec![false; size];
        if g.len() != size || g.iter().any(|&i| i >= size || std::mem::replace(&mut seen[i], true)) {
            return Err(SieveError::NotABijection(size));
        }
    }
    for (g, order) in [(gen1, order1), (gen2, order2)] {
        let perm_order = super::perm_order(g);
        if order == 0 || order % perm_order != 0 {
            return Err(SieveError::OrderMismatch { perm_order, group_order: order });
        }
    }
    if (0..size).any(|i| gen1[gen2[i]] != gen2[gen1[i]]) {
        return Err(SieveError::NonCommutingActions);
    }
    let value = f.eval_at_one();
    if value != BigInt::from(size) {
        return Err(SieveError::SizeMismatch { size, value: value.to_string() });
    }
    let l = lcm(order1, order2);
    let mut cells = Vec::new();
    for j in 0..order1 {
        let p1 = perm_pow(gen1, j);
        for k in 0..order2 {
            let p2 = perm_pow(gen2, k);
            let fixed = (0..size).filter(|&i| p1[p2[i]] == i).count() as u64;
            let a = (e1 % order1) * j % order1 * (l / order1);
            let b = (e2 % order2) * k % order2 * (l / order2);
            let value = f.eval_at_roots(l, a, b);
            let (eval, matches) = match value.as_integer() {
                Some(v) => (v.to_string(), v == BigInt::from(fixed)),
                None => (format!("nonint:{}", value.residue()), false),
            };
            cells.push(BicspCell { j, k, fixed, eval, matches });
        }
    }
    let verdict = if cells.iter().all(|c| c.matches) { Verdict::Pass } else { Verdict::Fail };
    Ok(BicspReport { orders: (order1, order2), embeddings: (e1, e2), cells, verdict })
}
