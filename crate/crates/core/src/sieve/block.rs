use num_bigint::BigInt;

use super::{CspInstance, SieveError};
use crate::qpoly::{CyclotomicResidue, IntPolynomial};

/// Checks the block criterion for `g^j`: with `stat` giving the exponent of
/// each object, the first `#X^{g^j}` blocks must have weight 1 at
/// `omega_{o(g^j)}` and every later block weight 0.
pub fn verify_block_partition(
    inst: &CspInstance,
    stat: &[u64],
    blocks: &[Vec<usize>],
    j: u64,
) -> Result<bool, SieveError> {
    let size = inst.action.size();
    if stat.len() != size {
        return Err(SieveError::InvalidBlocks(size));
    }
    let mut coeffs = vec![0i64; stat.iter().copied().max().map_or(0, |m| m as usize + 1)];
    for &s in stat {
        coeffs[s as usize] += 1;
    }
    let genfun = IntPolynomial::from_i64s(&coeffs);
    if genfun != inst.polynomial {
        return Err(SieveError::StatisticMismatch {
            expected: inst.polynomial.to_string(),
            found: genfun.to_string(),
        });
    }
    let mut seen = vec![false; size];
    for &i in blocks.iter().flatten() {
        if i >= size || std::mem::replace(&mut seen[i], true) {
            return Err(SieveError::InvalidBlocks(size));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(SieveError::InvalidBlocks(size));
    }

    let d = inst.action.element_order(j);
    let fixed = inst.action.fixed_count(j);
    let one = BigInt::from(1);
    Ok(blocks.iter().enumerate().all(|(i, block)| {
        let weight = CyclotomicResidue::from_exponents(block.iter().map(|&x| (stat[x], &one)), d);
        let want = if i < fixed { 1 } else { 0 };
        weight.as_integer() == Some(BigInt::from(want))
    }))
}
