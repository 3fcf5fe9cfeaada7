use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

use super::parabolic_member;
use crate::decomposition::{check_totals, Decomposition};
use crate::error::{Error, Result};
use crate::gf2::{gl_order, GF2Matrix};

/// Default largest total for exhaustive enumeration (`2^16` matrices).
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

/// Hard ceiling: the enumeration counter is a `u64` over `total²` bits.
const MAX_ENUMERATION_TOTAL: usize = 7;

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, BigUint>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `|P_{λ|μ}|` by peeling off the last block: with `μ_m ≤ λ_l` (swapping the
/// arguments otherwise, which preserves the order),
/// `|P_{λ|μ}| = 2^{μ_m(λ_l − μ_m)} · |GL_{μ_m}| · |P_{λ̃|μ̃}|`.
pub fn order_recursive(lambda: &Decomposition, mu: &Decomposition) -> Result<BigUint> {
    check_totals(lambda, mu)?;
    Ok(recurse(lambda.parts(), mu.parts()))
}

fn recurse(lambda: &[usize], mu: &[usize]) -> BigUint {
    let (Some(&l_last), Some(&m_last)) = (lambda.last(), mu.last()) else {
        debug_assert!(lambda.is_empty() && mu.is_empty());
        return BigUint::one();
    };
    let (big, small, big_last, small_last) = if m_last > l_last {
        (mu, lambda, m_last, l_last)
    } else {
        (lambda, mu, l_last, m_last)
    };
    let key = (big.to_vec(), small.to_vec());
    if let Some(hit) = memo().read().expect("memo lock").get(&key) {
        return hit.clone();
    }

    let mut big_tilde = big.to_vec();
    *big_tilde.last_mut().unwrap() -= small_last;
    if big_tilde.last() == Some(&0) {
        big_tilde.pop();
    }
    let small_tilde = &small[..small.len() - 1];
    let free_block = BigUint::one() << (small_last * (big_last - small_last));
    let result = free_block * gl_order(small_last) * recurse(&big_tilde, small_tilde);

    memo()
        .write()
        .expect("memo lock")
        .entry(key)
        .or_insert_with(|| result.clone());
    result
}

/// Every matrix of dimension `total` passing [`parabolic_member`], found by
/// enumerating all `2^{total²}` matrices.
pub fn parabolic_elements_bruteforce(
    lambda: &Decomposition,
    mu: &Decomposition,
    cap: usize,
) -> Result<Vec<GF2Matrix>> {
    let total = check_totals(lambda, mu)?;
    if total > cap.min(MAX_ENUMERATION_TOTAL) {
        return Err(Error::EnumerationCap { total, cap });
    }
    let row_mask = (1u64 << total) - 1;
    let mut rows = vec![0u32; total];
    let mut out = Vec::new();
    for bits in 0u64..1 << (total * total) {
        for (i, row) in rows.iter_mut().enumerate() {
            *row = ((bits >> (i * total)) & row_mask) as u32;
        }
        let m = GF2Matrix::from_row_bits(&rows)?;
        if parabolic_member(&m, lambda, mu)? {
            out.push(m);
        }
    }
    Ok(out)
}

pub fn order_bruteforce(lambda: &Decomposition, mu: &Decomposition, cap: usize) -> Result<BigUint> {
    Ok(parabolic_elements_bruteforce(lambda, mu, cap)?.len().into())
}
