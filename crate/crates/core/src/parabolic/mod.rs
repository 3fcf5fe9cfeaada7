//! Intersections `P_{λ|μ} = P_λ ∩ P_μᵗ` of standard parabolic subgroups of
//! `GL_{n+1}(F2)`.
//!
//! `P_λ` is block upper-triangular for the block sizes of `λ`; `P_μᵗ` is
//! block lower-triangular for `μ`.

mod cosets;
mod order;
mod verify;

use crate::coxeter::{a2n, generator_subset, TwoDimCoxeterSystem};
use crate::decomposition::{check_totals, Decomposition};
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;

pub use cosets::{coset_rep_words, RepFamily};
pub use order::{
    order_bruteforce, order_recursive, parabolic_elements_bruteforce, DEFAULT_ENUMERATION_CAP,
};
pub use verify::{verify_theorem, Limits, Orders, Verdict, VerificationReport, VerifyOptions};

/// Block number of each row/column index under `d`.
fn block_of(d: &Decomposition) -> Vec<usize> {
    d.parts()
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
        .collect()
}

/// True iff `m` is invertible, vanishes below the `λ`-block diagonal and
/// vanishes above the `μ`-block diagonal.
pub fn parabolic_member(m: &GF2Matrix, lambda: &Decomposition, mu: &Decomposition) -> Result<bool> {
    let total = check_totals(lambda, mu)?;
    if m.dim() != total {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: total,
        });
    }
    let (lb, mb) = (block_of(lambda), block_of(mu));
    for (i, &row) in m.row_bits().iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            if lb[i] > lb[j] || mb[i] < mb[j] {
                return Ok(false);
            }
            bits &= bits - 1;
        }
    }
    Ok(m.is_invertible())
}

/// `A_{2,n}(S_{λ|μ})` with `n + 1` the common total; the empty system when
/// the total is 1.
pub fn presentation(lambda: &Decomposition, mu: &Decomposition) -> Result<TwoDimCoxeterSystem> {
    let n = check_totals(lambda, mu)? - 1;
    if n == 0 {
        return Ok(TwoDimCoxeterSystem::empty());
    }
    a2n(n)?.restrict(&generator_subset(lambda, mu)?)
}
