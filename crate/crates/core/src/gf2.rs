//! Square bit-matrices over the two-element field.
//!
//! Row `i` is stored as a `u32` whose bit `j` is the entry in column `j`
//! (0-based). Unused high bits are always zero, so two matrices are equal
//! exactly when their words are equal, and hashing is cheap.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported dimension; one row per `u32`.
pub const MAX_DIM: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Matrix {
    dim: u8,
    rows: SmallVec<[u32; 8]>,
}

fn row_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn check_dim(n: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(n))
    }
}

impl GF2Matrix {
    pub fn zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            dim: n as u8,
            rows: SmallVec::from_elem(0, n),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zero(n)?;
        for (i, row) in m.rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        Ok(m)
    }

    /// Builds a matrix from row bitmasks (bit `j` of `rows[i]` is entry `(i, j)`).
    pub fn from_row_bits(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mask = row_mask(n);
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(Error::InvalidMatrix(format!(
                "row bits exceed dimension {n}"
            )));
        }
        Ok(Self {
            dim: n as u8,
            rows: rows.iter().copied().collect(),
        })
    }

    /// Row-major 0/1 lists, the text form used by the CLI and JSON output.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        check_dim(n)?;
        let mut bits = SmallVec::<[u32; 8]>::with_capacity(n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            let mut word = 0u32;
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => word |= 1 << j,
                    _ => return Err(Error::InvalidMatrix(format!("entry {v} is not 0 or 1"))),
                }
            }
            bits.push(word);
        }
        Ok(Self {
            dim: n as u8,
            rows: bits,
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|&r| (0..self.dim()).map(|j| ((r >> j) & 1) as u8).collect())
            .collect()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn row_bits(&self) -> &[u32] {
        &self.rows
    }

    /// Entry at 0-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.rows[row] >> col) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        if value {
            self.rows[row] |= 1 << col;
        } else {
            self.rows[row] &= !(1 << col);
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1 << i)
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|&a| {
                let mut acc = 0u32;
                let mut bits = a;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    acc ^= other.rows[k];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        Self {
            dim: self.dim,
            rows,
        }
    }

    /// Entrywise sum over F2.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim()).expect("dimension already validated");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut rows: SmallVec<[u32; 8]> = SmallVec::from_elem(0, n);
        for (i, &r) in self.rows.iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                rows[j] |= 1 << i;
                bits &= bits - 1;
            }
        }
        Self {
            dim: self.dim,
            rows,
        }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: SmallVec<[u32; 8]> = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.dim() {
            let bit = 1u32 << col;
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= p;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Packs a matrix of dimension at most 8 into one word, row `i` in byte `i`.
    pub fn to_packed_u64(&self) -> Option<u64> {
        (self.dim <= 8).then(|| {
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &r)| acc | (u64::from(r) << (8 * i)))
        })
    }

    pub fn from_packed_u64(dim: usize, packed: u64) -> Result<Self> {
        if dim > 8 {
            return Err(Error::UnsupportedDimension(dim));
        }
        check_dim(dim)?;
        let mask = row_mask(dim);
        let rows: SmallVec<[u32; 8]> = (0..dim)
            .map(|i| ((packed >> (8 * i)) as u32) & 0xff)
            .collect();
        if rows.iter().any(|r| r & !mask != 0) || (dim < 8 && packed >> (8 * dim) != 0) {
            return Err(Error::InvalidMatrix(format!(
                "packed word has bits outside dimension {dim}"
            )));
        }
        Ok(Self {
            dim: dim as u8,
            rows,
        })
    }
}

/// `I_n + E_{i,j}` with 1-based row `i` and column `j`, `i != j`.
pub fn elementary(n: usize, i: usize, j: usize) -> Result<GF2Matrix> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::ElementaryIndex { n, i, j });
    }
    let mut m = GF2Matrix::identity(n)?;
    m.set(i - 1, j - 1, true);
    Ok(m)
}

/// `|GL_k(F2)| = prod_{i<k} (2^k - 2^i)`; 1 for `k = 0`.
pub fn gl_order(k: usize) -> BigUint {
    let two_k = BigUint::one() << k;
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * (&two_k - (BigUint::one() << i))
    })
}

impl Mul for &GF2Matrix {
    type Output = GF2Matrix;

    /// Panics on dimension mismatch; use [`GF2Matrix::mat_mul`] for a checked product.
    fn mul(self, rhs: &GF2Matrix) -> GF2Matrix {
        self.mat_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Matrix{:?}", self.to_rows())
    }
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for GF2Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GF2Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u8>>::deserialize(deserializer)?;
        GF2Matrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
