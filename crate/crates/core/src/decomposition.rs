//! Ordered decompositions (integer compositions) of `n + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty ordered sequence of positive parts. Part order matters: it fixes
/// the block structure of the associated parabolic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Decomposition {
    parts: Vec<usize>,
}

impl Decomposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDecomposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidDecomposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// The one-part decomposition `(total)`.
    pub fn single(total: usize) -> Result<Self> {
        Self::new(vec![total])
    }

    /// `(1, 1, ..., 1)` with `total` ones.
    pub fn ones(total: usize) -> Result<Self> {
        Self::new(vec![1; total])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> usize {
        *self.parts.last().expect("decompositions are nonempty")
    }

    /// `(μ_1, …, μ_{m-1}, μ_m - 1, 1)`; requires a last part of at least 2.
    pub fn split_last(&self) -> Result<Self> {
        let last = self.last();
        if last < 2 {
            return Err(Error::InvalidDecomposition(format!(
                "last part of {self} must be at least 2 to split"
            )));
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() = last - 1;
        parts.push(1);
        Self::new(parts)
    }

    /// Every composition of `total`, first part ascending, recursively.
    pub fn all(total: usize) -> Vec<Self> {
        fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Decomposition>) {
            if rest == 0 {
                out.push(Decomposition {
                    parts: prefix.clone(),
                });
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                go(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if total > 0 {
            go(total, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Decomposition {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `2,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidDecomposition(format!(
                        "`{s}`: `{}` is not a positive integer",
                        p.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Decomposition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Decomposition> for Vec<usize> {
    fn from(d: Decomposition) -> Self {
        d.parts
    }
}

pub(crate) fn check_totals(lambda: &Decomposition, mu: &Decomposition) -> Result<usize> {
    let (left, right) = (lambda.total(), mu.total());
    if left != right {
        return Err(Error::TotalMismatch { left, right });
    }
    Ok(left)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let d: Decomposition = "2, 1,1".parse().unwrap();
        assert_eq!(d.parts(), &[2, 1, 1]);
        assert_eq!(d.to_string(), "2,1,1");
        assert_eq!(d.total(), 4);
        assert!("".parse::<Decomposition>().is_err());
        assert!("2,0".parse::<Decomposition>().is_err());
        assert!("2,-1".parse::<Decomposition>().is_err());
        assert!("a".parse::<Decomposition>().is_err());
    }

    #[test]
    fn composition_counts() {
        assert!(Decomposition::all(0).is_empty());
        for t in 1..=8 {
            let all = Decomposition::all(t);
            assert_eq!(all.len(), 1 << (t - 1));
            assert!(all.iter().all(|d| d.total() == t));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        let three: Vec<String> = Decomposition::all(3)
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(three, ["1,1,1", "1,2", "2,1", "3"]);
    }

    #[test]
    fn split_last_part() {
        let mu = Decomposition::new(vec![1, 3]).unwrap();
        assert_eq!(mu.split_last().unwrap().parts(), &[1, 2, 1]);
        assert!(Decomposition::new(vec![2, 1])
            .unwrap()
            .split_last()
            .is_err());
    }

    #[test]
    fn json_is_a_plain_array() {
        let d = Decomposition::new(vec![2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&d).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Decomposition>("[0]").is_err());
    }
}
