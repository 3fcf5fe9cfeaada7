use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::Generator;
use crate::error::{Error, Result};

/// A product of generators, read left to right. Generators are involutions,
/// so no inverse letters exist.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    /// `base` repeated `k` times.
    pub fn power(base: &[Generator], k: u32) -> Self {
        Self(
            std::iter::repeat_n(base, k as usize)
                .flatten()
                .cloned()
                .collect(),
        )
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Reversal; for involutive generators this is the inverse.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }
}

impl From<Vec<Generator>> for Word {
    fn from(letters: Vec<Generator>) -> Self {
        Self(letters)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Space-separated letters; the empty word prints as `e`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Self::empty());
        }
        s.split_whitespace().map(str::parse).collect()
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{X, Y};

    #[test]
    fn text_form() {
        let w: Word = "y2 x2 y1".parse().unwrap();
        assert_eq!(w.letters(), &[Y(2), X(2), Y(1)]);
        assert_eq!(w.to_string(), "y2 x2 y1");
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!("e".parse::<Word>().unwrap(), Word::empty());
    }

    #[test]
    fn powers() {
        let w = Word::power(&[X(1), Y(1)], 3);
        assert_eq!(w.to_string(), "x1 y1 x1 y1 x1 y1");
        assert!(Word::power(&[X(1)], 0).is_empty());
        assert_eq!(w.inverse().to_string(), "y1 x1 y1 x1 y1 x1");
    }
}
