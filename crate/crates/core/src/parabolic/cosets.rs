//! Explicit right-coset representatives of `⟨A_{2,n}(S_{λ|μ'})⟩` in
//! `⟨A_{2,n}(S_{λ|μ})⟩`, where `μ'` splits a trailing 1 off the last part of `μ`.

use serde::Serialize;

use crate::coxeter::Generator;
use crate::decomposition::{check_totals, Decomposition};
use crate::error::{Error, Result};
use crate::fp_group::Word;

/// Which representative family applies to a pair `(λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepFamily {
    /// `1 < μ_m ≤ λ_l`: words `y_n x_n^ε … y_k x_k^ε`; index `2^{μ_m} − 1`.
    AlternatingChain,
    /// `λ_l = 1 < μ_m`: words `y_n … y_l · y_{j_1} … y_{j_s}`; index `2^{μ_m − 1}`.
    DescendingChain,
}

impl RepFamily {
    pub fn for_pair(lambda: &Decomposition, mu: &Decomposition) -> Result<Self> {
        check_totals(lambda, mu)?;
        let (l_last, m_last) = (lambda.last(), mu.last());
        if m_last < 2 {
            return Err(Error::Hypothesis(format!(
                "last part of mu = ({mu}) must be at least 2; with mu_m = lambda_l = 1 strip both \
                 last parts instead"
            )));
        }
        if m_last <= l_last {
            Ok(RepFamily::AlternatingChain)
        } else if l_last == 1 {
            Ok(RepFamily::DescendingChain)
        } else {
            Err(Error::Hypothesis(format!(
                "lambda = ({lambda}), mu = ({mu}): need 1 < mu_m <= lambda_l (alternating-chain \
                 family) or lambda_l = 1 (descending-chain family); swap lambda and mu"
            )))
        }
    }

    /// The coset count the family should produce for a given last part `μ_m`.
    pub fn expected_count(self, mu_last: usize) -> usize {
        match self {
            RepFamily::AlternatingChain => (1 << mu_last) - 1,
            RepFamily::DescendingChain => 1 << (mu_last - 1),
        }
    }
}

/// Representative words, empty word first. Within a family words are listed
/// by increasing chain length, then lexicographically in the exponent or
/// index choices.
pub fn coset_rep_words(lambda: &Decomposition, mu: &Decomposition) -> Result<Vec<Word>> {
    let family = RepFamily::for_pair(lambda, mu)?;
    let n = lambda.total() - 1;
    let mu_last = mu.last();
    // Chains start at y_n and stop no lower than index n - μ_m + 2.
    let lowest = n + 2 - mu_last;
    let mut words = vec![Word::empty()];
    match family {
        RepFamily::AlternatingChain => {
            for k in (lowest..=n).rev() {
                let len = n - k + 1;
                for eps in 0u32..1 << len {
                    let mut w = Word::empty();
                    for (pos, idx) in (k..=n).rev().enumerate() {
                        w.push(Generator::Y(idx));
                        if eps >> (len - 1 - pos) & 1 == 1 {
                            w.push(Generator::X(idx));
                        }
                    }
                    words.push(w);
                }
            }
        }
        RepFamily::DescendingChain => {
            for l in (lowest..=n).rev() {
                let tail: Vec<usize> = (l + 1..=n).collect();
                for choice in 0u32..1 << tail.len() {
                    let mut w: Word = (l..=n).rev().map(Generator::Y).collect();
                    for (bit, &j) in tail.iter().enumerate() {
                        if choice >> (tail.len() - 1 - bit) & 1 == 1 {
                            w.push(Generator::Y(j));
                        }
                    }
                    words.push(w);
                }
            }
        }
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(parts: &[usize]) -> Decomposition {
        Decomposition::new(parts.to_vec()).unwrap()
    }

    fn texts(lambda: &[usize], mu: &[usize]) -> Vec<String> {
        coset_rep_words(&d(lambda), &d(mu))
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn smallest_alternating_family() {
        assert_eq!(texts(&[2], &[2]), ["e", "y1", "y1 x1"]);
        assert_eq!(texts(&[1, 2], &[1, 2]), ["e", "y2", "y2 x2"]);
    }

    #[test]
    fn full_gl3_family() {
        let words = texts(&[3], &[3]);
        assert_eq!(words.len(), 7);
        assert_eq!(
            words,
            [
                "e",
                "y2",
                "y2 x2",
                "y2 y1",
                "y2 y1 x1",
                "y2 x2 y1",
                "y2 x2 y1 x1"
            ]
        );
    }

    #[test]
    fn descending_family() {
        assert_eq!(texts(&[1, 1, 1], &[3]), ["e", "y2", "y2 y1", "y2 y1 y2"]);
        assert_eq!(texts(&[1, 1], &[2]), ["e", "y1"]);
    }

    #[test]
    fn hypotheses() {
        assert!(matches!(
            coset_rep_words(&d(&[1, 1]), &d(&[1, 1])),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            coset_rep_words(&d(&[1, 2]), &d(&[3])),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            coset_rep_words(&d(&[3]), &d(&[2])),
            Err(Error::TotalMismatch { .. })
        ));
    }

    #[test]
    fn counts_match_expected_indices() {
        for total in 2..=7 {
            for lambda in Decomposition::all(total) {
                for mu in Decomposition::all(total) {
                    let Ok(family) = RepFamily::for_pair(&lambda, &mu) else {
                        continue;
                    };
                    let words = coset_rep_words(&lambda, &mu).unwrap();
                    assert_eq!(words.len(), family.expected_count(mu.last()));
                    let mut sorted = words.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.len(), words.len());
                }
            }
        }
    }
}
