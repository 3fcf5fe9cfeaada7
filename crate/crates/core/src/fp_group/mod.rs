//! Words and coset enumeration for groups presented by two-dimensional
//! Coxeter systems.

mod enumerate;
mod word;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::coxeter::{GeneratorSubset, TwoDimCoxeterSystem};
use crate::error::{Error, Result};

pub use enumerate::{coset_enumerate, CosetTable, DEFAULT_MAX_COSETS};
pub use word::Word;

/// Order of the presented group: the index of the trivial subgroup.
pub fn group_order(system: &TwoDimCoxeterSystem, max_cosets: usize) -> Result<BigUint> {
    Ok(coset_enumerate(system, &[], max_cosets)?
        .num_cosets()
        .into())
}

fn subset_words(system: &TwoDimCoxeterSystem, subset: &GeneratorSubset) -> Result<Vec<Word>> {
    subset
        .iter()
        .map(|g| {
            system
                .position(g)
                .map(|_| Word::from(vec![g.clone()]))
                .ok_or_else(|| Error::UnknownGenerator(g.clone()))
        })
        .collect()
}

/// The coset table of the subgroup generated by `subset`.
pub fn subgroup_table(
    system: &TwoDimCoxeterSystem,
    subset: &GeneratorSubset,
    max_cosets: usize,
) -> Result<CosetTable> {
    coset_enumerate(system, &subset_words(system, subset)?, max_cosets)
}

/// Index of the subgroup generated by a subset of the generators.
pub fn subgroup_index(
    system: &TwoDimCoxeterSystem,
    subset: &GeneratorSubset,
    max_cosets: usize,
) -> Result<BigUint> {
    Ok(subgroup_table(system, subset, max_cosets)?
        .num_cosets()
        .into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetRepReport {
    /// Every representative lands on a different coset.
    pub distinct: bool,
    /// The landed cosets are all of them.
    pub covering: bool,
    /// Number of representatives checked.
    pub count: usize,
    /// Number of cosets in the completed table.
    pub index: usize,
    /// Coset reached by each representative, in input order.
    pub landed: Vec<usize>,
}

/// Traces each representative `w` from the subgroup coset, giving the coset `Hw`.
pub fn verify_coset_reps(
    system: &TwoDimCoxeterSystem,
    h_subset: &GeneratorSubset,
    reps: &[Word],
    max_cosets: usize,
) -> Result<CosetRepReport> {
    if reps.is_empty() {
        return Err(Error::InvalidSystem(
            "no coset representatives given".into(),
        ));
    }
    let table = subgroup_table(system, h_subset, max_cosets)?;
    let landed = reps
        .iter()
        .map(|w| table.trace(0, w))
        .collect::<Result<Vec<_>>>()?;
    let unique: BTreeSet<usize> = landed.iter().copied().collect();
    Ok(CosetRepReport {
        distinct: unique.len() == landed.len(),
        covering: unique.len() == table.num_cosets(),
        count: reps.len(),
        index: table.num_cosets(),
        landed,
    })
}
