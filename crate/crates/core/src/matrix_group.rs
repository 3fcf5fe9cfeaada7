//! The matrix side: generator images in `GL_{n+1}(F2)`, relator checks and
//! breadth-first closure of generating sets.

use num_bigint::BigUint;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::coxeter::{Generator, GeneratorSubset, TwoDimCoxeterSystem};
use crate::error::{Error, Result};
use crate::fp_group::Word;
use crate::gf2::{elementary, GF2Matrix};

/// Default cap on closure size; admits `GL_5(F2)`.
pub const DEFAULT_ELEMENT_LIMIT: usize = 20_000_000;

/// `x_j ↦ I + E_{j+1,j}`, `y_j ↦ I + E_{j,j+1}` in dimension `n + 1`.
pub fn phi(gen: &Generator, n: usize) -> Result<GF2Matrix> {
    let out_of_range = || Error::GeneratorOutOfRange {
        gen: gen.clone(),
        n,
    };
    match *gen {
        Generator::X(j) if (1..=n).contains(&j) => elementary(n + 1, j + 1, j),
        Generator::Y(j) if (1..=n).contains(&j) => elementary(n + 1, j, j + 1),
        _ => Err(out_of_range()),
    }
}

/// Images of a generator subset, in canonical generator order.
pub fn phi_images(subset: &GeneratorSubset, n: usize) -> Result<Vec<GF2Matrix>> {
    subset.iter().map(|g| phi(g, n)).collect()
}

/// Left-to-right product of the letters' images; the empty word is `I_{n+1}`.
pub fn eval_word(word: &Word, n: usize) -> Result<GF2Matrix> {
    let mut acc = GF2Matrix::identity(n + 1)?;
    for g in word.letters() {
        acc = acc.mul_unchecked(&phi(g, n)?);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub ok: bool,
    pub failing_relator: Option<Word>,
}

/// Evaluates every defining relator of `system` under `phi`. The first
/// relator that does not evaluate to the identity is reported.
pub fn check_homomorphism(system: &TwoDimCoxeterSystem, n: usize) -> Result<HomomorphismReport> {
    for r in system.relators() {
        if !eval_word(&r, n)?.is_identity() {
            return Ok(HomomorphismReport {
                ok: false,
                failing_relator: Some(r),
            });
        }
    }
    Ok(HomomorphismReport {
        ok: true,
        failing_relator: None,
    })
}

/// Matrices of dimension at most 8 are stored as one packed word.
#[derive(Clone, Debug)]
enum Store {
    Packed {
        order: Vec<u64>,
        index: FxHashSet<u64>,
    },
    Wide {
        order: Vec<GF2Matrix>,
        index: FxHashSet<GF2Matrix>,
    },
}

impl Store {
    fn new(dim: usize) -> Self {
        if dim <= 8 {
            Store::Packed {
                order: Vec::new(),
                index: FxHashSet::default(),
            }
        } else {
            Store::Wide {
                order: Vec::new(),
                index: FxHashSet::default(),
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Store::Packed { order, .. } => order.len(),
            Store::Wide { order, .. } => order.len(),
        }
    }

    fn insert(&mut self, m: GF2Matrix) -> bool {
        match self {
            Store::Packed { order, index } => {
                let key = m
                    .to_packed_u64()
                    .expect("packed store holds small matrices");
                let fresh = index.insert(key);
                if fresh {
                    order.push(key);
                }
                fresh
            }
            Store::Wide { order, index } => {
                let fresh = index.insert(m.clone());
                if fresh {
                    order.push(m);
                }
                fresh
            }
        }
    }

    fn contains(&self, m: &GF2Matrix) -> bool {
        match self {
            Store::Packed { index, .. } => m.to_packed_u64().is_some_and(|k| index.contains(&k)),
            Store::Wide { index, .. } => index.contains(m),
        }
    }

    fn get(&self, dim: usize, i: usize) -> GF2Matrix {
        match self {
            Store::Packed { order, .. } => {
                GF2Matrix::from_packed_u64(dim, order[i]).expect("stored words are valid")
            }
            Store::Wide { order, .. } => order[i].clone(),
        }
    }
}

/// A finite matrix group with its elements in discovery order.
#[derive(Clone, Debug)]
pub struct MatrixGroupClosure {
    dim: usize,
    generators: Vec<GF2Matrix>,
    store: Store,
}

impl MatrixGroupClosure {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[GF2Matrix] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.store.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> BigUint {
        self.len().into()
    }

    pub fn contains(&self, m: &GF2Matrix) -> Result<bool> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: m.dim(),
            });
        }
        Ok(self.store.contains(m))
    }

    /// Elements in breadth-first discovery order, identity first.
    pub fn elements(&self) -> impl Iterator<Item = GF2Matrix> + '_ {
        (0..self.len()).map(move |i| self.store.get(self.dim, i))
    }
}

/// Breadth-first closure of `{I}` under right multiplication by `gens`.
/// For finite groups this is the generated subgroup.
pub fn closure(dim: usize, gens: &[GF2Matrix], element_limit: usize) -> Result<MatrixGroupClosure> {
    for g in gens {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.dim(),
            });
        }
        if !g.is_invertible() {
            return Err(Error::InvalidMatrix(
                "closure generator is not invertible".into(),
            ));
        }
    }
    let mut store = Store::new(dim);
    store.insert(GF2Matrix::identity(dim)?);
    let mut next = 0;
    while next < store.len() {
        let m = store.get(dim, next);
        next += 1;
        for g in gens {
            if store.insert(m.mul_unchecked(g)) && store.len() > element_limit {
                return Err(Error::ElementLimit {
                    limit: element_limit,
                });
            }
        }
    }
    Ok(MatrixGroupClosure {
        dim,
        generators: gens.to_vec(),
        store,
    })
}
