//! Two-dimensional Coxeter systems `(X, f, g)`.
//!
//! A system assigns a label `f` to every unordered pair of generators and a
//! label `g` to every unordered triple. The associated group has the
//! generators as involutions and relators `(zt)^f(z,t)` and `(ztv)^g(z,t,v)`.
//! A triple label of 0 imposes nothing.

mod diagram;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decomposition::{check_totals, Decomposition};
use crate::error::{Error, Result};
use crate::fp_group::Word;

pub use diagram::{export_diagram, DiagramFormat};

/// A generator symbol. `X(i)`/`Y(i)` are the `x_i`/`y_i` of `A_{2,n}` (1-based);
/// anything else is an opaque name. The derived order puts every `x` before
/// every `y`, ascending by index, which is the canonical generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X(usize),
    Y(usize),
    Named(String),
}

impl Generator {
    pub fn index(&self) -> Option<usize> {
        match self {
            Generator::X(i) | Generator::Y(i) => Some(*i),
            Generator::Named(_) => None,
        }
    }

    /// The same index on the other chain; opaque names map to themselves.
    pub fn swap_xy(&self) -> Generator {
        match self {
            Generator::X(i) => Generator::Y(*i),
            Generator::Y(i) => Generator::X(*i),
            Generator::Named(s) => Generator::Named(s.clone()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i) => write!(f, "x{i}"),
            Generator::Y(i) => write!(f, "y{i}"),
            Generator::Named(s) => f.write_str(s),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(Error::InvalidSystem(format!("bad generator symbol `{s}`")));
        }
        let indexed = |rest: &str| {
            rest.parse::<usize>()
                .ok()
                .filter(|&i| i >= 1 && !rest.starts_with('0'))
        };
        if let Some(i) = s.strip_prefix('x').and_then(indexed) {
            return Ok(Generator::X(i));
        }
        if let Some(i) = s.strip_prefix('y').and_then(indexed) {
            return Ok(Generator::Y(i));
        }
        Ok(Generator::Named(s.to_string()))
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of generators, e.g. the `S` in `A_{2,n}(S)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSubset(BTreeSet<Generator>);

impl GeneratorSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.0.contains(g)
    }

    pub fn insert(&mut self, g: Generator) -> bool {
        self.0.insert(g)
    }

    pub fn remove(&mut self, g: &Generator) -> bool {
        self.0.remove(g)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in canonical generator order.
    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.0.iter()
    }

    pub fn swap_xy(&self) -> Self {
        self.0.iter().map(Generator::swap_xy).collect()
    }
}

impl FromIterator<Generator> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl FromStr for GeneratorSubset {
    type Err = Error;

    /// Comma-separated symbols, e.g. `x1,y1,y2`. An empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::new());
        }
        s.split(',').map(str::parse).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDimCoxeterSystem {
    generators: Vec<Generator>,
    positions: BTreeMap<Generator, usize>,
    /// Row-major upper triangle: entry for positions `i < j`.
    pair_labels: Vec<u32>,
    /// Nonzero triple labels keyed by ascending positions.
    triple_labels: BTreeMap<[usize; 3], u32>,
}

fn pair_slot(len: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < len);
    i * len - i * (i + 1) / 2 + (j - i - 1)
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

impl TwoDimCoxeterSystem {
    /// The system with no generators; its group is trivial.
    pub fn empty() -> Self {
        Self {
            generators: Vec::new(),
            positions: BTreeMap::new(),
            pair_labels: Vec::new(),
            triple_labels: BTreeMap::new(),
        }
    }

    /// Builds a system from explicit labels. Every pair needs a label; a
    /// missing triple reads as 0. Conflicting duplicate entries are rejected.
    pub fn new<P, T>(generators: Vec<Generator>, pairs: P, triples: T) -> Result<Self>
    where
        P: IntoIterator<Item = (Generator, Generator, u32)>,
        T: IntoIterator<Item = (Generator, Generator, Generator, u32)>,
    {
        let mut positions = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if positions.insert(g.clone(), i).is_some() {
                return Err(Error::InvalidSystem(format!("generator {g} listed twice")));
            }
        }
        let len = generators.len();
        let mut pair_labels: Vec<Option<u32>> = vec![None; len * len.saturating_sub(1) / 2];
        let lookup = |g: &Generator| {
            positions
                .get(g)
                .copied()
                .ok_or_else(|| Error::UnknownGenerator(g.clone()))
        };
        for (a, b, label) in pairs {
            let (i, j) = (lookup(&a)?, lookup(&b)?);
            if i == j {
                return Err(Error::InvalidSystem(format!(
                    "pair label on {a} with itself"
                )));
            }
            let slot = pair_slot(len, i.min(j), i.max(j));
            match pair_labels[slot] {
                Some(old) if old != label => {
                    return Err(Error::InvalidSystem(format!(
                        "conflicting labels {old} and {label} for ({a},{b})"
                    )))
                }
                _ => pair_labels[slot] = Some(label),
            }
        }
        let mut triple_labels = BTreeMap::new();
        for (a, b, c, label) in triples {
            let key = sorted3([lookup(&a)?, lookup(&b)?, lookup(&c)?]);
            if key[0] == key[1] || key[1] == key[2] {
                return Err(Error::InvalidSystem(format!(
                    "triple ({a},{b},{c}) repeats a generator"
                )));
            }
            match triple_labels.get(&key) {
                Some(&old) if old != label => {
                    return Err(Error::InvalidSystem(format!(
                        "conflicting labels {old} and {label} for ({a},{b},{c})"
                    )))
                }
                _ => {
                    triple_labels.insert(key, label);
                }
            }
        }
        triple_labels.retain(|_, label| *label != 0);
        let mut labels = Vec::with_capacity(pair_labels.len());
        for i in 0..len {
            for j in i + 1..len {
                match pair_labels[pair_slot(len, i, j)] {
                    Some(label) => labels.push(label),
                    None => {
                        return Err(Error::InvalidSystem(format!(
                            "no label for pair ({},{})",
                            generators[i], generators[j]
                        )))
                    }
                }
            }
        }
        Ok(Self {
            generators,
            positions,
            pair_labels: labels,
            triple_labels,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn position(&self, g: &Generator) -> Option<usize> {
        self.positions.get(g).copied()
    }

    fn require(&self, g: &Generator) -> Result<usize> {
        self.position(g)
            .ok_or_else(|| Error::UnknownGenerator(g.clone()))
    }

    /// `f(a, b)` for distinct generators.
    pub fn pair_label(&self, a: &Generator, b: &Generator) -> Result<u32> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        if i == j {
            return Err(Error::InvalidSystem(format!("{a} paired with itself")));
        }
        Ok(self.pair_labels[pair_slot(self.len(), i.min(j), i.max(j))])
    }

    /// `g(a, b, c)`; 0 when nothing is imposed.
    pub fn triple_label(&self, a: &Generator, b: &Generator, c: &Generator) -> Result<u32> {
        let key = sorted3([self.require(a)?, self.require(b)?, self.require(c)?]);
        if key[0] == key[1] || key[1] == key[2] {
            return Err(Error::InvalidSystem(format!(
                "triple ({a},{b},{c}) repeats a generator"
            )));
        }
        Ok(self.triple_labels.get(&key).copied().unwrap_or(0))
    }

    pub fn set_pair_label(&mut self, a: &Generator, b: &Generator, label: u32) -> Result<()> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        if i == j {
            return Err(Error::InvalidSystem(format!("{a} paired with itself")));
        }
        let slot = pair_slot(self.len(), i.min(j), i.max(j));
        self.pair_labels[slot] = label;
        Ok(())
    }

    pub fn set_triple_label(
        &mut self,
        a: &Generator,
        b: &Generator,
        c: &Generator,
        label: u32,
    ) -> Result<()> {
        let key = sorted3([self.require(a)?, self.require(b)?, self.require(c)?]);
        if key[0] == key[1] || key[1] == key[2] {
            return Err(Error::InvalidSystem(format!(
                "triple ({a},{b},{c}) repeats a generator"
            )));
        }
        if label == 0 {
            self.triple_labels.remove(&key);
        } else {
            self.triple_labels.insert(key, label);
        }
        Ok(())
    }

    /// All pairs `(i, j, f)` with positions `i < j`, lexicographic.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let len = self.len();
        (0..len)
            .flat_map(move |i| (i + 1..len).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.pair_labels[pair_slot(len, i, j)]))
    }

    /// Triples with nonzero label, ascending positions, lexicographic.
    pub fn triples(&self) -> impl Iterator<Item = ([usize; 3], u32)> + '_ {
        self.triple_labels.iter().map(|(&k, &v)| (k, v))
    }

    /// The system on `subset`, generators kept in ambient order.
    pub fn restrict(&self, subset: &GeneratorSubset) -> Result<Self> {
        let mut keep = Vec::with_capacity(subset.len());
        for g in subset.iter() {
            keep.push(self.require(g)?);
        }
        keep.sort_unstable();
        let generators: Vec<Generator> = keep.iter().map(|&i| self.generators[i].clone()).collect();
        let positions = generators
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        let len = keep.len();
        let mut pair_labels = Vec::with_capacity(len * len.saturating_sub(1) / 2);
        for a in 0..len {
            for b in a + 1..len {
                pair_labels.push(self.pair_labels[pair_slot(self.len(), keep[a], keep[b])]);
            }
        }
        let new_index: BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let triple_labels = self
            .triple_labels
            .iter()
            .filter_map(|(key, &label)| {
                let mapped = [
                    *new_index.get(&key[0])?,
                    *new_index.get(&key[1])?,
                    *new_index.get(&key[2])?,
                ];
                Some((mapped, label))
            })
            .collect();
        Ok(Self {
            generators,
            positions,
            pair_labels,
            triple_labels,
        })
    }

    /// Defining relators: squares, then pair relators in lexicographic pair
    /// order, then triple relators with nonzero label. Pair labels of 0 are
    /// vacuous and skipped like triple labels of 0.
    pub fn relators(&self) -> Vec<Word> {
        let mut out: Vec<Word> = self
            .generators
            .iter()
            .map(|g| Word::from(vec![g.clone(), g.clone()]))
            .collect();
        for (i, j, f) in self.pairs() {
            if f > 0 {
                let base = [self.generators[i].clone(), self.generators[j].clone()];
                out.push(Word::power(&base, f));
            }
        }
        for (key, g) in self.triples() {
            let base = key.map(|i| self.generators[i].clone());
            out.push(Word::power(&base, g));
        }
        out
    }
}

/// The 2n-generator system with labels 4 along the x- and y-chains, 3 on
/// rungs, and the triple labels 3/4 around adjacent squares.
pub fn a2n(n: usize) -> Result<TwoDimCoxeterSystem> {
    if n == 0 {
        return Err(Error::InvalidSystem("A_{2,n} needs n >= 1".into()));
    }
    let generators: Vec<Generator> = (1..=n)
        .map(Generator::X)
        .chain((1..=n).map(Generator::Y))
        .collect();
    let pair_label = |a: &Generator, b: &Generator| -> u32 {
        use Generator::{X, Y};
        match (a, b) {
            (X(i), X(j)) | (Y(i), Y(j)) if i.abs_diff(*j) == 1 => 4,
            (X(i), Y(j)) | (Y(i), X(j)) if i == j => 3,
            _ => 2,
        }
    };
    let mut pairs = Vec::new();
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            pairs.push((a.clone(), b.clone(), pair_label(a, b)));
        }
    }
    use Generator::{X, Y};
    let mut triples = Vec::new();
    for i in 1..n {
        for t in [
            (X(i), X(i + 1), Y(i)),
            (X(i), X(i + 1), Y(i + 1)),
            (X(i), Y(i), Y(i + 1)),
            (X(i + 1), Y(i), Y(i + 1)),
        ] {
            triples.push((t.0, t.1, t.2, 3));
        }
    }
    for i in 1..n.saturating_sub(1) {
        triples.push((X(i), X(i + 1), X(i + 2), 4));
        triples.push((Y(i), Y(i + 1), Y(i + 2), 4));
    }
    TwoDimCoxeterSystem::new(generators, pairs, triples)
}

/// Proper partial sums `λ_1, λ_1+λ_2, …, λ_1+…+λ_{l-1}`.
pub fn stopovers(lambda: &Decomposition) -> BTreeSet<usize> {
    let parts = lambda.parts();
    parts[..parts.len() - 1]
        .iter()
        .scan(0, |acc, p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// `{x_i : i ∉ stopovers(λ)} ∪ {y_j : j ∉ stopovers(μ)}` inside `A_{2,n}`,
/// where `n + 1` is the common total.
pub fn generator_subset(lambda: &Decomposition, mu: &Decomposition) -> Result<GeneratorSubset> {
    let n = check_totals(lambda, mu)? - 1;
    let (sl, sm) = (stopovers(lambda), stopovers(mu));
    let xs = (1..=n).filter(|i| !sl.contains(i)).map(Generator::X);
    let ys = (1..=n).filter(|j| !sm.contains(j)).map(Generator::Y);
    Ok(xs.chain(ys).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{X, Y};

    fn d(parts: &[usize]) -> Decomposition {
        Decomposition::new(parts.to_vec()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn a2n_one() {
        let s = a2n(1).unwrap();
        assert_eq!(s.generators(), &[X(1), Y(1)]);
        assert_eq!(s.pair_label(&X(1), &Y(1)).unwrap(), 3);
        assert_eq!(s.triples().count(), 0);
    }

    #[test]
    fn a2n_two() {
        let s = a2n(2).unwrap();
        assert_eq!(s.pair_label(&X(1), &X(2)).unwrap(), 4);
        assert_eq!(s.pair_label(&Y(2), &Y(1)).unwrap(), 4);
        assert_eq!(s.pair_label(&X(1), &Y(2)).unwrap(), 2);
        assert_eq!(s.pair_label(&X(2), &Y(1)).unwrap(), 2);
        let triples: Vec<_> = s.triples().collect();
        assert_eq!(triples.len(), 4);
        assert!(triples.iter().all(|&(_, g)| g == 3));
        assert_eq!(s.triple_label(&Y(2), &X(1), &X(2)).unwrap(), 3);
    }

    #[test]
    fn a2n_three() {
        let s = a2n(3).unwrap();
        assert_eq!(s.triple_label(&X(1), &X(2), &X(3)).unwrap(), 4);
        assert_eq!(s.triple_label(&Y(3), &Y(1), &Y(2)).unwrap(), 4);
        assert_eq!(s.pair_label(&X(1), &X(3)).unwrap(), 2);
        assert_eq!(s.triple_label(&X(1), &Y(2), &X(3)).unwrap(), 0);
        assert!(a2n(0).is_err());
    }

    #[test]
    fn a2n_label_counts() {
        for n in 1..=6 {
            let s = a2n(n).unwrap();
            assert_eq!(s.len(), 2 * n);
            assert_eq!(s.pairs().count(), binom(2 * n, 2));
            let g3 = s.triples().filter(|&(_, g)| g == 3).count();
            let g4 = s.triples().filter(|&(_, g)| g == 4).count();
            assert_eq!(g3, 4 * (n - 1));
            assert_eq!(g4, 2 * n.saturating_sub(2));
            assert!(s.pairs().all(|(_, _, f)| (2..=4).contains(&f)));
        }
    }

    #[test]
    fn restriction_examples() {
        let s = a2n(2).unwrap();
        let r = s.restrict(&[X(1), Y(1)].into_iter().collect()).unwrap();
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(0, 1, 3)]);

        let full: GeneratorSubset = s.generators().iter().cloned().collect();
        assert_eq!(s.restrict(&full).unwrap(), s);

        let t = a2n(3).unwrap();
        let ys = t.restrict(&"y1,y2,y3".parse().unwrap()).unwrap();
        assert_eq!(
            ys.pairs().collect::<Vec<_>>(),
            vec![(0, 1, 4), (0, 2, 2), (1, 2, 4)]
        );
        assert_eq!(ys.triples().collect::<Vec<_>>(), vec![([0, 1, 2], 4)]);

        let bad: GeneratorSubset = [X(3)].into_iter().collect();
        assert_eq!(s.restrict(&bad), Err(Error::UnknownGenerator(X(3))));
    }

    #[test]
    fn stopover_examples() {
        assert!(stopovers(&d(&[4])).is_empty());
        assert_eq!(stopovers(&d(&[2, 1])), BTreeSet::from([2]));
        assert_eq!(stopovers(&d(&[1, 1, 1])), BTreeSet::from([1, 2]));
        // The last proper partial sum can reach n.
        assert_eq!(stopovers(&d(&[3, 1])), BTreeSet::from([3]));
    }

    #[test]
    fn stopovers_stay_inside_index_range() {
        for total in 1..=7 {
            for lambda in Decomposition::all(total) {
                assert!(stopovers(&lambda).iter().all(|&s| (1..total).contains(&s)));
            }
        }
    }

    #[test]
    fn subset_examples() {
        let s = generator_subset(&d(&[2]), &d(&[2])).unwrap();
        assert_eq!(s.iter().cloned().collect::<Vec<_>>(), vec![X(1), Y(1)]);
        assert!(generator_subset(&d(&[1, 1]), &d(&[1, 1]))
            .unwrap()
            .is_empty());
        let s = generator_subset(&d(&[1, 1, 1]), &d(&[3])).unwrap();
        assert_eq!(s.iter().cloned().collect::<Vec<_>>(), vec![Y(1), Y(2)]);
        assert!(generator_subset(&d(&[2]), &d(&[3])).is_err());
    }

    #[test]
    fn subset_symmetry_and_splitting() {
        for total in 2..=6 {
            let n = total - 1;
            for lambda in Decomposition::all(total) {
                for mu in Decomposition::all(total) {
                    let s = generator_subset(&lambda, &mu).unwrap();
                    assert_eq!(generator_subset(&mu, &lambda).unwrap(), s.swap_xy());
                    if mu.last() >= 2 {
                        let mut expected = s.clone();
                        expected.remove(&Y(n));
                        assert_eq!(
                            generator_subset(&lambda, &mu.split_last().unwrap()).unwrap(),
                            expected
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn relator_lists() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(
            a2n(1).unwrap().relators(),
            vec![w("x1 x1"), w("y1 y1"), w("x1 y1 x1 y1 x1 y1")]
        );
        assert!(TwoDimCoxeterSystem::empty().relators().is_empty());
        let xs = a2n(2).unwrap().restrict(&"x1,x2".parse().unwrap()).unwrap();
        assert_eq!(
            xs.relators(),
            vec![w("x1 x1"), w("x2 x2"), w("x1 x2 x1 x2 x1 x2 x1 x2")]
        );
    }

    #[test]
    fn relators_are_deterministic_and_canonical() {
        let s = a2n(3).unwrap();
        let first = s.relators();
        assert_eq!(first, a2n(3).unwrap().relators());
        // 6 squares, 15 pairs, 8 + 2 triples
        assert_eq!(first.len(), 6 + 15 + 10);
        let last = first.last().unwrap();
        assert_eq!(last.len(), 12);
        assert_eq!(&last.letters()[..3], &[Y(1), Y(2), Y(3)]);
    }

    #[test]
    fn explicit_construction_validates() {
        let gens = vec![Generator::Named("a".into()), Generator::Named("b".into())];
        let a = gens[0].clone();
        let b = gens[1].clone();
        assert!(TwoDimCoxeterSystem::new(gens.clone(), [], []).is_err());
        let s = TwoDimCoxeterSystem::new(gens.clone(), [(b.clone(), a.clone(), 5)], []).unwrap();
        assert_eq!(s.pair_label(&a, &b).unwrap(), 5);
        assert!(TwoDimCoxeterSystem::new(vec![a.clone(), a.clone()], [], []).is_err());
        assert!(
            TwoDimCoxeterSystem::new(gens, [(a.clone(), b.clone(), 2), (b, a, 3)], []).is_err()
        );
    }

    #[test]
    fn generator_symbols() {
        assert_eq!("x12".parse::<Generator>().unwrap(), X(12));
        assert_eq!("y1".parse::<Generator>().unwrap(), Y(1));
        assert_eq!(
            "x0".parse::<Generator>().unwrap(),
            Generator::Named("x0".into())
        );
        assert_eq!(
            "z".parse::<Generator>().unwrap(),
            Generator::Named("z".into())
        );
        assert!("".parse::<Generator>().is_err());
        assert!(X(1) < X(2) && X(9) < Y(1));
    }
}
