//! HLT-style Todd–Coxeter coset enumeration for involutive generators.
//!
//! Every generator is its own inverse, so the table has one column per
//! generator and defining `c·x = d` also defines `d·x = c`. Coincidences are
//! merged through a union-find forest; the smaller coset number survives.
//! Cosets are scanned in creation order and relators in the order given, so
//! the result is a deterministic function of the input.

use std::collections::VecDeque;
use std::io::{self, Write};

use crate::coxeter::{Generator, TwoDimCoxeterSystem};
use crate::error::{Error, Result};
use crate::fp_group::Word;

/// Default cap on coset rows the enumerator may allocate.
pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

const NONE: u32 = u32::MAX;

/// A completed, standardized coset table. Coset 0 is the subgroup itself and
/// cosets are numbered in breadth-first order from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<Generator>,
    num_cosets: usize,
    action: Vec<u32>,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Tables are only handed out once enumeration has closed.
    pub fn is_complete(&self) -> bool {
        true
    }

    /// Image of `coset` under the generator at position `gen`.
    pub fn act(&self, coset: usize, gen: usize) -> usize {
        self.action[coset * self.generators.len() + gen] as usize
    }

    /// The coset reached from `start` by applying `word` letter by letter.
    pub fn trace(&self, start: usize, word: &Word) -> Result<usize> {
        let mut c = start;
        for g in word.letters() {
            let col = self
                .generators
                .iter()
                .position(|h| h == g)
                .ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
            c = self.act(c, col);
        }
        Ok(c)
    }

    /// `coset,generator,target` rows with a header line.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "coset,generator,target")?;
        for c in 0..self.num_cosets {
            for (x, g) in self.generators.iter().enumerate() {
                writeln!(out, "{c},{g},{}", self.act(c, x))?;
            }
        }
        Ok(())
    }
}

struct Enumerator {
    ngens: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        Self {
            ngens,
            table: vec![NONE; ngens],
            parent: vec![0],
            max_cosets,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ngens + x as usize]
    }

    #[inline]
    fn put(&mut self, c: u32, x: u32, d: u32) {
        self.table[c as usize * self.ngens + x as usize] = d;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: u32) -> Result<()> {
        let d = self.parent.len();
        if d >= self.max_cosets {
            return Err(Error::CosetLimit {
                limit: self.max_cosets,
            });
        }
        let d = d as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ngens));
        self.put(c, x, d);
        self.put(d, x, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop as usize] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut head = 0;
        while head < self.queue.len() {
            let e = self.queue[head];
            head += 1;
            for x in 0..self.ngens as u32 {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.put(f, x, NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let e1x = self.get(e1, x);
                if e1x != NONE {
                    self.merge(f1, e1x);
                    continue;
                }
                let f1x = self.get(f1, x);
                if f1x != NONE {
                    self.merge(e1, f1x);
                } else {
                    self.put(e1, x, f1);
                    self.put(f1, x, e1);
                }
            }
        }
    }

    /// Traces `word` from `c` forwards and backwards, defining new cosets
    /// until the cycle closes at `c`.
    fn scan_and_fill(&mut self, c: u32, word: &[u32]) -> Result<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, word.len());
        loop {
            while i < j {
                let t = self.get(f, word[i]);
                if t == NONE {
                    break;
                }
                f = t;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let t = self.get(b, word[j - 1]);
                if t == NONE {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.put(f, word[i], b);
                self.put(b, word[i], f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    fn run(&mut self, subgroup: &[Vec<u32>], relators: &[Vec<u32>]) -> Result<()> {
        for w in subgroup {
            let start = self.rep(0);
            self.scan_and_fill(start, w)?;
        }
        let mut c = 0u32;
        while (c as usize) < self.parent.len() {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            if self.is_live(c) {
                for x in 0..self.ngens as u32 {
                    if self.get(c, x) == NONE {
                        self.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Breadth-first renumbering of live cosets starting from the subgroup.
    fn standardize(mut self, generators: Vec<Generator>) -> CosetTable {
        let start = self.rep(0);
        let mut number = vec![NONE; self.parent.len()];
        let mut order = Vec::new();
        let mut frontier = VecDeque::from([start]);
        number[start as usize] = 0;
        order.push(start);
        while let Some(c) = frontier.pop_front() {
            for x in 0..self.ngens as u32 {
                let d = self.get(c, x);
                debug_assert!(
                    d != NONE && self.is_live(d),
                    "incomplete table after enumeration"
                );
                if number[d as usize] == NONE {
                    number[d as usize] = order.len() as u32;
                    order.push(d);
                    frontier.push_back(d);
                }
            }
        }
        let mut action = Vec::with_capacity(order.len() * self.ngens);
        for &c in &order {
            for x in 0..self.ngens as u32 {
                action.push(number[self.get(c, x) as usize]);
            }
        }
        CosetTable {
            generators,
            num_cosets: order.len(),
            action,
        }
    }
}

fn encode(system: &TwoDimCoxeterSystem, w: &Word) -> Result<Vec<u32>> {
    w.letters()
        .iter()
        .map(|g| {
            system
                .position(g)
                .map(|p| p as u32)
                .ok_or_else(|| Error::UnknownGenerator(g.clone()))
        })
        .collect()
}

/// Enumerates the cosets of `H = ⟨subgroup_gens⟩` in the group presented by
/// `system`. The returned table has `[G : H]` cosets.
pub fn coset_enumerate(
    system: &TwoDimCoxeterSystem,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if system.is_empty() {
        if let Some(w) = subgroup_gens.iter().find(|w| !w.is_empty()) {
            return Err(Error::InvalidSystem(format!(
                "subgroup word `{w}` over a system with no generators"
            )));
        }
    }
    let subgroup = subgroup_gens
        .iter()
        .map(|w| encode(system, w))
        .collect::<Result<Vec<_>>>()?;
    let relators = system
        .relators()
        .iter()
        .map(|w| encode(system, w))
        .collect::<Result<Vec<_>>>()?;
    let mut e = Enumerator::new(system.len(), max_cosets.max(1));
    e.run(&subgroup, &relators)?;
    Ok(e.standardize(system.generators().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::a2n;

    fn named(n: usize) -> Vec<Generator> {
        (0..n).map(|i| Generator::Named(format!("s{i}"))).collect()
    }

    /// Linear Coxeter diagram with the given consecutive labels.
    fn linear_coxeter(labels: &[u32]) -> TwoDimCoxeterSystem {
        let gens = named(labels.len() + 1);
        let mut pairs = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let f = if j == i + 1 { labels[i] } else { 2 };
                pairs.push((gens[i].clone(), gens[j].clone(), f));
            }
        }
        TwoDimCoxeterSystem::new(gens, pairs, []).unwrap()
    }

    fn order(s: &TwoDimCoxeterSystem) -> usize {
        coset_enumerate(s, &[], DEFAULT_MAX_COSETS)
            .unwrap()
            .num_cosets()
    }

    #[test]
    fn classical_coxeter_orders() {
        assert_eq!(order(&linear_coxeter(&[3])), 6);
        assert_eq!(order(&linear_coxeter(&[4])), 8);
        assert_eq!(order(&linear_coxeter(&[3, 3])), 24);
        assert_eq!(order(&linear_coxeter(&[4, 3])), 48);
        assert_eq!(order(&linear_coxeter(&[5, 3])), 120);
        assert_eq!(order(&linear_coxeter(&[3, 3, 3])), 120);
        assert_eq!(order(&linear_coxeter(&[5, 3, 3])), 14400);
    }

    #[test]
    fn a21_is_symmetric_group() {
        assert_eq!(order(&a2n(1).unwrap()), 6);
    }

    #[test]
    fn whole_group_as_subgroup() {
        let s = a2n(2).unwrap();
        let gens: Vec<Word> = s
            .generators()
            .iter()
            .map(|g| Word::from(vec![g.clone()]))
            .collect();
        assert_eq!(coset_enumerate(&s, &gens, 100).unwrap().num_cosets(), 1);
    }

    #[test]
    fn coset_limit_is_reported() {
        let s = linear_coxeter(&[5, 3, 3]);
        assert_eq!(
            coset_enumerate(&s, &[], 1000),
            Err(Error::CosetLimit { limit: 1000 })
        );
    }

    #[test]
    fn completed_tables_are_involutive_and_satisfy_relators() {
        let s = a2n(2).unwrap();
        for subgroup in [vec![], vec![Word::from(vec![Generator::X(1)])]] {
            let t = coset_enumerate(&s, &subgroup, DEFAULT_MAX_COSETS).unwrap();
            for c in 0..t.num_cosets() {
                for x in 0..s.len() {
                    assert_eq!(t.act(t.act(c, x), x), c);
                }
                for r in s.relators() {
                    assert_eq!(t.trace(c, &r).unwrap(), c);
                }
            }
            for w in &subgroup {
                assert_eq!(t.trace(0, w).unwrap(), 0);
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let s = a2n(2).unwrap();
        let h = vec![Word::from(vec![Generator::Y(2)])];
        let a = coset_enumerate(&s, &h, DEFAULT_MAX_COSETS).unwrap();
        let b = coset_enumerate(&s, &h, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(a, b);
        let mut csv_a = Vec::new();
        let mut csv_b = Vec::new();
        a.write_csv(&mut csv_a).unwrap();
        b.write_csv(&mut csv_b).unwrap();
        assert_eq!(csv_a, csv_b);
    }

    #[test]
    fn unknown_letters_rejected() {
        let s = a2n(1).unwrap();
        let h = vec![Word::from(vec![Generator::X(2)])];
        assert_eq!(
            coset_enumerate(&s, &h, 10),
            Err(Error::UnknownGenerator(Generator::X(2)))
        );
        let empty = TwoDimCoxeterSystem::empty();
        assert!(matches!(
            coset_enumerate(&empty, &h, 10),
            Err(Error::InvalidSystem(_))
        ));
        assert_eq!(
            coset_enumerate(&empty, &[Word::empty()], 10)
                .unwrap()
                .num_cosets(),
            1
        );
    }

    #[test]
    fn csv_dump() {
        let t = coset_enumerate(&a2n(1).unwrap(), &[], 100).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 6 * 2);
        assert!(text.starts_with("coset,generator,target\n0,x1,1\n"));
    }
}
