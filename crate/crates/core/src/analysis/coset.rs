//! HLT coset enumeration with union-find coincidence processing.

use std::collections::VecDeque;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::{Alphabet, Word, WordError};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("coset enumeration overflowed the budget of {0} cosets")]
    Overflow(usize),
    #[error("coset budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A complete coset table. Coset 0 is the subgroup itself; column `2i` is
/// generator `i` and column `2i+1` its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    alphabet: Alphabet,
    rows: Vec<Vec<u32>>,
    defined: usize,
}

impl CosetTable {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of cosets; the group order for a trivial-subgroup enumeration.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of cosets defined during enumeration, dead ones included.
    pub fn cosets_defined(&self) -> usize {
        self.defined
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn image(&self, coset: usize, column: usize) -> usize {
        self.rows[coset][column] as usize
    }

    /// The coset reached from `coset` along `w`.
    pub fn trace(&self, coset: usize, w: &Word) -> Result<usize, WordError> {
        let cols = self.alphabet.encode(w)?;
        Ok(cols.iter().fold(coset, |c, &x| self.rows[c][x] as usize))
    }

    /// True iff `w` fixes every coset. For a trivial-subgroup table this is
    /// exactly `w = 1` in the group.
    pub fn holds_in(&self, w: &Word) -> Result<bool, WordError> {
        let cols = self.alphabet.encode(w)?;
        Ok((0..self.rows.len()).all(|c| cols.iter().fold(c, |c, &x| self.rows[c][x] as usize) == c))
    }

    /// True iff every pair of generators commutes on the cosets.
    pub fn is_abelian(&self) -> bool {
        let n = self.alphabet.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (0..self.rows.len()).all(|c| {
                    let ab = self.rows[self.rows[c][2 * i] as usize][2 * j];
                    let ba = self.rows[self.rows[c][2 * j] as usize][2 * i];
                    ab == ba
                })
            })
        })
    }

    /// Checks closure, relator tracing and inverse columns.
    pub fn is_consistent_with(&self, p: &Presentation) -> bool {
        let n = self.rows.len() as u32;
        for row in &self.rows {
            if row.iter().any(|&x| x >= n) {
                return false;
            }
        }
        for (c, row) in self.rows.iter().enumerate() {
            for (x, &d) in row.iter().enumerate() {
                if self.rows[d as usize][x ^ 1] as usize != c {
                    return false;
                }
            }
        }
        p.relators().iter().all(|r| self.holds_in(r).unwrap_or(false))
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: VecDeque<u32>,
    max: usize,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> Result<u32, EnumerationError> {
        if self.count() >= self.max {
            return Err(EnumerationError::Overflow(self.max));
        }
        let c = self.count() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        Ok(c)
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, EnumerationError> {
        let d = self.new_coset()?;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != NONE {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<(), EnumerationError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`.
pub fn todd_coxeter_subgroup(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::ZeroBudget);
    }
    let alphabet = p.alphabet().clone();
    let ncols = 2 * alphabet.len();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| alphabet.encode(r))
        .collect::<Result<_, _>>()?;
    let subgroup: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|w| alphabet.encode(w))
        .collect::<Result<_, _>>()?;

    let mut e = Enumerator {
        ncols,
        table: Vec::new(),
        parent: Vec::new(),
        queue: VecDeque::new(),
        max: max_cosets,
    };
    e.new_coset()?;
    for h in &subgroup {
        e.scan_and_fill(0, h)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.count() {
        for r in &relators {
            if !e.alive(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        for x in 0..ncols {
            if !e.alive(c) {
                break;
            }
            if e.get(c, x) == NONE {
                e.define(c, x)?;
            }
        }
        c += 1;
    }
    Ok(standardise(&e, alphabet))
}

/// Order of the group: enumeration over the trivial subgroup.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<CosetTable, EnumerationError> {
    todd_coxeter_subgroup(p, &[], max_cosets)
}

// Renumbers live cosets in breadth-first order from coset 0.
fn standardise(e: &Enumerator, alphabet: Alphabet) -> CosetTable {
    let n = e.count();
    let mut new_id = vec![NONE; n];
    let mut order = vec![0u32];
    new_id[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for x in 0..e.ncols {
            let d = e.get(c, x);
            debug_assert!(d != NONE && e.parent[d as usize] == d);
            if new_id[d as usize] == NONE {
                new_id[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
        k += 1;
    }
    let rows = order
        .iter()
        .map(|&c| (0..e.ncols).map(|x| new_id[e.get(c, x) as usize]).collect())
        .collect();
    CosetTable {
        alphabet,
        rows,
        defined: n,
    }
}
