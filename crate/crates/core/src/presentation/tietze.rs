//! Deterministic Tietze simplification.
//!
//! Each round tries, in order:
//!
//! 1. eliminating a generator that occurs exactly once in some relator
//!    (shortest relator first, then alphabet order), provided the total
//!    relator length does not grow;
//! 2. shortening a relator by replacing a cyclic subword that makes up more
//!    than half of a shorter (or equal) relator by the inverse of the rest.
//!
//! Duplicate relators (up to rotation and inversion) are merged by
//! [`Presentation`] normalisation after every move.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{cyclic_key, Presentation};
use crate::word::{Alphabet, GenSym, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    AddRelator(Word),
    RemoveRelator(Word),
    AddGenerator { sym: GenSym, definition: Word },
    EliminateGenerator { sym: GenSym, replacement: Word },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TietzeLog {
    pub moves: Vec<TietzeMove>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct TietzeStats {
    pub eliminations: usize,
    pub substitutions: usize,
}

impl TietzeLog {
    /// Replays the moves on `source`.
    pub fn replay(&self, source: &Presentation) -> Presentation {
        let mut p = source.clone();
        for m in &self.moves {
            p = match m {
                TietzeMove::AddRelator(w) => p.add_relators([w.clone()]).expect("logged relator"),
                TietzeMove::RemoveRelator(w) => {
                    let key = cyclic_key(&p.alphabet, w);
                    let rels = p
                        .relators
                        .iter()
                        .filter(|r| cyclic_key(&p.alphabet, r) != key)
                        .cloned()
                        .collect();
                    Presentation::from_parts(p.alphabet.clone(), rels)
                }
                TietzeMove::AddGenerator { sym, definition } => {
                    let alphabet = p.alphabet.with(std::slice::from_ref(sym)).expect("fresh generator");
                    let mut rels = p.relators.clone();
                    rels.push(Word::gen_inv(sym).multiply(definition));
                    Presentation::from_parts(alphabet, rels)
                }
                TietzeMove::EliminateGenerator { sym, replacement } => eliminate(&p, sym, replacement),
            };
        }
        p
    }

    /// Rewrites a word over the source alphabet into the target alphabet by
    /// substituting every eliminated generator.
    pub fn express(&self, w: &Word) -> Word {
        let mut out = w.clone();
        for m in &self.moves {
            if let TietzeMove::EliminateGenerator { sym, replacement } = m {
                let map = BTreeMap::from([(sym.clone(), replacement.clone())]);
                out = out.substitute_partial(&map);
            }
        }
        out
    }

    pub fn stats(&self) -> TietzeStats {
        let eliminations = self
            .moves
            .iter()
            .filter(|m| matches!(m, TietzeMove::EliminateGenerator { .. }))
            .count();
        let substitutions = self
            .moves
            .iter()
            .filter(|m| matches!(m, TietzeMove::AddRelator(_)))
            .count();
        TietzeStats {
            eliminations,
            substitutions,
        }
    }
}

fn eliminate(p: &Presentation, sym: &GenSym, replacement: &Word) -> Presentation {
    let map = BTreeMap::from([(sym.clone(), replacement.clone())]);
    let rels = p.relators.iter().map(|r| r.substitute_partial(&map)).collect();
    Presentation::from_parts(p.alphabet.without(sym), rels)
}

/// `g = replacement`, solved from a relator in which `g` occurs exactly once.
fn solve_for(r: &Word, sym: &GenSym) -> Word {
    let pos = r
        .letters()
        .iter()
        .position(|l| &l.sym == sym)
        .expect("generator occurs in relator");
    let rot = r.rotate(pos);
    // rot = g^ε · rest
    let rest = Word::reduce(rot.letters()[1..].iter().cloned());
    if rot.letters()[0].inverse {
        rest
    } else {
        rest.invert()
    }
}

fn try_elimination(p: &Presentation) -> Option<(GenSym, Word, Presentation)> {
    let mut order: Vec<usize> = (0..p.relators.len()).collect();
    order.sort_by_key(|&i| (p.relators[i].len(), i));
    for i in order {
        let r = &p.relators[i];
        for sym in p.alphabet.iter() {
            if r.occurrences(sym) != 1 {
                continue;
            }
            let replacement = solve_for(r, sym);
            let map = BTreeMap::from([(sym.clone(), replacement.clone())]);
            // only relators containing `sym` change length
            let (mut before, mut after) = (0, 0);
            for s in p.relators.iter().filter(|s| s.occurrences(sym) > 0) {
                before += s.len();
                after += s.substitute_partial(&map).cyclically_reduce().len();
            }
            if after <= before {
                return Some((sym.clone(), replacement.clone(), eliminate(p, sym, &replacement)));
            }
        }
    }
    None
}

const HASH_BASE: u64 = 0x0100_0000_01b3;

fn prefix_hashes(seq: &[usize]) -> Vec<u64> {
    let mut h = Vec::with_capacity(seq.len() + 1);
    h.push(0u64);
    for &c in seq {
        let last = *h.last().expect("non-empty");
        h.push(last.wrapping_mul(HASH_BASE).wrapping_add(c as u64 + 1));
    }
    h
}

fn window(h: &[u64], pw: u64, start: usize, len: usize) -> u64 {
    h[start + len].wrapping_sub(h[start].wrapping_mul(pw))
}

fn invert_codes(s: &[usize]) -> Vec<usize> {
    s.iter().rev().map(|c| c ^ 1).collect()
}

fn reduce_codes<I: IntoIterator<Item = usize>>(codes: I) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for c in codes {
        if out.last() == Some(&(c ^ 1)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    let (mut lo, mut hi) = (0, out.len());
    while hi - lo >= 2 && out[lo] == out[hi - 1] ^ 1 {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

// Length of the common prefix of `c` (cyclic, from `k`) and `r` (cyclic,
// from `start`), capped at `|c|`.
fn cyclic_lcp(c: &[usize], k: usize, r: &[usize], start: usize) -> usize {
    let n = c.len();
    let mut l = 0;
    while l < n && c[(k + l) % n] == r[(start + l) % r.len()] {
        l += 1;
    }
    l
}

/// Shortens the cyclic word `r` using the relator `s`: if some rotation of
/// `s^{±1}` shares a cyclic subword with `r` longer than half of `s`, that
/// subword is replaced by the inverse of the rest of the rotation.
fn shorten_with(r: &[usize], s: &[usize]) -> Option<Vec<usize>> {
    let n = s.len();
    if n == 0 || n > r.len() {
        return None;
    }
    let h = n / 2 + 1;
    let pw = (0..h).fold(1u64, |acc, _| acc.wrapping_mul(HASH_BASE));
    let bases = [s.to_vec(), invert_codes(s)];
    let mut table: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
    for (b, base) in bases.iter().enumerate() {
        let doubled: Vec<usize> = base.iter().chain(base.iter()).copied().collect();
        let ph = prefix_hashes(&doubled);
        for k in 0..n {
            table.entry(window(&ph, pw, k, h)).or_default().push((b, k));
        }
    }
    let rd: Vec<usize> = r.iter().chain(r.iter()).copied().collect();
    let rh = prefix_hashes(&rd);
    let mut best: Option<(usize, usize, usize, usize)> = None; // (len, start, base, rotation)
    for start in 0..r.len() {
        let Some(cands) = table.get(&window(&rh, pw, start, h)) else {
            continue;
        };
        for &(b, k) in cands {
            let l = cyclic_lcp(&bases[b], k, r, start);
            if l >= h && best.is_none_or(|x| l > x.0) {
                best = Some((l, start, b, k));
            }
        }
    }
    let (l, start, b, k) = best?;
    let c = &bases[b];
    // rotation of s is u v with u matched, so u = v⁻¹
    let v_inv = invert_codes(&(l..n).map(|i| c[(k + i) % n]).collect::<Vec<_>>());
    let rest = (l..r.len()).map(|i| r[(start + i) % r.len()]);
    let out = reduce_codes(v_inv.into_iter().chain(rest));
    (out.len() < r.len()).then_some(out)
}

fn decode(alphabet: &Alphabet, codes: &[usize]) -> Word {
    Word::reduce(codes.iter().map(|&c| {
        Letter::new(alphabet.get(c / 2).expect("code in range").clone(), c & 1 == 1)
    }))
}

/// One pass of substring rewriting over every relator. Returns `None` if
/// nothing changed.
fn substring_pass(p: &Presentation, log: &mut TietzeLog, budget: &mut usize) -> Option<Presentation> {
    let al = &p.alphabet;
    let mut rels: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| al.encode(r).expect("relator over alphabet"))
        .collect();
    let mut changed = false;
    for ri in 0..rels.len() {
        'again: while *budget > 0 && !rels[ri].is_empty() {
            let mut order: Vec<usize> = (0..rels.len()).collect();
            order.sort_by_key(|&i| (rels[i].len(), i));
            for si in order {
                if si == ri || rels[si].is_empty() || rels[si].len() > rels[ri].len() {
                    continue;
                }
                if let Some(new) = shorten_with(&rels[ri], &rels[si]) {
                    if !new.is_empty() {
                        log.moves.push(TietzeMove::AddRelator(decode(al, &new)));
                    }
                    log.moves.push(TietzeMove::RemoveRelator(decode(al, &rels[ri])));
                    rels[ri] = new;
                    *budget -= 1;
                    changed = true;
                    continue 'again;
                }
            }
            break;
        }
    }
    changed.then(|| Presentation::from_parts(al.clone(), rels.iter().map(|r| decode(al, r)).collect()))
}

/// Simplifies `p` with at most `budget` moves. The result presents the same
/// group; the log replays the transformation.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> (Presentation, TietzeLog) {
    let mut cur = p.clone();
    let mut log = TietzeLog::default();
    let mut left = budget;
    while left > 0 {
        if let Some((sym, replacement, q)) = try_elimination(&cur) {
            log.moves.push(TietzeMove::EliminateGenerator { sym, replacement });
            cur = q;
            left -= 1;
            continue;
        }
        match substring_pass(&cur, &mut log, &mut left) {
            Some(q) => cur = q,
            None => break,
        }
    }
    (cur, log)
}

/// Substring rewriting only: shortens relators without removing any
/// generator, so generator names survive.
pub fn tietze_shorten(p: &Presentation, budget: usize) -> (Presentation, TietzeLog) {
    let mut cur = p.clone();
    let mut log = TietzeLog::default();
    let mut left = budget;
    while left > 0 {
        match substring_pass(&cur, &mut log, &mut left) {
            Some(q) => cur = q,
            None => break,
        }
    }
    (cur, log)
}
