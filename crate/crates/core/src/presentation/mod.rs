//! Finitely presented groups.

mod tietze;

pub use tietze::{tietze_shorten, tietze_simplify, TietzeLog, TietzeMove, TietzeStats};

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::braid::{Braid, BraidError};
use crate::word::{Alphabet, GenSym, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Generators plus relators. Relators are kept cyclically reduced and
/// non-trivial, and two relators that agree up to rotation and inversion
/// are stored once.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut p = Presentation {
            alphabet,
            relators: Vec::new(),
        };
        p.extend(relators)?;
        Ok(p)
    }

    pub fn free(alphabet: Alphabet) -> Self {
        Presentation {
            alphabet,
            relators: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Quotient by the normal closure of `ws`.
    pub fn add_relators<I: IntoIterator<Item = Word>>(
        &self,
        ws: I,
    ) -> Result<Presentation, PresentationError> {
        let mut p = self.clone();
        p.extend(ws)?;
        Ok(p)
    }

    fn extend<I: IntoIterator<Item = Word>>(&mut self, ws: I) -> Result<(), PresentationError> {
        let mut seen: HashSet<Vec<usize>> = self
            .relators
            .iter()
            .map(|r| cyclic_key(&self.alphabet, r))
            .collect();
        for w in ws {
            self.alphabet.check_word(&w)?;
            let r = w.cyclically_reduce();
            if r.is_identity() {
                continue;
            }
            if seen.insert(cyclic_key(&self.alphabet, &r)) {
                self.relators.push(r);
            }
        }
        Ok(())
    }

    /// Rebuilds from parts with normalisation; callers guarantee the words
    /// are over `alphabet`.
    pub(crate) fn from_parts(alphabet: Alphabet, relators: Vec<Word>) -> Presentation {
        Presentation::new(alphabet, relators).expect("relators over the alphabet")
    }

    /// Row `i` holds the exponent sums of relator `i`.
    pub fn exponent_sums(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.alphabet.len()];
                for l in r.letters() {
                    let p = self.alphabet.position(&l.sym).expect("normalised relator");
                    row[p] += l.sign();
                }
                row
            })
            .collect()
    }

    /// Same group with generators renamed by `rename`; the map must be
    /// injective on the alphabet.
    pub fn rename(&self, rename: impl Fn(&GenSym) -> GenSym) -> Result<Presentation, PresentationError> {
        let alphabet = Alphabet::new(self.alphabet.iter().map(&rename).collect())?;
        let relators = self
            .relators
            .iter()
            .map(|r| {
                Word::reduce(r.letters().iter().map(|l| {
                    crate::word::Letter::new(rename(&l.sym), l.inverse)
                }))
            })
            .collect();
        Presentation::new(alphabet, relators)
    }
}

/// Canonical key of a relator up to cyclic rotation and inversion: the
/// lexicographically least encoding among all rotations of `r` and `r⁻¹`.
pub(crate) fn cyclic_key(alphabet: &Alphabet, r: &Word) -> Vec<usize> {
    let fwd = alphabet.encode(r).expect("relator over alphabet");
    let bwd: Vec<usize> = fwd.iter().rev().map(|c| c ^ 1).collect();
    let a = rotated(&fwd, least_rotation(&fwd));
    let b = rotated(&bwd, least_rotation(&bwd));
    a.min(b)
}

fn rotated(s: &[usize], k: usize) -> Vec<usize> {
    s[k..].iter().chain(&s[..k]).copied().collect()
}

/// Start of the lexicographically least rotation (two-pointer scan).
pub(crate) fn least_rotation(s: &[usize]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let (a, b) = (s[(i + k) % n], s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j).min(n.saturating_sub(1))
}

/// Semidirect-product relators `γ⁻¹ δ_i γ · ((δ_i)β)⁻¹` for every fiber
/// generator `δ_i` and every `(γ, β)` pair.
pub fn monodromy_relators(
    fiber: &Alphabet,
    pairs: &[(GenSym, Braid)],
) -> Result<Presentation, PresentationError> {
    let base: Vec<GenSym> = pairs.iter().map(|(g, _)| g.clone()).collect();
    let alphabet = fiber.with(&base)?;
    let mut relators = Vec::new();
    for (gamma, beta) in pairs {
        let images = beta.automorphism(fiber)?;
        let g = Word::gen(gamma);
        for (d, img) in fiber.iter().zip(&images) {
            relators.push(Word::gen(d).conjugate_by(&g).multiply(&img.invert()));
        }
    }
    Presentation::new(alphabet, relators)
}

/// The relators `δ_i⁻¹ · (δ_i)β` obtained by killing the base loops, for every
/// `δ_i` and every braid, reduced with identities and repeats dropped.
pub fn stabilizer_relators(fiber: &Alphabet, braids: &[Braid]) -> Result<Vec<Word>, PresentationError> {
    let mut out: Vec<Word> = Vec::new();
    for beta in braids {
        let images = beta.automorphism(fiber)?;
        for (d, img) in fiber.iter().zip(&images) {
            let r = Word::gen_inv(d).multiply(img);
            if !r.is_identity() && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for g in self.alphabet.iter() {
            write!(f, " {g}")?;
        }
        write!(f, " |")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {r}")?;
        }
        write!(f, " >")
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
