//! Artin braid groups and their right action on free groups.
//!
//! The generator `σ_k` acts on the free group `⟨δ_1, …, δ_n⟩` by
//!
//! ```text
//! (δ_h)σ_k     = δ_h                   h ≠ k, k+1
//! (δ_k)σ_k     = δ_{k+1}
//! (δ_{k+1})σ_k = δ_{k+1}⁻¹ δ_k δ_{k+1}
//! ```
//!
//! and the action is on the right, so a braid word is applied letter by
//! letter from left to right: `(w)(b₁b₂) = ((w)b₁)b₂`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::word::{Alphabet, GenSym, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: usize,
    pub inverse: bool,
}

/// A braid word on `strands` strands. No normal form is imposed; braids are
/// compared through their action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Braid {
    strands: usize,
    letters: Vec<ArtinLetter>,
}

impl Braid {
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        Ok(Braid {
            strands,
            letters: Vec::new(),
        })
    }

    pub fn new(strands: usize, letters: Vec<ArtinLetter>) -> Result<Self, BraidError> {
        let mut b = Braid::identity(strands)?;
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        b.letters = letters;
        Ok(b)
    }

    /// `σ_index^exp`
    pub fn sigma(strands: usize, index: usize, exp: i32) -> Result<Self, BraidError> {
        let letter = ArtinLetter {
            index,
            inverse: exp < 0,
        };
        Braid::new(strands, vec![letter; exp.unsigned_abs() as usize])
    }

    /// Builds a braid from `(index, exponent)` pairs.
    pub fn from_powers(strands: usize, powers: &[(usize, i32)]) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for &(index, exp) in powers {
            letters.extend(std::iter::repeat_n(
                ArtinLetter {
                    index,
                    inverse: exp < 0,
                },
                exp.unsigned_abs() as usize,
            ));
        }
        Braid::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Braid) -> Result<Braid, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Braid {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> Braid {
        Braid {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| ArtinLetter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Braid {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Braid {
            strands: self.strands,
            letters,
        }
    }

    /// `c⁻¹ · self · c` in the left-to-right reading.
    pub fn conjugate_by(&self, c: &Braid) -> Result<Braid, BraidError> {
        c.invert().compose(self)?.compose(c)
    }

    /// The images `(δ_h)b` of the fiber generators, in alphabet order.
    pub fn automorphism(&self, fiber: &Alphabet) -> Result<Vec<Word>, BraidError> {
        if fiber.len() != self.strands {
            return Err(BraidError::StrandMismatch(self.strands, fiber.len()));
        }
        let gens = fiber.symbols();
        let mut images: Vec<Word> = gens.iter().map(Word::gen).collect();
        for l in &self.letters {
            let step = letter_images(gens, *l);
            images = images
                .iter()
                .map(|w| w.substitute(&step))
                .collect::<Result<_, _>>()?;
        }
        Ok(images)
    }

    /// The image `(w)b` of a fiber word under the right action.
    pub fn act(&self, w: &Word, fiber: &Alphabet) -> Result<Word, BraidError> {
        fiber.check_word(w)?;
        let images = self.automorphism(fiber)?;
        let map: BTreeMap<GenSym, Word> = fiber.iter().cloned().zip(images).collect();
        Ok(w.substitute(&map)?)
    }
}

// Substitution for a single Artin letter. Indices are 1-based.
fn letter_images(gens: &[GenSym], l: ArtinLetter) -> BTreeMap<GenSym, Word> {
    let k = l.index - 1;
    let dk = Word::gen(&gens[k]);
    let dk1 = Word::gen(&gens[k + 1]);
    let mut map: BTreeMap<GenSym, Word> = gens.iter().map(|g| (g.clone(), Word::gen(g))).collect();
    if l.inverse {
        // inverse of the substitution below
        map.insert(gens[k].clone(), dk.multiply(&dk1).multiply(&dk.invert()));
        map.insert(gens[k + 1].clone(), dk);
    } else {
        map.insert(gens[k].clone(), dk1.clone());
        map.insert(gens[k + 1].clone(), dk1.invert().multiply(&dk).multiply(&dk1));
    }
    map
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match (run, l.inverse) {
                (1, false) => write!(f, "s{}", l.index)?,
                (1, true) => write!(f, "s{}'", l.index)?,
                (n, false) => write!(f, "s{}^{}", l.index, n)?,
                (n, true) => write!(f, "s{}^-{}", l.index, n)?,
            }
            i += run;
        }
        Ok(())
    }
}
