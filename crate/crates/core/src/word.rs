//! Free-group words over named generators.
//!
//! A [`Word`] is always kept freely reduced, so two words denote the same
//! element of the free group exactly when they compare equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator name must be non-empty and start with a letter: {0:?}")]
    BadName(String),
    #[error("duplicate generator {0} in alphabet")]
    DuplicateGenerator(GenSym),
    #[error("generator {0} is not in the alphabet")]
    ForeignSymbol(GenSym),
    #[error("no image given for generator {0}")]
    MissingImage(GenSym),
}

/// A named generator, e.g. `d1`, `G`, `A2_1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSym {
    name: Arc<str>,
    index: Option<u32>,
}

impl GenSym {
    pub fn new(name: &str, index: Option<u32>) -> Result<Self, WordError> {
        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric());
        if !ok {
            return Err(WordError::BadName(name.to_string()));
        }
        Ok(GenSym {
            name: Arc::from(name),
            index,
        })
    }

    /// Shorthand for an unindexed generator; panics on an invalid name.
    pub fn plain(name: &str) -> Self {
        Self::new(name, None).expect("invalid generator name")
    }

    /// Shorthand for an indexed generator; panics on an invalid name.
    pub fn indexed(name: &str, index: u32) -> Self {
        Self::new(name, Some(index)).expect("invalid generator name")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }
}

impl fmt::Display for GenSym {
    // A trailing digit in the name would make the index ambiguous, so it is
    // separated by `_` (and a bare digit-terminated name gets a trailing `_`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digit_tail = self.name.ends_with(|c: char| c.is_ascii_digit());
        match (self.index, digit_tail) {
            (Some(i), false) => write!(f, "{}{}", self.name, i),
            (Some(i), true) => write!(f, "{}_{}", self.name, i),
            (None, false) => write!(f, "{}", self.name),
            (None, true) => write!(f, "{}_", self.name),
        }
    }
}

impl fmt::Debug for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A generator or its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub sym: GenSym,
    pub inverse: bool,
}

impl Letter {
    pub fn new(sym: GenSym, inverse: bool) -> Self {
        Letter { sym, inverse }
    }

    pub fn inv(&self) -> Letter {
        Letter {
            sym: self.sym.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.sym == other.sym && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(sym: &GenSym) -> Self {
        Word {
            letters: vec![Letter::new(sym.clone(), false)],
        }
    }

    pub fn gen_inv(sym: &GenSym) -> Self {
        Word {
            letters: vec![Letter::new(sym.clone(), true)],
        }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|top| top.cancels(&l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Builds `sym^exp` for every `(sym, exp)` pair in turn.
    pub fn from_powers<'a, I: IntoIterator<Item = (&'a GenSym, i64)>>(powers: I) -> Self {
        let mut letters = Vec::new();
        for (sym, e) in powers {
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(sym.clone(), e < 0));
            }
        }
        Word::reduce(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for l in &other.letters {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word { letters: out }
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inv).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `c⁻¹ w c`
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.invert().multiply(self).multiply(c)
    }

    /// `u v u⁻¹ v⁻¹`
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.multiply(v).multiply(&u.invert()).multiply(&v.invert())
    }

    /// Applies the homomorphism given by `images` to every letter.
    pub fn substitute(&self, images: &BTreeMap<GenSym, Word>) -> Result<Word, WordError> {
        let mut out = Word::identity();
        for l in &self.letters {
            let img = images
                .get(&l.sym)
                .ok_or_else(|| WordError::MissingImage(l.sym.clone()))?;
            if l.inverse {
                out = out.multiply(&img.invert());
            } else {
                out = out.multiply(img);
            }
        }
        Ok(out)
    }

    /// Like [`Word::substitute`] but leaves generators without an image fixed.
    pub fn substitute_partial(&self, images: &BTreeMap<GenSym, Word>) -> Word {
        let mut out = Word::identity();
        for l in &self.letters {
            match images.get(&l.sym) {
                Some(img) if l.inverse => out = out.multiply(&img.invert()),
                Some(img) => out = out.multiply(img),
                None => out = out.multiply(&Word { letters: vec![l.clone()] }),
            }
        }
        out
    }

    /// Strips matching letters from both ends so the word is reduced as a
    /// cyclic word.
    pub fn cyclically_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j >= i + 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    /// Rotation starting at position `k` (taken mod the length).
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::reduce(letters)
    }

    /// True when the two words are conjugate in the free group.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let a = self.cyclically_reduce();
        let b = other.cyclically_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|k| a.rotate(k) == b)
    }

    pub fn exponent_sum(&self, sym: &GenSym) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.sym == sym)
            .map(Letter::sign)
            .sum()
    }

    /// Number of letters (either sign) on `sym`.
    pub fn occurrences(&self, sym: &GenSym) -> usize {
        self.letters.iter().filter(|l| &l.sym == sym).count()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &GenSym> {
        self.letters.iter().map(|l| &l.sym)
    }
}

impl std::ops::Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == *l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match (run, l.inverse) {
                (1, false) => write!(f, "{}", l.sym)?,
                (1, true) => write!(f, "{}'", l.sym)?,
                (n, false) => write!(f, "{}^{}", l.sym, n)?,
                (n, true) => write!(f, "{}^-{}", l.sym, n)?,
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// An ordered set of generators. The order fixes column positions in
/// relation matrices and coset tables, and strand numbers for braids.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    symbols: Vec<GenSym>,
    positions: HashMap<GenSym, usize>,
}

impl Alphabet {
    pub fn new(symbols: Vec<GenSym>) -> Result<Self, WordError> {
        let mut positions = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if positions.insert(s.clone(), i).is_some() {
                return Err(WordError::DuplicateGenerator(s.clone()));
            }
        }
        Ok(Alphabet { symbols, positions })
    }

    /// `name1, name2, …, name{n}`
    pub fn indexed(name: &str, n: u32) -> Self {
        Alphabet::new((1..=n).map(|i| GenSym::indexed(name, i)).collect())
            .expect("indexed names are distinct")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[GenSym] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> Option<&GenSym> {
        self.symbols.get(i)
    }

    pub fn position(&self, sym: &GenSym) -> Option<usize> {
        self.positions.get(sym).copied()
    }

    pub fn contains(&self, sym: &GenSym) -> bool {
        self.positions.contains_key(sym)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GenSym> {
        self.symbols.iter()
    }

    /// Errors on the first letter of `w` outside this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<(), WordError> {
        match w.symbols().find(|s| !self.contains(s)) {
            Some(s) => Err(WordError::ForeignSymbol(s.clone())),
            None => Ok(()),
        }
    }

    /// Encodes a word as column indices: generator `i` is `2i`, its inverse `2i+1`.
    pub fn encode(&self, w: &Word) -> Result<Vec<usize>, WordError> {
        w.letters()
            .iter()
            .map(|l| {
                self.position(&l.sym)
                    .map(|p| 2 * p + usize::from(l.inverse))
                    .ok_or_else(|| WordError::ForeignSymbol(l.sym.clone()))
            })
            .collect()
    }

    pub fn with(&self, extra: &[GenSym]) -> Result<Alphabet, WordError> {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(extra);
        Alphabet::new(symbols)
    }

    pub fn without(&self, sym: &GenSym) -> Alphabet {
        Alphabet::new(self.symbols.iter().filter(|s| *s != sym).cloned().collect())
            .expect("subset of a valid alphabet")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Alphabet {
    type Item = &'a GenSym;
    type IntoIter = std::slice::Iter<'a, GenSym>;
    fn into_iter(self) -> Self::IntoIter {
        self.symbols.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> GenSym {
        GenSym::plain("a")
    }
    fn b() -> GenSym {
        GenSym::plain("b")
    }
    fn c() -> GenSym {
        GenSym::plain("c")
    }
    fn l(s: &GenSym, inv: bool) -> Letter {
        Letter::new(s.clone(), inv)
    }

    #[test]
    fn reduce_cancels_adjacent_pairs() {
        assert!(Word::reduce([l(&a(), false), l(&a(), true)]).is_identity());
        let w = Word::reduce([l(&a(), false), l(&b(), false), l(&b(), true), l(&a(), false)]);
        assert_eq!(w, Word::from_powers([(&a(), 2)]));
        let w = Word::reduce([l(&a(), false), l(&b(), true), l(&a(), true)]);
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn multiply_examples() {
        let ab = Word::from_powers([(&a(), 1), (&b(), 1)]);
        let bic = Word::from_powers([(&b(), -1), (&c(), 1)]);
        assert_eq!(&ab * &bic, Word::from_powers([(&a(), 1), (&c(), 1)]));
        assert_eq!(&ab * &Word::identity(), ab);

        let d4 = GenSym::indexed("d", 4);
        let d5 = GenSym::indexed("d", 5);
        let u = Word::from_powers([(&d4, 1), (&d5, 1)]);
        let v = Word::from_powers([(&d5, 1), (&d4, 1)]);
        assert_eq!(&u * &v, Word::from_powers([(&d4, 1), (&d5, 2), (&d4, 1)]));
    }

    #[test]
    fn invert_examples() {
        let w = Word::from_powers([(&a(), 1), (&b(), -1)]);
        assert_eq!(w.invert(), Word::from_powers([(&b(), 1), (&a(), -1)]));
        assert!(Word::identity().invert().is_identity());
        let d1 = GenSym::indexed("d", 1);
        let d2 = GenSym::indexed("d", 2);
        let w = Word::from_powers([(&d2, -1), (&d1, 1), (&d2, 1)]);
        assert_eq!(w.invert(), Word::from_powers([(&d2, -1), (&d1, -1), (&d2, 1)]));
    }

    #[test]
    fn substitute_examples() {
        let bc = Word::from_powers([(&b(), 1), (&c(), 1)]);
        let images = BTreeMap::from([(a(), bc.clone())]);
        assert_eq!(Word::from_powers([(&a(), 2)]).substitute(&images).unwrap(), &bc * &bc);

        let images = BTreeMap::from([(a(), Word::identity()), (b(), Word::gen(&b()))]);
        let w = Word::from_powers([(&a(), 1), (&b(), 1), (&a(), -1)]);
        assert_eq!(w.substitute(&images).unwrap(), Word::gen(&b()));

        let images = BTreeMap::from([(a(), Word::gen(&b()))]);
        assert_eq!(
            Word::gen(&c()).substitute(&images),
            Err(WordError::MissingImage(c()))
        );
    }

    #[test]
    fn cyclic_reduction_and_conjugacy() {
        let w = Word::from_powers([(&a(), 1), (&b(), 1), (&c(), 1), (&a(), -1)]);
        assert_eq!(w.cyclically_reduce(), Word::from_powers([(&b(), 1), (&c(), 1)]));
        let v = Word::from_powers([(&c(), 1), (&b(), 1)]);
        assert!(w.is_conjugate_to(&v));
        assert!(!w.is_conjugate_to(&Word::from_powers([(&b(), 1), (&b(), 1)])));
    }

    #[test]
    fn gensym_display_disambiguates_digit_tails() {
        assert_eq!(GenSym::indexed("d", 1).to_string(), "d1");
        assert_eq!(GenSym::indexed("A2", 3).to_string(), "A2_3");
        assert_eq!(GenSym::plain("A2").to_string(), "A2_");
        assert!(GenSym::new("", None).is_err());
        assert!(GenSym::new("2a", None).is_err());
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(Alphabet::new(vec![a(), b(), a()]).is_err());
        let al = Alphabet::new(vec![a(), b()]).unwrap();
        assert_eq!(al.encode(&Word::from_powers([(&b(), -1), (&a(), 1)])).unwrap(), vec![3, 0]);
        assert!(al.check_word(&Word::gen(&c())).is_err());
    }
}
