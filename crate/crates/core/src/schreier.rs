//! Reidemeister-Schreier presentations of kernels of maps onto ℤ/n.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::presentation::{Presentation, PresentationError};
use crate::word::{Alphabet, GenSym, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchreierError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("no image given for generator {0}")]
    MissingImage(GenSym),
    #[error("relator {0} does not map to 0")]
    InconsistentMap(String),
    #[error("the map is not onto Z/{0}")]
    NotSurjective(u32),
    #[error("invalid transversal: {0}")]
    BadTransversal(String),
    #[error("word {0} is not in the kernel")]
    NotInKernel(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// A homomorphism onto `ℤ/modulus` given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicMap {
    modulus: u32,
    images: BTreeMap<GenSym, u32>,
}

impl CyclicMap {
    /// Checks that every generator of `p` has an image and every relator
    /// maps to 0.
    pub fn new<I>(p: &Presentation, modulus: u32, images: I) -> Result<Self, SchreierError>
    where
        I: IntoIterator<Item = (GenSym, i64)>,
    {
        if modulus == 0 {
            return Err(SchreierError::ZeroModulus);
        }
        let images: BTreeMap<GenSym, u32> = images
            .into_iter()
            .map(|(g, v)| (g, v.rem_euclid(modulus as i64) as u32))
            .collect();
        if let Some(g) = p.alphabet().iter().find(|g| !images.contains_key(*g)) {
            return Err(SchreierError::MissingImage(g.clone()));
        }
        let q = CyclicMap { modulus, images };
        if let Some(r) = p.relators().iter().find(|r| q.evaluate(r) != Ok(0)) {
            return Err(SchreierError::InconsistentMap(r.to_string()));
        }
        Ok(q)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn image(&self, g: &GenSym) -> Option<u32> {
        self.images.get(g).copied()
    }

    pub fn evaluate(&self, w: &Word) -> Result<u32, SchreierError> {
        let n = self.modulus as i64;
        let mut acc = 0i64;
        for l in w.letters() {
            let v = self.image(&l.sym).ok_or_else(|| SchreierError::MissingImage(l.sym.clone()))?;
            acc += l.sign() * v as i64;
        }
        Ok(acc.rem_euclid(n) as u32)
    }

    fn step(&self, coset: u32, l: &Letter) -> u32 {
        let n = self.modulus as i64;
        let v = self.images[&l.sym] as i64;
        (coset as i64 + l.sign() * v).rem_euclid(n) as u32
    }
}

/// Coset representatives indexed by residue; the representative of 0 is
/// the identity and the set is prefix-closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    reps: Vec<Word>,
}

impl Transversal {
    pub fn new(q: &CyclicMap, reps: Vec<Word>) -> Result<Self, SchreierError> {
        if reps.len() != q.modulus as usize {
            return Err(SchreierError::BadTransversal(format!(
                "{} representatives for index {}",
                reps.len(),
                q.modulus
            )));
        }
        if !reps[0].is_identity() {
            return Err(SchreierError::BadTransversal("representative of 0 is not the identity".into()));
        }
        for (r, w) in reps.iter().enumerate() {
            if q.evaluate(w)? != r as u32 {
                return Err(SchreierError::BadTransversal(format!("{w} does not map to {r}")));
            }
            let prefix = Word::reduce(w.letters()[..w.len().saturating_sub(1)].iter().cloned());
            if !w.is_identity() && !reps.contains(&prefix) {
                return Err(SchreierError::BadTransversal(format!("{w} has no prefix in the set")));
            }
        }
        Ok(Transversal { reps })
    }

    /// Breadth-first Schreier transversal: generators in alphabet order,
    /// positive letter before its inverse.
    pub fn schreier(q: &CyclicMap, alphabet: &Alphabet) -> Result<Self, SchreierError> {
        let n = q.modulus as usize;
        let mut reps: Vec<Option<Word>> = vec![None; n];
        reps[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for g in alphabet {
                for inverse in [false, true] {
                    let l = Letter::new(g.clone(), inverse);
                    let t = q.step(c, &l) as usize;
                    if reps[t].is_none() {
                        let w = reps[c as usize].as_ref().expect("visited").multiply(&Word::reduce([l]));
                        reps[t] = Some(w);
                        queue.push_back(t as u32);
                    }
                }
            }
        }
        let reps: Option<Vec<Word>> = reps.into_iter().collect();
        reps.map(|reps| Transversal { reps })
            .ok_or(SchreierError::NotSurjective(q.modulus))
    }

    pub fn reps(&self) -> &[Word] {
        &self.reps
    }
}

/// The Schreier generators `t_r · x · t_{r+q(x)}⁻¹`, with names, the trivial
/// ones marked, and the rewriting map from the kernel to them.
#[derive(Debug, Clone)]
pub struct SchreierGenSet {
    map: CyclicMap,
    transversal: Transversal,
    parent: Alphabet,
    /// `gens[r][i]`: generator for coset `r` and parent generator `i`.
    gens: Vec<Vec<Option<GenSym>>>,
    alphabet: Alphabet,
    backmap: BTreeMap<GenSym, Word>,
}

impl SchreierGenSet {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn map(&self) -> &CyclicMap {
        &self.map
    }

    /// `None` if `t_r x t_{r+q(x)}⁻¹` is freely trivial.
    pub fn generator(&self, coset: usize, x: &GenSym) -> Option<&GenSym> {
        let i = self.parent.position(x)?;
        self.gens.get(coset)?[i].as_ref()
    }

    /// The parent word a Schreier generator stands for.
    pub fn backmap(&self, s: &GenSym) -> Option<&Word> {
        self.backmap.get(s)
    }

    /// Substitutes every Schreier generator by its parent word.
    pub fn to_parent(&self, w: &Word) -> Result<Word, SchreierError> {
        Ok(w.substitute(&self.backmap)?)
    }

    /// Rewrites `w`, read from coset `coset`, into Schreier generators. The
    /// result equals `t_coset · w · t_end⁻¹` where `end` is the coset reached.
    pub fn rewrite_from(&self, coset: u32, w: &Word) -> Result<(Word, u32), SchreierError> {
        let mut c = coset;
        let mut out = Vec::new();
        for l in w.letters() {
            let i = self.parent.position(&l.sym).ok_or_else(|| WordError::ForeignSymbol(l.sym.clone()))?;
            let next = self.map.step(c, l);
            let src = if l.inverse { next } else { c };
            if let Some(s) = &self.gens[src as usize][i] {
                out.push(Letter::new(s.clone(), l.inverse));
            }
            c = next;
        }
        Ok((Word::reduce(out), c))
    }

    /// Rewrites a word of the kernel.
    pub fn rewrite(&self, w: &Word) -> Result<Word, SchreierError> {
        match self.rewrite_from(0, w)? {
            (out, 0) => Ok(out),
            _ => Err(SchreierError::NotInKernel(w.to_string())),
        }
    }
}

fn default_name(coset: usize, x: &GenSym) -> GenSym {
    let base = match x.index() {
        Some(i) => format!("{}{}", x.name(), i),
        None => x.name().to_string(),
    };
    GenSym::indexed(&base, coset as u32)
}

/// Presentation of `ker q` with default generator names `x_r` (the generator
/// `x` read from coset `r`).
pub fn subgroup_presentation(
    p: &Presentation,
    q: &CyclicMap,
    t: Option<&Transversal>,
) -> Result<(Presentation, SchreierGenSet), SchreierError> {
    subgroup_presentation_named(p, q, t, default_name)
}

/// As [`subgroup_presentation`], naming the generator for coset `r` and
/// parent generator `x` by `name(r, x)`.
pub fn subgroup_presentation_named(
    p: &Presentation,
    q: &CyclicMap,
    t: Option<&Transversal>,
    name: impl Fn(usize, &GenSym) -> GenSym,
) -> Result<(Presentation, SchreierGenSet), SchreierError> {
    if let Some(g) = p.alphabet().iter().find(|g| q.image(g).is_none()) {
        return Err(SchreierError::MissingImage(g.clone()));
    }
    let transversal = match t {
        Some(t) => Transversal::new(q, t.reps.clone())?,
        None => Transversal::schreier(q, p.alphabet())?,
    };
    let n = q.modulus as usize;
    let mut gens = vec![vec![None; p.alphabet().len()]; n];
    let mut syms = Vec::new();
    let mut backmap = BTreeMap::new();
    for (r, rep) in transversal.reps.iter().enumerate() {
        for (i, x) in p.alphabet().iter().enumerate() {
            let target = q.step(r as u32, &Letter::new(x.clone(), false)) as usize;
            let w = rep.multiply(&Word::gen(x)).multiply(&transversal.reps[target].invert());
            if w.is_identity() {
                continue;
            }
            let s = name(r, x);
            gens[r][i] = Some(s.clone());
            syms.push(s.clone());
            backmap.insert(s, w);
        }
    }
    let alphabet = Alphabet::new(syms)?;
    let set = SchreierGenSet {
        map: q.clone(),
        transversal,
        parent: p.alphabet().clone(),
        gens,
        alphabet,
        backmap,
    };
    let mut relators = Vec::with_capacity(n * p.relators().len());
    for r in p.relators() {
        for c in 0..n as u32 {
            let (w, end) = set.rewrite_from(c, r)?;
            if end != c {
                return Err(SchreierError::InconsistentMap(r.to_string()));
            }
            relators.push(w);
        }
    }
    let pres = Presentation::new(set.alphabet.clone(), relators)?;
    Ok((pres, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_presentation;

    #[test]
    fn index_three_subgroup_of_z() {
        let p = parse_presentation("< a | >").unwrap();
        let q = CyclicMap::new(&p, 3, [(GenSym::plain("a"), 1)]).unwrap();
        let (k, set) = subgroup_presentation(&p, &q, None).unwrap();
        assert_eq!(k.alphabet().len(), 1);
        let s = &k.alphabet().symbols()[0];
        assert_eq!(set.backmap(s).unwrap().to_string(), "a^3");
        assert!(k.relators().is_empty());
    }

    #[test]
    fn rejects_inconsistent_map() {
        let p = parse_presentation("< a | a^5 >").unwrap();
        assert!(matches!(
            CyclicMap::new(&p, 2, [(GenSym::plain("a"), 1)]),
            Err(SchreierError::InconsistentMap(_))
        ));
        assert!(CyclicMap::new(&p, 5, [(GenSym::plain("a"), 1)]).is_ok());
        assert!(matches!(CyclicMap::new(&p, 5, []), Err(SchreierError::MissingImage(_))));
    }

    #[test]
    fn transversal_checks() {
        let p = parse_presentation("< a b | >").unwrap();
        let (a, b) = (GenSym::plain("a"), GenSym::plain("b"));
        let q = CyclicMap::new(&p, 3, [(a.clone(), 1), (b.clone(), 0)]).unwrap();
        let t = Transversal::schreier(&q, p.alphabet()).unwrap();
        assert_eq!(t.reps()[1], Word::gen(&a));
        assert_eq!(t.reps()[2], Word::gen_inv(&a));
        let bad = vec![Word::identity(), Word::from_powers([(&a, 1)]), Word::from_powers([(&b, 1), (&a, 2)])];
        assert!(Transversal::new(&q, bad).is_err());
        let q0 = CyclicMap::new(&p, 2, [(a, 0), (b, 0)]).unwrap();
        assert!(matches!(Transversal::schreier(&q0, p.alphabet()), Err(SchreierError::NotSurjective(2))));
    }

    #[test]
    fn rewriting_round_trips_through_backmap() {
        let p = parse_presentation("< a b | a^4, b^2, (a b)^2 >").unwrap();
        let (a, b) = (GenSym::plain("a"), GenSym::plain("b"));
        let q = CyclicMap::new(&p, 2, [(a.clone(), 0), (b.clone(), 1)]).unwrap();
        let (k, set) = subgroup_presentation(&p, &q, None).unwrap();
        let w = Word::from_powers([(&b, 1), (&a, 3), (&b, -1), (&a, 1)]);
        let r = set.rewrite(&w).unwrap();
        assert_eq!(set.to_parent(&r).unwrap(), w);
        assert!(set.rewrite(&Word::gen(&b)).is_err());
        for rel in k.relators() {
            assert_eq!(q.evaluate(&set.to_parent(rel).unwrap()).unwrap(), 0);
        }
    }
}
