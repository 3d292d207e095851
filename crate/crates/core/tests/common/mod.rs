//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pnh_core::analysis::{smith_normal_form, IntMatrix};
use pnh_core::syntax::parse_presentation;
use pnh_core::presentation::Presentation;
use pnh_core::word::{Alphabet, GenSym, Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Uniform letters over `alphabet`, freely reduced afterwards.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::reduce((0..n).map(|_| {
        let g = &alphabet.symbols()[rng.gen_range(0..alphabet.len())];
        Letter::new(g.clone(), rng.gen_bool(0.5))
    }))
}

/// Permutation of `0..n`, acting on the right: `p` goes to `perm[p]`.
pub type Perm = Vec<usize>;

pub fn cycle(n: usize, points: &[usize]) -> Perm {
    let mut p: Perm = (0..n).collect();
    for (i, &a) in points.iter().enumerate() {
        p[a] = points[(i + 1) % points.len()];
    }
    p
}

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Image of a word under generator assignments, read left to right.
pub fn eval_word(w: &Word, gens: &HashMap<GenSym, Perm>, n: usize) -> Perm {
    let mut acc: Perm = (0..n).collect();
    for l in w.letters() {
        let g = &gens[&l.sym];
        let step = if l.inverse { inverse(g) } else { g.clone() };
        acc = compose(&acc, &step);
    }
    acc
}

/// Size of the permutation group generated by `gens`, by breadth-first
/// closure over right multiplication.
pub fn closure_order(gens: &[Perm]) -> usize {
    let n = gens[0].len();
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// A finite group given both by a presentation and by permutations of its
/// generators that satisfy the relators.
pub struct ConcreteGroup {
    pub name: &'static str,
    pub presentation: Presentation,
    pub gens: HashMap<GenSym, Perm>,
    pub degree: usize,
}

impl ConcreteGroup {
    fn new(name: &'static str, text: &str, degree: usize, perms: Vec<Perm>) -> Self {
        let presentation = parse_presentation(text).expect("valid presentation");
        let gens = presentation.alphabet().iter().cloned().zip(perms).collect();
        ConcreteGroup {
            name,
            presentation,
            gens,
            degree,
        }
    }

    pub fn relators_hold(&self) -> bool {
        let id: Perm = (0..self.degree).collect();
        self.presentation
            .relators()
            .iter()
            .all(|r| eval_word(r, &self.gens, self.degree) == id)
    }

    /// Order by brute-force enumeration of the generated permutation group.
    pub fn brute_order(&self) -> usize {
        let perms: Vec<Perm> = self
            .presentation
            .alphabet()
            .iter()
            .map(|g| self.gens[g].clone())
            .collect();
        closure_order(&perms)
    }
}

fn dihedral(n: usize) -> Vec<Perm> {
    let r = cycle(n, &(0..n).collect::<Vec<_>>());
    let s: Perm = (0..n).map(|i| (n - i) % n).collect();
    vec![r, s]
}

/// Right-regular permutations of the quaternion units `±1, ±i, ±j, ±k`.
fn quaternion_gens() -> Vec<Perm> {
    type Q = [i32; 4];
    fn mul(a: Q, b: Q) -> Q {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }
    let mut units = Vec::new();
    for k in 0..4 {
        for s in [1, -1] {
            let mut u = [0; 4];
            u[k] = s;
            units.push(u);
        }
    }
    let index = |u: Q| units.iter().position(|&v| v == u).expect("unit");
    let right = |g: Q| -> Perm { units.iter().map(|&u| index(mul(u, g))).collect() };
    vec![right([0, 1, 0, 0]), right([0, 0, 1, 0])]
}

/// Presentations of groups of order at most 24 with faithful permutation
/// models.
pub fn group_corpus() -> Vec<ConcreteGroup> {
    vec![
        ConcreteGroup::new("Z1", "< a | a >", 1, vec![vec![0]]),
        ConcreteGroup::new("Z5", "< a | a^5 >", 5, vec![cycle(5, &[0, 1, 2, 3, 4])]),
        ConcreteGroup::new(
            "Z6",
            "< a b | a^2, b^3, a b a' b' >",
            5,
            vec![cycle(5, &[0, 1]), cycle(5, &[2, 3, 4])],
        ),
        ConcreteGroup::new(
            "S3",
            "< a b | a^2, b^3, (a b)^2 >",
            3,
            vec![cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])],
        ),
        ConcreteGroup::new("D4", "< r s | r^4, s^2, (s r)^2 >", 4, dihedral(4)),
        ConcreteGroup::new("D5", "< r s | r^5, s^2, (s r)^2 >", 5, dihedral(5)),
        ConcreteGroup::new("D6", "< r s | r^6, s^2, (s r)^2 >", 6, dihedral(6)),
        ConcreteGroup::new("Q8", "< i j | i^4, i^2 j^-2, j' i j i >", 8, quaternion_gens()),
        ConcreteGroup::new(
            "Z2^2",
            "< a b | a^2, b^2, (a b)^2 >",
            4,
            vec![cycle(4, &[0, 1]), cycle(4, &[2, 3])],
        ),
        ConcreteGroup::new(
            "Z2^3",
            "< a b c | a^2, b^2, c^2, a b a' b', a c a' c', b c b' c' >",
            6,
            vec![cycle(6, &[0, 1]), cycle(6, &[2, 3]), cycle(6, &[4, 5])],
        ),
        ConcreteGroup::new(
            "Z4xZ2",
            "< a b | a^4, b^2, a b a' b' >",
            6,
            vec![cycle(6, &[0, 1, 2, 3]), cycle(6, &[4, 5])],
        ),
        ConcreteGroup::new(
            "Z3^2",
            "< a b | a^3, b^3, a b a' b' >",
            6,
            vec![cycle(6, &[0, 1, 2]), cycle(6, &[3, 4, 5])],
        ),
        ConcreteGroup::new(
            "A4",
            "< a b | a^2, b^3, (a b)^3 >",
            4,
            vec![compose(&cycle(4, &[0, 1]), &cycle(4, &[2, 3])), cycle(4, &[0, 1, 2])],
        ),
        ConcreteGroup::new(
            "S4",
            "< a b | a^2, b^3, (a b)^4 >",
            4,
            vec![cycle(4, &[0, 1]), cycle(4, &[1, 2, 3])],
        ),
    ]
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    // some rank-deficient samples
    let zero_row = rng.gen_bool(0.2).then(|| rng.gen_range(0..rows));
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|_| if Some(i) == zero_row { 0 } else { rng.gen_range(-50..=50) })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&data)
}

/// `U·M·V = D`, `D` diagonal with non-negative entries forming a
/// divisibility chain, and `U`, `V` unimodular.
pub fn check_snf(m: &IntMatrix) -> Result<(), String> {
    let s = smith_normal_form(m);
    if s.u.mul(m).mul(&s.v) != s.d {
        return Err("U·M·V differs from D".into());
    }
    if !s.d.is_diagonal() {
        return Err("D is not diagonal".into());
    }
    let diag = s.d.diagonal();
    if diag.iter().any(|x| x.is_negative()) {
        return Err(format!("negative diagonal {diag:?}"));
    }
    for w in diag.windows(2) {
        let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        if !divides {
            return Err(format!("divisibility chain broken in {diag:?}"));
        }
    }
    for (name, x) in [("U", &s.u), ("V", &s.v)] {
        if x.determinant().abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular"));
        }
    }
    Ok(())
}

/// Free group on `x1 … xg`.
pub fn free_presentation(g: u32) -> Presentation {
    Presentation::free(Alphabet::indexed("x", g))
}
