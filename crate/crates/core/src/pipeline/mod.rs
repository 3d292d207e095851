//! The orbifold fundamental group computation, stage by stage.
//!
//! Stages:
//!
//! * `Π′` on `d1 … d5, G`: the fiber is stabilised by the braids `β₀, β₋, β₊`
//!   and their `β₁`-conjugates, and `G` acts as `β₁²`;
//! * the double cover: `Π′` plus `d_i²` and `(d1⋯d5)²`, kernel of
//!   `d_i ↦ 1, G ↦ 0` mod 2 with transversal `{1, d1}`;
//! * the `m`-fold cover, `m = k + 1`: kernel of `A, B, D ↦ 0`, `G, s ↦ 1`
//!   mod `m` with transversal `{Gⁱ}`, after adding `G^m` and `s^m`.
//!
//! Double-cover generators are named `D` (`d1²`), `G`, `s` (`d1 G d1⁻¹`),
//! `A2 … A5` (`d1 d_i`) and `B2 … B5` (`d_i d1⁻¹`). On the `m`-fold cover
//! `x_i` is `Gⁱ x G⁻ⁱ` (e.g. `A2_1`), `s_i` is `Gⁱ s G⁻ⁱ⁻¹` and `H` is `G^m`.

mod corpus;

pub use corpus::{regression_corpus, RegressionEntry, Stage};

use std::sync::OnceLock;

use serde::Serialize;

use crate::analysis::{
    abelian_invariants, todd_coxeter, AbelianInvariants, CosetTable, EnumerationError,
    DEFAULT_MAX_COSETS,
};
use crate::braid::Braid;
use crate::presentation::{tietze_shorten, tietze_simplify, Presentation, TietzeLog};
use crate::schreier::{
    subgroup_presentation_named, CyclicMap, SchreierError, SchreierGenSet, Transversal,
};
use crate::word::{Alphabet, GenSym, Word};

use thiserror::Error;

const STRANDS: usize = 5;
const TIETZE_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("k must be at least 1")]
    BadK,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Schreier(#[from] SchreierError),
}

/// The monodromy braids `β₀, β₁, β₋₁, β₊, β₋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyBraids {
    pub beta0: Braid,
    pub beta1: Braid,
    pub beta_minus1: Braid,
    pub beta_plus: Braid,
    pub beta_minus: Braid,
}

fn braid(powers: &[(usize, i32)]) -> Braid {
    Braid::from_powers(STRANDS, powers).expect("valid braid constant")
}

fn chain(parts: &[&Braid]) -> Braid {
    parts
        .iter()
        .fold(Braid::identity(STRANDS).expect("5 strands"), |acc, b| {
            acc.compose(b).expect("same strand count")
        })
}

pub fn monodromy_braids() -> MonodromyBraids {
    let beta0 = braid(&[(4, 12), (2, 2)]);
    let beta1 = braid(&[(1, -1), (2, 1), (3, 1), (1, 1), (2, -1), (1, 1)]);
    let beta_plus = braid(&[(1, -2), (2, 1), (3, 1), (4, 1), (3, -1), (2, -1), (1, 2)]);
    let pre = braid(&[(4, -6), (2, -1)]);
    let post = braid(&[(2, 1), (4, 6)]);
    let beta_minus1 = chain(&[&pre, &beta1, &post]);
    let beta_minus = chain(&[&pre, &beta_plus, &post]);
    MonodromyBraids {
        beta0,
        beta1,
        beta_minus1,
        beta_plus,
        beta_minus,
    }
}

pub fn fiber() -> Alphabet {
    Alphabet::indexed("d", STRANDS as u32)
}

pub fn d(i: u32) -> GenSym {
    GenSym::indexed("d", i)
}

pub fn gamma() -> GenSym {
    GenSym::plain("G")
}

/// The six stabilising braids, in the order `β₀, β₋, β₊, β₁β₀β₁⁻¹,
/// β₁β₋β₁⁻¹, β₁β₊β₁⁻¹`.
pub fn stabilising_braids() -> Vec<Braid> {
    let b = monodromy_braids();
    let inv = b.beta1.invert();
    let mut out = vec![b.beta0.clone(), b.beta_minus.clone(), b.beta_plus.clone()];
    for beta in [&b.beta0, &b.beta_minus, &b.beta_plus] {
        out.push(chain(&[&b.beta1, beta, &inv]));
    }
    out
}

/// The 35 relators of `Π′` before normalisation: `d_i⁻¹ (d_i)β` for the six
/// stabilising braids, then `G d_i G⁻¹ ((d_i)β₁²)⁻¹`.
pub fn pi_prime_raw_relators() -> Vec<Word> {
    let fiber = fiber();
    let mut out = Vec::with_capacity(35);
    for beta in stabilising_braids() {
        let images = beta.automorphism(&fiber).expect("5 strands");
        for (x, img) in fiber.iter().zip(images) {
            out.push(Word::gen_inv(x).multiply(&img));
        }
    }
    let b1sq = monodromy_braids().beta1.pow(2);
    let images = b1sq.automorphism(&fiber).expect("5 strands");
    let g = Word::gen(&gamma());
    for (x, img) in fiber.iter().zip(images) {
        out.push(g.multiply(&Word::gen(x)).multiply(&g.invert()).multiply(&img.invert()));
    }
    out
}

pub fn pi_prime() -> Presentation {
    let alphabet = fiber().with(&[gamma()]).expect("fresh generator");
    Presentation::new(alphabet, pi_prime_raw_relators()).expect("relators over alphabet")
}

/// `Π′` with its relators shortened by substring moves. No generator is
/// removed, so the covers below keep their generator names.
pub fn pi_prime_reduced() -> Presentation {
    static CACHE: OnceLock<Presentation> = OnceLock::new();
    CACHE.get_or_init(|| tietze_shorten(&pi_prime(), TIETZE_BUDGET).0).clone()
}

/// `d1 d2 d3 d4 d5`.
pub fn fiber_product() -> Word {
    Word::from_powers((1..=5).map(d).collect::<Vec<_>>().iter().map(|g| (g, 1)))
}

/// The relators `d_i²` and `(d1⋯d5)²` that cut the double cover down.
pub fn double_cover_relators() -> Vec<Word> {
    let mut out: Vec<Word> = (1..=5).map(|i| Word::from_powers([(&d(i), 2)])).collect();
    out.push(fiber_product().pow(2));
    out
}

fn double_cover_name(coset: usize, x: &GenSym) -> GenSym {
    match (coset, x.index()) {
        (1, Some(1)) => GenSym::plain("D"),
        (0, Some(i)) => GenSym::indexed("B", i),
        (1, Some(i)) => GenSym::indexed("A", i),
        (0, None) => GenSym::plain("G"),
        _ => GenSym::plain("s"),
    }
}

/// A stage of the computation: the parent presentation (with any added
/// relators), the kernel presentation and its Schreier generators.
#[derive(Debug, Clone)]
pub struct Cover {
    pub parent: Presentation,
    pub kernel: Presentation,
    pub gens: SchreierGenSet,
}

pub fn double_cover() -> Cover {
    static CACHE: OnceLock<Cover> = OnceLock::new();
    CACHE.get_or_init(build_double_cover).clone()
}

fn build_double_cover() -> Cover {
    let parent = pi_prime_reduced()
        .add_relators(double_cover_relators())
        .expect("relators over alphabet");
    let images = (1..=5).map(|i| (d(i), 1)).chain([(gamma(), 0)]);
    let q = CyclicMap::new(&parent, 2, images).expect("relators have even length in d");
    let t = Transversal::new(&q, vec![Word::identity(), Word::gen(&d(1))]).expect("Schreier transversal");
    let (kernel, gens) =
        subgroup_presentation_named(&parent, &q, Some(&t), double_cover_name).expect("valid map");
    Cover { parent, kernel, gens }
}

pub fn z2_cover_presentation() -> (Presentation, SchreierGenSet) {
    let c = double_cover();
    (c.kernel, c.gens)
}

pub fn sigma() -> GenSym {
    GenSym::plain("s")
}

fn orbifold_name(coset: usize, x: &GenSym) -> GenSym {
    match x.index() {
        Some(j) => GenSym::indexed(&format!("{}{}", x.name(), j), coset as u32),
        None if x.name() == "G" => GenSym::plain("H"),
        None => GenSym::indexed(x.name(), coset as u32),
    }
}

fn orbifold_map(p: &Presentation, m: u32) -> Result<(CyclicMap, Transversal), SchreierError> {
    let images = p
        .alphabet()
        .iter()
        .map(|g| (g.clone(), i64::from(*g == gamma() || *g == sigma())));
    let q = CyclicMap::new(p, m, images)?;
    let g = Word::gen(&gamma());
    let t = Transversal::new(&q, (0..m as i64).map(|i| g.pow(i)).collect())?;
    Ok((q, t))
}

/// The `m = k+1` cover with `G^m` and `s^m` added to the double cover before
/// the kernel is taken.
pub fn orbifold_cover(k: u32) -> Result<Cover, PipelineError> {
    if k == 0 {
        return Err(PipelineError::BadK);
    }
    let m = k + 1;
    let base = double_cover().kernel;
    let parent = base
        .add_relators([Word::gen(&gamma()).pow(m as i64), Word::gen(&sigma()).pow(m as i64)])
        .expect("relators over alphabet");
    let (q, t) = orbifold_map(&parent, m)?;
    let (kernel, gens) = subgroup_presentation_named(&parent, &q, Some(&t), orbifold_name)?;
    Ok(Cover { parent, kernel, gens })
}

pub fn orbifold_presentation(k: u32) -> Result<Presentation, PipelineError> {
    Ok(orbifold_cover(k)?.kernel)
}

/// The same group, with the kernel taken first and `H = 1`,
/// `s0 s1 ⋯ s_{m-1} = 1` added afterwards.
pub fn orbifold_presentation_after_extraction(k: u32) -> Result<Presentation, PipelineError> {
    if k == 0 {
        return Err(PipelineError::BadK);
    }
    let m = k + 1;
    let base = double_cover().kernel;
    let (q, t) = orbifold_map(&base, m)?;
    let (kernel, _) = subgroup_presentation_named(&base, &q, Some(&t), orbifold_name)?;
    let sigmas = Word::from_powers(
        (0..m)
            .map(|i| GenSym::indexed("s", i))
            .collect::<Vec<_>>()
            .iter()
            .map(|g| (g, 1)),
    );
    Ok(kernel
        .add_relators([Word::gen(&GenSym::plain("H")), sigmas])
        .expect("relators over alphabet"))
}

/// `Π′` with `d_i²`, `(d1⋯d5)²` and `G^m` added: a finite group containing
/// the `m`-fold cover group with index `2m`, used to check every stage's
/// relations.
pub fn check_quotient(m: u32) -> Presentation {
    pi_prime_reduced()
        .add_relators(double_cover_relators())
        .and_then(|p| p.add_relators([Word::gen(&gamma()).pow(m as i64)]))
        .expect("relators over alphabet")
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct StageSummary {
    pub stage: String,
    pub generators: Vec<String>,
    pub relator_count: usize,
    pub total_length: usize,
}

impl StageSummary {
    pub fn of(stage: &str, p: &Presentation) -> Self {
        StageSummary {
            stage: stage.to_string(),
            generators: p.alphabet().iter().map(|g| g.to_string()).collect(),
            relator_count: p.relators().len(),
            total_length: p.total_length(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct RegressionVerdict {
    pub id: String,
    pub stage: Stage,
    pub relation: String,
    pub holds: bool,
    pub suspect: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct PipelineReport {
    pub k: u32,
    pub m: u32,
    pub stages: Vec<StageSummary>,
    pub final_presentation: String,
    pub order: usize,
    pub invariants: AbelianInvariants,
    pub abelian: bool,
    pub check_quotient_order: usize,
    pub regressions: Vec<RegressionVerdict>,
}

impl PipelineReport {
    /// The asserted checks: abelian, finite with order equal to the product
    /// of the invariants, and every non-suspect regression entry holding.
    pub fn passed(&self) -> bool {
        self.abelian
            && self.invariants.order() == Some(self.order as u64)
            && self.check_quotient_order == 2 * self.m as usize * self.order
            && self.regressions.iter().all(|r| r.holds || r.suspect)
    }
}

/// Simplified `m`-fold cover presentation and the log taking the raw one to it.
pub fn simplified_orbifold(k: u32) -> Result<(Cover, Presentation, TietzeLog), PipelineError> {
    let cover = orbifold_cover(k)?;
    let (simple, log) = tietze_simplify(&cover.kernel, TIETZE_BUDGET);
    Ok((cover, simple, log))
}

/// Traces each regression entry in the tables it belongs to.
pub fn run_regressions(
    k: u32,
    cover: &Cover,
    check_table: &CosetTable,
) -> Result<Vec<RegressionVerdict>, PipelineError> {
    let double = double_cover();
    let mut out = Vec::new();
    for e in regression_corpus(k) {
        let parent_word = match e.stage {
            Stage::PiPrime => e.word.clone(),
            Stage::DoubleCover => double.gens.to_parent(&e.word)?,
            Stage::Orbifold => double.gens.to_parent(&cover.gens.to_parent(&e.word)?)?,
        };
        let holds = check_table.holds_in(&parent_word).map_err(SchreierError::from)?;
        out.push(RegressionVerdict {
            id: e.id.clone(),
            stage: e.stage,
            relation: e.text.clone(),
            holds,
            suspect: e.suspect,
        });
    }
    Ok(out)
}

pub fn run(k: u32) -> Result<PipelineReport, PipelineError> {
    run_with_budget(k, DEFAULT_MAX_COSETS)
}

pub fn run_with_budget(k: u32, max_cosets: usize) -> Result<PipelineReport, PipelineError> {
    let m = k.checked_add(1).filter(|_| k > 0).ok_or(PipelineError::BadK)?;
    let double = double_cover();
    let (cover, simple, _) = simplified_orbifold(k)?;
    let table = todd_coxeter(&simple, max_cosets)?;
    let check = todd_coxeter(&check_quotient(m), max_cosets)?;
    let regressions = run_regressions(k, &cover, &check)?;
    Ok(PipelineReport {
        k,
        m,
        stages: vec![
            StageSummary::of("pi_prime", &pi_prime()),
            StageSummary::of("pi_prime_reduced", &pi_prime_reduced()),
            StageSummary::of("double_cover", &double.kernel),
            StageSummary::of("orbifold", &cover.kernel),
            StageSummary::of("orbifold_simplified", &simple),
        ],
        final_presentation: simple.to_string(),
        order: table.len(),
        invariants: abelian_invariants(&simple),
        abelian: table.is_abelian(),
        check_quotient_order: check.len(),
        regressions,
    })
}
