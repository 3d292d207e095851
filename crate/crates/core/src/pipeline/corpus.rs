//! Relations of the known hand reduction, as words to be checked.

use serde::Serialize;

use super::{fiber, monodromy_braids};
use crate::syntax::parse_free_word;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// Words in `d1 … d5, G`.
    PiPrime,
    /// Words in `D, G, s, A2 … A5, B2 … B5`.
    DoubleCover,
    /// Words in the `m`-fold cover generators `A2_i, A4_i, s_i, H, …`.
    Orbifold,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegressionEntry {
    pub id: String,
    pub stage: Stage,
    /// The relation as written, in word syntax.
    pub text: String,
    /// Left side times the inverse of the right side.
    pub word: Word,
    /// Reported with a verdict rather than asserted.
    pub suspect: bool,
}

fn entry(id: impl Into<String>, stage: Stage, text: impl Into<String>) -> RegressionEntry {
    let text = text.into();
    let word = parse_free_word(&text).unwrap_or_else(|e| panic!("corpus entry {text}: {e}"));
    RegressionEntry {
        id: id.into(),
        stage,
        text,
        word,
        suspect: false,
    }
}

const PI_PRIME: &[(&str, &str)] = &[
    ("beta0_a", "(d4 d5)^6 = (d5 d4)^6"),
    ("beta0_b", "d2 d3 = d3 d2"),
    ("beta_plus", "d5 = d2' d1' d2 d1 d2"),
    ("beta_minus", "d3' d1' d3 d1 d3 = (d4 d5)^-3 d5 (d4 d5)^3"),
    ("conj_beta0_a", "(d1 d2)^6 = (d2 d1)^6"),
    ("conj_beta0_b", "d5 d3 d5' d4' d5 d4 = d4' d5 d4 d5 d3 d5'"),
    ("conj_beta_plus", "d5 = d2' d1 d2 d4' d5 d3 d5' d4 d2' d1' d2"),
    ("conj_beta_minus", "d3' d1 d2 d1' d3 = (d4 d5)^-2 d5 (d4 d5)^2"),
    ("conj_beta_minus_b", "d3 (d4 d5)^-2 d5 (d4 d5)^2 d3' = (d1 d2)^-5 d2 (d1 d2)^5"),
    ("conj_beta_minus_c", "(d1 d2)^-5 d2 (d1 d2)^5 = d1 d2 d1'"),
    ("gamma_1", "G d1 G' = G d2 G' d4' d2' d1 d2 d4 G d2' G'"),
    ("gamma_2", "G d2 G' = d2' d1 d2 d3' d5 d3 d2' d1' d2"),
    (
        "gamma_3",
        "G d3 G' = d4' d2' d1' d2 d4 d2' d1 d2 d3' d5' d3 d5 d3 d2' d1' d2 d4' d2' d1 d2 d4",
    ),
    ("gamma_4", "G d4 G' = d4' d2' d1' d2 d4 d2' d1 d2 d4"),
    ("gamma_5", "G d5 G' = d5"),
];

// Images under β₁⁻¹ that the hand computation asserts modulo relations:
// (id, source word, expected image).
const PI_PRIME_IMAGES: &[(&str, &str, &str)] = &[
    ("image_d4d5", "d4 d5", "d1 d2"),
    (
        "image_beta_minus_rhs",
        "(d4 d5)^-3 d5 (d4 d5)^3",
        "(d1 d2)^-4 d2 (d1 d2)^4",
    ),
    (
        "image_d1d3_a",
        "d1 d3",
        "d1 d2 d3 d5' d4 d5 d3' d5' d4' d5 d4 d2' d1' d2",
    ),
    ("image_d1d3_b", "d1 d3", "d1 d2 d3 d4 d5 d3' d5' d2' d1' d2"),
    ("image_d1d3_c", "d1 d3", "d1 d2 d3 d4 d5 d3' d2' d1'"),
    (
        "image_beta_minus_lhs_a",
        "(d1 d3)' d3 d1 d3",
        "d1 d2 d3 d5' d4' (d3' d5' d4' d5 d4 d5 d3) d4 d5 d3' d2' d1'",
    ),
    (
        "image_beta_minus_lhs_b",
        "(d1 d3)' d3 d1 d3",
        "d1 d2 d3 d5' d4' (d5' d4' d5 d4 d5) d4 d5 d3' d2' d1'",
    ),
    (
        "image_beta_minus_lhs_c",
        "(d1 d3)' d3 d1 d3",
        "d1 d2 d3 (d4 d5)^-2 d5 (d4 d5)^2 d3' d2' d1'",
    ),
];

const DOUBLE_COVER: &[(&str, &str)] = &[
    ("cancel_D", "D = 1"),
    ("cancel_2", "B2 A2 = 1"),
    ("cancel_3", "B3 A3 = 1"),
    ("cancel_4", "B4 A4 = 1"),
    ("cancel_5", "B5 A5 = 1"),
    ("fiber_product", "A2 B3 A4 B5 B2 A3 B4 A5 = 1"),
    ("fiber_product_a", "A2 A3' A4 A5' A2' A3 A4' A5 = 1"),
    ("r1", "B3 A2 = B2 A3"),
    ("r4", "B5 = B2^3"),
    ("r2", "B3^3 = (B5 A4)^6 B5"),
    ("r5", "A2^12 = 1"),
    ("r6", "B5 A3 B5 A4 B5 A4 = B4 A5 B4 A5 B3 A5"),
    ("r7", "B5 = B2^2 A4 B5 A3 B5 A4 B2^2"),
    ("r8", "B3 B2 B3 = (B5 A4)^4 B5"),
    ("r12", "s A2^2 G' = A4 B2^2 A4"),
    ("r10", "G B2 s' = B2^2 A3 B5 A3 B2^2"),
    (
        "r13",
        "G B3 s' = B4 A2^2 B4 A2^2 B3 A5 B3 A5 B3 A2^2 B4 A2^2 B4",
    ),
    ("r11", "G B4 s' = B4 A2^2 B4 A2^2 B4"),
    ("r9", "G B5 s' = B5"),
    ("r14", "A2 B3 A4 B5 B2 A3 B4 A5 = 1"),
    ("red_r7", "B4 A2 B4 = B5 A3 B5"),
    ("red_b2", "B2^4 = 1"),
    ("red_b5", "B5 = A2"),
    ("red_r2", "(A2 A4)^2 = A3 A2 B3^2"),
    ("red_r8", "B3 B2 = A2 A3"),
    ("red_b3", "B3 = B4 A2 B4"),
    ("red_comm", "A2 A4 = A4 A2"),
    ("red_a4", "A4^4 = 1"),
    ("final_a5", "A5 = A2'"),
    ("final_a3", "A3 = A2' A4^2"),
    ("final_a2", "A2^4 = 1"),
    ("final_a4", "A4^4 = 1"),
    ("final_comm", "A2 A4 = A4 A2"),
    ("final_g1", "s A2^2 G' = A2^2 A4^2"),
    ("final_g2", "G A2' = A2' s"),
    ("final_g3", "G A2 A4^2 = A2 A4^2 s"),
    ("final_g4", "G A4' = A4 s"),
    ("final_g5", "G A2 = A2 s"),
];

// Indexed by i mod m: each template is instantiated with i and i+1.
const ORBIFOLD: &[(&str, &str)] = &[
    ("orders", "A2_{i}^4 = A4_{i}^4"),
    ("order_a2", "A2_{i}^4 = 1"),
    ("order_a4", "A4_{i}^4 = 1"),
    ("comm", "A2_{i} A4_{i} = A4_{i} A2_{i}"),
    ("rel1", "s{i} A2_{j}^2 = A2_{i}^2 A4_{i}^2"),
    ("rel2", "A2_{j}' = A2_{i}' s{i}"),
    ("rel3", "A2_{j} A4_{j}^2 = A2_{i} A4_{i}^2 s{i}"),
    ("rel4", "A4_{j}' = A4_{i} s{i}"),
    ("rel5", "A2_{j} = A2_{i} s{i}"),
    ("sigma1", "s{i} = A2_{i}^2 A4_{i}^2 A2_{j}^2"),
    ("sigma2", "s{i} = A2_{i} A2_{j}'"),
    ("sigma3a", "s{i} = A4_{i}^2 A2_{i}' A2_{j} A4_{j}^2"),
    ("sigma3b", "s{i} = A2_{i}' A4_{i}^2 A4_{j}^2 A2_{j}"),
    ("sigma4", "s{i} = A4_{i}' A4_{j}'"),
    ("sigma5", "s{i} = A2_{i}' A2_{j}"),
    ("square_step", "A2_{i}^2 = A2_{j}^2"),
    ("square_base", "A2_{i}^2 = A2_0^2"),
    ("sigma_square", "s{i} = A4_{i}^2"),
    ("a4_step", "A4_{i} = A4_{j}"),
    ("a4_base", "A4_{i} = A4_0"),
    ("sigma_a4", "s{i} = A4_0^2"),
    ("shift_a", "A4_0^2 = A2_{i}' A2_{j}"),
    ("shift_b", "A4_0^2 = A2_{i} A2_{j}'"),
    ("even", "A2_{e} = A2_0"),
    ("odd", "A2_{o} = A2_0 A4_0^2"),
];

fn instantiate(template: &str, i: u32, m: u32) -> String {
    template
        .replace("{i}", &i.to_string())
        .replace("{j}", &((i + 1) % m).to_string())
        .replace("{e}", &((2 * i) % m).to_string())
        .replace("{o}", &((2 * i + 1) % m).to_string())
}

/// Every relation of the hand reduction for the `m = k+1` cover, tagged
/// with the stage whose generators it is written in.
///
/// The entry `(B4 A5)^6 = (B5 A4)^3` has mismatched exponents; it and its
/// exponent-6 variant are marked suspect.
pub fn regression_corpus(k: u32) -> Vec<RegressionEntry> {
    let m = k + 1;
    let mut out: Vec<RegressionEntry> = PI_PRIME
        .iter()
        .map(|(id, text)| entry(*id, Stage::PiPrime, *text))
        .collect();

    let fiber = fiber();
    let b1inv = monodromy_braids().beta1.invert();
    for (id, source, image) in PI_PRIME_IMAGES {
        let src = parse_free_word(source).expect("corpus source");
        let img = parse_free_word(image).expect("corpus image");
        let acted = b1inv.act(&src, &fiber).expect("word over the fiber");
        out.push(RegressionEntry {
            id: (*id).to_string(),
            stage: Stage::PiPrime,
            text: format!("({source})b1' = {image}"),
            word: acted.multiply(&img.invert()),
            suspect: false,
        });
    }

    for (id, exp) in [("r3", 3), ("r3_exp6", 6)] {
        let mut e = entry(id, Stage::DoubleCover, format!("(B4 A5)^6 = (B5 A4)^{exp}"));
        e.suspect = true;
        out.push(e);
    }
    out.extend(DOUBLE_COVER.iter().map(|(id, text)| entry(*id, Stage::DoubleCover, *text)));

    out.push(entry("hat_gamma", Stage::Orbifold, "H = 1"));
    for (id, template) in ORBIFOLD {
        for i in 0..m {
            out.push(entry(format!("{id}_{i}"), Stage::Orbifold, instantiate(template, i, m)));
        }
    }
    let product: Vec<String> = (0..m).map(|i| format!("s{i}")).collect();
    out.push(entry("sigma_product", Stage::Orbifold, format!("{} = 1", product.join(" "))));
    out.push(entry("b_order", Stage::Orbifold, format!("A4_0^{} = 1", 2 * m)));
    out.push(entry("final_comm", Stage::Orbifold, "A2_0 A4_0 = A4_0 A2_0"));
    out.push(entry("final_a", Stage::Orbifold, "A2_0^4 = 1"));
    let b_order = if m.is_multiple_of(2) { 4 } else { 2 };
    out.push(entry("final_b", Stage::Orbifold, format!("A4_0^{b_order} = 1")));
    out
}
