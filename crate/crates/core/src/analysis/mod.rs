//! Deciding what can be decided about a presented group: coset enumeration
//! for finite quotients and the abelianisation via Smith normal form.

mod coset;
mod snf;

pub use coset::{
    todd_coxeter, todd_coxeter_subgroup, CosetTable, EnumerationError, DEFAULT_MAX_COSETS,
};
pub use snf::{smith_normal_form, IntMatrix, SmithDecomposition};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::presentation::Presentation;

/// `ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `d₁ | d₂ | … | d_k`, each `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Product of the torsion coefficients, if the group is finite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix of `p`: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let rows = p.exponent_sums();
    if rows.is_empty() {
        return IntMatrix::zeros(0, p.alphabet().len());
    }
    IntMatrix::from_rows(&rows)
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let m = relation_matrix(p);
    let ngens = p.alphabet().len();
    let diag = smith_normal_form(&m).d.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d: &BigInt| u64::try_from(d).expect("torsion coefficient fits in u64"))
        .collect();
    AbelianInvariants {
        torsion,
        free_rank: ngens - rank,
    }
}
