//! Fundamental domains of the quotient, used for drawing.

use heawood_core::lattice::{self, KSignature, WCoefficientVector};
use heawood_core::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    /// The union of the tiles at the fundamental vectors.
    FundamentalTile,
    /// `{a_1 p_1 + … + a_d p_d : 0 ≤ a_i ≤ 1}`.
    Parallelepiped,
    /// `conv{a_1 p_1 + … + a_{d+1} p_{d+1}} / (d+1)` over permutations `a` of `1..=d+1`.
    PermutahedronDomain,
}

impl DomainKind {
    pub fn name(self) -> &'static str {
        match self {
            DomainKind::FundamentalTile => "fundamental-tile",
            DomainKind::Parallelepiped => "parallelepiped",
            DomainKind::PermutahedronDomain => "permutahedron",
        }
    }
}

/// The translation vectors `p_i` spanning `Λ_k`, one per row of `M_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    pub kind: DomainKind,
    pub k: KSignature,
    /// Row `i` holds the `w`-coefficients of `p_i`, as written in `M_k`.
    pub rows: Vec<Vec<i64>>,
}

impl DomainSpec {
    /// `p_i` in ambient coordinates. The scaled vector `p̃_i` is this
    /// divided by `d + 1`.
    pub fn ambient(&self, i: usize) -> Vec<i64> {
        lattice::to_ambient(&WCoefficientVector::new(&self.rows[i]))
    }

    pub fn ambient_all(&self) -> Vec<Vec<i64>> {
        (0..self.rows.len()).map(|i| self.ambient(i)).collect()
    }
}

pub fn domain_vectors(k: &KSignature, kind: DomainKind) -> Result<DomainSpec> {
    let rows = k.matrix().to_i64_rows().ok_or(Error::Overflow)?;
    Ok(DomainSpec {
        kind,
        k: k.clone(),
        rows,
    })
}
