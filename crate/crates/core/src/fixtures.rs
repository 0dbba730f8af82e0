//! Complexes given by explicit facet lists, and the Klein quartic.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quotient::{dual_graph, SimplicialComplex};
use crate::symmetry::{self, VertexPermutation};

const KLEIN_QUARTIC: &str = include_str!("../data/klein_quartic.txt");

/// A facet list over named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedComplexFixture {
    pub name: String,
    /// Sorted, distinct.
    pub labels: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl NamedComplexFixture {
    /// Parses one facet per line, labels separated by commas. Blank lines
    /// and lines starting with `#` are skipped. Labels are collected from
    /// the facets.
    pub fn parse(name: &str, text: &str) -> Self {
        let facets: Vec<Vec<String>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(|s| s.trim().to_string()).collect())
            .collect();
        let mut labels: Vec<String> = facets.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        NamedComplexFixture {
            name: name.to_string(),
            labels,
            facets,
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        complex_from_facets(&self.labels, &self.facets)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| Error::UnknownLabel)
    }
}

/// Builds a complex whose vertex `i` is `labels[i]`. Errors name the
/// offending facet.
pub fn complex_from_facets<L, F>(labels: &[L], facets: &[F]) -> Result<SimplicialComplex>
where
    L: AsRef<str>,
    F: AsRef<[L]>,
{
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_ref(), i))
        .collect();
    if index.len() != labels.len() {
        return Err(Error::NotSimplicial {
            facet: 0,
            reason: "repeated label",
        });
    }
    let rows = facets
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.as_ref()
                .iter()
                .map(|l| {
                    index.get(l.as_ref()).copied().ok_or(Error::NotSimplicial {
                        facet: i,
                        reason: "unknown label",
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::new(labels.len(), rows)
}

pub fn klein_quartic_fixture() -> NamedComplexFixture {
    NamedComplexFixture::parse("klein-quartic", KLEIN_QUARTIC)
}

/// The 24-vertex, 56-triangle genus-3 surface, vertices `a..x` in order.
pub fn klein_quartic() -> SimplicialComplex {
    klein_quartic_fixture()
        .complex()
        .expect("shipped fixture is valid")
}

/// Automorphism group order of the dual graph of the Klein quartic.
pub fn klein_quartic_dual_aut_order() -> Result<u64> {
    symmetry::brute_force_automorphisms(&dual_graph(&klein_quartic()), symmetry::BRUTE_FORCE_CAP)
}

/// Simplicial automorphisms: automorphisms of the 1-skeleton that also
/// map facets to facets.
pub fn simplicial_automorphisms(c: &SimplicialComplex) -> Result<Vec<VertexPermutation>> {
    let all =
        symmetry::brute_force_automorphism_group(&c.skeleton_graph(), symmetry::BRUTE_FORCE_CAP)?;
    Ok(all
        .into_iter()
        .filter(|p| p.preserves_facets(c.facets()))
        .collect())
}

pub fn klein_quartic_aut_order() -> Result<u64> {
    Ok(simplicial_automorphisms(&klein_quartic())?.len() as u64)
}

/// The order-7 rotation fixing `a`, `w` and `x`.
pub fn klein_quartic_rotation() -> VertexPermutation {
    let fx = klein_quartic_fixture();
    let mut images: Vec<usize> = (0..fx.labels.len()).collect();
    for cycle in ["bcdefgh", "jklmnoi", "sprtuvq"] {
        let ids: Vec<usize> = cycle
            .chars()
            .map(|c| {
                fx.index_of(c.encode_utf8(&mut [0; 4]))
                    .expect("fixture label")
            })
            .collect();
        for (i, &v) in ids.iter().enumerate() {
            images[v] = ids[(i + 1) % ids.len()];
        }
    }
    VertexPermutation::new(images).expect("disjoint cycles")
}
