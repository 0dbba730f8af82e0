//! Finite quotients: the Heawood graph `H_k`, the torus `T_k`, their
//! f-vectors and the facet/vertex duality between them.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intlin::IntMatrix;
use crate::lattice::{self, KSignature, Sublattice, WCoefficientVector};
use crate::tiling::{self, OrderedPartition, TilingFace, TilingVertex};

/// Largest vertex count the quotient builders will attempt.
pub const MAX_QUOTIENT_VERTICES: u64 = 2_000_000;

/// Canonical representative of the class of `x` modulo the sublattice.
///
/// Writing `x = p + t` with `p` a permutation and `t` a tile offset can be
/// done in `d + 1` ways, and translating `x` by the sublattice permutes the
/// candidates `p + reduce(t)` without changing them as a set. The smallest
/// candidate is therefore a class invariant.
pub fn vertex_key(x: &TilingVertex, sub: &Sublattice) -> Result<TilingVertex> {
    if x.coords().len() != sub.len() {
        return Err(Error::Shape {
            expected: sub.len(),
            found: x.coords().len(),
        });
    }
    let mut best: Option<Vec<i64>> = None;
    for t in x.tiles_containing() {
        let shift = lattice::to_ambient(&t);
        let rep = lattice::to_ambient(&sub.reduce(t.coeffs())?);
        let cand: Vec<i64> = x
            .coords()
            .iter()
            .zip(shift.iter().zip(&rep))
            .map(|(c, (s, r))| c - s + r)
            .collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(TilingVertex::from_coords_unchecked(
        best.expect("d + 1 >= 2 tiles"),
    ))
}

/// A finite quotient of the tiling graph, vertices sorted by key.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    graph: Graph,
    vertices: Vec<TilingVertex>,
    index: BTreeMap<TilingVertex, usize>,
    sublattice: Sublattice,
    delta: bool,
}

impl QuotientGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[TilingVertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &TilingVertex {
        &self.vertices[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn sublattice(&self) -> &Sublattice {
        &self.sublattice
    }

    pub fn signature(&self) -> Option<&KSignature> {
        self.sublattice.signature()
    }

    pub fn d(&self) -> usize {
        self.sublattice.d()
    }

    /// Set when the quotient is only a delta complex: a zero entry in `k`,
    /// or a general matrix whose torus is not simplicial.
    pub fn is_delta(&self) -> bool {
        self.delta
    }

    /// Index of the class of any tiling vertex.
    pub fn index_of(&self, x: &TilingVertex) -> Result<usize> {
        let key = vertex_key(x, &self.sublattice)?;
        self.index.get(&key).copied().ok_or(Error::UnknownLabel)
    }

    /// Index of a vertex given in coordinates.
    pub fn index_of_coords(&self, x: &[i64]) -> Result<usize> {
        self.index_of(&TilingVertex::new(x)?)
    }

    /// The `d + 1` tile classes at each vertex, as indices into
    /// [`Sublattice::classes`]; one row per graph vertex.
    pub fn raw_facets(&self) -> Result<Vec<Vec<usize>>> {
        let classes = self.sublattice.classes();
        let lookup: BTreeMap<&WCoefficientVector, usize> =
            classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        self.vertices
            .iter()
            .map(|x| {
                let mut facet = x
                    .tiles_containing()
                    .iter()
                    .map(|t| {
                        let r = self.sublattice.reduce(t.coeffs())?;
                        lookup.get(&r).copied().ok_or(Error::ReductionFailure)
                    })
                    .collect::<Result<Vec<_>>>()?;
                facet.sort_unstable();
                Ok(facet)
            })
            .collect()
    }

    /// The torus: one vertex per sublattice class, one facet per graph
    /// vertex (facet `i` belongs to vertex `i`).
    pub fn torus_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.sublattice.order() as usize, self.raw_facets()?)
    }
}

fn bfs_quotient(sub: Sublattice, delta_hint: bool) -> Result<QuotientGraph> {
    let d = sub.d();
    let expected = (1..=d as u64).try_fold(sub.order(), |acc, i| acc.checked_mul(i));
    match expected {
        Some(n) if n <= MAX_QUOTIENT_VERTICES => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "quotient vertices",
                size: expected.map_or(usize::MAX, |n| n as usize),
                cap: MAX_QUOTIENT_VERTICES as usize,
            })
        }
    }

    let seed = vertex_key(&TilingVertex::seed(d), &sub)?;
    let mut order: Vec<TilingVertex> = vec![seed.clone()];
    let mut seen: BTreeMap<TilingVertex, usize> = BTreeMap::new();
    seen.insert(seed, 0);
    let mut raw_edges: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut nbrs = Vec::with_capacity(d + 1);
        for y in order[i].neighbors() {
            let key = vertex_key(&y, &sub)?;
            let j = match seen.get(&key) {
                Some(&j) => j,
                None => {
                    let j = order.len();
                    seen.insert(key.clone(), j);
                    order.push(key);
                    queue.push_back(j);
                    j
                }
            };
            nbrs.push(j);
        }
        if raw_edges.len() <= i {
            raw_edges.resize(i + 1, Vec::new());
        }
        raw_edges[i] = nbrs;
    }

    // reindex by sorted key
    let mut sorted: Vec<usize> = (0..order.len()).collect();
    sorted.sort_by(|&a, &b| order[a].cmp(&order[b]));
    let mut new_index = vec![0usize; order.len()];
    for (new, &old) in sorted.iter().enumerate() {
        new_index[old] = new;
    }
    let mut lists = vec![Vec::new(); order.len()];
    let mut multi = false;
    for (old, nbrs) in raw_edges.iter().enumerate() {
        let a = new_index[old];
        for &b in nbrs {
            lists[a].push(new_index[b]);
        }
        let mut uniq = nbrs.clone();
        uniq.sort_unstable();
        uniq.dedup();
        multi |= uniq.len() != nbrs.len() || nbrs.contains(&old);
    }
    let graph = Graph::from_adjacency(lists);
    let vertices: Vec<TilingVertex> = sorted.iter().map(|&o| order[o].clone()).collect();
    let index = vertices
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut q = QuotientGraph {
        graph,
        vertices,
        index,
        sublattice: sub,
        delta: delta_hint || multi,
    };
    if !q.delta && q.torus_complex().is_err() {
        q.delta = true;
    }
    Ok(q)
}

/// `H_k`: the tiling graph modulo `Λ_k`, grown by BFS from `(1, …, d+1)`.
/// Delta-mode signatures are accepted and the result is flagged.
pub fn build_heawood_graph(k: &KSignature) -> Result<QuotientGraph> {
    bfs_quotient(Sublattice::banded(k)?, k.is_delta())
}

/// Quotient by the span of arbitrary rows (w-coefficients) plus the
/// all-ones relation. Restricted to `d = 2`; see
/// [`build_general_quotient_any_dim`].
pub fn build_general_quotient(rows: &IntMatrix) -> Result<QuotientGraph> {
    if rows.cols() != 3 {
        return Err(Error::UnsupportedDimension {
            dimension: rows.cols().saturating_sub(1),
        });
    }
    build_general_quotient_any_dim(rows)
}

pub fn build_general_quotient_any_dim(rows: &IntMatrix) -> Result<QuotientGraph> {
    bfs_quotient(Sublattice::general(rows)?, false)
}

/// `T_k` with vertices the fundamental vectors in lexicographic order.
pub fn build_torus_complex(k: &KSignature) -> Result<SimplicialComplex> {
    build_heawood_graph(k)?.torus_complex()
}

/// A pure simplicial complex on `0..vertex_count`. Facets are sorted
/// vertex tuples kept in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validates: uniform size, distinct vertices per facet, distinct facets.
    pub fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let size = facets.first().map_or(0, Vec::len);
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(facets.len());
        for (i, mut f) in facets.into_iter().enumerate() {
            if f.len() != size || f.is_empty() {
                return Err(Error::NotSimplicial {
                    facet: i,
                    reason: "facet size differs",
                });
            }
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotSimplicial {
                    facet: i,
                    reason: "repeated vertex",
                });
            }
            if f.iter().any(|&v| v >= vertex_count) {
                return Err(Error::NotSimplicial {
                    facet: i,
                    reason: "vertex out of range",
                });
            }
            if !seen.insert(f.clone()) {
                return Err(Error::NotSimplicial {
                    facet: i,
                    reason: "duplicate facet",
                });
            }
            out.push(f);
        }
        Ok(SimplicialComplex {
            vertex_count,
            facets: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.facets.first().map_or(0, |f| f.len() - 1)
    }

    /// All faces of dimension `dim`, as sorted tuples in sorted order.
    pub fn faces(&self, dim: usize) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for sub in subsets_of_size(f, dim + 1) {
                set.insert(sub);
            }
        }
        set.into_iter().collect()
    }

    /// Face counts by enumeration. Vertices not in any facet still count.
    pub fn f_vector(&self) -> FVector {
        let mut f: Vec<u64> = (0..=self.dimension())
            .map(|i| self.faces(i).len() as u64)
            .collect();
        if let Some(f0) = f.first_mut() {
            *f0 = self.vertex_count as u64;
        }
        FVector(f)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn skeleton_graph(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count);
        for f in &self.facets {
            for (i, &a) in f.iter().enumerate() {
                for &b in &f[i + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Number of facets containing each codimension-1 face.
    pub fn ridge_degrees(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for f in &self.facets {
            for r in subsets_of_size(f, f.len() - 1) {
                *out.entry(r).or_insert(0) += 1;
            }
        }
        out
    }

    /// The facets containing vertex `v`, with `v` removed.
    pub fn link(&self, v: usize) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&u| u != v).collect())
            .collect()
    }
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut pos = size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < n - size + pos {
                idx[pos] += 1;
                for j in pos + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Facets adjacent iff they share a codimension-1 face. Vertex `i` of the
/// result is facet `i`.
pub fn dual_graph(c: &SimplicialComplex) -> Graph {
    let mut g = Graph::empty(c.facets.len());
    let mut by_ridge: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, f) in c.facets.iter().enumerate() {
        for r in subsets_of_size(f, f.len() - 1) {
            by_ridge.entry(r).or_default().push(i);
        }
    }
    for owners in by_ridge.values() {
        for (x, &a) in owners.iter().enumerate() {
            for &b in &owners[x + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// `(f_0, …, f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        lattice::write_tuple(f, &v)
    }
}

/// Stirling number of the second kind, by the alternating sum
/// `S(n, m) = (1/m!) Σ_{i=1}^{m} (−1)^{m−i} C(m, i) i^n`.
pub fn stirling2(n: u32, m: u32) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    if m == 0 {
        return if n == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let mut sum = BigInt::zero();
    for i in 1..=m {
        let term = binomial(BigInt::from(m), BigInt::from(i))
            * num_traits::pow(BigInt::from(i), n as usize);
        if (m - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(m)
}

/// The same numbers through `S(n, m) = m S(n−1, m) + S(n−1, m−1)`.
pub fn stirling2_recurrence(n: u32, m: u32) -> BigInt {
    let (n, m) = (n as usize, m as usize);
    if m > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for _ in 0..n {
        for j in (1..=m).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m].clone()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `i! · S(d+1, i+1)` for `i = 0..=d`: the f-vector divided by `D_k`.
pub fn fvector_factors(d: u32) -> Vec<BigInt> {
    (0..=d)
        .map(|i| factorial(i) * stirling2(d + 1, i + 1))
        .collect()
}

/// Closed-form f-vector of `T_k`: `f_i = i! S(d+1, i+1) D_k`.
pub fn fvector_formula(k: &KSignature) -> Result<FVector> {
    let dk = k.dk();
    fvector_factors(k.d() as u32)
        .into_iter()
        .map(|c| (c * &dk).to_u64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(FVector)
}

/// Counts tiling faces modulo the sublattice, grouped by number of blocks
/// minus one (the dimension of the dual torus face).
///
/// Every canonical name (partition with coordinate 0 in the first block,
/// offset a class representative) is visited, and faces are identified by
/// their sets of quotient vertices. If canonical names are unique, entry
/// `i` equals `i! · S(d+1, i+1) · D`.
pub fn face_census(q: &QuotientGraph) -> Result<Vec<u64>> {
    let n = q.d() + 1;
    let classes = q.sublattice().classes();
    let mut out = Vec::with_capacity(n);
    for blocks in 1..=n {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut named = 0u64;
        for p in OrderedPartition::all_with_blocks(n, blocks)
            .into_iter()
            .filter(OrderedPartition::is_canonical)
        {
            for c in &classes {
                let face = TilingFace::new(p.clone(), c.clone());
                let mut ids = tiling::face_vertices(&face)
                    .iter()
                    .map(|x| q.index_of(x))
                    .collect::<Result<Vec<_>>>()?;
                ids.sort_unstable();
                ids.dedup();
                seen.insert(ids);
                named += 1;
            }
        }
        if named != seen.len() as u64 {
            return Err(Error::NotSimplicial {
                facet: blocks - 1,
                reason: "two canonical names share a face",
            });
        }
        out.push(named);
    }
    Ok(out)
}
