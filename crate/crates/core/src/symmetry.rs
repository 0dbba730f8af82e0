//! Automorphisms of quotient graphs: the translation, rotation and cyclic
//! generators, group closure, and a brute-force search to check them.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::WCoefficientVector;
use crate::quotient::QuotientGraph;
use crate::tiling::TilingVertex;

/// Default bound on the size of a closed group.
pub const GROUP_CAP: usize = 1_000_000;
/// Default bound on the vertex count for brute-force search.
pub const BRUTE_FORCE_CAP: usize = 200;

/// `images[v]` is the image of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    /// Checks that `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::NotAnAutomorphism);
            }
            seen[i] = true;
        }
        Ok(VertexPermutation(images))
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        VertexPermutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        VertexPermutation(inv)
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.0.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(a, b)| g.has_edge(self.0[a], self.0[b]))
    }

    /// Whether the permutation maps the facet set onto itself.
    pub fn preserves_facets(&self, facets: &[Vec<usize>]) -> bool {
        let set: BTreeSet<Vec<usize>> = facets.iter().cloned().collect();
        facets.iter().all(|f| {
            let mut img: Vec<usize> = f.iter().map(|&v| self.0[v]).collect();
            img.sort_unstable();
            set.contains(&img)
        })
    }
}

fn induced_map<F>(q: &QuotientGraph, f: F) -> Result<VertexPermutation>
where
    F: Fn(&TilingVertex) -> Result<TilingVertex>,
{
    let images = q
        .vertices()
        .iter()
        .map(|x| q.index_of(&f(x)?))
        .collect::<Result<Vec<_>>>()?;
    let p = VertexPermutation::new(images)?;
    if p.is_automorphism(q.graph()) {
        Ok(p)
    } else {
        Err(Error::NotAnAutomorphism)
    }
}

/// The `d` translations `x ↦ x + w_i`, `i = 1..=d`.
pub fn translation_generators(q: &QuotientGraph) -> Result<Vec<VertexPermutation>> {
    let n = q.d() + 1;
    (0..n - 1)
        .map(|i| {
            let w = WCoefficientVector::indicator(n, &[i]);
            induced_map(q, |x| Ok(x.translate(&w)))
        })
        .collect()
}

/// The point reflection `x ↦ (d+2)·(1, …, 1) − x`, which negates every `w_i`.
pub fn rotation_r(q: &QuotientGraph) -> Result<VertexPermutation> {
    let c = q.d() as i64 + 2;
    induced_map(q, |x| {
        let y: Vec<i64> = x.coords().iter().map(|&a| c - a).collect();
        TilingVertex::new(&y)
    })
}

/// Shifts `k` that leave the sublattice invariant, including `0`.
pub fn admitted_shifts(q: &QuotientGraph) -> Vec<usize> {
    let n = q.d() + 1;
    (0..n)
        .filter(|&s| shift_preserves_sublattice(q, s))
        .collect()
}

fn shift_preserves_sublattice(q: &QuotientGraph, shift: usize) -> bool {
    if let Some(k) = q.signature() {
        return k.is_shift_invariant(shift);
    }
    let gens = q.sublattice().generators();
    (0..gens.rows()).all(|r| {
        let row: Option<Vec<i64>> = gens.row(r).iter().map(|x| i64::try_from(x).ok()).collect();
        let Some(row) = row else { return false };
        let shifted = WCoefficientVector::new(&row).cyclic_shift(shift);
        q.sublattice().contains(shifted.coeffs()).unwrap_or(false)
    })
}

/// Coordinate rotation by `shift`, which relabels `w_i` as `w_{i+shift}`.
/// Refused unless the sublattice is invariant under the relabeling.
pub fn cyclic_c(q: &QuotientGraph, shift: usize) -> Result<VertexPermutation> {
    let n = q.d() + 1;
    if !shift_preserves_sublattice(q, shift % n) {
        return Err(Error::NotAnAutomorphism);
    }
    induced_map(q, |x| {
        let mut y = vec![0; n];
        for (a, &c) in x.coords().iter().enumerate() {
            y[(a + shift) % n] = c;
        }
        TilingVertex::new(&y)
    })
}

/// Translations, `R`, and the smallest admitted nontrivial cyclic shift.
pub fn standard_generators(q: &QuotientGraph) -> Result<Vec<VertexPermutation>> {
    let mut gens = translation_generators(q)?;
    gens.push(rotation_r(q)?);
    if let Some(&s) = admitted_shifts(q).get(1) {
        gens.push(cyclic_c(q, s)?);
    }
    Ok(gens)
}

/// A finite permutation group with its full element list, sorted.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub generators: Vec<VertexPermutation>,
    pub elements: Vec<VertexPermutation>,
}

impl PermutationGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &VertexPermutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Closes `gens` under composition by breadth-first search.
pub fn group_closure(n: usize, gens: &[VertexPermutation], cap: usize) -> Result<PermutationGroup> {
    let id = VertexPermutation::identity(n);
    let mut seen: BTreeSet<VertexPermutation> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group",
                        size: seen.len() + 1,
                        cap,
                    });
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(PermutationGroup {
        generators: gens.to_vec(),
        elements: seen.into_iter().collect(),
    })
}

/// Vertices reachable from `v` under the generators.
pub fn orbit(n: usize, gens: &[VertexPermutation], v: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for g in gens {
            let w = g.apply(u);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).filter(|&u| seen[u]).collect()
}

/// Stable vertex coloring by iterated neighbor-color multisets, starting
/// from degrees.
pub fn color_refinement(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colors = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    colors: Vec<usize>,
    dist: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    collect: bool,
    found: Vec<VertexPermutation>,
    count: u64,
}

impl Search<'_> {
    fn consistent(&self, depth: usize, v: usize, img: usize) -> bool {
        if self.used[img] || self.colors[v] != self.colors[img] {
            return false;
        }
        let root = self.order[0];
        if depth > 0 && self.dist[root][v] != self.dist[self.image[root]][img] {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&u| self.g.has_edge(u, v) == self.g.has_edge(self.image[u], img))
    }

    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.count += 1;
            if self.collect {
                self.found.push(VertexPermutation(self.image.clone()));
            }
            return;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = if depth == 0 {
            (0..self.g.vertex_count()).collect()
        } else {
            self.g.neighbors(self.image[self.parent[v]]).to_vec()
        };
        for img in candidates {
            if !self.consistent(depth, v, img) {
                continue;
            }
            self.image[v] = img;
            self.used[img] = true;
            self.extend(depth + 1);
            self.used[img] = false;
        }
    }
}

fn run_search(g: &Graph, cap: usize, collect: bool) -> Result<Search<'_>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "brute-force vertices",
            size: n,
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::UnsupportedDimension { dimension: 0 });
    }
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    if n > 0 {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
    }
    let mut s = Search {
        g,
        order,
        parent,
        colors: color_refinement(g),
        dist: (0..n).map(|v| g.distances_from(v)).collect(),
        image: vec![usize::MAX; n],
        used: vec![false; n],
        collect,
        found: Vec::new(),
        count: 0,
    };
    if n == 0 {
        s.count = 1;
        s.found.push(VertexPermutation(Vec::new()));
    } else {
        s.extend(0);
    }
    Ok(s)
}

/// Order of the automorphism group of a connected graph, by exhaustive
/// backtracking. Vertices are mapped in BFS order, each one onto a
/// neighbor of its parent's image, pruned by refined colors, distance to
/// the root and adjacency with everything already mapped.
pub fn brute_force_automorphisms(g: &Graph, cap: usize) -> Result<u64> {
    Ok(run_search(g, cap, false)?.count)
}

/// Every automorphism, sorted.
pub fn brute_force_automorphism_group(g: &Graph, cap: usize) -> Result<Vec<VertexPermutation>> {
    let mut found = run_search(g, cap, true)?.found;
    found.sort();
    Ok(found)
}

/// The four transpositions of the exceptional automorphism of the classical
/// Heawood graph, as tiling coordinates.
pub const EXCEPTIONAL_W: [([i64; 3], [i64; 3]); 4] = [
    ([3, -1, 4], [1, 0, 5]),
    ([4, -1, 3], [5, 0, 1]),
    ([1, 3, 2], [0, 2, 4]),
    ([2, 3, 1], [4, 2, 0]),
];

/// Builds the product of the exceptional transpositions on `q`, or `None`
/// when the labels do not name eight distinct vertices of `q`.
pub fn exceptional_w(q: &QuotientGraph) -> Option<VertexPermutation> {
    let mut images: Vec<usize> = (0..q.vertex_count()).collect();
    let mut touched = BTreeSet::new();
    for (a, b) in EXCEPTIONAL_W {
        let a = q.index_of_coords(&a).ok()?;
        let b = q.index_of_coords(&b).ok()?;
        if !touched.insert(a) || !touched.insert(b) {
            return None;
        }
        images.swap(a, b);
    }
    Some(VertexPermutation(images))
}

/// Whether the exceptional permutation is an automorphism of `q`.
pub fn verify_exceptional_w(q: &QuotientGraph) -> bool {
    exceptional_w(q).is_some_and(|p| p.is_automorphism(q.graph()))
}
