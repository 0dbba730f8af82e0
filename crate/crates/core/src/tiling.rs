//! The infinite permutahedral tiling: its vertices, edges, tiles and faces.
//!
//! Vertices are integer points on the slice `Σx = 1 + … + (d+1)` whose
//! coordinates hit every residue mod `d+1`. Tiles are translates of the
//! permutahedron by `L_d`, and faces are named by an ordered partition of
//! the coordinate set plus a lattice offset.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{self, WCoefficientVector};

/// Vertex of the tiling graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingVertex(Vec<i64>);

/// Both vertex conditions: the slice sum, and a complete residue system.
pub fn is_tiling_vertex(x: &[i64]) -> bool {
    let n = x.len() as i64;
    if n < 2 || x.iter().sum::<i64>() != n * (n + 1) / 2 {
        return false;
    }
    let mut seen = vec![false; x.len()];
    for &c in x {
        let r = c.rem_euclid(n) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

impl TilingVertex {
    pub fn new(coords: &[i64]) -> Result<Self> {
        if is_tiling_vertex(coords) {
            Ok(TilingVertex(coords.to_vec()))
        } else {
            Err(Error::NotTilingVertex)
        }
    }

    /// The vertex `(1, 2, …, d+1)`.
    pub fn seed(d: usize) -> Self {
        TilingVertex((1..=d as i64 + 1).collect())
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(is_tiling_vertex(&coords));
        TilingVertex(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    /// The neighbor `x + e_to − e_from`, if that move is an edge.
    ///
    /// A move keeps the residues complete exactly when
    /// `x_from ≡ x_to + 1 (mod d+1)`.
    pub fn step(&self, from: usize, to: usize) -> Option<TilingVertex> {
        let n = self.0.len() as i64;
        if from == to || (self.0[from] - self.0[to] - 1).rem_euclid(n) != 0 {
            return None;
        }
        let mut y = self.0.clone();
        y[from] -= 1;
        y[to] += 1;
        Some(TilingVertex(y))
    }

    /// The `d + 1` neighbors, sorted.
    pub fn neighbors(&self) -> Vec<TilingVertex> {
        let n = self.0.len();
        let mut pos_of_residue = vec![0usize; n];
        for (a, &c) in self.0.iter().enumerate() {
            pos_of_residue[c.rem_euclid(n as i64) as usize] = a;
        }
        let mut out: Vec<TilingVertex> = (0..n)
            .map(|from| {
                let r = (self.0[from] - 1).rem_euclid(n as i64) as usize;
                self.step(from, pos_of_residue[r]).expect("residue rule")
            })
            .collect();
        out.sort();
        out
    }

    pub fn translate(&self, offset: &WCoefficientVector) -> TilingVertex {
        let v = lattice::to_ambient(offset);
        TilingVertex(self.0.iter().zip(&v).map(|(x, y)| x + y).collect())
    }

    /// The permutation of `[d+1]` whose coordinates share residues with `x`.
    pub fn base_permutation(&self) -> Vec<i64> {
        self.shifted_permutation(0)
    }

    /// The permutation `p` with `p_a ≡ x_a − shift (mod d+1)`.
    fn shifted_permutation(&self, shift: i64) -> Vec<i64> {
        let n = self.0.len() as i64;
        self.0
            .iter()
            .map(|&c| (c - shift - 1).rem_euclid(n) + 1)
            .collect()
    }

    /// Offsets `v` of the `d + 1` tiles `Π_d + v` containing this vertex,
    /// in order of residue shift.
    pub fn tiles_containing(&self) -> Vec<WCoefficientVector> {
        let n = self.0.len() as i64;
        (0..n)
            .map(|c| {
                let p = self.shifted_permutation(c);
                let v: Vec<i64> = self.0.iter().zip(&p).map(|(x, p)| x - p).collect();
                lattice::from_ambient(&v).expect("difference of residue-aligned points")
            })
            .collect()
    }

    /// Compact label: coordinates joined by commas, negatives with `-`.
    pub fn label(&self) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{c}"));
        }
        s
    }
}

impl fmt::Display for TilingVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        lattice::write_tuple(f, &self.0)
    }
}

/// Ordered set partition of `{0, …, d}`; blocks are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Shape {
                    expected: 1,
                    found: 0,
                });
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || seen[x] {
                    return Err(Error::Shape {
                        expected: n,
                        found: x + 1,
                    });
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Shape {
                expected: n,
                found: seen.iter().filter(|s| **s).count(),
            });
        }
        Ok(OrderedPartition { blocks })
    }

    /// Builds from 1-based labels, e.g. `[[2, 3], [1]]`.
    pub fn from_one_based<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.as_ref().iter().map(|&x| x.wrapping_sub(1)).collect())
            .collect();
        Self::new(n, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Canonical when coordinate 0 lies in the first block.
    pub fn is_canonical(&self) -> bool {
        self.blocks[0].contains(&0)
    }

    /// Every ordered partition of `{0, …, n-1}` into exactly `parts` blocks.
    pub fn all_with_blocks(n: usize, parts: usize) -> Vec<OrderedPartition> {
        // assign each element a block label, keep surjective assignments
        let mut out = Vec::new();
        if parts == 0 || parts > n {
            return out;
        }
        let mut label = vec![0usize; n];
        loop {
            let mut used = vec![false; parts];
            for &l in &label {
                used[l] = true;
            }
            if used.iter().all(|u| *u) {
                let mut blocks = vec![Vec::new(); parts];
                for (x, &l) in label.iter().enumerate() {
                    blocks[l].push(x);
                }
                out.push(OrderedPartition { blocks });
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    out.sort();
                    return out;
                }
                pos -= 1;
                if label[pos] + 1 < parts {
                    label[pos] += 1;
                    for l in &mut label[pos + 1..] {
                        *l = 0;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            for x in b {
                write!(f, "{}", x + 1)?;
            }
        }
        f.write_str("]")
    }
}

/// A face of the tiling: the face of `Π_d` named by `partition`, translated
/// by `Σ offset_i w_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingFace {
    pub partition: OrderedPartition,
    pub offset: WCoefficientVector,
}

impl TilingFace {
    pub fn new(partition: OrderedPartition, offset: WCoefficientVector) -> Self {
        TilingFace { partition, offset }
    }

    pub fn dimension(&self) -> usize {
        self.partition.ground_size() - self.partition.num_blocks()
    }
}

/// Renames a face by moving its first block to the end.
///
/// Translating `[B_1, …, B_k]` by `Σ_{b∈B_1} w_b` gives `[B_2, …, B_k, B_1]`,
/// so the same geometric face carries offset `offset − Σ_{b∈B_1} w_b`
/// under its rotated name.
pub fn rotate_partition(f: &TilingFace) -> TilingFace {
    let n = f.partition.ground_size();
    let mut blocks = f.partition.blocks.clone();
    let first = blocks.remove(0);
    let shift = WCoefficientVector::indicator(n, &first);
    blocks.push(first);
    TilingFace {
        partition: OrderedPartition { blocks },
        offset: f.offset.sub(&shift),
    }
}

/// The unique name of the face whose first block contains coordinate 0.
pub fn canonical_face(f: &TilingFace) -> TilingFace {
    let mut g = f.clone();
    while !g.partition.is_canonical() {
        g = rotate_partition(&g);
    }
    g
}

/// Vertices of the face, sorted: the permutations whose values on block
/// `B_i` are exactly `{b_{i-1}+1, …, b_i}`, translated by the offset.
pub fn face_vertices(f: &TilingFace) -> Vec<TilingVertex> {
    let n = f.partition.ground_size();
    let shift = lattice::to_ambient(&f.offset);
    let mut out = vec![vec![0i64; n]];
    let mut next_value = 1i64;
    for block in f.partition.blocks() {
        let values: Vec<i64> = (next_value..next_value + block.len() as i64).collect();
        next_value += block.len() as i64;
        let perms = permutations(&values);
        let mut grown = Vec::with_capacity(out.len() * perms.len());
        for partial in &out {
            for p in &perms {
                let mut x = partial.clone();
                for (&pos, &val) in block.iter().zip(p) {
                    x[pos] = val;
                }
                grown.push(x);
            }
        }
        out = grown;
    }
    let mut verts: Vec<TilingVertex> = out
        .into_iter()
        .map(|x| TilingVertex(x.iter().zip(&shift).map(|(a, b)| a + b).collect()))
        .collect();
    verts.sort();
    verts
}

pub(crate) fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// Classifies a rational point against the tile `Π_d + offset` using the
/// facet inequalities `Σ_{a∈A} x_a ≥ 1 + … + |A|`.
pub fn permutahedron_membership(
    point: &[Ratio<i64>],
    offset: &WCoefficientVector,
) -> Result<Membership> {
    let n = point.len();
    if offset.len() != n {
        return Err(Error::Shape {
            expected: n,
            found: offset.len(),
        });
    }
    let shift = lattice::to_ambient(offset);
    let x: Vec<Ratio<i64>> = point
        .iter()
        .zip(&shift)
        .map(|(p, s)| p - Ratio::from(*s))
        .collect();
    let total: Ratio<i64> = x.iter().sum();
    if total != Ratio::from((n * (n + 1) / 2) as i64) {
        return Err(Error::OffSlice);
    }
    let mut on_boundary = false;
    for mask in 1u64..(1u64 << n) - 1 {
        let size = mask.count_ones() as i64;
        let lhs: Ratio<i64> = (0..n).filter(|a| mask >> a & 1 == 1).map(|a| x[a]).sum();
        let rhs = Ratio::from(size * (size + 1) / 2);
        if lhs < rhs {
            return Ok(Membership::Outside);
        }
        on_boundary |= lhs == rhs;
    }
    Ok(if on_boundary {
        Membership::Boundary
    } else {
        Membership::Interior
    })
}
