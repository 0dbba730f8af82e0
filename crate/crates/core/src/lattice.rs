//! The weight lattice, the sublattice `Λ_k` and its coset representatives.
//!
//! Lattice points are written as coefficient tuples over `w_1, …, w_{d+1}`.
//! Because `w_1 + … + w_{d+1} = 0`, a tuple is only defined up to adding the
//! all-ones vector; [`WCoefficientVector`] always stores the representative
//! whose smallest entry is zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlin::{self, IntMatrix};

/// Step budget for the cyclic row corrections of [`reduce_to_fundamental`].
pub const REDUCTION_GUARD: usize = 1_000_000;

/// The parameter vector `k = (k_1, …, k_{d+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSignature {
    entries: Vec<i64>,
    delta: bool,
}

impl KSignature {
    /// Strict signature: at least three entries, all positive.
    pub fn new(entries: &[i64]) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::InvalidSignature("need d + 1 >= 3 entries"));
        }
        if entries.iter().any(|&x| x < 1) {
            return Err(Error::InvalidSignature(
                "entries must be positive (use delta mode for zeros)",
            ));
        }
        Ok(KSignature {
            entries: entries.to_vec(),
            delta: false,
        })
    }

    /// Delta-mode signature. Zeros are allowed, and nothing built from it
    /// is guaranteed to be a simplicial complex.
    pub fn delta(entries: &[i64]) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidSignature("need at least two entries"));
        }
        if entries.iter().any(|&x| x < 0) {
            return Err(Error::InvalidSignature("entries must be nonnegative"));
        }
        Ok(KSignature {
            entries: entries.to_vec(),
            delta: true,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The dimension `d`; the signature has `d + 1` entries.
    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_delta(&self) -> bool {
        self.delta
    }

    pub fn is_constant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] == w[1])
    }

    pub fn matrix(&self) -> IntMatrix {
        intlin::build_mk(&self.entries).expect("validated signature")
    }

    /// `D_k = Π(k_i + 1) − Π k_i`.
    pub fn dk(&self) -> BigInt {
        intlin::closed_form_dk(&self.entries)
    }

    pub fn dk_u64(&self) -> Result<u64> {
        self.dk().to_u64().ok_or(Error::Overflow)
    }

    /// Whether `k_{i+s} = k_i` for every `i`, indices taken cyclically.
    pub fn is_shift_invariant(&self, shift: usize) -> bool {
        let n = self.len();
        (0..n).all(|i| self.entries[(i + shift) % n] == self.entries[i])
    }
}

impl fmt::Display for KSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for KSignature {
    type Err = Error;

    /// Parses `"1,1,1"`. Zeros switch to delta mode.
    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_int_list(s)
            .ok_or(Error::InvalidSignature("expected comma separated integers"))?;
        if entries.contains(&0) {
            KSignature::delta(&entries)
        } else {
            KSignature::new(&entries)
        }
    }
}

pub(crate) fn parse_int_list(s: &str) -> Option<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().ok()).collect()
}

/// Integer coefficients over `w_1, …, w_{d+1}`, normalized so the minimum
/// entry is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WCoefficientVector(Vec<i64>);

impl WCoefficientVector {
    pub fn new(coeffs: &[i64]) -> Self {
        let min = coeffs.iter().copied().min().unwrap_or(0);
        WCoefficientVector(coeffs.iter().map(|&c| c - min).collect())
    }

    pub fn zero(n: usize) -> Self {
        WCoefficientVector(vec![0; n])
    }

    /// Sum of `w_b` over `b` in `set` (0-based indices).
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut c = vec![0; n];
        for &b in set {
            c[b] += 1;
        }
        Self::new(&c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let v: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect();
        Self::new(&v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let v: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        Self::new(&v)
    }

    pub fn neg(&self) -> Self {
        let v: Vec<i64> = self.0.iter().map(|a| -a).collect();
        Self::new(&v)
    }

    /// Relabels `w_i` as `w_{i+shift}`.
    pub fn cyclic_shift(&self, shift: usize) -> Self {
        let n = self.0.len();
        let mut v = vec![0; n];
        for (i, &c) in self.0.iter().enumerate() {
            v[(i + shift) % n] = c;
        }
        WCoefficientVector(v)
    }
}

impl fmt::Display for WCoefficientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// A class of the quotient `L_d / Λ`, named by its canonical representative.
/// For banded sublattices the representative is a fundamental vector:
/// `0 ≤ a_i ≤ k_i` with some `a_i = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeClass {
    pub rep: WCoefficientVector,
}

/// `w_i` in ambient coordinates: `d` at position `i`, `-1` elsewhere.
/// `i` is 0-based.
pub fn w_vector(i: usize, d: usize) -> Result<Vec<i64>> {
    if i > d {
        return Err(Error::Shape {
            expected: d + 1,
            found: i + 1,
        });
    }
    let mut v = vec![-1; d + 1];
    v[i] = d as i64;
    Ok(v)
}

/// `Σ a_i w_i` in ambient coordinates: entry `j` is `(d+1)a_j − Σa`.
pub fn to_ambient(a: &WCoefficientVector) -> Vec<i64> {
    ambient_from_coeffs(a.coeffs())
}

pub(crate) fn ambient_from_coeffs(a: &[i64]) -> Vec<i64> {
    let n = a.len() as i64;
    let sum: i64 = a.iter().sum();
    a.iter().map(|&c| n * c - sum).collect()
}

/// Inverse of [`to_ambient`] on `L_d`: the coordinates must sum to zero
/// and all differences must be divisible by `d + 1`.
pub fn from_ambient(v: &[i64]) -> Result<WCoefficientVector> {
    let n = v.len() as i64;
    if n == 0 || v.iter().sum::<i64>() != 0 {
        return Err(Error::NotInLattice);
    }
    let min = *v.iter().min().expect("nonempty");
    if v.iter().any(|&x| (x - min) % n != 0) {
        return Err(Error::NotInLattice);
    }
    Ok(WCoefficientVector(
        v.iter().map(|&x| (x - min) / n).collect(),
    ))
}

/// Membership in `Λ_k`, decided through the integer row span of `M_k`.
/// The rows of `M_k` sum to the all-ones vector, so the span already
/// absorbs the relation `Σ w_i = 0`.
pub fn sublattice_contains(a: &WCoefficientVector, k: &KSignature) -> Result<bool> {
    intlin::integer_span_contains(&k.matrix(), a.coeffs())
}

/// The unique fundamental vector in the class of `a` modulo `Λ_k`.
///
/// Entries are first corrected cyclically into `[0, k_i]` by adding
/// multiples of row `i` of `M_k`; then the all-ones vector is subtracted
/// until an entry hits zero.
pub fn reduce_to_fundamental(a: &[i64], k: &KSignature) -> Result<LatticeClass> {
    let n = k.len();
    if a.len() != n {
        return Err(Error::Shape {
            expected: n,
            found: a.len(),
        });
    }
    let k = k.entries();
    let mut a = a.to_vec();
    let mut steps = 0usize;
    loop {
        let mut changed = false;
        for i in 0..n {
            if (0..=k[i]).contains(&a[i]) {
                continue;
            }
            let next = (i + 1) % n;
            let q = a[i].div_euclid(k[i] + 1);
            // subtract q times row i
            a[i] -= q * (k[i] + 1);
            a[next] = q
                .checked_mul(k[next])
                .and_then(|t| a[next].checked_add(t))
                .ok_or(Error::Overflow)?;
            changed = true;
            steps += 1;
            if steps > REDUCTION_GUARD {
                return Err(Error::ReductionFailure);
            }
        }
        if !changed {
            break;
        }
    }
    Ok(LatticeClass {
        rep: WCoefficientVector::new(&a),
    })
}

/// All fundamental vectors of `k` in lexicographic order.
pub fn enumerate_fundamental(k: &KSignature) -> Vec<LatticeClass> {
    let k = k.entries();
    let mut out = Vec::new();
    let mut cur = vec![0i64; k.len()];
    loop {
        if cur.contains(&0) {
            out.push(LatticeClass {
                rep: WCoefficientVector(cur.clone()),
            });
        }
        // odometer, last position fastest
        let mut pos = k.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < k[pos] {
                cur[pos] += 1;
                for c in &mut cur[pos + 1..] {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// Order of `Z^{d+1} / (row span + Z·(1,…,1))`.
pub fn quotient_order_general(rows: &IntMatrix) -> Result<BigInt> {
    let ones = vec![1i64; rows.cols()];
    let aug = rows.with_row(&ones)?;
    let snf = intlin::smith_normal_form(&aug);
    if snf.rank() < rows.cols() {
        return Err(Error::InfiniteQuotient);
    }
    Ok(snf.diagonal().iter().filter(|x| !x.is_zero()).product())
}

/// The translation sublattice used to fold the tiling: either the banded
/// `Λ_k` of a signature, or the span of arbitrary generator rows (plus the
/// all-ones relation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sublattice {
    kind: Kind,
    order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Banded(KSignature),
    General {
        generators: IntMatrix,
        hnf: Vec<Vec<i64>>,
    },
}

impl Sublattice {
    pub fn banded(k: &KSignature) -> Result<Self> {
        let order = k.dk_u64()?;
        if order == 0 {
            return Err(Error::InfiniteQuotient);
        }
        Ok(Sublattice {
            kind: Kind::Banded(k.clone()),
            order,
        })
    }

    /// Sublattice spanned by the rows (as w-coefficient vectors). Reduction
    /// uses the Hermite normal form of the rows augmented with all-ones.
    pub fn general(rows: &IntMatrix) -> Result<Self> {
        if rows.cols() < 2 {
            return Err(Error::Shape {
                expected: 2,
                found: rows.cols(),
            });
        }
        let order = quotient_order_general(rows)?
            .to_u64()
            .ok_or(Error::Overflow)?;
        let aug = rows.with_row(&vec![1; rows.cols()])?;
        let hnf = intlin::hermite_normal_form(&aug)
            .to_i64_rows()
            .ok_or(Error::Overflow)?;
        debug_assert_eq!(hnf.len(), rows.cols());
        Ok(Sublattice {
            kind: Kind::General {
                generators: rows.clone(),
                hnf,
            },
            order,
        })
    }

    /// Number of coordinates, `d + 1`.
    pub fn len(&self) -> usize {
        match &self.kind {
            Kind::Banded(k) => k.len(),
            Kind::General { generators, .. } => generators.cols(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn d(&self) -> usize {
        self.len() - 1
    }

    /// Index of the sublattice, i.e. number of classes.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn signature(&self) -> Option<&KSignature> {
        match &self.kind {
            Kind::Banded(k) => Some(k),
            Kind::General { .. } => None,
        }
    }

    pub fn generators(&self) -> IntMatrix {
        match &self.kind {
            Kind::Banded(k) => k.matrix(),
            Kind::General { generators, .. } => generators.clone(),
        }
    }

    /// True for strict signatures only.
    pub fn is_strict(&self) -> bool {
        matches!(&self.kind, Kind::Banded(k) if !k.is_delta())
    }

    pub fn reduce(&self, a: &[i64]) -> Result<WCoefficientVector> {
        match &self.kind {
            Kind::Banded(k) => Ok(reduce_to_fundamental(a, k)?.rep),
            Kind::General { hnf, .. } => {
                if a.len() != hnf.len() {
                    return Err(Error::Shape {
                        expected: hnf.len(),
                        found: a.len(),
                    });
                }
                let mut v = a.to_vec();
                for (i, row) in hnf.iter().enumerate() {
                    let q = v[i].div_euclid(row[i]);
                    if q != 0 {
                        for (x, r) in v.iter_mut().zip(row) {
                            *x -= q * r;
                        }
                    }
                }
                Ok(WCoefficientVector::new(&v))
            }
        }
    }

    pub fn contains(&self, a: &[i64]) -> Result<bool> {
        let aug = self.generators().with_row(&vec![1; self.len()])?;
        intlin::integer_span_contains(&aug, a)
    }

    /// Canonical representatives of every class, sorted.
    pub fn classes(&self) -> Vec<WCoefficientVector> {
        match &self.kind {
            Kind::Banded(k) => enumerate_fundamental(k)
                .into_iter()
                .map(|c| c.rep)
                .collect(),
            Kind::General { hnf, .. } => {
                let bounds: Vec<i64> = (0..hnf.len()).map(|i| hnf[i][i]).collect();
                let mut out = Vec::with_capacity(self.order as usize);
                let mut cur = vec![0i64; bounds.len()];
                'outer: loop {
                    out.push(self.reduce(&cur).expect("shape matches"));
                    let mut pos = bounds.len();
                    loop {
                        if pos == 0 {
                            break 'outer;
                        }
                        pos -= 1;
                        if cur[pos] + 1 < bounds[pos] {
                            cur[pos] += 1;
                            for c in &mut cur[pos + 1..] {
                                *c = 0;
                            }
                            break;
                        }
                    }
                }
                out.sort();
                out.dedup();
                out
            }
        }
    }

    /// Short description used in exports: the signature, or the matrix rows.
    pub fn describe(&self) -> String {
        match &self.kind {
            Kind::Banded(k) => alloc::format!("k={k}"),
            Kind::General { generators, .. } => alloc::format!("matrix={generators:?}"),
        }
    }
}
