use std::collections::BTreeSet;

use heawood_core::lattice::{self, WCoefficientVector};
use heawood_core::tiling::{
    self, canonical_face, face_vertices, is_tiling_vertex, rotate_partition, OrderedPartition,
    TilingFace, TilingVertex,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x711e),
        ..Config::default()
    }
}

/// A random vertex: a permutation of `1..=d+1` translated by a lattice vector.
fn vertex() -> impl Strategy<Value = TilingVertex> {
    (2usize..=4)
        .prop_flat_map(|d| {
            let perm = Just((1..=d as i64 + 1).collect::<Vec<_>>()).prop_shuffle();
            (perm, prop::collection::vec(-4i64..=4, d + 1))
        })
        .prop_map(|(p, a)| {
            let v = lattice::to_ambient(&WCoefficientVector::new(&a));
            TilingVertex::new(&p.iter().zip(&v).map(|(x, y)| x + y).collect::<Vec<_>>()).unwrap()
        })
}

/// Every move `x + e_j − e_i`, filtered by the definition of a vertex.
fn definitional_neighbors(x: &TilingVertex) -> Vec<TilingVertex> {
    let n = x.coords().len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut y = x.coords().to_vec();
            y[i] -= 1;
            y[j] += 1;
            let mut res: Vec<i64> = y.iter().map(|c| c.rem_euclid(n as i64)).collect();
            res.sort_unstable();
            if res == (0..n as i64).collect::<Vec<_>>() {
                out.push(TilingVertex::new(&y).unwrap());
            }
        }
    }
    out.sort();
    out
}

fn is_permutation(v: &[i64]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s == (1..=v.len() as i64).collect::<Vec<_>>()
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn neighbor_rule_matches_definition(x in vertex()) {
        let fast = x.neighbors();
        prop_assert_eq!(fast.len(), x.d() + 1);
        prop_assert_eq!(fast, definitional_neighbors(&x));
    }

    #[test]
    fn adjacency_translation_invariant(x in vertex(), i in 0usize..5) {
        let n = x.coords().len();
        let w = WCoefficientVector::indicator(n, &[i % n]);
        let moved: Vec<TilingVertex> = x.neighbors().iter().map(|y| y.translate(&w)).collect();
        let mut moved = moved;
        moved.sort();
        prop_assert_eq!(x.translate(&w).neighbors(), moved);
    }

    #[test]
    fn tiles_are_exactly_the_permutation_offsets(x in vertex()) {
        let tiles = x.tiles_containing();
        let n = x.coords().len();
        prop_assert_eq!(tiles.len(), n);
        prop_assert_eq!(tiles.iter().collect::<BTreeSet<_>>().len(), n);
        for t in &tiles {
            let v = lattice::to_ambient(t);
            let p: Vec<i64> = x.coords().iter().zip(&v).map(|(a, b)| a - b).collect();
            prop_assert!(is_permutation(&p));
        }
    }

    #[test]
    fn vertex_tile_duality(x in vertex(), raw in prop::collection::vec(-2i64..=2, 5)) {
        let n = x.coords().len();
        let v = WCoefficientVector::new(&raw[..n]);
        let whole = OrderedPartition::new(n, vec![(0..n).collect()]).unwrap();
        let inside = face_vertices(&TilingFace::new(whole, v.clone())).contains(&x);
        prop_assert_eq!(inside, x.tiles_containing().contains(&v));
    }
}

#[test]
fn tiles_oracle_radius_two_ball() {
    for x in [[1, 2, 3], [3, 2, 1], [-1, 4, 3], [4, 0, 2]] {
        let x = TilingVertex::new(&x).unwrap();
        let found: BTreeSet<WCoefficientVector> = x.tiles_containing().into_iter().collect();
        let mut brute = BTreeSet::new();
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let w = WCoefficientVector::new(&[a, b, c]);
                    let v = lattice::to_ambient(&w);
                    let p: Vec<i64> = x.coords().iter().zip(&v).map(|(s, t)| s - t).collect();
                    if is_permutation(&p) {
                        brute.insert(w);
                    }
                }
            }
        }
        assert_eq!(found, brute, "x = {x}");
    }
}

fn all_partitions(n: usize) -> Vec<OrderedPartition> {
    (1..=n)
        .flat_map(|b| OrderedPartition::all_with_blocks(n, b))
        .collect()
}

#[test]
fn rotation_preserves_geometry() {
    for n in 3..=4 {
        for p in all_partitions(n) {
            for off in [vec![0; n], (0..n as i64).collect::<Vec<_>>()] {
                let f = TilingFace::new(p.clone(), WCoefficientVector::new(&off));
                let mut g = f.clone();
                for _ in 0..p.num_blocks() {
                    g = rotate_partition(&g);
                    assert_eq!(
                        face_vertices(&g),
                        face_vertices(&f),
                        "{} rotated",
                        f.partition
                    );
                }
                // a full turn returns the same name
                assert_eq!(g, f);
                let c = canonical_face(&f);
                assert!(c.partition.is_canonical());
                assert_eq!(face_vertices(&c), face_vertices(&f));
            }
        }
    }
}

#[test]
fn canonical_names_are_unique() {
    for n in 3..=4 {
        let canon: Vec<OrderedPartition> = all_partitions(n)
            .into_iter()
            .filter(OrderedPartition::is_canonical)
            .collect();
        // faces within a few translates of the origin
        let offsets: Vec<WCoefficientVector> = (0..3i64.pow(n as u32))
            .map(|mut c| {
                let v: Vec<i64> = (0..n)
                    .map(|_| {
                        let x = c % 3;
                        c /= 3;
                        x
                    })
                    .collect();
                WCoefficientVector::new(&v)
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut seen = std::collections::BTreeMap::new();
        for p in &canon {
            for o in &offsets {
                let f = TilingFace::new(p.clone(), o.clone());
                if let Some(prev) = seen.insert(face_vertices(&f), f.clone()) {
                    panic!(
                        "{} + {} and {} + {} coincide",
                        prev.partition, prev.offset, f.partition, f.offset
                    );
                }
            }
        }
    }
}

#[test]
fn face_vertex_counts_and_dimensions() {
    for p in all_partitions(4) {
        let sizes: usize = p
            .blocks()
            .iter()
            .map(|b| (1..=b.len()).product::<usize>())
            .product();
        let f = TilingFace::new(p.clone(), WCoefficientVector::zero(4));
        let verts = face_vertices(&f);
        assert_eq!(verts.len(), sizes);
        assert!(verts.iter().all(|v| is_tiling_vertex(v.coords())));
        assert_eq!(f.dimension(), 4 - p.num_blocks());
    }
}

#[test]
fn face_vertices_lie_on_the_tile_boundary() {
    use num_rational::Ratio;
    let f = TilingFace::new(
        OrderedPartition::from_one_based(3, &[vec![2, 3], vec![1]]).unwrap(),
        WCoefficientVector::zero(3),
    );
    let verts = face_vertices(&f);
    // midpoint of the edge is on the boundary, the tile center is inside
    let mid: Vec<Ratio<i64>> = (0..3)
        .map(|a| Ratio::new(verts[0].coords()[a] + verts[1].coords()[a], 2))
        .collect();
    let zero = WCoefficientVector::zero(3);
    assert_eq!(
        tiling::permutahedron_membership(&mid, &zero).unwrap(),
        tiling::Membership::Boundary
    );
    let center = vec![Ratio::from(2); 3];
    assert_eq!(
        tiling::permutahedron_membership(&center, &zero).unwrap(),
        tiling::Membership::Interior
    );
    let w1 = WCoefficientVector::indicator(3, &[0]);
    assert_eq!(
        tiling::permutahedron_membership(&center, &w1).unwrap(),
        tiling::Membership::Outside
    );
}
