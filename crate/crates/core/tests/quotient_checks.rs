use heawood_core::lattice::{KSignature, WCoefficientVector};
use heawood_core::quotient::{
    build_general_quotient, build_heawood_graph, dual_graph, face_census, fvector_factors,
    fvector_formula, vertex_key, FVector,
};
use heawood_core::tiling::TilingVertex;
use heawood_core::{IntMatrix, Sublattice};
use num_bigint::BigInt;

/// Every signature with `len` entries in `1..=max`.
fn signatures(len: usize, max: i64) -> Vec<KSignature> {
    let total = (max as usize).pow(len as u32);
    (0..total)
        .map(|mut c| {
            let e: Vec<i64> = (0..len)
                .map(|_| {
                    let x = (c % max as usize) as i64 + 1;
                    c /= max as usize;
                    x
                })
                .collect();
            KSignature::new(&e).unwrap()
        })
        .collect()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn bfs_counts_match_closed_forms() {
    for k in signatures(3, 3).into_iter().chain(signatures(4, 3)) {
        let d = k.d() as u64;
        let dk = k.dk_u64().unwrap();
        let q = build_heawood_graph(&k).unwrap();
        assert_eq!(q.vertex_count() as u64, factorial(d) * dk, "k = {k}");
        assert_eq!(q.edge_count() as u64, factorial(d + 1) / 2 * dk, "k = {k}");
        assert_eq!(q.graph().regular_degree(), Some(k.d() + 1), "k = {k}");
        assert!(q.graph().is_connected());
        assert!(!q.is_delta());
    }
}

#[test]
fn enumerated_fvector_matches_formula() {
    for k in signatures(3, 2).into_iter().chain(signatures(4, 2)) {
        let t = build_heawood_graph(&k).unwrap().torus_complex().unwrap();
        let f = t.f_vector();
        assert_eq!(f, fvector_formula(&k).unwrap(), "k = {k}");
        assert_eq!(t.euler_characteristic(), 0, "k = {k}");
        // closed manifold: every ridge lies in exactly two facets
        assert!(t.ridge_degrees().values().all(|&m| m == 2), "k = {k}");
    }
}

#[test]
fn dual_graph_is_the_heawood_graph() {
    for k in signatures(3, 2).into_iter().chain(signatures(4, 2)) {
        let q = build_heawood_graph(&k).unwrap();
        let t = q.torus_complex().unwrap();
        assert_eq!(&dual_graph(&t), q.graph(), "k = {k}");
    }
}

#[test]
fn euler_characteristic_vanishes_in_dimension_four() {
    for e in [[1, 1, 1, 1, 1], [1, 2, 1, 1, 1]] {
        let k = KSignature::new(&e).unwrap();
        let t = build_heawood_graph(&k).unwrap().torus_complex().unwrap();
        assert_eq!(t.f_vector(), fvector_formula(&k).unwrap());
        assert_eq!(t.euler_characteristic(), 0);
    }
}

#[test]
fn canonical_face_census() {
    for e in [
        [1, 1, 1].as_slice(),
        &[2, 3, 2],
        &[1, 1, 1, 1],
        &[2, 1, 2, 1],
    ] {
        let k = KSignature::new(e).unwrap();
        let q = build_heawood_graph(&k).unwrap();
        let census = face_census(&q).unwrap();
        assert_eq!(FVector(census), fvector_formula(&k).unwrap(), "k = {k}");
    }
}

#[test]
fn factor_rows() {
    let rows: [&[i64]; 4] = [
        &[1, 3, 2],
        &[1, 7, 12, 6],
        &[1, 15, 50, 60, 24],
        &[1, 31, 180, 390, 360, 120],
    ];
    for (d, row) in (2..).zip(rows) {
        let expected: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(fvector_factors(d), expected);
    }
}

#[test]
fn table_of_small_signatures() {
    for (e, dk) in [
        ([1, 1, 1], 7u64),
        ([1, 2, 1], 10),
        ([2, 2, 2], 19),
        ([2, 2, 3], 24),
        ([3, 2, 1], 18),
        ([3, 1, 2], 18),
    ] {
        let k = KSignature::new(&e).unwrap();
        assert_eq!(k.dk_u64().unwrap(), dk);
        let t = build_heawood_graph(&k).unwrap().torus_complex().unwrap();
        assert_eq!(t.f_vector(), FVector(vec![dk, 3 * dk, 2 * dk]));
    }
}

#[test]
fn keys_identify_translates() {
    let k = KSignature::new(&[1, 1, 1]).unwrap();
    let s = Sublattice::banded(&k).unwrap();
    let seed = TilingVertex::seed(2);
    for row in k.matrix().to_i64_rows().unwrap() {
        let g = WCoefficientVector::new(&row);
        assert_eq!(vertex_key(&seed.translate(&g), &s).unwrap(), seed);
        assert_eq!(vertex_key(&seed.translate(&g.neg()), &s).unwrap(), seed);
    }
    let w1 = WCoefficientVector::indicator(3, &[0]);
    assert_ne!(vertex_key(&seed.translate(&w1), &s).unwrap(), seed);
    // every vertex of a far translate resolves to a stored key
    let q = build_heawood_graph(&k).unwrap();
    let far = WCoefficientVector::new(&[17, -9, 4]);
    for v in q.vertices() {
        assert!(q.index_of(&v.translate(&far)).is_ok());
    }
}

#[test]
fn foster_census_orders() {
    let cases: [([[i64; 3]; 3], usize, bool); 6] = [
        ([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], 6, true),
        ([[2, -1, 0], [0, 2, -1], [-1, 0, 2]], 14, false),
        ([[2, 0, -1], [0, 2, -1], [-1, -1, 3]], 16, false),
        ([[3, 0, 0], [0, 3, 0], [0, 0, 3]], 18, false),
        ([[2, -2, 0], [0, 2, -2], [-2, 0, 2]], 24, false),
        ([[3, -1, 0], [0, 3, -1], [-1, 0, 3]], 26, false),
    ];
    for (rows, order, delta) in cases {
        let q = build_general_quotient(&IntMatrix::from_rows(&rows).unwrap()).unwrap();
        assert_eq!(q.vertex_count(), order, "{rows:?}");
        assert_eq!(q.graph().regular_degree(), Some(3), "{rows:?}");
        assert_eq!(q.is_delta(), delta, "{rows:?}");
    }
}

#[test]
fn delta_signature_is_flagged() {
    let k = KSignature::delta(&[1, 0, 1]).unwrap();
    let q = build_heawood_graph(&k).unwrap();
    assert!(q.is_delta());
    assert_eq!(q.vertex_count() as u64, 2 * k.dk_u64().unwrap());
}
