//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Built with `harness = false` so the lines always show.

use std::collections::BTreeSet;
use std::process::ExitCode;

use heawood_core::analysis::{
    self, canonical_cycle, chromatic_number, hamiltonian_alternating, is_bipartite,
    is_hamiltonian_cycle, six_cycles_through, HamiltonianOutcome,
};
use heawood_core::fixtures;
use heawood_core::lattice::{self, KSignature, WCoefficientVector};
use heawood_core::quotient::{
    build_general_quotient, build_heawood_graph, build_torus_complex, dual_graph, fvector_factors,
    fvector_formula, FVector,
};
use heawood_core::symmetry::{
    brute_force_automorphisms, group_closure, standard_generators, verify_exceptional_w,
    BRUTE_FORCE_CAP, GROUP_CAP,
};
use heawood_core::tiling::{
    face_vertices, rotate_partition, OrderedPartition, TilingFace, TilingVertex,
};
use heawood_core::{IntMatrix, Sublattice};
use heawood_kit::export::{export_dot, export_json, parse_json, LabeledGraph};
use heawood_kit::render::{fundamental_tile_scene, to_svg};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

/// Collects failed checks for one criterion.
#[derive(Default)]
struct Checks(Vec<String>);

type Criterion = (&'static str, fn(&mut Checks));

// matrix, order, quotient order, delta, automorphism group order
type FosterCase = ([[i64; 3]; 3], usize, u64, bool, u64);

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn sig(e: &[i64]) -> KSignature {
    KSignature::new(e).unwrap()
}

fn all_signatures(len: usize, max: i64) -> Vec<KSignature> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| (1..=max).map(move |x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    out.iter().map(|e| sig(e)).collect()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn classical_counts(c: &mut Checks) {
    let q = build_heawood_graph(&sig(&[1, 1, 1])).unwrap();
    c.eq(q.vertex_count(), 14, "H_(1,1,1) vertices");
    c.eq(q.edge_count(), 21, "H_(1,1,1) edges");
    c.eq(
        q.torus_complex().unwrap().f_vector(),
        FVector(vec![7, 21, 14]),
        "T_(1,1,1) f-vector",
    );
}

fn small_table(c: &mut Checks) {
    let rows = [
        ([1, 1, 1], 7u64),
        ([1, 2, 1], 10),
        ([2, 2, 2], 19),
        ([2, 2, 3], 24),
        ([3, 2, 1], 18),
        ([3, 1, 2], 18),
    ];
    for (e, dk) in rows {
        let k = sig(&e);
        c.eq(k.dk_u64().unwrap(), dk, &format!("D for {k}"));
        let f = build_torus_complex(&k).unwrap().f_vector();
        c.eq(
            f,
            FVector(vec![dk, 3 * dk, 2 * dk]),
            &format!("f-vector for {k}"),
        );
    }
}

fn factor_rows(c: &mut Checks) {
    let rows: [&[u64]; 4] = [
        &[1, 3, 2],
        &[1, 7, 12, 6],
        &[1, 15, 50, 60, 24],
        &[1, 31, 180, 390, 360, 120],
    ];
    for (d, row) in (2u32..).zip(rows) {
        let got: Vec<u64> = fvector_factors(d)
            .iter()
            .map(|b| u64::try_from(b).unwrap())
            .collect();
        c.eq(got.as_slice(), row, &format!("factors for d = {d}"));
    }
}

fn formula_vs_enumeration(c: &mut Checks) {
    for k in all_signatures(3, 2).into_iter().chain(all_signatures(4, 2)) {
        let q = build_heawood_graph(&k).unwrap();
        let d = k.d() as u64;
        let dk = k.dk_u64().unwrap();
        c.eq(
            q.vertex_count() as u64,
            factorial(d) * dk,
            &format!("vertices of H_({k})"),
        );
        c.eq(
            q.edge_count() as u64,
            factorial(d + 1) / 2 * dk,
            &format!("edges of H_({k})"),
        );
        let t = q.torus_complex().unwrap();
        c.eq(
            t.f_vector(),
            fvector_formula(&k).unwrap(),
            &format!("f-vector of T_({k})"),
        );
    }
}

fn duality(c: &mut Checks) {
    for k in all_signatures(3, 2).into_iter().chain(all_signatures(4, 2)) {
        let q = build_heawood_graph(&k).unwrap();
        let t = q.torus_complex().unwrap();
        c.check(
            &dual_graph(&t) == q.graph(),
            format!("dual graph of T_({k}) differs from H_({k})"),
        );
    }
}

fn automorphisms(c: &mut Checks) {
    let cases: [(&[i64], u64); 5] = [
        (&[1, 1, 1], 336),
        (&[2, 2, 2], 114),
        (&[3, 3, 3], 222),
        (&[1, 1, 1, 1], 120),
        (&[2, 1, 2, 1], 128),
    ];
    for (e, want) in cases {
        let k = sig(e);
        let q = build_heawood_graph(&k).unwrap();
        let brute = brute_force_automorphisms(q.graph(), BRUTE_FORCE_CAP).unwrap();
        c.eq(brute, want, &format!("brute-force order for {k}"));
        let gens = standard_generators(&q).unwrap();
        let generated = group_closure(q.vertex_count(), &gens, GROUP_CAP)
            .unwrap()
            .order() as u64;
        if e == [1, 1, 1] {
            c.eq(generated, 42, "generated order for 1,1,1");
        } else {
            c.eq(generated, brute, &format!("generated vs brute for {k}"));
        }
    }
}

fn exceptional_generator(c: &mut Checks) {
    let q = build_heawood_graph(&sig(&[1, 1, 1])).unwrap();
    c.check(
        verify_exceptional_w(&q),
        "exceptional permutation is not an automorphism",
    );
}

fn hamiltonicity(c: &mut Checks) {
    let k = sig(&[1, 3, 2]);
    let q = build_heawood_graph(&k).unwrap();
    c.eq(q.vertex_count(), 36, "vertices of H_(1,3,2)");
    let one = hamiltonian_alternating(&k, 1).unwrap();
    c.eq(
        one.outcome,
        HamiltonianOutcome::PrematureClosure { length: 12 },
        "i = 1",
    );
    match hamiltonian_alternating(&k, 2).unwrap().outcome {
        HamiltonianOutcome::HamiltonianCycle(cyc) => {
            c.eq(cyc.len(), 36, "i = 2 cycle length");
            c.check(
                is_hamiltonian_cycle(q.graph(), &cyc),
                "i = 2 cycle fails validation",
            );
        }
        other => c.check(
            false,
            format!("i = 2: expected a Hamiltonian cycle of length 36, got {other:?}"),
        ),
    }
}

fn coloring(c: &mut Checks) {
    let skeleton = build_torus_complex(&sig(&[1, 1, 1]))
        .unwrap()
        .skeleton_graph();
    c.eq(skeleton.edge_count(), 21, "skeleton of T_(1,1,1) is K_7");
    c.eq(
        chromatic_number(&skeleton, analysis::CHROMATIC_CAP).value(),
        Some(7),
        "chromatic number of K_7",
    );
    let even: Vec<KSignature> = all_signatures(3, 3)
        .into_iter()
        .chain([sig(&[1, 1, 1, 1, 1]), sig(&[1, 2, 1, 1, 1])])
        .collect();
    for k in even {
        let q = build_heawood_graph(&k).unwrap();
        c.check(
            is_bipartite(q.graph()).is_bipartite(),
            format!("H_({k}) is not bipartite"),
        );
    }
    c.eq(analysis::heawood_number(1), 7, "heawood_number(1)");
    c.eq(analysis::heawood_number(0), 4, "heawood_number(0)");
}

fn klein_quartic(c: &mut Checks) {
    let k = fixtures::klein_quartic();
    c.eq(k.vertex_count(), 24, "vertices");
    c.eq(k.facets().len(), 56, "facets");
    c.eq(k.faces(1).len(), 84, "edges");
    c.eq(k.euler_characteristic(), -4, "Euler characteristic");
    c.eq(
        fixtures::klein_quartic_aut_order().unwrap(),
        336,
        "simplicial automorphisms",
    );
    c.eq(
        fixtures::klein_quartic_dual_aut_order().unwrap(),
        336,
        "dual graph automorphisms",
    );
}

fn foster_census(c: &mut Checks) {
    let cases: [FosterCase; 6] = [
        ([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], 6, 3, true, 72),
        ([[2, -1, 0], [0, 2, -1], [-1, 0, 2]], 14, 7, false, 336),
        ([[2, 0, -1], [0, 2, -1], [-1, -1, 3]], 16, 8, false, 96),
        ([[3, 0, 0], [0, 3, 0], [0, 0, 3]], 18, 9, false, 216),
        ([[2, -2, 0], [0, 2, -2], [-2, 0, 2]], 24, 12, false, 144),
        ([[3, -1, 0], [0, 3, -1], [-1, 0, 3]], 26, 13, false, 78),
    ];
    for (rows, order, quotient, delta, aut) in cases {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let snf = lattice::quotient_order_general(&m).unwrap();
        c.eq(
            snf.to_string(),
            quotient.to_string(),
            &format!("SNF quotient order of {rows:?}"),
        );
        let q = build_general_quotient(&m).unwrap();
        c.eq(q.vertex_count(), order, &format!("order of {rows:?}"));
        c.eq(q.is_delta(), delta, &format!("delta flag of {rows:?}"));
        c.eq(
            q.graph().regular_degree(),
            Some(3),
            &format!("cubic {rows:?}"),
        );
        c.eq(
            brute_force_automorphisms(q.graph(), BRUTE_FORCE_CAP).unwrap(),
            aut,
            &format!("automorphisms of {rows:?}"),
        );
    }
}

fn six_cycles(c: &mut Checks) {
    let q = build_heawood_graph(&sig(&[1, 1, 2])).unwrap();
    let listed: [[[i64; 3]; 6]; 6] = [
        [
            [1, 2, 3],
            [0, 2, 4],
            [0, 1, 5],
            [1, 0, 5],
            [2, 0, 4],
            [2, 1, 3],
        ],
        [
            [1, 2, 3],
            [1, 3, 2],
            [0, 4, 2],
            [-1, 4, 3],
            [-1, 3, 4],
            [0, 2, 4],
        ],
        [
            [1, 2, 3],
            [2, 1, 3],
            [3, 1, 2],
            [3, 2, 1],
            [2, 3, 1],
            [1, 3, 2],
        ],
        [
            [1, 2, 3],
            [2, 1, 3],
            [3, 1, 2],
            [4, 0, 2],
            [4, -1, 3],
            [5, -2, 3],
        ],
        [
            [1, 2, 3],
            [2, 1, 3],
            [2, 0, 4],
            [3, -1, 4],
            [4, -1, 3],
            [5, -2, 3],
        ],
        [
            [1, 2, 3],
            [2, 1, 3],
            [3, 1, 2],
            [4, 0, 2],
            [5, 0, 1],
            [6, -1, 1],
        ],
    ];
    let want: BTreeSet<Vec<usize>> = listed
        .iter()
        .map(|cyc| {
            canonical_cycle(
                &cyc.iter()
                    .map(|x| q.index_of_coords(x).unwrap())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let v = q.index_of_coords(&[1, 2, 3]).unwrap();
    let got: BTreeSet<Vec<usize>> = six_cycles_through(&q, v)
        .unwrap()
        .iter()
        .map(|r| canonical_cycle(&r.vertices))
        .collect();
    c.eq(got.len(), 6, "6-cycles of H_(1,1,2) at 123");
    c.check(
        got == want,
        "6-cycles of H_(1,1,2) differ from the listed sequences",
    );
    let q = build_heawood_graph(&sig(&[2, 2, 2])).unwrap();
    for v in [0, 9, 20, 37] {
        c.eq(
            six_cycles_through(&q, v).unwrap().len(),
            3,
            &format!("6-cycles of H_(2,2,2) at {v}"),
        );
    }
}

fn runner(cases: u32, seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

fn small_signature(max_len: usize) -> impl Strategy<Value = KSignature> {
    prop::collection::vec(1i64..=3, 3..=max_len).prop_map(|e| KSignature::new(&e).unwrap())
}

fn property_suite(c: &mut Checks) {
    let mut record = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            c.check(false, format!("{name}: {e}"));
        }
    };

    let r = runner(128, 1).run(
        &(
            small_signature(6),
            prop::collection::vec(-15i64..=15, 6),
            -3i64..=3,
        ),
        |(k, raw, mult)| {
            let a = &raw[..k.len()];
            let rep = lattice::reduce_to_fundamental(a, &k).unwrap().rep;
            prop_assert_eq!(
                &lattice::reduce_to_fundamental(rep.coeffs(), &k)
                    .unwrap()
                    .rep,
                &rep
            );
            for row in k.matrix().to_i64_rows().unwrap() {
                let moved: Vec<i64> = a.iter().zip(&row).map(|(x, g)| x + mult * g).collect();
                prop_assert_eq!(
                    &lattice::reduce_to_fundamental(&moved, &k).unwrap().rep,
                    &rep
                );
            }
            Ok(())
        },
    );
    record(
        "reduction idempotent and orbit-constant",
        r.map_err(|e| e.to_string()),
    );

    let r = runner(24, 2).run(&small_signature(4), |k| {
        let reps = lattice::enumerate_fundamental(&k);
        prop_assert_eq!(reps.len() as u64, k.dk_u64().unwrap());
        let set: BTreeSet<_> = reps
            .iter()
            .map(|c| lattice::reduce_to_fundamental(c.rep.coeffs(), &k).unwrap())
            .collect();
        prop_assert_eq!(set.len(), reps.len());
        for (i, s) in reps.iter().enumerate().take(12) {
            for t in &reps[i + 1..] {
                prop_assert!(!lattice::sublattice_contains(&t.rep.sub(&s.rep), &k).unwrap());
            }
        }
        Ok(())
    });
    record(
        "fundamental vectors pairwise inequivalent",
        r.map_err(|e| e.to_string()),
    );

    let partition = (3usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            2..=n,
            prop::collection::vec(-3i64..=3, n),
            any::<prop::sample::Index>(),
        )
    });
    let r = runner(128, 3).run(&partition, |(n, parts, off, pick)| {
        let all = OrderedPartition::all_with_blocks(n, parts);
        let p = all[pick.index(all.len())].clone();
        let f = TilingFace::new(p, WCoefficientVector::new(&off));
        prop_assert_eq!(face_vertices(&rotate_partition(&f)), face_vertices(&f));
        Ok(())
    });
    record("rotation lemma", r.map_err(|e| e.to_string()));

    let vertex = (2usize..=4).prop_flat_map(|d| {
        (
            Just((1..=d as i64 + 1).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(-4i64..=4, d + 1),
            0..=d,
        )
    });
    let r = runner(128, 4).run(&vertex, |(perm, a, i)| {
        let shift = lattice::to_ambient(&WCoefficientVector::new(&a));
        let x = TilingVertex::new(
            &perm
                .iter()
                .zip(&shift)
                .map(|(p, s)| p + s)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let w = WCoefficientVector::indicator(perm.len(), &[i]);
        let mut moved: Vec<TilingVertex> = x.neighbors().iter().map(|y| y.translate(&w)).collect();
        moved.sort();
        prop_assert_eq!(x.translate(&w).neighbors(), moved);
        Ok(())
    });
    record(
        "adjacency translation invariant",
        r.map_err(|e| e.to_string()),
    );

    let r = runner(24, 5).run(&small_signature(4), |k| {
        let t = build_torus_complex(&k).unwrap();
        prop_assert_eq!(t.euler_characteristic(), 0);
        Ok(())
    });
    record("Euler characteristic zero", r.map_err(|e| e.to_string()));

    let r = runner(16, 6).run(&small_signature(4), |k| {
        let a = LabeledGraph::from_quotient(&build_heawood_graph(&k).unwrap());
        let b = LabeledGraph::from_quotient(&build_heawood_graph(&k).unwrap());
        prop_assert_eq!(export_dot(&a), export_dot(&b));
        let json = export_json(&a);
        prop_assert_eq!(&json, &export_json(&b));
        prop_assert_eq!(parse_json(&json).unwrap(), a);
        if k.d() == 2 {
            let svg = to_svg(&fundamental_tile_scene(&k, None).unwrap());
            prop_assert_eq!(svg, to_svg(&fundamental_tile_scene(&k, None).unwrap()));
        }
        Ok(())
    });
    record("byte-stable exports", r.map_err(|e| e.to_string()));

    // the banded and general reductions see the same classes
    let r = runner(32, 7).run(
        &(small_signature(4), prop::collection::vec(-9i64..=9, 4)),
        |(k, raw)| {
            let a = &raw[..k.len()];
            let general = Sublattice::general(&k.matrix()).unwrap();
            let banded = Sublattice::banded(&k).unwrap();
            prop_assert_eq!(general.contains(a).unwrap(), banded.contains(a).unwrap());
            Ok(())
        },
    );
    record(
        "banded and general membership agree",
        r.map_err(|e| e.to_string()),
    );
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("classical counts", classical_counts),
        ("small signature table", small_table),
        ("f-vector factor rows", factor_rows),
        ("formula against enumeration", formula_vs_enumeration),
        ("duality", duality),
        ("automorphism groups", automorphisms),
        ("exceptional generator", exceptional_generator),
        ("Hamiltonicity example", hamiltonicity),
        ("coloring", coloring),
        ("Klein quartic", klein_quartic),
        ("Foster census", foster_census),
        ("six 6-cycles", six_cycles),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let mut checks = Checks::default();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&mut checks)));
        if outcome.is_err() {
            checks.0.push("panicked".into());
        }
        if checks.0.is_empty() {
            println!("PASS {:>2} {name}", i + 1);
        } else {
            failed += 1;
            println!("FAIL {:>2} {name}: {}", i + 1, checks.0.join("; "));
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
