//! Acceptance suite: one test per criterion, each printing its own
//! pass line. All comparisons are exact; there are no tolerances.

mod common;

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use equihom::character::{cyclic_character, decompose, induced_character, Character};
use equihom::homology::{
    graded_character, homology_character_exact, homology_character_lefschetz, identity_action,
    Method,
};
use equihom::linalg::rat;
use equihom::matroid::{complete_graph_edges, edge_action, Matroid};
use equihom::partition::{character_table, class_size, factorial, mn_character, Partition};
use equihom::perm::FiniteGroup;
use equihom::pipelines::{braid_vectors, complete_graph};
use equihom::simplicial::{p_sign, reorder_sign, Face};
use equihom::verify::{
    verify_alexander_duality, verify_arrangement_theorem, verify_crosscut_for_matroid,
    verify_main_theorem,
};
use equihom::{Permutation, RationalMatrix};

fn edge_group(m: usize) -> Arc<FiniteGroup> {
    let vertex_group = FiniteGroup::symmetric(m);
    let gens: Vec<Permutation> = vertex_group
        .generators()
        .iter()
        .map(|g| edge_action(m, g).unwrap())
        .collect();
    FiniteGroup::generate(m * (m - 1) / 2, gens, 1_000_000).unwrap()
}

#[test]
fn criterion_1_complete_graph() {
    for (m, expected_dim) in [(3usize, "2"), (4, "6"), (5, "24")] {
        let report = complete_graph(m, Method::Lefschetz).unwrap();
        assert!(report.pass, "complete graph comparison fails for m = {m}");
        assert_eq!(
            report.dimension.as_deref(),
            Some(expected_dim),
            "dimension for m = {m}"
        );
    }
    // Frozen small values, looked up by cycle type.
    let value_at = |report: &equihom::ComparisonReport, label: &str| -> String {
        let idx = report
            .group
            .classes
            .iter()
            .position(|c| c.label == label)
            .unwrap();
        report.rows[0].values[0][idx].clone()
    };
    let r3 = complete_graph(3, Method::Both).unwrap();
    for (label, expected) in [("1,1,1", "2"), ("2,1", "0"), ("3", "-1")] {
        assert_eq!(value_at(&r3, label), expected, "m = 3 class {label}");
    }
    assert_eq!(r3.decomposition.as_ref().unwrap()["2,1"], 1);
    let r4 = complete_graph(4, Method::Both).unwrap();
    for (label, expected) in [
        ("1,1,1,1", "6"),
        ("2,1,1", "0"),
        ("2,2", "-2"),
        ("3,1", "0"),
        ("4", "0"),
    ] {
        assert_eq!(value_at(&r4, label), expected, "m = 4 class {label}");
    }
    println!("criterion 1: PASS (complete graph m = 3, 4, 5; dimensions 2, 6, 24)");
}

/// Extended-budget run; exercise with `cargo test -- --ignored`.
#[test]
#[ignore = "slow: complete graph on 6 vertices"]
fn criterion_1_complete_graph_m6_slow() {
    let report = complete_graph(6, Method::Lefschetz).unwrap();
    assert!(report.pass);
    assert_eq!(report.dimension.as_deref(), Some("120"));
    println!("criterion 1 (slow): PASS (complete graph m = 6; dimension 120)");
}

#[test]
fn criterion_2_main_theorem() {
    // Named cases.
    let k3 = Matroid::from_graph(3, &complete_graph_edges(3)).unwrap();
    verify_main_theorem(&k3, &edge_group(3), Method::Both).unwrap();

    let k4 = Matroid::from_graph(4, &complete_graph_edges(4)).unwrap();
    verify_main_theorem(&k4, &edge_group(4), Method::Both).unwrap();

    let u24 = Matroid::uniform(2, 4).unwrap();
    verify_main_theorem(&u24, &FiniteGroup::symmetric(4), Method::Both).unwrap();

    let u35 = Matroid::uniform(3, 5).unwrap();
    verify_main_theorem(&u35, &FiniteGroup::symmetric(5), Method::Both).unwrap();

    let f7 = common::fano();
    let report = verify_main_theorem(&f7, &FiniteGroup::trivial(7), Method::Both).unwrap();
    assert_eq!(report.support, vec![1]);
    assert_eq!(report.rows[0].values[0][0], "8", "Fano Betti number");
    assert_eq!(report.mobius.as_deref(), Some("-8"));

    // Twenty random graphic matroids with their vertex-induced groups.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..20 {
        let m = rng.gen_range(2..=5);
        let edges = common::random_graph(&mut rng, m);
        let matroid = Matroid::from_graph(m, &edges).unwrap();
        let group = common::vertex_induced_edge_group(m, &edges);
        verify_main_theorem(&matroid, &group, Method::Both)
            .unwrap_or_else(|e| panic!("case {case} ({m} vertices, {edges:?}): {e}"));
    }
    println!("criterion 2: PASS (main comparison on named cases and 20 random graphic matroids)");
}

#[test]
fn criterion_3_method_agreement() {
    // The named criterion-2 cases rerun with Both inside criterion 2; here
    // the two methods are compared on random matroid complexes.
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut compared = 0;
    while compared < 50 {
        let m = rng.gen_range(2..=5);
        let edges = common::random_graph(&mut rng, m);
        let matroid = Matroid::from_graph(m, &edges).unwrap();
        let group = common::vertex_induced_edge_group(m, &edges);
        let complexes = [
            matroid.independence_complex(),
            matroid.dual().independence_complex(),
            matroid.non_spanning_complex().unwrap(),
        ];
        for k in complexes {
            if k.is_void() {
                continue;
            }
            let exact = homology_character_exact(&k, &group, &identity_action).unwrap();
            let support = exact.support();
            if support.len() != 1 {
                continue;
            }
            let fast =
                homology_character_lefschetz(&k, &group, &identity_action, support[0]).unwrap();
            assert_eq!(fast, exact.character_at(support[0]), "methods must agree");
            compared += 1;
        }
    }
    println!("criterion 3: PASS ({compared} concentrated random matroid complexes, exact = trace method)");
}

#[test]
fn criterion_4_sign_lemma_and_chain_commutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = common::random_permutation(&mut rng, n);
        let subset: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        let sigma = Face::new(subset);
        let complement = sigma.complement(n);
        let lhs = p_sign(&sigma) * g.sign() * reorder_sign(&g, &complement);
        let rhs = reorder_sign(&g, &sigma) * p_sign(&sigma.apply(&g));
        assert_eq!(lhs, rhs, "sign identity for g = {g}, sigma = {sigma}");
    }

    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(2..=7);
        let base = common::random_complex(&mut rng, n);
        if base.is_void() {
            continue;
        }
        let g = common::random_permutation(&mut rng, n);
        let k = common::symmetrize(&base, &g);
        let i = rng.gen_range(0..=(k.dim().unwrap().max(0) + 1));
        assert!(
            k.chain_map_commutes(&g, i).unwrap(),
            "chain commutation for n = {n}, g = {g}, i = {i}"
        );
        checked += 1;
    }
    println!("criterion 4: PASS (1000 sign-identity instances, 200 chain commutations)");
}

#[test]
fn criterion_5_alexander_duality_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut spread_homology = 0;
    for case in 0..50 {
        let n = rng.gen_range(3..=8);
        let (k, g) = common::random_symmetric_complex(&mut rng, n);
        let group = FiniteGroup::generate(n, vec![g], 1_000_000).unwrap();
        assert!(group.order() > 1, "automorphism subgroup is nontrivial");
        let report = verify_alexander_duality(&k, &group, Method::Exact)
            .unwrap_or_else(|e| panic!("case {case}: {e}"));
        if report.rows.len() > 1 {
            spread_homology += 1;
        }
    }
    assert!(
        spread_homology > 0,
        "the sample must include non-concentrated homology"
    );
    println!(
        "criterion 5: PASS (50 random complexes, {spread_homology} with homology in several degrees)"
    );
}

#[test]
fn criterion_6_crosscut_and_barycentric() {
    let free3 = Matroid::from_bases(3, &[vec![1, 2, 3]]).unwrap();
    verify_crosscut_for_matroid(&free3, &FiniteGroup::symmetric(3), Method::Both).unwrap();
    let free4 = Matroid::from_bases(4, &[vec![1, 2, 3, 4]]).unwrap();
    verify_crosscut_for_matroid(&free4, &FiniteGroup::symmetric(4), Method::Both).unwrap();

    let k3 = Matroid::from_graph(3, &complete_graph_edges(3)).unwrap();
    verify_crosscut_for_matroid(&k3, &edge_group(3), Method::Both).unwrap();
    let k4 = Matroid::from_graph(4, &complete_graph_edges(4)).unwrap();
    verify_crosscut_for_matroid(&k4, &edge_group(4), Method::Both).unwrap();

    let u24 = Matroid::uniform(2, 4).unwrap();
    verify_crosscut_for_matroid(&u24, &FiniteGroup::symmetric(4), Method::Both).unwrap();

    let f7 = common::fano();
    verify_crosscut_for_matroid(&f7, &FiniteGroup::trivial(7), Method::Both).unwrap();

    // Barycentric invariance on random symmetric complexes.
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    for case in 0..30 {
        let n = rng.gen_range(2..=5);
        let base = common::random_complex(&mut rng, n);
        if base.is_void() {
            continue;
        }
        let g = common::random_permutation(&mut rng, n);
        let k = common::symmetrize(&base, &g);
        let group = FiniteGroup::generate(n, vec![g], 1_000_000).unwrap();
        let sd = k.barycentric_subdivision();
        let original = homology_character_exact(&k, &group, &identity_action).unwrap();
        let action = |p: &Permutation| sd.extend_automorphism(p);
        let subdivided = homology_character_exact(&sd.complex, &group, &action).unwrap();
        assert_eq!(original, subdivided, "case {case}");
    }
    println!("criterion 6: PASS (atom cross-cuts of B3, B4, Pi3, Pi4, L(U24), L(F7); 30 subdivisions)");
}

#[test]
fn criterion_7_arrangement() {
    for (m, expected) in [(3usize, 2i64), (4, 6)] {
        let vectors = braid_vectors(m);
        let report =
            verify_arrangement_theorem(&vectors, &edge_group(m), Method::Both).unwrap();
        assert_eq!(report.dimension.as_deref(), Some(expected.to_string().as_str()));
        let mobius: i64 = report.mobius.as_deref().unwrap().parse().unwrap();
        assert_eq!(mobius.abs(), expected);
    }
    // A generic arrangement of 4 lines in the plane.
    let mut lines = RationalMatrix::new(2, 4);
    for (j, (a, b)) in [(1, 0), (0, 1), (1, 1), (1, -1)].into_iter().enumerate() {
        lines.set(0, j, rat(a));
        lines.set(1, j, rat(b));
    }
    let report =
        verify_arrangement_theorem(&lines, &FiniteGroup::symmetric(4), Method::Both).unwrap();
    assert_eq!(report.dimension.as_deref(), Some("3"));
    let mobius: i64 = report.mobius.as_deref().unwrap().parse().unwrap();
    assert_eq!(mobius.abs(), 3);
    println!("criterion 7: PASS (braid m = 3, 4 and four generic lines; dimensions 2, 6, 3)");
}

#[test]
fn criterion_8_character_theory() {
    // First orthogonality for all symmetric groups up to degree 6.
    for m in 1..=6usize {
        let table = character_table(m).unwrap();
        let order = factorial(m).unwrap() as i64;
        let count = table.partitions.len();
        for a in 0..count {
            for b in 0..count {
                let mut acc: i64 = 0;
                for c in 0..count {
                    acc += table.class_sizes[c] as i64 * table.values[a][c] * table.values[b][c];
                }
                let expected = if a == b { order } else { 0 };
                assert_eq!(acc, expected, "m = {m}, rows {a}, {b}");
            }
        }
    }

    // decompose(ind_{C4}^{S4}(i)) has nonnegative integer multiplicities
    // summing with dimensions to 6.
    let s4 = FiniteGroup::symmetric(4);
    let (c4, xi) = cyclic_character(4, 1);
    let ind = induced_character(&s4, &c4, &xi).unwrap();
    let decomposition = decompose(&ind).unwrap();
    let ones = Partition::new(vec![1; 4]);
    let total: i64 = decomposition
        .iter()
        .map(|(lambda, mult)| *mult as i64 * mn_character(lambda, &ones).unwrap())
        .sum();
    assert_eq!(total, 6);

    // Frobenius reciprocity on random subgroups and characters.
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut checked = 0;
    while checked < 20 {
        let m = rng.gen_range(3..=5);
        let big = FiniteGroup::symmetric(m);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=2))
            .map(|_| common::random_permutation(&mut rng, m))
            .collect();
        let sub = FiniteGroup::generate(m, gens, 1_000_000).unwrap();
        let xi = match rng.gen_range(0..4) {
            0 => Character::trivial(sub.clone()),
            1 => Character::sign_character(sub.clone()),
            2 => Character::natural_permutation(sub.clone()),
            _ => Character::regular(sub.clone()),
        };
        let table = character_table(m).unwrap();
        let lambda = &table.partitions[rng.gen_range(0..table.partitions.len())];
        let chi_values: Vec<i64> = (0..big.classes().len())
            .map(|c| mn_character(lambda, &big.class_rep(c).cycle_type()).unwrap())
            .collect();
        let chi = Character::from_integers(big.clone(), chi_values);
        let lhs = induced_character(&big, &sub, &xi)
            .unwrap()
            .inner_product(&chi)
            .unwrap();
        let rhs = xi.inner_product(&chi.restricted_to(&sub).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "reciprocity for m = {m}, lambda = {lambda}");
        checked += 1;
    }

    // Cyclic-to-symmetric induction from the primitive character yields
    // rational integers for every degree in table range.
    for m in 2..=6usize {
        let big = FiniteGroup::symmetric(m);
        let (cm, xi) = cyclic_character(m, 1);
        let ind = induced_character(&big, &cm, &xi).unwrap();
        assert!(ind.values().iter().all(|v| v.to_integer().is_some()));
    }
    println!("criterion 8: PASS (orthogonality m <= 6, induced decomposition, 20 reciprocity checks)");
}
