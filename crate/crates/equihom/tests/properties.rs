//! Property tests for the structural invariants.

use proptest::prelude::*;

use equihom::linalg::{rat, RationalMatrix};
use equihom::simplicial::{p_sign, reorder_sign, Face, SimplicialComplex};
use equihom::Permutation;

fn permutation_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut image: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            image.swap(i, j);
        }
        Permutation::from_image(image).unwrap()
    })
}

fn subset_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(proptest::bool::ANY, n).prop_map(move |picks| {
        (1..=n).zip(picks).filter(|(_, p)| *p).map(|(v, _)| v).collect()
    })
}

proptest! {
    #[test]
    fn sign_identity(n in 1usize..=10) {
        // Drive the inner sampling with proptest-provided randomness.
        let config = (permutation_strategy(n), subset_strategy(n));
        proptest!(|((g, subset) in config)| {
            let sigma = Face::new(subset);
            let complement = sigma.complement(n);
            let lhs = p_sign(&sigma) * g.sign() * reorder_sign(&g, &complement);
            let rhs = reorder_sign(&g, &sigma) * p_sign(&sigma.apply(&g));
            prop_assert_eq!(lhs, rhs);
        });
    }

    #[test]
    fn alexander_dual_is_an_involution(
        n in 1usize..=6,
        raw_facets in proptest::collection::vec(
            proptest::collection::vec(1usize..=6, 0..=4),
            0..=5,
        ),
    ) {
        let facets: Vec<Vec<usize>> = raw_facets
            .into_iter()
            .map(|f| f.into_iter().filter(|&v| v <= n).collect())
            .collect();
        let k = SimplicialComplex::from_facets(n, &facets).unwrap();
        let dd = k.alexander_dual().unwrap().alexander_dual().unwrap();
        prop_assert_eq!(dd, k);
    }

    #[test]
    fn rank_nullity_and_exactness(
        rows in 1usize..=6,
        cols in 1usize..=6,
        entries in proptest::collection::vec(-3i64..=3, 36),
    ) {
        let mut m = RationalMatrix::new(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rat(entries[i * 6 + j]));
            }
        }
        let basis = m.nullspace_basis();
        prop_assert_eq!(m.rank() + basis.len(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in basis {
            let image = m.mul_vec(&v);
            prop_assert!(image.iter().all(num::Zero::is_zero));
        }
    }
}
