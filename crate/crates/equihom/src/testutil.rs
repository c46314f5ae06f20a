//! Shared generators for the unit tests.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{rat, RationalMatrix};
use crate::matroid::Matroid;
use crate::perm::Permutation;
use crate::simplicial::{Face, SimplicialComplex};

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    for i in (1..image.len()).rev() {
        let j = rng.gen_range(0..=i);
        image.swap(i, j);
    }
    Permutation::from_image(image).unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let mut facets = Vec::new();
    for _ in 0..rng.gen_range(0..=n + 1) {
        let card = rng.gen_range(0..=n);
        let mut facet: Vec<usize> = (1..=n).collect();
        while facet.len() > card {
            let idx = rng.gen_range(0..facet.len());
            facet.remove(idx);
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// Closes the face set under the action of `g`, keeping it a complex.
pub fn symmetrize(k: &SimplicialComplex, g: &Permutation) -> SimplicialComplex {
    let mut face_set: HashSet<Face> = HashSet::new();
    if k.is_void() {
        return k.clone();
    }
    let dim = k.dim().unwrap();
    for d in -1..=dim {
        for f in k.faces_of_dim(d) {
            let mut cur = f.clone();
            loop {
                face_set.insert(cur.clone());
                cur = cur.apply(g);
                if &cur == f {
                    break;
                }
            }
        }
    }
    SimplicialComplex::from_face_set(k.ambient(), face_set)
}

/// A representable matroid of the requested rank from random vectors.
pub fn random_matroid(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Matroid {
    loop {
        let mut m = RationalMatrix::new(r, n);
        for i in 0..r {
            for j in 0..n {
                if rng.gen_bool(0.7) {
                    m.set(i, j, rat(rng.gen_range(-2..=2)));
                }
            }
        }
        let matroid = Matroid::from_vectors(&m).unwrap();
        if matroid.rank() == r {
            return matroid;
        }
    }
}
