//! Shared generators for the integration suites.

use std::collections::HashSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use equihom::matroid::{edge_action, graph_automorphisms, Matroid};
use equihom::perm::FiniteGroup;
use equihom::simplicial::{Face, SimplicialComplex};
use equihom::Permutation;

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

/// Closes the face set under a permutation so it becomes an automorphism.
pub fn symmetrize(k: &SimplicialComplex, g: &Permutation) -> SimplicialComplex {
    if k.is_void() {
        return k.clone();
    }
    let mut face_set: HashSet<Face> = HashSet::new();
    for d in -1..=k.dim().unwrap() {
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
    // Reconstruct through the public constructor: facets of the closure.
    let interim: Vec<Vec<usize>> = face_set
        .iter()
        .map(|f| f.vertices().to_vec())
        .collect();
    SimplicialComplex::from_facets(k.ambient(), &interim).unwrap()
}

/// Low-dimensional random complex: many small facets, which tends to
/// spread homology over several degrees.
pub fn random_sparse_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let mut facets = Vec::new();
    for _ in 0..rng.gen_range(1..=2 * n) {
        let card = rng.gen_range(1..=3.min(n));
        let mut facet: Vec<usize> = (1..=n).collect();
        while facet.len() > card {
            let idx = rng.gen_range(0..facet.len());
            facet.remove(idx);
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

/// A complex with a given nontrivial automorphism and without the full
/// ambient face.
pub fn random_symmetric_complex(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (SimplicialComplex, Permutation) {
    loop {
        let g = random_permutation(rng, n);
        if g.is_identity() {
            continue;
        }
        let base = if rng.gen_bool(0.5) {
            random_sparse_complex(rng, n)
        } else {
            random_complex(rng, n)
        };
        if base.is_void() {
            continue;
        }
        let k = symmetrize(&base, &g);
        if k.contains(&Face::new((1..=n).collect())) {
            continue;
        }
        return (k, g);
    }
}

/// A random simple graph on m vertices with at least one edge.
pub fn random_graph(rng: &mut ChaCha8Rng, m: usize) -> Vec<(usize, usize)> {
    loop {
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in u + 1..=m {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        if !edges.is_empty() {
            return edges;
        }
    }
}

/// The full vertex-induced automorphism group acting on the edge labels.
pub fn vertex_induced_edge_group(m: usize, edges: &[(usize, usize)]) -> Arc<FiniteGroup> {
    let full: Vec<(usize, usize)> = equihom::matroid::complete_graph_edges(m);
    let index_of = |u: usize, v: usize| {
        let key = (u.min(v), u.max(v));
        full.iter().position(|&e| e == key).unwrap()
    };
    let n = edges.len();
    let gens: Vec<Permutation> = graph_automorphisms(m, edges)
        .into_iter()
        .map(|vg| {
            // Restrict the complete-graph edge action to the graph's own
            // edge labels, in input order.
            let full_action = edge_action(m, &vg).unwrap();
            let image: Vec<usize> = edges
                .iter()
                .map(|&(u, v)| {
                    let target_full = full_action.apply(index_of(u, v) + 1) - 1;
                    let (a, b) = full[target_full];
                    edges
                        .iter()
                        .position(|&(x, y)| (x.min(y), x.max(y)) == (a, b))
                        .expect("automorphism preserves the edge set")
                        + 1
                })
                .collect();
            Permutation::from_image(image).unwrap()
        })
        .collect();
    FiniteGroup::generate(n, gens, 1_000_000).unwrap()
}

pub fn fano() -> Matroid {
    let lines: Vec<Vec<usize>> = vec![
        vec![1, 2, 3],
        vec![1, 4, 5],
        vec![1, 6, 7],
        vec![2, 4, 6],
        vec![2, 5, 7],
        vec![3, 4, 7],
        vec![3, 5, 6],
    ];
    let mut bases = Vec::new();
    for a in 1..=7usize {
        for b in a + 1..=7 {
            for c in b + 1..=7 {
                let t = vec![a, b, c];
                if !lines.contains(&t) {
                    bases.push(t);
                }
            }
        }
    }
    Matroid::from_bases(7, &bases).unwrap()
}
