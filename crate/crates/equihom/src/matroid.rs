//! Matroids on labels 1..=n given by their bases, built from explicit
//! basis lists, graphs, or rational vector configurations. Ground sets are
//! limited to 32 elements so subsets fit in machine words.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::perm::Permutation;
use crate::simplicial::{Face, SimplicialComplex};

const MAX_GROUND: usize = 32;

fn mask_of(elements: &[usize]) -> u32 {
    let mut m = 0u32;
    for &e in elements {
        m |= 1 << (e - 1);
    }
    m
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

fn mask_to_face(mask: u32) -> Face {
    Face::new(mask_to_vec(mask))
}

/// A matroid with all bases enumerated as bitmasks over the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
    basis_set: HashSet<u32>,
}

impl Matroid {
    /// Builds from an explicit basis list; the exchange axiom is checked
    /// unless `check` is false.
    pub fn from_bases_checked(n: usize, bases: &[Vec<usize>], check: bool) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::AmbientTooLarge { n });
        }
        if bases.is_empty() {
            return Err(Error::EmptyBasisList);
        }
        let rank = bases[0].len();
        let mut masks = Vec::with_capacity(bases.len());
        for basis in bases {
            for &e in basis {
                if e == 0 || e > n {
                    return Err(Error::VertexOutOfRange { vertex: e, n });
                }
            }
            let mask = mask_of(basis);
            if mask.count_ones() as usize != basis.len() {
                return Err(Error::ExchangeAxiomViolation {
                    detail: format!("repeated element in basis {basis:?}"),
                });
            }
            if basis.len() != rank {
                return Err(Error::ExchangeAxiomViolation {
                    detail: format!("basis {basis:?} has size {} != {rank}", basis.len()),
                });
            }
            masks.push(mask);
        }
        masks.sort_unstable_by(mask_order);
        masks.dedup();
        let basis_set: HashSet<u32> = masks.iter().copied().collect();
        let matroid = Matroid {
            n,
            rank,
            bases: masks,
            basis_set,
        };
        if check {
            matroid.check_exchange()?;
        }
        Ok(matroid)
    }

    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        Self::from_bases_checked(n, bases, true)
    }

    /// Exchange axiom: for bases A, B and a in A \ B there is b in B \ A
    /// with A - a + b again a basis.
    fn check_exchange(&self) -> Result<()> {
        for &a in &self.bases {
            for &b in &self.bases {
                let only_a = a & !b;
                for bit_a in bits(only_a) {
                    let reduced = a & !(1 << bit_a);
                    let found = bits(b & !a)
                        .any(|bit_b| self.basis_set.contains(&(reduced | (1 << bit_b))));
                    if !found {
                        return Err(Error::ExchangeAxiomViolation {
                            detail: format!(
                                "no exchange for {} out of {} into {}",
                                bit_a + 1,
                                mask_to_face(a),
                                mask_to_face(b)
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Graphic matroid of a simple undirected graph on vertices 1..=m;
    /// edges are labeled 1..n in input order.
    pub fn from_graph(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n = edges.len();
        if n == 0 || n > MAX_GROUND {
            return Err(Error::AmbientTooLarge { n });
        }
        let mut seen = HashSet::new();
        for &(u, v) in edges {
            if u == 0 || u > m {
                return Err(Error::VertexOutOfRange { vertex: u, n: m });
            }
            if v == 0 || v > m {
                return Err(Error::VertexOutOfRange { vertex: v, n: m });
            }
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ExchangeAxiomViolation {
                    detail: format!("graph is not simple at edge ({u},{v})"),
                });
            }
        }
        let rank = m - components(m, edges, (1u32 << n) - 1);
        let mut bases = Vec::new();
        for subset in (0..n).combinations(rank) {
            let mask = subset.iter().fold(0u32, |acc, &i| acc | (1 << i));
            if is_forest(m, edges, mask) {
                bases.push(mask);
            }
        }
        bases.sort_unstable_by(mask_order);
        let basis_set = bases.iter().copied().collect();
        Ok(Matroid {
            n,
            rank,
            bases,
            basis_set,
        })
    }

    /// Linear matroid of the column vectors of an exact rational matrix.
    pub fn from_vectors(matrix: &RationalMatrix) -> Result<Self> {
        let n = matrix.cols();
        if n == 0 || n > MAX_GROUND {
            return Err(Error::AmbientTooLarge { n });
        }
        let rank = matrix.rank();
        if rank == 0 {
            return Ok(Matroid {
                n,
                rank: 0,
                bases: vec![0],
                basis_set: HashSet::from([0u32]),
            });
        }
        let mut bases = Vec::new();
        for subset in (0..n).combinations(rank) {
            let mut sub = RationalMatrix::new(matrix.rows(), rank);
            for (j, &col) in subset.iter().enumerate() {
                for (i, v) in matrix.column(col).into_iter().enumerate() {
                    sub.set(i, j, v);
                }
            }
            if sub.rank() == rank {
                bases.push(subset.iter().fold(0u32, |acc, &i| acc | (1 << i)));
            }
        }
        bases.sort_unstable_by(mask_order);
        let basis_set = bases.iter().copied().collect();
        Ok(Matroid {
            n,
            rank,
            bases,
            basis_set,
        })
    }

    /// The uniform matroid U_{r,n}.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::AmbientTooLarge { n });
        }
        let bases: Vec<Vec<usize>> = (1..=n).combinations(r).collect();
        Self::from_bases_checked(n, &bases, false)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&m| mask_to_vec(m)).collect()
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, elements: &[usize]) -> bool {
        self.basis_set.contains(&mask_of(elements))
    }

    fn rank_of_mask(&self, mask: u32) -> usize {
        self.bases
            .iter()
            .map(|&b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, elements: &[usize]) -> Result<usize> {
        for &e in elements {
            if e == 0 || e > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: e,
                    n: self.n,
                });
            }
        }
        Ok(self.rank_of_mask(mask_of(elements)))
    }

    pub fn is_independent(&self, elements: &[usize]) -> Result<bool> {
        let mask = mask_of(elements);
        Ok(self.rank_of(elements)? == mask.count_ones() as usize)
    }

    /// The dual matroid: complements of bases.
    pub fn dual(&self) -> Matroid {
        let full = ((1u64 << self.n) - 1) as u32;
        let mut bases: Vec<u32> = self.bases.iter().map(|&b| full & !b).collect();
        bases.sort_unstable_by(mask_order);
        let basis_set = bases.iter().copied().collect();
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases,
            basis_set,
        }
    }

    /// The complex of independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let mut face_set: HashSet<Face> = HashSet::new();
        let mut stack: Vec<u32> = self.bases.clone();
        let mut seen: HashSet<u32> = stack.iter().copied().collect();
        while let Some(mask) = stack.pop() {
            face_set.insert(mask_to_face(mask));
            for bit in bits(mask) {
                let sub = mask & !(1 << bit);
                if seen.insert(sub) {
                    stack.push(sub);
                }
            }
        }
        face_set.insert(Face::empty());
        SimplicialComplex::from_face_set(self.n, face_set)
    }

    /// The complex of subsets of rank strictly below the matroid rank.
    pub fn non_spanning_complex(&self) -> Result<SimplicialComplex> {
        if self.n > 25 {
            return Err(Error::AmbientTooLarge { n: self.n });
        }
        let mut face_set: HashSet<Face> = HashSet::new();
        for mask in 0..(1u64 << self.n) as u32 {
            if self.rank_of_mask(mask) < self.rank {
                face_set.insert(mask_to_face(mask));
            }
        }
        if self.rank == 0 {
            // Every subset spans; not even the empty face survives.
            return Ok(SimplicialComplex::void_complex(self.n));
        }
        Ok(SimplicialComplex::from_face_set(self.n, face_set))
    }

    /// Two equivalent readings of non-spanning in the dual: the subset has
    /// dual rank below the dual's rank, exactly when its complement is
    /// dependent here. Both are computed and must agree.
    pub fn is_nonspanning_in_dual(&self, elements: &[usize]) -> Result<bool> {
        let dual = self.dual();
        let lhs = dual.rank_of(elements)? < dual.rank();
        let complement: Vec<usize> = (1..=self.n)
            .filter(|e| !elements.contains(e))
            .collect();
        let rhs = !self.is_independent(&complement)?;
        assert_eq!(lhs, rhs, "dual-rank identity must hold");
        Ok(lhs)
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<Vec<usize>> {
        let mut circuits: Vec<u32> = Vec::new();
        for card in 1..=(self.rank + 1).min(self.n) {
            for subset in (0..self.n).combinations(card) {
                let mask = subset.iter().fold(0u32, |acc, &i| acc | (1 << i));
                if self.rank_of_mask(mask) == card {
                    continue; // independent
                }
                let minimal = bits(mask).all(|bit| {
                    let sub = mask & !(1 << bit);
                    self.rank_of_mask(sub) == sub.count_ones() as usize
                });
                if minimal {
                    circuits.push(mask);
                }
            }
        }
        circuits.sort_unstable_by(mask_order);
        circuits.into_iter().map(mask_to_vec).collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of_mask(1 << (e - 1)) == 0
    }

    /// True when there are no loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        for e in 1..=self.n {
            if self.is_loop(e) {
                return false;
            }
        }
        for e in 1..=self.n {
            for f in e + 1..=self.n {
                if self.rank_of_mask((1 << (e - 1)) | (1 << (f - 1))) == 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Removes loops and all but the least element of each parallel class.
    /// Returns the simplified matroid and the label map (None for loops).
    pub fn simplify(&self) -> Result<(Matroid, Vec<Option<usize>>)> {
        let mut map: Vec<Option<usize>> = vec![None; self.n];
        let mut representatives: Vec<usize> = Vec::new();
        for e in 1..=self.n {
            if self.is_loop(e) {
                continue;
            }
            let parallel_rep = representatives.iter().copied().find(|&r| {
                self.rank_of_mask((1 << (r - 1)) | (1 << (e - 1))) == 1
            });
            match parallel_rep {
                Some(r) => {
                    let pos = representatives.iter().position(|&x| x == r).unwrap();
                    map[e - 1] = Some(pos + 1);
                }
                None => {
                    representatives.push(e);
                    map[e - 1] = Some(representatives.len());
                }
            }
        }
        let new_n = representatives.len();
        if new_n == 0 {
            return Err(Error::EmptyBasisList);
        }
        let mut bases = Vec::new();
        for subset in (0..new_n).combinations(self.rank) {
            let original: Vec<usize> = subset.iter().map(|&i| representatives[i]).collect();
            if self.rank_of(&original)? == self.rank {
                bases.push(subset.iter().map(|&i| i + 1).collect::<Vec<_>>());
            }
        }
        let simplified = Matroid::from_bases_checked(new_n, &bases, false)?;
        Ok((simplified, map))
    }

    /// True when the permutation maps bases to bases.
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        self.bases.iter().all(|&b| {
            let image = bits(b).fold(0u32, |acc, bit| acc | (1 << (g.apply(bit + 1) - 1)));
            self.basis_set.contains(&image)
        })
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| mask & (1 << b) != 0)
}

/// Canonical subset order: by the sorted label sequence.
fn mask_order(a: &u32, b: &u32) -> std::cmp::Ordering {
    mask_to_vec(*a).cmp(&mask_to_vec(*b))
}

fn components(m: usize, edges: &[(usize, usize)], edge_mask: u32) -> usize {
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if edge_mask & (1 << i) != 0 {
            let ru = find(&mut parent, u - 1);
            let rv = find(&mut parent, v - 1);
            parent[ru] = rv;
        }
    }
    (0..m).filter(|&x| find(&mut parent, x) == x).count()
}

fn is_forest(m: usize, edges: &[(usize, usize)], edge_mask: u32) -> bool {
    let chosen = edge_mask.count_ones() as usize;
    m - components(m, edges, edge_mask) == chosen
}

/// Edge list of the complete graph on m vertices in lexicographic order.
pub fn complete_graph_edges(m: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in u + 1..=m {
            edges.push((u, v));
        }
    }
    edges
}

/// The permutation of lexicographic edge labels induced by relabeling the
/// vertices of the complete graph on m vertices.
pub fn edge_action(m: usize, g: &Permutation) -> Result<Permutation> {
    if g.degree() != m {
        return Err(Error::DegreeMismatch {
            left: m,
            right: g.degree(),
        });
    }
    let edges = complete_graph_edges(m);
    let position = |u: usize, v: usize| -> usize {
        let (a, b) = (u.min(v), u.max(v));
        edges.iter().position(|&e| e == (a, b)).expect("edge exists")
    };
    let image = edges
        .iter()
        .map(|&(u, v)| position(g.apply(u), g.apply(v)) + 1)
        .collect();
    Permutation::from_image(image)
}

/// All vertex permutations preserving the edge set of a simple graph.
pub fn graph_automorphisms(m: usize, edges: &[(usize, usize)]) -> Vec<Permutation> {
    let edge_set: HashSet<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut out = Vec::new();
    let mut image: Vec<usize> = (1..=m).collect();
    permute_all(&mut image, 0, &mut |perm| {
        let g = Permutation::from_image(perm.to_vec()).expect("bijection");
        let ok = edge_set.iter().all(|&(u, v)| {
            let (a, b) = (g.apply(u).min(g.apply(v)), g.apply(u).max(g.apply(v)));
            edge_set.contains(&(a, b))
        });
        if ok {
            out.push(g);
        }
    });
    out.sort();
    out
}

fn permute_all(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}
