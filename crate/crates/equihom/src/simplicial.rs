//! Abstract simplicial complexes on labels 1..=n: construction, the
//! orientation sign functions, combinatorial duals, boundary matrices,
//! induced chain maps, and barycentric subdivision.
//!
//! A complex always carries its ambient label count `n`; labels may be
//! unused by the faces. The complex containing only the empty face and
//! the void complex (no faces at all) are distinct values.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{rat, RationalMatrix};
use crate::perm::Permutation;

/// Largest ambient size for operations that enumerate all subsets.
const MAX_ENUMERATION_AMBIENT: usize = 25;

/// A face: strictly increasing 1-based labels. The empty face is `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn without(&self, v: usize) -> Face {
        Face(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn with(&self, v: usize) -> Face {
        let mut vs = self.0.clone();
        match vs.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => vs.insert(pos, v),
        }
        Face(vs)
    }

    pub fn complement(&self, n: usize) -> Face {
        Face((1..=n).filter(|v| !self.contains(*v)).collect())
    }

    /// Image under a permutation, re-sorted.
    pub fn apply(&self, g: &Permutation) -> Face {
        Face::new(self.0.iter().map(|&v| g.apply(v)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Orientation sign of vertex `j` inside face `sigma`: (-1)^(i-1) when `j`
/// is the i-th smallest element.
pub fn sign_pos(j: usize, sigma: &Face) -> Result<i64> {
    match sigma.vertices().binary_search(&j) {
        Ok(pos) => Ok(if pos % 2 == 0 { 1 } else { -1 }),
        Err(_) => Err(Error::ElementNotInFace { element: j }),
    }
}

/// Product over the face of (-1)^(j-1); +1 on the empty face.
pub fn p_sign(sigma: &Face) -> i64 {
    let evens = sigma.iter().filter(|v| v % 2 == 0).count();
    if evens % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation sorting the image sequence of the face.
pub fn reorder_sign(g: &Permutation, sigma: &Face) -> i64 {
    let image: Vec<usize> = sigma.iter().map(|v| g.apply(v)).collect();
    let mut inversions = 0usize;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A finite abstract simplicial complex with faces grouped by cardinality
/// and kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// faces_by_card[c] = faces of cardinality c, sorted; index 0 holds
    /// the empty face exactly when the complex is not void.
    faces_by_card: Vec<Vec<Face>>,
    face_set: HashSet<Face>,
    void: bool,
}

impl SimplicialComplex {
    /// The void complex: no faces at all, not even the empty one.
    pub fn void_complex(n: usize) -> Self {
        SimplicialComplex {
            n,
            faces_by_card: Vec::new(),
            face_set: HashSet::new(),
            void: true,
        }
    }

    /// Downward closure of the given facets. An empty facet list gives the
    /// complex whose only face is the empty face.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut face_set: HashSet<Face> = HashSet::new();
        face_set.insert(Face::empty());
        for facet in facets {
            for &v in facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let face = Face::new(facet.clone());
            if face.card() > MAX_ENUMERATION_AMBIENT {
                return Err(Error::AmbientTooLarge { n: face.card() });
            }
            for k in 0..=face.card() {
                for sub in face.vertices().iter().copied().combinations(k) {
                    face_set.insert(Face(sub));
                }
            }
        }
        Ok(Self::from_face_set(n, face_set))
    }

    /// Builds from an explicit downward-closed face set.
    pub(crate) fn from_face_set(n: usize, face_set: HashSet<Face>) -> Self {
        if face_set.is_empty() {
            return Self::void_complex(n);
        }
        let max_card = face_set.iter().map(Face::card).max().unwrap_or(0);
        let mut faces_by_card: Vec<Vec<Face>> = vec![Vec::new(); max_card + 1];
        for face in &face_set {
            faces_by_card[face.card()].push(face.clone());
        }
        for faces in faces_by_card.iter_mut() {
            faces.sort();
        }
        SimplicialComplex {
            n,
            faces_by_card,
            face_set,
            void: false,
        }
    }

    /// The full simplex 2^V on n labels.
    pub fn full_simplex(n: usize) -> Result<Self> {
        if n > MAX_ENUMERATION_AMBIENT {
            return Err(Error::AmbientTooLarge { n });
        }
        SimplicialComplex::from_facets(n, &[(1..=n).collect()])
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// None for the void complex; -1 for the complex {empty face}.
    pub fn dim(&self) -> Option<i32> {
        if self.void {
            return None;
        }
        let top = self
            .faces_by_card
            .iter()
            .rposition(|faces| !faces.is_empty())
            .unwrap_or(0);
        Some(top as i32 - 1)
    }

    /// Faces of the given cardinality in canonical order.
    pub fn faces_of_card(&self, card: usize) -> &[Face] {
        self.faces_by_card
            .get(card)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Faces of the given dimension (card = dim + 1) in canonical order.
    pub fn faces_of_dim(&self, dim: i32) -> &[Face] {
        if dim < -1 {
            return &[];
        }
        self.faces_of_card((dim + 1) as usize)
    }

    pub fn face_count(&self) -> usize {
        self.face_set.len()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.face_set.contains(face)
    }

    /// Position of a face within its cardinality block.
    pub fn face_index(&self, face: &Face) -> Option<usize> {
        self.faces_by_card
            .get(face.card())?
            .binary_search(face)
            .ok()
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for faces in &self.faces_by_card {
            for face in faces {
                let has_superset = face
                    .complement(self.n)
                    .iter()
                    .any(|v| self.face_set.contains(&face.with(v)));
                if !has_superset {
                    out.push(face.clone());
                }
            }
        }
        out
    }

    /// Labels that actually appear in some face.
    pub fn vertices_present(&self) -> Vec<usize> {
        self.faces_of_card(1).iter().map(|f| f.vertices()[0]).collect()
    }

    /// True when `g` maps faces to faces bijectively.
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.n
            && self
                .face_set
                .iter()
                .all(|face| self.face_set.contains(&face.apply(g)))
    }

    /// The complex of all subsets whose complement is not a face. Maps the
    /// full simplex to the void complex and conversely.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.n > MAX_ENUMERATION_AMBIENT {
            return Err(Error::AmbientTooLarge { n: self.n });
        }
        let mut face_set = HashSet::new();
        for card in 0..=self.n {
            for subset in (1..=self.n).combinations(card) {
                let face = Face(subset);
                if !self.face_set.contains(&face.complement(self.n)) {
                    face_set.insert(face);
                }
            }
        }
        Ok(Self::from_face_set(self.n, face_set))
    }

    /// Matrix of the boundary map from dimension `i` to dimension `i - 1`
    /// in the canonical bases; degree 0 is the augmentation row onto the
    /// empty face.
    pub fn boundary_matrix(&self, i: i32) -> RationalMatrix {
        assert!(i >= 0, "boundary degree must be nonnegative");
        let cols = self.faces_of_dim(i);
        let rows = self.faces_of_dim(i - 1);
        let mut m = RationalMatrix::new(rows.len(), cols.len());
        for (j, sigma) in cols.iter().enumerate() {
            for k in sigma.iter() {
                let tau = sigma.without(k);
                let row = self
                    .face_index(&tau)
                    .expect("complex is downward closed");
                let s = sign_pos(k, sigma).expect("k is in sigma");
                m.set(row, j, rat(s));
            }
        }
        m
    }

    /// Boundary on the span of the non-faces: same signs, but only terms
    /// that stay outside the complex.
    pub fn relative_boundary_matrix(&self, i: i32) -> Result<RationalMatrix> {
        let cols = self.non_faces_of_dim(i)?;
        let rows = self.non_faces_of_dim(i - 1)?;
        let mut m = RationalMatrix::new(rows.len(), cols.len());
        for (j, sigma) in cols.iter().enumerate() {
            for k in sigma.iter() {
                let tau = sigma.without(k);
                if let Ok(row) = rows.binary_search(&tau) {
                    let s = sign_pos(k, sigma).expect("k is in sigma");
                    m.set(row, j, rat(s));
                }
            }
        }
        Ok(m)
    }

    /// Non-faces of a given dimension in lexicographic order.
    pub fn non_faces_of_dim(&self, dim: i32) -> Result<Vec<Face>> {
        if self.n > MAX_ENUMERATION_AMBIENT {
            return Err(Error::AmbientTooLarge { n: self.n });
        }
        if dim < -1 || dim + 1 > self.n as i32 {
            return Ok(Vec::new());
        }
        let card = (dim + 1) as usize;
        let mut out: Vec<Face> = (1..=self.n)
            .combinations(card)
            .map(Face)
            .filter(|f| !self.face_set.contains(f))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Signed permutation matrix of the action of `g` on the dimension-i
    /// chain space: column sigma has `reorder_sign(g, sigma)` in the row
    /// of the image face.
    pub fn induced_chain_map(&self, g: &Permutation, i: i32) -> Result<RationalMatrix> {
        if !self.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
        let faces = self.faces_of_dim(i);
        let mut m = RationalMatrix::new(faces.len(), faces.len());
        for (j, sigma) in faces.iter().enumerate() {
            let image = sigma.apply(g);
            let row = self.face_index(&image).expect("automorphism image");
            m.set(row, j, rat(reorder_sign(g, sigma)));
        }
        Ok(m)
    }

    /// Checks the chain-level commutation identities for an automorphism:
    /// the boundary commutes with the induced map, the complementing
    /// isomorphism onto the dual cochain complex commutes with the
    /// relative boundary, and the sign-twisted dual action commutes with
    /// the complementing isomorphism.
    pub fn chain_map_commutes(&self, g: &Permutation, i: i32) -> Result<bool> {
        if !self.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
        if i >= 0 {
            let d = self.boundary_matrix(i);
            let gi = self.induced_chain_map(g, i)?;
            let gprev = self.induced_chain_map(g, i - 1)?;
            if d.mul(&gi) != gprev.mul(&d) {
                return Ok(false);
            }
        }

        let n = self.n as i32;
        let dual = self.alexander_dual()?;

        // phi_i from non-faces of dimension i to dual faces of dimension
        // n - i - 2, as the signed complement map.
        let phi = |dim: i32| -> Result<RationalMatrix> {
            let cols = self.non_faces_of_dim(dim)?;
            let rows = dual.faces_of_dim(n - dim - 2);
            let mut m = RationalMatrix::new(rows.len(), cols.len());
            for (j, sigma) in cols.iter().enumerate() {
                let cof = sigma.complement(self.n);
                let row = dual.face_index(&cof).expect("complement is a dual face");
                m.set(row, j, rat(p_sign(sigma)));
            }
            Ok(m)
        };

        // Coboundary of the dual complex from dimension j to j + 1 is the
        // transpose of its boundary in dimension j + 1.
        let phi_i = phi(i)?;
        let phi_prev = phi(i - 1)?;
        let d_rel = self.relative_boundary_matrix(i)?;
        let delta = if n - i - 1 >= 0 {
            dual.boundary_matrix(n - i - 1).transpose()
        } else {
            RationalMatrix::new(0, dual.faces_of_dim(n - i - 2).len())
        };
        if phi_prev.mul(&d_rel) != delta.mul(&phi_i) {
            return Ok(false);
        }

        // Signed dual action against the relative action through phi.
        let rho_rel = {
            let faces = self.non_faces_of_dim(i)?;
            let mut m = RationalMatrix::new(faces.len(), faces.len());
            for (j, sigma) in faces.iter().enumerate() {
                let image = sigma.apply(g);
                let row = faces.binary_search(&image).map_err(|_| Error::NotAnAutomorphism)?;
                m.set(row, j, rat(reorder_sign(g, sigma)));
            }
            m
        };
        let rho_dual = {
            let faces = dual.faces_of_dim(n - i - 2);
            let mut m = RationalMatrix::new(faces.len(), faces.len());
            for (j, tau) in faces.iter().enumerate() {
                let image = tau.apply(g);
                let row = dual.face_index(&image).ok_or(Error::NotAnAutomorphism)?;
                m.set(row, j, rat(g.sign() * reorder_sign(g, tau)));
            }
            m
        };
        Ok(rho_dual.mul(&phi_i) == phi_i.mul(&rho_rel))
    }

    /// First barycentric subdivision; the new vertex labels follow the
    /// lexicographic order of the originating faces, so automorphisms
    /// extend canonically.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let mut originals: Vec<Face> = self
            .face_set
            .iter()
            .filter(|f| f.card() > 0)
            .cloned()
            .collect();
        originals.sort();
        let index_of = |f: &Face| -> usize {
            originals.binary_search(f).expect("face present") + 1
        };
        // Chains under strict inclusion, built by extending each chain by
        // faces strictly containing its top.
        let mut face_set: HashSet<Face> = HashSet::new();
        face_set.insert(Face::empty());
        let mut stack: Vec<Vec<usize>> = originals
            .iter()
            .map(|f| vec![index_of(f)])
            .collect();
        while let Some(chain) = stack.pop() {
            face_set.insert(Face::new(chain.clone()));
            let top = &originals[chain[chain.len() - 1] - 1];
            for (next_idx, cand) in originals.iter().enumerate() {
                if cand.card() > top.card() && top.is_subset_of(cand) {
                    let mut longer = chain.clone();
                    longer.push(next_idx + 1);
                    stack.push(longer);
                }
            }
        }
        let complex = SimplicialComplex::from_face_set(originals.len(), face_set);
        Subdivision {
            complex,
            vertex_faces: originals,
        }
    }
}

/// A barycentric subdivision together with the face each new vertex came
/// from, which is what a group action needs to transport.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub vertex_faces: Vec<Face>,
}

impl Subdivision {
    /// Extends an automorphism of the original complex to the subdivision.
    pub fn extend_automorphism(&self, g: &Permutation) -> Result<Permutation> {
        let mut image = Vec::with_capacity(self.vertex_faces.len());
        for face in &self.vertex_faces {
            let target = face.apply(g);
            let pos = self
                .vertex_faces
                .binary_search(&target)
                .map_err(|_| Error::NotAnAutomorphism)?;
            image.push(pos + 1);
        }
        Permutation::from_image(image)
    }
}
