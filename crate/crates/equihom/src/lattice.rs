//! Finite lattices: order relation, meet/join tables, Moebius function,
//! order complexes of the proper part, and cross-cuts. Includes the
//! lattice of flats of a simple matroid with its atom data.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::perm::{FiniteGroup, Permutation};
use crate::simplicial::{Face, SimplicialComplex};

/// A finite lattice. Elements are canonically sorted by (rank, label key),
/// so index 0 is the bottom and the last index is the top.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl FiniteLattice {
    /// Builds from a reflexive-transitive order relation; elements get
    /// sorted by (longest-chain rank, sort key). Validates the partial
    /// order, the unique bottom and top, and that meets and joins exist,
    /// then spot-checks the lattice identities.
    pub fn from_order(
        labels: Vec<String>,
        sort_keys: Vec<Vec<usize>>,
        leq_in: Vec<Vec<bool>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotALattice {
                detail: "empty element list".to_string(),
            });
        }
        for i in 0..n {
            if !leq_in[i][i] {
                return Err(Error::NotALattice {
                    detail: "order is not reflexive".to_string(),
                });
            }
            for j in 0..n {
                if i != j && leq_in[i][j] && leq_in[j][i] {
                    return Err(Error::NotALattice {
                        detail: "order is not antisymmetric".to_string(),
                    });
                }
                for k in 0..n {
                    if leq_in[i][j] && leq_in[j][k] && !leq_in[i][k] {
                        return Err(Error::NotALattice {
                            detail: "order is not transitive".to_string(),
                        });
                    }
                }
            }
        }
        // Longest-chain rank from below.
        let mut rank = vec![0usize; n];
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && leq_in[i][j] && rank[j] < rank[i] + 1 {
                        rank[j] = rank[i] + 1;
                        changed = true;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (rank[a], &sort_keys[a]).cmp(&(rank[b], &sort_keys[b])));
        let position: Vec<usize> = {
            let mut pos = vec![0; n];
            for (new, &old) in order.iter().enumerate() {
                pos[old] = new;
            }
            pos
        };
        let labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let rank: Vec<usize> = order.iter().map(|&i| rank[i]).collect();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[position[i]][position[j]] = leq_in[i][j];
            }
        }
        // Unique bottom and top.
        if !(0..n).all(|j| leq[0][j]) {
            return Err(Error::NotALattice {
                detail: "no unique minimum".to_string(),
            });
        }
        if !(0..n).all(|i| leq[i][n - 1]) {
            return Err(Error::NotALattice {
                detail: "no unique maximum".to_string(),
            });
        }
        let meet = binary_table(&leq, n, true)?;
        let join = binary_table(&leq, n, false)?;
        let lattice = FiniteLattice {
            labels,
            leq,
            meet,
            join,
            rank,
        };
        lattice.spot_check()?;
        Ok(lattice)
    }

    /// Accepts an arbitrary relation (0-based index pairs), closes it
    /// reflexively and transitively, and validates as above.
    pub fn from_leq_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::NotALattice {
                    detail: format!("pair ({i},{j}) out of range"),
                });
            }
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let sort_keys = labels
            .iter()
            .map(|l| l.bytes().map(usize::from).collect())
            .collect();
        Self::from_order(labels, sort_keys, leq)
    }

    /// Commutativity, associativity, and absorption on a deterministic
    /// sample of triples.
    fn spot_check(&self) -> Result<()> {
        let n = self.size();
        let step = (n / 6).max(1);
        let sample: Vec<usize> = (0..n).step_by(step).collect();
        for &a in &sample {
            for &b in &sample {
                if self.meet(a, b) != self.meet(b, a) || self.join(a, b) != self.join(b, a) {
                    return Err(Error::NotALattice {
                        detail: "meet/join not commutative".to_string(),
                    });
                }
                if self.meet(a, self.join(a, b)) != a || self.join(a, self.meet(a, b)) != a {
                    return Err(Error::NotALattice {
                        detail: "absorption fails".to_string(),
                    });
                }
                for &c in &sample {
                    if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c))
                        || self.join(self.join(a, b), c) != self.join(a, self.join(b, c))
                    {
                        return Err(Error::NotALattice {
                            detail: "meet/join not associative".to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.size() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Indices of the atoms (elements covering the bottom).
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| x != self.bottom() && self.covers(self.bottom(), x))
            .collect()
    }

    /// True when y covers x.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y)
            && !(0..self.size()).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    /// All maximal chains from bottom to top, as index lists.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut stack = vec![vec![self.bottom()]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if last == self.top() {
                chains.push(chain);
                continue;
            }
            for next in 0..self.size() {
                if self.covers(last, next) {
                    let mut longer = chain.clone();
                    longer.push(next);
                    stack.push(longer);
                }
            }
        }
        chains
    }

    /// Order complex of the proper part: one vertex per element strictly
    /// between bottom and top (vertex v is lattice element v), faces are
    /// the chains.
    pub fn proper_part_order_complex(&self) -> Result<SimplicialComplex> {
        if self.size() < 2 {
            return Err(Error::NotALattice {
                detail: "need at least two elements".to_string(),
            });
        }
        let proper = self.size() - 2;
        let mut faces: std::collections::HashSet<Face> = std::collections::HashSet::new();
        faces.insert(Face::empty());
        // Chains built by extension; vertex labels equal element indices.
        let mut stack: Vec<Vec<usize>> = (1..=proper).map(|v| vec![v]).collect();
        while let Some(chain) = stack.pop() {
            faces.insert(Face::new(chain.clone()));
            let last = *chain.last().unwrap();
            for next in (last + 1)..=proper {
                if self.lt(last, next) {
                    let mut longer = chain.clone();
                    longer.push(next);
                    stack.push(longer);
                }
            }
        }
        Ok(SimplicialComplex::from_face_set(proper, faces))
    }

    /// Restricts a lattice-element permutation (1-based over all elements)
    /// to the proper part.
    pub fn proper_part_permutation(&self, p: &Permutation) -> Result<Permutation> {
        if p.degree() != self.size() {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: self.size(),
            });
        }
        let proper = self.size() - 2;
        let mut image = Vec::with_capacity(proper);
        for v in 1..=proper {
            let target = p.apply(v + 1) - 1;
            if target == 0 || target > proper {
                return Err(Error::ActionNotOrderPreserving);
            }
            image.push(target);
        }
        Permutation::from_image(image)
    }

    /// True when a 1-based element permutation preserves the order.
    pub fn is_order_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.size() {
            return false;
        }
        for i in 0..self.size() {
            for j in 0..self.size() {
                if self.leq(i, j) != self.leq(p.apply(i + 1) - 1, p.apply(j + 1) - 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Cross-cut axioms: avoids bottom and top, is an antichain, and every
    /// maximal chain meets the set (checked by exhaustive enumeration, so
    /// every chain extends to one through the set).
    pub fn is_crosscut(&self, c: &[usize]) -> bool {
        if c.iter().any(|&x| x == self.bottom() || x == self.top()) {
            return false;
        }
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                if self.leq(x, y) || self.leq(y, x) {
                    return false;
                }
            }
        }
        self.maximal_chains()
            .iter()
            .all(|chain| chain.iter().any(|e| c.contains(e)))
    }

    /// The complex on the cross-cut whose faces are the subsets that do
    /// not simultaneously meet to bottom and join to top. Returns the
    /// complex and, per vertex, the lattice element it stands for.
    pub fn crosscut_complex(&self, c: &[usize]) -> Result<(SimplicialComplex, Vec<usize>)> {
        if !self.is_crosscut(c) {
            return Err(Error::NotACrosscut);
        }
        let mut elements: Vec<usize> = c.to_vec();
        elements.sort_unstable();
        if elements.len() > 25 {
            return Err(Error::AmbientTooLarge { n: elements.len() });
        }
        let mut faces: std::collections::HashSet<Face> = std::collections::HashSet::new();
        for mask in 0u64..(1 << elements.len()) {
            let subset: Vec<usize> = (0..elements.len())
                .filter(|b| mask & (1 << b) != 0)
                .collect();
            let meet = subset
                .iter()
                .fold(self.top(), |acc, &i| self.meet(acc, elements[i]));
            let join = subset
                .iter()
                .fold(self.bottom(), |acc, &i| self.join(acc, elements[i]));
            let spans = meet == self.bottom() && join == self.top();
            if !spans {
                faces.insert(Face::new(subset.iter().map(|&i| i + 1).collect()));
            }
        }
        Ok((
            SimplicialComplex::from_face_set(elements.len(), faces),
            elements,
        ))
    }

    /// Moebius function by the defining recursion over the interval.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable);
        }
        let mut memo: HashMap<usize, i64> = HashMap::new();
        memo.insert(x, 1);
        // Process interval elements in rank order so all smaller values
        // are available.
        let mut interval: Vec<usize> = (0..self.size())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        interval.sort_by_key(|&z| self.rank[z]);
        for &z in &interval {
            if z == x {
                continue;
            }
            let mut acc = 0i64;
            for &w in &interval {
                if w != z && self.leq(w, z) {
                    acc += memo[&w];
                }
            }
            memo.insert(z, -acc);
        }
        Ok(memo[&y])
    }

    /// True when the cross-cut is a union of orbits of the action; the
    /// generators of the group must act by order automorphisms.
    pub fn is_g_stable(
        &self,
        c: &[usize],
        group: &FiniteGroup,
        action: &dyn Fn(&Permutation) -> Result<Permutation>,
    ) -> Result<bool> {
        for gen in group.generators() {
            let p = action(gen)?;
            if !self.is_order_automorphism(&p) {
                return Err(Error::ActionNotOrderPreserving);
            }
        }
        for g in group.elements() {
            let p = action(g)?;
            for &x in c {
                let image = p.apply(x + 1) - 1;
                if !c.contains(&image) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Greatest lower bounds (meet) or least upper bounds (join) for every
/// pair; errors when some pair has none.
fn binary_table(leq: &[Vec<bool>], n: usize, meet: bool) -> Result<Vec<Vec<usize>>> {
    let below = |i: usize, j: usize| if meet { leq[i][j] } else { leq[j][i] };
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let bounds: Vec<usize> = (0..n)
                .filter(|&z| below(z, a) && below(z, b))
                .collect();
            let best = bounds
                .iter()
                .copied()
                .find(|&z| bounds.iter().all(|&w| below(w, z)));
            match best {
                Some(z) => table[a][b] = z,
                None => {
                    return Err(Error::NotALattice {
                        detail: format!(
                            "{} of ({a},{b}) does not exist",
                            if meet { "meet" } else { "join" }
                        ),
                    })
                }
            }
        }
    }
    Ok(table)
}

/// The lattice of flats of a simple matroid, with the flats kept as label
/// sets and the atoms matched to ground elements.
#[derive(Clone, Debug)]
pub struct FlatsLattice {
    pub lattice: FiniteLattice,
    /// The flat at each lattice index, as a sorted label list.
    pub flats: Vec<Vec<usize>>,
    /// Lattice index of the atom {e}, position e-1.
    pub atoms: Vec<usize>,
}

impl FlatsLattice {
    /// Indices of the atom cross-cut in canonical order.
    pub fn atom_crosscut(&self) -> Vec<usize> {
        let mut atoms = self.atoms.clone();
        atoms.sort_unstable();
        atoms
    }

    /// The 1-based permutation of lattice elements induced by a ground
    /// permutation that is a matroid automorphism.
    pub fn element_permutation(&self, g: &Permutation) -> Result<Permutation> {
        let flat_index: HashMap<&[usize], usize> = self
            .flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut image = Vec::with_capacity(self.flats.len());
        for flat in &self.flats {
            let mut mapped: Vec<usize> = flat.iter().map(|&e| g.apply(e)).collect();
            mapped.sort_unstable();
            match flat_index.get(mapped.as_slice()) {
                Some(&target) => image.push(target + 1),
                None => return Err(Error::ActionNotOrderPreserving),
            }
        }
        Permutation::from_image(image)
    }
}

/// Enumerates the flats of a simple matroid by closure saturation from the
/// bottom flat upwards.
pub fn flats_lattice(matroid: &Matroid) -> Result<FlatsLattice> {
    if !matroid.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = matroid.size();
    let closure = |set: &[usize]| -> Vec<usize> {
        let r = matroid.rank_of(set).expect("labels in range");
        let mut out = Vec::new();
        for e in 1..=n {
            let mut with_e = set.to_vec();
            if !with_e.contains(&e) {
                with_e.push(e);
            }
            if matroid.rank_of(&with_e).expect("labels in range") == r {
                out.push(e);
            }
        }
        out.sort_unstable();
        out
    };
    let bottom = closure(&[]);
    let mut flats: Vec<Vec<usize>> = vec![bottom.clone()];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(bottom, 0);
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let flat = flats[idx].clone();
        for e in 1..=n {
            if flat.contains(&e) {
                continue;
            }
            let mut extended = flat.clone();
            extended.push(e);
            let closed = closure(&extended);
            if !seen.contains_key(&closed) {
                seen.insert(closed.clone(), flats.len());
                frontier.push(flats.len());
                flats.push(closed);
            }
        }
    }
    // Order by inclusion.
    let count = flats.len();
    let mut leq = vec![vec![false; count]; count];
    for i in 0..count {
        for j in 0..count {
            leq[i][j] = flats[i].iter().all(|e| flats[j].contains(e));
        }
    }
    let labels: Vec<String> = flats
        .iter()
        .map(|f| {
            let inner = f
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("{{{inner}}}")
        })
        .collect();
    let lattice = FiniteLattice::from_order(labels, flats.clone(), leq)?;
    // Recover the flats in the lattice's canonical order by label.
    let mut by_label: HashMap<String, Vec<usize>> = HashMap::new();
    for flat in &flats {
        let inner = flat
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");
        by_label.insert(format!("{{{inner}}}"), flat.clone());
    }
    let ordered_flats: Vec<Vec<usize>> = (0..lattice.size())
        .map(|i| by_label[lattice.label(i)].clone())
        .collect();
    let mut atoms = vec![0usize; n];
    for e in 1..=n {
        let singleton = closure(&[e]);
        let idx = ordered_flats
            .iter()
            .position(|f| f == &singleton)
            .expect("closure of a point is a flat");
        atoms[e - 1] = idx;
    }
    Ok(FlatsLattice {
        lattice,
        flats: ordered_flats,
        atoms,
    })
}
