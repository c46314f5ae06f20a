//! Permutations of the labels 1..=n and finite permutation groups with
//! conjugacy-class data.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};

/// Default bound on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A permutation of {1, .., n}; `image[j-1]` is the image of `j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds from a 1-based image array, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v - 1] {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// The permutation exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > n {
            return Err(Error::VertexOutOfRange { vertex: a, n });
        }
        if b == 0 || b > n {
            return Err(Error::VertexOutOfRange { vertex: b, n });
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Ok(Permutation { image })
    }

    /// Builds from disjoint cycles given as label lists.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from == 0 || from > n {
                    return Err(Error::VertexOutOfRange { vertex: from, n });
                }
                if touched[from - 1] {
                    return Err(Error::VertexOutOfRange { vertex: from, n });
                }
                touched[from - 1] = true;
                image[from - 1] = to;
            }
        }
        Permutation::from_image(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Applies to a 1-based label.
    pub fn apply(&self, j: usize) -> usize {
        self.image[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` after `other`: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            image: other.image.iter().map(|&v| self.image[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0usize; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// Cycles of length >= 2, each led by its least label, sorted by leader.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Multiset of cycle lengths (fixed points included), sorted descending.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 1;
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                len += 1;
                cur = self.apply(cur);
            }
            lengths.push(len);
        }
        Partition::new(lengths)
    }

    /// Parity as a product of transpositions: (-1)^(n - #cycles).
    pub fn sign(&self) -> i64 {
        let cycles = self.cycle_type().len();
        if (self.degree() - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A conjugacy class, as indices into the group's element list.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Index of the lexicographically least member.
    pub rep: usize,
    /// Sorted indices of all members.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite permutation group, fully enumerated, with elements in
/// lexicographic order of their image arrays.
#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
    classes: Vec<ConjugacyClass>,
    index: HashMap<Permutation, usize>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Breadth-first closure of the generators; fails once the closure
    /// exceeds `cap` elements.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Arc<Self>> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elements = Vec::new();
        let mut queue = VecDeque::new();
        let id = Permutation::identity(degree);
        index.insert(id.clone(), 0);
        elements.push(id.clone());
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for gen in &generators {
                let next = gen.compose(&g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        elements.sort();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let (classes, class_of) = conjugacy_classes(&elements, &index, &generators);
        Ok(Arc::new(FiniteGroup {
            degree,
            elements,
            generators,
            classes,
            index,
            class_of,
        }))
    }

    /// The full symmetric group on m letters.
    pub fn symmetric(m: usize) -> Arc<Self> {
        let order = factorial(m).expect("factorial overflow") as usize;
        if m <= 1 {
            return Self::trivial(m);
        }
        let gens = vec![
            Permutation::transposition(m, 1, 2).expect("valid labels"),
            Permutation::from_cycles(m, &[(1..=m).collect()]).expect("valid cycle"),
        ];
        Self::generate(m, gens, order).expect("symmetric group closure")
    }

    /// The cyclic group generated by the m-cycle (1 2 ... m).
    pub fn cyclic(m: usize) -> Arc<Self> {
        if m <= 1 {
            return Self::trivial(m);
        }
        let gen = Permutation::from_cycles(m, &[(1..=m).collect()]).expect("valid cycle");
        Self::generate(m, vec![gen], m).expect("cyclic group closure")
    }

    pub fn trivial(n: usize) -> Arc<Self> {
        Self::generate(n, Vec::new(), 1).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_rep(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].rep]
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn element_index(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of the conjugacy class containing `g`.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| self.class_of[i])
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// True when this is the full symmetric group on its degree.
    pub fn is_full_symmetric(&self) -> bool {
        match factorial(self.degree) {
            Some(f) => f == self.order() as u64,
            None => false,
        }
    }

    /// Cycle type for full symmetric groups, cycle notation otherwise.
    pub fn class_label(&self, class: usize) -> String {
        let rep = self.class_rep(class);
        if self.is_full_symmetric() {
            rep.cycle_type().label()
        } else {
            rep.to_string()
        }
    }
}

/// Orbits of the conjugation action, found by closing under conjugation by
/// the generators; elements are scanned in lexicographic order so each orbit
/// is discovered from its least member.
fn conjugacy_classes(
    elements: &[Permutation],
    index: &HashMap<Permutation, usize>,
    generators: &[Permutation],
) -> (Vec<ConjugacyClass>, Vec<usize>) {
    let n = elements.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let class_idx = classes.len();
        let mut members = vec![start];
        class_of[start] = class_idx;
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for gen in generators {
                let conj = gen.compose(&elements[cur]).compose(&gen.inverse());
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = class_idx;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(ConjugacyClass { rep: start, members });
    }
    (classes, class_of)
}
