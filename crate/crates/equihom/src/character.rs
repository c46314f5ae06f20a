//! Class functions on finite permutation groups with exact cyclotomic
//! values: construction, induction, inner products, restriction, and
//! decomposition into symmetric-group irreducibles.

use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::partition::{character_table, factorial, Partition};
use crate::perm::{FiniteGroup, Permutation};

/// An exact class function: one value per conjugacy class, in class order.
#[derive(Clone, Debug)]
pub struct Character {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(
            values.len(),
            group.classes().len(),
            "one value per conjugacy class"
        );
        Character { group, values }
    }

    pub fn from_rationals(group: Arc<FiniteGroup>, values: Vec<Rat>) -> Self {
        Self::new(
            group,
            values.into_iter().map(Cyclotomic::from_rational).collect(),
        )
    }

    pub fn from_integers(group: Arc<FiniteGroup>, values: Vec<i64>) -> Self {
        Self::new(
            group,
            values.into_iter().map(Cyclotomic::from_integer).collect(),
        )
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let classes = group.classes().len();
        Self::new(group, vec![Cyclotomic::one(); classes])
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let classes = group.classes().len();
        Self::new(group, vec![Cyclotomic::zero(); classes])
    }

    /// The sign of each class representative as a permutation.
    pub fn sign_character(group: Arc<FiniteGroup>) -> Self {
        let values = (0..group.classes().len())
            .map(|c| Cyclotomic::from_integer(group.class_rep(c).sign()))
            .collect();
        Self::new(group, values)
    }

    /// |G| at the identity class, zero elsewhere.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let mut values = vec![Cyclotomic::zero(); group.classes().len()];
        for (c, class) in group.classes().iter().enumerate() {
            if group.element(class.rep).is_identity() {
                values[c] = Cyclotomic::from_integer(group.order() as i64);
            }
        }
        Self::new(group, values)
    }

    /// Fixed points of each class representative on {1..n}.
    pub fn natural_permutation(group: Arc<FiniteGroup>) -> Self {
        let values = (0..group.classes().len())
            .map(|c| {
                let rep = group.class_rep(c);
                let fixed = (1..=group.degree()).filter(|&j| rep.apply(j) == j).count();
                Cyclotomic::from_integer(fixed as i64)
            })
            .collect();
        Self::new(group, values)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at an arbitrary group element.
    pub fn value_of(&self, g: &Permutation) -> Result<&Cyclotomic> {
        let class = self.group.class_of(g).ok_or(Error::NotASubgroup)?;
        Ok(&self.values[class])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Value at the identity class as an exact rational.
    pub fn dimension(&self) -> Option<Rat> {
        let id_class = self.group.class_of(&Permutation::identity(self.group.degree()))?;
        self.values[id_class].to_rational()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self::new(self.group.clone(), values))
    }

    /// Pointwise product with the sign of the class representatives.
    pub fn twisted_by_sign(&self) -> Self {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(c, v)| v.scale_int(self.group.class_rep(c).sign()))
            .collect();
        Self::new(self.group.clone(), values)
    }

    /// Pointwise product with explicit per-class signs.
    pub fn twisted_by(&self, signs: &[i64]) -> Self {
        assert_eq!(signs.len(), self.values.len());
        let values = self
            .values
            .iter()
            .zip(signs)
            .map(|(v, &s)| v.scale_int(s))
            .collect();
        Self::new(self.group.clone(), values)
    }

    /// (1/|G|) sum over G of chi1(g) * conj(chi2(g)), exactly.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut acc = Cyclotomic::zero();
        for (c, class) in self.group.classes().iter().enumerate() {
            let term = self.values[c]
                .mul(&other.values[c].conj())
                .scale_int(class.size() as i64);
            acc = acc.add(&term);
        }
        Ok(acc.scale(&Rat::new(BigInt::one(), BigInt::from(self.group.order()))))
    }

    /// Restriction to a subgroup.
    pub fn restricted_to(&self, subgroup: &Arc<FiniteGroup>) -> Result<Character> {
        if !subgroup.is_subgroup_of(&self.group) {
            return Err(Error::NotASubgroup);
        }
        let values = (0..subgroup.classes().len())
            .map(|c| self.value_of(subgroup.class_rep(c)).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(Character::new(subgroup.clone(), values))
    }
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || (a.degree() == b.degree() && a.elements() == b.elements())
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

/// The 1-dimensional character of the cyclic group generated by the
/// m-cycle (1 2 .. m) sending the generator to zeta_m^k.
pub fn cyclic_character(m: usize, k: i64) -> (Arc<FiniteGroup>, Character) {
    let group = FiniteGroup::cyclic(m);
    if m <= 1 {
        let chi = Character::trivial(group.clone());
        return (group, chi);
    }
    let generator = Permutation::from_cycles(m, &[(1..=m).collect()]).expect("valid cycle");
    let mut values = vec![Cyclotomic::zero(); group.classes().len()];
    let mut power = Permutation::identity(m);
    for j in 0..m {
        let class = group.class_of(&power).expect("power of the generator");
        values[class] = Cyclotomic::root_of_unity(m, (j as i64) * k);
        power = generator.compose(&power);
    }
    (group.clone(), Character::new(group, values))
}

/// Induction from a subgroup by the brute-force sum
/// chi(g) = (1/|H|) sum over x in G with x^-1 g x in H of xi(x^-1 g x).
pub fn induced_character(
    group: &Arc<FiniteGroup>,
    subgroup: &Arc<FiniteGroup>,
    xi: &Character,
) -> Result<Character> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotASubgroup);
    }
    if !same_group(xi.group(), subgroup) {
        return Err(Error::GroupMismatch);
    }
    let mut values = Vec::with_capacity(group.classes().len());
    for c in 0..group.classes().len() {
        let g = group.class_rep(c);
        let mut acc = Cyclotomic::zero();
        for x in group.elements() {
            let conj = x.inverse().compose(g).compose(x);
            if subgroup.contains(&conj) {
                acc = acc.add(xi.value_of(&conj)?);
            }
        }
        values.push(acc.scale(&Rat::new(BigInt::one(), BigInt::from(subgroup.order()))));
    }
    Ok(Character::new(group.clone(), values))
}

/// Multiplicities of the symmetric-group irreducibles in a character with
/// rational-integer values; the group must be the full symmetric group on
/// its degree.
pub fn decompose(chi: &Character) -> Result<Vec<(Partition, usize)>> {
    let group = chi.group();
    if !group.is_full_symmetric() {
        return Err(Error::NotACharacter {
            detail: "decomposition needs the full symmetric group".to_string(),
        });
    }
    let m = group.degree();
    let table = character_table(m)?;
    let order = factorial(m).expect("small degree");
    // Map each class to its cycle-type column in the table.
    let class_cols: Vec<usize> = (0..group.classes().len())
        .map(|c| {
            table
                .class_index(&group.class_rep(c).cycle_type())
                .expect("cycle type present")
        })
        .collect();
    let int_values: Vec<BigInt> = chi
        .values()
        .iter()
        .map(|v| {
            v.to_integer().ok_or_else(|| Error::NotACharacter {
                detail: format!("non-integral value {v}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (l, lambda) in table.partitions.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (c, class) in group.classes().iter().enumerate() {
            let col = class_cols[c];
            acc += BigInt::from(class.size() as u64)
                * &int_values[c]
                * BigInt::from(table.values[l][col]);
        }
        let (mult, rem) = num::Integer::div_rem(&acc, &BigInt::from(order));
        if !rem.is_zero() || mult.is_negative() {
            return Err(Error::NotACharacter {
                detail: format!("multiplicity of {lambda} is {acc}/{order}"),
            });
        }
        if !mult.is_zero() {
            let mult: usize = mult.to_string().parse().expect("small multiplicity");
            out.push((lambda.clone(), mult));
        }
    }
    Ok(out)
}
