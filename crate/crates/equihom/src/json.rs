//! JSON file formats for complexes, matroids, graphs, lattices, vector
//! configurations, generator lists, and characters.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::linalg::{rat_from_str, RationalMatrix};
use crate::matroid::Matroid;
use crate::perm::Permutation;
use crate::simplicial::SimplicialComplex;

/// { "n": int, "facets": [[int..]..], "void": bool }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    #[serde(default)]
    pub facets: Vec<Vec<usize>>,
    #[serde(default)]
    pub void: bool,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if self.void {
            Ok(SimplicialComplex::void_complex(self.n))
        } else {
            SimplicialComplex::from_facets(self.n, &self.facets)
        }
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexFile {
            n: k.ambient(),
            facets: k
                .facets()
                .iter()
                .map(|f| f.vertices().to_vec())
                .collect(),
            void: k.is_void(),
        }
    }
}

/// { "n": int, "bases": [[int..]..] }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidFile {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
    /// Skips the quadratic exchange-axiom validation when false.
    #[serde(default = "default_true")]
    pub check: bool,
}

fn default_true() -> bool {
    true
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::from_bases_checked(self.n, &self.bases, self.check)
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidFile {
            n: m.size(),
            bases: m.bases(),
            check: true,
        }
    }
}

/// { "vertices": int, "edges": [[u,v]..] }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::from_graph(self.vertices, &self.edges)
    }
}

/// { "elements": [label..], "leq_pairs": [[i,j]..] } with 0-based indices
/// into the element list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub leq_pairs: Vec<(usize, usize)>,
}

impl LatticeFile {
    pub fn to_lattice(&self) -> Result<FiniteLattice> {
        FiniteLattice::from_leq_pairs(self.elements.clone(), &self.leq_pairs)
    }
}

/// { "rows": int, "columns": [["p/q"..]..] }: one array per column vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorsFile {
    pub rows: usize,
    pub columns: Vec<Vec<RationalValue>>,
}

/// A rational entry, accepted as a "p/q" string or a plain integer.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalValue {
    Text(String),
    Int(i64),
}

impl RationalValue {
    pub fn to_rat(&self) -> Result<crate::linalg::Rat> {
        match self {
            RationalValue::Int(v) => Ok(crate::linalg::rat(*v)),
            RationalValue::Text(s) => rat_from_str(s).ok_or(Error::NotACharacter {
                detail: format!("cannot parse rational {s:?}"),
            }),
        }
    }
}

impl VectorsFile {
    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        let mut m = RationalMatrix::new(self.rows, self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            if col.len() != self.rows {
                return Err(Error::NotACharacter {
                    detail: format!("column {j} has length {} != {}", col.len(), self.rows),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.to_rat()?);
            }
        }
        Ok(m)
    }
}

/// A bare JSON array of 1-based image arrays.
pub fn parse_generators(data: &str) -> std::result::Result<Vec<Permutation>, String> {
    let images: Vec<Vec<usize>> =
        serde_json::from_str(data).map_err(|e| format!("generator file: {e}"))?;
    images
        .into_iter()
        .map(|img| Permutation::from_image(img).map_err(|e| e.to_string()))
        .collect()
}

/// { "m": int, "values": { "<cycle type>": value } } where a value is a
/// "p/q" string or a {"conductor": N, "coeffs": [..]} object.
#[derive(Debug, Clone, Deserialize)]
pub struct CharacterFile {
    pub m: usize,
    pub values: BTreeMap<String, CharacterValue>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CharacterValue {
    Rational(String),
    Int(i64),
    Cyclotomic {
        conductor: usize,
        coeffs: Vec<String>,
    },
}

impl CharacterValue {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        match self {
            CharacterValue::Int(v) => Ok(Cyclotomic::from_integer(*v)),
            CharacterValue::Rational(s) => rat_from_str(s)
                .map(Cyclotomic::from_rational)
                .ok_or(Error::NotACharacter {
                    detail: format!("cannot parse value {s:?}"),
                }),
            CharacterValue::Cyclotomic { conductor, coeffs } => {
                let mut acc = Cyclotomic::zero();
                for (j, c) in coeffs.iter().enumerate() {
                    let q = rat_from_str(c).ok_or(Error::NotACharacter {
                        detail: format!("cannot parse coefficient {c:?}"),
                    })?;
                    acc = acc.add(&Cyclotomic::root_of_unity(*conductor, j as i64).scale(&q));
                }
                Ok(acc)
            }
        }
    }
}
