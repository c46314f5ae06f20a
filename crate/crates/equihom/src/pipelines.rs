//! End-to-end computations for the complete graph: the homology character
//! of the dual independence complex under the symmetric group acting on
//! edges, compared with the induced cyclic character and the sign-twisted
//! top lattice character, plus the irreducible decomposition.

use std::collections::BTreeMap;

use num::ToPrimitive;

use crate::character::{cyclic_character, decompose, induced_character, Character};
use crate::error::{Error, Result};
use crate::homology::{graded_character, Method};
use crate::lattice::flats_lattice;
use crate::linalg::{rat, RationalMatrix};
use crate::matroid::{complete_graph_edges, edge_action, Matroid};
use crate::partition::factorial;
use crate::perm::{FiniteGroup, Permutation};
use crate::verify::{ComparisonReport, ComparisonRow, GroupSummary, Mismatch};

/// Column vectors e_u - e_v (last coordinate projected away) for the
/// lexicographic edges of the complete graph on m vertices. The ambient
/// dimension is m - 1, so the configuration is essential.
pub fn braid_vectors(m: usize) -> RationalMatrix {
    let edges = complete_graph_edges(m);
    let mut vs = RationalMatrix::new(m - 1, edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        if u < m {
            vs.set(u - 1, j, rat(1));
        }
        if v < m {
            vs.set(v - 1, j, rat(-1));
        }
    }
    vs
}

/// The full complete-graph comparison for the symmetric group on m
/// letters. Checks that the homology character of the dual independence
/// complex in degree binom(m,2) - m equals the character induced from the
/// primitive cyclic character, and equals the sign-twisted top character
/// of the partition lattice; reports the dimension (m-1)! and the
/// irreducible decomposition.
pub fn complete_graph(m: usize, method: Method) -> Result<ComparisonReport> {
    if m < 3 {
        return Err(Error::AmbientTooLarge { n: m });
    }
    let edges = complete_graph_edges(m);
    let n = edges.len();
    let matroid = Matroid::from_graph(m, &edges)?;
    let dual = matroid.dual();
    let in_dual = dual.independence_complex();
    let group = FiniteGroup::symmetric(m);
    let action = |g: &Permutation| edge_action(m, g);

    let in_degree = (n - m) as i32;
    let in_graded = graded_character(&in_dual, &group, &action, method)?;
    if in_graded.support() != vec![in_degree] {
        return Err(Error::HomologyNotConcentrated {
            degree: in_degree,
            betti: crate::homology::betti(&in_dual),
        });
    }
    let chi_in = in_graded.character_at(in_degree);

    // Induced character of the primitive cyclic character; its values are
    // rational integers once the roots of unity are summed.
    let (cyclic_group, xi) = cyclic_character(m, 1);
    let chi_ind = induced_character(&group, &cyclic_group, &xi)?;
    for v in chi_ind.values() {
        if v.to_integer().is_none() {
            return Err(Error::NotACharacter {
                detail: format!("induced value {v} is not a rational integer"),
            });
        }
    }

    // Top lattice character, twisted by the sign of the edge permutation.
    let flats = flats_lattice(&matroid)?;
    let order_complex = flats.lattice.proper_part_order_complex()?;
    let lattice_action = |g: &Permutation| {
        let lat_perm = flats.element_permutation(&edge_action(m, g)?)?;
        flats.lattice.proper_part_permutation(&lat_perm)
    };
    let lat_degree = (m as i32) - 3;
    let lat_graded = graded_character(&order_complex, &group, &lattice_action, method)?;
    if lat_graded.support() != vec![lat_degree] {
        return Err(Error::HomologyNotConcentrated {
            degree: lat_degree,
            betti: crate::homology::betti(&order_complex),
        });
    }
    let edge_signs: Vec<i64> = (0..group.classes().len())
        .map(|c| edge_action(m, group.class_rep(c)).map(|p| p.sign()))
        .collect::<Result<_>>()?;
    let chi_lat = lat_graded.character_at(lat_degree).twisted_by(&edge_signs);

    let sides = [
        ("in_dual".to_string(), chi_in.clone()),
        ("induced".to_string(), chi_ind.clone()),
        ("lattice_twisted".to_string(), chi_lat.clone()),
    ];
    let class_count = group.classes().len();
    let mut equal = true;
    let mut first_mismatch = None;
    for c in 0..class_count {
        for (name, chi) in &sides[1..] {
            if chi.value(c) != chi_in.value(c) {
                equal = false;
                if first_mismatch.is_none() {
                    first_mismatch = Some(Mismatch {
                        degree: in_degree,
                        class: group.class_label(c),
                        left: chi_in.value(c).to_string(),
                        right: format!("{} ({name})", chi.value(c)),
                    });
                }
            }
        }
    }

    let expected_dim = rat(factorial(m - 1).expect("small m") as i64);
    let dim = chi_in.dimension().unwrap_or_default();
    let dims_ok = dim == expected_dim;
    let mobius = flats
        .lattice
        .mobius(flats.lattice.bottom(), flats.lattice.top())?;
    let mobius_ok = mobius.unsigned_abs()
        == expected_dim.numer().to_u64().expect("small dimension");

    let decomposition: BTreeMap<String, usize> = decompose(&chi_in)?
        .into_iter()
        .map(|(p, mult)| (p.label(), mult))
        .collect();

    let rows = vec![ComparisonRow {
        degree: in_degree,
        values: sides
            .iter()
            .map(|(_, chi)| (0..class_count).map(|c| chi.value(c).to_string()).collect())
            .collect(),
        equal,
    }];
    let pass = equal && dims_ok && mobius_ok;
    let report = ComparisonReport {
        kind: "complete-graph".to_string(),
        group: GroupSummary::new(&group),
        sides: sides.iter().map(|(name, _)| name.clone()).collect(),
        rows,
        support: vec![in_degree],
        expected_support: Some(vec![in_degree]),
        betti: None,
        dimension: Some(crate::linalg::rat_to_string(&dim)),
        mobius: Some(mobius.to_string()),
        decomposition: Some(decomposition),
        pass,
        first_mismatch: first_mismatch.clone(),
    };
    if !pass {
        let mm = first_mismatch.unwrap_or(Mismatch {
            degree: in_degree,
            class: "dimension".to_string(),
            left: crate::linalg::rat_to_string(&dim),
            right: crate::linalg::rat_to_string(&expected_dim),
        });
        return Err(Error::MainTheoremViolation {
            degree: mm.degree,
            class: mm.class,
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// The homology character of the complete-graph pipeline as a character
/// of the vertex symmetric group, exposed for decomposition tooling.
pub fn complete_graph_homology_character(m: usize, method: Method) -> Result<Character> {
    let edges = complete_graph_edges(m);
    let n = edges.len();
    let matroid = Matroid::from_graph(m, &edges)?;
    let in_dual = matroid.dual().independence_complex();
    let group = FiniteGroup::symmetric(m);
    let action = |g: &Permutation| edge_action(m, g);
    let graded = graded_character(&in_dual, &group, &action, method)?;
    Ok(graded.character_at((n - m) as i32))
}
