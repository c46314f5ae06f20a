//! Machine-checkable comparison reports for the isomorphism statements:
//! equivariant Alexander duality, the cross-cut comparison, the three-way
//! matroid comparison, and the arrangement top-cohomology comparison.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::character::Character;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::homology::{
    betti, graded_character, ActionFn, GradedCharacter, Method,
};
use crate::lattice::{flats_lattice, FiniteLattice};
use crate::linalg::RationalMatrix;
use crate::matroid::Matroid;
use crate::perm::{FiniteGroup, Permutation};
use crate::simplicial::SimplicialComplex;

/// Summary of the acting group as it appears in reports.
#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: usize,
    pub classes: Vec<ClassSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub label: String,
    pub size: usize,
    pub representative: Vec<usize>,
}

impl GroupSummary {
    pub fn new(group: &FiniteGroup) -> Self {
        GroupSummary {
            degree: group.degree(),
            order: group.order(),
            classes: (0..group.classes().len())
                .map(|c| ClassSummary {
                    label: group.class_label(c),
                    size: group.classes()[c].size(),
                    representative: group.class_rep(c).image().to_vec(),
                })
                .collect(),
        }
    }
}

/// One degree of the comparison: per side, the exact character values in
/// class order.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub degree: i32,
    pub values: Vec<Vec<String>>,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub degree: i32,
    pub class: String,
    pub left: String,
    pub right: String,
}

/// The full comparison table for one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub kind: String,
    pub group: GroupSummary,
    pub sides: Vec<String>,
    pub rows: Vec<ComparisonRow>,
    pub support: Vec<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_support: Option<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mobius: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<BTreeMap<String, usize>>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

/// Collects the degrees where any of the graded characters is nonzero.
fn joint_support(sides: &[&GradedCharacter]) -> Vec<i32> {
    let mut degrees: Vec<i32> = Vec::new();
    for gc in sides {
        for d in gc.support() {
            if !degrees.contains(&d) {
                degrees.push(d);
            }
        }
    }
    degrees.sort_unstable();
    degrees
}

/// Builds the comparison table for named graded characters over a common
/// group; `pass` is true when all sides agree in every listed degree.
fn build_report(
    kind: &str,
    group: &Arc<FiniteGroup>,
    named_sides: Vec<(String, GradedCharacter)>,
) -> ComparisonReport {
    let side_refs: Vec<&GradedCharacter> = named_sides.iter().map(|(_, gc)| gc).collect();
    let degrees = joint_support(&side_refs);
    let class_count = group.classes().len();
    let mut rows = Vec::new();
    let mut pass = true;
    let mut first_mismatch = None;
    for &d in &degrees {
        let chars: Vec<Character> = side_refs.iter().map(|gc| gc.character_at(d)).collect();
        let mut equal = true;
        'classes: for c in 0..class_count {
            for k in 1..chars.len() {
                if chars[0].value(c) != chars[k].value(c) {
                    equal = false;
                    if first_mismatch.is_none() {
                        first_mismatch = Some(Mismatch {
                            degree: d,
                            class: group.class_label(c),
                            left: chars[0].value(c).to_string(),
                            right: chars[k].value(c).to_string(),
                        });
                    }
                    break 'classes;
                }
            }
        }
        pass &= equal;
        rows.push(ComparisonRow {
            degree: d,
            values: chars
                .iter()
                .map(|ch| (0..class_count).map(|c| ch.value(c).to_string()).collect())
                .collect(),
            equal,
        });
    }
    ComparisonReport {
        kind: kind.to_string(),
        group: GroupSummary::new(group),
        sides: named_sides.into_iter().map(|(name, _)| name).collect(),
        rows,
        support: degrees,
        expected_support: None,
        betti: None,
        dimension: None,
        mobius: None,
        decomposition: None,
        pass,
        first_mismatch: None,
    }
    .with_mismatch(first_mismatch)
}

impl ComparisonReport {
    fn with_mismatch(mut self, mismatch: Option<Mismatch>) -> Self {
        self.first_mismatch = mismatch;
        self
    }
}

fn betti_map(k: &SimplicialComplex) -> BTreeMap<String, usize> {
    betti(k)
        .into_iter()
        .map(|(d, b)| (d.to_string(), b))
        .collect()
}

/// Characters of the homology of `k`, alongside the Betti table, with the
/// group acting through `action` on the vertices of `k`.
pub fn homology_report(
    k: &SimplicialComplex,
    group: &Arc<FiniteGroup>,
    action: ActionFn,
    method: Method,
) -> Result<ComparisonReport> {
    let gc = graded_character(k, group, action, method)?;
    let mut report = build_report("homology", group, vec![("homology".to_string(), gc)]);
    report.betti = Some(betti_map(k));
    Ok(report)
}

/// Reduced homology of `k` against the sign-twisted reduced homology of
/// its combinatorial dual in complementary degree. The group must act on
/// the ambient labels of `k` (which also makes it act on the dual).
pub fn verify_alexander_duality(
    k: &SimplicialComplex,
    group: &Arc<FiniteGroup>,
    method: Method,
) -> Result<ComparisonReport> {
    if group.degree() != k.ambient() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: k.ambient(),
        });
    }
    let full = SimplicialComplex::full_simplex(k.ambient())?;
    if k == &full {
        // The ambient face must be absent for duality in this form.
        return Err(Error::NotAnAutomorphism);
    }
    let dual = k.alexander_dual()?;
    let n = k.ambient() as i32;
    let primal = graded_character(k, group, &crate::homology::identity_action, method)?;
    let dual_gc = graded_character(&dual, group, &crate::homology::identity_action, method)?;
    // Reindex the dual side: degree j pairs with degree n - 3 - j.
    let dual_side = dual_gc.reindexed(|j| n - 3 - j).twisted_by_group_sign();
    let report = build_report(
        "duality",
        group,
        vec![
            ("homology".to_string(), primal),
            ("dual_twisted".to_string(), dual_side),
        ],
    );
    if !report.pass {
        let mm = report.first_mismatch.clone().expect("mismatch recorded");
        return Err(Error::DualityViolation {
            degree: mm.degree,
            class: mm.class,
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Order-complex homology of the proper part of `lattice` against the
/// homology of the cross-cut complex of `crosscut`, under a group acting
/// by lattice automorphisms (`action` maps group elements to permutations
/// of the 1-based lattice element indices).
pub fn verify_crosscut_theorem(
    lattice: &FiniteLattice,
    crosscut: &[usize],
    group: &Arc<FiniteGroup>,
    action: ActionFn,
    method: Method,
) -> Result<ComparisonReport> {
    if !lattice.is_crosscut(crosscut) {
        return Err(Error::NotACrosscut);
    }
    if !lattice.is_g_stable(crosscut, group, action)? {
        return Err(Error::NotACrosscut);
    }
    let order_complex = lattice.proper_part_order_complex()?;
    let (crosscut_complex, vertex_elements) = lattice.crosscut_complex(crosscut)?;

    let order_action = |g: &Permutation| -> Result<Permutation> {
        let lat_perm = action(g)?;
        lattice.proper_part_permutation(&lat_perm)
    };
    let crosscut_action = |g: &Permutation| -> Result<Permutation> {
        let lat_perm = action(g)?;
        // Restrict to the cross-cut vertices in their canonical order.
        let mut image = Vec::with_capacity(vertex_elements.len());
        for &el in &vertex_elements {
            let target = lat_perm.apply(el + 1) - 1;
            match vertex_elements.iter().position(|&e| e == target) {
                Some(pos) => image.push(pos + 1),
                None => return Err(Error::ActionNotOrderPreserving),
            }
        }
        Permutation::from_image(image)
    };

    let lattice_side = graded_character(&order_complex, group, &order_action, method)?;
    let crosscut_side = graded_character(&crosscut_complex, group, &crosscut_action, method)?;
    let report = build_report(
        "crosscut",
        group,
        vec![
            ("order_complex".to_string(), lattice_side),
            ("crosscut_complex".to_string(), crosscut_side),
        ],
    );
    if !report.pass {
        let mm = report.first_mismatch.clone().expect("mismatch recorded");
        return Err(Error::CrosscutTheoremViolation {
            degree: mm.degree,
            class: mm.class,
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Cross-cut comparison for the lattice of flats of a simple matroid at
/// its atom cross-cut, with the group acting on the ground set.
pub fn verify_crosscut_for_matroid(
    matroid: &Matroid,
    group: &Arc<FiniteGroup>,
    method: Method,
) -> Result<ComparisonReport> {
    if group.degree() != matroid.size() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: matroid.size(),
        });
    }
    for class in 0..group.classes().len() {
        if !matroid.is_automorphism(group.class_rep(class)) {
            return Err(Error::NotAnAutomorphism);
        }
    }
    let flats = flats_lattice(matroid)?;
    let atoms = flats.atom_crosscut();
    let action = |g: &Permutation| flats.element_permutation(g);
    verify_crosscut_theorem(&flats.lattice, &atoms, group, &action, method)
}

/// The three-way comparison for a simple matroid: sign-twisted homology of
/// the dual independence complex in complementary degree, homology of the
/// non-spanning complex, and homology of the flats-lattice order complex.
/// All three must agree and be supported exactly in degree rank - 2.
pub fn verify_main_theorem(
    matroid: &Matroid,
    group: &Arc<FiniteGroup>,
    method: Method,
) -> Result<ComparisonReport> {
    if group.degree() != matroid.size() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: matroid.size(),
        });
    }
    for g in group.elements() {
        if !matroid.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
    }
    let n = matroid.size() as i32;
    let r = matroid.rank() as i32;
    let dual = matroid.dual();
    let in_dual = dual.independence_complex();
    let ns = matroid.non_spanning_complex()?;
    let flats = flats_lattice(matroid)?;
    let order_complex = flats.lattice.proper_part_order_complex()?;
    let lattice_action = |g: &Permutation| -> Result<Permutation> {
        let lat_perm = flats.element_permutation(g)?;
        flats.lattice.proper_part_permutation(&lat_perm)
    };

    let id = &crate::homology::identity_action;
    let in_side = graded_character(&in_dual, group, id, method)?
        .reindexed(|j| n - 3 - j)
        .twisted_by_group_sign();
    let ns_side = graded_character(&ns, group, id, method)?;
    let lattice_side = graded_character(&order_complex, group, &lattice_action, method)?;

    let mut report = build_report(
        "main",
        group,
        vec![
            ("in_dual_twisted".to_string(), in_side),
            ("non_spanning".to_string(), ns_side),
            ("flats_order_complex".to_string(), lattice_side),
        ],
    );
    report.expected_support = Some(vec![r - 2]);
    let support_ok = report.support == vec![r - 2];
    let mobius = flats
        .lattice
        .mobius(flats.lattice.bottom(), flats.lattice.top())?;
    report.mobius = Some(mobius.to_string());
    report.pass &= support_ok;
    if !report.pass {
        let mm = report.first_mismatch.clone().unwrap_or(Mismatch {
            degree: r - 2,
            class: "support".to_string(),
            left: format!("{:?}", report.support),
            right: format!("[{}]", r - 2),
        });
        return Err(Error::MainTheoremViolation {
            degree: mm.degree,
            class: mm.class,
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Arrangement comparison: for an essential configuration of column
/// vectors with simple associated matroid, the top lattice homology must
/// equal the sign-twisted dual independence homology, with dimension
/// |mu(bottom, top)|.
pub fn verify_arrangement_theorem(
    vectors: &RationalMatrix,
    group: &Arc<FiniteGroup>,
    method: Method,
) -> Result<ComparisonReport> {
    let matroid = Matroid::from_vectors(vectors)?;
    let r = matroid.rank() as i32;
    if (vectors.rows() as i32) != r {
        // The configuration must be essential: ambient dimension = rank.
        return Err(Error::NotALattice {
            detail: format!(
                "arrangement is not essential: ambient dimension {} vs rank {}",
                vectors.rows(),
                r
            ),
        });
    }
    if group.degree() != matroid.size() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: matroid.size(),
        });
    }
    for g in group.elements() {
        if !matroid.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
    }
    let n = matroid.size() as i32;
    let dual = matroid.dual();
    let in_dual = dual.independence_complex();
    let flats = flats_lattice(&matroid)?;
    let order_complex = flats.lattice.proper_part_order_complex()?;
    let lattice_action = |g: &Permutation| -> Result<Permutation> {
        let lat_perm = flats.element_permutation(g)?;
        flats.lattice.proper_part_permutation(&lat_perm)
    };
    let id = &crate::homology::identity_action;
    // Degree n - r - 1 of the dual independence complex pairs with the top
    // lattice degree r - 2.
    let in_side = graded_character(&in_dual, group, id, method)?
        .reindexed(|j| n - 3 - j)
        .twisted_by_group_sign();
    let lattice_side = graded_character(&order_complex, group, &lattice_action, method)?;

    let dimension = lattice_side
        .character_at(r - 2)
        .dimension()
        .unwrap_or_default();
    let mobius = flats
        .lattice
        .mobius(flats.lattice.bottom(), flats.lattice.top())?;

    let mut report = build_report(
        "arrangement",
        group,
        vec![
            ("in_dual_twisted".to_string(), in_side),
            ("lattice_top".to_string(), lattice_side),
        ],
    );
    report.expected_support = Some(vec![r - 2]);
    report.dimension = Some(crate::linalg::rat_to_string(&dimension));
    report.mobius = Some(mobius.to_string());
    let dims_ok =
        dimension == crate::linalg::rat(mobius.abs()) && report.support == vec![r - 2];
    report.pass &= dims_ok;
    if !report.pass {
        let mm = report.first_mismatch.clone().unwrap_or(Mismatch {
            degree: r - 2,
            class: "dimension".to_string(),
            left: report.dimension.clone().unwrap_or_default(),
            right: mobius.abs().to_string(),
        });
        return Err(Error::ArrangementTheoremViolation {
            degree: mm.degree,
            class: mm.class,
            report: Box::new(report),
        });
    }
    Ok(report)
}

/// Convenience: exact value rendering used by reports.
pub fn value_string(v: &Cyclotomic) -> String {
    v.to_string()
}
