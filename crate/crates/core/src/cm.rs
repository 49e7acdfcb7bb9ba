//! Cohen-Macaulay decisions by Reisner's criterion: `Δ` is CM over `k` iff
//! `H̃_i(lk_Δ σ; k) = 0` for every face `σ` and every `i < dim lk_Δ σ`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, FVector};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{reduced_homology, FieldSpec, HomologyProfile};

/// Why a complex fails to be Cohen-Macaulay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CmWitness {
    /// Two facets of different cardinality.
    NotPure { smaller: Face, larger: Face },
    /// `H̃_degree(lk σ)` has dimension `dim > 0` with `degree < dim lk σ`.
    Link { face: Face, degree: isize, dim: usize },
}

impl fmt::Display for CmWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmWitness::NotPure { smaller, larger } => write!(f, "not pure: facets {smaller} and {larger}"),
            CmWitness::Link { face, degree, dim } => {
                write!(f, "face {face}: dim H~_{degree}(lk) = {dim}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub is_cm: bool,
    pub witness: Option<CmWitness>,
    pub field: FieldSpec,
}

impl CmReport {
    fn cm(field: FieldSpec) -> Self {
        CmReport { is_cm: true, witness: None, field }
    }

    fn fail(field: FieldSpec, w: CmWitness) -> Self {
        CmReport { is_cm: false, witness: Some(w), field }
    }
}

/// Relabels the support of `c` onto `1..=m` so isomorphic-by-order links share
/// a memo entry.
fn compressed_key(c: &Complex) -> Vec<u64> {
    let support: Vec<usize> = c.vertex_set().vertices().collect();
    let mut key: Vec<u64> = c
        .facets()
        .iter()
        .map(|f| {
            f.vertices()
                .map(|v| 1u64 << support.binary_search(&v).expect("vertex in support"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    key.sort_unstable();
    key
}

/// Reisner sweep over every face, smallest first, with no shortcuts.
pub fn reisner_sweep(c: &Complex, field: FieldSpec) -> CmReport {
    let mut memo: HashMap<Vec<u64>, HomologyProfile> = HashMap::new();
    sweep(c, field, &mut memo)
}

fn sweep(c: &Complex, field: FieldSpec, memo: &mut HashMap<Vec<u64>, HomologyProfile>) -> CmReport {
    for sigma in c.faces() {
        let lk = c.link(sigma).expect("σ is a face");
        let ldim = lk.dim();
        if ldim <= 0 {
            // only H̃_{-1} is constrained, and it vanishes for a nonempty link
            continue;
        }
        let comps = lk.connected_components();
        if comps > 1 {
            return CmReport::fail(field, CmWitness::Link { face: sigma, degree: 0, dim: comps - 1 });
        }
        if ldim == 1 {
            continue;
        }
        let h = memo.entry(compressed_key(&lk)).or_insert_with(|| reduced_homology(&lk, field));
        if let Some(i) = (-1..ldim).find(|&i| h.get(i) != 0) {
            return CmReport::fail(field, CmWitness::Link { face: sigma, degree: i, dim: h.get(i) });
        }
    }
    CmReport::cm(field)
}

/// Cohen-Macaulayness over `field`, with purity and connectivity shortcuts.
pub fn is_cm(c: &Complex, field: FieldSpec) -> CmReport {
    if !c.is_pure() {
        let smaller = *c.facets().iter().min_by_key(|f| f.len()).expect("nonempty");
        let larger = *c.facets().iter().max_by_key(|f| f.len()).expect("nonempty");
        return CmReport::fail(field, CmWitness::NotPure { smaller, larger });
    }
    if c.dim() >= 1 {
        let comps = c.connected_components();
        if comps > 1 {
            return CmReport::fail(field, CmWitness::Link { face: Face::EMPTY, degree: 0, dim: comps - 1 });
        }
    }
    reisner_sweep(c, field)
}

/// `1 + max { i : Δ^(i) is CM }`.
pub fn depth(c: &Complex, field: FieldSpec) -> usize {
    for i in (-1..=c.dim()).rev() {
        let sk = c.skeleton(i).expect("in range");
        if is_cm(&sk, field).is_cm {
            return (i + 1) as usize;
        }
    }
    unreachable!("{{∅}} is Cohen-Macaulay")
}

/// A simplex is minimal CM; otherwise every facet deletion must fail to be CM.
pub fn is_minimal_cm(c: &Complex, field: FieldSpec) -> Result<bool> {
    if !is_cm(c, field).is_cm {
        return Err(Error::NotCohenMacaulay);
    }
    if c.is_simplex() {
        return Ok(true);
    }
    Ok(c.facets().iter().all(|f| !is_cm(&c.facet_deletion(*f).expect("facet"), field).is_cm))
}

/// Comparison of `Δ` and `Δ_F` for a top-dimensional facet `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetRemovalReport {
    pub facet: Face,
    pub homology_before: HomologyProfile,
    pub homology_after: HomologyProfile,
    pub f_before: FVector,
    pub f_after: FVector,
    pub depth_before: usize,
    pub depth_after: usize,
    /// Homology unchanged below the top degree and one less in the top degree.
    pub homology_shift_ok: bool,
    /// f-vector unchanged below the top degree and one less in the top degree.
    pub f_vector_drop_ok: bool,
    pub depth_ok: bool,
}

impl FacetRemovalReport {
    pub fn all_ok(&self) -> bool {
        self.homology_shift_ok && self.f_vector_drop_ok && self.depth_ok
    }
}

pub fn facet_removal_report(c: &Complex, facet: Face, field: FieldSpec) -> Result<FacetRemovalReport> {
    let after = c.facet_deletion(facet)?;
    let top = c.dim();
    let homology_before = reduced_homology(c, field);
    let homology_after = reduced_homology(&after, field);
    let f_before = c.f_vector();
    let f_after = after.f_vector();
    let shifted = |i: isize, a: usize, b: usize| if i == top { a.checked_sub(1) == Some(b) } else { a == b };
    let homology_shift_ok =
        (-1..=top).all(|i| shifted(i, homology_before.get(i), homology_after.get(i)));
    let f_vector_drop_ok = (-1..=top).all(|i| shifted(i, f_before.get(i), f_after.get(i)));
    let depth_before = depth(c, field);
    let depth_after = depth(&after, field);
    Ok(FacetRemovalReport {
        facet,
        homology_before,
        homology_after,
        f_before,
        f_after,
        depth_before,
        depth_after,
        homology_shift_ok,
        f_vector_drop_ok,
        depth_ok: depth_before == depth_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::top_cycle_facet;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::Prime(2);

    fn rp2() -> Complex {
        Complex::from_digit_facets(6, &["123", "125", "136", "145", "146", "234", "246", "256", "345", "356"])
            .unwrap()
    }

    #[test]
    fn rp2_is_cm_only_in_characteristic_zero() {
        assert!(is_cm(&rp2(), Q).is_cm);
        let r = is_cm(&rp2(), F2);
        assert!(!r.is_cm);
        assert_eq!(r.witness, Some(CmWitness::Link { face: Face::EMPTY, degree: 1, dim: 1 }));
    }

    #[test]
    fn shortcuts_agree_with_full_sweep() {
        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert_eq!(is_cm(&pair, Q).witness, Some(CmWitness::Link { face: Face::EMPTY, degree: 0, dim: 1 }));
        assert!(!reisner_sweep(&pair, Q).is_cm);
        let mixed = Complex::from_digit_facets(4, &["123", "34"]).unwrap();
        assert!(matches!(is_cm(&mixed, Q).witness, Some(CmWitness::NotPure { .. })));
        assert!(!reisner_sweep(&mixed, Q).is_cm);
    }

    #[test]
    fn depths() {
        assert_eq!(depth(&rp2(), Q), 3);
        assert_eq!(depth(&rp2(), F2), 2);
        assert_eq!(depth(&Complex::simplex(3, Face::full(3)).unwrap(), Q), 3);
        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert_eq!(depth(&pair, Q), 1);
    }

    #[test]
    fn minimality() {
        assert!(is_minimal_cm(&rp2(), Q).unwrap());
        assert_eq!(is_minimal_cm(&rp2(), F2), Err(Error::NotCohenMacaulay));
        assert!(is_minimal_cm(&Complex::simplex(3, Face::full(3)).unwrap(), Q).unwrap());
        let path = Complex::from_digit_facets(4, &["12", "23", "34"]).unwrap();
        assert!(!is_minimal_cm(&path, Q).unwrap());
    }

    #[test]
    fn facet_removal_on_sphere() {
        let sphere = Complex::uniform(4, 3).unwrap();
        let f = top_cycle_facet(&sphere, Q).unwrap();
        let rep = facet_removal_report(&sphere, f, Q).unwrap();
        assert!(rep.all_ok(), "{rep:?}");
    }
}
