//! Shelling moves, shellings and shelled-over decompositions.
//!
//! A facet `F` extends a collection of facets `P` when `⟨P⟩ ∩ ⟨F⟩` is
//! generated by faces of cardinality `|F| - 1`. A shelling is an order of
//! all facets in which every facet after the first extends its prefix.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cm::{is_cm, is_minimal_cm};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::FieldSpec;

/// Facet order witnessing shellability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub n: usize,
    pub order: Vec<Face>,
}

/// `Δ = Γ ∪ ⟨F_1, …, F_j⟩` with `Γ` minimal CM and each `F_i` added by a
/// CM-preserving shelling move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShelledOverCertificate {
    pub core: Complex,
    /// `F_1, …, F_j` in the order they are added on top of the core.
    pub added: Vec<Face>,
    pub field: FieldSpec,
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole search tree was explored without success.
    None,
    /// The node budget ran out first.
    BudgetExhausted { nodes: u64 },
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShellingVerdict {
    Valid,
    /// Index into the order of the first facet that fails.
    FailsAt(usize),
}

impl ShellingVerdict {
    pub fn is_valid(self) -> bool {
        self == ShellingVerdict::Valid
    }
}

impl fmt::Display for ShellingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellingVerdict::Valid => f.write_str("valid"),
            ShellingVerdict::FailsAt(i) => write!(f, "fails at position {i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShelledOverVerdict {
    Valid,
    CoreNotCm,
    CoreNotMinimal,
    /// 1-based step `i` whose complex `Γ ∪ ⟨F_1..F_i⟩` is not CM.
    PrefixNotCm(usize),
    /// 1-based step `i` at which `F_i` is not a shelling move.
    NotShellingMove(usize),
}

impl ShelledOverVerdict {
    pub fn is_valid(self) -> bool {
        self == ShelledOverVerdict::Valid
    }
}

impl fmt::Display for ShelledOverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShelledOverVerdict::Valid => f.write_str("valid"),
            ShelledOverVerdict::CoreNotCm => f.write_str("core is not CM"),
            ShelledOverVerdict::CoreNotMinimal => f.write_str("core is not minimal CM"),
            ShelledOverVerdict::PrefixNotCm(i) => write!(f, "step {i}: complex is not CM"),
            ShelledOverVerdict::NotShellingMove(i) => write!(f, "step {i}: not a shelling move"),
        }
    }
}

/// Whether `⟨prefix⟩ ∩ ⟨f⟩` is pure of dimension `|f| - 2`. An empty
/// prefix never qualifies.
pub fn extends(prefix: &[Face], f: Face) -> bool {
    let k = f.len();
    let cuts: Vec<Face> = prefix.iter().map(|g| g.intersection(f)).collect();
    let ridges: Vec<Face> = cuts.iter().copied().filter(|c| c.len() + 1 == k).collect();
    !ridges.is_empty() && cuts.iter().all(|c| ridges.iter().any(|r| c.is_subset_of(*r)))
}

/// `Δ` is a shelling move of `Δ_F`.
pub fn is_shelling_move(c: &Complex, f: Face) -> Result<bool> {
    let cut = c.intersection_with_facet(f)?;
    Ok(cut.facets().iter().all(|g| g.len() + 1 == f.len()))
}

fn check_permutation(c: &Complex, order: &[Face]) -> Result<()> {
    let mut seen = HashSet::new();
    for f in order {
        if !c.is_facet(*f) {
            return Err(Error::NotAPermutation(format!("{f} is not a facet")));
        }
        if !seen.insert(*f) {
            return Err(Error::NotAPermutation(format!("{f} is repeated")));
        }
    }
    if seen.len() != c.num_facets() {
        return Err(Error::NotAPermutation(format!(
            "{} of {} facets listed",
            seen.len(),
            c.num_facets()
        )));
    }
    Ok(())
}

pub fn verify_shelling(c: &Complex, order: &[Face]) -> Result<ShellingVerdict> {
    check_permutation(c, order)?;
    for i in 1..order.len() {
        if !extends(&order[..i], order[i]) {
            return Ok(ShellingVerdict::FailsAt(i));
        }
    }
    Ok(ShellingVerdict::Valid)
}

/// Every prefix `⟨F_0, …, F_i⟩` is CM over `field`; `⟨F_0⟩` is a simplex.
pub fn verify_cm_prefix_chain(c: &Complex, order: &[Face], field: FieldSpec) -> Result<ShellingVerdict> {
    check_permutation(c, order)?;
    for i in 1..order.len() {
        let prefix = Complex::generated(c.n(), order[..=i].iter().copied());
        if !is_cm(&prefix, field).is_cm {
            return Ok(ShellingVerdict::FailsAt(i));
        }
    }
    Ok(ShellingVerdict::Valid)
}

/// Bitset over facet indices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct IndexSet(Vec<u64>);

impl IndexSet {
    fn new(len: usize) -> Self {
        IndexSet(vec![0; len.div_ceil(64)])
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn toggle(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
}

struct Search<'a> {
    facets: &'a [Face],
    nodes: u64,
    budget: u64,
    /// Facet sets from which no completion exists. Extendability depends
    /// only on the set of placed facets, not their order.
    dead: HashSet<IndexSet>,
}

impl Search<'_> {
    /// `Some(true)` on success, `Some(false)` when the subtree is exhausted,
    /// `None` when the budget runs out.
    fn extend(
        &mut self,
        used: &mut IndexSet,
        order: &mut Vec<Face>,
        accept: &mut dyn FnMut(&[Face], Face) -> bool,
    ) -> Option<bool> {
        if order.len() == self.facets.len() {
            return Some(true);
        }
        if self.dead.contains(used) {
            return Some(false);
        }
        for i in 0..self.facets.len() {
            if used.contains(i) {
                continue;
            }
            let f = self.facets[i];
            if !accept(order, f) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            used.toggle(i);
            order.push(f);
            let r = self.extend(used, order, accept)?;
            if r {
                return Some(true);
            }
            order.pop();
            used.toggle(i);
        }
        self.dead.insert(used.clone());
        Some(false)
    }
}

/// Backtracking search for a shelling of a pure complex, trying facets in
/// lex order. `budget` bounds the number of facet placements.
pub fn find_shelling(c: &Complex, budget: u64) -> Result<SearchOutcome<ShellingCertificate>> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let mut search = Search { facets: c.facets(), nodes: 0, budget, dead: HashSet::new() };
    let mut used = IndexSet::new(c.num_facets());
    let mut order = Vec::with_capacity(c.num_facets());
    let mut accept = |prefix: &[Face], f: Face| prefix.is_empty() || extends(prefix, f);
    Ok(match search.extend(&mut used, &mut order, &mut accept) {
        Some(true) => SearchOutcome::Found(ShellingCertificate { n: c.n(), order }),
        Some(false) => SearchOutcome::None,
        None => SearchOutcome::BudgetExhausted { nodes: search.nodes },
    })
}

/// Greedy descent to a minimal CM core: repeatedly delete the lex-smallest
/// facet whose deletion stays CM.
pub fn shelled_over_decompose(c: &Complex, field: FieldSpec) -> Result<ShelledOverCertificate> {
    if !is_cm(c, field).is_cm {
        return Err(Error::NotCohenMacaulay);
    }
    let mut current = c.clone();
    let mut removed = Vec::new();
    while !current.is_simplex() {
        let next = current.facets().iter().find_map(|f| {
            let d = current.facet_deletion(*f).expect("facet");
            is_cm(&d, field).is_cm.then_some((*f, d))
        });
        match next {
            Some((f, d)) => {
                removed.push(f);
                current = d;
            }
            None => break,
        }
    }
    removed.reverse();
    Ok(ShelledOverCertificate { core: current, added: removed, field })
}

/// Minimal CM cores reachable by CM-preserving facet deletions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreEnumeration {
    pub cores: Vec<Complex>,
    /// False when the budget stopped the enumeration early.
    pub complete: bool,
}

/// Explores every CM-preserving deletion sequence. `budget` bounds the number
/// of distinct subcomplexes visited.
pub fn enumerate_minimal_cores(c: &Complex, field: FieldSpec, budget: u64) -> Result<CoreEnumeration> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if !is_cm(c, field).is_cm {
        return Err(Error::NotCohenMacaulay);
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cores = Vec::new();
    let mut stack = vec![c.clone()];
    seen.insert(c.facet_key());
    let mut complete = true;
    while let Some(cur) = stack.pop() {
        if seen.len() as u64 > budget {
            complete = false;
            break;
        }
        let mut minimal = true;
        if !cur.is_simplex() {
            for f in cur.facets() {
                let d = cur.facet_deletion(*f).expect("facet");
                if is_cm(&d, field).is_cm {
                    minimal = false;
                    if seen.insert(d.facet_key()) {
                        stack.push(d);
                    }
                }
            }
        }
        if minimal {
            cores.push(cur);
        }
    }
    cores.sort_by(|a, b| a.num_facets().cmp(&b.num_facets()).then(a.facets().cmp(b.facets())));
    Ok(CoreEnumeration { cores, complete })
}

fn check_cover(c: &Complex, cert: &ShelledOverCertificate) -> Result<()> {
    let mut seen = HashSet::new();
    for f in cert.core.facets().iter().chain(&cert.added) {
        if !c.is_facet(*f) {
            return Err(Error::FacetMismatch(format!("{f} is not a facet of the complex")));
        }
        if !seen.insert(*f) {
            return Err(Error::FacetMismatch(format!("{f} appears twice")));
        }
    }
    if seen.len() != c.num_facets() {
        let missing: Vec<String> =
            c.facets().iter().filter(|f| !seen.contains(*f)).map(|f| f.to_string()).collect();
        return Err(Error::FacetMismatch(format!("missing facets {}", missing.join(" "))));
    }
    Ok(())
}

/// Checks that the core is minimal CM and that each added facet is a
/// CM-preserving shelling move.
pub fn verify_shelled_over(c: &Complex, cert: &ShelledOverCertificate, field: FieldSpec) -> Result<ShelledOverVerdict> {
    check_cover(c, cert)?;
    match is_minimal_cm(&cert.core, field) {
        Err(Error::NotCohenMacaulay) => return Ok(ShelledOverVerdict::CoreNotCm),
        Err(e) => return Err(e),
        Ok(false) => return Ok(ShelledOverVerdict::CoreNotMinimal),
        Ok(true) => {}
    }
    let mut current = cert.core.clone();
    for (i, f) in cert.added.iter().enumerate() {
        if !extends(current.facets(), *f) {
            return Ok(ShelledOverVerdict::NotShellingMove(i + 1));
        }
        current = current.with_facet(*f);
        if !is_cm(&current, field).is_cm {
            return Ok(ShelledOverVerdict::PrefixNotCm(i + 1));
        }
    }
    Ok(ShelledOverVerdict::Valid)
}

/// Searches for an order in which the facets of `c` outside `core` can be
/// added to `core` by CM-preserving shelling moves.
pub fn extend_core(
    c: &Complex,
    core: &Complex,
    field: FieldSpec,
    budget: u64,
) -> Result<SearchOutcome<ShelledOverCertificate>> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    if let Some(f) = core.facets().iter().find(|f| !c.is_facet(**f)) {
        return Err(Error::FacetMismatch(format!("core facet {f} is not a facet of the complex")));
    }
    let rest: Vec<Face> = c.facets().iter().copied().filter(|f| !core.is_facet(*f)).collect();
    let mut search = Search { facets: &rest, nodes: 0, budget, dead: HashSet::new() };
    let mut used = IndexSet::new(rest.len());
    let mut order = Vec::with_capacity(rest.len());
    let base: Vec<Face> = core.facets().to_vec();
    let mut accept = |prefix: &[Face], f: Face| {
        let mut facets = base.clone();
        facets.extend_from_slice(prefix);
        if !extends(&facets, f) {
            return false;
        }
        facets.push(f);
        is_cm(&Complex::generated(c.n(), facets), field).is_cm
    };
    Ok(match search.extend(&mut used, &mut order, &mut accept) {
        Some(true) => SearchOutcome::Found(ShelledOverCertificate { core: core.clone(), added: order, field }),
        Some(false) => SearchOutcome::None,
        None => SearchOutcome::BudgetExhausted { nodes: search.nodes },
    })
}

/// Every link of positive dimension is connected.
pub fn link_connectivity_condition(c: &Complex) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    if c.is_simplex() {
        return Err(Error::IsSimplex);
    }
    Ok(c.faces().into_iter().all(|s| {
        let lk = c.link(s).expect("face");
        lk.dim() <= 0 || lk.connected_components() == 1
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn face(s: &str) -> Face {
        Face::from_digits(s).unwrap()
    }

    fn faces(v: &[&str]) -> Vec<Face> {
        v.iter().map(|s| face(s)).collect()
    }

    fn rp2() -> Complex {
        Complex::from_digit_facets(6, &["123", "125", "136", "145", "146", "234", "246", "256", "345", "356"])
            .unwrap()
    }

    #[test]
    fn shelling_moves() {
        assert!(is_shelling_move(&rp2(), face("123")).unwrap());
        let two = Complex::from_digit_facets(5, &["123", "145"]).unwrap();
        assert!(!is_shelling_move(&two, face("123")).unwrap());
        let four = Complex::from_digit_facets(9, &["1234", "1235", "1278", "1279"]).unwrap();
        for f in four.facets() {
            assert!(is_shelling_move(&four, *f).unwrap());
        }
        assert!(is_shelling_move(&two, face("12")).is_err());
    }

    #[test]
    fn points_shell() {
        let pts = Complex::from_digit_facets(3, &["1", "2", "3"]).unwrap();
        assert_eq!(verify_shelling(&pts, &faces(&["1", "2", "3"])).unwrap(), ShellingVerdict::Valid);
        assert!(find_shelling(&pts, 10).unwrap().found().is_some());
    }

    #[test]
    fn verification_errors() {
        let c = Complex::from_digit_facets(4, &["123", "124"]).unwrap();
        assert!(verify_shelling(&c, &faces(&["123"])).is_err());
        assert!(verify_shelling(&c, &faces(&["123", "123"])).is_err());
        assert!(verify_shelling(&c, &faces(&["123", "134"])).is_err());
        assert_eq!(verify_shelling(&c, &faces(&["124", "123"])).unwrap(), ShellingVerdict::Valid);
        assert_eq!(verify_cm_prefix_chain(&c, &faces(&["123", "124"]), Q).unwrap(), ShellingVerdict::Valid);
        let single = Complex::simplex(3, face("123")).unwrap();
        assert!(verify_shelling(&single, &faces(&["123"])).unwrap().is_valid());
    }

    #[test]
    fn rp2_does_not_shell() {
        assert_eq!(find_shelling(&rp2(), 1_000_000).unwrap(), SearchOutcome::None);
        assert!(!verify_shelling(&rp2(), rp2().facets()).unwrap().is_valid());
        assert!(matches!(find_shelling(&rp2(), 3).unwrap(), SearchOutcome::BudgetExhausted { .. }));
        assert_eq!(find_shelling(&rp2(), 0), Err(Error::ZeroBudget));
    }

    #[test]
    fn sphere_shells_in_any_order() {
        let sphere = Complex::uniform(4, 3).unwrap();
        let cert = find_shelling(&sphere, 100).unwrap();
        let cert = cert.found().unwrap();
        assert!(verify_shelling(&sphere, &cert.order).unwrap().is_valid());
        let mut rev = sphere.facets().to_vec();
        rev.reverse();
        assert!(verify_shelling(&sphere, &rev).unwrap().is_valid());
    }

    #[test]
    fn decomposition_of_minimal_complex_is_trivial() {
        let cert = shelled_over_decompose(&rp2(), Q).unwrap();
        assert_eq!(cert.core, rp2());
        assert!(cert.added.is_empty());
        assert!(verify_shelled_over(&rp2(), &cert, Q).unwrap().is_valid());
        assert_eq!(shelled_over_decompose(&rp2(), FieldSpec::Prime(2)), Err(Error::NotCohenMacaulay));
    }

    #[test]
    fn decomposition_of_shellable_path() {
        let path = Complex::from_digit_facets(5, &["12", "23", "34", "45"]).unwrap();
        let cert = shelled_over_decompose(&path, Q).unwrap();
        assert!(cert.core.is_simplex());
        assert!(verify_shelled_over(&path, &cert, Q).unwrap().is_valid());
        let all = enumerate_minimal_cores(&path, Q, 1000).unwrap();
        assert!(all.complete);
        // every single edge is reachable
        assert_eq!(all.cores.len(), 4);
    }

    #[test]
    fn shelled_over_rejections() {
        let path = Complex::from_digit_facets(4, &["12", "23", "34"]).unwrap();
        let core = Complex::from_digit_facets(4, &["12"]).unwrap();
        let bad = ShelledOverCertificate { core: core.clone(), added: faces(&["34", "23"]), field: Q };
        assert_eq!(verify_shelled_over(&path, &bad, Q).unwrap(), ShelledOverVerdict::NotShellingMove(1));
        let short = ShelledOverCertificate { core: core.clone(), added: faces(&["23"]), field: Q };
        assert!(matches!(verify_shelled_over(&path, &short, Q), Err(Error::FacetMismatch(_))));
        let fat = Complex::from_digit_facets(4, &["12", "23"]).unwrap();
        let cert = ShelledOverCertificate { core: fat, added: faces(&["34"]), field: Q };
        assert_eq!(verify_shelled_over(&path, &cert, Q).unwrap(), ShelledOverVerdict::CoreNotMinimal);
        let found = extend_core(&path, &core, Q, 100).unwrap();
        assert_eq!(found.found().unwrap().added, faces(&["23", "34"]));
    }

    #[test]
    fn link_condition() {
        let four = Complex::from_digit_facets(9, &["1234", "1235", "1278", "1279"]).unwrap();
        assert!(!link_connectivity_condition(&four).unwrap());
        assert!(link_connectivity_condition(&rp2()).unwrap());
        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert!(!link_connectivity_condition(&pair).unwrap());
        assert_eq!(link_connectivity_condition(&Complex::simplex(3, face("123")).unwrap()), Err(Error::IsSimplex));
    }
}
