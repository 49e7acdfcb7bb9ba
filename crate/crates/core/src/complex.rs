//! Simplicial complexes stored by their facet clutter, and the purely
//! combinatorial constructions on them.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// A simplicial complex on the vertex set `[n]`, given by its facets.
///
/// The facet list is always an antichain sorted in lexicographic face order.
/// Vertices of `[n]` that lie in no facet are allowed; they simply do not
/// appear in the complex. The complex `{∅}` is represented by the single
/// facet [`Face::EMPTY`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
}

/// Face counts by cardinality: entry `k` is `f_{k-1}`, so entry 0 is the
/// empty face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_i`, the number of faces of dimension `i` (`i >= -1`).
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.0.get(k).copied()).unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `sum_{i >= -1} (-1)^i f_i`, the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Keeps only the inclusion-maximal faces, deduplicated and lex-sorted.
pub(crate) fn maximal_faces<I: IntoIterator<Item = Face>>(faces: I) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(all.len());
    for f in all {
        if !kept.iter().any(|k| f.is_subset_of(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// Keeps only the inclusion-minimal faces, deduplicated and lex-sorted.
pub(crate) fn minimal_faces<I: IntoIterator<Item = Face>>(faces: I) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(all.len());
    for f in all {
        if !kept.iter().any(|k| k.is_subset_of(f)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl Complex {
    /// The complex generated by `gens` on `[n]`. Contained and repeated
    /// generators are dropped.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, gens: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let gens: Vec<Face> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        for g in &gens {
            if g.max_vertex() > n {
                return Err(Error::VertexOutOfRange { vertex: g.max_vertex(), n });
            }
        }
        Ok(Complex { n, facets: maximal_faces(gens) })
    }

    /// Convenience constructor from compact digit notation, e.g. `["123", "125"]`.
    pub fn from_digit_facets(n: usize, gens: &[&str]) -> Result<Self> {
        let faces = gens.iter().map(|s| Face::from_digits(s)).collect::<Result<Vec<_>>>()?;
        Complex::from_facets(n, faces)
    }

    /// Internal constructor for generators already known to lie in `[n]`.
    pub(crate) fn generated<I: IntoIterator<Item = Face>>(n: usize, gens: I) -> Self {
        let facets = maximal_faces(gens);
        debug_assert!(!facets.is_empty());
        Complex { n, facets }
    }

    /// The simplex `⟨face⟩` on `[n]`.
    pub fn simplex(n: usize, face: Face) -> Result<Self> {
        Complex::from_facets(n, [face])
    }

    /// `⟨[n]_r⟩`: all `r`-subsets of `[n]`.
    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if r > n {
            return Err(Error::DimensionOutOfRange { dim: r as isize - 1, min: -1, max: n as isize - 1 });
        }
        Ok(Complex::generated(n, Face::full(n).subsets_of_size(r)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// `max |F| - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == k)
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_facet(&self, f: Face) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// `σ ∈ Δ ⟺ σ ⊆ F` for some facet `F`.
    pub fn contains(&self, sigma: Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset_of(*f))
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// All faces with exactly `k` vertices, lex-sorted.
    pub fn faces_of_size(&self, k: usize) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if f.len() >= k {
                seen.extend(f.subsets_of_size(k));
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// All faces, by increasing cardinality then lex order.
    pub fn faces(&self) -> Vec<Face> {
        let top = self.dim() + 1;
        (0..=top as usize).flat_map(|k| self.faces_of_size(k)).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let top = (self.dim() + 1) as usize;
        FVector((0..=top).map(|k| self.faces_of_size(k).len()).collect())
    }

    /// The `i`-skeleton: all faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Result<Complex> {
        let dim = self.dim();
        if i < -1 || i > dim {
            return Err(Error::DimensionOutOfRange { dim: i, min: -1, max: dim });
        }
        let k = (i + 1) as usize;
        let gens = self.facets.iter().flat_map(|f| {
            if f.len() <= k {
                vec![*f]
            } else {
                f.subsets_of_size(k).collect()
            }
        });
        Ok(Complex::generated(self.n, gens))
    }

    /// `lk_Δ(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`.
    pub fn link(&self, sigma: Face) -> Result<Complex> {
        let gens: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.difference(sigma))
            .collect();
        if gens.is_empty() {
            return Err(Error::NotAFace(sigma));
        }
        Ok(Complex::generated(self.n, gens))
    }

    fn check_deletable(&self, f: Face) -> Result<()> {
        if !self.is_facet(f) {
            return Err(Error::NotAFacet(f));
        }
        if self.facets.len() < 2 {
            return Err(Error::SingleFacet);
        }
        Ok(())
    }

    /// `Δ_F = ⟨G : G ∈ 𝔉(Δ) \ {F}⟩`. Faces of `F` shared with other facets survive.
    pub fn facet_deletion(&self, f: Face) -> Result<Complex> {
        self.check_deletable(f)?;
        Ok(Complex { n: self.n, facets: self.facets.iter().copied().filter(|g| *g != f).collect() })
    }

    /// `Δ_F ∩ ⟨F⟩`.
    pub fn intersection_with_facet(&self, f: Face) -> Result<Complex> {
        self.check_deletable(f)?;
        Ok(Complex::generated(
            self.n,
            self.facets.iter().filter(|g| **g != f).map(|g| g.intersection(f)),
        ))
    }

    /// The complex generated by the complements `[n] \ G` of the facets.
    pub fn complement_complex(&self) -> Complex {
        Complex::generated(self.n, self.facets.iter().map(|f| f.complement(self.n)))
    }

    /// Inclusion-minimal subsets of `[n]` that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out: HashSet<Face> = HashSet::new();
        let full = Face::full(self.n);
        for v in full.difference(self.vertex_set()).vertices() {
            out.insert(Face::singleton(v));
        }
        // a minimal nonface of size >= 2 is some face plus one vertex
        for tau in self.faces() {
            if tau.is_empty() {
                continue;
            }
            for v in full.difference(tau).vertices() {
                let sigma = tau.with(v);
                if !self.contains(sigma) && sigma.boundary().all(|b| self.contains(b)) {
                    out.insert(sigma);
                }
            }
        }
        let mut out: Vec<Face> = out.into_iter().collect();
        out.sort();
        out
    }

    /// `Δ^∨ = { F ⊆ [n] : [n] \ F ∉ Δ }`.
    pub fn alexander_dual(&self) -> Result<Complex> {
        if self.facets == [Face::full(self.n)] {
            return Err(Error::Degenerate("the full simplex has an empty Alexander dual"));
        }
        let gens = self.minimal_nonfaces().into_iter().map(|m| m.complement(self.n));
        Ok(Complex::generated(self.n, gens))
    }

    /// `Some(v)` for the smallest vertex contained in every facet.
    pub fn is_cone(&self) -> Option<usize> {
        let common = self.facets.iter().fold(Face::full(self.n), |acc, f| acc.intersection(*f));
        common.vertices().next()
    }

    /// Number of connected components of the vertex graph; 0 for `{∅}`.
    pub fn connected_components(&self) -> usize {
        let mut comps: Vec<Face> = Vec::new();
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let mut merged = *f;
            comps.retain(|c| {
                if c.is_disjoint(merged) {
                    true
                } else {
                    merged = merged.union(*c);
                    false
                }
            });
            comps.push(merged);
        }
        comps.len()
    }

    /// Connectivity of the facet graph whose edges join facets meeting in a
    /// codimension-one face.
    pub fn connected_in_codim_1(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let k = self.facets[0].len();
        let mut seen = vec![false; self.facets.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            let fi = self.facets[i];
            for (j, f) in self.facets.iter().enumerate() {
                if !seen[j] && fi.intersection(*f).len() + 1 == k {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// `self ∪ other` on the larger vertex range.
    pub fn union(&self, other: &Complex) -> Complex {
        Complex::generated(
            self.n.max(other.n),
            self.facets.iter().chain(other.facets.iter()).copied(),
        )
    }

    /// Canonical relabeling key: facet list after sorting, used for memoization.
    pub(crate) fn facet_key(&self) -> Vec<u64> {
        self.facets.iter().map(|f| f.bits()).collect()
    }

    /// Adds a face, keeping the antichain property.
    pub(crate) fn with_facet(&self, f: Face) -> Complex {
        Complex::generated(self.n, self.facets.iter().copied().chain(std::iter::once(f)))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, {self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(s: &str) -> Face {
        Face::from_digits(s).unwrap()
    }

    fn rp2() -> Complex {
        Complex::from_digit_facets(6, &["123", "125", "136", "145", "146", "234", "246", "256", "345", "356"])
            .unwrap()
    }

    /// Brute-force membership count over all of 2^[n].
    fn brute_f_vector(c: &Complex) -> Vec<usize> {
        let mut counts = vec![0usize; c.n() + 1];
        for bits in 0..(1u64 << c.n()) {
            let f = Face::from_bits(bits);
            if c.contains(f) {
                counts[f.len()] += 1;
            }
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    #[test]
    fn construction_reduces_to_antichain() {
        let c = Complex::from_digit_facets(3, &["12", "123"]).unwrap();
        assert_eq!(c.facets(), &[face("123")]);
        let c = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert_eq!(c.num_facets(), 2);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.connected_components(), 2);
        assert!(matches!(Complex::from_digit_facets(3, &["14"]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Complex::from_facets(65, [face("1")]), Err(Error::TooManyVertices(65)));
        assert_eq!(Complex::from_facets(3, []), Err(Error::NoGenerators));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(rp2().f_vector().0, vec![1, 6, 15, 10]);
        assert_eq!(brute_f_vector(&rp2()), vec![1, 6, 15, 10]);
        let simplex = Complex::simplex(3, Face::full(3)).unwrap();
        assert_eq!(simplex.f_vector().0, vec![1, 3, 3, 1]);
        let k4 = Complex::uniform(4, 2).unwrap();
        assert_eq!(k4.f_vector().0, brute_f_vector(&k4));
        assert_eq!(k4.f_vector().0, vec![1, 4, 6]);
    }

    #[test]
    fn skeleta() {
        let t = rp2();
        let sk = t.skeleton(1).unwrap();
        assert_eq!(sk, Complex::uniform(6, 2).unwrap());
        assert_eq!(t.skeleton(2).unwrap(), t);
        assert_eq!(Complex::simplex(4, Face::full(4)).unwrap().skeleton(1).unwrap(), Complex::uniform(4, 2).unwrap());
        assert!(t.skeleton(3).is_err());
        assert!(t.skeleton(-2).is_err());
        assert_eq!(t.skeleton(-1).unwrap().facets(), &[Face::EMPTY]);
    }

    #[test]
    fn links() {
        let c = Complex::from_digit_facets(9, &["1234", "1235", "1278", "1279"]).unwrap();
        let lk = c.link(face("12")).unwrap();
        assert_eq!(lk, Complex::from_digit_facets(9, &["34", "35", "78", "79"]).unwrap());
        assert_eq!(lk.connected_components(), 2);
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
        // link of a vertex of the RP² complex is a 5-cycle
        let lk1 = rp2().link(face("1")).unwrap();
        assert_eq!(lk1, Complex::from_digit_facets(6, &["23", "25", "36", "45", "46"]).unwrap());
        assert_eq!(rp2().link(face("124")), Err(Error::NotAFace(face("124"))));
    }

    #[test]
    fn deletions_and_intersections() {
        let t = rp2();
        let d = t.facet_deletion(face("123")).unwrap();
        assert_eq!(d.num_facets(), 9);
        for e in ["12", "13", "23"] {
            assert!(d.contains(face(e)));
        }
        assert_eq!(
            t.intersection_with_facet(face("123")).unwrap(),
            Complex::from_digit_facets(6, &["12", "13", "23"]).unwrap()
        );
        let two = Complex::from_digit_facets(5, &["123", "145"]).unwrap();
        assert_eq!(two.intersection_with_facet(face("123")).unwrap().facets(), &[face("1")]);
        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert_eq!(pair.facet_deletion(face("12")).unwrap().facets(), &[face("34")]);
        assert_eq!(pair.facet_deletion(face("13")), Err(Error::NotAFacet(face("13"))));
        let single = Complex::simplex(3, face("123")).unwrap();
        assert_eq!(single.facet_deletion(face("123")), Err(Error::SingleFacet));
    }

    #[test]
    fn complements_and_duals() {
        let t = rp2();
        let tc = t.complement_complex();
        let expected = ["456", "346", "245", "236", "235", "156", "135", "134", "126", "124"];
        assert_eq!(tc, Complex::from_digit_facets(6, &expected).unwrap());
        assert_eq!(tc.complement_complex(), t);
        assert_eq!(Complex::from_digit_facets(3, &["12"]).unwrap().complement_complex().facets(), &[face("3")]);

        let dual = t.alexander_dual().unwrap();
        assert_eq!(dual.minimal_nonfaces(), tc.facets());
        assert_eq!(dual.alexander_dual().unwrap(), t);
        assert!(Complex::simplex(3, Face::full(3)).unwrap().alexander_dual().is_err());

        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        let pd = pair.alexander_dual().unwrap();
        assert_eq!(pd.minimal_nonfaces(), vec![face("12"), face("34")]);
    }

    #[test]
    fn cones_and_connectivity() {
        assert_eq!(rp2().is_cone(), None);
        assert_eq!(Complex::simplex(4, face("234")).unwrap().is_cone(), Some(2));
        assert!(rp2().connected_in_codim_1().unwrap());
        assert_eq!(rp2().connected_components(), 1);
        let pair = Complex::from_digit_facets(4, &["12", "34"]).unwrap();
        assert!(!pair.connected_in_codim_1().unwrap());
        let mixed = Complex::from_digit_facets(4, &["123", "4"]).unwrap();
        assert_eq!(mixed.connected_in_codim_1(), Err(Error::NotPure));
    }
}
