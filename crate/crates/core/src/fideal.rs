//! f-ideals of squarefree monomial ideals, described by their minimal
//! generator clutters.
//!
//! For a clutter `C` on `[n]`, the facet complex is `⟨C⟩` and the nonface
//! complex is `{ F ⊆ [n] : no member of C lies in F }`. `C` generates an
//! f-ideal when the two complexes have the same f-vector. For a clutter of
//! `d`-sets this holds exactly when `C` is an LU-set of size `½·C(n, d)`.
//!
//! Dimensions in every report use `dim = cardinality - 1`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cm::{is_cm, is_minimal_cm};
use crate::complex::{maximal_faces, minimal_faces, Complex, FVector};
use crate::error::{Error, Result};
use crate::face::{binomial, Face, MAX_VERTICES};
use crate::homology::{is_acyclic, reduced_homology, FieldSpec};
use crate::shelling::{find_shelling, SearchOutcome, ShellingCertificate};

pub const CONVENTION: &str = "dim = cardinality - 1";

/// Minimal generators `G(I)` of a squarefree monomial ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clutter {
    n: usize,
    members: Vec<Face>,
}

impl Clutter {
    pub fn new<I: IntoIterator<Item = Face>>(n: usize, members: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut members: Vec<Face> = members.into_iter().collect();
        members.sort();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyClutter);
        }
        if members.iter().any(|m| m.is_empty()) {
            return Err(Error::BadClutter("the empty face generates the unit ideal".into()));
        }
        if let Some(m) = members.iter().find(|m| m.max_vertex() > n) {
            return Err(Error::VertexOutOfRange { vertex: m.max_vertex(), n });
        }
        if minimal_faces(members.iter().copied()).len() != members.len() {
            return Err(Error::BadClutter("members are not an antichain".into()));
        }
        Ok(Clutter { n, members })
    }

    /// The facets of `c`, i.e. the generators of its facet ideal `I(c)`.
    pub fn from_complex(c: &Complex) -> Result<Self> {
        Clutter::new(c.n(), c.facets().iter().copied())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Face] {
        &self.members
    }

    /// Common cardinality, if all members share one.
    pub fn degree(&self) -> Option<usize> {
        let d = self.members[0].len();
        self.members.iter().all(|m| m.len() == d).then_some(d)
    }

    fn require_degree(&self) -> Result<usize> {
        self.degree().ok_or(Error::NotHomogeneous)
    }

    /// All `(d-1)`-subsets of members.
    pub fn lower_shadow(&self) -> Result<Vec<Face>> {
        self.require_degree()?;
        let set: HashSet<Face> = self.members.iter().flat_map(|m| m.boundary()).collect();
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// All `(d+1)`-supersets `F ∪ {v}` of members inside `[n]`.
    pub fn upper_shadow(&self) -> Result<Vec<Face>> {
        self.require_degree()?;
        let full = Face::full(self.n);
        let set: HashSet<Face> = self
            .members
            .iter()
            .flat_map(|m| full.difference(*m).vertices().map(move |v| m.with(v)))
            .collect();
        let mut out: Vec<Face> = set.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `δ_F(I) = ⟨C⟩`.
    pub fn facet_complex(&self) -> Complex {
        Complex::generated(self.n, self.members.iter().copied())
    }

    /// f-vector of the nonface complex `δ_N(I)`, counted by depth-first
    /// enumeration of the sets avoiding every member.
    pub fn nonface_f_vector(&self) -> FVector {
        fn walk(v: usize, n: usize, current: Face, members: &[Face], counts: &mut Vec<usize>) {
            if v > n {
                counts[current.len()] += 1;
                return;
            }
            walk(v + 1, n, current, members, counts);
            let next = current.with(v);
            // only members containing v can become newly contained
            if !members.iter().any(|m| m.contains(v) && m.is_subset_of(next)) {
                walk(v + 1, n, next, members, counts);
            }
        }
        let mut counts = vec![0usize; self.n + 1];
        walk(1, self.n, Face::EMPTY, &self.members, &mut counts);
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        FVector(counts)
    }

    /// `{ [n] \ u : u ∈ C }`, the generators of `x_1⋯x_n / u`.
    pub fn newton_dual(&self) -> Result<Clutter> {
        Clutter::new(self.n, self.members.iter().map(|m| m.complement(self.n)))
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FCheckReport {
    pub n: usize,
    pub generators: usize,
    /// Member cardinality when homogeneous.
    pub degree: Option<usize>,
    pub is_f: bool,
    pub is_l: bool,
    pub is_u: bool,
    pub count_ok: bool,
    pub missing_lower: Vec<Face>,
    pub missing_upper: Vec<Face>,
    pub fvec_nonface: Option<FVector>,
    pub fvec_facet: Option<FVector>,
}

fn face_list(faces: &[Face]) -> String {
    let parts: Vec<String> = faces
        .iter()
        .map(|f| {
            let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
            format!("{{{}}}", vs.join(","))
        })
        .collect();
    parts.join(" ")
}

/// Structured text; missing shadow elements are listed as vertex sets.
impl fmt::Display for FCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "# convention: {CONVENTION}")?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "generators: {}", self.generators)?;
        match self.degree {
            Some(d) => {
                writeln!(f, "degree: {d}")?;
                writeln!(f, "required-generators: {}", binomial(self.n, d) as f64 / 2.0)?;
            }
            None => writeln!(f, "degree: mixed")?,
        }
        writeln!(f, "L-set: {}", yn(self.is_l))?;
        writeln!(f, "U-set: {}", yn(self.is_u))?;
        writeln!(f, "count: {}", if self.count_ok { "ok" } else { "mismatch" })?;
        writeln!(f, "missing-lower: {}", face_list(&self.missing_lower))?;
        writeln!(f, "missing-upper: {}", face_list(&self.missing_upper))?;
        if let (Some(a), Some(b)) = (&self.fvec_nonface, &self.fvec_facet) {
            writeln!(f, "f-vector nonface: {a}")?;
            writeln!(f, "f-vector facet: {b}")?;
        }
        writeln!(f, "f-ideal: {}", yn(self.is_f))
    }
}

fn pure_check(c: &Clutter) -> Result<FCheckReport> {
    let d = c.require_degree()?;
    let full = Face::full(c.n);
    let lower: HashSet<Face> = c.lower_shadow()?.into_iter().collect();
    let upper: HashSet<Face> = c.upper_shadow()?.into_iter().collect();
    let missing_lower: Vec<Face> = full.subsets_of_size(d - 1).filter(|f| !lower.contains(f)).collect();
    let missing_upper: Vec<Face> = if d < c.n {
        full.subsets_of_size(d + 1).filter(|f| !upper.contains(f)).collect()
    } else {
        Vec::new()
    };
    let count_ok = 2 * c.members.len() as u128 == binomial(c.n, d);
    let is_l = missing_lower.is_empty();
    let is_u = missing_upper.is_empty();
    Ok(FCheckReport {
        n: c.n,
        generators: c.members.len(),
        degree: Some(d),
        is_f: is_l && is_u && count_ok,
        is_l,
        is_u,
        count_ok,
        missing_lower,
        missing_upper,
        fvec_nonface: None,
        fvec_facet: None,
    })
}

/// LU-set and counting test for a pure complex's facet clutter.
pub fn is_f_complex_pure(c: &Complex) -> Result<FCheckReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    pure_check(&Clutter::from_complex(c)?)
}

/// Direct comparison of the f-vectors of the nonface and facet complexes.
pub fn is_f_ideal_general(c: &Clutter) -> FCheckReport {
    let nonface = c.nonface_f_vector();
    let facet = c.facet_complex().f_vector();
    let mut report = match pure_check(c) {
        Ok(r) => r,
        Err(_) => FCheckReport {
            n: c.n,
            generators: c.members.len(),
            degree: None,
            is_f: false,
            is_l: false,
            is_u: false,
            count_ok: false,
            missing_lower: Vec::new(),
            missing_upper: Vec::new(),
            fvec_nonface: None,
            fvec_facet: None,
        },
    };
    report.is_f = nonface == facet;
    report.fvec_nonface = Some(nonface);
    report.fvec_facet = Some(facet);
    report
}

/// Outcome of checking the acyclicity theorem for minimal CM f-complexes on
/// one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremProbe {
    pub n: usize,
    pub dim: isize,
    pub field: FieldSpec,
    pub preconditions: Vec<(String, bool)>,
    pub dim_at_least_two: bool,
    pub vertex_bound: bool,
    pub acyclic: bool,
    pub acyclic_iff_balanced: bool,
}

impl MainTheoremProbe {
    pub fn applicable(&self) -> bool {
        self.preconditions.iter().all(|(_, ok)| *ok)
    }

    /// A violated conclusion on an instance meeting every hypothesis.
    pub fn falsified(&self) -> bool {
        self.applicable() && !(self.dim_at_least_two && self.vertex_bound && self.acyclic_iff_balanced)
    }
}

impl fmt::Display for MainTheoremProbe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# convention: {CONVENTION}")?;
        writeln!(f, "n: {}  dim: {}  field: {}", self.n, self.dim, self.field)?;
        for (name, ok) in &self.preconditions {
            writeln!(f, "precondition {name}: {ok}")?;
        }
        if !self.applicable() {
            return writeln!(f, "verdict: not applicable");
        }
        writeln!(f, "dim >= 2: {}", self.dim_at_least_two)?;
        writeln!(f, "2(dim+1) >= n: {}", self.vertex_bound)?;
        writeln!(f, "acyclic: {}", self.acyclic)?;
        writeln!(f, "acyclic <=> n = 2(dim+1): {}", self.acyclic_iff_balanced)?;
        writeln!(f, "verdict: {}", if self.falsified() { "FALSIFIED" } else { "consistent" })
    }
}

/// Evaluates the three conclusions for a pure minimal CM f-complex. Unmet
/// hypotheses are reported, not raised.
pub fn main_theorem_probe(c: &Complex, field: FieldSpec) -> MainTheoremProbe {
    let n = c.n();
    let dim = c.dim();
    let pure = c.is_pure();
    let f = pure && is_f_complex_pure(c).map(|r| r.is_f).unwrap_or(false);
    let cm = is_cm(c, field).is_cm;
    let minimal = cm && is_minimal_cm(c, field).unwrap_or(false);
    let preconditions = vec![
        ("pure".to_string(), pure),
        ("f-complex".to_string(), f),
        ("cohen-macaulay".to_string(), cm),
        ("minimal-cm".to_string(), minimal),
        ("at-least-two-facets".to_string(), c.num_facets() >= 2),
    ];
    let balanced = 2 * (dim + 1) == n as isize;
    let acyclic = is_acyclic(c, field);
    MainTheoremProbe {
        n,
        dim,
        field,
        preconditions,
        dim_at_least_two: dim >= 2,
        vertex_bound: 2 * (dim + 1) >= n as isize,
        acyclic,
        acyclic_iff_balanced: acyclic == balanced,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayerVietorisFacet {
    pub facet: Face,
    /// `H̃_*(Δ_F) ≅ H̃_*(Δ_F ∩ ⟨F⟩)` degree by degree.
    pub homology_equal: bool,
    /// `Δ_F ∩ ⟨F⟩` is pure of dimension `dim Δ - 1`.
    pub intersection_pure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayerVietorisReport {
    pub facets: Vec<MayerVietorisFacet>,
}

impl MayerVietorisReport {
    pub fn all_ok(&self) -> bool {
        self.facets.iter().all(|f| f.homology_equal && f.intersection_pure)
    }
}

/// For a minimal CM f-complex with `n = 2(dim + 1)`, compares the homology of
/// every facet deletion with that of its intersection with the facet.
pub fn mayer_vietoris_check(c: &Complex, field: FieldSpec) -> Result<MayerVietorisReport> {
    let probe = main_theorem_probe(c, field);
    if let Some((name, _)) = probe.preconditions.iter().find(|(_, ok)| !ok) {
        return Err(Error::Precondition(format!("{name} fails")));
    }
    if 2 * (c.dim() + 1) != c.n() as isize {
        return Err(Error::Precondition(format!("n = {} differs from 2(dim+1) = {}", c.n(), 2 * (c.dim() + 1))));
    }
    let facets = c
        .facets()
        .iter()
        .map(|&f| {
            let deleted = c.facet_deletion(f).expect("facet");
            let cut = c.intersection_with_facet(f).expect("facet");
            let homology_equal = reduced_homology(&deleted, field).same_as(&reduced_homology(&cut, field));
            let intersection_pure = cut.is_pure() && cut.dim() == c.dim() - 1;
            MayerVietorisFacet { facet: f, homology_equal, intersection_pure }
        })
        .collect();
    Ok(MayerVietorisReport { facets })
}

/// `Δ′ = ⟨[n]_d \ 𝔉(Δ)⟩` for a pure complex with facets of size `d`.
pub fn homogeneous_complement(c: &Complex) -> Result<Complex> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = c.facets()[0].len();
    let rest: Vec<Face> = Face::full(c.n()).subsets_of_size(d).filter(|f| !c.is_facet(*f)).collect();
    if rest.is_empty() {
        return Err(Error::Degenerate("facets exhaust [n]_d"));
    }
    Ok(Complex::generated(c.n(), maximal_faces(rest)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementProbe {
    pub complement: Complex,
    pub outcome: SearchOutcome<ShellingCertificate>,
}

/// Builds `Δ′` for a pure f-complex and searches for a shelling of it. This
/// gathers evidence only; it never decides the general question.
pub fn homogeneous_complement_probe(c: &Complex, budget: u64) -> Result<ComplementProbe> {
    let report = is_f_complex_pure(c)?;
    if !report.is_f {
        return Err(Error::Precondition("not an f-complex".into()));
    }
    let complement = homogeneous_complement(c)?;
    let outcome = find_shelling(&complement, budget)?;
    Ok(ComplementProbe { complement, outcome })
}
