//! Reduced simplicial homology with field coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{binomial, Face};
use crate::linalg::{field_rank, kernel_basis, rational_rank, FieldOps, IntMatrix, PrimeField};
use crate::RationalField;

/// Coefficient field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Rank of an integer matrix after mapping it into this field.
    pub fn rank(&self, m: &IntMatrix) -> usize {
        match self {
            FieldSpec::Rationals => rational_rank(m),
            FieldSpec::Prime(p) => field_rank(&PrimeField::new(*p as u64), m),
        }
    }
}

/// Accepts `q` or `gf:<p>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:").or_else(|| s.strip_prefix("GF:")) {
            let p: u32 = p.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(s.to_string()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// `∂_i : C_i → C_{i-1}` with rows indexed by the `(i-1)`-faces and columns
/// by the `i`-faces, both in lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: isize,
    pub row_faces: Vec<Face>,
    pub col_faces: Vec<Face>,
    pub matrix: IntMatrix,
}

fn boundary_between(lower: &[Face], upper: &[Face]) -> IntMatrix {
    let index: std::collections::HashMap<Face, usize> =
        lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (c, f) in upper.iter().enumerate() {
        for (j, v) in f.vertices().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.set(index[&f.without(v)], c, sign);
        }
    }
    m
}

/// The boundary map `∂_i` of the augmented chain complex, `-1 <= i <= dim Δ`.
/// `∂_0` is the augmentation onto the empty face; `∂_{-1}` is the zero map
/// out of `C_{-1}`.
pub fn boundary_matrix(c: &Complex, i: isize) -> Result<BoundaryMatrix> {
    let dim = c.dim();
    if i < -1 || i > dim {
        return Err(Error::DimensionOutOfRange { dim: i, min: -1, max: dim });
    }
    let col_faces = c.faces_of_size((i + 1) as usize);
    let row_faces = if i == -1 { Vec::new() } else { c.faces_of_size(i as usize) };
    let matrix = boundary_between(&row_faces, &col_faces);
    Ok(BoundaryMatrix { degree: i, row_faces, col_faces, matrix })
}

/// `dim H̃_i` for `i = -1, 0, …, dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// Entry `k` holds `dim H̃_{k-1}`.
    pub dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.dims.get(k).copied()).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Highest stored degree.
    pub fn top_degree(&self) -> isize {
        self.dims.len() as isize - 2
    }

    /// Degree-wise equality, treating missing degrees as zero.
    pub fn same_as(&self, other: &HomologyProfile) -> bool {
        let top = self.top_degree().max(other.top_degree());
        (-1..=top).all(|i| self.get(i) == other.get(i))
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &h)| if k % 2 == 1 { h as i64 } else { -(h as i64) })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.dims.iter().enumerate().map(|(k, h)| format!("H{}={h}", k as isize - 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Ranks of `∂_0, …, ∂_dim` over `field`.
fn boundary_ranks(c: &Complex, field: FieldSpec) -> (Vec<usize>, Vec<usize>) {
    let top = (c.dim() + 1) as usize;
    let faces: Vec<Vec<Face>> = (0..=top).map(|k| c.faces_of_size(k)).collect();
    let counts: Vec<usize> = faces.iter().map(|f| f.len()).collect();
    // ranks[k] = rank of the map out of the faces of size k
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = field.rank(&boundary_between(&faces[k - 1], &faces[k]));
    }
    (counts, ranks)
}

/// Reduced homology of `c` over `field`.
pub fn reduced_homology(c: &Complex, field: FieldSpec) -> HomologyProfile {
    let (counts, ranks) = boundary_ranks(c, field);
    let dims = (0..counts.len()).map(|k| counts[k] - ranks[k] - ranks[k + 1]).collect();
    HomologyProfile { dims }
}

pub fn is_acyclic(c: &Complex, field: FieldSpec) -> bool {
    reduced_homology(c, field).is_zero()
}

/// Outcome of [`simplex_kernel_dim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelDim {
    pub n: usize,
    pub r: usize,
    /// `C(n-1, r+1)`.
    pub closed_form: u128,
    /// `dim ker ∂_r` by elimination over ℚ.
    pub nullity: usize,
    pub rank: usize,
}

/// Largest simplex for which the elimination cross-check is attempted.
pub const KERNEL_CHECK_MAX_N: usize = 16;

/// `dim ker ∂_r` of the full simplex on `[n]`, returned from the closed form
/// `C(n-1, r+1)` after checking it against an explicit elimination.
pub fn simplex_kernel_dim(n: usize, r: usize) -> Result<KernelDim> {
    if n == 0 || r >= n {
        return Err(Error::DimensionOutOfRange { dim: r as isize, min: 0, max: n as isize - 1 });
    }
    if n > KERNEL_CHECK_MAX_N {
        return Err(Error::Precondition(format!("n = {n} is too large for the elimination check")));
    }
    let simplex = Complex::simplex(n, Face::full(n))?;
    let bm = boundary_matrix(&simplex, r as isize)?;
    let rank = rational_rank(&bm.matrix);
    let nullity = bm.matrix.cols() - rank;
    let closed_form = binomial(n - 1, r + 1);
    if closed_form != nullity as u128 {
        return Err(Error::Inconsistent(format!(
            "ker ∂_{r} of the simplex on [{n}]: closed form {closed_form}, elimination {nullity}"
        )));
    }
    Ok(KernelDim { n, r, closed_form, nullity, rank })
}

fn first_kernel_support<K: FieldOps>(k: &K, m: &IntMatrix) -> Option<usize> {
    let basis = kernel_basis(k, m);
    let v = basis.first()?;
    v.iter().position(|x| !k.is_zero(x))
}

/// A top-dimensional face carrying a nonzero coefficient in a top cycle: the
/// lex-smallest face in the support of the first kernel basis vector of
/// `∂_top`.
pub fn top_cycle_facet(c: &Complex, field: FieldSpec) -> Result<Face> {
    let top = c.dim();
    if top < 0 {
        return Err(Error::TopHomologyVanishes);
    }
    let bm = boundary_matrix(c, top)?;
    let pos = match field {
        FieldSpec::Rationals => first_kernel_support(&RationalField::new(), &bm.matrix),
        FieldSpec::Prime(p) => first_kernel_support(&PrimeField::new(p as u64), &bm.matrix),
    };
    pos.map(|i| bm.col_faces[i]).ok_or(Error::TopHomologyVanishes)
}
