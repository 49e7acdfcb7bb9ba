//! Exact rank and kernel computations for small integer matrices.
//!
//! Two independent elimination routes are provided:
//!
//! * fraction-free (Bareiss) elimination over any checked integer type,
//!   used for ranks over ℚ, with automatic widening `i64 → i128 → BigInt`
//!   when an intermediate minor overflows;
//! * Gauss-Jordan elimination over any exact field described by
//!   [`FieldOps`], used for GF(p) and for kernel bases.

use std::fmt;
use std::marker::PhantomData;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Num, One, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }
}

/// Plain-text integer grid, one row per line.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// Arithmetic of an exact field. The field may carry runtime data, such as
/// the modulus of GF(p), which is why the operations take `&self`.
pub trait FieldOps {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, x: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` is nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// A field whose elements are a statically known exact `num-traits` type,
/// e.g. `BigRational`.
pub struct Native<T>(PhantomData<T>);

impl<T> Native<T> {
    pub const fn new() -> Self {
        Native(PhantomData)
    }
}

impl<T> Default for Native<T> {
    fn default() -> Self {
        Native::new()
    }
}

impl<T> FieldOps for Native<T>
where
    T: Num + Clone + Neg<Output = T> + FromPrimitive + fmt::Debug,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn from_i64(&self, x: i64) -> T {
        T::from_i64(x).expect("integer embeds in the field")
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn inv(&self, a: &T) -> T {
        T::one() / a.clone()
    }
}

/// GF(p) with elements stored as canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime and below `2^31`; callers validate primality.
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat
        self.pow(*a, self.p - 2)
    }
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub fn rref<K: FieldOps>(k: &K, rows: &mut [Vec<K::Elem>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !k.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(&rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = k.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = k.sub(x, &k.mul(&factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn embed<K: FieldOps>(k: &K, m: &IntMatrix) -> Vec<Vec<K::Elem>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|&x| k.from_i64(x)).collect()).collect()
}

/// Rank over the field `k` by Gauss-Jordan elimination.
pub fn field_rank<K: FieldOps>(k: &K, m: &IntMatrix) -> usize {
    let mut rows = embed(k, m);
    rref(k, &mut rows).len()
}

/// A basis of the right kernel `{x : m x = 0}` over `k`, one vector per free
/// column in increasing column order. Each vector has a 1 at its free column.
pub fn kernel_basis<K: FieldOps>(k: &K, m: &IntMatrix) -> Vec<Vec<K::Elem>> {
    let mut rows = embed(k, m);
    let pivots = rref(k, &mut rows);
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); m.cols()];
        v[free] = k.one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !k.is_zero(&row[free]) {
                v[pc] = k.sub(&k.zero(), &row[free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// Fraction-free elimination rank over the integers, `None` if an
/// intermediate value overflows `T`.
pub fn bareiss_rank<T>(m: &IntMatrix) -> Option<usize>
where
    T: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv + FromPrimitive,
{
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<T>> = (0..rows)
        .map(|r| m.row(r).iter().map(|&x| T::from_i64(x)).collect::<Option<Vec<T>>>())
        .collect::<Option<_>>()?;
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                // every quotient is a minor of the input, so the division is exact
                let lhs = pivot.checked_mul(&row[j])?;
                let rhs = lead.checked_mul(&pivot_row[j])?;
                row[j] = lhs.checked_sub(&rhs)?.checked_div(&prev)?;
            }
            row[c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Exact rank over ℚ.
pub fn rational_rank(m: &IntMatrix) -> usize {
    bareiss_rank::<i64>(m)
        .or_else(|| bareiss_rank::<i128>(m))
        .or_else(|| bareiss_rank::<BigInt>(m))
        .expect("BigInt elimination cannot overflow")
}
