//! Faces as fixed-width vertex bitmasks.
//!
//! Vertex `v` (1-based) lives in bit `v - 1`, so a [`Face`] can hold any
//! subset of `[64]`. A squarefree monomial `x_F` is identified with its
//! support `F` everywhere in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex set `[n]`, `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from 1-based vertex labels.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// Parses the compact digit notation used for small examples, e.g. `"1345"`.
    /// Only vertices 1..=9 can be written this way.
    pub fn from_digits(s: &str) -> Result<Self> {
        let mut vs = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d > 0 => vs.push(d as usize),
                _ => return Err(Error::Parse { line: 0, message: format!("bad digit face {s:?}") }),
            }
        }
        Face::from_vertices(vs)
    }

    /// The full simplex `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        Face(1 << (v - 1))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// `[n] \ self`.
    pub fn complement(self, n: usize) -> Face {
        Face::full(n).difference(self)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest vertex label, or 0 for the empty face.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bitmask order.
    pub fn subsets_of_size(self, k: usize) -> SubsetsOfSize {
        let verts: Vec<usize> = self.vertices().collect();
        let done = k > verts.len();
        SubsetsOfSize { idx: (0..k).collect(), verts, done }
    }

    /// Codimension-one faces `self \ {v}`, in increasing order of the removed vertex.
    pub fn boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Lexicographic comparison of the sorted vertex sequences.
    pub fn lex_cmp(&self, other: &Face) -> Ordering {
        let mut a = self.vertices();
        let mut b = other.vertices();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

/// Faces are ordered lexicographically by their sorted vertex lists, so
/// `12 < 123 < 124 < 13`.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        if self.max_vertex() <= 9 {
            for v in self.vertices() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

pub struct SubsetsOfSize {
    verts: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for SubsetsOfSize {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        if self.done {
            return None;
        }
        let bits = self.idx.iter().fold(0u64, |acc, &i| acc | 1 << (self.verts[i] - 1));
        // advance to the next index combination
        let k = self.idx.len();
        let m = self.verts.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(Face(bits))
    }
}

/// Binomial coefficient as `u128`; exact for every argument this crate uses.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
