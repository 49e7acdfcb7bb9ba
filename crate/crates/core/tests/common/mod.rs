//! Slow, independent reference implementations used as test oracles.
//! Faces are plain `u64` masks (bit `v - 1` for vertex `v`); nothing here
//! calls into the library.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

pub fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, v| m | 1 << (v - 1))
}

pub fn digits(s: &str) -> u64 {
    mask(&s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect::<Vec<_>>())
}

pub fn size(f: u64) -> usize {
    f.count_ones() as usize
}

fn subsets(f: u64) -> impl Iterator<Item = u64> {
    // all submasks, including 0 and f
    let mut s = f;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & f;
        }
        Some(out)
    })
}

pub fn all_faces(facets: &[u64]) -> BTreeSet<u64> {
    facets.iter().flat_map(|&f| subsets(f)).collect()
}

pub fn maximal(faces: &BTreeSet<u64>) -> Vec<u64> {
    let mut v: Vec<u64> = faces.iter().copied().filter(|&f| !faces.iter().any(|&g| g != f && g & f == f)).collect();
    v.sort();
    v
}

pub fn f_vector(facets: &[u64]) -> Vec<usize> {
    let faces = all_faces(facets);
    let top = faces.iter().map(|&f| size(f)).max().unwrap_or(0);
    let mut out = vec![0; top + 1];
    for f in faces {
        out[size(f)] += 1;
    }
    out
}

/// Entries: `None` means ℚ, `Some(p)` means GF(p).
pub type Field = Option<u64>;

fn rank_q(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] / &pivot;
                for j in c..cols {
                    let sub = &factor * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], p - 2, p);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c] * inv % p;
                for j in c..cols {
                    m[i][j] = (m[i][j] + p * p - factor * m[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Signed boundary matrix from faces of size `k` (columns) to size `k - 1` (rows).
pub fn boundary(rows: &[u64], cols: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, &f) in cols.iter().enumerate() {
        let mut pos = 0;
        for bit in 0..64 {
            if f >> bit & 1 == 1 {
                let g = f & !(1 << bit);
                m[index[&g]][j] = if pos % 2 == 0 { 1 } else { -1 };
                pos += 1;
            }
        }
    }
    m
}

pub fn rank(m: &[Vec<i64>], field: Field) -> usize {
    match field {
        None => rank_q(m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()),
        Some(p) => rank_p(m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect(), p),
    }
}

/// `betti[k]` = dim H̃_{k-1}; length is max face size + 1.
pub fn betti(facets: &[u64], field: Field) -> Vec<usize> {
    let faces = all_faces(facets);
    let top = faces.iter().map(|&f| size(f)).max().unwrap_or(0);
    let by_size: Vec<Vec<u64>> = (0..=top + 1).map(|k| faces.iter().copied().filter(|&f| size(f) == k).collect()).collect();
    // ranks[k] = rank of the boundary from size k to size k - 1
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|k| if k == 0 || by_size[k].is_empty() { 0 } else { rank(&boundary(&by_size[k - 1], &by_size[k]), field) })
        .collect();
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

pub fn betti_at(b: &[usize], degree: isize) -> usize {
    b.get((degree + 1) as usize).copied().unwrap_or(0)
}

pub fn link(facets: &[u64], sigma: u64) -> Vec<u64> {
    let faces: BTreeSet<u64> = facets.iter().filter(|&&f| f & sigma == sigma).map(|&f| f & !sigma).collect();
    maximal(&faces)
}

pub fn dim(facets: &[u64]) -> isize {
    facets.iter().map(|&f| size(f) as isize).max().unwrap_or(0) - 1
}

/// Reisner's criterion checked on every face, with no shortcuts.
pub fn is_cm(facets: &[u64], field: Field) -> bool {
    all_faces(facets).into_iter().all(|s| {
        let lk = link(facets, s);
        let b = betti(&lk, field);
        (-1..dim(&lk)).all(|i| betti_at(&b, i) == 0)
    })
}

pub fn skeleton(facets: &[u64], i: isize) -> Vec<u64> {
    let faces: BTreeSet<u64> = all_faces(facets).into_iter().filter(|&f| (size(f) as isize) <= i + 1).collect();
    maximal(&faces)
}

pub fn depth(facets: &[u64], field: Field) -> usize {
    let best = (0..=dim(facets)).filter(|&i| is_cm(&skeleton(facets, i), field)).max().unwrap_or(-1);
    (best + 1) as usize
}

/// `⟨prefix⟩ ∩ ⟨f⟩` is pure with every facet of size `|f| - 1`.
pub fn step_ok(prefix: &[u64], f: u64) -> bool {
    let cut: BTreeSet<u64> = prefix.iter().flat_map(|&g| subsets(g & f)).collect();
    let m = maximal(&cut);
    !prefix.is_empty() && m.iter().all(|&g| size(g) + 1 == size(f))
}

pub fn is_shelling(order: &[u64]) -> bool {
    (1..order.len()).all(|i| step_ok(&order[..i], order[i]))
}

/// Exhaustive search for an order of `facets` accepted step by step by `ok`.
pub fn search_order(facets: &[u64], ok: &mut dyn FnMut(&[u64], u64) -> bool) -> Option<Vec<u64>> {
    fn go(
        facets: &[u64],
        used: u64,
        order: &mut Vec<u64>,
        dead: &mut HashSet<u64>,
        ok: &mut dyn FnMut(&[u64], u64) -> bool,
    ) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for (i, &f) in facets.iter().enumerate() {
            if used >> i & 1 == 0 && ok(order, f) {
                order.push(f);
                if go(facets, used | 1 << i, order, dead, ok) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(used);
        false
    }
    let mut order = Vec::new();
    go(facets, 0, &mut order, &mut HashSet::new(), ok).then_some(order)
}

pub fn shellable(facets: &[u64]) -> bool {
    search_order(facets, &mut |p, f| p.is_empty() || step_ok(p, f)).is_some()
}

/// f-vectors of the facet complex and the nonface complex of a clutter,
/// counted over all `2^n` subsets.
pub fn f_ideal(n: usize, gens: &[u64]) -> bool {
    let mut facet = vec![0usize; n + 1];
    let mut nonface = vec![0usize; n + 1];
    for s in 0u64..1 << n {
        if gens.iter().any(|&g| s & g == s) {
            facet[size(s)] += 1;
        }
        if !gens.iter().any(|&g| g & !s == 0) {
            nonface[size(s)] += 1;
        }
    }
    facet == nonface
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

