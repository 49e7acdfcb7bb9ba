//! Seeded random f-complexes for the complement-question sweep.

use fcomplex::face::binomial;
use fcomplex::fideal::is_f_complex_pure;
use fcomplex::{Complex, Face};
use rand::seq::SliceRandom;
use rand::Rng;

/// Draws `C(n, d) / 2` distinct `d`-subsets until the result is an f-complex.
/// Gives up after `tries` draws.
pub fn random_f_complex<R: Rng>(rng: &mut R, n: usize, d: usize, tries: usize) -> Option<Complex> {
    let total = binomial(n, d) as usize;
    if !total.is_multiple_of(2) || d == 0 || d >= n {
        return None;
    }
    let mut pool: Vec<Face> = Face::full(n).subsets_of_size(d).collect();
    for _ in 0..tries {
        pool.shuffle(rng);
        let c = Complex::from_facets(n, pool[..total / 2].iter().copied()).ok()?;
        if is_f_complex_pure(&c).map(|r| r.is_f).unwrap_or(false) {
            return Some(c);
        }
    }
    None
}

/// `(n, d)` pairs with `C(n, d)` even, for `n` in `4..=max_n` and `2 <= d <= n - 2`.
/// `dim` restricts `d` to `dim + 1`.
pub fn shapes(max_n: usize, dim: Option<usize>) -> Vec<(usize, usize)> {
    (4..=max_n)
        .flat_map(|n| (2..=n - 2).map(move |d| (n, d)))
        .filter(|&(n, d)| binomial(n, d).is_multiple_of(2))
        .filter(|&(_, d)| dim.is_none_or(|k| d == k + 1))
        .collect()
}
