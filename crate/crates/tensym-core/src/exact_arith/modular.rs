//! Probabilistic rank over random prime fields.
//!
//! A rational matrix reduced mod a prime `p` (defined whenever no
//! denominator vanishes mod `p`) has rank ≤ its rational rank, with
//! equality unless `p` divides a specific nonzero minor.  Taking the
//! maximum over several independent ~62-bit primes makes the failure
//! probability negligible while keeping every arithmetic operation a
//! single machine word wide.  The result is a certified lower bound on
//! the exact rank and, in practice, the exact rank itself.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use super::sparse::SparseMat;

/// Outcome of a modular rank computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularRank {
    /// Maximum rank observed over all sampled primes.
    pub rank: usize,
    /// The primes that were actually used.
    pub primes: Vec<u64>,
}

/// Rank of `mat` as the maximum over `n_primes` random ~62-bit primes
/// drawn deterministically from `seed`.  Primes dividing any denominator
/// in the matrix are discarded and resampled.
pub fn rank_modular_with_primes(mat: &SparseMat, seed: u64, n_primes: usize) -> ModularRank {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut rank = 0usize;
    let mut primes = Vec::with_capacity(n_primes);
    while primes.len() < n_primes {
        let p = sample_prime(&mut rng);
        match rank_mod_p(mat, p) {
            Some(r) => {
                rank = rank.max(r);
                primes.push(p);
            }
            None => continue, // p divides a denominator: resample
        }
    }
    ModularRank { rank, primes }
}

/// Rank of `mat` over GF(p), or `None` when some denominator ≡ 0 mod p.
fn rank_mod_p(mat: &SparseMat, p: u64) -> Option<usize> {
    // Reduce every row mod p, dropping entries that vanish.
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::with_capacity(mat.rows());
    for r in 0..mat.rows() {
        let mut row = Vec::with_capacity(mat.row(r).len());
        for (c, v) in mat.row(r) {
            let num = mod_big(v.numer(), p);
            let den = mod_big(v.denom(), p);
            if den == 0 {
                return None;
            }
            let e = mulmod(num, inv_mod(den, p), p);
            if e != 0 {
                row.push((*c, e));
            }
        }
        row.sort_by_key(|e| e.0);
        if !row.is_empty() {
            rows.push(row);
        }
    }
    // Bucketed forward elimination, mirroring the exact sparse RREF.
    use alloc::collections::BTreeMap;
    let mut buckets: BTreeMap<usize, Vec<Vec<(usize, u64)>>> = BTreeMap::new();
    for row in rows {
        buckets.entry(row[0].0).or_default().push(row);
    }
    let mut rank = 0usize;
    while let Some((&col, _)) = buckets.iter().next() {
        let mut candidates = buckets.remove(&col).unwrap();
        let mut best = 0;
        for (i, row) in candidates.iter().enumerate() {
            if row.len() < candidates[best].len() {
                best = i;
            }
        }
        let piv = candidates.remove(best);
        rank += 1;
        let piv_inv = inv_mod(piv[0].1, p);
        for row in candidates {
            let factor = mulmod(row[0].1, piv_inv, p);
            let reduced = row_sub_scaled_mod(&row, &piv, factor, p);
            if let Some(&(lead, _)) = reduced.first() {
                buckets.entry(lead).or_default().push(reduced);
            }
        }
    }
    Some(rank)
}

fn row_sub_scaled_mod(
    row: &[(usize, u64)],
    pivot: &[(usize, u64)],
    factor: u64,
    p: u64,
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some(&(ca, va)), Some(&(cb, vb))) => {
                use core::cmp::Ordering::*;
                match ca.cmp(&cb) {
                    Less => {
                        out.push((ca, va));
                        i += 1;
                    }
                    Greater => {
                        let v = p - mulmod(vb, factor, p);
                        if v != p {
                            out.push((cb, v % p));
                        }
                        j += 1;
                    }
                    Equal => {
                        let v = (va + p - mulmod(vb, factor, p)) % p;
                        if v != 0 {
                            out.push((ca, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            (Some(&(ca, va)), None) => {
                out.push((ca, va));
                i += 1;
            }
            (None, Some(&(cb, vb))) => {
                let v = p - mulmod(vb, factor, p);
                if v != p {
                    out.push((cb, v % p));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// `x mod p` for a (possibly huge, possibly negative) big integer.
fn mod_big(x: &num_bigint::BigInt, p: u64) -> u64 {
    let m = x.mod_floor(&num_bigint::BigInt::from(p));
    m.to_u64().expect("mod_floor result fits in u64")
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime via Fermat.
fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for u64 (the listed witness set decides
/// primality exactly for all 64-bit integers).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniform random prime in `[2^61, 2^62)`.
fn sample_prime(rng: &mut ChaCha12Rng) -> u64 {
    loop {
        let candidate = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_matches_small_sieve() {
        let primes_under_100 = [
            2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97,
        ];
        for n in 0..100u64 {
            assert_eq!(is_prime_u64(n), primes_under_100.contains(&n), "n = {n}");
        }
    }

    #[test]
    fn miller_rabin_on_large_composites() {
        // Carmichael numbers and prime squares that fool weak tests.
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(1105));
        assert!(!is_prime_u64(3215031751));
        assert!(!is_prime_u64(3474749660383));
        assert!(!is_prime_u64((1u64 << 61) - 2));
        assert!(is_prime_u64((1u64 << 61) - 1)); // Mersenne prime 2^61 - 1
    }

    #[test]
    fn powmod_agrees_with_naive() {
        let p = 1_000_000_007u64;
        let mut acc = 1u64;
        for e in 0..20u64 {
            assert_eq!(powmod(3, e, p), acc);
            acc = acc * 3 % p;
        }
    }
}
