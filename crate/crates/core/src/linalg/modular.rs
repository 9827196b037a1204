//! Exact integer determinants by Chinese remaindering over word-size primes.
//!
//! The determinant is recovered from its residues modulo enough primes that
//! their product exceeds twice the Hadamard bound, so the result is exact.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

const PRIME_POOL: usize = 4096;

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    // deterministic for n < 3.3e24
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^31, so products of residues fit in a u64.
pub(crate) fn primes() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_POOL);
        let mut n = (1u64 << 31) - 1;
        while out.len() < PRIME_POOL {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Determinant modulo a prime `p < 2^31` of a row-major `n x n` residue matrix.
fn det_mod_p(mut a: Vec<u64>, n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            det = (p - det) % p;
        }
        let pv = a[col * n + col];
        det = det * pv % p;
        let inv = inv_mod(pv, p);
        let span: Vec<usize> = (col..n).filter(|&j| a[col * n + j] != 0).collect();
        for r in col + 1..n {
            let f = a[r * n + col] * inv % p;
            if f == 0 {
                continue;
            }
            let g = p - f;
            let (top, bottom) = a.split_at_mut(r * n);
            let pivot_row = &top[col * n..col * n + n];
            let row = &mut bottom[..n];
            if span.len() * 4 < n - col {
                for &j in &span {
                    row[j] = (row[j] + g * pivot_row[j]) % p;
                }
            } else {
                for j in col..n {
                    row[j] = (row[j] + g * pivot_row[j]) % p;
                }
            }
        }
    }
    det
}

fn residues(m: &ExactMatrix, small: Option<&[i64]>, p: u64) -> Vec<u64> {
    match small {
        Some(v) => v.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect(),
        None => {
            let bp = BigInt::from(p);
            m.entries().iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect()
        }
    }
}

/// log2 of the Hadamard bound `prod_i ||row_i||`.
fn hadamard_bits(m: &ExactMatrix) -> f64 {
    let mut bits = 0.0;
    for i in 0..m.rows() {
        let mut s = 0.0f64;
        let mut shift = 0.0f64;
        for x in m.row(i) {
            if x.is_zero() {
                continue;
            }
            let b = x.bits();
            if b > 60 {
                // scale huge entries so the sum stays finite
                let e = (b - 60) as f64;
                shift = shift.max(e);
                let v = (x.abs() >> (b - 60)).to_f64().unwrap();
                s += (v * v) * 2f64.powf(2.0 * (e - shift));
            } else {
                let v = x.to_f64().unwrap();
                s += v * v * 2f64.powf(-2.0 * shift);
            }
        }
        if s > 0.0 {
            bits += 0.5 * s.log2() + shift;
        }
    }
    bits
}

/// Exact determinant of a square integer matrix.
pub fn det(m: &ExactMatrix) -> Result<BigInt> {
    det_with_bound(m, hadamard_bits)
}

/// Determinant of a Gram matrix `A^T A`, bounded by the product of its
/// diagonal instead of the row norms.
pub(crate) fn det_gram(g: &ExactMatrix) -> Result<BigInt> {
    det_with_bound(g, |g| (0..g.rows()).map(|i| g.get(i, i).bits().max(1) as f64).sum())
}

fn det_with_bound(m: &ExactMatrix, bound: impl Fn(&ExactMatrix) -> f64) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Shape(format!("det of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    if (0..n).any(|i| m.row(i).iter().all(Zero::is_zero)) {
        return Ok(BigInt::zero());
    }
    let small: Option<Vec<i64>> = m.entries().iter().map(|x| x.to_i64()).collect();
    let need = bound(m) + 2.0;
    let mut count = 0;
    let mut have = 0.0;
    while have <= need {
        let Some(&p) = primes().get(count) else {
            return Err(Error::TooLarge(format!("determinant needs more than {PRIME_POOL} primes")));
        };
        have += (p as f64).log2();
        count += 1;
    }
    let used = &primes()[..count];
    let work = |p: u64| det_mod_p(residues(m, small.as_deref(), p), n, p);
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(count);
    let rs: Vec<u64> = if threads > 1 && n >= 64 {
        let chunk = count.div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> =
                used.chunks(chunk).map(|ps| s.spawn(move || ps.iter().map(|&p| work(p)).collect::<Vec<_>>())).collect();
            handles.into_iter().flat_map(|h| h.join().expect("determinant worker panicked")).collect()
        })
    } else {
        used.iter().map(|&p| work(p)).collect()
    };
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    for (&p, &r) in used.iter().zip(&rs) {
        // Garner step: value += modulus * ((r - value) * modulus^-1 mod p)
        let bp = BigInt::from(p);
        let cur = value.mod_floor(&bp).to_u64().unwrap();
        let minv = inv_mod(modulus.mod_floor(&bp).to_u64().unwrap(), p);
        let t = (r + p - cur) % p * minv % p;
        value += &modulus * t;
        modulus *= p;
    }
    let half: BigInt = &modulus >> 1;
    if value > half {
        value -= &modulus;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_is_prime_and_descending() {
        let p = primes();
        assert_eq!(p[0], 2147483647);
        assert!(p.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime_u64(2147483649));
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&ExactMatrix::from_rows(&[[2, 1], [1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(det(&ExactMatrix::from_rows(&[[0, 1], [1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det(&ExactMatrix::from_rows(&[[1, 2], [2, 4]])).unwrap(), BigInt::zero());
        assert_eq!(det(&ExactMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn large_entries_cross_many_primes() {
        let big = BigInt::from(10).pow(40);
        let mut m = ExactMatrix::identity(3);
        m.set(0, 0, big.clone());
        m.set(1, 1, -big.clone());
        m.set(2, 2, BigInt::from(7));
        m.set(0, 2, BigInt::from(5));
        assert_eq!(det(&m).unwrap(), -(big.clone() * big) * 7);
    }
}
