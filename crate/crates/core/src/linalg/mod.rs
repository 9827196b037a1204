//! Exact linear algebra over the integers and rationals.

mod charpoly;
mod elim;
mod matrix;
mod modular;

pub use charpoly::{char_poly, CharPoly};
pub use elim::{pivots, rank, Pivots};
pub use matrix::ExactMatrix;
pub use modular::det;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Pseudo-determinant read off the characteristic polynomial: the signed
/// lowest nonzero coefficient. The zero and the empty matrix give 1.
pub fn pseudo_det_int(m: &ExactMatrix) -> Result<BigInt> {
    let p = char_poly(m)?;
    let low = p.lowest_nonzero();
    let n = p.degree();
    let c = p.coeff(low).clone();
    Ok(if (n - low) % 2 == 1 { -c } else { c })
}

/// [`pseudo_det_int`] as a rational.
pub fn pseudo_det(m: &ExactMatrix) -> Result<BigRational> {
    pseudo_det_int(m).map(BigRational::from_integer)
}

/// Pseudo-determinant of a square rational matrix given as rows.
///
/// Denominators are cleared with their lcm `c`; the result is
/// `pdet(c M) / c^rank`.
pub fn pseudo_det_rational(rows: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("rational pseudo-determinant needs a square matrix".into()));
    }
    let mut c = BigInt::one();
    for x in rows.iter().flatten() {
        c = c.lcm(x.denom());
    }
    let data: Vec<BigInt> = rows.iter().flatten().map(|x| x.numer() * (&c / x.denom())).collect();
    let scaled = ExactMatrix::from_vec(n, n, data)?;
    let p = char_poly(&scaled)?;
    let low = p.lowest_nonzero();
    let k = n - low;
    let mut v = p.coeff(low).clone();
    if k % 2 == 1 {
        v = -v;
    }
    Ok(BigRational::new(v, num_traits::pow(c, k)))
}

/// `Det(A^T A)` through a rank factorization.
///
/// With pivot rows `R` and columns `S` of `A`,
/// `Det(A^T A) = det(A_S^T A_S) det(A_R A_R^T) / det(A[R,S])^2`,
/// and each determinant is computed exactly by Chinese remaindering.
pub fn gram_pseudo_det(a: &ExactMatrix) -> Result<BigInt> {
    let p = pivots(a);
    if p.rank() == 0 {
        return Ok(BigInt::one());
    }
    let all_rows: Vec<usize> = (0..a.rows()).collect();
    let all_cols: Vec<usize> = (0..a.cols()).collect();
    let cols = a.submatrix(&all_rows, &p.cols);
    let rows = a.submatrix(&p.rows, &all_cols);
    let core = det(&a.submatrix(&p.rows, &p.cols))?;
    let num = modular::det_gram(&cols.gram())? * modular::det_gram(&rows.gram_rows())?;
    let den = &core * &core;
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || !q.is_positive() {
        return Err(Error::Invariant("rank factorization produced a non-integral Gram determinant".into()));
    }
    Ok(q)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Both sides of the pseudo-determinant Cauchy-Binet identity
/// `Det(F^T G) = sum_P det(F_P) det(G_P)`, where `P` runs over pairs of
/// `k`-row and `k`-column subsets and `k = rank(F^T G)`.
pub fn cauchy_binet_check(f: &ExactMatrix, g: &ExactMatrix) -> Result<(BigRational, BigRational)> {
    if f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(Error::Shape(format!("{}x{} vs {}x{}", f.rows(), f.cols(), g.rows(), g.cols())));
    }
    if f.cols() > 8 || f.rows() > 8 {
        return Err(Error::TooLarge("Cauchy-Binet enumeration is limited to 8x8".into()));
    }
    let prod = f.transpose().mul(g)?;
    let p = char_poly(&prod)?;
    let k = p.degree() - p.lowest_nonzero();
    let lhs = pseudo_det(&prod)?;
    if k == 0 {
        return Ok((lhs, BigRational::one()));
    }
    let mut rhs = BigInt::zero();
    for rs in subsets(f.rows(), k) {
        for cs in subsets(f.cols(), k) {
            let a = det(&f.submatrix(&rs, &cs))?;
            if a.is_zero() {
                continue;
            }
            rhs += a * det(&g.submatrix(&rs, &cs))?;
        }
    }
    Ok((lhs, BigRational::from_integer(rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn pseudo_det_conventions() {
        assert_eq!(pseudo_det(&ExactMatrix::zeros(3, 3)).unwrap(), int(1));
        assert_eq!(pseudo_det(&ExactMatrix::zeros(0, 0)).unwrap(), int(1));
        assert_eq!(pseudo_det(&ExactMatrix::diagonal(&[2, 3, 0])).unwrap(), int(6));
        assert_eq!(pseudo_det(&ExactMatrix::diagonal(&[-2, 3, 0])).unwrap(), int(-6));
        assert!(pseudo_det(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn cycle_kirchhoff_pseudo_det_is_n_squared() {
        for n in 3..9i64 {
            let mut rows = vec![vec![0i64; n as usize]; n as usize];
            for i in 0..n as usize {
                rows[i][i] = 2;
                rows[i][(i + 1) % n as usize] = -1;
                rows[(i + 1) % n as usize][i] = -1;
            }
            assert_eq!(pseudo_det(&ExactMatrix::from_rows(&rows)).unwrap(), int(n * n));
        }
    }

    #[test]
    fn gram_route_matches_char_poly_route() {
        let a = ExactMatrix::from_rows(&[[1, -1, 0, 2], [0, 1, -1, 1], [1, 0, -1, 3], [2, 1, 0, 0]]);
        assert_eq!(BigRational::from_integer(gram_pseudo_det(&a).unwrap()), pseudo_det(&a.gram()).unwrap());
        assert_eq!(gram_pseudo_det(&ExactMatrix::zeros(2, 2)).unwrap(), BigInt::one());
    }

    #[test]
    fn rational_pseudo_det_clears_denominators() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let m = vec![vec![half.clone(), int(0)], vec![int(0), int(0)]];
        assert_eq!(pseudo_det_rational(&m).unwrap(), half);
        let m = vec![vec![int(3), int(0)], vec![int(0), half.clone()]];
        assert_eq!(pseudo_det_rational(&m).unwrap(), int(3) * half);
    }

    #[test]
    fn cauchy_binet_examples() {
        let c3 = ExactMatrix::from_rows(&[[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]);
        let (l, r) = cauchy_binet_check(&c3, &c3).unwrap();
        assert_eq!((l.clone(), r), (int(9), int(9)));
        let p3 = ExactMatrix::from_rows(&[[-1, 1, 0], [0, -1, 1]]);
        assert_eq!(cauchy_binet_check(&p3, &p3).unwrap(), (int(3), int(3)));
        let z = ExactMatrix::zeros(2, 2);
        assert_eq!(cauchy_binet_check(&z, &z).unwrap(), (int(1), int(1)));
        assert!(cauchy_binet_check(&p3, &c3).is_err());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
