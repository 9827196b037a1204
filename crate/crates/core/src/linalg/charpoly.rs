//! Division-free characteristic polynomial (Berkowitz).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Coefficients `c_0..c_n` of `det(lambda I - A)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CharPoly(#[serde(serialize_with = "crate::serial::big_strs")] pub Vec<BigInt>);

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.0[j]
    }

    /// Lowest index with a nonzero coefficient; `degree - lowest` is the rank
    /// of a diagonalizable matrix.
    pub fn lowest_nonzero(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).expect("leading coefficient is 1")
    }
}

/// Characteristic polynomial by Berkowitz' algorithm: only ring operations,
/// so the coefficients are exact integers.
pub fn char_poly(m: &ExactMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::Shape(format!("char_poly of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    // descending coefficients of the leading k x k minor's polynomial
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        // leading block is k x k, new row/column index k
        let row: Vec<&BigInt> = (0..k).map(|j| m.get(k, j)).collect();
        let mut v: Vec<BigInt> = (0..k).map(|i| m.get(i, k).clone()).collect();
        let mut t = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-m.get(k, k));
        for _ in 0..k {
            let dot: BigInt = row.iter().zip(&v).map(|(r, x)| *r * x).sum();
            t.push(-dot);
            let next: Vec<BigInt> =
                (0..k).map(|i| (0..k).filter(|&j| !m.get(i, j).is_zero()).map(|j| m.get(i, j) * &v[j]).sum()).collect();
            v = next;
        }
        // q = T p with T lower-triangular Toeplitz, (k+2) x (k+1)
        let mut q = vec![BigInt::zero(); k + 2];
        for (i, qi) in q.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                if !pj.is_zero() {
                    *qi += &t[i - j] * pj;
                }
            }
        }
        p = q;
    }
    p.reverse();
    Ok(CharPoly(p))
}
