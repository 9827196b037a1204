//! Exterior derivatives, Dirac and Hodge operators of a graded chain complex.

use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, ExactMatrix};

/// Incidence sign of `x` in `y`.
///
/// Zero unless `x` is a codimension-one face of `y`; otherwise `(-1)^i` with
/// `i` the position in `y` of the vertex missing from `x`.
pub fn sign(x: &Simplex, y: &Simplex) -> i32 {
    if x.len() + 1 != y.len() || !x.is_face_of(y) {
        return 0;
    }
    let xv = x.vertices();
    let i = y.vertices().iter().position(|v| xv.binary_search(v).is_err()).unwrap();
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Betti numbers `b_0..b_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

/// A finite cochain complex `C_0 -> C_1 -> ... -> C_r` with integer
/// derivatives `d_k : C_k -> C_{k+1}` stored as `sizes[k+1] x sizes[k]`
/// matrices.
#[derive(Clone, Debug)]
pub struct GradedChain {
    sizes: Vec<usize>,
    d: Vec<ExactMatrix>,
}

impl GradedChain {
    /// Validates shapes and `d_{k+1} d_k = 0`.
    pub fn new(sizes: Vec<usize>, d: Vec<ExactMatrix>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidComplex("empty chain complex".into()));
        }
        if d.len() + 1 != sizes.len() {
            return Err(Error::Shape(format!("{} derivatives for {} grades", d.len(), sizes.len())));
        }
        for (k, m) in d.iter().enumerate() {
            if m.rows() != sizes[k + 1] || m.cols() != sizes[k] {
                return Err(Error::Shape(format!(
                    "d_{k} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    sizes[k + 1],
                    sizes[k]
                )));
            }
        }
        let chain = Self { sizes, d };
        chain.check_d_squared()?;
        Ok(chain)
    }

    /// Top grade `r`.
    pub fn top(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Grade sizes `f_0..f_r`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total dimension `n = sum f_k`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn d(&self, k: usize) -> Result<&ExactMatrix> {
        self.d.get(k).ok_or(Error::OutOfRange { index: k, max: self.d.len().saturating_sub(1) })
    }

    pub fn derivatives(&self) -> &[ExactMatrix] {
        &self.d
    }

    fn check_d_squared(&self) -> Result<()> {
        for k in 1..self.d.len() {
            if !self.d[k].mul(&self.d[k - 1])?.is_zero() {
                return Err(Error::Invariant(format!("d_{k} d_{} != 0", k - 1)));
            }
        }
        Ok(())
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.sizes
            .iter()
            .map(|s| {
                let o = acc;
                acc += s;
                o
            })
            .collect()
    }

    /// The symmetric `n x n` Dirac operator `d + d^*`.
    pub fn dirac(&self) -> ExactMatrix {
        let n = self.total();
        let off = self.offsets();
        let mut m = ExactMatrix::zeros(n, n);
        for (k, dk) in self.d.iter().enumerate() {
            for i in 0..dk.rows() {
                for j in 0..dk.cols() {
                    let v = dk.get(i, j);
                    if !v.is_zero() {
                        m.set(off[k + 1] + i, off[k] + j, v.clone());
                        m.set(off[k] + j, off[k + 1] + i, v.clone());
                    }
                }
            }
        }
        m
    }

    /// `d_k^T d_k`, for `k < r`.
    pub fn dirac_block(&self, k: usize) -> Result<ExactMatrix> {
        Ok(self.d(k)?.gram())
    }

    /// `d_k` stacked on `d_{k-1}^T`; its Gram matrix is `L_k`.
    pub fn hodge_factor(&self, k: usize) -> Result<ExactMatrix> {
        if k > self.top() {
            return Err(Error::OutOfRange { index: k, max: self.top() });
        }
        let f = self.sizes[k];
        let upper = if k < self.d.len() { self.d[k].clone() } else { ExactMatrix::zeros(0, f) };
        let lower = if k > 0 { self.d[k - 1].transpose() } else { ExactMatrix::zeros(0, f) };
        upper.vstack(&lower)
    }

    /// `L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`.
    pub fn hodge_block(&self, k: usize) -> Result<ExactMatrix> {
        Ok(self.hodge_factor(k)?.gram())
    }

    /// `F_k = d_k + d_{k-1}^*` as the `n x f_k` column block of the Dirac operator.
    pub fn dirac_columns(&self, k: usize) -> Result<ExactMatrix> {
        if k > self.top() {
            return Err(Error::OutOfRange { index: k, max: self.top() });
        }
        let off = self.offsets();
        let cols: Vec<usize> = (off[k]..off[k] + self.sizes[k]).collect();
        let rows: Vec<usize> = (0..self.total()).collect();
        Ok(self.dirac().submatrix(&rows, &cols))
    }

    /// Hodge Laplacian assembled block-diagonally from the `L_k`.
    pub fn hodge(&self) -> Result<ExactMatrix> {
        let blocks = (0..=self.top()).map(|k| self.hodge_block(k)).collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::block_diag(&blocks.iter().collect::<Vec<_>>()))
    }

    /// Ranks of `d_0..d_{r-1}`.
    pub fn ranks(&self) -> Vec<usize> {
        self.d.iter().map(rank).collect()
    }

    /// `b_k = f_k - rank d_k - rank d_{k-1}`.
    pub fn betti(&self) -> BettiVector {
        let r = self.ranks();
        BettiVector(
            self.sizes
                .iter()
                .enumerate()
                .map(|(k, &f)| f - r.get(k).copied().unwrap_or(0) - if k > 0 { r[k - 1] } else { 0 })
                .collect(),
        )
    }

    /// Removes single basis elements from grades, given as `(grade, index)`.
    pub fn remove_basis(&self, drop: &[(usize, usize)]) -> Result<Self> {
        let mut keep: Vec<Vec<usize>> = self.sizes.iter().map(|&s| (0..s).collect()).collect();
        for &(k, i) in drop {
            let grade = keep.get_mut(k).ok_or(Error::OutOfRange { index: k, max: self.top() })?;
            let pos = grade
                .iter()
                .position(|&x| x == i)
                .ok_or(Error::OutOfRange { index: i, max: self.sizes[k].saturating_sub(1) })?;
            grade.remove(pos);
        }
        if keep.iter().any(Vec::is_empty) {
            return Err(Error::Precondition("shaving leaves an empty grade".into()));
        }
        let d = self.d.iter().enumerate().map(|(k, m)| m.submatrix(&keep[k + 1], &keep[k])).collect();
        Ok(Self { sizes: keep.iter().map(Vec::len).collect(), d })
    }
}

/// The chain complex of a simplicial complex together with the complex.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub complex: SimplicialComplex,
    pub chain: GradedChain,
}

impl Deref for ChainData {
    type Target = GradedChain;

    fn deref(&self) -> &GradedChain {
        &self.chain
    }
}

/// Builds all `d_k` in the fixed simplex indexing.
pub fn build_chain(c: &SimplicialComplex) -> Result<ChainData> {
    if c.is_empty() {
        return Err(Error::InvalidComplex("empty complex has no chain data".into()));
    }
    let f = c.f_vector().0;
    let mut d = Vec::with_capacity(f.len() - 1);
    for k in 0..f.len() - 1 {
        let mut m = ExactMatrix::zeros(f[k + 1], f[k]);
        for (row, y) in c.simplices(k + 1).iter().enumerate() {
            for (i, face) in y.facets() {
                let col =
                    c.index_of(&face).ok_or_else(|| Error::InvalidComplex(format!("face {face} of {y} missing")))?;
                let v = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(row, col, v);
            }
        }
        d.push(m);
    }
    Ok(ChainData { complex: c.clone(), chain: GradedChain::new(f, d)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, complex_from_facets};
    use crate::graph::Graph;

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign(&s(&[5, 11]), &s(&[5, 7, 11])), -1);
        assert_eq!(sign(&s(&[5, 7]), &s(&[5, 7, 11])), 1);
        assert_eq!(sign(&s(&[7, 11]), &s(&[5, 7, 11])), 1);
        assert_eq!(sign(&s(&[1]), &s(&[2, 3])), 0);
        assert_eq!(sign(&s(&[1]), &s(&[1, 2, 3])), 0);
    }

    #[test]
    fn single_edge() {
        let cd = build_chain(&complex_from_facets(&[vec![1, 2]]).unwrap()).unwrap();
        assert_eq!(cd.d(0).unwrap(), &ExactMatrix::from_rows(&[[-1, 1]]));
        assert_eq!(cd.hodge_block(0).unwrap(), ExactMatrix::from_rows(&[[1, -1], [-1, 1]]));
        assert_eq!(cd.betti(), BettiVector(vec![1, 0]));
    }

    #[test]
    fn point_has_zero_dirac() {
        let cd = build_chain(&complex_from_facets(&[vec![0]]).unwrap()).unwrap();
        assert_eq!(cd.dirac(), ExactMatrix::zeros(1, 1));
        assert_eq!(cd.hodge_block(0).unwrap(), ExactMatrix::zeros(1, 1));
        assert!(cd.dirac_block(0).is_err());
    }

    #[test]
    fn hodge_is_dirac_squared_on_k4() {
        let k4 = Graph::new(vec![0, 1, 2, 3], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cd = build_chain(&clique_complex(&k4)).unwrap();
        let dd = cd.dirac();
        assert!(dd.is_symmetric());
        assert_eq!(dd.mul(&dd).unwrap(), cd.hodge().unwrap());
        for k in 0..=cd.top() {
            let f = cd.dirac_columns(k).unwrap();
            assert_eq!(f.gram(), cd.hodge_block(k).unwrap());
        }
        assert_eq!(cd.betti(), BettiVector(vec![1, 0, 0, 0]));
        assert_eq!(rank(cd.d(1).unwrap()), 3);
    }

    #[test]
    fn remove_basis_rejects_emptied_grade() {
        let cd = build_chain(&complex_from_facets(&[vec![0]]).unwrap()).unwrap();
        assert!(cd.remove_basis(&[(0, 0)]).is_err());
    }
}
