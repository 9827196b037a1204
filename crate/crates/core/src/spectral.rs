//! Floating-point spectra, zeta functions and the Barycentric refinement operator.

use std::fmt::Write as _;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
pub use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::chain::{build_chain, GradedChain};
use crate::complex::clique_complex;
use crate::constructors::barycentric_refinement;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{rank, ExactMatrix};
use crate::serial::rat_strs;
use crate::topology::{is_sphere, Verdict, DEFAULT_BUDGET};
use crate::torsion::torsion_dirac;

/// Eigenvalues below this magnitude may only appear as exact zeros.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Sorted eigenvalues of a symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Nullity, taken from the exact rank.
    pub zero_count: usize,
}

impl Spectrum {
    pub fn nonzero(&self) -> impl Iterator<Item = f64> + '_ {
        self.eigenvalues.iter().copied().filter(|x| *x != 0.0)
    }
}

pub fn spectrum(m: &ExactMatrix) -> Result<Spectrum> {
    if !m.is_square() || *m != m.transpose() {
        return Err(Error::Shape("spectrum needs a symmetric matrix".into()));
    }
    let n = m.rows();
    let zero_count = n - rank(m);
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), zero_count });
    }
    let dm = DMatrix::from_row_slice(n, n, &m.to_f64());
    let mut ev: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    for x in &mut ev[..zero_count] {
        *x = 0.0;
    }
    if let Some(x) = ev[zero_count..].iter().find(|x| x.abs() <= ZERO_THRESHOLD) {
        return Err(Error::Invariant(format!(
            "eigenvalue {x:e} is numerically zero but the exact rank says otherwise"
        )));
    }
    ev.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues: ev, zero_count })
}

/// Spectra of the blocks `D_k^* D_k = d_k^T d_k`, one per derivative.
pub fn block_spectra(c: &GradedChain) -> Result<Vec<Spectrum>> {
    c.derivatives()
        .iter()
        .map(|d| if d.rows() < d.cols() { spectrum(&d.gram_rows()) } else { spectrum(&d.gram()) })
        .collect()
}

fn alternate<T: std::ops::Neg<Output = T>>(k: usize, x: T) -> T {
    if k.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// `zeta(s) = sum_k (-1)^k sum_{lambda != 0} lambda^{-s}` over the block spectra.
pub fn dirac_zeta(c: &GradedChain, s: f64) -> Result<f64> {
    Ok(block_spectra(c)?
        .iter()
        .enumerate()
        .map(|(k, sp)| alternate(k, sp.nonzero().map(|l| l.powf(-s)).sum::<f64>()))
        .sum())
}

pub fn dirac_zeta_complex(c: &GradedChain, s: Complex64) -> Result<Complex64> {
    let mut z = Complex64::zero();
    for (k, sp) in block_spectra(c)?.iter().enumerate() {
        let part: Complex64 = sp.nonzero().map(|l| (-s * l.ln()).exp()).sum();
        z += alternate(k, part);
    }
    Ok(z)
}

/// `zeta'(0) = -sum_k (-1)^k sum_{lambda != 0} ln lambda`.
pub fn zeta_derivative_at_zero(c: &GradedChain) -> Result<f64> {
    Ok(-block_spectra(c)?
        .iter()
        .enumerate()
        .map(|(k, sp)| alternate(k, sp.nonzero().map(f64::ln).sum::<f64>()))
        .sum::<f64>())
}

/// `exp(-zeta'(0))`, the floating-point torsion.
pub fn zeta_torsion(c: &GradedChain) -> Result<f64> {
    Ok((-zeta_derivative_at_zero(c)?).exp())
}

/// `s,zeta(s)` lines for the given points, with a header.
pub fn zeta_csv(c: &GradedChain, points: &[f64]) -> Result<String> {
    let spectra = block_spectra(c)?;
    let mut out = String::from("s,zeta\n");
    for &s in points {
        let z: f64 =
            spectra.iter().enumerate().map(|(k, sp)| alternate(k, sp.nonzero().map(|l| l.powf(-s)).sum::<f64>())).sum();
        writeln!(out, "{s},{z}").expect("writing to a String");
    }
    Ok(out)
}

/// `A_{j,k} = (j+1)! S(k+1, j+1)`, mapping f-vectors to f-vectors of the
/// Barycentric refinement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricOperator(pub ExactMatrix);

impl BarycentricOperator {
    pub fn dimension(&self) -> usize {
        self.0.rows() - 1
    }

    /// Applies the operator to an f-vector, padding it with zeros up to `d + 1`.
    pub fn apply(&self, f: &[usize]) -> Result<Vec<BigInt>> {
        let n = self.0.rows();
        if f.len() > n {
            return Err(Error::Shape(format!("f-vector of length {} for a dimension {} operator", f.len(), n - 1)));
        }
        Ok((0..n).map(|j| f.iter().enumerate().map(|(k, &x)| self.0.get(j, k) * BigInt::from(x)).sum()).collect())
    }
}

/// Stirling numbers of the second kind `S(n, k)` for `n, k <= m`.
fn stirling2(m: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); m + 1]; m + 1];
    s[0][0] = BigInt::one();
    for n in 1..=m {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

pub fn barycentric_operator(d: usize) -> BarycentricOperator {
    let s = stirling2(d + 1);
    let mut m = ExactMatrix::zeros(d + 1, d + 1);
    let mut fact = BigInt::one();
    for j in 0..=d {
        fact *= j + 1;
        for k in j..=d {
            m.set(j, k, &fact * &s[k + 1][j + 1]);
        }
    }
    BarycentricOperator(m)
}

/// Torsions along repeated Barycentric refinement of a sphere, and the value
/// `v_0 / v_d` they approach, read off the Perron eigenvector of the operator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BarycentricLimit {
    #[serde(serialize_with = "rat_strs")]
    pub torsions: Vec<BigRational>,
    pub perron_ratio: f64,
}

/// Refinement grows by a factor of about `(d+1)!` per step.
pub fn max_refinement_steps(d: usize) -> usize {
    if d == 0 {
        16
    } else {
        (6 / d).max(1)
    }
}

/// `v_0 / v_d` for the eigenvector of the top eigenvalue `(d+1)!`, by power iteration.
pub fn perron_ratio(op: &BarycentricOperator) -> f64 {
    let n = op.0.rows();
    let a = op.0.to_f64();
    let mut v = vec![1.0; n];
    for _ in 0..500 {
        let mut w: Vec<f64> = (0..n).map(|j| (0..n).map(|k| a[j * n + k] * v[k]).sum()).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        w.iter_mut().for_each(|x| *x /= norm);
        v = w;
    }
    v[0] / v[n - 1]
}

pub fn barycentric_limit(g: &Graph, d: usize, steps: usize) -> Result<BarycentricLimit> {
    if d % 2 == 1 {
        return Err(Error::Precondition(format!(
            "refinement limit is only finite for even-dimensional spheres; the torsion of a {d}-sphere diverges"
        )));
    }
    let cap = max_refinement_steps(d);
    if steps > cap {
        return Err(Error::TooLarge(format!("{steps} refinement steps in dimension {d} (at most {cap})")));
    }
    match is_sphere(g, d as i64, DEFAULT_BUDGET) {
        Verdict::Yes => {}
        Verdict::No => return Err(Error::Precondition(format!("graph is not a {d}-sphere"))),
        Verdict::Unknown => return Err(Error::Precondition("sphere check exhausted its budget".into())),
    }
    let mut torsions = Vec::with_capacity(steps + 1);
    let mut c = clique_complex(g);
    for step in 0..=steps {
        torsions.push(torsion_dirac(&build_chain(&c)?.chain)?);
        if step < steps {
            c = clique_complex(&barycentric_refinement(&c));
        }
    }
    Ok(BarycentricLimit { torsions, perron_ratio: perron_ratio(&barycentric_operator(d)) })
}

/// `|x - y| / |y|`.
pub fn relative_error(x: f64, y: &BigRational) -> f64 {
    let y = y.to_f64().unwrap_or(f64::NAN);
    (x - y).abs() / y.abs()
}
