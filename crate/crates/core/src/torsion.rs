//! Squared analytic torsion and the super determinants around it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chain::{ChainData, GradedChain};
use crate::error::{Error, Result};
use crate::linalg::{gram_pseudo_det, pseudo_det_rational};
use crate::serial::{big_str, big_strs, rat_str};

/// Everything the torsion command reports about one chain complex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorsionReport {
    #[serde(serialize_with = "rat_str")]
    pub a_hodge: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub a_dirac: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub sdet_hodge: BigRational,
    #[serde(serialize_with = "big_str")]
    pub det_dirac_abs: BigInt,
    #[serde(serialize_with = "big_strs")]
    pub hodge_dets: Vec<BigInt>,
    #[serde(serialize_with = "big_strs")]
    pub dirac_dets: Vec<BigInt>,
}

impl TorsionReport {
    /// Checks the identities every report must satisfy.
    pub fn verify(&self) -> Result<()> {
        if self.a_hodge != self.a_dirac {
            return Err(Error::Invariant(format!("Hodge form {} != Dirac form {}", self.a_hodge, self.a_dirac)));
        }
        if !self.sdet_hodge.is_one() {
            return Err(Error::Invariant(format!("SDet(L) = {}", self.sdet_hodge)));
        }
        let det = BigRational::from_integer(self.det_dirac_abs.clone());
        if !is_rational_square(&(&det * &self.a_dirac)) || !is_rational_square(&(&det / &self.a_dirac)) {
            return Err(Error::Invariant("Det(D) A or Det(D)/A is not a square".into()));
        }
        Ok(())
    }
}

/// `Det(L_k)` for `k = 0..=r`.
pub fn hodge_dets(c: &GradedChain) -> Result<Vec<BigInt>> {
    (0..=c.top()).map(|k| gram_pseudo_det(&c.hodge_factor(k)?)).collect()
}

/// `Det(D_k)` for `k = 0..r-1`.
pub fn dirac_dets(c: &GradedChain) -> Result<Vec<BigInt>> {
    c.derivatives().iter().map(gram_pseudo_det).collect()
}

fn signed_power(base: &BigInt, e: i64) -> BigRational {
    let b = BigRational::from_integer(base.clone());
    let p = num_traits::pow(b, e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn alt(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `prod_k Det(L_k)^{k (-1)^{k+1}}` from precomputed Hodge determinants.
pub fn torsion_from_hodge(dets: &[BigInt]) -> BigRational {
    dets.iter().enumerate().fold(BigRational::one(), |acc, (k, d)| acc * signed_power(d, -(k as i64) * alt(k)))
}

/// `prod_k Det(D_k)^{(-1)^k}` from precomputed Dirac determinants.
pub fn torsion_from_dirac(dets: &[BigInt]) -> BigRational {
    dets.iter().enumerate().fold(BigRational::one(), |acc, (k, d)| acc * signed_power(d, alt(k)))
}

/// Squared analytic torsion from the Hodge blocks.
pub fn torsion_hodge(c: &GradedChain) -> Result<BigRational> {
    Ok(torsion_from_hodge(&hodge_dets(c)?))
}

/// Squared analytic torsion as the super determinant of the Dirac operator.
pub fn torsion_dirac(c: &GradedChain) -> Result<BigRational> {
    Ok(torsion_from_dirac(&dirac_dets(c)?))
}

/// `SDet(L) = prod_k Det(L_k)^{(-1)^{k+1}}`.
pub fn mckean_singer_sdet(c: &GradedChain) -> Result<BigRational> {
    Ok(hodge_dets(c)?.iter().enumerate().fold(BigRational::one(), |acc, (k, d)| acc * signed_power(d, -alt(k))))
}

/// `|Det(D)| = prod_k Det(D_k)`.
pub fn dirac_pseudo_det(c: &GradedChain) -> Result<BigInt> {
    Ok(dirac_dets(c)?.iter().product())
}

/// Full report with both torsion formulas.
pub fn torsion_report(c: &GradedChain) -> Result<TorsionReport> {
    let hodge = hodge_dets(c)?;
    let dirac = dirac_dets(c)?;
    Ok(TorsionReport {
        a_hodge: torsion_from_hodge(&hodge),
        a_dirac: torsion_from_dirac(&dirac),
        sdet_hodge: hodge.iter().enumerate().fold(BigRational::one(), |acc, (k, d)| acc * signed_power(d, -alt(k))),
        det_dirac_abs: dirac.iter().product(),
        hodge_dets: hodge,
        dirac_dets: dirac,
    })
}

/// Whether a rational is the square of a rational.
pub fn is_rational_square(x: &BigRational) -> bool {
    let sq = |n: &BigInt| {
        !n.is_negative() && {
            let r = n.sqrt();
            &r * &r == *n
        }
    };
    sq(x.numer()) && sq(x.denom())
}

/// Torsion of the complex with every `d_k` multiplied by `lambda`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScaledTorsion {
    /// Recomputed from the scaled rational blocks.
    #[serde(serialize_with = "rat_str")]
    pub direct: BigRational,
    /// `lambda^{2 chi} A`.
    #[serde(serialize_with = "rat_str")]
    pub euler_law: BigRational,
    /// `lambda^{2 R} A` with `R = sum_k (-1)^k rank d_k`.
    #[serde(serialize_with = "rat_str")]
    pub rank_law: BigRational,
    pub euler_characteristic: i64,
    pub rank_exponent: i64,
}

fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Computes the scaled torsion directly and by both closed forms.
pub fn scaled_torsion(c: &GradedChain, lambda: &BigRational) -> Result<ScaledTorsion> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("scaling factor must be nonzero".into()));
    }
    let mut direct = BigRational::one();
    for (k, d) in c.derivatives().iter().enumerate() {
        // (lambda d)^T (lambda d) over the rationals
        let g = d.gram();
        let l2 = lambda * lambda;
        let rows: Vec<Vec<BigRational>> = (0..g.rows())
            .map(|i| g.row(i).iter().map(|x| BigRational::from_integer(x.clone()) * &l2).collect())
            .collect();
        let p = pseudo_det_rational(&rows)?;
        direct = if k % 2 == 0 { direct * p } else { direct / p };
    }
    let a = torsion_dirac(c)?;
    let chi: i64 = c.sizes().iter().enumerate().map(|(k, &f)| alt(k) * f as i64).sum();
    let rexp: i64 = c.ranks().iter().enumerate().map(|(k, &r)| alt(k) * r as i64).sum();
    Ok(ScaledTorsion {
        direct,
        euler_law: rat_pow(lambda, 2 * chi) * &a,
        rank_law: rat_pow(lambda, 2 * rexp) * &a,
        euler_characteristic: chi,
        rank_exponent: rexp,
    })
}

/// Which basis elements to remove from the Dirac operator before taking
/// the super determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shave {
    /// The first vertex.
    First,
    /// The last top-dimensional simplex.
    Last,
    /// Both.
    Both,
}

fn shaved_chain(c: &GradedChain, mode: Shave) -> Result<GradedChain> {
    let r = c.top();
    let last = (r, c.sizes()[r] - 1);
    let drop = match mode {
        Shave::First => vec![(0, 0)],
        Shave::Last => vec![last],
        Shave::Both if r == 0 => {
            return Err(Error::Precondition("cannot shave both ends of a 0-dimensional complex".into()))
        }
        Shave::Both => vec![(0, 0), last],
    };
    c.remove_basis(&drop)
}

/// Super determinant of the shaved Dirac operator.
pub fn shaved_sdet(c: &GradedChain, mode: Shave) -> Result<BigRational> {
    torsion_dirac(&shaved_chain(c, mode)?)
}

/// Plain pseudo-determinant `|Det|` of the shaved Dirac operator.
pub fn shaved_pseudo_det(c: &GradedChain, mode: Shave) -> Result<BigInt> {
    dirac_pseudo_det(&shaved_chain(c, mode)?)
}

/// Homotopy type assumed by [`phi`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiKind {
    Contractible,
    Sphere,
}

/// `phi(G)`: the shaved super determinant, expected to be 1.
pub fn phi(cd: &ChainData, kind: PhiKind) -> Result<BigRational> {
    match kind {
        PhiKind::Contractible => {
            if cd.sizes()[0] < 2 {
                return Err(Error::Precondition("phi needs at least two vertices".into()));
            }
            shaved_sdet(cd, Shave::First)
        }
        PhiKind::Sphere => shaved_sdet(cd, Shave::Both),
    }
}
