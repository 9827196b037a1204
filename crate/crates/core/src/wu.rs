//! The Wu (interaction) complex on ordered pairs of intersecting simplices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::chain::GradedChain;
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::serial::rat_str;
use crate::torsion::{
    dirac_dets, hodge_dets, mckean_singer_sdet, scaled_torsion, torsion_from_dirac, torsion_from_hodge,
};

/// `f_{kl}`: ordered intersecting pairs of a `k`-simplex and an `l`-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FMatrix(pub Vec<Vec<usize>>);

impl FMatrix {
    pub fn get(&self, k: usize, l: usize) -> usize {
        self.0.get(k).and_then(|r| r.get(l)).copied().unwrap_or(0)
    }

    /// `sum_{k,l} (-1)^{k+l} f_{kl}`.
    pub fn wu_characteristic(&self) -> i64 {
        let mut w = 0;
        for (k, row) in self.0.iter().enumerate() {
            for (l, &f) in row.iter().enumerate() {
                w += if (k + l) % 2 == 0 { f as i64 } else { -(f as i64) };
            }
        }
        w
    }
}

/// Ordered intersecting pairs, both entries as global simplex indices.
fn pairs(c: &SimplicialComplex) -> Vec<(usize, usize)> {
    let all: Vec<&Simplex> = c.iter().collect();
    let mut out = Vec::new();
    for (i, x) in all.iter().enumerate() {
        for (j, y) in all.iter().enumerate() {
            if x.intersects(y) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn f_matrix(c: &SimplicialComplex) -> FMatrix {
    let r = c.f_vector().0.len();
    let mut m = vec![vec![0; r]; r];
    let all: Vec<&Simplex> = c.iter().collect();
    for (i, j) in pairs(c) {
        m[all[i].dim()][all[j].dim()] += 1;
    }
    FMatrix(m)
}

/// `omega(G) = sum over intersecting ordered pairs of omega(x) omega(y)`.
pub fn wu_characteristic(c: &SimplicialComplex) -> i64 {
    f_matrix(c).wu_characteristic()
}

/// The Wu chain complex together with its pair basis.
#[derive(Clone, Debug)]
pub struct WuChain {
    /// Basis of each grade as pairs of simplices.
    pub basis: Vec<Vec<(Simplex, Simplex)>>,
    pub chain: GradedChain,
}

/// Builds the Wu exterior derivative
/// `df(x,y) = sum_z sign(z,x) f(z,y) + (-1)^{dim x} sum_w sign(w,y) f(x,w)`,
/// where `z`, `w` run over facets still meeting the other entry.
pub fn wu_chain(c: &SimplicialComplex) -> Result<WuChain> {
    if c.is_empty() {
        return Err(Error::InvalidComplex("empty complex has no Wu chain".into()));
    }
    let all: Vec<&Simplex> = c.iter().collect();
    let offsets = c.offsets();
    let global = |s: &Simplex| offsets[s.dim()] + c.index_of(s).expect("closed complex");
    let top = 2 * c.dimension() as usize;
    let mut basis: Vec<Vec<(Simplex, Simplex)>> = vec![Vec::new(); top + 1];
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, j) in pairs(c) {
        let (x, y) = (all[i], all[j]);
        let g = x.dim() + y.dim();
        pos.insert((i, j), basis[g].len());
        basis[g].push((x.clone(), y.clone()));
    }
    let sizes: Vec<usize> = basis.iter().map(Vec::len).collect();
    let mut d = Vec::with_capacity(top);
    for k in 0..top {
        let mut m = ExactMatrix::zeros(sizes[k + 1], sizes[k]);
        for (row, (x, y)) in basis[k + 1].iter().enumerate() {
            let (gx, gy) = (global(x), global(y));
            let eps: i64 = if x.dim() % 2 == 0 { 1 } else { -1 };
            let left = x.facets().filter(|(_, z)| z.intersects(y)).map(|(i, z)| (pos[&(global(&z), gy)], i, 1));
            let right = y.facets().filter(|(_, w)| x.intersects(w)).map(|(i, w)| (pos[&(gx, global(&w))], i, eps));
            for (col, i, e) in left.chain(right).collect::<Vec<_>>() {
                let s = if i % 2 == 0 { e } else { -e };
                let v = m.get(row, col) + BigInt::from(s);
                m.set(row, col, v);
            }
        }
        d.push(m);
    }
    let chain = GradedChain::new(sizes, d).map_err(|e| match e {
        Error::Invariant(msg) => Error::Invariant(format!("Wu sign convention violated: {msg}")),
        other => other,
    })?;
    Ok(WuChain { basis, chain })
}

/// Wu torsion by both formulas, plus the Wu McKean–Singer product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WuTorsion {
    #[serde(serialize_with = "rat_str")]
    pub hodge: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub dirac: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub sdet_hodge: BigRational,
}

pub fn wu_torsion_report(w: &WuChain) -> Result<WuTorsion> {
    let hodge = torsion_from_hodge(&hodge_dets(&w.chain)?);
    let dirac = torsion_from_dirac(&dirac_dets(&w.chain)?);
    if hodge != dirac {
        return Err(Error::Invariant(format!("Wu torsion: Hodge form {hodge} != Dirac form {dirac}")));
    }
    Ok(WuTorsion { hodge, dirac, sdet_hodge: mckean_singer_sdet(&w.chain)? })
}

/// `A_2`, the squared torsion of the Wu complex.
pub fn wu_torsion(c: &SimplicialComplex) -> Result<BigRational> {
    Ok(wu_torsion_report(&wu_chain(c)?)?.dirac)
}

/// Direct scaled Wu torsion against `lambda^{2 omega} A_2`.
pub fn wu_scaling_check(c: &SimplicialComplex, lambda: &BigRational) -> Result<(BigRational, BigRational)> {
    let w = wu_chain(c)?;
    let s = scaled_torsion(&w.chain, lambda)?;
    let omega = wu_characteristic(c);
    let a = torsion_from_dirac(&dirac_dets(&w.chain)?);
    let p = num_traits::pow(lambda.clone(), 2 * omega.unsigned_abs() as usize);
    let closed = if omega < 0 { a / p } else { a * p };
    Ok((s.direct, closed))
}

/// Alternating sum of the Wu Betti numbers.
pub fn wu_betti_euler(w: &WuChain) -> i64 {
    w.chain.betti().euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, complex_from_facets};
    use crate::constructors::{complete, cross_polytope, cycle};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn f_matrix_examples() {
        let k2 = clique_complex(&complete(2));
        assert_eq!(f_matrix(&k2), FMatrix(vec![vec![2, 2], vec![2, 1]]));
        assert_eq!(wu_characteristic(&k2), -1);
        let c4 = f_matrix(&clique_complex(&cycle(4)));
        assert_eq!((c4.get(0, 0), c4.get(1, 1)), (4, 12));
        assert_eq!(f_matrix(&complex_from_facets(&[vec![0]]).unwrap()), FMatrix(vec![vec![1]]));
        for n in 1..=6 {
            let w = wu_characteristic(&clique_complex(&complete(n)));
            assert_eq!(w, if n % 2 == 1 { 1 } else { -1 });
        }
    }

    #[test]
    fn chain_grading_and_point() {
        let k2 = wu_chain(&clique_complex(&complete(2))).unwrap();
        assert_eq!(k2.chain.sizes(), &[2, 4, 1]);
        let pt = wu_chain(&complex_from_facets(&[vec![0]]).unwrap()).unwrap();
        assert_eq!(pt.chain.dirac(), ExactMatrix::zeros(1, 1));
    }

    #[test]
    fn small_wu_torsions() {
        assert_eq!(wu_torsion(&clique_complex(&complete(2))).unwrap(), rat(1, 1));
        assert_eq!(wu_torsion(&clique_complex(&complete(3))).unwrap(), rat(3, 4));
        assert_eq!(wu_torsion(&clique_complex(&complete(4))).unwrap(), rat(2, 1));
        assert_eq!(wu_torsion(&clique_complex(&cycle(4))).unwrap(), rat(1, 48));
        let oct = clique_complex(&cross_polytope(2));
        let f = f_matrix(&oct);
        assert_eq!(wu_torsion(&oct).unwrap(), rat(f.get(0, 0) as i64, f.get(2, 2) as i64));
    }

    #[test]
    fn wu_euler_poincare_and_super_det() {
        for c in [clique_complex(&complete(3)), clique_complex(&cycle(5)), clique_complex(&cross_polytope(2))] {
            let w = wu_chain(&c).unwrap();
            let alt: i64 =
                w.chain.sizes().iter().enumerate().map(|(k, &s)| if k % 2 == 0 { s as i64 } else { -(s as i64) }).sum();
            assert_eq!(alt, wu_characteristic(&c));
            assert_eq!(wu_betti_euler(&w), alt);
            assert_eq!(wu_torsion_report(&w).unwrap().sdet_hodge, rat(1, 1));
        }
    }
}
