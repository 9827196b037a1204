//! Spanning-tree counts and their higher-dimensional analogues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chain::GradedChain;
use crate::complex::{clique_complex, dual_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{gram_pseudo_det, pseudo_det_int, ExactMatrix};
use crate::serial::big_str;
use crate::torsion::dirac_dets;

/// Rooted and unrooted spanning-tree counts of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCounts {
    #[serde(serialize_with = "big_str")]
    pub rooted: BigInt,
    #[serde(serialize_with = "big_str")]
    pub unrooted: BigInt,
}

fn kirchhoff(g: &Graph) -> ExactMatrix {
    ExactMatrix::from_rows(&g.kirchhoff())
}

/// `Det(L_0)`, the pseudo-determinant of the Kirchhoff matrix.
pub fn rooted_spanning_tree_count(g: &Graph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    pseudo_det_int(&kirchhoff(g))
}

/// `Det(L_0) / |V|`.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt> {
    Ok(tree_counts(g)?.unrooted)
}

pub fn tree_counts(g: &Graph) -> Result<TreeCounts> {
    let rooted = rooted_spanning_tree_count(g)?;
    let (q, r) = rooted.div_rem(&BigInt::from(g.vertex_count()));
    if !r.is_zero() {
        return Err(Error::Invariant(format!("{rooted} rooted trees on {} vertices", g.vertex_count())));
    }
    Ok(TreeCounts { rooted, unrooted: q })
}

/// Counts spanning trees by testing every `(|V| - 1)`-subset of edges.
pub fn brute_force_spanning_trees(g: &Graph) -> Result<BigInt> {
    let edges: Vec<(usize, usize)> = g.index_edges().collect();
    if edges.len() > 25 {
        return Err(Error::TooLarge(format!("{} edges for exhaustive enumeration", edges.len())));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let need = n - 1;
    let mut count = 0u64;
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut acyclic = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    acyclic = false;
                    break;
                }
                parent[ra] = rb;
            }
        }
        // n - 1 acyclic edges on n vertices always form a spanning tree
        if acyclic {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Products of the Dirac-block determinants over even and odd `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityProducts {
    #[serde(serialize_with = "big_str")]
    pub even: BigInt,
    #[serde(serialize_with = "big_str")]
    pub odd: BigInt,
}

impl ParityProducts {
    /// `even / odd`, which is the torsion.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.even.clone(), self.odd.clone())
    }
}

pub fn parity_tree_products(c: &GradedChain) -> Result<ParityProducts> {
    let mut even = BigInt::one();
    let mut odd = BigInt::one();
    for (k, d) in dirac_dets(c)?.into_iter().enumerate() {
        if k % 2 == 0 {
            even *= d;
        } else {
            odd *= d;
        }
    }
    Ok(ParityProducts { even, odd })
}

/// Spanning-tree counts of a 2-sphere and of its dual graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualityCheck {
    #[serde(serialize_with = "big_str")]
    pub trees: BigInt,
    #[serde(serialize_with = "big_str")]
    pub dual_trees: BigInt,
    #[serde(serialize_with = "crate::serial::rat_str")]
    pub torsion: BigRational,
    #[serde(serialize_with = "crate::serial::rat_str")]
    pub vertex_face_ratio: BigRational,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.trees == self.dual_trees && self.torsion == self.vertex_face_ratio
    }
}

/// Tree counts of `g` and its dual, plus `A(G)` against `f_0 / f_2`.
/// Requires `g` to be a verified 2-sphere.
pub fn von_staudt_check(g: &Graph, budget: u64) -> Result<DualityCheck> {
    use crate::topology::{is_sphere, Verdict};
    match is_sphere(g, 2, budget) {
        Verdict::Yes => {}
        Verdict::No => return Err(Error::Precondition("graph is not a 2-sphere".into())),
        Verdict::Unknown => return Err(Error::Precondition("2-sphere check exhausted its budget".into())),
    }
    let c = clique_complex(g);
    let f = c.f_vector().0;
    let chain = crate::chain::build_chain(&c)?;
    Ok(DualityCheck {
        trees: spanning_tree_count(g)?,
        dual_trees: spanning_tree_count(&dual_graph(&c))?,
        torsion: crate::torsion::torsion_dirac(&chain)?,
        vertex_face_ratio: BigRational::new(f[0].into(), f[2].into()),
    })
}

/// Rooted count through the Gram route, `Det(d_0^T d_0)`; used as a cross-check.
pub fn rooted_count_from_incidence(d0: &ExactMatrix) -> Result<BigInt> {
    gram_pseudo_det(d0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cross_polytope, cycle};

    #[test]
    fn small_counts() {
        assert_eq!(brute_force_spanning_trees(&complete(3)).unwrap(), BigInt::from(3));
        assert_eq!(brute_force_spanning_trees(&cycle(4)).unwrap(), BigInt::from(4));
        assert_eq!(brute_force_spanning_trees(&complete(4)).unwrap(), BigInt::from(16));
        assert_eq!(spanning_tree_count(&cycle(5)).unwrap(), BigInt::from(5));
        let oct = cross_polytope(2);
        assert_eq!(rooted_spanning_tree_count(&oct).unwrap(), BigInt::from(2304));
        assert_eq!(spanning_tree_count(&oct).unwrap(), BigInt::from(384));
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::new(vec![0, 1], &[]).unwrap();
        assert!(matches!(rooted_spanning_tree_count(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn too_many_edges_for_brute_force() {
        assert!(brute_force_spanning_trees(&complete(8)).is_err());
    }
}
