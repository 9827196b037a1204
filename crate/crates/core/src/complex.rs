//! Simplices, finite abstract simplicial complexes and the graphs derived from them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An oriented simplex: a strictly increasing tuple of vertex labels.
///
/// The increasing order is the orientation; every sign in the chain complex
/// derives from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<i64>);

impl Simplex {
    /// Sorts the labels; rejects empty input and repeated labels.
    pub fn new(mut vertices: Vec<i64>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidComplex("empty simplex".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidComplex(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Self(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<i64>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertices(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `(-1)^dim`.
    pub fn omega(&self) -> i64 {
        if self.dim().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Codimension-one faces, paired with the position of the dropped vertex.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            (i, Simplex(v))
        })
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn intersection_len(&self, other: &Simplex) -> usize {
        self.0.iter().filter(|v| other.0.binary_search(v).is_ok()).count()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Simplex counts by dimension, `f_0..f_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A finite abstract simplicial complex, graded by dimension.
///
/// Within each dimension the simplices are sorted lexicographically; the
/// global index of a simplex is dimension-major, which fixes the row and
/// column order of every matrix built from the complex.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.by_dim == other.by_dim
    }
}

impl SimplicialComplex {
    fn from_set(set: BTreeSet<Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in set {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for level in &mut by_dim {
            level.sort();
        }
        let index =
            by_dim.iter().map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        Self { by_dim, index }
    }

    pub fn empty() -> Self {
        Self { by_dim: Vec::new(), index: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Maximal dimension; `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.by_dim.len() as i64 - 1
    }

    /// Simplices of dimension `k`, lexicographically sorted.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All simplices in global (dimension-major) order.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    /// Position of `s` within its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim()).and_then(|m| m.get(s).copied())
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.by_dim.iter().map(Vec::len).collect())
    }

    /// Total number of simplices.
    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Offsets of each dimension block in the global order.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.by_dim
            .iter()
            .map(|l| {
                let o = acc;
                acc += l.len();
                o
            })
            .collect()
    }

    /// Euler characteristic as `sum_x omega(x)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(Simplex::omega).sum()
    }

    /// Simplices contained in no larger simplex, in global order.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        for level in self.by_dim.iter().skip(1) {
            for s in level {
                for (_, f) in s.facets() {
                    if let Some(k) = self.index_of(&f) {
                        covered.insert(&self.by_dim[f.dim()][k]);
                    }
                }
            }
        }
        self.iter().filter(|s| !covered.contains(s)).cloned().collect()
    }

    /// Whether every facet of every simplex is present.
    pub fn is_closed(&self) -> bool {
        self.iter().all(|s| s.facets().all(|(_, f)| self.index_of(&f).is_some()))
    }

    pub fn vertex_labels(&self) -> Vec<i64> {
        self.simplices(0).iter().map(|s| s.0[0]).collect()
    }

    /// The 1-skeleton as a graph.
    pub fn skeleton_graph(&self) -> Graph {
        let labels = self.vertex_labels();
        let edges = self
            .simplices(1)
            .iter()
            .map(|e| (labels.binary_search(&e.0[0]).unwrap(), labels.binary_search(&e.0[1]).unwrap()));
        Graph::with_labels(labels.clone(), edges.collect::<Vec<_>>())
    }
}

/// The Whitney (clique) complex: every vertex set of a complete subgraph.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    fn extend(g: &Graph, clique: &mut Vec<usize>, candidates: &[usize], out: &mut BTreeSet<Simplex>) {
        for (pos, &v) in candidates.iter().enumerate() {
            clique.push(v);
            out.insert(Simplex::from_sorted(clique.iter().map(|&i| g.label(i)).collect()));
            let next: Vec<usize> = candidates[pos + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            extend(g, clique, &next, out);
            clique.pop();
        }
    }
    let mut out = BTreeSet::new();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    extend(g, &mut Vec::new(), &all, &mut out);
    SimplicialComplex::from_set(out)
}

/// Downward closure of a facet list. Duplicates are merged.
pub fn complex_from_facets(facets: &[Vec<i64>]) -> Result<SimplicialComplex> {
    let mut out = BTreeSet::new();
    for f in facets {
        let s = Simplex::new(f.clone())?;
        if s.len() > 24 {
            return Err(Error::TooLarge(format!("facet with {} vertices", s.len())));
        }
        let n = s.len();
        for mask in 1u32..(1u32 << n) {
            let sub: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s.0[i]).collect();
            out.insert(Simplex::from_sorted(sub));
        }
    }
    Ok(SimplicialComplex::from_set(out))
}

/// Graph on the facets; two facets are adjacent when their intersection has
/// one vertex fewer than the smaller of the two.
pub fn dual_graph(c: &SimplicialComplex) -> Graph {
    let facets = c.facets();
    let mut edges = Vec::new();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let want = facets[i].len().min(facets[j].len()) - 1;
            if want > 0 && facets[i].intersection_len(&facets[j]) == want {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(facets.len(), edges)
}

/// Which dimensions a parity simplex graph keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, k: usize) -> bool {
        k.is_multiple_of(2) == (self == Parity::Even)
    }
}

/// Graph on the simplices of one dimension parity.
///
/// Two simplices of the same dimension `k` are adjacent when they are both
/// faces of a common `(k+1)`-simplex; this is the adjacency pattern of the
/// Dirac block `d_k^T d_k`. Vertices are numbered in global simplex order.
pub fn parity_simplex_graph(c: &SimplicialComplex, parity: Parity) -> Graph {
    let mut n = 0;
    let mut base = vec![0; c.by_dim.len()];
    for (k, slot) in base.iter_mut().enumerate() {
        *slot = n;
        if parity.matches(k) {
            n += c.simplices(k).len();
        }
    }
    let mut edges = BTreeSet::new();
    for k in 0..c.by_dim.len() {
        if !parity.matches(k) {
            continue;
        }
        for up in c.simplices(k + 1) {
            let faces: Vec<usize> = up.facets().map(|(_, f)| c.index_of(&f).unwrap() + base[k]).collect();
            for a in 0..faces.len() {
                for b in a + 1..faces.len() {
                    edges.insert((faces[a].min(faces[b]), faces[a].max(faces[b])));
                }
            }
        }
    }
    Graph::from_index_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: i64) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new((0..n).collect(), &edges).unwrap()
    }

    fn complete(n: i64) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new((0..n).collect(), &e).unwrap()
    }

    #[test]
    fn clique_complex_small_cases() {
        assert_eq!(clique_complex(&complete(3)).f_vector().0, vec![3, 3, 1]);
        assert_eq!(clique_complex(&cycle(4)).f_vector().0, vec![4, 4]);
        assert_eq!(clique_complex(&complete(1)).f_vector().0, vec![1]);
        assert!(clique_complex(&Graph::empty()).is_empty());
    }

    #[test]
    fn facets_closure() {
        assert_eq!(complex_from_facets(&[vec![1, 2, 3]]).unwrap().f_vector().0, vec![3, 3, 1]);
        assert_eq!(complex_from_facets(&[vec![1], vec![2]]).unwrap().f_vector().0, vec![2]);
        assert_eq!(complex_from_facets(&[vec![3, 1], vec![1, 3]]).unwrap().f_vector().0, vec![2, 1]);
        assert!(complex_from_facets(&[vec![]]).is_err());
    }

    #[test]
    fn lexicographic_order_within_dimension() {
        let c = complex_from_facets(&[vec![2, 3], vec![1, 3], vec![1, 2]]).unwrap();
        let edges: Vec<_> = c.simplices(1).iter().map(|s| s.vertices().to_vec()).collect();
        assert_eq!(edges, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(c.offsets(), vec![0, 3]);
    }

    #[test]
    fn dual_of_single_facet() {
        let d = dual_graph(&clique_complex(&complete(4)));
        assert_eq!((d.vertex_count(), d.edge_count()), (1, 0));
    }

    #[test]
    fn parity_graphs() {
        let c4 = clique_complex(&cycle(4));
        let even = parity_simplex_graph(&c4, Parity::Even);
        assert_eq!((even.vertex_count(), even.edge_count()), (4, 4));
        assert!(even.index_edges().all(|(i, j)| cycle(4).has_edge(i, j)));

        let k3 = clique_complex(&complete(3));
        let odd = parity_simplex_graph(&k3, Parity::Odd);
        assert_eq!((odd.vertex_count(), odd.edge_count()), (3, 3));

        let edge = complex_from_facets(&[vec![1, 2]]).unwrap();
        let odd = parity_simplex_graph(&edge, Parity::Odd);
        assert_eq!((odd.vertex_count(), odd.edge_count()), (1, 0));
    }

    #[test]
    fn sign_conventions_for_faces() {
        let y = Simplex::new(vec![5, 7, 11]).unwrap();
        let faces: Vec<_> = y.facets().map(|(i, f)| (i, f.vertices().to_vec())).collect();
        assert_eq!(faces[1], (1, vec![5, 11]));
        assert_eq!(faces[2], (2, vec![5, 7]));
    }
}
