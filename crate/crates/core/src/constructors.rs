//! Graph generators and graph operations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named generator with integer parameters and an optional seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    #[serde(default)]
    pub params: Vec<i64>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl GeneratorSpec {
    pub fn new(name: &str, params: &[i64]) -> Self {
        Self { name: name.to_string(), params: params.to_vec(), seed: None }
    }
}

/// Generator names accepted by [`generate`].
pub const CATALOG: &[&str] = &[
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "complete_tripartite",
    "star",
    "wheel",
    "octahedron",
    "icosahedron",
    "cross_polytope",
    "torus",
    "house",
    "icosahedron_hair",
    "icosahedron_nose",
    "icosahedron_hat",
    "icosahedron_ear",
    "subdivided_icosahedron",
    "erdos_renyi",
];

fn param(spec: &GeneratorSpec, i: usize, min: i64) -> Result<usize> {
    let v = *spec
        .params
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("{} needs at least {} parameter(s)", spec.name, i + 1)))?;
    if v < min {
        return Err(Error::InvalidParameter(format!("{}: parameter {} must be >= {min}, got {v}", spec.name, i + 1)));
    }
    Ok(v as usize)
}

fn arity(spec: &GeneratorSpec, n: usize) -> Result<()> {
    if spec.params.len() != n {
        return Err(Error::InvalidParameter(format!(
            "{} takes {n} parameter(s), got {}",
            spec.name,
            spec.params.len()
        )));
    }
    Ok(())
}

/// Builds a catalog graph.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let seed = spec.seed.unwrap_or(0);
    match spec.name.as_str() {
        "cycle" => {
            arity(spec, 1)?;
            Ok(cycle(param(spec, 0, 3)?))
        }
        "path" => {
            arity(spec, 1)?;
            Ok(path(param(spec, 0, 1)?))
        }
        "complete" => {
            arity(spec, 1)?;
            Ok(complete(param(spec, 0, 1)?))
        }
        "complete_bipartite" => {
            arity(spec, 2)?;
            Ok(complete_multipartite(&[param(spec, 0, 1)?, param(spec, 1, 1)?]))
        }
        "complete_tripartite" => {
            arity(spec, 3)?;
            Ok(complete_multipartite(&[param(spec, 0, 1)?, param(spec, 1, 1)?, param(spec, 2, 1)?]))
        }
        "star" => {
            arity(spec, 1)?;
            Ok(star(param(spec, 0, 1)?))
        }
        "wheel" => {
            arity(spec, 1)?;
            Ok(wheel(param(spec, 0, 4)?))
        }
        "octahedron" => {
            arity(spec, 0)?;
            Ok(cross_polytope(2))
        }
        "icosahedron" => {
            arity(spec, 0)?;
            Ok(icosahedron())
        }
        "cross_polytope" => {
            arity(spec, 1)?;
            Ok(cross_polytope(param(spec, 0, 0)?))
        }
        "torus" => {
            if spec.params.is_empty() {
                return Ok(torus(4, 4));
            }
            arity(spec, 2)?;
            Ok(torus(param(spec, 0, 4)?, param(spec, 1, 4)?))
        }
        "house" => {
            arity(spec, 0)?;
            Ok(house())
        }
        "icosahedron_hair" => {
            arity(spec, 0)?;
            cone_extension(&icosahedron(), &[0])
        }
        "icosahedron_nose" => {
            arity(spec, 0)?;
            cone_extension(&icosahedron(), &[0, 1])
        }
        "icosahedron_hat" => {
            arity(spec, 0)?;
            cone_extension(&icosahedron(), &[0, 1, 2])
        }
        "icosahedron_ear" => {
            arity(spec, 0)?;
            icosahedron_ear()
        }
        "subdivided_icosahedron" => {
            arity(spec, 1)?;
            random_edge_subdivisions(&icosahedron(), param(spec, 0, 0)?, seed)
        }
        "erdos_renyi" => {
            arity(spec, 3)?;
            let p = BigRational::new(BigInt::from(spec.params[1]), BigInt::from(param(spec, 2, 1)?));
            erdos_renyi(param(spec, 0, 0)?, &p, seed)
        }
        other => Err(Error::InvalidParameter(format!("unknown generator {other:?}"))),
    }
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_index_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Complete multipartite graph with parts of the given sizes, numbered in order.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (p, &s) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(p, s));
    }
    Graph::from_index_edges(
        n,
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| part[i] != part[j]),
    )
}

/// Star with `n` vertices in total; vertex 0 is the center.
pub fn star(n: usize) -> Graph {
    Graph::from_index_edges(n, (1..n).map(|i| (0, i)))
}

/// Wheel with `m` vertices in total: hub 0 over the cycle `1..m`.
pub fn wheel(m: usize) -> Graph {
    let r = m - 1;
    let rim = (0..r).map(move |i| (1 + i, 1 + (i + 1) % r));
    Graph::from_index_edges(m, rim.chain((1..m).map(|i| (0, i))))
}

/// The `d`-dimensional cross polytope, the join of `d + 1` copies of `S^0`.
/// Vertices `2k` and `2k + 1` are the antipodal pairs.
pub fn cross_polytope(d: usize) -> Graph {
    let n = 2 * (d + 1);
    Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| i / 2 != j / 2))
}

/// Icosahedron: 0 on top, upper ring `1..=5`, lower ring `6..=10`, 11 below.
pub fn icosahedron() -> Graph {
    let mut e = Vec::with_capacity(30);
    for j in 0..5 {
        e.push((0, 1 + j));
        e.push((1 + j, 1 + (j + 1) % 5));
        e.push((1 + j, 6 + j));
        e.push((1 + j, 6 + (j + 1) % 5));
        e.push((6 + j, 6 + (j + 1) % 5));
        e.push((6 + j, 11));
    }
    Graph::from_index_edges(12, e)
}

/// Triangulated `a x b` grid torus; `(i, j)` is vertex `i b + j`.
pub fn torus(a: usize, b: usize) -> Graph {
    let id = |i: usize, j: usize| (i % a) * b + (j % b);
    let mut e = Vec::with_capacity(3 * a * b);
    for i in 0..a {
        for j in 0..b {
            e.push((id(i, j), id(i + 1, j)));
            e.push((id(i, j), id(i, j + 1)));
            e.push((id(i, j), id(i + 1, j + 1)));
        }
    }
    Graph::from_index_edges(a * b, e)
}

/// Square `0-1-2-3` with a roof vertex 4 over the edge `2-3`.
pub fn house() -> Graph {
    Graph::from_index_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])
}

/// Icosahedron with a handle: a path through two new vertices joining the
/// adjacent vertices 0 and 1.
pub fn icosahedron_ear() -> Result<Graph> {
    let g = icosahedron();
    let mut e: Vec<(usize, usize)> = g.index_edges().collect();
    e.extend([(0, 12), (12, 13), (13, 1)]);
    Ok(Graph::from_index_edges(14, e))
}

/// Zykov join: disjoint union plus every edge between the two parts.
/// The result is numbered `0..|g|` for `g` followed by `h`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.vertex_count();
    let m = h.vertex_count();
    let mut e: Vec<(usize, usize)> = g.index_edges().collect();
    e.extend(h.index_edges().map(|(a, b)| (a + n, b + n)));
    e.extend((0..n).flat_map(|i| (0..m).map(move |j| (i, n + j))));
    Graph::from_index_edges(n + m, e)
}

/// Disjoint union, numbered like [`join`].
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut e: Vec<(usize, usize)> = g.index_edges().collect();
    e.extend(h.index_edges().map(|(a, b)| (a + n, b + n)));
    Graph::from_index_edges(n + h.vertex_count(), e)
}

/// Glues `h` to `g` by identifying vertex `vh` of `h` with vertex `vg` of `g`.
/// `g` keeps its numbering `0..|g|`; the other vertices of `h` follow in order.
pub fn wedge(g: &Graph, h: &Graph, vg: i64, vh: i64) -> Result<Graph> {
    let ig = g.index_of(vg).ok_or(Error::UnknownVertex(vg))?;
    let ih = h.index_of(vh).ok_or(Error::UnknownVertex(vh))?;
    let n = g.vertex_count();
    let map = |j: usize| match j.cmp(&ih) {
        std::cmp::Ordering::Equal => ig,
        std::cmp::Ordering::Less => n + j,
        std::cmp::Ordering::Greater => n + j - 1,
    };
    let mut e: Vec<(usize, usize)> = g.index_edges().collect();
    e.extend(h.index_edges().map(|(a, b)| (map(a), map(b))));
    Ok(Graph::from_index_edges(n + h.vertex_count() - 1, e))
}

fn fresh_label(g: &Graph) -> i64 {
    g.vertices().last().map_or(0, |l| l + 1)
}

/// Adds a new vertex joined to every vertex of `h`. The new label is one more
/// than the largest existing label.
pub fn cone_extension(g: &Graph, h: &[i64]) -> Result<Graph> {
    if h.is_empty() {
        return Err(Error::InvalidParameter("cone extension over an empty vertex set".into()));
    }
    let idx = h.iter().map(|&v| g.index_of(v).ok_or(Error::UnknownVertex(v))).collect::<Result<BTreeSet<_>>>()?;
    let n = g.vertex_count();
    let mut labels = g.vertices().to_vec();
    labels.push(fresh_label(g));
    let mut e: Vec<(usize, usize)> = g.index_edges().collect();
    e.extend(idx.into_iter().map(|i| (i, n)));
    Ok(Graph::with_labels(labels, e))
}

/// Graph of the face poset: one vertex per simplex (global order), joined
/// when one simplex contains the other. Its clique complex is the
/// barycentric refinement.
pub fn barycentric_refinement(c: &SimplicialComplex) -> Graph {
    let simplices: Vec<_> = c.iter().collect();
    let offsets = c.offsets();
    let mut e = Vec::new();
    for (i, s) in simplices.iter().enumerate() {
        // every proper face of s, found through the subsets of its vertices
        let v = s.vertices();
        let n = v.len();
        if n > 20 {
            continue;
        }
        for mask in 1u32..(1u32 << n) - 1 {
            let sub: Vec<i64> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| v[b]).collect();
            let face = crate::complex::Simplex::new(sub).expect("subset of a simplex");
            let j = offsets[face.dim()] + c.index_of(&face).expect("closed complex");
            e.push((j, i));
        }
    }
    Graph::from_index_edges(simplices.len(), e)
}

/// Puts a new vertex on the edge `{a, b}`: the edge is removed and the new
/// vertex is joined to `a`, `b` and their common neighbors.
pub fn edge_subdivision(g: &Graph, a: i64, b: i64) -> Result<Graph> {
    let ia = g.index_of(a).ok_or(Error::UnknownVertex(a))?;
    let ib = g.index_of(b).ok_or(Error::UnknownVertex(b))?;
    if !g.has_edge(ia, ib) {
        return Err(Error::InvalidParameter(format!("({a}, {b}) is not an edge")));
    }
    let n = g.vertex_count();
    let mut labels = g.vertices().to_vec();
    labels.push(fresh_label(g));
    let mut e: Vec<(usize, usize)> = g.index_edges().filter(|&p| p != (ia.min(ib), ia.max(ib))).collect();
    e.push((ia, n));
    e.push((ib, n));
    for &c in g.neighbors(ia) {
        if g.has_edge(c, ib) {
            e.push((c, n));
        }
    }
    Ok(Graph::with_labels(labels, e))
}

/// Uniform index in `0..n` from one 64-bit draw (multiply-high).
fn draw_below(rng: &mut SplitMix64, n: usize) -> usize {
    ((rng.next_u64() as u128 * n as u128) >> 64) as usize
}

/// `count` edge subdivisions at edges drawn uniformly from the current graph.
pub fn random_edge_subdivisions(g: &Graph, count: usize, seed: u64) -> Result<Graph> {
    let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
    let mut out = g.clone();
    for _ in 0..count {
        let edges = out.edges();
        if edges.is_empty() {
            return Err(Error::InvalidParameter("no edge left to subdivide".into()));
        }
        let (a, b) = edges[draw_below(&mut rng, edges.len())];
        out = edge_subdivision(&out, a, b)?;
    }
    Ok(out)
}

/// Strong (Shannon) product; `(i, j)` is vertex `i |h| + j`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    let close = |gr: &Graph, a: usize, b: usize| a == b || gr.has_edge(a, b);
    let mut e = Vec::new();
    for x in 0..n * m {
        for y in x + 1..n * m {
            let (a, b) = (x / m, x % m);
            let (c, d) = (y / m, y % m);
            if close(g, a, c) && close(h, b, d) {
                e.push((x, y));
            }
        }
    }
    Graph::from_index_edges(n * m, e)
}

/// Complement on the same labels.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let e: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !g.has_edge(i, j)).collect();
    Graph::with_labels(g.vertices().to_vec(), e)
}

/// Seeded Erdős–Rényi graph on `0..n`.
///
/// The stream is SplitMix64 started from state `seed`. Pairs `i < j` are
/// visited in lexicographic order; each draws one `x = next_u64()` and the
/// edge is kept iff `x / 2^64 < p`, compared exactly.
pub fn erdos_renyi(n: usize, p: &BigRational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
    let threshold: BigInt = p.numer() << 64;
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = BigInt::from(rng.next_u64());
            if !p.is_zero() && x * p.denom() < threshold {
                e.push((i, j));
            }
        }
    }
    Ok(Graph::from_index_edges(n, e))
}

/// A contractible graph grown from `K_1` by cone extensions over cones:
/// each new vertex is joined to a random vertex `v` and a random subset of
/// the neighbors of `v`.
pub fn random_cone_built(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
    let mut g = complete(1);
    for _ in 1..n {
        let v = draw_below(&mut rng, g.vertex_count());
        let mut h = vec![g.label(v)];
        for &w in g.neighbors(v) {
            if rng.next_u64() >> 63 == 1 {
                h.push(g.label(w));
            }
        }
        g = cone_extension(&g, &h).expect("labels come from g");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{clique_complex, complex_from_facets};

    fn f(g: &Graph) -> Vec<usize> {
        clique_complex(g).f_vector().0
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(f(&cross_polytope(2)), vec![6, 12, 8]);
        assert_eq!(f(&cross_polytope(4)), vec![10, 40, 80, 80, 32]);
        assert_eq!(f(&icosahedron()), vec![12, 30, 20]);
        assert_eq!(f(&torus(4, 4)), vec![16, 48, 32]);
        assert_eq!(f(&wheel(6)), vec![6, 10, 5]);
        assert_eq!(star(5).edge_count(), 4);
        assert_eq!(complete_multipartite(&[3, 3]).edge_count(), 9);
        assert_eq!(f(&house()), vec![5, 6, 1]);
        assert!(generate(&GeneratorSpec::new("icosahedron", &[])).is_ok());
        assert!(generate(&GeneratorSpec::new("cycle", &[2])).is_err());
        assert!(generate(&GeneratorSpec::new("nope", &[])).is_err());
    }

    #[test]
    fn joins() {
        let s0 = cross_polytope(0);
        assert_eq!(f(&join(&s0, &s0)), vec![4, 4]);
        assert_eq!(f(&join(&cycle(4), &s0)), vec![6, 12, 8]);
        let ds = join(&disjoint_union(&cycle(4), &cycle(4)), &s0);
        assert_eq!(f(&ds), vec![10, 24, 16]);
    }

    #[test]
    fn wedge_and_cone() {
        let w = wedge(&cycle(3), &cycle(4), 0, 2).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (6, 7));
        assert!(wedge(&cycle(3), &cycle(4), 0, 9).is_err());
        assert!(cone_extension(&cycle(4), &[]).is_err());
        assert_eq!(f(&cone_extension(&icosahedron(), &[0, 1, 2]).unwrap()), vec![13, 33, 23, 1]);
        assert_eq!(f(&cone_extension(&icosahedron(), &[0, 1]).unwrap()), vec![13, 32, 21]);
        assert_eq!(f(&icosahedron_ear().unwrap()), vec![14, 33, 20]);
    }

    #[test]
    fn refinement_and_subdivision() {
        let edge = complex_from_facets(&[vec![1, 2]]).unwrap();
        let b = barycentric_refinement(&edge);
        assert_eq!((b.vertex_count(), b.edge_count()), (3, 2));
        let tri = complex_from_facets(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(f(&barycentric_refinement(&tri)), vec![7, 12, 6]);
        assert_eq!(f(&edge_subdivision(&cycle(4), 0, 1).unwrap()), vec![5, 5]);
        assert_eq!(f(&edge_subdivision(&icosahedron(), 0, 1).unwrap()), vec![13, 33, 22]);
        assert_eq!(f(&random_edge_subdivisions(&icosahedron(), 14, 7).unwrap()), vec![26, 72, 48]);
        assert!(edge_subdivision(&cycle(4), 0, 2).is_err());
    }

    #[test]
    fn products_and_complements() {
        assert_eq!(strong_product(&complete(1), &cycle(5)).edge_count(), 5);
        assert_eq!(f(&strong_product(&cycle(4), &cycle(5))), vec![20, 80, 80, 20]);
        let c = complement(&cycle(4));
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn erdos_renyi_extremes_and_determinism() {
        let zero = BigRational::zero();
        let one = BigRational::one();
        assert_eq!(erdos_renyi(6, &zero, 1).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(6, &one, 1).unwrap().edge_count(), 15);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(erdos_renyi(8, &half, 42).unwrap(), erdos_renyi(8, &half, 42).unwrap());
        assert!(erdos_renyi(3, &BigRational::new(3.into(), 2.into()), 0).is_err());
    }
}
