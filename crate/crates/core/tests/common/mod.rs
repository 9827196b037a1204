//! Shared test corpus: named graphs with their known homotopy type.
#![allow(dead_code)]

use torsion_core::constructors::*;
use torsion_core::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Contractible,
    /// A `d`-sphere.
    Sphere(i64),
    Other,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub kind: Kind,
}

fn inst(name: impl Into<String>, graph: Graph, kind: Kind) -> Instance {
    Instance { name: name.into(), graph, kind }
}

fn cone_over_all(g: &Graph) -> Graph {
    cone_extension(g, g.vertices()).unwrap()
}

fn named(name: &str) -> Graph {
    generate(&GeneratorSpec::new(name, &[])).unwrap()
}

pub fn contractible() -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 4..=8 {
        out.push(inst(format!("wheel {m}"), wheel(m), Kind::Contractible));
    }
    for n in 1..=6 {
        out.push(inst(format!("K_{n}"), complete(n), Kind::Contractible));
    }
    out.push(inst("path 5", path(5), Kind::Contractible));
    out.push(inst("star 6", star(6), Kind::Contractible));
    let mut g = cycle(6);
    for i in 1..=2 {
        g = cone_over_all(&g);
        out.push(inst(format!("cone^{i} over C_6"), g.clone(), Kind::Contractible));
    }
    out.push(inst("cone over icosahedron", cone_over_all(&icosahedron()), Kind::Contractible));
    out.push(inst("cone over octahedron", cone_over_all(&cross_polytope(2)), Kind::Contractible));
    for seed in 0..30u64 {
        let n = 3 + (seed as usize % 10);
        out.push(inst(format!("cone-built n={n} seed={seed}"), random_cone_built(n, seed), Kind::Contractible));
    }
    out
}

pub fn spheres() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.push(inst(format!("C_{n}"), cycle(n), Kind::Sphere(1)));
    }
    for d in 0..=4 {
        out.push(inst(format!("cross polytope S^{d}"), cross_polytope(d), Kind::Sphere(d as i64)));
    }
    out.push(inst("icosahedron", icosahedron(), Kind::Sphere(2)));
    out.push(inst("suspension of C_5", join(&cycle(5), &cross_polytope(0)), Kind::Sphere(2)));
    out.push(inst("join C_4 * C_5", join(&cycle(4), &cycle(5)), Kind::Sphere(3)));
    for (count, seed) in [(3, 1u64), (6, 2), (10, 3), (14, 7)] {
        let g = random_edge_subdivisions(&icosahedron(), count, seed).unwrap();
        out.push(inst(format!("icosahedron with {count} subdivisions (seed {seed})"), g, Kind::Sphere(2)));
    }
    out
}

pub fn others() -> Vec<Instance> {
    let mut out = vec![
        inst("house", house(), Kind::Other),
        inst("torus 4x4", torus(4, 4), Kind::Other),
        inst("K_{2,3}", complete_multipartite(&[2, 3]), Kind::Other),
        inst("K_{3,3}", complete_multipartite(&[3, 3]), Kind::Other),
        inst("K_{1,2,3}", complete_multipartite(&[1, 2, 3]), Kind::Other),
        inst("icosahedron with hair", named("icosahedron_hair"), Kind::Other),
        inst("icosahedron with nose", named("icosahedron_nose"), Kind::Other),
        inst("icosahedron with hat", named("icosahedron_hat"), Kind::Other),
        inst("icosahedron with ear", named("icosahedron_ear"), Kind::Other),
        inst("(C_4 + C_4) * S^0", join(&disjoint_union(&cycle(4), &cycle(4)), &cross_polytope(0)), Kind::Other),
        inst("C_4 x K_2", strong_product(&cycle(4), &complete(2)), Kind::Other),
        inst("C_4 x C_5", strong_product(&cycle(4), &cycle(5)), Kind::Other),
        inst("K_3 v C_4", wedge(&cycle(3), &cycle(4), 0, 0).unwrap(), Kind::Other),
    ];
    for seed in 0..6u64 {
        let p = torsion_core::BigRational::new(1.into(), 2.into());
        out.push(inst(format!("G(8, 1/2) seed {seed}"), erdos_renyi(8, &p, seed).unwrap(), Kind::Other));
    }
    out
}

pub fn corpus() -> Vec<Instance> {
    let mut all = contractible();
    all.extend(spheres());
    all.extend(others());
    all
}
