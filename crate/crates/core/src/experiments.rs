//! Seeded experiment tables: random-graph sweeps, sequences, conjecture grids
//! and extremal scans.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::canon::connected_graphs;
use crate::chain::build_chain;
use crate::complex::clique_complex;
use crate::constructors::{
    complement, complete, complete_multipartite, cycle, erdos_renyi, path, strong_product, wheel,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{graph_file, GraphFile};
use crate::serial::{rat_str, sig12};
use crate::torsion::torsion_dirac;

/// Exact torsion of the clique complex of `g`.
pub fn graph_torsion(g: &Graph) -> Result<BigRational> {
    torsion_dirac(&build_chain(&clique_complex(g))?.chain)
}

/// Torsion used by the random sweep: an edgeless graph counts `|V|`, any other
/// graph is the product over its components, isolated vertices giving 1.
pub fn sweep_torsion(g: &Graph) -> Result<BigRational> {
    if g.edge_count() == 0 {
        return Ok(BigRational::from_integer(g.vertex_count().into()));
    }
    graph_torsion(g)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(serialize_with = "rat_str")]
    pub p: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub mean_a: BigRational,
    pub mean_log_a: f64,
    pub samples: usize,
}

/// Samples `samples` graphs `G(n, p)` per grid point. Sample seeds are drawn
/// in order from one SplitMix64 stream, so a run depends only on its inputs.
pub fn er_sweep(n: usize, p_grid: &[BigRational], samples: usize, seed: u64) -> Result<Vec<SweepRow>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("at least one sample per grid point".into()));
    }
    let mut seeds = SplitMix64::from_seed(seed.to_le_bytes());
    let mut rows = Vec::with_capacity(p_grid.len());
    for p in p_grid {
        let mut sum = BigRational::zero();
        let mut log_sum = 0.0;
        for _ in 0..samples {
            let g = erdos_renyi(n, p, seeds.next_u64())?;
            let a = sweep_torsion(&g)?;
            log_sum += a.numer().to_f64().unwrap_or(f64::NAN).ln() - a.denom().to_f64().unwrap_or(f64::NAN).ln();
            sum += a;
        }
        rows.push(SweepRow {
            p: p.clone(),
            mean_a: sum / BigInt::from(samples),
            mean_log_a: log_sum / samples as f64,
            samples,
        });
    }
    Ok(rows)
}

pub const SWEEP_HEADER: &str =
    "# edgeless samples count |V|; otherwise A is the product over components\np,mean_a,mean_log_a,samples\n";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    for r in rows {
        let mean = r.mean_a.to_f64().unwrap_or(f64::NAN);
        writeln!(out, "{},{},{},{}", r.p, sig12(mean), sig12(r.mean_log_a), r.samples).expect("writing to a String");
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceTarget {
    CycleComplement,
    PathComplement,
}

impl std::str::FromStr for SequenceTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle_complement" => Ok(Self::CycleComplement),
            "path_complement" => Ok(Self::PathComplement),
            _ => Err(Error::InvalidParameter(format!("unknown sequence {s:?}"))),
        }
    }
}

pub const MAX_SEQUENCE_N: usize = 16;

/// `A` of the complement of `C_n` (or `P_n`) for `n = 1..=n_max`. Here `C_1`
/// and `C_2` are `K_1` and `K_2`.
pub fn sequence(target: SequenceTarget, n_max: usize) -> Result<Vec<BigRational>> {
    if n_max > MAX_SEQUENCE_N {
        return Err(Error::TooLarge(format!("sequence up to n = {n_max} (at most {MAX_SEQUENCE_N})")));
    }
    (1..=n_max)
        .map(|n| {
            let base = match target {
                SequenceTarget::CycleComplement if n < 3 => complete(n),
                SequenceTarget::CycleComplement => cycle(n),
                SequenceTarget::PathComplement => path(n),
            };
            graph_torsion(&complement(&base))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureTarget {
    /// `A(C_n * C_m) = 1/9`.
    ShannonTori,
    /// `A(C_n * K_m) = n^2 / m`.
    Cylinders,
    /// `A(C_n * W_m) = n^2 m / (4m + 1)`.
    Wheels,
    /// `A(C_n * L_m) = n^2 m / (3m - 2)`.
    Linear,
}

impl std::str::FromStr for ConjectureTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shannon_tori" => Ok(Self::ShannonTori),
            "cylinders" => Ok(Self::Cylinders),
            "wheels" => Ok(Self::Wheels),
            "linear" => Ok(Self::Linear),
            _ => Err(Error::InvalidParameter(format!("unknown conjecture {s:?}"))),
        }
    }
}

impl ConjectureTarget {
    /// Default `(n range, m range)`.
    pub fn default_ranges(self) -> ((usize, usize), (usize, usize)) {
        match self {
            Self::ShannonTori => ((4, 6), (4, 6)),
            Self::Cylinders => ((4, 6), (1, 4)),
            Self::Wheels => ((4, 5), (5, 7)),
            Self::Linear => ((4, 6), (2, 5)),
        }
    }

    fn second(self, m: usize) -> Result<Graph> {
        match self {
            Self::ShannonTori if m < 4 => Err(Error::InvalidParameter(format!("C_{m} has no 1-sphere clique complex"))),
            Self::ShannonTori => Ok(cycle(m)),
            Self::Cylinders => Ok(complete(m)),
            Self::Wheels if m < 4 => Err(Error::InvalidParameter(format!("wheel with {m} vertices"))),
            Self::Wheels => Ok(wheel(m)),
            Self::Linear => Ok(path(m)),
        }
    }

    pub fn predicted(self, n: usize, m: usize) -> BigRational {
        let r = |p: usize, q: usize| BigRational::new(p.into(), q.into());
        match self {
            Self::ShannonTori => r(1, 9),
            Self::Cylinders => r(n * n, m),
            Self::Wheels => r(n * n * m, 4 * m + 1),
            Self::Linear => r(n * n * m, 3 * m - 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureCell {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "rat_str")]
    pub torsion: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub predicted: BigRational,
    pub holds: bool,
}

/// Exact `A(C_n * H_m)` against the conjectured closed form on a grid.
/// Mismatches are data, not errors.
pub fn conjecture(target: ConjectureTarget, ns: (usize, usize), ms: (usize, usize)) -> Result<Vec<ConjectureCell>> {
    if ns.1 > 7 || ms.1 > 7 {
        return Err(Error::TooLarge("conjecture grids are limited to n, m <= 7".into()));
    }
    if ns.0 < 4 {
        return Err(Error::InvalidParameter("C_n needs n >= 4".into()));
    }
    let mut cells = Vec::new();
    for n in ns.0..=ns.1 {
        for m in ms.0..=ms.1 {
            let torsion = graph_torsion(&strong_product(&cycle(n), &target.second(m)?))?;
            let predicted = target.predicted(n, m);
            cells.push(ConjectureCell { n, m, holds: torsion == predicted, torsion, predicted });
        }
    }
    Ok(cells)
}

pub fn conjecture_csv(cells: &[ConjectureCell]) -> String {
    let mut out = String::from("n,m,torsion,predicted,holds\n");
    for c in cells {
        writeln!(out, "{},{},{},{},{}", c.n, c.m, c.torsion, c.predicted, c.holds).expect("writing to a String");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidate {
    pub graph: GraphFile,
    #[serde(serialize_with = "rat_str")]
    pub torsion: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub exhaustive: bool,
    pub scanned: usize,
    pub max: Candidate,
    pub min: Candidate,
    /// `K_{n/2,n/2}` for even `n`, whether or not it was among the scanned graphs.
    pub balanced_bipartite: Option<Candidate>,
}

pub const MAX_EXHAUSTIVE_N: usize = 8;

fn candidate(g: &Graph) -> Result<Candidate> {
    Ok(Candidate { graph: graph_file(g), torsion: graph_torsion(g)? })
}

/// Largest and smallest torsion among connected graphs on `n` vertices:
/// all of them up to isomorphism for `n <= 8`, otherwise `samples` random
/// connected graphs with edge probability drawn per sample.
pub fn extremal(n: usize, samples: usize, seed: u64) -> Result<ExtremalReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("extremal scan needs n >= 1".into()));
    }
    let exhaustive = n <= MAX_EXHAUSTIVE_N;
    let graphs = if exhaustive {
        connected_graphs(n)?
    } else {
        let mut rng = SplitMix64::from_seed(seed.to_le_bytes());
        let mut out = Vec::with_capacity(samples);
        while out.len() < samples {
            let p = BigRational::new(BigInt::from(1 + rng.next_u64() % 99), BigInt::from(100));
            let g = erdos_renyi(n, &p, rng.next_u64())?;
            if g.is_connected() {
                out.push(g);
            }
        }
        out
    };
    let mut best: Option<(Graph, BigRational)> = None;
    let mut worst: Option<(Graph, BigRational)> = None;
    for g in &graphs {
        let a = graph_torsion(g)?;
        if best.as_ref().is_none_or(|(_, b)| a > *b) {
            best = Some((g.clone(), a.clone()));
        }
        if worst.as_ref().is_none_or(|(_, w)| a < *w) {
            worst = Some((g.clone(), a));
        }
    }
    let (Some((gmax, amax)), Some((gmin, amin))) = (best, worst) else {
        return Err(Error::InvalidParameter("extremal scan needs at least one sample".into()));
    };
    let balanced_bipartite =
        if n.is_multiple_of(2) { Some(candidate(&complete_multipartite(&[n / 2, n / 2]))?) } else { None };
    Ok(ExtremalReport {
        n,
        exhaustive,
        scanned: graphs.len(),
        max: Candidate { graph: graph_file(&gmax), torsion: amax },
        min: Candidate { graph: graph_file(&gmin), torsion: amin },
        balanced_bipartite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn sweep_endpoints_and_determinism() {
        let grid = [rat(0, 1), rat(1, 1)];
        let rows = er_sweep(5, &grid, 3, 11).unwrap();
        assert_eq!(rows[0].mean_a, rat(5, 1));
        assert_eq!(rows[1].mean_a, rat(5, 1));
        let again = er_sweep(5, &grid, 3, 11).unwrap();
        assert_eq!(sweep_csv(&rows), sweep_csv(&again));
        assert!(er_sweep(5, &grid, 0, 1).is_err());
    }

    #[test]
    fn sequence_entries() {
        let c = sequence(SequenceTarget::CycleComplement, 11).unwrap();
        assert_eq!(c[4], rat(25, 1));
        assert_eq!(c[10], rat(1452, 7));
        assert_eq!(sequence(SequenceTarget::PathComplement, 5).unwrap()[4], rat(55, 3));
        assert!(sequence(SequenceTarget::PathComplement, 17).is_err());
    }

    #[test]
    fn conjecture_grids() {
        let tori = conjecture(ConjectureTarget::ShannonTori, (4, 5), (5, 5)).unwrap();
        assert!(tori.iter().all(|c| c.holds));
        let cyl = conjecture(ConjectureTarget::Cylinders, (4, 4), (2, 2)).unwrap();
        assert_eq!(cyl[0].torsion, rat(8, 1));
        let lin = conjecture(ConjectureTarget::Linear, (4, 4), (3, 3)).unwrap();
        assert_eq!(lin[0].torsion, rat(48, 7));
        assert!(conjecture(ConjectureTarget::Wheels, (4, 8), (5, 5)).is_err());
    }

    #[test]
    fn extremal_on_five_vertices() {
        let r = extremal(5, 0, 0).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.scanned, 21);
        assert!(r.balanced_bipartite.is_none());
        assert_eq!((r.max.torsion.clone(), r.min.torsion.clone()), (rat(60, 1), rat(5, 1)));
        let big = Graph::new(r.max.graph.vertices.clone(), &r.max.graph.edges).unwrap();
        assert!(are_isomorphic(&big, &complete_multipartite(&[2, 3])).unwrap());
    }
}
