//! Canonical labeling and isomorphism-free enumeration of small graphs.
//!
//! Color refinement followed by individualization of the first non-singleton
//! cell; the canonical code is the lexicographically smallest permuted
//! adjacency over all leaves. Twins (vertices with equal neighborhoods up to
//! each other) are interchangeable, so only one of them is branched on.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count supported by the 64-bit adjacency rows.
pub const MAX_VERTICES: usize = 64;

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count()).map(|i| g.neighbors(i).iter().fold(0u64, |m, &j| m | 1 << j)).collect()
}

/// Replaces colors by the rank of `(color, sorted neighbor colors)` until stable.
fn refine(adj: &[u64], colors: &mut Vec<usize>) {
    let n = adj.len();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = keys.iter().collect();
        let ranked: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let next: Vec<usize> = keys.iter().map(|k| ranked.binary_search(&k).unwrap()).collect();
        *colors = next;
        if ranked.len() == before {
            return;
        }
    }
}

fn code_of(adj: &[u64], colors: &[usize]) -> Vec<u64> {
    let n = adj.len();
    let mut at = vec![0; n];
    for v in 0..n {
        at[colors[v]] = v;
    }
    (0..n).map(|i| (0..n).fold(0u64, |m, j| if adj[at[i]] >> at[j] & 1 == 1 { m | 1 << j } else { m })).collect()
}

fn twins(adj: &[u64], u: usize, v: usize) -> bool {
    let mask = !(1u64 << u | 1u64 << v);
    adj[u] & mask == adj[v] & mask
}

fn search(adj: &[u64], colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = adj.len();
    let mut count = vec![0; n];
    for &c in &colors {
        count[c] += 1;
    }
    let Some(cell) = (0..n).find(|&c| count[c] > 1) else {
        let code = code_of(adj, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut c: Vec<usize> = colors.iter().enumerate().map(|(w, &c)| 2 * c + usize::from(w != v)).collect();
        refine(adj, &mut c);
        search(adj, c, best);
    }
}

/// Canonical adjacency rows: isomorphic graphs, and only those, share a code.
pub fn canonical_code(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("canonical labeling of {n} vertices")));
    }
    let adj = rows(g);
    let mut colors = vec![0; n];
    refine(&adj, &mut colors);
    let mut best = None;
    search(&adj, colors, &mut best);
    Ok(best.unwrap_or_default())
}

fn from_code(code: &[u64]) -> Graph {
    let n = code.len();
    Graph::from_index_edges(
        n,
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| code[i] >> j & 1 == 1).map(move |j| (i, j))),
    )
}

/// The canonical relabeling of `g` onto `0..n`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(from_code(&canonical_code(g)?))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_code(g)? == canonical_code(h)?)
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical-code
/// order. Every connected graph arises from a connected graph on one vertex
/// fewer by adding a vertex with a nonempty neighborhood.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 10 {
        return Err(Error::TooLarge(format!("exhaustive enumeration on {n} vertices")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::from([vec![0u64]]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            for mask in 1u64..(1u64 << k) {
                let mut rows = code.clone();
                for (j, r) in rows.iter_mut().enumerate() {
                    if mask >> j & 1 == 1 {
                        *r |= 1 << k;
                    }
                }
                rows.push(mask);
                next.insert(canonical_code(&from_code(&rows))?);
            }
        }
        level = next;
    }
    Ok(level.iter().map(|c| from_code(c)).collect())
}
