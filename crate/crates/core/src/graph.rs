//! Finite simple graphs with integer vertex labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A finite simple graph.
///
/// Vertices carry integer labels and are kept sorted; internally every
/// algorithm works on the position of a label in that sorted list, so vertex
/// index `i` always refers to `vertices()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and edges whose
    /// endpoints are not listed vertices.
    pub fn new(vertices: Vec<i64>, edges: &[(i64, i64)]) -> Result<Self> {
        let mut labels = vertices;
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        let index: BTreeMap<i64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut seen = BTreeSet::new();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            let ia = *index.get(&a).ok_or(Error::UnknownVertex(a))?;
            let ib = *index.get(&b).ok_or(Error::UnknownVertex(b))?;
            let key = (ia.min(ib), ia.max(ib));
            if !seen.insert(key) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Self { labels, adj })
    }

    /// Vertices `0..n` joined by the given index pairs. Duplicate pairs are merged.
    pub(crate) fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        for (a, b) in edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Self { labels: (0..n as i64).collect(), adj: adj.into_iter().map(|s| s.into_iter().collect()).collect() }
    }

    /// Like [`Graph::from_index_edges`] with explicit (sorted, distinct) labels.
    pub(crate) fn with_labels(labels: Vec<i64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::from_index_edges(labels.len(), edges);
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        g.labels = labels;
        g
    }

    pub fn empty() -> Self {
        Self { labels: Vec::new(), adj: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> i64 {
        self.labels[i]
    }

    pub fn index_of(&self, label: i64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Sorted neighbor indices of vertex index `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn index_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Edges as label pairs, smaller label first.
    pub fn edges(&self) -> Vec<(i64, i64)> {
        self.index_edges().map(|(i, j)| (self.labels[i], self.labels[j])).collect()
    }

    /// Subgraph induced by the given vertex indices; labels are preserved.
    pub fn induced(&self, indices: &[usize]) -> Graph {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut edges = Vec::new();
        for (p, &i) in idx.iter().enumerate() {
            for &j in &self.adj[i] {
                if let Some(&q) = pos.get(&j) {
                    if q > p {
                        edges.push((p, q));
                    }
                }
            }
        }
        Graph::with_labels(idx.iter().map(|&i| self.labels[i]).collect(), edges)
    }

    /// The graph induced by the neighbors of `v`.
    pub fn unit_sphere(&self, v: i64) -> Result<Graph> {
        let i = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        Ok(self.induced(&self.adj[i]))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: i64) -> Result<Graph> {
        let i = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&j| j != i).collect();
        Ok(self.induced(&keep))
    }

    /// Connected components as sorted lists of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Relabel vertices to `0..n` preserving order.
    pub fn normalized(&self) -> Graph {
        Graph { labels: (0..self.vertex_count() as i64).collect(), adj: self.adj.clone() }
    }

    /// Returns a copy whose labels are shifted by `offset`.
    pub fn shifted(&self, offset: i64) -> Graph {
        Graph { labels: self.labels.iter().map(|l| l + offset).collect(), adj: self.adj.clone() }
    }

    /// Kirchhoff matrix `B - A` as a row-major integer grid.
    pub fn kirchhoff(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = self.adj[i].len() as i64;
            for &j in &self.adj[i] {
                m[i][j] = -1;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(vec![1, 2], &[(1, 1)]).is_err());
        assert!(Graph::new(vec![1, 2], &[(1, 2), (2, 1)]).is_err());
        assert!(matches!(Graph::new(vec![1, 2], &[(1, 3)]), Err(Error::UnknownVertex(3))));
        assert!(Graph::new(vec![1, 1], &[]).is_err());
    }

    #[test]
    fn path_unit_sphere_of_endpoint_is_single_vertex() {
        let g = Graph::new(vec![1, 2, 3], &[(1, 2), (2, 3)]).unwrap();
        let s = g.unit_sphere(1).unwrap();
        assert_eq!(s.vertices(), &[2]);
        assert_eq!(s.edge_count(), 0);
        assert!(matches!(g.unit_sphere(9), Err(Error::UnknownVertex(9))));
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(vec![0, 1, 2, 3], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        assert!(!Graph::empty().is_connected());
    }
}
