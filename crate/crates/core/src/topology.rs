//! Inductive contractibility and sphere recognition.
//!
//! Both predicates recurse through induced subgraphs of the input graph, so
//! every intermediate graph is identified by its vertex subset. The memo
//! tables are keyed on those subsets.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::graph::Graph;

/// Default node budget of the searches.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// Three-valued answer of a budgeted search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Result of the topology checks on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyVerdict {
    pub contractible: Verdict,
    /// Vertex labels in removal order, ending with a single vertex left over.
    pub witness: Option<Vec<i64>>,
    pub sphere_dim: Option<i64>,
    pub search_budget_exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Set(Vec<u64>);

impl Set {
    fn empty(n: usize) -> Self {
        Set(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Set) -> Set {
        Set(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

struct Search<'a> {
    g: &'a Graph,
    nbr: Vec<Set>,
    contractible: HashMap<Set, (Verdict, Option<Vec<usize>>)>,
    sphere: HashMap<(Set, i64), Verdict>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        let n = g.vertex_count();
        let nbr = (0..n)
            .map(|i| {
                let mut s = Set::empty(n);
                for &j in g.neighbors(i) {
                    s.insert(j);
                }
                s
            })
            .collect();
        Self { g, nbr, contractible: HashMap::new(), sphere: HashMap::new(), nodes: 0, budget, exhausted: false }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn connected(&self, s: &Set) -> bool {
        let Some(start) = s.iter().next() else { return false };
        let mut seen = Set::empty(self.g.vertex_count());
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.nbr[u].and(s).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == s.len()
    }

    /// Euler characteristic of the clique complex of the induced subgraph.
    fn euler(&self, s: &Set) -> i64 {
        fn rec(search: &Search, cand: &Set, depth: usize) -> i64 {
            let mut total = 0;
            let mut rest = cand.clone();
            for v in cand.iter() {
                rest.remove(v);
                let sign = if depth.is_multiple_of(2) { 1 } else { -1 };
                total += sign + rec(search, &rest.and(&search.nbr[v]), depth + 1);
            }
            total
        }
        rec(self, s, 0)
    }

    fn is_contractible(&mut self, s: &Set) -> (Verdict, Option<Vec<usize>>) {
        let n = s.len();
        if n == 0 {
            return (Verdict::No, None);
        }
        if n == 1 {
            return (Verdict::Yes, Some(Vec::new()));
        }
        if let Some(r) = self.contractible.get(s) {
            return r.clone();
        }
        if !self.tick() {
            return (Verdict::Unknown, None);
        }
        let result = self.contractible_uncached(s);
        if result.0 != Verdict::Unknown {
            self.contractible.insert(s.clone(), result.clone());
        }
        result
    }

    fn contractible_uncached(&mut self, s: &Set) -> (Verdict, Option<Vec<usize>>) {
        let n = s.len();
        if !self.connected(s) {
            return (Verdict::No, None);
        }
        if let Some(hub) = s.iter().find(|&v| self.nbr[v].and(s).len() == n - 1) {
            return (Verdict::Yes, Some(s.iter().filter(|&v| v != hub).collect()));
        }
        if self.euler(s) != 1 {
            return (Verdict::No, None);
        }
        let mut unknown = false;
        let mut order: Vec<usize> = s.iter().collect();
        // small unit spheres first: they are cheap to decide
        order.sort_by_key(|&v| self.nbr[v].and(s).len());
        for v in order {
            let sphere = self.nbr[v].and(s);
            let (sv, _) = self.is_contractible(&sphere);
            if sv == Verdict::No {
                continue;
            }
            let mut rest = s.clone();
            rest.remove(v);
            let (rv, rw) = self.is_contractible(&rest);
            match (sv, rv) {
                (Verdict::Yes, Verdict::Yes) => {
                    let mut w = vec![v];
                    w.extend(rw.unwrap());
                    return (Verdict::Yes, Some(w));
                }
                (_, Verdict::No) => {}
                _ => unknown = true,
            }
            if self.exhausted {
                return (Verdict::Unknown, None);
            }
        }
        if unknown {
            (Verdict::Unknown, None)
        } else {
            (Verdict::No, None)
        }
    }

    fn is_sphere(&mut self, s: &Set, d: i64) -> Verdict {
        let n = s.len();
        if d < 0 {
            return if n == 0 && d == -1 { Verdict::Yes } else { Verdict::No };
        }
        if n == 0 {
            return Verdict::No;
        }
        let key = (s.clone(), d);
        if let Some(&r) = self.sphere.get(&key) {
            return r;
        }
        if !self.tick() {
            return Verdict::Unknown;
        }
        let r = self.sphere_uncached(s, d);
        if r != Verdict::Unknown {
            self.sphere.insert(key, r);
        }
        r
    }

    fn sphere_uncached(&mut self, s: &Set, d: i64) -> Verdict {
        let chi = if d % 2 == 0 { 2 } else { 0 };
        if self.euler(s) != chi {
            return Verdict::No;
        }
        let mut unknown = false;
        for v in s.iter().collect::<Vec<_>>() {
            match self.is_sphere(&self.nbr[v].and(s), d - 1) {
                Verdict::Yes => {}
                Verdict::No => return Verdict::No,
                Verdict::Unknown => unknown = true,
            }
        }
        if unknown {
            return Verdict::Unknown;
        }
        for v in s.iter().collect::<Vec<_>>() {
            let mut rest = s.clone();
            rest.remove(v);
            match self.is_contractible(&rest).0 {
                Verdict::Yes => return Verdict::Yes,
                Verdict::No => {}
                Verdict::Unknown => unknown = true,
            }
        }
        if unknown {
            Verdict::Unknown
        } else {
            Verdict::No
        }
    }
}

/// Inductive contractibility: `K_1` is contractible, and so is `G` when some
/// vertex has a contractible unit sphere and a contractible complement.
pub fn is_contractible(g: &Graph, budget: u64) -> TopologyVerdict {
    let mut search = Search::new(g, budget);
    let (v, w) = search.is_contractible(&Set::full(g.vertex_count()));
    let witness = w.map(|w| {
        let mut labels: Vec<i64> = w.iter().map(|&i| g.label(i)).collect();
        let removed: std::collections::BTreeSet<usize> = w.into_iter().collect();
        labels.extend((0..g.vertex_count()).filter(|i| !removed.contains(i)).map(|i| g.label(i)));
        labels
    });
    TopologyVerdict { contractible: v, witness, sphere_dim: None, search_budget_exhausted: search.exhausted }
}

/// Inductive `d`-sphere test: the empty graph is the `(-1)`-sphere; otherwise
/// all unit spheres are `(d-1)`-spheres and some `G - v` is contractible.
pub fn is_sphere(g: &Graph, d: i64, budget: u64) -> Verdict {
    let mut search = Search::new(g, budget);
    search.is_sphere(&Set::full(g.vertex_count()), d)
}

/// Contractibility plus a sphere test in the clique dimension.
pub fn classify(g: &Graph, budget: u64) -> TopologyVerdict {
    let mut out = is_contractible(g, budget);
    let d = crate::complex::clique_complex(g).dimension();
    let mut search = Search::new(g, budget);
    match search.is_sphere(&Set::full(g.vertex_count()), d) {
        Verdict::Yes => out.sphere_dim = Some(d),
        Verdict::No => {}
        Verdict::Unknown => out.search_budget_exhausted = true,
    }
    out.search_budget_exhausted |= search.exhausted;
    out
}

/// Maximal simplex dimension, `-1` when empty.
pub fn dimension(c: &SimplicialComplex) -> i64 {
    c.dimension()
}

/// Checks a removal witness independently of the search.
pub fn verify_witness(g: &Graph, witness: &[i64]) -> bool {
    fn check(g: &Graph, witness: &[i64]) -> bool {
        match witness {
            [] => false,
            [last] => g.vertex_count() == 1 && g.vertices()[0] == *last,
            [v, rest @ ..] => {
                let Ok(sphere) = g.unit_sphere(*v) else { return false };
                let Ok(minus) = g.remove_vertex(*v) else { return false };
                is_contractible(&sphere, DEFAULT_BUDGET).contractible == Verdict::Yes && check(&minus, rest)
            }
        }
    }
    check(g, witness)
}
