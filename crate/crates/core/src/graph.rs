//! Simple weighted graphs, matchings and the brute-force oracle.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::PolyFrac;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// A matching as a sorted list of canonical edges.
pub type Matching = Vec<Edge>;

/// Edge labels in `Frac(Z[x])`.
pub type Labels = BTreeMap<Edge, PolyFrac>;

const NONE: usize = usize::MAX;

/// Orders the endpoints of `(u, v)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple graph on the vertices `0..n` with integer edge weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    weights: BTreeMap<Edge, i64>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            weights: BTreeMap::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from unit-weight edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_weighted_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v, w) in edges {
            g.add_weighted_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_weighted_edge(u, v, 1)
    }

    pub fn add_weighted_edge(&mut self, u: usize, v: usize, w: i64) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = edge(u, v);
        if self.weights.contains_key(&e) {
            return Err(Error::ParallelEdge(e.0, e.1));
        }
        self.weights.insert(e, w);
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
        Ok(())
    }

    /// Adds the edge unless it is a self-loop or already present.
    pub fn add_edge_if_absent(&mut self, u: usize, v: usize, w: i64) -> bool {
        u != v && !self.has_edge(u, v) && self.add_weighted_edge(u, v, w).is_ok()
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if self.weights.remove(&edge(u, v)).is_none() {
            return false;
        }
        self.adj[u].retain(|&x| x != v);
        self.adj[v].retain(|&x| x != u);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Edges with their weights in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, i64)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.weights.keys().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weights.contains_key(&edge(u, v))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        self.weights.get(&edge(u, v)).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Labels `x^w(e)` for every edge.
    pub fn weight_labels(&self) -> Labels {
        self.edges().map(|(e, w)| (e, PolyFrac::monomial(w))).collect()
    }

    /// The subgraph induced on `keep`, relabelled densely in ascending
    /// order; also returns the new-to-old vertex map.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().copied().filter(|&v| v < self.n).collect();
        let mut index = vec![NONE; self.n];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (&(u, v), &w) in &self.weights {
            if index[u] != NONE && index[v] != NONE {
                g.add_weighted_edge(index[u], index[v], w).unwrap();
            }
        }
        (g, old)
    }

    /// Connected components as ascending vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &u in &self.adj[comp[i]] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Checks that `f` is a matching of this graph and returns it canonically.
    pub fn check_matching(&self, f: &[Edge]) -> Result<Matching> {
        let mut covered = BTreeSet::new();
        let mut out = Vec::with_capacity(f.len());
        for &(u, v) in f {
            if u >= self.n || v >= self.n || !self.has_edge(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            for x in [u, v] {
                if !covered.insert(x) {
                    return Err(Error::NotAMatching(x));
                }
            }
            out.push(edge(u, v));
        }
        out.sort_unstable();
        Ok(out)
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    let pos = list.partition_point(|&x| x < v);
    list.insert(pos, v);
}

/// Edmonds' blossom algorithm restricted to the vertices with `alive[v]`.
struct Blossom<'a> {
    g: &'a Graph,
    alive: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, alive: &'a [bool]) -> Self {
        let n = g.n();
        Blossom {
            g,
            alive,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if !self.alive[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    self.queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.n();
        for v in 0..n {
            if !self.alive[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self
                .g
                .neighbors(v)
                .iter()
                .find(|&&u| self.alive[u] && self.mate[u] == NONE)
            {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
        for root in 0..n {
            if !self.alive[root] || self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

fn mates_to_matching(mate: &[usize]) -> Matching {
    mate.iter()
        .enumerate()
        .filter(|&(v, &u)| u != NONE && v < u)
        .map(|(v, &u)| (v, u))
        .collect()
}

/// A maximum-cardinality matching.
pub fn max_matching(g: &Graph) -> Matching {
    let alive = vec![true; g.n()];
    mates_to_matching(&Blossom::new(g, &alive).run())
}

/// A maximum matching of the subgraph induced by `alive`.
pub fn max_matching_masked(g: &Graph, alive: &[bool]) -> Matching {
    mates_to_matching(&Blossom::new(g, alive).run())
}

/// Whether the subgraph induced by `alive` has a perfect matching.
pub fn has_perfect_matching_masked(g: &Graph, alive: &[bool]) -> bool {
    let count = alive.iter().filter(|&&a| a).count();
    if count % 2 == 1 {
        return false;
    }
    if count == 0 {
        return true;
    }
    max_matching_masked(g, alive).len() * 2 == count
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_masked(g, &vec![true; g.n()])
}

/// A perfect matching if one exists.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let m = max_matching(g);
    (m.len() * 2 == g.n()).then_some(m)
}

/// Whether `f` extends to a perfect matching of `g`.
pub fn is_extendable(g: &Graph, f: &[Edge]) -> Result<bool> {
    let f = g.check_matching(f)?;
    let mut alive = vec![true; g.n()];
    for (u, v) in f {
        alive[u] = false;
        alive[v] = false;
    }
    Ok(has_perfect_matching_masked(g, &alive))
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap || g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    Ok(())
}

/// All perfect matchings in lexicographic order of their sorted edge lists.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>> {
    check_cap(g, cap)?;
    let mut out = Vec::new();
    if g.n() % 2 == 1 {
        return Ok(out);
    }
    let mut used = vec![false; g.n()];
    let mut current = Vec::with_capacity(g.n() / 2);
    enumerate_rec(g, &mut used, &mut current, &mut out);
    Ok(out)
}

fn enumerate_rec(g: &Graph, used: &mut [bool], current: &mut Matching, out: &mut Vec<Matching>) {
    let Some(v) = used.iter().position(|&u| !u) else {
        out.push(current.clone());
        return;
    };
    used[v] = true;
    for &u in g.neighbors(v) {
        if used[u] {
            continue;
        }
        used[u] = true;
        current.push((v, u));
        enumerate_rec(g, used, current, out);
        current.pop();
        used[u] = false;
    }
    used[v] = false;
}

/// `Σ_{M ∈ Perf(g)} Π_{e ∈ M} labels(e)` by exhaustive search over pairings.
pub fn genpm_bruteforce(g: &Graph, labels: &Labels, cap: usize) -> Result<PolyFrac> {
    check_cap(g, cap)?;
    check_labels(g, labels)?;
    if g.n() % 2 == 1 {
        return Ok(PolyFrac::zero());
    }
    let mut memo = BTreeMap::new();
    Ok(genpm_rec(g, labels, 0, &mut memo))
}

/// Verifies that `labels` covers exactly the edges of `g`.
pub fn check_labels(g: &Graph, labels: &Labels) -> Result<()> {
    if labels.len() != g.edge_count() || g.edges().any(|(e, _)| !labels.contains_key(&e)) {
        return Err(Error::LabelCount {
            labels: labels.len(),
            edges: g.edge_count(),
        });
    }
    Ok(())
}

fn genpm_rec(g: &Graph, labels: &Labels, used: u64, memo: &mut BTreeMap<u64, PolyFrac>) -> PolyFrac {
    let n = g.n();
    let v = (!used).trailing_zeros() as usize;
    if v >= n {
        return PolyFrac::one();
    }
    if let Some(val) = memo.get(&used) {
        return val.clone();
    }
    let mut total = PolyFrac::zero();
    for &u in g.neighbors(v) {
        if used & (1 << u) != 0 {
            continue;
        }
        let rest = genpm_rec(g, labels, used | (1 << v) | (1 << u), memo);
        if !rest.is_zero() {
            total += &(&labels[&(v, u)] * &rest);
        }
    }
    memo.insert(used, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::ParallelEdge(0, 1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, .. })));
    }

    #[test]
    fn max_matching_examples() {
        assert!(max_matching(&Graph::new(0)).is_empty());
        assert_eq!(max_matching(&cycle(3)).len(), 1);
        assert_eq!(max_matching(&petersen()).len(), 5);
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&Graph::new(0)));
        assert!(!has_perfect_matching(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()));
        assert!(has_perfect_matching(&cycle(4)));
    }

    #[test]
    fn extendability_examples() {
        assert!(is_extendable(&cycle(4), &[(0, 1)]).unwrap());
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_extendable(&path, &[(1, 2)]).unwrap());
        assert!(is_extendable(&complete(4), &[(2, 3)]).unwrap());
        assert_eq!(is_extendable(&path, &[(0, 1), (1, 2)]), Err(Error::NotAMatching(1)));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_perfect_matchings(&cycle(4), 20).unwrap().len(), 2);
        assert_eq!(enumerate_perfect_matchings(&complete(4), 20).unwrap().len(), 3);
        let mut k33 = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b).unwrap();
            }
        }
        let all = enumerate_perfect_matchings(&k33, 20).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            enumerate_perfect_matchings(&Graph::new(22), 20),
            Err(Error::TooLarge { n: 22, cap: 20 })
        ));
    }

    #[test]
    fn bruteforce_examples() {
        let e = Graph::from_weighted_edges(2, &[(0, 1, 3)]).unwrap();
        assert_eq!(genpm_bruteforce(&e, &e.weight_labels(), 20).unwrap(), PolyFrac::monomial(3));
        let c4 = cycle(4);
        assert_eq!(
            genpm_bruteforce(&c4, &c4.weight_labels(), 20).unwrap().to_string(),
            "2*x^2"
        );
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(genpm_bruteforce(&p3, &p3.weight_labels(), 20).unwrap().is_zero());
        assert!(genpm_bruteforce(&Graph::new(0), &Labels::new(), 20).unwrap().is_one());
    }
}
