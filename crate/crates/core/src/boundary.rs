//! Boundary graphs, aligned matchings and partial generating-function tables.
//!
//! A boundary graph `(G, X, p)` lives in a global vertex namespace so that
//! subgraphs of one host can be compared and glued without relabelling. For
//! a matching `F` whose edges all meet `X`, the table entry is
//! `P_F = p(F) * GenPM(G - V(F) - X)`, stored exactly when `F` is aligned,
//! that is when `G - V(F) - X` has a perfect matching.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{self, edge, Edge, Graph, Labels, Matching};
use crate::limits::Limits;
use crate::pfaffian;
use crate::poly::PolyFrac;

/// Labelled graph with a designated boundary, over global vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryGraph {
    vertices: BTreeSet<usize>,
    labels: Labels,
    boundary: BTreeSet<usize>,
}

impl BoundaryGraph {
    pub fn new(vertices: BTreeSet<usize>, labels: Labels, boundary: BTreeSet<usize>) -> Result<Self> {
        for &(u, v) in labels.keys() {
            if u >= v {
                return Err(Error::PreconditionViolated(format!("edge ({u}, {v}) is not canonical")));
            }
            for x in [u, v] {
                if !vertices.contains(&x) {
                    return Err(Error::PreconditionViolated(format!(
                        "edge ({u}, {v}) leaves the vertex set"
                    )));
                }
            }
        }
        if let Some(x) = boundary.iter().find(|x| !vertices.contains(x)) {
            return Err(Error::PreconditionViolated(format!("boundary vertex {x} is not a vertex")));
        }
        Ok(BoundaryGraph {
            vertices,
            labels,
            boundary,
        })
    }

    /// The whole of `g` with the given labels and boundary.
    pub fn from_graph(g: &Graph, labels: &Labels, boundary: BTreeSet<usize>) -> Result<Self> {
        graph::check_labels(g, labels)?;
        BoundaryGraph::new((0..g.n()).collect(), labels.clone(), boundary)
    }

    /// `g` with labels `x^w(e)`.
    pub fn weighted(g: &Graph, boundary: BTreeSet<usize>) -> Result<Self> {
        BoundaryGraph::from_graph(g, &g.weight_labels(), boundary)
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn boundary(&self) -> &BTreeSet<usize> {
        &self.boundary
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.labels.contains_key(&edge(u, v))
    }

    pub fn label(&self, e: Edge) -> Option<&PolyFrac> {
        self.labels.get(&e)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Same graph with a different boundary.
    pub fn with_boundary(&self, boundary: BTreeSet<usize>) -> Result<Self> {
        BoundaryGraph::new(self.vertices.clone(), self.labels.clone(), boundary)
    }

    /// Adds `extra` to the boundary, inserting missing ones as isolated
    /// vertices. Aligned matchings and their entries are unchanged.
    pub fn padded(&self, extra: &BTreeSet<usize>) -> BoundaryGraph {
        let mut out = self.clone();
        for &v in extra {
            out.vertices.insert(v);
            out.boundary.insert(v);
        }
        out
    }

    /// Product of the labels of `f`; panics on edges outside the graph.
    pub fn weight_of(&self, f: &[Edge]) -> PolyFrac {
        f.iter().map(|e| self.labels[e].clone()).product()
    }

    pub(crate) fn dense(&self) -> Dense {
        let ids: Vec<usize> = self.vertices.iter().copied().collect();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(ids.len());
        let mut labels = Labels::new();
        for (&(u, v), p) in &self.labels {
            let (a, b) = (index[&u], index[&v]);
            g.add_edge(a, b).unwrap();
            labels.insert(edge(a, b), p.clone());
        }
        Dense { g, labels, ids, index }
    }
}

/// Densely relabelled copy of a boundary graph for the matching kernels.
pub(crate) struct Dense {
    pub g: Graph,
    pub labels: Labels,
    pub ids: Vec<usize>,
    pub index: BTreeMap<usize, usize>,
}

impl Dense {
    fn local_set(&self, set: &BTreeSet<usize>) -> Vec<usize> {
        set.iter().filter_map(|v| self.index.get(v).copied()).collect()
    }

    /// The subgraph on the vertices with `alive[v]`, with its labels.
    pub fn residual(&self, alive: &[bool]) -> (Graph, Labels, Vec<usize>) {
        let keep: BTreeSet<usize> = (0..self.g.n()).filter(|&v| alive[v]).collect();
        let (g, old) = self.g.induced(&keep);
        let labels = g
            .edges()
            .map(|((u, v), _)| ((u, v), self.labels[&edge(old[u], old[v])].clone()))
            .collect();
        let ids = old.iter().map(|&v| self.ids[v]).collect();
        (g, labels, ids)
    }
}

/// Counts enumerated candidates against a budget.
pub(crate) struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    pub fn new(limit: u64) -> Self {
        Work { used: 0, limit }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::WorkLimitExceeded(self.limit));
        }
        Ok(())
    }
}

/// Matchings `F` with every edge meeting `touch`, covering `must_cover`,
/// such that `G - V(F) - touch` has a perfect matching. Returned with
/// global edge ids, in lexicographic order.
pub(crate) fn anchored_matchings(
    d: &Dense,
    touch: &BTreeSet<usize>,
    must_cover: &BTreeSet<usize>,
    work: &mut Work,
) -> Result<Vec<Matching>> {
    let t = d.local_set(touch);
    let mut in_touch = vec![false; d.g.n()];
    for &v in &t {
        in_touch[v] = true;
    }
    let mut must = vec![false; d.g.n()];
    for v in d.local_set(must_cover) {
        must[v] = true;
    }
    let mut state = Search {
        d,
        t: &t,
        in_touch: &in_touch,
        must: &must,
        covered: vec![false; d.g.n()],
        current: Vec::new(),
        out: Vec::new(),
        work,
    };
    state.rec(0)?;
    let mut out: Vec<Matching> = state
        .out
        .into_iter()
        .map(|m| {
            let mut g: Matching = m.into_iter().map(|(u, v)| edge(d.ids[u], d.ids[v])).collect();
            g.sort_unstable();
            g
        })
        .collect();
    out.sort();
    Ok(out)
}

struct Search<'a> {
    d: &'a Dense,
    t: &'a [usize],
    in_touch: &'a [bool],
    must: &'a [bool],
    covered: Vec<bool>,
    current: Vec<Edge>,
    out: Vec<Vec<Edge>>,
    work: &'a mut Work,
}

impl Search<'_> {
    fn rec(&mut self, i: usize) -> Result<()> {
        if i == self.t.len() {
            self.work.tick()?;
            let alive: Vec<bool> = (0..self.d.g.n())
                .map(|v| !self.covered[v] && !self.in_touch[v])
                .collect();
            if graph::has_perfect_matching_masked(&self.d.g, &alive) {
                self.out.push(self.current.clone());
            }
            return Ok(());
        }
        let v = self.t[i];
        if self.covered[v] {
            return self.rec(i + 1);
        }
        if !self.must[v] {
            self.rec(i + 1)?;
        }
        self.covered[v] = true;
        for &u in self.d.g.neighbors(v) {
            if self.covered[u] || (self.in_touch[u] && u < v) {
                continue;
            }
            self.covered[u] = true;
            self.current.push(edge(v, u));
            self.rec(i + 1)?;
            self.current.pop();
            self.covered[u] = false;
        }
        self.covered[v] = false;
        Ok(())
    }
}

/// Map from aligned matchings to partial generating functions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenTable {
    entries: BTreeMap<Matching, PolyFrac>,
}

impl GenTable {
    pub fn new() -> Self {
        GenTable::default()
    }

    /// The table `{ ∅ -> value }`.
    pub fn single(value: PolyFrac) -> Self {
        let mut t = GenTable::new();
        t.insert(Vec::new(), value);
        t
    }

    pub fn insert(&mut self, key: Matching, value: PolyFrac) {
        self.entries.insert(key, value);
    }

    pub fn get(&self, key: &[Edge]) -> Option<&PolyFrac> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Matching, &PolyFrac)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Matching> {
        self.entries.keys()
    }

    /// One line per entry: `F=[(u,v),...] -> <polyfrac>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            s.push_str(&format!("{self_key} -> {v}\n", self_key = key_string(k)));
        }
        s
    }
}

impl fmt::Display for GenTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

pub fn key_string(k: &[Edge]) -> String {
    let parts: Vec<String> = k.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("F=[{}]", parts.join(","))
}

/// `Aligned(G, X)` in lexicographic order.
pub fn aligned_matchings(b: &BoundaryGraph) -> Vec<Matching> {
    let d = b.dense();
    anchored_matchings(&d, &b.boundary, &BTreeSet::new(), &mut Work::new(u64::MAX))
        .expect("unbounded work budget")
}

fn touched(f: &[Edge]) -> BTreeSet<usize> {
    f.iter().flat_map(|&(u, v)| [u, v]).collect()
}

/// Reference table by direct evaluation of every entry: exhaustive search
/// when the residual fits under the oracle cap, the planar kernel otherwise.
pub fn table_of(b: &BoundaryGraph, limits: &Limits) -> Result<GenTable> {
    let d = b.dense();
    let keys = anchored_matchings(&d, &b.boundary, &BTreeSet::new(), &mut Work::new(limits.work_limit))?;
    let values = exec::map(&keys, |f| -> Result<PolyFrac> {
        let gone = touched(f);
        let alive: Vec<bool> = d
            .ids
            .iter()
            .map(|v| !gone.contains(v) && !b.boundary.contains(v))
            .collect();
        let (g, labels, _) = d.residual(&alive);
        let rest = if g.n() <= limits.oracle_cap {
            graph::genpm_bruteforce(&g, &labels, limits.oracle_cap)?
        } else {
            match pfaffian::genpm_planar(&g, &labels) {
                Err(Error::NotPlanar) => {
                    return Err(Error::TooLarge {
                        n: g.n(),
                        cap: limits.oracle_cap,
                    })
                }
                other => other?,
            }
        };
        Ok(b.weight_of(f) * rest)
    });
    let mut table = GenTable::new();
    for (k, v) in keys.into_iter().zip(values) {
        table.insert(k, v?);
    }
    Ok(table)
}

fn violated(msg: &str) -> Error {
    Error::PreconditionViolated(String::from(msg))
}

fn check_subgraph(h: &BoundaryGraph, g: &BoundaryGraph) -> Result<()> {
    if !h.vertices.is_subset(&g.vertices) {
        return Err(violated("V(H) is not contained in V(G)"));
    }
    for (e, p) in &h.labels {
        match g.labels.get(e) {
            None => return Err(violated("E(H) is not contained in E(G)")),
            Some(q) if q != p => return Err(Error::LabelMismatch(e.0, e.1)),
            _ => {}
        }
    }
    Ok(())
}

/// Table of `(G, X)` from the table of a boundary subgraph `(H, Y)` that
/// contains everything outside the small vertex set `Z`.
///
/// Requires `X, Y ⊆ Z ⊆ V(G)`, `G - Z = H - Y`, and every edge of `G` at a
/// vertex of `H - Y` to be an edge of `H`.
pub fn table_small_bag(
    child: (&BoundaryGraph, &GenTable),
    host: &BoundaryGraph,
    z: &BTreeSet<usize>,
    limits: &Limits,
) -> Result<GenTable> {
    let (h, h_table) = child;
    if !host.boundary.is_subset(z) {
        return Err(violated("X is not contained in Z"));
    }
    if !h.boundary.is_subset(z) {
        return Err(violated("Y is not contained in Z"));
    }
    if !z.is_subset(&host.vertices) {
        return Err(violated("Z is not contained in V(G)"));
    }
    check_subgraph(h, host)?;
    let outside_g: BTreeSet<usize> = host.vertices.difference(z).copied().collect();
    let inside_h: BTreeSet<usize> = h.vertices.difference(&h.boundary).copied().collect();
    if outside_g != inside_h {
        return Err(violated("V(G) - Z differs from V(H) - Y"));
    }
    for &(u, v) in host.labels.keys() {
        if (inside_h.contains(&u) || inside_h.contains(&v)) && !h.has_edge(u, v) {
            return Err(violated("an edge of G outside H meets H - Y"));
        }
    }

    let d = host.dense();
    let must: BTreeSet<usize> = z.difference(&host.boundary).copied().collect();
    let fs = anchored_matchings(&d, z, &must, &mut Work::new(limits.work_limit))?;
    let mut table = GenTable::new();
    for f in fs {
        let (f2, f3): (Vec<Edge>, Vec<Edge>) = f.iter().partition(|&&(u, v)| h.has_edge(u, v));
        let r: Matching = f
            .iter()
            .copied()
            .filter(|(u, v)| host.boundary.contains(u) || host.boundary.contains(v))
            .collect();
        let contribution = match h_table.get(&f2) {
            Some(p) => host.weight_of(&f3) * p,
            None => PolyFrac::zero(),
        };
        *table.entries.entry(r).or_default() += contribution;
    }
    Ok(table)
}

/// Table of `(G, X)` when `G - A` is handled by the genus-dispatched kernel.
pub fn table_genus_apex(
    b: &BoundaryGraph,
    apex: &BTreeSet<usize>,
    genus_budget: usize,
    limits: &Limits,
) -> Result<GenTable> {
    if b.boundary.len() > limits.k {
        return Err(violated("|X| exceeds k"));
    }
    if apex.len() > limits.k {
        return Err(violated("|A| exceeds k"));
    }
    if !apex.is_subset(&b.vertices) {
        return Err(violated("A is not contained in V(G)"));
    }
    let d = b.dense();
    let touch: BTreeSet<usize> = apex.union(&b.boundary).copied().collect();
    let must: BTreeSet<usize> = apex.difference(&b.boundary).copied().collect();
    let fs = anchored_matchings(&d, &touch, &must, &mut Work::new(limits.work_limit))?;
    let values = exec::map(&fs, |f| -> Result<PolyFrac> {
        let gone = touched(f);
        let alive: Vec<bool> = d
            .ids
            .iter()
            .map(|v| !gone.contains(v) && !b.boundary.contains(v))
            .collect();
        let (g, labels, _) = d.residual(&alive);
        let rest = pfaffian::genpm_surface(&g, &labels, genus_budget, limits.oracle_cap)?;
        Ok(b.weight_of(f) * rest)
    });
    let mut table = GenTable::new();
    for (f, v) in fs.iter().zip(values) {
        let v = v?;
        let r: Matching = f
            .iter()
            .copied()
            .filter(|(u, v)| b.boundary.contains(u) || b.boundary.contains(v))
            .collect();
        *table.entries.entry(r).or_default() += v;
    }
    Ok(table)
}

/// `Σ P_W / p(required)` over the entries `W` of a boundary graph's table
/// with `required ⊆ W` and, for each boundary vertex `y`,
/// `y ∈ V(W)` iff `y ∈ V(required)` or `y ∉ deleted`.
/// A zero label among `required` gives zero.
pub(crate) fn restricted_sum(
    b: &BoundaryGraph,
    table: &GenTable,
    required: &[Edge],
    deleted: &BTreeSet<usize>,
) -> PolyFrac {
    let divisor = b.weight_of(required);
    if divisor.is_zero() {
        return PolyFrac::zero();
    }
    let req_v = touched(required);
    let mut sum = PolyFrac::zero();
    'entries: for (w, p) in table.iter() {
        if !required.iter().all(|e| w.binary_search(e).is_ok()) {
            continue;
        }
        let wv = touched(w);
        for y in &b.boundary {
            let want = req_v.contains(y) || !deleted.contains(y);
            if wv.contains(y) != want {
                continue 'entries;
            }
        }
        sum += p;
    }
    if sum.is_zero() {
        return sum;
    }
    sum.checked_div(&divisor).expect("nonzero divisor")
}

/// Glues two boundary graphs that meet only inside both boundaries. The
/// result has boundary `X1 ∩ X2`.
pub fn merge_tables(
    left: (&BoundaryGraph, &GenTable),
    right: (&BoundaryGraph, &GenTable),
    limits: &Limits,
) -> Result<(BoundaryGraph, GenTable)> {
    let (h1, t1) = left;
    let (h2, t2) = right;
    let x: BTreeSet<usize> = h1.boundary.intersection(&h2.boundary).copied().collect();
    if let Some(&v) = h1.vertices.intersection(&h2.vertices).find(|v| !x.contains(v)) {
        return Err(Error::OverlapViolated(v));
    }
    let mut labels = h1.labels.clone();
    for (e, p) in &h2.labels {
        if let Some(q) = labels.get(e) {
            if q != p {
                return Err(Error::LabelMismatch(e.0, e.1));
            }
        } else {
            labels.insert(*e, p.clone());
        }
    }
    let vertices = h1.vertices.union(&h2.vertices).copied().collect();
    let union = BoundaryGraph::new(vertices, labels, x.clone())?;
    let d = union.dense();
    let fs = anchored_matchings(&d, &x, &BTreeSet::new(), &mut Work::new(limits.work_limit))?;
    let mut table = GenTable::new();
    for f in fs {
        let gone: BTreeSet<usize> = touched(&f).union(&x).copied().collect();
        let mut value = union.weight_of(&f);
        for (h, t) in [(h1, t1), (h2, t2)] {
            if value.is_zero() {
                break;
            }
            let required: Vec<Edge> = f.iter().copied().filter(|&(u, v)| h.has_edge(u, v)).collect();
            let deleted: BTreeSet<usize> = gone.intersection(&h.vertices).copied().collect();
            value *= restricted_sum(h, t, &required, &deleted);
        }
        table.insert(f, value);
    }
    Ok((union, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyFrac {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn bg(n: usize, edges: &[(usize, usize)], x: &[usize]) -> BoundaryGraph {
        BoundaryGraph::weighted(&Graph::from_edges(n, edges).unwrap(), set(x)).unwrap()
    }

    #[test]
    fn aligned_examples() {
        let path4 = bg(4, &[(0, 1), (1, 2), (2, 3)], &[0]);
        assert_eq!(aligned_matchings(&path4), vec![vec![(0, 1)]]);
        let path3 = bg(3, &[(0, 1), (1, 2)], &[1]);
        assert!(aligned_matchings(&path3).is_empty());
        let e = bg(2, &[(0, 1)], &[]);
        assert_eq!(aligned_matchings(&e), vec![Vec::<Edge>::new()]);
    }

    #[test]
    fn table_of_examples() {
        let limits = Limits::default();
        let mut labels = Labels::new();
        labels.insert((0, 1), p("x+3"));
        let e = BoundaryGraph::new(set(&[0, 1]), labels, set(&[0, 1])).unwrap();
        let t = table_of(&e, &limits).unwrap();
        assert_eq!(t.get(&[]), Some(&p("1")));
        assert_eq!(t.get(&[(0, 1)]), Some(&p("x+3")));
        assert_eq!(t.len(), 2);
        let c4 = bg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[]);
        assert_eq!(table_of(&c4, &limits).unwrap(), GenTable::single(p("2*x^2")));
        assert!(table_of(&bg(3, &[(0, 1), (1, 2)], &[1]), &limits).unwrap().is_empty());
    }

    #[test]
    fn small_bag_examples() {
        let limits = Limits::default();
        // H = edge y1 y2 = (1, 2); G adds z = 0 adjacent to y1.
        let h = bg(3, &[(1, 2)], &[1, 2]);
        let h = BoundaryGraph::new(set(&[1, 2]), h.labels().clone(), set(&[1, 2])).unwrap();
        let ht = table_of(&h, &limits).unwrap();
        let g = bg(3, &[(0, 1), (1, 2)], &[0]);
        let z = set(&[0, 1, 2]);
        let t = table_small_bag((&h, &ht), &g, &z, &limits).unwrap();
        assert_eq!(t, GenTable::single(p("x")));
        let g2 = g.with_boundary(set(&[0, 1])).unwrap();
        let t2 = table_small_bag((&h, &ht), &g2, &z, &limits).unwrap();
        assert_eq!(t2, table_of(&g2, &limits).unwrap());
        let same = table_small_bag((&h, &ht), &h, &set(&[1, 2]), &limits).unwrap();
        assert_eq!(same, ht);
        let bad = table_small_bag((&h, &ht), &g, &set(&[0, 1]), &limits);
        assert!(matches!(bad, Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn genus_apex_examples() {
        let limits = Limits::default();
        let c4 = bg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[]);
        assert_eq!(table_genus_apex(&c4, &set(&[]), 0, &limits).unwrap(), GenTable::single(p("2*x^2")));
        // K5 on 0..5 plus pendant 5 attached to 0.
        let mut edges = vec![(0, 5)];
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = bg(6, &edges, &[5]);
        let t = table_genus_apex(&g, &set(&[0]), 0, &limits).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&[(0, 5)]), Some(&p("3*x^3")));
        // Wheel: hub 0 and rim 1..6.
        let mut w = Vec::new();
        for i in 1..6 {
            w.push((0, i));
            w.push((i, i % 5 + 1));
        }
        let wheel = bg(6, &w, &[]);
        assert_eq!(table_genus_apex(&wheel, &set(&[0]), 0, &limits).unwrap(), GenTable::single(p("5*x^3")));
    }

    #[test]
    fn merge_examples() {
        let limits = Limits::default();
        let h1 = BoundaryGraph::new(set(&[0, 1]), [((0, 1), p("x"))].into(), set(&[0])).unwrap();
        let h2 = BoundaryGraph::new(set(&[0, 2, 3]), [((0, 2), p("x")), ((2, 3), p("x"))].into(), set(&[0]))
            .unwrap();
        let t1 = table_of(&h1, &limits).unwrap();
        let t2 = table_of(&h2, &limits).unwrap();
        let (u, t) = merge_tables((&h1, &t1), (&h2, &t2), &limits).unwrap();
        assert_eq!(u.boundary(), &set(&[0]));
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&[(0, 1)]), Some(&p("x^2")));

        let empty = BoundaryGraph::new(set(&[0]), Labels::new(), set(&[0])).unwrap();
        let te = table_of(&empty, &limits).unwrap();
        let (_, same) = merge_tables((&h1, &t1), (&empty, &te), &limits).unwrap();
        assert_eq!(same, t1);

        let a = bg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[]);
        let b = BoundaryGraph::new(
            set(&[4, 5, 6, 7]),
            [((4, 5), p("x")), ((5, 6), p("x")), ((6, 7), p("x")), ((4, 7), p("x"))].into(),
            set(&[]),
        )
        .unwrap();
        let (ta, tb) = (table_of(&a, &limits).unwrap(), table_of(&b, &limits).unwrap());
        let (_, t) = merge_tables((&a, &ta), (&b, &tb), &limits).unwrap();
        assert_eq!(t, GenTable::single(p("4*x^4")));
        assert!(matches!(
            merge_tables((&a, &ta), (&a, &ta), &limits),
            Err(Error::OverlapViolated(0))
        ));
    }

    #[test]
    fn dump_format() {
        let mut t = GenTable::new();
        t.insert(vec![(0, 3), (1, 2)], p("2*x^2"));
        t.insert(vec![], p("(1)/(x)"));
        assert_eq!(t.dump(), "F=[] -> (1)/(x)\nF=[(0,3),(1,2)] -> 2*x^2\n");
    }

    #[test]
    fn work_limit_is_enforced() {
        let limits = Limits::default().with_work_limit(1);
        let g = bg(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[0, 1]);
        assert_eq!(table_of(&g, &limits), Err(Error::WorkLimitExceeded(1)));
    }
}
