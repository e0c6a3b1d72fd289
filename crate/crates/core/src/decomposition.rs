//! Rooted tree decompositions with a per-bag apex set, their validation,
//! and the bottom-up evaluation of the perfect-matching generating function.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::boundary::{merge_tables, table_genus_apex, table_small_bag, BoundaryGraph, GenTable};
use crate::branching::{table_branching, Branching};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{edge, Edge, Graph, Labels};
use crate::limits::Limits;
use crate::pfaffian;
use crate::planar::{self, RotationSystem};
use crate::poly::PolyFrac;

/// Declared rotation of a torso minus its apex set, keyed by vertex, with
/// neighbours listed in clockwise order as global vertex ids.
pub type TorsoRotation = BTreeMap<usize, Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexTreeDecomposition {
    bags: Vec<BTreeSet<usize>>,
    apex: Vec<BTreeSet<usize>>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    rotations: Vec<Option<TorsoRotation>>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidDecomposition(msg)
}

impl ApexTreeDecomposition {
    /// Builds a decomposition from bags, apex sets and `(parent, child)`
    /// tree edges. Fails unless the edges form a tree rooted at `root`.
    pub fn new(
        bags: Vec<BTreeSet<usize>>,
        apex: Vec<BTreeSet<usize>>,
        tree_edges: &[(usize, usize)],
        root: usize,
    ) -> Result<Self> {
        let n = bags.len();
        if n == 0 {
            return Err(invalid("no nodes".into()));
        }
        if apex.len() != n {
            return Err(invalid(format!("{} apex sets for {n} bags", apex.len())));
        }
        if root >= n {
            return Err(invalid(format!("root {root} is not a node")));
        }
        if tree_edges.len() != n - 1 {
            return Err(invalid(format!("{} tree edges for {n} nodes", tree_edges.len())));
        }
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for &(p, c) in tree_edges {
            if p >= n || c >= n {
                return Err(invalid(format!("tree edge ({p}, {c}) names a missing node")));
            }
            if c == root || parent[c].is_some() || p == c {
                return Err(invalid(format!("node {c} has more than one parent")));
            }
            parent[c] = Some(p);
            children[p].push(c);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            seen[t] = true;
            stack.extend(&children[t]);
        }
        if let Some(t) = seen.iter().position(|s| !s) {
            return Err(invalid(format!("node {t} is not reachable from the root")));
        }
        for c in &mut children {
            c.sort_unstable();
        }
        Ok(ApexTreeDecomposition {
            bags,
            apex,
            parent,
            children,
            root,
            rotations: vec![None; n],
        })
    }

    pub fn single_bag(bag: BTreeSet<usize>, apex: BTreeSet<usize>) -> Self {
        Self::new(vec![bag], vec![apex], &[], 0).unwrap()
    }

    pub fn set_rotation(&mut self, t: usize, rotation: TorsoRotation) -> Result<()> {
        let slot = self
            .rotations
            .get_mut(t)
            .ok_or_else(|| invalid(format!("node {t} does not exist")))?;
        *slot = Some(rotation);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn bag(&self, t: usize) -> &BTreeSet<usize> {
        &self.bags[t]
    }

    pub fn apex(&self, t: usize) -> &BTreeSet<usize> {
        &self.apex[t]
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn rotation(&self, t: usize) -> Option<&TorsoRotation> {
        self.rotations[t].as_ref()
    }

    /// `(parent, child)` pairs in node order.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter_map(|c| self.parent[c].map(|p| (p, c))).collect()
    }

    /// Tree neighbours of `t`: its parent first, then its children.
    pub fn neighbours(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[t].into_iter().chain(self.children[t].iter().copied())
    }

    /// `β(t) ∩ β(u)`.
    pub fn adhesion(&self, t: usize, u: usize) -> BTreeSet<usize> {
        self.bags[t].intersection(&self.bags[u]).copied().collect()
    }

    /// The same tree hung from another root.
    pub fn rerooted(&self, root: usize) -> Result<Self> {
        if root >= self.len() {
            return Err(invalid(format!("root {root} is not a node")));
        }
        let mut edges = Vec::new();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(t) = stack.pop() {
            for u in self.neighbours(t).collect::<Vec<_>>() {
                if !seen[u] {
                    seen[u] = true;
                    edges.push((t, u));
                    stack.push(u);
                }
            }
        }
        let mut out = Self::new(self.bags.clone(), self.apex.clone(), &edges, root)?;
        out.rotations = self.rotations.clone();
        Ok(out)
    }
}

/// The torso at `t` over the vertices of `β(t)` in ascending order,
/// returned with that vertex order. Adhesion pairs missing from `g` are
/// added with weight 0.
pub fn torso(g: &Graph, d: &ApexTreeDecomposition, t: usize) -> Result<(Graph, Vec<usize>)> {
    if t >= d.len() {
        return Err(invalid(format!("node {t} does not exist")));
    }
    torso_without(g, d, t, &BTreeSet::new())
}

fn torso_without(
    g: &Graph,
    d: &ApexTreeDecomposition,
    t: usize,
    removed: &BTreeSet<usize>,
) -> Result<(Graph, Vec<usize>)> {
    let ids: Vec<usize> = d.bag(t).difference(removed).copied().collect();
    if let Some(&v) = ids.iter().find(|&&v| v >= g.n()) {
        return Err(invalid(format!("bag {t} names vertex {v} outside the graph")));
    }
    let local = |v: usize| ids.binary_search(&v).ok();
    let mut out = Graph::new(ids.len());
    for (i, &u) in ids.iter().enumerate() {
        for &v in g.neighbors(u) {
            if let Some(j) = local(v) {
                if i < j {
                    out.add_weighted_edge(i, j, g.weight(u, v).unwrap()).unwrap();
                }
            }
        }
    }
    for u in d.neighbours(t) {
        let adh: Vec<usize> = d.adhesion(t, u).into_iter().filter_map(local).collect();
        for (k, &a) in adh.iter().enumerate() {
            for &b in &adh[k + 1..] {
                out.add_edge_if_absent(a, b, 0);
            }
        }
    }
    Ok((out, ids))
}

/// The condition a decomposition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// A bag names a vertex outside the graph.
    VertexRange,
    /// (i) some vertex lies in no bag.
    VertexCoverage,
    /// (ii) some edge lies in no bag.
    EdgeCoverage,
    /// (iii) the bags containing some vertex are not connected in the tree.
    RunningIntersection,
    ApexOutsideBag,
    AdhesionTooLarge,
    ApexTooLarge,
    TorsoNotPlanar,
    ResidualAdhesionTooLarge,
    DeclaredRotationInvalid,
    AdhesionNotFacial,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::VertexRange => "vertex-range",
            Clause::VertexCoverage => "i: vertex coverage",
            Clause::EdgeCoverage => "ii: edge coverage",
            Clause::RunningIntersection => "iii: running intersection",
            Clause::ApexOutsideBag => "apex within bag",
            Clause::AdhesionTooLarge => "adhesion at most k",
            Clause::ApexTooLarge => "apex set at most k",
            Clause::TorsoNotPlanar => "torso minus apex planar",
            Clause::ResidualAdhesionTooLarge => "residual adhesion at most 3",
            Clause::DeclaredRotationInvalid => "declared rotation embeds torso minus apex",
            Clause::AdhesionNotFacial => "size-3 residual adhesion bounds a face",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    pub nodes: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause {} violated at nodes {:?}: {}", self.clause, self.nodes, self.detail)
    }
}

/// Outcome of [`validate_decomposition`]; carries the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::ValidationFailed(format!("{v}"))),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => f.write_str("valid"),
            Some(v) => write!(f, "{v}"),
        }
    }
}

fn fail(clause: Clause, nodes: Vec<usize>, detail: String) -> core::result::Result<(), Violation> {
    Err(Violation { clause, nodes, detail })
}

/// Checks the decomposition conditions with budget `k`. Bags with at most
/// `k` vertices are small and exempt from the surface conditions.
pub fn validate_decomposition(g: &Graph, d: &ApexTreeDecomposition, k: usize) -> ValidationReport {
    ValidationReport {
        violation: validate(g, d, k).err(),
    }
}

fn validate(g: &Graph, d: &ApexTreeDecomposition, k: usize) -> core::result::Result<(), Violation> {
    let nodes = 0..d.len();
    for t in nodes.clone() {
        if let Some(&v) = d.bag(t).iter().find(|&&v| v >= g.n()) {
            return fail(Clause::VertexRange, vec![t], format!("vertex {v} with n = {}", g.n()));
        }
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for t in nodes.clone() {
        for &v in d.bag(t) {
            holders[v].push(t);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return fail(Clause::VertexCoverage, vec![], format!("vertex {v} is in no bag"));
    }
    for (u, v) in g.edge_list() {
        if !holders[u].iter().any(|&t| d.bag(t).contains(&v)) {
            return fail(Clause::EdgeCoverage, vec![], format!("edge ({u}, {v}) is in no bag"));
        }
    }
    for (v, ts) in holders.iter().enumerate() {
        // A node set is connected iff exactly one member has its parent outside.
        let tops: Vec<usize> = ts
            .iter()
            .copied()
            .filter(|&t| d.parent(t).is_none_or(|p| !d.bag(p).contains(&v)))
            .collect();
        if tops.len() > 1 {
            return fail(Clause::RunningIntersection, tops, format!("bags holding vertex {v} are disconnected"));
        }
    }
    for t in nodes.clone() {
        if !d.apex(t).is_subset(d.bag(t)) {
            return fail(Clause::ApexOutsideBag, vec![t], "apex set leaves the bag".into());
        }
    }
    for (p, c) in d.tree_edges() {
        let a = d.adhesion(p, c).len();
        if a > k {
            return fail(Clause::AdhesionTooLarge, vec![p, c], format!("adhesion {a} exceeds {k}"));
        }
    }
    for t in nodes {
        if d.bag(t).len() <= k {
            continue;
        }
        validate_big_bag(g, d, t, k)?;
    }
    Ok(())
}

fn validate_big_bag(g: &Graph, d: &ApexTreeDecomposition, t: usize, k: usize) -> core::result::Result<(), Violation> {
    let apex = d.apex(t);
    if apex.len() > k {
        return fail(Clause::ApexTooLarge, vec![t], format!("{} apex vertices exceed {k}", apex.len()));
    }
    let (gt, ids) = torso_without(g, d, t, apex).expect("range checked");
    let mut triples: Vec<Vec<usize>> = Vec::new();
    for u in d.neighbours(t) {
        let r: Vec<usize> = d.adhesion(t, u).difference(apex).copied().collect();
        if r.len() > 3 {
            return fail(
                Clause::ResidualAdhesionTooLarge,
                vec![t, u],
                format!("{} adhesion vertices outside the apex set", r.len()),
            );
        }
        if r.len() == 3 {
            let local: Vec<usize> = r.iter().map(|v| ids.binary_search(v).unwrap()).collect();
            if !triples.contains(&local) {
                triples.push(local);
            }
        }
    }
    match d.rotation(t) {
        None => {
            if planar::planar_embed_with_cofacial(&gt, &triples).is_none() {
                return fail(
                    Clause::TorsoNotPlanar,
                    vec![t],
                    "no planar embedding with every size-3 residual adhesion on a face".into(),
                );
            }
        }
        Some(rot) => {
            let r = declared_rotation(&gt, &ids, rot)
                .map_err(|detail| Violation { clause: Clause::DeclaredRotationInvalid, nodes: vec![t], detail })?;
            let faces = r.faces();
            for tri in &triples {
                let bounded = faces.iter().any(|f| {
                    let mut f = f.clone();
                    f.sort_unstable();
                    f == *tri
                });
                if !bounded {
                    let global: Vec<usize> = tri.iter().map(|&i| ids[i]).collect();
                    return fail(Clause::AdhesionNotFacial, vec![t], format!("{global:?} does not bound a face"));
                }
            }
        }
    }
    Ok(())
}

fn declared_rotation(gt: &Graph, ids: &[usize], rot: &TorsoRotation) -> core::result::Result<RotationSystem, String> {
    let keys: Vec<usize> = rot.keys().copied().collect();
    if keys != ids {
        return Err(format!("rotation covers {keys:?}, torso minus apex has {ids:?}"));
    }
    let mut lists = Vec::with_capacity(ids.len());
    for list in rot.values() {
        let mut local = Vec::with_capacity(list.len());
        for v in list {
            local.push(ids.binary_search(v).map_err(|_| format!("rotation names vertex {v} outside the torso"))?);
        }
        lists.push(local);
    }
    let r = RotationSystem::new(gt, lists).map_err(|e| format!("{e}"))?;
    if !r.is_planar_embedding_of(gt) {
        return Err("rotation is not a planar embedding".into());
    }
    Ok(r)
}

struct Driver<'a> {
    d: &'a ApexTreeDecomposition,
    labels: &'a Labels,
    owned: Vec<Vec<Edge>>,
    limits: &'a Limits,
    trace: bool,
}

impl Driver<'_> {
    /// `(H_t, X_t)` and its table: the vertices of the subtree bags with
    /// the edges owned inside the subtree.
    fn solve(&self, t: usize, trace: &mut Vec<(usize, GenTable)>) -> Result<(BoundaryGraph, GenTable)> {
        let d = self.d;
        let solved: Vec<(BoundaryGraph, GenTable, Vec<(usize, GenTable)>)> = exec::map(d.children(t), |&c| {
            let mut sub = Vec::new();
            self.solve(c, &mut sub).map(|(h, tab)| (h, tab, sub))
        })
        .into_iter()
        .collect::<Result<_>>()?;
        let mut subs = Vec::with_capacity(solved.len());
        for (h, tab, sub) in solved {
            if self.trace {
                trace.extend(sub);
            }
            subs.push((h, tab));
        }
        let mut vertices = d.bag(t).clone();
        let mut labels: Labels = self.owned[t].iter().map(|e| (*e, self.labels[e].clone())).collect();
        for (h, _) in &subs {
            vertices.extend(h.vertices());
            labels.extend(h.labels().iter().map(|(e, p)| (*e, p.clone())));
        }
        let boundary = d.parent(t).map_or_else(BTreeSet::new, |p| d.adhesion(t, p));
        let host = BoundaryGraph::new(vertices, labels, boundary)?;
        let table = if d.bag(t).len() <= self.limits.k {
            self.small_bag(t, &host, subs)?
        } else {
            self.big_bag(t, &host, subs)?
        };
        if self.trace {
            trace.push((t, table.clone()));
        }
        Ok((host, table))
    }

    fn merge_all(&self, parts: Vec<(BoundaryGraph, GenTable)>, pad: &BTreeSet<usize>) -> Result<(BoundaryGraph, GenTable)> {
        let mut iter = parts.into_iter().map(|(h, tab)| (h.padded(pad), tab));
        let mut acc = iter.next().expect("at least one part");
        for (h, tab) in iter {
            acc = merge_tables((&acc.0, &acc.1), (&h, &tab), self.limits)?;
        }
        Ok(acc)
    }

    fn small_bag(&self, t: usize, host: &BoundaryGraph, subs: Vec<(BoundaryGraph, GenTable)>) -> Result<GenTable> {
        let z = self.d.bag(t);
        let (h, table) = if subs.is_empty() {
            (BoundaryGraph::new(z.clone(), Labels::new(), z.clone())?, GenTable::single(PolyFrac::one()))
        } else {
            self.merge_all(subs, z)?
        };
        table_small_bag((&h, &table), host, z, self.limits)
    }

    fn big_bag(&self, t: usize, host: &BoundaryGraph, subs: Vec<(BoundaryGraph, GenTable)>) -> Result<GenTable> {
        let apex = self.d.apex(t);
        if subs.is_empty() {
            return table_genus_apex(host, apex, 0, self.limits);
        }
        let mut order: Vec<(BTreeSet<usize>, (BoundaryGraph, GenTable))> = subs
            .into_iter()
            .map(|s| (s.0.boundary().difference(apex).copied().collect(), s))
            .collect();
        order.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        let mut groups: Vec<(BTreeSet<usize>, Vec<(BoundaryGraph, GenTable)>)> = Vec::new();
        for (key, sub) in order {
            match groups.iter_mut().find(|(g, _)| key.is_subset(g)) {
                Some((_, members)) => members.push(sub),
                None => groups.push((key, vec![sub])),
            }
        }
        let mut branches = Vec::with_capacity(groups.len());
        let mut sign_post = Vec::with_capacity(groups.len());
        for (key, members) in groups {
            let pad: BTreeSet<usize> = key.union(apex).copied().collect();
            let (b, tab) = self.merge_all(members, &pad)?;
            branches.push(b);
            sign_post.push(tab);
        }
        let br = Branching::new(host.clone(), apex.clone(), branches)?;
        table_branching(&br, &sign_post, self.limits)
    }
}

/// `GenPM(G)` for the labels `labels` through a validated decomposition.
pub fn genpm_decomposed(g: &Graph, labels: &Labels, d: &ApexTreeDecomposition, limits: &Limits) -> Result<PolyFrac> {
    run_driver(g, labels, d, limits, false).map(|(v, _)| v)
}

/// As [`genpm_decomposed`], also returning the table computed at every
/// node in the order the nodes were finished.
pub fn genpm_decomposed_traced(
    g: &Graph,
    labels: &Labels,
    d: &ApexTreeDecomposition,
    limits: &Limits,
) -> Result<(PolyFrac, Vec<(usize, GenTable)>)> {
    run_driver(g, labels, d, limits, true)
}

fn run_driver(
    g: &Graph,
    labels: &Labels,
    d: &ApexTreeDecomposition,
    limits: &Limits,
    trace: bool,
) -> Result<(PolyFrac, Vec<(usize, GenTable)>)> {
    crate::graph::check_labels(g, labels)?;
    validate_decomposition(g, d, limits.k).into_result()?;
    let mut owned = vec![Vec::new(); d.len()];
    for (u, v) in g.edge_list() {
        // The topmost bag holding both ends; the holders form a subtree.
        let t = (0..d.len())
            .find(|&t| {
                let b = d.bag(t);
                b.contains(&u) && b.contains(&v) && d.parent(t).is_none_or(|p| !(d.bag(p).contains(&u) && d.bag(p).contains(&v)))
            })
            .expect("edge coverage validated");
        owned[t].push(edge(u, v));
    }
    let driver = Driver { d, labels, owned, limits, trace };
    let mut tables = Vec::new();
    let (_, table) = driver.solve(d.root(), &mut tables)?;
    Ok((table.get(&[]).cloned().unwrap_or_else(PolyFrac::zero), tables))
}

/// `GenPM` through `d` when given, otherwise through the planar kernel
/// with exhaustive fallback under the oracle cap.
pub fn genpm(g: &Graph, labels: &Labels, d: Option<&ApexTreeDecomposition>, limits: &Limits) -> Result<PolyFrac> {
    match d {
        Some(d) => genpm_decomposed(g, labels, d, limits),
        None => {
            crate::graph::check_labels(g, labels)?;
            pfaffian::genpm_surface(g, labels, 1, limits.oracle_cap)
        }
    }
}

fn unit_labels(g: &Graph) -> Labels {
    g.edge_list().into_iter().map(|e| (e, PolyFrac::one())).collect()
}

/// Number of perfect matchings.
pub fn count_perfect_matchings(g: &Graph, d: Option<&ApexTreeDecomposition>, limits: &Limits) -> Result<BigUint> {
    let value = genpm(g, &unit_labels(g), d, limits)?;
    let terms = value.as_laurent()?;
    let count = terms.get(&0).cloned().unwrap_or_default();
    Ok(count.to_biguint().expect("matching counts are nonnegative"))
}

/// Whether a perfect matching of total weight `target` exists, and how many.
pub fn exact_matching(
    g: &Graph,
    target: i64,
    d: Option<&ApexTreeDecomposition>,
    limits: &Limits,
) -> Result<(bool, BigInt)> {
    let value = genpm(g, &g.weight_labels(), d, limits)?;
    let count = value.as_laurent()?.get(&target).cloned().unwrap_or_default();
    Ok((count != BigInt::default(), count))
}

/// One bag holding every vertex; everything is apex when the graph has at
/// most `k` vertices.
pub fn trivial_decomposition(g: &Graph, k: usize) -> ApexTreeDecomposition {
    let all: BTreeSet<usize> = (0..g.n()).collect();
    let apex = if g.n() <= k { all.clone() } else { BTreeSet::new() };
    ApexTreeDecomposition::single_bag(all, apex)
}

/// One bag with apex set `a`; requires `g - a` to be planar.
pub fn apex_planar_decomposition(g: &Graph, a: &BTreeSet<usize>) -> Result<ApexTreeDecomposition> {
    if let Some(&v) = a.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let keep: BTreeSet<usize> = (0..g.n()).filter(|v| !a.contains(v)).collect();
    if !planar::is_planar(&g.induced(&keep).0) {
        return Err(Error::NotPlanarAfterApex);
    }
    Ok(ApexTreeDecomposition::single_bag((0..g.n()).collect(), a.clone()))
}

/// A piece of a clique-sum: its vertices, its edges (which must include
/// the glue cliques) and its apex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<Edge>,
    pub apex: BTreeSet<usize>,
}

/// Decomposition with one bag per part, glued along `(parent, child)`
/// pairs of part indices. Each glue set is the vertex intersection of the
/// two parts; it must be a clique in both with at most three vertices
/// outside either apex set.
pub fn clique_sum_decomposition(parts: &[Part], glue: &[(usize, usize)], root: usize) -> Result<ApexTreeDecomposition> {
    for &(p, c) in glue {
        let (Some(a), Some(b)) = (parts.get(p), parts.get(c)) else {
            return Err(invalid(format!("glue ({p}, {c}) names a missing part")));
        };
        let s: Vec<usize> = a.vertices.intersection(&b.vertices).copied().collect();
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                if !a.edges.contains(&edge(u, v)) || !b.edges.contains(&edge(u, v)) {
                    return Err(Error::GlueNotClique(s));
                }
            }
        }
        for side in [a, b] {
            if s.iter().filter(|v| !side.apex.contains(v)).count() > 3 {
                return Err(Error::PreconditionViolated(format!(
                    "glue set {s:?} has more than three vertices outside an apex set"
                )));
            }
        }
    }
    ApexTreeDecomposition::new(
        parts.iter().map(|p| p.vertices.clone()).collect(),
        parts.iter().map(|p| p.apex.clone()).collect(),
        glue,
        root,
    )
}
