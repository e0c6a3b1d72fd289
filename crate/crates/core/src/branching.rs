//! Branchings: a planar core (after apex removal) with boundary subgraphs
//! hanging off faces, evaluated by swapping each branch for a matchgate.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::boundary::{anchored_matchings, restricted_sum, BoundaryGraph, GenTable, Work};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{edge, Edge, Graph, Labels, Matching};
use crate::limits::Limits;
use crate::matchgate::{build_matchgate, Parity, PsMap};
use crate::pfaffian;
use crate::planar::{self, RotationSystem};
use crate::poly::PolyFrac;

/// Per-branch tables, indexed like the branches.
pub type SignPost = Vec<GenTable>;

#[derive(Clone, Debug)]
pub struct Branching {
    host: BoundaryGraph,
    apex: BTreeSet<usize>,
    branches: Vec<BoundaryGraph>,
    core: BTreeSet<usize>,
    core_labels: Labels,
    embedding: RotationSystem,
    embedding_ids: Vec<usize>,
}

/// A branching with the vertices of `F` and the host boundary removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBranching {
    /// `G - V(F) - X`.
    pub graph: BoundaryGraph,
    /// `B_i - V(F) - X` with boundary `Y_i \ (V(F) ∪ X)`.
    pub branches: Vec<BoundaryGraph>,
}

fn violated(msg: String) -> Error {
    Error::PreconditionViolated(msg)
}

impl Branching {
    /// Checks the branching conditions and embeds `G_B - A` so that
    /// `X \ A` and every `Y_i \ A` are cofacial.
    pub fn new(host: BoundaryGraph, apex: BTreeSet<usize>, branches: Vec<BoundaryGraph>) -> Result<Self> {
        if !apex.is_subset(host.vertices()) {
            return Err(violated("A is not contained in V(G)".into()));
        }
        let residual = |s: &BTreeSet<usize>| -> BTreeSet<usize> { s.difference(&apex).copied().collect() };
        if residual(host.boundary()).len() > 3 {
            return Err(violated("|X \\ A| exceeds 3".into()));
        }
        let mut interior_all = BTreeSet::new();
        let mut branch_edges: BTreeSet<Edge> = BTreeSet::new();
        for (i, b) in branches.iter().enumerate() {
            if !b.vertices().is_subset(host.vertices()) {
                return Err(violated(format!("branch {i} leaves V(G)")));
            }
            for (e, p) in b.labels() {
                match host.label(*e) {
                    None => return Err(violated(format!("branch {i} has an edge outside G"))),
                    Some(q) if q != p => return Err(Error::LabelMismatch(e.0, e.1)),
                    _ => {}
                }
                if !branch_edges.insert(*e) {
                    return Err(violated(format!("branch {i} shares edge {e:?} with another branch")));
                }
            }
            let interior: BTreeSet<usize> = b.vertices().difference(b.boundary()).copied().collect();
            if interior.iter().any(|v| apex.contains(v)) {
                return Err(violated(format!("branch {i} has an apex vertex in its interior")));
            }
            if residual(b.boundary()).len() > 3 {
                return Err(violated(format!("|Y_{i} \\ A| exceeds 3")));
            }
            for (j, c) in branches.iter().enumerate().take(i) {
                let shared: BTreeSet<usize> = b.vertices().intersection(c.vertices()).copied().collect();
                let both: BTreeSet<usize> = b.boundary().intersection(c.boundary()).copied().collect();
                if !shared.is_subset(&both) {
                    return Err(violated(format!("branches {j} and {i} meet outside their boundaries")));
                }
                let (ri, rj) = (residual(b.boundary()), residual(c.boundary()));
                if ri.is_subset(&rj) || rj.is_subset(&ri) {
                    return Err(violated(format!("Y_{j} \\ A and Y_{i} \\ A are nested")));
                }
            }
            for &(u, v) in host.labels().keys() {
                if (interior.contains(&u) || interior.contains(&v)) && !b.has_edge(u, v) {
                    return Err(violated(format!("an edge of G leaves the interior of branch {i}")));
                }
            }
            interior_all.extend(interior);
        }
        let core: BTreeSet<usize> = host.vertices().difference(&interior_all).copied().collect();
        let core_labels: Labels = host
            .labels()
            .iter()
            .filter(|(e, _)| !branch_edges.contains(e))
            .map(|(e, p)| (*e, p.clone()))
            .collect();

        // G_B - A with the boundary sets completed into cliques.
        let ids: Vec<usize> = core.difference(&apex).copied().collect();
        let local = |v: usize| ids.binary_search(&v).ok();
        let mut gb = Graph::new(ids.len());
        for &(u, v) in core_labels.keys() {
            if let (Some(a), Some(b)) = (local(u), local(v)) {
                gb.add_edge(a, b).unwrap();
            }
        }
        let mut cofacial: Vec<Vec<usize>> = Vec::new();
        let boundary_sets = core::iter::once(host.boundary()).chain(branches.iter().map(|b| b.boundary()));
        for s in boundary_sets {
            let r: Vec<usize> = residual(s).into_iter().filter_map(local).collect();
            for (k, &a) in r.iter().enumerate() {
                for &b in &r[k + 1..] {
                    gb.add_edge_if_absent(a, b, 0);
                }
            }
            if r.len() == 3 && !cofacial.contains(&r) {
                cofacial.push(r);
            }
        }
        let embedding = planar::planar_embed_with_cofacial(&gb, &cofacial)
            .ok_or_else(|| violated("G_B - A has no planar embedding with cofacial boundaries".into()))?;
        Ok(Branching {
            host,
            apex,
            branches,
            core,
            core_labels,
            embedding,
            embedding_ids: ids,
        })
    }

    pub fn host(&self) -> &BoundaryGraph {
        &self.host
    }

    pub fn apex(&self) -> &BTreeSet<usize> {
        &self.apex
    }

    pub fn branches(&self) -> &[BoundaryGraph] {
        &self.branches
    }

    /// Rotation system of `G_B - A` over the vertices in
    /// [`Branching::embedding_vertices`] order.
    pub fn embedding(&self) -> &RotationSystem {
        &self.embedding
    }

    pub fn embedding_vertices(&self) -> &[usize] {
        &self.embedding_ids
    }

    fn check_matching(&self, f: &[Edge]) -> Result<()> {
        let ax: BTreeSet<usize> = self.apex.union(self.host.boundary()).copied().collect();
        let mut seen = BTreeSet::new();
        for &(u, v) in f {
            if !self.host.has_edge(u, v) {
                return Err(violated(format!("({u}, {v}) is not an edge of G")));
            }
            if !ax.contains(&u) && !ax.contains(&v) {
                return Err(violated(format!("({u}, {v}) avoids A ∪ X")));
            }
            if !seen.insert(u) || !seen.insert(v) {
                return Err(violated("F is not a matching".into()));
            }
        }
        if let Some(a) = self.apex.iter().find(|a| !self.host.boundary().contains(a) && !seen.contains(a)) {
            return Err(violated(format!("apex vertex {a} is not covered by F")));
        }
        Ok(())
    }

    /// The `F`-reduced branching.
    pub fn reduce(&self, f: &[Edge]) -> Result<ReducedBranching> {
        self.check_matching(f)?;
        let gone: BTreeSet<usize> = f
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .chain(self.host.boundary().iter().copied())
            .collect();
        let strip = |b: &BoundaryGraph| -> BoundaryGraph {
            let vertices: BTreeSet<usize> = b.vertices().difference(&gone).copied().collect();
            let labels = b
                .labels()
                .iter()
                .filter(|((u, v), _)| !gone.contains(u) && !gone.contains(v))
                .map(|(e, p)| (*e, p.clone()))
                .collect();
            let boundary = b.boundary().difference(&gone).copied().collect();
            BoundaryGraph::new(vertices, labels, boundary).unwrap()
        };
        let graph = strip(&self.host.with_boundary(BTreeSet::new()).unwrap());
        let branches = self.branches.iter().map(strip).collect();
        Ok(ReducedBranching { graph, branches })
    }

    /// Contribution of one matching `F`: `p(F)` times the gadget scalars
    /// times the generating function of the gadget-augmented core.
    fn evaluate(&self, f: &Matching, sp: &SignPost) -> Result<PolyFrac> {
        let gone: BTreeSet<usize> = f
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .chain(self.host.boundary().iter().copied())
            .collect();
        let mut value = self.host.weight_of(f);
        if value.is_zero() {
            return Ok(value);
        }
        let mut vertices: BTreeSet<usize> = self.core.difference(&gone).copied().collect();
        let mut labels: Labels = self
            .core_labels
            .iter()
            .filter(|((u, v), _)| vertices.contains(u) && vertices.contains(v))
            .map(|(e, p)| (*e, p.clone()))
            .collect();
        let mut next_fresh = self.host.vertices().iter().next_back().map_or(0, |m| m + 1);
        for (b, table) in self.branches.iter().zip(sp) {
            let required: Vec<Edge> = f.iter().copied().filter(|&(u, v)| b.has_edge(u, v)).collect();
            let deleted: BTreeSet<usize> = gone.intersection(b.vertices()).copied().collect();
            let surviving: Vec<usize> = b.boundary().difference(&gone).copied().collect();
            let parity = Parity::of(b.vertices().difference(&gone).count());
            let mut ps = PsMap::new();
            for mask in 0..1u32 << surviving.len() {
                let s: Vec<usize> = surviving
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                if Parity::of(s.len()) != parity {
                    continue;
                }
                let mut del = deleted.clone();
                del.extend(&s);
                ps.insert(s, restricted_sum(b, table, &required, &del));
            }
            let gate = build_matchgate(&surviving, parity, &ps)?;
            value *= &gate.scalar;
            if value.is_zero() {
                return Ok(value);
            }
            for i in 0..gate.fresh {
                vertices.insert(next_fresh + i);
            }
            labels.extend(gate.materialize(next_fresh));
            next_fresh += gate.fresh;
        }
        let (g, l) = dense(&vertices, &labels);
        let rest = match pfaffian::genpm_planar(&g, &l) {
            Err(Error::NotPlanar) => {
                return Err(Error::EmbeddingBroken(format!(
                    "core residual for F = {f:?} is not planar after gadget insertion"
                )))
            }
            other => other?,
        };
        Ok(value * rest)
    }
}

fn dense(vertices: &BTreeSet<usize>, labels: &Labels) -> (Graph, Labels) {
    let ids: Vec<usize> = vertices.iter().copied().collect();
    let idx = |v: usize| ids.binary_search(&v).unwrap();
    let mut g = Graph::new(ids.len());
    let mut l = Labels::new();
    for (&(u, v), p) in labels {
        let (a, b) = (idx(u), idx(v));
        g.add_edge(a, b).unwrap();
        l.insert(edge(a, b), p.clone());
    }
    (g, l)
}

/// Table of the host of a branching from the tables of its branches.
pub fn table_branching(br: &Branching, sp: &SignPost, limits: &Limits) -> Result<GenTable> {
    if sp.len() != br.branches.len() {
        return Err(violated(format!(
            "sign post has {} tables for {} branches",
            sp.len(),
            br.branches.len()
        )));
    }
    let host = &br.host;
    if host.boundary().len() > limits.k + 3 || br.apex.len() > limits.k {
        return Err(violated("boundary or apex set exceeds the size budget".into()));
    }
    let touch: BTreeSet<usize> = br.apex.union(host.boundary()).copied().collect();
    let must: BTreeSet<usize> = br.apex.difference(host.boundary()).copied().collect();
    let d = host.dense();
    let fs = anchored_matchings(&d, &touch, &must, &mut Work::new(limits.work_limit))?;
    let values = exec::map(&fs, |f| br.evaluate(f, sp));
    let mut table = GenTable::new();
    let mut sums: alloc::collections::BTreeMap<Matching, PolyFrac> = Default::default();
    for (f, v) in fs.iter().zip(values) {
        let r: Matching = f
            .iter()
            .copied()
            .filter(|(u, v)| host.boundary().contains(u) || host.boundary().contains(v))
            .collect();
        *sums.entry(r).or_default() += v?;
    }
    for (k, v) in sums {
        table.insert(k, v);
    }
    Ok(table)
}
