//! Kasteleyn orientations, skew matrices, Pfaffians and the planar kernel.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{self, edge, Edge, Graph, Labels};
use crate::planar::{self, RotationSystem};
use crate::poly::PolyFrac;

/// A direction for every edge of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Orientation {
    forward: BTreeMap<Edge, bool>,
}

impl Orientation {
    /// Orients every edge from its smaller to its larger endpoint.
    pub fn ascending(g: &Graph) -> Self {
        Orientation {
            forward: g.edges().map(|(e, _)| (e, true)).collect(),
        }
    }

    /// Sets the edge to run `tail -> head`.
    pub fn set(&mut self, tail: usize, head: usize) {
        self.forward.insert(edge(tail, head), tail < head);
    }

    /// Whether the edge `{u, v}` is oriented `u -> v`. Panics on unknown edges.
    pub fn runs(&self, u: usize, v: usize) -> bool {
        self.forward[&edge(u, v)] == (u < v)
    }

    /// The pair `(tail, head)` of the edge.
    pub fn direction(&self, e: Edge) -> (usize, usize) {
        if self.forward[&e] {
            e
        } else {
            (e.1, e.0)
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// A Pfaffian orientation of a planar graph: each face other than the
/// designated outer face of its component has an odd number of darts that
/// agree with the orientation.
pub fn kasteleyn_orient(g: &Graph, r: &RotationSystem) -> Result<Orientation> {
    if !r.is_planar_embedding_of(g) {
        return Err(Error::NotPlanarEmbedding);
    }
    let mut o = Orientation::ascending(g);
    let faces = r.faces();
    let mut dart_face: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            dart_face.insert((f[i], f[(i + 1) % f.len()]), fi);
        }
    }

    let mut tree: BTreeSet<Edge> = BTreeSet::new();
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    tree.insert(edge(u, v));
                    queue.push_back(u);
                }
            }
        }
    }

    // Dual adjacency over non-tree edges.
    let mut dual: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); faces.len()];
    for ((u, v), _) in g.edges() {
        if tree.contains(&(u, v)) {
            continue;
        }
        let (f1, f2) = (dart_face[&(u, v)], dart_face[&(v, u)]);
        dual[f1].push((f2, (u, v)));
        dual[f2].push((f1, (u, v)));
    }

    let mut comp_faces: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let comps = g.components();
    let mut comp_of = vec![0; g.n()];
    for (c, vs) in comps.iter().enumerate() {
        for &v in vs {
            comp_of[v] = c;
        }
    }
    for (fi, f) in faces.iter().enumerate() {
        comp_faces.entry(comp_of[f[0]]).or_default().push(fi);
    }

    let mut parent_edge: Vec<Option<Edge>> = vec![None; faces.len()];
    let mut visited = vec![false; faces.len()];
    for fs in comp_faces.values() {
        let outer = *fs
            .iter()
            .max_by_key(|&&fi| (faces[fi].len(), core::cmp::Reverse(fi)))
            .unwrap();
        let mut order = vec![outer];
        visited[outer] = true;
        let mut i = 0;
        while i < order.len() {
            let f = order[i];
            for &(h, e) in &dual[f] {
                if !visited[h] {
                    visited[h] = true;
                    parent_edge[h] = Some(e);
                    order.push(h);
                }
            }
            i += 1;
        }
        for &f in order.iter().skip(1).rev() {
            let e = parent_edge[f].unwrap();
            let walk = &faces[f];
            let mut agree = 0usize;
            let mut dart_on_e = None;
            for j in 0..walk.len() {
                let (a, b) = (walk[j], walk[(j + 1) % walk.len()]);
                if edge(a, b) == e {
                    dart_on_e = Some((a, b));
                } else if o.runs(a, b) {
                    agree += 1;
                }
            }
            let (a, b) = dart_on_e.expect("parent edge lies on its face");
            if agree % 2 == 0 {
                o.set(a, b);
            } else {
                o.set(b, a);
            }
        }
    }
    Ok(o)
}

/// `s(G, M)`: the sign of the Pfaffian term of the perfect matching `m`
/// under orientation `o`, for a host on the vertices `0..n`.
pub fn matching_sign(o: &Orientation, m: &[Edge], n: usize) -> Result<i32> {
    let mut pairs: Vec<Edge> = m.iter().map(|&(u, v)| edge(u, v)).collect();
    pairs.sort_unstable();
    let mut covered = vec![false; n];
    for &(u, v) in &pairs {
        for x in [u, v] {
            if x >= n || covered[x] {
                return Err(Error::NotPerfect);
            }
            covered[x] = true;
        }
    }
    if covered.iter().any(|&c| !c) {
        return Err(Error::NotPerfect);
    }
    let perm: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut sign = permutation_sign(&perm);
    for &(u, v) in &pairs {
        if !o.runs(u, v) {
            sign = -sign;
        }
    }
    Ok(sign)
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Square skew-symmetric matrix over `Frac(Z[x])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    a: Vec<Vec<PolyFrac>>,
}

impl SkewMatrix {
    pub fn zero(n: usize) -> Self {
        SkewMatrix {
            a: vec![vec![PolyFrac::zero(); n]; n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<PolyFrac>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSkewSymmetric(i, row.len()));
            }
        }
        for i in 0..n {
            for j in i..n {
                if rows[i][j] != -&rows[j][i] {
                    return Err(Error::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(SkewMatrix { a: rows })
    }

    /// `A(G, p)`: entry `p(uv)` when `u -> v`, `-p(uv)` when `v -> u`.
    pub fn from_orientation(g: &Graph, o: &Orientation, labels: &Labels) -> Result<Self> {
        graph::check_labels(g, labels)?;
        let mut m = SkewMatrix::zero(g.n());
        for ((u, v), _) in g.edges() {
            let (t, h) = o.direction((u, v));
            m.set(t, h, labels[&(u, v)].clone());
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyFrac {
        &self.a[i][j]
    }

    /// Sets `a[i][j] = value` and `a[j][i] = -value`.
    pub fn set(&mut self, i: usize, j: usize, value: PolyFrac) {
        self.a[j][i] = -&value;
        self.a[i][j] = value;
    }

    pub fn rows(&self) -> &[Vec<PolyFrac>] {
        &self.a
    }
}

/// Pfaffian by skew Gaussian elimination, two indices per step.
pub fn pfaffian(m: &SkewMatrix) -> PolyFrac {
    let n = m.n();
    if n % 2 == 1 {
        return PolyFrac::zero();
    }
    // Upper triangle only: a[i][j] for i < j.
    let mut a: Vec<Vec<PolyFrac>> = m.a.clone();
    let mut result = PolyFrac::one();
    let mut k = 0;
    while k < n {
        let pivot = (k + 1..n)
            .filter(|&j| !a[k][j].is_zero())
            .min_by_key(|&j| a[k][j].weight());
        let Some(j) = pivot else {
            return PolyFrac::zero();
        };
        if j != k + 1 {
            swap_index(&mut a, k + 1, j);
            result = -result;
        }
        let p = a[k][k + 1].clone();
        result *= &p;
        let inv = p.inv().expect("pivot is nonzero");
        let u: Vec<PolyFrac> = (k + 2..n).map(|i| &a[k][i] * &inv).collect();
        let v: Vec<PolyFrac> = (k + 2..n).map(|i| a[k + 1][i].clone()).collect();
        for i in k + 2..n {
            let (ui, vi) = (&u[i - k - 2], &v[i - k - 2]);
            if ui.is_zero() && vi.is_zero() {
                continue;
            }
            for j in i + 1..n {
                let (uj, vj) = (&u[j - k - 2], &v[j - k - 2]);
                let mut delta = PolyFrac::zero();
                if !vi.is_zero() && !uj.is_zero() {
                    delta += vi * uj;
                }
                if !ui.is_zero() && !vj.is_zero() {
                    delta -= &(ui * vj);
                }
                if !delta.is_zero() {
                    a[i][j] += delta;
                }
            }
        }
        k += 2;
    }
    result
}

/// Swaps rows and columns `p < q` of a matrix whose upper triangle is
/// authoritative.
fn swap_index(a: &mut [Vec<PolyFrac>], p: usize, q: usize) {
    let n = a.len();
    let get = |a: &[Vec<PolyFrac>], i: usize, j: usize| -> PolyFrac {
        if i < j {
            a[i][j].clone()
        } else if i > j {
            -&a[j][i]
        } else {
            PolyFrac::zero()
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(p, q);
    let mut updates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if i == p || i == q || j == p || j == q {
                updates.push((i, j, get(a, perm[i], perm[j])));
            }
        }
    }
    for (i, j, val) in updates {
        a[i][j] = val;
    }
}

/// `GenPM(g, labels)` for a planar `g` via Kasteleyn orientations.
pub fn genpm_planar(g: &Graph, labels: &Labels) -> Result<PolyFrac> {
    let r = planar::planar_embed(g).ok_or(Error::NotPlanar)?;
    genpm_planar_with(g, labels, &r)
}

/// As [`genpm_planar`], with a caller-supplied planar embedding.
pub fn genpm_planar_with(g: &Graph, labels: &Labels, r: &RotationSystem) -> Result<PolyFrac> {
    graph::check_labels(g, labels)?;
    if g.n() % 2 == 1 {
        return Ok(PolyFrac::zero());
    }
    let o = kasteleyn_orient(g, r)?;
    let mut total = PolyFrac::one();
    for comp in g.components() {
        if comp.len() % 2 == 1 {
            return Ok(PolyFrac::zero());
        }
        let keep: BTreeSet<usize> = comp.iter().copied().collect();
        let (local, old) = g.induced(&keep);
        let Some(m) = graph::perfect_matching(&local) else {
            return Ok(PolyFrac::zero());
        };
        let mut local_o = Orientation::default();
        let mut local_labels = Labels::new();
        for ((u, v), _) in local.edges() {
            let (t, h) = o.direction(edge(old[u], old[v]));
            let (lt, lh) = if t == old[u] { (u, v) } else { (v, u) };
            debug_assert_eq!(old[lh], h);
            local_o.set(lt, lh);
            local_labels.insert((u, v), labels[&edge(old[u], old[v])].clone());
        }
        let matrix = SkewMatrix::from_orientation(&local, &local_o, &local_labels)?;
        let pf = pfaffian(&matrix);
        if pf.is_zero() {
            return Ok(PolyFrac::zero());
        }
        let sign = matching_sign(&local_o, &m, local.n())?;
        total *= if sign > 0 { pf } else { -pf };
    }
    Ok(total)
}

/// Genus-dispatched kernel: genus 0 uses the planar Pfaffian; a positive
/// budget uses the planar kernel when the graph happens to be planar and
/// otherwise falls back to exhaustive enumeration under `cap`.
pub fn genpm_surface(g: &Graph, labels: &Labels, genus_budget: usize, cap: usize) -> Result<PolyFrac> {
    if genus_budget == 0 {
        return genpm_planar(g, labels);
    }
    match genpm_planar(g, labels) {
        Err(Error::NotPlanar) => {}
        other => return other,
    }
    if g.n() > cap {
        return Err(Error::TooLargeForFallback { n: g.n(), cap });
    }
    graph::genpm_bruteforce(g, labels, cap)
}
