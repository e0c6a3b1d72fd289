//! Combinatorial embeddings: rotation systems, face tracing and planarity.
//!
//! Embeddings are found per biconnected block by incremental face insertion
//! (Demoucron–Malgrange–Pertuiset) and glued at cut vertices.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

const NONE: usize = usize::MAX;

/// Per-vertex cyclic order of neighbours.
///
/// Faces are traced by the rule that the dart following `u -> v` is
/// `v -> succ_v(u)`, where `succ_v` is the successor in `v`'s rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Wraps per-vertex neighbour cycles after checking them against `g`.
    pub fn new(g: &Graph, rot: Vec<Vec<usize>>) -> Result<Self> {
        if rot.len() != g.n() {
            return Err(Error::MalformedRotation(format!(
                "{} rotation lists for {} vertices",
                rot.len(),
                g.n()
            )));
        }
        for (v, list) in rot.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in list {
                if u >= g.n() || !g.has_edge(u, v) {
                    return Err(Error::MalformedRotation(format!(
                        "vertex {v} lists {u}, which is not a neighbour"
                    )));
                }
                if !seen.insert(u) {
                    return Err(Error::MalformedRotation(format!("vertex {v} lists {u} twice")));
                }
            }
            if seen.len() != g.degree(v) {
                return Err(Error::MalformedRotation(format!(
                    "vertex {v} lists {} of its {} neighbours",
                    seen.len(),
                    g.degree(v)
                )));
            }
        }
        Ok(RotationSystem { rot })
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn into_lists(self) -> Vec<Vec<usize>> {
        self.rot
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let list = &self.rot[v];
        let i = list.iter().position(|&x| x == u).expect("dart not in rotation");
        list[(i + 1) % list.len()]
    }

    /// Closed face walks as vertex sequences `[v0, v1, ...]` standing for the
    /// darts `v0 -> v1 -> ... -> v0`. Every dart lies on exactly one walk;
    /// walks start at their smallest unused dart and appear in that order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut position: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (v, list) in self.rot.iter().enumerate() {
            for (i, &u) in list.iter().enumerate() {
                position.insert((v, u), i);
            }
        }
        let mut used = BTreeSet::new();
        let mut faces = Vec::new();
        for &(a, b) in position.keys() {
            if used.contains(&(a, b)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (a, b);
            while used.insert((u, v)) {
                walk.push(u);
                let list = &self.rot[v];
                let w = list[(position[&(v, u)] + 1) % list.len()];
                u = v;
                v = w;
            }
            faces.push(walk);
        }
        faces
    }

    /// Whether this rotation system embeds `g` in the plane: it lists every
    /// edge at both ends and each component satisfies `V - E + F = 2`.
    pub fn is_planar_embedding_of(&self, g: &Graph) -> bool {
        if RotationSystem::new(g, self.rot.clone()).is_err() {
            return false;
        }
        let comps = g.components();
        let mut comp_of = vec![0usize; g.n()];
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in self.faces() {
            face_count[comp_of[f[0]]] += 1;
        }
        let mut edge_count = vec![0usize; comps.len()];
        for ((u, _), _) in g.edges() {
            edge_count[comp_of[u]] += 1;
        }
        comps.iter().enumerate().all(|(c, vs)| {
            let faces = face_count[c].max(1);
            vs.len() + faces == edge_count[c] + 2
        })
    }

    /// Index of the first face whose walk visits every vertex of `set`.
    pub fn face_containing(&self, set: &[usize]) -> Option<usize> {
        if set.is_empty() {
            return Some(0);
        }
        self.faces()
            .iter()
            .position(|f| set.iter().all(|v| f.contains(v)))
    }

    /// Drops every vertex at index `>= n` from the rotation lists.
    pub fn truncate(&self, n: usize) -> RotationSystem {
        RotationSystem {
            rot: self.rot[..n]
                .iter()
                .map(|l| l.iter().copied().filter(|&u| u < n).collect())
                .collect(),
        }
    }
}

/// Biconnected blocks as edge lists, via an iterative Tarjan traversal.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();
    for s in 0..n {
        if disc[s] != NONE {
            continue;
        }
        disc[s] = timer;
        low[s] = timer;
        timer += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, NONE, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, p) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let u = g.neighbors(v)[top.2];
                top.2 += 1;
                if u == p {
                    continue;
                }
                if disc[u] == NONE {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, v, 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(w, _, _)) = stack.last() {
                    low[w] = low[w].min(low[v]);
                    if low[v] >= disc[w] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(edge(e.0, e.1));
                            if e == (w, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// A planar rotation system of `g`, or `None` when `g` is not planar.
pub fn planar_embed(g: &Graph) -> Option<RotationSystem> {
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        let verts: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let (local, old) = g.induced(&verts);
        if local.n() >= 3 && local.edge_count() > 3 * local.n() - 6 {
            return None;
        }
        let faces = embed_biconnected(&local)?;
        for (v, cycle) in rotation_from_faces(&local, &faces).into_iter().enumerate() {
            rot[old[v]].extend(cycle.into_iter().map(|u| old[u]));
        }
    }
    let rs = RotationSystem { rot };
    debug_assert!(rs.is_planar_embedding_of(g));
    Some(rs)
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embed(g).is_some()
}

/// Planar embedding of `g` in which each vertex set of `sets` lies on a
/// common face. Implemented by attaching one auxiliary hub per set,
/// embedding, and deleting the hubs again.
pub fn planar_embed_with_cofacial(g: &Graph, sets: &[Vec<usize>]) -> Option<RotationSystem> {
    let n = g.n();
    let mut aug = Graph::new(n + sets.len());
    for ((u, v), w) in g.edges() {
        aug.add_weighted_edge(u, v, w).unwrap();
    }
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            aug.add_edge(n + i, v).unwrap();
        }
    }
    planar_embed(&aug).map(|r| r.truncate(n))
}

/// Rotations at every vertex of a biconnected graph, read off an oriented
/// face set: consecutive `u -> v -> w` on a face means `succ_v(u) = w`.
fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in faces {
        let m = f.len();
        for i in 0..m {
            succ.insert((f[(i + 1) % m], f[i]), f[(i + 2) % m]);
        }
    }
    (0..g.n())
        .map(|v| {
            let Some(&start) = g.neighbors(v).first() else {
                return Vec::new();
            };
            let mut cycle = vec![start];
            let mut u = succ[&(v, start)];
            while u != start {
                cycle.push(u);
                u = succ[&(v, u)];
            }
            debug_assert_eq!(cycle.len(), g.degree(v));
            cycle
        })
        .collect()
}

/// Face insertion on a biconnected graph with at least one cycle. Returns
/// consistently oriented face cycles.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let (a, b) = g.edge_list()[0];
    let cycle = path_avoiding_edge(g, b, a)?;
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<Edge> = BTreeSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(edge(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < g.edge_count() {
        let fragments = fragments(g, &in_h, &h_edges);
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&j| frag.attachments.iter().all(|v| face_sets[j].contains(v)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges imply a fragment");
        let path = fragment_path(g, &in_h, &fragments[fi]);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(edge(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

struct Fragment {
    /// Interior vertices (empty for a chord).
    interior: Vec<usize>,
    attachments: Vec<usize>,
    chord: Option<Edge>,
}

fn fragments(g: &Graph, in_h: &[bool], h_edges: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for ((u, v), _) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(Fragment {
                interior: Vec::new(),
                attachments: vec![u, v],
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = BTreeSet::new();
        let mut i = 0;
        while i < interior.len() {
            for &u in g.neighbors(interior[i]) {
                if in_h[u] {
                    attachments.insert(u);
                } else if !seen[u] {
                    seen[u] = true;
                    interior.push(u);
                }
            }
            i += 1;
        }
        out.push(Fragment {
            interior,
            attachments: attachments.into_iter().collect(),
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let inside: BTreeSet<usize> = frag.interior.iter().copied().collect();
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &u in g.neighbors(start) {
        if inside.contains(&u) && !parent.contains_key(&u) {
            parent.insert(u, start);
            queue.push_back(u);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &u in g.neighbors(x) {
            if in_h[u] && u != start {
                let mut path = vec![u, x];
                let mut y = x;
                while parent[&y] != start {
                    y = parent[&y];
                    path.push(y);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if inside.contains(&u) && !parent.contains_key(&u) {
                parent.insert(u, x);
                queue.push_back(u);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// Splits a face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&v| v == a).unwrap();
    let j = face.iter().position(|&v| v == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % m;
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Shortest path from `from` to `to` that does not use the edge `from-to`;
/// read as a cycle together with that edge.
fn path_avoiding_edge(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![NONE; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &u in g.neighbors(x) {
            if parent[u] != NONE || (x == from && u == to) {
                continue;
            }
            parent[u] = x;
            if u == to {
                let mut path = vec![to];
                let mut y = to;
                while y != from {
                    y = parent[y];
                    path.push(y);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(u);
        }
    }
    None
}
