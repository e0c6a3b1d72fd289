//! Deterministic graph families and seeded random corpora.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::Part;
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::planar::RotationSystem;

/// A planar graph drawn in a disk: embedding plus the walk of its external face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskDrawing {
    pub graph: Graph,
    pub rotation: RotationSystem,
    pub outer: Vec<usize>,
}

impl DiskDrawing {
    pub fn new(graph: Graph, rotation: RotationSystem, outer: Vec<usize>) -> Result<Self> {
        if !rotation.is_planar_embedding_of(&graph) {
            return Err(Error::InvalidDrawing("rotation is not a planar embedding".into()));
        }
        let is_face = rotation.faces().iter().any(|f| same_cycle(f, &outer));
        if !is_face {
            return Err(Error::InvalidDrawing(format!("{outer:?} is not a face walk")));
        }
        Ok(DiskDrawing { graph, rotation, outer })
    }

    /// The distinct vertices of the external face, ascending.
    pub fn external_vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.outer.iter().copied().collect();
        set.into_iter().collect()
    }
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

fn rotation_unchecked(lists: Vec<Vec<usize>>, g: &Graph) -> RotationSystem {
    RotationSystem::new(g, lists).expect("generator rotations list every neighbour once")
}

/// The `n x m` grid; vertex `(i, j)` is `i * m + j`.
pub fn grid(n: usize, m: usize) -> Graph {
    grid_with_embedding(n, m).0
}

pub fn grid_with_embedding(n: usize, m: usize) -> (Graph, RotationSystem) {
    let id = |i: usize, j: usize| i * m + j;
    let mut g = Graph::new(n * m);
    for i in 0..n {
        for j in 0..m {
            if j + 1 < m {
                g.add_edge(id(i, j), id(i, j + 1)).unwrap();
            }
            if i + 1 < n {
                g.add_edge(id(i, j), id(i + 1, j)).unwrap();
            }
        }
    }
    let mut lists = vec![Vec::new(); n * m];
    for i in 0..n {
        for j in 0..m {
            let l = &mut lists[id(i, j)];
            if j + 1 < m {
                l.push(id(i, j + 1));
            }
            if i + 1 < n {
                l.push(id(i + 1, j));
            }
            if j > 0 {
                l.push(id(i, j - 1));
            }
            if i > 0 {
                l.push(id(i - 1, j));
            }
        }
    }
    let r = rotation_unchecked(lists, &g);
    (g, r)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// `t` concentric cycles of length `s` joined by radial edges; vertex
/// `(i, j)` is `i * s + j` and cycle `0` is innermost.
pub fn cylindrical_grid(t: usize, s: usize) -> Graph {
    cylinder(t, s)
}

fn cylinder(t: usize, s: usize) -> Graph {
    let mut g = Graph::new(t * s);
    for i in 0..t {
        for j in 0..s {
            g.add_edge_if_absent(i * s + j, i * s + (j + 1) % s, 1);
            if i + 1 < t {
                g.add_edge(i * s + j, (i + 1) * s + j).unwrap();
            }
        }
    }
    g
}

/// Cylindrical grid with its concentric embedding; the outermost cycle
/// bounds a face. Requires `s >= 3`.
pub fn cylindrical_grid_with_embedding(t: usize, s: usize) -> Result<(Graph, RotationSystem)> {
    if s < 3 {
        return Err(Error::InvalidDrawing(format!("cycle length {s} is below 3")));
    }
    let g = cylinder(t, s);
    let id = |i: usize, j: usize| i * s + j;
    let mut lists = vec![Vec::new(); t * s];
    for i in 0..t {
        for j in 0..s {
            let l = &mut lists[id(i, j)];
            if i + 1 < t {
                l.push(id(i + 1, j));
            }
            l.push(id(i, (j + 1) % s));
            if i > 0 {
                l.push(id(i - 1, j));
            }
            l.push(id(i, (j + s - 1) % s));
        }
    }
    let r = rotation_unchecked(lists, &g);
    Ok((g, r))
}

/// The cylindrical grid as a disk drawing bounded by its outermost cycle.
pub fn cylindrical_grid_drawing(t: usize, s: usize) -> Result<DiskDrawing> {
    if t == 0 {
        return Err(Error::InvalidDrawing("no cycles".into()));
    }
    let (g, r) = cylindrical_grid_with_embedding(t, s)?;
    let base = (t - 1) * s;
    let outer = r
        .faces()
        .into_iter()
        .find(|f| f.len() == s && f.iter().all(|&v| v >= base))
        .expect("outer cycle bounds a face");
    DiskDrawing::new(g, r, outer)
}

/// Shallow vortex grid of order `k`: the `(k x 2k)` cylindrical grid plus
/// the chords `c_i c_{i+2}` (indices mod `2k`) on the innermost cycle.
/// Duplicate and self edges arising for `k <= 2` are dropped.
pub fn shallow_vortex_grid(k: usize) -> Graph {
    let s = 2 * k;
    let mut g = cylinder(k, s);
    for i in 0..s {
        g.add_edge_if_absent(i, (i + 2) % s, 1);
    }
    g
}

/// Segregated shallow vortex grid of order `k`: `k` cycles of length `4k`
/// with radial edges and, for each block of four consecutive innermost
/// vertices, the two crossing chords `c1c3` and `c2c4` of that block.
pub fn segregated_shallow_vortex_grid(k: usize) -> Graph {
    let s = 4 * k;
    let mut g = cylinder(k, s);
    for i in 0..k {
        let b = 4 * i;
        g.add_edge_if_absent(b, b + 2, 1);
        g.add_edge_if_absent(b + 1, b + 3, 1);
    }
    g
}

/// Adds a twin `v_u` for every external vertex `u`, adjacent to `u`, to the
/// neighbours of `u`, and to the twins of external neighbours of `u`.
/// Twins are numbered after the original vertices in ascending order of `u`.
pub fn ring_blowup(d: &DiskDrawing) -> Graph {
    let g = &d.graph;
    let q = d.external_vertices();
    let n = g.n();
    let twin = |u: usize| n + q.binary_search(&u).unwrap();
    let mut out = Graph::new(n + q.len());
    for ((u, v), w) in g.edges() {
        out.add_weighted_edge(u, v, w).unwrap();
    }
    for &u in &q {
        let vu = twin(u);
        out.add_edge_if_absent(u, vu, 1);
        for &w in g.neighbors(u) {
            out.add_edge_if_absent(w, vu, 1);
            if q.binary_search(&w).is_ok() {
                out.add_edge_if_absent(vu, twin(w), 1);
            }
        }
    }
    out
}

pub fn cylindrical_grid_ring_blowup(t: usize, s: usize) -> Result<Graph> {
    Ok(ring_blowup(&cylindrical_grid_drawing(t, s)?))
}

/// `K4` drawn with the triangle `0, 1, 2` as external face and `3` inside.
pub fn k4_disk_drawing() -> DiskDrawing {
    let g = complete(4);
    let lists = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
    let r = rotation_unchecked(lists, &g);
    let outer = r
        .faces()
        .into_iter()
        .find(|f| f.len() == 3 && !f.contains(&3))
        .unwrap();
    DiskDrawing::new(g, r, outer).unwrap()
}

/// `Q_{s,r}`: the `s x (s r)` grid with terminal pairs. The first grid row
/// is `x_1, ..., x_{sr}`; terminals `t_i, t'_i` (numbered `s^2 r + 2(i-1)`
/// and `s^2 r + 2i - 1`) are both adjacent to `x_{(i-1)s+1}, ..., x_{is}`.
pub fn q_graph(s: usize, r: usize) -> Graph {
    let cols = s * r;
    let base = grid(s, cols);
    let n0 = base.n();
    let mut g = Graph::new(n0 + 2 * r);
    for ((u, v), w) in base.edges() {
        g.add_weighted_edge(u, v, w).unwrap();
    }
    for i in 0..r {
        for j in i * s..(i + 1) * s {
            g.add_edge(n0 + 2 * i, j).unwrap();
            g.add_edge(n0 + 2 * i + 1, j).unwrap();
        }
    }
    g
}

/// Random planar graph with its embedding: a stacked triangulation with
/// random edge flips, followed by random edge deletions.
pub fn random_planar(n: usize, seed: u64) -> (Graph, RotationSystem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delete = rng.gen_range(0.05..0.55);
    random_planar_rng(n, delete, &mut rng)
}

/// As [`random_planar`] with an explicit edge-deletion probability.
pub fn random_planar_with(n: usize, delete_prob: f64, seed: u64) -> (Graph, RotationSystem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_planar_rng(n, delete_prob, &mut rng)
}

pub(crate) fn random_planar_rng<R: Rng>(n: usize, delete_prob: f64, rng: &mut R) -> (Graph, RotationSystem) {
    if n < 3 {
        let mut g = Graph::new(n);
        if n == 2 && !rng.gen_bool(delete_prob) {
            g.add_edge(0, 1).unwrap();
        }
        let lists = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let r = rotation_unchecked(lists, &g);
        return (g, r);
    }
    // Oriented triangles; the two sides of the base triangle start it off.
    let mut tris: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris.swap_remove(i);
        tris.push([a, b, v]);
        tris.push([b, c, v]);
        tris.push([c, a, v]);
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in &tris {
        for i in 0..3 {
            let (u, v) = (t[i], t[(i + 1) % 3]);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    for _ in 0..(2 * n) {
        let i = rng.gen_range(0..tris.len());
        let side = rng.gen_range(0..3);
        let [a, b, c] = rotate3(tris[i], side);
        let Some(j) = tris.iter().position(|t| {
            (0..3).any(|s| {
                let r = rotate3(*t, s);
                r[0] == b && r[1] == a
            })
        }) else {
            continue;
        };
        let s = (0..3).find(|&s| {
            let r = rotate3(tris[j], s);
            r[0] == b && r[1] == a
        });
        let d = rotate3(tris[j], s.unwrap())[2];
        if c == d || edges.contains(&(c.min(d), c.max(d))) {
            continue;
        }
        edges.remove(&(a.min(b), a.max(b)));
        edges.insert((c.min(d), c.max(d)));
        tris[i] = [c, a, d];
        tris[j] = [d, b, c];
    }
    let mut succ = vec![Vec::<(usize, usize)>::new(); n];
    for t in &tris {
        for i in 0..3 {
            let (u, v, w) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            succ[v].push((u, w));
        }
    }
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let next = |u: usize| succ[v].iter().find(|p| p.0 == u).unwrap().1;
        let start = succ[v][0].0;
        let mut cyc = vec![start];
        let mut u = next(start);
        while u != start {
            cyc.push(u);
            u = next(u);
        }
        order.push(cyc);
    }
    let mut g = Graph::new(n);
    let mut kept = Vec::new();
    for &(u, v) in &edges {
        if !rng.gen_bool(delete_prob) {
            kept.push((u, v));
        }
    }
    for &(u, v) in &kept {
        g.add_edge(u, v).unwrap();
    }
    let lists = order
        .into_iter()
        .enumerate()
        .map(|(v, cyc)| cyc.into_iter().filter(|&u| g.has_edge(u, v)).collect())
        .collect();
    let r = rotation_unchecked(lists, &g);
    (g, r)
}

fn rotate3(t: [usize; 3], s: usize) -> [usize; 3] {
    [t[s % 3], t[(s + 1) % 3], t[(s + 2) % 3]]
}

/// A random planar graph on `n - apexes` vertices plus `apexes` extra
/// vertices (the last ids) joined to random vertex subsets.
pub fn random_apex_planar(n: usize, apexes: usize, seed: u64) -> (Graph, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = n.saturating_sub(apexes);
    let delete = rng.gen_range(0.05..0.55);
    let (base, _) = random_planar_rng(base_n, delete, &mut rng);
    let mut g = Graph::new(n);
    for ((u, v), w) in base.edges() {
        g.add_weighted_edge(u, v, w).unwrap();
    }
    let apex: Vec<usize> = (base_n..n).collect();
    for &a in &apex {
        let mut any = false;
        for v in 0..a {
            if rng.gen_bool(0.5) {
                g.add_edge(a, v).unwrap();
                any = true;
            }
        }
        if !any && a > 0 {
            g.add_edge(a, rng.gen_range(0..a)).unwrap();
        }
    }
    (g, apex)
}

/// Copy of `g` whose edge weights are drawn uniformly from `lo..=hi`.
pub fn with_random_weights(g: &Graph, lo: i64, hi: i64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Graph::new(g.n());
    for ((u, v), _) in g.edges() {
        out.add_weighted_edge(u, v, rng.gen_range(lo..=hi)).unwrap();
    }
    out
}

/// Random relabelling of the vertices of `g`, returned with the map old -> new.
pub fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    let mut out = Graph::new(g.n());
    for ((u, v), w) in g.edges() {
        out.add_weighted_edge(perm[u], perm[v], w).unwrap();
    }
    (out, perm)
}

/// A clique-sum of random planar pieces with up to two apex vertices,
/// together with the parts of its natural decomposition rooted at part 0.
#[derive(Clone, Debug)]
pub struct Composite {
    pub graph: Graph,
    pub parts: Vec<Part>,
    pub glue: Vec<(usize, usize)>,
    pub apex: Vec<usize>,
}

/// Random planar base (3 to 10 vertices), up to two apex vertices, and up
/// to two planar satellites glued on at most three cofacial base vertices.
/// Satellites may also see the apex vertices. Some glue-clique edges are
/// dropped again, and a pendant base vertex evens out odd orders. Edge
/// weights lie in `-2..=2`; at most 18 vertices.
pub fn random_composite(seed: u64) -> Composite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rng.gen_range(3..=10);
    let delete = rng.gen_range(0.05..0.5);
    let (base, rot) = random_planar_rng(base_n, delete, &mut rng);
    let apex_n = rng.gen_range(0..=2);
    let apex: Vec<usize> = (base_n..base_n + apex_n).collect();
    let mut edges: BTreeSet<Edge> = base.edge_list().into_iter().collect();
    for &a in &apex {
        for v in 0..a {
            if rng.gen_bool(0.4) {
                edges.insert(edge(v, a));
            }
        }
    }
    let mut parts = vec![Part {
        vertices: (0..base_n + apex_n).collect(),
        edges,
        apex: apex.iter().copied().collect(),
    }];
    let mut faces: Vec<Vec<usize>> = rot.faces().into_iter().map(distinct).collect();
    faces.shuffle(&mut rng);
    let mut glue_cliques: BTreeSet<Edge> = BTreeSet::new();
    let mut next = base_n + apex_n;
    let mut glue = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let face = faces.pop().unwrap_or_else(|| vec![rng.gen_range(0..base_n)]);
        let extra = rng.gen_range(1..=3);
        let want = rng.gen_range(1..=face.len().min(3));
        let (sat, srot) = random_planar_rng(want + extra, delete, &mut rng);
        let sat_faces: Vec<Vec<usize>> = srot.faces().into_iter().map(distinct).collect();
        let sat_face = sat_faces
            .iter()
            .filter(|f| f.len() >= want)
            .max_by_key(|f| f.len())
            .cloned()
            .unwrap_or_else(|| vec![0]);
        let size = want.min(sat_face.len());
        let mut on_base: Vec<usize> = face.choose_multiple(&mut rng, size).copied().collect();
        on_base.sort_unstable();
        let on_sat: Vec<usize> = sat_face.choose_multiple(&mut rng, size).copied().collect();
        let mut map = vec![usize::MAX; sat.n()];
        for (&s, &b) in on_sat.iter().zip(&on_base) {
            map[s] = b;
        }
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        let mut part = Part {
            vertices: map.iter().copied().collect(),
            edges: sat.edge_list().into_iter().map(|(u, v)| edge(map[u], map[v])).collect(),
            apex: BTreeSet::new(),
        };
        let mut clique = on_base.clone();
        if apex_n > 0 && rng.gen_bool(0.5) {
            for &a in &apex {
                part.vertices.insert(a);
                part.apex.insert(a);
                for &v in &map {
                    if v >= base_n + apex_n && rng.gen_bool(0.5) {
                        part.edges.insert(edge(v, a));
                    }
                }
            }
            clique.extend(&apex);
        }
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                part.edges.insert(edge(u, v));
                parts[0].edges.insert(edge(u, v));
                glue_cliques.insert(edge(u, v));
            }
        }
        glue.push((0, parts.len()));
        parts.push(part);
    }
    if next % 2 == 1 && next < 18 {
        parts[0].vertices.insert(next);
        parts[0].edges.insert(edge(rng.gen_range(0..base_n), next));
        next += 1;
    }
    let mut graph = Graph::new(next);
    for part in &parts {
        for &(u, v) in &part.edges {
            if !graph.has_edge(u, v) && !(glue_cliques.contains(&(u, v)) && rng.gen_bool(0.3)) {
                graph.add_weighted_edge(u, v, rng.gen_range(-2..=2)).unwrap();
            }
        }
    }
    Composite { graph, parts, glue, apex }
}

fn distinct(mut f: Vec<usize>) -> Vec<usize> {
    f.sort_unstable();
    f.dedup();
    f
}
