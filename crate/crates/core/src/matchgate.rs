//! Planar gadgets with at most three boundary vertices that reproduce the
//! partial generating functions of a branch.
//!
//! For a branch `B` with surviving boundary `Y` (`|Y| <= 3`), let `p_S` be
//! the generating function of `B - S` for `S ⊆ Y`. A gadget is valid when,
//! for every `S` of the right parity, the internal matchings of the gadget
//! covering all fresh vertices and exactly `Y \ S` sum to `p_S` (times the
//! gadget's scalar).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge};
use crate::poly::PolyFrac;

/// Parity of the vertex count of the branch residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn admits(self, k: usize) -> bool {
        (k % 2 == 0) == (self == Parity::Even)
    }
}

/// A gadget vertex: surviving boundary vertex (global id) or fresh vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GateVertex {
    Boundary(usize),
    Fresh(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matchgate {
    /// Surviving boundary vertices in ascending order.
    pub surviving: Vec<usize>,
    pub fresh: usize,
    pub edges: Vec<(GateVertex, GateVertex, PolyFrac)>,
    pub scalar: PolyFrac,
    /// Which of the eight constructions was used.
    pub case: u8,
}

/// Subset keys are sorted vertex lists.
pub type PsMap = BTreeMap<Vec<usize>, PolyFrac>;

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Selects and labels the gadget for the given surviving boundary.
pub fn build_matchgate(surviving: &[usize], parity: Parity, ps: &PsMap) -> Result<Matchgate> {
    let mut y: Vec<usize> = surviving.to_vec();
    y.sort_unstable();
    y.dedup();
    if y.len() > 3 {
        return Err(Error::PreconditionViolated("more than three surviving boundary vertices".into()));
    }
    for s in subsets(&y) {
        if parity.admits(s.len()) && !ps.contains_key(&s) {
            return Err(Error::MissingPs(s));
        }
    }
    let p = |s: &[usize]| -> PolyFrac {
        let mut key = s.to_vec();
        key.sort_unstable();
        ps[&key].clone()
    };
    use GateVertex::{Boundary as B, Fresh as N};
    let one = PolyFrac::one;
    let mut gate = Matchgate {
        surviving: y.clone(),
        fresh: 0,
        edges: Vec::new(),
        scalar: PolyFrac::one(),
        case: 0,
    };
    match (y.len(), parity) {
        (0, Parity::Even) => {
            gate.case = 1;
            gate.scalar = p(&[]);
        }
        (0, Parity::Odd) => {
            gate.case = 1;
            gate.scalar = PolyFrac::zero();
        }
        (1, Parity::Odd) => {
            gate.case = 2;
            gate.scalar = p(&y);
        }
        (1, Parity::Even) => {
            gate.case = 2;
            gate.fresh = 1;
            gate.edges.push((B(y[0]), N(0), p(&[])));
        }
        (2, Parity::Even) => {
            let (a, b) = (y[0], y[1]);
            gate.case = 3;
            gate.fresh = 2;
            gate.edges = vec![
                (B(a), N(0), p(&[])),
                (B(b), N(1), one()),
                (N(0), N(1), p(&[a, b])),
            ];
        }
        (2, Parity::Odd) => {
            let (a, b) = (y[0], y[1]);
            gate.case = 4;
            gate.fresh = 1;
            gate.edges = vec![(B(a), N(0), p(&[b])), (B(b), N(0), p(&[a]))];
        }
        (3, Parity::Even) => {
            let (a, b, c) = (y[0], y[1], y[2]);
            let empty = p(&[]);
            if !empty.is_zero() {
                gate.case = 5;
                gate.fresh = 3;
                let (u, v, w) = (N(0), N(1), N(2));
                let vw = p(&[b, c]).checked_div(&empty)?;
                gate.edges = vec![
                    (B(a), u, empty),
                    (B(b), v, one()),
                    (B(c), w, one()),
                    (u, v, p(&[a, b])),
                    (v, w, vw),
                    (w, u, p(&[a, c])),
                ];
            } else {
                gate.case = 6;
                gate.fresh = 1;
                let w = N(0);
                gate.edges = vec![
                    (w, B(a), p(&[b, c])),
                    (w, B(b), p(&[a, c])),
                    (w, B(c), p(&[a, b])),
                ];
            }
        }
        (3, Parity::Odd) => {
            let (a, b, c) = (y[0], y[1], y[2]);
            let pa = p(&[a]);
            let (v, w) = (N(0), N(1));
            gate.fresh = 2;
            if !pa.is_zero() {
                gate.case = 7;
                let aw = p(&[c]).checked_div(&pa)?;
                gate.edges = vec![
                    (w, B(c), one()),
                    (w, v, p(&[a, b, c])),
                    (v, B(a), p(&[b])),
                    (v, B(b), pa),
                    (B(a), w, aw),
                ];
            } else {
                gate.case = 8;
                gate.edges = vec![
                    (v, B(a), one()),
                    (w, v, p(&[a, b, c])),
                    (w, B(b), p(&[c])),
                    (w, B(c), p(&[b])),
                ];
            }
        }
        _ => unreachable!(),
    }
    Ok(gate)
}

impl Matchgate {
    /// Gadget edges over global ids, numbering fresh vertex `i` as
    /// `first_fresh + i`. Zero-labelled edges are dropped since they
    /// contribute nothing to any matching.
    pub fn materialize(&self, first_fresh: usize) -> Vec<(Edge, PolyFrac)> {
        let id = |g: GateVertex| match g {
            GateVertex::Boundary(v) => v,
            GateVertex::Fresh(i) => first_fresh + i,
        };
        self.edges
            .iter()
            .filter(|(_, _, l)| !l.is_zero())
            .map(|&(a, b, ref l)| (edge(id(a), id(b)), l.clone()))
            .collect()
    }

    /// For every `S ⊆ surviving`, the scalar times the sum over internal
    /// matchings covering all fresh vertices and exactly `surviving \ S`.
    pub fn exposure_sums(&self) -> PsMap {
        let base = usize::MAX / 2;
        let edges = self.materialize(base);
        let fresh: Vec<usize> = (0..self.fresh).map(|i| base + i).collect();
        let mut out = PsMap::new();
        for s in subsets(&self.surviving) {
            let sset: BTreeSet<usize> = s.iter().copied().collect();
            let mut must: Vec<usize> = self.surviving.iter().copied().filter(|v| !sset.contains(v)).collect();
            must.extend(&fresh);
            let sum = perfect_sum(&must, &edges);
            out.insert(s, &self.scalar * sum);
        }
        out
    }
}

fn perfect_sum(vertices: &[usize], edges: &[(Edge, PolyFrac)]) -> PolyFrac {
    let Some((&v, rest)) = vertices.split_first() else {
        return PolyFrac::one();
    };
    let mut total = PolyFrac::zero();
    for ((a, b), l) in edges {
        let other = if *a == v {
            *b
        } else if *b == v {
            *a
        } else {
            continue;
        };
        if let Some(i) = rest.iter().position(|&x| x == other) {
            let mut remaining = rest.to_vec();
            remaining.remove(i);
            total += l * perfect_sum(&remaining, edges);
        }
    }
    total
}
