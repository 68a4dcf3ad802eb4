//! Weighted directed multigraphs, simple-cycle enumeration, curve graphs and
//! clique polynomials.
//!
//! An edge of weight `w` stands for a path subdivided into `w` unit edges
//! through `w - 1` fresh vertices; `expand` materializes that. Two simple
//! cycles are disjoint exactly when they share no base vertex: a shared
//! subdivision vertex would mean a shared edge copy and therefore shared
//! base endpoints.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{char_poly, IntMatrix};
use crate::poly::{reciprocal_transform, IntPoly};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    vertices: usize,
    edges: Vec<Edge>,
}

/// A simple closed curve: a directed cycle visiting each base vertex at most
/// once, recorded from its minimal vertex. `edges` lists the traversed edge
/// copies as `(edge index, copy)`, so parallel copies yield distinct cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, u64)>,
    pub weight: u64,
}

impl Digraph {
    pub fn new(vertices: usize) -> Digraph {
        Digraph {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn add_edge(
        &mut self,
        src: usize,
        dst: usize,
        weight: u64,
        multiplicity: u64,
    ) -> Result<usize> {
        if src >= self.vertices || dst >= self.vertices {
            return Err(Error::invalid(format!(
                "edge ({src},{dst}) out of range for {} vertices",
                self.vertices
            )));
        }
        if weight == 0 || multiplicity == 0 {
            return Err(Error::invalid(
                "edge weight and multiplicity must be positive",
            ));
        }
        self.edges.push(Edge {
            src,
            dst,
            weight,
            multiplicity,
        });
        Ok(self.edges.len() - 1)
    }

    /// Drop one edge entry (all its parallel copies).
    pub fn delete_edge(&self, index: usize) -> Digraph {
        let mut g = self.clone();
        g.edges.remove(index);
        g
    }

    /// One vertex per matrix index and `A_ij` unit-weight parallel edges.
    pub fn from_matrix(a: &IntMatrix) -> Result<Digraph> {
        if !a.is_nonnegative() {
            return Err(Error::invalid(
                "adjacency digraph needs a nonnegative matrix",
            ));
        }
        let n = a.dim();
        let mut g = Digraph::new(n);
        for i in 0..n {
            for j in 0..n {
                let e = a.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let m = e
                    .to_u64()
                    .ok_or_else(|| Error::invalid("matrix entry too large for a multiplicity"))?;
                g.add_edge(i, j, 1, m)?;
            }
        }
        Ok(g)
    }

    /// Support digraph (multiplicities collapsed to one); cycle lengths are
    /// unaffected, which is all primitivity needs.
    pub fn from_matrix_support(a: &IntMatrix) -> Result<Digraph> {
        if !a.is_nonnegative() {
            return Err(Error::invalid(
                "adjacency digraph needs a nonnegative matrix",
            ));
        }
        let n = a.dim();
        let mut g = Digraph::new(n);
        for i in 0..n {
            for j in 0..n {
                if a.get(i, j).is_positive() {
                    g.add_edge(i, j, 1, 1)?;
                }
            }
        }
        Ok(g)
    }

    /// Adjacency matrix after subdividing every weight-`w` edge copy into
    /// `w` unit edges through `w - 1` fresh vertices.
    pub fn expand(&self) -> Result<IntMatrix> {
        let extra: u64 = self
            .edges
            .iter()
            .map(|e| (e.weight - 1) * e.multiplicity)
            .sum();
        let n = self.vertices
            + usize::try_from(extra).map_err(|_| Error::invalid("expanded dimension overflows"))?;
        if n > 10_000 {
            return Err(Error::invalid(format!("expanded dimension {n} too large")));
        }
        let mut m = IntMatrix::zero(n);
        let mut next = self.vertices;
        for e in &self.edges {
            for _ in 0..e.multiplicity {
                if e.weight == 1 {
                    *m.get_mut(e.src, e.dst) += BigInt::one();
                } else {
                    let mut prev = e.src;
                    for _ in 0..e.weight - 1 {
                        *m.get_mut(prev, next) += BigInt::one();
                        prev = next;
                        next += 1;
                    }
                    *m.get_mut(prev, e.dst) += BigInt::one();
                }
            }
        }
        Ok(m)
    }

    fn edge_instances(&self) -> Vec<(usize, usize, u64, usize, u64)> {
        // (src, dst, weight, edge index, copy)
        let mut out = Vec::new();
        for (idx, e) in self.edges.iter().enumerate() {
            for copy in 0..e.multiplicity {
                out.push((e.src, e.dst, e.weight, idx, copy));
            }
        }
        out
    }

    pub fn simple_cycles(&self) -> Result<Vec<SimpleCycle>> {
        self.simple_cycles_capped(DEFAULT_CYCLE_CAP)
    }

    /// All simple closed curves, in canonical order (lexicographic by vertex
    /// sequence starting at the minimal vertex, then by edge copies).
    pub fn simple_cycles_capped(&self, cap: usize) -> Result<Vec<SimpleCycle>> {
        let n = self.vertices;
        let instances = self.edge_instances();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, inst) in instances.iter().enumerate() {
            adj[inst.0].push(i);
        }
        for list in &mut adj {
            list.sort_by_key(|&i| (instances[i].1, instances[i].3, instances[i].4));
        }

        let mut out: Vec<SimpleCycle> = Vec::new();
        for start in 0..n {
            // Self-loops are cycles of their own and never extend.
            for &i in &adj[start] {
                let inst = instances[i];
                if inst.1 == start {
                    out.push(SimpleCycle {
                        vertices: vec![start],
                        edges: vec![(inst.3, inst.4)],
                        weight: inst.2,
                    });
                    if out.len() > cap {
                        return Err(Error::ResourceLimit {
                            what: "simple cycle",
                            cap,
                        });
                    }
                }
            }
            let mut blocked = vec![false; n];
            let mut blist: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
            let mut path = vec![start];
            let mut path_edges: Vec<(usize, u64)> = Vec::new();
            let mut path_weight: u64 = 0;
            self.circuit(
                start,
                start,
                &instances,
                &adj,
                &mut blocked,
                &mut blist,
                &mut path,
                &mut path_edges,
                &mut path_weight,
                &mut out,
                cap,
            )?;
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.edges.cmp(&b.edges)));
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn circuit(
        &self,
        v: usize,
        start: usize,
        instances: &[(usize, usize, u64, usize, u64)],
        adj: &[Vec<usize>],
        blocked: &mut Vec<bool>,
        blist: &mut Vec<BTreeSet<usize>>,
        path: &mut Vec<usize>,
        path_edges: &mut Vec<(usize, u64)>,
        path_weight: &mut u64,
        out: &mut Vec<SimpleCycle>,
        cap: usize,
    ) -> Result<bool> {
        blocked[v] = true;
        let mut found = false;
        for &i in &adj[v] {
            let (_, dst, weight, edge_idx, copy) = instances[i];
            if dst < start || dst == v {
                continue;
            }
            if dst == start {
                // Self-loops were emitted separately, so this closes a
                // cycle of length at least two.
                let mut edges = path_edges.clone();
                edges.push((edge_idx, copy));
                out.push(SimpleCycle {
                    vertices: path.clone(),
                    edges,
                    weight: *path_weight + weight,
                });
                if out.len() > cap {
                    return Err(Error::ResourceLimit {
                        what: "simple cycle",
                        cap,
                    });
                }
                found = true;
            } else if !blocked[dst] {
                path.push(dst);
                path_edges.push((edge_idx, copy));
                *path_weight += weight;
                let sub = self.circuit(
                    dst,
                    start,
                    instances,
                    adj,
                    blocked,
                    blist,
                    path,
                    path_edges,
                    path_weight,
                    out,
                    cap,
                )?;
                *path_weight -= weight;
                path_edges.pop();
                path.pop();
                found |= sub;
            }
        }
        if found {
            unblock(v, blocked, blist);
        } else {
            for &i in &adj[v] {
                let dst = instances[i].1;
                if dst >= start && dst != v {
                    blist[dst].insert(v);
                }
            }
        }
        Ok(found)
    }

    pub fn curve_graph(&self) -> Result<CurveGraph> {
        self.curve_graph_capped(DEFAULT_CYCLE_CAP)
    }

    /// One curve-graph vertex per simple cycle, weighted by cycle weight;
    /// edges join vertex-disjoint cycles.
    pub fn curve_graph_capped(&self, cap: usize) -> Result<CurveGraph> {
        let cycles = self.simple_cycles_capped(cap)?;
        let words = self.vertices.div_ceil(64).max(1);
        let masks: Vec<Vec<u64>> = cycles
            .iter()
            .map(|c| {
                let mut mask = vec![0u64; words];
                for &v in &c.vertices {
                    mask[v / 64] |= 1 << (v % 64);
                }
                mask
            })
            .collect();
        let m = cycles.len();
        let cg_words = m.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; cg_words]; m];
        for i in 0..m {
            for j in i + 1..m {
                let disjoint = masks[i].iter().zip(&masks[j]).all(|(a, b)| a & b == 0);
                if disjoint {
                    adj[i][j / 64] |= 1 << (j % 64);
                    adj[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(CurveGraph {
            weights: cycles.iter().map(|c| c.weight).collect(),
            adj,
            cycles: Some(cycles),
        })
    }

    /// File format: `v <count>` then `e <src> <dst> <weight> <multiplicity>`
    /// lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Digraph> {
        let mut graph: Option<Digraph> = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            match tok.next() {
                Some("v") => {
                    let n: usize = tok
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
                    graph = Some(Digraph::new(n));
                }
                Some("e") => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| Error::Parse("edge before vertex count".into()))?;
                    let nums: Vec<u64> = tok
                        .map(|t| {
                            t.parse::<u64>()
                                .map_err(|_| Error::Parse(format!("bad edge field {t:?}")))
                        })
                        .collect::<Result<_>>()?;
                    if nums.len() != 4 {
                        return Err(Error::Parse(
                            "edge lines are `e <src> <dst> <weight> <multiplicity>`".into(),
                        ));
                    }
                    g.add_edge(nums[0] as usize, nums[1] as usize, nums[2], nums[3])?;
                }
                Some(other) => {
                    return Err(Error::Parse(format!("unknown directive {other:?}")));
                }
                None => {}
            }
        }
        graph.ok_or_else(|| Error::Parse("missing `v <count>` line".into()))
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("v {}\n", self.vertices);
        for e in &self.edges {
            out.push_str(&format!(
                "e {} {} {} {}\n",
                e.src, e.dst, e.weight, e.multiplicity
            ));
        }
        out
    }
}

fn unblock(v: usize, blocked: &mut [bool], blist: &mut [BTreeSet<usize>]) {
    let mut stack = vec![v];
    while let Some(v) = stack.pop() {
        blocked[v] = false;
        let waiting: Vec<usize> = blist[v].iter().copied().collect();
        blist[v].clear();
        for w in waiting {
            if blocked[w] {
                stack.push(w);
            }
        }
    }
}

/// The graph of simple closed curves: weighted vertices, edges between
/// vertex-disjoint curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGraph {
    weights: Vec<u64>,
    adj: Vec<Vec<u64>>,
    /// Present when the graph was derived from a digraph.
    cycles: Option<Vec<SimpleCycle>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CliqueEntry {
    pub members: Vec<usize>,
    pub weight: u64,
    pub sign: i8,
}

impl CurveGraph {
    /// Build directly from weights and an undirected edge list.
    pub fn new(weights: Vec<u64>, edges: &[(usize, usize)]) -> Result<CurveGraph> {
        let m = weights.len();
        if weights.contains(&0) {
            return Err(Error::invalid("curve-graph weights must be positive"));
        }
        let words = m.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; m];
        for &(a, b) in edges {
            if a >= m || b >= m {
                return Err(Error::invalid("curve-graph edge out of range"));
            }
            if a == b {
                return Err(Error::invalid("curve-graph edges are irreflexive"));
            }
            adj[a][b / 64] |= 1 << (b % 64);
            adj[b][a / 64] |= 1 << (a % 64);
        }
        Ok(CurveGraph {
            weights,
            adj,
            cycles: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn cycles(&self) -> Option<&[SimpleCycle]> {
        self.cycles.as_deref()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b / 64] >> (b % 64) & 1 == 1
    }

    /// Sorted list of undirected edges.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let m = self.weights.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn clique_polynomial(&self) -> Result<IntPoly> {
        self.clique_polynomial_capped(DEFAULT_CLIQUE_CAP)
    }

    /// `Q(t) = Σ_K (-1)^|K| t^w(K)` over all cliques including the empty
    /// one; enumeration is capped.
    pub fn clique_polynomial_capped(&self, cap: usize) -> Result<IntPoly> {
        let total: u64 = self.weights.iter().sum();
        let max_exp = usize::try_from(total).map_err(|_| Error::invalid("weights overflow"))?;
        if max_exp > 1_000_000 {
            return Err(Error::invalid("total curve weight too large"));
        }
        let mut coeffs = vec![BigInt::zero(); max_exp + 1];
        coeffs[0] = BigInt::one();
        let m = self.weights.len();
        let words = m.div_ceil(64).max(1);
        let full: Vec<u64> = (0..words)
            .map(|w| {
                let bits = m.saturating_sub(w * 64).min(64);
                if bits == 64 {
                    u64::MAX
                } else {
                    (1u64 << bits) - 1
                }
            })
            .collect();
        let mut visited = 1usize;
        let mut stack: Vec<(usize, Vec<u64>, u64, bool)> = vec![(0, full, 0, false)];
        // (next candidate floor, candidate set, accumulated weight, odd size)
        while let Some((from, cands, weight, odd)) = stack.pop() {
            for v in from..m {
                if cands[v / 64] >> (v % 64) & 1 == 0 {
                    continue;
                }
                let w = weight + self.weights[v];
                let exp = usize::try_from(w).unwrap();
                if !odd {
                    coeffs[exp] -= BigInt::one();
                } else {
                    coeffs[exp] += BigInt::one();
                }
                visited += 1;
                if visited > cap {
                    return Err(Error::ResourceLimit {
                        what: "clique",
                        cap,
                    });
                }
                let next: Vec<u64> = cands.iter().zip(&self.adj[v]).map(|(c, a)| c & a).collect();
                if next.iter().any(|&x| x != 0) {
                    stack.push((v + 1, next, w, !odd));
                }
            }
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Explicit clique breakdown for report output.
    pub fn cliques_explain(&self, cap: usize) -> Result<Vec<CliqueEntry>> {
        let m = self.weights.len();
        let mut out = vec![CliqueEntry {
            members: Vec::new(),
            weight: 0,
            sign: 1,
        }];
        let mut stack: Vec<(usize, Vec<usize>, u64)> = vec![(0, Vec::new(), 0)];
        while let Some((from, members, weight)) = stack.pop() {
            for v in from..m {
                if members.iter().any(|&u| !self.has_edge(u, v)) {
                    continue;
                }
                let mut next = members.clone();
                next.push(v);
                let w = weight + self.weights[v];
                out.push(CliqueEntry {
                    members: next.clone(),
                    weight: w,
                    sign: if next.len() % 2 == 1 { -1 } else { 1 },
                });
                if out.len() > cap {
                    return Err(Error::ResourceLimit {
                        what: "clique",
                        cap,
                    });
                }
                stack.push((v + 1, next, w));
            }
        }
        out.sort_by(|a, b| a.members.cmp(&b.members));
        Ok(out)
    }

    /// Connectivity of the complement graph; the empty and one-vertex graphs
    /// count as connected.
    pub fn complement_connected(&self) -> bool {
        let m = self.weights.len();
        if m <= 1 {
            return true;
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (w, seen_w) in seen.iter_mut().enumerate() {
                if w != v && !*seen_w && !self.has_edge(v, w) {
                    *seen_w = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == m
    }
}

/// Master oracle: the characteristic polynomial of a nonnegative matrix
/// equals `t^n Q(1/t)` for the clique polynomial `Q` of its curve graph.
pub fn duality_check(a: &IntMatrix) -> Result<bool> {
    duality_check_capped(a, DEFAULT_CYCLE_CAP)
}

pub fn duality_check_capped(a: &IntMatrix, cap: usize) -> Result<bool> {
    let n = a.dim();
    let g = Digraph::from_matrix(a)?;
    let q = g.curve_graph_capped(cap)?.clique_polynomial_capped(cap)?;
    let chi = reciprocal_transform(&q, n)?;
    Ok(chi == char_poly(a))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualityBatchReport {
    pub checked: usize,
    pub seed: u64,
    pub max_dim: usize,
    /// File-format dumps of any matrices that failed the oracle.
    pub failures: Vec<String>,
}

/// Run the duality oracle over `count` seeded random nonnegative matrices
/// with entries in `{0, 1, 2}` and dimensions cycling through `1..=max_dim`.
pub fn duality_batch_check(count: usize, max_dim: usize, seed: u64) -> Result<DualityBatchReport> {
    use rand::{Rng, SeedableRng};
    if max_dim == 0 || max_dim > 8 {
        return Err(Error::invalid("duality batch supports dimensions 1..=8"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut matrices = Vec::with_capacity(count);
    for i in 0..count {
        let n = 1 + i % max_dim;
        let mut m = IntMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                *m.get_mut(r, c) = BigInt::from(rng.gen_range(0..=2));
            }
        }
        matrices.push(m);
    }
    let results = crate::parallel::ordered_map(&matrices, duality_check);
    let mut failures = Vec::new();
    for (m, ok) in matrices.iter().zip(results) {
        if !ok? {
            failures.push(m.to_file_string());
        }
    }
    if !failures.is_empty() {
        return Err(Error::verification(
            "duality batch",
            format!("{} matrices violated the duality oracle", failures.len()),
        ));
    }
    Ok(DualityBatchReport {
        checked: count,
        seed,
        max_dim,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::companion;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn from_matrix_examples() {
        let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        let g = Digraph::from_matrix(&fib).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().len(), 3);
        let zero = IntMatrix::zero(3);
        let g = Digraph::from_matrix(&zero).unwrap();
        assert!(g.edges().is_empty());
        assert!(g.simple_cycles().unwrap().is_empty());
    }

    #[test]
    fn expand_examples() {
        // Self-loop of weight 4 becomes a cyclic permutation matrix.
        let mut g = Digraph::new(1);
        g.add_edge(0, 0, 4, 1).unwrap();
        let m = g.expand().unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(char_poly(&m), p(&[-1, 0, 0, 0, 1]));

        // Unit-weight round trip.
        let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        let g = Digraph::from_matrix(&fib).unwrap();
        assert_eq!(g.expand().unwrap(), fib);
    }

    #[test]
    fn cycles_of_companion() {
        // t^6 - t^3 - 1: a 6-cycle plus a chord making a 3-cycle.
        let c = companion(&p(&[-1, 0, 0, -1, 0, 0, 1])).unwrap();
        let g = Digraph::from_matrix(&c).unwrap();
        let cycles = g.simple_cycles().unwrap();
        let mut weights: Vec<u64> = cycles.iter().map(|c| c.weight).collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![3, 6]);
    }

    #[test]
    fn cycles_with_parallel_edges_and_loops() {
        // Complete digraph on 2 vertices with self-loops.
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let g = Digraph::from_matrix(&m).unwrap();
        let cycles = g.simple_cycles().unwrap();
        let mut weights: Vec<u64> = cycles.iter().map(|c| c.weight).collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![1, 1, 2]);

        // Doubled 2-cycle: 2x2 = 4 distinct simple cycles through both
        // vertices.
        let m = IntMatrix::from_rows(&[vec![0, 2], vec![2, 0]]).unwrap();
        let g = Digraph::from_matrix(&m).unwrap();
        assert_eq!(g.simple_cycles().unwrap().len(), 4);
    }

    #[test]
    fn cycle_cap_is_enforced() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let g = Digraph::from_matrix(&m).unwrap();
        match g.simple_cycles_capped(2) {
            Err(Error::ResourceLimit { what, cap }) => {
                assert_eq!(what, "simple cycle");
                assert_eq!(cap, 2);
            }
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn curve_graph_of_imprimitive_companion() {
        // Cycles of weight 3 and 6 share vertices: 2A1, no edge.
        let c = companion(&p(&[-1, 0, 0, -1, 0, 0, 1])).unwrap();
        let cg = Digraph::from_matrix(&c).unwrap().curve_graph().unwrap();
        assert_eq!(cg.vertex_count(), 2);
        let mut w = cg.weights().to_vec();
        w.sort_unstable();
        assert_eq!(w, vec![3, 6]);
        assert!(cg.edge_list().is_empty());
        assert_eq!(cg.clique_polynomial().unwrap(), {
            // 1 - t^3 - t^6
            p(&[1, 0, 0, -1, 0, 0, -1])
        });
    }

    #[test]
    fn disjoint_loops_give_a2() {
        let mut g = Digraph::new(2);
        g.add_edge(0, 0, 2, 1).unwrap();
        g.add_edge(1, 1, 3, 1).unwrap();
        let cg = g.curve_graph().unwrap();
        assert_eq!(cg.vertex_count(), 2);
        assert_eq!(cg.edge_list(), vec![(0, 1)]);
        // cliques: {}, {a}, {b}, {a,b}
        assert_eq!(cg.clique_polynomial().unwrap(), p(&[1, 0, -1, -1, 0, 1]));
    }

    #[test]
    fn complement_connectivity() {
        let na1 = CurveGraph::new(vec![1, 2, 3], &[]).unwrap();
        assert!(na1.complement_connected());
        let a2 = CurveGraph::new(vec![1, 2], &[(0, 1)]).unwrap();
        assert!(!a2.complement_connected());
        let a2_star = CurveGraph::new(vec![1, 2, 3], &[(0, 1)]).unwrap();
        assert!(a2_star.complement_connected());
        let single = CurveGraph::new(vec![5], &[]).unwrap();
        assert!(single.complement_connected());
    }

    #[test]
    fn duality_fibonacci() {
        let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        let cg = Digraph::from_matrix(&fib).unwrap().curve_graph().unwrap();
        // Cycles of weight 1 and 2 share vertex 0.
        assert_eq!(cg.clique_polynomial().unwrap(), p(&[1, -1, -1]));
        assert!(duality_check(&fib).unwrap());
    }

    #[test]
    fn duality_on_family_companions() {
        for poly in [
            p(&[-1, -1, 1]),
            p(&[-1, -1, 0, -1, 1]),
            p(&[-1, 0, 0, -1, 0, 0, 1]),
            p(&[-1, -1, 0, 0, 0, -1, 1]),
            p(&[-1, 0, 0, -1, 0, -1, 0, 0, 1]),
        ] {
            let c = companion(&poly).unwrap();
            assert!(duality_check(&c).unwrap(), "duality fails for {poly:?}");
        }
    }

    #[test]
    fn expanded_and_base_cycle_weights_agree() {
        let mut g = Digraph::new(2);
        g.add_edge(0, 0, 2, 1).unwrap();
        g.add_edge(0, 1, 3, 2).unwrap();
        g.add_edge(1, 0, 1, 1).unwrap();
        let base: Vec<u64> = {
            let mut w: Vec<u64> = g
                .simple_cycles()
                .unwrap()
                .iter()
                .map(|c| c.weight)
                .collect();
            w.sort_unstable();
            w
        };
        let expanded = g.expand().unwrap();
        let eg = Digraph::from_matrix(&expanded).unwrap();
        let mut exp_w: Vec<u64> = eg
            .simple_cycles()
            .unwrap()
            .iter()
            .map(|c| c.weight)
            .collect();
        exp_w.sort_unstable();
        assert_eq!(base, exp_w);
    }

    #[test]
    fn parse_round_trip() {
        let text = "v 2\ne 0 0 2 1\ne 0 1 3 2\n";
        let g = Digraph::parse(text).unwrap();
        assert_eq!(g.to_file_string(), text);
        assert!(Digraph::parse("e 0 1 1 1").is_err());
        assert!(Digraph::parse("v 1\ne 0 2 1 1").is_err());
    }
}
