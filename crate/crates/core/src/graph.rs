//! Simple undirected graphs on `[n]` stored as adjacency bitset rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{cap, Error, Result};
use crate::util::next_permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Index of the pair `u < v` in the row-major list of the `n choose 2` slots.
#[inline]
pub fn slot(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

pub fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Inverse of [`slot`], as a lookup table.
pub fn slot_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(slot_count(n));
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

impl Graph {
    /// Validated constructor. Pairs may be given in either order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b))
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Star on `n` vertices with center 0.
    pub fn star(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn from_slot_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut m = mask;
        let pairs = slot_pairs(n);
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            let (u, v) = pairs[s];
            g.add_edge(u, v);
            m &= m - 1;
        }
        g
    }

    /// Edge set as a slot bitmap; only for `n <= 11`.
    pub fn slot_mask(&self) -> u64 {
        assert!(self.n <= 11, "slot masks need n <= 11");
        let mut m = 0u64;
        for (u, v) in self.edges() {
            m |= 1 << slot(self.n, u, v);
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in slot order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `G{S}`: same vertices, edge set exactly `S`.
    pub fn edge_subgraph(&self, s: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(self.n);
        for &(a, b) in s {
            if a >= self.n || b >= self.n || a == b || !self.has_edge(a, b) {
                return Err(Error::NotAnEdge(a, b));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Edge subgraph selecting the edges of `edges` whose bit is set in `mask`.
    pub fn edge_subgraph_mask(&self, edges: &[(usize, usize)], mask: u64) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `G[A]`, relabeled to `[|A|]` in the order of `a`.
    pub fn induced_subgraph(&self, a: &[usize]) -> Result<Graph> {
        for &x in a {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let mut g = Graph::empty(a.len());
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if self.has_edge(a[i], a[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Deletes the listed vertices and relabels the rest in order.
    pub fn delete_vertices(&self, drop: &[bool]) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep).expect("kept vertices are in range")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// True iff every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

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
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// The empty graph counts as connected here; parameters decide their own convention.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_clique(&self) -> bool {
        self.edge_count() == slot_count(self.n)
    }

    /// Number of `l`-vertex cliques.
    pub fn count_cliques(&self, l: usize) -> u64 {
        if l == 0 {
            return 1;
        }
        let all: Vec<u64> = full_set(self.n, self.words);
        self.clique_rec(&all, l)
    }

    fn clique_rec(&self, cand: &[u64], l: usize) -> u64 {
        if l == 1 {
            return cand.iter().map(|w| w.count_ones() as u64).sum();
        }
        let mut total = 0;
        let mut rest = cand.to_vec();
        for v in bits(cand).collect::<Vec<_>>() {
            rest[v / 64] &= !(1 << (v % 64));
            let next: Vec<u64> = rest.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().any(|&w| w != 0) {
                total += self.clique_rec(&next, l - 1);
            }
        }
        total
    }

    /// True iff `K_{a,b}` is a (not necessarily induced) subgraph.
    pub fn contains_biclique(&self, a: usize, b: usize) -> bool {
        assert!(a >= 1 && b >= 1);
        if a + b > self.n {
            return false;
        }
        let all = full_set(self.n, self.words);
        self.biclique_rec(0, a, &all, b)
    }

    fn biclique_rec(&self, start: usize, left: usize, common: &[u64], b: usize) -> bool {
        let size: usize = common.iter().map(|w| w.count_ones() as usize).sum();
        if size < b {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in start..self.n {
            let next: Vec<u64> = common.iter().zip(self.row(v)).map(|(x, y)| x & y).collect();
            if self.biclique_rec(v + 1, left - 1, &next, b) {
                return true;
            }
        }
        false
    }

    /// Minimum vertex cover size by branch and bound.
    pub fn vertex_cover_number(&self) -> Result<usize> {
        cap("vertex cover host size", self.n, 16)?;
        let adj: Vec<u32> = (0..self.n).map(|v| self.row(v)[0] as u32).collect();
        let mut best = self.n;
        vc_rec(&adj, (1u32 << self.n).wrapping_sub(1) & mask_n(self.n), 0, &mut best);
        Ok(best)
    }

    pub fn automorphism_count(&self) -> Result<u64> {
        cap("automorphism host size", self.n, 8)?;
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        Ok(self.aut_rec(0, &mut image, &mut used))
    }

    fn aut_rec(&self, v: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
        if v == self.n {
            return 1;
        }
        let mut total = 0;
        for w in 0..self.n {
            if used[w] || self.degree(v) != self.degree(w) {
                continue;
            }
            if (0..v).all(|u| self.has_edge(u, v) == self.has_edge(image[u], w)) {
                image[v] = w;
                used[w] = true;
                total += self.aut_rec(v + 1, image, used);
                used[w] = false;
            }
        }
        total
    }

    /// Brute-force isomorphism test for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            if self.permuted(&perm) == *other {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    /// `G_1 ∘ … ∘ G_m`; vertex `(x_1..x_m)` sits at the mixed-radix index with `x_1` most significant.
    pub fn lexicographic_product(factors: &[Graph]) -> Result<Graph> {
        if factors.is_empty() {
            return Err(Error::Precondition("empty factor list".into()));
        }
        if let Some(f) = factors.iter().find(|f| f.n == 0) {
            return Err(Error::Precondition(format!("empty factor on {} vertices", f.n)));
        }
        let sizes: Vec<usize> = factors.iter().map(|f| f.n).collect();
        let total: usize = sizes.iter().product();
        let digits = |mut x: usize| {
            let mut d = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                d[i] = x % sizes[i];
                x /= sizes[i];
            }
            d
        };
        let mut g = Graph::empty(total);
        for x in 0..total {
            let dx = digits(x);
            for y in x + 1..total {
                let dy = digits(y);
                let i = (0..sizes.len()).find(|&i| dx[i] != dy[i]).expect("distinct tuples");
                if factors[i].has_edge(dx[i], dy[i]) {
                    g.add_edge(x, y);
                }
            }
        }
        Ok(g)
    }

    /// `C[G_1..G_m]`: blocks laid out in part order, fully joined along edges of `C`.
    pub fn inhabited_graph(c: &Graph, parts: &[Graph]) -> Result<Graph> {
        if parts.len() != c.n {
            return Err(Error::ArityMismatch { expected: c.n, got: parts.len() });
        }
        let mut offset = vec![0];
        for p in parts {
            offset.push(offset.last().unwrap() + p.n);
        }
        let mut g = Graph::empty(*offset.last().unwrap());
        for (i, p) in parts.iter().enumerate() {
            for (u, v) in p.edges() {
                g.add_edge(offset[i] + u, offset[i] + v);
            }
        }
        for (i, j) in c.edges() {
            for u in offset[i]..offset[i + 1] {
                for v in offset[j]..offset[j + 1] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Circulant graph on `F_q` with connection set `A ∪ -A`, `A ⊆ F_q^+`.
    pub fn difference_graph(q: usize, a: &[usize]) -> Result<Graph> {
        if !crate::util::is_prime(q as u64) {
            return Err(Error::NotPrime(q as u64));
        }
        let top = positive_half(q);
        for &x in a {
            if x == 0 || x > top {
                return Err(Error::Precondition(format!("{x} is outside F_{q}^+ = 1..={top}")));
            }
        }
        let mut g = Graph::empty(q);
        for u in 0..q {
            for v in u + 1..q {
                let d = v - u;
                if a.iter().any(|&x| x == d || x == q - d) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }
}

/// Largest element of `F_q^+`: `(q-1)/2`, or 1 when `q = 2`.
pub fn positive_half(q: usize) -> usize {
    if q == 2 {
        1
    } else {
        (q - 1) / 2
    }
}

fn mask_n(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn vc_rec(adj: &[u32], alive: u32, taken: usize, best: &mut usize) {
    if taken >= *best {
        return;
    }
    // pick a live vertex of max live degree
    let mut pick = None;
    let mut pick_deg = 0;
    let mut a = alive;
    while a != 0 {
        let v = a.trailing_zeros() as usize;
        a &= a - 1;
        let d = (adj[v] & alive).count_ones();
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = taken;
        return;
    };
    vc_rec(adj, alive & !(1 << v), taken + 1, best);
    let nb = adj[v] & alive;
    vc_rec(adj, alive & !nb & !(1 << v), taken + nb.count_ones() as usize, best);
}

fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut s = vec![0u64; words];
    for v in 0..n {
        s[v / 64] |= 1 << (v % 64);
    }
    s
}

pub(crate) fn bits(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(raw.n, &edges).map_err(serde::de::Error::custom)
    }
}
