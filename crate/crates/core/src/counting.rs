//! Counting engines: `#IndSub`, `#cpIndSub`, `#Hom`, `#cpHom`, `#Sub`, and the FPT `#IndSub` path.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::canon::{class_table, enumerate_canonical_graphs, CanonicalKey};
use crate::enumerator::{all_alternating_enumerators, alternating_enumerator};
use crate::error::{cap, pre, Error, Result};
use crate::graph::{slot, Graph};
use crate::params::GraphParameter;
use crate::util::{rat, Rational};

/// `G` presented as an `H`-colored graph: `map` is a homomorphism `V(G) → V(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HColoring {
    pub host: Graph,
    pub pattern: Graph,
    pub map: Vec<usize>,
}

impl HColoring {
    pub fn new(host: Graph, pattern: Graph, map: Vec<usize>) -> Result<HColoring> {
        pre(map.len() == host.n(), || format!("coloring has {} entries for {} vertices", map.len(), host.n()))?;
        for (v, &c) in map.iter().enumerate() {
            pre(c < pattern.n(), || format!("vertex {v} colored {c}, pattern has {} vertices", pattern.n()))?;
        }
        for (u, v) in host.edges() {
            if map[u] == map[v] || !pattern.has_edge(map[u], map[v]) {
                return Err(Error::Precondition(format!(
                    "edge {{{u},{v}}} maps to non-edge {{{},{}}} of the pattern",
                    map[u], map[v]
                )));
            }
        }
        Ok(HColoring { host, pattern, map })
    }

    pub fn identity(h: &Graph) -> HColoring {
        HColoring { host: h.clone(), pattern: h.clone(), map: (0..h.n()).collect() }
    }

    /// Vertices of each color, in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.pattern.n()];
        for (v, &c) in self.map.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// `Σ_{A ∈ binom(V(G),k)} Φ(G[A])`.
pub fn count_indsub(phi: &GraphParameter, k: usize, g: &Graph) -> Result<Rational> {
    pre(k >= 1, || "k must be at least 1".into())?;
    if k > g.n() {
        return Ok(Rational::zero());
    }
    cap("IndSub host size", g.n(), 64)?;
    if let Some(table) = class_table(k) {
        let tally = induced_class_census(g, k);
        let mut total = Rational::zero();
        for (c, &t) in tally.iter().enumerate() {
            if t != 0 {
                total += phi.evaluate_key(table.key(c))? * Rational::from_integer(BigInt::from(t));
            }
        }
        return Ok(total);
    }
    let mut total = Rational::zero();
    for a in crate::util::k_subsets(g.n(), k) {
        total += phi.evaluate(&g.induced_subgraph(&a)?)?;
    }
    Ok(total)
}

/// Number of `k`-subsets inducing each isomorphism class (class ids of the `k`-vertex table).
pub fn induced_class_census(g: &Graph, k: usize) -> Vec<u64> {
    let table = class_table(k).expect("census needs k <= 7");
    if k > g.n() {
        return vec![0; table.reps().len()];
    }
    let comps = g.components();
    if comps.len() == 1 {
        return connected_census(g, k);
    }
    // a k-set splits over components, so convolve per-component censuses by class
    let mut acc: Vec<HashMap<usize, u64>> = vec![HashMap::new(); k + 1];
    acc[0].insert(0, 1);
    let mut unions: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    for comp in comps {
        let h = g.induced_subgraph(&comp).expect("component vertices are in range");
        let parts: Vec<Vec<u64>> = (1..=k.min(h.n())).map(|s| connected_census(&h, s)).collect();
        let mut next = acc.clone();
        for (sa, classes) in acc.iter().enumerate() {
            for (&ca, &na) in classes {
                for (sb, tally) in parts.iter().enumerate().map(|(i, t)| (i + 1, t)) {
                    if sa + sb > k {
                        break;
                    }
                    for (cb, &nb) in tally.iter().enumerate().filter(|(_, &n)| n != 0) {
                        let c = *unions.entry((sa, ca, sb, cb)).or_insert_with(|| union_class(sa, ca, sb, cb));
                        *next[sa + sb].entry(c).or_insert(0) += na * nb;
                    }
                }
            }
        }
        acc = next;
    }
    let mut tally = vec![0u64; table.reps().len()];
    for (c, n) in acc.swap_remove(k) {
        tally[c] = n;
    }
    tally
}

/// Class id of the disjoint union of two classes.
fn union_class(sa: usize, ca: usize, sb: usize, cb: usize) -> usize {
    let a = Graph::from_slot_mask(sa, class_table(sa).expect("small").reps()[ca]);
    let b = Graph::from_slot_mask(sb, class_table(sb).expect("small").reps()[cb]);
    class_table(sa + sb).expect("small").class(a.disjoint_union(&b).slot_mask())
}

fn connected_census(g: &Graph, k: usize) -> Vec<u64> {
    let table = class_table(k).expect("census needs k <= 7");
    let mut bit = [[0u64; 8]; 8];
    for j in 0..k {
        for i in 0..j {
            bit[i][j] = 1 << slot(k, i, j);
        }
    }
    let mut tally = vec![0u64; table.reps().len()];
    let mut chosen = [0usize; 8];
    census_rec(g, k, 0, 0, 0, &mut chosen, &bit, table, &mut tally);
    tally
}

#[allow(clippy::too_many_arguments)]
fn census_rec(
    g: &Graph,
    k: usize,
    depth: usize,
    start: usize,
    mask: u64,
    chosen: &mut [usize; 8],
    bit: &[[u64; 8]; 8],
    table: &crate::canon::ClassTable,
    tally: &mut [u64],
) {
    if depth == k {
        tally[table.class(mask)] += 1;
        return;
    }
    for v in start..=g.n() - (k - depth) {
        let mut m = mask;
        for i in 0..depth {
            if g.has_edge(chosen[i], v) {
                m |= bit[i][depth];
            }
        }
        chosen[depth] = v;
        census_rec(g, k, depth + 1, v + 1, m, chosen, bit, table, tally);
    }
}

/// Σ over colorful sets (one vertex per class) of `Φ(G[A])`.
pub fn count_cp_indsub(phi: &GraphParameter, coloring: &HColoring) -> Result<Rational> {
    cap("cp-IndSub pattern size", coloring.pattern.n(), 6)?;
    cap("cp-IndSub host size", coloring.host.n(), 40)?;
    let classes = coloring.classes();
    if classes.iter().any(|c| c.is_empty()) {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    let mut pick = vec![0usize; classes.len()];
    loop {
        let a: Vec<usize> = pick.iter().zip(&classes).map(|(&i, c)| c[i]).collect();
        total += phi.evaluate(&coloring.host.induced_subgraph(&a)?)?;
        if !advance(&mut pick, &classes) {
            return Ok(total);
        }
    }
}

fn advance(pick: &mut [usize], classes: &[Vec<usize>]) -> bool {
    for i in 0..pick.len() {
        pick[i] += 1;
        if pick[i] < classes[i].len() {
            return true;
        }
        pick[i] = 0;
    }
    false
}

pub fn count_hom(h: &Graph, g: &Graph) -> Result<BigInt> {
    cap("hom pattern size", h.n(), 8)?;
    let candidates: Vec<Vec<usize>> = vec![(0..g.n()).collect(); h.n()];
    Ok(BigInt::from(hom_rec(h, g, &candidates, 0, &mut vec![0; h.n()], false)))
}

fn hom_rec(h: &Graph, g: &Graph, cand: &[Vec<usize>], v: usize, image: &mut Vec<usize>, injective: bool) -> u64 {
    if v == h.n() {
        return 1;
    }
    let mut total = 0;
    for &w in &cand[v] {
        if injective && image[..v].contains(&w) {
            continue;
        }
        if (0..v).all(|u| !h.has_edge(u, v) || g.has_edge(image[u], w)) {
            image[v] = w;
            total += hom_rec(h, g, cand, v + 1, image, injective);
        }
    }
    total
}

/// Color-prescribed homomorphisms from `pattern` (an edge subgraph of `H`, default `H`).
pub fn count_cphom(coloring: &HColoring, pattern: Option<&Graph>) -> Result<BigInt> {
    let h = pattern.unwrap_or(&coloring.pattern);
    cap("cp-hom pattern size", h.n(), 8)?;
    pre(h.is_edge_subgraph_of(&coloring.pattern), || "pattern is not an edge subgraph of H".into())?;
    let classes = coloring.classes();
    Ok(BigInt::from(hom_rec(h, &coloring.host, &classes, 0, &mut vec![0; h.n()], false)))
}

/// Subgraphs of `G` isomorphic to `H`, by injective homomorphisms over `#Aut(H)`.
pub fn count_sub(h: &Graph, g: &Graph) -> Result<BigInt> {
    cap("sub pattern size (brute force)", h.n(), 6)?;
    if h.n() > g.n() {
        return Ok(BigInt::zero());
    }
    let candidates: Vec<Vec<usize>> = vec![(0..g.n()).collect(); h.n()];
    let inj = hom_rec(h, g, &candidates, 0, &mut vec![0; h.n()], true);
    let aut = h.automorphism_count()?;
    Ok(BigInt::from(inj / aut))
}

/// Minimum vertex cover as an explicit vertex set.
fn min_vertex_cover(h: &Graph) -> Result<Vec<usize>> {
    let size = h.vertex_cover_number()?;
    let edges = h.edges();
    crate::util::k_subsets(h.n(), size)
        .into_iter()
        .find(|c| edges.iter().all(|(u, v)| c.contains(u) || c.contains(v)))
        .ok_or_else(|| Error::Invariant("no cover of the computed size".into()))
}

/// All set partitions of `0..n`, as block lists.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for p in out {
            for i in 0..p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// `#Sub(H, G)` by mapping a minimum vertex cover and counting independent extensions.
/// Distinctness of the remainder is handled by Möbius inversion over set partitions.
pub fn count_sub_vc(h: &Graph, g: &Graph) -> Result<BigInt> {
    cap("sub pattern size (vertex cover path)", h.n(), 8)?;
    if h.n() > g.n() {
        return Ok(BigInt::zero());
    }
    let cover = min_vertex_cover(h)?;
    cap("vertex cover of the pattern", cover.len(), 3)?;
    let rest: Vec<usize> = (0..h.n()).filter(|v| !cover.contains(v)).collect();
    let words = g.n().div_ceil(64).max(1);
    let partitions = set_partitions(rest.len());
    // μ(π) = Π_B (-1)^{|B|-1} (|B|-1)!
    let mu: Vec<i64> = partitions
        .iter()
        .map(|p| {
            p.iter()
                .map(|b| {
                    let f: i64 = (1..b.len() as i64).product();
                    if b.len() % 2 == 0 { -f } else { f }
                })
                .product()
        })
        .collect();
    let sub_cover = h.induced_subgraph(&cover)?;
    let mut total = BigInt::zero();
    let mut image = vec![0usize; cover.len()];
    let mut stack = vec![0usize; cover.len()];
    let assign = |image: &[usize]| -> BigInt {
        let mut sets: Vec<Vec<u64>> = Vec::with_capacity(rest.len());
        for &r in &rest {
            let mut s = vec![u64::MAX; words];
            for (ci, &c) in cover.iter().enumerate() {
                if h.has_edge(r, c) {
                    for (w, x) in s.iter_mut().zip(g.row(image[ci])) {
                        *w &= x;
                    }
                }
            }
            for (i, w) in s.iter_mut().enumerate() {
                let lo = i * 64;
                let valid = if g.n() >= lo + 64 { u64::MAX } else if g.n() > lo { (1u64 << (g.n() - lo)) - 1 } else { 0 };
                *w &= valid;
            }
            for &x in image {
                s[x / 64] &= !(1 << (x % 64));
            }
            sets.push(s);
        }
        let mut acc = BigInt::zero();
        for (p, &m) in partitions.iter().zip(&mu) {
            let mut prod = BigInt::from(m);
            for block in p {
                let mut s = sets[block[0]].clone();
                for &i in &block[1..] {
                    for (w, x) in s.iter_mut().zip(&sets[i]) {
                        *w &= x;
                    }
                }
                let size: u64 = s.iter().map(|w| w.count_ones() as u64).sum();
                prod *= size;
                if prod.is_zero() {
                    break;
                }
            }
            acc += prod;
        }
        acc
    };
    if cover.is_empty() {
        total += assign(&image);
    } else {
        // odometer over injective cover images
        let n = g.n();
        let mut depth = 0;
        stack[0] = 0;
        loop {
            if stack[depth] >= n {
                if depth == 0 {
                    break;
                }
                depth -= 1;
                stack[depth] += 1;
                continue;
            }
            let w = stack[depth];
            let ok = !image[..depth].contains(&w)
                && (0..depth).all(|u| !sub_cover.has_edge(u, depth) || g.has_edge(image[u], w));
            if !ok {
                stack[depth] += 1;
                continue;
            }
            image[depth] = w;
            if depth + 1 == cover.len() {
                total += assign(&image);
                stack[depth] += 1;
            } else {
                depth += 1;
                stack[depth] = 0;
            }
        }
    }
    let aut = BigInt::from(h.automorphism_count()?);
    let (q, r) = (&total / &aut, &total % &aut);
    if !r.is_zero() {
        return Err(Error::Invariant(format!("{total} injective maps not divisible by #Aut = {aut}")));
    }
    Ok(q)
}

/// `#IndSub(Φ,k)(G) = Σ_H (-1)^{#E(H)} χ̂(Φ,H) #Sub(H,G)` over nonvanishing terms of vertex cover at most `τ`.
pub fn fpt_indsub(phi: &GraphParameter, k: usize, g: &Graph, tau: usize) -> Result<Rational> {
    cap("FPT pattern size", k, 5)?;
    pre(k >= 1, || "k must be at least 1".into())?;
    let mut total = Rational::zero();
    for (key, chi) in all_alternating_enumerators(phi, k)? {
        if chi.is_zero() {
            continue;
        }
        let h = key.graph();
        let vc = h.vertex_cover_number()?;
        pre(vc <= tau, || format!("{key} has vertex cover {vc} > {tau} but a nonvanishing enumerator {chi}"))?;
        let sign = if key.edge_count() % 2 == 0 { rat(1) } else { rat(-1) };
        total += sign * chi * Rational::from_integer(count_sub_vc(&h, g)?);
    }
    Ok(total)
}

/// One term of an expansion.
#[derive(Clone, Debug)]
pub struct ExpansionTerm {
    pub pattern: Graph,
    pub coefficient: Rational,
    pub chi: Rational,
    pub count: Rational,
}

#[derive(Clone, Debug)]
pub struct ExpansionReport {
    pub left: Rational,
    pub right: Rational,
    pub terms: Vec<ExpansionTerm>,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

/// `#cpIndSub(Φ,H)(G)` against `Σ_{A⊆E(H)} (-1)^{#A} χ̂(Φ,H{A}) #cpHom(H{A},G)`.
pub fn verify_cpindsub_hom_expansion(phi: &GraphParameter, coloring: &HColoring) -> Result<ExpansionReport> {
    let edges = coloring.pattern.edges();
    cap("pattern edge count", edges.len(), 10)?;
    let left = count_cp_indsub(phi, coloring)?;
    let mut right = Rational::zero();
    let mut terms = Vec::new();
    for mask in 0u64..(1 << edges.len()) {
        let pattern = coloring.pattern.edge_subgraph_mask(&edges, mask);
        let chi = alternating_enumerator(phi, &pattern)?;
        let coefficient = if mask.count_ones() % 2 == 0 { rat(1) } else { rat(-1) };
        let count = Rational::from_integer(count_cphom(coloring, Some(&pattern))?);
        right += &coefficient * &chi * &count;
        terms.push(ExpansionTerm { pattern, coefficient, chi, count });
    }
    Ok(ExpansionReport { left, right, terms })
}

/// `#cpIndSub(Φ,K_k)(G)` against `Σ_H (-1)^{#E(H)} (k!/#Aut(H)) χ̂(Φ,H) · avg #cpHom(H',G)`,
/// the average running over the `k!/#Aut(H)` labeled copies `H'` of `H` on the color set.
pub fn verify_clique_colored_expansion(phi: &GraphParameter, k: usize, coloring: &HColoring) -> Result<ExpansionReport> {
    cap("clique-colored expansion size", k, 4)?;
    pre(coloring.pattern == Graph::complete(k), || "coloring pattern must be K_k".into())?;
    let left = count_cp_indsub(phi, coloring)?;
    let table = class_table(k).expect("class table");
    let mut copies: Vec<Vec<u64>> = vec![Vec::new(); table.reps().len()];
    for mask in 0u64..(1 << crate::graph::slot_count(k)) {
        copies[table.class(mask)].push(mask);
    }
    let mut right = Rational::zero();
    let mut terms = Vec::new();
    for c in enumerate_canonical_graphs(k)? {
        let key: CanonicalKey = c.key;
        let class = table.class(key.mask);
        let chi = alternating_enumerator(phi, &c.graph)?;
        let aut = c.graph.automorphism_count()?;
        let labeled = (1..=k as i64).product::<i64>() / aut as i64;
        assert_eq!(labeled as usize, copies[class].len());
        let mut sum = BigInt::zero();
        for &m in &copies[class] {
            sum += count_cphom(coloring, Some(&Graph::from_slot_mask(k, m)))?;
        }
        let avg = Rational::new(sum, BigInt::from(labeled));
        let sign = if key.edge_count() % 2 == 0 { rat(1) } else { rat(-1) };
        let coefficient = sign * rat(labeled);
        right += &coefficient * &chi * &avg;
        terms.push(ExpansionTerm { pattern: c.graph, coefficient, chi, count: avg });
    }
    Ok(ExpansionReport { left, right, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn indsub_examples() {
        assert_eq!(count_indsub(&GraphParameter::clique_indicator(), 3, &Graph::complete(4)).unwrap(), rat(4));
        assert_eq!(count_indsub(&GraphParameter::connected(), 3, &Graph::complete(3)).unwrap(), rat(1));
        assert_eq!(count_indsub(&GraphParameter::component_count(), 2, &Graph::empty(3)).unwrap(), rat(6));
        assert_eq!(count_indsub(&GraphParameter::connected(), 5, &Graph::complete(3)).unwrap(), rat(0));
        assert!(count_indsub(&GraphParameter::connected(), 0, &Graph::complete(3)).is_err());
    }

    #[test]
    fn census_matches_direct_enumeration() {
        let g = Graph::cycle(7).join(&Graph::path(3));
        for k in 1..=5 {
            let phi = GraphParameter::chromatic_number();
            let mut direct = Rational::zero();
            for a in crate::util::k_subsets(g.n(), k) {
                direct += phi.evaluate(&g.induced_subgraph(&a).unwrap()).unwrap();
            }
            assert_eq!(count_indsub(&phi, k, &g).unwrap(), direct);
        }
    }

    #[test]
    fn cp_indsub_examples() {
        let phi = GraphParameter::edge_count();
        let k3 = Graph::complete(3);
        assert_eq!(count_cp_indsub(&GraphParameter::connected(), &HColoring::identity(&k3)).unwrap(), rat(1));
        let c = HColoring::new(Graph::complete_bipartite(2, 2), Graph::complete(2), vec![0, 0, 1, 1]).unwrap();
        assert_eq!(count_cp_indsub(&phi, &c).unwrap(), rat(4));
        let c = HColoring::new(Graph::complete(2), Graph::empty(2), vec![0, 1]);
        assert!(c.is_err());
        let c = HColoring::new(Graph::empty(2), Graph::empty(2), vec![0, 1]).unwrap();
        assert_eq!(count_cp_indsub(&phi, &c).unwrap(), rat(0));
    }

    #[test]
    fn hom_examples() {
        assert_eq!(count_hom(&Graph::complete(2), &Graph::complete(3)).unwrap(), int(6));
        assert_eq!(count_cphom(&HColoring::identity(&Graph::complete(3)), None).unwrap(), int(1));
        assert_eq!(count_hom(&Graph::complete(3), &Graph::complete_bipartite(2, 2)).unwrap(), int(0));
    }

    #[test]
    fn sub_examples() {
        let k3 = Graph::complete(3);
        let k4 = Graph::complete(4);
        assert_eq!(count_sub(&Graph::complete(2), &k3).unwrap(), int(3));
        assert_eq!(count_sub(&Graph::path(3), &k3).unwrap(), int(3));
        assert_eq!(count_sub(&Graph::star(4), &k4).unwrap(), int(4));
        assert_eq!(count_sub_vc(&Graph::star(4), &k4).unwrap(), int(4));
        assert_eq!(count_sub_vc(&Graph::empty(3), &Graph::empty(5)).unwrap(), int(10));
        assert_eq!(count_sub_vc(&Graph::path(4), &Graph::cycle(5)).unwrap(), int(5));
    }

    #[test]
    fn partitions_are_bell_numbers() {
        let bell: Vec<usize> = (0..=5).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn fpt_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(fpt_indsub(&GraphParameter::edge_count(), 3, &k4, 1).unwrap(), rat(12));
        assert_eq!(fpt_indsub(&GraphParameter::universal_vertex_count(), 3, &Graph::complete(3), 1).unwrap(), rat(3));
        let ham = GraphParameter::hamiltonian_path_count();
        assert!(matches!(fpt_indsub(&ham, 4, &k4, 1), Err(Error::Precondition(_))));
        assert_eq!(fpt_indsub(&ham, 4, &k4, 2).unwrap(), rat(12));
    }

    #[test]
    fn expansion_examples() {
        let c = HColoring::new(Graph::complete_bipartite(2, 3), Graph::complete(2), vec![0, 0, 1, 1, 1]).unwrap();
        let r = verify_cpindsub_hom_expansion(&GraphParameter::edge_count(), &c).unwrap();
        assert!(r.holds());
        assert_eq!(r.left, rat(6));
        let id = HColoring::identity(&Graph::complete(3));
        let r = verify_cpindsub_hom_expansion(&GraphParameter::connected(), &id).unwrap();
        assert!(r.holds());
        assert_eq!(r.left, rat(1));
        let r = verify_clique_colored_expansion(&GraphParameter::clique_indicator(), 3, &id).unwrap();
        assert!(r.holds());
        assert_eq!(r.left, rat(1));
        let zero = GraphParameter::constant(rat(0));
        let r = verify_clique_colored_expansion(&zero, 3, &id).unwrap();
        assert_eq!((r.left.clone(), r.right.clone()), (rat(0), rat(0)));
    }
}
