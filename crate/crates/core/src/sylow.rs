//! Permutation groups acting on edges, fixed-point lattices, and the Sylow lattices of `K_{p^m}`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{cap, invariant, pre, Error, Result};
use crate::graph::{positive_half, Graph};
use crate::params::GraphParameter;
use crate::util::{is_prime, residue};

const CLOSURE_CAP: usize = 1_000_000;
pub const ORBIT_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<PermutationGroup> {
        for g in &generators {
            let mut seen = vec![false; degree];
            pre(g.len() == degree, || format!("generator of length {} on {degree} points", g.len()))?;
            for &x in g {
                pre(x < degree && !seen[x], || format!("{g:?} is not a bijection"))?;
                seen[x] = true;
            }
        }
        Ok(PermutationGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> PermutationGroup {
        PermutationGroup { degree, generators: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// All elements by breadth-first closure under the generators.
    pub fn elements(&self) -> Result<Vec<Vec<usize>>> {
        let id: Vec<usize> = (0..self.degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if seen.insert(y.clone()) {
                    cap("group order", seen.len(), CLOSURE_CAP)?;
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        Ok(out)
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.elements()?.len() as u64)
    }

    pub fn is_p_group(&self, p: u64) -> Result<bool> {
        let mut o = self.order()?;
        while o % p == 0 {
            o /= p;
        }
        Ok(o == 1)
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for (x, &y) in g.iter().enumerate() {
                uf.union(x, y);
            }
        }
        (0..self.degree).all(|x| uf.find(x) == uf.find(0))
    }

    /// Direct product acting on the disjoint union of the point sets, blocks in order.
    pub fn product(groups: &[PermutationGroup]) -> PermutationGroup {
        let degree = groups.iter().map(|g| g.degree).sum();
        let mut generators = Vec::new();
        let mut offset = 0;
        for g in groups {
            for gen in &g.generators {
                let mut full: Vec<usize> = (0..degree).collect();
                for (x, &y) in gen.iter().enumerate() {
                    full[offset + x] = offset + y;
                }
                generators.push(full);
            }
            offset += g.degree;
        }
        PermutationGroup { degree, generators }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Edge orbits of a group acting on a host; fixed points are orbit-index bitsets.
#[derive(Clone, Debug)]
pub struct FixedPointLattice {
    pub host: Graph,
    pub group: PermutationGroup,
    /// Orbits ordered by their first edge in slot order.
    pub orbits: Vec<Vec<(usize, usize)>>,
}

impl FixedPointLattice {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Every union of orbits, as bitsets in increasing order.
    pub fn fixed_points(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.orbits.len())
    }

    pub fn fixed_point_count(&self) -> usize {
        1 << self.orbits.len()
    }

    pub fn graph(&self, fp: u32) -> Graph {
        let mut g = Graph::empty(self.host.n());
        for (i, orbit) in self.orbits.iter().enumerate() {
            if fp >> i & 1 == 1 {
                for &(u, v) in orbit {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Number of orbits composing the fixed point.
    pub fn level(&self, fp: u32) -> usize {
        fp.count_ones() as usize
    }

    pub fn edge_count(&self, fp: u32) -> usize {
        (0..self.orbits.len()).filter(|&i| fp >> i & 1 == 1).map(|i| self.orbits[i].len()).sum()
    }

    /// Orbit bitset of an edge subgraph of the host, if it is a fixed point.
    pub fn locate(&self, g: &Graph) -> Option<u32> {
        let mut fp = 0u32;
        for (i, orbit) in self.orbits.iter().enumerate() {
            let hits = orbit.iter().filter(|&&(u, v)| g.has_edge(u, v)).count();
            if hits == orbit.len() {
                fp |= 1 << i;
            } else if hits != 0 {
                return None;
            }
        }
        (g.n() == self.host.n() && g.edge_count() == self.edge_count(fp)).then_some(fp)
    }

    /// Proper sub-points: all strict subsets of the orbit set.
    pub fn proper_sub_points(&self, fp: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut sub = fp;
        while sub != 0 {
            sub = (sub - 1) & fp;
            out.push(sub);
        }
        out
    }
}

pub fn orbit_partition(group: &PermutationGroup, host: &Graph) -> Result<FixedPointLattice> {
    pre(group.degree() == host.n(), || {
        format!("group of degree {} on a host with {} vertices", group.degree(), host.n())
    })?;
    let edges = host.edges();
    cap("edge count for orbit partition", edges.len(), 64)?;
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf = UnionFind::new(edges.len());
    for g in group.generators() {
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (g[u].min(g[v]), g[u].max(g[v]));
            let j = *index.get(&(a, b)).ok_or_else(|| {
                Error::Precondition(format!("generator {g:?} is not an automorphism of the host"))
            })?;
            uf.union(i, j);
        }
    }
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut root_to_orbit = HashMap::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = uf.find(i);
        let o = *root_to_orbit.entry(r).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[o].push(e);
    }
    cap("orbit count", orbits.len(), ORBIT_CAP)?;
    Ok(FixedPointLattice { host: host.clone(), group: group.clone(), orbits })
}

/// Mixed-radix index of a tuple in `[0,p)^m`, first coordinate most significant.
fn tuple_index(p: usize, x: &[usize]) -> usize {
    x.iter().fold(0, |acc, &d| acc * p + d)
}

fn tuple_of(p: usize, m: usize, mut i: usize) -> Vec<usize> {
    let mut x = vec![0; m];
    for j in (0..m).rev() {
        x[j] = i % p;
        i /= p;
    }
    x
}

fn check_sylow_args(p: usize, m: usize) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    pre(m >= 1, || "exponent must be at least 1".into())?;
    cap("p^m", p.pow(m as u32), 9)
}

/// Generated by the maps adding 1 to coordinate `j+1` exactly when the prefix equals a fixed value.
pub fn sylow_generators(p: usize, m: usize) -> Result<PermutationGroup> {
    check_sylow_args(p, m)?;
    let n = p.pow(m as u32);
    let mut gens = Vec::new();
    for j in 0..m {
        for a in 0..p.pow(j as u32) {
            let prefix = tuple_of(p, j, a);
            let perm: Vec<usize> = (0..n)
                .map(|i| {
                    let mut x = tuple_of(p, m, i);
                    if x[..j] == prefix[..] {
                        x[j] = (x[j] + 1) % p;
                    }
                    tuple_index(p, &x)
                })
                .collect();
            gens.push(perm);
        }
    }
    let group = PermutationGroup::new(n, gens)?;
    let expected = (p as u64).pow(((n - 1) / (p - 1)) as u32);
    let got = group.order()?;
    invariant(got == expected, || format!("Syl_{{{p}^{m}}} has order {got}, expected {expected}"))?;
    Ok(group)
}

/// A Sylow `p`-subgroup of `S_n`: one `Syl_{p^i}` block per unit of the `i`-th base-`p` digit
/// of `n`, largest blocks first, remaining points fixed.
pub fn symmetric_sylow(p: usize, n: usize) -> Result<PermutationGroup> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    let mut blocks = Vec::new();
    for (i, &d) in digits.iter().enumerate().rev() {
        for _ in 0..d {
            blocks.push(if i == 0 { PermutationGroup::trivial(1) } else { sylow_generators(p, i)? });
        }
    }
    Ok(PermutationGroup::product(&blocks))
}

/// A tuple `(A_1..A_m)` of subsets of `F_p^+`; bit `a-1` of `sets[i]` marks `a ∈ A_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SylowFixedPoint {
    pub p: usize,
    pub m: usize,
    pub sets: Vec<u32>,
}

impl SylowFixedPoint {
    pub fn new(p: usize, sets: Vec<Vec<usize>>) -> Result<SylowFixedPoint> {
        check_sylow_args(p, sets.len())?;
        let half = positive_half(p);
        let mut masks = Vec::new();
        for a in &sets {
            let mut mask = 0u32;
            for &x in a {
                pre(x >= 1 && x <= half, || format!("{x} is outside F_{p}^+"))?;
                mask |= 1 << (x - 1);
            }
            masks.push(mask);
        }
        Ok(SylowFixedPoint { p, m: sets.len(), sets: masks })
    }

    pub fn set(&self, i: usize) -> Vec<usize> {
        (0..32).filter(|b| self.sets[i] >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// `∆_p{A_1} ∘ … ∘ ∆_p{A_m}`.
    pub fn graph(&self) -> Graph {
        let factors: Vec<Graph> = (0..self.m)
            .map(|i| Graph::difference_graph(self.p, &self.set(i)).expect("validated tuple"))
            .collect();
        Graph::lexicographic_product(&factors).expect("nonempty factors")
    }

    pub fn level(&self) -> usize {
        self.sets.iter().map(|s| s.count_ones() as usize).sum()
    }

    /// Number of leading empty sets; `m` for the all-empty tuple.
    pub fn empty_prefix(&self) -> usize {
        self.sets.iter().position(|&s| s != 0).unwrap_or(self.m)
    }

    pub fn is_sub_point_of(&self, other: &SylowFixedPoint) -> bool {
        self.sets.iter().zip(&other.sets).all(|(a, b)| a & !b == 0)
    }
}

/// A witness that a prefix-`j` point embeds as an edge subgraph of a prefix-0 point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixEmbedding {
    /// `map[v]` is the image of vertex `v`.
    pub map: Vec<usize>,
    /// `(A_{j+1}, …, A_m, ∅, …, ∅)`.
    pub target: SylowFixedPoint,
}

/// Rotates coordinates `(a_1..a_m) ↦ (a_{j+1}..a_m, a_1..a_j)`, i.e. `m-j` single right rotations.
pub fn prefix_shift_embedding(f: &SylowFixedPoint) -> Result<PrefixEmbedding> {
    let j = f.empty_prefix();
    pre(j >= 1, || "the point already has empty-prefix 0".into())?;
    let (p, m) = (f.p, f.m);
    let mut sets = f.sets[j.min(m)..].to_vec();
    sets.resize(m, 0);
    let target = SylowFixedPoint { p, m, sets };
    let n = p.pow(m as u32);
    let map: Vec<usize> = (0..n)
        .map(|i| {
            let x = tuple_of(p, m, i);
            let mut y = x[j.min(m)..].to_vec();
            y.extend_from_slice(&x[..j.min(m)]);
            tuple_index(p, &y)
        })
        .collect();
    let src = f.graph();
    let dst = target.graph();
    for (u, v) in src.edges() {
        invariant(dst.has_edge(map[u], map[v]), || {
            format!("rotation image of {{{u},{v}}} is not an edge of the target")
        })?;
    }
    Ok(PrefixEmbedding { map, target })
}

/// The Sylow lattice of `K_{p^m}` with each tuple matched to its orbit set.
#[derive(Clone, Debug)]
pub struct SylowLattice {
    pub p: usize,
    pub m: usize,
    pub lattice: FixedPointLattice,
    pub points: Vec<(SylowFixedPoint, u32)>,
}

impl SylowLattice {
    pub fn build(p: usize, m: usize) -> Result<SylowLattice> {
        let group = sylow_generators(p, m)?;
        let host = Graph::complete(p.pow(m as u32));
        let lattice = orbit_partition(&group, &host)?;
        let half = positive_half(p);
        let total = 1usize << (m * half);
        let mut points = Vec::with_capacity(total);
        for code in 0..total {
            // first coordinate in the most significant bits so codes sort like tuples
            let sets: Vec<u32> = (0..m)
                .map(|i| ((code >> ((m - 1 - i) * half)) & ((1 << half) - 1)) as u32)
                .collect();
            let point = SylowFixedPoint { p, m, sets };
            let g = point.graph();
            let fp = lattice.locate(&g).ok_or_else(|| {
                Error::Invariant(format!("{:?} is not a union of Sylow orbits", point.sets))
            })?;
            invariant(lattice.level(fp) == point.level(), || {
                format!("orbit level {} differs from tuple level {}", lattice.level(fp), point.level())
            })?;
            points.push((point, fp));
        }
        let distinct: HashSet<u32> = points.iter().map(|(_, fp)| *fp).collect();
        invariant(distinct.len() == lattice.fixed_point_count() && distinct.len() == total, || {
            format!(
                "{} products against {} orbit unions",
                distinct.len(),
                lattice.fixed_point_count()
            )
        })?;
        Ok(SylowLattice { p, m, lattice, points })
    }
}

/// All `2^{m|F_p^+|}` Sylow fixed points of `K_{p^m}`, checked against the orbit computation.
pub fn sylow_lattice(p: usize, m: usize) -> Result<Vec<SylowFixedPoint>> {
    Ok(SylowLattice::build(p, m)?.points.into_iter().map(|(pt, _)| pt).collect())
}

/// Fixed points of a product of transitive groups in the join of the factor hosts.
pub fn product_lattice(factors: &[FixedPointLattice]) -> Result<FixedPointLattice> {
    pre(!factors.is_empty(), || "no factors".into())?;
    for (i, f) in factors.iter().enumerate() {
        pre(f.group.is_transitive(), || format!("factor {i} group is not transitive"))?;
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let hosts: Vec<Graph> = factors.iter().map(|f| f.host.clone()).collect();
    let m = factors.len();
    let host = Graph::inhabited_graph(&Graph::complete(m), &hosts)?;
    let groups: Vec<PermutationGroup> = factors.iter().map(|f| f.group.clone()).collect();
    let lattice = orbit_partition(&PermutationGroup::product(&groups), &host)?;

    // constructive side: C[A^1..A^m] for labeled C and factor fixed points
    let pairs = crate::graph::slot_pairs(m);
    let mut built: HashMap<u32, usize> = HashMap::new();
    let mut choice = vec![0u32; m];
    for c_mask in 0..(1u64 << pairs.len()) {
        let c = Graph::from_slot_mask(m, c_mask);
        loop {
            let parts: Vec<Graph> = (0..m).map(|i| factors[i].graph(choice[i])).collect();
            let g = Graph::inhabited_graph(&c, &parts)?;
            let fp = lattice.locate(&g).ok_or_else(|| {
                Error::Invariant("an inhabited graph is not a fixed point of the product group".into())
            })?;
            let level = c.edge_count() + (0..m).map(|i| factors[i].level(choice[i])).sum::<usize>();
            invariant(lattice.level(fp) == level, || {
                format!("level {} of C[A..] differs from #E(C)+Σℓ = {level}", lattice.level(fp))
            })?;
            built.insert(fp, level);
            // odometer over the factor fixed points
            let mut i = 0;
            while i < m {
                choice[i] += 1;
                if (choice[i] as usize) < factors[i].fixed_point_count() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
    }
    invariant(built.len() == lattice.fixed_point_count(), || {
        format!("{} inhabited graphs against {} fixed points", built.len(), lattice.fixed_point_count())
    })?;
    Ok(lattice)
}

/// Result of the prime-power nonvanishing search.
#[derive(Clone, Debug)]
pub struct NonvanishingPoint {
    pub point: SylowFixedPoint,
    pub graph: Graph,
    pub level: usize,
    /// `χ̂(Φ, H) mod p`, nonzero.
    pub residue: u64,
}

pub fn find_nonvanishing_fixed_point(phi: &GraphParameter, p: usize, t: usize) -> Result<Option<NonvanishingPoint>> {
    let syl = SylowLattice::build(p, t)?;
    let n = p.pow(t as u32);
    if let Some(c) = phi.codomain_bound(n) {
        pre((c as usize) < p, || format!("codomain bound {c} is not below p = {p}"))?;
    }
    let mut values = Vec::with_capacity(syl.points.len());
    for (pt, _) in &syl.points {
        let v = phi.evaluate(&pt.graph())?;
        let r = residue(&v, p as u64)
            .filter(|_| v >= crate::util::rat(0) && v < crate::util::rat(p as i64))
            .ok_or_else(|| Error::Precondition(format!("value {v} is outside 0..{p}")))?;
        values.push(r);
    }
    let z = values[0];
    debug_assert_eq!(syl.points[0].0.level(), 0);
    let Some(level) = syl
        .points
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v < z)
        .map(|((pt, _), _)| pt.level())
        .min()
    else {
        return Ok(None);
    };
    let (point, fp) = syl
        .points
        .iter()
        .zip(&values)
        .filter(|((pt, _), &v)| pt.level() == level && pt.empty_prefix() == 0 && v < z)
        .map(|(pf, _)| pf)
        .min_by(|a, b| a.0.cmp(&b.0))
        .ok_or_else(|| {
            Error::Precondition(format!(
                "no prefix-0 point drops below Φ(IS) at level {level}; Φ is not edge-monotone"
            ))
        })?;
    let graph = point.graph();
    if t >= 2 {
        let side = p.pow(t as u32 - 1);
        invariant(graph.contains_biclique(side, side), || format!("{:?} lacks K_{{{side},{side}}}", point.sets))?;
    } else {
        invariant(graph.edge_count() > 0, || "level-drop point has no edges".into())?;
    }
    invariant(crate::enumerator::check_nonvanishing_criterion(&syl.lattice, *fp, phi, p as u64)?, || {
        format!("criterion fails at {:?}", point.sets)
    })?;
    let sub = orbit_partition(&syl.lattice.group, &graph)?;
    let residue = crate::enumerator::alternating_enumerator_mod_p(phi, &graph, &sub, p as u64)?;
    invariant(residue != 0, || "selected point has a vanishing enumerator".into())?;
    Ok(Some(NonvanishingPoint { point: point.clone(), graph, level, residue }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_orders() {
        assert_eq!(sylow_generators(2, 1).unwrap().order().unwrap(), 2);
        assert_eq!(sylow_generators(3, 1).unwrap().order().unwrap(), 3);
        assert_eq!(sylow_generators(2, 2).unwrap().order().unwrap(), 8);
        assert_eq!(sylow_generators(3, 2).unwrap().order().unwrap(), 81);
        assert_eq!(sylow_generators(2, 3).unwrap().order().unwrap(), 128);
        assert!(sylow_generators(2, 4).is_err());
        assert!(sylow_generators(4, 1).is_err());
    }

    #[test]
    fn orbit_examples() {
        let k3 = Graph::complete(3);
        let l = orbit_partition(&sylow_generators(3, 1).unwrap(), &k3).unwrap();
        assert_eq!((l.orbit_count(), l.fixed_point_count()), (1, 2));
        let l = orbit_partition(&PermutationGroup::trivial(3), &k3).unwrap();
        assert_eq!((l.orbit_count(), l.fixed_point_count()), (3, 8));
        let l = orbit_partition(&sylow_generators(2, 2).unwrap(), &Graph::complete(4)).unwrap();
        assert_eq!((l.orbit_count(), l.fixed_point_count()), (2, 4));
        let swap = PermutationGroup::new(3, vec![vec![1, 0, 2]]).unwrap();
        assert!(orbit_partition(&swap, &Graph::path(3)).is_err());
    }

    #[test]
    fn lattice_sizes() {
        for (p, m, count) in [(2, 1, 2), (3, 1, 2), (2, 2, 4), (5, 1, 4), (2, 3, 8), (3, 2, 4)] {
            assert_eq!(sylow_lattice(p, m).unwrap().len(), count, "({p},{m})");
        }
    }

    #[test]
    fn named_points() {
        let pts = sylow_lattice(2, 2).unwrap();
        let graphs: Vec<Graph> = pts.iter().map(|p| p.graph()).collect();
        assert_eq!(graphs[0], Graph::empty(4));
        assert_eq!(graphs[1].edges(), vec![(0, 1), (2, 3)]);
        assert!(graphs[2].is_isomorphic(&Graph::complete_bipartite(2, 2)));
        assert_eq!(graphs[3], Graph::complete(4));
        let k5 = SylowFixedPoint::new(5, vec![vec![1, 2]]).unwrap();
        assert_eq!(k5.graph(), Graph::complete(5));
        assert_eq!(k5.level(), 2);
        let k4 = SylowFixedPoint::new(2, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(k4.level(), 2);
    }

    #[test]
    fn prefixes() {
        let a = SylowFixedPoint::new(2, vec![vec![1], vec![]]).unwrap();
        let b = SylowFixedPoint::new(2, vec![vec![], vec![1]]).unwrap();
        let c = SylowFixedPoint::new(2, vec![vec![], vec![]]).unwrap();
        assert_eq!((a.empty_prefix(), b.empty_prefix(), c.empty_prefix()), (0, 1, 2));
        let e = prefix_shift_embedding(&b).unwrap();
        assert_eq!(e.target, a);
        assert!(prefix_shift_embedding(&a).is_err());
        let d = SylowFixedPoint::new(3, vec![vec![], vec![1]]).unwrap();
        let e = prefix_shift_embedding(&d).unwrap();
        assert_eq!(e.target, SylowFixedPoint::new(3, vec![vec![1], vec![]]).unwrap());
    }

    #[test]
    fn product_of_two_edges() {
        let k2 = orbit_partition(&sylow_generators(2, 1).unwrap(), &Graph::complete(2)).unwrap();
        let prod = product_lattice(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(prod.host, Graph::complete(4));
        assert_eq!(prod.fixed_point_count(), 8);
        assert_eq!(product_lattice(std::slice::from_ref(&k2)).unwrap().fixed_point_count(), 2);
        let not_transitive = orbit_partition(&PermutationGroup::trivial(2), &Graph::complete(2)).unwrap();
        assert!(product_lattice(&[k2, not_transitive]).is_err());
    }

    #[test]
    fn nonvanishing_search_examples() {
        let r = find_nonvanishing_fixed_point(&GraphParameter::independent_set_indicator(), 2, 1)
            .unwrap()
            .unwrap();
        assert_eq!(r.graph, Graph::complete(2));
        assert_eq!(r.residue, 1);
        let r = find_nonvanishing_fixed_point(&GraphParameter::disconnected(), 2, 2).unwrap().unwrap();
        assert!(r.graph.is_isomorphic(&Graph::complete_bipartite(2, 2)));
        assert_eq!(r.level, 1);
        let constant = GraphParameter::constant(crate::util::rat(1));
        assert!(find_nonvanishing_fixed_point(&constant, 2, 2).unwrap().is_none());
    }
}
