//! The reduction chain from clique counting to a `#IndSub(Φ,k)` oracle, inhabited-graph lifts,
//! and the concentrated/reducible classifier.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::canon::{enumerate_canonical_graphs, CanonicalKey};
use crate::counting::{count_cp_indsub, count_indsub, HColoring};
use crate::enumerator::{all_alternating_enumerators, alternating_enumerator};
use crate::error::{cap, invariant, pre, Error, Result};
use crate::graph::{slot_count, Graph};
use crate::params::GraphParameter;
use crate::util::{is_prime, k_subsets, mobius_transform, prime_power, rat, residue, zeta_transform, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OracleKind {
    IndSub,
    CpIndSub,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryRecord {
    pub host_size: usize,
    pub result: Rational,
}

/// A logged, deterministic counting oracle for a fixed parameter.
pub struct OracleHandle {
    pub kind: OracleKind,
    pub parameter: GraphParameter,
    pub k: usize,
    log: Mutex<Vec<QueryRecord>>,
    cache: Mutex<HashMap<Graph, Rational>>,
}

impl OracleHandle {
    /// `#IndSub(Φ,k)` oracle.
    pub fn indsub(parameter: GraphParameter, k: usize) -> OracleHandle {
        OracleHandle { kind: OracleKind::IndSub, parameter, k, log: Mutex::default(), cache: Mutex::default() }
    }

    /// `#cpIndSub(Φ,·)` oracle; `k` is the pattern size it accepts.
    pub fn cp_indsub(parameter: GraphParameter, k: usize) -> OracleHandle {
        OracleHandle { kind: OracleKind::CpIndSub, parameter, k, log: Mutex::default(), cache: Mutex::default() }
    }

    pub fn query(&self, g: &Graph) -> Result<Rational> {
        pre(self.kind == OracleKind::IndSub, || "not an IndSub oracle".into())?;
        let cached = self.cache.lock().expect("oracle cache").get(g).cloned();
        let value = match cached {
            Some(v) => v,
            None => {
                let v = count_indsub(&self.parameter, self.k, g)?;
                self.cache.lock().expect("oracle cache").insert(g.clone(), v.clone());
                v
            }
        };
        self.record(g.n(), &value);
        Ok(value)
    }

    pub fn query_cp(&self, coloring: &HColoring) -> Result<Rational> {
        pre(self.kind == OracleKind::CpIndSub, || "not a cp-IndSub oracle".into())?;
        pre(coloring.pattern.n() == self.k, || "pattern size differs from the oracle's".into())?;
        let value = count_cp_indsub(&self.parameter, coloring)?;
        self.record(coloring.host.n(), &value);
        Ok(value)
    }

    fn record(&self, host_size: usize, result: &Rational) {
        self.log.lock().expect("oracle log").push(QueryRecord { host_size, result: result.clone() });
    }

    pub fn log(&self) -> Vec<QueryRecord> {
        self.log.lock().expect("oracle log").clone()
    }

    pub fn call_count(&self) -> usize {
        self.log.lock().expect("oracle log").len()
    }

    pub fn max_host_size(&self) -> usize {
        self.log.lock().expect("oracle log").iter().map(|r| r.host_size).max().unwrap_or(0)
    }
}

/// Left and right sides of some `K_{a,b}` inside `f`, first in lexicographic order.
pub fn find_biclique(f: &Graph, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    for left in k_subsets(f.n(), a) {
        let common: Vec<usize> = (0..f.n()).filter(|&v| left.iter().all(|&u| f.has_edge(u, v))).collect();
        if common.len() >= b {
            return Some((left, common[..b].to_vec()));
        }
    }
    None
}

/// `G'` colored by `F` with `#cpHom(F, G') = #ℓ-cliques(G)`.
pub fn clique_to_cphom_instance(l: usize, f: &Graph, g: &Graph) -> Result<HColoring> {
    pre(l >= 2, || "ℓ must be at least 2".into())?;
    let (left, right) = find_biclique(f, l, l)
        .ok_or_else(|| Error::Precondition(format!("F contains no K_{{{l},{l}}}")))?;
    #[derive(Copy, Clone)]
    enum Role {
        Left(usize),
        Right(usize),
        Other,
    }
    let role: Vec<Role> = (0..f.n())
        .map(|x| {
            if let Some(i) = left.iter().position(|&u| u == x) {
                Role::Left(i)
            } else if let Some(j) = right.iter().position(|&v| v == x) {
                Role::Right(j)
            } else {
                Role::Other
            }
        })
        .collect();
    let n = g.n();
    let mut start = Vec::with_capacity(f.n());
    let mut map = Vec::new();
    for (x, r) in role.iter().enumerate() {
        start.push(map.len());
        let size = if matches!(r, Role::Other) { 1 } else { n };
        map.extend(std::iter::repeat_n(x, size));
    }
    let size_of = |x: usize| if matches!(role[x], Role::Other) { 1 } else { n };
    let mut host = Graph::empty(map.len());
    for (x, y) in f.edges() {
        for a in 0..size_of(x) {
            for b in 0..size_of(y) {
                let keep = match (role[x], role[y]) {
                    (Role::Left(i), Role::Right(j)) => pair_rule(g, i, a, j, b),
                    (Role::Right(j), Role::Left(i)) => pair_rule(g, i, b, j, a),
                    _ => true,
                };
                if keep {
                    host.add_edge(start[x] + a, start[y] + b);
                }
            }
        }
    }
    debug_assert_eq!(host.n(), 2 * l * n + f.n() - 2 * l);
    HColoring::new(host, f.clone(), map)
}

/// Edge rule between `(u_i, w)` and `(v_j, w')`.
fn pair_rule(g: &Graph, i: usize, w: usize, j: usize, w2: usize) -> bool {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => w == w2,
        Less => w < w2 && g.has_edge(w, w2),
        Greater => w > w2 && g.has_edge(w, w2),
    }
}

/// `G_B`: drop every host edge whose color pair is not in `keep`.
pub fn restrict_color_pairs(coloring: &HColoring, keep: &[(usize, usize)]) -> HColoring {
    let mut host = coloring.host.clone();
    for (u, v) in coloring.host.edges() {
        let (a, b) = (coloring.map[u], coloring.map[v]);
        let pair = (a.min(b), a.max(b));
        if !keep.contains(&pair) {
            host.remove_edge(u, v);
        }
    }
    HColoring { host, pattern: coloring.pattern.clone(), map: coloring.map.clone() }
}

/// `G_J`: delete every vertex whose color is in `j_mask`.
pub fn delete_color_classes(coloring: &HColoring, j_mask: u64) -> HColoring {
    let drop: Vec<bool> = coloring.map.iter().map(|&c| j_mask >> c & 1 == 1).collect();
    let host = coloring.host.delete_vertices(&drop);
    let map = coloring.map.iter().copied().filter(|&c| j_mask >> c & 1 == 0).collect();
    HColoring { host, pattern: coloring.pattern.clone(), map }
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub cphom: BigInt,
    /// Oracle answer on `G_B`, indexed by the edge mask `B` over `E(H)` in slot order.
    pub oracle_values: Vec<Rational>,
    /// Möbius transform of the oracle values; the top entry is `(-1)^{#E(H)} χ̂(Φ,H) #cpHom(H,G)`.
    pub terms: Vec<Rational>,
}

/// `#cpHom(H, G)` from a cp-IndSub oracle, given `chi = χ̂(Φ,H)`.
pub fn cphom_from_cpindsub_oracle<F>(coloring: &HColoring, chi: &Rational, mut oracle: F) -> Result<Extraction>
where
    F: FnMut(&HColoring) -> Result<Rational>,
{
    pre(!chi.is_zero(), || "χ̂(Φ,H) vanishes; the coefficient cannot be divided out".into())?;
    let edges = coloring.pattern.edges();
    cap("pattern edge count", edges.len(), 10)?;
    let mut oracle_values = Vec::with_capacity(1 << edges.len());
    for b in 0u64..(1 << edges.len()) {
        let keep: Vec<(usize, usize)> =
            edges.iter().enumerate().filter(|(i, _)| b >> i & 1 == 1).map(|(_, &e)| e).collect();
        oracle_values.push(oracle(&restrict_color_pairs(coloring, &keep))?);
    }
    let mut terms = oracle_values.clone();
    mobius_transform(&mut terms);
    let mut back = terms.clone();
    zeta_transform(&mut back);
    invariant(back == oracle_values, || "zeta of the extracted terms does not reproduce the oracle".into())?;
    let top = terms.last().expect("nonempty").clone();
    let coefficient = if edges.len() % 2 == 0 { chi.clone() } else { -chi.clone() };
    let q = top / coefficient;
    invariant(q.is_integer() && !q.is_negative(), || format!("non-exact division: {q}"))?;
    Ok(Extraction { cphom: q.to_integer(), oracle_values, terms })
}

/// `#cpIndSub(Φ,H)(G) = Σ_{J⊆V(H)} (-1)^{|J|} #IndSub(Φ,k)(G_J)`.
pub fn cpindsub_from_indsub_oracle(coloring: &HColoring, oracle: &OracleHandle) -> Result<Rational> {
    let k = coloring.pattern.n();
    cap("pattern size", k, 6)?;
    pre(oracle.k == k, || format!("oracle counts {}-vertex sets, pattern has {k}", oracle.k))?;
    let mut total = Rational::zero();
    for j in 0u64..(1 << k) {
        let v = oracle.query(&delete_color_classes(coloring, j).host)?;
        if j.count_ones() % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub count: BigInt,
    pub oracle_calls: usize,
    pub max_query_size: usize,
    /// `2ℓ|V(G)| + |V(F)|`.
    pub size_bound: usize,
    pub instance_size: usize,
}

/// `#ℓ-cliques(G)` using only `#IndSub(Φ, |V(F)|)` queries.
pub fn count_cliques_via_indsub(l: usize, phi: &GraphParameter, f: &Graph, g: &Graph) -> Result<PipelineReport> {
    let chi = alternating_enumerator(phi, f)?;
    pre(!chi.is_zero(), || "χ̂(Φ,F) vanishes".into())?;
    let coloring = clique_to_cphom_instance(l, f, g)?;
    let oracle = OracleHandle::indsub(phi.clone(), f.n());
    let ex = cphom_from_cpindsub_oracle(&coloring, &chi, |c| cpindsub_from_indsub_oracle(c, &oracle))?;
    let size_bound = 2 * l * g.n() + f.n();
    let report = PipelineReport {
        count: ex.cphom,
        oracle_calls: oracle.call_count(),
        max_query_size: oracle.max_host_size(),
        size_bound,
        instance_size: coloring.host.n(),
    };
    invariant(report.max_query_size <= size_bound, || {
        format!("query of size {} exceeds {size_bound}", report.max_query_size)
    })?;
    Ok(report)
}

/// First `k`-vertex graph (by size, then key) containing `K_{ℓ,ℓ}` whose enumerator is nonzero,
/// or nonzero mod `p` when `p` is given.
pub fn find_witness_graph(phi: &GraphParameter, l: usize, p: Option<u64>) -> Result<Option<Graph>> {
    for k in 2 * l..=6 {
        for (key, chi) in all_alternating_enumerators(phi, k)? {
            let ok = match p {
                Some(p) => residue(&chi, p).ok_or_else(|| Error::Precondition(format!("χ̂ = {chi} is not integral")))? != 0,
                None => !chi.is_zero(),
            };
            if ok {
                let g = key.graph();
                if g.contains_biclique(l, l) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

/// `C` on `s` vertices and the graphs `H_2..H_s` filling slots `1..s`; slot 0 holds the argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSpec {
    pub c: Graph,
    pub parts: Vec<Graph>,
}

impl LiftSpec {
    pub fn new(c: Graph, parts: Vec<Graph>) -> Result<LiftSpec> {
        if c.n() != parts.len() + 1 {
            return Err(Error::ArityMismatch { expected: c.n(), got: parts.len() + 1 });
        }
        Ok(LiftSpec { c, parts })
    }

    pub fn identity() -> LiftSpec {
        LiftSpec { c: Graph::empty(1), parts: Vec::new() }
    }

    /// `Σ |V(H_i)|`.
    pub fn padding(&self) -> usize {
        self.parts.iter().map(|p| p.n()).sum()
    }

    pub fn apply(&self, g: &Graph) -> Graph {
        let mut all = vec![g.clone()];
        all.extend(self.parts.iter().cloned());
        Graph::inhabited_graph(&self.c, &all).expect("arity checked at construction")
    }
}

/// `G ↦ Φ(C[G, H_2..H_s])`.
pub fn lift_parameter(phi: &GraphParameter, spec: &LiftSpec) -> Result<GraphParameter> {
    LiftSpec::new(spec.c.clone(), spec.parts.clone())?;
    let inner = phi.clone();
    let s = spec.clone();
    let name = format!(
        "lift({}; C={}; parts=[{}])",
        phi.name(),
        crate::canon::to_graph6(&spec.c),
        spec.parts.iter().map(crate::canon::to_graph6).collect::<Vec<_>>().join(",")
    );
    Ok(GraphParameter::new(name, move |g| inner.evaluate(&s.apply(g))))
}

/// `(H̃, G̃, c̃)`: part vertices become singleton colors joined to everything in `H̃`.
pub fn lift_instance(coloring: &HColoring, spec: &LiftSpec) -> Result<HColoring> {
    LiftSpec::new(spec.c.clone(), spec.parts.clone())?;
    let h = &coloring.pattern;
    let pad = spec.padding();
    let mut h_tilde = h.disjoint_union(&Graph::empty(pad));
    for x in h.n()..h.n() + pad {
        for y in 0..h.n() + pad {
            if x != y {
                h_tilde.add_edge(x.min(y), x.max(y));
            }
        }
    }
    let g_tilde = spec.apply(&coloring.host);
    let mut map = coloring.map.clone();
    map.extend(h.n()..h.n() + pad);
    HColoring::new(g_tilde, h_tilde, map)
}

/// Both sides of the lift identity.
pub fn lift_identity(phi: &GraphParameter, coloring: &HColoring, spec: &LiftSpec) -> Result<(Rational, Rational)> {
    let lifted = lift_parameter(phi, spec)?;
    let left = count_cp_indsub(&lifted, coloring)?;
    let right = count_cp_indsub(phi, &lift_instance(coloring, spec)?)?;
    Ok((left, right))
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// First spec (by `s`, then labeled `C`, then parts) whose lift is nontrivial on `x`-vertex graphs.
fn search_lift(phi: &GraphParameter, x: usize, padding: usize) -> Result<Option<LiftSpec>> {
    let targets = enumerate_canonical_graphs(x)?;
    let min_s = if padding == 0 { 1 } else { 2 };
    for s in min_s..=padding + 1 {
        for c_mask in 0u64..(1 << slot_count(s)) {
            let c = Graph::from_slot_mask(s, c_mask);
            for sizes in compositions(padding, s - 1) {
                let pools: Vec<Vec<Graph>> = sizes
                    .iter()
                    .map(|&n| Ok(enumerate_canonical_graphs(n)?.into_iter().map(|g| g.graph).collect()))
                    .collect::<Result<_>>()?;
                let mut pick = vec![0usize; pools.len()];
                loop {
                    let parts: Vec<Graph> = pick.iter().zip(&pools).map(|(&i, p)| p[i].clone()).collect();
                    let spec = LiftSpec { c: c.clone(), parts };
                    let first = phi.evaluate(&spec.apply(&targets[0].graph))?;
                    for t in &targets[1..] {
                        if phi.evaluate(&spec.apply(&t.graph))? != first {
                            return Ok(Some(spec));
                        }
                    }
                    let mut i = 0;
                    while i < pick.len() {
                        pick[i] += 1;
                        if pick[i] < pools[i].len() {
                            break;
                        }
                        pick[i] = 0;
                        i += 1;
                    }
                    if i == pick.len() {
                        break;
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum Classification {
    /// A `k`-vertex `H ⊇ K_{p^t,p^t}` with `χ̂(Φ,H) ≢ 0 mod p`.
    Concentrated { witness: CanonicalKey, residue: u64 },
    /// A lift nontrivial on `p^{t+1}`-vertex graphs, padded up to `k` vertices.
    Reducible { spec: LiftSpec },
    Trivial,
}

pub fn classify_concentrated_reducible(phi: &GraphParameter, k: usize, p: usize, t: u32) -> Result<Classification> {
    cap("classification size", k, 6)?;
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let (small, large) = (p.pow(t), p.pow(t + 1));
    pre(small + large <= k, || format!("p^t + p^(t+1) = {} exceeds k = {k}", small + large))?;
    let values = phi.values_on(k)?;
    for (key, v) in &values {
        pre(v.is_integer() && *v >= rat(0) && *v < rat(p as i64), || {
            format!("Φ({key}) = {v} is outside 0..{p}")
        })?;
    }
    if values.iter().all(|(_, v)| *v == values[0].1) {
        return Ok(Classification::Trivial);
    }
    for (key, chi) in all_alternating_enumerators(phi, k)? {
        let r = residue(&chi, p as u64).expect("integral values give integral enumerators");
        if r != 0 && key.graph().contains_biclique(small, small) {
            return Ok(Classification::Concentrated { witness: key, residue: r });
        }
    }
    if let Some(spec) = search_lift(phi, large, k - large)? {
        return Ok(Classification::Reducible { spec });
    }
    Err(Error::Invariant(format!(
        "{} is nontrivial on {k} yet neither concentrated nor reducible",
        phi.name()
    )))
}

/// A spec whose lift is nontrivial on `q(k)` vertices, padded to `k`.
pub fn scatter_membership(phi: &GraphParameter, q: &dyn Fn(usize) -> usize, k: usize) -> Result<Option<LiftSpec>> {
    cap("scatter size", k, 6)?;
    let x = q(k);
    pre(prime_power(x as u64).is_some(), || format!("q({k}) = {x} is not a prime power"))?;
    cap("q(k)", x, 4)?;
    if x > k {
        return Ok(None);
    }
    search_lift(phi, x, k - x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_size_and_count() {
        let f = Graph::complete_bipartite(2, 2);
        let c = clique_to_cphom_instance(2, &f, &Graph::complete(3)).unwrap();
        assert_eq!(c.host.n(), 12);
        assert_eq!(crate::counting::count_cphom(&c, None).unwrap(), BigInt::from(3));
        let c = clique_to_cphom_instance(2, &f, &Graph::empty(3)).unwrap();
        assert_eq!(crate::counting::count_cphom(&c, None).unwrap(), BigInt::from(0));
        assert!(clique_to_cphom_instance(3, &f, &Graph::complete(3)).is_err());
        assert!(clique_to_cphom_instance(1, &f, &Graph::complete(3)).is_err());
    }

    #[test]
    fn extraction_examples() {
        let phi = GraphParameter::edge_count();
        let coloring = HColoring::new(Graph::complete_bipartite(2, 3), Graph::complete(2), vec![0, 0, 1, 1, 1]).unwrap();
        let oracle = OracleHandle::cp_indsub(phi.clone(), 2);
        let ex = cphom_from_cpindsub_oracle(&coloring, &rat(-1), |c| oracle.query_cp(c)).unwrap();
        assert_eq!(ex.cphom, BigInt::from(6));
        assert_eq!(oracle.call_count(), 2);

        let phi = GraphParameter::connected();
        let id = HColoring::identity(&Graph::complete(3));
        let oracle = OracleHandle::cp_indsub(phi.clone(), 3);
        let ex = cphom_from_cpindsub_oracle(&id, &rat(2), |c| oracle.query_cp(c)).unwrap();
        assert_eq!(ex.cphom, BigInt::from(1));
        assert_eq!(oracle.call_count(), 8);

        let chi = alternating_enumerator(&GraphParameter::edge_count(), &Graph::path(3)).unwrap();
        assert!(cphom_from_cpindsub_oracle(&HColoring::identity(&Graph::path(3)), &chi, |_| Ok(rat(0))).is_err());
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let phi = GraphParameter::edge_count();
        let c = HColoring::new(Graph::complete_bipartite(2, 2), Graph::complete(2), vec![0, 0, 1, 1]).unwrap();
        let oracle = OracleHandle::indsub(phi.clone(), 2);
        assert_eq!(cpindsub_from_indsub_oracle(&c, &oracle).unwrap(), rat(4));
        assert_eq!(oracle.call_count(), 4);
        let single = HColoring::new(Graph::empty(3), Graph::empty(1), vec![0, 0, 0]).unwrap();
        let oracle = OracleHandle::indsub(GraphParameter::component_count(), 1);
        assert_eq!(cpindsub_from_indsub_oracle(&single, &oracle).unwrap(), rat(3));
        let gap = HColoring::new(Graph::empty(2), Graph::empty(3), vec![0, 0]).unwrap();
        let oracle = OracleHandle::indsub(GraphParameter::component_count(), 3);
        assert_eq!(cpindsub_from_indsub_oracle(&gap, &oracle).unwrap(), rat(0));
    }

    #[test]
    fn pipeline_examples() {
        let phi = GraphParameter::disconnected();
        let f = Graph::complete_bipartite(2, 2);
        for (g, want) in [(Graph::complete(4), 6), (Graph::cycle(5), 5), (Graph::empty(4), 0)] {
            let r = count_cliques_via_indsub(2, &phi, &f, &g).unwrap();
            assert_eq!(r.count, BigInt::from(want));
            assert!(r.max_query_size <= r.size_bound);
        }
    }

    #[test]
    fn lift_examples() {
        let k1 = Graph::complete(1);
        let spec = LiftSpec::new(Graph::complete(2), vec![k1.clone()]).unwrap();
        let lifted = lift_parameter(&GraphParameter::clique_indicator(), &spec).unwrap();
        assert_eq!(lifted.evaluate(&Graph::complete(3)).unwrap(), rat(1));
        assert_eq!(lifted.evaluate(&Graph::path(3)).unwrap(), rat(0));
        let spec2 = LiftSpec::new(Graph::empty(2), vec![k1.clone()]).unwrap();
        let lifted = lift_parameter(&GraphParameter::component_count(), &spec2).unwrap();
        assert_eq!(lifted.evaluate(&Graph::path(3)).unwrap(), rat(2));
        let lifted = lift_parameter(&GraphParameter::connected(), &spec).unwrap();
        assert_eq!(lifted.evaluate(&Graph::empty(4)).unwrap(), rat(1));
        assert!(LiftSpec::new(Graph::complete(3), vec![k1.clone()]).is_err());

        let c = HColoring::new(Graph::complete_bipartite(2, 2), Graph::complete(2), vec![0, 0, 1, 1]).unwrap();
        let lifted = lift_instance(&c, &spec).unwrap();
        assert_eq!((lifted.pattern.n(), lifted.host.n()), (3, 5));
        let (a, b) = lift_identity(&GraphParameter::connected(), &c, &spec).unwrap();
        assert_eq!(a, b);
        let same = lift_instance(&c, &LiftSpec::identity()).unwrap();
        assert_eq!(same, c);
        let k2 = HColoring::identity(&Graph::complete(2));
        let (a, b) = lift_identity(&GraphParameter::component_count(), &k2, &spec2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scatter_examples() {
        let q = |_: usize| 2usize;
        let spec = scatter_membership(&GraphParameter::clique_indicator(), &q, 3).unwrap().unwrap();
        assert_eq!(spec.c, Graph::complete(2));
        assert_eq!(spec.parts, vec![Graph::complete(1)]);
        assert!(scatter_membership(&GraphParameter::constant(rat(1)), &q, 3).unwrap().is_none());
        assert!(scatter_membership(&GraphParameter::connected(), &q, 3).unwrap().is_none());
        assert!(scatter_membership(&GraphParameter::connected(), &|_| 6, 6).is_err());
    }

    #[test]
    fn classify_examples() {
        let r = classify_concentrated_reducible(&GraphParameter::disconnected(), 6, 2, 1).unwrap();
        assert!(!matches!(r, Classification::Trivial));
        let r = classify_concentrated_reducible(&GraphParameter::independent_set_indicator(), 6, 2, 1).unwrap();
        assert!(!matches!(r, Classification::Trivial));
        let r = classify_concentrated_reducible(&GraphParameter::constant(rat(1)), 6, 2, 1).unwrap();
        assert!(matches!(r, Classification::Trivial));
        assert!(classify_concentrated_reducible(&GraphParameter::disconnected(), 5, 2, 1).is_err());
        // parity enumerators are ±2^(#E-1), even on every host containing K_{2,2}
        match classify_concentrated_reducible(&GraphParameter::edge_parity(), 6, 2, 1).unwrap() {
            Classification::Reducible { spec } => {
                assert_eq!(spec.padding(), 2);
                let lifted = lift_parameter(&GraphParameter::edge_parity(), &spec).unwrap();
                assert!(crate::params::is_nontrivial_on(&lifted, 4).unwrap());
            }
            other => panic!("expected a reducible outcome, got {other:?}"),
        }
    }
}
