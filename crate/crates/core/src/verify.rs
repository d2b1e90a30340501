//! Seeded property suites; each property reports pass/fail and its first counterexample.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::{canonical_key, enumerate_canonical_graphs};
use crate::counting::{
    count_cp_indsub, count_cphom, count_hom, count_indsub, count_sub, count_sub_vc, fpt_indsub,
    verify_cpindsub_hom_expansion, HColoring,
};
use crate::enumerator::{alternating_enumerator, alternating_enumerator_mod_p, subbasis_coefficients};
use crate::error::{Error, Result};
use crate::graph::{positive_half, slot_count, Graph};
use crate::modular::{
    count_valid_proper_colorings, mod_p_clique_via_indsub, mod_p_oracle, numclique_from_modclique,
    parsimony_check, sat_to_coloring_graph, Cnf3,
};
use crate::params::{indicator_decomposition, is_edge_monotone_on, is_nontrivial_on, normalize_codomain, GraphParameter};
use crate::reductions::{
    classify_concentrated_reducible, clique_to_cphom_instance, count_cliques_via_indsub, cphom_from_cpindsub_oracle,
    find_witness_graph, lift_identity, Classification, LiftSpec, OracleHandle,
};
use crate::sylow::{orbit_partition, symmetric_sylow, FixedPointLattice, PermutationGroup, SylowLattice};
use crate::util::{all_permutations, random_graph, random_permutation, rat, residue, rng, Rational};

pub const SUITES: [&str; 11] = [
    "graph-core",
    "parameters",
    "chi-comp",
    "sylow",
    "subbasis",
    "counting",
    "pipeline",
    "lift",
    "dichotomy",
    "modular",
    "parsimony",
];

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

struct Prop {
    checked: u64,
    counterexample: Option<Value>,
}

impl Prop {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }
}

fn property(name: &str, body: impl FnOnce(&mut Prop) -> Result<()>) -> PropertyResult {
    let mut p = Prop { checked: 0, counterexample: None };
    if let Err(e) = body(&mut p) {
        p.counterexample.get_or_insert_with(|| json!({ "error": e.to_string() }));
    }
    PropertyResult { name: name.to_string(), passed: p.counterexample.is_none(), checked: p.checked, counterexample: p.counterexample }
}

fn g6(g: &Graph) -> String {
    crate::canon::to_graph6(g)
}

pub fn run_suite(suite: &str, seed: u64) -> Result<SuiteReport> {
    let properties = match suite {
        "graph-core" => graph_core(seed),
        "parameters" => parameters(seed),
        "chi-comp" => chi_comp(),
        "sylow" => sylow(),
        "subbasis" => subbasis(),
        "counting" => counting(seed),
        "pipeline" => pipeline(seed),
        "lift" => lift(seed),
        "dichotomy" => dichotomy(seed),
        "modular" => modular(seed),
        "parsimony" => parsimony(seed),
        _ => return Err(Error::Precondition(format!("unknown suite {suite:?}"))),
    };
    let passed = properties.iter().all(|p| p.passed);
    Ok(SuiteReport { suite: suite.to_string(), seed, passed, properties })
}

/// `"all"` expands to every suite in order.
pub fn run(suite: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    if suite == "all" {
        SUITES.iter().map(|s| run_suite(s, seed)).collect()
    } else {
        Ok(vec![run_suite(suite, seed)?])
    }
}

fn graph_core(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    out.push(property("edge-subgraph extremes", |p| {
        let mut graphs: Vec<Graph> = Vec::new();
        for n in 0..=7 {
            graphs.extend(enumerate_canonical_graphs(n)?.into_iter().map(|c| c.graph));
        }
        graphs.extend((0..100).map(|_| random_graph(&mut r, 8)));
        for g in graphs {
            let all = g.edge_subgraph(&g.edges())?;
            let none = g.edge_subgraph(&[])?;
            p.check(all == g && none.edge_count() == 0 && none.n() == g.n(), || json!(g6(&g)));
        }
        Ok(())
    }));
    out.push(property("canonical key is relabeling invariant", |p| {
        for n in 0..=6 {
            let perms = all_permutations(n);
            for c in enumerate_canonical_graphs(n)? {
                for perm in &perms {
                    let h = c.graph.permuted(perm);
                    p.check(canonical_key(&h)? == c.key, || json!({ "graph": g6(&c.graph), "perm": perm }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("K_2[IS_a, IS_b] is K_{a,b}", |p| {
        for a in 1..=4 {
            for b in 1..=4 {
                let g = Graph::inhabited_graph(&Graph::complete(2), &[Graph::empty(a), Graph::empty(b)])?;
                p.check(g.is_isomorphic(&Graph::complete_bipartite(a, b)), || json!({ "a": a, "b": b }));
            }
        }
        Ok(())
    }));
    out.push(property("lexicographic product vertex count", |p| {
        for _ in 0..30 {
            let m = r.gen_range(1..=3);
            let factors: Vec<Graph> = (0..m).map(|_| {
                let n = r.gen_range(1..=4);
                random_graph(&mut r, n)
            }).collect();
            let g = Graph::lexicographic_product(&factors)?;
            let want: usize = factors.iter().map(|f| f.n()).product();
            p.check(g.n() == want, || json!(factors.iter().map(g6).collect::<Vec<_>>()));
        }
        Ok(())
    }));
    out.push(property("difference graphs are vertex-transitive", |p| {
        for q in [2usize, 3, 5, 7] {
            let top = positive_half(q);
            let perms = all_permutations(q);
            for mask in 0u32..1 << top {
                let a: Vec<usize> = (1..=top).filter(|x| mask >> (x - 1) & 1 == 1).collect();
                let g = Graph::difference_graph(q, &a)?;
                let mut orbit = BTreeSet::new();
                for perm in &perms {
                    if g.permuted(perm) == g {
                        orbit.insert(perm[0]);
                    }
                }
                p.check(orbit.len() == q, || json!({ "q": q, "A": a }));
            }
        }
        Ok(())
    }));
    out
}

/// `sign(2#E - binom(n,2))`, valued in `{-1,0,1}`.
fn density_sign() -> GraphParameter {
    GraphParameter::integral("density-sign", |g| {
        let pairs = (g.n() * g.n().saturating_sub(1) / 2) as i64;
        (2 * g.edge_count() as i64 - pairs).signum()
    })
}

fn parameters(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    out.push(property("built-ins are relabeling invariant", |p| {
        for phi in GraphParameter::builtins() {
            for k in 0..=5 {
                for c in enumerate_canonical_graphs(k)? {
                    let base = phi.evaluate_uncached(&c.graph)?;
                    for _ in 0..20 {
                        let perm = random_permutation(&mut r, k);
                        let h = c.graph.permuted(&perm);
                        p.check(phi.evaluate_uncached(&h)? == base, || json!({ "phi": phi.name(), "graph": g6(&h) }));
                    }
                }
            }
        }
        Ok(())
    }));
    out.push(property("indicator decomposition", |p| {
        for phi in GraphParameter::builtins() {
            for k in 1..=4 {
                let parts = indicator_decomposition(&phi, k)?;
                for c in enumerate_canonical_graphs(k)? {
                    let mut sum = Rational::zero();
                    for (b, ind) in &parts {
                        sum += b * ind.evaluate(&c.graph)?;
                    }
                    p.check(sum == phi.evaluate(&c.graph)?, || json!({ "phi": phi.name(), "graph": g6(&c.graph) }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("codomain normalization round trip", |p| {
        let phi = density_sign();
        let domain = [rat(-1), rat(0), rat(1)];
        let (shifted, norm) = normalize_codomain(&phi, &domain)?;
        for _ in 0..20 {
            let n = r.gen_range(1..=7);
            let k = r.gen_range(1..=3);
            let g = random_graph(&mut r, n);
            let m = count_indsub(&shifted, k, &g)?;
            p.check(norm.recover(k, n, &m) == count_indsub(&phi, k, &g)?, || json!({ "graph": g6(&g), "k": k }));
        }
        Ok(())
    }));
    out.push(property("edge-monotone nontrivial parameters separate IS_k and K_k", |p| {
        for phi in GraphParameter::builtins() {
            if phi.declared_edge_monotone() != Some(true) {
                continue;
            }
            for k in 1..=5 {
                p.check(is_edge_monotone_on(&phi, k)?, || json!({ "phi": phi.name(), "k": k, "monotone": false }));
                if is_nontrivial_on(&phi, k)? {
                    let (is, kk) = (phi.evaluate(&Graph::empty(k))?, phi.evaluate(&Graph::complete(k))?);
                    p.check(is > kk, || json!({ "phi": phi.name(), "k": k }));
                }
            }
        }
        Ok(())
    }));
    out
}

/// The 2-group generated by swapping within and across the sides of `K_{2,2}`.
fn biclique_group() -> Result<PermutationGroup> {
    PermutationGroup::new(4, vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2], vec![2, 3, 0, 1]])
}

fn chi_comp() -> Vec<PropertyResult> {
    let mut out = Vec::new();
    out.push(property("sweep agrees with the fixed-point sum", |p| {
        let rotation: Vec<usize> = (0..5).map(|x| (x + 1) % 5).collect();
        let cases: Vec<(Graph, u64, PermutationGroup)> = vec![
            (Graph::complete(2), 2, symmetric_sylow(2, 2)?),
            (Graph::complete(3), 3, symmetric_sylow(3, 3)?),
            (Graph::complete(4), 2, symmetric_sylow(2, 4)?),
            (Graph::complete_bipartite(2, 2), 2, biclique_group()?),
            (Graph::cycle(5), 5, PermutationGroup::new(5, vec![rotation])?),
            (Graph::complete(5), 5, symmetric_sylow(5, 5)?),
        ];
        for (h, prime, group) in cases {
            let lattice = orbit_partition(&group, &h)?;
            for phi in GraphParameter::builtins() {
                let sweep = residue(&alternating_enumerator(&phi, &h)?, prime).expect("integral");
                let fixed = alternating_enumerator_mod_p(&phi, &h, &lattice, prime)?;
                p.check(sweep == fixed, || json!({ "phi": phi.name(), "H": g6(&h), "p": prime, "sweep": sweep, "fixed": fixed }));
            }
        }
        Ok(())
    }));
    out.push(property("edge powers vanish above their degree", |p| {
        for c in 1..=3u32 {
            let phi = GraphParameter::edge_power(c);
            for k in 1..=5 {
                for h in enumerate_canonical_graphs(k)? {
                    if h.graph.edge_count() > c as usize {
                        let chi = alternating_enumerator(&phi, &h.graph)?;
                        p.check(chi.is_zero(), || json!({ "c": c, "H": g6(&h.graph), "chi": chi.to_string() }));
                    }
                }
            }
        }
        Ok(())
    }));
    out.push(property("universal-vertex enumerator is supported on stars", |p| {
        let phi = GraphParameter::universal_vertex_count();
        for k in 1..=5 {
            let star = canonical_key(&Graph::star(k))?;
            for h in enumerate_canonical_graphs(k)? {
                let chi = alternating_enumerator(&phi, &h.graph)?;
                p.check(chi.is_zero() != (h.key == star), || json!({ "H": g6(&h.graph), "chi": chi.to_string() }));
            }
        }
        Ok(())
    }));
    out
}

fn sign_level(lattice: &FixedPointLattice, prime: u64, p: &mut Prop, label: &Value) {
    for fp in lattice.fixed_points() {
        let (e, l) = (lattice.edge_count(fp), lattice.level(fp));
        let ok = prime == 2 || e % 2 == l % 2;
        p.check(ok, || json!({ "lattice": label, "edges": e, "level": l }));
    }
}

const SYLOW_CASES: [(usize, usize); 6] = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)];

fn sylow() -> Vec<PropertyResult> {
    let mut out = Vec::new();
    let built: Vec<Result<SylowLattice>> = SYLOW_CASES.iter().map(|&(q, m)| SylowLattice::build(q, m)).collect();
    out.push(property("orbit fixed points equal difference-graph products", |p| {
        for (&(q, m), b) in SYLOW_CASES.iter().zip(&built) {
            let syl = b.as_ref().map_err(Clone::clone)?;
            let want = 1usize << (m * positive_half(q));
            p.check(syl.points.len() == want && syl.lattice.fixed_point_count() == want, || {
                json!({ "p": q, "m": m, "points": syl.points.len() })
            });
            for (pt, fp) in &syl.points {
                p.check(syl.lattice.graph(*fp) == pt.graph(), || json!({ "p": q, "m": m, "sets": pt.sets }));
            }
        }
        Ok(())
    }));
    out.push(property("orbit level equals the tuple level", |p| {
        for b in &built {
            let syl = b.as_ref().map_err(Clone::clone)?;
            for (pt, fp) in &syl.points {
                p.check(syl.lattice.level(*fp) == pt.level(), || json!({ "p": syl.p, "m": syl.m, "sets": pt.sets }));
            }
        }
        Ok(())
    }));
    out.push(property("prefix-0 points contain a large biclique", |p| {
        for (q, m) in [(2, 2), (2, 3), (3, 2)] {
            let syl = SylowLattice::build(q, m)?;
            let side = q.pow(m as u32 - 1);
            for (pt, _) in &syl.points {
                if pt.empty_prefix() == 0 {
                    p.check(pt.graph().contains_biclique(side, side), || json!({ "p": q, "m": m, "sets": pt.sets }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("generators fix every fixed point", |p| {
        for b in &built {
            let syl = b.as_ref().map_err(Clone::clone)?;
            let lat = &syl.lattice;
            for fp in lat.fixed_points() {
                let g = lat.graph(fp);
                for gen in lat.group.generators() {
                    p.check(g.permuted(gen) == g, || json!({ "p": syl.p, "m": syl.m, "fixed_point": fp }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("sign-level law", |p| {
        for b in &built {
            let syl = b.as_ref().map_err(Clone::clone)?;
            sign_level(&syl.lattice, syl.p as u64, p, &json!({ "p": syl.p, "m": syl.m }));
        }
        for prime in [2usize, 3, 5] {
            for n in 2..=6 {
                let lattice = orbit_partition(&symmetric_sylow(prime, n)?, &Graph::complete(n))?;
                sign_level(&lattice, prime as u64, p, &json!({ "p": prime, "K": n }));
            }
        }
        Ok(())
    }));
    out
}

fn subbasis() -> Vec<PropertyResult> {
    vec![property("sub-basis coefficients are signed enumerators and reproduce Φ", |p| {
        for phi in GraphParameter::builtins() {
            for k in 1..=4 {
                let dec = subbasis_coefficients(&phi, k)?;
                let graphs = enumerate_canonical_graphs(k)?;
                for (key, alpha) in &dec.coefficients {
                    let chi = alternating_enumerator(&phi, &key.graph())?;
                    let signed = if key.edge_count() % 2 == 0 { chi } else { -chi };
                    p.check(*alpha == signed, || json!({ "phi": phi.name(), "H": key.to_string() }));
                }
                for g in &graphs {
                    let mut sum = Rational::zero();
                    for (key, alpha) in &dec.coefficients {
                        sum += alpha * Rational::from_integer(count_sub(&key.graph(), &g.graph)?);
                    }
                    p.check(sum == phi.evaluate(&g.graph)?, || json!({ "phi": phi.name(), "G": g6(&g.graph) }));
                }
            }
        }
        Ok(())
    })]
}

/// Host whose edges run only along pattern edges, class sizes in `1..=max_class`.
pub fn random_coloring<R: Rng>(rng: &mut R, pattern: &Graph, max_class: usize) -> HColoring {
    let mut map = Vec::new();
    for x in 0..pattern.n() {
        let size = rng.gen_range(1..=max_class);
        map.extend(std::iter::repeat_n(x, size));
    }
    let mut edges = Vec::new();
    for u in 0..map.len() {
        for v in u + 1..map.len() {
            if pattern.has_edge(map[u], map[v]) && rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let host = Graph::new(map.len(), &edges).expect("valid edges");
    HColoring::new(host, pattern.clone(), map).expect("edges follow the pattern")
}

/// Edge sets of the Hamiltonian paths of `h`, as sorted edge lists.
fn spanning_paths(h: &Graph) -> BTreeSet<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for perm in all_permutations(h.n()) {
        if perm.windows(2).all(|w| h.has_edge(w[0], w[1])) {
            let mut e: Vec<(usize, usize)> = perm.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
            e.sort_unstable();
            out.insert(e);
        }
    }
    out
}

fn counting(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let hosts: Vec<Graph> = (0..30).map(|_| {
        let n = r.gen_range(1..=8);
        random_graph(&mut r, n)
    }).collect();
    out.push(property("IndSub equals the sub-basis expansion", |p| {
        let mut subs: HashMap<(usize, usize, u64), BigInt> = HashMap::new();
        for phi in GraphParameter::builtins() {
            for k in 1..=4 {
                let dec = subbasis_coefficients(&phi, k)?;
                for (gi, g) in hosts.iter().enumerate() {
                    let mut sum = Rational::zero();
                    for (key, alpha) in &dec.coefficients {
                        if alpha.is_zero() {
                            continue;
                        }
                        let s = match subs.get(&(gi, k, key.mask)) {
                            Some(s) => s.clone(),
                            None => {
                                let s = count_sub(&key.graph(), g)?;
                                subs.insert((gi, k, key.mask), s.clone());
                                s
                            }
                        };
                        sum += alpha * Rational::from_integer(s);
                    }
                    p.check(sum == count_indsub(&phi, k, g)?, || json!({ "phi": phi.name(), "k": k, "G": g6(g) }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("Hamiltonian-path IndSub counts paths", |p| {
        let phi = GraphParameter::hamiltonian_path_count();
        for g in hosts.iter().take(10) {
            for k in 1..=5 {
                let want = count_sub(&Graph::path(k), g)?;
                p.check(count_indsub(&phi, k, g)? == Rational::from_integer(want), || json!({ "k": k, "G": g6(g) }));
            }
        }
        Ok(())
    }));
    out.push(property("colorful Hamiltonian-path counts factor over spanning paths", |p| {
        let phi = GraphParameter::hamiltonian_path_count();
        for k in 1..=4 {
            for h in enumerate_canonical_graphs(k)? {
                for _ in 0..3 {
                    let coloring = random_coloring(&mut r, &h.graph, 3);
                    let mut want = BigInt::zero();
                    for path in spanning_paths(&h.graph) {
                        want += count_cphom(&coloring, Some(&Graph::new(k, &path)?))?;
                    }
                    let got = count_cp_indsub(&phi, &coloring)?;
                    p.check(got == Rational::from_integer(want), || json!({ "H": g6(&h.graph), "G": g6(&coloring.host) }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("vertex-cover Sub counting matches brute force", |p| {
        let mut patterns = Vec::new();
        for k in 1..=5 {
            for h in enumerate_canonical_graphs(k)? {
                if h.graph.vertex_cover_number()? <= 2 {
                    patterns.push(h.graph);
                }
            }
        }
        for _ in 0..30 {
            let n = r.gen_range(1..=10);
            let g = random_graph(&mut r, n);
            for h in &patterns {
                p.check(count_sub_vc(h, &g)? == count_sub(h, &g)?, || json!({ "H": g6(h), "G": g6(&g) }));
            }
        }
        Ok(())
    }));
    out.push(property("Hom(K_k) = k! Sub(K_k)", |p| {
        for g in &hosts {
            for k in 1..=4usize {
                let kk = Graph::complete(k);
                let fact: u64 = (1..=k as u64).product();
                p.check(count_hom(&kk, g)? == count_sub(&kk, g)? * fact, || json!({ "k": k, "G": g6(g) }));
            }
        }
        Ok(())
    }));
    out.push(property("FPT algorithm matches direct counting", |p| {
        let mut params: Vec<GraphParameter> = (1..=3).map(GraphParameter::edge_power).collect();
        params.push(GraphParameter::universal_vertex_count());
        for _ in 0..8 {
            let n = r.gen_range(1..=10);
            let g = random_graph(&mut r, n);
            for phi in &params {
                for k in 1..=5 {
                    p.check(fpt_indsub(phi, k, &g, 3)? == count_indsub(phi, k, &g)?, || {
                        json!({ "phi": phi.name(), "k": k, "G": g6(&g) })
                    });
                }
            }
        }
        Ok(())
    }));
    out.push(property("cp-IndSub hom expansion", |p| {
        let params = [GraphParameter::connected(), GraphParameter::edge_count(), GraphParameter::component_count()];
        for k in 1..=4 {
            for h in enumerate_canonical_graphs(k)? {
                for _ in 0..10 {
                    let coloring = random_coloring(&mut r, &h.graph, 3);
                    for phi in &params {
                        let rep = verify_cpindsub_hom_expansion(phi, &coloring)?;
                        p.check(rep.holds(), || json!({ "phi": phi.name(), "H": g6(&h.graph), "G": g6(&coloring.host) }));
                    }
                }
            }
        }
        Ok(())
    }));
    out
}

fn pipeline(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let phi = GraphParameter::disconnected();
    let mut out = Vec::new();
    let mut sizes = Vec::new();
    out.push(property("clique counts through the IndSub oracle", |p| {
        for l in [2usize, 3] {
            let f = Graph::complete_bipartite(l, l);
            for _ in 0..20 {
                let n = r.gen_range(1..=6);
                let g = random_graph(&mut r, n);
                let rep = count_cliques_via_indsub(l, &phi, &f, &g)?;
                p.check(rep.count == BigInt::from(g.count_cliques(l)), || json!({ "l": l, "G": g6(&g), "got": rep.count.to_string() }));
                sizes.push((l, g.n(), rep.max_query_size, rep.size_bound));
            }
        }
        Ok(())
    }));
    out.push(property("oracle queries respect the size bound", |p| {
        for &(l, n, got, bound) in &sizes {
            p.check(got <= bound && bound == 2 * l * n + 2 * l, || json!({ "l": l, "n": n, "max_query": got }));
        }
        Ok(())
    }));
    out.push(property("zeta of the extracted terms reproduces the oracle", |p| {
        let f = Graph::complete_bipartite(2, 2);
        let chi = alternating_enumerator(&phi, &f)?;
        for _ in 0..5 {
            let n = r.gen_range(1..=5);
            let g = random_graph(&mut r, n);
            let coloring = clique_to_cphom_instance(2, &f, &g)?;
            let oracle = OracleHandle::cp_indsub(phi.clone(), 4);
            let ex = cphom_from_cpindsub_oracle(&coloring, &chi, |c| oracle.query_cp(c))?;
            let mut back = ex.terms.clone();
            crate::util::zeta_transform(&mut back);
            p.check(back == ex.oracle_values, || json!({ "G": g6(&g) }));
        }
        Ok(())
    }));
    out
}

fn random_lift_spec<R: Rng>(rng: &mut R, max_padding: usize) -> LiftSpec {
    let s = rng.gen_range(1..=max_padding.min(2) + 1);
    let c = Graph::from_slot_mask(s, rng.gen_range(0..1u64 << slot_count(s)));
    let mut budget = max_padding;
    let mut parts = Vec::new();
    for i in 1..s {
        let remaining = s - 1 - i;
        let size = rng.gen_range(1..=budget - remaining);
        budget -= size;
        parts.push(random_graph(rng, size));
    }
    LiftSpec::new(c, parts).expect("arity matches")
}

fn lift(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    vec![property("lift identity", |p| {
        let params = GraphParameter::builtins();
        for _ in 0..10 {
            let phi = &params[r.gen_range(0..params.len())];
            let k = r.gen_range(1..=3);
            let h = random_graph(&mut r, k);
            let coloring = random_coloring(&mut r, &h, 2);
            let spec = random_lift_spec(&mut r, 3);
            let (a, b) = lift_identity(phi, &coloring, &spec)?;
            p.check(a == b, || json!({ "phi": phi.name(), "H": g6(&h), "G": g6(&coloring.host), "C": g6(&spec.c) }));
        }
        Ok(())
    })]
}

/// `{0,1}`-valued, edge-monotone: 1 exactly on graphs isomorphic to an edge-subgraph of a generator.
pub fn random_monotone_table<R: Rng>(rng: &mut R, k: usize, name: &str) -> Result<GraphParameter> {
    let generators = rng.gen_range(1..=3);
    let table = crate::canon::class_table(k).ok_or(Error::CapExceeded { what: "table size", got: k, cap: 7 })?;
    let mut ones = BTreeSet::new();
    for _ in 0..generators {
        let density = rng.gen_range(0.1..0.9);
        let g = crate::util::random_graph_p(rng, k, density);
        let top = g.slot_mask();
        let mut sub = top;
        loop {
            ones.insert(table.class(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
    }
    let values = (0..table.reps().len())
        .map(|c| (table.key(c), if ones.contains(&c) { Rational::one() } else { Rational::zero() }))
        .collect();
    Ok(GraphParameter::table(name, k, values).with_bound(|_| 1).with_edge_monotone(true))
}

fn dichotomy(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    vec![property("every monotone parameter is concentrated, reducible or trivial", |p| {
        for i in 0..50 {
            let phi = random_monotone_table(&mut r, 6, &format!("sample-{i}"))?;
            let outcome = classify_concentrated_reducible(&phi, 6, 2, 1);
            p.check(outcome.is_ok(), || {
                json!({ "sample": i, "ones": phi.values_on(6).map(|v| v.iter().filter(|(_, x)| x.is_one()).map(|(k, _)| k.to_string()).collect::<Vec<_>>()).unwrap_or_default(), "error": outcome.as_ref().err().map(|e| e.to_string()) })
            });
            if let Ok(Classification::Concentrated { witness, .. }) = outcome {
                p.check(witness.graph().contains_biclique(2, 2), || json!({ "sample": i, "witness": witness.to_string() }));
            }
        }
        Ok(())
    })]
}

/// `F` for the mod-`p` pipeline: `K_{ℓ,ℓ}` when its enumerator survives mod `p`, else the first witness.
pub fn modular_witness(phi: &GraphParameter, l: usize, p: u64) -> Result<Graph> {
    let f = Graph::complete_bipartite(l, l);
    if residue(&alternating_enumerator(phi, &f)?, p).is_some_and(|x| x != 0) {
        return Ok(f);
    }
    find_witness_graph(phi, l, Some(p))?
        .ok_or_else(|| Error::Precondition(format!("no witness graph with a nonvanishing enumerator mod {p}")))
}

fn modular(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let graphs: Vec<Graph> = (0..20).map(|_| {
        let n = r.gen_range(1..=6);
        random_graph(&mut r, n)
    }).collect();
    let phi = GraphParameter::disconnected();
    let mut out = Vec::new();
    out.push(property("clique residues from divisibility queries", |p| {
        for prime in [2u64, 3, 5] {
            for k in [2usize, 3] {
                let base = OracleHandle::indsub(GraphParameter::clique_indicator(), k);
                let oracle = mod_p_oracle(&base, prime)?;
                for g in &graphs {
                    let got = numclique_from_modclique(g, k, prime, &oracle)?;
                    p.check(got == g.count_cliques(k) % prime, || json!({ "p": prime, "k": k, "G": g6(g) }));
                }
            }
        }
        Ok(())
    }));
    out.push(property("mod-p pipeline matches direct and exact counts", |p| {
        for prime in [2u64, 3, 5] {
            let f = modular_witness(&phi, 2, prime)?;
            let exact_ok = !alternating_enumerator(&phi, &f)?.is_zero();
            for g in &graphs {
                let got = mod_p_clique_via_indsub(2, &phi, &f, g, prime)?;
                let direct = g.count_cliques(2) % prime;
                p.check(got == direct, || json!({ "p": prime, "F": g6(&f), "G": g6(g), "got": got }));
                if exact_ok {
                    let exact = count_cliques_via_indsub(2, &phi, &f, g)?.count % BigInt::from(prime);
                    p.check(BigInt::from(got) == exact, || json!({ "p": prime, "F": g6(&f), "G": g6(g) }));
                }
            }
        }
        Ok(())
    }));
    out
}

fn parsimony(seed: u64) -> Vec<PropertyResult> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    out.push(property("clique counts equal satisfying assignments", |p| {
        let single = Cnf3::from_signed(3, &[[1, 2, 3]])?;
        p.check(parsimony_check(&single, 1)? == (7, 7), || json!(single.to_dimacs()));
        for _ in 0..20 {
            let n = r.gen_range(1..=6);
            let m = r.gen_range(1..=5);
            let phi = Cnf3::random(&mut r, n, m);
            let k = r.gen_range(1..=2.min(n).min(m));
            let (cliques, sat) = parsimony_check(&phi, k)?;
            p.check(cliques == sat, || json!({ "cnf": phi.to_dimacs(), "k": k, "cliques": cliques, "sat": sat }));
        }
        Ok(())
    }));
    out.push(property("valid proper colorings equal satisfying assignments", |p| {
        for i in 0..40 {
            let (n, m) = if i < 20 { (r.gen_range(1..=3), r.gen_range(1..=2)) } else { (r.gen_range(1..=6), r.gen_range(1..=5)) };
            let phi = Cnf3::random(&mut r, n, m);
            let gadget = sat_to_coloring_graph(&phi)?;
            let colorings = count_valid_proper_colorings(&gadget, &phi)?;
            p.check(colorings == phi.count_satisfying()?, || json!({ "cnf": phi.to_dimacs(), "colorings": colorings }));
        }
        Ok(())
    }));
    out
}
