//! Graph parameters: built-ins, tables, indicators and codomain normalization.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::canon::{canonical_key, enumerate_canonical_graphs, from_graph6, CanonicalKey, CANON_CAP};
use crate::error::{cap, Error, Result};
use crate::graph::Graph;
use crate::util::{binomial, rat, Rational};

type EvalFn = dyn Fn(&Graph) -> Result<Rational> + Send + Sync;
type BoundFn = dyn Fn(usize) -> u64 + Send + Sync;

/// A named isomorphism-invariant evaluator with a memo keyed by canonical form.
#[derive(Clone)]
pub struct GraphParameter {
    name: String,
    eval: Arc<EvalFn>,
    bound: Option<Arc<BoundFn>>,
    edge_monotone: Option<bool>,
    memo: Arc<RwLock<HashMap<CanonicalKey, Rational>>>,
    chi_memo: Arc<RwLock<HashMap<CanonicalKey, Rational>>>,
}

impl fmt::Debug for GraphParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphParameter({})", self.name)
    }
}

impl GraphParameter {
    pub fn new<F>(name: impl Into<String>, eval: F) -> GraphParameter
    where
        F: Fn(&Graph) -> Result<Rational> + Send + Sync + 'static,
    {
        GraphParameter {
            name: name.into(),
            eval: Arc::new(eval),
            bound: None,
            edge_monotone: None,
            memo: Arc::default(),
            chi_memo: Arc::default(),
        }
    }

    /// Shorthand for integer-valued evaluators that cannot fail.
    pub fn integral<F>(name: impl Into<String>, eval: F) -> GraphParameter
    where
        F: Fn(&Graph) -> i64 + Send + Sync + 'static,
    {
        GraphParameter::new(name, move |g| Ok(rat(eval(g))))
    }

    pub fn with_bound<F: Fn(usize) -> u64 + Send + Sync + 'static>(mut self, f: F) -> Self {
        self.bound = Some(Arc::new(f));
        self
    }

    pub fn with_edge_monotone(mut self, hint: bool) -> Self {
        self.edge_monotone = Some(hint);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn codomain_bound(&self, k: usize) -> Option<u64> {
        self.bound.as_ref().map(|b| b(k))
    }

    pub fn declared_edge_monotone(&self) -> Option<bool> {
        self.edge_monotone
    }

    pub fn evaluate(&self, g: &Graph) -> Result<Rational> {
        if g.n() > CANON_CAP {
            return (self.eval)(g);
        }
        let key = canonical_key(g)?;
        self.evaluate_key(key)
    }

    /// Runs the evaluator on `g` as labeled, bypassing canonicalization and the memo.
    pub fn evaluate_uncached(&self, g: &Graph) -> Result<Rational> {
        (self.eval)(g)
    }

    pub fn evaluate_key(&self, key: CanonicalKey) -> Result<Rational> {
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = (self.eval)(&key.graph())?;
        self.memo.write().expect("memo lock").insert(key, v.clone());
        Ok(v)
    }

    /// Memo entries, sorted by key; used for the on-disk cache.
    pub fn memo_snapshot(&self) -> Vec<(CanonicalKey, Rational)> {
        let mut out: Vec<_> =
            self.memo.read().expect("memo lock").iter().map(|(k, v)| (*k, v.clone())).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    pub(crate) fn cached_chi(&self, key: &CanonicalKey) -> Option<Rational> {
        self.chi_memo.read().expect("memo lock").get(key).cloned()
    }

    pub(crate) fn store_chi(&self, key: CanonicalKey, v: Rational) {
        self.chi_memo.write().expect("memo lock").insert(key, v);
    }

    pub fn preload(&self, entries: impl IntoIterator<Item = (CanonicalKey, Rational)>) {
        self.memo.write().expect("memo lock").extend(entries);
    }

    /// Values on `𝒢_k^*`, in key order.
    pub fn values_on(&self, k: usize) -> Result<Vec<(CanonicalKey, Rational)>> {
        enumerate_canonical_graphs(k)?
            .into_iter()
            .map(|c| Ok((c.key, self.evaluate_key(c.key)?)))
            .collect()
    }

    // ---- built-ins ----

    pub fn connected() -> GraphParameter {
        GraphParameter::integral("connected", |g| g.is_connected() as i64).with_bound(|_| 1)
    }

    pub fn disconnected() -> GraphParameter {
        GraphParameter::integral("disconnected", |g| !g.is_connected() as i64)
            .with_bound(|_| 1)
            .with_edge_monotone(true)
    }

    pub fn component_count() -> GraphParameter {
        GraphParameter::integral("component-count", |g| g.component_count() as i64)
            .with_bound(|k| k as u64)
            .with_edge_monotone(true)
    }

    pub fn max_degree() -> GraphParameter {
        GraphParameter::integral("max-degree", |g| g.max_degree() as i64)
            .with_bound(|k| k.saturating_sub(1) as u64)
    }

    pub fn chromatic_number() -> GraphParameter {
        GraphParameter::new("chromatic-number", |g| {
            cap("chromatic number host size", g.n(), 10)?;
            Ok(rat(chromatic_number(g) as i64))
        })
        .with_bound(|k| k as u64)
    }

    pub fn edge_count() -> GraphParameter {
        GraphParameter::edge_power(1)
    }

    /// `(#E)^c`.
    pub fn edge_power(c: u32) -> GraphParameter {
        let name = if c == 1 { "edge-count".to_string() } else { format!("edge-power:{c}") };
        GraphParameter::new(name, move |g| {
            Ok(Rational::from_integer(BigInt::from(g.edge_count()).pow(c)))
        })
        .with_bound(move |k| (k * k.saturating_sub(1) / 2).pow(c) as u64)
    }

    pub fn universal_vertex_count() -> GraphParameter {
        GraphParameter::integral("universal-vertex-count", |g| {
            (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).count() as i64
        })
        .with_bound(|k| k as u64)
    }

    /// Undirected Hamiltonian paths; a single vertex counts as one path.
    pub fn hamiltonian_path_count() -> GraphParameter {
        GraphParameter::new("hamiltonian-path-count", |g| {
            cap("hamiltonian path host size", g.n(), 12)?;
            Ok(rat(hamiltonian_paths(g) as i64))
        })
        .with_bound(|k| (1..=k as u64).product::<u64>().max(2) / 2)
    }

    pub fn perfect_matching_count() -> GraphParameter {
        GraphParameter::new("perfect-matching-count", |g| {
            cap("perfect matching host size", g.n(), 16)?;
            Ok(rat(perfect_matchings(g, (1u32 << g.n()) - 1) as i64))
        })
        .with_bound(|k| (1..k as u64).step_by(2).product())
    }

    pub fn clique_indicator() -> GraphParameter {
        GraphParameter::integral("clique-indicator", |g| g.is_clique() as i64).with_bound(|_| 1)
    }

    pub fn independent_set_indicator() -> GraphParameter {
        GraphParameter::integral("independent-set-indicator", |g| (g.edge_count() == 0) as i64)
            .with_bound(|_| 1)
            .with_edge_monotone(true)
    }

    pub fn edge_parity() -> GraphParameter {
        GraphParameter::integral("edge-parity", |g| (g.edge_count() % 2) as i64).with_bound(|_| 1)
    }

    pub fn independence_number() -> GraphParameter {
        GraphParameter::new("independence-number", |g| {
            Ok(rat((g.n() - g.vertex_cover_number()?) as i64))
        })
        .with_bound(|k| k as u64)
        .with_edge_monotone(true)
    }

    pub fn constant(c: Rational) -> GraphParameter {
        let name = format!("constant:{c}");
        let bound = c.to_integer();
        let is_int = c.is_integer();
        let p = GraphParameter::new(name, move |_| Ok(c.clone())).with_edge_monotone(true);
        match u64::try_from(bound) {
            Ok(b) if is_int => p.with_bound(move |_| b),
            _ => p,
        }
    }

    /// Parameter defined on `k`-vertex graphs by a table over canonical keys; 0 elsewhere.
    pub fn table(name: impl Into<String>, k: usize, values: HashMap<CanonicalKey, Rational>) -> GraphParameter {
        let values = Arc::new(values);
        GraphParameter::new(name, move |g| {
            if g.n() != k {
                return Ok(Rational::zero());
            }
            let key = canonical_key(g)?;
            Ok(values.get(&key).cloned().unwrap_or_else(Rational::zero))
        })
    }

    /// Every integer-valued built-in.
    pub fn builtins() -> Vec<GraphParameter> {
        vec![
            GraphParameter::connected(),
            GraphParameter::disconnected(),
            GraphParameter::component_count(),
            GraphParameter::max_degree(),
            GraphParameter::chromatic_number(),
            GraphParameter::edge_power(1),
            GraphParameter::edge_power(2),
            GraphParameter::edge_power(3),
            GraphParameter::universal_vertex_count(),
            GraphParameter::hamiltonian_path_count(),
            GraphParameter::perfect_matching_count(),
            GraphParameter::clique_indicator(),
            GraphParameter::independent_set_indicator(),
            GraphParameter::edge_parity(),
            GraphParameter::independence_number(),
        ]
    }

    /// `"name"`, `"name:arg"` or `"table:<path>"`.
    pub fn parse(spec: &str) -> Result<GraphParameter> {
        let (name, arg) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        let bad = || Error::Parse(format!("unknown parameter {spec:?}"));
        let p = match (name, arg) {
            ("connected" | "connected-indicator", None) => GraphParameter::connected(),
            ("disconnected" | "disconnected-indicator", None) => GraphParameter::disconnected(),
            ("component-count", None) => GraphParameter::component_count(),
            ("max-degree", None) => GraphParameter::max_degree(),
            ("chromatic-number", None) => GraphParameter::chromatic_number(),
            ("edge-count", None) => GraphParameter::edge_count(),
            ("edge-power", Some(c)) => {
                GraphParameter::edge_power(c.parse().map_err(|_| bad())?)
            }
            ("universal-vertex-count", None) => GraphParameter::universal_vertex_count(),
            ("hamiltonian-path-count", None) => GraphParameter::hamiltonian_path_count(),
            ("perfect-matching-count", None) => GraphParameter::perfect_matching_count(),
            ("clique-indicator", None) => GraphParameter::clique_indicator(),
            ("independent-set-indicator", None) => GraphParameter::independent_set_indicator(),
            ("edge-parity", None) => GraphParameter::edge_parity(),
            ("independence-number", None) => GraphParameter::independence_number(),
            ("constant", Some(c)) => GraphParameter::constant(parse_rational(c)?),
            ("table", Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                parse_table(&format!("table:{path}"), &text)?
            }
            _ => return Err(bad()),
        };
        Ok(p)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Table JSON: `{"k": 3, "<graph6>": value, ...}`; keys may be any labeling.
pub fn parse_table(name: &str, text: &str) -> Result<GraphParameter> {
    let json: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
    let obj = json.as_object().ok_or_else(|| Error::Parse(format!("{name}: expected an object")))?;
    let k = obj
        .get("k")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Parse(format!("{name}: missing integer \"k\"")))? as usize;
    let mut values = HashMap::new();
    for (key, v) in obj {
        if key == "k" {
            continue;
        }
        let g = from_graph6(key)?;
        if g.n() != k {
            return Err(Error::Parse(format!("{name}: {key} has {} vertices, expected {k}", g.n())));
        }
        let value = match v {
            serde_json::Value::String(s) => parse_rational(s)?,
            serde_json::Value::Number(x) => parse_rational(&x.to_string())?,
            _ => return Err(Error::Parse(format!("{name}: bad value for {key}"))),
        };
        values.insert(canonical_key(&g)?, value);
    }
    Ok(GraphParameter::table(name, k, values))
}

pub fn table_to_json(p: &GraphParameter, k: usize) -> Result<serde_json::Value> {
    let mut obj = serde_json::Map::new();
    obj.insert("k".into(), k.into());
    for (key, v) in p.values_on(k)? {
        obj.insert(key.to_string(), v.to_string().into());
    }
    Ok(serde_json::Value::Object(obj))
}

fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n()).find(|&c| colorable(g, c, 0, &mut vec![usize::MAX; g.n()])).expect("n colors suffice")
}

fn colorable(g: &Graph, c: usize, v: usize, color: &mut Vec<usize>) -> bool {
    if v == g.n() {
        return true;
    }
    // symmetry breaking: vertex v may open at most one new color
    let opened = color[..v].iter().copied().max().map_or(0, |m| m + 1);
    for x in 0..c.min(opened + 1) {
        if g.neighbors(v).all(|u| u >= v || color[u] != x) {
            color[v] = x;
            if colorable(g, c, v + 1, color) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

fn hamiltonian_paths(g: &Graph) -> u64 {
    let n = g.n();
    if n <= 1 {
        return n as u64;
    }
    // directed paths ending at v covering S
    let full = 1usize << n;
    let mut dp = vec![0u64; full * n];
    for v in 0..n {
        dp[(1 << v) * n + v] = 1;
    }
    for s in 1..full {
        for v in 0..n {
            let cur = dp[s * n + v];
            if cur == 0 {
                continue;
            }
            for w in g.neighbors(v) {
                if s >> w & 1 == 0 {
                    dp[(s | 1 << w) * n + w] += cur;
                }
            }
        }
    }
    (0..n).map(|v| dp[(full - 1) * n + v]).sum::<u64>() / 2
}

fn perfect_matchings(g: &Graph, alive: u32) -> u64 {
    if alive == 0 {
        return 1;
    }
    let v = alive.trailing_zeros() as usize;
    let rest = alive & !(1 << v);
    g.neighbors(v)
        .filter(|&w| rest >> w & 1 == 1)
        .map(|w| perfect_matchings(g, rest & !(1 << w)))
        .sum()
}

/// `Φ^b`: 1 where `Φ = b`, else 0.
pub fn indicator(base: &GraphParameter, b: Rational) -> GraphParameter {
    let inner = base.clone();
    let name = format!("{}^{}", base.name(), b);
    GraphParameter::new(name, move |g| Ok(rat((inner.evaluate(g)? == b) as i64))).with_bound(|_| 1)
}

pub fn image_on(phi: &GraphParameter, k: usize) -> Result<BTreeSet<Rational>> {
    cap("image size", k, 6)?;
    Ok(phi.values_on(k)?.into_iter().map(|(_, v)| v).collect())
}

pub fn indicator_decomposition(phi: &GraphParameter, k: usize) -> Result<Vec<(Rational, GraphParameter)>> {
    Ok(image_on(phi, k)?.into_iter().map(|b| (b.clone(), indicator(phi, b))).collect())
}

/// Exhaustive check that deleting any edge of any `k`-vertex graph never lowers `Φ`.
/// Single-edge deletions suffice since edge-subgraph chains compose.
pub fn is_edge_monotone_on(phi: &GraphParameter, k: usize) -> Result<bool> {
    cap("edge-monotone check size", k, 5)?;
    for c in enumerate_canonical_graphs(k)? {
        let top = phi.evaluate_key(c.key)?;
        let mut g = c.graph.clone();
        for (u, v) in c.graph.edges() {
            g.remove_edge(u, v);
            let below = phi.evaluate(&g)?;
            g.add_edge(u, v);
            if below < top {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_nontrivial_on(phi: &GraphParameter, k: usize) -> Result<bool> {
    Ok(image_on(phi, k)?.len() >= 2)
}

/// `Φ' = s + d·Φ` with values in `{0..c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub s: BigInt,
    pub d: BigInt,
    pub c: BigInt,
}

impl Normalization {
    /// Recovers `#IndSub(Φ,k)(G)` from `m = #IndSub(Φ',k)(G)` on an `n`-vertex host.
    pub fn recover(&self, k: usize, n: usize, m: &Rational) -> Rational {
        let shift = Rational::from_integer(&self.s * binomial(n, k));
        (m - shift) / Rational::from_integer(self.d.clone())
    }
}

pub fn normalize_codomain(phi: &GraphParameter, domain: &[Rational]) -> Result<(GraphParameter, Normalization)> {
    if domain.is_empty() {
        return Err(Error::Precondition("codomain must be a nonempty finite set".into()));
    }
    let d = domain.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = domain.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect();
    let s = -scaled.iter().min().expect("nonempty").clone();
    let c = scaled.iter().map(|x| x + &s).max().expect("nonempty");
    let norm = Normalization { s: s.clone(), d: d.clone(), c: c.clone() };
    let inner = phi.clone();
    let allowed: BTreeSet<Rational> = domain.iter().cloned().collect();
    let name = format!("{}'", phi.name());
    let bound = u64::try_from(c.clone()).ok();
    let mut out = GraphParameter::new(name, move |g| {
        let v = inner.evaluate(g)?;
        if !allowed.contains(&v) {
            return Err(Error::Precondition(format!("value {v} outside the declared codomain")));
        }
        Ok(Rational::from_integer(s.clone()) + v * Rational::from_integer(d.clone()))
    });
    if let Some(b) = bound {
        out = out.with_bound(move |_| b);
    }
    if let Some(m) = phi.declared_edge_monotone() {
        out = out.with_edge_monotone(m);
    }
    debug_assert!(norm.d.is_positive());
    Ok((out, norm))
}
