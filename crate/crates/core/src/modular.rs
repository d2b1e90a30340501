//! Counting modulo a prime, and the parsimonious 3-SAT to clique-counting gadget.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::enumerator::alternating_enumerator;
use crate::error::{cap, invariant, pre, Error, Result};
use crate::graph::Graph;
use crate::params::GraphParameter;
use crate::reductions::{clique_to_cphom_instance, delete_color_classes, restrict_color_pairs, OracleHandle};
use crate::util::{is_prime, mobius_transform, mod_inv, residue};

/// `#_p` and `MOD_p` views of a counting oracle.
pub struct ModOracle<'a> {
    pub base: &'a OracleHandle,
    pub p: u64,
}

pub fn mod_p_oracle(base: &OracleHandle, p: u64) -> Result<ModOracle<'_>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(ModOracle { base, p })
}

impl ModOracle<'_> {
    pub fn residue(&self, g: &Graph) -> Result<u64> {
        let v = self.base.query(g)?;
        residue(&v, self.p).ok_or_else(|| Error::Precondition(format!("{v} has no residue mod {}", self.p)))
    }

    /// True iff the count is divisible by `p`.
    pub fn divisible(&self, g: &Graph) -> Result<bool> {
        Ok(self.residue(g)? == 0)
    }
}

/// `#k-cliques(G) mod p` from divisibility answers on `G ⊎ i·K_k`, `i < p`.
pub fn numclique_from_modclique(g: &Graph, k: usize, p: u64, oracle: &ModOracle) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    pre(k >= 1, || "k must be at least 1".into())?;
    pre(oracle.p == p, || "oracle modulus differs".into())?;
    let mut host = g.clone();
    let mut hits = Vec::new();
    for i in 0..p {
        if oracle.divisible(&host)? {
            hits.push(i);
        }
        host = host.disjoint_union(&Graph::complete(k));
    }
    match hits.as_slice() {
        [i] => Ok((p - i) % p),
        _ => Err(Error::Invariant(format!("{} divisibility answers among {p} queries", hits.len()))),
    }
}

/// `#ℓ-cliques(G) mod p` through the clique pipeline with every step carried out in `F_p`.
pub fn mod_p_clique_via_indsub(l: usize, phi: &GraphParameter, f: &Graph, g: &Graph, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let chi = alternating_enumerator(phi, f)?;
    let r = residue(&chi, p).ok_or_else(|| Error::Precondition(format!("χ̂(Φ,F) = {chi} has no residue mod {p}")))?;
    pre(r != 0, || format!("χ̂(Φ,F) = {chi} vanishes mod {p}"))?;
    let coloring = clique_to_cphom_instance(l, f, g)?;
    let base = OracleHandle::indsub(phi.clone(), f.n());
    let oracle = mod_p_oracle(&base, p)?;
    let edges = coloring.pattern.edges();
    cap("pattern edge count", edges.len(), 10)?;
    let k = f.n();
    let modulus = p as i64;
    let mut values = Vec::with_capacity(1 << edges.len());
    for b in 0u64..(1 << edges.len()) {
        let keep: Vec<(usize, usize)> =
            edges.iter().enumerate().filter(|(i, _)| b >> i & 1 == 1).map(|(_, &e)| e).collect();
        let restricted = restrict_color_pairs(&coloring, &keep);
        let mut acc = 0i64;
        for j in 0u64..(1 << k) {
            let v = oracle.residue(&delete_color_classes(&restricted, j).host)? as i64;
            acc += if j.count_ones() % 2 == 0 { v } else { -v };
        }
        values.push(acc.rem_euclid(modulus));
    }
    mobius_transform(&mut values);
    let top = values.last().expect("nonempty").rem_euclid(modulus) as u64;
    let coefficient = if edges.len() % 2 == 0 { r } else { p - r };
    let inv = mod_inv(coefficient, p).expect("nonzero residue mod a prime");
    Ok(top * inv % p)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn value(&self, assignment: u64) -> bool {
        (assignment >> self.var & 1 == 1) == self.positive
    }
}

/// A 3-CNF over variables `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf3 {
    pub n: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Cnf3 {
    pub fn new(n: usize, clauses: Vec<[Literal; 3]>) -> Result<Cnf3> {
        for c in &clauses {
            for l in c {
                if l.var >= n {
                    return Err(Error::Parse(format!("literal references variable {} of {n}", l.var)));
                }
            }
        }
        Ok(Cnf3 { n, clauses })
    }

    /// Signed 1-based literals as in DIMACS.
    pub fn from_signed(n: usize, clauses: &[[i32; 3]]) -> Result<Cnf3> {
        let mut out = Vec::with_capacity(clauses.len());
        for c in clauses {
            let mut lits = [Literal { var: 0, positive: true }; 3];
            for (slot, &x) in lits.iter_mut().zip(c) {
                if x == 0 {
                    return Err(Error::Parse("literal 0".into()));
                }
                *slot = Literal { var: x.unsigned_abs() as usize - 1, positive: x > 0 };
            }
            out.push(lits);
        }
        Cnf3::new(n, out)
    }

    pub fn parse_dimacs(text: &str) -> Result<Cnf3> {
        let mut n = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "cnf" {
                    return Err(Error::Parse(format!("bad problem line: {line}")));
                }
                n = Some(fields[1].parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?);
                continue;
            }
            for tok in line.split_whitespace() {
                let x: i32 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok}")))?;
                if x == 0 {
                    let c: [i32; 3] = current
                        .as_slice()
                        .try_into()
                        .map_err(|_| Error::Parse(format!("clause with {} literals", current.len())))?;
                    clauses.push(c);
                    current.clear();
                } else {
                    current.push(x);
                }
            }
        }
        if !current.is_empty() {
            return Err(Error::Parse("unterminated clause".into()));
        }
        let n = n.ok_or_else(|| Error::Parse("missing problem line".into()))?;
        Cnf3::from_signed(n, &clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let x = l.var as i64 + 1;
                s.push_str(&format!("{} ", if l.positive { x } else { -x }));
            }
            s.push_str("0\n");
        }
        s
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize, m: usize) -> Cnf3 {
        let clauses = (0..m)
            .map(|_| std::array::from_fn(|_| Literal { var: rng.gen_range(0..n), positive: rng.gen_bool(0.5) }))
            .collect();
        Cnf3 { n, clauses }
    }

    pub fn is_satisfied(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.value(assignment)))
    }

    /// Exhaustive `#SAT`.
    pub fn count_satisfying(&self) -> Result<u64> {
        cap("variable count", self.n, 24)?;
        Ok((0u64..1 << self.n).filter(|&a| self.is_satisfied(a)).count() as u64)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    T,
    F,
    B,
}

const COLORS: [Color; 3] = [Color::T, Color::F, Color::B];

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::T => "T",
            Color::F => "F",
            Color::B => "B",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Role {
    Anchor(Color),
    Literal { var: usize, positive: bool },
    Clause { clause: usize, j: usize },
}

/// `G_φ` with vertex roles and, per clause, the chosen coloring of `y_1..y_6` for each
/// literal-value pattern (bit `j` set when literal `j` is true).
#[derive(Clone, Debug)]
pub struct ColoringGadget {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub valid_colorings: Vec<[Option<[Color; 6]>; 8]>,
}

impl ColoringGadget {
    pub fn literal_vertex(l: Literal) -> usize {
        3 + 2 * l.var + usize::from(!l.positive)
    }

    pub fn clause_vertex(n: usize, clause: usize, j: usize) -> usize {
        3 + 2 * n + 6 * clause + j
    }
}

/// Edges internal to one clause gadget, on local ids: 0..6 are `y_1..y_6`, 6..9 the literals.
const GADGET_EDGES: [(usize, usize); 10] =
    [(0, 1), (1, 2), (0, 2), (0, 6), (1, 7), (2, 3), (3, 4), (4, 5), (3, 5), (4, 8)];

fn gadget_edges() -> impl Iterator<Item = (usize, usize)> {
    GADGET_EDGES.iter().copied()
}

/// Lexicographically smallest proper coloring of `y_1..y_6` with `y_6 = T`, given literal colors.
fn canonical_clause_coloring(lits: [Color; 3]) -> Option<[Color; 6]> {
    let mut local = [Color::T; 9];
    local[6..].copy_from_slice(&lits);
    for code in 0..3usize.pow(6) {
        let mut c = code;
        for slot in local[..6].iter_mut().rev() {
            *slot = COLORS[c % 3];
            c /= 3;
        }
        if local[5] == Color::T && gadget_edges().all(|(a, b)| local[a] != local[b]) {
            return Some(local[..6].try_into().expect("six"));
        }
    }
    None
}

pub fn sat_to_coloring_graph(phi: &Cnf3) -> Result<ColoringGadget> {
    pre(phi.n >= 1 && !phi.clauses.is_empty(), || "need at least one variable and one clause".into())?;
    let phi = Cnf3::new(phi.n, phi.clauses.clone())?;
    let (n, m) = (phi.n, phi.clauses.len());
    let mut roles = vec![Role::Anchor(Color::T), Role::Anchor(Color::F), Role::Anchor(Color::B)];
    for var in 0..n {
        roles.push(Role::Literal { var, positive: true });
        roles.push(Role::Literal { var, positive: false });
    }
    for clause in 0..m {
        roles.extend((0..6).map(|j| Role::Clause { clause, j }));
    }
    let mut g = Graph::empty(roles.len());
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for var in 0..n {
        g.add_edge(3 + 2 * var, 4 + 2 * var);
        g.add_edge(2, 3 + 2 * var);
        g.add_edge(2, 4 + 2 * var);
    }
    for (i, c) in phi.clauses.iter().enumerate() {
        let local = |x: usize| {
            if x < 6 {
                ColoringGadget::clause_vertex(n, i, x)
            } else {
                ColoringGadget::literal_vertex(c[x - 6])
            }
        };
        for (a, b) in gadget_edges() {
            let (u, v) = (local(a), local(b));
            if u != v && !g.has_edge(u, v) {
                g.add_edge(u.min(v), u.max(v));
            }
        }
        let y6 = ColoringGadget::clause_vertex(n, i, 5);
        g.add_edge(1, y6);
        g.add_edge(2, y6);
    }
    let mut table = [None; 8];
    for (bits, slot) in table.iter_mut().enumerate().skip(1) {
        let lits = std::array::from_fn(|j| if bits >> j & 1 == 1 { Color::T } else { Color::F });
        *slot = canonical_clause_coloring(lits);
        invariant(slot.is_some(), || format!("satisfied literal pattern {bits:03b} admits no output T"))?;
    }
    invariant(canonical_clause_coloring([Color::F; 3]).is_none(), || "all-false clause admits output T".into())?;
    debug_assert_eq!(g.n(), 3 + 2 * n + 6 * m);
    Ok(ColoringGadget { graph: g, roles, valid_colorings: vec![table; m] })
}

fn literal_bits(c: &[Literal; 3], color_of: impl Fn(usize) -> Color) -> Option<usize> {
    let mut bits = 0;
    for (j, l) in c.iter().enumerate() {
        match color_of(ColoringGadget::literal_vertex(*l)) {
            Color::T => bits |= 1 << j,
            Color::F => {}
            Color::B => return None,
        }
    }
    Some(bits)
}

/// Exhaustive count of proper colorings of `G_φ` that are valid: anchors fixed and each
/// clause gadget colored by its chosen table entry. Improper partial colorings are pruned.
pub fn count_valid_proper_colorings(gadget: &ColoringGadget, phi: &Cnf3) -> Result<u64> {
    let g = &gadget.graph;
    let n = phi.n;
    pre(g.n() == 3 + 2 * n + 6 * phi.clauses.len(), || "gadget does not match formula".into())?;
    cap("gadget vertex count", g.n(), 64)?;
    let mut colors = vec![Color::T; g.n()];
    fn rec(v: usize, g: &Graph, gadget: &ColoringGadget, phi: &Cnf3, colors: &mut Vec<Color>) -> u64 {
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for c in COLORS {
            if let Role::Anchor(a) = gadget.roles[v] {
                if a != c {
                    continue;
                }
            }
            if g.neighbors(v).any(|u| u < v && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if let Role::Clause { clause, j: 5 } = gadget.roles[v] {
                let start = v - 5;
                let ok = literal_bits(&phi.clauses[clause], |u| colors[u])
                    .and_then(|bits| gadget.valid_colorings[clause][bits])
                    .is_some_and(|want| want[..] == colors[start..=v]);
                if !ok {
                    continue;
                }
            }
            total += rec(v + 1, g, gadget, phi, colors);
        }
        total
    }
    Ok(rec(0, g, gadget, phi, &mut colors))
}

fn chunks(total: usize, k: usize) -> Vec<std::ops::Range<usize>> {
    let size = total.div_ceil(k);
    (0..k).map(|i| (i * size).min(total)..((i + 1) * size).min(total)).collect()
}

/// Vertex groups of `G_φ`: anchors, then `k` literal groups, then `k` clause-gadget groups.
pub fn clique_groups(phi: &Cnf3, k: usize) -> Vec<Vec<usize>> {
    let n = phi.n;
    let mut groups = vec![vec![0, 1, 2]];
    for r in chunks(n, k) {
        groups.push(r.flat_map(|var| [3 + 2 * var, 4 + 2 * var]).collect());
    }
    for r in chunks(phi.clauses.len(), k) {
        let mut vs: Vec<usize> = Vec::new();
        for i in r {
            for l in &phi.clauses[i] {
                vs.push(ColoringGadget::literal_vertex(*l));
            }
            vs.extend((0..6).map(|j| ColoringGadget::clause_vertex(n, i, j)));
        }
        vs.sort_unstable();
        vs.dedup();
        groups.push(vs);
    }
    groups
}

/// Valid proper colorings of one group, as vertex → color maps.
fn group_colorings(gadget: &ColoringGadget, phi: &Cnf3, group: &[usize]) -> Vec<HashMap<usize, Color>> {
    let g = &gadget.graph;
    let n = phi.n;
    if group.iter().all(|&v| matches!(gadget.roles[v], Role::Anchor(_))) {
        return vec![group.iter().map(|&v| (v, COLORS[v])).collect()];
    }
    let literals: Vec<usize> = group.iter().copied().filter(|&v| matches!(gadget.roles[v], Role::Literal { .. })).collect();
    let clauses: Vec<usize> = group
        .iter()
        .filter_map(|&v| match gadget.roles[v] {
            Role::Clause { clause, j: 0 } => Some(clause),
            _ => None,
        })
        .collect();
    let mut out = Vec::new();
    'assign: for bits in 0u64..1 << literals.len() {
        let mut f: HashMap<usize, Color> = literals
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, if bits >> i & 1 == 1 { Color::T } else { Color::F }))
            .collect();
        for &i in &clauses {
            let Some(bits) = literal_bits(&phi.clauses[i], |u| f[&u]) else { continue 'assign };
            let Some(ys) = gadget.valid_colorings[i][bits] else { continue 'assign };
            for (j, c) in ys.into_iter().enumerate() {
                f.insert(ColoringGadget::clause_vertex(n, i, j), c);
            }
        }
        let proper = group.iter().all(|&u| g.neighbors(u).all(|w| !f.contains_key(&w) || f[&w] != f[&u]));
        if proper {
            out.push(f);
        }
    }
    out
}

/// `G̃_φ`: one vertex per (group, valid proper coloring), edges between compatible pairs
/// from different groups whose union coloring is proper.
pub fn coloring_to_clique_graph(gadget: &ColoringGadget, phi: &Cnf3, k: usize) -> Result<Graph> {
    pre(k >= 1, || "k must be at least 1".into())?;
    pre(k <= phi.n && k <= phi.clauses.len(), || format!("k = {k} exceeds n or m"))?;
    let groups = clique_groups(phi, k);
    for grp in &groups {
        pre(grp.len() * k <= 9 * (phi.n + phi.clauses.len()), || "group larger than 9(n+m)/k".into())?;
        let literals = grp.iter().filter(|&&v| matches!(gadget.roles[v], Role::Literal { .. })).count();
        cap("literal vertices per group", literals, 20)?;
    }
    let g = &gadget.graph;
    let mut nodes: Vec<(usize, HashMap<usize, Color>)> = Vec::new();
    for (i, grp) in groups.iter().enumerate() {
        nodes.extend(group_colorings(gadget, phi, grp).into_iter().map(|f| (i, f)));
    }
    let mut out = Graph::empty(nodes.len());
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            let ((ga, fa), (gb, fb)) = (&nodes[a], &nodes[b]);
            if ga == gb {
                continue;
            }
            let agree = fa.iter().all(|(v, c)| fb.get(v).is_none_or(|d| d == c));
            let proper = agree && fa.iter().all(|(&u, cu)| g.neighbors(u).all(|w| fb.get(&w) != Some(cu)));
            if proper {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

/// `(#(2k+1)-cliques(G̃_φ), #SAT(φ))`.
pub fn parsimony_check(phi: &Cnf3, k: usize) -> Result<(u64, u64)> {
    let gadget = sat_to_coloring_graph(phi)?;
    let tilde = coloring_to_clique_graph(&gadget, phi, k)?;
    Ok((tilde.count_cliques(2 * k + 1), phi.count_satisfying()?))
}
