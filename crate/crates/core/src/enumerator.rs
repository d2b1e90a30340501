//! The alternating enumerator `χ̂(Φ,G) = Σ_{S⊆E(G)} Φ(G{S})·(-1)^{|S|}`, its fixed-point residues
//! and the sub-basis coefficients it determines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::canon::{canonical_key, class_table, enumerate_canonical_graphs, CanonicalKey, CANON_CAP};
use crate::error::{cap, invariant, pre, Error, Result};
use crate::graph::{slot, slot_count, Graph};
use crate::params::GraphParameter;
use crate::sylow::FixedPointLattice;
use crate::util::{is_prime, rat, residue, zeta_transform, Rational};

pub const SWEEP_CAP: usize = 24;

pub fn alternating_enumerator(phi: &GraphParameter, g: &Graph) -> Result<Rational> {
    let edges = g.edges();
    cap("edge count for the alternating sweep", edges.len(), SWEEP_CAP)?;
    let key = if g.n() <= CANON_CAP { Some(canonical_key(g)?) } else { None };
    if let Some(v) = key.as_ref().and_then(|k| phi.cached_chi(k)) {
        return Ok(v);
    }
    let v = sweep(phi, g, &edges)?;
    if let Some(k) = key {
        phi.store_chi(k, v.clone());
    }
    Ok(v)
}

/// Gray-code sweep; with a class table the sweep only tallies signs per isomorphism class.
fn sweep(phi: &GraphParameter, g: &Graph, edges: &[(usize, usize)]) -> Result<Rational> {
    let m = edges.len();
    let n = g.n();
    if let Some(table) = class_table(n) {
        let bits: Vec<u64> = edges.iter().map(|&(u, v)| 1u64 << slot(n, u, v)).collect();
        let mut tally = vec![0i64; table.reps().len()];
        let (mut mask, mut sign) = (0u64, 1i64);
        tally[table.class(0)] += 1;
        for i in 1u64..(1 << m) {
            mask ^= bits[i.trailing_zeros() as usize];
            sign = -sign;
            tally[table.class(mask)] += sign;
        }
        let mut total = Rational::zero();
        for (c, &t) in tally.iter().enumerate() {
            if t != 0 {
                total += phi.evaluate_key(table.key(c))? * rat(t);
            }
        }
        return Ok(total);
    }
    let mut cur = Graph::empty(n);
    let mut present = vec![false; m];
    let mut total = phi.evaluate(&cur)?;
    let mut sign = 1i64;
    for i in 1u64..(1 << m) {
        let b = i.trailing_zeros() as usize;
        let (u, v) = edges[b];
        if present[b] {
            cur.remove_edge(u, v);
        } else {
            cur.add_edge(u, v);
        }
        present[b] = !present[b];
        sign = -sign;
        total += phi.evaluate(&cur)? * rat(sign);
    }
    Ok(total)
}

/// `χ̂(Φ, H)` for every `H ∈ 𝒢_k^*` at once, by a zeta transform over all labeled graphs.
pub fn all_alternating_enumerators(phi: &GraphParameter, k: usize) -> Result<Vec<(CanonicalKey, Rational)>> {
    cap("size for the all-graph enumerator table", k, 6)?;
    let table = class_table(k).expect("k <= 6 has a class table");
    let values: Vec<Rational> =
        (0..table.reps().len()).map(|c| phi.evaluate_key(table.key(c))).collect::<Result<_>>()?;
    let denom = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Option<Vec<i128>> = values
        .iter()
        .map(|v| i128::try_from((v * Rational::from_integer(denom.clone())).to_integer()).ok())
        .collect();
    let size = 1usize << slot_count(k);
    let out = if let Some(scaled) = scaled.filter(|s| s.iter().all(|x| x.abs() < 1 << 100)) {
        let mut f: Vec<i128> = (0..size)
            .map(|m| {
                let v = scaled[table.class(m as u64)];
                if m.count_ones() % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        zeta_transform(&mut f);
        let d = Rational::from_integer(denom);
        table
            .reps()
            .iter()
            .enumerate()
            .map(|(c, &mask)| (table.key(c), Rational::from_integer(f[mask as usize].into()) / &d))
            .collect::<Vec<_>>()
    } else {
        enumerate_canonical_graphs(k)?
            .into_iter()
            .map(|c| Ok((c.key, alternating_enumerator(phi, &c.graph)?)))
            .collect::<Result<Vec<_>>>()?
    };
    for (key, v) in &out {
        phi.store_chi(*key, v.clone());
    }
    Ok(out)
}

fn integral_residue(v: &Rational, p: u64) -> Result<u64> {
    residue(v, p).ok_or_else(|| Error::Precondition(format!("non-integer value {v}")))
}

/// `Σ_{A ∈ fp(Γ,H)} Φ(A)·(-1)^{#E(A)} mod p`.
pub fn alternating_enumerator_mod_p(phi: &GraphParameter, h: &Graph, lattice: &FixedPointLattice, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    pre(lattice.host == *h, || "lattice host differs from H".into())?;
    pre(lattice.group.is_p_group(p)?, || format!("lattice group order is not a power of {p}"))?;
    let mut acc = 0u64;
    for fp in lattice.fixed_points() {
        let r = integral_residue(&phi.evaluate(&lattice.graph(fp))?, p)?;
        acc = if lattice.edge_count(fp) % 2 == 0 { (acc + r) % p } else { (acc + p - r) % p };
    }
    Ok(acc)
}

/// True iff every proper sub-point of `a` has one value `b` and `Φ(a) ≠ b`.
/// When true, also asserts `χ̂ ≡_p (-1)^{ℓ(a)+1}(b - Φ(a))` against the lattice sum.
pub fn check_nonvanishing_criterion(lattice: &FixedPointLattice, a: u32, phi: &GraphParameter, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(c) = phi.codomain_bound(lattice.host.n()) {
        pre(c < p, || format!("codomain bound {c} is not below p = {p}"))?;
    }
    let value = |fp: u32| -> Result<u64> {
        let v = phi.evaluate(&lattice.graph(fp))?;
        let r = integral_residue(&v, p)?;
        pre(v >= rat(0) && v < rat(p as i64), || format!("value {v} outside 0..{p}"))?;
        Ok(r)
    };
    let top = value(a)?;
    let subs = lattice.proper_sub_points(a);
    let Some(&first) = subs.first() else {
        return Ok(false);
    };
    let b = value(first)?;
    let mut signed_sum = if lattice.edge_count(a) % 2 == 0 { top } else { (p - top) % p };
    for &s in &subs {
        let v = value(s)?;
        if v != b {
            return Ok(false);
        }
        signed_sum = if lattice.edge_count(s) % 2 == 0 { (signed_sum + v) % p } else { (signed_sum + p - v) % p };
    }
    if top == b {
        return Ok(false);
    }
    let diff = (b + p - top) % p;
    let expected = if (lattice.level(a) + 1) % 2 == 0 { diff } else { (p - diff) % p };
    invariant(signed_sum == expected, || {
        format!("lattice sum {signed_sum} differs from the predicted residue {expected}")
    })?;
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct SubBasisDecomposition {
    pub k: usize,
    /// `(H, α(H))` in key order.
    pub coefficients: Vec<(CanonicalKey, Rational)>,
}

impl SubBasisDecomposition {
    pub fn coefficient(&self, key: &CanonicalKey) -> Rational {
        self.coefficients
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }
}

/// `#Sub(F, H)` for all `F, H ∈ 𝒢_k^*`, indexed by class id (`sub[h][f]`).
pub fn spanning_sub_matrix(k: usize) -> Result<Vec<Vec<u64>>> {
    cap("size for the sub matrix", k, 6)?;
    let table = class_table(k).expect("class table");
    let classes = table.reps().len();
    Ok(table
        .reps()
        .iter()
        .map(|&mask| {
            let mut row = vec![0u64; classes];
            let mut sub = mask;
            loop {
                row[table.class(sub)] += 1;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            row
        })
        .collect())
}

/// `α(H) = Φ(H) − Σ_{F≠H} α(F)·#Sub(F,H)`, in increasing edge count.
pub fn subbasis_coefficients(phi: &GraphParameter, k: usize) -> Result<SubBasisDecomposition> {
    cap("sub-basis size", k, 5)?;
    let table = class_table(k).expect("class table");
    let sub = spanning_sub_matrix(k)?;
    let classes = table.reps().len();
    let mut order: Vec<usize> = (0..classes).collect();
    order.sort_by_key(|&c| (table.reps()[c].count_ones(), table.reps()[c]));
    let mut alpha = vec![Rational::zero(); classes];
    for &h in &order {
        let mut a = phi.evaluate_key(table.key(h))?;
        for f in 0..classes {
            if f != h && sub[h][f] != 0 {
                a -= &alpha[f] * rat(sub[h][f] as i64);
            }
        }
        alpha[h] = a;
    }
    let chi = all_alternating_enumerators(phi, k)?;
    for (c, (key, x)) in chi.iter().enumerate() {
        let expected = if key.edge_count() % 2 == 0 { x.clone() } else { -x.clone() };
        invariant(alpha[c] == expected, || {
            format!("α({key}) = {} but (-1)^#E·χ̂ = {expected}", alpha[c])
        })?;
    }
    Ok(SubBasisDecomposition {
        k,
        coefficients: (0..classes).map(|c| (table.key(c), alpha[c].clone())).collect(),
    })
}
