use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rearranges into the next lexicographic permutation; false after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `q = p^e` with `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Residue of an integral rational in `[0, p)`.
pub fn residue(x: &Rational, p: u64) -> Option<u64> {
    if !x.is_integer() {
        return None;
    }
    let m = BigInt::from(p);
    let r = ((x.numer() % &m) + &m) % &m;
    Some(u64::try_from(r).expect("residue fits"))
}

pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, p: u64) -> Option<u64> {
    (a % p != 0).then(|| mod_pow(a, p - 2, p))
}

/// In-place subset-sum (zeta) transform: `f[S] <- Σ_{T ⊆ S} f[T]`.
pub fn zeta_transform<T: Clone + std::ops::AddAssign>(f: &mut [T]) {
    let n = f.len().trailing_zeros();
    assert_eq!(f.len(), 1 << n);
    for b in 0..n {
        let bit = 1usize << b;
        for s in 0..f.len() {
            if s & bit != 0 {
                let lower = f[s ^ bit].clone();
                f[s] += lower;
            }
        }
    }
}

/// Inverse of [`zeta_transform`]: `f[S] <- Σ_{T ⊆ S} (-1)^{|S∖T|} f[T]`.
pub fn mobius_transform<T: Clone + std::ops::SubAssign>(f: &mut [T]) {
    let n = f.len().trailing_zeros();
    assert_eq!(f.len(), 1 << n);
    for b in 0..n {
        let bit = 1usize << b;
        for s in 0..f.len() {
            if s & bit != 0 {
                let lower = f[s ^ bit].clone();
                f[s] -= lower;
            }
        }
    }
}

/// The one generator used by every randomized routine.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, 1/2)`: slots visited in row-major order, one coin per slot.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_graph_p(rng, n, 0.5)
}

pub fn random_graph_p<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
