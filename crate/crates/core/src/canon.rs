//! Canonical forms by exhaustive permutation minimization, and graph6.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{cap, Error, Result};
use crate::graph::{slot, slot_count, Graph};
use crate::util::all_permutations;

pub const CANON_CAP: usize = 8;
const TABLE_CAP: usize = 7;

/// Minimum slot bitmap over all relabelings, tagged with the vertex count.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    pub n: u8,
    pub mask: u64,
}

impl CanonicalKey {
    pub fn graph(&self) -> Graph {
        Graph::from_slot_mask(self.n as usize, self.mask)
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(&self.graph()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGraph {
    pub graph: Graph,
    pub key: CanonicalKey,
}

/// For each permutation, where each slot goes.
fn slot_maps(n: usize) -> Vec<Vec<u8>> {
    let pairs = crate::graph::slot_pairs(n);
    all_permutations(n)
        .into_iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    slot(n, a, b) as u8
                })
                .collect()
        })
        .collect()
}

#[inline]
fn apply(map: &[u8], mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let s = m.trailing_zeros() as usize;
        out |= 1 << map[s];
        m &= m - 1;
    }
    out
}

/// Labeled-mask to isomorphism-class lookup for one vertex count.
pub struct ClassTable {
    pub n: usize,
    class_of: Vec<u32>,
    reps: Vec<u64>,
}

impl ClassTable {
    fn build(n: usize) -> ClassTable {
        let maps = slot_maps(n);
        let size = 1usize << slot_count(n);
        let mut class_of = vec![u32::MAX; size];
        let mut reps = Vec::new();
        for m in 0..size {
            if class_of[m] != u32::MAX {
                continue;
            }
            // scanning in increasing order, the first unseen mask is its orbit minimum
            let id = reps.len() as u32;
            reps.push(m as u64);
            for map in &maps {
                class_of[apply(map, m as u64) as usize] = id;
            }
        }
        ClassTable { n, class_of, reps }
    }

    #[inline]
    pub fn class(&self, mask: u64) -> usize {
        self.class_of[mask as usize] as usize
    }

    /// Canonical masks in increasing order; index = class id.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn key(&self, class: usize) -> CanonicalKey {
        CanonicalKey { n: self.n as u8, mask: self.reps[class] }
    }
}

pub fn class_table(n: usize) -> Option<&'static ClassTable> {
    static TABLES: [OnceLock<ClassTable>; TABLE_CAP + 1] = [const { OnceLock::new() }; TABLE_CAP + 1];
    (n <= TABLE_CAP).then(|| TABLES[n].get_or_init(|| ClassTable::build(n)))
}

fn eight_maps() -> &'static Vec<Vec<u8>> {
    static MAPS: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    MAPS.get_or_init(|| slot_maps(8))
}

/// Canonical key of a labeled slot mask on `n <= 8` vertices.
pub fn key_of_mask(n: usize, mask: u64) -> CanonicalKey {
    if let Some(t) = class_table(n) {
        return t.key(t.class(mask));
    }
    assert_eq!(n, 8);
    let best = eight_maps().iter().map(|m| apply(m, mask)).min().expect("nonempty");
    CanonicalKey { n: 8, mask: best }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    cap("canonical form vertex count", g.n(), CANON_CAP)?;
    Ok(key_of_mask(g.n(), g.slot_mask()))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph> {
    let key = canonical_key(g)?;
    Ok(CanonicalGraph { graph: key.graph(), key })
}

/// One representative per isomorphism class, sorted by key.
pub fn enumerate_canonical_graphs(k: usize) -> Result<Vec<CanonicalGraph>> {
    cap("enumeration size", k, CANON_CAP)?;
    let masks: Vec<u64> = if let Some(t) = class_table(k) {
        t.reps().to_vec()
    } else {
        // k = 8: orbit sweep without a stored table
        let size = 1usize << slot_count(8);
        let maps = eight_maps();
        let mut seen = vec![0u64; size / 64];
        let mut reps = Vec::new();
        for m in 0..size {
            if seen[m / 64] >> (m % 64) & 1 == 1 {
                continue;
            }
            reps.push(m as u64);
            for map in maps {
                let img = apply(map, m as u64) as usize;
                seen[img / 64] |= 1 << (img % 64);
            }
        }
        reps
    };
    Ok(masks
        .into_iter()
        .map(|mask| {
            let key = CanonicalKey { n: k as u8, mask };
            CanonicalGraph { graph: key.graph(), key }
        })
        .collect())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 writer handles n <= 62");
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ascii")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    let bad = |why: &str| Error::Parse(format!("graph6 {s:?}: {why}"));
    let (&first, body) = bytes.split_first().ok_or_else(|| bad("empty"))?;
    if !(63..=125).contains(&first) {
        return Err(bad("vertex count byte out of range"));
    }
    let n = (first - 63) as usize;
    let need = slot_count(n).div_ceil(6);
    if body.len() != need {
        return Err(bad("wrong length"));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(bad("byte out of range"));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::all_permutations;

    #[test]
    fn isomorphic_labelings_share_keys() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
        assert_ne!(canonical_key(&a).unwrap(), canonical_key(&Graph::complete(3)).unwrap());
        let keys: std::collections::HashSet<_> = all_permutations(3)
            .iter()
            .map(|p| canonical_key(&Graph::star(3).permuted(p)).unwrap())
            .collect();
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn class_counts() {
        // brute-force oracle: dedupe all labeled graphs by pairwise isomorphism
        for k in 1..=4 {
            let mut reps: Vec<Graph> = Vec::new();
            for m in 0..(1u64 << slot_count(k)) {
                let g = Graph::from_slot_mask(k, m);
                if !reps.iter().any(|r| r.is_isomorphic(&g)) {
                    reps.push(g);
                }
            }
            assert_eq!(enumerate_canonical_graphs(k).unwrap().len(), reps.len());
        }
        let counts: Vec<usize> =
            (1..=4).map(|k| enumerate_canonical_graphs(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11]);
        assert!(canonical_key(&Graph::empty(9)).is_err());
    }

    #[test]
    fn eight_vertex_keys() {
        let g = Graph::cycle(8);
        let h = g.permuted(&[3, 1, 7, 0, 2, 6, 5, 4]);
        assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        assert_ne!(canonical_key(&g).unwrap(), canonical_key(&Graph::path(8)).unwrap());
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::path(5)), "DhC");
        let p = Graph::cycle(9);
        assert_eq!(from_graph6(&to_graph6(&p)).unwrap(), p);
        assert!(from_graph6("C~~").is_err());
    }
}
