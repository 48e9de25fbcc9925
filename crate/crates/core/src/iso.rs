//! Certificate-producing isomorphism test for binary matroids.
//!
//! Backtracking over column bijections. Elements are paired only when their
//! fingerprints agree, and every partial assignment must keep the two
//! restrictions equal. The restriction check is incremental: both sides keep a
//! greedy basis of the assigned prefix, and a new element must be independent
//! on both sides or have the same fundamental circuit on both sides.

use std::collections::BTreeMap;

use crate::gf2::BitRow;
use crate::matroid::BinaryMatroid;

/// Pattern label to host label.
pub type Bijection = BTreeMap<String, String>;

/// Isomorphism-invariant data about one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementFingerprint {
    pub is_loop: bool,
    pub is_coloop: bool,
    pub parallel: usize,
    pub triangles: usize,
    pub quads: usize,
}

/// Per-element fingerprints, indexed like the ground set.
pub fn fingerprints(m: &BinaryMatroid) -> Vec<ElementFingerprint> {
    let small = m.small_circuit_indices(4);
    (0..m.len())
        .map(|i| {
            let count = |size: usize| {
                small
                    .iter()
                    .filter(|c| c.len() == size && c.contains(&i))
                    .count()
            };
            ElementFingerprint {
                is_loop: m.is_loop(i),
                is_coloop: m.is_coloop(i),
                parallel: m.parallel_class_size(i),
                triangles: count(3),
                quads: count(4),
            }
        })
        .collect()
}

/// Sorted multiset of fingerprints; equal for isomorphic matroids.
pub fn fingerprint_profile(m: &BinaryMatroid) -> Vec<ElementFingerprint> {
    let mut f = fingerprints(m);
    f.sort();
    f
}

#[derive(Clone, Default)]
struct PrefixBasis {
    // (vector, combination of prefix positions it equals, pivot bit)
    entries: Vec<(BitRow, u128, usize)>,
}

impl PrefixBasis {
    /// Reduces `v`; returns the residual and the prefix positions used.
    fn reduce(&self, mut v: BitRow) -> (BitRow, u128) {
        let mut mask = 0u128;
        for &(b, m, p) in &self.entries {
            if v.get(p) {
                v ^= b;
                mask ^= m;
            }
        }
        (v, mask)
    }
}

/// Tracks two column sequences that must stay equal as matroids position by
/// position.
#[derive(Clone, Default)]
pub(crate) struct PairedBasis {
    a: PrefixBasis,
    b: PrefixBasis,
}

impl PairedBasis {
    /// Appends one column to each side at prefix position `pos`. Returns
    /// `None` if the extended prefixes differ as matroids, otherwise whether
    /// the columns were independent (and so pushed onto the bases).
    pub(crate) fn try_push(&mut self, va: BitRow, vb: BitRow, pos: usize) -> Option<bool> {
        let (ra, ma) = self.a.reduce(va);
        let (rb, mb) = self.b.reduce(vb);
        match (ra.is_zero(), rb.is_zero()) {
            (true, true) if ma == mb => Some(false),
            (false, false) => {
                let bit = 1u128 << pos;
                self.a.entries.push((ra, ma ^ bit, ra.lowest_set().unwrap()));
                self.b.entries.push((rb, mb ^ bit, rb.lowest_set().unwrap()));
                Some(true)
            }
            _ => None,
        }
    }

    pub(crate) fn undo(&mut self, pushed: bool) {
        if pushed {
            self.a.entries.pop();
            self.b.entries.pop();
        }
    }
}

struct Search<'a> {
    a: &'a BinaryMatroid,
    b: &'a BinaryMatroid,
    order: Vec<usize>,
    cands: Vec<Vec<usize>>,
    used: Vec<bool>,
    assign: Vec<usize>,
    basis: PairedBasis,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let ai = self.order[depth];
        let va = self.a.column(ai);
        for k in 0..self.cands[depth].len() {
            let bi = self.cands[depth][k];
            if self.used[bi] {
                continue;
            }
            let Some(pushed) = self.basis.try_push(va, self.b.column(bi), depth) else {
                continue;
            };
            self.used[bi] = true;
            self.assign.push(bi);
            if self.run(depth + 1) {
                return true;
            }
            self.assign.pop();
            self.used[bi] = false;
            self.basis.undo(pushed);
        }
        false
    }
}

/// Finds a bijection from `a`'s labels to `b`'s labels under which the two
/// matroids are equal. The search visits `a`'s labels in sorted order and tries
/// `b`'s labels in sorted order, so the result is the lexicographically least
/// such bijection.
pub fn isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> Option<Bijection> {
    if a.len() != b.len() || a.rank() != b.rank() || a.len() > 128 {
        return None;
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    isomorphic_with(a, b, &fa, &fb)
}

/// [`isomorphic`] with precomputed fingerprints.
pub fn isomorphic_with(
    a: &BinaryMatroid,
    b: &BinaryMatroid,
    fa: &[ElementFingerprint],
    fb: &[ElementFingerprint],
) -> Option<Bijection> {
    if a.len() != b.len() || a.rank() != b.rank() {
        return None;
    }
    let order = a.sorted_indices();
    let b_sorted = b.sorted_indices();
    let cands = order
        .iter()
        .map(|&i| {
            b_sorted
                .iter()
                .copied()
                .filter(|&j| fa[i] == fb[j])
                .collect()
        })
        .collect();
    let mut s = Search {
        a,
        b,
        order,
        cands,
        used: vec![false; b.len()],
        assign: Vec::with_capacity(a.len()),
        basis: PairedBasis::default(),
    };
    if !s.run(0) {
        return None;
    }
    Some(
        s.order
            .iter()
            .zip(&s.assign)
            .map(|(&i, &j)| (a.labels()[i].clone(), b.labels()[j].clone()))
            .collect(),
    )
}

/// Checks a bijection independently: relabels `a` through it and compares
/// canonical forms with `b`.
pub fn verify_bijection(a: &BinaryMatroid, b: &BinaryMatroid, map: &Bijection) -> bool {
    if map.len() != a.len() || a.len() != b.len() {
        return false;
    }
    if a.labels().iter().any(|l| !map.contains_key(l)) {
        return false;
    }
    let mut images: Vec<&String> = map.values().collect();
    images.sort();
    images.dedup();
    if images.len() != map.len() {
        return false;
    }
    match a.relabel(map) {
        Ok(r) => r.same_matroid(b),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Matrix;

    fn k4() -> BinaryMatroid {
        let m = Gf2Matrix::from_bits(
            6,
            &[[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]],
        )
        .unwrap();
        BinaryMatroid::with_default_labels(&m).unwrap()
    }

    #[test]
    fn identity_is_found_first() {
        let k = k4();
        let map = isomorphic(&k, &k).unwrap();
        assert!(map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn split_a2_is_k4() {
        let m = Gf2Matrix::from_bits(
            6,
            &[[1, 0, 0, 1, 0, 1], [0, 1, 0, 0, 1, 1], [1, 1, 1, 0, 0, 0]],
        )
        .unwrap();
        let h = BinaryMatroid::new(&m, vec!["x", "y", "z", "a", "b", "c"]).unwrap();
        let map = isomorphic(&h, &k4()).unwrap();
        assert!(verify_bijection(&h, &k4(), &map));
    }

    #[test]
    fn k4_is_self_dual() {
        let k = k4();
        let map = isomorphic(&k.dual(), &k).unwrap();
        assert!(verify_bijection(&k.dual(), &k, &map));
    }

    #[test]
    fn different_rank_or_size_is_rejected() {
        let k = k4();
        assert!(isomorphic(&k, &k.delete(&["e1"]).unwrap()).is_none());
        assert!(isomorphic(&k, &k.dual().contract(&["e1"]).unwrap()).is_none());
    }

    #[test]
    fn tampered_bijection_fails_verification() {
        let k = k4();
        let mut map = isomorphic(&k, &k).unwrap();
        map.insert("e1".into(), "e4".into());
        map.insert("e4".into(), "e1".into());
        assert!(!verify_bijection(&k, &k, &map));
    }
}
