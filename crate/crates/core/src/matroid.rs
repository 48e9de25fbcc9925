//! Binary matroids held as a canonical GF(2) representation plus labels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{parse_bits, parse_count, rank_of_vectors, write_bits, BitRow, Gf2Matrix};

/// Default bound on the ground-set size for circuit enumeration.
pub const CIRCUIT_BOUND: usize = 16;

/// A binary matroid: the column matroid of a GF(2) matrix, with one label per
/// column.
///
/// The stored matrix is always in reduced row-echelon form with no zero rows,
/// so two matroids on the same labels in the same order are equal exactly
/// when their stored matrices are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    mat: Gf2Matrix,
    labels: Vec<String>,
    cols: Vec<BitRow>,
}

impl BinaryMatroid {
    /// Vector matroid of `mat`; the matrix is canonicalized.
    pub fn new<S: Into<String>>(mat: &Gf2Matrix, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != mat.ncols() {
            return Err(Error::WidthMismatch {
                expected: mat.ncols(),
                got: labels.len(),
            });
        }
        check_distinct(&labels)?;
        Ok(Self::from_canonical(mat.rref().matrix, labels))
    }

    /// Vector matroid with labels `e1`, `e2`, ...
    pub fn with_default_labels(mat: &Gf2Matrix) -> Result<Self> {
        let labels = (1..=mat.ncols()).map(|i| format!("e{i}")).collect();
        Self::new::<String>(mat, labels)
    }

    /// Matroid of column vectors, each indexed by row.
    pub fn from_columns<S: Into<String>>(labels: Vec<S>, cols: &[BitRow]) -> Result<Self> {
        let height = cols
            .iter()
            .filter_map(|c| c.iter_ones().last())
            .max()
            .map_or(0, |i| i + 1);
        Self::new(&Gf2Matrix::from_columns(height, cols)?, labels)
    }

    fn from_canonical(mat: Gf2Matrix, labels: Vec<String>) -> Self {
        let cols = mat.columns().expect("canonical matrices have rank within bounds");
        BinaryMatroid { mat, labels, cols }
    }

    /// The canonical (RREF, full row rank) representation.
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.mat
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.mat.nrows()
    }

    pub fn column(&self, i: usize) -> BitRow {
        self.cols[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Indices of `labels`, sorted and deduplicated.
    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn labels_of(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.labels[i].clone()).collect()
    }

    /// Element indices ordered by label.
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        idx
    }

    pub fn rank_of_indices(&self, indices: &[usize]) -> usize {
        rank_of_vectors(indices.iter().map(|&i| self.cols[i]))
    }

    pub fn rank_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        Ok(self.rank_of_indices(&self.indices_of(labels)?))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.cols[i].is_zero()
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        let rest: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        self.rank_of_indices(&rest) < self.rank()
    }

    /// Number of elements parallel to `i`, counting `i` itself; 0 for loops.
    pub fn parallel_class_size(&self, i: usize) -> usize {
        if self.is_loop(i) {
            return 0;
        }
        self.cols.iter().filter(|&&c| c == self.cols[i]).count()
    }

    /// Restriction to the given columns, in the given order.
    pub fn restrict_indices(&self, keep: &[usize]) -> Self {
        let mat = self
            .mat
            .select_columns(keep)
            .expect("indices come from this matroid");
        Self::from_canonical(mat.rref().matrix, self.labels_of(keep))
    }

    pub fn delete_indices(&self, del: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.len()).filter(|j| !del.contains(j)).collect();
        self.restrict_indices(&keep)
    }

    pub fn delete<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        Ok(self.delete_indices(&self.indices_of(labels)?))
    }

    /// Contracts the listed elements one at a time; loops are deleted.
    pub fn contract<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        self.indices_of(labels)?;
        let mut m = self.clone();
        for l in labels {
            if let Ok(i) = m.index_of(l.as_ref()) {
                m = m.contract_one(i);
            }
        }
        Ok(m)
    }

    pub fn contract_indices(&self, con: &[usize]) -> Self {
        let labels = self.labels_of(con);
        self.contract(&labels).expect("indices come from this matroid")
    }

    fn contract_one(&self, y: usize) -> Self {
        let rows = self.mat.rows();
        let Some(p) = rows.iter().position(|r| r.get(y)) else {
            return self.delete_indices(&[y]);
        };
        let pivot = rows[p];
        let reduced: Vec<BitRow> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, &r)| if r.get(y) { r ^ pivot } else { r })
            .collect();
        let mat = Gf2Matrix::from_rows(self.len(), reduced)
            .and_then(|m| m.delete_columns(&[y]))
            .expect("same width");
        let mut labels = self.labels.clone();
        labels.remove(y);
        Self::from_canonical(mat.rref().matrix, labels)
    }

    /// `self \ del / con`, with the two sets disjoint.
    pub fn minor<S: AsRef<str>>(&self, del: &[S], con: &[S]) -> Result<Self> {
        let d = self.indices_of(del)?;
        let c = self.indices_of(con)?;
        if let Some(&i) = d.iter().find(|i| c.contains(i)) {
            return Err(Error::Precondition(format!(
                "`{}` is both deleted and contracted",
                self.labels[i]
            )));
        }
        self.delete(del)?.contract(con)
    }

    /// Dual matroid from the standard form: `[I | D]` becomes `[Dᵀ | I]`.
    pub fn dual(&self) -> Self {
        let rref = self.mat.rref();
        let pivots = &rref.pivots;
        let rows: Vec<BitRow> = (0..self.len())
            .filter(|j| !pivots.contains(j))
            .map(|j| {
                let mut r = BitRow::indicator([j]);
                for (i, &p) in pivots.iter().enumerate() {
                    if self.mat.get(i, j) {
                        r.set(p, true);
                    }
                }
                r
            })
            .collect();
        let mat = Gf2Matrix::from_rows(self.len(), rows).expect("same width");
        Self::from_canonical(mat.rref().matrix, self.labels.clone())
    }

    /// All circuits as index sets (sorted ascending, ordered by size then lexicographically).
    pub fn circuit_indices(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        if n > bound {
            return Err(Error::SizeBound {
                what: "ground set for circuit enumeration",
                got: n,
                limit: bound,
            });
        }
        let mut found: Vec<u64> = Vec::new();
        let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            if found.iter().any(|&c| c & !mask == 0) {
                continue;
            }
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if self.rank_of_indices(&idx) < idx.len() {
                found.push(mask);
            }
        }
        let mut out: Vec<Vec<usize>> = found
            .into_iter()
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// All circuits as label sets, each sorted.
    pub fn circuits(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        Ok(self
            .circuit_indices(bound)?
            .into_iter()
            .map(|c| {
                let mut l = self.labels_of(&c);
                l.sort();
                l
            })
            .collect())
    }

    /// Circuits of size at most `max_size`, without a ground-set bound.
    pub fn small_circuit_indices(&self, max_size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let n = self.len();
        let mut combo = Vec::new();
        for size in 1..=max_size.min(n) {
            for_each_combination(n, size, &mut combo, &mut |s| {
                // binary circuits are exactly the minimal zero-sum sets
                let sum = s.iter().fold(BitRow::zero(), |acc, &i| acc ^ self.cols[i]);
                if sum.is_zero() && !out.iter().any(|c: &Vec<usize>| c.iter().all(|x| s.contains(x))) {
                    out.push(s.to_vec());
                }
            });
        }
        out
    }

    /// Relabels via `map` (old label to new label); unmapped labels are kept.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Self> {
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| map.get(l).cloned().unwrap_or_else(|| l.clone()))
            .collect();
        check_distinct(&labels)?;
        Ok(BinaryMatroid {
            mat: self.mat.clone(),
            labels,
            cols: self.cols.clone(),
        })
    }

    /// The same matroid with columns listed in the given label order.
    pub fn reorder<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::WidthMismatch {
                expected: self.len(),
                got: order.len(),
            });
        }
        let idx = order
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.restrict_indices(&idx))
    }

    /// Equality as matroids on a labelled ground set, regardless of column order.
    pub fn same_matroid(&self, other: &BinaryMatroid) -> bool {
        if self.len() != other.len() || self.rank() != other.rank() {
            return false;
        }
        match other.reorder(&self.labels) {
            Ok(o) => o.mat == self.mat,
            Err(_) => false,
        }
    }

    /// A label `prefix<k>` not yet in the ground set, with the smallest `k >= 1`.
    pub fn fresh_label(&self, prefix: &str) -> String {
        (1..)
            .map(|k| format!("{prefix}{k}"))
            .find(|l| !self.labels.contains(l))
            .unwrap()
    }

    /// Appends a labelled column given in the coordinates of the stored matrix.
    pub fn add_column(&self, label: impl Into<String>, col: BitRow) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.push(label.into());
        Self::new(&self.mat.append_column(col)?, labels)
    }
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(Error::Precondition(format!("invalid label `{l}`")));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    buf: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    fn rec(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        for i in start..=n.saturating_sub(need) {
            if n < need {
                break;
            }
            buf.push(i);
            rec(i + 1, n, k, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    if k <= n {
        rec(0, n, k, buf, f);
    }
}

/// Like [`for_each_combination`], stopping as soon as `f` returns `Some`.
pub(crate) fn find_combination<T>(
    n: usize,
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    fn rec<T>(
        start: usize,
        n: usize,
        k: usize,
        buf: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        if buf.len() == k {
            return f(buf);
        }
        let need = k - buf.len();
        if n < need {
            return None;
        }
        for i in start..=n - need {
            buf.push(i);
            let r = rec(i + 1, n, k, buf, f);
            buf.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    if k > n {
        return None;
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f)
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text format: `matroid <r> <n>`, a line of labels, then `r` rows of `0`/`1`.
impl fmt::Display for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matroid {} {}", self.rank(), self.len())?;
        writeln!(f, "{}", self.labels.join(" "))?;
        for r in self.mat.rows() {
            write_bits(f, r, self.len())?;
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for BinaryMatroid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.trim_end_matches('\r')).collect();
        let header: Vec<&str> = lines
            .first()
            .ok_or_else(|| Error::parse(1, "empty input"))?
            .split_whitespace()
            .collect();
        if header.len() != 3 || header[0] != "matroid" {
            return Err(Error::parse(1, "expected `matroid <r> <n>`"));
        }
        let r = parse_count(1, header[1])?;
        let n = parse_count(1, header[2])?;
        let labels: Vec<String> = lines
            .get(1)
            .map(|l| l.split_whitespace().map(str::to_string).collect())
            .unwrap_or_default();
        if labels.len() != n {
            return Err(Error::parse(
                2,
                format!("expected {n} labels, found {}", labels.len()),
            ));
        }
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let line = lines
                .get(i + 2)
                .ok_or_else(|| Error::parse(i + 3, "missing row"))?;
            rows.push(parse_bits(i + 3, line.trim(), n)?);
        }
        if let Some(k) = lines.iter().skip(r + 2).position(|l| !l.trim().is_empty()) {
            return Err(Error::parse(r + 3 + k, "trailing content"));
        }
        Self::new(&Gf2Matrix::from_rows(n, rows)?, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `[I₃ | 110, 101, 011]`, the cycle matroid of K4.
    fn k4() -> BinaryMatroid {
        let m = Gf2Matrix::from_bits(
            6,
            &[[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]],
        )
        .unwrap();
        BinaryMatroid::with_default_labels(&m).unwrap()
    }

    fn a2_split() -> BinaryMatroid {
        let m = Gf2Matrix::from_bits(
            6,
            &[[1, 0, 0, 1, 0, 1], [0, 1, 0, 0, 1, 1], [1, 1, 1, 0, 0, 0]],
        )
        .unwrap();
        BinaryMatroid::new(&m, vec!["x", "y", "z", "a", "b", "c"]).unwrap()
    }

    #[test]
    fn rank_examples() {
        let k = k4();
        assert_eq!(k.rank_of(k.labels()).unwrap(), 3);
        assert_eq!(k.rank_of::<&str>(&[]).unwrap(), 0);
        assert_eq!(a2_split().rank_of(&["z"]).unwrap(), 1);
        assert!(matches!(k.rank_of(&["nope"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn k4_has_seven_circuits() {
        let c = k4().circuit_indices(CIRCUIT_BOUND).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(c.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(k4().small_circuit_indices(4), c);
    }

    #[test]
    fn single_loop_circuit_and_dual() {
        let m = BinaryMatroid::new(&Gf2Matrix::zeros(0, 1).unwrap(), vec!["l"]).unwrap();
        assert_eq!(m.circuits(CIRCUIT_BOUND).unwrap(), vec![vec!["l".to_string()]]);
        assert!(m.is_loop(0));
        let d = m.dual();
        assert_eq!(d.rank(), 1);
        assert!(d.is_coloop(0));
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn circuit_bound_is_enforced() {
        let m = BinaryMatroid::with_default_labels(&Gf2Matrix::zeros(1, 17).unwrap()).unwrap();
        assert!(matches!(
            m.circuits(CIRCUIT_BOUND),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn contract_single_element_of_k4() {
        let k = k4();
        for l in k.labels() {
            let c = k.contract(&[l]).unwrap();
            assert_eq!((c.rank(), c.len()), (2, 5));
            let pairs = c
                .circuit_indices(CIRCUIT_BOUND)
                .unwrap()
                .into_iter()
                .filter(|c| c.len() == 2)
                .count();
            assert_eq!(pairs, 2);
        }
        assert_eq!(k.contract::<&str>(&[]).unwrap(), k);
    }

    #[test]
    fn contracting_a_loop_deletes_it() {
        let m = a2_split().delete(&["x"]).unwrap();
        let loopy = BinaryMatroid::new(&Gf2Matrix::zeros(0, 2).unwrap(), vec!["p", "q"]).unwrap();
        assert_eq!(loopy.contract(&["p"]).unwrap(), loopy.delete(&["p"]).unwrap());
        assert_eq!(m.len(), 5);
    }

    #[test]
    fn dual_rank_and_involution() {
        let k = k4();
        let d = k.dual();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.dual(), k);
    }

    #[test]
    fn text_round_trip() {
        let m = a2_split();
        let text = m.to_string();
        assert_eq!(text.parse::<BinaryMatroid>().unwrap(), m);
        assert!("matroid 1 2\na a\n11\n".parse::<BinaryMatroid>().is_err());
        assert!("matroid 1 2\na b\n1\n".parse::<BinaryMatroid>().is_err());
        assert!("graph 1 2\n".parse::<BinaryMatroid>().is_err());
    }

    #[test]
    fn same_matroid_ignores_column_order() {
        let m = a2_split();
        let r = m.reorder(&["c", "b", "a", "z", "y", "x"]).unwrap();
        assert_ne!(r, m);
        assert!(r.same_matroid(&m));
        assert!(!m.same_matroid(&m.delete(&["x"]).unwrap()));
    }

    #[test]
    fn minor_rejects_overlap() {
        let m = a2_split();
        assert!(m.minor(&["x"], &["x"]).is_err());
    }

    #[test]
    fn fresh_labels_skip_existing() {
        let m = BinaryMatroid::new(&Gf2Matrix::zeros(0, 2).unwrap(), vec!["γ1", "γ3"]).unwrap();
        assert_eq!(m.fresh_label("γ"), "γ2");
    }
}
