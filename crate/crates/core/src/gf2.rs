//! Dense linear algebra over GF(2).
//!
//! Rows are fixed-width bit vectors packed into machine words: column `j`
//! lives in word `j / 64`, bit `j % 64`. The width is a compile-time constant
//! ([`MAX_COLS`]); wider matrices are rejected with [`Error::TooManyColumns`].

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of 64-bit words per row.
pub const WORDS: usize = 2;

/// Largest supported number of columns (and, for transposition, rows).
pub const MAX_COLS: usize = WORDS * 64;

/// A bit vector of up to [`MAX_COLS`] entries.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow([u64; WORDS]);

impl BitRow {
    pub const fn zero() -> Self {
        BitRow([0; WORDS])
    }

    /// Vector with ones exactly at `indices`.
    pub fn indicator<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut r = Self::zero();
        for j in indices {
            r.set(j, true);
        }
        r
    }

    /// The first `n` bits set.
    pub fn ones(n: usize) -> Self {
        debug_assert!(n <= MAX_COLS);
        let mut r = Self::zero();
        for (w, word) in r.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        r
    }

    #[inline]
    pub fn get(&self, j: usize) -> bool {
        (self.0[j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, j: usize, value: bool) {
        let bit = 1u64 << (j % 64);
        if value {
            self.0[j / 64] |= bit;
        } else {
            self.0[j / 64] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, j: usize) {
        self.0[j / 64] ^= 1u64 << (j % 64);
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    #[inline]
    pub fn lowest_set(&self) -> Option<usize> {
        for (w, &word) in self.0.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Gathers the bits at `cols` into positions `0..cols.len()`.
    pub fn select(&self, cols: &[usize]) -> Self {
        let mut r = Self::zero();
        for (k, &j) in cols.iter().enumerate() {
            if self.get(j) {
                r.set(k, true);
            }
        }
        r
    }

    /// True when every bit at or above `width` is clear.
    fn fits(&self, width: usize) -> bool {
        (*self & !Self::ones(width)).is_zero()
    }
}

impl std::ops::Not for BitRow {
    type Output = BitRow;
    fn not(self) -> BitRow {
        let mut r = self;
        for w in r.0.iter_mut() {
            *w = !*w;
        }
        r
    }
}

impl BitXor for BitRow {
    type Output = BitRow;
    #[inline]
    fn bitxor(mut self, rhs: BitRow) -> BitRow {
        self ^= rhs;
        self
    }
}

impl BitXorAssign for BitRow {
    #[inline]
    fn bitxor_assign(&mut self, rhs: BitRow) {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a ^= b;
        }
    }
}

impl BitAnd for BitRow {
    type Output = BitRow;
    #[inline]
    fn bitand(mut self, rhs: BitRow) -> BitRow {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a &= b;
        }
        self
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// A dense 0/1 matrix. Values are immutable: every edit returns a new matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BitRow>,
}

/// Reduced row-echelon form with zero rows removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Gf2Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Result<Self> {
        check_width(ncols)?;
        Ok(Gf2Matrix {
            nrows,
            ncols,
            rows: vec![BitRow::zero(); nrows],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_width(n)?;
        Ok(Gf2Matrix {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| BitRow::indicator([i])).collect(),
        })
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitRow>) -> Result<Self> {
        check_width(ncols)?;
        if let Some(bad) = rows.iter().find(|r| !r.fits(ncols)) {
            let index = bad.iter_ones().last().unwrap_or(0);
            return Err(Error::IndexOutOfRange {
                index,
                limit: ncols,
            });
        }
        Ok(Gf2Matrix {
            nrows: rows.len(),
            ncols,
            rows,
        })
    }

    /// Builds a matrix from nested 0/1 slices; every row must have `ncols` entries.
    pub fn from_bits<R: AsRef<[u8]>>(ncols: usize, rows: &[R]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let r = r.as_ref();
            if r.len() != ncols {
                return Err(Error::WidthMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
            out.push(BitRow::indicator(
                r.iter().enumerate().filter(|(_, &b)| b != 0).map(|(j, _)| j),
            ));
        }
        Self::from_rows(ncols, out)
    }

    /// Builds a matrix of height `nrows` from column vectors.
    pub fn from_columns(nrows: usize, cols: &[BitRow]) -> Result<Self> {
        check_width(cols.len())?;
        let mut rows = vec![BitRow::zero(); nrows];
        for (j, c) in cols.iter().enumerate() {
            for i in c.iter_ones() {
                if i >= nrows {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        limit: nrows,
                    });
                }
                rows[i].set(j, true);
            }
        }
        Ok(Gf2Matrix {
            nrows,
            ncols: cols.len(),
            rows,
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Result<BitRow> {
        self.rows.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            limit: self.nrows,
        })
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    /// Column `j` as a bit vector indexed by row.
    pub fn column(&self, j: usize) -> Result<BitRow> {
        if j >= self.ncols {
            return Err(Error::IndexOutOfRange {
                index: j,
                limit: self.ncols,
            });
        }
        if self.nrows > MAX_COLS {
            return Err(Error::TooManyColumns {
                got: self.nrows,
                max: MAX_COLS,
            });
        }
        Ok(BitRow::indicator(
            (0..self.nrows).filter(|&i| self.rows[i].get(j)),
        ))
    }

    /// All columns, each indexed by row.
    pub fn columns(&self) -> Result<Vec<BitRow>> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    pub fn append_row(&self, r: BitRow) -> Result<Self> {
        if !r.fits(self.ncols) {
            return Err(Error::WidthMismatch {
                expected: self.ncols,
                got: r.iter_ones().last().map_or(0, |j| j + 1),
            });
        }
        let mut rows = self.rows.clone();
        rows.push(r);
        Ok(Gf2Matrix {
            nrows: self.nrows + 1,
            ncols: self.ncols,
            rows,
        })
    }

    /// Appends a column whose entry in row `i` is `c[i]`.
    pub fn append_column(&self, c: BitRow) -> Result<Self> {
        check_width(self.ncols + 1)?;
        if self.nrows > MAX_COLS {
            return Err(Error::TooManyColumns {
                got: self.nrows,
                max: MAX_COLS,
            });
        }
        if !c.fits(self.nrows) {
            return Err(Error::WidthMismatch {
                expected: self.nrows,
                got: c.iter_ones().last().map_or(0, |i| i + 1),
            });
        }
        let j = self.ncols;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = *r;
                if c.get(i) {
                    r.set(j, true);
                }
                r
            })
            .collect();
        Ok(Gf2Matrix {
            nrows: self.nrows,
            ncols: j + 1,
            rows,
        })
    }

    /// Keeps only the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        check_width(cols.len())?;
        if let Some(&bad) = cols.iter().find(|&&j| j >= self.ncols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                limit: self.ncols,
            });
        }
        Ok(Gf2Matrix {
            nrows: self.nrows,
            ncols: cols.len(),
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
        })
    }

    pub fn delete_columns(&self, cols: &[usize]) -> Result<Self> {
        if let Some(&bad) = cols.iter().find(|&&j| j >= self.ncols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                limit: self.ncols,
            });
        }
        let keep: Vec<usize> = (0..self.ncols).filter(|j| !cols.contains(j)).collect();
        self.select_columns(&keep)
    }

    pub fn delete_row(&self, i: usize) -> Result<Self> {
        if i >= self.nrows {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.nrows,
            });
        }
        let mut rows = self.rows.clone();
        rows.remove(i);
        Ok(Gf2Matrix {
            nrows: self.nrows - 1,
            ncols: self.ncols,
            rows,
        })
    }

    pub fn transpose(&self) -> Result<Self> {
        check_width(self.nrows)?;
        let rows = (0..self.ncols)
            .map(|j| BitRow::indicator((0..self.nrows).filter(|&i| self.rows[i].get(j))))
            .collect();
        Ok(Gf2Matrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        })
    }

    /// Reduced row-echelon form; rows are ordered by pivot column and zero
    /// rows are dropped, so equal row spaces give identical results.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.ncols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && r.get(col) {
                    *r ^= pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Rref {
            matrix: Gf2Matrix {
                nrows: rank,
                ncols: self.ncols,
                rows,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_vectors(self.rows.iter().copied())
    }

    pub fn row_space_equal(&self, other: &Gf2Matrix) -> Result<bool> {
        if self.ncols != other.ncols {
            return Err(Error::WidthMismatch {
                expected: self.ncols,
                got: other.ncols,
            });
        }
        Ok(self.rref().matrix == other.rref().matrix)
    }

    /// Whether `r` is a GF(2) combination of the rows.
    pub fn in_row_space(&self, r: BitRow) -> bool {
        let base = self.rank();
        rank_of_vectors(self.rows.iter().copied().chain(std::iter::once(r))) == base
    }
}

/// Rank of a family of vectors, by an xor basis keyed on lowest set bit.
pub fn rank_of_vectors<I: IntoIterator<Item = BitRow>>(vectors: I) -> usize {
    let mut basis: Vec<BitRow> = Vec::new();
    for mut v in vectors {
        for b in &basis {
            let p = b.lowest_set().expect("basis vectors are nonzero");
            if v.get(p) {
                v ^= *b;
            }
        }
        if !v.is_zero() {
            let p = v.lowest_set().unwrap();
            for b in basis.iter_mut() {
                if b.get(p) {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

fn check_width(ncols: usize) -> Result<()> {
    if ncols > MAX_COLS {
        Err(Error::TooManyColumns {
            got: ncols,
            max: MAX_COLS,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn write_bits(f: &mut impl fmt::Write, r: &BitRow, width: usize) -> fmt::Result {
    for j in 0..width {
        f.write_char(if r.get(j) { '1' } else { '0' })?;
    }
    Ok(())
}

pub(crate) fn parse_bits(line: usize, s: &str, width: usize) -> Result<BitRow> {
    if s.chars().count() != width {
        return Err(Error::parse(
            line,
            format!("expected {width} entries, found {}", s.chars().count()),
        ));
    }
    let mut r = BitRow::zero();
    for (j, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => r.set(j, true),
            other => return Err(Error::parse(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(r)
}

pub(crate) fn parse_count(line: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("expected a count, found `{s}`")))
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.nrows, self.ncols)?;
        for r in &self.rows {
            write_bits(f, r, self.ncols)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Text format: `"<nrows> <ncols>"`, then one line of `0`/`1` characters per row.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.nrows, self.ncols)?;
        for r in &self.rows {
            write_bits(f, r, self.ncols)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Gf2Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(|l| l.trim_end_matches('\r'));
        let header = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::parse(1, "expected `<nrows> <ncols>`"));
        }
        let nrows = parse_count(1, dims[0])?;
        let ncols = parse_count(1, dims[1])?;
        check_width(ncols)?;
        let mut rows = Vec::with_capacity(nrows);
        for i in 0..nrows {
            let line = lines
                .next()
                .ok_or_else(|| Error::parse(i + 2, "missing row"))?;
            rows.push(parse_bits(i + 2, line.trim(), ncols)?);
        }
        if let Some((k, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(
                nrows + 2 + k,
                format!("trailing content `{extra}`"),
            ));
        }
        Gf2Matrix::from_rows(ncols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Gf2Matrix {
        Gf2Matrix::from_bits(6, &[[1, 0, 0, 1, 0, 1], [0, 1, 0, 0, 1, 1]]).unwrap()
    }

    #[test]
    fn rref_of_a2() {
        let r = a2().rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix, a2());
    }

    #[test]
    fn rref_of_zero_matrix_is_empty() {
        let r = Gf2Matrix::zeros(3, 4).unwrap().rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix.nrows(), 0);
        assert_eq!(r.matrix.ncols(), 4);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn appended_split_row_raises_rank() {
        let h = a2().append_row(BitRow::indicator([0, 1, 2])).unwrap();
        assert_eq!(h.nrows(), 3);
        assert_eq!(h.rank(), 3);
        assert_eq!(h.to_string(), "3 6\n100101\n010011\n111000\n");
    }

    #[test]
    fn row_space_equality_examples() {
        let a = a2();
        assert!(a.row_space_equal(&a).unwrap());
        let summed = Gf2Matrix::from_rows(6, vec![a.rows()[0], a.rows()[0] ^ a.rows()[1]]).unwrap();
        assert!(a.row_space_equal(&summed).unwrap());
        let split = a.append_row(BitRow::indicator([0, 1, 2])).unwrap();
        assert!(!a.row_space_equal(&split).unwrap());
        let narrow = Gf2Matrix::zeros(1, 5).unwrap();
        assert!(matches!(
            a.row_space_equal(&narrow),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn structural_edits() {
        let a = a2();
        assert_eq!(a.delete_columns(&[]).unwrap(), a);
        let loopy = Gf2Matrix::identity(2)
            .unwrap()
            .append_column(BitRow::zero())
            .unwrap();
        assert_eq!(loopy.ncols(), 3);
        assert!(loopy.column(2).unwrap().is_zero());
        assert_eq!(a.column(5).unwrap(), BitRow::indicator([0, 1]));
        assert!(a.column(6).is_err());
        let d = a.delete_columns(&[0, 3]).unwrap();
        assert_eq!(d.to_string(), "2 4\n0001\n1011\n");
        assert!(a.delete_columns(&[9]).is_err());
    }

    #[test]
    fn width_limit_is_enforced() {
        assert!(matches!(
            Gf2Matrix::zeros(1, MAX_COLS + 1),
            Err(Error::TooManyColumns { .. })
        ));
        assert!(Gf2Matrix::zeros(1, MAX_COLS).is_ok());
    }

    #[test]
    fn text_format_rejects_garbage() {
        assert!("2 3\n101\n".parse::<Gf2Matrix>().is_err());
        assert!("1 3\n1a1\n".parse::<Gf2Matrix>().is_err());
        assert!("1 3\n1011\n".parse::<Gf2Matrix>().is_err());
        assert!("x 3\n".parse::<Gf2Matrix>().is_err());
        let m: Gf2Matrix = "0 4\n".parse().unwrap();
        assert_eq!((m.nrows(), m.ncols()), (0, 4));
        let e: Gf2Matrix = "2 0\n\n\n".parse().unwrap();
        assert_eq!(e.to_string(), "2 0\n\n\n");
    }

    #[test]
    fn bits_past_width_are_rejected() {
        assert!(Gf2Matrix::from_rows(3, vec![BitRow::indicator([3])]).is_err());
        assert!(a2().append_row(BitRow::indicator([6])).is_err());
    }

    #[test]
    fn iter_ones_spans_words() {
        let r = BitRow::indicator([0, 63, 64, 127]);
        assert_eq!(r.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 127]);
        assert_eq!(r.count_ones(), 4);
        assert_eq!(BitRow::ones(70).count_ones(), 70);
    }
}
