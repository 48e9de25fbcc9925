//! Splitting `M_H`, element splitting `M'_H` and es-splitting `M^e_H`.
//!
//! All three act on the stored canonical representation. Because binary
//! matroids are uniquely representable, appending the indicator row of `H` to
//! any representation of the same matroid gives the same matroid.

use crate::error::{Error, Result};
use crate::gf2::BitRow;
use crate::matroid::BinaryMatroid;

/// Prefix for the element added by element splitting (`γ1`, `γ2`, ...).
pub const SPLIT_PREFIX: &str = "γ";
/// Prefix for the parallel copy added by es-splitting (`γp1`, `γp2`, ...).
pub const PARALLEL_PREFIX: &str = "γp";

/// The set `H` and, for es-splitting, the element `e ∈ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub set: Vec<String>,
    pub pivot: Option<String>,
}

impl SplitSpec {
    pub fn new<S: AsRef<str>>(set: &[S], pivot: Option<&str>) -> Self {
        let mut set: Vec<String> = set.iter().map(|s| s.as_ref().to_string()).collect();
        set.sort();
        set.dedup();
        SplitSpec {
            set,
            pivot: pivot.map(str::to_string),
        }
    }

    pub fn validate(&self, m: &BinaryMatroid) -> Result<()> {
        m.indices_of(&self.set)?;
        if let Some(e) = &self.pivot {
            m.index_of(e)?;
            if !self.set.contains(e) {
                return Err(Error::Precondition(format!("pivot `{e}` is not in the split set")));
            }
        }
        Ok(())
    }
}

fn indicator<S: AsRef<str>>(m: &BinaryMatroid, h: &[S]) -> Result<BitRow> {
    Ok(BitRow::indicator(m.indices_of(h)?))
}

/// `M_H`: append the indicator row of `H`. Ground set unchanged.
pub fn splitting<S: AsRef<str>>(m: &BinaryMatroid, h: &[S]) -> Result<BinaryMatroid> {
    let row = indicator(m, h)?;
    BinaryMatroid::new(&m.matrix().append_row(row)?, m.labels().to_vec())
}

/// `M'_H` together with the label of the new element.
pub fn element_splitting_labelled<S: AsRef<str>>(
    m: &BinaryMatroid,
    h: &[S],
) -> Result<(BinaryMatroid, String)> {
    let row = indicator(m, h)?;
    let gamma = m.fresh_label(SPLIT_PREFIX);
    let with_row = m.matrix().append_row(row)?;
    let unit = BitRow::indicator([with_row.nrows() - 1]);
    let mut labels = m.labels().to_vec();
    labels.push(gamma.clone());
    let out = BinaryMatroid::new(&with_row.append_column(unit)?, labels)?;
    Ok((out, gamma))
}

/// `M'_H`: append the indicator row of `H` and a unit column for a fresh
/// element `γk` that is nonzero only in the new row.
pub fn element_splitting<S: AsRef<str>>(m: &BinaryMatroid, h: &[S]) -> Result<BinaryMatroid> {
    element_splitting_labelled(m, h).map(|(m, _)| m)
}

/// Adds a fresh element parallel to `e`; returns the matroid and its label.
pub fn add_parallel(m: &BinaryMatroid, e: &str) -> Result<(BinaryMatroid, String)> {
    let i = m.index_of(e)?;
    let label = m.fresh_label(PARALLEL_PREFIX);
    Ok((m.add_column(label.clone(), m.column(i))?, label))
}

/// Labels produced by [`es_splitting_labelled`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EsLabels {
    pub parallel: String,
    pub split: String,
}

/// `M^e_H` with the labels of the two added elements.
pub fn es_splitting_labelled<S: AsRef<str>>(
    m: &BinaryMatroid,
    h: &[S],
    e: &str,
) -> Result<(BinaryMatroid, EsLabels)> {
    let spec = SplitSpec::new(h, Some(e));
    spec.validate(m)?;
    let (with_copy, parallel) = add_parallel(m, e)?;
    let (out, split) = element_splitting_labelled(&with_copy, &spec.set)?;
    Ok((out, EsLabels { parallel, split }))
}

/// `M^e_H`: adjoin a parallel copy of `e ∈ H`, then element-split by `H`.
pub fn es_splitting<S: AsRef<str>>(m: &BinaryMatroid, h: &[S], e: &str) -> Result<BinaryMatroid> {
    es_splitting_labelled(m, h, e).map(|(m, _)| m)
}
