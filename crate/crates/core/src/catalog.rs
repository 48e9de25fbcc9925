//! Named objects: `K4`, `U24`, `F7`, the forbidden minors `G1`..`G7` and the
//! quotient graphs `Q1`..`Q4`, each with an executable defining property.
//!
//! Edge lists are hand transcriptions and only candidates; the properties are
//! authoritative. [`repair_candidates`] searches every multigraph of the same
//! size for graphs satisfying a property, for use when a transcription fails.
//!
//! Triangle-shaped graphs use vertices `0` (bottom left), `1` (bottom right)
//! and `2` (top). Unnamed edges of G1..G7 are labelled `z1`, `z2`,
//! ... so that they sort after `x`, `y`, `z`.

use std::fmt::Write as _;

use crate::census::{enumerate_multigraphs, quotients_of_k4, CensusOptions};
use crate::error::{Error, Result};
use crate::gf2::{BitRow, Gf2Matrix};
use crate::graph::Multigraph;
use crate::iso::isomorphic;
use crate::lifts::{element_splitting, es_splitting};
use crate::matroid::{for_each_combination, BinaryMatroid};
use crate::minor::{has_minor, in_class_gk_unchecked, is_binary_gammoid, k4_matroid, Pattern};

/// All catalog names, in display order.
pub const NAMES: [&str; 13] = [
    "K4", "U24", "F7", "G1", "G2", "G3", "G4", "G6", "G7", "Q1", "Q2", "Q3", "Q4",
];

/// The predicate that pins down a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefiningProperty {
    /// Equal (up to relabelling) to `F7` minus the point `(1,1,1)`.
    FanoMinusPoint,
    /// Rank 3 on all seven nonzero vectors of GF(2)³, and not graphic.
    Fano,
    /// Four elements of rank 2, every pair independent; never a minor of a
    /// binary matroid.
    UniformTwoFour,
    /// Isomorphic to one of the quotients of `M(K4)`.
    QuotientOfK4,
    /// A binary gammoid in `𝒢_k` (isomorphic to `partner` when given) all
    /// of whose single-element deletions and contractions lie outside `𝒢_k`.
    MinimalInClass {
        k: usize,
        partner: Option<&'static str>,
    },
    /// Some 3-set `H` has a non-gammoid element splitting; no single-element
    /// minor has any breaking `H`.
    MinimalElementSplitting,
    /// Some 2-set `H` and `e ∈ H` have a non-gammoid es-splitting; no
    /// single-element minor has any breaking pair.
    MinimalEsSplitting,
}

impl DefiningProperty {
    pub fn description(&self) -> String {
        match self {
            Self::FanoMinusPoint => "cycle matroid equals F7 minus (1,1,1)".into(),
            Self::Fano => "all nonzero vectors of GF(2)^3, not graphic".into(),
            Self::UniformTwoFour => "rank-2 uniform on 4 elements, absent from binary hosts".into(),
            Self::QuotientOfK4 => "isomorphic to a quotient of M(K4)".into(),
            Self::MinimalInClass { k, partner } => match partner {
                Some(p) => format!("isomorphic to M({p}), minimal member of G_{k}"),
                None => format!("binary gammoid, minimal member of G_{k}"),
            },
            Self::MinimalElementSplitting => {
                "element splitting breaks gammoid-ness at some |H| = 3; minimal".into()
            }
            Self::MinimalEsSplitting => {
                "es-splitting breaks gammoid-ness at some |H| = 2; minimal".into()
            }
        }
    }
}

/// Outcome of running a defining property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict {
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict {
            passed: false,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Option<Multigraph>,
    pub pattern: Pattern,
    pub property: DefiningProperty,
}

impl CatalogEntry {
    /// The represented matroid; `None` only for `U24`.
    pub fn matroid(&self) -> Option<&BinaryMatroid> {
        self.pattern.matroid()
    }

    pub fn check(&self) -> Result<Verdict> {
        check_property(self.property, &self.pattern)
    }
}

fn triangle(edges: &[(&str, usize, usize)]) -> Multigraph {
    graph(3, edges)
}

fn graph(n: usize, edges: &[(&str, usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.to_vec()).expect("fixed catalog graph")
}

fn from_graph(name: &'static str, g: Multigraph, property: DefiningProperty) -> CatalogEntry {
    CatalogEntry {
        name,
        pattern: Pattern::represented(name, g.cycle_matroid()),
        graph: Some(g),
        property,
    }
}

fn k4_graph() -> Multigraph {
    Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("fixed catalog graph")
}

/// `F7` on labels `e1..e7`; column `j` is the binary expansion of `j`.
pub fn fano() -> BinaryMatroid {
    let cols: Vec<BitRow> = (1..8u32)
        .map(|j| BitRow::indicator((0..3).filter(|b| j >> b & 1 == 1)))
        .collect();
    let mat = Gf2Matrix::from_columns(3, &cols).expect("fixed matrix");
    BinaryMatroid::with_default_labels(&mat).expect("fixed labels")
}

/// Looks up a catalog entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    use DefiningProperty::*;
    let entry = match name {
        "K4" => from_graph("K4", k4_graph(), FanoMinusPoint),
        "U24" => CatalogEntry {
            name: "U24",
            graph: None,
            pattern: Pattern::u24(),
            property: UniformTwoFour,
        },
        "F7" => CatalogEntry {
            name: "F7",
            graph: None,
            pattern: Pattern::represented("F7", fano()),
            property: Fano,
        },
        // Square a-b-c-d (0-1-2-3) with diagonal b-d; x doubles a-d, y doubles c-d.
        "G1" => from_graph(
            "G1",
            graph(
                4,
                &[
                    ("z1", 0, 1),
                    ("z2", 1, 2),
                    ("z3", 2, 3),
                    ("z4", 0, 3),
                    ("z5", 1, 3),
                    ("x", 0, 3),
                    ("y", 2, 3),
                ],
            ),
            MinimalInClass {
                k: 2,
                partner: None,
            },
        ),
        "G2" => from_graph(
            "G2",
            triangle(&[
                ("x", 0, 2),
                ("z1", 0, 2),
                ("y", 2, 2),
                ("z", 1, 2),
                ("z2", 1, 2),
                ("z3", 0, 1),
            ]),
            MinimalInClass {
                k: 3,
                partner: Some("Q2"),
            },
        ),
        "G3" => from_graph(
            "G3",
            triangle(&[
                ("x", 0, 2),
                ("z1", 0, 2),
                ("y", 1, 2),
                ("z2", 1, 2),
                ("z", 1, 1),
                ("z3", 0, 1),
            ]),
            MinimalInClass {
                k: 3,
                partner: Some("Q3"),
            },
        ),
        "G4" => from_graph(
            "G4",
            triangle(&[
                ("x", 0, 2),
                ("z1", 0, 2),
                ("y", 1, 2),
                ("z2", 1, 2),
                ("z", 0, 1),
                ("z3", 0, 1),
            ]),
            MinimalInClass {
                k: 3,
                partner: Some("Q4"),
            },
        ),
        "G6" => from_graph(
            "G6",
            triangle(&[
                ("x", 0, 2),
                ("z1", 0, 2),
                ("y", 1, 2),
                ("z2", 1, 2),
                ("z", 0, 1),
            ]),
            MinimalElementSplitting,
        ),
        "G7" => from_graph(
            "G7",
            triangle(&[("x", 0, 2), ("y", 0, 1), ("z1", 0, 1), ("z2", 1, 2)]),
            MinimalEsSplitting,
        ),
        "Q1" => from_graph("Q1", k4_graph(), QuotientOfK4),
        "Q2" => from_graph(
            "Q2",
            Multigraph::from_pairs(3, &[(0, 1), (0, 2), (0, 2), (1, 2), (1, 2), (2, 2)])
                .expect("fixed catalog graph"),
            QuotientOfK4,
        ),
        "Q3" => from_graph(
            "Q3",
            Multigraph::from_pairs(3, &[(0, 1), (0, 2), (0, 2), (1, 1), (1, 2), (1, 2)])
                .expect("fixed catalog graph"),
            QuotientOfK4,
        ),
        "Q4" => from_graph(
            "Q4",
            Multigraph::from_pairs(3, &[(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)])
                .expect("fixed catalog graph"),
            QuotientOfK4,
        ),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(entry)
}

/// A named pattern for minor search: `K4`, `U24`, `F7`, `G*` or `Q*`.
pub fn pattern(name: &str) -> Result<Pattern> {
    Ok(get(name)?.pattern)
}

fn matroid_of(name: &str) -> Result<BinaryMatroid> {
    get(name)?
        .matroid()
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("`{name}` has no binary representation")))
}

/// Single-element deletions and contractions (contracting a loop is deleting it).
pub fn single_element_minors(m: &BinaryMatroid) -> Vec<BinaryMatroid> {
    let mut out = Vec::with_capacity(2 * m.len());
    for i in 0..m.len() {
        out.push(m.delete_indices(&[i]));
        if !m.is_loop(i) {
            out.push(m.contract_indices(&[i]));
        }
    }
    out
}

/// First `H` (by size, then lexicographically over sorted labels) with
/// `sizes` bounding `|H|` whose element splitting is not a binary gammoid.
pub fn element_splitting_breaker(
    m: &BinaryMatroid,
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<Option<Vec<String>>> {
    first_set(m, sizes, |h| Ok(!is_binary_gammoid(&element_splitting(m, h)?)?))
}

/// First `(H, e)` with `|H|` in `sizes` and `e ∈ H` whose es-splitting is not
/// a binary gammoid.
pub fn es_splitting_breaker(
    m: &BinaryMatroid,
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<Option<(Vec<String>, String)>> {
    let mut pivot = None;
    let set = first_set(m, sizes, |h| {
        for e in h {
            if !is_binary_gammoid(&es_splitting(m, h, e)?)? {
                pivot = Some(e.clone());
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    Ok(set.map(|s| (s, pivot.expect("set found with pivot"))))
}

/// First label set, by size then lexicographically, satisfying `pred`.
pub(crate) fn first_set(
    m: &BinaryMatroid,
    sizes: std::ops::RangeInclusive<usize>,
    mut pred: impl FnMut(&[String]) -> Result<bool>,
) -> Result<Option<Vec<String>>> {
    let mut labels = m.labels().to_vec();
    labels.sort();
    for k in sizes {
        if k > labels.len() {
            break;
        }
        let mut found = None;
        let mut failure = None;
        let mut buf = Vec::new();
        for_each_combination(labels.len(), k, &mut buf, &mut |c| {
            if found.is_some() || failure.is_some() {
                return;
            }
            let h: Vec<String> = c.iter().map(|&i| labels[i].clone()).collect();
            match pred(&h) {
                Ok(true) => found = Some(h),
                Ok(false) => {}
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Runs a defining property against a pattern.
pub fn check_property(property: DefiningProperty, pattern: &Pattern) -> Result<Verdict> {
    use DefiningProperty::*;
    let Some(m) = pattern.matroid() else {
        return check_uniform(pattern);
    };
    let verdict = match property {
        FanoMinusPoint => {
            let f7 = fano();
            let minus = f7.delete(&["e7"])?;
            match isomorphic(m, &minus) {
                Some(_) => Verdict::pass("isomorphic to F7 \\ (1,1,1)"),
                None => Verdict::fail("not isomorphic to F7 \\ (1,1,1)"),
            }
        }
        Fano => {
            let all_columns = m.rank() == 3
                && m.len() == 7
                && (0..7).all(|i| !m.column(i).is_zero())
                && (0..7).all(|i| m.parallel_class_size(i) == 1);
            let graphic = crate::graph::graphic_witness(m, 4)?.is_some();
            if all_columns && !graphic {
                Verdict::pass("seven distinct nonzero columns in rank 3; no graph found")
            } else {
                Verdict::fail(format!("distinct columns: {all_columns}, graphic: {graphic}"))
            }
        }
        UniformTwoFour => Verdict::fail("U24 has no binary representation"),
        QuotientOfK4 => {
            let hit = quotients_of_k4()?
                .into_iter()
                .find(|q| isomorphic(m, &q.quotient).is_some());
            match hit {
                Some(q) => Verdict::pass(format!("realized by extension column {}", q.column_bits())),
                None => Verdict::fail("no quotient of M(K4) is isomorphic"),
            }
        }
        MinimalInClass { k, partner } => {
            if let Some(p) = partner {
                if isomorphic(m, &matroid_of(p)?).is_none() {
                    return Ok(Verdict::fail(format!("not isomorphic to M({p})")));
                }
            }
            if !is_binary_gammoid(m)? {
                return Ok(Verdict::fail("not a binary gammoid"));
            }
            let Some(w) = in_class_gk_unchecked(m, k)? else {
                return Ok(Verdict::fail(format!("not in G_{k}")));
            };
            for minor in single_element_minors(m) {
                if in_class_gk_unchecked(&minor, k)?.is_some() {
                    return Ok(Verdict::fail(format!(
                        "proper minor on {{{}}} is in G_{k}",
                        minor.labels().join(",")
                    )));
                }
            }
            Verdict::pass(format!("witness H = {{{}}}; minimal", w.set.join(",")))
        }
        MinimalElementSplitting => {
            let Some(h) = element_splitting_breaker(m, 3..=3)? else {
                return Ok(Verdict::fail("no 3-set breaks element splitting"));
            };
            for minor in single_element_minors(m) {
                if element_splitting_breaker(&minor, 2..=minor.len())?.is_some() {
                    return Ok(Verdict::fail("a proper minor breaks element splitting"));
                }
            }
            Verdict::pass(format!("witness H = {{{}}}; minimal", h.join(",")))
        }
        MinimalEsSplitting => {
            let Some((h, e)) = es_splitting_breaker(m, 2..=2)? else {
                return Ok(Verdict::fail("no 2-set breaks es-splitting"));
            };
            for minor in single_element_minors(m) {
                if es_splitting_breaker(&minor, 2..=minor.len())?.is_some() {
                    return Ok(Verdict::fail("a proper minor breaks es-splitting"));
                }
            }
            Verdict::pass(format!("witness H = {{{}}}, e = {e}; minimal", h.join(",")))
        }
    };
    Ok(verdict)
}

fn check_uniform(pattern: &Pattern) -> Result<Verdict> {
    if pattern.rank() != 2 || pattern.len() != 4 {
        return Ok(Verdict::fail("wrong rank or size"));
    }
    for host in [k4_matroid(), fano()] {
        if has_minor(&host, pattern)?.is_some() {
            return Ok(Verdict::fail("found in a binary host"));
        }
    }
    Ok(Verdict::pass("rank 2 on 4 elements; absent from M(K4) and F7"))
}

/// Result of `catalog check` for one entry, plus the extra cross-checks.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub verdict: Verdict,
}

/// Runs every defining property and the cross-entry checks: each `M(Q_i)`
/// (`i = 2,3,4`) has an `M(G6)` minor, and `M(G6)` has an `M(G7)` minor.
pub fn check_all() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for name in NAMES {
        let entry = get(name)?;
        out.push(CheckLine {
            name: name.to_string(),
            verdict: entry.check()?,
        });
    }
    let g6 = pattern("G6")?;
    for q in ["Q2", "Q3", "Q4"] {
        let host = matroid_of(q)?;
        let verdict = match has_minor(&host, &g6)? {
            Some(c) if c.verify(&host, &g6) => Verdict::pass(c.to_string()),
            Some(_) => Verdict::fail("certificate does not verify"),
            None => Verdict::fail("no M(G6) minor"),
        };
        out.push(CheckLine {
            name: format!("{q}>=G6"),
            verdict,
        });
    }
    let g7 = pattern("G7")?;
    let host = matroid_of("G6")?;
    let verdict = match has_minor(&host, &g7)? {
        Some(c) if c.verify(&host, &g7) => Verdict::pass(c.to_string()),
        Some(_) => Verdict::fail("certificate does not verify"),
        None => Verdict::fail("no M(G7) minor"),
    };
    out.push(CheckLine {
        name: "G6>=G7".into(),
        verdict,
    });
    Ok(out)
}

/// Connected multigraphs with the same number of vertices and edges as the
/// entry's graph whose cycle matroids satisfy its defining property.
pub fn repair_candidates(name: &str) -> Result<Vec<Multigraph>> {
    let entry = get(name)?;
    let Some(g) = &entry.graph else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for cand in enumerate_multigraphs(g.nedges(), true, &CensusOptions::default())? {
        if cand.nedges() != g.nedges() || cand.nvertices() != g.nvertices() {
            continue;
        }
        let p = Pattern::represented(name, cand.cycle_matroid());
        if check_property(entry.property, &p)?.passed {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Text for `catalog show`: graph, representation and property verdict.
pub fn show(name: &str) -> Result<String> {
    let entry = get(name)?;
    let verdict = entry.check()?;
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", entry.name);
    let _ = writeln!(s, "property: {}", entry.property.description());
    match &entry.graph {
        Some(g) => s.push_str(&g.to_string()),
        None => s.push_str("graph: none\n"),
    }
    match entry.matroid() {
        Some(m) => s.push_str(&m.to_string()),
        None => {
            let _ = writeln!(
                s,
                "matroid: rank-oracle pattern, rank {} on {{{}}}",
                entry.pattern.rank(),
                entry.pattern.labels().join(",")
            );
        }
    }
    let _ = writeln!(
        s,
        "verdict: {} ({})",
        if verdict.passed { "pass" } else { "fail" },
        verdict.detail
    );
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_entry_counts() {
        let m = matroid_of("K4").unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.len(), 6);
        assert_eq!(m.circuits(16).unwrap().len(), 7);
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(get("G5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn g_entries_match_q_entries() {
        for (g, q) in [("G2", "Q2"), ("G3", "Q3"), ("G4", "Q4")] {
            assert!(isomorphic(&matroid_of(g).unwrap(), &matroid_of(q).unwrap()).is_some());
        }
        assert!(isomorphic(&matroid_of("Q1").unwrap(), &k4_matroid()).is_some());
    }

    #[test]
    fn deleting_g1_parallels_gives_k4_minus_an_edge() {
        let m = matroid_of("G1").unwrap().delete(&["x", "y"]).unwrap();
        let k4 = k4_matroid();
        assert!(isomorphic(&m, &k4.delete(&["e1"]).unwrap()).is_some());
        assert!(isomorphic(&m, &k4).is_none());
    }

    #[test]
    fn q2_and_q3_are_different_graphs() {
        let q2 = get("Q2").unwrap().graph.unwrap();
        let q3 = get("Q3").unwrap().graph.unwrap();
        assert!(crate::graph::graph_isomorphic(&q2, &q3).is_none());
    }

    #[test]
    fn show_mentions_verdict() {
        let s = show("G7").unwrap();
        assert!(s.contains("verdict: pass"));
        let u = show("U24").unwrap();
        assert!(u.contains("rank-oracle"));
    }
}
