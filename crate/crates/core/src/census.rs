//! Exhaustive enumeration of small multigraphs and binary gammoids.
//!
//! Multigraphs are generated level by level in the number of edges: every
//! graph on `k` edges is obtained from one on `k - 1` edges by adding a
//! parallel edge, a loop, an edge between existing vertices, an edge to a new
//! vertex, or (when disconnected graphs are wanted) a new component. Each
//! level is deduplicated by canonical code and sorted, so the output does not
//! depend on the number of worker threads.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::catalog;
use crate::error::{Error, Result};
use crate::gf2::{BitRow, Gf2Matrix};
use crate::graph::{graphic_witness, GraphCode, Multigraph};
use crate::iso::{fingerprint_profile, isomorphic, ElementFingerprint};
use crate::lifts::SPLIT_PREFIX;
use crate::matroid::BinaryMatroid;
use crate::minor::{is_binary_gammoid, k4_matroid};

/// Default bound on the number of edges.
pub const EDGE_BUDGET: usize = 9;
/// Ground-set bound for [`coextensions`].
pub const COEXTENSION_BOUND: usize = 10;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub edge_budget: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            edge_budget: EDGE_BUDGET,
        }
    }
}

fn check_budget(max_edges: usize, opts: &CensusOptions) -> Result<()> {
    if max_edges > opts.edge_budget {
        return Err(Error::SizeBound {
            what: "census edge count",
            got: max_edges,
            limit: opts.edge_budget,
        });
    }
    Ok(())
}

fn extensions(code: &GraphCode, connected_only: bool) -> Vec<GraphCode> {
    let g = code.to_graph();
    let n = g.nvertices();
    let label = format!("e{}", g.nedges() + 1);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u..n {
            pairs.push((u, v));
        }
        pairs.push((u, n));
    }
    if !connected_only || n == 0 {
        pairs.push((n, n));
        pairs.push((n, n + 1));
    }
    let mut out: Vec<GraphCode> = pairs
        .into_iter()
        .map(|(u, v)| {
            g.with_edge(label.clone(), u, v)
                .expect("fresh label")
                .canonical_code()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Canonical codes of every multigraph with `1..=max_edges` edges and no
/// isolated vertices (connected ones only if asked), ordered by edge count
/// and then by code.
pub fn enumerate_codes(
    max_edges: usize,
    connected_only: bool,
    opts: &CensusOptions,
) -> Result<Vec<GraphCode>> {
    check_budget(max_edges, opts)?;
    let seed = if connected_only {
        GraphCode {
            nvertices: 1,
            entries: vec![0],
        }
    } else {
        GraphCode {
            nvertices: 0,
            entries: Vec::new(),
        }
    };
    let mut level = vec![seed];
    let mut out = Vec::new();
    for _ in 0..max_edges {
        let next: BTreeSet<GraphCode> = level
            .par_iter()
            .map(|c| extensions(c, connected_only))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        level = next.into_iter().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// Canonical multigraphs, one per isomorphism class; see [`enumerate_codes`].
pub fn enumerate_multigraphs(
    max_edges: usize,
    connected_only: bool,
    opts: &CensusOptions,
) -> Result<Vec<Multigraph>> {
    Ok(enumerate_codes(max_edges, connected_only, opts)?
        .iter()
        .map(GraphCode::to_graph)
        .collect())
}

/// Independent generator: every multiset of `k` vertex pairs over
/// `0..n` that uses every vertex, for all feasible `n`, filtered and
/// deduplicated by canonical code. Only for small `max_edges`.
pub fn enumerate_codes_naive(max_edges: usize, connected_only: bool) -> BTreeSet<GraphCode> {
    let mut out = BTreeSet::new();
    for k in 1..=max_edges {
        let max_n = if connected_only { k + 1 } else { 2 * k };
        for n in 1..=max_n {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u..n).map(move |v| (u, v)))
                .collect();
            let mut chosen = Vec::with_capacity(k);
            multisets(&pairs, k, 0, &mut chosen, &mut |edges| {
                let mut used = vec![false; n];
                for &(u, v) in edges {
                    used[u] = true;
                    used[v] = true;
                }
                if used.contains(&false) {
                    return;
                }
                let g = Multigraph::from_pairs(n, edges).expect("pairs in range");
                if connected_only && !g.is_connected() {
                    return;
                }
                out.insert(g.canonical_code());
            });
        }
    }
    out
}

type Pair = (usize, usize);

fn multisets(
    pairs: &[Pair],
    k: usize,
    start: usize,
    chosen: &mut Vec<Pair>,
    f: &mut dyn FnMut(&[Pair]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..pairs.len() {
        chosen.push(pairs[i]);
        multisets(pairs, k, i, chosen, f);
        chosen.pop();
    }
}

/// A census gammoid with the graph it came from.
#[derive(Clone, Debug)]
pub struct GammoidEntry {
    pub graph: Multigraph,
    pub matroid: BinaryMatroid,
}

/// Cycle matroids of connected multigraphs with `1..=max_edges` edges that
/// are binary gammoids, one per matroid isomorphism class, in graph order.
pub fn enumerate_binary_gammoids(
    max_edges: usize,
    opts: &CensusOptions,
) -> Result<Vec<GammoidEntry>> {
    binary_gammoids_among(enumerate_multigraphs(max_edges, true, opts)?)
}

/// Keeps the graphs whose cycle matroids are binary gammoids, one per matroid
/// isomorphism class, first occurrence wins.
pub fn binary_gammoids_among(graphs: Vec<Multigraph>) -> Result<Vec<GammoidEntry>> {
    let tested: Vec<Option<(GammoidEntry, Vec<ElementFingerprint>)>> = graphs
        .into_par_iter()
        .map(|g| {
            let m = g.cycle_matroid();
            Ok(is_binary_gammoid(&m)?.then(|| {
                let profile = fingerprint_profile(&m);
                (
                    GammoidEntry {
                        graph: g,
                        matroid: m,
                    },
                    profile,
                )
            }))
        })
        .collect::<Result<_>>()?;

    let mut buckets: HashMap<(usize, usize, Vec<ElementFingerprint>), Vec<usize>> = HashMap::new();
    let mut out: Vec<GammoidEntry> = Vec::new();
    for (entry, profile) in tested.into_iter().flatten() {
        let key = (entry.matroid.len(), entry.matroid.rank(), profile);
        let bucket = buckets.entry(key).or_default();
        if bucket
            .iter()
            .any(|&i| isomorphic(&out[i].matroid, &entry.matroid).is_some())
        {
            continue;
        }
        bucket.push(out.len());
        out.push(entry);
    }
    Ok(out)
}

/// [`enumerate_binary_gammoids`] with default options, memoized per process.
pub fn shared_gammoids(max_edges: usize) -> Result<Arc<Vec<GammoidEntry>>> {
    static MEMO: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<GammoidEntry>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().expect("memo lock").get(&max_edges) {
        return Ok(Arc::clone(v));
    }
    let v = Arc::new(enumerate_binary_gammoids(max_edges, &CensusOptions::default())?);
    memo.lock()
        .expect("memo lock")
        .insert(max_edges, Arc::clone(&v));
    Ok(v)
}

/// One single-element extension of `M(K4)` by a column `c` and its quotient.
#[derive(Clone, Debug)]
pub struct QuotientRecord {
    pub column: BitRow,
    pub extension: BinaryMatroid,
    pub quotient: BinaryMatroid,
    pub graph: Option<Multigraph>,
    /// Every catalog `Q_i` isomorphic to the quotient.
    pub matches: Vec<String>,
}

impl QuotientRecord {
    /// The column as three characters, top entry first.
    pub fn column_bits(&self) -> String {
        (0..3)
            .map(|i| if self.column.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn is_graphic(&self) -> bool {
        self.graph.is_some()
    }
}

/// For each of the 8 columns `c ∈ GF(2)³` (in binary order, top entry most
/// significant), extend `[I₃ | 110, 101, 011]` by `c` as element `x` and
/// contract `x`.
pub fn quotients_of_k4() -> Result<Vec<QuotientRecord>> {
    let k4 = k4_matroid();
    let qs: Vec<(String, BinaryMatroid)> = ["Q1", "Q2", "Q3", "Q4"]
        .iter()
        .map(|n| {
            let e = catalog::get(n)?;
            Ok((n.to_string(), e.matroid().cloned().expect("Q entries are binary")))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(8);
    for c in 0..8u32 {
        let column = BitRow::indicator((0..3).filter(|&i| c >> (2 - i) & 1 == 1));
        let extension = k4.add_column("x", column)?;
        let quotient = extension.contract(&["x"])?;
        let graph = graphic_witness(&quotient, quotient.rank() + 1)?;
        let matches = qs
            .iter()
            .filter(|(_, q)| isomorphic(q, &quotient).is_some())
            .map(|(n, _)| n.clone())
            .collect();
        out.push(QuotientRecord {
            column,
            extension,
            quotient,
            graph,
            matches,
        });
    }
    Ok(out)
}

/// All single-element binary coextensions `N` of `m` (`N / x = m`), one per
/// isomorphism class: append a row `b` and a unit column `x` for every
/// `b ∈ GF(2)^|E(m)|`, in increasing order of `b`.
pub fn coextensions(m: &BinaryMatroid) -> Result<Vec<BinaryMatroid>> {
    if m.len() > COEXTENSION_BOUND {
        return Err(Error::SizeBound {
            what: "ground set for coextensions",
            got: m.len(),
            limit: COEXTENSION_BOUND,
        });
    }
    let x = m.fresh_label(SPLIT_PREFIX);
    let mut labels = m.labels().to_vec();
    labels.push(x);
    let mut out: Vec<BinaryMatroid> = Vec::new();
    for b in 0..(1u64 << m.len()) {
        let row = BitRow::indicator((0..m.len()).filter(|&j| b >> j & 1 == 1));
        let mat: Gf2Matrix = m.matrix().append_row(row)?;
        let unit = BitRow::indicator([mat.nrows() - 1]);
        let n = BinaryMatroid::new(&mat.append_column(unit)?, labels.clone())?;
        if !out.iter().any(|o| isomorphic(o, &n).is_some()) {
            out.push(n);
        }
    }
    Ok(out)
}

/// First line of a census cache file.
pub fn cache_header(max_edges: usize, connected_only: bool) -> String {
    format!("census max_edges={max_edges} connected={connected_only}")
}

/// Writes one canonical encoding per line after the header.
pub fn write_cache(
    path: &Path,
    max_edges: usize,
    connected_only: bool,
    graphs: &[Multigraph],
) -> std::io::Result<()> {
    let mut f = std::io::BufWriter::new(fs::File::create(path)?);
    writeln!(f, "{}", cache_header(max_edges, connected_only))?;
    for g in graphs {
        writeln!(f, "{}", g.encode())?;
    }
    f.flush()
}

/// Reads a cache file. Returns `None` when the file is missing or was
/// written for other parameters; every entry is re-canonicalized and a
/// non-canonical or duplicate entry is a parse error.
pub fn read_cache(
    path: &Path,
    max_edges: usize,
    connected_only: bool,
) -> Result<Option<Vec<Multigraph>>> {
    let Ok(text) = fs::read_to_string(path) else {
        return Ok(None);
    };
    let mut lines = text.lines();
    if lines.next() != Some(cache_header(max_edges, connected_only).as_str()) {
        return Ok(None);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let g = Multigraph::decode(line).map_err(|_| Error::parse(i + 2, "bad graph encoding"))?;
        let canon = g.canonical_form();
        if canon.encode() != line.trim()
            || g.nedges() > max_edges
            || (connected_only && !g.is_connected())
        {
            return Err(Error::parse(i + 2, "entry is not a canonical census graph"));
        }
        if !seen.insert(canon.encode()) {
            return Err(Error::parse(i + 2, "duplicate entry"));
        }
        out.push(canon);
    }
    Ok(Some(out))
}
