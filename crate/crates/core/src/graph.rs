//! Labelled multigraphs with loops, their cycle matroids, and the reverse
//! direction: finding a graph for a binary matroid.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{parse_count, BitRow, Gf2Matrix};
use crate::iso::PairedBasis;
use crate::matroid::BinaryMatroid;

/// Ground-set bound for [`graphic_witness`].
pub const WITNESS_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A multigraph on vertices `0..nvertices`. Endpoints are stored with `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    nvertices: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new<S: Into<String>>(nvertices: usize, edges: Vec<(S, usize, usize)>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (label, u, v) in edges {
            let label = label.into();
            for w in [u, v] {
                if w >= nvertices {
                    return Err(Error::IndexOutOfRange {
                        index: w,
                        limit: nvertices,
                    });
                }
            }
            if out.iter().any(|e: &Edge| e.label == label) {
                return Err(Error::DuplicateLabel(label));
            }
            if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == ',') {
                return Err(Error::Precondition(format!("invalid label `{label}`")));
            }
            out.push(Edge {
                u: u.min(v),
                v: u.max(v),
                label,
            });
        }
        Ok(Multigraph {
            nvertices,
            edges: out,
        })
    }

    /// Edges labelled `e1`, `e2`, ... in the given order.
    pub fn from_pairs(nvertices: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            nvertices,
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (format!("e{}", i + 1), u, v))
                .collect(),
        )
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nedges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn edge(&self, label: &str) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn degree(&self, w: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == w) + usize::from(e.v == w))
            .sum()
    }

    /// Vertex components (isolated vertices count as components).
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nvertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut count = self.nvertices;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.nvertices > 0 && self.components() == 1
    }

    /// Cycle matroid: the vertex-edge incidence matrix over GF(2).
    pub fn cycle_matroid(&self) -> BinaryMatroid {
        let rows: Vec<BitRow> = (0..self.nvertices)
            .map(|w| {
                BitRow::indicator(
                    self.edges
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| !e.is_loop() && (e.u == w || e.v == w))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        let mat = Gf2Matrix::from_rows(self.edges.len(), rows)
            .expect("edge count within the matrix width limit");
        BinaryMatroid::new(&mat, self.labels()).expect("edge labels are distinct")
    }

    pub fn delete_edge(&self, label: &str) -> Result<Self> {
        self.edge(label)?;
        Ok(Multigraph {
            nvertices: self.nvertices,
            edges: self
                .edges
                .iter()
                .filter(|e| e.label != label)
                .cloned()
                .collect(),
        })
    }

    /// Contracts a non-loop edge, merging its endpoints; a loop is deleted.
    pub fn contract_edge(&self, label: &str) -> Result<Self> {
        let e = self.edge(label)?.clone();
        if e.is_loop() {
            return self.delete_edge(label);
        }
        let remap = |w: usize| {
            let w = if w == e.v { e.u } else { w };
            if w > e.v {
                w - 1
            } else {
                w
            }
        };
        Multigraph::new(
            self.nvertices - 1,
            self.edges
                .iter()
                .filter(|f| f.label != label)
                .map(|f| (f.label.clone(), remap(f.u), remap(f.v)))
                .collect(),
        )
    }

    /// Adds an edge and returns the new graph.
    pub fn with_edge(&self, label: impl Into<String>, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<(String, usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.label.clone(), e.u, e.v))
            .collect();
        edges.push((label.into(), u, v));
        Multigraph::new(self.nvertices.max(u + 1).max(v + 1), edges)
    }

    /// Edge multiplicities between each vertex pair (`u <= v`).
    fn multiplicities(&self) -> Vec<Vec<u8>> {
        let n = self.nvertices;
        let mut m = vec![vec![0u8; n]; n];
        for e in &self.edges {
            m[e.u][e.v] += 1;
            if e.u != e.v {
                m[e.v][e.u] += 1;
            }
        }
        m
    }

    /// Vertex colours from iterated refinement, starting from (loops, degree).
    /// Colours are ranks of isomorphism-invariant signatures.
    fn refined_colours(&self) -> Vec<usize> {
        let n = self.nvertices;
        let mult = self.multiplicities();
        let mut sig: Vec<Vec<usize>> = (0..n)
            .map(|w| vec![mult[w][w] as usize, self.degree(w)])
            .collect();
        let mut colours = rank_signatures(&sig);
        loop {
            sig = (0..n)
                .map(|w| {
                    let mut nb: Vec<usize> = (0..n)
                        .filter(|&x| x != w && mult[w][x] > 0)
                        .map(|x| colours[x] * 256 + mult[w][x] as usize)
                        .collect();
                    nb.sort_unstable();
                    let mut s = vec![colours[w]];
                    s.extend(nb);
                    s
                })
                .collect();
            let next = rank_signatures(&sig);
            let classes = |c: &[usize]| {
                let mut v = c.to_vec();
                v.sort_unstable();
                v.dedup();
                v.len()
            };
            if classes(&next) == classes(&colours) {
                return next;
            }
            colours = next;
        }
    }

    /// Canonical code: the lexicographically least multiplicity vector over
    /// all vertex orderings that list vertices by refined colour. Entries are
    /// read as (0,0), (0,1), (1,1), (0,2), (1,2), (2,2), ...
    pub fn canonical_code(&self) -> GraphCode {
        self.canonical_labelling().0
    }

    fn canonical_labelling(&self) -> (GraphCode, Vec<usize>) {
        let n = self.nvertices;
        let mult = self.multiplicities();
        let colours = self.refined_colours();
        let mut slots: Vec<usize> = colours.clone();
        slots.sort_unstable();
        let mut best: Option<Vec<u8>> = None;
        let mut best_order: Vec<usize> = Vec::new();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut code: Vec<u8> = Vec::with_capacity(n * (n + 1) / 2);

        struct Ctx<'a> {
            mult: &'a [Vec<u8>],
            colours: &'a [usize],
            slots: &'a [usize],
        }
        fn dfs(
            ctx: &Ctx<'_>,
            order: &mut Vec<usize>,
            used: &mut [bool],
            code: &mut Vec<u8>,
            best: &mut Option<Vec<u8>>,
            best_order: &mut Vec<usize>,
        ) {
            let k = order.len();
            if k == ctx.slots.len() {
                if best.as_ref().is_none_or(|b| code.as_slice() < b.as_slice()) {
                    *best = Some(code.clone());
                    *best_order = order.clone();
                }
                return;
            }
            for w in 0..ctx.slots.len() {
                if used[w] || ctx.colours[w] != ctx.slots[k] {
                    continue;
                }
                let start = code.len();
                for &p in order.iter() {
                    code.push(ctx.mult[p][w]);
                }
                code.push(ctx.mult[w][w]);
                let worse = best
                    .as_ref()
                    .is_some_and(|b| code.as_slice() > &b[..code.len()]);
                if !worse {
                    used[w] = true;
                    order.push(w);
                    dfs(ctx, order, used, code, best, best_order);
                    order.pop();
                    used[w] = false;
                }
                code.truncate(start);
            }
        }
        let ctx = Ctx {
            mult: &mult,
            colours: &colours,
            slots: &slots,
        };
        dfs(
            &ctx,
            &mut order,
            &mut used,
            &mut code,
            &mut best,
            &mut best_order,
        );
        (
            GraphCode {
                nvertices: n,
                entries: best.unwrap_or_default(),
            },
            best_order,
        )
    }

    /// The canonical representative: vertices renumbered by the canonical
    /// ordering, edges sorted by endpoints and relabelled `e1`, `e2`, ...
    pub fn canonical_form(&self) -> Multigraph {
        self.canonical_code().to_graph()
    }

    /// One-line encoding: `<n>:<u>-<v>,<u>-<v>,...` (labels dropped).
    pub fn encode(&self) -> String {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        let body: Vec<String> = pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", self.nvertices, body.join(","))
    }

    /// Inverse of [`Multigraph::encode`]; edges are labelled `e1`, `e2`, ...
    pub fn decode(s: &str) -> Result<Self> {
        let (n, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::parse(1, "expected `<n>:<edges>`"))?;
        let n = parse_count(1, n)?;
        let mut pairs = Vec::new();
        for item in body.split(',').filter(|t| !t.is_empty()) {
            let (u, v) = item
                .split_once('-')
                .ok_or_else(|| Error::parse(1, format!("bad edge `{item}`")))?;
            pairs.push((parse_count(1, u)?, parse_count(1, v)?));
        }
        Self::from_pairs(n, &pairs)
    }
}

fn rank_signatures(sig: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sig.iter().collect();
    distinct.sort();
    distinct.dedup();
    sig.iter()
        .map(|s| distinct.binary_search(&s).unwrap())
        .collect()
}

/// Canonical code of a multigraph; equal codes iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphCode {
    pub nvertices: usize,
    pub entries: Vec<u8>,
}

impl GraphCode {
    pub fn nedges(&self) -> usize {
        self.entries.iter().map(|&m| m as usize).sum()
    }

    pub fn to_graph(&self) -> Multigraph {
        let mut pairs = Vec::new();
        let mut k = 0;
        for v in 0..self.nvertices {
            for u in 0..=v {
                for _ in 0..self.entries[k] {
                    pairs.push((u, v));
                }
                k += 1;
            }
        }
        pairs.sort_unstable();
        Multigraph::from_pairs(self.nvertices, &pairs).expect("code entries are in range")
    }
}

/// Vertex map and edge-label map witnessing a graph isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIsomorphism {
    pub vertices: Vec<usize>,
    pub edges: BTreeMap<String, String>,
}

/// Finds an incidence-preserving bijection (loops and multiplicities
/// included). Vertices of `a` are mapped in index order, trying images in
/// index order, so `graph_isomorphic(g, g)` is the identity.
pub fn graph_isomorphic(a: &Multigraph, b: &Multigraph) -> Option<GraphIsomorphism> {
    if a.nvertices != b.nvertices || a.nedges() != b.nedges() {
        return None;
    }
    if a.canonical_code() != b.canonical_code() {
        return None;
    }
    let n = a.nvertices;
    let (ma, mb) = (a.multiplicities(), b.multiplicities());
    let (ca, cb) = (a.refined_colours(), b.refined_colours());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn dfs(
        w: usize,
        map: &mut [usize],
        used: &mut [bool],
        ma: &[Vec<u8>],
        mb: &[Vec<u8>],
        ca: &[usize],
        cb: &[usize],
    ) -> bool {
        let n = map.len();
        if w == n {
            return true;
        }
        for x in 0..n {
            if used[x] || ca[w] != cb[x] || ma[w][w] != mb[x][x] {
                continue;
            }
            if (0..w).any(|p| ma[p][w] != mb[map[p]][x]) {
                continue;
            }
            map[w] = x;
            used[x] = true;
            if dfs(w + 1, map, used, ma, mb, ca, cb) {
                return true;
            }
            used[x] = false;
        }
        map[w] = usize::MAX;
        false
    }
    if !dfs(0, &mut map, &mut used, &ma, &mb, &ca, &cb) {
        return None;
    }
    // pair edges between corresponding endpoints in label order
    let mut pool: BTreeMap<(usize, usize), Vec<&Edge>> = BTreeMap::new();
    let mut b_edges: Vec<&Edge> = b.edges.iter().collect();
    b_edges.sort_by(|x, y| x.label.cmp(&y.label));
    for e in b_edges {
        pool.entry((e.u, e.v)).or_default().push(e);
    }
    let mut a_edges: Vec<&Edge> = a.edges.iter().collect();
    a_edges.sort_by(|x, y| x.label.cmp(&y.label));
    let mut edges = BTreeMap::new();
    for e in a_edges {
        let (u, v) = (map[e.u].min(map[e.v]), map[e.u].max(map[e.v]));
        let slot = pool.get_mut(&(u, v))?;
        let image = slot.remove(0);
        edges.insert(e.label.clone(), image.label.clone());
    }
    Some(GraphIsomorphism {
        vertices: map,
        edges,
    })
}

/// Searches for a graph whose cycle matroid is `m` (same labels). A graphic
/// matroid of rank `r` is the cycle matroid of a connected graph on `r + 1`
/// vertices, so the search places edges on at most `r + 1` vertices; it
/// returns `None` when that exceeds `max_vertices` or no graph exists.
pub fn graphic_witness(m: &BinaryMatroid, max_vertices: usize) -> Result<Option<Multigraph>> {
    if m.len() > WITNESS_BOUND {
        return Err(Error::SizeBound {
            what: "ground set for graphic search",
            got: m.len(),
            limit: WITNESS_BOUND,
        });
    }
    let r = m.rank();
    let nv_limit = r + 1;
    if nv_limit > max_vertices.max(1) {
        return Ok(None);
    }
    // Place basis elements first, each non-basis element as soon as its
    // fundamental circuit is placed; loops go last on vertex 0.
    let pivots = m.matrix().rref().pivots;
    let mut order: Vec<usize> = Vec::new();
    let mut placed_rows = BitRow::zero();
    let non_basis: Vec<usize> = (0..m.len())
        .filter(|j| !pivots.contains(j) && !m.is_loop(*j))
        .collect();
    let mut pending = non_basis.clone();
    for (row, &p) in pivots.iter().enumerate() {
        order.push(p);
        placed_rows.set(row, true);
        pending.retain(|&j| {
            let support = m.column(j);
            if (support & !placed_rows).is_zero() {
                order.push(j);
                false
            } else {
                true
            }
        });
    }
    let loops: Vec<usize> = (0..m.len()).filter(|&j| m.is_loop(j)).collect();

    struct W<'a> {
        m: &'a BinaryMatroid,
        order: &'a [usize],
        limit: usize,
        ends: Vec<(usize, usize)>,
        basis: PairedBasis,
    }
    impl W<'_> {
        fn run(&mut self, depth: usize, nv: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let col = self.m.column(self.order[depth]);
            let mut options = Vec::new();
            for u in 0..nv {
                for v in u + 1..nv {
                    options.push((u, v));
                }
                if nv < self.limit {
                    options.push((u, nv));
                }
            }
            if nv + 2 <= self.limit {
                options.push((nv, nv + 1));
            }
            for (u, v) in options {
                let inc = BitRow::indicator([u, v]);
                let Some(pushed) = self.basis.try_push(col, inc, depth) else {
                    continue;
                };
                self.ends.push((u, v));
                let next_nv = nv.max(v + 1);
                if self.run(depth + 1, next_nv) {
                    return true;
                }
                self.ends.pop();
                self.basis.undo(pushed);
            }
            false
        }
    }
    let mut w = W {
        m,
        order: &order,
        limit: nv_limit,
        ends: Vec::new(),
        basis: PairedBasis::default(),
    };
    if !w.run(0, 0) {
        return Ok(None);
    }
    let nv = w.ends.iter().map(|&(_, v)| v + 1).max().unwrap_or(0).max(1);
    let mut edges: Vec<(String, usize, usize)> = order
        .iter()
        .zip(&w.ends)
        .map(|(&j, &(u, v))| (m.labels()[j].clone(), u, v))
        .collect();
    edges.extend(loops.iter().map(|&j| (m.labels()[j].clone(), 0, 0)));
    // restore ground-set order
    edges.sort_by_key(|(l, _, _)| m.index_of(l).unwrap());
    let g = Multigraph::new(nv, edges)?;
    debug_assert!(g.cycle_matroid().same_matroid(m));
    Ok(Some(g))
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} {}", self.nvertices, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.label, e.u, e.v)?;
        }
        Ok(())
    }
}

/// Text format: `graph <nvertices> <nedges>`, then `<label> <u> <v>` per edge.
impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.trim_end_matches('\r')).collect();
        let header: Vec<&str> = lines
            .first()
            .ok_or_else(|| Error::parse(1, "empty input"))?
            .split_whitespace()
            .collect();
        if header.len() != 3 || header[0] != "graph" {
            return Err(Error::parse(1, "expected `graph <nvertices> <nedges>`"));
        }
        let n = parse_count(1, header[1])?;
        let m = parse_count(1, header[2])?;
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let line = lines
                .get(i + 1)
                .ok_or_else(|| Error::parse(i + 2, "missing edge"))?;
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::parse(i + 2, "expected `<label> <u> <v>`"));
            }
            edges.push((
                parts[0].to_string(),
                parse_count(i + 2, parts[1])?,
                parse_count(i + 2, parts[2])?,
            ));
        }
        if let Some(k) = lines.iter().skip(m + 1).position(|l| !l.trim().is_empty()) {
            return Err(Error::parse(m + 2 + k, "trailing content"));
        }
        Multigraph::new(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn fano() -> BinaryMatroid {
        let m = Gf2Matrix::from_bits(
            7,
            &[
                [1, 0, 0, 1, 1, 0, 1],
                [0, 1, 0, 1, 0, 1, 1],
                [0, 0, 1, 0, 1, 1, 1],
            ],
        )
        .unwrap();
        BinaryMatroid::with_default_labels(&m).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Multigraph::new(2, vec![("a", 0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, limit: 2 })
        ));
        assert!(matches!(
            Multigraph::new(2, vec![("a", 0, 1), ("a", 1, 1)]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Multigraph::new(2, vec![("a b", 0, 1)]),
            Err(Error::Precondition(_))
        ));
        // endpoints are normalised
        assert_eq!(Multigraph::new(2, vec![("a", 1, 0)]).unwrap().edges()[0].u, 0);
    }

    #[test]
    fn degrees_and_components() {
        let g = Multigraph::from_pairs(4, &[(0, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.components(), 2);
        assert!(!g.is_connected());
        assert!(k4().is_connected());
    }

    #[test]
    fn cycle_matroid_of_k4() {
        let m = k4().cycle_matroid();
        assert_eq!((m.rank(), m.len()), (3, 6));
        assert_eq!(m.circuit_indices(12).unwrap().len(), 7);
        let with_loop = k4().with_edge("l", 2, 2).unwrap().cycle_matroid();
        assert!(with_loop.is_loop(with_loop.index_of("l").unwrap()));
    }

    #[test]
    fn edge_deletion_and_contraction_match_the_matroid() {
        let g = k4().with_edge("l", 1, 1).unwrap();
        for l in g.labels() {
            let m = g.cycle_matroid();
            assert!(g.delete_edge(&l).unwrap().cycle_matroid().same_matroid(&m.delete(&[&l]).unwrap()));
            assert!(g.contract_edge(&l).unwrap().cycle_matroid().same_matroid(&m.contract(&[&l]).unwrap()));
        }
        assert_eq!(k4().contract_edge("e1").unwrap().nvertices(), 3);
        assert!(matches!(k4().delete_edge("zz"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn canonical_code_separates_small_graphs() {
        let path = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let path2 = Multigraph::from_pairs(3, &[(2, 0), (0, 1)]).unwrap();
        let double = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(path.canonical_code(), path2.canonical_code());
        assert_ne!(path.canonical_code(), double.canonical_code());
        let code = k4().canonical_code();
        assert_eq!(code.nedges(), 6);
        assert_eq!(code.to_graph().canonical_code(), code);
    }

    #[test]
    fn graph_isomorphism_maps_edges() {
        let a = Multigraph::new(3, vec![("p", 0, 1), ("q", 0, 1), ("r", 1, 2)]).unwrap();
        let b = Multigraph::new(3, vec![("s", 2, 1), ("t", 0, 1), ("u", 0, 1)]).unwrap();
        let iso = graph_isomorphic(&a, &b).unwrap();
        assert_eq!(iso.edges["r"], "s");
        assert_eq!(iso.vertices[1], 1);
        let c = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(graph_isomorphic(&a, &c).is_none());
        let id = graph_isomorphic(&k4(), &k4()).unwrap();
        assert_eq!(id.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn graphic_witness_finds_k4_but_not_fano() {
        let m = k4().cycle_matroid();
        let g = graphic_witness(&m, 8).unwrap().unwrap();
        assert!(g.cycle_matroid().same_matroid(&m));
        assert!(graphic_witness(&fano(), 8).unwrap().is_none());
        let big = Multigraph::from_pairs(2, &[(0, 1); 13]).unwrap().cycle_matroid();
        assert!(matches!(graphic_witness(&big, 8), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn text_formats() {
        let g: Multigraph = "graph 3 2\nx 0 1\ny 2 2\n".parse().unwrap();
        assert_eq!(g.to_string(), "graph 3 2\nx 0 1\ny 2 2\n");
        assert_eq!(g.encode(), "3:0-1,2-2");
        assert_eq!(Multigraph::decode("3:0-1,2-2").unwrap().nedges(), 2);
        assert!(matches!("graph 3".parse::<Multigraph>(), Err(Error::Parse { line: 1, .. })));
        assert!(matches!("graph 3 1\nx 0\n".parse::<Multigraph>(), Err(Error::Parse { line: 2, .. })));
        assert!(matches!("graph 3 1\nx 0 1\nextra\n".parse::<Multigraph>(), Err(Error::Parse { line: 3, .. })));
        assert!(Multigraph::decode("nope").is_err());
    }
}
