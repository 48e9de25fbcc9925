//! Shared inputs for the criterion benchmarks.

use binlift::catalog;
use binlift::census::{self, CensusOptions};
use binlift::BinaryMatroid;

/// Named catalog matroids used as benchmark hosts.
pub fn catalog_matroids() -> Vec<(&'static str, BinaryMatroid)> {
    ["K4", "G1", "G2", "G6", "G7", "Q4"]
        .into_iter()
        .map(|n| {
            let entry = catalog::get(n).expect("catalog name");
            (n, entry.matroid().cloned().expect("represented entry"))
        })
        .collect()
}

/// Cycle matroids of the gammoid census at the given edge budget.
pub fn gammoids(max_edges: usize) -> Vec<BinaryMatroid> {
    census::enumerate_binary_gammoids(max_edges, &CensusOptions::default())
        .expect("budget within bounds")
        .into_iter()
        .map(|e| e.matroid)
        .collect()
}
