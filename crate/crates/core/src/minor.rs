//! Certificate-producing minor search and the binary-gammoid test.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::iso::{fingerprints, isomorphic_with, verify_bijection, ElementFingerprint};
use crate::lifts::splitting;
use crate::matroid::{find_combination, BinaryMatroid};

/// Default bound on the host ground set for [`has_minor`].
pub const HOST_BOUND: usize = 14;

/// A matroid to look for as a minor.
#[derive(Clone, Debug)]
pub struct Pattern {
    name: String,
    kind: PatternKind,
}

#[derive(Clone, Debug)]
enum PatternKind {
    Represented {
        matroid: BinaryMatroid,
        fingerprints: Vec<ElementFingerprint>,
        profile: Vec<ElementFingerprint>,
    },
    /// `U_{rank,size}` checked through the rank oracle; used for `U_{2,4}`,
    /// which has no GF(2) representation.
    Uniform { rank: usize, size: usize },
}

impl Pattern {
    pub fn represented(name: impl Into<String>, matroid: BinaryMatroid) -> Self {
        let fp = fingerprints(&matroid);
        let mut profile = fp.clone();
        profile.sort();
        Pattern {
            name: name.into(),
            kind: PatternKind::Represented {
                matroid,
                fingerprints: fp,
                profile,
            },
        }
    }

    pub fn uniform(name: impl Into<String>, rank: usize, size: usize) -> Self {
        Pattern {
            name: name.into(),
            kind: PatternKind::Uniform { rank, size },
        }
    }

    /// `U_{2,4}` with elements `u1..u4`.
    pub fn u24() -> Self {
        Self::uniform("U24", 2, 4)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        match &self.kind {
            PatternKind::Represented { matroid, .. } => matroid.rank(),
            PatternKind::Uniform { rank, .. } => *rank,
        }
    }

    pub fn len(&self) -> usize {
        match &self.kind {
            PatternKind::Represented { matroid, .. } => matroid.len(),
            PatternKind::Uniform { size, .. } => *size,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Vec<String> {
        match &self.kind {
            PatternKind::Represented { matroid, .. } => matroid.labels().to_vec(),
            PatternKind::Uniform { size, .. } => (1..=*size).map(|i| format!("u{i}")).collect(),
        }
    }

    pub fn matroid(&self) -> Option<&BinaryMatroid> {
        match &self.kind {
            PatternKind::Represented { matroid, .. } => Some(matroid),
            PatternKind::Uniform { .. } => None,
        }
    }

    /// Matches a candidate minor (already of the right size and rank);
    /// returns the pattern-to-candidate label map.
    fn match_candidate(&self, cand: &BinaryMatroid) -> Option<BTreeMap<String, String>> {
        match &self.kind {
            PatternKind::Represented {
                matroid,
                fingerprints: fp,
                profile,
            } => {
                let fc = fingerprints(cand);
                let mut pc = fc.clone();
                pc.sort();
                if &pc != profile {
                    return None;
                }
                isomorphic_with(matroid, cand, fp, &fc)
            }
            PatternKind::Uniform { rank, .. } => {
                if !is_uniform(cand, *rank) {
                    return None;
                }
                let mut sorted = cand.labels().to_vec();
                sorted.sort();
                Some(self.labels().into_iter().zip(sorted).collect())
            }
        }
    }
}

fn is_uniform(m: &BinaryMatroid, rank: usize) -> bool {
    m.rank() == rank
        && find_combination(m.len(), rank, &mut |s| {
            (m.rank_of_indices(s) < rank).then_some(())
        })
        .is_none()
}

/// `M(K4)` as `[I₃ | 110, 101, 011]` on labels `e1..e6`.
pub fn k4_matroid() -> BinaryMatroid {
    let m = Gf2Matrix::from_bits(
        6,
        &[[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]],
    )
    .expect("fixed matrix");
    BinaryMatroid::with_default_labels(&m).expect("fixed labels")
}

/// The shared `M(K4)` pattern.
pub fn k4_pattern() -> &'static Pattern {
    static K4: OnceLock<Pattern> = OnceLock::new();
    K4.get_or_init(|| Pattern::represented("K4", k4_matroid()))
}

/// Witness that `pattern` is a minor of a host: delete `deleted`, contract
/// `contracted`, then `map` sends each pattern label to a host label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    pub deleted: Vec<String>,
    pub contracted: Vec<String>,
    pub map: BTreeMap<String, String>,
}

impl MinorCertificate {
    /// Re-checks the certificate from scratch against `host` and `pattern`.
    pub fn verify(&self, host: &BinaryMatroid, pattern: &Pattern) -> bool {
        if self.deleted.iter().any(|d| self.contracted.contains(d)) {
            return false;
        }
        let Ok(minor) = host
            .delete(&self.deleted)
            .and_then(|m| m.contract(&self.contracted))
        else {
            return false;
        };
        if self.deleted.len() + self.contracted.len() + minor.len() != host.len() {
            return false;
        }
        let labels = pattern.labels();
        if self.map.len() != labels.len() || labels.iter().any(|l| !self.map.contains_key(l)) {
            return false;
        }
        match &pattern.kind {
            PatternKind::Represented { matroid, .. } => verify_bijection(matroid, &minor, &self.map),
            PatternKind::Uniform { rank, .. } => {
                let mut images: Vec<&String> = self.map.values().collect();
                images.sort();
                images.dedup();
                images.len() == minor.len()
                    && images.iter().all(|l| minor.index_of(l).is_ok())
                    && is_uniform(&minor, *rank)
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.deleted.is_empty() && self.contracted.is_empty()
    }
}

/// `delete: a,b; contract: c; map: p1->h3,p2->h1`
impl fmt::Display for MinorCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let map: Vec<String> = self.map.iter().map(|(p, h)| format!("{p}->{h}")).collect();
        write!(
            f,
            "delete: {}; contract: {}; map: {}",
            self.deleted.join(","),
            self.contracted.join(","),
            map.join(",")
        )
    }
}

impl FromStr for MinorCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(';').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::parse(1, "expected `delete: ...; contract: ...; map: ...`"));
        }
        let field = |part: &str, key: &str| -> Result<Vec<String>> {
            let rest = part
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix(':'))
                .ok_or_else(|| Error::parse(1, format!("expected `{key}:`")))?;
            Ok(rest
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect())
        };
        let deleted = field(parts[0], "delete")?;
        let contracted = field(parts[1], "contract")?;
        let mut map = BTreeMap::new();
        for item in field(parts[2], "map")? {
            let (p, h) = item
                .split_once("->")
                .ok_or_else(|| Error::parse(1, format!("bad map entry `{item}`")))?;
            map.insert(p.to_string(), h.to_string());
        }
        Ok(MinorCertificate {
            deleted,
            contracted,
            map,
        })
    }
}

/// [`has_minor_bounded`] with [`HOST_BOUND`].
pub fn has_minor(host: &BinaryMatroid, pattern: &Pattern) -> Result<Option<MinorCertificate>> {
    has_minor_bounded(host, pattern, HOST_BOUND)
}

/// Searches for `pattern` as a minor of `host`.
///
/// Contraction sets are independent sets of size `r(host) - r(pattern)`,
/// deletion sets then bring the size down to `|E(pattern)|`; both are tried
/// in lexicographic order of sorted host labels and the first hit is returned.
/// Loops are never contracted.
pub fn has_minor_bounded(
    host: &BinaryMatroid,
    pattern: &Pattern,
    bound: usize,
) -> Result<Option<MinorCertificate>> {
    if host.len() > bound {
        return Err(Error::SizeBound {
            what: "host ground set for minor search",
            got: host.len(),
            limit: bound,
        });
    }
    let (rp, np) = (pattern.rank(), pattern.len());
    if host.rank() < rp || host.len() < np {
        return Ok(None);
    }
    let k = host.rank() - rp;
    if host.len() < k + np {
        return Ok(None);
    }
    let d = host.len() - k - np;
    let sorted = host.sorted_indices();
    let non_loops: Vec<usize> = sorted.iter().copied().filter(|&i| !host.is_loop(i)).collect();

    let found = find_combination(non_loops.len(), k, &mut |ys| {
        let y: Vec<usize> = ys.iter().map(|&p| non_loops[p]).collect();
        if host.rank_of_indices(&y) < k {
            return None;
        }
        let contracted = host.contract_indices(&y);
        // positions in `contracted`, in sorted-label order of the host
        let rest: Vec<usize> = sorted
            .iter()
            .filter(|i| !y.contains(i))
            .map(|&i| contracted.index_of(&host.labels()[i]).unwrap())
            .collect();
        find_combination(rest.len(), d, &mut |xs| {
            let del: Vec<usize> = xs.iter().map(|&p| rest[p]).collect();
            let keep: Vec<usize> = rest.iter().copied().filter(|i| !del.contains(i)).collect();
            if contracted.rank_of_indices(&keep) != rp {
                return None;
            }
            let cand = contracted.restrict_indices(&keep);
            let map = pattern.match_candidate(&cand)?;
            let mut deleted = contracted.labels_of(&del);
            deleted.sort();
            let mut con = host.labels_of(&y);
            con.sort();
            Some(MinorCertificate {
                deleted,
                contracted: con,
                map,
            })
        })
    });
    Ok(found)
}

/// An `M(K4)` minor certificate, if any.
pub fn gammoid_obstruction(m: &BinaryMatroid) -> Result<Option<MinorCertificate>> {
    if m.rank() < 3 || m.len() < 6 {
        if m.len() > HOST_BOUND {
            return Err(Error::SizeBound {
                what: "host ground set for minor search",
                got: m.len(),
                limit: HOST_BOUND,
            });
        }
        return Ok(None);
    }
    has_minor(m, k4_pattern())
}

/// A binary matroid is a gammoid iff it has no `M(K4)` minor (the `U_{2,4}`
/// clause is vacuous for binary matroids).
pub fn is_binary_gammoid(m: &BinaryMatroid) -> Result<bool> {
    Ok(gammoid_obstruction(m)?.is_none())
}

/// A set `H` with `|H| = k` whose splitting is not a binary gammoid, and the
/// `M(K4)` certificate on `M_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkWitness {
    pub set: Vec<String>,
    pub certificate: MinorCertificate,
}

/// Membership of a binary gammoid in `𝒢_k`: the lexicographically least
/// `k`-set (under sorted labels) whose splitting has an `M(K4)` minor.
pub fn in_class_gk(m: &BinaryMatroid, k: usize) -> Result<Option<GkWitness>> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if !is_binary_gammoid(m)? {
        return Err(Error::Precondition("matroid is not a binary gammoid".into()));
    }
    in_class_gk_unchecked(m, k)
}

/// [`in_class_gk`] without the gammoid precondition check.
pub fn in_class_gk_unchecked(m: &BinaryMatroid, k: usize) -> Result<Option<GkWitness>> {
    if m.len() < 6 || k > m.len() {
        return Ok(None);
    }
    let sorted = m.sorted_indices();
    let mut failure = None;
    let found = find_combination(sorted.len(), k, &mut |hs| {
        let h: Vec<String> = hs.iter().map(|&p| m.labels()[sorted[p]].clone()).collect();
        let split = match splitting(m, &h) {
            Ok(s) => s,
            Err(e) => {
                failure = Some(e);
                return Some(None);
            }
        };
        match gammoid_obstruction(&split) {
            Ok(Some(certificate)) => Some(Some(GkWitness {
                set: h,
                certificate,
            })),
            Ok(None) => None,
            Err(e) => {
                failure = Some(e);
                Some(None)
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found.flatten())
}

/// A minor `P` of `M` containing `H`, with `H₁', H₂' ⊆ H` such that
/// `P_H \ H₁' / H₂' ≅ M(K4)`.
#[derive(Clone, Debug)]
pub struct MinimalWitness {
    pub p: BinaryMatroid,
    pub set: Vec<String>,
    /// `H₁'`: deleted elements of `H`.
    pub deleted_in_h: Vec<String>,
    /// `H₂'`: contracted elements of `H`.
    pub contracted_in_h: Vec<String>,
    /// `H₁''`: elements outside `H` deleted from `M` to obtain `P`.
    pub deleted_outside: Vec<String>,
    /// `H₂''`: elements outside `H` contracted from `M` to obtain `P`.
    pub contracted_outside: Vec<String>,
    /// `M(K4)` certificate on `P_H`, using only `H₁'` and `H₂'`.
    pub certificate: MinorCertificate,
}

/// Pushes the deletions and contractions of an `M(K4)` certificate on `M_H`
/// that avoid `H` down into `M`, leaving a minor `P` whose splitting needs
/// only deletions and contractions inside `H`.
pub fn reduce_to_minimal_witness<S: AsRef<str>>(
    m: &BinaryMatroid,
    h: &[S],
) -> Result<MinimalWitness> {
    let mut set: Vec<String> = h.iter().map(|s| s.as_ref().to_string()).collect();
    set.sort();
    set.dedup();
    let split = splitting(m, &set)?;
    let cert = gammoid_obstruction(&split)?.ok_or_else(|| {
        Error::Precondition("splitting has no M(K4) minor".into())
    })?;
    let (deleted_in_h, deleted_outside): (Vec<String>, Vec<String>) =
        cert.deleted.iter().cloned().partition(|l| set.contains(l));
    let (contracted_in_h, contracted_outside): (Vec<String>, Vec<String>) =
        cert.contracted.iter().cloned().partition(|l| set.contains(l));
    let p = m.minor(&deleted_outside, &contracted_outside)?;
    let certificate = MinorCertificate {
        deleted: deleted_in_h.clone(),
        contracted: contracted_in_h.clone(),
        map: cert.map.clone(),
    };
    let p_split = splitting(&p, &set)?;
    if !certificate.verify(&p_split, k4_pattern()) {
        return Err(Error::Precondition(
            "reduced certificate does not re-verify".into(),
        ));
    }
    Ok(MinimalWitness {
        p,
        set,
        deleted_in_h,
        contracted_in_h,
        deleted_outside,
        contracted_outside,
        certificate,
    })
}
