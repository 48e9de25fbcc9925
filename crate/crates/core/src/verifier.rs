//! Theorem sweeps over the census of small binary gammoids.
//!
//! Each sweep evaluates both sides of a claimed equivalence on every census
//! matroid and records disagreements as counterexamples. Every minor
//! certificate produced along the way is re-verified and counted. Reports are
//! deterministic; the elapsed time is kept out of the comparable body.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::{self, first_set};
use crate::census::{quotients_of_k4, shared_gammoids};
use crate::error::{Error, Result};
use crate::graph::graphic_witness;
use crate::iso::isomorphic;
use crate::lifts::{element_splitting, element_splitting_labelled, es_splitting, splitting};
use crate::matroid::{for_each_combination, BinaryMatroid};
use crate::minor::{
    gammoid_obstruction, has_minor, in_class_gk_unchecked, k4_pattern, reduce_to_minimal_witness,
    MinorCertificate, Pattern,
};

/// Default `|H|` cap for the splitting sweeps.
pub const DEFAULT_MAX_H: usize = 4;
/// `|H|` cap for the lift identities.
pub const LIFT_MAX_H: usize = 3;
/// Cap on `|X| + |Y|` for the commutation identity.
pub const LIFT_MAX_OUTSIDE: usize = 2;

/// The matroid a certificate lives on, built from the counterexample's data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Host {
    Base,
    Split,
    ElementSplit,
    EsSplit,
    /// `M \ outside_deleted / outside_contracted`.
    Reduced,
    /// Splitting of the reduced minor by the set.
    ReducedSplit,
}

impl Host {
    fn name(self) -> &'static str {
        match self {
            Host::Base => "base",
            Host::Split => "split",
            Host::ElementSplit => "esplit",
            Host::EsSplit => "essplit",
            Host::Reduced => "reduced",
            Host::ReducedSplit => "reduced-split",
        }
    }

    fn parse(s: &str) -> Option<Host> {
        [
            Host::Base,
            Host::Split,
            Host::ElementSplit,
            Host::EsSplit,
            Host::Reduced,
            Host::ReducedSplit,
        ]
        .into_iter()
        .find(|h| h.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateRecord {
    pub host: Host,
    pub pattern: String,
    pub certificate: MinorCertificate,
}

/// One instance where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub matroid: BinaryMatroid,
    pub left: String,
    pub right: String,
    pub set: Vec<String>,
    pub pivot: Option<String>,
    pub outside_deleted: Vec<String>,
    pub outside_contracted: Vec<String>,
    pub certificates: Vec<CertificateRecord>,
}

impl Counterexample {
    fn host(&self, host: Host) -> Result<BinaryMatroid> {
        let m = &self.matroid;
        let reduced = || m.minor(&self.outside_deleted, &self.outside_contracted);
        match host {
            Host::Base => Ok(m.clone()),
            Host::Split => splitting(m, &self.set),
            Host::ElementSplit => element_splitting(m, &self.set),
            Host::EsSplit => {
                let e = self
                    .pivot
                    .as_deref()
                    .ok_or_else(|| Error::Precondition("es-splitting host needs a pivot".into()))?;
                es_splitting(m, &self.set, e)
            }
            Host::Reduced => reduced(),
            Host::ReducedSplit => splitting(&reduced()?, &self.set),
        }
    }

    /// True when every recorded certificate checks out on its host.
    pub fn certificates_verify(&self) -> Result<bool> {
        for c in &self.certificates {
            let pattern = catalog::pattern(&c.pattern)?;
            if !c.certificate.verify(&self.host(c.host)?, &pattern) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn write(&self, out: &mut String) {
        let _ = writeln!(out, "counterexample:");
        let _ = writeln!(out, "left: {}", self.left);
        let _ = writeln!(out, "right: {}", self.right);
        let _ = writeln!(out, "set: {}", self.set.join(","));
        let _ = writeln!(out, "pivot: {}", self.pivot.as_deref().unwrap_or(""));
        let _ = writeln!(out, "outside_delete: {}", self.outside_deleted.join(","));
        let _ = writeln!(out, "outside_contract: {}", self.outside_contracted.join(","));
        for c in &self.certificates {
            let _ = writeln!(out, "certificate {} {}: {}", c.host.name(), c.pattern, c.certificate);
        }
        out.push_str(&self.matroid.to_string());
        let _ = writeln!(out, "end");
    }

    fn parse(lines: &[&str], first_line: usize) -> Result<Self> {
        let err = |i: usize, msg: &str| Error::parse(first_line + i, msg);
        let field = |i: usize, key: &str| -> Result<String> {
            lines
                .get(i)
                .and_then(|l| l.strip_prefix(key))
                .and_then(|l| l.strip_prefix(':'))
                .map(|v| v.trim().to_string())
                .ok_or_else(|| err(i, &format!("expected `{key}:`")))
        };
        let list = |s: String| -> Vec<String> {
            s.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        };
        let left = field(0, "left")?;
        let right = field(1, "right")?;
        let set = list(field(2, "set")?);
        let pivot = Some(field(3, "pivot")?).filter(|p| !p.is_empty());
        let outside_deleted = list(field(4, "outside_delete")?);
        let outside_contracted = list(field(5, "outside_contract")?);
        let mut i = 6;
        let mut certificates = Vec::new();
        while let Some(rest) = lines.get(i).and_then(|l| l.strip_prefix("certificate ")) {
            let (head, cert) = rest
                .split_once(": ")
                .ok_or_else(|| err(i, "expected `certificate <host> <pattern>: ...`"))?;
            let (host, pattern) = head
                .split_once(' ')
                .ok_or_else(|| err(i, "expected host and pattern"))?;
            certificates.push(CertificateRecord {
                host: Host::parse(host).ok_or_else(|| err(i, "unknown host"))?,
                pattern: pattern.to_string(),
                certificate: cert.parse()?,
            });
            i += 1;
        }
        let matroid: BinaryMatroid = lines[i..].join("\n").parse()?;
        Ok(Counterexample {
            matroid,
            left,
            right,
            set,
            pivot,
            outside_deleted,
            outside_contracted,
            certificates,
        })
    }
}

/// The claims the sweeps can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    G2,
    G3,
    Corollary { max_h: usize },
    ElementSplitting { max_h: usize },
    EsSplitting { max_h: usize },
    LiftIdentities,
    Mt1,
    QuotientsK4,
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::G2 => "g2",
            Theorem::G3 => "g3",
            Theorem::Corollary { .. } => "corollary",
            Theorem::ElementSplitting { .. } => "element-splitting",
            Theorem::EsSplitting { .. } => "es-splitting",
            Theorem::LiftIdentities => "lift-identities",
            Theorem::Mt1 => "mt1",
            Theorem::QuotientsK4 => "quotients-k4",
        }
    }

    fn max_h(&self) -> Option<usize> {
        match self {
            Theorem::Corollary { max_h }
            | Theorem::ElementSplitting { max_h }
            | Theorem::EsSplitting { max_h } => Some(*max_h),
            Theorem::LiftIdentities => Some(LIFT_MAX_H),
            _ => None,
        }
    }

    fn from_header(id: &str, max_h: Option<usize>) -> Result<Theorem> {
        let h = max_h.unwrap_or(DEFAULT_MAX_H);
        Ok(match id {
            "g2" => Theorem::G2,
            "g3" => Theorem::G3,
            "corollary" => Theorem::Corollary { max_h: h },
            "element-splitting" => Theorem::ElementSplitting { max_h: h },
            "es-splitting" => Theorem::EsSplitting { max_h: h },
            "lift-identities" => Theorem::LiftIdentities,
            "mt1" => Theorem::Mt1,
            "quotients-k4" => Theorem::QuotientsK4,
            _ => return Err(Error::UnknownName(id.to_string())),
        })
    }
}

/// Outcome of one sweep.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub params: Vec<(String, usize)>,
    pub instances_checked: usize,
    pub certificates_checked: usize,
    pub certificate_failures: usize,
    /// Named tallies, in a fixed order per theorem.
    pub counts: Vec<(String, usize)>,
    pub notes: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// The deterministic part of the report.
    pub fn body(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "report {}", self.theorem_id);
        for (k, v) in &self.params {
            let _ = write!(s, " {k}={v}");
        }
        s.push('\n');
        let _ = writeln!(s, "instances_checked: {}", self.instances_checked);
        let _ = writeln!(s, "certificates_checked: {}", self.certificates_checked);
        let _ = writeln!(s, "certificate_failures: {}", self.certificate_failures);
        for (k, v) in &self.counts {
            let _ = writeln!(s, "count {k}: {v}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(s, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            c.write(&mut s);
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.certificate_failures == 0
    }

    /// Re-checks every counterexample from its recorded data alone.
    pub fn reverify_counterexamples(&self) -> Result<bool> {
        let theorem = Theorem::from_header(&self.theorem_id, self.param("max_h"))?;
        for c in &self.counterexamples {
            if !reverify(theorem, c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn param(&self, key: &str) -> Option<usize> {
        self.params.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.body())?;
        writeln!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())
    }
}

/// Parses a report's header and counterexample blocks and re-verifies each
/// block independently of the sweep that produced it.
pub fn reverify_report_text(text: &str) -> Result<bool> {
    let lines: Vec<&str> = text.lines().collect();
    let header: Vec<&str> = lines
        .first()
        .ok_or_else(|| Error::parse(1, "empty report"))?
        .split_whitespace()
        .collect();
    if header.len() < 2 || header[0] != "report" {
        return Err(Error::parse(1, "expected `report <theorem_id> <params>`"));
    }
    let max_h = header[2..]
        .iter()
        .find_map(|p| p.strip_prefix("max_h="))
        .map(|v| v.parse::<usize>().map_err(|_| Error::parse(1, "bad max_h")))
        .transpose()?;
    let theorem = Theorem::from_header(header[1], max_h)?;
    let mut i = 0;
    while i < lines.len() {
        if lines[i] == "counterexample:" {
            let end = lines[i..]
                .iter()
                .position(|l| *l == "end")
                .ok_or_else(|| Error::parse(i + 1, "unterminated counterexample"))?;
            let c = Counterexample::parse(&lines[i + 1..i + end], i + 2)?;
            if !reverify(theorem, &c)? {
                return Ok(false);
            }
            i += end;
        }
        i += 1;
    }
    Ok(true)
}

/// A counterexample re-verifies when its certificates check out and
/// evaluating the theorem afresh on its matroid reproduces it exactly.
pub fn reverify(theorem: Theorem, c: &Counterexample) -> Result<bool> {
    if !c.certificates_verify()? {
        return Ok(false);
    }
    let again = match theorem {
        Theorem::QuotientsK4 => evaluate_quotient(&c.matroid)?,
        _ => evaluate(theorem, &c.matroid)?.counterexample,
    };
    Ok(again.as_ref() == Some(c))
}

#[derive(Default)]
struct Outcome {
    counterexample: Option<Counterexample>,
    certificates_checked: usize,
    certificate_failures: usize,
    tallies: Vec<&'static str>,
}

struct Ctx<'a> {
    m: &'a BinaryMatroid,
    out: Outcome,
}

impl Ctx<'_> {
    fn record(&mut self, host: &BinaryMatroid, pattern: &Pattern, c: &MinorCertificate) {
        self.out.certificates_checked += 1;
        if !c.verify(host, pattern) {
            self.out.certificate_failures += 1;
        }
    }

    /// First pattern (by name) found as a minor of the base matroid.
    fn first_minor(&mut self, names: &[&str]) -> Result<Option<CertificateRecord>> {
        for name in names {
            let p = catalog::pattern(name)?;
            if let Some(c) = has_minor(self.m, &p)? {
                self.record(self.m, &p, &c);
                return Ok(Some(CertificateRecord {
                    host: Host::Base,
                    pattern: name.to_string(),
                    certificate: c,
                }));
            }
        }
        Ok(None)
    }

    fn counterexample(&self, left: String, right: String) -> Counterexample {
        Counterexample {
            matroid: self.m.clone(),
            left,
            right,
            set: Vec::new(),
            pivot: None,
            outside_deleted: Vec::new(),
            outside_contracted: Vec::new(),
            certificates: Vec::new(),
        }
    }
}

/// A non-gammoid lift found while searching `H`.
struct Breaker {
    set: Vec<String>,
    pivot: Option<String>,
    record: CertificateRecord,
}

fn find_breaker(ctx: &mut Ctx<'_>, theorem: Theorem) -> Result<Option<Breaker>> {
    let m = ctx.m;
    let max_h = theorem.max_h().unwrap_or(DEFAULT_MAX_H).min(m.len());
    let mut hit: Option<(Option<String>, Host, BinaryMatroid, MinorCertificate)> = None;
    let set = first_set(m, 2..=max_h, |h| {
        let hosts: Vec<(Option<String>, Host, BinaryMatroid)> = match theorem {
            Theorem::Corollary { .. } => vec![(None, Host::Split, splitting(m, h)?)],
            Theorem::ElementSplitting { .. } => {
                vec![(None, Host::ElementSplit, element_splitting(m, h)?)]
            }
            _ => h
                .iter()
                .map(|e| Ok((Some(e.clone()), Host::EsSplit, es_splitting(m, h, e)?)))
                .collect::<Result<_>>()?,
        };
        for (pivot, kind, host) in hosts {
            if let Some(c) = gammoid_obstruction(&host)? {
                hit = Some((pivot, kind, host, c));
                return Ok(true);
            }
        }
        Ok(false)
    })?;
    let Some(set) = set else {
        return Ok(None);
    };
    let (pivot, kind, host, c) = hit.expect("set found with a hit");
    ctx.record(&host, k4_pattern(), &c);
    Ok(Some(Breaker {
        set,
        pivot,
        record: CertificateRecord {
            host: kind,
            pattern: "K4".into(),
            certificate: c,
        },
    }))
}

/// Evaluates one theorem on one matroid.
fn evaluate(theorem: Theorem, m: &BinaryMatroid) -> Result<Outcome> {
    let mut ctx = Ctx {
        m,
        out: Outcome::default(),
    };
    match theorem {
        Theorem::G2 | Theorem::G3 => {
            let (k, names): (usize, &[&str]) = if theorem == Theorem::G2 {
                (2, &["G1"])
            } else {
                (3, &["G2", "G3", "G4"])
            };
            let witness = in_class_gk_unchecked(m, k)?;
            if let Some(w) = &witness {
                let host = splitting(m, &w.set)?;
                ctx.record(&host, k4_pattern(), &w.certificate);
                ctx.out.tallies.push("in_class");
            }
            let minor = ctx.first_minor(names)?;
            if minor.is_some() {
                ctx.out.tallies.push("has_minor");
            }
            if witness.is_some() != minor.is_some() {
                let mut c = ctx.counterexample(
                    format!("in_class={}", witness.is_some()),
                    format!(
                        "minor={}",
                        minor.as_ref().map_or("none".to_string(), |r| r.pattern.clone())
                    ),
                );
                if let Some(w) = witness {
                    c.set = w.set;
                    c.certificates.push(CertificateRecord {
                        host: Host::Split,
                        pattern: "K4".into(),
                        certificate: w.certificate,
                    });
                }
                c.certificates.extend(minor);
                ctx.out.counterexample = Some(c);
            }
        }
        Theorem::Corollary { .. } | Theorem::ElementSplitting { .. } | Theorem::EsSplitting { .. } => {
            let names: &[&str] = match theorem {
                Theorem::Corollary { .. } => &["Q2", "Q3", "Q4"],
                Theorem::ElementSplitting { .. } => &["G6"],
                _ => &["G7"],
            };
            let breaker = find_breaker(&mut ctx, theorem)?;
            if breaker.is_some() {
                ctx.out.tallies.push("breaks");
            }
            let minor = ctx.first_minor(names)?;
            if minor.is_some() {
                ctx.out.tallies.push("has_minor");
            }
            if breaker.is_some() != minor.is_some() {
                let mut c = ctx.counterexample(
                    format!("breaks={}", breaker.is_some()),
                    format!(
                        "minor={}",
                        minor.as_ref().map_or("none".to_string(), |r| r.pattern.clone())
                    ),
                );
                if let Some(b) = breaker {
                    c.set = b.set;
                    c.pivot = b.pivot;
                    c.certificates.push(b.record);
                }
                c.certificates.extend(minor);
                ctx.out.counterexample = Some(c);
            }
        }
        Theorem::LiftIdentities => lift_identities(&mut ctx)?,
        Theorem::Mt1 => mt1(&mut ctx)?,
        Theorem::QuotientsK4 => {
            ctx.out.counterexample = evaluate_quotient(m)?;
        }
    }
    Ok(ctx.out)
}

fn sorted_subsets(labels: &[String], max: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for k in 0..=max.min(labels.len()) {
        for_each_combination(labels.len(), k, &mut buf, &mut |c| {
            out.push(c.iter().map(|&i| labels[i].clone()).collect());
        });
    }
    out
}

fn lift_identities(ctx: &mut Ctx<'_>) -> Result<()> {
    let m = ctx.m;
    let mut labels = m.labels().to_vec();
    labels.sort();
    for h in sorted_subsets(&labels, LIFT_MAX_H) {
        let split = splitting(m, &h)?;
        let (es, gamma) = element_splitting_labelled(m, &h)?;
        let failure = if !es.delete(&[&gamma])?.same_matroid(&split) {
            Some(("delete-gamma", Vec::new(), Vec::new()))
        } else if !es.contract(&[&gamma])?.same_matroid(m) {
            Some(("contract-gamma", Vec::new(), Vec::new()))
        } else {
            let outside: Vec<String> = labels.iter().filter(|l| !h.contains(l)).cloned().collect();
            let mut bad = None;
            'outer: for x in sorted_subsets(&outside, LIFT_MAX_OUTSIDE) {
                let rest: Vec<String> = outside.iter().filter(|l| !x.contains(l)).cloned().collect();
                for y in sorted_subsets(&rest, LIFT_MAX_OUTSIDE - x.len()) {
                    let a = splitting(&m.minor(&x, &y)?, &h)?;
                    let b = split.minor(&x, &y)?;
                    ctx.out.tallies.push("commutation");
                    if !a.same_matroid(&b) {
                        bad = Some(("commutation", x, y));
                        break 'outer;
                    }
                }
            }
            bad
        };
        ctx.out.tallies.push("set");
        if let Some((which, x, y)) = failure {
            let mut c = ctx.counterexample(format!("identity={which}"), "holds=false".into());
            c.set = h;
            c.outside_deleted = x;
            c.outside_contracted = y;
            ctx.out.counterexample = Some(c);
            return Ok(());
        }
    }
    Ok(())
}

fn mt1(ctx: &mut Ctx<'_>) -> Result<()> {
    let m = ctx.m;
    for k in [2usize, 3] {
        let Some(w) = in_class_gk_unchecked(m, k)? else {
            continue;
        };
        ctx.out
            .tallies
            .push(if k == 2 { "in_class_2" } else { "in_class_3" });
        let red = reduce_to_minimal_witness(m, &w.set)?;
        let p_split = splitting(&red.p, &red.set)?;
        ctx.record(&p_split, k4_pattern(), &red.certificate);
        let mut quotient_case = None;
        for name in ["Q2", "Q3", "Q4"] {
            let pat = catalog::pattern(name)?;
            if let Some(c) = has_minor(&red.p, &pat)? {
                ctx.record(&red.p, &pat, &c);
                quotient_case = Some(name);
                break;
            }
        }
        // 𝒢₁ is empty, so only 𝒢₂'s minimal minor M(G1) can be extended.
        let extension_case = k == 3 && quotient_case.is_none() && {
            let g1 = catalog::get("G1")?;
            let g1 = g1.matroid().expect("G1 is binary");
            (0..red.p.len()).any(|i| isomorphic(&red.p.delete_indices(&[i]), g1).is_some())
        };
        if quotient_case.is_some() {
            ctx.out.tallies.push("case_quotient_minor");
        } else if extension_case {
            ctx.out.tallies.push("case_extension");
        } else {
            let mut c = ctx.counterexample(format!("in_class_{k}=true"), "case=none".into());
            c.set = red.set;
            c.outside_deleted = red.deleted_outside;
            c.outside_contracted = red.contracted_outside;
            c.certificates.push(CertificateRecord {
                host: Host::ReducedSplit,
                pattern: "K4".into(),
                certificate: red.certificate,
            });
            ctx.out.counterexample = Some(c);
            return Ok(());
        }
    }
    Ok(())
}

/// Classification of a quotient of `M(K4)`, or the failure to realize a
/// catalog `Q_i`; `None` when nothing is wrong.
fn evaluate_quotient(m: &BinaryMatroid) -> Result<Option<Counterexample>> {
    let records = quotients_of_k4()?;
    let blank = |left: String, right: String| Counterexample {
        matroid: m.clone(),
        left,
        right,
        set: Vec::new(),
        pivot: None,
        outside_deleted: Vec::new(),
        outside_contracted: Vec::new(),
        certificates: Vec::new(),
    };
    let is_quotient = records.iter().any(|r| isomorphic(&r.quotient, m).is_some());
    if is_quotient {
        let graphic = graphic_witness(m, m.rank() + 1)?.is_some();
        let matches = ["Q1", "Q2", "Q3", "Q4"]
            .into_iter()
            .map(|n| Ok((n, catalog::get(n)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .any(|(_, e)| isomorphic(e.matroid().expect("binary"), m).is_some());
        if graphic && !matches {
            return Ok(Some(blank("graphic=true".into(), "matches=none".into())));
        }
        return Ok(None);
    }
    for n in ["Q1", "Q2", "Q3", "Q4"] {
        let e = catalog::get(n)?;
        if e.matroid().is_some_and(|q| q.same_matroid(m)) {
            return Ok(Some(blank(format!("catalog={n}"), "realized=false".into())));
        }
    }
    Ok(None)
}

fn run_sweep(theorem: Theorem, max_edges: usize, params: Vec<(String, usize)>) -> Result<VerificationReport> {
    let start = Instant::now();
    let census = shared_gammoids(max_edges)?;
    let outcomes: Vec<Outcome> = census
        .par_iter()
        .map(|e| evaluate(theorem, &e.matroid))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport {
        theorem_id: theorem.id().to_string(),
        params,
        instances_checked: outcomes.len(),
        certificates_checked: 0,
        certificate_failures: 0,
        counts: Vec::new(),
        notes: Vec::new(),
        counterexamples: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let mut tallies: Vec<(String, usize)> = Vec::new();
    for o in outcomes {
        report.certificates_checked += o.certificates_checked;
        report.certificate_failures += o.certificate_failures;
        for t in o.tallies {
            match tallies.iter_mut().find(|(k, _)| k == t) {
                Some((_, v)) => *v += 1,
                None => tallies.push((t.to_string(), 1)),
            }
        }
        report.counterexamples.extend(o.counterexample);
    }
    tallies.sort();
    report.counts = tallies;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn edges_param(max_edges: usize) -> Vec<(String, usize)> {
    vec![("max_edges".into(), max_edges)]
}

fn edges_h_params(max_edges: usize, max_h: usize) -> Vec<(String, usize)> {
    vec![("max_edges".into(), max_edges), ("max_h".into(), max_h)]
}

/// `M ∈ 𝒢₂` iff `M` has an `M(G1)` minor.
pub fn verify_g2(max_edges: usize) -> Result<VerificationReport> {
    run_sweep(Theorem::G2, max_edges, edges_param(max_edges))
}

/// `M ∈ 𝒢₃` iff `M` has an `M(G2)`, `M(G3)` or `M(G4)` minor. Both phrasings
/// of this claim (membership iff minor, non-membership iff no minor) are the
/// same equivalence, so one sweep decides both.
pub fn verify_g3(max_edges: usize) -> Result<VerificationReport> {
    run_sweep(Theorem::G3, max_edges, edges_param(max_edges))
}

/// Every splitting with `2 <= |H| <= max_h` is a gammoid iff there is no
/// `M(Q2)`, `M(Q3)` or `M(Q4)` minor.
pub fn verify_corollary_splitting(max_edges: usize, max_h: usize) -> Result<VerificationReport> {
    let mut r = run_sweep(
        Theorem::Corollary { max_h },
        max_edges,
        edges_h_params(max_edges, max_h),
    )?;
    let g1 = catalog::get("G1")?;
    let g1 = g1.matroid().expect("G1 is binary");
    let mut hit = None;
    for name in ["Q2", "Q3", "Q4"] {
        let pat = catalog::pattern(name)?;
        if let Some(c) = has_minor(g1, &pat)? {
            r.certificates_checked += 1;
            if !c.verify(g1, &pat) {
                r.certificate_failures += 1;
            }
            hit = Some(format!("{name} ({c})"));
            break;
        }
    }
    r.notes.push(match hit {
        Some(h) => format!("M(G1) has an M(Q_i) minor: {h}"),
        None => "M(G1) has no M(Q_i) minor for i = 2,3,4".into(),
    });
    Ok(r)
}

/// Every element splitting with `2 <= |H| <= max_h` is a gammoid iff there
/// is no `M(G6)` minor.
pub fn verify_element_splitting(max_edges: usize, max_h: usize) -> Result<VerificationReport> {
    run_sweep(
        Theorem::ElementSplitting { max_h },
        max_edges,
        edges_h_params(max_edges, max_h),
    )
}

/// Every es-splitting with `2 <= |H| <= max_h`, `e ∈ H` is a gammoid iff
/// there is no `M(G7)` minor.
pub fn verify_es_splitting(max_edges: usize, max_h: usize) -> Result<VerificationReport> {
    run_sweep(
        Theorem::EsSplitting { max_h },
        max_edges,
        edges_h_params(max_edges, max_h),
    )
}

/// For every `H` with `|H| <= 3`: `M'_H \ γ = M_H` and `M'_H / γ = M`, and
/// `(M \ X / Y)_H = M_H \ X / Y` for disjoint `X, Y` outside `H` with
/// `|X| + |Y| <= 2`. Equalities are exact on labelled ground sets.
pub fn verify_lift_identities(max_edges: usize) -> Result<VerificationReport> {
    let mut r = run_sweep(
        Theorem::LiftIdentities,
        max_edges,
        vec![
            ("max_edges".into(), max_edges),
            ("max_h".into(), LIFT_MAX_H),
            ("max_outside".into(), LIFT_MAX_OUTSIDE),
        ],
    )?;
    r.notes
        .push("identities are checked as equality of labelled matroids".into());
    Ok(r)
}

/// Classifies the eight single-element extensions of `M(K4)` and their
/// quotients, and checks that every `Q_i` is realized.
pub fn verify_quotients_k4() -> Result<VerificationReport> {
    let start = Instant::now();
    let records = quotients_of_k4()?;
    let mut r = VerificationReport {
        theorem_id: Theorem::QuotientsK4.id().into(),
        params: Vec::new(),
        instances_checked: records.len(),
        certificates_checked: 0,
        certificate_failures: 0,
        counts: Vec::new(),
        notes: Vec::new(),
        counterexamples: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let mut graphic = 0;
    for q in &records {
        if q.is_graphic() {
            graphic += 1;
        }
        let matches = if q.matches.is_empty() {
            "none".to_string()
        } else {
            q.matches.join(",")
        };
        r.notes.push(format!(
            "column {}: quotient rank {} on {} elements, graphic={}, matches={}",
            q.column_bits(),
            q.quotient.rank(),
            q.quotient.len(),
            q.is_graphic(),
            matches
        ));
        if let Some(c) = evaluate_quotient(&q.quotient)? {
            r.counterexamples.push(c);
        }
    }
    for n in ["Q1", "Q2", "Q3", "Q4"] {
        let realized = records.iter().any(|q| q.matches.iter().any(|m| m == n));
        r.notes.push(format!("{n} realized: {realized}"));
        if !realized {
            let e = catalog::get(n)?;
            if let Some(c) = evaluate_quotient(e.matroid().expect("binary"))? {
                r.counterexamples.push(c);
            }
        }
    }
    r.counts = vec![("classified".into(), records.len()), ("graphic".into(), graphic)];
    r.elapsed = start.elapsed();
    Ok(r)
}

/// For every census matroid in `𝒢₂` or `𝒢₃`, the reduced witness `P` has an
/// `M(Q_i)` minor (`i = 2,3,4`) or is a one-element extension of `M(G1)`.
pub fn verify_mt1_structure(max_edges: usize) -> Result<VerificationReport> {
    let mut r = run_sweep(Theorem::Mt1, max_edges, edges_param(max_edges))?;
    r.notes
        .push("G_1 is empty: splitting by one element adds a coloop".into());
    Ok(r)
}

/// Default parameters used by [`verify_by_name`].
pub fn default_params(id: &str) -> Option<(usize, usize)> {
    Some(match id {
        "g2" | "g3" => (7, DEFAULT_MAX_H),
        "element-splitting" | "corollary" => (6, DEFAULT_MAX_H),
        "es-splitting" => (5, 3),
        "lift-identities" | "mt1" => (6, LIFT_MAX_H),
        "quotients-k4" => (0, 0),
        _ => return None,
    })
}

/// Runs a sweep by its identifier, filling in defaults.
pub fn verify_by_name(
    id: &str,
    max_edges: Option<usize>,
    max_h: Option<usize>,
) -> Result<VerificationReport> {
    let (e0, h0) = default_params(id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
    let e = max_edges.unwrap_or(e0);
    let h = max_h.unwrap_or(h0);
    match id {
        "g2" => verify_g2(e),
        "g3" => verify_g3(e),
        "corollary" => verify_corollary_splitting(e, h),
        "element-splitting" => verify_element_splitting(e, h),
        "es-splitting" => verify_es_splitting(e, h),
        "lift-identities" => verify_lift_identities(e),
        "mt1" => verify_mt1_structure(e),
        _ => verify_quotients_k4(),
    }
}
