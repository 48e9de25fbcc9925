//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use binlift::catalog;
use binlift::census::{
    enumerate_codes, enumerate_codes_naive, enumerate_multigraphs, shared_gammoids,
    CensusOptions,
};
use binlift::minor::{has_minor, is_binary_gammoid, k4_pattern, Pattern};
use binlift::verifier::{
    reverify_report_text, verify_corollary_splitting, verify_element_splitting,
    verify_es_splitting, verify_g2, verify_g3, verify_lift_identities, verify_quotients_k4,
    VerificationReport,
};
use binlift::{isomorphic, splitting, verify_bijection, BinaryMatroid, Gf2Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CRIT1_BUDGET: Duration = Duration::from_secs(1);
const CRIT2_BUDGET: Duration = Duration::from_secs(120);
const CRIT3_BUDGET: Duration = Duration::from_secs(10);
const CRIT4_BUDGET: Duration = Duration::from_secs(300);
const CRIT5_BUDGET: Duration = Duration::from_secs(900);
const RANDOM_INSTANCES: usize = 500;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn within(outcome: Outcome, elapsed: Duration, budget: Duration) -> Outcome {
    if outcome.ok && elapsed > budget {
        return fail(format!(
            "{} but took {:.2}s > {:.0}s budget",
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        ));
    }
    outcome
}

fn a2_split() -> BinaryMatroid {
    let a2 = Gf2Matrix::from_bits(6, &[[1, 0, 0, 1, 0, 1], [0, 1, 0, 0, 1, 1]]).unwrap();
    let m = BinaryMatroid::new(&a2, vec!["x", "y", "z", "a", "b", "c"]).unwrap();
    splitting(&m, &["x", "y", "z"]).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let split = a2_split();
    let k4 = catalog::get("K4").unwrap();
    let k4 = k4.matroid().unwrap();
    let Some(map) = isomorphic(&split, k4) else {
        return fail("(A_2)_H not isomorphic to M(K4)");
    };
    if !verify_bijection(&split, k4, &map) {
        return fail("bijection does not re-verify");
    }
    let cert = match has_minor(&split, k4_pattern()) {
        Ok(Some(c)) if c.is_trivial() && c.verify(&split, k4_pattern()) => c,
        _ => return fail("no verified empty-sets minor certificate"),
    };
    within(
        pass(format!("(A_2)_H ≅ M(K4), certificate `{cert}`")),
        start.elapsed(),
        CRIT1_BUDGET,
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let lines = match catalog::check_all() {
        Ok(l) => l,
        Err(e) => return fail(format!("catalog check errored: {e}")),
    };
    let failed: Vec<String> = lines
        .iter()
        .filter(|l| !l.verdict.passed)
        .map(|l| format!("{}: {}", l.name, l.verdict.detail))
        .collect();
    if !failed.is_empty() {
        return fail(failed.join("; "));
    }
    within(
        pass(format!("{} properties hold", lines.len())),
        start.elapsed(),
        CRIT2_BUDGET,
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = match verify_quotients_k4() {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let realized = ["Q1", "Q2", "Q3", "Q4"]
        .iter()
        .all(|q| r.notes.contains(&format!("{q} realized: true")));
    let outcome = if r.instances_checked == 8 && r.passed() && realized {
        pass("8 columns classified; every graphic quotient matches; Q1..Q4 realized")
    } else {
        fail(r.body())
    };
    within(outcome, start.elapsed(), CRIT3_BUDGET)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = match verify_lift_identities(6) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let outcome = if r.passed() && r.instances_checked > 0 {
        let sets = r.counts.iter().find(|(k, _)| k == "set").map_or(0, |c| c.1);
        pass(format!(
            "{} matroids, {} (M, H) pairs, zero failures",
            r.instances_checked, sets
        ))
    } else {
        fail(format!("{} identity failures", r.counterexamples.len()))
    };
    within(outcome, start.elapsed(), CRIT4_BUDGET)
}

fn run_twice(f: impl Fn() -> binlift::Result<VerificationReport>) -> Result<VerificationReport, String> {
    let a = f().map_err(|e| e.to_string())?;
    let b = f().map_err(|e| e.to_string())?;
    if a.body() != b.body() {
        return Err(format!("{}: report not deterministic", a.theorem_id));
    }
    Ok(a)
}

fn criterion_5(certs: &mut (usize, usize)) -> Outcome {
    let start = Instant::now();
    type Sweep = Box<dyn Fn() -> binlift::Result<VerificationReport>>;
    let sweeps: Vec<Sweep> = vec![
        Box::new(|| verify_g2(7)),
        Box::new(|| verify_g3(7)),
        Box::new(|| verify_element_splitting(6, 4)),
        Box::new(|| verify_es_splitting(5, 3)),
        Box::new(|| verify_corollary_splitting(6, 4)),
    ];
    let mut summary = Vec::new();
    for s in sweeps {
        let r = match run_twice(s) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        certs.0 += r.certificates_checked;
        certs.1 += r.certificate_failures;
        match reverify_report_text(&r.body()) {
            Ok(true) => {}
            _ => return fail(format!("{}: counterexample does not re-verify", r.theorem_id)),
        }
        if r.theorem_id == "corollary" && !r.notes.iter().any(|n| n.starts_with("M(G1) has an M(Q_i) minor")) {
            return fail("corollary: G1 / Q_i consistency note missing");
        }
        summary.push(format!(
            "{}: {} instances, {} counterexamples",
            r.theorem_id,
            r.instances_checked,
            r.counterexamples.len()
        ));
        if !r.counterexamples.is_empty() {
            return fail(summary.join("; "));
        }
    }
    within(pass(summary.join("; ")), start.elapsed(), CRIT5_BUDGET)
}

fn criterion_6(certs: (usize, usize)) -> Outcome {
    let census = match shared_gammoids(6) {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    // minor-closure
    for e in census.iter() {
        let m = &e.matroid;
        for minor in catalog::single_element_minors(m) {
            if !is_binary_gammoid(&minor).unwrap() {
                return fail(format!("minor-closure fails on {}", e.graph.encode()));
            }
        }
    }
    // U24 in binary hosts, including the non-gammoids
    let u24 = Pattern::u24();
    let graphs = enumerate_multigraphs(6, true, &CensusOptions::default()).unwrap();
    let mut hosts: Vec<BinaryMatroid> = graphs.iter().map(|g| g.cycle_matroid()).collect();
    hosts.push(catalog::fano());
    for h in &hosts {
        if has_minor(h, &u24).unwrap().is_some() {
            return fail("U24 found in a binary host");
        }
    }
    // dual involution
    if census.iter().any(|e| !e.matroid.dual().dual().same_matroid(&e.matroid)) {
        return fail("dual is not an involution");
    }
    // submodularity on random instances
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_INSTANCES {
        let r = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=9);
        let rows: Vec<Vec<u8>> = (0..r)
            .map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect())
            .collect();
        let m = BinaryMatroid::with_default_labels(&Gf2Matrix::from_bits(n, &rows).unwrap()).unwrap();
        let a: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let b: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let union: BTreeSet<usize> = a.iter().chain(&b).copied().collect();
        let inter: Vec<usize> = a.iter().filter(|i| b.contains(i)).copied().collect();
        let union: Vec<usize> = union.into_iter().collect();
        if m.rank_of_indices(&a) + m.rank_of_indices(&b)
            < m.rank_of_indices(&union) + m.rank_of_indices(&inter)
        {
            return fail("submodularity violated");
        }
    }
    // isomorphism certificates against a reversed relabelling of each census matroid
    let mut iso_checked = 0;
    for e in census.iter() {
        let m = &e.matroid;
        let order: Vec<String> = m.labels().iter().rev().cloned().collect();
        let shuffled = m.reorder(&order).unwrap();
        match isomorphic(m, &shuffled) {
            Some(map) if verify_bijection(m, &shuffled, &map) => iso_checked += 1,
            _ => return fail("isomorphism certificate does not re-verify"),
        }
    }
    if certs.1 != 0 {
        return fail(format!("{} sweep certificates failed re-verification", certs.1));
    }
    pass(format!(
        "{} census gammoids closed under minors; U24 absent from {} hosts; {} random submodularity checks; {} sweep certificates and {} isomorphism certificates re-verified",
        census.len(),
        hosts.len(),
        RANDOM_INSTANCES,
        certs.0,
        iso_checked
    ))
}

fn criterion_7() -> Outcome {
    for connected in [true, false] {
        let orderly: BTreeSet<_> = enumerate_codes(5, connected, &CensusOptions::default())
            .unwrap()
            .into_iter()
            .collect();
        let naive = enumerate_codes_naive(5, connected);
        if orderly != naive {
            return fail(format!(
                "connected={connected}: orderly {} vs naive {}",
                orderly.len(),
                naive.len()
            ));
        }
    }
    let stream = |jobs: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .unwrap()
            .install(|| {
                let codes = enumerate_codes(7, true, &CensusOptions::default()).unwrap();
                let report = verify_g2(5).unwrap();
                (codes, report.body())
            })
    };
    let one = stream(1);
    let many = stream(4);
    if one != many {
        return fail("stream differs between 1 and 4 workers");
    }
    pass(format!(
        "orderly equals naive at max_edges <= 5; {} graphs identical for 1 and 4 workers",
        one.0.len()
    ))
}

fn main() -> ExitCode {
    let mut all_ok = true;
    let mut certs = (0, 0);
    let mut report = |n: usize, name: &str, o: Outcome, elapsed: Duration| {
        all_ok &= o.ok;
        println!(
            "criterion {n} [{name}]: {} ({:.2}s) {}",
            if o.ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            o.detail
        );
    };
    let timed = |f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        (o, t.elapsed())
    };
    let (o, t) = timed(&mut criterion_1);
    report(1, "A_2 splitting", o, t);
    let (o, t) = timed(&mut criterion_2);
    report(2, "catalog check", o, t);
    let (o, t) = timed(&mut criterion_3);
    report(3, "quotients of K4", o, t);
    let (o, t) = timed(&mut criterion_4);
    report(4, "lift identities", o, t);
    let (o, t) = timed(&mut || criterion_5(&mut certs));
    report(5, "theorem sweeps", o, t);
    let (o, t) = timed(&mut || criterion_6(certs));
    report(6, "property suites", o, t);
    let (o, t) = timed(&mut criterion_7);
    report(7, "census cross-validation", o, t);
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
