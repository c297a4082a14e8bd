//! Runs the built-in suite grouped by acceptance criterion, checks that the
//! suite covers what each criterion asks for, and prints one line per
//! criterion. Exits nonzero if any criterion is red.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use twistdem::suite::{default_threads, run_cases, Case, Suite};
use twistdem_core::verify::{Status, VerificationReport};

struct Criterion {
    id: &'static str,
    title: &'static str,
    checks: &'static [&'static str],
    budget: Duration,
    coverage: fn(&[Case], &[VerificationReport]) -> Result<(), String>,
}

const MINUTE: Duration = Duration::from_secs(60);

fn ids(reports: &[VerificationReport]) -> BTreeSet<String> {
    reports.iter().filter(|r| r.passed()).map(|r| r.case_id()).collect()
}

fn require(reports: &[VerificationReport], wanted: &[&str]) -> Result<(), String> {
    let have = ids(reports);
    let missing: Vec<&str> = wanted.iter().copied().filter(|w| !have.contains(*w)).collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(format!("no passing report for {missing:?}"))
    }
}

fn qsystem(_: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    let mut wanted = Vec::new();
    for l in 1..=3 {
        wanted.push(format!("qsystem(type=A2^(2), i=1, level={l})"));
    }
    for ty in ["A4^(2)", "D4^(3)"] {
        for i in 1..=2 {
            for l in 1..=2 {
                wanted.push(format!("qsystem(type={ty}, i={i}, level={l})"));
            }
        }
    }
    for i in [1, 4] {
        wanted.push(format!("qsystem(type=D5^(2), i={i}, level=1)"));
    }
    require(r, &wanted.iter().map(String::as_str).collect::<Vec<_>>())
}

fn tensor(cases: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    let mut families = BTreeSet::new();
    for c in cases {
        let Case::Tensor { ty, level, parts, lambda0 } = c else { continue };
        let size: i64 = parts.iter().flatten().map(|c| c * level).sum::<i64>() + lambda0.iter().sum::<i64>();
        if ty.n > 4 || *level > 2 || size > 3 {
            return Err(format!("case out of range: {c:?}"));
        }
        if ty.family == "e6_2" && *level != 1 {
            return Err("E6(2) only at level 1".into());
        }
        families.insert(ty.family.clone());
    }
    let passed = r.iter().filter(|r| r.passed()).count();
    if passed < 10 {
        return Err(format!("only {passed} passing cases"));
    }
    if families.len() < 5 {
        return Err(format!("families covered: {families:?}"));
    }
    Ok(())
}

fn dims(_: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    let mut wanted = Vec::new();
    for l in 1..=2 {
        for lift in ["[1,0]", "[0,1]"] {
            wanted.push(format!("dims(type=A2^(2), level={l}, lambda=[1], lift={lift})"));
        }
        for (lambda, lifts) in [("[1,0]", ["[1,0,0,0]", "[0,0,0,1]"]), ("[0,1]", ["[0,1,0,0]", "[0,0,1,0]"])] {
            for lift in lifts {
                wanted.push(format!("dims(type=A4^(2), level={l}, lambda={lambda}, lift={lift})"));
            }
        }
    }
    // A lift other than the canonical one, moved by triality.
    wanted.push("dims(type=D4^(3), level=1, lambda=[1,0], lift=[0,0,1,0])".into());
    wanted.push("dims(type=D4^(3), level=1, lambda=[1,0], lift=[0,0,0,1])".into());
    require(r, &wanted.iter().map(String::as_str).collect::<Vec<_>>())
}

fn ses(_: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    require(
        r,
        &["ses(type=A2^(2), i=1, level=1)", "ses(type=A2^(2), i=1, level=2)", "ses(type=D4^(3), i=2, level=1)"],
    )
}

fn branching(_: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    let mut wanted = Vec::new();
    for l in 1..=2 {
        wanted.push(format!("branching(case=so_vector, level={l}, type=D4^(2))"));
        wanted.push(format!("branching(case=so_spin, level={l}, type=D4^(2))"));
        for i in 1..=2 {
            wanted.push(format!("branching(case=sl_odd_to_sp, i={i}, level={l}, type=A4^(2))"));
        }
    }
    wanted.push("branching(case=e6_to_f4, level=1, type=E6^(2))".into());
    require(r, &wanted.iter().map(String::as_str).collect::<Vec<_>>())
}

fn matrices(cases: &[Case], _: &[VerificationReport]) -> Result<(), String> {
    let mut kinds = BTreeSet::new();
    for c in cases {
        if let Case::Matrices { case, m, cases, max_size, .. } = c {
            if *cases < 1000 || *max_size > 6 {
                return Err(format!("{c:?} is outside 1000 instances of size <= 6"));
            }
            kinds.insert((case.clone(), *m));
        }
    }
    if kinds.len() < 3 {
        return Err(format!("matrix cases covered: {kinds:?}"));
    }
    Ok(())
}

fn indexsets(cases: &[Case], _: &[VerificationReport]) -> Result<(), String> {
    cases
        .iter()
        .any(|c| matches!(c, Case::Indexsets { rmax, smax, kmax } if *rmax >= 6 && *smax >= 6 && *kmax >= 4))
        .then_some(())
        .ok_or_else(|| "no index-set case with r, s <= 6 and k <= 4".into())
}

fn engine(cases: &[Case], _: &[VerificationReport]) -> Result<(), String> {
    let mut samples = 0;
    let mut words = false;
    let mut grade_zero = false;
    let mut lengths = false;
    for c in cases {
        match c {
            Case::Idempotent { samples: s, .. } => samples += s,
            Case::WordIndependence { ty, levels, .. } => {
                words |= ty.n <= 2 && levels.contains(&1) && levels.contains(&2);
            }
            Case::GradeZero { .. } => grade_zero = true,
            Case::LengthAdditivity { ty, samples, .. } => lengths |= ty.n == 2 && *samples >= 20,
            _ => {}
        }
    }
    if samples < 100 || !words || !grade_zero || !lengths {
        return Err(format!(
            "idempotence samples {samples}, word independence {words}, grade zero {grade_zero}, lengths {lengths}"
        ));
    }
    Ok(())
}

fn presentation(cases: &[Case], _: &[VerificationReport]) -> Result<(), String> {
    let families: BTreeSet<&str> = cases
        .iter()
        .filter_map(|c| match c {
            Case::Presentation { ty, max_level, max_coord } if *max_level >= 3 && *max_coord >= 3 => {
                Some(ty.family.as_str())
            }
            _ => None,
        })
        .collect();
    if families.len() < 5 {
        return Err(format!("families covered: {families:?}"));
    }
    Ok(())
}

fn fusion(_: &[Case], r: &[VerificationReport]) -> Result<(), String> {
    if r.iter().any(|r| r.check == "fusion") && r.iter().any(|r| r.check == "fusion_surjection") {
        Ok(())
    } else {
        Err("needs both fusion and fusion_surjection reports".into())
    }
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "1", title: "Q-system", checks: &["qsystem"], budget: MINUTE.saturating_mul(5), coverage: qsystem },
    Criterion { id: "2", title: "tensor decomposition", checks: &["tensor"], budget: MINUTE.saturating_mul(10), coverage: tensor },
    Criterion { id: "3", title: "dimension equality", checks: &["dims"], budget: MINUTE.saturating_mul(10), coverage: dims },
    Criterion { id: "4", title: "Q-system short exact sequence", checks: &["ses"], budget: MINUTE.saturating_mul(10), coverage: ses },
    Criterion { id: "5", title: "branching", checks: &["branching"], budget: MINUTE.saturating_mul(30), coverage: branching },
    Criterion { id: "6", title: "matrix invertibility", checks: &["matrices"], budget: MINUTE, coverage: matrices },
    Criterion { id: "7", title: "index-set combinatorics", checks: &["indexsets"], budget: MINUTE, coverage: indexsets },
    Criterion {
        id: "8",
        title: "Demazure engine self-consistency",
        checks: &["demazure_idempotent", "word_independence", "grade_zero", "length_additivity"],
        budget: MINUTE.saturating_mul(10),
        coverage: engine,
    },
    Criterion { id: "9", title: "presentation exponents", checks: &["presentation"], budget: MINUTE.saturating_mul(10), coverage: presentation },
    Criterion {
        id: "+",
        title: "fusion dimensions (supplementary)",
        checks: &["fusion", "fusion_surjection"],
        budget: MINUTE.saturating_mul(10),
        coverage: fusion,
    },
];

fn main() -> ExitCode {
    let suite = Suite::default_suite();
    let threads = default_threads();
    let mut red = 0;
    for c in CRITERIA {
        let cases: Vec<Case> = suite.cases.iter().filter(|k| c.checks.contains(&k.name())).cloned().collect();
        let start = Instant::now();
        let reports = run_cases(&cases, threads);
        let elapsed = start.elapsed();
        let failed: Vec<&VerificationReport> = reports.iter().filter(|r| r.failed()).collect();
        let skipped = reports.iter().filter(|r| matches!(r.status, Status::Skipped(_))).count();
        let mut problems: Vec<String> = failed.iter().map(|r| r.to_string()).collect();
        if let Err(e) = (c.coverage)(&cases, &reports) {
            problems.push(format!("coverage: {e}"));
        }
        if elapsed > c.budget {
            problems.push(format!("took {elapsed:?}, budget {:?}", c.budget));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {}: {verdict} ({} reports, {} skipped, {:.2}s)",
            c.id,
            c.title,
            reports.len(),
            skipped,
            elapsed.as_secs_f64()
        );
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            red += 1;
        }
    }
    if red == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {red} criteria red");
        ExitCode::FAILURE
    }
}
