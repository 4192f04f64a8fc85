//! Acceptance criteria 1–9. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ringlab_core::elemset::ElemSet;
use ringlab_core::harness::{build_corpus, corpus_exprs, verify, CorpusConfig, Status};
use ringlab_core::predicate::{
    check, replay_violation, replay_witness, CheckOptions, Method, Pair, Predicate, Violation,
};
use ringlab_core::radical::{jacobson_crosscheck, RadicalMethod};
use ringlab_core::subset::{SubsetKind, SubsetS};
use ringlab_core::{IdealSet, Result, Ring, RingContext};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
    let start = Instant::now();
    let mut o = f()?;
    let took = start.elapsed();
    if took > limit {
        o.passed = false;
    }
    o.detail = format!("{} [{:.2?} of {:?}]", o.detail, took, limit);
    Ok(o)
}

const S1: [usize; 4] = [1, 3, 9, 27];

fn criterion_1() -> Result<Outcome> {
    timed(Duration::from_secs(1), || {
        let r = Ring::zn(36)?;
        let ctx = RingContext::new(&r);
        let i = IdealSet::generate(&r, &[4]);
        let s = SubsetS::from_elems(&r, &S1, SubsetKind::MulClosed)?;
        let j = check(&ctx, Predicate::J, &i, None, CheckOptions::default())?;
        let sj = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::default())?;
        let cx = j.counterexample.first().map(|v| v.pair);
        let replay = replay_witness(&ctx, Predicate::SJ, &i, Some(3), Method::Elementwise)?;
        let passed = !j.verdict
            && cx == Some(Pair::Elements { a: 2, b: 2 })
            && sj.verdict
            && sj.witness_s == Some(3)
            && replay;
        outcome(
            passed,
            format!("J-ideal {} with {cx:?}; S-J {} witness {:?}, s = 3 replays: {replay}", j.verdict, sj.verdict, sj.witness_s),
        )
    })
}

fn criterion_2() -> Result<Outcome> {
    timed(Duration::from_secs(30), || {
        let z36 = Ring::zn(36)?;
        let j36: Vec<usize> = RingContext::new(&z36).jacobson()?.members().to_vec();
        let a = j36 == vec![0, 6, 12, 18, 24, 30];

        let p = Ring::product(&z36, &Ring::zn(8)?)?;
        let expected = ElemSet::from_elems(p.size(), p.elements().filter(|&x| (x / 8) % 6 == 0 && x % 2 == 0));
        let b = RingContext::new(&p).jacobson()?.members() == &expected;

        let base = Ring::zn(12)?;
        let m = Ring::matrix(2, &base)?;
        let mut digits = [0usize; 4];
        let expected = ElemSet::from_elems(
            m.size(),
            m.elements().filter(|&x| {
                let mut v = x;
                for d in digits.iter_mut().rev() {
                    *d = v % 12;
                    v /= 12;
                }
                digits.iter().all(|d| d % 6 == 0)
            }),
        );
        let c = RingContext::new(&m).jacobson()?.members() == &expected;
        outcome(a && b && c, format!("Z36 {a}, Z36 x Z8 {b}, M_2(Z12) {c}"))
    })
}

fn criterion_3() -> Result<Outcome> {
    timed(Duration::from_secs(60), || {
        let m = Ring::matrix(2, &Ring::zn(12)?)?;
        let ctx = RingContext::new(&m);
        let scalar = |c: usize| c * 12 * 12 * 12 + c;
        let s = SubsetS::from_elems(&m, &[scalar(1), scalar(3), scalar(9)], SubsetKind::MSystem)?;
        let p = IdealSet::generate(&m, &[4 * 12 * 12 * 12]);
        let j = check(&ctx, Predicate::J, &p, None, CheckOptions::default())?;
        let right = check(&ctx, Predicate::RightSJ, &p, Some(&s), CheckOptions::fixed(Method::Lattice))?;
        let witness_ok = right.witness_s.is_some_and(|w| w == scalar(3) || w == scalar(9));
        let replay = replay_witness(&ctx, Predicate::RightSJ, &p, Some(scalar(3)), Method::Lattice)?;
        let passed = p.len() == 81 && !j.verdict && right.verdict && witness_ok && replay;
        outcome(
            passed,
            format!(
                "J-ideal {}; right S-J {} with witness {:?}; 3I replays: {replay}",
                j.verdict,
                right.verdict,
                right.witness_s.map(|w| m.format_elem(w))
            ),
        )
    })
}

fn criterion_4() -> Result<Outcome> {
    let z36 = Ring::zn(36)?;
    let r = Ring::product(&z36, &z36)?;
    let ctx = RingContext::new(&r);
    let i = IdealSet::from_members(&r, ElemSet::from_elems(r.size(), r.elements().filter(|&x| (x / 36) % 4 == 0)))?;
    let elems: Vec<usize> = S1.iter().flat_map(|&a| S1.iter().map(move |&b| a * 36 + b)).collect();
    let s = SubsetS::from_elems(&r, &elems, SubsetKind::MulClosed)?;
    let res = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::default())?;
    let every_s_defeated = s.iter().all(|t| res.violation_for(Some(t)).is_some());
    let x = 2 * 36 + 1;
    let mut among = true;
    for t in s.iter() {
        let v = Violation {
            s: Some(t),
            pair: Pair::Elements { a: x, b: x },
        };
        among &= replay_violation(&ctx, Predicate::SJ, &i, Some(&s), &v)?;
    }

    let z8 = Ring::zn(8)?;
    let q = Ring::product(&z36, &z8)?;
    let qctx = RingContext::new(&q);
    let qi = IdealSet::from_members(&q, ElemSet::from_elems(q.size(), q.elements().filter(|&x| (x / 8) % 4 == 0)))?;
    let qe: Vec<usize> = S1.iter().flat_map(|&a| [0usize, 2, 4].into_iter().map(move |b| a * 8 + b)).collect();
    let qs = SubsetS::from_elems(&q, &qe, SubsetKind::MulClosed)?;
    let qres = check(&qctx, Predicate::SJ, &qi, Some(&qs), CheckOptions::default())?;
    outcome(
        !res.verdict && every_s_defeated && among && qres.verdict,
        format!(
            "Z36 x Z36: S-J {}, every s defeated {every_s_defeated}, ((2,1),(2,1)) defeats each s {among}; Z36 x Z8: S-J {}",
            res.verdict, qres.verdict
        ),
    )
}

fn criterion_5_and_9() -> Result<(Outcome, Outcome)> {
    let config = CorpusConfig::default();
    let start = Instant::now();
    let first = verify(&[], &config)?;
    let took = start.elapsed();
    let gating: Vec<_> = first.properties.iter().filter(|p| p.status == Status::Gating).collect();
    let thin: Vec<&str> = gating.iter().filter(|p| p.tested < 5).map(|p| p.property_id.as_str()).collect();
    let tested: usize = gating.iter().map(|p| p.tested).sum();
    let ids: Vec<&str> = gating.iter().map(|p| p.property_id.as_str()).collect();
    let expected: Vec<String> = (1..=33).filter(|i| ![18, 19].contains(i)).map(|i| format!("P{i}")).collect();
    let p18 = first.property("P18").is_some_and(|p| p.status == Status::Exploratory);
    let p19 = first.property("P19").is_some_and(|p| p.status == Status::OutOfScope);
    let passed = first.corpus.rings >= 60
        && first.corpus.instances >= 500
        && tested >= 500
        && thin.is_empty()
        && ids == expected
        && first.gating_violations() == 0
        && p18
        && p19
        && took < Duration::from_secs(600);
    let five = Outcome {
        passed,
        detail: format!(
            "{} rings, {} instances, {tested} non-vacuous checks, {} violations, under-tested {thin:?}, P18 {}, [{took:.1?} of 600s]",
            first.corpus.rings,
            first.corpus.instances,
            first.gating_violations(),
            first.property("P18").map_or("missing".to_string(), |p| format!("{} tested, {} violated", p.tested, p.violated)),
        ),
    };
    let second = verify(&[], &config)?;
    let (a, b) = (first.to_json(), second.to_json());
    let nine = Outcome {
        passed: a == b,
        detail: format!("two reports of {} bytes, identical: {}", a.len(), a == b),
    };
    Ok((five, nine))
}

fn criterion_6() -> Result<Outcome> {
    let exprs = corpus_exprs(&CorpusConfig::default());
    let out = common::sweep(&exprs, 200);
    outcome(
        out.disagreements.is_empty() && out.rings > 0,
        format!(
            "{} rings, {} comparisons, {} disagreements {:?}",
            out.rings,
            out.comparisons,
            out.disagreements.len(),
            out.disagreements.first()
        ),
    )
}

fn criterion_7() -> Result<Outcome> {
    let config = CorpusConfig::default();
    let mut rings = 0;
    let mut bad = Vec::new();
    for expr in corpus_exprs(&config) {
        let r = expr.elaborate()?;
        if r.size() > 4096 {
            continue;
        }
        let ctx = RingContext::new(&r);
        let report = jacobson_crosscheck(ctx.lattice()?)?;
        let methods_ok = report.methods_used.contains(&RadicalMethod::QuasiRegular)
            && (!r.has_identity() || report.methods_used.contains(&RadicalMethod::Units));
        rings += 1;
        if !report.agreement || !methods_ok {
            bad.push(expr.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{rings} rings, disagreements on {bad:?}"))
}

fn criterion_8() -> Result<Outcome> {
    let (rings, _) = build_corpus(&CorpusConfig::default());
    let mut instances = 0;
    let mut bad = Vec::new();
    for f in rings.iter().filter(|f| f.commutative_with_identity()) {
        for (i, k) in f.instances() {
            let sj = f.check(Predicate::SJ, None, i, k)?;
            let right = f.check(Predicate::RightSJ, None, i, k)?;
            instances += 1;
            if sj.verdict != right.verdict && bad.len() < 5 {
                bad.push(format!("{} ideal #{i} subset #{k}", f.label()));
            }
        }
    }
    outcome(bad.is_empty(), format!("{instances} instances, disagreements {bad:?}"))
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |n: &str, o: Result<Outcome>| {
        let o = o.unwrap_or_else(|e| Outcome {
            passed: false,
            detail: format!("error: {e}"),
        });
        all &= o.passed;
        println!("criterion {n}: {} - {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    };
    report("1", criterion_1());
    report("2", criterion_2());
    report("3", criterion_3());
    report("4", criterion_4());
    match criterion_5_and_9() {
        Ok((five, nine)) => {
            report("5", Ok(five));
            report("6", criterion_6());
            report("7", criterion_7());
            report("8", criterion_8());
            report("9", Ok(nine));
        }
        Err(e) => {
            report("5", Err(e.clone()));
            report("6", criterion_6());
            report("7", criterion_7());
            report("8", criterion_8());
            report("9", Err(e));
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
