//! The worked examples, recomputed.

use serde::Serialize;

use crate::context::RingContext;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::ideal::IdealSet;
use crate::predicate::{check, replay_violation, CheckOptions, Method, Pair, Predicate, Violation};
use crate::ring::Ring;
use crate::subset::{SubsetKind, SubsetS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleOutcome {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

const S1: [usize; 4] = [1, 3, 9, 27];

fn product_subset(ring: &Ring, left: &[usize], right: &[usize], m: usize) -> Result<SubsetS> {
    let elems: Vec<usize> = left.iter().flat_map(|&a| right.iter().map(move |&b| a * m + b)).collect();
    SubsetS::from_elems(ring, &elems, SubsetKind::MulClosed)
}

fn left_factor_ideal(ring: &Ring, d: usize, m: usize) -> Result<IdealSet> {
    let members = ElemSet::from_elems(ring.size(), ring.elements().filter(|&x| (x / m) % d == 0));
    IdealSet::from_members(ring, members)
}

fn e1() -> Result<(bool, String)> {
    let r = Ring::zn(36)?;
    let ctx = RingContext::new(&r);
    let i = IdealSet::generate(&r, &[4]);
    let s = SubsetS::from_elems(&r, &S1, SubsetKind::MulClosed)?;
    let sj = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::default())?;
    let j = check(&ctx, Predicate::J, &i, None, CheckOptions::default())?;
    let cx = j.counterexample.first().map(|v| v.pair);
    let passed = sj.verdict && sj.witness_s == Some(3) && !j.verdict && cx == Some(Pair::Elements { a: 2, b: 2 });
    let cx = match cx {
        Some(Pair::Elements { a, b }) => format!("({a}, {b})"),
        _ => "none".into(),
    };
    let w = sj.witness_s.map_or("none".into(), |s| s.to_string());
    Ok((passed, format!("S-J witness {w}; J-ideal {} with counterexample {cx}", j.verdict)))
}

fn e2() -> Result<(bool, String)> {
    let z = Ring::zn(36)?;
    let r = Ring::product(&z, &z)?;
    let ctx = RingContext::new(&r);
    let i = left_factor_ideal(&r, 4, 36)?;
    let s = product_subset(&r, &S1, &S1, 36)?;
    let res = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::default())?;
    let x = 2 * 36 + 1;
    let mut replays = true;
    for t in s.iter() {
        let v = Violation {
            s: Some(t),
            pair: Pair::Elements { a: x, b: x },
        };
        replays &= replay_violation(&ctx, Predicate::SJ, &i, Some(&s), &v)?;
    }
    let passed = !res.verdict && res.counterexample.len() == s.len() && replays;
    Ok((passed, format!("S-J {}; ((2,1),(2,1)) defeats every s: {replays}", res.verdict)))
}

fn e3() -> Result<(bool, String)> {
    let (z36, z8) = (Ring::zn(36)?, Ring::zn(8)?);
    let r = Ring::product(&z36, &z8)?;
    let ctx = RingContext::new(&r);
    let i = left_factor_ideal(&r, 4, 8)?;
    let s = product_subset(&r, &S1, &[0, 2, 4], 8)?;
    let res = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::default())?;
    let w = res.witness_s.map_or("none".into(), |x| r.format_elem(x));
    Ok((res.verdict, format!("S-J {} with witness {w}", res.verdict)))
}

fn e4() -> Result<(bool, String)> {
    let base = Ring::zn(12)?;
    let r = Ring::matrix(2, &base)?;
    let ctx = RingContext::new(&r);
    let scalar = |c: usize| c * 12 * 12 * 12 + c;
    let p = IdealSet::generate(&r, &[4 * 12 * 12 * 12]);
    let s = SubsetS::from_elems(&r, &[scalar(1), scalar(3), scalar(9)], SubsetKind::MSystem)?;
    let j = check(&ctx, Predicate::J, &p, None, CheckOptions::default())?;
    let right = check(&ctx, Predicate::RightSJ, &p, Some(&s), CheckOptions::fixed(Method::Lattice))?;
    let two = scalar(2);
    let v = Violation {
        s: None,
        pair: Pair::Elements { a: two, b: two },
    };
    let replay = replay_violation(&ctx, Predicate::J, &p, None, &v)?;
    let passed = p.len() == 81
        && !j.verdict
        && right.verdict
        && right.witness_s == Some(scalar(3))
        && right.working_s == vec![scalar(3), scalar(9)]
        && replay;
    let working: Vec<String> = right.working_s.iter().map(|&x| r.format_elem(x)).collect();
    Ok((
        passed,
        format!(
            "J-ideal {}; right S-J {} with witnesses {}; (2I,2I) violates the J-ideal condition: {replay}",
            j.verdict,
            right.verdict,
            working.join(" ")
        ),
    ))
}

fn e5() -> Result<(bool, String)> {
    let z36 = Ring::zn(36)?;
    let c = RingContext::new(&z36);
    let a = c.jacobson()? == &IdealSet::generate(&z36, &[6]);

    let m = Ring::matrix(2, &Ring::zn(12)?)?;
    let cm = RingContext::new(&m);
    let b = cm.jacobson()? == &IdealSet::generate(&m, &[6 * 12 * 12 * 12]);

    let z8 = Ring::zn(8)?;
    let p = Ring::product(&z36, &z8)?;
    let cp = RingContext::new(&p);
    let expected = ElemSet::from_elems(p.size(), p.elements().filter(|&x| (x / 8) % 6 == 0 && (x % 8) % 2 == 0));
    let d = cp.jacobson()?.members() == &expected;
    Ok((a && b && d, format!("J(Z36) = ⟨6⟩: {a}; J(M_2(Z12)) = M_2(⟨6⟩): {b}; J(Z36 × Z8) = ⟨6⟩ × ⟨2⟩: {d}")))
}

/// Recomputes every worked example. Errors count as failures.
pub fn run_examples() -> Vec<ExampleOutcome> {
    type Case = (&'static str, &'static str, fn() -> Result<(bool, String)>);
    let cases: [Case; 5] = [
        ("E1", "⟨4⟩ in Z36 is S-J for S = {1,3,9,27} but not a J-ideal", e1),
        ("E2", "⟨4⟩ × Z36 is not (S×S)-J in Z36 × Z36", e2),
        ("E3", "⟨4⟩ × Z8 is (S×{0,2,4})-J in Z36 × Z8", e3),
        ("E4", "M_2(⟨4⟩) is right S-J in M_2(Z12) for S = {I,3I,9I}, but not a J-ideal", e4),
        ("E5", "Jacobson radicals of Z36, M_2(Z12) and Z36 × Z8", e5),
    ];
    cases
        .iter()
        .map(|&(id, description, run)| {
            let (passed, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
            ExampleOutcome {
                id: id.into(),
                description: description.into(),
                passed,
                detail,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_pass() {
        for e in run_examples() {
            assert!(e.passed, "{}: {}", e.id, e.detail);
        }
    }
}
