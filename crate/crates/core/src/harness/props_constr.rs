//! Homomorphisms, quotients and ring constructions.

use super::corpus::{corpus_subsets, DEFAULT_SEED};
use super::{violation, RingFacts, Tally};
use crate::context::RingContext;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::ideal::IdealSet;
use crate::predicate::{check, CheckOptions, Predicate};
use crate::ring::{Construction, Hom, Ring};
use crate::subset::{SubsetKind, SubsetS};

/// Largest ring whose quotients are all built.
const QUOTIENT_LIMIT: usize = 40;
/// Subsets per factor ring.
const FACTOR_SUBSETS: usize = 8;

fn s_j(ctx: &RingContext, ideal: &IdealSet, subset: &SubsetS) -> Result<bool> {
    Ok(check(ctx, Predicate::SJ, ideal, Some(subset), CheckOptions::default())?.verdict)
}

/// `{1}` plus singleton-generated subsets of a factor ring.
fn factor_subsets(ring: &Ring, keep_zero: bool) -> Vec<SubsetS> {
    let named: Vec<SubsetS> = ring
        .one()
        .and_then(|o| SubsetS::from_elems(ring, &[o], SubsetKind::MulClosed).ok())
        .into_iter()
        .collect();
    corpus_subsets(ring, &named, FACTOR_SUBSETS, DEFAULT_SEED, keep_zero)
}

fn describe(ring: &Ring, set: &ElemSet) -> String {
    let items: Vec<String> = set.iter().map(|x| ring.format_elem(x)).collect();
    format!("{{{}}}", items.join(","))
}

/// Which parts of the transfer statements to run.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Transfer {
    Epimorphism,
    Quotient,
}

fn transfer(f: &RingFacts, t: &mut Tally, kind: Transfer) -> Result<()> {
    let r = f.ring();
    if !f.commutative_with_identity() || r.size() > QUOTIENT_LIMIT {
        return Ok(());
    }
    let (l, j) = (f.lattice(), f.jacobson());
    for kk in (0..l.len()).filter(|&k| l.is_proper(k) && k != l.zero_index()) {
        let kernel = l.ideal(kk);
        let hom = match (kind, r.construction()) {
            (Transfer::Epimorphism, Construction::Zn(_)) => {
                let m = kernel.members().iter().filter(|&x| x > 0).min().expect("nonzero kernel");
                Hom::zn_reduction_between(r, &Ring::zn(m)?)?
            }
            _ => Hom::canonical_surjection(kernel)?.1,
        };
        let target = hom.target().clone();
        let tctx = RingContext::new(&target);
        let k_in_j = l.le(kk, j);
        let k_is_j = f.is_j_ideal(kk)?;
        for subset in f.subsets() {
            if subset.meets(kernel).is_some() {
                continue;
            }
            let image_s = SubsetS::image(&hom, subset)?;
            for p in (0..l.len()).filter(|&p| l.le(kk, p) && l.is_proper(p)) {
                let ideal = l.ideal(p);
                if subset.meets(ideal).is_some() {
                    continue;
                }
                let image = IdealSet::from_members(&target, hom.image(ideal.members()))?;
                let here = s_j(f.ctx(), ideal, subset)?;
                let there = s_j(&tctx, &image, &image_s)?;
                let detail = || {
                    violation(
                        f,
                        Some(ideal),
                        Some(subset),
                        format!("kernel {}: S-J {here}, image S-J {there}", describe(r, kernel.members())),
                    )
                };
                t.record(here, there, detail);
                match kind {
                    Transfer::Epimorphism => t.record(there && k_in_j, here, detail),
                    Transfer::Quotient => {
                        t.record(there && k_in_j, here, detail);
                        t.record(there && k_is_j, here, detail);
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn p14(f: &RingFacts, t: &mut Tally) -> Result<()> {
    transfer(f, t, Transfer::Epimorphism)
}

pub fn p15(f: &RingFacts, t: &mut Tally) -> Result<()> {
    transfer(f, t, Transfer::Quotient)
}

pub fn p17(f: &RingFacts, t: &mut Tally) -> Result<()> {
    let r = f.ring();
    let Construction::Product(r1, r2) = r.construction() else {
        return Ok(());
    };
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (c1, c2) = (RingContext::new(r1), RingContext::new(r2));
    let (l1, l2) = (c1.lattice()?, c2.lattice()?);
    let (j1, j2) = (c1.jacobson()?.clone(), c2.jacobson()?.clone());
    let (subs1, subs2) = (factor_subsets(r1, true), factor_subsets(r2, true));
    let m = r2.size();
    for s1 in &subs1 {
        for s2 in &subs2 {
            let s = SubsetS::product(r, s1, s2)?;
            for i1 in (0..l1.len()).filter(|&i| l1.is_proper(i)) {
                let ideal1 = l1.ideal(i1);
                if s1.meets(ideal1).is_some() {
                    continue;
                }
                let members = ElemSet::from_elems(r.size(), ideal1.members().iter().flat_map(|a| (0..m).map(move |b| a * m + b)));
                let big = IdealSet::from_members(r, members)?;
                let lhs = s_j(f.ctx(), &big, &s)?;
                let rhs = s_j(&c1, ideal1, s1)? && s2.meets(&j2).is_some();
                t.record(true, lhs == rhs, || {
                    violation(f, Some(&big), Some(&s), format!("product S-J {lhs}, factor criterion {rhs}"))
                });
            }
            for i2 in (0..l2.len()).filter(|&i| l2.is_proper(i)) {
                let ideal2 = l2.ideal(i2);
                if s2.meets(ideal2).is_some() {
                    continue;
                }
                let members = ElemSet::from_elems(r.size(), r1.elements().flat_map(|a| ideal2.members().iter().map(move |b| a * m + b)));
                let big = IdealSet::from_members(r, members)?;
                let lhs = s_j(f.ctx(), &big, &s)?;
                let rhs = s_j(&c2, ideal2, s2)? && s1.meets(&j1).is_some();
                t.record(true, lhs == rhs, || {
                    violation(f, Some(&big), Some(&s), format!("product S-J {lhs}, factor criterion {rhs}"))
                });
            }
        }
    }
    Ok(())
}

pub fn p18(f: &RingFacts, t: &mut Tally) -> Result<()> {
    let r = f.ring();
    let Construction::TruncatedPoly { base, degree } = r.construction() else {
        return Ok(());
    };
    if !matches!(base.construction(), Construction::Zn(2 | 3 | 4 | 5 | 7 | 8)) {
        return Ok(());
    }
    let bctx = RingContext::new(base);
    let bl = bctx.lattice()?;
    let j_is_j = {
        let jb = bctx.jacobson()?;
        jb.is_proper() && check(&bctx, Predicate::J, jb, None, CheckOptions::default())?.verdict
    };
    let n = base.size();
    let constant = |c: usize| c * n.pow(*degree as u32 - 1);
    for s in factor_subsets(base, false) {
        let lifted: Vec<usize> = s.iter().map(constant).collect();
        let big_s = SubsetS::from_elems(r, &lifted, s.kind())?;
        for i in (0..bl.len()).filter(|&i| bl.is_proper(i)) {
            let ideal = bl.ideal(i);
            if s.meets(ideal).is_some() {
                continue;
            }
            let members = ElemSet::from_elems(
                r.size(),
                r.elements().filter(|&x| {
                    let mut v = x;
                    (0..*degree).all(|_| {
                        let d = v % n;
                        v /= n;
                        ideal.contains(d)
                    })
                }),
            );
            let big = IdealSet::from_members(r, members)?;
            let lhs = s_j(&bctx, ideal, &s)?;
            let rhs = s_j(f.ctx(), &big, &big_s)?;
            t.record(j_is_j, lhs == rhs, || {
                violation(f, Some(&big), Some(&big_s), format!("base S-J {lhs}, extension S-J {rhs}"))
            });
        }
    }
    Ok(())
}

/// Ideals `I ⊞ N` of an idealization, over base ideals `I` and submodules
/// `N ⊇ IM`.
fn idealization_instances(
    f: &RingFacts,
    t: &mut Tally,
    all_submodules: bool,
) -> Result<()> {
    let r = f.ring();
    let Construction::Idealization { base, module } = r.construction() else {
        return Ok(());
    };
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let bctx = RingContext::new(base);
    let bl = bctx.lattice()?;
    let m = module.size();
    let submodules = if all_submodules {
        module.submodules()
    } else {
        vec![(0..m).collect()]
    };
    let mut converse_failures = 0usize;
    for s in factor_subsets(base, false) {
        let big_s = SubsetS::idealization(r, &s)?;
        for i in (0..bl.len()).filter(|&i| bl.is_proper(i)) {
            let ideal = bl.ideal(i);
            if s.meets(ideal).is_some() {
                continue;
            }
            let base_sj = s_j(&bctx, ideal, &s)?;
            for sub in &submodules {
                let inside = |x: usize| sub.binary_search(&x).is_ok();
                if !ideal.members().iter().all(|a| (0..m).all(|x| inside(module.act(a, x)))) {
                    continue;
                }
                let members = ElemSet::from_elems(r.size(), ideal.members().iter().flat_map(|a| sub.iter().map(move |&x| a * m + x)));
                let big = IdealSet::from_members(r, members)?;
                let big_sj = s_j(f.ctx(), &big, &big_s)?;
                if all_submodules {
                    if base_sj && !big_sj {
                        converse_failures += 1;
                    }
                    t.record(big_sj, base_sj, || {
                        violation(f, Some(&big), Some(&big_s), "I ⊞ N is S-J but I is not".into())
                    });
                } else {
                    t.record(true, big_sj == base_sj, || {
                        violation(f, Some(&big), Some(&big_s), format!("base S-J {base_sj}, I ⊞ M S-J {big_sj}"))
                    });
                }
            }
        }
    }
    if converse_failures > 0 {
        t.notes.insert(format!(
            "converse fails on {}: {converse_failures} instance(s) with I S-J and I ⊞ N not",
            f.label()
        ));
    }
    Ok(())
}

pub fn p20(f: &RingFacts, t: &mut Tally) -> Result<()> {
    idealization_instances(f, t, false)
}

pub fn p21(f: &RingFacts, t: &mut Tally) -> Result<()> {
    idealization_instances(f, t, true)
}

pub fn p22(f: &RingFacts, t: &mut Tally) -> Result<()> {
    let r = f.ring();
    let Construction::Amalgamation { base, ideal, .. } = r.construction() else {
        return Ok(());
    };
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let bctx = RingContext::new(base);
    let bl = bctx.lattice()?;
    let jn = ideal.len();
    for s in factor_subsets(base, false) {
        let big_s = SubsetS::amalgamation(r, &s)?;
        for i in (0..bl.len()).filter(|&i| bl.is_proper(i)) {
            let base_ideal = bl.ideal(i);
            if s.meets(base_ideal).is_some() {
                continue;
            }
            let members = ElemSet::from_elems(r.size(), base_ideal.members().iter().flat_map(|a| (0..jn).map(move |p| a * jn + p)));
            let big = IdealSet::from_members(r, members)?;
            let lhs = s_j(&bctx, base_ideal, &s)?;
            let rhs = s_j(f.ctx(), &big, &big_s)?;
            t.record(true, lhs == rhs, || {
                violation(f, Some(&big), Some(&big_s), format!("base S-J {lhs}, amalgamated S-J {rhs}"))
            });
        }
    }
    Ok(())
}
