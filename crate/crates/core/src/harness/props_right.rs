//! Right S-𝒥-ideals in rings with identity, commutative or not.

use std::collections::BTreeSet;

use super::{violation, RingFacts, Tally};
use crate::context::{RingContext, RowKind};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::ideal::IdealSet;
use crate::predicate::{check, CheckOptions, Method, Predicate, RIGHT_ELEMENTWISE_LIMIT};
use crate::radical::jacobson_star_index;
use crate::ring::Hom;
use crate::subset::SubsetS;

/// Largest ring whose quotients are built for the transfer statements.
const QUOTIENT_LIMIT: usize = 256;

fn has_identity(f: &RingFacts) -> bool {
    f.ring().has_identity()
}

fn elem(f: &RingFacts, x: usize) -> String {
    f.ring().format_elem(x)
}

/// Lattice ideals (as an element-indexed mask) outside lattice ideal `c`.
fn outside(n: usize, c: &IdealSet) -> ElemSet {
    ElemSet::full(n).difference(c.members())
}

fn first_pair(rows: &[ElemSet], left: &ElemSet, right: &ElemSet) -> Option<(usize, usize)> {
    left.iter()
        .find_map(|a| rows[a].intersection(right).first().map(|b| (a, b)))
}

pub fn p23(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) || f.ring().size() > RIGHT_ELEMENTWISE_LIMIT {
        return Ok(());
    }
    let (r, ctx, l, j) = (f.ring(), f.ctx(), f.lattice(), f.jacobson());
    let principals: Vec<usize> = r
        .elements()
        .map(|x| ctx.principal(x))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    let mut divergent = 0usize;
    for (i, k) in f.instances() {
        let lat = f.check(Predicate::RightSJ, Some(Method::Lattice), i, k)?;
        let el = f.check(Predicate::RightSJ, Some(Method::Elementwise), i, k)?;
        for s in f.subsets()[k].iter() {
            let (cj, ci) = (ctx.colon_principal(j, s)?, ctx.colon_principal(i, s)?);
            let principal_ok = !principals.iter().any(|&x| {
                !l.le(x, cj) && principals.iter().any(|&y| !l.le(y, ci) && l.le(l.product(x, y), i))
            });
            let a = lat.working_s.contains(&s);
            let b = el.working_s.contains(&s);
            t.record(true, a == principal_ok && a == b, || {
                violation(
                    f,
                    Some(l.ideal(i)),
                    Some(&f.subsets()[k]),
                    format!("s = {}: ideal form {a}, principal form {principal_ok}, xRy form {b}", elem(f, s)),
                )
            });
        }
        let pp = check(ctx, Predicate::RightSJ, l.ideal(i), Some(&f.subsets()[k]), CheckOptions::per_pair())?;
        if pp.verdict != lat.verdict {
            divergent += 1;
        }
    }
    if divergent > 0 {
        t.notes.insert(format!(
            "{}: per-pair quantifier differs from fixed s on {divergent} instance(s)",
            f.label()
        ));
    }
    Ok(())
}

pub fn p24(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    for (i, k) in f.instances() {
        let sj = f.check(Predicate::SJ, None, i, k)?;
        let right = f.check(Predicate::RightSJ, Some(Method::Lattice), i, k)?;
        t.record(true, sj.working_s == right.working_s, || {
            violation(
                f,
                Some(f.ideal(i)),
                Some(&f.subsets()[k]),
                format!("S-J witnesses {:?}, right S-J witnesses {:?}", sj.working_s, right.working_s),
            )
        });
    }
    Ok(())
}

pub fn p25(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) {
        return Ok(());
    }
    let (l, j) = (f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let sp = f.check(Predicate::RightSPrime, None, i, k)?;
        let sj = f.check(Predicate::RightSJ, None, i, k)?;
        let holds = sp.working_s.iter().all(|s| sj.working_s.contains(s));
        t.record(sp.verdict && l.le(i, j), holds && sj.verdict, || {
            violation(f, Some(l.ideal(i)), Some(&f.subsets()[k]), "right S-prime inside J(R) but not right S-J".into())
        });
    }
    Ok(())
}

pub fn p26(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) {
        return Ok(());
    }
    let (ctx, l) = (f.ctx(), f.lattice());
    for (i, k) in f.instances() {
        let subset = &f.subsets()[k];
        let mut lhs = false;
        for s in subset.iter() {
            let c = ctx.colon_principal(i, s)?;
            if subset.meets(l.ideal(c)).is_none() && f.check(Predicate::RightSJ, None, c, k)?.verdict {
                lhs = true;
                break;
            }
        }
        let rhs = f.check(Predicate::RightSJ, None, i, k)?.verdict;
        t.record(true, lhs == rhs, || {
            violation(f, Some(l.ideal(i)), Some(subset), format!("some (P:⟨s⟩) right S-J: {lhs}; P right S-J: {rhs}"))
        });
    }
    Ok(())
}

pub fn p27(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) {
        return Ok(());
    }
    let ctx = f.ctx();
    for (i, k) in f.instances() {
        let mut colon_j = None;
        for s in f.subsets()[k].iter() {
            if f.is_j_ideal(ctx.colon_principal(i, s)?)? {
                colon_j = Some(s);
                break;
            }
        }
        let holds = f.check(Predicate::RightSJ, None, i, k)?.verdict;
        t.record(colon_j.is_some(), holds, || {
            let s = colon_j.unwrap_or_default();
            violation(f, Some(f.ideal(i)), Some(&f.subsets()[k]), format!("(P:⟨{}⟩) is a J-ideal but P is not right S-J", elem(f, s)))
        });
    }
    Ok(())
}

pub fn p28(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    let center = ctx.center();
    for (i, k) in f.instances() {
        let subset = &f.subsets()[k];
        if !subset.members().is_subset(center) || !f.check(Predicate::RightSJ, None, i, k)?.verdict {
            continue;
        }
        for s in subset.iter() {
            let cj = ctx.colon_principal(j, s)?;
            let hypothesis = subset.meets(l.ideal(cj)).is_none() && f.is_j_ideal(cj)?;
            if !hypothesis {
                t.record(false, true, || unreachable!());
                continue;
            }
            let holds = f.is_j_ideal(ctx.colon_principal(i, s)?)?;
            t.record(true, holds, || {
                violation(f, Some(l.ideal(i)), Some(subset), format!("(P:⟨{}⟩) is not a J-ideal", elem(f, s)))
            });
        }
    }
    Ok(())
}

/// Both transfer statements along canonical surjections `R → R/K`.
fn right_transfer(f: &RingFacts, t: &mut Tally, forward: bool) -> Result<()> {
    let r = f.ring();
    if !has_identity(f) || r.size() > QUOTIENT_LIMIT {
        return Ok(());
    }
    let (l, j) = (f.lattice(), f.jacobson());
    for kk in (0..l.len()).filter(|&k| l.is_proper(k) && k != l.zero_index()) {
        let kernel = l.ideal(kk);
        let (target, hom): (_, Hom) = Hom::canonical_surjection(kernel)?;
        let tctx = RingContext::new(&target);
        for (k, subset) in f.subsets().iter().enumerate() {
            if subset.meets(kernel).is_some() {
                continue;
            }
            let image_s = SubsetS::image(&hom, subset)?;
            for p in (0..l.len()).filter(|&p| l.le(kk, p) && l.is_proper(p)) {
                let ideal = l.ideal(p);
                if subset.meets(ideal).is_some() {
                    continue;
                }
                let here = f.check(Predicate::RightSJ, None, p, k)?.verdict;
                let image = IdealSet::from_members(&target, hom.image(ideal.members()))?;
                let there = check(&tctx, Predicate::RightSJ, &image, Some(&image_s), CheckOptions::default())?.verdict;
                let (hypothesis, holds) = if forward {
                    (here, there)
                } else {
                    (there && l.le(kk, j), here)
                };
                t.record(hypothesis, holds, || {
                    violation(f, Some(ideal), Some(subset), format!("kernel {:?}: right S-J {here}, image right S-J {there}", kernel.to_vec()))
                });
            }
        }
    }
    Ok(())
}

pub fn p29(f: &RingFacts, t: &mut Tally) -> Result<()> {
    right_transfer(f, t, true)
}

pub fn p30(f: &RingFacts, t: &mut Tally) -> Result<()> {
    right_transfer(f, t, false)
}

pub fn p31(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) || f.ring().size() > RIGHT_ELEMENTWISE_LIMIT {
        return Ok(());
    }
    let (n, ctx, l, j) = (f.ring().size(), f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let res = f.check(Predicate::RightSJ, None, i, k)?;
        let rows = ctx.rows(RowKind::Sandwich, i)?;
        let star = jacobson_star_index(l, i)?;
        for s in f.subsets()[k].iter() {
            if ctx.colon_principal(j, s)? != j {
                t.record(false, true, || unreachable!());
                continue;
            }
            let left = outside(n, l.ideal(ctx.colon_principal(star, s)?));
            let right = outside(n, l.ideal(ctx.colon_principal(i, s)?));
            let rhs = l.le(i, j) && first_pair(&rows, &left, &right).is_none();
            let lhs = res.working_s.contains(&s);
            t.record(true, lhs == rhs, || {
                violation(
                    f,
                    Some(l.ideal(i)),
                    Some(&f.subsets()[k]),
                    format!("s = {}: witness {lhs}, J*(P) criterion {rhs}", elem(f, s)),
                )
            });
        }
    }
    Ok(())
}

pub fn p32(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let res = f.check(Predicate::RightSJ, None, i, k)?;
        let mut bad = None;
        for &s in &res.working_s {
            if !l.le(i, ctx.colon_principal(j, s)?) {
                bad = Some(s);
                break;
            }
        }
        t.record(res.verdict, bad.is_none(), || {
            violation(f, Some(l.ideal(i)), Some(&f.subsets()[k]), format!("P ⊄ (J(R):⟨{}⟩)", elem(f, bad.unwrap_or_default())))
        });
        if i == j {
            let sp = f.check(Predicate::RightSPrime, None, i, k)?;
            t.record(true, sp.working_s == res.working_s, || {
                violation(
                    f,
                    Some(l.ideal(i)),
                    Some(&f.subsets()[k]),
                    format!("right S-prime witnesses {:?}, right S-J witnesses {:?}", sp.working_s, res.working_s),
                )
            });
        }
    }
    Ok(())
}

pub fn p33(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !has_identity(f) || !f.is_local() {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let mut colon_j = false;
        for s in f.subsets()[k].iter() {
            if f.is_j_ideal(ctx.colon_principal(j, s)?)? {
                colon_j = true;
                break;
            }
        }
        let sj = f.check(Predicate::RightSJ, None, i, k)?.verdict;
        t.record(colon_j && sj, l.is_superfluous(i), || {
            violation(f, Some(l.ideal(i)), Some(&f.subsets()[k]), "right S-J-ideal is not superfluous".into())
        });
    }
    Ok(())
}
