//! Properties of S-𝒥-ideals in commutative rings with identity.

use std::collections::{BTreeSet, HashMap};

use super::{violation, RingFacts, Tally};
use crate::context::{RingContext, RowKind};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::ideal::{is_s_finite, IdealSet};
use crate::predicate::{Method, Predicate};
use crate::radical::jacobson_star_index;
use crate::ring::Ring;

/// Largest ring for properties that quantify over pairs of ideals.
const PAIR_LIMIT: usize = 144;
/// Largest ring whose ideals are rebuilt as rings.
const IDEAL_RING_LIMIT: usize = 64;

fn elem(f: &RingFacts, x: usize) -> String {
    f.ring().format_elem(x)
}

/// Lexicographically first `(a, b)` with `b ∈ rows[a]`, `a ∈ left`, `b ∈ right`.
fn pair_in(rows: &[ElemSet], left: &ElemSet, right: &ElemSet) -> Option<(usize, usize)> {
    left.iter()
        .find_map(|a| rows[a].intersection(right).first().map(|b| (a, b)))
}

/// `{x : xs ∉ target}`.
fn escapes_fail(r: &Ring, target: &IdealSet, s: usize) -> ElemSet {
    ElemSet::from_elems(r.size(), r.elements().filter(|&x| !target.contains(r.mul(x, s))))
}

fn s_j_ideals(f: &RingFacts, k: usize) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, kk) in f.instances() {
        if kk == k {
            let r = f.check(Predicate::SJ, None, i, k)?;
            if let Some(w) = r.witness_s {
                out.push((i, w));
            }
        }
    }
    Ok(out)
}

pub fn p1(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let r = f.check(Predicate::SJ, None, i, k)?;
        let mut bad = None;
        for &s in &r.working_s {
            if !l.le(i, ctx.colon_elem(j, s)?) {
                bad = Some(s);
                break;
            }
        }
        t.record(r.verdict, bad.is_none(), || {
            let s = bad.unwrap_or_default();
            violation(f, Some(l.ideal(i)), Some(&f.subsets()[k]), format!("I ⊄ (J(R):{})", elem(f, s)))
        });
    }
    Ok(())
}

pub fn p2(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (l, j) = (f.lattice(), f.jacobson());
    let one = 0;
    debug_assert_eq!(f.subsets()[one].len(), 1);
    for i in (0..l.len()).filter(|&i| l.is_proper(i)) {
        let jv = f.is_j_ideal(i)?;
        let sj = f.check(Predicate::SJ, None, i, one)?;
        let holds = (!jv || l.le(i, j)) && sj.verdict == jv;
        t.record(true, holds, || {
            violation(
                f,
                Some(l.ideal(i)),
                Some(&f.subsets()[one]),
                format!("J-ideal: {jv}, inside J(R): {}, S-J with S={{1}}: {}", l.le(i, j), sj.verdict),
            )
        });
    }
    Ok(())
}

pub fn p3(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (l, j) = (f.lattice(), f.jacobson());
    for i in (0..l.len()).filter(|&i| l.is_proper(i)) {
        let n = crate::predicate::check(f.ctx(), Predicate::N, l.ideal(i), None, Default::default())?;
        let jv = f.is_j_ideal(i)?;
        t.record(n.verdict, jv, || violation(f, Some(l.ideal(i)), None, "n-ideal that is not a J-ideal".into()));
    }
    for (i, k) in f.instances() {
        let sn = f.check(Predicate::SN, None, i, k)?;
        let sj = f.check(Predicate::SJ, None, i, k)?;
        let mut holds = sn.working_s.iter().all(|s| sj.working_s.contains(s));
        if i == j {
            let sp = f.check(Predicate::SPrime, None, i, k)?;
            holds &= sp.working_s == sj.working_s;
        }
        t.record(sn.verdict || i == j, holds, || {
            violation(
                f,
                Some(l.ideal(i)),
                Some(&f.subsets()[k]),
                format!("S-n witnesses {:?}, S-J witnesses {:?}", sn.working_s, sj.working_s),
            )
        });
    }
    Ok(())
}

pub fn p4(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    for (i, k) in f.instances() {
        let e = f.check(Predicate::SJ, Some(Method::Elementwise), i, k)?;
        let p = f.check(Predicate::SJ, Some(Method::Lattice), i, k)?;
        t.record(true, e.working_s == p.working_s, || {
            violation(
                f,
                Some(f.ideal(i)),
                Some(&f.subsets()[k]),
                format!("elementwise witnesses {:?}, ideal-pair witnesses {:?}", e.working_s, p.working_s),
            )
        });
    }
    Ok(())
}

pub fn p5(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (ctx, j) = (f.ctx(), f.jacobson());
    let j_is_j = f.is_j_ideal(j)?;
    for (i, k) in f.instances() {
        let subset = &f.subsets()[k];
        let sj = f.check(Predicate::SJ, None, i, k)?;
        let mut colon_j = None;
        for s in subset.iter() {
            if f.is_j_ideal(ctx.colon_elem(i, s)?)? {
                colon_j = Some(s);
                break;
            }
        }
        let forward = colon_j.is_some();
        let converse = j_is_j && subset.meets(f.ideal(j)).is_none() && sj.verdict;
        let holds = (!forward || sj.verdict) && (!converse || forward);
        t.record(forward || converse, holds, || {
            violation(
                f,
                Some(f.ideal(i)),
                Some(subset),
                format!("(I:s) J-ideal for s = {colon_j:?}; S-J: {}", sj.verdict),
            )
        });
    }
    Ok(())
}

/// Shared body of the two colon characterizations. With `by_a`, checks
/// `(I:a) ⊆ (J:s)` for `a ∉ (I:s)`; otherwise `(I:b) ⊆ (I:s)` for
/// `b ∉ (J:s)`.
fn colon_characterization(f: &RingFacts, t: &mut Tally, by_a: bool) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (r, l, j) = (f.ring(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let res = f.check(Predicate::SJ, None, i, k)?;
        let rows = f.ctx().rows(RowKind::Product, i)?;
        for s in f.subsets()[k].iter() {
            let is_ = ElemSet::full(r.size()).difference(&escapes_fail(r, l.ideal(i), s));
            let js = ElemSet::full(r.size()).difference(&escapes_fail(r, l.ideal(j), s));
            let (outside, target) = if by_a { (&is_, &js) } else { (&js, &is_) };
            let rhs = r
                .elements()
                .filter(|&x| !outside.contains(x))
                .all(|x| rows[x].is_subset(target));
            let lhs = res.working_s.contains(&s);
            t.record(true, lhs == rhs, || {
                violation(
                    f,
                    Some(l.ideal(i)),
                    Some(&f.subsets()[k]),
                    format!("s = {}: witness {lhs}, colon condition {rhs}", elem(f, s)),
                )
            });
        }
    }
    Ok(())
}

pub fn p6(f: &RingFacts, t: &mut Tally) -> Result<()> {
    colon_characterization(f, t, true)
}

pub fn p7(f: &RingFacts, t: &mut Tally) -> Result<()> {
    colon_characterization(f, t, false)
}

/// The ideal `I` as a ring, with maps between its indices and `R`'s.
struct IdealRing {
    ctx: RingContext,
    members: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl IdealRing {
    fn new(ideal: &IdealSet) -> Result<IdealRing> {
        let ring = Ring::ideal_as_ring(ideal)?;
        let members: Vec<usize> = ideal.members().iter().collect();
        let pos = members.iter().enumerate().map(|(p, &m)| (m, p)).collect();
        Ok(IdealRing {
            ctx: RingContext::new(&ring),
            members,
            pos,
        })
    }
}

pub fn p8(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() || f.ring().size() > IDEAL_RING_LIMIT {
        return Ok(());
    }
    let r = f.ring();
    let mut rings: HashMap<usize, IdealRing> = HashMap::new();
    for (i, k) in f.instances() {
        let sj = f.check(Predicate::SJ, None, i, k)?;
        if !sj.verdict || f.ideal(i).is_zero() {
            continue;
        }
        if !rings.contains_key(&i) {
            rings.insert(i, IdealRing::new(f.ideal(i))?);
        }
        let ir = &rings[&i];
        let (l2, r2) = (ir.ctx.lattice()?, ir.ctx.ring());
        let j2 = l2.ideal(ir.ctx.jacobson_index()?);
        let subset = &f.subsets()[k];
        for p in (0..l2.len()).filter(|&p| l2.is_proper(p)) {
            let pp = l2.ideal(p);
            let hypothesis = r2.elements().filter(|&x| !pp.contains(x)).all(|x| {
                r2.elements()
                    .all(|y| pp.contains(r2.mul(y, x)) == pp.contains(y))
            });
            let holds = subset.iter().any(|s| {
                let times = |a: usize| ir.pos[&r.mul(s, ir.members[a])];
                r2.elements().all(|a1| {
                    r2.elements().all(|a2| {
                        !pp.contains(r2.mul(a1, a2)) || j2.contains(times(a1)) || pp.contains(times(a2))
                    })
                })
            });
            t.record(hypothesis, holds, || {
                let gens: Vec<String> = pp.to_vec().iter().map(|&x| elem(f, ir.members[x])).collect();
                violation(f, Some(f.ideal(i)), Some(subset), format!("P = {{{}}} is not S-J in I", gens.join(",")))
            });
        }
    }
    Ok(())
}

pub fn p9(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (r, ctx, l, j) = (f.ring(), f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let sj = f.check(Predicate::SJ, None, i, k)?;
        let jacobson_ideal = jacobson_star_index(l, i)? == i;
        let Some(s) = sj.witness_s else {
            t.record(false, true, || unreachable!());
            continue;
        };
        if !jacobson_ideal {
            t.record(false, true, || unreachable!());
            continue;
        }
        let chain = l.le(j, i) && l.le(i, ctx.colon_elem(j, s)?);
        let w = is_s_finite(l.ideal(j), f.subsets()[k].members(), 64)?;
        let jw = l.ideal(j);
        let finite = w.f.is_subset(jw) && jw.members().iter().all(|x| w.f.contains(r.mul(x, w.s)));
        t.record(true, chain && finite, || {
            violation(
                f,
                Some(l.ideal(i)),
                Some(&f.subsets()[k]),
                format!("chain J(R) ⊆ I ⊆ (J(R):s): {chain}, S-finite witness valid: {finite}"),
            )
        });
    }
    Ok(())
}

pub fn p10(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() || f.ring().size() > PAIR_LIMIT {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    for k in 0..f.subsets().len() {
        let subset = &f.subsets()[k];
        let family = s_j_ideals(f, k)?;
        let mut avoiding = Vec::new();
        for a in 0..l.len() {
            let mut ok = true;
            for s in subset.iter() {
                if l.le(a, ctx.colon_elem(j, s)?) {
                    ok = false;
                    break;
                }
            }
            if ok {
                avoiding.push(a);
            }
        }
        for &a in &avoiding {
            for &(i, wi) in &family {
                for &(kk, wk) in &family {
                    if l.product(a, i) != l.product(a, kk) {
                        continue;
                    }
                    let holds = l.le(i, ctx.colon_elem(kk, wk)?) && l.le(kk, ctx.colon_elem(i, wi)?);
                    t.record(true, holds, || {
                        violation(f, Some(l.ideal(i)), Some(subset), format!("AI = AK but Is ⊄ K or Ks ⊄ I (K gens {:?})", l.ideal(kk).to_vec()))
                    });
                }
            }
            for i in (0..l.len()).filter(|&i| l.is_proper(i)) {
                let ai = l.product(a, i);
                if subset.meets(l.ideal(ai)).is_some() {
                    continue;
                }
                let res = f.check(Predicate::SJ, None, ai, k)?;
                let Some(w) = res.witness_s else { continue };
                let holds = l.le(i, ctx.colon_elem(ai, w)?);
                t.record(true, holds, || {
                    violation(f, Some(l.ideal(i)), Some(subset), format!("AI is S-J with {} but Is ⊄ AI", elem(f, w)))
                });
            }
        }
    }
    Ok(())
}

pub fn p11(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (ctx, l, r) = (f.ctx(), f.lattice(), f.ring());
    for (i, k) in f.instances() {
        let subset = &f.subsets()[k];
        if !f.check(Predicate::SJ, None, i, k)?.verdict {
            continue;
        }
        let ideal = l.ideal(i);
        let mut colons = BTreeSet::new();
        for x in r.elements().filter(|&x| !ideal.contains(x)) {
            colons.insert(ctx.colon_elem(i, x)?);
        }
        for a in (0..l.len()).filter(|&a| !l.le(a, i)) {
            let c = ideal.colon_by(l.ideal(a));
            colons.insert(l.index_of(&c).expect("colon ideals are in the lattice"));
        }
        for c in colons {
            let disjoint = subset.meets(l.ideal(c)).is_none();
            let holds = disjoint && f.check(Predicate::SJ, None, c, k)?.verdict;
            t.record(disjoint, holds, || {
                violation(f, Some(ideal), Some(subset), format!("(I:X) = {:?} is not S-J", l.ideal(c).to_vec()))
            });
        }
    }
    Ok(())
}

pub fn p12(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (ctx, l, j) = (f.ctx(), f.lattice(), f.jacobson());
    for k in 0..f.subsets().len() {
        let subset = &f.subsets()[k];
        let family: Vec<usize> = s_j_ideals(f, k)?.into_iter().map(|(i, _)| i).collect();
        let maximal_in = |m: usize| family.contains(&m) && family.iter().all(|&o| o == m || !l.le(m, o));
        for &m in family.iter().filter(|&&m| maximal_in(m)) {
            t.record(true, l.is_prime(m), || {
                violation(f, Some(l.ideal(m)), Some(subset), "maximal S-J-ideal is not prime".into())
            });
        }
        for p in l.prime_ideals() {
            if subset.meets(l.ideal(p)).is_some() {
                continue;
            }
            let mut is_colon = false;
            for s in subset.iter() {
                if ctx.colon_elem(j, s)? == p {
                    is_colon = true;
                    break;
                }
            }
            t.record(is_colon, maximal_in(p), || {
                violation(f, Some(l.ideal(p)), Some(subset), "prime (J(R):s) is not a maximal S-J-ideal".into())
            });
        }
    }
    Ok(())
}

pub fn p13(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let (r, ctx, l, j) = (f.ring(), f.ctx(), f.lattice(), f.jacobson());
    for (i, k) in f.instances() {
        let res = f.check(Predicate::SJ, None, i, k)?;
        let rows = ctx.rows(RowKind::Product, i)?;
        let star = l.ideal(jacobson_star_index(l, i)?);
        for s in f.subsets()[k].iter() {
            if ctx.colon_elem(j, s)? != j {
                t.record(false, true, || unreachable!());
                continue;
            }
            let left = escapes_fail(r, star, s);
            let right = escapes_fail(r, l.ideal(i), s);
            let rhs = l.le(i, j) && pair_in(&rows, &left, &right).is_none();
            let lhs = res.working_s.contains(&s);
            t.record(true, lhs == rhs, || {
                violation(
                    f,
                    Some(l.ideal(i)),
                    Some(&f.subsets()[k]),
                    format!("s = {}: witness {lhs}, J*(I) criterion {rhs}", elem(f, s)),
                )
            });
        }
    }
    Ok(())
}

pub fn p16(f: &RingFacts, t: &mut Tally) -> Result<()> {
    if !f.commutative_with_identity() {
        return Ok(());
    }
    let l = f.lattice();
    for k in 0..f.subsets().len() {
        let subset = &f.subsets()[k];
        let family: Vec<usize> = s_j_ideals(f, k)?.into_iter().map(|(i, _)| i).collect();
        let mut targets = BTreeSet::new();
        for (x, &a) in family.iter().enumerate() {
            for &b in &family[x + 1..] {
                targets.insert(l.intersect(a, b));
            }
        }
        if let Some((&first, rest)) = family.split_first() {
            targets.insert(rest.iter().fold(first, |acc, &b| l.intersect(acc, b)));
        }
        for c in targets {
            let holds = f.check(Predicate::SJ, None, c, k)?.verdict;
            t.record(true, holds, || {
                violation(f, Some(l.ideal(c)), Some(subset), "intersection of S-J-ideals is not S-J".into())
            });
        }
    }
    Ok(())
}
