//! Direct re-verification of witnesses and violations, without the row
//! tables and colon caches the search uses.

use super::{Method, Pair, Predicate, Radical, Violation};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::subset::SubsetS;

struct Replay<'a> {
    ctx: &'a RingContext,
    pred: Predicate,
    ideal: &'a IdealSet,
    radical: IdealSet,
}

impl<'a> Replay<'a> {
    fn new(ctx: &'a RingContext, pred: Predicate, ideal: &'a IdealSet) -> Result<Replay<'a>> {
        let radical = match super::radical_of(pred) {
            Radical::Jacobson => ctx.jacobson()?.clone(),
            Radical::Prime => ctx.prime_radical()?.clone(),
            Radical::Ideal => ideal.clone(),
        };
        Ok(Replay {
            ctx,
            pred,
            ideal,
            radical,
        })
    }

    fn sandwich(&self) -> bool {
        self.pred.is_right() || !self.ctx.ring().is_commutative()
    }

    /// `x·T ⊆ target` where `T` is spanned additively by `span`.
    fn times_inside(&self, xs: &[usize], span: &[usize], target: &IdealSet) -> bool {
        let r = self.ctx.ring();
        xs.iter().all(|&x| span.iter().all(|&t| target.contains(r.mul(x, t))))
    }

    /// Whether the left (`radical`) or right (`ideal`) escape holds for the
    /// additive span of `xs`.
    fn escapes(&self, xs: &[usize], s: Option<usize>, target: &IdealSet) -> bool {
        let r = self.ctx.ring();
        match s {
            None => xs.iter().all(|&x| target.contains(x)),
            Some(s) if self.pred.is_right() => {
                let gen = IdealSet::generate(r, &[s]);
                self.times_inside(xs, gen.additive_gens(), target)
            }
            Some(s) => xs.iter().all(|&x| target.contains(r.mul(s, x))),
        }
    }

    fn related(&self, a: &[usize], b: &[usize], elementwise: bool) -> bool {
        let r = self.ctx.ring();
        if elementwise && self.sandwich() {
            let gens = r.additive_gens();
            a.iter()
                .all(|&x| b.iter().all(|&y| gens.iter().all(|&g| self.ideal.contains(r.mul(r.mul(x, g), y)))))
        } else {
            a.iter().all(|&x| b.iter().all(|&y| self.ideal.contains(r.mul(x, y))))
        }
    }

    fn violates(&self, a: &[usize], b: &[usize], s: Option<usize>, elementwise: bool) -> bool {
        self.related(a, b, elementwise) && !self.escapes(a, s, &self.radical) && !self.escapes(b, s, self.ideal)
    }

    fn pair_spans(&self, pair: Pair) -> Result<(Vec<usize>, Vec<usize>, bool)> {
        Ok(match pair {
            Pair::Elements { a, b } => (vec![a], vec![b], true),
            Pair::Ideals { a, b } => {
                let l = self.ctx.lattice()?;
                (
                    l.ideal(a).additive_gens().to_vec(),
                    l.ideal(b).additive_gens().to_vec(),
                    false,
                )
            }
        })
    }
}

/// Whether `v` is a genuine violation. A violation without `s` for an
/// S-variant must defeat every `s` in `subset`.
pub fn replay_violation(
    ctx: &RingContext,
    pred: Predicate,
    ideal: &IdealSet,
    subset: Option<&SubsetS>,
    v: &Violation,
) -> Result<bool> {
    let rp = Replay::new(ctx, pred, ideal)?;
    let (a, b, elementwise) = rp.pair_spans(v.pair)?;
    match (v.s, pred.uses_subset()) {
        (Some(s), true) => Ok(rp.violates(&a, &b, Some(s), elementwise)),
        (None, false) => Ok(rp.violates(&a, &b, None, elementwise)),
        (None, true) => {
            let subset = subset.ok_or_else(|| Error::InvalidParameter(format!("{pred} needs a subset S")))?;
            Ok(subset.iter().all(|s| rp.violates(&a, &b, Some(s), elementwise)))
        }
        (Some(_), false) => Err(Error::InvalidParameter(format!("{pred} takes no s"))),
    }
}

/// Whether `s` satisfies the inner universal statement of `pred`, by a
/// full scan over element pairs or lattice pairs.
pub fn replay_witness(
    ctx: &RingContext,
    pred: Predicate,
    ideal: &IdealSet,
    s: Option<usize>,
    method: Method,
) -> Result<bool> {
    let rp = Replay::new(ctx, pred, ideal)?;
    let r = ctx.ring();
    match method {
        Method::Elementwise => Ok(r
            .elements()
            .all(|a| r.elements().all(|b| !rp.violates(&[a], &[b], s, true)))),
        Method::Lattice => {
            let l = ctx.lattice()?;
            let ideals = l.ideals();
            Ok(ideals.iter().all(|a| {
                ideals
                    .iter()
                    .all(|b| !rp.violates(a.additive_gens(), b.additive_gens(), s, false))
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicate::{check, is_j_ideal, CheckOptions};
    use crate::ring::Ring;
    use crate::subset::SubsetKind;

    #[test]
    fn z36_witness_and_violation_replay() {
        let r = Ring::zn(36).unwrap();
        let ctx = RingContext::new(&r);
        let i = IdealSet::generate(&r, &[4]);
        assert!(replay_witness(&ctx, Predicate::SJ, &i, Some(3), Method::Elementwise).unwrap());
        assert!(!replay_witness(&ctx, Predicate::SJ, &i, Some(1), Method::Elementwise).unwrap());
        assert!(replay_witness(&ctx, Predicate::SJ, &i, Some(3), Method::Lattice).unwrap());
        let res = is_j_ideal(&ctx, &i).unwrap();
        assert!(replay_violation(&ctx, Predicate::J, &i, None, &res.counterexample[0]).unwrap());
        let bogus = Violation {
            s: None,
            pair: Pair::Elements { a: 1, b: 1 },
        };
        assert!(!replay_violation(&ctx, Predicate::J, &i, None, &bogus).unwrap());
    }

    #[test]
    fn per_pair_violation_defeats_every_s() {
        let r = Ring::zn(12).unwrap();
        let ctx = RingContext::new(&r);
        let i = IdealSet::generate(&r, &[4]);
        let s = SubsetS::from_elems(&r, &[1, 5], SubsetKind::MulClosed).unwrap();
        let res = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::per_pair()).unwrap();
        assert!(!res.verdict);
        assert!(replay_violation(&ctx, Predicate::SJ, &i, Some(&s), &res.counterexample[0]).unwrap());
    }
}
