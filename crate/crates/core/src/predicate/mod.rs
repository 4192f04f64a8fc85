//! Decision procedures for 𝒥-ideals, n-ideals and their S-variants.
//!
//! Every check reduces to the same search. For each candidate `s` there is
//! a set `A_s` of left entries that fail their escape condition and a set
//! `B_s` of right entries that fail theirs; `s` witnesses the predicate iff
//! no pair `(a, b)` in the relation (`ab ∈ I`, `aRb ⊆ I` or `AB ⊆ I`) has
//! `a ∈ A_s` and `b ∈ B_s`.

mod replay;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::context::{RingContext, RowKind, ELEMENTWISE_LIMIT};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::radical;
use crate::ring::TABLE_LIMIT;
use crate::subset::SubsetS;

pub use replay::{replay_violation, replay_witness};

/// Largest ring for the elementwise right-S-𝒥 form.
pub const RIGHT_ELEMENTWISE_LIMIT: usize = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    J,
    N,
    SPrime,
    SN,
    SJ,
    RightSPrime,
    RightSJ,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::J,
        Predicate::N,
        Predicate::SPrime,
        Predicate::SN,
        Predicate::SJ,
        Predicate::RightSPrime,
        Predicate::RightSJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::J => "j",
            Predicate::N => "n",
            Predicate::SPrime => "s-prime",
            Predicate::SN => "s-n",
            Predicate::SJ => "s-j",
            Predicate::RightSPrime => "right-s-prime",
            Predicate::RightSJ => "right-s-j",
        }
    }

    pub fn uses_subset(self) -> bool {
        !matches!(self, Predicate::J | Predicate::N)
    }

    pub fn is_right(self) -> bool {
        matches!(self, Predicate::RightSPrime | Predicate::RightSJ)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown predicate {s:?}")))
    }
}

/// Where the existential over `s` sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantifierMode {
    /// One `s` for all pairs.
    #[default]
    FixedS,
    /// Each pair may pick its own `s`.
    PerPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Elementwise,
    Lattice,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: QuantifierMode,
    /// `None` picks the default method for the ring.
    pub method: Option<Method>,
}

impl CheckOptions {
    pub fn fixed(method: Method) -> CheckOptions {
        CheckOptions {
            mode: QuantifierMode::FixedS,
            method: Some(method),
        }
    }

    pub fn per_pair() -> CheckOptions {
        CheckOptions {
            mode: QuantifierMode::PerPair,
            method: None,
        }
    }
}

/// A violating pair: ring elements, or lattice indices of ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Pair {
    Elements { a: usize, b: usize },
    Ideals { a: usize, b: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The `s` this pair defeats; `None` for predicates without `S` and for
    /// per-pair mode, where the pair defeats every `s`.
    pub s: Option<usize>,
    pub pair: Pair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub predicate: Predicate,
    pub verdict: bool,
    /// Smallest witnessing `s` (fixed-s mode).
    pub witness_s: Option<usize>,
    /// Every witnessing `s` in increasing order (fixed-s mode).
    pub working_s: Vec<usize>,
    /// On a false verdict: one violation per `s`, or a single pair.
    pub counterexample: Vec<Violation>,
    pub mode: QuantifierMode,
    pub method: Method,
}

impl CheckResult {
    /// The violation recorded against `s`.
    pub fn violation_for(&self, s: Option<usize>) -> Option<&Violation> {
        self.counterexample.iter().find(|v| v.s == s)
    }
}

/// Which radical the left escape uses.
#[derive(Clone, Copy)]
enum Radical {
    Jacobson,
    Prime,
    /// The ideal itself (S-prime forms).
    Ideal,
}

fn radical_of(pred: Predicate) -> Radical {
    match pred {
        Predicate::J | Predicate::SJ | Predicate::RightSJ => Radical::Jacobson,
        Predicate::N | Predicate::SN => Radical::Prime,
        Predicate::SPrime | Predicate::RightSPrime => Radical::Ideal,
    }
}

fn radical_index(ctx: &RingContext, which: Radical, ideal: usize) -> Result<usize> {
    match which {
        Radical::Jacobson => ctx.jacobson_index(),
        Radical::Prime => Ok(ctx.prime_radical_index()?.0),
        Radical::Ideal => Ok(ideal),
    }
}

/// The method used when none is requested.
pub fn default_method(ctx: &RingContext, pred: Predicate) -> Method {
    let r = ctx.ring();
    if pred.is_right() {
        Method::Lattice
    } else if r.is_commutative() && r.size() <= ELEMENTWISE_LIMIT {
        Method::Elementwise
    } else if !r.is_commutative() && !pred.uses_subset() && r.size() <= TABLE_LIMIT {
        Method::Elementwise
    } else {
        Method::Lattice
    }
}

fn check_applicable(ctx: &RingContext, pred: Predicate, method: Method) -> Result<()> {
    let r = ctx.ring();
    if pred.uses_subset() && !pred.is_right() && !r.is_commutative() {
        return Err(Error::NotApplicable(format!(
            "{pred} is defined for commutative rings; use the right variant"
        )));
    }
    if pred.is_right() && method == Method::Elementwise {
        if !r.has_identity() {
            return Err(Error::NotApplicable("the elementwise right form needs an identity".into()));
        }
        if r.size() > RIGHT_ELEMENTWISE_LIMIT {
            return Err(Error::CapacityExceeded(format!(
                "the elementwise right form is limited to {RIGHT_ELEMENTWISE_LIMIT} elements, got {}",
                r.size()
            )));
        }
    }
    Ok(())
}

/// Row table and the per-`s` failure sets for one instance.
struct Instance<'a> {
    ctx: &'a RingContext,
    pred: Predicate,
    method: Method,
    ideal: usize,
    radical: usize,
}

impl Instance<'_> {
    fn rows(&self) -> Result<std::sync::Arc<Vec<ElemSet>>> {
        let kind = match self.method {
            Method::Lattice => RowKind::IdealPairs,
            Method::Elementwise if self.ctx.ring().is_commutative() && !self.pred.is_right() => RowKind::Product,
            Method::Elementwise => RowKind::Sandwich,
        };
        self.ctx.rows(kind, self.ideal)
    }

    /// Entries `x` whose escape into lattice ideal `target` fails, where the
    /// escape is `x ∈ target` (`s = None`), `sx ∈ target` (commutative forms)
    /// or `x⟨s⟩ ⊆ target` (right forms).
    fn fail_set(&self, target: usize, s: Option<usize>) -> Result<ElemSet> {
        let ctx = self.ctx;
        let l = ctx.lattice()?;
        let r = ctx.ring();
        match self.method {
            Method::Elementwise => {
                let n = r.size();
                let t = l.ideal(target);
                Ok(match s {
                    None => ElemSet::full(n).difference(t.members()),
                    Some(s) if self.pred.is_right() => {
                        let c = ctx.colon_principal(target, s)?;
                        ElemSet::full(n).difference(l.ideal(c).members())
                    }
                    Some(s) => ElemSet::from_elems(n, r.elements().filter(|&x| !t.contains(r.mul(s, x)))),
                })
            }
            Method::Lattice => {
                let c = match s {
                    None => target,
                    Some(s) if self.pred.is_right() => ctx.colon_principal(target, s)?,
                    Some(s) => ctx.colon_elem(target, s)?,
                };
                Ok(ElemSet::from_elems(l.len(), (0..l.len()).filter(|&a| !l.le(a, c))))
            }
        }
    }

    fn fail_sets(&self, s: Option<usize>) -> Result<(ElemSet, ElemSet)> {
        Ok((self.fail_set(self.radical, s)?, self.fail_set(self.ideal, s)?))
    }

    fn pair(&self, a: usize, b: usize) -> Pair {
        match self.method {
            Method::Elementwise => Pair::Elements { a, b },
            Method::Lattice => Pair::Ideals { a, b },
        }
    }
}

/// Lexicographically smallest `(a, b)` with `b ∈ rows[a]`, `a ∈ left`,
/// `b ∈ right`.
fn first_violation(rows: &[ElemSet], left: &ElemSet, right: &ElemSet) -> Option<(usize, usize)> {
    left.iter()
        .find_map(|a| rows[a].intersection(right).first().map(|b| (a, b)))
}

/// Runs `pred` on `ideal`, with `subset` for the S-variants.
pub fn check(
    ctx: &RingContext,
    pred: Predicate,
    ideal: &IdealSet,
    subset: Option<&SubsetS>,
    opts: CheckOptions,
) -> Result<CheckResult> {
    let method = opts.method.unwrap_or_else(|| default_method(ctx, pred));
    check_applicable(ctx, pred, method)?;
    let idx = ctx.index_of(ideal)?;
    let subset = match (pred.uses_subset(), subset) {
        (true, None) => return Err(Error::InvalidParameter(format!("{pred} needs a subset S"))),
        (true, Some(s)) => {
            if s.ring() != ctx.ring() {
                return Err(Error::RingMismatch);
            }
            if let Some(x) = s.meets(ideal) {
                return Err(Error::NotDisjoint(x));
            }
            Some(s)
        }
        (false, _) => {
            if !ideal.is_proper() {
                return Err(Error::Precondition(format!("{pred} needs a proper ideal")));
            }
            None
        }
    };
    let inst = Instance {
        ctx,
        pred,
        method,
        ideal: idx,
        radical: radical_index(ctx, radical_of(pred), idx)?,
    };
    let rows = inst.rows()?;
    let mut result = CheckResult {
        predicate: pred,
        verdict: false,
        witness_s: None,
        working_s: Vec::new(),
        counterexample: Vec::new(),
        mode: opts.mode,
        method,
    };
    let Some(subset) = subset else {
        let (left, right) = inst.fail_sets(None)?;
        match first_violation(&rows, &left, &right) {
            None => result.verdict = true,
            Some((a, b)) => result.counterexample.push(Violation {
                s: None,
                pair: inst.pair(a, b),
            }),
        }
        return Ok(result);
    };
    let candidates: Vec<usize> = subset.iter().collect();
    let per_s: Vec<(ElemSet, ElemSet)> = candidates
        .par_iter()
        .map(|&s| inst.fail_sets(Some(s)))
        .collect::<Result<_>>()?;
    match opts.mode {
        QuantifierMode::FixedS => {
            let found: Vec<Option<(usize, usize)>> = per_s
                .par_iter()
                .map(|(left, right)| first_violation(&rows, left, right))
                .collect();
            for (&s, v) in candidates.iter().zip(found) {
                match v {
                    None => result.working_s.push(s),
                    Some((a, b)) => result.counterexample.push(Violation {
                        s: Some(s),
                        pair: inst.pair(a, b),
                    }),
                }
            }
            result.verdict = !result.working_s.is_empty();
            result.witness_s = result.working_s.first().copied();
            if result.verdict {
                result.counterexample.clear();
            }
        }
        QuantifierMode::PerPair => {
            let (mut left, mut right) = per_s[0].clone();
            for (l, r) in &per_s[1..] {
                left = left.intersection(l);
                right = right.intersection(r);
            }
            match first_violation(&rows, &left, &right) {
                None => result.verdict = true,
                Some((a, b)) => result.counterexample.push(Violation {
                    s: None,
                    pair: inst.pair(a, b),
                }),
            }
        }
    }
    Ok(result)
}

pub fn is_j_ideal(ctx: &RingContext, ideal: &IdealSet) -> Result<CheckResult> {
    check(ctx, Predicate::J, ideal, None, CheckOptions::default())
}

pub fn is_n_ideal(ctx: &RingContext, ideal: &IdealSet) -> Result<CheckResult> {
    check(ctx, Predicate::N, ideal, None, CheckOptions::default())
}

pub fn is_s_n_ideal(ctx: &RingContext, ideal: &IdealSet, s: &SubsetS) -> Result<CheckResult> {
    check(ctx, Predicate::SN, ideal, Some(s), CheckOptions::default())
}

pub fn is_s_prime(ctx: &RingContext, ideal: &IdealSet, s: &SubsetS) -> Result<CheckResult> {
    check(ctx, Predicate::SPrime, ideal, Some(s), CheckOptions::default())
}

pub fn is_s_j_ideal(ctx: &RingContext, ideal: &IdealSet, s: &SubsetS) -> Result<CheckResult> {
    check(ctx, Predicate::SJ, ideal, Some(s), CheckOptions::default())
}

pub fn is_right_s_prime(ctx: &RingContext, ideal: &IdealSet, s: &SubsetS) -> Result<CheckResult> {
    check(ctx, Predicate::RightSPrime, ideal, Some(s), CheckOptions::default())
}

pub fn is_right_s_j_ideal(ctx: &RingContext, ideal: &IdealSet, s: &SubsetS, method: Method) -> Result<CheckResult> {
    check(ctx, Predicate::RightSJ, ideal, Some(s), CheckOptions::fixed(method))
}

/// Colon ideals `(I:⟨s⟩)` and `(𝒥(R):⟨s⟩)` for one `s`, as lattice indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColonEntry {
    pub s: usize,
    pub ideal_colon: usize,
    pub jacobson_colon: usize,
}

/// Facts about `(I, S)` that several results refer to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatedChecks {
    /// Smallest witness of the (right) S-𝒥 property, if any.
    pub witness_s: Option<usize>,
    /// `I ⊆ (𝒥(R):⟨s⟩)` for that witness.
    pub inside_jacobson_colon: Option<bool>,
    /// Lattice index of `𝒥*(I)`.
    pub jacobson_star: usize,
    pub superfluous: bool,
    pub colons: Vec<ColonEntry>,
}

pub fn related_checks(ctx: &RingContext, ideal: &IdealSet, subset: &SubsetS) -> Result<RelatedChecks> {
    let l = ctx.lattice()?;
    let idx = ctx.index_of(ideal)?;
    let j = ctx.jacobson_index()?;
    let pred = if ctx.ring().is_commutative() {
        Predicate::SJ
    } else {
        Predicate::RightSJ
    };
    let res = check(ctx, pred, ideal, Some(subset), CheckOptions::default())?;
    let colons = subset
        .iter()
        .map(|s| {
            Ok(ColonEntry {
                s,
                ideal_colon: ctx.colon_principal(idx, s)?,
                jacobson_colon: ctx.colon_principal(j, s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let inside = res
        .witness_s
        .map(|s| -> Result<bool> { Ok(l.le(idx, ctx.colon_principal(j, s)?)) })
        .transpose()?;
    Ok(RelatedChecks {
        witness_s: res.witness_s,
        inside_jacobson_colon: inside,
        jacobson_star: radical::jacobson_star_index(l, idx)?,
        superfluous: l.is_superfluous(idx),
        colons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::subset::SubsetKind;

    fn z36() -> (Ring, RingContext) {
        let r = Ring::zn(36).unwrap();
        let ctx = RingContext::new(&r);
        (r, ctx)
    }

    #[test]
    fn z36_four_is_s_j_with_three() {
        let (r, ctx) = z36();
        let i = IdealSet::generate(&r, &[4]);
        let s = SubsetS::from_elems(&r, &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        let res = is_s_j_ideal(&ctx, &i, &s).unwrap();
        assert!(res.verdict);
        assert_eq!(res.witness_s, Some(3));
        assert_eq!(res.working_s, vec![3, 9, 27]);

        let j = is_j_ideal(&ctx, &i).unwrap();
        assert!(!j.verdict);
        assert_eq!(j.counterexample[0].pair, Pair::Elements { a: 2, b: 2 });

        let one = SubsetS::from_elems(&r, &[1], SubsetKind::MulClosed).unwrap();
        let res = is_s_j_ideal(&ctx, &i, &one).unwrap();
        assert!(!res.verdict);
        assert_eq!(res.counterexample.len(), 1);
        assert_eq!(res.counterexample[0].s, Some(1));
    }

    #[test]
    fn lattice_and_elementwise_agree_on_z36() {
        let (r, ctx) = z36();
        let s = SubsetS::from_elems(&r, &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        for i in ctx.lattice().unwrap().ideals().to_vec() {
            if s.meets(&i).is_some() {
                continue;
            }
            for pred in [Predicate::SJ, Predicate::SPrime, Predicate::SN] {
                let e = check(&ctx, pred, &i, Some(&s), CheckOptions::fixed(Method::Elementwise)).unwrap();
                let l = check(&ctx, pred, &i, Some(&s), CheckOptions::fixed(Method::Lattice)).unwrap();
                assert_eq!(e.working_s, l.working_s, "{pred} on {:?}", i.to_vec());
            }
            let e = check(&ctx, Predicate::RightSJ, &i, Some(&s), CheckOptions::fixed(Method::Elementwise)).unwrap();
            let l = check(&ctx, Predicate::RightSJ, &i, Some(&s), CheckOptions::fixed(Method::Lattice)).unwrap();
            assert_eq!(e.working_s, l.working_s);
        }
    }

    #[test]
    fn disjointness_and_properness() {
        let (r, ctx) = z36();
        let i = IdealSet::generate(&r, &[3]);
        let s = SubsetS::from_elems(&r, &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        assert_eq!(is_s_j_ideal(&ctx, &i, &s).unwrap_err(), Error::NotDisjoint(3));
        assert!(matches!(
            is_j_ideal(&ctx, &IdealSet::whole(&r)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn small_examples() {
        let z4 = Ring::zn(4).unwrap();
        let ctx = RingContext::new(&z4);
        assert!(is_j_ideal(&ctx, &IdealSet::generate(&z4, &[2])).unwrap().verdict);
        assert!(is_n_ideal(&ctx, &IdealSet::zero(&z4)).unwrap().verdict);
        let f = Ring::zn(7).unwrap();
        let ctx = RingContext::new(&f);
        assert!(is_j_ideal(&ctx, &IdealSet::zero(&f)).unwrap().verdict);
        let one = SubsetS::from_elems(&f, &[1], SubsetKind::MulClosed).unwrap();
        assert!(is_right_s_prime(&ctx, &IdealSet::zero(&f), &one).unwrap().verdict);
    }

    #[test]
    fn per_pair_is_weaker() {
        let (r, ctx) = z36();
        let s = SubsetS::from_elems(&r, &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        for i in ctx.lattice().unwrap().ideals().to_vec() {
            if s.meets(&i).is_some() {
                continue;
            }
            let fixed = is_s_j_ideal(&ctx, &i, &s).unwrap();
            let pp = check(&ctx, Predicate::SJ, &i, Some(&s), CheckOptions::per_pair()).unwrap();
            assert!(!fixed.verdict || pp.verdict);
        }
    }

    #[test]
    fn matrix_ring_right_checks() {
        let m = Ring::matrix(2, &Ring::zn(2).unwrap()).unwrap();
        let ctx = RingContext::new(&m);
        let one = SubsetS::from_elems(&m, &[m.one().unwrap()], SubsetKind::MSystem).unwrap();
        let zero = IdealSet::zero(&m);
        assert!(is_right_s_j_ideal(&ctx, &zero, &one, Method::Lattice).unwrap().verdict);
        assert!(is_right_s_j_ideal(&ctx, &zero, &one, Method::Elementwise).unwrap().verdict);
        assert!(matches!(
            is_s_j_ideal(&ctx, &zero, &one),
            Err(Error::NotApplicable(_))
        ));
        let rel = related_checks(&ctx, &zero, &one).unwrap();
        assert_eq!(rel.inside_jacobson_colon, Some(true));
    }
}
