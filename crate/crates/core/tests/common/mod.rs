//! Brute-force reference implementation of ideals, radicals and every
//! predicate, sharing nothing with the library beyond ring arithmetic.

#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use ringlab_core::predicate::{Predicate, QuantifierMode};
use ringlab_core::Ring;

/// An ideal as a membership table plus additive generators.
#[derive(Clone)]
pub struct NaiveIdeal {
    pub members: Vec<bool>,
    pub gens: Vec<usize>,
}

impl NaiveIdeal {
    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn elems(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&x| self.members[x]).collect()
    }

    pub fn le(&self, other: &NaiveIdeal) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }
}

pub struct Oracle {
    pub ring: Ring,
    pub ideals: Vec<NaiveIdeal>,
    pub jacobson: NaiveIdeal,
    pub prime_radical: NaiveIdeal,
    related_cache: RefCell<HashMap<(Vec<bool>, bool), Rc<Vec<(usize, usize)>>>>,
    principal_cache: RefCell<HashMap<usize, Rc<NaiveIdeal>>>,
}

/// Two-sided ideal generated by `seeds`, by worklist closure.
pub fn closure(r: &Ring, seeds: &[usize]) -> NaiveIdeal {
    let n = r.size();
    let mut members = vec![false; n];
    let mut list = Vec::new();
    let mut work = vec![r.zero()];
    work.extend_from_slice(seeds);
    while let Some(x) = work.pop() {
        if members[x] {
            continue;
        }
        members[x] = true;
        list.push(x);
        for &m in &list {
            work.push(r.add(x, m));
        }
        for y in 0..n {
            work.push(r.mul(y, x));
            work.push(r.mul(x, y));
        }
    }
    NaiveIdeal {
        gens: additive_gens(r, &members),
        members,
    }
}

fn additive_gens(r: &Ring, members: &[bool]) -> Vec<usize> {
    let n = r.size();
    let mut span = vec![false; n];
    span[r.zero()] = true;
    let mut gens = Vec::new();
    for x in 0..n {
        if !members[x] || span[x] {
            continue;
        }
        gens.push(x);
        let current: Vec<usize> = (0..n).filter(|&y| span[y]).collect();
        let mut k = x;
        while k != r.zero() {
            for &y in &current {
                span[r.add(y, k)] = true;
            }
            k = r.add(k, x);
        }
    }
    gens
}

/// `AB`, spanned by products of additive generators.
pub fn product(r: &Ring, a: &NaiveIdeal, b: &NaiveIdeal) -> NaiveIdeal {
    let prods: Vec<usize> = a.gens.iter().flat_map(|&x| b.gens.iter().map(move |&y| r.mul(x, y))).collect();
    closure(r, &prods)
}

fn products_inside(r: &Ring, a: &NaiveIdeal, b: &NaiveIdeal, t: &NaiveIdeal) -> bool {
    a.gens.iter().all(|&x| b.gens.iter().all(|&y| t.contains(r.mul(x, y))))
}

fn nilpotent(r: &Ring, i: &NaiveIdeal) -> bool {
    let mut power = i.clone();
    for _ in 0..=r.size() {
        if power.gens.is_empty() {
            return true;
        }
        let next = product(r, &power, i);
        if next.members == power.members {
            return false;
        }
        power = next;
    }
    false
}

impl Oracle {
    pub fn new(ring: &Ring) -> Oracle {
        let r = ring;
        let n = r.size();
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut ideals: Vec<NaiveIdeal> = Vec::new();
        for x in 0..n {
            let p = closure(r, &[x]);
            if seen.insert(p.members.clone()) {
                ideals.push(p);
            }
        }
        let mut k = 0;
        while k < ideals.len() {
            for j in 0..=k {
                let seeds: Vec<usize> = ideals[k].gens.iter().chain(&ideals[j].gens).copied().collect();
                let s = closure(r, &seeds);
                if seen.insert(s.members.clone()) {
                    ideals.push(s);
                }
            }
            k += 1;
        }
        let jac_members: Vec<bool> = (0..n).map(|x| nilpotent(r, &closure(r, &[x]))).collect();
        let jacobson = NaiveIdeal {
            gens: additive_gens(r, &jac_members),
            members: jac_members,
        };
        let primes: Vec<&NaiveIdeal> = ideals
            .iter()
            .filter(|p| p.members.iter().any(|&b| !b))
            .filter(|p| {
                ideals.iter().all(|a| {
                    ideals
                        .iter()
                        .all(|b| !products_inside(r, a, b, p) || a.le(p) || b.le(p))
                })
            })
            .collect();
        let beta_members: Vec<bool> = (0..n).map(|x| primes.iter().all(|p| p.contains(x))).collect();
        let prime_radical = NaiveIdeal {
            gens: additive_gens(r, &beta_members),
            members: beta_members,
        };
        Oracle {
            ring: ring.clone(),
            ideals,
            jacobson,
            prime_radical,
            related_cache: RefCell::new(HashMap::new()),
            principal_cache: RefCell::new(HashMap::new()),
        }
    }

    fn radical<'a>(&'a self, pred: Predicate, ideal: &'a NaiveIdeal) -> &'a NaiveIdeal {
        match pred {
            Predicate::J | Predicate::SJ | Predicate::RightSJ => &self.jacobson,
            Predicate::N | Predicate::SN => &self.prime_radical,
            Predicate::SPrime | Predicate::RightSPrime => ideal,
        }
    }

    /// Pairs `(a, b)` with `ab ∈ I`, or `aRb ⊆ I` for the noncommutative
    /// and right forms.
    fn related(&self, pred: Predicate, ideal: &NaiveIdeal) -> Rc<Vec<(usize, usize)>> {
        let r = &self.ring;
        let n = r.size();
        let sandwich = !r.is_commutative() || pred.is_right();
        let key = (ideal.members.clone(), sandwich);
        if let Some(v) = self.related_cache.borrow().get(&key) {
            return v.clone();
        }
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let inside = if sandwich {
                    (0..n).all(|x| ideal.contains(r.mul(r.mul(a, x), b)))
                } else {
                    ideal.contains(r.mul(a, b))
                };
                if inside {
                    out.push((a, b));
                }
            }
        }
        let out = Rc::new(out);
        self.related_cache.borrow_mut().insert(key, out.clone());
        out
    }

    fn principal(&self, s: usize) -> Rc<NaiveIdeal> {
        self.principal_cache
            .borrow_mut()
            .entry(s)
            .or_insert_with(|| Rc::new(closure(&self.ring, &[s])))
            .clone()
    }

    /// Elements whose escape into `t` fails: `x ∉ t`, `sx ∉ t`, or
    /// `x⟨s⟩ ⊄ t` for the right forms.
    fn fails(&self, pred: Predicate, t: &NaiveIdeal, s: Option<usize>) -> Vec<bool> {
        let r = &self.ring;
        let n = r.size();
        (0..n)
            .map(|x| {
                !match s {
                    None => t.contains(x),
                    Some(s) if pred.is_right() => {
                        t.contains(r.mul(x, s)) && (0..n).all(|y| t.contains(r.mul(r.mul(x, y), s)))
                    }
                    Some(s) => t.contains(r.mul(s, x)),
                }
            })
            .collect()
    }

    /// Elementwise definition. Returns the verdict and, in fixed-s mode,
    /// every witnessing `s`.
    pub fn elementwise(&self, pred: Predicate, ideal: &NaiveIdeal, subset: &[usize], mode: QuantifierMode) -> (bool, Vec<usize>) {
        let related = self.related(pred, ideal);
        let radical = self.radical(pred, ideal);
        let defeated = |left: &[bool], right: &[bool]| related.iter().any(|&(a, b)| left[a] && right[b]);
        if !pred.uses_subset() {
            return (!defeated(&self.fails(pred, radical, None), &self.fails(pred, ideal, None)), Vec::new());
        }
        let per_s: Vec<(Vec<bool>, Vec<bool>)> = subset
            .iter()
            .map(|&s| (self.fails(pred, radical, Some(s)), self.fails(pred, ideal, Some(s))))
            .collect();
        match mode {
            QuantifierMode::FixedS => {
                let working: Vec<usize> = subset
                    .iter()
                    .zip(&per_s)
                    .filter(|(_, (l, r))| !defeated(l, r))
                    .map(|(&s, _)| s)
                    .collect();
                (!working.is_empty(), working)
            }
            QuantifierMode::PerPair => {
                let ok = related
                    .iter()
                    .all(|&(a, b)| per_s.iter().any(|(l, r)| !(l[a] && r[b])));
                (ok, Vec::new())
            }
        }
    }

    /// Ideal-pair definition: `AB ⊆ I` forces `A⟨s⟩ ⊆ radical` or
    /// `B⟨s⟩ ⊆ I` (`As`, `Bs` for the commutative S-forms).
    pub fn lattice(&self, pred: Predicate, ideal: &NaiveIdeal, subset: &[usize], mode: QuantifierMode) -> (bool, Vec<usize>) {
        let r = &self.ring;
        let radical = self.radical(pred, ideal);
        let escapes = |a: &NaiveIdeal, t: &NaiveIdeal, s: Option<usize>| match s {
            None => a.le(t),
            Some(s) if pred.is_right() => products_inside(r, a, &self.principal(s), t),
            Some(s) => a.gens.iter().all(|&x| t.contains(r.mul(s, x))),
        };
        let defeats = |a: &NaiveIdeal, b: &NaiveIdeal, s: Option<usize>| {
            products_inside(r, a, b, ideal) && !escapes(a, radical, s) && !escapes(b, ideal, s)
        };
        let all_pairs = |f: &dyn Fn(&NaiveIdeal, &NaiveIdeal) -> bool| {
            self.ideals.iter().all(|a| self.ideals.iter().all(|b| f(a, b)))
        };
        if !pred.uses_subset() {
            return (all_pairs(&|a, b| !defeats(a, b, None)), Vec::new());
        }
        match mode {
            QuantifierMode::FixedS => {
                let working: Vec<usize> = subset
                    .iter()
                    .copied()
                    .filter(|&s| all_pairs(&|a, b| !defeats(a, b, Some(s))))
                    .collect();
                (!working.is_empty(), working)
            }
            QuantifierMode::PerPair => (
                all_pairs(&|a, b| subset.iter().any(|&s| !defeats(a, b, Some(s)))),
                Vec::new(),
            ),
        }
    }
}

use ringlab_core::expr::RingExpr;
use ringlab_core::harness::{CorpusConfig, RingFacts};
use ringlab_core::predicate::{check, CheckOptions, Method};
use ringlab_core::{Error, RingContext};

#[derive(Debug, Default)]
pub struct Sweep {
    pub rings: usize,
    pub comparisons: usize,
    pub disagreements: Vec<String>,
}

impl Sweep {
    fn disagree(&mut self, msg: String) {
        if self.disagreements.len() < 50 {
            self.disagreements.push(msg);
        }
    }
}

/// Compares ideals, radicals and every predicate (both methods, both
/// quantifier modes) with the oracle on each ring of at most `max_size`
/// elements.
pub fn sweep(exprs: &[RingExpr], max_size: usize) -> Sweep {
    let config = CorpusConfig::default();
    let mut out = Sweep::default();
    for expr in exprs {
        let Ok(ring) = expr.elaborate() else { continue };
        if ring.size() > max_size {
            continue;
        }
        let Ok(facts) = RingFacts::build(expr, &config) else {
            out.disagree(format!("{expr}: library could not build the ring"));
            continue;
        };
        out.rings += 1;
        sweep_ring(&facts, &mut out);
    }
    out
}

fn sweep_ring(facts: &RingFacts, out: &mut Sweep) {
    let ring = facts.ring();
    let label = facts.label();
    let oracle = Oracle::new(ring);
    let ctx: &RingContext = facts.ctx();
    let lattice = facts.lattice();
    let lib_sets: HashSet<Vec<bool>> = lattice
        .ideals()
        .iter()
        .map(|i| ring.elements().map(|x| i.contains(x)).collect())
        .collect();
    let oracle_sets: HashSet<Vec<bool>> = oracle.ideals.iter().map(|i| i.members.clone()).collect();
    out.comparisons += 1;
    if lib_sets != oracle_sets {
        out.disagree(format!("{label}: {} ideals vs {} from the oracle", lib_sets.len(), oracle_sets.len()));
        return;
    }
    let as_bits = |i: &ringlab_core::IdealSet| -> Vec<bool> { ring.elements().map(|x| i.contains(x)).collect() };
    out.comparisons += 2;
    if as_bits(ctx.jacobson().unwrap()) != oracle.jacobson.members {
        out.disagree(format!("{label}: Jacobson radical differs"));
    }
    if as_bits(ctx.prime_radical().unwrap()) != oracle.prime_radical.members {
        out.disagree(format!("{label}: prime radical differs"));
    }
    let find = |bits: &Vec<bool>| oracle.ideals.iter().find(|o| &o.members == bits).expect("same ideal sets");
    let identity = ring.has_identity();
    for i in 0..lattice.len() {
        let ideal = lattice.ideal(i);
        let naive = find(&as_bits(ideal));
        for pred in [Predicate::J, Predicate::N] {
            if !ideal.is_proper() {
                continue;
            }
            compare(out, label, ctx, &oracle, pred, ideal, naive, None, None, QuantifierMode::FixedS);
        }
        for subset in facts.subsets() {
            if subset.meets(ideal).is_some() {
                continue;
            }
            for pred in Predicate::ALL.into_iter().filter(|p| p.uses_subset()) {
                if !pred.is_right() && !ring.is_commutative() {
                    let r = check(ctx, pred, ideal, Some(subset), CheckOptions::default());
                    out.comparisons += 1;
                    if !matches!(r, Err(Error::NotApplicable(_))) {
                        out.disagree(format!("{label}: {pred} on a noncommutative ring gave {r:?}"));
                    }
                    continue;
                }
                let mut methods = vec![Method::Lattice];
                if !pred.is_right() || (identity && ring.size() <= ringlab_core::predicate::RIGHT_ELEMENTWISE_LIMIT) {
                    methods.push(Method::Elementwise);
                }
                for m in methods {
                    for mode in [QuantifierMode::FixedS, QuantifierMode::PerPair] {
                        compare(out, label, ctx, &oracle, pred, ideal, naive, Some(subset), Some(m), mode);
                    }
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn compare(
    out: &mut Sweep,
    label: &str,
    ctx: &RingContext,
    oracle: &Oracle,
    pred: Predicate,
    ideal: &ringlab_core::IdealSet,
    naive: &NaiveIdeal,
    subset: Option<&ringlab_core::subset::SubsetS>,
    method: Option<Method>,
    mode: QuantifierMode,
) {
    let opts = CheckOptions { mode, method };
    let lib = match check(ctx, pred, ideal, subset, opts) {
        Ok(r) => r,
        Err(e) => {
            out.disagree(format!("{label}: {pred} failed: {e}"));
            return;
        }
    };
    let s: Vec<usize> = subset.map(|s| s.iter().collect()).unwrap_or_default();
    let (verdict, working) = match lib.method {
        Method::Elementwise => oracle.elementwise(pred, naive, &s, mode),
        Method::Lattice => oracle.lattice(pred, naive, &s, mode),
    };
    out.comparisons += 1;
    let working_matches = mode == QuantifierMode::PerPair || !pred.uses_subset() || working == lib.working_s;
    if verdict != lib.verdict || !working_matches {
        out.disagree(format!(
            "{label}: {pred} {:?} {:?} on {:?} with S {:?}: library {} {:?}, oracle {verdict} {working:?}",
            lib.method,
            mode,
            naive.elems(),
            s,
            lib.verdict,
            lib.working_s
        ));
    }
}
