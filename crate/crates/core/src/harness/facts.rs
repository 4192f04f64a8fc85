use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::corpus::{corpus_subsets, CorpusConfig};
use crate::context::RingContext;
use crate::error::Result;
use crate::expr::RingExpr;
use crate::ideal::{IdealSet, LatticeIndex};
use crate::predicate::{check, default_method, CheckOptions, CheckResult, Method, Predicate};
use crate::ring::{Construction, Ring};
use crate::subset::{SubsetKind, SubsetS};

type CheckKey = (Predicate, Method, usize, usize);

/// A corpus ring with its subsets and memoized predicate results.
pub struct RingFacts {
    label: String,
    ring: Ring,
    ctx: RingContext,
    subsets: Vec<SubsetS>,
    checks: Mutex<HashMap<CheckKey, Arc<CheckResult>>>,
    j_ideals: Mutex<HashMap<usize, bool>>,
}

impl std::fmt::Debug for RingFacts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingFacts").field("ring", &self.label).finish()
    }
}

/// Subsets worth testing on specific rings: `{1,3,9,27}` in `Z36`, its
/// products in `Z36 × Z8` and `Z36 × Z36`, and central scalar sets in
/// matrix rings.
fn named_subsets(ring: &Ring) -> Vec<SubsetS> {
    let mut out = Vec::new();
    let s1 = [1usize, 3, 9, 27];
    match ring.construction() {
        Construction::Zn(36) => out.extend(SubsetS::from_elems(ring, &s1, SubsetKind::MulClosed)),
        Construction::Product(l, r) if l.size() == 36 && matches!(l.construction(), Construction::Zn(_)) => {
            let second: &[usize] = match r.construction() {
                Construction::Zn(8) => &[0, 2, 4],
                Construction::Zn(36) => &s1,
                _ => &[],
            };
            let elems: Vec<usize> = s1
                .iter()
                .flat_map(|&a| second.iter().map(move |&b| a * r.size() + b))
                .collect();
            if !elems.is_empty() {
                out.extend(SubsetS::from_elems(ring, &elems, SubsetKind::MulClosed));
            }
        }
        Construction::Matrix { k, base } => {
            let k = *k;
            let scalar = |c: usize| {
                let digits: Vec<usize> = (0..k * k).map(|i| if i % (k + 1) == 0 { c } else { 0 }).collect();
                digits.iter().fold(0, |acc, &d| acc * base.size() + d)
            };
            for c in base.elements().filter(|&c| c != base.zero()) {
                if let Ok(s) = SubsetS::generate_mulclosed(ring, &[scalar(c)]) {
                    if !s.contains_zero() && !out.contains(&s) {
                        out.push(s);
                    }
                }
            }
        }
        _ => {}
    }
    if let Some(one) = ring.one() {
        let s = SubsetS::from_elems(ring, &[one], SubsetKind::MulClosed).expect("{1} is closed");
        if !out.contains(&s) {
            out.insert(0, s);
        }
    }
    out
}

impl RingFacts {
    pub fn build(expr: &RingExpr, config: &CorpusConfig) -> Result<RingFacts> {
        let ring = expr.elaborate()?;
        let ctx = RingContext::new(&ring);
        ctx.lattice()?;
        ctx.jacobson_index()?;
        let named = named_subsets(&ring);
        let subsets = corpus_subsets(&ring, &named, config.subset_cap, config.seed, false);
        Ok(RingFacts {
            label: expr.to_string(),
            ring,
            ctx,
            subsets,
            checks: Mutex::new(HashMap::new()),
            j_ideals: Mutex::new(HashMap::new()),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn lattice(&self) -> &LatticeIndex {
        self.ctx.lattice().expect("corpus lattices are complete")
    }

    pub fn ideal(&self, i: usize) -> &IdealSet {
        self.lattice().ideal(i)
    }

    pub fn jacobson(&self) -> usize {
        self.ctx.jacobson_index().expect("computed at build time")
    }

    pub fn subsets(&self) -> &[SubsetS] {
        &self.subsets
    }

    pub fn commutative_with_identity(&self) -> bool {
        self.ring.is_commutative() && self.ring.has_identity()
    }

    /// Exactly one maximal ideal.
    pub fn is_local(&self) -> bool {
        self.lattice().maximal_ideals().len() == 1
    }

    /// `(ideal, subset)` index pairs with the ideal disjoint from the subset.
    pub fn instances(&self) -> Vec<(usize, usize)> {
        let l = self.lattice();
        (0..l.len())
            .flat_map(|i| (0..self.subsets.len()).map(move |k| (i, k)))
            .filter(|&(i, k)| self.subsets[k].meets(l.ideal(i)).is_none())
            .collect()
    }

    pub fn instance_count(&self) -> usize {
        self.instances().len()
    }

    /// Memoized fixed-s check against a corpus subset.
    pub fn check(&self, pred: Predicate, method: Option<Method>, ideal: usize, subset: usize) -> Result<Arc<CheckResult>> {
        let method = method.unwrap_or_else(|| default_method(&self.ctx, pred));
        let key = (pred, method, ideal, subset);
        if let Some(r) = self.checks.lock().expect("check cache").get(&key) {
            return Ok(r.clone());
        }
        let r = Arc::new(check(
            &self.ctx,
            pred,
            self.ideal(ideal),
            Some(&self.subsets[subset]),
            CheckOptions::fixed(method),
        )?);
        self.checks.lock().expect("check cache").insert(key, r.clone());
        Ok(r)
    }

    /// Fixed-s check against an arbitrary subset (not memoized).
    pub fn check_with(&self, pred: Predicate, ideal: usize, subset: &SubsetS) -> Result<CheckResult> {
        check(&self.ctx, pred, self.ideal(ideal), Some(subset), CheckOptions::default())
    }

    /// Whether lattice ideal `i` is a 𝒥-ideal; the whole ring is not.
    pub fn is_j_ideal(&self, i: usize) -> Result<bool> {
        if !self.lattice().is_proper(i) {
            return Ok(false);
        }
        if let Some(&b) = self.j_ideals.lock().expect("cache").get(&i) {
            return Ok(b);
        }
        let b = check(&self.ctx, Predicate::J, self.ideal(i), None, CheckOptions::default())?.verdict;
        self.j_ideals.lock().expect("cache").insert(i, b);
        Ok(b)
    }
}
