use serde::Serialize;

use super::IdealSet;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// A small set of elements generating `ideal` as a two-sided ideal.
///
/// Each round adds the candidate whose inclusion yields the largest ideal,
/// examining at most `bound` candidates per round (in index order), and
/// stops early on a candidate that finishes the job. Redundant generators
/// are dropped afterwards.
pub fn minimal_generating_set(ideal: &IdealSet, bound: usize) -> Vec<usize> {
    let ring = ideal.ring();
    let mut gens: Vec<usize> = Vec::new();
    let mut current = IdealSet::zero(ring);
    while current.len() < ideal.len() {
        let mut best: Option<(usize, IdealSet)> = None;
        for x in ideal.members().iter().filter(|&x| !current.contains(x)).take(bound.max(1)) {
            let mut trial = gens.clone();
            trial.push(x);
            let cand = IdealSet::generate(ring, &trial);
            let done = cand.len() == ideal.len();
            if best.as_ref().map_or(true, |(_, b)| cand.len() > b.len()) {
                best = Some((x, cand));
            }
            if done {
                break;
            }
        }
        let (x, cand) = best.expect("a missing element exists");
        gens.push(x);
        current = cand;
    }
    let mut k = 0;
    while k < gens.len() {
        let mut rest = gens.clone();
        rest.remove(k);
        if IdealSet::generate(ring, &rest).len() == ideal.len() {
            gens = rest;
        } else {
            k += 1;
        }
    }
    gens
}

/// Witness that `K` is S-finite: `Ks ⊆ F ⊆ K` with `F` generated by
/// `generators`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SFiniteWitness {
    pub s: usize,
    pub generators: Vec<usize>,
    #[serde(skip)]
    pub f: IdealSet,
}

/// In a finite ring every ideal is finitely generated, so this always
/// succeeds; the interest is in a small witness. Picks the `s ∈ S` that
/// makes the ideal generated by `Ks` smallest (ties to the lowest index)
/// and returns that ideal as `F`.
pub fn is_s_finite(k: &IdealSet, s: &ElemSet, bound: usize) -> Result<SFiniteWitness> {
    let ring = k.ring();
    if s.is_empty() {
        return Err(Error::InvalidSubset("S is empty".into()));
    }
    let mut best: Option<(usize, IdealSet)> = None;
    for t in s.iter() {
        let products: Vec<usize> = k.additive_gens().iter().map(|&x| ring.mul(x, t)).collect();
        let f = IdealSet::generate(ring, &products);
        if best.as_ref().map_or(true, |(_, b)| f.len() < b.len()) {
            best = Some((t, f));
        }
    }
    let (s, f) = best.expect("S is nonempty");
    Ok(SFiniteWitness {
        s,
        generators: minimal_generating_set(&f, bound),
        f,
    })
}
