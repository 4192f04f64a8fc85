//! Jacobson radical, prime radical, `𝒥*(I)` and units.

use std::collections::HashSet;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{IdealSet, LatticeIndex};
use crate::ring::{Ring, TABLE_LIMIT};

/// How a Jacobson radical was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalMethod {
    /// Sum of all nilpotent ideals.
    LargestNilpotent,
    /// Largest ideal inside the left quasi-regular set.
    QuasiRegular,
    /// `{x : 1 + rx is a unit for all r}`.
    Units,
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    #[serde(serialize_with = "serialize_ideal")]
    pub jacobson: IdealSet,
    #[serde(serialize_with = "serialize_ideal")]
    pub prime_radical: IdealSet,
    /// The prime radical is the whole ring because no proper prime exists.
    pub prime_radical_degenerate: bool,
    pub methods_used: Vec<RadicalMethod>,
    pub agreement: bool,
}

fn serialize_ideal<S: serde::Serializer>(ideal: &IdealSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ideal.members().iter())
}

/// Lattice index of `𝒥(R)`, the sum of all nilpotent ideals.
pub fn jacobson_index(lattice: &LatticeIndex) -> Result<usize> {
    lattice.require_complete()?;
    let mut acc = lattice.zero_index();
    for i in 0..lattice.len() {
        if lattice.is_nilpotent(i) {
            acc = lattice.sum(acc, i);
        }
    }
    if !lattice.is_nilpotent(acc) {
        return Err(Error::Inconsistent("sum of nilpotent ideals is not nilpotent".into()));
    }
    Ok(acc)
}

/// `𝒥(R)` as the largest nilpotent ideal; valid with or without identity.
pub fn jacobson_radical(lattice: &LatticeIndex) -> Result<IdealSet> {
    Ok(lattice.ideal(jacobson_index(lattice)?).clone())
}

fn require_small(ring: &Ring, what: &str) -> Result<()> {
    if ring.size() > TABLE_LIMIT {
        return Err(Error::CapacityExceeded(format!(
            "{what} needs a ring of at most {TABLE_LIMIT} elements, got {}",
            ring.size()
        )));
    }
    Ok(())
}

/// Left quasi-regular elements `{x : ∃y, y + x + yx = 0}`.
pub fn quasi_regular_set(ring: &Ring) -> Result<ElemSet> {
    require_small(ring, "the quasi-regular scan")?;
    Ok(ElemSet::from_elems(
        ring.size(),
        ring.elements()
            .filter(|&x| ring.elements().any(|y| ring.add(ring.add(y, x), ring.mul(y, x)) == ring.zero())),
    ))
}

/// `𝒥(R)` as the largest ideal made of quasi-regular elements.
pub fn jacobson_by_quasi_regularity(lattice: &LatticeIndex) -> Result<IdealSet> {
    lattice.require_complete()?;
    let q = quasi_regular_set(lattice.ring())?;
    let inside: Vec<usize> = (0..lattice.len())
        .filter(|&i| lattice.ideal(i).members().is_subset(&q))
        .collect();
    let top = *inside.last().expect("the zero ideal is quasi-regular");
    if inside.iter().any(|&i| !lattice.le(i, top)) {
        return Err(Error::Inconsistent("quasi-regular ideals have no largest member".into()));
    }
    Ok(lattice.ideal(top).clone())
}

/// Unit group `{u : ∃v, uv = vu = 1}`. In a finite ring `u` is a unit iff
/// some power of `u` equals 1, so each element only needs its power cycle.
pub fn units(ring: &Ring) -> Result<ElemSet> {
    let one = ring
        .one()
        .ok_or_else(|| Error::NotApplicable("units need a multiplicative identity".into()))?;
    let mut out = ElemSet::empty(ring.size());
    let mut seen = HashSet::new();
    for u in ring.elements() {
        seen.clear();
        let mut p = u;
        loop {
            if p == one {
                out.insert(u);
                break;
            }
            if !seen.insert(p) {
                break;
            }
            p = ring.mul(p, u);
        }
    }
    Ok(out)
}

/// `𝒥(R) = {x : 1 + rx is a unit for all r}`; identity rings only.
pub fn jacobson_by_units(ring: &Ring) -> Result<ElemSet> {
    require_small(ring, "the unit-based radical scan")?;
    let one = ring
        .one()
        .ok_or_else(|| Error::NotApplicable("the unit criterion needs an identity".into()))?;
    let u = units(ring)?;
    Ok(ElemSet::from_elems(
        ring.size(),
        ring.elements()
            .filter(|&x| ring.elements().all(|r| u.contains(ring.add(one, ring.mul(r, x))))),
    ))
}

/// Lattice index of `β(R)`, the intersection of all prime ideals, and
/// whether it degenerated to `R` because there are no primes.
pub fn prime_radical_index(lattice: &LatticeIndex) -> Result<(usize, bool)> {
    lattice.require_complete()?;
    let primes = lattice.prime_ideals();
    let mut acc = lattice.whole_index();
    for &p in &primes {
        acc = lattice.intersect(acc, p);
    }
    Ok((acc, primes.is_empty()))
}

pub fn prime_radical(lattice: &LatticeIndex) -> Result<IdealSet> {
    Ok(lattice.ideal(prime_radical_index(lattice)?.0).clone())
}

/// `𝒥*(I)`: the intersection of the maximal ideals containing `I` (the
/// whole ring when there are none).
pub fn jacobson_star_index(lattice: &LatticeIndex, ideal: usize) -> Result<usize> {
    lattice.require_complete()?;
    let mut acc = lattice.whole_index();
    for m in lattice.maximal_ideals() {
        if lattice.le(ideal, m) {
            acc = lattice.intersect(acc, m);
        }
    }
    Ok(acc)
}

pub fn jacobson_star(lattice: &LatticeIndex, ideal: &IdealSet) -> Result<IdealSet> {
    let i = lattice
        .index_of(ideal)
        .ok_or_else(|| Error::InvalidIdeal("ideal is not in the lattice".into()))?;
    Ok(lattice.ideal(jacobson_star_index(lattice, i)?).clone())
}

/// Computes `𝒥(R)` by every applicable method and checks they agree.
pub fn jacobson_crosscheck(lattice: &LatticeIndex) -> Result<RadicalReport> {
    let ring = lattice.ring();
    let jacobson = jacobson_radical(lattice)?;
    let mut methods_used = vec![RadicalMethod::LargestNilpotent];
    let mut agreement = true;
    if ring.size() <= TABLE_LIMIT {
        methods_used.push(RadicalMethod::QuasiRegular);
        agreement &= jacobson_by_quasi_regularity(lattice)? == jacobson;
        if ring.has_identity() {
            methods_used.push(RadicalMethod::Units);
            agreement &= &jacobson_by_units(ring)? == jacobson.members();
        }
    }
    let (beta, degenerate) = prime_radical_index(lattice)?;
    Ok(RadicalReport {
        jacobson,
        prime_radical: lattice.ideal(beta).clone(),
        prime_radical_degenerate: degenerate,
        methods_used,
        agreement,
    })
}
