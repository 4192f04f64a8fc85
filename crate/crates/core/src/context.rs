//! Per-ring cache of the lattice, radicals and the tables predicates share.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, IdealSet, LatticeIndex, DEFAULT_IDEAL_BUDGET};
use crate::radical;
use crate::ring::Ring;

/// Largest ring for which element-pair tables are built.
pub const ELEMENTWISE_LIMIT: usize = 8192;

/// Which pairs a row table records for an ideal `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowKind {
    /// `rows[a] = {b : ab ∈ I}`.
    Product,
    /// `rows[a] = {b : aRb ⊆ I}`.
    Sandwich,
    /// Over lattice indices: `rows[A] = {B : AB ⊆ I}`.
    IdealPairs,
}

/// A ring together with lazily computed facts about it. Safe to share
/// between threads.
pub struct RingContext {
    ring: Ring,
    budget: usize,
    lattice: OnceLock<LatticeIndex>,
    jacobson: OnceLock<Result<usize>>,
    prime_radical: OnceLock<Result<(usize, bool)>>,
    units: OnceLock<Result<ElemSet>>,
    center: OnceLock<ElemSet>,
    rows: Mutex<HashMap<(RowKind, usize), Arc<Vec<ElemSet>>>>,
    colons: Mutex<HashMap<(usize, usize), usize>>,
    elem_colons: Mutex<HashMap<(usize, usize), usize>>,
}

impl std::fmt::Debug for RingContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingContext").field("ring", &self.ring).finish()
    }
}

impl RingContext {
    pub fn new(ring: &Ring) -> RingContext {
        RingContext::with_budget(ring, DEFAULT_IDEAL_BUDGET)
    }

    pub fn with_budget(ring: &Ring, budget: usize) -> RingContext {
        RingContext {
            ring: ring.clone(),
            budget,
            lattice: OnceLock::new(),
            jacobson: OnceLock::new(),
            prime_radical: OnceLock::new(),
            units: OnceLock::new(),
            center: OnceLock::new(),
            rows: Mutex::new(HashMap::new()),
            colons: Mutex::new(HashMap::new()),
            elem_colons: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The ideal lattice, possibly partial.
    pub fn lattice_any(&self) -> &LatticeIndex {
        self.lattice.get_or_init(|| enumerate_ideals(&self.ring, self.budget))
    }

    /// The complete ideal lattice.
    pub fn lattice(&self) -> Result<&LatticeIndex> {
        let l = self.lattice_any();
        l.require_complete()?;
        Ok(l)
    }

    pub fn jacobson_index(&self) -> Result<usize> {
        self.jacobson
            .get_or_init(|| radical::jacobson_index(self.lattice()?))
            .clone()
    }

    pub fn jacobson(&self) -> Result<&IdealSet> {
        let j = self.jacobson_index()?;
        Ok(self.lattice()?.ideal(j))
    }

    /// `β(R)` and whether it degenerated to `R`.
    pub fn prime_radical_index(&self) -> Result<(usize, bool)> {
        self.prime_radical
            .get_or_init(|| radical::prime_radical_index(self.lattice()?))
            .clone()
    }

    pub fn prime_radical(&self) -> Result<&IdealSet> {
        let (b, _) = self.prime_radical_index()?;
        Ok(self.lattice()?.ideal(b))
    }

    pub fn units(&self) -> Result<&ElemSet> {
        self.units
            .get_or_init(|| radical::units(&self.ring))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn center(&self) -> &ElemSet {
        self.center.get_or_init(|| self.ring.center())
    }

    /// Lattice index of an ideal of this ring.
    pub fn index_of(&self, ideal: &IdealSet) -> Result<usize> {
        if ideal.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        self.lattice()?
            .index_of(ideal)
            .ok_or_else(|| Error::Inconsistent("ideal missing from a complete lattice".into()))
    }

    /// Lattice index of `⟨s⟩`.
    pub fn principal(&self, s: usize) -> Result<usize> {
        self.lattice()?
            .principal(s)
            .ok_or_else(|| Error::Inconsistent(format!("principal ideal of {s} missing")))
    }

    /// Lattice index of `(ideals[p] : ⟨s⟩) = {x : x⟨s⟩ ⊆ P}`.
    pub fn colon_principal(&self, p: usize, s: usize) -> Result<usize> {
        if let Some(&c) = self.colons.lock().expect("colon cache").get(&(p, s)) {
            return Ok(c);
        }
        let l = self.lattice()?;
        let t = l.ideal(self.principal(s)?);
        let c = l.ideal(p).colon_by(t);
        let idx = l
            .index_of(&c)
            .ok_or_else(|| Error::Inconsistent("colon ideal missing from the lattice".into()))?;
        self.colons.lock().expect("colon cache").insert((p, s), idx);
        Ok(idx)
    }

    /// Lattice index of `(ideals[p] : s) = {x : xs ∈ P}`; commutative rings.
    pub fn colon_elem(&self, p: usize, s: usize) -> Result<usize> {
        if let Some(&c) = self.elem_colons.lock().expect("colon cache").get(&(p, s)) {
            return Ok(c);
        }
        let l = self.lattice()?;
        let c = l.ideal(p).colon_elem(s)?;
        let idx = l
            .index_of(&c)
            .ok_or_else(|| Error::Inconsistent("colon ideal missing from the lattice".into()))?;
        self.elem_colons.lock().expect("colon cache").insert((p, s), idx);
        Ok(idx)
    }

    /// Row table of `kind` for the lattice ideal `p`.
    pub fn rows(&self, kind: RowKind, p: usize) -> Result<Arc<Vec<ElemSet>>> {
        if let Some(r) = self.rows.lock().expect("row cache").get(&(kind, p)) {
            return Ok(r.clone());
        }
        let l = self.lattice()?;
        let ideal = l.ideal(p);
        let r = &self.ring;
        let n = r.size();
        let rows: Vec<ElemSet> = match kind {
            RowKind::Product | RowKind::Sandwich => {
                if n > ELEMENTWISE_LIMIT {
                    return Err(Error::CapacityExceeded(format!(
                        "element-pair tables need at most {ELEMENTWISE_LIMIT} elements, got {n}"
                    )));
                }
                let gens = r.additive_gens();
                use rayon::prelude::*;
                (0..n)
                    .into_par_iter()
                    .map(|a| match kind {
                        RowKind::Product => ElemSet::from_elems(n, r.elements().filter(|&b| ideal.contains(r.mul(a, b)))),
                        _ => {
                            let left: Vec<usize> = gens.iter().map(|&g| r.mul(a, g)).collect();
                            ElemSet::from_elems(
                                n,
                                r.elements().filter(|&b| left.iter().all(|&ag| ideal.contains(r.mul(ag, b)))),
                            )
                        }
                    })
                    .collect()
            }
            RowKind::IdealPairs => {
                let m = l.len();
                (0..m)
                    .map(|a| ElemSet::from_elems(m, (0..m).filter(|&b| l.le(l.product(a, b), p))))
                    .collect()
            }
        };
        let rows = Arc::new(rows);
        self.rows.lock().expect("row cache").insert((kind, p), rows.clone());
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caches_and_colons() {
        let r = Ring::zn(36).unwrap();
        let ctx = RingContext::new(&r);
        let j = ctx.jacobson().unwrap();
        assert_eq!(j.to_vec(), vec![0, 6, 12, 18, 24, 30]);
        let jidx = ctx.jacobson_index().unwrap();
        let c = ctx.colon_principal(jidx, 3).unwrap();
        assert_eq!(ctx.lattice().unwrap().ideal(c), &IdealSet::generate(&r, &[2]));
        assert_eq!(ctx.colon_elem(jidx, 3).unwrap(), c);
        let four = ctx.index_of(&IdealSet::generate(&r, &[4])).unwrap();
        let rows = ctx.rows(RowKind::Product, four).unwrap();
        assert!(rows[2].contains(2));
        assert!(!rows[2].contains(1));
        assert_eq!(ctx.units().unwrap().len(), 12);
    }

    #[test]
    fn sandwich_rows_in_matrix_ring() {
        let m = Ring::matrix(2, &Ring::zn(2).unwrap()).unwrap();
        let ctx = RingContext::new(&m);
        let rows = ctx.rows(RowKind::Sandwich, 0).unwrap();
        // M_2(F_2) is simple: aRb = 0 forces a = 0 or b = 0
        for a in 1..16 {
            assert_eq!(rows[a].to_vec(), vec![0]);
        }
        assert!(rows[0].is_full());
    }
}
