use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::{close, IdealSet};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub const DEFAULT_IDEAL_BUDGET: usize = 100_000;

const NONE: u32 = u32::MAX;

/// All two-sided ideals of a ring, sorted by size and then by members, so
/// index 0 is `{0}` and the last index is the ring itself.
pub struct LatticeIndex {
    ring: Ring,
    ideals: Vec<IdealSet>,
    index: HashMap<ElemSet, usize>,
    principal: Vec<u32>,
    complete: bool,
    /// `supersets[i]` holds every `j` with `ideals[i] ⊆ ideals[j]`.
    supersets: Vec<ElemSet>,
    products: OnceLock<Vec<u32>>,
    sums: OnceLock<Vec<u32>>,
    primes: OnceLock<Vec<bool>>,
}

impl std::fmt::Debug for LatticeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LatticeIndex")
            .field("ideals", &self.ideals.len())
            .field("complete", &self.complete)
            .finish()
    }
}

/// Lattice-level facts about a single ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
    pub nilpotent: bool,
    pub superfluous: bool,
    pub modular: bool,
    /// Set when the lattice is partial, in which case maximal, prime and
    /// superfluous may be wrong.
    pub indeterminate: bool,
}

/// Enumerates every two-sided ideal: the principal ideals `⟨a⟩` for all
/// `a`, closed under pairwise sums. Stops with a partial lattice once more
/// than `budget` ideals are found.
pub fn enumerate_ideals(ring: &Ring, budget: usize) -> LatticeIndex {
    let n = ring.size();
    let mut found: Vec<IdealSet> = Vec::new();
    let mut index: HashMap<ElemSet, usize> = HashMap::new();
    let mut principal = vec![NONE; n];
    let mut complete = true;

    let mut record = |ideal: IdealSet, found: &mut Vec<IdealSet>| -> usize {
        *index.entry(ideal.members().clone()).or_insert_with(|| {
            found.push(ideal);
            found.len() - 1
        })
    };

    for a in ring.elements() {
        if principal[a] != NONE {
            continue;
        }
        let ideal = {
            let lookup = |x: usize| match principal[x] {
                NONE => None,
                id => Some((id as usize, &found[id as usize])),
            };
            close(ring, [(a, false)], Some(&lookup))
        };
        let id = record(ideal, &mut found) as u32;
        principal[a] = id;
        principal[ring.neg(a)] = id;
        if found.len() > budget {
            complete = false;
            break;
        }
    }

    if complete {
        let mut i = 0;
        'join: while i < found.len() {
            for j in 0..i {
                let (a, b) = (&found[i], &found[j]);
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let s = a.sum(b).expect("same ring");
                record(s, &mut found);
                if found.len() > budget {
                    complete = false;
                    break 'join;
                }
            }
            i += 1;
        }
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    let keys: Vec<(usize, Vec<usize>)> = found.iter().map(|i| (i.len(), i.to_vec())).collect();
    order.sort_by(|&x, &y| keys[x].cmp(&keys[y]));
    let mut rank = vec![0u32; found.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new as u32;
    }
    let mut slots: Vec<Option<IdealSet>> = found.into_iter().map(Some).collect();
    let ideals: Vec<IdealSet> = order.iter().map(|&old| slots[old].take().expect("each slot used once")).collect();
    let principal = principal
        .into_iter()
        .map(|p| if p == NONE { NONE } else { rank[p as usize] })
        .collect();
    let index = ideals.iter().enumerate().map(|(i, id)| (id.members().clone(), i)).collect();
    let count = ideals.len();
    let supersets = ideals
        .iter()
        .map(|a| ElemSet::from_elems(count, (0..count).filter(|&j| a.is_subset(&ideals[j]))))
        .collect();
    LatticeIndex {
        ring: ring.clone(),
        ideals,
        index,
        principal,
        complete,
        supersets,
        products: OnceLock::new(),
        sums: OnceLock::new(),
        primes: OnceLock::new(),
    }
}

impl LatticeIndex {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[IdealSet] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &IdealSet {
        &self.ideals[i]
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::CapacityExceeded(format!(
                "ideal lattice is partial ({} ideals found before the budget ran out)",
                self.ideals.len()
            )))
        }
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn find(&self, members: &ElemSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn index_of(&self, ideal: &IdealSet) -> Option<usize> {
        self.find(ideal.members())
    }

    /// Index of `⟨a⟩`.
    pub fn principal(&self, a: usize) -> Option<usize> {
        match self.principal[a] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    /// Whether `ideals[i] ⊆ ideals[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.supersets[i].contains(j)
    }

    pub fn supersets(&self, i: usize) -> &ElemSet {
        &self.supersets[i]
    }

    fn pair_table<'a>(&'a self, cell: &'a OnceLock<Vec<u32>>, op: impl Fn(&IdealSet, &IdealSet) -> IdealSet + Sync) -> &'a [u32] {
        cell.get_or_init(|| {
            let n = self.ideals.len();
            (0..n * n)
                .into_par_iter()
                .map(|k| {
                    let r = op(&self.ideals[k / n], &self.ideals[k % n]);
                    self.find(r.members()).map_or(NONE, |i| i as u32)
                })
                .collect()
        })
    }

    /// Index of the product `ideals[i] · ideals[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        let table = self.pair_table(&self.products, |a, b| a.product(b).expect("same ring"));
        let p = table[i * self.ideals.len() + j];
        assert!(p != NONE, "product missing from a partial lattice");
        p as usize
    }

    /// Index of the sum `ideals[i] + ideals[j]`.
    pub fn sum(&self, i: usize, j: usize) -> usize {
        let table = self.pair_table(&self.sums, |a, b| a.sum(b).expect("same ring"));
        let p = table[i * self.ideals.len() + j];
        assert!(p != NONE, "sum missing from a partial lattice");
        p as usize
    }

    /// Index of `ideals[i] ∩ ideals[j]`.
    pub fn intersect(&self, i: usize, j: usize) -> usize {
        let m = self.ideals[i].members().intersection(self.ideals[j].members());
        self.find(&m).expect("intersection of ideals is in a complete lattice")
    }

    pub fn is_proper(&self, i: usize) -> bool {
        i != self.whole_index()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.is_proper(i) && self.supersets[i].len() == 2
    }

    /// Proper ideals not strictly contained in another proper ideal.
    pub fn maximal_ideals(&self) -> Vec<usize> {
        (0..self.ideals.len()).filter(|&i| self.is_maximal(i)).collect()
    }

    /// Prime in the ideal-pair sense: proper, and `AB ⊆ P` forces `A ⊆ P` or
    /// `B ⊆ P` over all lattice pairs.
    pub fn is_prime(&self, i: usize) -> bool {
        self.primes.get_or_init(|| {
            let n = self.ideals.len();
            (0..n)
                .map(|p| {
                    self.is_proper(p)
                        && (0..n).all(|a| {
                            self.le(a, p) || (0..n).all(|b| self.le(b, p) || !self.le(self.product(a, b), p))
                        })
                })
                .collect()
        })[i]
    }

    pub fn prime_ideals(&self) -> Vec<usize> {
        (0..self.ideals.len()).filter(|&i| self.is_prime(i)).collect()
    }

    /// `I^k = {0}` for some `k ≤ |R|`.
    pub fn is_nilpotent(&self, i: usize) -> bool {
        let mut power = i;
        for _ in 0..self.ring.size() {
            if power == 0 {
                return true;
            }
            let next = self.product(power, i);
            if next == power {
                return false;
            }
            power = next;
        }
        power == 0
    }

    /// No proper ideal `B` has `I + B = R`.
    pub fn is_superfluous(&self, i: usize) -> bool {
        let whole = self.whole_index();
        (0..whole).all(|b| self.sum(i, b) != whole)
    }

    /// Some `e` has `er − r ∈ I` and `re − r ∈ I` for every `r`. Both maps
    /// are additive in `r`, so checking additive generators is enough.
    pub fn is_modular(&self, i: usize) -> bool {
        let ideal = &self.ideals[i];
        let r = &self.ring;
        if r.has_identity() {
            return true;
        }
        let gens = r.additive_gens();
        r.elements().any(|e| {
            gens.iter()
                .all(|&g| ideal.contains(r.sub(r.mul(e, g), g)) && ideal.contains(r.sub(r.mul(g, e), g)))
        })
    }

    pub fn flags(&self, i: usize) -> IdealFlags {
        IdealFlags {
            proper: self.is_proper(i),
            maximal: self.is_maximal(i),
            prime: self.is_prime(i),
            nilpotent: self.is_nilpotent(i),
            superfluous: self.is_superfluous(i),
            modular: self.is_modular(i),
            indeterminate: !self.complete,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(r: &Ring) -> LatticeIndex {
        enumerate_ideals(r, DEFAULT_IDEAL_BUDGET)
    }

    #[test]
    fn z36_has_one_ideal_per_divisor() {
        let r = Ring::zn(36).unwrap();
        let l = lattice(&r);
        assert!(l.is_complete());
        assert_eq!(l.len(), 9);
        assert!(l.ideal(0).is_zero());
        assert!(!l.ideal(l.whole_index()).is_proper());
        let sizes: Vec<usize> = l.ideals().iter().map(|i| i.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn small_lattices() {
        let z2 = Ring::zn(2).unwrap();
        assert_eq!(lattice(&Ring::product(&z2, &z2).unwrap()).len(), 4);
        let m = Ring::matrix(2, &z2).unwrap();
        assert_eq!(lattice(&m).len(), 2);
    }

    #[test]
    fn matrix_ring_lattice_follows_base_ideals() {
        let z12 = Ring::zn(12).unwrap();
        let m = Ring::matrix(2, &z12).unwrap();
        let l = lattice(&m);
        assert_eq!(l.len(), 6);
        let mut sizes: Vec<usize> = l.ideals().iter().map(|i| i.len()).collect();
        sizes.sort();
        // |M_2(dZ12)| = (12/d)^4 for d | 12
        assert_eq!(sizes, vec![1, 16, 81, 256, 1296, 20736]);
    }

    #[test]
    fn z36_flags() {
        let r = Ring::zn(36).unwrap();
        let l = lattice(&r);
        let six = l.index_of(&IdealSet::generate(&r, &[6])).unwrap();
        let two = l.index_of(&IdealSet::generate(&r, &[2])).unwrap();
        let f6 = l.flags(six);
        assert!(!f6.prime && f6.nilpotent && f6.proper && f6.superfluous);
        let f2 = l.flags(two);
        assert!(f2.maximal && f2.prime && !f2.nilpotent && !f2.superfluous);
        assert_eq!(l.maximal_ideals().len(), 2);
    }

    #[test]
    fn field_zero_ideal_is_maximal_and_prime() {
        let l = lattice(&Ring::zn(7).unwrap());
        assert_eq!(l.len(), 2);
        assert!(l.is_maximal(0) && l.is_prime(0));
    }

    #[test]
    fn lattice_is_closed_under_operations() {
        let r = Ring::product(&Ring::zn(4).unwrap(), &Ring::zn(6).unwrap()).unwrap();
        let l = lattice(&r);
        for i in 0..l.len() {
            for j in 0..l.len() {
                let (a, b) = (l.ideal(i), l.ideal(j));
                assert_eq!(l.ideal(l.sum(i, j)), &a.sum(b).unwrap());
                assert_eq!(l.ideal(l.product(i, j)), &a.product(b).unwrap());
                assert_eq!(l.ideal(l.intersect(i, j)), &a.intersect(b).unwrap());
            }
        }
    }

    #[test]
    fn budget_gives_partial_lattice() {
        let r = Ring::zn(36).unwrap();
        let l = enumerate_ideals(&r, 3);
        assert!(!l.is_complete());
        assert!(matches!(l.require_complete(), Err(Error::CapacityExceeded(_))));
    }

    #[test]
    fn modular_without_identity() {
        let r = Ring::zn(36).unwrap();
        let six = Ring::ideal_as_ring(&IdealSet::generate(&r, &[6])).unwrap();
        let l = lattice(&six);
        assert!(!l.is_modular(0));
        assert!(l.is_modular(l.whole_index()));
    }
}
