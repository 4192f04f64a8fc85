//! Two-sided ideals as element sets, plus the lattice machinery built on
//! them.

mod generators;
mod lattice;
mod subgroup;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use generators::{is_s_finite, minimal_generating_set, SFiniteWitness};
pub use lattice::{enumerate_ideals, IdealFlags, LatticeIndex, DEFAULT_IDEAL_BUDGET};
pub use subgroup::SubgroupBuilder;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A two-sided ideal of a finite ring.
///
/// Alongside the member set we keep an additive generating set; products,
/// sums and colon ideals only need to look at generators.
#[derive(Clone)]
pub struct IdealSet {
    ring: Ring,
    members: ElemSet,
    gens: Arc<Vec<usize>>,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for IdealSet {}

impl Hash for IdealSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.len() <= 64 {
            write!(f, "Ideal{:?}", self.members)
        } else {
            write!(f, "Ideal(|I|={}, gens={:?})", self.members.len(), self.gens)
        }
    }
}

/// Lookup of already known ideals containing a given element, as
/// `(id, ideal)` with ids stable across calls.
pub(crate) type KnownIdeals<'a> = &'a dyn Fn(usize) -> Option<(usize, &'a IdealSet)>;

/// Smallest ideal containing `seeds`: the additive span of the seeds, closed
/// under left and right multiplication by the ring's additive generators.
/// Seeds flagged `true` are known to lie in an ideal that will end up inside
/// the result, so their products need not be queued.
pub(crate) fn close(ring: &Ring, seeds: impl IntoIterator<Item = (usize, bool)>, known: Option<KnownIdeals<'_>>) -> IdealSet {
    let ring_gens = ring.additive_gens();
    let mut span = SubgroupBuilder::new(ring);
    let mut gens = Vec::new();
    let mut queue: Vec<(usize, bool)> = seeds.into_iter().collect();
    queue.reverse();
    let mut merged: Vec<usize> = Vec::new();
    while let Some((v, closed)) = queue.pop() {
        if span.is_full() {
            break;
        }
        let start = span.len();
        if !span.insert(v) {
            continue;
        }
        gens.push(v);
        if !closed {
            for &g in ring_gens {
                queue.push((ring.mul(g, v), false));
                queue.push((ring.mul(v, g), false));
            }
        }
        if let Some(lookup) = known {
            for k in start..span.len() {
                let x = span.elems()[k];
                if let Some((id, ideal)) = lookup(x) {
                    if ideal.members.is_full() {
                        return IdealSet::whole(ring);
                    }
                    if !merged.contains(&id) {
                        merged.push(id);
                        queue.extend(ideal.gens.iter().map(|&g| (g, true)));
                    }
                }
            }
        }
    }
    if span.is_full() {
        return IdealSet::whole(ring);
    }
    IdealSet {
        ring: ring.clone(),
        members: span.into_set(),
        gens: Arc::new(gens),
    }
}

fn greedy_gens(ring: &Ring, members: &ElemSet) -> (ElemSet, Vec<usize>) {
    let mut span = SubgroupBuilder::new(ring);
    let mut gens = Vec::new();
    for x in members.iter() {
        if span.len() == members.len() {
            break;
        }
        if span.insert(x) {
            gens.push(x);
        }
    }
    (span.into_set(), gens)
}

impl IdealSet {
    /// The ideal generated by `gens` (the zero ideal when `gens` is empty).
    pub fn generate(ring: &Ring, gens: &[usize]) -> IdealSet {
        close(ring, gens.iter().map(|&g| (g, false)), None)
    }

    pub fn zero(ring: &Ring) -> IdealSet {
        IdealSet {
            ring: ring.clone(),
            members: ElemSet::from_elems(ring.size(), [ring.zero()]),
            gens: Arc::new(Vec::new()),
        }
    }

    pub fn whole(ring: &Ring) -> IdealSet {
        IdealSet {
            ring: ring.clone(),
            members: ElemSet::full(ring.size()),
            gens: Arc::new(ring.additive_gens().to_vec()),
        }
    }

    /// Wraps an element set after verifying it is a two-sided ideal.
    pub fn from_members(ring: &Ring, members: ElemSet) -> Result<IdealSet> {
        if members.universe() != ring.size() {
            return Err(Error::InvalidIdeal("set ranges over a different ring".into()));
        }
        if !members.contains(ring.zero()) {
            return Err(Error::InvalidIdeal("does not contain zero".into()));
        }
        let (span, gens) = greedy_gens(ring, &members);
        if let Some(x) = span.first_not_in(&members) {
            return Err(Error::InvalidIdeal(format!("not closed under addition (reaches {x})")));
        }
        for &v in &gens {
            for &g in ring.additive_gens() {
                for p in [ring.mul(g, v), ring.mul(v, g)] {
                    if !members.contains(p) {
                        return Err(Error::InvalidIdeal(format!(
                            "not closed under multiplication: {v} times {g} gives {p}"
                        )));
                    }
                }
            }
        }
        Ok(IdealSet {
            ring: ring.clone(),
            members,
            gens: Arc::new(gens),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    /// Additive generators: every member is a sum of these.
    pub fn additive_gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_ring(&self, other: &IdealSet) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        if other.is_subset(self) {
            return Ok(self.clone());
        }
        if self.is_subset(other) {
            return Ok(other.clone());
        }
        Ok(close(
            &self.ring,
            self.gens.iter().chain(other.gens.iter()).map(|&g| (g, true)),
            None,
        ))
    }

    /// The ideal generated by all products `ab` with `a ∈ self`, `b ∈ other`.
    pub fn product(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        let r = &self.ring;
        let seeds: Vec<(usize, bool)> = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| (r.mul(a, b), false)))
            .collect();
        Ok(close(r, seeds, None))
    }

    pub fn intersect(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        let members = self.members.intersection(&other.members);
        let (_, gens) = greedy_gens(&self.ring, &members);
        Ok(IdealSet {
            ring: self.ring.clone(),
            members,
            gens: Arc::new(gens),
        })
    }

    /// `I^k`.
    pub fn power(&self, k: usize) -> IdealSet {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `{x : x t ∈ self for every t ∈ t_set}`.
    pub fn colon(&self, t_set: &[usize]) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_elems(
            r.size(),
            r.elements().filter(|&x| t_set.iter().all(|&t| self.contains(r.mul(x, t)))),
        )
    }

    /// `{x : t x ∈ self for every t ∈ t_set}`.
    pub fn left_colon(&self, t_set: &[usize]) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_elems(
            r.size(),
            r.elements().filter(|&x| t_set.iter().all(|&t| self.contains(r.mul(t, x)))),
        )
    }

    /// `(self : t_set)` as a verified ideal. Fails when the colon set is not
    /// a two-sided ideal, which can happen for noncommutative rings when
    /// `t_set` is not an ideal.
    pub fn colon_ideal(&self, t_set: &[usize]) -> Result<IdealSet> {
        IdealSet::from_members(&self.ring, self.colon(t_set))
    }

    /// `(self : T) = {x : xT ⊆ self}` for an ideal `T`; always an ideal.
    pub fn colon_by(&self, t: &IdealSet) -> IdealSet {
        let members = self.colon(t.additive_gens());
        let (_, gens) = greedy_gens(&self.ring, &members);
        IdealSet {
            ring: self.ring.clone(),
            members,
            gens: Arc::new(gens),
        }
    }

    /// `(self : ⟨s⟩)`.
    pub fn colon_principal(&self, s: usize) -> IdealSet {
        self.colon_by(&IdealSet::generate(&self.ring, &[s]))
    }

    /// `(self : s) = {x : xs ∈ self}` in a commutative ring.
    pub fn colon_elem(&self, s: usize) -> Result<IdealSet> {
        if !self.ring.is_commutative() {
            return Err(Error::NotApplicable("(I : s) is an ideal only in commutative rings; use colon_principal".into()));
        }
        let members = self.colon(&[s]);
        let (_, gens) = greedy_gens(&self.ring, &members);
        Ok(IdealSet {
            ring: self.ring.clone(),
            members,
            gens: Arc::new(gens),
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }
}
