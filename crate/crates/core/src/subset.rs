//! Multiplicatively closed subsets and m-systems.

use std::fmt;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::ring::{Construction, Hom, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetKind {
    /// `a, b ∈ S ⟹ ab ∈ S`.
    MulClosed,
    /// `a, b ∈ S ⟹ arb ∈ S` for some `r ∈ R`.
    MSystem,
}

impl fmt::Display for SubsetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubsetKind::MulClosed => "multiplicatively closed",
            SubsetKind::MSystem => "m-system",
        })
    }
}

/// Why a candidate set fails to be closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureViolation {
    pub a: usize,
    pub b: usize,
    /// For multiplicatively closed sets, the product `ab` that escapes `S`.
    pub product: Option<usize>,
}

/// A validated subset `S` of a ring.
#[derive(Clone, PartialEq, Eq)]
pub struct SubsetS {
    ring: Ring,
    members: ElemSet,
    kind: SubsetKind,
}

impl fmt::Debug for SubsetS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetS({}, {:?})", self.kind, self.members)
    }
}

/// First pair (in index order) breaking the closure condition for `kind`.
pub fn closure_violation(ring: &Ring, members: &ElemSet, kind: SubsetKind) -> Option<ClosureViolation> {
    for a in members.iter() {
        for b in members.iter() {
            match kind {
                SubsetKind::MulClosed => {
                    let p = ring.mul(a, b);
                    if !members.contains(p) {
                        return Some(ClosureViolation { a, b, product: Some(p) });
                    }
                }
                SubsetKind::MSystem => {
                    let ok = members
                        .iter()
                        .chain(ring.elements())
                        .any(|r| members.contains(ring.mul(ring.mul(a, r), b)));
                    if !ok {
                        return Some(ClosureViolation { a, b, product: None });
                    }
                }
            }
        }
    }
    None
}

impl SubsetS {
    /// Validates `members` as a subset of the given kind.
    pub fn validate(ring: &Ring, members: ElemSet, kind: SubsetKind) -> Result<SubsetS> {
        if members.universe() != ring.size() {
            return Err(Error::InvalidSubset("set ranges over a different ring".into()));
        }
        if members.is_empty() {
            return Err(Error::InvalidSubset("S must be nonempty".into()));
        }
        if let Some(v) = closure_violation(ring, &members, kind) {
            let (a, b) = (ring.format_elem(v.a), ring.format_elem(v.b));
            return Err(Error::InvalidSubset(match v.product {
                Some(p) => format!("{a}*{b} = {} is not in S", ring.format_elem(p)),
                None => format!("no r with {a}*r*{b} in S"),
            }));
        }
        Ok(SubsetS {
            ring: ring.clone(),
            members,
            kind,
        })
    }

    pub fn from_elems(ring: &Ring, elems: &[usize], kind: SubsetKind) -> Result<SubsetS> {
        if let Some(&x) = elems.iter().find(|&&x| x >= ring.size()) {
            return Err(Error::InvalidSubset(format!("element index {x} out of range")));
        }
        SubsetS::validate(ring, ElemSet::from_elems(ring.size(), elems.iter().copied()), kind)
    }

    /// Closure of `gens` under multiplication.
    pub fn generate_mulclosed(ring: &Ring, gens: &[usize]) -> Result<SubsetS> {
        if gens.is_empty() {
            return Err(Error::InvalidSubset("S must be nonempty".into()));
        }
        let mut members = ElemSet::empty(ring.size());
        let mut list: Vec<usize> = Vec::new();
        for &g in gens {
            if g >= ring.size() {
                return Err(Error::InvalidSubset(format!("element index {g} out of range")));
            }
            if members.insert(g) {
                list.push(g);
            }
        }
        let mut k = 0;
        while k < list.len() {
            let a = list[k];
            for i in 0..=k {
                let b = list[i];
                for p in [ring.mul(a, b), ring.mul(b, a)] {
                    if members.insert(p) {
                        list.push(p);
                    }
                }
            }
            k += 1;
        }
        Ok(SubsetS {
            ring: ring.clone(),
            members,
            kind: SubsetKind::MulClosed,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn contains_zero(&self) -> bool {
        self.members.contains(self.ring.zero())
    }

    /// First element of `S` lying in `ideal`, if any.
    pub fn meets(&self, ideal: &IdealSet) -> Option<usize> {
        self.members.intersection(ideal.members()).first()
    }

    /// Re-validates the same members as an m-system.
    pub fn as_m_system(&self) -> Result<SubsetS> {
        SubsetS::validate(&self.ring, self.members.clone(), SubsetKind::MSystem)
    }

    pub fn union_with(&self, elems: &[usize]) -> Result<SubsetS> {
        let mut m = self.members.clone();
        for &e in elems {
            m.insert(e);
        }
        SubsetS::validate(&self.ring, m, self.kind)
    }

    pub fn format(&self) -> String {
        let items: Vec<String> = self.iter().map(|x| self.ring.format_elem(x)).collect();
        format!("{{{}}}", items.join(","))
    }

    /// `S_1 × S_2` inside the product ring `ring = R_1 × R_2`.
    pub fn product(ring: &Ring, s1: &SubsetS, s2: &SubsetS) -> Result<SubsetS> {
        let Construction::Product(l, r) = ring.construction() else {
            return Err(Error::InvalidParameter("product subset needs a product ring".into()));
        };
        if l != &s1.ring || r != &s2.ring {
            return Err(Error::RingMismatch);
        }
        let m = r.size();
        let members = ElemSet::from_elems(ring.size(), s1.iter().flat_map(|a| s2.iter().map(move |b| a * m + b)));
        SubsetS::validate(ring, members, meet_kind(s1.kind, s2.kind))
    }

    /// `S ⊞ M = {(s, m)}` inside an idealization.
    pub fn idealization(ring: &Ring, s: &SubsetS) -> Result<SubsetS> {
        let Construction::Idealization { base, module } = ring.construction() else {
            return Err(Error::InvalidParameter("idealization subset needs an idealization ring".into()));
        };
        if base != &s.ring {
            return Err(Error::RingMismatch);
        }
        let m = module.size();
        let members = ElemSet::from_elems(ring.size(), s.iter().flat_map(|a| (0..m).map(move |x| a * m + x)));
        SubsetS::validate(ring, members, s.kind)
    }

    /// `S^⋈ = {(s, f(s))}` inside an amalgamation.
    pub fn amalgamation(ring: &Ring, s: &SubsetS) -> Result<SubsetS> {
        let Construction::Amalgamation {
            base,
            hom,
            ideal,
            ideal_pos,
        } = ring.construction()
        else {
            return Err(Error::InvalidParameter("amalgamation subset needs an amalgamation ring".into()));
        };
        if base != &s.ring {
            return Err(Error::RingMismatch);
        }
        let zero_pos = ideal_pos[hom.target().zero()] as usize;
        let members = ElemSet::from_elems(ring.size(), s.iter().map(|a| a * ideal.len() + zero_pos));
        SubsetS::validate(ring, members, s.kind)
    }

    /// `f(S)` in the target of a homomorphism.
    pub fn image(hom: &Hom, s: &SubsetS) -> Result<SubsetS> {
        if hom.source() != &s.ring {
            return Err(Error::RingMismatch);
        }
        SubsetS::validate(hom.target(), hom.image(&s.members), s.kind)
    }
}

fn meet_kind(a: SubsetKind, b: SubsetKind) -> SubsetKind {
    if a == SubsetKind::MulClosed && b == SubsetKind::MulClosed {
        SubsetKind::MulClosed
    } else {
        SubsetKind::MSystem
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetStrategy {
    /// `closure({a})` for every `a`, plus `closure({a}) ∪ {1}` when the ring
    /// has an identity.
    SingletonGenerated,
    /// `closure({a}) ∪ {1}` for every `a`, plus `{1}`.
    WithIdentity,
    /// Every multiplicatively closed subset; rings of at most 16 elements.
    BudgetedAll { budget: usize },
}

#[derive(Debug, Clone)]
pub struct SubsetEnumeration {
    pub subsets: Vec<SubsetS>,
    pub truncated: bool,
}

pub const BUDGETED_ALL_LIMIT: usize = 16;

fn sort_dedup(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.sort_by_cached_key(|s| (s.len(), s.to_vec()));
    sets.dedup();
    sets
}

/// Deterministic list of multiplicatively closed subsets, ordered by size
/// and then by members.
pub fn enumerate_subsets(ring: &Ring, strategy: SubsetStrategy) -> Result<SubsetEnumeration> {
    let closure = |a: usize| SubsetS::generate_mulclosed(ring, &[a]).expect("valid generator").members;
    let sets = match strategy {
        SubsetStrategy::SingletonGenerated => {
            let mut sets = Vec::new();
            for a in ring.elements() {
                let c = closure(a);
                if let Some(one) = ring.one() {
                    let mut with = c.clone();
                    with.insert(one);
                    sets.push(with);
                }
                sets.push(c);
            }
            sets
        }
        SubsetStrategy::WithIdentity => {
            let one = ring
                .one()
                .ok_or_else(|| Error::NotApplicable("with-identity subsets need an identity".into()))?;
            let mut sets = vec![ElemSet::from_elems(ring.size(), [one])];
            for a in ring.elements() {
                let mut c = closure(a);
                c.insert(one);
                sets.push(c);
            }
            sets
        }
        SubsetStrategy::BudgetedAll { budget } => {
            let n = ring.size();
            if n > BUDGETED_ALL_LIMIT {
                return Err(Error::CapacityExceeded(format!(
                    "enumerating all subsets needs at most {BUDGETED_ALL_LIMIT} elements, got {n}"
                )));
            }
            let mut sets = Vec::new();
            let mut truncated = false;
            for mask in 1u32..(1u32 << n) {
                let s = ElemSet::from_elems(n, (0..n).filter(|&i| mask & (1 << i) != 0));
                if closure_violation(ring, &s, SubsetKind::MulClosed).is_none() {
                    if sets.len() == budget {
                        truncated = true;
                        break;
                    }
                    sets.push(s);
                }
            }
            let subsets = sort_dedup(sets)
                .into_iter()
                .map(|members| SubsetS {
                    ring: ring.clone(),
                    members,
                    kind: SubsetKind::MulClosed,
                })
                .collect();
            return Ok(SubsetEnumeration { subsets, truncated });
        }
    };
    let subsets = sort_dedup(sets)
        .into_iter()
        .map(|members| SubsetS {
            ring: ring.clone(),
            members,
            kind: SubsetKind::MulClosed,
        })
        .collect();
    Ok(SubsetEnumeration {
        subsets,
        truncated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_subsets_validate() {
        let z36 = Ring::zn(36).unwrap();
        assert!(SubsetS::from_elems(&z36, &[1, 3, 9, 27], SubsetKind::MulClosed).is_ok());
        let z8 = Ring::zn(8).unwrap();
        assert!(SubsetS::from_elems(&z8, &[0, 2, 4], SubsetKind::MulClosed).is_ok());
        let z6 = Ring::zn(6).unwrap();
        let err = SubsetS::from_elems(&z6, &[2, 3], SubsetKind::MulClosed).unwrap_err();
        assert!(err.to_string().contains("is not in S"), "{err}");
        let s = ElemSet::from_elems(6, [2, 3]);
        assert!(!s.contains(z6.mul(2, 3)));
    }

    #[test]
    fn scalar_matrices_form_an_m_system() {
        let m = Ring::matrix(2, &Ring::zn(12).unwrap()).unwrap();
        let scalar = |c: usize| crate::ring::encode_digits(&[c, 0, 0, c], 12);
        let s = SubsetS::from_elems(&m, &[scalar(1), scalar(3), scalar(9)], SubsetKind::MSystem).unwrap();
        assert_eq!(s.len(), 3);
        assert!(SubsetS::from_elems(&m, &[scalar(3), scalar(9)], SubsetKind::MSystem).is_ok());
    }

    #[test]
    fn generated_closures() {
        let z36 = Ring::zn(36).unwrap();
        let s = SubsetS::generate_mulclosed(&z36, &[3]).unwrap();
        assert_eq!(s.members().to_vec(), vec![3, 9, 27]);
        assert_eq!(SubsetS::generate_mulclosed(&z36, &[1]).unwrap().members().to_vec(), vec![1]);
        assert!(SubsetS::generate_mulclosed(&z36, &[0]).unwrap().contains_zero());
    }

    #[test]
    fn singleton_strategy_on_z6() {
        let z6 = Ring::zn(6).unwrap();
        let e = enumerate_subsets(&z6, SubsetStrategy::SingletonGenerated).unwrap();
        let lists: Vec<Vec<usize>> = e.subsets.iter().map(|s| s.members().to_vec()).collect();
        // closures: {0}, {1}, {2,4}, {3}, {4}, {5,1}; plus each with 1 added
        let mut expected = vec![
            vec![0],
            vec![1],
            vec![3],
            vec![4],
            vec![0, 1],
            vec![1, 3],
            vec![1, 4],
            vec![1, 5],
            vec![2, 4],
            vec![1, 2, 4],
        ];
        expected.sort_by_key(|v| (v.len(), v.clone()));
        assert_eq!(lists, expected);
    }

    #[test]
    fn all_mulclosed_subsets_of_z4() {
        let z4 = Ring::zn(4).unwrap();
        let e = enumerate_subsets(&z4, SubsetStrategy::BudgetedAll { budget: 1000 }).unwrap();
        let mut brute = 0;
        for mask in 1u32..16 {
            let s: Vec<usize> = (0..4).filter(|&i| mask & (1 << i) != 0).collect();
            if s.iter().all(|&a| s.iter().all(|&b| s.contains(&(a * b % 4)))) {
                brute += 1;
            }
        }
        assert_eq!(e.subsets.len(), brute);
        assert!(!e.truncated);
    }

    #[test]
    fn with_identity_contains_one() {
        let z6 = Ring::zn(6).unwrap();
        let e = enumerate_subsets(&z6, SubsetStrategy::WithIdentity).unwrap();
        assert!(e.subsets.iter().any(|s| s.members().to_vec() == vec![1]));
    }

    #[test]
    fn images_of_mulclosed_sets_are_mulclosed() {
        let f = Hom::zn_reduction(36, 12).unwrap();
        let s = SubsetS::from_elems(f.source(), &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        let img = SubsetS::image(&f, &s).unwrap();
        assert_eq!(img.members().to_vec(), vec![1, 3, 9]);
    }

    #[test]
    fn product_subset_encoding() {
        let z36 = Ring::zn(36).unwrap();
        let z8 = Ring::zn(8).unwrap();
        let p = Ring::product(&z36, &z8).unwrap();
        let s1 = SubsetS::from_elems(&z36, &[1, 3, 9, 27], SubsetKind::MulClosed).unwrap();
        let x = SubsetS::from_elems(&z8, &[0, 2, 4], SubsetKind::MulClosed).unwrap();
        let sx = SubsetS::product(&p, &s1, &x).unwrap();
        assert_eq!(sx.len(), 12);
        assert!(sx.contains(3 * 8 + 2));
        assert!(!sx.contains_zero());
    }
}
