use crate::elemset::ElemSet;
use crate::ring::Ring;

/// Incrementally grows an additive subgroup of a ring.
///
/// Inserting `v` extends the current subgroup `H` to `H + ⟨v⟩` by walking
/// the cosets `H + v, H + 2v, ...` until a multiple of `v` falls back into
/// `H`, so every insertion costs time proportional to the elements it adds.
pub struct SubgroupBuilder {
    ring: Ring,
    set: ElemSet,
    elems: Vec<usize>,
}

impl SubgroupBuilder {
    pub fn new(ring: &Ring) -> Self {
        let mut set = ElemSet::empty(ring.size());
        set.insert(ring.zero());
        SubgroupBuilder {
            ring: ring.clone(),
            set,
            elems: vec![ring.zero()],
        }
    }

    /// Adds `v` and everything needed to stay a subgroup. Returns false if
    /// `v` was already present.
    pub fn insert(&mut self, v: usize) -> bool {
        if self.set.contains(v) {
            return false;
        }
        let old = self.elems.len();
        let mut coset = v;
        while !self.set.contains(coset) {
            for k in 0..old {
                let e = self.ring.add(self.elems[k], coset);
                self.set.insert(e);
                self.elems.push(e);
            }
            coset = self.ring.add(coset, v);
        }
        true
    }

    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full(&self) -> bool {
        self.elems.len() == self.ring.size()
    }

    /// Elements in insertion order; `elems()[start..]` are the ones added
    /// since the length was `start`.
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn into_set(self) -> ElemSet {
        self.set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_subgroups_of_z12() {
        let r = Ring::zn(12).unwrap();
        let mut b = SubgroupBuilder::new(&r);
        assert!(b.insert(8));
        assert_eq!(b.set().to_vec(), vec![0, 4, 8]);
        assert!(b.insert(6));
        assert_eq!(b.set().to_vec(), vec![0, 2, 4, 6, 8, 10]);
        assert!(!b.insert(10));
    }

    #[test]
    fn product_group_span() {
        let r = Ring::product(&Ring::zn(2).unwrap(), &Ring::zn(4).unwrap()).unwrap();
        let mut b = SubgroupBuilder::new(&r);
        b.insert(1); // (0,1)
        assert_eq!(b.len(), 4);
        b.insert(4); // (1,0)
        assert!(b.is_full());
    }
}
