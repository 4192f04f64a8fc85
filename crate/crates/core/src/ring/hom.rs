use std::fmt;
use std::sync::Arc;

use super::{Construction, Ring};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;

struct HomData {
    source: Ring,
    target: Ring,
    map: Vec<u32>,
    kernel: ElemSet,
    surjective: bool,
}

/// A validated ring homomorphism between finite rings.
#[derive(Clone)]
pub struct Hom(Arc<HomData>);

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hom")
            .field("source", &self.0.source)
            .field("target", &self.0.target)
            .field("kernel_size", &self.0.kernel.len())
            .field("surjective", &self.0.surjective)
            .finish()
    }
}

impl Hom {
    /// Tabulates `map` and checks that it respects addition and
    /// multiplication. Additivity is checked against every element paired
    /// with each additive generator; multiplicativity on pairs of
    /// generators, which suffices once additivity holds.
    pub fn new(source: &Ring, target: &Ring, map: impl Fn(usize) -> usize) -> Result<Hom> {
        let table: Vec<u32> = source
            .elements()
            .map(|x| {
                let y = map(x);
                if y >= target.size() {
                    Err(Error::InvalidHom(format!("image of {x} is out of range")))
                } else {
                    Ok(y as u32)
                }
            })
            .collect::<Result<_>>()?;
        let f = |x: usize| table[x] as usize;
        let gens = source.additive_gens();
        for a in source.elements() {
            for &g in gens {
                if f(source.add(a, g)) != target.add(f(a), f(g)) {
                    return Err(Error::InvalidHom(format!("f({a}+{g}) != f({a})+f({g})")));
                }
            }
        }
        if f(source.zero()) != target.zero() {
            return Err(Error::InvalidHom("zero is not mapped to zero".into()));
        }
        for &g in gens {
            for &h in gens {
                if f(source.mul(g, h)) != target.mul(f(g), f(h)) {
                    return Err(Error::InvalidHom(format!("f({g}*{h}) != f({g})*f({h})")));
                }
            }
        }
        let kernel = ElemSet::from_elems(source.size(), source.elements().filter(|&x| f(x) == target.zero()));
        let image = ElemSet::from_elems(target.size(), source.elements().map(f));
        Ok(Hom(Arc::new(HomData {
            source: source.clone(),
            target: target.clone(),
            surjective: image.is_full(),
            map: table,
            kernel,
        })))
    }

    pub fn identity(ring: &Ring) -> Hom {
        Hom::new(ring, ring, |x| x).expect("identity is a homomorphism")
    }

    /// Reduction `Z_n → Z_m`, `x ↦ x mod m`, for `m | n`.
    pub fn zn_reduction(n: usize, m: usize) -> Result<Hom> {
        if m < 2 || n % m != 0 {
            return Err(Error::InvalidParameter(format!("{m} does not divide {n}")));
        }
        Hom::new(&Ring::zn(n)?, &Ring::zn(m)?, |x| x % m)
    }

    /// Reduction between two existing `Z_n` rings.
    pub fn zn_reduction_between(source: &Ring, target: &Ring) -> Result<Hom> {
        match (source.construction(), target.construction()) {
            (Construction::Zn(n), Construction::Zn(m)) if n % m == 0 => Hom::new(source, target, |x| x % m),
            _ => Err(Error::InvalidParameter("reduction needs Z_n -> Z_m with m | n".into())),
        }
    }

    /// Canonical surjection `R → R/I`.
    pub fn canonical_surjection(ideal: &IdealSet) -> Result<(Ring, Hom)> {
        Ring::quotient(ideal)
    }

    pub fn source(&self) -> &Ring {
        &self.0.source
    }

    pub fn target(&self) -> &Ring {
        &self.0.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.map[x] as usize
    }

    pub fn kernel(&self) -> &ElemSet {
        &self.0.kernel
    }

    pub fn kernel_ideal(&self) -> IdealSet {
        IdealSet::from_members(&self.0.source, self.0.kernel.clone()).expect("kernels are ideals")
    }

    pub fn is_surjective(&self) -> bool {
        self.0.surjective
    }

    pub fn image(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_elems(self.0.target.size(), set.iter().map(|x| self.apply(x)))
    }

    pub fn preimage(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_elems(
            self.0.source.size(),
            self.0.source.elements().filter(|&x| set.contains(self.apply(x))),
        )
    }
}
