//! Finite associative rings presented by their element indices.
//!
//! Every ring exposes its elements as indices `0..size` with total `add`,
//! `mul` and `neg` functions. Rings are built from a small set of
//! constructions (integers mod n, products, matrix rings, quotients,
//! idealizations, amalgamations, truncated polynomials and ideals viewed as
//! rings). Rings with at most [`TABLE_LIMIT`] elements materialize full
//! Cayley tables on construction; larger rings evaluate on demand through
//! their construction.

mod axioms;
mod hom;
mod literal;
mod module;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use axioms::{ring_axioms_check, AxiomEffort, AxiomReport, AxiomViolation, DEFAULT_AXIOM_SEED};
pub use hom::Hom;
pub use literal::ElemLit;
pub use module::Module;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::SubgroupBuilder;

/// Rings up to this size get materialized Cayley tables.
pub const TABLE_LIMIT: usize = 4096;

/// Largest ring the library will construct.
pub const MAX_RING_SIZE: usize = 1 << 24;

/// How a ring was built. Downstream code inspects this to relate a ring to
/// its factors, base ring, module or homomorphism.
#[derive(Clone)]
pub enum Construction {
    /// Explicit Cayley tables (row-major, `size * size`).
    Table,
    /// Integers modulo `n`.
    Zn(usize),
    /// Cartesian product; element `(a, b)` has index `a * |right| + b`.
    Product(Ring, Ring),
    /// `k x k` matrices over `base`, entries encoded in row-major order with
    /// the first entry most significant.
    Matrix { k: usize, base: Ring },
    /// `base / ideal`; cosets are indexed by their sorted minimal
    /// representatives.
    Quotient {
        base: Ring,
        ideal: ElemSet,
        reps: Vec<usize>,
        coset_of: Vec<u32>,
    },
    /// `base ⊞ module`; element `(a, m)` has index `a * |M| + m`.
    Idealization { base: Ring, module: Module },
    /// `base ⋈^f ideal` inside `base × hom.target()`; element `(r, f(r) + j)`
    /// has index `r * |J| + position(j)`.
    Amalgamation {
        base: Ring,
        hom: Hom,
        ideal: Vec<usize>,
        ideal_pos: Vec<u32>,
    },
    /// `base[x] / (x^degree)`; coefficient `c_0` is the most significant digit.
    TruncatedPoly { base: Ring, degree: usize },
    /// An ideal of `base` regarded as a ring in its own right.
    IdealAsRing {
        base: Ring,
        members: Vec<usize>,
        pos: Vec<u32>,
    },
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Table => "table",
            Construction::Zn(_) => "zn",
            Construction::Product(..) => "product",
            Construction::Matrix { .. } => "matrix",
            Construction::Quotient { .. } => "quotient",
            Construction::Idealization { .. } => "idealization",
            Construction::Amalgamation { .. } => "amalgamation",
            Construction::TruncatedPoly { .. } => "truncated-poly",
            Construction::IdealAsRing { .. } => "ideal-as-ring",
        }
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

struct RingData {
    size: usize,
    zero: usize,
    one: Option<usize>,
    commutative: bool,
    construction: Construction,
    tables: Option<Tables>,
    additive_gens: OnceLock<Vec<usize>>,
}

/// A finite associative ring. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("kind", &self.0.construction.kind())
            .field("size", &self.0.size)
            .field("one", &self.0.one)
            .field("commutative", &self.0.commutative)
            .finish()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Ring {}

const MAX_DIGITS: usize = 32;

fn checked_pow(base: usize, exp: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base)
            .filter(|&v| v <= MAX_RING_SIZE)
            .ok_or_else(|| {
                Error::CapacityExceeded(format!("{base}^{exp} exceeds {MAX_RING_SIZE} elements"))
            })?;
    }
    Ok(acc)
}

fn check_capacity(size: usize) -> Result<()> {
    if size > MAX_RING_SIZE {
        return Err(Error::CapacityExceeded(format!(
            "ring of {size} elements exceeds {MAX_RING_SIZE}"
        )));
    }
    Ok(())
}

impl Ring {
    fn build(
        size: usize,
        zero: usize,
        one: Option<usize>,
        commutative: Option<bool>,
        construction: Construction,
    ) -> Ring {
        let mut data = RingData {
            size,
            zero,
            one,
            commutative: false,
            construction,
            tables: None,
            additive_gens: OnceLock::new(),
        };
        let wants_tables = size <= TABLE_LIMIT && !matches!(data.construction, Construction::Zn(_));
        if wants_tables {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    add.push(data.add_raw(a, b) as u32);
                    mul.push(data.mul_raw(a, b) as u32);
                }
            }
            let neg = (0..size).map(|a| data.neg_raw(a) as u32).collect();
            data.tables = Some(Tables { add, mul, neg });
        }
        data.commutative = match commutative {
            Some(c) => c,
            None => {
                let ring = Ring(Arc::new(data));
                let comm = ring.scan_commutative();
                let mut data = Arc::try_unwrap(ring.0).ok().expect("fresh ring is uniquely owned");
                data.commutative = comm;
                return Ring(Arc::new(data));
            }
        };
        Ring(Arc::new(data))
    }

    fn scan_commutative(&self) -> bool {
        let gens = self.additive_gens();
        gens.iter()
            .all(|&g| gens.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Integers modulo `n`.
    pub fn zn(n: usize) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("Z_n needs n >= 2, got {n}")));
        }
        check_capacity(n)?;
        Ok(Ring::build(n, 0, Some(1), Some(true), Construction::Zn(n)))
    }

    /// Ring given by explicit tables. The tables are validated exhaustively
    /// (associativity, distributivity, abelian group) for rings of at most
    /// 256 elements and by sampling above that.
    pub fn from_tables(size: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Ring> {
        let ring = Ring::from_tables_unchecked(size, add, mul)?;
        let report = ring_axioms_check(&ring, AxiomEffort::Auto);
        if let Some(v) = report.violation {
            return Err(Error::InvalidParameter(format!("tables violate ring axioms: {v}")));
        }
        Ok(ring)
    }

    /// Like [`Ring::from_tables`] without the axiom check; used to exercise
    /// the checker on deliberately broken tables.
    pub fn from_tables_unchecked(size: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Ring> {
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return Err(Error::InvalidParameter("table dimensions do not match size".into()));
        }
        if size > TABLE_LIMIT {
            return Err(Error::CapacityExceeded(format!(
                "explicit tables are limited to {TABLE_LIMIT} elements"
            )));
        }
        if add.iter().chain(mul.iter()).any(|&v| v >= size) {
            return Err(Error::InvalidParameter("table entry out of range".into()));
        }
        let zero = (0..size)
            .find(|&z| (0..size).all(|a| add[z * size + a] == a && add[a * size + z] == a))
            .ok_or_else(|| Error::InvalidParameter("no additive identity".into()))?;
        let mut neg = Vec::with_capacity(size);
        for a in 0..size {
            let n = (0..size)
                .find(|&b| add[a * size + b] == zero)
                .ok_or_else(|| Error::InvalidParameter(format!("element {a} has no negative")))?;
            neg.push(n as u32);
        }
        let one = (0..size).find(|&e| (0..size).all(|a| mul[e * size + a] == a && mul[a * size + e] == a));
        let commutative = (0..size).all(|a| (0..size).all(|b| mul[a * size + b] == mul[b * size + a]));
        let tables = Tables {
            add: add.into_iter().map(|v| v as u32).collect(),
            mul: mul.into_iter().map(|v| v as u32).collect(),
            neg,
        };
        Ok(Ring(Arc::new(RingData {
            size,
            zero,
            one: if size == 1 { Some(zero) } else { one },
            commutative,
            construction: Construction::Table,
            tables: Some(tables),
            additive_gens: OnceLock::new(),
        })))
    }

    /// Componentwise product `left × right`.
    pub fn product(left: &Ring, right: &Ring) -> Result<Ring> {
        let size = left
            .size()
            .checked_mul(right.size())
            .filter(|&s| s <= MAX_RING_SIZE)
            .ok_or_else(|| Error::CapacityExceeded("product too large".into()))?;
        let pair = |a: usize, b: usize| a * right.size() + b;
        let one = match (left.one(), right.one()) {
            (Some(a), Some(b)) => Some(pair(a, b)),
            _ => None,
        };
        Ok(Ring::build(
            size,
            pair(left.zero(), right.zero()),
            one,
            Some(left.is_commutative() && right.is_commutative()),
            Construction::Product(left.clone(), right.clone()),
        ))
    }

    /// Ring of `k × k` matrices over a ring with identity.
    pub fn matrix(k: usize, base: &Ring) -> Result<Ring> {
        if k == 0 {
            return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
        }
        let base_one = base
            .one()
            .ok_or_else(|| Error::InvalidParameter("matrix rings need a base ring with identity".into()))?;
        if k * k > MAX_DIGITS {
            return Err(Error::CapacityExceeded(format!("{k}x{k} matrices")));
        }
        let size = checked_pow(base.size(), k * k)?;
        let mut one_digits = vec![base.zero(); k * k];
        for i in 0..k {
            one_digits[i * k + i] = base_one;
        }
        let zero = encode_digits(&vec![base.zero(); k * k], base.size());
        let one = encode_digits(&one_digits, base.size());
        let commutative = if k == 1 { Some(base.is_commutative()) } else { None };
        Ok(Ring::build(
            size,
            zero,
            Some(one),
            commutative,
            Construction::Matrix { k, base: base.clone() },
        ))
    }

    /// Quotient ring `base / ideal`. The ideal must be a verified two-sided
    /// ideal of `base`. Returns the ring together with the canonical
    /// surjection.
    pub fn quotient(ideal: &crate::ideal::IdealSet) -> Result<(Ring, Hom)> {
        let base = ideal.ring();
        let n = base.size();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let members: Vec<usize> = ideal.members().iter().collect();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &m in &members {
                coset_of[base.add(x, m)] = idx;
            }
        }
        let size = reps.len();
        let zero = coset_of[base.zero()] as usize;
        let one = base.one().map(|o| coset_of[o] as usize);
        let comm = if base.is_commutative() { Some(true) } else { None };
        let ring = Ring::build(
            size,
            zero,
            one,
            comm,
            Construction::Quotient {
                base: base.clone(),
                ideal: ideal.members().clone(),
                reps,
                coset_of: coset_of.clone(),
            },
        );
        let hom = Hom::new(base, &ring, |x| coset_of[x] as usize)?;
        Ok((ring, hom))
    }

    /// Idealization `base ⊞ module` with `(a, m)(b, n) = (ab, an + bm)`.
    pub fn idealization(base: &Ring, module: &Module) -> Result<Ring> {
        if module.ring() != base {
            return Err(Error::InvalidModule("module is over a different ring".into()));
        }
        let size = base
            .size()
            .checked_mul(module.size())
            .filter(|&s| s <= MAX_RING_SIZE)
            .ok_or_else(|| Error::CapacityExceeded("idealization too large".into()))?;
        let pair = |a: usize, m: usize| a * module.size() + m;
        Ok(Ring::build(
            size,
            pair(base.zero(), module.zero()),
            base.one().map(|o| pair(o, module.zero())),
            Some(base.is_commutative()),
            Construction::Idealization {
                base: base.clone(),
                module: module.clone(),
            },
        ))
    }

    /// Amalgamation `base ⋈^f J = {(r, f(r) + j)}` for a homomorphism
    /// `f: base → A` and an ideal `J` of `A`.
    pub fn amalgamation(hom: &Hom, ideal: &crate::ideal::IdealSet) -> Result<Ring> {
        let base = hom.source();
        let target = hom.target();
        if ideal.ring() != target {
            return Err(Error::InvalidIdeal("ideal is not an ideal of the hom target".into()));
        }
        let members: Vec<usize> = ideal.members().iter().collect();
        let mut ideal_pos = vec![u32::MAX; target.size()];
        for (p, &j) in members.iter().enumerate() {
            ideal_pos[j] = p as u32;
        }
        let size = base
            .size()
            .checked_mul(members.len())
            .filter(|&s| s <= MAX_RING_SIZE)
            .ok_or_else(|| Error::CapacityExceeded("amalgamation too large".into()))?;
        let jn = members.len();
        let zero = base.zero() * jn + ideal_pos[target.zero()] as usize;
        let one = base.one().map(|o| o * jn + ideal_pos[target.zero()] as usize);
        let comm = if base.is_commutative() && target.is_commutative() {
            Some(true)
        } else {
            None
        };
        Ok(Ring::build(
            size,
            zero,
            one,
            comm,
            Construction::Amalgamation {
                base: base.clone(),
                hom: hom.clone(),
                ideal: members,
                ideal_pos,
            },
        ))
    }

    /// Truncated polynomial ring `base[x] / (x^degree)`.
    pub fn truncated_poly(base: &Ring, degree: usize) -> Result<Ring> {
        if degree == 0 {
            return Err(Error::InvalidParameter("truncation degree must be at least 1".into()));
        }
        let base_one = base
            .one()
            .ok_or_else(|| Error::InvalidParameter("truncated polynomials need a base with identity".into()))?;
        if degree > MAX_DIGITS {
            return Err(Error::CapacityExceeded(format!("degree {degree}")));
        }
        let size = checked_pow(base.size(), degree)?;
        let mut one = vec![base.zero(); degree];
        one[0] = base_one;
        Ok(Ring::build(
            size,
            encode_digits(&vec![base.zero(); degree], base.size()),
            Some(encode_digits(&one, base.size())),
            Some(base.is_commutative()),
            Construction::TruncatedPoly {
                base: base.clone(),
                degree,
            },
        ))
    }

    /// The ideal `ideal` regarded as a ring with the restricted operations.
    /// Usually has no identity.
    pub fn ideal_as_ring(ideal: &crate::ideal::IdealSet) -> Result<Ring> {
        let base = ideal.ring();
        let members: Vec<usize> = ideal.members().iter().collect();
        let mut pos = vec![u32::MAX; base.size()];
        for (p, &m) in members.iter().enumerate() {
            pos[m] = p as u32;
        }
        let zero = pos[base.zero()] as usize;
        let comm = if base.is_commutative() { Some(true) } else { None };
        let mut ring = Ring::build(
            members.len(),
            zero,
            None,
            comm,
            Construction::IdealAsRing {
                base: base.clone(),
                members,
                pos,
            },
        );
        let one = ring.find_identity();
        Arc::get_mut(&mut ring.0).expect("fresh ring is uniquely owned").one = one;
        Ok(ring)
    }

    fn find_identity(&self) -> Option<usize> {
        let gens = self.additive_gens();
        (0..self.size()).find(|&e| gens.iter().all(|&g| self.mul(e, g) == g && self.mul(g, e) == g))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.0.zero
    }

    #[inline]
    pub fn one(&self) -> Option<usize> {
        self.0.one
    }

    pub fn has_identity(&self) -> bool {
        self.0.one.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    pub fn construction(&self) -> &Construction {
        &self.0.construction
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.add[a * self.0.size + b] as usize,
            None => self.0.add_raw(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.mul[a * self.0.size + b] as usize,
            None => self.0.mul_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.0.tables {
            Some(t) => t.neg[a] as usize,
            None => self.0.neg_raw(a),
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `n · a` for a nonnegative integer `n`.
    pub fn scale(&self, n: usize, a: usize) -> usize {
        let mut acc = self.zero();
        let mut base = a;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// A small generating set of the additive group, chosen greedily in
    /// index order.
    pub fn additive_gens(&self) -> &[usize] {
        self.0.additive_gens.get_or_init(|| {
            let mut span = SubgroupBuilder::new(self);
            let mut gens = Vec::new();
            for x in 0..self.size() {
                if span.is_full() {
                    break;
                }
                if span.insert(x) {
                    gens.push(x);
                }
            }
            gens
        })
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// `{x : xr = rx for all r}`.
    pub fn center(&self) -> ElemSet {
        if self.is_commutative() {
            return ElemSet::full(self.size());
        }
        let gens = self.additive_gens();
        ElemSet::from_elems(
            self.size(),
            self.elements()
                .filter(|&x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x))),
        )
    }

    /// Whether `a·b = 0` for all `a, b`.
    pub fn is_zero_multiplication(&self) -> bool {
        let gens = self.additive_gens();
        gens.iter()
            .all(|&g| gens.iter().all(|&h| self.mul(g, h) == self.zero()))
    }
}

pub(crate) fn encode_digits(digits: &[usize], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

pub(crate) fn decode_digits(mut index: usize, radix: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = index % radix;
        index /= radix;
    }
}

impl RingData {
    fn add_raw(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Table => unreachable!("table rings always carry tables"),
            Construction::Zn(n) => {
                let s = a + b;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            Construction::Product(l, r) => {
                let m = r.size();
                l.add(a / m, b / m) * m + r.add(a % m, b % m)
            }
            Construction::Matrix { k, base } => {
                digitwise(*k * *k, base.size(), a, b, |x, y| base.add(x, y))
            }
            Construction::TruncatedPoly { degree, base } => {
                digitwise(*degree, base.size(), a, b, |x, y| base.add(x, y))
            }
            Construction::Quotient {
                base, reps, coset_of, ..
            } => coset_of[base.add(reps[a], reps[b])] as usize,
            Construction::Idealization { base, module } => {
                let m = module.size();
                base.add(a / m, b / m) * m + module.add(a % m, b % m)
            }
            Construction::Amalgamation {
                base,
                hom,
                ideal,
                ideal_pos,
            } => {
                let jn = ideal.len();
                let target = hom.target();
                let j = target.add(ideal[a % jn], ideal[b % jn]);
                base.add(a / jn, b / jn) * jn + ideal_pos[j] as usize
            }
            Construction::IdealAsRing { base, members, pos } => {
                pos[base.add(members[a], members[b])] as usize
            }
        }
    }

    fn neg_raw(&self, a: usize) -> usize {
        match &self.construction {
            Construction::Table => unreachable!("table rings always carry tables"),
            Construction::Zn(n) => {
                if a == 0 {
                    0
                } else {
                    n - a
                }
            }
            Construction::Product(l, r) => {
                let m = r.size();
                l.neg(a / m) * m + r.neg(a % m)
            }
            Construction::Matrix { k, base } => digitwise_unary(*k * *k, base.size(), a, |x| base.neg(x)),
            Construction::TruncatedPoly { degree, base } => {
                digitwise_unary(*degree, base.size(), a, |x| base.neg(x))
            }
            Construction::Quotient {
                base, reps, coset_of, ..
            } => coset_of[base.neg(reps[a])] as usize,
            Construction::Idealization { base, module } => {
                let m = module.size();
                base.neg(a / m) * m + module.neg(a % m)
            }
            Construction::Amalgamation {
                base,
                hom,
                ideal,
                ideal_pos,
            } => {
                let jn = ideal.len();
                let j = hom.target().neg(ideal[a % jn]);
                base.neg(a / jn) * jn + ideal_pos[j] as usize
            }
            Construction::IdealAsRing { base, members, pos } => pos[base.neg(members[a])] as usize,
        }
    }

    fn mul_raw(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Table => unreachable!("table rings always carry tables"),
            Construction::Zn(n) => (a * b) % n,
            Construction::Product(l, r) => {
                let m = r.size();
                l.mul(a / m, b / m) * m + r.mul(a % m, b % m)
            }
            Construction::Matrix { k, base } => {
                let k = *k;
                let q = base.size();
                let mut x = [0usize; MAX_DIGITS];
                let mut y = [0usize; MAX_DIGITS];
                let mut z = [0usize; MAX_DIGITS];
                decode_digits(a, q, &mut x[..k * k]);
                decode_digits(b, q, &mut y[..k * k]);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = base.zero();
                        for l in 0..k {
                            acc = base.add(acc, base.mul(x[i * k + l], y[l * k + j]));
                        }
                        z[i * k + j] = acc;
                    }
                }
                encode_digits(&z[..k * k], q)
            }
            Construction::TruncatedPoly { degree, base } => {
                let d = *degree;
                let q = base.size();
                let mut x = [0usize; MAX_DIGITS];
                let mut y = [0usize; MAX_DIGITS];
                let mut z = [0usize; MAX_DIGITS];
                decode_digits(a, q, &mut x[..d]);
                decode_digits(b, q, &mut y[..d]);
                for (t, slot) in z[..d].iter_mut().enumerate() {
                    let mut acc = base.zero();
                    for i in 0..=t {
                        acc = base.add(acc, base.mul(x[i], y[t - i]));
                    }
                    *slot = acc;
                }
                encode_digits(&z[..d], q)
            }
            Construction::Quotient {
                base, reps, coset_of, ..
            } => coset_of[base.mul(reps[a], reps[b])] as usize,
            Construction::Idealization { base, module } => {
                let m = module.size();
                let (a1, m1) = (a / m, a % m);
                let (a2, m2) = (b / m, b % m);
                let left = module.act(a1, m2);
                let right = module.act(a2, m1);
                base.mul(a1, a2) * m + module.add(left, right)
            }
            Construction::Amalgamation {
                base,
                hom,
                ideal,
                ideal_pos,
            } => {
                let jn = ideal.len();
                let target = hom.target();
                let (r1, r2) = (a / jn, b / jn);
                let x = target.add(hom.apply(r1), ideal[a % jn]);
                let y = target.add(hom.apply(r2), ideal[b % jn]);
                let r = base.mul(r1, r2);
                let j = target.sub(target.mul(x, y), hom.apply(r));
                r * jn + ideal_pos[j] as usize
            }
            Construction::IdealAsRing { base, members, pos } => pos[base.mul(members[a], members[b])] as usize,
        }
    }
}

fn digitwise(len: usize, radix: usize, a: usize, b: usize, op: impl Fn(usize, usize) -> usize) -> usize {
    let mut x = [0usize; MAX_DIGITS];
    let mut y = [0usize; MAX_DIGITS];
    decode_digits(a, radix, &mut x[..len]);
    decode_digits(b, radix, &mut y[..len]);
    for i in 0..len {
        x[i] = op(x[i], y[i]);
    }
    encode_digits(&x[..len], radix)
}

fn digitwise_unary(len: usize, radix: usize, a: usize, op: impl Fn(usize) -> usize) -> usize {
    let mut x = [0usize; MAX_DIGITS];
    decode_digits(a, radix, &mut x[..len]);
    for d in x[..len].iter_mut() {
        *d = op(*d);
    }
    encode_digits(&x[..len], radix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSet;

    #[test]
    fn zn_basics() {
        let z12 = Ring::zn(12).unwrap();
        assert_eq!(z12.mul(3, 8), 0);
        assert_eq!(z12.add(7, 9), 4);
        assert_eq!(z12.neg(5), 7);
        assert_eq!(z12.one(), Some(1));
        assert!(z12.is_commutative());
        assert_eq!(Ring::zn(36).unwrap().size(), 36);
        assert_eq!(Ring::zn(2).unwrap().size(), 2);
        assert!(matches!(Ring::zn(1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn product_of_idempotents_is_zero() {
        let z2 = Ring::zn(2).unwrap();
        let p = Ring::product(&z2, &z2).unwrap();
        // (1,0) = 2, (0,1) = 1
        assert_eq!(p.mul(2, 1), p.zero());
        assert_eq!(p.one(), Some(3));
        let big = Ring::product(&Ring::zn(36).unwrap(), &Ring::zn(8).unwrap()).unwrap();
        assert_eq!(big.size(), 288);
    }

    #[test]
    fn matrix_ring_scalars() {
        let z12 = Ring::zn(12).unwrap();
        let m = Ring::matrix(2, &z12).unwrap();
        assert_eq!(m.size(), 20736);
        assert!(!m.is_commutative());
        let three = encode_digits(&[3, 0, 0, 3], 12);
        let nine = encode_digits(&[9, 0, 0, 9], 12);
        assert_eq!(m.mul(three, three), nine);
        assert_eq!(m.one(), Some(encode_digits(&[1, 0, 0, 1], 12)));
    }

    #[test]
    fn one_by_one_matrices_match_base() {
        let z6 = Ring::zn(6).unwrap();
        let m = Ring::matrix(1, &z6).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(m.add(a, b), z6.add(a, b));
                assert_eq!(m.mul(a, b), z6.mul(a, b));
            }
        }
        assert!(m.is_commutative());
    }

    #[test]
    fn matrix_encoding_round_trips() {
        let z3 = Ring::zn(3).unwrap();
        let m = Ring::matrix(2, &z3).unwrap();
        let mut d = [0; 4];
        for idx in 0..m.size() {
            decode_digits(idx, 3, &mut d);
            assert_eq!(encode_digits(&d, 3), idx);
        }
    }

    #[test]
    fn capacity_is_enforced() {
        let z12 = Ring::zn(12).unwrap();
        assert!(matches!(Ring::matrix(3, &z12), Err(Error::CapacityExceeded(_))));
    }

    #[test]
    fn truncated_poly_units() {
        let z4 = Ring::zn(4).unwrap();
        let t = Ring::truncated_poly(&z4, 2).unwrap();
        assert_eq!(t.size(), 16);
        let x = encode_digits(&[0, 1], 4);
        assert_eq!(t.mul(x, x), t.zero());
        let one_plus_x = encode_digits(&[1, 1], 4);
        let one_minus_x = encode_digits(&[1, 3], 4);
        assert_eq!(Some(t.mul(one_plus_x, one_minus_x)), t.one());
        let t1 = Ring::truncated_poly(&z4, 1).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(t1.mul(a, b), z4.mul(a, b));
            }
        }
    }

    #[test]
    fn quotient_of_z36_by_12_is_z12() {
        let z36 = Ring::zn(36).unwrap();
        let i = IdealSet::generate(&z36, &[12]);
        let (q, hom) = Ring::quotient(&i).unwrap();
        assert_eq!(q.size(), 12);
        assert_eq!(hom.kernel(), i.members());
        let z12 = Ring::zn(12).unwrap();
        // Coset representatives are 0..12, so index x is the class of x.
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(q.add(a, b), z12.add(a, b));
                assert_eq!(q.mul(a, b), z12.mul(a, b));
            }
        }
        let four = IdealSet::generate(&z36, &[4]);
        assert_eq!(Ring::quotient(&four).unwrap().0.size(), 4);
    }

    #[test]
    fn quotient_by_zero_is_identity_on_indices() {
        let r = Ring::product(&Ring::zn(4).unwrap(), &Ring::zn(3).unwrap()).unwrap();
        let (q, _) = Ring::quotient(&IdealSet::zero(&r)).unwrap();
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(q.mul(a, b), r.mul(a, b));
                assert_eq!(q.add(a, b), r.add(a, b));
            }
        }
    }

    #[test]
    fn idealization_products() {
        let z36 = Ring::zn(36).unwrap();
        let m = Module::cyclic(&z36, 6).unwrap();
        let r = Ring::idealization(&z36, &m).unwrap();
        assert_eq!(r.size(), 216);
        assert_eq!(r.one(), Some(6));
        for a in r.elements() {
            assert_eq!(r.mul(a, 6), a);
        }
        for m1 in 0..6 {
            for m2 in 0..6 {
                assert_eq!(r.mul(m1, m2), r.zero());
            }
        }
    }

    #[test]
    fn amalgamation_sizes() {
        let z36 = Ring::zn(36).unwrap();
        let f = Hom::zn_reduction(36, 12).unwrap();
        let z12 = f.target();
        let j = IdealSet::generate(z12, &[6]);
        let amalg = Ring::amalgamation(&f, &j).unwrap();
        assert_eq!(amalg.size(), 72);
        let zero = IdealSet::zero(z12);
        let dup = Ring::amalgamation(&f, &zero).unwrap();
        assert_eq!(dup.size(), 36);
        for a in 0..36 {
            for b in 0..36 {
                assert_eq!(dup.mul(a, b), z36.mul(a, b));
            }
        }
    }

    #[test]
    fn ideal_as_ring_identity_detection() {
        let z36 = Ring::zn(36).unwrap();
        let six = IdealSet::generate(&z36, &[6]);
        let r = Ring::ideal_as_ring(&six).unwrap();
        assert_eq!(r.size(), 6);
        assert_eq!(r.one(), None);
        let four = IdealSet::generate(&z36, &[4]);
        let r4 = Ring::ideal_as_ring(&four).unwrap();
        // 28 ≡ 1 (mod 9) and 28 ≡ 0 (mod 4).
        let Construction::IdealAsRing { members, .. } = r4.construction() else { panic!() };
        assert_eq!(r4.one().map(|e| members[e]), Some(28));
        let whole = Ring::ideal_as_ring(&IdealSet::whole(&z36)).unwrap();
        assert_eq!(whole.one(), Some(1));
    }

    #[test]
    fn center_of_matrix_ring_is_scalars() {
        let z3 = Ring::zn(3).unwrap();
        let m = Ring::matrix(2, &z3).unwrap();
        let scalars: Vec<usize> = (0..3).map(|c| encode_digits(&[c, 0, 0, c], 3)).collect();
        assert_eq!(m.center().to_vec(), {
            let mut s = scalars.clone();
            s.sort();
            s
        });
        let z4 = Ring::zn(4).unwrap();
        let p = Ring::product(&m, &z4).unwrap();
        let expected: Vec<usize> = scalars
            .iter()
            .flat_map(|&s| (0..4).map(move |b| s * 4 + b))
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(p.center().to_vec(), expected);
    }
}
