//! Ring-construction expressions: syntax tree, parser, printer and
//! elaboration into concrete rings.
//!
//! ```text
//! ring   := atom ("x" atom)*
//! atom   := "Z" INT | "M(" INT "," ring ")" | "quot(" ring "," ideal ")"
//!         | "idealize(" ring "," INT ")" | "amalg(" ring "," ring "," "mod" "," ideal ")"
//!         | "trunc(" ring "," INT ")" | "idealring(" ring "," ideal ")" | "(" ring ")"
//! ideal  := "gen(" elems ")"
//! subset := "mulclosed(" elems ")" | "gen_s(" elems ")"
//! elem   := INT | "(" elems ")" | "[" "[" elems "]" ("," "[" elems "]")* "]" | "poly(" elems ")"
//! ```

mod parser;

use std::fmt;

pub use parser::{parse_elem, parse_ideal_spec, parse_ring_expr, parse_subset_spec, ParseError};

use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::ring::{ElemLit, Hom, Module, Ring};
use crate::subset::{SubsetKind, SubsetS};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Mat(usize, Box<RingExpr>),
    Quot(Box<RingExpr>, IdealSpec),
    /// `R ⊞ Z_k` with the cyclic module `Z_k`.
    Idealize(Box<RingExpr>, usize),
    /// `R ⋈ J` along the reduction `R → A`, `J` an ideal of `A`.
    Amalg(Box<RingExpr>, Box<RingExpr>, IdealSpec),
    Trunc(Box<RingExpr>, usize),
    IdealRing(Box<RingExpr>, IdealSpec),
}

/// `gen(e1, ..., ek)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealSpec(pub Vec<ElemLit>);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubsetSpec {
    /// Exactly the listed elements, which must be closed under products.
    MulClosed(Vec<ElemLit>),
    /// The multiplicative closure of the listed elements.
    GenS(Vec<ElemLit>),
}

fn join(items: &[ElemLit]) -> String {
    items.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen({})", join(&self.0))
    }
}

impl fmt::Display for SubsetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetSpec::MulClosed(items) => write!(f, "mulclosed({})", join(items)),
            SubsetSpec::GenS(items) => write!(f, "gen_s({})", join(items)),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Prod(a, b) => match **b {
                RingExpr::Prod(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            RingExpr::Mat(k, e) => write!(f, "M({k}, {e})"),
            RingExpr::Quot(e, i) => write!(f, "quot({e}, {i})"),
            RingExpr::Idealize(e, k) => write!(f, "idealize({e}, {k})"),
            RingExpr::Amalg(a, b, i) => write!(f, "amalg({a}, {b}, mod, {i})"),
            RingExpr::Trunc(e, d) => write!(f, "trunc({e}, {d})"),
            RingExpr::IdealRing(e, i) => write!(f, "idealring({e}, {i})"),
        }
    }
}

impl std::str::FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<RingExpr> {
        Ok(parse_ring_expr(s)?)
    }
}

/// Resolves an element literal, or a raw index when `raw` is set.
pub fn resolve_elem(ring: &Ring, lit: &ElemLit, raw: bool) -> Result<usize> {
    match (raw, lit) {
        (true, ElemLit::Int(v)) => ring.raw_index(*v),
        (true, _) => Err(Error::InvalidElement(format!("raw addressing takes integers, got {lit}"))),
        (false, _) => ring.parse_literal(lit),
    }
}

fn resolve_all(ring: &Ring, items: &[ElemLit], raw: bool) -> Result<Vec<usize>> {
    items.iter().map(|e| resolve_elem(ring, e, raw)).collect()
}

impl IdealSpec {
    pub fn elaborate(&self, ring: &Ring, raw: bool) -> Result<IdealSet> {
        Ok(IdealSet::generate(ring, &resolve_all(ring, &self.0, raw)?))
    }

    /// `gen(...)` listing `gens` in the ring's literal notation.
    pub fn from_elems(ring: &Ring, gens: &[usize]) -> IdealSpec {
        IdealSpec(gens.iter().map(|&g| ring.literal(g)).collect())
    }
}

impl SubsetSpec {
    pub fn elaborate(&self, ring: &Ring, raw: bool) -> Result<SubsetS> {
        match self {
            SubsetSpec::MulClosed(items) => {
                let elems = resolve_all(ring, items, raw)?;
                SubsetS::from_elems(ring, &elems, SubsetKind::MulClosed)
            }
            SubsetSpec::GenS(items) => SubsetS::generate_mulclosed(ring, &resolve_all(ring, items, raw)?),
        }
    }

    /// `mulclosed(...)` listing the members of `s`.
    pub fn from_subset(s: &SubsetS) -> SubsetSpec {
        SubsetSpec::MulClosed(s.iter().map(|x| s.ring().literal(x)).collect())
    }
}

impl RingExpr {
    /// Builds the ring. Literals inside are always construction-native.
    pub fn elaborate(&self) -> Result<Ring> {
        Ok(match self {
            RingExpr::Zn(n) => Ring::zn(*n)?,
            RingExpr::Prod(a, b) => Ring::product(&a.elaborate()?, &b.elaborate()?)?,
            RingExpr::Mat(k, e) => Ring::matrix(*k, &e.elaborate()?)?,
            RingExpr::Quot(e, i) => Ring::quotient(&i.elaborate(&e.elaborate()?, false)?)?.0,
            RingExpr::Idealize(e, k) => {
                let base = e.elaborate()?;
                Ring::idealization(&base, &Module::cyclic(&base, *k)?)?
            }
            RingExpr::Amalg(a, b, i) => {
                let hom = Hom::zn_reduction_between(&a.elaborate()?, &b.elaborate()?)?;
                let j = i.elaborate(hom.target(), false)?;
                Ring::amalgamation(&hom, &j)?
            }
            RingExpr::Trunc(e, d) => Ring::truncated_poly(&e.elaborate()?, *d)?,
            RingExpr::IdealRing(e, i) => Ring::ideal_as_ring(&i.elaborate(&e.elaborate()?, false)?)?,
        })
    }

    /// Size of the ring without building it, when cheap to tell.
    pub fn size_hint(&self) -> Option<usize> {
        match self {
            RingExpr::Zn(n) => Some(*n),
            RingExpr::Prod(a, b) => a.size_hint()?.checked_mul(b.size_hint()?),
            RingExpr::Mat(k, e) => e.size_hint()?.checked_pow(u32::try_from(k * k).ok()?),
            RingExpr::Idealize(e, k) => e.size_hint()?.checked_mul(*k),
            RingExpr::Trunc(e, d) => e.size_hint()?.checked_pow(u32::try_from(*d).ok()?),
            RingExpr::Quot(..) | RingExpr::Amalg(..) | RingExpr::IdealRing(..) => None,
        }
    }

    pub fn is_matrix(&self) -> bool {
        matches!(self, RingExpr::Mat(..))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Box<RingExpr> {
        Box::new(RingExpr::Zn(n))
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_ring_expr("M(2, Z12)").unwrap(), RingExpr::Mat(2, zn(12)));
        assert_eq!(parse_ring_expr("Z36 x Z8").unwrap(), RingExpr::Prod(zn(36), zn(8)));
        assert_eq!(
            parse_ring_expr("quot(Z36, gen(12))").unwrap(),
            RingExpr::Quot(zn(36), IdealSpec(vec![ElemLit::Int(12)]))
        );
        assert_eq!(
            parse_ring_expr("Z2 x Z3 x Z5").unwrap(),
            RingExpr::Prod(Box::new(RingExpr::Prod(zn(2), zn(3))), zn(5))
        );
        assert_eq!(
            parse_ring_expr("amalg(Z12, Z6, mod, gen(3))").unwrap(),
            RingExpr::Amalg(zn(12), zn(6), IdealSpec(vec![ElemLit::Int(3)]))
        );
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "Z36 x Z8",
            "Z2 x (Z3 x Z5)",
            "M(2, Z12)",
            "idealize(Z36, 6)",
            "trunc(Z4, 3)",
            "idealring(Z36, gen(4))",
            "quot(Z4 x Z2, gen((2,0)))",
        ] {
            let e = parse_ring_expr(text).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_ring_expr("M(2 Z12)").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert_eq!(err.expected, vec!["`,`".to_string()]);
        let err = parse_ring_expr("Z36 x\n  foo").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.expected.len() > 1);
        assert!(err.to_string().contains("line 2, column 3"));
        assert!(parse_ring_expr("Z36 x").is_err());
        assert!(parse_ring_expr("Z36 )").is_err());
    }

    #[test]
    fn elaboration() {
        let r = parse_ring_expr("Z36 x Z8").unwrap().elaborate().unwrap();
        assert_eq!(r.size(), 288);
        let m = parse_ring_expr("M(2, Z2)").unwrap().elaborate().unwrap();
        assert!(!m.is_commutative());
        let q = parse_ring_expr("quot(Z36, gen(12))").unwrap().elaborate().unwrap();
        assert_eq!(q.size(), 12);
        let a = parse_ring_expr("amalg(Z12, Z6, mod, gen(3))").unwrap().elaborate().unwrap();
        assert_eq!(a.size(), 24);
        assert!(parse_ring_expr("M(0, Z2)").unwrap().elaborate().is_err());
        assert!(parse_ring_expr("idealize(Z36, 5)").unwrap().elaborate().is_err());

        let z36 = Ring::zn(36).unwrap();
        let s = parse_subset_spec("mulclosed(1,3,9,27)").unwrap().elaborate(&z36, false).unwrap();
        assert_eq!(s.len(), 4);
        assert!(parse_subset_spec("mulclosed(2,3)").unwrap().elaborate(&Ring::zn(6).unwrap(), false).is_err());
        let g = parse_subset_spec("gen_s(3)").unwrap().elaborate(&z36, false).unwrap();
        assert_eq!(g.iter().collect::<Vec<_>>(), vec![3, 9, 27]);
        let i = parse_ideal_spec("gen(4)").unwrap().elaborate(&z36, false).unwrap();
        assert_eq!(i.len(), 9);
        assert!(resolve_elem(&z36, &ElemLit::Int(40), true).unwrap_err().to_string().contains("out of range"));
    }

    #[test]
    fn size_hints() {
        assert_eq!(parse_ring_expr("M(2, Z12)").unwrap().size_hint(), Some(20736));
        assert_eq!(parse_ring_expr("idealize(Z12, 4)").unwrap().size_hint(), Some(48));
        assert_eq!(parse_ring_expr("quot(Z12, gen(4))").unwrap().size_hint(), None);
    }
}
