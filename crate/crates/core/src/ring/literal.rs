use std::fmt;

use super::{decode_digits, encode_digits, Construction, Ring};
use crate::error::{Error, Result};

/// Construction-native element literal: `5`, `(a,b)`, `[[a,b],[c,d]]`,
/// `poly(c0,c1,...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElemLit {
    Int(i64),
    Tuple(Vec<ElemLit>),
    Matrix(Vec<Vec<ElemLit>>),
    Poly(Vec<ElemLit>),
}

fn join(items: &[ElemLit]) -> String {
    items.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(v) => write!(f, "{v}"),
            ElemLit::Tuple(items) => write!(f, "({})", join(items)),
            ElemLit::Poly(items) => write!(f, "poly({})", join(items)),
            ElemLit::Matrix(rows) => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "[{}]", rows.join(","))
            }
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidElement(msg.into())
}

impl Ring {
    /// Literal for element `x` in the ring's native notation.
    pub fn literal(&self, x: usize) -> ElemLit {
        match self.construction() {
            Construction::Table => ElemLit::Int(x as i64),
            Construction::Zn(_) => ElemLit::Int(x as i64),
            Construction::Product(l, r) => {
                let m = r.size();
                ElemLit::Tuple(vec![l.literal(x / m), r.literal(x % m)])
            }
            Construction::Matrix { k, base } => {
                let mut d = vec![0; k * k];
                decode_digits(x, base.size(), &mut d);
                ElemLit::Matrix(d.chunks(*k).map(|row| row.iter().map(|&e| base.literal(e)).collect()).collect())
            }
            Construction::TruncatedPoly { base, degree } => {
                let mut d = vec![0; *degree];
                decode_digits(x, base.size(), &mut d);
                ElemLit::Poly(d.iter().map(|&e| base.literal(e)).collect())
            }
            Construction::Quotient { base, reps, .. } => base.literal(reps[x]),
            Construction::Idealization { base, module } => {
                let m = module.size();
                ElemLit::Tuple(vec![base.literal(x / m), ElemLit::Int((x % m) as i64)])
            }
            Construction::Amalgamation { base, hom, ideal, .. } => {
                let jn = ideal.len();
                let r = x / jn;
                let t = hom.target();
                let a = t.add(hom.apply(r), ideal[x % jn]);
                ElemLit::Tuple(vec![base.literal(r), t.literal(a)])
            }
            Construction::IdealAsRing { base, members, .. } => base.literal(members[x]),
        }
    }

    /// Printable form of an element.
    pub fn format_elem(&self, x: usize) -> String {
        self.literal(x).to_string()
    }

    /// Index of the element denoted by `lit`.
    pub fn parse_literal(&self, lit: &ElemLit) -> Result<usize> {
        match (self.construction(), lit) {
            (Construction::Table, ElemLit::Int(v)) => self.raw_index(*v),
            (Construction::Zn(n), ElemLit::Int(v)) => Ok(v.rem_euclid(*n as i64) as usize),
            (Construction::Product(l, r), ElemLit::Tuple(items)) if items.len() == 2 => {
                Ok(l.parse_literal(&items[0])? * r.size() + r.parse_literal(&items[1])?)
            }
            (Construction::Matrix { k, base }, ElemLit::Matrix(rows)) => {
                if rows.len() != *k || rows.iter().any(|r| r.len() != *k) {
                    return Err(bad(format!("expected a {k}x{k} matrix, got {lit}")));
                }
                let digits = rows
                    .iter()
                    .flatten()
                    .map(|e| base.parse_literal(e))
                    .collect::<Result<Vec<_>>>()?;
                Ok(encode_digits(&digits, base.size()))
            }
            (Construction::TruncatedPoly { base, degree }, ElemLit::Poly(coeffs)) => {
                if coeffs.len() > *degree {
                    return Err(bad(format!("{lit} has more than {degree} coefficients")));
                }
                let mut digits = vec![base.zero(); *degree];
                for (slot, c) in digits.iter_mut().zip(coeffs) {
                    *slot = base.parse_literal(c)?;
                }
                Ok(encode_digits(&digits, base.size()))
            }
            (Construction::TruncatedPoly { base, degree }, ElemLit::Int(_)) => {
                let mut digits = vec![base.zero(); *degree];
                digits[0] = base.parse_literal(lit)?;
                Ok(encode_digits(&digits, base.size()))
            }
            (Construction::Quotient { base, coset_of, .. }, _) => Ok(coset_of[base.parse_literal(lit)?] as usize),
            (Construction::Idealization { base, module }, ElemLit::Tuple(items)) if items.len() == 2 => {
                let a = base.parse_literal(&items[0])?;
                let ElemLit::Int(m) = items[1] else {
                    return Err(bad(format!("module component of {lit} must be an integer")));
                };
                let m = match module.cyclic_order() {
                    Some(order) => m.rem_euclid(order as i64) as usize,
                    None => usize::try_from(m).ok().filter(|&m| m < module.size()).ok_or_else(|| {
                        bad(format!("module element {m} out of range"))
                    })?,
                };
                Ok(a * module.size() + m)
            }
            (
                Construction::Amalgamation {
                    base,
                    hom,
                    ideal,
                    ideal_pos,
                },
                ElemLit::Tuple(items),
            ) if items.len() == 2 => {
                let r = base.parse_literal(&items[0])?;
                let t = hom.target();
                let a = t.parse_literal(&items[1])?;
                let j = t.sub(a, hom.apply(r));
                let p = ideal_pos[j];
                if p == u32::MAX {
                    return Err(bad(format!("{lit} is not of the form (r, f(r)+j) with j in J")));
                }
                Ok(r * ideal.len() + p as usize)
            }
            (Construction::IdealAsRing { base, pos, .. }, _) => {
                let x = base.parse_literal(lit)?;
                match pos[x] {
                    u32::MAX => Err(bad(format!("{lit} is not in the ideal"))),
                    p => Ok(p as usize),
                }
            }
            (c, _) => Err(bad(format!("{lit} is not a literal for a {} ring", c.kind()))),
        }
    }

    /// Raw index addressing.
    pub fn raw_index(&self, v: i64) -> Result<usize> {
        usize::try_from(v)
            .ok()
            .filter(|&i| i < self.size())
            .ok_or_else(|| bad(format!("index {v} out of range for a ring of {} elements", self.size())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealSet;
    use crate::ring::{Hom, Module};

    fn round_trip(r: &Ring) {
        for x in r.elements() {
            assert_eq!(r.parse_literal(&r.literal(x)).unwrap(), x, "element {x}");
        }
    }

    #[test]
    fn literals_round_trip_for_every_construction() {
        let z6 = Ring::zn(6).unwrap();
        let z4 = Ring::zn(4).unwrap();
        round_trip(&z6);
        round_trip(&Ring::product(&z6, &z4).unwrap());
        round_trip(&Ring::matrix(2, &Ring::zn(2).unwrap()).unwrap());
        round_trip(&Ring::truncated_poly(&z4, 3).unwrap());
        round_trip(&Ring::quotient(&IdealSet::generate(&z6, &[2])).unwrap().0);
        round_trip(&Ring::idealization(&z6, &Module::cyclic(&z6, 3).unwrap()).unwrap());
        let f = Hom::zn_reduction(12, 6).unwrap();
        let j = IdealSet::generate(f.target(), &[3]);
        round_trip(&Ring::amalgamation(&f, &j).unwrap());
        round_trip(&Ring::ideal_as_ring(&IdealSet::generate(&z6, &[2])).unwrap());
    }

    #[test]
    fn formatting() {
        let m = Ring::matrix(2, &Ring::zn(12).unwrap()).unwrap();
        let three = encode_digits(&[3, 0, 0, 3], 12);
        assert_eq!(m.format_elem(three), "[[3,0],[0,3]]");
        let p = Ring::product(&Ring::zn(36).unwrap(), &Ring::zn(8).unwrap()).unwrap();
        assert_eq!(p.format_elem(2 * 8 + 1), "(2,1)");
        let z36 = Ring::zn(36).unwrap();
        assert_eq!(z36.parse_literal(&ElemLit::Int(-1)).unwrap(), 35);
    }

    #[test]
    fn mismatched_literals_fail() {
        let p = Ring::product(&Ring::zn(3).unwrap(), &Ring::zn(3).unwrap()).unwrap();
        assert!(p.parse_literal(&ElemLit::Int(1)).is_err());
        let six = IdealSet::generate(&Ring::zn(36).unwrap(), &[6]);
        let r = Ring::ideal_as_ring(&six).unwrap();
        assert!(r.parse_literal(&ElemLit::Int(4)).is_err());
    }
}
