use std::fmt;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Ring;

/// Seed used for sampled axiom checks unless the caller picks another.
pub const DEFAULT_AXIOM_SEED: u64 = 0x5EED_2024;

const EXHAUSTIVE_LIMIT: usize = 256;
const DEFAULT_SAMPLES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomEffort {
    /// Exhaustive up to 256 elements, sampled above.
    Auto,
    Exhaustive,
    Sampled { triples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub seed: Option<u64>,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn check_triple(r: &Ring, a: usize, b: usize, c: usize) -> Option<&'static str> {
    if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
        return Some("additive associativity");
    }
    if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) {
        return Some("multiplicative associativity");
    }
    if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
        return Some("left distributivity");
    }
    if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
        return Some("right distributivity");
    }
    None
}

fn check_pair(r: &Ring, a: usize, b: usize) -> Option<&'static str> {
    if r.add(a, b) != r.add(b, a) {
        return Some("additive commutativity");
    }
    if r.is_commutative() && r.mul(a, b) != r.mul(b, a) {
        return Some("commutativity");
    }
    None
}

fn check_single(r: &Ring, a: usize) -> Option<&'static str> {
    if r.add(a, r.zero()) != a {
        return Some("additive identity");
    }
    if r.add(a, r.neg(a)) != r.zero() {
        return Some("additive inverse");
    }
    if let Some(one) = r.one() {
        if r.mul(one, a) != a || r.mul(a, one) != a {
            return Some("multiplicative identity");
        }
    }
    None
}

/// Checks the ring axioms, returning the first violation found.
pub fn ring_axioms_check(ring: &Ring, effort: AxiomEffort) -> AxiomReport {
    let n = ring.size();
    let effort = match effort {
        AxiomEffort::Auto if n <= EXHAUSTIVE_LIMIT => AxiomEffort::Exhaustive,
        AxiomEffort::Auto => AxiomEffort::Sampled {
            triples: DEFAULT_SAMPLES,
            seed: DEFAULT_AXIOM_SEED,
        },
        e => e,
    };
    for a in ring.elements() {
        if let Some(law) = check_single(ring, a) {
            return violation(effort, 0, law, vec![a]);
        }
    }
    match effort {
        AxiomEffort::Exhaustive => {
            let mut count = 0;
            for a in 0..n {
                for b in 0..n {
                    if let Some(law) = check_pair(ring, a, b) {
                        return violation(effort, count, law, vec![a, b]);
                    }
                    for c in 0..n {
                        count += 1;
                        if let Some(law) = check_triple(ring, a, b, c) {
                            return violation(effort, count, law, vec![a, b, c]);
                        }
                    }
                }
            }
            AxiomReport {
                exhaustive: true,
                triples_checked: count,
                seed: None,
                violation: None,
            }
        }
        AxiomEffort::Sampled { triples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..triples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                let law = check_pair(ring, a, b).or_else(|| check_triple(ring, a, b, c));
                if let Some(law) = law {
                    return violation(effort, i + 1, law, vec![a, b, c]);
                }
            }
            AxiomReport {
                exhaustive: false,
                triples_checked: triples,
                seed: Some(seed),
                violation: None,
            }
        }
        AxiomEffort::Auto => unreachable!(),
    }
}

fn violation(effort: AxiomEffort, count: usize, law: &'static str, elements: Vec<usize>) -> AxiomReport {
    let (exhaustive, seed) = match effort {
        AxiomEffort::Sampled { seed, .. } => (false, Some(seed)),
        _ => (true, None),
    };
    AxiomReport {
        exhaustive,
        triples_checked: count,
        seed,
        violation: Some(AxiomViolation { law, elements }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z36_passes() {
        let r = Ring::zn(36).unwrap();
        let report = ring_axioms_check(&r, AxiomEffort::Auto);
        assert!(report.passed());
        assert!(report.exhaustive);
    }

    #[test]
    fn patched_table_is_caught() {
        let n = 6;
        let add: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mut mul: Vec<usize> = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        mul[2 * n + 3] = 1;
        mul[3 * n + 2] = 1;
        let r = Ring::from_tables_unchecked(n, add.clone(), mul.clone()).unwrap();
        let report = ring_axioms_check(&r, AxiomEffort::Exhaustive);
        let v = report.violation.expect("corrupted table must fail");
        let [a, b, c] = v.elements[..] else { panic!("expected a triple, got {v}") };
        assert!(check_triple(&r, a, b, c).is_some());
        assert!(Ring::from_tables(n, add, mul).is_err());
    }

    #[test]
    fn sampled_check_records_seed() {
        let m = Ring::matrix(2, &Ring::zn(6).unwrap()).unwrap();
        let report = ring_axioms_check(&m, AxiomEffort::Auto);
        assert!(report.passed());
        assert_eq!(report.seed, Some(DEFAULT_AXIOM_SEED));
        assert_eq!(report.triples_checked, 1_000_000);
    }
}
