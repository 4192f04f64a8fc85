//! Executable versions of the structural results about S-𝒥-ideals, run over
//! a corpus of small rings, plus the worked examples.

mod corpus;
mod examples;
mod facts;
mod props_comm;
mod props_constr;
mod props_right;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

pub use corpus::{corpus_exprs, corpus_subsets, CorpusConfig, Family, DEFAULT_SEED, DEFAULT_SUBSET_CAP};
pub use examples::{run_examples, ExampleOutcome};
pub use facts::RingFacts;

use crate::error::{Error, Result};
use crate::expr::{IdealSpec, SubsetSpec};
use crate::ideal::{minimal_generating_set, IdealSet};
use crate::subset::SubsetS;

/// Violations kept in a report per property; all are counted.
pub const MAX_REPORTED_VIOLATIONS: usize = 20;

/// A violation in a form that can be fed back to `check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub ring_expr: String,
    pub ideal_gens: Vec<String>,
    pub subset: String,
    pub mode: String,
    pub counterexample: String,
}

/// Running counts for one property.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub tested: usize,
    pub vacuous: usize,
    pub passed: usize,
    pub violated: usize,
    pub violations: Vec<ViolationRecord>,
    /// Free-form observations (not violations).
    pub notes: BTreeSet<String>,
}

impl Tally {
    /// Records one instance. `hypothesis == false` counts as vacuous; the
    /// payload is built only for violations.
    pub fn record(&mut self, hypothesis: bool, holds: bool, payload: impl FnOnce() -> ViolationRecord) {
        if !hypothesis {
            self.vacuous += 1;
            return;
        }
        self.tested += 1;
        if holds {
            self.passed += 1;
        } else {
            self.violated += 1;
            if self.violations.len() < MAX_REPORTED_VIOLATIONS {
                self.violations.push(payload());
            }
        }
    }

    /// An evaluation error is never a silent pass.
    pub fn error(&mut self, payload: ViolationRecord) {
        self.tested += 1;
        self.violated += 1;
        if self.violations.len() < MAX_REPORTED_VIOLATIONS {
            self.violations.push(payload);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.tested += other.tested;
        self.vacuous += other.vacuous;
        self.passed += other.passed;
        self.violated += other.violated;
        let room = MAX_REPORTED_VIOLATIONS - self.violations.len();
        self.violations.extend(other.violations.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

/// Payload for a violation on `facts`.
pub fn violation(facts: &RingFacts, ideal: Option<&IdealSet>, subset: Option<&SubsetS>, detail: String) -> ViolationRecord {
    let ring = facts.ring();
    ViolationRecord {
        ring_expr: facts.label().to_string(),
        ideal_gens: ideal
            .map(|i| {
                let gens = minimal_generating_set(i, 64);
                IdealSpec::from_elems(ring, &gens).0.iter().map(|e| e.to_string()).collect()
            })
            .unwrap_or_default(),
        subset: subset.map(|s| SubsetSpec::from_subset(s).to_string()).unwrap_or_default(),
        mode: "fixed-s".into(),
        counterexample: detail,
    }
}

/// Whether a property gates acceptance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Gating,
    Exploratory,
    OutOfScope,
}

type Runner = fn(&RingFacts, &mut Tally) -> Result<()>;

pub struct PropertyDef {
    pub id: &'static str,
    pub citation: &'static str,
    pub status: Status,
    pub note: Option<&'static str>,
    run: Option<Runner>,
}

macro_rules! prop {
    ($id:literal, $cite:literal, $status:ident, $note:expr, $run:expr) => {
        PropertyDef {
            id: $id,
            citation: $cite,
            status: Status::$status,
            note: $note,
            run: $run,
        }
    };
}

/// Every property in registry order.
pub fn registry() -> Vec<PropertyDef> {
    vec![
        prop!("P1", "an S-J-ideal with witness s satisfies I ⊆ (J(R):s)", Gating, None, Some(props_comm::p1)),
        prop!("P2", "a J-ideal lies in J(R); S = {1} recovers J-ideals", Gating, None, Some(props_comm::p2)),
        prop!("P3", "S-n ⟹ S-J, n ⟹ J, and J(R) is S-J iff S-prime", Gating, None, Some(props_comm::p3)),
        prop!("P4", "S-J iff: AB ⊆ I forces As ⊆ J(R) or Bs ⊆ I for ideals A, B", Gating, None, Some(props_comm::p4)),
        prop!("P5", "(I:s) a J-ideal for some s ⟹ S-J, with the converse when J(R) is a J-ideal disjoint from S", Gating, None, Some(props_comm::p5)),
        prop!("P6", "S-J with s iff (I:a) ⊆ (J(R):s) for all a ∉ (I:s)", Gating, None, Some(props_comm::p6)),
        prop!("P7", "S-J with s iff (I:b) ⊆ (I:s) for all b ∉ (J(R):s)", Gating, None, Some(props_comm::p7)),
        prop!("P8", "an S-J-ideal I regarded as a ring: P = (P:i) for i ∈ I \\ P ⟹ P is S-J in I", Gating, Some("the hypothesis is read over i ∈ I \\ P; read over all of I it forces P = I"), Some(props_comm::p8)),
        prop!("P9", "S-finiteness of J(R) from a Jacobson or maximal S-J-ideal", Gating, Some("every ideal of a finite ring is finitely generated, so the conclusion is degenerate-true; the chain J(R) ⊆ I ⊆ (J(R):s) and an S-finiteness witness J(R)s ⊆ F ⊆ J(R) are checked"), Some(props_comm::p9)),
        prop!("P10", "A ⊄ (J(R):s) for all s: AI = AK forces Is ⊆ K and Ks' ⊆ I; AI S-J forces Is ⊆ AI", Gating, None, Some(props_comm::p10)),
        prop!("P11", "X ⊄ I and I S-J ⟹ (I:X) is S-J", Gating, Some("instances where (I:X) meets S are vacuous"), Some(props_comm::p11)),
        prop!("P12", "maximal S-J-ideals are prime; a prime (J(R):s) disjoint from S is maximal S-J", Gating, None, Some(props_comm::p12)),
        prop!("P13", "when (J(R):s) = J(R): S-J with s iff I ⊆ (J(R):s) and a1a2 ∈ I forces a1s ∈ J*(I) or a2s ∈ I", Gating, None, Some(props_comm::p13)),
        prop!("P14", "epimorphisms carry S-J-ideals containing the kernel forward, and back when the kernel lies in J(R)", Gating, None, Some(props_constr::p14)),
        prop!("P15", "P1 ⊆ P2: P2 S-J ⟹ P2/P1 S̄-J, and back when P1 ⊆ J(R) or P1 is a J-ideal", Gating, None, Some(props_constr::p15)),
        prop!("P16", "intersections of S-J-ideals are S-J", Gating, None, Some(props_comm::p16)),
        prop!("P17", "I1 × R2 is (S1×S2)-J iff I1 is S1-J and J(R2) ∩ S2 ≠ ∅, and symmetrically", Gating, None, Some(props_constr::p17)),
        prop!("P18", "truncated polynomial analog: I S-J iff I[x] S-J in R[x]/(x^d) when J(R) is a J-ideal", Exploratory, Some("checked on R[x]/(x^d) as a finite analog of power series"), Some(props_constr::p18)),
        prop!("P19", "polynomial ring statement", OutOfScope, Some("infinite rings are out of scope"), None),
        prop!("P20", "I ⊞ M is (S⊞M)-J iff I is S-J", Gating, None, Some(props_constr::p20)),
        prop!("P21", "IM ⊆ N and I ⊞ N (S⊞M)-J ⟹ I is S-J", Gating, None, Some(props_constr::p21)),
        prop!("P22", "I ⋈ J (S^⋈)-J ⟹ I S-J, and back when J ⊆ J(A)", Gating, None, Some(props_constr::p22)),
        prop!("P23", "right S-J iff the principal-ideal form iff the xRy form", Gating, None, Some(props_right::p23)),
        prop!("P24", "on commutative rings with identity, S-J iff right S-J", Gating, None, Some(props_right::p24)),
        prop!("P25", "right S-prime and P ⊆ J(R) ⟹ right S-J", Gating, None, Some(props_right::p25)),
        prop!("P26", "(P:⟨s⟩) right S-J for some s iff P right S-J", Gating, None, Some(props_right::p26)),
        prop!("P27", "(P:⟨s⟩) a J-ideal for some s ⟹ P right S-J", Gating, None, Some(props_right::p27)),
        prop!("P28", "S central, (J(R):⟨s⟩) a J-ideal disjoint from S, P right S-J ⟹ (P:⟨s⟩) a J-ideal", Gating, None, Some(props_right::p28)),
        prop!("P29", "epimorphic images of right S-J-ideals containing the kernel are right f(S)-J", Gating, None, Some(props_right::p29)),
        prop!("P30", "kernel in P ∩ J(R) and f(P) right f(S)-J ⟹ P right S-J", Gating, None, Some(props_right::p30)),
        prop!("P31", "when (J(R):⟨s⟩) = J(R): right S-J with s iff P ⊆ (J(R):⟨s⟩) and xRy ⊆ P forces x ∈ (J*(P):⟨s⟩) or y ∈ (P:⟨s⟩)", Gating, None, Some(props_right::p31)),
        prop!("P32", "right S-J ⟹ P ⊆ (J(R):⟨s⟩); J(R) is right S-J iff right S-prime", Gating, None, Some(props_right::p32)),
        prop!("P33", "in a local ring with (J(R):⟨s⟩) a J-ideal, right S-J-ideals are superfluous", Gating, None, Some(props_right::p33)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property_id: String,
    pub citation: String,
    pub status: Status,
    pub tested: usize,
    pub vacuous: usize,
    pub passed: usize,
    pub violated: usize,
    pub violations: Vec<ViolationRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedRing {
    pub ring_expr: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub rings: usize,
    pub instances: usize,
    pub skipped: Vec<SkippedRing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub corpus: CorpusSummary,
    pub properties: Vec<PropertyReport>,
    pub examples: Vec<ExampleOutcome>,
}

impl Report {
    /// Violations across gating properties.
    pub fn gating_violations(&self) -> usize {
        self.properties
            .iter()
            .filter(|p| p.status == Status::Gating)
            .map(|p| p.violated)
            .sum()
    }

    pub fn examples_pass(&self) -> bool {
        self.examples.iter().all(|e| e.passed)
    }

    pub fn success(&self) -> bool {
        self.gating_violations() == 0 && self.examples_pass()
    }

    pub fn property(&self, id: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.property_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds the corpus rings; entries that cannot be built are reported.
pub fn build_corpus(config: &CorpusConfig) -> (Vec<RingFacts>, Vec<SkippedRing>) {
    let built: Vec<std::result::Result<RingFacts, SkippedRing>> = corpus_exprs(config)
        .into_par_iter()
        .map(|e| {
            RingFacts::build(&e, config).map_err(|err| SkippedRing {
                ring_expr: e.to_string(),
                reason: err.to_string(),
            })
        })
        .collect();
    let mut rings = Vec::new();
    let mut skipped = Vec::new();
    for b in built {
        match b {
            Ok(f) => rings.push(f),
            Err(s) => skipped.push(s),
        }
    }
    (rings, skipped)
}

/// Runs the selected properties (all when `ids` is empty) and the worked
/// examples.
pub fn verify(ids: &[String], config: &CorpusConfig) -> Result<Report> {
    let all = registry();
    for id in ids {
        if !all.iter().any(|p| p.id == id) {
            return Err(Error::InvalidParameter(format!("unknown property {id}")));
        }
    }
    let selected: Vec<&PropertyDef> = all.iter().filter(|p| ids.is_empty() || ids.iter().any(|i| i == p.id)).collect();
    let (rings, skipped) = build_corpus(config);
    let instances = rings.iter().map(|f| f.instance_count()).sum();
    let properties = selected
        .par_iter()
        .map(|p| run_property(p, &rings))
        .collect();
    Ok(Report {
        corpus: CorpusSummary {
            rings: rings.len(),
            instances,
            skipped,
        },
        properties,
        examples: run_examples(),
    })
}

fn run_property(p: &PropertyDef, rings: &[RingFacts]) -> PropertyReport {
    let mut total = Tally::default();
    if let Some(run) = p.run {
        let tallies: Vec<Tally> = rings
            .par_iter()
            .map(|f| {
                let mut t = Tally::default();
                if let Err(e) = run(f, &mut t) {
                    t.error(violation(f, None, None, format!("evaluation error: {e}")));
                }
                t
            })
            .collect();
        for t in tallies {
            total.merge(t);
        }
    }
    let mut notes: Vec<String> = p.note.map(str::to_string).into_iter().collect();
    notes.extend(total.notes);
    PropertyReport {
        property_id: p.id.to_string(),
        citation: p.citation.to_string(),
        status: p.status,
        tested: total.tested,
        vacuous: total.vacuous,
        passed: total.passed,
        violated: total.violated,
        violations: total.violations,
        notes,
    }
}
