use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::expr::{parse_ring_expr, IdealSpec, RingExpr};
use crate::ring::{ElemLit, Ring};
use crate::subset::{enumerate_subsets, SubsetS, SubsetStrategy};

/// Families of rings the default corpus draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `Z_n`, `2 ≤ n ≤ 40`.
    Cyclic,
    /// `Z_n × Z_m`, `2 ≤ n ≤ m ≤ 12`, plus `Z36 × Z8` and `Z36 × Z36`.
    Products,
    /// `Z36 / ⟨d⟩` for the proper divisors `d` of 36.
    Quotients,
    /// `M_2(Z_n)` for `n ∈ {2, 3, 4, 6}`.
    Matrices,
    /// `Z_n ⊞ Z_m`, `m | n ≤ 36`.
    Idealizations,
    /// `Z_n ⋈ J` along `Z_n → Z_m` with `J ⊆ 𝒥(Z_m)`.
    Amalgamations,
    /// `Z_n[x]/(x^d)`, `n ≤ 8`, `d ∈ {2, 3}`.
    Truncated,
    /// Ideals of `Z36` as rings.
    IdealRings,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Cyclic,
        Family::Products,
        Family::Quotients,
        Family::Matrices,
        Family::Idealizations,
        Family::Amalgamations,
        Family::Truncated,
        Family::IdealRings,
    ];
}

pub const DEFAULT_SUBSET_CAP: usize = 12;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub families: Vec<Family>,
    /// Extra ring expressions appended to the corpus.
    pub extra: Vec<String>,
    /// Drop rings with more elements. The matrix family is kept only when
    /// all of its members fit.
    pub max_size: Option<usize>,
    /// Subsets kept per ring (sampled with `seed` beyond this).
    pub subset_cap: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> CorpusConfig {
        CorpusConfig {
            families: Family::ALL.to_vec(),
            extra: Vec::new(),
            max_size: None,
            subset_cap: DEFAULT_SUBSET_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

impl CorpusConfig {
    /// No families and no extras; builds the minimal corpus `{Z4, Z6}`.
    pub fn empty() -> CorpusConfig {
        CorpusConfig {
            families: Vec::new(),
            ..CorpusConfig::default()
        }
    }
}

fn zn(n: usize) -> Box<RingExpr> {
    Box::new(RingExpr::Zn(n))
}

fn gen(values: &[i64]) -> IdealSpec {
    IdealSpec(values.iter().map(|&v| ElemLit::Int(v)).collect())
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

fn family_exprs(family: Family) -> Vec<RingExpr> {
    match family {
        Family::Cyclic => (2..=40).map(RingExpr::Zn).collect(),
        Family::Products => {
            let mut v: Vec<RingExpr> = (2..=12)
                .flat_map(|n| (n..=12).map(move |m| RingExpr::Prod(zn(n), zn(m))))
                .collect();
            v.push(RingExpr::Prod(zn(36), zn(8)));
            v.push(RingExpr::Prod(zn(36), zn(36)));
            v
        }
        Family::Quotients => divisors(36)
            .filter(|&d| d > 1 && d < 36)
            .map(|d| RingExpr::Quot(zn(36), gen(&[d as i64])))
            .collect(),
        Family::Matrices => [2, 3, 4, 6].into_iter().map(|n| RingExpr::Mat(2, zn(n))).collect(),
        Family::Idealizations => (2..=36)
            .flat_map(|n| divisors(n).filter(|&m| m > 1).map(move |m| RingExpr::Idealize(zn(n), m)))
            .collect(),
        Family::Amalgamations => {
            let mut v = Vec::new();
            for n in 2..=24usize {
                for m in divisors(n).filter(|&m| m > 1) {
                    // ideals ⟨d⟩ of Z_m inside 𝒥(Z_m) = ⟨rad m⟩, d a proper divisor
                    let rad: usize = (2..=m).filter(|p| m % p == 0 && (2..*p).all(|q| p % q != 0)).product();
                    for d in divisors(m).filter(|&d| d < m && d % rad == 0) {
                        v.push(RingExpr::Amalg(zn(n), zn(m), gen(&[d as i64])));
                    }
                }
            }
            v
        }
        Family::Truncated => (2..=8)
            .flat_map(|n| [2, 3].into_iter().map(move |d| RingExpr::Trunc(zn(n), d)))
            .collect(),
        Family::IdealRings => divisors(36)
            .filter(|&d| d > 1 && d < 36)
            .map(|d| RingExpr::IdealRing(zn(36), gen(&[d as i64])))
            .collect(),
    }
}

/// Ring expressions of the corpus, in a fixed order.
pub fn corpus_exprs(config: &CorpusConfig) -> Vec<RingExpr> {
    let mut out = Vec::new();
    for &family in &config.families {
        let exprs = family_exprs(family);
        let fits = |e: &RingExpr| match config.max_size {
            None => true,
            Some(max) => e
                .size_hint()
                .or_else(|| e.elaborate().ok().map(|r| r.size()))
                .is_some_and(|size| size <= max),
        };
        if family == Family::Matrices && !exprs.iter().all(fits) {
            continue;
        }
        out.extend(exprs.into_iter().filter(|e| fits(e)));
    }
    for text in &config.extra {
        if let Ok(e) = parse_ring_expr(text) {
            out.push(e);
        }
    }
    if out.is_empty() {
        out = vec![RingExpr::Zn(4), RingExpr::Zn(6)];
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|e| seen.insert(e.clone()));
    out
}

/// Subsets to pair with the ideals of `ring`: the multiplicative closures
/// of single elements (with and without 1), plus `named`. Sets containing 0
/// meet every ideal and are dropped unless `keep_zero`. Beyond `cap`, a
/// seeded sample is kept; named sets always survive.
pub fn corpus_subsets(ring: &Ring, named: &[SubsetS], cap: usize, seed: u64, keep_zero: bool) -> Vec<SubsetS> {
    let mut pool: Vec<SubsetS> = enumerate_subsets(ring, SubsetStrategy::SingletonGenerated)
        .map(|e| e.subsets)
        .unwrap_or_default();
    pool.retain(|s| keep_zero || !s.contains_zero());
    pool.retain(|s| !named.contains(s));
    let mut chosen: Vec<SubsetS> = named.to_vec();
    let room = cap.saturating_sub(chosen.len());
    if pool.len() > room {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (ring.size() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut picks = sample(&mut rng, pool.len(), room).into_vec();
        picks.sort_unstable();
        chosen.extend(picks.into_iter().map(|i| pool[i].clone()));
    } else {
        chosen.extend(pool);
    }
    chosen
}
