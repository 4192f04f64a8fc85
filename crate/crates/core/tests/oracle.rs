mod common;

use common::{sweep, Oracle};
use ringlab_core::expr::parse_ring_expr;
use ringlab_core::harness::{corpus_exprs, CorpusConfig};
use ringlab_core::predicate::{Predicate, QuantifierMode};
use ringlab_core::Ring;

#[test]
fn oracle_reproduces_z36_facts() {
    let r = Ring::zn(36).unwrap();
    let o = Oracle::new(&r);
    assert_eq!(o.ideals.len(), 9);
    assert_eq!(o.jacobson.elems(), vec![0, 6, 12, 18, 24, 30]);
    let four = o.ideals.iter().find(|i| i.elems().len() == 9).unwrap();
    let (sj, working) = o.elementwise(Predicate::SJ, four, &[1, 3, 9, 27], QuantifierMode::FixedS);
    assert!(sj);
    assert_eq!(working, vec![3, 9, 27]);
    assert!(!o.elementwise(Predicate::J, four, &[], QuantifierMode::FixedS).0);
}

#[test]
fn library_matches_oracle_on_small_rings() {
    let exprs = corpus_exprs(&CorpusConfig::default());
    let out = sweep(&exprs, 40);
    assert!(out.rings >= 40, "only {} rings", out.rings);
    assert!(out.disagreements.is_empty(), "{:#?}", out.disagreements);
}

#[test]
fn library_matches_oracle_on_noncommutative_rings() {
    let exprs: Vec<_> = ["M(2, Z2)", "M(2, Z3)"].iter().map(|t| parse_ring_expr(t).unwrap()).collect();
    let out = sweep(&exprs, 100);
    assert_eq!(out.rings, 2);
    assert!(out.disagreements.is_empty(), "{:#?}", out.disagreements);
}

#[test]
fn library_matches_oracle_on_rings_without_identity() {
    let exprs: Vec<_> = ["idealring(Z36, gen(2))", "idealring(Z36, gen(6))", "idealring(Z8, gen(2))"]
        .iter()
        .map(|t| parse_ring_expr(t).unwrap())
        .collect();
    let out = sweep(&exprs, 100);
    assert_eq!(out.rings, 3);
    assert!(out.disagreements.is_empty(), "{:#?}", out.disagreements);
}
