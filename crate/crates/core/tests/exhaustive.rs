use sepax_core::axioms::{check_axiom, AxiomId::*};
use sepax_core::catalog::{attachment5, non_implication_witnesses};
use sepax_core::diagram;
use sepax_core::miner::{enumerate_topologies, strictness_table, verify_diagram, WitnessOutcome};
use sepax_core::space::is_homeomorphic;

#[test]
fn five_point_counts() {
    let (spaces, report) = enumerate_topologies(5, true).unwrap();
    assert_eq!((report.labeled_count, report.homeo_class_count), (6942, 139));
    assert_eq!(spaces.len(), 139);
}

#[test]
fn diagram_holds_on_five_points() {
    let r = verify_diagram(5).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
    assert_eq!(r.spaces_checked, 1 + 4 + 29 + 355 + 6942);
}

#[test]
fn closed_or_nwd_is_t1_on_five_points() {
    for n in 1..=5 {
        for s in enumerate_topologies(n, true).unwrap().0 {
            assert_eq!(check_axiom(&s, TClosedOrNwd), check_axiom(&s, T1));
        }
    }
}

#[test]
fn strictness_table_on_five_points() {
    let rows = strictness_table(5).unwrap();
    assert_eq!(rows.len(), 110);
    for r in &rows {
        assert!(!r.is_contradiction(), "{} ⇒ {} has a finite counterexample", r.from, r.to);
        if !r.implied_finite {
            // every non-implication outside the T_CLOSED_OR_NWD row is witnessed on at most 5 points
            let found = r.report.witness().is_some();
            assert_eq!(found, r.from != TClosedOrNwd, "{} ⇏ {}", r.from, r.to);
        }
    }
    let attach = rows.iter().find(|r| (r.from, r.to) == (TClosedMeetsRo, TClosedOrRo)).unwrap();
    assert!(is_homeomorphic(attach.report.witness().unwrap(), &attachment5()).unwrap());
    let ro_row = rows.iter().find(|r| (r.from, r.to) == (TNwdOrRo, TClosedMeetsRo)).unwrap();
    assert!(matches!(ro_row.report.outcome, WitnessOutcome::Found { n: 4, .. }));
}

#[test]
fn catalog_witnesses_agree_with_the_diagram() {
    for ((a, b), name) in non_implication_witnesses() {
        assert!(!diagram::implies(a, b, false), "{name} separates {a} from {b} against the diagram");
    }
}
