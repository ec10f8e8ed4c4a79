//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sepax_core::algebras::{bp_algebra, constructible_algebra};
use sepax_core::axioms::{check_axiom, AxiomId, AxiomId::*, Classifier, FlippedClassifier, StandardClassifier};
use sepax_core::catalog::{self, attachment5, khalimsky_interval, open_point3, sierpinski};
use sepax_core::miner::{
    enumerate_topologies, naive_preorders, verify_diagram, verify_diagram_with, Census, WitnessOutcome,
    mine_witness_in,
};
use sepax_core::operators::{is_nwd, closure};
use sepax_core::props::verify_propositions;
use sepax_core::space::{canonical_code, is_homeomorphic};
use sepax_core::FiniteSpace;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_mismatches(classifier: &dyn Classifier) -> Vec<String> {
    catalog::catalog()
        .iter()
        .flat_map(|e| e.mismatches(classifier).into_iter().map(move |c| format!("{}: {}", e.name, c.axiom)))
        .collect()
}

fn c1_catalog() -> Outcome {
    let required: [(&str, &[(AxiomId, bool)]); 7] = [
        ("sierpinski2", &[(THalf, true), (TNwdOrRo, false), (RoSubfit, true), (Subfit, false)]),
        ("sierpinski3", &[(TD, true), (TQuarter, false), (TNwdOrRo, false)]),
        ("khalimsky3", &[(TClosedOrRo, true), (TClosedOrNwd, false)]),
        ("attachment5", &[(TClosedMeetsRo, true), (TClosedOrNwd, false), (TQuarter, false)]),
        ("open-point3", &[(TOmegaBp, true)]),
        ("open-point3-tail", &[(TInfBp, false)]),
        ("antidiscrete2", &[(TInfBp, false)]),
    ];
    for (name, claims) in required {
        let entry = catalog::lookup(name).ok_or_else(|| format!("missing entry {name}"))?;
        let v = entry.expected_vector();
        for &(a, holds) in claims {
            ensure(v.get(a) == Some(holds), || format!("{name} does not claim {a} = {holds}"))?;
        }
    }
    let bad = catalog_mismatches(&StandardClassifier);
    ensure(bad.is_empty(), || format!("mismatched claims {bad:?}"))?;
    let finite = catalog::catalog().iter().filter(|e| !e.is_analytic()).count();
    for e in catalog::catalog().iter().filter(|e| e.is_analytic()) {
        ensure(e.inconsistencies().is_empty(), || format!("{} contradicts the diagram", e.name))?;
    }
    Ok(format!("{finite} finite entries, 0 mismatched claims"))
}

/// `{x} = F ∩ U` for some closed `F` and open `U`, by direct search.
fn locally_closed_by_search(s: &FiniteSpace, x: usize) -> bool {
    let single = s.singleton(x);
    s.closed_sets().iter().any(|&f| s.opens().iter().any(|&u| f & u == single))
}

fn c2_theorem_oracles() -> Outcome {
    let (spaces, _) = enumerate_topologies(4, false).map_err(|e| e.to_string())?;
    ensure(spaces.len() == 355, || format!("{} spaces", spaces.len()))?;
    let mut points = 0;
    let mut mismatches = Vec::new();
    for s in &spaces {
        let borel = constructible_algebra(s);
        let bp = bp_algebra(s);
        for x in s.points() {
            points += 1;
            let single = s.singleton(x);
            if borel.contains(single) != locally_closed_by_search(s, x) {
                mismatches.push(format!("constructible at {x} in {:?}", s.opens()));
            }
            let open_or_nwd = s.opens().contains(&single) || {
                let cl = closure(s, single);
                !s.opens().iter().any(|u| !u.is_empty() && u.is_subset(&cl))
            };
            if bp.contains(single) != open_or_nwd || open_or_nwd != (is_nwd(s, single) || s.is_open(single)) {
                mismatches.push(format!("BP at {x} in {:?}", s.opens()));
            }
        }
    }
    ensure(mismatches.is_empty(), || format!("{} mismatches, first {}", mismatches.len(), mismatches[0]))?;
    Ok(format!("355 spaces, {points} points, 0 mismatches"))
}

fn c3_diagram() -> Outcome {
    let r = verify_diagram(4).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{} violations, first {:?}", r.violation_count(), r.failures[0]))?;
    ensure(r.per_size == vec![(1, 1), (2, 4), (3, 29), (4, 355)], || format!("{:?}", r.per_size))?;
    let (spaces, _) = enumerate_topologies(4, false).map_err(|e| e.to_string())?;
    for s in &spaces {
        for (a, b) in [(TQuarter, THalf), (T0, TD), (TInfBp, TOmegaBp)] {
            ensure(check_axiom(s, a) == check_axiom(s, b), || format!("{a} vs {b} on {:?}", s.opens()))?;
        }
    }
    Ok(format!("0 violations / {} spaces on <= 4 points", r.spaces_checked))
}

fn c4_propositions() -> Outcome {
    let mut checks = 0;
    for n in [3, 4] {
        for o in verify_propositions(n, None).map_err(|e| e.to_string())? {
            ensure(o.passed, || format!("n = {n}: {} failed: {:?}", o.name, o.counterexample))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} property runs, 0 counterexamples"))
}

fn c5_enumeration() -> Outcome {
    for (n, labeled, classes) in [(1, 1, 1), (2, 4, 3), (3, 29, 9), (4, 355, 33)] {
        let (spaces, report) = enumerate_topologies(n, false).map_err(|e| e.to_string())?;
        ensure(report.labeled_count == labeled && report.homeo_class_count == classes, || {
            format!("n = {n}: {} labeled, {} classes", report.labeled_count, report.homeo_class_count)
        })?;
        let naive = naive_preorders(n).map_err(|e| e.to_string())?;
        let mut fast_codes: Vec<u64> = spaces.iter().map(|s| s.specialization_preorder().code()).collect();
        let mut naive_codes: Vec<u64> = naive.iter().map(|p| p.code()).collect();
        fast_codes.sort_unstable();
        naive_codes.sort_unstable();
        ensure(fast_codes == naive_codes, || format!("n = {n}: enumerator and oracle differ"))?;
        let mut naive_classes: Vec<u64> = naive
            .iter()
            .map(|p| canonical_code(&FiniteSpace::from_preorder(p)).unwrap())
            .collect();
        naive_classes.sort_unstable();
        naive_classes.dedup();
        ensure(naive_classes.len() == classes, || format!("n = {n}: oracle finds {} classes", naive_classes.len()))?;
    }
    Ok("1, 4, 29, 355 labeled; 1, 3, 9, 33 classes; oracle agrees".into())
}

fn c6_witnesses() -> Outcome {
    let census4 = Census::build(4, &StandardClassifier).map_err(|e| e.to_string())?;
    let census5 = Census::build(5, &StandardClassifier).map_err(|e| e.to_string())?;
    let finite: [(AxiomId, AxiomId, FiniteSpace, &Census); 5] = [
        (THalf, TNwdOrRo, sierpinski(2).unwrap(), &census4),
        (TD, TQuarter, sierpinski(3).unwrap(), &census4),
        (TClosedOrRo, T1, khalimsky_interval(-1, 1).unwrap(), &census4),
        (TOmegaBp, TD, open_point3(), &census4),
        (TClosedMeetsRo, TClosedOrRo, attachment5(), &census5),
    ];
    for (a, b, expected, census) in finite {
        let r = mine_witness_in(census, &[a], &[b]).map_err(|e| e.to_string())?;
        let WitnessOutcome::Found { n, space, minimal, .. } = &r.outcome else {
            return Err(format!("no witness for {a} without {b}"));
        };
        ensure(*minimal && *n == expected.carrier_size(), || format!("{a} without {b}: {n} points"))?;
        ensure(is_homeomorphic(space, &expected).unwrap(), || format!("{a} without {b}: {:?}", space.opens()))?;
        ensure(check_axiom(space, a) && !check_axiom(space, b), || format!("{a} without {b} does not re-verify"))?;
    }
    let ro_row = mine_witness_in(&census4, &[TNwdOrRo], &[TClosedMeetsRo]).map_err(|e| e.to_string())?;
    let ro_row_size = match &ro_row.outcome {
        WitnessOutcome::Found { n, space, .. } => {
            ensure(check_axiom(space, TNwdOrRo) && !check_axiom(space, TClosedMeetsRo), || "RO-row witness".into())?;
            *n
        }
        other => return Err(format!("T_NWD_OR_RO without T_CLOSED_MEETS_RO: {other:?}")),
    };
    let none = mine_witness_in(&census4, &[T1], &[T0]).map_err(|e| e.to_string())?;
    ensure(none.outcome == WitnessOutcome::NoneUpTo { n: 4, analytic: None }, || format!("{:?}", none.outcome))?;
    let infinite_only = [
        (TQuarter, THalf, "kappa-space"),
        (T0, TD, "kappa-space"),
        (TInfBp, TOmegaBp, "kappa-space"),
        (TClosedOrNwd, TQuarter, "sierpinski-omega"),
        (TClosedOrNwd, T0, "antidiscrete2-x-interval"),
    ];
    for (a, b, cite) in infinite_only {
        let r = mine_witness_in(&census4, &[a], &[b]).map_err(|e| e.to_string())?;
        let expected = WitnessOutcome::NoneUpTo { n: 4, analytic: Some(cite.to_string()) };
        ensure(r.outcome == expected, || format!("{a} without {b}: {:?}", r.outcome))?;
    }
    let rerun = Census::build(4, &StandardClassifier).map_err(|e| e.to_string())?;
    for a in AxiomId::SEPARATION {
        for b in AxiomId::SEPARATION.into_iter().filter(|&b| b != a) {
            let x = serde_json::to_string(&mine_witness_in(&census4, &[a], &[b]).unwrap()).unwrap();
            let y = serde_json::to_string(&mine_witness_in(&rerun, &[a], &[b]).unwrap()).unwrap();
            ensure(x == y, || format!("{a} without {b} differs between runs"))?;
        }
    }
    Ok(format!(
        "5 examples rediscovered at minimal size, RO-row witness on {ro_row_size} points, 6 NONE_UP_TO(4) results, deterministic"
    ))
}

fn c7_mutation() -> Outcome {
    let mut caught = Vec::new();
    for a in AxiomId::ALL {
        let flipped = FlippedClassifier(a);
        let diagram = verify_diagram_with(3, &flipped).map_err(|e| e.to_string())?;
        let catalog = catalog_mismatches(&flipped);
        ensure(!diagram.passed() || !catalog.is_empty(), || format!("flipping {a} goes unnoticed"))?;
        caught.push(a);
    }
    Ok(format!("{} of {} flipped axioms caught", caught.len(), AxiomId::ALL.len()))
}

type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (1, "catalog regression", Duration::from_secs(1), c1_catalog),
        (2, "theorem oracles on 4 points", Duration::from_secs(10), c2_theorem_oracles),
        (3, "diagram verification on <= 4 points", Duration::from_secs(10), c3_diagram),
        (4, "proposition suite at n = 3 and n = 4", Duration::from_secs(120), c4_propositions),
        (5, "enumeration counts against the naive oracle", Duration::from_secs(5), c5_enumeration),
        (6, "witness mining", Duration::MAX, c6_witnesses),
        (7, "mutation sanity", Duration::MAX, c7_mutation),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= limit) {
            (Ok(detail), true) => format!("PASS  {detail}"),
            (Ok(detail), false) => format!("FAIL  over budget {limit:?}: {detail}"),
            (Err(why), _) => format!("FAIL  {why}"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        let budget = if limit == Duration::MAX { String::new() } else { format!(" / {limit:?}") };
        println!("criterion {id} ({title}) [{elapsed:.2?}{budget}]: {verdict}");
    }
    if failed == 0 {
        println!("acceptance: 7/7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 criteria failed");
        ExitCode::FAILURE
    }
}
