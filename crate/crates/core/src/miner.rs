//! Exhaustive enumeration of small topologies, whole-diagram verification
//! and minimal-witness search.
//!
//! Topologies on `n` labelled points correspond to preorders on `n` points,
//! so enumeration walks preorders row by row (row `x` is the up-set of `x`,
//! which is also the smallest open neighbourhood of `x`).

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::axioms::{AxiomId, AxiomVector, Classifier, StandardClassifier, Violation};
use crate::catalog;
use crate::diagram;
use crate::error::SpaceError;
use crate::pointset::full_mask;
use crate::space::{canonical_code, canonical_form, FiniteSpace, Preorder};

pub const MAX_ENUMERATION_POINTS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinerError {
    #[error("carrier of {size} points exceeds the enumeration limit of {max}")]
    CarrierTooLarge { size: usize, max: usize },
    #[error("axioms {0:?} are both required and forbidden")]
    ContradictoryQuery(Vec<AxiomId>),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

fn check_size(n: usize) -> Result<(), MinerError> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(MinerError::CarrierTooLarge { size: n, max: MAX_ENUMERATION_POINTS });
    }
    if n == 0 {
        return Err(SpaceError::EmptyCarrier.into());
    }
    Ok(())
}

/// Every preorder on `n` points, by depth-first search over rows. Row `k`
/// is accepted only if it is consistent with every earlier row:
/// `k ∈ r_i ⇒ r_k ⊆ r_i` and `i ∈ r_k ⇒ r_i ⊆ r_k`.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Preorder>, MinerError> {
    check_size(n)?;
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(n);
    extend_rows(n, &mut rows, &mut out);
    Ok(out)
}

fn extend_rows(n: usize, rows: &mut Vec<u64>, out: &mut Vec<Preorder>) {
    let k = rows.len();
    if k == n {
        out.push(Preorder::from_rows_unchecked(n, rows.clone()));
        return;
    }
    let others = full_mask(n) & !(1 << k);
    // every subset of the other points, plus k itself
    let mut sub = 0u64;
    loop {
        let row = sub | 1 << k;
        let consistent = rows.iter().enumerate().all(|(i, &ri)| {
            (ri >> k & 1 == 0 || row & !ri == 0) && (row >> i & 1 == 0 || ri & !row == 0)
        });
        if consistent {
            rows.push(row);
            extend_rows(n, rows, out);
            rows.pop();
        }
        sub = sub.wrapping_sub(others) & others;
        if sub == 0 {
            break;
        }
    }
}

/// Oracle for [`enumerate_preorders`]: every reflexive relation, kept when
/// transitive. Visits `2^(n²-n)` relations.
pub fn naive_preorders(n: usize) -> Result<Vec<Preorder>, MinerError> {
    check_size(n)?;
    let off_diagonal: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << off_diagonal.len() {
        let mut rows: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for (bit, &(x, y)) in off_diagonal.iter().enumerate() {
            if choice >> bit & 1 == 1 {
                rows[x] |= 1 << y;
            }
        }
        let leq = |x: usize, y: usize| rows[x] >> y & 1 == 1;
        let transitive = (0..n).all(|x| (0..n).all(|y| !leq(x, y) || (0..n).all(|z| !leq(y, z) || leq(x, z))));
        if transitive {
            out.push(Preorder::from_rows(n, rows).expect("checked transitive"));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub labeled_count: usize,
    pub homeo_class_count: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Every topology on `n` labelled points, or with `up_to_homeo` one
/// canonical representative per homeomorphism class in increasing
/// canonical-code order. The report carries both counts either way.
pub fn enumerate_topologies(n: usize, up_to_homeo: bool) -> Result<(Vec<FiniteSpace>, EnumerationReport), MinerError> {
    let start = Instant::now();
    let labeled: Vec<FiniteSpace> = enumerate_preorders(n)?.iter().map(FiniteSpace::from_preorder).collect();
    let mut classes: BTreeMap<u64, &FiniteSpace> = BTreeMap::new();
    for s in &labeled {
        classes.entry(canonical_code(s)?).or_insert(s);
    }
    let report = EnumerationReport {
        n,
        labeled_count: labeled.len(),
        homeo_class_count: classes.len(),
        elapsed: Duration::ZERO,
    };
    let spaces = if up_to_homeo {
        classes.values().map(|s| canonical_form(s)).collect::<Result<Vec<_>, _>>()?
    } else {
        labeled
    };
    Ok((spaces, EnumerationReport { elapsed: start.elapsed(), ..report }))
}

/// A space that violated some implication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceViolation {
    pub space: FiniteSpace,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub max_points: usize,
    pub spaces_checked: usize,
    /// `(n, number of topologies on n points)` for each size checked
    pub per_size: Vec<(usize, usize)>,
    pub failures: Vec<SpaceViolation>,
}

impl DiagramReport {
    pub fn violation_count(&self) -> usize {
        self.failures.iter().map(|f| f.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Classifies every topology on `1..=n` points and checks it against the
/// diagram with the finite-space equivalences.
pub fn verify_diagram(n: usize) -> Result<DiagramReport, MinerError> {
    verify_diagram_with(n, &StandardClassifier)
}

pub fn verify_diagram_with(n: usize, classifier: &dyn Classifier) -> Result<DiagramReport, MinerError> {
    check_size(n)?;
    let mut report = DiagramReport { max_points: n, spaces_checked: 0, per_size: Vec::new(), failures: Vec::new() };
    for k in 1..=n {
        let (spaces, _) = enumerate_topologies(k, false)?;
        report.per_size.push((k, spaces.len()));
        report.spaces_checked += spaces.len();
        for s in spaces {
            let violations = diagram::violations(&classifier.classify(&s), true);
            if !violations.is_empty() {
                report.failures.push(SpaceViolation { space: s, violations });
            }
        }
    }
    Ok(report)
}

/// One classified homeomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub n: usize,
    pub code: u64,
    pub space: FiniteSpace,
    pub axioms: AxiomVector,
}

/// Every homeomorphism class on `1..=max_n` points with its axiom vector,
/// ordered by carrier size and then canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub max_n: usize,
    pub entries: Vec<CensusEntry>,
}

impl Census {
    pub fn build(max_n: usize, classifier: &dyn Classifier) -> Result<Census, MinerError> {
        check_size(max_n)?;
        let mut entries = Vec::new();
        for n in 1..=max_n {
            for space in enumerate_topologies(n, true)?.0 {
                let code = canonical_code(&space)?;
                let axioms = classifier.classify(&space);
                entries.push(CensusEntry { n, code, space, axioms });
            }
        }
        Ok(Census { max_n, entries })
    }

    /// The first class satisfying every axiom of `satisfy` and none of
    /// `violate`.
    pub fn first(&self, satisfy: &[AxiomId], violate: &[AxiomId]) -> Option<&CensusEntry> {
        self.entries.iter().find(|e| {
            satisfy.iter().all(|&a| e.axioms.holds(a)) && violate.iter().all(|&b| !e.axioms.holds(b))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum WitnessOutcome {
    Found {
        n: usize,
        code: u64,
        space: FiniteSpace,
        /// no witness exists on fewer points
        minimal: bool,
    },
    NoneUpTo {
        n: usize,
        /// an infinite catalog space known to separate the query
        analytic: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub satisfy: Vec<AxiomId>,
    pub violate: Vec<AxiomId>,
    pub outcome: WitnessOutcome,
}

impl WitnessReport {
    pub fn witness(&self) -> Option<&FiniteSpace> {
        match &self.outcome {
            WitnessOutcome::Found { space, .. } => Some(space),
            WitnessOutcome::NoneUpTo { .. } => None,
        }
    }
}

fn normalize(axioms: &[AxiomId]) -> Vec<AxiomId> {
    axioms.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
}

fn check_query(satisfy: &[AxiomId], violate: &[AxiomId]) -> Result<(), MinerError> {
    let clash: Vec<AxiomId> = satisfy.iter().filter(|a| violate.contains(a)).copied().collect();
    if clash.is_empty() {
        Ok(())
    } else {
        Err(MinerError::ContradictoryQuery(normalize(&clash)))
    }
}

fn answer(census: &Census, satisfy: Vec<AxiomId>, violate: Vec<AxiomId>) -> WitnessReport {
    let outcome = match census.first(&satisfy, &violate) {
        // classes are visited by increasing size, so the first hit is minimal
        Some(e) => WitnessOutcome::Found { n: e.n, code: e.code, space: e.space.clone(), minimal: true },
        None => WitnessOutcome::NoneUpTo {
            n: census.max_n,
            analytic: catalog::analytic_witness(&satisfy, &violate).map(String::from),
        },
    };
    WitnessReport { satisfy, violate, outcome }
}

/// Smallest space, least in canonical code among those, that satisfies
/// all of `satisfy` and none of `violate`.
pub fn mine_witness(satisfy: &[AxiomId], violate: &[AxiomId], max_n: usize) -> Result<WitnessReport, MinerError> {
    check_query(satisfy, violate)?;
    let census = Census::build(max_n, &StandardClassifier)?;
    Ok(answer(&census, normalize(satisfy), normalize(violate)))
}

/// [`mine_witness`] against a prebuilt census.
pub fn mine_witness_in(census: &Census, satisfy: &[AxiomId], violate: &[AxiomId]) -> Result<WitnessReport, MinerError> {
    check_query(satisfy, violate)?;
    Ok(answer(census, normalize(satisfy), normalize(violate)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictnessRow {
    pub from: AxiomId,
    pub to: AxiomId,
    /// implied in every space by the diagram
    pub implied_general: bool,
    /// implied on finite spaces
    pub implied_finite: bool,
    /// search for a space with `from` true and `to` false
    pub report: WitnessReport,
}

impl StrictnessRow {
    /// A finite implication with a finite counterexample: a bug in the
    /// classifier or in the diagram.
    pub fn is_contradiction(&self) -> bool {
        self.implied_finite && self.report.witness().is_some()
    }
}

/// Every ordered pair of distinct separation axioms, each with a search
/// for a space separating them.
pub fn strictness_table(max_n: usize) -> Result<Vec<StrictnessRow>, MinerError> {
    let census = Census::build(max_n, &StandardClassifier)?;
    let mut rows = Vec::new();
    for a in AxiomId::SEPARATION {
        for b in AxiomId::SEPARATION.into_iter().filter(|&b| b != a) {
            rows.push(StrictnessRow {
                from: a,
                to: b,
                implied_general: diagram::implies(a, b, false),
                implied_finite: diagram::implies(a, b, true),
                report: answer(&census, vec![a], vec![b]),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{AxiomId::*, FlippedClassifier};
    use crate::catalog::{attachment5, khalimsky_interval, open_point3, sierpinski};
    use crate::space::is_homeomorphic;

    #[test]
    fn preorder_counts_match_the_oracle() {
        for (n, expected) in [(1, 1), (2, 4), (3, 29), (4, 355)] {
            let fast = enumerate_preorders(n).unwrap();
            let slow = naive_preorders(n).unwrap();
            assert_eq!(fast.len(), expected);
            let a: BTreeSet<_> = fast.iter().map(Preorder::code).collect();
            let b: BTreeSet<_> = slow.iter().map(Preorder::code).collect();
            assert_eq!(a, b);
            assert_eq!(a.len(), expected);
        }
    }

    #[test]
    fn class_counts() {
        for (n, labeled, classes) in [(1, 1, 1), (2, 4, 3), (3, 29, 9), (4, 355, 33)] {
            let (spaces, report) = enumerate_topologies(n, true).unwrap();
            assert_eq!((report.labeled_count, report.homeo_class_count), (labeled, classes));
            assert_eq!(spaces.len(), classes);
            for (i, a) in spaces.iter().enumerate() {
                for b in &spaces[i + 1..] {
                    assert!(!is_homeomorphic(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_topologies(6, false), Err(MinerError::CarrierTooLarge { .. })));
        assert!(enumerate_topologies(0, false).is_err());
        assert!(matches!(mine_witness(&[T1], &[T1], 3), Err(MinerError::ContradictoryQuery(_))));
    }

    #[test]
    fn diagram_holds_on_three_points() {
        let r = verify_diagram(3).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
        assert_eq!(r.per_size, vec![(1, 1), (2, 4), (3, 29)]);
        assert_eq!(r.spaces_checked, 34);
    }

    #[test]
    fn flipped_t_d_is_caught() {
        let r = verify_diagram_with(3, &FlippedClassifier(TD)).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn rediscovers_the_small_examples() {
        let census = Census::build(4, &StandardClassifier).unwrap();
        let cases = [
            (THalf, TNwdOrRo, sierpinski(2).unwrap()),
            (TD, TQuarter, sierpinski(3).unwrap()),
            (TClosedOrRo, T1, khalimsky_interval(-1, 1).unwrap()),
            (TOmegaBp, TD, open_point3()),
        ];
        for (a, b, expected) in cases {
            let r = mine_witness_in(&census, &[a], &[b]).unwrap();
            let w = r.witness().unwrap_or_else(|| panic!("{a} without {b}"));
            assert!(is_homeomorphic(w, &expected).unwrap(), "{a} without {b}: {:?}", w.opens());
        }
        let r = mine_witness_in(&census, &[T1], &[T0]).unwrap();
        assert_eq!(r.outcome, WitnessOutcome::NoneUpTo { n: 4, analytic: None });
    }

    #[test]
    fn attachment_pair_has_a_witness_no_larger_than_five() {
        let census = Census::build(5, &StandardClassifier).unwrap();
        let r = mine_witness_in(&census, &[TClosedMeetsRo], &[TClosedOrRo]).unwrap();
        match r.outcome {
            WitnessOutcome::Found { n, .. } => assert!(n <= attachment5().carrier_size()),
            other => panic!("no witness: {other:?}"),
        }
    }

    #[test]
    fn strictness_table_is_consistent() {
        let rows = strictness_table(3).unwrap();
        assert_eq!(rows.len(), 110);
        assert!(rows.iter().all(|r| !r.is_contradiction()));
        let finite_only = rows.iter().filter(|r| r.implied_finite && !r.implied_general);
        for r in finite_only {
            assert!(r.report.witness().is_none());
        }
    }
}
