//! Space constructors and the catalog of named example spaces.
//!
//! Finite entries carry a concrete space and the claims made about it;
//! analytic entries describe infinite spaces by their stated
//! classification only and are never computed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebras::{restrict_family, SetFamily};
use crate::axioms::{classify_space, AxiomId, AxiomId::*, AxiomVector, Classifier};
use crate::diagram;
use crate::error::SpaceError;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::{union_closure, FiniteSpace, Preorder};

/// Subspace on `a`, points renumbered in increasing order.
pub fn subspace(s: &FiniteSpace, a: PointSet) -> Result<FiniteSpace, SpaceError> {
    if a.is_empty() {
        return Err(SpaceError::EmptySubspace);
    }
    if a.carrier_size() != s.carrier_size() {
        return Err(SpaceError::CarrierMismatch { carrier: s.carrier_size(), point: a.carrier_size() });
    }
    let opens = SetFamily::new(s.carrier_size(), s.opens().iter().copied());
    let restricted = restrict_family(&opens, a);
    let sub = FiniteSpace::from_masks_unchecked(a.len(), restricted.iter().map(|u| u.bits()));
    match s.labels() {
        Some(labels) => sub.with_labels(a.iter().map(|x| labels[x].clone()).collect()),
        None => Ok(sub),
    }
}

/// Index of the pair `(x, y)` in [`product`], row-major.
pub fn product_point(b_size: usize, x: usize, y: usize) -> usize {
    x * b_size + y
}

/// Binary product; opens are unions of open rectangles.
pub fn product(a: &FiniteSpace, b: &FiniteSpace) -> Result<FiniteSpace, SpaceError> {
    let (na, nb) = (a.carrier_size(), b.carrier_size());
    let n = na * nb;
    if n > MAX_POINTS {
        return Err(SpaceError::CarrierTooLarge { size: n, max: MAX_POINTS });
    }
    let rectangle = |u: PointSet, v: PointSet| {
        u.iter()
            .flat_map(|x| v.iter().map(move |y| product_point(nb, x, y)))
            .fold(0u64, |acc, p| acc | 1 << p)
    };
    let rects: Vec<u64> = a
        .opens()
        .iter()
        .flat_map(|&u| b.opens().iter().map(move |&v| rectangle(u, v)))
        .collect();
    let opens = union_closure(rects);
    let labels = (0..na)
        .flat_map(|x| (0..nb).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
        .collect();
    FiniteSpace::from_masks_unchecked(n, opens).with_labels(labels)
}

/// Chain `0 ≤ 1 ≤ … ≤ n-1` with its Alexandrov topology: opens are the
/// final segments.
pub fn sierpinski(n: usize) -> Result<FiniteSpace, SpaceError> {
    if n == 0 {
        return Err(SpaceError::EmptyCarrier);
    }
    if n > MAX_POINTS {
        return Err(SpaceError::CarrierTooLarge { size: n, max: MAX_POINTS });
    }
    Ok(FiniteSpace::from_preorder(&Preorder::chain(n)))
}

/// The segment `[a, b]` of the digital line, where `{2k-1, 2k, 2k+1}` are
/// the generating open sets. Point `p` gets index `p - a`.
pub fn khalimsky_interval(a: i64, b: i64) -> Result<FiniteSpace, SpaceError> {
    if a > b {
        return Err(SpaceError::EmptyCarrier);
    }
    let len = (b - a + 1) as usize;
    if len > MAX_POINTS {
        return Err(SpaceError::CarrierTooLarge { size: len, max: MAX_POINTS });
    }
    let in_range = |p: i64| (a..=b).contains(&p);
    let subbasis: Vec<PointSet> = ((a - 1).div_euclid(2)..=(b + 1).div_euclid(2) + 1)
        .map(|k| {
            let pts = [2 * k - 1, 2 * k, 2 * k + 1].into_iter().filter(|&p| in_range(p));
            PointSet::from_points(len, pts.map(|p| (p - a) as usize)).expect("point in range")
        })
        .collect();
    let labels = (a..=b).map(|p| p.to_string()).collect();
    FiniteSpace::from_subbasis(len, &subbasis)?.with_labels(labels)
}

/// Two digital-line segments glued at an end: points
/// `-1, 0, 1₋₁, 1₀, 1₁` as `0..5`, generated by `{-1}`, `{1₋₁, 1₀, 1₁}`,
/// `{1₋₁}` and `{1₁}`.
pub fn attachment5() -> FiniteSpace {
    let sub: Vec<PointSet> = [&[0usize][..], &[2, 3, 4], &[2], &[4]]
        .iter()
        .map(|pts| PointSet::from_points(5, pts.iter().copied()).unwrap())
        .collect();
    let labels = ["-1", "0", "1_-1", "1_0", "1_1"].map(String::from).to_vec();
    FiniteSpace::from_subbasis(5, &sub).unwrap().with_labels(labels).unwrap()
}

/// `{0, 1, 2}` where the only proper nonempty open set is `{0}`.
pub fn open_point3() -> FiniteSpace {
    let fam = [PointSet::empty(3), PointSet::singleton(3, 0), PointSet::full(3)];
    FiniteSpace::from_open_sets(3, &fam).unwrap()
}

/// Points `0 ≤ 1 ≤ 2` and `1 ≤ 3`: opens `{2}`, `{3}`, `{1, 2, 3}` and
/// their unions.
pub fn fan4() -> FiniteSpace {
    let order = Preorder::generated_by(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
    FiniteSpace::from_preorder(&order)
}

/// Where a claim comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "note", rename_all = "lowercase")]
pub enum Basis {
    /// stated in the literature about this example
    Literature(String),
    /// follows by direct computation or from other claims
    Derived(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub axiom: AxiomId,
    pub holds: bool,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntrySpace {
    Finite(FiniteSpace),
    /// an infinite space known only by its stated classification
    Analytic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub space: EntrySpace,
    pub expected: Vec<Claim>,
    pub notes: String,
}

impl CatalogEntry {
    pub fn finite_space(&self) -> Option<&FiniteSpace> {
        match &self.space {
            EntrySpace::Finite(s) => Some(s),
            EntrySpace::Analytic => None,
        }
    }

    pub fn is_analytic(&self) -> bool {
        matches!(self.space, EntrySpace::Analytic)
    }

    pub fn expected_vector(&self) -> AxiomVector {
        self.expected.iter().map(|c| (c.axiom, c.holds)).collect()
    }

    /// Claims the classifier disagrees with. Always empty for analytic
    /// entries; check those with [`CatalogEntry::inconsistencies`].
    pub fn mismatches(&self, classifier: &dyn Classifier) -> Vec<Claim> {
        let Some(space) = self.finite_space() else {
            return Vec::new();
        };
        self.expected
            .iter()
            .filter(|c| classifier.check(space, c.axiom) != c.holds)
            .cloned()
            .collect()
    }

    /// Claims that contradict the implications valid in every space.
    pub fn inconsistencies(&self) -> Vec<crate::axioms::Violation> {
        diagram::inconsistencies(&self.expected_vector(), !self.is_analytic())
    }

    /// Axioms known to hold and known to fail. Finite entries are fully
    /// classified; analytic ones are closed under the general implications.
    pub fn known(&self) -> (Vec<AxiomId>, Vec<AxiomId>) {
        match &self.space {
            EntrySpace::Finite(s) => {
                let v = classify_space(s);
                let (t, f): (Vec<_>, Vec<_>) = v.iter().partition(|&(_, h)| h);
                (t.into_iter().map(|p| p.0).collect(), f.into_iter().map(|p| p.0).collect())
            }
            EntrySpace::Analytic => {
                let v = self.expected_vector();
                (
                    diagram::consequences(&v, false).into_iter().collect(),
                    diagram::refutations(&v, false).into_iter().collect(),
                )
            }
        }
    }
}

fn lit(axiom: AxiomId, holds: bool, note: &str) -> Claim {
    Claim { axiom, holds, basis: Basis::Literature(note.to_string()) }
}

fn derived(axiom: AxiomId, holds: bool, note: &str) -> Claim {
    Claim { axiom, holds, basis: Basis::Derived(note.to_string()) }
}

fn finite(name: &'static str, title: &'static str, space: FiniteSpace, expected: Vec<Claim>, notes: &str) -> CatalogEntry {
    CatalogEntry { name, title, space: EntrySpace::Finite(space), expected, notes: notes.to_string() }
}

fn analytic(name: &'static str, title: &'static str, expected: Vec<Claim>, notes: &str) -> CatalogEntry {
    CatalogEntry { name, title, space: EntrySpace::Analytic, expected, notes: notes.to_string() }
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries = vec![
        finite(
            "antidiscrete2",
            "anti-discrete doubleton",
            FiniteSpace::antidiscrete(2),
            std::iter::once(lit(TInfBp, false, "anti-discrete doubleton is not T_∞-BP"))
                .chain(
                    AxiomId::SEPARATION
                        .into_iter()
                        .filter(|&a| a != TInfBp)
                        .map(|a| derived(a, false, "implies T_INF_BP")),
                )
                .chain([derived(Symmetric, true, "no open set separates anything")])
                .collect(),
            "Every singleton is dense and not open.",
        ),
        finite(
            "discrete3",
            "discrete three-point space",
            FiniteSpace::discrete(3),
            AxiomId::ALL.into_iter().map(|a| derived(a, true, "every set is clopen")).collect(),
            "",
        ),
        finite(
            "sierpinski2",
            "Sierpiński space S₂",
            sierpinski(2).unwrap(),
            vec![
                lit(THalf, true, "S₂ is closed-or-open"),
                lit(TNwdOrRo, false, "S₂ is not nwd-or-regular-open"),
                lit(Subfit, false, "S₂ is not subfit"),
                lit(RoSubfit, true, "S₂ is RO-subfit"),
            ],
            "Opens ∅, {1}, X.",
        ),
        finite(
            "sierpinski3",
            "three-point Sierpiński chain S₃",
            sierpinski(3).unwrap(),
            vec![
                lit(TD, true, "S₃ is T_Constructible"),
                lit(TQuarter, false, "S₃ is not closed-or-G_∞"),
                lit(TNwdOrRo, false, "S₃ is not nwd-or-regular-open"),
            ],
            "Opens ∅, {2}, {1,2}, X.",
        ),
    ];
    for n in 4..=6usize {
        let name: &'static str = ["sierpinski4", "sierpinski5", "sierpinski6"][n - 4];
        let title: &'static str = ["Sierpiński chain S₄", "Sierpiński chain S₅", "Sierpiński chain S₆"][n - 4];
        entries.push(finite(
            name,
            title,
            sierpinski(n).unwrap(),
            vec![
                derived(TD, true, "finite T₀ spaces are T_D"),
                derived(TQuarter, false, "middle points are neither open nor closed"),
                derived(TNwdOrRo, false, "the open top point is neither nowhere dense nor regular open"),
            ],
            "Finite truncation of S_ω. Unlike S_ω it is never T_Nwd: the top point is open.",
        ));
    }
    entries.extend([
        finite(
            "khalimsky3",
            "digital line segment {-1, 0, 1}",
            khalimsky_interval(-1, 1).unwrap(),
            vec![
                lit(TClosedOrRo, true, "odd singletons are regular open, even ones closed"),
                lit(TClosedOrNwd, false, "odd singletons are open, hence not nowhere dense or closed"),
            ],
            "One open segment of the digital line.",
        ),
        finite(
            "khalimsky5",
            "digital line segment {-2, …, 2}",
            khalimsky_interval(-2, 2).unwrap(),
            vec![
                derived(THalf, true, "odd singletons open, even ones closed"),
                derived(TClosedOrRo, false, "ro{1} = {1, 2} because the end point 2 has neighbourhood {1, 2}"),
                derived(TClosedOrNwd, false, "odd singletons are open and not closed"),
            ],
            "Even end points break the regular openness of the odd singletons next to them.",
        ),
        finite(
            "attachment5",
            "two digital segments attached at an end",
            attachment5(),
            vec![
                lit(TClosedMeetsRo, true, "{1₀} = {0, 1₀} ∩ {1₋₁, 1₀, 1₁}"),
                lit(TClosedOrNwd, false, "not closed-or-nwd"),
                lit(TQuarter, false, "not closed-or-G_∞"),
                derived(RoSubfit, false, "point 1₀ with regular open {1₋₁, 1₀, 1₁}"),
            ],
            "Points -1, 0, 1_-1, 1_0, 1_1 as 0..4.",
        ),
        finite(
            "open-point3",
            "{0, 1, 2} with opens ∅, {0}, X",
            open_point3(),
            vec![
                lit(TOmegaBp, true, "T_ω-BP"),
                derived(TD, false, "cl{1} ∩ U₁ = {1, 2}"),
            ],
            "Its closed nowhere dense subspace {1, 2} is anti-discrete.",
        ),
        finite(
            "open-point3-tail",
            "subspace {1, 2} of open-point3",
            subspace(&open_point3(), PointSet::from_points(3, [1, 2]).unwrap()).unwrap(),
            vec![lit(TInfBp, false, "the closed nowhere dense subspace is not T_∞-BP")],
            "Homeomorphic to antidiscrete2.",
        ),
        finite(
            "fan4",
            "two open points above a two-point chain",
            fan4(),
            vec![
                derived(TNwdOrRo, true, "0 and 1 are nowhere dense, {2} and {3} regular open"),
                derived(TClosedMeetsRo, false, "X is the only regular open set containing 1 and cl{1} = {0, 1}"),
                derived(TD, true, "{1} = cl{1} ∩ {1, 2, 3}"),
            ],
            "Smallest space with T_NWD_OR_RO but not T_CLOSED_MEETS_RO, found by exhaustive search.",
        ),
        analytic(
            "kappa-space",
            "κ ∪ {κ}: opens contain κ and are cofinite",
            vec![
                lit(T0, true, "compact T₀"),
                lit(TQuarter, true, "closed-or-G_{<κ⁺}, hence closed-or-G_∞"),
                lit(TOmegaBp, false, "not T_κ-BP, hence not T_ω-BP"),
                lit(Subfit, true, "κ-subfit, hence subfit"),
                lit(Symmetric, false, "not κ⁺-subfit, hence not ∞-subfit"),
            ],
            "κ regular infinite. Also T_{κ⁺-Borel} and its product with [0,1] is compact T_Nwd, \
             closed-or-G_{<κ⁺}, and not T_κ-Borel. Separates the G-levels, which finite spaces cannot.",
        ),
        analytic(
            "sierpinski-omega",
            "S_ω: ω with its Alexandrov topology",
            vec![
                lit(TD, true, "T_Constructible"),
                lit(TClosedOrNwd, true, "T_Nwd: every singleton nowhere dense"),
                lit(TQuarter, false, "not closed-or-G_∞"),
                lit(TClosedMeetsRo, false, "not closed-meets-regular-open"),
            ],
            "Limit of the finite chains sierpinski2..6.",
        ),
        analytic(
            "khalimsky-line",
            "the digital line ℤ",
            vec![
                lit(TClosedOrRo, true, "odd singletons regular open, even ones closed"),
                lit(TClosedOrNwd, false, "odd singletons are open"),
            ],
            "Its regular closed subspace {0, 1, 2} is not nwd-or-regular-open.",
        ),
        analytic(
            "antidiscrete2-x-interval",
            "anti-discrete doubleton × [0, 1]",
            vec![
                lit(T0, false, "not T₀"),
                lit(TClosedOrNwd, true, "T_Nwd: every singleton nowhere dense"),
            ],
            "",
        ),
        analytic(
            "khalimsky-square",
            "square of the digital line",
            vec![lit(TQuarter, false, "not even closed-or-G_∞")],
            "Products destroy closed-or-regular-open.",
        ),
    ]);
    entries
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// For each pair `(a, b)` such that some catalog entry satisfies `a` and
/// fails `b`, the first such entry.
pub fn non_implication_witnesses() -> BTreeMap<(AxiomId, AxiomId), String> {
    let mut out = BTreeMap::new();
    for entry in catalog() {
        let (holds, fails) = entry.known();
        for &a in &holds {
            for &b in &fails {
                out.entry((a, b)).or_insert_with(|| entry.name.to_string());
            }
        }
    }
    out
}

/// First analytic entry known to satisfy all of `satisfy` and fail all of
/// `violate`.
pub fn analytic_witness(satisfy: &[AxiomId], violate: &[AxiomId]) -> Option<&'static str> {
    catalog().into_iter().filter(CatalogEntry::is_analytic).find_map(|e| {
        let (holds, fails) = e.known();
        (satisfy.iter().all(|a| holds.contains(a)) && violate.iter().all(|b| fails.contains(b))).then_some(e.name)
    })
}
