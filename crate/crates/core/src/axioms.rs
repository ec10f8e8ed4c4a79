//! Separation axioms of the form "every singleton belongs to a family",
//! decided pointwise on finite spaces, plus the auxiliary predicates
//! (symmetry, subfitness, nodec) that interact with them.
//!
//! On a finite space every intersection of open sets is open, so the
//! G_{<κ} levels (`ω`, `δ`, `κ`, `∞`) all collapse to "open". The axioms
//! are still decided separately where the definitions differ: `T_QUARTER`
//! tests the smallest neighbourhood, `T_HALF` tests membership in the
//! topology, `T0` uses the classical two-point definition. Their agreement
//! on finite spaces is verified, not assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::operators::{self, closure};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("axiom vector is missing {0:?}")]
    IncompleteVector(Vec<AxiomId>),
}

/// Which singleton pattern an axiom uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    /// closed, or in the level family
    ClosedOr,
    /// closed set intersected with a member of the level family
    ClosedMeets,
    /// nowhere dense, or in the level family
    NwdOr,
}

/// The family the pattern ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    Closed,
    RegularOpen,
    Open,
    /// any G_{<κ} level; on finite spaces these are the open sets
    GInfinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    T1,
    TClosedOrNwd,
    TClosedOrRo,
    TClosedMeetsRo,
    TNwdOrRo,
    THalf,
    TD,
    TOmegaBp,
    TQuarter,
    T0,
    TInfBp,
    Symmetric,
    Subfit,
    RoSubfit,
    Nodec,
}

use AxiomId::*;

impl AxiomId {
    pub const SEPARATION: [AxiomId; 11] =
        [T1, TClosedOrNwd, TClosedOrRo, TClosedMeetsRo, TNwdOrRo, THalf, TD, TOmegaBp, TQuarter, T0, TInfBp];
    pub const AUXILIARY: [AxiomId; 4] = [Symmetric, Subfit, RoSubfit, Nodec];
    pub const ALL: [AxiomId; 15] = [
        T1,
        TClosedOrNwd,
        TClosedOrRo,
        TClosedMeetsRo,
        TNwdOrRo,
        THalf,
        TD,
        TOmegaBp,
        TQuarter,
        T0,
        TInfBp,
        Symmetric,
        Subfit,
        RoSubfit,
        Nodec,
    ];

    /// Stable identifier used in JSON and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            T1 => "T1",
            TClosedOrNwd => "T_CLOSED_OR_NWD",
            TClosedOrRo => "T_CLOSED_OR_RO",
            TClosedMeetsRo => "T_CLOSED_MEETS_RO",
            TNwdOrRo => "T_NWD_OR_RO",
            THalf => "T_HALF",
            TD => "T_D",
            TOmegaBp => "T_OMEGA_BP",
            TQuarter => "T_QUARTER",
            T0 => "T0",
            TInfBp => "T_INF_BP",
            Symmetric => "SYMMETRIC",
            Subfit => "SUBFIT",
            RoSubfit => "RO_SUBFIT",
            Nodec => "NODEC",
        }
    }

    /// Equivalent names from the literature.
    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            T1 => &["T_1", "T_Closed"],
            TClosedOrNwd => &["alphaT_1", "αT_1", "feebly-T_1", "T_ClosedOrNwd"],
            TClosedOrRo => &["T_3/4", "T¾", "T_ClosedOrRO"],
            TClosedMeetsRo => &["T_ClosedMeetsRO"],
            TNwdOrRo => &["semi-T_1", "T_NwdOrRO"],
            THalf => &["T_1/2", "T½", "T_ES", "T_ClosedOrOpen", "T_ClosedOrG<omega"],
            TD => &["T_Constructible", "T_omega-Borel", "T_ω-Borel"],
            TOmegaBp => &[
                "alphaT_D",
                "alphaT_1/2",
                "semi-T_D",
                "semi-T_1/2",
                "T_OpenOrNwd",
                "T_omega-BP",
                "T_ω-BP",
            ],
            TQuarter => &["T_1/4", "T¼", "T_F", "T_ClosedOrGinf", "T_ClosedOrG∞"],
            T0 => &["T_0", "T_inf-Borel", "T_∞-Borel"],
            TInfBp => &["alphaT_0", "semi-T_0", "feebly-T_0", "T_inf-BP", "T_∞-BP"],
            Symmetric => &["R0", "R_0"],
            Subfit => &["omega-subfit", "ω-subfit"],
            RoSubfit => &["RO-subfit"],
            Nodec => &[],
        }
    }

    /// Position in the implication diagram: singleton pattern and level.
    pub fn coordinates(self) -> Option<(Pattern, Level)> {
        use Level::*;
        use Pattern::*;
        Some(match self {
            T1 => (ClosedOr, Closed),
            TClosedOrNwd => (NwdOr, Closed),
            TClosedOrRo => (ClosedOr, RegularOpen),
            TClosedMeetsRo => (ClosedMeets, RegularOpen),
            TNwdOrRo => (NwdOr, RegularOpen),
            THalf => (ClosedOr, Open),
            TD => (ClosedMeets, Open),
            TOmegaBp => (NwdOr, Open),
            TQuarter => (ClosedOr, GInfinity),
            T0 => (ClosedMeets, GInfinity),
            TInfBp => (NwdOr, GInfinity),
            Symmetric | Subfit | RoSubfit | Nodec => return None,
        })
    }

    pub fn is_separation(self) -> bool {
        self.coordinates().is_some()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, '_' | '-' | ' ' | '{' | '}'))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for AxiomId {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = normalize(s);
        AxiomId::ALL
            .into_iter()
            .find(|a| normalize(a.name()) == key || a.aliases().iter().any(|al| normalize(al) == key))
            .ok_or_else(|| AxiomError::UnknownAxiom(s.to_string()))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Truth values for some or all axioms of one space.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomVector(BTreeMap<AxiomId, bool>);

impl AxiomVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, a: AxiomId) -> Option<bool> {
        self.0.get(&a).copied()
    }

    /// Value of `a`; panics if absent.
    pub fn holds(&self, a: AxiomId) -> bool {
        self.get(a).unwrap_or_else(|| panic!("{a} missing from axiom vector"))
    }

    pub fn set(&mut self, a: AxiomId, value: bool) {
        self.0.insert(a, value);
    }

    pub fn with(mut self, a: AxiomId, value: bool) -> Self {
        self.set(a, value);
        self
    }

    pub fn missing(&self) -> Vec<AxiomId> {
        AxiomId::ALL.into_iter().filter(|a| !self.0.contains_key(a)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing().is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AxiomId, bool)> + '_ {
        self.0.iter().map(|(&a, &v)| (a, v))
    }
}

impl FromIterator<(AxiomId, bool)> for AxiomVector {
    fn from_iter<I: IntoIterator<Item = (AxiomId, bool)>>(iter: I) -> Self {
        AxiomVector(iter.into_iter().collect())
    }
}

/// How a point's singleton sits in the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointClass {
    pub point: usize,
    pub is_closed: bool,
    pub is_open: bool,
    pub is_clopen: bool,
    pub is_regular_open: bool,
    pub is_nwd: bool,
    /// `{x} = cl{x} ∩ U_x`
    pub is_locally_closed: bool,
    #[serde(with = "point_list")]
    pub min_nbhd: PointSet,
}

mod point_list {
    use super::PointSet;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(set: &PointSet, s: S) -> Result<S::Ok, S::Error> {
        (set.carrier_size(), set.iter().collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PointSet, D::Error> {
        let (n, pts) = <(usize, Vec<usize>)>::deserialize(d)?;
        PointSet::from_points(n, pts).map_err(serde::de::Error::custom)
    }
}

pub fn classify_point(s: &FiniteSpace, x: usize) -> PointClass {
    let single = s.singleton(x);
    let is_closed = s.is_closed(single);
    let is_open = s.is_open(single);
    let min_nbhd = s.min_nbhd(x);
    PointClass {
        point: x,
        is_closed,
        is_open,
        is_clopen: is_closed && is_open,
        is_regular_open: operators::is_regular_open(s, single),
        is_nwd: operators::is_nwd(s, single),
        is_locally_closed: closure(s, single) & min_nbhd == single,
        min_nbhd,
    }
}

pub fn classify_points(s: &FiniteSpace) -> Vec<PointClass> {
    s.points().map(|x| classify_point(s, x)).collect()
}

/// Is `{x}` of the form `F ∩ U` with `F` closed and `U` from `family`?
fn meets_pattern(s: &FiniteSpace, x: usize, closed: &[PointSet], family: &[PointSet]) -> bool {
    let single = s.singleton(x);
    closed
        .iter()
        .filter(|f| f.contains(x))
        .any(|&f| family.iter().filter(|u| u.contains(x)).any(|&u| f & u == single))
}

fn every_point(s: &FiniteSpace, pred: impl Fn(usize) -> bool) -> bool {
    s.points().all(pred)
}

/// Decides one axiom or auxiliary predicate.
pub fn check_axiom(s: &FiniteSpace, a: AxiomId) -> bool {
    let closed = |x: usize| s.is_closed(s.singleton(x));
    let open = |x: usize| s.is_open(s.singleton(x));
    let nwd = |x: usize| operators::is_nwd(s, s.singleton(x));
    let ro = |x: usize| operators::is_regular_open(s, s.singleton(x));
    let g_inf = |x: usize| s.min_nbhd(x) == s.singleton(x);
    match a {
        T1 => every_point(s, closed),
        TClosedOrNwd => every_point(s, |x| closed(x) || nwd(x)),
        TClosedOrRo => every_point(s, |x| closed(x) || ro(x)),
        TClosedMeetsRo => {
            let closed_sets = s.closed_sets();
            let ro_sets = operators::regular_open_sets(s);
            every_point(s, |x| meets_pattern(s, x, &closed_sets, &ro_sets))
        }
        TNwdOrRo => every_point(s, |x| nwd(x) || ro(x)),
        THalf => every_point(s, |x| closed(x) || open(x)),
        TD => {
            let closed_sets = s.closed_sets();
            every_point(s, |x| meets_pattern(s, x, &closed_sets, s.opens()))
        }
        TOmegaBp => every_point(s, |x| nwd(x) || open(x)),
        TQuarter => every_point(s, |x| closed(x) || g_inf(x)),
        T0 => s.points().all(|x| {
            (x + 1..s.carrier_size()).all(|y| s.opens().iter().any(|u| u.contains(x) != u.contains(y)))
        }),
        TInfBp => every_point(s, |x| nwd(x) || g_inf(x)),
        Symmetric => is_symmetric(s),
        Subfit => is_subfit(s),
        RoSubfit => is_ro_subfit(s),
        Nodec => operators::is_nodec(s),
    }
}

/// Separation of points by open sets is a symmetric relation.
pub fn is_symmetric(s: &FiniteSpace) -> bool {
    let separates = |x: usize, y: usize| s.opens().iter().any(|u| u.contains(x) && !u.contains(y));
    s.points().all(|x| s.points().all(|y| separates(x, y) == separates(y, x)))
}

fn subfit_over(s: &FiniteSpace, neighbourhoods: &[PointSet]) -> bool {
    let point_closures: Vec<PointSet> = s.points().map(|y| closure(s, s.singleton(y))).collect();
    s.points().all(|x| {
        neighbourhoods
            .iter()
            .filter(|u| u.contains(x))
            .all(|u| point_closures[x].iter().any(|y| point_closures[y].is_subset(u)))
    })
}

/// For every `x` and open `U ∋ x` some `y ∈ cl{x}` has `cl{y} ⊆ U`.
pub fn is_subfit(s: &FiniteSpace) -> bool {
    subfit_over(s, s.opens())
}

/// [`is_subfit`] with `U` ranging over regular open sets.
pub fn is_ro_subfit(s: &FiniteSpace) -> bool {
    subfit_over(s, &operators::regular_open_sets(s))
}

/// [`is_subfit`] with `U` ranging over G_∞ sets, which on a finite space
/// reduces to the smallest neighbourhood of each point.
pub fn is_infinity_subfit(s: &FiniteSpace) -> bool {
    let mins: Vec<PointSet> = s.points().map(|x| s.min_nbhd(x)).collect();
    subfit_over(s, &mins)
}

/// Every singleton is nowhere dense. Never true for a nonempty finite space.
pub fn is_t_nwd(s: &FiniteSpace) -> bool {
    s.points().all(|x| operators::is_nwd(s, s.singleton(x)))
}

/// Something that decides axioms. The standard implementation is
/// [`check_axiom`]; tests substitute deliberately broken ones.
pub trait Classifier {
    fn check(&self, s: &FiniteSpace, a: AxiomId) -> bool;

    fn classify(&self, s: &FiniteSpace) -> AxiomVector {
        AxiomId::ALL.into_iter().map(|a| (a, self.check(s, a))).collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct StandardClassifier;

impl Classifier for StandardClassifier {
    fn check(&self, s: &FiniteSpace, a: AxiomId) -> bool {
        check_axiom(s, a)
    }
}

/// Negates one axiom of the standard classifier.
#[derive(Debug, Clone, Copy)]
pub struct FlippedClassifier(pub AxiomId);

impl Classifier for FlippedClassifier {
    fn check(&self, s: &FiniteSpace, a: AxiomId) -> bool {
        check_axiom(s, a) != (a == self.0)
    }
}

pub fn classify_space(s: &FiniteSpace) -> AxiomVector {
    StandardClassifier.classify(s)
}

/// One failed implication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub premises: Vec<AxiomId>,
    pub conclusion: AxiomId,
    pub kind: crate::diagram::RuleKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<&str> = self.premises.iter().map(|a| a.name()).collect();
        write!(f, "{} ⇒ {}", premises.join(" ∧ "), self.conclusion)
    }
}

/// Every implication of the diagram (transitively closed, finite-space
/// equivalences included) and every compound rule that `v` violates.
pub fn check_diagram(v: &AxiomVector) -> Result<Vec<Violation>, AxiomError> {
    let missing = v.missing();
    if !missing.is_empty() {
        return Err(AxiomError::IncompleteVector(missing));
    }
    Ok(crate::diagram::violations(v, true))
}
