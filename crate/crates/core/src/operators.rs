//! Closure-type operators and the near-open set classes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Smallest closed superset of `a`.
pub fn closure(s: &FiniteSpace, a: PointSet) -> PointSet {
    let outside = s
        .opens()
        .iter()
        .filter(|u| u.is_disjoint(&a))
        .fold(s.empty_set(), |acc, &u| acc | u);
    outside.complement()
}

/// Largest open subset of `a`.
pub fn interior(s: &FiniteSpace, a: PointSet) -> PointSet {
    s.opens()
        .iter()
        .filter(|u| u.is_subset(&a))
        .fold(s.empty_set(), |acc, &u| acc | u)
}

pub fn boundary(s: &FiniteSpace, a: PointSet) -> PointSet {
    closure(s, a) - interior(s, a)
}

/// `int(cl A) = ∅`.
pub fn is_nwd(s: &FiniteSpace, a: PointSet) -> bool {
    interior(s, closure(s, a)).is_empty()
}

pub fn is_dense(s: &FiniteSpace, a: PointSet) -> bool {
    closure(s, a).is_full()
}

/// `ro(A) = int(cl A)`.
pub fn regular_open_interior(s: &FiniteSpace, a: PointSet) -> PointSet {
    interior(s, closure(s, a))
}

pub fn is_regular_open(s: &FiniteSpace, a: PointSet) -> bool {
    regular_open_interior(s, a) == a
}

/// The regular open sets, obtained as `ro(U)` for open `U`.
pub fn regular_open_sets(s: &FiniteSpace) -> Vec<PointSet> {
    let ro: BTreeSet<PointSet> = s.opens().iter().map(|&u| regular_open_interior(s, u)).collect();
    ro.into_iter().collect()
}

/// Points whose singleton is nowhere dense.
pub fn nwd_points(s: &FiniteSpace) -> PointSet {
    s.points()
        .filter(|&x| is_nwd(s, s.singleton(x)))
        .fold(s.empty_set(), |acc, x| acc.with(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NearOpenKind {
    Semi,
    Pre,
    Alpha,
    Beta,
}

impl NearOpenKind {
    pub const ALL: [NearOpenKind; 4] = [NearOpenKind::Semi, NearOpenKind::Pre, NearOpenKind::Alpha, NearOpenKind::Beta];

    pub fn name(self) -> &'static str {
        match self {
            NearOpenKind::Semi => "semi",
            NearOpenKind::Pre => "pre",
            NearOpenKind::Alpha => "alpha",
            NearOpenKind::Beta => "beta",
        }
    }
}

impl fmt::Display for NearOpenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-open", self.name())
    }
}

impl FromStr for NearOpenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.strip_suffix("-open").unwrap_or(&key);
        NearOpenKind::ALL
            .into_iter()
            .find(|k| k.name() == key || (key == "semipre" && *k == NearOpenKind::Beta))
            .ok_or_else(|| format!("unknown near-open kind `{s}`"))
    }
}

/// Decides the near-open class from its operator form.
pub fn is_near_open(s: &FiniteSpace, a: PointSet, kind: NearOpenKind) -> bool {
    let cl = |b| closure(s, b);
    let int = |b| interior(s, b);
    let bound = match kind {
        NearOpenKind::Semi => cl(int(a)),
        NearOpenKind::Pre => int(cl(a)),
        NearOpenKind::Alpha => int(cl(int(a))),
        NearOpenKind::Beta => cl(int(cl(a))),
    };
    a.is_subset(&bound)
}

/// Decides the near-open class by searching for open witnesses of the
/// sandwich definition. Independent of [`is_near_open`].
pub fn is_near_open_by_witness(s: &FiniteSpace, a: PointSet, kind: NearOpenKind) -> bool {
    let opens = s.opens();
    match kind {
        NearOpenKind::Semi => opens.iter().any(|&u| u.is_subset(&a) && a.is_subset(&closure(s, u))),
        NearOpenKind::Pre => {
            let cl_a = closure(s, a);
            opens.iter().any(|&u| a.is_subset(&u) && u.is_subset(&cl_a))
        }
        NearOpenKind::Alpha => opens.iter().filter(|u| u.is_subset(&a)).any(|&u| {
            let cl_u = closure(s, u);
            opens.iter().any(|&v| a.is_subset(&v) && v.is_subset(&cl_u))
        }),
        NearOpenKind::Beta => {
            let cl_a = closure(s, a);
            opens.iter().any(|&u| a.is_subset(&closure(s, u)) && u.is_subset(&cl_a))
        }
    }
}

/// Every α-open set, found by testing each subset with the operator form.
/// Exponential in the carrier size.
pub fn alpha_open_sets(s: &FiniteSpace) -> Vec<PointSet> {
    PointSet::all_subsets(s.carrier_size())
        .filter(|&a| is_near_open(s, a, NearOpenKind::Alpha))
        .collect()
}

/// The α-modification `τ^α`, whose open sets are the differences `U \ N`
/// with `U` open and `N` nowhere dense.
pub fn alpha_modification(s: &FiniteSpace) -> FiniteSpace {
    let nwd = nwd_points(s);
    let mut family = BTreeSet::new();
    for &u in s.opens() {
        for n in (u & nwd).subsets() {
            family.insert(u - n);
        }
    }
    let family: Vec<PointSet> = family.into_iter().collect();
    debug_assert!(s.carrier_size() > 8 || family == alpha_open_sets(s));
    FiniteSpace::from_open_sets(s.carrier_size(), &family).expect("α-open sets form a topology")
}

/// Every nowhere dense subset is closed.
///
/// Nowhere dense subsets of a finite space are exactly the subsets of
/// [`nwd_points`], so only those are tested.
pub fn is_nodec(s: &FiniteSpace) -> bool {
    nwd_points(s).subsets().all(|n| s.is_closed(n))
}
