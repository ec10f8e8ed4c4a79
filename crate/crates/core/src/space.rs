//! Finite topological spaces, their specialization preorders and
//! canonical forms up to homeomorphism.
//!
//! A space stores its open sets explicitly, sorted by mask. On a finite
//! carrier the topology and the specialization preorder determine each
//! other: open sets are exactly the upper sets of `x ≤ y ⇔ x ∈ cl{y}`.

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use itertools::Itertools;

use crate::error::{SpaceError, TopologyDefect};
use crate::operators;
use crate::pointset::{full_mask, PointSet, MAX_POINTS};

/// Largest carrier accepted by the permutation search in [`canonical_form`].
pub const MAX_CANONICAL_POINTS: usize = 7;

/// A validated topology on `{0, .., n-1}`.
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
    labels: Option<Vec<String>>,
    min_nbhds: Vec<PointSet>,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

impl Hash for FiniteSpace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.opens.hash(state);
    }
}

fn check_carrier(n: usize) -> Result<(), SpaceError> {
    if n == 0 {
        Err(SpaceError::EmptyCarrier)
    } else if n > MAX_POINTS {
        Err(SpaceError::CarrierTooLarge { size: n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

fn check_fits(n: usize, family: &[PointSet]) -> Result<(), SpaceError> {
    for set in family {
        if set.carrier_size() != n {
            let point = set.iter().find(|&p| p >= n).unwrap_or(set.carrier_size());
            return Err(SpaceError::CarrierMismatch { carrier: n, point });
        }
    }
    Ok(())
}

/// All unions of members of `gens`, including the empty union.
pub(crate) fn union_closure(gens: impl IntoIterator<Item = u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([0u64]);
    for g in gens {
        if out.contains(&g) {
            continue;
        }
        let grown: Vec<u64> = out.iter().map(|&r| r | g).collect();
        out.extend(grown);
    }
    out
}

/// All intersections of members of `gens` with `top`, including `top` itself.
pub(crate) fn intersection_closure(top: u64, gens: impl IntoIterator<Item = u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([top]);
    for g in gens {
        let grown: Vec<u64> = out.iter().map(|&r| r & g).collect();
        out.extend(grown);
    }
    out
}

impl FiniteSpace {
    /// Wraps an already-closed family. Callers guarantee the topology laws.
    pub(crate) fn from_masks_unchecked(n: usize, masks: impl IntoIterator<Item = u64>) -> Self {
        let mut opens: Vec<PointSet> = masks.into_iter().map(|m| PointSet::raw(n, m)).collect();
        opens.sort_unstable();
        opens.dedup();
        let min_nbhds = (0..n)
            .map(|x| {
                let bits = opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(full_mask(n), |acc, u| acc & u.bits());
                PointSet::raw(n, bits)
            })
            .collect();
        let space = FiniteSpace { n, opens, labels: None, min_nbhds };
        debug_assert!(
            space.opens.len() > 1024 || space.validate().is_ok(),
            "unchecked family is not a topology"
        );
        space
    }

    fn validate(&self) -> Result<(), SpaceError> {
        let defect = |d| Err(SpaceError::NotATopology(d));
        if !self.is_open(PointSet::empty(self.n)) {
            return defect(TopologyDefect::MissingEmpty);
        }
        if !self.is_open(PointSet::full(self.n)) {
            return defect(TopologyDefect::MissingCarrier);
        }
        for (i, &a) in self.opens.iter().enumerate() {
            for &b in &self.opens[i + 1..] {
                if !self.is_open(a | b) {
                    return defect(TopologyDefect::UnionNotOpen(a, b));
                }
                if !self.is_open(a & b) {
                    return defect(TopologyDefect::IntersectionNotOpen(a, b));
                }
            }
        }
        Ok(())
    }

    /// Accepts `family` only if it already is a topology on `n` points.
    pub fn from_open_sets(n: usize, family: &[PointSet]) -> Result<Self, SpaceError> {
        check_carrier(n)?;
        check_fits(n, family)?;
        let mut opens = family.to_vec();
        opens.sort_unstable();
        opens.dedup();
        let candidate = FiniteSpace { n, opens, labels: None, min_nbhds: Vec::new() };
        candidate.validate()?;
        Ok(Self::from_masks_unchecked(n, candidate.opens.iter().map(PointSet::bits)))
    }

    /// Topology generated by `family`: unions of finite intersections.
    pub fn from_subbasis(n: usize, family: &[PointSet]) -> Result<Self, SpaceError> {
        check_carrier(n)?;
        check_fits(n, family)?;
        let basis = intersection_closure(full_mask(n), family.iter().map(PointSet::bits));
        Ok(Self::from_masks_unchecked(n, union_closure(basis)))
    }

    /// Alexandrov topology of `order`: the upper sets.
    pub fn from_preorder(order: &Preorder) -> Self {
        let opens = union_closure(order.rows.iter().copied());
        Self::from_masks_unchecked(order.n, opens)
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_preorder(&Preorder::discrete(n))
    }

    pub fn antidiscrete(n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n));
        Self::from_masks_unchecked(n, [0, full_mask(n)])
    }

    /// Attaches display names; they take no part in equality.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, SpaceError> {
        if labels.len() != self.n {
            return Err(SpaceError::Format(format!(
                "{} labels given for a carrier of {} points",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a point: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.n)
    }

    pub fn singleton(&self, x: usize) -> PointSet {
        PointSet::singleton(self.n, x)
    }

    /// Open sets in canonical (increasing mask) order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut closed: Vec<PointSet> = self.opens.iter().map(|u| u.complement()).collect();
        closed.sort_unstable();
        closed
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        a.carrier_size() == self.n && self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement())
    }

    /// Smallest open set containing `x`.
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhds[x]
    }

    /// `leq(x, y)` iff `x ∈ cl{y}`.
    pub fn specialization_preorder(&self) -> Preorder {
        let n = self.n;
        let mut rows = vec![0u64; n];
        for y in 0..n {
            let cl = operators::closure(self, self.singleton(y));
            for x in cl.iter() {
                rows[x] |= 1 << y;
            }
        }
        Preorder { n, rows }
    }

    /// Same space with points renamed by `x ↦ perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteSpace {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::from_masks_unchecked(self.n, self.opens.iter().map(|u| u.permute(perm).bits()));
        if let Some(labels) = &self.labels {
            let mut moved = labels.clone();
            for (x, &px) in perm.iter().enumerate() {
                moved[px] = labels[x].clone();
            }
            out.labels = Some(moved);
        }
        out
    }
}

/// A reflexive, transitive relation on `{0, .., n-1}`.
///
/// Row `x` holds the up-set `{y : x ≤ y}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    rows: Vec<u64>,
}

impl Preorder {
    /// Validates up-set rows.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self, SpaceError> {
        check_carrier(n)?;
        if rows.len() != n {
            return Err(SpaceError::NotAPreorder(format!("{} rows for {n} points", rows.len())));
        }
        for (x, &row) in rows.iter().enumerate() {
            if row & !full_mask(n) != 0 {
                return Err(SpaceError::CarrierMismatch { carrier: n, point: 63 - row.leading_zeros() as usize });
            }
            if row >> x & 1 == 0 {
                return Err(SpaceError::NotAPreorder(format!("{x} ≤ {x} fails")));
            }
        }
        for x in 0..n {
            for y in PointSet::raw(n, rows[x]).iter() {
                if rows[y] & !rows[x] != 0 {
                    let z = (rows[y] & !rows[x]).trailing_zeros();
                    return Err(SpaceError::NotAPreorder(format!("{x} ≤ {y} ≤ {z} but not {x} ≤ {z}")));
                }
            }
        }
        Ok(Preorder { n, rows })
    }

    /// Reflexive-transitive closure of the given pairs.
    pub fn generated_by(n: usize, pairs: &[(usize, usize)]) -> Result<Self, SpaceError> {
        check_carrier(n)?;
        let mut rows: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(SpaceError::CarrierMismatch { carrier: n, point: x.max(y) });
            }
            rows[x] |= 1 << y;
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                let reach = PointSet::raw(n, rows[x]).iter().fold(rows[x], |acc, y| acc | rows[y]);
                if reach != rows[x] {
                    rows[x] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Preorder { n, rows })
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(n, rows.clone()).is_ok());
        Preorder { n, rows }
    }

    /// `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        check_carrier(n).expect("chain needs 1..=64 points");
        let rows = (0..n).map(|x| full_mask(n) & !full_mask(x)).collect();
        Preorder { n, rows }
    }

    pub fn discrete(n: usize) -> Self {
        check_carrier(n).expect("discrete order needs 1..=64 points");
        Preorder { n, rows: (0..n).map(|x| 1 << x).collect() }
    }

    pub fn total(n: usize) -> Self {
        check_carrier(n).expect("total relation needs 1..=64 points");
        Preorder { n, rows: vec![full_mask(n); n] }
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn up_set(&self, x: usize) -> PointSet {
        PointSet::raw(self.n, self.rows[x])
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
    }

    /// Bit `x * n + y` is set iff `x ≤ y`.
    pub fn code(&self) -> u64 {
        debug_assert!(self.n * self.n <= 64);
        let mut code = 0u64;
        for x in 0..self.n {
            for y in PointSet::raw(self.n, self.rows[x]).iter() {
                code |= 1 << (x * self.n + y);
            }
        }
        code
    }

    fn from_code(n: usize, code: u64) -> Self {
        let rows = (0..n).map(|x| (code >> (x * n)) & full_mask(n)).collect();
        Preorder::from_rows_unchecked(n, rows)
    }
}

/// Minimum of [`Preorder::code`] over all relabelings of the specialization
/// preorder. Equal codes on equal carriers mean homeomorphic spaces.
pub fn canonical_code(s: &FiniteSpace) -> Result<u64, SpaceError> {
    let n = s.carrier_size();
    if n > MAX_CANONICAL_POINTS {
        return Err(SpaceError::CarrierTooLarge { size: n, max: MAX_CANONICAL_POINTS });
    }
    let order = s.specialization_preorder();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| order.up_set(x).iter().map(move |y| (x, y)))
        .collect();
    let best = (0..n)
        .permutations(n)
        .map(|perm| pairs.iter().fold(0u64, |code, &(x, y)| code | 1 << (perm[x] * n + perm[y])))
        .min()
        .expect("at least one permutation");
    Ok(best)
}

/// The representative of the homeomorphism class of `s` whose
/// specialization preorder has the least code.
pub fn canonical_form(s: &FiniteSpace) -> Result<FiniteSpace, SpaceError> {
    let code = canonical_code(s)?;
    Ok(FiniteSpace::from_preorder(&Preorder::from_code(s.carrier_size(), code)))
}

pub fn is_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> Result<bool, SpaceError> {
    if a.carrier_size() != b.carrier_size() || a.opens().len() != b.opens().len() {
        // still reject carriers the search cannot handle
        canonical_code(a)?;
        canonical_code(b)?;
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    fn fam(n: usize, sets: &[&[usize]]) -> Vec<PointSet> {
        sets.iter().map(|s| set(n, s)).collect()
    }

    fn s2() -> FiniteSpace {
        FiniteSpace::from_open_sets(2, &fam(2, &[&[], &[1], &[0, 1]])).unwrap()
    }

    fn s3() -> FiniteSpace {
        FiniteSpace::from_open_sets(3, &fam(3, &[&[], &[2], &[1, 2], &[0, 1, 2]])).unwrap()
    }

    #[test]
    fn sierpinski_from_open_sets() {
        let s = s2();
        assert_eq!(s.opens(), &fam(2, &[&[], &[1], &[0, 1]])[..]);
    }

    #[test]
    fn one_point_space() {
        let s = FiniteSpace::from_open_sets(1, &fam(1, &[&[], &[0]])).unwrap();
        assert_eq!(s.opens().len(), 2);
    }

    #[test]
    fn missing_empty_and_carrier_is_rejected() {
        let err = FiniteSpace::from_open_sets(2, &fam(2, &[&[1]])).unwrap_err();
        assert_eq!(err, SpaceError::NotATopology(TopologyDefect::MissingEmpty));
        let err = FiniteSpace::from_open_sets(2, &fam(2, &[&[], &[1]])).unwrap_err();
        assert_eq!(err, SpaceError::NotATopology(TopologyDefect::MissingCarrier));
    }

    #[test]
    fn union_defect_names_the_pair() {
        let err = FiniteSpace::from_open_sets(3, &fam(3, &[&[], &[0], &[1], &[0, 1, 2]])).unwrap_err();
        assert_eq!(
            err,
            SpaceError::NotATopology(TopologyDefect::UnionNotOpen(set(3, &[0]), set(3, &[1])))
        );
        let err = FiniteSpace::from_open_sets(3, &fam(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]])).unwrap_err();
        assert!(matches!(err, SpaceError::NotATopology(TopologyDefect::IntersectionNotOpen(..))));
    }

    #[test]
    fn carrier_mismatch() {
        let err = FiniteSpace::from_open_sets(2, &[PointSet::empty(3)]).unwrap_err();
        assert!(matches!(err, SpaceError::CarrierMismatch { carrier: 2, .. }));
        assert_eq!(FiniteSpace::from_open_sets(0, &[]).unwrap_err(), SpaceError::EmptyCarrier);
    }

    #[test]
    fn subbasis_generation() {
        let s = FiniteSpace::from_subbasis(3, &fam(3, &[&[0], &[0, 1], &[0, 2]])).unwrap();
        assert_eq!(s.opens(), &fam(3, &[&[], &[0], &[0, 1], &[0, 2], &[0, 1, 2]])[..]);
        let anti = FiniteSpace::from_subbasis(4, &[]).unwrap();
        assert_eq!(anti, FiniteSpace::antidiscrete(4));
    }

    #[test]
    fn attachment_space_from_subbasis() {
        let s = FiniteSpace::from_subbasis(5, &fam(5, &[&[0], &[2, 3, 4], &[2], &[4]])).unwrap();
        // unions of {0}, {2}, {4}, {2,3,4} together with ∅ and X
        let expected = fam(
            5,
            &[&[], &[0], &[2], &[0, 2], &[4], &[0, 4], &[2, 4], &[0, 2, 4], &[2, 3, 4], &[0, 2, 3, 4], &[0, 1, 2, 3, 4]],
        );
        let mut expected = expected;
        expected.sort();
        assert_eq!(s.opens(), &expected[..]);
    }

    #[test]
    fn preorder_constructions() {
        assert_eq!(FiniteSpace::from_preorder(&Preorder::chain(2)), s2());
        assert_eq!(FiniteSpace::from_preorder(&Preorder::chain(3)), s3());
        assert_eq!(FiniteSpace::discrete(4).opens().len(), 16);
    }

    #[test]
    fn specialization_of_small_spaces() {
        let p = s2().specialization_preorder();
        assert!(p.leq(0, 1) && !p.leq(1, 0));
        assert_eq!(FiniteSpace::discrete(3).specialization_preorder(), Preorder::discrete(3));
        assert_eq!(FiniteSpace::antidiscrete(3).specialization_preorder(), Preorder::total(3));
    }

    #[test]
    fn preorder_validation() {
        assert!(Preorder::from_rows(2, vec![0b10, 0b10]).is_err());
        assert!(Preorder::from_rows(3, vec![0b011, 0b110, 0b100]).is_err());
        let p = Preorder::generated_by(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p, Preorder::chain(3));
    }

    #[test]
    fn min_nbhd_examples() {
        assert_eq!(s3().min_nbhd(1), set(3, &[1, 2]));
        assert_eq!(FiniteSpace::discrete(3).min_nbhd(2), set(3, &[2]));
        assert_eq!(FiniteSpace::antidiscrete(2).min_nbhd(0), set(2, &[0, 1]));
    }

    #[test]
    fn canonical_forms_and_homeomorphism() {
        let swapped = FiniteSpace::from_open_sets(2, &fam(2, &[&[], &[0], &[0, 1]])).unwrap();
        assert_eq!(canonical_form(&swapped).unwrap(), canonical_form(&s2()).unwrap());
        assert!(is_homeomorphic(&s2(), &swapped).unwrap());
        assert!(!is_homeomorphic(&s2(), &FiniteSpace::discrete(2)).unwrap());
        assert_ne!(
            canonical_form(&FiniteSpace::discrete(2)).unwrap(),
            canonical_form(&FiniteSpace::antidiscrete(2)).unwrap()
        );
        let reversed = FiniteSpace::from_open_sets(3, &fam(3, &[&[], &[0], &[0, 1], &[0, 1, 2]])).unwrap();
        assert!(is_homeomorphic(&s3(), &reversed).unwrap());
        assert_eq!(s3().permuted(&[2, 1, 0]), reversed);
    }

    #[test]
    fn canonical_search_is_bounded() {
        let big = FiniteSpace::discrete(8);
        assert_eq!(
            canonical_form(&big).unwrap_err(),
            SpaceError::CarrierTooLarge { size: 8, max: MAX_CANONICAL_POINTS }
        );
    }

    fn arb_preorder() -> impl Strategy<Value = Preorder> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..8)
                .prop_map(move |pairs| Preorder::generated_by(n, &pairs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn preorder_topology_round_trip(p in arb_preorder()) {
            let s = FiniteSpace::from_preorder(&p);
            prop_assert_eq!(s.specialization_preorder(), p.clone());
            prop_assert_eq!(FiniteSpace::from_preorder(&s.specialization_preorder()), s.clone());
            prop_assert!(FiniteSpace::from_open_sets(s.carrier_size(), s.opens()).is_ok());
        }

        #[test]
        fn min_nbhd_is_least_open_neighbourhood(p in arb_preorder()) {
            let s = FiniteSpace::from_preorder(&p);
            for x in s.points() {
                let m = s.min_nbhd(x);
                prop_assert!(s.is_open(m) && m.contains(x));
                for u in s.opens().iter().filter(|u| u.contains(x)) {
                    prop_assert!(m.is_subset(u));
                }
            }
        }

        #[test]
        fn canonical_form_ignores_relabeling(p in arb_preorder(), seed in any::<u64>()) {
            let s = FiniteSpace::from_preorder(&p);
            let n = s.carrier_size();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (state >> 33) as usize % (i + 1));
            }
            let c = canonical_form(&s).unwrap();
            prop_assert_eq!(canonical_form(&s.permuted(&perm)).unwrap(), c.clone());
            prop_assert_eq!(canonical_form(&c).unwrap(), c.clone());
            prop_assert!(is_homeomorphic(&s, &c).unwrap());
        }
    }
}
