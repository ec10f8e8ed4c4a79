//! Set algebras generated by families of subsets.
//!
//! On a finite carrier every algebra is closed under arbitrary unions, so
//! the constructible algebra is also the κ-Borel algebra for every κ and the
//! Baire-property algebra is the κ-BP algebra for every κ.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::operators;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// A deduplicated family of subsets of one carrier, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    sets: Vec<PointSet>,
}

impl SetFamily {
    pub fn new(n: usize, sets: impl IntoIterator<Item = PointSet>) -> Self {
        let sets: BTreeSet<PointSet> = sets.into_iter().collect();
        assert!(sets.iter().all(|s| s.carrier_size() == n), "family does not fit a carrier of {n} points");
        SetFamily { n, sets: sets.into_iter().collect() }
    }

    pub fn power_set(n: usize) -> Self {
        SetFamily { n, sets: PointSet::all_subsets(n).collect() }
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, a: PointSet) -> bool {
        self.sets.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.sets.iter().copied()
    }

    /// Members that are subsets of `b`.
    pub fn within(&self, b: PointSet) -> SetFamily {
        SetFamily { n: self.n, sets: self.iter().filter(|a| a.is_subset(&b)).collect() }
    }

    pub fn is_algebra(&self) -> bool {
        let full = PointSet::full(self.n);
        self.contains(PointSet::empty(self.n))
            && self.contains(full)
            && self.iter().all(|a| self.contains(a.complement()))
            && self.iter().all(|a| self.iter().all(|b| self.contains(a | b) && self.contains(a & b)))
    }
}

/// An algebra of sets together with the family that generated it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedAlgebra {
    pub base: SetFamily,
    pub sets: SetFamily,
}

impl GeneratedAlgebra {
    pub fn contains(&self, a: PointSet) -> bool {
        self.sets.contains(a)
    }
}

/// Least family containing `base`, `∅` and the carrier that is closed under
/// complement and union. Worklist fixpoint.
pub fn generate_algebra(n: usize, base: &SetFamily) -> GeneratedAlgebra {
    assert_eq!(base.carrier_size(), n);
    let mut seen: BTreeSet<PointSet> = BTreeSet::new();
    let mut queue: VecDeque<PointSet> = VecDeque::new();
    let mut members: Vec<PointSet> = Vec::new();
    for a in [PointSet::empty(n), PointSet::full(n)].into_iter().chain(base.iter()) {
        if seen.insert(a) {
            queue.push_back(a);
        }
    }
    while let Some(a) = queue.pop_front() {
        let mut fresh = vec![a.complement()];
        fresh.extend(members.iter().map(|&b| a | b));
        members.push(a);
        for c in fresh {
            if seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    GeneratedAlgebra { base: base.clone(), sets: SetFamily::new(n, seen) }
}

/// The same algebra computed from atoms: points are grouped by which
/// generators contain them, and the algebra is every union of groups.
pub fn generate_algebra_by_atoms(n: usize, base: &SetFamily) -> SetFamily {
    let mut atoms: BTreeMap<Vec<bool>, u64> = BTreeMap::new();
    for x in 0..n {
        let signature: Vec<bool> = base.iter().map(|a| a.contains(x)).collect();
        *atoms.entry(signature).or_default() |= 1 << x;
    }
    let unions = crate::space::union_closure(atoms.into_values());
    SetFamily::new(n, unions.into_iter().map(|bits| PointSet::raw(n, bits)))
}

/// The smallest algebra containing the topology.
pub fn constructible_algebra(s: &FiniteSpace) -> GeneratedAlgebra {
    let base = SetFamily::new(s.carrier_size(), s.opens().iter().copied());
    generate_algebra(s.carrier_size(), &base)
}

/// The smallest algebra containing all open and all nowhere dense sets.
pub fn bp_algebra(s: &FiniteSpace) -> GeneratedAlgebra {
    let nwd = nwd_ideal(s);
    let base = SetFamily::new(s.carrier_size(), s.opens().iter().copied().chain(nwd.iter()));
    generate_algebra(s.carrier_size(), &base)
}

/// `{A ∩ B : A ∈ f}` on the subspace carrier of `b`, points renumbered in
/// increasing order.
pub fn restrict_family(f: &SetFamily, b: PointSet) -> SetFamily {
    SetFamily::new(b.len(), f.iter().map(|a| a.restrict_to(b)))
}

/// The ideal of nowhere dense subsets. It is the power set of the points
/// whose singleton is nowhere dense.
pub fn nwd_ideal(s: &FiniteSpace) -> SetFamily {
    SetFamily::new(s.carrier_size(), operators::nwd_points(s).subsets())
}
