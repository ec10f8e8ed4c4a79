//! The implication diagram between the axioms, as data.
//!
//! Rows are the levels Closed, RO, Open and G_∞; columns are the patterns
//! `Closed ∨ •`, `Closed ∧ •` and `Nwd ∨ •`. The intermediate G-levels
//! (G_δ, G_{<κ}) sit between Open and G_∞ and collapse on finite spaces,
//! which is recorded by the [`RuleKind::FiniteCollapse`] edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::axioms::{AxiomId, AxiomId::*, AxiomVector, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleKind {
    /// an arrow of the diagram; holds in every space
    Diagram,
    /// an auxiliary-predicate implication; holds in every space
    Auxiliary,
    /// a conjunction of axioms implying another; holds in every space
    Compound,
    /// holds on finite spaces only
    FiniteCollapse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub premises: &'static [AxiomId],
    pub conclusion: AxiomId,
    pub kind: RuleKind,
}

const fn edge(from: &'static [AxiomId], to: AxiomId) -> Rule {
    Rule { premises: from, conclusion: to, kind: RuleKind::Diagram }
}

const fn rule(premises: &'static [AxiomId], conclusion: AxiomId, kind: RuleKind) -> Rule {
    Rule { premises, conclusion, kind }
}

pub const RULES: &[Rule] = &[
    edge(&[T1], TClosedOrNwd),
    edge(&[T1], TClosedOrRo),
    edge(&[TClosedOrNwd], TNwdOrRo),
    edge(&[TClosedOrRo], TClosedMeetsRo),
    edge(&[TClosedMeetsRo], TNwdOrRo),
    edge(&[TClosedOrRo], THalf),
    edge(&[TClosedMeetsRo], TD),
    edge(&[TNwdOrRo], TOmegaBp),
    edge(&[THalf], TD),
    edge(&[TD], TOmegaBp),
    edge(&[THalf], TQuarter),
    edge(&[TD], T0),
    edge(&[TOmegaBp], TInfBp),
    edge(&[TQuarter], T0),
    edge(&[T0], TInfBp),
    rule(&[TQuarter], THalf, RuleKind::FiniteCollapse),
    rule(&[T0], TD, RuleKind::FiniteCollapse),
    rule(&[TInfBp], TOmegaBp, RuleKind::FiniteCollapse),
    rule(&[T1], Symmetric, RuleKind::Auxiliary),
    rule(&[Symmetric], Subfit, RuleKind::Auxiliary),
    rule(&[Subfit], RoSubfit, RuleKind::Auxiliary),
    // closed-or-nwd and closed-or-open singletons
    rule(&[TClosedOrNwd, THalf], T1, RuleKind::Compound),
    rule(&[TNwdOrRo, THalf], TClosedOrRo, RuleKind::Compound),
    // subfitness collapses columns
    rule(&[TD, Subfit], T1, RuleKind::Compound),
    rule(&[T0, Symmetric], T1, RuleKind::Compound),
    rule(&[TClosedMeetsRo, RoSubfit], T1, RuleKind::Compound),
    rule(&[TOmegaBp, Subfit], TClosedOrNwd, RuleKind::Compound),
    rule(&[TInfBp, Symmetric], TClosedOrNwd, RuleKind::Compound),
    rule(&[TNwdOrRo, RoSubfit], TClosedOrNwd, RuleKind::Compound),
    // nodec spaces collapse rows
    rule(&[Nodec, TClosedOrNwd], T1, RuleKind::Compound),
    rule(&[Nodec, TNwdOrRo], TClosedOrRo, RuleKind::Compound),
    rule(&[Nodec, TOmegaBp], THalf, RuleKind::Compound),
    rule(&[Nodec, TInfBp], TQuarter, RuleKind::Compound),
];

impl Rule {
    fn applies(&self, finite: bool) -> bool {
        finite || self.kind != RuleKind::FiniteCollapse
    }

    pub fn is_edge(&self) -> bool {
        self.premises.len() == 1
    }
}

/// Diagram arrows only.
pub fn diagram_edges() -> impl Iterator<Item = (AxiomId, AxiomId)> {
    RULES.iter().filter(|r| r.kind == RuleKind::Diagram).map(|r| (r.premises[0], r.conclusion))
}

fn reachable(from: AxiomId, kinds: &[RuleKind]) -> BTreeSet<AxiomId> {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(a) = stack.pop() {
        for r in RULES.iter().filter(|r| r.is_edge() && r.premises[0] == a && kinds.contains(&r.kind)) {
            if seen.insert(r.conclusion) {
                stack.push(r.conclusion);
            }
        }
    }
    seen
}

const GENERAL_EDGES: &[RuleKind] = &[RuleKind::Diagram, RuleKind::Auxiliary];
const FINITE_EDGES: &[RuleKind] = &[RuleKind::Diagram, RuleKind::Auxiliary, RuleKind::FiniteCollapse];

/// Is there a chain of single-premise implications from `a` to `b`?
/// With `finite`, the finite-space collapse edges may be used.
pub fn implies(a: AxiomId, b: AxiomId, finite: bool) -> bool {
    reachable(a, if finite { FINITE_EDGES } else { GENERAL_EDGES }).contains(&b)
}

fn path_kind(a: AxiomId, b: AxiomId) -> RuleKind {
    if reachable(a, &[RuleKind::Diagram]).contains(&b) {
        RuleKind::Diagram
    } else if reachable(a, GENERAL_EDGES).contains(&b) {
        RuleKind::Auxiliary
    } else {
        RuleKind::FiniteCollapse
    }
}

/// Failed implications of a complete vector: every implied pair `a ⇒ b`
/// with `a` true and `b` false, and every compound rule whose premises
/// hold while its conclusion fails.
pub fn violations(v: &AxiomVector, finite: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    let kinds = if finite { FINITE_EDGES } else { GENERAL_EDGES };
    for a in AxiomId::ALL.into_iter().filter(|&a| v.get(a) == Some(true)) {
        for b in reachable(a, kinds) {
            if v.get(b) == Some(false) {
                out.push(Violation { premises: vec![a], conclusion: b, kind: path_kind(a, b) });
            }
        }
    }
    for r in RULES.iter().filter(|r| !r.is_edge() && r.applies(finite)) {
        if r.premises.iter().all(|&p| v.get(p) == Some(true)) && v.get(r.conclusion) == Some(false) {
            out.push(Violation { premises: r.premises.to_vec(), conclusion: r.conclusion, kind: r.kind });
        }
    }
    out
}

/// Everything forced true by the true entries of `v`.
pub fn consequences(v: &AxiomVector, finite: bool) -> BTreeSet<AxiomId> {
    let mut known: BTreeSet<AxiomId> = v.iter().filter(|&(_, t)| t).map(|(a, _)| a).collect();
    loop {
        let before = known.len();
        for r in RULES.iter().filter(|r| r.applies(finite)) {
            if r.premises.iter().all(|p| known.contains(p)) {
                known.insert(r.conclusion);
            }
        }
        if known.len() == before {
            return known;
        }
    }
}

/// Everything forced false by the false entries of `v`, through
/// single-premise implications.
pub fn refutations(v: &AxiomVector, finite: bool) -> BTreeSet<AxiomId> {
    let kinds = if finite { FINITE_EDGES } else { GENERAL_EDGES };
    let falses: Vec<AxiomId> = v.iter().filter(|&(_, t)| !t).map(|(a, _)| a).collect();
    AxiomId::ALL
        .into_iter()
        .filter(|&a| reachable(a, kinds).iter().any(|b| falses.contains(b)))
        .collect()
}

/// Claims of a partial vector that contradict the rules: atoms claimed
/// false although the claimed-true atoms force them.
pub fn inconsistencies(v: &AxiomVector, finite: bool) -> Vec<Violation> {
    let trues: Vec<AxiomId> = v.iter().filter(|&(_, t)| t).map(|(a, _)| a).collect();
    consequences(v, finite)
        .into_iter()
        .filter(|&b| v.get(b) == Some(false))
        .map(|b| Violation { premises: trues.clone(), conclusion: b, kind: RuleKind::Compound })
        .collect()
}

/// Which rendering of the diagram to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramForm {
    /// every axiom, collapse edges dashed
    Full,
    /// axioms equivalent on finite spaces merged into one node
    Finite,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn node_label(a: AxiomId) -> String {
    let aliases = a.aliases().iter().take(3).copied().collect::<Vec<_>>().join(", ");
    if aliases.is_empty() {
        a.name().to_string()
    } else {
        format!("{}\\n{}", a.name(), dot_escape(&aliases))
    }
}

/// Classes of axioms equivalent on finite spaces, in axiom order.
pub fn finite_classes() -> Vec<Vec<AxiomId>> {
    let mut classes: Vec<Vec<AxiomId>> = Vec::new();
    for a in AxiomId::SEPARATION {
        if let Some(c) = classes.iter_mut().find(|c| implies(a, c[0], true) && implies(c[0], a, true)) {
            c.push(a);
        } else {
            classes.push(vec![a]);
        }
    }
    classes
}

/// Graphviz rendering. `non_implications` maps `(a, b)` to the name of a
/// space satisfying `a` but not `b`; such witnesses are drawn as dotted
/// edges against each diagram arrow.
pub fn to_dot(form: DiagramForm, non_implications: &BTreeMap<(AxiomId, AxiomId), String>) -> String {
    let mut out = String::new();
    match form {
        DiagramForm::Full => {
            writeln!(out, "digraph separation_axioms {{").unwrap();
            writeln!(out, "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];").unwrap();
            for a in AxiomId::SEPARATION {
                writeln!(out, "  {} [label=\"{}\"];", a.name(), node_label(a)).unwrap();
            }
            for r in RULES.iter().filter(|r| r.is_edge() && r.premises[0].is_separation()) {
                let (a, b) = (r.premises[0], r.conclusion);
                match r.kind {
                    RuleKind::FiniteCollapse => {
                        writeln!(out, "  {a} -> {b} [style=dashed, label=\"finite\"];").unwrap()
                    }
                    _ => writeln!(out, "  {a} -> {b};").unwrap(),
                }
            }
            for (a, b) in diagram_edges() {
                if let Some(w) = non_implications.get(&(b, a)) {
                    writeln!(
                        out,
                        "  {b} -> {a} [style=dotted, color=red, constraint=false, label=\"not: {}\"];",
                        dot_escape(w)
                    )
                    .unwrap();
                }
            }
        }
        DiagramForm::Finite => {
            let classes = finite_classes();
            let class_of = |a: AxiomId| classes.iter().position(|c| c.contains(&a)).unwrap();
            let node = |i: usize| format!("C{i}");
            writeln!(out, "digraph separation_axioms_finite {{").unwrap();
            writeln!(out, "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];").unwrap();
            for (i, c) in classes.iter().enumerate() {
                let names: Vec<&str> = c.iter().map(|a| a.name()).collect();
                writeln!(out, "  {} [label=\"{}\"];", node(i), names.join(" ≡ ")).unwrap();
            }
            let mut drawn = BTreeSet::new();
            for (a, b) in diagram_edges() {
                let (i, j) = (class_of(a), class_of(b));
                if i != j && drawn.insert((i, j)) {
                    writeln!(out, "  {} -> {};", node(i), node(j)).unwrap();
                    let witness = classes[j]
                        .iter()
                        .flat_map(|&bb| classes[i].iter().map(move |&aa| (bb, aa)))
                        .find_map(|key| non_implications.get(&key));
                    if let Some(w) = witness {
                        writeln!(
                            out,
                            "  {} -> {} [style=dotted, color=red, constraint=false, label=\"not: {}\"];",
                            node(j),
                            node(i),
                            dot_escape(w)
                        )
                        .unwrap();
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
