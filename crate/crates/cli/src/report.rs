//! Command payloads and their markdown rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use sepax_core::axioms::{AxiomId, AxiomVector, PointClass, Violation};
use sepax_core::catalog::{Basis, CatalogEntry};
use sepax_core::diagram::{self, DiagramForm, RuleKind};
use sepax_core::json::space_to_json;
use sepax_core::miner::{DiagramReport, EnumerationReport, WitnessOutcome, WitnessReport};
use sepax_core::props::PropertyOutcome;
use sepax_core::FiniteSpace;

pub trait Markdown {
    fn markdown(&self) -> String;
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json_block(out: &mut String, s: &FiniteSpace) {
    writeln!(out, "```json\n{}\n```", space_to_json(s)).unwrap();
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyPayload {
    pub space: FiniteSpace,
    pub axioms: AxiomVector,
    pub points: Vec<PointClass>,
    pub violations: Vec<Violation>,
}

impl Markdown for ClassifyPayload {
    fn markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# Classification of a {}-point space\n", self.space.carrier_size()).unwrap();
        writeln!(out, "| axiom | holds |\n|---|---|").unwrap();
        for (a, holds) in self.axioms.iter() {
            writeln!(out, "| {a} | {} |", yes_no(holds)).unwrap();
        }
        writeln!(out, "\n| point | label | closed | open | clopen | regular open | nwd | locally closed | min_nbhd |").unwrap();
        writeln!(out, "|---|---|---|---|---|---|---|---|---|").unwrap();
        for p in &self.points {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                p.point,
                self.space.label(p.point),
                yes_no(p.is_closed),
                yes_no(p.is_open),
                yes_no(p.is_clopen),
                yes_no(p.is_regular_open),
                yes_no(p.is_nwd),
                yes_no(p.is_locally_closed),
                p.min_nbhd
            )
            .unwrap();
        }
        if !self.violations.is_empty() {
            writeln!(out, "\nViolated implications:").unwrap();
            for v in &self.violations {
                writeln!(out, "- {v}").unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub name: String,
    pub title: String,
    /// `None` for analytic entries
    pub points: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogList {
    pub entries: Vec<CatalogSummary>,
}

impl CatalogList {
    pub fn new(entries: &[CatalogEntry]) -> Self {
        let entries = entries
            .iter()
            .map(|e| CatalogSummary {
                name: e.name.to_string(),
                title: e.title.to_string(),
                points: e.finite_space().map(FiniteSpace::carrier_size),
            })
            .collect();
        CatalogList { entries }
    }
}

impl Markdown for CatalogList {
    fn markdown(&self) -> String {
        let mut out = String::from("| name | points | description |\n|---|---|---|\n");
        for e in &self.entries {
            let points = e.points.map_or("analytic".to_string(), |n| n.to_string());
            writeln!(out, "| {} | {} | {} |", e.name, points, e.title).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRow {
    pub axiom: AxiomId,
    pub expected: bool,
    /// value computed from the space; absent for analytic entries
    pub computed: Option<bool>,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogShow {
    pub name: String,
    pub title: String,
    pub space: Option<FiniteSpace>,
    pub claims: Vec<ClaimRow>,
    pub notes: String,
}

impl CatalogShow {
    pub fn new(e: &CatalogEntry) -> Self {
        let space = e.finite_space().cloned();
        let claims = e
            .expected
            .iter()
            .map(|c| ClaimRow {
                axiom: c.axiom,
                expected: c.holds,
                computed: space.as_ref().map(|s| sepax_core::check_axiom(s, c.axiom)),
                basis: c.basis.clone(),
            })
            .collect();
        CatalogShow { name: e.name.to_string(), title: e.title.to_string(), space, claims, notes: e.notes.clone() }
    }

    pub fn mismatches(&self) -> usize {
        self.claims.iter().filter(|c| c.computed.is_some_and(|v| v != c.expected)).count()
    }
}

impl Markdown for CatalogShow {
    fn markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}: {}\n", self.name, self.title).unwrap();
        match &self.space {
            Some(s) => json_block(&mut out, s),
            None => writeln!(out, "Analytic entry: an infinite space, not computed.").unwrap(),
        }
        writeln!(out, "\n| axiom | expected | computed | basis |\n|---|---|---|---|").unwrap();
        for c in &self.claims {
            let computed = c.computed.map_or("n/a", yes_no);
            let basis = match &c.basis {
                Basis::Literature(note) => format!("literature: {note}"),
                Basis::Derived(note) => format!("derived: {note}"),
            };
            writeln!(out, "| {} | {} | {} | {} |", c.axiom, yes_no(c.expected), computed, basis).unwrap();
        }
        if !self.notes.is_empty() {
            writeln!(out, "\n{}", self.notes).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratePayload {
    pub report: EnumerationReport,
    pub up_to_homeo: bool,
    pub spaces: Vec<FiniteSpace>,
}

impl Markdown for EnumeratePayload {
    fn markdown(&self) -> String {
        let r = &self.report;
        format!("{} labeled, {} classes on {} points\n", r.labeled_count, r.homeo_class_count, r.n)
    }
}

impl Markdown for DiagramReport {
    fn markdown(&self) -> String {
        let top = self.per_size.last().map_or(0, |&(_, c)| c);
        let mut out = format!(
            "{} violations / {} spaces on {} points ({} spaces on 1..={} points)\n",
            self.violation_count(),
            top,
            self.max_points,
            self.spaces_checked,
            self.max_points
        );
        for f in &self.failures {
            let opens: Vec<String> = f.space.opens().iter().map(|u| u.to_string()).collect();
            for v in &f.violations {
                writeln!(out, "- {v} fails on opens [{}]", opens.join(", ")).unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropsPayload {
    pub points: usize,
    pub outcomes: Vec<PropertyOutcome>,
}

impl PropsPayload {
    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }
}

impl Markdown for PropsPayload {
    fn markdown(&self) -> String {
        let mut out = format!(
            "{} of {} properties hold on every space with at most {} points\n\n",
            self.outcomes.len() - self.failures(),
            self.outcomes.len(),
            self.points
        );
        writeln!(out, "| property | result | instances | description |\n|---|---|---|---|").unwrap();
        for o in &self.outcomes {
            let result = if o.passed { "pass" } else { "FAIL" };
            writeln!(out, "| {} | {} | {} | {} |", o.name, result, o.instances, o.description).unwrap();
        }
        for o in self.outcomes.iter().filter(|o| !o.passed) {
            writeln!(out, "\n{}: {}", o.name, o.counterexample.as_deref().unwrap_or("")).unwrap();
        }
        out
    }
}

impl Markdown for WitnessReport {
    fn markdown(&self) -> String {
        let names = |v: &[AxiomId]| v.iter().map(|a| a.name()).collect::<Vec<_>>().join(", ");
        let mut out = format!("Satisfy {}; violate {}\n\n", names(&self.satisfy), names(&self.violate));
        match &self.outcome {
            WitnessOutcome::Found { n, space, minimal, .. } => {
                let qualifier = if *minimal { ", minimal" } else { "" };
                writeln!(out, "Witness on {n} points{qualifier}:\n").unwrap();
                json_block(&mut out, space);
            }
            WitnessOutcome::NoneUpTo { n, analytic } => {
                writeln!(out, "NONE_UP_TO({n})").unwrap();
                if let Some(name) = analytic {
                    writeln!(out, "\nSeparated by the infinite catalog space `{name}`.").unwrap();
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub from: AxiomId,
    pub to: AxiomId,
    pub kind: RuleKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonImplication {
    pub holds: AxiomId,
    pub fails: AxiomId,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramExport {
    pub form: DiagramForm,
    pub edges: Vec<EdgeRow>,
    pub classes: Vec<Vec<AxiomId>>,
    pub non_implications: Vec<NonImplication>,
}

impl DiagramExport {
    pub fn new(form: DiagramForm, witnesses: &std::collections::BTreeMap<(AxiomId, AxiomId), String>) -> Self {
        let edges = diagram::RULES
            .iter()
            .filter(|r| r.is_edge() && r.premises[0].is_separation())
            .map(|r| EdgeRow { from: r.premises[0], to: r.conclusion, kind: r.kind })
            .collect();
        let classes = match form {
            DiagramForm::Full => AxiomId::SEPARATION.iter().map(|&a| vec![a]).collect(),
            DiagramForm::Finite => diagram::finite_classes(),
        };
        let non_implications = witnesses
            .iter()
            .filter(|((a, b), _)| a.is_separation() && b.is_separation())
            .map(|(&(holds, fails), w)| NonImplication { holds, fails, witness: w.clone() })
            .collect();
        DiagramExport { form, edges, classes, non_implications }
    }
}

impl Markdown for DiagramExport {
    fn markdown(&self) -> String {
        let mut out = String::from("| from | to | kind |\n|---|---|---|\n");
        for e in &self.edges {
            writeln!(out, "| {} | {} | {:?} |", e.from, e.to, e.kind).unwrap();
        }
        if self.form == DiagramForm::Finite {
            writeln!(out, "\nClasses equivalent on finite spaces:").unwrap();
            for c in self.classes.iter().filter(|c| c.len() > 1) {
                let names: Vec<&str> = c.iter().map(|a| a.name()).collect();
                writeln!(out, "- {}", names.join(" = ")).unwrap();
            }
        }
        writeln!(out, "\n{} known non-implications", self.non_implications.len()).unwrap();
        out
    }
}
