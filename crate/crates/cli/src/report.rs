//! Run reports and their text and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

use invsg::FiniteInverseSemigroup;

use crate::error::{EXIT_INCONCLUSIVE, EXIT_INVARIANT, EXIT_OK};

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub command: &'static str,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertyFlags>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<SymbolicEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groupoid: Option<GroupoidStats>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verification: Vec<Check>,
    pub inconclusive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &'static str, input_digest: String) -> Self {
        RunReport {
            command,
            input_digest,
            semigroup: None,
            properties: None,
            criteria: Vec::new(),
            symbolic: None,
            groupoid: None,
            verification: Vec::new(),
            inconclusive: false,
            timing_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.verification.iter().any(|c| !c.passed) {
            EXIT_INVARIANT
        } else if self.inconclusive {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.verification.push(Check { name: name.into(), passed, detail });
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{key:<34} {value}");
        };
        line("command", &self.command);
        line("input", &self.input_digest);
        if let Some(s) = &self.semigroup {
            line("order", &s.order);
            if let Some(g) = s.generators {
                line("generators", &g);
            }
            line("idempotents", &s.idempotents);
            line("zero", &s.zero.as_deref().unwrap_or("none"));
            line("identity", &s.identity.as_deref().unwrap_or("none"));
            line("group", &s.group);
            if let Some(v) = &s.verifier {
                line("verifier", v);
            }
        }
        if let Some(p) = &self.properties {
            line("all idempotent", &p.all_idempotent);
            line(p.unitary.variant, &p.unitary.holds);
            if let Some(v) = &p.unitary.violation {
                line("  violation", v);
            }
            line("complete+distributive", &p.completeness.status);
            if let Some(n) = p.completeness.subsets_checked {
                line("  subsets checked", &n);
            }
            if let Some(v) = &p.completeness.violation {
                line("  violation", v);
            }
            line("abstract pseudogroup", &p.abstract_pseudogroup.map_or("unknown".to_string(), |b| b.to_string()));
        }
        for c in &self.criteria {
            line("element", &c.element);
            line("  J_s", &set(&c.j_set));
            line("  verdict", &c.verdict);
            if let Some(w) = &c.witness {
                line("  witness", &set(w));
            }
        }
        if let Some(s) = &self.symbolic {
            line("family", &s.family);
            line("element", &s.element);
            line("  J_s", &s.j_set);
            line("  verdict", &s.verdict);
            if let Some(w) = &s.witness {
                line("  witness", &set(w));
            }
            if let Some(a) = &s.antichain {
                line("  antichain", a);
            }
        }
        if let Some(g) = &self.groupoid {
            line("action", &g.action);
            line("space size", &g.space_size);
            line("omega", &g.omega);
            line("germs", &g.germs);
            line("units", &g.units);
            line("non-unit arrows", &g.arrows);
            line("isotropy", &g.isotropy);
            line("composable pairs", &g.composable_pairs);
            line("principal", &g.principal);
            line("effective", &g.effective);
            line("essentially principal", &g.essentially_principal);
        }
        for c in &self.verification {
            let mark = if c.passed { "ok" } else { "FAILED" };
            match &c.detail {
                Some(d) => line(&format!("check {}", c.name), &format!("{mark} ({d})")),
                None => line(&format!("check {}", c.name), &mark),
            }
        }
        if self.inconclusive {
            line("status", &"inconclusive");
        }
        if let Some(t) = self.timing_ms {
            line("time ms", &format!("{t:.3}"));
        }
        out
    }
}

fn set(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SemigroupStats {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    pub idempotents: usize,
    pub zero: Option<String>,
    pub identity: Option<String>,
    pub group: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verifier: Option<String>,
}

impl SemigroupStats {
    pub fn of(s: &FiniteInverseSemigroup, generators: Option<usize>, verifier: Option<String>) -> Self {
        SemigroupStats {
            order: s.order(),
            generators,
            idempotents: s.idempotents().len(),
            zero: s.zero().map(|z| s.label(z)),
            identity: s.identity().map(|i| s.label(i)),
            group: s.is_group(),
            verifier,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PropertyFlags {
    pub all_idempotent: bool,
    pub unitary: UnitaryFlag,
    pub completeness: CompletenessFlag,
    pub abstract_pseudogroup: Option<bool>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct UnitaryFlag {
    pub variant: &'static str,
    pub holds: bool,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CompletenessFlag {
    pub status: &'static str,
    pub subsets_checked: Option<usize>,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CriterionEntry {
    pub element: String,
    pub j_set: Vec<String>,
    pub verdict: &'static str,
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SymbolicEntry {
    pub family: &'static str,
    pub element: String,
    pub j_set: String,
    pub verdict: &'static str,
    pub witness: Option<Vec<String>>,
    pub antichain: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GroupoidStats {
    pub action: &'static str,
    pub space_size: usize,
    pub omega: usize,
    pub germs: usize,
    pub units: usize,
    pub arrows: usize,
    pub isotropy: usize,
    pub composable_pairs: usize,
    pub principal: bool,
    pub effective: bool,
    pub essentially_principal: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}
