//! One function per subcommand. Each returns a finished report; exit codes are
//! derived from it by the caller.

use std::path::{Path, PathBuf};

use invsg::germ::fixed_point_form_violation;
use invsg::symbolic::{
    atom_flip, atomflip_criterion, graph_criterion, munn_criterion, verify_antichain, AtomFlip, Graph, MunnTree,
    PathPair, SymbolicCriterionReport, SymbolicElement, SymbolicVerdict,
};
use invsg::{
    verify_inverse_semigroup, Completeness, CompletenessViolation, ElementSet, FiniteAction, FiniteInverseSemigroup,
    GermGroupoid, SemigroupElement, UnitaryVariant, Verdict, Violation, MAX_EXHAUSTIVE_J,
};

use crate::error::CliError;
use crate::format::{load_action, load_semigroup, resolve_element, ElementRef, InputDigest, LoadedSemigroup};
use crate::report::{
    CompletenessFlag, CriterionEntry, GroupoidStats, PropertyFlags, RunReport, SemigroupStats, SymbolicEntry,
    UnitaryFlag,
};

/// The graph used by `symbolic --family graph` when none is given.
pub const DEFAULT_GRAPH: &str = "1>2, 2>2, 1>2";
/// Atoms checked when verifying a refuting antichain.
pub const ANTICHAIN_WINDOW: u64 = 64;
/// Munn trees and paths used by the bounded symbolic cross-checks.
pub const MUNN_ORACLE_VERTICES: usize = 3;
pub const GRAPH_ORACLE_LENGTH: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Element cap for closures.
    pub budget: usize,
    /// Cap on compatible subsets visited by the completeness check.
    pub subset_budget: usize,
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: invsg::DEFAULT_CLOSURE_BUDGET, subset_budget: invsg::DEFAULT_SUBSET_BUDGET, verify: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Munn,
    Graph,
    AtomFlip,
}

#[derive(Debug, Clone)]
pub struct SymbolicQuery {
    pub family: FamilyKind,
    pub element: String,
    pub rank: Option<u32>,
    pub graph: String,
    pub truncation: Option<u64>,
}

#[derive(Debug, Clone)]
pub enum GermSource {
    SelfAction(PathBuf),
    ActionFile(PathBuf),
}

fn verifier_text(s: &FiniteInverseSemigroup) -> String {
    match verify_inverse_semigroup(s.table()) {
        Ok(_) => "ok".to_string(),
        Err(Violation::NotAssociative { a, b, c }) => format!("not associative at ({a}, {b}, {c})"),
        Err(Violation::NoInverse { element }) => format!("element {element} has no inverse"),
        Err(Violation::MultipleInverses { element, first, second }) => {
            format!("element {element} has inverses {first} and {second}")
        }
    }
}

fn labels(s: &FiniteInverseSemigroup, set: &ElementSet) -> Vec<String> {
    set.iter().map(|&i| s.label(i)).collect()
}

pub fn cmd_close(path: &Path, opts: &Options) -> Result<RunReport, CliError> {
    let mut digest = InputDigest::default();
    let loaded = load_semigroup(path, opts.budget, &mut digest)?;
    let mut report = RunReport::new("close", digest.finish());
    let s = &loaded.semigroup;
    let verifier = verifier_text(s);
    let verified = verifier == "ok";
    report.semigroup = Some(SemigroupStats::of(s, loaded.generator_count, Some(verifier)));
    if opts.verify {
        report.check("inverse-semigroup", verified, None);
        if let Some(elements) = &loaded.elements {
            let mismatch = table_mismatch(&loaded, elements);
            report.check("table-matches-composition", mismatch.is_none(), mismatch);
        }
    } else if !verified {
        return Err(CliError::Invariant("closure failed the inverse semigroup verifier".into()));
    }
    Ok(report)
}

fn table_mismatch(loaded: &LoadedSemigroup, elements: &[invsg::PartialBijection]) -> Option<String> {
    let s = &loaded.semigroup;
    for a in s.elements() {
        if elements[s.inv(a)] != elements[a].invert() {
            return Some(format!("inverse of {}", s.label(a)));
        }
        for b in s.elements() {
            if Ok(&elements[s.mul(a, b)]) != elements[a].compose(&elements[b]).as_ref() {
                return Some(format!("{} * {}", s.label(a), s.label(b)));
            }
        }
    }
    None
}

/// Least upper bound by scanning every element, independent of the order module.
fn brute_join(s: &FiniteInverseSemigroup, set: &ElementSet) -> Option<usize> {
    let uppers: Vec<usize> = s.elements().filter(|&u| set.iter().all(|&a| s.leq(a, u))).collect();
    uppers.iter().copied().find(|&u| uppers.iter().all(|&v| s.leq(u, v)))
}

fn describe_violation(s: &FiniteInverseSemigroup, v: &CompletenessViolation) -> String {
    match v {
        CompletenessViolation::MissingJoin { set } => format!("no join of {{{}}}", labels(s, set).join(", ")),
        CompletenessViolation::LeftDistributivity { s: x, set } => {
            format!("{} * join{{{}}} breaks distributivity", s.label(*x), labels(s, set).join(", "))
        }
        CompletenessViolation::RightDistributivity { s: x, set } => {
            format!("join{{{}}} * {} breaks distributivity", labels(s, set).join(", "), s.label(*x))
        }
    }
}

fn recheck_violation(s: &FiniteInverseSemigroup, v: &CompletenessViolation) -> bool {
    let side = |set: &ElementSet, x: usize, left: bool| {
        let Some(join) = brute_join(s, set) else { return false };
        let image: ElementSet = set.iter().map(|&a| if left { s.mul(x, a) } else { s.mul(a, x) }).collect();
        let expected = if left { s.mul(x, join) } else { s.mul(join, x) };
        brute_join(s, &image) != Some(expected)
    };
    match v {
        CompletenessViolation::MissingJoin { set } => brute_join(s, set).is_none(),
        CompletenessViolation::LeftDistributivity { s: x, set } => side(set, *x, true),
        CompletenessViolation::RightDistributivity { s: x, set } => side(set, *x, false),
    }
}

pub fn cmd_props(path: &Path, opts: &Options) -> Result<RunReport, CliError> {
    let mut digest = InputDigest::default();
    let loaded = load_semigroup(path, opts.budget, &mut digest)?;
    let mut report = RunReport::new("props", digest.finish());
    let s = &loaded.semigroup;
    report.semigroup = Some(SemigroupStats::of(s, loaded.generator_count, None));

    let unitary = s.is_e_star_unitary();
    let variant = match unitary.variant {
        UnitaryVariant::EStar => "E*-unitary",
        UnitaryVariant::E => "E-unitary",
    };
    let completeness = s.is_complete_and_distributive(Some(opts.subset_budget));
    let flag = match &completeness {
        Completeness::Holds { subsets_checked } => {
            CompletenessFlag { status: "holds", subsets_checked: Some(*subsets_checked), violation: None }
        }
        Completeness::Fails(v) => {
            CompletenessFlag { status: "fails", subsets_checked: None, violation: Some(describe_violation(s, v)) }
        }
        Completeness::Inconclusive { .. } => {
            CompletenessFlag { status: "inconclusive", subsets_checked: None, violation: None }
        }
    };
    let pseudogroup = match completeness {
        Completeness::Inconclusive { .. } => None,
        ref c => Some(s.is_monoid() && c.holds()),
    };
    report.inconclusive = pseudogroup.is_none();
    report.properties = Some(PropertyFlags {
        all_idempotent: s.idempotents().len() == s.order(),
        unitary: UnitaryFlag { variant, holds: unitary.holds(), violation: unitary.violation.map(|v| s.label(v)) },
        completeness: flag,
        abstract_pseudogroup: pseudogroup,
    });

    if opts.verify {
        let zero = s.zero();
        let brute_unitary = s
            .elements()
            .filter(|&x| s.mul(x, x) != x)
            .all(|x| s.elements().all(|e| s.mul(e, e) != e || Some(e) == zero || s.mul(x, e) != e));
        report.check("unitary-scan", brute_unitary == unitary.holds(), None);
        match &completeness {
            Completeness::Holds { .. } => {
                let missing = s
                    .elements()
                    .flat_map(|a| s.elements().map(move |b| (a, b)))
                    .find(|&(a, b)| a < b && s.compatible(a, b) && brute_join(s, &[a, b].into()).is_none());
                let detail = missing.map(|(a, b)| format!("{} and {} have no join", s.label(a), s.label(b)));
                report.check("pairwise-joins", missing.is_none(), detail);
            }
            Completeness::Fails(v) => report.check("violation-recheck", recheck_violation(s, v), None),
            Completeness::Inconclusive { .. } => {}
        }
    }
    Ok(report)
}

pub fn cmd_germs(source: &GermSource, opts: &Options) -> Result<RunReport, CliError> {
    let mut digest = InputDigest::default();
    let (loaded_semigroup, loaded_action) = match source {
        GermSource::SelfAction(path) => (Some(load_semigroup(path, opts.budget, &mut digest)?), None),
        GermSource::ActionFile(path) => (None, Some(load_action(path, opts.budget, &mut digest)?)),
    };
    let (action, label, generators) = match (&loaded_semigroup, &loaded_action) {
        (Some(l), _) => (FiniteAction::left_translation(&l.semigroup), "left-translation", l.generator_count),
        (_, Some(a)) => (a.action()?, "file", a.semigroup.generator_count),
        _ => unreachable!(),
    };
    let s = action.semigroup();
    let mut report = RunReport::new("germs", digest.finish());
    report.semigroup = Some(SemigroupStats::of(s, generators, None));
    let g = GermGroupoid::build(&action);
    report.groupoid = Some(GroupoidStats {
        action: label,
        space_size: action.space_size(),
        omega: g.omega_len(),
        germs: g.class_count(),
        units: g.units().len(),
        arrows: g.class_count() - g.units().len(),
        isotropy: g.isotropy().len(),
        composable_pairs: g.composable_pairs(),
        principal: g.is_principal(),
        effective: g.is_effective(),
        essentially_principal: g.is_essentially_principal(),
    });
    if opts.verify {
        let axioms = g.check_axioms(&action);
        report.check("groupoid-axioms", axioms.is_ok(), axioms.err().map(|v| format!("{v:?}")));
        let oracle = oracle_mismatch(&action, &g)?;
        report.check("germ-classes-match-oracle", oracle.is_none(), oracle);
        let ftf = g.check_fixed_point_identities(&action);
        report.check(
            "fixed-point-identities",
            ftf.is_ok(),
            ftf.err().map(|v| format!("item {} at ({}, {})", v.item, s.label(v.element), v.point)),
        );
        let closed = s.elements().find(|&x| !action.trivially_fixed_is_closed(x));
        report.check("trivially-fixed-closed", closed.is_none(), closed.map(|x| s.label(x)));
        if label == "left-translation" {
            let unequal = s.elements().find(|&x| {
                let (fixed, trivially_fixed) = action.fixed_sets(x);
                fixed != trivially_fixed
            });
            report.check("fixed-equals-trivially-fixed", unequal.is_none(), unequal.map(|x| s.label(x)));
            let form = fixed_point_form_violation(s);
            report.check("fixed-point-form", form.is_none(), form.map(|x| s.label(x)));
        }
    }
    Ok(report)
}

fn oracle_mismatch(action: &FiniteAction<'_>, g: &GermGroupoid) -> Result<Option<String>, CliError> {
    let s = action.semigroup();
    for a in s.elements() {
        for b in s.elements() {
            for &x in action.source_domain(a).intersection(action.source_domain(b)) {
                let oracle = action.germ_equiv_oracle(a, b, x).map_err(|e| CliError::Invariant(e.to_string()))?;
                if oracle != (g.class_of(a, x) == g.class_of(b, x)) {
                    return Ok(Some(format!("({}, {x}) vs ({}, {x})", s.label(a), s.label(b))));
                }
            }
        }
    }
    Ok(None)
}

pub fn cmd_criterion(path: &Path, elements: &[String], opts: &Options) -> Result<RunReport, CliError> {
    let mut digest = InputDigest::default();
    let loaded = load_semigroup(path, opts.budget, &mut digest)?;
    for e in elements {
        digest.update(e.as_bytes());
    }
    let s = &loaded.semigroup;
    let subjects: Vec<usize> = if elements.is_empty() {
        s.elements().collect()
    } else {
        elements.iter().map(|e| resolve_element(s, &ElementRef::Label(e.clone()))).collect::<Result<_, _>>()?
    };
    let mut report = RunReport::new("criterion", digest.finish());
    report.semigroup = Some(SemigroupStats::of(s, loaded.generator_count, None));
    for &x in &subjects {
        let v = s.hausdorff_criterion(x);
        let verdict = match v.verdict {
            Verdict::HausdorffWitness => "HAUSDORFF_WITNESS",
            Verdict::Refuted => "REFUTED",
            Verdict::Inconclusive { .. } => {
                report.inconclusive = true;
                "INCONCLUSIVE"
            }
        };
        report.criteria.push(CriterionEntry {
            element: s.label(x),
            j_set: labels(s, &v.j_set),
            verdict,
            witness: v.witness.as_ref().map(|f| labels(s, f)),
        });
        if opts.verify {
            let name = format!("cover-conditions {}", s.label(x));
            if v.j_set.len() > MAX_EXHAUSTIVE_J {
                let ok = v.witness.as_ref().is_some_and(|f| s.down_closure(f) == v.j_set);
                report.check(name, ok, Some(format!("subset search skipped, |J_s| = {}", v.j_set.len())));
                continue;
            }
            let cmp = s.compare_cover_conditions(x).map_err(|e| CliError::Invariant(e.to_string()))?;
            let minimal = match (&v.witness, cmp.smallest_witness) {
                (Some(f), Some(k)) => f.len() == k,
                _ => false,
            };
            let ok = cmp.agree() && cmp.condition3 && minimal;
            let detail = (!ok).then(|| format!("{cmp:?}"));
            report.check(name, ok, detail);
        }
    }
    Ok(report)
}

fn parse_symbolic(query: &SymbolicQuery) -> Result<SymbolicCriterionReport, CliError> {
    let parse = |e: invsg::Error| CliError::Parse(e.to_string());
    Ok(match query.family {
        FamilyKind::Munn => munn_criterion(&MunnTree::parse(&query.element, query.rank).map_err(parse)?),
        FamilyKind::Graph => {
            let g = Graph::parse(&query.graph).map_err(parse)?;
            graph_criterion(&g.parse_element(&query.element).map_err(parse)?)
        }
        FamilyKind::AtomFlip => {
            let tag: AtomFlip = query.element.parse().map_err(parse)?;
            atomflip_criterion(tag, query.truncation).map_err(parse)?
        }
    })
}

fn query_digest(query: &SymbolicQuery) -> String {
    let mut digest = InputDigest::default();
    let family = match query.family {
        FamilyKind::Munn => "munn",
        FamilyKind::Graph => "graph",
        FamilyKind::AtomFlip => "atom-flip",
    };
    digest.update(family.as_bytes());
    digest.update(query.element.as_bytes());
    match query.family {
        FamilyKind::Munn => digest.update(format!("{:?}", query.rank).as_bytes()),
        FamilyKind::Graph => digest.update(query.graph.as_bytes()),
        FamilyKind::AtomFlip => digest.update(format!("{:?}", query.truncation).as_bytes()),
    }
    digest.finish()
}

pub fn cmd_symbolic(command: &'static str, query: &SymbolicQuery, opts: &Options) -> Result<RunReport, CliError> {
    let result = parse_symbolic(query)?;
    let mut report = RunReport::new(command, query_digest(query));
    let (verdict, witness, antichain) = match &result.verdict {
        SymbolicVerdict::HausdorffWitness(f) => {
            ("HAUSDORFF_WITNESS", Some(f.iter().map(|e| e.to_string()).collect()), None)
        }
        SymbolicVerdict::Refuted(generator) => ("REFUTED", None, Some(generator.description.clone())),
    };
    report.symbolic = Some(SymbolicEntry {
        family: result.family,
        element: result.element.to_string(),
        j_set: result.j_set_description.clone(),
        verdict,
        witness,
        antichain,
    });
    if opts.verify {
        let (name, outcome) = verify_symbolic(query, &result)?;
        report.check(name, outcome.is_none(), outcome);
    }
    Ok(report)
}

/// Bounded cross-checks of a symbolic verdict. Returns a failure description.
fn verify_symbolic(
    query: &SymbolicQuery,
    result: &SymbolicCriterionReport,
) -> Result<(&'static str, Option<String>), CliError> {
    match (&result.element, &result.verdict) {
        (SymbolicElement::Munn(s), SymbolicVerdict::HausdorffWitness(f)) => {
            let pool = MunnTree::pool(s.rank(), MUNN_ORACLE_VERTICES);
            let covered = |e: &MunnTree| f.iter().any(|w| matches!(w, SymbolicElement::Munn(w) if e.natural_leq(w)));
            let bad = pool.iter().find(|e| e.is_idempotent() && s.product(e) == **e && !covered(e));
            Ok(("bounded-munn-pool", bad.map(|e| format!("{e} is in J_s but not covered"))))
        }
        (SymbolicElement::PathPair(s), SymbolicVerdict::HausdorffWitness(f)) => {
            let g = Graph::parse(&query.graph).map_err(|e| CliError::Parse(e.to_string()))?;
            let pool = g.pool(GRAPH_ORACLE_LENGTH);
            let covered =
                |e: &PathPair| f.iter().any(|w| matches!(w, SymbolicElement::PathPair(w) if e.natural_leq(w)));
            let bad = pool.iter().find(|e| e.is_idempotent() && s.product(e) == **e && !covered(e));
            Ok(("bounded-path-pool", bad.map(|e| format!("{e} is in J_s but not covered"))))
        }
        (SymbolicElement::AtomFlip(s), SymbolicVerdict::Refuted(generator)) => {
            let idempotents: Vec<AtomFlip> =
                AtomFlip::truncation(ANTICHAIN_WINDOW + 1).into_iter().filter(|e| e.is_idempotent()).collect();
            let member = |i| match generator.member(i) {
                SymbolicElement::AtomFlip(a) => a,
                _ => AtomFlip::Zero,
            };
            let outcome = verify_antichain(s, member, ANTICHAIN_WINDOW, &idempotents, &AtomFlip::Zero);
            Ok(("antichain", outcome.err().map(|v| format!("{v:?}"))))
        }
        (SymbolicElement::AtomFlip(s), SymbolicVerdict::HausdorffWitness(f)) => {
            // an idempotent keeps its witness in any truncation that contains it
            let window = query.truncation.unwrap_or(atom_index(*s).max(1));
            let table = atom_flip::truncate(window);
            let index = table.find_label(&s.to_string()).expect("element lies in the truncation");
            let v = table.hausdorff_criterion(index);
            let expected: Vec<String> = v.witness.unwrap_or_default().iter().map(|&i| table.label(i)).collect();
            let actual: Vec<String> = f.iter().map(|e| e.to_string()).collect();
            Ok(("truncation-table", (expected != actual).then(|| format!("table witness {expected:?}"))))
        }
        (_, SymbolicVerdict::Refuted(_)) => Ok(("refutation", Some("unexpected refutation".into()))),
    }
}

fn atom_index(s: AtomFlip) -> u64 {
    match s {
        AtomFlip::Atom(i) => i,
        _ => 0,
    }
}
