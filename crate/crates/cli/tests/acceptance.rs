//! Acceptance gate. Prints one `[PASS]`/`[FAIL]` line per criterion and exits
//! non-zero if any criterion fails. Every limit is pinned below.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use invsg::fixtures::{self, Fixture};
use invsg::germ::fixed_point_form_violation;
use invsg::symbolic::{
    atom_flip, atomflip_criterion, graph_criterion, munn_criterion, unitarity_violation, verify_antichain, AtomFlip,
    Graph, MunnTree, PathPair, SymbolicElement, SymbolicVerdict,
};
use invsg::{
    close, verify_inverse_semigroup, CayleyTable, FiniteAction, GermGroupoid, PartialBijection, SemigroupElement,
    Verdict, Violation,
};

const AC1_LIMIT: Duration = Duration::from_secs(1);
const AC2_LIMIT_EACH: Duration = Duration::from_secs(1);
const AC8_LIMIT: Duration = Duration::from_secs(1);
const AC8_MAX_ATOMS: u64 = 64;
const AC9_LIMIT: Duration = Duration::from_secs(10);
/// Path length and Munn vertex bounds for the bounded unitarity scans.
const AC7_PATH_LENGTH: usize = 3;
const AC7_MUNN_VERTICES: usize = 4;
const AC7_MUNN_RANK: u32 = 2;
const AC7_GRAPH: &str = "1>2, 2>2, 1>2";

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// `Σ_k C(n,k)² k!`, the number of partial bijections of an n-set.
fn partial_bijection_count(n: u64) -> u64 {
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    (0..=n).map(|k| binom(n, k).pow(2) * (1..=k).product::<u64>()).sum()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut orders = Vec::new();
    for n in [2usize, 3] {
        let closure = close(&PartialBijection::all(n), usize::MAX).map_err(|e| e.to_string())?;
        let expected = partial_bijection_count(n as u64) as usize;
        ensure(closure.semigroup.order() == expected, || {
            format!("I_{n}: order {} vs count {expected}", closure.semigroup.order())
        })?;
        ensure(verify_inverse_semigroup(closure.semigroup.table()).is_ok(), || format!("I_{n} fails the verifier"))?;
        orders.push(expected);
    }
    let elapsed = start.elapsed();
    within(elapsed, AC1_LIMIT)?;
    Ok(format!("orders {orders:?} in {elapsed:.2?}"))
}

fn ac2(all: &[Fixture]) -> Outcome {
    let mut slowest = Duration::ZERO;
    for fx in all {
        let start = Instant::now();
        verify_inverse_semigroup(fx.semigroup.table()).map_err(|v| format!("{}: {v:?}", fx.name))?;
        let elapsed = start.elapsed();
        within(elapsed, AC2_LIMIT_EACH).map_err(|e| format!("{}: {e}", fx.name))?;
        slowest = slowest.max(elapsed);
    }
    let left_zero = CayleyTable::from_rows(&[vec![0, 0], vec![1, 1]]).map_err(|e| e.to_string())?;
    match verify_inverse_semigroup(&left_zero) {
        Err(Violation::MultipleInverses { .. }) => {}
        other => return Err(format!("left-zero table: {other:?}")),
    }
    Ok(format!("{} fixtures accepted, left-zero rejected, slowest {slowest:.2?}", all.len()))
}

fn ac3(all: &[Fixture]) -> Outcome {
    let mut checked = 0;
    for fx in all {
        let s = &fx.semigroup;
        for x in s.elements() {
            let cmp = s.compare_cover_conditions(x).map_err(|e| format!("{}: {e}", fx.name))?;
            ensure(cmp.agree(), || format!("{} at {}: {cmp:?}", fx.name, s.label(x)))?;
            ensure(cmp.condition3, || format!("{} at {}: no finite cover", fx.name, s.label(x)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements, 0 disagreements"))
}

fn ac4(all: &[Fixture]) -> Outcome {
    let mut pairs = 0;
    for fx in all {
        let s = &fx.semigroup;
        let action = FiniteAction::left_translation(s);
        let g = GermGroupoid::build(&action);
        ensure(g.is_principal() && g.is_effective() && g.is_essentially_principal(), || {
            format!("{}: groupoid not principal", fx.name)
        })?;
        g.check_fixed_point_identities(&action).map_err(|v| format!("{}: {v:?}", fx.name))?;
        for x in s.elements() {
            let (fixed, trivially_fixed) = action.fixed_sets(x);
            ensure(fixed == trivially_fixed, || format!("{}: F_s ≠ TF_s at {}", fx.name, s.label(x)))?;
        }
        pairs += g.omega_len();
    }
    Ok(format!("{pairs} (s, x) pairs, 0 violations"))
}

fn ac5(all: &[Fixture]) -> Outcome {
    for fx in all {
        if let Some(x) = fixed_point_form_violation(&fx.semigroup) {
            return Err(format!("{} at {}", fx.name, fx.semigroup.label(x)));
        }
    }
    Ok(format!("{} fixtures", all.len()))
}

fn ac6() -> Outcome {
    let mut checked = 0;
    for n in [2, 3] {
        let s = fixtures::symmetric_inverse_monoid(n).semigroup;
        for x in s.elements() {
            let j = s.j_set(x);
            let join = s.join(&j).map_err(|e| e.to_string())?.ok_or_else(|| format!("I_{n}: no join of J_s"))?;
            ensure(j.contains(&join), || format!("I_{n}: join of J_{} outside J_s", s.label(x)))?;
            ensure(s.down_closure(&[join].into()) == j, || format!("I_{n}: join does not cover J_{}", s.label(x)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements of I_2 and I_3"))
}

fn ac7() -> Outcome {
    let graph = Graph::parse(AC7_GRAPH).map_err(|e| e.to_string())?;
    let paths = graph.pool(AC7_PATH_LENGTH);
    if let Some((s, e)) = unitarity_violation(&paths, Some(&PathPair::Zero)) {
        return Err(format!("graph: {s} fixes {e}"));
    }
    let trees = MunnTree::pool(AC7_MUNN_RANK, AC7_MUNN_VERTICES);
    if let Some((s, e)) = unitarity_violation(&trees, None) {
        return Err(format!("munn: {s} fixes {e}"));
    }
    for s in &paths {
        let report = graph_criterion(s);
        let f = report.witness().ok_or("graph refutation")?;
        ensure(f.len() <= 1, || format!("graph: |F| = {} at {s}", f.len()))?;
        // every idempotent of the pool in J_s lies below the witness
        for e in paths.iter().filter(|e| e.is_idempotent() && s.product(e) == **e) {
            let covered = f.iter().any(|w| matches!(w, SymbolicElement::PathPair(w) if e.natural_leq(w)));
            ensure(covered, || format!("graph: {e} in J_{s} not covered"))?;
        }
    }
    for s in &trees {
        let report = munn_criterion(s);
        let f = report.witness().ok_or("munn refutation")?;
        ensure(f.len() <= 1, || format!("munn: |F| = {} at {s}", f.len()))?;
        for e in trees.iter().filter(|e| e.is_idempotent() && s.product(e) == **e) {
            let covered = f.iter().any(|w| matches!(w, SymbolicElement::Munn(w) if e.natural_leq(w)));
            ensure(covered, || format!("munn: {e} in J_{s} not covered"))?;
        }
    }
    Ok(format!("{} path pairs, {} Munn trees, every |F| ≤ 1", paths.len(), trees.len()))
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let report = atomflip_criterion(AtomFlip::Flip, None).map_err(|e| e.to_string())?;
    let SymbolicVerdict::Refuted(generator) = &report.verdict else {
        return Err("infinite family not refuted".into());
    };
    let idempotents: Vec<AtomFlip> =
        AtomFlip::truncation(AC8_MAX_ATOMS + 1).into_iter().filter(|e| e.is_idempotent()).collect();
    let member = |i| match generator.member(i) {
        SymbolicElement::AtomFlip(a) => a,
        _ => AtomFlip::Zero,
    };
    verify_antichain(&AtomFlip::Flip, member, AC8_MAX_ATOMS, &idempotents, &AtomFlip::Zero)
        .map_err(|v| format!("antichain: {v:?}"))?;
    for n in 1..=AC8_MAX_ATOMS {
        let s = atom_flip::truncate(n);
        let flip = s.find_label("FLIP").ok_or("no FLIP")?;
        let v = s.hausdorff_criterion(flip);
        let f = v.witness.ok_or_else(|| format!("F_{n}: no witness"))?;
        ensure(v.verdict == Verdict::HausdorffWitness && f.len() == n as usize, || {
            format!("F_{n}: witness of size {}", f.len())
        })?;
        ensure(f.iter().all(|&i| s.label(i).starts_with("ATOM")), || format!("F_{n}: non-atom in witness"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, AC8_LIMIT)?;
    Ok(format!(
        "REFUTED with {AC8_MAX_ATOMS}-atom antichain verified, |F| = n for n = 1..={AC8_MAX_ATOMS}, {elapsed:.2?}"
    ))
}

fn ac9(all: &[Fixture]) -> Outcome {
    let start = Instant::now();
    let mut largest = 0;
    let mut pairs = 0u64;
    for fx in all {
        let s = &fx.semigroup;
        let action = FiniteAction::left_translation(s);
        let g = GermGroupoid::build(&action);
        for a in s.elements() {
            for b in s.elements() {
                for &x in action.source_domain(a).intersection(action.source_domain(b)) {
                    let oracle = action.germ_equiv_oracle(a, b, x).map_err(|e| e.to_string())?;
                    ensure(oracle == (g.class_of(a, x) == g.class_of(b, x)), || {
                        format!("{}: ({}, {x}) vs ({}, {x})", fx.name, s.label(a), s.label(b))
                    })?;
                    pairs += 1;
                }
            }
        }
        largest = largest.max(g.omega_len());
    }
    let elapsed = start.elapsed();
    within(elapsed, AC9_LIMIT)?;
    Ok(format!("{pairs} pairs, largest |Ω| = {largest}, {elapsed:.2?}"))
}

fn ac10() -> Outcome {
    let fixture = |name: &str| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
    };
    let runs: Vec<Vec<String>> = vec![
        vec!["close".into(), fixture("i3.json"), "--verify".into()],
        vec!["props".into(), fixture("i3.json"), "--format".into(), "structured".into()],
        vec!["germs".into(), fixture("i3.json"), "--self".into(), "--verify".into()],
        vec![
            "criterion".into(),
            fixture("atom-flip-3.json"),
            "--verify".into(),
            "--format".into(),
            "structured".into(),
        ],
        vec!["symbolic".into(), "--family".into(), "atom-flip".into(), "--element".into(), "FLIP".into()],
    ];
    for args in &runs {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_invsg"))
                .args(args)
                .env_remove("INVSG_BUDGET")
                .env_remove("INVSG_SUBSET_BUDGET")
                .output()
                .map_err(|e| e.to_string())
        };
        let (first, second) = (run()?, run()?);
        ensure(first.status.success(), || format!("{args:?} exited {:?}", first.status.code()))?;
        ensure(first.stdout == second.stdout, || format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

fn main() -> ExitCode {
    let all = fixtures::all_fixtures();
    let criteria: [Criterion; 10] = [
        ("AC1", "closure orders", Box::new(ac1)),
        ("AC2", "inverse semigroup axioms", Box::new(|| ac2(&all))),
        ("AC3", "cover conditions agree", Box::new(|| ac3(&all))),
        ("AC4", "left-translation groupoids principal", Box::new(|| ac4(&all))),
        ("AC5", "fixed points are unions of right ideals", Box::new(|| ac5(&all))),
        ("AC6", "pseudogroup joins witness the criterion", Box::new(ac6)),
        ("AC7", "bounded unitarity scans", Box::new(ac7)),
        ("AC8", "atom-flip refutation", Box::new(ac8)),
        ("AC9", "germ classes match oracle", Box::new(|| ac9(&all))),
        ("AC10", "deterministic reports", Box::new(ac10)),
    ];
    let mut failed = 0;
    for (id, name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
