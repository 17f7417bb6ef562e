//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//! Runs as a plain binary (`harness = false`) so the lines print in order.

use std::time::{Duration, Instant};

use homcalc::bicov::{self, BraidingMode};
use homcalc::cli;
use homcalc::fixtures::{self, H4_MUTATIONS, ZN_MUTATIONS};
use homcalc::fodc::{self, FodcPresentation};
use homcalc::graded::{self, RANDOM_SAMPLES};
use homcalc::hopf::{check_axioms, group_algebra_zn, sweedler_h4, HomHopfAlgebra, Level};
use homcalc::io::{self, AlgebraSpecFile};
use homcalc::report::{AxiomReport, Check};
use homcalc::scalar::int;
use homcalc::tangent;

type Outcome = Result<String, String>;

/// Title, runtime limit in seconds, and the check itself.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

/// Every named check is present and passing, and so is the whole report.
fn require(r: &AxiomReport, names: &[&str]) -> Result<(), String> {
    for n in names {
        match r.get(n) {
            None => return Err(format!("{}: no check `{n}`", r.subject)),
            Some(c) if !c.passed() => return Err(format!("{}: `{n}` fails at {:?}", r.subject, c.witness)),
            Some(_) => {}
        }
    }
    match r.failures().next() {
        Some(c) => Err(format!("{}: `{}` fails at {:?}", r.subject, c.name, c.witness)),
        None => Ok(()),
    }
}

fn check<'a>(r: &'a AxiomReport, name: &str) -> Result<&'a Check, String> {
    r.get(name).ok_or_else(|| format!("{}: no check `{name}`", r.subject))
}

fn criterion_1() -> Outcome {
    let algebras = fixtures::catalog();
    for h in &algebras {
        require(&check_axioms(h, Level::Hopf), &["hom_associativity", "hom_coassociativity", "antipode"])?;
    }
    let mut fixtures = fixtures::mutations(&sweedler_h4(&int(-1)).unwrap(), &H4_MUTATIONS);
    for h in [group_algebra_zn(3, 2).unwrap(), group_algebra_zn(5, 2).unwrap()] {
        fixtures.extend(fixtures::mutations(&h, &ZN_MUTATIONS));
    }
    for (label, data) in &fixtures {
        let h = HomHopfAlgebra::new(data.clone()).map_err(|e| format!("{label}: {e}"))?;
        let r = check_axioms(&h, Level::Hopf);
        let bad = r.failures().next().ok_or_else(|| format!("mutation {label} passes every axiom"))?;
        if bad.witness.is_none() {
            return Err(format!("mutation {label}: `{}` fails without a witness", bad.name));
        }
    }
    Ok(format!("{} algebras pass, {} mutations fail with witnesses", algebras.len(), fixtures.len()))
}

fn criterion_2() -> Outcome {
    let cap = 5;
    let mut cases = 0;
    for h in [group_algebra_zn(2, 1).unwrap(), group_algebra_zn(3, 2).unwrap(), sweedler_h4(&int(-1)).unwrap()] {
        let r = graded::verify(&h, cap, 11);
        require(
            &r,
            &[
                "d_squared_zero",
                "graded_leibniz",
                "derivative_of_monomials",
                "kernel_of_multiplication",
                "right_action_closed_vs_inductive",
                "right_action_random",
            ],
        )?;
        let random = check(&r, "right_action_random")?.cases;
        if random < 20 {
            return Err(format!("only {random} random samples"));
        }
        cases += check(&r, "graded_leibniz")?.cases;
    }
    Ok(format!("cap {cap}, {cases} Leibniz pairs, {RANDOM_SAMPLES} random degree-4 samples per algebra"))
}

fn criterion_3() -> Outcome {
    for h in fixtures::catalog() {
        let f = fodc::universal_fodc(&h);
        let n = h.dim();
        if f.dim() != n * (n - 1) {
            return Err(format!("{}: dim {} != {}", h.name(), f.dim(), n * (n - 1)));
        }
        let r = fodc::verify_fodc(&f);
        require(&r, &["leibniz", "omega_right_action", "dh_via_omega", "left_covariance.kernel_inclusion", "left_covariance.d_colinear"])?;
    }
    Ok("dim n(n-1), Leibniz, omega right action, dh expansion, kernel test and d colinearity on 14 algebras".into())
}

fn criterion_4() -> Outcome {
    let same = |a: &FodcPresentation, b: &FodcPresentation| a.basis() == b.basis();
    let mut count = 0;
    for h in fixtures::catalog() {
        for r in [FodcPresentation::zero(), FodcPresentation::full(&h)] {
            if !same(&fodc::recover_ideal(&fodc::quotient_fodc(&h, &r)), &r) {
                return Err(format!("{}: round trip fails for an ideal of dim {}", h.name(), r.dim()));
            }
            count += 1;
        }
    }
    for (h, ideals) in fixtures::ideal_fixtures() {
        if ideals.is_empty() {
            return Err(format!("{}: search found no ideal", h.name()));
        }
        for r in &ideals {
            if !same(&fodc::recover_ideal(&fodc::quotient_fodc(&h, r)), r) {
                return Err(format!("{}: round trip fails for {:?}", h.name(), r.basis()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} ideals recovered exactly"))
}

/// Universal calculi over the catalog plus every search-found quotient.
fn calculi() -> Vec<fodc::Fodc> {
    let mut out: Vec<fodc::Fodc> = fixtures::catalog().iter().map(fodc::universal_fodc).collect();
    for (h, ideals) in fixtures::ideal_fixtures() {
        out.extend(ideals.iter().map(|r| fodc::quotient_fodc(&h, r)));
    }
    out
}

fn criterion_5() -> Outcome {
    let mut notes = std::collections::BTreeSet::new();
    let all = calculi();
    for f in &all {
        let phi = fodc::left_covariance(f).1.ok_or("calculus is not left-covariant")?;
        let r = tangent::verify_tangent_identities(f, &phi);
        require(
            &r,
            &[
                "nondegenerate_pairing",
                "dual_basis",
                "pairing_omega",
                "d_expansion",
                "x_hg_expansion",
                "dual_hopf.antipode",
                "dual_hopf.hom_coassociativity",
                "delta_f",
                "delta_x",
            ],
        )?;
        for name in ["x_hg_expansion", "delta_x"] {
            notes.insert(format!("{name}: {}", check(&r, name)?.note.clone().unwrap_or_default()));
        }
    }
    let notes: Vec<String> = notes.into_iter().collect();
    Ok(format!("{} calculi; readings: {}", all.len(), notes.join(" | ")))
}

fn criterion_6() -> Outcome {
    for h in fixtures::catalog() {
        require(
            &bicov::check_adjoint_coactions(&h),
            &["ad_r.hom_coassociative", "ad_r.counit", "ad_r.dual_expression", "ad_l.hom_coassociative", "ad_l.dual_expression"],
        )?;
    }
    let (mut bicovariant, mut other) = (0, 0);
    for f in calculi() {
        let (r, b) = bicov::check_bicovariance(&f);
        require(&r, &["decisions_agree"])?;
        let Some(b) = b else {
            other += 1;
            continue;
        };
        bicovariant += 1;
        let mut lemmas = AxiomReport::new(format!("lemmas over {}", f.base().name()));
        for c in bicov::check_lemmas(&f, &b) {
            lemmas.push(c);
        }
        require(&lemmas, &["phi_r_omega", "phi_l_eta", "eta_reconstructs_d"])?;
    }
    Ok(format!("verdicts agree on {} calculi ({bicovariant} bicovariant, {other} not); lemmas exact", bicovariant + other))
}

fn criterion_7() -> Outcome {
    let mut tuples = 0;
    for h in [group_algebra_zn(2, 1).unwrap(), group_algebra_zn(4, 3).unwrap(), sweedler_h4(&int(-1)).unwrap()] {
        let f = fodc::universal_fodc(&h);
        let r = bicov::verify_lie(&f, BraidingMode::Woronowicz).map_err(|e| e.to_string())?;
        require(&r, &["item1_ad_tilde", "item1_braided_commutator", "item2_invariant_tensors", "item3_braided_jacobi"])?;
        tuples += check(&r, "item3_braided_jacobi")?.cases;
        let r = bicov::verify_lie(&f, BraidingMode::Flip).map_err(|e| e.to_string())?;
        require(&r, &["flip_antisymmetry", "flip_hom_jacobi"])?;
    }
    Ok(format!("items (1)-(3) and the flip identities hold; {tuples} Jacobi triples"))
}

fn criterion_8() -> Outcome {
    for h in fixtures::catalog() {
        let f = AlgebraSpecFile::from_data(h.data());
        let back = AlgebraSpecFile::from_json(&f.to_json()).map_err(|e| e.to_string())?;
        if back.to_data().map_err(|e| e.to_string())? != *h.data() {
            return Err(format!("{}: round trip changes the data", h.name()));
        }
    }
    let dir = std::env::temp_dir().join(format!("homcalc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let run = |args: &[&str]| cli::run(std::iter::once("homcalc").chain(args.iter().copied()));
    let write = |name: &str, body: &str| std::fs::write(path(name), body).map_err(|e| e.to_string());

    let o = run(&["builtin", "sweedler_h4", "--param", "lambda=-1"]);
    write("h4.json", &o.stdout)?;
    let o = run(&["builtin", "group_algebra_Zn", "--param", "n=4", "--param", "e=3"]);
    write("z4.json", &o.stdout)?;
    write("z4_ideal.json", &io::emit_vectors(&[vec![int(1), int(-1), int(1), int(-1)]]))?;

    for fmt in ["json", "text"] {
        let a = run(&["verify", &path("h4.json"), "--report", fmt]);
        let b = run(&["verify", &path("h4.json"), "--report", fmt]);
        if a.code != 0 {
            return Err(format!("verify on H4(-1) exits {}", a.code));
        }
        if a.stdout != b.stdout {
            return Err(format!("{fmt} report differs between runs"));
        }
    }
    let v: serde_json::Value = serde_json::from_str(&run(&["verify", &path("h4.json")]).stdout).map_err(|e| e.to_string())?;
    let subjects: Vec<String> = v["reports"].as_array().ok_or("no reports")?.iter().map(|r| r["subject"].to_string()).collect();
    for needle in ["round trip", "axioms", "graded", "ideal correspondence", "tangent", "bicovariant structure"] {
        if !subjects.iter().any(|s| s.contains(needle)) {
            return Err(format!("verify report has no `{needle}` section"));
        }
    }
    let q = run(&["verify", &path("z4.json"), "--ideal", &path("z4_ideal.json")]);
    if q.code != 0 {
        return Err(format!("verify on the kZ4 quotient exits {}", q.code));
    }

    let mut singular: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path("z4.json")).unwrap()).unwrap();
    singular["alpha"][1][1] = "0".into();
    singular["alpha"][3][1] = "0".into();
    write("singular.json", &singular.to_string())?;
    let s = run(&["validate", &path("singular.json")]);
    if s.code != 1 || !s.stdout.contains("SingularMatrix") {
        return Err(format!("singular alpha: exit {}, output lacks a SingularMatrix witness", s.code));
    }
    write("broken.json", "{\"name\": 3")?;
    let m = run(&["validate", &path("broken.json")]);
    let err: serde_json::Value = serde_json::from_str(&m.stdout).map_err(|e| format!("error output is not JSON: {e}"))?;
    if m.code != 2 || err["error"]["message"].is_null() {
        return Err(format!("malformed input: exit {}", m.code));
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok("byte-stable json and text reports, exit codes 0/1/2, round trip on 14 algebras".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom suite", Some(5), criterion_1),
        ("graded universal calculus", Some(30), criterion_2),
        ("universal first-order calculus", None, criterion_3),
        ("ideal correspondence", None, criterion_4),
        ("tangent space and pairing", None, criterion_5),
        ("adjoint coactions and bicovariance", None, criterion_6),
        ("quantum Hom-Lie algebra", Some(60), criterion_7),
        ("command line", None, criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = limit.filter(|s| took > Duration::from_secs(*s));
        let budget = limit.map(|s| format!(", limit {s} s")).unwrap_or_default();
        let (verdict, detail) = match (&outcome, over) {
            (Ok(d), None) => ("PASS", d.clone()),
            (Ok(d), Some(s)) => ("FAIL", format!("over the {s} s limit; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {} {title}: {verdict} ({:.2} s{budget}) {detail}", i + 1, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
