//! Acceptance run: one line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are still computed and reported as
//! FAIL; the process only exits nonzero when the outcome differs from that
//! list.

mod common;

use qtangent::cohomology::{cohomology, SpinRep};
use qtangent::coideal::dim_lower_bound;
use qtangent::fixtures::{
    builtin_calculi, builtin_coideals, builtin_list, builtin_references, find_calculus, CalculusRecord,
};
use qtangent::fodc::{pairing_table, FodcModel, TangentSpace};
use qtangent::lists::{check_entry, check_item, filter_list, generates_right_ideal, isomorphic};
use qtangent::oq::Pairing;
use qtangent::parse::{parse_o, parse_scalar, parse_u};
use qtangent::structures::solve_braiding;
use qtangent::verify::{verify_calculus, Check, VerifyOptions};
use qtangent::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::Instant;

/// Items 4 and 5 of the filtered list have universal 2-form dimension 2.
const KNOWN_FAILURES: &[u32] = &[4];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

fn tangent(rec: &CalculusRecord) -> Result<TangentSpace> {
    TangentSpace::new(rec.basis()?)
}

fn hopf_axioms() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bad = [0usize; 4];
    for _ in 0..200 {
        let x = common::element(&mut rng);
        let y = common::element(&mut rng);
        let dx = x.coproduct();
        if dx.coproduct_left() != dx.coproduct_right() {
            bad[0] += 1;
        }
        if dx.counit_left() != x || dx.counit_right() != x {
            bad[1] += 1;
        }
        let unit = qtangent::uq::UElement::scalar(x.counit());
        if dx.contract(|a| a.antipode(), Clone::clone) != unit
            || dx.contract(Clone::clone, |b| b.antipode()) != unit
        {
            bad[2] += 1;
        }
        if x.mul(&y).coproduct() != dx.mul(&y.coproduct()) {
            bad[3] += 1;
        }
    }
    outcome(
        bad == [0; 4],
        format!(
            "200 elements; failures: coassociativity {}, counit {}, antipode {}, multiplicativity {}",
            bad[0], bad[1], bad[2], bad[3]
        ),
    )
}

fn pairing_tables(calculi: &[CalculusRecord]) -> Result<Outcome> {
    let mut p = Pairing::new();
    let (mut nonzero, mut zero, mut wrong) = (0, 0, 0);
    for rec in calculi {
        let got = pairing_table(&tangent(rec)?, &mut p);
        for (g, w) in got.iter().flatten().zip(rec.pairing_rows()?.iter().flatten()) {
            if g != w {
                wrong += 1;
            }
            if w.is_zero() {
                zero += 1;
            } else {
                nonzero += 1;
            }
        }
    }
    let calc1 = find_calculus(calculi, "calc1")?;
    let h = &calc1.basis()?[0];
    let sample = p.pair(h, &parse_o("u12*u21")?);
    let expected = parse_scalar("2*(q^-1 - q)/(q^2 + q^-2)")?;
    outcome(
        wrong == 0 && sample == expected,
        format!(
            "{} tables, {nonzero} nonzero and {zero} zero entries, {wrong} mismatches; calc1 <H, u12*u21> = {sample}",
            calculi.len()
        ),
    )
}

fn coideal_fixtures() -> Result<Outcome> {
    let set = builtin_coideals();
    let mut total = 0;
    let mut failed = Vec::new();
    for rec in &set {
        for r in check_entry(&set, rec)? {
            total += 1;
            if !r.passed {
                failed.push(format!("{} {}", r.entry, r.kind));
            }
        }
    }
    let x = parse_u(
        "K^6*Gd(5) + (Fd(1)*K^6 - K^6)*Gd(4) + (Fd(2)*K^6*Ed(1) + K^6*Ed(3))*Gd(2) + Fd(3)*K^6",
    )?;
    let bound = dim_lower_bound(&x)?;
    outcome(
        failed.is_empty() && bound == 17,
        format!(
            "{} entries, {}/{total} samples as recorded{}; worked example bound {bound}",
            set.len(),
            total - failed.len(),
            if failed.is_empty() { String::new() } else { format!(" (failed: {})", failed.join(", ")) }
        ),
    )
}

struct ItemRun {
    reports: Vec<qtangent::lists::ItemReport>,
}

fn run_items() -> Result<ItemRun> {
    let reports = builtin_list().iter().map(check_item).collect::<Result<_>>()?;
    Ok(ItemRun { reports })
}

fn two_form_filter(items: &ItemRun) -> Result<Outcome> {
    let mut off = Vec::new();
    for r in &items.reports {
        let want = if matches!(r.item, 6 | 7) { 4 } else { 3 };
        if r.two_form_dim != want || !r.coideal || !r.li {
            off.push(format!("item {} has {} (want {want})", r.item, r.two_form_dim));
        }
    }
    let rows = filter_list(&builtin_coideals())?;
    let low: Vec<&str> = rows
        .iter()
        .filter(|r| r.li && r.two_form_dim < 3)
        .map(|r| r.entry.as_str())
        .collect();
    let excluded_ok = low.len() >= 3 && low.contains(&"X4_8");
    outcome(
        off.is_empty() && excluded_ok,
        format!(
            "{}/{} items match; {} LI families below 3 at generic samples (X4_8 among them: {}){}",
            items.reports.len() - off.len(),
            items.reports.len(),
            low.len(),
            low.contains(&"X4_8"),
            if off.is_empty() { String::new() } else { format!("; {}", off.join(", ")) }
        ),
    )
}

fn hopf_filter(items: &ItemRun) -> Result<Outcome> {
    let selected: Vec<u32> = items
        .reports
        .iter()
        .filter(|r| r.hopf_invariant)
        .map(|r| r.item)
        .collect();
    let want = [1, 8, 9, 10, 11, 12, 13, 14, 17, 18, 20];
    outcome(selected == want, format!("selected items {selected:?}"))
}

fn per_calculus(calculi: &[CalculusRecord]) -> Result<Outcome> {
    let opts = VerifyOptions {
        checks: vec![
            Check::Coideal,
            Check::Li,
            Check::UniversalDim,
            Check::Basis,
            Check::FMatrix,
            Check::Relations,
            Check::Fundamental,
            Check::RightIdeal,
            Check::Sym2,
            Check::MaurerCartan,
            Check::Exterior,
            Check::HopfInvariance,
            Check::RealForms,
        ],
        ..VerifyOptions::default()
    };
    let (mut clean, mut failed) = (0, Vec::new());
    for rec in calculi {
        let before = failed.len();
        for r in verify_calculus(rec, &opts)?.results {
            if !r.passed {
                failed.push(format!("{} {}", rec.name, r.check));
            }
        }
        clean += usize::from(failed.len() == before);
    }
    outcome(
        failed.is_empty(),
        format!(
            "{clean}/{} calculi pass all fixture checks{}",
            calculi.len(),
            if failed.is_empty() { String::new() } else { format!(" (failed: {})", failed.join(", ")) }
        ),
    )
}

fn braidings(calculi: &[CalculusRecord]) -> Result<(Outcome, Outcome)> {
    let opts = VerifyOptions {
        checks: vec![Check::Braiding, Check::Bracket, Check::Jacobi],
        ..VerifyOptions::default()
    };
    let (mut braided, mut braided_ok, mut bracket_ok) = (0, 0, 0);
    let mut none_ok = Vec::new();
    for rec in calculi {
        let report = verify_calculus(rec, &opts)?;
        let ok = |c| report.get(c).is_some_and(|r| r.passed);
        if rec.braiding.is_some() {
            braided += 1;
            braided_ok += usize::from(ok(Check::Braiding));
            bracket_ok += usize::from(ok(Check::Bracket) && ok(Check::Jacobi));
        } else {
            let model = FodcModel::build(&tangent(rec)?)?;
            if solve_braiding(&model)?.is_none() {
                none_ok.push(rec.number);
            }
        }
    }
    let c7 = outcome(
        braided == 9 && braided_ok == 9 && none_ok == [2, 7],
        format!("{braided_ok}/{braided} listed braidings verified with minimal polynomial (x-1)(x+q^2); solver returns none on calculi {none_ok:?}"),
    )?;
    let c8 = outcome(
        braided == 9 && bracket_ok == 9,
        format!("{bracket_ok}/{braided} brackets close on span(H, X, Y) and satisfy Jacobi"),
    )?;
    Ok((c7, c8))
}

fn cohomology_table(calculi: &[CalculusRecord]) -> Result<Outcome> {
    let (mut runs, mut failed) = (0, Vec::new());
    for rec in calculi {
        let model = FodcModel::build(&tangent(rec)?)?;
        for l in 0..=5 {
            runs += 1;
            let r = cohomology(&model, SpinRep::new(l));
            if !r.passed() {
                failed.push(format!("{} 2λ={l} {:?}", rec.name, r.dims));
            }
        }
    }
    outcome(
        failed.is_empty(),
        format!("{}/{runs} complexes with expected dims, d² = 0 and χ = 0{}", runs - failed.len(),
            if failed.is_empty() { String::new() } else { format!(" (failed: {})", failed.join(", ")) }),
    )
}

fn isomorphisms(calculi: &[CalculusRecord]) -> Result<Outcome> {
    let r = &builtin_references()[0];
    let basis = r.tangent.iter().map(|x| parse_u(x)).collect::<Result<Vec<_>>>()?;
    let reference = TangentSpace::new(basis)?;
    let gens = r.right_ideal.iter().map(|x| parse_o(x)).collect::<Result<Vec<_>>>()?;
    let listed = generates_right_ideal(&reference, &gens, 2);
    let t = |n| -> Result<TangentSpace> { tangent(find_calculus(calculi, n)?) };
    let (c9, c10, c11) = (t("calc9")?, t("calc10")?, t("calc11")?);
    let same = isomorphic(&c9, &reference, 2);
    let distinct = !isomorphic(&c10, &c11, 2) && !isomorphic(&c10, &c9, 2) && !isomorphic(&c11, &c9, 2);
    outcome(
        listed && same && distinct,
        format!("reference ideal generated by its listed elements: {listed}; item 17 equals reference: {same}; items 17, 18, 20 pairwise distinct: {distinct}"),
    )
}

fn main() -> ExitCode {
    let calculi = builtin_calculi();
    let start = Instant::now();
    let mut results: Vec<(u32, Result<Outcome>)> = vec![
        (1, hopf_axioms()),
        (2, pairing_tables(&calculi)),
        (3, coideal_fixtures()),
    ];
    match run_items() {
        Ok(items) => {
            results.push((4, two_form_filter(&items)));
            results.push((5, hopf_filter(&items)));
        }
        Err(e) => {
            results.push((4, Err(e)));
            results.push((5, outcome(false, "item run failed")));
        }
    }
    results.push((6, per_calculus(&calculi)));
    match braidings(&calculi) {
        Ok((c7, c8)) => {
            results.push((7, Ok(c7)));
            results.push((8, Ok(c8)));
        }
        Err(e) => {
            results.push((7, Err(e)));
            results.push((8, outcome(false, "braiding run failed")));
        }
    }
    results.push((9, cohomology_table(&calculi)));
    results.push((10, isomorphisms(&calculi)));

    let mut unexpected = 0;
    for (n, r) in &results {
        let (passed, detail) = match r {
            Ok(o) => (o.passed, o.detail.clone()),
            Err(e) => (false, format!("error: {e}")),
        };
        let known = KNOWN_FAILURES.contains(n);
        let note = match (passed, known) {
            (false, true) => " [known failure]",
            (true, true) => " [listed as known failure but passed]",
            _ => "",
        };
        if passed == known {
            unexpected += 1;
        }
        println!("criterion {n:>2}: {}: {detail}{note}", if passed { "PASS" } else { "FAIL" });
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
