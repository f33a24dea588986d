//! The per-calculus verification suite run by `qtangent verify`.

use crate::coideal::{closure, is_right_coideal, is_unital};
use crate::error::Result;
use crate::fixtures::{real_form_name, CalculusRecord};
use crate::fodc::{
    li_check, pairing_table, right_ideal_check, universal_two_form_dim, FodcModel, TangentSpace,
};
use crate::linalg::SparseVec;
use crate::oq::Pairing;
use crate::parse::parse_with;
use crate::scalar::Scalar;
use crate::structures::{
    hopf_invariant, jacobi_check, lie_bracket, real_forms, solve_braiding, verify_braiding,
    Braiding, BraidingSolution,
};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Coideal,
    Li,
    UniversalDim,
    Basis,
    FMatrix,
    Relations,
    Fundamental,
    Pairing,
    RightIdeal,
    Sym2,
    MaurerCartan,
    Exterior,
    HopfInvariance,
    RealForms,
    Braiding,
    Bracket,
    Jacobi,
}

impl Check {
    pub const ALL: [Check; 17] = [
        Check::Coideal,
        Check::Li,
        Check::UniversalDim,
        Check::Basis,
        Check::FMatrix,
        Check::Relations,
        Check::Fundamental,
        Check::Pairing,
        Check::RightIdeal,
        Check::Sym2,
        Check::MaurerCartan,
        Check::Exterior,
        Check::HopfInvariance,
        Check::RealForms,
        Check::Braiding,
        Check::Bracket,
        Check::Jacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Coideal => "coideal",
            Check::Li => "li",
            Check::UniversalDim => "universal-dim",
            Check::Basis => "basis",
            Check::FMatrix => "f-matrix",
            Check::Relations => "relations",
            Check::Fundamental => "fundamental",
            Check::Pairing => "pairing",
            Check::RightIdeal => "right-ideal",
            Check::Sym2 => "sym2",
            Check::MaurerCartan => "maurer-cartan",
            Check::Exterior => "exterior",
            Check::HopfInvariance => "hopf-invariance",
            Check::RealForms => "real-forms",
            Check::Braiding => "braiding",
            Check::Bracket => "bracket",
            Check::Jacobi => "jacobi",
        }
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CalculusReport {
    pub name: String,
    pub item: u32,
    pub results: Vec<CheckResult>,
}

impl CalculusReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, c: Check) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == c)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Filtration degree for the symmetric 2-forms.
    pub degree: u32,
    /// Degree for right-ideal completeness.
    pub ideal_degree: u32,
    /// Restrict to these checks; empty means all.
    pub checks: Vec<Check>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            degree: crate::fodc::SYM2_DEGREE,
            ideal_degree: 2,
            checks: Vec::new(),
        }
    }
}

impl VerifyOptions {
    fn wants(&self, c: Check) -> bool {
        self.checks.is_empty() || self.checks.contains(&c)
    }
}

struct Run<'a> {
    opts: &'a VerifyOptions,
    results: Vec<CheckResult>,
}

impl Run<'_> {
    fn record(&mut self, check: Check, passed: bool, detail: impl Into<String>) {
        if self.opts.wants(check) {
            self.results.push(CheckResult {
                check,
                passed,
                detail: detail.into(),
            });
        }
    }

    fn skip_rest(&mut self, from: &[Check], why: &str) {
        for &c in from {
            self.record(c, false, format!("not run: {why}"));
        }
    }
}

fn ok_detail(passed: bool, what: &str) -> String {
    if passed {
        what.to_string()
    } else {
        format!("mismatch: {what}")
    }
}

const DOWNSTREAM: [Check; 13] = [
    Check::Basis,
    Check::FMatrix,
    Check::Relations,
    Check::Fundamental,
    Check::Pairing,
    Check::RightIdeal,
    Check::Sym2,
    Check::MaurerCartan,
    Check::Exterior,
    Check::RealForms,
    Check::Braiding,
    Check::Bracket,
    Check::Jacobi,
];

/// Runs the suite. Errors only on malformed fixtures; failed checks are
/// report entries.
pub fn verify_calculus(rec: &CalculusRecord, opts: &VerifyOptions) -> Result<CalculusReport> {
    let mut run = Run {
        opts,
        results: Vec::new(),
    };
    let gens = rec.coideal_gens()?;
    let expected_basis = rec.basis()?;
    let v = closure(&gens)?;
    let coideal_ok = is_right_coideal(&v) && is_unital(&v) && v.dim() == 4;
    run.record(Check::Coideal, coideal_ok, format!("dim {}", v.dim()));
    let t = match TangentSpace::from_coideal(&v) {
        Ok(t) => t,
        Err(e) => {
            run.skip_rest(&[Check::Li, Check::UniversalDim, Check::HopfInvariance], &e.to_string());
            run.skip_rest(&DOWNSTREAM, &e.to_string());
            return Ok(finish(rec, run));
        }
    };
    run.record(Check::Li, li_check(&t), "rank of ⟨Z, u^r_s⟩");
    let udim = universal_two_form_dim(&t);
    run.record(Check::UniversalDim, udim == 3, format!("dim = {udim}"));
    run.record(Check::HopfInvariance, hopf_invariant(&t), "graded tangent space");

    let model = match FodcModel::build_with(&t, opts.degree) {
        Ok(m) => m,
        Err(e) => {
            run.skip_rest(&DOWNSTREAM, &e.to_string());
            return Ok(finish(rec, run));
        }
    };
    let basis = model.basis().to_vec();
    let basis_ok = basis == expected_basis;
    run.record(Check::Basis, basis_ok, ok_detail(basis_ok, "H, X, Y"));

    if opts.wants(Check::FMatrix) {
        let expected = rec.f_matrix(&basis)?;
        let ok = model.f_matrix == expected;
        let mut detail = ok_detail(ok, "f^i_j");
        for e in &rec.errata {
            if let Some(idx) = e.field.strip_prefix("f_matrix") {
                let (i, j) = parse_index(idx);
                let printed = parse_with(&e.printed, &CalculusRecord::env(&basis))?.into_u()?;
                let refuted = model.f_matrix[i][j] != printed;
                detail.push_str(&format!(
                    "; printed entry ({i},{j}) {}",
                    if refuted { "refuted" } else { "NOT refuted" }
                ));
            }
        }
        run.record(Check::FMatrix, ok, detail);
    }
    if opts.wants(Check::Relations) {
        let rel = rec.relations(&basis)?;
        let bad: Vec<usize> = rel
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, _)| i + 1)
            .collect();
        run.record(Check::Relations, bad.is_empty(), failing_list(bad, rel.len()));
    }
    if opts.wants(Check::Fundamental) {
        let ok = model.verify_fundamental(&rec.fundamental()?);
        run.record(Check::Fundamental, ok, ok_detail(ok, "H, X, Y on ℂ²"));
    }
    let mut pairing = Pairing::new();
    if opts.wants(Check::Pairing) {
        let table = pairing_table(&model.tangent, &mut pairing);
        let expected = rec.pairing_rows()?;
        let mut bad = 0;
        let mut nonzero = 0;
        for (r, e) in table.iter().zip(&expected) {
            for (a, b) in r.iter().zip(e) {
                bad += usize::from(a != b);
                nonzero += usize::from(!b.is_zero());
            }
        }
        run.record(
            Check::Pairing,
            bad == 0,
            format!("{nonzero} nonzero, {} zero, {bad} mismatched", 27 - nonzero),
        );
    }
    if opts.wants(Check::RightIdeal) {
        let r = right_ideal_check(&model.tangent, &rec.right_ideal()?, opts.ideal_degree, &mut pairing);
        let mut detail = format!(
            "annihilated {}, rank {}, annihilator {}, generated {}",
            r.annihilated,
            r.rank,
            r.annihilator_dim,
            if r.generated_dim == usize::MAX {
                "not contained".to_string()
            } else {
                r.generated_dim.to_string()
            }
        );
        let unital = model.tangent.unital_basis();
        for e in rec.errata.iter().filter(|e| e.field.starts_with("right_ideal")) {
            let (k, _) = parse_index(&e.field);
            let printed = crate::parse::parse_o(&e.printed)?;
            let refuted = unital.iter().any(|z| !pairing.pair(z, &printed).is_zero());
            detail.push_str(&format!(
                "; printed generator {} {}",
                k + 1,
                if refuted { "refuted" } else { "NOT refuted" }
            ));
        }
        run.record(Check::RightIdeal, r.passed(), detail);
    }
    if opts.wants(Check::Sym2) {
        let listed = rec.sym2_vectors()?;
        let missing: Vec<usize> = listed
            .iter()
            .enumerate()
            .filter(|(_, v)| !model.sym2.contains(&sparse(v)))
            .map(|(i, _)| i + 1)
            .collect();
        let ok = model.sym2.dim() == 6 && missing.is_empty();
        run.record(
            Check::Sym2,
            ok,
            format!("dim {}, {}", model.sym2.dim(), failing_list(missing, listed.len())),
        );
    }
    if opts.wants(Check::MaurerCartan) {
        let expected: Vec<Vec<Scalar>> = rec
            .d_omega_tensors()?
            .iter()
            .map(|v| model.exterior.wedge2_vec(&sparse(v)))
            .collect();
        let ok = model.d_omega == expected && model.d_squared_vanishes() && model.d_respects_sym2();
        run.record(Check::MaurerCartan, ok, ok_detail(ok, "dω_H, dω_X, dω_Y; d² = 0"));
    }
    let dims = model.exterior.dims();
    run.record(Check::Exterior, dims == [1, 3, 3, 1, 0], format!("{dims:?}"));
    if opts.wants(Check::RealForms) {
        let found = real_forms(&model.tangent);
        let ok = found == rec.real_form_set()?;
        let names: Vec<&str> = found.into_iter().map(real_form_name).collect();
        run.record(Check::RealForms, ok, names.join(", "));
    }
    if opts.wants(Check::Braiding) || opts.wants(Check::Bracket) || opts.wants(Check::Jacobi) {
        braiding_checks(rec, &model, &mut run)?;
    }
    Ok(finish(rec, run))
}

fn braiding_checks(rec: &CalculusRecord, model: &FodcModel, run: &mut Run) -> Result<()> {
    let Some(b) = &rec.braiding else {
        let sol = solve_braiding(model)?;
        let ok = sol.is_none();
        let detail = if ok {
            "no braiding (exact-kernel ansatz)".to_string()
        } else {
            format!("expected none, solver found {}", describe(&sol))
        };
        run.record(Check::Braiding, ok, detail);
        run.record(Check::Bracket, true, "no braiding");
        run.record(Check::Jacobi, true, "no braiding");
        return Ok(());
    };
    let lambda = b.eigenvalue()?;
    let sigma = Braiding::from_eigendata(model, &lambda, &b.vectors()?);
    let sigma = match sigma {
        Ok(s) => s,
        Err(e) => {
            run.skip_rest(&[Check::Braiding, Check::Bracket, Check::Jacobi], &e.to_string());
            return Ok(());
        }
    };
    let report = verify_braiding(model, &sigma);
    let minpoly = sigma.has_minimal_poly(&lambda);
    let sol = solve_braiding(model)?;
    let ok = report.passed() && minpoly;
    run.record(
        Check::Braiding,
        ok,
        format!("{report:?}, minimal polynomial {minpoly}, solver: {}", describe(&sol)),
    );
    match lie_bracket(model, &sigma) {
        Ok(beta) => {
            run.record(Check::Bracket, true, "closes in span{H, X, Y}");
            run.record(Check::Jacobi, jacobi_check(&sigma, &beta), "A₃ᵗ identity");
        }
        Err(e) => {
            run.record(Check::Bracket, false, e.to_string());
            run.record(Check::Jacobi, false, "not run: bracket open");
        }
    }
    Ok(())
}

pub fn describe(sol: &BraidingSolution) -> String {
    match sol {
        BraidingSolution::None => "none".into(),
        BraidingSolution::Unique { kappa, .. } => {
            let lambda = -Scalar::q_pow(2);
            format!(
                "unique projector, κ = {kappa}, λ = −q² {}",
                if sol.admits(&lambda) { "admitted" } else { "rejected" }
            )
        }
        BraidingSolution::Family { dim, solvable } => match solvable {
            Some(true) => format!("{dim}-dimensional projector family, generic member braided"),
            _ => format!("{dim}-dimensional projector family, braid relation undecided"),
        },
    }
}

fn parse_index(s: &str) -> (usize, usize) {
    let nums: Vec<usize> = s
        .split(|c: char| !c.is_ascii_digit())
        .filter(|p| !p.is_empty())
        .filter_map(|p| p.parse().ok())
        .collect();
    (nums.first().copied().unwrap_or(0), nums.get(1).copied().unwrap_or(0))
}

fn sparse(v: &[Scalar]) -> SparseVec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn failing_list(bad: Vec<usize>, total: usize) -> String {
    if bad.is_empty() {
        format!("{total}/{total}")
    } else {
        format!("failing {bad:?} of {total}")
    }
}

fn finish(rec: &CalculusRecord, run: Run) -> CalculusReport {
    let mut results = run.results;
    results.sort_by_key(|r| r.check);
    CalculusReport {
        name: rec.name.clone(),
        item: rec.item,
        results,
    }
}
