//! Command-line driver.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on malformed input or fixtures.

use clap::{Parser, Subcommand};
use qtangent::cohomology::{cohomology, CohomologyReport, SpinRep};
use qtangent::coideal::{closure, dim_lower_bound, is_right_coideal, is_unital, Subspace};
use qtangent::fixtures::{
    builtin_calculi, builtin_coideals, builtin_list, find_calculus, find_coideal, load_calculi,
    load_coideals, load_list, CalculusRecord, CoidealRecord, ListItem,
};
use qtangent::fodc::{li_check, pairing_table, universal_two_form_dim, FodcModel, TangentSpace};
use qtangent::lists::{check_entry, check_item, filter_list, FilterRow, ItemReport, SampleReport};
use qtangent::oq::Pairing;
use qtangent::parse::{parse, parse_o, parse_u, Value};
use qtangent::verify::{verify_calculus, CalculusReport, Check, VerifyOptions};
use qtangent::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qtangent", version, about = "Left-covariant differential calculi on SL_q(2)")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for commands that run several fixtures.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Filtration degree used for symmetric 2-forms.
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Directory holding calculi.json, coideals.json and list.json.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of an element of U, O or the scalar field.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct of an element of U or O.
    Coprod {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Dual pairing of an element of U with an element of O.
    Pair {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        o: String,
    },
    #[command(subcommand)]
    Coideal(CoidealCmd),
    #[command(subcommand)]
    Fodc(FodcCmd),
    /// Per-calculus verification suite.
    Verify {
        /// Fixture name (calc3), number, item (item9) or `all`.
        name: String,
        /// Restrict to the named checks.
        #[arg(long = "check")]
        checks: Vec<String>,
    },
    /// Filter the four-dimensional list and check the surviving items.
    #[command(name = "filter-5-2")]
    Filter,
    /// Twisted de Rham cohomology dimensions.
    Cohomology {
        /// Fixture name or `all`.
        fixture: String,
        #[arg(long, default_value_t = 5)]
        two_lambda_max: u32,
    },
}

#[derive(Subcommand)]
enum CoidealCmd {
    /// Whether the span of the given elements is a unital right coideal.
    Check {
        exprs: Vec<String>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Basis of the smallest right coideal containing the elements.
    Closure {
        exprs: Vec<String>,
    },
    /// Lower bound for the dimension of a right coideal containing the element.
    Bound {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum FodcCmd {
    /// Build the full model of a calculus fixture or a list entry.
    Build { fixture: String },
}

struct Ctx {
    json: bool,
    degree: Option<u32>,
    dir: Option<PathBuf>,
}

impl Ctx {
    fn file(&self, name: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(name)).filter(|p| p.exists())
    }

    fn calculi(&self) -> Result<Vec<CalculusRecord>> {
        match self.file("calculi.json") {
            Some(p) => load_calculi(&p),
            None => Ok(builtin_calculi()),
        }
    }

    fn coideals(&self) -> Result<Vec<CoidealRecord>> {
        match self.file("coideals.json") {
            Some(p) => load_coideals(&p),
            None => Ok(builtin_coideals()),
        }
    }

    fn list(&self) -> Result<Vec<ListItem>> {
        match self.file("list.json") {
            Some(p) => load_list(&p),
            None => Ok(builtin_list()),
        }
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value)?);
        } else {
            print!("{}", text());
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx {
        json: cli.json,
        degree: cli.degree_cap,
        dir: cli.fixtures,
    };
    if let Some(d) = &ctx.dir {
        if !d.is_dir() {
            eprintln!("error: fixture directory {} not found", d.display());
            return ExitCode::from(2);
        }
    }
    match run(&ctx, cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(ctx: &Ctx, cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Nf { expr } => {
            let s = match parse(&expr)? {
                Value::Scalar(c) => c.to_string(),
                Value::U(u) => u.to_string(),
                Value::O(o) => o.to_string(),
            };
            ctx.emit(&s, || format!("{s}\n"))?;
            Ok(true)
        }
        Cmd::Coprod { expr } => {
            let s = match parse(&expr)? {
                Value::Scalar(c) => format!("({c})*1 ⊗ 1"),
                Value::U(u) => u.coproduct().to_string(),
                Value::O(o) => o.coproduct().to_string(),
            };
            ctx.emit(&s, || format!("{s}\n"))?;
            Ok(true)
        }
        Cmd::Pair { u, o } => {
            let s = qtangent::oq::pair(&parse_u(&u)?, &parse_o(&o)?).to_string();
            ctx.emit(&s, || format!("{s}\n"))?;
            Ok(true)
        }
        Cmd::Coideal(c) => coideal_cmd(ctx, c),
        Cmd::Fodc(FodcCmd::Build { fixture }) => fodc_build(ctx, &fixture),
        Cmd::Verify { name, checks } => verify_cmd(ctx, &name, &checks),
        Cmd::Filter => filter_cmd(ctx),
        Cmd::Cohomology {
            fixture,
            two_lambda_max,
        } => cohomology_cmd(ctx, &fixture, two_lambda_max),
    }
}

fn parse_all(exprs: &[String]) -> Result<Vec<qtangent::uq::UElement>> {
    exprs.iter().map(|e| parse_u(e)).collect()
}

#[derive(Serialize)]
struct CoidealCheck {
    dim: usize,
    right_coideal: bool,
    unital: bool,
    passed: bool,
}

fn coideal_cmd(ctx: &Ctx, c: CoidealCmd) -> Result<bool> {
    match c {
        CoidealCmd::Check { exprs, dim } => {
            let span = Subspace::span(&parse_all(&exprs)?);
            let right_coideal = is_right_coideal(&span);
            let unital = is_unital(&span);
            let passed = right_coideal && unital && dim.is_none_or(|d| d == span.dim());
            let r = CoidealCheck {
                dim: span.dim(),
                right_coideal,
                unital,
                passed,
            };
            ctx.emit(&r, || {
                format!("dim {}, right coideal {right_coideal}, unital {unital}\n", r.dim)
            })?;
            Ok(passed)
        }
        CoidealCmd::Closure { exprs } => {
            let basis: Vec<String> = closure(&parse_all(&exprs)?)?
                .basis()
                .iter()
                .map(|x| x.to_string())
                .collect();
            ctx.emit(&basis, || {
                let mut s = format!("dim {}\n", basis.len());
                for b in &basis {
                    s.push_str(&format!("  {b}\n"));
                }
                s
            })?;
            Ok(true)
        }
        CoidealCmd::Bound { expr } => {
            let b = dim_lower_bound(&parse_u(&expr)?)?;
            ctx.emit(&b, || format!("{b}\n"))?;
            Ok(true)
        }
    }
}

/// A calculus fixture by name, or a list entry at its first generic sample.
fn tangent_for(ctx: &Ctx, name: &str) -> Result<(String, TangentSpace)> {
    let calculi = ctx.calculi()?;
    if let Ok(rec) = find_calculus(&calculi, name) {
        return Ok((rec.name.clone(), TangentSpace::new(rec.basis()?)?));
    }
    let set = ctx.coideals()?;
    let rec = find_coideal(&set, name)?;
    if rec.dim != 4 {
        return Err(Error::Dimension {
            expected: 4,
            found: rec.dim,
        });
    }
    let sample = rec
        .samples
        .iter()
        .find(|s| s.kind == "generic")
        .ok_or_else(|| Error::Schema(format!("{name} has no generic sample")))?;
    let span = Subspace::span(&rec.basis_at(&sample.params)?);
    Ok((rec.name.clone(), TangentSpace::from_coideal(&span)?))
}

#[derive(Serialize)]
struct ModelRecord {
    name: String,
    li: bool,
    universal_two_form_dim: usize,
    basis: Vec<String>,
    f_matrix: Vec<Vec<String>>,
    pairing: Vec<Vec<String>>,
    sym2_dim: usize,
    exterior_dims: [usize; 5],
    d_omega: Vec<Vec<String>>,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

fn fodc_build(ctx: &Ctx, fixture: &str) -> Result<bool> {
    let (name, t) = tangent_for(ctx, fixture)?;
    let li = li_check(&t);
    let two = universal_two_form_dim(&t);
    let model = match ctx.degree {
        Some(d) => FodcModel::build_with(&t, d)?,
        None => FodcModel::build(&t)?,
    };
    let mut p = Pairing::new();
    let rec = ModelRecord {
        name,
        li,
        universal_two_form_dim: two,
        basis: strings(model.basis()),
        f_matrix: model.f_matrix.iter().map(|r| strings(r)).collect(),
        pairing: pairing_table(&model.tangent, &mut p).iter().map(|r| strings(r)).collect(),
        sym2_dim: model.sym2.dim(),
        exterior_dims: model.exterior.dims(),
        d_omega: model.d_omega.iter().map(|r| strings(r)).collect(),
    };
    ctx.emit(&rec, || {
        let mut s = format!("{}: LI {}, universal 2-form dim {}\n", rec.name, rec.li, two);
        for (n, b) in ["H", "X", "Y"].iter().zip(&rec.basis) {
            s.push_str(&format!("  {n} = {b}\n"));
        }
        s.push_str("  f-matrix:\n");
        for row in &rec.f_matrix {
            s.push_str(&format!("    [{}]\n", row.join(", ")));
        }
        s.push_str(&format!(
            "  sym2 dim {}, exterior dims {:?}\n",
            rec.sym2_dim, rec.exterior_dims
        ));
        for (n, row) in ["H", "X", "Y"].iter().zip(&rec.d_omega) {
            s.push_str(&format!("  dω_{n} = [{}]\n", row.join(", ")));
        }
        s
    })?;
    Ok(true)
}

fn selected<'a>(all: &'a [CalculusRecord], name: &str) -> Result<Vec<&'a CalculusRecord>> {
    if name == "all" {
        Ok(all.iter().collect())
    } else {
        Ok(vec![find_calculus(all, name)?])
    }
}

fn verify_cmd(ctx: &Ctx, name: &str, checks: &[String]) -> Result<bool> {
    let mut opts = VerifyOptions::default();
    if let Some(d) = ctx.degree {
        opts.degree = d;
    }
    for c in checks {
        opts.checks
            .push(Check::from_name(c).ok_or_else(|| Error::Schema(format!("unknown check `{c}`")))?);
    }
    let all = ctx.calculi()?;
    let recs = selected(&all, name)?;
    let reports: Vec<CalculusReport> = recs
        .par_iter()
        .map(|r| verify_calculus(r, &opts))
        .collect::<Result<_>>()?;
    let ok = reports.iter().all(CalculusReport::passed);
    ctx.emit(&reports, || verify_text(&reports, !checks.is_empty()))?;
    Ok(ok)
}

fn verify_text(reports: &[CalculusReport], details: bool) -> String {
    let Some(first) = reports.first() else {
        return String::new();
    };
    let cols: Vec<Check> = first.results.iter().map(|r| r.check).collect();
    let width = cols.iter().map(|c| c.name().len()).max().unwrap_or(0);
    let mut s = format!("{:width$}", "");
    for r in reports {
        s.push_str(&format!(" {:>6}", r.name));
    }
    s.push('\n');
    for c in &cols {
        s.push_str(&format!("{:width$}", c.name()));
        for r in reports {
            let mark = match r.get(*c) {
                Some(x) if x.passed => "ok",
                Some(_) => "FAIL",
                None => "-",
            };
            s.push_str(&format!(" {mark:>6}"));
        }
        s.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    s.push_str(&format!("{passed}/{} pass\n", reports.len()));
    for r in reports {
        for x in &r.results {
            if details || !x.passed {
                s.push_str(&format!("{} {}: {}\n", r.name, x.check, x.detail));
            }
        }
    }
    s
}

#[derive(Serialize)]
struct FilterOutput {
    samples: Vec<SampleReport>,
    filter: Vec<FilterRow>,
    items: Vec<ItemReport>,
}

fn filter_cmd(ctx: &Ctx) -> Result<bool> {
    let set = ctx.coideals()?;
    let list = ctx.list()?;
    let samples: Vec<SampleReport> = set
        .par_iter()
        .map(|r| check_entry(&set, r))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let filter = filter_list(&set)?;
    let items: Vec<ItemReport> = list.par_iter().map(check_item).collect::<Result<_>>()?;
    let ok = samples.iter().all(|s| s.passed) && items.iter().all(|i| i.passed);
    let out = FilterOutput {
        samples,
        filter,
        items,
    };
    ctx.emit(&out, || filter_text(&out))?;
    Ok(ok)
}

fn filter_text(out: &FilterOutput) -> String {
    let mut s = String::new();
    let bad: Vec<&SampleReport> = out.samples.iter().filter(|r| !r.passed).collect();
    s.push_str(&format!(
        "list samples: {}/{} as recorded\n",
        out.samples.len() - bad.len(),
        out.samples.len()
    ));
    for r in bad {
        s.push_str(&format!("  {} {} expected {:?}: {}\n", r.entry, r.kind, r.expected, r.detail));
    }
    let survivors: Vec<&str> = out
        .filter
        .iter()
        .filter(|r| r.survives)
        .map(|r| r.entry.as_str())
        .collect();
    s.push_str(&format!(
        "generic samples surviving LI and dim ≥ 3: {}\n",
        if survivors.is_empty() { "none".to_string() } else { survivors.join(", ") }
    ));
    let low: Vec<String> = out
        .filter
        .iter()
        .filter(|r| r.li && r.two_form_dim < 3)
        .map(|r| format!("{}({})", r.entry, r.two_form_dim))
        .collect();
    s.push_str(&format!("LI with dim < 3: {}\n", low.join(", ")));
    s.push_str("item  dim  LI     2-forms  Hopf   result\n");
    for i in &out.items {
        s.push_str(&format!(
            "{:>4}  {:>3}  {:<5}  {:>7}  {:<5}  {}\n",
            i.item,
            i.closure_dim,
            i.li,
            i.two_form_dim,
            i.hopf_invariant,
            if i.passed { "ok" } else { "FAIL" }
        ));
    }
    s
}

#[derive(Serialize)]
struct CohomologyRow {
    calculus: String,
    two_lambda: u32,
    h: [usize; 4],
    d_squared_zero: bool,
    euler: i64,
    passed: bool,
}

fn cohomology_cmd(ctx: &Ctx, fixture: &str, max: u32) -> Result<bool> {
    let all = ctx.calculi()?;
    let recs = selected(&all, fixture)?;
    let models: Vec<(String, FodcModel)> = recs
        .par_iter()
        .map(|r| Ok((r.name.clone(), FodcModel::build(&TangentSpace::new(r.basis()?)?)?)))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, u32)> = (0..models.len())
        .flat_map(|m| (0..=max).map(move |l| (m, l)))
        .collect();
    let rows: Vec<CohomologyRow> = jobs
        .par_iter()
        .map(|&(m, l)| {
            let r: CohomologyReport = cohomology(&models[m].1, SpinRep::new(l));
            CohomologyRow {
                calculus: models[m].0.clone(),
                two_lambda: l,
                h: r.dims,
                d_squared_zero: r.d_squared_zero,
                euler: r.euler,
                passed: r.passed(),
            }
        })
        .collect();
    let ok = rows.iter().all(|r| r.passed);
    ctx.emit(&rows, || {
        let mut s = String::from("calculus  2λ  h0 h1 h2 h3  d²=0  χ\n");
        for r in &rows {
            s.push_str(&format!(
                "{:<8}  {:>2}  {:>2} {:>2} {:>2} {:>2}  {:<5} {:>2}{}\n",
                r.calculus,
                r.two_lambda,
                r.h[0],
                r.h[1],
                r.h[2],
                r.h[3],
                r.d_squared_zero,
                r.euler,
                if r.passed { "" } else { "  FAIL" }
            ));
        }
        s
    })?;
    Ok(ok)
}
