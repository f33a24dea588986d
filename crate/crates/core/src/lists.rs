//! Checks over the coideal lists, the filter by universal 2-form dimension,
//! and isomorphism tests by comparing right ideals.

use crate::coideal::{closure, is_right_coideal, is_unital, Subspace};
use crate::error::Result;
use crate::fixtures::{find_coideal, CoidealRecord, ListItem, Outcome, Sample};
use crate::fodc::{
    generated_space, li_check, right_ideal_space, same_space, universal_two_form_dim, TangentSpace,
};
use crate::oq::{OElement, Pairing};
use crate::structures::hopf_invariant;
use crate::uq::UElement;
use serde::Serialize;

/// What one parameter sample of a list entry produced.
#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub entry: String,
    pub kind: String,
    pub span_dim: usize,
    pub coideal: bool,
    pub unital: bool,
    /// Only computed for four-dimensional members.
    pub li: Option<bool>,
    pub expected: Outcome,
    pub passed: bool,
    pub detail: String,
}

fn tangent(span: &Subspace) -> Result<TangentSpace> {
    TangentSpace::from_coideal(span)
}

pub fn check_sample(set: &[CoidealRecord], rec: &CoidealRecord, sample: &Sample) -> Result<SampleReport> {
    let basis = rec.basis_at(&sample.params)?;
    let span = Subspace::span(&basis);
    let coideal = is_right_coideal(&span);
    let unital = is_unital(&span);
    let member = coideal && unital && span.dim() == rec.dim;
    let li = if member && rec.dim == 4 {
        Some(li_check(&tangent(&span)?))
    } else {
        None
    };
    let mut detail = format!("dim {}, coideal {coideal}, unital {unital}", span.dim());
    if let Some(l) = li {
        detail.push_str(&format!(", LI {l}"));
    }
    let passed = match sample.expect.outcome {
        Outcome::Member => member && rec.li.is_none_or(|want| li == Some(want)),
        Outcome::Degenerate => !member,
        Outcome::NotLi => member && li == Some(false),
        Outcome::Duplicate => match &sample.expect.same_as {
            Some(r) => {
                let target = find_coideal(set, &r.entry)?;
                let other = Subspace::span(&target.basis_at(&r.params)?);
                let same = member && span.same_as(&other);
                detail.push_str(&format!(", equals {} {}", r.entry, same));
                same
            }
            None => false,
        },
    };
    Ok(SampleReport {
        entry: rec.name.clone(),
        kind: sample.kind.clone(),
        span_dim: span.dim(),
        coideal,
        unital,
        li,
        expected: sample.expect.outcome.clone(),
        passed,
        detail,
    })
}

pub fn check_entry(set: &[CoidealRecord], rec: &CoidealRecord) -> Result<Vec<SampleReport>> {
    rec.samples.iter().map(|s| check_sample(set, rec, s)).collect()
}

/// Outcome of the LI and universal 2-form filter on one sample.
#[derive(Clone, Debug, Serialize)]
pub struct FilterRow {
    pub entry: String,
    pub kind: String,
    pub li: bool,
    pub two_form_dim: usize,
    pub survives: bool,
}

/// Runs the filter over every four-dimensional entry at its generic samples.
pub fn filter_list(set: &[CoidealRecord]) -> Result<Vec<FilterRow>> {
    let mut rows = Vec::new();
    for rec in set.iter().filter(|r| r.dim == 4) {
        for s in rec.samples.iter().filter(|s| s.kind == "generic") {
            let span = Subspace::span(&rec.basis_at(&s.params)?);
            let t = tangent(&span)?;
            let li = li_check(&t);
            let two_form_dim = universal_two_form_dim(&t);
            rows.push(FilterRow {
                entry: rec.name.clone(),
                kind: s.kind.clone(),
                li,
                two_form_dim,
                survives: li && two_form_dim >= 3,
            });
        }
    }
    Ok(rows)
}

/// Properties of one item of the filtered list.
#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub item: u32,
    pub closure_dim: usize,
    pub coideal: bool,
    pub li: bool,
    pub two_form_dim: usize,
    pub hopf_invariant: bool,
    pub passed: bool,
}

pub fn check_item(it: &ListItem) -> Result<ItemReport> {
    let els = it.elements()?;
    let span = Subspace::span(&els);
    let closed = closure(&els)?;
    let coideal = is_right_coideal(&span) && is_unital(&span) && closed.dim() == 4 && span.dim() == 4;
    let t = tangent(&closed)?;
    let li = li_check(&t);
    let two_form_dim = universal_two_form_dim(&t);
    let hopf = hopf_invariant(&t);
    Ok(ItemReport {
        item: it.item,
        closure_dim: closed.dim(),
        coideal,
        li,
        two_form_dim,
        hopf_invariant: hopf,
        passed: coideal && li && two_form_dim == it.two_form_dim && hopf == it.hopf_invariant,
    })
}

/// Whether two calculi have the same right ideal in degree `≤ degree`.
pub fn isomorphic(a: &TangentSpace, b: &TangentSpace, degree: u32) -> bool {
    let mut p = Pairing::new();
    same_space(&right_ideal_space(a, degree, &mut p), &right_ideal_space(b, degree, &mut p))
}

/// Whether listed generators span the degree `≤ degree` part of `t`'s right
/// ideal.
pub fn generates_right_ideal(t: &TangentSpace, gens: &[OElement], degree: u32) -> bool {
    let mut p = Pairing::new();
    same_space(&right_ideal_space(t, degree, &mut p), &generated_space(gens, degree))
}

/// Tangent space spanned by `elements` (no unit needed).
pub fn tangent_of(elements: &[UElement]) -> Result<TangentSpace> {
    let mut gens = elements.to_vec();
    gens.push(UElement::one());
    TangentSpace::from_coideal(&closure(&gens)?)
}
