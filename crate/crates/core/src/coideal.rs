//! Right coideals of U: components, closure, homogeneous parts and the
//! dimension lower bound.

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::scalar::GroupLabel;
use crate::uq::{UElement, UMonomial};
use std::collections::{BTreeMap, BTreeSet};

/// Hard cap on closure dimension.
pub const CLOSURE_CAP: usize = 512;

/// A finite-dimensional subspace of U in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    ech: Echelon<UMonomial>,
}

impl Subspace {
    pub fn new() -> Subspace {
        Subspace::default()
    }

    pub fn span<'a>(gens: impl IntoIterator<Item = &'a UElement>) -> Subspace {
        let mut s = Subspace::new();
        for g in gens {
            s.insert(g);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn insert(&mut self, x: &UElement) -> bool {
        self.ech.insert(x.terms())
    }

    pub fn contains(&self, x: &UElement) -> bool {
        self.ech.contains(x.terms())
    }

    pub fn reduce(&self, x: &UElement) -> UElement {
        UElement::from_terms(self.ech.reduce(x.terms()))
    }

    /// Echelon basis, ordered by pivot monomial.
    pub fn basis(&self) -> Vec<UElement> {
        self.ech
            .rows()
            .map(|r| UElement::from_terms(r.iter().map(|(m, c)| (*m, c.clone()))))
            .collect()
    }

    pub fn contains_all(&self, o: &Subspace) -> bool {
        o.basis().iter().all(|x| self.contains(x))
    }

    pub fn same_as(&self, o: &Subspace) -> bool {
        self.dim() == o.dim() && self.contains_all(o)
    }
}

/// `X_{r,μ,s,t} = Σ α_{i,μ,j,k} F^(i−r) f_{q^{−r−s}μ} E^(j−s) G^(k−t)`.
pub fn components(x: &UElement, r: u32, mu: GroupLabel, s: u32, t: u32) -> UElement {
    let shift = GroupLabel::new(0, -2 * (r + s) as i32);
    let mut out = UElement::zero();
    for (m, c) in x.terms() {
        if m.mu == mu && m.i >= r && m.j >= s && m.k >= t {
            out.add_term(
                UMonomial::new(m.i - r, mu.mul(shift), m.j - s, m.k - t),
                c.clone(),
            );
        }
    }
    out
}

/// All nonzero components of `x`.
pub fn all_components(x: &UElement) -> Vec<UElement> {
    let mut keys = BTreeSet::new();
    for m in x.terms().keys() {
        for r in 0..=m.i {
            for s in 0..=m.j {
                for t in 0..=m.k {
                    keys.insert((r, m.mu, s, t));
                }
            }
        }
    }
    keys.into_iter()
        .map(|(r, mu, s, t)| components(x, r, mu, s, t))
        .filter(|c| !c.is_zero())
        .collect()
}

/// Smallest right coideal containing `gens`.
pub fn closure(gens: &[UElement]) -> Result<Subspace> {
    let mut space = Subspace::new();
    let mut queue: Vec<UElement> = gens.to_vec();
    while let Some(x) = queue.pop() {
        if space.contains(&x) {
            continue;
        }
        space.insert(&x);
        if space.dim() > CLOSURE_CAP {
            return Err(Error::CapExceeded(CLOSURE_CAP));
        }
        for c in all_components(&x) {
            if !space.contains(&c) {
                queue.push(c);
            }
        }
    }
    Ok(space)
}

pub fn is_right_coideal(v: &Subspace) -> bool {
    v.basis()
        .iter()
        .all(|x| all_components(x).iter().all(|c| v.contains(c)))
}

pub fn is_unital(v: &Subspace) -> bool {
    v.contains(&UElement::one())
}

/// Intersections with the label components `[U]_μ`.
pub fn homogeneous_split(v: &Subspace) -> BTreeMap<GroupLabel, Subspace> {
    let mut out: BTreeMap<GroupLabel, Subspace> = BTreeMap::new();
    for x in v.basis() {
        for (mu, part) in x.label_parts() {
            out.entry(mu).or_default().insert(&part);
        }
    }
    out
}

/// `Σ_t (s₁₃(t) + 1)` for an element of a single `[U]_μ`.
fn homogeneous_bound(x: &UElement) -> usize {
    let d4 = x.max_k();
    // ∂₁₃ of the G^(t) coefficient X_t, or None when X_t = 0.
    let mut d13: Vec<Option<u32>> = vec![None; d4 as usize + 1];
    for m in x.terms().keys() {
        let e = &mut d13[m.k as usize];
        *e = Some(e.map_or(m.i + m.j, |v: u32| v.max(m.i + m.j)));
    }
    let mut total = 0;
    for t in 0..=d4 as usize {
        let s13 = d13[t..].iter().flatten().max().copied().unwrap_or(0);
        total += s13 as usize + 1;
    }
    total
}

/// Lower bound for the dimension of any right coideal containing `x`.
///
/// Homogeneous parts with labels in the same coset `μ·q^ℤ` are bounded by
/// their maximum; distinct cosets contribute independently.
pub fn dim_lower_bound(x: &UElement) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut best: BTreeMap<(u8, i32), usize> = BTreeMap::new();
    for (mu, part) in x.label_parts() {
        let key = (mu.t, mu.k.rem_euclid(2));
        let b = homogeneous_bound(&part);
        let e = best.entry(key).or_insert(0);
        *e = (*e).max(b);
    }
    Ok(best.values().sum())
}

/// Oracle-style closure that spans left legs of the coproduct directly.
pub fn closure_via_coproduct(gens: &[UElement]) -> Result<Subspace> {
    let mut space = Subspace::new();
    let mut queue: Vec<UElement> = gens.to_vec();
    while let Some(x) = queue.pop() {
        if !space.insert(&x) {
            continue;
        }
        if space.dim() > CLOSURE_CAP {
            return Err(Error::CapExceeded(CLOSURE_CAP));
        }
        for left in x.coproduct().right_collected().into_values() {
            queue.push(left);
        }
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn k(n: i32) -> UElement {
        UElement::k_pow(n)
    }

    #[test]
    fn component_of_g() {
        let c = components(&UElement::g(), 0, GroupLabel::ONE, 0, 1);
        assert_eq!(c, UElement::one());
    }

    #[test]
    fn dim_two_component() {
        let mu = GroupLabel::new(1, 3);
        let (a, b, g) = (Scalar::param(1), Scalar::param(2), Scalar::param(3));
        let x = UElement::term(UMonomial::new(1, mu, 0, 0), a.clone())
            .add(&UElement::term(UMonomial::new(0, mu, 1, 0), b))
            .add(&UElement::term(UMonomial::new(0, mu, 0, 0), g));
        let c = components(&x, 1, mu, 0, 0);
        assert_eq!(c, UElement::group(mu.mul(GroupLabel::new(0, -2))).scale(&a));
        assert!(components(&x, 2, mu, 0, 0).is_zero());
    }

    #[test]
    fn closure_of_primitive() {
        let v = closure(&[UElement::g()]).unwrap();
        assert_eq!(v.dim(), 2);
        assert!(is_right_coideal(&v) && is_unital(&v));
        let split = homogeneous_split(&v);
        assert_eq!(split.len(), 1);
        assert_eq!(split[&GroupLabel::ONE].dim(), 2);
    }

    #[test]
    fn span_of_e_is_not_a_coideal() {
        let v = Subspace::span([&UElement::e()]);
        assert!(!is_right_coideal(&v));
    }

    #[test]
    fn worked_example_bound() {
        let k6 = k(6);
        let x = k6
            .mul(&UElement::gd(5))
            .add(&UElement::fd(1).mul(&k6).sub(&k6).mul(&UElement::gd(4)))
            .add(
                &UElement::fd(2)
                    .mul(&k6)
                    .mul(&UElement::ed(1))
                    .add(&k6.mul(&UElement::ed(3)))
                    .mul(&UElement::gd(2)),
            )
            .add(&UElement::fd(3).mul(&k6));
        assert_eq!(dim_lower_bound(&x).unwrap(), 17);
        let v = closure(&[x.clone()]).unwrap();
        assert!(v.dim() >= 17);
        let w = closure_via_coproduct(&[x]).unwrap();
        assert!(v.same_as(&w));
    }

    #[test]
    fn bound_small_cases() {
        assert_eq!(dim_lower_bound(&UElement::one()).unwrap(), 1);
        assert_eq!(dim_lower_bound(&UElement::g()).unwrap(), 2);
        assert!(dim_lower_bound(&UElement::zero()).is_err());
        let x = UElement::fd(1).mul(&k(2)).add(&UElement::one());
        assert_eq!(dim_lower_bound(&x).unwrap(), 2);
        assert_eq!(closure(&[x]).unwrap().dim(), 2);
    }
}
