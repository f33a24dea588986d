//! Finite sums in U⊗U and U⊗U⊗U.

use super::{UElement, UMonomial};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(UMonomial, UMonomial), Scalar>,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    pub fn add_term(&mut self, l: UMonomial, r: UMonomial, c: Scalar) {
        add_into(&mut self.terms, (l, r), c);
    }

    /// `a ⊗ b`.
    pub fn pure(a: &UElement, b: &UElement) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(*ma, *mb, ca * cb);
            }
        }
        out
    }

    pub fn from_pairs(pairs: &[(UElement, UElement)]) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (a, b) in pairs {
            out = out.add(&Tensor2::pure(a, b));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(UMonomial, UMonomial), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &o.terms {
            out.add_term(*l, *r, c.clone());
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn mul(&self, o: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &o.terms {
                let l = UElement::monomial(*l1).mul(&UElement::monomial(*l2));
                let r = UElement::monomial(*r1).mul(&UElement::monomial(*r2));
                out = out.add(&Tensor2::pure(&l, &r.scale(&(c1 * c2))));
            }
        }
        out
    }

    /// Left legs collected by right monomial.
    pub fn right_collected(&self) -> BTreeMap<UMonomial, UElement> {
        let mut out: BTreeMap<UMonomial, UElement> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(*r).or_default().add_term(*l, c.clone());
        }
        out
    }

    /// `(ε⊗id)`.
    pub fn counit_left(&self) -> UElement {
        let mut out = UElement::zero();
        for ((l, r), c) in &self.terms {
            let e = UElement::monomial(*l).counit();
            out.add_term(*r, c * &e);
        }
        out
    }

    /// `(id⊗ε)`.
    pub fn counit_right(&self) -> UElement {
        let mut out = UElement::zero();
        for ((l, r), c) in &self.terms {
            let e = UElement::monomial(*r).counit();
            out.add_term(*l, c * &e);
        }
        out
    }

    /// `(Δ⊗id)`.
    pub fn coproduct_left(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in &self.terms {
            for ((a, b), x) in UElement::monomial(*l).coproduct().terms {
                out.add_term(a, b, *r, c * &x);
            }
        }
        out
    }

    /// `(id⊗Δ)`.
    pub fn coproduct_right(&self) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((l, r), c) in &self.terms {
            for ((a, b), x) in UElement::monomial(*r).coproduct().terms {
                out.add_term(*l, a, b, c * &x);
            }
        }
        out
    }

    /// `m∘(f⊗g)`.
    pub fn contract(
        &self,
        f: impl Fn(&UElement) -> UElement,
        g: impl Fn(&UElement) -> UElement,
    ) -> UElement {
        let mut out = UElement::zero();
        for ((l, r), c) in &self.terms {
            let x = f(&UElement::monomial(*l)).mul(&g(&UElement::monomial(*r)));
            out = out.add(&x.scale(c));
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor3 {
    terms: BTreeMap<(UMonomial, UMonomial, UMonomial), Scalar>,
}

impl Tensor3 {
    pub fn zero() -> Tensor3 {
        Tensor3::default()
    }

    pub fn add_term(&mut self, a: UMonomial, b: UMonomial, c: UMonomial, x: Scalar) {
        add_into(&mut self.terms, (a, b, c), x);
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `l ⊗ r` as a single printable factor.
pub(crate) struct TensorPair<'a, M>(pub &'a M, pub &'a M);

impl<M: fmt::Display> fmt::Display for TensorPair<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((l, r), c)) in self.terms.iter().enumerate() {
            super::write_summand(f, idx == 0, c, &TensorPair(l, r), false)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GroupLabel;

    #[test]
    fn coassociative_on_mixed_monomial() {
        let x = UElement::monomial(UMonomial::new(2, GroupLabel::new(1, 3), 1, 2));
        let d = x.coproduct();
        assert_eq!(d.coproduct_left(), d.coproduct_right());
    }

    #[test]
    fn antipode_axiom_on_f1() {
        let d = UElement::fd(1).coproduct();
        let v = d.contract(|a| a.antipode(), |b| b.clone());
        assert!(v.is_zero());
    }
}
