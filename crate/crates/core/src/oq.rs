//! The coordinate algebra O(SL_q(2)) with generators `a = u11`, `b = u12`,
//! `c = u21`, `d = u22`, and its pairing with U.
//!
//! Relations: `ab = qba, ac = qca, bc = cb, bd = qdb, cd = qdc, ad − qbc = 1,
//! da − q^{-1}bc = 1`. Normal monomials are `a^i b^j c^k d^l` with `i·l = 0`.

use crate::scalar::Scalar;
use crate::uq::{UElement, UMonomial};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// `a^i b^j c^k d^l` with `i == 0 || l == 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct OMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

/// Generator index: 0 = a, 1 = b, 2 = c, 3 = d.
pub type Gen = usize;

impl OMonomial {
    pub const ONE: OMonomial = OMonomial {
        i: 0,
        j: 0,
        k: 0,
        l: 0,
    };

    pub fn new(i: u32, j: u32, k: u32, l: u32) -> OMonomial {
        assert!(i == 0 || l == 0, "not a normal monomial");
        OMonomial { i, j, k, l }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k + self.l
    }

    /// The generator word of this monomial.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(0, self.i as usize));
        w.extend(std::iter::repeat_n(1, self.j as usize));
        w.extend(std::iter::repeat_n(2, self.k as usize));
        w.extend(std::iter::repeat_n(3, self.l as usize));
        w
    }

    /// All normal monomials of total degree ≤ `d`, sorted.
    pub fn up_to_degree(d: u32) -> Vec<OMonomial> {
        let mut out = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                for k in 0..=d - i - j {
                    for l in 0..=d - i - j - k {
                        if i == 0 || l == 0 {
                            out.push(OMonomial { i, j, k, l });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|m| (m.degree(), *m));
        out
    }
}

/// Fundamental matrix entry `u^r_s` of a generator (0-based indices).
pub fn gen_index(g: Gen) -> (usize, usize) {
    (g / 2, g % 2)
}

pub fn gen_of(r: usize, s: usize) -> Gen {
    2 * r + s
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OElement {
    terms: BTreeMap<OMonomial, Scalar>,
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

impl OElement {
    pub fn zero() -> OElement {
        OElement::default()
    }

    pub fn one() -> OElement {
        OElement::monomial(OMonomial::ONE)
    }

    pub fn scalar(c: Scalar) -> OElement {
        OElement::term(OMonomial::ONE, c)
    }

    pub fn monomial(m: OMonomial) -> OElement {
        OElement::term(m, Scalar::one())
    }

    pub fn term(m: OMonomial, c: Scalar) -> OElement {
        let mut out = OElement::zero();
        out.add_term(m, c);
        out
    }

    /// `u^r_s` with 0-based indices.
    pub fn u(r: usize, s: usize) -> OElement {
        OElement::gen(gen_of(r, s))
    }

    pub fn gen(g: Gen) -> OElement {
        let m = match g {
            0 => OMonomial::new(1, 0, 0, 0),
            1 => OMonomial::new(0, 1, 0, 0),
            2 => OMonomial::new(0, 0, 1, 0),
            _ => OMonomial::new(0, 0, 0, 1),
        };
        OElement::monomial(m)
    }

    pub fn terms(&self) -> &BTreeMap<OMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &OMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: OMonomial, c: Scalar) {
        add_into(&mut self.terms, m, c);
    }

    pub fn add(&self, o: &OElement) -> OElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &OElement) -> OElement {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> OElement {
        if c.is_zero() {
            return OElement::zero();
        }
        OElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Right multiplication by one generator.
    pub fn times_gen(&self, g: Gen) -> OElement {
        let mut out = OElement::zero();
        for (m, x) in &self.terms {
            for (n, c) in times_gen_mono(m, g) {
                out.add_term(n, x * &c);
            }
        }
        out
    }

    pub fn mul(&self, o: &OElement) -> OElement {
        let mut out = OElement::zero();
        for (m, y) in &o.terms {
            let mut cur = self.scale(y);
            for g in m.word() {
                cur = cur.times_gen(g);
            }
            out = out.add(&cur);
        }
        out
    }

    pub fn pow(&self, e: u32) -> OElement {
        (0..e).fold(OElement::one(), |acc, _| acc.mul(self))
    }

    /// Normal form of a word in the generators.
    pub fn from_word(w: &[Gen]) -> OElement {
        w.iter().fold(OElement::one(), |acc, &g| acc.times_gen(g))
    }

    pub fn counit(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if m.j == 0 && m.k == 0 {
                acc = &acc + c;
            }
        }
        acc
    }

    /// `Δu^r_s = Σ_t u^r_t ⊗ u^t_s`, extended multiplicatively.
    pub fn coproduct(&self) -> OTensor {
        let mut out = OTensor::default();
        for (m, c) in &self.terms {
            let mut cur = OTensor::pure(&OElement::one(), &OElement::one());
            for g in m.word() {
                let (r, s) = gen_index(g);
                let mut next = OTensor::default();
                for ((x, y), k) in &cur.terms {
                    for t in 0..2 {
                        let l = OElement::monomial(*x).times_gen(gen_of(r, t));
                        let rr = OElement::monomial(*y).times_gen(gen_of(t, s));
                        next = next.add(&OTensor::pure(&l, &rr.scale(k)));
                    }
                }
                cur = next;
            }
            out = out.add(&cur.scale(c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> OElement {
        let mut out = OElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

fn times_gen_mono(m: &OMonomial, g: Gen) -> Vec<(OMonomial, Scalar)> {
    let OMonomial { i, j, k, l } = *m;
    match g {
        1 => vec![(
            OMonomial { i, j: j + 1, k, l },
            Scalar::q_pow(-(l as i64)),
        )],
        2 => vec![(
            OMonomial { i, j, k: k + 1, l },
            Scalar::q_pow(-(l as i64)),
        )],
        3 if i == 0 => vec![(OMonomial { i, j, k, l: l + 1 }, Scalar::one())],
        3 => {
            let e = (j + k) as i64;
            vec![
                (OMonomial { i: i - 1, j, k, l: 0 }, Scalar::q_pow(e)),
                (
                    OMonomial {
                        i: i - 1,
                        j: j + 1,
                        k: k + 1,
                        l: 0,
                    },
                    Scalar::q_pow(e + 1),
                ),
            ]
        }
        _ if l == 0 => vec![(
            OMonomial { i: i + 1, j, k, l },
            Scalar::q_pow(-((j + k) as i64)),
        )],
        _ => vec![
            (OMonomial { i: 0, j, k, l: l - 1 }, Scalar::one()),
            (
                OMonomial {
                    i: 0,
                    j: j + 1,
                    k: k + 1,
                    l: l - 1,
                },
                Scalar::q_pow(-1 - 2 * (l as i64 - 1)),
            ),
        ],
    }
}

/// Finite sum in O⊗O.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OTensor {
    terms: BTreeMap<(OMonomial, OMonomial), Scalar>,
}

impl OTensor {
    pub fn pure(a: &OElement, b: &OElement) -> OTensor {
        let mut out = OTensor::default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                add_into(&mut out.terms, (*ma, *mb), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, o: &OTensor) -> OTensor {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            add_into(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> OTensor {
        let mut out = OTensor::default();
        for (k, x) in &self.terms {
            add_into(&mut out.terms, *k, x * c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(OMonomial, OMonomial), Scalar> {
        &self.terms
    }

    /// `(ε⊗id)`.
    pub fn counit_left(&self) -> OElement {
        let mut out = OElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(*r, c * &OElement::monomial(*l).counit());
        }
        out
    }

    /// `(id⊗ε)`.
    pub fn counit_right(&self) -> OElement {
        let mut out = OElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(*l, c * &OElement::monomial(*r).counit());
        }
        out
    }
}

/// Pairing of U with O(SL_q(2)).
///
/// Holds a memo table keyed by `(U monomial, word)`; reuse one instance for
/// many evaluations.
#[derive(Default)]
pub struct Pairing {
    memo: HashMap<(UMonomial, Vec<Gen>), Scalar>,
}

impl Pairing {
    pub fn new() -> Pairing {
        Pairing::default()
    }

    /// `⟨X, x⟩`.
    pub fn pair(&mut self, x: &UElement, y: &OElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in y.terms() {
            let w = m.word();
            for (um, uc) in x.terms() {
                let v = self.pair_word(um, &w);
                if !v.is_zero() {
                    acc = &acc + &(&(c * uc) * &v);
                }
            }
        }
        acc
    }

    /// `⟨m, w₁⋯wₙ⟩ = Σ ⟨m₍₁₎, w₁⟩⟨m₍₂₎, w₂⋯wₙ⟩`.
    pub fn pair_word(&mut self, m: &UMonomial, w: &[Gen]) -> Scalar {
        // F² and E² vanish on the fundamental corepresentation.
        if m.i as usize > w.len() || m.j as usize > w.len() {
            return Scalar::zero();
        }
        match w.len() {
            0 => return UElement::monomial(*m).counit(),
            1 => {
                let (r, s) = gen_index(w[0]);
                return UElement::monomial(*m).fundamental().get(r, s).clone();
            }
            _ => {}
        }
        let key = (*m, w.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = Scalar::zero();
        for ((l, r), c) in UElement::monomial(*m).coproduct().terms() {
            let (gr, gs) = gen_index(w[0]);
            let a = UElement::monomial(*l).fundamental().get(gr, gs).clone();
            if a.is_zero() {
                continue;
            }
            let b = self.pair_word(r, &w[1..]);
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(&(c * &a) * &b);
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// One-shot `⟨X, x⟩`.
pub fn pair(x: &UElement, y: &OElement) -> Scalar {
    Pairing::new().pair(x, y)
}

const GEN_NAMES: [&str; 4] = ["a", "b", "c", "d"];

impl fmt::Display for OMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (g, e) in [self.i, self.j, self.k, self.l].into_iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(GEN_NAMES[g].to_string()),
                _ => parts.push(format!("{}^{}", GEN_NAMES[g], e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for OElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            crate::uq::write_summand(f, idx == 0, c, m, *m == OMonomial::ONE)?;
        }
        Ok(())
    }
}

impl fmt::Display for OTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, ((l, r), c)) in self.terms.iter().enumerate() {
            crate::uq::write_summand(f, idx == 0, c, &crate::uq::TensorPair(l, r), false)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GroupLabel;

    fn a() -> OElement {
        OElement::gen(0)
    }
    fn b() -> OElement {
        OElement::gen(1)
    }
    fn c() -> OElement {
        OElement::gen(2)
    }
    fn d() -> OElement {
        OElement::gen(3)
    }

    #[test]
    fn basic_relations() {
        assert_eq!(d().mul(&c()), c().mul(&d()).scale(&Scalar::q_pow(-1)));
        assert_eq!(b().mul(&c()), c().mul(&b()));
        let det = a().mul(&d()).sub(&b().mul(&c()).scale(&Scalar::q()));
        assert_eq!(det, OElement::one());
        let da = d().mul(&a()).sub(&b().mul(&c()).scale(&Scalar::q_pow(-1)));
        assert_eq!(da, OElement::one());
    }

    #[test]
    fn associativity_on_words() {
        let w = [a(), d(), b(), a(), c(), d()];
        let left = w.iter().fold(OElement::one(), |acc, x| acc.mul(x));
        let right = w.iter().rev().fold(OElement::one(), |acc, x| x.mul(&acc));
        assert_eq!(left, right);
    }

    #[test]
    fn coproduct_and_counit() {
        let db = b().coproduct();
        let expect = OTensor::pure(&a(), &b()).add(&OTensor::pure(&b(), &d()));
        assert_eq!(db, expect);
        assert!(a().counit().is_one());
        assert!(b().counit().is_zero());
        let x = a().mul(&d()).add(&b().mul(&c()).mul(&d()));
        assert_eq!(x.coproduct().counit_left(), x);
        assert_eq!(x.coproduct().counit_right(), x);
    }

    #[test]
    fn pairing_on_generators() {
        assert!(pair(&UElement::e(), &c()).is_one());
        assert_eq!(pair(&UElement::k_pow(1), &a()), Scalar::s_pow(-1));
        let mut p = Pairing::new();
        assert_eq!(p.pair(&UElement::e(), &c().mul(&d())), Scalar::s());
        assert_eq!(p.pair(&UElement::e(), &d().mul(&c())), Scalar::s_pow(-1));
        let mu = UElement::group(GroupLabel::new(1, 3));
        let det = a().mul(&d()).sub(&b().mul(&c()).scale(&Scalar::q()));
        assert!(p.pair(&mu, &det).is_one());
    }
}
