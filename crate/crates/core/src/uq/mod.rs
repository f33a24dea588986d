//! The dual Hopf algebra U of O(SL_q(2)), stored in the divided-power
//! PBW basis `F^(i) f_μ E^(j) G^(k)`.

mod tensor;

pub use tensor::{Tensor2, Tensor3};
pub(crate) use tensor::TensorPair;

use crate::scalar::{qfact, GroupLabel, RealForm, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// `F^(i) f_μ E^(j) G^(k)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UMonomial {
    pub i: u32,
    pub mu: GroupLabel,
    pub j: u32,
    pub k: u32,
}

impl UMonomial {
    pub const ONE: UMonomial = UMonomial {
        i: 0,
        mu: GroupLabel::ONE,
        j: 0,
        k: 0,
    };

    pub fn new(i: u32, mu: GroupLabel, j: u32, k: u32) -> UMonomial {
        UMonomial { i, mu, j, k }
    }

    /// ℤ-degree with `deg F = 1`, `deg E = −1`.
    pub fn degree(&self) -> i64 {
        self.i as i64 - self.j as i64
    }

    pub fn is_one(&self) -> bool {
        *self == UMonomial::ONE
    }
}

impl Ord for UMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.i, self.j, self.k, self.mu.t, self.mu.k).cmp(&(o.i, o.j, o.k, o.mu.t, o.mu.k))
    }
}

impl PartialOrd for UMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn qfact_cached(n: u32) -> Scalar {
    static CACHE: OnceLock<Vec<Scalar>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (0..10).map(qfact).collect());
    cache
        .get(n as usize)
        .cloned()
        .unwrap_or_else(|| qfact(n))
}

fn fact(n: u32) -> Scalar {
    let mut acc: i64 = 1;
    for j in 2..=n as i64 {
        acc *= j;
    }
    Scalar::from_int(acc)
}

fn binom(n: u32, m: u32) -> i64 {
    let mut acc: i64 = 1;
    for j in 0..m as i64 {
        acc = acc * (n as i64 - j) / (j + 1);
    }
    acc
}

/// Linear combination of PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UElement {
    terms: BTreeMap<UMonomial, Scalar>,
}

/// Plain PBW key `F^a f_μ E^b G^c`.
type Plain = BTreeMap<(u32, GroupLabel, u32, u32), Scalar>;

fn plain_add(p: &mut Plain, key: (u32, GroupLabel, u32, u32), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&key) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                p.remove(&key);
            }
        }
        None => {
            p.insert(key, c);
        }
    }
}

/// Multiply `(G + shift)^c` onto plain terms with fixed `(a, μ, b)`.
fn push_shifted_g(out: &mut Plain, a: u32, mu: GroupLabel, b: u32, c: u32, shift: i64, coef: &Scalar) {
    for m in 0..=c {
        let e = c - m;
        let factor = binom(c, m) * shift.pow(e);
        if factor == 0 {
            continue;
        }
        plain_add(out, (a, mu, b, m), coef * &Scalar::from_int(factor));
    }
}

fn plain_times_g(p: &Plain) -> Plain {
    p.iter()
        .map(|(&(a, mu, b, c), x)| ((a, mu, b, c + 1), x.clone()))
        .collect()
}

fn plain_times_f_label(p: &Plain, nu: GroupLabel) -> Plain {
    let mut out = Plain::new();
    for (&(a, mu, b, c), x) in p {
        let coef = x * &nu.value_pow(-2 * b as i64);
        plain_add(&mut out, (a, mu.mul(nu), b, c), coef);
    }
    out
}

fn plain_times_e(p: &Plain) -> Plain {
    let mut out = Plain::new();
    for (&(a, mu, b, c), x) in p {
        push_shifted_g(&mut out, a, mu, b + 1, c, 2, x);
    }
    out
}

fn plain_times_f(p: &Plain) -> Plain {
    let mut out = Plain::new();
    let qq = &Scalar::q() - &Scalar::q_pow(-1);
    for (&(a, mu, b, c), x) in p {
        let lead = x * &mu.value_pow(-2);
        push_shifted_g(&mut out, a + 1, mu, b, c, -2, &lead);
        if b > 0 {
            // E^b F = F E^b + Σ_k (q^{-2k} f_q − q^{2k} f_{q^{-1}})/(q − q^{-1}) E^{b−1}
            let mut cq = Scalar::zero();
            let mut cqi = Scalar::zero();
            for k in 0..b as i64 {
                cq = &cq + &Scalar::q_pow(-2 * k);
                cqi = &cqi + &Scalar::q_pow(2 * k);
            }
            let cq = &(x * &cq) / &qq;
            let cqi = -&(&(x * &cqi) / &qq);
            push_shifted_g(&mut out, a, mu.mul(GroupLabel::Q), b - 1, c, -2, &cq);
            push_shifted_g(&mut out, a, mu.mul(GroupLabel::Q_INV), b - 1, c, -2, &cqi);
        }
    }
    out
}

impl UElement {
    pub fn zero() -> UElement {
        UElement::default()
    }

    pub fn one() -> UElement {
        UElement::monomial(UMonomial::ONE)
    }

    pub fn scalar(c: Scalar) -> UElement {
        UElement::term(UMonomial::ONE, c)
    }

    pub fn monomial(m: UMonomial) -> UElement {
        UElement::term(m, Scalar::one())
    }

    pub fn term(m: UMonomial, c: Scalar) -> UElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        UElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (UMonomial, Scalar)>) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    /// `E = K·E^(1)`.
    pub fn e() -> UElement {
        UElement::monomial(UMonomial::new(0, GroupLabel::K, 1, 0))
    }

    /// `F = F^(1)·K`.
    pub fn f() -> UElement {
        UElement::monomial(UMonomial::new(1, GroupLabel::K, 0, 0))
    }

    pub fn g() -> UElement {
        UElement::monomial(UMonomial::new(0, GroupLabel::ONE, 0, 1))
    }

    pub fn group(mu: GroupLabel) -> UElement {
        UElement::monomial(UMonomial::new(0, mu, 0, 0))
    }

    pub fn k_pow(n: i32) -> UElement {
        UElement::group(GroupLabel::new(0, n))
    }

    pub fn fd(n: u32) -> UElement {
        UElement::monomial(UMonomial::new(n, GroupLabel::ONE, 0, 0))
    }

    pub fn ed(n: u32) -> UElement {
        UElement::monomial(UMonomial::new(0, GroupLabel::ONE, n, 0))
    }

    pub fn gd(n: u32) -> UElement {
        UElement::monomial(UMonomial::new(0, GroupLabel::ONE, 0, n))
    }

    pub fn terms(&self) -> &BTreeMap<UMonomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<UMonomial, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &UMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: UMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> UElement {
        UElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> UElement {
        if c.is_zero() {
            return UElement::zero();
        }
        UElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    fn to_plain(&self) -> Plain {
        let mut p = Plain::new();
        for (m, c) in &self.terms {
            let d = &(&qfact_cached(m.i) * &qfact_cached(m.j)) * &fact(m.k);
            let label = m.mu.mul(GroupLabel::new(0, -((m.i + m.j) as i32)));
            plain_add(&mut p, (m.i, label, m.j, m.k), c / &d);
        }
        p
    }

    fn from_plain(p: Plain) -> UElement {
        let mut out = UElement::zero();
        for ((a, mu, b, c), x) in p {
            let f = &(&qfact_cached(a) * &qfact_cached(b)) * &fact(c);
            let label = mu.mul(GroupLabel::new(0, (a + b) as i32));
            out.add_term(UMonomial::new(a, label, b, c), &x * &f);
        }
        out
    }

    /// Product in U, computed by straightening `E^b F` and `G^c E`, `G^c F`.
    pub fn mul(&self, o: &UElement) -> UElement {
        if self.is_zero() || o.is_zero() {
            return UElement::zero();
        }
        let left = self.to_plain();
        let mut acc = Plain::new();
        for (&(a, nu, b, c), y) in &o.to_plain() {
            let mut cur: Plain = left.iter().map(|(k, x)| (*k, x * y)).collect();
            for _ in 0..a {
                cur = plain_times_f(&cur);
            }
            cur = plain_times_f_label(&cur, nu);
            for _ in 0..b {
                cur = plain_times_e(&cur);
            }
            for _ in 0..c {
                cur = plain_times_g(&cur);
            }
            for (k, x) in cur {
                plain_add(&mut acc, k, x);
            }
        }
        UElement::from_plain(acc)
    }

    pub fn pow(&self, e: u32) -> UElement {
        let mut acc = UElement::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Product of a word, left to right.
    pub fn product<'a>(it: impl IntoIterator<Item = &'a UElement>) -> UElement {
        it.into_iter().fold(UElement::one(), |acc, x| acc.mul(x))
    }

    /// `Δ(F^(i) f_μ E^(j) G^(k)) = Σ F^(i−r) f_{q^{−r−s}μ} E^(j−s) G^(k−t) ⊗ F^(r) f_μ E^(s) G^(t)`.
    pub fn coproduct(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (m, c) in &self.terms {
            for r in 0..=m.i {
                for s in 0..=m.j {
                    for t in 0..=m.k {
                        let l = UMonomial::new(
                            m.i - r,
                            m.mu.mul(GroupLabel::new(0, -2 * (r + s) as i32)),
                            m.j - s,
                            m.k - t,
                        );
                        let rr = UMonomial::new(r, m.mu, s, t);
                        out.add_term(l, rr, c.clone());
                    }
                }
            }
        }
        out
    }

    pub fn counit(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if m.i == 0 && m.j == 0 && m.k == 0 {
                acc = &acc + c;
            }
        }
        acc
    }

    /// Image under an antimultiplicative map given on generators, with
    /// coefficients passed through `coef`.
    fn anti_map(
        &self,
        coef: impl Fn(&Scalar) -> Scalar,
        e: &UElement,
        f: &UElement,
        g: &UElement,
        label: impl Fn(GroupLabel) -> GroupLabel,
    ) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in &self.terms {
            // F^(i) f_μ E^(j) G^(k) = F^i f_{μ s^{-(i+j)}} E^j G^k / ([i]![j]! k!)
            let d = &(&qfact_cached(m.i) * &qfact_cached(m.j)) * &fact(m.k);
            let nu = m.mu.mul(GroupLabel::new(0, -((m.i + m.j) as i32)));
            let word = g
                .pow(m.k)
                .mul(&e.pow(m.j))
                .mul(&UElement::group(label(nu)))
                .mul(&f.pow(m.i));
            let x = coef(&(c / &d));
            out = out.add(&word.scale(&x));
        }
        out
    }

    pub fn antipode(&self) -> UElement {
        let e = UElement::e().scale(&-Scalar::q());
        let f = UElement::f().scale(&-Scalar::q_pow(-1));
        let g = UElement::g().neg();
        self.anti_map(|c| c.clone(), &e, &f, &g, |mu| mu.inv())
    }

    /// The antilinear involution of the given real form.
    pub fn star(&self, form: RealForm) -> UElement {
        let (e, f, g) = match form {
            RealForm::Su2 => (UElement::f(), UElement::e(), UElement::g()),
            RealForm::Su11 => (UElement::f().neg(), UElement::e().neg(), UElement::g()),
            RealForm::Sl2R => (
                UElement::e().scale(&-Scalar::q()),
                UElement::f().scale(&-Scalar::q_pow(-1)),
                UElement::g().neg(),
            ),
        };
        let label = move |mu: GroupLabel| match form {
            RealForm::Sl2R => mu,
            _ => mu.conj(),
        };
        self.anti_map(|c| c.conjugate(form), &e, &f, &g, label)
    }

    /// Split into ℤ-homogeneous parts, keyed by degree.
    pub fn degree_parts(&self) -> BTreeMap<i64, UElement> {
        let mut out: BTreeMap<i64, UElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Split by group-like label μ.
    pub fn label_parts(&self) -> BTreeMap<GroupLabel, UElement> {
        let mut out: BTreeMap<GroupLabel, UElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.mu).or_default().add_term(*m, c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_parts().len() <= 1
    }

    /// Image in the fundamental 2×2 representation.
    pub fn fundamental(&self) -> Mat2 {
        let mut acc = Mat2::zero();
        for (m, c) in &self.terms {
            acc = acc.add(&fundamental_monomial(m).scale(c));
        }
        acc
    }

    /// Apply a coefficient map, e.g. parameter substitution.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> UElement {
        UElement::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn max_i(&self) -> u32 {
        self.terms.keys().map(|m| m.i).max().unwrap_or(0)
    }

    pub fn max_j(&self) -> u32 {
        self.terms.keys().map(|m| m.j).max().unwrap_or(0)
    }

    pub fn max_k(&self) -> u32 {
        self.terms.keys().map(|m| m.k).max().unwrap_or(0)
    }
}

/// ρ of a divided monomial.
fn fundamental_monomial(m: &UMonomial) -> Mat2 {
    if m.i > 1 || m.j > 1 {
        return Mat2::zero();
    }
    // plain F^i f_ν E^j G^k with ν = μ s^{-(i+j)}; [1]! = 1
    let nu = m.mu.mul(GroupLabel::new(0, -((m.i + m.j) as i32)));
    let mut x = Mat2::diag(nu.value_pow(-1), nu.value());
    if m.i == 1 {
        x = Mat2::from_ints([[0, 1], [0, 0]]).mul(&x);
    }
    if m.j == 1 {
        x = x.mul(&Mat2::from_ints([[0, 0], [1, 0]]));
    }
    if m.k > 0 {
        let g = Mat2::from_ints([[-1, 0], [0, 1]]);
        let mut gp = Mat2::identity();
        for _ in 0..m.k {
            gp = gp.mul(&g);
        }
        x = x.mul(&gp).scale(&(&Scalar::one() / &fact(m.k)));
    }
    x
}

/// 2×2 matrix over the scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Scalar; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Mat2 {
        Mat2(Default::default())
    }

    pub fn identity() -> Mat2 {
        Mat2::diag(Scalar::one(), Scalar::one())
    }

    pub fn diag(a: Scalar, d: Scalar) -> Mat2 {
        Mat2([[a, Scalar::zero()], [Scalar::zero(), d]])
    }

    pub fn from_ints(x: [[i64; 2]; 2]) -> Mat2 {
        Mat2(x.map(|r| r.map(Scalar::from_int)))
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.0[r][c]
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut out = self.clone();
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = &self.0[r][c] + &o.0[r][c];
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| &x * s)))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = &(&self.0[r][0] * &o.0[0][c]) + &(&self.0[r][1] * &o.0[1][c]);
            }
        }
        out
    }
}

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.i > 0 {
            parts.push(format!("Fd({})", self.i));
        }
        if self.mu != GroupLabel::ONE {
            if self.mu.t == 0 {
                if self.mu.k == 1 {
                    parts.push("K".into());
                } else {
                    parts.push(format!("K^{}", self.mu.k));
                }
            } else {
                parts.push(format!("f[{}]", self.mu));
            }
        }
        if self.j > 0 {
            parts.push(format!("Ed({})", self.j));
        }
        if self.k > 0 {
            parts.push(format!("Gd({})", self.k));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Write `c*m` as one summand; returns whether a leading minus was folded out.
pub(crate) fn write_summand(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Scalar,
    mono: &dyn fmt::Display,
    mono_is_one: bool,
) -> fmt::Result {
    let neg = !first && c.is_atomic() && c.prints_negative();
    let c = if neg { -c } else { c.clone() };
    if !first {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    if mono_is_one {
        if c.is_atomic() {
            return write!(f, "{c}");
        }
        return write!(f, "({c})");
    }
    if c.is_one() {
        write!(f, "{mono}")
    } else if (-&c).is_one() {
        write!(f, "-{mono}")
    } else if c.is_atomic() {
        write!(f, "{c}*{mono}")
    } else {
        write!(f, "({c})*{mono}")
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            write_summand(f, idx == 0, c, m, m.is_one())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn commutator_ef() {
        let ef = UElement::e().mul(&UElement::f());
        let fe = UElement::f().mul(&UElement::e());
        let rhs = UElement::group(GroupLabel::Q)
            .sub(&UElement::group(GroupLabel::Q_INV))
            .scale(&(&Scalar::one() / &(&q() - &Scalar::q_pow(-1))));
        assert_eq!(ef.sub(&fe), rhs);
    }

    #[test]
    fn g_past_e_and_k_past_e() {
        let ge = UElement::g().mul(&UElement::e());
        let eg2 = UElement::e().mul(&UElement::g()).add(&UElement::e().scale(&Scalar::from_int(2)));
        assert_eq!(ge, eg2);
        let ek = UElement::e().mul(&UElement::k_pow(1));
        let ke = UElement::k_pow(1).mul(&UElement::e()).scale(&Scalar::q_pow(-1));
        assert_eq!(ek, ke);
    }

    #[test]
    fn divided_square_of_f1() {
        let f1 = UElement::fd(1);
        let sq = f1.mul(&f1);
        // F K^{-1} F K^{-1} = q F^2 K^{-2} = q [2] F^(2)
        assert_eq!(sq, UElement::fd(2).scale(&(&q() * &crate::scalar::qnum(2))));
    }

    #[test]
    fn coproduct_of_g_and_f1() {
        let dg = UElement::g().coproduct();
        let expect = Tensor2::from_pairs(&[
            (UElement::one(), UElement::g()),
            (UElement::g(), UElement::one()),
        ]);
        assert_eq!(dg, expect);
        let df = UElement::fd(1).coproduct();
        let expect = Tensor2::from_pairs(&[
            (UElement::fd(1), UElement::one()),
            (UElement::k_pow(-2), UElement::fd(1)),
        ]);
        assert_eq!(df, expect);
    }

    #[test]
    fn antipode_of_e() {
        assert_eq!(UElement::e().antipode(), UElement::e().scale(&-q()));
        assert!(UElement::fd(2).mul(&UElement::k_pow(3)).counit().is_zero());
    }

    #[test]
    fn star_examples() {
        assert_eq!(UElement::e().star(RealForm::Su2), UElement::f());
        assert_eq!(UElement::g().star(RealForm::Sl2R), UElement::g().neg());
        let x = UElement::fd(2).mul(&UElement::k_pow(2));
        for form in RealForm::ALL {
            assert_eq!(x.star(form).star(form), x);
        }
    }

    #[test]
    fn fundamental_of_group_like() {
        let mu = GroupLabel::new(1, 3);
        let m = UElement::group(mu).fundamental();
        assert_eq!(m, Mat2::diag(mu.value_pow(-1), mu.value()));
        assert_eq!(UElement::one().fundamental(), Mat2::identity());
        let e = UElement::e();
        let f = UElement::f();
        let lhs = e.mul(&f).sub(&f.mul(&e)).fundamental();
        let rhs = UElement::group(GroupLabel::Q)
            .sub(&UElement::group(GroupLabel::Q_INV))
            .fundamental()
            .scale(&(&Scalar::one() / &(&q() - &Scalar::q_pow(-1))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees() {
        assert_eq!(UMonomial::new(1, GroupLabel::K, 0, 0).degree(), 1);
        assert_eq!(UMonomial::new(0, GroupLabel::new(0, 2), 1, 0).degree(), -1);
    }
}
