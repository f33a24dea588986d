//! Exact coefficients in ℚ(i)(s, p₁, …, p₈) where `s = q^{1/2}`.

mod gauss;
mod poly;

pub use gauss::GaussRat;
pub use poly::{dense_divrem, dense_gcd, Mono, Poly, NVARS};

use crate::error::{Error, Result};
use num_traits::Signed;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Names of the free parameters, indexed from variable 1.
pub const PARAM_NAMES: [&str; NVARS - 1] = [
    "alpha", "beta", "gamma", "delta", "alpha1", "alpha2", "beta1", "beta2",
];

/// Variable index for a parameter name (`alpha` or `p1`, etc).
pub fn param_index(name: &str) -> Option<usize> {
    if let Some(i) = PARAM_NAMES.iter().position(|&n| n == name) {
        return Some(i + 1);
    }
    let rest = name.strip_prefix('p')?;
    let n: usize = rest.parse().ok()?;
    (1..NVARS).contains(&n).then_some(n)
}

/// A rational function `num / den`.
///
/// The denominator is monic and nonzero; zero is `0/1`.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::from_ratio(n, d))
    }

    pub fn from_gauss(c: GaussRat) -> Scalar {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn i() -> Scalar {
        Scalar::from_gauss(GaussRat::i())
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Scalar {
        let m = Mono::var(0, k.unsigned_abs() as u16);
        if k >= 0 {
            Scalar {
                num: Poly::monomial(m, GaussRat::one()),
                den: Poly::one(),
            }
        } else {
            Scalar {
                num: Poly::one(),
                den: Poly::monomial(m, GaussRat::one()),
            }
        }
    }

    pub fn s() -> Scalar {
        Scalar::s_pow(1)
    }

    /// `q^k = s^{2k}`.
    pub fn q_pow(k: i64) -> Scalar {
        Scalar::s_pow(2 * k)
    }

    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    /// The free parameter with variable index `v` (1-based).
    pub fn param(v: usize) -> Scalar {
        assert!((1..NVARS).contains(&v));
        Scalar {
            num: Poly::monomial(Mono::var(v, 1), GaussRat::one()),
            den: Poly::one(),
        }
    }

    pub fn from_polys(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar { num, den }.canonical())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Constant value when the scalar does not depend on `s` or any parameter.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self
                .num
                .lead()
                .map(|t| t.1.clone())
                .unwrap_or_else(GaussRat::zero);
            let d = self.den.lead().unwrap().1.clone();
            Some(n.div(&d))
        } else {
            None
        }
    }

    pub fn is_free_of_params(&self) -> bool {
        self.num.is_s_only() && self.den.is_s_only()
    }

    /// Rough expression size, used for pivot selection.
    pub fn weight(&self) -> u64 {
        let t = (self.num.terms.len() + self.den.terms.len()) as u64;
        let d = (self.num.total_degree() + self.den.total_degree()) as u64;
        t * 4 + d
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .canonical())
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(Scalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .canonical())
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Scalar {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            }
            .canonical();
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            // Both denominators are monic monomials: use their lcm.
            let (ma, mb) = (self.den.terms[0].0, o.den.terms[0].0);
            let mut l = ma;
            for (x, y) in l.0.iter_mut().zip(mb.0.iter()) {
                *x = (*x).max(*y);
            }
            let one = GaussRat::one();
            let num = self
                .num
                .mul_term(&ma.quo(&l), &one)
                .add(&o.num.mul_term(&mb.quo(&l), &one));
            return Scalar {
                num,
                den: Poly::monomial(l, one),
            }
            .canonical();
        }
        Scalar {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .canonical()
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if o.den.is_one() && o.num.is_constant() {
            let c = &o.num.terms[0].1;
            return Scalar {
                num: self.num.scale(c),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() && self.num.is_constant() {
            let c = &self.num.terms[0].1;
            return Scalar {
                num: o.num.scale(c),
                den: o.den.clone(),
            };
        }
        Scalar {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .canonical()
    }

    /// Reduce to canonical form.
    fn canonical(self) -> Scalar {
        let Scalar { mut num, mut den } = self;
        if num.is_zero() {
            return Scalar::zero();
        }
        // Common monomial factor.
        let m = num.min_mono().meet(&den.min_mono());
        if m != Mono::ONE {
            num = num.div_mono(&m);
            den = den.div_mono(&m);
        }
        // After removing the monomial content, a monomial side has no common factor.
        if !den.is_monomial() && !num.is_monomial() {
            let n_s = num.is_s_only();
            let d_s = den.is_s_only();
            if n_s && d_s {
                let g = dense_gcd(&num.to_dense_s(), &den.to_dense_s());
                if g.len() > 1 {
                    let gp = Poly::from_dense_s(&g);
                    num = num.div_by_s_poly(&gp);
                    den = den.div_by_s_poly(&gp);
                }
            } else if n_s || d_s {
                let (uni, multi) = if n_s { (&num, &den) } else { (&den, &num) };
                let mut g = uni.to_dense_s();
                for c in multi.s_coefficients() {
                    if g.len() <= 1 {
                        break;
                    }
                    g = dense_gcd(&g, &c.to_dense_s());
                }
                if g.len() > 1 {
                    let gp = Poly::from_dense_s(&g);
                    num = num.div_by_s_poly(&gp);
                    den = den.div_by_s_poly(&gp);
                }
            } else if let Some(q) = num.exact_div(&den) {
                num = q;
                den = Poly::one();
            } else if let Some(q) = den.exact_div(&num) {
                num = Poly::one();
                den = q;
            }
        }
        let lc = den.lead().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    /// Complex conjugation for the given real form.
    ///
    /// Parameters are treated as real.
    pub fn conjugate(&self, form: RealForm) -> Scalar {
        let num = self.num.map_coeffs(|c| c.conj());
        let den = self.den.map_coeffs(|c| c.conj());
        if !form.q_unimodular() {
            return Scalar { num, den }.canonical();
        }
        let (rn, dn) = num.reverse_s();
        let (rd, dd) = den.reverse_s();
        let one = GaussRat::one();
        Scalar {
            num: rn.mul_term(&Mono::var(0, dd), &one),
            den: rd.mul_term(&Mono::var(0, dn), &one),
        }
        .canonical()
    }

    /// Substitute a value for a parameter.
    pub fn subst_param(&self, v: usize, val: &Scalar) -> Scalar {
        let eval = |p: &Poly| -> Scalar {
            let mut acc = Scalar::zero();
            for (m, c) in &p.terms {
                let mut mm = *m;
                let e = mm.0[v];
                mm.0[v] = 0;
                let base = Scalar {
                    num: Poly::monomial(mm, c.clone()),
                    den: Poly::one(),
                };
                let term = base.mul_ref(&val.pow(e as i64).expect("nonnegative power"));
                acc = acc.add_ref(&term);
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.checked_div(&d).expect("substitution made the denominator vanish")
    }

    /// When the denominator is `s^k`, the Laurent exponent shift `k`.
    fn laurent_shift(&self) -> Option<u16> {
        if self.den.is_monomial() && self.den.terms[0].0.is_s_only() {
            Some(self.den.terms[0].0 .0[0])
        } else {
            None
        }
    }

    /// True when the printed form is a single product of factors.
    pub fn is_atomic(&self) -> bool {
        self.laurent_shift().is_some()
            && self.num.terms.len() == 1
            && self.num.terms[0].1.is_simple()
    }

    /// True when the printed form starts with a minus sign.
    pub fn prints_negative(&self) -> bool {
        self.laurent_shift().is_some()
            && self
                .num
                .lead()
                .is_some_and(|(_, c)| c.is_negative_lead())
    }
}

/// The three real forms of SL_q(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    /// O(SU_q(2)), q real.
    Su2,
    /// O(SU_q(1,1)), q real.
    Su11,
    /// O(SL_q(2,ℝ)), |q| = 1.
    Sl2R,
}

impl RealForm {
    pub const ALL: [RealForm; 3] = [RealForm::Su2, RealForm::Su11, RealForm::Sl2R];

    pub fn q_unimodular(self) -> bool {
        matches!(self, RealForm::Sl2R)
    }

    pub fn name(self) -> &'static str {
        match self {
            RealForm::Su2 => "SU_q(2)",
            RealForm::Su11 => "SU_q(1,1)",
            RealForm::Sl2R => "SL_q(2,R)",
        }
    }

    pub fn from_name(s: &str) -> Option<RealForm> {
        match s {
            "SU_q(2)" | "su2" => Some(RealForm::Su2),
            "SU_q(1,1)" | "su11" => Some(RealForm::Su11),
            "SL_q(2,R)" | "sl2r" => Some(RealForm::Sl2R),
            _ => None,
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_ref(&-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a `Result`.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

/// `[k] = (q^k − q^{-k})/(q − q^{-1})`.
pub fn qnum(k: i64) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    if k < 0 {
        return -qnum(-k);
    }
    // [k] = q^{-(k-1)} + q^{-(k-3)} + … + q^{k-1}
    let mut acc = Scalar::zero();
    let mut e = -(k - 1);
    while e < k {
        acc = &acc + &Scalar::q_pow(e);
        e += 2;
    }
    acc
}

/// `[k]! = [k][k-1]⋯[1]`.
pub fn qfact(k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 1..=k as i64 {
        acc = &acc * &qnum(j);
    }
    acc
}

/// Group-like label `μ = i^t s^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupLabel {
    pub t: u8,
    pub k: i32,
}

impl GroupLabel {
    pub const ONE: GroupLabel = GroupLabel { t: 0, k: 0 };
    pub const K: GroupLabel = GroupLabel { t: 0, k: 1 };
    pub const K_INV: GroupLabel = GroupLabel { t: 0, k: -1 };
    pub const EPS_MINUS: GroupLabel = GroupLabel { t: 2, k: 0 };
    pub const Q: GroupLabel = GroupLabel { t: 0, k: 2 };
    pub const Q_INV: GroupLabel = GroupLabel { t: 0, k: -2 };

    pub fn new(t: i64, k: i32) -> GroupLabel {
        GroupLabel {
            t: t.rem_euclid(4) as u8,
            k,
        }
    }

    pub fn mul(self, o: GroupLabel) -> GroupLabel {
        GroupLabel::new(self.t as i64 + o.t as i64, self.k + o.k)
    }

    pub fn inv(self) -> GroupLabel {
        GroupLabel::new(-(self.t as i64), -self.k)
    }

    pub fn pow(self, e: i64) -> GroupLabel {
        GroupLabel::new(self.t as i64 * e, (self.k as i64 * e) as i32)
    }

    /// Complex conjugate of μ for q real.
    pub fn conj(self) -> GroupLabel {
        GroupLabel::new(-(self.t as i64), self.k)
    }

    /// The scalar μ.
    pub fn value(self) -> Scalar {
        &Scalar::from_gauss(GaussRat::i_pow(self.t as i64)) * &Scalar::s_pow(self.k as i64)
    }

    /// μ^e as a scalar.
    pub fn value_pow(self, e: i64) -> Scalar {
        self.pow(e).value()
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{}*s^{}", self.t, self.k)
    }
}

fn var_name(v: usize) -> &'static str {
    if v == 0 {
        "s"
    } else {
        PARAM_NAMES[v - 1]
    }
}

/// Write `c * m` with a leading sign handled by the caller.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &GaussRat,
    m: &Mono,
    s_shift: i64,
) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    for v in 0..NVARS {
        let e = m.0[v] as i64 - if v == 0 { s_shift } else { 0 };
        if e == 0 {
            continue;
        }
        if e == 1 {
            factors.push(var_name(v).to_string());
        } else {
            factors.push(format!("{}^{}", var_name(v), e));
        }
    }
    if factors.is_empty() {
        return write!(f, "{c}");
    }
    let body = factors.join("*");
    if c.is_one() {
        write!(f, "{body}")
    } else if (-c).is_one() {
        write!(f, "-{body}")
    } else {
        write!(f, "{c}*{body}")
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly, s_shift: i64) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        if idx > 0 {
            if c.is_simple() && c.is_negative_lead() {
                write!(f, " - ")?;
                write_term(f, &-c, m, s_shift)?;
                continue;
            }
            write!(f, " + ")?;
        }
        write_term(f, c, m, s_shift)?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    /// Laurent form `a*s^-2 + b` when the denominator is a power of `s`,
    /// otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.laurent_shift() {
            return write_poly(f, &self.num, k as i64);
        }
        write!(f, "(")?;
        write_poly(f, &self.num, 0)?;
        write!(f, ")/(")?;
        write_poly(f, &self.den, 0)?;
        write!(f, ")")
    }
}

impl Scalar {
    /// Integer value of a rational constant, if any.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.as_constant()?;
        if !c.is_real() || !c.re.is_integer() {
            return None;
        }
        let n = c.re.to_integer();
        if n.abs() > num_bigint::BigInt::from(i64::MAX) {
            return None;
        }
        n.to_string().parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn additive_inverse() {
        let s = Scalar::s();
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn s_squared_times_inverse() {
        let a = Scalar::s_pow(2);
        let b = Scalar::s_pow(-2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn cancels_common_factor() {
        let s4 = &Scalar::s_pow(4) - &sc(1);
        let s2 = &Scalar::s_pow(2) - &sc(1);
        let r = &s4 / &s2;
        assert_eq!(r, &Scalar::s_pow(2) + &sc(1));
        assert!(r.denom().is_one());
    }

    #[test]
    fn qnum_values() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), &Scalar::s_pow(2) + &Scalar::s_pow(-2));
        assert_eq!(qnum(-3), -qnum(3));
        for k in -12..=12 {
            let lhs = &qnum(k) * &(&Scalar::q() - &Scalar::q_pow(-1));
            let rhs = &Scalar::q_pow(k) - &Scalar::q_pow(-k);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugation() {
        let is = &Scalar::i() * &Scalar::s();
        assert_eq!(is.conjugate(RealForm::Su2), -&is);
        assert_eq!(Scalar::s().conjugate(RealForm::Sl2R), Scalar::s_pow(-1));
        let x = &(&Scalar::s_pow(3) + &Scalar::i()) / &(&Scalar::s() - &sc(2));
        for f in RealForm::ALL {
            assert_eq!(x.conjugate(f).conjugate(f), x);
        }
    }

    #[test]
    fn printing_is_laurent_when_possible() {
        assert_eq!(qnum(2).to_string(), "s^2 + s^-2");
        let x = &sc(1) / &(&Scalar::q() - &sc(1));
        assert_eq!(x.to_string(), "(1)/(s^2 - 1)");
    }

    #[test]
    fn mixed_params_reduce() {
        let a = Scalar::param(1);
        let d = &Scalar::q() - &Scalar::q_pow(-1);
        let x = &(&a * &d) / &d;
        assert_eq!(x, a);
        assert!(x.denom().is_one());
    }

    #[test]
    fn qfact_small() {
        assert!(qfact(0).is_one());
        assert_eq!(qfact(2), qnum(2));
    }
}
