//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Variable 0 is `s`; variables 1.. are the free parameters.

use super::gauss::GaussRat;
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub const NVARS: usize = 9;

/// Exponent vector. Ordered graded-lexicographically with `s` most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: usize, e: u16) -> Mono {
        let mut m = [0; NVARS];
        m[v] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Mono(m)
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quo(&self, o: &Mono) -> Mono {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Mono(m)
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        Mono(m)
    }

    /// True when only `s` occurs.
    pub fn is_s_only(&self) -> bool {
        self.0[1..].iter().all(|&e| e == 0)
    }

    /// The monomial with the `s` exponent cleared.
    pub fn params_part(&self) -> Mono {
        let mut m = self.0;
        m[0] = 0;
        Mono(m)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Terms sorted by descending monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, GaussRat)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: GaussRat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::ONE, c)],
            }
        }
    }

    pub fn one() -> Poly {
        Poly::constant(GaussRat::one())
    }

    pub fn monomial(m: Mono, c: GaussRat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_map(map: BTreeMap<Mono, GaussRat>) -> Poly {
        let mut terms: Vec<(Mono, GaussRat)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_s_only(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_s_only())
    }

    pub fn lead(&self) -> Option<&(Mono, GaussRat)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Mono, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: BTreeMap<Mono, GaussRat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(x) => *x = &*x + &c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(map)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some((m, _)) => *m,
            None => return Mono::ONE,
        };
        for (x, _) in it {
            m = m.meet(x);
        }
        m
    }

    /// Divide every exponent vector by `m`, which must divide all of them.
    pub fn div_mono(&self, m: &Mono) -> Poly {
        let mut terms: Vec<(Mono, GaussRat)> =
            self.terms.iter().map(|(x, c)| (m.quo(x), c.clone())).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.lead()?.clone();
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quo: BTreeMap<Mono, GaussRat> = BTreeMap::new();
        let mut steps = 0usize;
        while let Some((m, c)) = rem.lead().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            steps += 1;
            if steps > 100_000 {
                return None;
            }
            let qm = lm.quo(&m);
            let qc = &c * &lc_inv;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quo.insert(qm, qc);
        }
        Some(Poly::from_map(quo))
    }

    /// Dense coefficient vector in `s` (index = exponent) for an `s`-only polynomial.
    pub fn to_dense_s(&self) -> Vec<GaussRat> {
        let deg = self.terms.iter().map(|(m, _)| m.0[0]).max().unwrap_or(0) as usize;
        let mut v = vec![GaussRat::zero(); deg + 1];
        for (m, c) in &self.terms {
            v[m.0[0] as usize] = c.clone();
        }
        v
    }

    pub fn from_dense_s(v: &[GaussRat]) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in v.iter().enumerate().rev() {
            if !c.is_zero() {
                terms.push((Mono::var(0, e as u16), c.clone()));
            }
        }
        Poly { terms }
    }

    /// Group terms by their parameter monomial; each group is an `s`-only polynomial.
    pub fn s_coefficients(&self) -> Vec<Poly> {
        let mut groups: BTreeMap<Mono, Vec<(Mono, GaussRat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.params_part())
                .or_default()
                .push((Mono::var(0, m.0[0]), c.clone()));
        }
        groups
            .into_values()
            .map(|mut t| {
                t.sort_by_key(|t| std::cmp::Reverse(t.0));
                Poly { terms: t }
            })
            .collect()
    }

    /// Divide an arbitrary polynomial by an `s`-only polynomial that divides each `s`-coefficient.
    pub fn div_by_s_poly(&self, g: &Poly) -> Poly {
        let mut groups: BTreeMap<Mono, Vec<(Mono, GaussRat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.params_part())
                .or_default()
                .push((Mono::var(0, m.0[0]), c.clone()));
        }
        let gd = g.to_dense_s();
        let mut out = Poly::zero();
        for (pm, mut t) in groups {
            t.sort_by_key(|t| std::cmp::Reverse(t.0));
            let p = Poly { terms: t }.to_dense_s();
            let (q, _) = dense_divrem(&p, &gd);
            out = out.add(&Poly::from_dense_s(&q).mul_term(&pm, &GaussRat::one()));
        }
        out
    }

    /// Substitute `s -> 1/s` and multiply through by `s^deg_s`, returning the new poly and `deg_s`.
    pub fn reverse_s(&self) -> (Poly, u16) {
        let d = self.terms.iter().map(|(m, _)| m.0[0]).max().unwrap_or(0);
        let mut terms: Vec<(Mono, GaussRat)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0;
                e[0] = d - e[0];
                (Mono(e), c.clone())
            })
            .collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        (Poly { terms }, d)
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

fn trim(v: &mut Vec<GaussRat>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_is_zero(v: &[GaussRat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Polynomial division with remainder over ℚ(i).
pub fn dense_divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut b = b.to_vec();
    trim(&mut b);
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lc_inv = b[db].inv();
    if r.len() < b.len() {
        return (vec![GaussRat::zero()], r);
    }
    let mut q = vec![GaussRat::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] * &lc_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                r[k + i] = &r[k + i] - &(&c * bi);
            }
        }
        q[k] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// Monic gcd of two dense univariate polynomials.
pub fn dense_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !dense_is_zero(&y) {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    if dense_is_zero(&x) {
        return vec![GaussRat::one()];
    }
    let inv = x.last().unwrap().inv();
    x.iter().map(|c| c * &inv).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_poly(c: &[i64]) -> Poly {
        let v: Vec<GaussRat> = c.iter().map(|&x| GaussRat::from_int(x)).collect();
        Poly::from_dense_s(&v)
    }

    #[test]
    fn gcd_of_s4_minus_1_and_s2_minus_1() {
        let a = s_poly(&[-1, 0, 0, 0, 1]).to_dense_s();
        let b = s_poly(&[-1, 0, 1]).to_dense_s();
        let g = dense_gcd(&a, &b);
        assert_eq!(Poly::from_dense_s(&g), s_poly(&[-1, 0, 1]));
    }

    #[test]
    fn exact_division_multivariate() {
        let a = Poly::monomial(Mono::var(1, 1), GaussRat::one()).add(&s_poly(&[0, 1]));
        let b = a.mul(&a);
        assert_eq!(b.exact_div(&a), Some(a.clone()));
        assert_eq!(a.exact_div(&s_poly(&[0, 0, 1])), None);
    }

    #[test]
    fn graded_order_puts_higher_degree_first() {
        assert!(Mono::var(0, 2) > Mono::var(1, 1));
        assert!(Mono::var(0, 1) > Mono::var(1, 1));
    }
}
