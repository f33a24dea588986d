//! Complexes `V^λ ⊗ Λ^k` with `d(e⊗ρ) = Σ_r X_r.e ⊗ ω_r∧ρ + e⊗dρ`.

use crate::fodc::exterior::WEDGE2_BASIS;
use crate::fodc::FodcModel;
use crate::linalg::Matrix;
use crate::scalar::{qfact, qnum, GroupLabel, Scalar};
use crate::uq::{UElement, UMonomial};

/// Dimensions of Λ⁰ … Λ³.
pub const FORM_DIMS: [usize; 4] = [1, 3, 3, 1];

/// `V^λ` with basis `e_ν`, `ν = λ, λ−1, …, −λ`; index `n` stands for
/// `ν = λ − n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinRep {
    pub two_lambda: u32,
}

impl SpinRep {
    pub fn new(two_lambda: u32) -> SpinRep {
        SpinRep { two_lambda }
    }

    pub fn dim(&self) -> usize {
        self.two_lambda as usize + 1
    }

    /// `2ν` for basis index `n`.
    pub fn twice_nu(&self, n: usize) -> i64 {
        self.two_lambda as i64 - 2 * n as i64
    }

    fn apply_group(&self, mu: GroupLabel, v: &mut [Scalar]) {
        for (n, c) in v.iter_mut().enumerate() {
            if !c.is_zero() {
                *c = &*c * &mu.value_pow(-self.twice_nu(n));
            }
        }
    }

    /// `E^j` when `lower`, else `F^j`.
    fn apply_ladder(&self, lower: bool, j: u32, v: &[Scalar]) -> Vec<Scalar> {
        let mut cur = v.to_vec();
        let tl = self.two_lambda as i64;
        for _ in 0..j {
            let mut next = vec![Scalar::zero(); self.dim()];
            for (n, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let nu2 = self.twice_nu(n);
                if lower {
                    if n + 1 < self.dim() {
                        next[n + 1] = c * &qnum((tl + nu2) / 2);
                    }
                } else if n > 0 {
                    next[n - 1] = c * &qnum((tl - nu2) / 2);
                }
            }
            cur = next;
        }
        cur
    }

    /// `F^(i) f_μ E^(j) G^(k)` applied to `v`.
    pub fn act_monomial(&self, m: &UMonomial, v: &[Scalar]) -> Vec<Scalar> {
        let mut w: Vec<Scalar> = v
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if c.is_zero() || m.k == 0 {
                    return c.clone();
                }
                let g = Scalar::from_int(-self.twice_nu(n));
                c * &g.pow(m.k as i64).expect("integer power")
            })
            .collect();
        if m.k > 1 {
            let fact = (1..=m.k as i64).product::<i64>();
            let inv = Scalar::from_ratio(1, fact);
            w.iter_mut().for_each(|c| *c = &*c * &inv);
        }
        if m.j > 0 {
            w = self.apply_ladder(true, m.j, &w);
            self.apply_group(GroupLabel::K.pow(-(m.j as i64)), &mut w);
            let inv = qfact(m.j).inv().expect("[j]! is nonzero");
            w.iter_mut().for_each(|c| *c = &*c * &inv);
        }
        self.apply_group(m.mu, &mut w);
        if m.i > 0 {
            self.apply_group(GroupLabel::K.pow(-(m.i as i64)), &mut w);
            w = self.apply_ladder(false, m.i, &w);
            let inv = qfact(m.i).inv().expect("[i]! is nonzero");
            w.iter_mut().for_each(|c| *c = &*c * &inv);
        }
        w
    }

    pub fn act(&self, z: &UElement, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (m, c) in z.terms() {
            let w = self.act_monomial(m, v);
            for (o, x) in out.iter_mut().zip(w) {
                if !x.is_zero() {
                    *o = &*o + &(c * &x);
                }
            }
        }
        out
    }

    /// Matrix of `z` on `V^λ`: column `n` is `z.e_n`.
    pub fn matrix(&self, z: &UElement) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for n in 0..d {
            let mut e = vec![Scalar::zero(); d];
            e[n] = Scalar::one();
            for (r, x) in self.act(z, &e).into_iter().enumerate() {
                m.set(r, n, x);
            }
        }
        m
    }
}

/// Twice the ∂-degree of `ω_H, ω_X, ω_Y`.
const FORM_GRADING: [i64; 3] = [0, -2, 2];

fn form_degree(k: usize, b: usize) -> i64 {
    match k {
        0 | 3 => 0,
        1 => FORM_GRADING[b],
        _ => {
            let (x, y) = WEDGE2_BASIS[b];
            FORM_GRADING[x] + FORM_GRADING[y]
        }
    }
}

/// The complex `V^λ ⊗ Λ^•` of a calculus.
pub struct Complex<'a> {
    model: &'a FodcModel,
    rep: SpinRep,
    actions: Vec<Matrix>,
}

impl<'a> Complex<'a> {
    pub fn new(model: &'a FodcModel, rep: SpinRep) -> Complex<'a> {
        let actions = model.basis().iter().map(|x| rep.matrix(x)).collect();
        Complex { model, rep, actions }
    }

    pub fn cochain_dim(&self, k: usize) -> usize {
        if k > 3 {
            0
        } else {
            self.rep.dim() * FORM_DIMS[k]
        }
    }

    /// Twice the ∂-degree of the basis cochain `e_n ⊗ ρ_b` of degree `k`.
    pub fn grading(&self, k: usize, idx: usize) -> i64 {
        let c = FORM_DIMS[k];
        self.rep.twice_nu(idx / c) + form_degree(k, idx % c)
    }

    /// Matrix of `d: V^λ⊗Λ^k → V^λ⊗Λ^{k+1}`.
    pub fn differential(&self, k: usize) -> Matrix {
        let dim = self.rep.dim();
        let (src, dst) = (self.cochain_dim(k), self.cochain_dim(k + 1));
        let mut d = Matrix::zeros(dst, src);
        if dst == 0 {
            return d;
        }
        let (cs, ct) = (FORM_DIMS[k], FORM_DIMS[k + 1]);
        let ext = &self.model.exterior;
        let add = |d: &mut Matrix, r: usize, c: usize, v: &Scalar| {
            if !v.is_zero() {
                let cur = d.get(r, c) + v;
                d.set(r, c, cur);
            }
        };
        for n in 0..dim {
            for b in 0..cs {
                let col = n * cs + b;
                // ω_r ∧ ρ_b on the Λ^{k+1} basis
                let wedge: Vec<Vec<Scalar>> = (0..3)
                    .map(|r| match k {
                        0 => (0..3)
                            .map(|t| if t == r { Scalar::one() } else { Scalar::zero() })
                            .collect(),
                        1 => ext.wedge2(r, b),
                        _ => {
                            let (x, y) = WEDGE2_BASIS[b];
                            vec![ext.wedge3(r, x, y)]
                        }
                    })
                    .collect();
                for (r, a) in self.actions.iter().enumerate() {
                    for m in 0..dim {
                        let x = a.get(m, n);
                        if x.is_zero() {
                            continue;
                        }
                        for (t, w) in wedge[r].iter().enumerate() {
                            add(&mut d, m * ct + t, col, &(x * w));
                        }
                    }
                }
                match k {
                    1 => {
                        for t in 0..3 {
                            add(&mut d, n * ct + t, col, &self.model.d_omega[b][t]);
                        }
                    }
                    2 => add(&mut d, n, col, &self.model.d_two[b]),
                    _ => {}
                }
            }
        }
        d
    }

    pub fn differentials(&self) -> [Matrix; 3] {
        [self.differential(0), self.differential(1), self.differential(2)]
    }
}

/// Ranks, `d²`, grading and cohomology of one complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub two_lambda: u32,
    pub dims: [usize; 4],
    pub d_squared_zero: bool,
    pub graded: bool,
    pub euler: i64,
}

impl CohomologyReport {
    pub fn expected_dims(&self) -> [usize; 4] {
        if self.two_lambda == 0 {
            [1, 0, 0, 1]
        } else {
            [0; 4]
        }
    }

    pub fn passed(&self) -> bool {
        self.d_squared_zero && self.graded && self.euler == 0 && self.dims == self.expected_dims()
    }
}

fn preserves_grading(c: &Complex, k: usize, d: &Matrix) -> bool {
    (0..d.rows).all(|r| {
        (0..d.cols).all(|col| d.get(r, col).is_zero() || c.grading(k + 1, r) == c.grading(k, col))
    })
}

pub fn cohomology(model: &FodcModel, rep: SpinRep) -> CohomologyReport {
    let c = Complex::new(model, rep);
    let d = c.differentials();
    let ranks: Vec<usize> = d.iter().map(Matrix::rank).collect();
    let mut dims = [0usize; 4];
    for k in 0..4 {
        let rank_out = if k < 3 { ranks[k] } else { 0 };
        let rank_in = if k > 0 { ranks[k - 1] } else { 0 };
        dims[k] = c.cochain_dim(k) - rank_out - rank_in;
    }
    let d_squared_zero = d[1].mul(&d[0]).is_zero() && d[2].mul(&d[1]).is_zero();
    let graded = (0..3).all(|k| preserves_grading(&c, k, &d[k]));
    let euler = dims
        .iter()
        .enumerate()
        .map(|(k, &h)| if k % 2 == 0 { h as i64 } else { -(h as i64) })
        .sum();
    CohomologyReport {
        two_lambda: rep.two_lambda,
        dims,
        d_squared_zero,
        graded,
        euler,
    }
}

pub fn cohomology_dims(model: &FodcModel, rep: SpinRep) -> [usize; 4] {
    cohomology(model, rep).dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coideal::closure;
    use crate::fodc::TangentSpace;
    use crate::parse::parse_u;

    fn e(rep: SpinRep, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); rep.dim()];
        v[n] = Scalar::one();
        v
    }

    #[test]
    fn ladder_actions() {
        let half = SpinRep::new(1);
        assert_eq!(half.act(&UElement::e(), &e(half, 0)), e(half, 1));
        assert_eq!(half.act(&UElement::e(), &e(half, 1)), vec![Scalar::zero(); 2]);
        let k = UElement::group(GroupLabel::K);
        let mut want = e(half, 0);
        want[0] = Scalar::s_pow(-1);
        assert_eq!(half.act(&k, &e(half, 0)), want);
    }

    #[test]
    fn action_is_multiplicative() {
        let rep = SpinRep::new(3);
        let words = ["E", "F", "G", "K", "F*E", "E*E*F", "G*F*K^-1"];
        for a in words {
            for b in words {
                let (x, y) = (parse_u(a).unwrap(), parse_u(b).unwrap());
                let lhs = rep.matrix(&x.mul(&y));
                assert_eq!(lhs, rep.matrix(&x).mul(&rep.matrix(&y)), "{a} * {b}");
            }
        }
    }

    #[test]
    fn calculus_ten_complex() {
        let g: Vec<UElement> = ["K^2", "F*K", "K*E"].iter().map(|s| parse_u(s).unwrap()).collect();
        let t = TangentSpace::from_coideal(&closure(&g).unwrap()).unwrap();
        let m = FodcModel::build(&t).unwrap();
        let c = Complex::new(&m, SpinRep::new(0));
        assert!(c.differential(0).is_zero());
        let d1 = c.differential(1);
        assert_eq!(d1.get(2, 0), &-Scalar::q());
        for tl in 0..4 {
            let r = cohomology(&m, SpinRep::new(tl));
            assert!(r.passed(), "{r:?}");
        }
    }
}
