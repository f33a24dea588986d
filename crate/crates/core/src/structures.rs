//! Hopf-automorphism invariance, *-invariance, braidings, and the bracket
//! `[X_i, X_j] = X_iX_j − σ^{ij}_{kl} X_kX_l` with its Jacobi identity.
//!
//! Matrices on `Λ⊗Λ` use the index `3i + j` for `ω_i⊗ω_j`; a braiding
//! matrix `S` has `S[(kl), (ij)] = σ^{kl}_{ij}`, so its columns are the
//! images `σ(ω_i⊗ω_j)`.

use crate::error::{Error, Result};
use crate::fodc::{FodcModel, TangentSpace};
use crate::linalg::{Decomposer, Matrix};
use crate::scalar::{RealForm, Scalar};
use crate::uq::{Mat2, UElement};

/// `𝒳` is spanned by ℤ-homogeneous elements (`deg F = 1`, `deg E = −1`).
pub fn hopf_invariant(t: &TangentSpace) -> bool {
    let span = t.span();
    t.basis()
        .iter()
        .all(|x| x.degree_parts().values().all(|p| span.contains(p)))
}

/// `Z* ∈ 𝒳` for every basis vector `Z`.
pub fn star_invariant(t: &TangentSpace, form: RealForm) -> bool {
    let span = t.span();
    t.basis().iter().all(|x| span.contains(&x.star(form)))
}

/// The real forms under which `t` is *-invariant.
pub fn real_forms(t: &TangentSpace) -> Vec<RealForm> {
    RealForm::ALL
        .into_iter()
        .filter(|&f| star_invariant(t, f))
        .collect()
}

/// `M_{rs}[(ij), (kl)] = ⟨f^i_k f^j_l, u^r_s⟩` for the four generators, in
/// the order `u¹₁, u¹₂, u²₁, u²₂`.
pub fn right_action_matrices(model: &FodcModel) -> Vec<Matrix> {
    let rho: Vec<Vec<Mat2>> = model
        .f_matrix
        .iter()
        .map(|row| row.iter().map(UElement::fundamental).collect())
        .collect();
    let mut out = Vec::new();
    for (r, s) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let mut m = Matrix::zeros(9, 9);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let v = (0..2).fold(Scalar::zero(), |acc, t| {
                            &acc + &(rho[i][k].get(r, t) * rho[j][l].get(t, s))
                        });
                        m.set(3 * i + j, 3 * k + l, v);
                    }
                }
            }
        }
        out.push(m);
    }
    out
}

fn sym2_vectors(model: &FodcModel) -> Vec<Vec<Scalar>> {
    model
        .sym2
        .rows()
        .map(|r| {
            let mut v = vec![Scalar::zero(); 9];
            for (&i, c) in r {
                v[i] = c.clone();
            }
            v
        })
        .collect()
}

/// A 9×9 braiding matrix on `Λ⊗Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    pub sigma: Matrix,
}

impl Braiding {
    pub fn identity() -> Braiding {
        Braiding {
            sigma: Matrix::identity(9),
        }
    }

    /// `σ = 1` on the symmetric 2-forms and `σ = λ` on `vectors`.
    pub fn from_eigendata(model: &FodcModel, lambda: &Scalar, vectors: &[Vec<Scalar>]) -> Result<Braiding> {
        let sym = sym2_vectors(model);
        if sym.len() + vectors.len() != 9 {
            return Err(Error::Dimension {
                expected: 9,
                found: sym.len() + vectors.len(),
            });
        }
        let mut p = Matrix::zeros(9, 9);
        let mut d = Matrix::zeros(9, 9);
        for (c, v) in sym.iter().chain(vectors).enumerate() {
            for (r, x) in v.iter().enumerate() {
                p.set(r, c, x.clone());
            }
            d.set(c, c, if c < sym.len() { Scalar::one() } else { lambda.clone() });
        }
        let inv = p.inverse()?;
        Ok(Braiding {
            sigma: p.mul(&d).mul(&inv),
        })
    }

    pub fn sigma12(&self) -> Matrix {
        self.sigma.kron(&Matrix::identity(3))
    }

    pub fn sigma23(&self) -> Matrix {
        Matrix::identity(3).kron(&self.sigma)
    }

    /// `(σ − 1)(σ − λ) = 0` with `σ ≠ 1` and `σ ≠ λ`.
    pub fn has_minimal_poly(&self, lambda: &Scalar) -> bool {
        let id = Matrix::identity(9);
        let a = self.sigma.sub(&id);
        let b = self.sigma.sub(&id.scale(lambda));
        a.mul(&b).is_zero() && !a.is_zero() && !b.is_zero()
    }
}

/// The four conditions on a braiding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidingReport {
    pub invertible: bool,
    pub bimodule: bool,
    pub fixes_sym2: bool,
    pub braid_relation: bool,
}

impl BraidingReport {
    pub fn passed(&self) -> bool {
        self.invertible && self.bimodule && self.fixes_sym2 && self.braid_relation
    }
}

pub fn verify_braiding(model: &FodcModel, b: &Braiding) -> BraidingReport {
    let s = &b.sigma;
    let invertible = s.inverse().is_ok();
    let bimodule = right_action_matrices(model).iter().all(|m| {
        let g = m.transpose();
        s.mul(&g) == g.mul(s)
    });
    let fixes_sym2 = sym2_vectors(model)
        .iter()
        .all(|v| s.mul_vec(v) == *v);
    let (a, c) = (b.sigma12(), b.sigma23());
    let braid_relation = a.mul(&c).mul(&a) == c.mul(&a).mul(&c);
    BraidingReport {
        invertible,
        bimodule,
        fixes_sym2,
        braid_relation,
    }
}

/// Result of [`solve_braiding`] within the ansatz `σ = 1 + μP` with `P` an
/// idempotent commuting with the right action and `ker P = sym2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidingSolution {
    /// No braiding of this form exists.
    None,
    /// A single admissible projector; the braid relation holds iff
    /// `κμ² + μ + 1 = 0`.
    Unique { projector: Matrix, kappa: Scalar },
    /// The admissible projectors form an affine family of this dimension.
    /// `solvable` is `Some(true)` when a generic member satisfies the braid
    /// relation, `None` when this was not decided.
    Family { dim: usize, solvable: Option<bool> },
}

impl BraidingSolution {
    /// Whether the second eigenvalue `λ = 1 + μ` is admissible.
    pub fn admits(&self, lambda: &Scalar) -> bool {
        match self {
            BraidingSolution::Unique { kappa, .. } => {
                let mu = lambda - &Scalar::one();
                (&(&(kappa * &mu) * &mu) + &(&mu + &Scalar::one())).is_zero()
            }
            _ => false,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, BraidingSolution::None)
    }
}

fn outer(col: &[Scalar], row: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(col.len(), row.len());
    for (r, a) in col.iter().enumerate() {
        for (c, b) in row.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() {
                m.set(r, c, a * b);
            }
        }
    }
    m
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).sub(&b.mul(a))
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows)
        .flat_map(|r| (0..m.cols).map(move |c| (r, c)))
        .map(|(r, c)| m.get(r, c).clone())
        .collect()
}

/// Polynomials in one variable over the scalar field, low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TPoly(Vec<Scalar>);

impl TPoly {
    fn trimmed(mut v: Vec<Scalar>) -> TPoly {
        while v.last().is_some_and(Scalar::is_zero) {
            v.pop();
        }
        TPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn mul(&self, o: &TPoly) -> TPoly {
        if self.is_zero() || o.is_zero() {
            return TPoly(Vec::new());
        }
        let mut v = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        TPoly::trimmed(v)
    }

    fn zip_with(&self, o: &TPoly, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> TPoly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        TPoly::trimmed(
            (0..n)
                .map(|i| f(self.0.get(i).unwrap_or(&z), o.0.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    fn add(&self, o: &TPoly) -> TPoly {
        self.zip_with(o, |a, b| a + b)
    }

    fn sub(&self, o: &TPoly) -> TPoly {
        self.zip_with(o, |a, b| a - b)
    }

    fn rem(&self, o: &TPoly) -> TPoly {
        let mut r = self.0.clone();
        let d = o.0.len() - 1;
        let lead = o.0[d].clone();
        while r.len() > d {
            let c = r.last().expect("nonempty") / &lead;
            let shift = r.len() - 1 - d;
            for (i, b) in o.0.iter().enumerate() {
                r[shift + i] = &r[shift + i] - &(&c * b);
            }
            r.pop();
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        TPoly::trimmed(r)
    }

    fn gcd(a: &TPoly, b: &TPoly) -> TPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Interpolates through `(t, v)` for `t = 0, 1, …`.
    fn interpolate(values: &[Scalar]) -> TPoly {
        let n = values.len();
        let mut acc = TPoly(Vec::new());
        for (k, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut basis = TPoly(vec![v.clone()]);
            for j in (0..n).filter(|&j| j != k) {
                let denom = Scalar::from_int(k as i64 - j as i64);
                let lin = TPoly(vec![&Scalar::from_int(-(j as i64)) / &denom, &Scalar::one() / &denom]);
                basis = basis.mul(&lin);
            }
            acc = acc.add(&basis);
        }
        acc
    }

    fn linear_root(&self) -> Option<Scalar> {
        (self.degree() == Some(1)).then(|| -(&self.0[0] / &self.0[1]))
    }
}

fn braid_terms(p: &Matrix) -> (Matrix, Matrix) {
    let pa = p.kron(&Matrix::identity(3));
    let pb = Matrix::identity(3).kron(p);
    let lhs = pa.mul(&pb).mul(&pa).sub(&pb.mul(&pa).mul(&pb));
    (lhs, pa.sub(&pb))
}

/// `κ ≠ 0` with `ABA − BAB = κ(A − B)`, if any.
fn braid_kappa(p: &Matrix) -> Option<Scalar> {
    let (lhs, diff) = braid_terms(p);
    let (r, c) = (0..27)
        .flat_map(|r| (0..27).map(move |c| (r, c)))
        .find(|&(r, c)| !diff.get(r, c).is_zero())?;
    let kappa = lhs.get(r, c) / diff.get(r, c);
    (!kappa.is_zero() && lhs == diff.scale(&kappa)).then_some(kappa)
}

fn point(p: Matrix) -> BraidingSolution {
    match braid_kappa(&p) {
        Some(kappa) => BraidingSolution::Unique { projector: p, kappa },
        None => BraidingSolution::None,
    }
}

/// The line `P(t) = P0 + tB`. The braid relation asks for `N(t) = κ D(t)`
/// with `D = A − B` affine and `N = ABA − BAB` cubic in `t`.
fn solve_line(p0: &Matrix, dir: &Matrix) -> BraidingSolution {
    let at = |t: i64| p0.add(&dir.scale(&Scalar::from_int(t)));
    let samples: Vec<(Matrix, Matrix)> = (0..4).map(|t| braid_terms(&at(t))).collect();
    let entry = |e: usize, deg: usize, pick: fn(&(Matrix, Matrix)) -> &Matrix| {
        let vals: Vec<Scalar> = samples[..=deg]
            .iter()
            .map(|s| pick(s).get(e / 27, e % 27).clone())
            .collect();
        TPoly::interpolate(&vals)
    };
    let n: Vec<TPoly> = (0..729).map(|e| entry(e, 3, |s| &s.0)).collect();
    let d: Vec<TPoly> = (0..729).map(|e| entry(e, 1, |s| &s.1)).collect();
    let Some(f) = (0..729)
        .filter(|&e| !d[e].is_zero())
        .min_by_key(|&e| d[e].degree())
    else {
        return BraidingSolution::None;
    };
    let g = (0..729)
        .map(|e| n[e].mul(&d[f]).sub(&n[f].mul(&d[e])))
        .fold(TPoly(Vec::new()), |g, r| TPoly::gcd(&g, &r));
    if g.is_zero() {
        return if n[f].is_zero() {
            BraidingSolution::None
        } else {
            BraidingSolution::Family { dim: 1, solvable: Some(true) }
        };
    }
    // Only roots of g, or the root of D_f, can carry a solution.
    let mut candidates = Vec::new();
    match g.degree() {
        Some(0) => {}
        Some(1) => candidates.extend(g.linear_root()),
        _ => return BraidingSolution::Family { dim: 1, solvable: None },
    }
    candidates.extend(d[f].linear_root());
    candidates
        .into_iter()
        .map(|t| point(p0.add(&dir.scale(&t))))
        .find(|s| !s.is_none())
        .unwrap_or(BraidingSolution::None)
}

pub fn solve_braiding(model: &FodcModel) -> Result<BraidingSolution> {
    let sym = sym2_vectors(model);
    let psi = Matrix::from_rows(sym.clone()).kernel();
    let n = psi.len();
    if n == 0 {
        return Ok(BraidingSolution::None);
    }
    let psi_m = Matrix::from_rows(psi.clone());
    // W0 with Ψ W0 = 1
    let mut w0 = Matrix::zeros(9, n);
    for a in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[a] = Scalar::one();
        let col = psi_m.solve(&e).ok_or(Error::Singular("annihilator of sym2"))?;
        for (r, x) in col.into_iter().enumerate() {
            w0.set(r, a, x);
        }
    }
    let p0 = w0.mul(&psi_m);
    let gens: Vec<Matrix> = right_action_matrices(model).iter().map(Matrix::transpose).collect();
    let basis: Vec<Matrix> = sym
        .iter()
        .flat_map(|y| psi.iter().map(move |p| outer(y, p)))
        .collect();
    // Σ φ_b [B_b, G] = −[P0, G] for every G
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for g in &gens {
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| flatten(&commutator(b, g))).collect();
        let target = flatten(&commutator(&p0, g));
        for (e, t) in target.into_iter().enumerate() {
            rows.push(cols.iter().map(|c| c[e].clone()).collect());
            rhs.push(-t);
        }
    }
    let a = Matrix::from_rows(rows);
    let Some(phi) = a.solve(&rhs) else {
        return Ok(BraidingSolution::None);
    };
    let combine = |start: Matrix, coeffs: &[Scalar]| {
        basis
            .iter()
            .zip(coeffs)
            .fold(start, |acc, (b, c)| acc.add(&b.scale(c)))
    };
    let p = combine(p0, &phi);
    let free = a.kernel();
    Ok(match free.len() {
        0 => point(p),
        1 => solve_line(&p, &combine(Matrix::zeros(9, 9), &free[0])),
        dim => BraidingSolution::Family { dim, solvable: None },
    })
}

/// Structure constants `c[i][j][k]` with `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    pub c: Vec<Vec<Vec<Scalar>>>,
}

/// Fails with [`Error::BracketNotClosed`] if some bracket leaves `span{H, X, Y}`.
pub fn lie_bracket(model: &FodcModel, b: &Braiding) -> Result<BracketTable> {
    let basis = model.basis();
    let dec = Decomposer::new(basis.iter().map(|x| x.terms()))?;
    let mut c = vec![vec![Vec::new(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut x = model.products[i][j].clone();
            for k in 0..3 {
                for l in 0..3 {
                    let s = b.sigma.get(3 * i + j, 3 * k + l);
                    if !s.is_zero() {
                        x = x.sub(&model.products[k][l].scale(s));
                    }
                }
            }
            c[i][j] = dec.coords(x.terms()).ok_or(Error::BracketNotClosed)?;
        }
    }
    Ok(BracketTable { c })
}

/// `(β∘(β⊗id) − β∘(id⊗β)) A₃ᵗ = 0` with
/// `A₃ᵗ = ((1 − σ₁₂)(1 − σ₂₃ + σ₂₃σ₁₂))ᵀ`.
pub fn jacobi_check(b: &Braiding, beta: &BracketTable) -> bool {
    let id = Matrix::identity(27);
    let (s12, s23) = (b.sigma12(), b.sigma23());
    let t = id.sub(&s12).mul(&id.sub(&s23).add(&s23.mul(&s12)));
    let c = &beta.c;
    (0..27).all(|row| {
        let mut out = vec![Scalar::zero(); 3];
        for col in 0..27 {
            let v = t.get(row, col);
            if v.is_zero() {
                continue;
            }
            let (r, s, u) = (col / 9, (col / 3) % 3, col % 3);
            for m in 0..3 {
                let left = &c[r][s][m];
                let right = &c[s][u][m];
                for n in 0..3 {
                    let x = &(left * &c[m][u][n]) - &(right * &c[r][m][n]);
                    if !x.is_zero() {
                        out[n] = &out[n] + &(v * &x);
                    }
                }
            }
        }
        out.iter().all(Scalar::is_zero)
    })
}

pub fn same_tangent(a: &TangentSpace, b: &TangentSpace) -> bool {
    a.span().same_as(&b.span())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coideal::closure;
    use crate::parse::parse_u;

    fn model(gens: &[&str]) -> FodcModel {
        let g: Vec<UElement> = gens.iter().map(|s| parse_u(s).unwrap()).collect();
        let t = TangentSpace::from_coideal(&closure(&g).unwrap()).unwrap();
        FodcModel::build(&t).unwrap()
    }

    fn antisym() -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let mut v = vec![Scalar::zero(); 9];
            v[3 * i + j] = Scalar::one();
            v[3 * j + i] = -Scalar::one();
            out.push(v);
        }
        out
    }

    #[test]
    fn calculus_ten_braiding() {
        let m = model(&["K^2", "F*K", "K*E"]);
        assert!(hopf_invariant(&m.tangent));
        assert_eq!(real_forms(&m.tangent).len(), 3);
        let lambda = -Scalar::q_pow(2);
        let b = Braiding::from_eigendata(&m, &lambda, &antisym()).unwrap();
        assert!(verify_braiding(&m, &b).passed());
        assert!(b.has_minimal_poly(&lambda));
        assert!(verify_braiding(&m, &Braiding::identity()).passed());
        let beta = lie_bracket(&m, &b).unwrap();
        assert!(beta.c[0][0].iter().all(Scalar::is_zero));
        assert!(jacobi_check(&b, &beta));
        let id = lie_bracket(&m, &Braiding::identity()).unwrap();
        assert!(jacobi_check(&Braiding::identity(), &id));
    }

    #[test]
    fn graded_and_non_graded() {
        let t = |gens: &[&str]| {
            let g: Vec<UElement> = gens.iter().map(|s| parse_u(s).unwrap()).collect();
            TangentSpace::from_coideal(&closure(&g).unwrap()).unwrap()
        };
        assert!(hopf_invariant(&t(&["G"])));
        assert!(!hopf_invariant(&t(&["F+K", "F*K-(q-q^-1)^2*K*E+(1+q)*K^2", "Kinv"])));
    }
}
