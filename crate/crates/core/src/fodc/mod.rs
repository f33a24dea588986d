//! First order differential calculi from unital right coideals.
//!
//! A tangent space `𝒳` with basis `X₁..X_n` determines `dω(a)`, the module
//! structure `ω_i a = a₍₁₎ f^i_j(a₍₂₎) ω_j`, the right ideal `R` and the
//! left-invariant symmetric 2-forms.

pub mod exterior;

pub use exterior::{Exterior, WEDGE2_BASIS};

use crate::coideal::{is_right_coideal, is_unital, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{Decomposer, Echelon, Matrix, SparseVec};
use crate::oq::{OElement, OMonomial, Pairing};
use crate::scalar::Scalar;
use crate::uq::{UElement, UMonomial};

/// Names of the normalized basis.
pub const BASIS_NAMES: [&str; 3] = ["H", "X", "Y"];

/// Column labels of the quadratic pairing table.
pub const QUADRATIC_NAMES: [&str; 9] = [
    "u11^2", "u11*u12", "u11*u21", "u12^2", "u12*u21", "u12*u22", "u21^2", "u21*u22", "u22^2",
];

const QUADRATIC_WORDS: [[usize; 2]; 9] = [
    [0, 0],
    [0, 1],
    [0, 2],
    [1, 1],
    [1, 2],
    [1, 3],
    [2, 2],
    [2, 3],
    [3, 3],
];

/// The quadratic elements heading the pairing table.
pub fn quadratic_elements() -> Vec<OElement> {
    QUADRATIC_WORDS.iter().map(|w| OElement::from_word(w)).collect()
}

/// `(u¹₁−u²₂)/2, u¹₂, u²₁`, dual to `H, X, Y`.
pub fn dual_targets() -> [OElement; 3] {
    let half = Scalar::from_ratio(1, 2);
    [
        OElement::u(0, 0).sub(&OElement::u(1, 1)).scale(&half),
        OElement::u(0, 1),
        OElement::u(1, 0),
    ]
}

/// Quantum tangent space: a basis of `𝒳 = 𝒳̄ ∩ ker ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentSpace {
    basis: Vec<UElement>,
}

impl TangentSpace {
    /// Checks `ε(X_i) = 0` and linear independence. Does not check the
    /// coideal property; see [`TangentSpace::from_coideal`].
    pub fn new(basis: Vec<UElement>) -> Result<TangentSpace> {
        if basis.iter().any(|x| !x.counit().is_zero()) {
            return Err(Error::Schema("tangent vector with nonzero counit".into()));
        }
        if Subspace::span(&basis).dim() != basis.len() {
            return Err(Error::Singular("dependent tangent vectors"));
        }
        Ok(TangentSpace { basis })
    }

    pub fn from_coideal(v: &Subspace) -> Result<TangentSpace> {
        if !is_unital(v) {
            return Err(Error::NotUnital);
        }
        if !is_right_coideal(v) {
            return Err(Error::NotCoideal);
        }
        let mut plus = Subspace::new();
        for b in v.basis() {
            let c = b.counit();
            plus.insert(&b.sub(&UElement::scalar(c)));
        }
        Ok(TangentSpace {
            basis: plus.basis(),
        })
    }

    pub fn basis(&self) -> &[UElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `[1, X₁, …, X_n]`.
    pub fn unital_basis(&self) -> Vec<UElement> {
        std::iter::once(UElement::one())
            .chain(self.basis.iter().cloned())
            .collect()
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(&self.basis)
    }

    pub fn unital_span(&self) -> Subspace {
        Subspace::span(&self.unital_basis())
    }
}

/// Rank of `[⟨Z, u^r_s⟩]` over `Z ∈ 𝒳̄` equals 4.
pub fn li_check(t: &TangentSpace) -> bool {
    let rows: Vec<Vec<Scalar>> = t
        .unital_basis()
        .iter()
        .map(|z| {
            let m = z.fundamental();
            vec![
                m.get(0, 0).clone(),
                m.get(0, 1).clone(),
                m.get(1, 0).clone(),
                m.get(1, 1).clone(),
            ]
        })
        .collect();
    Matrix::from_rows(rows).rank() == 4
}

/// Rebase a 3-dimensional tangent space to the basis `H, X, Y` dual to
/// [`dual_targets`].
pub fn normalize_basis(t: &TangentSpace) -> Result<TangentSpace> {
    if t.dim() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            found: t.dim(),
        });
    }
    let targets = dual_targets();
    let mut pairing = Pairing::new();
    let p = Matrix::from_rows(
        t.basis
            .iter()
            .map(|x| targets.iter().map(|a| pairing.pair(x, a)).collect())
            .collect(),
    );
    let c = p.inverse().map_err(|_| Error::Singular("pairing with u is degenerate"))?;
    let basis = (0..3)
        .map(|b| {
            (0..3).fold(UElement::zero(), |acc, i| {
                acc.add(&t.basis[i].scale(c.get(b, i)))
            })
        })
        .collect();
    Ok(TangentSpace { basis })
}

fn as_vec(x: &UElement) -> SparseVec<UMonomial> {
    x.terms().clone()
}

/// `f[i][j] = f^i_j` with `ΔX_j = 1⊗X_j + Σ_i X_i⊗f^i_j`.
pub fn f_matrix(t: &TangentSpace) -> Result<Vec<Vec<UElement>>> {
    let n = t.dim();
    let unital = t.unital_basis();
    let dec = Decomposer::new(unital.iter().map(|x| x.terms()))?;
    let mut f = vec![vec![UElement::zero(); n]; n];
    for (j, xj) in t.basis.iter().enumerate() {
        let mut rest = xj.coproduct();
        rest = rest.add(&crate::uq::Tensor2::pure(&UElement::one(), &xj.neg()));
        for (right, left) in rest.right_collected() {
            let c = dec.coords(&as_vec(&left)).ok_or(Error::Decomposition)?;
            if !c[0].is_zero() {
                return Err(Error::Decomposition);
            }
            for i in 0..n {
                f[i][j].add_term(right, c[i + 1].clone());
            }
        }
    }
    Ok(f)
}

/// Products `Z_a Z_b` over the unital basis.
fn unital_products(t: &TangentSpace) -> Vec<UElement> {
    let u = t.unital_basis();
    let mut out = Vec::with_capacity(u.len() * u.len());
    for a in &u {
        for b in &u {
            out.push(a.mul(b));
        }
    }
    out
}

/// `dim{T ∈ 𝒳̄⊗𝒳̄ | mT = 0} − dim 𝒳`, the dimension of left-invariant
/// 2-forms of the universal calculus.
pub fn universal_two_form_dim(t: &TangentSpace) -> usize {
    let prods = unital_products(t);
    let rank = Subspace::span(&prods).dim();
    (prods.len() - rank).saturating_sub(t.dim())
}

/// Rows `⟨Z, a⟩` for `Z` in the tangent basis over the quadratic elements.
pub fn pairing_table(t: &TangentSpace, pairing: &mut Pairing) -> Vec<Vec<Scalar>> {
    let quad = quadratic_elements();
    t.basis
        .iter()
        .map(|x| quad.iter().map(|a| pairing.pair(x, a)).collect())
        .collect()
}

/// Evaluation matrix of `𝒳̄` on the normal monomials of degree ≤ `degree`.
fn evaluation(t: &TangentSpace, degree: u32, pairing: &mut Pairing) -> (Vec<OMonomial>, Matrix) {
    let monos = OMonomial::up_to_degree(degree);
    let rows = t
        .unital_basis()
        .iter()
        .map(|z| {
            monos
                .iter()
                .map(|m| pairing.pair(z, &OElement::monomial(*m)))
                .collect()
        })
        .collect();
    (monos, Matrix::from_rows(rows))
}

/// Basis of `R ∩ O_{≤degree}`, the annihilator of `𝒳̄`.
pub fn annihilator(t: &TangentSpace, degree: u32, pairing: &mut Pairing) -> Vec<OElement> {
    let (monos, m) = evaluation(t, degree, pairing);
    m.kernel()
        .into_iter()
        .map(|v| {
            let mut x = OElement::zero();
            for (mono, c) in monos.iter().zip(v) {
                x.add_term(*mono, c);
            }
            x
        })
        .collect()
}

/// Outcome of [`right_ideal_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightIdealReport {
    /// Every listed generator is killed by `𝒳̄`.
    pub annihilated: bool,
    /// Rank of the evaluation matrix on `O_{≤degree}`.
    pub rank: usize,
    pub annihilator_dim: usize,
    /// Dimension of the span of `g·m` with `deg(g·m) ≤ degree`.
    pub generated_dim: usize,
    pub degree: u32,
}

impl RightIdealReport {
    pub fn complete(&self) -> bool {
        self.annihilator_dim == self.generated_dim
    }

    pub fn passed(&self) -> bool {
        self.annihilated && self.complete() && self.rank == 4
    }
}

fn o_vec(x: &OElement) -> SparseVec<OMonomial> {
    x.terms().clone()
}

/// `R ∩ O_{≤degree}` as an echelon basis.
pub fn right_ideal_space(t: &TangentSpace, degree: u32, pairing: &mut Pairing) -> Echelon<OMonomial> {
    let ann = annihilator(t, degree, pairing);
    Echelon::from_vectors(ann.iter().map(o_vec).collect::<Vec<_>>().iter())
}

/// Span of `g·m` over listed `g` and monomials `m` with `deg(g·m) ≤ degree`.
pub fn generated_space(gens: &[OElement], degree: u32) -> Echelon<OMonomial> {
    let mut out = Echelon::new();
    for g in gens {
        let dg = g.degree();
        if dg > degree {
            continue;
        }
        for mono in OMonomial::up_to_degree(degree - dg) {
            out.insert(&o_vec(&g.mul(&OElement::monomial(mono))));
        }
    }
    out
}

/// Whether two echelon bases span the same space.
pub fn same_space(a: &Echelon<OMonomial>, b: &Echelon<OMonomial>) -> bool {
    a.dim() == b.dim() && a.rows().all(|r| b.contains(r))
}

pub fn right_ideal_check(
    t: &TangentSpace,
    gens: &[OElement],
    degree: u32,
    pairing: &mut Pairing,
) -> RightIdealReport {
    let unital = t.unital_basis();
    let annihilated = gens
        .iter()
        .all(|g| unital.iter().all(|z| pairing.pair(z, g).is_zero()));
    let (_, m) = evaluation(t, degree, pairing);
    let rank = m.rank();
    let ann_space = right_ideal_space(t, degree, pairing);
    let generated = generated_space(gens, degree);
    let contained = generated.rows().all(|r| ann_space.contains(r));
    RightIdealReport {
        annihilated,
        rank,
        annihilator_dim: ann_space.dim(),
        generated_dim: if contained { generated.dim() } else { usize::MAX },
        degree,
    }
}

/// Index of `ω_i⊗ω_j` in the 9-dimensional coordinate space.
pub fn pair_index(i: usize, j: usize) -> usize {
    3 * i + j
}

/// Span of `ω(a₍₁₎)⊗ω(a₍₂₎) = Σ ⟨X_iX_j, a⟩ ω_i⊗ω_j` over `a ∈ R ∩ O_{≤degree}`.
pub fn symmetric_two_forms(
    t: &TangentSpace,
    products: &[Vec<UElement>],
    degree: u32,
    pairing: &mut Pairing,
) -> Echelon<usize> {
    let n = t.dim();
    let mut out = Echelon::new();
    for a in annihilator(t, degree, pairing) {
        let mut v = SparseVec::new();
        for i in 0..n {
            for j in 0..n {
                let c = pairing.pair(&products[i][j], &a);
                if !c.is_zero() {
                    v.insert(i * n + j, c);
                }
            }
        }
        out.insert(&v);
    }
    out
}

/// All structure derived from a normalized 3-dimensional tangent space.
#[derive(Clone, Debug)]
pub struct FodcModel {
    pub tangent: TangentSpace,
    pub f_matrix: Vec<Vec<UElement>>,
    /// `products[i][j] = X_i X_j`.
    pub products: Vec<Vec<UElement>>,
    pub sym2: Echelon<usize>,
    pub exterior: Exterior,
    /// `d_omega[c]`: coordinates of `dω_c` on [`WEDGE2_BASIS`].
    pub d_omega: Vec<Vec<Scalar>>,
    /// `d(ω_p∧ω_q)` on the Λ³ generator, for `(p, q)` in [`WEDGE2_BASIS`].
    pub d_two: Vec<Scalar>,
}

/// Default filtration degree for the symmetric 2-forms.
pub const SYM2_DEGREE: u32 = 3;

impl FodcModel {
    pub fn build(t: &TangentSpace) -> Result<FodcModel> {
        Self::build_with(t, SYM2_DEGREE)
    }

    pub fn build_with(t: &TangentSpace, degree: u32) -> Result<FodcModel> {
        let tangent = normalize_basis(t)?;
        let f_matrix = f_matrix(&tangent)?;
        let b = tangent.basis();
        let products: Vec<Vec<UElement>> =
            b.iter().map(|x| b.iter().map(|y| x.mul(y)).collect()).collect();
        let mut pairing = Pairing::new();
        let sym2 = symmetric_two_forms(&tangent, &products, degree, &mut pairing);
        let exterior = Exterior::new(&sym2)?;
        let targets = dual_targets();
        let d_omega = targets
            .iter()
            .map(|a| {
                let mut v = SparseVec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        let c = -pairing.pair(&products[i][j], a);
                        if !c.is_zero() {
                            v.insert(pair_index(i, j), c);
                        }
                    }
                }
                exterior.wedge2_vec(&v)
            })
            .collect::<Vec<_>>();
        let d_two = WEDGE2_BASIS
            .iter()
            .map(|&(p, q)| exterior.d_of_pair(&d_omega, p, q))
            .collect();
        Ok(FodcModel {
            tangent,
            f_matrix,
            products,
            sym2,
            exterior,
            d_omega,
            d_two,
        })
    }

    pub fn basis(&self) -> &[UElement] {
        self.tangent.basis()
    }

    /// `d(dω_c) = 0` in Λ³ for every `c`.
    pub fn d_squared_vanishes(&self) -> bool {
        self.d_omega.iter().all(|dw| {
            dw.iter()
                .zip(&self.d_two)
                .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
                .is_zero()
        })
    }

    /// `d` is well defined on Λ²: it kills every symmetric 2-form.
    pub fn d_respects_sym2(&self) -> bool {
        self.sym2.rows().all(|row| {
            row.iter()
                .fold(Scalar::zero(), |acc, (&idx, c)| {
                    &acc + &(c * &self.exterior.d_of_pair(&self.d_omega, idx / 3, idx % 3))
                })
                .is_zero()
        })
    }

    /// Each `lhs - rhs` of a relation vanishes in U.
    pub fn verify_relations(&self, relations: &[UElement]) -> bool {
        relations.iter().all(UElement::is_zero)
    }

    pub fn verify_fundamental(&self, expected: &[crate::uq::Mat2]) -> bool {
        expected.len() == 3
            && self
                .basis()
                .iter()
                .zip(expected)
                .all(|(x, m)| &x.fundamental() == m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coideal::closure;
    use crate::parse::parse_u;
    use crate::uq::Mat2;

    fn calc10() -> TangentSpace {
        let v = closure(&[parse_u("K^2").unwrap(), parse_u("F*K").unwrap(), parse_u("K*E").unwrap()])
            .unwrap();
        TangentSpace::from_coideal(&v).unwrap()
    }

    #[test]
    fn tangent_of_primitive() {
        let v = closure(&[UElement::g()]).unwrap();
        let t = TangentSpace::from_coideal(&v).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(f_matrix(&t).unwrap(), vec![vec![UElement::one()]]);
        let one = closure(&[UElement::one()]).unwrap();
        assert_eq!(TangentSpace::from_coideal(&one).unwrap().dim(), 0);
    }

    #[test]
    fn calculus_ten() {
        let t = calc10();
        assert!(li_check(&t));
        let n = normalize_basis(&t).unwrap();
        let h = parse_u("2/(q^-1-q)*(K^2-1)").unwrap();
        let x = parse_u("q^(-1/2)*F*K").unwrap();
        let y = parse_u("q^(-1/2)*K*E").unwrap();
        assert_eq!(n.basis(), &[h.clone(), x, y]);
        assert_eq!(normalize_basis(&n).unwrap(), n);
        let f = f_matrix(&n).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { UElement::k_pow(2) } else { UElement::zero() };
                assert_eq!(f[i][j], want);
            }
        }
        assert_eq!(universal_two_form_dim(&n), 3);
        let q = Scalar::q();
        let two_over = Scalar::from_int(2) / (&q + &Scalar::one());
        assert_eq!(h.fundamental(), Mat2::diag(two_over.clone(), -(&two_over * &q)));
    }

    #[test]
    fn calculus_ten_model() {
        let m = FodcModel::build(&calc10()).unwrap();
        assert_eq!(m.sym2.dim(), 6);
        assert_eq!(m.exterior.dims(), [1, 3, 3, 1, 0]);
        // dω_H = −q ω_X∧ω_Y
        assert_eq!(m.d_omega[0], vec![Scalar::zero(), Scalar::zero(), -Scalar::q()]);
        assert!(m.d_squared_vanishes());
        assert!(m.d_respects_sym2());
        let mut p = Pairing::new();
        let gens: Vec<OElement> = ["u11+q^-1*u22-(1+q^-1)", "u12^2", "u21^2", "u12*u21", "(u11-1)*u12", "(u11-1)*u21"]
            .iter()
            .map(|s| crate::parse::parse_o(s).unwrap())
            .collect();
        let r = right_ideal_check(&m.tangent, &gens, 2, &mut p);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.annihilator_dim, 10);
        let mut bad = gens.clone();
        bad[1] = bad[1].add(&OElement::u(0, 1));
        assert!(!right_ideal_check(&m.tangent, &bad, 2, &mut p).annihilated);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let v = closure(&[UElement::g()]).unwrap();
        let t = TangentSpace::from_coideal(&v).unwrap();
        assert!(normalize_basis(&t).is_err());
        let e = Subspace::span([&UElement::e(), &UElement::one()]);
        assert!(TangentSpace::from_coideal(&e).is_err());
    }
}
