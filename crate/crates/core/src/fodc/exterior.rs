//! Quotients `Λ^k = Λ^{⊗k} / (ideal generated by the symmetric 2-forms)` in
//! degrees 2, 3 and 4 for a 3-dimensional calculus.

use crate::error::{Error, Result};
use crate::linalg::{Decomposer, Echelon, SparseVec};
use crate::scalar::Scalar;

/// Representatives `ω_H∧ω_X, ω_H∧ω_Y, ω_X∧ω_Y` of the Λ² basis.
pub const WEDGE2_BASIS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Coordinates in a quotient `V / W` on a chosen set of representatives.
#[derive(Clone, Debug)]
struct Quotient {
    dec: Decomposer<usize>,
    skip: usize,
}

impl Quotient {
    fn new(rel: &Echelon<usize>, reps: &[usize]) -> Result<Quotient> {
        let mut vecs: Vec<SparseVec<usize>> = rel.rows().cloned().collect();
        let skip = vecs.len();
        vecs.extend(reps.iter().map(|&r| SparseVec::from([(r, Scalar::one())])));
        let dec = Decomposer::new(vecs.iter())
            .map_err(|_| Error::Singular("representatives dependent modulo relations"))?;
        Ok(Quotient { dec, skip })
    }

    fn coords(&self, v: &SparseVec<usize>) -> Result<Vec<Scalar>> {
        let c = self
            .dec
            .coords(v)
            .ok_or(Error::Singular("representatives do not span the quotient"))?;
        Ok(c[self.skip..].to_vec())
    }
}

/// Products of `ideal` in tensor positions: `V^{⊗a} ⊗ sym2 ⊗ V^{⊗b}` with
/// `a + b + 2 = k`.
fn ideal_degree(sym2: &Echelon<usize>, k: u32) -> Echelon<usize> {
    let mut out = Echelon::new();
    for a in 0..=(k - 2) {
        let b = k - 2 - a;
        let left = 3usize.pow(a);
        let right = 3usize.pow(b);
        for row in sym2.rows() {
            for l in 0..left {
                for r in 0..right {
                    let v: SparseVec<usize> = row
                        .iter()
                        .map(|(&idx, c)| ((l * 9 + idx) * right + r, c.clone()))
                        .collect();
                    out.insert(&v);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Exterior {
    two: Quotient,
    three: Quotient,
    dims: [usize; 5],
}

impl Exterior {
    /// Fails unless the quotient dimensions are `(1, 3, 3, 1, 0)` in degrees
    /// 0 through 4.
    pub fn new(sym2: &Echelon<usize>) -> Result<Exterior> {
        let rel3 = ideal_degree(sym2, 3);
        let rel4 = ideal_degree(sym2, 4);
        let dims = [1, 3, 9 - sym2.dim(), 27 - rel3.dim(), 81 - rel4.dim()];
        if dims != [1, 3, 3, 1, 0] {
            return Err(Error::ExteriorDims(dims));
        }
        let two = Quotient::new(sym2, &WEDGE2_BASIS.map(|(i, j)| 3 * i + j))?;
        let three = Quotient::new(&rel3, &[5])?;
        Ok(Exterior { two, three, dims })
    }

    /// Dimensions of Λ⁰ … Λ⁴.
    pub fn dims(&self) -> [usize; 5] {
        self.dims
    }

    /// Coordinates of a 2-tensor in Λ².
    pub fn wedge2_vec(&self, v: &SparseVec<usize>) -> Vec<Scalar> {
        self.two.coords(v).expect("Λ² representatives span")
    }

    pub fn wedge2(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.wedge2_vec(&SparseVec::from([(3 * i + j, Scalar::one())]))
    }

    /// Coordinate of a 3-tensor on `ω_H∧ω_X∧ω_Y`.
    pub fn wedge3_vec(&self, v: &SparseVec<usize>) -> Scalar {
        self.three.coords(v).expect("Λ³ representative spans")[0].clone()
    }

    pub fn wedge3(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.wedge3_vec(&SparseVec::from([(9 * i + 3 * j + k, Scalar::one())]))
    }

    /// `d(ω_p⊗ω_q) = dω_p∧ω_q − ω_p∧dω_q` in Λ³, given `dω` on [`WEDGE2_BASIS`].
    pub fn d_of_pair(&self, d_omega: &[Vec<Scalar>], p: usize, q: usize) -> Scalar {
        let mut v = SparseVec::new();
        let mut add = |idx: usize, c: &Scalar| {
            let e = v.entry(idx).or_insert_with(Scalar::zero);
            *e = &*e + c;
        };
        for (b, &(x, y)) in WEDGE2_BASIS.iter().enumerate() {
            add(9 * x + 3 * y + q, &d_omega[p][b]);
            add(9 * p + 3 * x + y, &-&d_omega[q][b]);
        }
        v.retain(|_, c| !c.is_zero());
        self.wedge3_vec(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical() -> Echelon<usize> {
        let mut e = Echelon::new();
        for i in 0..3 {
            for j in i..3 {
                let mut v = SparseVec::new();
                v.insert(3 * i + j, Scalar::one());
                let w = v.entry(3 * j + i).or_insert_with(Scalar::zero);
                *w = &*w + &Scalar::one();
                e.insert(&v);
            }
        }
        e
    }

    #[test]
    fn grassmann_algebra() {
        let ext = Exterior::new(&classical()).unwrap();
        assert_eq!(ext.dims(), [1, 3, 3, 1, 0]);
        let m1 = -Scalar::one();
        assert_eq!(ext.wedge2(1, 0), vec![m1.clone(), Scalar::zero(), Scalar::zero()]);
        assert_eq!(ext.wedge2(2, 2), vec![Scalar::zero(); 3]);
        assert_eq!(ext.wedge3(2, 1, 0), m1);
        assert_eq!(ext.wedge3(1, 2, 0), Scalar::one());
    }

    #[test]
    fn wrong_dimension_rejected() {
        assert!(Exterior::new(&Echelon::new()).is_err());
    }
}
