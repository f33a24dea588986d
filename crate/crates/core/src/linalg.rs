//! Exact linear algebra over [`Scalar`]: sparse echelon forms and dense matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `v += c·w`.
pub fn axpy<K: Ord + Copy>(v: &mut SparseVec<K>, c: &Scalar, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let add = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y = &*y + &add;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !add.is_zero() {
                    v.insert(*k, add);
                }
            }
        }
    }
}

/// Reduced row echelon form of a set of sparse vectors. The pivot of each
/// row is its smallest key and carries coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Copy> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Copy> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Copy> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` with respect to the rows, keyed by pivot; `None`
    /// when `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<BTreeMap<K, Scalar>> {
        let mut coords = BTreeMap::new();
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-&c, row);
                coords.insert(*p, c);
            }
        }
        v.is_empty().then_some(coords)
    }

    /// Insert `v`; returns false when it already lies in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, c)) = r.iter().next() else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        for x in r.values_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &r);
            }
        }
        r.insert(p, Scalar::one());
        self.rows.insert(p, r);
        true
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> Self
    where
        K: 'a,
    {
        let mut e = Echelon::new();
        for v in vs {
            e.insert(v);
        }
        e
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Tagged<K> {
    Key(K),
    Tag(usize),
}

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct Decomposer<K: Ord + Copy> {
    ech: Echelon<Tagged<K>>,
    n: usize,
}

impl<K: Ord + Copy> Decomposer<K> {
    /// Fails when the vectors are linearly dependent.
    pub fn new<'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> Result<Self>
    where
        K: 'a,
    {
        let mut ech = Echelon::new();
        let mut n = 0;
        for v in vs {
            let mut w: SparseVec<Tagged<K>> = v.iter().map(|(k, c)| (Tagged::Key(*k), c.clone())).collect();
            w.insert(Tagged::Tag(n), Scalar::one());
            ech.insert(&w);
            if ech.rows().last().is_some_and(|r| matches!(r.keys().next(), Some(Tagged::Tag(_)))) {
                return Err(Error::Singular("dependent vectors"));
            }
            n += 1;
        }
        Ok(Decomposer { ech, n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `c` with `v = Σ c_i v_i`, or `None` outside the span.
    pub fn coords(&self, v: &SparseVec<K>) -> Option<Vec<Scalar>> {
        let w: SparseVec<Tagged<K>> = v.iter().map(|(k, c)| (Tagged::Key(*k), c.clone())).collect();
        let r = self.ech.reduce(&w);
        let mut out = vec![Scalar::zero(); self.n];
        for (k, c) in r {
            match k {
                Tagged::Key(_) => return None,
                Tagged::Tag(i) => out[i] = -c,
            }
        }
        Some(out)
    }
}

/// Dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Matrix {
        let rows = data.len();
        let cols = data.first().map(|r| r.len()).unwrap_or(0);
        Matrix { rows, cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o.data[k][c];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[r][c] = &out.data[r][c] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.data[r].iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r][c] = &self.data[r][c] + &o.data[r][c];
            }
        }
        out
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for row in out.data.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * s;
            }
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self.data[r1][c1];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..o.rows {
                    for c2 in 0..o.cols {
                        let b = &o.data[r2][c2];
                        if !b.is_zero() {
                            out.data[r1 * o.rows + r2][c1 * o.cols + c2] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns. Among the candidate rows
    /// for a pivot, the entry of least weight is chosen.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let best = (row..m.rows)
                .filter(|&r| !m.data[r][col].is_zero())
                .min_by_key(|&r| m.data[r][col].weight());
            let Some(p) = best else { continue };
            m.data.swap(row, p);
            let inv = m.data[row][col].inv().expect("nonzero pivot");
            for x in m.data[row].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let prow = m.data[row].clone();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.data[r][col].clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    if !prow[c].is_zero() {
                        m.data[r][c] = &m.data[r][c] - &(&f * &prow[c]);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&r.data[i][free];
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Singular("non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][n + r] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular("matrix not invertible"));
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r][c] = red.data[r][n + c].clone();
            }
        }
        Ok(inv)
    }

    /// One solution of `Mx = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][self.cols] = b[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.data[i][self.cols].clone();
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_over_function_field() {
        let q = Scalar::q();
        let a = Matrix::from_rows(vec![
            vec![q.clone(), Scalar::one()],
            vec![Scalar::one(), Scalar::q_pow(-1)],
        ]);
        assert!(a.inverse().is_err());
        let b = Matrix::from_rows(vec![
            vec![q.clone(), Scalar::one()],
            vec![Scalar::zero(), Scalar::q_pow(-1)],
        ]);
        let bi = b.inverse().unwrap();
        assert_eq!(b.mul(&bi), Matrix::identity(2));
    }

    #[test]
    fn echelon_membership() {
        let mut e: Echelon<u32> = Echelon::new();
        let v1: SparseVec<u32> = [(0, Scalar::one()), (1, Scalar::q())].into();
        let v2: SparseVec<u32> = [(1, Scalar::one()), (2, Scalar::one())].into();
        assert!(e.insert(&v1));
        assert!(e.insert(&v2));
        let mut w = v1.clone();
        axpy(&mut w, &Scalar::from_int(3), &v2);
        assert!(e.contains(&w));
        assert!(!e.insert(&w));
        let c = e.coordinates(&w).unwrap();
        assert_eq!(c[&0], Scalar::one());
    }
}
