//! Dense exact linear algebra over the rationals.
//!
//! Linear maps are stored column-major in meaning: column `j` of a matrix is
//! the image of the `j`-th basis vector of the domain. Tensor products of
//! spaces use the left-major lexicographic basis order everywhere, so the
//! basis vector `e_i ⊗ f_j` of `V ⊗ W` has index `i * dim W + j`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`, skipping the work when `s` is zero.
pub fn vec_axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

/// Kronecker product of coefficient vectors, left factor index major.
pub fn vec_kron(a: &[Rational], b: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&x| Rational::from(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_scale(&self.data, s),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &other.data),
        })
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                vec_axpy(dst, a, orow);
            }
        }
        Ok(out)
    }

    /// Product of compatible matrices; panics on a shape mismatch. Used where
    /// the shapes are fixed by construction.
    pub fn dot(&self, other: &Matrix) -> Matrix {
        self.mul(other).expect("matrix shapes fixed by construction")
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = zero_vec(self.rows);
        for (i, o) in out.iter_mut().enumerate() {
            let row = self.row(i);
            for (a, x) in row.iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a vector of fixed-by-construction length.
    pub fn act(&self, v: &[Rational]) -> Vector {
        self.apply(v).expect("vector length fixed by construction")
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row: det(A) = det(D A) / prod(d_i).
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            a.push(
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
        }
        let det = bareiss_det(a);
        Ok(Rational::new(det, scale))
    }

    /// Decides invertibility exactly. A nonzero determinant modulo a large
    /// prime proves a nonzero rational determinant; otherwise falls back to
    /// the exact determinant.
    pub fn is_invertible(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::Dimension("invertibility of a non-square matrix".into()));
        }
        if let Some(true) = full_rank_mod_p(self) {
            return Ok(true);
        }
        Ok(!self.det()?.is_zero())
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = rref(self.clone());
        pivots.len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = Rational::one();
        }
        let (r, pivots) = rref(aug);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Ok(inv)
    }

    /// Basis of `{x : A x = 0}`, normalized so each vector's first nonzero
    /// entry is 1.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = rref(self.clone());
        kernel_from_rref(&r, &pivots, self.cols)
    }
}

/// Kronecker product with left factor index major.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.data[(i * b.rows + k) * cols + j * b.cols + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

const MOD_P: u64 = 9_223_372_036_854_775_783; // largest prime below 2^63

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn reduce_mod_p(x: &BigInt) -> u64 {
    let p = BigInt::from(MOD_P);
    x.mod_floor(&p).to_u64().expect("reduced below p")
}

/// `Some(true)` if the matrix has full rank modulo the prime; `None` when the
/// reduction is rank deficient or some denominator vanishes modulo the prime.
fn full_rank_mod_p(m: &Matrix) -> Option<bool> {
    let n = m.rows;
    let mut a = vec![0u64; n * n];
    for (slot, x) in a.iter_mut().zip(&m.data) {
        let d = reduce_mod_p(x.denom());
        if d == 0 {
            return None;
        }
        *slot = mulmod(reduce_mod_p(x.numer()), powmod(d, MOD_P - 2));
    }
    for k in 0..n {
        let piv = (k..n).find(|&r| a[r * n + k] != 0)?;
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
        }
        let inv = powmod(a[k * n + k], MOD_P - 2);
        for i in k + 1..n {
            let f = mulmod(a[i * n + k], inv);
            if f == 0 {
                continue;
            }
            for j in k..n {
                let sub = mulmod(f, a[k * n + j]);
                a[i * n + j] = (a[i * n + j] + MOD_P - sub) % MOD_P;
            }
        }
    }
    Some(true)
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m.get(r, c).recip();
        for j in c..cols {
            let v = &m.data[r * cols + j] * &inv;
            m.data[r * cols + j] = v;
        }
        let pivot_row: Vector = m.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    let v = &m.data[i * cols + j] - &f * &pivot_row[j];
                    m.data[i * cols + j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize], ncols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(ncols);
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        let lead = v.iter().find(|x| !x.is_zero()).cloned().unwrap();
        basis.push(vec_scale(&v, &lead.recip()));
    }
    basis
}

/// Result of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    /// One solution with all free variables set to zero, or `None` when the
    /// system is inconsistent.
    pub particular: Option<Vector>,
    /// Basis of the kernel of the coefficient matrix.
    pub kernel: Vec<Vector>,
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<LinearSolution> {
    if a.rows != b.len() {
        return Err(Error::Dimension(format!(
            "{} equations but right-hand side of length {}",
            a.rows,
            b.len()
        )));
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug.data[i * (n + 1) + j] = a.get(i, j).clone();
        }
        aug.data[i * (n + 1) + n] = b[i].clone();
    }
    let (r, pivots) = rref(aug);
    let consistent = pivots.last() != Some(&n);
    let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();
    let kernel = kernel_from_rref(&r, &coeff_pivots, n);
    let particular = consistent.then(|| {
        let mut x = zero_vec(n);
        for (row, &p) in coeff_pivots.iter().enumerate() {
            x[p] = r.get(row, n).clone();
        }
        x
    });
    Ok(LinearSolution { particular, kernel })
}

/// Incrementally assembled linear system `A x = b` over a fixed number of
/// unknowns. Equations that are identically `0 = 0` are dropped.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Vector>,
    rhs: Vector,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn push(&mut self, coeffs: Vector, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.unknowns);
        if vec_is_zero(&coeffs) && rhs.is_zero() {
            return;
        }
        self.rows.push(coeffs);
        self.rhs.push(rhs);
    }

    /// Adds the vector equation `sum_k x_k * columns[k] = target`, one scalar
    /// equation per coordinate.
    pub fn push_vector_equation(&mut self, columns: &[Vector], target: &[Rational]) {
        debug_assert_eq!(columns.len(), self.unknowns);
        for (i, t) in target.iter().enumerate() {
            let coeffs: Vector = columns.iter().map(|c| c[i].clone()).collect();
            self.push(coeffs, t.clone());
        }
    }

    pub fn solve(&self) -> LinearSolution {
        if self.rows.is_empty() {
            return LinearSolution {
                particular: Some(zero_vec(self.unknowns)),
                kernel: (0..self.unknowns).map(|i| unit_vec(self.unknowns, i)).collect(),
            };
        }
        let a = Matrix::from_rows(self.rows.clone()).expect("rows share the unknown count");
        solve_linear(&a, &self.rhs).expect("rhs matches row count")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use proptest::prelude::*;

    /// Cofactor expansion along the first row. Exponential; test-only oracle.
    fn cofactor_det(m: &Matrix) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor_rows: Vec<Vector> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
                .collect();
            let minor = Matrix::from_rows(minor_rows).unwrap();
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| q(n, d))
    }

    fn square_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(small_rational(), n * n)
            .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(<[_]>::to_vec).collect()).unwrap())
    }

    #[test]
    fn det_identity_and_nonsquare() {
        assert_eq!(Matrix::identity(4).det().unwrap(), qi(1));
        assert!(Matrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn det_of_c_family_f_matrix_at_sample_point() {
        // a = 1, t = 1, s = 0: st - a = -1
        let m = Matrix::from_i64(4, 4, &[1, 0, 0, 1, 0, 1, 1, 0, 0, -1, 1, 0, 1, 0, 0, -1]);
        assert_eq!(m.det().unwrap(), qi(-4));
    }

    #[test]
    fn solve_zero_system() {
        let sol = solve_linear(&Matrix::zeros(2, 2), &[qi(0), qi(0)]).unwrap();
        assert_eq!(sol.particular, Some(vec![qi(0), qi(0)]));
        assert_eq!(sol.kernel.len(), 2);
    }

    #[test]
    fn solve_rank_one_system() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 0]);
        let sol = solve_linear(&a, &[qi(2), qi(0)]).unwrap();
        assert_eq!(sol.particular, Some(vec![qi(2), qi(0)]));
        assert_eq!(sol.kernel, vec![vec![qi(1), qi(-1)]]);
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 1, 1]);
        let sol = solve_linear(&a, &[qi(1), qi(2)]).unwrap();
        assert!(!sol.is_consistent());
        assert!(solve_linear(&a, &[qi(1)]).is_err());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Matrix::identity(2), &Matrix::identity(2)), Matrix::identity(4));
        let u = Matrix::diag(&[qi(1), qi(-1)]);
        assert_eq!(
            kron(&u, &Matrix::identity(2)),
            Matrix::diag(&[qi(1), qi(1), qi(-1), qi(-1)])
        );
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_i64(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.dot(&inv), Matrix::identity(2));
        assert_eq!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn invertibility_with_fast_path_and_fallback() {
        assert!(Matrix::identity(5).is_invertible().unwrap());
        assert!(!Matrix::from_i64(2, 2, &[1, 2, 2, 4]).is_invertible().unwrap());
        // entries with a denominator divisible by nothing special still work
        let m = Matrix::from_rows(vec![vec![q(1, 3), q(1, 2)], vec![q(2, 7), q(5, 9)]]).unwrap();
        assert_eq!(m.is_invertible().unwrap(), !m.det().unwrap().is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn det_matches_cofactor_oracle(m in square_matrix(5)) {
            prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }

        #[test]
        fn det_is_multiplicative(a in square_matrix(3), b in square_matrix(3)) {
            prop_assert_eq!(a.dot(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }

        #[test]
        fn fast_invertibility_agrees_with_det(m in square_matrix(4)) {
            prop_assert_eq!(m.is_invertible().unwrap(), !m.det().unwrap().is_zero());
        }

        #[test]
        fn kron_mixed_product(a in square_matrix(2), b in square_matrix(2),
                              c in square_matrix(2), d in square_matrix(2)) {
            prop_assert_eq!(kron(&a, &b).dot(&kron(&c, &d)), kron(&a.dot(&c), &b.dot(&d)));
        }

        #[test]
        fn consistent_systems_substitute_back(
            entries in proptest::collection::vec(small_rational(), 24),
            x in proptest::collection::vec(small_rational(), 4),
        ) {
            let a = Matrix::from_rows(entries.chunks(4).map(<[_]>::to_vec).collect()).unwrap();
            let b = a.act(&x);
            let sol = solve_linear(&a, &b).unwrap();
            let p = sol.particular.expect("consistent by construction");
            prop_assert_eq!(a.act(&p), b);
            for k in &sol.kernel {
                prop_assert!(vec_is_zero(&a.act(k)));
            }
            prop_assert_eq!(sol.kernel.len(), 4 - a.rank());
        }

        #[test]
        fn squares_have_exact_roots(n in -50i64..=50, d in 1i64..=50) {
            prop_assume!(n != 0);
            let x = q(n, d);
            prop_assert_eq!((&x * &x).sqrt_exact(), Some(x.abs()));
        }
    }
}
