//! Finite-dimensional unital associative algebras given by structure
//! constants.

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::{unit_vec, vec_is_zero, vec_sub, zero_vec, LinearSystem, Matrix, Vector};
use crate::rational::Rational;

/// An algebra with basis `e_0, ..., e_{n-1}`, a unit vector, and products
/// `e_i e_j` stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    labels: Vec<String>,
    unit: Vector,
    products: Vec<Vec<(usize, Rational)>>,
}

fn sparse(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl StructureAlgebra {
    /// `mult[i][j]` is the coefficient vector of `e_i e_j`.
    pub fn new(labels: Vec<String>, unit: Vector, mult: Vec<Vec<Vector>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Dimension("algebra of dimension 0".into()));
        }
        if unit.len() != n {
            return Err(Error::Dimension(format!("unit of length {} in dimension {n}", unit.len())));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!("multiplication table is not {n}x{n}")));
        }
        let mut products = Vec::with_capacity(n * n);
        for row in &mult {
            for v in row {
                if v.len() != n {
                    return Err(Error::Dimension(format!(
                        "product vector of length {} in dimension {n}",
                        v.len()
                    )));
                }
                products.push(sparse(v));
            }
        }
        Ok(StructureAlgebra { labels, unit, products })
    }

    /// Builds the table from a function giving `e_i e_j`.
    pub fn from_fn(labels: Vec<String>, unit: Vector, f: impl Fn(usize, usize) -> Vector) -> Self {
        let n = labels.len();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                debug_assert_eq!(v.len(), n);
                products.push(sparse(&v));
            }
        }
        StructureAlgebra { labels, unit, products }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Nonzero coefficients of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_product_vec(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.dim());
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Dense table `mult[i][j]`.
    pub fn mult_table(&self) -> Vec<Vec<Vector>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.basis_product_vec(i, j)).collect())
            .collect()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    pub fn scalar(&self, c: &Rational) -> Vector {
        self.unit.iter().map(|u| u * c).collect()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn mul3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.mul(&self.mul(x, y), z)
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &[Rational], y: &[Rational]) -> Vector {
        vec_sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.dim(), &cols).expect("columns of algebra dimension")
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(self.dim(), &cols).expect("columns of algebra dimension")
    }

    /// The scalar `c` with `x = c * 1`, if any.
    pub fn as_scalar(&self, x: &[Rational]) -> Option<Rational> {
        let (pos, u) = self.unit.iter().enumerate().find(|(_, u)| !u.is_zero())?;
        let c = &x[pos] / u;
        (self.scalar(&c) == x).then_some(c)
    }

    /// Two-sided inverse, if `x` is invertible.
    pub fn inverse(&self, x: &[Rational]) -> Option<Vector> {
        let l = self.left_mult(x);
        let sol = crate::linalg::solve_linear(&l, &self.unit).ok()?;
        let y = sol.particular?;
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn check_axioms(&self) -> CheckReport {
        let n = self.dim();
        let mut report = CheckReport::new();
        report.item("associativity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product_vec(i, j);
                for l in 0..n {
                    let left = self.mul(&ij, &self.basis(l));
                    let right = self.mul(&self.basis(i), &self.basis_product_vec(j, l));
                    if left != right {
                        report.fail(format!(
                            "({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[l]
                        ));
                    }
                }
            }
        }
        report.item("unit");
        for i in 0..n {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e {
                report.fail(format!("1 * {} != {}", self.labels[i], self.labels[i]));
            }
            if self.mul(&e, &self.unit) != e {
                report.fail(format!("{} * 1 != {}", self.labels[i], self.labels[i]));
            }
        }
        report
    }

    pub fn opposite(&self) -> StructureAlgebra {
        let n = self.dim();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                products.push(self.basis_product(j, i).to_vec());
            }
        }
        StructureAlgebra {
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            products,
        }
    }

    /// `M_n(k)` on the matrix units `E_pq` (index `p * n + q`), with
    /// `E_pq E_rs = δ_qr E_ps`.
    pub fn endomorphism(n: usize) -> StructureAlgebra {
        assert!(n >= 1, "endomorphism algebra of a zero space");
        let labels = (0..n)
            .flat_map(|p| (0..n).map(move |q| format!("E{}{}", p + 1, q + 1)))
            .collect();
        let mut unit = zero_vec(n * n);
        for p in 0..n {
            unit[p * n + p] = Rational::one();
        }
        StructureAlgebra::from_fn(labels, unit, |a, b| {
            let (p, q) = (a / n, a % n);
            let (r, s) = (b / n, b % n);
            let mut v = zero_vec(n * n);
            if q == r {
                v[p * n + s] = Rational::one();
            }
            v
        })
    }

    /// The ordinary tensor product algebra `A ⊗ B`.
    pub fn tensor(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
        let nb = b.dim();
        let labels = a
            .labels
            .iter()
            .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let unit = crate::linalg::vec_kron(&a.unit, &b.unit);
        StructureAlgebra::from_fn(labels, unit, |i, j| {
            let l = a.basis_product_vec(i / nb, j / nb);
            let r = b.basis_product_vec(i % nb, j % nb);
            crate::linalg::vec_kron(&l, &r)
        })
    }

    /// Relabels the basis.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// Basis of the center, by one linear solve.
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut sys = LinearSystem::new(n);
        for i in 0..n {
            let e = self.basis(i);
            let cols: Vec<Vector> = (0..n).map(|k| self.commutator(&self.basis(k), &e)).collect();
            sys.push_vector_equation(&cols, &zero_vec(n));
        }
        sys.solve().kernel
    }

    /// Basis of the graded center `{z : z a = (-1)^{|z||a|} a z}`.
    pub fn super_center(&self, grading: &Grading) -> Result<Vec<Vector>> {
        grading.check_compatible(self)?;
        let n = self.dim();
        let mut out = Vec::new();
        for parity in [0u8, 1] {
            let support: Vec<usize> = (0..n).filter(|&k| grading.parity[k] == parity).collect();
            if support.is_empty() {
                continue;
            }
            let mut sys = LinearSystem::new(support.len());
            for i in 0..n {
                let e = self.basis(i);
                let sign = parity & grading.parity[i] == 1;
                let cols: Vec<Vector> = support
                    .iter()
                    .map(|&k| {
                        let zb = self.basis(k);
                        let za = self.mul(&zb, &e);
                        let az = self.mul(&e, &zb);
                        if sign {
                            crate::linalg::vec_add(&za, &az)
                        } else {
                            vec_sub(&za, &az)
                        }
                    })
                    .collect();
                sys.push_vector_equation(&cols, &zero_vec(n));
            }
            for coeffs in sys.solve().kernel {
                let mut z = zero_vec(n);
                for (c, &k) in coeffs.iter().zip(&support) {
                    z[k] = c.clone();
                }
                out.push(z);
            }
        }
        Ok(out)
    }

    /// Matrix of the sandwich map `A ⊗ A^op → End(A)`, `a ⊗ b ↦ (c ↦ a c b)`.
    /// Column `i * n + j` holds the image of `e_i ⊗ e_j`, flattened with
    /// entry `(r, c)` of the endomorphism at `r * n + c`.
    pub fn sandwich_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for c in 0..n {
                    let ec = self.basis(c);
                    let v = self.mul3(&self.basis(i), &ec, &self.basis(j));
                    for (r, x) in v.into_iter().enumerate() {
                        if !x.is_zero() {
                            m.set(r * n + c, i * n + j, x);
                        }
                    }
                }
            }
        }
        m
    }

    /// Central simplicity via bijectivity of the sandwich map.
    pub fn is_central_simple(&self) -> bool {
        self.sandwich_matrix()
            .is_invertible()
            .expect("sandwich matrix is square")
    }

    /// Whether the linear map `f: A → B` is a unital algebra morphism.
    pub fn is_algebra_map(&self, target: &StructureAlgebra, f: &Matrix) -> bool {
        if f.act(&self.unit) != target.unit {
            return false;
        }
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = f.act(&self.basis_product_vec(i, j));
                let rhs = target.mul(&f.act(&self.basis(i)), &f.act(&self.basis(j)));
                lhs == rhs
            })
        })
    }

}

/// An element tied to its algebra.
#[derive(Clone, Debug)]
pub struct Element<'a> {
    parent: &'a StructureAlgebra,
    coeffs: Vector,
}

impl<'a> Element<'a> {
    pub fn new(parent: &'a StructureAlgebra, coeffs: Vector) -> Result<Self> {
        if coeffs.len() != parent.dim() {
            return Err(Error::Dimension(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                parent.dim()
            )));
        }
        Ok(Element { parent, coeffs })
    }

    pub fn one(parent: &'a StructureAlgebra) -> Self {
        Element {
            parent,
            coeffs: parent.unit.clone(),
        }
    }

    pub fn basis(parent: &'a StructureAlgebra, i: usize) -> Self {
        Element {
            parent,
            coeffs: parent.basis(i),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn parent(&self) -> &'a StructureAlgebra {
        self.parent
    }

    fn same_parent(&self, other: &Element<'_>) -> Result<()> {
        if std::ptr::eq(self.parent, other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn multiply(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.same_parent(other)?;
        Ok(Element {
            parent: self.parent,
            coeffs: self.parent.mul(&self.coeffs, &other.coeffs),
        })
    }

    pub fn add(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.same_parent(other)?;
        Ok(Element {
            parent: self.parent,
            coeffs: crate::linalg::vec_add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn scale(&self, s: &Rational) -> Element<'a> {
        Element {
            parent: self.parent,
            coeffs: crate::linalg::vec_scale(&self.coeffs, s),
        }
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coeffs)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other).is_ok() && self.coeffs == other.coeffs
    }
}

/// A `Z_2`-grading given by the parity of each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub parity: Vec<u8>,
}

impl Grading {
    pub fn new(parity: Vec<u8>) -> Self {
        Grading { parity }
    }

    pub fn trivial(dim: usize) -> Self {
        Grading { parity: vec![0; dim] }
    }

    /// Reads the grading off a diagonal `±1` operator: parity 1 on the
    /// `-1` eigenvectors.
    pub fn from_involution(m: &Matrix, what: &str) -> Result<Self> {
        let n = m.rows();
        let mut parity = Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && !m.get(i, j).is_zero() {
                    return Err(Error::NonHomogeneous(what.to_string()));
                }
            }
            let d = m.get(i, i);
            if d.is_one() {
                parity.push(0);
            } else if *d == -Rational::one() {
                parity.push(1);
            } else {
                return Err(Error::NonHomogeneous(what.to_string()));
            }
        }
        Ok(Grading { parity })
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Parity of a homogeneous nonzero vector; `None` if mixed or zero.
    pub fn parity_of(&self, v: &[Rational]) -> Option<u8> {
        let mut found = None;
        for (x, p) in v.iter().zip(&self.parity) {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(*p),
                Some(q) if q != *p => return None,
                _ => {}
            }
        }
        found
    }

    /// The operator `v ↦ (-1)^{|v|} v`.
    pub fn involution(&self) -> Matrix {
        let d: Vec<Rational> = self
            .parity
            .iter()
            .map(|&p| Rational::sign_power(p as usize))
            .collect();
        Matrix::diag(&d)
    }

    pub fn check_compatible(&self, alg: &StructureAlgebra) -> Result<()> {
        let n = alg.dim();
        if self.dim() != n {
            return Err(Error::Dimension(format!(
                "grading of length {} on an algebra of dimension {n}",
                self.dim()
            )));
        }
        if self.parity_of(alg.unit()).unwrap_or(0) != 0 {
            return Err(Error::IncompatibleGrading("unit is not even".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let want = self.parity[i] ^ self.parity[j];
                for (k, _) in alg.basis_product(i, j) {
                    if self.parity[*k] != want {
                        return Err(Error::IncompatibleGrading(format!(
                            "{} * {} has a component on {}",
                            alg.labels()[i],
                            alg.labels()[j],
                            alg.labels()[*k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Grading of a tensor product, parities added.
    pub fn tensor(&self, other: &Grading) -> Grading {
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for p in &self.parity {
            for q in &other.parity {
                parity.push(p ^ q);
            }
        }
        Grading { parity }
    }
}

/// Builds an algebra from a sparse integer table: entry `i * n + j` lists
/// the `(k, c)` with `e_i e_j = sum c e_k`.
pub fn algebra_from_table(labels: &[&str], unit: usize, table: &[&[(usize, i64)]]) -> StructureAlgebra {
    let n = labels.len();
    assert_eq!(table.len(), n * n);
    StructureAlgebra::from_fn(
        labels.iter().map(|s| s.to_string()).collect(),
        unit_vec(n, unit),
        |i, j| {
            let mut v = zero_vec(n);
            for (k, c) in table[i * n + j] {
                v[*k] += Rational::from(*c);
            }
            v
        },
    )
}
