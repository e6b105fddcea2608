//! Quasitriangular elements and coquasitriangular forms.

use serde::Serialize;

use super::{HopfAlgebra, HopfMorphism};
use crate::check::CheckReport;
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::tensor::Tensor;

/// Result of a (co)quasitriangularity check.
#[derive(Clone, Debug, Serialize)]
pub struct QtCheck {
    pub axioms: CheckReport,
    pub triangular: bool,
}

impl QtCheck {
    pub fn passed(&self) -> bool {
        self.axioms.passed()
    }
}

/// An element `R ∈ H ⊗ H` together with `R⁻¹ = (S ⊗ id)(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtStructure {
    pub r: Tensor,
    pub r_inv: Tensor,
}

impl QtStructure {
    pub fn new(h: &HopfAlgebra, r: Tensor) -> Self {
        let r_inv = r.map_slot(0, h.antipode());
        QtStructure { r, r_inv }
    }

    /// `(f ⊗ f)(R)` as a candidate structure on the target.
    pub fn push(&self, f: &HopfMorphism, target: &HopfAlgebra) -> QtStructure {
        QtStructure::new(target, f.push2(&self.r))
    }

    pub fn check(&self, h: &HopfAlgebra) -> QtCheck {
        let a = h.alg();
        let algs3 = [a, a, a];
        let unit = h.unit();
        let mut report = CheckReport::new();
        let r13 = self.r.insert_slot(1, unit);
        let r23 = self.r.insert_slot(0, unit);
        let r12 = self.r.insert_slot(2, unit);

        report.item("(Δ⊗id)R = R13 R23");
        let lhs = self.r.expand_slot(0, 2, |i| h.delta(i).clone());
        report.expect(lhs == r13.mul_in(&r23, &algs3), || "mismatch".into());

        report.item("(id⊗Δ)R = R13 R12");
        let lhs = self.r.expand_slot(1, 2, |i| h.delta(i).clone());
        report.expect(lhs == r13.mul_in(&r12, &algs3), || "mismatch".into());

        report.item("R Δ(x) = Δcop(x) R");
        for i in 0..h.dim() {
            let d = h.delta(i);
            let lhs = self.r.mul_in(d, &[a, a]);
            let rhs = d.permute(&[1, 0]).mul_in(&self.r, &[a, a]);
            report.expect(lhs == rhs, || h.labels()[i].clone());
        }

        report.item("R invertible");
        let one = Tensor::from_vector(unit).outer(&Tensor::from_vector(unit));
        report.expect(self.r.mul_in(&self.r_inv, &[a, a]) == one, || "R R⁻¹ != 1⊗1".into());
        report.expect(self.r_inv.mul_in(&self.r, &[a, a]) == one, || "R⁻¹ R != 1⊗1".into());

        let triangular = self.r.permute(&[1, 0]) == self.r_inv;
        QtCheck {
            axioms: report,
            triangular,
        }
    }
}

/// A bilinear form `r` with `r[i][j] = r(e_i ⊗ e_j)` and its convolution
/// inverse `r⁻¹(x ⊗ y) = r(S(x) ⊗ y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoQtStructure {
    pub r: Matrix,
    pub r_inv: Matrix,
}

impl CoQtStructure {
    pub fn new(h: &HopfAlgebra, r: Matrix) -> Self {
        let r_inv = h.antipode().transpose().dot(&r);
        CoQtStructure { r, r_inv }
    }

    /// Reads an element of `H* ⊗ H*` (in the dual basis) as a form on `H`.
    pub fn from_dual_element(h: &HopfAlgebra, t: &Tensor) -> Self {
        let n = h.dim();
        let mut r = Matrix::zeros(n, n);
        for (k, c) in t.terms() {
            r.set(k[0], k[1], c.clone());
        }
        CoQtStructure::new(h, r)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let ry = self.r.act(y);
        x.iter().zip(&ry).map(|(a, b)| a * b).sum()
    }

    fn eval_basis(m: &Matrix, i: usize, j: usize) -> &Rational {
        m.get(i, j)
    }

    /// Convolution `Σ p(x_1 ⊗ y_1) q(x_2 ⊗ y_2)` on basis vectors.
    fn convolve(h: &HopfAlgebra, p: &Matrix, q: &Matrix, i: usize, j: usize) -> Rational {
        let mut acc = Rational::zero();
        for (xa, cx) in h.delta(i).terms() {
            for (yb, cy) in h.delta(j).terms() {
                acc += cx * cy * Self::eval_basis(p, xa[0], yb[0]) * Self::eval_basis(q, xa[1], yb[1]);
            }
        }
        acc
    }

    pub fn check(&self, h: &HopfAlgebra) -> QtCheck {
        let n = h.dim();
        let a = h.alg();
        let labels = h.labels();
        let mut report = CheckReport::new();

        report.item("r(xy⊗z) = r(x⊗z1) r(y⊗z2)");
        for i in 0..n {
            for j in 0..n {
                let xy = a.basis_product_vec(i, j);
                for k in 0..n {
                    let lhs = self.eval(&xy, &h.basis(k));
                    let rhs: Rational = h
                        .delta(k)
                        .terms()
                        .map(|(z, c)| c * self.r.get(i, z[0]) * self.r.get(j, z[1]))
                        .sum();
                    report.expect(lhs == rhs, || format!("({}, {}, {})", labels[i], labels[j], labels[k]));
                }
            }
        }

        report.item("r(x⊗yz) = r(x1⊗z) r(x2⊗y)");
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let yz = a.basis_product_vec(j, k);
                    let lhs = self.eval(&h.basis(i), &yz);
                    let rhs: Rational = h
                        .delta(i)
                        .terms()
                        .map(|(x, c)| c * self.r.get(x[0], k) * self.r.get(x[1], j))
                        .sum();
                    report.expect(lhs == rhs, || format!("({}, {}, {})", labels[i], labels[j], labels[k]));
                }
            }
        }

        report.item("r(x1⊗y1) x2 y2 = y1 x1 r(x2⊗y2)");
        for i in 0..n {
            for j in 0..n {
                let mut lhs: Vector = zero_vec(n);
                let mut rhs: Vector = zero_vec(n);
                for (x, cx) in h.delta(i).terms() {
                    for (y, cy) in h.delta(j).terms() {
                        let c = cx * cy;
                        let l = &c * self.r.get(x[0], y[0]);
                        crate::linalg::vec_axpy(&mut lhs, &l, &a.basis_product_vec(x[1], y[1]));
                        let r = &c * self.r.get(x[1], y[1]);
                        crate::linalg::vec_axpy(&mut rhs, &r, &a.basis_product_vec(y[0], x[0]));
                    }
                }
                report.expect(lhs == rhs, || format!("({}, {})", labels[i], labels[j]));
            }
        }

        report.item("convolution invertible");
        for i in 0..n {
            for j in 0..n {
                let want = &h.counit()[i] * &h.counit()[j];
                let l = Self::convolve(h, &self.r, &self.r_inv, i, j);
                let r = Self::convolve(h, &self.r_inv, &self.r, i, j);
                report.expect(l == want && r == want, || format!("({}, {})", labels[i], labels[j]));
            }
        }

        let triangular = self.r_inv == self.r.transpose();
        QtCheck {
            axioms: report,
            triangular,
        }
    }
}
