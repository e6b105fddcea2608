//! Hopf algebras given by structure constants.

mod builders;
mod double;
mod quasi;

pub use builders::{e2, h4, h4_dual, named, nichols, phi_h4};
pub use double::{h4_double_relations, DrinfeldDouble};
pub use quasi::{CoQtStructure, QtCheck, QtStructure};

use crate::algebra::StructureAlgebra;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: StructureAlgebra,
    coproduct: Vec<Tensor>,
    counit: Vector,
    antipode: Matrix,
    antipode_inv: Matrix,
}

impl HopfAlgebra {
    /// `coproduct[i]` is `Δ(e_i)` as an arity-2 tensor; column `i` of
    /// `antipode` is `S(e_i)`.
    pub fn new(
        alg: StructureAlgebra,
        coproduct: Vec<Tensor>,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = alg.dim();
        if coproduct.len() != n || coproduct.iter().any(|t| t.arity() != 2) {
            return Err(Error::Dimension(format!("coproduct needs {n} elements of H ⊗ H")));
        }
        if coproduct
            .iter()
            .any(|t| t.terms().any(|(k, _)| k.iter().any(|&i| i >= n)))
        {
            return Err(Error::Dimension("coproduct index out of range".into()));
        }
        if counit.len() != n {
            return Err(Error::Dimension(format!("counit of length {} in dimension {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!("antipode is not {n}x{n}")));
        }
        let antipode_inv = antipode.inverse().map_err(|_| Error::SingularAntipode)?;
        Ok(HopfAlgebra {
            alg,
            coproduct,
            counit,
            antipode,
            antipode_inv,
        })
    }

    pub fn alg(&self) -> &StructureAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.alg.basis(i)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.alg.mul(x, y)
    }

    pub fn delta(&self, i: usize) -> &Tensor {
        &self.coproduct[i]
    }

    pub fn coproduct(&self) -> &[Tensor] {
        &self.coproduct
    }

    /// `Δ(x)` for an arbitrary vector.
    pub fn delta_of(&self, x: &[Rational]) -> Tensor {
        Tensor::from_vector(x).expand_slot(0, 2, |i| self.coproduct[i].clone())
    }

    /// `Δ^{(2)}(e_i) = (Δ ⊗ id)Δ(e_i)`, as `(h_1, h_2, h_3)`.
    pub fn delta2(&self, i: usize) -> Tensor {
        self.coproduct[i].expand_slot(0, 2, |k| self.coproduct[k].clone())
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn counit_of(&self, x: &[Rational]) -> Rational {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    /// Basis index of `x` when `x` is a basis vector.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    /// The basis vector with the given label; panics on an unknown label.
    pub fn el(&self, label: &str) -> Vector {
        let i = self
            .index_of(label)
            .unwrap_or_else(|| panic!("no basis element {label:?}"));
        self.basis(i)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coproduct.iter().all(|t| *t == t.permute(&[1, 0]))
    }

    pub fn check_axioms(&self) -> CheckReport {
        let n = self.dim();
        let a = &self.alg;
        let mut report = self.alg.check_axioms();
        let labels = self.labels();

        report.item("coassociativity");
        for i in 0..n {
            let left = self.delta2(i);
            let right = self.coproduct[i].expand_slot(1, 2, |k| self.coproduct[k].clone());
            report.expect(left == right, || labels[i].clone());
        }

        report.item("counit");
        for i in 0..n {
            let e = Tensor::basis(&[i]);
            let l = self.coproduct[i].contract_slot(0, &self.counit);
            let r = self.coproduct[i].contract_slot(1, &self.counit);
            report.expect(l == e && r == e, || labels[i].clone());
        }

        report.item("coproduct is an algebra map");
        let unit_t = Tensor::from_vector(a.unit());
        report.expect(
            self.delta_of(a.unit()) == unit_t.outer(&unit_t),
            || "Δ(1) != 1⊗1".into(),
        );
        for i in 0..n {
            for j in 0..n {
                let lhs = self.delta_of(&a.basis_product_vec(i, j));
                let rhs = self.coproduct[i].mul_in(&self.coproduct[j], &[a, a]);
                report.expect(lhs == rhs, || format!("Δ({} {})", labels[i], labels[j]));
            }
        }

        report.item("counit is an algebra map");
        report.expect(self.counit_of(a.unit()).is_one(), || "ε(1) != 1".into());
        for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_of(&a.basis_product_vec(i, j));
                let rhs = &self.counit[i] * &self.counit[j];
                report.expect(lhs == rhs, || format!("ε({} {})", labels[i], labels[j]));
            }
        }

        report.item("antipode");
        for i in 0..n {
            let want = a.scalar(&self.counit[i]);
            let mut left = zero_vec(n);
            let mut right = zero_vec(n);
            for (k, c) in self.coproduct[i].terms() {
                let s0 = self.antipode.column(k[0]);
                let s1 = self.antipode.column(k[1]);
                crate::linalg::vec_axpy(&mut left, c, &a.mul(&s0, &a.basis(k[1])));
                crate::linalg::vec_axpy(&mut right, c, &a.mul(&a.basis(k[0]), &s1));
            }
            report.expect(left == want, || format!("m(S⊗id)Δ({})", labels[i]));
            report.expect(right == want, || format!("m(id⊗S)Δ({})", labels[i]));
        }

        report.item("antipode inverse");
        let id = Matrix::identity(n);
        report.expect(
            self.antipode.dot(&self.antipode_inv) == id && self.antipode_inv.dot(&self.antipode) == id,
            || "S∘S⁻¹ != id".into(),
        );
        report
    }

    /// The dual Hopf algebra on the dual basis `e_i*`.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let labels = self.labels().iter().map(|l| format!("{l}*")).collect();
        let mult: Vec<Vec<Vector>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.coproduct[k].coefficient(&[i, j])).collect())
                    .collect()
            })
            .collect();
        let alg = StructureAlgebra::new(labels, self.counit.clone(), mult)
            .expect("dual table has the right shape");
        let coproduct = (0..n)
            .map(|k| {
                let mut t = Tensor::zero(2);
                for i in 0..n {
                    for j in 0..n {
                        for (m, c) in self.alg.basis_product(i, j) {
                            if *m == k {
                                t.add_term(vec![i, j], c.clone());
                            }
                        }
                    }
                }
                t
            })
            .collect();
        HopfAlgebra {
            alg,
            coproduct,
            counit: self.alg.unit().clone(),
            antipode: self.antipode.transpose(),
            antipode_inv: self.antipode_inv.transpose(),
        }
    }

    /// Relabels the basis without changing any structure.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.alg = self.alg.with_labels(labels);
        self
    }

    /// Evaluates the pairing `<f, x>` of a functional in the dual basis with
    /// a vector.
    pub fn pair(f: &[Rational], x: &[Rational]) -> Rational {
        f.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// A linear map between Hopf algebras, stored as a matrix whose column `i`
/// is the image of the source basis vector `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphism {
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn new(matrix: Matrix) -> Self {
        HopfMorphism { matrix }
    }

    pub fn identity(h: &HopfAlgebra) -> Self {
        HopfMorphism::new(Matrix::identity(h.dim()))
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        self.matrix.act(x)
    }

    /// Checks algebra map, coalgebra map, and antipode intertwining on bases.
    pub fn check(&self, source: &HopfAlgebra, target: &HopfAlgebra) -> CheckReport {
        let mut report = CheckReport::new();
        report.item("shape");
        let f = &self.matrix;
        if f.rows() != target.dim() || f.cols() != source.dim() {
            report.fail(format!(
                "{}x{} matrix for a map from dimension {} to {}",
                f.rows(),
                f.cols(),
                source.dim(),
                target.dim()
            ));
            return report;
        }
        let n = source.dim();
        let labels = source.labels();

        report.item("algebra map");
        report.expect(f.act(source.unit()) == *target.unit(), || "f(1) != 1".into());
        for i in 0..n {
            for j in 0..n {
                let lhs = f.act(&source.alg.basis_product_vec(i, j));
                let rhs = target.mul(&f.act(&source.basis(i)), &f.act(&source.basis(j)));
                report.expect(lhs == rhs, || format!("f({} {})", labels[i], labels[j]));
            }
        }

        report.item("coalgebra map");
        for i in 0..n {
            let lhs = source.delta(i).map_slot(0, f).map_slot(1, f);
            let rhs = target.delta_of(&f.act(&source.basis(i)));
            report.expect(lhs == rhs, || format!("Δ(f({}))", labels[i]));
            let e = target.counit_of(&f.act(&source.basis(i)));
            report.expect(e == source.counit()[i], || format!("ε(f({}))", labels[i]));
        }

        report.item("antipode");
        report.expect(
            f.dot(source.antipode()) == target.antipode().dot(f),
            || "f∘S != S∘f".into(),
        );
        report
    }

    /// `(f ⊗ f)(x)` for an element of the source's tensor square.
    pub fn push2(&self, x: &Tensor) -> Tensor {
        x.map_slot(0, &self.matrix).map_slot(1, &self.matrix)
    }

    pub fn compose(&self, after: &HopfMorphism) -> HopfMorphism {
        HopfMorphism::new(after.matrix.dot(&self.matrix))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_table;
    use crate::rational::qi;

    pub(crate) fn kz2() -> HopfAlgebra {
        let alg = algebra_from_table(&["1", "g"], 0, &[&[(0, 1)], &[(1, 1)], &[(1, 1)], &[(0, 1)]]);
        HopfAlgebra::new(
            alg,
            vec![Tensor::basis(&[0, 0]), Tensor::basis(&[1, 1])],
            vec![qi(1), qi(1)],
            Matrix::identity(2),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_is_hopf() {
        assert!(kz2().check_axioms().passed());
        assert!(kz2().is_cocommutative());
    }

    #[test]
    fn dual_of_kz2_via_characters() {
        let h = kz2();
        let d = h.dual();
        assert!(d.check_axioms().passed());
        // 1 ↦ 1* + g*, g ↦ 1* − g*
        let f = HopfMorphism::new(Matrix::from_i64(2, 2, &[1, 1, 1, -1]));
        assert!(f.check(&h, &d).passed());
    }

    #[test]
    fn singular_antipode_is_rejected() {
        let h = kz2();
        let err = HopfAlgebra::new(
            h.alg().clone(),
            h.coproduct().to_vec(),
            h.counit().clone(),
            Matrix::zeros(2, 2),
        )
        .unwrap_err();
        assert_eq!(err, Error::SingularAntipode);
    }
}
