//! Sparse elements of iterated tensor products `V_1 ⊗ ... ⊗ V_n`.
//!
//! Axiom checks on the 16-dimensional double need elements of triple tensor
//! powers (4096 coordinates, a handful nonzero), so these are kept sparse.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::algebra::StructureAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The pure tensor `e_{i_1} ⊗ ... ⊗ e_{i_n}`.
    pub fn basis(indices: &[usize]) -> Self {
        let mut t = Tensor::zero(indices.len());
        t.add_term(indices.to_vec(), Rational::one());
        t
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        let mut t = Tensor::zero(1);
        for (i, x) in v.iter().enumerate() {
            t.add_term(vec![i], x.clone());
        }
        t
    }

    /// Reads a dense vector of `V ⊗ W` (left-major) as an arity-2 tensor.
    pub fn from_dense2(v: &[Rational], right_dim: usize) -> Self {
        let mut t = Tensor::zero(2);
        for (k, x) in v.iter().enumerate() {
            t.add_term(vec![k / right_dim, k % right_dim], x.clone());
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Rational {
        self.terms.get(indices).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, indices: Vec<usize>, c: Rational) {
        debug_assert_eq!(indices.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(indices) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Tensor {
        if s.is_zero() {
            return Tensor::zero(self.arity);
        }
        Tensor {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// `self ⊗ other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity + other.arity);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, v1 * v2);
            }
        }
        out
    }

    /// Replaces slot `slot` by the image of a linear map given as a matrix.
    pub fn map_slot(&self, slot: usize, m: &Matrix) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (k, v) in &self.terms {
            let col = k[slot];
            for r in 0..m.rows() {
                let c = m.get(r, col);
                if c.is_zero() {
                    continue;
                }
                let mut nk = k.clone();
                nk[slot] = r;
                out.add_term(nk, v * c);
            }
        }
        out
    }

    /// Replaces slot `slot` by `f(index)`, an element of arity `width`.
    /// With `width = 2` and `f` a coproduct this is `id ⊗ Δ ⊗ id`.
    pub fn expand_slot(&self, slot: usize, width: usize, f: impl Fn(usize) -> Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity - 1 + width);
        for (k, v) in &self.terms {
            let image = f(k[slot]);
            debug_assert_eq!(image.arity, width);
            for (ik, iv) in &image.terms {
                let mut nk = Vec::with_capacity(out.arity);
                nk.extend_from_slice(&k[..slot]);
                nk.extend_from_slice(ik);
                nk.extend_from_slice(&k[slot + 1..]);
                out.add_term(nk, v * iv);
            }
        }
        out
    }

    /// Contracts slot `slot` against a linear functional, lowering the arity.
    pub fn contract_slot(&self, slot: usize, functional: &[Rational]) -> Tensor {
        let mut out = Tensor::zero(self.arity - 1);
        for (k, v) in &self.terms {
            let c = &functional[k[slot]];
            if c.is_zero() {
                continue;
            }
            let mut nk = k.clone();
            nk.remove(slot);
            out.add_term(nk, v * c);
        }
        out
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        debug_assert_eq!(perm.len(), self.arity);
        let mut out = Tensor::zero(self.arity);
        for (k, v) in &self.terms {
            let nk = perm.iter().map(|&p| k[p]).collect();
            out.add_term(nk, v.clone());
        }
        out
    }

    /// Inserts the vector `v` as a new slot at position `slot`.
    pub fn insert_slot(&self, slot: usize, v: &[Rational]) -> Tensor {
        let mut out = Tensor::zero(self.arity + 1);
        for (k, c) in &self.terms {
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut nk = k.clone();
                nk.insert(slot, i);
                out.add_term(nk, c * x);
            }
        }
        out
    }

    /// Product in the tensor product algebra `A_1 ⊗ ... ⊗ A_n`, where
    /// `(a_1 ⊗ ... ⊗ a_n)(b_1 ⊗ ... ⊗ b_n) = a_1 b_1 ⊗ ... ⊗ a_n b_n`.
    pub fn mul_in(&self, other: &Tensor, algebras: &[&StructureAlgebra]) -> Tensor {
        debug_assert_eq!(self.arity, algebras.len());
        debug_assert_eq!(other.arity, algebras.len());
        let mut out = Tensor::zero(self.arity);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), v1 * v2)];
                for (slot, alg) in algebras.iter().enumerate() {
                    let prod = alg.basis_product(k1[slot], k2[slot]);
                    let mut next = Vec::new();
                    for (idx, c) in &partial {
                        for (m, x) in prod {
                            let mut nidx = idx.clone();
                            nidx.push(*m);
                            next.push((nidx, c * x));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (idx, c) in partial {
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    /// Dense coordinates in the left-major basis of the given dimensions.
    pub fn to_dense(&self, dims: &[usize]) -> Vector {
        let total: usize = dims.iter().product();
        let mut out = vec![Rational::zero(); total];
        for (k, v) in &self.terms {
            let mut idx = 0;
            for (i, d) in k.iter().zip(dims) {
                idx = idx * d + i;
            }
            out[idx] = v.clone();
        }
        out
    }

    /// Extracts the scalar of an arity-0 tensor.
    pub fn scalar(&self) -> Rational {
        debug_assert_eq!(self.arity, 0);
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn cancellation_removes_terms() {
        let mut t = Tensor::basis(&[0, 1]);
        t.add_term(vec![0, 1], qi(-1));
        assert!(t.is_zero());
    }

    #[test]
    fn permute_and_dense() {
        let t = Tensor::basis(&[0, 1]).scale(&qi(3));
        let s = t.permute(&[1, 0]);
        assert_eq!(s.coefficient(&[1, 0]), qi(3));
        assert_eq!(s.to_dense(&[2, 2]), vec![qi(0), qi(0), qi(3), qi(0)]);
        assert_eq!(Tensor::from_dense2(&s.to_dense(&[2, 2]), 2), s);
    }

    #[test]
    fn expand_slot_inserts_image() {
        let t = Tensor::basis(&[1, 2]);
        let e = t.expand_slot(0, 2, |i| Tensor::basis(&[i, i]));
        assert_eq!(e, Tensor::basis(&[1, 1, 2]));
    }
}
