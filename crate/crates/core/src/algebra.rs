//! Structure-constant representation of a finite-dimensional real algebra.
//!
//! The product of basis vectors is `e_i * e_j = sum_k c[i][j][k] e_k`. That
//! orientation is used everywhere, including serialization.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar, DEFAULT_EPS};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity tag shared by an algebra and the elements built from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraId(u64);

impl AlgebraId {
    fn fresh() -> Self {
        Self(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarMode {
    Exact,
    Float { eps: f64 },
}

#[derive(Debug, Clone)]
pub struct Algebra<S> {
    id: AlgebraId,
    dim: usize,
    sc: Vec<S>,
    labels: Vec<String>,
    unit: Option<Vec<S>>,
    eps: f64,
}

pub type QAlgebra = Algebra<Rational>;

#[derive(Debug, Clone, PartialEq)]
pub struct Element<S> {
    coords: Vec<S>,
    parent: AlgebraId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Matrix of `x -> a x` (left) or `x -> x a` (right); column `j` holds the
/// image of `e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct MulOperator<S> {
    pub side: Side,
    pub matrix: Matrix<S>,
}

impl<S: Scalar> MulOperator<S> {
    pub fn determinant(&self) -> S {
        self.matrix.determinant()
    }
}

impl<S: Scalar> Element<S> {
    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn parent(&self) -> AlgebraId {
        self.parent
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.coords.iter().all(|c| c.is_negligible(eps))
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c.to_f64().powi(2)).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { coords: self.coords.iter().map(|c| c.clone() * s.clone()).collect(), parent: self.parent }
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|c| -c.clone()).collect(), parent: self.parent }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { coords, parent: self.parent })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_parent(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { coords, parent: self.parent })
    }

    fn same_parent(&self, other: &Self) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }
}

impl<S: Scalar> Algebra<S> {
    /// Builds an algebra from a flat `n*n*n` structure-constant vector.
    ///
    /// Labels must be unique. When `unit` is given it is checked against
    /// every basis vector on both sides.
    pub fn new(sc: Vec<S>, labels: Vec<String>, unit: Option<Vec<S>>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if sc.len() != dim * dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "structure constants have {} entries, expected {}",
                sc.len(),
                dim * dim * dim
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate basis label {l:?}")));
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::Dimension { expected: dim, found: u.len() });
            }
        }
        let alg = Self { id: AlgebraId::fresh(), dim, sc, labels, unit, eps: DEFAULT_EPS };
        alg.check_unit()?;
        Ok(alg)
    }

    /// Builds from a nested `c[i][j][k]` table.
    pub fn from_table(table: Vec<Vec<Vec<S>>>, labels: Vec<String>, unit: Option<Vec<S>>) -> Result<Self> {
        let n = labels.len();
        let shape_ok = table.len() == n && table.iter().all(|row| row.len() == n && row.iter().all(|c| c.len() == n));
        if !shape_ok {
            return Err(Error::InvalidAlgebra(format!("structure tensor must be {n}x{n}x{n}")));
        }
        Self::new(table.into_iter().flatten().flatten().collect(), labels, unit)
    }

    fn check_unit(&self) -> Result<()> {
        let Some(u) = &self.unit else { return Ok(()) };
        let one = self.element(u.clone())?;
        for j in 0..self.dim {
            let e = self.basis(j);
            let left = self.mul(&one, &e)?;
            let right = self.mul(&e, &one)?;
            if !left.sub(&e)?.is_zero(self.eps) || !right.sub(&e)?.is_zero(self.eps) {
                return Err(Error::InvalidAlgebra(format!(
                    "declared unit does not act as identity on basis vector {}",
                    self.labels[j]
                )));
            }
        }
        Ok(())
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn mode(&self) -> ScalarMode {
        if S::EXACT {
            ScalarMode::Exact
        } else {
            ScalarMode::Float { eps: self.eps }
        }
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn unit_coords(&self) -> Option<&[S]> {
        self.unit.as_deref()
    }

    pub fn unit(&self) -> Option<Element<S>> {
        self.unit.as_ref().map(|u| Element { coords: u.clone(), parent: self.id })
    }

    /// `c[i][j][k]`.
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &S {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn table(&self) -> Vec<Vec<Vec<S>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> Element<S> {
        let mut coords = vec![S::zero(); self.dim];
        coords[i] = S::one();
        Element { coords, parent: self.id }
    }

    pub fn basis_elements(&self) -> Vec<Element<S>> {
        (0..self.dim).map(|i| self.basis(i)).collect()
    }

    /// Basis vector by label; panics on unknown labels.
    pub fn named(&self, label: &str) -> Element<S> {
        let i = self.index_of(label).unwrap_or_else(|| panic!("no basis vector labelled {label:?}"));
        self.basis(i)
    }

    pub fn element(&self, coords: Vec<S>) -> Result<Element<S>> {
        if coords.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: coords.len() });
        }
        Ok(Element { coords, parent: self.id })
    }

    pub fn zero(&self) -> Element<S> {
        Element { coords: vec![S::zero(); self.dim], parent: self.id }
    }

    /// Linear combination `sum coeff * e_label`.
    pub fn combo(&self, terms: &[(S, &str)]) -> Element<S> {
        let mut coords = vec![S::zero(); self.dim];
        for (c, label) in terms {
            let i = self.index_of(label).unwrap_or_else(|| panic!("no basis vector labelled {label:?}"));
            coords[i] = coords[i].clone() + c.clone();
        }
        Element { coords, parent: self.id }
    }

    fn owns(&self, x: &Element<S>) -> Result<()> {
        if x.parent != self.id {
            return Err(Error::ParentMismatch);
        }
        if x.coords.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: x.coords.len() });
        }
        Ok(())
    }

    /// Bilinear contraction of the structure constants with `a` and `b`.
    pub fn mul(&self, a: &Element<S>, b: &Element<S>) -> Result<Element<S>> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(Element { coords: self.mul_coords(&a.coords, &b.coords), parent: self.id })
    }

    pub(crate) fn mul_coords(&self, a: &[S], b: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let w = ai.clone() * bj.clone();
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn square(&self, x: &Element<S>) -> Result<Element<S>> {
        self.mul(x, x)
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, x: &Element<S>, y: &Element<S>, z: &Element<S>) -> Result<Element<S>> {
        let left = self.mul(&self.mul(x, y)?, z)?;
        let right = self.mul(x, &self.mul(y, z)?)?;
        left.sub(&right)
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        self.mul(x, y)?.sub(&self.mul(y, x)?)
    }

    pub fn mul_operator(&self, a: &Element<S>, side: Side) -> Result<MulOperator<S>> {
        self.owns(a)?;
        let cols: Vec<Vec<S>> = (0..self.dim)
            .map(|j| {
                let mut e = vec![S::zero(); self.dim];
                e[j] = S::one();
                match side {
                    Side::Left => self.mul_coords(&a.coords, &e),
                    Side::Right => self.mul_coords(&e, &a.coords),
                }
            })
            .collect();
        Ok(MulOperator { side, matrix: Matrix::from_cols(&cols) })
    }

    /// Same table in float mode with tolerance `eps`.
    pub fn to_float(&self, eps: f64) -> Algebra<f64> {
        Algebra {
            id: AlgebraId::fresh(),
            dim: self.dim,
            sc: self.sc.iter().map(Scalar::to_f64).collect(),
            labels: self.labels.clone(),
            unit: self.unit.as_ref().map(|u| u.iter().map(Scalar::to_f64).collect()),
            eps,
        }
    }

    /// Re-tags an element of a structurally identical algebra (e.g. the
    /// float copy) as belonging to `self`.
    pub fn adopt(&self, coords: &[S]) -> Result<Element<S>> {
        self.element(coords.to_vec())
    }

    /// `true` when `c[i][j][k] = c[j][i][k]` for all indices.
    pub fn is_table_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}
