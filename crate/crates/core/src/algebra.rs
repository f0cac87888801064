//! Finite-dimensional associative unital algebras given by structure constants.

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, unit_vec, zero_vec, Matrix, Subspace};
use crate::report::Report;

/// `e_i · e_j = Σ_k m[i][j][k] e_k`, stored sparsely per basis pair.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteAlgebra<F> {
    dim: usize,
    table: Vec<Vec<(usize, F)>>,
    unit: Vec<F>,
}

impl<F: Field> FiniteAlgebra<F> {
    /// Builds an algebra from a dense `dim × dim × dim` tensor.
    pub fn new(dim: usize, mult: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("algebra dimension must be positive".into()));
        }
        if mult.len() != dim {
            return Err(Error::Shape(format!(
                "mult has {} slices, expected {dim}",
                mult.len()
            )));
        }
        check_dim(dim, unit.len())?;
        let mut table = Vec::with_capacity(dim * dim);
        for (i, slice) in mult.into_iter().enumerate() {
            if slice.len() != dim {
                return Err(Error::Shape(format!(
                    "mult[{i}] has length {}",
                    slice.len()
                )));
            }
            for (j, row) in slice.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::Shape(format!(
                        "mult[{i}][{j}] has length {}",
                        row.len()
                    )));
                }
                table.push(
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        Ok(FiniteAlgebra { dim, table, unit })
    }

    /// Builds an algebra from a closure giving the product of two basis vectors.
    pub fn from_products<P>(dim: usize, unit: Vec<F>, mut product: P) -> Result<Self>
    where
        P: FnMut(usize, usize) -> Vec<F>,
    {
        check_dim(dim, unit.len())?;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                check_dim(dim, v.len())?;
                table.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        Ok(FiniteAlgebra { dim, table, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// Nonzero structure constants of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_product_vec(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim);
        for (k, c) in self.basis_product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Dense structure tensor `m[i][j][k]`.
    pub fn mult_tensor(&self) -> Vec<Vec<Vec<F>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.basis_product_vec(i, j))
                    .collect()
            })
            .collect()
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        check_dim(self.dim, x.len())?;
        check_dim(self.dim, y.len())?;
        Ok(self.mul(x, y))
    }

    /// Product without length checks.
    pub(crate) fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut ab = a.clone();
                ab *= b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_product(&ab, c);
                }
            }
        }
        out
    }

    pub(crate) fn mul_basis_left(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim);
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k].add_product(b, c);
            }
        }
        out
    }

    pub(crate) fn mul_basis_right(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                out[*k].add_product(a, c);
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|i| self.mul_basis_left(i, x)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Checks associativity on every basis triple and both unit laws on every
    /// basis vector.
    pub fn validate(&self) -> Report<F> {
        let n = self.dim;
        let mut report = Report::new();
        report.declare("associativity");
        report.declare("left_unit");
        report.declare("right_unit");
        let parts: Vec<Report<F>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut r = Report::new();
                for j in 0..n {
                    let ij = self.basis_product_vec(i, j);
                    for k in 0..n {
                        let lhs = self.mul_basis_right(&ij, k);
                        let jk = self.basis_product_vec(j, k);
                        let rhs = self.mul_basis_left(i, &jk);
                        r.compare("associativity", &[i, j, k], lhs, rhs);
                    }
                }
                r
            })
            .collect();
        for p in parts {
            report.merge(p);
        }
        for i in 0..n {
            let e = unit_vec(n, i);
            report.compare("left_unit", &[i], self.mul(&self.unit, &e), e.clone());
            report.compare("right_unit", &[i], self.mul(&e, &self.unit), e);
        }
        report
    }

    /// Solution space of `x·e_i − e_i·x = 0` for every basis vector `e_i`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim;
        let blocks: Vec<Matrix<F>> = (0..n)
            .map(|i| {
                let e = unit_vec(n, i);
                self.right_mult_matrix(&e).sub(&self.left_mult_matrix(&e))
            })
            .collect();
        let refs: Vec<&Matrix<F>> = blocks.iter().collect();
        Matrix::vstack(&refs).expect("equal widths").kernel()
    }

    /// Whether every basis vector of `s` commutes with every basis vector of `t`.
    pub fn centralizes(&self, s: &Subspace<F>, t: &Subspace<F>) -> Result<bool> {
        check_dim(self.dim, s.ambient_dim())?;
        check_dim(self.dim, t.ambient_dim())?;
        let tb = t.basis();
        Ok(s.basis()
            .iter()
            .all(|x| tb.iter().all(|y| self.mul(x, y) == self.mul(y, x))))
    }

    /// Trace form `(x, y) ↦ tr(L_x L_y)` on basis vectors.
    fn trace_form(&self) -> Matrix<F> {
        let n = self.dim;
        let lefts: Vec<Matrix<F>> = (0..n)
            .map(|i| self.left_mult_matrix(&unit_vec(n, i)))
            .collect();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let p = lefts[i].mul(&lefts[j]);
                let mut tr = F::zero();
                for d in 0..n {
                    tr += p.get(d, d);
                }
                g.set(i, j, tr);
            }
        }
        g
    }

    /// Jacobson radical via Dickson's trace-form criterion (characteristic 0).
    ///
    /// The kernel `K` of the trace form is cut down to the largest left ideal
    /// `{x : a·x ∈ K for all a}` and then checked to be a two-sided ideal.
    pub fn jacobson_radical(&self) -> Result<Subspace<F>> {
        let n = self.dim;
        let kernel = self.trace_form().kernel();
        let mut radical = kernel.clone();
        for i in 0..n {
            let li = self.left_mult_matrix(&unit_vec(n, i));
            radical = radical.intersect(&kernel.preimage(&li)?)?;
        }
        if !self.is_two_sided_ideal(&radical)? {
            return Err(Error::InvariantViolation(
                "trace-form radical is not a two-sided ideal".into(),
            ));
        }
        Ok(radical)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> Result<bool> {
        check_dim(self.dim, s.ambient_dim())?;
        for r in s.basis() {
            for i in 0..self.dim {
                if !s.contains(&self.mul_basis_left(i, &r))?
                    || !s.contains(&self.mul_basis_right(&r, i))?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Span of all `n`-fold products of basis vectors of `s`.
    pub fn subspace_power(&self, s: &Subspace<F>, n: usize) -> Result<Subspace<F>> {
        check_dim(self.dim, s.ambient_dim())?;
        if n == 0 {
            return Err(Error::Precondition(
                "subspace power requires n >= 1; use the unit span for n = 0".into(),
            ));
        }
        let base = s.basis();
        let mut current = s.clone();
        for _ in 1..n {
            if current.is_zero() {
                break;
            }
            let mut products = Vec::new();
            for p in current.basis() {
                for b in &base {
                    products.push(self.mul(&p, b));
                }
            }
            current = Subspace::span(self.dim, products)?;
        }
        Ok(current)
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        FiniteAlgebra::from_products(n, self.unit.clone(), |i, j| self.basis_product_vec(j, i))
            .expect("same shape")
    }

    /// Closed under multiplication and contains the unit.
    pub fn is_unital_subalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        check_dim(self.dim, s.ambient_dim())?;
        if !s.contains(&self.unit)? {
            return Ok(false);
        }
        let b = s.basis();
        for x in &b {
            for y in &b {
                if !s.contains(&self.mul(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The unital subalgebra `s` as an algebra in its own right, with basis the
    /// canonical basis of `s`.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_unital_subalgebra(s)? {
            return Err(Error::Precondition(
                "subspace is not a unital subalgebra".into(),
            ));
        }
        let b = s.basis();
        let coords = |v: Vec<F>| s.coordinates(&v).map(|c| c.expect("closed"));
        let unit = coords(self.unit.clone())?;
        let mut table = Vec::with_capacity(b.len() * b.len());
        for x in &b {
            for y in &b {
                let c = coords(self.mul(x, y))?;
                table.push(
                    c.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        Ok(FiniteAlgebra {
            dim: b.len(),
            table,
            unit,
        })
    }

    /// Product in `A ⊗ A` under the crate-wide index convention.
    pub(crate) fn mul_tensor2(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = zero_vec::<F>(n * n);
        for (p, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i, j) = (p / n, p % n);
            for (q, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (k, l) = (q / n, q % n);
                let mut ab = a.clone();
                ab *= b;
                for (s, c1) in self.basis_product(i, k) {
                    let mut t = ab.clone();
                    t *= c1;
                    for (r, c2) in self.basis_product(j, l) {
                        out[s * n + r].add_product(&t, c2);
                    }
                }
            }
        }
        out
    }

    pub(crate) fn scaled_unit(&self, c: &F) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim);
        axpy(&mut out, c, &self.unit);
        out
    }
}
