//! Dense exact linear algebra: matrices, reduced row-echelon form, kernels,
//! affine solving, Kronecker products and canonical subspaces.
//!
//! Tensor index convention, fixed crate-wide: the basis vector `e_i ⊗ e_j` of
//! `U ⊗ V` sits at coordinate `i * dim V + j`.

use std::fmt;

use crate::error::{check_dim, Result};
use crate::field::Field;

pub fn zero_vec<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = zero_vec::<F>(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += c * v`
pub fn axpy<F: Field>(acc: &mut [F], c: &F, v: &[F]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_product(c, x);
    }
}

pub fn scaled<F: Field>(c: &F, v: &[F]) -> Vec<F> {
    v.iter()
        .map(|x| {
            let mut t = x.clone();
            t *= c;
            t
        })
        .collect()
}

pub fn vec_add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let mut t = x.clone();
            t += y;
            t
        })
        .collect()
}

pub fn vec_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let mut t = x.clone();
            t -= y;
            t
        })
        .collect()
}

/// Tensor product of two vectors under the crate-wide index convention.
pub fn tensor_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = zero_vec::<F>(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let mut t = x.clone();
                t *= y;
                out[i * b.len() + j] = t;
            }
        }
    }
    out
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        check_dim(rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a `rows × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            check_dim(rows, c.len())?;
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: F) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    out.data[r * other.cols + c].add_product(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = zero_vec::<F>(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                o.add_product(self.get(r, c), x);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scaled(c, &self.data),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        (0..n).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Kronecker product; row `(i, k)` maps to `i * b.rows + k`, column `(j, l)`
    /// to `j * b.cols + l`.
    pub fn kron(&self, b: &Self) -> Self {
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let x = b.get(k, l);
                        if !x.is_zero() {
                            let mut t = a.clone();
                            t *= x;
                            out.data[(i * b.rows + k) * cols + j * b.cols + l] = t;
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Self]) -> Result<Self> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            check_dim(cols, m.cols)?;
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Reduced row-echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(found) = (pr..rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if found != pr {
                for j in 0..cols {
                    self.data.swap(found * cols + j, pr * cols + j);
                }
            }
            let inv = self.get(pr, c).recip().expect("nonzero pivot");
            for j in c..cols {
                self.data[pr * cols + j] *= &inv;
            }
            let pivot_row: Vec<F> = self.row(pr).to_vec();
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, p) in pivot_row.iter().enumerate().skip(c) {
                    if p.is_zero() {
                        continue;
                    }
                    let mut t = factor.clone();
                    t *= p;
                    self.data[r * cols + j] -= &t;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<F>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = unit_vec(self.cols, free);
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, free).clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors_unchecked(self.cols, vectors)
    }

    pub fn image(&self) -> Subspace<F> {
        Subspace::from_vectors_unchecked(self.rows, self.columns())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, F::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// Solution set of `A·x = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution<F> {
    /// A particular solution with all free variables set to zero, if consistent.
    pub particular: Option<Vec<F>>,
    pub homogeneous: Subspace<F>,
}

pub fn solve_affine<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<AffineSolution<F>> {
    check_dim(a.rows(), b.len())?;
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..n {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, n, br.clone());
    }
    let pivots = aug.rref_in_place();
    let particular = if pivots.last() == Some(&n) {
        None
    } else {
        let mut x = zero_vec::<F>(n);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, n).clone();
        }
        Some(x)
    };
    Ok(AffineSolution {
        particular,
        homogeneous: a.kernel(),
    })
}

/// A linear subspace of `F^n`, stored as its reduced row-echelon basis.
///
/// The representative is canonical, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}; pivots {:?})",
            self.pivots.len(),
            self.ambient,
            self.pivots
        )
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<F>>,
    {
        let vectors: Vec<Vec<F>> = vectors.into_iter().collect();
        for v in &vectors {
            check_dim(ambient, v.len())?;
        }
        Ok(Self::from_vectors_unchecked(ambient, vectors))
    }

    pub(crate) fn from_vectors_unchecked(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let n = vectors.len();
        let mut data = Vec::with_capacity(n * ambient);
        for v in vectors {
            data.extend(v);
        }
        let mut m = Matrix {
            rows: n,
            cols: ambient,
            data,
        };
        let pivots = m.rref_in_place();
        m.data.truncate(pivots.len() * ambient);
        m.rows = pivots.len();
        Subspace {
            ambient,
            basis: m,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> Vec<Vec<F>> {
        self.basis.to_rows()
    }

    pub fn basis_matrix(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not pivotal for this subspace; their unit vectors span the
    /// canonical complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot
    /// coordinate and is the canonical representative of `v`'s class in the
    /// quotient.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = -w[p].clone();
            axpy(&mut w, &c, self.basis.row(i));
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        Ok(is_zero_vec(&self.reduce(v)))
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        for r in 0..self.basis.rows() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        let mut vs = self.basis();
        vs.extend(other.basis());
        Ok(Self::from_vectors_unchecked(self.ambient, vs))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim(self.ambient, other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{φ : φ(s) = 0 for all s}` in the dual space, identified with `F^n`
    /// through the dual basis.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// Image under a linear map given by its matrix.
    pub fn map(&self, m: &Matrix<F>) -> Result<Self> {
        check_dim(self.ambient, m.cols())?;
        Ok(Self::from_vectors_unchecked(
            m.rows(),
            self.basis().iter().map(|v| m.mul_vec(v)).collect(),
        ))
    }

    /// `{x : m·x ∈ self}`.
    pub fn preimage(&self, m: &Matrix<F>) -> Result<Self> {
        check_dim(self.ambient, m.rows())?;
        let ann = self.annihilator();
        if ann.is_zero() {
            return Ok(Self::full(m.cols()));
        }
        Ok(ann.basis.mul(m).kernel())
    }

    /// The subspace spanned by `a ⊗ b` for `a ∈ self`, `b ∈ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for a in self.basis() {
            for b in other.basis() {
                vs.push(tensor_vec(&a, &b));
            }
        }
        Self::from_vectors_unchecked(self.ambient * other.ambient, vs)
    }
}
