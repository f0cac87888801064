//! Finite-dimensional coalgebras, their dual algebras and the coradical
//! filtration.

use std::collections::BTreeMap;

use crate::algebra::FiniteAlgebra;
use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{unit_vec, zero_vec, Matrix, Subspace};
use crate::report::Report;

/// `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k` with counit covector `ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteCoalgebra<F> {
    dim: usize,
    table: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
}

/// Sparse element of a tensor power: basis-index tuple and coefficient.
pub type TensorTerms<F> = Vec<(Vec<usize>, F)>;

impl<F: Field> FiniteCoalgebra<F> {
    pub fn new(dim: usize, comult: Vec<Vec<Vec<F>>>, counit: Vec<F>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("coalgebra dimension must be positive".into()));
        }
        if comult.len() != dim {
            return Err(Error::Shape(format!(
                "comult has {} slices, expected {dim}",
                comult.len()
            )));
        }
        check_dim(dim, counit.len())?;
        let mut table = Vec::with_capacity(dim);
        for (i, slice) in comult.into_iter().enumerate() {
            if slice.len() != dim {
                return Err(Error::Shape(format!(
                    "comult[{i}] has length {}",
                    slice.len()
                )));
            }
            let mut terms = Vec::new();
            for (j, row) in slice.into_iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::Shape(format!(
                        "comult[{i}][{j}] has length {}",
                        row.len()
                    )));
                }
                terms.extend(
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (j, k, c)),
                );
            }
            table.push(terms);
        }
        Ok(FiniteCoalgebra { dim, table, counit })
    }

    /// Builds a coalgebra from a closure giving `Δ(e_i)` as a vector of length `dim²`.
    pub fn from_coproducts<P>(dim: usize, counit: Vec<F>, mut coproduct: P) -> Result<Self>
    where
        P: FnMut(usize) -> Vec<F>,
    {
        check_dim(dim, counit.len())?;
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let v = coproduct(i);
            check_dim(dim * dim, v.len())?;
            table.push(
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(p, c)| (p / dim, p % dim, c))
                    .collect(),
            );
        }
        Ok(FiniteCoalgebra { dim, table, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        let mut s = F::zero();
        for (a, b) in x.iter().zip(&self.counit) {
            s.add_product(a, b);
        }
        s
    }

    /// Nonzero terms `(j, k, d[i][j][k])` of `Δ(e_i)`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, F)] {
        &self.table[i]
    }

    pub fn comultiply(&self, x: &[F]) -> Result<Vec<F>> {
        check_dim(self.dim, x.len())?;
        Ok(self.delta(x))
    }

    pub(crate) fn delta(&self, x: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = zero_vec::<F>(n * n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.table[i] {
                out[j * n + k].add_product(a, c);
            }
        }
        out
    }

    pub fn comult_tensor(&self) -> Vec<Vec<Vec<F>>> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut slice = vec![zero_vec(n); n];
                for (j, k, c) in &self.table[i] {
                    slice[*j][*k] = c.clone();
                }
                slice
            })
            .collect()
    }

    /// The `dim² × dim` matrix of `Δ`.
    pub fn comult_matrix(&self) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|i| self.delta(&unit_vec(self.dim, i)))
            .collect();
        Matrix::from_columns(self.dim * self.dim, &cols).expect("shape")
    }

    pub fn counit_matrix(&self) -> Matrix<F> {
        Matrix::new(1, self.dim, self.counit.clone()).expect("shape")
    }

    /// `Δ^{factors-1}(e_i)` as sparse terms over `factors`-tuples of basis indices.
    pub fn iterated_coproduct(&self, i: usize, factors: usize) -> TensorTerms<F> {
        assert!(factors >= 1);
        let mut terms: BTreeMap<Vec<usize>, F> = BTreeMap::new();
        terms.insert(vec![i], F::one());
        for _ in 1..factors {
            let mut next: BTreeMap<Vec<usize>, F> = BTreeMap::new();
            for (idx, c) in terms {
                let last = *idx.last().expect("nonempty");
                for (j, k, d) in &self.table[last] {
                    let mut key = idx[..idx.len() - 1].to_vec();
                    key.push(*j);
                    key.push(*k);
                    next.entry(key).or_insert_with(F::zero).add_product(&c, d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        terms.into_iter().collect()
    }

    /// Checks coassociativity and both counit laws on every basis vector.
    pub fn validate(&self) -> Report<F> {
        let n = self.dim;
        let mut report = Report::new();
        report.declare("coassociativity");
        report.declare("left_counit");
        report.declare("right_counit");
        let delta = self.comult_matrix();
        let id = Matrix::identity(n);
        let left = delta.kron(&id).mul(&delta);
        let right = id.kron(&delta).mul(&delta);
        let eps = self.counit_matrix();
        let counit_left = eps.kron(&id).mul(&delta);
        let counit_right = id.kron(&eps).mul(&delta);
        for i in 0..n {
            report.compare("coassociativity", &[i], left.column(i), right.column(i));
            report.compare("left_counit", &[i], counit_left.column(i), unit_vec(n, i));
            report.compare("right_counit", &[i], counit_right.column(i), unit_vec(n, i));
        }
        report
    }

    /// Algebra structure on the dual basis: `m[i][j][k] = d[k][i][j]`, unit `ε`.
    pub fn dual_algebra(&self) -> FiniteAlgebra<F> {
        let n = self.dim;
        let mut mult = vec![vec![zero_vec(n); n]; n];
        for (k, terms) in self.table.iter().enumerate() {
            for (i, j, c) in terms {
                mult[*i][*j][k] = c.clone();
            }
        }
        FiniteAlgebra::new(n, mult, self.counit.clone()).expect("shape")
    }

    /// Same counit, comultiplication composed with the tensor flip.
    pub fn coopposite(&self) -> Self {
        FiniteCoalgebra {
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|t| t.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect())
                .collect(),
            counit: self.counit.clone(),
        }
    }

    pub fn is_subcoalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        check_dim(self.dim, s.ambient_dim())?;
        let ss = s.tensor(s);
        for b in s.basis() {
            if !ss.contains(&self.delta(&b))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The subcoalgebra `s` as a coalgebra on its canonical basis.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_subcoalgebra(s)? {
            return Err(Error::Precondition("subspace is not a subcoalgebra".into()));
        }
        let pivots = s.pivots();
        let n = self.dim;
        let table = s
            .basis()
            .iter()
            .map(|b| {
                let d = self.delta(b);
                let mut terms = Vec::new();
                for (a, &pa) in pivots.iter().enumerate() {
                    for (c, &pc) in pivots.iter().enumerate() {
                        let x = &d[pa * n + pc];
                        if !x.is_zero() {
                            terms.push((a, c, x.clone()));
                        }
                    }
                }
                terms
            })
            .collect();
        let counit = s.basis().iter().map(|b| self.counit_of(b)).collect();
        Ok(FiniteCoalgebra {
            dim: s.dim(),
            table,
            counit,
        })
    }

    /// Coradical, as the annihilator of the Jacobson radical of the dual algebra.
    pub fn coradical(&self) -> Result<Subspace<F>> {
        Ok(self.dual_algebra().jacobson_radical()?.annihilator())
    }

    /// `C_n = Δ^{-1}(C ⊗ C_{n-1} + C_0 ⊗ C)`, iterated until it reaches `C`.
    pub fn coradical_filtration(&self) -> Result<CoradicalFiltration<F>> {
        let n = self.dim;
        let c0 = self.coradical()?;
        let full = Subspace::full(n);
        let delta = self.comult_matrix();
        let c0_left = c0.tensor(&full);
        let mut layers = vec![c0];
        while !layers.last().expect("nonempty").is_full() {
            let prev = layers.last().expect("nonempty");
            let target = full.tensor(prev).sum(&c0_left)?;
            let next = target.preimage(&delta)?;
            if &next == prev {
                return Err(Error::InvariantViolation(format!(
                    "coradical filtration stabilised at dimension {} < {n}",
                    next.dim()
                )));
            }
            layers.push(next);
        }
        Ok(CoradicalFiltration { layers })
    }

    /// Compares the filtration against the dual chain `(J^{n+1})^⊥`, with
    /// `J` the radical of the dual algebra.
    pub fn filtration_crosscheck(&self) -> Result<bool> {
        let filtration = self.coradical_filtration()?;
        let dual = self.dual_algebra();
        let radical = dual.jacobson_radical()?;
        for (n, layer) in filtration.layers().iter().enumerate() {
            let power = dual.subspace_power(&radical, n + 1)?;
            if &power.annihilator() != layer {
                return Ok(false);
            }
        }
        // the dual chain must also stop growing exactly at the last layer
        let beyond = dual.subspace_power(&radical, filtration.length() + 1)?;
        Ok(beyond.is_zero())
    }
}

/// `C_0 ⊆ C_1 ⊆ … ⊆ C_L = C`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoradicalFiltration<F> {
    layers: Vec<Subspace<F>>,
}

impl<F: Field> CoradicalFiltration<F> {
    pub fn layers(&self) -> &[Subspace<F>] {
        &self.layers
    }

    pub fn coradical(&self) -> &Subspace<F> {
        &self.layers[0]
    }

    /// `L`, the index of the first layer equal to the whole coalgebra.
    pub fn length(&self) -> usize {
        self.layers.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn grouplike(n: usize) -> FiniteCoalgebra<Scalar> {
        FiniteCoalgebra::from_coproducts(n, vec![q(1); n], |i| {
            let mut v = zero_vec::<Scalar>(n * n);
            v[i * n + i] = q(1);
            v
        })
        .unwrap()
    }

    #[test]
    fn grouplike_is_valid_and_cosemisimple() {
        let c = grouplike(3);
        assert!(c.validate().is_ok());
        let f = c.coradical_filtration().unwrap();
        assert_eq!(f.length(), 0);
        assert!(f.coradical().is_full());
        assert!(c.filtration_crosscheck().unwrap());
    }

    #[test]
    fn bad_counit_is_reported_at_index_zero() {
        let c = FiniteCoalgebra::from_coproducts(2, vec![q(1), q(1)], |i| {
            let mut v = zero_vec::<Scalar>(4);
            v[i * 2 + i] = if i == 0 { q(2) } else { q(1) };
            v
        })
        .unwrap();
        let report = c.validate();
        let v = report.first_violation("left_counit").unwrap();
        assert_eq!(v.indices, vec![0]);
        assert_eq!(v.lhs, vec![q(2), q(0)]);
        // both iterated coproducts of e_0 are 4 e_0⊗e_0⊗e_0
        assert!(report.passed("coassociativity"));
    }

    #[test]
    fn sweedler_two_dim() {
        let c = corpus::sw2::<Scalar>();
        assert!(c.validate().is_ok());
        let dual = c.dual_algebra();
        // x*·x* = 0
        let xs = unit_vec(2, 1);
        assert_eq!(dual.multiply(&xs, &xs).unwrap(), zero_vec(2));
        assert_eq!(dual.unit(), c.counit());
        let r = dual.jacobson_radical().unwrap();
        assert_eq!(r, Subspace::span(2, vec![xs]).unwrap());

        let f = c.coradical_filtration().unwrap();
        assert_eq!(f.length(), 1);
        assert_eq!(
            f.coradical(),
            &Subspace::span(2, vec![unit_vec(2, 0)]).unwrap()
        );
        assert!(c.filtration_crosscheck().unwrap());
    }

    #[test]
    fn dual_of_grouplike_is_diagonal() {
        let d = grouplike(3).dual_algebra();
        let x = vec![q(1), q(2), q(3)];
        let y = vec![q(4), q(5), q(6)];
        assert_eq!(d.multiply(&x, &y).unwrap(), vec![q(4), q(10), q(18)]);
    }

    #[test]
    fn sweedler_four_dim_coradical() {
        let h = corpus::h4::<Scalar>();
        let f = h.coalgebra().coradical_filtration().unwrap();
        assert_eq!(f.length(), 1);
        assert_eq!(
            f.coradical(),
            &Subspace::span(4, vec![unit_vec(4, 0), unit_vec(4, 1)]).unwrap()
        );
        assert!(h.coalgebra().filtration_crosscheck().unwrap());
    }

    #[test]
    fn restriction_to_coradical() {
        let c = corpus::sw2::<Scalar>();
        let c0 = c.coradical().unwrap();
        let r = c.restrict(&c0).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.validate().is_ok());
        assert!(c
            .restrict(&Subspace::span(2, vec![unit_vec(2, 1)]).unwrap())
            .is_err());
    }

    #[test]
    fn iterated_coproduct_of_x() {
        let c = corpus::sw2::<Scalar>();
        // Δ²(x) = x⊗g⊗g + g⊗x⊗g + g⊗g⊗x
        let t = c.iterated_coproduct(1, 3);
        assert_eq!(
            t,
            vec![
                (vec![0, 0, 1], q(1)),
                (vec![0, 1, 0], q(1)),
                (vec![1, 0, 0], q(1)),
            ]
        );
    }
}
