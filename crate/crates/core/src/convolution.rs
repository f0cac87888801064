//! The convolution algebra `Hom(C, A)` and `(e, f)`-invertibility.
//!
//! A map `C → A` is represented by its `dim A × dim C` matrix; column `c`
//! is the image of the basis vector `e_c`.

use crate::algebra::FiniteAlgebra;
use crate::coalgebra::FiniteCoalgebra;
use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, solve_affine, unit_vec, zero_vec, AffineSolution, Matrix, Subspace};
use crate::report::Report;

pub type ConvMap<F> = Matrix<F>;

/// `u v = e`, `v u = f`, `u f = u`, `f v = v` for nonzero idempotents `e`, `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct EFWitness<F> {
    pub u: ConvMap<F>,
    pub v: ConvMap<F>,
    pub e: ConvMap<F>,
    pub f: ConvMap<F>,
}

/// `Hom(source, target)` with the convolution product `(p ∗ q)(c) = p(c_1) q(c_2)`.
#[derive(Debug, Clone, Copy)]
pub struct Convolution<'a, F> {
    source: &'a FiniteCoalgebra<F>,
    target: &'a FiniteAlgebra<F>,
}

impl<'a, F: Field> Convolution<'a, F> {
    pub fn new(source: &'a FiniteCoalgebra<F>, target: &'a FiniteAlgebra<F>) -> Self {
        Convolution { source, target }
    }

    pub fn source(&self) -> &'a FiniteCoalgebra<F> {
        self.source
    }

    pub fn target(&self) -> &'a FiniteAlgebra<F> {
        self.target
    }

    fn check(&self, m: &ConvMap<F>) -> Result<()> {
        check_dim(self.target.dim(), m.rows())?;
        check_dim(self.source.dim(), m.cols())
    }

    pub fn zero(&self) -> ConvMap<F> {
        Matrix::zeros(self.target.dim(), self.source.dim())
    }

    /// The unit `x ↦ ε(x) 1_A`.
    pub fn unit(&self) -> ConvMap<F> {
        let cols: Vec<Vec<F>> = self
            .source
            .counit()
            .iter()
            .map(|c| self.target.scaled_unit(c))
            .collect();
        Matrix::from_columns(self.target.dim(), &cols).expect("shape")
    }

    pub fn convolve(&self, p: &ConvMap<F>, q: &ConvMap<F>) -> Result<ConvMap<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.conv(p, q))
    }

    pub(crate) fn conv(&self, p: &ConvMap<F>, q: &ConvMap<F>) -> ConvMap<F> {
        let pc = p.columns();
        let qc = q.columns();
        let cols: Vec<Vec<F>> = (0..self.source.dim())
            .map(|c| {
                let mut out = zero_vec::<F>(self.target.dim());
                for (j, k, d) in self.source.coproduct_terms(c) {
                    let prod = self.target.mul(&pc[*j], &qc[*k]);
                    axpy(&mut out, d, &prod);
                }
                out
            })
            .collect();
        Matrix::from_columns(self.target.dim(), &cols).expect("shape")
    }

    /// Convolution product of a nonempty sequence of maps.
    pub fn product(&self, maps: &[&ConvMap<F>]) -> Result<ConvMap<F>> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::Precondition("empty convolution product".into()))?;
        self.check(first)?;
        let mut acc = (*first).clone();
        for m in rest {
            self.check(m)?;
            acc = self.conv(&acc, m);
        }
        Ok(acc)
    }

    /// `γ^n` for `n >= 1`; `n = 0` gives the convolution unit.
    pub fn power(&self, g: &ConvMap<F>, n: usize) -> Result<ConvMap<F>> {
        self.check(g)?;
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.conv(&acc, g);
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self, e: &ConvMap<F>) -> Result<bool> {
        Ok(&self.convolve(e, e)? == e)
    }

    /// Restriction of a map to the subspace `s`, on the canonical basis of `s`.
    pub fn restrict(&self, m: &ConvMap<F>, s: &Subspace<F>) -> Result<ConvMap<F>> {
        self.check(m)?;
        check_dim(self.source.dim(), s.ambient_dim())?;
        Ok(m.mul(&s.basis_matrix().transpose()))
    }

    /// Verifies every witness identity, including the derived `v e = v` and
    /// `e u = u`, and that `e`, `f` are nonzero idempotents.
    pub fn check_witness(&self, w: &EFWitness<F>) -> Result<Report<F>> {
        for m in [&w.u, &w.v, &w.e, &w.f] {
            self.check(m)?;
        }
        let mut report = Report::new();
        let flat = |m: ConvMap<F>| m.into_data();
        report.require("e_nonzero", &[], !w.e.is_zero());
        report.require("f_nonzero", &[], !w.f.is_zero());
        report.compare(
            "e_idempotent",
            &[],
            flat(self.conv(&w.e, &w.e)),
            flat(w.e.clone()),
        );
        report.compare(
            "f_idempotent",
            &[],
            flat(self.conv(&w.f, &w.f)),
            flat(w.f.clone()),
        );
        report.compare(
            "uv_eq_e",
            &[],
            flat(self.conv(&w.u, &w.v)),
            flat(w.e.clone()),
        );
        report.compare(
            "vu_eq_f",
            &[],
            flat(self.conv(&w.v, &w.u)),
            flat(w.f.clone()),
        );
        report.compare(
            "uf_eq_u",
            &[],
            flat(self.conv(&w.u, &w.f)),
            flat(w.u.clone()),
        );
        report.compare(
            "fv_eq_v",
            &[],
            flat(self.conv(&w.f, &w.v)),
            flat(w.v.clone()),
        );
        report.compare(
            "ve_eq_v",
            &[],
            flat(self.conv(&w.v, &w.e)),
            flat(w.v.clone()),
        );
        report.compare(
            "eu_eq_u",
            &[],
            flat(self.conv(&w.e, &w.u)),
            flat(w.u.clone()),
        );
        Ok(report)
    }

    /// Matrix of `v ↦ p ∗ v` on row-major flattened maps.
    fn left_operator(&self, p: &ConvMap<F>) -> Matrix<F> {
        let (da, dc) = (self.target.dim(), self.source.dim());
        let pc = p.columns();
        let mut m = Matrix::<F>::zeros(da * dc, da * dc);
        for c in 0..dc {
            for (j, k, d) in self.source.coproduct_terms(c) {
                for a in 0..da {
                    let w = self.target.mul_basis_right(&pc[*j], a);
                    for (r, x) in w.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let entry = m.get(r * dc + c, a * dc + k).clone();
                        let mut t = d.clone();
                        t *= x;
                        m.set(r * dc + c, a * dc + k, entry + t);
                    }
                }
            }
        }
        m
    }

    /// Matrix of `v ↦ v ∗ p` on row-major flattened maps.
    fn right_operator(&self, p: &ConvMap<F>) -> Matrix<F> {
        let (da, dc) = (self.target.dim(), self.source.dim());
        let pc = p.columns();
        let mut m = Matrix::<F>::zeros(da * dc, da * dc);
        for c in 0..dc {
            for (j, k, d) in self.source.coproduct_terms(c) {
                for a in 0..da {
                    let w = self.target.mul_basis_left(a, &pc[*k]);
                    for (r, x) in w.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let entry = m.get(r * dc + c, a * dc + j).clone();
                        let mut t = d.clone();
                        t *= x;
                        m.set(r * dc + c, a * dc + j, entry + t);
                    }
                }
            }
        }
        m
    }

    fn check_preconditions(&self, u: &ConvMap<F>, e: &ConvMap<F>, f: &ConvMap<F>) -> Result<()> {
        for m in [u, e, f] {
            self.check(m)?;
        }
        if e.is_zero() || f.is_zero() {
            return Err(Error::Precondition("e and f must be nonzero".into()));
        }
        if !self.is_idempotent(e)? || !self.is_idempotent(f)? {
            return Err(Error::Precondition(
                "e and f must be convolution idempotents".into(),
            ));
        }
        if &self.conv(e, u) != u {
            return Err(Error::Precondition("e * u != u".into()));
        }
        if &self.conv(u, f) != u {
            return Err(Error::Precondition("u * f != u".into()));
        }
        Ok(())
    }

    /// Solution set of `u ∗ v = e`, `v ∗ u = f`, `f ∗ v = v` in the entries of `v`
    /// (row-major). No preconditions are checked.
    pub fn inverse_system(
        &self,
        u: &ConvMap<F>,
        e: &ConvMap<F>,
        f: &ConvMap<F>,
    ) -> Result<AffineSolution<F>> {
        for m in [u, e, f] {
            self.check(m)?;
        }
        let n = self.target.dim() * self.source.dim();
        let left = self.left_operator(u);
        let right = self.right_operator(u);
        let fix = self.left_operator(f).sub(&Matrix::identity(n));
        let system = Matrix::vstack(&[&left, &right, &fix])?;
        let mut rhs = e.data().to_vec();
        rhs.extend_from_slice(f.data());
        rhs.extend(zero_vec::<F>(n));
        solve_affine(&system, &rhs)
    }

    /// The `(e, f)`-inverse of `u` by a direct linear solve, or `None` if `u`
    /// is not `(e, f)`-invertible.
    pub fn ef_inverse_solve(
        &self,
        u: &ConvMap<F>,
        e: &ConvMap<F>,
        f: &ConvMap<F>,
    ) -> Result<Option<ConvMap<F>>> {
        self.check_preconditions(u, e, f)?;
        let sol = self.inverse_system(u, e, f)?;
        let Some(x) = sol.particular else {
            return Ok(None);
        };
        if !sol.homogeneous.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "(e,f)-inverse system has a {}-dimensional solution space",
                sol.homogeneous.dim()
            )));
        }
        let v = Matrix::new(self.target.dim(), self.source.dim(), x)?;
        let w = EFWitness {
            u: u.clone(),
            v: v.clone(),
            e: e.clone(),
            f: f.clone(),
        };
        if !self.check_witness(&w)?.is_ok() {
            return Err(Error::InvariantViolation(
                "solved (e,f)-inverse fails the witness identities".into(),
            ));
        }
        Ok(Some(v))
    }

    /// The inverse of `u` on the coradical, solved directly in
    /// `Hom(C_0, A)` on the canonical basis of `C_0`. This is the seed
    /// expected by [`Self::ef_inverse_series`].
    pub fn coradical_seed(
        &self,
        u: &ConvMap<F>,
        e: &ConvMap<F>,
        f: &ConvMap<F>,
    ) -> Result<Option<ConvMap<F>>> {
        self.check_preconditions(u, e, f)?;
        let c0 = self.source.coradical()?;
        let c0_coalg = self.source.restrict(&c0)?;
        let local = Convolution::new(&c0_coalg, self.target);
        local.ef_inverse_solve(
            &self.restrict(u, &c0)?,
            &self.restrict(e, &c0)?,
            &self.restrict(f, &c0)?,
        )
    }

    /// The `(e, f)`-inverse assembled from the inverse `psi0` of `u`
    /// restricted to the coradical, extended by zero on the canonical
    /// complement.
    ///
    /// `psi0` is a `dim A × dim C_0` matrix on the canonical basis of `C_0`.
    pub fn ef_inverse_series(
        &self,
        u: &ConvMap<F>,
        e: &ConvMap<F>,
        f: &ConvMap<F>,
        psi0: &ConvMap<F>,
    ) -> Result<ConvMap<F>> {
        let c0 = self.source.coradical()?;
        let n = self.source.dim();
        let complement = Subspace::span(
            n,
            c0.complement_coordinates()
                .into_iter()
                .map(|j| unit_vec(n, j)),
        )?;
        self.ef_inverse_series_with_complement(u, e, f, psi0, &complement)
    }

    /// As [`Self::ef_inverse_series`], with `psi0` extended by zero on the
    /// given complement of the coradical.
    pub fn ef_inverse_series_with_complement(
        &self,
        u: &ConvMap<F>,
        e: &ConvMap<F>,
        f: &ConvMap<F>,
        psi0: &ConvMap<F>,
        complement: &Subspace<F>,
    ) -> Result<ConvMap<F>> {
        self.check_preconditions(u, e, f)?;
        let filtration = self.source.coradical_filtration()?;
        let c0 = filtration.coradical();
        let n = self.source.dim();
        check_dim(n, complement.ambient_dim())?;
        check_dim(self.target.dim(), psi0.rows())?;
        check_dim(c0.dim(), psi0.cols())?;
        if c0.dim() + complement.dim() != n || !c0.intersect(complement)?.is_zero() {
            return Err(Error::Precondition(
                "not a complement of the coradical".into(),
            ));
        }

        let c0_coalg = self.source.restrict(c0)?;
        let local = Convolution::new(&c0_coalg, self.target);
        let w0 = EFWitness {
            u: self.restrict(u, c0)?,
            v: psi0.clone(),
            e: self.restrict(e, c0)?,
            f: self.restrict(f, c0)?,
        };
        let local_report = local.check_witness(&w0)?;
        if !local_report.is_ok() {
            return Err(Error::Precondition(format!(
                "psi0 is not the inverse of u on the coradical (failed: {})",
                local_report.failed_checks().join(", ")
            )));
        }

        // Ψ = psi0 ∘ (projection onto C_0 along the complement)
        let mut cols = c0.basis();
        cols.extend(complement.basis());
        let change = Matrix::from_columns(n, &cols)?
            .inverse()
            .expect("basis of C_0 plus a complement");
        let mut projection = Matrix::zeros(c0.dim(), n);
        for r in 0..c0.dim() {
            for c in 0..n {
                projection.set(r, c, change.get(r, c).clone());
            }
        }
        let psi = psi0.mul(&projection);

        let length = filtration.length();
        let theta = |idem: &ConvMap<F>, gamma: &ConvMap<F>| -> Result<ConvMap<F>> {
            let mut sum = idem.clone();
            let mut power = gamma.clone();
            for _ in 1..=length {
                sum = sum.add(&power);
                power = self.conv(&power, gamma);
            }
            if !power.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "γ^{} does not vanish although γ vanishes on the coradical",
                    length + 1
                )));
            }
            Ok(sum)
        };
        let gamma_e = e.sub(&self.conv(u, &psi));
        let gamma_f = f.sub(&self.conv(&psi, u));
        let theta_e = theta(e, &gamma_e)?;
        let theta_f = theta(f, &gamma_f)?;

        let lambda = self.product(&[&theta_f, &psi, e])?;
        if lambda != self.product(&[f, &psi, &theta_e])? {
            return Err(Error::InvariantViolation(
                "the two series expressions for the inverse disagree".into(),
            ));
        }
        match self.ef_inverse_solve(u, e, f)? {
            Some(v) if v == lambda => Ok(lambda),
            Some(_) => Err(Error::InvariantViolation(
                "series inverse differs from the direct solve".into(),
            )),
            None => Err(Error::InvariantViolation(
                "series produced an inverse the direct solve cannot find".into(),
            )),
        }
    }

    /// For `γ` vanishing on the coradical: whether `γ^n` vanishes on `C_{n-1}`
    /// for every `n` up to `L + 1`, where `C_L = C`.
    pub fn truncation_check(&self, gamma: &ConvMap<F>) -> Result<bool> {
        self.check(gamma)?;
        let filtration = self.source.coradical_filtration()?;
        if !self.restrict(gamma, filtration.coradical())?.is_zero() {
            return Err(Error::Precondition(
                "γ does not vanish on the coradical".into(),
            ));
        }
        let mut power = gamma.clone();
        for layer in filtration.layers() {
            if !self.restrict(&power, layer)?.is_zero() {
                return Ok(false);
            }
            power = self.conv(&power, gamma);
        }
        Ok(true)
    }

    /// `u v u = u` and `v u v = v`.
    pub fn normalized_pseudo_inverse_check(&self, u: &ConvMap<F>, v: &ConvMap<F>) -> Result<bool> {
        Ok(&self.product(&[u, v, u])? == u && &self.product(&[v, u, v])? == v)
    }

    /// For an `(e, e)`-witness: `u v = v u`, `u² v = u` and `v² u = v`.
    pub fn drazin_index_one_check(&self, w: &EFWitness<F>) -> Result<bool> {
        if w.e != w.f {
            return Err(Error::Precondition(
                "Drazin check needs an (e,e)-witness".into(),
            ));
        }
        if !self.check_witness(w)?.is_ok() {
            return Err(Error::Precondition("witness identities fail".into()));
        }
        let (u, v) = (&w.u, &w.v);
        Ok(self.conv(u, v) == self.conv(v, u)
            && &self.product(&[u, u, v])? == u
            && &self.product(&[v, v, u])? == v)
    }
}
