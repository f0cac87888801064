//! Weak Hopf algebras: axiom battery, counital maps and subalgebras,
//! antipode properties and quantum commutativity.

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::coalgebra::FiniteCoalgebra;
use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{tensor_vec, unit_vec, zero_vec, Matrix, Subspace};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq)]
pub struct WeakHopfAlgebra<F> {
    alg: FiniteAlgebra<F>,
    coalg: FiniteCoalgebra<F>,
    antipode: Matrix<F>,
}

/// Target and source counital maps with their fixed subalgebras.
#[derive(Debug, Clone, PartialEq)]
pub struct CounitalData<F> {
    pub eps_t: Matrix<F>,
    pub eps_s: Matrix<F>,
    pub target: Subspace<F>,
    pub source: Subspace<F>,
}

impl<F: Field> WeakHopfAlgebra<F> {
    /// Assembles the structure; only shapes are checked here, the axioms are
    /// checked by [`Self::validate`].
    pub fn new(
        alg: FiniteAlgebra<F>,
        coalg: FiniteCoalgebra<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        check_dim(alg.dim(), coalg.dim())?;
        check_dim(alg.dim(), antipode.rows())?;
        check_dim(alg.dim(), antipode.cols())?;
        Ok(WeakHopfAlgebra {
            alg,
            coalg,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &FiniteAlgebra<F> {
        &self.alg
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra<F> {
        &self.coalg
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: Matrix<F>) -> Result<Self> {
        Self::new(self.alg.clone(), self.coalg.clone(), antipode)
    }

    pub fn with_coalgebra(&self, coalg: FiniteCoalgebra<F>) -> Result<Self> {
        Self::new(self.alg.clone(), coalg, self.antipode.clone())
    }

    pub fn unit(&self) -> &[F] {
        self.alg.unit()
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.alg.multiply(x, y)
    }

    pub fn comultiply(&self, x: &[F]) -> Result<Vec<F>> {
        self.coalg.comultiply(x)
    }

    pub fn apply_antipode(&self, x: &[F]) -> Vec<F> {
        self.antipode.mul_vec(x)
    }

    /// `Δ(1)`.
    pub fn delta_one(&self) -> Vec<F> {
        self.coalg.delta(self.alg.unit())
    }

    /// Whether `Δ(1) = 1 ⊗ 1`, i.e. this is an ordinary Hopf algebra.
    pub fn is_hopf(&self) -> bool {
        self.delta_one() == tensor_vec(self.unit(), self.unit())
    }

    /// Nonzero terms `(j, k, c)` of `Δ(1) = Σ c e_j ⊗ e_k`.
    fn delta_one_terms(&self) -> Vec<(usize, usize, F)> {
        let n = self.dim();
        self.delta_one()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p / n, p % n, c))
            .collect()
    }

    /// `E[h][g] = ε(e_h e_g)`.
    fn counit_of_products(&self) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for h in 0..n {
            for g in 0..n {
                let mut s = F::zero();
                for (k, c) in self.alg.basis_product(h, g) {
                    s.add_product(c, &self.coalg.counit()[*k]);
                }
                m.set(h, g, s);
            }
        }
        m
    }

    /// `ε_t(h) = ε(1_1 h) 1_2` and `ε_s(h) = 1_1 ε(h 1_2)`, without any
    /// verification.
    pub fn counital_maps(&self) -> (Matrix<F>, Matrix<F>) {
        let n = self.dim();
        let eps = self.counit_of_products();
        let one = self.delta_one_terms();
        let mut eps_t = Matrix::zeros(n, n);
        let mut eps_s = Matrix::zeros(n, n);
        for h in 0..n {
            let mut t = zero_vec::<F>(n);
            let mut s = zero_vec::<F>(n);
            for (j, k, c) in &one {
                t[*k].add_product(c, eps.get(*j, h));
                s[*j].add_product(c, eps.get(h, *k));
            }
            for r in 0..n {
                eps_t.set(r, h, t[r].clone());
                eps_s.set(r, h, s[r].clone());
            }
        }
        (eps_t, eps_s)
    }

    /// Counital maps and subalgebras, verified idempotent with unital fixed
    /// subalgebras.
    pub fn counital_data(&self) -> Result<CounitalData<F>> {
        let n = self.dim();
        let (eps_t, eps_s) = self.counital_maps();
        let id = Matrix::identity(n);
        let target = id.sub(&eps_t).kernel();
        let source = id.sub(&eps_s).kernel();
        for (name, map, fixed) in [("target", &eps_t, &target), ("source", &eps_s, &source)] {
            if map.mul(map) != *map {
                return Err(Error::InvariantViolation(format!(
                    "{name} counital map is not idempotent"
                )));
            }
            if !self.alg.is_unital_subalgebra(fixed)? {
                return Err(Error::InvariantViolation(format!(
                    "{name} counital subspace is not a unital subalgebra"
                )));
            }
        }
        Ok(CounitalData {
            eps_t,
            eps_s,
            target,
            source,
        })
    }

    /// `m ∘ (id ⊗ S) ∘ Δ` evaluated on a basis vector.
    fn id_star_antipode(&self, h: usize) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim());
        for (j, k, d) in self.coalg.coproduct_terms(h) {
            let s = self.antipode.column(*k);
            let p = self.alg.mul_basis_left(*j, &s);
            crate::linalg::axpy(&mut out, d, &p);
        }
        out
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` evaluated on a basis vector.
    fn antipode_star_id(&self, h: usize) -> Vec<F> {
        let mut out = zero_vec::<F>(self.dim());
        for (j, k, d) in self.coalg.coproduct_terms(h) {
            let s = self.antipode.column(*j);
            let p = self.alg.mul_basis_right(&s, *k);
            crate::linalg::axpy(&mut out, d, &p);
        }
        out
    }

    /// Evaluates all weak Hopf axioms on basis tuples, after the algebra and
    /// coalgebra axioms.
    pub fn validate(&self) -> Report<F> {
        let n = self.dim();
        let mut report = self.alg.validate();
        report.merge(self.coalg.validate());
        for c in [
            "delta_multiplicative",
            "delta_unit",
            "counit_weak_multiplicative",
            "antipode_target",
            "antipode_source",
            "antipode_sandwich",
        ] {
            report.declare(c);
        }

        // Δ(hg) = Δ(h)Δ(g)
        let deltas: Vec<Vec<F>> = (0..n).map(|i| self.coalg.delta(&unit_vec(n, i))).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.coalg.delta(&self.alg.basis_product_vec(i, j));
                let rhs = self.alg.mul_tensor2(&deltas[i], &deltas[j]);
                report.compare("delta_multiplicative", &[i, j], lhs, rhs);
            }
        }

        // Δ²(1) = (Δ(1) ⊗ 1)(1 ⊗ Δ(1)) = (1 ⊗ Δ(1))(Δ(1) ⊗ 1)
        let one = self.delta_one_terms();
        let mut d2 = zero_vec::<F>(n * n * n);
        for (a, b, c) in &one {
            for (x, y, d) in self.coalg.coproduct_terms(*a) {
                let mut t = c.clone();
                t *= d;
                d2[(x * n + y) * n + b] += &t;
            }
        }
        let mut left = zero_vec::<F>(n * n * n);
        let mut right = zero_vec::<F>(n * n * n);
        for (a, b, c) in &one {
            for (a2, b2, c2) in &one {
                let mut t = c.clone();
                t *= c2;
                // 1_1 ⊗ 1_2 1'_1 ⊗ 1'_2
                for (m, e) in self.alg.basis_product(*b, *a2) {
                    left[(a * n + m) * n + b2].add_product(&t, e);
                }
                // 1_1 ⊗ 1'_1 1_2 ⊗ 1'_2
                for (m, e) in self.alg.basis_product(*a2, *b) {
                    right[(a * n + m) * n + b2].add_product(&t, e);
                }
            }
        }
        report.compare("delta_unit", &[], d2.clone(), left);
        report.compare("delta_unit", &[], d2, right);

        // ε(hgl) = ε(hg_1)ε(g_2 l) = ε(hg_2)ε(g_1 l)
        let eps = self.counit_of_products();
        let parts: Vec<Report<F>> = (0..n)
            .into_par_iter()
            .map(|h| {
                let mut r = Report::new();
                for g in 0..n {
                    let hg = self.alg.basis_product_vec(h, g);
                    for l in 0..n {
                        let mut whole = F::zero();
                        for (k, c) in hg.iter().enumerate() {
                            if !c.is_zero() {
                                whole.add_product(c, eps.get(k, l));
                            }
                        }
                        let mut first = F::zero();
                        let mut second = F::zero();
                        for (j, k, d) in self.coalg.coproduct_terms(g) {
                            let mut t = d.clone();
                            t *= eps.get(h, *j);
                            first.add_product(&t, eps.get(*k, l));
                            let mut t = d.clone();
                            t *= eps.get(h, *k);
                            second.add_product(&t, eps.get(*j, l));
                        }
                        r.compare(
                            "counit_weak_multiplicative",
                            &[h, g, l],
                            vec![whole.clone()],
                            vec![first],
                        );
                        r.compare(
                            "counit_weak_multiplicative",
                            &[h, g, l],
                            vec![whole],
                            vec![second],
                        );
                    }
                }
                r
            })
            .collect();
        for p in parts {
            report.merge(p);
        }

        let (eps_t, eps_s) = self.counital_maps();
        for h in 0..n {
            report.compare(
                "antipode_target",
                &[h],
                self.id_star_antipode(h),
                eps_t.column(h),
            );
            report.compare(
                "antipode_source",
                &[h],
                self.antipode_star_id(h),
                eps_s.column(h),
            );
            let mut sandwich = zero_vec::<F>(n);
            for (idx, c) in self.coalg.iterated_coproduct(h, 3) {
                let a = self.antipode.column(idx[0]);
                let b = self.alg.mul_basis_right(&a, idx[1]);
                let s3 = self.antipode.column(idx[2]);
                crate::linalg::axpy(&mut sandwich, &c, &self.alg.mul(&b, &s3));
            }
            report.compare("antipode_sandwich", &[h], sandwich, self.antipode.column(h));
        }
        report
    }

    /// Identities every weak Hopf algebra satisfies: `Δ(1) ∈ H_s ⊗ H_t`, the
    /// coproducts of counital elements, and the six absorption identities of
    /// the counital maps. A leading consistency check compares the counit
    /// formulas for `ε_t`, `ε_s` with `h_1 S(h_2)` and `S(h_1) h_2`.
    pub fn counital_identities(&self) -> Report<F> {
        let n = self.dim();
        let mut report = Report::new();
        let (eps_t, eps_s) = self.counital_maps();
        let id = Matrix::identity(n);
        let target = id.sub(&eps_t).kernel();
        let source = id.sub(&eps_s).kernel();

        for h in 0..n {
            report.compare(
                "counital_maps_via_antipode",
                &[h],
                self.id_star_antipode(h),
                eps_t.column(h),
            );
            report.compare(
                "counital_maps_via_antipode",
                &[h],
                self.antipode_star_id(h),
                eps_s.column(h),
            );
        }

        let d1 = self.delta_one();
        report.require(
            "delta_one_in_source_target",
            &[],
            source.tensor(&target).contains(&d1).unwrap_or(false),
        );

        let one = self.delta_one_terms();
        for (b, xs) in source.basis().iter().enumerate() {
            let lhs = self.coalg.delta(xs);
            // 1_1 ⊗ x_s 1_2  and  1_1 ⊗ 1_2 x_s
            let mut r1 = zero_vec::<F>(n * n);
            let mut r2 = zero_vec::<F>(n * n);
            for (j, k, c) in &one {
                let xk = self.alg.mul_basis_right(xs, *k);
                let kx = self.alg.mul_basis_left(*k, xs);
                for m in 0..n {
                    r1[j * n + m].add_product(c, &xk[m]);
                    r2[j * n + m].add_product(c, &kx[m]);
                }
            }
            report.compare("delta_of_source_element", &[b], lhs.clone(), r1);
            report.compare("delta_of_source_element", &[b], lhs, r2);
        }
        for (b, xt) in target.basis().iter().enumerate() {
            let lhs = self.coalg.delta(xt);
            // 1_1 x_t ⊗ 1_2  and  x_t 1_1 ⊗ 1_2
            let mut r1 = zero_vec::<F>(n * n);
            let mut r2 = zero_vec::<F>(n * n);
            for (j, k, c) in &one {
                let jx = self.alg.mul_basis_left(*j, xt);
                let xj = self.alg.mul_basis_right(xt, *j);
                for m in 0..n {
                    r1[m * n + k].add_product(c, &jx[m]);
                    r2[m * n + k].add_product(c, &xj[m]);
                }
            }
            report.compare("delta_of_target_element", &[b], lhs.clone(), r1);
            report.compare("delta_of_target_element", &[b], lhs, r2);
        }

        let eps = self.counit_of_products();
        let es: Vec<Vec<F>> = eps_s.columns();
        let et: Vec<Vec<F>> = eps_t.columns();
        for h in 0..n {
            for g in 0..n {
                let hg = self.alg.basis_product_vec(h, g);
                let eh = unit_vec(n, h);
                let eg = unit_vec(n, g);

                // ε_s(ε_s(h) g) = ε_s(hg)
                report.compare(
                    "source_absorbs_left",
                    &[h, g],
                    eps_s.mul_vec(&self.alg.mul_basis_right(&es[h], g)),
                    eps_s.mul_vec(&hg),
                );
                // ε_s(h) g = g_1 ε(h g_2)
                let mut rhs = zero_vec::<F>(n);
                for (j, k, d) in self.coalg.coproduct_terms(g) {
                    let mut t = d.clone();
                    t *= eps.get(h, *k);
                    rhs[*j] += &t;
                }
                report.compare(
                    "source_times_element",
                    &[h, g],
                    self.alg.mul_basis_right(&es[h], g),
                    rhs,
                );
                // ε_s(h ε_s(g)) = ε_s(h) ε_s(g)
                report.compare(
                    "source_multiplicative",
                    &[h, g],
                    eps_s.mul_vec(&self.alg.mul_basis_left(h, &es[g])),
                    self.alg.mul(&es[h], &es[g]),
                );

                // ε_t(h ε_t(g)) = ε_t(hg)
                report.compare(
                    "target_absorbs_right",
                    &[h, g],
                    eps_t.mul_vec(&self.alg.mul_basis_left(h, &et[g])),
                    eps_t.mul_vec(&hg),
                );
                // h ε_t(g) = ε(h_1 g) h_2
                let mut rhs = zero_vec::<F>(n);
                for (j, k, d) in self.coalg.coproduct_terms(h) {
                    let mut t = d.clone();
                    t *= eps.get(*j, g);
                    rhs[*k] += &t;
                }
                report.compare(
                    "element_times_target",
                    &[h, g],
                    self.alg.mul(&eh, &et[g]),
                    rhs,
                );
                // ε_t(ε_t(h) g) = ε_t(h) ε_t(g)
                report.compare(
                    "target_multiplicative",
                    &[h, g],
                    eps_t.mul_vec(&self.alg.mul(&et[h], &eg)),
                    self.alg.mul(&et[h], &et[g]),
                );
            }
        }
        report
    }

    /// Anti-(co)multiplicativity, invertibility and the intertwining of the
    /// counital maps by `S`.
    pub fn antipode_props(&self) -> Report<F> {
        let n = self.dim();
        let mut report = Report::new();
        let s = &self.antipode;
        for i in 0..n {
            for j in 0..n {
                let lhs = s.mul_vec(&self.alg.basis_product_vec(i, j));
                let rhs = self.alg.mul(&s.column(j), &s.column(i));
                report.compare("antipode_anti_multiplicative", &[i, j], lhs, rhs);
            }
        }
        report.compare(
            "antipode_unital",
            &[],
            s.mul_vec(self.unit()),
            self.unit().to_vec(),
        );

        for h in 0..n {
            let lhs = self.coalg.delta(&s.column(h));
            let mut rhs = zero_vec::<F>(n * n);
            for (j, k, d) in self.coalg.coproduct_terms(h) {
                let t = tensor_vec(&s.column(*k), &s.column(*j));
                crate::linalg::axpy(&mut rhs, d, &t);
            }
            report.compare("antipode_anti_comultiplicative", &[h], lhs, rhs);
        }

        report.require("antipode_invertible", &[], s.inverse().is_some());

        let (eps_t, eps_s) = self.counital_maps();
        let a = s.mul(&eps_t);
        let b = eps_s.mul(s);
        let c = s.mul(&eps_s);
        let d = eps_t.mul(s);
        for h in 0..n {
            report.compare(
                "antipode_intertwines_target",
                &[h],
                a.column(h),
                b.column(h),
            );
            report.compare(
                "antipode_intertwines_source",
                &[h],
                c.column(h),
                d.column(h),
            );
        }
        report
    }

    /// Both quantum-commutativity criteria, evaluated independently:
    /// `h_1 g ε_s(h_2) = hg` on all basis pairs, and `H_s ⊆ C(H)`.
    pub fn is_quantum_commutative(&self) -> (bool, bool) {
        let n = self.dim();
        let (_, eps_s) = self.counital_maps();
        let identity_holds = (0..n).into_par_iter().all(|h| {
            (0..n).all(|g| {
                let mut lhs = zero_vec::<F>(n);
                for (j, k, d) in self.coalg.coproduct_terms(h) {
                    let jg = self.alg.basis_product_vec(*j, g);
                    let p = self.alg.mul(&jg, &eps_s.column(*k));
                    crate::linalg::axpy(&mut lhs, d, &p);
                }
                lhs == self.alg.basis_product_vec(h, g)
            })
        });
        let source = Matrix::identity(n).sub(&eps_s).kernel();
        let central = self
            .alg
            .centralizes(&source, &Subspace::full(n))
            .expect("same ambient");
        (identity_holds, central)
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

    #[test]
    fn corpus_passes_all_batteries() {
        for name in corpus::WEAK_HOPF_NAMES {
            let h = corpus::weak_hopf_by_name::<Scalar>(name).unwrap();
            for (what, r) in [
                ("axioms", h.validate()),
                ("counital_identities", h.counital_identities()),
                ("antipode", h.antipode_props()),
            ] {
                assert!(r.is_ok(), "{name} {what}: {:?}", r.failed_checks());
            }
        }
    }

    #[test]
    fn identity_antipode_on_s3() {
        let h = corpus::qs3::<Scalar>();
        let bad = h.with_antipode(Matrix::identity(6)).unwrap();
        let r = bad.validate();
        assert!(!r.passed("antipode_target"));
        assert!(!r.passed("antipode_source"));
        assert!(!bad.counital_identities().is_ok());
    }

    #[test]
    fn identity_antipode_on_h4_breaks_anti_coalgebra() {
        let h = corpus::h4::<Scalar>();
        let bad = h.with_antipode(Matrix::identity(4)).unwrap();
        assert!(!bad
            .antipode_props()
            .passed("antipode_anti_comultiplicative"));
    }

    #[test]
    fn singular_antipode_is_reported() {
        let h = corpus::qc2::<Scalar>();
        let bad = h.with_antipode(Matrix::zeros(2, 2)).unwrap();
        assert!(!bad.antipode_props().passed("antipode_invertible"));
    }

    #[test]
    fn hopf_counital_data() {
        for h in [corpus::qs3::<Scalar>(), corpus::h4(), corpus::qc2()] {
            assert!(h.is_hopf());
            let d = h.counital_data().unwrap();
            assert_eq!(d.target.dim(), 1);
            assert_eq!(d.source.dim(), 1);
            for g in 0..h.dim() {
                let expected = crate::linalg::scaled(&h.coalgebra().counit()[g], h.unit());
                assert_eq!(d.eps_t.column(g), expected);
            }
        }
    }

    #[test]
    fn counital_maps_are_idempotent() {
        for name in corpus::WEAK_HOPF_NAMES {
            let h = corpus::weak_hopf_by_name::<Scalar>(name).unwrap();
            let (t, s) = h.counital_maps();
            assert_eq!(t.mul(&t), t);
            assert_eq!(s.mul(&s), s);
        }
    }

    #[test]
    fn one_dimensional() {
        let alg = FiniteAlgebra::from_products(1, vec![q(1)], |_, _| vec![q(1)]).unwrap();
        let coalg = FiniteCoalgebra::from_coproducts(1, vec![q(1)], |_| vec![q(1)]).unwrap();
        let h = WeakHopfAlgebra::new(alg, coalg, Matrix::identity(1)).unwrap();
        assert!(h.validate().is_ok());
        assert!(h.counital_identities().is_ok());
        assert_eq!(h.is_quantum_commutative(), (true, true));
    }

    #[test]
    fn quantum_commutativity() {
        assert_eq!(
            corpus::qs3::<Scalar>().is_quantum_commutative(),
            (true, true)
        );
        assert_eq!(
            corpus::h4::<Scalar>().is_quantum_commutative(),
            (true, true)
        );
        assert_eq!(
            corpus::p2::<Scalar>().is_quantum_commutative(),
            (false, false)
        );
        assert_eq!(
            corpus::c2c1::<Scalar>().is_quantum_commutative(),
            (true, true)
        );
    }

    #[test]
    fn p2_is_not_source_central() {
        // f e1 = f but e1 f = 0
        let h = corpus::p2::<Scalar>();
        let (e1, f) = (unit_vec::<Scalar>(4, 0), unit_vec::<Scalar>(4, 2));
        assert_eq!(h.multiply(&f, &e1).unwrap(), f);
        assert!(crate::linalg::is_zero_vec(&h.multiply(&e1, &f).unwrap()));
    }

    #[test]
    fn shape_errors() {
        let h = corpus::qc2::<Scalar>();
        assert!(matches!(
            h.with_antipode(Matrix::identity(3)),
            Err(Error::Shape(_) | Error::DimensionMismatch { .. })
        ));
        assert!(h.multiply(&[q(1)], &[q(1), q(0)]).is_err());
    }
}
