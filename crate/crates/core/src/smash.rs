//! The smash product `A#H = A ⊗_{H_t} H` of a left module algebra, realised
//! as an explicit quotient of `A ⊗ H`, and the inner action of `H` on it.

use rayon::prelude::*;

use crate::actions::{
    inner_action_from, Battery, BatteryItem, Condition, InnerData, ModuleAction, Relation,
};
use crate::algebra::FiniteAlgebra;
use crate::convolution::{Convolution, EFWitness};
use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, tensor_vec, unit_vec, zero_vec, Matrix, Subspace};

/// `x · z = S⁻¹(z) · x`, cross-checked against `x (z · 1)`.
pub fn right_ht_action<F: Field>(m: &ModuleAction<F>, x: &[F], z: &[F]) -> Result<Vec<F>> {
    let hopf = m.hopf();
    check_dim(m.algebra().dim(), x.len())?;
    check_dim(hopf.dim(), z.len())?;
    let data = hopf.counital_data()?;
    if !data.target.contains(z)? {
        return Err(Error::Membership(
            "element is not in the target subalgebra".into(),
        ));
    }
    let s_inv = hopf
        .antipode()
        .inverse()
        .ok_or_else(|| Error::InvariantViolation("antipode is not invertible".into()))?;
    let via_antipode = m.act_vec(&s_inv.mul_vec(z), x);
    let via_unit = m.algebra().mul(x, &m.act_vec(z, m.algebra().unit()));
    if via_antipode != via_unit {
        return Err(Error::InvariantViolation(
            "the two expressions of the right H_t-action disagree".into(),
        ));
    }
    Ok(via_unit)
}

#[derive(Debug, Clone)]
pub struct SmashProduct<F> {
    action: ModuleAction<F>,
    relations: Subspace<F>,
    coords: Vec<usize>,
    alg: FiniteAlgebra<F>,
}

impl<F: Field> SmashProduct<F> {
    /// Quotients `A ⊗ H` (index `x · dim H + h`) by the span of
    /// `(x·z) ⊗ h − x ⊗ zh` over basis `x` of `A`, `z` of `H_t`, `h` of `H`,
    /// and induces `(x # h)(y # g) = x(h_1·y) # h_2 g`.
    ///
    /// The product is verified independent of representatives, associative
    /// and unital.
    pub fn build(m: &ModuleAction<F>) -> Result<Self> {
        let hopf = m.hopf();
        let (da, dh) = (m.algebra().dim(), hopf.dim());
        let data = hopf.counital_data()?;
        let zs = data.target.basis();
        let mut gens = Vec::with_capacity(da * zs.len() * dh);
        for x in 0..da {
            let ex = unit_vec(da, x);
            for z in &zs {
                let xz = right_ht_action(m, &ex, z)?;
                for h in 0..dh {
                    let zh = hopf.algebra().mul_basis_right(z, h);
                    let mut r = tensor_vec(&xz, &unit_vec(dh, h));
                    let s = tensor_vec(&ex, &zh);
                    axpy(&mut r, &-F::one(), &s);
                    gens.push(r);
                }
            }
        }
        let relations = Subspace::span(da * dh, gens)?;
        let coords = relations.complement_coordinates();
        let q = coords.len();
        let mut s = SmashProduct {
            action: m.clone(),
            relations,
            coords,
            alg: FiniteAlgebra::from_products(1, vec![F::one()], |_, _| vec![F::one()])?,
        };
        let reps: Vec<Vec<F>> = (0..q).map(|k| s.representative_of_basis(k)).collect();
        let products: Vec<Vec<F>> = (0..q * q)
            .into_par_iter()
            .map(|p| s.class_of(&s.tensor_product(&reps[p / q], &reps[p % q])))
            .collect();
        let unit = s.class_of(&tensor_vec(m.algebra().unit(), hopf.unit()));
        s.alg = FiniteAlgebra::from_products(q, unit, |i, j| products[i * q + j].clone())?;

        let rel_basis = s.relations.basis();
        let well_defined = rel_basis.par_iter().all(|r| {
            reps.iter().all(|b| {
                s.relations
                    .contains(&s.tensor_product(r, b))
                    .expect("ambient")
                    && s.relations
                        .contains(&s.tensor_product(b, r))
                        .expect("ambient")
            })
        });
        if !well_defined {
            return Err(Error::InvariantViolation(
                "smash product is not well defined on the quotient".into(),
            ));
        }
        let report = s.alg.validate();
        if !report.is_ok() {
            return Err(Error::InvariantViolation(format!(
                "smash product fails {}",
                report.failed_checks().join(", ")
            )));
        }
        Ok(s)
    }

    pub fn action(&self) -> &ModuleAction<F> {
        &self.action
    }

    pub fn algebra(&self) -> &FiniteAlgebra<F> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// Coordinates of `A ⊗ H` whose unit vectors represent the quotient basis.
    pub fn quotient_coordinates(&self) -> &[usize] {
        &self.coords
    }

    fn dims(&self) -> (usize, usize) {
        (self.action.algebra().dim(), self.action.hopf().dim())
    }

    /// `x(h_1·y) ⊗ h_2 g`, extended bilinearly to `A ⊗ H`.
    fn tensor_product(&self, p: &[F], q: &[F]) -> Vec<F> {
        let (da, dh) = self.dims();
        let (a_alg, h_alg) = (self.action.algebra(), self.action.hopf().algebra());
        let coalg = self.action.hopf().coalgebra();
        let mut out = zero_vec::<F>(da * dh);
        for (i, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, h) = (i / dh, i % dh);
            for (j, d) in q.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let (y, g) = (j / dh, j % dh);
                let mut cd = c.clone();
                cd *= d;
                for (h1, h2, k) in coalg.coproduct_terms(h) {
                    let left = a_alg.mul_basis_left(x, self.action.act_basis(*h1, y));
                    let right = h_alg.basis_product_vec(*h2, g);
                    let mut ck = cd.clone();
                    ck *= k;
                    axpy(&mut out, &ck, &tensor_vec(&left, &right));
                }
            }
        }
        out
    }

    /// Class of the product of two representatives in `A ⊗ H`.
    pub fn multiply_representatives(&self, p: &[F], q: &[F]) -> Result<Vec<F>> {
        let (da, dh) = self.dims();
        check_dim(da * dh, p.len())?;
        check_dim(da * dh, q.len())?;
        Ok(self.class_of(&self.tensor_product(p, q)))
    }

    /// Quotient coordinates of a vector of `A ⊗ H`.
    pub fn class_of(&self, w: &[F]) -> Vec<F> {
        let r = self.relations.reduce(w);
        self.coords.iter().map(|&c| r[c].clone()).collect()
    }

    fn representative_of_basis(&self, k: usize) -> Vec<F> {
        let (da, dh) = self.dims();
        unit_vec(da * dh, self.coords[k])
    }

    /// The canonical representative in `A ⊗ H` of a quotient vector.
    pub fn representative(&self, q: &[F]) -> Result<Vec<F>> {
        check_dim(self.dim(), q.len())?;
        let (da, dh) = self.dims();
        let mut out = zero_vec::<F>(da * dh);
        for (k, c) in q.iter().enumerate() {
            out[self.coords[k]] = c.clone();
        }
        Ok(out)
    }

    /// The class of `a ⊗ h`.
    pub fn element(&self, a: &[F], h: &[F]) -> Result<Vec<F>> {
        let (da, dh) = self.dims();
        check_dim(da, a.len())?;
        check_dim(dh, h.len())?;
        Ok(self.class_of(&tensor_vec(a, h)))
    }

    /// `a ↦ a # 1`, as a matrix.
    pub fn embedding_a(&self) -> Matrix<F> {
        let (da, _) = self.dims();
        let one = self.action.hopf().unit().to_vec();
        let cols: Vec<Vec<F>> = (0..da)
            .map(|x| self.element(&unit_vec(da, x), &one).expect("dims"))
            .collect();
        Matrix::from_columns(self.dim(), &cols).expect("dims")
    }

    /// `h ↦ 1 # h`, as a matrix.
    pub fn embedding_h(&self) -> Matrix<F> {
        let (_, dh) = self.dims();
        let one = self.action.algebra().unit().to_vec();
        let cols: Vec<Vec<F>> = (0..dh)
            .map(|h| self.element(&one, &unit_vec(dh, h)).expect("dims"))
            .collect();
        Matrix::from_columns(self.dim(), &cols).expect("dims")
    }
}

fn is_injective_algebra_map<F: Field>(
    map: &Matrix<F>,
    from: &FiniteAlgebra<F>,
    to: &FiniteAlgebra<F>,
) -> bool {
    let n = from.dim();
    map.rank() == n
        && map.mul_vec(from.unit()) == to.unit()
        && (0..n).all(|i| {
            (0..n).all(|j| {
                map.mul_vec(&from.basis_product_vec(i, j)) == to.mul(&map.column(i), &map.column(j))
            })
        })
}

/// The maps `e(h) = (h·1) # 1`, `f(h) = 1 # ε_s(h)`, `u(h) = 1 # h`,
/// `v(h) = 1 # S(h)` into `A#H`, validated as an (e,f)-inverse pair.
pub fn smash_action_maps<F: Field>(s: &SmashProduct<F>) -> Result<EFWitness<F>> {
    let hopf = s.action.hopf();
    let (da, dh) = s.dims();
    let one_a = s.action.algebra().unit().to_vec();
    let one_h = hopf.unit().to_vec();
    let (_, eps_s) = hopf.counital_maps();
    let build = |image: &dyn Fn(usize) -> (Vec<F>, Vec<F>)| -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..dh)
            .map(|h| {
                let (a, g) = image(h);
                s.element(&a, &g).expect("dims")
            })
            .collect();
        Matrix::from_columns(s.dim(), &cols).expect("dims")
    };
    let e = build(&|h| (s.action.act_on(h, &one_a), one_h.clone()));
    let f = build(&|h| (one_a.clone(), eps_s.column(h)));
    let u = build(&|h| (one_a.clone(), unit_vec(dh, h)));
    let v = build(&|h| (one_a.clone(), hopf.antipode().column(h)));
    debug_assert_eq!(one_a.len(), da);
    let witness = EFWitness { u, v, e, f };
    let report = Convolution::new(hopf.coalgebra(), &s.alg).check_witness(&witness)?;
    if !report.is_ok() {
        return Err(Error::InvariantViolation(format!(
            "smash witness fails {}",
            report.failed_checks().join(", ")
        )));
    }
    Ok(witness)
}

pub fn smash_inner_data<F: Field>(s: &SmashProduct<F>) -> Result<InnerData<F>> {
    let witness = smash_action_maps(s)?;
    InnerData::new(s.action.hopf().clone(), s.alg.clone(), witness)
}

/// The candidate action `h·(a#g) = u(h_1)(a#g)v(h_2)` on `A#H`, cross-checked
/// against `(h_1·a) # h_2 g S(h_3)` on every basis representative.
pub fn smash_action<F: Field>(s: &SmashProduct<F>) -> Result<ModuleAction<F>> {
    let data = smash_inner_data(s)?;
    let candidate = inner_action_from(&data);
    let hopf = s.action.hopf();
    let (da, dh) = s.dims();
    let h_alg = hopf.algebra();
    for h in 0..dh {
        let terms = hopf.coalgebra().iterated_coproduct(h, 3);
        for (k, &c) in s.coords.iter().enumerate() {
            let (a, g) = (c / dh, c % dh);
            let mut rep = zero_vec::<F>(da * dh);
            for (idx, coef) in &terms {
                let ha = s.action.act_basis(idx[0], a);
                let hg = h_alg.basis_product_vec(idx[1], g);
                let right = h_alg.mul(&hg, &hopf.antipode().column(idx[2]));
                axpy(&mut rep, coef, &tensor_vec(ha, &right));
            }
            if s.class_of(&rep) != candidate.act_basis(h, k) {
                return Err(Error::InvariantViolation(format!(
                    "inner action on the smash product disagrees with its closed form at h = {h}"
                )));
            }
        }
    }
    Ok(candidate)
}

/// Injective algebra maps `a ↦ a#1`, `h ↦ 1#h`, and `h·(x#1) = (h·x)#1`
/// under the smash action.
pub fn embeddings_check<F: Field>(s: &SmashProduct<F>) -> Result<bool> {
    let ea = s.embedding_a();
    let eh = s.embedding_h();
    if !is_injective_algebra_map(&ea, s.action.algebra(), &s.alg)
        || !is_injective_algebra_map(&eh, s.action.hopf().algebra(), &s.alg)
    {
        return Ok(false);
    }
    let action = smash_action(s)?;
    let (da, dh) = s.dims();
    Ok((0..dh).all(|h| {
        (0..da).all(|x| action.act_on(h, &ea.column(x)) == ea.mul_vec(s.action.act_basis(h, x)))
    }))
}

/// The five conditions equivalent for a smash product: the smash action is a
/// module algebra structure, `1#1_1 g S(1_2) = 1#g`,
/// `1#h_1 g ε_s(h_2) = 1#hg`, `1#H_s` is central, and `H` is quantum
/// commutative.
pub fn smash_battery<F: Field>(s: &SmashProduct<F>) -> Result<Battery> {
    let hopf = s.action.hopf();
    let dh = hopf.dim();
    let h_alg = hopf.algebra();
    let one_a = s.action.algebra().unit().to_vec();
    let class = |g: &[F]| s.element(&one_a, g).expect("dims");
    let counital = hopf.counital_data()?;

    let module = smash_action(s)?.validate().is_ok();

    let delta_one = hopf.delta_one();
    let unit_conj = (0..dh).all(|g| {
        let mut lhs = zero_vec::<F>(dh);
        for (p, c) in delta_one.iter().enumerate() {
            if !c.is_zero() {
                let jg = h_alg.mul_basis_right(&unit_vec(dh, p / dh), g);
                axpy(
                    &mut lhs,
                    c,
                    &h_alg.mul(&jg, &hopf.antipode().column(p % dh)),
                );
            }
        }
        class(&lhs) == class(&unit_vec(dh, g))
    });

    let qc_identity = (0..dh).all(|h| {
        (0..dh).all(|g| {
            let mut lhs = zero_vec::<F>(dh);
            for (i, j, c) in hopf.coalgebra().coproduct_terms(h) {
                let ig = h_alg.basis_product_vec(*i, g);
                axpy(&mut lhs, c, &h_alg.mul(&ig, &counital.eps_s.column(*j)));
            }
            class(&lhs) == class(&h_alg.basis_product_vec(h, g))
        })
    });

    let image = counital.source.map(&s.embedding_h())?;
    let central = s.alg.centralizes(&image, &Subspace::full(s.dim()))?;

    let (qc, _) = hopf.is_quantum_commutative();
    Ok(Battery {
        items: vec![BatteryItem {
            label: "five_way",
            relation: Relation::AllEquivalent,
            hypothesis: None,
            left: vec![
                Condition::new("smash_action_module_algebra", module),
                Condition::new("unit_conjugation_trivial", unit_conj),
                Condition::new("source_absorbed", qc_identity),
                Condition::new("source_central_in_smash", central),
                Condition::new("quantum_commutative", qc),
            ],
            right: vec![],
        }],
    })
}
