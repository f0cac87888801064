//! Left module algebras over a weak Hopf algebra, inner actions implemented
//! by (e,f)-invertible maps, and the condition batteries relating them.

use rayon::prelude::*;

use crate::algebra::FiniteAlgebra;
use crate::convolution::{Convolution, EFWitness};
use crate::error::{check_dim, Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, tensor_vec, unit_vec, zero_vec, Matrix, Subspace};
use crate::report::Report;
use crate::weakhopf::WeakHopfAlgebra;

/// `e_h · x_j = table[h * dim A + j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAction<F> {
    hopf: WeakHopfAlgebra<F>,
    alg: FiniteAlgebra<F>,
    table: Vec<Vec<F>>,
}

impl<F: Field> ModuleAction<F> {
    /// `act[i][j][k]` is the coefficient of `x_k` in `e_i · x_j`.
    pub fn new(
        hopf: WeakHopfAlgebra<F>,
        alg: FiniteAlgebra<F>,
        act: Vec<Vec<Vec<F>>>,
    ) -> Result<Self> {
        let (dh, da) = (hopf.dim(), alg.dim());
        check_dim(dh, act.len())?;
        let mut table = Vec::with_capacity(dh * da);
        for row in act {
            check_dim(da, row.len())?;
            for v in row {
                check_dim(da, v.len())?;
                table.push(v);
            }
        }
        Ok(ModuleAction { hopf, alg, table })
    }

    pub fn from_basis_fn<P>(
        hopf: WeakHopfAlgebra<F>,
        alg: FiniteAlgebra<F>,
        mut act: P,
    ) -> Result<Self>
    where
        P: FnMut(usize, usize) -> Vec<F>,
    {
        let (dh, da) = (hopf.dim(), alg.dim());
        let mut table = Vec::with_capacity(dh * da);
        for h in 0..dh {
            for x in 0..da {
                let v = act(h, x);
                check_dim(da, v.len())?;
                table.push(v);
            }
        }
        Ok(ModuleAction { hopf, alg, table })
    }

    /// `A = H_t` on its canonical basis with `h·z = ε_t(hz)`.
    pub fn target_counital(hopf: &WeakHopfAlgebra<F>) -> Result<Self> {
        let data = hopf.counital_data()?;
        let alg = hopf.algebra().subalgebra(&data.target)?;
        let basis = data.target.basis();
        Self::from_basis_fn(hopf.clone(), alg, |h, z| {
            let hz = hopf.algebra().mul_basis_left(h, &basis[z]);
            let image = data.eps_t.mul_vec(&hz);
            data.target
                .coordinates(&image)
                .expect("same ambient")
                .expect("image of ε_t lies in H_t")
        })
    }

    /// `A = H` with `h·g = h_1 g S(h_2)`.
    pub fn adjoint(hopf: &WeakHopfAlgebra<F>) -> Self {
        let n = hopf.dim();
        let alg = hopf.algebra().clone();
        Self::from_basis_fn(hopf.clone(), alg.clone(), |h, g| {
            let mut out = zero_vec::<F>(n);
            for (i, j, c) in hopf.coalgebra().coproduct_terms(h) {
                let hg = alg.mul_basis_right(&unit_vec(n, *i), g);
                let p = alg.mul(&hg, &hopf.antipode().column(*j));
                axpy(&mut out, c, &p);
            }
            out
        })
        .expect("square")
    }

    /// The ground field as a one-dimensional algebra with `h·a = ε(h)a`.
    pub fn trivial(hopf: &WeakHopfAlgebra<F>) -> Self {
        let alg =
            FiniteAlgebra::from_products(1, vec![F::one()], |_, _| vec![F::one()]).expect("1x1");
        Self::from_basis_fn(hopf.clone(), alg, |h, _| {
            vec![hopf.coalgebra().counit()[h].clone()]
        })
        .expect("1-dim")
    }

    pub fn hopf(&self) -> &WeakHopfAlgebra<F> {
        &self.hopf
    }

    pub fn algebra(&self) -> &FiniteAlgebra<F> {
        &self.alg
    }

    pub fn act_basis(&self, h: usize, x: usize) -> &[F] {
        &self.table[h * self.alg.dim() + x]
    }

    /// `act[i][j][k]`, as accepted by [`Self::new`].
    pub fn action_tensor(&self) -> Vec<Vec<Vec<F>>> {
        self.table
            .chunks(self.alg.dim())
            .map(|c| c.to_vec())
            .collect()
    }

    /// `e_h · a`.
    pub(crate) fn act_on(&self, h: usize, a: &[F]) -> Vec<F> {
        let mut out = zero_vec::<F>(self.alg.dim());
        for (x, c) in a.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.act_basis(h, x));
            }
        }
        out
    }

    pub(crate) fn act_vec(&self, h: &[F], a: &[F]) -> Vec<F> {
        let mut out = zero_vec::<F>(self.alg.dim());
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.act_on(i, a));
            }
        }
        out
    }

    pub fn act(&self, h: &[F], a: &[F]) -> Result<Vec<F>> {
        check_dim(self.hopf.dim(), h.len())?;
        check_dim(self.alg.dim(), a.len())?;
        Ok(self.act_vec(h, a))
    }

    /// Module and module-algebra laws on basis tuples:
    /// `(gh)·x = g·(h·x)`, `1·x = x`, `h·(xy) = (h_1·x)(h_2·y)` and
    /// `h·1 = ε_t(h)·1`.
    pub fn validate(&self) -> Report<F> {
        let (dh, da) = (self.hopf.dim(), self.alg.dim());
        let h_alg = self.hopf.algebra();
        let mut report = Report::new();
        for c in [
            "action_associative",
            "action_unit",
            "module_multiplicative",
            "module_unital",
        ] {
            report.declare(c);
        }
        let partial: Vec<Report<F>> = (0..dh)
            .into_par_iter()
            .map(|h| {
                let mut r = Report::new();
                for g in 0..dh {
                    let gh = h_alg.basis_product_vec(g, h);
                    for x in 0..da {
                        let lhs = self.act_vec(&gh, &unit_vec(da, x));
                        let rhs = self.act_on(g, self.act_basis(h, x));
                        r.compare("action_associative", &[g, h, x], lhs, rhs);
                    }
                }
                let delta: Vec<(usize, usize, F)> =
                    self.hopf.coalgebra().coproduct_terms(h).to_vec();
                for x in 0..da {
                    for y in 0..da {
                        let lhs = self.act_vec(&unit_vec(dh, h), &self.alg.basis_product_vec(x, y));
                        let mut rhs = zero_vec::<F>(da);
                        for (i, j, c) in &delta {
                            let p = self.alg.mul(self.act_basis(*i, x), self.act_basis(*j, y));
                            axpy(&mut rhs, c, &p);
                        }
                        r.compare("module_multiplicative", &[h, x, y], lhs, rhs);
                    }
                }
                r
            })
            .collect();
        for r in partial {
            report.merge(r);
        }
        let one_h = self.hopf.unit().to_vec();
        for x in 0..da {
            let lhs = self.act_vec(&one_h, &unit_vec(da, x));
            report.compare("action_unit", &[x], lhs, unit_vec(da, x));
        }
        let (eps_t, _) = self.hopf.counital_maps();
        let one_a = self.alg.unit().to_vec();
        for h in 0..dh {
            let lhs = self.act_on(h, &one_a);
            let rhs = self.act_vec(&eps_t.column(h), &one_a);
            report.compare("module_unital", &[h], lhs, rhs);
        }
        report
    }
}

/// A witness `(u, v, e, f)` in `Hom(H, A)` for an inner action.
#[derive(Debug, Clone)]
pub struct InnerData<F> {
    hopf: WeakHopfAlgebra<F>,
    alg: FiniteAlgebra<F>,
    witness: EFWitness<F>,
}

impl<F: Field> InnerData<F> {
    /// Rejects witnesses that fail the (e,f)-inverse checks.
    pub fn new(
        hopf: WeakHopfAlgebra<F>,
        alg: FiniteAlgebra<F>,
        witness: EFWitness<F>,
    ) -> Result<Self> {
        let data = Self::new_unchecked(hopf, alg, witness)?;
        let report = data.convolution().check_witness(&data.witness)?;
        if !report.is_ok() {
            return Err(Error::Precondition(format!(
                "not an (e,f)-inverse pair: {}",
                report.failed_checks().join(", ")
            )));
        }
        Ok(data)
    }

    /// Only shapes are checked.
    pub fn new_unchecked(
        hopf: WeakHopfAlgebra<F>,
        alg: FiniteAlgebra<F>,
        witness: EFWitness<F>,
    ) -> Result<Self> {
        for m in [&witness.u, &witness.v, &witness.e, &witness.f] {
            if m.rows() != alg.dim() || m.cols() != hopf.dim() {
                return Err(Error::Shape(format!(
                    "expected {}x{} map, found {}x{}",
                    alg.dim(),
                    hopf.dim(),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(InnerData { hopf, alg, witness })
    }

    /// `u = id`, `v = S`, `e = ε_t`, `f = ε_s` in `Hom(H, H)`.
    pub fn adjoint(hopf: &WeakHopfAlgebra<F>) -> Result<Self> {
        let (eps_t, eps_s) = hopf.counital_maps();
        let witness = EFWitness {
            u: Matrix::identity(hopf.dim()),
            v: hopf.antipode().clone(),
            e: eps_t,
            f: eps_s,
        };
        Self::new(hopf.clone(), hopf.algebra().clone(), witness)
    }

    /// `u = v = e = f = ε_t` corestricted to `H_t` (canonical basis).
    pub fn target_projection(hopf: &WeakHopfAlgebra<F>) -> Result<Self> {
        let data = hopf.counital_data()?;
        let alg = hopf.algebra().subalgebra(&data.target)?;
        let cols = data
            .eps_t
            .columns()
            .into_iter()
            .map(|c| {
                data.target
                    .coordinates(&c)
                    .map(|x| x.expect("image of ε_t lies in H_t"))
            })
            .collect::<Result<Vec<_>>>()?;
        let u = Matrix::from_columns(alg.dim(), &cols)?;
        let witness = EFWitness {
            u: u.clone(),
            v: u.clone(),
            e: u.clone(),
            f: u,
        };
        Self::new(hopf.clone(), alg, witness)
    }

    pub fn hopf(&self) -> &WeakHopfAlgebra<F> {
        &self.hopf
    }

    pub fn algebra(&self) -> &FiniteAlgebra<F> {
        &self.alg
    }

    pub fn witness(&self) -> &EFWitness<F> {
        &self.witness
    }

    pub fn convolution(&self) -> Convolution<'_, F> {
        Convolution::new(self.hopf.coalgebra(), &self.alg)
    }

    /// `t(x, y) = v(y_1) v(x_1) u(x_2 y_2)` on basis vectors.
    fn t_basis(&self, x: usize, y: usize) -> Vec<F> {
        let w = &self.witness;
        let coalg = self.hopf.coalgebra();
        let mut out = zero_vec::<F>(self.alg.dim());
        for (x1, x2, cx) in coalg.coproduct_terms(x) {
            for (y1, y2, cy) in coalg.coproduct_terms(y) {
                let prod = self.hopf.algebra().basis_product_vec(*x2, *y2);
                let ux = w.u.mul_vec(&prod);
                let left = self.alg.mul(&w.v.column(*y1), &w.v.column(*x1));
                let mut c = cx.clone();
                c *= cy;
                axpy(&mut out, &c, &self.alg.mul(&left, &ux));
            }
        }
        out
    }

    /// `φ_{f,h}(a) = f(h_1) a f(h_2)` for a basis vector `h`.
    fn phi(&self, h: usize, a: &[F]) -> Vec<F> {
        let f = &self.witness.f;
        let mut out = zero_vec::<F>(self.alg.dim());
        for (i, j, c) in self.hopf.coalgebra().coproduct_terms(h) {
            let p = self.alg.mul(&self.alg.mul(&f.column(*i), a), &f.column(*j));
            axpy(&mut out, c, &p);
        }
        out
    }

    /// Image of `H_s` under `u`.
    fn u_of_source(&self) -> Result<Subspace<F>> {
        let data = self.hopf.counital_data()?;
        data.source.map(&self.witness.u)
    }
}

/// The candidate action `h·a = u(h_1) a v(h_2)`, not validated.
pub fn inner_action_from<F: Field>(data: &InnerData<F>) -> ModuleAction<F> {
    let da = data.alg.dim();
    let w = &data.witness;
    ModuleAction::from_basis_fn(data.hopf.clone(), data.alg.clone(), |h, a| {
        let mut out = zero_vec::<F>(da);
        for (i, j, c) in data.hopf.coalgebra().coproduct_terms(h) {
            let p = data.alg.mul(
                &data.alg.mul_basis_right(&w.u.column(*i), a),
                &w.v.column(*j),
            );
            axpy(&mut out, c, &p);
        }
        out
    })
    .expect("shapes fixed by the witness")
}

/// `t(x, y) = v(y_1) v(x_1) u(x_2 y_2)`, extended bilinearly.
pub fn bilinear_t<F: Field>(data: &InnerData<F>, x: &[F], y: &[F]) -> Result<Vec<F>> {
    let n = data.hopf.dim();
    check_dim(n, x.len())?;
    check_dim(n, y.len())?;
    let mut out = zero_vec::<F>(data.alg.dim());
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let mut c = a.clone();
            c *= b;
            axpy(&mut out, &c, &data.t_basis(i, j));
        }
    }
    Ok(out)
}

/// `e(h) = h·1` for every basis `h`, and, when `m` passes validation,
/// `g·e(h) = e(gh)` for all basis `g, h`.
pub fn inner_action_agrees<F: Field>(data: &InnerData<F>, m: &ModuleAction<F>) -> bool {
    let (dh, e) = (data.hopf.dim(), &data.witness.e);
    let one = data.alg.unit().to_vec();
    if (0..dh).any(|h| m.act_on(h, &one) != e.column(h)) {
        return false;
    }
    if !m.validate().is_ok() {
        return true;
    }
    (0..dh).all(|g| {
        (0..dh).all(|h| {
            let gh = data.hopf.algebra().basis_product_vec(g, h);
            m.act_on(g, &e.column(h)) == e.mul_vec(&gh)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Every condition on the left and on the right has the same truth value
    /// when grouped: `all(left) ⟺ all(right)`.
    Equivalent,
    /// `all(left)` and every individual condition agree.
    AllEquivalent,
    /// `all(left) ⟹ all(right)`.
    Implies,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub holds: bool,
}

impl Condition {
    pub fn new(name: &'static str, holds: bool) -> Self {
        Condition { name, holds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryItem {
    pub label: &'static str,
    pub relation: Relation,
    /// When present and false the relation is not asserted.
    pub hypothesis: Option<Condition>,
    pub left: Vec<Condition>,
    pub right: Vec<Condition>,
}

impl BatteryItem {
    pub fn left_holds(&self) -> bool {
        self.left.iter().all(|c| c.holds)
    }

    pub fn right_holds(&self) -> bool {
        self.right.iter().all(|c| c.holds)
    }

    pub fn applies(&self) -> bool {
        self.hypothesis.as_ref().is_none_or(|h| h.holds)
    }

    /// Whether the evaluated booleans are consistent with the stated relation.
    pub fn coherent(&self) -> bool {
        if !self.applies() {
            return true;
        }
        match self.relation {
            Relation::Equivalent => self.left_holds() == self.right_holds(),
            Relation::AllEquivalent => {
                let mut all = self.left.iter().chain(&self.right).map(|c| c.holds);
                match all.next() {
                    Some(first) => all.all(|b| b == first),
                    None => true,
                }
            }
            Relation::Implies => !self.left_holds() || self.right_holds(),
        }
    }
}

/// Items evaluated side by side, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Battery {
    pub items: Vec<BatteryItem>,
}

impl Battery {
    pub fn coherent(&self) -> bool {
        self.items.iter().all(BatteryItem::coherent)
    }

    pub fn item(&self, label: &str) -> Option<&BatteryItem> {
        self.items.iter().find(|i| i.label == label)
    }
}

/// Both sides of every item of the inner-action theorem, evaluated
/// independently for the candidate `m` built from `data`.
pub fn inner_action_battery<F: Field>(data: &InnerData<F>, m: &ModuleAction<F>) -> Result<Battery> {
    check_dim(data.hopf.dim(), m.hopf.dim())?;
    check_dim(data.alg.dim(), m.alg.dim())?;
    let (dh, da) = (data.hopf.dim(), data.alg.dim());
    let w = &data.witness;
    let alg = &data.alg;
    let center = alg.center();
    let module = m.validate();
    let counital = data.hopf.counital_data()?;
    let one_a = alg.unit().to_vec();

    // (i)
    let phi_mult = (0..dh).into_par_iter().all(|h| {
        let terms = data.hopf.coalgebra().coproduct_terms(h);
        (0..da).all(|a| {
            (0..da).all(|b| {
                let lhs = data.phi(h, &alg.basis_product_vec(a, b));
                let mut rhs = zero_vec::<F>(da);
                for (i, j, c) in terms {
                    let p = alg.mul(
                        &data.phi(*i, &unit_vec(da, a)),
                        &data.phi(*j, &unit_vec(da, b)),
                    );
                    axpy(&mut rhs, c, &p);
                }
                lhs == rhs
            })
        })
    });
    let item_i = BatteryItem {
        label: "i",
        relation: Relation::Equivalent,
        hypothesis: None,
        left: vec![Condition::new(
            "module_multiplicative",
            module.passed("module_multiplicative"),
        )],
        right: vec![Condition::new("phi_f_multiplicative", phi_mult)],
    };

    // (ii)
    let e_eps = w.e.mul(&counital.eps_t) == w.e;
    let ker_eps_t = counital.eps_t.kernel();
    let ker_in = ker_eps_t.is_subspace_of(&w.e.kernel())?;
    let item_ii = BatteryItem {
        label: "ii",
        relation: Relation::AllEquivalent,
        hypothesis: None,
        left: vec![Condition::new(
            "module_unital",
            module.passed("module_unital"),
        )],
        right: vec![
            Condition::new("e_after_eps_t_is_e", e_eps),
            Condition::new("kernel_eps_t_in_kernel_e", ker_in),
        ],
    };

    // (iii)
    let f_central = Subspace::span(da, w.f.columns())?.is_subspace_of(&center)?;
    let e_equivariant = (0..dh).all(|g| {
        (0..dh).all(|h| {
            let gh = data.hopf.algebra().basis_product_vec(g, h);
            m.act_on(g, &w.e.column(h)) == w.e.mul_vec(&gh)
        })
    });
    let t_central = (0..dh)
        .into_par_iter()
        .all(|x| (0..dh).all(|y| center.contains(&data.t_basis(x, y)).expect("same ambient")));
    let item_iii = BatteryItem {
        label: "iii",
        relation: Relation::Equivalent,
        hypothesis: Some(Condition::new("f_image_central", f_central)),
        left: vec![Condition::new(
            "action_associative",
            module.passed("action_associative"),
        )],
        right: vec![
            Condition::new("e_equivariant", e_equivariant),
            Condition::new("t_image_central", t_central),
        ],
    };

    // (iv), (v)
    let u_source = data.u_of_source()?;
    let u_source_central = u_source.is_subspace_of(&center)?;
    let e_one = w.e.mul_vec(data.hopf.unit()) == one_a;
    let unit_acts = module.passed("action_unit");
    let lambda = {
        let n = dh;
        let mut out = zero_vec::<F>(da * da);
        for (p, c) in data.hopf.delta_one().iter().enumerate() {
            if !c.is_zero() {
                axpy(
                    &mut out,
                    c,
                    &tensor_vec(&w.u.column(p / n), &w.v.column(p % n)),
                );
            }
        }
        out
    };
    let lambda_centralizes = u_source.basis().iter().all(|x| {
        let left = alg.mul_tensor2(&tensor_vec(x, &one_a), &lambda);
        let right = alg.mul_tensor2(&lambda, &tensor_vec(&one_a, x));
        left == right
    });
    let item_iv = BatteryItem {
        label: "iv",
        relation: Relation::Implies,
        hypothesis: None,
        left: vec![
            Condition::new("u_source_central", u_source_central),
            Condition::new("e_unital", e_one),
        ],
        right: vec![Condition::new("action_unit", unit_acts)],
    };
    let item_v = BatteryItem {
        label: "v",
        relation: Relation::Implies,
        hypothesis: None,
        left: vec![
            Condition::new("lambda_one_centralizes_u_source", lambda_centralizes),
            Condition::new("action_unit", unit_acts),
        ],
        right: vec![
            Condition::new("e_unital", e_one),
            Condition::new("u_source_central", u_source_central),
        ],
    };
    Ok(Battery {
        items: vec![item_i, item_ii, item_iii, item_iv, item_v],
    })
}

/// Whether the module algebra `m` is the inner action implemented by the
/// witness, decided both by comparing action tensors and by the criterion
/// `(h_1·a) u(h_2) = u(h) a`.
///
/// The hypotheses `e(h) = h·1` and `u(h_1) a f(h_2) = u(h) a` are checked
/// first; their failure is a precondition error.
pub fn second_form_check<F: Field>(data: &InnerData<F>, m: &ModuleAction<F>) -> Result<bool> {
    check_dim(data.hopf.dim(), m.hopf.dim())?;
    check_dim(data.alg.dim(), m.alg.dim())?;
    if !m.validate().is_ok() {
        return Err(Error::Precondition("action is not a module algebra".into()));
    }
    let (dh, da) = (data.hopf.dim(), data.alg.dim());
    let (w, alg) = (&data.witness, &data.alg);
    let one = alg.unit().to_vec();
    if (0..dh).any(|h| m.act_on(h, &one) != w.e.column(h)) {
        return Err(Error::Precondition("e(h) = h·1 fails".into()));
    }
    let coalg = data.hopf.coalgebra();
    for h in 0..dh {
        for a in 0..da {
            let mut lhs = zero_vec::<F>(da);
            for (i, j, c) in coalg.coproduct_terms(h) {
                let p = alg.mul(&alg.mul_basis_right(&w.u.column(*i), a), &w.f.column(*j));
                axpy(&mut lhs, c, &p);
            }
            if lhs != alg.mul_basis_right(&w.u.column(h), a) {
                return Err(Error::Precondition(format!(
                    "u(h_1) a f(h_2) = u(h) a fails at h = {h}, a = {a}"
                )));
            }
        }
    }
    let direct = inner_action_from(data).table == m.table;
    let criterion = (0..dh).all(|h| {
        (0..da).all(|a| {
            let mut lhs = zero_vec::<F>(da);
            for (i, j, c) in coalg.coproduct_terms(h) {
                let p = alg.mul(m.act_basis(*i, a), &w.u.column(*j));
                axpy(&mut lhs, c, &p);
            }
            lhs == alg.mul_basis_right(&w.u.column(h), a)
        })
    });
    if direct != criterion {
        return Err(Error::InvariantViolation(format!(
            "tensor comparison says {direct}, criterion says {criterion}"
        )));
    }
    Ok(direct)
}
