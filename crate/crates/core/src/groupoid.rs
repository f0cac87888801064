//! Finite groupoids presented by composition tables, and their groupoid
//! algebras.
//!
//! Composition convention: `comp(g, h)` is "g after h" and is defined iff
//! `src(g) == tgt(h)`.

use crate::actions::ModuleAction;
use crate::algebra::FiniteAlgebra;
use crate::coalgebra::FiniteCoalgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{tensor_vec, zero_vec, Matrix};
use crate::report::Report;
use crate::smash::SmashProduct;
use crate::weakhopf::WeakHopfAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    comp: Vec<Vec<Option<usize>>>,
    inv: Vec<usize>,
    identities: Vec<usize>,
}

impl FiniteGroupoid {
    /// Checks table shapes and index ranges; the groupoid axioms are checked
    /// by [`Self::validate`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: Vec<Vec<Option<usize>>>,
        inv: Vec<usize>,
        identities: Vec<usize>,
    ) -> Result<Self> {
        let (no, nm) = (objects.len(), morphisms.len());
        let bad = |what: &str| Err(Error::Shape(format!("groupoid table: {what}")));
        if no == 0 || nm == 0 {
            return bad("no objects or morphisms");
        }
        if src.len() != nm || tgt.len() != nm || inv.len() != nm || comp.len() != nm {
            return bad("per-morphism tables have the wrong length");
        }
        if identities.len() != no {
            return bad("identity table has the wrong length");
        }
        if src.iter().chain(&tgt).any(|&o| o >= no) {
            return bad("object index out of range");
        }
        if inv.iter().chain(&identities).any(|&m| m >= nm) {
            return bad("morphism index out of range");
        }
        for (g, row) in comp.iter().enumerate() {
            if row.len() != nm {
                return bad("composition row has the wrong length");
            }
            for (h, entry) in row.iter().enumerate() {
                match (entry, src[g] == tgt[h]) {
                    (Some(m), true) if *m < nm => {}
                    (Some(_), true) => return bad("composite index out of range"),
                    (None, true) => {
                        return Err(Error::Shape(format!(
                            "composable pair ({}, {}) has no composite",
                            morphisms[g], morphisms[h]
                        )))
                    }
                    (Some(_), false) => {
                        return Err(Error::Shape(format!(
                            "non-composable pair ({}, {}) has a composite",
                            morphisms[g], morphisms[h]
                        )))
                    }
                    (None, false) => {}
                }
            }
        }
        Ok(FiniteGroupoid {
            objects,
            morphisms,
            src,
            tgt,
            comp,
            inv,
            identities,
        })
    }

    /// One connected component: the pair groupoid on `objects` objects times
    /// the cyclic group of order `order`. Morphism `(j, i, a)` goes from `i`
    /// to `j` carrying group element `a`.
    pub fn connected(objects: usize, order: usize) -> Self {
        assert!(objects >= 1 && order >= 1);
        let index = |j: usize, i: usize, a: usize| (j * objects + i) * order + a;
        let nm = objects * objects * order;
        let mut morphisms = Vec::with_capacity(nm);
        let (mut src, mut tgt, mut inv) = (vec![0; nm], vec![0; nm], vec![0; nm]);
        for j in 0..objects {
            for i in 0..objects {
                for a in 0..order {
                    let m = index(j, i, a);
                    morphisms.push(match (objects, order) {
                        (1, _) => format!("c{a}"),
                        (_, 1) => format!("a{i}{j}"),
                        _ => format!("a{i}{j}c{a}"),
                    });
                    src[m] = i;
                    tgt[m] = j;
                    inv[m] = index(i, j, (order - a) % order);
                }
            }
        }
        let mut comp = vec![vec![None; nm]; nm];
        for k in 0..objects {
            for j in 0..objects {
                for b in 0..order {
                    for i in 0..objects {
                        for a in 0..order {
                            comp[index(k, j, b)][index(j, i, a)] =
                                Some(index(k, i, (a + b) % order));
                        }
                    }
                }
            }
        }
        let identities = (0..objects).map(|i| index(i, i, 0)).collect();
        FiniteGroupoid {
            objects: (0..objects).map(|i| format!("o{i}")).collect(),
            morphisms,
            src,
            tgt,
            comp,
            inv,
            identities,
        }
    }

    pub fn cyclic_group(order: usize) -> Self {
        Self::connected(1, order)
    }

    /// A group presented as a one-object groupoid; `mult[g][h]` is `g·h`.
    pub fn group(names: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::Shape("group table has no identity".into()))?;
        let inv = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mult[g][h] == identity)
                    .ok_or_else(|| Error::Shape(format!("{} has no inverse", names[g])))
            })
            .collect::<Result<Vec<_>>>()?;
        let comp = mult
            .into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect();
        Self::new(
            vec!["*".into()],
            names,
            vec![0; n],
            vec![0; n],
            comp,
            inv,
            vec![identity],
        )
    }

    /// The pair groupoid: exactly one morphism between any two objects.
    pub fn pair(objects: usize) -> Self {
        Self::connected(objects, 1)
    }

    pub fn disjoint_union(parts: &[FiniteGroupoid]) -> Self {
        let mut out = FiniteGroupoid {
            objects: Vec::new(),
            morphisms: Vec::new(),
            src: Vec::new(),
            tgt: Vec::new(),
            comp: Vec::new(),
            inv: Vec::new(),
            identities: Vec::new(),
        };
        let total: usize = parts.iter().map(|p| p.morphisms.len()).sum();
        let (mut obj_off, mut mor_off) = (0, 0);
        for (k, p) in parts.iter().enumerate() {
            let tag = |s: &String| {
                if parts.len() > 1 {
                    format!("{s}_{k}")
                } else {
                    s.clone()
                }
            };
            out.objects.extend(p.objects.iter().map(tag));
            out.morphisms.extend(p.morphisms.iter().map(tag));
            out.src.extend(p.src.iter().map(|o| o + obj_off));
            out.tgt.extend(p.tgt.iter().map(|o| o + obj_off));
            out.inv.extend(p.inv.iter().map(|m| m + mor_off));
            out.identities
                .extend(p.identities.iter().map(|m| m + mor_off));
            for row in &p.comp {
                let mut full = vec![None; total];
                for (h, c) in row.iter().enumerate() {
                    full[h + mor_off] = c.map(|m| m + mor_off);
                }
                out.comp.push(full);
            }
            obj_off += p.objects.len();
            mor_off += p.morphisms.len();
        }
        out
    }

    /// Groupoids with at most three objects whose connected components are
    /// pair groupoids times cyclic isotropy groups of order at most three,
    /// one per isomorphism type.
    pub fn family() -> Vec<FiniteGroupoid> {
        // component types (objects, isotropy order)
        let kinds: Vec<(usize, usize)> =
            (1..=3).flat_map(|n| (1..=3).map(move |k| (n, k))).collect();
        let mut out = Vec::new();
        // nondecreasing sequences of component kinds with total objects <= 3
        fn extend(
            kinds: &[(usize, usize)],
            start: usize,
            used: usize,
            current: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if !current.is_empty() {
                out.push(current.clone());
            }
            for (idx, &(n, k)) in kinds.iter().enumerate().skip(start) {
                if used + n <= 3 {
                    current.push((n, k));
                    extend(kinds, idx, used + n, current, out);
                    current.pop();
                }
            }
        }
        let mut shapes = Vec::new();
        extend(&kinds, 0, 0, &mut Vec::new(), &mut shapes);
        for shape in shapes {
            let parts: Vec<FiniteGroupoid> =
                shape.iter().map(|&(n, k)| Self::connected(n, k)).collect();
            out.push(Self::disjoint_union(&parts));
        }
        out
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[String] {
        &self.morphisms
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn src(&self, m: usize) -> usize {
        self.src[m]
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.tgt[m]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp[g][h]
    }

    pub fn inverse(&self, m: usize) -> usize {
        self.inv[m]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    /// Replaces one composition entry; the result may violate the axioms.
    pub fn with_composite(&self, g: usize, h: usize, result: usize) -> Result<Self> {
        let mut comp = self.comp.clone();
        comp[g][h] = Some(result);
        Self::new(
            self.objects.clone(),
            self.morphisms.clone(),
            self.src.clone(),
            self.tgt.clone(),
            comp,
            self.inv.clone(),
            self.identities.clone(),
        )
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m == name)
    }

    /// Category and inverse axioms. Evaluated sides in the report are
    /// morphism indices.
    pub fn validate(&self) -> Report<usize> {
        let nm = self.morphisms.len();
        let mut r = Report::new();
        for c in [
            "identity_endpoints",
            "composite_endpoints",
            "associativity",
            "identity_laws",
            "inverse_endpoints",
            "inverse_laws",
        ] {
            r.declare(c);
        }
        for (o, &id) in self.identities.iter().enumerate() {
            r.compare(
                "identity_endpoints",
                &[o],
                vec![self.src[id], self.tgt[id]],
                vec![o, o],
            );
        }
        for g in 0..nm {
            for h in 0..nm {
                if let Some(gh) = self.comp[g][h] {
                    r.compare(
                        "composite_endpoints",
                        &[g, h],
                        vec![self.src[gh], self.tgt[gh]],
                        vec![self.src[h], self.tgt[g]],
                    );
                }
            }
        }
        for g in 0..nm {
            for h in 0..nm {
                let Some(gh) = self.comp[g][h] else { continue };
                for k in 0..nm {
                    let Some(hk) = self.comp[h][k] else { continue };
                    let left = self.comp[gh][k];
                    let right = self.comp[g][hk];
                    if left != right || left.is_none() {
                        r.fail(
                            "associativity",
                            vec![g, h, k],
                            left.into_iter().collect(),
                            right.into_iter().collect(),
                        );
                    }
                }
            }
        }
        for m in 0..nm {
            let at_src = self.comp[m][self.identities[self.src[m]]];
            let at_tgt = self.comp[self.identities[self.tgt[m]]][m];
            r.compare("identity_laws", &[m], at_src.into_iter().collect(), vec![m]);
            r.compare("identity_laws", &[m], at_tgt.into_iter().collect(), vec![m]);
            let i = self.inv[m];
            r.compare(
                "inverse_endpoints",
                &[m],
                vec![self.src[i], self.tgt[i]],
                vec![self.tgt[m], self.src[m]],
            );
            // inv(g)∘g = id(src g), g∘inv(g) = id(tgt g)
            r.compare(
                "inverse_laws",
                &[m],
                self.comp[i][m].into_iter().collect(),
                vec![self.identities[self.src[m]]],
            );
            r.compare(
                "inverse_laws",
                &[m],
                self.comp[m][i].into_iter().collect(),
                vec![self.identities[self.tgt[m]]],
            );
        }
        r
    }

    /// Every morphism is an endomorphism.
    pub fn is_isotropy_disjoint_union(&self) -> bool {
        (0..self.morphisms.len()).all(|m| self.src[m] == self.tgt[m])
    }

    /// Basis = morphisms; `g·h = g∘h` when composable and 0 otherwise, unit
    /// the sum of identities, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn algebra<F: Field>(&self) -> WeakHopfAlgebra<F> {
        let n = self.morphisms.len();
        let mut unit = zero_vec::<F>(n);
        for &id in &self.identities {
            unit[id] = F::one();
        }
        let alg = FiniteAlgebra::from_products(n, unit, |g, h| {
            let mut v = zero_vec::<F>(n);
            if self.src[g] == self.tgt[h] {
                if let Some(gh) = self.comp[g][h] {
                    v[gh] = F::one();
                }
            }
            v
        })
        .expect("square table");
        let coalg = FiniteCoalgebra::from_coproducts(n, vec![F::one(); n], |g| {
            let mut v = zero_vec::<F>(n * n);
            v[g * n + g] = F::one();
            v
        })
        .expect("square table");
        let mut antipode = Matrix::zeros(n, n);
        for g in 0..n {
            antipode.set(self.inv[g], g, F::one());
        }
        WeakHopfAlgebra::new(alg, coalg, antipode).expect("matching dimensions")
    }
}

impl FiniteGroupoid {
    /// Whether `h·(x#g) = (h·x) # h g h⁻¹` is a module algebra structure on
    /// `A#ℚG`, paired with [`Self::is_isotropy_disjoint_union`]. `m` must act
    /// through this groupoid's algebra.
    pub fn isotropy_action_check<F: Field>(&self, m: &ModuleAction<F>) -> Result<(bool, bool)> {
        let n = self.num_morphisms();
        crate::error::check_dim(n, m.hopf().dim())?;
        let s = SmashProduct::build(m)?;
        let h_alg = m.hopf().algebra();
        let da = m.algebra().dim();
        let coords = s.quotient_coordinates().to_vec();
        let action = ModuleAction::from_basis_fn(m.hopf().clone(), s.algebra().clone(), |h, k| {
            let (x, g) = (coords[k] / n, coords[k] % n);
            let hg = h_alg.basis_product_vec(h, g);
            let conj = h_alg.mul_basis_right(&hg, self.inv[h]);
            let rep = tensor_vec(m.act_basis(h, x), &conj);
            debug_assert_eq!(rep.len(), da * n);
            s.class_of(&rep)
        })?;
        Ok((action.validate().is_ok(), self.is_isotropy_disjoint_union()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::{unit_vec, Subspace};
    use crate::Scalar;

    #[test]
    fn corpus_groupoids_are_valid() {
        assert!(corpus::p2_groupoid().validate().is_ok());
        assert!(corpus::c2c1_groupoid().validate().is_ok());
        assert!(FiniteGroupoid::cyclic_group(3).validate().is_ok());
        for g in FiniteGroupoid::family() {
            assert!(g.validate().is_ok(), "{:?}", g.morphisms());
        }
    }

    #[test]
    fn inverse_mutation_is_caught() {
        let p2 = corpus::p2_groupoid();
        let f = p2.morphism_index("f").unwrap();
        let finv = p2.morphism_index("f^-1").unwrap();
        let e1 = p2.morphism_index("e1").unwrap();
        // f∘f⁻¹ = e1 instead of e2
        let bad = p2.with_composite(f, finv, e1).unwrap();
        let report = bad.validate();
        assert!(!report.passed("inverse_laws"));
    }

    #[test]
    fn missing_composite_is_malformed() {
        let p2 = corpus::p2_groupoid();
        let mut comp = p2.comp.clone();
        comp[0][0] = None;
        let r = FiniteGroupoid::new(
            p2.objects.clone(),
            p2.morphisms.clone(),
            p2.src.clone(),
            p2.tgt.clone(),
            comp,
            p2.inv.clone(),
            p2.identities.clone(),
        );
        assert!(matches!(r, Err(Error::Shape(_))));
    }

    #[test]
    fn isotropy_verdicts() {
        assert!(!corpus::p2_groupoid().is_isotropy_disjoint_union());
        assert!(FiniteGroupoid::cyclic_group(2).is_isotropy_disjoint_union());
        assert!(corpus::c2c1_groupoid().is_isotropy_disjoint_union());
    }

    #[test]
    fn family_size_and_verdicts() {
        let fam = FiniteGroupoid::family();
        assert_eq!(fam.len(), 34);
        let disjoint = fam
            .iter()
            .filter(|g| g.is_isotropy_disjoint_union())
            .count();
        assert_eq!(disjoint, 19);
    }

    #[test]
    fn pair_groupoid_algebra() {
        let g = corpus::p2_groupoid();
        let h = g.algebra::<Scalar>();
        assert!(h.validate().is_ok());
        assert!(h.counital_identities().is_ok());
        let e1 = g.morphism_index("e1").unwrap();
        let e2 = g.morphism_index("e2").unwrap();
        let f = g.morphism_index("f").unwrap();
        let mut unit = vec![Scalar::from_int(0); 4];
        unit[e1] = Scalar::from_int(1);
        unit[e2] = Scalar::from_int(1);
        assert_eq!(h.unit(), unit.as_slice());
        let data = h.counital_data().unwrap();
        assert_eq!(data.eps_t.column(f), unit_vec(4, e2));
        assert_eq!(data.eps_s.column(f), unit_vec(4, e1));
    }

    #[test]
    fn counital_maps_are_target_and_source() {
        for g in FiniteGroupoid::family().into_iter().take(12) {
            let h = g.algebra::<Scalar>();
            let data = h.counital_data().unwrap();
            let n = g.num_morphisms();
            for m in 0..n {
                assert_eq!(data.eps_t.column(m), unit_vec(n, g.identity(g.tgt(m))));
                assert_eq!(data.eps_s.column(m), unit_vec(n, g.identity(g.src(m))));
            }
            let ids = Subspace::span(
                n,
                (0..g.objects().len()).map(|o| unit_vec(n, g.identity(o))),
            )
            .unwrap();
            assert_eq!(data.target, ids);
            assert_eq!(data.source, ids);
        }
    }

    #[test]
    fn one_object_group_is_hopf() {
        let h = FiniteGroupoid::cyclic_group(2).algebra::<Scalar>();
        assert!(h.is_hopf());
        assert!(h.validate().is_ok());
    }

    #[test]
    fn isotropy_action_on_corpus() {
        for (g, expected) in [
            (corpus::p2_groupoid(), false),
            (corpus::c2c1_groupoid(), true),
            (corpus::qs3_groupoid(), true),
        ] {
            let m = ModuleAction::target_counital(&g.algebra::<Scalar>()).unwrap();
            assert_eq!(g.isotropy_action_check(&m).unwrap(), (expected, expected));
        }
    }
}
