//! Structured corruptions of a weak Hopf algebra, used to show that the
//! validation battery notices broken antipodes and comultiplications.

use clap::ValueEnum;
use num_traits::{One, Zero};
use whk_core::{Field, FiniteCoalgebra, Matrix, Result, Scalar, WeakHopfAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mutation {
    /// Replace the antipode by the identity map.
    AntipodeIdentity,
    /// Replace the antipode by zero.
    AntipodeZero,
    /// Multiply the antipode by 2.
    AntipodeScaled,
    /// Exchange the images of the first two basis elements.
    AntipodeSwapped,
    /// Add 1 to the top-right entry of the antipode matrix.
    AntipodePerturbed,
    /// Multiply the comultiplication by 2.
    ComultScaled,
    /// Add `e_0 ⊗ e_0` to the coproduct of the last basis element.
    ComultExtraTerm,
    /// Exchange the coproducts of the first two basis elements.
    ComultSwapped,
    /// Set the coproduct of the last basis element to zero.
    ComultZeroed,
    /// Exchange `e_0` and `e_1` in the right tensor leg of every coproduct.
    ComultRightLeg,
}

impl Mutation {
    pub const ALL: [Mutation; 10] = [
        Mutation::AntipodeIdentity,
        Mutation::AntipodeZero,
        Mutation::AntipodeScaled,
        Mutation::AntipodeSwapped,
        Mutation::AntipodePerturbed,
        Mutation::ComultScaled,
        Mutation::ComultExtraTerm,
        Mutation::ComultSwapped,
        Mutation::ComultZeroed,
        Mutation::ComultRightLeg,
    ];

    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    /// The corrupted structure. Needs `dim H ≥ 2`.
    pub fn apply(self, h: &WeakHopfAlgebra<Scalar>) -> Result<WeakHopfAlgebra<Scalar>> {
        let n = h.dim();
        if n < 2 {
            return Err(whk_core::Error::Precondition(format!(
                "mutation {} needs dimension at least 2",
                self.name()
            )));
        }
        let s = h.antipode();
        let two = Scalar::from_int(2);
        let antipode = |m: Matrix<Scalar>| h.with_antipode(m);
        match self {
            Mutation::AntipodeIdentity => antipode(Matrix::identity(n)),
            Mutation::AntipodeZero => antipode(Matrix::zeros(n, n)),
            Mutation::AntipodeScaled => antipode(s.scale(&two)),
            Mutation::AntipodeSwapped => {
                let mut cols = s.columns();
                cols.swap(0, 1);
                antipode(Matrix::from_columns(n, &cols)?)
            }
            Mutation::AntipodePerturbed => {
                let mut m = s.clone();
                m.set(0, n - 1, s.get(0, n - 1).clone() + Scalar::one());
                antipode(m)
            }
            _ => {
                let mut t = h.coalgebra().comult_tensor();
                match self {
                    Mutation::ComultScaled => {
                        for x in t.iter_mut().flatten().flatten() {
                            *x = x.clone() * two.clone();
                        }
                    }
                    Mutation::ComultExtraTerm => t[n - 1][0][0] += &Scalar::one(),
                    Mutation::ComultSwapped => t.swap(0, 1),
                    Mutation::ComultZeroed => {
                        for x in t[n - 1].iter_mut().flatten() {
                            *x = Scalar::zero();
                        }
                    }
                    Mutation::ComultRightLeg => {
                        for plane in &mut t {
                            for row in plane.iter_mut() {
                                row.swap(0, 1);
                            }
                        }
                    }
                    _ => unreachable!("antipode mutations handled above"),
                }
                let coalg = FiniteCoalgebra::new(n, t, h.coalgebra().counit().to_vec())?;
                h.with_coalgebra(coalg)
            }
        }
    }
}

/// Whether the battery notices the mutation; `None` when the mutation
/// leaves `h` unchanged (e.g. the identity antipode on a group algebra of
/// exponent 2).
pub fn caught(m: Mutation, h: &WeakHopfAlgebra<Scalar>) -> Result<Option<bool>> {
    let bad = m.apply(h)?;
    Ok((bad != *h).then(|| !full_battery(&bad).is_ok()))
}

/// Validation, the counital identities and the antipode properties together.
pub fn full_battery(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Report<Scalar> {
    let mut r = h.validate();
    r.merge(h.counital_identities());
    r.merge(h.antipode_props());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use whk_core::corpus;

    #[test]
    fn every_effective_mutation_is_caught() {
        for name in corpus::WEAK_HOPF_NAMES {
            let h = corpus::weak_hopf_by_name::<Scalar>(name).unwrap();
            assert!(full_battery(&h).is_ok(), "{name}");
            for m in Mutation::ALL {
                assert_ne!(
                    caught(m, &h).unwrap(),
                    Some(false),
                    "{name}: {} not caught",
                    m.name()
                );
            }
        }
    }

    #[test]
    fn every_mutation_applies_somewhere() {
        for m in Mutation::ALL {
            let applies = corpus::WEAK_HOPF_NAMES.iter().filter(|name| {
                let h = corpus::weak_hopf_by_name::<Scalar>(name).unwrap();
                caught(m, &h).unwrap().is_some()
            });
            assert!(applies.count() >= 3, "{}", m.name());
        }
        let qc2 = corpus::qc2::<Scalar>();
        assert_eq!(caught(Mutation::AntipodeIdentity, &qc2).unwrap(), None);
    }

    #[test]
    fn names_are_kebab_case() {
        assert_eq!(Mutation::AntipodeIdentity.name(), "antipode-identity");
        assert_eq!(Mutation::ComultRightLeg.name(), "comult-right-leg");
    }
}
