//! `whk corpus --run-all`: every check the builtin corpus is expected to pass.

use rayon::prelude::*;
use serde_json::Value;
use whk_core::actions::{inner_action_battery, inner_action_from};
use whk_core::smash::{embeddings_check, smash_action, smash_battery, smash_inner_data};
use whk_core::{
    corpus, Battery, Convolution, Field, FiniteGroupoid, InnerData, Matrix, ModuleAction, Report,
    Scalar, SmashProduct, WeakHopfAlgebra,
};

use crate::mutations::{caught, full_battery, Mutation};
use crate::report::{CliReport, Item};

/// Corpus entries in run order: the builtin weak Hopf algebras, the
/// Sweedler-type coalgebra and the generated groupoid family.
pub const ENTRIES: [&str; 7] = ["qc2", "qs3", "h4", "p2", "c2c1", "sw2", "family"];

/// `Ok(())` passes, `Err(detail)` fails with an explanation.
type Outcome = Result<(), String>;

fn require(holds: bool, detail: impl FnOnce() -> String) -> Outcome {
    if holds {
        Ok(())
    } else {
        Err(detail())
    }
}

fn report_outcome<F: Clone + PartialEq>(r: &Report<F>) -> Outcome {
    require(r.is_ok(), || {
        format!("failed: {}", r.failed_checks().join(", "))
    })
}

fn battery_outcome(b: &Battery) -> Outcome {
    let bad: Vec<_> = b
        .items
        .iter()
        .filter(|i| !i.coherent())
        .map(|i| i.label)
        .collect();
    require(bad.is_empty(), || {
        format!("incoherent items: {}", bad.join(", "))
    })
}

struct Entry {
    name: &'static str,
    items: Vec<Item>,
}

impl Entry {
    fn new(name: &'static str) -> Self {
        Entry {
            name,
            items: Vec::new(),
        }
    }

    /// Records a check; library errors count as failures.
    fn record(&mut self, check: &str, outcome: whk_core::Result<Outcome>) -> bool {
        let check = format!("{}/{check}", self.name);
        let item = match outcome {
            Ok(Ok(())) => Item::new(check, true),
            Ok(Err(detail)) => Item::new(check, false).with_detail(detail),
            Err(e) => Item::new(check, false).with_detail(e.to_string()),
        };
        let passed = item.passed;
        self.items.push(item);
        passed
    }
}

pub fn run_all(filter: &[String], inject: Option<Mutation>) -> CliReport {
    let mut r = CliReport::new("corpus");
    let selected: Vec<&'static str> = ENTRIES
        .into_iter()
        .filter(|e| filter.is_empty() || filter.iter().any(|f| f == e))
        .collect();
    if selected.is_empty() {
        r.warn(format!(
            "filter {filter:?} selects no corpus entries; nothing was checked"
        ));
    }
    r.fact(
        "entries",
        Value::Array(
            selected
                .iter()
                .map(|s| Value::String(s.to_string()))
                .collect(),
        ),
    );
    if let Some(m) = inject {
        r.fact("injected_mutation", m.name());
    }
    let entries: Vec<Entry> = selected
        .par_iter()
        .map(|&name| match name {
            "sw2" => sw2_entry(),
            "family" => family_entry(),
            _ => weak_hopf_entry(name, inject),
        })
        .collect();
    for e in entries {
        for item in e.items {
            r.push(item);
        }
    }
    r
}

fn weak_hopf_entry(name: &'static str, inject: Option<Mutation>) -> Entry {
    let mut entry = Entry::new(name);
    let mut h = corpus::weak_hopf_by_name::<Scalar>(name).expect("corpus name");
    if let Some(m) = inject {
        match m.apply(&h) {
            Ok(bad) => h = bad,
            Err(e) => {
                entry.record("mutation", Err(e));
                return entry;
            }
        }
    }
    let axioms = [
        entry.record("axioms", Ok(report_outcome(&h.validate()))),
        entry.record(
            "counital_identities",
            Ok(report_outcome(&h.counital_identities())),
        ),
        entry.record(
            "antipode_properties",
            Ok(report_outcome(&h.antipode_props())),
        ),
    ];
    if axioms.contains(&false) {
        return entry;
    }

    entry.record("antipode_from_solver", antipode_from_solver(&h));
    entry.record("series_matches_solver", series_matches_solver(&h));
    entry.record(
        "coradical_crosscheck",
        h.coalgebra()
            .filtration_crosscheck()
            .map(|ok| require(ok, String::new)),
    );
    let (qc_identity, qc_central) = h.is_quantum_commutative();
    entry.record(
        "quantum_commutativity_criteria_agree",
        Ok(require(qc_identity == qc_central, || {
            format!("{qc_identity} vs {qc_central}")
        })),
    );
    entry.record("adjoint_inner_action_battery", adjoint_battery(&h));
    entry.record("smash_structure", smash_structure(&h));
    entry.record("smash_battery", smash_five_way(&h));
    entry.record("smash_inner_action_battery", smash_inner_battery(&h));
    if let Some(g) = corpus::groupoid_by_name(name) {
        entry.record(
            "conjugation_action_matches_isotropy",
            conjugation_check(&g, &h),
        );
    }
    entry.record("mutations_caught", Ok(mutations_caught(&h)));
    entry
}

fn antipode_from_solver(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let conv = Convolution::new(h.coalgebra(), h.algebra());
    let (eps_t, eps_s) = h.counital_maps();
    let v = conv.ef_inverse_solve(&Matrix::identity(h.dim()), &eps_t, &eps_s)?;
    Ok(require(v.as_ref() == Some(h.antipode()), || {
        "solver result differs from the antipode".into()
    }))
}

fn series_matches_solver(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let conv = Convolution::new(h.coalgebra(), h.algebra());
    let (eps_t, eps_s) = h.counital_maps();
    let u = Matrix::identity(h.dim());
    let solved = conv.ef_inverse_solve(&u, &eps_t, &eps_s)?;
    let seed = conv.coradical_seed(&u, &eps_t, &eps_s)?;
    let series = seed
        .map(|psi0| conv.ef_inverse_series(&u, &eps_t, &eps_s, &psi0))
        .transpose()?;
    Ok(require(series == solved, || {
        "series and solver disagree".into()
    }))
}

fn adjoint_battery(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let data = InnerData::adjoint(h)?;
    Ok(battery_outcome(&inner_action_battery(
        &data,
        &inner_action_from(&data),
    )?))
}

fn ht_smash(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<SmashProduct<Scalar>> {
    SmashProduct::build(&ModuleAction::target_counital(h)?)
}

fn smash_structure(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let s = ht_smash(h)?;
    if !s.algebra().validate().is_ok() {
        return Ok(Err(
            "smash product is not an associative unital algebra".into()
        ));
    }
    if !embeddings_check(&s)? {
        return Ok(Err(
            "embeddings of A and H are not injective algebra maps".into()
        ));
    }
    let full = s.dim() == s.action().algebra().dim() * h.dim();
    Ok(require(full == h.is_hopf(), || {
        format!("dim {} against is_hopf = {}", s.dim(), h.is_hopf())
    }))
}

fn smash_five_way(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    Ok(battery_outcome(&smash_battery(&ht_smash(h)?)?))
}

fn smash_inner_battery(h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let s = ht_smash(h)?;
    let data = smash_inner_data(&s)?;
    Ok(battery_outcome(&inner_action_battery(
        &data,
        &smash_action(&s)?,
    )?))
}

fn conjugation_check(g: &FiniteGroupoid, h: &WeakHopfAlgebra<Scalar>) -> whk_core::Result<Outcome> {
    let (valid, iso) = g.isotropy_action_check(&ModuleAction::target_counital(h)?)?;
    Ok(require(valid == iso, || {
        format!("action valid = {valid}, isotropy union = {iso}")
    }))
}

fn mutations_caught(h: &WeakHopfAlgebra<Scalar>) -> Outcome {
    let missed: Vec<String> = Mutation::ALL
        .into_iter()
        .filter(|&m| !matches!(caught(m, h), Ok(Some(true) | None)))
        .map(Mutation::name)
        .collect();
    require(missed.is_empty(), || {
        format!("not caught: {}", missed.join(", "))
    })
}

fn sw2_entry() -> Entry {
    let mut entry = Entry::new("sw2");
    let c = corpus::sw2::<Scalar>();
    if !entry.record("coalgebra_axioms", Ok(report_outcome(&c.validate()))) {
        return entry;
    }
    entry.record(
        "coradical_crosscheck",
        c.filtration_crosscheck().map(|ok| require(ok, String::new)),
    );
    let q = whk_core::FiniteAlgebra::new(
        1,
        vec![vec![vec![Scalar::from_int(1)]]],
        vec![Scalar::from_int(1)],
    );
    let outcome = q.and_then(|q| {
        let conv = Convolution::new(&c, &q);
        let u = Matrix::from_rows(vec![vec![Scalar::from_int(2), Scalar::from_int(3)]])?;
        let unit = conv.unit();
        let solved = conv.ef_inverse_solve(&u, &unit, &unit)?;
        let seed = conv.coradical_seed(&u, &unit, &unit)?;
        let series = seed
            .map(|p| conv.ef_inverse_series(&u, &unit, &unit, &p))
            .transpose()?;
        Ok(require(solved.is_some() && series == solved, || {
            "series and solver disagree".into()
        }))
    });
    entry.record("series_matches_solver", outcome);
    entry
}

fn family_entry() -> Entry {
    let mut entry = Entry::new("family");
    let family = FiniteGroupoid::family();
    let describe = |i: usize| {
        let g = &family[i];
        format!(
            "member {i} ({} objects, {} morphisms)",
            g.objects().len(),
            g.num_morphisms()
        )
    };
    let first_bad = |p: &(dyn Fn(&FiniteGroupoid) -> whk_core::Result<bool> + Sync)| -> Outcome {
        let bad = family
            .par_iter()
            .enumerate()
            .find_first(|(_, g)| !matches!(p(g), Ok(true)))
            .map(|(i, _)| i);
        match bad {
            None => Ok(()),
            Some(i) => Err(describe(i)),
        }
    };
    let tables = first_bad(&|g| Ok(g.validate().is_ok()));
    if !entry.record("groupoid_tables", Ok(tables)) {
        return entry;
    }
    entry.record(
        "weak_hopf_axioms",
        Ok(first_bad(&|g| Ok(full_battery(&g.algebra()).is_ok()))),
    );
    entry.record(
        "quantum_commutativity_matches_isotropy",
        Ok(first_bad(&|g| {
            let (a, b) = g.algebra::<Scalar>().is_quantum_commutative();
            Ok(a == b && a == g.is_isotropy_disjoint_union())
        })),
    );
    let iso = family
        .iter()
        .filter(|g| g.is_isotropy_disjoint_union())
        .count();
    entry.record(
        "verdicts_mixed",
        Ok(require(iso > 0 && iso < family.len(), || {
            format!("{iso} of {} isotropy unions", family.len())
        })),
    );
    entry.record(
        "smash_battery",
        Ok(first_bad(&|g| {
            smash_battery(&ht_smash(&g.algebra())?).map(|b| b.coherent())
        })),
    );
    entry.record(
        "conjugation_action_matches_isotropy",
        Ok(first_bad(&|g| {
            let (valid, iso) =
                g.isotropy_action_check(&ModuleAction::target_counital(&g.algebra::<Scalar>())?)?;
            Ok(valid == iso)
        })),
    );
    entry
}
