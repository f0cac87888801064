//! Acceptance suite: one line per criterion, then a single assertion that
//! all of them passed. Run with `--nocapture` to see the lines.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use whk_cli::mutations::{caught, full_battery, Mutation};
use whk_core::actions::{inner_action_battery, inner_action_from};
use whk_core::smash::{embeddings_check, smash_action, smash_battery, smash_inner_data};
use whk_core::{
    corpus, Convolution, Field, FiniteAlgebra, FiniteCoalgebra, FiniteGroupoid, InnerData, Matrix,
    ModuleAction, Scalar, SmashProduct, WeakHopfAlgebra,
};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ensure(holds: bool, msg: impl FnOnce() -> String) -> Check {
    if holds {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus_wha() -> Vec<(&'static str, WeakHopfAlgebra<Scalar>)> {
    corpus::WEAK_HOPF_NAMES
        .iter()
        .map(|&n| (n, corpus::weak_hopf_by_name(n).unwrap()))
        .collect()
}

/// `M_2(ℚ)` with `E_ij` at index `2i + j`.
fn m2() -> FiniteAlgebra<Scalar> {
    FiniteAlgebra::from_products(4, vec![q(1), q(0), q(0), q(1)], |a, b| {
        let mut v = vec![q(0); 4];
        if a % 2 == b / 2 {
            v[(a / 2) * 2 + b % 2] = q(1);
        }
        v
    })
    .unwrap()
}

fn rationals() -> FiniteAlgebra<Scalar> {
    FiniteAlgebra::from_products(1, vec![q(1)], |_, _| vec![q(1)]).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, range: i64) -> Matrix<Scalar> {
    let data = (0..rows * cols)
        .map(|_| q(rng.gen_range(-range..=range)))
        .collect();
    Matrix::new(rows, cols, data).unwrap()
}

/// Projection of `C` onto the canonical complement of `C_0`, killing `C_0`.
fn kill_coradical(c: &FiniteCoalgebra<Scalar>) -> Matrix<Scalar> {
    let c0 = c.coradical().unwrap();
    let n = c.dim();
    let mut p = Matrix::<Scalar>::identity(n);
    for (b, &pivot) in c0.basis().iter().zip(c0.pivots()) {
        // e_pivot ↦ e_pivot − b, which vanishes on every pivot coordinate
        for (r, x) in b.iter().enumerate() {
            let cur = p.get(r, pivot).clone();
            p.set(r, pivot, cur - x.clone());
        }
    }
    p
}

/// A smash product by the target counital action, with everything the
/// criteria need about it.
struct SmashCase {
    label: String,
    hopf: WeakHopfAlgebra<Scalar>,
    groupoid: Option<FiniteGroupoid>,
    action: ModuleAction<Scalar>,
    smash: SmashProduct<Scalar>,
}

fn smash_cases() -> Vec<SmashCase> {
    let mut inputs: Vec<(String, WeakHopfAlgebra<Scalar>, Option<FiniteGroupoid>)> = corpus_wha()
        .into_iter()
        .map(|(n, h)| (n.to_string(), h, corpus::groupoid_by_name(n)))
        .collect();
    for (i, g) in FiniteGroupoid::family().into_iter().enumerate() {
        inputs.push((format!("family#{i}"), g.algebra(), Some(g)));
    }
    inputs
        .into_par_iter()
        .map(|(label, hopf, groupoid)| {
            let action = ModuleAction::target_counital(&hopf).unwrap();
            let smash = SmashProduct::build(&action).unwrap();
            SmashCase {
                label,
                hopf,
                groupoid,
                action,
                smash,
            }
        })
        .collect()
}

fn axiom_suite() -> Check {
    for (name, h) in corpus_wha() {
        for (what, r) in [
            ("axioms", h.validate()),
            ("counital identities", h.counital_identities()),
            ("antipode", h.antipode_props()),
        ] {
            ensure(r.is_ok(), || {
                format!("{name}: {what} failed {:?}", r.failed_checks())
            })?;
        }
    }
    for m in Mutation::ALL {
        let mut effective = 0;
        for (name, h) in corpus_wha() {
            match caught(m, &h).map_err(|e| e.to_string())? {
                Some(true) => effective += 1,
                Some(false) => return Err(format!("{} on {name} not caught", m.name())),
                None => {}
            }
        }
        ensure(effective > 0, || {
            format!("{} changes no corpus member", m.name())
        })?;
        // the named checks that notice it on the pair groupoid algebra
        let bad = m.apply(&corpus::p2()).map_err(|e| e.to_string())?;
        ensure(!full_battery(&bad).failed_checks().is_empty(), || {
            format!("{} has no named failure", m.name())
        })?;
    }
    Ok(())
}

fn antipode_as_inverse() -> Check {
    for (name, h) in corpus_wha() {
        let conv = Convolution::new(h.coalgebra(), h.algebra());
        let (eps_t, eps_s) = h.counital_maps();
        let v = conv
            .ef_inverse_solve(&Matrix::identity(h.dim()), &eps_t, &eps_s)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(v.as_ref() == Some(h.antipode()), || {
            format!("{name}: solver result is not S")
        })?;
    }
    Ok(())
}

fn solver_series_agreement() -> Check {
    let qs3 = corpus::qs3::<Scalar>();
    let h4 = corpus::h4::<Scalar>();
    let sw2 = corpus::sw2::<Scalar>();
    let (qq, mat) = (rationals(), m2());

    // (source, target, u, e, f, expected inverse when known independently)
    type Instance<'a> = (
        &'a str,
        &'a FiniteCoalgebra<Scalar>,
        &'a FiniteAlgebra<Scalar>,
        Matrix<Scalar>,
        Matrix<Scalar>,
        Matrix<Scalar>,
        Option<Matrix<Scalar>>,
    );
    let mut instances: Vec<Instance> = Vec::new();
    for (name, h) in [("qs3", &qs3), ("h4", &h4)] {
        let conv = Convolution::new(h.coalgebra(), h.algebra());
        let (eps_t, eps_s) = h.counital_maps();
        let id = Matrix::identity(h.dim());
        instances.push((
            name,
            h.coalgebra(),
            h.algebra(),
            id.clone(),
            eps_t.clone(),
            eps_s.clone(),
            Some(h.antipode().clone()),
        ));
        // Hopf: S has convolution inverse id
        instances.push((
            name,
            h.coalgebra(),
            h.algebra(),
            h.antipode().clone(),
            conv.unit(),
            conv.unit(),
            Some(id),
        ));
        let two_unit = conv.unit().scale(&q(2));
        instances.push((
            name,
            h.coalgebra(),
            h.algebra(),
            two_unit,
            conv.unit(),
            conv.unit(),
            Some(conv.unit().scale(&Scalar::from_frac(1, 2))),
        ));
    }
    // u = 2g* + 3x* into ℚ: inverse (1/2) g* − (3/4) x*
    instances.push((
        "sw2→Q",
        &sw2,
        &qq,
        Matrix::from_rows(vec![vec![q(2), q(3)]]).unwrap(),
        Matrix::from_rows(vec![vec![q(1), q(0)]]).unwrap(),
        Matrix::from_rows(vec![vec![q(1), q(0)]]).unwrap(),
        Some(
            Matrix::from_rows(vec![vec![
                Scalar::from_frac(1, 2),
                Scalar::from_frac(-3, 4),
            ]])
            .unwrap(),
        ),
    ));
    // into M_2: e = ε E11, f = ε E22, u = (2g* + 3x*) E12, v = (g*/2 − 3x*/4) E21
    let at = |idx: usize, g: Scalar, x: Scalar| {
        let mut m = Matrix::zeros(4, 2);
        m.set(idx, 0, g);
        m.set(idx, 1, x);
        m
    };
    instances.push((
        "sw2→M2",
        &sw2,
        &mat,
        at(1, q(2), q(3)),
        at(0, q(1), q(0)),
        at(3, q(1), q(0)),
        Some(at(2, Scalar::from_frac(1, 2), Scalar::from_frac(-3, 4))),
    ));

    for (name, c, a, u, e, f, expected) in &instances {
        let conv = Convolution::new(c, a);
        let solved = conv
            .ef_inverse_solve(u, e, f)
            .map_err(|err| format!("{name}: {err}"))?;
        let seed = conv
            .coradical_seed(u, e, f)
            .map_err(|err| format!("{name}: {err}"))?;
        let series = seed
            .map(|p| conv.ef_inverse_series(u, e, f, &p))
            .transpose()
            .map_err(|err| format!("{name}: {err}"))?;
        ensure(solved == series, || {
            format!("{name}: solve and series differ")
        })?;
        ensure(solved == *expected, || {
            format!("{name}: inverse differs from the hand computation")
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, c, a) in [
        ("qs3", qs3.coalgebra(), qs3.algebra()),
        ("h4", h4.coalgebra(), h4.algebra()),
        ("sw2", &sw2, &mat),
    ] {
        let conv = Convolution::new(c, a);
        let kill = kill_coradical(c);
        let length = c
            .coradical_filtration()
            .map_err(|e| e.to_string())?
            .length();
        for _ in 0..50 {
            let gamma = random_matrix(&mut rng, a.dim(), c.dim(), 3).mul(&kill);
            let power = conv.power(&gamma, length + 1).map_err(|e| e.to_string())?;
            ensure(power.is_zero(), || format!("{name}: γ^(L+1) ≠ 0"))?;
            ensure(
                conv.truncation_check(&gamma).map_err(|e| e.to_string())?,
                || format!("{name}: truncation"),
            )?;
        }
    }
    Ok(())
}

fn uniqueness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut count = 0;
    for (name, h) in corpus_wha() {
        let conv = Convolution::new(h.coalgebra(), h.algebra());
        let (eps_t, eps_s) = h.counital_maps();
        let (u, v) = (Matrix::identity(h.dim()), h.antipode().clone());
        let unit = conv.unit();
        let mut invertible = || loop {
            let w = unit.add(&random_matrix(&mut rng, h.dim(), h.dim(), 1));
            if let Some(w_inv) = conv.ef_inverse_solve(&w, &unit, &unit).unwrap() {
                // independent confirmation of the two-sided inverse
                assert_eq!(conv.convolve(&w, &w_inv).unwrap(), unit);
                assert_eq!(conv.convolve(&w_inv, &w).unwrap(), unit);
                return (w, w_inv);
            }
        };
        for _ in 0..20 {
            let (w1, w1i) = invertible();
            let (w2, w2i) = invertible();
            let p = |maps: &[&Matrix<Scalar>]| conv.product(maps).unwrap();
            let u2 = p(&[&w1, &u, &w2i]);
            let e2 = p(&[&w1, &eps_t, &w1i]);
            let f2 = p(&[&w2, &eps_s, &w2i]);
            let v2 = p(&[&w2, &v, &w1i]);
            let witness = whk_core::EFWitness {
                u: u2.clone(),
                v: v2.clone(),
                e: e2.clone(),
                f: f2.clone(),
            };
            ensure(conv.check_witness(&witness).unwrap().is_ok(), || {
                format!("{name}: perturbed witness")
            })?;
            let sol = conv
                .inverse_system(&u2, &e2, &f2)
                .map_err(|e| e.to_string())?;
            let Some(x) = sol.particular else {
                return Err(format!("{name}: perturbed system inconsistent"));
            };
            ensure(sol.homogeneous.dim() == 0, || {
                format!("{name}: {}-dim solution space", sol.homogeneous.dim())
            })?;
            ensure(x == v2.data(), || {
                format!("{name}: solution differs from the conjugated witness")
            })?;
            count += 1;
        }
    }
    ensure(count == 100, || format!("{count} instances"))
}

fn quantum_commutativity(cases: &[SmashCase]) -> Check {
    let mut verdicts = [0usize; 2];
    for c in cases {
        let (a, b) = c.hopf.is_quantum_commutative();
        ensure(a == b, || format!("{}: criteria disagree", c.label))?;
        verdicts[a as usize] += 1;
    }
    let family = cases
        .iter()
        .filter(|c| c.label.starts_with("family"))
        .count();
    ensure(family >= 20 && verdicts[0] > 0 && verdicts[1] > 0, || {
        format!("{family} members, verdicts {verdicts:?}")
    })
}

fn inner_action_battery_coherence(cases: &[SmashCase]) -> Check {
    for (name, h) in corpus_wha() {
        let data = InnerData::adjoint(&h).map_err(|e| e.to_string())?;
        let b =
            inner_action_battery(&data, &inner_action_from(&data)).map_err(|e| e.to_string())?;
        ensure(b.coherent(), || {
            format!("{name}: adjoint battery incoherent")
        })?;
        let iii = b.item("iii").unwrap();
        println!(
            "      {name}: central image hypothesis {}",
            if iii.applies() {
                "holds"
            } else {
                "fails, (iii) not asserted"
            }
        );
    }
    for c in cases.iter().filter(|c| c.smash.dim() <= 16) {
        let data = smash_inner_data(&c.smash).map_err(|e| format!("{}: {e}", c.label))?;
        let m = smash_action(&c.smash).map_err(|e| format!("{}: {e}", c.label))?;
        let b = inner_action_battery(&data, &m).map_err(|e| format!("{}: {e}", c.label))?;
        ensure(b.coherent(), || {
            format!("{}: smash battery incoherent", c.label)
        })?;
    }
    Ok(())
}

fn five_way(cases: &[SmashCase]) -> Check {
    let results: Vec<(String, Vec<bool>)> = cases
        .par_iter()
        .map(|c| {
            let b = smash_battery(&c.smash).unwrap();
            let item = b.item("five_way").unwrap();
            let all: Vec<bool> = item
                .left
                .iter()
                .chain(&item.right)
                .map(|x| x.holds)
                .collect();
            (c.label.clone(), all)
        })
        .collect();
    let mut family = 0;
    for (label, v) in &results {
        ensure(v.len() == 5 && v.iter().all(|&x| x == v[0]), || {
            format!("{label}: {v:?}")
        })?;
        family += label.starts_with("family") as usize;
        match label.as_str() {
            "p2" => ensure(!v[0], || "p2 not all false".into())?,
            "c2c1" => ensure(v[0], || "c2c1 not all true".into())?,
            _ => {}
        }
    }
    ensure(family >= 20, || format!("only {family} family members"))
}

fn isotropy_criterion(cases: &[SmashCase]) -> Check {
    let outcomes: Vec<(String, whk_core::Result<(bool, bool)>)> = cases
        .par_iter()
        .filter_map(|c| {
            c.groupoid
                .as_ref()
                .map(|g| (c.label.clone(), g.isotropy_action_check(&c.action)))
        })
        .collect();
    for (label, r) in outcomes {
        let (valid, iso) = r.map_err(|e| format!("{label}: {e}"))?;
        ensure(valid == iso, || {
            format!("{label}: action valid {valid}, isotropy union {iso}")
        })?;
    }
    Ok(())
}

fn smash_structure(cases: &[SmashCase]) -> Check {
    let hopf_trivial: Vec<SmashCase> = corpus_wha()
        .into_iter()
        .filter(|(_, h)| h.is_hopf())
        .map(|(n, h)| {
            let action = ModuleAction::trivial(&h);
            let smash = SmashProduct::build(&action).unwrap();
            SmashCase {
                label: format!("{n} trivial"),
                hopf: h,
                groupoid: None,
                action,
                smash,
            }
        })
        .collect();
    let all: Vec<&SmashCase> = cases.iter().chain(&hopf_trivial).collect();
    let failures: Vec<String> = all
        .par_iter()
        .enumerate()
        .filter_map(|(i, c)| smash_case_structure(c, i as u64).err())
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))
}

fn smash_case_structure(c: &SmashCase, seed: u64) -> Check {
    let s = &c.smash;
    let a = c.action.algebra();
    let (da, dh) = (a.dim(), c.hopf.dim());
    let label = &c.label;
    ensure(s.algebra().validate().is_ok(), || {
        format!("{label}: not an algebra")
    })?;
    let unit = s.element(a.unit(), c.hopf.unit()).unwrap();
    ensure(unit == s.algebra().unit(), || {
        format!("{label}: unit is not 1#1")
    })?;
    let ea = s.embedding_a();
    for x in 0..da {
        for y in 0..da {
            let lhs = s.algebra().multiply(&ea.column(x), &ea.column(y)).unwrap();
            ensure(lhs == ea.mul_vec(&a.basis_product_vec(x, y)), || {
                format!("{label}: (x#1)(y#1) ≠ xy#1")
            })?;
        }
    }
    ensure(embeddings_check(s).unwrap(), || {
        format!("{label}: embeddings")
    })?;
    // products of shifted representatives
    let rel = s.relations().basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let p = random_matrix(&mut rng, da * dh, 1, 2).column(0);
        let r = random_matrix(&mut rng, da * dh, 1, 2).column(0);
        let shift = |v: &[Scalar], rng: &mut ChaCha8Rng| {
            let mut out = v.to_vec();
            for b in &rel {
                let c = q(rng.gen_range(-2..=2));
                for (o, x) in out.iter_mut().zip(b) {
                    *o += &(c.clone() * x.clone());
                }
            }
            out
        };
        let base = s.multiply_representatives(&p, &r).unwrap();
        let shifted = s
            .multiply_representatives(&shift(&p, &mut rng), &shift(&r, &mut rng))
            .unwrap();
        ensure(base == shifted, || {
            format!("{label}: product depends on representatives")
        })?;
    }
    let full = s.dim() == da * dh;
    ensure(full == c.hopf.is_hopf(), || {
        format!("{label}: dim {} with is_hopf {}", s.dim(), c.hopf.is_hopf())
    })
}

fn coradical() -> Check {
    let mut coalgebras: Vec<(String, FiniteCoalgebra<Scalar>)> = corpus_wha()
        .into_iter()
        .map(|(n, h)| (n.to_string(), h.coalgebra().clone()))
        .collect();
    coalgebras.push(("sw2".into(), corpus::sw2()));
    for (name, c) in &coalgebras {
        ensure(
            c.filtration_crosscheck().map_err(|e| e.to_string())?,
            || format!("{name}: crosscheck"),
        )?;
    }
    let h4 = corpus::h4::<Scalar>();
    let f = h4
        .coalgebra()
        .coradical_filtration()
        .map_err(|e| e.to_string())?;
    let span = whk_core::Subspace::span(
        4,
        [vec![q(1), q(0), q(0), q(0)], vec![q(0), q(1), q(0), q(0)]],
    )
    .unwrap();
    ensure(*f.coradical() == span && f.length() == 1, || {
        "h4 coradical".into()
    })?;
    for name in ["qc2", "qs3", "p2", "c2c1"] {
        let h = corpus::weak_hopf_by_name::<Scalar>(name).unwrap();
        let len = h
            .coalgebra()
            .coradical_filtration()
            .map_err(|e| e.to_string())?
            .length();
        ensure(len == 0, || format!("{name}: length {len}"))?;
    }
    Ok(())
}

fn cli_contract() -> Check {
    let whk = |args: &[&str]| -> Result<i32, String> {
        let o = Command::new(env!("CARGO_BIN_EXE_whk"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        o.status
            .code()
            .ok_or_else(|| "killed by a signal".to_string())
    };
    let code = whk(&["corpus", "--run-all"])?;
    ensure(code == 0, || format!("corpus --run-all exited {code}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_whk"))
        .args(["export", "builtin:p2"])
        .output()
        .unwrap();
    let good = dir.path().join("p2.json");
    std::fs::write(&good, &out.stdout).unwrap();
    let mut doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["antipode"][2][2] = "1".into();
    let bad = dir.path().join("p2-bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ \"kind\": \"weak_hopf\", \"dim\": ").unwrap();

    for (path, expected) in [(&good, 0), (&bad, 1), (&garbage, 2)] {
        let code = whk(&["validate", path.to_str().unwrap()])?;
        ensure(code == expected, || {
            format!("{} exited {code}, expected {expected}", path.display())
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let cases = smash_cases();
    let criteria: Vec<Criterion> = vec![
        ("axiom suite and mutations", Box::new(axiom_suite)),
        (
            "antipode as (eps_t, eps_s)-inverse of id",
            Box::new(antipode_as_inverse),
        ),
        (
            "solver and coradical series agree",
            Box::new(solver_series_agreement),
        ),
        (
            "uniqueness under conjugation perturbations",
            Box::new(uniqueness),
        ),
        (
            "quantum commutativity criteria agree",
            Box::new(|| quantum_commutativity(&cases)),
        ),
        (
            "inner action battery coherence",
            Box::new(|| inner_action_battery_coherence(&cases)),
        ),
        ("smash five-way equivalence", Box::new(|| five_way(&cases))),
        (
            "conjugation action iff isotropy union",
            Box::new(|| isotropy_criterion(&cases)),
        ),
        (
            "smash product structure",
            Box::new(|| smash_structure(&cases)),
        ),
        ("coradical filtration", Box::new(coradical)),
        ("CLI exit-code contract", Box::new(cli_contract)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("[PASS] {} {name}", i + 1),
            Err(e) => {
                println!("[FAIL] {} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
