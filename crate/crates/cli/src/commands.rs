//! One function per subcommand, each producing a [`CliReport`].

use clap::ValueEnum;
use whk_core::smash::{embeddings_check, smash_battery};
use whk_core::{
    Convolution, FiniteAlgebra, FiniteCoalgebra, Matrix, Scalar, SmashProduct, WeakHopfAlgebra,
};

use crate::input::{load, Loaded};
use crate::mutations::{full_battery, Mutation};
use crate::report::{matrix_value, CliReport};
use crate::CliError;

pub fn validate(source: &str, mutate: Option<Mutation>) -> Result<CliReport, CliError> {
    let mut loaded = load(source)?;
    let mut r = CliReport::new("validate");
    r.fact("kind", loaded.kind());
    if let Some(m) = mutate {
        let (h, _) = loaded.into_weak_hopf()?;
        r.fact("mutation", m.name());
        loaded = Loaded::WeakHopf {
            hopf: m.apply(&h)?,
            groupoid: None,
        };
    }
    match loaded {
        Loaded::Algebra(a) => {
            r.fact("dim", a.dim());
            r.absorb(&a.validate());
        }
        Loaded::Coalgebra(c) => {
            r.fact("dim", c.dim());
            r.absorb(&c.validate());
        }
        Loaded::WeakHopf { hopf, .. } => {
            r.fact("dim", hopf.dim());
            r.absorb(&full_battery(&hopf));
        }
        Loaded::ModuleAction { action, .. } => {
            r.fact("dim_hopf", action.hopf().dim());
            r.fact("dim_algebra", action.algebra().dim());
            r.absorb(&action.validate());
        }
        Loaded::Groupoid(g) => {
            r.fact("objects", g.objects().len());
            r.fact("morphisms", g.num_morphisms());
            let report = g.validate();
            if report.is_ok() {
                r.fact("isotropy_disjoint_union", g.is_isotropy_disjoint_union());
            }
            r.absorb(&report);
        }
        Loaded::ConvMap(_) => {
            return Err(CliError::Usage(
                "conv_map documents have no axioms to validate; use them with ef-inverse".into(),
            ))
        }
    }
    Ok(r)
}

pub fn analyze(source: &str) -> Result<CliReport, CliError> {
    let (h, groupoid) = load(source)?.into_weak_hopf()?;
    let mut r = CliReport::new("analyze");
    r.fact("dim", h.dim());
    let axioms = full_battery(&h);
    let mut item = crate::report::Item::new("weak_hopf_axioms", axioms.is_ok());
    if !axioms.is_ok() {
        item = item.with_detail(format!("failed: {}", axioms.failed_checks().join(", ")));
    }
    r.push(item);
    if !r.passed() {
        return Ok(r);
    }
    let cd = h.counital_data()?;
    let (qc_identity, qc_central) = h.is_quantum_commutative();
    let filtration = h.coalgebra().coradical_filtration()?;
    r.fact("dim_target", cd.target.dim());
    r.fact("dim_source", cd.source.dim());
    r.fact("dim_center", h.algebra().center().dim());
    r.fact("is_hopf", h.is_hopf());
    r.fact("quantum_commutative_identity", qc_identity);
    r.fact("quantum_commutative_source_central", qc_central);
    r.fact("dim_coradical", filtration.coradical().dim());
    r.fact("filtration_length", filtration.length());
    r.check(
        "quantum_commutativity_criteria_agree",
        qc_identity == qc_central,
    );
    r.check(
        "coradical_filtration_crosscheck",
        h.coalgebra().filtration_crosscheck()?,
    );
    if let Some(g) = groupoid {
        let iso = g.is_isotropy_disjoint_union();
        r.fact("objects", g.objects().len());
        r.fact("isotropy_disjoint_union", iso);
        r.check("quantum_commutativity_matches_isotropy", qc_identity == iso);
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Solve,
    Series,
    Both,
}

pub struct EfInverseArgs<'a> {
    pub source: &'a str,
    pub target: Option<&'a str>,
    pub u: &'a str,
    pub e: &'a str,
    pub f: &'a str,
    pub method: Method,
    pub psi0: Option<&'a str>,
}

/// Maps named on the command line; anything else is loaded as a document.
pub const NAMED_MAPS: [&str; 6] = ["id", "antipode", "eps_t", "eps_s", "unit", "zero"];

struct MapContext<'a> {
    conv: Convolution<'a, Scalar>,
    /// Present when the target is the algebra of this weak Hopf algebra.
    hopf: Option<&'a WeakHopfAlgebra<Scalar>>,
}

impl MapContext<'_> {
    fn resolve(&self, arg: &str, what: &str) -> Result<Matrix<Scalar>, CliError> {
        let (rows, cols) = (self.conv.target().dim(), self.conv.source().dim());
        let needs_hopf = || {
            self.hopf.ok_or_else(|| {
                CliError::Usage(format!(
                    "--{what} {arg} needs a weak Hopf source acting on itself (no --target)"
                ))
            })
        };
        let m = match arg {
            "zero" => self.conv.zero(),
            "unit" => self.conv.unit(),
            "id" if rows == cols => Matrix::identity(rows),
            "id" => {
                return Err(CliError::Usage(format!(
                    "--{what} id needs dim A = dim C, found {rows} and {cols}"
                )))
            }
            "antipode" => needs_hopf()?.antipode().clone(),
            "eps_t" => needs_hopf()?.counital_maps().0,
            "eps_s" => needs_hopf()?.counital_maps().1,
            _ => match load(arg)? {
                Loaded::ConvMap(m) => m,
                other => {
                    return Err(CliError::Usage(format!(
                        "--{what} expects one of {} or a conv_map document, found {}",
                        NAMED_MAPS.join(", "),
                        other.kind()
                    )))
                }
            },
        };
        if (m.rows(), m.cols()) != (rows, cols) {
            return Err(CliError::Parse(format!(
                "--{what} is {}x{}, expected {rows}x{cols}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }
}

fn inverse_value(v: &Option<Matrix<Scalar>>) -> serde_json::Value {
    match v {
        Some(m) => matrix_value(m),
        None => "none".into(),
    }
}

pub fn ef_inverse(args: &EfInverseArgs<'_>) -> Result<CliReport, CliError> {
    let (coalg, hopf): (FiniteCoalgebra<Scalar>, Option<WeakHopfAlgebra<Scalar>>) =
        match load(args.source)? {
            Loaded::Coalgebra(c) => (c, None),
            other => {
                let (h, _) = other.into_weak_hopf().map_err(|_| {
                    CliError::Usage(
                        "ef-inverse expects a coalgebra, weak_hopf or groupoid source".into(),
                    )
                })?;
                (h.coalgebra().clone(), Some(h))
            }
        };
    let alg: FiniteAlgebra<Scalar> = match (args.target, &hopf) {
        (Some(t), _) => match load(t)? {
            Loaded::Algebra(a) => a,
            other => other.into_weak_hopf()?.0.algebra().clone(),
        },
        (None, Some(h)) => h.algebra().clone(),
        (None, None) => {
            return Err(CliError::Usage(
                "a coalgebra source needs --target <algebra>".into(),
            ))
        }
    };
    let ctx = MapContext {
        conv: Convolution::new(&coalg, &alg),
        hopf: if args.target.is_none() {
            hopf.as_ref()
        } else {
            None
        },
    };
    let u = ctx.resolve(args.u, "u")?;
    let e = ctx.resolve(args.e, "e")?;
    let f = ctx.resolve(args.f, "f")?;
    let conv = &ctx.conv;

    let mut r = CliReport::new("ef-inverse");
    r.fact(
        "method",
        args.method.to_possible_value().unwrap().get_name(),
    );
    let solve = || conv.ef_inverse_solve(&u, &e, &f);
    let series = || -> Result<Option<Matrix<Scalar>>, CliError> {
        let seed = match args.psi0 {
            Some(p) => match load(p)? {
                Loaded::ConvMap(m) => Some(m),
                other => {
                    return Err(CliError::Usage(format!(
                        "--psi0 expects a conv_map, found {}",
                        other.kind()
                    )))
                }
            },
            None => conv.coradical_seed(&u, &e, &f)?,
        };
        Ok(match seed {
            Some(psi0) => Some(conv.ef_inverse_series(&u, &e, &f, &psi0)?),
            None => None,
        })
    };
    let v = match args.method {
        Method::Solve => solve()?,
        Method::Series => series()?,
        Method::Both => {
            let a = solve()?;
            let b = series()?;
            r.check("methods_agree", a == b);
            if a != b {
                r.fact("inverse_series", inverse_value(&b));
            }
            a
        }
    };
    r.fact("invertible", v.is_some());
    r.fact("inverse", inverse_value(&v));
    Ok(r)
}

pub fn smash(wha: &str, action: &str, battery: bool) -> Result<CliReport, CliError> {
    let (h, groupoid) = load(wha)?.into_weak_hopf()?;
    let action = match load(action)? {
        Loaded::ModuleAction { action, .. } => action,
        other => {
            return Err(CliError::Usage(format!(
                "expected a module_action document, found {}",
                other.kind()
            )))
        }
    };
    if action.hopf() != &h {
        return Err(CliError::Usage(format!(
            "the action is over a different weak Hopf algebra than {wha}"
        )));
    }
    let mut r = CliReport::new("smash");
    r.absorb(&action.validate());
    if !r.passed() {
        r.warn("the action is not a module algebra; no smash product was built");
        return Ok(r);
    }
    let s = SmashProduct::build(&action)?;
    let (dim_a, dim_h) = (action.algebra().dim(), h.dim());
    r.fact("dim", s.dim());
    r.fact("dim_algebra", dim_a);
    r.fact("dim_hopf", dim_h);
    r.fact("dim_relations", s.relations().dim());
    r.fact("is_hopf", h.is_hopf());
    r.check("smash_algebra_axioms", s.algebra().validate().is_ok());
    r.check("embeddings", embeddings_check(&s)?);
    if battery {
        let b = smash_battery(&s)?;
        for item in &b.items {
            for c in item.left.iter().chain(&item.right) {
                r.fact(c.name, c.holds);
            }
        }
        r.check("five_way_equivalence", b.coherent());
        if let Some(g) = groupoid {
            let (valid, iso) = g.isotropy_action_check(&action)?;
            r.fact("conjugation_action_valid", valid);
            r.fact("isotropy_disjoint_union", iso);
            r.check("conjugation_action_matches_isotropy", valid == iso);
        }
    }
    Ok(r)
}
