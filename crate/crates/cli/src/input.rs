//! Resolving command-line sources: `builtin:NAME` or a path to a document.

use std::path::{Path, PathBuf};

use num_traits::One;
use whk_core::{
    corpus, FiniteAlgebra, FiniteCoalgebra, FiniteGroupoid, Matrix, ModuleAction, Scalar,
    WeakHopfAlgebra,
};

use crate::format::{
    parse_document, AlgebraDoc, CoalgebraDoc, ConvMapDoc, Document, GroupoidDoc, HopfRef,
    ModuleActionDoc, WeakHopfDoc,
};
use crate::CliError;

pub const BUILTIN_PREFIX: &str = "builtin:";

#[derive(Debug, Clone)]
pub enum Loaded {
    Algebra(FiniteAlgebra<Scalar>),
    Coalgebra(FiniteCoalgebra<Scalar>),
    /// `groupoid` is set when the algebra is known to be a groupoid algebra.
    WeakHopf {
        hopf: WeakHopfAlgebra<Scalar>,
        groupoid: Option<FiniteGroupoid>,
    },
    ModuleAction {
        action: ModuleAction<Scalar>,
        /// How the acting algebra was referenced, kept for export.
        hopf_ref: HopfRef,
        groupoid: Option<FiniteGroupoid>,
    },
    Groupoid(FiniteGroupoid),
    ConvMap(Matrix<Scalar>),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Algebra(_) => "algebra",
            Loaded::Coalgebra(_) => "coalgebra",
            Loaded::WeakHopf { .. } => "weak_hopf",
            Loaded::ModuleAction { .. } => "module_action",
            Loaded::Groupoid(_) => "groupoid",
            Loaded::ConvMap(_) => "conv_map",
        }
    }

    /// The weak Hopf algebra of a `weak_hopf` or `groupoid` source.
    pub fn into_weak_hopf(
        self,
    ) -> Result<(WeakHopfAlgebra<Scalar>, Option<FiniteGroupoid>), CliError> {
        match self {
            Loaded::WeakHopf { hopf, groupoid } => Ok((hopf, groupoid)),
            Loaded::Groupoid(g) => Ok((g.algebra(), Some(g))),
            other => Err(CliError::Usage(format!(
                "expected a weak_hopf or groupoid document, found {}",
                other.kind()
            ))),
        }
    }

    pub fn to_document(&self) -> Document {
        match self {
            Loaded::Algebra(a) => Document::Algebra(AlgebraDoc::from_algebra(a)),
            Loaded::Coalgebra(c) => Document::Coalgebra(CoalgebraDoc::from_coalgebra(c)),
            Loaded::WeakHopf { hopf, .. } => Document::WeakHopf(WeakHopfDoc::from_weak_hopf(hopf)),
            Loaded::ModuleAction {
                action, hopf_ref, ..
            } => Document::ModuleAction(ModuleActionDoc::from_action(action, hopf_ref.clone())),
            Loaded::Groupoid(g) => Document::Groupoid(GroupoidDoc::from_groupoid(g)),
            Loaded::ConvMap(m) => Document::ConvMap(ConvMapDoc::from_matrix(m)),
        }
    }
}

/// Every builtin source name, in listing order.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = corpus::WEAK_HOPF_NAMES
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.push("sw2".into());
    names.push("q".into());
    for w in corpus::WEAK_HOPF_NAMES {
        if corpus::groupoid_by_name(w).is_some() {
            names.push(format!("{w}-groupoid"));
        }
    }
    for suffix in ["ht-action", "trivial-action", "adjoint-action"] {
        for w in corpus::WEAK_HOPF_NAMES {
            names.push(format!("{w}-{suffix}"));
        }
    }
    names
}

pub fn builtin(name: &str) -> Result<Loaded, CliError> {
    let unknown = || {
        CliError::Usage(format!(
            "unknown builtin {name:?}; known: {}",
            builtin_names().join(", ")
        ))
    };
    if let Some(hopf) = corpus::weak_hopf_by_name::<Scalar>(name) {
        return Ok(Loaded::WeakHopf {
            hopf,
            groupoid: corpus::groupoid_by_name(name),
        });
    }
    match name {
        "sw2" => return Ok(Loaded::Coalgebra(corpus::sw2())),
        "q" => {
            let q = FiniteAlgebra::new(1, vec![vec![vec![Scalar::one()]]], vec![Scalar::one()])?;
            return Ok(Loaded::Algebra(q));
        }
        _ => {}
    }
    if let Some(base) = name.strip_suffix("-groupoid") {
        return corpus::groupoid_by_name(base)
            .map(Loaded::Groupoid)
            .ok_or_else(unknown);
    }
    for suffix in ["-ht-action", "-trivial-action", "-adjoint-action"] {
        let Some(base) = name.strip_suffix(suffix) else {
            continue;
        };
        let hopf = corpus::weak_hopf_by_name::<Scalar>(base).ok_or_else(unknown)?;
        let action = match suffix {
            "-ht-action" => ModuleAction::target_counital(&hopf)?,
            "-trivial-action" => ModuleAction::trivial(&hopf),
            _ => ModuleAction::adjoint(&hopf),
        };
        return Ok(Loaded::ModuleAction {
            action,
            hopf_ref: HopfRef::Reference(format!("{BUILTIN_PREFIX}{base}")),
            groupoid: corpus::groupoid_by_name(base),
        });
    }
    Err(unknown())
}

pub fn load(source: &str) -> Result<Loaded, CliError> {
    match source.strip_prefix(BUILTIN_PREFIX) {
        Some(name) => builtin(name),
        None => load_path(Path::new(source)),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_path(path: &Path) -> Result<Loaded, CliError> {
    let doc = parse_document(&read(path)?)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    from_document(doc, &base)
}

/// Builds a document; relative references inside it resolve against `base`.
pub fn from_document(doc: Document, base: &Path) -> Result<Loaded, CliError> {
    Ok(match doc {
        Document::Algebra(d) => Loaded::Algebra(d.build()?),
        Document::Coalgebra(d) => Loaded::Coalgebra(d.build()?),
        Document::WeakHopf(d) => Loaded::WeakHopf {
            hopf: d.build()?,
            groupoid: None,
        },
        Document::Groupoid(d) => Loaded::Groupoid(d.build()?),
        Document::ConvMap(d) => Loaded::ConvMap(d.build()?),
        Document::ModuleAction(d) => {
            let (hopf, groupoid) = match &d.hopf {
                HopfRef::Inline(w) => (w.build()?, None),
                HopfRef::Reference(r) => {
                    let resolved = match r.strip_prefix(BUILTIN_PREFIX) {
                        Some(name) => builtin(name)?,
                        None => {
                            let p = PathBuf::from(r);
                            load_path(&if p.is_absolute() { p } else { base.join(p) })?
                        }
                    };
                    resolved.into_weak_hopf()?
                }
            };
            Loaded::ModuleAction {
                action: d.build_with(hopf)?,
                hopf_ref: d.hopf.clone(),
                groupoid,
            }
        }
    })
}
