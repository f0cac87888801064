//! Structure-constant documents: JSON with rationals written as strings
//! (`"3"`, `"-1/2"`) and a top-level `"kind"` discriminator.
//!
//! Tensor conventions: `mult[i][j][k]` is the coefficient of `e_k` in
//! `e_i e_j`; `comult[i][j][k]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`;
//! `act[i][j][k]` the coefficient of `x_k` in `e_i · x_j`; matrices are lists
//! of rows, and column `c` is the image of `e_c`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use whk_core::{
    FiniteAlgebra, FiniteCoalgebra, FiniteGroupoid, Matrix, ModuleAction, Scalar, WeakHopfAlgebra,
};

use crate::CliError;

type Tensor = Vec<Vec<Vec<String>>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Document {
    Algebra(AlgebraDoc),
    Coalgebra(CoalgebraDoc),
    WeakHopf(WeakHopfDoc),
    ModuleAction(ModuleActionDoc),
    Groupoid(GroupoidDoc),
    ConvMap(ConvMapDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub mult: Tensor,
    pub unit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub dim: usize,
    pub comult: Tensor,
    pub counit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeakHopfDoc {
    pub dim: usize,
    pub mult: Tensor,
    pub unit: Vec<String>,
    pub comult: Tensor,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

/// `hopf` is either an inline weak Hopf document or a reference
/// (`"builtin:NAME"` or a path).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleActionDoc {
    pub hopf: HopfRef,
    pub algebra: AlgebraDoc,
    pub act: Tensor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Reference(String),
    Inline(Box<WeakHopfDoc>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub inverse: String,
}

/// `composition` lists every composable pair as `[g, h, g∘h]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvMapDoc {
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<String>>,
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn parse_scalar(s: &str) -> Result<Scalar, CliError> {
    let t = s.trim();
    t.parse::<Scalar>()
        .map_err(|_| CliError::Parse(format!("not a rational number: {s:?}")))
}

/// Canonical text of a rational: `n` for integers, `p/q` in lowest terms
/// otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

fn scalars(v: &[String]) -> Result<Vec<Scalar>, CliError> {
    v.iter().map(|s| parse_scalar(s)).collect()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

fn tensor(t: &Tensor, dims: [usize; 3], what: &str) -> Result<Vec<Vec<Vec<Scalar>>>, CliError> {
    let bad = || {
        CliError::Parse(format!(
            "{what} must have shape {}x{}x{}",
            dims[0], dims[1], dims[2]
        ))
    };
    if t.len() != dims[0] {
        return Err(bad());
    }
    t.iter()
        .map(|plane| {
            if plane.len() != dims[1] {
                return Err(bad());
            }
            plane
                .iter()
                .map(|row| {
                    if row.len() == dims[2] {
                        scalars(row)
                    } else {
                        Err(bad())
                    }
                })
                .collect()
        })
        .collect()
}

fn tensor_strings(t: Vec<Vec<Vec<Scalar>>>) -> Tensor {
    t.into_iter()
        .map(|p| p.into_iter().map(|r| strings(&r)).collect())
        .collect()
}

fn vector(v: &[String], n: usize, what: &str) -> Result<Vec<Scalar>, CliError> {
    if v.len() != n {
        return Err(CliError::Parse(format!("{what} must have length {n}")));
    }
    scalars(v)
}

pub fn matrix(
    rows: &[Vec<String>],
    r: usize,
    c: usize,
    what: &str,
) -> Result<Matrix<Scalar>, CliError> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(CliError::Parse(format!("{what} must be a {r}x{c} matrix")));
    }
    let parsed = rows
        .iter()
        .map(|row| scalars(row))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn matrix_strings(m: &Matrix<Scalar>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

impl AlgebraDoc {
    pub fn build(&self) -> Result<FiniteAlgebra<Scalar>, CliError> {
        let n = self.dim;
        let mult = tensor(&self.mult, [n, n, n], "mult")?;
        let unit = vector(&self.unit, n, "unit")?;
        FiniteAlgebra::new(n, mult, unit).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_algebra(a: &FiniteAlgebra<Scalar>) -> Self {
        AlgebraDoc {
            dim: a.dim(),
            mult: tensor_strings(a.mult_tensor()),
            unit: strings(a.unit()),
        }
    }
}

impl CoalgebraDoc {
    pub fn build(&self) -> Result<FiniteCoalgebra<Scalar>, CliError> {
        let n = self.dim;
        let comult = tensor(&self.comult, [n, n, n], "comult")?;
        let counit = vector(&self.counit, n, "counit")?;
        FiniteCoalgebra::new(n, comult, counit).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_coalgebra(c: &FiniteCoalgebra<Scalar>) -> Self {
        CoalgebraDoc {
            dim: c.dim(),
            comult: tensor_strings(c.comult_tensor()),
            counit: strings(c.counit()),
        }
    }
}

impl WeakHopfDoc {
    pub fn build(&self) -> Result<WeakHopfAlgebra<Scalar>, CliError> {
        let n = self.dim;
        let alg = AlgebraDoc {
            dim: n,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
        .build()?;
        let coalg = CoalgebraDoc {
            dim: n,
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
        .build()?;
        let antipode = matrix(&self.antipode, n, n, "antipode")?;
        WeakHopfAlgebra::new(alg, coalg, antipode).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_weak_hopf(h: &WeakHopfAlgebra<Scalar>) -> Self {
        WeakHopfDoc {
            dim: h.dim(),
            mult: tensor_strings(h.algebra().mult_tensor()),
            unit: strings(h.unit()),
            comult: tensor_strings(h.coalgebra().comult_tensor()),
            counit: strings(h.coalgebra().counit()),
            antipode: matrix_strings(h.antipode()),
        }
    }
}

impl ModuleActionDoc {
    /// Builds the action over an already resolved weak Hopf algebra.
    pub fn build_with(
        &self,
        hopf: WeakHopfAlgebra<Scalar>,
    ) -> Result<ModuleAction<Scalar>, CliError> {
        let alg = self.algebra.build()?;
        let act = tensor(&self.act, [hopf.dim(), alg.dim(), alg.dim()], "act")?;
        ModuleAction::new(hopf, alg, act).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_action(m: &ModuleAction<Scalar>, hopf: HopfRef) -> Self {
        ModuleActionDoc {
            hopf,
            algebra: AlgebraDoc::from_algebra(m.algebra()),
            act: tensor_strings(m.action_tensor()),
        }
    }
}

impl GroupoidDoc {
    pub fn build(&self) -> Result<FiniteGroupoid, CliError> {
        let parse_err = |m: String| CliError::Parse(m);
        let obj = |name: &str| {
            self.objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| parse_err(format!("unknown object {name:?}")))
        };
        let mor = |name: &str| {
            self.morphisms
                .iter()
                .position(|m| m.name == name)
                .ok_or_else(|| parse_err(format!("unknown morphism {name:?}")))
        };
        let nm = self.morphisms.len();
        let mut src = Vec::with_capacity(nm);
        let mut tgt = Vec::with_capacity(nm);
        let mut inv = Vec::with_capacity(nm);
        for m in &self.morphisms {
            src.push(obj(&m.src)?);
            tgt.push(obj(&m.tgt)?);
            inv.push(mor(&m.inverse)?);
        }
        let mut identities = Vec::with_capacity(self.objects.len());
        for o in &self.objects {
            let id = self
                .identities
                .get(o)
                .ok_or_else(|| parse_err(format!("object {o:?} has no identity")))?;
            identities.push(mor(id)?);
        }
        let mut comp = vec![vec![None; nm]; nm];
        for [g, h, gh] in &self.composition {
            let (g, h) = (mor(g)?, mor(h)?);
            if comp[g][h].replace(mor(gh)?).is_some() {
                return Err(parse_err(format!(
                    "composite of ({}, {}) given twice",
                    self.morphisms[g].name, self.morphisms[h].name
                )));
            }
        }
        let names = self.morphisms.iter().map(|m| m.name.clone()).collect();
        FiniteGroupoid::new(self.objects.clone(), names, src, tgt, comp, inv, identities)
            .map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        let names = g.morphisms();
        let n = names.len();
        let morphisms = (0..n)
            .map(|m| MorphismDoc {
                name: names[m].clone(),
                src: g.objects()[g.src(m)].clone(),
                tgt: g.objects()[g.tgt(m)].clone(),
                inverse: names[g.inverse(m)].clone(),
            })
            .collect();
        let identities = g
            .objects()
            .iter()
            .enumerate()
            .map(|(o, name)| (name.clone(), names[g.identity(o)].clone()))
            .collect();
        let mut composition = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = g.compose(a, b) {
                    composition.push([names[a].clone(), names[b].clone(), names[c].clone()]);
                }
            }
        }
        GroupoidDoc {
            objects: g.objects().to_vec(),
            morphisms,
            identities,
            composition,
        }
    }
}

impl ConvMapDoc {
    pub fn build(&self) -> Result<Matrix<Scalar>, CliError> {
        matrix(&self.matrix, self.rows, self.cols, "matrix")
    }

    pub fn from_matrix(m: &Matrix<Scalar>) -> Self {
        ConvMapDoc {
            rows: m.rows(),
            cols: m.cols(),
            matrix: matrix_strings(m),
        }
    }
}
