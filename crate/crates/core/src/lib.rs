//! Exact linear algebra for finite-dimensional weak Hopf algebras given by
//! structure constants: axiom checking, counital maps, convolution
//! (e,f)-inverses, module algebras, inner actions and smash products.
//!
//! Everything is generic over a [`Field`]; [`Scalar`] (arbitrary precision
//! rationals) is the instantiation used by the command-line tool.

pub mod actions;
pub mod algebra;
pub mod coalgebra;
pub mod convolution;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groupoid;
pub mod linalg;
pub mod report;
pub mod smash;
pub mod weakhopf;

pub use actions::{Battery, BatteryItem, Condition, InnerData, ModuleAction, Relation};
pub use algebra::FiniteAlgebra;
pub use coalgebra::{CoradicalFiltration, FiniteCoalgebra};
pub use convolution::{ConvMap, Convolution, EFWitness};
pub use error::{Error, Result};
pub use field::Field;
pub use groupoid::FiniteGroupoid;
pub use linalg::{AffineSolution, Matrix, Subspace};
pub use report::{Report, Violation};
pub use smash::SmashProduct;
pub use weakhopf::{CounitalData, WeakHopfAlgebra};

pub type Scalar = num_rational::BigRational;
pub type QMatrix = Matrix<Scalar>;
pub type QSubspace = Subspace<Scalar>;
pub type QAlgebra = FiniteAlgebra<Scalar>;
pub type QCoalgebra = FiniteCoalgebra<Scalar>;
pub type QWeakHopf = WeakHopfAlgebra<Scalar>;
pub type QModuleAction = ModuleAction<Scalar>;
pub type QSmashProduct = SmashProduct<Scalar>;
pub type QReport = Report<Scalar>;
