//! Exact computations with finite-dimensional modules over algebras and
//! their scalar extensions along a finite field extension `K/k`.
//!
//! The library is generic over the base field through [`Scalar`]; concrete
//! aliases for the rationals and small prime fields live at the crate root.
//!
//! ```
//! use moddeg::{algebra, Q};
//!
//! let ext = algebra::exterior_algebra::<Q>(2).unwrap();
//! assert_eq!(ext.dim(), 4);
//! ```

pub mod algebra;
pub mod cases;
pub mod descent;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod modrep;
pub mod orders;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod verdict;

pub use error::{Error, Result};
pub use fields::{FieldElem, FieldOp, FieldTower, SeparabilityIdempotent};
pub use linalg::{Matrix, PolyMatrix};
pub use num_traits::{One, Zero};
pub use scalar::{Fp, Rational, Scalar};
pub use verdict::{Effort, Search, Status, Strategy, Verdict};

/// The rationals.
pub type Q = Rational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub type QMatrix = Matrix<Q>;
pub type QTower = FieldTower<Q>;
