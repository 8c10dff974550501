use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    // fields
    #[error("minimal polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("minimal polynomial is reducible")]
    NotIrreducible,
    #[error("irreducibility over Q is only decided up to degree 6 (got {0})")]
    UnsupportedDegree(usize),
    #[error("irreducibility search inconclusive: {0}")]
    Inconclusive(String),
    #[error("invalid automorphism: {0}")]
    AutomorphismInvalid(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different field towers")]
    TowerMismatch,
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("minimal polynomial is not separable")]
    NotSeparable,
    #[error("separability idempotent check failed: {0}")]
    IdempotentCheckFailed(String),

    // linear algebra
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    // algebras
    #[error("structure constants are not associative at (b{0} b{1}) b{2}")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails for basis element {0}")]
    UnitLawFails(usize),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("exterior algebras are supported for 1 to 4 variables (got {0})")]
    UnsupportedVarCount(usize),
    #[error("coefficient fields do not match")]
    FieldMismatch,
    #[error("algebra is not a tensor extension")]
    NotExtensionAlgebra,
    #[error("generator words do not reproduce basis element {0}")]
    BadGenerators(usize),
    #[error("span is not closed: {0}")]
    NotClosed(String),

    // modules
    #[error("module relation violated for basis pair ({0}, {1})")]
    RelationViolated(usize, usize),
    #[error("unit does not act as the identity")]
    UnitNotIdentity,
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("matrix does not intertwine the actions of basis element {0}")]
    NotAMorphism(usize),
    #[error("algebra morphism failed verification")]
    MorphismUnverified,
    #[error("characteristic must be zero for this operation")]
    WrongCharacteristic,
    #[error("a finite base field is required")]
    FiniteFieldRequired,

    // descent
    #[error("the tower is not normal")]
    NotNormal,
    #[error("assembled decomposition map is not invertible")]
    AssemblyNotInvertible,

    // orders
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}
