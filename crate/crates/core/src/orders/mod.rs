//! Degeneration, virtual degeneration and the Hom-order: the submodule
//! invariants `f_i`, Riedtmann witnesses, obstruction checks, minimality
//! and exhaustive enumeration of module structures over finite fields.

mod compare;
mod enumerate;
mod riedtmann;
mod subdim;

pub use compare::{
    deg_obstruct, hom_order_cmp, minimality_check, Check, CheckStatus, HomOrderReport, HomOrderVerdict, HomRow,
    MinimalityCandidate, MinimalityReport, ObstructionConfig, ObstructionReport, Overall,
};
pub use enumerate::{
    aut_order, enumerate_modules, gl_order, twist_closure_experiment, EnumerationMethod, EnumerationSpace, IsoClass,
    OrderDisagreement, TwistClosureReport,
};
pub use riedtmann::{
    riedtmann_search, riedtmann_verify, ChainReport, RiedtmannFailure, RiedtmannWitness, ShortExact, VdegChain,
};
pub use subdim::{f_invariant, generated_submodule, hom_generic_rank, symbolic_phi, Certainty, FInvariant, GeneratorSpan};

#[cfg(test)]
mod tests;
