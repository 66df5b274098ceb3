//! Exact positivity decisions for Littlewood-Richardson coefficients of GL_n.
//!
//! The decision path builds the LR polytope for `(α, β, γ)` and tests it for
//! a rational point with an exact simplex method
//! ([`saturation::decide_positive`]). The [`oracle`] module enumerates LR
//! tableaux directly and serves as ground truth for coefficients, tensor
//! product decompositions, Weyl dimensions and integral witnesses.

mod bigstr;
pub mod error;
pub mod exec;
pub mod lp;
pub mod oracle;
pub mod partition;
pub mod polytope;
pub mod saturation;

pub use error::{Error, Result};
pub use exec::Execution;
pub use lp::{feasible, FeasibilityResult, Verdict};
pub use oracle::{
    count_lr_tableaux, count_ssyt, decompose_tensor, decompose_tensor_with, integral_witness,
    is_reverse_lattice_word, Decomposition, LRFilling, SkewTableau, Term, DEFAULT_BUDGET,
};
pub use partition::{parse_partition, partitions_of, partitions_up_to, Partition};
pub use polytope::{
    build_lr_system, check_trivial_necessary, evaluate_point, trivial_obstruction,
    ConstraintSystem, Family, Obstruction, RationalPoint, Row, SatisfactionReport, VariableIndex,
};
pub use saturation::{
    decide_positive, decide_with, resolve_rank, saturation_probe, sweep, DecideOptions, Decision,
    Disagreement, DisagreementKind, OracleOutcome, ProbeEntry, ProbeReport, Route, SweepConfig,
    SweepReport,
};
