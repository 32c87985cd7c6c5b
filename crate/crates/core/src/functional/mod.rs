//! Isotonic linear functionals realized as positive-weight node sums.

mod checks;
mod domain;
mod function;
mod spec;

pub use checks::{
    check_isotonicity, check_linearity, check_synchronous, check_synchronous_with, AxiomReport,
    SyncReport,
};
pub use domain::Domain;
pub use function::{PiecewiseLinear, RealFn, ScalarFunction, Tabulated};
pub use spec::{
    pairwise_sum, tensor_apply, tensor_dot, FunctionalKind, FunctionalSpec, Params, ToleranceSpec,
};
