//! Builders for the concrete functionals: discrete sums, Gauss quadrature,
//! fractional integral operators and their q-analogues.

mod classical;
mod qops;
mod quadrature;
mod spec;

pub use classical::{
    build_discrete, build_erdelyi_kober, build_hadamard, build_hypergeometric,
    build_riemann, build_riemann_composite, build_riemann_liouville, build_saigo,
    build_time_scale_delta, default_nodes, hypergeometric_admissible,
};
pub use qops::{
    build_jackson, build_q_riemann_liouville, build_q_saigo, jackson_terms,
    q_saigo_admissible, DEFAULT_M_CAP, DEFAULT_Q_TERMS,
};
pub use quadrature::{QuadratureRule, RuleFamily};
pub use spec::OperatorSpec;

/// Default node count for the singular-kernel builders.
pub const DEFAULT_NODES: usize = 64;
