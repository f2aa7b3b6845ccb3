//! Problem registry, reference solutions, run driver and convergence studies.

pub mod convergence;
pub mod exact;
pub mod norms;
pub mod output;
pub mod problems;
pub mod run;

pub use convergence::{convergence_study, ConvergenceRow};
pub use exact::{euler_star_state, exact_euler_riemann};
pub use norms::error_norms;
pub use problems::{problem, ProblemSpec, PROBLEM_NAMES};
pub use run::{run_problem, RunConfig, RunOutput, Simulation};
