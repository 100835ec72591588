//! Sequential pCN-MCMC: block-resampling MCMC for Bayesian inversion with
//! multi-Gaussian priors.
//!
//! The sampler proposes a preconditioned Crank-Nicolson step *inside* a
//! randomly placed resampling box, blending the current field with a draw
//! from the exact conditional prior of the box given everything outside it.
//! Two tuning parameters control the proposal: `beta`, the pCN blend
//! (`beta = 1` resamples the box from the conditional prior, i.e. sequential
//! Gibbs), and `kappa`, the normalized half-width of the box (`kappa = 1`
//! covers the whole domain, i.e. plain pCN-MCMC).
//!
//! The crate ships the pieces needed to run and evaluate such samplers on
//! 2D Gaussian random fields:
//!
//! * [`grid`], [`covariance`], [`prior`] — grid geometry, stationary
//!   covariance kernels, dense prior assembly and factorization;
//! * [`conditional`] — box selection and the conditional Gaussian of the
//!   inside block given the outside block;
//! * [`kernels`] — proposal generators, acceptance rules and the chain
//!   runner;
//! * [`metrics`] — acceptance rate, autocorrelation efficiency / ESS,
//!   Gelman-Rubin statistic and marginal KL divergence;
//! * [`tuner`] — gradient-ascent tuning of `(beta, kappa)` during burn-in;
//! * [`flow`], [`observation`] — a steady-state 2D groundwater-flow forward
//!   model, observation operators, Gaussian likelihoods and the analytic
//!   Kriging posterior used as a correctness oracle;
//! * [`problem`], [`chain_io`] — problem-definition files and chain
//!   serialization.

pub mod chain_io;
pub mod conditional;
pub mod covariance;
pub mod error;
pub mod flow;
pub mod grid;
pub mod kernels;
pub(crate) mod linalg;
pub mod metrics;
pub mod observation;
pub mod prior;
pub mod problem;
pub mod seeds;
pub mod tuner;

pub use error::{Error, Result};

// The BLAS/LAPACK backend is linked through `openblas-src`; the crate must be
// referenced for the link directives to survive.
use openblas_src as _;
