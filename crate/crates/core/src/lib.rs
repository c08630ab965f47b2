//! Decision analysis for inspecting imported animal herds under severe
//! uncertainty about the infection probability.
//!
//! The model: a herd of `n` animals, `m` of which are tested with an
//! imperfect test (sensitivity `p`, specificity `q`). Testing costs `c(m)`,
//! a detected infection terminates the herd at cost `t(n)`, and an outbreak
//! that slips through costs `a(d)`. The per-animal infection probability `r`
//! is the severely uncertain quantity.
//!
//! Three decision methodologies are implemented against this single loss
//! model, plus a harness that machine-checks the relationships between them:
//!
//! - [`model`] — exact hypergeometric/binomial kernels and loss functions,
//!   computed in log-space so that `n = 250` poses no overflow problems.
//! - [`bayes`] — Beta prior over `r`, Beta-binomial prior predictive,
//!   expected-loss minimisation, exceedance curves, sensitivity grids.
//! - [`infogap`] — robust satisficing over the interval family `[0, h]`:
//!   worst-case loss, robustness curves, and the robustness-maximising `m`.
//! - [`imprecise`] — the credal set of all densities on `[0, h]`: pairwise
//!   dominance, maximality, and Γ-minimax.
//! - [`bridge`] — abstract upper-prevision curves, the Γ-minimax loss
//!   `L*(h)`, and numerical checks of the two theorems linking the info-gap
//!   solution to Γ-minimax and maximality, including the counterexamples
//!   that show the side conditions are needed.

pub mod bayes;
pub mod bridge;
mod error;
pub mod imprecise;
pub mod infogap;
pub mod model;
mod numeric;

pub use error::{Error, Result};
pub use model::ProblemConfig;
