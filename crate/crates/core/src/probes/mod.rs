//! Empirical probes for linear maps on random sparse vectors, and the
//! constructive `l_inf` witness against linear maps.

mod gram;
mod linear;
mod rate;
mod unif;
mod violation;

pub use gram::gram_overlap_z;
pub use linear::DenseLinearMap;
pub use rate::{preservation_rate, preservation_trials, Trial};
pub use unif::{sample_unif, UnifSampler, UnifSpec};
pub use violation::{find_linf_violation, Violation};
