//! Max-hash embeddings for sparse non-negative vectors.
//!
//! The crate is `no_std` (it needs `alloc`) and holds only the pure algorithmic
//! parts: sparse vectors and norms, the seeded bucket hash, the sum-hash and
//! max-hash maps, parameter planning, lower-bound probes, and the downstream
//! applications (diameter, max-cut, clustering cost, distance estimation).
//! File formats and the command line live in the `sparse-sketch` crate.
//!
//! ```
//! use sparse_sketch_core::{plan_params, Mode, Norm, SparseVector, StackedEmbedding};
//!
//! let x = SparseVector::new(1 << 40, [(3, 0.5), (1 << 30, 2.0)]).unwrap();
//! let y = SparseVector::new(1 << 40, [(3, 1.5)]).unwrap();
//! let params = plan_params(Mode::LinfExact, 2, 16, 0.5, None, None).unwrap();
//! let emb = StackedEmbedding::new(params, 7);
//! let est = emb.estimate_distance(&x, &y, Norm::Inf).unwrap();
//! assert!(est <= x.distance(&y, Norm::Inf).unwrap());
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod apps;
mod dataset;
pub mod embed;
mod error;
pub mod hash;
mod norm;
pub mod probes;
pub mod synth;
mod vector;

pub use dataset::Dataset;
pub use embed::{
    plan_params, plan_params_with, BirthdayMap, EmbedParams, MaxHashMap, Mode, PairwiseSums,
    PlanConstants, StackedEmbedding,
};
pub use error::{Error, Result};
pub use hash::{derive_seed, HashSpec};
pub use norm::Norm;
pub use vector::{diff_vectors, lp_dist, lp_norm, sum_vectors, SparseVector};
