//! Sum-hash and max-hash maps, the stacked embedding, and parameter planning.

mod birthday;
mod maxhash;
mod pairwise;
mod params;
mod stacked;

pub use birthday::{birthday_embed, BirthdayMap};
pub use maxhash::{max_embed, MaxHashMap, SparseImage};
pub(crate) use maxhash::{image_distance as maxhash_image_distance, image_into as maxhash_image_into};
pub use pairwise::PairwiseSums;
pub use params::{plan_params, plan_params_with, EmbedParams, Mode, PlanConstants};
pub use stacked::{stack_embed, StackedEmbedding};
