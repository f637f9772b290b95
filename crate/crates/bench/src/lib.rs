//! Inputs shared by the criterion benches.

use chainpoly::random::{random_poset_with_density, rng_from_seed};
use chainpoly::Poset;

/// A fixed random poset of the given size, for benches that need a
/// non-fence input.
pub fn sample_poset(size: usize) -> Poset {
    random_poset_with_density(&mut rng_from_seed(size as u64), size, 0.4)
}
