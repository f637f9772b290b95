//! Seeded random posets for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poset::{Labeling, Poset};

/// Relation densities; each random poset draws one of these.
pub const DENSITIES: [f64; 3] = [0.2, 0.4, 0.6];

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Includes each pair `i ≺ j` (`i < j`) independently with probability
/// `density`, then reduces to covers.
pub fn random_poset_with_density<R: Rng>(rng: &mut R, size: usize, density: f64) -> Poset {
    let mut relations = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if rng.gen_bool(density) {
                relations.push((i, j));
            }
        }
    }
    Poset::from_relations(size.max(1), &relations).expect("i < j relations are acyclic")
}

/// A poset with `1..=max_size` elements and a density drawn from [`DENSITIES`].
pub fn random_poset<R: Rng>(rng: &mut R, max_size: usize) -> Poset {
    let size = rng.gen_range(1..=max_size.max(1));
    let density = *DENSITIES.choose(rng).expect("nonempty");
    random_poset_with_density(rng, size, density)
}

/// A graded poset of rank 1 or 2 with `2..=max(max_size, 2)` elements.
///
/// Elements are split into consecutive levels; covers only join adjacent
/// levels, and every element gets at least one cover in each direction
/// where a neighbouring level exists. Returns the poset and its rank.
pub fn random_graded_poset<R: Rng>(rng: &mut R, max_size: usize) -> (Poset, usize) {
    let size = rng.gen_range(2..=max_size.max(2));
    let rank = if size >= 3 { rng.gen_range(1..=2) } else { 1 };
    let density = *DENSITIES.choose(rng).expect("nonempty");

    // level sizes: every level nonempty, summing to `size`
    let mut levels = vec![1usize; rank + 1];
    for _ in 0..size - (rank + 1) {
        let l = rng.gen_range(0..=rank);
        levels[l] += 1;
    }
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut ids: Vec<usize> = (0..size).collect();
    ids.shuffle(rng);
    let mut it = ids.into_iter();
    for &count in &levels {
        members.push(it.by_ref().take(count).collect());
    }

    let mut covers = Vec::new();
    for k in 0..rank {
        let (below, above) = (&members[k], &members[k + 1]);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &x in below {
            for &y in above {
                if rng.gen_bool(density) {
                    pairs.push((x, y));
                }
            }
        }
        for &x in below {
            if !pairs.iter().any(|&(a, _)| a == x) {
                pairs.push((x, *above.choose(rng).expect("nonempty level")));
            }
        }
        for &y in above {
            if !pairs.iter().any(|&(_, b)| b == y) {
                pairs.push((*below.choose(rng).expect("nonempty level"), y));
            }
        }
        covers.extend(pairs);
    }
    let poset = Poset::from_relations(size, &covers).expect("level relations are acyclic");
    (poset, rank)
}

/// A uniformly chosen available minimal element at each step; the resulting
/// linear extension defines a natural labeling.
pub fn random_natural_labeling<R: Rng>(rng: &mut R, poset: &Poset) -> Labeling {
    let d = poset.size();
    let mut pending: Vec<usize> = (0..d).map(|x| poset.lower_covers(x).len()).collect();
    let mut available: Vec<usize> = (0..d).filter(|&x| pending[x] == 0).collect();
    let mut extension = Vec::with_capacity(d);
    while !available.is_empty() {
        let k = rng.gen_range(0..available.len());
        let x = available.swap_remove(k);
        extension.push(x);
        for &y in poset.upper_covers(x) {
            pending[y] -= 1;
            if pending[y] == 0 {
                available.push(y);
            }
        }
    }
    Labeling::from_extension(&extension)
}
