//! Seeded random representations for fuzzing and demos.
//!
//! Draws come from a fixed ChaCha stream reduced by modulus, so a given seed
//! yields the same representation on every platform and in every release.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boxes::BoxRepresentation;
use crate::interval::{Interval, IntervalRepresentation};

/// One endpoint drawn uniformly from `1..=bound`.
fn draw(rng: &mut ChaCha8Rng, bound: u64) -> i64 {
    (1 + rng.next_u64() % bound) as i64
}

fn random_interval(rng: &mut ChaCha8Rng, bound: u64) -> Interval {
    let a = draw(rng, bound);
    let b = draw(rng, bound);
    Interval::from_ints(a.min(b), a.max(b))
}

/// A random family of `n` closed intervals with integer endpoints in
/// `1..=2n`, reproducible from `seed`.
pub fn random_interval_representation(n: usize, seed: u64) -> IntervalRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = (2 * n.max(1)) as u64;
    IntervalRepresentation::new((0..n).map(|_| random_interval(&mut rng, bound)).collect())
}

/// A random family of `n` axis-parallel boxes in `dims` dimensions, each
/// side a closed interval with integer endpoints in `1..=2n`, reproducible
/// from `seed`.
pub fn random_box_representation(n: usize, dims: usize, seed: u64) -> BoxRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = (2 * n.max(1)) as u64;
    let boxes = (0..n)
        .map(|_| (0..dims).map(|_| random_interval(&mut rng, bound)).collect())
        .collect();
    BoxRepresentation::new(dims, boxes).expect("generated boxes share one dimension count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    #[test]
    fn same_seed_reproduces_the_same_intervals() {
        assert_eq!(
            random_interval_representation(12, 7),
            random_interval_representation(12, 7)
        );
    }

    #[test]
    fn different_seeds_differ() {
        assert_ne!(
            random_interval_representation(12, 7),
            random_interval_representation(12, 8)
        );
    }

    #[test]
    fn endpoints_stay_in_range_and_ordered() {
        let rep = random_interval_representation(20, 99);
        assert_eq!(rep.n(), 20);
        for iv in rep.iter() {
            assert!(integer(1) <= *iv.lo() && *iv.hi() <= integer(40));
            assert!(iv.lo() <= iv.hi());
        }
    }

    #[test]
    fn box_generation_is_deterministic_and_well_shaped() {
        let a = random_box_representation(6, 3, 41);
        let b = random_box_representation(6, 3, 41);
        assert_eq!(a, b);
        assert_eq!(a.dims(), 3);
        assert_eq!(a.n(), 6);
        for v in 0..a.n() {
            assert_eq!(a.box_of(v).len(), 3);
        }
    }

    #[test]
    fn degenerate_sizes_are_allowed() {
        assert_eq!(random_interval_representation(0, 1).n(), 0);
        let rep = random_box_representation(3, 0, 1);
        assert_eq!(rep.dims(), 0);
        assert_eq!(rep.n(), 3);
    }
}
