//! Exact cover by 3-sets: the source problem for the path gadget.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest collection size [`x3c_bruteforce`] accepts.
pub const X3C_BRUTEFORCE_SET_LIMIT: usize = 20;

/// An exact-cover-by-3-sets instance.
///
/// The ground set is `0..items` with `items` a multiple of three, and each
/// set in the collection names three distinct items. The question is
/// whether some `items / 3` of the sets partition the ground set. Item
/// order within a set is kept as given; the gadget construction reads
/// positions from it. No item may occur in more than three sets, items
/// occurring in none are allowed, and the collection may repeat a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct X3cInstance {
    /// Ground set size, a multiple of 3.
    pub items: usize,
    /// Collection of 3-item sets.
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Number of sets a cover must pick (`items / 3`).
    pub fn cover_size(&self) -> usize {
        self.items / 3
    }

    /// Number of sets in the collection.
    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// How many sets contain each item.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.items];
        for set in &self.sets {
            for &item in set {
                if item < self.items {
                    counts[item] += 1;
                }
            }
        }
        counts
    }

    /// Checks the structural invariants.
    pub fn ensure_valid(&self) -> Result<()> {
        if self.items % 3 != 0 {
            return Err(Error::Usage(format!(
                "ground set size {} is not a multiple of 3",
                self.items
            )));
        }
        for (j, set) in self.sets.iter().enumerate() {
            for &item in set {
                if item >= self.items {
                    return Err(Error::Usage(format!(
                        "set {j}: item {item} is outside the ground set 0..{}",
                        self.items
                    )));
                }
            }
            if set[0] == set[1] || set[0] == set[2] || set[1] == set[2] {
                return Err(Error::Usage(format!(
                    "set {j}: items {:?} are not distinct",
                    set
                )));
            }
        }
        for (item, count) in self.occurrences().into_iter().enumerate() {
            if count > 3 {
                return Err(Error::Usage(format!(
                    "item {item} occurs in {count} sets; at most 3 allowed"
                )));
            }
        }
        Ok(())
    }

    /// Serializes to the JSON interchange form.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    /// Parses the JSON interchange form and checks invariants.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let instance: X3cInstance =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("x3c json: {e}")))?;
        instance.ensure_valid()?;
        Ok(instance)
    }
}

/// Exhaustively decides exact coverability.
///
/// Returns the lowest-indexed witness subcollection (as ascending set
/// indices) whose sets partition the ground set, or `None` when no such
/// subcollection exists. Refuses collections with more than
/// [`X3C_BRUTEFORCE_SET_LIMIT`] sets.
pub fn x3c_bruteforce(x3c: &X3cInstance) -> Result<Option<Vec<usize>>> {
    x3c.ensure_valid()?;
    let mu = x3c.set_count();
    if mu > X3C_BRUTEFORCE_SET_LIMIT {
        return Err(Error::Budget(format!(
            "brute-force exact cover handles at most {X3C_BRUTEFORCE_SET_LIMIT} sets, got {mu}"
        )));
    }
    let eta = x3c.cover_size();
    let mut covered = vec![false; x3c.items];
    'mask: for mask in 0u32..(1u32 << mu) {
        if mask.count_ones() as usize != eta {
            continue;
        }
        covered.fill(false);
        for j in 0..mu {
            if (mask >> j) & 1 == 1 {
                for &item in &x3c.sets[j] {
                    if covered[item] {
                        continue 'mask;
                    }
                    covered[item] = true;
                }
            }
        }
        // eta disjoint triples cover 3 * eta = items distinct items, so
        // reaching here means the ground set is fully covered.
        let witness = (0..mu).filter(|j| (mask >> j) & 1 == 1).collect();
        return Ok(Some(witness));
    }
    Ok(None)
}

/// Samples a random instance with `3 * eta` items and `mu` sets.
///
/// Each set draws three distinct items from those still occurring in
/// fewer than three sets. Requires `mu <= 3 * eta` so the occurrence
/// budget can accommodate all sets; the rare draws that strand themselves
/// anyway are retried from scratch.
pub fn random_x3c(eta: usize, mu: usize, rng: &mut impl Rng) -> Result<X3cInstance> {
    if eta == 0 || mu == 0 {
        return Err(Error::Usage(
            "need at least one item triple and one set".into(),
        ));
    }
    if mu > 3 * eta {
        return Err(Error::Usage(format!(
            "{mu} sets of 3 items cannot keep every occurrence count within 3 \
             over {} items",
            3 * eta
        )));
    }
    let items = 3 * eta;
    'attempt: for _ in 0..10_000 {
        let mut counts = vec![0usize; items];
        let mut sets = Vec::with_capacity(mu);
        for _ in 0..mu {
            let available: Vec<usize> = (0..items).filter(|&i| counts[i] < 3).collect();
            if available.len() < 3 {
                continue 'attempt;
            }
            let picks = rand::seq::index::sample(rng, available.len(), 3);
            let set = [
                available[picks.index(0)],
                available[picks.index(1)],
                available[picks.index(2)],
            ];
            for &item in &set {
                counts[item] += 1;
            }
            sets.push(set);
        }
        let instance = X3cInstance { items, sets };
        instance.ensure_valid()?;
        return Ok(instance);
    }
    Err(Error::Budget(
        "gave up sampling an occurrence-respecting collection".into(),
    ))
}

/// Lists every instance with `3 * eta` items and `mu` distinct sets.
///
/// Sets are sorted triples and instances appear in lexicographic order of
/// their set collections. Collections that would push an item past three
/// occurrences are skipped. Refuses parameter pairs that would produce
/// more than a million collections.
pub fn enumerate_x3c_instances(eta: usize, mu: usize) -> Result<Vec<X3cInstance>> {
    use itertools::Itertools;

    let items = 3 * eta;
    let universe: Vec<[usize; 3]> = (0..items)
        .combinations(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect();

    let mut total: u128 = 1;
    for i in 0..mu as u128 {
        total = total.saturating_mul(universe.len() as u128 - i.min(universe.len() as u128));
        total /= i + 1;
    }
    if total > 1_000_000 {
        return Err(Error::Budget(format!(
            "enumerating {total} collections exceeds the 1000000 cap"
        )));
    }

    let mut out = Vec::new();
    for combo in universe.iter().combinations(mu) {
        let instance = X3cInstance {
            items,
            sets: combo.into_iter().copied().collect(),
        };
        if instance.ensure_valid().is_ok() {
            out.push(instance);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn trivial() -> X3cInstance {
        X3cInstance {
            items: 3,
            sets: vec![[0, 1, 2]],
        }
    }

    #[test]
    fn validation_catches_structural_problems() {
        assert!(trivial().ensure_valid().is_ok());
        let bad_size = X3cInstance {
            items: 4,
            sets: vec![],
        };
        assert!(matches!(bad_size.ensure_valid(), Err(Error::Usage(_))));
        let repeated_item = X3cInstance {
            items: 3,
            sets: vec![[0, 0, 1]],
        };
        assert!(matches!(repeated_item.ensure_valid(), Err(Error::Usage(_))));
        let out_of_range = X3cInstance {
            items: 3,
            sets: vec![[0, 1, 3]],
        };
        assert!(matches!(out_of_range.ensure_valid(), Err(Error::Usage(_))));
        let overused = X3cInstance {
            items: 6,
            sets: vec![[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3]],
        };
        assert!(matches!(overused.ensure_valid(), Err(Error::Usage(_))));
    }

    #[test]
    fn json_round_trips_and_rejects_unknown_keys() {
        let instance = X3cInstance {
            items: 6,
            sets: vec![[0, 2, 4], [1, 3, 5]],
        };
        let parsed = X3cInstance::from_json_str(&instance.to_json()).unwrap();
        assert_eq!(parsed, instance);
        assert!(matches!(
            X3cInstance::from_json_str(r#"{"items": 3, "sets": [], "extra": 1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn bruteforce_solves_the_trivial_instance() {
        assert_eq!(x3c_bruteforce(&trivial()).unwrap(), Some(vec![0]));
    }

    #[test]
    fn bruteforce_rejects_overlapping_collections() {
        // The two sets overlap on items 0 and 1, so their union has only
        // four of the six items and no exact cover exists.
        let overlapping = X3cInstance {
            items: 6,
            sets: vec![[0, 1, 2], [0, 1, 3]],
        };
        assert_eq!(x3c_bruteforce(&overlapping).unwrap(), None);
    }

    #[test]
    fn bruteforce_finds_disjoint_covers_and_prefers_low_indices() {
        let instance = X3cInstance {
            items: 6,
            sets: vec![[0, 1, 2], [3, 4, 5], [0, 3, 5]],
        };
        assert_eq!(x3c_bruteforce(&instance).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn bruteforce_enforces_the_set_budget() {
        let instance = X3cInstance {
            items: 63,
            sets: (0..21).map(|j| [3 * j, 3 * j + 1, 3 * j + 2]).collect(),
        };
        assert!(matches!(x3c_bruteforce(&instance), Err(Error::Budget(_))));
    }

    #[test]
    fn random_instances_are_valid_and_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        let xa = random_x3c(3, 8, &mut a).unwrap();
        let xb = random_x3c(3, 8, &mut b).unwrap();
        assert_eq!(xa, xb);
        assert_eq!(xa.items, 9);
        assert_eq!(xa.set_count(), 8);
        assert!(matches!(random_x3c(1, 4, &mut a), Err(Error::Usage(_))));
    }

    #[test]
    fn enumeration_is_exhaustive_for_tiny_parameters() {
        let singletons = enumerate_x3c_instances(1, 1).unwrap();
        assert_eq!(singletons, vec![trivial()]);
        // Two distinct triples drawn from C(6,3) = 20 candidates.
        let pairs = enumerate_x3c_instances(2, 2).unwrap();
        assert_eq!(pairs.len(), 20 * 19 / 2);
        assert!(pairs.iter().all(|x| x.ensure_valid().is_ok()));
        assert!(matches!(
            enumerate_x3c_instances(3, 4),
            Err(Error::Budget(_))
        ));
    }
}
