use std::collections::{BinaryHeap, HashMap};
use std::hash::Hash;

use super::hash::bits_to_unit;

/// Outcome of offering a key to a [`MinHashReservoir`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Offer<K> {
    /// The key is already stored.
    Present,
    /// The key's hash is not among the `capacity` smallest.
    Rejected,
    /// The key was stored, possibly pushing out the largest-hash key.
    Admitted { evicted: Option<K> },
}

/// Bottom-k sketch: keeps the `capacity` keys with the smallest hashes seen.
///
/// Ties on the hash are broken by key order. Keys only leave by being the
/// current maximum, so the max-heap never holds stale entries.
#[derive(Clone, Debug)]
pub struct MinHashReservoir<K> {
    capacity: usize,
    entries: HashMap<K, u64>,
    heap: BinaryHeap<(u64, K)>,
}

impl<K: Copy + Eq + Hash + Ord> MinHashReservoir<K> {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity > 0, "reservoir capacity must be positive");
        MinHashReservoir {
            capacity,
            entries: HashMap::with_capacity(capacity),
            heap: BinaryHeap::with_capacity(capacity),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.entries.contains_key(key)
    }

    /// Stored hash of `key` as a value in `[0, 1)`.
    pub fn hash_of(&self, key: &K) -> Option<f64> {
        self.entries.get(key).map(|&b| bits_to_unit(b))
    }

    /// Largest stored hash (as raw bits) and its key.
    pub fn max(&self) -> Option<(u64, K)> {
        self.heap.peek().copied()
    }

    pub fn offer(&mut self, key: K, hash: u64) -> Offer<K> {
        if self.entries.contains_key(&key) {
            return Offer::Present;
        }
        let evicted = if self.entries.len() < self.capacity {
            None
        } else {
            let &(top_hash, top_key) = self.heap.peek().expect("full reservoir has a maximum");
            if (hash, key) >= (top_hash, top_key) {
                return Offer::Rejected;
            }
            self.heap.pop();
            self.entries.remove(&top_key);
            Some(top_key)
        };
        self.entries.insert(key, hash);
        self.heap.push((hash, key));
        Offer::Admitted { evicted }
    }

    /// Stored `(hash bits, key)` pairs in ascending order.
    pub fn sorted_entries(&self) -> Vec<(u64, K)> {
        let mut v: Vec<(u64, K)> = self.entries.iter().map(|(&k, &h)| (h, k)).collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fills_then_evicts_max() {
        let mut r = MinHashReservoir::new(2);
        assert_eq!(r.offer(1u32, 50), Offer::Admitted { evicted: None });
        assert_eq!(r.offer(2, 10), Offer::Admitted { evicted: None });
        assert_eq!(r.offer(2, 10), Offer::Present);
        assert_eq!(r.offer(3, 70), Offer::Rejected);
        assert_eq!(r.offer(4, 20), Offer::Admitted { evicted: Some(1) });
        assert_eq!(r.sorted_entries(), vec![(10, 2), (20, 4)]);
        assert_eq!(r.max(), Some((20, 4)));
    }

    proptest! {
        #[test]
        fn keeps_the_smallest_hashes(
            cap in 1usize..10,
            offers in proptest::collection::vec((0u32..40, 0u64..1000), 0..120),
        ) {
            let mut r = MinHashReservoir::new(cap);
            // a key keeps its first hash, as with a fixed hash function
            let mut fixed = std::collections::BTreeMap::new();
            for (k, h) in offers {
                let h = *fixed.entry(k).or_insert(h);
                r.offer(k, h);
                prop_assert!(r.len() <= cap);
                let mut all: Vec<(u64, u32)> = fixed.iter().map(|(&k, &h)| (h, k)).collect();
                all.sort();
                all.truncate(cap);
                prop_assert_eq!(r.sorted_entries(), all);
            }
        }
    }
}
