//! Separate-chaining hash table baseline, FNV-1a over the key bytes.
//!
//! Hand-rolled rather than borrowed from a collections crate so that the
//! equality probes an insert performs can be tallied like the tree
//! backends' ordering comparisons, and so the core stays dependency-free.

use alloc::vec;
use alloc::vec::Vec;

use crate::item::Item;

const INITIAL_BUCKETS: usize = 16;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[derive(Debug)]
pub(super) struct HashCounter {
    // buckets.len() is always a power of two.
    buckets: Vec<Vec<(Item, u64)>>,
    len: usize,
}

impl HashCounter {
    pub(super) fn new() -> HashCounter {
        HashCounter {
            buckets: vec![Vec::new(); INITIAL_BUCKETS],
            len: 0,
        }
    }

    pub(super) fn len(&self) -> usize {
        self.len
    }

    fn bucket_of(&self, key: &str) -> usize {
        (fnv1a(key.as_bytes()) as usize) & (self.buckets.len() - 1)
    }

    /// Returns the number of key equality probes performed.
    pub(super) fn insert(&mut self, key: Item) -> u64 {
        let mut probes = 0;
        let bucket = self.bucket_of(key.as_str());
        for entry in &mut self.buckets[bucket] {
            probes += 1;
            if entry.0 == key {
                entry.1 += 1;
                return probes;
            }
        }
        if self.len == self.buckets.len() {
            self.grow();
        }
        let bucket = self.bucket_of(key.as_str());
        self.buckets[bucket].push((key, 1));
        self.len += 1;
        probes
    }

    fn grow(&mut self) {
        let doubled = self.buckets.len() * 2;
        let entries: Vec<(Item, u64)> = self
            .buckets
            .iter_mut()
            .flat_map(|chain| chain.drain(..))
            .collect();
        self.buckets = vec![Vec::new(); doubled];
        for (key, count) in entries {
            let bucket = self.bucket_of(key.as_str());
            self.buckets[bucket].push((key, count));
        }
    }

    pub(super) fn lookup(&self, key: &str) -> u64 {
        self.buckets[self.bucket_of(key)]
            .iter()
            .find(|(k, _)| k.as_str() == key)
            .map_or(0, |(_, count)| *count)
    }

    /// Chains carry no order; collect and sort.
    pub(super) fn inorder(&self) -> Vec<(Item, u64)> {
        let mut out: Vec<(Item, u64)> = self
            .buckets
            .iter()
            .flat_map(|chain| chain.iter().cloned())
            .collect();
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub(super) fn assert_invariants(&self) {
        assert!(self.buckets.len().is_power_of_two());
        let mut total = 0;
        for (index, chain) in self.buckets.iter().enumerate() {
            for (key, count) in chain {
                assert_eq!(self.bucket_of(key.as_str()), index, "hash: misplaced key");
                assert!(*count >= 1, "hash: zero count stored");
                total += 1;
            }
        }
        assert_eq!(total, self.len, "hash: entry count != len");
        let pairs = self.inorder();
        assert!(
            pairs.windows(2).all(|w| w[0].0 < w[1].0),
            "hash: duplicate keys across chains"
        );
    }
}
