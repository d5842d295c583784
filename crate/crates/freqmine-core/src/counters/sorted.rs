//! Sorted-array baseline: binary-search lookup, shift-on-insert.

use alloc::vec::Vec;

use crate::item::Item;

#[derive(Debug)]
pub(super) struct SortedArrayCounter {
    entries: Vec<(Item, u64)>,
}

impl SortedArrayCounter {
    pub(super) fn new() -> SortedArrayCounter {
        SortedArrayCounter {
            entries: Vec::new(),
        }
    }

    pub(super) fn len(&self) -> usize {
        self.entries.len()
    }

    /// Returns the number of key comparisons the binary search performed.
    pub(super) fn insert(&mut self, key: Item) -> u64 {
        let mut comparisons = 0;
        let position = self.entries.binary_search_by(|(existing, _)| {
            comparisons += 1;
            existing.cmp(&key)
        });
        match position {
            Ok(index) => self.entries[index].1 += 1,
            Err(index) => self.entries.insert(index, (key, 1)),
        }
        comparisons
    }

    pub(super) fn lookup(&self, key: &str) -> u64 {
        self.entries
            .binary_search_by(|(existing, _)| existing.as_str().cmp(key))
            .map_or(0, |index| self.entries[index].1)
    }

    pub(super) fn inorder(&self) -> Vec<(Item, u64)> {
        self.entries.clone()
    }

    pub(super) fn assert_invariants(&self) {
        assert!(
            self.entries.windows(2).all(|w| w[0].0 < w[1].0),
            "sorted_array: keys not strictly ascending"
        );
        assert!(
            self.entries.iter().all(|(_, c)| *c >= 1),
            "sorted_array: zero count stored"
        );
    }
}
