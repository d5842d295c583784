//! Pluggable frequency-counter dictionaries behind one interface: an
//! unbalanced binary search tree, an AVL-balanced variant, and hash-table
//! and sorted-array baselines.
//!
//! Every backend maps a key to its occurrence count and reports its entries
//! in ascending key order, whatever its internal layout. Key comparisons
//! performed during inserts are tallied so the backends can be contrasted
//! structurally, not just by wall clock.

mod avl;
mod bst;
mod hash;
mod sorted;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::item::Item;

use avl::AvlCounter;
use bst::BstCounter;
use hash::HashCounter;
use sorted::SortedArrayCounter;

/// Which dictionary structure backs a [`FrequencyCounter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BackendKind {
    Bst,
    Avl,
    Hash,
    SortedArray,
}

impl BackendKind {
    pub const ALL: [BackendKind; 4] = [
        BackendKind::Bst,
        BackendKind::Avl,
        BackendKind::Hash,
        BackendKind::SortedArray,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BackendKind::Bst => "bst",
            BackendKind::Avl => "avl",
            BackendKind::Hash => "hash",
            BackendKind::SortedArray => "sorted_array",
        }
    }

    /// True for the tree backends, which have a meaningful height.
    pub fn is_tree(self) -> bool {
        matches!(self, BackendKind::Bst | BackendKind::Avl)
    }
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BackendKind {
    type Err = UnknownBackend;

    fn from_str(s: &str) -> Result<BackendKind, UnknownBackend> {
        match s {
            "bst" => Ok(BackendKind::Bst),
            "avl" => Ok(BackendKind::Avl),
            "hash" => Ok(BackendKind::Hash),
            "sorted_array" => Ok(BackendKind::SortedArray),
            other => Err(UnknownBackend(String::from(other))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownBackend(pub String);

impl fmt::Display for UnknownBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown backend `{}` (expected bst, avl, hash or sorted_array)",
            self.0
        )
    }
}

impl core::error::Error for UnknownBackend {}

/// A key → occurrence-count dictionary over one of the four backends.
///
/// `insert` adds one occurrence of a key; `inorder` reports all
/// `(key, count)` pairs in ascending key order regardless of backend.
#[derive(Debug)]
pub struct FrequencyCounter {
    repr: Repr,
    comparisons: u64,
}

#[derive(Debug)]
enum Repr {
    Bst(BstCounter),
    Avl(AvlCounter),
    Hash(HashCounter),
    SortedArray(SortedArrayCounter),
}

impl FrequencyCounter {
    pub fn new(kind: BackendKind) -> FrequencyCounter {
        let repr = match kind {
            BackendKind::Bst => Repr::Bst(BstCounter::new()),
            BackendKind::Avl => Repr::Avl(AvlCounter::new()),
            BackendKind::Hash => Repr::Hash(HashCounter::new()),
            BackendKind::SortedArray => Repr::SortedArray(SortedArrayCounter::new()),
        };
        FrequencyCounter {
            repr,
            comparisons: 0,
        }
    }

    pub fn kind(&self) -> BackendKind {
        match &self.repr {
            Repr::Bst(_) => BackendKind::Bst,
            Repr::Avl(_) => BackendKind::Avl,
            Repr::Hash(_) => BackendKind::Hash,
            Repr::SortedArray(_) => BackendKind::SortedArray,
        }
    }

    /// Records one occurrence of `key`: present keys have their count bumped
    /// by one, absent keys are added with count 1.
    pub fn insert(&mut self, key: Item) {
        self.comparisons += match &mut self.repr {
            Repr::Bst(c) => c.insert(key),
            Repr::Avl(c) => c.insert(key),
            Repr::Hash(c) => c.insert(key),
            Repr::SortedArray(c) => c.insert(key),
        };
    }

    /// The key's count, or 0 if absent.
    pub fn lookup(&self, key: &str) -> u64 {
        match &self.repr {
            Repr::Bst(c) => c.lookup(key),
            Repr::Avl(c) => c.lookup(key),
            Repr::Hash(c) => c.lookup(key),
            Repr::SortedArray(c) => c.lookup(key),
        }
    }

    /// All `(key, count)` pairs in strictly ascending key order.
    pub fn inorder(&self) -> Vec<(Item, u64)> {
        match &self.repr {
            Repr::Bst(c) => c.inorder(),
            Repr::Avl(c) => c.inorder(),
            Repr::Hash(c) => c.inorder(),
            Repr::SortedArray(c) => c.inorder(),
        }
    }

    /// Number of distinct keys.
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Bst(c) => c.len(),
            Repr::Avl(c) => c.len(),
            Repr::Hash(c) => c.len(),
            Repr::SortedArray(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nodes on the longest root-to-leaf path (0 when empty). `None` for
    /// the non-tree backends.
    pub fn height(&self) -> Option<usize> {
        match &self.repr {
            Repr::Bst(c) => Some(c.height()),
            Repr::Avl(c) => Some(c.height()),
            Repr::Hash(_) | Repr::SortedArray(_) => None,
        }
    }

    /// Total key comparisons performed by inserts so far.
    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    /// Panics if the backend's structural invariants are violated: BST
    /// ordering, AVL balance and stored heights, hash bucket placement,
    /// sorted-array ordering, and positive counts everywhere.
    pub fn assert_invariants(&self) {
        match &self.repr {
            Repr::Bst(c) => c.assert_invariants(),
            Repr::Avl(c) => c.assert_invariants(),
            Repr::Hash(c) => c.assert_invariants(),
            Repr::SortedArray(c) => c.assert_invariants(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::tokenize;

    fn item(s: &str) -> Item {
        Item::new(s).unwrap()
    }

    const SENTENCE: &str = "i reach my goal by my uncompromised practice";

    fn sentence_counter(kind: BackendKind) -> FrequencyCounter {
        let mut counter = FrequencyCounter::new(kind);
        for token in tokenize(SENTENCE) {
            counter.insert(token);
        }
        counter
    }

    #[test]
    fn new_counters_are_empty() {
        for kind in BackendKind::ALL {
            let counter = FrequencyCounter::new(kind);
            assert!(counter.is_empty(), "{kind}");
            assert_eq!(counter.len(), 0);
            assert_eq!(counter.lookup("anything"), 0);
            assert!(counter.inorder().is_empty());
        }
    }

    #[test]
    fn repeated_insert_bumps_count() {
        for kind in BackendKind::ALL {
            let mut counter = FrequencyCounter::new(kind);
            counter.insert(item("my"));
            assert_eq!((counter.len(), counter.lookup("my")), (1, 1), "{kind}");
            counter.insert(item("my"));
            assert_eq!((counter.len(), counter.lookup("my")), (1, 2), "{kind}");
            assert!(!counter.is_empty());
        }
    }

    #[test]
    fn sentence_counts() {
        for kind in BackendKind::ALL {
            let counter = sentence_counter(kind);
            assert_eq!(counter.len(), 7, "{kind}");
            let pairs = counter.inorder();
            let mass: u64 = pairs.iter().map(|(_, c)| c).sum();
            assert_eq!(mass, 8);
            let expected = [
                ("by", 1),
                ("goal", 1),
                ("i", 1),
                ("my", 2),
                ("practice", 1),
                ("reach", 1),
                ("uncompromised", 1),
            ];
            let got: Vec<(&str, u64)> = pairs.iter().map(|(k, c)| (k.as_str(), *c)).collect();
            assert_eq!(got, expected);
            assert_eq!(counter.lookup("my"), 2);
            assert_eq!(counter.lookup("goal"), 1);
            assert_eq!(counter.lookup("missing"), 0);
        }
    }

    #[test]
    fn reads_do_not_mutate() {
        for kind in BackendKind::ALL {
            let counter = sentence_counter(kind);
            let before = counter.inorder();
            let _ = counter.lookup("my");
            let _ = counter.lookup("zzz");
            assert_eq!(counter.inorder(), before, "{kind}");
            assert_eq!(counter.len(), 7);
        }
    }

    #[test]
    fn backend_names_round_trip() {
        for kind in BackendKind::ALL {
            assert_eq!(kind.name().parse::<BackendKind>().unwrap(), kind);
        }
        assert!("splay".parse::<BackendKind>().is_err());
    }

    #[test]
    fn height_only_for_trees() {
        for kind in BackendKind::ALL {
            let counter = sentence_counter(kind);
            assert_eq!(counter.height().is_some(), kind.is_tree(), "{kind}");
        }
        assert_eq!(FrequencyCounter::new(BackendKind::Bst).height(), Some(0));
        assert_eq!(FrequencyCounter::new(BackendKind::Avl).height(), Some(0));
    }

    #[test]
    fn counters_move_between_threads() {
        fn assert_send<T: Send>() {}
        assert_send::<FrequencyCounter>();
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Brute-force oracle: sort the raw token list and run-length encode.
        fn sort_and_group(tokens: &[Item]) -> Vec<(Item, u64)> {
            let mut sorted = tokens.to_vec();
            sorted.sort();
            let mut out: Vec<(Item, u64)> = Vec::new();
            for token in sorted {
                match out.last_mut() {
                    Some((key, count)) if *key == token => *count += 1,
                    _ => out.push((token, 1)),
                }
            }
            out
        }

        fn token_seq() -> impl Strategy<Value = Vec<Item>> {
            proptest::collection::vec("[a-d]{1,3}", 0..200)
                .prop_map(|v| v.into_iter().map(|s| Item::new(&s).unwrap()).collect())
        }

        proptest! {
            #[test]
            fn inorder_matches_sort_and_group(tokens in token_seq()) {
                let expected = sort_and_group(&tokens);
                for kind in BackendKind::ALL {
                    let mut counter = FrequencyCounter::new(kind);
                    for t in &tokens {
                        counter.insert(t.clone());
                    }
                    prop_assert_eq!(counter.inorder(), expected.clone(), "{}", kind);
                }
            }

            #[test]
            fn mass_is_conserved_and_invariants_hold(tokens in token_seq()) {
                for kind in BackendKind::ALL {
                    let mut counter = FrequencyCounter::new(kind);
                    for t in &tokens {
                        counter.insert(t.clone());
                    }
                    counter.assert_invariants();
                    let mass: u64 = counter.inorder().iter().map(|(_, c)| c).sum();
                    prop_assert_eq!(mass, tokens.len() as u64, "{}", kind);
                    prop_assert_eq!(counter.is_empty(), tokens.is_empty());
                }
            }
        }
    }
}
