//! Frequency counting and level-wise frequent-itemset mining.
//!
//! The crate has two halves. [`counters`] holds four interchangeable
//! frequency-counter dictionaries — an unbalanced binary search tree, an
//! AVL tree, a chained hash table, and a sorted array — behind one facade,
//! [`counters::FrequencyCounter`], that also tallies the key comparisons
//! each insert performs. [`mining`] builds on them: the first mining pass
//! counts single items through a chosen backend, and later passes grow
//! candidates by self-join, prune them by downward closure, and count
//! support in full database scans.
//!
//! Everything here is pure computation over `alloc` collections; parsing
//! input text is [`ingest`]'s job and takes `&str`, so the crate works
//! without `std`. File handling, timing, and the command-line front end
//! live in the companion `freqmine` crate.
//!
//! ```
//! use freqmine_core::counters::BackendKind;
//! use freqmine_core::ingest::parse_transactions;
//! use freqmine_core::mining::{apriori, MinSupport};
//!
//! let db = parse_transactions("bread,milk\nbread,butter\nbread,milk\n", false)?;
//! let result = apriori(&db, MinSupport::new(2).unwrap(), BackendKind::Bst);
//!
//! let found: Vec<String> = result.iter().map(|s| s.itemset.to_string()).collect();
//! assert_eq!(found, ["bread", "milk", "bread,milk"]);
//! # Ok::<(), freqmine_core::ingest::IngestError>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod counters;
pub mod ingest;
pub mod item;
pub mod mining;

pub use counters::{BackendKind, FrequencyCounter};
pub use item::Item;
pub use mining::{apriori, MinSupport, MiningResult};
