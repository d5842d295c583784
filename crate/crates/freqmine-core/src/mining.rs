//! Level-wise frequent-itemset mining: F1 through a frequency-counter
//! backend, candidate generation by self-join, downward-closure pruning,
//! per-level support counting, and an exhaustive brute-force oracle.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::counters::{BackendKind, FrequencyCounter};
use crate::ingest::TransactionDatabase;
use crate::item::Item;

/// An immutable k-set of items in strictly ascending order, k ≥ 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Itemset {
    items: Vec<Item>,
}

impl Itemset {
    /// Sorts and deduplicates `items`; `None` when that leaves nothing.
    pub fn new(mut items: Vec<Item>) -> Option<Itemset> {
        items.sort_unstable();
        items.dedup();
        if items.is_empty() {
            None
        } else {
            Some(Itemset { items })
        }
    }

    pub fn single(item: Item) -> Itemset {
        Itemset {
            items: alloc::vec![item],
        }
    }

    fn from_sorted(items: Vec<Item>) -> Itemset {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]) && !items.is_empty());
        Itemset { items }
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// k: the number of items.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        false // k ≥ 1 by construction
    }

    /// Merged walk over two ascending lists.
    pub fn is_subset_of(&self, transaction_items: &[Item]) -> bool {
        let mut haystack = transaction_items.iter();
        'next_needle: for needle in &self.items {
            for candidate in haystack.by_ref() {
                match candidate.cmp(needle) {
                    core::cmp::Ordering::Less => continue,
                    core::cmp::Ordering::Equal => continue 'next_needle,
                    core::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// The k subsets obtained by dropping one item; empty for k = 1.
    pub fn subsets_dropping_one(&self) -> Vec<Itemset> {
        if self.items.len() <= 1 {
            return Vec::new();
        }
        (0..self.items.len())
            .map(|drop| {
                let items = self
                    .items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, item)| item.clone())
                    .collect();
                Itemset::from_sorted(items)
            })
            .collect()
    }
}

impl fmt::Display for Itemset {
    /// Items joined with commas: `I1,I2,I5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(item.as_str())?;
        }
        Ok(())
    }
}

/// An itemset with its absolute support count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SupportedItemset {
    pub itemset: Itemset,
    pub support: u64,
}

/// The absolute support threshold, at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinSupport(u64);

impl MinSupport {
    pub fn new(threshold: u64) -> Option<MinSupport> {
        if threshold >= 1 {
            Some(MinSupport(threshold))
        } else {
            None
        }
    }

    /// Converts a relative threshold in (0, 1] to an absolute one by
    /// ceiling(fraction × |D|), clamped up to 1 so the invariant holds on
    /// an empty database.
    pub fn from_fraction(fraction: f64, db_size: usize) -> Option<MinSupport> {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return None;
        }
        let scaled = fraction * db_size as f64;
        let mut threshold = scaled as u64;
        if (threshold as f64) < scaled {
            threshold += 1; // manual ceiling; f64::ceil is not in core
        }
        Some(MinSupport(threshold.max(1)))
    }

    pub fn threshold(self) -> u64 {
        self.0
    }
}

impl fmt::Display for MinSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Frequent itemsets by level, L1..Lmax, plus run metadata.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MiningResult {
    levels: Vec<Vec<SupportedItemset>>,
    min_support: MinSupport,
    db_size: usize,
    backend: BackendKind,
}

impl MiningResult {
    /// Level k sits at index k − 1; each level is sorted by item sequence.
    pub fn levels(&self) -> &[Vec<SupportedItemset>] {
        &self.levels
    }

    /// All frequent itemsets, levels ascending, lexicographic within a level.
    pub fn iter(&self) -> impl Iterator<Item = &SupportedItemset> {
        self.levels.iter().flatten()
    }

    pub fn total_itemsets(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn min_support(&self) -> MinSupport {
        self.min_support
    }

    pub fn db_size(&self) -> usize {
        self.db_size
    }

    pub fn backend(&self) -> BackendKind {
        self.backend
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MiningError {
    /// `join` was handed itemsets of differing sizes.
    MixedSizes,
    /// The brute-force oracle refuses universes past [`BRUTE_FORCE_LIMIT`]
    /// items; enumeration is exponential.
    UniverseTooLarge { size: usize },
}

impl fmt::Display for MiningError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiningError::MixedSizes => f.write_str("join requires itemsets of one common size"),
            MiningError::UniverseTooLarge { size } => write!(
                f,
                "universe of {size} items exceeds the brute-force limit of {BRUTE_FORCE_LIMIT}"
            ),
        }
    }
}

impl core::error::Error for MiningError {}

/// Largest universe [`brute_force_frequent`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// First pass: each item's count ends up equal to the number of
/// transactions containing it (transactions are deduplicated sets).
pub fn count_1_itemsets(db: &TransactionDatabase, backend: BackendKind) -> FrequencyCounter {
    let mut counter = FrequencyCounter::new(backend);
    for transaction in db.transactions() {
        for item in transaction.items() {
            counter.insert(item.clone());
        }
    }
    counter
}

/// Keeps the items whose count meets the threshold, as 1-itemsets in
/// ascending item order.
pub fn frequent_1(counter: &FrequencyCounter, min_support: MinSupport) -> Vec<SupportedItemset> {
    counter
        .inorder()
        .into_iter()
        .filter(|(_, count)| *count >= min_support.threshold())
        .map(|(item, count)| SupportedItemset {
            itemset: Itemset::single(item),
            support: count,
        })
        .collect()
}

/// Self-join of a (k−1)-level: two itemsets sharing their first k−2 items
/// merge into one k-itemset, taking the pair's last items in ascending
/// order so no duplicate candidates arise. Output is sorted and distinct;
/// no pruning happens here.
pub fn join(prev_level: &[Itemset]) -> Result<Vec<Itemset>, MiningError> {
    let Some(first) = prev_level.first() else {
        return Ok(Vec::new());
    };
    let size = first.len();
    if prev_level.iter().any(|set| set.len() != size) {
        return Err(MiningError::MixedSizes);
    }

    let mut sets: Vec<&Itemset> = prev_level.iter().collect();
    sets.sort_unstable();
    sets.dedup();

    let mut out = Vec::new();
    let mut group_start = 0;
    while group_start < sets.len() {
        // Find the run sharing the first k−2 items with sets[group_start].
        let prefix = &sets[group_start].items()[..size - 1];
        let mut group_end = group_start + 1;
        while group_end < sets.len() && &sets[group_end].items()[..size - 1] == prefix {
            group_end += 1;
        }
        for i in group_start..group_end {
            for j in (i + 1)..group_end {
                let mut items = sets[i].items().to_vec();
                items.push(sets[j].items()[size - 1].clone());
                out.push(Itemset::from_sorted(items));
            }
        }
        group_start = group_end;
    }
    Ok(out)
}

/// Downward-closure prune: keeps exactly the candidates all of whose
/// (k−1)-subsets appear in the previous level. Vacuous for k = 1, and for
/// k = 2 by construction (both 1-subsets of a joined pair come from L1),
/// but it runs there all the same.
pub fn prune(candidates: &[Itemset], prev_level: &[Itemset]) -> Vec<Itemset> {
    if candidates.first().is_some_and(|c| c.len() <= 1) {
        return candidates.to_vec();
    }
    let known: BTreeSet<&[Item]> = prev_level.iter().map(Itemset::items).collect();
    candidates
        .iter()
        .filter(|candidate| {
            candidate
                .subsets_dropping_one()
                .iter()
                .all(|subset| known.contains(subset.items()))
        })
        .cloned()
        .collect()
}

/// One full scan of the database: every candidate comes back with the
/// number of transactions containing it, support-0 candidates included.
pub fn count_support(db: &TransactionDatabase, candidates: &[Itemset]) -> Vec<SupportedItemset> {
    let mut counts = alloc::vec![0u64; candidates.len()];
    for transaction in db.transactions() {
        for (index, candidate) in candidates.iter().enumerate() {
            if candidate.is_subset_of(transaction.items()) {
                counts[index] += 1;
            }
        }
    }
    candidates
        .iter()
        .zip(counts)
        .map(|(itemset, support)| SupportedItemset {
            itemset: itemset.clone(),
            support,
        })
        .collect()
}

/// [`count_support`] over disjoint transaction chunks with the partial
/// counts summed. The result is identical to the sequential scan for any
/// chunk length; this is the contract that lets a caller fan the scan out
/// across workers.
pub fn count_support_partitioned(
    db: &TransactionDatabase,
    candidates: &[Itemset],
    chunk_len: usize,
) -> Vec<SupportedItemset> {
    let chunk_len = chunk_len.max(1);
    let mut totals = alloc::vec![0u64; candidates.len()];
    for chunk in db.transactions().chunks(chunk_len) {
        for transaction in chunk {
            for (index, candidate) in candidates.iter().enumerate() {
                if candidate.is_subset_of(transaction.items()) {
                    totals[index] += 1;
                }
            }
        }
    }
    candidates
        .iter()
        .zip(totals)
        .map(|(itemset, support)| SupportedItemset {
            itemset: itemset.clone(),
            support,
        })
        .collect()
}

/// The level-wise miner. L1 comes from the chosen counter backend; each
/// later level joins and prunes the previous one, then counts support in
/// one database scan. Stops when a candidate or frequent level is empty.
pub fn apriori(
    db: &TransactionDatabase,
    min_support: MinSupport,
    backend: BackendKind,
) -> MiningResult {
    let counter = count_1_itemsets(db, backend);
    let mut level = frequent_1(&counter, min_support);
    let mut levels: Vec<Vec<SupportedItemset>> = Vec::new();
    while !level.is_empty() {
        levels.push(level);
        let prev: Vec<Itemset> = levels
            .last()
            .expect("just pushed")
            .iter()
            .map(|s| s.itemset.clone())
            .collect();
        let joined = join(&prev).expect("one level holds itemsets of one size");
        let candidates = prune(&joined, &prev);
        if candidates.is_empty() {
            break;
        }
        level = count_support(db, &candidates)
            .into_iter()
            .filter(|s| s.support >= min_support.threshold())
            .collect();
    }
    MiningResult {
        levels,
        min_support,
        db_size: db.len(),
        backend,
    }
}

/// Exhaustive oracle: enumerates every nonempty subset of the universe as
/// a bitmask and counts containment against bitmask-encoded transactions —
/// a route independent of the join/prune machinery it is used to check.
/// Results are sorted by size, then item sequence.
pub fn brute_force_frequent(
    db: &TransactionDatabase,
    min_support: MinSupport,
) -> Result<Vec<SupportedItemset>, MiningError> {
    let universe = db.universe();
    if universe.len() > BRUTE_FORCE_LIMIT {
        return Err(MiningError::UniverseTooLarge {
            size: universe.len(),
        });
    }
    let transaction_masks: Vec<u32> = db
        .transactions()
        .iter()
        .map(|t| {
            t.items()
                .iter()
                .map(|item| {
                    let bit = universe
                        .binary_search(item)
                        .expect("transaction items are in the universe");
                    1u32 << bit
                })
                .sum()
        })
        .collect();

    let mut frequent = Vec::new();
    for mask in 1u32..(1u32 << universe.len()) {
        let support = transaction_masks
            .iter()
            .filter(|&&t| t & mask == mask)
            .count() as u64;
        if support < min_support.threshold() {
            continue;
        }
        let items: Vec<Item> = universe
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, item)| item.clone())
            .collect();
        frequent.push(SupportedItemset {
            itemset: Itemset::from_sorted(items),
            support,
        });
    }
    frequent
        .sort_unstable_by(|a, b| (a.itemset.len(), &a.itemset).cmp(&(b.itemset.len(), &b.itemset)));
    Ok(frequent)
}
