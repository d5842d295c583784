//! Turns raw text or a transaction file into the engine's canonical
//! in-memory forms: a token stream or a [`TransactionDatabase`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::item::Item;

/// ASCII punctuation stripped from token edges. Interior punctuation
/// ("don't") is kept.
const EDGE_PUNCT: &[char] = &[
    '.', ',', ';', ':', '!', '?', '"', '\'', '(', ')', '[', ']', '{', '}',
];

/// Splits `text` on whitespace, strips leading/trailing [`EDGE_PUNCT`] from
/// each word, folds to lowercase, and drops words that are empty after
/// stripping. Total: never fails, empty input yields an empty stream.
pub fn tokenize(text: &str) -> Vec<Item> {
    text.split_whitespace()
        .filter_map(|word| {
            let stripped = word.trim_matches(EDGE_PUNCT);
            if stripped.is_empty() {
                None
            } else {
                Some(Item::from_trusted(stripped.to_lowercase()))
            }
        })
        .collect()
}

/// One basket: an optional TID plus a deduplicated, ascending item list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction {
    tid: Option<String>,
    items: Vec<Item>,
}

impl Transaction {
    /// Sorts and deduplicates `items`.
    pub fn new(tid: Option<String>, mut items: Vec<Item>) -> Transaction {
        items.sort_unstable();
        items.dedup();
        Transaction { tid, items }
    }

    pub fn tid(&self) -> Option<&str> {
        self.tid.as_deref()
    }

    /// Items in strictly ascending order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// An ordered list of transactions plus the sorted universe of distinct
/// items appearing anywhere in them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Transaction>,
    universe: Vec<Item>,
}

impl TransactionDatabase {
    /// Drops empty transactions (they can never support an itemset) and
    /// computes the universe.
    pub fn new(transactions: Vec<Transaction>) -> TransactionDatabase {
        let transactions: Vec<Transaction> =
            transactions.into_iter().filter(|t| !t.is_empty()).collect();
        let universe: BTreeSet<Item> = transactions
            .iter()
            .flat_map(|t| t.items.iter().cloned())
            .collect();
        TransactionDatabase {
            transactions,
            universe: universe.into_iter().collect(),
        }
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    /// All distinct items, ascending.
    pub fn universe(&self) -> &[Item] {
        &self.universe
    }

    /// |D|: the number of (nonempty) transactions.
    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Canonical file form: one transaction per line, `TID\t` prefix when a
    /// TID is present, items comma-separated without padding. Re-parsing the
    /// result yields an equal database.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        for t in &self.transactions {
            if let Some(tid) = &t.tid {
                out.push_str(tid);
                out.push('\t');
            }
            for (i, item) in t.items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(item.as_str());
            }
            out.push('\n');
        }
        out
    }
}

/// Parse failure, reported with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IngestError {
    MalformedLine { line: usize, reason: &'static str },
}

impl IngestError {
    pub fn line(&self) -> usize {
        match self {
            IngestError::MalformedLine { line, .. } => *line,
        }
    }
}

impl fmt::Display for IngestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IngestError::MalformedLine { line, reason } => {
                write!(f, "malformed line {line}: {reason}")
            }
        }
    }
}

impl core::error::Error for IngestError {}

/// Parses a line-oriented transaction stream.
///
/// One transaction per non-blank line. With `has_tid`, the first
/// whitespace-separated field is the TID and the remainder is the item
/// list; items are comma-separated and trimmed. Items within a line are
/// deduplicated and sorted; blank lines and lines yielding zero items are
/// skipped.
pub fn parse_transactions(input: &str, has_tid: bool) -> Result<TransactionDatabase, IngestError> {
    let mut transactions = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (tid, item_field) = if has_tid {
            match line.split_once(char::is_whitespace) {
                Some((tid, rest)) => (Some(tid.to_string()), rest),
                None => {
                    return Err(IngestError::MalformedLine {
                        line: line_no,
                        reason: "no item field after the transaction id",
                    })
                }
            }
        } else {
            (None, line)
        };
        let mut items = BTreeSet::new();
        for field in item_field.split(',') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let item = Item::new(field).map_err(|_| IngestError::MalformedLine {
                line: line_no,
                reason: "item field contains embedded whitespace",
            })?;
            items.insert(item);
        }
        if items.is_empty() {
            continue;
        }
        transactions.push(Transaction {
            tid,
            items: items.into_iter().collect(),
        });
    }
    Ok(TransactionDatabase::new(transactions))
}
