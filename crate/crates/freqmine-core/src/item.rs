//! The atomic symbol counted and mined: a word or an item ID.

use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

/// A symbolic token with a total lexicographic (byte-wise) order.
///
/// Items are cheap to clone; the text is shared behind an `Arc`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(Arc<str>);

impl Item {
    /// Builds an item from `text`, rejecting empty strings and strings
    /// containing whitespace.
    pub fn new(text: &str) -> Result<Item, ItemError> {
        if text.is_empty() {
            return Err(ItemError::Empty);
        }
        if text.chars().any(char::is_whitespace) {
            return Err(ItemError::ContainsWhitespace);
        }
        Ok(Item(Arc::from(text)))
    }

    /// Construction path for callers that enforce the invariants themselves
    /// (the tokenizer, synthetic key generators).
    pub(crate) fn from_trusted(text: String) -> Item {
        debug_assert!(!text.is_empty() && !text.chars().any(char::is_whitespace));
        Item(Arc::from(text.as_str()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Item({:?})", &*self.0)
    }
}

/// Why a string cannot be an [`Item`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemError {
    Empty,
    ContainsWhitespace,
}

impl fmt::Display for ItemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ItemError::Empty => f.write_str("item text is empty"),
            ItemError::ContainsWhitespace => f.write_str("item text contains whitespace"),
        }
    }
}

impl core::error::Error for ItemError {}
