//! The unbalanced binary search tree counter: increment on match,
//! attach a fresh node on miss. No rebalancing, so adversarial key order
//! degenerates it into a linked list.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::item::Item;

type Link = Option<Box<Node>>;

#[derive(Debug)]
struct Node {
    key: Item,
    count: u64,
    left: Link,
    right: Link,
}

#[derive(Debug)]
pub(super) struct BstCounter {
    root: Link,
    len: usize,
}

impl BstCounter {
    pub(super) fn new() -> BstCounter {
        BstCounter { root: None, len: 0 }
    }

    pub(super) fn len(&self) -> usize {
        self.len
    }

    /// Returns the number of key comparisons performed.
    pub(super) fn insert(&mut self, key: Item) -> u64 {
        let mut comparisons = 0;
        let mut cur = &mut self.root;
        loop {
            match cur {
                None => {
                    *cur = Some(Box::new(Node {
                        key,
                        count: 1,
                        left: None,
                        right: None,
                    }));
                    self.len += 1;
                    return comparisons;
                }
                Some(node) => {
                    comparisons += 1;
                    match key.cmp(&node.key) {
                        Ordering::Equal => {
                            node.count += 1;
                            return comparisons;
                        }
                        Ordering::Less => cur = &mut node.left,
                        Ordering::Greater => cur = &mut node.right,
                    }
                }
            }
        }
    }

    pub(super) fn lookup(&self, key: &str) -> u64 {
        let mut cur = self.root.as_deref();
        while let Some(node) = cur {
            match key.cmp(node.key.as_str()) {
                Ordering::Equal => return node.count,
                Ordering::Less => cur = node.left.as_deref(),
                Ordering::Greater => cur = node.right.as_deref(),
            }
        }
        0
    }

    /// Left–node–right walk with an explicit stack; the tree may be a spine
    /// as deep as `len`, so recursion is not an option.
    pub(super) fn inorder(&self) -> Vec<(Item, u64)> {
        let mut out = Vec::with_capacity(self.len);
        let mut stack: Vec<&Node> = Vec::new();
        let mut cur = self.root.as_deref();
        while cur.is_some() || !stack.is_empty() {
            while let Some(node) = cur {
                stack.push(node);
                cur = node.left.as_deref();
            }
            let node = stack.pop().expect("stack is non-empty");
            out.push((node.key.clone(), node.count));
            cur = node.right.as_deref();
        }
        out
    }

    pub(super) fn height(&self) -> usize {
        let mut max = 0;
        let mut stack: Vec<(&Node, usize)> = Vec::new();
        if let Some(root) = self.root.as_deref() {
            stack.push((root, 1));
        }
        while let Some((node, depth)) = stack.pop() {
            max = max.max(depth);
            if let Some(left) = node.left.as_deref() {
                stack.push((left, depth + 1));
            }
            if let Some(right) = node.right.as_deref() {
                stack.push((right, depth + 1));
            }
        }
        max
    }

    pub(super) fn assert_invariants(&self) {
        let pairs = self.inorder();
        assert_eq!(pairs.len(), self.len, "bst: node count != len");
        assert!(
            pairs.windows(2).all(|w| w[0].0 < w[1].0),
            "bst: inorder keys not strictly ascending"
        );
        assert!(pairs.iter().all(|(_, c)| *c >= 1), "bst: zero count stored");
    }
}

// A degenerate tree drops recursively by default; unlink nodes iteratively
// so deep spines cannot overflow the stack.
impl Drop for BstCounter {
    fn drop(&mut self) {
        let mut stack: Vec<Box<Node>> = Vec::new();
        stack.extend(self.root.take());
        while let Some(mut node) = stack.pop() {
            stack.extend(node.left.take());
            stack.extend(node.right.take());
        }
    }
}
