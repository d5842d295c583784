//! The AVL-balanced counter. Same increment-on-match semantics as the
//! plain BST, plus height bookkeeping and rotations on the insertion path
//! so that every node satisfies |height(left) − height(right)| ≤ 1.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::item::Item;

type Link = Option<Box<Node>>;

#[derive(Debug)]
struct Node {
    key: Item,
    count: u64,
    // Nodes on the longest path from here down; a leaf has height 1.
    height: usize,
    left: Link,
    right: Link,
}

impl Node {
    fn leaf(key: Item) -> Box<Node> {
        Box::new(Node {
            key,
            count: 1,
            height: 1,
            left: None,
            right: None,
        })
    }

    fn update_height(&mut self) {
        self.height = 1 + height(&self.left).max(height(&self.right));
    }

    /// height(left) − height(right); positive means left-heavy.
    fn balance_factor(&self) -> isize {
        height(&self.left) as isize - height(&self.right) as isize
    }
}

fn height(link: &Link) -> usize {
    link.as_deref().map_or(0, |node| node.height)
}

/// Rotates the subtree at `link` left: its right child becomes the root.
/// The inorder key sequence is unchanged.
fn rotate_left(link: &mut Link) {
    let mut node = link.take().expect("rotate_left on empty link");
    let mut new_root = node.right.take().expect("rotate_left without right child");
    node.right = new_root.left.take();
    node.update_height();
    new_root.left = Some(node);
    new_root.update_height();
    *link = Some(new_root);
}

/// Mirror image of [`rotate_left`].
fn rotate_right(link: &mut Link) {
    let mut node = link.take().expect("rotate_right on empty link");
    let mut new_root = node.left.take().expect("rotate_right without left child");
    node.left = new_root.right.take();
    node.update_height();
    new_root.right = Some(node);
    new_root.update_height();
    *link = Some(new_root);
}

/// Restores the AVL invariant at `link` after one insertion below it,
/// applying a single or double rotation as the balance factor dictates.
fn rebalance(link: &mut Link) {
    let node = link.as_mut().expect("rebalance on empty link");
    node.update_height();
    let balance = node.balance_factor();
    if balance > 1 {
        // Left-heavy; a right-leaning left child needs the double rotation.
        if node
            .left
            .as_deref()
            .expect("left-heavy node has a left child")
            .balance_factor()
            < 0
        {
            rotate_left(&mut node.left);
        }
        rotate_right(link);
    } else if balance < -1 {
        if node
            .right
            .as_deref()
            .expect("right-heavy node has a right child")
            .balance_factor()
            > 0
        {
            rotate_right(&mut node.right);
        }
        rotate_left(link);
    }
}

fn insert_at(link: &mut Link, key: Item, comparisons: &mut u64, added: &mut bool) {
    match link {
        None => {
            *link = Some(Node::leaf(key));
            *added = true;
            return;
        }
        Some(node) => {
            *comparisons += 1;
            match key.cmp(&node.key) {
                Ordering::Equal => {
                    node.count += 1;
                    return;
                }
                Ordering::Less => insert_at(&mut node.left, key, comparisons, added),
                Ordering::Greater => insert_at(&mut node.right, key, comparisons, added),
            }
        }
    }
    rebalance(link);
}

#[derive(Debug)]
pub(super) struct AvlCounter {
    root: Link,
    len: usize,
}

impl AvlCounter {
    pub(super) fn new() -> AvlCounter {
        AvlCounter { root: None, len: 0 }
    }

    pub(super) fn len(&self) -> usize {
        self.len
    }

    /// Returns the number of key comparisons performed.
    pub(super) fn insert(&mut self, key: Item) -> u64 {
        let mut comparisons = 0;
        let mut added = false;
        insert_at(&mut self.root, key, &mut comparisons, &mut added);
        if added {
            self.len += 1;
        }
        comparisons
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

    pub(super) fn inorder(&self) -> Vec<(Item, u64)> {
        fn walk(link: &Link, out: &mut Vec<(Item, u64)>) {
            if let Some(node) = link.as_deref() {
                walk(&node.left, out);
                out.push((node.key.clone(), node.count));
                walk(&node.right, out);
            }
        }
        let mut out = Vec::with_capacity(self.len);
        walk(&self.root, &mut out);
        out
    }

    pub(super) fn height(&self) -> usize {
        height(&self.root)
    }

    pub(super) fn assert_invariants(&self) {
        // Returns the verified height of the subtree.
        fn check(link: &Link) -> usize {
            let Some(node) = link.as_deref() else {
                return 0;
            };
            assert!(node.count >= 1, "avl: zero count stored");
            if let Some(left) = node.left.as_deref() {
                assert!(left.key < node.key, "avl: left child out of order");
            }
            if let Some(right) = node.right.as_deref() {
                assert!(node.key < right.key, "avl: right child out of order");
            }
            let left = check(&node.left);
            let right = check(&node.right);
            assert_eq!(node.height, 1 + left.max(right), "avl: stale height");
            assert!(
                left.abs_diff(right) <= 1,
                "avl: balance violated at {:?}",
                node.key
            );
            node.height
        }
        let checked = check(&self.root);
        assert_eq!(checked, self.height());
        let pairs = self.inorder();
        assert_eq!(pairs.len(), self.len, "avl: node count != len");
        assert!(
            pairs.windows(2).all(|w| w[0].0 < w[1].0),
            "avl: inorder keys not strictly ascending"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(s: &str) -> Item {
        Item::new(s).unwrap()
    }

    fn root_layout(tree: &AvlCounter) -> (&str, Option<&str>, Option<&str>) {
        let root = tree.root.as_deref().unwrap();
        (
            root.key.as_str(),
            root.left.as_deref().map(|n| n.key.as_str()),
            root.right.as_deref().map(|n| n.key.as_str()),
        )
    }

    #[test]
    fn every_insertion_order_of_three_keys_balances() {
        // Smallest rotation-triggering cases: all 3! orders must end as the
        // height-2 tree rooted at "b". Covers single and double rotations.
        let orders = [
            ["a", "b", "c"],
            ["a", "c", "b"],
            ["b", "a", "c"],
            ["b", "c", "a"],
            ["c", "a", "b"],
            ["c", "b", "a"],
        ];
        for order in orders {
            let mut tree = AvlCounter::new();
            for key in order {
                tree.insert(item(key));
                tree.assert_invariants();
            }
            assert_eq!(tree.height(), 2, "order {order:?}");
            assert_eq!(root_layout(&tree), ("b", Some("a"), Some("c")));
        }
    }

    #[test]
    fn rotations_preserve_inorder() {
        // Keys chosen so ascending insertion exercises repeated rotations.
        let mut tree = AvlCounter::new();
        let mut reference: Vec<Item> = Vec::new();
        for n in 0..64u32 {
            let key = item(&alloc::format!("k{n:02}"));
            reference.push(key.clone());
            tree.insert(key);
            let inorder: Vec<Item> = tree.inorder().into_iter().map(|(k, _)| k).collect();
            assert_eq!(inorder, reference);
        }
    }

    #[test]
    fn ascending_inserts_stay_logarithmic() {
        // Height bound 1.44·log2(n+2), checked after every insert up to 2^16.
        let mut tree = AvlCounter::new();
        for n in 1..=(1u32 << 16) {
            tree.insert(item(&alloc::format!("k{n:05}")));
            let bound = 1.44 * ((n as f64) + 2.0).log2();
            assert!(
                (tree.height() as f64) <= bound,
                "n={n} height={} bound={bound}",
                tree.height()
            );
        }
        tree.assert_invariants();
        assert_eq!(tree.len(), 1 << 16);
    }
}
