use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{placeholder_count, SymbolHistogram, TreeDegree};
use crate::error::{Error, Result};

/// Index into [`HuffmanTree`]'s node arena.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf { symbol: u8, weight: u64 },
    Placeholder,
    Internal { children: Vec<NodeId>, weight: u64 },
}

impl Node {
    pub fn weight(&self) -> u64 {
        match self {
            Node::Leaf { weight, .. } | Node::Internal { weight, .. } => *weight,
            Node::Placeholder => 0,
        }
    }

    pub fn is_placeholder(&self) -> bool {
        matches!(self, Node::Placeholder)
    }
}

/// A degree-n Huffman tree stored as an arena.
///
/// Arena order doubles as the merge sequence number: symbol leaves in
/// ascending byte order, then placeholders, then internal nodes in the order
/// they were created.
#[derive(Debug, Clone)]
pub struct HuffmanTree {
    degree: TreeDegree,
    nodes: Vec<Node>,
    root: NodeId,
}

impl HuffmanTree {
    pub fn degree(&self) -> TreeDegree {
        self.degree
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn internal_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, Node::Internal { .. }))
            .count()
    }

    pub fn placeholder_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_placeholder()).count()
    }

    /// Leaf and placeholder count together.
    pub fn leaf_count(&self) -> usize {
        self.nodes.len() - self.internal_count()
    }

    /// Every non-internal node with its depth in edges, visited depth-first
    /// with children in edge-label order.
    pub fn leaf_depths(&self) -> Vec<(NodeId, usize)> {
        let mut out = Vec::with_capacity(self.leaf_count());
        let mut stack = vec![(self.root, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            match &self.nodes[id] {
                Node::Internal { children, .. } => {
                    stack.extend(children.iter().rev().map(|&c| (c, depth + 1)));
                }
                _ => out.push((id, depth)),
            }
        }
        out
    }
}

/// Builds the n-ary Huffman tree for a histogram by repeatedly merging the
/// `n` lightest unparented nodes.
///
/// Ties are broken by `(weight, placeholder-after-real, sequence number)`.
/// Within a merged node children are laid out heaviest first with
/// placeholders last, so placeholders take the highest edge labels.
pub fn build_tree(h: &SymbolHistogram, degree: TreeDegree) -> Result<HuffmanTree> {
    let distinct = h.distinct_count();
    if distinct == 0 {
        return Err(Error::EmptyInput);
    }
    let n = degree.arity();
    let placeholders = if distinct == 1 {
        n - 1
    } else {
        placeholder_count(degree, distinct)
    };

    let leaves = distinct + placeholders;
    let internals = (leaves - 1) / (n - 1);
    let mut nodes = Vec::with_capacity(leaves + internals);
    nodes.extend(
        h.present()
            .map(|(symbol, weight)| Node::Leaf { symbol, weight }),
    );
    nodes.extend(std::iter::repeat_n(Node::Placeholder, placeholders));

    let key = |nodes: &[Node], id: NodeId| (nodes[id].weight(), nodes[id].is_placeholder(), id);
    let mut queue: BinaryHeap<Reverse<(u64, bool, NodeId)>> = (0..nodes.len())
        .map(|id| Reverse(key(&nodes, id)))
        .collect();

    while queue.len() > 1 {
        let mut children: Vec<NodeId> = (0..n)
            .map(|_| queue.pop().expect("leaf count is 1 mod n-1").0 .2)
            .collect();
        children.sort_by_key(|&id| {
            let node = &nodes[id];
            (node.is_placeholder(), Reverse(node.weight()), id)
        });
        let weight = children.iter().map(|&c| nodes[c].weight()).sum();
        let id = nodes.len();
        nodes.push(Node::Internal { children, weight });
        queue.push(Reverse(key(&nodes, id)));
    }

    let root = queue.pop().expect("non-empty queue").0 .2;
    debug_assert_eq!(nodes.len(), leaves + internals);
    Ok(HuffmanTree {
        degree,
        nodes,
        root,
    })
}

/// Sum of `weight * depth` over all leaves. Placeholders weigh nothing.
pub fn weighted_path_length(t: &HuffmanTree) -> u64 {
    t.leaf_depths()
        .into_iter()
        .map(|(id, depth)| t.node(id).weight() * depth as u64)
        .sum()
}
