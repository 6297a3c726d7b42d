//! n-ary Huffman coding.
//!
//! Every internal node has exactly `n` children. Edges are labelled with
//! fixed-width chunks of [`chunk_bits`] bits, so a code is a sequence of
//! chunks rather than a free-form bit string.

mod codes;
mod decode;
mod fsm;
mod histogram;
mod tree;

pub use codes::{assign_codes, encode_payload, CodeEntry, CodeTable, EncodedPayload};
pub use decode::{decode_payload_reference, DecodeTree, Slot};
pub use fsm::{decode_payload_fsm, DecodeFsm, Transition};
pub use histogram::{histogram, SymbolHistogram};
pub use tree::{build_tree, weighted_path_length, HuffmanTree, Node, NodeId};

use std::fmt;

use crate::error::{Error, Result};

/// Degree of a Huffman tree, validated to `2..=16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeDegree(u8);

impl TreeDegree {
    pub const MIN: u8 = 2;
    pub const MAX: u8 = 16;

    /// The eight degrees used by the default benchmark.
    pub const BENCHMARK_SET: [u8; 8] = [2, 3, 4, 5, 6, 7, 8, 16];

    pub fn new(n: u8) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::UnsupportedDegree(n))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn arity(self) -> usize {
        usize::from(self.0)
    }

    pub fn chunk_bits(self) -> u32 {
        chunk_bits(self)
    }

    pub fn all() -> impl Iterator<Item = TreeDegree> {
        (Self::MIN..=Self::MAX).map(TreeDegree)
    }
}

impl TryFrom<u8> for TreeDegree {
    type Error = Error;

    fn try_from(n: u8) -> Result<Self> {
        Self::new(n)
    }
}

impl fmt::Display for TreeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-ary", self.0)
    }
}

/// Number of zero-weight leaves needed so that the leaf count is
/// congruent to 1 modulo `n - 1`.
///
/// Defined for `s_dst >= 1`; the single-symbol tree needs extra handling in
/// [`build_tree`].
pub fn placeholder_count(n: TreeDegree, s_dst: usize) -> usize {
    let n = n.arity() as i64;
    let s = s_dst as i64;
    ((n - 2) - (s + n - 3).rem_euclid(n - 1)) as usize
}

/// Bits per edge label: `ceil(log2 n)`.
pub fn chunk_bits(n: TreeDegree) -> u32 {
    u32::from(n.get() - 1).ilog2() + 1
}
