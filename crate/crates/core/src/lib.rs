//! n-ary Huffman compression for tree degrees 2 through 16.
//!
//! Codes are built over byte symbols with every internal node having exactly
//! `n` children; each edge is a `ceil(log2 n)`-bit chunk. The encoded file
//! carries an 11-byte header, the packed payload and the code table (see
//! [`container`]). Two decoders are provided: a tree walker and a
//! table-driven state machine with a branch-free inner loop.
//!
//! ```
//! use nhuff::{decode_file, encode_file, TreeDegree};
//!
//! let degree = TreeDegree::new(16).unwrap();
//! let file = encode_file(b"Mississippi River", degree).unwrap();
//! assert_eq!(file[1], 4); // padding bits
//! assert_eq!(decode_file(&file).unwrap(), b"Mississippi River");
//! ```

pub mod bench;
pub mod bitio;
pub mod container;
pub mod corpusgen;
mod error;
pub mod huffman;
mod inspect;

pub use container::{decode_file, decode_file_with, encode_file, DecoderKind};
pub use error::{Error, Result};
pub use huffman::TreeDegree;
pub use inspect::{inspect, Inspection};
