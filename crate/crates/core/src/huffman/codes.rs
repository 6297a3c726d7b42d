use super::{DecodeTree, HuffmanTree, Node, TreeDegree};
use crate::bitio::BitWriter;
use crate::error::{Error, Result};

const NO_ENTRY: u16 = u16::MAX;

/// A symbol and its code, stored as a sequence of edge labels (chunks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeEntry {
    pub symbol: u8,
    pub chunks: Vec<u8>,
}

impl CodeEntry {
    /// Code length in edges.
    pub fn depth(&self) -> usize {
        self.chunks.len()
    }

    /// The code as a bit string, most significant bit of the first chunk first.
    pub fn bits(&self, chunk_bits: u32) -> Vec<bool> {
        self.chunks
            .iter()
            .flat_map(|&c| (0..chunk_bits).rev().map(move |i| (c >> i) & 1 == 1))
            .collect()
    }
}

/// Symbol-to-code mapping for one tree degree.
///
/// Construction validates that codes are non-empty, chunk values are valid
/// child indices, symbols are distinct, and no code is a prefix of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    degree: TreeDegree,
    chunk_bits: u32,
    entries: Vec<CodeEntry>,
    index: Box<[u16; 256]>,
}

impl CodeTable {
    pub fn new(degree: TreeDegree, entries: Vec<CodeEntry>) -> Result<Self> {
        if entries.is_empty() || entries.len() > 256 {
            return Err(Error::MalformedTable(format!(
                "{} entries (expected 1..=256)",
                entries.len()
            )));
        }
        let mut index = Box::new([NO_ENTRY; 256]);
        for (i, e) in entries.iter().enumerate() {
            let slot = &mut index[usize::from(e.symbol)];
            if *slot != NO_ENTRY {
                return Err(Error::MalformedTable(format!(
                    "duplicate symbol 0x{:02x}",
                    e.symbol
                )));
            }
            *slot = i as u16;
        }
        // builds the trie, rejecting empty codes, bad chunks and prefix clashes
        DecodeTree::from_entries(degree, &entries)?;
        Ok(Self {
            degree,
            chunk_bits: degree.chunk_bits(),
            entries,
            index,
        })
    }

    pub fn degree(&self) -> TreeDegree {
        self.degree
    }

    pub fn chunk_bits(&self) -> u32 {
        self.chunk_bits
    }

    pub fn entries(&self) -> &[CodeEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, symbol: u8) -> Option<&CodeEntry> {
        match self.index[usize::from(symbol)] {
            NO_ENTRY => None,
            i => Some(&self.entries[usize::from(i)]),
        }
    }

    pub fn bit_len(&self, entry: &CodeEntry) -> usize {
        entry.depth() * self.chunk_bits as usize
    }
}

/// Labels edge `i` of every internal node with chunk value `i` and collects
/// the root-to-leaf label sequences. Placeholders get no entry.
pub fn assign_codes(t: &HuffmanTree) -> CodeTable {
    let mut entries = Vec::new();
    let mut stack: Vec<(usize, Vec<u8>)> = vec![(t.root(), Vec::new())];
    while let Some((id, path)) = stack.pop() {
        match t.node(id) {
            Node::Leaf { symbol, .. } => entries.push(CodeEntry {
                symbol: *symbol,
                chunks: path,
            }),
            Node::Placeholder => {}
            Node::Internal { children, .. } => {
                for (label, &child) in children.iter().enumerate().rev() {
                    let mut p = path.clone();
                    p.push(label as u8);
                    stack.push((child, p));
                }
            }
        }
    }
    CodeTable::new(t.degree(), entries).expect("a built tree yields a valid table")
}

/// Packed code bits plus the zero padding count of the final byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedPayload {
    pub bytes: Vec<u8>,
    pub extra_bits: u8,
}

impl EncodedPayload {
    /// Code bits before padding.
    pub fn bit_len(&self) -> u64 {
        self.bytes.len() as u64 * 8 - u64::from(self.extra_bits)
    }
}

/// Replaces every byte of `message` with its code and packs the result MSB-first.
pub fn encode_payload(message: &[u8], table: &CodeTable) -> Result<EncodedPayload> {
    let b = table.chunk_bits();
    // each code split into words of at most 32 bits
    let mut words: Vec<Vec<(u32, u32)>> = vec![Vec::new(); 256];
    for e in table.entries() {
        let out = &mut words[usize::from(e.symbol)];
        let (mut acc, mut width) = (0u32, 0u32);
        for &c in &e.chunks {
            if width + b > 32 {
                out.push((acc, width));
                (acc, width) = (0, 0);
            }
            acc = (acc << b) | u32::from(c);
            width += b;
        }
        out.push((acc, width));
    }

    let mut w = BitWriter::with_capacity(message.len());
    for &sym in message {
        let code = &words[usize::from(sym)];
        if code.is_empty() {
            return Err(Error::UnknownSymbol(sym));
        }
        for &(value, width) in code {
            w.push_unchecked(value, width);
        }
    }
    let (bytes, extra_bits) = w.finalize();
    Ok(EncodedPayload { bytes, extra_bits })
}
