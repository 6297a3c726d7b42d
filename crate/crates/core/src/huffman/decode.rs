use super::{CodeEntry, CodeTable, TreeDegree};
use crate::bitio::BitReader;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Empty,
    Leaf(u8),
    Internal(u32),
}

/// Decode trie rebuilt from a code table. Placeholder positions stay
/// [`Slot::Empty`]. Internal node 0 is the root.
#[derive(Debug, Clone)]
pub struct DecodeTree {
    arity: usize,
    slots: Vec<Slot>,
}

impl DecodeTree {
    pub fn from_table(table: &CodeTable) -> Self {
        Self::from_entries(table.degree(), table.entries()).expect("table was validated")
    }

    pub(crate) fn from_entries(degree: TreeDegree, entries: &[CodeEntry]) -> Result<Self> {
        let arity = degree.arity();
        let mut slots = vec![Slot::Empty; arity];
        for e in entries {
            let Some((&last, prefix)) = e.chunks.split_last() else {
                return Err(Error::MalformedTable(format!(
                    "empty code for symbol 0x{:02x}",
                    e.symbol
                )));
            };
            if let Some(&bad) = e.chunks.iter().find(|&&c| usize::from(c) >= arity) {
                return Err(Error::MalformedTable(format!(
                    "chunk value {bad} invalid for degree {}",
                    degree.get()
                )));
            }
            let mut node = 0usize;
            for &c in prefix {
                let at = node * arity + usize::from(c);
                node = match slots[at] {
                    Slot::Internal(next) => next as usize,
                    Slot::Empty => {
                        let next = slots.len() / arity;
                        slots[at] = Slot::Internal(next as u32);
                        slots.resize(slots.len() + arity, Slot::Empty);
                        next
                    }
                    Slot::Leaf(other) => {
                        return Err(Error::MalformedTable(format!(
                            "code of 0x{other:02x} is a prefix of the code of 0x{:02x}",
                            e.symbol
                        )))
                    }
                };
            }
            let at = node * arity + usize::from(last);
            if slots[at] != Slot::Empty {
                return Err(Error::MalformedTable(format!(
                    "code of 0x{:02x} collides with another code",
                    e.symbol
                )));
            }
            slots[at] = Slot::Leaf(e.symbol);
        }
        Ok(Self { arity, slots })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn internal_count(&self) -> usize {
        self.slots.len() / self.arity
    }

    /// Child `chunk` of internal node `node`; out-of-range chunks read as empty.
    pub fn child(&self, node: usize, chunk: usize) -> Slot {
        if chunk >= self.arity {
            return Slot::Empty;
        }
        self.slots[node * self.arity + chunk]
    }
}

/// Walks the decode tree chunk by chunk until `symbol_count` symbols are out,
/// then checks that exactly the unpadded bits were consumed.
pub fn decode_payload_reference(
    payload: &[u8],
    extra_bits: u8,
    table: &CodeTable,
    symbol_count: usize,
) -> Result<Vec<u8>> {
    let available = code_bits_available(payload, extra_bits)?;
    let tree = DecodeTree::from_table(table);
    let b = table.chunk_bits();
    let mut reader = BitReader::new(payload);
    let mut out = Vec::with_capacity(symbol_count);

    while out.len() < symbol_count {
        let mut node = 0usize;
        loop {
            let at = reader.bits_consumed();
            if at + u64::from(b) > available {
                return Err(Error::TruncatedStream {
                    decoded: out.len(),
                    expected: symbol_count,
                });
            }
            let chunk = reader.read_bits(b)? as usize;
            match tree.child(node, chunk) {
                Slot::Leaf(symbol) => {
                    out.push(symbol);
                    break;
                }
                Slot::Internal(next) => node = next as usize,
                Slot::Empty => return Err(Error::CorruptStream { bit: at }),
            }
        }
    }

    if reader.bits_consumed() != available {
        return Err(Error::InconsistentPadding {
            consumed: reader.bits_consumed(),
            expected: available,
        });
    }
    Ok(out)
}

/// Unpadded bit count of a payload. The padding itself must be zero.
pub(crate) fn code_bits_available(payload: &[u8], extra_bits: u8) -> Result<u64> {
    let total = payload.len() as u64 * 8;
    if extra_bits > 7 || u64::from(extra_bits) > total {
        return Err(Error::InconsistentPadding {
            consumed: 0,
            expected: total.saturating_sub(u64::from(extra_bits)),
        });
    }
    if let Some(&last) = payload.last() {
        if last & ((1u16 << extra_bits) - 1) as u8 != 0 {
            return Err(Error::DirtyPadding { extra_bits });
        }
    }
    Ok(total - u64::from(extra_bits))
}
