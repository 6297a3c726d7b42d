//! The `.nhf` file layout.
//!
//! ```text
//! offset  size  field
//!      0     1  tree degree (2..=16)
//!      1     1  extra (padding) bits in the last payload byte, 0..=7
//!      2     4  original size in bytes, little-endian
//!      6     4  payload size in bytes, little-endian
//!     10     1  table entry count (0 means 256 unless the original is empty)
//!     11     -  payload: packed codes, MSB-first
//!      -     -  table: per entry (symbol, code bit length, code bits padded to a byte)
//! ```

use crate::bitio::{BitReader, BitWriter};
use crate::error::{Error, Result};
use crate::huffman::{
    assign_codes, build_tree, decode_payload_fsm, decode_payload_reference, encode_payload,
    histogram, CodeEntry, CodeTable, DecodeFsm, TreeDegree,
};

pub const HEADER_LEN: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContainerHeader {
    pub tree_degree: u8,
    pub extra_bits: u8,
    pub initial_size: u32,
    pub payload_size: u32,
    pub table_entries_raw: u8,
}

impl ContainerHeader {
    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[0] = self.tree_degree;
        out[1] = self.extra_bits;
        out[2..6].copy_from_slice(&self.initial_size.to_le_bytes());
        out[6..10].copy_from_slice(&self.payload_size.to_le_bytes());
        out[10] = self.table_entries_raw;
        out
    }

    /// Reads and validates the fixed header at the start of `file`.
    pub fn parse(file: &[u8]) -> Result<Self> {
        if file.len() < HEADER_LEN {
            return Err(Error::TruncatedFile {
                needed: HEADER_LEN,
                available: file.len(),
            });
        }
        let le = |at: usize| u32::from_le_bytes(file[at..at + 4].try_into().unwrap());
        let header = Self {
            tree_degree: file[0],
            extra_bits: file[1],
            initial_size: le(2),
            payload_size: le(6),
            table_entries_raw: file[10],
        };
        TreeDegree::new(header.tree_degree)?;
        if header.extra_bits > 7 {
            return Err(Error::MalformedHeader(format!(
                "extra bits {} exceeds 7",
                header.extra_bits
            )));
        }
        if header.initial_size == 0
            && (header.payload_size != 0 || header.extra_bits != 0 || header.table_entries_raw != 0)
        {
            return Err(Error::MalformedHeader(
                "empty original with a non-empty payload or table".into(),
            ));
        }
        Ok(header)
    }

    pub fn degree(&self) -> TreeDegree {
        TreeDegree::new(self.tree_degree).expect("validated on parse")
    }

    pub fn entry_count(&self) -> usize {
        match (self.initial_size, self.table_entries_raw) {
            (0, _) => 0,
            (_, 0) => 256,
            (_, n) => usize::from(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Container {
    pub header: ContainerHeader,
    pub payload: Vec<u8>,
    /// `None` only for an empty original.
    pub table: Option<CodeTable>,
}

impl Container {
    pub fn parse(file: &[u8]) -> Result<Self> {
        let header = ContainerHeader::parse(file)?;
        let payload_end = HEADER_LEN + header.payload_size as usize;
        if file.len() < payload_end {
            return Err(Error::TruncatedFile {
                needed: payload_end,
                available: file.len(),
            });
        }
        let payload = file[HEADER_LEN..payload_end].to_vec();
        let rest = &file[payload_end..];
        let table = match header.entry_count() {
            0 => {
                if !rest.is_empty() {
                    return Err(Error::MalformedTable(format!(
                        "{} bytes after an empty container",
                        rest.len()
                    )));
                }
                None
            }
            count => {
                let (table, used) = parse_table_prefix(rest, count, header.degree())?;
                if used != rest.len() {
                    return Err(Error::MalformedTable(format!(
                        "{} trailing bytes after the table",
                        rest.len() - used
                    )));
                }
                Some(table)
            }
        };
        Ok(Self {
            header,
            payload,
            table,
        })
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len() + 3 * 256);
        out.extend_from_slice(&self.header.to_bytes());
        out.extend_from_slice(&self.payload);
        if let Some(table) = &self.table {
            out.extend_from_slice(&serialize_table(table)?);
        }
        Ok(out)
    }

    pub fn decode(&self, decoder: DecoderKind) -> Result<Vec<u8>> {
        let Some(table) = &self.table else {
            return Ok(Vec::new());
        };
        let count = self.header.initial_size as usize;
        let extra = self.header.extra_bits;
        match decoder {
            DecoderKind::Fsm => {
                decode_payload_fsm(&self.payload, extra, &DecodeFsm::from_table(table), count)
            }
            DecoderKind::Reference => decode_payload_reference(&self.payload, extra, table, count),
        }
    }
}

impl Container {
    /// Rejects a table that differs from the one built for `message` at the
    /// header's degree. Catches table and degree corruption that still
    /// yields a well-formed prefix code.
    pub fn verify_table(&self, message: &[u8]) -> Result<()> {
        let Some(table) = &self.table else {
            return Ok(());
        };
        let expected = assign_codes(&build_tree(&histogram(message), self.header.degree())?);
        if *table != expected {
            return Err(Error::MalformedTable(
                "table does not match the decoded content".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DecoderKind {
    Reference,
    #[default]
    Fsm,
}

/// Encodes `message` into a complete container.
pub fn encode_file(message: &[u8], degree: TreeDegree) -> Result<Vec<u8>> {
    build_container(message, degree)?.to_bytes()
}

pub fn build_container(message: &[u8], degree: TreeDegree) -> Result<Container> {
    let initial_size = u32::try_from(message.len()).map_err(|_| {
        Error::InvalidArgument(format!(
            "{} bytes exceeds the 4-byte size field",
            message.len()
        ))
    })?;
    if message.is_empty() {
        return Ok(Container {
            header: ContainerHeader {
                tree_degree: degree.get(),
                extra_bits: 0,
                initial_size: 0,
                payload_size: 0,
                table_entries_raw: 0,
            },
            payload: Vec::new(),
            table: None,
        });
    }
    let tree = build_tree(&histogram(message), degree)?;
    let table = assign_codes(&tree);
    let payload = encode_payload(message, &table)?;
    Ok(Container {
        header: ContainerHeader {
            tree_degree: degree.get(),
            extra_bits: payload.extra_bits,
            initial_size,
            payload_size: payload.bytes.len() as u32,
            // 256 wraps to 0
            table_entries_raw: table.len() as u8,
        },
        payload: payload.bytes,
        table: Some(table),
    })
}

pub fn decode_file(file: &[u8]) -> Result<Vec<u8>> {
    decode_file_with(file, DecoderKind::Fsm)
}

/// Parses, decodes and then checks that the table is exactly the one the
/// encoder derives from the decoded bytes.
pub fn decode_file_with(file: &[u8], decoder: DecoderKind) -> Result<Vec<u8>> {
    let container = Container::parse(file)?;
    let message = container.decode(decoder)?;
    container.verify_table(&message)?;
    Ok(message)
}

/// Writes each entry as `symbol, bit length, code bits` with the bits packed
/// MSB-first and zero-filled to a byte boundary.
pub fn serialize_table(table: &CodeTable) -> Result<Vec<u8>> {
    let b = table.chunk_bits();
    let mut out = Vec::with_capacity(table.len() * 3);
    for e in table.entries() {
        let bits = table.bit_len(e);
        if bits > 255 {
            return Err(Error::TableOverflow {
                symbol: e.symbol,
                bits,
            });
        }
        out.push(e.symbol);
        out.push(bits as u8);
        let mut w = BitWriter::with_capacity(bits.div_ceil(8));
        for &c in &e.chunks {
            w.write_bits(u32::from(c), b)?;
        }
        out.extend_from_slice(&w.finalize().0);
    }
    Ok(out)
}

pub fn parse_table(bytes: &[u8], entry_count: usize, degree: TreeDegree) -> Result<CodeTable> {
    let (table, used) = parse_table_prefix(bytes, entry_count, degree)?;
    if used != bytes.len() {
        return Err(Error::MalformedTable(format!(
            "{} trailing bytes after the table",
            bytes.len() - used
        )));
    }
    Ok(table)
}

/// Parses `entry_count` entries from the front of `bytes`, returning the
/// table and the number of bytes it occupied.
fn parse_table_prefix(
    bytes: &[u8],
    entry_count: usize,
    degree: TreeDegree,
) -> Result<(CodeTable, usize)> {
    let b = degree.chunk_bits() as usize;
    let short = |at: usize| Error::MalformedTable(format!("table ends early at byte {at}"));
    let mut at = 0usize;
    let mut entries = Vec::with_capacity(entry_count);
    for _ in 0..entry_count {
        let (&symbol, &bits) = bytes
            .get(at)
            .zip(bytes.get(at + 1))
            .ok_or_else(|| short(at))?;
        let bits = usize::from(bits);
        if bits == 0 || bits % b != 0 {
            return Err(Error::MalformedTable(format!(
                "symbol 0x{symbol:02x}: code length {bits} is not a positive multiple of {b}"
            )));
        }
        let len = bits.div_ceil(8);
        let packed = bytes.get(at + 2..at + 2 + len).ok_or_else(|| short(at))?;
        let mut r = BitReader::new(packed);
        let chunks = (0..bits / b)
            .map(|_| r.read_bits(b as u32).map(|c| c as u8))
            .collect::<Result<Vec<u8>>>()?;
        let fill = r.bits_remaining() as u32;
        if fill > 0 && r.read_bits(fill)? != 0 {
            return Err(Error::MalformedTable(format!(
                "symbol 0x{symbol:02x}: non-zero fill bits"
            )));
        }
        entries.push(CodeEntry { symbol, chunks });
        at += 2 + len;
    }
    Ok((CodeTable::new(degree, entries)?, at))
}
