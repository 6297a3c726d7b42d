use std::fmt;

use crate::container::{Container, ContainerHeader, DecoderKind};
use crate::error::Result;

/// Summary of a container: header fields, code table, WPL and ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct Inspection {
    pub header: ContainerHeader,
    pub file_size: usize,
    pub chunk_bits: u32,
    /// `(symbol, code as a '0'/'1' string)` in table order.
    pub codes: Vec<(u8, String)>,
    pub wpl: u64,
    pub compression_ratio: f64,
}

/// Parses and fully decodes `file`; the WPL is summed over the decoded symbols.
pub fn inspect(file: &[u8]) -> Result<Inspection> {
    let container = Container::parse(file)?;
    let decoded = container.decode(DecoderKind::Reference)?;
    let chunk_bits = container.header.degree().chunk_bits();
    let (codes, wpl) = match &container.table {
        None => (Vec::new(), 0),
        Some(table) => {
            let codes = table
                .entries()
                .iter()
                .map(|e| {
                    let bits = e.bits(chunk_bits);
                    (
                        e.symbol,
                        bits.iter().map(|&b| if b { '1' } else { '0' }).collect(),
                    )
                })
                .collect();
            let wpl = decoded
                .iter()
                .map(|&s| table.get(s).map_or(0, |e| e.depth() as u64))
                .sum();
            (codes, wpl)
        }
    };
    Ok(Inspection {
        header: container.header,
        file_size: file.len(),
        chunk_bits,
        codes,
        wpl,
        compression_ratio: container.header.initial_size as f64 / file.len() as f64,
    })
}

impl fmt::Display for Inspection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = &self.header;
        writeln!(f, "degree: {}", h.tree_degree)?;
        writeln!(f, "extra bits: {}", h.extra_bits)?;
        writeln!(f, "initial size: {}", h.initial_size)?;
        writeln!(f, "payload size: {}", h.payload_size)?;
        writeln!(f, "table entries: {}", self.codes.len())?;
        writeln!(f, "chunk bits: {}", self.chunk_bits)?;
        writeln!(f, "file size: {}", self.file_size)?;
        writeln!(f, "weighted path length: {}", self.wpl)?;
        writeln!(f, "compression ratio: {:.3}", self.compression_ratio)?;
        writeln!(f, "table:")?;
        for (symbol, code) in &self.codes {
            let shown = if symbol.is_ascii_graphic() || *symbol == b' ' {
                format!("{:?}", *symbol as char)
            } else {
                "   ".to_string()
            };
            writeln!(f, "  0x{symbol:02x} {shown} {code}")?;
        }
        Ok(())
    }
}
