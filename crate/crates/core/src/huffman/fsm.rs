//! Table-driven decoder whose inner loop has no data-dependent branches.
//!
//! Each state is an internal node of the decode trie. A transition packs
//! `next_state | symbol << 16 | emit << 24` into one `u32`. Leaf transitions
//! return to state 0 with `emit = 1`; the symbol byte is written
//! unconditionally and the output cursor advances by `emit`. Empty and
//! out-of-range children lead to an absorbing sentinel state, which is
//! checked once after the loop.

use super::{decode::code_bits_available, CodeTable, DecodeTree, Slot};
use crate::bitio::BitReader;
use crate::error::{Error, Result};

const STATE_MASK: u32 = 0xFFFF;
const EMIT_SHIFT: u32 = 24;
const SYMBOL_SHIFT: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transition {
    pub next_state: u16,
    pub symbol: u8,
    pub emit: bool,
}

#[derive(Debug, Clone)]
pub struct DecodeFsm {
    chunk_bits: u32,
    states: usize,
    table: Vec<u32>,
}

impl DecodeFsm {
    /// One state per internal node of the rebuilt decode trie, plus the sentinel.
    pub fn from_table(table: &CodeTable) -> Self {
        let tree = DecodeTree::from_table(table);
        let chunk_bits = table.chunk_bits();
        let stride = 1usize << chunk_bits;
        let states = tree.internal_count();
        let sentinel = states as u32;
        let mut cells = vec![sentinel; (states + 1) * stride];
        for state in 0..states {
            for chunk in 0..stride {
                cells[state * stride + chunk] = match tree.child(state, chunk) {
                    Slot::Leaf(symbol) => (1 << EMIT_SHIFT) | (u32::from(symbol) << SYMBOL_SHIFT),
                    Slot::Internal(next) => next,
                    Slot::Empty => sentinel,
                };
            }
        }
        Self {
            chunk_bits,
            states,
            table: cells,
        }
    }

    pub fn chunk_bits(&self) -> u32 {
        self.chunk_bits
    }

    /// Number of real states, not counting the sentinel.
    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn sentinel(&self) -> u16 {
        self.states as u16
    }

    pub fn transition(&self, state: u16, chunk: u8) -> Transition {
        let cell = self.table[(usize::from(state) << self.chunk_bits) | usize::from(chunk)];
        Transition {
            next_state: (cell & STATE_MASK) as u16,
            symbol: (cell >> SYMBOL_SHIFT) as u8,
            emit: cell >> EMIT_SHIFT != 0,
        }
    }
}

/// Same contract as [`super::decode_payload_reference`], driven by the FSM.
pub fn decode_payload_fsm(
    payload: &[u8],
    extra_bits: u8,
    fsm: &DecodeFsm,
    symbol_count: usize,
) -> Result<Vec<u8>> {
    let available = code_bits_available(payload, extra_bits)?;
    let b = fsm.chunk_bits;
    let chunk_count = (available / u64::from(b)) as usize;
    let mask = (1u32 << b) - 1;
    let window_shift = 16 - b;

    // two trailing zero bytes keep the 16-bit window in bounds
    let mut padded = Vec::with_capacity(payload.len() + 2);
    padded.extend_from_slice(payload);
    padded.extend_from_slice(&[0, 0]);

    let mut out = vec![0u8; chunk_count + 1];
    let table = fsm.table.as_slice();
    let mut state = 0u32;
    let mut pos = 0usize;
    let mut bit = 0usize;

    // hot-loop:begin
    for _ in 0..chunk_count {
        let byte = bit >> 3;
        let window = u32::from(u16::from_be_bytes([padded[byte], padded[byte + 1]]));
        let chunk = (window >> (window_shift - (bit & 7) as u32)) & mask;
        let cell = table[((state << b) | chunk) as usize];
        out[pos] = (cell >> SYMBOL_SHIFT) as u8;
        pos += (cell >> EMIT_SHIFT) as usize;
        state = cell & STATE_MASK;
        bit += b as usize;
    }
    // hot-loop:end

    let clean = state == 0 && pos == symbol_count && available % u64::from(b) == 0;
    if !clean {
        return Err(diagnose(payload, available, fsm, symbol_count));
    }
    out.truncate(symbol_count);
    Ok(out)
}

/// Replays a failed decode with explicit checks to name the first fault,
/// mirroring the reference decoder's error order.
#[cold]
fn diagnose(payload: &[u8], available: u64, fsm: &DecodeFsm, symbol_count: usize) -> Error {
    let b = fsm.chunk_bits;
    let mut reader = BitReader::new(payload);
    let mut decoded = 0usize;
    while decoded < symbol_count {
        let mut state = 0u16;
        loop {
            let at = reader.bits_consumed();
            if at + u64::from(b) > available {
                return Error::TruncatedStream {
                    decoded,
                    expected: symbol_count,
                };
            }
            let chunk = match reader.read_bits(b) {
                Ok(c) => c as u8,
                Err(e) => return e,
            };
            let t = fsm.transition(state, chunk);
            if t.next_state == fsm.sentinel() {
                return Error::CorruptStream { bit: at };
            }
            if t.emit {
                decoded += 1;
                break;
            }
            state = t.next_state;
        }
    }
    Error::InconsistentPadding {
        consumed: reader.bits_consumed(),
        expected: available,
    }
}
