use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("out of data: requested {requested} bits with {available} remaining")]
    OutOfData { requested: u32, available: u64 },

    #[error("cannot build a code over an empty alphabet")]
    EmptyInput,

    #[error("symbol 0x{0:02x} has no entry in the code table")]
    UnknownSymbol(u8),

    #[error("corrupt stream: invalid chunk at bit {bit}")]
    CorruptStream { bit: u64 },

    #[error("truncated stream: decoded {decoded} of {expected} symbols")]
    TruncatedStream { decoded: usize, expected: usize },

    #[error("inconsistent padding: consumed {consumed} bits, expected {expected}")]
    InconsistentPadding { consumed: u64, expected: u64 },

    #[error("the {extra_bits} padding bits of the last payload byte are not zero")]
    DirtyPadding { extra_bits: u8 },

    #[error("code for symbol 0x{symbol:02x} is {bits} bits long (limit 255)")]
    TableOverflow { symbol: u8, bits: usize },

    #[error("truncated file: need {needed} bytes, have {available}")]
    TruncatedFile { needed: usize, available: usize },

    #[error("unsupported tree degree {0} (expected 2..=16)")]
    UnsupportedDegree(u8),

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("decoded output differs from the input for degree {0}")]
    RoundTripMismatch(u8),
}
