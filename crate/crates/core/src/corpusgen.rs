//! Seeded generator for random English-like word text.
//!
//! Words are 2 to 10 letters long, each letter drawn independently from a
//! letter-frequency table, separated by single spaces. The generator is
//! ChaCha8 (`rand_chacha`) seeded with `seed_from_u64`, so a given
//! `(seed, size, table)` always yields the same bytes.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Relative frequency (percent) of 'a'..='z' in English text.
pub const ENGLISH_LETTER_FREQUENCIES: [f64; 26] = [
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025, 2.406,
    6.749, 7.507, 1.929, 0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
];

pub const MIN_WORD_LEN: usize = 2;
pub const MAX_WORD_LEN: usize = 10;

/// 1388 KiB, the scale of the reference benchmark text.
pub const BENCHMARK_SIZE: usize = 1388 * 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub size_bytes: usize,
    pub frequency_table: [f64; 26],
}

impl CorpusSpec {
    pub fn english(seed: u64, size_bytes: usize) -> Self {
        Self {
            seed,
            size_bytes,
            frequency_table: ENGLISH_LETTER_FREQUENCIES,
        }
    }
}

pub fn generate(spec: &CorpusSpec) -> Result<Vec<u8>> {
    if spec.size_bytes == 0 {
        return Err(Error::InvalidArgument(
            "corpus size must be positive".into(),
        ));
    }
    let letters = WeightedIndex::new(spec.frequency_table)
        .map_err(|e| Error::InvalidArgument(format!("frequency table: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.size_bytes + MAX_WORD_LEN + 1);
    while out.len() < spec.size_bytes {
        if !out.is_empty() {
            out.push(b' ');
        }
        let len = rng.gen_range(MIN_WORD_LEN..=MAX_WORD_LEN);
        out.extend((0..len).map(|_| b'a' + letters.sample(&mut rng) as u8));
    }
    out.truncate(spec.size_bytes);
    Ok(out)
}
