//! MSB-first bit packing over byte buffers.
//!
//! The first bit written lands in the most significant position of byte 0.
//! The trailing partial byte is always zero-filled, so [`BitWriter::finalize`]
//! only has to report how many of its low bits are padding.

use crate::error::{Error, Result};

pub const MAX_WIDTH: u32 = 32;

#[derive(Debug, Clone, Default)]
pub struct BitWriter {
    buffer: Vec<u8>,
    bit_cursor: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bytes: usize) -> Self {
        Self {
            buffer: Vec::with_capacity(bytes),
            bit_cursor: 0,
        }
    }

    /// Number of bits written so far.
    pub fn bit_len(&self) -> u64 {
        self.bit_cursor
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.buffer
    }

    /// Appends the `width` low-order bits of `value`, most significant first.
    pub fn write_bits(&mut self, value: u32, width: u32) -> Result<()> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::InvalidArgument(format!(
                "bit width {width} outside 1..={MAX_WIDTH}"
            )));
        }
        if u64::from(value) >> width != 0 {
            return Err(Error::InvalidArgument(format!(
                "value {value} does not fit in {width} bits"
            )));
        }
        self.push_unchecked(value, width);
        Ok(())
    }

    #[inline]
    pub(crate) fn push_unchecked(&mut self, value: u32, width: u32) {
        let mut remaining = width;
        while remaining > 0 {
            let used = (self.bit_cursor % 8) as u32;
            if used == 0 {
                self.buffer.push(0);
            }
            let free = 8 - used;
            let take = free.min(remaining);
            let bits = (value >> (remaining - take)) & ((1u32 << take) - 1);
            // buffer is non-empty: either it already held a partial byte or we just pushed one
            let last = self.buffer.last_mut().expect("partial byte present");
            *last |= (bits as u8) << (free - take);
            remaining -= take;
            self.bit_cursor += u64::from(take);
        }
    }

    /// Returns the packed bytes and the number of zero pad bits in the last byte.
    pub fn finalize(self) -> (Vec<u8>, u8) {
        let pad = ((8 - self.bit_cursor % 8) % 8) as u8;
        (self.buffer, pad)
    }
}

#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    buffer: &'a [u8],
    bit_cursor: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(buffer: &'a [u8]) -> Self {
        Self {
            buffer,
            bit_cursor: 0,
        }
    }

    pub fn bits_consumed(&self) -> u64 {
        self.bit_cursor
    }

    pub fn bits_remaining(&self) -> u64 {
        self.buffer.len() as u64 * 8 - self.bit_cursor
    }

    /// Reads the next `width` bits as an unsigned MSB-first integer.
    pub fn read_bits(&mut self, width: u32) -> Result<u32> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::InvalidArgument(format!(
                "bit width {width} outside 1..={MAX_WIDTH}"
            )));
        }
        let available = self.bits_remaining();
        if u64::from(width) > available {
            return Err(Error::OutOfData {
                requested: width,
                available,
            });
        }
        let mut value: u64 = 0;
        let mut remaining = width;
        while remaining > 0 {
            let byte = self.buffer[(self.bit_cursor / 8) as usize];
            let used = (self.bit_cursor % 8) as u32;
            let free = 8 - used;
            let take = free.min(remaining);
            let bits = (u32::from(byte) >> (free - take)) & ((1u32 << take) - 1);
            value = (value << take) | u64::from(bits);
            remaining -= take;
            self.bit_cursor += u64::from(take);
        }
        Ok(value as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: concatenate bit strings, then chop into bytes.
    fn pack_bit_string(pieces: &[(u32, u32)]) -> Vec<u8> {
        let mut bits: Vec<bool> = Vec::new();
        for &(value, width) in pieces {
            for i in (0..width).rev() {
                bits.push((value >> i) & 1 == 1);
            }
        }
        bits.chunks(8)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)))
            })
            .collect()
    }

    #[test]
    fn mississippi_first_byte() {
        let mut w = BitWriter::new();
        w.write_bits(0b0100, 4).unwrap();
        w.write_bits(0b0000, 4).unwrap();
        assert_eq!(w.as_bytes(), &[0x40]);
    }

    #[test]
    fn single_zero_bit() {
        let mut w = BitWriter::new();
        w.write_bits(0, 1).unwrap();
        assert_eq!(w.bit_len(), 1);
        assert_eq!(w.as_bytes(), &[0x00]);
    }

    #[test]
    fn seventeen_nibbles_of_ones() {
        let mut w = BitWriter::new();
        let pieces = vec![(0b1111u32, 4u32); 17];
        for &(v, n) in &pieces {
            w.write_bits(v, n).unwrap();
        }
        let (bytes, pad) = w.finalize();
        assert_eq!(bytes.len(), 9);
        assert_eq!(*bytes.last().unwrap(), 0xF0);
        assert_eq!(pad, 4);
        assert_eq!(bytes, pack_bit_string(&pieces));
    }

    #[test]
    fn finalize_padding() {
        let mut w = BitWriter::new();
        for _ in 0..17 {
            w.write_bits(0, 4).unwrap();
        }
        assert_eq!(w.bit_len(), 68);
        let (bytes, pad) = w.finalize();
        assert_eq!((bytes.len(), pad), (9, 4));

        let (bytes, pad) = BitWriter::new().finalize();
        assert!(bytes.is_empty());
        assert_eq!(pad, 0);

        let mut w = BitWriter::new();
        w.write_bits(0xABCD, 16).unwrap();
        assert_eq!(w.finalize(), (vec![0xAB, 0xCD], 0));
    }

    #[test]
    fn write_rejects_bad_arguments() {
        let mut w = BitWriter::new();
        assert!(matches!(w.write_bits(0, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            w.write_bits(0, 33),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            w.write_bits(16, 4),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(w.bit_len(), 0);
        w.write_bits(u32::MAX, 32).unwrap();
        assert_eq!(w.as_bytes(), &[0xFF; 4]);
    }

    #[test]
    fn read_examples() {
        let mut r = BitReader::new(&[0x40]);
        assert_eq!(r.read_bits(4).unwrap(), 0b0100);
        assert_eq!(r.read_bits(4).unwrap(), 0b0000);
        assert!(matches!(r.read_bits(1), Err(Error::OutOfData { .. })));

        let mut r = BitReader::new(&[0xFF]);
        assert_eq!(r.read_bits(8).unwrap(), 255);
    }

    #[test]
    fn read_past_end_does_not_advance() {
        let mut r = BitReader::new(&[0xAA]);
        r.read_bits(5).unwrap();
        assert_eq!(
            r.read_bits(4),
            Err(Error::OutOfData {
                requested: 4,
                available: 3
            })
        );
        assert_eq!(r.bits_consumed(), 5);
        assert_eq!(r.read_bits(3).unwrap(), 0b010);
    }

    #[test]
    fn randomized_round_trip_against_bit_string_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xB1710);
        for _ in 0..1000 {
            let len = rng.gen_range(0..40);
            let pieces: Vec<(u32, u32)> = (0..len)
                .map(|_| {
                    let width = rng.gen_range(1..=32u32);
                    let value = (rng.gen::<u64>() & ((1u64 << width) - 1)) as u32;
                    (value, width)
                })
                .collect();
            let mut w = BitWriter::new();
            for &(v, n) in &pieces {
                w.write_bits(v, n).unwrap();
            }
            let total: u64 = pieces.iter().map(|p| u64::from(p.1)).sum();
            let (bytes, pad) = w.finalize();
            assert_eq!(bytes.len() as u64, total.div_ceil(8));
            assert_eq!(u64::from(pad), (8 - total % 8) % 8);
            assert_eq!(bytes, pack_bit_string(&pieces));

            let mut r = BitReader::new(&bytes);
            for &(v, n) in &pieces {
                assert_eq!(r.read_bits(n).unwrap(), v);
            }
            assert_eq!(r.bits_remaining(), u64::from(pad));
        }
    }

    proptest::proptest! {
        #[test]
        fn padding_bits_are_zero(pieces in proptest::collection::vec((proptest::num::u32::ANY, 1u32..=32), 0..20)) {
            let mut w = BitWriter::new();
            for &(v, n) in &pieces {
                let masked = (u64::from(v) & ((1u64 << n) - 1)) as u32;
                w.write_bits(masked, n).unwrap();
            }
            let (bytes, pad) = w.finalize();
            proptest::prop_assert!(pad <= 7);
            if pad > 0 {
                let last = *bytes.last().unwrap();
                proptest::prop_assert_eq!(last & ((1u8 << pad) - 1), 0);
            }
        }
    }
}
