//! Test oracles written independently of the library's code paths.
#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Textbook binary Huffman: merge the two lightest groups, every symbol in a
/// merged group gets one level deeper. Returns sorted code lengths.
pub fn binary_huffman_lengths(weights: &[u64]) -> Vec<usize> {
    let present: Vec<u64> = weights.iter().copied().filter(|&w| w > 0).collect();
    if present.len() == 1 {
        return vec![1];
    }
    let mut depth = vec![0usize; present.len()];
    let mut groups: Vec<Vec<usize>> = (0..present.len()).map(|i| vec![i]).collect();
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = present
        .iter()
        .enumerate()
        .map(|(i, &w)| Reverse((w, i)))
        .collect();
    while heap.len() > 1 {
        let Reverse((wa, a)) = heap.pop().unwrap();
        let Reverse((wb, b)) = heap.pop().unwrap();
        let mut merged = std::mem::take(&mut groups[a]);
        merged.append(&mut groups[b]);
        for &s in &merged {
            depth[s] += 1;
        }
        groups.push(merged);
        heap.push(Reverse((wa + wb, groups.len() - 1)));
    }
    depth.sort_unstable();
    depth
}

/// Smallest p >= 0 with (s + p) ≡ 1 (mod n - 1), by linear search.
pub fn placeholder_oracle(n: usize, s: usize) -> usize {
    (0..).find(|p| (s + p) % (n - 1) == 1 % (n - 1)).unwrap()
}

/// A message of `len` bytes drawn from one of several shapes: uniform over
/// all 256 values, a small alphabet, a geometric-like skew, or a run.
pub fn random_message(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    match rng.gen_range(0..4) {
        0 => (0..len).map(|_| rng.gen()).collect(),
        1 => {
            let k = rng.gen_range(1..=12u8);
            let base: u8 = rng.gen();
            (0..len)
                .map(|_| base.wrapping_add(rng.gen_range(0..k)))
                .collect()
        }
        2 => (0..len)
            .map(|_| {
                let mut v = 0u8;
                while v < 255 && rng.gen_bool(0.6) {
                    v += 1;
                }
                v
            })
            .collect(),
        _ => vec![rng.gen(); len],
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Message whose histogram is exactly `counts`, symbols interleaved.
pub fn message_from_counts(counts: &[u64; 256]) -> Vec<u8> {
    let mut left = *counts;
    let mut out = Vec::with_capacity(counts.iter().sum::<u64>() as usize);
    loop {
        let before = out.len();
        for (s, c) in left.iter_mut().enumerate() {
            if *c > 0 {
                *c -= 1;
                out.push(s as u8);
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

pub fn random_counts(rng: &mut ChaCha8Rng) -> [u64; 256] {
    let mut counts = [0u64; 256];
    let distinct = rng.gen_range(1..=256usize);
    let skewed = rng.gen_bool(0.5);
    for _ in 0..distinct {
        let s = rng.gen_range(0..256usize);
        counts[s] = if skewed {
            1u64 << rng.gen_range(0..12)
        } else {
            rng.gen_range(1..200)
        };
    }
    counts
}
