mod support;

use nhuff::container::{
    build_container, parse_table, serialize_table, Container, DecoderKind, HEADER_LEN,
};
use nhuff::corpusgen::{generate, CorpusSpec};
use nhuff::huffman::{
    assign_codes, build_tree, chunk_bits, decode_payload_fsm, decode_payload_reference,
    encode_payload, histogram, placeholder_count, weighted_path_length, CodeTable, DecodeFsm,
    SymbolHistogram,
};
use nhuff::{decode_file, decode_file_with, encode_file, Error, TreeDegree};
use proptest::prelude::*;
use rand::Rng;

fn code_lengths(table: &CodeTable) -> Vec<usize> {
    let mut v: Vec<usize> = table.entries().iter().map(|e| e.depth()).collect();
    v.sort_unstable();
    v
}

fn is_prefix_free(table: &CodeTable) -> bool {
    let e = table.entries();
    e.iter().enumerate().all(|(i, a)| {
        e.iter()
            .enumerate()
            .all(|(j, b)| i == j || !b.chunks.starts_with(&a.chunks))
    })
}

#[test]
fn placeholder_formula_matches_search() {
    for n in TreeDegree::all() {
        for s in 2..=256 {
            assert_eq!(
                placeholder_count(n, s),
                support::placeholder_oracle(n.arity(), s)
            );
        }
    }
}

#[test]
fn binary_lengths_match_textbook_huffman() {
    let mut rng = support::rng(5);
    let two = TreeDegree::new(2).unwrap();
    for _ in 0..200 {
        let counts = support::random_counts(&mut rng);
        let h = SymbolHistogram::from_counts(counts);
        let table = assign_codes(&build_tree(&h, two).unwrap());
        assert_eq!(
            code_lengths(&table),
            support::binary_huffman_lengths(&counts)
        );
    }
}

#[test]
fn wpl_is_sum_of_code_depths_over_the_message() {
    let mut rng = support::rng(11);
    for _ in 0..100 {
        let len = rng.gen_range(1..3000);
        let msg = support::random_message(&mut rng, len);
        for n in TreeDegree::all() {
            let tree = build_tree(&histogram(&msg), n).unwrap();
            let table = assign_codes(&tree);
            let direct: u64 = msg
                .iter()
                .map(|&s| table.get(s).unwrap().depth() as u64)
                .sum();
            assert_eq!(weighted_path_length(&tree), direct);
            let p = encode_payload(&msg, &table).unwrap();
            assert_eq!(p.bit_len(), u64::from(chunk_bits(n)) * direct);
        }
    }
}

#[test]
fn binary_wpl_equals_payload_bits() {
    let two = TreeDegree::new(2).unwrap();
    let mut rng = support::rng(12);
    for _ in 0..50 {
        let len = rng.gen_range(1..5000);
        let msg = support::random_message(&mut rng, len);
        let tree = build_tree(&histogram(&msg), two).unwrap();
        let p = encode_payload(&msg, &assign_codes(&tree)).unwrap();
        assert_eq!(p.bit_len(), weighted_path_length(&tree));
    }
}

#[test]
fn codes_walk_back_to_their_symbols() {
    let mut rng = support::rng(13);
    for _ in 0..100 {
        let counts = support::random_counts(&mut rng);
        for n in TreeDegree::all() {
            let table =
                assign_codes(&build_tree(&SymbolHistogram::from_counts(counts), n).unwrap());
            assert!(is_prefix_free(&table));
            let fsm = DecodeFsm::from_table(&table);
            for e in table.entries() {
                let p = encode_payload(&[e.symbol], &table).unwrap();
                assert_eq!(
                    decode_payload_reference(&p.bytes, p.extra_bits, &table, 1).unwrap(),
                    vec![e.symbol]
                );
                assert_eq!(
                    decode_payload_fsm(&p.bytes, p.extra_bits, &fsm, 1).unwrap(),
                    vec![e.symbol]
                );
            }
        }
    }
}

#[test]
fn degenerate_inputs_round_trip() {
    let all: Vec<u8> = (0..=255u8).collect();
    let inputs: [&[u8]; 5] = [b"", b"a", &[7u8; 1000], &all, &[0, 255, 0, 255, 0]];
    for msg in inputs {
        for n in TreeDegree::all() {
            let file = encode_file(msg, n).unwrap();
            for kind in [DecoderKind::Reference, DecoderKind::Fsm] {
                assert_eq!(decode_file_with(&file, kind).unwrap(), msg, "n={n}");
            }
        }
    }
}

#[test]
fn encoding_is_deterministic() {
    let corpus = generate(&CorpusSpec::english(3, 30_000)).unwrap();
    for n in TreeDegree::all() {
        assert_eq!(
            encode_file(&corpus, n).unwrap(),
            encode_file(&corpus, n).unwrap()
        );
    }
}

#[test]
fn payload_bit_flips_change_output_or_fail() {
    let mut rng = support::rng(21);
    for _ in 0..10 {
        let len = rng.gen_range(1..400);
        let msg = support::random_message(&mut rng, len);
        for n in TreeDegree::all() {
            let c = build_container(&msg, n).unwrap();
            let file = c.to_bytes().unwrap();
            for bit in 0..c.payload.len() * 8 {
                let mut bad = file.clone();
                bad[HEADER_LEN + bit / 8] ^= 0x80 >> (bit % 8);
                let fsm = decode_file_with(&bad, DecoderKind::Fsm);
                let reference = decode_file_with(&bad, DecoderKind::Reference);
                assert_eq!(fsm, reference);
                match fsm {
                    Ok(out) => assert_ne!(out, msg, "n={n} bit={bit}"),
                    Err(e) => assert!(
                        matches!(
                            e,
                            Error::CorruptStream { .. }
                                | Error::TruncatedStream { .. }
                                | Error::InconsistentPadding { .. }
                                | Error::DirtyPadding { .. }
                                | Error::MalformedTable(_)
                        ),
                        "{e:?}"
                    ),
                }
            }
        }
    }
}

#[test]
fn truncation_always_errors() {
    let corpus = generate(&CorpusSpec::english(9, 3000)).unwrap();
    for n in TreeDegree::all() {
        let file = encode_file(&corpus, n).unwrap();
        for cut in 0..file.len() {
            let err = decode_file(&file[..cut]).unwrap_err();
            assert!(
                matches!(err, Error::TruncatedFile { .. } | Error::MalformedTable(_)),
                "cut={cut}: {err:?}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn round_trip(msg in proptest::collection::vec(any::<u8>(), 0..2000), n in 2u8..=16) {
        let degree = TreeDegree::new(n).unwrap();
        let file = encode_file(&msg, degree).unwrap();
        prop_assert_eq!(decode_file_with(&file, DecoderKind::Fsm).unwrap(), msg.clone());
        prop_assert_eq!(decode_file_with(&file, DecoderKind::Reference).unwrap(), msg.clone());
        let c = Container::parse(&file).unwrap();
        let table_len = c.table.as_ref().map_or(0, |t| serialize_table(t).unwrap().len());
        prop_assert_eq!(file.len(), HEADER_LEN + c.header.payload_size as usize + table_len);
    }

    #[test]
    fn table_round_trip(msg in proptest::collection::vec(any::<u8>(), 1..500), n in 2u8..=16) {
        let degree = TreeDegree::new(n).unwrap();
        let table = assign_codes(&build_tree(&histogram(&msg), degree).unwrap());
        let bytes = serialize_table(&table).unwrap();
        prop_assert_eq!(parse_table(&bytes, table.len(), degree).unwrap(), table);
    }

    #[test]
    fn arbitrary_bytes_never_panic(file in proptest::collection::vec(any::<u8>(), 0..200)) {
        let _ = decode_file_with(&file, DecoderKind::Fsm);
        let _ = decode_file_with(&file, DecoderKind::Reference);
    }

    #[test]
    fn tree_shape(counts in proptest::collection::vec(0u64..1000, 256), n in 2u8..=16) {
        let counts: [u64; 256] = counts.try_into().unwrap();
        let h = SymbolHistogram::from_counts(counts);
        prop_assume!(h.distinct_count() > 0);
        let tree = build_tree(&h, TreeDegree::new(n).unwrap()).unwrap();
        let n = usize::from(n);
        prop_assert_eq!(tree.leaf_count() % (n - 1), 1 % (n - 1));
        prop_assert_eq!(tree.node(tree.root()).weight(), h.total());
    }
}
