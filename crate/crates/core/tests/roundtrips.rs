//! Exhaustive round-trip sweeps at small sizes plus randomized properties
//! of the word/partition/permutation dictionary and the serialization.

mod common;

use proptest::prelude::*;
use trilace::enumerate::{count_arrays, enumerate_arrays_by_rows};
use trilace::maps::verify_roundtrips;
use trilace::objects::dual_string;
use trilace::schubert::{partition_to_word, permutation_to_partition, verify_piece_pattern_agreement};
use trilace::{BinaryString, InterlacingArray, PatternFilter, Permutation};

#[test]
fn conversion_maps_invert_each_other() {
    let report = verify_roundtrips(3, 2);
    assert!(report.ok(), "{:?}", report.failures);
    assert!(report.checked > 0);
}

#[test]
fn piece_and_pattern_filters_select_the_same_arrays() {
    let report = verify_piece_pattern_agreement(3);
    assert!(report.ok(), "{:?}", report.failures);
    assert!(report.checked > 0);
}

#[test]
fn rank_one_and_two_arrays_are_rigid() {
    // Rank 1 has a single all-1 array at every height; in rank 2 the second
    // triangle is always the row-wise reversal with 1 and 2 swapped.
    for n in 0..=5 {
        let ones = enumerate_arrays_by_rows(&[1], n, None, PatternFilter::None).unwrap();
        assert_eq!(ones.len(), 1);
        assert!(ones[0].flat_rows().iter().all(|r| r.iter().all(|&x| x == 1)));
    }
    for n in 0..=4 {
        let twos = enumerate_arrays_by_rows(&[1, 2], n, None, PatternFilter::None).unwrap();
        assert!(!twos.is_empty());
        for t in &twos {
            for k in 1..=n {
                assert_eq!(
                    t.triangle_row(2, k),
                    dual_string(t.triangle_row(1, k), (1, 2)).unwrap(),
                    "height {n}, row {k}"
                );
            }
        }
        let free = count_arrays(&[1, 2], n, None, PatternFilter::None).unwrap();
        assert_eq!(free, twos.len().into());
    }
}

fn rank3_arrays_up_to(n: usize) -> Vec<InterlacingArray> {
    (0..=n)
        .flat_map(|h| {
            enumerate_arrays_by_rows(
                &InterlacingArray::standard_alphabet(3),
                h,
                None,
                PatternFilter::None,
            )
            .unwrap()
        })
        .collect()
}

proptest! {
    #[test]
    fn binary_reversal_is_an_involution(bits in prop::collection::vec(0u8..2, 0..12)) {
        let s = BinaryString::new(bits).unwrap();
        prop_assert_eq!(s.reversed().reversed(), s.clone());
        prop_assert_eq!(
            s.reversed().inversions() + s.inversions(),
            s.zeros() * s.ones()
        );
    }

    #[test]
    fn two_letter_duality_is_an_involution(word in prop::collection::vec(0usize..2, 0..12)) {
        let word: Vec<u8> = word.iter().map(|&i| [3u8, 7][i]).collect();
        let dual = dual_string(&word, (3, 7)).unwrap();
        prop_assert_eq!(dual_string(&dual, (3, 7)).unwrap(), word);
    }

    #[test]
    fn box_partitions_round_trip_through_words(
        n in 1usize..9,
        d_seed in 0usize..8,
        part_seed in prop::collection::vec(0usize..8, 8),
    ) {
        let d = 1 + d_seed % n;
        let mut part: Vec<usize> = part_seed[..d].iter().map(|&p| p % (n - d + 1)).collect();
        part.sort_unstable_by(|a, b| b.cmp(a));
        while part.last() == Some(&0) {
            part.pop();
        }
        let word = partition_to_word(&part, n, d, (1, 2)).unwrap();
        prop_assert_eq!(word.iter().filter(|&&l| l == 1).count(), d);
        let w = Permutation::from_string(&word, &[1, 2]).unwrap();
        prop_assert_eq!(permutation_to_partition(&w, d), part);
    }

    #[test]
    fn permutation_duality_is_an_involution(
        keys in prop::collection::vec(0u32..1000, 1..7),
        cut_seed in 0usize..64,
    ) {
        let n = keys.len();
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&i| (keys[i - 1], i));
        let w = Permutation::new(order).unwrap();
        let mut d = vec![0];
        for i in 1..n {
            if (cut_seed >> i) & 1 == 1 {
                d.push(i);
            }
        }
        d.push(n);
        let dual = w.dual(&d).unwrap();
        prop_assert_eq!(dual.dual(&d).unwrap(), w);
    }

    #[test]
    fn array_serialization_round_trips(index in any::<prop::sample::Index>()) {
        let arrays = rank3_arrays_up_to(3);
        let t = &arrays[index.index(arrays.len())];
        let text = serde_json::to_string(t).unwrap();
        let back: InterlacingArray = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, t);
    }
}
