//! Structural invariants of the expansion engine: filter domination, the
//! sign law, the grading of the alternating basis, and telescoping of
//! multi-factor products through two-factor ones.

mod common;

use num_bigint::BigInt;
use trilace::enumerate::count_arrays;
use trilace::maps::toprow;
use trilace::objects::coset_top_length;
use trilace::schubert::{
    binary_words, expand_product, partition_to_word, partitions_in_box, structure_constant,
    FactorInput, TargetKey,
};
use trilace::{BasisKind, BinaryString, Permutation, ProductQuery};

fn binary_query(basis: BasisKind, factors: &[&BinaryString]) -> ProductQuery {
    ProductQuery {
        basis,
        factors: FactorInput::Binary(factors.iter().map(|&f| f.clone()).collect()),
        d: None,
    }
}

#[test]
fn unfiltered_counts_dominate_filtered_ones() {
    // The four bases count nested array families over any common boundary,
    // so their counts must be ordered accordingly.
    let alphabet = trilace::InterlacingArray::standard_alphabet(3);
    for (n, d) in [(3, 1), (4, 2)] {
        let words = binary_words(n, d);
        for a in &words {
            for b in &words {
                for last in &words {
                    let top = vec![toprow(a, 1, 3), toprow(b, 2, 3), toprow(last, 3, 3)];
                    let count = |basis: BasisKind| {
                        count_arrays(&alphabet, n, Some(&top), basis.pattern_filter()).unwrap()
                    };
                    let ssm = count(BasisKind::SegreSchwartzMacPherson);
                    let k = count(BasisKind::KTheory);
                    let dual = count(BasisKind::DualKTheory);
                    let coh = count(BasisKind::Cohomology);
                    assert!(ssm >= k && ssm >= dual, "{a} * {b} via {last}");
                    assert!(coh <= k && coh <= dual, "{a} * {b} via {last}");
                }
            }
        }
    }
}

#[test]
fn coefficients_obey_the_sign_law() {
    // A nonzero coefficient times (-1)^(d(n-d) - total inversions over all
    // sides) is strictly positive; the target contributes the inversions of
    // its reversal, which is the word actually placed on the last side.
    for (n, d) in [(3, 1), (4, 2)] {
        let words = binary_words(n, d);
        for basis in [
            BasisKind::KTheory,
            BasisKind::DualKTheory,
            BasisKind::SegreSchwartzMacPherson,
        ] {
            for a in &words {
                for b in &words {
                    let e = expand_product(&binary_query(basis, &[a, b])).unwrap();
                    for term in &e.terms {
                        let TargetKey::Word(t) = &term.target else {
                            panic!("binary expansion produced a non-word target");
                        };
                        let total_inv =
                            a.inversions() + b.inversions() + t.reversed().inversions();
                        let positive = (d * (n - d) + total_inv) % 2 == 0;
                        assert_eq!(
                            term.coefficient > BigInt::default(),
                            positive,
                            "{basis:?}: {a} * {b} -> {t}"
                        );
                        assert_ne!(term.coefficient, BigInt::default());
                    }
                }
            }
        }
    }
}

#[test]
fn alternating_terms_sit_in_one_degree() {
    // Nonzero terms only appear when the side lengths fill the top coset
    // length exactly.
    for (n, d) in [(4, 1), (4, 2), (5, 2)] {
        let dv = vec![0, d, d, n];
        let top = coset_top_length(&dv, n).unwrap();
        for lam in partitions_in_box(d, n - d) {
            for mu in partitions_in_box(d, n - d) {
                let factors = vec![
                    partition_to_word(&mu, n, d, (2, 3)).unwrap(),
                    partition_to_word(&lam, n, d, (1, 2)).unwrap(),
                ];
                let w1 = Permutation::from_string(&factors[0], &[2, 3]).unwrap();
                let w2 = Permutation::from_string(&factors[1], &[1, 3, 2]).unwrap();
                let e = expand_product(&ProductQuery {
                    basis: BasisKind::Cohomology,
                    factors: FactorInput::Typed(factors),
                    d: None,
                })
                .unwrap();
                for term in &e.terms {
                    let TargetKey::Perm(t) = &term.target else {
                        panic!("alternating expansion produced a non-permutation target");
                    };
                    let w3 = t.dual(&dv).unwrap();
                    assert_eq!(
                        w1.length() + w2.length() + w3.length(),
                        top,
                        "lam = {lam:?}, mu = {mu:?}, target {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn three_factor_products_telescope_through_two_factor_ones() {
    // Ring associativity: the coefficient of a target in a three-factor
    // product equals the convolution of two-factor coefficients over the
    // middle class.
    let words = binary_words(4, 2);
    for a in &words {
        for b in &words {
            let inner = expand_product(&binary_query(BasisKind::KTheory, &[a, b])).unwrap();
            for c in &words {
                let direct = expand_product(&binary_query(BasisKind::KTheory, &[a, b, c]))
                    .unwrap();
                for target in words.iter().map(|w| TargetKey::Word(w.clone())) {
                    let mut telescoped = BigInt::default();
                    for zeta in &words {
                        let through = structure_constant(
                            &binary_query(BasisKind::KTheory, &[zeta, c]),
                            &target,
                        )
                        .unwrap();
                        telescoped +=
                            inner.coefficient(&TargetKey::Word(zeta.clone())) * through;
                    }
                    assert_eq!(
                        direct.coefficient(&target),
                        telescoped,
                        "{a} * {b} * {c} -> {target}"
                    );
                }
            }
        }
    }
}
