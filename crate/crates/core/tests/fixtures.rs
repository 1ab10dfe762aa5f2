//! Golden tests pinning the bijections and the expansion engine to the
//! checked-in worked examples, label for label.

mod common;

use common::{fixture_value, load_fixture};
use trilace::maps::{
    array_from_labeling, array_from_puzzle, coloring_to_puzzle, labeling_from_array, merge,
    puzzle_from_array, puzzle_to_coloring, split,
};
use trilace::schubert::{expand_product, witness_arrays, FactorInput, TargetKey};
use trilace::{
    BasisKind, BinaryString, InterlacingArray, Permutation, ProductQuery, SquareLabeling,
    TriangleColoring, TrianglePuzzle123,
};

#[test]
fn rank3_array_and_puzzle_fixtures_correspond() {
    let array: InterlacingArray = load_fixture("fig_1_1_array.json");
    let puzzle: TrianglePuzzle123 = load_fixture("fig_3_1_puzzle.json");
    assert_eq!(array_from_puzzle(&puzzle), array);
    assert_eq!(puzzle_from_array(&array).unwrap(), puzzle);
}

#[test]
fn coloring_and_puzzle_fixtures_correspond() {
    let coloring: TriangleColoring = load_fixture("fig_4_1_coloring.json");
    let puzzle: TrianglePuzzle123 = load_fixture("fig_4_1_puzzle.json");
    assert_eq!(coloring_to_puzzle(&coloring), puzzle);
    assert_eq!(puzzle_to_coloring(&puzzle).unwrap(), coloring);
}

#[test]
fn rank4_array_and_labeling_fixtures_correspond() {
    let array: InterlacingArray = load_fixture("fig_4_2_array.json");
    let labeling: SquareLabeling = load_fixture("fig_4_2_labeling.json");
    assert_eq!(array_from_labeling(&labeling), array);
    assert_eq!(labeling_from_array(&array).unwrap(), labeling);
}

#[test]
fn rank_lowering_matches_the_worked_example() {
    let t: InterlacingArray = load_fixture("ex_5_1_t.json");
    let r: InterlacingArray = load_fixture("ex_5_1_r.json");
    let s: InterlacingArray = load_fixture("ex_5_1_s.json");
    let (small, rest) = split(&t).unwrap();
    assert_eq!(small, r);
    assert_eq!(rest, s);
    assert_eq!(merge(&r, &s).unwrap(), t);
}

#[test]
fn fixture_serialization_is_canonical() {
    for name in [
        "fig_1_1_array.json",
        "fig_4_2_array.json",
        "ex_5_1_t.json",
        "ex_5_1_r.json",
        "ex_5_1_s.json",
    ] {
        let array: InterlacingArray = load_fixture(name);
        assert_eq!(serde_json::to_value(&array).unwrap(), fixture_value(name));
    }
    let puzzle: TrianglePuzzle123 = load_fixture("fig_3_1_puzzle.json");
    assert_eq!(
        serde_json::to_value(&puzzle).unwrap(),
        fixture_value("fig_3_1_puzzle.json")
    );
    let coloring: TriangleColoring = load_fixture("fig_4_1_coloring.json");
    assert_eq!(
        serde_json::to_value(&coloring).unwrap(),
        fixture_value("fig_4_1_coloring.json")
    );
    let labeling: SquareLabeling = load_fixture("fig_4_2_labeling.json");
    assert_eq!(
        serde_json::to_value(&labeling).unwrap(),
        fixture_value("fig_4_2_labeling.json")
    );
}

fn cube_query(basis: BasisKind) -> ProductQuery {
    let factor = BinaryString::parse("0101").unwrap();
    ProductQuery {
        basis,
        factors: FactorInput::Binary(vec![factor.clone(), factor.clone(), factor]),
        d: None,
    }
}

fn word_target(s: &str) -> TargetKey {
    TargetKey::Word(BinaryString::parse(s).unwrap())
}

#[test]
fn cube_expansions_hit_the_known_coefficients() {
    for (basis, low) in [
        (BasisKind::KTheory, -1),
        (BasisKind::DualKTheory, -5),
        (BasisKind::SegreSchwartzMacPherson, -6),
    ] {
        let e = expand_product(&cube_query(basis)).unwrap();
        assert_eq!(e.terms.len(), 2, "{basis:?}");
        assert_eq!(e.coefficient(&word_target("1010")), 2.into(), "{basis:?}");
        assert_eq!(e.coefficient(&word_target("1100")), low.into(), "{basis:?}");
    }

    let w = Permutation::parse("1324").unwrap();
    let e = expand_product(&ProductQuery {
        basis: BasisKind::Cohomology,
        factors: FactorInput::Permutations(vec![w.clone(), w.clone(), w]),
        d: Some(vec![0, 2, 2, 2, 4]),
    })
    .unwrap();
    assert_eq!(e.terms.len(), 1);
    let target = TargetKey::Perm(Permutation::parse("2413").unwrap());
    assert_eq!(e.coefficient(&target), 2.into());
    assert_eq!(e.terms[0].sign, 1);
}

#[test]
fn witnesses_match_the_figure_arrays() {
    let fig12: Vec<InterlacingArray> = load_fixture("fig_1_2_arrays.json");
    let fig13: Vec<InterlacingArray> = load_fixture("fig_1_3_arrays.json");
    assert_eq!((fig12.len(), fig13.len()), (2, 6));

    let k = cube_query(BasisKind::KTheory);
    let near = witness_arrays(&k, &word_target("1010")).unwrap();
    let mut expected = fig12.clone();
    expected.sort_by(|a, b| a.flat_rows().cmp(b.flat_rows()));
    assert_eq!(near, expected);

    let far = witness_arrays(&k, &word_target("1100")).unwrap();
    assert_eq!(far, vec![fig13[5].clone()]);

    let ssm = cube_query(BasisKind::SegreSchwartzMacPherson);
    let all = witness_arrays(&ssm, &word_target("1100")).unwrap();
    let mut expected = fig13.clone();
    expected.sort_by(|a, b| a.flat_rows().cmp(b.flat_rows()));
    assert_eq!(all, expected);
    let total = witness_arrays(&ssm, &word_target("1010")).unwrap().len() + all.len();
    assert_eq!(total, 8);
}
