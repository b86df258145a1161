//! Realization censuses over grown ambient posets: every colour observed
//! on a real embedding must be one the enumeration predicts, and the
//! bookkeeping (multiplicities, coverage, unrealized lists) must add up.

use std::collections::BTreeSet;

use poset_ramsey::ambient::{
    build_ambient, realization_experiment, BuildStrategy, RealizationCensus,
};
use poset_ramsey::pipeline::TypedColour;
use poset_ramsey::poset::FinitePoset;

fn small_posets() -> Vec<(&'static str, FinitePoset)> {
    vec![
        ("1-point", FinitePoset::chain(1)),
        ("2-chain", FinitePoset::chain(2)),
        ("2-antichain", FinitePoset::antichain(2)),
        ("3-chain", FinitePoset::chain(3)),
        ("3-antichain", FinitePoset::antichain(3)),
        ("V", FinitePoset::new(3, [(0, 1), (0, 2)]).unwrap()),
        ("lambda", FinitePoset::new(3, [(1, 0), (2, 0)]).unwrap()),
        ("chain+point", FinitePoset::new(3, [(0, 1)]).unwrap()),
    ]
}

fn check_books(census: &RealizationCensus) {
    assert!(census.unsound.is_empty(), "unsound colours: {:?}", census.unsound);
    let touched: usize = census.realized.iter().map(|c| c.count).sum();
    assert_eq!(touched, census.embedding_count, "multiplicities disagree");
    assert_eq!(
        census.realized_count() + census.unrealized.len(),
        census.expected_count,
        "realized and unrealized do not partition the expected set"
    );
    for c in &census.realized {
        assert!(c.count > 0);
    }
}

#[test]
fn censuses_are_sound_across_strategies_and_sizes() {
    let mut ambients = Vec::new();
    for size in [8, 14, 20] {
        ambients.push(build_ambient(size, 1, BuildStrategy::Exhaustive).unwrap());
        for seed in [3, 9] {
            ambients.push(build_ambient(size, seed, BuildStrategy::Random).unwrap());
        }
    }
    for (name, pattern) in small_posets() {
        for ambient in &ambients {
            let census = realization_experiment(&pattern, ambient).unwrap();
            check_books(&census);
            assert_eq!(census.ambient_size, ambient.poset.n());
        }
        println!("{name}: sound over {} ambients", ambients.len());
    }
}

fn realized_set(census: &RealizationCensus) -> BTreeSet<TypedColour> {
    census.realized.iter().map(|c| c.colour.clone()).collect()
}

/// Exhaustive growth is a prefix construction, so a larger ambient
/// contains the smaller one as an induced prefix. Colours realized on the
/// prefix are realized by the same embeddings in the larger ambient only
/// if the image construction assigns those elements the same relative
/// structure, which the level schedule does not promise. This probe
/// records how the realized sets actually move as the ambient grows.
#[test]
fn growing_the_ambient_keeps_realized_colours() {
    for (name, pattern) in small_posets() {
        let mut previous: Option<(usize, BTreeSet<TypedColour>)> = None;
        for size in [6, 10, 14, 18] {
            let ambient = build_ambient(size, 0, BuildStrategy::Exhaustive).unwrap();
            let census = realization_experiment(&pattern, &ambient).unwrap();
            let current = realized_set(&census);
            if let Some((prev_size, prev)) = &previous {
                let lost: Vec<&TypedColour> = prev.difference(&current).collect();
                assert!(
                    lost.is_empty(),
                    "{name}: growing {prev_size} -> {size} lost {} colour(s): {lost:?}",
                    lost.len()
                );
            }
            previous = Some((size, current));
        }
        println!("{name}: realized sets monotone over sizes 6..=18");
    }
}
