//! The searcher must agree exactly with the naive breadth-first oracle on
//! every poset with at most three elements, up to the standard depth cap.

use poset_ramsey::enumerate::{default_depth_cap, oracle_enumerate};
use poset_ramsey::tree::{is_poset_type, leaf_poset};
use poset_ramsey::{enumerate_types, EnumerationMode, FinitePoset, PosetTree};

fn small_posets() -> Vec<(&'static str, FinitePoset)> {
    vec![
        ("one point", FinitePoset::chain(1)),
        ("two-chain", FinitePoset::chain(2)),
        ("two-antichain", FinitePoset::antichain(2)),
        ("three-chain", FinitePoset::chain(3)),
        ("three-antichain", FinitePoset::antichain(3)),
        ("one below two", FinitePoset::new(3, [(0, 1), (0, 2)]).unwrap()),
        ("two below one", FinitePoset::new(3, [(0, 2), (1, 2)]).unwrap()),
        ("chain plus point", FinitePoset::new(3, [(0, 1)]).unwrap()),
    ]
}

#[test]
fn oracle_and_searcher_agree_on_all_small_posets() {
    for (name, q) in small_posets() {
        let cap = default_depth_cap(q.n());
        let start = std::time::Instant::now();
        let oracle = oracle_enumerate(&q, cap).unwrap();
        let elapsed = start.elapsed();

        let verbatim = enumerate_types(&q, EnumerationMode::Verbatim).unwrap();
        assert!(verbatim.complete, "{name}: verbatim search truncated");
        assert_eq!(oracle, verbatim.types, "{name}: verbatim mismatch");

        let diagonal = enumerate_types(&q, EnumerationMode::Diagonal).unwrap();
        assert!(diagonal.complete, "{name}: diagonal search truncated");
        let oracle_diagonal: Vec<PosetTree> =
            oracle.iter().filter(|t| t.is_diagonal()).cloned().collect();
        assert_eq!(oracle_diagonal, diagonal.types, "{name}: diagonal mismatch");

        for t in &oracle {
            is_poset_type(t).unwrap_or_else(|e| panic!("{name}: oracle tree invalid: {e}"));
            let (lp, _) = leaf_poset(t).unwrap();
            assert!(lp.isomorphic(&q).is_some(), "{name}: leaf poset mismatch");
            assert!(t.max_len().unwrap_or(0) <= cap, "{name}: tree deeper than the cap");
        }

        println!(
            "{name}: |diagonal| = {}, |verbatim| = {}, oracle took {:.2?}",
            diagonal.types.len(),
            verbatim.types.len(),
            elapsed
        );
    }
}

#[test]
fn searcher_matches_the_frozen_counts() {
    let expect = [
        ("one point", 1usize),
        ("two-chain", 2),
        ("two-antichain", 2),
    ];
    for (name, q) in small_posets().into_iter().take(3) {
        let d = enumerate_types(&q, EnumerationMode::Diagonal).unwrap();
        let (ename, count) = expect.iter().find(|(n, _)| *n == name).unwrap();
        assert_eq!(d.types.len(), *count, "{ename}");
    }
}
