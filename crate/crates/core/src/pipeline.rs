//! From a finite poset to explicit words in the generic order, and from
//! embeddings to colours.
//!
//! [`phi`] writes down one word per element directly from the order
//! relations. Its image closure is a tree, but usually not a poset-type:
//! levels can branch three ways or decide several relations at once.
//! [`psi_construct`] replays that tree level by level into a poset-type,
//! spending one image level per event, and returns both the rewritten
//! words and the event sequence validating the image tree. [`chi`] colours
//! an embedding by the projected type of its image words together with
//! the leaf each element lands on.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::poset::{FinitePoset, PosetEmbedding};
use crate::tree::{
    event_children, is_poset_type, tau_projection, LevelEvent, PosetTree, TypeCertificate,
};
use crate::word::{compatible, perp, precedes, Letter, Word};

/// One word per poset element, plus the tree those words close over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingWords {
    /// Indexed by element.
    pub map: Vec<Word>,
    pub tree: PosetTree,
}

/// The direct per-element words: element `j` gets a word of length
/// `2j + 2` ending in `LR`, with the letter pair at positions `2i` and
/// `2i + 1` recording its relation to each earlier element `i`: `LL` when
/// `j` lies below `i`, `RR` when `i` lies below `j`, `XX` otherwise.
///
/// ```
/// use poset_ramsey::{phi, FinitePoset};
///
/// let chain = FinitePoset::chain(2);
/// let words = phi(&chain);
/// assert_eq!(words.map[0].to_string(), "LR");
/// assert_eq!(words.map[1].to_string(), "RRLR");
/// ```
pub fn phi(q: &FinitePoset) -> EmbeddingWords {
    let mut map = Vec::with_capacity(q.n());
    for j in 0..q.n() {
        let mut letters = Vec::with_capacity(2 * j + 2);
        for i in 0..j {
            let c = if q.lt(j, i) {
                Letter::L
            } else if q.lt(i, j) {
                Letter::R
            } else {
                Letter::X
            };
            letters.push(c);
            letters.push(c);
        }
        letters.push(Letter::L);
        letters.push(Letter::R);
        map.push(Word::from_letters(letters));
    }
    let tree = PosetTree::closure(map.iter().cloned());
    EmbeddingWords { map, tree }
}

/// What [`check_phi`] found wrong, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum PhiViolation {
    #[error("{words} words for {elements} elements")]
    WrongArity { words: usize, elements: usize },
    #[error("elements {i} and {j} relate as (lt={lt_ij}, gt={lt_ji}) but their words {word_i} and {word_j} do not")]
    OrderMismatch { i: usize, j: usize, lt_ij: bool, lt_ji: bool, word_i: Word, word_j: Word },
    #[error("word {word} of element {element} is not a leaf of the tree")]
    NotALeaf { element: usize, word: Word },
    #[error("tree words {u} and {v} are incompatible")]
    IncompatiblePair { u: Word, v: Word },
    #[error("elements {i} and {j} are incomparable but their words {word_i} and {word_j} admit a common extension order")]
    MissingPerp { i: usize, j: usize, word_i: Word, word_j: Word },
}

/// Verifies everything [`phi`] promises: one word per element forming an
/// order-embedding, each word a leaf of the closure, all tree words
/// mutually compatible, and incomparable elements mapped to words
/// incomparable in every extension. Returns the first violation found;
/// any violation means a bug, not bad input.
pub fn check_phi(q: &FinitePoset, result: &EmbeddingWords) -> Result<(), PhiViolation> {
    let n = q.n();
    if result.map.len() != n {
        return Err(PhiViolation::WrongArity { words: result.map.len(), elements: n });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (u, v) = (&result.map[i], &result.map[j]);
            if q.lt(i, j) != precedes(u, v) || q.lt(j, i) != precedes(v, u) {
                return Err(PhiViolation::OrderMismatch {
                    i,
                    j,
                    lt_ij: q.lt(i, j),
                    lt_ji: q.lt(j, i),
                    word_i: u.clone(),
                    word_j: v.clone(),
                });
            }
            if q.incomparable(i, j) && !perp(u, v) {
                return Err(PhiViolation::MissingPerp {
                    i,
                    j,
                    word_i: u.clone(),
                    word_j: v.clone(),
                });
            }
        }
    }
    for (element, word) in result.map.iter().enumerate() {
        if !result.tree.is_leaf(word) {
            return Err(PhiViolation::NotALeaf { element, word: word.clone() });
        }
    }
    let words: Vec<Word> = result.tree.words().into_iter().collect();
    for a in 0..words.len() {
        for b in (a + 1)..words.len() {
            if !compatible(&words[a], &words[b]) {
                return Err(PhiViolation::IncompatiblePair {
                    u: words[a].clone(),
                    v: words[b].clone(),
                });
            }
        }
    }
    Ok(())
}

/// The rewriting stalled or produced something invalid. Always a bug:
/// the construction is total on valid posets, so this never signals bad
/// input. Carries the full working state for diagnosis.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error(
    "embedding construction failed at source level {level}: {detail}\n  live images: {live:?}\n  pending incomparabilities: {pending_perp:?}\n  pending precedences: {pending_leq:?}"
)]
pub struct PipelineBug {
    pub level: usize,
    pub detail: String,
    pub live: Vec<(Word, Word)>,
    pub pending_perp: Vec<(Word, Word)>,
    pub pending_leq: Vec<(Word, Word)>,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum PsiError {
    #[error("the empty poset has no embedding words")]
    EmptyPoset,
    #[error(transparent)]
    Bug(#[from] Box<PipelineBug>),
}

/// Rewritten words plus the event sequence that validates their tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsiOutput {
    pub words: EmbeddingWords,
    pub certificate: TypeCertificate,
}

/// Rewrites the [`phi`] words of `q` into a poset-type.
///
/// The tree `closure(phi(q))` is walked level by level, carrying an image
/// word for every live source word. Between consecutive source levels the
/// image advances one event at a time, always applying the first
/// construction that fits:
///
/// 1. words whose source ended become image leaves (in image order),
/// 2. colliding images (source words sharing an image) branch, lexicographically
///    least source to the `X` child, the rest to the `R` child,
/// 3. source incomparabilities missing from the image are added in order
///    of increasing distance (count of source words above the lower word,
///    up to and including the upper),
/// 4. source precedences missing from the image are added in order of
///    decreasing distance.
///
/// Each source level ends with the image an isomorphic copy of the level
/// under lexicographic order, precedence, and incomparability; that makes
/// every later event admissible, so the loop never stalls on valid input.
///
/// ```
/// use poset_ramsey::{psi_construct, FinitePoset};
///
/// let out = psi_construct(&FinitePoset::chain(2)).unwrap();
/// assert_eq!(out.words.map[0].to_string(), "XL");
/// assert_eq!(out.words.map[1].to_string(), "RRX");
/// ```
pub fn psi_construct(q: &FinitePoset) -> Result<PsiOutput, PsiError> {
    let n = q.n();
    if n == 0 {
        return Err(PsiError::EmptyPoset);
    }
    let source = phi(q);
    let tree = &source.tree;
    let max = tree.max_len().expect("nonempty poset gives a nonempty tree");

    // live: source truncation at the current level -> its image word
    let mut live: BTreeMap<Word, Word> = BTreeMap::from([(Word::empty(), Word::empty())]);
    let mut events: Vec<LevelEvent> = Vec::new();
    let mut psi_words: BTreeMap<Word, Word> = BTreeMap::new();

    for level in 1..=max {
        // source words that ended at the previous level become image leaves
        let mut ended: Vec<(Word, Word)> = tree
            .leaves()
            .iter()
            .filter(|l| l.len() == level - 1)
            .map(|l| (live[l].clone(), l.clone()))
            .collect();
        ended.sort();
        for (img, src) in ended {
            let event = LevelEvent::Leaf { word: img.clone() };
            apply_image_event(&mut live, &event)
                .map_err(|e| stall(level, format!("leaf drop rejected: {e}"), &live, &[], &[]))?;
            events.push(event);
            psi_words.insert(src, img);
        }

        // advance the domain to this level's truncations
        let mut next_live = BTreeMap::new();
        for u in tree.level(level) {
            let image = live[&u.initial_segment(level - 1)].clone();
            next_live.insert(u, image);
        }
        live = next_live;

        // source relations visible at this level that the image still lacks;
        // sorted source truncations make distance(i, j) simply j - i
        let sources: Vec<Word> = live.keys().cloned().collect();
        let mut pending_perp: Vec<(usize, Word, Word)> = Vec::new();
        let mut pending_leq: Vec<(usize, Word, Word)> = Vec::new();
        for i in 0..sources.len() {
            for j in (i + 1)..sources.len() {
                if perp(&sources[i], &sources[j]) {
                    pending_perp.push((j - i, sources[i].clone(), sources[j].clone()));
                } else if precedes(&sources[i], &sources[j]) {
                    pending_leq.push((j - i, sources[i].clone(), sources[j].clone()));
                }
            }
        }
        pending_perp.sort();
        pending_leq.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| (&a.1, &a.2).cmp(&(&b.1, &b.2))));

        loop {
            if let Some(word) = first_collision(&live) {
                let event = LevelEvent::Branch { word };
                apply_image_event(&mut live, &event).map_err(|e| {
                    stall(level, format!("branch rejected: {e}"), &live, &pending_perp, &pending_leq)
                })?;
                events.push(event);
                continue;
            }
            pending_perp.retain(|(_, a, b)| !perp(&live[a], &live[b]));
            pending_leq.retain(|(_, a, b)| !precedes(&live[a], &live[b]));
            if pending_perp.is_empty() && pending_leq.is_empty() {
                break;
            }
            let perp_events = pending_perp.iter().map(|(_, a, b)| LevelEvent::NewPerp {
                lower: live[a].clone(),
                upper: live[b].clone(),
            });
            let leq_events = pending_leq.iter().map(|(_, a, b)| LevelEvent::NewLeq {
                lower: live[a].clone(),
                upper: live[b].clone(),
            });
            let mut applied = false;
            for event in perp_events.chain(leq_events).collect::<Vec<_>>() {
                if apply_image_event(&mut live, &event).is_ok() {
                    events.push(event);
                    applied = true;
                    break;
                }
            }
            if !applied {
                return Err(stall(
                    level,
                    "no admissible event for the remaining pairs".to_string(),
                    &live,
                    &pending_perp,
                    &pending_leq,
                ));
            }
        }

        check_level_isomorphism(level, &live)?;
    }

    // the deepest source word ends without an event; the tree just stops
    if live.len() != 1 {
        return Err(stall(max, format!("{} words left at the final level", live.len()), &live, &[], &[]));
    }
    let (src, img) = live.into_iter().next().expect("checked singleton");
    psi_words.insert(src, img);

    let map: Vec<Word> = source.map.iter().map(|w| psi_words[w].clone()).collect();
    let out_tree = PosetTree::closure(map.iter().cloned());
    let bug = |detail: String| {
        PsiError::Bug(Box::new(PipelineBug {
            level: max,
            detail,
            live: Vec::new(),
            pending_perp: Vec::new(),
            pending_leq: Vec::new(),
        }))
    };
    let certificate = is_poset_type(&out_tree).map_err(|e| bug(format!("output tree fails validation: {e}")))?;
    if certificate.events() != events.as_slice() {
        return Err(bug(format!(
            "recorded events disagree with the tree's certificate: built {events:?}, classified {:?}",
            certificate.events()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && q.lt(i, j) != precedes(&map[i], &map[j]) {
                return Err(bug(format!("image words of {i} and {j} break the order")));
            }
            if i < j && q.incomparable(i, j) && !perp(&map[i], &map[j]) {
                return Err(bug(format!("incomparable elements {i} and {j} got comparable-capable words")));
            }
            if i < j && map[i].len() == map[j].len() {
                return Err(bug(format!("elements {i} and {j} got words of equal length")));
            }
        }
        if !out_tree.is_leaf(&map[i]) {
            return Err(bug(format!("image word of {i} is not a leaf")));
        }
    }
    Ok(PsiOutput { words: EmbeddingWords { map, tree: out_tree }, certificate })
}

/// Lexicographically least image shared by two or more live sources.
fn first_collision(live: &BTreeMap<Word, Word>) -> Option<Word> {
    let mut count: BTreeMap<&Word, usize> = BTreeMap::new();
    for img in live.values() {
        *count.entry(img).or_insert(0) += 1;
    }
    count.into_iter().find(|(_, c)| *c >= 2).map(|(w, _)| w.clone())
}

/// Advances every live image by one letter according to `event`. The
/// branching event splits a colliding class: least source to the `X`
/// child, the rest to the `R` child; everything else is a plain
/// per-image substitution. A leafed image's source leaves the map.
fn apply_image_event(
    live: &mut BTreeMap<Word, Word>,
    event: &LevelEvent,
) -> Result<(), crate::tree::EventError> {
    let level: BTreeSet<Word> = live.values().cloned().collect();
    let children = event_children(&level, event)?;
    if let LevelEvent::Branch { word } = event {
        let class: Vec<Word> = live
            .iter()
            .filter(|(_, img)| *img == word)
            .map(|(src, _)| src.clone())
            .collect();
        let (x_child, r_child) = (&children[word][0], &children[word][1]);
        for (k, src) in class.iter().enumerate() {
            let child = if k == 0 { x_child } else { r_child };
            live.insert(src.clone(), child.clone());
        }
        for (src, img) in live.iter_mut() {
            if !class.contains(src) {
                *img = children[img][0].clone();
            }
        }
    } else {
        let mut dead = Vec::new();
        for (src, img) in live.iter_mut() {
            match children[img].first() {
                Some(child) => *img = child.clone(),
                None => dead.push(src.clone()),
            }
        }
        for src in dead {
            live.remove(&src);
        }
    }
    Ok(())
}

fn stall(
    level: usize,
    detail: String,
    live: &BTreeMap<Word, Word>,
    pending_perp: &[(usize, Word, Word)],
    pending_leq: &[(usize, Word, Word)],
) -> PsiError {
    PsiError::Bug(Box::new(PipelineBug {
        level,
        detail,
        live: live.iter().map(|(s, i)| (s.clone(), i.clone())).collect(),
        pending_perp: pending_perp.iter().map(|(_, a, b)| (a.clone(), b.clone())).collect(),
        pending_leq: pending_leq.iter().map(|(_, a, b)| (a.clone(), b.clone())).collect(),
    }))
}

/// The image must copy the source level exactly: same lexicographic
/// order, same precedences, same incomparabilities.
fn check_level_isomorphism(level: usize, live: &BTreeMap<Word, Word>) -> Result<(), PsiError> {
    let entries: Vec<(&Word, &Word)> = live.iter().collect();
    for a in 0..entries.len() {
        for b in (a + 1)..entries.len() {
            let (sa, ia) = entries[a];
            let (sb, ib) = entries[b];
            let ok = ia < ib
                && precedes(sa, sb) == precedes(ia, ib)
                && precedes(sb, sa) == precedes(ib, ia)
                && perp(sa, sb) == perp(ia, ib);
            if !ok {
                return Err(stall(
                    level,
                    format!("image is not an isomorphic copy at the pair {sa}, {sb}"),
                    live,
                    &[],
                    &[],
                ));
            }
        }
    }
    Ok(())
}

/// A colour for one embedding: the projected type of its image words and
/// the leaf each pattern element lands on, numbered in the type's
/// canonical leaf order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct TypedColour {
    pub tree: PosetTree,
    pub assignment: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ChiError {
    #[error("map entry {image} of element {element} is outside the {available} source words")]
    ImageOutOfRange { element: usize, image: usize, available: usize },
    #[error("elements {i} and {j} show the map is not an order-embedding")]
    BadEmbedding { i: usize, j: usize },
    #[error("projected tree fails validation: {detail}")]
    NotAType { detail: String },
    #[error("leaf assignment breaks the pattern order between {i} and {j}")]
    AssignmentMismatch { i: usize, j: usize },
}

/// Colours the embedding `f` of the pattern `a`: takes the image words
/// under `psi`, closes them into a tree, projects away the uninteresting
/// levels, and reads off which canonical leaf each element became.
///
/// The embedding is validated through the words themselves (their order
/// is the source poset's order), so no copy of the source poset is
/// needed. Projection failures mean a bug, not bad input.
pub fn chi(a: &FinitePoset, f: &PosetEmbedding, psi: &EmbeddingWords) -> Result<TypedColour, ChiError> {
    let n = a.n();
    let words: Vec<&Word> = (0..n)
        .map(|e| {
            let image = f.map(e);
            psi.map.get(image).ok_or(ChiError::ImageOutOfRange {
                element: e,
                image,
                available: psi.map.len(),
            })
        })
        .collect::<Result<_, _>>()?;
    for i in 0..n {
        for j in 0..n {
            if i != j && (words[i] == words[j] || a.lt(i, j) != precedes(words[i], words[j])) {
                return Err(ChiError::BadEmbedding { i, j });
            }
        }
    }

    let sub = PosetTree::closure(words.iter().map(|w| (*w).clone()));
    let projection = tau_projection(&sub);
    let typ = projection.tree;
    is_poset_type(&typ).map_err(|e| ChiError::NotAType { detail: e.to_string() })?;

    let canon = typ.canonical_leaves();
    let assignment: Vec<usize> = words
        .iter()
        .map(|w| {
            let img = &projection.leaf_images[*w];
            canon.iter().position(|l| l == img).expect("projected leaf is a leaf of the projection")
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && a.lt(i, j) != precedes(&canon[assignment[i]], &canon[assignment[j]]) {
                return Err(ChiError::AssignmentMismatch { i, j });
            }
        }
    }
    Ok(TypedColour { tree: typ, assignment })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_types, EnumerationMode};
    use crate::poset::random_poset;
    use crate::tree::leaf_poset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn phi_writes_the_expected_words() {
        let chain = FinitePoset::chain(2);
        assert_eq!(phi(&chain).map, vec![w("LR"), w("RRLR")]);
        let anti = FinitePoset::antichain(2);
        assert_eq!(phi(&anti).map, vec![w("LR"), w("XXLR")]);
        let rev = FinitePoset::new(2, [(1, 0)]).unwrap();
        assert_eq!(phi(&rev).map, vec![w("LR"), w("LLLR")]);
    }

    #[test]
    fn phi_passes_its_own_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let q = random_poset(6, 0.4, &mut rng);
            let words = phi(&q);
            check_phi(&q, &words).unwrap();
        }
    }

    #[test]
    fn check_phi_names_a_corrupted_word() {
        let q = FinitePoset::chain(2);
        let mut words = phi(&q);
        words.map[1] = w("LLLR");
        let violation = check_phi(&q, &words).unwrap_err();
        assert!(matches!(violation, PhiViolation::OrderMismatch { i: 0, j: 1, .. }));
    }

    #[test]
    fn check_phi_catches_a_non_leaf() {
        let q = FinitePoset::chain(2);
        let mut words = phi(&q);
        // "L" still precedes "RRLR", so the order checks pass, but it is an
        // internal word of the tree
        words.map[0] = w("L");
        let violation = check_phi(&q, &words).unwrap_err();
        assert!(matches!(violation, PhiViolation::NotALeaf { element: 0, .. }));
    }

    #[test]
    fn psi_collapses_a_single_point() {
        let out = psi_construct(&FinitePoset::chain(1)).unwrap();
        assert_eq!(out.words.map, vec![Word::empty()]);
        assert_eq!(out.words.tree, PosetTree::closure([Word::empty()]));
        assert!(out.certificate.events().is_empty());
    }

    #[test]
    fn psi_rewrites_the_two_chain() {
        let out = psi_construct(&FinitePoset::chain(2)).unwrap();
        assert_eq!(out.words.map, vec![w("XL"), w("RRX")]);
        assert_eq!(
            out.certificate.events(),
            &[
                LevelEvent::Branch { word: w("") },
                LevelEvent::NewLeq { lower: w("X"), upper: w("R") },
                LevelEvent::Leaf { word: w("XL") },
            ]
        );
    }

    #[test]
    fn psi_rewrites_the_two_antichain() {
        let out = psi_construct(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(out.words.map, vec![w("XR"), w("RXX")]);
        assert_eq!(
            out.certificate.events(),
            &[
                LevelEvent::Branch { word: w("") },
                LevelEvent::NewPerp { lower: w("X"), upper: w("R") },
                LevelEvent::Leaf { word: w("XR") },
            ]
        );
    }

    #[test]
    fn psi_output_is_an_enumerated_type() {
        for q in [
            FinitePoset::chain(2),
            FinitePoset::antichain(2),
            FinitePoset::chain(3),
            FinitePoset::new(3, [(0, 1), (0, 2)]).unwrap(),
            FinitePoset::new(3, [(0, 2), (1, 2)]).unwrap(),
        ] {
            let out = psi_construct(&q).unwrap();
            let types = enumerate_types(&q, EnumerationMode::Diagonal).unwrap();
            assert!(types.types.contains(&out.words.tree));
        }
    }

    #[test]
    fn psi_satisfies_the_embedding_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let q = random_poset(8, 0.35, &mut rng);
            let out = psi_construct(&q).unwrap();
            let (lp, _) = leaf_poset(&out.words.tree).unwrap();
            assert!(lp.isomorphic(&q).is_some());
            for i in 0..q.n() {
                for j in 0..q.n() {
                    if i == j {
                        continue;
                    }
                    assert_eq!(q.lt(i, j), precedes(&out.words.map[i], &out.words.map[j]));
                    if i < j && q.incomparable(i, j) {
                        assert!(perp(&out.words.map[i], &out.words.map[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn chi_collapses_single_points() {
        let ambient = FinitePoset::chain(3);
        let psi = psi_construct(&ambient).unwrap().words;
        let point = FinitePoset::chain(1);
        for e in 0..3 {
            let f = PosetEmbedding::new(&point, &ambient, vec![e]).unwrap();
            let colour = chi(&point, &f, &psi).unwrap();
            assert_eq!(colour.tree, PosetTree::closure([Word::empty()]));
            assert_eq!(colour.assignment, vec![0]);
        }
    }

    #[test]
    fn chi_types_land_in_the_enumerated_set() {
        let ambient = FinitePoset::chain(3);
        let psi = psi_construct(&ambient).unwrap().words;
        let pattern = FinitePoset::chain(2);
        let types = enumerate_types(&pattern, EnumerationMode::Diagonal).unwrap().types;
        let embeddings = pattern.all_embeddings(&ambient);
        assert_eq!(embeddings.len(), 3);
        for f in &embeddings {
            let colour = chi(&pattern, f, &psi).unwrap();
            assert!(types.contains(&colour.tree));
        }
    }

    #[test]
    fn chi_of_the_identity_returns_the_full_type() {
        let q = FinitePoset::chain(2);
        let psi = psi_construct(&q).unwrap().words;
        let f = PosetEmbedding::new(&q, &q, vec![0, 1]).unwrap();
        let colour = chi(&q, &f, &psi).unwrap();
        assert_eq!(colour.tree, psi.tree);
        assert_eq!(colour.assignment, vec![0, 1]);
    }

    #[test]
    fn chi_rejects_a_broken_map() {
        let ambient = FinitePoset::chain(2);
        let psi = psi_construct(&ambient).unwrap().words;
        let pattern = FinitePoset::antichain(2);
        // 0 and 1 are comparable in the ambient, so this map is no embedding
        let f = PosetEmbedding::new(&pattern, &pattern, vec![0, 1]).unwrap();
        assert!(matches!(chi(&pattern, &f, &psi), Err(ChiError::BadEmbedding { .. })));
    }
}
