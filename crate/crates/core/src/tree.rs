//! Poset-types: subtree-closed word sets whose consecutive levels are
//! linked by exactly one admissible event.
//!
//! A tree is stored by its leaf set; every other word is a prefix of a
//! leaf. Level `i` is the set of length-`i` prefixes of leaves of length
//! at least `i`. Between level `i` and level `i + 1` a valid type performs
//! exactly one of four events, each extending every surviving word by one
//! letter:
//!
//! * **leaf** `w`: `w` stops (it must already be related to every other
//!   word of the level); everyone else gains `X`.
//! * **branch** `w`: `w` gains both `X` and `R`; words lexicographically
//!   below `w` gain `X`, words above gain `R`.
//! * **new-perp** `(v, w)` for an unrelated pair `v <lex w`: `v` gains
//!   `R`, `w` gains `X`; strictly between them, words incomparable to `v`
//!   gain `X` and the rest gain `R`; below `v` everyone gains `X`, above
//!   `w` everyone gains `R`. Precondition **A2**: every word strictly
//!   between `v` and `w` is incomparable to `v` or to `w`.
//! * **new-leq** `(v, w)` for an unrelated pair `v <lex w`: `v` gains `L`
//!   and `w` gains `R`; below `v`, words incomparable to `v` gain `X` and
//!   the rest gain `L`; between them everyone gains `X`; above `w`, words
//!   incomparable to `w` gain `X` and the rest gain `R`. Precondition
//!   **B1**: every word below `v` precedes-or-equals `w` or is
//!   incomparable to `v`. Precondition **B2**: every word above `w` is
//!   preceded-or-equalled by `v` or incomparable to `w`.
//!
//! All relations here are recomputed from letters on demand; nothing is
//! cached on the structures.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::poset::FinitePoset;
use crate::word::{compatible, perp, precedes, precedes_eq, related, Letter, Word};

/// A subtree-closed set of words, stored by its maximal words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PosetTree {
    leaves: BTreeSet<Word>,
}

impl PosetTree {
    /// The subtree closure of `words`: all initial segments. The stored
    /// leaves are the maximal words of the input; the empty input gives
    /// the empty tree.
    pub fn closure(words: impl IntoIterator<Item = Word>) -> PosetTree {
        let sorted: BTreeSet<Word> = words.into_iter().collect();
        let all: Vec<&Word> = sorted.iter().collect();
        let mut leaves = BTreeSet::new();
        for (k, w) in all.iter().enumerate() {
            // in lex order, a proper extension of w, if any exists in the
            // set, appears immediately after w
            let extended = all
                .get(k + 1)
                .map(|next| w.is_prefix_of(next))
                .unwrap_or(false);
            if !extended {
                leaves.insert((*w).clone());
            }
        }
        PosetTree { leaves }
    }

    pub fn empty() -> PosetTree {
        PosetTree { leaves: BTreeSet::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Maximal words, in lexicographic order.
    pub fn leaves(&self) -> &BTreeSet<Word> {
        &self.leaves
    }

    /// Leaves sorted by length first, then lexicographically: the order
    /// used to label leaves with poset elements.
    pub fn canonical_leaves(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.leaves.iter().cloned().collect();
        v.sort_by(|a, b| a.canonical_cmp(b));
        v
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// True when no two leaves share a length, so every level past the
    /// root narrows the tree towards a single deepest word.
    pub fn is_diagonal(&self) -> bool {
        let lengths: BTreeSet<usize> = self.leaves.iter().map(Word::len).collect();
        lengths.len() == self.leaves.len()
    }

    pub fn is_leaf(&self, w: &Word) -> bool {
        self.leaves.contains(w)
    }

    /// True when `w` is a word of the tree, i.e. a prefix of some leaf.
    pub fn contains(&self, w: &Word) -> bool {
        self.leaves.iter().any(|l| w.is_prefix_of(l))
    }

    /// Length of the longest word, `None` for the empty tree.
    pub fn max_len(&self) -> Option<usize> {
        self.leaves.iter().map(Word::len).max()
    }

    /// Level `i`: length-`i` prefixes of all leaves long enough to reach it.
    pub fn level(&self, i: usize) -> BTreeSet<Word> {
        self.leaves
            .iter()
            .filter(|w| w.len() >= i)
            .map(|w| w.initial_segment(i))
            .collect()
    }

    /// Level `i` with its words materialised for relation queries.
    pub fn level_structure(&self, i: usize) -> LevelStructure {
        LevelStructure { words: self.level(i).into_iter().collect() }
    }

    /// Every word of the tree.
    pub fn words(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for leaf in &self.leaves {
            for i in 0..=leaf.len() {
                out.insert(leaf.initial_segment(i));
            }
        }
        out
    }
}

impl PartialOrd for PosetTree {
    fn partial_cmp(&self, other: &PosetTree) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PosetTree {
    fn cmp(&self, other: &PosetTree) -> Ordering {
        self.canonical_leaves()
            .cmp(&other.canonical_leaves())
    }
}

impl serde::Serialize for PosetTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PosetTree", 1)?;
        s.serialize_field("leaves", &self.canonical_leaves())?;
        s.end()
    }
}

impl<'de> serde::Deserialize<'de> for PosetTree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<PosetTree, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            leaves: Vec<Word>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut set = BTreeSet::new();
        for w in &raw.leaves {
            if !set.insert(w.clone()) {
                return Err(serde::de::Error::custom(format!("duplicate leaf {w:?}")));
            }
        }
        for a in &set {
            for b in &set {
                if a != b && a.is_prefix_of(b) {
                    return Err(serde::de::Error::custom(format!(
                        "leaf {a:?} is a prefix of leaf {b:?}"
                    )));
                }
            }
        }
        Ok(PosetTree { leaves: set })
    }
}

/// One level of a tree, with its relations computed from letters on demand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelStructure {
    words: Vec<Word>,
}

impl LevelStructure {
    /// Words in lexicographic order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        precedes(&self.words[a], &self.words[b])
    }

    pub fn perp(&self, a: usize, b: usize) -> bool {
        perp(&self.words[a], &self.words[b])
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        related(&self.words[a], &self.words[b])
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        compatible(&self.words[a], &self.words[b])
    }
}

/// The four admissible transitions between consecutive levels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevelEvent {
    Leaf { word: Word },
    Branch { word: Word },
    NewPerp { lower: Word, upper: Word },
    NewLeq { lower: Word, upper: Word },
}

fn display_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

impl fmt::Display for LevelEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelEvent::Leaf { word } => write!(f, "leaf({})", display_word(word)),
            LevelEvent::Branch { word } => write!(f, "branch({})", display_word(word)),
            LevelEvent::NewPerp { lower, upper } => {
                write!(f, "new-perp({}, {})", display_word(lower), display_word(upper))
            }
            LevelEvent::NewLeq { lower, upper } => {
                write!(f, "new-leq({}, {})", display_word(lower), display_word(upper))
            }
        }
    }
}

/// Why an event cannot be applied to a level.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum EventError {
    #[error("word {0:?} is not in the level")]
    WordNotInLevel(Word),
    #[error("level mixes lengths: {0:?} and {1:?}")]
    MixedLengths(Word, Word),
    #[error("leaf precondition fails: {leaf:?} is unrelated to {witness:?}")]
    LeafNotRelated { leaf: Word, witness: Word },
    #[error("pair is not lexicographically ordered: {lower:?} must come before {upper:?}")]
    PairOutOfOrder { lower: Word, upper: Word },
    #[error("pair {lower:?}, {upper:?} is already related")]
    PairAlreadyRelated { lower: Word, upper: Word },
    #[error("A2 fails at {witness:?}: it lies strictly between {lower:?} and {upper:?} but is incomparable to neither")]
    ConditionA2 { lower: Word, upper: Word, witness: Word },
    #[error("B1 fails at {witness:?}: it is below {lower:?} but neither precedes-or-equals {upper:?} nor is incomparable to {lower:?}")]
    ConditionB1 { lower: Word, upper: Word, witness: Word },
    #[error("B2 fails at {witness:?}: it is above {upper:?} but is neither preceded-or-equalled by {lower:?} nor incomparable to {upper:?}")]
    ConditionB2 { lower: Word, upper: Word, witness: Word },
}

fn check_uniform(level: &BTreeSet<Word>) -> Result<(), EventError> {
    let mut it = level.iter();
    if let Some(first) = it.next() {
        for w in it {
            if w.len() != first.len() {
                return Err(EventError::MixedLengths(first.clone(), w.clone()));
            }
        }
    }
    Ok(())
}

/// The children every level word receives under `event`: the dropped word
/// of a leaf event maps to no children, the branching word to two, every
/// other word to exactly one.
pub fn event_children(
    level: &BTreeSet<Word>,
    event: &LevelEvent,
) -> Result<BTreeMap<Word, Vec<Word>>, EventError> {
    check_uniform(level)?;
    let mut out: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
    match event {
        LevelEvent::Leaf { word } => {
            if !level.contains(word) {
                return Err(EventError::WordNotInLevel(word.clone()));
            }
            for u in level {
                if u != word && !related(word, u) {
                    return Err(EventError::LeafNotRelated {
                        leaf: word.clone(),
                        witness: u.clone(),
                    });
                }
            }
            for u in level {
                let children = if u == word { vec![] } else { vec![u.append(Letter::X)] };
                out.insert(u.clone(), children);
            }
        }
        LevelEvent::Branch { word } => {
            if !level.contains(word) {
                return Err(EventError::WordNotInLevel(word.clone()));
            }
            for u in level {
                let children = match u.cmp(word) {
                    Ordering::Less => vec![u.append(Letter::X)],
                    Ordering::Equal => vec![u.append(Letter::X), u.append(Letter::R)],
                    Ordering::Greater => vec![u.append(Letter::R)],
                };
                out.insert(u.clone(), children);
            }
        }
        LevelEvent::NewPerp { lower, upper } => {
            check_new_pair(level, lower, upper)?;
            for u in level {
                if lower < u && u < upper && !(perp(u, lower) || perp(u, upper)) {
                    return Err(EventError::ConditionA2 {
                        lower: lower.clone(),
                        upper: upper.clone(),
                        witness: u.clone(),
                    });
                }
            }
            for u in level {
                let child = if u == lower {
                    u.append(Letter::R)
                } else if u == upper {
                    u.append(Letter::X)
                } else if u < lower {
                    u.append(Letter::X)
                } else if u < upper {
                    // strictly between: incomparables to `lower` go X, the rest R
                    if perp(u, lower) {
                        u.append(Letter::X)
                    } else {
                        u.append(Letter::R)
                    }
                } else {
                    u.append(Letter::R)
                };
                out.insert(u.clone(), vec![child]);
            }
        }
        LevelEvent::NewLeq { lower, upper } => {
            check_new_pair(level, lower, upper)?;
            for u in level {
                if u < lower && !(precedes_eq(u, upper) || perp(u, lower)) {
                    return Err(EventError::ConditionB1 {
                        lower: lower.clone(),
                        upper: upper.clone(),
                        witness: u.clone(),
                    });
                }
                if upper < u && !(precedes_eq(lower, u) || perp(upper, u)) {
                    return Err(EventError::ConditionB2 {
                        lower: lower.clone(),
                        upper: upper.clone(),
                        witness: u.clone(),
                    });
                }
            }
            for u in level {
                let child = if u == lower {
                    u.append(Letter::L)
                } else if u == upper {
                    u.append(Letter::R)
                } else if u < lower {
                    if perp(u, lower) {
                        u.append(Letter::X)
                    } else {
                        u.append(Letter::L)
                    }
                } else if u < upper {
                    u.append(Letter::X)
                } else {
                    if perp(upper, u) {
                        u.append(Letter::X)
                    } else {
                        u.append(Letter::R)
                    }
                };
                out.insert(u.clone(), vec![child]);
            }
        }
    }
    Ok(out)
}

fn check_new_pair(level: &BTreeSet<Word>, lower: &Word, upper: &Word) -> Result<(), EventError> {
    if !level.contains(lower) {
        return Err(EventError::WordNotInLevel(lower.clone()));
    }
    if !level.contains(upper) {
        return Err(EventError::WordNotInLevel(upper.clone()));
    }
    if lower >= upper {
        return Err(EventError::PairOutOfOrder {
            lower: lower.clone(),
            upper: upper.clone(),
        });
    }
    if related(lower, upper) {
        return Err(EventError::PairAlreadyRelated {
            lower: lower.clone(),
            upper: upper.clone(),
        });
    }
    Ok(())
}

/// The next level produced by `event`.
pub fn apply_event(
    level: &BTreeSet<Word>,
    event: &LevelEvent,
) -> Result<BTreeSet<Word>, EventError> {
    Ok(event_children(level, event)?
        .into_values()
        .flatten()
        .collect())
}

/// Result of matching a level transition against the admissible events.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    Event(LevelEvent),
    NoMatch,
    Ambiguous(LevelEvent, LevelEvent),
}

/// Identifies the event turning `cur` into `next`, if any.
///
/// The event family is pinned by the size change (`leaf` shrinks by one,
/// `branch` grows by one, the two relation events preserve size) and the
/// witness inside a family is forced: a leaf event's word is the one with
/// no child, a branch event's word is the one with two, a new-perp pair is
/// the lex-least word gaining `R` together with the lex-greatest gaining
/// `X`, a new-leq pair is the lex-greatest gaining `L` together with the
/// lex-least gaining `R`. Every inferred candidate is verified by exact
/// application, so a transition matching no event reports `NoMatch` and a
/// transition matching two reports them both.
pub fn classify_level(cur: &BTreeSet<Word>, next: &BTreeSet<Word>) -> Classification {
    if cur.is_empty() || check_uniform(cur).is_err() || check_uniform(next).is_err() {
        return Classification::NoMatch;
    }
    let cur_len = cur.iter().next().map(Word::len).unwrap_or(0);
    if let Some(w) = next.iter().next() {
        if w.len() != cur_len + 1 {
            return Classification::NoMatch;
        }
    }
    // every next word must extend a current word
    let mut children: BTreeMap<&Word, Vec<&Word>> = cur.iter().map(|w| (w, vec![])).collect();
    for v in next {
        let parent = v.parent().expect("next words have positive length");
        match children.get_mut(&parent) {
            Some(c) => c.push(v),
            None => return Classification::NoMatch,
        }
    }

    let mut candidates: Vec<LevelEvent> = Vec::new();
    if next.len() + 1 == cur.len() {
        // leaf: exactly one childless word
        let childless: Vec<&Word> =
            children.iter().filter(|(_, c)| c.is_empty()).map(|(w, _)| *w).collect();
        if let [w] = childless[..] {
            candidates.push(LevelEvent::Leaf { word: w.clone() });
        }
    } else if next.len() == cur.len() + 1 {
        // branch: exactly one word with two children
        let doubled: Vec<&Word> =
            children.iter().filter(|(_, c)| c.len() == 2).map(|(w, _)| *w).collect();
        if let [w] = doubled[..] {
            candidates.push(LevelEvent::Branch { word: w.clone() });
        }
    } else if next.len() == cur.len() {
        let gained = |letter: Letter| -> Vec<&Word> {
            children
                .iter()
                .filter(|(_, c)| c.len() == 1 && c[0].last() == Some(letter))
                .map(|(w, _)| *w)
                .collect()
        };
        let with_r = gained(Letter::R);
        let with_x = gained(Letter::X);
        let with_l = gained(Letter::L);
        if let (Some(lower), Some(upper)) = (with_r.first(), with_x.last()) {
            candidates.push(LevelEvent::NewPerp {
                lower: (*lower).clone(),
                upper: (*upper).clone(),
            });
        }
        if let (Some(lower), Some(upper)) = (with_l.last(), with_r.first()) {
            candidates.push(LevelEvent::NewLeq {
                lower: (*lower).clone(),
                upper: (*upper).clone(),
            });
        }
    } else {
        return Classification::NoMatch;
    }

    let mut matching = candidates
        .into_iter()
        .filter(|e| apply_event(cur, e).ok().as_ref() == Some(next));
    match (matching.next(), matching.next()) {
        (None, _) => Classification::NoMatch,
        (Some(e), None) => Classification::Event(e),
        (Some(a), Some(b)) => Classification::Ambiguous(a, b),
    }
}

/// The event sequence certifying a tree is a poset-type, one event per
/// level, starting from the root level `{ε}`.
#[derive(Clone, PartialEq, Eq, Debug, Default, serde::Serialize, serde::Deserialize)]
pub struct TypeCertificate {
    events: Vec<LevelEvent>,
}

impl TypeCertificate {
    pub fn new(events: Vec<LevelEvent>) -> TypeCertificate {
        TypeCertificate { events }
    }

    pub fn events(&self) -> &[LevelEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Replays the events from `{ε}`, returning every level produced.
    pub fn replay(&self) -> Result<Vec<BTreeSet<Word>>, EventError> {
        let mut levels = vec![BTreeSet::from([Word::empty()])];
        for event in &self.events {
            let next = apply_event(levels.last().unwrap(), event)?;
            levels.push(next);
        }
        Ok(levels)
    }

    /// The tree whose levels the replay produces.
    pub fn tree(&self) -> Result<PosetTree, EventError> {
        let levels = self.replay()?;
        Ok(PosetTree::closure(levels.into_iter().flatten()))
    }
}

/// Why a tree fails to be a poset-type.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum TypeFailure {
    #[error("transition from level {level} matches no admissible event")]
    NoMatch { level: usize },
    #[error("transition from level {level} is ambiguous: {first} and {second} both apply")]
    Ambiguous { level: usize, first: LevelEvent, second: LevelEvent },
}

/// Validates every level transition and returns the event sequence.
/// The empty tree and the single-node tree `{ε}` are vacuously valid.
pub fn is_poset_type(tree: &PosetTree) -> Result<TypeCertificate, TypeFailure> {
    let max = match tree.max_len() {
        None => return Ok(TypeCertificate::default()),
        Some(m) => m,
    };
    let mut events = Vec::with_capacity(max);
    let mut cur = tree.level(0);
    for i in 0..max {
        let next = tree.level(i + 1);
        match classify_level(&cur, &next) {
            Classification::Event(e) => events.push(e),
            Classification::NoMatch => return Err(TypeFailure::NoMatch { level: i }),
            Classification::Ambiguous(first, second) => {
                return Err(TypeFailure::Ambiguous { level: i, first, second })
            }
        }
        cur = next;
    }
    Ok(TypeCertificate { events })
}

/// The empty tree has no leaves to order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
#[error("the empty tree has no leaf poset")]
pub struct EmptyTreeError;

/// The partial order induced on the leaves by strict precedence, with
/// leaves labelled `0..n-1` in (length, lex) order. Returns the poset and
/// the leaf words in label order.
pub fn leaf_poset(tree: &PosetTree) -> Result<(FinitePoset, Vec<Word>), EmptyTreeError> {
    if tree.is_empty() {
        return Err(EmptyTreeError);
    }
    let leaves = tree.canonical_leaves();
    let mut pairs = Vec::new();
    for (i, u) in leaves.iter().enumerate() {
        for (j, v) in leaves.iter().enumerate() {
            if i != j && precedes(u, v) {
                pairs.push((i, j));
            }
        }
    }
    let poset = FinitePoset::new(leaves.len(), pairs)
        .expect("strict precedence restricted to a finite word set is a partial order");
    Ok((poset, leaves))
}

/// Monotone relation flags for one leaf pair, advanced letter by letter.
/// After scanning `t` positions the flags describe the relations between
/// the two length-`t` truncations.
#[derive(Clone, Copy)]
struct PairScan {
    lt_uv: bool,
    lt_vu: bool,
    le_uv: bool,
    le_vu: bool,
    prec_uv: bool,
    prec_vu: bool,
    lr_uv: bool,
    lr_vu: bool,
    first_diff: Option<Ordering>,
}

impl PairScan {
    fn new() -> PairScan {
        PairScan {
            lt_uv: false,
            lt_vu: false,
            le_uv: true,
            le_vu: true,
            prec_uv: false,
            prec_vu: false,
            lr_uv: false,
            lr_vu: false,
            first_diff: None,
        }
    }

    fn advance(&mut self, a: Letter, b: Letter) {
        if a == Letter::L && b == Letter::R {
            if self.le_uv {
                self.prec_uv = true;
            }
            self.lr_uv = true;
        }
        if b == Letter::L && a == Letter::R {
            if self.le_vu {
                self.prec_vu = true;
            }
            self.lr_vu = true;
        }
        match a.cmp(&b) {
            Ordering::Less => {
                self.lt_uv = true;
                self.le_vu = false;
                self.first_diff.get_or_insert(Ordering::Less);
            }
            Ordering::Greater => {
                self.lt_vu = true;
                self.le_uv = false;
                self.first_diff.get_or_insert(Ordering::Greater);
            }
            Ordering::Equal => {}
        }
    }

    fn equal_so_far(&self) -> bool {
        self.first_diff.is_none()
    }

    fn perp(&self) -> bool {
        self.lt_uv && self.lt_vu
    }

    fn compatible(&self) -> bool {
        match self.first_diff {
            None => true,
            Some(Ordering::Less) => {
                !self.lr_vu && (!self.lr_uv || (self.prec_uv && !self.perp()))
            }
            Some(_) => !self.lr_uv && (!self.lr_vu || (self.prec_vu && !self.perp())),
        }
    }

    fn relation_signature(&self) -> (bool, bool, bool) {
        (self.prec_uv, self.prec_vu, self.perp())
    }
}

/// Levels where the structure genuinely changes: the truncation map from
/// level `i + 1` down to level `i` fails to be a relation-preserving and
/// -reflecting bijection, or some pair becomes incompatible whose
/// truncations were compatible. Returned ascending.
pub fn interesting_levels(tree: &PosetTree) -> Vec<usize> {
    let leaves: Vec<&Word> = tree.leaves.iter().collect();
    let m = leaves.len();
    let max = match tree.max_len() {
        None => return vec![],
        Some(x) => x,
    };
    let idx = |a: usize, b: usize| a * m + b;
    let mut scans = vec![PairScan::new(); m * m];

    // class representatives and counts among leaves alive at truncation
    // length t (alive = length >= t); classes identify equal truncations
    let snapshot = |scans: &[PairScan], t: usize| -> (usize, usize, Vec<usize>) {
        let mut reps = Vec::new();
        let mut n_live = 0;
        for a in 0..m {
            if leaves[a].len() < t {
                continue;
            }
            n_live += 1;
            let dup = reps
                .iter()
                .any(|&r: &usize| scans[idx(r, a)].equal_so_far());
            if !dup {
                reps.push(a);
            }
        }
        (n_live, reps.len(), reps)
    };

    let mut interesting = Vec::new();
    let (mut prev_live, mut prev_classes, _) = snapshot(&scans, 0);
    for t in 1..=max {
        let prev_scans = scans.clone();
        for a in 0..m {
            for b in (a + 1)..m {
                if leaves[a].len() >= t && leaves[b].len() >= t {
                    let (la, lb) = (leaves[a].letter(t - 1), leaves[b].letter(t - 1));
                    scans[idx(a, b)].advance(la, lb);
                }
            }
        }
        let (live, classes, reps) = snapshot(&scans, t);
        let mut hot = live != prev_live || classes != prev_classes;
        if !hot {
            'pairs: for (p, &a) in reps.iter().enumerate() {
                for &b in &reps[p + 1..] {
                    let now = &scans[idx(a, b)];
                    let before = &prev_scans[idx(a, b)];
                    if now.relation_signature() != before.relation_signature()
                        || (!now.compatible() && before.compatible())
                    {
                        hot = true;
                        break 'pairs;
                    }
                }
            }
        }
        if hot {
            interesting.push(t - 1);
        }
        prev_live = live;
        prev_classes = classes;
    }
    interesting
}

/// A tree projected onto its interesting levels, with the induced map on
/// leaves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TauProjection {
    pub tree: PosetTree,
    pub leaf_images: BTreeMap<Word, Word>,
}

fn project_word(w: &Word, keep: &[usize]) -> Word {
    let letters: Vec<Letter> = keep
        .iter()
        .take_while(|&&i| i < w.len())
        .map(|&i| w.letter(i))
        .collect();
    Word::from_letters(letters)
}

/// Deletes every non-interesting character position from every word.
pub fn tau_projection(tree: &PosetTree) -> TauProjection {
    let keep = interesting_levels(tree);
    let leaf_images: BTreeMap<Word, Word> = tree
        .leaves
        .iter()
        .map(|w| (w.clone(), project_word(w, &keep)))
        .collect();
    let tree = PosetTree::closure(leaf_images.values().cloned());
    TauProjection { tree, leaf_images }
}

/// The projection of [`tau_projection`] without the leaf map.
pub fn tau(tree: &PosetTree) -> PosetTree {
    tau_projection(tree).tree
}
