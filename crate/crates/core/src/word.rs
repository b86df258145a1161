//! Words over the three-letter alphabet `L < X < R` and the relations
//! between them that drive everything else in this crate: lexicographic
//! order, strict precedence, incomparability, and compatibility.
//!
//! Every higher-level structure (trees, types, embeddings) recomputes
//! these relations from the letters rather than caching them, so this
//! module is the single source of truth for what the symbols mean.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// One letter of the working alphabet. The derived order is `L < X < R`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    L,
    X,
    R,
}

impl Letter {
    /// All letters in ascending order.
    pub const ALL: [Letter; 3] = [Letter::L, Letter::X, Letter::R];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'L' => Some(Letter::L),
            'X' => Some(Letter::X),
            'R' => Some(Letter::R),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::X => 'X',
            Letter::R => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word over [`Letter`].
///
/// The derived `Ord` is lexicographic with the convention that a proper
/// prefix precedes every extension of itself, which is exactly the
/// `<lex` order used throughout:
///
/// ```
/// use poset_ramsey::Word;
/// let a: Word = "L".parse().unwrap();
/// let b: Word = "LX".parse().unwrap();
/// assert!(a < b);
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

/// Error produced when parsing a word from text fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid letter {found:?} at position {position}; words use only 'L', 'X', 'R'")]
pub struct ParseWordError {
    pub position: usize,
    pub found: char,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Word {
        Word(letters.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Letter at position `i`. Panics if `i >= len`.
    pub fn letter(&self, i: usize) -> Letter {
        self.0[i]
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The word with the final letter removed, or `None` for the empty word.
    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    /// Initial segment of length `i`. Panics if `i > len`.
    pub fn initial_segment(&self, i: usize) -> Word {
        assert!(i <= self.0.len(), "initial segment longer than word");
        Word(self.0[..i].to_vec())
    }

    /// True when `self` is an initial segment of `other` (possibly equal).
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.0.len() <= other.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// A copy of `self` with `c` appended.
    pub fn append(&self, c: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(c);
        Word(v)
    }

    /// Order by length first, then lexicographically. This is the order
    /// used for canonical leaf labellings.
    pub fn canonical_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Word, ParseWordError> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, found) in s.chars().enumerate() {
            match Letter::from_char(found) {
                Some(l) => letters.push(l),
                None => return Err(ParseWordError { position, found }),
            }
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Lexicographic comparison, with a proper prefix ordered before its
/// extensions. Identical to `u.cmp(v)`; named for use at call sites that
/// talk about the order rather than the type.
pub fn lex_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// Strict precedence: some position `i` has `(u_i, v_i) = (L, R)` while
/// every earlier position satisfies `u_j <= v_j`.
///
/// ```
/// use poset_ramsey::{precedes, Word};
/// let a: Word = "LR".parse().unwrap();
/// let b: Word = "RL".parse().unwrap();
/// assert!(precedes(&a, &b));
/// assert!(!precedes(&b, &a));
/// ```
pub fn precedes(u: &Word, v: &Word) -> bool {
    let m = u.len().min(v.len());
    for i in 0..m {
        match (u.letter(i), v.letter(i)) {
            (Letter::L, Letter::R) => return true,
            (a, b) if a > b => return false,
            _ => {}
        }
    }
    false
}

/// Non-strict precedence: [`precedes`] or syntactic equality.
pub fn precedes_eq(u: &Word, v: &Word) -> bool {
    u == v || precedes(u, v)
}

/// Incomparability witness: positions ordering the two words both ways.
/// `perp` is symmetric by construction.
pub fn perp(u: &Word, v: &Word) -> bool {
    let m = u.len().min(v.len());
    let (mut uv, mut vu) = (false, false);
    for i in 0..m {
        match u.letter(i).cmp(&v.letter(i)) {
            Ordering::Less => uv = true,
            Ordering::Greater => vu = true,
            Ordering::Equal => {}
        }
        if uv && vu {
            return true;
        }
    }
    false
}

/// True when the pair is decided: precedence either way, equality, or
/// incomparability.
pub fn related(u: &Word, v: &Word) -> bool {
    u == v || precedes(u, v) || precedes(v, u) || perp(u, v)
}

/// Compatibility of a pair, evaluated after orienting it lexicographically.
/// For `a <=lex b` the pair is compatible when no position reads `(R, L)`
/// and, if some position reads `(L, R)`, the witness is genuine: `a`
/// strictly precedes `b` and the two are not incomparable.
pub fn compatible(u: &Word, v: &Word) -> bool {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    let m = a.len().min(b.len());
    let mut has_lr = false;
    for i in 0..m {
        match (a.letter(i), b.letter(i)) {
            (Letter::R, Letter::L) => return false,
            (Letter::L, Letter::R) => has_lr = true,
            _ => {}
        }
    }
    !has_lr || (precedes(a, b) && !perp(a, b))
}

/// Appends `c` to every word of a set. The empty set maps to itself.
pub fn append_all<'a, I>(words: I, c: Letter) -> BTreeSet<Word>
where
    I: IntoIterator<Item = &'a Word>,
{
    words.into_iter().map(|w| w.append(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_displays() {
        assert_eq!(w("LXR").to_string(), "LXR");
        assert_eq!(w("").to_string(), "");
        assert_eq!(
            "LAX".parse::<Word>(),
            Err(ParseWordError { position: 1, found: 'A' })
        );
    }

    #[test]
    fn lex_order_prefers_prefixes() {
        assert_eq!(lex_compare(&w("L"), &w("LX")), Ordering::Less);
        assert_eq!(lex_compare(&w("X"), &w("R")), Ordering::Less);
        assert_eq!(lex_compare(&w("XR"), &w("XL")), Ordering::Greater);
        assert_eq!(lex_compare(&w(""), &w("L")), Ordering::Less);
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        assert_eq!(w("R").canonical_cmp(&w("LL")), Ordering::Less);
        assert_eq!(w("XL").canonical_cmp(&w("RR")), Ordering::Less);
    }

    #[test]
    fn precedence_examples() {
        assert!(precedes(&w("LR"), &w("RL")));
        assert!(!precedes(&w("RL"), &w("LR")));
        assert!(!precedes(&w("X"), &w("R")));
        assert!(!precedes(&w("R"), &w("X")));
        // witness invalidated by an earlier strict descent
        assert!(!precedes(&w("RLR"), &w("LRR")));
        // clean prefix then (L, R)
        assert!(precedes(&w("XL"), &w("XR")));
        assert!(precedes(&w("XLX"), &w("RR")));
    }

    #[test]
    fn perp_examples() {
        assert!(perp(&w("LR"), &w("RL")));
        assert!(!perp(&w("X"), &w("R")));
        assert!(perp(&w("XR"), &w("RX")));
        assert!(!perp(&w("LL"), &w("LR")));
    }

    #[test]
    fn related_includes_equality() {
        assert!(related(&w("XR"), &w("XR")));
        assert!(related(&w("LR"), &w("RL")));
        assert!(!related(&w("X"), &w("R")));
        assert!(!related(&w(""), &w("R")));
    }

    #[test]
    fn compatibility_examples() {
        assert!(!compatible(&w("LR"), &w("RL")));
        assert!(compatible(&w("XX"), &w("XR")));
        assert!(compatible(&w("XR"), &w("RX")));
        assert!(compatible(&w("XL"), &w("RR")));
        assert!(compatible(&w("X"), &w("R")));
        assert!(compatible(&w("XLX"), &w("XLX")));
        // rejected by the (R, L) clause
        assert!(!compatible(&w("LRL"), &w("RLR")));
        // rejected by the (L, R) clause: the pair is incomparable
        assert!(!compatible(&w("LX"), &w("RL")));
    }

    #[test]
    fn append_all_on_empty_set() {
        let empty: BTreeSet<Word> = BTreeSet::new();
        assert!(append_all(&empty, Letter::X).is_empty());
    }

    #[test]
    fn append_all_appends() {
        let s: BTreeSet<Word> = [w("X"), w("R")].into();
        let t: BTreeSet<Word> = [w("XL"), w("RL")].into();
        assert_eq!(append_all(&s, Letter::L), t);
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(
            prop::sample::select(vec![Letter::L, Letter::X, Letter::R]),
            0..=max_len,
        )
        .prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn perp_is_symmetric(u in arb_word(10), v in arb_word(10)) {
            prop_assert_eq!(perp(&u, &v), perp(&v, &u));
        }

        #[test]
        fn precedes_is_antisymmetric(u in arb_word(10), v in arb_word(10)) {
            prop_assert!(!(precedes(&u, &v) && precedes(&v, &u)));
        }

        #[test]
        fn precedes_is_transitive(u in arb_word(8), v in arb_word(8), z in arb_word(8)) {
            if precedes(&u, &v) && precedes(&v, &z) {
                prop_assert!(precedes(&u, &z));
            }
        }

        #[test]
        fn relations_are_prefix_monotone(u in arb_word(8), v in arb_word(8), a in any::<u8>(), b in any::<u8>()) {
            let ue = u.append(Letter::ALL[(a % 3) as usize]);
            let ve = v.append(Letter::ALL[(b % 3) as usize]);
            if precedes(&u, &v) {
                prop_assert!(precedes(&ue, &ve));
            }
            if perp(&u, &v) {
                prop_assert!(perp(&ue, &ve));
            }
        }

        #[test]
        fn first_difference_orders_equal_length_words(u in arb_word(10), v in arb_word(10)) {
            let m = u.len().min(v.len());
            let u = u.initial_segment(m);
            let v = v.initial_segment(m);
            if u < v {
                let i = (0..m).find(|&i| u.letter(i) != v.letter(i));
                prop_assert!(i.is_some());
                let i = i.unwrap();
                prop_assert!(u.letter(i) < v.letter(i));
            }
        }

        #[test]
        fn precedes_implies_related_and_not_perp_when_compatible(u in arb_word(10), v in arb_word(10)) {
            if compatible(&u, &v) && precedes(&u, &v) {
                prop_assert!(!perp(&u, &v));
            }
        }
    }
}
