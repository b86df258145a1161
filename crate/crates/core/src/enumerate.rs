//! Exhaustive search for every poset-type realising a given finite poset,
//! and the big Ramsey degree that count determines.
//!
//! The searcher walks event sequences from the root level `{ε}`. A state
//! is the pair (current level, dropped leaves); its tree is the closure of
//! both, and distinct event sequences always reach distinct states, so the
//! walk needs no visited set. Two prunes keep it small, both exact:
//! the number of leaves a state commits to (`dropped + level width`) never
//! decreases and must end at `|Q|`, and the decided word relations must
//! admit an injective order-respecting assignment into `Q`.
//!
//! [`oracle_enumerate`] is the deliberately naive counterpart used to
//! validate the searcher: a breadth-first walk of all event sequences with
//! no pruning beyond a level-width cap of `|Q| + 1`, filtered after the
//! fact by revalidating each candidate tree level by level.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::files::PosetFile;
use crate::poset::FinitePoset;
use crate::poset::SizeCapExceeded;
use crate::tree::{apply_event, is_poset_type, leaf_poset, LevelEvent, PosetTree};
use crate::word::{perp, precedes, related, Word};

/// Largest poset the main searcher accepts by default.
pub const ENUMERATION_SIZE_CAP: usize = 5;

/// Largest poset the naive oracle accepts.
pub const ORACLE_SIZE_CAP: usize = 4;

/// Hard ceiling on oracle states before it gives up.
pub const ORACLE_STATE_BUDGET: usize = 50_000_000;

/// Search depth sufficient for every type of an `n`-element poset:
/// one branch and one stop per element beyond the first, plus one
/// relation event per ordered pair.
pub fn default_depth_cap(n: usize) -> usize {
    assert!(n >= 1);
    2 * (n - 1) + n * (n - 1)
}

/// Which trees count as types of `Q`.
///
/// `Diagonal` keeps only trees whose leaves sit at pairwise distinct
/// levels (equivalently, whose final level is a single word); `Verbatim`
/// keeps every tree whose leaf poset is isomorphic to `Q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumerationMode {
    #[default]
    Diagonal,
    Verbatim,
}

impl std::fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnumerationMode::Diagonal => write!(f, "diagonal"),
            EnumerationMode::Verbatim => write!(f, "verbatim"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    pub mode: EnumerationMode,
    pub size_cap: usize,
    /// `None` picks [`default_depth_cap`].
    pub depth_cap: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> EnumerateOptions {
        EnumerateOptions {
            mode: EnumerationMode::default(),
            size_cap: ENUMERATION_SIZE_CAP,
            depth_cap: None,
        }
    }
}

/// The outcome of a type search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enumeration {
    /// Types in canonical order (leaf lists sorted by length, then lex).
    pub types: Vec<PosetTree>,
    pub mode: EnumerationMode,
    pub depth_cap: usize,
    /// False when some branch of the search was cut off by the depth cap
    /// while events still applied; the list may then be incomplete.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("the empty poset has no types to enumerate")]
    EmptyPoset,
    #[error(transparent)]
    SizeCap(#[from] SizeCapExceeded),
}

/// Enumerates the types of `q` under the default caps.
pub fn enumerate_types(q: &FinitePoset, mode: EnumerationMode) -> Result<Enumeration, EnumerateError> {
    enumerate_types_with(q, EnumerateOptions { mode, ..EnumerateOptions::default() })
}

pub fn enumerate_types_with(
    q: &FinitePoset,
    options: EnumerateOptions,
) -> Result<Enumeration, EnumerateError> {
    let n = q.n();
    if n == 0 {
        return Err(EnumerateError::EmptyPoset);
    }
    if n > options.size_cap {
        return Err(SizeCapExceeded { n, cap: options.size_cap }.into());
    }
    let depth_cap = options.depth_cap.unwrap_or_else(|| default_depth_cap(n));
    let mut search = Search {
        q,
        mode: options.mode,
        depth_cap,
        found: BTreeSet::new(),
        truncated: false,
    };
    search.dfs(&BTreeSet::from([Word::empty()]), &Vec::new());
    Ok(Enumeration {
        types: search.found.into_iter().collect(),
        mode: options.mode,
        depth_cap,
        complete: !search.truncated,
    })
}

struct Search<'a> {
    q: &'a FinitePoset,
    mode: EnumerationMode,
    depth_cap: usize,
    found: BTreeSet<PosetTree>,
    truncated: bool,
}

impl Search<'_> {
    fn dfs(&mut self, level: &BTreeSet<Word>, dropped: &[Word]) {
        let n = self.q.n();
        if level.len() + dropped.len() == n {
            let accept = match self.mode {
                EnumerationMode::Diagonal => level.len() == 1,
                EnumerationMode::Verbatim => true,
            };
            if accept {
                let tree = PosetTree::closure(level.iter().chain(dropped).cloned());
                if let Ok((lp, _)) = leaf_poset(&tree) {
                    if lp.isomorphic(self.q).is_some() {
                        self.found.insert(tree);
                    }
                }
            }
        }
        let depth = level.iter().next().map(Word::len).unwrap_or(0);
        let successors = self.successors(level, dropped);
        if depth == self.depth_cap {
            if !successors.is_empty() {
                self.truncated = true;
            }
            return;
        }
        for (next_level, next_dropped) in successors {
            self.dfs(&next_level, &next_dropped);
        }
    }

    /// Viable successor states, generated in leaf, branch, new-perp,
    /// new-leq order with parameters ascending lexicographically.
    fn successors(
        &self,
        level: &BTreeSet<Word>,
        dropped: &[Word],
    ) -> Vec<(BTreeSet<Word>, Vec<Word>)> {
        let n = self.q.n();
        let count = level.len() + dropped.len();
        let mut out = Vec::new();

        // leaf events; a singleton level never drops, its word simply ends
        if level.len() > 1 {
            for w in level {
                let event = LevelEvent::Leaf { word: w.clone() };
                if let Ok(next) = apply_event(level, &event) {
                    let mut nd = dropped.to_vec();
                    nd.push(w.clone());
                    if self.viable(&next, &nd) {
                        out.push((next, nd));
                    }
                }
            }
        }

        // branch events commit to one more leaf
        if count + 1 <= n {
            for w in level {
                let event = LevelEvent::Branch { word: w.clone() };
                let next = apply_event(level, &event).expect("branch is unconditional");
                if self.viable(&next, dropped) {
                    out.push((next, dropped.to_vec()));
                }
            }
        }

        let words: Vec<&Word> = level.iter().collect();
        for i in 0..words.len() {
            for j in (i + 1)..words.len() {
                if related(words[i], words[j]) {
                    continue;
                }
                for event in [
                    LevelEvent::NewPerp { lower: words[i].clone(), upper: words[j].clone() },
                    LevelEvent::NewLeq { lower: words[i].clone(), upper: words[j].clone() },
                ] {
                    if let Ok(next) = apply_event(level, &event) {
                        if self.viable(&next, dropped) {
                            out.push((next, dropped.to_vec()));
                        }
                    }
                }
            }
        }
        out
    }

    fn viable(&self, level: &BTreeSet<Word>, dropped: &[Word]) -> bool {
        if level.len() + dropped.len() > self.q.n() {
            return false;
        }
        let words: Vec<&Word> = dropped.iter().chain(level.iter()).collect();
        embeddable(&words, self.q)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Lt,
    Gt,
    Perp,
    Free,
}

fn word_rel(u: &Word, v: &Word) -> Rel {
    if precedes(u, v) {
        Rel::Lt
    } else if precedes(v, u) {
        Rel::Gt
    } else if perp(u, v) {
        Rel::Perp
    } else {
        Rel::Free
    }
}

/// Whether the decided relations among `words` admit an injective map
/// into `q` sending decided precedence to the strict order and decided
/// incomparability to incomparability. Undecided pairs are free: they can
/// still develop either way, so they constrain nothing.
fn embeddable(words: &[&Word], q: &FinitePoset) -> bool {
    let k = words.len();
    let mut rel = vec![Rel::Free; k * k];
    for a in 0..k {
        for b in (a + 1)..k {
            rel[a * k + b] = word_rel(words[a], words[b]);
        }
    }
    let mut assign = Vec::with_capacity(k);
    let mut used = vec![false; q.n()];
    assign_words(k, &rel, q, &mut assign, &mut used)
}

fn assign_words(
    k: usize,
    rel: &[Rel],
    q: &FinitePoset,
    assign: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let a = assign.len();
    if a == k {
        return true;
    }
    't: for t in 0..q.n() {
        if used[t] {
            continue;
        }
        for (b, &tb) in assign.iter().enumerate() {
            let ok = match rel[b * k + a] {
                Rel::Lt => q.lt(tb, t),
                Rel::Gt => q.lt(t, tb),
                Rel::Perp => q.incomparable(tb, t),
                Rel::Free => true,
            };
            if !ok {
                continue 't;
            }
        }
        assign.push(t);
        used[t] = true;
        if assign_words(k, rel, q, assign, used) {
            return true;
        }
        assign.pop();
        used[t] = false;
    }
    false
}

/// One enumerated type with its validating event sequence. Certificates
/// serialize as their display strings, same as everywhere else on the
/// command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub leaves: Vec<Word>,
    #[serde(serialize_with = "events_as_strings")]
    pub certificate: Vec<LevelEvent>,
}

fn events_as_strings<S: serde::Serializer>(events: &[LevelEvent], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(events.iter().map(|e| e.to_string()))
}

/// Everything the degree computation produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub q: PosetFile,
    pub mode: EnumerationMode,
    pub t_count: usize,
    pub aut: usize,
    pub degree: usize,
    pub complete: bool,
    pub depth_cap: usize,
    pub types: Vec<TypeReport>,
}

#[derive(Debug, thiserror::Error)]
pub enum DegreeError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

/// Counts the types of `q` and multiplies by its automorphisms.
pub fn big_ramsey_degree(q: &FinitePoset, mode: EnumerationMode) -> Result<DegreeReport, DegreeError> {
    big_ramsey_degree_with(q, EnumerateOptions { mode, ..EnumerateOptions::default() })
}

pub fn big_ramsey_degree_with(
    q: &FinitePoset,
    options: EnumerateOptions,
) -> Result<DegreeReport, DegreeError> {
    let enumeration = enumerate_types_with(q, options)?;
    let aut = q
        .aut_count_with_cap(q.n())
        .expect("cap equals the element count");
    let mut types = Vec::with_capacity(enumeration.types.len());
    for tree in &enumeration.types {
        let certificate = is_poset_type(tree)
            .map_err(|e| DegreeError::Internal(format!("enumerated tree fails validation: {e}")))?;
        types.push(TypeReport {
            leaves: tree.canonical_leaves(),
            certificate: certificate.events().to_vec(),
        });
    }
    Ok(DegreeReport {
        q: PosetFile::from_poset(q),
        mode: enumeration.mode,
        t_count: enumeration.types.len(),
        aut,
        degree: enumeration.types.len() * aut,
        complete: enumeration.complete,
        depth_cap: enumeration.depth_cap,
        types,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("the empty poset has no types to enumerate")]
    EmptyPoset,
    #[error("the oracle is restricted to posets with at most {cap} elements, got {n}")]
    SizeCap { n: usize, cap: usize },
    #[error("oracle state budget of {budget} exhausted")]
    StateBudget { budget: usize },
}

/// Naive reference enumeration: breadth-first over all event sequences up
/// to `depth_cap`, pruning only levels wider than `|Q| + 1`, then keeping
/// the trees with exactly `|Q|` leaves that revalidate level by level and
/// whose leaf poset is isomorphic to `Q`. Returns both diagonal and
/// non-diagonal trees; filter with [`PosetTree::is_diagonal`] to compare
/// against a diagonal enumeration.
pub fn oracle_enumerate(q: &FinitePoset, depth_cap: usize) -> Result<Vec<PosetTree>, OracleError> {
    let n = q.n();
    if n == 0 {
        return Err(OracleError::EmptyPoset);
    }
    if n > ORACLE_SIZE_CAP {
        return Err(OracleError::SizeCap { n, cap: ORACLE_SIZE_CAP });
    }

    let mut queue: VecDeque<(BTreeSet<Word>, Vec<Word>)> = VecDeque::new();
    queue.push_back((BTreeSet::from([Word::empty()]), Vec::new()));
    let mut candidates: BTreeSet<PosetTree> = BTreeSet::new();
    let mut explored: usize = 0;

    while let Some((level, dropped)) = queue.pop_front() {
        explored += 1;
        if explored > ORACLE_STATE_BUDGET {
            return Err(OracleError::StateBudget { budget: ORACLE_STATE_BUDGET });
        }
        if level.len() + dropped.len() == n {
            candidates.insert(PosetTree::closure(level.iter().chain(&dropped).cloned()));
        }
        let depth = match level.iter().next() {
            None => continue, // a lone word ended; nothing can follow
            Some(w) => w.len(),
        };
        if depth >= depth_cap {
            continue;
        }
        for event in naive_events(&level) {
            if let Ok(next) = apply_event(&level, &event) {
                if next.len() > n + 1 {
                    continue;
                }
                let mut nd = dropped.clone();
                if let LevelEvent::Leaf { word } = &event {
                    nd.push(word.clone());
                }
                queue.push_back((next, nd));
            }
        }
    }

    let mut out = Vec::new();
    for tree in candidates {
        if tree.leaf_count() != n || is_poset_type(&tree).is_err() {
            continue;
        }
        let (lp, _) = leaf_poset(&tree).expect("candidate trees are nonempty");
        if lp.isomorphic(q).is_some() {
            out.push(tree);
        }
    }
    Ok(out)
}

fn naive_events(level: &BTreeSet<Word>) -> Vec<LevelEvent> {
    let mut events = Vec::new();
    for w in level {
        events.push(LevelEvent::Leaf { word: w.clone() });
    }
    for w in level {
        events.push(LevelEvent::Branch { word: w.clone() });
    }
    let words: Vec<&Word> = level.iter().collect();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            events.push(LevelEvent::NewPerp { lower: words[i].clone(), upper: words[j].clone() });
            events.push(LevelEvent::NewLeq { lower: words[i].clone(), upper: words[j].clone() });
        }
    }
    events
}
