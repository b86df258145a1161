//! Finite stand-ins for the generic partial order, and the experiment
//! that colours every embedding of a small pattern into one.
//!
//! An ambient poset is grown one element at a time. Each new element
//! realizes a one-point extension described over a small witness set:
//! some witnesses strictly below it, some strictly above, the rest
//! incomparable, with all transitive consequences applied and everything
//! not forced left incomparable. The exhaustive strategy cycles through
//! these descriptions with a persistent cursor so all small witness
//! configurations get realized; the random strategy samples them from a
//! seeded generator. Both are deterministic, and growing the same build
//! to a larger size keeps the smaller build as an induced prefix.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_types, EnumerateError, EnumerationMode};
use crate::files::PosetFile;
use crate::pipeline::{chi, psi_construct, ChiError, PsiError, TypedColour};
use crate::poset::FinitePoset;
use crate::tree::leaf_poset;

/// Largest ambient [`build_ambient`] will construct.
pub const AMBIENT_SIZE_CAP: usize = 40;

const RANDOM_RETRIES: usize = 64;

/// How new elements pick their one-point extensions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuildStrategy {
    #[default]
    Exhaustive,
    Random,
}

impl std::fmt::Display for BuildStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BuildStrategy::Exhaustive => write!(f, "exhaustive"),
            BuildStrategy::Random => write!(f, "random"),
        }
    }
}

impl std::str::FromStr for BuildStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<BuildStrategy, String> {
        match s {
            "exhaustive" => Ok(BuildStrategy::Exhaustive),
            "random" => Ok(BuildStrategy::Random),
            other => Err(format!("unknown strategy {other:?}, expected exhaustive or random")),
        }
    }
}

/// Where an ambient poset came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Built { seed: u64, strategy: BuildStrategy },
    External,
}

/// A finite ambient poset with its construction provenance and a
/// richness measure: how many distinct one-point extensions its elements
/// realized over their prefixes (as down-set/up-set pairs).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AmbientPoset {
    pub poset: FinitePoset,
    pub richness: usize,
    pub provenance: Provenance,
}

impl AmbientPoset {
    /// Wraps a poset loaded from elsewhere; richness is still computed
    /// from its element order.
    pub fn external(poset: FinitePoset) -> AmbientPoset {
        let richness = richness(&poset);
        AmbientPoset { poset, richness, provenance: Provenance::External }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
#[error("ambient size {n} exceeds the cap of {cap} elements")]
pub struct AmbientSizeExceeded {
    pub n: usize,
    pub cap: usize,
}

/// Distinct (down-set, up-set) pairs realized over element prefixes.
pub fn richness(p: &FinitePoset) -> usize {
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for k in 0..p.n() {
        let down: Vec<usize> = (0..k).filter(|&i| p.lt(i, k)).collect();
        let up: Vec<usize> = (0..k).filter(|&i| p.lt(k, i)).collect();
        seen.insert((down, up));
    }
    seen.len()
}

/// Which side of the new element a witness lands on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Below,
    Above,
    Incomparable,
}

const SIDES: [Side; 3] = [Side::Below, Side::Above, Side::Incomparable];

/// Appends one element related to `subset` exactly as `sides` says,
/// with transitive consequences and nothing else. `None` when the
/// description contradicts itself or the existing order.
fn extend(poset: &FinitePoset, subset: &[usize], sides: &[Side]) -> Option<FinitePoset> {
    let m = poset.n();
    let mut below = vec![false; m];
    let mut above = vec![false; m];
    for (&s, &side) in subset.iter().zip(sides) {
        match side {
            Side::Below => {
                below[s] = true;
                for i in 0..m {
                    if poset.lt(i, s) {
                        below[i] = true;
                    }
                }
            }
            Side::Above => {
                above[s] = true;
                for i in 0..m {
                    if poset.lt(s, i) {
                        above[i] = true;
                    }
                }
            }
            Side::Incomparable => {}
        }
    }
    if (0..m).any(|i| below[i] && above[i]) {
        return None;
    }
    // the consequences must not spill onto a witness pinned incomparable
    for (&s, &side) in subset.iter().zip(sides) {
        let actual = if below[s] {
            Side::Below
        } else if above[s] {
            Side::Above
        } else {
            Side::Incomparable
        };
        if actual != side {
            return None;
        }
    }
    let mut pairs: Vec<(usize, usize)> = poset.pairs();
    for i in 0..m {
        if below[i] {
            pairs.push((i, m));
        }
        if above[i] {
            pairs.push((m, i));
        }
    }
    FinitePoset::new(m + 1, pairs).ok()
}

/// Every one-point extension description over at most three witnesses,
/// in a fixed order: the empty description, then growing witness sets in
/// lexicographic order, each with all side assignments.
fn all_specs(m: usize) -> Vec<(Vec<usize>, Vec<Side>)> {
    let mut out = vec![(vec![], vec![])];
    let push_assignments = |subset: Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<Side>)>| {
        let k = subset.len();
        for code in 0..3usize.pow(k as u32) {
            let mut sides = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                sides.push(SIDES[c % 3]);
                c /= 3;
            }
            out.push((subset.clone(), sides));
        }
    };
    for a in 0..m {
        push_assignments(vec![a], &mut out);
    }
    for a in 0..m {
        for b in (a + 1)..m {
            push_assignments(vec![a, b], &mut out);
        }
    }
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                push_assignments(vec![a, b, c], &mut out);
            }
        }
    }
    out
}

/// Grows an `n`-element ambient poset, deterministically per
/// `(n, seed, strategy)`. The result of a smaller `n` with the same seed
/// and strategy is the induced order on the first elements.
pub fn build_ambient(
    n: usize,
    seed: u64,
    strategy: BuildStrategy,
) -> Result<AmbientPoset, AmbientSizeExceeded> {
    if n > AMBIENT_SIZE_CAP {
        return Err(AmbientSizeExceeded { n, cap: AMBIENT_SIZE_CAP });
    }
    let mut poset = FinitePoset::antichain(0);
    let mut cursor: usize = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while poset.n() < n {
        poset = match strategy {
            BuildStrategy::Exhaustive => {
                let specs = all_specs(poset.n());
                let start = cursor % specs.len();
                let mut chosen = None;
                for offset in 0..specs.len() {
                    let idx = (start + offset) % specs.len();
                    let (subset, sides) = &specs[idx];
                    if let Some(next) = extend(&poset, subset, sides) {
                        cursor = cursor + offset + 1;
                        chosen = Some(next);
                        break;
                    }
                }
                chosen.expect("the empty description always extends")
            }
            BuildStrategy::Random => {
                let m = poset.n();
                let mut found = None;
                for _ in 0..RANDOM_RETRIES {
                    let k = rng.gen_range(0..=m.min(3));
                    let mut subset = sample(&mut rng, m.max(1), k.min(m)).into_vec();
                    subset.sort_unstable();
                    let sides: Vec<Side> =
                        (0..subset.len()).map(|_| SIDES[rng.gen_range(0..3)]).collect();
                    if let Some(next) = extend(&poset, &subset, &sides) {
                        found = Some(next);
                        break;
                    }
                }
                found.unwrap_or_else(|| {
                    extend(&poset, &[], &[]).expect("the empty description always extends")
                })
            }
        };
    }
    let richness = richness(&poset);
    Ok(AmbientPoset { poset, richness, provenance: Provenance::Built { seed, strategy } })
}

/// One colour with how many embeddings realized it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ColourCount {
    pub colour: TypedColour,
    pub count: usize,
}

/// The outcome of colouring every embedding of a pattern into an ambient
/// poset, compared against the full enumerated colour set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RealizationCensus {
    pub pattern: PosetFile,
    pub ambient_size: usize,
    pub ambient_richness: usize,
    pub embedding_count: usize,
    /// Realized colours with multiplicities, in colour order.
    pub realized: Vec<ColourCount>,
    /// All colours the degree predicts: every enumerated type paired with
    /// every isomorphism onto its leaves.
    pub expected_count: usize,
    pub unrealized: Vec<TypedColour>,
    /// Realized colours outside the expected set. Always empty; anything
    /// here is a bug.
    pub unsound: Vec<TypedColour>,
}

impl RealizationCensus {
    pub fn realized_count(&self) -> usize {
        self.realized.len()
    }

    pub fn coverage(&self) -> f64 {
        if self.expected_count == 0 {
            return 1.0;
        }
        self.realized.len() as f64 / self.expected_count as f64
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum RealizeError {
    #[error("pattern: {0}")]
    Pattern(#[from] EnumerateError),
    #[error("ambient rewriting: {0}")]
    Ambient(#[from] PsiError),
    #[error("colouring: {0}")]
    Colour(#[from] ChiError),
}

/// Every colour the enumeration predicts for `pattern`: each type with
/// each isomorphism from the pattern onto its leaf poset.
pub fn expected_colours(pattern: &FinitePoset) -> Result<Vec<TypedColour>, EnumerateError> {
    let enumeration = enumerate_types(pattern, EnumerationMode::Diagonal)?;
    let mut out = Vec::new();
    for tree in enumeration.types {
        let (lp, _) = leaf_poset(&tree).expect("enumerated types are nonempty");
        for embedding in pattern.all_embeddings(&lp) {
            let assignment: Vec<usize> = embedding.as_slice().to_vec();
            out.push(TypedColour { tree: tree.clone(), assignment });
        }
    }
    out.sort();
    Ok(out)
}

/// Colours every embedding of `pattern` into the ambient poset and
/// compares the realized colour set with [`expected_colours`].
pub fn realization_experiment(
    pattern: &FinitePoset,
    ambient: &AmbientPoset,
) -> Result<RealizationCensus, RealizeError> {
    let expected = expected_colours(pattern)?;
    let psi = psi_construct(&ambient.poset)?.words;
    let embeddings = pattern.all_embeddings(&ambient.poset);
    let colours: Vec<TypedColour> = embeddings
        .par_iter()
        .map(|f| chi(pattern, f, &psi))
        .collect::<Result<_, _>>()?;

    let mut counts: BTreeMap<TypedColour, usize> = BTreeMap::new();
    for colour in colours {
        *counts.entry(colour).or_insert(0) += 1;
    }
    let expected_set: BTreeSet<&TypedColour> = expected.iter().collect();
    let unsound: Vec<TypedColour> =
        counts.keys().filter(|c| !expected_set.contains(c)).cloned().collect();
    let unrealized: Vec<TypedColour> =
        expected.iter().filter(|c| !counts.contains_key(c)).cloned().collect();
    Ok(RealizationCensus {
        pattern: PosetFile::from_poset(pattern),
        ambient_size: ambient.poset.n(),
        ambient_richness: ambient.richness,
        embedding_count: embeddings.len(),
        realized: counts.into_iter().map(|(colour, count)| ColourCount { colour, count }).collect(),
        expected_count: expected.len(),
        unrealized,
        unsound,
    })
}
