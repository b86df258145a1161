//! Big Ramsey degrees of finite partial orders inside the generic
//! partial order.
//!
//! The toolkit is organised around one pipeline:
//!
//! * [`word`] defines the three-letter alphabet `L < X < R` and the
//!   relations between words (`<lex`, strict precedence, incomparability,
//!   compatibility) that every other module recomputes from letters.
//! * [`poset`] holds finite strict partial orders with elements `0..n-1`,
//!   embedding search, and automorphism counting.
//! * [`tree`] stores poset-types as subtree-closed word sets, validates
//!   them level by level against the four admissible level events, and
//!   projects sub-closures back onto types.
//! * [`enumerate`] searches the event space for every type realising a
//!   given poset and turns the count into a big Ramsey degree.
//! * [`pipeline`] builds the explicit word embeddings: the direct
//!   letterwise embedding, its rewrite into a poset-type over the full
//!   ambient, and the induced colouring of small subposets.
//! * [`ambient`] grows finite stand-ins for the generic order and runs
//!   realization censuses against them.
//! * [`files`] fixes the JSON formats shared with the command-line tool,
//!   and [`dot`] renders trees for Graphviz.

pub mod ambient;
pub mod dot;
pub mod enumerate;
pub mod files;
pub mod pipeline;
pub mod poset;
pub mod tree;
pub mod word;

pub use ambient::{build_ambient, realization_experiment, AmbientPoset, BuildStrategy, RealizationCensus};
pub use enumerate::{big_ramsey_degree, enumerate_types, oracle_enumerate, DegreeReport, EnumerationMode};
pub use pipeline::{check_phi, chi, phi, psi_construct, EmbeddingWords, PsiOutput, TypedColour};
pub use poset::{FinitePoset, PosetEmbedding, PosetViolation};
pub use tree::{
    classify_level, is_poset_type, Classification, LevelEvent, PosetTree, TypeCertificate,
};
pub use word::{
    append_all, compatible, lex_compare, perp, precedes, precedes_eq, related, Letter, Word,
};
