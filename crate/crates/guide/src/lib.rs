//! Doc-tests for the book chapters. Each chapter's code blocks live in
//! the book sources; including them here keeps the prose and the tests
//! from drifting apart.
#![doc = include_str!("../../../book/src/introduction.md")]
#![doc = include_str!("../../../book/src/words.md")]
#![doc = include_str!("../../../book/src/posets.md")]
#![doc = include_str!("../../../book/src/poset-types.md")]
#![doc = include_str!("../../../book/src/enumeration.md")]
#![doc = include_str!("../../../book/src/embeddings.md")]
#![doc = include_str!("../../../book/src/ambients.md")]
#![doc = include_str!("../../../book/src/cli.md")]
