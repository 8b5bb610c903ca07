//! Executable set-operads of words over the max-monoid `{0, …, γ}`.
//!
//! The library realizes two families of nonsymmetric set-operads as
//! computations on plain words:
//!
//! * `Dias_γ` — words containing exactly one `0`, the operad underlying
//!   algebras with `2γ` associative products (module [`dias`]);
//! * `Trias_γ` — words containing at least one `0` (module [`trias`]).
//!
//! Both arise inside the operad `T M_γ` of all words over the monoid
//! `({0, …, γ}, max)` built in [`words`]. On top of the word model the
//! library provides free-operad syntax trees with grafting and evaluation
//! maps ([`syntax`]), a convergent quadratic rewrite system whose normal
//! forms are hook-shaped trees ([`rewrite`]), the K-basis of exact-rational
//! linear combinations with its closed-form composition ([`linear`]),
//! algebras over these operads together with the construction `M`
//! ([`algebra`]), and a batch verification suite ([`checks`]) behind the
//! `pluriops` command-line tool.
//!
//! Everything is exact: enumeration, dimension formulas, rewriting and
//! linear algebra use integers and rationals only.
//!
//! ```
//! use pluriops::words::Word;
//!
//! let x = Word::parse("211201", 4)?;
//! let y = Word::parse("31103", 4)?;
//! assert_eq!(x.compose(4, &y)?.to_string(), "2113222301");
//!
//! let hook = pluriops::syntax::hook(&Word::parse("102", 2)?)?;
//! assert_eq!(hook.to_string(), "(L2 (R1 . .) .)");
//! # Ok::<(), pluriops::Error>(())
//! ```

pub mod algebra;
pub mod checks;
pub mod dias;
pub mod linear;
pub mod report;
pub mod rewrite;
pub mod syntax;
pub mod trias;
pub mod words;

pub use linear::LinComb;
pub use syntax::{Generator, SyntaxTree};
pub use words::{Letter, Word};

use thiserror::Error;

/// Errors produced by operad and algebra computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("gamma mismatch: {left} vs {right}")]
    GammaMismatch { left: u32, right: u32 },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("letter {letter} exceeds gamma {gamma}")]
    LetterOutOfRange { letter: u32, gamma: u32 },
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("cannot parse word: {0}")]
    ParseWord(String),
    #[error("cannot parse tree: {0}")]
    ParseTree(String),
    #[error("generator {0} does not belong to the expected generator set")]
    WrongGeneratorSet(String),
    #[error("word {0} is not a Dias element (needs exactly one 0)")]
    NotDiasElement(String),
    #[error("word {0} contains no 0")]
    NoZero(String),
    #[error("rewrite iteration cap of {cap} steps exceeded; the rule set is not terminating")]
    RewriteCapExceeded { cap: usize },
    #[error("the closed-form K-basis composition needs arities >= 2, got {x_arity} and {y_arity}")]
    KBasisArity { x_arity: usize, y_arity: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
