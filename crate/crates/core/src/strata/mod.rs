//! Code-word stratification of `S(k)` and the words of nodes and twigs.
//!
//! A code word `A_1 A_2 ... A_k` names the locus `I_W` cut out by the
//! prolonged divisors at infinity. Only the coarse stratification is
//! modeled: the finer split by the symbols `0`, `-`, `∞` replaces each of
//! them by `R` or the appropriate `V_j`.

mod code;
mod words;

use thiserror::Error;

pub use code::{
    enumerate_code_words, locus_contains, validate_code_word, CodeSymbol, CodeWord,
    LocusSignature,
};
pub use words::{
    annotate_chain, node_word_explicit, node_word_recursive, trace_node_word, twig_word,
    AnnotatedChain, TraceStep, TraceTwig,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("invalid code word text {input:?} at position {position}")]
    BadWord { input: String, position: usize },
    #[error("{word} is not a valid code word")]
    InvalidWord { word: String },
    #[error("words of different lengths ({outer} and {inner})")]
    LengthMismatch { outer: usize, inner: usize },
    #[error("twig {twig} does not exist at level {level}")]
    TwigBeyondLevel { twig: String, level: usize },
    #[error("twig words {left} and {right} at {node} carry different V's at position {position}")]
    IncompatibleTwigWords {
        node: String,
        position: usize,
        left: String,
        right: String,
    },
}
