//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("connection set is empty")]
    EmptyConnectionSet,

    #[error("connection set contains 0, which would be a self-loop")]
    ZeroInConnectionSet,

    #[error("connection set element {element} is out of range for modulus {modulus}")]
    ElementOutOfRange { element: usize, modulus: usize },

    #[error("vertex {0} has a self-loop")]
    SelfLoop(usize),

    #[error("duplicate arc ({x}, {y})")]
    DuplicateArc { x: usize, y: usize },

    #[error("digraph is not strongly connected: {to} is unreachable from {from}")]
    NotStronglyConnected { from: usize, to: usize },

    #[error("pair ({x}, {y}) breaks the diagonal convention: class 0 must be exactly the pairs (x, x)")]
    DiagonalViolation { x: usize, y: usize },

    #[error("class {0} is empty")]
    EmptyClass(usize),

    #[error("transpose of class {class} is not a single class; witness pair ({x}, {y})")]
    TransposeNotAClass { class: usize, x: usize, y: usize },

    #[error(
        "intersection count for (i, j, l) = ({i}, {j}, {l}) is not constant: \
         count {count_a} at pair {pair_a:?} but {count_b} at pair {pair_b:?}"
    )]
    NonConstantIntersection {
        i: usize,
        j: usize,
        l: usize,
        pair_a: (usize, usize),
        count_a: usize,
        pair_b: (usize, usize),
        count_b: usize,
    },

    #[error("digraph is undirected")]
    UndirectedInput,

    #[error("digraph is not weakly distance-regular: {0}")]
    NotWdr(Box<Error>),

    #[error("class index {index} out of range for a scheme with {classes} classes")]
    IndexOutOfRange { index: usize, classes: usize },

    #[error("{0} is not an odd prime")]
    NotPrime(usize),

    #[error("{divisor} does not divide {of}")]
    NotDivisor { divisor: usize, of: usize },

    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(usize),

    #[error("length {0} is too small; need at least 3")]
    TooSmall(usize),

    #[error("{s} is not a unit modulo {modulus}")]
    NotAUnit { s: usize, modulus: usize },

    #[error("partition is not translation-invariant; witness pair ({x}, {y})")]
    NotTranslationInvariant { x: usize, y: usize },

    #[error("classes do not partition 1..{n}: {detail}")]
    NotAPartition { n: usize, detail: String },

    #[error("hypotheses are not satisfied for (r1, r2) = ({r1}, {r2})")]
    HypothesesNotSatisfied { r1: usize, r2: usize },

    #[error("digraph carries no Cayley structure")]
    NotCayley,

    #[error("modulus {0} exceeds the classifier limit of 63")]
    ModulusTooLarge(usize),

    #[error("empty prime range: {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },
}
