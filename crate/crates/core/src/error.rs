use thiserror::Error;

use crate::word::{Composition, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("zero exponent at offset {0}")]
    ZeroExponent(usize),
    #[error("exponent without a preceding letter at offset {0}")]
    DanglingExponent(usize),
    #[error("missing digits after '^' at offset {0}")]
    MissingExponent(usize),
    #[error("word longer than {max} letters")]
    TooLong { max: usize },
    #[error("invalid composition {0:?}: parts must be positive integers separated by commas")]
    BadComposition(String),
}

/// Failures of the algebraic layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("scalar key {key} holds a term of weight {weight}")]
    Inhomogeneous { key: u32, weight: u32 },
    #[error("series constant term must be 1, found {0}")]
    NonUnitConstant(String),
    #[error("pi-power rendering needs even powers of 2πi, found {0}")]
    OddPower(u32),
    #[error("word {word} has y-degree {found}, expected {expected}")]
    WrongDegree { word: Word, expected: usize, found: usize },
    #[error("y-degree {0} is beyond the supported range (at most 2)")]
    DegreeTooHigh(usize),
    #[error("{0} is not a Lyndon word")]
    NotLyndon(Word),
    #[error("bracket would leave y-degree ≤ 2")]
    BracketOverflow,
}

/// Failures of the multiple zeta value engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MzvError {
    #[error("weight {weight} exceeds the reduction table (max weight {max})")]
    WeightOutOfRange { weight: u32, max: u32 },
    #[error("weight {0} is not covered by the reduction table")]
    WeightNotTabulated(u32),
    #[error("ζ{0} has depth > 2 and cannot be reduced")]
    DepthTooLarge(Composition),
    #[error("composition {0} is not admissible")]
    NotAdmissible(Composition),
    #[error("relation harvest at weight {weight} left unreduced values: {unreduced:?}")]
    RankDeficient { weight: u32, unreduced: Vec<Composition> },
    #[error("relation harvest at weight {weight} produced a relation among basis monomials")]
    BasisRelation { weight: u32 },
    #[error("ζ({0}) is not an even zeta value")]
    OddArgument(u32),
    #[error("target error {0:e} is below the supported limit 1e-10")]
    TargetTooSmall(f64),
    #[error("reduction table entry ζ{comp} deviates numerically by {deviation:e}")]
    NumericMismatch { comp: Composition, deviation: f64 },
    #[error("maximum weight {0} is beyond the supported range (≤ 11)")]
    MaxWeightTooLarge(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("right-hand side has {found} entries, expected {expected}")]
    RhsShape { expected: usize, found: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("label count {found} does not match dimension {expected}")]
    LabelCount { expected: usize, found: usize },
}

/// Errors of the associator pipelines (Φ_{1/2} and Φ_AT).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AssocError {
    #[error(transparent)]
    Mzv(#[from] MzvError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the c_(α,β) system for n = {n} is inconsistent at equation {row}")]
    Inconsistent { n: u32, row: String },
    #[error("the c_(α,β) system for n = {n} is underdetermined (rank {rank} < {unknowns})")]
    Underdetermined { n: u32, rank: usize, unknowns: usize },
    #[error("no c_(α,β) solution for n = {0}")]
    MissingSolution(u32),
    #[error("n = {n} needs a reduction table of weight {needed}, have {have}")]
    TableTooSmall { n: u32, needed: u32, have: u32 },
    #[error("coefficient of {0} should vanish but does not")]
    NonVanishing(Word),
    #[error("n must be at least 1")]
    ZeroOrder,
}
