use thiserror::Error;

use crate::frobenius::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Gram matrix of the trace form is singular; not a Frobenius form")]
    GramSingular,
    #[error("multiplication is not associative: ({0} * {1}) * {2} differs from {0} * ({1} * {2})")]
    NotAssociative(String, String, String),
    #[error("basis element {0} is not a two-sided unit")]
    NotUnital(String),
    #[error("product {0} * {1} is not homogeneous of the expected parity")]
    NotParityAdditive(String, String),
    #[error("trace is not homogeneous: tr({0}) is nonzero but {0} has the wrong parity")]
    TraceNotHomogeneous(String),
    #[error("multiplication is not degree-additive on {0} * {1}")]
    NotDegreeAdditive(String, String),
    #[error("malformed algebra data: {0}")]
    InvalidData(String),
    #[error("algebra is not symmetric; this construction needs tr(ab) = (-1)^(|a||b|) tr(ba)")]
    NotSymmetric,
    #[error("computed Nakayama map is not a superalgebra automorphism")]
    NotAutomorphism,
    #[error("tensor words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("size mismatch ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("element does not belong to this algebra: {0}")]
    AlgebraMismatch(String),
    #[error("{n} exceeds the supported bound {max}")]
    SizeTooLarge { n: usize, max: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("closed divided-difference formula requires an even trace")]
    OddTraceParity,
    #[error("numerator is not divisible by x_(i+1) - x_i")]
    NonDivisible,
    #[error("algebra carries no Z-grading")]
    NotGraded,
    #[error("algebra is not supercommutative; a -> a is not an anti-automorphism of A^(⊗n)")]
    NotSupercommutative,
    #[error("validation failed")]
    ValidationFailed(Box<ValidationReport>),
}
