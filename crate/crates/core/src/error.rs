use std::fmt;

use thiserror::Error;

/// One broken axiom of a bounded partial order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("not reflexive at {0}")]
    NotReflexive(String),
    #[error("not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(String, String),
    #[error("not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("{0} is not below every element")]
    NoBottom(String),
    #[error("{0} is not above every element")]
    NoTop(String),
}

/// One broken axiom of an orthoposet (antitone involutive complementation).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoViolation {
    #[error("involution not total: {0} has no partner")]
    NotTotal(String),
    #[error("not involutive at {0}")]
    NotInvolutive(String),
    #[error("{0} is its own complement")]
    FixedPoint(String),
    #[error("bounds are not swapped")]
    BoundsNotSwapped,
    #[error("not antitone: {0} <= {1} but not {1}' <= {0}'")]
    NotAntitone(String, String),
    #[error("not a complementation at {x}: L(x,x') = {{{}}}, U(x,x') = {{{}}}", lower.join(","), upper.join(","))]
    NotComplementation {
        x: String,
        lower: Vec<String>,
        upper: Vec<String>,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("relation matrix must be {0}x{0}")]
    NotSquare(usize),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("label {0} is reserved for a bound")]
    ReservedLabel(String),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    #[error("{what}: size {got} exceeds limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("order axioms violated: {}", Joined(.0))]
    InvalidOrder(Vec<OrderViolation>),
    #[error("orthoposet axioms violated: {}", Joined(.0))]
    InvalidOrtho(Vec<OrthoViolation>),
    #[error("cycle detected through {0} and {1}")]
    CycleDetected(String, String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("bad property expression: {0}")]
    Expression(String),
}

pub type Result<T> = std::result::Result<T, Error>;

struct Joined<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for Joined<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
