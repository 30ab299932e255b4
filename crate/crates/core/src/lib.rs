//! Constructions and verifiers for rotationally symmetric Hamilton cycles
//! in hypercubes, Johnson graphs, middle-levels graphs, permutahedra and
//! Cayley graphs of abelian groups.
//!
//! A Hamilton cycle (x_1, ..., x_N) is k-symmetric when rotating it by N/k
//! positions is a graph automorphism; the largest such k over all Hamilton
//! cycles is the graph's Hamilton compression. The `cube`, `johnson`,
//! `perm` and `cayley` modules build cycles with high compression, the
//! `verify` module checks them independently, and `landau` computes the
//! permutation-order maxima that govern the permutahedron case.

pub mod auto;
pub mod cayley;
pub mod cube;
pub mod graphs;
pub mod johnson;
pub mod landau;
pub mod perm;
pub mod search;
pub mod verify;
pub mod word;

#[derive(Debug)]
pub enum Error {
    /// Invalid parameters or violated preconditions.
    Param(String),
    /// A word that is not a vertex of the family at hand.
    Vertex(String),
    /// A search exhausted its space or budget.
    Search(String),
    /// Malformed file or string input.
    Format(String),
    /// A cycle failed verification.
    Violation(verify::Violation),
    Io(std::io::Error),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Param(m) | Error::Search(m) | Error::Format(m) => write!(f, "{m}"),
            Error::Vertex(m) => write!(f, "invalid vertex: {m}"),
            Error::Violation(v) => write!(f, "{v}"),
            Error::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub mod cli {
    /// Placeholder until the CLI lands.
    pub fn run(_argv: Vec<String>) -> i32 {
        2
    }
}
