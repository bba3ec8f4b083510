use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid strand count {0}")]
    InvalidStrands(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("closure has {components} components, expected a knot")]
    MultiComponent { components: usize },

    #[error("chord {chord} does not exist in a diagram with {chords} chords")]
    InvalidChord { chord: usize, chords: usize },

    #[error("malformed Gauss code: {0}")]
    MalformedGauss(String),

    #[error("diagram has negative chords; normalize it first")]
    NotPositive,

    #[error("({i},{j},{k}) is not a knot: closure has {components} components")]
    NotAKnot {
        i: usize,
        j: usize,
        k: usize,
        components: usize,
    },

    #[error("({i},{j},{k}) is already the unknot")]
    Terminal { i: usize, j: usize, k: usize },

    #[error("rewrite {0} does not apply")]
    RewriteNotApplicable(String),

    #[error("crossing position {position} out of range (torus braid has {letters} crossings)")]
    SubsetOutOfRange { position: usize, letters: usize },

    #[error("scan over {bits} crossings exceeds the default cap of {cap}; pass an explicit limit")]
    ScanTooLarge { bits: usize, cap: usize },

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
}
