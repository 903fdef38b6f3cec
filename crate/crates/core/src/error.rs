use alloc::string::String;

/// Every failure the kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("not a rational coefficient or declared variable: {0}")]
    NonRationalCoefficient(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("characteristic polynomial {0} has no rational or quadratic splitting")]
    UnsupportedEigenstructure(String),
    #[error("gradient vanishes at the point")]
    SingularPoint,
    #[error("curvature certificate vanishes at the point")]
    FlatPoint,
    #[error("parametrization is not regular at the parameter value")]
    IrregularPoint,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("moment is not orthogonal to direction")]
    InvalidLine,
    #[error("could not collect enough valid samples")]
    InsufficientSamples,
    #[error("lines have no common point")]
    NoCommonPoint,
    #[error("zero matrix")]
    ZeroMatrix,
    #[error("translation is not in the range of the matrix")]
    NoFixedLine,
    #[error("form is not a polynomial in y^2 - 2xz and x")]
    NotParabolicForm,
    #[error("no usable factor structure")]
    NoCandidates,
    #[error("surface is not parabolic about the z-axis")]
    NotParabolic,
    #[error("beta must be nonzero")]
    BetaZero,
    #[error("surface is developable")]
    Developable,
    #[error("input is constant")]
    ConstantInput,
    #[error("input is a plane")]
    PlaneInput,
    #[error("input is reducible: {0}")]
    ReducibleInput(String),
    #[error("implicit degree exceeds the bound {0}")]
    ImplicitizationTooLarge(u32),
    #[error("parametrization does not describe a surface")]
    DegenerateParametrization,
    #[error("no canonical group for a non-canonical class")]
    NonCanonicalClass,
    #[error("directrix is degenerate")]
    DegenerateDirectrix,
    #[error("plane contains the surface")]
    PlaneContainsSurface,
}

pub type Result<T> = core::result::Result<T, Error>;
