use thiserror::Error;

/// Errors shared by every engine in this crate.
///
/// Law violations discovered by the `validate_*` functions are *data*
/// (see the per-module report types), not errors; this enum covers
/// malformed inputs and failed computations only.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("morphisms are not composable: cod({f}) != dom({g})")]
    NotComposable { g: String, f: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("ill-defined map: {0}")]
    IllDefinedMap(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid bifunctor: {0}")]
    InvalidBifunctor(String),

    #[error("wedge is not dinatural: {0}")]
    NotDinatural(String),

    #[error("transformation is not natural: {0}")]
    NotNatural(String),

    #[error("not an adjunction: {0}")]
    NotAdjoint(String),

    #[error("no colimit exists: {0}")]
    NoColimit(String),

    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ill-defined module action: {0}")]
    IllDefinedAction(String),

    /// A structural equality the engine relies on failed to hold.
    /// Surfacing this means an implementation bug, never bad user input.
    #[error("transition lemma violated: {0}")]
    LemmaViolation(String),

    #[error("unknown entity: {0}")]
    UnknownEntity(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
