use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("language must contain at least one sentence")]
    EmptyLanguage,

    #[error("argument `{0}` has no premises")]
    EmptyPremises(String),

    #[error("duplicate argument id `{0}`")]
    DuplicateArgument(String),

    #[error("unknown argument id `{0}`")]
    UnknownArgument(String),

    #[error("unknown sentence id `{0}`")]
    UnknownSentence(String),

    #[error("sentence `{0}` does not occur in any argument of the framework")]
    SentenceOutsideUniverse(String),

    #[error("name assigned to unknown argument `{0}`")]
    NameForUnknownArgument(String),

    #[error(
        "minimal argument `{argument}` carries name `{name}`, but names of minimal \
         arguments must have an empty incompatibility set"
    )]
    NamedMinimalArgument { argument: String, name: String },

    #[error("invalid identifier `{0}`: identifiers match [A-Za-z0-9_]+")]
    InvalidIdentifier(String),

    #[error("framework exceeds the implementation limit of {limit} {what}")]
    FrameworkTooLarge { what: &'static str, limit: usize },

    #[error(
        "sentence set contains the incompatible pair `{0}` and `{1}`, but a compatible \
         set is required"
    )]
    IncompatibleSentenceSet(String, String),

    #[error(
        "enumeration over {count} {what} exceeds the cap of {cap}; raise it with {flag}"
    )]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
        flag: &'static str,
    },

    #[error("directionality precondition violated: {0}")]
    DirectionalityPrecondition(String),

    #[error("unknown support rule `{0}` (expected `conclusion` or `singleton`)")]
    UnknownSupportRule(String),

    #[error("unknown semantics tag `{0}`")]
    UnknownSemantics(String),

    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),

    #[error("`--confident` does not apply to semantics `{0}`")]
    ConfidentUnsupported(String),

    #[error("semantics `{semantics}` produces {expected} extensions, not {requested}")]
    ModeMismatch {
        semantics: String,
        expected: &'static str,
        requested: &'static str,
    },

    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generator config invalid: {0}")]
    InvalidConfig(String),

    #[error("i/o error on `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
