use thiserror::Error;

/// Errors surfaced by the command line; all map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] permlab::Error),

    #[error("bad subgroup spec `{spec}`: {reason}")]
    SubgroupSpec { spec: String, reason: String },

    #[error("bad predicate expression `{expr}`: {reason}")]
    Expression { expr: String, reason: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid value for {name}: `{value}`")]
    InvalidSetting { name: &'static str, value: String },
}
