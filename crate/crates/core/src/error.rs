//! Error type shared by every pipeline stage.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("score {raw} outside scale [{min}, {max}]{}", id_suffix(.id))]
    ScoreOutOfRange {
        id: Option<String>,
        raw: f64,
        min: f64,
        max: f64,
    },

    #[error("parse failure at {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("schema error in {path}: {message}")]
    Schema { path: String, message: String },

    #[error("duplicate essay id `{id}`")]
    DuplicateId { id: String },

    #[error("empty text for essay `{id}`")]
    EmptyText { id: String },

    #[error("stratification error: group {group} has {count} essays, need at least 2")]
    Stratification { group: String, count: usize },

    #[error("empty input: {context}")]
    EmptyInput { context: &'static str },

    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    Shape {
        expected: usize,
        got: usize,
        context: &'static str,
    },

    #[error("invalid config: {message}")]
    Config { message: String },

    #[error("unresolvable essay id `{id}` referenced by {context}")]
    Integrity { id: String, context: &'static str },

    #[error("non-finite loss at epoch {epoch}, batch {batch}")]
    Divergence { epoch: usize, batch: usize },

    #[error("degenerate agreement: all mass in one bin for both raters, kappa undefined")]
    DegenerateAgreement,

    #[error("undefined correlation: {message}")]
    UndefinedCorrelation { message: String },

    #[error("undefined reduction: baseline gap is zero")]
    UndefinedReduction,

    #[error("incompatible artifacts: {message}")]
    Compatibility { message: String },

    #[error("missing upstream artifact `{artifact}`: run `{stage}` first")]
    MissingArtifact { artifact: String, stage: String },

    #[error("config hash mismatch: {artifact} was produced by config {found}, current config is {expected} (pass --force to override)")]
    ConfigHashMismatch {
        artifact: String,
        found: String,
        expected: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error on {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

fn id_suffix(id: &Option<String>) -> String {
    match id {
        Some(id) => format!(" for essay `{id}`"),
        None => String::new(),
    }
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn json(path: impl Into<String>, source: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            source,
        }
    }

    pub fn config(message: impl Into<String>) -> Self {
        Error::Config {
            message: message.into(),
        }
    }
}
