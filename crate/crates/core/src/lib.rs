//! Fairness-aware automated essay scoring at desk scale.
//!
//! The crate implements a full experiment pipeline around one idea: align an
//! embedding space with triplet margin loss over quality-matched cross-group
//! essay pairs, then regress scores from the frozen space, and measure what
//! that does to the accuracy/fairness trade-off versus a plain MSE baseline.
//!
//! Modules follow the pipeline stages:
//!
//! - [`corpus`] — ingestion, score normalization, stratified splitting
//! - [`encoder`] — hashed-ngram featurization and the frozen-base + low-rank
//!   adapter embedding model
//! - [`miner`] — fairness-triplet construction from the training split
//! - [`training`] — losses, gradients, and the three training procedures
//! - [`fairness`] — QWK, group residual analysis, bias gap, ablation
//! - [`linguistic`] — surface text statistics and post-hoc correlation analysis
//! - [`synth`] — seeded synthetic corpora with a planted group-correlated
//!   shortcut
//! - [`pipeline`] — stage orchestration and on-disk artifacts shared with the
//!   CLI

pub mod corpus;
pub mod encoder;
pub mod error;
pub mod fairness;
pub mod hash;
pub mod linguistic;
pub mod miner;
pub mod pipeline;
pub mod synth;
pub mod training;

pub use error::{Error, Result};
