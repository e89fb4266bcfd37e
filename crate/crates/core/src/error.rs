use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error)]
pub enum Error {
    #[error("capacity exceeded: need {needed}, limit is {limit}")]
    Capacity { needed: usize, limit: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("{0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("refusing to enumerate (m={m}, r={r}): about {estimate:.3e} classes exceeds {limit:.0e}; pass --force to run anyway")]
    TooLarge {
        m: usize,
        r: usize,
        estimate: f64,
        limit: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
