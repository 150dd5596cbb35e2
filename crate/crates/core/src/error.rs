use thiserror::Error;

use crate::reduction::ClassGReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{operation}: {nodes} nodes exceeds the bound of {limit}")]
    Size {
        operation: &'static str,
        nodes: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph is not in class G: {0}")]
    NotClassG(ClassGReport),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

impl GraphError {
    pub(crate) fn check_size(operation: &'static str, nodes: usize, limit: usize) -> Result<()> {
        if nodes > limit {
            Err(GraphError::Size {
                operation,
                nodes,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
