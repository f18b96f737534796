//! Line-oriented graph6 input.

use std::io::BufRead;

use domcycle_core::graph6;
use domcycle_core::{Graph, Graph6Error};
use thiserror::Error;

use crate::report::ErrorRow;

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: {source}")]
    Io {
        line: usize,
        #[source]
        source: std::io::Error,
    },
}

impl StreamError {
    pub fn line(&self) -> usize {
        match self {
            StreamError::Parse { line, .. } | StreamError::Io { line, .. } => *line,
        }
    }
}

impl From<&StreamError> for ErrorRow {
    fn from(e: &StreamError) -> ErrorRow {
        let message = match e {
            StreamError::Parse { source, .. } => source.to_string(),
            StreamError::Io { source, .. } => source.to_string(),
        };
        ErrorRow {
            line: e.line(),
            message,
        }
    }
}

/// What to do with a line that fails to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ErrorPolicy {
    #[default]
    Abort,
    Skip,
}

/// A graph together with the 1-based line it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numbered {
    pub line: usize,
    pub graph: Graph,
}

/// Lazily parses graph6 lines. Blank lines are ignored, as are `>>` header
/// lines that carry no graph.
pub struct Graph6Stream<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Numbered, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line += 1;
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => {
                    return Some(Err(StreamError::Io {
                        line: self.line,
                        source,
                    }))
                }
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
            if text.is_empty() {
                continue;
            }
            return Some(match graph6::parse(text) {
                Ok(graph) => Ok(Numbered {
                    line: self.line,
                    graph,
                }),
                Err(source) => Err(StreamError::Parse {
                    line: self.line,
                    source,
                }),
            });
        }
    }
}

/// Reads a whole stream. Under [`ErrorPolicy::Skip`] bad lines are returned
/// alongside the good ones; under [`ErrorPolicy::Abort`] the first error is.
pub fn read_all<R: BufRead>(
    reader: R,
    policy: ErrorPolicy,
) -> Result<(Vec<Numbered>, Vec<StreamError>), StreamError> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for item in Graph6Stream::new(reader) {
        match (item, policy) {
            (Ok(g), _) => graphs.push(g),
            (Err(e @ StreamError::Io { .. }), _) | (Err(e), ErrorPolicy::Abort) => return Err(e),
            (Err(e), ErrorPolicy::Skip) => errors.push(e),
        }
    }
    Ok((graphs, errors))
}
