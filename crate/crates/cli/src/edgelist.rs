//! Plain-text edge lists.
//!
//! ```text
//! HC 1 6 6
//! 0 1
//! 0 2
//! ...
//! ```
//!
//! Header `<FAMILY> <n> <|V|> <|E|>`, then one `u v` line per edge with
//! `u < v`, sorted lexicographically. ASCII, every line newline-terminated.

use std::io::{self, BufRead, Write};

use thiserror::Error;
use topoindex_core::{Family, Graph, GraphError, NetworkSpec};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: edges must be `u v` with u < v in ascending order")]
    Unsorted { line: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn write_edge_list<W: Write>(mut w: W, spec: NetworkSpec, g: &Graph) -> io::Result<()> {
    writeln!(
        w,
        "{} {} {} {}",
        spec.family,
        spec.n,
        g.vertex_count(),
        g.edge_count()
    )?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()
}

fn malformed(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Malformed {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, EdgeListError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| malformed(line, format!("bad {what} `{tok}`")))
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<(NetworkSpec, Graph), EdgeListError> {
    let mut lines = r.lines();
    let header = lines.next().ok_or_else(|| malformed(1, "empty file"))??;
    let mut toks = header.split_ascii_whitespace();
    let family: Family = {
        let tok = toks.next().ok_or_else(|| malformed(1, "missing family"))?;
        tok.parse().map_err(|e| malformed(1, format!("{e}")))?
    };
    let n: u32 = field(toks.next(), 1, "dimension")?;
    let vertex_count: usize = field(toks.next(), 1, "vertex count")?;
    let edge_count: usize = field(toks.next(), 1, "edge count")?;
    if toks.next().is_some() {
        return Err(malformed(1, "trailing fields in header"));
    }

    let mut edges = Vec::with_capacity(edge_count);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line?;
        let mut toks = line.split_ascii_whitespace();
        let u: usize = field(toks.next(), line_no, "vertex")?;
        let v: usize = field(toks.next(), line_no, "vertex")?;
        if toks.next().is_some() {
            return Err(malformed(line_no, "expected exactly two vertices"));
        }
        if u >= v || edges.last().is_some_and(|&prev| prev >= (u, v)) {
            return Err(EdgeListError::Unsorted { line: line_no });
        }
        edges.push((u, v));
    }
    if edges.len() != edge_count {
        return Err(EdgeListError::EdgeCount {
            expected: edge_count,
            found: edges.len(),
        });
    }
    Ok((
        NetworkSpec::new(family, n),
        Graph::build(vertex_count, edges)?,
    ))
}
