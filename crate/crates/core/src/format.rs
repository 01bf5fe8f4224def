//! Plain-text adjacency matrix format.
//!
//! ```text
//! 3
//! 010
//! 001
//! 100
//! ```
//!
//! The first line is the vertex count `n`, followed by `n` rows of exactly
//! `n` characters from `{0,1}`. Character `j` of row `i` is `1` iff the arc
//! `i -> j` exists. The diagonal must be zero and the file ends in a newline.

use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_digraph(text: &str) -> Result<Digraph> {
    if !text.ends_with('\n') {
        return Err(parse_err(text.lines().count().max(1), "missing final newline"));
    }
    let mut lines = text[..text.len() - 1].split('\n');
    let header = lines.next().unwrap_or("");
    let n: usize = header
        .trim_end_matches('\r')
        .parse()
        .map_err(|_| parse_err(1, format!("bad vertex count {header:?}")))?;

    let mut d = Digraph::new(n);
    let mut rows = 0;
    for (i, raw) in lines.enumerate() {
        let line_no = i + 2;
        let row = raw.trim_end_matches('\r');
        if i >= n {
            return Err(parse_err(line_no, "more rows than the vertex count"));
        }
        if row.len() != n {
            return Err(parse_err(
                line_no,
                format!("row has {} characters, expected {n}", row.len()),
            ));
        }
        for (j, c) in row.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' if i == j => return Err(Error::SelfLoop(i)),
                b'1' => d.set_arc(i, j),
                other => {
                    return Err(parse_err(
                        line_no,
                        format!("unexpected character {:?}", other as char),
                    ))
                }
            }
        }
        rows += 1;
    }
    if rows != n {
        return Err(parse_err(rows + 2, format!("expected {n} rows, found {rows}")));
    }
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    d.to_string()
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        writeln!(f, "{n}")?;
        let mut line = String::with_capacity(n);
        for u in 0..n {
            line.clear();
            line.extend((0..n).map(|v| if self.has_arc(u, v) { '1' } else { '0' }));
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        read_digraph(s)
    }
}
