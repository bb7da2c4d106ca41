//! graph6 encoding and decoding.
//!
//! Only the short form (one order byte, `n <= 62`) is produced. The long form
//! header is recognized on input so oversized graphs are reported as capacity
//! errors rather than as garbage. Nonzero padding bits are rejected.

use std::fmt;
use std::io::BufRead;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, Row, MAX_VERTICES};

const BIAS: u8 = 63;
const SHORT_FORM_MAX: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty code")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    CharOutOfRange { pos: usize, byte: u8 },
    #[error("expected {expected} bytes for order {n}, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last data byte")]
    NonzeroPadding,
    #[error("truncated order header")]
    TruncatedHeader,
    #[error("order {0} exceeds the supported {MAX_VERTICES} vertices")]
    TooLarge(usize),
    #[error("graph on zero vertices")]
    ZeroOrder,
}

/// A validated graph6 string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph6Code(String);

impl Graph6Code {
    /// Validates that `s` decodes to a graph and wraps it.
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        decode(&s)?;
        Ok(Graph6Code(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn decode(&self) -> Graph {
        decode(&self.0).expect("Graph6Code is validated on construction")
    }
}

impl AsRef<str> for Graph6Code {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Graph6Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Graph6Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::str::FromStr for Graph6Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph6Code::new(s)
    }
}

/// Number of data bytes for an `n`-vertex graph.
fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Graph6Code {
    let n = g.order();
    debug_assert!(n <= SHORT_FORM_MAX);
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut filled = 0;
    let rows = g.rows();
    for j in 1..n {
        for row in &rows[..j] {
            acc = (acc << 1) | ((row >> j) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Graph6Code(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(code: &str) -> Result<Graph, Graph6Error> {
    let bytes = code.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((pos, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::CharOutOfRange { pos, byte });
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        // Long form: only used to report the order of oversized graphs.
        let n = if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Graph6Error::TruncatedHeader);
            }
            bytes[2..8]
                .iter()
                .fold(0usize, |a, &b| (a << 6) | (b - BIAS) as usize)
        } else {
            if bytes.len() < 4 {
                return Err(Graph6Error::TruncatedHeader);
            }
            bytes[1..4]
                .iter()
                .fold(0usize, |a, &b| (a << 6) | (b - BIAS) as usize)
        };
        return Err(Graph6Error::TooLarge(n));
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let data = &bytes[header..];
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected: expected + header,
            found: bytes.len(),
        });
    }
    let pairs = n * (n - 1) / 2;
    let pad = expected * 6 - pairs;
    if pad > 0 && (data[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut rows = [0 as Row; MAX_VERTICES];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[idx / 6] - BIAS;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

/// Iterator over the graphs of a newline-separated graph6 stream.
///
/// Blank lines are skipped; errors carry the 1-based line number.
pub struct Graph6Reader<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            reader,
            line: 0,
            buf: String::new(),
        }
    }

    /// Line number of the most recently returned graph.
    pub fn line(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<(usize, Graph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line += 1;
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            if text.is_empty() {
                continue;
            }
            return Some(
                decode(text)
                    .map(|g| (self.line, g))
                    .map_err(|e| Error::Line {
                        line: self.line,
                        source: Box::new(e.into()),
                    }),
            );
        }
    }
}
