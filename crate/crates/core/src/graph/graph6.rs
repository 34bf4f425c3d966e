//! graph6 encoding, short form only (orders 0 through 62).
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`)
//! packed six bits per byte, most significant first, each byte offset by 63.

use std::io::BufRead;

use thiserror::Error;

use super::Graph;

/// Largest order the short-form header can express.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form header at offset 0 (orders above {MAX_SHORT_ORDER}) is not supported")]
    LongForm,
    #[error("bitstream truncated: expected {expected} bytes, found {found} (at offset {found})")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("read error: {0}")]
    Io(String),
}

impl Graph6Error {
    /// Byte offset within the offending line, when the error has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Graph6Error::Empty | Graph6Error::LongForm => Some(0),
            Graph6Error::InvalidByte { offset, .. } | Graph6Error::TrailingData { offset } => {
                Some(*offset)
            }
            Graph6Error::Truncated { found, .. } => Some(*found),
            Graph6Error::Line { source, .. } => source.offset(),
            Graph6Error::Io(_) => None,
        }
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_bytes(text.as_bytes())
}

pub fn parse_graph6_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (&head, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::InvalidByte {
            offset: 0,
            byte: head,
        });
    }
    let n = (head - 63) as usize;
    let need = payload_len(n);
    for (i, &b) in rest.iter().enumerate().take(need) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: i + 1,
                byte: b,
            });
        }
    }
    if rest.len() < need {
        return Err(Graph6Error::Truncated {
            expected: need + 1,
            found: bytes.len(),
        });
    }
    if rest.len() > need {
        return Err(Graph6Error::TrailingData { offset: need + 1 });
    }
    let mut g = Graph::empty(n).expect("n <= 63");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encode `g`. Panics if the order exceeds [`MAX_SHORT_ORDER`].
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_SHORT_ORDER,
        "graph6 short form holds at most {MAX_SHORT_ORDER} vertices"
    );
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Read a graph6 stream: one graph per line. Blank lines and an optional
/// `>>graph6<<` prefix are skipped; errors carry the 1-based line number.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, Graph6Error>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Graph6Error::Io(e.to_string()))),
        };
        let mut s = line.trim_end_matches(['\r', '\n']);
        s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        if s.is_empty() {
            return None;
        }
        Some(parse_graph6(s).map_err(|e| Graph6Error::Line {
            line: i + 1,
            source: Box::new(e),
        }))
    })
}
