//! Plain-text formats for signed graphs and colourings.
//!
//! Graph files: a `sg <order>` header, then one `<u> <v> <+|->` line per
//! edge. Colouring files: a `col <k>` header, then one `<vertex> <colour>`
//! line per vertex. Plain colours are signed integers (`+2`, `-1`, `0`);
//! inferred colours put the flag after the magnitude (`2+`, `0-`), and a
//! file uses one style throughout. In both formats `#` starts a comment
//! line and blank lines are ignored. Serialization is canonical (edges in
//! lexicographic order, vertices ascending), so parse after serialize is
//! the identity.

use crate::colouring::{Colouring, Flag, InferredColouring};
use crate::error::{Error, Result};
use crate::graph::{max_magnitude, Sign, SignedGraph};
use std::collections::BTreeMap;

/// A parsed colouring file: plain colours or inferred magnitude/flag pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringFile {
    Plain(Colouring),
    Inferred(InferredColouring),
}

impl ColouringFile {
    pub fn k(&self) -> usize {
        match self {
            ColouringFile::Plain(phi) => phi.k(),
            ColouringFile::Inferred(gamma) => gamma.k(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ColouringFile::Plain(phi) => phi.len(),
            ColouringFile::Inferred(gamma) => gamma.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Significant lines of a file: `(line_number, tokens)`, comments and blank
/// lines removed. Line numbers are 1-based.
fn significant_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(no, line)| (no, line.split_whitespace().collect()))
        .collect()
}

fn eof_line(text: &str) -> usize {
    text.lines().count() + 1
}

fn parse_header(tokens: &[&str], line: usize, keyword: &str) -> Result<usize> {
    if tokens.len() != 2 || tokens[0] != keyword {
        return Err(Error::parse(
            line,
            format!("expected '{keyword} <n>' header"),
        ));
    }
    tokens[1]
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid header count '{}'", tokens[1])))
}

/// Parses a signed graph from its text form.
pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let lines = significant_lines(text);
    let Some(((header_line, header), edges)) = lines.split_first() else {
        return Err(Error::parse(eof_line(text), "missing 'sg <order>' header"));
    };
    let order = parse_header(header, *header_line, "sg")?;
    let mut g = SignedGraph::new(order);
    for (no, tokens) in edges {
        let no = *no;
        let [u, v, sign] = tokens.as_slice() else {
            return Err(Error::parse(no, "expected '<u> <v> <+|->'"));
        };
        let parse_vertex = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| Error::parse(no, format!("invalid vertex index '{tok}'")))
        };
        let u = parse_vertex(u)?;
        let v = parse_vertex(v)?;
        let sign = match *sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => {
                return Err(Error::parse(
                    no,
                    format!("invalid sign '{other}' (expected '+' or '-')"),
                ))
            }
        };
        if u >= order || v >= order {
            return Err(Error::parse(
                no,
                format!("edge ({u}, {v}) out of range for order {order}"),
            ));
        }
        if u == v {
            return Err(Error::parse(no, format!("loop ({u}, {v}) is not allowed")));
        }
        if g.sign(u, v).is_some() {
            return Err(Error::parse(no, format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v, sign)
            .map_err(|e| Error::parse(no, e.to_string()))?;
    }
    Ok(g)
}

/// Canonical text form of a signed graph: edges in lexicographic order.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.order());
    for (u, v, sign) in g.edges() {
        out.push_str(&format!("{u} {v} {sign}\n"));
    }
    out
}

enum ColourToken {
    Plain(i32),
    Inferred(u32, Flag),
}

fn parse_colour_token(tok: &str, line: usize) -> Result<ColourToken> {
    if let Some(magnitude) = tok.strip_suffix(['+', '-']) {
        if let Ok(m) = magnitude.parse() {
            let flag = if tok.ends_with('+') {
                Flag::Plus
            } else {
                Flag::Minus
            };
            return Ok(ColourToken::Inferred(m, flag));
        }
    } else if let Ok(c) = tok.parse() {
        return Ok(ColourToken::Plain(c));
    }
    Err(Error::parse(line, format!("invalid colour token '{tok}'")))
}

/// Parses a colouring file, detecting the plain or inferred style from the
/// colour tokens. Every vertex `0..n` must get exactly one line.
pub fn parse_colouring(text: &str) -> Result<ColouringFile> {
    let lines = significant_lines(text);
    let Some(((header_line, header), body)) = lines.split_first() else {
        return Err(Error::parse(eof_line(text), "missing 'col <k>' header"));
    };
    let k = parse_header(header, *header_line, "col")?;
    if k == 0 {
        return Err(Error::parse(*header_line, "palette size must be at least 1"));
    }

    let mut entries: BTreeMap<usize, ColourToken> = BTreeMap::new();
    let mut style: Option<bool> = None;
    for (no, tokens) in body {
        let no = *no;
        let [vertex, colour] = tokens.as_slice() else {
            return Err(Error::parse(no, "expected '<vertex> <colour>'"));
        };
        let vertex: usize = vertex
            .parse()
            .map_err(|_| Error::parse(no, format!("invalid vertex index '{vertex}'")))?;
        let token = parse_colour_token(colour, no)?;

        let inferred = matches!(token, ColourToken::Inferred(..));
        if *style.get_or_insert(inferred) != inferred {
            return Err(Error::parse(
                no,
                "mixed plain and inferred colour tokens in one file",
            ));
        }
        let (magnitude, zero) = match token {
            ColourToken::Plain(c) => (c.unsigned_abs(), c == 0),
            ColourToken::Inferred(m, _) => (m, m == 0),
        };
        if magnitude > max_magnitude(k) || (zero && k % 2 == 0) {
            return Err(Error::parse(
                no,
                format!("colour '{colour}' is not in the palette for k = {k}"),
            ));
        }
        if entries.insert(vertex, token).is_some() {
            return Err(Error::parse(
                no,
                format!("duplicate colour line for vertex {vertex}"),
            ));
        }
    }

    // Sorted keys equal to their own ranks means exactly the set 0..n.
    if let Some((missing, _)) = entries.keys().enumerate().find(|&(i, &v)| i != v) {
        return Err(Error::parse(
            eof_line(text),
            format!("vertex {missing} has no colour line"),
        ));
    }

    if style == Some(true) {
        let items = entries
            .into_values()
            .map(|t| match t {
                ColourToken::Inferred(m, f) => (m, f),
                ColourToken::Plain(_) => unreachable!("style is inferred"),
            })
            .collect();
        Ok(ColouringFile::Inferred(InferredColouring::new(k, items)?))
    } else {
        let ints: Vec<i32> = entries
            .into_values()
            .map(|t| match t {
                ColourToken::Plain(c) => c,
                ColourToken::Inferred(..) => unreachable!("style is plain"),
            })
            .collect();
        Ok(ColouringFile::Plain(Colouring::from_ints(k, &ints)?))
    }
}

/// Canonical text form of a plain colouring: vertices in ascending order,
/// positive colours written with an explicit `+`.
pub fn serialize_colouring(phi: &Colouring) -> String {
    let mut out = format!("col {}\n", phi.k());
    for v in 0..phi.len() {
        out.push_str(&format!("{v} {}\n", phi.get(v)));
    }
    out
}

/// Canonical text form of an inferred colouring: `<magnitude><flag>` tokens.
pub fn serialize_inferred(gamma: &InferredColouring) -> String {
    let mut out = format!("col {}\n", gamma.k());
    for v in 0..gamma.len() {
        let (m, f) = gamma.get(v);
        out.push_str(&format!("{v} {m}{f}\n"));
    }
    out
}
