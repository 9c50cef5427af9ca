//! The `wrd` text format: a DIMACS-style exchange format for vertex-weighted
//! graphs.
//!
//! ```text
//! c optional comments, only before the header
//! p wrd <n> <m>
//! v <id> <weight>     one line per vertex, ids 1..n, each exactly once
//! e <u> <v>           one line per edge, 1 <= u < v <= n, no duplicates
//! ```
//!
//! Weights are positive rationals written as `7`, `5/2`, or `2.5`. The
//! serializer emits a canonical form: vertex lines in id order, edge lines in
//! lexicographic order, weights in lowest terms, single spaces, `\n` endings.

use std::fmt;

use crate::graph::WeightedGraph;
use crate::weight::{parse_rational, ratio_to_string, Weight};

/// Hard ceiling on declared sizes, to keep hostile headers from allocating.
const MAX_DECLARED: u64 = 10_000_000;

/// A parse failure with its 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected `p wrd <n> <m>` header")]
    MissingHeader,
    #[error("unknown line type {0:?}")]
    UnknownLineType(String),
    #[error("empty line")]
    EmptyLine,
    #[error("comments are only allowed before the header")]
    CommentAfterHeader,
    #[error("duplicate header line")]
    DuplicateHeader,
    #[error("expected {0}")]
    MissingField(&'static str),
    #[error("unexpected trailing field {0:?}")]
    TrailingField(String),
    #[error("empty field (check for doubled or trailing spaces)")]
    EmptyField,
    #[error("malformed {what}: {reason}")]
    BadNumber { what: &'static str, reason: String },
    #[error("{what} {value} exceeds the maximum of {max}")]
    TooLarge {
        what: &'static str,
        value: u64,
        max: u64,
    },
    #[error("declared {m} edges, but a simple graph on {n} vertices has at most {max}")]
    TooManyEdgesDeclared { n: u64, m: u64, max: u64 },
    #[error("vertex id {id} out of range 1..={n}")]
    VertexIdOutOfRange { id: u64, n: usize },
    #[error("duplicate `v` line for vertex {id}")]
    DuplicateVertex { id: usize },
    #[error("vertex weight must be positive, got {value}")]
    NonPositiveWeight { value: String },
    #[error("expected {expected} `v` lines, found {got}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("loop edge at vertex {id}")]
    LoopEdge { id: usize },
    #[error("edge endpoints must satisfy u < v, got {u} and {v}")]
    EdgeNotIncreasing { u: usize, v: usize },
    #[error("duplicate `e` line for edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("expected {expected} `e` lines, found {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("content after the declared edge lines")]
    TrailingContent,
}

use ParseErrorKind::*;

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err<T>(&self, col: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.no,
            col,
            kind,
        })
    }

    /// Split on single spaces into `(column, token)` pairs; doubled, leading,
    /// or trailing spaces produce an empty token and are rejected.
    fn fields(&self) -> Result<Vec<(usize, &'a str)>, ParseError> {
        let mut out = Vec::new();
        let mut col = 1;
        for tok in self.text.split(' ') {
            if tok.is_empty() {
                return self.err(col, EmptyField);
            }
            out.push((col, tok));
            col += tok.len() + 1;
        }
        Ok(out)
    }
}

fn parse_u64(line: &Line, col: usize, what: &'static str, tok: &str) -> Result<u64, ParseError> {
    if !tok.bytes().all(|b| b.is_ascii_digit()) || tok.is_empty() {
        return line.err(
            col,
            BadNumber {
                what,
                reason: "expected an unsigned integer".to_string(),
            },
        );
    }
    tok.parse::<u64>().map_err(|e| ParseError {
        line: line.no,
        col,
        kind: BadNumber {
            what,
            reason: e.to_string(),
        },
    })
}

fn expect_len(line: &Line, fields: &[(usize, &str)], names: &[&'static str]) -> Result<(), ParseError> {
    // names[0] is the line type, already consumed by the caller's dispatch.
    if fields.len() < names.len() {
        let missing = names[fields.len()];
        let col = fields.last().map_or(1, |&(c, t)| c + t.len() + 1);
        return line.err(col, MissingField(missing));
    }
    if fields.len() > names.len() {
        let (col, tok) = fields[names.len()];
        return line.err(col, TrailingField(tok.to_string()));
    }
    Ok(())
}

/// Parse the `wrd` text format.
pub fn parse_wrd(input: &str) -> Result<WeightedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<Weight>> = Vec::new();
    let mut seen_vertices = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adjacency: Vec<Vec<usize>> = Vec::new();

    let mut lines = input.split('\n').enumerate().peekable();
    let mut last_line_no = 0;
    while let Some((i, text)) = lines.next() {
        let line = Line { no: i + 1, text };
        last_line_no = line.no;
        // A single trailing newline leaves one final empty segment; accept it.
        if text.is_empty() && lines.peek().is_none() {
            last_line_no -= 1;
            break;
        }
        if text.is_empty() {
            return line.err(1, EmptyLine);
        }
        let fields = line.fields()?;
        let (_, tag) = fields[0];
        match tag {
            "c" => {
                if header.is_some() {
                    return line.err(1, CommentAfterHeader);
                }
            }
            "p" => {
                if header.is_some() {
                    return line.err(1, DuplicateHeader);
                }
                expect_len(&line, &fields, &["p", "format", "vertex count", "edge count"])?;
                let (fcol, format) = fields[1];
                if format != "wrd" {
                    return line.err(
                        fcol,
                        BadNumber {
                            what: "format",
                            reason: format!("expected `wrd`, got {format:?}"),
                        },
                    );
                }
                let n = parse_u64(&line, fields[2].0, "vertex count", fields[2].1)?;
                let m = parse_u64(&line, fields[3].0, "edge count", fields[3].1)?;
                if n > MAX_DECLARED {
                    return line.err(fields[2].0, TooLarge { what: "vertex count", value: n, max: MAX_DECLARED });
                }
                let simple_max = n.saturating_mul(n.saturating_sub(1)) / 2;
                if m > simple_max.min(MAX_DECLARED) {
                    return line.err(fields[3].0, TooManyEdgesDeclared { n, m, max: simple_max.min(MAX_DECLARED) });
                }
                header = Some((n as usize, m as usize));
                weights = vec![None; n as usize];
                adjacency = vec![Vec::new(); n as usize];
            }
            "v" => {
                let Some((n, _)) = header else {
                    return line.err(1, MissingHeader);
                };
                expect_len(&line, &fields, &["v", "vertex id", "weight"])?;
                let id = parse_u64(&line, fields[1].0, "vertex id", fields[1].1)?;
                if id == 0 || id > n as u64 {
                    return line.err(fields[1].0, VertexIdOutOfRange { id, n });
                }
                let id = id as usize - 1;
                if weights[id].is_some() {
                    return line.err(fields[1].0, DuplicateVertex { id: id + 1 });
                }
                let (wcol, wtok) = fields[2];
                let ratio = parse_rational(wtok).map_err(|e| ParseError {
                    line: line.no,
                    col: wcol,
                    kind: BadNumber {
                        what: "weight",
                        reason: e.to_string(),
                    },
                })?;
                let weight = Weight::new(ratio).map_err(|_| ParseError {
                    line: line.no,
                    col: wcol,
                    kind: NonPositiveWeight {
                        value: wtok.to_string(),
                    },
                })?;
                weights[id] = Some(weight);
                seen_vertices += 1;
            }
            "e" => {
                let Some((n, m)) = header else {
                    return line.err(1, MissingHeader);
                };
                if seen_vertices < n {
                    return line.err(1, VertexCountMismatch { expected: n, got: seen_vertices });
                }
                if edges.len() == m {
                    return line.err(1, TrailingContent);
                }
                expect_len(&line, &fields, &["e", "endpoint", "endpoint"])?;
                let u = parse_u64(&line, fields[1].0, "endpoint", fields[1].1)?;
                let v = parse_u64(&line, fields[2].0, "endpoint", fields[2].1)?;
                if u == 0 || u > n as u64 {
                    return line.err(fields[1].0, VertexIdOutOfRange { id: u, n });
                }
                if v == 0 || v > n as u64 {
                    return line.err(fields[2].0, VertexIdOutOfRange { id: v, n });
                }
                let (u, v) = (u as usize - 1, v as usize - 1);
                if u == v {
                    return line.err(fields[1].0, LoopEdge { id: u + 1 });
                }
                if u > v {
                    return line.err(fields[1].0, EdgeNotIncreasing { u: u + 1, v: v + 1 });
                }
                if adjacency[u].contains(&v) {
                    return line.err(fields[1].0, DuplicateEdge { u: u + 1, v: v + 1 });
                }
                adjacency[u].push(v);
                edges.push((u, v));
            }
            other => {
                return line.err(1, UnknownLineType(other.to_string()));
            }
        }
    }

    let eof = Line { no: last_line_no + 1, text: "" };
    let Some((n, m)) = header else {
        return eof.err(1, MissingHeader);
    };
    if seen_vertices < n {
        return eof.err(1, VertexCountMismatch { expected: n, got: seen_vertices });
    }
    if edges.len() < m {
        return eof.err(1, EdgeCountMismatch { expected: m, got: edges.len() });
    }
    let weights = weights.into_iter().map(|w| w.unwrap()).collect();
    Ok(WeightedGraph::new(weights, &edges).expect("line-level validation guarantees a simple graph"))
}

/// Serialize to the canonical `wrd` text form.
pub fn to_wrd_string(g: &WeightedGraph) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "p wrd {} {}", g.n(), g.m()).unwrap();
    for v in 0..g.n() {
        writeln!(out, "v {} {}", v + 1, ratio_to_string(g.weight(v).ratio())).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{ratio, ratio_int};

    const P3: &str = "p wrd 3 2\nv 1 1\nv 2 5\nv 3 1\ne 1 2\ne 2 3\n";

    #[test]
    fn parses_a_path_and_round_trips() {
        let g = parse_wrd(P3).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.weight(1).ratio(), &ratio_int(5));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(to_wrd_string(&g), P3);
    }

    #[test]
    fn accepts_comments_and_missing_final_newline() {
        let g = parse_wrd("c a graph\nc more\np wrd 1 0\nv 1 2/3").unwrap();
        assert_eq!(g.weight(0).ratio(), &ratio(2, 3));
        assert_eq!(to_wrd_string(&g), "p wrd 1 0\nv 1 2/3\n");
    }

    #[test]
    fn vertex_lines_in_any_order() {
        let g = parse_wrd("p wrd 3 1\nv 3 1\nv 1 2\nv 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.weight(0).ratio(), &ratio_int(2));
        assert_eq!(g.weight(2).ratio(), &ratio_int(1));
        assert!(g.has_edge(0, 2));
    }

    fn err_at(input: &str) -> (usize, usize, ParseErrorKind) {
        let e = parse_wrd(input).unwrap_err();
        (e.line, e.col, e.kind)
    }

    #[test]
    fn reports_line_and_column() {
        assert_eq!(err_at(""), (1, 1, MissingHeader));
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 2 0\ne 1 2\n"),
            (3, 5, NonPositiveWeight { value: "0".into() })
        );
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 2 x\ne 1 2\n"),
            (
                3,
                5,
                BadNumber {
                    what: "weight",
                    reason: "malformed number \"x\": non-digit character in integer".into()
                }
            )
        );
        assert_eq!(err_at("p wrd 2 1\nv 1 1\nv 2 1\ne 2 2\n"), (4, 3, LoopEdge { id: 2 }));
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 2 1\ne 2 1\n"),
            (4, 3, EdgeNotIncreasing { u: 2, v: 1 })
        );
        assert_eq!(
            err_at("p wrd 3 2\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 1 2\n"),
            (6, 3, DuplicateEdge { u: 1, v: 2 })
        );
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 1 2\ne 1 2\n"),
            (3, 3, DuplicateVertex { id: 1 })
        );
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 3 2\ne 1 2\n"),
            (3, 3, VertexIdOutOfRange { id: 3, n: 2 })
        );
    }

    #[test]
    fn counts_must_match_declarations() {
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\ne 1 2\n"),
            (3, 1, VertexCountMismatch { expected: 2, got: 1 })
        );
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 2 1\n"),
            (4, 1, EdgeCountMismatch { expected: 1, got: 0 })
        );
        assert_eq!(
            err_at("p wrd 2 0\nv 1 1\nv 2 1\ne 1 2\n"),
            (4, 1, TrailingContent)
        );
    }

    #[test]
    fn rejects_structural_noise() {
        assert_eq!(err_at("p wrd 1 0\nv 1 1\n\n\n"), (3, 1, EmptyLine));
        assert_eq!(err_at("x wrd 1 0\n"), (1, 1, UnknownLineType("x".into())));
        assert_eq!(err_at("p wrd 1 0\nc late\nv 1 1\n"), (2, 1, CommentAfterHeader));
        assert_eq!(err_at("p wrd 1 0\np wrd 1 0\n"), (2, 1, DuplicateHeader));
        assert_eq!(err_at("p wrd 1 0\nv 1  1\n"), (2, 5, EmptyField));
        assert_eq!(err_at("p wrd 1 0\nv 1 1 9\n"), (2, 7, TrailingField("9".into())));
        assert_eq!(err_at("p wrd 1\n"), (1, 9, MissingField("edge count")));
        assert_eq!(
            err_at("p wrd 2 1\nv 1 1\nv 2 1\ne 1 3\n"),
            (4, 5, VertexIdOutOfRange { id: 3, n: 2 })
        );
    }

    #[test]
    fn hostile_headers_do_not_allocate() {
        assert!(matches!(
            err_at("p wrd 99999999999 0\n").2,
            TooLarge { .. }
        ));
        assert!(matches!(err_at("p wrd 3 99\n").2, TooManyEdgesDeclared { .. }));
    }

    #[test]
    fn serializes_edges_in_lexicographic_order() {
        let g = parse_wrd("p wrd 3 3\nv 1 1\nv 2 1\nv 3 1\ne 2 3\ne 1 3\ne 1 2\n").unwrap();
        assert_eq!(
            to_wrd_string(&g),
            "p wrd 3 3\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 1 3\ne 2 3\n"
        );
    }
}
