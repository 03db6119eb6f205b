//! The `wst` text format.
//!
//! ```text
//! p wst <n> <m>
//! w <v> <weight>        n lines, ascending v, 1-indexed
//! e <u> <v>             m lines, u < v, ascending
//! t <k> <v1> ... <vk>   ascending
//! ```
//!
//! Lines starting with `c` are comments. The parser accepts the `w`, `e`
//! and `t` lines in any order; the writer always emits the canonical form.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Instance, MAX_WEIGHT};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<VertexSet> = Vec::new();
    let mut terminals: Option<Vec<usize>> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };
        let err = |column: usize, message: String| ParseError { line, column, message };
        if first.text == "c" {
            continue;
        }
        let num = |i: usize| -> Result<u64, ParseError> {
            let tok = toks.get(i).ok_or_else(|| err(raw.len() + 1, "missing field".into()))?;
            tok.text
                .parse::<u64>()
                .map_err(|_| err(tok.column, format!("expected a number, found `{}`", tok.text)))
        };
        let col = |i: usize| toks.get(i).map_or(raw.len() + 1, |t| t.column);
        if first.text != "p" && header.is_none() {
            return Err(err(first.column, "expected `p wst <n> <m>` before any data".into()));
        }
        let n = header.map_or(0, |h| h.0);
        let vertex = |i: usize| -> Result<usize, ParseError> {
            let v = num(i)?;
            if v == 0 || v > n as u64 {
                return Err(err(col(i), format!("vertex {v} out of range 1..={n}")));
            }
            Ok(v as usize - 1)
        };
        let expect_len = |len: usize| -> Result<(), ParseError> {
            if toks.len() > len {
                Err(err(col(len), "unexpected trailing field".into()))
            } else {
                Ok(())
            }
        };
        match first.text {
            "p" => {
                if header.is_some() {
                    return Err(err(first.column, "duplicate problem line".into()));
                }
                if toks.get(1).map(|t| t.text) != Some("wst") {
                    return Err(err(col(1), "expected format name `wst`".into()));
                }
                let n = num(2)? as usize;
                let m = num(3)? as usize;
                expect_len(4)?;
                header = Some((n, m));
                weights = vec![None; n];
                adj = vec![VertexSet::new(n); n];
            }
            "w" => {
                let v = vertex(1)?;
                let w = num(2)?;
                expect_len(3)?;
                if w > MAX_WEIGHT {
                    return Err(err(col(2), format!("weight {w} exceeds {MAX_WEIGHT}")));
                }
                if weights[v].replace(w).is_some() {
                    return Err(err(col(1), format!("duplicate weight for vertex {}", v + 1)));
                }
            }
            "e" => {
                let u = vertex(1)?;
                let v = vertex(2)?;
                expect_len(3)?;
                if u == v {
                    return Err(err(col(2), format!("self-loop on vertex {}", u + 1)));
                }
                if !adj[u].insert(v) {
                    return Err(err(col(1), format!("duplicate edge {} {}", u.min(v) + 1, u.max(v) + 1)));
                }
                adj[v].insert(u);
                edges.push((u, v));
            }
            "t" => {
                if terminals.is_some() {
                    return Err(err(first.column, "duplicate terminal line".into()));
                }
                let k = num(1)? as usize;
                if toks.len() != k + 2 {
                    return Err(err(
                        col(1),
                        format!("terminal count {k} but {} listed", toks.len().saturating_sub(2)),
                    ));
                }
                let mut ts = Vec::with_capacity(k);
                let mut seen = VertexSet::new(n);
                for i in 0..k {
                    let v = vertex(i + 2)?;
                    if !seen.insert(v) {
                        return Err(err(col(i + 2), format!("duplicate terminal {}", v + 1)));
                    }
                    ts.push(v);
                }
                terminals = Some(ts);
            }
            other => return Err(err(first.column, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m)) = header else {
        return Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing `p wst <n> <m>` line".into(),
        });
    };
    let end = |message: String| ParseError {
        line: last_line + 1,
        column: 1,
        message,
    };
    if edges.len() != m {
        return Err(end(format!("header declares {m} edges but {} given", edges.len())));
    }
    let weights: Vec<u64> = match weights.iter().position(Option::is_none) {
        Some(v) => return Err(end(format!("no weight given for vertex {}", v + 1))),
        None => weights.into_iter().map(Option::unwrap).collect(),
    };
    let terminals = terminals.unwrap_or_default();
    Instance::new(n, edges, weights, terminals).map_err(|e| end(e.to_string()))
}

/// Canonical text form; `parse_instance` inverts it exactly.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "p wst {} {}", inst.n(), inst.m()).unwrap();
    for v in 0..inst.n() {
        writeln!(out, "w {} {}", v + 1, inst.weight(v)).unwrap();
    }
    for (u, v) in inst.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    write!(out, "t {}", inst.terminals().len()).unwrap();
    for t in inst.terminals() {
        write!(out, " {}", t + 1).unwrap();
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_example() {
        let text = "p wst 3 3\nw 1 1\nw 2 1\nw 3 1\ne 1 2\ne 2 3\ne 1 3\nt 1 1\n";
        let g = parse_instance(text).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.terminals().to_vec(), vec![0]);
        assert_eq!(
            serialize_instance(&g),
            "p wst 3 3\nw 1 1\nw 2 1\nw 3 1\ne 1 2\ne 1 3\ne 2 3\nt 1 1\n"
        );
    }

    #[test]
    fn isolated_pair() {
        let g = parse_instance("p wst 2 0\nw 1 4\nw 2 5\nt 0\n").unwrap();
        assert_eq!(g.m(), 0);
        assert!(g.terminals().is_empty());
    }

    #[test]
    fn errors_are_located() {
        let e = parse_instance("p wst 2 1\nw 1 1\nw 2 1\ne 1 1\nt 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 5));
        let e = parse_instance("p wst 2 2\nw 1 1\nw 2 1\ne 1 2\ne 2 1\nt 0\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = parse_instance("p wst 1 0\nw 1 4294967296\nt 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_instance("p wst 1 0\nw 1 1\nt 1 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = parse_instance("p wst 2 1\nw 1 1\nw 2 1\nt 0\n").unwrap_err();
        assert!(e.message.contains("declares 1 edges"));
    }

    #[test]
    fn comments_and_order() {
        let g = parse_instance("c hello\np wst 2 1\ne 1 2\nt 1 2\nw 2 3\nw 1 1\n").unwrap();
        assert_eq!(g.weights(), &[1, 3]);
        assert!(g.adjacent(0, 1));
    }
}
