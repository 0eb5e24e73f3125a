//! The line-oriented instance format.
//!
//! ```text
//! # comment
//! vertices: 1 2 3
//! edge: 1 2 -> 3
//! edge: 1 3 -> 2
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use hdecomp::Dihypergraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    SyntaxError(String),
    UnknownVertex(String),
    HeadInBody(String),
    EmptyBody,
    EmptyVertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {}", describe(.kind))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::SyntaxError(m) => format!("syntax error: {m}"),
        ParseErrorKind::UnknownVertex(v) => format!("unknown vertex `{v}`"),
        ParseErrorKind::HeadInBody(v) => format!("head `{v}` also occurs in the body"),
        ParseErrorKind::EmptyBody => "edge has an empty body".into(),
        ParseErrorKind::EmptyVertexSet => "no vertices declared".into(),
    }
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((s, sc)) = start.take() {
                out.push(Token { text: &line[s..i], column: sc + 1 });
            }
        } else if start.is_none() {
            start = Some((i, col));
        }
    }
    if let Some((s, sc)) = start {
        out.push(Token { text: &line[s..], column: sc + 1 });
    }
    out
}

pub fn parse(text: &str) -> Result<Dihypergraph, ParseError> {
    let err = |line, column, kind| ParseError { line, column, kind };
    let mut vertices: Option<Vec<String>> = None;
    let mut declared: HashSet<&str> = HashSet::new();
    let mut edges: Vec<(Vec<String>, String)> = Vec::new();
    let mut last_line = 1;

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = tokens(line).into_iter();
        let Some(first) = toks.next() else { continue };
        let (keyword, rest) = match first.text.split_once(':') {
            Some((k, r)) => (k, r),
            None => {
                return Err(err(line_no, first.column, ParseErrorKind::SyntaxError(format!(
                    "expected `vertices:` or `edge:`, found `{}`",
                    first.text
                ))))
            }
        };
        // Names glued to the keyword (`edge:1 -> 2`) count as tokens too.
        let mut args: Vec<Token> = Vec::new();
        if !rest.is_empty() {
            args.push(Token { text: rest, column: first.column + keyword.chars().count() + 1 });
        }
        args.extend(toks);

        match keyword {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line_no, first.column, ParseErrorKind::SyntaxError("second `vertices:` line".into())));
                }
                if args.is_empty() {
                    return Err(err(line_no, first.column, ParseErrorKind::EmptyVertexSet));
                }
                let mut names: Vec<String> = Vec::new();
                for t in &args {
                    if t.text == "->" {
                        return Err(err(line_no, t.column, ParseErrorKind::SyntaxError("`->` is not a vertex name".into())));
                    }
                    if !declared.insert(t.text) {
                        return Err(err(line_no, t.column, ParseErrorKind::SyntaxError(format!("vertex `{}` declared twice", t.text))));
                    }
                    names.push(t.text.to_string());
                }
                vertices = Some(names);
            }
            "edge" => {
                if vertices.is_none() {
                    return Err(err(line_no, first.column, ParseErrorKind::SyntaxError("edge before the `vertices:` line".into())));
                }
                let Some(arrow) = args.iter().position(|t| t.text == "->") else {
                    return Err(err(line_no, first.column, ParseErrorKind::SyntaxError("edge without `->`".into())));
                };
                let (body, after) = (&args[..arrow], &args[arrow + 1..]);
                let head = match after {
                    [h] => h,
                    [] => return Err(err(line_no, args[arrow].column, ParseErrorKind::SyntaxError("missing head after `->`".into()))),
                    [_, extra, ..] => {
                        return Err(err(line_no, extra.column, ParseErrorKind::SyntaxError("an edge has exactly one head".into())))
                    }
                };
                if body.is_empty() {
                    return Err(err(line_no, args[arrow].column, ParseErrorKind::EmptyBody));
                }
                for t in body.iter().chain([head]) {
                    if t.text == "->" {
                        return Err(err(line_no, t.column, ParseErrorKind::SyntaxError("repeated `->`".into())));
                    }
                    if !declared.contains(t.text) {
                        return Err(err(line_no, t.column, ParseErrorKind::UnknownVertex(t.text.to_string())));
                    }
                }
                if body.iter().any(|t| t.text == head.text) {
                    return Err(err(line_no, head.column, ParseErrorKind::HeadInBody(head.text.to_string())));
                }
                edges.push((body.iter().map(|t| t.text.to_string()).collect(), head.text.to_string()));
            }
            other => {
                return Err(err(line_no, first.column, ParseErrorKind::SyntaxError(format!("unknown keyword `{other}:`"))))
            }
        }
    }

    let Some(names) = vertices else {
        return Err(err(last_line, 1, ParseErrorKind::EmptyVertexSet));
    };
    Ok(Dihypergraph::new(names, edges).expect("checked while parsing"))
}

/// Canonical text form: vertices in declaration order, edges sorted.
pub fn to_text(h: &Dihypergraph) -> String {
    let mut out = String::from("vertices:");
    for v in h.vertices() {
        write!(out, " {}", h.name(v)).unwrap();
    }
    out.push('\n');
    for e in h.edges() {
        writeln!(out, "edge: {}", h.display_edge(e)).unwrap();
    }
    out
}
