//! Text formats: game documents (`.egt`), knowledge systems (`.eks`) and
//! Graphviz output.
//!
//! Both document formats are S-expressions. `;` starts a comment that runs
//! to the end of the line. Strings are double-quoted with `\"` and `\\`
//! escapes; every other token is a bare atom.

mod dot;
mod game;
mod ks;

pub use dot::{export_dot, DotOptions};
pub use game::{parse_game, print_game};
pub use ks::{parse_knowledge_system, print_knowledge_system};

use std::fmt;

use thiserror::Error;

/// 1-based source location.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Sexp {
    Atom { text: String, quoted: bool, pos: Pos },
    List { items: Vec<Sexp>, pos: Pos },
}

impl Sexp {
    pub(crate) fn pos(&self) -> Pos {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }

    /// Text of an unquoted atom.
    pub(crate) fn symbol(&self) -> Option<&str> {
        match self {
            Sexp::Atom {
                text,
                quoted: false,
                ..
            } => Some(text),
            _ => None,
        }
    }

    pub(crate) fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List { items, .. } => Some(items),
            Sexp::Atom { .. } => None,
        }
    }

    /// A list whose first item is the bare atom `head`; returns the rest.
    pub(crate) fn form(&self, head: &str) -> Option<&[Sexp]> {
        let items = self.list()?;
        match items.first() {
            Some(first) if first.symbol() == Some(head) => Some(&items[1..]),
            _ => None,
        }
    }

    pub(crate) fn describe(&self) -> String {
        match self {
            Sexp::Atom {
                text, quoted: true, ..
            } => format!("string {text:?}"),
            Sexp::Atom { text, .. } => format!("`{text}`"),
            Sexp::List { .. } => "a list".to_string(),
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Reader<'_> {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn string(&mut self, start: Pos) -> Result<Sexp, ParseError> {
        self.bump();
        let mut text = String::new();
        loop {
            match self.bump() {
                None => return Err(ParseError::at(start, "unterminated string")),
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some(c @ ('"' | '\\')) => text.push(c),
                    Some('n') => text.push('\n'),
                    _ => return Err(ParseError::at(self.pos(), "unknown escape in string")),
                },
                Some(c) => text.push(c),
            }
        }
        Ok(Sexp::Atom {
            text,
            quoted: true,
            pos: start,
        })
    }

    fn expr(&mut self) -> Result<Sexp, ParseError> {
        self.skip_trivia();
        let pos = self.pos();
        match self.chars.peek().copied() {
            None => Err(ParseError::at(pos, "unexpected end of input")),
            Some(')') => Err(ParseError::at(pos, "unexpected `)`")),
            Some('"') => self.string(pos),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(ParseError::at(pos, "unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sexp::List { items, pos });
                        }
                        Some(_) => items.push(self.expr()?),
                    }
                }
            }
            Some(_) => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                Ok(Sexp::Atom {
                    text,
                    quoted: false,
                    pos,
                })
            }
        }
    }
}

/// Reads exactly one top-level expression.
pub(crate) fn read_one(text: &str) -> Result<Sexp, ParseError> {
    let mut reader = Reader {
        chars: text.chars().peekable(),
        line: 1,
        col: 1,
    };
    let expr = reader.expr()?;
    reader.skip_trivia();
    if reader.chars.peek().is_some() {
        return Err(ParseError::at(reader.pos(), "trailing input after the document"));
    }
    Ok(expr)
}

pub(crate) fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
