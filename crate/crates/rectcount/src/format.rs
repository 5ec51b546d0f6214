//! Text formats for matrices and target columns.
//!
//! A matrix file starts with a line `m n`, followed by `m` rows. A row is
//! either `n` whitespace-separated tokens or, for binary rows, one run of
//! `n` characters from `0`/`1`. A pattern file is one line of `m` tokens
//! (or one `0`/`1` run of length `m`).
//!
//! Tokens are interned into [`Symbol`]s through a shared [`SymbolTable`], so a
//! matrix and a pattern parsed with the same table compare token by token.
//! `0` and `1` always map to [`Symbol::ZERO`] and [`Symbol::ONE`].

use std::collections::HashMap;

use rectcount_core::{ColumnPattern, RectMatrix, Symbol};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

#[derive(Debug, Clone)]
pub struct SymbolTable {
    ids: HashMap<String, Symbol>,
    names: Vec<String>,
}

impl Default for SymbolTable {
    fn default() -> Self {
        SymbolTable {
            ids: HashMap::from([("0".to_owned(), Symbol::ZERO), ("1".to_owned(), Symbol::ONE)]),
            names: vec!["0".to_owned(), "1".to_owned()],
        }
    }
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, token: &str) -> Symbol {
        if let Some(&s) = self.ids.get(token) {
            return s;
        }
        let s = Symbol(self.names.len() as u32);
        self.ids.insert(token.to_owned(), s);
        self.names.push(token.to_owned());
        s
    }

    pub fn name(&self, symbol: Symbol) -> Option<&str> {
        self.names.get(symbol.0 as usize).map(String::as_str)
    }
}

fn is_bit_run(token: &str) -> bool {
    !token.is_empty() && token.bytes().all(|b| b == b'0' || b == b'1')
}

/// Reads `expected` symbols from one line, accepting the compact `0101` form.
fn parse_symbols(text: &str, expected: usize, line: usize, table: &mut SymbolTable) -> Result<Vec<Symbol>, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() == expected {
        return Ok(tokens.into_iter().map(|t| table.intern(t)).collect());
    }
    if let [run] = tokens[..] {
        if is_bit_run(run) && run.len() == expected {
            return Ok(run.bytes().map(|b| Symbol::from_bit(b == b'1')).collect());
        }
    }
    Err(err(line, format!("expected {expected} entries, found {}", tokens.len())))
}

pub fn parse_matrix(text: &str, table: &mut SymbolTable) -> Result<RectMatrix, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, "missing 'm n' header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [m, n] = dims[..] else {
        return Err(err(header_line, "header must be 'm n'"));
    };
    let parse_dim = |s: &str| s.parse::<usize>().map_err(|_| err(header_line, format!("invalid dimension '{s}'")));
    let (m, n) = (parse_dim(m)?, parse_dim(n)?);

    let mut entries = Vec::with_capacity(m * n);
    let mut last_line = header_line;
    for row in 0..m {
        let (line, text) = match lines.next() {
            Some(next) => next,
            None if n == 0 => (last_line + 1, ""),
            None => return Err(err(last_line + 1, format!("missing row {} of {m}", row + 1))),
        };
        last_line = line;
        entries.extend(parse_symbols(text, n, line, table)?);
    }
    if let Some((line, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(line, format!("unexpected content after {m} rows")));
    }
    RectMatrix::new(m, n, entries).map_err(|e| err(last_line, e.to_string()))
}

/// Parses a pattern of length `rows`.
pub fn parse_pattern(text: &str, rows: usize, table: &mut SymbolTable) -> Result<ColumnPattern, ParseError> {
    let mut content = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line, first) = match content.next() {
        Some((i, l)) => (i + 1, l),
        None if rows == 0 => return Ok(ColumnPattern::new(Vec::new())),
        None => return Err(err(1, "empty pattern file")),
    };
    if let Some((i, _)) = content.next() {
        return Err(err(i + 1, "pattern must be a single line"));
    }
    parse_symbols(first, rows, line, table).map(ColumnPattern::new)
}

/// Writes a matrix in the token form accepted by [`parse_matrix`].
pub fn format_matrix(matrix: &RectMatrix, table: &SymbolTable) -> String {
    let mut out = format!("{} {}\n", matrix.rows(), matrix.cols());
    for r in 0..matrix.rows() {
        let row: Vec<String> = matrix
            .row(r)
            .iter()
            .map(|&s| table.name(s).map_or_else(|| s.to_string(), str::to_owned))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
