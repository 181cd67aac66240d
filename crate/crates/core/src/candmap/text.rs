//! Line-oriented map files: one `(g1,g2,g3)` or `(g)` symbol per line, `#`
//! comments and blank lines ignored.

use thiserror::Error;

use super::{OrbitSymbol, SymbolError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected a parenthesized symbol")]
    MissingParentheses,
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("symbol listed twice")]
    Duplicate,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct MapParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

pub fn parse_map_text(text: &str) -> Result<Vec<OrbitSymbol>, MapParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| MapParseError { line, kind };
        let inner = content
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or(err(ParseErrorKind::MissingParentheses))?;
        let names: Vec<&str> = inner.split(',').collect();
        let symbol = super::validate_symbol(&names).map_err(|e| err(e.into()))?;
        if out.contains(&symbol) {
            return Err(err(ParseErrorKind::Duplicate));
        }
        out.push(symbol);
    }
    Ok(out)
}

pub fn format_map_text(symbols: &[OrbitSymbol]) -> String {
    let mut out = String::new();
    for s in symbols {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
