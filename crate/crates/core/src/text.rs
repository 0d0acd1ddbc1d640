//! Shared helpers for the line-oriented graph and coloring formats.

/// Malformed input, with the 1-based line the problem was found on.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Splits `line` on single spaces and checks the leading keyword and the
/// number of fields. Rejects any other whitespace layout.
pub(crate) fn fields<'a>(
    line: &'a str,
    lineno: usize,
    keyword: &str,
    count: usize,
) -> Result<Vec<&'a str>, ParseError> {
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.first() != Some(&keyword) {
        return Err(ParseError::new(lineno, format!("expected `{keyword}` record, found `{line}`")));
    }
    if parts.len() != count + 1 || parts.iter().any(|p| p.is_empty()) {
        return Err(ParseError::new(lineno, format!("`{keyword}` record takes {count} single-space separated fields")));
    }
    Ok(parts[1..].to_vec())
}

/// Parses a canonical decimal (no sign, no leading zeros).
pub(crate) fn number<T: std::str::FromStr>(s: &str, lineno: usize, what: &str) -> Result<T, ParseError> {
    let canonical = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return Err(ParseError::new(lineno, format!("{what} `{s}` is not a decimal integer")));
    }
    s.parse().map_err(|_| ParseError::new(lineno, format!("{what} `{s}` is out of range")))
}

/// Lines of `input` with their 1-based numbers. Each line must be terminated
/// by `\n`, except that a missing final newline is tolerated.
pub(crate) fn lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.strip_suffix('\n').unwrap_or(input).split('\n').enumerate().map(|(i, l)| (i + 1, l))
}
