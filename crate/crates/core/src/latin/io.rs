//! Text formats for squares and trades.
//!
//! A square file is `n=<order>` followed by `n` rows of whitespace-separated
//! symbols; partial squares use `.` for empty cells. A trade file holds the
//! header and then two grids, P and Q, separated by a blank line.

use super::{validate_trade, LatinError, LatinSquare, LatinTrade, PartialLatinSquare};

fn parse_header(line: &str, line_no: usize) -> Result<usize, LatinError> {
    line.trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| LatinError::Parse {
            line: line_no,
            message: format!("expected `n=<order>`, got `{}`", line.trim()),
        })
}

fn parse_row(line: &str, n: usize, line_no: usize) -> Result<Vec<Option<usize>>, LatinError> {
    let row: Vec<Option<usize>> = line
        .split_whitespace()
        .map(|tok| match tok {
            "." => Ok(None),
            _ => tok.parse().map(Some).map_err(|_| LatinError::Parse {
                line: line_no,
                message: format!("bad symbol `{tok}`"),
            }),
        })
        .collect::<Result<_, _>>()?;
    if row.len() != n {
        return Err(LatinError::Parse {
            line: line_no,
            message: format!("expected {n} entries, found {}", row.len()),
        });
    }
    Ok(row)
}

type Grid = Vec<Vec<Option<usize>>>;

/// Splits the text into the order and its grids (runs of non-blank lines).
fn grids(text: &str) -> Result<(usize, Vec<Grid>), LatinError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim_start().starts_with('#'));
    let (idx, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(LatinError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
    let n = parse_header(header, idx + 1)?;
    let mut out: Vec<Vec<Vec<Option<usize>>>> = Vec::new();
    let mut current = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            continue;
        }
        current.push(parse_row(line, n, idx + 1)?);
        if current.len() == n {
            out.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        return Err(LatinError::Parse {
            line: text.lines().count(),
            message: format!("incomplete grid: {} of {n} rows", current.len()),
        });
    }
    Ok((n, out))
}

pub fn parse_partial(text: &str) -> Result<PartialLatinSquare, LatinError> {
    let (_, gs) = grids(text)?;
    match <[_; 1]>::try_from(gs) {
        Ok([g]) => PartialLatinSquare::from_rows(g),
        Err(gs) => Err(LatinError::Parse {
            line: 1,
            message: format!("expected one grid, found {}", gs.len()),
        }),
    }
}

pub fn parse_square(text: &str) -> Result<LatinSquare, LatinError> {
    let p = parse_partial(text)?;
    let n = p.order();
    if p.volume() != n * n {
        return Err(LatinError::Parse {
            line: 1,
            message: "a latin square may not have empty cells".into(),
        });
    }
    LatinSquare::new((0..n).map(|i| (0..n).map(|j| p.get(i, j).unwrap()).collect()).collect())
}

/// Parses and validates a trade.
pub fn parse_trade(text: &str) -> Result<LatinTrade, LatinError> {
    let (p, q) = parse_trade_pair(text)?;
    validate_trade(p, q).map_err(LatinError::InvalidTrade)
}

/// Parses the two grids of a trade file without checking trade conditions.
pub fn parse_trade_pair(text: &str) -> Result<(PartialLatinSquare, PartialLatinSquare), LatinError> {
    let (_, gs) = grids(text)?;
    match <[_; 2]>::try_from(gs) {
        Ok([p, q]) => Ok((PartialLatinSquare::from_rows(p)?, PartialLatinSquare::from_rows(q)?)),
        Err(gs) => Err(LatinError::Parse {
            line: 1,
            message: format!("expected two grids (P and Q), found {}", gs.len()),
        }),
    }
}
