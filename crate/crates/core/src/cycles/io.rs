//! Text formats for cycle systems and cycle trades.
//!
//! A system file is `n=<order>` followed by one cycle per line,
//! `v0 v1 v2 v3`. A trade file has the header, the cycles of `T`, a blank
//! line, then the cycles of `T*`. Lines starting with `#` are ignored.

use super::graph::FourCycle;
use super::system::{CycleSystem, CycleTradePair};
use super::CycleError;

fn parse_err(line: usize, message: impl Into<String>) -> CycleError {
    CycleError::Parse {
        line,
        message: message.into(),
    }
}

/// Header order and the cycle blocks (runs of non-blank lines).
fn blocks(text: &str) -> Result<(usize, Vec<Vec<FourCycle>>), CycleError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'));
    let (idx, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let n = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| parse_err(idx + 1, format!("expected `n=<order>`, got `{}`", header.trim())))?;
    let mut out = vec![Vec::new()];
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            if !out.last().unwrap().is_empty() {
                out.push(Vec::new());
            }
            continue;
        }
        let vs: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(idx + 1, format!("bad vertex `{t}`"))))
            .collect::<Result<_, _>>()?;
        let [a, b, c, d] = <[usize; 4]>::try_from(vs)
            .map_err(|v| parse_err(idx + 1, format!("expected 4 vertices, found {}", v.len())))?;
        if [a, b, c, d].iter().any(|&v| v >= n) {
            return Err(parse_err(idx + 1, format!("vertex outside 0..{n}")));
        }
        let cycle = FourCycle::new(a, b, c, d).map_err(|e| parse_err(idx + 1, e.to_string()))?;
        out.last_mut().unwrap().push(cycle);
    }
    if out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    Ok((n, out))
}

/// Parses and validates a system file.
pub fn parse_system(text: &str) -> Result<CycleSystem, CycleError> {
    let (n, mut bs) = blocks(text)?;
    let cycles = match bs.len() {
        0 => Vec::new(),
        1 => bs.pop().unwrap(),
        k => return Err(parse_err(1, format!("expected one block of cycles, found {k}"))),
    };
    CycleSystem::new(n, cycles)
}

/// Parses and validates a trade file; returns the order and the pair.
pub fn parse_trade(text: &str) -> Result<(usize, CycleTradePair), CycleError> {
    let (n, bs) = blocks(text)?;
    let [t, t_star] = <[Vec<FourCycle>; 2]>::try_from(bs)
        .map_err(|bs| parse_err(1, format!("expected two blocks of cycles, found {}", bs.len())))?;
    let pair = CycleTradePair::new(t, t_star).map_err(CycleError::InvalidTrade)?;
    Ok((n, pair))
}

pub fn format_trade(n: usize, pair: &CycleTradePair) -> String {
    let mut out = format!("n={n}\n");
    let line = |c: &FourCycle| {
        let v = c.vertices();
        format!("{} {} {} {}\n", v[0], v[1], v[2], v[3])
    };
    pair.t().iter().for_each(|c| out.push_str(&line(c)));
    out.push('\n');
    pair.t_star().iter().for_each(|c| out.push_str(&line(c)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{find_cycle_system, DEFAULT_NODE_BUDGET};

    #[test]
    fn system_round_trip() {
        let cs = find_cycle_system(9, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(parse_system(&cs.to_string()).unwrap(), cs);
    }

    #[test]
    fn trade_round_trip() {
        let text = "n=6\n# double-diamond\n0 2 1 3\n0 4 1 5\n\n0 2 1 4\n0 3 1 5\n";
        let (n, pair) = parse_trade(text).unwrap();
        assert_eq!(n, 6);
        assert_eq!(parse_trade(&format_trade(n, &pair)).unwrap(), (n, pair));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_system("n=9\n0 1 2\n"), Err(CycleError::Parse { line: 2, .. })));
        assert!(matches!(parse_system("n=4\n0 1 2 9\n"), Err(CycleError::Parse { .. })));
        assert!(matches!(parse_system("order 9\n"), Err(CycleError::Parse { line: 1, .. })));
        assert!(matches!(parse_system("n=9\n0 1 2 3\n"), Err(CycleError::InvalidSystem(_))));
        assert!(matches!(
            parse_trade("n=6\n0 1 2 3\n\n0 2 1 3\n"),
            Err(CycleError::InvalidTrade(_))
        ));
    }
}
