use std::fmt;

use super::{LatinError, LatinInclusionMatrix, LatinSquare, PartialLatinSquare, TripleVector};

/// Why a pair of partial latin squares is not a latin trade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TradeViolation {
    OrderMismatch { p: usize, q: usize },
    /// Condition 1: a cell filled in exactly one of P, Q.
    ShapeMismatch { row: usize, col: usize },
    /// Condition 2: a cell holding the same symbol in P and Q.
    SameSymbol { row: usize, col: usize, symbol: usize },
    /// Condition 3: differing content in a row.
    RowContent { row: usize },
    /// Condition 3: differing content in a column.
    ColumnContent { col: usize },
}

impl TradeViolation {
    /// Which of the three trade conditions failed (0 for an order mismatch).
    pub fn condition(&self) -> usize {
        match self {
            TradeViolation::OrderMismatch { .. } => 0,
            TradeViolation::ShapeMismatch { .. } => 1,
            TradeViolation::SameSymbol { .. } => 2,
            TradeViolation::RowContent { .. } | TradeViolation::ColumnContent { .. } => 3,
        }
    }
}

impl fmt::Display for TradeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TradeViolation::OrderMismatch { p, q } => write!(f, "orders differ: {p} vs {q}"),
            TradeViolation::ShapeMismatch { row, col } => {
                write!(f, "condition 1: cell ({row},{col}) is filled in only one square")
            }
            TradeViolation::SameSymbol { row, col, symbol } => {
                write!(f, "condition 2: cell ({row},{col}) holds {symbol} in both squares")
            }
            TradeViolation::RowContent { row } => write!(f, "condition 3: row {row} contents differ"),
            TradeViolation::ColumnContent { col } => write!(f, "condition 3: column {col} contents differ"),
        }
    }
}

/// An ordered pair `(P, Q)` of partial latin squares with equal shape,
/// disagreeing on every filled cell, with equal row and column contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinTrade {
    p: PartialLatinSquare,
    q: PartialLatinSquare,
}

pub fn validate_trade(p: PartialLatinSquare, q: PartialLatinSquare) -> Result<LatinTrade, TradeViolation> {
    let n = p.order();
    if q.order() != n {
        return Err(TradeViolation::OrderMismatch { p: n, q: q.order() });
    }
    for row in 0..n {
        for col in 0..n {
            match (p.get(row, col), q.get(row, col)) {
                (Some(_), None) | (None, Some(_)) => return Err(TradeViolation::ShapeMismatch { row, col }),
                (Some(a), Some(b)) if a == b => {
                    return Err(TradeViolation::SameSymbol { row, col, symbol: a })
                }
                _ => {}
            }
        }
    }
    for r in 0..n {
        if p.row_content(r) != q.row_content(r) {
            return Err(TradeViolation::RowContent { row: r });
        }
    }
    for c in 0..n {
        if p.column_content(c) != q.column_content(c) {
            return Err(TradeViolation::ColumnContent { col: c });
        }
    }
    Ok(LatinTrade { p, q })
}

impl LatinTrade {
    pub fn new(p: PartialLatinSquare, q: PartialLatinSquare) -> Result<Self, TradeViolation> {
        validate_trade(p, q)
    }

    pub fn p(&self) -> &PartialLatinSquare {
        &self.p
    }

    pub fn q(&self) -> &PartialLatinSquare {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.p.order()
    }

    pub fn volume(&self) -> usize {
        self.p.volume()
    }

    /// +1 on the triples of P, -1 on those of Q.
    pub fn vector(&self) -> TripleVector {
        self.p.to_vector().sub(&self.q.to_vector())
    }

    /// The trade read backwards, `(Q, P)`.
    pub fn reversed(&self) -> LatinTrade {
        LatinTrade {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }
}

impl fmt::Display for LatinTrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.order())?;
        f.write_str(&self.p.grid())?;
        writeln!(f)?;
        f.write_str(&self.q.grid())
    }
}

/// Signed frequency vector of a trade, checked to lie in the kernel of the
/// inclusion matrix.
pub fn trade_vector(t: &LatinTrade) -> Result<TripleVector, LatinError> {
    let v = t.p.to_vector().sub(&t.q.to_vector());
    LatinInclusionMatrix::build(t.order())?.check_kernel(&v)?;
    Ok(v)
}

/// The trade between two latin squares: both restricted to the cells where
/// they differ.
pub fn difference_trade(l1: &LatinSquare, l2: &LatinSquare) -> Result<LatinTrade, LatinError> {
    let n = l1.order();
    if l2.order() != n {
        return Err(LatinError::OrderMismatch { left: n, right: l2.order() });
    }
    let mut p = Vec::new();
    let mut q = Vec::new();
    for (i, j, a) in l1.triples() {
        let b = l2.get(i, j);
        if a != b {
            p.push((i, j, a));
            q.push((i, j, b));
        }
    }
    if p.is_empty() {
        return Err(LatinError::IdenticalSquares);
    }
    let p = PartialLatinSquare::from_triples(n, p)?;
    let q = PartialLatinSquare::from_triples(n, q)?;
    Ok(validate_trade(p, q).expect("squares differ in a trade"))
}
