//! Ordered sequences of signed basis moves.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: i64) -> Option<Sign> {
        match x.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            _ => Err(format!("bad sign `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMove<M> {
    pub sign: Sign,
    pub mv: M,
}

/// Moves in application order, with one audit figure per step (the
/// meaning of the figure depends on the move kind).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePlan<M> {
    pub moves: Vec<SignedMove<M>>,
    pub audit: Vec<usize>,
}

impl<M> MovePlan<M> {
    pub fn empty() -> Self {
        MovePlan {
            moves: Vec::new(),
            audit: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn audit_max(&self) -> usize {
        self.audit.iter().copied().max().unwrap_or(0)
    }
}
