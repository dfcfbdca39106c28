use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::{ci, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Self::ALL[i % 3]
    }

    /// `(self, next, next²)` in cyclic order.
    pub fn cyclic(self) -> (Axis, Axis, Axis) {
        let i = self.index();
        (self, Self::from_index(i + 1), Self::from_index(i + 2))
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// εᵢⱼₖ with ε_xyz = +1.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

pub fn pauli<R: Real>(axis: Axis) -> Matrix<R> {
    let rows = match axis {
        Axis::X => [[ci(0, 0), ci(1, 0)], [ci(1, 0), ci(0, 0)]],
        Axis::Y => [[ci(0, 0), ci(0, -1)], [ci(0, 1), ci(0, 0)]],
        Axis::Z => [[ci(1, 0), ci(0, 0)], [ci(0, 0), ci(-1, 0)]],
    };
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect())
}
