//! Signed lookup table for products of basis elements.

use std::fmt;

/// `e_i · e_j = sign[i][j] · e_{index[i][j]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicationTable {
    sign: [[i8; 8]; 8],
    index: [[u8; 8]; 8],
}

const fn p(k: u8) -> (i8, u8) {
    (1, k)
}

const fn m(k: u8) -> (i8, u8) {
    (-1, k)
}

// Row i lists e_i·e_0 .. e_i·e_7.
const ROWS: [[(i8, u8); 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), m(0), p(3), m(2), p(5), m(4), m(7), p(6)],
    [p(2), m(3), m(0), p(1), p(6), p(7), m(4), m(5)],
    [p(3), p(2), m(1), m(0), p(7), m(6), p(5), m(4)],
    [p(4), m(5), m(6), m(7), m(0), p(1), p(2), p(3)],
    [p(5), p(4), m(7), p(6), m(1), m(0), m(3), p(2)],
    [p(6), p(7), p(4), m(5), m(2), p(3), m(0), m(1)],
    [p(7), m(6), p(5), p(4), m(3), m(2), p(1), m(0)],
];

const fn split(rows: [[(i8, u8); 8]; 8]) -> MultiplicationTable {
    let mut sign = [[0i8; 8]; 8];
    let mut index = [[0u8; 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            sign[i][j] = rows[i][j].0;
            index[i][j] = rows[i][j].1;
            j += 1;
        }
        i += 1;
    }
    MultiplicationTable { sign, index }
}

pub static BASIS_TABLE: MultiplicationTable = split(ROWS);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableViolation {
    IdentityRow { j: usize },
    IdentityColumn { i: usize },
    Square { i: usize },
    AntiCommutativity { i: usize, j: usize },
    BadEntry { i: usize, j: usize },
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::IdentityRow { j } => write!(f, "e0·e{j} != e{j}"),
            TableViolation::IdentityColumn { i } => write!(f, "e{i}·e0 != e{i}"),
            TableViolation::Square { i } => write!(f, "e{i}·e{i} != -1"),
            TableViolation::AntiCommutativity { i, j } => {
                write!(f, "e{i}·e{j} != -(e{j}·e{i})")
            }
            TableViolation::BadEntry { i, j } => write!(f, "entry ({i},{j}) out of range"),
        }
    }
}

impl MultiplicationTable {
    pub fn standard() -> &'static MultiplicationTable {
        &BASIS_TABLE
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> (i8, usize) {
        (self.sign[i][j], self.index[i][j] as usize)
    }

    pub fn with_entry(mut self, i: usize, j: usize, sign: i8, index: u8) -> Self {
        self.sign[i][j] = sign;
        self.index[i][j] = index;
        self
    }

    /// Checks the structural invariants: identity row and column, imaginary
    /// units squaring to -1, and anti-commutativity off the diagonal.
    pub fn validate(&self) -> Result<(), Vec<TableViolation>> {
        let mut bad = Vec::new();
        for i in 0..8 {
            for j in 0..8 {
                if !matches!(self.sign[i][j], -1 | 1) || self.index[i][j] > 7 {
                    bad.push(TableViolation::BadEntry { i, j });
                }
            }
        }
        for j in 0..8 {
            if self.product(0, j) != (1, j) {
                bad.push(TableViolation::IdentityRow { j });
            }
        }
        for i in 0..8 {
            if self.product(i, 0) != (1, i) {
                bad.push(TableViolation::IdentityColumn { i });
            }
        }
        for i in 1..8 {
            if self.product(i, i) != (-1, 0) {
                bad.push(TableViolation::Square { i });
            }
            for j in (i + 1)..8 {
                let (s_ij, k_ij) = self.product(i, j);
                let (s_ji, k_ji) = self.product(j, i);
                if k_ij != k_ji || s_ij != -s_ji || k_ij == 0 {
                    bad.push(TableViolation::AntiCommutativity { i, j });
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }
}
