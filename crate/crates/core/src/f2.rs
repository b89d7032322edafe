//! Dense linear algebra over F2 with bit-packed rows.

use serde::Serialize;

const WORD: usize = 64;

/// A dense matrix over F2. Row `r` is stored as `ceil(cols / 64)` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(WORD).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words + c / WORD];
        let bit = 1u64 << (c % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.words, dst * self.words);
        for i in 0..self.words {
            let v = self.data[s + i];
            self.data[d + i] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.words {
            self.data.swap(a * self.words + i, b * self.words + i);
        }
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(None)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Reduces `self` to row echelon form, applying the same row operations to
    /// `rhs` when given. Pivots are chosen as the first available row in order.
    fn eliminate(&mut self, mut rhs: Option<&mut Vec<bool>>) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(found, pivot_row);
            if let Some(b) = rhs.as_deref_mut() {
                b.swap(found, pivot_row);
            }
            for r in 0..self.rows {
                if r != pivot_row && self.get(r, col) {
                    self.xor_row_into(pivot_row, r);
                    if let Some(b) = rhs.as_deref_mut() {
                        let v = b[pivot_row];
                        b[r] ^= v;
                    }
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Solves `self * x = b` for a square nonsingular matrix. Returns `None`
    /// when the matrix is singular.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows, "right-hand side has the wrong length");
        if self.rows != self.cols {
            return None;
        }
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let rank = m.eliminate(Some(&mut rhs));
        if rank < self.cols {
            return None;
        }
        // fully reduced and square: row i now holds the pivot for column i
        Some(rhs)
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).fold(false, |acc, c| acc ^ (self.get(r, c) & x[c])))
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
            .collect()
    }
}

impl Serialize for BitMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}
