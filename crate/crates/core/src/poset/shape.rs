use std::fmt;

use super::Poset;
use crate::error::{Error, Result};

/// A Young diagram or shifted diagram.
///
/// Cells are `(row, col)`, 1-based. Row `r` of a shifted shape starts in
/// column `r`. Element ids of [`Shape::poset`] enumerate the cells row by
/// row, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    rows: Vec<usize>,
    shifted: bool,
}

impl Shape {
    pub fn new(rows: Vec<usize>, shifted: bool) -> Result<Shape> {
        if rows.iter().any(|&r| r == 0) {
            return Err(Error::InvalidShape(format!("{rows:?} has an empty row")));
        }
        let ok = rows.windows(2).all(|w| {
            if shifted {
                w[0] > w[1]
            } else {
                w[0] >= w[1]
            }
        });
        if !ok {
            let need = if shifted { "strictly" } else { "weakly" };
            return Err(Error::InvalidShape(format!(
                "row lengths {rows:?} must be {need} decreasing"
            )));
        }
        Ok(Shape { rows, shifted })
    }

    /// `m` rows of length `n`.
    pub fn rectangle(m: usize, n: usize) -> Shape {
        Shape::new(vec![n; m], false).expect("rectangle")
    }

    /// `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Shape {
        Shape::new((1..=k).rev().collect(), false).expect("staircase")
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// `Some((m, n))` if this is an unshifted `m × n` rectangle.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        if self.shifted || self.rows.is_empty() {
            return None;
        }
        let n = self.rows[0];
        self.rows
            .iter()
            .all(|&r| r == n)
            .then_some((self.rows.len(), n))
    }

    fn first_col(&self, row: usize) -> usize {
        if self.shifted {
            row
        } else {
            1
        }
    }

    /// All cells in id order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.rows.iter().enumerate() {
            let r = i + 1;
            let c0 = self.first_col(r);
            out.extend((c0..c0 + len).map(|c| (r, c)));
        }
        out
    }

    pub fn contains(&self, (r, c): (usize, usize)) -> bool {
        if r == 0 || r > self.rows.len() {
            return false;
        }
        let c0 = self.first_col(r);
        c >= c0 && c < c0 + self.rows[r - 1]
    }

    /// Element id of a cell.
    pub fn id_of(&self, cell: (usize, usize)) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let (r, c) = cell;
        let before: usize = self.rows[..r - 1].iter().sum();
        Some(before + c - self.first_col(r))
    }

    /// The poset `P_λ`: each cell is covered by its right and lower
    /// neighbours, so labels increase along rows and down columns.
    pub fn poset(&self) -> Poset {
        let cells = self.cells();
        let mut covers = Vec::new();
        for (id, &(r, c)) in cells.iter().enumerate() {
            for next in [(r, c + 1), (r + 1, c)] {
                if let Some(j) = self.id_of(next) {
                    covers.push((id, j));
                }
            }
        }
        Poset::from_reduced(cells.len(), covers)
    }

    /// The conjugate (transposed) shape, for unshifted shapes.
    pub fn conjugate(&self) -> Result<Shape> {
        if self.shifted {
            return Err(Error::InvalidShape("shifted shapes have no conjugate here".into()));
        }
        let n = self.rows.first().copied().unwrap_or(0);
        let cols = (1..=n)
            .map(|c| self.rows.iter().filter(|&&r| r >= c).count())
            .collect();
        Shape::new(cols, false)
    }
}

/// `shape:3,3,2` or `shifted:4,3,1`.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        let tag = if self.shifted { "shifted" } else { "shape" };
        write!(f, "{tag}:{}", rows.join(","))
    }
}
