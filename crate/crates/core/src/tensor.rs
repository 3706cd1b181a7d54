//! Hypercubic integer tensors.
//!
//! Every tensor has `dims` axes of identical length `side`, stored flat in
//! row-major order (axis 0 varies slowest). For matrices axis 0 indexes rows.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntTensor {
    dims: usize,
    side: usize,
    data: Vec<i64>,
}

fn checked_volume(dims: usize, side: usize) -> Result<usize> {
    u32::try_from(dims)
        .ok()
        .and_then(|d| side.checked_pow(d))
        .ok_or(Error::Overflow("computing tensor volume"))
}

impl IntTensor {
    pub fn new(dims: usize, side: usize, data: Vec<i64>) -> Result<Self> {
        if dims == 0 {
            return Err(Error::Shape("tensor needs at least one axis".into()));
        }
        if side == 0 {
            return Err(Error::Shape("tensor side must be positive".into()));
        }
        let expected = checked_volume(dims, side)?;
        if data.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: data.len(),
            });
        }
        Ok(Self { dims, side, data })
    }

    /// Square matrix from row-major data; the side is inferred from the length.
    pub fn matrix(data: Vec<i64>) -> Result<Self> {
        let side = (data.len() as f64).sqrt().round() as usize;
        if side * side != data.len() {
            return Err(Error::Shape(format!(
                "{} elements do not form a square matrix",
                data.len()
            )));
        }
        Self::new(2, side, data)
    }

    /// Builds a matrix from explicit rows, rejecting ragged or rectangular input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let side = rows.len();
        let mut data = Vec::with_capacity(side * side);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != side {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {side}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::new(2, side, data)
    }

    pub fn filled(dims: usize, side: usize, value: i64) -> Result<Self> {
        let len = checked_volume(dims, side)?;
        Self::new(dims, side, vec![value; len])
    }

    pub fn zeros(dims: usize, side: usize) -> Result<Self> {
        Self::filled(dims, side, 0)
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<i64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_matrix(&self) -> bool {
        self.dims == 2
    }

    pub(crate) fn require_matrix(&self) -> Result<()> {
        if self.is_matrix() {
            Ok(())
        } else {
            Err(Error::NotMatrix(self.dims))
        }
    }

    /// Flat offset of a multi-index. Panics if the index is out of range.
    pub fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.dims, "index arity");
        index.iter().fold(0, |acc, &i| {
            assert!(
                i < self.side,
                "index {i} out of range for side {}",
                self.side
            );
            acc * self.side + i
        })
    }

    /// Multi-index of a flat offset.
    pub fn index_of(&self, mut offset: usize) -> Vec<usize> {
        let mut index = vec![0; self.dims];
        for slot in index.iter_mut().rev() {
            *slot = offset % self.side;
            offset /= self.side;
        }
        index
    }

    pub fn get(&self, index: &[usize]) -> i64 {
        self.data[self.offset(index)]
    }

    /// Matrix element at row `i`, column `j`.
    pub fn at(&self, i: usize, j: usize) -> i64 {
        debug_assert!(self.is_matrix());
        self.data[i * self.side + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        debug_assert!(self.is_matrix());
        self.data.chunks(self.side)
    }

    pub fn transpose(&self) -> Result<Self> {
        self.require_matrix()?;
        let n = self.side;
        let data = (0..n * n).map(|o| self.data[(o % n) * n + o / n]).collect();
        Self::new(2, n, data)
    }

    pub fn min(&self) -> i64 {
        self.data.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> i64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&x| x.checked_mul(factor))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("scaling a tensor"))?;
        Ok(Self { data, ..*self })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("adding tensors"))?;
        Ok(Self { data, ..*self })
    }

    pub fn map<F: FnMut(i64) -> i64>(&self, f: F) -> Self {
        Self {
            data: self.data.iter().copied().map(f).collect(),
            ..*self
        }
    }

    fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimsMismatch {
                left: self.dims,
                right: other.dims,
            });
        }
        if self.side != other.side {
            return Err(Error::SizeMismatch {
                expected: self.side,
                actual: other.side,
            });
        }
        Ok(())
    }

    /// Kronecker product of two tensors with the same number of axes.
    ///
    /// Along every axis the output index is `q * other.side + r`, holding
    /// `self[q] * other[r]`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::DimsMismatch {
                left: self.dims,
                right: other.dims,
            });
        }
        let side = self
            .side
            .checked_mul(other.side)
            .ok_or(Error::Overflow("computing kron side"))?;
        let len = checked_volume(self.dims, side)?;
        let mut data = Vec::with_capacity(len);
        let mut index = vec![0usize; self.dims];
        let mut outer = vec![0usize; self.dims];
        let mut inner = vec![0usize; self.dims];
        for _ in 0..len {
            for d in 0..self.dims {
                outer[d] = index[d] / other.side;
                inner[d] = index[d] % other.side;
            }
            let value = self
                .get(&outer)
                .checked_mul(other.get(&inner))
                .ok_or(Error::Overflow("computing kron"))?;
            data.push(value);
            // odometer increment, last axis fastest
            for d in (0..self.dims).rev() {
                index[d] += 1;
                if index[d] < side {
                    break;
                }
                index[d] = 0;
            }
        }
        Self::new(self.dims, side, data)
    }

    /// Elements of every line parallel to `axis`, in order of the flat offset
    /// of the line's first element.
    pub fn axis_lines(&self, axis: usize) -> Vec<Vec<i64>> {
        assert!(axis < self.dims, "axis {axis} out of range");
        let stride = self.side.pow((self.dims - 1 - axis) as u32);
        let block = stride * self.side;
        let mut lines = Vec::with_capacity(self.len() / self.side);
        for base in (0..self.len()).step_by(block) {
            for start in base..base + stride {
                lines.push(
                    (0..self.side)
                        .map(|t| self.data[start + t * stride])
                        .collect(),
                );
            }
        }
        lines
    }

    /// Line sums per axis: `result[axis]` holds the `side^(dims-1)` sums of
    /// the lines running parallel to that axis.
    pub fn line_sums(&self) -> Vec<Vec<i128>> {
        (0..self.dims)
            .map(|axis| {
                self.axis_lines(axis)
                    .iter()
                    .map(|line| line.iter().map(|&x| i128::from(x)).sum())
                    .collect()
            })
            .collect()
    }

    /// The `2^(dims-1)` main space diagonals. Axis 0 always runs forward; the
    /// bits of the diagonal number select which remaining axes run backward.
    /// For matrices this yields the main diagonal followed by the antidiagonal.
    pub fn main_diagonals(&self) -> Vec<Vec<i64>> {
        let n = self.side;
        let count = 1usize << (self.dims - 1);
        let mut index = vec![0usize; self.dims];
        (0..count)
            .map(|pattern| {
                (0..n)
                    .map(|t| {
                        index[0] = t;
                        for (d, slot) in index.iter_mut().enumerate().skip(1) {
                            *slot = if pattern >> (d - 1) & 1 == 1 {
                                n - 1 - t
                            } else {
                                t
                            };
                        }
                        self.get(&index)
                    })
                    .collect()
            })
            .collect()
    }
}

/// The all-ones tensor with `dims` axes of length `side`.
pub fn ones_tensor(dims: usize, side: usize) -> Result<IntTensor> {
    IntTensor::filled(dims, side, 1)
}

pub fn kron(x: &IntTensor, y: &IntTensor) -> Result<IntTensor> {
    x.kron(y)
}

impl fmt::Display for IntTensor {
    /// Whitespace-aligned rows; higher axes are separated by blank lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (r, row) in self.data.chunks(self.side).enumerate() {
            if r > 0 {
                // one blank line per completed higher-axis block
                let mut rows_done = r;
                let mut blanks = 0;
                for _ in 2..self.dims {
                    if rows_done % self.side != 0 {
                        break;
                    }
                    rows_done /= self.side;
                    blanks += 1;
                }
                for _ in 0..blanks {
                    writeln!(f)?;
                }
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l2() -> IntTensor {
        IntTensor::from_rows(&[[0, 1], [1, 0]]).unwrap()
    }

    fn l3() -> IntTensor {
        IntTensor::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap()
    }

    #[test]
    fn ones_examples() {
        assert_eq!(ones_tensor(2, 2).unwrap().data(), &[1, 1, 1, 1]);
        assert_eq!(ones_tensor(2, 1).unwrap().data(), &[1]);
        let cube = ones_tensor(3, 2).unwrap();
        assert_eq!(cube.len(), 8);
        assert!(cube.data().iter().all(|&x| x == 1));
        assert!(ones_tensor(0, 2).is_err());
        assert!(ones_tensor(2, 0).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(IntTensor::new(2, 3, vec![0; 8]).is_err());
        assert!(IntTensor::from_rows(&[vec![1, 2], vec![3]]).is_err());
        assert!(IntTensor::from_rows(&[vec![1, 2, 3], vec![3, 4, 5]]).is_err());
        assert!(IntTensor::matrix(vec![1, 2, 3]).is_err());
    }

    #[test]
    fn kron_tiles_and_blocks() {
        let e2 = ones_tensor(2, 2).unwrap();
        let e3 = ones_tensor(2, 3).unwrap();
        let beta = e2.kron(&l3()).unwrap();
        let expected_beta = IntTensor::from_rows(&[
            [0, 1, 2, 0, 1, 2],
            [1, 2, 0, 1, 2, 0],
            [2, 0, 1, 2, 0, 1],
            [0, 1, 2, 0, 1, 2],
            [1, 2, 0, 1, 2, 0],
            [2, 0, 1, 2, 0, 1],
        ])
        .unwrap();
        assert_eq!(beta, expected_beta);

        let alpha = l2().kron(&e3).unwrap();
        let expected_alpha = IntTensor::from_rows(&[
            [0, 0, 0, 1, 1, 1],
            [0, 0, 0, 1, 1, 1],
            [0, 0, 0, 1, 1, 1],
            [1, 1, 1, 0, 0, 0],
            [1, 1, 1, 0, 0, 0],
            [1, 1, 1, 0, 0, 0],
        ])
        .unwrap();
        assert_eq!(alpha, expected_alpha);
    }

    #[test]
    fn kron_with_unit_is_identity() {
        let x = l3();
        assert_eq!(x.kron(&ones_tensor(2, 1).unwrap()).unwrap(), x);
        assert_eq!(ones_tensor(2, 1).unwrap().kron(&x).unwrap(), x);
    }

    #[test]
    fn kron_dims_mismatch() {
        let cube = ones_tensor(3, 2).unwrap();
        assert_eq!(
            l2().kron(&cube),
            Err(Error::DimsMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn kron_overflow_is_reported() {
        let big = IntTensor::filled(2, 1, i64::MAX).unwrap();
        let two = IntTensor::filled(2, 1, 2).unwrap();
        assert!(matches!(big.kron(&two), Err(Error::Overflow(_))));
    }

    #[test]
    fn line_sums_of_lo_shu() {
        let m3 = IntTensor::from_rows(&[[3, 8, 1], [2, 4, 6], [7, 0, 5]]).unwrap();
        let sums = m3.line_sums();
        assert_eq!(sums.len(), 2);
        assert!(sums.iter().flatten().all(|&s| s == 12));
    }

    #[test]
    fn line_sums_of_ones_and_cube() {
        assert!(ones_tensor(2, 2)
            .unwrap()
            .line_sums()
            .iter()
            .flatten()
            .all(|&s| s == 2));
        let cube = IntTensor::new(3, 2, vec![0, 1, 1, 0, 1, 0, 0, 1]).unwrap();
        let sums = cube.line_sums();
        assert_eq!(sums.len(), 3);
        assert!(sums.iter().all(|axis| axis.len() == 4));
        assert!(sums.iter().flatten().all(|&s| s == 1));
    }

    #[test]
    fn axis_lines_of_matrix() {
        let m = IntTensor::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(m.axis_lines(0), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(m.axis_lines(1), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn diagonals() {
        let m = IntTensor::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]).unwrap();
        assert_eq!(m.main_diagonals(), vec![vec![1, 5, 9], vec![3, 5, 7]]);
        let cube = IntTensor::new(3, 2, (0..8).collect()).unwrap();
        let diags = cube.main_diagonals();
        assert_eq!(diags.len(), 4);
        assert_eq!(diags[0], vec![0, 7]);
        assert!(diags.contains(&vec![1, 6]));
        assert!(diags.contains(&vec![2, 5]));
        assert!(diags.contains(&vec![3, 4]));
    }

    #[test]
    fn index_round_trip() {
        let cube = IntTensor::zeros(3, 4).unwrap();
        for o in 0..cube.len() {
            assert_eq!(cube.offset(&cube.index_of(o)), o);
        }
    }

    #[test]
    fn display_layers() {
        let cube = IntTensor::new(3, 2, vec![0, 1, 1, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(cube.to_string(), "0 1\n1 0\n\n1 0\n0 1\n");
        assert_eq!(l2().to_string(), "0 1\n1 0\n");
    }
}
