//! Dense matrices over GF(q) with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};

/// A rows x cols matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Mat {
    pub fn zero(field: FiniteField, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FiniteField, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from explicit rows, validating entry representatives.
    pub fn from_rows(field: &FiniteField, rows: &[Vec<u64>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            for &v in row {
                data.push(field.check_elem(v)?);
            }
        }
        Ok(Mat {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds from raw element representatives without range re-checks.
    pub fn from_elems(field: &FiniteField, rows: usize, cols: usize, data: Vec<Elem>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.order()));
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries as u64 rows, the JSON-facing shape.
    pub fn rows_u64(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as u64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: Elem) -> Mat {
        let data = self.data.iter().map(|&a| self.field.mul(a, s)).collect();
        Mat {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Mat::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0 as Elem; self.cols];
        for (r, &vr) in v.iter().enumerate() {
            if vr == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add(out[c], f.mul(vr, self.get(r, c)));
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn stack(&self, other: &Mat) -> Result<Mat> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "stack {} cols on {} cols",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Entry-wise trace pairing tr(X Y^T) = sum_ij X_ij Y_ij.
    pub fn trace_pair(&self, other: &Mat) -> Result<Elem> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let mut acc: Elem = 0;
        for (&a, &b) in self.data.iter().zip(&other.data) {
            acc = f.add(acc, f.mul(a, b));
        }
        Ok(acc)
    }

    /// Row-major flattening into a single row vector.
    pub fn flatten(&self) -> Vec<Elem> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn check_same_shape(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form: unit pivots, zeros above and below each
    /// pivot, zero rows trimmed to the bottom. Deterministic.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..m.cols {
            if pr >= m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&r| m.get(r, pc) != 0) else {
                continue;
            };
            if sel != pr {
                for c in 0..m.cols {
                    let a = m.get(sel, c);
                    let b = m.get(pr, c);
                    m.set(sel, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = f.inv(m.get(pr, pc));
            for c in 0..m.cols {
                m.set(pr, c, f.mul(m.get(pr, c), inv));
            }
            for r in 0..m.rows {
                if r != pr {
                    let factor = m.get(r, pc);
                    if factor != 0 {
                        for c in 0..m.cols {
                            let v = f.sub(m.get(r, c), f.mul(factor, m.get(pr, c)));
                            m.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        let rank = pr;
        Rref {
            mat: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rows spanning the right kernel {x : M x^T = 0}. The basis is the RREF
    /// free-variable basis, listed by increasing free column.
    pub fn right_kernel(&self) -> Mat {
        let Rref { mat, pivots, rank } = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = Mat::zero(f.clone(), free.len(), n);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for r in 0..rank {
                let coeff = mat.get(r, fc);
                if coeff != 0 {
                    out.set(i, pivots[r], f.neg(coeff));
                }
            }
        }
        out
    }

    /// Rows spanning the left kernel {x : x M = 0}.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().right_kernel()
    }

    /// Solves x A = b for a row vector x. Returns a particular solution plus
    /// rows spanning the homogeneous solutions, or None when inconsistent.
    pub fn solve_left(&self, b: &[Elem]) -> Option<(Vec<Elem>, Mat)> {
        assert_eq!(b.len(), self.cols);
        // transpose to the column-system A^T x^T = b^T and eliminate on the
        // augmented matrix
        let at = self.transpose();
        let mut aug = Mat::zero(self.field.clone(), at.rows, at.cols + 1);
        for r in 0..at.rows {
            for c in 0..at.cols {
                aug.set(r, c, at.get(r, c));
            }
            aug.set(r, at.cols, b[r]);
        }
        let Rref { mat, pivots, rank } = aug.rref();
        if pivots.contains(&at.cols) {
            return None; // pivot in the constant column
        }
        let mut particular = vec![0 as Elem; self.rows];
        for r in 0..rank {
            particular[pivots[r]] = mat.get(r, at.cols);
        }
        let homogeneous = self.transpose().right_kernel();
        Some((particular, homogeneous))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    #[test]
    fn rref_identity() {
        let f = gf2();
        let id = Mat::identity(f, 3);
        let r = id.rref();
        assert_eq!(r.mat, Mat::identity(gf2(), 3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_duplicate_rows() {
        let f = gf2();
        let m = Mat::from_rows(&f, &[vec![1, 0, 0, 1], vec![1, 0, 0, 1]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_gf3_normalizes_pivots() {
        let f = FiniteField::prime(3).unwrap();
        let m = Mat::from_rows(&f, &[vec![2, 1], vec![1, 1]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.mat, Mat::identity(f.clone(), 2));
        // [[2,1],[1,2]] has determinant 3 = 0 over GF(3)
        let singular = Mat::from_rows(&f, &[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn kernel_annihilates() {
        let f = gf2();
        let m = Mat::from_rows(&f, &[vec![1, 1, 0, 1], vec![0, 1, 1, 0]]).unwrap();
        let k = m.right_kernel();
        assert_eq!(k.rows(), 2);
        for r in 0..k.rows() {
            let prod = m.matmul(&Mat::from_elems(&f, 4, 1, k.row(r).to_vec())).unwrap();
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn solve_left_consistent_and_inconsistent() {
        let f = gf2();
        // x * A = b with A 2x3
        let a = Mat::from_rows(&f, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let (x, hom) = a.solve_left(&[1, 1, 0]).unwrap();
        assert_eq!(a.vec_mul(&x), vec![1, 1, 0]);
        assert_eq!(hom.rows(), 0);
        // [1,1,1] is not in the row space
        assert!(a.solve_left(&[0, 0, 1]).is_none());
    }

    #[test]
    fn matmul_associates_with_vec_mul() {
        let f = FiniteField::prime(3).unwrap();
        let a = Mat::from_rows(&f, &[vec![1, 2], vec![0, 1], vec![2, 2]]).unwrap();
        let v = vec![1, 2, 1];
        let direct = a.vec_mul(&v);
        let via = Mat::from_elems(&f, 1, 3, v).matmul(&a).unwrap();
        assert_eq!(via.row(0), direct.as_slice());
    }
}
