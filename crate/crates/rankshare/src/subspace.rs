//! Subspaces of GF(q)^n in canonical form, plus lattice machinery:
//! sums, intersections, orthogonal complements, quotient charts, and guarded
//! exhaustive enumeration of the lattice and of GL(n, q).
//!
//! Every subspace is stored as its unique reduced-row-echelon generator
//! matrix with no zero rows, so equality of subspaces is equality of values.
//! The canonical order used throughout (reports, enumeration, counterexample
//! selection) sorts by dimension first, then lexicographically by the
//! flattened basis entries.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::mat::Mat;

/// Default cap on exhaustive lattice enumeration.
pub const DEFAULT_MAX_ENUM: u128 = 1_000_000;
/// Default cap on |GL(n, q)| enumeration.
pub const DEFAULT_MAX_GL: u128 = 10_000_000;

/// A subspace of GF(q)^n, canonically represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat, // RREF, no zero rows; dim = basis.rows()
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for r in 0..self.dim() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.basis.row(r))?;
        }
        write!(f, "> in {}^{}", self.field(), self.ambient_dim)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then_with(|| self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.flatten().cmp(&other.basis.flatten()))
    }
}

impl Subspace {
    /// Row space of an arbitrary matrix, canonicalized.
    pub fn from_rows(m: &Mat) -> Subspace {
        let r = m.rref();
        let mut data = Vec::with_capacity(r.rank * m.cols());
        for row in 0..r.rank {
            data.extend_from_slice(r.mat.row(row));
        }
        Subspace {
            ambient_dim: m.cols(),
            basis: Mat::from_elems(m.field(), r.rank, m.cols(), data),
        }
    }

    pub fn zero(field: &FiniteField, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Mat::zero(field.clone(), 0, ambient_dim),
        }
    }

    pub fn full(field: &FiniteField, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Mat::identity(field.clone(), ambient_dim),
        }
    }

    /// Span of a single vector.
    pub fn line(field: &FiniteField, v: &[Elem]) -> Subspace {
        Subspace::from_rows(&Mat::from_elems(field, 1, v.len(), v.to_vec()))
    }

    pub fn field(&self) -> &FiniteField {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    /// The canonical RREF generator matrix (dim x ambient rows).
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.rref().pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(format!(
                "{} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.stack(&other.basis)?))
    }

    /// Intersection via orthogonal complements: V cap W = (V^perp + W^perp)^perp.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let vp = self.orthocomplement();
        let wp = other.orthocomplement();
        Ok(vp.sum(&wp)?.orthocomplement())
    }

    pub fn contains_vec(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        // reduce v against the RREF basis; zero remainder means membership
        let f = self.field();
        let mut v = v.to_vec();
        let pivots = self.pivot_cols();
        for (r, &pc) in pivots.iter().enumerate() {
            let factor = v[pc];
            if factor != 0 {
                for c in 0..self.ambient_dim {
                    v[c] = f.sub(v[c], f.mul(factor, self.basis.get(r, c)));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// True when `other <= self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        if self.ambient_dim != other.ambient_dim || self.field() != other.field() {
            return false;
        }
        (0..other.dim()).all(|r| self.contains_vec(other.basis.row(r)))
    }

    /// Orthogonal complement with respect to the standard dot product.
    pub fn orthocomplement(&self) -> Subspace {
        Subspace::from_rows(&self.basis.right_kernel())
    }

    /// Orthogonal complement with respect to the symmetric bilinear form with
    /// Gram matrix `form`: {w : v . form . w^T = 0 for all v in self}.
    pub fn orthocomplement_form(&self, form: &Mat) -> Result<Subspace> {
        let bg = self.basis.matmul(form)?;
        Ok(Subspace::from_rows(&bg.right_kernel()))
    }

    /// All q^dim vectors of the subspace, in coefficient-counting order.
    pub fn vectors(&self) -> Vec<Vec<Elem>> {
        let f = self.field();
        let q = f.order() as u64;
        let k = self.dim();
        let mut out = Vec::with_capacity(q.pow(k as u32) as usize);
        for idx in 0..q.pow(k as u32) {
            let mut coeffs = Vec::with_capacity(k);
            let mut n = idx;
            for _ in 0..k {
                coeffs.push((n % q) as Elem);
                n /= q;
            }
            out.push(self.basis.vec_mul(&coeffs));
        }
        out
    }

    /// The 1-dimensional subspaces of `self`, canonically ordered.
    pub fn lines(&self) -> Vec<Subspace> {
        let mut set = std::collections::BTreeSet::new();
        for v in self.vectors() {
            if v.iter().any(|&x| x != 0) {
                set.insert(Subspace::line(self.field(), &v));
            }
        }
        set.into_iter().collect()
    }

    /// Applies an invertible ambient map (row vector convention v -> v M).
    pub fn apply(&self, m: &Mat) -> Result<Subspace> {
        Ok(Subspace::from_rows(&self.basis.matmul(m)?))
    }
}

/// Coordinate chart for a subspace: maps between ambient vectors lying in the
/// subspace and coordinates with respect to its canonical RREF basis.
///
/// Because the basis is in RREF, the chart of a vector is just its entries at
/// the pivot columns.
#[derive(Clone, Debug)]
pub struct Chart {
    space: Subspace,
    pivots: Vec<usize>,
}

impl Chart {
    pub fn new(space: &Subspace) -> Chart {
        Chart {
            pivots: space.pivot_cols(),
            space: space.clone(),
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Coordinates of an ambient vector that lies in the subspace.
    pub fn to_chart(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if !self.space.contains_vec(v) {
            return Err(Error::AmbientMismatch(
                "vector not contained in chart space".into(),
            ));
        }
        Ok(self.pivots.iter().map(|&c| v[c]).collect())
    }

    pub fn from_chart(&self, coords: &[Elem]) -> Vec<Elem> {
        self.space.basis().vec_mul(coords)
    }

    /// A subspace of the chart space, re-coordinatized to GF(q)^dim.
    pub fn to_chart_subspace(&self, v: &Subspace) -> Result<Subspace> {
        if !self.space.contains(v) {
            return Err(Error::AmbientMismatch(
                "subspace not contained in chart space".into(),
            ));
        }
        let rows: Vec<Vec<Elem>> = (0..v.dim())
            .map(|r| self.to_chart(v.basis().row(r)))
            .collect::<Result<_>>()?;
        let data: Vec<Elem> = rows.concat();
        Ok(Subspace::from_rows(&Mat::from_elems(
            self.space.field(),
            v.dim(),
            self.dim(),
            data,
        )))
    }

    /// Inverse of `to_chart_subspace`.
    pub fn from_chart_subspace(&self, v: &Subspace) -> Subspace {
        assert_eq!(v.ambient_dim(), self.dim());
        let rows: Vec<Vec<Elem>> = (0..v.dim())
            .map(|r| self.from_chart(v.basis().row(r)))
            .collect();
        let data: Vec<Elem> = rows.concat();
        Subspace::from_rows(&Mat::from_elems(
            self.space.field(),
            v.dim(),
            self.space.ambient_dim(),
            data,
        ))
    }
}

/// Chart for a quotient E/Z. The complement fixes the coordinates: by default
/// it is the span of the standard basis vectors at the non-pivot columns of
/// Z's canonical basis; a custom complement can be supplied when the chart
/// must align with a bilinear form.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    field: FiniteField,
    ambient_dim: usize,
    kernel: Subspace,
    complement: Subspace,
    /// Inverse of the stacked basis [B_Z; B_W]; splits a vector into kernel
    /// and complement coefficients.
    split: Mat,
}

impl QuotientMap {
    pub fn new(ambient_dim: usize, kernel: &Subspace) -> Result<QuotientMap> {
        let field = kernel.field().clone();
        let pivots = kernel.pivot_cols();
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
        let mut comp = Mat::zero(field.clone(), free.len(), ambient_dim);
        for (i, &c) in free.iter().enumerate() {
            comp.set(i, c, 1);
        }
        QuotientMap::with_complement(ambient_dim, kernel, &Subspace::from_rows(&comp))
    }

    pub fn with_complement(
        ambient_dim: usize,
        kernel: &Subspace,
        complement: &Subspace,
    ) -> Result<QuotientMap> {
        if kernel.ambient_dim() != ambient_dim || complement.ambient_dim() != ambient_dim {
            return Err(Error::AmbientMismatch("quotient chart pieces".into()));
        }
        if !kernel.intersect(complement)?.is_zero()
            || kernel.dim() + complement.dim() != ambient_dim
        {
            return Err(Error::Precondition(
                "complement does not split the ambient space against the kernel".into(),
            ));
        }
        let stacked = kernel.basis().stack(complement.basis())?;
        let split = invert(&stacked)?;
        Ok(QuotientMap {
            field: kernel.field().clone(),
            ambient_dim,
            kernel: kernel.clone(),
            complement: complement.clone(),
            split,
        })
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
    pub fn complement(&self) -> &Subspace {
        &self.complement
    }
    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim - self.kernel.dim()
    }

    /// Image of an ambient vector in quotient coordinates.
    pub fn forward(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.ambient_dim);
        let coeffs = self.split.vec_mul(v);
        coeffs[self.kernel.dim()..].to_vec()
    }

    /// Image of a subspace under the canonical projection.
    pub fn forward_subspace(&self, v: &Subspace) -> Subspace {
        let rows: Vec<Vec<Elem>> = (0..v.dim()).map(|r| self.forward(v.basis().row(r))).collect();
        let data: Vec<Elem> = rows.concat();
        Subspace::from_rows(&Mat::from_elems(
            &self.field,
            v.dim(),
            self.quotient_dim(),
            data,
        ))
    }

    /// Preimage of a quotient subspace; always contains the kernel.
    pub fn backward(&self, v: &Subspace) -> Subspace {
        assert_eq!(v.ambient_dim(), self.quotient_dim());
        let lifted: Vec<Vec<Elem>> = (0..v.dim())
            .map(|r| self.complement.basis().vec_mul(v.basis().row(r)))
            .collect();
        let mut rows = self.kernel.basis().row_vecs();
        rows.extend(lifted);
        let data: Vec<Elem> = rows.concat();
        Subspace::from_rows(&Mat::from_elems(
            &self.field,
            self.kernel.dim() + v.dim(),
            self.ambient_dim,
            data,
        ))
    }
}

/// Inverse of a square matrix via Gaussian elimination on [M | I].
pub fn invert(m: &Mat) -> Result<Mat> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch("inverse of non-square matrix".into()));
    }
    let n = m.rows();
    let f = m.field().clone();
    let mut aug = Mat::zero(f.clone(), n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, n + r, 1);
    }
    let r = aug.rref();
    if r.rank < n || r.pivots[..n.min(r.pivots.len())] != (0..n).collect::<Vec<_>>()[..] {
        return Err(Error::Precondition("matrix is singular".into()));
    }
    let mut out = Mat::zero(f, n, n);
    for row in 0..n {
        for c in 0..n {
            out.set(row, c, r.mat.get(row, n + c));
        }
    }
    Ok(out)
}

/// Exact Gaussian binomial coefficient [n choose k]_q.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((k - i) as u32) - 1;
    }
    num / den
}

/// Number of subspaces of GF(q)^n of every dimension.
pub fn lattice_size(n: usize, q: u64) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

/// All subspaces of GF(q)^n, optionally of a fixed dimension, in canonical
/// order. Guarded: errors when the count exceeds `max_enum`.
pub fn enumerate_subspaces(
    field: &FiniteField,
    n: usize,
    k: Option<usize>,
    max_enum: u128,
) -> Result<Vec<Subspace>> {
    let q = field.order() as u64;
    let total = match k {
        Some(k) => gaussian_binomial(n, k, q),
        None => lattice_size(n, q),
    };
    if total > max_enum {
        return Err(Error::GuardExceeded {
            required: total,
            limit: max_enum,
        });
    }
    let dims: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut out = Vec::with_capacity(total as usize);
    for dim in dims {
        let mut chunk = enumerate_fixed_dim(field, n, dim);
        chunk.sort();
        out.extend(chunk);
    }
    Ok(out)
}

/// All RREF matrices with `k` nonzero rows and `n` columns: choose pivot
/// columns, then fill the free cells with every field element combination.
fn enumerate_fixed_dim(field: &FiniteField, n: usize, k: usize) -> Vec<Subspace> {
    if k > n {
        return vec![];
    }
    if k == 0 {
        return vec![Subspace::zero(field, n)];
    }
    let q = field.order() as u64;
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // free cells: (r, c) with c > pivots[r] and c not a pivot column
        let mut free_cells = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free_cells.push((r, c));
                }
            }
        }
        let combos = q.pow(free_cells.len() as u32);
        for idx in 0..combos {
            let mut m = Mat::zero(field.clone(), k, n);
            for (r, &p) in pivots.iter().enumerate() {
                m.set(r, p, 1);
            }
            let mut rest = idx;
            for &(r, c) in &free_cells {
                m.set(r, c, (rest % q) as Elem);
                rest /= q;
            }
            out.push(Subspace {
                ambient_dim: n,
                basis: m,
            });
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// |GL(n, q)| = prod_{i<n} (q^n - q^i).
pub fn gl_order(n: usize, q: u64) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (0..n).map(|i| qn - (q as u128).pow(i as u32)).product()
}

/// All invertible n x n matrices over the field, built row by row in
/// lexicographic order of the row vectors. Guarded by `max_gl`.
pub fn enumerate_gl(field: &FiniteField, n: usize, max_gl: u128) -> Result<Vec<Mat>> {
    let q = field.order() as u64;
    let total = gl_order(n, q);
    if total > max_gl {
        return Err(Error::GuardExceeded {
            required: total,
            limit: max_gl,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(n);
    build_gl(field, n, &mut rows, &mut out);
    Ok(out)
}

fn build_gl(field: &FiniteField, n: usize, rows: &mut Vec<Vec<Elem>>, out: &mut Vec<Mat>) {
    if rows.len() == n {
        let data: Vec<Elem> = rows.concat();
        out.push(Mat::from_elems(field, n, n, data));
        return;
    }
    let q = field.order() as u64;
    let span = Subspace::from_rows(&Mat::from_elems(
        field,
        rows.len(),
        n,
        rows.concat(),
    ));
    for idx in 1..q.pow(n as u32) {
        // digits little-endian would order by last coordinate; decode
        // big-endian so candidate rows come out in lexicographic order
        let mut v = vec![0 as Elem; n];
        let mut rest = idx;
        for c in (0..n).rev() {
            v[c] = (rest % q) as Elem;
            rest /= q;
        }
        if span.contains_vec(&v) {
            continue;
        }
        rows.push(v);
        build_gl(field, n, rows, out);
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FiniteField {
        match q {
            2 => FiniteField::prime(2).unwrap(),
            3 => FiniteField::prime(3).unwrap(),
            4 => FiniteField::new(2, 2, None).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn canonical_round_trip() {
        let f = gf(2);
        for v in enumerate_subspaces(&f, 4, None, DEFAULT_MAX_ENUM).unwrap() {
            assert_eq!(Subspace::from_rows(v.basis()), v);
        }
    }

    #[test]
    fn line_from_example_vector() {
        let f = gf(2);
        let p2 = Subspace::line(&f, &[0, 1, 1, 0]);
        assert_eq!(p2.dim(), 1);
        assert_eq!(p2.basis().row(0), &[0, 1, 1, 0]);
    }

    #[test]
    fn zero_matrix_gives_zero_subspace() {
        let f = gf(2);
        let z = Subspace::from_rows(&Mat::zero(f.clone(), 3, 4));
        assert_eq!(z, Subspace::zero(&f, 4));
        assert_eq!(z.dim(), 0);
    }

    #[test]
    fn sum_and_intersect_dimensions() {
        let f = gf(2);
        let v = Subspace::line(&f, &[0, 0, 1, 0]);
        let w = Subspace::line(&f, &[0, 1, 1, 0]);
        let s = v.sum(&w).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(v.intersect(&v).unwrap(), v);
        assert!(v.intersect(&w).unwrap().is_zero());
    }

    #[test]
    fn modular_dimension_law_exhaustive_small() {
        let f = gf(2);
        let all = enumerate_subspaces(&f, 3, None, DEFAULT_MAX_ENUM).unwrap();
        for v in &all {
            for w in &all {
                let s = v.sum(w).unwrap();
                let i = v.intersect(w).unwrap();
                assert_eq!(s.dim() + i.dim(), v.dim() + w.dim());
            }
        }
    }

    #[test]
    fn orthocomplement_involution_gf2_and_gf3() {
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let f = gf(q);
            for v in enumerate_subspaces(&f, n, None, DEFAULT_MAX_ENUM).unwrap() {
                let vp = v.orthocomplement();
                assert_eq!(vp.dim(), n - v.dim());
                assert_eq!(vp.orthocomplement(), v);
            }
        }
    }

    #[test]
    fn orthocomplement_standard_basis() {
        let f = gf(2);
        let e1 = Subspace::line(&f, &[1, 0, 0, 0]);
        let expect = Subspace::from_rows(
            &Mat::from_rows(&f, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap(),
        );
        assert_eq!(e1.orthocomplement(), expect);
        assert!(Subspace::full(&f, 4).orthocomplement().is_zero());
    }

    #[test]
    fn self_orthogonal_vector_in_char_two() {
        let f = gf(2);
        let p0 = Subspace::line(&f, &[1, 0, 0, 1]);
        let perp = p0.orthocomplement();
        assert_eq!(perp.dim(), 3);
        assert!(perp.contains(&p0));
    }

    #[test]
    fn quotient_standard_complement_rule() {
        let f = gf(2);
        // pivot of <[1 0 0 1]> is column 0, so the complement is <e2,e3,e4>
        let z = Subspace::line(&f, &[1, 0, 0, 1]);
        let qm = QuotientMap::new(4, &z).unwrap();
        let expect = Subspace::from_rows(
            &Mat::from_rows(&f, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap(),
        );
        assert_eq!(qm.complement(), &expect);

        let z0 = Subspace::zero(&f, 4);
        let qm0 = QuotientMap::new(4, &z0).unwrap();
        assert_eq!(qm0.complement(), &Subspace::full(&f, 4));
        assert_eq!(qm0.forward(&[1, 1, 0, 1]), vec![1, 1, 0, 1]);
    }

    #[test]
    fn quotient_lattice_isomorphism_exhaustive() {
        let f = gf(2);
        let n = 4;
        let all = enumerate_subspaces(&f, n, None, DEFAULT_MAX_ENUM).unwrap();
        for z in &all {
            let qm = QuotientMap::new(n, z).unwrap();
            let mut images = std::collections::BTreeSet::new();
            for v in all.iter().filter(|v| v.contains(z)) {
                let fwd = qm.forward_subspace(v);
                assert_eq!(fwd.dim(), v.dim() - z.dim());
                assert_eq!(&qm.backward(&fwd), v);
                images.insert(fwd);
            }
            let quotient_total = lattice_size(n - z.dim(), 2) as usize;
            assert_eq!(images.len(), quotient_total);
        }
    }

    #[test]
    fn enumeration_counts_match_gaussian_binomial() {
        for q in [2u64, 3] {
            let f = gf(q);
            for n in 0..=4usize {
                if q == 3 && n == 4 {
                    continue; // covered by the count identity below
                }
                for k in 0..=n {
                    let got = enumerate_subspaces(&f, n, Some(k), DEFAULT_MAX_ENUM)
                        .unwrap()
                        .len();
                    assert_eq!(got as u128, gaussian_binomial(n, k, q), "n={n} k={k} q={q}");
                }
            }
        }
        // spot values
        assert_eq!(gaussian_binomial(4, 0, 2), 1);
        assert_eq!(gaussian_binomial(4, 1, 2), 15);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
    }

    #[test]
    fn enumerate_n3_q2_lines() {
        let f = gf(2);
        let lines = enumerate_subspaces(&f, 3, Some(1), DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn enumerate_n2_q2_whole_lattice() {
        let f = gf(2);
        let all = enumerate_subspaces(&f, 2, None, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all[0].is_zero());
        assert_eq!(all[4], Subspace::full(&f, 2));
    }

    #[test]
    fn enumeration_guard() {
        let f = gf(2);
        assert!(matches!(
            enumerate_subspaces(&f, 4, None, 10),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn gl_counts() {
        let f = gf(2);
        assert_eq!(enumerate_gl(&f, 1, DEFAULT_MAX_GL).unwrap().len(), 1);
        assert_eq!(enumerate_gl(&f, 2, DEFAULT_MAX_GL).unwrap().len(), 6);
        assert_eq!(enumerate_gl(&f, 3, DEFAULT_MAX_GL).unwrap().len(), 168);
        let f3 = gf(3);
        assert_eq!(enumerate_gl(&f3, 2, DEFAULT_MAX_GL).unwrap().len(), 48);
        assert_eq!(gl_order(3, 2), 168);
    }

    #[test]
    fn gl_members_invertible_and_distinct() {
        let f = gf(2);
        let gl = enumerate_gl(&f, 3, DEFAULT_MAX_GL).unwrap();
        let set: std::collections::BTreeSet<_> = gl.iter().cloned().collect();
        assert_eq!(set.len(), gl.len());
        for m in &gl {
            invert(m).unwrap();
        }
    }

    #[test]
    fn chart_round_trip() {
        let f = gf(2);
        let p = Subspace::from_rows(
            &Mat::from_rows(&f, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap(),
        );
        let chart = Chart::new(&p);
        let v = Subspace::line(&f, &[0, 1, 1, 0]);
        let down = chart.to_chart_subspace(&v).unwrap();
        assert_eq!(down.ambient_dim(), 3);
        assert_eq!(chart.from_chart_subspace(&down), v);
    }

    #[test]
    fn gf4_lattice_counts() {
        let f = gf(4);
        let lines = enumerate_subspaces(&f, 2, Some(1), DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(lines.len(), 5); // (16-1)/(4-1)
    }
}
