//! Rank-metric codes: GF(q)-linear spaces of n x m matrices under the rank
//! distance, their duals via the trace form, shortenings, the Singleton bound
//! and MRD classification, a Gabidulin-style MRD construction, and the
//! induced q-polymatroid rank function.

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::mat::Mat;
use crate::polymatroid::QPolymatroid;
use crate::subspace::Subspace;
use crate::Rank;

/// Default cap on exhaustive codeword scans (q^k).
pub const DEFAULT_MAX_CODEWORDS: u128 = 1 << 24;

/// A rank-metric code with a canonical basis: the basis matrices are the
/// unflattened nonzero rows of the reduced row echelon form of the flattened
/// generator list, so two equal codes compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankMetricCode {
    field: FiniteField,
    n: usize,
    m: usize,
    basis: Vec<Mat>,
}

impl RankMetricCode {
    /// Builds a code from generators. Dependent generators are discarded.
    pub fn from_basis(
        field: &FiniteField,
        n: usize,
        m: usize,
        mats: &[Mat],
    ) -> Result<RankMetricCode> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidArgument("empty matrix ambient".into()));
        }
        for mat in mats {
            if mat.field() != field {
                return Err(Error::FieldMismatch);
            }
            if mat.rows() != n || mat.cols() != m {
                return Err(Error::ShapeMismatch(format!(
                    "generator is {}x{}, expected {}x{}",
                    mat.rows(),
                    mat.cols(),
                    n,
                    m
                )));
            }
        }
        let flat: Vec<Elem> = mats.iter().flat_map(|m| m.flatten()).collect();
        let stacked = Mat::from_elems(field, mats.len(), n * m, flat);
        let r = stacked.rref();
        let basis = (0..r.rank)
            .map(|i| Mat::from_elems(field, n, m, r.mat.row(i).to_vec()))
            .collect();
        Ok(RankMetricCode {
            field: field.clone(),
            n,
            m,
            basis,
        })
    }

    /// The zero code in GF(q)^{n x m}.
    pub fn zero(field: &FiniteField, n: usize, m: usize) -> Result<RankMetricCode> {
        RankMetricCode::from_basis(field, n, m, &[])
    }

    /// The full matrix space GF(q)^{n x m}.
    pub fn full(field: &FiniteField, n: usize, m: usize) -> Result<RankMetricCode> {
        let mut mats = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut e = Mat::zero(field.clone(), n, m);
                e.set(i, j, 1);
                mats.push(e);
            }
        }
        RankMetricCode::from_basis(field, n, m, &mats)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// Code dimension over GF(q).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    /// The codeword for a coefficient vector over the canonical basis.
    pub fn combine(&self, coeffs: &[Elem]) -> Mat {
        assert_eq!(coeffs.len(), self.dim());
        let f = &self.field;
        let mut out = Mat::zero(f.clone(), self.n, self.m);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.basis[i].scale(c)).unwrap();
            }
        }
        out
    }

    /// Coefficient vectors of all q^k codewords, counting order.
    pub fn coefficient_vectors(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        let q = self.field.order() as u128;
        let k = self.dim();
        let total = q.pow(k as u32);
        (0..total).map(move |idx| {
            let mut coeffs = Vec::with_capacity(k);
            let mut rest = idx;
            for _ in 0..k {
                coeffs.push((rest % q) as Elem);
                rest /= q;
            }
            coeffs
        })
    }

    /// Number of codewords as a u128 (q^k).
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim() as u32)
    }

    /// Does a matrix belong to the code? Solves over the flattened basis.
    pub fn contains(&self, x: &Mat) -> Result<bool> {
        if x.field() != &self.field || x.rows() != self.n || x.cols() != self.m {
            return Err(Error::ShapeMismatch("membership test".into()));
        }
        Ok(self.express(x)?.is_some())
    }

    /// Coefficient vector of a codeword, if it belongs to the code.
    pub fn express(&self, x: &Mat) -> Result<Option<Vec<Elem>>> {
        if self.dim() == 0 {
            return Ok(if x.is_zero() { Some(vec![]) } else { None });
        }
        let flat: Vec<Elem> = self.basis.iter().flat_map(|m| m.flatten()).collect();
        let stacked = Mat::from_elems(&self.field, self.dim(), self.n * self.m, flat);
        Ok(stacked.solve_left(&x.flatten()).map(|(a, _)| a))
    }

    /// Dual code under the trace form tr(X Y^T).
    pub fn dual(&self) -> RankMetricCode {
        let nm = self.n * self.m;
        let flat: Vec<Elem> = self.basis.iter().flat_map(|m| m.flatten()).collect();
        let pairing = Mat::from_elems(&self.field, self.dim(), nm, flat);
        let kernel = pairing.right_kernel();
        let mats: Vec<Mat> = (0..kernel.rows())
            .map(|r| Mat::from_elems(&self.field, self.n, self.m, kernel.row(r).to_vec()))
            .collect();
        RankMetricCode::from_basis(&self.field, self.n, self.m, &mats).unwrap()
    }

    /// Shortening: the subcode of codewords whose column space lies in `v`.
    pub fn shorten(&self, v: &Subspace) -> Result<RankMetricCode> {
        let constraint = self.column_constraint(&v.orthocomplement())?;
        let kernel = constraint.left_kernel();
        let mats: Vec<Mat> = (0..kernel.rows())
            .map(|r| self.combine(kernel.row(r)))
            .collect();
        RankMetricCode::from_basis(&self.field, self.n, self.m, &mats)
    }

    /// The k x (dim(u) * m) matrix whose row i is flatten(B_u * M_i); its left
    /// kernel is the coefficient space of {X in C : B_u X = 0}.
    fn column_constraint(&self, u: &Subspace) -> Result<Mat> {
        if u.field() != &self.field || u.ambient_dim() != self.n {
            return Err(Error::AmbientMismatch(format!(
                "subspace of GF(q)^{}, code rows {}",
                u.ambient_dim(),
                self.n
            )));
        }
        let mut data = Vec::with_capacity(self.dim() * u.dim() * self.m);
        for mat in &self.basis {
            data.extend(u.basis().matmul(mat)?.flatten());
        }
        Ok(Mat::from_elems(
            &self.field,
            self.dim(),
            u.dim() * self.m,
            data,
        ))
    }

    /// Coefficient vectors spanning {a : B_v * combine(a) = 0}, i.e. the
    /// shortening C(v^perp) expressed in code coordinates.
    pub fn kernel_coefficients(&self, v: &Subspace) -> Result<Mat> {
        Ok(self.column_constraint(v)?.left_kernel())
    }

    /// Minimum rank over the nonzero codewords, by exhaustive scan.
    pub fn min_rank_distance(&self, max_codewords: u128) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::InvalidArgument(
                "minimum rank distance of the zero code".into(),
            ));
        }
        if self.size() > max_codewords {
            return Err(Error::GuardExceeded {
                required: self.size(),
                limit: max_codewords,
            });
        }
        let mut best = usize::MAX;
        for coeffs in self.coefficient_vectors().skip(1) {
            let rk = self.combine(&coeffs).rank();
            if rk < best {
                best = rk;
                if best == 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Singleton bound max{m,n} * (min{m,n} - d_rk + 1) and whether the code
    /// attains it.
    pub fn singleton_check(&self, max_codewords: u128) -> Result<(usize, bool)> {
        let d = self.min_rank_distance(max_codewords)?;
        let bound = self.n.max(self.m) * (self.n.min(self.m) - d + 1);
        Ok((bound, self.dim() == bound))
    }

    /// Induced rank (dim C - dim C(V^perp)) / m as an exact rational.
    pub fn induced_rank(&self, v: &Subspace) -> Result<Rank> {
        let constraint = self.column_constraint(v)?;
        // dim C(v^perp) = k - rank(constraint)
        Ok(Rank::new(constraint.rank() as i64, self.m as i64))
    }

    /// The induced q-polymatroid on GF(q)^n.
    pub fn induced_qpolymatroid(&self) -> QPolymatroid {
        let code = self.clone();
        QPolymatroid::from_fn(&self.field, self.n, move |v| {
            code.induced_rank(v).expect("ambient checked by oracle")
        })
    }
}

/// Gabidulin-style MRD code: evaluations of q-degree < k linearized
/// polynomials at the points {1, alpha, ..., alpha^{n-1}} of GF(q^m),
/// expanded over the polynomial basis of GF(q^m) into n x m matrices.
///
/// Requires a prime base field (towers of extensions are out of scope) and
/// q^m <= 256 so the extension fits the supported field range.
pub fn gabidulin(field: &FiniteField, n: usize, k: usize, m: usize) -> Result<RankMetricCode> {
    if field.e() != 1 {
        return Err(Error::InvalidArgument(
            "gabidulin construction requires a prime base field".into(),
        ));
    }
    if !(1 <= k && k <= n && n <= m) {
        return Err(Error::InvalidArgument(format!(
            "gabidulin parameters must satisfy 1 <= k <= n <= m, got k={k} n={n} m={m}"
        )));
    }
    let q = field.p() as u64;
    let ext = FiniteField::new(q, m as u32, None)
        .map_err(|_| Error::InvalidArgument(format!("extension order {q}^{m} exceeds range")))?;
    let alpha: Elem = if m == 1 { 1 } else { q as Elem }; // the class of x
    // evaluation points: powers of alpha, linearly independent over GF(q)
    let points: Vec<Elem> = (0..n).map(|i| ext.pow(alpha, i as u64)).collect();
    // basis of the code over GF(q): x^{q^i} evaluations scaled by alpha^j
    let mut mats = Vec::with_capacity(k * m);
    for i in 0..k {
        let qi = q.pow(i as u32);
        for j in 0..m {
            let scale = ext.pow(alpha, j as u64);
            let mut mat = Mat::zero(field.clone(), n, m);
            for (r, &g) in points.iter().enumerate() {
                let val = ext.mul(scale, ext.pow(g, qi as u64));
                // row r of the matrix is the base-q coefficient expansion
                let mut rest = val as u64;
                for c in 0..m {
                    mat.set(r, c, (rest % q) as Elem);
                    rest /= q;
                }
            }
            mats.push(mat);
        }
    }
    RankMetricCode::from_basis(field, n, m, &mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::subspace::{enumerate_subspaces, DEFAULT_MAX_ENUM};

    #[test]
    fn example1_code_has_dimension_six() {
        let c = fixtures::example1_code();
        assert_eq!((c.n(), c.m(), c.dim()), (4, 6, 6));
    }

    #[test]
    fn example3_code_has_dimension_four() {
        let c = fixtures::example3_code();
        assert_eq!((c.n(), c.m(), c.dim()), (4, 2, 4));
    }

    #[test]
    fn duplicate_generators_are_discarded() {
        let c = fixtures::example1_code();
        let m1 = c.basis()[0].clone();
        let dup =
            RankMetricCode::from_basis(c.field(), 4, 6, &[m1.clone(), m1.clone()]).unwrap();
        assert_eq!(dup.dim(), 1);
    }

    #[test]
    fn dual_dimension_and_orthogonality() {
        let c = fixtures::example1_code();
        let d = c.dual();
        assert_eq!(d.dim(), 24 - 6);
        for x in c.basis() {
            for y in d.basis() {
                assert_eq!(x.trace_pair(y).unwrap(), 0);
            }
        }
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn dual_of_zero_code_is_full_space() {
        let f = fixtures::gf2();
        let z = RankMetricCode::zero(&f, 2, 2).unwrap();
        assert_eq!(z.dual(), RankMetricCode::full(&f, 2, 2).unwrap());
    }

    #[test]
    fn shorten_by_full_space_is_identity() {
        let c = fixtures::example1_code();
        let full = Subspace::full(c.field(), 4);
        assert_eq!(c.shorten(&full).unwrap(), c);
        let zero = Subspace::zero(c.field(), 4);
        assert_eq!(c.shorten(&zero).unwrap().dim(), 0);
    }

    #[test]
    fn example1_shortening_at_dealer_is_proper() {
        let c = fixtures::example1_code();
        let p0 = fixtures::example1_dealer();
        let shortened = c.shorten(&p0.orthocomplement()).unwrap();
        assert_ne!(shortened, c);
        assert_eq!(shortened.dim(), 5);
    }

    #[test]
    fn example1_shortening_matches_printed_rank() {
        // rho(p1) = 5/6 and dim C = 6 force dim C(p1^perp) = 1
        let c = fixtures::example1_code();
        let p1 = Subspace::line(c.field(), &[0, 0, 1, 0]);
        assert_eq!(c.shorten(&p1.orthocomplement()).unwrap().dim(), 1);
    }

    #[test]
    fn shortening_is_monotone_on_example1() {
        let c = fixtures::example1_code();
        let all = enumerate_subspaces(c.field(), 4, None, DEFAULT_MAX_ENUM).unwrap();
        for v in &all {
            let cv = c.shorten(v).unwrap();
            for w in all.iter().filter(|w| w.contains(v)) {
                let cw = c.shorten(w).unwrap();
                for x in cv.basis() {
                    assert!(cw.contains(x).unwrap());
                }
            }
        }
    }

    #[test]
    fn example1_induced_ranks_match_printed_values() {
        let c = fixtures::example1_code();
        let f = c.field().clone();
        let p0 = fixtures::example1_dealer();
        let p1 = Subspace::line(&f, &[0, 0, 1, 0]);
        let p2 = Subspace::line(&f, &[0, 1, 1, 0]);
        assert_eq!(c.induced_rank(&p1).unwrap(), Rank::new(5, 6));
        assert_eq!(c.induced_rank(&p2).unwrap(), Rank::new(2, 3));
        assert_eq!(c.induced_rank(&p0).unwrap(), Rank::new(5, 6));
        assert_eq!(
            c.induced_rank(&p1.sum(&p0).unwrap()).unwrap(),
            Rank::new(1, 1)
        );
        assert_eq!(
            c.induced_rank(&p2.sum(&p0).unwrap()).unwrap(),
            Rank::new(1, 1)
        );
        assert_eq!(
            c.induced_rank(&Subspace::zero(&f, 4)).unwrap(),
            Rank::new(0, 1)
        );
    }

    #[test]
    fn min_rank_distance_simple_cases() {
        let f = fixtures::gf2();
        let rank1 = Mat::from_rows(&f, &[vec![1, 1], vec![0, 0]]).unwrap();
        let c = RankMetricCode::from_basis(&f, 2, 2, &[rank1]).unwrap();
        assert_eq!(c.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap(), 1);
        let full = RankMetricCode::full(&f, 2, 2).unwrap();
        assert_eq!(full.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap(), 1);
        let (bound, mrd) = c.singleton_check(DEFAULT_MAX_CODEWORDS).unwrap();
        assert_eq!(bound, 4);
        assert!(!mrd);
    }

    #[test]
    fn min_rank_distance_guard_and_zero_code() {
        let f = fixtures::gf2();
        let z = RankMetricCode::zero(&f, 2, 2).unwrap();
        assert!(z.min_rank_distance(DEFAULT_MAX_CODEWORDS).is_err());
        let full = RankMetricCode::full(&f, 2, 2).unwrap();
        assert!(matches!(
            full.min_rank_distance(3),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn example1_code_is_not_mrd() {
        let c = fixtures::example1_code();
        let d = c.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap();
        let (bound, mrd) = c.singleton_check(DEFAULT_MAX_CODEWORDS).unwrap();
        assert!(c.dim() <= bound, "Singleton bound violated: d={d}");
        assert!(!mrd);
    }

    #[test]
    fn gabidulin_4_2_is_mrd() {
        let f = fixtures::gf2();
        let c = gabidulin(&f, 4, 2, 4).unwrap();
        assert_eq!(c.dim(), 8);
        assert_eq!(c.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap(), 3);
        let (bound, mrd) = c.singleton_check(DEFAULT_MAX_CODEWORDS).unwrap();
        assert_eq!(bound, 8);
        assert!(mrd);
    }

    #[test]
    fn gabidulin_edge_parameters() {
        let f = fixtures::gf2();
        let full_rank = gabidulin(&f, 4, 4, 4).unwrap();
        assert_eq!(full_rank.dim(), 16);
        assert_eq!(full_rank.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap(), 1);
        let repetition = gabidulin(&f, 3, 1, 3).unwrap();
        assert_eq!(repetition.dim(), 3);
        assert_eq!(repetition.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap(), 3);
        assert!(gabidulin(&f, 4, 5, 4).is_err());
    }

    #[test]
    fn mrd_dual_distance_identity() {
        // d_rk(C_perp) = min{m,n} - d_rk(C) + 2 for MRD codes
        let f = fixtures::gf2();
        for k in 1..=4usize {
            let c = gabidulin(&f, 4, k, 4).unwrap();
            let d = c.min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap();
            assert_eq!(d, 4 - k + 1);
            if c.dual().dim() > 0 {
                let dd = c.dual().min_rank_distance(DEFAULT_MAX_CODEWORDS).unwrap();
                assert_eq!(dd, 4 - d + 2);
            }
        }
    }

    #[test]
    fn mrd_rank_shape() {
        let f = fixtures::gf2();
        let c = gabidulin(&f, 4, 2, 4).unwrap();
        for v in enumerate_subspaces(&f, 4, None, DEFAULT_MAX_ENUM).unwrap() {
            let expect = Rank::from_integer((v.dim() as i64).min(2));
            assert_eq!(c.induced_rank(&v).unwrap(), expect);
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let f = fixtures::gf2();
        assert!(RankMetricCode::from_basis(&f, 0, 3, &[]).is_err());
        let a = Mat::zero(f.clone(), 2, 2);
        assert!(RankMetricCode::from_basis(&f, 2, 3, &[a]).is_err());
    }
}
