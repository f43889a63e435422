//! Built-in demonstration instances used by the examples, the verification
//! suites, and the tests. The same data ships as JSON under `fixtures/`.

use crate::code::RankMetricCode;
use crate::field::FiniteField;
use crate::mat::Mat;
use crate::subspace::Subspace;

pub fn gf2() -> FiniteField {
    FiniteField::prime(2).unwrap()
}

/// A 6-dimensional code of 4x6 binary matrices whose induced q-polymatroid
/// is not a q-matroid. Used as the running share-dealing instance.
pub fn example1_code() -> RankMetricCode {
    let f = gf2();
    let rows: [[[u64; 6]; 4]; 6] = [
        [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 1, 0, 1, 0, 1],
        ],
        [
            [0, 1, 0, 0, 0, 0],
            [1, 0, 0, 1, 1, 1],
            [0, 0, 1, 1, 0, 1],
            [1, 1, 1, 1, 1, 1],
        ],
        [
            [0, 0, 1, 0, 0, 0],
            [1, 1, 0, 1, 0, 1],
            [0, 1, 0, 1, 1, 0],
            [0, 0, 0, 0, 1, 0],
        ],
        [
            [0, 0, 0, 1, 0, 0],
            [1, 1, 0, 0, 0, 0],
            [1, 1, 1, 0, 0, 1],
            [1, 0, 1, 1, 1, 1],
        ],
        [
            [0, 0, 0, 0, 1, 0],
            [0, 1, 1, 1, 1, 1],
            [0, 0, 1, 1, 0, 0],
            [1, 0, 1, 1, 0, 0],
        ],
        [
            [0, 0, 0, 0, 0, 1],
            [0, 1, 0, 1, 1, 0],
            [0, 1, 1, 1, 0, 1],
            [0, 0, 1, 0, 1, 0],
        ],
    ];
    let mats: Vec<Mat> = rows
        .iter()
        .map(|m| Mat::from_rows(&f, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap())
        .collect();
    RankMetricCode::from_basis(&f, 4, 6, &mats).unwrap()
}

/// Dealer space of the example 1 scheme: <[1 0 0 1]>.
pub fn example1_dealer() -> Subspace {
    Subspace::line(&gf2(), &[1, 0, 0, 1])
}

/// Player space of the example 1 scheme: <e2, e3, e4>.
pub fn example1_players() -> Subspace {
    standard_span(&[1, 2, 3], 4)
}

/// The dealt codeword used in the example 1 walkthrough (equals M2+M3+M4).
pub fn example1_dealt() -> Mat {
    Mat::from_rows(
        &gf2(),
        &[
            vec![0, 1, 1, 1, 0, 0],
            vec![1, 0, 0, 0, 1, 0],
            vec![1, 0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 1, 0],
        ],
    )
    .unwrap()
}

/// The secret carried by `example1_dealt`: [0 0 1 1 1 0].
pub fn example1_secret() -> Mat {
    Mat::from_rows(&gf2(), &[vec![0, 0, 1, 1, 1, 0]]).unwrap()
}

/// A 4-dimensional code of 4x2 binary matrices whose induced q-polymatroid
/// is a q-matroid; its port is perfect.
pub fn example3_code() -> RankMetricCode {
    let f = gf2();
    let rows: [[[u64; 2]; 4]; 4] = [
        [[1, 0], [0, 0], [1, 1], [0, 1]],
        [[0, 1], [0, 0], [1, 0], [1, 1]],
        [[0, 0], [1, 0], [1, 0], [1, 0]],
        [[0, 0], [0, 1], [0, 1], [0, 1]],
    ];
    let mats: Vec<Mat> = rows
        .iter()
        .map(|m| Mat::from_rows(&f, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap())
        .collect();
    RankMetricCode::from_basis(&f, 4, 2, &mats).unwrap()
}

/// Dealer space of the example 3 scheme: <e1>.
pub fn example3_dealer() -> Subspace {
    standard_span(&[0], 4)
}

/// Player space of the example 3 scheme: <e2, e3, e4>.
pub fn example3_players() -> Subspace {
    standard_span(&[1, 2, 3], 4)
}

/// Span of standard basis vectors (0-indexed) in GF(2)^n.
pub fn standard_span(indices: &[usize], n: usize) -> Subspace {
    let f = gf2();
    let mut m = Mat::zero(f, indices.len(), n);
    for (r, &i) in indices.iter().enumerate() {
        m.set(r, i, 1);
    }
    Subspace::from_rows(&m)
}

/// Span of explicit GF(2) vectors.
pub fn gf2_span(rows: &[&[u64]], n: usize) -> Subspace {
    let f = gf2();
    let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    Subspace::from_rows(&Mat::from_rows(&f, &rows).unwrap())
}
