//! The six structured matrix families and an exact symbolic determinant.

use alloc::vec::Vec;

use super::multipoly::{Monomial, MultiPoly};
use super::qsqrt2::QSqrt2;
use crate::error::{Error, Result};

/// Which of the six entry formulas a structured matrix uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    A,
    B,
    BPrime,
    C,
    D,
    DPrime,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 6] = [
        MatrixKind::A,
        MatrixKind::B,
        MatrixKind::BPrime,
        MatrixKind::C,
        MatrixKind::D,
        MatrixKind::DPrime,
    ];

    /// Short tag used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::B => "B",
            MatrixKind::BPrime => "B'",
            MatrixKind::C => "C",
            MatrixKind::D => "D",
            MatrixKind::DPrime => "D'",
        }
    }

    /// Whether the entry formula requires `k_n ≥ 0`.
    pub fn needs_nonnegative_tail(&self) -> bool {
        !matches!(self, MatrixKind::A)
    }
}

fn xvar(index: i64) -> MultiPoly {
    MultiPoly::var(index.unsigned_abs() as u32)
}

fn xvar_scaled(index: i64, c: QSqrt2) -> MultiPoly {
    let mut p = MultiPoly::zero();
    p.add_term(Monomial::var(index.unsigned_abs() as u32), c);
    p
}

/// Build the `n×n` structured matrix of the given kind at the weight
/// `λ = (k_1 ≥ ... ≥ k_n)`. Kinds other than `A` additionally require
/// `k_n ≥ 0`.
pub fn build_matrix(kind: MatrixKind, n: usize, lambda: &[i64]) -> Result<Vec<Vec<MultiPoly>>> {
    if lambda.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    if kind.needs_nonnegative_tail() && lambda.last().is_some_and(|&k| k < 0) {
        return Err(Error::NegativeCoordinate);
    }
    let ni = n as i64;
    let k = |j: i64| lambda[(j - 1) as usize]; // 1-based column index
    let mut rows = Vec::with_capacity(n);
    for i in 1..=ni {
        let mut row = Vec::with_capacity(n);
        for j in 1..=ni {
            let entry = match kind {
                MatrixKind::A => xvar(k(j) + i - j),
                MatrixKind::B => &xvar(k(j) + i - j) - &xvar(k(j) + 2 * ni + 1 - i - j),
                MatrixKind::BPrime => &xvar(k(j) + i - j) + &xvar(k(j) + 2 * ni + 1 - i - j),
                MatrixKind::C => &xvar(k(j) + i - j) - &xvar(k(j) + 2 * ni + 2 - i - j),
                MatrixKind::D => &xvar(k(j) + i - j) + &xvar(k(j) + 2 * ni - i - j),
                MatrixKind::DPrime => {
                    if i < ni && j < ni {
                        &xvar(k(j) + i - j) + &xvar(k(j) + 2 * ni - i - j)
                    } else if i == ni && j < ni {
                        xvar_scaled(k(j) + ni - j, QSqrt2::sqrt2())
                    } else if i < ni && j == ni {
                        (&xvar(k(ni) + i - ni) + &xvar(k(ni) + ni - i))
                            .scaled(&QSqrt2::half_sqrt2())
                    } else {
                        xvar(k(ni))
                    }
                }
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Exact determinant by Laplace expansion over column subsets, memoized:
/// `O(n·2^n)` polynomial multiplications.
pub fn symbolic_det(matrix: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    assert!(n <= 20, "determinant size out of range");
    let mut memo: Vec<Option<MultiPoly>> = alloc::vec![None; 1usize << n];
    memo[0] = Some(MultiPoly::one());
    Ok(det_rec(matrix, (1usize << n) - 1, &mut memo).clone())
}

fn det_rec<'m>(
    matrix: &[Vec<MultiPoly>],
    mask: usize,
    memo: &'m mut Vec<Option<MultiPoly>>,
) -> &'m MultiPoly {
    if memo[mask].is_none() {
        let row = mask.count_ones() as usize - 1;
        let mut acc = MultiPoly::zero();
        let mut pos = 0usize;
        for j in 0..matrix.len() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = &matrix[row][j];
            if !entry.is_zero() {
                let minor = det_rec(matrix, mask & !(1 << j), memo).clone();
                let term = entry * &minor;
                if (row + pos).is_multiple_of(2) {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            pos += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[mask].as_ref().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn one_by_one_entries() {
        // (A, 1, (k)) = [x_|k|]
        let m = build_matrix(MatrixKind::A, 1, &[3]).unwrap();
        assert_eq!(m[0][0], x(3));
        let m = build_matrix(MatrixKind::A, 1, &[-2]).unwrap();
        assert_eq!(m[0][0], x(2));
        // (B, 1, (k)) = [x_k - x_{k+1}]
        let m = build_matrix(MatrixKind::B, 1, &[2]).unwrap();
        assert_eq!(m[0][0], &x(2) - &x(3));
        // (C, 1, (1)) = [x_1 - x_3]
        let m = build_matrix(MatrixKind::C, 1, &[1]).unwrap();
        assert_eq!(m[0][0], &x(1) - &x(3));
        // (D, 1, (0)) = [2 x_0]
        let m = build_matrix(MatrixKind::D, 1, &[0]).unwrap();
        assert_eq!(m[0][0], &MultiPoly::one() + &MultiPoly::one());
        // (D', 1, (k)) = [x_|k|]
        let m = build_matrix(MatrixKind::DPrime, 1, &[2]).unwrap();
        assert_eq!(m[0][0], x(2));
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            build_matrix(MatrixKind::A, 2, &[1, 2]),
            Err(Error::NotSorted)
        );
        assert_eq!(
            build_matrix(MatrixKind::B, 2, &[1, -1]),
            Err(Error::NegativeCoordinate)
        );
        assert!(build_matrix(MatrixKind::A, 2, &[1, -1]).is_ok());
    }

    #[test]
    fn det_examples() {
        // det [x_k] = x_k
        let m = build_matrix(MatrixKind::A, 1, &[2]).unwrap();
        assert_eq!(symbolic_det(&m).unwrap(), x(2));
        // det A_2((k,-k)) = x_k^2 - x_{k+1}^2
        let m = build_matrix(MatrixKind::A, 2, &[1, -1]).unwrap();
        let expect = &(&x(1) * &x(1)) - &(&x(2) * &x(2));
        assert_eq!(symbolic_det(&m).unwrap(), expect);
        // identity-like matrix
        let eye = alloc::vec![
            alloc::vec![MultiPoly::one(), MultiPoly::zero()],
            alloc::vec![MultiPoly::zero(), MultiPoly::one()],
        ];
        assert_eq!(symbolic_det(&eye).unwrap(), MultiPoly::one());
    }

    #[test]
    fn det_rejects_non_square() {
        let m = alloc::vec![
            alloc::vec![MultiPoly::one()],
            alloc::vec![MultiPoly::zero()]
        ];
        assert_eq!(symbolic_det(&m), Err(Error::NotSquare));
    }

    #[test]
    fn det_matches_permanent_expansion_3x3() {
        // cross-check the memoized expansion against the naive 3x3 rule
        let m = build_matrix(MatrixKind::B, 3, &[2, 1, 0]).unwrap();
        let naive = |m: &[Vec<MultiPoly>]| {
            let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
            let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
            let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
            &(&t1 - &t2) + &t3
        };
        assert_eq!(symbolic_det(&m).unwrap(), naive(&m));
    }
}
