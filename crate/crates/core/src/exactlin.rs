//! Exact rational scalars, vectors and matrices.
//!
//! Every elimination here is fraction-free: rows are cleared to integers and
//! reduced with Bareiss' one-step division, so intermediate entries are minors
//! of the input and never need a gcd until back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
///
/// Prints as `p/q`, or `p` when `q = 1`, and parses the same forms.
pub type Rational = BigRational;

pub type QVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_vector(v: &[i64]) -> QVector {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
///
/// The sign of the input is kept. The zero vector maps to the zero vector.
pub fn primitive_ray(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive_int(ints)
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Primitive integer vector with its first nonzero entry positive.
///
/// Used for basis vectors of linear spaces, where the sign carries no meaning.
pub fn canonical_line(v: &[Rational]) -> Vec<BigInt> {
    let mut p = primitive_ray(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

pub fn to_rational(v: &[BigInt]) -> QVector {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// A rectangular matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<QVector>,
    cols: usize,
}

impl QMatrix {
    /// Builds a matrix from rows; all rows must share one length.
    pub fn new(rows: Vec<QVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::with_cols(cols, rows)
    }

    /// Builds a matrix with an explicit column count, so that zero-row matrices
    /// still know their width.
    pub fn with_cols(cols: usize, rows: Vec<QVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows, cols })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| int_vector(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Self { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Result<QVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self.rows.iter().map(|r| dot(r, v)).collect())
    }

    /// Row rank over the rationals. The empty matrix has rank 0.
    pub fn rank(&self) -> usize {
        Echelon::new(integer_rows(&self.rows), self.cols).pivots.len()
    }

    /// Basis of the right nullspace.
    ///
    /// One vector per free column (ascending), each scaled to a primitive
    /// integer vector whose first nonzero entry is positive. Empty iff the
    /// matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<QVector> {
        let ech = Echelon::new(integer_rows(&self.rows), self.cols);
        let reduced = ech.reduced();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (row, &pc) in reduced.iter().zip(&ech.pivots) {
                    x[pc] = -row[f].clone();
                }
                to_rational(&canonical_line(&x))
            })
            .collect()
    }

    /// One exact solution of `self · x = b`, or `None` if the system is inconsistent.
    ///
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<QVector>> {
        if b.len() != self.nrows() {
            return Err(Error::DimensionMismatch { expected: self.nrows(), found: b.len() });
        }
        let augmented: Vec<QVector> = self
            .rows
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let ech = Echelon::new(integer_rows(&augmented), self.cols + 1);
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let reduced = ech.reduced();
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in reduced.iter().zip(&ech.pivots) {
            x[pc] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

/// Clears denominators row by row.
fn integer_rows(rows: &[QVector]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let lcm = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Row echelon form computed by fraction-free elimination.
struct Echelon {
    /// The first `pivots.len()` rows are the nonzero echelon rows.
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(mut a: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let nrows = a.len();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == nrows {
                break;
            }
            let Some(i) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, i);
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                    // Sylvester's identity: the division is exact.
                    row[j] = v / &prev;
                }
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        Self { rows: a, pivots }
    }

    /// Reduced row echelon form over the rationals (pivot entries 1).
    fn reduced(&self) -> Vec<QVector> {
        let mut rows: Vec<QVector> = self.rows.iter().map(|r| to_rational(r)).collect();
        for i in (0..rows.len()).rev() {
            let pc = self.pivots[i];
            let inv = rows[i][pc].recip();
            for x in rows[i].iter_mut() {
                *x *= &inv;
            }
            for k in 0..i {
                if rows[k][pc].is_zero() {
                    continue;
                }
                let factor = rows[k][pc].clone();
                let (upper, lower) = rows.split_at_mut(i);
                for (x, y) in upper[k].iter_mut().zip(&lower[0]) {
                    *x -= &factor * y;
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::str::FromStr;

    fn n10_fcurves() -> Vec<Vec<i64>> {
        vec![
            vec![3, -1, 0, 0],
            vec![0, 2, -1, 0],
            vec![1, -1, 2, -1],
            vec![-2, 2, 1, -1],
            vec![1, 0, -2, 2],
            vec![-1, 0, 0, 1],
            vec![-3, 0, 2, 0],
            vec![0, -3, 3, 0],
            vec![-2, -2, 1, 2],
        ]
    }

    #[test]
    fn rank_examples() {
        assert_eq!(QMatrix::identity(3).rank(), 3);
        let c = n10_fcurves();
        let m = QMatrix::from_integers(&c[6..9]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(QMatrix::from_integers(&c).unwrap().rank(), 4);
        assert_eq!(QMatrix::with_cols(3, vec![]).unwrap().rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let c = n10_fcurves();
        let m = QMatrix::from_integers(&c[6..9]).unwrap();
        assert_eq!(m.kernel_basis(), vec![int_vector(&[4, 6, 6, 7])]);
        let m = QMatrix::from_integers(&[c[0].clone(), c[4].clone(), c[7].clone()]).unwrap();
        assert_eq!(m.kernel_basis(), vec![int_vector(&[2, 6, 6, 5])]);
        assert!(QMatrix::identity(2).kernel_basis().is_empty());
        let empty = QMatrix::with_cols(2, vec![]).unwrap();
        assert_eq!(empty.kernel_basis(), vec![int_vector(&[1, 0]), int_vector(&[0, 1])]);
    }

    #[test]
    fn kernel_sign_rule() {
        let m = QMatrix::from_integers(&[vec![1, 1]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![int_vector(&[1, -1])]);
    }

    #[test]
    fn solve_examples() {
        let b = int_vector(&[3, -7]);
        assert_eq!(QMatrix::identity(2).solve(&b).unwrap(), Some(b.clone()));
        let m = QMatrix::from_integers(&[vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(m.solve(&int_vector(&[0, 1])).unwrap(), None);
        assert!(matches!(
            QMatrix::identity(2).solve(&int_vector(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
        // 9ψ = 16Δ2 + 21Δ3 + 24Δ4 + 25Δ5 at n = 10, read as 9·I·x = b.
        let nine = QMatrix::from_integers(&[
            vec![9, 0, 0, 0],
            vec![0, 9, 0, 0],
            vec![0, 0, 9, 0],
            vec![0, 0, 0, 9],
        ])
        .unwrap();
        let psi = nine.solve(&int_vector(&[16, 21, 24, 25])).unwrap().unwrap();
        assert_eq!(psi, vec![ratio(16, 9), ratio(21, 9), ratio(24, 9), ratio(25, 9)]);
    }

    #[test]
    fn large_component_arithmetic() {
        let a = Rational::from_str("18446744073709551617/3").unwrap();
        let b = Rational::from_str("-36893488147419103233/6").unwrap();
        assert_eq!((a + b).to_string(), "1/6");
        assert_eq!(Rational::from_str("4/6").unwrap().to_string(), "2/3");
        assert_eq!(Rational::from_str("-10/5").unwrap().to_string(), "-2");
    }

    /// Rank by plain Gaussian elimination over the rationals.
    fn naive_rank(rows: &[QVector], cols: usize) -> usize {
        let mut m: Vec<QVector> = rows.to_vec();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[r][c];
                    let pr = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pr) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<(i64, i64)>>)> {
        (1usize..6, 0usize..6).prop_flat_map(|(cols, rows)| {
            (
                Just(cols),
                prop::collection::vec(
                    prop::collection::vec((-4i64..5, 1i64..4), cols),
                    rows,
                ),
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((cols, raw) in small_matrix()) {
            let rows: Vec<QVector> = raw.iter()
                .map(|r| r.iter().map(|&(n, d)| ratio(n, d)).collect())
                .collect();
            let m = QMatrix::with_cols(cols, rows.clone()).unwrap();
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank(), naive_rank(&rows, cols));
            prop_assert_eq!(m.rank() + kernel.len(), cols);
            for v in &kernel {
                prop_assert!(m.mul_vector(v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn solve_is_a_solution((cols, raw) in small_matrix(), seed in prop::collection::vec(-3i64..4, 6)) {
            let rows: Vec<QVector> = raw.iter()
                .map(|r| r.iter().map(|&(n, d)| ratio(n, d)).collect())
                .collect();
            let m = QMatrix::with_cols(cols, rows).unwrap();
            let x0 = int_vector(&seed[..cols]);
            let b = m.mul_vector(&x0).unwrap();
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vector(&x).unwrap(), b);
        }

        #[test]
        fn rational_text_round_trip(n in any::<i128>(), d in 1i128..i128::MAX) {
            let q = Rational::new(BigInt::from(n), BigInt::from(d));
            let back: Rational = q.to_string().parse().unwrap();
            prop_assert_eq!(back, q);
        }
    }
}
