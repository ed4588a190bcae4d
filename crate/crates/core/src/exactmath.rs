//! Exact integer building blocks: binomials, factorials, fraction-free
//! determinants, Vandermonde products and the Schubert degree formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, with the convention that it vanishes outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `0! 1! ... (d-1)!`
pub fn superfactorial(d: usize) -> BigInt {
    (0..d as u64).map(factorial).product()
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate pivot division is exact, so entries stay bounded by
/// minors of the input (Hadamard-sized) rather than growing exponentially.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.entries[i * n..(i + 1) * n].to_vec())
        .collect();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Determinant of the matrix with entries `C(rows[i], cols[j])`.
pub fn binomial_determinant(rows: &[i64], cols: &[i64]) -> Result<BigInt> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "binomial determinant with {} row and {} column indices",
            rows.len(),
            cols.len()
        )));
    }
    let m = IntMatrix::from_fn(rows.len(), cols.len(), |i, j| binomial(rows[i], cols[j]));
    determinant(&m)
}

/// `prod_{i<j} (a_j - a_i)`.
pub fn vandermonde(a: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..a.len() {
        for i in 0..j {
            acc *= a[j] - a[i];
        }
    }
    acc
}

/// Degree of the Schubert class with jump sequence `a` against `omega_1^m`:
/// `m! / (a_0! ... a_{d-1}!) * prod_{i>j}(a_i - a_j)`.
///
/// The quotient is reduced exactly and a non-unit denominator is reported as
/// an invariant failure.
pub fn degree_coefficient(m: u64, a: &[i64]) -> Result<BigInt> {
    if a.iter().any(|&x| x < 0) {
        return Err(Error::contract("jump sequence must be nonnegative"));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::contract("jump sequence must be strictly increasing"));
    }
    let dim: i64 = a.iter().enumerate().map(|(i, &x)| x - i as i64).sum();
    if dim != m as i64 {
        return Err(Error::contract(format!(
            "jump sequence {a:?} has dimension {dim}, expected {m}"
        )));
    }
    let numerator = factorial(m) * vandermonde(a);
    let denominator: BigInt = a.iter().map(|&x| factorial(x as u64)).product();
    let (q, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::invariant(format!(
            "degree of {a:?} is not integral"
        )));
    }
    Ok(q)
}

/// Two-term extended Euclid: returns `(g, x, y)` with `a x + b y = g`, `g >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Bezout coefficients for a list, by a left fold of [`extended_gcd`].
///
/// Returns `g = gcd(a) >= 1` and `x` with `sum a_i x_i = g`.
pub fn extended_gcd_list(a: &[BigInt]) -> Result<(BigInt, Vec<BigInt>)> {
    if a.iter().all(Zero::is_zero) {
        return Err(Error::contract("extended gcd of an empty or all-zero list"));
    }
    let mut g = a[0].clone();
    let mut coeffs = vec![BigInt::one()];
    for value in &a[1..] {
        let (next, u, v) = extended_gcd(&g, value);
        for c in coeffs.iter_mut() {
            *c *= &u;
        }
        coeffs.push(v);
        g = next;
    }
    if g.is_negative() {
        g = -g;
        coeffs.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok((g, coeffs))
}

/// `gcd` of absolute values; zero for an empty or all-zero list.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        for n in 1..20 {
            let row: BigInt = (0..n).map(|x| binomial(n - 1, x)).sum();
            assert_eq!(row, BigInt::one() << (n - 1));
        }
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), BigInt::one());
        let zero_pivot = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&zero_pivot).unwrap(), BigInt::from(-1));
        let singular = IntMatrix::from_rows(&[vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        assert_eq!(determinant(&singular).unwrap(), BigInt::zero());
    }

    #[test]
    fn non_square_is_dimension_error() {
        let m = IntMatrix::zeros(2, 3);
        assert!(matches!(determinant(&m), Err(Error::Dimension(_))));
        assert!(matches!(
            binomial_determinant(&[1, 2], &[0]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn binomial_determinant_examples() {
        assert_eq!(binomial_determinant(&[1, 2], &[0, 1]).unwrap(), BigInt::one());
        assert_eq!(binomial_determinant(&[3, 4], &[0, 1]).unwrap(), BigInt::one());
        assert_eq!(binomial_determinant(&[0, 3, 5, 9], &[0, 3, 5, 9]).unwrap(), BigInt::one());
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(&[0, 1, 2]), BigInt::from(2));
        assert_eq!(vandermonde(&[0, 4]), BigInt::from(4));
        assert_eq!(vandermonde(&[3, 1, 3]), BigInt::zero());
        assert_eq!(vandermonde(&[]), BigInt::one());
        assert_eq!(vandermonde(&[7]), BigInt::one());
    }

    #[test]
    fn degree_coefficient_examples() {
        for n in 5..20i64 {
            let m = (n - 1) as u64;
            assert_eq!(degree_coefficient(m, &[1, n - 1]).unwrap(), BigInt::from(n - 2));
            assert_eq!(
                degree_coefficient(m, &[2, n - 2]).unwrap(),
                BigInt::from((n - 1) * (n - 4) / 2)
            );
        }
        assert_eq!(degree_coefficient(0, &[0, 1, 2]).unwrap(), BigInt::one());
        assert!(matches!(degree_coefficient(3, &[0, 1, 2]), Err(Error::Contract(_))));
        assert!(matches!(degree_coefficient(1, &[1, 1]), Err(Error::Contract(_))));
    }

    #[test]
    fn extended_gcd_examples() {
        let a: Vec<BigInt> = [2, 3].into_iter().map(BigInt::from).collect();
        let (g, x) = extended_gcd_list(&a).unwrap();
        assert_eq!(g, BigInt::one());
        assert_eq!(x, vec![BigInt::from(-1), BigInt::from(1)]);

        let a: Vec<BigInt> = [6, 10, 15].into_iter().map(BigInt::from).collect();
        let (g, x) = extended_gcd_list(&a).unwrap();
        assert_eq!(g, BigInt::one());
        let s: BigInt = a.iter().zip(&x).map(|(p, q)| p * q).sum();
        assert_eq!(s, BigInt::one());

        let (g, x) = extended_gcd_list(&[BigInt::from(7)]).unwrap();
        assert_eq!((g, x), (BigInt::from(7), vec![BigInt::one()]));

        assert!(extended_gcd_list(&[BigInt::zero(), BigInt::zero()]).is_err());
        assert!(extended_gcd_list(&[]).is_err());
    }

    fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn bareiss_matches_cofactor(m in matrix_strategy()) {
            let mat = IntMatrix::from_rows(&m).unwrap();
            prop_assert_eq!(determinant(&mat).unwrap(), cofactor_det(&m));
        }

        #[test]
        fn binomial_determinant_matches_assembled(
            rows in proptest::collection::vec(0i64..15, 1..5),
            cols in proptest::collection::vec(0i64..15, 1..5),
        ) {
            let k = rows.len().min(cols.len());
            let (rows, cols) = (&rows[..k], &cols[..k]);
            let explicit: Vec<Vec<i64>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| i64::try_from(binomial(r, c)).unwrap()).collect())
                .collect();
            prop_assert_eq!(binomial_determinant(rows, cols).unwrap(), cofactor_det(&explicit));
        }

        #[test]
        fn vandermonde_alternates(a in proptest::collection::vec(-20i64..20, 2..7), i in 0usize..7, j in 0usize..7) {
            let (i, j) = (i % a.len(), j % a.len());
            prop_assume!(i != j);
            let mut b = a.clone();
            b.swap(i, j);
            prop_assert_eq!(vandermonde(&b), -vandermonde(&a));
        }

        #[test]
        fn degree_cross_form(set in proptest::collection::btree_set(0i64..14, 1..6)) {
            let a: Vec<i64> = set.into_iter().collect();
            let m: i64 = a.iter().enumerate().map(|(i, &x)| x - i as i64).sum();
            let deg = degree_coefficient(m as u64, &a).unwrap();
            let prod: BigInt = a.iter().map(|&x| factorial(x as u64)).product();
            prop_assert_eq!(deg * prod, factorial(m as u64) * vandermonde(&a));
        }

        #[test]
        fn bezout_identity_holds(a in proptest::collection::vec(-500i64..500, 1..6)) {
            prop_assume!(a.iter().any(|&x| x != 0));
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            let (g, x) = extended_gcd_list(&a).unwrap();
            prop_assert_eq!(&g, &gcd_all(&a));
            let s: BigInt = a.iter().zip(&x).map(|(p, q)| p * q).sum();
            prop_assert_eq!(s, g);
        }
    }
}
