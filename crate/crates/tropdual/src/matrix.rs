//! Exact integer matrices and the shaping operators used by the mutation
//! recurrences: entrywise positive truncation, row/column selection, the
//! sign-flip matrices `J_k`, unimodular inversion, and skew-symmetrizers.
//!
//! All public indices are 1-based, matching the usual cluster-algebra
//! conventions. Entries are arbitrary-precision integers throughout; nothing
//! in this crate ever rounds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from matrix construction and the exact matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("diagonal entry ({index},{index}) is nonzero")]
    NonzeroDiagonal { index: usize },
    #[error("entries ({row},{col}) and ({col},{row}) have the same sign")]
    SameSignPair { row: usize, col: usize },
    #[error("entry ({row},{col}) is zero but ({col},{row}) is not")]
    ZeroPatternMismatch { row: usize, col: usize },
    #[error("no consistent skew-symmetrizer: ratio cycle closes at ({row},{col})")]
    InconsistentSymmetrizerCycle { row: usize, col: usize },
    #[error("symmetrizer entry d_{index} is not positive")]
    NonpositiveSymmetrizer { index: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Which slice of a matrix `select` keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    /// Builds a matrix from row-major entries. Panics if the entry count
    /// does not equal `rows * cols` or either dimension is zero.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMat { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn from_diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = IntMat::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// The diagonal matrix `J_k`: the identity with entry (k,k) replaced by -1.
    pub fn jay(n: usize, k: usize) -> Result<Self, MatrixError> {
        if k < 1 || k > n {
            return Err(MatrixError::IndexOutOfRange { index: k, bound: n });
        }
        let mut m = IntMat::identity(n);
        m.entries[(k - 1) * n + (k - 1)] = -BigInt::one();
        Ok(m)
    }

    /// Convenience constructor from fixed-width integer rows.
    pub fn from_i64<const N: usize>(rows: &[[i64; N]]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        IntMat::new(rows.len(), N, entries)
    }

    /// Constructor from dynamically sized rows; rows must share one length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        assert!(r >= 1, "matrix dimensions must be >= 1");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn at(&self, i0: usize, j0: usize) -> &BigInt {
        &self.entries[i0 * self.cols + j0]
    }

    fn at_mut(&mut self, i0: usize, j0: usize) -> &mut BigInt {
        &mut self.entries[i0 * self.cols + j0]
    }

    /// Entry at row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        self.at(i - 1, j - 1)
    }

    /// Column `j` (1-based) as a vector.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        assert!((1..=self.cols).contains(&j), "column {j} out of range");
        (0..self.rows).map(|i| self.at(i, j - 1).clone()).collect()
    }

    /// Row `i` (1-based) as a vector.
    pub fn row(&self, i: usize) -> Vec<BigInt> {
        assert!((1..=self.rows).contains(&i), "row {i} out of range");
        self.entries[(i - 1) * self.cols..i * self.cols].to_vec()
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn neg(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMat::identity(self.rows)
    }

    /// Entrywise `max(b, 0)`, written `[B]_+`.
    pub fn truncate_positive(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| if e.is_positive() { e.clone() } else { BigInt::zero() })
                .collect(),
        }
    }

    /// Zeroes everything outside row `k` (`B^{k.}`) or column `k` (`B^{.k}`).
    pub fn select(&self, axis: Axis, k: usize) -> Result<IntMat, MatrixError> {
        let bound = match axis {
            Axis::Row => self.rows,
            Axis::Column => self.cols,
        };
        if k < 1 || k > bound {
            return Err(MatrixError::IndexOutOfRange { index: k, bound });
        }
        let mut out = IntMat::zeros(self.rows, self.cols);
        match axis {
            Axis::Row => {
                for j in 0..self.cols {
                    *out.at_mut(k - 1, j) = self.at(k - 1, j).clone();
                }
            }
            Axis::Column => {
                for i in 0..self.rows {
                    *out.at_mut(i, k - 1) = self.at(i, k - 1).clone();
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigInt>> = (1..=n).map(|i| self.row(i)).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact in Bareiss elimination
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Exact inverse of a unimodular integer matrix. Any other determinant is
    /// an error: a non-unimodular matrix here signals a bug or a broken
    /// identity upstream and is reported, never rounded.
    pub fn int_inverse(&self) -> Result<IntMat, MatrixError> {
        let det = self.determinant()?;
        if !det.abs().is_one() {
            return Err(MatrixError::NotUnimodular { det });
        }
        let n = self.rows;
        // Gauss-Jordan over exact rationals on [M | I].
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            BigRational::from(self.at(i, j).clone())
                        } else if j - n == i {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !aug[i][col].is_zero())
                .expect("unimodular matrix has full rank");
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for v in &mut aug[col] {
                *v /= p.clone();
            }
            for i in 0..n {
                if i != col && !aug[i][col].is_zero() {
                    let factor = aug[i][col].clone();
                    for j in 0..2 * n {
                        let delta = &factor * &aug[col][j];
                        aug[i][j] -= delta;
                    }
                }
            }
        }
        let mut out = IntMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &aug[i][j + n];
                assert!(v.is_integer(), "inverse of a unimodular matrix is integral");
                *out.at_mut(i, j) = v.to_integer();
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Serializes a bigint as a plain JSON number when it fits in i64, otherwise
/// as a decimal string. Inputs accept either form.
pub(crate) fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Some(BigInt::from(i))
            } else {
                n.as_u64().map(BigInt::from)
            }
        }
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for IntMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            rows: usize,
            cols: usize,
            entries: EntryRows<'a>,
        }
        struct EntryRows<'a>(&'a IntMat);
        impl Serialize for EntryRows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.rows))?;
                for i in 1..=self.0.rows {
                    let row: Vec<serde_json::Value> =
                        self.0.row(i).iter().map(bigint_to_json).collect();
                    seq.serialize_element(&row)?;
                }
                seq.end()
            }
        }
        Repr { rows: self.rows, cols: self.cols, entries: EntryRows(self) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<serde_json::Value>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.rows == 0 || repr.cols == 0 {
            return Err(D::Error::custom("matrix dimensions must be >= 1"));
        }
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom("row count does not match `rows`"));
        }
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for row in &repr.entries {
            if row.len() != repr.cols {
                return Err(D::Error::custom("row width does not match `cols`"));
            }
            for v in row {
                entries.push(
                    bigint_from_json(v)
                        .ok_or_else(|| D::Error::custom("matrix entry is not an integer"))?,
                );
            }
        }
        Ok(IntMat::new(repr.rows, repr.cols, entries))
    }
}

/// Finds the minimal positive diagonal `d_1..d_n` with
/// `d_j * b_ji = -d_i * b_ij`, i.e. `D B` skew-symmetric. Minimality: the
/// entries of each connected component of the nonzero pattern have gcd 1,
/// and isolated indices get `d_i = 1`.
pub fn find_skew_symmetrizer(b: &IntMat) -> Result<Vec<BigInt>, MatrixError> {
    if !b.is_square() {
        return Err(MatrixError::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    let n = b.rows();
    for i in 1..=n {
        if !b.entry(i, i).is_zero() {
            return Err(MatrixError::NonzeroDiagonal { index: i });
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, c) = (b.entry(i, j), b.entry(j, i));
            match (a.is_zero(), c.is_zero()) {
                (true, true) => {}
                (true, false) | (false, true) => {
                    return Err(MatrixError::ZeroPatternMismatch { row: i, col: j })
                }
                (false, false) => {
                    if (a * c).is_positive() {
                        return Err(MatrixError::SameSignPair { row: i, col: j });
                    }
                }
            }
        }
    }

    // Propagate d along the nonzero pattern, one connected component at a
    // time, as exact ratios; then clear denominators and reduce to gcd 1.
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if b.at(i, j).is_zero() {
                    continue;
                }
                // d_j * b_ji = -d_i * b_ij with opposite signs gives
                // d_j = d_i * |b_ij| / |b_ji|.
                let ratio = BigRational::new(b.at(i, j).abs(), b.at(j, i).abs());
                let dj = d[i].as_ref().unwrap() * ratio;
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return Err(MatrixError::InconsistentSymmetrizerCycle {
                                row: i + 1,
                                col: j + 1,
                            });
                        }
                    }
                }
            }
        }
        let lcm_den = component
            .iter()
            .fold(BigInt::one(), |acc, &i| num_integer::lcm(acc, d[i].as_ref().unwrap().denom().clone()));
        let scaled: Vec<BigInt> = component
            .iter()
            .map(|&i| (d[i].as_ref().unwrap() * BigRational::from(lcm_den.clone())).to_integer())
            .collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| num_integer::gcd(acc, v.clone()));
        for (&i, v) in component.iter().zip(scaled) {
            d[i] = Some(BigRational::from(v / &gcd));
        }
    }

    let d: Vec<BigInt> = d.into_iter().map(|v| v.unwrap().to_integer()).collect();
    for (i, di) in d.iter().enumerate() {
        if !di.is_positive() {
            return Err(MatrixError::NonpositiveSymmetrizer { index: i + 1 });
        }
    }
    // D B must come out exactly skew-symmetric.
    for i in 1..=n {
        for j in 1..=n {
            if &d[j - 1] * b.entry(j, i) != -(&d[i - 1] * b.entry(i, j)) {
                return Err(MatrixError::InconsistentSymmetrizerCycle { row: i, col: j });
            }
        }
    }
    Ok(d)
}

/// A skew-symmetrizable exchange matrix together with its positive diagonal
/// skew-symmetrizer `D` (so `B^T = -D B D^{-1}`). Mutation preserves `D`, so
/// every matrix in a pattern carries the root's symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    b: IntMat,
    d: Vec<BigInt>,
}

impl ExchangeMatrix {
    /// Wraps `b`, computing the canonical (componentwise-minimal) symmetrizer.
    pub fn new(b: IntMat) -> Result<Self, MatrixError> {
        let d = find_skew_symmetrizer(&b)?;
        Ok(ExchangeMatrix { b, d })
    }

    /// Wraps `b` with a caller-supplied symmetrizer, validating it.
    pub fn with_symmetrizer(b: IntMat, d: Vec<BigInt>) -> Result<Self, MatrixError> {
        if !b.is_square() {
            return Err(MatrixError::NotSquare { rows: b.rows(), cols: b.cols() });
        }
        let n = b.rows();
        if d.len() != n {
            return Err(MatrixError::DimensionMismatch(format!(
                "symmetrizer has {} entries for a {}x{} matrix",
                d.len(),
                n,
                n
            )));
        }
        for (i, di) in d.iter().enumerate() {
            if !di.is_positive() {
                return Err(MatrixError::NonpositiveSymmetrizer { index: i + 1 });
            }
        }
        // Reuse the structural checks, then verify this particular D.
        find_skew_symmetrizer(&b)?;
        for i in 1..=n {
            for j in 1..=n {
                if &d[j - 1] * b.entry(j, i) != -(&d[i - 1] * b.entry(i, j)) {
                    return Err(MatrixError::InconsistentSymmetrizerCycle { row: i, col: j });
                }
            }
        }
        Ok(ExchangeMatrix { b, d })
    }

    pub fn from_i64<const N: usize>(rows: &[[i64; N]]) -> Result<Self, MatrixError> {
        ExchangeMatrix::new(IntMat::from_i64(rows))
    }

    /// Rank `n` of the pattern.
    pub fn size(&self) -> usize {
        self.b.rows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.d
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        self.b.entry(i, j)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.b == self.b.transpose().neg()
    }

    /// Rewraps an already-mutated matrix, keeping this symmetrizer.
    pub(crate) fn with_same_symmetrizer(&self, b: IntMat) -> ExchangeMatrix {
        debug_assert_eq!(b.rows(), self.b.rows());
        ExchangeMatrix { b, d: self.d.clone() }
    }

    /// `-B^T`, which is skew-symmetrizable whenever `B` is; the symmetrizer
    /// is recomputed canonically.
    pub fn negated_transpose(&self) -> ExchangeMatrix {
        ExchangeMatrix::new(self.b.transpose().neg())
            .expect("-B^T of a skew-symmetrizable matrix is skew-symmetrizable")
    }

    /// `B^T` with its canonical symmetrizer.
    pub fn transposed(&self) -> ExchangeMatrix {
        ExchangeMatrix::new(self.b.transpose())
            .expect("B^T of a skew-symmetrizable matrix is skew-symmetrizable")
    }

    /// `-B` with the same symmetrizer.
    pub fn negated(&self) -> ExchangeMatrix {
        ExchangeMatrix { b: self.b.neg(), d: self.d.clone() }
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.b.fmt(f)
    }
}

// Matrix-file form: the plain matrix fields plus the symmetrizer diagonal.
impl Serialize for ExchangeMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut value = serde_json::to_value(&self.b).map_err(serde::ser::Error::custom)?;
        let d: Vec<serde_json::Value> = self.d.iter().map(bigint_to_json).collect();
        value
            .as_object_mut()
            .expect("matrix serializes to an object")
            .insert("d".to_string(), serde_json::Value::from(d));
        value.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn arb_mat(n: usize) -> impl Strategy<Value = IntMat> {
        proptest::collection::vec(-9i64..=9, n * n).prop_map(move |entries| {
            IntMat::new(n, n, entries.into_iter().map(BigInt::from).collect())
        })
    }

    #[test]
    fn truncate_positive_examples() {
        let m = IntMat::from_i64(&[[0, 2], [-1, 0]]);
        assert_eq!(m.truncate_positive(), IntMat::from_i64(&[[0, 2], [0, 0]]));
        let z = IntMat::zeros(2, 3);
        assert_eq!(z.truncate_positive(), z);
        let neg = IntMat::from_i64(&[[-3]]);
        assert_eq!(neg.truncate_positive(), IntMat::from_i64(&[[0]]));
    }

    #[test]
    fn select_examples() {
        let m = IntMat::from_i64(&[[0, 2], [-1, 0]]);
        assert_eq!(m.select(Axis::Row, 1).unwrap(), IntMat::from_i64(&[[0, 2], [0, 0]]));
        assert_eq!(m.select(Axis::Column, 1).unwrap(), IntMat::from_i64(&[[0, 0], [-1, 0]]));
        assert_eq!(
            m.select(Axis::Row, 3),
            Err(MatrixError::IndexOutOfRange { index: 3, bound: 2 })
        );
    }

    #[test]
    fn select_commutes_with_truncation() {
        let m = IntMat::from_i64(&[[3, -2, 5], [-7, 0, 1], [4, -4, -9]]);
        for k in 1..=3 {
            for axis in [Axis::Row, Axis::Column] {
                assert_eq!(
                    m.truncate_positive().select(axis, k).unwrap(),
                    m.select(axis, k).unwrap().truncate_positive()
                );
            }
        }
    }

    #[test]
    fn jay_examples() {
        assert_eq!(IntMat::jay(2, 1).unwrap(), IntMat::from_i64(&[[-1, 0], [0, 1]]));
        assert_eq!(IntMat::jay(1, 1).unwrap(), IntMat::from_i64(&[[-1]]));
        let j = IntMat::jay(3, 2).unwrap();
        assert!(j.mul(&j).is_identity());
        assert!(IntMat::jay(3, 4).is_err());
    }

    #[test]
    fn jay_shift_transpose_and_inverse_identities() {
        // (J_l + B^{.l})^T = J_l + (B^T)^{l.} and (J_l + B^{l.})^{-1} = J_l + B^{l.}
        // whenever the l-th diagonal entry vanishes.
        let mut m = IntMat::from_i64(&[[0, 3, -2], [5, 0, 7], [-4, 1, 0]]);
        for l in 1..=3 {
            *m.at_mut(l - 1, l - 1) = BigInt::zero();
            let jl = IntMat::jay(3, l).unwrap();
            let col_form = jl.add(&m.select(Axis::Column, l).unwrap());
            let row_of_transpose = jl.add(&m.transpose().select(Axis::Row, l).unwrap());
            assert_eq!(col_form.transpose(), row_of_transpose);

            let row_form = jl.add(&m.select(Axis::Row, l).unwrap());
            assert!(row_form.mul(&row_form).is_identity());
            assert_eq!(row_form.int_inverse().unwrap(), row_form);
        }
    }

    #[test]
    fn int_inverse_examples() {
        let m = IntMat::from_i64(&[[-1, 1], [0, 1]]);
        assert_eq!(m.int_inverse().unwrap(), m);
        let id = IntMat::identity(4);
        assert_eq!(id.int_inverse().unwrap(), id);
        assert_eq!(
            IntMat::from_i64(&[[2, 0], [0, 1]]).int_inverse(),
            Err(MatrixError::NotUnimodular { det: bi(2) })
        );
    }

    #[test]
    fn int_inverse_round_trip() {
        let m = IntMat::from_i64(&[[1, 2, 0, -1], [0, 1, 3, 2], [0, 0, 1, -4], [0, 0, 0, -1]]);
        let inv = m.int_inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn determinant_matches_cofactor_expansion_on_small_cases() {
        // Independent 3x3 oracle: direct cofactor expansion.
        fn det3(m: &IntMat) -> BigInt {
            let e = |i, j| m.entry(i, j).clone();
            e(1, 1) * (e(2, 2) * e(3, 3) - e(2, 3) * e(3, 2))
                - e(1, 2) * (e(2, 1) * e(3, 3) - e(2, 3) * e(3, 1))
                + e(1, 3) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1))
        }
        let cases = [
            IntMat::from_i64(&[[2, -3, 1], [4, 0, -2], [5, 1, 7]]),
            IntMat::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
            IntMat::from_i64(&[[0, 0, 2], [0, 3, 0], [4, 0, 0]]),
        ];
        for m in cases {
            assert_eq!(m.determinant().unwrap(), det3(&m));
        }
    }

    #[test]
    fn skew_symmetrizer_examples() {
        let b = IntMat::from_i64(&[[0, 2], [-1, 0]]);
        assert_eq!(find_skew_symmetrizer(&b).unwrap(), vec![bi(1), bi(2)]);

        let skew = IntMat::from_i64(&[[0, 1], [-1, 0]]);
        assert_eq!(find_skew_symmetrizer(&skew).unwrap(), vec![bi(1), bi(1)]);

        assert_eq!(
            find_skew_symmetrizer(&IntMat::from_i64(&[[0, 1], [1, 0]])),
            Err(MatrixError::SameSignPair { row: 1, col: 2 })
        );
        assert_eq!(
            find_skew_symmetrizer(&IntMat::from_i64(&[[1]])),
            Err(MatrixError::NonzeroDiagonal { index: 1 })
        );
        assert_eq!(
            find_skew_symmetrizer(&IntMat::from_i64(&[[0, 1], [0, 0]])),
            Err(MatrixError::ZeroPatternMismatch { row: 1, col: 2 })
        );
    }

    #[test]
    fn skew_symmetrizer_makes_db_skew_symmetric() {
        let b = IntMat::from_i64(&[[0, 3, 0], [-1, 0, 2], [0, -4, 0]]);
        let d = find_skew_symmetrizer(&b).unwrap();
        let db = IntMat::from_diagonal(&d).mul(&b);
        assert_eq!(db.transpose(), db.neg());
        // Component gcd is 1.
        let gcd = d.iter().fold(BigInt::zero(), |acc, v| num_integer::gcd(acc, v.clone()));
        assert!(gcd.is_one());
    }

    #[test]
    fn skew_symmetrizer_isolated_indices_get_one() {
        // d_2 * (-4) = -d_1 * 2 forces d = (2, 1) on the connected pair;
        // the isolated third index gets 1.
        let b = IntMat::from_i64(&[[0, 2, 0], [-4, 0, 0], [0, 0, 0]]);
        assert_eq!(find_skew_symmetrizer(&b).unwrap(), vec![bi(2), bi(1), bi(1)]);
    }

    #[test]
    fn skew_symmetrizer_rejects_inconsistent_cycle() {
        // Triangle whose ratio product around the cycle is not 1.
        let b = IntMat::from_i64(&[[0, 1, -1], [-2, 0, 1], [1, -1, 0]]);
        assert!(matches!(
            find_skew_symmetrizer(&b),
            Err(MatrixError::InconsistentSymmetrizerCycle { .. })
        ));
    }

    #[test]
    fn exchange_matrix_pins_or_computes_d() {
        let b = IntMat::from_i64(&[[0, 2], [-1, 0]]);
        let auto = ExchangeMatrix::new(b.clone()).unwrap();
        assert_eq!(auto.symmetrizer(), &[bi(1), bi(2)]);
        let pinned = ExchangeMatrix::with_symmetrizer(b.clone(), vec![bi(2), bi(4)]).unwrap();
        assert_eq!(pinned.symmetrizer(), &[bi(2), bi(4)]);
        assert!(ExchangeMatrix::with_symmetrizer(b, vec![bi(1), bi(3)]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn select_and_truncation_commute(m in arb_mat(4), k in 1usize..=4) {
            for axis in [Axis::Row, Axis::Column] {
                prop_assert_eq!(
                    m.truncate_positive().select(axis, k).unwrap(),
                    m.select(axis, k).unwrap().truncate_positive()
                );
            }
        }

        #[test]
        fn jay_algebra_on_random_matrices(m in arb_mat(4), l in 1usize..=4) {
            // Zero the (l,l) entry, as the identities require.
            let mut m = m;
            *m.at_mut(l - 1, l - 1) = BigInt::zero();
            let jl = IntMat::jay(4, l).unwrap();

            let col_form = jl.add(&m.select(Axis::Column, l).unwrap());
            let row_of_transpose = jl.add(&m.transpose().select(Axis::Row, l).unwrap());
            prop_assert_eq!(col_form.transpose(), row_of_transpose);

            let row_form = jl.add(&m.select(Axis::Row, l).unwrap());
            prop_assert_eq!(row_form.int_inverse().unwrap(), row_form.clone());
            prop_assert!(row_form.mul(&row_form).is_identity());
        }
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = IntMat::from_i64(&[[0, 2], [-1, 0]]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"rows":2,"cols":2,"entries":[[0,2],[-1,0]]}"#);
        let back: IntMat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);

        // Oversized entries survive as strings.
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMat::new(1, 1, vec![huge.clone()]);
        let json = serde_json::to_string(&m).unwrap();
        let back: IntMat = serde_json::from_str(&json).unwrap();
        assert_eq!(back.entry(1, 1), &huge);
    }
}
