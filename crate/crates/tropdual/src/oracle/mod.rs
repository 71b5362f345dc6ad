//! Independent ground-truth computations: the Y-pattern run directly in the
//! tropical semifield, which recovers C-matrices without any matrix
//! recurrence, and the fully symbolic seed pattern with principal
//! coefficients, which certifies the separation formulas expressing
//! coefficients and cluster variables through c-/g-vectors and
//! F-polynomials.
//!
//! Both run on the same Y-mutation loop through a minimal semifield
//! interface (multiplication, auxiliary addition, inverse, one); only the
//! two instances the formulas actually use are implemented.

mod gcd;
mod ratfn;

pub use ratfn::RatFn;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::{ExchangeMatrix, IntMat, MatrixError};
use crate::pattern::{mutate_matrix, MutationWord, PatternError, PatternPoint};
use crate::poly::SparsePoly;

/// A monomial `prod_i y_i^{a_i}` in the tropical semifield: the group law
/// adds exponent vectors, and the auxiliary addition takes componentwise
/// minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMonomial {
    exps: Vec<BigInt>,
}

impl TropMonomial {
    pub fn one(n: usize) -> Self {
        TropMonomial { exps: vec![BigInt::zero(); n] }
    }

    /// The generator `y_j` (1-based).
    pub fn unit(n: usize, j: usize) -> Self {
        assert!((1..=n).contains(&j), "generator index out of range");
        let mut exps = vec![BigInt::zero(); n];
        exps[j - 1] = BigInt::one();
        TropMonomial { exps }
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exps
    }

    pub fn mul(&self, other: &TropMonomial) -> TropMonomial {
        TropMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inv(&self) -> TropMonomial {
        TropMonomial { exps: self.exps.iter().map(|a| -a).collect() }
    }

    pub fn pow(&self, e: &BigInt) -> TropMonomial {
        TropMonomial { exps: self.exps.iter().map(|a| a * e).collect() }
    }

    /// Tropical addition: componentwise minimum of exponent vectors.
    pub fn oplus(&self, other: &TropMonomial) -> TropMonomial {
        TropMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        }
    }
}

impl fmt::Display for TropMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "y{}", i + 1)?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The semifield operations the Y-mutation rule needs.
trait Semifield {
    type Elt: Clone;
    fn one(&self) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Self::Elt;
    fn oplus(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn int_pow(&self, a: &Self::Elt, e: &BigInt) -> Self::Elt;
}

struct TropicalSemifield {
    n: usize,
}

impl Semifield for TropicalSemifield {
    type Elt = TropMonomial;

    fn one(&self) -> TropMonomial {
        TropMonomial::one(self.n)
    }

    fn mul(&self, a: &TropMonomial, b: &TropMonomial) -> TropMonomial {
        a.mul(b)
    }

    fn inv(&self, a: &TropMonomial) -> TropMonomial {
        a.inv()
    }

    fn oplus(&self, a: &TropMonomial, b: &TropMonomial) -> TropMonomial {
        a.oplus(b)
    }

    fn int_pow(&self, a: &TropMonomial, e: &BigInt) -> TropMonomial {
        a.pow(e)
    }
}

/// Rational functions with ordinary addition as the auxiliary addition:
/// the universal semifield of the principal-coefficient pattern.
struct RationalSemifield {
    nvars: usize,
}

impl Semifield for RationalSemifield {
    type Elt = RatFn;

    fn one(&self) -> RatFn {
        RatFn::one(self.nvars)
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.mul(b)
    }

    fn inv(&self, a: &RatFn) -> RatFn {
        a.inv()
    }

    fn oplus(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.add(b)
    }

    fn int_pow(&self, a: &RatFn, e: &BigInt) -> RatFn {
        a.pow(to_i64(e))
    }
}

fn to_i64(v: &BigInt) -> i64 {
    v.to_i64().expect("exponent fits i64")
}

fn positive_part(v: &BigInt) -> BigInt {
    if v.is_positive() {
        v.clone()
    } else {
        BigInt::zero()
    }
}

/// One Y-seed mutation in direction `k` over any semifield:
/// `y'_k = y_k^{-1}` and `y'_j = y_j y_k^{[b_kj]_+} (y_k (+) 1)^{-b_kj}`.
fn y_mutate<S: Semifield>(s: &S, y: &[S::Elt], b_t: &ExchangeMatrix, k: usize) -> Vec<S::Elt> {
    let n = b_t.size();
    let yk = &y[k - 1];
    let yk_plus_one = s.oplus(yk, &s.one());
    (1..=n)
        .map(|j| {
            if j == k {
                s.inv(yk)
            } else {
                let bkj = b_t.entry(k, j);
                let up = s.int_pow(yk, &positive_part(bkj));
                let down = s.int_pow(&yk_plus_one, &-bkj);
                s.mul(&s.mul(&y[j - 1], &up), &down)
            }
        })
        .collect()
}

fn y_walk<S: Semifield>(
    s: &S,
    initial: Vec<S::Elt>,
    b0: &ExchangeMatrix,
    word: &MutationWord,
) -> Result<(Vec<S::Elt>, ExchangeMatrix), PatternError> {
    word.validate_rank(b0.size())?;
    let mut y = initial;
    let mut b = b0.clone();
    for &k in word.directions() {
        y = y_mutate(s, &y, &b, k);
        b = mutate_matrix(&b, k)?;
    }
    Ok((y, b))
}

/// Runs the Y-pattern in the tropical semifield from the unit monomials and
/// returns the matrix whose column `j` is the exponent vector of `y_{j;t}`.
/// This must equal the engine's C-matrix at the same vertex, exactly — the
/// strongest independent certification of the C-recurrence, since no matrix
/// recurrence appears anywhere in this computation.
pub fn tropical_y_walk(b0: &ExchangeMatrix, word: &MutationWord) -> Result<IntMat, PatternError> {
    let n = b0.size();
    let semifield = TropicalSemifield { n };
    let initial = (1..=n).map(|j| TropMonomial::unit(n, j)).collect();
    let (y, _) = y_walk(&semifield, initial, b0, word)?;
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (j, monomial) in y.iter().enumerate() {
        for (i, e) in monomial.exponents().iter().enumerate() {
            rows[i][j] = e.clone();
        }
    }
    Ok(IntMat::from_rows(rows))
}

/// A seed of the fully symbolic pattern with principal coefficients: exact
/// rational functions in `x_1..x_n, y_1..y_n` (variables `1..n` are the
/// initial cluster, `n+1..2n` the initial coefficients).
#[derive(Debug, Clone)]
pub struct SymbolicSeed {
    pub x: Vec<RatFn>,
    pub y: Vec<RatFn>,
    pub b_t: ExchangeMatrix,
}

impl SymbolicSeed {
    pub fn initial(b0: &ExchangeMatrix) -> Self {
        let n = b0.size();
        let nv = 2 * n;
        SymbolicSeed {
            x: (1..=n).map(|i| RatFn::var(nv, i)).collect(),
            y: (1..=n).map(|j| RatFn::var(nv, n + j)).collect(),
            b_t: b0.clone(),
        }
    }

    /// One seed mutation in direction `k`: the exchange relation for `x_k`,
    /// the Y-rule for the coefficients, matrix mutation for `B`. Involutive.
    pub fn mutate(&self, k: usize) -> Result<SymbolicSeed, MatrixError> {
        let n = self.b_t.size();
        if k < 1 || k > n {
            return Err(MatrixError::IndexOutOfRange { index: k, bound: n });
        }
        let nv = 2 * n;
        let semifield = RationalSemifield { nvars: nv };

        // x'_k = (y_k prod x_i^{[b_ik]_+} + prod x_i^{[-b_ik]_+}) / ((y_k + 1) x_k)
        let yk = &self.y[k - 1];
        let mut with_coeff = yk.clone();
        let mut without_coeff = RatFn::one(nv);
        for i in 1..=n {
            let bik = self.b_t.entry(i, k);
            if bik.is_positive() {
                with_coeff = with_coeff.mul(&self.x[i - 1].pow(to_i64(bik)));
            } else if bik.is_negative() {
                without_coeff = without_coeff.mul(&self.x[i - 1].pow(to_i64(&-bik)));
            }
        }
        let denominator = yk.add(&RatFn::one(nv)).mul(&self.x[k - 1]);
        let xk_next = with_coeff.add(&without_coeff).div(&denominator);

        let mut x = self.x.clone();
        x[k - 1] = xk_next;
        let y = y_mutate(&semifield, &self.y, &self.b_t, k);
        let b_t = mutate_matrix(&self.b_t, k)?;
        Ok(SymbolicSeed { x, y, b_t })
    }
}

/// Folds symbolic seed mutation over a word. Exact but exponential in
/// depth; intended for small ranks and shallow words.
pub fn symbolic_walk(b0: &ExchangeMatrix, word: &MutationWord) -> Result<SymbolicSeed, PatternError> {
    word.validate_rank(b0.size())?;
    let mut seed = SymbolicSeed::initial(b0);
    for &k in word.directions() {
        seed = seed.mutate(k)?;
    }
    Ok(seed)
}

/// Per-index outcome of the separation check.
#[derive(Debug, Clone)]
pub struct SeparationResult {
    pub j: usize,
    pub y_matches: bool,
    pub x_matches: bool,
    /// Rendered sides of the first failing identity, if any.
    pub mismatch: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SeparationReport {
    pub results: Vec<SeparationResult>,
}

impl SeparationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.y_matches && r.x_matches)
    }
}

/// Renders an element of the symbolic ring with `x1..xn, y1..yn` names.
pub fn format_xy(r: &RatFn, n: usize) -> String {
    r.format_with(|v| if v <= n { format!("x{v}") } else { format!("y{}", v - n) })
}

/// A Laurent monomial in the `2n`-variable ring, as a reduced fraction.
fn laurent_monomial(nvars: usize, exps: &[BigInt]) -> RatFn {
    let mut num = vec![0u32; nvars];
    let mut den = vec![0u32; nvars];
    for (i, e) in exps.iter().enumerate() {
        if e.is_positive() {
            num[i] = e.to_u32().expect("exponent fits u32");
        } else if e.is_negative() {
            den[i] = (-e).to_u32().expect("exponent fits u32");
        }
    }
    RatFn::new(
        SparsePoly::monomial(&num, BigInt::one()),
        SparsePoly::monomial(&den, BigInt::one()),
    )
}

/// Evaluates an `n`-variable polynomial at rational-function arguments.
fn eval_poly_at(f: &SparsePoly, args: &[RatFn]) -> RatFn {
    let nvars = args[0].nvars();
    let tables: Vec<Vec<RatFn>> = (1..=f.nvars())
        .map(|i| {
            let max = f.max_exponent(i) as usize;
            let mut powers = Vec::with_capacity(max + 1);
            powers.push(RatFn::one(nvars));
            for e in 1..=max {
                powers.push(powers[e - 1].mul(&args[i - 1]));
            }
            powers
        })
        .collect();
    let mut acc = RatFn::from_poly(SparsePoly::zero(nvars));
    for (exps, coeff) in f.terms() {
        let mut term = RatFn::constant(nvars, coeff.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term.mul(&tables[i][e as usize]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Verifies, as exact rational-function identities at one vertex,
///
/// ```text
/// y_{j;t} = prod_i y_i^{c_ij}  * prod_i F_i(y)^{b_ij;t}
/// x_{j;t} = prod_i x_i^{g_ij}  * F_j(yhat_1..yhat_n) / F_j(y_1..y_n)
/// ```
///
/// with `yhat_j = y_j prod_i x_i^{b_ij}` built from the initial exchange
/// matrix. `point` and `sym` must come from the same root and word.
pub fn separation_check(
    b0: &ExchangeMatrix,
    point: &PatternPoint,
    sym: &SymbolicSeed,
) -> SeparationReport {
    let n = b0.size();
    let nv = 2 * n;
    assert_eq!(point.f.len(), n, "pattern point rank mismatch");
    assert_eq!(sym.x.len(), n, "symbolic seed rank mismatch");

    let yhat: Vec<RatFn> = (1..=n)
        .map(|j| {
            let mut exps = vec![BigInt::zero(); nv];
            for i in 1..=n {
                exps[i - 1] = b0.entry(i, j).clone();
            }
            exps[n + j - 1] = BigInt::one();
            laurent_monomial(nv, &exps)
        })
        .collect();
    let f_in_y: Vec<RatFn> = point
        .f
        .iter()
        .map(|f| RatFn::from_poly(f.embed(nv, n)))
        .collect();

    let mut results = Vec::with_capacity(n);
    for j in 1..=n {
        let mut y_exps = vec![BigInt::zero(); nv];
        for i in 1..=n {
            y_exps[n + i - 1] = point.c.entry(i, j).clone();
        }
        let mut rhs_y = laurent_monomial(nv, &y_exps);
        for i in 1..=n {
            let e = to_i64(point.b_t.entry(i, j));
            if e != 0 {
                rhs_y = rhs_y.mul(&f_in_y[i - 1].pow(e));
            }
        }
        let y_matches = sym.y[j - 1] == rhs_y;

        let mut x_exps = vec![BigInt::zero(); nv];
        for i in 1..=n {
            x_exps[i - 1] = point.g.entry(i, j).clone();
        }
        let rhs_x = laurent_monomial(nv, &x_exps)
            .mul(&eval_poly_at(&point.f[j - 1], &yhat))
            .div(&f_in_y[j - 1]);
        let x_matches = sym.x[j - 1] == rhs_x;

        let mismatch = if !y_matches {
            Some(format!(
                "y_{j}: pattern side {} != separation side {}",
                format_xy(&sym.y[j - 1], n),
                format_xy(&rhs_y, n)
            ))
        } else if !x_matches {
            Some(format!(
                "x_{j}: pattern side {} != separation side {}",
                format_xy(&sym.x[j - 1], n),
                format_xy(&rhs_x, n)
            ))
        } else {
            None
        };
        results.push(SeparationResult { j, y_matches, x_matches, mismatch });
    }
    SeparationReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{walk, walk_matrices, words_up_to_depth};
    use proptest::prelude::*;

    fn a2() -> ExchangeMatrix {
        ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap()
    }

    fn word(dirs: &[usize]) -> MutationWord {
        MutationWord::new(dirs.to_vec()).unwrap()
    }

    #[test]
    fn tropical_walk_examples() {
        assert!(tropical_y_walk(&a2(), &MutationWord::empty()).unwrap().is_identity());
        assert_eq!(
            tropical_y_walk(&a2(), &word(&[1])).unwrap(),
            IntMat::from_i64(&[[-1, 1], [0, 1]])
        );
        let b2 = ExchangeMatrix::from_i64(&[[0, 2], [-1, 0]]).unwrap();
        assert_eq!(
            tropical_y_walk(&b2, &word(&[1])).unwrap(),
            IntMat::from_i64(&[[-1, 2], [0, 1]])
        );
    }

    #[test]
    fn tropical_walk_agrees_with_engine_on_g2() {
        let g2 = ExchangeMatrix::from_i64(&[[0, 3], [-1, 0]]).unwrap();
        for w in words_up_to_depth(2, 8) {
            let trop = tropical_y_walk(&g2, &w).unwrap();
            let engine = walk_matrices(&g2, &w).unwrap();
            assert_eq!(trop, engine.c, "word {w}");
        }
    }

    #[test]
    fn symbolic_walk_first_step_on_a2() {
        let seed = symbolic_walk(&a2(), &word(&[1])).unwrap();
        let nv = 4;
        let x = |i: usize| RatFn::var(nv, i);
        let y = |i: usize| RatFn::var(nv, 2 + i);
        let one = RatFn::one(nv);
        // x'_1 = (y_1 + x_2) / ((y_1 + 1) x_1)
        let expected = y(1).add(&x(2)).div(&y(1).add(&one).mul(&x(1)));
        assert_eq!(seed.x[0], expected);
        assert_eq!(seed.x[1], x(2));
        // y'_1 = 1/y_1, y'_2 = y_1 y_2 / (y_1 + 1)
        assert_eq!(seed.y[0], y(1).inv());
        assert_eq!(seed.y[1], y(1).mul(&y(2)).div(&y(1).add(&one)));
    }

    #[test]
    fn symbolic_mutation_is_involutive() {
        let b = ExchangeMatrix::from_i64(&[[0, 2], [-1, 0]]).unwrap();
        let seed = SymbolicSeed::initial(&b);
        for k in 1..=2 {
            let back = seed.mutate(k).unwrap().mutate(k).unwrap();
            assert_eq!(back.b_t, seed.b_t);
            assert_eq!(back.x, seed.x);
            assert_eq!(back.y, seed.y);
        }
    }

    #[test]
    fn separation_check_trivial_and_first_step() {
        let b = a2();
        let empty = MutationWord::empty();
        let report = separation_check(&b, &walk(&b, &empty).unwrap(), &symbolic_walk(&b, &empty).unwrap());
        assert!(report.all_pass());

        let w = word(&[1]);
        let report = separation_check(&b, &walk(&b, &w).unwrap(), &symbolic_walk(&b, &w).unwrap());
        assert!(report.all_pass(), "{:?}", report.results);
    }

    #[test]
    fn separation_check_reports_mismatches() {
        // Feed the check a point from the wrong word: it must fail with a witness.
        let b = a2();
        let point = walk(&b, &word(&[1])).unwrap();
        let sym = symbolic_walk(&b, &word(&[2])).unwrap();
        let report = separation_check(&b, &point, &sym);
        assert!(!report.all_pass());
        assert!(report.results.iter().any(|r| r.mismatch.is_some()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn tropical_walk_matches_engine_c(
            upper in proptest::collection::vec(-2i64..=2, 3),
            raw_word in proptest::collection::vec(0usize..3, 0..6),
        ) {
            let rows = vec![
                vec![0, upper[0], upper[1]],
                vec![-upper[0], 0, upper[2]],
                vec![-upper[1], -upper[2], 0],
            ];
            let entries: Vec<Vec<BigInt>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            let b = ExchangeMatrix::new(IntMat::from_rows(entries)).unwrap();
            let mut dirs = Vec::new();
            for r in raw_word {
                let d = r + 1;
                if dirs.last() != Some(&d) {
                    dirs.push(d);
                }
            }
            let w = MutationWord::new(dirs).unwrap();
            prop_assert_eq!(tropical_y_walk(&b, &w).unwrap(), walk_matrices(&b, &w).unwrap().c);
        }
    }
}
