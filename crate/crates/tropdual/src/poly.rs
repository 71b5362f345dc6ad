//! Exact sparse multivariate polynomials in `u_1..u_n` over arbitrary-precision
//! integers, the F-polynomial mutation step, and the structural checks on
//! F-polynomials (constant term 1, dominating top monomial).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::matrix::{bigint_from_json, ExchangeMatrix, IntMat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("polynomial division by zero")]
    DivisionByZero,
}

/// Exponent vector ordered by total degree, then lexicographically.
/// This is the display order; `SparsePoly` keeps terms sorted by it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mono(Vec<u32>);

impl Mono {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact integer coefficients in
/// canonical form: no zero coefficients are ever stored, so structural
/// equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Mono, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.insert_term(vec![0; nvars], c);
        p
    }

    /// The variable `u_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable index {i} out of range");
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        SparsePoly::monomial(&exps, BigInt::one())
    }

    pub fn monomial(exps: &[u32], coeff: BigInt) -> Self {
        let mut p = SparsePoly::zero(exps.len());
        p.insert_term(exps.to_vec(), coeff);
        p
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(Mono(exps)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.degree() == 0 && c.is_one())
                .unwrap_or(false)
    }

    /// Terms in ascending display order (total degree, then lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Coefficient of the given exponent vector; zero if absent.
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&Mono(exps.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    /// Leading term under the display order.
    fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Leading exponent vector and coefficient under the display order.
    pub fn leading_term(&self) -> Option<(&[u32], &BigInt)> {
        self.leading().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn total_degree(&self) -> u64 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn max_exponent(&self, var: usize) -> u32 {
        assert!((1..=self.nvars).contains(&var));
        self.terms.keys().map(|m| m.0[var - 1]).max().unwrap_or(0)
    }

    /// True iff every term carries a positive exponent of `u_var`,
    /// i.e. the polynomial is divisible by that variable.
    pub fn divisible_by_var(&self, var: usize) -> bool {
        assert!((1..=self.nvars).contains(&var));
        !self.is_zero() && self.terms.keys().all(|m| m.0[var - 1] > 0)
    }

    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.0.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = SparsePoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma
                    .0
                    .iter()
                    .zip(&mb.0)
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = SparsePoly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division: returns `r` with `q * r = self`, or `NotDivisible`.
    /// Division of F-polynomial numerators is exact on every reachable state,
    /// so a failure here signals corrupted state, not bad input.
    pub fn exact_div(&self, q: &SparsePoly) -> Result<SparsePoly, PolyError> {
        assert_eq!(self.nvars, q.nvars, "variable count mismatch");
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (qm, qc) = q.leading().expect("nonzero divisor has a leading term");
        let (qm, qc) = (qm.clone(), qc.clone());
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero remainder has a leading term");
            let mut exps = Vec::with_capacity(self.nvars);
            for (&a, &b) in rm.0.iter().zip(&qm.0) {
                if a < b {
                    return Err(PolyError::NotDivisible);
                }
                exps.push(a - b);
            }
            let (c, r) = num_integer::div_rem(rc.clone(), qc.clone());
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let t = SparsePoly::monomial(&exps, c);
            rem = rem.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Value after setting every variable to 1, i.e. the coefficient sum.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Reinterprets the polynomial in a larger variable ring, sending
    /// variable `v` to `v + offset` (0-based shift).
    pub fn embed(&self, new_nvars: usize, offset: usize) -> SparsePoly {
        assert!(offset + self.nvars <= new_nvars, "embedding out of range");
        let mut out = SparsePoly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            exps[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.insert_term(exps, c.clone());
        }
        out
    }
}

impl SparsePoly {
    /// Renders the polynomial in descending display order with a custom
    /// variable namer (1-based variable index).
    pub fn format_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut wrote_factor = false;
            if !abs.is_one() || m.degree() == 0 {
                out.push_str(&abs.to_string());
                wrote_factor = true;
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    out.push('*');
                }
                out.push_str(&name(v + 1));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
                wrote_factor = true;
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|v| format!("u{v}")))
    }
}

// JSON form: a list of {"coeff": <decimal string>, "exp": [e_1..e_n]},
// sorted by descending display order. Coefficients are strings because they
// outgrow every fixed-width JSON number type; inputs accept plain integers
// too.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            exp: &'a [u32],
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&Term { coeff: c.to_string(), exp: &m.0 })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            coeff: serde_json::Value,
            exp: Vec<u32>,
        }
        let raw = Vec::<Term>::deserialize(deserializer)?;
        let nvars = raw.first().map(|t| t.exp.len()).unwrap_or(0);
        let mut p = SparsePoly::zero(nvars);
        for t in raw {
            if t.exp.len() != nvars {
                return Err(serde::de::Error::custom("inconsistent exponent lengths"));
            }
            let c = bigint_from_json(&t.coeff)
                .ok_or_else(|| serde::de::Error::custom("coefficient is not an integer"))?;
            p.insert_term(t.exp, c);
        }
        Ok(p)
    }
}

fn positive_part_u32(v: &BigInt) -> u32 {
    if v.is_positive() {
        v.to_u32().expect("exponent exceeds u32")
    } else {
        0
    }
}

/// One F-polynomial mutation step in direction `l` (1-based), from the
/// C-matrix and exchange matrix at the same vertex:
///
/// ```text
/// F'_l = ( prod_i u_i^{[c_il]+} prod_i F_i^{[b_il]+}
///        + prod_i u_i^{[-c_il]+} prod_i F_i^{[-b_il]+} ) / F_l
/// ```
///
/// with the division required to be exact.
pub fn f_step(
    f: &[SparsePoly],
    c: &IntMat,
    b_t: &ExchangeMatrix,
    l: usize,
) -> Result<Vec<SparsePoly>, PolyError> {
    let n = b_t.size();
    assert_eq!(f.len(), n, "expected {n} F-polynomials");
    assert_eq!((c.rows(), c.cols()), (n, n), "C-matrix shape mismatch");
    assert!((1..=n).contains(&l), "direction {l} out of range");

    let mut pos_exps = vec![0u32; n];
    let mut neg_exps = vec![0u32; n];
    for i in 1..=n {
        let cil = c.entry(i, l);
        pos_exps[i - 1] = positive_part_u32(cil);
        neg_exps[i - 1] = positive_part_u32(&-cil);
    }
    let mut first = SparsePoly::monomial(&pos_exps, BigInt::one());
    let mut second = SparsePoly::monomial(&neg_exps, BigInt::one());
    for i in 1..=n {
        let bil = b_t.entry(i, l);
        let up = positive_part_u32(bil);
        if up > 0 {
            first = first.mul(&f[i - 1].pow(u64::from(up)));
        }
        let down = positive_part_u32(&-bil);
        if down > 0 {
            second = second.mul(&f[i - 1].pow(u64::from(down)));
        }
    }
    let new_fl = first.add(&second).exact_div(&f[l - 1])?;
    let mut out = f.to_vec();
    out[l - 1] = new_fl;
    Ok(out)
}

/// Structural facts about a single F-polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FAnalysis {
    /// The zero exponent vector carries coefficient exactly 1.
    pub constant_term_one: bool,
    /// Some monomial with coefficient 1 dominates (componentwise >=) every
    /// occurring exponent vector; equivalently the componentwise maximum of
    /// the exponents occurs with coefficient 1.
    pub unique_max_monomial: bool,
}

pub fn analyze_f(f: &SparsePoly) -> FAnalysis {
    assert!(!f.is_zero(), "analyze_f requires a nonzero polynomial");
    let constant_term_one = f.constant_term().is_one();
    let n = f.nvars();
    let mut envelope = vec![0u32; n];
    for (exps, _) in f.terms() {
        for (e, v) in envelope.iter_mut().zip(exps) {
            *e = (*e).max(*v);
        }
    }
    let unique_max_monomial = f.coeff(&envelope).is_one();
    FAnalysis { constant_term_one, unique_max_monomial }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(i: usize) -> SparsePoly {
        SparsePoly::var(2, i)
    }

    #[test]
    fn ring_op_examples() {
        let p = u(1).add(&SparsePoly::one(2));
        assert_eq!(p.mul(&SparsePoly::one(2)), p);
        assert!(p.add(&p.neg()).is_zero());
        let sq = p.pow(2);
        assert_eq!(sq.coeff(&[2, 0]), BigInt::from(1));
        assert_eq!(sq.coeff(&[1, 0]), BigInt::from(2));
        assert_eq!(sq.constant_term(), BigInt::from(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn exact_div_examples() {
        let p = u(1).pow(2).sub(&SparsePoly::one(2));
        let q = u(1).sub(&SparsePoly::one(2));
        assert_eq!(p.exact_div(&q).unwrap(), u(1).add(&SparsePoly::one(2)));

        let any = u(1).add(&u(2));
        assert_eq!(any.exact_div(&SparsePoly::one(2)).unwrap(), any);

        let p = u(1).add(&SparsePoly::one(2));
        let q = u(2).add(&SparsePoly::one(2));
        assert_eq!(p.exact_div(&q), Err(PolyError::NotDivisible));
        assert_eq!(p.exact_div(&SparsePoly::zero(2)), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn coefficient_divisibility_is_checked() {
        let p = SparsePoly::constant(1, BigInt::from(3));
        let q = SparsePoly::constant(1, BigInt::from(2));
        assert_eq!(p.exact_div(&q), Err(PolyError::NotDivisible));
    }

    #[test]
    fn f_step_first_two_a2_steps() {
        let b = ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap();
        let ones = vec![SparsePoly::one(2), SparsePoly::one(2)];
        let c = IntMat::identity(2);
        let f1 = f_step(&ones, &c, &b, 1).unwrap();
        assert_eq!(f1[0], u(1).add(&SparsePoly::one(2)));
        assert!(f1[1].is_one());

        // Continue in direction 2 with the mutated data.
        let c1 = IntMat::from_i64(&[[-1, 1], [0, 1]]);
        let b1 = ExchangeMatrix::from_i64(&[[0, -1], [1, 0]]).unwrap();
        let f2 = f_step(&f1, &c1, &b1, 2).unwrap();
        let expected = u(1).mul(&u(2)).add(&u(1)).add(&SparsePoly::one(2));
        assert_eq!(f2[1], expected);
        assert_eq!(f2[0], f1[0]);
    }

    #[test]
    fn f_step_requires_division_on_deeper_words() {
        // Third step of the alternating A2 word: (u1u2+u1+u2+1)/(u1+1) = u2+1.
        let f = vec![
            u(1).add(&SparsePoly::one(2)),
            u(1).mul(&u(2)).add(&u(1)).add(&SparsePoly::one(2)),
        ];
        let c = IntMat::from_i64(&[[0, -1], [1, -1]]);
        let b = ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap();
        let f3 = f_step(&f, &c, &b, 1).unwrap();
        assert_eq!(f3[0], u(2).add(&SparsePoly::one(2)));
    }

    #[test]
    fn analyze_examples() {
        let p = u(1).mul(&u(2)).add(&u(1)).add(&SparsePoly::one(2));
        assert_eq!(analyze_f(&p), FAnalysis { constant_term_one: true, unique_max_monomial: true });

        assert_eq!(
            analyze_f(&SparsePoly::one(2)),
            FAnalysis { constant_term_one: true, unique_max_monomial: true }
        );

        let p = u(1).add(&u(2));
        assert_eq!(
            analyze_f(&p),
            FAnalysis { constant_term_one: false, unique_max_monomial: false }
        );
    }

    #[test]
    fn display_and_json_use_descending_graded_order() {
        let p = u(1).mul(&u(2)).add(&u(1)).add(&SparsePoly::one(2));
        assert_eq!(p.to_string(), "u1*u2 + u1 + 1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1","exp":[1,1]},{"coeff":"1","exp":[1,0]},{"coeff":"1","exp":[0,0]}]"#
        );
        let back: SparsePoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        // Plain-integer coefficients are accepted on input.
        let lenient: SparsePoly = serde_json::from_str(r#"[{"coeff":2,"exp":[1,0]}]"#).unwrap();
        assert_eq!(lenient, u(1).scale(&BigInt::from(2)));
    }

    fn small_poly() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|terms| {
            let mut p = SparsePoly::zero(2);
            for ((e1, e2), c) in terms {
                p = p.add(&SparsePoly::monomial(&[e1, e2], BigInt::from(c)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn mul_distributes_over_add(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(p.add(&q).mul(&r), p.mul(&r).add(&q.mul(&r)));
        }

        #[test]
        fn exact_div_inverts_mul(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!(p.mul(&q).exact_div(&q).unwrap(), p);
        }
    }
}
