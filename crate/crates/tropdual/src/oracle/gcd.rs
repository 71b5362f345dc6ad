//! Multivariate polynomial gcd over the integers, used to keep rational
//! functions reduced after every operation. Recursive primitive
//! pseudo-remainder sequences in the highest variable present, with fast
//! paths for constants and monomials.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::poly::SparsePoly;

/// Greatest common divisor, normalized so the leading coefficient under the
/// display order is positive. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return monomial_gcd(a, b);
    }
    // Mutation recurrences constantly produce fractions whose parts divide
    // one another exactly; trial division is far cheaper than a remainder
    // sequence there.
    if b.exact_div(a).is_ok() {
        return normalize_sign(a.clone());
    }
    if a.exact_div(b).is_ok() {
        return normalize_sign(b.clone());
    }
    match (max_var_present(a), max_var_present(b)) {
        (None, None) => {
            let g = num_integer::gcd(a.constant_term(), b.constant_term());
            SparsePoly::constant(a.nvars(), g)
        }
        (None, Some(_)) => poly_gcd(a, &content_in_var(b, max_var_present(b).unwrap())),
        (Some(_), None) => poly_gcd(&content_in_var(a, max_var_present(a).unwrap()), b),
        (Some(va), Some(vb)) => {
            let v = va.max(vb);
            if va < v {
                // `a` is free of v; any common divisor is too.
                return poly_gcd(a, &content_in_var(b, v));
            }
            if vb < v {
                return poly_gcd(&content_in_var(a, v), b);
            }
            let ca = content_in_var(a, v);
            let cb = content_in_var(b, v);
            let pa = a.exact_div(&ca).expect("content divides");
            let pb = b.exact_div(&cb).expect("content divides");
            let cont = poly_gcd(&ca, &cb);
            let prim = subresultant_prs_gcd(pa, pb, v);
            normalize_sign(cont.mul(&prim))
        }
    }
}

fn normalize_sign(p: SparsePoly) -> SparsePoly {
    match p.leading_term() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p,
    }
}

/// Gcd when at least one operand is a single term: componentwise minimum
/// exponents against every term of the other operand, integer gcd of the
/// coefficients.
fn monomial_gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let (mono, other) = if a.num_terms() == 1 { (a, b) } else { (b, a) };
    let (mexps, mcoeff) = mono.leading_term().expect("nonzero");
    let mut exps = mexps.to_vec();
    let mut coeff = mcoeff.abs();
    for (e, c) in other.terms() {
        for (slot, &v) in exps.iter_mut().zip(e) {
            *slot = (*slot).min(v);
        }
        coeff = num_integer::gcd(coeff, c.abs());
        if coeff.is_one() && exps.iter().all(|&v| v == 0) {
            break;
        }
    }
    SparsePoly::monomial(&exps, coeff)
}

/// Highest 1-based variable with a positive exponent anywhere, if any.
fn max_var_present(p: &SparsePoly) -> Option<usize> {
    (1..=p.nvars()).rev().find(|&v| p.max_exponent(v) > 0)
}

/// Views `p` as univariate in variable `v`: dense coefficient list indexed
/// by the degree in `v`, each coefficient free of `v`.
fn univariate_in(p: &SparsePoly, v: usize) -> Vec<SparsePoly> {
    let deg = p.max_exponent(v) as usize;
    let mut coeffs = vec![SparsePoly::zero(p.nvars()); deg + 1];
    for (exps, c) in p.terms() {
        let k = exps[v - 1] as usize;
        let mut e = exps.to_vec();
        e[v - 1] = 0;
        coeffs[k] = coeffs[k].add(&SparsePoly::monomial(&e, c.clone()));
    }
    coeffs
}

/// Gcd of the univariate coefficients: the content of `p` with respect to `v`.
fn content_in_var(p: &SparsePoly, v: usize) -> SparsePoly {
    let mut cont = SparsePoly::zero(p.nvars());
    for c in univariate_in(p, v) {
        if !c.is_zero() {
            cont = poly_gcd(&cont, &c);
        }
        if cont.is_one() {
            break;
        }
    }
    cont
}

fn primitive_part(p: SparsePoly, v: usize) -> SparsePoly {
    if p.is_zero() {
        return p;
    }
    let cont = content_in_var(&p, v);
    p.exact_div(&cont).expect("content divides")
}

fn degree_in(coeffs: &[SparsePoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Canonical pseudo-remainder `lc(g)^{deg f - deg g + 1} f mod g` in the
/// variable `v` (both viewed as univariate in `v`, `deg f >= deg g >= 1`).
/// The full power of the leading coefficient is restored even when the
/// degree drops by more than one, as the subresultant divisors require.
fn pseudo_rem(f: &SparsePoly, g: &SparsePoly, v: usize) -> SparsePoly {
    let gu = univariate_in(g, v);
    let m = degree_in(&gu).expect("nonzero divisor");
    let lg = gu[m].clone();
    let mut ru = univariate_in(f, v);
    let delta = degree_in(&ru).expect("nonzero dividend") - m;
    let mut rounds = 0u32;
    while let Some(d) = degree_in(&ru) {
        if d < m {
            break;
        }
        rounds += 1;
        let lr = ru[d].clone();
        // r := lg * r - lr * X^{d-m} * g
        for item in ru.iter_mut() {
            *item = item.mul(&lg);
        }
        for (i, gi) in gu.iter().enumerate() {
            let idx = i + d - m;
            ru[idx] = ru[idx].sub(&lr.mul(gi));
        }
        debug_assert!(ru[d].is_zero(), "leading term must cancel");
    }
    let missing = (delta as u32 + 1).saturating_sub(rounds);
    if missing > 0 {
        let scale = pow_poly(&lg, missing);
        for item in ru.iter_mut() {
            *item = item.mul(&scale);
        }
    }
    let nvars = f.nvars();
    let mut out = SparsePoly::zero(nvars);
    for (k, c) in ru.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut shift = vec![0u32; nvars];
        shift[v - 1] = u32::try_from(k).expect("degree fits u32");
        out = out.add(&c.mul(&SparsePoly::monomial(&shift, BigInt::one())));
    }
    out
}

/// Leading coefficient with respect to `v` (a polynomial in the other
/// variables).
fn leading_coeff_in(p: &SparsePoly, v: usize) -> SparsePoly {
    let coeffs = univariate_in(p, v);
    coeffs.last().expect("nonzero polynomial").clone()
}

/// Subresultant pseudo-remainder sequence on two polynomials primitive with
/// respect to `v`; returns their gcd, primitive with respect to `v`.
/// Subresultant divisors keep coefficient growth polynomial without the
/// content computations a primitive sequence needs at every step.
fn subresultant_prs_gcd(a: SparsePoly, b: SparsePoly, v: usize) -> SparsePoly {
    let nvars = a.nvars();
    let (mut p, mut q) = if a.max_exponent(v) >= b.max_exponent(v) { (a, b) } else { (b, a) };
    if q.max_exponent(v) == 0 {
        // A primitive polynomial of degree 0 in v is a unit up to sign.
        return SparsePoly::one(nvars);
    }
    let mut g = SparsePoly::one(nvars);
    let mut h = SparsePoly::one(nvars);
    loop {
        let delta = p.max_exponent(v) - q.max_exponent(v);
        let r = pseudo_rem(&p, &q, v);
        if r.is_zero() {
            return primitive_part(q, v);
        }
        let divisor = g.mul(&pow_poly(&h, delta));
        p = q;
        q = r.exact_div(&divisor).expect("subresultant divisor is exact");
        if q.max_exponent(v) == 0 {
            return SparsePoly::one(nvars);
        }
        g = leading_coeff_in(&p, v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => pow_poly(&g, d).exact_div(&pow_poly(&h, d - 1)).expect("subresultant h is exact"),
        };
    }
}

fn pow_poly(p: &SparsePoly, e: u32) -> SparsePoly {
    p.pow(u64::from(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: usize) -> SparsePoly {
        SparsePoly::var(2, i)
    }

    fn c2(v: i64) -> SparsePoly {
        SparsePoly::constant(2, BigInt::from(v))
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let p = u(1).pow(2).sub(&u(2).pow(2));
        let q = u(1).add(&u(2)).pow(2);
        assert_eq!(poly_gcd(&p, &q), u(1).add(&u(2)));
    }

    #[test]
    fn gcd_includes_integer_content() {
        let p = u(1).add(&c2(1)).scale(&BigInt::from(2));
        let q = u(1).add(&c2(1)).scale(&BigInt::from(4));
        assert_eq!(poly_gcd(&p, &q), u(1).add(&c2(1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let p = u(1).add(&c2(1));
        let q = u(2).add(&c2(1));
        assert!(poly_gcd(&p, &q).is_one());
        assert!(poly_gcd(&p, &u(1).add(&c2(2))).is_one());
    }

    #[test]
    fn gcd_handles_monomials_and_zero() {
        let m = SparsePoly::monomial(&[1, 0], BigInt::from(-2));
        let p = u(1).pow(2).mul(&c2(4)).add(&u(1).mul(&u(2)).mul(&c2(6)));
        assert_eq!(poly_gcd(&m, &p), SparsePoly::monomial(&[1, 0], BigInt::from(2)));
        assert_eq!(poly_gcd(&p, &SparsePoly::zero(2)), normalize_sign(p.clone()));
        assert!(poly_gcd(&SparsePoly::zero(2), &SparsePoly::zero(2)).is_zero());
    }

    #[test]
    fn gcd_is_sign_normalized() {
        let p = u(1).neg().add(&c2(-1)); // -(u1 + 1)
        let q = u(1).add(&c2(1)).mul(&u(2).add(&c2(1)));
        let g = poly_gcd(&p, &q);
        assert_eq!(g, u(1).add(&c2(1)));
    }

    #[test]
    fn gcd_of_structured_products() {
        // (u1+1)^2 (u2+2) and (u1+1)(u2+2)^2 share (u1+1)(u2+2).
        let a = u(1).add(&c2(1)).pow(2).mul(&u(2).add(&c2(2)));
        let b = u(1).add(&c2(1)).mul(&u(2).add(&c2(2)).pow(2));
        let g = poly_gcd(&a, &b);
        assert_eq!(g, u(1).add(&c2(1)).mul(&u(2).add(&c2(2))));
        assert!(a.exact_div(&g).is_ok());
        assert!(b.exact_div(&g).is_ok());
    }

    #[test]
    fn gcd_in_three_variables() {
        let v = |i| SparsePoly::var(3, i);
        let one = SparsePoly::one(3);
        let common = v(1).mul(&v(2)).add(&v(3)).add(&one);
        let a = common.mul(&v(1).add(&v(3)));
        let b = common.mul(&v(2).sub(&v(3)).add(&one));
        assert_eq!(poly_gcd(&a, &b), common);
    }
}
