//! Reduced fractions of multivariate integer polynomials. Every operation
//! reduces eagerly through the multivariate gcd and normalizes the sign so
//! the denominator's leading coefficient is positive; equality is decided by
//! cross-multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::gcd::poly_gcd;
use crate::poly::SparsePoly;

/// An exact rational function `num / den` in canonical reduced form.
#[derive(Debug, Clone)]
pub struct RatFn {
    num: SparsePoly,
    den: SparsePoly,
}

impl RatFn {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        RatFn { num, den }.reduced()
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        let n = p.nvars();
        RatFn { num: p, den: SparsePoly::one(n) }
    }

    pub fn one(nvars: usize) -> Self {
        RatFn::from_poly(SparsePoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        RatFn::from_poly(SparsePoly::constant(nvars, c))
    }

    /// The variable with 1-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        RatFn::from_poly(SparsePoly::var(nvars, i))
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den = SparsePoly::one(self.den.nvars());
            return self;
        }
        let g = poly_gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        self.fix_sign();
        self
    }

    fn fix_sign(&mut self) {
        if let Some((_, c)) = self.den.leading_term() {
            if c.is_negative() {
                self.num = self.num.neg();
                self.den = self.den.neg();
            }
        }
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> &SparsePoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        // Combine over the least common denominator. Both inputs are
        // reduced, so every common factor of the combined numerator and
        // denominator divides g = gcd(den_a, den_b); reducing against g
        // avoids a gcd of the full product.
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return RatFn { num, den: SparsePoly::one(self.nvars()) };
            }
            let mut out = RatFn { num, den: self.den.mul(&other.den) };
            out.fix_sign();
            return out;
        }
        let left = other.den.exact_div(&g).expect("gcd divides");
        let right = self.den.exact_div(&g).expect("gcd divides");
        let t = self.num.mul(&left).add(&other.num.mul(&right));
        if t.is_zero() {
            return RatFn { num: t, den: SparsePoly::one(self.nvars()) };
        }
        let g2 = poly_gcd(&t, &g);
        let num = t.exact_div(&g2).expect("gcd divides");
        let den = right.mul(&g.exact_div(&g2).expect("gcd divides")).mul(&left);
        let mut out = RatFn { num, den };
        out.fix_sign();
        out
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        // Cross-reduce before multiplying so intermediates stay small.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let num = self
            .num
            .exact_div(&g1)
            .expect("gcd divides")
            .mul(&other.num.exact_div(&g2).expect("gcd divides"));
        let den = self
            .den
            .exact_div(&g2)
            .expect("gcd divides")
            .mul(&other.den.exact_div(&g1).expect("gcd divides"));
        let mut out = RatFn { num, den };
        out.fix_sign();
        out
    }

    pub fn inv(&self) -> RatFn {
        assert!(!self.num.is_zero(), "cannot invert zero");
        let mut out = RatFn { num: self.den.clone(), den: self.num.clone() };
        out.fix_sign();
        out
    }

    pub fn div(&self, other: &RatFn) -> RatFn {
        self.mul(&other.inv())
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> RatFn {
        if e == 0 {
            return RatFn::one(self.nvars());
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let e = e.unsigned_abs();
        // num and den are coprime, so powers stay reduced.
        let mut out = RatFn { num: base.num.pow(e), den: base.den.pow(e) };
        out.fix_sign();
        out
    }
}

/// Mathematical equality by cross-multiplication.
impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFn {}

impl RatFn {
    /// Renders the fraction with a custom variable namer.
    pub fn format_with(&self, name: impl Fn(usize) -> String + Copy) -> String {
        if self.den.is_one() {
            self.num.format_with(name)
        } else {
            format!("({}) / ({})", self.num.format_with(name), self.den.format_with(name))
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|v| format!("u{v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: usize) -> SparsePoly {
        SparsePoly::var(2, i)
    }

    fn one2() -> SparsePoly {
        SparsePoly::one(2)
    }

    #[test]
    fn construction_reduces_and_fixes_sign() {
        let r = RatFn::new(u(1).pow(2).sub(&one2()), u(1).sub(&one2()));
        assert_eq!(r.numerator(), &u(1).add(&one2()));
        assert!(r.denominator().is_one());

        // Denominator leading coefficient is forced positive.
        let r = RatFn::new(u(1), u(2).neg());
        assert_eq!(r.numerator(), &u(1).neg());
        assert_eq!(r.denominator(), &u(2));
    }

    #[test]
    fn field_identities() {
        let r = RatFn::new(u(1).add(&one2()), u(2));
        assert!(r.mul(&r.inv()).is_one());
        assert!(r.sub(&r).is_zero());
        assert_eq!(r.pow(-2), r.inv().mul(&r.inv()));
        assert_eq!(r.add(&r), r.mul(&RatFn::constant(2, BigInt::from(2))));
        assert!(r.pow(0).is_one());
    }

    #[test]
    fn equality_is_cross_multiplicative() {
        let a = RatFn::new(u(1).mul(&u(2)), u(2).pow(2));
        let b = RatFn::new(u(1), u(2));
        assert_eq!(a, b);
        assert_ne!(b, RatFn::var(2, 1));
    }

    #[test]
    fn add_over_common_denominator() {
        // 1/(u1+1) + u1/(u1+1) = 1.
        let den = u(1).add(&one2());
        let a = RatFn::new(one2(), den.clone());
        let b = RatFn::new(u(1), den);
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn zero_handling() {
        let z = RatFn::new(SparsePoly::zero(2), u(1));
        assert!(z.is_zero());
        assert!(z.denominator().is_one());
        let r = RatFn::var(2, 2);
        assert_eq!(r.add(&z), r);
    }
}
