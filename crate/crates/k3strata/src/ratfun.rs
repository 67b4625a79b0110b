//! Exact univariate polynomials and rational functions in the indeterminate `p`.
//!
//! All coefficients are big rationals; there is no floating point anywhere.
//! Polynomials are stored as ascending coefficient vectors with no trailing
//! zeros. Rational functions keep a monic denominator and are reduced by gcd
//! eagerly, so equality is structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Polynomial in `p` with exact rational coefficients, ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyP {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PolyP {
    pub fn zero() -> Self {
        PolyP { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyP::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = PolyP { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn constant_i64(c: i64) -> Self {
        PolyP::constant(rat(c))
    }

    /// `c * p^k`
    pub fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return PolyP::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        PolyP { coeffs }
    }

    /// `p^k`
    pub fn var_pow(k: usize) -> Self {
        PolyP::monomial(k, rat(1))
    }

    /// `p^k - 1`
    pub fn pk_minus_one(k: usize) -> Self {
        &PolyP::var_pow(k) - &PolyP::one()
    }

    /// `p^k + 1`
    pub fn pk_plus_one(k: usize) -> Self {
        &PolyP::var_pow(k) + &PolyP::one()
    }

    /// Geometric sum `1 + p + ... + p^{t-1}` (zero when `t == 0`).
    pub fn geometric(t: usize) -> Self {
        let mut coeffs = vec![BigRational::one(); t];
        if t == 0 {
            coeffs.clear();
        }
        let mut p = PolyP { coeffs };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = PolyP { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return PolyP::zero();
        }
        PolyP::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = PolyP::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `p -> p^k` (coefficient inflation).
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        if self.is_zero() {
            return PolyP::zero();
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        PolyP::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Division with remainder; panics on zero divisor.
    pub fn div_rem(&self, d: &PolyP) -> (PolyP, PolyP) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            q[shift] = f.clone();
            let sub = d.scale(&f);
            let mut sc = vec![BigRational::zero(); shift];
            sc.extend(sub.coeffs.iter().cloned());
            rem = &rem - &PolyP::from_coeffs(sc);
        }
        (PolyP::from_coeffs(q), rem)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &PolyP) -> Option<PolyP> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &PolyP) -> PolyP {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic();
        a
    }

    fn make_monic(&mut self) {
        if let Some(l) = self.leading().cloned() {
            if !l.is_one() {
                for c in &mut self.coeffs {
                    *c = &*c / &l;
                }
            }
        }
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients rendered as `num/den` strings (ascending), for JSON.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    format!("{}", c.numer())
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }
}

impl fmt::Debug for PolyP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                if abs.denom().is_one() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "p")?;
                } else {
                    write!(f, "p^{k}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b PolyP> for &'a PolyP {
            type Output = PolyP;
            fn $method(self, rhs: &'b PolyP) -> PolyP {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut coeffs = Vec::with_capacity(n);
                for k in 0..n {
                    coeffs.push(self.coeff(k) $op rhs.coeff(k));
                }
                PolyP::from_coeffs(coeffs)
            }
        }
    };
}

poly_binop!(Add, add, +);
poly_binop!(Sub, sub, -);

impl<'a, 'b> Mul<&'b PolyP> for &'a PolyP {
    type Output = PolyP;
    fn mul(self, rhs: &'b PolyP) -> PolyP {
        if self.is_zero() || rhs.is_zero() {
            return PolyP::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PolyP::from_coeffs(coeffs)
    }
}

impl Neg for &PolyP {
    type Output = PolyP;
    fn neg(self) -> PolyP {
        PolyP::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Rational function in `p`: reduced fraction with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatP {
    num: PolyP,
    den: PolyP,
}

impl RatP {
    pub fn new(num: PolyP, den: PolyP) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatP { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: PolyP) -> Self {
        RatP { num: p, den: PolyP::one() }
    }

    pub fn zero() -> Self {
        RatP::from_poly(PolyP::zero())
    }

    pub fn one() -> Self {
        RatP::from_poly(PolyP::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatP::from_poly(PolyP::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PolyP::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        // monic denominator
        let l = self.den.leading().unwrap().clone();
        if !l.is_one() {
            let inv = BigRational::one() / l;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn numerator(&self) -> &PolyP {
        &self.num
    }

    pub fn denominator(&self) -> &PolyP {
        &self.den
    }

    /// The value as a polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&PolyP> {
        if self.den == PolyP::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatP::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatP::new(self.num.scale(c), self.den.clone())
    }
}

impl fmt::Display for RatP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyP::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a, 'b> Add<&'b RatP> for &'a RatP {
    type Output = RatP;
    fn add(self, rhs: &'b RatP) -> RatP {
        RatP::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a, 'b> Sub<&'b RatP> for &'a RatP {
    type Output = RatP;
    fn sub(self, rhs: &'b RatP) -> RatP {
        RatP::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a, 'b> Mul<&'b RatP> for &'a RatP {
    type Output = RatP;
    fn mul(self, rhs: &'b RatP) -> RatP {
        RatP::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, 'b> Div<&'b RatP> for &'a RatP {
    type Output = RatP;
    fn div(self, rhs: &'b RatP) -> RatP {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatP::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatP {
    type Output = RatP;
    fn neg(self) -> RatP {
        RatP { num: -&self.num, den: self.den.clone() }
    }
}

/// Gaussian binomial `[n k]_q` as a polynomial in `q`.
///
/// Computed by the Pascal recurrence, so no division is involved.
pub fn gaussian_binomial(n: usize, k: usize) -> PolyP {
    if k > n {
        return PolyP::zero();
    }
    // row-by-row DP over [i j]_q
    let mut row: Vec<PolyP> = vec![PolyP::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            if j == 0 || j == i {
                next.push(PolyP::one());
            } else {
                // [i j] = [i-1 j-1] + q^j [i-1 j]
                let a = &row[j - 1];
                let b = &PolyP::var_pow(j) * &row[j];
                next.push(a + &b);
            }
        }
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_and_factors() {
        // (p - 1)(1 + p + p^2) = p^3 - 1
        let g = PolyP::geometric(3);
        let f = PolyP::pk_minus_one(1);
        assert_eq!(&g * &f, PolyP::pk_minus_one(3));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = PolyP::pk_minus_one(4);
        assert!(a.exact_div(&PolyP::pk_minus_one(2)).is_some());
        assert!(a.exact_div(&PolyP::pk_minus_one(3)).is_none());
    }

    #[test]
    fn ratp_reduces_to_polynomial() {
        // (p^4 - 1)/(p + 1) = p^3 - p^2 + p - 1
        let r = RatP::new(PolyP::pk_minus_one(4), PolyP::pk_plus_one(1));
        let p = r.as_polynomial().expect("should reduce");
        let expect = PolyP::from_coeffs(vec![rat(-1), rat(1), rat(-1), rat(1)]);
        assert_eq!(*p, expect);
    }

    #[test]
    fn gaussian_small_values() {
        assert_eq!(gaussian_binomial(2, 1), PolyP::pk_plus_one(1));
        assert_eq!(gaussian_binomial(4, 2).eval_u64(1), rat(6));
        // [n 0] = 1
        assert_eq!(gaussian_binomial(7, 0), PolyP::one());
        // [n k] = [n n-k]
        assert_eq!(gaussian_binomial(5, 2), gaussian_binomial(5, 3));
    }

    fn arb_poly() -> impl Strategy<Value = PolyP> {
        proptest::collection::vec(-9i64..10, 0..6)
            .prop_map(|v| PolyP::from_coeffs(v.into_iter().map(rat).collect()))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
        }

        #[test]
        fn ratp_field_identities(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let x = RatP::new(a, b);
            prop_assert_eq!(&x * &x.inv(), RatP::one());
            prop_assert_eq!(&x - &x, RatP::zero());
        }
    }
}
