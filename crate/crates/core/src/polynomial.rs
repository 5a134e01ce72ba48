//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients. `coeffs[i]` is the coefficient of `x^i`; the vector is kept
//! normalized (no trailing zeros), so the zero polynomial is empty.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of a unimodality test. `mode` is the first index of a maximal
/// coefficient, which is a valid mode whenever the sequence is unimodal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unimodality {
    pub unimodal: bool,
    pub mode: usize,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `(x + 1)^k`, built from the multiplicative binomial recurrence.
    pub fn binomial_shift(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for i in 1..=k {
            c = c * BigInt::from(k + 1 - i) / BigInt::from(i);
            coeffs.push(c.clone());
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_degree(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)
    }

    /// Splits off the largest power of `x`: returns `(k, q)` with `p = x^k q`.
    pub fn deflate_zero(&self) -> Result<(usize, Polynomial)> {
        let k = self.lowest_degree()?;
        Ok((
            k,
            Polynomial {
                coeffs: self.coeffs[k..].to_vec(),
            },
        ))
    }

    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(x + c)`, exact.
    pub fn taylor_shift(&self, c: &BigInt) -> Self {
        // Horner in the shifted basis: p(x + c) = (..(a_d (x+c) + a_{d-1})(x+c) ..).
        let mut acc = Polynomial::zero();
        let linear = Polynomial::new(vec![c.clone(), BigInt::one()]);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &Polynomial::constant(a.clone());
        }
        acc
    }

    pub fn eval_int(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_rational(&self, z: &BigRational) -> BigRational {
        // Homogenised Horner keeps the work in integers: with z = a/b,
        // b^d p(a/b) = sum c_i a^i b^(d-i).
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let (a, b) = (z.numer(), z.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        BigRational::new(acc, b.pow(d as u32))
    }

    /// Sign of `p(z)` for rational `z`, without forming the reduced fraction.
    pub fn sign_at(&self, z: &BigRational) -> Sign {
        let (a, b) = (z.numer(), z.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        // b > 0, so b^d does not change the sign.
        acc.sign()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + big_to_f64(c))
    }

    /// Unimodality of the full coefficient sequence `a_0, .., a_d`,
    /// including leading and interior zeros.
    pub fn is_unimodal(&self) -> Result<Unimodality> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        let mut j = i;
        while j + 1 < c.len() && c[j] >= c[j + 1] {
            j += 1;
        }
        let max = c.iter().max().expect("nonzero");
        let mode = c.iter().position(|a| a == max).expect("max exists");
        Ok(Unimodality {
            unimodal: j + 1 == c.len(),
            mode,
        })
    }

    /// Greatest common divisor of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading
    /// coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(divisor)^(deg self - deg divisor + 1) * self = q * divisor + r`.
    pub fn pseudo_divrem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(ds) = self.degree().filter(|&d| d >= dd) else {
            return (Polynomial::zero(), self.clone());
        };
        let lc = divisor.leading_coeff().expect("nonzero");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            // One step: r <- lc * r - r[k+dd] * x^k * divisor, q <- lc * q + r[k+dd] x^k.
            let t = r[k + dd].clone();
            for c in q.iter_mut() {
                *c *= lc;
            }
            q[k] += &t;
            for c in r.iter_mut() {
                *c *= lc;
            }
            if !t.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    r[k + i] -= &t * b;
                }
            }
        }
        (Polynomial::new(q), Polynomial::new(r))
    }

    /// Exact quotient `self / divisor` up to a nonzero constant factor,
    /// returned primitive. `divisor` must divide `self` over the rationals.
    pub fn exact_quotient_primitive(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.pseudo_divrem(divisor);
        debug_assert!(r.is_zero(), "divisor does not divide");
        q.primitive_part()
    }

    /// Primitive greatest common divisor over `Z[x]`, positive leading
    /// coefficient.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_divrem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Largest coefficient magnitude as a float (may be infinite).
    pub fn max_abs_coeff_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| big_to_f64(&c.abs()))
            .fold(0.0, f64::max)
    }
}

/// Nearest-ish `f64` for a big integer, `±inf` beyond range.
pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(match c.sign() {
        Sign::Minus => f64::NEG_INFINITY,
        _ => f64::INFINITY,
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Serialises a coefficient vector as a JSON array of decimal strings.
pub fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

pub fn deserialize_bigints<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let strings = Vec::<String>::deserialize(d)?;
    strings
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
        .collect()
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize_bigints(d).map(Polynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&p(&[0, 0, 1]) + &p(&[0, 0, -1])).is_zero());
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1]).pow(0), Polynomial::one());
        assert_eq!(p(&[1, 1]).pow(5), Polynomial::binomial_shift(5));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[3, 0, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn binomial_shift_values() {
        assert_eq!(Polynomial::binomial_shift(0), Polynomial::one());
        assert_eq!(Polynomial::binomial_shift(3), p(&[1, 3, 3, 1]));
        // Pascal's rule, computed independently of the multiplicative recurrence.
        let mut row = vec![1i64];
        for _ in 0..10 {
            let mut next = vec![1i64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        assert_eq!(Polynomial::binomial_shift(10), p(&row));
        assert_eq!(row[5], 252);
    }

    #[test]
    fn evaluation() {
        let x2 = p(&[0, 0, 1]);
        assert_eq!(x2.eval_int(&BigInt::from(-1)), BigInt::one());
        // (x+1)^2 - 2(x+1) + 1 = x^2
        let q = &(&Polynomial::binomial_shift(2) - &p(&[2, 2])) + &Polynomial::one();
        assert_eq!(q, x2);
        assert!(q.eval_int(&BigInt::zero()).is_zero());
        assert!(Polynomial::zero().eval_int(&BigInt::from(7)).is_zero());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            p(&[1, 3, 2]).eval_rational(&half),
            BigRational::from_integer(BigInt::from(3))
        );
        let z = p(&[0, 0, 1]).eval_complex(Complex64::new(0.0, 1.0));
        assert_eq!(z, Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn derivative_examples() {
        let k3 = p(&[0, 0, 3, 1]);
        assert_eq!(k3.derivative(), p(&[0, 6, 3]));
        assert!(p(&[7]).derivative().is_zero());
        // 3x(x + 2) vanishes at 0 and -2.
        let d = k3.derivative();
        assert!(d.eval_int(&BigInt::zero()).is_zero());
        assert!(d.eval_int(&BigInt::from(-2)).is_zero());
    }

    #[test]
    fn unimodality() {
        let u = p(&[0, 0, 3, 1]).is_unimodal().unwrap();
        assert_eq!(
            u,
            Unimodality {
                unimodal: true,
                mode: 2
            }
        );
        let f2 = p(&[0, 0, 4, 6, 5, 1]).is_unimodal().unwrap();
        assert_eq!(
            f2,
            Unimodality {
                unimodal: true,
                mode: 3
            }
        );
        assert!(!p(&[1, 0, 1]).is_unimodal().unwrap().unimodal);
        assert!(p(&[2, 2, 2]).is_unimodal().unwrap().unimodal);
        assert_eq!(Polynomial::zero().is_unimodal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn lowest_degree_and_deflation() {
        assert_eq!(p(&[0, 0, 3, 1]).lowest_degree().unwrap(), 2);
        assert_eq!(
            Polynomial::zero().lowest_degree(),
            Err(Error::ZeroPolynomial)
        );
        let (k, q) = p(&[0, 0, 3, 1]).deflate_zero().unwrap();
        assert_eq!((k, q), (2, p(&[3, 1])));
    }

    #[test]
    fn shifts_and_division() {
        // (x-1)^2 shifted by +1 is x^2.
        assert_eq!(p(&[1, -2, 1]).taylor_shift(&BigInt::one()), p(&[0, 0, 1]));
        let a = &p(&[1, 1]) * &p(&[-2, 0, 3]);
        let b = p(&[1, 1]);
        assert_eq!(a.exact_quotient_primitive(&b), p(&[-2, 0, 3]));
        let g = (&a * &p(&[5, 1])).gcd(&(&a * &p(&[-5, 1])));
        assert_eq!(g, p(&[-2, -2, 3, 3]));
        assert_eq!(p(&[6, 0, -4]).primitive_part(), p(&[-3, 0, 2]));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[0, 0, 3, 1]).to_string(), "x^3 + 3x^2");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        let big = Polynomial::binomial_shift(80);
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.starts_with("[\"1\",\"80\","));
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
        assert_eq!(serde_json::to_string(&Polynomial::zero()).unwrap(), "[]");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn pow_is_repeated_mul(a in small_poly(), k in 0u32..5) {
            let mut r = Polynomial::one();
            for _ in 0..k {
                r = &r * &a;
            }
            prop_assert_eq!(a.pow(k), r);
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(), z in -10i64..=10) {
            let z = BigInt::from(z);
            prop_assert_eq!((&a * &b).eval_int(&z), a.eval_int(&z) * b.eval_int(&z));
        }

        #[test]
        fn binomial_rows_sum_to_powers_of_two(k in 0usize..60) {
            prop_assert_eq!(
                Polynomial::binomial_shift(k).eval_int(&BigInt::one()),
                BigInt::one() << k
            );
        }

        #[test]
        fn normalized_after_any_op(a in small_poly(), b in small_poly()) {
            for r in [&a + &b, &a - &b, &a * &b, a.derivative()] {
                prop_assert!(r.leading_coeff().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn pseudo_division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.pseudo_divrem(&b);
            let da = a.degree().unwrap_or(0);
            let db = b.degree().unwrap();
            let e = if a.degree().is_some_and(|d| d >= db) { (da - db + 1) as u32 } else { 0 };
            let lhs = a.scale(&b.leading_coeff().unwrap().pow(e));
            prop_assert_eq!(lhs, &(&q * &b) + &r);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn taylor_shift_commutes_with_evaluation(a in small_poly(), c in -4i64..4, z in -6i64..6) {
            let shifted = a.taylor_shift(&BigInt::from(c));
            prop_assert_eq!(shifted.eval_int(&BigInt::from(z)), a.eval_int(&BigInt::from(z + c)));
        }
    }
}
