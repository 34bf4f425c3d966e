//! Univariate polynomials over arbitrary-precision integers.
//!
//! Everything that decides a theorem-level question lives here in exact
//! arithmetic: characteristic polynomials, exact division, multiplicity
//! deflation, square-free decomposition and Sturm root counting. The
//! floating-point Jacobi solver in [`jacobi`] is for display values only.

pub mod jacobi;
mod matrix;
mod modular;
mod sturm;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use matrix::{char_poly_exact, IntMatrix};
pub use sturm::{
    cauchy_bound, count_around, count_eigen_with_multiplicity, count_roots, isolate_real_roots,
    sturm_count, IsolatedRoot, RootCounts, Side, SturmChain,
};

/// Exact rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root; deflate rational roots first")]
    EndpointRoot(String),
    #[error("empty interval: lower endpoint is not below the upper one")]
    EmptyInterval,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
}

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has no coefficients and no stored coefficient list ends in zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `x - r`.
    pub fn x_minus(r: &BigInt) -> Self {
        IntPoly::new(vec![-r, BigInt::one()])
    }

    /// `x + r` for a small shift, the shape every twin factor takes.
    pub fn x_plus(r: i64) -> Self {
        IntPoly::from_i64s(&[r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_at(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * t + Rational::from_integer(c.clone())
        })
    }

    /// Sign of `self(t)` using integer arithmetic only: with `t = a/b`,
    /// `b^deg * self(a/b)` is an integer of the same sign.
    pub fn sign_at(&self, t: &Rational) -> Ordering {
        let (a, b) = (t.numer(), t.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc.sign_ordering()
    }

    /// Quotient and remainder over `Z[x]` when `divisor` divides with an
    /// integral quotient; `None` as soon as a step leaves a non-divisible
    /// leading coefficient.
    fn div_rem_integral(&self, divisor: &IntPoly) -> Result<Option<(IntPoly, IntPoly)>, PolyError> {
        let dl = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok(Some((IntPoly::zero(), self.clone())));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dl);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok(Some((IntPoly::new(quot), IntPoly::new(rem))))
    }

    /// `self / q` when the division is exact with integer coefficients.
    pub fn divide_exact(&self, q: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
        Ok(match self.div_rem_integral(q)? {
            Some((quot, rem)) if rem.is_zero() => Some(quot),
            _ => None,
        })
    }

    /// Largest `k` with `(x - r)^k | self`, and the cofactor.
    pub fn deflate_at(&self, r: &BigInt) -> Result<(IntPoly, usize), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            // synthetic division by (x - r)
            let n = p.coeffs.len();
            if n < 2 {
                return Ok((p, k));
            }
            let mut q = vec![BigInt::zero(); n - 1];
            let mut carry = BigInt::zero();
            for i in (1..n).rev() {
                carry = &p.coeffs[i] + carry * r;
                q[i - 1] = carry.clone();
            }
            let rem = &p.coeffs[0] + carry * r;
            if !rem.is_zero() {
                return Ok((p, k));
            }
            p = IntPoly::new(q);
            k += 1;
        }
    }

    /// Pseudo-remainder: `lc(q)^(deg p - deg q + 1) * p mod q`.
    pub fn pseudo_rem(&self, q: &IntPoly) -> Result<IntPoly, PolyError> {
        let ql = q.leading().ok_or(PolyError::DivisionByZero)?;
        let dq = q.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dq {
            return Ok(self.clone());
        }
        let steps = r.len() - dq;
        for _ in 0..steps {
            let top = r.pop().expect("nonempty");
            for c in r.iter_mut() {
                *c *= ql;
            }
            let off = r.len() - dq;
            for (i, c) in q.coeffs[..dq].iter().enumerate() {
                r[off + i] -= &top * c;
            }
        }
        Ok(IntPoly::new(r))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b nonzero").primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Yun's square-free decomposition: primitive, pairwise coprime,
    /// square-free factors with multiplicities, ascending multiplicity.
    /// The product `∏ fᵢ^mᵢ` equals the primitive part of `self`.
    pub fn squarefree_decompose(&self) -> Result<Vec<(IntPoly, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let a = self.primitive_part();
        if a.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let exact = |p: &IntPoly, q: &IntPoly| {
            p.divide_exact(q)
                .expect("nonzero divisor")
                .expect("gcd divides exactly over Z")
        };
        let da = a.derivative();
        let b = a.gcd(&da);
        let mut c = exact(&a, &b);
        let mut d = &exact(&da, &b) - &c.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while c.degree().is_some_and(|deg| deg > 0) {
            let g = c.gcd(&d);
            c = exact(&c, &g);
            d = &exact(&d, &g) - &c.derivative();
            if g.degree().is_some_and(|deg| deg > 0) {
                out.push((g, i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// Product of the distinct irreducible factors (square-free part),
    /// primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly, PolyError> {
        Ok(self
            .squarefree_decompose()?
            .iter()
            .fold(IntPoly::one(), |acc, (f, _)| &acc * f))
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> Self {
        IntPoly::from_i64s(&v)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul<&BigInt> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &BigInt) -> IntPoly {
        self.scale(rhs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
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

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Rational from integer parts; panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(
            format!("{}", p(&[-6, -16, -10, 0, 1])),
            "x^4 - 10x^2 - 16x - 6"
        );
        assert_eq!(format!("{}", p(&[0, -1])), "-x");
    }

    #[test]
    fn evaluation() {
        let q = p(&[3, -2, 5]);
        assert_eq!(q.eval_at(&rational_int(0)), rational_int(3));
        assert_eq!(q.eval_at(&rational(1, 2)), rational(13, 4));
        assert_eq!(q.sign_at(&rational(-7, 3)), Ordering::Greater);
        assert_eq!(p(&[-2, 0, 1]).sign_at(&rational(1, 1)), Ordering::Less);
    }

    #[test]
    fn exact_division() {
        let x1 = IntPoly::x_plus(1);
        let k4 = &x1.pow(3) * &IntPoly::x_plus(-3);
        let q = k4.divide_exact(&x1).unwrap().unwrap();
        assert_eq!(q, &x1.pow(2) * &IntPoly::x_plus(-3));
        assert_eq!(p(&[1, 0, 1]).divide_exact(&x1), Ok(None));
        assert_eq!(
            k4.divide_exact(&IntPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn deflation() {
        let k4 = &IntPoly::x_plus(1).pow(3) * &IntPoly::x_plus(-3);
        assert_eq!(
            k4.deflate_at(&BigInt::from(-1)).unwrap(),
            (IntPoly::x_plus(-3), 3)
        );
        assert_eq!(p(&[1, 0, 1]).deflate_at(&BigInt::from(1)).unwrap().1, 0);
        assert_eq!(
            IntPoly::zero().deflate_at(&BigInt::from(1)),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_examples() {
        let f = &IntPoly::x_plus(1).pow(2) * &IntPoly::x_plus(-2);
        assert_eq!(
            f.squarefree_decompose().unwrap(),
            vec![(IntPoly::x_plus(-2), 1), (IntPoly::x_plus(1), 2)]
        );
        let sq = p(&[-2, 0, 1]);
        assert_eq!(sq.squarefree_decompose().unwrap(), vec![(sq.clone(), 1)]);
        assert_eq!(
            IntPoly::zero().squarefree_decompose(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn gcd_basic() {
        let a = &IntPoly::x_plus(1) * &p(&[-2, 0, 1]);
        let b = &IntPoly::x_plus(1) * &IntPoly::x_plus(5);
        assert_eq!(a.gcd(&b), IntPoly::x_plus(1));
        assert_eq!(
            (&a * &BigInt::from(6)).gcd(&(&b * &BigInt::from(-4))),
            IntPoly::x_plus(1)
        );
    }

    fn small_factor() -> impl Strategy<Value = IntPoly> {
        prop_oneof![
            (-4i64..=4).prop_map(IntPoly::x_plus),
            (-3i64..=3, 1i64..=5).prop_map(|(b, c)| p(&[c, b, 1])),
        ]
    }

    proptest! {
        #[test]
        fn squarefree_multiplicities_sum_to_degree(
            factors in prop::collection::vec((small_factor(), 1usize..4), 1..5)
        ) {
            let f = factors.iter().fold(IntPoly::one(), |acc, (g, m)| &acc * &g.pow(*m));
            let dec = f.squarefree_decompose().unwrap();
            let total: usize = dec.iter().map(|(g, m)| m * g.degree().unwrap()).sum();
            prop_assert_eq!(total, f.degree().unwrap());
            let rebuilt = dec.iter().fold(IntPoly::one(), |acc, (g, m)| &acc * &g.pow(*m));
            prop_assert_eq!(rebuilt, f.primitive_part());
            for (g, _) in &dec {
                prop_assert_eq!(g.gcd(&g.derivative()).degree(), Some(0));
            }
        }

        #[test]
        fn exact_division_inverts_multiplication(
            a in prop::collection::vec(-9i64..=9, 1..6),
            b in small_factor(),
        ) {
            let a = p(&a);
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), Some(a));
        }
    }
}
