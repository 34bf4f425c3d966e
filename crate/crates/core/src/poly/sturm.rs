//! Sturm sequences, exact root counting and real-root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{char_poly_exact, IntMatrix, IntPoly, PolyError, Rational};

/// Which side of a threshold to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Greater,
    Less,
}

/// Sturm chain of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// Build the chain `p, p', -rem(p, p'), ...`. Pseudo-remainders are
    /// sign-corrected so each element matches the Euclidean remainder up to a
    /// positive factor, then reduced to primitive form.
    pub fn new(p: &IntPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(SturmChain { seq });
        }
        seq.push(d);
        loop {
            let k = seq.len();
            let (a, b) = (&seq[k - 2], &seq[k - 1]);
            let r = a.pseudo_rem(b)?;
            if r.is_zero() {
                break;
            }
            let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
            let lc_neg = b.leading().is_some_and(Signed::is_negative);
            // rem = r / lc^delta; next = -rem
            let flip = !(lc_neg && delta % 2 == 1);
            let next = if flip { -&r } else { r };
            let c = next.content();
            let next = IntPoly::new(next.coeffs().iter().map(|x| x / &c).collect());
            seq.push(next);
        }
        Ok(SturmChain { seq })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn variations_at(&self, t: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in &self.seq {
            let sg = s.sign_at(t);
            if sg == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && sg != last {
                v += 1;
            }
            last = sg;
        }
        v
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize, PolyError> {
        if a >= b {
            return Err(PolyError::EmptyInterval);
        }
        for t in [a, b] {
            if self.seq[0].sign_at(t) == Ordering::Equal {
                return Err(PolyError::EndpointRoot(t.to_string()));
            }
        }
        Ok(self.variations_at(a) - self.variations_at(b))
    }
}

/// Distinct real roots of square-free `p` in `(a, b)`.
pub fn sturm_count(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize, PolyError> {
    SturmChain::new(p)?.count(a, b)
}

/// Integer `U` with every complex root strictly inside `|z| < U`:
/// `1 + ceil(max |a_i / a_deg|)`.
pub fn cauchy_bound(p: &IntPoly) -> Result<BigInt, PolyError> {
    let lead = p.leading().ok_or(PolyError::ZeroPolynomial)?.abs();
    let top = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| {
            let a = c.abs();
            (&a + &lead - BigInt::one()) / &lead
        })
        .max()
        .unwrap_or_default();
    Ok(top + 1)
}

/// Counts of roots, with multiplicity, strictly below, at and above an
/// algebraic threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RootCounts {
    pub less: usize,
    pub equal: usize,
    pub greater: usize,
}

/// Count the roots of `p` (with multiplicity) relative to the threshold
/// `theta`, given as the only root of the square-free polynomial `q` in the
/// open interval `(lo, hi)`; `q` must not vanish at `lo` or `hi`.
pub fn count_around(
    p: &IntPoly,
    q: &IntPoly,
    lo: &Rational,
    hi: &Rational,
) -> Result<RootCounts, PolyError> {
    if sturm_count(q, lo, hi)? != 1 {
        return Err(PolyError::EmptyInterval);
    }
    let mut out = RootCounts::default();
    for (f, m) in p.squarefree_decompose()? {
        let g = f.gcd(q);
        let (h, g) = if g.degree().is_some_and(|d| d > 0) && sturm_count(&g, lo, hi)? == 1 {
            out.equal += m;
            (f.divide_exact(&g)?.expect("gcd divides"), g)
        } else {
            (f, IntPoly::one())
        };
        // g: roots other than theta lie outside [lo, hi]
        let (gl, gg) = outside_counts(&g, lo, hi)?;
        // h: theta is not a root; shrink the bracket until h has no root inside
        let (mut a, mut b) = (lo.clone(), hi.clone());
        let chain = SturmChain::new(&h)?;
        loop {
            let ends_ok = h.sign_at(&a) != Ordering::Equal && h.sign_at(&b) != Ordering::Equal;
            if ends_ok && chain.count(&a, &b)? == 0 {
                break;
            }
            let mid = split_point(q, &a, &b);
            match mid {
                Split::Exact(t) => {
                    a = t.clone();
                    b = t;
                    break;
                }
                Split::Left(t) => b = t,
                Split::Right(t) => a = t,
            }
        }
        let (hl, hg) = if a == b {
            // theta rational and equal to a; h(a) != 0
            let u = Rational::from_integer(cauchy_bound(&h)? + a.abs().ceil().to_integer() + 1);
            if h.degree() == Some(0) {
                (0, 0)
            } else {
                (chain.count(&-&u, &a)?, chain.count(&a, &u)?)
            }
        } else {
            outside_counts(&h, &a, &b)?
        };
        out.less += m * (gl + hl);
        out.greater += m * (gg + hg);
    }
    Ok(out)
}

enum Split {
    Exact(Rational),
    Left(Rational),
    Right(Rational),
}

/// Bisect `(a, b)` keeping the sign change of `q`.
fn split_point(q: &IntPoly, a: &Rational, b: &Rational) -> Split {
    let mid = (a + b) / Rational::from_integer(BigInt::from(2));
    let sm = q.sign_at(&mid);
    if sm == Ordering::Equal {
        return Split::Exact(mid);
    }
    if sm == q.sign_at(a) {
        Split::Right(mid)
    } else {
        Split::Left(mid)
    }
}

/// Roots of `f` below `a` and above `b`; `f` must not vanish at either.
fn outside_counts(f: &IntPoly, a: &Rational, b: &Rational) -> Result<(usize, usize), PolyError> {
    if f.degree().is_none_or(|d| d == 0) {
        return Ok((0, 0));
    }
    let u = Rational::from_integer(
        cauchy_bound(f)? + a.abs().ceil().to_integer() + b.abs().ceil().to_integer(),
    );
    let chain = SturmChain::new(f)?;
    Ok((chain.count(&-&u, a)?, chain.count(b, &u)?))
}

/// Roots of `p` strictly on `side` of the rational `t`, with multiplicity.
pub fn count_roots(p: &IntPoly, side: Side, t: &Rational) -> Result<usize, PolyError> {
    let (q, lo, hi) = rational_bracket(t);
    let c = count_around(p, &q, &lo, &hi)?;
    Ok(match side {
        Side::Greater => c.greater,
        Side::Less => c.less,
    })
}

/// Linear polynomial vanishing at `t`, with a unit bracket.
pub(crate) fn rational_bracket(t: &Rational) -> (IntPoly, Rational, Rational) {
    let q = IntPoly::new(vec![-t.numer().clone(), t.denom().clone()]);
    let one = Rational::one();
    (q, t - &one, t + &one)
}

/// Eigenvalues of `m` strictly on `side` of `t`, counted with multiplicity.
pub fn count_eigen_with_multiplicity(m: &IntMatrix, side: Side, t: &Rational) -> usize {
    count_roots(&char_poly_exact(m), side, t).expect("characteristic polynomial is monic")
}

/// One real root: an exact integer, or an isolating interval `(lo, hi)`
/// containing exactly one distinct root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<BigInt>,
    pub mult: usize,
}

impl IsolatedRoot {
    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(k) => k.to_f64().expect("finite"),
            None => ((&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2)))
                .to_f64()
                .expect("finite"),
        }
    }
}

/// All real roots of `p` with multiplicities, descending, isolated to
/// intervals narrower than `width`. Integer roots are reported exactly.
pub fn isolate_real_roots(p: &IntPoly, width: &Rational) -> Result<Vec<IsolatedRoot>, PolyError> {
    let dec = p.squarefree_decompose()?;
    let s = dec.iter().fold(IntPoly::one(), |acc, (f, _)| &acc * f);
    if s.degree().is_none_or(|d| d == 0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&s)?;
    let u = Rational::from_integer(cauchy_bound(&s)?);
    let mut found = Vec::new();
    let mut stack = vec![(-u.clone(), u)];
    while let Some((a, b)) = stack.pop() {
        let c = chain.count(&a, &b)?;
        if c == 0 {
            continue;
        }
        if c == 1 && &b - &a < *width {
            found.push((a, b));
            continue;
        }
        let mid = avoid_root(&s, &a, &b);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    let mut out = Vec::with_capacity(found.len());
    for (a, b) in found {
        let mut mult = 0;
        for (f, m) in &dec {
            if f.degree().is_some_and(|d| d > 0) && sturm_count(f, &a, &b)? == 1 {
                mult = *m;
                break;
            }
        }
        let exact = integer_in(&a, &b).filter(|k| s.eval_int(k).is_zero());
        out.push(IsolatedRoot {
            lo: a,
            hi: b,
            exact,
            mult,
        });
    }
    out.sort_by(|x, y| y.lo.cmp(&x.lo));
    Ok(out)
}

/// A split point strictly inside `(a, b)` where `s` does not vanish.
fn avoid_root(s: &IntPoly, a: &Rational, b: &Rational) -> Rational {
    let two = BigInt::from(2);
    let mut k: u32 = 2;
    let mut mid = (a + b) / Rational::from_integer(two.clone());
    while s.sign_at(&mid) == Ordering::Equal {
        // nudge right by (b - a) / 2^k
        mid = (a + b) / Rational::from_integer(two.clone())
            + (b - a) / Rational::from_integer(two.pow(k));
        k += 1;
    }
    mid
}

fn integer_in(a: &Rational, b: &Rational) -> Option<BigInt> {
    let k: BigInt = a.floor().to_integer() + 1;
    (Rational::from_integer(k.clone()) < *b).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rational, rational_int};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn basic_counts() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(sturm_count(&q, &rational_int(0), &rational_int(2)), Ok(1));
        assert_eq!(sturm_count(&q, &rational_int(-2), &rational_int(2)), Ok(2));
        assert!(matches!(
            sturm_count(&p(&[-1, 0, 1]), &rational_int(1), &rational_int(2)),
            Err(PolyError::EndpointRoot(_))
        ));
        assert_eq!(
            sturm_count(&q, &rational_int(2), &rational_int(0)),
            Err(PolyError::EmptyInterval)
        );
    }

    #[test]
    fn path_five_has_three_roots_above_minus_one() {
        let rows: Vec<Vec<i64>> = (0..5)
            .map(|i: i64| (0..5).map(|j: i64| (i - j).abs()).collect())
            .collect();
        let cp = char_poly_exact(&IntMatrix::from_rows(&rows).unwrap());
        let s = cp.squarefree_part().unwrap();
        let u = Rational::from_integer(cauchy_bound(&s).unwrap());
        assert_eq!(sturm_count(&s, &rational_int(-1), &u), Ok(3));
        assert_eq!(count_roots(&cp, Side::Less, &rational_int(-2)), Ok(1));
    }

    #[test]
    fn counts_at_rational_roots() {
        // (x+1)^3 (x-3)
        let k4 = &IntPoly::x_plus(1).pow(3) * &IntPoly::x_plus(-3);
        assert_eq!(count_roots(&k4, Side::Greater, &rational_int(-1)), Ok(1));
        assert_eq!(count_roots(&k4, Side::Less, &rational_int(-1)), Ok(0));
        assert_eq!(count_roots(&k4, Side::Less, &rational(1, 3)), Ok(3));
        // (2x - 1)^2 (x + 5)
        let f = &p(&[-1, 2]).pow(2) * &IntPoly::x_plus(5);
        let c = count_around(&f, &p(&[-1, 2]), &rational_int(0), &rational_int(1)).unwrap();
        assert_eq!(
            c,
            RootCounts {
                less: 1,
                equal: 2,
                greater: 0
            }
        );
    }

    #[test]
    fn irrational_threshold() {
        // theta = 1 - sqrt 3, root of x^2 - 2x - 2 in (-1, 0)
        let q = p(&[-2, -2, 1]);
        let f = &(&q * &q) * &p(&[0, 1]);
        let c = count_around(&f, &q, &rational_int(-1), &rational_int(0)).unwrap();
        assert_eq!(
            c,
            RootCounts {
                less: 0,
                equal: 2,
                greater: 3
            }
        );
        // x^2 - 3 has roots +-1.732..; both strictly away from theta
        let c = count_around(&p(&[-3, 0, 1]), &q, &rational_int(-1), &rational_int(0)).unwrap();
        assert_eq!(
            c,
            RootCounts {
                less: 1,
                equal: 0,
                greater: 1
            }
        );
        // root -0.7320508 vs theta -0.7320508075...: 2x+... rational just above theta
        let near = p(&[732_050, 1_000_000]);
        let c = count_around(&near, &q, &rational_int(-1), &rational_int(0)).unwrap();
        assert_eq!(
            c,
            RootCounts {
                less: 0,
                equal: 0,
                greater: 1
            }
        );
    }

    #[test]
    fn isolation_with_exact_roots() {
        let f = &(&IntPoly::x_plus(1).pow(2) * &IntPoly::x_plus(-2)) * &p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f, &rational(1, 1_000_000_000)).unwrap();
        let approx: Vec<f64> = roots.iter().map(IsolatedRoot::approx).collect();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0].exact, Some(BigInt::from(2)));
        assert!((approx[1] - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(
            (roots[2].exact.clone(), roots[2].mult),
            (Some(BigInt::from(-1)), 2)
        );
        assert!(roots
            .iter()
            .all(|r| &r.hi - &r.lo < rational(1, 1_000_000_000)));
    }

    fn factor() -> impl Strategy<Value = IntPoly> {
        prop_oneof![
            (-6i64..=6).prop_map(IntPoly::x_plus),
            (-4i64..=4, -6i64..=6).prop_map(|(b, c)| p(&[c, b, 1])),
        ]
    }

    /// Real roots counted from a direct closed form per factor.
    fn real_root_oracle(factors: &[IntPoly]) -> Vec<f64> {
        let mut out = Vec::new();
        for f in factors {
            let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
            if c.len() == 2 {
                out.push(-c[0]);
            } else {
                let disc = c[1] * c[1] - 4.0 * c[0];
                if disc >= 0.0 {
                    out.push((-c[1] + disc.sqrt()) / 2.0);
                    out.push((-c[1] - disc.sqrt()) / 2.0);
                }
            }
        }
        out
    }

    proptest! {
        #[test]
        fn counts_match_closed_form(fs in prop::collection::vec(factor(), 1..5), t in -7i64..=7) {
            let f = fs.iter().fold(IntPoly::one(), |acc, g| &acc * g);
            let roots = real_root_oracle(&fs);
            prop_assume!(roots.iter().all(|r| (r - t as f64).abs() > 1e-7 || (r - t as f64).abs() == 0.0));
            let tt = rational_int(t);
            let exp_gt = roots.iter().filter(|&&r| r > t as f64 + 1e-9).count();
            let exp_lt = roots.iter().filter(|&&r| r < t as f64 - 1e-9).count();
            prop_assert_eq!(count_roots(&f, Side::Greater, &tt).unwrap(), exp_gt);
            prop_assert_eq!(count_roots(&f, Side::Less, &tt).unwrap(), exp_lt);
        }

        #[test]
        fn full_range_counts_real_roots(fs in prop::collection::vec(factor(), 1..5)) {
            let f = fs.iter().fold(IntPoly::one(), |acc, g| &acc * g);
            let s = f.squarefree_part().unwrap();
            let u = Rational::from_integer(cauchy_bound(&s).unwrap());
            let mut distinct = real_root_oracle(&fs);
            distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
            distinct.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
            prop_assert_eq!(sturm_count(&s, &-u.clone(), &u).unwrap(), distinct.len());
            let iso = isolate_real_roots(&f, &rational(1, 1 << 30)).unwrap();
            let total: usize = iso.iter().map(|r| r.mult).sum();
            prop_assert_eq!(total, real_root_oracle(&fs).len());
        }
    }
}
