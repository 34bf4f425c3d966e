use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::modular::{char_poly_mod, primes, Crt};
use super::{IntPoly, PolyError};
use crate::graph::DistanceMatrix;

/// Square integer matrix, row-major. Symmetry is checked on demand rather
/// than enforced, so divisor matrices fit the same type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, PolyError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(PolyError::NotSquare);
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    /// First asymmetric position, if any.
    pub fn check_symmetric(&self) -> Result<(), PolyError> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(PolyError::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// Principal submatrix on the given (ascending or not) index list.
    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        let k = idx.len();
        let mut out = IntMatrix::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Largest absolute row sum.
    pub fn max_row_sum(&self) -> BigInt {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).to_f64().expect("finite"))
                    .collect()
            })
            .collect()
    }
}

impl From<&DistanceMatrix> for IntMatrix {
    fn from(d: &DistanceMatrix) -> Self {
        let n = d.order();
        IntMatrix {
            n,
            entries: (0..n * n)
                .map(|k| BigInt::from(d.get(k / n, k % n)))
                .collect(),
        }
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// `det(xI - m)` with integer coefficients.
///
/// Computed modulo enough 62-bit primes to cover the coefficient bound
/// `(1 + rho)^n`, rho the largest absolute row sum, then lifted by CRT.
/// Every coefficient of degree `k` is a signed sum of principal minors of
/// order `n - k`, each at most `rho^(n-k)` in absolute value, which gives
/// the bound after summing the binomial expansion.
pub fn char_poly_exact(m: &IntMatrix) -> IntPoly {
    let n = m.n;
    let bound = (BigInt::from(1) + m.max_row_sum()).pow(n as u32);
    let need = bound * 2 + 1;
    let mut crt = Crt::new(n + 1);
    for &p in primes() {
        if crt.modulus() > &need {
            break;
        }
        crt.absorb(&char_poly_mod(&m.entries, n, p), p);
    }
    assert!(
        crt.modulus() > &need,
        "prime pool exhausted for a {n}x{n} matrix"
    );
    IntPoly::new(crt.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    /// Bareiss fraction-free determinant.
    fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = v.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn cofactor_det(a: &[Vec<BigInt>]) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::from(1);
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = a[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &a[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    fn shifted(m: &IntMatrix, t: i64) -> Vec<Vec<BigInt>> {
        let n = m.order();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigInt::from(t) - m.get(i, j)
                        } else {
                            -m.get(i, j)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(char_poly_exact(&IntMatrix::zeros(1)), IntPoly::x());
        assert_eq!(char_poly_exact(&IntMatrix::zeros(0)), IntPoly::one());
        let k4: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| (i != j) as i64).collect())
            .collect();
        let expect = &IntPoly::x_plus(-3) * &IntPoly::x_plus(1).pow(3);
        assert_eq!(char_poly_exact(&IntMatrix::from_rows(&k4).unwrap()), expect);
    }

    #[test]
    fn path_four_against_cofactor_expansion() {
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|i: i64| (0..4).map(|j: i64| (i - j).abs()).collect())
            .collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        let cp = char_poly_exact(&m);
        assert_eq!(cp, IntPoly::from_i64s(&[-12, -32, -20, 0, 1]));
        for t in -5..=5 {
            assert_eq!(cp.eval_int(&BigInt::from(t)), cofactor_det(&shifted(&m, t)));
        }
    }

    #[test]
    fn large_entries_need_several_primes() {
        let big = BigInt::from(1u64 << 40);
        let rows = vec![
            vec![big.clone(), big.clone() * 3],
            vec![big.clone() * 3, -big.clone()],
        ];
        let m = IntMatrix::from_rows(&rows).unwrap();
        // x^2 - tr x + det
        let det = -(&big * &big) - &big * &big * 9;
        assert_eq!(
            char_poly_exact(&m),
            IntPoly::new(vec![det, BigInt::zero(), BigInt::from(1)])
        );
    }

    #[test]
    fn non_square_rejected() {
        assert_eq!(
            IntMatrix::from_rows(&[vec![1i64, 2]]),
            Err(PolyError::NotSquare)
        );
        let m = IntMatrix::from_rows(&[vec![0i64, 1], vec![2, 0]]).unwrap();
        assert_eq!(m.check_symmetric(), Err(PolyError::NotSymmetric(0, 1)));
    }

    fn sym_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=7).prop_flat_map(|n| {
            prop::collection::vec(-20i64..=20, n * n).prop_map(move |v| {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in i..n {
                        rows[i][j] = v[i * n + j];
                        rows[j][i] = v[i * n + j];
                    }
                }
                IntMatrix::from_rows(&rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn char_poly_matches_bareiss(m in sym_matrix(), t in -30i64..=30) {
            let cp = char_poly_exact(&m);
            prop_assert!(cp.is_monic());
            prop_assert_eq!(cp.degree(), Some(m.order()));
            prop_assert_eq!(cp.eval_int(&BigInt::from(t)), bareiss_det(shifted(&m, t)));
        }

        #[test]
        fn char_poly_of_nonsymmetric_matches_bareiss(
            v in prop::collection::vec(-9i64..=9, 16), t in -10i64..=10
        ) {
            let rows: Vec<Vec<i64>> = v.chunks(4).map(<[i64]>::to_vec).collect();
            let m = IntMatrix::from_rows(&rows).unwrap();
            prop_assert_eq!(char_poly_exact(&m).eval_int(&BigInt::from(t)), bareiss_det(shifted(&m, t)));
        }
    }
}
