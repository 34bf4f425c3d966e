//! Cyclic Jacobi eigenvalue iteration for real symmetric matrices.

use super::PolyError;

const REL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, descending.
///
/// Sweeps rotations over every off-diagonal pair until the off-diagonal
/// Frobenius mass falls below `1e-12` times the matrix Frobenius norm.
/// Symmetry is checked exactly.
pub fn approx_eigenvalues(rows: &[Vec<f64>]) -> Result<Vec<f64>, PolyError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(PolyError::NotSquare);
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, other) in rows.iter().enumerate().skip(i + 1) {
            if row[j] != other[i] {
                return Err(PolyError::NotSymmetric(i, j));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let norm = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= REL_TOL * norm {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for row in a.iter_mut() {
        let (akp, akq) = (row[p], row[q]);
        row[p] = c * akp - s * akq;
        row[q] = s * akp + c * akq;
    }
    let (rp, rq) = (a[p].clone(), a[q].clone());
    for (k, (apk, aqk)) in rp.into_iter().zip(rq).enumerate() {
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn star_second_eigenvalue() {
        // D(K_{1,2}): spectrum 1 + sqrt 3, -2, 1 - sqrt 3
        let d = vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 2.0],
            vec![1.0, 2.0, 0.0],
        ];
        let ev = approx_eigenvalues(&d).unwrap();
        assert!((ev[1] - (1.0 - 3f64.sqrt())).abs() < 1e-12);
        assert!((ev[0] - (1.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!((ev[2] + 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            approx_eigenvalues(&[vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(PolyError::NotSymmetric(0, 1))
        );
        assert_eq!(approx_eigenvalues(&[]), Ok(vec![]));
    }

    proptest! {
        #[test]
        fn trace_and_frobenius_preserved(v in prop::collection::vec(-10i32..=10, 36)) {
            let n = 6;
            let mut m = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in i..n {
                    m[i][j] = v[i * n + j] as f64;
                    m[j][i] = m[i][j];
                }
            }
            let ev = approx_eigenvalues(&m).unwrap();
            let tr: f64 = (0..n).map(|i| m[i][i]).sum();
            let fro: f64 = m.iter().flatten().map(|x| x * x).sum();
            prop_assert!((ev.iter().sum::<f64>() - tr).abs() < 1e-8);
            prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - fro).abs() < 1e-7 * fro.max(1.0));
        }
    }
}
