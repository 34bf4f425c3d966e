//! Closed-form distance characteristic polynomials of the I and J families.

use num_bigint::BigInt;

use crate::families::{FamilyDescriptor, FamilyId};
use crate::poly::IntPoly;

/// The closed form for `fd`, or `None` outside the I and J families.
///
/// Every form is `(x+1)^e1 (x+2)^e2 psi(x)` with `psi` of degree at most
/// four, except `K_n = (x-n+1)(x+1)^(n-1)`.
pub fn table3_formula(fd: &FamilyDescriptor) -> Option<IntPoly> {
    use FamilyId::*;
    let p: Vec<i64> = fd.params().iter().map(|&v| v as i64).collect();
    let at = |i: usize| p.get(i).copied().unwrap_or(0);
    let (a, b, c, d) = (at(0), at(1), at(2), at(3));
    if fd.id() == I1 {
        let n = a;
        return Some(&IntPoly::x_plus(1 - n) * &IntPoly::x_plus(1).pow((n - 1) as usize));
    }
    let (e1, e2, psi): (i64, i64, Vec<i64>) = match fd.id() {
        I2 => (
            a - 1,
            b - 1,
            vec![1, -a - 2 * b + 3, a * b - 2 * a - 2 * b + 2],
        ),
        I3 => (
            a + b + c - 3,
            0,
            vec![
                1,
                -a - b - c + 3,
                -2 * a - 3 * b * c - 2 * b - 2 * c + 3,
                a * b * c - a - 3 * b * c - b - c + 1,
            ],
        ),
        I4 => (
            a + b - 2,
            c - 1,
            vec![
                1,
                -a - b - 2 * c + 4,
                a * c - 3 * a - 2 * b * c - 3 * b - 4 * c + 5,
                a * b * c + a * c - 2 * a - 2 * b * c - 2 * b - 2 * c + 2,
            ],
        ),
        I5 => (
            0,
            a + b - 2,
            vec![1, -2 * a - 2 * b + 4, 3 * a * b - 4 * a - 4 * b + 4],
        ),
        I6 => (
            b + c - 2,
            a - 1,
            vec![
                1,
                -2 * a - b - c + 4,
                a * b + a * c - 4 * a - 3 * b * c - 3 * b - 3 * c + 5,
                4 * a * b * c + a * b + a * c - 2 * a - 6 * b * c - 2 * b - 2 * c + 2,
            ],
        ),
        I7 => (
            b - 1,
            a + c - 2,
            vec![
                1,
                -2 * a - b - 2 * c + 5,
                a * b + 3 * a * c - 6 * a - 2 * b * c - 4 * b - 6 * c + 8,
                3 * a * b * c + 2 * a * b + 3 * a * c - 4 * a - 4 * b * c - 4 * b - 4 * c + 4,
            ],
        ),
        J1 => (
            b - 1,
            a + c + d - 3,
            vec![
                1,
                -2 * a - b - 2 * c - 2 * d + 7,
                a * b - 5 * a * d - 10 * a + b * c - 2 * b * d - 6 * b + 3 * c * d
                    - 10 * c
                    - 10 * d
                    + 18,
                3 * a * b * d + 4 * a * b + 8 * a * c * d - 15 * a * d - 16 * a
                    + 3 * b * c * d
                    + 4 * b * c
                    - 8 * b * d
                    - 12 * b
                    + 9 * c * d
                    - 16 * c
                    - 16 * d
                    + 20,
                -4 * a * b * c * d + 6 * a * b * d + 4 * a * b + 8 * a * c * d - 10 * a * d - 8 * a
                    + 6 * b * c * d
                    + 4 * b * c
                    - 8 * b * d
                    - 8 * b
                    + 6 * c * d
                    - 8 * c
                    - 8 * d
                    + 8,
            ],
        ),
        J2 => (
            b + c - 2,
            a + d - 2,
            vec![
                1,
                -2 * a - b - c - 2 * d + 6,
                a * b - 2 * a * c - 5 * a * d - 8 * a - 2 * b * d - 5 * b + c * d - 5 * c - 8 * d
                    + 13,
                a * b * c + 3 * a * b * d + 3 * a * b + 3 * a * c * d
                    - 6 * a * c
                    - 10 * a * d
                    - 10 * a
                    + b * c * d
                    - 6 * b * d
                    - 8 * b
                    + 3 * c * d
                    - 8 * c
                    - 10 * d
                    + 12,
                -a * b * c * d + 2 * a * b * c + 3 * a * b * d + 2 * a * b + 3 * a * c * d
                    - 4 * a * c
                    - 5 * a * d
                    - 4 * a
                    + 2 * b * c * d
                    - 4 * b * d
                    - 4 * b
                    + 2 * c * d
                    - 4 * c
                    - 4 * d
                    + 4,
            ],
        ),
        J3 => (
            b + d - 2,
            a + c - 2,
            vec![
                1,
                -2 * a - b - 2 * c - d + 6,
                a * b - 7 * a * d - 8 * a + b * c - 3 * b * d - 5 * b + c * d - 8 * c - 5 * d + 13,
                4 * a * b * d + 3 * a * b + 8 * a * c * d - 21 * a * d - 10 * a
                    + 4 * b * c * d
                    + 3 * b * c
                    - 12 * b * d
                    - 8 * b
                    + 3 * c * d
                    - 10 * c
                    - 8 * d
                    + 12,
                -4 * a * b * c * d + 8 * a * b * d + 2 * a * b + 8 * a * c * d - 14 * a * d - 4 * a
                    + 8 * b * c * d
                    + 2 * b * c
                    - 12 * b * d
                    - 4 * b
                    + 2 * c * d
                    - 4 * c
                    - 4 * d
                    + 4,
            ],
        ),
        J4 => (
            c + d - 2,
            a + b - 2,
            vec![
                1,
                -2 * a - 2 * b - c - d + 6,
                3 * a * b - 2 * a * c - 7 * a * d - 8 * a + b * c
                    - 2 * b * d
                    - 8 * b
                    - 5 * c
                    - 5 * d
                    + 13,
                3 * a * b * c + 11 * a * b * d + 6 * a * b + a * c * d
                    - 6 * a * c
                    - 21 * a * d
                    - 10 * a
                    + b * c * d
                    + 3 * b * c
                    - 6 * b * d
                    - 10 * b
                    - 8 * c
                    - 8 * d
                    + 12,
                -a * b * c * d + 3 * a * b * c + 11 * a * b * d + 3 * a * b + 2 * a * c * d
                    - 4 * a * c
                    - 14 * a * d
                    - 4 * a
                    + 2 * b * c * d
                    + 2 * b * c
                    - 4 * b * d
                    - 4 * b
                    - 4 * c
                    - 4 * d
                    + 4,
            ],
        ),
        J5 => (
            b + c + d - 3,
            a - 1,
            vec![
                1,
                -2 * a - b - c - d + 5,
                a * b - 2 * a * c - 7 * a * d - 6 * a - 3 * b * d - 4 * b - 4 * c - 4 * d + 9,
                a * b * c + 4 * a * b * d + 2 * a * b + a * c * d - 4 * a * c - 14 * a * d - 6 * a
                    + b * c * d
                    - 9 * b * d
                    - 5 * b
                    - 5 * c
                    - 5 * d
                    + 7,
                a * b * c + 4 * a * b * d + a * b + a * c * d - 2 * a * c - 7 * a * d - 2 * a
                    + 2 * b * c * d
                    - 6 * b * d
                    - 2 * b
                    - 2 * c
                    - 2 * d
                    + 2,
            ],
        ),
        J6 => (
            a + b + d - 3,
            c - 1,
            vec![
                1,
                -a - b - 2 * c - d + 5,
                -2 * a * c - 8 * a * d - 4 * a + b * c - 3 * b * d - 4 * b + c * d - 6 * c - 4 * d
                    + 9,
                a * b * c + a * b * d + 9 * a * c * d - 4 * a * c - 24 * a * d - 5 * a
                    + 4 * b * c * d
                    + 2 * b * c
                    - 9 * b * d
                    - 5 * b
                    + 2 * c * d
                    - 6 * c
                    - 5 * d
                    + 7,
                a * b * c + 2 * a * b * d + 9 * a * c * d - 2 * a * c - 16 * a * d - 2 * a
                    + 4 * b * c * d
                    + b * c
                    - 6 * b * d
                    - 2 * b
                    + c * d
                    - 2 * c
                    - 2 * d
                    + 2,
            ],
        ),
        J7 => (
            a + b + c + d - 4,
            0,
            vec![
                1,
                -a - b - c - d + 4,
                -3 * a * c - 8 * a * d - 3 * a - 3 * b * d - 3 * b - 3 * c - 3 * d + 6,
                a * b * c + a * b * d + a * c * d - 6 * a * c - 16 * a * d - 3 * a + b * c * d
                    - 6 * b * d
                    - 3 * b
                    - 3 * c
                    - 3 * d
                    + 4,
                a * b * c * d + a * b * c + a * b * d + a * c * d - 3 * a * c - 8 * a * d - a
                    + b * c * d
                    - 3 * b * d
                    - b
                    - c
                    - d
                    + 1,
            ],
        ),
        _ => return None,
    };
    let psi = IntPoly::new(psi.into_iter().rev().map(BigInt::from).collect());
    let e1 = usize::try_from(e1).expect("nonnegative exponent");
    let e2 = usize::try_from(e2).expect("nonnegative exponent");
    Some(&(&IntPoly::x_plus(1).pow(e1) * &IntPoly::x_plus(2).pow(e2)) * &psi)
}
