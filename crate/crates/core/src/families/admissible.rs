use serde::Serialize;

use super::{FamilyDescriptor, FamilyId};

/// The three characterization theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// `∂3 <= -1` and `∂(n-1) >= -2`
    #[serde(rename = "thm31")]
    T31,
    /// `m(-1) + m(-2) = n - 2`
    #[serde(rename = "thm41")]
    T41,
    /// `m(-1) + m(-2) = n - 3`
    #[serde(rename = "thm42")]
    T42,
}

impl Theorem {
    pub fn admits(self, fd: &FamilyDescriptor) -> bool {
        match self {
            Theorem::T31 => thm31_admissible(fd),
            Theorem::T41 => thm41_admissible(fd),
            Theorem::T42 => thm42_admissible(fd),
        }
    }
}

/// `a + b + c + d - 3ac - 8ad - 3bd - abc - abd - acd - bcd + abcd + 1`,
/// the value of the quartic cofactor of `J7[a,b,c,d]` at `-2`.
pub fn j7_value(a: i64, b: i64, c: i64, d: i64) -> i64 {
    a + b + c + d
        - 3 * a * c
        - 8 * a * d
        - 3 * b * d
        - a * b * c
        - a * b * d
        - a * c * d
        - b * c * d
        + a * b * c * d
        + 1
}

fn abcd(fd: &FamilyDescriptor) -> (usize, usize, usize, usize) {
    let p = fd.params();
    (p[0], p[1], p[2], p[3])
}

fn j7_of(fd: &FamilyDescriptor) -> i64 {
    let (a, b, c, d) = abcd(fd);
    j7_value(a as i64, b as i64, c as i64, d as i64)
}

/// Side conditions of the `∂3 <= -1`, `∂(n-1) >= -2` characterization.
pub fn thm31_admissible(fd: &FamilyDescriptor) -> bool {
    use FamilyId::*;
    let id = fd.id();
    if id.is_i() {
        return true;
    }
    if !id.is_j() {
        return false;
    }
    let (a, b, c, d) = abcd(fd);
    match id {
        J1 => {
            (a == 1 && c == 1)
                || (a == 1 && c == 2 && d <= 2)
                || (a == 1 && c >= 3 && d == 1)
                || (a == 2 && c == 1 && d <= 2)
                || (a >= 3 && c == 1 && d == 1)
        }
        J2 => a == 1 || (a == 2 && d <= 2) || (a >= 3 && d == 1),
        J3 => a == 1 || c == 1,
        J4 => a == 1 || (a == 2 && b <= 2) || (a >= 3 && b == 1),
        J5 | J6 => true,
        J7 => j7_of(fd) <= 0,
        _ => unreachable!("J ids handled"),
    }
}

/// Families with `m(-1) + m(-2) = n - 2`: `K_{s,n-s}` and
/// `K_s^c v K_{n-s}` with `2 <= s <= n - 2`, for `n >= 4`.
pub fn thm41_admissible(fd: &FamilyDescriptor) -> bool {
    if fd.order() < 4 {
        return false;
    }
    let p = fd.params();
    match fd.id() {
        FamilyId::Kst => true,
        FamilyId::Kck => p[0] >= 2 && p[1] >= 2,
        _ => false,
    }
}

/// Families with `m(-1) + m(-2) = n - 3`, for `n >= 5`.
pub fn thm42_admissible(fd: &FamilyDescriptor) -> bool {
    use FamilyId::*;
    if fd.order() < 5 {
        return false;
    }
    let p = fd.params();
    match fd.id() {
        Kjoin => p[1] + p[2] >= 3,
        Kabc => true,
        Kkk | I4 | I6 => p.iter().all(|&x| x >= 2),
        I7 => p[0] + p[2] >= 3 && p[1] >= 2,
        J1 => matches!((p[0], p[2], p[3]), (1, 2, 2) | (2, 1, 2)),
        J2 => p[0] == 2 && p[3] == 2,
        J4 => p[0] == 2 && p[1] == 2,
        J7 => j7_of(fd) == 0,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(s: &str) -> FamilyDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn j7_values() {
        assert_eq!(j7_value(1, 1, 1, 1), -12);
        assert_eq!(j7_value(1, 1, 3, 9), -132);
        assert_eq!(j7_value(1, 9, 1, 3), -132);
    }

    #[test]
    fn thm31_examples() {
        assert!(thm31_admissible(&fd("J7[1,1,1,1]")));
        for b in 1..5 {
            assert!(thm31_admissible(
                &FamilyDescriptor::new(FamilyId::J1, vec![1, b, 2, 2]).unwrap()
            ));
        }
        assert!(!thm31_admissible(&fd("J1[2,1,2,1]")));
        assert!(thm31_admissible(&fd("I3[2,2,2]")));
        assert!(!thm31_admissible(&fd("KABC[2,2,2]")));
        assert!(thm31_admissible(&fd("J7[1,1,3,9]")) && thm31_admissible(&fd("J7[1,9,1,3]")));
    }

    #[test]
    fn thm41_and_thm42_examples() {
        assert!(thm41_admissible(&fd("KST[1,3]")) && thm41_admissible(&fd("KST[2,2]")));
        assert!(thm41_admissible(&fd("KCK[2,2]")) && !thm41_admissible(&fd("KCK[1,3]")));
        assert!(!thm41_admissible(&fd("KST[1,2]")));
        assert!(thm42_admissible(&fd("KJOIN[2,2,1]")) && !thm42_admissible(&fd("KJOIN[3,1,1]")));
        assert!(thm42_admissible(&fd("KABC[2,2,1]")) && !thm42_admissible(&fd("KABC[2,1,1]")));
        assert!(thm42_admissible(&fd("J1[1,3,2,2]")));
    }
}
