//! Word-sized modular arithmetic for the multimodular characteristic
//! polynomial: primes just below 2^62, Faddeev-LeVerrier mod p, and
//! incremental Chinese remaindering.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

const PRIME_POOL: usize = 96;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
pub(crate) fn primes() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_POOL);
        let mut c = (1u64 << 62) - 1;
        while out.len() < PRIME_POOL {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

/// Coefficients (ascending) of `det(xI - A) mod p`, `A` row-major.
/// Requires `p > n` so that every `k` in the recurrence is invertible.
pub(crate) fn char_poly_mod(a: &[BigInt], n: usize, p: u64) -> Vec<u64> {
    let am: Vec<u64> = a.iter().map(|x| residue(x, p)).collect();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
    let mut m = vec![0u64; n * n];
    let mut am_prod = vec![0u64; n * n];
    for k in 1..=n {
        let shift = c[n - k + 1];
        for i in 0..n {
            m[i * n + i] = (m[i * n + i] + shift) % p;
        }
        // am_prod = A * M_k
        for i in 0..n {
            for j in 0..n {
                let mut acc: u128 = 0;
                for l in 0..n {
                    acc += am[i * n + l] as u128 * m[l * n + j] as u128;
                    if l & 7 == 7 {
                        acc %= p as u128;
                    }
                }
                am_prod[i * n + j] = (acc % p as u128) as u64;
            }
        }
        let tr = (0..n).fold(0u64, |t, i| (t + am_prod[i * n + i]) % p);
        let inv_k = pow_mod(k as u64 % p, p - 2, p);
        c[n - k] = (p - mul_mod(tr, inv_k, p)) % p;
        std::mem::swap(&mut m, &mut am_prod);
    }
    c
}

/// Running CRT state over the symmetric residue range.
pub(crate) struct Crt {
    value: Vec<BigInt>,
    modulus: BigInt,
}

impl Crt {
    pub(crate) fn new(len: usize) -> Self {
        Crt {
            value: vec![BigInt::zero(); len],
            modulus: BigInt::from(1),
        }
    }

    pub(crate) fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub(crate) fn absorb(&mut self, residues: &[u64], p: u64) {
        let m_mod = residue(&self.modulus, p);
        let inv = pow_mod(m_mod, p - 2, p);
        for (x, &r) in self.value.iter_mut().zip(residues) {
            let cur = residue(x, p);
            let t = mul_mod((r + p - cur) % p, inv, p);
            *x += &self.modulus * BigInt::from(t);
        }
        self.modulus *= BigInt::from(p);
    }

    /// Values lifted to `(-M/2, M/2]`.
    pub(crate) fn finish(self) -> Vec<BigInt> {
        let half = &self.modulus >> 1u32;
        self.value
            .into_iter()
            .map(|x| if x > half { x - &self.modulus } else { x })
            .collect()
    }
}
