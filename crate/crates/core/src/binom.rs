//! Binomial coefficients reduced modulo a small prime, via Lucas' theorem.

/// `C(n, k) mod p`.
///
/// Lucas: write `n` and `k` in base `p`; the binomial is the product of the
/// digit-wise binomials, and vanishes as soon as one digit of `k` exceeds the
/// matching digit of `n`.
pub fn binom_mod(mut n: u64, mut k: u64, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let p64 = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p64, k % p64);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, kd, p64) % p64;
        n /= p64;
        k /= p64;
    }
    acc as u32
}

// digits are < p, so the multiplicative formula never divides by a multiple of p
fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}
