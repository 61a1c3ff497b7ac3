//! Number-theoretic transform over the prime q = 2^64 − 2^32 + 1.
//!
//! q − 1 has 2-adic valuation 32, so power-of-two transform sizes up to 2^32
//! are available; 7 generates the multiplicative group. Convolutions of
//! small-modulus coefficient vectors are exact as long as the integer
//! convolution stays below q.

pub const Q: u64 = 0xFFFF_FFFF_0000_0001;
const GENERATOR: u64 = 7;

#[inline]
pub fn add_mod(a: u64, b: u64) -> u64 {
    let s = a as u128 + b as u128;
    if s >= Q as u128 {
        (s - Q as u128) as u64
    } else {
        s as u64
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        (a as u128 + Q as u128 - b as u128) as u64
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64) -> u64 {
    reduce128(a as u128 * b as u128)
}

/// Reduce a 128-bit value mod q using 2^64 ≡ 2^32 − 1 and 2^96 ≡ −1.
#[inline]
pub fn reduce128(x: u128) -> u64 {
    const MASK32: u64 = 0xFFFF_FFFF;
    let lo = x as u64;
    let hi = (x >> 64) as u64;
    let hi_hi = hi >> 32;
    let hi_lo = hi & MASK32;

    // x ≡ lo + (2^32 − 1)·hi_lo − hi_hi (mod q)
    let mut acc = lo as i128 - hi_hi as i128 + (hi_lo as i128) * (MASK32 as i128);
    let q = Q as i128;
    while acc < 0 {
        acc += q;
    }
    while acc >= q {
        acc -= q;
    }
    acc as u64
}

pub fn pow_mod(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    base %= Q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64) -> u64 {
    pow_mod(a, Q - 2)
}

/// In-place radix-2 transform. `a.len()` must be a power of two ≤ 2^32.
pub fn ntt(a: &mut [u64], invert: bool) {
    let n = a.len();
    assert!(n.is_power_of_two(), "ntt size must be a power of two");
    assert!(n as u64 <= 1 << 32, "ntt size too large");

    // bit-reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }

    let mut len = 2;
    while len <= n {
        let mut w_len = pow_mod(GENERATOR, (Q - 1) / len as u64);
        if invert {
            w_len = inv_mod(w_len);
        }
        for start in (0..n).step_by(len) {
            let mut w = 1u64;
            for k in 0..len / 2 {
                let u = a[start + k];
                let v = mul_mod(a[start + k + len / 2], w);
                a[start + k] = add_mod(u, v);
                a[start + k + len / 2] = sub_mod(u, v);
                w = mul_mod(w, w_len);
            }
        }
        len <<= 1;
    }

    if invert {
        let n_inv = inv_mod(n as u64);
        for x in a.iter_mut() {
            *x = mul_mod(*x, n_inv);
        }
    }
}

/// Exact integer convolution of `a` and `b` (entries < `coeff_bound`),
/// provided `min(a.len(), b.len()) * coeff_bound²` stays below q.
/// Returns `None` when the bound cannot be guaranteed.
pub fn convolve_exact(a: &[u64], b: &[u64], coeff_bound: u64) -> Option<Vec<u64>> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let min_len = a.len().min(b.len()) as u128;
    if min_len * (coeff_bound as u128) * (coeff_bound as u128) >= Q as u128 {
        return None;
    }
    let out_len = a.len() + b.len() - 1;
    let n = out_len.next_power_of_two();

    let mut fa = vec![0u64; n];
    fa[..a.len()].copy_from_slice(a);
    if std::ptr::eq(a, b) || a == b {
        // squaring: one forward transform
        ntt(&mut fa, false);
        for x in fa.iter_mut() {
            *x = mul_mod(*x, *x);
        }
        ntt(&mut fa, true);
        fa.truncate(out_len);
        return Some(fa);
    }
    let mut fb = vec![0u64; n];
    fb[..b.len()].copy_from_slice(b);
    ntt(&mut fa, false);
    ntt(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(fb.iter()) {
        *x = mul_mod(*x, *y);
    }
    drop(fb);
    ntt(&mut fa, true);
    fa.truncate(out_len);
    Some(fa)
}
