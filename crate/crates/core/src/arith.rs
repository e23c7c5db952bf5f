//! Integer helpers: gcd, primality by trial division, prime powers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Smallest divisor `d >= 2` of `n`, or `None` when `n < 2`.
pub fn smallest_divisor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    Some(n)
}

pub fn is_prime(n: u64) -> bool {
    smallest_divisor(n) == Some(n)
}

/// `(p, k)` with `m = p^k`, `k >= 1`, when `m` is a prime power.
pub fn prime_power(m: u64) -> Option<(u64, u32)> {
    let p = smallest_divisor(m)?;
    let mut rest = m;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `base^exp mod modulus` for `modulus >= 1`.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base as u128) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Prime powers in `lo..=hi`, ascending.
pub fn prime_powers_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(2)..=hi).filter(|&m| prime_power(m).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(256), Some((2, 8)));
        assert_eq!(prime_power(361), Some((19, 2)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn divisors() {
        assert_eq!(smallest_divisor(91), Some(7));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert_eq!(pow_mod(3, 3, 7), 6);
        assert_eq!(lcm(2, 3), 6);
    }
}
