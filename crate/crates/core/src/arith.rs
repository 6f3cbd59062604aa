//! Small integer helpers: primality, factorization, gcd/lcm.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// The largest divisor of `n` whose prime divisors all lie in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    factorize(n)
        .into_iter()
        .filter(|(p, _)| primes.contains(p))
        .map(|(p, e)| p.pow(e))
        .product()
}

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
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// True when `n` is a positive power of `p` (including `p^0 = 1` only if `allow_one`).
pub fn is_power_of(n: u64, p: u64, allow_one: bool) -> bool {
    if n == 1 {
        return allow_one;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// True when every prime divisor of `n` lies in `primes`.
pub fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    pi_part(n, primes) == n
}
