//! Small integer helpers shared by the algebra modules.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_divisors(q)[0];
    let mut e = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// Multiplicative order of `q` modulo `n` (`n >= 1`, `gcd(q, n) = 1`).
pub fn multiplicative_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let base = q % n;
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = x * base % n;
        k += 1;
    }
    k
}

/// The `q`-cyclotomic cosets of `Z_n`, each sorted, ordered by smallest member.
pub fn cyclotomic_cosets(q: u64, n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = ((i as u64 * q) % n as u64) as usize;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}
