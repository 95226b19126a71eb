//! Small integer helpers; orders never exceed a few thousand.

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, k)` with `n = p^k`, `k >= 1`; `None` for `n = 1` and composite
/// non-prime-powers.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match prime_divisors(n).as_slice() {
        &[p] => Some((p, exact_log(n, p).unwrap())),
        _ => None,
    }
}

/// `k` with `p^k = n`, if it exists.
pub fn exact_log(mut n: usize, p: usize) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert_eq!(prime_divisors(96), vec![2, 3]);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(96), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(exact_log(1, 7), Some(0));
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
    }
}
