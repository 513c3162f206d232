//! Rational-integer helpers: trial-division factoring, divisor sums,
//! squarefree splitting and the Legendre symbol.
//!
//! Everything here is sized for desk-scale inputs; factoring is plain trial
//! division.

/// Nonnegative gcd of two integers; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Gcd of all entries of a slice.
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0, |g, &x| gcd(g, x))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative number");
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `Some(r)` when `n = r²`.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

pub fn is_prime(n: i64) -> bool {
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

/// Prime factorization of `n >= 1` as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    assert!(n >= 1, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn pow(base: i64, exp: u32) -> i64 {
    base.pow(exp)
}

/// σ(n), the sum of positive divisors. `sigma(0)` is defined as 0 so that
/// σ(p^(ℓ−1)) with ℓ = 0 never arises silently.
pub fn sigma(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .map(|(p, e)| (pow(p, e + 1) - 1) / (p - 1))
        .product()
}

/// Sum of odd positive divisors of `n`.
pub fn sigma_odd(n: i64) -> i64 {
    let mut m = n;
    while m % 2 == 0 {
        m /= 2;
    }
    sigma(m)
}

/// Writes `n = squarefree · m²` and returns `(squarefree, m)`.
pub fn squarefree_split(n: i64) -> (i64, i64) {
    let mut sf = 1;
    let mut m = 1;
    for (p, e) in factorize(n) {
        m *= pow(p, e / 2);
        if e % 2 == 1 {
            sf *= p;
        }
    }
    (sf, m)
}

pub fn is_squarefree(n: i64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by exhaustive squaring.
/// Returns 0 when `p | a`.
pub fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    if (1..p).any(|x| (x * x) % p == a) {
        1
    } else {
        -1
    }
}

/// True when `n` has the shape `4^a (8k + 7)`, i.e. is not a sum of three
/// squares.
pub fn is_excluded_from_three_squares(n: i64) -> bool {
    let mut n = n;
    if n <= 0 {
        return false;
    }
    while n % 4 == 0 {
        n /= 4;
    }
    n % 8 == 7
}

/// Exponent of the prime `p` in `n != 0`.
pub fn valuation(n: i64, p: i64) -> u32 {
    let mut n = n.abs();
    let mut e = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Division rounded to the nearest integer, ties toward +∞. `den > 0`.
pub(crate) fn round_half_up(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    (2 * num + den).div_euclid(2 * den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_sums() {
        assert_eq!(sigma(1), 1);
        assert_eq!(sigma(12), 28);
        assert_eq!(sigma_odd(12), 4);
        assert_eq!(sigma_odd(6), 4);
        assert_eq!(sigma(0), 0);
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_split(245), (5, 7));
        assert_eq!(squarefree_split(72), (2, 6));
        assert_eq!(squarefree_split(1), (1, 1));
        assert!(is_squarefree(130));
        assert!(!is_squarefree(18));
    }

    #[test]
    fn legendre_symbols() {
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 3), -1);
        assert_eq!(legendre(-2, 3), 1);
        assert_eq!(legendre(-5, 5), 0);
    }

    #[test]
    fn three_square_exclusion() {
        let excluded: Vec<i64> = (1..=40).filter(|&n| is_excluded_from_three_squares(n)).collect();
        assert_eq!(excluded, vec![7, 15, 23, 28, 31, 39]);
    }

    #[test]
    fn extended_gcd() {
        for (a, b) in [(240, 46), (-7, 3), (0, 5), (5, 0), (3, -12)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(g, gcd(a, b));
            assert_eq!(a * x + b * y, g);
        }
    }

    #[test]
    fn rounding_ties_go_up() {
        assert_eq!(round_half_up(5, 2), 3);
        assert_eq!(round_half_up(-5, 2), -2);
        assert_eq!(round_half_up(7, 5), 1);
        assert_eq!(round_half_up(-14, 5), -3);
    }
}
