//! Gaussian integers: Euclidean division, gcd, prime factorization and
//! squarefree splitting in `Z[i]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::arith::{self, round_half_up};
use crate::error::{Error, Result};

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GInt {
    pub re: i64,
    pub im: i64,
}

/// The four units in their canonical order `1, i, −1, −i`.
pub const UNITS: [GInt; 4] = [
    GInt { re: 1, im: 0 },
    GInt { re: 0, im: 1 },
    GInt { re: -1, im: 0 },
    GInt { re: 0, im: -1 },
];

impl GInt {
    pub const ZERO: GInt = GInt { re: 0, im: 0 };
    pub const ONE: GInt = GInt { re: 1, im: 0 };
    pub const I: GInt = GInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GInt { re, im }
    }

    pub const fn from_int(re: i64) -> Self {
        GInt { re, im: 0 }
    }

    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(self) -> Self {
        GInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(self, d: GInt) -> Option<GInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let p = self * d.conj();
        (p.re % n == 0 && p.im % n == 0).then(|| GInt::new(p.re / n, p.im / n))
    }

    pub fn divides(self, other: GInt) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// The associate with `re > 0, im >= 0`; zero maps to zero.
    pub fn canonical(self) -> GInt {
        if self.is_zero() {
            return self;
        }
        UNITS
            .iter()
            .map(|&u| self * u)
            .find(|z| z.re > 0 && z.im >= 0)
            .expect("exactly one associate lies in the first quadrant")
    }

    /// True for associates of each other.
    pub fn is_associate(self, other: GInt) -> bool {
        UNITS.iter().any(|&u| self * u == other)
    }
}

impl Add for GInt {
    type Output = GInt;
    fn add(self, o: GInt) -> GInt {
        GInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GInt {
    type Output = GInt;
    fn sub(self, o: GInt) -> GInt {
        GInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GInt {
    type Output = GInt;
    fn mul(self, o: GInt) -> GInt {
        GInt::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for GInt {
    type Output = GInt;
    fn neg(self) -> GInt {
        GInt::new(-self.re, -self.im)
    }
}

impl From<i64> for GInt {
    fn from(re: i64) -> Self {
        GInt::from_int(re)
    }
}

impl fmt::Display for GInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0 {
            write!(f, "{}", self.re)
        } else if self.im < 0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl FromStr for GInt {
    type Err = Error;

    /// Accepts `a`, `a+bi`, `a-bi`, `bi` and `i`-shorthands such as `2+i`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "Gaussian integer",
            input: s.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return t.parse::<i64>().map(GInt::from_int).map_err(|_| err());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re = re_part.parse::<i64>().map_err(|_| err())?;
        let im = match im_part {
            "" | "+" => 1,
            "-" => -1,
            other => other.parse::<i64>().map_err(|_| err())?,
        };
        Ok(GInt::new(re, im))
    }
}

/// Euclidean division `a = b·q + r` with `norm(r) <= norm(b)/2`.
///
/// `q` rounds each coordinate of `a/b` to the nearest integer, ties toward
/// +∞ independently per coordinate.
pub fn g_divmod(a: GInt, b: GInt) -> Result<(GInt, GInt)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let num = a * b.conj();
    let n = b.norm() as i128;
    let q = GInt::new(
        round_half_up(num.re as i128, n) as i64,
        round_half_up(num.im as i128, n) as i64,
    );
    Ok((q, a - b * q))
}

/// Generator of the ideal `(a, b)`, canonicalized to `re > 0, im >= 0`.
pub fn g_gcd(a: GInt, b: GInt) -> Result<GInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Zero("gcd argument"));
    }
    let (mut x, mut y) = (a, b);
    while !y.is_zero() {
        let (_, r) = g_divmod(x, y)?;
        (x, y) = (y, r);
    }
    Ok(x.canonical())
}

/// Factorization `z = unit · ∏ primeᵉ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFactorization {
    pub unit: GInt,
    pub factors: Vec<(GInt, u32)>,
}

impl GFactorization {
    pub fn product(&self) -> GInt {
        self.factors
            .iter()
            .fold(self.unit, |acc, &(p, e)| (0..e).fold(acc, |a, _| a * p))
    }
}

/// Canonical Gaussian prime above `p ≡ 1 (mod 4)` with `re > im > 0`.
fn split_prime(p: i64) -> Result<GInt> {
    let x = (1..p).find(|&x| (x * x + 1) % p == 0).ok_or(Error::NotPrime(p))?;
    let g = g_gcd(GInt::from_int(p), GInt::new(x, 1))?;
    Ok(normalize_prime(g))
}

/// The associate with `re > |im|`, used for primes of odd norm.
fn normalize_prime(z: GInt) -> GInt {
    UNITS.iter().map(|&u| z * u).find(|w| w.re > w.im.abs()).unwrap_or(z)
}

/// Factors `z` into canonical Gaussian primes: `1+i`, rational primes
/// `q ≡ 3 (mod 4)`, and for each `p ≡ 1 (mod 4)` the two conjugates with
/// `re > |im| > 0`. Factors are listed by increasing norm, then by
/// decreasing imaginary part.
pub fn g_factor(z: GInt) -> Result<GFactorization> {
    if z.is_zero() {
        return Err(Error::Zero("factored Gaussian integer"));
    }
    let mut rest = z;
    let mut factors = Vec::new();
    let mut take = |rest: &mut GInt, prime: GInt| {
        let mut e = 0;
        while let Some(q) = rest.div_exact(prime) {
            *rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((prime, e));
        }
    };
    for (p, _) in arith::factorize(z.norm()) {
        if p == 2 {
            take(&mut rest, GInt::new(1, 1));
        } else if p % 4 == 3 {
            take(&mut rest, GInt::from_int(p));
        } else {
            let pi = split_prime(p)?;
            take(&mut rest, pi);
            take(&mut rest, pi.conj());
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort_by_key(|&(p, _)| (p.norm(), -p.im));
    Ok(GFactorization { unit: rest, factors })
}

/// Writes `z = u · s² · t` with `t` squarefree (a product of distinct
/// canonical primes) and `u` a unit. Returns `(s, t, u)`.
pub fn g_squarefree_split(z: GInt) -> Result<(GInt, GInt, GInt)> {
    let f = g_factor(z)?;
    let mut s = GInt::ONE;
    let mut t = GInt::ONE;
    for &(p, e) in &f.factors {
        for _ in 0..e / 2 {
            s = s * p;
        }
        if e % 2 == 1 {
            t = t * p;
        }
    }
    let u = z.div_exact(s * s * t).expect("s²t divides z by construction");
    Ok((s, t, u))
}

/// True when no Gaussian prime squared divides `z`.
pub fn is_squarefree(z: GInt) -> bool {
    match g_factor(z) {
        Ok(f) => f.factors.iter().all(|&(_, e)| e == 1),
        Err(_) => false,
    }
}
