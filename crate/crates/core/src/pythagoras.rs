//! Euler parameters of Pythagorean quadruples `a² + b² + c² = d²`, found
//! with one Gaussian gcd.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::gaussian::{g_gcd, GInt, UNITS};

/// A primitive quadruple in normal form: `gcd(a, b, c) = 1`, `a` odd,
/// `d > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PythQuadruple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl PythQuadruple {
    /// Validates the normal form, naming the first violated condition.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let show = || format!("({a},{b},{c},{d})");
        if a * a + b * b + c * c != d * d {
            return Err(Error::NotNormalForm(format!("{}: a²+b²+c² ≠ d²", show())));
        }
        if arith::gcd_all(&[a, b, c]) != 1 {
            return Err(Error::NotNormalForm(format!("{}: gcd(a,b,c) ≠ 1", show())));
        }
        if a % 2 == 0 {
            return Err(Error::NotNormalForm(format!("{}: a is even", show())));
        }
        if d <= 0 {
            return Err(Error::NotNormalForm(format!("{}: d is not positive", show())));
        }
        Ok(PythQuadruple { a, b, c, d })
    }

    /// The quadruple given by Euler parameters.
    pub fn from_params(params: &EulerParams) -> PythQuadruple {
        let [m, n, p, q] = params.0;
        PythQuadruple {
            a: m * m + n * n - p * p - q * q,
            b: 2 * (m * q + n * p),
            c: 2 * (n * q - m * p),
            d: m * m + n * n + p * p + q * q,
        }
    }
}

impl fmt::Display for PythQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

/// `(m, n, p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerParams(pub [i64; 4]);

impl EulerParams {
    pub fn first(&self) -> GInt {
        GInt::new(self.0[0], self.0[1])
    }

    pub fn second(&self) -> GInt {
        GInt::new(self.0[2], self.0[3])
    }
}

impl fmt::Display for EulerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [m, n, p, q] = self.0;
        write!(f, "{m} {n} {p} {q}")
    }
}

/// How an arbitrary nonzero solution was brought to normal form: divide by
/// `content`, move coordinate `odd_index` to the front, and multiply `d` by
/// `d_sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub content: i64,
    pub odd_index: usize,
    pub d_sign: i64,
}

/// Brings any solution with `d ≠ 0` to normal form. The odd coordinate is
/// swapped into first place; the other two keep their relative order.
pub fn normalize_quadruple(a: i64, b: i64, c: i64, d: i64) -> Result<(PythQuadruple, Normalization)> {
    if a * a + b * b + c * c != d * d {
        return Err(Error::NotNormalForm(format!("({a},{b},{c},{d}): a²+b²+c² ≠ d²")));
    }
    if d == 0 {
        return Err(Error::Zero("d"));
    }
    let g = arith::gcd_all(&[a, b, c]);
    let v = [a / g, b / g, c / g];
    let odd_index = (0..3).find(|&i| v[i] % 2 != 0).expect("exactly one of a, b, c is odd");
    let rest: Vec<i64> = (0..3).filter(|&i| i != odd_index).map(|i| v[i]).collect();
    let d_sign = d.signum();
    let q = PythQuadruple::new(v[odd_index], rest[0], rest[1], d.abs() / g)?;
    Ok((
        q,
        Normalization {
            content: g,
            odd_index,
            d_sign,
        },
    ))
}

fn gcd_nonzero(xs: &[GInt]) -> Option<GInt> {
    xs.iter()
        .filter(|z| !z.is_zero())
        .try_fold(None, |acc: Option<GInt>, &z| {
            Some(Some(match acc {
                None => z.canonical(),
                Some(g) => g_gcd(g, z).ok()?,
            }))
        })?
}

/// All `(m, n, p, q)` with `x = N(m+ni)`, `y = N(p+qi)` and
/// `γ = (m+ni)(p+qi)`, given `xy = N(γ)` and `gcd(x, y, γ, γ̄) = 1`.
///
/// `m+ni` is `gcd(x, γ)` times each unit `1, i, −1, −i` in turn, and `p+qi`
/// the matching cofactor. When `x = 0` the first factor is 0 and the
/// second runs through the conjugate units.
pub fn gauss_product_param(x: i64, y: i64, gamma: GInt) -> Result<[EulerParams; 4]> {
    if x < 0 || y < 0 {
        return Err(Error::NotPositive("x and y"));
    }
    if x * y != gamma.norm() {
        return Err(Error::GcdCondition(format!("{x}·{y} ≠ N({gamma})")));
    }
    let g = gcd_nonzero(&[GInt::from_int(x), GInt::from_int(y), gamma, gamma.conj()]);
    if g != Some(GInt::ONE) {
        return Err(Error::GcdCondition(format!(
            "gcd({x}, {y}, {gamma}, {}) ≠ 1",
            gamma.conj()
        )));
    }
    let pack = |f: GInt, s: GInt| EulerParams([f.re, f.im, s.re, s.im]);
    if x == 0 {
        return Ok(UNITS.map(|rho| pack(GInt::ZERO, rho.conj())));
    }
    let theta = g_gcd(GInt::from_int(x), gamma)?;
    let eta = gamma.div_exact(theta).expect("gcd divides γ");
    if theta.norm() != x || eta.norm() != y {
        return Err(Error::GcdCondition(format!(
            "gcd({x}, {gamma}) = {theta} has norm ≠ {x}"
        )));
    }
    Ok(UNITS.map(|rho| pack(theta * rho, eta * rho.conj())))
}

/// The four Euler parameterizations of a normal-form quadruple.
pub fn euler_param(q: &PythQuadruple) -> Result<[EulerParams; 4]> {
    let q = PythQuadruple::new(q.a, q.b, q.c, q.d)?;
    let x = (q.d + q.a) / 2;
    let y = (q.d - q.a) / 2;
    let gamma = GInt::new(-q.c / 2, q.b / 2);
    let out = gauss_product_param(x, y, gamma)?;
    debug_assert!(out.iter().all(|p| PythQuadruple::from_params(p) == q));
    Ok(out)
}

/// Normal-form quadruples with the given odd `d`, one per class under sign
/// changes of `b, c` and swapping them: `a > 0` and `0 ≤ b ≤ c`.
pub fn quadruples_with_d(d: i64) -> Result<Vec<PythQuadruple>> {
    if d < 1 {
        return Err(Error::NotPositive("d"));
    }
    if d % 2 == 0 {
        return Err(Error::NotOdd("d"));
    }
    let mut out = Vec::new();
    for a in (1..=d).step_by(2) {
        let rest = d * d - a * a;
        for b in 0..=arith::isqrt(rest / 2) {
            if let Some(c) = arith::exact_sqrt(rest - b * b) {
                if let Ok(q) = PythQuadruple::new(a, b, c, d) {
                    out.push(q);
                }
            }
        }
    }
    Ok(out)
}

/// Every normal-form quadruple with the given odd `d`, all signs of
/// `a, b, c` included.
pub fn all_quadruples_with_d(d: i64) -> Result<Vec<PythQuadruple>> {
    let mut out = Vec::new();
    for q in quadruples_with_d(d)? {
        for (b, c) in [(q.b, q.c), (q.c, q.b)] {
            for sa in [1, -1] {
                for sb in [1, -1] {
                    for sc in [1, -1] {
                        out.push(PythQuadruple {
                            a: sa * q.a,
                            b: sb * b,
                            c: sc * c,
                            d,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
