//! Twin pairs: two orthogonal integer vectors of equal norm.
//!
//! Every twin pair is `(αzjᾱ, αzkᾱ)` for a Hurwitz `α` and a Gaussian `z`;
//! with `z` squarefree the pair `(α, z)` is unique up to `(αρ, ρ²z)` for
//! the four Gaussian units `ρ`. Everything else here — counting, listing
//! the twins of a vector, extending to an icube, twin-completeness — is
//! built on that parameterization.

use std::fmt;

use crate::arith;
use crate::decomp::represent_pure;
use crate::error::{Error, Result};
use crate::euler::euler_entries;
use crate::gaussian::{g_squarefree_split, GInt, UNITS};
use crate::hurwitz::{hq_enumerate_norm, hq_left_divisor_norm_p, hq_units, HQuat};
use crate::lattice::{self, Budget, CubicLattice, Vec3};

/// Squarefree numbers that are sums of at most two positive squares but
/// not of three; conjecturally the complete list.
pub const CONJECTURED_BASES: [i64; 9] = [1, 2, 5, 10, 13, 37, 58, 85, 130];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwinPair {
    pub theta: Vec3,
    pub eta: Vec3,
}

impl TwinPair {
    pub fn new(theta: Vec3, eta: Vec3) -> Result<Self> {
        let show = || {
            format!(
                "({}) and ({})",
                lattice::format_vector(&theta),
                lattice::format_vector(&eta)
            )
        };
        if theta == [0; 3] || eta == [0; 3] {
            return Err(Error::NotTwins(format!("{}: zero vector", show())));
        }
        if lattice::norm(&theta) != lattice::norm(&eta) {
            return Err(Error::NotTwins(format!("{}: norms differ", show())));
        }
        if lattice::dot(&theta, &eta) != 0 {
            return Err(Error::NotTwins(format!("{}: not orthogonal", show())));
        }
        Ok(TwinPair { theta, eta })
    }

    pub fn norm(&self) -> i64 {
        lattice::norm(&self.theta)
    }
}

pub fn is_twin_pair(x: &Vec3, y: &Vec3) -> bool {
    TwinPair::new(*x, *y).is_ok()
}

/// `(α, z)` with `θ = αzjᾱ`, `η = αzkᾱ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwinParam {
    pub alpha: HQuat,
    pub z: GInt,
    /// `z` is squarefree and the representative is the canonical one of its
    /// four-element class.
    pub canonical: bool,
}

impl TwinParam {
    pub fn twins(&self) -> Result<TwinPair> {
        make_twins(&self.alpha, self.z)
    }

    /// The four equivalent parameters `(αρ, ρ²z)`, `ρ = 1, i, −1, −i`.
    pub fn equivalents(&self) -> [TwinParam; 4] {
        UNITS.map(|rho| TwinParam {
            alpha: self.alpha * HQuat::from(rho),
            z: rho * rho * self.z,
            canonical: false,
        })
    }

    /// The representative whose `z` has `re > 0` (or `re = 0 < im`) and
    /// whose `α` is lexicographically largest among the remaining two.
    pub fn canonicalize(&self) -> TwinParam {
        let mut best = self
            .equivalents()
            .into_iter()
            .filter(|p| p.z.re > 0 || (p.z.re == 0 && p.z.im > 0))
            .max_by_key(|p| p.alpha.doubled())
            .expect("z is nonzero");
        best.canonical = crate::gaussian::is_squarefree(best.z);
        best
    }
}

impl fmt::Display for TwinParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} z={}", self.alpha, self.z)
    }
}

/// `z·j = aj + bk` for `z = a + bi`.
fn zj(z: GInt) -> HQuat {
    HQuat::new(0, 0, z.re, z.im)
}

/// `z·k = −bj + ak`.
fn zk(z: GInt) -> HQuat {
    HQuat::new(0, 0, -z.im, z.re)
}

fn vec_of(q: &HQuat) -> Vec3 {
    q.vector().expect("pure Lipschitz by construction")
}

/// The twin pair parameterized by `(α, z)`.
pub fn make_twins(alpha: &HQuat, z: GInt) -> Result<TwinPair> {
    if alpha.is_zero() {
        return Err(Error::Zero("alpha"));
    }
    if z.is_zero() {
        return Err(Error::Zero("z"));
    }
    Ok(TwinPair {
        theta: vec_of(&alpha.sandwich(&zj(z))),
        eta: vec_of(&alpha.sandwich(&zk(z))),
    })
}

/// The canonical squarefree parameter `(α, z)` of a twin pair.
///
/// While some `p²` divides the common norm: if `p` divides both vectors it
/// moves into an integer factor of `z`; otherwise a left divisor `π` of
/// norm `p` of a vector not divisible by `p` is common to both, and both
/// are replaced by `π̄(·)π/p²` while `α` absorbs `π`. At squarefree norm
/// `n` the product `θη` is `n` times a unit, which a unit change of `α`
/// turns into `i`, leaving `θ = z₁j`. Squares are then moved out of `z`
/// into `α`.
pub fn parameterize_twins(theta: &Vec3, eta: &Vec3) -> Result<TwinParam> {
    let pair = TwinPair::new(*theta, *eta)?;
    let mut th = HQuat::pure(pair.theta);
    let mut et = HQuat::pure(pair.eta);
    let mut alpha = HQuat::ONE;
    let mut d = 1;
    while let Some(p) = arith::factorize(th.norm())
        .into_iter()
        .find(|&(_, e)| e >= 2)
        .map(|(p, _)| p)
    {
        let (pt, pe) = (th.divisible_by(p), et.divisible_by(p));
        if pt && pe {
            d *= p;
            th = th.div_int(p).expect("checked");
            et = et.div_int(p).expect("checked");
            continue;
        }
        let pi = hq_left_divisor_norm_p(if pt { &et } else { &th }, p)?;
        let reduce = |x: &HQuat| {
            (pi.conj() * *x * pi)
                .div_int(p * p)
                .expect("common conjugating divisor")
        };
        th = reduce(&th);
        et = reduce(&et);
        alpha = alpha * pi;
    }
    let n = th.norm();
    let eps = (th * et).div_int(n).expect("θη is n times a unit");
    let u = *hq_units()
        .iter()
        .find(|u| u.conj() * eps * **u == HQuat::I)
        .expect("units act transitively on ±i, ±j, ±k");
    alpha = alpha * u;
    let th = u.conj() * th * u;
    let [_, c, dd] = vec_of(&th);
    let z1 = GInt::new(c, dd);
    let z = z1 * GInt::from_int(d);
    let (s, t, unit) = g_squarefree_split(z)?;
    let param = TwinParam {
        alpha: alpha * HQuat::from(s),
        z: unit * t,
        canonical: true,
    }
    .canonicalize();
    debug_assert_eq!(param.twins().ok(), Some(pair));
    Ok(param)
}

/// `Twin(M)`: the number of ordered twin pairs of norm `M`.
pub fn twin_count(m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::NotPositive("norm"));
    }
    let mut out = 24;
    for (p, e) in arith::factorize(m) {
        let half = e / 2;
        let even =
            arith::sigma(arith::pow(p, half)) + arith::sigma(if half == 0 { 0 } else { arith::pow(p, half - 1) });
        out *= match (p % 4, e % 2) {
            (2, _) => 1,
            (1, 0) => even,
            (1, _) => 2 * arith::sigma(arith::pow(p, half)),
            (_, 0) => even,
            _ => 0,
        };
    }
    Ok(out)
}

/// The unique cubic lattice of edge length `m` containing a primitive `x`
/// of norm `nm²` (`n` squarefree), spanned by the columns of `E(α)`.
pub fn max_cubic_lattice(x: &Vec3) -> Result<CubicLattice> {
    if *x == [0; 3] {
        return Err(Error::Zero("vector"));
    }
    if lattice::content(x) != 1 {
        return Err(Error::NotPrimitive(lattice::format_vector(x)));
    }
    let rep = represent_pure(&HQuat::pure(*x))?;
    let cols = crate::euler::columns(&euler_entries(&rep.alpha));
    CubicLattice::new(cols, Some(rep.alpha))
}

/// Every `y` forming a twin pair with `x`, sorted.
///
/// For primitive `x` the twins are read off the coordinates of `x` in
/// [`max_cubic_lattice`]: three nonzero coordinates give none, one zero
/// coordinate gives the quarter turns `±(…)` within that plane, and a
/// single nonzero coordinate gives the four other lattice axes. Other
/// vectors are searched exhaustively within the default budget.
pub fn twins_of(x: &Vec3) -> Result<Vec<Vec3>> {
    twins_of_with(x, &Budget::default())
}

pub fn twins_of_with(x: &Vec3, budget: &Budget) -> Result<Vec<Vec3>> {
    if *x == [0; 3] {
        return Err(Error::Zero("vector"));
    }
    let mut out = if lattice::content(x) == 1 {
        primitive_twins(x)?
    } else {
        let n = lattice::norm(x);
        let limit = budget.limit(3)?;
        if n > limit {
            return Err(Error::BudgetExceeded { norm: n, dim: 3, limit });
        }
        lattice::vectors3_of_norm(n)
            .into_iter()
            .filter(|y| lattice::dot(x, y) == 0)
            .collect()
    };
    out.sort();
    Ok(out)
}

fn primitive_twins(x: &Vec3) -> Result<Vec<Vec3>> {
    let lat = max_cubic_lattice(x)?;
    let c = lat.coordinates(x).expect("x lies in its lattice");
    let zeros: Vec<usize> = (0..3).filter(|&i| c[i] == 0).collect();
    let b = &lat.basis;
    Ok(match zeros.len() {
        0 => Vec::new(),
        1 => {
            let (i, j) = match zeros[0] {
                0 => (1, 2),
                1 => (2, 0),
                _ => (0, 1),
            };
            // x = c_i b_i + c_j b_j turns into −c_j b_i + c_i b_j
            let y = lattice::add(&lattice::scale(&b[i], -c[j]), &lattice::scale(&b[j], c[i]));
            vec![y, lattice::scale(&y, -1)]
        }
        _ => {
            let k = (0..3).find(|i| c[*i] != 0).expect("x is nonzero");
            (0..3)
                .filter(|&i| i != k)
                .flat_map(|i| [lattice::scale(&b[i], c[k]), lattice::scale(&b[i], -c[k])])
                .collect()
        }
    })
}

/// Completes a twin pair of integer length `m` to an icube with
/// `(x × y)/m`.
pub fn extend_to_icube(x: &Vec3, y: &Vec3) -> Result<Vec3> {
    let pair = TwinPair::new(*x, *y)?;
    let m = arith::exact_sqrt(pair.norm()).ok_or(Error::NotExtendable(pair.norm()))?;
    Ok(lattice::div_exact(&lattice::cross(x, y), m).expect("the cross product of twins is divisible by their length"))
}

/// Why a number is or is not twin-complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The number has the shape `4^a(8k+7)`, so no vector has that norm.
    NoVectors,
    /// The squarefree part is `a² + b²` (`b` may be 0) and not a sum of
    /// three positive squares.
    TwoSquares { a: i64, b: i64 },
    /// `base` has three nonzero coordinates and squarefree norm, so it has
    /// no twin; `vector` is a twinless vector of the full norm built from it.
    Witness { base: Vec3, vector: Vec3 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinCompleteness {
    pub n: i64,
    pub squarefree_part: i64,
    pub verdict: bool,
    pub certificate: Certificate,
}

fn two_squares(n: i64) -> Option<(i64, i64)> {
    (0..=arith::isqrt(n / 2)).find_map(|b| arith::exact_sqrt(n - b * b).map(|a| (a, b)))
}

fn three_positive_squares(n: i64) -> Option<Vec3> {
    for a in 1..=arith::isqrt(n / 3) {
        for b in a..=arith::isqrt((n - a * a) / 2) {
            if let Some(c) = arith::exact_sqrt(n - a * a - b * b) {
                if c >= b {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// `αθᾱ` with `N(α) = m` odd and the result primitive, for primitive `θ`.
fn primitive_conjugate(theta: &Vec3, m: i64) -> Vec3 {
    let mut cur = HQuat::pure(*theta);
    for (p, e) in arith::factorize(m) {
        for _ in 0..e {
            cur = hq_enumerate_norm(p)
                .expect("p is positive")
                .into_iter()
                .map(|a| a.sandwich(&cur))
                .find(|q| !q.divisible_by(p))
                .expect("some α of norm p keeps the vector primitive");
        }
    }
    vec_of(&cur)
}

/// Decides whether every vector of norm `N` has a twin (and some such
/// vector exists), by reduction to the squarefree part.
pub fn is_twin_complete(big_n: i64) -> Result<TwinCompleteness> {
    if big_n < 1 {
        return Err(Error::NotPositive("N"));
    }
    let (n, m) = arith::squarefree_split(big_n);
    let report = |verdict, certificate| TwinCompleteness {
        n: big_n,
        squarefree_part: n,
        verdict,
        certificate,
    };
    if arith::is_excluded_from_three_squares(big_n) {
        return Ok(report(false, Certificate::NoVectors));
    }
    if let Some(base) = three_positive_squares(n) {
        let k = arith::valuation(m, 2);
        let odd = m >> k;
        let vector = lattice::scale(&primitive_conjugate(&base, odd), 1 << k);
        return Ok(report(false, Certificate::Witness { base, vector }));
    }
    let (a, b) = two_squares(n).expect("a sum of three squares with a zero term");
    Ok(report(true, Certificate::TwoSquares { a, b }))
}

/// All twin-complete numbers up to `limit`.
pub fn twin_complete_list(limit: i64) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for n in 1..=limit {
        if is_twin_complete(n)?.verdict {
            out.push(n);
        }
    }
    Ok(out)
}

/// `{1, 2, 5, 10, 13, 37, 58, 85, 130}·m²` up to `limit`, sorted.
pub fn conjectured_twin_complete(limit: i64) -> Vec<i64> {
    let mut out: Vec<i64> = CONJECTURED_BASES
        .iter()
        .flat_map(|&b| (1..).map(move |m| b * m * m).take_while(move |&x| x <= limit))
        .collect();
    out.sort();
    out
}
