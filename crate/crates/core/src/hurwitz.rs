//! The Hurwitz order: quaternions whose coefficients are all integers or
//! all halves of odd integers.
//!
//! Elements are stored in doubled coordinates, so `[e0, e1, e2, e3]` stands
//! for `(e0 + e1·i + e2·j + e3·k)/2` and all arithmetic stays in `i64`.
//! Divisibility `|` always means divisibility on the left, as in `α | β`
//! iff `β = α·γ` for some Hurwitz `γ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::arith::{self, round_half_up};
use crate::error::{Error, Result};
use crate::gaussian::GInt;

/// A Hurwitz integral quaternion in doubled coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HQuat {
    e: [i64; 4],
}

/// Whether a quaternion has integer coefficients, and if so whether they
/// are coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LipschitzFlag {
    pub is_lipschitz: bool,
    pub is_primitive: bool,
}

fn hamilton(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

impl HQuat {
    pub const ZERO: HQuat = HQuat { e: [0; 4] };
    pub const ONE: HQuat = HQuat { e: [2, 0, 0, 0] };
    pub const I: HQuat = HQuat { e: [0, 2, 0, 0] };
    pub const J: HQuat = HQuat { e: [0, 0, 2, 0] };
    pub const K: HQuat = HQuat { e: [0, 0, 0, 2] };
    /// `(1 + i + j + k)/2`
    pub const SIGMA: HQuat = HQuat { e: [1, 1, 1, 1] };

    /// Builds from doubled coordinates, rejecting mixed parity.
    pub fn from_doubled(e: [i64; 4]) -> Result<Self> {
        let p = e[0].rem_euclid(2);
        if e.iter().all(|x| x.rem_euclid(2) == p) {
            Ok(HQuat { e })
        } else {
            Err(Error::ParityMismatch(e))
        }
    }

    /// `a + b·i + c·j + d·k` with integer coefficients.
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        HQuat {
            e: [2 * a, 2 * b, 2 * c, 2 * d],
        }
    }

    /// The pure quaternion `x·i + y·j + z·k`.
    pub const fn pure(v: [i64; 3]) -> Self {
        HQuat::new(0, v[0], v[1], v[2])
    }

    pub const fn from_int(n: i64) -> Self {
        HQuat::new(n, 0, 0, 0)
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e == [0; 4]
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.e;
        HQuat { e: [a, -b, -c, -d] }
    }

    pub fn norm(&self) -> i64 {
        self.e.iter().map(|x| x * x).sum::<i64>() / 4
    }

    /// `α + ᾱ`, always an integer.
    pub fn trace(&self) -> i64 {
        self.e[0]
    }

    pub fn is_pure(&self) -> bool {
        self.e[0] == 0
    }

    pub fn is_lipschitz(&self) -> bool {
        self.e[0] % 2 == 0
    }

    /// Integer coefficients `[a, b, c, d]` when the quaternion is Lipschitz.
    pub fn lipschitz_coords(&self) -> Option<[i64; 4]> {
        self.is_lipschitz().then(|| self.e.map(|x| x / 2))
    }

    /// The vector `(x, y, z)` of a pure Lipschitz quaternion.
    pub fn vector(&self) -> Option<[i64; 3]> {
        match self.lipschitz_coords() {
            Some([0, x, y, z]) => Some([x, y, z]),
            _ => None,
        }
    }

    pub fn lipschitz_flag(&self) -> LipschitzFlag {
        match self.lipschitz_coords() {
            Some(c) => LipschitzFlag {
                is_lipschitz: true,
                is_primitive: arith::gcd_all(&c) == 1,
            },
            None => LipschitzFlag {
                is_lipschitz: false,
                is_primitive: false,
            },
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// `self / n` when it lies in the Hurwitz order.
    pub fn div_int(&self, n: i64) -> Option<HQuat> {
        if n == 0 || self.e.iter().any(|x| x % n != 0) {
            return None;
        }
        HQuat::from_doubled(self.e.map(|x| x / n)).ok()
    }

    /// Whether the rational integer `n` divides this quaternion in the
    /// Hurwitz order.
    pub fn divisible_by(&self, n: i64) -> bool {
        self.div_int(n).is_some()
    }

    /// `self⁻¹·other` when it is Hurwitz, i.e. when `self` left-divides `other`.
    pub fn left_quotient(&self, other: &HQuat) -> Option<HQuat> {
        if self.is_zero() {
            return other.is_zero().then_some(HQuat::ZERO);
        }
        (self.conj() * *other).div_int(self.norm())
    }

    /// `other·self⁻¹` when `self` right-divides `other`.
    pub fn right_quotient(&self, other: &HQuat) -> Option<HQuat> {
        if self.is_zero() {
            return other.is_zero().then_some(HQuat::ZERO);
        }
        (*other * self.conj()).div_int(self.norm())
    }

    pub fn left_divides(&self, other: &HQuat) -> bool {
        self.left_quotient(other).is_some()
    }

    pub fn right_divides(&self, other: &HQuat) -> bool {
        self.right_quotient(other).is_some()
    }

    /// `self · q · self̄`, the conjugation action scaled by the norm.
    pub fn sandwich(&self, q: &HQuat) -> HQuat {
        *self * *q * self.conj()
    }

    /// Gcd of the four doubled coordinates.
    pub fn doubled_content(&self) -> i64 {
        arith::gcd_all(&self.e)
    }
}

impl Add for HQuat {
    type Output = HQuat;
    fn add(self, o: HQuat) -> HQuat {
        HQuat::from_doubled(std::array::from_fn(|i| self.e[i] + o.e[i]))
            .expect("Hurwitz order is closed under addition")
    }
}

impl Sub for HQuat {
    type Output = HQuat;
    fn sub(self, o: HQuat) -> HQuat {
        self + (-o)
    }
}

impl Neg for HQuat {
    type Output = HQuat;
    fn neg(self) -> HQuat {
        HQuat { e: self.e.map(|x| -x) }
    }
}

impl Mul for HQuat {
    type Output = HQuat;
    fn mul(self, o: HQuat) -> HQuat {
        let p = hamilton(self.e, o.e);
        debug_assert!(p.iter().all(|x| x % 2 == 0));
        let e = p.map(|x| x / 2);
        debug_assert!(HQuat::from_doubled(e).is_ok());
        HQuat { e }
    }
}

impl Mul<i64> for HQuat {
    type Output = HQuat;
    fn mul(self, n: i64) -> HQuat {
        HQuat {
            e: self.e.map(|x| x * n),
        }
    }
}

impl From<GInt> for HQuat {
    fn from(z: GInt) -> Self {
        HQuat::new(z.re, z.im, 0, 0)
    }
}

fn fmt_coeff(e: i64) -> String {
    if e % 2 == 0 {
        format!("{}", e / 2)
    } else {
        format!("{}/2", e)
    }
}

impl fmt::Display for HQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_coeff(self.e[0]))?;
        for (x, unit) in self.e[1..].iter().zip(["i", "j", "k"]) {
            let sign = if *x < 0 { '-' } else { '+' };
            write!(f, "{sign}{}{unit}", fmt_coeff(x.abs()))?;
        }
        Ok(())
    }
}

impl FromStr for HQuat {
    type Err = Error;

    /// Parses sums of terms such as `1/2+1/2i+1/2j+1/2k`, `2i+j+4k`, `-3`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "quaternion",
            input: s.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let mut e = [0i64; 4];
        let mut start = 0;
        let bytes = t.as_bytes();
        let mut terms = Vec::new();
        for idx in 1..=bytes.len() {
            if idx == bytes.len() || bytes[idx] == b'+' || bytes[idx] == b'-' {
                terms.push(&t[start..idx]);
                start = idx;
            }
        }
        for term in terms {
            let (body, slot) = match term.chars().last() {
                Some('i') => (&term[..term.len() - 1], 1),
                Some('j') => (&term[..term.len() - 1], 2),
                Some('k') => (&term[..term.len() - 1], 3),
                _ => (term, 0),
            };
            let (sign, digits) = match body.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, body.strip_prefix('+').unwrap_or(body)),
            };
            let doubled = if digits.is_empty() {
                if slot == 0 {
                    return Err(err());
                }
                2
            } else if let Some(num) = digits.strip_suffix("/2") {
                num.parse::<i64>().map_err(|_| err())?
            } else {
                2 * digits.parse::<i64>().map_err(|_| err())?
            };
            e[slot] += sign * doubled;
        }
        HQuat::from_doubled(e).map_err(|_| err())
    }
}

/// The 24 units: `1, −1, i, −i, j, −j, k, −k`, then `(±1±i±j±k)/2` with the
/// signs read as a 4-bit counter (bit set = minus), so index 8 is σ.
pub fn hq_units() -> &'static [HQuat; 24] {
    static UNITS: OnceLock<[HQuat; 24]> = OnceLock::new();
    UNITS.get_or_init(|| {
        let mut out = [HQuat::ZERO; 24];
        for axis in 0..4 {
            let mut e = [0; 4];
            e[axis] = 2;
            out[2 * axis] = HQuat { e };
            out[2 * axis + 1] = -HQuat { e };
        }
        for s in 0..16usize {
            let e = std::array::from_fn(|b| if s & (8 >> b) != 0 { -1 } else { 1 });
            out[8 + s] = HQuat { e };
        }
        out
    })
}

/// Right Euclidean division `a = b·w + r` with `norm(r) < norm(b)`.
///
/// `w` is whichever of the nearest integer-coordinate point and the
/// nearest half-odd point to `b⁻¹a` is closer; ties go to the integer
/// point, and coordinate ties round toward +∞.
pub fn hq_divmod_right(a: &HQuat, b: &HQuat) -> Result<(HQuat, HQuat)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // b⁻¹a = P / D coordinatewise, with P = hamilton(conj b, a) in doubled
    // units and D = Σ b.e².
    let p = hamilton(b.conj().e, a.e).map(|x| x as i128);
    let d: i128 = b.e.iter().map(|&x| (x as i128) * (x as i128)).sum();

    let int_pt: [i128; 4] = p.map(|x| round_half_up(x, d));
    let half_pt: [i128; 4] = p.map(|x| x.div_euclid(d));
    // 4·D²·dist² for both candidates
    let dist_int: i128 = (0..4).map(|i| 4 * (p[i] - int_pt[i] * d).pow(2)).sum();
    let dist_half: i128 = (0..4).map(|i| (2 * p[i] - (2 * half_pt[i] + 1) * d).pow(2)).sum();
    let w = if dist_int <= dist_half {
        HQuat {
            e: int_pt.map(|x| 2 * x as i64),
        }
    } else {
        HQuat {
            e: half_pt.map(|x| 2 * x as i64 + 1),
        }
    };
    let r = *a - *b * w;
    debug_assert!(r.norm() < b.norm());
    Ok((w, r))
}

/// Canonical representative of the right-associate class `{a·u}`: the
/// lexicographically largest doubled-coordinate tuple. Returns it together
/// with the unit `u`.
pub fn canonical_right_associate(a: &HQuat) -> (HQuat, HQuat) {
    hq_units()
        .iter()
        .map(|&u| (*a * u, u))
        .max_by_key(|(q, _)| q.e)
        .expect("24 units")
}

/// Whether `b = a·u` for some unit `u`.
pub fn are_right_associates(a: &HQuat, b: &HQuat) -> bool {
    hq_units().iter().any(|&u| *a * u == *b)
}

/// Generator of the right ideal `aE + bE`, found with the right Euclidean
/// algorithm and canonicalized by [`canonical_right_associate`].
pub fn hq_gcd_right_ideal(a: &HQuat, b: &HQuat) -> Result<HQuat> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Zero("right ideal generator"));
    }
    let (mut x, mut y) = (*a, *b);
    while !y.is_zero() {
        let (_, r) = hq_divmod_right(&x, &y)?;
        (x, y) = (y, r);
    }
    Ok(canonical_right_associate(&x).0)
}

/// The left divisor of `a` with norm `p`, unique up to right association.
///
/// Requires `p | norm(a)` and that `a/p` is not Hurwitz.
pub fn hq_left_divisor_norm_p(a: &HQuat, p: i64) -> Result<HQuat> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a.norm() % p != 0 {
        return Err(Error::NoDivisor {
            alpha: a.to_string(),
            p,
        });
    }
    if a.divisible_by(p) {
        return Err(Error::PDividesAlpha {
            alpha: a.to_string(),
            p,
        });
    }
    let pi = hq_gcd_right_ideal(a, &HQuat::from_int(p))?;
    debug_assert_eq!(pi.norm(), p);
    debug_assert!(pi.left_divides(a));
    Ok(pi)
}

/// The right divisor of `a` with norm `p`, unique up to left association.
/// Obtained by conjugating [`hq_left_divisor_norm_p`].
pub fn hq_right_divisor_norm_p(a: &HQuat, p: i64) -> Result<HQuat> {
    hq_left_divisor_norm_p(&a.conj(), p).map(|pi| pi.conj())
}

/// First unit `u` (in [`hq_units`] order) making `a·u` Lipschitz.
pub fn hq_lipschitz_right_associate(a: &HQuat) -> Result<(HQuat, HQuat)> {
    if a.is_zero() {
        return Err(Error::Zero("quaternion"));
    }
    Ok(hq_units()
        .iter()
        .map(|&u| (*a * u, u))
        .find(|(q, _)| q.is_lipschitz())
        .expect("every Hurwitz quaternion has a Lipschitz right associate"))
}

/// All Hurwitz quaternions of norm `n`, sorted by doubled coordinates.
pub fn hq_enumerate_norm(n: i64) -> Result<Vec<HQuat>> {
    if n <= 0 {
        return Err(Error::NotPositive("norm"));
    }
    let target = 4 * n;
    let bound = arith::isqrt(target);
    let mut out = Vec::new();
    for e0 in -bound..=bound {
        let r0 = target - e0 * e0;
        let b1 = arith::isqrt(r0);
        for e1 in -b1..=b1 {
            if (e1 - e0) % 2 != 0 {
                continue;
            }
            let r1 = r0 - e1 * e1;
            let b2 = arith::isqrt(r1);
            for e2 in -b2..=b2 {
                if (e2 - e0) % 2 != 0 {
                    continue;
                }
                let r2 = r1 - e2 * e2;
                let Some(e3) = arith::exact_sqrt(r2) else {
                    continue;
                };
                if (e3 - e0) % 2 != 0 {
                    continue;
                }
                out.push(HQuat { e: [e0, e1, e2, -e3] });
                if e3 != 0 {
                    out.push(HQuat { e: [e0, e1, e2, e3] });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> HQuat {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(HQuat::I * HQuat::J, HQuat::K);
        assert_eq!(HQuat::SIGMA * HQuat::SIGMA, HQuat::SIGMA - HQuat::ONE);
        assert_eq!(q("1+i") * q("1-i"), HQuat::from_int(2));
    }

    #[test]
    fn parity_invariant_rejected() {
        assert!(HQuat::from_doubled([1, 2, 1, 1]).is_err());
        assert!(HQuat::from_doubled([1, -1, 3, 5]).is_ok());
    }

    #[test]
    fn exact_division() {
        let b = q("1+2i-j");
        for g in [q("3-k"), HQuat::SIGMA, q("-1/2+3/2i+1/2j-5/2k")] {
            let (w, r) = hq_divmod_right(&(b * g), &b).unwrap();
            assert_eq!((w, r), (g, HQuat::ZERO));
        }
    }

    #[test]
    fn division_with_remainder() {
        // b⁻¹a = 1 + j/2 − k/2: both candidates sit at squared distance
        // 1/2, the integer point wins and rounds (1, 0, ½, −½) to 1 + j.
        let (w, r) = hq_divmod_right(&q("1+i+j"), &q("1+i")).unwrap();
        assert_eq!((w, r), (q("1+j"), q("-k")));
        // (1, j) is another valid division, with the same remainder norm.
        assert_eq!(q("1+i") * HQuat::ONE + HQuat::J, q("1+i+j"));

        let (w, r) = hq_divmod_right(&HQuat::from_int(3), &q("1+i")).unwrap();
        assert_eq!((w, r), (q("2-i"), q("-i")));

        assert!(hq_divmod_right(&HQuat::ONE, &HQuat::ZERO).is_err());
    }

    #[test]
    fn right_ideal_generators() {
        let a = q("3+i-2j+k");
        assert_eq!(
            hq_gcd_right_ideal(&a, &HQuat::ZERO).unwrap(),
            canonical_right_associate(&a).0
        );
        // 1+i+j+k = 2σ, so the ideal is 2E
        assert_eq!(
            hq_gcd_right_ideal(&q("1+i+j+k"), &HQuat::from_int(2)).unwrap(),
            HQuat::from_int(2)
        );
        assert!(hq_gcd_right_ideal(&HQuat::I, &HQuat::J).unwrap().is_unit());
        assert!(hq_gcd_right_ideal(&HQuat::ZERO, &HQuat::ZERO).is_err());
    }

    #[test]
    fn norm_p_left_divisors() {
        // (1+i)(1+j) = 1+i+j+k, but 1+i+j+k = 2σ is divisible by 2.
        assert!(matches!(
            hq_left_divisor_norm_p(&q("1+i+j+k"), 2),
            Err(Error::PDividesAlpha { .. })
        ));
        let a = q("1+2i+j+k"); // (1+i)(1+j) + i, norm 7
        assert!(matches!(hq_left_divisor_norm_p(&a, 2), Err(Error::NoDivisor { .. })));
        let a = q("1+i") * q("1+2j");
        let pi = hq_left_divisor_norm_p(&a, 2).unwrap();
        assert!(are_right_associates(&pi, &q("1+i")));

        let pi = hq_left_divisor_norm_p(&q("2i+2j+k"), 3).unwrap();
        assert_eq!(pi.norm(), 3);
        assert!(are_right_associates(&pi, &q("1+j+k")));

        assert!(matches!(
            hq_left_divisor_norm_p(&q("2+2i"), 2),
            Err(Error::PDividesAlpha { .. })
        ));
    }

    #[test]
    fn unit_group() {
        let units = hq_units();
        assert_eq!(units.len(), 24);
        assert!(units.iter().all(|u| u.norm() == 1));
        assert_eq!(units[8], HQuat::SIGMA);
        for a in units {
            for b in units {
                assert!(units.contains(&(*a * *b)));
            }
            assert!(units.contains(&a.conj()));
        }
        let mut sorted = units.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
    }

    #[test]
    fn lipschitz_associates() {
        assert_eq!(
            hq_lipschitz_right_associate(&q("1+2k")).unwrap(),
            (q("1+2k"), HQuat::ONE)
        );
        let (a, u) = hq_lipschitz_right_associate(&HQuat::SIGMA).unwrap();
        assert!(a.is_lipschitz() && a.is_unit());
        assert_eq!(HQuat::SIGMA * u, a);
        let h = q("3/2+3/2i+1/2j+1/2k");
        let (a, u) = hq_lipschitz_right_associate(&h).unwrap();
        assert_eq!(a.norm(), 5);
        assert!(a.is_lipschitz());
        let first = hq_units().iter().position(|v| (h * *v).is_lipschitz()).unwrap();
        assert_eq!(u, hq_units()[first]);
        assert!(hq_lipschitz_right_associate(&HQuat::ZERO).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(hq_enumerate_norm(1).unwrap().len(), 24);
        let two = hq_enumerate_norm(2).unwrap();
        assert_eq!(two.len(), 24);
        let lambda = q("1+i");
        assert!(two.iter().all(|x| hq_units().iter().any(|u| *u * lambda == *x)));
        assert_eq!(hq_enumerate_norm(3).unwrap().len(), 96);
        assert!(hq_enumerate_norm(0).is_err());
        let six = hq_enumerate_norm(6).unwrap();
        assert!(six.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_format() {
        assert_eq!(HQuat::SIGMA.to_string(), "1/2+1/2i+1/2j+1/2k");
        assert_eq!(q("2i+j+4k").to_string(), "0+2i+1j+4k");
        assert_eq!(q("1/2-3/2i+1/2j+1/2k").to_string(), "1/2-3/2i+1/2j+1/2k");
        assert!("1-3/2i+j".parse::<HQuat>().is_err());
        for s in ["1/2+1/2i+1/2j+1/2k", "-3-1i+0j+7k", "-1/2-1/2i+3/2j-5/2k"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert!("1/2+i".parse::<HQuat>().is_err());
        assert!("1+x".parse::<HQuat>().is_err());
    }
}
