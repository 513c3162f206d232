//! Pure quaternions as `δ = g·αβᾱ`, the divisibility of `αβᾱ` by a prime,
//! and the closed-form counts of (primitive) vectors of a given norm.

use std::collections::BTreeSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::hurwitz::{hq_left_divisor_norm_p, hq_right_divisor_norm_p, hq_units, HQuat};
use crate::lattice::{self, Budget};

/// `δ = content · α β ᾱ` with `N(α) = m` and `β` pure of squarefree norm
/// `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureRepresentation {
    pub alpha: HQuat,
    pub beta: HQuat,
    pub content: i64,
    pub m: i64,
    pub n: i64,
}

impl PureRepresentation {
    pub fn delta(&self) -> HQuat {
        self.alpha.sandwich(&self.beta) * self.content
    }
}

/// Writes a nonzero pure Lipschitz `δ` as `g·αβᾱ`.
///
/// The integer content `g` is removed first. For the primitive rest, of
/// norm `n·m²`, one left divisor `π` of norm `p` is peeled per prime
/// factor of `m`, replacing `δ` by `π̄δπ/p²`. Finally `α` is replaced by
/// the lexicographically largest right associate `αu` (and `β` by `ūβu`);
/// when `n = 1` only units with `ūβu = i` are allowed, so `β = i`.
pub fn represent_pure(delta: &HQuat) -> Result<PureRepresentation> {
    let v = delta.vector().ok_or_else(|| Error::NotPure(delta.to_string()))?;
    let (g, prim) = lattice::primitive_split(&v)?;
    let (n, m) = arith::squarefree_split(lattice::norm(&prim));
    let mut core = HQuat::pure(prim);
    let mut alpha = HQuat::ONE;
    for (p, e) in arith::factorize(m) {
        for _ in 0..e {
            let pi = hq_left_divisor_norm_p(&core, p)?;
            core = (pi.conj() * core * pi)
                .div_int(p * p)
                .expect("δ = πδ₁π̄ with δ₁ integral");
            alpha = alpha * pi;
        }
    }
    let (alpha, beta) = canonical_pair(&alpha, &core, n == 1);
    let rep = PureRepresentation {
        alpha,
        beta,
        content: g,
        m,
        n,
    };
    debug_assert_eq!(rep.delta(), *delta);
    Ok(rep)
}

fn canonical_pair(alpha: &HQuat, beta: &HQuat, force_i: bool) -> (HQuat, HQuat) {
    hq_units()
        .iter()
        .map(|&u| (*alpha * u, u.conj() * *beta * u))
        .filter(|(_, b)| !force_i || *b == HQuat::I)
        .max_by_key(|(a, _)| a.doubled())
        .expect("some unit conjugates a unit pure quaternion to i")
}

/// Why `p` does or does not divide `αβᾱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisibilityCase {
    /// `p | α` or `p | β`.
    AlphaOrBetaDivisible,
    /// `p = 2` divides `N(α)`.
    TwoDividesNorm,
    /// `p > 2`, `π` is a right divisor of `α` of norm `p`, and `π̄` left
    /// divides `h + β`.
    Witness {
        pi: HQuat,
        h: i64,
    },
    NotDivisible,
}

impl DivisibilityCase {
    pub fn divides(&self) -> bool {
        !matches!(self, DivisibilityCase::NotDivisible)
    }
}

/// Decides whether the prime `p` divides `αβᾱ` for a pure `β`, and why.
pub fn divisibility_analysis(alpha: &HQuat, beta: &HQuat, p: i64) -> Result<DivisibilityCase> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !beta.is_pure() {
        return Err(Error::NotPure(beta.to_string()));
    }
    if alpha.divisible_by(p) || beta.divisible_by(p) {
        return Ok(DivisibilityCase::AlphaOrBetaDivisible);
    }
    if alpha.norm() % p != 0 {
        return Ok(DivisibilityCase::NotDivisible);
    }
    if p == 2 {
        return Ok(DivisibilityCase::TwoDividesNorm);
    }
    let pi = hq_right_divisor_norm_p(alpha, p)?;
    let witness = (0..p).find(|&h| pi.conj().left_divides(&(HQuat::from_int(h) + *beta)));
    Ok(match witness {
        Some(h) => DivisibilityCase::Witness { pi, h },
        None => DivisibilityCase::NotDivisible,
    })
}

fn count_enumerated(n: i64, primitive_only: bool) -> Result<i64> {
    let limit = Budget::default().dim3;
    if n > limit {
        return Err(Error::BudgetExceeded { norm: n, dim: 3, limit });
    }
    Ok(lattice::vectors3_of_norm(n)
        .iter()
        .filter(|v| !primitive_only || lattice::content(&v[..]) == 1)
        .count() as i64)
}

/// `p(nm²)`, the number of primitive vectors of norm `nm²` for squarefree
/// `n`. The squarefree base value `p(n)` is counted directly.
pub fn count_primitive_vectors(n: i64, m: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::NotPositive("n"));
    }
    if m < 1 {
        return Err(Error::NotPositive("m"));
    }
    if !arith::is_squarefree(n) {
        return Err(Error::NotSquarefree(n));
    }
    if m % 2 == 0 {
        return Ok(0);
    }
    let base = count_enumerated(n, true)?;
    Ok(arith::factorize(m).into_iter().fold(base, |acc, (p, l)| {
        acc * (arith::pow(p, l) - arith::legendre(-n, p) * arith::pow(p, l - 1))
    }))
}

/// `s(M)`, the number of all vectors of norm `M`.
pub fn count_all_vectors(big_m: i64) -> Result<i64> {
    if big_m < 1 {
        return Err(Error::NotPositive("norm"));
    }
    let (n, m) = arith::squarefree_split(big_m);
    let base = count_enumerated(n, false)?;
    Ok(arith::factorize(m)
        .into_iter()
        .filter(|&(p, _)| p != 2)
        .fold(base, |acc, (p, l)| {
            acc * (arith::sigma(arith::pow(p, l)) - arith::legendre(-n, p) * arith::sigma(arith::pow(p, l - 1)))
        }))
}

/// Number of distinct `εβε⁻¹` over the 24 units.
pub fn conjugate_orbit_size(beta: &HQuat) -> usize {
    hq_units()
        .iter()
        .map(|u| u.sandwich(beta).doubled())
        .collect::<BTreeSet<_>>()
        .len()
}

/// Number of distinct `αβᾱ` with `N(α) = p^l` that are not divisible by
/// `p`, for a pure `β` not divisible by the prime `p`.
pub fn count_nondivisible_conjugates(beta: &HQuat, p: i64, l: u32) -> Result<i64> {
    if !beta.is_pure() || beta.is_zero() {
        return Err(Error::NotPure(beta.to_string()));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if l == 0 {
        return Err(Error::NotPositive("l"));
    }
    if beta.divisible_by(p) {
        return Err(Error::PDividesAlpha {
            alpha: beta.to_string(),
            p,
        });
    }
    if p == 2 {
        return Ok(0);
    }
    let e = conjugate_orbit_size(beta) as i64;
    let (hi, lo) = (arith::pow(p, l), arith::pow(p, l - 1));
    let nb = beta.norm();
    Ok(if nb % p == 0 {
        e * hi
    } else if arith::legendre(-nb, p) == 1 {
        e * (hi - lo)
    } else {
        e * (hi + lo)
    })
}
