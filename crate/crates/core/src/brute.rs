//! Exhaustive-search oracles.
//!
//! Nothing in here uses a counting formula, a quaternion factorization or
//! a parameterization: each function answers its question by looking at
//! every candidate. They exist to be compared against the closed forms.

use std::collections::BTreeSet;

use crate::arith::{gcd_all, isqrt};
use crate::hurwitz::{hq_enumerate_norm, HQuat};

pub type Vec3 = [i64; 3];

fn dot(x: &Vec3, y: &Vec3) -> i64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn exact_root(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Every `(x, y, z)` with `x² + y² + z² = m`.
pub fn vectors(m: i64) -> Vec<Vec3> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    let r = isqrt(m);
    for x in -r..=r {
        for y in -r..=r {
            if let Some(z) = exact_root(m - x * x - y * y) {
                out.push([x, y, z]);
                if z > 0 {
                    out.push([x, y, -z]);
                }
            }
        }
    }
    out.sort();
    out
}

/// Every nonzero vector of norm below `m`.
pub fn vectors_below(m: i64) -> Vec<Vec3> {
    (1..m).flat_map(vectors).collect()
}

/// `(all, primitive)` vector counts of norm `m`.
pub fn vector_counts(m: i64) -> (i64, i64) {
    let v = vectors(m);
    let prim = v.iter().filter(|x| gcd_all(&x[..]) == 1).count();
    (v.len() as i64, prim as i64)
}

/// Solutions of `x² + y² = n`.
pub fn r2(n: i64) -> i64 {
    let r = isqrt(n.max(0));
    (-r..=r)
        .map(|x| match exact_root(n - x * x) {
            Some(0) => 1,
            Some(_) => 2,
            None => 0,
        })
        .sum()
}

/// Solutions of `x² + y² + z² + w² = n`, as a convolution of [`r2`].
pub fn r4(n: i64) -> i64 {
    (0..=n).map(|k| r2(k) * r2(n - k)).sum()
}

/// Every ordered twin pair of norm `m`.
pub fn twin_pairs(m: i64) -> Vec<(Vec3, Vec3)> {
    let v = vectors(m);
    let mut out = Vec::new();
    for x in &v {
        for y in &v {
            if dot(x, y) == 0 {
                out.push((*x, *y));
            }
        }
    }
    out
}

pub fn twin_pair_count(m: i64) -> i64 {
    let v = vectors(m);
    v.iter()
        .map(|x| v.iter().filter(|y| dot(x, y) == 0).count() as i64)
        .sum()
}

/// Every twin of `x`.
pub fn twins(x: &Vec3) -> Vec<Vec3> {
    vectors(dot(x, x)).into_iter().filter(|y| dot(x, y) == 0).collect()
}

/// Whether norm-`n` vectors exist and all of them have a twin. Only the
/// representatives `0 ≤ x ≤ y ≤ z` are tested, since twin existence is
/// invariant under signed permutations.
pub fn twin_complete(n: i64) -> bool {
    let v = vectors(n);
    !v.is_empty()
        && v.iter()
            .filter(|x| 0 <= x[0] && x[0] <= x[1] && x[1] <= x[2])
            .all(|x| v.iter().any(|y| dot(x, y) == 0))
}

/// Every cubic lattice with integer edge `m`, as the sorted set of its six
/// shortest vectors `±u, ±v, ±w`.
pub fn cubic_lattices(m: i64) -> Vec<[Vec3; 6]> {
    let v = vectors(m * m);
    let mut seen = BTreeSet::new();
    for u in &v {
        for w in &v {
            if dot(u, w) != 0 {
                continue;
            }
            let c = [
                u[1] * w[2] - u[2] * w[1],
                u[2] * w[0] - u[0] * w[2],
                u[0] * w[1] - u[1] * w[0],
            ];
            if c.iter().any(|x| x % m != 0) {
                continue;
            }
            let t = c.map(|x| x / m);
            let mut six = [*u, *w, t, u.map(|x| -x), w.map(|x| -x), t.map(|x| -x)];
            six.sort();
            seen.insert(six);
        }
    }
    seen.into_iter().collect()
}

/// Whether `x` is an integer combination of the orthogonal `u, v, w` of
/// norm `e`.
pub fn lattice_contains(basis: &[Vec3], x: &Vec3) -> bool {
    let e = dot(&basis[0], &basis[0]);
    basis.iter().take(3).all(|b| dot(x, b) % e == 0)
}

/// Every `(m, n, p, q)` producing `(a, b, c, d)` through the Euler
/// parameterization, by searching `m² + n² + p² + q² = d`.
pub fn euler_params(a: i64, b: i64, c: i64, d: i64) -> Vec<[i64; 4]> {
    let r = isqrt(d.max(0));
    let mut out = Vec::new();
    for m in -r..=r {
        for n in -r..=r {
            for p in -r..=r {
                let rest = d - m * m - n * n - p * p;
                let Some(q0) = exact_root(rest) else { continue };
                for q in if q0 == 0 { vec![0] } else { vec![-q0, q0] } {
                    if m * m + n * n - p * p - q * q == a && 2 * (m * q + n * p) == b && 2 * (n * q - m * p) == c {
                        out.push([m, n, p, q]);
                    }
                }
            }
        }
    }
    out
}

/// `(a, b, c)` with `a² + b² + c² = d²`, `gcd = 1`, `a` odd and positive
/// and `0 ≤ b ≤ c`, found by scanning the whole cube.
pub fn quadruple_representatives(d: i64) -> Vec<Vec3> {
    let mut out = Vec::new();
    for a in 1..=d {
        for b in 0..=d {
            for c in b..=d {
                if a % 2 != 0 && a * a + b * b + c * c == d * d && gcd_all(&[a, b, c]) == 1 {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every Hurwitz quaternion of norm `n`, by scanning doubled coordinates.
pub fn hurwitz_count(n: i64) -> i64 {
    let target = 4 * n;
    let r = isqrt(target);
    let mut count = 0;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let rest = target - a * a - b * b - c * c;
                let Some(d) = exact_root(rest) else { continue };
                for d in if d == 0 { vec![0] } else { vec![-d, d] } {
                    if (a - b) % 2 == 0 && (a - c) % 2 == 0 && (a - d) % 2 == 0 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Distinct `αβᾱ` over all `α` of norm `p^l` that are not divisible by `p`.
pub fn nondivisible_conjugates(beta: &HQuat, p: i64, l: u32) -> i64 {
    hq_enumerate_norm(p.pow(l))
        .expect("positive norm")
        .iter()
        .map(|a| a.sandwich(beta))
        .filter(|d| !d.divisible_by(p))
        .map(|d| d.doubled())
        .collect::<BTreeSet<_>>()
        .len() as i64
}

/// Every `α` of norm `m` with `ᾱδα/m²` integral, i.e. every `α` writing
/// `δ = αβᾱ` for some `β`.
pub fn representing_alphas(delta: &HQuat, m: i64) -> Vec<HQuat> {
    hq_enumerate_norm(m)
        .expect("positive norm")
        .into_iter()
        .filter(|a| (a.conj() * *delta * *a).div_int(m * m).is_some())
        .collect()
}
