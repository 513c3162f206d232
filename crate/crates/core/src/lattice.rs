//! Integer vectors, cubic lattices, bounded enumeration of vectors of a
//! given norm, the greatest square sublattice of a plane `v^⊥`, and a
//! small explorer for twins in dimensions 5 and 7.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::hurwitz::HQuat;

pub type Vec3 = [i64; 3];

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm(x: &[i64]) -> i64 {
    dot(x, x)
}

pub fn cross(x: &Vec3, y: &Vec3) -> Vec3 {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

pub fn scale(x: &Vec3, k: i64) -> Vec3 {
    x.map(|c| c * k)
}

pub fn add(x: &Vec3, y: &Vec3) -> Vec3 {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2]]
}

/// `x / k` when every coordinate is divisible by `k`.
pub fn div_exact(x: &Vec3, k: i64) -> Option<Vec3> {
    (k != 0 && x.iter().all(|c| c % k == 0)).then(|| x.map(|c| c / k))
}

/// Gcd of the coordinates.
pub fn content(x: &[i64]) -> i64 {
    arith::gcd_all(x)
}

/// `x = g·u` with `g > 0` and `u` primitive.
pub fn primitive_split(x: &Vec3) -> Result<(i64, Vec3)> {
    let g = content(x);
    if g == 0 {
        return Err(Error::Zero("vector"));
    }
    Ok((g, x.map(|c| c / g)))
}

pub fn is_odd_vector(x: &[i64]) -> bool {
    x.iter().all(|c| c % 2 != 0)
}

/// `V(v) = v₁i + v₂j + v₃k`.
pub fn to_pure(v: &Vec3) -> HQuat {
    HQuat::pure(*v)
}

pub fn from_pure(q: &HQuat) -> Result<Vec3> {
    q.vector().ok_or_else(|| Error::NotPure(q.to_string()))
}

pub fn format_vector(x: &[i64]) -> String {
    x.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `"x,y,z"`-style comma-separated integers.
pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    let err = || Error::Parse {
        kind: "vector",
        input: s.to_string(),
    };
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| err()))
        .collect::<Result<_>>()?;
    if parts.is_empty() {
        return Err(err());
    }
    Ok(parts)
}

pub fn parse_vec3(s: &str) -> Result<Vec3> {
    let v = parse_vector(s)?;
    v.try_into().map_err(|_| Error::Parse {
        kind: "3-vector",
        input: s.to_string(),
    })
}

/// Three pairwise orthogonal integer vectors of a common norm, and the
/// lattice they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLattice {
    pub basis: [Vec3; 3],
    pub edge_norm: i64,
    pub generator: Option<HQuat>,
}

impl CubicLattice {
    pub fn new(basis: [Vec3; 3], generator: Option<HQuat>) -> Result<Self> {
        let edge_norm = norm(&basis[0]);
        if edge_norm == 0 {
            return Err(Error::NotIcube("zero basis vector".into()));
        }
        for i in 0..3 {
            if norm(&basis[i]) != edge_norm {
                return Err(Error::NotIcube("basis vectors differ in length".into()));
            }
            for j in i + 1..3 {
                if dot(&basis[i], &basis[j]) != 0 {
                    return Err(Error::NotIcube("basis vectors are not orthogonal".into()));
                }
            }
        }
        Ok(CubicLattice {
            basis,
            edge_norm,
            generator,
        })
    }

    /// The edge length, when it is an integer.
    pub fn edge(&self) -> Option<i64> {
        arith::exact_sqrt(self.edge_norm)
    }

    /// Coordinates of `x` in the basis, if `x` lies in the lattice.
    pub fn coordinates(&self, x: &Vec3) -> Option<[i64; 3]> {
        let mut out = [0; 3];
        for (o, b) in out.iter_mut().zip(&self.basis) {
            let d = dot(x, b);
            if d % self.edge_norm != 0 {
                return None;
            }
            *o = d / self.edge_norm;
        }
        Some(out)
    }

    pub fn contains(&self, x: &Vec3) -> bool {
        self.coordinates(x).is_some()
    }

    /// True when both bases span the same lattice.
    pub fn same_lattice(&self, other: &CubicLattice) -> bool {
        self.edge_norm == other.edge_norm && other.basis.iter().all(|b| self.contains(b))
    }
}

impl fmt::Display for CubicLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.basis.iter().map(|v| format!("({})", format_vector(v))).collect();
        write!(f, "{} edge_norm={}", b.join(" "), self.edge_norm)
    }
}

/// Largest norm each dimension may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub dim3: i64,
    pub dim5: i64,
    pub dim7: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            dim3: 10_000,
            dim5: 200,
            dim7: 80,
        }
    }
}

impl Budget {
    /// The default budget with every limit multiplied by `factor`.
    pub fn scaled(factor: i64) -> Self {
        let d = Budget::default();
        let f = factor.max(1);
        Budget {
            dim3: d.dim3 * f,
            dim5: d.dim5 * f,
            dim7: d.dim7 * f,
        }
    }

    pub fn limit(&self, dim: usize) -> Result<i64> {
        match dim {
            3 => Ok(self.dim3),
            5 => Ok(self.dim5),
            7 => Ok(self.dim7),
            other => Err(Error::UnsupportedDimension(other)),
        }
    }

    fn check(&self, m: i64, dim: usize) -> Result<()> {
        let limit = self.limit(dim)?;
        if m > limit {
            return Err(Error::BudgetExceeded { norm: m, dim, limit });
        }
        Ok(())
    }
}

fn collect_vectors(rem: i64, left: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if left == 1 {
        if let Some(r) = arith::exact_sqrt(rem) {
            for x in if r == 0 { vec![0] } else { vec![-r, r] } {
                prefix.push(x);
                out.push(prefix.clone());
                prefix.pop();
            }
        }
        return;
    }
    let r = arith::isqrt(rem);
    for x in -r..=r {
        prefix.push(x);
        collect_vectors(rem - x * x, left - 1, prefix, out);
        prefix.pop();
    }
}

/// All vectors of norm `m` in dimension `dim`, lexicographically sorted,
/// with no budget check.
pub(crate) fn vectors_of_norm(m: i64, dim: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if m >= 0 && dim >= 1 {
        collect_vectors(m, dim, &mut Vec::with_capacity(dim), &mut out);
    }
    out
}

/// Three-dimensional [`vectors_of_norm`].
pub(crate) fn vectors3_of_norm(m: i64) -> Vec<Vec3> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    let r = arith::isqrt(m);
    for x in -r..=r {
        let rx = m - x * x;
        let ry = arith::isqrt(rx);
        for y in -ry..=ry {
            if let Some(z) = arith::exact_sqrt(rx - y * y) {
                out.push([x, y, -z]);
                if z != 0 {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// All integer vectors of norm exactly `m` in dimension 3, 5 or 7, sorted
/// lexicographically, within the default [`Budget`].
pub fn enumerate_norm_vectors(m: i64, dim: usize) -> Result<Vec<Vec<i64>>> {
    enumerate_norm_vectors_with(m, dim, &Budget::default())
}

pub fn enumerate_norm_vectors_with(m: i64, dim: usize, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    if m < 1 {
        return Err(Error::NotPositive("norm"));
    }
    budget.check(m, dim)?;
    Ok(vectors_of_norm(m, dim))
}

/// Lattice-reduces a two-dimensional basis in `Z³` (Lagrange–Gauss).
fn gauss_reduce(mut a: Vec3, mut b: Vec3) -> (Vec3, Vec3) {
    if norm(&a) > norm(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let na = norm(&a);
        let mu = arith::round_half_up(dot(&a, &b) as i128, na as i128) as i64;
        b = add(&b, &scale(&a, -mu));
        if norm(&b) >= na {
            return (a, b);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// A basis of `{x ∈ Z³ : x·v = 0}` for primitive `v`.
fn orthogonal_plane_basis(v: &Vec3) -> (Vec3, Vec3) {
    let [a, b, c] = *v;
    if a == 0 && b == 0 {
        return ([1, 0, 0], [0, 1, 0]);
    }
    let g1 = arith::gcd(a, b);
    let (_, x, y) = arith::ext_gcd(a / g1, b / g1);
    ([b / g1, -a / g1, 0], [c * x, c * y, -g1])
}

/// Two-dimensional integer lattice in Hermite normal form, rows
/// `(a, b)` and `(0, c)`.
struct Hnf2 {
    a: i64,
    b: i64,
    c: i64,
}

impl Hnf2 {
    fn add(&mut self, x: i64, y: i64) {
        let (g, u, w) = arith::ext_gcd(self.a, x);
        let rest = (x / g) * self.b - (self.a / g) * y;
        self.b = u * self.b + w * y;
        self.a = g;
        self.c = arith::gcd(self.c, rest);
        self.b = self.b.rem_euclid(self.c);
    }
}

/// The greatest square sublattice `K` of `L = v^⊥` for a primitive `v` of
/// integer length `ℓ`.
///
/// A sublattice of the plane is square exactly when it is closed under the
/// quarter turn `R(x) = (v × x)/ℓ`; since `R² = −1`, the largest such
/// sublattice is `{x ∈ L : ℓ | v × x}`. Returns an orthogonal basis
/// `(s, R(s))` of `K` and the index `[L : K]`.
pub fn greatest_square_sublattice(v: &Vec3) -> Result<([Vec3; 2], i64)> {
    if content(v) != 1 {
        return Err(Error::NotPrimitive(format_vector(v)));
    }
    let l = arith::exact_sqrt(norm(v)).ok_or_else(|| Error::NonIntegerLength(format_vector(v)))?;
    let (w1, w2) = orthogonal_plane_basis(v);
    let c1 = cross(v, &w1);
    let c2 = cross(v, &w2);
    let mut hnf = Hnf2 { a: l, b: 0, c: l };
    for s in 0..l {
        for t in 0..l {
            if (0..3).all(|k| (s * c1[k] + t * c2[k]) % l == 0) {
                hnf.add(s, t);
            }
        }
    }
    let index = hnf.a * hnf.c;
    let k1 = add(&scale(&w1, hnf.a), &scale(&w2, hnf.b));
    let k2 = scale(&w2, hnf.c);
    let (s, _) = gauss_reduce(k1, k2);
    // the four shortest vectors are s, R(s), −s, −R(s); pick the largest
    let rot = |x: &Vec3| div_exact(&cross(v, x), l).expect("K is closed under the quarter turn");
    let mut first = s;
    for _ in 0..3 {
        let next = rot(&first);
        first = first.max(next);
        first = first.max(rot(&next));
        first = first.max(rot(&rot(&next)));
    }
    Ok(([first, rot(&first)], index))
}

/// The partner `(−b, a, −d, c, …)` of a vector of even dimension.
pub fn even_dimension_twin(x: &[i64]) -> Result<Vec<i64>> {
    if !x.len().is_multiple_of(2) {
        return Err(Error::UnsupportedDimension(x.len()));
    }
    Ok(x.chunks(2).flat_map(|p| [-p[1], p[0]]).collect())
}

/// Searches dimension 5 or 7 for vectors with some even coordinate and no
/// twin, over all norms up to `d_max`.
///
/// Twin existence is invariant under permuting coordinates and changing
/// signs, so only representatives with `0 ≤ x₁ ≤ x₂ ≤ …` are examined and
/// reported. Vectors with all coordinates odd never have a twin (the inner
/// product of two of them is odd) and are skipped.
pub fn explore_twin_conjecture(dim: usize, d_max: i64) -> Result<Vec<Vec<i64>>> {
    explore_twin_conjecture_with(dim, d_max, &Budget::default())
}

pub fn explore_twin_conjecture_with(dim: usize, d_max: i64, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    if dim != 5 && dim != 7 {
        return Err(Error::UnsupportedDimension(dim));
    }
    if d_max < 1 {
        return Err(Error::NotPositive("d_max"));
    }
    budget.check(d_max, dim)?;
    let mut out = Vec::new();
    for d in 1..=d_max {
        let all = vectors_of_norm(d, dim);
        for x in all.iter().filter(|x| x.windows(2).all(|w| 0 <= w[0] && w[0] <= w[1])) {
            if is_odd_vector(x) {
                continue;
            }
            if !all.iter().any(|y| dot(x, y) == 0) {
                out.push(x.clone());
            }
        }
    }
    Ok(out)
}
