//! Euler matrices `E(α)`, the 48 signed column permutations coming from the
//! binary octahedral group, and recovery of a generating quaternion from an
//! icube.
//!
//! `E(α)` is the matrix of `β ↦ αβᾱ` on pure quaternions; its columns are
//! `αiᾱ, αjᾱ, αkᾱ`. Multiplying `α` on the right by a unit `ε` multiplies
//! `E(α)` on the right by `E(ε)`, which is a signed permutation matrix.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::arith;
use crate::error::{Error, Result};
use crate::hurwitz::{hq_units, HQuat};

/// Row-major 3×3 integer matrix.
pub type Mat3 = [[i64; 3]; 3];

pub const IDENTITY: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

pub fn column(m: &Mat3, c: usize) -> [i64; 3] {
    [m[0][c], m[1][c], m[2][c]]
}

pub fn columns(m: &Mat3) -> [[i64; 3]; 3] {
    [column(m, 0), column(m, 1), column(m, 2)]
}

pub fn from_columns(cols: [[i64; 3]; 3]) -> Mat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r]))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| (0..3).map(|k| a[r][k] * b[k][c]).sum()))
}

pub fn transpose(a: &Mat3) -> Mat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| a[c][r]))
}

pub fn det(m: &Mat3) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn format_matrix(m: &Mat3) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
    format!("[{}]", rows.join(","))
}

/// Parses the row-major `[[a,b,c],[d,e,f],[g,h,i]]` form.
pub fn parse_matrix(s: &str) -> Result<Mat3> {
    let err = || Error::Parse {
        kind: "matrix",
        input: s.to_string(),
    };
    let nums: Vec<i64> = s
        .split(|c: char| c == '[' || c == ']' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| err()))
        .collect::<Result<_>>()?;
    if nums.len() != 9 || !s.trim().starts_with("[[") {
        return Err(err());
    }
    Ok(std::array::from_fn(|r| std::array::from_fn(|c| nums[3 * r + c])))
}

/// The three kinds of quaternion generating a primitive integral Euler
/// matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorType {
    /// Primitive Lipschitz with odd norm.
    Type1,
    /// `β/√2` with `β` primitive Lipschitz, exactly two odd components.
    Type2,
    /// `β/2` with `β` primitive Lipschitz, all components odd.
    Type3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerMatrix {
    pub entries: Mat3,
    pub generator: HQuat,
    /// Set when the matrix is primitive; a Hurwitz generator is never of
    /// type 2.
    pub scale_class: Option<GeneratorType>,
}

impl EulerMatrix {
    pub fn columns(&self) -> [[i64; 3]; 3] {
        columns(&self.entries)
    }
}

/// `E(q)` for any Hurwitz `q`, with no checks.
pub(crate) fn euler_entries(q: &HQuat) -> Mat3 {
    let cols = [HQuat::I, HQuat::J, HQuat::K].map(|u| {
        q.sandwich(&u)
            .vector()
            .expect("αuᾱ is a pure Lipschitz quaternion for Hurwitz α")
    });
    from_columns(cols)
}

/// The Euler matrix of a nonzero Hurwitz quaternion.
pub fn euler_matrix(alpha: &HQuat) -> Result<EulerMatrix> {
    if alpha.is_zero() {
        return Err(Error::Zero("Euler generator"));
    }
    let entries = euler_entries(alpha);
    let primitive = arith::gcd_all(&entries.concat()) == 1;
    let scale_class = match (primitive, alpha.is_lipschitz()) {
        (false, _) => None,
        (true, true) => Some(GeneratorType::Type1),
        (true, false) => Some(GeneratorType::Type3),
    };
    Ok(EulerMatrix {
        entries,
        generator: *alpha,
        scale_class,
    })
}

/// A signed permutation acting on the columns of a matrix: column `c` of
/// the result is `signs[c]` times column `perm[c]` of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: [usize; 3],
    pub signs: [i64; 3],
}

impl SignedPerm {
    pub const IDENTITY: SignedPerm = SignedPerm {
        perm: [0, 1, 2],
        signs: [1, 1, 1],
    };

    /// All 48 signed permutations: permutations in lexicographic order, and
    /// within each the sign patterns `+++, ++−, +−+, …, −−−`. The identity is
    /// first.
    pub fn all() -> &'static [SignedPerm; 48] {
        static ALL: OnceLock<[SignedPerm; 48]> = OnceLock::new();
        ALL.get_or_init(|| {
            const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let mut out = [SignedPerm::IDENTITY; 48];
            for (pi, perm) in PERMS.iter().enumerate() {
                for s in 0..8 {
                    let signs = std::array::from_fn(|b| if s & (4 >> b) != 0 { -1 } else { 1 });
                    out[8 * pi + s] = SignedPerm { perm: *perm, signs };
                }
            }
            out
        })
    }

    pub fn apply(&self, m: &Mat3) -> Mat3 {
        std::array::from_fn(|r| std::array::from_fn(|c| self.signs[c] * m[r][self.perm[c]]))
    }

    /// The matrix `S` with `apply(M) = M·S`.
    pub fn matrix(&self) -> Mat3 {
        self.apply(&IDENTITY)
    }

    /// Reads a signed permutation matrix.
    pub fn from_matrix(s: &Mat3) -> Option<SignedPerm> {
        let mut perm = [0; 3];
        let mut signs = [0; 3];
        for c in 0..3 {
            let nz: Vec<usize> = (0..3).filter(|&r| s[r][c] != 0).collect();
            if nz.len() != 1 || s[nz[0]][c].abs() != 1 {
                return None;
            }
            perm[c] = nz[0];
            signs[c] = s[nz[0]][c];
        }
        let mut seen = perm;
        seen.sort();
        (seen == [0, 1, 2]).then_some(SignedPerm { perm, signs })
    }

    pub fn inverse(&self) -> SignedPerm {
        SignedPerm::from_matrix(&transpose(&self.matrix())).expect("transpose of a signed permutation")
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm::from_matrix(&mat_mul(&self.matrix(), &other.matrix())).expect("closed under composition")
    }

    pub fn is_orientation_preserving(&self) -> bool {
        det(&self.matrix()) > 0
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..3)
            .map(|c| format!("{}{}", if self.signs[c] < 0 { '-' } else { '+' }, self.perm[c] + 1))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element `q/√scale` of the binary octahedral group: the 24 Hurwitz
/// units (`scale = 1`) and the 24 elements `u(1+i)/√2` (`scale = 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OctahedralUnit {
    pub q: HQuat,
    pub scale: i64,
}

impl OctahedralUnit {
    /// `E(q/√scale) = E(q)/scale`, a signed permutation matrix.
    pub fn euler(&self) -> Mat3 {
        euler_entries(&self.q).map(|r| r.map(|x| x / self.scale))
    }
}

/// The 48 group elements: indices `0..24` are [`hq_units`] in order,
/// indices `24..48` are `hq_units()[i]·(1+i)/√2`.
pub fn octahedral_group() -> &'static [OctahedralUnit; 48] {
    static GROUP: OnceLock<[OctahedralUnit; 48]> = OnceLock::new();
    GROUP.get_or_init(|| {
        let lambda = HQuat::new(1, 1, 0, 0);
        std::array::from_fn(|idx| {
            if idx < 24 {
                OctahedralUnit {
                    q: hq_units()[idx],
                    scale: 1,
                }
            } else {
                OctahedralUnit {
                    q: hq_units()[idx - 24] * lambda,
                    scale: 2,
                }
            }
        })
    })
}

/// The signed column permutation by which `E(α·ε)` differs from `E(α)`,
/// for `ε = octahedral_group()[eps_index]`.
pub fn unit_action(eps_index: usize) -> Result<SignedPerm> {
    let g = octahedral_group();
    let eps = g.get(eps_index).ok_or(Error::InvalidIndex {
        index: eps_index,
        len: g.len(),
    })?;
    Ok(SignedPerm::from_matrix(&eps.euler()).expect("E(ε) is a signed permutation"))
}

/// Outcome of [`classify_generator`] for a primitive Lipschitz `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `β` itself generates a primitive integral Euler matrix.
    Type1,
    /// `β/√2` does. `type1 = β(1+axis)/2` is a type-1 quaternion obtained by
    /// right multiplication with the unit `(1+axis)/√2`.
    Type2Witness { axis: HQuat, type1: HQuat },
    /// `hurwitz = β/2` does; `type1` is `hurwitz·σ` or `hurwitz·σ⁻¹`.
    Type3Witness { hurwitz: HQuat, type1: HQuat },
    /// No scalar multiple of `β` generates a primitive integral matrix.
    NotIntegral,
}

/// Sorts a primitive Lipschitz quaternion into the three generator types
/// by its norm mod 8.
pub fn classify_generator(beta: &HQuat) -> Result<Classification> {
    let flag = beta.lipschitz_flag();
    if !flag.is_lipschitz {
        return Err(Error::NotLipschitz(beta.to_string()));
    }
    if !flag.is_primitive {
        return Err(Error::NotPrimitive(beta.to_string()));
    }
    let n = beta.norm();
    if n % 2 == 1 {
        return Ok(Classification::Type1);
    }
    if n % 4 == 2 {
        for axis in [HQuat::I, HQuat::J, HQuat::K] {
            let t = *beta * (HQuat::ONE + axis);
            if let Some(type1) = t.div_int(2).filter(|x| x.is_lipschitz()) {
                return Ok(Classification::Type2Witness { axis, type1 });
            }
        }
        unreachable!("two odd components pair up with exactly one axis");
    }
    if n % 8 == 4 {
        let hurwitz = beta.div_int(2).expect("all four components are odd");
        let type1 = [HQuat::SIGMA, HQuat::SIGMA.conj()]
            .into_iter()
            .map(|s| hurwitz * s)
            .find(|x| x.is_lipschitz())
            .expect("ασ or ασ⁻¹ has integer coefficients");
        return Ok(Classification::Type3Witness { hurwitz, type1 });
    }
    Ok(Classification::NotIntegral)
}

/// `M = d · sp(E(alpha))` for an icube `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SarkozyDecomposition {
    pub d: i64,
    pub alpha: HQuat,
    pub sp: SignedPerm,
}

/// Checks that the columns of `m` are nonzero, pairwise orthogonal and of
/// equal norm; returns that norm.
pub fn icube_norm(m: &Mat3) -> Result<i64> {
    let cols = columns(m);
    let dot = |a: &[i64; 3], b: &[i64; 3]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let n = dot(&cols[0], &cols[0]);
    if n == 0 {
        return Err(Error::NotIcube("zero column".into()));
    }
    if cols.iter().any(|c| dot(c, c) != n) {
        return Err(Error::NotIcube("columns have different norms".into()));
    }
    if dot(&cols[0], &cols[1]) != 0 || dot(&cols[0], &cols[2]) != 0 || dot(&cols[1], &cols[2]) != 0 {
        return Err(Error::NotIcube("columns are not orthogonal".into()));
    }
    Ok(n)
}

/// Reads a Lipschitz quaternion of norm `d` off a candidate Euler matrix.
fn recover_lipschitz(n: &Mat3, d: i64) -> Option<HQuat> {
    let tr = [
        d + n[0][0] + n[1][1] + n[2][2],
        d + n[0][0] - n[1][1] - n[2][2],
        d - n[0][0] + n[1][1] - n[2][2],
        d - n[0][0] - n[1][1] + n[2][2],
    ];
    let mut mag = [0i64; 4];
    for (i, &t) in tr.iter().enumerate() {
        if t % 4 != 0 {
            return None;
        }
        mag[i] = arith::exact_sqrt(t / 4)?;
    }
    // cross[a][b] = 4·c_a·c_b
    let mut cross = [[0i64; 4]; 4];
    let mut set = |a: usize, b: usize, v: i64| {
        cross[a][b] = v;
        cross[b][a] = v;
    };
    set(0, 1, n[2][1] - n[1][2]);
    set(0, 2, n[0][2] - n[2][0]);
    set(0, 3, n[1][0] - n[0][1]);
    set(1, 2, n[1][0] + n[0][1]);
    set(1, 3, n[0][2] + n[2][0]);
    set(2, 3, n[2][1] + n[1][2]);
    let lead = mag.iter().position(|&x| x != 0)?;
    let mut c = [0i64; 4];
    c[lead] = mag[lead];
    for j in 0..4 {
        if j != lead {
            let num = cross[lead][j];
            if num % (4 * c[lead]) != 0 {
                return None;
            }
            c[j] = num / (4 * c[lead]);
        }
    }
    let alpha = HQuat::new(c[0], c[1], c[2], c[3]);
    (euler_entries(&alpha) == *n).then_some(alpha)
}

/// Writes an icube `M` as `d` times a signed column permutation of `E(α)`
/// with `α` primitive Lipschitz of odd norm.
///
/// The signed permutation is the first one in [`SignedPerm::all`] order for
/// which such an `α` exists; `α` is then determined up to sign and is taken
/// with its first nonzero coefficient positive.
pub fn sarkozy_decompose(m: &Mat3) -> Result<SarkozyDecomposition> {
    let edge_sq = icube_norm(m)?;
    let edge = arith::exact_sqrt(edge_sq).ok_or_else(|| Error::NotIcube("edge length is not an integer".into()))?;
    let g = arith::gcd_all(&m.concat());
    let prim = m.map(|r| r.map(|x| x / g));
    let d = edge / g;
    for sp in SignedPerm::all() {
        let candidate = sp.inverse().apply(&prim);
        if det(&candidate) <= 0 {
            continue;
        }
        if let Some(alpha) = recover_lipschitz(&candidate, d) {
            debug_assert_eq!(sp.apply(&euler_entries(&alpha)), prim);
            return Ok(SarkozyDecomposition { d: g, alpha, sp: *sp });
        }
    }
    Err(Error::NotIcube("no generating quaternion found".into()))
}

/// Number of odd entries on the main diagonal.
pub fn odd_diagonal_count(m: &Mat3) -> usize {
    (0..3).filter(|&i| m[i][i] % 2 != 0).count()
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Parses the `(+1,-3,+2)` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "signed permutation",
            input: s.to_string(),
        };
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts: Vec<i64> = body
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<_>>()?;
        if parts.len() != 3 || parts.iter().any(|x| x.abs() < 1 || x.abs() > 3) {
            return Err(err());
        }
        let mut mat = [[0; 3]; 3];
        for (c, &x) in parts.iter().enumerate() {
            mat[(x.abs() - 1) as usize][c] = x.signum();
        }
        SignedPerm::from_matrix(&mat).ok_or_else(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> HQuat {
        s.parse().unwrap()
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_matrix(&HQuat::ONE).unwrap().entries, IDENTITY);
        let e = euler_matrix(&q("2i+j+4k")).unwrap();
        assert_eq!(e.columns(), [[-13, 4, 16], [4, -19, 8], [16, 8, 11]]);
        let c = e.columns();
        let twin: Vec<i64> = (0..3).map(|r| 2 * c[1][r] + c[2][r]).collect();
        assert_eq!(twin, vec![24, -30, 27]);
        // σ sends axis 1 → 2 → 3 → 1
        let s = euler_matrix(&HQuat::SIGMA).unwrap();
        assert_eq!(s.columns(), [[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(s.scale_class, Some(GeneratorType::Type3));
        assert!(euler_matrix(&HQuat::ZERO).is_err());
    }

    #[test]
    fn matches_closed_form() {
        for alpha in crate::hurwitz::hq_enumerate_norm(30).unwrap() {
            let Some([m, n, p, qq]) = alpha.lipschitz_coords() else {
                continue;
            };
            let closed: Mat3 = [
                [
                    m * m + n * n - p * p - qq * qq,
                    -2 * m * qq + 2 * n * p,
                    2 * m * p + 2 * n * qq,
                ],
                [
                    2 * m * qq + 2 * n * p,
                    m * m - n * n + p * p - qq * qq,
                    -2 * m * n + 2 * p * qq,
                ],
                [
                    -2 * m * p + 2 * n * qq,
                    2 * m * n + 2 * p * qq,
                    m * m - n * n - p * p + qq * qq,
                ],
            ];
            assert_eq!(euler_entries(&alpha), closed);
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_generator(&q("1+2k")).unwrap(), Classification::Type1);
        match classify_generator(&q("1+i")).unwrap() {
            Classification::Type2Witness { axis, type1 } => {
                assert_eq!(axis, HQuat::I);
                assert_eq!(type1, HQuat::I);
            }
            other => panic!("{other:?}"),
        }
        match classify_generator(&q("1+i+j+k")).unwrap() {
            Classification::Type3Witness { hurwitz, type1 } => {
                assert_eq!(hurwitz, HQuat::SIGMA);
                assert!(type1.is_lipschitz() && type1.is_unit());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(classify_generator(&q("2+2i")), Err(Error::NotPrimitive(_))));
        assert!(matches!(classify_generator(&HQuat::SIGMA), Err(Error::NotLipschitz(_))));
    }

    #[test]
    fn unit_actions() {
        assert_eq!(unit_action(0).unwrap(), SignedPerm::IDENTITY);
        let sigma = unit_action(8).unwrap();
        assert_eq!(octahedral_group()[8].q, HQuat::SIGMA);
        assert_eq!(sigma.perm, [1, 2, 0]);
        assert_eq!(sigma.signs, [1, 1, 1]);
        let i = unit_action(2).unwrap();
        assert_eq!(octahedral_group()[2].q, HQuat::I);
        assert_eq!(
            i,
            SignedPerm {
                perm: [0, 1, 2],
                signs: [1, -1, -1]
            }
        );
        assert!(unit_action(48).is_err());
    }

    #[test]
    fn actions_cover_rotations_twice() {
        let mut seen = std::collections::HashMap::new();
        for idx in 0..48 {
            let sp = unit_action(idx).unwrap();
            assert!(sp.is_orientation_preserving());
            *seen.entry(sp).or_insert(0) += 1;
        }
        assert_eq!(seen.len(), 24);
        assert!(seen.values().all(|&n| n == 2));
    }

    #[test]
    fn sarkozy_examples() {
        let dec = sarkozy_decompose(&IDENTITY).unwrap();
        assert_eq!((dec.d, dec.alpha, dec.sp), (1, HQuat::ONE, SignedPerm::IDENTITY));

        let m = from_columns([[1, 2, 2], [-2, -1, 2], [2, -2, 1]]);
        let dec = sarkozy_decompose(&m).unwrap();
        assert_eq!(dec.d, 1);
        assert_eq!(dec.alpha, q("1+i+k"));
        assert_eq!(dec.sp.apply(&euler_entries(&dec.alpha)), m);

        let two = IDENTITY.map(|r| r.map(|x| 2 * x));
        let dec = sarkozy_decompose(&two).unwrap();
        assert_eq!((dec.d, dec.alpha, dec.sp), (2, HQuat::ONE, SignedPerm::IDENTITY));

        let bad = from_columns([[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert!(matches!(sarkozy_decompose(&bad), Err(Error::NotIcube(_))));
    }

    #[test]
    fn orientation_reversing_icube() {
        let m = from_columns([[1, 2, 2], [-2, -1, 2], [-2, 2, -1]]);
        assert!(det(&m) < 0);
        let dec = sarkozy_decompose(&m).unwrap();
        assert_eq!(
            dec.sp.apply(&euler_entries(&dec.alpha)).map(|r| r.map(|x| x * dec.d)),
            m
        );
        assert_eq!(dec.alpha.norm() % 2, 1);
    }

    #[test]
    fn matrix_text() {
        let m = from_columns([[1, 2, 2], [-2, -1, 2], [2, -2, 1]]);
        let s = format_matrix(&m);
        assert_eq!(s, "[[1,-2,2],[2,-1,-2],[2,2,1]]");
        assert_eq!(parse_matrix(&s).unwrap(), m);
        assert!(parse_matrix("[[1,2],[3,4]]").is_err());
        let sp = SignedPerm {
            perm: [2, 0, 1],
            signs: [1, -1, 1],
        };
        assert_eq!(sp.to_string().parse::<SignedPerm>().unwrap(), sp);
    }
}
