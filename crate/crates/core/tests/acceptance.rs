//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any blocking criterion fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cubiq::arith;
use cubiq::brute;
use cubiq::census;
use cubiq::euler::{euler_matrix, mat_mul, transpose};
use cubiq::gaussian::{g_divmod, GInt};
use cubiq::hurwitz::{hq_divmod_right, hq_enumerate_norm, HQuat};
use cubiq::lattice::{self, cross, greatest_square_sublattice, CubicLattice, Vec3};
use cubiq::pythagoras::{all_quadruples_with_d, euler_param, PythQuadruple};
use cubiq::twins::{self, conjectured_twin_complete, parameterize_twins, twin_complete_list};

const SEED: u64 = 0x5eed_cafe;
const DIVMOD_CASES: usize = 100_000;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    blocking: bool,
    run: fn() -> Result<String, String>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census_result(r: cubiq::error::Result<census::CensusReport>) -> Result<String, String> {
    let r = r.map_err(|e| e.to_string())?;
    match r.mismatches().first() {
        None => Ok(format!("{} comparisons", r.rows.len())),
        Some(m) => Err(format!(
            "{} mismatches, first at {}: formula {} oracle {}",
            r.mismatches().len(),
            m.input,
            m.formula,
            m.oracle
        )),
    }
}

fn worked_example() -> Result<String, String> {
    let (x, y) = ([24, -30, 27], [28, 35, 14]);
    ensure(twins::is_twin_pair(&x, &y), || "not a twin pair".into())?;
    let ys = twins::twins_of(&x).map_err(|e| e.to_string())?;
    ensure(ys.contains(&y), || format!("twins_of misses {y:?}: {ys:?}"))?;
    let param = parameterize_twins(&x, &y).map_err(|e| e.to_string())?;
    let alpha: HQuat = "2i+j+4k".parse().unwrap();
    let z = GInt::new(2, 1);
    ensure(param.equivalents().iter().any(|p| p.alpha == alpha && p.z == z), || {
        format!("got {param}, not equivalent to alpha={alpha} z={z}")
    })?;
    let pair = twins::make_twins(&alpha, z).map_err(|e| e.to_string())?;
    ensure((pair.theta, pair.eta) == (x, y), || {
        format!("make_twins gives {pair:?}")
    })?;
    Ok(format!("{param}"))
}

fn twin_counts() -> Result<String, String> {
    census_result(census::check_twin_counts(200))
}

fn vector_counts() -> Result<String, String> {
    census_result(census::check_vector_counts(2000))
}

fn hurwitz_counts() -> Result<String, String> {
    let h = census_result(census::check_hurwitz_counts(100))?;
    for p in (3..=97).filter(|&p| arith::is_prime(p)) {
        let n = hq_enumerate_norm(p).map_err(|e| e.to_string())?.len() as i64;
        ensure(n == 24 * (p + 1), || format!("{n} quaternions of norm {p}"))?;
        let b = brute::hurwitz_count(p);
        ensure(n == b, || format!("{n} enumerated vs {b} scanned for norm {p}"))?;
    }
    let j = census_result(census::check_jacobi(200))?;
    Ok(format!("hurwitz {h}; jacobi {j}"))
}

fn pythagorean() -> Result<String, String> {
    let mut total = 0;
    for d in (1..=99).step_by(2) {
        for q in all_quadruples_with_d(d).map_err(|e| e.to_string())? {
            let params = euler_param(&q).map_err(|e| format!("{q}: {e}"))?;
            let mut ours: Vec<[i64; 4]> = params.iter().map(|p| p.0).collect();
            ours.sort();
            ours.dedup();
            ensure(ours.len() == 4, || format!("{q}: {} distinct parameters", ours.len()))?;
            for p in &params {
                ensure(PythQuadruple::from_params(p) == q, || {
                    format!("{q}: {p} gives another quadruple")
                })?;
            }
            let mut all = brute::euler_params(q.a, q.b, q.c, q.d);
            all.sort();
            ensure(all == ours, || format!("{q}: search finds {all:?}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} quadruples"))
}

fn unique_lattice() -> Result<String, String> {
    let mut by_edge: HashMap<i64, Vec<[Vec3; 6]>> = HashMap::new();
    let mut count = 0;
    for norm in 1..=500 {
        let (_, m) = arith::squarefree_split(norm);
        for x in brute::vectors(norm) {
            if arith::gcd_all(&x) != 1 {
                continue;
            }
            let lat = twins::max_cubic_lattice(&x).map_err(|e| format!("{x:?}: {e}"))?;
            ensure(lat.contains(&x), || format!("{x:?} not in {lat}"))?;
            ensure(lat.edge() == Some(m), || {
                format!("{x:?}: edge norm {} for m = {m}", lat.edge_norm)
            })?;
            let all = by_edge.entry(m).or_insert_with(|| brute::cubic_lattices(m));
            let holding: Vec<_> = all
                .iter()
                .filter(|six| brute::lattice_contains(&six[..3], &x))
                .collect();
            ensure(holding.len() == 1, || {
                format!("{x:?}: {} lattices of edge {m}", holding.len())
            })?;
            let found = CubicLattice::new([holding[0][0], holding[0][1], holding[0][2]], None).unwrap();
            ensure(found.same_lattice(&lat), || {
                format!("{x:?}: {lat} differs from {found}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} primitive vectors"))
}

fn twin_completeness() -> Result<String, String> {
    let c = census_result(census::check_twin_completeness(1000))?;
    let list = twin_complete_list(1000).map_err(|e| e.to_string())?;
    let expected = conjectured_twin_complete(1000);
    ensure(list == expected, || format!("accepted {list:?}, expected {expected:?}"))?;
    Ok(format!("{c}; {} twin-complete numbers", list.len()))
}

fn structural() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED);

    let mut done = 0;
    while done < DIVMOD_CASES {
        let a = GInt::new(rng.gen_range(-10_000..=10_000), rng.gen_range(-10_000..=10_000));
        let b = GInt::new(rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        if b.is_zero() {
            continue;
        }
        done += 1;
        let (q, r) = g_divmod(a, b).unwrap();
        ensure(a == b * q + r && 2 * r.norm() <= b.norm(), || {
            format!("G: {a} = {b}·{q} + {r}")
        })?;
    }

    let hq = |rng: &mut StdRng, r: i64| {
        let parity = rng.gen_range(0..2);
        let e = [(); 4].map(|_| 2 * rng.gen_range(-r..=r) + parity);
        HQuat::from_doubled(e).unwrap()
    };
    let mut done = 0;
    while done < DIVMOD_CASES {
        let a = hq(&mut rng, 5_000);
        let b = hq(&mut rng, 50);
        if b.is_zero() {
            continue;
        }
        done += 1;
        let (w, r) = hq_divmod_right(&a, &b).unwrap();
        ensure(a == b * w + r && 2 * r.norm() <= b.norm(), || {
            format!("E: {a} = {b}·{w} + {r}")
        })?;
    }

    let mut matrices = 0;
    for n in 1..=50 {
        for alpha in hq_enumerate_norm(n).unwrap() {
            let e = euler_matrix(&alpha).unwrap().entries;
            let g = mat_mul(&transpose(&e), &e);
            let nn = n * n;
            ensure(g == [[nn, 0, 0], [0, nn, 0], [0, 0, nn]], || {
                format!("E({alpha})ᵀE({alpha}) = {g:?}")
            })?;
            matrices += 1;
        }
    }

    let mut pairs = 0;
    for norm in 1..=500 {
        let (n, m) = arith::squarefree_split(norm);
        for (x, y) in brute::twin_pairs(norm) {
            let c = cross(&x, &y);
            ensure(c.iter().all(|v| v % (n * m) == 0), || {
                format!("{x:?} × {y:?} = {c:?}, n·m = {}", n * m)
            })?;
            pairs += 1;
        }
    }

    let mut sublattices = 0;
    for l in 1..=30 {
        for v in brute::vectors(l * l) {
            if arith::gcd_all(&v) != 1 {
                continue;
            }
            let (basis, index) = greatest_square_sublattice(&v).map_err(|e| format!("{v:?}: {e}"))?;
            ensure(index == l, || format!("{v:?}: index {index}"))?;
            let [s, t] = basis;
            ensure(
                lattice::dot(&s, &v) == 0
                    && lattice::dot(&t, &v) == 0
                    && lattice::dot(&s, &t) == 0
                    && lattice::norm(&s) == l * l
                    && lattice::norm(&t) == l * l,
                || format!("{v:?}: basis {basis:?}"),
            )?;
            sublattices += 1;
        }
    }

    Ok(format!(
        "{DIVMOD_CASES}+{DIVMOD_CASES} divisions, {matrices} matrices, {pairs} twin pairs, {sublattices} sublattices"
    ))
}

fn explorer() -> Result<String, String> {
    let found = lattice::explore_twin_conjecture(5, 50).map_err(|e| e.to_string())?;
    if found.is_empty() {
        Ok("dimension 5, norms ≤ 50: no twinless vector with an even coordinate".into())
    } else {
        let shown: Vec<String> = found.iter().map(|v| lattice::format_vector(v)).collect();
        Err(format!("{} counterexamples: {}", found.len(), shown.join(" ")))
    }
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "worked twin example",
            limit: secs(1),
            blocking: true,
            run: worked_example,
        },
        Criterion {
            id: 2,
            title: "twin counts M ≤ 200",
            limit: secs(120),
            blocking: true,
            run: twin_counts,
        },
        Criterion {
            id: 3,
            title: "vector counts M ≤ 2000",
            limit: secs(120),
            blocking: true,
            run: vector_counts,
        },
        Criterion {
            id: 4,
            title: "Hurwitz and Jacobi counts",
            limit: secs(60),
            blocking: true,
            run: hurwitz_counts,
        },
        Criterion {
            id: 5,
            title: "quadruple parameters d ≤ 99",
            limit: secs(60),
            blocking: true,
            run: pythagorean,
        },
        Criterion {
            id: 6,
            title: "unique maximal lattice",
            limit: secs(300),
            blocking: true,
            run: unique_lattice,
        },
        Criterion {
            id: 7,
            title: "twin-completeness N ≤ 1000",
            limit: secs(300),
            blocking: true,
            run: twin_completeness,
        },
        Criterion {
            id: 8,
            title: "structural invariants",
            limit: secs(300),
            blocking: true,
            run: structural,
        },
        Criterion {
            id: 9,
            title: "dimension-5 explorer",
            limit: secs(300),
            blocking: false,
            run: explorer,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:?} limit", c.limit)),
            Err(e) => (false, e),
        };
        let status = match (ok, c.blocking) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (non-blocking)",
        };
        println!("criterion {}: {status} — {} ({elapsed:.2?}) — {detail}", c.id, c.title);
        if !ok && c.blocking {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} blocking criteria failed");
        std::process::exit(1);
    }
}
