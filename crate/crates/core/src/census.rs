//! Sweeps comparing every closed-form count with exhaustive enumeration.

use std::fmt;
use std::io::Write;
use std::time::{Duration, Instant};

use crate::arith;
use crate::brute;
use crate::decomp::{count_all_vectors, count_primitive_vectors};
use crate::error::{Error, Result};
use crate::hurwitz::hq_enumerate_norm;
use crate::twins::{conjectured_twin_complete, is_twin_complete, twin_count};

/// One comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub input: String,
    pub formula: String,
    pub oracle: String,
}

impl CensusRow {
    fn new(input: impl Into<String>, formula: impl ToString, oracle: impl ToString) -> Self {
        CensusRow {
            input: input.into(),
            formula: formula.to_string(),
            oracle: oracle.to_string(),
        }
    }

    pub fn matches(&self) -> bool {
        self.formula == self.oracle
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub check_name: &'static str,
    pub range: (i64, i64),
    pub rows: Vec<CensusRow>,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn mismatches(&self) -> Vec<&CensusRow> {
        self.rows.iter().filter(|r| !r.matches()).collect()
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(CensusRow::matches)
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {}..={:<5} {:>5} rows {:>3} mismatches {:>8.2?}",
            self.check_name,
            self.range.0,
            self.range.1,
            self.rows.len(),
            self.mismatches().len(),
            self.elapsed
        )
    }
}

/// A named check and the largest range it accepts.
#[derive(Clone, Copy, Debug)]
pub struct Check {
    pub name: &'static str,
    pub max: i64,
    run: fn(i64) -> Result<Vec<CensusRow>>,
}

pub const CHECKS: [Check; 5] = [
    Check {
        name: "jacobi",
        max: 500,
        run: jacobi_rows,
    },
    Check {
        name: "twin-counts",
        max: 200,
        run: twin_count_rows,
    },
    Check {
        name: "vector-counts",
        max: 2000,
        run: vector_count_rows,
    },
    Check {
        name: "hurwitz-counts",
        max: 100,
        run: hurwitz_count_rows,
    },
    Check {
        name: "twin-completeness",
        max: 1000,
        run: completeness_rows,
    },
];

pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

impl Check {
    /// Runs the check over `1..=max`; `max` may not exceed the check's
    /// limit times `scale`.
    pub fn run(&self, max: i64, scale: i64) -> Result<CensusReport> {
        if max < 1 {
            return Err(Error::NotPositive("census range"));
        }
        let limit = self.max * scale.max(1);
        if max > limit {
            return Err(Error::BudgetExceeded {
                norm: max,
                dim: 3,
                limit,
            });
        }
        let start = Instant::now();
        let rows = (self.run)(max)?;
        Ok(CensusReport {
            check_name: self.name,
            range: (1, max),
            rows,
            elapsed: start.elapsed(),
        })
    }
}

fn jacobi_formula(n: i64) -> i64 {
    if n % 2 == 1 {
        8 * arith::sigma(n)
    } else {
        24 * arith::sigma_odd(n)
    }
}

fn jacobi_rows(n_max: i64) -> Result<Vec<CensusRow>> {
    Ok((1..=n_max)
        .map(|n| CensusRow::new(n.to_string(), jacobi_formula(n), brute::r4(n)))
        .collect())
}

fn twin_count_rows(m_max: i64) -> Result<Vec<CensusRow>> {
    (1..=m_max)
        .map(|m| Ok(CensusRow::new(m.to_string(), twin_count(m)?, brute::twin_pair_count(m))))
        .collect()
}

fn vector_count_rows(m_max: i64) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let (all, prim) = brute::vector_counts(m);
        let (n, k) = arith::squarefree_split(m);
        rows.push(CensusRow::new(format!("s({m})"), count_all_vectors(m)?, all));
        rows.push(CensusRow::new(format!("p({m})"), count_primitive_vectors(n, k)?, prim));
    }
    Ok(rows)
}

fn hurwitz_count_rows(n_max: i64) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let found = hq_enumerate_norm(n)?.len();
        rows.push(CensusRow::new(n.to_string(), 24 * arith::sigma_odd(n), found));
        if n > 2 && arith::is_prime(n) {
            rows.push(CensusRow::new(format!("odd prime {n}"), 24 * (n + 1), found));
        }
    }
    Ok(rows)
}

fn completeness_rows(limit: i64) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    let mut accepted = Vec::new();
    for n in 1..=limit {
        let verdict = is_twin_complete(n)?.verdict;
        if verdict {
            accepted.push(n);
        }
        rows.push(CensusRow::new(n.to_string(), verdict, brute::twin_complete(n)));
    }
    let show = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    rows.push(CensusRow::new(
        "accepted set vs conjectured list",
        show(&accepted),
        show(&conjectured_twin_complete(limit)),
    ));
    Ok(rows)
}

pub fn check_jacobi(n_max: i64) -> Result<CensusReport> {
    CHECKS[0].run(n_max, 1)
}

pub fn check_twin_counts(m_max: i64) -> Result<CensusReport> {
    CHECKS[1].run(m_max, 1)
}

pub fn check_vector_counts(m_max: i64) -> Result<CensusReport> {
    CHECKS[2].run(m_max, 1)
}

pub fn check_hurwitz_counts(n_max: i64) -> Result<CensusReport> {
    CHECKS[3].run(n_max, 1)
}

pub fn check_twin_completeness(limit: i64) -> Result<CensusReport> {
    CHECKS[4].run(limit, 1)
}

/// Every check over its full default range.
pub fn run_all() -> Result<Vec<CensusReport>> {
    CHECKS.iter().map(|c| c.run(c.max, 1)).collect()
}

/// Writes `check_name,input,formula,oracle,match` rows.
pub fn write_csv<W: Write>(reports: &[CensusReport], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check_name", "input", "formula", "oracle", "match"])
        .map_err(io)?;
    for r in reports {
        for row in &r.rows {
            w.write_record([
                r.check_name,
                &row.input,
                &row.formula,
                &row.oracle,
                if row.matches() { "true" } else { "false" },
            ])
            .map_err(io)?;
        }
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps() {
        let r = check_jacobi(4).unwrap();
        assert_eq!(
            r.rows.iter().map(|x| x.formula.as_str()).collect::<Vec<_>>(),
            ["8", "24", "32", "24"]
        );
        assert!(r.passed());
        let r = check_twin_counts(45).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[44].formula, "240");
        assert!(check_vector_counts(30).unwrap().passed());
        assert!(check_hurwitz_counts(10).unwrap().passed());
        let r = check_twin_completeness(20).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[16].formula, "false");
        assert!(matches!(check_jacobi(501), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn csv_rows() {
        let r = check_jacobi(2).unwrap();
        let mut buf = Vec::new();
        write_csv(&[r], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "check_name,input,formula,oracle,match\njacobi,1,8,8,true\njacobi,2,24,24,true\n"
        );
    }
}
