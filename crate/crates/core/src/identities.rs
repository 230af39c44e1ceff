//! The verified identities.
//!
//! Everything here revolves around one family of class pairs: take a
//! partition alpha with odd parts only, append the powers 2, 4, ..., 2^t to
//! get a class mu of size n = |alpha| + 2^{t+1} - 2, and append the single
//! power 2^{t+1} to alpha instead to get a class mu' of size n + 2. Three
//! statements are checked exactly, per instance:
//!
//! * expansion: the two-row character value chi^(n-j, j)(mu) equals a signed
//!   sum of two-row character values at alpha, one term per subset of
//!   {1, ..., t};
//! * coincidence: chi^(n-j, j)(mu) = chi^(n+2-j, 1^j)(mu') for 0 <= j <= n/2;
//! * squares: twice the sum of squared two-row values at mu equals the sum
//!   of squared hook values at mu'.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::betaset::{virtual_char_pair, VirtualChar2Row};
use crate::error::{Error, Result};
use crate::evaluator::{CharValue, Evaluator};
use crate::partition::{partitions_of_with, CycleType, Partition};

/// Largest exponent t accepted when building a family instance.
pub const MAX_T: u32 = 30;

/// Largest n accepted by `sweep`.
pub const MAX_SWEEP_N: u64 = 64;

/// One instance of the class-pair family: alpha with odd parts, the derived
/// classes mu and mu', and n = |mu|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    alpha: Partition,
    t: u32,
    mu: CycleType,
    mu_prime: CycleType,
    n: u64,
}

impl FamilyInstance {
    /// Builds the instance for (alpha, t). Errors if alpha has an even part
    /// or t exceeds `MAX_T`.
    pub fn new(alpha: Partition, t: u32) -> Result<Self> {
        if let Some(&even) = alpha.parts().iter().find(|&&p| p % 2 == 0) {
            return Err(Error::EvenPartInAlpha(even));
        }
        if t > MAX_T {
            return Err(Error::BoundExceeded {
                what: "family exponent t",
                got: t as u64,
                bound: MAX_T as u64,
            });
        }
        let mut mu_parts = alpha.parts().to_vec();
        for i in 1..=t {
            mu_parts.push(1u32 << i);
        }
        let mu = CycleType::from(Partition::new(mu_parts));
        let mut prime_parts = alpha.parts().to_vec();
        prime_parts.push(1u32 << (t + 1));
        let mu_prime = CycleType::from(Partition::new(prime_parts));
        let n = alpha.size() + (1u64 << (t + 1)) - 2;
        debug_assert_eq!(mu.size(), n);
        debug_assert_eq!(mu_prime.size(), n + 2);
        Ok(FamilyInstance {
            alpha,
            t,
            mu,
            mu_prime,
            n,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn mu(&self) -> &CycleType {
        &self.mu
    }

    pub fn mu_prime(&self) -> &CycleType {
        &self.mu_prime
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// One term of a two-row expansion: the subset of {1, ..., t} as a bitmask
/// (bit i-1 set means i is in the subset), the ordered pair it produces, and
/// that pair resolved to a signed two-row character or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub subset_mask: u32,
    pub label: (i64, i64),
    pub character: VirtualChar2Row,
}

/// Expansion of chi^(n-j, j) into 2^t signed two-row characters, obtained by
/// stripping the appended powers 2, ..., 2^t in every possible interleaving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub n: u64,
    pub j: u64,
    pub t: u32,
    pub terms: Vec<ExpansionTerm>,
}

/// All 2^t expansion terms, bitmasks ascending. The subset I yields the
/// ordered pair (n+1-j - sum_{i in I} 2^i, j - sum_{i not in I} 2^i); both
/// coordinates together always drop by 2^{t+1} - 2, so every surviving
/// two-row shape has size |alpha|.
pub fn expand_two_row(n: u64, j: u64, t: u32) -> Result<Expansion> {
    if 2 * j > n {
        return Err(Error::JOutOfRange { j, n });
    }
    if t > MAX_T {
        return Err(Error::BoundExceeded {
            what: "expansion exponent t",
            got: t as u64,
            bound: MAX_T as u64,
        });
    }
    let full = (1i64 << (t + 1)) - 2;
    let mut terms = Vec::with_capacity(1 << t);
    for mask in 0u32..(1u32 << t) {
        let chosen: i64 = (1..=t)
            .filter(|i| mask >> (i - 1) & 1 == 1)
            .map(|i| 1i64 << i)
            .sum();
        let x = (n + 1 - j) as i64 - chosen;
        let y = j as i64 - (full - chosen);
        terms.push(ExpansionTerm {
            subset_mask: mask,
            label: (x, y),
            character: virtual_char_pair(x, y),
        });
    }
    Ok(Expansion { n, j, t, terms })
}

/// Value of the expansion of chi^(n-j, j) at the instance's class alpha:
/// zero terms contribute nothing, every other term its sign times the
/// two-row character value at alpha.
pub fn eval_expansion(ev: &Evaluator, fam: &FamilyInstance, j: u64) -> Result<CharValue> {
    let expansion = expand_two_row(fam.n(), j, fam.t())?;
    let class = CycleType::from(fam.alpha().clone());
    let mut acc = CharValue::zero();
    for term in &expansion.terms {
        if let VirtualChar2Row::Term { sign, shape } = &term.character {
            debug_assert_eq!(shape.size(), fam.alpha().size());
            let v = ev.value(shape, &class)?;
            if *sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
    }
    Ok(acc)
}

/// Which identity a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Subset expansion against direct evaluation of chi^(n-j, j) at mu.
    Expansion,
    /// Two-row value at mu against the matching hook value at mu'.
    Coincidence,
    /// Twice the two-row square sum at mu against the hook square sum at mu'.
    SquareSum,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Expansion => "expansion",
            CheckKind::Coincidence => "coincidence",
            CheckKind::SquareSum => "squares",
        }
    }
}

/// One compared pair of values. `j` is present for the per-j checks and
/// absent for the square-sum check, which compares one pair per instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub alpha: Partition,
    pub t: u32,
    pub n: u64,
    pub j: Option<u64>,
    pub lhs: CharValue,
    pub rhs: CharValue,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// All comparisons one verifier made for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub kind: CheckKind,
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(CheckRow::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.kind.name(),
            "rows": self.rows.iter().map(row_json).collect::<Vec<_>>(),
        })
    }

    /// CSV with header `alpha,t,n,j,lhs,rhs,equal`; alpha is always quoted,
    /// j is empty for the square-sum check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,t,n,j,lhs,rhs,equal\n");
        for row in &self.rows {
            let j = row.j.map(|j| j.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "\"{}\",{},{},{},{},{},{}\n",
                row.alpha,
                row.t,
                row.n,
                j,
                row.lhs,
                row.rhs,
                row.passed()
            ));
        }
        out
    }
}

fn row_json(row: &CheckRow) -> serde_json::Value {
    serde_json::json!({
        "alpha": row.alpha.to_string(),
        "t": row.t,
        "n": row.n,
        "j": row.j,
        "lhs": row.lhs.to_string(),
        "rhs": row.rhs.to_string(),
        "equal": row.passed(),
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let j = row.j.map(|j| format!(" j={j}")).unwrap_or_default();
            let verdict = if row.passed() { "ok" } else { "MISMATCH" };
            writeln!(
                f,
                "{} alpha=\"{}\" t={} n={}{}: lhs={} rhs={} {}",
                self.kind.name(),
                row.alpha,
                row.t,
                row.n,
                j,
                row.lhs,
                row.rhs,
                verdict
            )?;
        }
        Ok(())
    }
}

/// Compares the subset expansion with direct evaluation of chi^(n-j, j) at
/// mu for every 0 <= j <= n/2.
pub fn verify_expansion(ev: &Evaluator, fam: &FamilyInstance) -> Result<Report> {
    let mut rows = Vec::new();
    for j in 0..=fam.n() / 2 {
        let lhs = eval_expansion(ev, fam, j)?;
        let shape = Partition::two_row((fam.n() - j) as i64, j as i64).expect("n - j >= j >= 0");
        let rhs = ev.value(&shape, fam.mu())?;
        rows.push(CheckRow {
            alpha: fam.alpha().clone(),
            t: fam.t(),
            n: fam.n(),
            j: Some(j),
            lhs,
            rhs,
        });
    }
    Ok(Report {
        kind: CheckKind::Expansion,
        rows,
    })
}

/// Compares chi^(n-j, j)(mu) with chi^(n+2-j, 1^j)(mu') for every
/// 0 <= j <= n/2.
pub fn verify_coincidence(ev: &Evaluator, fam: &FamilyInstance) -> Result<Report> {
    let mut rows = Vec::new();
    for j in 0..=fam.n() / 2 {
        let two_row =
            Partition::two_row((fam.n() - j) as i64, j as i64).expect("n - j >= j >= 0");
        let lhs = ev.value(&two_row, fam.mu())?;
        let hook = Partition::hook((fam.n() + 2 - j) as i64, j as i64).expect("n + 2 - j >= 1");
        let rhs = ev.value(&hook, fam.mu_prime())?;
        rows.push(CheckRow {
            alpha: fam.alpha().clone(),
            t: fam.t(),
            n: fam.n(),
            j: Some(j),
            lhs,
            rhs,
        });
    }
    Ok(Report {
        kind: CheckKind::Coincidence,
        rows,
    })
}

/// Compares 2 times the two-row square sum at mu with the hook square sum
/// at mu'. One row per instance.
pub fn verify_square_sums(ev: &Evaluator, fam: &FamilyInstance) -> Result<Report> {
    let lhs = ev.two_row_square_sum(fam.n(), fam.mu())? * CharValue::from(2);
    let rhs = ev.hook_square_sum(fam.n() + 2, fam.mu_prime())?;
    Ok(Report {
        kind: CheckKind::SquareSum,
        rows: vec![CheckRow {
            alpha: fam.alpha().clone(),
            t: fam.t(),
            n: fam.n(),
            j: None,
            lhs,
            rhs,
        }],
    })
}

/// Outcome of a sweep: how many instances and value comparisons ran, and
/// the rows that failed (none, if the identities hold).
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub instances: u64,
    pub checks: u64,
    pub failures: Vec<(CheckKind, CheckRow)>,
}

impl SweepSummary {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "instances": self.instances,
            "checks": self.checks,
            "failures": self
                .failures
                .iter()
                .map(|(kind, row)| {
                    let mut v = row_json(row);
                    v["check"] = serde_json::json!(kind.name());
                    v
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Runs all three verifiers on every family instance with alpha a partition
/// into odd parts, 0 <= t <= max_t, and n <= max_n. Instances run in
/// parallel against the shared evaluator.
pub fn sweep(ev: &Evaluator, max_n: u64, max_t: u32) -> Result<SweepSummary> {
    if max_n > MAX_SWEEP_N {
        return Err(Error::BoundExceeded {
            what: "sweep size bound",
            got: max_n,
            bound: MAX_SWEEP_N,
        });
    }
    if max_t > MAX_T {
        return Err(Error::BoundExceeded {
            what: "sweep exponent bound",
            got: max_t as u64,
            bound: MAX_T as u64,
        });
    }
    let mut instances = Vec::new();
    for t in 0..=max_t {
        let base = (1u64 << (t + 1)) - 2;
        if base > max_n {
            break;
        }
        for m in 0..=max_n - base {
            for alpha in partitions_of_with(m, Some(|p| p % 2 == 1), MAX_SWEEP_N)? {
                instances.push(FamilyInstance::new(alpha, t)?);
            }
        }
    }
    let per_instance: Vec<(u64, Vec<(CheckKind, CheckRow)>)> = instances
        .par_iter()
        .map(|fam| {
            let reports = [
                verify_expansion(ev, fam)?,
                verify_coincidence(ev, fam)?,
                verify_square_sums(ev, fam)?,
            ];
            let mut checks = 0;
            let mut failures = Vec::new();
            for report in reports {
                checks += report.rows.len() as u64;
                let kind = report.kind;
                failures.extend(
                    report
                        .rows
                        .into_iter()
                        .filter(|row| !row.passed())
                        .map(|row| (kind, row)),
                );
            }
            Ok((checks, failures))
        })
        .collect::<Result<_>>()?;
    let mut summary = SweepSummary {
        instances: instances.len() as u64,
        checks: 0,
        failures: Vec::new(),
    };
    for (checks, failures) in per_instance {
        summary.checks += checks;
        summary.failures.extend(failures);
    }
    Ok(summary)
}
