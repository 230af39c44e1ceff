//! Exact character evaluation by the Murnaghan-Nakayama rule.
//!
//! chi^lambda(mu) is computed recursively: remove a rim hook whose length is
//! the largest part of mu in every admissible way, weight each removal by its
//! sign, and recurse on the rest of mu. All removals run on beta-sets. Values
//! are exact big integers; nothing here rounds.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, Write as _};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::betaset::BetaSet;
use crate::error::{Error, Result};
use crate::partition::{partitions_of_with, CycleType, Partition};

/// Exact character value.
pub type CharValue = BigInt;

/// Largest n for which `character_table` builds the full table unless given
/// an explicit bound; p(14) = 135 rows and columns.
pub const DEFAULT_TABLE_BOUND: u64 = 14;

type MemoKey = (Vec<u32>, Vec<u32>);

/// Shared memo table keyed by (lambda, remaining mu), both sorted decreasing.
/// Concurrent lookups and inserts are fine: every writer computes the same
/// value for a key, so it does not matter which write wins.
pub struct MemoStore {
    map: DashMap<MemoKey, CharValue>,
    hits: AtomicU64,
    misses: AtomicU64,
    persisted: Mutex<HashSet<MemoKey>>,
}

/// What `MemoStore::load_file` found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheLoadReport {
    pub loaded: usize,
    pub skipped: usize,
}

impl MemoStore {
    pub fn new() -> Self {
        MemoStore {
            map: DashMap::new(),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
            persisted: Mutex::new(HashSet::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    fn get(&self, key: &MemoKey) -> Option<CharValue> {
        match self.map.get(key) {
            Some(v) => {
                self.hits.fetch_add(1, Ordering::Relaxed);
                Some(v.clone())
            }
            None => {
                self.misses.fetch_add(1, Ordering::Relaxed);
                None
            }
        }
    }

    fn insert(&self, key: MemoKey, value: CharValue) {
        self.map.insert(key, value);
    }

    /// Loads `lambda|mu|value` records, one per line. Lines that do not parse
    /// (or whose partitions differ in size) are skipped and counted, never
    /// fatal. Loaded keys are remembered so `append_new` only writes values
    /// computed after the load.
    pub fn load_file(&self, path: &Path) -> std::io::Result<CacheLoadReport> {
        let file = fs::File::open(path)?;
        let mut report = CacheLoadReport {
            loaded: 0,
            skipped: 0,
        };
        let mut persisted = self.persisted.lock().unwrap();
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match parse_cache_line(&line) {
                Some((key, value)) => {
                    persisted.insert(key.clone());
                    self.map.insert(key, value);
                    report.loaded += 1;
                }
                None => report.skipped += 1,
            }
        }
        Ok(report)
    }

    /// Appends entries not already loaded from disk; returns how many.
    pub fn append_new(&self, path: &Path) -> std::io::Result<usize> {
        let persisted = self.persisted.lock().unwrap();
        let mut out = fs::OpenOptions::new().create(true).append(true).open(path)?;
        let mut written = 0;
        for entry in self.map.iter() {
            if persisted.contains(entry.key()) {
                continue;
            }
            let (lam, mu) = entry.key();
            writeln!(
                out,
                "{}|{}|{}",
                fmt_parts(lam),
                fmt_parts(mu),
                entry.value()
            )?;
            written += 1;
        }
        Ok(written)
    }
}

impl Default for MemoStore {
    fn default() -> Self {
        Self::new()
    }
}

fn fmt_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_cache_line(line: &str) -> Option<(MemoKey, CharValue)> {
    let mut fields = line.split('|');
    let lam = fields.next()?;
    let mu = fields.next()?;
    let value = fields.next()?;
    if fields.next().is_some() {
        return None;
    }
    let lam: Partition = lam.parse().ok()?;
    let mu: Partition = mu.parse().ok()?;
    if lam.size() != mu.size() {
        return None;
    }
    let value: CharValue = value.trim().parse().ok()?;
    Some(((lam.parts().to_vec(), mu.parts().to_vec()), value))
}

/// Character evaluator, optionally memoized. One evaluator per run gives a
/// private store; a shared reference can serve many threads at once.
pub struct Evaluator {
    memo: Option<MemoStore>,
}

impl Evaluator {
    /// Evaluator with a fresh memo store.
    pub fn new() -> Self {
        Evaluator {
            memo: Some(MemoStore::new()),
        }
    }

    /// Evaluator that recomputes everything, as a cross-check.
    pub fn uncached() -> Self {
        Evaluator { memo: None }
    }

    pub fn memo(&self) -> Option<&MemoStore> {
        self.memo.as_ref()
    }

    /// chi^lambda(mu). Errors unless |lambda| = |mu|.
    pub fn value(&self, lambda: &Partition, mu: &CycleType) -> Result<CharValue> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch {
                lambda: lambda.size(),
                mu: mu.size(),
            });
        }
        Ok(self.mn(lambda, mu.parts()))
    }

    // Invariant on entry: |lambda| equals the sum of mu_rest.
    fn mn(&self, lambda: &Partition, mu_rest: &[u32]) -> CharValue {
        if mu_rest.is_empty() {
            debug_assert!(lambda.is_empty());
            return CharValue::one();
        }
        let key: MemoKey = (lambda.parts().to_vec(), mu_rest.to_vec());
        if let Some(store) = &self.memo {
            if let Some(v) = store.get(&key) {
                return v;
            }
        }
        let h = mu_rest[0] as u64;
        let mut acc = CharValue::zero();
        for (removed, sign) in BetaSet::from_partition(lambda).hook_removals(h) {
            let value = self.mn(&removed.to_partition(), &mu_rest[1..]);
            if sign > 0 {
                acc += value;
            } else {
                acc -= value;
            }
        }
        if let Some(store) = &self.memo {
            store.insert(key, acc.clone());
        }
        acc
    }

    /// Character table of the symmetric group on n points: rows lambda,
    /// columns mu, both over partitions of n in lexicographically decreasing
    /// order. Rows are filled in parallel against the shared store.
    pub fn character_table(&self, n: u64) -> Result<CharacterTable> {
        self.character_table_bounded(n, DEFAULT_TABLE_BOUND)
    }

    pub fn character_table_bounded(&self, n: u64, bound: u64) -> Result<CharacterTable> {
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "table size n",
                got: n,
                bound,
            });
        }
        let labels: Vec<Partition> = partitions_of_with(n, None, bound)?.collect();
        let classes: Vec<CycleType> = labels.iter().cloned().map(CycleType::from).collect();
        let values: Vec<Vec<CharValue>> = labels
            .par_iter()
            .map(|lam| classes.iter().map(|mu| self.mn(lam, mu.parts())).collect())
            .collect();
        Ok(CharacterTable { n, labels, values })
    }

    /// Sum of chi^(n-j, j)(mu)^2 over the two-row shapes, 0 <= j <= n/2.
    pub fn two_row_square_sum(&self, n: u64, mu: &CycleType) -> Result<CharValue> {
        if mu.size() != n {
            return Err(Error::SizeMismatch {
                lambda: n,
                mu: mu.size(),
            });
        }
        let mut acc = CharValue::zero();
        for j in 0..=n / 2 {
            let shape =
                Partition::two_row((n - j) as i64, j as i64).expect("n - j >= j >= 0 by range");
            let v = self.mn(&shape, mu.parts());
            acc += &v * &v;
        }
        Ok(acc)
    }

    /// Sum of chi^(j, 1^(n-j))(mu)^2 over the hook shapes, 1 <= j <= n.
    /// The sum is empty (zero) for n = 0.
    pub fn hook_square_sum(&self, n: u64, mu: &CycleType) -> Result<CharValue> {
        if mu.size() != n {
            return Err(Error::SizeMismatch {
                lambda: n,
                mu: mu.size(),
            });
        }
        let mut acc = CharValue::zero();
        for j in 1..=n {
            let shape = Partition::hook(j as i64, (n - j) as i64).expect("arm >= 1 by range");
            let v = self.mn(&shape, mu.parts());
            acc += &v * &v;
        }
        Ok(acc)
    }
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

/// Dimension of the representation labelled by lambda: n! over the product
/// of all hook lengths. Exact; the division always comes out even.
pub fn dimension(lambda: &Partition) -> CharValue {
    let n = lambda.size();
    let mut numer = BigUint::one();
    for k in 2..=n {
        numer *= BigUint::from(k);
    }
    let conj = lambda.conjugate();
    let mut denom = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as u64 {
            let arm = row as u64 - j - 1;
            let leg = conj.parts()[j as usize] as u64 - i as u64 - 1;
            denom *= BigUint::from(arm + leg + 1);
        }
    }
    BigInt::from(numer / denom)
}

/// A full symmetric group character table with its row/column labels.
pub struct CharacterTable {
    n: u64,
    labels: Vec<Partition>,
    values: Vec<Vec<CharValue>>,
}

impl CharacterTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn values(&self) -> &[Vec<CharValue>] {
        &self.values
    }

    pub fn value(&self, row: usize, col: usize) -> &CharValue {
        &self.values[row][col]
    }

    /// CSV: first row and first column carry quoted partition labels, the
    /// corner is an empty quoted field, values are bare decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("\"\"");
        for mu in &self.labels {
            out.push_str(&format!(",\"{mu}\""));
        }
        out.push('\n');
        for (lam, row) in self.labels.iter().zip(&self.values) {
            out.push_str(&format!("\"{lam}\""));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    /// JSON object; values are exact decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "values": self
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        let row_width = labels.iter().map(String::len).max().unwrap_or(0);
        let col_widths: Vec<usize> = labels
            .iter()
            .enumerate()
            .map(|(c, label)| {
                self.values
                    .iter()
                    .map(|row| row[c].to_string().len())
                    .chain(std::iter::once(label.len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        write!(f, "{:row_width$}", "")?;
        for (label, w) in labels.iter().zip(&col_widths) {
            write!(f, "  {label:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in labels.iter().zip(&self.values) {
            write!(f, "{label:<row_width$}")?;
            for (v, w) in row.iter().zip(&col_widths) {
                write!(f, "  {v:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_into_odd_parts, partitions_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn int(v: i64) -> CharValue {
        CharValue::from(v)
    }

    #[test]
    fn base_case_and_small_values() {
        let ev = Evaluator::new();
        assert_eq!(
            ev.value(&Partition::empty(), &CycleType::from(Partition::empty()))
                .unwrap(),
            int(1)
        );
        assert_eq!(ev.value(&p("3,2"), &ct("3,2")).unwrap(), int(1));
        assert_eq!(ev.value(&p("5,1,1"), &ct("4,3")).unwrap(), int(1));
        assert_eq!(ev.value(&p("6"), &ct("3,2,1")).unwrap(), int(1));
        assert_eq!(ev.value(&p("1^5"), &ct("2,1,1,1")).unwrap(), int(-1));
        assert_eq!(ev.value(&p("2,1"), &ct("3")).unwrap(), int(-1));
        assert_eq!(ev.value(&p("2,1"), &ct("2,1")).unwrap(), int(0));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let ev = Evaluator::new();
        assert_eq!(
            ev.value(&p("3,2"), &ct("3,2,1")),
            Err(Error::SizeMismatch { lambda: 5, mu: 6 })
        );
    }

    #[test]
    fn trivial_and_sign_characters() {
        let ev = Evaluator::new();
        for n in 0..=8u64 {
            for mu in partitions_of(n).unwrap() {
                let mu = CycleType::from(mu);
                let row = Partition::row(n as u32);
                let col = Partition::column(n as u32);
                assert_eq!(ev.value(&row, &mu).unwrap(), int(1));
                assert_eq!(ev.value(&col, &mu).unwrap(), int(mu.sign() as i64));
            }
        }
    }

    #[test]
    fn s3_table_matches_the_classical_one() {
        let table = Evaluator::new().character_table(3).unwrap();
        assert_eq!(table.labels(), &[p("3"), p("2,1"), p("1,1,1")]);
        let expected = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
        for (i, row) in expected.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(table.value(i, k), &int(v), "row {i} col {k}");
            }
        }
    }

    #[test]
    fn s2_table_and_serialized_forms() {
        let table = Evaluator::new().character_table(2).unwrap();
        assert_eq!(table.to_csv(), "\"\",\"2\",\"1,1\"\n\"2\",1,1\n\"1,1\",-1,1\n");
        let json = table.to_json();
        assert_eq!(json["n"], 2);
        assert_eq!(json["labels"][1], "1,1");
        assert_eq!(json["values"][1][0], "-1");
    }

    #[test]
    fn table_bound_is_enforced() {
        assert!(matches!(
            Evaluator::new().character_table(15),
            Err(Error::BoundExceeded { bound: 14, .. })
        ));
        assert!(Evaluator::new().character_table_bounded(15, 15).is_ok());
    }

    #[test]
    fn single_cell_table_for_n_zero() {
        let table = Evaluator::new().character_table(0).unwrap();
        assert_eq!(table.labels(), &[Partition::empty()]);
        assert_eq!(table.value(0, 0), &int(1));
    }

    // Row orthogonality: sum over classes of |class| chi^lam chi^nu is
    // n! exactly when lam = nu.
    #[test]
    fn row_orthogonality_for_s5() {
        let table = Evaluator::new().character_table(5).unwrap();
        let fact: BigUint = (1u32..=5).map(BigUint::from).product();
        let class_sizes: Vec<BigInt> = table
            .labels()
            .iter()
            .map(|mu| BigInt::from(&fact / CycleType::from(mu.clone()).centralizer_order()))
            .collect();
        for a in 0..table.labels().len() {
            for b in 0..table.labels().len() {
                let inner: BigInt = (0..table.labels().len())
                    .map(|c| &class_sizes[c] * table.value(a, c) * table.value(b, c))
                    .sum();
                let expected = if a == b {
                    BigInt::from(fact.clone())
                } else {
                    BigInt::zero()
                };
                assert_eq!(inner, expected, "rows {a}, {b}");
            }
        }
    }

    #[test]
    fn dimensions_by_hook_lengths() {
        assert_eq!(dimension(&Partition::empty()), int(1));
        assert_eq!(dimension(&p("2,1")), int(2));
        assert_eq!(dimension(&p("3,2")), int(5));
        assert_eq!(dimension(&p("3,2,1")), int(16));
        assert_eq!(dimension(&p("4,3,2,1")), int(768));
        // and against the evaluator at the identity class
        let ev = Evaluator::new();
        for n in 0..=9u64 {
            let id = CycleType::from(Partition::column(n as u32));
            for lam in partitions_of(n).unwrap() {
                assert_eq!(ev.value(&lam, &id).unwrap(), dimension(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn conjugating_lambda_multiplies_by_the_class_sign() {
        let ev = Evaluator::new();
        for n in 0..=8u64 {
            for lam in partitions_of(n).unwrap() {
                for mu in partitions_of(n).unwrap() {
                    let mu = CycleType::from(mu);
                    let direct = ev.value(&lam, &mu).unwrap();
                    let conj = ev.value(&lam.conjugate(), &mu).unwrap();
                    assert_eq!(conj, direct * int(mu.sign() as i64), "{lam} at {mu}");
                }
            }
        }
    }

    #[test]
    fn conjugate_agrees_on_two_regular_classes() {
        let ev = Evaluator::new();
        for n in 0..=8u64 {
            for lam in partitions_of(n).unwrap() {
                for mu in partitions_into_odd_parts(n).unwrap() {
                    let mu = CycleType::from(mu);
                    assert_eq!(
                        ev.value(&lam, &mu).unwrap(),
                        ev.value(&lam.conjugate(), &mu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn square_sums() {
        let ev = Evaluator::new();
        assert_eq!(ev.two_row_square_sum(3, &ct("3")).unwrap(), int(2));
        assert_eq!(ev.two_row_square_sum(2, &ct("2")).unwrap(), int(2));
        assert_eq!(
            ev.two_row_square_sum(0, &CycleType::from(Partition::empty()))
                .unwrap(),
            int(1)
        );
        assert_eq!(ev.hook_square_sum(5, &ct("3,2")).unwrap(), int(4));
        assert_eq!(ev.hook_square_sum(3, &ct("1,1,1")).unwrap(), int(6));
        assert_eq!(ev.hook_square_sum(1, &ct("1")).unwrap(), int(1));
        assert_eq!(
            ev.hook_square_sum(0, &CycleType::from(Partition::empty()))
                .unwrap(),
            int(0)
        );
        assert!(ev.two_row_square_sum(4, &ct("3")).is_err());
        assert!(ev.hook_square_sum(4, &ct("3")).is_err());
    }

    #[test]
    fn memoized_and_uncached_agree() {
        let memoized = Evaluator::new();
        let plain = Evaluator::uncached();
        for lam in partitions_of(6).unwrap() {
            for mu in partitions_of(6).unwrap() {
                let mu = CycleType::from(mu);
                assert_eq!(
                    memoized.value(&lam, &mu).unwrap(),
                    plain.value(&lam, &mu).unwrap(),
                    "{lam} at {mu}"
                );
            }
        }
        assert!(memoized.memo().unwrap().hits() > 0);
        assert!(plain.memo().is_none());
    }

    #[test]
    fn repeat_queries_hit_the_store() {
        let ev = Evaluator::new();
        ev.value(&p("4,2,1"), &ct("3,2,1,1")).unwrap();
        let hits_before = ev.memo().unwrap().hits();
        ev.value(&p("4,2,1"), &ct("3,2,1,1")).unwrap();
        assert!(ev.memo().unwrap().hits() > hits_before);
    }

    #[test]
    fn cache_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("values.cache");

        let ev = Evaluator::new();
        let expected = ev.value(&p("5,1,1"), &ct("4,3")).unwrap();
        let written = ev.memo().unwrap().append_new(&path).unwrap();
        assert!(written > 0);

        let fresh = MemoStore::new();
        let report = fresh.load_file(&path).unwrap();
        assert_eq!(report.loaded, written);
        assert_eq!(report.skipped, 0);
        assert_eq!(
            fresh.get(&(vec![5, 1, 1], vec![4, 3])).unwrap(),
            expected
        );

        // appending again writes nothing new
        let again = Evaluator::new();
        again.memo().unwrap().load_file(&path).unwrap();
        again.value(&p("5,1,1"), &ct("4,3")).unwrap();
        assert_eq!(again.memo().unwrap().append_new(&path).unwrap(), 0);
    }

    #[test]
    fn corrupt_cache_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("values.cache");
        std::fs::write(
            &path,
            "3,2|3,2|1\nnot a record\n4|4|not a number\n3,2|2,2,1|0\n2,1|3|-1|extra\n5|3,2\n",
        )
        .unwrap();
        let store = MemoStore::new();
        let report = store.load_file(&path).unwrap();
        assert_eq!(report.loaded, 2);
        assert_eq!(report.skipped, 4);
        assert_eq!(store.get(&(vec![3, 2], vec![3, 2])).unwrap(), int(1));
    }

    #[test]
    fn cache_rejects_size_mismatched_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("values.cache");
        std::fs::write(&path, "3,2|3,1|1\n").unwrap();
        let store = MemoStore::new();
        let report = store.load_file(&path).unwrap();
        assert_eq!(report.loaded, 0);
        assert_eq!(report.skipped, 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition(max_n: u64) -> impl Strategy<Value = Partition> {
            (0..=max_n).prop_flat_map(move |n| {
                let all: Vec<Partition> = partitions_of(n).unwrap().collect();
                (0..all.len()).prop_map(move |i| all[i].clone())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn memo_does_not_change_values(lam in arb_partition(9)) {
                let classes: Vec<Partition> = partitions_of(lam.size()).unwrap().collect();
                let memoized = Evaluator::new();
                let plain = Evaluator::uncached();
                for mu in classes {
                    let mu = CycleType::from(mu);
                    prop_assert_eq!(
                        memoized.value(&lam, &mu).unwrap(),
                        plain.value(&lam, &mu).unwrap()
                    );
                }
            }
        }
    }
}
