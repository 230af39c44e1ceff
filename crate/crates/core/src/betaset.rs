//! Beta-sets: first-column hook length encodings of partitions.
//!
//! For a partition lambda with parts lambda_1 >= ... >= lambda_l the beta-set
//! is {lambda_i + l - i : i = 1..l}, a strictly decreasing set of nonnegative
//! integers. Removing a rim hook of length h from lambda is the same as
//! replacing some entry x by x - h, provided x >= h and x - h is not already
//! present; the sign of the removal is read off by re-sorting. This turns the
//! Murnaghan-Nakayama recursion into integer arithmetic on small sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite strictly decreasing set of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<u64>,
}

impl BetaSet {
    /// Beta-set of lambda with exactly length(lambda) entries.
    pub fn from_partition(lambda: &Partition) -> Self {
        let l = lambda.len() as u64;
        let entries = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 + l - 1 - i as u64)
            .collect();
        BetaSet { entries }
    }

    /// Beta-set of lambda padded to `length` entries. Errors when `length`
    /// is shorter than the partition.
    pub fn from_partition_with_length(lambda: &Partition, length: usize) -> Result<Self> {
        let l = lambda.len();
        if length < l {
            return Err(Error::BetaLengthTooShort {
                requested: length,
                required: l,
            });
        }
        let base = Self::from_partition(lambda);
        Ok(base.shift((length - l) as u64))
    }

    /// Builds from entries in any order. Panics on repeats.
    pub fn new(mut entries: Vec<u64>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        assert!(
            entries.windows(2).all(|w| w[0] > w[1]),
            "beta-set entries must be distinct"
        );
        BetaSet { entries }
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The partition this set encodes: entry i (decreasing order, m entries)
    /// contributes part x_i - (m - i); zero parts are dropped.
    pub fn to_partition(&self) -> Partition {
        let m = self.entries.len() as u64;
        let mut parts = Vec::with_capacity(self.entries.len());
        for (i, &x) in self.entries.iter().enumerate() {
            let part = x - (m - 1 - i as u64);
            if part > 0 {
                parts.push(part as u32);
            }
        }
        Partition::from_sorted(parts)
    }

    /// The r-shift {x + r : x in self} plus the new tail {r-1, ..., 1, 0}.
    /// Encodes the same partition with r more entries; r = 0 is the identity.
    pub fn shift(&self, r: u64) -> Self {
        let mut entries: Vec<u64> = self.entries.iter().map(|&x| x + r).collect();
        entries.extend((0..r).rev());
        BetaSet { entries }
    }

    /// All ways to remove an h-hook: each entry x with x >= h and x - h not
    /// in the set gives a new beta-set with x replaced by x - h, paired with
    /// the sign of that removal. Results are ordered by decreasing x.
    /// An empty list means the partition has no h-hook.
    pub fn hook_removals(&self, h: u64) -> Vec<(BetaSet, i32)> {
        let mut out = Vec::new();
        if h == 0 {
            return out;
        }
        for (i, &x) in self.entries.iter().enumerate() {
            if x < h {
                break;
            }
            let target = x - h;
            if self.entries.contains(&target) {
                continue;
            }
            // sign of the sequence with x replaced in place, then a re-sort
            let substituted: Vec<i64> = self
                .entries
                .iter()
                .enumerate()
                .map(|(k, &e)| if k == i { target as i64 } else { e as i64 })
                .collect();
            let sign = OrderedBetaSet::new(substituted)
                .sign()
                .expect("substitution keeps entries distinct and nonnegative");
            let mut entries = self.entries.clone();
            entries[i] = target;
            entries.sort_unstable_by(|a, b| b.cmp(a));
            out.push((BetaSet { entries }, sign));
        }
        out
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A fixed-length sequence of integers standing for a beta-set without the
/// ordering normalized. Entries may repeat or go negative; such sequences are
/// improper and carry no partition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderedBetaSet {
    entries: Vec<i64>,
}

impl OrderedBetaSet {
    pub fn new(entries: Vec<i64>) -> Self {
        OrderedBetaSet { entries }
    }

    pub fn pair(x: i64, y: i64) -> Self {
        OrderedBetaSet {
            entries: vec![x, y],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Proper means all entries distinct and nonnegative.
    pub fn is_proper(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, x)| !self.entries[i + 1..].contains(x))
    }

    /// Sign of the permutation sorting the sequence into strictly decreasing
    /// order: parity of the number of out-of-order pairs. Errors on an
    /// improper sequence.
    pub fn sign(&self) -> Result<i32> {
        if !self.is_proper() {
            return Err(Error::ImproperOrderedBetaSet);
        }
        let mut inversions = 0u64;
        for i in 0..self.entries.len() {
            for k in i + 1..self.entries.len() {
                if self.entries[i] < self.entries[k] {
                    inversions += 1;
                }
            }
        }
        Ok(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// Reads a length-2 sequence ((x, y)) as a signed 2-row character:
    /// chi^(x-1, y) when x > y >= 0, minus chi^(y-1, x) when y > x >= 0,
    /// and zero when x = y or either entry is negative.
    pub fn virtual_char(&self) -> Result<VirtualChar2Row> {
        match self.entries[..] {
            [x, y] => Ok(virtual_char_pair(x, y)),
            _ => Err(Error::NotAPair(self.entries.len())),
        }
    }
}

/// `OrderedBetaSet::virtual_char` for a bare pair of labels.
pub fn virtual_char_pair(x: i64, y: i64) -> VirtualChar2Row {
    if x < 0 || y < 0 || x == y {
        return VirtualChar2Row::Zero;
    }
    let (sign, a, b) = if x > y { (1, x - 1, y) } else { (-1, y - 1, x) };
    let shape = Partition::two_row(a, b).expect("x > y >= 0 makes (x-1, y) a valid two-row shape");
    VirtualChar2Row::Term { sign, shape }
}

/// A virtual character with at most two rows: zero, or a sign times a
/// genuine character.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum VirtualChar2Row {
    Zero,
    Term { sign: i32, shape: Partition },
}

impl VirtualChar2Row {
    pub fn is_zero(&self) -> bool {
        matches!(self, VirtualChar2Row::Zero)
    }
}

impl fmt::Display for VirtualChar2Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VirtualChar2Row::Zero => write!(f, "0"),
            VirtualChar2Row::Term { sign, shape } => {
                write!(f, "{}chi^({shape})", if *sign < 0 { "-" } else { "+" })
            }
        }
    }
}
