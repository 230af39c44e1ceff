//! Integer partitions and symmetric group class labels.
//!
//! Partitions are stored as weakly decreasing positive parts; the empty
//! partition stands for the partition of 0 and prints as the empty string.
//! Text form: comma-separated terms, each `part` or `part^multiplicity`,
//! e.g. `4,2,1` or `2^3,1^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Cap on `partitions_of` unless overridden; enumeration past this point is
/// almost certainly an accident (p(40) = 37338 and roughly doubling every 3).
pub const DEFAULT_GENERATION_BOUND: u64 = 40;

/// Parser refuses to materialize more parts than this.
const MAX_PARSED_PARTS: u64 = 1_000_000;

/// A partition: weakly decreasing positive parts summing to its size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on a zero part.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().map(|&p| p as u64).sum();
        Partition { parts, size }
    }

    /// The partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            size: 0,
        }
    }

    /// The one-row partition (n); empty when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition (1^n).
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// The hook (arm, 1^leg), or None when that is not a partition.
    /// (0, 1^0) is the empty partition; any other zero or negative arm,
    /// or a negative leg, yields None.
    pub fn hook(arm: i64, leg: i64) -> Option<Self> {
        if arm == 0 && leg == 0 {
            return Some(Self::empty());
        }
        if arm < 1 || leg < 0 {
            return None;
        }
        let arm = u32::try_from(arm).ok()?;
        let leg = usize::try_from(leg).ok()?;
        let mut parts = vec![1u32; leg + 1];
        parts[0] = arm;
        Some(Self::from_sorted(parts))
    }

    /// The two-row partition (a, b), or None unless a >= b >= 0.
    /// Zero rows are dropped, so (a, 0) is the single row (a).
    pub fn two_row(a: i64, b: i64) -> Option<Self> {
        if a < b || b < 0 {
            return None;
        }
        let a = u32::try_from(a).ok()?;
        let b = b as u32;
        match (a, b) {
            (0, _) => Some(Self::empty()),
            (_, 0) => Some(Self::from_sorted(vec![a])),
            _ => Some(Self::from_sorted(vec![a, b])),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(width as usize);
        for k in 1..=width {
            parts.push(self.parts.iter().take_while(|&&p| p >= k).count() as u32);
        }
        Partition {
            parts,
            size: self.size,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts: Vec<u32> = Vec::new();
        for term in trimmed.split(',') {
            let term = term.trim();
            let (base, mult) = match term.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim()),
                None => (term, "1"),
            };
            let part = parse_int(base, s)?;
            let mult = parse_int(mult, s)?;
            if parts.len() as u64 + mult as u64 > MAX_PARSED_PARTS {
                return Err(Error::ParsePartition(format!(
                    "`{s}` expands to more than {MAX_PARSED_PARTS} parts"
                )));
            }
            parts.extend(std::iter::repeat(part).take(mult as usize));
        }
        Ok(Self::new(parts))
    }
}

fn parse_int(token: &str, whole: &str) -> Result<u32> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParsePartition(format!(
            "bad integer `{token}` in `{whole}`"
        )));
    }
    let value: u32 = token
        .parse()
        .map_err(|_| Error::ParsePartition(format!("integer `{token}` in `{whole}` is too large")))?;
    if value == 0 {
        return Err(Error::ParsePartition(format!(
            "zero is not allowed in `{whole}`"
        )));
    }
    Ok(value)
}

/// A conjugacy class of a symmetric group, labelled by its cycle type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(p: Partition) -> Self {
        CycleType(p)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    /// Size of the permuted set; the class lives in the symmetric group on
    /// this many points.
    pub fn size(&self) -> u64 {
        self.0.size()
    }

    /// Sign of any permutation with this cycle type: (-1)^(size - cycles).
    pub fn sign(&self) -> i32 {
        if (self.size() - self.0.len() as u64) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// True when every part is odd; vacuously true for the empty class.
    pub fn is_two_regular(&self) -> bool {
        self.parts().iter().all(|&p| p % 2 == 1)
    }

    /// Centralizer order of this class: prod over distinct parts i of
    /// i^{m_i} * m_i! where m_i is the multiplicity of i.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::from(1u32);
        let parts = self.parts();
        let mut i = 0;
        while i < parts.len() {
            let run_start = i;
            while i < parts.len() && parts[i] == parts[run_start] {
                i += 1;
            }
            let mult = (i - run_start) as u32;
            z *= BigUint::from(parts[run_start]).pow(mult);
            for k in 2..=mult {
                z *= BigUint::from(k);
            }
        }
        z
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CycleType(s.parse()?))
    }
}

/// Optional part filter for partition generation.
pub type PartFilter = fn(u32) -> bool;

/// All partitions of n, lexicographically decreasing, under the default bound.
pub fn partitions_of(n: u64) -> Result<Partitions> {
    partitions_of_with(n, None, DEFAULT_GENERATION_BOUND)
}

/// Partitions of n into odd parts, lexicographically decreasing.
pub fn partitions_into_odd_parts(n: u64) -> Result<Partitions> {
    partitions_of_with(n, Some(|p| p % 2 == 1), DEFAULT_GENERATION_BOUND)
}

/// Partition stream with an optional part filter and an explicit bound on n.
pub fn partitions_of_with(n: u64, filter: Option<PartFilter>, bound: u64) -> Result<Partitions> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "n",
            got: n,
            bound,
        });
    }
    Ok(Partitions {
        filter,
        prefix: Vec::new(),
        remaining: n,
        candidate: n.min(u32::MAX as u64) as u32,
        started: false,
        done: false,
    })
}

/// Backtracking generator behind `partitions_of`. Parts are chosen largest
/// first, so the stream is lexicographically decreasing.
pub struct Partitions {
    filter: Option<PartFilter>,
    prefix: Vec<u32>,
    remaining: u64,
    candidate: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    // Largest allowed part <= min(candidate, remaining), if any.
    fn next_part(&self) -> Option<u32> {
        let cap = (self.candidate as u64).min(self.remaining) as u32;
        let mut c = cap;
        while c >= 1 {
            if self.filter.map_or(true, |f| f(c)) {
                return Some(c);
            }
            c -= 1;
        }
        None
    }

    // Undo the last choice; false when there is nothing left to undo.
    fn pop(&mut self) -> bool {
        match self.prefix.pop() {
            Some(p) => {
                self.remaining += p as u64;
                self.candidate = p - 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.remaining == 0 {
                self.done = true;
                return Some(Partition::empty());
            }
        } else if !self.pop() {
            self.done = true;
            return None;
        }
        loop {
            while self.remaining > 0 {
                match self.next_part() {
                    Some(c) => {
                        self.prefix.push(c);
                        self.remaining -= c as u64;
                        self.candidate = c;
                    }
                    None => break,
                }
            }
            if self.remaining == 0 {
                return Some(Partition::from_sorted(self.prefix.clone()));
            }
            if !self.pop() {
                self.done = true;
                return None;
            }
        }
    }
}
