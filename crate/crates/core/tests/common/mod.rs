//! A second, independent character engine used only for cross-checking.
//!
//! Everything here works directly on Young diagram rows. Rim hooks are found
//! cell by cell from hook lengths, removals rebuild the row list explicitly,
//! and the recursion strips the smallest part of mu first, the opposite
//! order from the main engine. No beta-sets anywhere.

use num_bigint::BigInt;

/// Number of cells in column j (1-indexed) of the diagram with these rows.
fn column_height(rows: &[u32], j: u32) -> usize {
    rows.iter().take_while(|&&len| len >= j).count()
}

/// Every way to remove a rim hook of h cells, as (remaining rows, leg length).
/// Rim hooks correspond to cells (i, j) with hook length exactly h; removing
/// the hook of (i, j) replaces row k by row_{k+1} - 1 for i <= k < r and row
/// r by j - 1, where r is the height of column j. The leg length is r - i.
pub fn rim_hook_removals(rows: &[u32], h: u64) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    if h == 0 {
        return out;
    }
    for i in 1..=rows.len() {
        for j in 1..=rows[i - 1] {
            let arm = (rows[i - 1] - j) as u64;
            let r = column_height(rows, j);
            let leg = (r - i) as u64;
            if arm + leg + 1 != h {
                continue;
            }
            let mut next = rows.to_vec();
            for k in i..r {
                next[k - 1] = rows[k] - 1;
            }
            next[r - 1] = j - 1;
            while next.last() == Some(&0) {
                next.pop();
            }
            assert!(
                next.windows(2).all(|w| w[0] >= w[1]),
                "removal from {rows:?} at ({i},{j}) left non-partition {next:?}"
            );
            out.push((next, (r - i) as u32));
        }
    }
    out
}

/// chi^lambda(mu) recursively, stripping the smallest part of mu first and
/// recomputing everything from scratch. mu must be sorted decreasing.
pub fn character_value(lambda: &[u32], mu: &[u32]) -> BigInt {
    match mu.split_last() {
        None => {
            assert!(lambda.is_empty());
            BigInt::from(1)
        }
        Some((&smallest, rest)) => {
            let mut acc = BigInt::from(0);
            for (remaining, leg) in rim_hook_removals(lambda, smallest as u64) {
                let term = character_value(&remaining, rest);
                if leg % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}
