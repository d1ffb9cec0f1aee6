//! Integer partitions with their rank, sum of squares, and a
//! reverse-lexicographic enumerator.
//!
//! A partition of `n` is a weakly decreasing list of positive parts summing
//! to `n`. Its rank is `largest part - number of parts`; partitions of rank
//! zero are called balanced.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default largest `n` the enumerator accepts; p(60) is just under a million.
pub const DEFAULT_ENUMERATION_CAP: u64 = 60;
/// Hard ceiling for the enumeration cap; p(70) is about four million.
pub const MAX_ENUMERATION_CAP: u64 = 70;

/// A partition of a positive integer, parts stored largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts already sorted largest first.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::UnsortedParts);
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        self.parts[0] as i64 - self.parts.len() as i64
    }

    /// `true` iff the largest part equals the number of parts.
    pub fn is_balanced(&self) -> bool {
        self.rank() == 0
    }

    /// Sum of the squared parts; errors if it does not fit in u64.
    pub fn sum_of_squares(&self) -> Result<u64> {
        let mut acc: u64 = 0;
        for &p in &self.parts {
            let sq = p.checked_mul(p).ok_or(Error::Overflow)?;
            acc = acc.checked_add(sq).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Moves one unit from part `j` to part `k` (indices with `j < k`,
    /// `parts[j] > parts[k] + 1`), re-sorting the result. This strictly
    /// decreases the sum of squares.
    pub fn exchange(&self, j: usize, k: usize) -> Result<Partition> {
        if j >= k || k >= self.parts.len() || self.parts[j] <= self.parts[k] + 1 {
            return Err(Error::BadExchange { j, k });
        }
        let mut parts = self.parts.clone();
        parts[j] -= 1;
        parts[k] += 1;
        Self::from_unsorted(parts)
    }

    /// Compact text form: runs of four or more equal parts compress to
    /// `part*count`, e.g. `17+6+6+6+5*13`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == part {
                run += 1;
            }
            if !out.is_empty() {
                out.push('+');
            }
            if run >= 4 {
                out.push_str(&format!("{part}*{run}"));
            } else {
                for r in 0..run {
                    if r > 0 {
                        out.push('+');
                    }
                    out.push_str(&part.to_string());
                }
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Serializes as a plain JSON array of parts, largest first.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u64>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order (largest first),
/// optionally filtered to rank at least `min_rank`. Uses
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate(n: u64, min_rank: Option<i64>) -> Result<Partitions> {
    enumerate_with_cap(n, min_rank, DEFAULT_ENUMERATION_CAP)
}

/// Like [`enumerate`] with an explicit cap (at most [`MAX_ENUMERATION_CAP`]).
pub fn enumerate_with_cap(n: u64, min_rank: Option<i64>, cap: u64) -> Result<Partitions> {
    let cap = cap.min(MAX_ENUMERATION_CAP);
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(Partitions {
        cur: Some(vec![n]),
        min_rank,
    })
}

/// Iterator over the partitions of a fixed `n`, largest first.
pub struct Partitions {
    cur: Option<Vec<u64>>,
    min_rank: Option<i64>,
}

impl Partitions {
    /// Advances `cur` to its reverse-lexicographic successor in place;
    /// `false` once the all-ones partition has been passed.
    fn advance(cur: &mut Vec<u64>) -> bool {
        // Rightmost part that can still shrink.
        let Some(i) = cur.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let ones = (cur.len() - i - 1) as u64;
        let v = cur[i] - 1;
        cur.truncate(i);
        cur.push(v);
        // Redistribute the freed units greedily to stay largest-first.
        let mut rem = ones + 1;
        while rem > v {
            cur.push(v);
            rem -= v;
        }
        cur.push(rem);
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let cur = self.cur.as_mut()?;
            let rank = cur[0] as i64 - cur.len() as i64;
            let keep = self.min_rank.is_none_or(|mr| rank >= mr);
            let item = keep.then(|| Partition { parts: cur.clone() });
            if !Self::advance(cur) {
                self.cur = None;
            }
            if item.is_some() {
                return item;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Partition counts via the pentagonal-number recurrence, as an
    /// independent check on the enumerator.
    fn partition_counts(up_to: usize) -> Vec<u64> {
        let mut p = vec![0i64; up_to + 1];
        p[0] = 1;
        for n in 1..=up_to as i64 {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let sign = if k % 2 == 0 { -1 } else { 1 };
                acc += sign * p[(n - g1) as usize];
                if g2 <= n {
                    acc += sign * p[(n - g2) as usize];
                }
                k += 1;
            }
            p[n as usize] = acc;
        }
        p.into_iter().map(|c| c as u64).collect()
    }

    fn parts(p: &Partition) -> Vec<u64> {
        p.parts().to_vec()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(Partition::new(vec![]), Err(Error::EmptyPartition));
        assert_eq!(Partition::new(vec![2, 0]), Err(Error::ZeroPart));
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::UnsortedParts));
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
    }

    #[test]
    fn rank_and_balance() {
        let p = Partition::new(vec![2, 1, 1, 1]).unwrap();
        assert_eq!(p.rank(), -2);
        assert!(!p.is_balanced());
        let q = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(q.rank(), 0);
        assert!(q.is_balanced());
        assert_eq!(Partition::new(vec![5]).unwrap().rank(), 4);
    }

    #[test]
    fn sum_of_squares_basics() {
        let p = Partition::new(vec![5, 3, 3, 3, 3]).unwrap();
        assert_eq!(p.sum_of_squares(), Ok(61));
        assert_eq!(p.n(), 17);
        let big = Partition::new(vec![u64::MAX / 2]).unwrap();
        assert_eq!(big.sum_of_squares(), Err(Error::Overflow));
    }

    #[test]
    fn parity_matches_n_mod_two() {
        // part^2 has the parity of part, so the sum of squares has the parity of n.
        for n in 1..=30 {
            for p in enumerate(n, None).unwrap() {
                assert_eq!(p.sum_of_squares().unwrap() % 2, n % 2, "{p:?}");
            }
        }
    }

    #[test]
    fn exchange_moves_a_unit_and_decreases_squares() {
        let p = Partition::new(vec![6, 3, 2, 2, 2, 2]).unwrap();
        let q = p.exchange(0, 1).unwrap();
        assert_eq!(parts(&q), [5, 4, 2, 2, 2, 2]);
        assert_eq!(p.sum_of_squares(), Ok(61));
        assert_eq!(q.sum_of_squares(), Ok(57));
        assert_eq!(p.exchange(1, 0), Err(Error::BadExchange { j: 1, k: 0 }));
        // Gap of one is not exchangeable.
        assert_eq!(p.exchange(1, 2), Err(Error::BadExchange { j: 1, k: 2 }));
    }

    #[test]
    fn enumeration_order_is_reverse_lexicographic() {
        let got: Vec<Vec<u64>> = enumerate(5, None).unwrap().map(|p| parts(&p)).collect();
        assert_eq!(
            got,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn rank_filter_examples() {
        let got: Vec<Vec<u64>> = enumerate(3, Some(0)).unwrap().map(|p| parts(&p)).collect();
        assert_eq!(got, vec![vec![3], vec![2, 1]]);
        let got: Vec<Vec<u64>> = enumerate(4, Some(0)).unwrap().map(|p| parts(&p)).collect();
        assert_eq!(got, vec![vec![4], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let expect = partition_counts(60);
        assert_eq!(expect[12], 77);
        assert_eq!(expect[60], 966_467);
        for n in 1..=60u64 {
            let count = enumerate(n, None).unwrap().count() as u64;
            assert_eq!(count, expect[n as usize], "p({n})");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate(61, None),
            Err(Error::CapExceeded { n: 61, cap: 60 })
        ));
        assert!(enumerate_with_cap(61, None, 70).is_ok());
        // Caps above the hard maximum clamp instead of enumerating forever.
        assert!(matches!(
            enumerate_with_cap(75, None, 1_000),
            Err(Error::CapExceeded { n: 75, cap: 70 })
        ));
    }

    #[test]
    fn compact_form_compresses_long_runs_only() {
        let p = Partition::from_unsorted([17, 6, 6, 6].into_iter().chain([5; 13])).unwrap();
        assert_eq!(p.compact(), "17+6+6+6+5*13");
        assert_eq!(
            Partition::new(vec![5, 3, 3, 3, 3]).unwrap().compact(),
            "5+3*4"
        );
        assert_eq!(Partition::new(vec![3, 2, 1]).unwrap().compact(), "3+2+1");
        assert_eq!(Partition::new(vec![1]).unwrap().compact(), "1");
    }

    #[test]
    fn json_round_trip_is_an_array() {
        let p = Partition::new(vec![6, 3, 2, 2, 2, 2]).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[6,3,2,2,2,2]");
        let back: Partition = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Partition>("[]").is_err());
    }
}
