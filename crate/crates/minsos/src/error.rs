use thiserror::Error;

/// Everything that can go wrong across the crate, in one place.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing")]
    UnsortedParts,
    #[error("sum of squares does not fit in u64")]
    Overflow,
    #[error("n = {n} exceeds the enumeration cap {cap}; p(n) grows too fast to enumerate")]
    CapExceeded { n: u64, cap: u64 },
    #[error(
        "({j}, {k}) is not an exchangeable index pair: need j < k and parts[j] > parts[k] + 1"
    )]
    BadExchange { j: usize, k: usize },
    #[error("the block construction needs nonnegative rank, got rank {rank}")]
    NegativeRank { rank: i64 },
    #[error("an endofunction needs a nonempty image")]
    EmptyImage,
    #[error("image value {value} at position {index} is outside 1..={n}")]
    BadImage { index: usize, value: u64, n: u64 },
    #[error("exhaustive search over n^n maps supports n <= {max}, got {n}")]
    SearchTooLarge { n: u64, max: u64 },
    #[error("x = {x} is outside the candidate range 2..={n}")]
    BadCandidate { x: u64, n: u64 },
    #[error("candidate x = {x} (a = {a}, r = {r}) is infeasible and has no partition")]
    Infeasible { x: u64, a: u64, r: u64 },
    #[error("n = {n} is below the minimum {min} for this computation")]
    TooSmall { n: u64, min: u64 },
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooBig { n: u64, max: u64 },
    #[error("empty range: from = {from} > to = {to}")]
    EmptyRange { from: u64, to: u64 },
    #[error("the envelopes have a pole at x = 1")]
    EnvelopePole,
    #[error("expected three real cubic roots at n = {n} but the discriminant is {disc}")]
    NoRealTriple { n: u64, disc: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
