//! Endofunctions of `{1, ..., n}` and their degree of noninvertibility
//! `deg(f) = (1/n) * sum over x of |f^-1(x)|^2`.
//!
//! An endofunction induces a partition of `n` via its nonempty preimage
//! sizes. Conversely, a partition with nonnegative rank yields a block
//! endofunction whose square is constant; the quantity of interest is how
//! large `deg(f^2) / deg(f)^{3/2}` can get.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest `n` the exhaustive search over all `n^n` maps accepts.
pub const EXHAUSTIVE_MAX_N: u64 = 8;

/// An exact fraction kept unreduced; degrees always carry denominator `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `deg(f)` and `deg(f^2)` exactly, plus the growth ratio
/// `deg(f^2) / deg(f)^{3/2}` with and without the `n^{-1/2}` scaling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeRatio {
    pub deg_f: Ratio,
    pub deg_f2: Ratio,
    /// `deg(f^2) / deg(f)^{3/2}`.
    pub ratio: f64,
    /// `deg(f^2) / (deg(f)^{3/2} * sqrt(n))`.
    pub normalized: f64,
}

impl DegreeRatio {
    fn new(n: u64, ss_f: u64, ss_f2: u64) -> Self {
        let deg_f = Ratio { num: ss_f, den: n };
        let deg_f2 = Ratio { num: ss_f2, den: n };
        let ratio = deg_f2.to_f64() / deg_f.to_f64().powf(1.5);
        Self {
            deg_f,
            deg_f2,
            ratio,
            normalized: ratio / (n as f64).sqrt(),
        }
    }

    /// The square of `ratio` as an exact fraction
    /// `(deg_f2.num^2 * n, deg_f.num^3)`; exact while the numerators stay
    /// below 2^42 or so, which covers every searchable `n`.
    pub fn ratio_squared(&self) -> (u128, u128) {
        let a = self.deg_f2.num as u128;
        let b = self.deg_f.num as u128;
        (a * a * self.deg_f.den as u128, b * b * b)
    }

    /// Exact comparison of two ratios via their squares (both are
    /// nonnegative, so squaring preserves order).
    pub fn exact_cmp(&self, other: &DegreeRatio) -> Ordering {
        let (an, ad) = self.ratio_squared();
        let (bn, bd) = other.ratio_squared();
        (an * bd).cmp(&(bn * ad))
    }
}

/// A map from `{1, ..., n}` to itself, stored as the 1-based image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endofunction {
    image: Vec<u64>,
}

impl Endofunction {
    /// Validates that every image value lands in `1..=n`.
    pub fn new(image: Vec<u64>) -> Result<Self> {
        if image.is_empty() {
            return Err(Error::EmptyImage);
        }
        let n = image.len() as u64;
        for (index, &value) in image.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::BadImage { index, value, n });
            }
        }
        Ok(Self { image })
    }

    pub fn n(&self) -> u64 {
        self.image.len() as u64
    }

    /// The 1-based image list: `image()[i]` is `f(i+1)`.
    pub fn image(&self) -> &[u64] {
        &self.image
    }

    /// `f` composed with itself.
    pub fn compose_self(&self) -> Endofunction {
        let image = self
            .image
            .iter()
            .map(|&v| self.image[(v - 1) as usize])
            .collect();
        Endofunction { image }
    }

    /// `true` iff every point maps to the same value.
    pub fn is_constant(&self) -> bool {
        self.image.iter().all(|&v| v == self.image[0])
    }

    fn preimage_squares(&self) -> u64 {
        let mut counts = vec![0u64; self.image.len() + 1];
        for &v in &self.image {
            counts[v as usize] += 1;
        }
        counts.iter().map(|&c| c * c).sum()
    }

    /// The partition of `n` formed by the nonempty preimage sizes.
    pub fn partition(&self) -> Partition {
        let mut counts = vec![0u64; self.image.len() + 1];
        for &v in &self.image {
            counts[v as usize] += 1;
        }
        Partition::from_unsorted(counts).expect("an image is nonempty")
    }

    /// `deg(f)` as the exact fraction `sum |f^-1(x)|^2 / n`.
    pub fn degree(&self) -> Ratio {
        Ratio {
            num: self.preimage_squares(),
            den: self.n(),
        }
    }

    /// Block map of a partition with nonnegative rank: the first
    /// `parts[0]` points map to 1, the next `parts[1]` points map to 2, and
    /// so on. Nonnegative rank makes every block label land in the first
    /// block, so the square of the result is constantly 1.
    pub fn from_partition(p: &Partition) -> Result<Endofunction> {
        let rank = p.rank();
        if rank < 0 {
            return Err(Error::NegativeRank { rank });
        }
        let n = p.n() as usize;
        let mut image = Vec::with_capacity(n);
        for (block, &size) in p.parts().iter().enumerate() {
            image.extend(std::iter::repeat_n(block as u64 + 1, size as usize));
        }
        Ok(Endofunction { image })
    }

    /// Degrees of `f` and `f^2` together with the growth ratio.
    pub fn degree_ratio(&self) -> DegreeRatio {
        DegreeRatio::new(
            self.n(),
            self.preimage_squares(),
            self.compose_self().preimage_squares(),
        )
    }
}

/// Serializes as the plain JSON array of 1-based image values.
impl Serialize for Endofunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.image.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Endofunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let image = Vec::<u64>::deserialize(deserializer)?;
        Endofunction::new(image).map_err(D::Error::custom)
    }
}

/// Best candidate seen by a search range: the exact comparison key plus the
/// odometer index that produced it (smaller index = lexicographically
/// smaller image, which settles ties deterministically).
#[derive(Debug, Clone, Copy)]
struct Best {
    ss_f: u64,
    ss_f2: u64,
    index: u64,
}

impl Best {
    /// Higher ratio wins; on an exact tie the smaller index wins.
    fn better_than(&self, other: &Best) -> bool {
        let a = (self.ss_f2 as u128).pow(2) * (other.ss_f as u128).pow(3);
        let b = (other.ss_f2 as u128).pow(2) * (self.ss_f as u128).pow(3);
        match a.cmp(&b) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.index < other.index,
        }
    }
}

#[cfg(feature = "parallel")]
fn merge(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.better_than(&y) { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Decodes an odometer index into 0-based digits, most significant first, so
/// that index order equals lexicographic order on images.
fn decode(n: usize, mut index: u64, digits: &mut [u8]) {
    for j in (0..n).rev() {
        digits[j] = (index % n as u64) as u8;
        index /= n as u64;
    }
}

/// Scans indices `start..end` of the `n^n` odometer and returns the best.
fn scan_range(n: usize, start: u64, end: u64) -> Option<Best> {
    let mut digits = [0u8; EXHAUSTIVE_MAX_N as usize];
    let digits = &mut digits[..n];
    decode(n, start, digits);
    let mut best: Option<Best> = None;
    for index in start..end {
        let mut counts_f = [0u32; EXHAUSTIVE_MAX_N as usize];
        let mut counts_f2 = [0u32; EXHAUSTIVE_MAX_N as usize];
        for j in 0..n {
            counts_f[digits[j] as usize] += 1;
            counts_f2[digits[digits[j] as usize] as usize] += 1;
        }
        let ss = |counts: &[u32]| counts.iter().map(|&c| (c * c) as u64).sum::<u64>();
        let cand = Best {
            ss_f: ss(&counts_f[..n]),
            ss_f2: ss(&counts_f2[..n]),
            index,
        };
        if best.is_none_or(|b| cand.better_than(&b)) {
            best = Some(cand);
        }
        // Increment the odometer with carry.
        for j in (0..n).rev() {
            digits[j] += 1;
            if (digits[j] as usize) < n {
                break;
            }
            digits[j] = 0;
        }
    }
    best
}

fn finish(n: u64, best: Best) -> (Endofunction, DegreeRatio) {
    let mut digits = [0u8; EXHAUSTIVE_MAX_N as usize];
    decode(n as usize, best.index, &mut digits[..n as usize]);
    let image = digits[..n as usize].iter().map(|&d| d as u64 + 1).collect();
    let f = Endofunction { image };
    (f, DegreeRatio::new(n, best.ss_f, best.ss_f2))
}

fn check_search_n(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::SearchTooLarge {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    Ok(n.pow(n as u32))
}

/// Exhaustively maximizes `deg(f^2) / deg(f)^{3/2}` over all `n^n`
/// endofunctions (`n <= 8`), breaking exact ties by the lexicographically
/// smallest image. Single-threaded scan.
pub fn exhaustive_max_ratio_seq(n: u64) -> Result<(Endofunction, DegreeRatio)> {
    let total = check_search_n(n)?;
    let best = scan_range(n as usize, 0, total).expect("the range is nonempty");
    Ok(finish(n, best))
}

/// Parallel version of [`exhaustive_max_ratio_seq`]; the reduction is
/// associative with a total tie-break, so the result is identical.
#[cfg(feature = "parallel")]
pub fn exhaustive_max_ratio(n: u64) -> Result<(Endofunction, DegreeRatio)> {
    use rayon::prelude::*;

    const CHUNK: u64 = 1 << 15;
    let total = check_search_n(n)?;
    let chunks = total.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| scan_range(n as usize, c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .reduce(|| None, merge)
        .expect("the range is nonempty");
    Ok(finish(n, best))
}

/// Sequential fallback when the `parallel` feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn exhaustive_max_ratio(n: u64) -> Result<(Endofunction, DegreeRatio)> {
    exhaustive_max_ratio_seq(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn endo(image: &[u64]) -> Endofunction {
        Endofunction::new(image.to_vec()).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(Endofunction::new(vec![]), Err(Error::EmptyImage));
        assert_eq!(
            Endofunction::new(vec![1, 4, 2]),
            Err(Error::BadImage {
                index: 1,
                value: 4,
                n: 3
            })
        );
        assert_eq!(
            Endofunction::new(vec![0, 1]),
            Err(Error::BadImage {
                index: 0,
                value: 0,
                n: 2
            })
        );
    }

    #[test]
    fn degree_of_identity_and_constant() {
        let id = endo(&[1, 2, 3, 4]);
        assert_eq!(id.degree(), Ratio { num: 4, den: 4 });
        assert!(!id.is_constant());
        let onto_1 = endo(&[1, 1, 1, 1]);
        assert_eq!(onto_1.degree(), Ratio { num: 16, den: 4 });
        assert!(onto_1.is_constant());
    }

    #[test]
    fn induced_partition_counts_preimages() {
        let h = endo(&[1, 1, 1, 2, 2, 3, 3, 4]);
        assert_eq!(h.partition().parts(), [3, 2, 2, 1]);
        assert_eq!(h.partition().rank(), -1);
    }

    #[test]
    fn block_construction_squares_to_constant() {
        let p = Partition::new(vec![2, 1]).unwrap();
        let f = Endofunction::from_partition(&p).unwrap();
        assert_eq!(f.image(), [1, 1, 2]);
        assert!(f.compose_self().is_constant());
        assert_eq!(f.partition(), p);

        let neg = Partition::new(vec![2, 1, 1, 1]).unwrap();
        assert_eq!(
            Endofunction::from_partition(&neg),
            Err(Error::NegativeRank { rank: -2 })
        );
    }

    #[test]
    fn degree_ratio_of_the_near_maximal_map_on_eight_points() {
        let h = endo(&[1, 1, 1, 2, 2, 3, 3, 4]);
        let dr = h.degree_ratio();
        assert_eq!(dr.deg_f, Ratio { num: 18, den: 8 });
        assert_eq!(dr.deg_f2, Ratio { num: 50, den: 8 });
        // 50/27 exactly: 18/8 = (3/2)^2, so the 3/2 power stays rational.
        let (num, den) = dr.ratio_squared();
        assert_eq!((num, den), (50 * 50 * 8, 18 * 18 * 18));
        assert_eq!(num * 729, den * 2500);
        assert!((dr.ratio - 50.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn block_map_of_the_balanced_minimizer_on_eight_points() {
        let p = Partition::new(vec![3, 3, 2]).unwrap();
        let f = Endofunction::from_partition(&p).unwrap();
        let dr = f.degree_ratio();
        assert_eq!(dr.deg_f, Ratio { num: 22, den: 8 });
        assert_eq!(dr.deg_f2, Ratio { num: 64, den: 8 });
        assert!((dr.ratio - 1.754247).abs() < 1e-6);
        // The exceptional map above beats every block construction at n=8.
        let h = endo(&[1, 1, 1, 2, 2, 3, 3, 4]);
        assert_eq!(h.degree_ratio().exact_cmp(&dr), Ordering::Greater);
    }

    #[test]
    fn exhaustive_search_tiny_cases() {
        let (f, dr) = exhaustive_max_ratio(1).unwrap();
        assert_eq!(f.image(), [1]);
        assert_eq!(dr.ratio, 1.0);
        assert_eq!(dr.normalized, 1.0);

        let (f, dr) = exhaustive_max_ratio(2).unwrap();
        assert_eq!(f.image(), [1, 2]);
        assert_eq!(dr.ratio, 1.0);
    }

    #[test]
    fn exhaustive_search_matches_frozen_maxima_up_to_six() {
        // Independently computed by a vectorized oracle over all n^n maps.
        let expect: [(&[u64], u64, u64); 6] = [
            (&[1], 1, 1),
            (&[1, 2], 2, 2),
            (&[1, 1, 2], 5, 9),
            (&[1, 1, 2, 2], 8, 16),
            (&[1, 1, 1, 2, 3], 11, 25),
            (&[1, 1, 1, 2, 2, 3], 14, 36),
        ];
        for (n, (image, ss_f, ss_f2)) in expect.iter().enumerate() {
            let n = n as u64 + 1;
            let (f, dr) = exhaustive_max_ratio(n).unwrap();
            assert_eq!(f.image(), *image, "n = {n}");
            assert_eq!(dr.deg_f, Ratio { num: *ss_f, den: n });
            assert_eq!(
                dr.deg_f2,
                Ratio {
                    num: *ss_f2,
                    den: n
                }
            );
            let (seq_f, seq_dr) = exhaustive_max_ratio_seq(n).unwrap();
            assert_eq!(seq_f, f);
            assert_eq!(seq_dr, dr);
        }
    }

    #[test]
    fn search_rejects_out_of_range_n() {
        assert!(matches!(
            exhaustive_max_ratio(9),
            Err(Error::SearchTooLarge { n: 9, max: 8 })
        ));
        assert!(matches!(
            exhaustive_max_ratio(0),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn degree_is_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;

        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let f = endo(&[1, 1, 1, 2, 2, 3, 3, 4]);
        let n = f.n() as usize;
        for _ in 0..50 {
            let mut sigma: Vec<u64> = (1..=n as u64).collect();
            sigma.shuffle(&mut rng);
            let mut inv = vec![0u64; n];
            for (i, &s) in sigma.iter().enumerate() {
                inv[(s - 1) as usize] = i as u64 + 1;
            }
            // g = sigma . f . sigma^-1, the same map with points renamed.
            let image: Vec<u64> = (1..=n as u64)
                .map(|i| sigma[(f.image()[(inv[(i - 1) as usize] - 1) as usize] - 1) as usize])
                .collect();
            let g = Endofunction::new(image).unwrap();
            assert_eq!(g.degree(), f.degree());
            assert_eq!(g.degree_ratio().deg_f2, f.degree_ratio().deg_f2);
        }
    }

    #[test]
    fn json_round_trip_is_an_image_array() {
        let f = endo(&[1, 1, 2]);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, "[1,1,2]");
        let back: Endofunction = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Endofunction>("[3,1]").is_err());
    }
}
