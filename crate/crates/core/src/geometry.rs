//! Words, codes, balls and spheres in `R^n`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::rational::{int, Rational};
use crate::ring::{FiniteRing, RingSpec};
use crate::weights::{DistanceOracle, WeightFunction};
use crate::{Error, Result};

/// A word of `R^n`: element indices in the ring's canonical order.
pub type Word = Vec<usize>;

/// Full scans over `R^n` refuse spaces larger than this by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// Mixed-radix indexing of `R^n`; the first coordinate is most significant,
/// so rank order is lexicographic order on element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordSpace {
    pub order: usize,
    pub n: usize,
}

impl WordSpace {
    pub fn new(ring: &FiniteRing, n: usize) -> Self {
        WordSpace {
            order: ring.order(),
            n,
        }
    }

    /// `|R|^n`, saturating.
    pub fn size(&self) -> u128 {
        (self.order as u128).saturating_pow(self.n as u32)
    }

    /// `|R|^n` if it does not exceed `cap`.
    pub fn checked_size(&self, cap: usize) -> Result<usize> {
        let size = self.size();
        if size > cap as u128 {
            return Err(Error::EnumerationCap { size, cap });
        }
        Ok(size as usize)
    }

    pub fn unrank_into(&self, mut rank: usize, word: &mut [usize]) {
        for slot in word.iter_mut().rev() {
            *slot = rank % self.order;
            rank /= self.order;
        }
    }

    pub fn unrank(&self, rank: usize) -> Word {
        let mut word = vec![0; self.n];
        self.unrank_into(rank, &mut word);
        word
    }

    pub fn rank(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| acc * self.order + x)
    }
}

/// A block code of length `n`: a deduplicated, nonempty set of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    n: usize,
    words: Vec<Word>,
    duplicates_removed: usize,
}

impl Code {
    /// Validates lengths and indices, dropping repeated words (first occurrence wins).
    pub fn new(ring: &FiniteRing, n: usize, words: Vec<Word>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::InvalidCode("a code needs at least one word".into()));
        }
        let total = words.len();
        let mut seen = std::collections::HashSet::new();
        let mut kept = Vec::with_capacity(total);
        for word in words {
            if word.len() != n {
                return Err(Error::InvalidCode(format!(
                    "word {word:?} has length {}, expected {n}",
                    word.len()
                )));
            }
            if let Some(&x) = word.iter().find(|&&x| x >= ring.order()) {
                return Err(Error::InvalidCode(format!(
                    "element index {x} out of range for {}",
                    ring.name()
                )));
            }
            if seen.insert(word.clone()) {
                kept.push(word);
            }
        }
        Ok(Code {
            n,
            duplicates_removed: total - kept.len(),
            words: kept,
        })
    }

    /// The whole space `R^n`.
    pub fn whole_space(ring: &FiniteRing, n: usize, cap: usize) -> Result<Self> {
        let space = WordSpace::new(ring, n);
        let size = space.checked_size(cap)?;
        Code::new(ring, n, (0..size).map(|r| space.unrank(r)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Whether the input contained repeated words.
    pub fn had_duplicates(&self) -> bool {
        self.duplicates_removed > 0
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    /// Serializes to the code file format `{"ring", "n", "words"}`.
    pub fn to_json(&self, ring: &FiniteRing) -> String {
        let file = CodeFile {
            ring: ring.name().to_string(),
            n: self.n,
            words: self.words.clone(),
        };
        serde_json::to_string(&file).expect("code file serializes")
    }
}

/// On-disk shape of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub ring: String,
    pub n: usize,
    pub words: Vec<Word>,
}

/// A code read from a file together with the ring it lives in.
#[derive(Debug, Clone)]
pub struct LoadedCode {
    pub ring: FiniteRing,
    pub code: Code,
}

impl LoadedCode {
    /// Repeated words are dropped and flagged via [`Code::had_duplicates`], not rejected.
    pub fn from_json(text: &str, order_cap: usize) -> Result<Self> {
        let file: CodeFile = serde_json::from_str(text)?;
        let spec: RingSpec = file.ring.parse()?;
        let ring = FiniteRing::build(&spec, order_cap)?;
        let code = Code::new(&ring, file.n, file.words)?;
        Ok(LoadedCode { ring, code })
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of words of overweight exactly `t` in `R^n`, from the coefficient
/// of `z^t` in `(1 + u z + v z²)^n`:
/// `Σ_ℓ C(n, t−2ℓ) C(n−t+2ℓ, ℓ) u^{t−2ℓ} v^ℓ`.
pub fn overweight_sphere_size(u: usize, v: usize, n: usize, t: usize) -> BigUint {
    let mut total = BigUint::zero();
    for l in 0..=t / 2 {
        let k = t - 2 * l;
        if k > n || l > n - k {
            continue;
        }
        total += binomial(n, k)
            * binomial(n - k, l)
            * BigUint::from(u).pow(k as u32)
            * BigUint::from(v).pow(l as u32);
    }
    total
}

/// Sphere size of radius `t ∈ [0, 2n]` for the overweight on `ring`.
pub fn sphere_size_overweight(ring: &FiniteRing, n: usize, t: usize) -> Result<BigUint> {
    if t > 2 * n {
        return Err(Error::OutOfRange {
            name: "t",
            value: t.to_string(),
            range: format!("[0, {}]", 2 * n),
        });
    }
    Ok(overweight_sphere_size(
        ring.unit_count(),
        ring.nonzero_nonunit_count(),
        n,
        t,
    ))
}

/// `|B_e(0)|` under the overweight distance, summing sphere sizes up to `e`;
/// radii beyond `2n` give `|R|^n`.
pub fn ball_volume_overweight(ring: &FiniteRing, n: usize, e: usize) -> BigUint {
    let (u, v) = (ring.unit_count(), ring.nonzero_nonunit_count());
    (0..=e.min(2 * n))
        .map(|t| overweight_sphere_size(u, v, n, t))
        .sum()
}

/// Weight enumerator of `R^n` for an arbitrary weight: scaled weight → word count.
/// Computed by convolution over coordinates, no enumeration.
pub fn weight_distribution(weight: &WeightFunction, n: usize) -> BTreeMap<i64, BigUint> {
    let mut per_coord: BTreeMap<i64, u64> = BTreeMap::new();
    for &s in weight.scaled_table() {
        *per_coord.entry(s).or_default() += 1;
    }
    let mut dist: BTreeMap<i64, BigUint> = BTreeMap::from([(0, BigUint::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (w, count) in &dist {
            for (s, mult) in &per_coord {
                *next.entry(w + s).or_default() += count * BigUint::from(*mult);
            }
        }
        dist = next;
    }
    dist
}

/// `|{x ∈ R^n : w(x) < radius}|`, the volume the greedy covering argument needs.
pub fn open_ball_volume(weight: &WeightFunction, n: usize, radius: &Rational) -> BigUint {
    let limit = weight.scaled_ceil(radius);
    weight_distribution(weight, n)
        .into_iter()
        .filter(|&(w, _)| w < limit)
        .map(|(_, c)| c)
        .sum()
}

/// `|{x ∈ R^n : w(x) ≤ radius}|` from the weight enumerator.
pub fn ball_volume(weight: &WeightFunction, n: usize, radius: &Rational) -> BigUint {
    let limit = weight.scaled_floor(radius);
    weight_distribution(weight, n)
        .into_iter()
        .filter(|&(w, _)| w <= limit)
        .map(|(_, c)| c)
        .sum()
}

/// All `x ∈ R^n` with `w(x − center) ≤ radius`, by full scan, in canonical order.
pub fn ball_enumerate(
    ring: &FiniteRing,
    weight: &WeightFunction,
    center: &[usize],
    radius: &Rational,
    cap: usize,
) -> Result<Vec<Word>> {
    if radius < &Rational::zero() {
        return Err(Error::OutOfRange {
            name: "radius",
            value: crate::rational::render(radius),
            range: "[0, ∞)".into(),
        });
    }
    if let Some(&x) = center.iter().find(|&&x| x >= ring.order()) {
        return Err(Error::InvalidArgument(format!(
            "center index {x} out of range"
        )));
    }
    let space = WordSpace::new(ring, center.len());
    let size = space.checked_size(cap)?;
    let limit = weight.scaled_floor(radius);
    let oracle = DistanceOracle::new(ring, weight);
    Ok((0..size)
        .into_par_iter()
        .filter_map(|r| {
            let word = space.unrank(r);
            (oracle.scaled_distance(&word, center) <= limit).then_some(word)
        })
        .collect())
}

/// Minimum distance over pairs of distinct codewords.
pub fn min_distance(ring: &FiniteRing, code: &Code, weight: &WeightFunction) -> Result<Rational> {
    scaled_min_distance(ring, code, weight)
        .map(|s| weight.unscale(s))
        .ok_or(Error::SingletonCode)
}

pub(crate) fn scaled_min_distance(
    ring: &FiniteRing,
    code: &Code,
    weight: &WeightFunction,
) -> Option<i64> {
    let oracle = DistanceOracle::new(ring, weight);
    let words = code.words();
    // both orders, so asymmetric custom weights are handled too
    (0..words.len())
        .flat_map(|i| (0..words.len()).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| oracle.scaled_distance(&words[i], &words[j]))
        .min()
}

/// `Σ_{x∈C} Σ_{y∈C} d(x, y)` over ordered pairs (diagonal contributes 0).
pub fn pairwise_distance_sum(ring: &FiniteRing, code: &Code, weight: &WeightFunction) -> Rational {
    let oracle = DistanceOracle::new(ring, weight);
    let words = code.words();
    let mut total: i128 = 0;
    for x in words {
        for y in words {
            total += oracle.scaled_distance(x, y) as i128;
        }
    }
    Rational::new(total.into(), weight.scale().into())
}

/// Largest codeword weight `ω = max w(c)`.
pub fn max_codeword_weight(code: &Code, weight: &WeightFunction) -> Rational {
    code.words()
        .iter()
        .map(|c| weight.word_weight(c))
        .max()
        .unwrap_or_else(|| int(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::weights::{homogeneous, overweight};

    fn ring(spec: &str) -> FiniteRing {
        FiniteRing::parse(spec).unwrap()
    }

    /// Brute-force count of words of exact overweight `t`.
    fn brute_sphere(r: &FiniteRing, n: usize, t: i64) -> usize {
        let w = overweight(r);
        let space = WordSpace::new(r, n);
        (0..space.size() as usize)
            .filter(|&k| w.scaled_word_weight(&space.unrank(k)) == t)
            .count()
    }

    #[test]
    fn sphere_sizes_z4() {
        let z4 = ring("Z4");
        assert_eq!(brute_sphere(&z4, 2, 1), 4);
        assert_eq!(brute_sphere(&z4, 2, 2), 6);
        assert_eq!(
            sphere_size_overweight(&z4, 2, 1).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            sphere_size_overweight(&z4, 2, 2).unwrap(),
            BigUint::from(6u32)
        );
        for spec in ["Z6", "GF(9)", "Z2xZ4"] {
            assert_eq!(
                sphere_size_overweight(&ring(spec), 3, 0).unwrap(),
                BigUint::one()
            );
        }
        assert!(sphere_size_overweight(&z4, 2, 5).is_err());
    }

    #[test]
    fn ball_volumes_z4() {
        let z4 = ring("Z4");
        assert_eq!(ball_volume_overweight(&z4, 2, 1), BigUint::from(5u32));
        assert_eq!(ball_volume_overweight(&z4, 2, 2), BigUint::from(11u32));
        assert_eq!(ball_volume_overweight(&z4, 2, 4), BigUint::from(16u32));
        assert_eq!(ball_volume_overweight(&z4, 2, 9), BigUint::from(16u32));
        let w = overweight(&z4);
        assert_eq!(
            ball_enumerate(&z4, &w, &[0, 0], &int(1), 1000)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            ball_enumerate(&z4, &w, &[0, 0], &int(2), 1000)
                .unwrap()
                .len(),
            11
        );
    }

    #[test]
    fn sphere_sizes_sum_to_space() {
        for spec in ["Z4", "Z6", "Z9", "GF(8)", "Z2xZ4"] {
            let r = ring(spec);
            for n in 1..=4 {
                let total: BigUint = (0..=2 * n)
                    .map(|t| sphere_size_overweight(&r, n, t).unwrap())
                    .sum();
                assert_eq!(total, BigUint::from(r.order()).pow(n as u32));
            }
        }
    }

    #[test]
    fn enumerator_matches_formula() {
        for spec in ["Z4", "Z8", "Z2xZ2", "Z4[x]/(x^2+2)"] {
            let r = ring(spec);
            let w = overweight(&r);
            for n in 0..=4 {
                for e in 0..=2 * n + 1 {
                    assert_eq!(
                        ball_volume(&w, n, &int(e as i64)),
                        ball_volume_overweight(&r, n, e),
                        "{spec} n={n} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn ball_enumeration_examples() {
        let z4 = ring("Z4");
        let w = overweight(&z4);
        let ball = |c: usize| ball_enumerate(&z4, &w, &[c], &int(1), 100).unwrap();
        assert_eq!(ball(0), vec![vec![0], vec![1], vec![3]]);
        assert_eq!(ball(1), vec![vec![0], vec![1], vec![2]]);

        let z6 = ring("Z6");
        let h = homogeneous(&z6, &int(1)).unwrap().unwrap();
        let b = ball_enumerate(&z6, &h, &[0], &ratio(1, 2), 100).unwrap();
        assert_eq!(b, vec![vec![0], vec![1], vec![5]]);

        assert!(matches!(
            ball_enumerate(&z4, &w, &[0; 12], &int(1), 1000),
            Err(Error::EnumerationCap { .. })
        ));
        assert!(ball_enumerate(&z4, &w, &[0], &int(-1), 100).is_err());
    }

    #[test]
    fn translation_invariance() {
        let r = ring("Z2xZ4");
        let w = overweight(&r);
        for center in [[0, 0], [3, 5], [7, 1]] {
            for e in 0..=4 {
                let ball = ball_enumerate(&r, &w, &center, &int(e), 10_000).unwrap();
                assert_eq!(
                    BigUint::from(ball.len()),
                    ball_volume_overweight(&r, 2, e as usize)
                );
            }
        }
    }

    #[test]
    fn distance_statistics() {
        let z4 = ring("Z4");
        let w = overweight(&z4);
        let c = Code::new(&z4, 2, vec![vec![0, 0], vec![2, 2]]).unwrap();
        assert_eq!(min_distance(&z4, &c, &w).unwrap(), int(4));
        assert_eq!(pairwise_distance_sum(&z4, &c, &w), int(8));
        let c = Code::new(&z4, 2, vec![vec![0, 0], vec![2, 1]]).unwrap();
        assert_eq!(min_distance(&z4, &c, &w).unwrap(), int(3));
        let all = Code::whole_space(&z4, 1, 100).unwrap();
        assert_eq!(min_distance(&z4, &all, &w).unwrap(), int(1));
        assert_eq!(pairwise_distance_sum(&z4, &all, &w), int(16));
        let single = Code::new(&z4, 1, vec![vec![0]]).unwrap();
        assert_eq!(pairwise_distance_sum(&z4, &single, &w), int(0));
        assert!(matches!(
            min_distance(&z4, &single, &w),
            Err(Error::SingletonCode)
        ));
    }

    #[test]
    fn code_validation_and_files() {
        let z4 = ring("Z4");
        assert!(Code::new(&z4, 2, vec![]).is_err());
        assert!(Code::new(&z4, 2, vec![vec![0]]).is_err());
        assert!(Code::new(&z4, 1, vec![vec![4]]).is_err());
        let c = Code::new(&z4, 1, vec![vec![1], vec![1], vec![2]]).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.had_duplicates());

        let json = c.to_json(&z4);
        assert_eq!(json, r#"{"ring":"Z4","n":1,"words":[[1],[2]]}"#);
        let loaded = LoadedCode::from_json(&json, 512).unwrap();
        assert_eq!(
            loaded.code,
            Code::new(&z4, 1, vec![vec![1], vec![2]]).unwrap()
        );
        assert!(!loaded.code.had_duplicates());

        let dup = r#"{"ring":"Z4","n":1,"words":[[1],[1]]}"#;
        assert!(LoadedCode::from_json(dup, 512)
            .unwrap()
            .code
            .had_duplicates());
    }
}
