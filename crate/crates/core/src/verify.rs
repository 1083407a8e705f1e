//! Direct checkers for the inequalities behind the overweight Plotkin bound
//! and the homogeneous Johnson bound, plus seeded randomized suites and a
//! falsification harness for the Johnson bound.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::johnson_homogeneous;
use crate::geometry::{
    max_codeword_weight, min_distance, pairwise_distance_sum, Code, Word, WordSpace,
};
use crate::rational::{self, int, Rational, RationalRepr};
use crate::ring::FiniteRing;
use crate::search::{greedy_gv, list_profile_rho, max_code, MaxCodeOptions, WordOrdering};
use crate::weights::{eta, homogeneous, overweight, WeightFunction, WeightKind};
use crate::{Error, Result};

/// An exact probability distribution on ring elements: `P(x) = counts[x] / total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    counts: Vec<u64>,
    total: u64,
}

impl Distribution {
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidDistribution("all masses are zero".into()));
        }
        Ok(Distribution { counts, total })
    }

    pub fn uniform(ring: &FiniteRing, set: &[usize]) -> Result<Self> {
        let mut counts = vec![0; ring.order()];
        for &x in set {
            counts[x] = 1;
        }
        Self::from_counts(counts)
    }

    pub fn point_mass(ring: &FiniteRing, x: usize) -> Self {
        let mut counts = vec![0; ring.order()];
        counts[x] = 1;
        Distribution { counts, total: 1 }
    }

    /// Random integer masses in `0..=100` on `support`, normalized exactly.
    pub fn random<R: Rng>(rng: &mut R, ring: &FiniteRing, support: &[usize]) -> Self {
        loop {
            let mut counts = vec![0; ring.order()];
            for &x in support {
                counts[x] = rng.gen_range(0..=100);
            }
            if let Ok(d) = Self::from_counts(counts) {
                return d;
            }
        }
    }

    pub fn probability(&self, x: usize) -> Rational {
        Rational::new(BigInt::from(self.counts[x]), BigInt::from(self.total))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.counts.len()).filter(|&x| self.counts[x] > 0)
    }

    /// `Σ_{x,y} f(x, y) P(x) P(y)` for integer-valued `f`, scaled by `1/scale`.
    fn pair_expectation(&self, scale: i64, f: impl Fn(usize, usize) -> i64) -> Rational {
        let support: Vec<usize> = self.support().collect();
        let mut acc: i128 = 0;
        for &x in &support {
            for &y in &support {
                acc += f(x, y) as i128 * self.counts[x] as i128 * self.counts[y] as i128;
            }
        }
        let den = BigInt::from(self.total) * BigInt::from(self.total) * BigInt::from(scale);
        Rational::new(BigInt::from(acc), den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("pass"),
            CheckStatus::Fail => f.write_str("FAIL"),
            CheckStatus::NotApplicable(reason) => write!(f, "not applicable ({reason})"),
        }
    }
}

/// `lhs ≤ rhs`, or `lhs ≤ mid ≤ rhs` when `mid` is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub lhs: Option<Rational>,
    pub mid: Option<Rational>,
    pub rhs: Option<Rational>,
    pub status: CheckStatus,
}

impl CheckReport {
    fn compare(name: &'static str, lhs: Rational, mid: Option<Rational>, rhs: Rational) -> Self {
        let ok = match &mid {
            Some(m) => lhs <= *m && *m <= rhs,
            None => lhs <= rhs,
        };
        CheckReport {
            name,
            lhs: Some(lhs),
            mid,
            rhs: Some(rhs),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        }
    }

    fn not_applicable(name: &'static str, reason: impl Into<String>) -> Self {
        CheckReport {
            name,
            lhs: None,
            mid: None,
            rhs: None,
            status: CheckStatus::NotApplicable(reason.into()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    /// `(lhs, mid, rhs)` if all three are present.
    pub fn triple(&self) -> Option<(Rational, Rational, Rational)> {
        Some((self.lhs.clone()?, self.mid.clone()?, self.rhs.clone()?))
    }

    /// `probineq: 1 ≤ 1 — pass`
    pub fn summary(&self) -> String {
        let r = |v: &Option<Rational>| v.as_ref().map(rational::render).unwrap_or_default();
        match (&self.lhs, &self.mid) {
            (None, _) => format!("{}: {}", self.name, self.status),
            (Some(_), Some(_)) => format!(
                "{}: {} ≤ {} ≤ {} : {}",
                self.name,
                r(&self.lhs),
                r(&self.mid),
                r(&self.rhs),
                self.status
            ),
            (Some(_), None) => format!(
                "{}: {} ≤ {} : {}",
                self.name,
                r(&self.lhs),
                r(&self.rhs),
                self.status
            ),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Json<'a> {
            name: &'a str,
            lhs: Option<RationalRepr>,
            mid: Option<RationalRepr>,
            rhs: Option<RationalRepr>,
            status: &'a str,
            reason: Option<&'a str>,
        }
        let (status, reason) = match &self.status {
            CheckStatus::Pass => ("pass", None),
            CheckStatus::Fail => ("fail", None),
            CheckStatus::NotApplicable(r) => ("not-applicable", Some(r.as_str())),
        };
        serde_json::to_value(Json {
            name: self.name,
            lhs: self.lhs.as_ref().map(RationalRepr::from),
            mid: self.mid.as_ref().map(RationalRepr::from),
            rhs: self.rhs.as_ref().map(RationalRepr::from),
            status,
            reason,
        })
        .expect("check report serializes")
    }
}

/// `Σ_{x,y∈I} w_H(x − y) P(x) P(y) ≤ 1 − 1/|I|` for `P` supported on `I`.
pub fn check_hamming_average(
    ring: &FiniteRing,
    subset: &[usize],
    dist: &Distribution,
) -> Result<CheckReport> {
    if subset.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut member = vec![false; ring.order()];
    for &x in subset {
        member[x] = true;
    }
    if let Some(x) = dist.support().find(|&x| !member[x]) {
        return Err(Error::InvalidDistribution(format!(
            "mass at {} outside the subset",
            ring.label(x)
        )));
    }
    let lhs = dist.pair_expectation(1, |x, y| i64::from(x != y));
    let rhs = int(1) - Rational::new(BigInt::from(1), BigInt::from(subset.len()));
    Ok(CheckReport::compare("hamming_average", lhs, None, rhs))
}

/// `Σ_{x,y∈R} W(x − y) P(x) P(y) ≤ η` on a local ring with `|J| ≥ 2`.
pub fn check_probineq(ring: &FiniteRing, dist: &Distribution) -> Result<CheckReport> {
    let eta = eta(ring)?;
    let w = overweight(ring);
    let lhs = dist.pair_expectation(1, |x, y| w.scaled(ring.sub(x, y)));
    Ok(CheckReport::compare("probineq", lhs, None, eta))
}

/// `M(M−1)d ≤ Σ_{x,y∈C} D(x, y) ≤ M² n η` for the overweight distance.
pub fn check_pair_sum(ring: &FiniteRing, code: &Code) -> Result<CheckReport> {
    let eta = eta(ring)?;
    let w = overweight(ring);
    let d = min_distance(ring, code, &w)?;
    let m = int(code.len() as i64);
    let lhs = &m * (&m - int(1)) * d;
    let mid = pairwise_distance_sum(ring, code, &w);
    let rhs = &m * &m * int(code.n() as i64) * eta;
    Ok(CheckReport::compare("pair_sum", lhs, Some(mid), rhs))
}

/// `M(M−1)d ≤ Σ wt(x − y) ≤ 2M²ω − M²ω²/(γn)` when `ω = max wt(c) ≤ γn`.
/// `weight` must be a homogeneous weight produced by the solver.
pub fn check_maxwt(ring: &FiniteRing, code: &Code, weight: &WeightFunction) -> Result<CheckReport> {
    if *weight.kind() != WeightKind::Homogeneous {
        return Err(Error::InvalidArgument(format!(
            "max-weight inequality needs a homogeneous weight, got {}",
            weight.kind()
        )));
    }
    const NAME: &str = "maxwt";
    if code.len() < 2 {
        return Ok(CheckReport::not_applicable(NAME, "singleton code"));
    }
    let gamma = weight.gamma();
    let gn = gamma * int(code.n() as i64);
    let omega = max_codeword_weight(code, weight);
    if omega > gn {
        return Ok(CheckReport::not_applicable(
            NAME,
            format!(
                "ω = {} > γn = {}",
                rational::render(&omega),
                rational::render(&gn)
            ),
        ));
    }
    let d = min_distance(ring, code, weight)?;
    let m = int(code.len() as i64);
    let lhs = &m * (&m - int(1)) * d;
    let mid = pairwise_distance_sum(ring, code, weight);
    let m2 = &m * &m;
    let rhs = int(2) * &m2 * &omega - &m2 * &omega * &omega / gn;
    Ok(CheckReport::compare(NAME, lhs, Some(mid), rhs))
}

/// [`check_maxwt`] with the homogeneous weight of average `gamma` solved on
/// the spot; skipped when the ring has no unique homogeneous weight.
pub fn check_maxwt_on_ring(
    ring: &FiniteRing,
    code: &Code,
    gamma: &Rational,
) -> Result<CheckReport> {
    match homogeneous(ring, gamma)? {
        Some(w) => check_maxwt(ring, code, &w),
        None => Ok(CheckReport::not_applicable(
            "maxwt",
            "homogeneous weight unavailable",
        )),
    }
}

/// Outcome of checking the Johnson list bound against an exact list profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonCheck {
    pub n: usize,
    pub d: Rational,
    pub gamma: Rational,
    pub rho: Rational,
    /// Which sufficient condition held: `i`, `ii`, `i+ii` or `none`.
    pub condition: String,
    pub hypotheses_hold: bool,
    /// `⌊dγn⌋` when the hypotheses hold.
    pub list_bound: Option<BigInt>,
    pub profile_max: usize,
    pub witness: Word,
    pub status: CheckStatus,
}

impl JohnsonCheck {
    pub fn summary(&self) -> String {
        format!(
            "johnson: n={} d={} γ={} ρ={} condition={} bound={} profile={} : {}",
            self.n,
            rational::render(&self.d),
            rational::render(&self.gamma),
            rational::render(&self.rho),
            self.condition,
            self.list_bound
                .as_ref()
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
            self.profile_max,
            self.status
        )
    }
}

/// Evaluates the Johnson hypotheses for `code` (with `d` its minimum
/// distance under `weight`) and compares `⌊dγn⌋` with the exact maximum
/// number of codewords in a ball of radius `ρn`.
pub fn verify_johnson(
    ring: &FiniteRing,
    code: &Code,
    weight: &WeightFunction,
    rho: &Rational,
    cap: usize,
) -> Result<JohnsonCheck> {
    let gamma = weight.gamma().clone();
    let profile = list_profile_rho(ring, code, weight, rho, cap)?;
    let n = code.n();
    let base = |d: Rational, condition: &str| JohnsonCheck {
        n,
        d,
        gamma: gamma.clone(),
        rho: rho.clone(),
        condition: condition.to_string(),
        hypotheses_hold: false,
        list_bound: None,
        profile_max: profile.max_list_size,
        witness: profile.witness.clone(),
        status: CheckStatus::NotApplicable(String::new()),
    };
    if *weight.kind() != WeightKind::Homogeneous {
        let mut check = base(Rational::zero(), "none");
        check.status = CheckStatus::NotApplicable("weight is not homogeneous".into());
        return Ok(check);
    }
    let d = match min_distance(ring, code, weight) {
        Ok(d) => d,
        Err(Error::SingletonCode) => {
            let mut check = base(Rational::zero(), "none");
            check.status = CheckStatus::NotApplicable("singleton code".into());
            return Ok(check);
        }
        Err(e) => return Err(e),
    };
    let report = johnson_homogeneous(n, &d, &gamma, rho)?;
    let mut check = base(d, &report.params["condition"]);
    match report.integer_bound {
        Some(bound) => {
            check.hypotheses_hold = true;
            check.status = if BigInt::from(profile.max_list_size) <= bound {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            check.list_bound = Some(bound);
        }
        None => {
            check.status =
                CheckStatus::NotApplicable(report.reason().unwrap_or_default().to_string());
        }
    }
    Ok(check)
}

/// Aggregate result of a randomized or exhaustive suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub ring: String,
    pub trials: usize,
    /// Trials whose hypotheses held and which were actually compared.
    pub checked: usize,
    pub violations: usize,
    /// Trials where the upper inequality was tight.
    pub equalities: usize,
}

impl SuiteReport {
    pub fn summary(&self) -> String {
        format!(
            "{:<10} {:<16} trials={:<6} checked={:<6} equalities={:<6} violations={}",
            self.name, self.ring, self.trials, self.checked, self.equalities, self.violations
        )
    }
}

/// Seed of trial `index` under `master`; independent of how trials are scheduled.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn tally(name: &str, ring: &FiniteRing, results: Vec<CheckReport>) -> SuiteReport {
    let trials = results.len();
    let checked = results.iter().filter(|r| r.lhs.is_some()).count();
    let violations = results.iter().filter(|r| r.failed()).count();
    let equalities = results
        .iter()
        .filter(|r| r.mid.as_ref().or(r.lhs.as_ref()) == r.rhs.as_ref() && r.rhs.is_some())
        .count();
    SuiteReport {
        name: name.to_string(),
        ring: ring.name().to_string(),
        trials,
        checked,
        violations,
        equalities,
    }
}

/// Random exact distributions on `R` (random support, random integer masses).
pub fn probineq_suite(ring: &FiniteRing, trials: usize, seed: u64) -> Result<SuiteReport> {
    eta(ring)?;
    let all: Vec<usize> = (0..ring.order()).collect();
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
            let k = rng.gen_range(1..=ring.order());
            let support: Vec<usize> = all.choose_multiple(&mut rng, k).copied().collect();
            let dist = Distribution::random(&mut rng, ring, &support);
            check_probineq(ring, &dist)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tally("probineq", ring, results))
}

fn random_code<R: Rng>(rng: &mut R, ring: &FiniteRing, n: usize, pool: &[Word], m: usize) -> Code {
    let words: Vec<Word> = pool
        .choose_multiple(rng, m.min(pool.len()))
        .cloned()
        .collect();
    Code::new(ring, n, words).expect("pool words are valid")
}

/// Random codes with `n ≤ max_n`, `2 ≤ M ≤ max_m` against the pair-sum inequality.
pub fn pair_sum_suite(
    ring: &FiniteRing,
    trials: usize,
    seed: u64,
    max_n: usize,
    max_m: usize,
) -> Result<SuiteReport> {
    eta(ring)?;
    let pools: Vec<Vec<Word>> = (0..=max_n)
        .map(|n| {
            let space = WordSpace::new(ring, n);
            (0..space.size() as usize)
                .map(|r| space.unrank(r))
                .collect()
        })
        .collect();
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(2..=max_m.min(pools[n].len()));
            check_pair_sum(ring, &random_code(&mut rng, ring, n, &pools[n], m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tally("pair_sum", ring, results))
}

/// Random codes drawn from the ball `{x : wt(x) ≤ γn}` so that `ω ≤ γn` holds.
pub fn maxwt_suite(
    ring: &FiniteRing,
    weight: &WeightFunction,
    trials: usize,
    seed: u64,
    max_n: usize,
    max_m: usize,
) -> Result<SuiteReport> {
    let pools: Vec<Vec<Word>> = (0..=max_n)
        .map(|n| {
            let space = WordSpace::new(ring, n);
            let limit = weight.scaled_floor(&(weight.gamma() * int(n as i64)));
            (0..space.size() as usize)
                .map(|r| space.unrank(r))
                .filter(|w| weight.scaled_word_weight(w) <= limit)
                .collect()
        })
        .collect();
    let lengths: Vec<usize> = (1..=max_n).filter(|&n| pools[n].len() >= 2).collect();
    if lengths.is_empty() {
        return Err(Error::InvalidArgument(
            "no length has two words within weight γn".into(),
        ));
    }
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t as u64));
            let n = *lengths.choose(&mut rng).unwrap();
            let m = rng.gen_range(2..=max_m.min(pools[n].len()));
            check_maxwt(ring, &random_code(&mut rng, ring, n, &pools[n], m), weight)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tally("maxwt", ring, results))
}

/// The `ρ` grid `{0, 1/4, 1/2, 3/4, 1}·γ`.
pub fn johnson_rho_grid(gamma: &Rational) -> Vec<Rational> {
    (0..=4).map(|k| gamma * rational::ratio(k, 4)).collect()
}

/// Codes for the Johnson harness: for every `n ≤ max_n` and `d ∈ [0, 2n]`,
/// the greedy code and (when `with_max_code`) the certified maximum code,
/// both under the overweight and under `weight`.
pub fn harness_codes(
    ring: &FiniteRing,
    weight: &WeightFunction,
    max_n: usize,
    with_max_code: bool,
) -> Result<Vec<Code>> {
    let ow = overweight(ring);
    let mut codes = Vec::new();
    for n in 1..=max_n {
        for d in 0..=2 * n as i64 {
            for w in [&ow, weight] {
                let d = int(d);
                let g = greedy_gv(ring, w, n, &d, WordOrdering::Lexicographic, &[], usize::MAX)?;
                codes.push(g.code);
                if with_max_code {
                    codes.push(max_code(ring, w, n, &d, &MaxCodeOptions::default())?.code);
                }
            }
        }
    }
    codes.dedup();
    Ok(codes)
}

/// Runs [`verify_johnson`] on every code over the `ρ` grid.
pub fn johnson_suite(
    ring: &FiniteRing,
    weight: &WeightFunction,
    codes: &[Code],
    cap: usize,
) -> Result<(SuiteReport, Vec<JohnsonCheck>)> {
    let grid = johnson_rho_grid(weight.gamma());
    let checks = codes
        .par_iter()
        .flat_map_iter(|code| grid.iter().map(move |rho| (code, rho)))
        .map(|(code, rho)| verify_johnson(ring, code, weight, rho, cap))
        .collect::<Result<Vec<_>>>()?;
    let report = SuiteReport {
        name: "johnson".into(),
        ring: ring.name().to_string(),
        trials: checks.len(),
        checked: checks.iter().filter(|c| c.hypotheses_hold).count(),
        violations: checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .count(),
        equalities: checks
            .iter()
            .filter(|c| c.list_bound == Some(BigInt::from(c.profile_max)))
            .count(),
    };
    Ok((report, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ring(spec: &str) -> FiniteRing {
        FiniteRing::parse(spec).unwrap()
    }

    fn code(r: &FiniteRing, n: usize, words: &[&[usize]]) -> Code {
        Code::new(r, n, words.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    #[test]
    fn hamming_average_examples() {
        let z4 = ring("Z4");
        let r = check_hamming_average(&z4, &[0, 2], &Distribution::uniform(&z4, &[0, 2]).unwrap())
            .unwrap();
        assert_eq!(
            (r.lhs.clone().unwrap(), r.rhs.clone().unwrap()),
            (ratio(1, 2), ratio(1, 2))
        );
        assert!(r.passed());
        let all = [0, 1, 2, 3];
        let r = check_hamming_average(&z4, &all, &Distribution::point_mass(&z4, 1)).unwrap();
        assert_eq!((r.lhs.unwrap(), r.rhs.unwrap()), (int(0), ratio(3, 4)));
        let r =
            check_hamming_average(&z4, &all, &Distribution::uniform(&z4, &all).unwrap()).unwrap();
        assert_eq!(r.lhs.unwrap(), ratio(3, 4));
        assert!(check_hamming_average(&z4, &[0, 2], &Distribution::point_mass(&z4, 1)).is_err());
    }

    #[test]
    fn probineq_examples() {
        let z4 = ring("Z4");
        let r = check_probineq(&z4, &Distribution::point_mass(&z4, 0)).unwrap();
        assert_eq!((r.lhs.unwrap(), r.rhs.unwrap()), (int(0), int(1)));
        let r = check_probineq(&z4, &Distribution::uniform(&z4, &[0, 1, 2, 3]).unwrap()).unwrap();
        assert_eq!(
            (r.lhs.clone().unwrap(), r.rhs.clone().unwrap()),
            (int(1), int(1))
        );
        assert!(r.passed());
        let z8 = ring("Z8");
        let all: Vec<usize> = (0..8).collect();
        let r = check_probineq(&z8, &Distribution::uniform(&z8, &all).unwrap()).unwrap();
        assert_eq!((r.lhs.unwrap(), r.rhs.unwrap()), (ratio(5, 4), ratio(3, 2)));
        assert!(check_probineq(&ring("Z6"), &Distribution::point_mass(&ring("Z6"), 0)).is_err());
    }

    #[test]
    fn pair_sum_examples() {
        let z4 = ring("Z4");
        let all = Code::whole_space(&z4, 1, 100).unwrap();
        assert_eq!(
            check_pair_sum(&z4, &all).unwrap().triple().unwrap(),
            (int(12), int(16), int(16))
        );
        let c = code(&z4, 2, &[&[0, 0], &[2, 2]]);
        assert_eq!(
            check_pair_sum(&z4, &c).unwrap().triple().unwrap(),
            (int(8), int(8), int(8))
        );
        let c = code(&z4, 1, &[&[0], &[1]]);
        let r = check_pair_sum(&z4, &c).unwrap();
        assert_eq!(r.triple().unwrap(), (int(2), int(2), int(4)));
        assert_eq!(r.summary(), "pair_sum: 2 ≤ 2 ≤ 4 : pass");
        assert!(matches!(
            check_pair_sum(&z4, &code(&z4, 1, &[&[0]])),
            Err(Error::SingletonCode)
        ));
        assert!(check_pair_sum(&ring("Z6"), &code(&ring("Z6"), 1, &[&[0], &[1]])).is_err());
    }

    #[test]
    fn maxwt_examples() {
        let z4 = ring("Z4");
        let one = int(1);
        let r = check_maxwt_on_ring(&z4, &code(&z4, 1, &[&[0], &[1]]), &one).unwrap();
        assert_eq!(r.triple().unwrap(), (int(2), int(2), int(4)));
        let r = check_maxwt_on_ring(&z4, &code(&z4, 1, &[&[0], &[2]]), &one).unwrap();
        assert!(matches!(r.status, CheckStatus::NotApplicable(_)));
        let r = check_maxwt_on_ring(&z4, &code(&z4, 2, &[&[0, 0], &[1, 1]]), &one).unwrap();
        assert_eq!(r.triple().unwrap(), (int(4), int(4), int(8)));
        assert!(check_maxwt(&z4, &code(&z4, 1, &[&[0], &[1]]), &overweight(&z4)).is_err());
    }

    #[test]
    fn johnson_examples() {
        let z4 = ring("Z4");
        let h = homogeneous(&z4, &int(1)).unwrap().unwrap();
        let all = Code::whole_space(&z4, 1, 100).unwrap();
        let c = verify_johnson(&z4, &all, &h, &int(0), 1000).unwrap();
        assert_eq!(c.list_bound, Some(BigInt::from(1)));
        assert_eq!(c.profile_max, 1);
        assert_eq!(c.status, CheckStatus::Pass);

        let c2 = code(&z4, 2, &[&[0, 0], &[2, 2]]);
        let c = verify_johnson(&z4, &c2, &h, &int(1), 1000).unwrap();
        assert_eq!(c.condition, "i");
        assert_eq!(c.list_bound, Some(BigInt::from(8)));
        assert!(c.profile_max <= 2);
        assert_eq!(c.status, CheckStatus::Pass);

        let g = greedy_gv(&z4, &h, 4, &int(4), WordOrdering::Lexicographic, &[], 1000).unwrap();
        let c = verify_johnson(&z4, &g.code, &h, &ratio(3, 4), 1000).unwrap();
        assert!(c.hypotheses_hold);
        assert_eq!(c.list_bound, Some(BigInt::from(16)));
        assert_eq!(c.status, CheckStatus::Pass);
    }

    #[test]
    fn suites_are_seed_deterministic() {
        let z8 = ring("Z8");
        let a = probineq_suite(&z8, 50, 7).unwrap();
        let b = probineq_suite(&z8, 50, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.violations, 0);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = pool.install(|| pair_sum_suite(&z8, 50, 7, 3, 8)).unwrap();
        assert_eq!(c, pair_sum_suite(&z8, 50, 7, 3, 8).unwrap());
        assert_ne!(trial_seed(1, 0), trial_seed(1, 1));
    }
}
