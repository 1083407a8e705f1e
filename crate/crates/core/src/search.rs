//! Code search: the greedy covering construction, an exact maximum-code
//! finder, and list-decoding profiles.
//!
//! Maximum codes are maximum cliques in the graph on `R^n` whose edges join
//! words at distance at least `d`. The search is a coloring-bounded branch and
//! bound; since `d(x, y) = w(x − y)`, any code can be translated to contain
//! the zero word, so by default the zero word is fixed and only its
//! neighbourhood is searched.

use std::cmp::Reverse;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::gilbert_varshamov_overweight;
use crate::geometry::{open_ball_volume, scaled_min_distance, Code, Word, WordSpace};
use crate::rational::{self, int, Rational, RationalRepr};
use crate::ring::FiniteRing;
use crate::weights::{DistanceOracle, WeightFunction, WeightKind};
use crate::{Error, Result};

/// Largest word space the clique search will build a graph for.
pub const DEFAULT_SEARCH_CAP: usize = 8192;
/// Default node budget for [`max_code`].
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordOrdering {
    /// Lexicographic on element indices.
    #[default]
    Lexicographic,
    /// By weight, then lexicographic.
    WeightThenLex,
}

impl fmt::Display for WordOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            WordOrdering::Lexicographic => "lexicographic",
            WordOrdering::WeightThenLex => "weight-then-lex",
        })
    }
}

impl std::str::FromStr for WordOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lexicographic" | "lex" => Ok(WordOrdering::Lexicographic),
            "weight-then-lex" | "weight" => Ok(WordOrdering::WeightThenLex),
            other => Err(Error::InvalidArgument(format!(
                "unknown ordering {other:?}"
            ))),
        }
    }
}

/// The covering lower bound a maximal code must meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvGuarantee {
    /// `|R|^n / |{x : w(x) < d}|`.
    pub value: Rational,
    pub volume: BigUint,
    pub met: bool,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub algorithm: &'static str,
    pub code: Code,
    pub certified_optimal: bool,
    pub max_size_found: usize,
    pub nodes_explored: u64,
    pub ordering: WordOrdering,
    /// Requested minimum distance.
    pub target_distance: Rational,
    /// Actual minimum distance; `None` for a single word.
    pub min_distance: Option<Rational>,
    pub gv_guarantee: Option<GvGuarantee>,
    pub wall_time: Duration,
}

impl SearchResult {
    /// Certification sidecar; wall time is left out so output stays reproducible.
    pub fn sidecar_json(&self, ring: &FiniteRing, weight: &WeightFunction) -> serde_json::Value {
        #[derive(Serialize)]
        struct Guarantee {
            value: RationalRepr,
            integer_bound: String,
            ball_volume: String,
            met: bool,
        }
        #[derive(Serialize)]
        struct Sidecar<'a> {
            algorithm: &'a str,
            ring: &'a str,
            n: usize,
            weight: String,
            d: String,
            size: usize,
            certified_optimal: bool,
            max_size_found: usize,
            nodes_explored: u64,
            ordering: WordOrdering,
            min_distance: Option<String>,
            gv_guarantee: Option<Guarantee>,
        }
        let sidecar = Sidecar {
            algorithm: self.algorithm,
            ring: ring.name(),
            n: self.code.n(),
            weight: weight.name(),
            d: rational::render(&self.target_distance),
            size: self.code.len(),
            certified_optimal: self.certified_optimal,
            max_size_found: self.max_size_found,
            nodes_explored: self.nodes_explored,
            ordering: self.ordering,
            min_distance: self.min_distance.as_ref().map(rational::render),
            gv_guarantee: self.gv_guarantee.as_ref().map(|g| Guarantee {
                value: RationalRepr::from(&g.value),
                integer_bound: rational::ceil(&g.value).to_string(),
                ball_volume: g.volume.to_string(),
                met: g.met,
            }),
        };
        serde_json::to_value(sidecar).expect("sidecar serializes")
    }
}

fn check_target(d: &Rational) -> Result<()> {
    if d < &Rational::zero() {
        return Err(Error::OutOfRange {
            name: "d",
            value: rational::render(d),
            range: "[0, ∞)".into(),
        });
    }
    Ok(())
}

fn ordered_ranks(
    space: &WordSpace,
    size: usize,
    weight: &WeightFunction,
    ordering: WordOrdering,
) -> Vec<usize> {
    let mut ranks: Vec<usize> = (0..size).collect();
    if ordering == WordOrdering::WeightThenLex {
        ranks.sort_by_key(|&r| (weight.scaled_word_weight(&space.unrank(r)), r));
    }
    ranks
}

fn validate_seeds(
    ring: &FiniteRing,
    weight: &WeightFunction,
    n: usize,
    seeds: &[Word],
    limit: i64,
) -> Result<()> {
    if let Some(bad) = seeds
        .iter()
        .find(|w| w.len() != n || w.iter().any(|&x| x >= ring.order()))
    {
        return Err(Error::InvalidArgument(format!(
            "seed word {bad:?} is not in R^{n}"
        )));
    }
    let oracle = DistanceOracle::new(ring, weight);
    for (i, a) in seeds.iter().enumerate() {
        for b in &seeds[i + 1..] {
            if a == b
                || oracle.scaled_distance(a, b) < limit
                || oracle.scaled_distance(b, a) < limit
            {
                return Err(Error::InvalidArgument(format!(
                    "seed words {a:?} and {b:?} are closer than d"
                )));
            }
        }
    }
    Ok(())
}

fn gv_guarantee(
    ring: &FiniteRing,
    weight: &WeightFunction,
    n: usize,
    d: &Rational,
    size: usize,
) -> Option<GvGuarantee> {
    let space = BigInt::from(ring.order()).pow(n as u32);
    let (value, volume) = if *weight.kind() == WeightKind::Overweight {
        if !d.is_integer() || n == 0 {
            return None;
        }
        let d_int: usize = d.to_integer().try_into().ok()?;
        let report = gilbert_varshamov_overweight(ring, n, d_int).ok()?;
        let volume: BigUint = report.params["ball_volume"].parse().ok()?;
        (report.value?, volume)
    } else {
        let volume = open_ball_volume(weight, n, d);
        if volume.is_zero() {
            (Rational::from_integer(space), volume)
        } else {
            (Rational::new(space, BigInt::from(volume.clone())), volume)
        }
    };
    let met = Rational::from_integer(BigInt::from(size)) >= value;
    Some(GvGuarantee { value, volume, met })
}

/// Scans `R^n` in `ordering` and keeps every word at distance at least `d`
/// from everything kept so far, starting from `seeds`. The result is a
/// maximal code, so it meets the covering (Gilbert–Varshamov) lower bound;
/// that guarantee is computed and checked before returning. For the
/// overweight it is reported only for integer `d ∈ [0, 2n]`.
pub fn greedy_gv(
    ring: &FiniteRing,
    weight: &WeightFunction,
    n: usize,
    d: &Rational,
    ordering: WordOrdering,
    seeds: &[Word],
    cap: usize,
) -> Result<SearchResult> {
    let start = Instant::now();
    check_target(d)?;
    let space = WordSpace::new(ring, n);
    let size = space.checked_size(cap)?;
    let limit = weight.scaled_ceil(d);
    validate_seeds(ring, weight, n, seeds, limit)?;
    let oracle = DistanceOracle::new(ring, weight);

    let mut chosen: Vec<Word> = seeds.to_vec();
    let mut nodes = 0u64;
    for rank in ordered_ranks(&space, size, weight, ordering) {
        nodes += 1;
        let word = space.unrank(rank);
        let far = chosen.iter().all(|c| {
            c != &word
                && oracle.scaled_distance(&word, c) >= limit
                && oracle.scaled_distance(c, &word) >= limit
        });
        if far {
            chosen.push(word);
        }
    }
    let code = Code::new(ring, n, chosen)?;
    let min = scaled_min_distance(ring, &code, weight);
    assert!(min.is_none_or(|m| m >= limit), "greedy code violates d");
    let guarantee = gv_guarantee(ring, weight, n, d, code.len());
    if let Some(g) = &guarantee {
        assert!(g.met, "maximal code below the covering bound");
    }
    Ok(SearchResult {
        algorithm: "greedy",
        max_size_found: code.len(),
        certified_optimal: false,
        nodes_explored: nodes,
        ordering,
        target_distance: d.clone(),
        min_distance: min.map(|m| weight.unscale(m)),
        gv_guarantee: guarantee,
        code,
        wall_time: start.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct MaxCodeOptions {
    /// Node budget; the search stops uncertified when exhausted.
    pub budget: u64,
    /// Restrict to codes containing the zero word (no loss of optimality).
    pub fix_zero: bool,
    /// Words the code must contain; disables `fix_zero`.
    pub seeds: Vec<Word>,
    pub cap: usize,
}

impl Default for MaxCodeOptions {
    fn default() -> Self {
        MaxCodeOptions {
            budget: DEFAULT_NODE_BUDGET,
            fix_zero: true,
            seeds: Vec::new(),
            cap: DEFAULT_SEARCH_CAP,
        }
    }
}

struct CliqueSearch {
    adjacency: Vec<Vec<u64>>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch {
    #[inline]
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b / 64] >> (b % 64) & 1 == 1
    }

    /// Greedy sequential coloring of `candidates`; returns them reordered by
    /// color class with the running color count (an upper bound on any clique
    /// among the prefix).
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.adjacent(u, v)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (color, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                bounds.push(color + 1);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, candidates: Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let (order, bounds) = self.color_sort(&candidates);
        let mut remaining = order.clone();
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() || self.exhausted {
                return;
            }
            let v = order[i];
            remaining.pop();
            let next: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&u| self.adjacent(v, u))
                .collect();
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
    }
}

/// Exact maximum size of a code in `R^n` with minimum distance at least `d`.
///
/// Vertices are ordered by weight then lexicographically; a greedy code seeds
/// the incumbent. `certified_optimal` is true iff the search finished within
/// the node budget.
pub fn max_code(
    ring: &FiniteRing,
    weight: &WeightFunction,
    n: usize,
    d: &Rational,
    options: &MaxCodeOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    check_target(d)?;
    let space = WordSpace::new(ring, n);
    let size = space.checked_size(options.cap)?;
    let limit = weight.scaled_ceil(d);
    validate_seeds(ring, weight, n, &options.seeds, limit)?;

    let good: Vec<bool> = (0..size)
        .into_par_iter()
        .map(|r| weight.scaled_word_weight(&space.unrank(r)) >= limit)
        .collect();
    let words: Vec<Word> = (0..size).map(|r| space.unrank(r)).collect();
    let diff_rank = |a: &[usize], b: &[usize]| -> usize {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| acc * ring.order() + ring.sub(x, y))
    };
    let far = |a: usize, b: usize| {
        a != b && good[diff_rank(&words[a], &words[b])] && good[diff_rank(&words[b], &words[a])]
    };

    let mut fixed: Vec<usize> = options.seeds.iter().map(|w| space.rank(w)).collect();
    if fixed.is_empty() && options.fix_zero && size > 0 {
        fixed.push(space.rank(&vec![ring.zero(); n]));
    }
    let candidates: Vec<usize> = ordered_ranks(&space, size, weight, WordOrdering::WeightThenLex)
        .into_iter()
        .filter(|&r| !fixed.contains(&r) && fixed.iter().all(|&f| far(f, r)))
        .collect();

    let k = candidates.len();
    let blocks = k.div_ceil(64).max(1);
    let adjacency: Vec<Vec<u64>> = (0..k)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u64; blocks];
            for j in 0..k {
                if far(candidates[i], candidates[j]) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();

    let seeds: Vec<Word> = fixed.iter().map(|&r| words[r].clone()).collect();
    let incumbent = greedy_gv(
        ring,
        weight,
        n,
        d,
        WordOrdering::WeightThenLex,
        &seeds,
        options.cap,
    )?;
    let position: std::collections::HashMap<usize, usize> = candidates
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i))
        .collect();
    let best: Vec<usize> = incumbent
        .code
        .words()
        .iter()
        .filter_map(|w| position.get(&space.rank(w)).copied())
        .collect();

    let mut search = CliqueSearch {
        adjacency,
        best,
        current: Vec::new(),
        nodes: 0,
        budget: options.budget,
        exhausted: false,
    };
    search.expand((0..k).collect());

    let mut chosen: Vec<Word> = seeds;
    let mut extra: Vec<usize> = search.best.iter().map(|&i| candidates[i]).collect();
    extra.sort_unstable();
    chosen.extend(extra.into_iter().map(|r| words[r].clone()));
    let code = Code::new(ring, n, chosen)?;
    let min = scaled_min_distance(ring, &code, weight);
    assert!(
        min.is_none_or(|m| m >= limit),
        "search returned a code violating d"
    );
    Ok(SearchResult {
        algorithm: "branch-and-bound",
        max_size_found: code.len(),
        certified_optimal: !search.exhausted,
        nodes_explored: search.nodes,
        ordering: WordOrdering::WeightThenLex,
        target_distance: d.clone(),
        min_distance: min.map(|m| weight.unscale(m)),
        gv_guarantee: None,
        code,
        wall_time: start.elapsed(),
    })
}

/// Largest number of codewords in any ball of the given radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListProfile {
    pub radius: Rational,
    pub max_list_size: usize,
    /// First center (in canonical order) attaining the maximum.
    pub witness: Word,
}

/// Exact `max_y |B_r(y) ∩ C|` over every center `y ∈ R^n`.
pub fn list_profile(
    ring: &FiniteRing,
    code: &Code,
    weight: &WeightFunction,
    radius: &Rational,
    cap: usize,
) -> Result<ListProfile> {
    if radius < &Rational::zero() {
        return Err(Error::OutOfRange {
            name: "radius",
            value: rational::render(radius),
            range: "[0, ∞)".into(),
        });
    }
    let n = code.n();
    let space = WordSpace::new(ring, n);
    let size = space.checked_size(cap)?;
    let limit = weight.scaled_floor(radius);
    let oracle = DistanceOracle::new(ring, weight);
    let (count, Reverse(rank)) = (0..size)
        .into_par_iter()
        .map(|r| {
            let center = space.unrank(r);
            let inside = code
                .words()
                .iter()
                .filter(|c| oracle.scaled_distance(c, &center) <= limit)
                .count();
            (inside, Reverse(r))
        })
        .max()
        .expect("R^n is nonempty");
    Ok(ListProfile {
        radius: radius.clone(),
        max_list_size: count,
        witness: space.unrank(rank),
    })
}

/// [`list_profile`] at radius `ρn`.
pub fn list_profile_rho(
    ring: &FiniteRing,
    code: &Code,
    weight: &WeightFunction,
    rho: &Rational,
    cap: usize,
) -> Result<ListProfile> {
    list_profile(ring, code, weight, &(rho * int(code.n() as i64)), cap)
}
