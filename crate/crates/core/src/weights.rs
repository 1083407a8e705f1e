//! Weight functions on a finite ring and their additive extension to words.
//!
//! Every weight is stored twice: as exact rationals (for reporting and the
//! bound formulas) and as integers over a common denominator (for the hot
//! loops in enumeration and search, where comparisons must stay exact).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::rational::{self, int, Rational};
use crate::ring::{FiniteRing, RingKind};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Lee,
    Overweight,
    Homogeneous,
    Custom,
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Lee => "lee",
            WeightKind::Overweight => "overweight",
            WeightKind::Homogeneous => "homogeneous",
            WeightKind::Custom => "custom",
        })
    }
}

/// Which ideals constrain the homogeneous solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealConstraints {
    /// Every nonzero left ideal.
    AllLeftIdeals,
    /// Only nonzero principal left ideals.
    PrincipalOnly,
}

impl fmt::Display for IdealConstraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealConstraints::AllLeftIdeals => "all nonzero left ideals",
            IdealConstraints::PrincipalOnly => "nonzero principal left ideals",
        })
    }
}

/// An exact-rational weight table over the elements of one ring.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    kind: WeightKind,
    ring_name: String,
    table: Vec<Rational>,
    /// Average weight over all of `R`.
    gamma: Rational,
    max_weight: Rational,
    scale: i64,
    scaled: Vec<i64>,
}

impl WeightFunction {
    /// Validates `w(0) = 0`, `w ≥ 0` and builds the scaled integer table.
    pub fn new(kind: WeightKind, ring: &FiniteRing, table: Vec<Rational>) -> Result<Self> {
        if table.len() != ring.order() {
            return Err(Error::WeightTable(format!(
                "expected {} entries, got {}",
                ring.order(),
                table.len()
            )));
        }
        if !table[ring.zero()].is_zero() {
            return Err(Error::WeightTable("weight of zero must be 0".into()));
        }
        if let Some(x) = table.iter().position(|w| w.is_negative()) {
            return Err(Error::WeightTable(format!(
                "negative weight at {}",
                ring.label(x)
            )));
        }
        let denominator = table
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scale = denominator
            .to_i64()
            .ok_or_else(|| Error::WeightTable("denominators too large".into()))?;
        let scaled = table
            .iter()
            .map(|w| {
                (w.numer() * (&denominator / w.denom()))
                    .to_i64()
                    .filter(|v| v.checked_mul(1 << 20).is_some())
                    .ok_or_else(|| Error::WeightTable("weights too large".into()))
            })
            .collect::<Result<Vec<i64>>>()?;
        let total: Rational = table.iter().sum();
        let gamma = total / int(ring.order() as i64);
        let max_weight = table.iter().max().cloned().unwrap_or_else(Rational::zero);
        Ok(WeightFunction {
            kind,
            ring_name: ring.name().to_string(),
            table,
            gamma,
            max_weight,
            scale,
            scaled,
        })
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn ring_name(&self) -> &str {
        &self.ring_name
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn weight(&self, x: usize) -> &Rational {
        &self.table[x]
    }

    /// Average weight over `R` (the `γ` of a homogeneous weight).
    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn max_weight(&self) -> &Rational {
        &self.max_weight
    }

    /// Common denominator of the table.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `scale · w(x)`, an integer.
    #[inline]
    pub fn scaled(&self, x: usize) -> i64 {
        self.scaled[x]
    }

    pub fn scaled_table(&self) -> &[i64] {
        &self.scaled
    }

    /// `scale · w(word)`.
    pub fn scaled_word_weight(&self, word: &[usize]) -> i64 {
        word.iter().map(|&x| self.scaled[x]).sum()
    }

    /// Additive extension `w(x) = Σ w(x_i)`.
    pub fn word_weight(&self, word: &[usize]) -> Rational {
        self.unscale(self.scaled_word_weight(word))
    }

    pub fn unscale(&self, scaled: i64) -> Rational {
        Rational::new(BigInt::from(scaled), BigInt::from(self.scale))
    }

    /// Largest scaled integer `s` with `s / scale ≤ value`.
    pub fn scaled_floor(&self, value: &Rational) -> i64 {
        let s = rational::floor(&(value * int(self.scale)));
        s.to_i64()
            .unwrap_or(if s.is_negative() { i64::MIN } else { i64::MAX })
    }

    /// Smallest scaled integer `s` with `s / scale ≥ value`.
    pub fn scaled_ceil(&self, value: &Rational) -> i64 {
        let s = rational::ceil(&(value * int(self.scale)));
        s.to_i64()
            .unwrap_or(if s.is_negative() { i64::MIN } else { i64::MAX })
    }

    /// `index,label,weight` rows with rationals as `p/q`.
    pub fn to_csv(&self, ring: &FiniteRing) -> String {
        let mut out = String::from("index,label,weight\n");
        for (i, w) in self.table.iter().enumerate() {
            out.push_str(&format!(
                "{i},{},{}\n",
                csv_field(ring.label(i)),
                rational::render(w)
            ));
        }
        out
    }

    /// Reads a custom weight table in the [`to_csv`](Self::to_csv) format.
    pub fn from_csv(ring: &FiniteRing, text: &str) -> Result<Self> {
        let mut table = vec![None; ring.order()];
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next() {
            Some(header) if header.trim() == "index,label,weight" => {}
            _ => {
                return Err(Error::WeightTable(
                    "missing header `index,label,weight`".into(),
                ))
            }
        }
        for line in lines {
            let (index, rest) = line
                .split_once(',')
                .ok_or_else(|| Error::WeightTable(format!("malformed row {line:?}")))?;
            let (_, weight) = rest
                .rsplit_once(',')
                .ok_or_else(|| Error::WeightTable(format!("malformed row {line:?}")))?;
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| Error::WeightTable(format!("bad index in {line:?}")))?;
            if index >= ring.order() {
                return Err(Error::WeightTable(format!("index {index} out of range")));
            }
            if table[index].is_some() {
                return Err(Error::WeightTable(format!("duplicate index {index}")));
            }
            table[index] = Some(rational::parse(weight)?);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::WeightTable(format!("missing index {i}"))))
            .collect::<Result<Vec<_>>>()?;
        WeightFunction::new(WeightKind::Custom, ring, table)
    }
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

/// 0 at zero, 1 elsewhere.
pub fn hamming(ring: &FiniteRing) -> WeightFunction {
    let table = (0..ring.order())
        .map(|x| int(i64::from(x != ring.zero())))
        .collect();
    WeightFunction::new(WeightKind::Hamming, ring, table).expect("valid table")
}

/// `min(x, m − x)` on `Z_m`.
pub fn lee(ring: &FiniteRing) -> Result<WeightFunction> {
    let RingKind::Residue { modulus } = *ring.kind() else {
        return Err(Error::NotResidueRing(ring.name().to_string()));
    };
    let table = (0..modulus)
        .map(|x| int(x.min(modulus - x) as i64))
        .collect();
    WeightFunction::new(WeightKind::Lee, ring, table)
}

/// 0 at zero, 1 on units, 2 on nonzero nonunits.
pub fn overweight(ring: &FiniteRing) -> WeightFunction {
    let table = (0..ring.order())
        .map(|x| {
            if x == ring.zero() {
                int(0)
            } else if ring.is_unit(x) {
                int(1)
            } else {
                int(2)
            }
        })
        .collect();
    WeightFunction::new(WeightKind::Overweight, ring, table).expect("valid table")
}

/// Outcome of the homogeneous-weight linear solve.
#[derive(Debug, Clone)]
pub enum HomogeneousOutcome {
    Unique(WeightFunction),
    NoSolution,
    /// The solution space is an affine space of this dimension.
    Underdetermined {
        dimension: usize,
    },
    /// The system has a unique solution, but it takes negative values.
    NegativeSolution {
        table: Vec<Rational>,
    },
}

#[derive(Debug, Clone)]
pub struct HomogeneousReport {
    pub gamma: Rational,
    pub constraints: IdealConstraints,
    /// Number of ideal equations used.
    pub equations: usize,
    /// Number of unknowns (nonzero associate classes).
    pub unknowns: usize,
    pub outcome: HomogeneousOutcome,
}

impl HomogeneousReport {
    pub fn weight(&self) -> Option<&WeightFunction> {
        match &self.outcome {
            HomogeneousOutcome::Unique(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_weight(self) -> Option<WeightFunction> {
        match self.outcome {
            HomogeneousOutcome::Unique(w) => Some(w),
            _ => None,
        }
    }

    pub fn summary(&self) -> String {
        let status = match &self.outcome {
            HomogeneousOutcome::Unique(_) => "unique solution".to_string(),
            HomogeneousOutcome::NoSolution => "no solution".to_string(),
            HomogeneousOutcome::Underdetermined { dimension } => {
                format!("solution space of dimension {dimension}")
            }
            HomogeneousOutcome::NegativeSolution { .. } => {
                "unique solution with negative entries (not a weight)".to_string()
            }
        };
        format!(
            "homogeneous weight, gamma = {}: {status} ({} equations over {}, {} unknowns)",
            rational::render(&self.gamma),
            self.equations,
            self.constraints,
            self.unknowns
        )
    }
}

/// Solves for a weight constant on associate classes whose average over every
/// nonzero (left or principal left) ideal is `gamma`, in exact arithmetic.
pub fn solve_homogeneous(
    ring: &FiniteRing,
    gamma: &Rational,
    constraints: IdealConstraints,
) -> Result<HomogeneousReport> {
    if !gamma.is_positive() {
        return Err(Error::OutOfRange {
            name: "gamma",
            value: rational::render(gamma),
            range: "(0, ∞)".into(),
        });
    }
    let classes = ring.associate_classes();
    let mut class_of = vec![0usize; ring.order()];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = c;
        }
    }
    let zero_class = class_of[ring.zero()];
    // unknown slot for each nonzero class
    let slots: Vec<Option<usize>> = {
        let mut next = 0;
        (0..classes.len())
            .map(|c| {
                (c != zero_class).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let unknowns = classes.len() - 1;

    let ideals: Vec<&[usize]> = match constraints {
        IdealConstraints::AllLeftIdeals => ring
            .left_ideals()
            .iter()
            .map(Vec::as_slice)
            .filter(|i| i.len() > 1)
            .collect(),
        IdealConstraints::PrincipalOnly => {
            let mut seen: Vec<&[usize]> = (0..ring.order())
                .map(|x| ring.principal_left_ideal(x))
                .filter(|i| i.len() > 1)
                .collect();
            seen.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            seen.dedup();
            seen
        }
    };

    let rows: Vec<Vec<Rational>> = ideals
        .iter()
        .map(|ideal| {
            let mut row = vec![Rational::zero(); unknowns + 1];
            for &x in ideal.iter() {
                if let Some(s) = slots[class_of[x]] {
                    row[s] += int(1);
                }
            }
            row[unknowns] = gamma * int(ideal.len() as i64);
            row
        })
        .collect();

    let outcome = match gaussian_solve(rows, unknowns) {
        LinearSolution::Inconsistent => HomogeneousOutcome::NoSolution,
        LinearSolution::Free(dimension) => HomogeneousOutcome::Underdetermined { dimension },
        LinearSolution::Unique(values) => {
            let table: Vec<Rational> = (0..ring.order())
                .map(|x| match slots[class_of[x]] {
                    Some(s) => values[s].clone(),
                    None => Rational::zero(),
                })
                .collect();
            if table.iter().any(|w| w.is_negative()) {
                HomogeneousOutcome::NegativeSolution { table }
            } else {
                HomogeneousOutcome::Unique(WeightFunction::new(
                    WeightKind::Homogeneous,
                    ring,
                    table,
                )?)
            }
        }
    };
    Ok(HomogeneousReport {
        gamma: gamma.clone(),
        constraints,
        equations: ideals.len(),
        unknowns,
        outcome,
    })
}

/// Convenience: the unique homogeneous weight of average `gamma` over all
/// nonzero left ideals, if it exists.
pub fn homogeneous(ring: &FiniteRing, gamma: &Rational) -> Result<Option<WeightFunction>> {
    Ok(solve_homogeneous(ring, gamma, IdealConstraints::AllLeftIdeals)?.into_weight())
}

enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Free(usize),
}

/// Row reduction of an augmented matrix `[A | b]` over the rationals.
fn gaussian_solve(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> LinearSolution {
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if rank < unknowns {
        return LinearSolution::Free(unknowns - rank);
    }
    let mut values = vec![Rational::zero(); unknowns];
    for (r, &c) in pivot_cols.iter().enumerate() {
        values[c] = rows[r][unknowns].clone();
    }
    LinearSolution::Unique(values)
}

/// Exact average `Σ_{a∈A} w(a) / |A|`.
pub fn average_weight(weight: &WeightFunction, set: &[usize]) -> Result<Rational> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let total: Rational = set.iter().map(|&a| weight.weight(a)).sum();
    Ok(total / int(set.len() as i64))
}

/// Closed form for the average overweight of an ideal of a local ring:
/// `(|R| + |J| − 2)/|R|` for `R`, `2(1 − 1/|I|)` for proper nonzero `I`, 0 for `{0}`.
pub fn ideal_average_formula(ring: &FiniteRing, ideal: &[usize]) -> Result<Rational> {
    let j = ring
        .locality()
        .maximal_ideal_order()
        .ok_or_else(|| Error::NonLocal(ring.name().to_string()))?;
    if !ring.is_left_ideal(ideal) && !is_right_ideal(ring, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let size = ideal.len() as i64;
    let order = ring.order() as i64;
    Ok(if size == 1 {
        Rational::zero()
    } else if size == order {
        Rational::new(BigInt::from(order + j as i64 - 2), BigInt::from(order))
    } else {
        int(2) * (int(1) - Rational::new(BigInt::one(), BigInt::from(size)))
    })
}

fn is_right_ideal(ring: &FiniteRing, set: &[usize]) -> bool {
    let mut member = vec![false; ring.order()];
    for &x in set {
        if x >= ring.order() {
            return false;
        }
        member[x] = true;
    }
    member[ring.zero()]
        && set.iter().all(|&a| {
            set.iter().all(|&b| member[ring.sub(a, b)])
                && (0..ring.order()).all(|r| member[ring.mul(a, r)])
        })
}

/// `η = 2(1 − 1/|J|)`, the average overweight of the maximal ideal of a local
/// ring that is not a field.
pub fn eta(ring: &FiniteRing) -> Result<Rational> {
    let j = ring
        .locality()
        .maximal_ideal_order()
        .ok_or_else(|| Error::NonLocal(ring.name().to_string()))?;
    if j < 2 {
        return Err(Error::FieldRing(ring.name().to_string()));
    }
    Ok(int(2) * (int(1) - Rational::new(BigInt::one(), BigInt::from(j))))
}

/// First pair `(x, y)` in canonical order with `w(x + y) > w(x) + w(y)`.
pub fn triangle_violation(ring: &FiniteRing, weight: &WeightFunction) -> Option<(usize, usize)> {
    let n = ring.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| weight.scaled(ring.add(x, y)) > weight.scaled(x) + weight.scaled(y))
}

/// Whether the element-level triangle inequality holds.
pub fn triangle_holds(ring: &FiniteRing, weight: &WeightFunction) -> bool {
    triangle_violation(ring, weight).is_none()
}

/// `d(x, y) = w(x − y)` on words.
#[derive(Debug, Clone, Copy)]
pub struct DistanceOracle<'a> {
    pub ring: &'a FiniteRing,
    pub weight: &'a WeightFunction,
}

impl<'a> DistanceOracle<'a> {
    pub fn new(ring: &'a FiniteRing, weight: &'a WeightFunction) -> Self {
        DistanceOracle { ring, weight }
    }

    #[inline]
    pub fn scaled_distance(&self, x: &[usize], y: &[usize]) -> i64 {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.weight.scaled(self.ring.sub(a, b)))
            .sum()
    }

    pub fn distance(&self, x: &[usize], y: &[usize]) -> Rational {
        self.weight.unscale(self.scaled_distance(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ring(spec: &str) -> FiniteRing {
        FiniteRing::parse(spec).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn hamming_tables() {
        let z4 = ring("Z4");
        let h = hamming(&z4);
        assert_eq!(h.table(), ints(&[0, 1, 1, 1]));
        assert_eq!(h.word_weight(&[0, 2, 3]), int(2));
        assert_eq!(*hamming(&ring("Z6")).gamma(), ratio(5, 6));
    }

    #[test]
    fn lee_tables() {
        assert_eq!(lee(&ring("Z4")).unwrap().table(), ints(&[0, 1, 2, 1]));
        assert_eq!(lee(&ring("Z6")).unwrap().table(), ints(&[0, 1, 2, 3, 2, 1]));
        assert_eq!(lee(&ring("Z5")).unwrap().table(), ints(&[0, 1, 2, 2, 1]));
        assert!(matches!(lee(&ring("GF(4)")), Err(Error::NotResidueRing(_))));
        assert!(lee(&ring("Z2xZ2")).is_err());
    }

    #[test]
    fn overweight_tables() {
        let z4 = ring("Z4");
        assert_eq!(overweight(&z4).table(), ints(&[0, 1, 2, 1]));
        assert_eq!(*overweight(&z4).max_weight(), int(2));
        let gf4 = ring("GF(4)");
        assert_eq!(overweight(&gf4).table(), hamming(&gf4).table());
        assert_eq!(overweight(&ring("Z6")).table(), ints(&[0, 1, 2, 2, 2, 1]));
    }

    #[test]
    fn homogeneous_known_solutions() {
        let one = int(1);
        let z4 = homogeneous(&ring("Z4"), &one).unwrap().unwrap();
        assert_eq!(z4.table(), ints(&[0, 1, 2, 1]));

        let z6 = ring("Z6");
        let w6 = homogeneous(&z6, &one).unwrap().unwrap();
        let expected = vec![
            int(0),
            ratio(1, 2),
            ratio(3, 2),
            int(2),
            ratio(3, 2),
            ratio(1, 2),
        ];
        assert_eq!(w6.table(), expected);
        for ideal in z6.left_ideals().iter().filter(|i| i.len() > 1) {
            assert_eq!(average_weight(&w6, ideal).unwrap(), one);
        }

        let z8 = ring("Z8");
        let w8 = homogeneous(&z8, &one).unwrap().unwrap();
        assert_eq!(w8.table(), ints(&[0, 1, 1, 1, 2, 1, 1, 1]));
        for ideal in [vec![0, 4], vec![0, 2, 4, 6], (0..8).collect()] {
            assert_eq!(average_weight(&w8, &ideal).unwrap(), one);
        }
    }

    #[test]
    fn homogeneous_non_frobenius_has_no_solution() {
        // F2[x,y]/(x,y)^2 as Z2[x]/(x^2) x ... is not available as a spec; build
        // it from tables: basis {1, x, y}, x^2 = y^2 = xy = 0.
        let order = 8;
        let labels: Vec<String> = (0..order).map(|i| format!("e{i}")).collect();
        let coords = |i: usize| [i & 1, (i >> 1) & 1, (i >> 2) & 1];
        let index = |c: [usize; 3]| c[0] | (c[1] << 1) | (c[2] << 2);
        let mut add = vec![0u32; order * order];
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let (ca, cb) = (coords(a), coords(b));
                add[a * order + b] = index([ca[0] ^ cb[0], ca[1] ^ cb[1], ca[2] ^ cb[2]]) as u32;
                let c = [
                    ca[0] & cb[0],
                    (ca[0] & cb[1]) ^ (ca[1] & cb[0]),
                    (ca[0] & cb[2]) ^ (ca[2] & cb[0]),
                ];
                mul[a * order + b] = index(c) as u32;
            }
        }
        let r = FiniteRing::from_tables("F2[x,y]/(x,y)^2", labels, add, mul).unwrap();
        assert!(r.is_local());
        let report = solve_homogeneous(&r, &int(1), IdealConstraints::AllLeftIdeals).unwrap();
        assert!(matches!(report.outcome, HomogeneousOutcome::NoSolution));
        assert!(report.summary().contains("no solution"));
    }

    #[test]
    fn principal_only_flag_is_reported() {
        let report =
            solve_homogeneous(&ring("Z2xZ2"), &int(1), IdealConstraints::PrincipalOnly).unwrap();
        assert_eq!(report.constraints, IdealConstraints::PrincipalOnly);
        assert!(report.summary().contains("principal"));
        // Z2xZ2 is principal-ideal, so the two solves agree.
        let all = homogeneous(&ring("Z2xZ2"), &int(1)).unwrap().unwrap();
        assert_eq!(report.weight().unwrap().table(), all.table());
    }

    #[test]
    fn gamma_must_be_positive() {
        assert!(solve_homogeneous(&ring("Z4"), &int(0), IdealConstraints::AllLeftIdeals).is_err());
    }

    #[test]
    fn averages_and_eta() {
        let z4 = ring("Z4");
        let w = overweight(&z4);
        assert_eq!(average_weight(&w, &[0, 1, 2, 3]).unwrap(), int(1));
        assert_eq!(average_weight(&w, &[0, 2]).unwrap(), int(1));
        assert!(matches!(average_weight(&w, &[]), Err(Error::EmptySet)));
        let z8 = ring("Z8");
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(average_weight(&overweight(&z8), &all).unwrap(), ratio(5, 4));

        assert_eq!(ideal_average_formula(&z4, &[0, 1, 2, 3]).unwrap(), int(1));
        assert_eq!(
            ideal_average_formula(&z8, &[0, 2, 4, 6]).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(ideal_average_formula(&z8, &[0]).unwrap(), int(0));
        assert!(matches!(
            ideal_average_formula(&ring("Z6"), &[0]),
            Err(Error::NonLocal(_))
        ));
        assert!(matches!(
            ideal_average_formula(&z8, &[0, 1]),
            Err(Error::NotAnIdeal)
        ));

        assert_eq!(eta(&z4).unwrap(), int(1));
        assert_eq!(eta(&z8).unwrap(), ratio(3, 2));
        assert_eq!(eta(&ring("Z9")).unwrap(), ratio(4, 3));
        assert!(matches!(eta(&ring("Z6")), Err(Error::NonLocal(_))));
        assert!(matches!(eta(&ring("GF(4)")), Err(Error::FieldRing(_))));
    }

    #[test]
    fn triangle_checks() {
        for spec in ["Z4", "Z6", "Z9", "GF(8)", "Z2xZ4", "Z4[x]/(x^2+2)"] {
            let r = ring(spec);
            assert!(triangle_holds(&r, &overweight(&r)), "{spec}");
        }
        let z6 = ring("Z6");
        let w6 = homogeneous(&z6, &int(1)).unwrap().unwrap();
        assert_eq!(triangle_violation(&z6, &w6), Some((1, 1)));
        for m in [4, 5, 8] {
            let r = ring(&format!("Z{m}"));
            assert!(triangle_holds(
                &r,
                &homogeneous(&r, &int(1)).unwrap().unwrap()
            ));
        }
        let z12 = ring("Z12");
        assert!(!triangle_holds(
            &z12,
            &homogeneous(&z12, &int(1)).unwrap().unwrap()
        ));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let z6 = ring("Z6");
        let w = homogeneous(&z6, &int(1)).unwrap().unwrap();
        let csv = w.to_csv(&z6);
        assert_eq!(
            csv,
            "index,label,weight\n0,0,0\n1,1,1/2\n2,2,3/2\n3,3,2\n4,4,3/2\n5,5,1/2\n"
        );
        let back = WeightFunction::from_csv(&z6, &csv).unwrap();
        assert_eq!(back.table(), w.table());
        assert_eq!(*back.kind(), WeightKind::Custom);

        let z2z2 = ring("Z2xZ2");
        let csv = overweight(&z2z2).to_csv(&z2z2);
        assert!(csv.contains("1,\"(0,1)\",2"));
        assert_eq!(
            WeightFunction::from_csv(&z2z2, &csv).unwrap().table(),
            overweight(&z2z2).table()
        );

        assert!(WeightFunction::from_csv(&z6, "index,label,weight\n0,0,1\n").is_err());
        assert!(WeightFunction::from_csv(&z6, "nope\n").is_err());
        let negative = "index,label,weight\n0,0,0\n1,1,-1\n2,2,1\n3,3,1\n4,4,1\n5,5,1\n";
        assert!(WeightFunction::from_csv(&z6, negative).is_err());
    }

    #[test]
    fn distance_oracle_axioms_short_words() {
        for spec in ["Z4", "Z6", "Z2xZ2", "GF(4)"] {
            let r = ring(spec);
            let w = overweight(&r);
            let d = DistanceOracle::new(&r, &w);
            let n = r.order();
            let words: Vec<[usize; 2]> = (0..n * n).map(|i| [i / n, i % n]).collect();
            for x in &words {
                for y in &words {
                    let diff = [r.sub(x[0], y[0]), r.sub(x[1], y[1])];
                    assert_eq!(d.distance(x, y), d.distance(y, x));
                    assert_eq!(d.distance(x, y), d.distance(&diff, &[r.zero(), r.zero()]));
                    assert_eq!(d.scaled_distance(x, y) == 0, x == y);
                }
            }
        }
    }
}
