//! Finite rings as explicit operation tables.
//!
//! A ring is built from a short descriptor (`Z4`, `GF(8)`, `Z4[x]/(x^2+2)`,
//! `Z2xZ4`) and tabulated once. Every structural question (units, ideals,
//! associate classes, locality) is then answered by exhaustive scan over the
//! tables, which is exact and cheap at the orders we care about (≤ 512 by
//! default).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 512;

/// Environment variable overriding [`DEFAULT_ORDER_CAP`].
pub const ORDER_CAP_ENV: &str = "RINGBOUNDS_ORDER_CAP";

/// The order cap in effect: `RINGBOUNDS_ORDER_CAP` if set and valid, else 512.
pub fn default_order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&cap: &usize| cap >= 2)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

/// Rings up to this order get an exhaustive axiom check; larger ones are sampled.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 64;
pub const SAMPLED_AXIOM_TRIPLES: usize = 100_000;

/// One factor of a ring descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `Zm`
    Residue { modulus: u64 },
    /// `GF(q)`
    Galois { order: u64 },
    /// `Zm[x]/(f)`; `coeffs` are low-to-high, reduced mod `modulus`, monic.
    Quotient { modulus: u64, coeffs: Vec<u64> },
}

/// Parsed ring descriptor: a direct product of one or more atoms.
///
/// Grammar (whitespace-insensitive):
///
/// ```text
/// spec := atom | atom "x" spec
/// atom := "Z" int | "GF(" int ")" | "Z" int "[x]/(" poly ")"
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub atoms: Vec<Atom>,
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = SpecParser {
            original: text,
            chars: compact.chars().collect(),
            pos: 0,
        };
        let mut atoms = vec![parser.atom()?];
        while parser.peek() == Some('x') {
            parser.pos += 1;
            atoms.push(parser.atom()?);
        }
        if parser.pos != parser.chars.len() {
            return Err(parser.error(format!("unexpected input at offset {}", parser.pos)));
        }
        Ok(RingSpec { atoms })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            match atom {
                Atom::Residue { modulus } => write!(f, "Z{modulus}")?,
                Atom::Galois { order } => write!(f, "GF({order})")?,
                Atom::Quotient { modulus, coeffs } => {
                    write!(f, "Z{modulus}[x]/({})", poly_to_string(coeffs))?
                }
            }
        }
        Ok(())
    }
}

struct SpecParser<'a> {
    original: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            spec: self.original.to_string(),
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, literal: &str) -> Result<()> {
        for expected in literal.chars() {
            if self.peek() != Some(expected) {
                return Err(self.error(format!("expected {literal:?} at offset {}", self.pos)));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected an integer at offset {start}")));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error(format!("integer {digits} out of range")))
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                let modulus = self.int()?;
                if modulus < 2 {
                    return Err(self.error("modulus must be at least 2"));
                }
                if self.peek() != Some('[') {
                    return Ok(Atom::Residue { modulus });
                }
                self.expect("[x]/(")?;
                let start = self.pos;
                while self.peek().is_some_and(|c| c != ')') {
                    self.pos += 1;
                }
                let poly: String = self.chars[start..self.pos].iter().collect();
                self.expect(")")?;
                let coeffs = parse_poly(&poly, modulus).map_err(|reason| self.error(reason))?;
                Ok(Atom::Quotient { modulus, coeffs })
            }
            Some('G') => {
                self.expect("GF(")?;
                let order = self.int()?;
                self.expect(")")?;
                if prime_power(order).is_none() {
                    return Err(self.error(format!("GF({order}): {order} is not a prime power")));
                }
                Ok(Atom::Galois { order })
            }
            _ => Err(self.error(format!("expected 'Z' or 'GF(' at offset {}", self.pos))),
        }
    }
}

/// Parses a monic polynomial in `x` with integer coefficients and reduces it mod `modulus`.
fn parse_poly(text: &str, modulus: u64) -> std::result::Result<Vec<u64>, String> {
    if text.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms: HashMap<usize, i128> = HashMap::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i128;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i > 0 {
            return Err(format!("expected '+' or '-' in {text:?}"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<i128> = if start == i {
            None
        } else {
            Some(
                text[start..i]
                    .parse()
                    .map_err(|_| "coefficient out of range")?,
            )
        };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let degree = if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                text[start..i]
                    .parse::<usize>()
                    .map_err(|_| format!("bad exponent in {text:?}"))?
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(format!("empty term in {text:?}"));
        };
        *terms.entry(degree).or_default() += sign * coeff.unwrap_or(1);
    }
    let top = terms.keys().copied().max().unwrap_or(0);
    let mut coeffs = vec![0u64; top + 1];
    for (degree, value) in terms {
        coeffs[degree] = value.rem_euclid(modulus as i128) as u64;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(format!(
            "modulus polynomial {text:?} must have degree at least 1"
        ));
    }
    if *coeffs.last().unwrap() != 1 {
        return Err(format!(
            "modulus polynomial {text:?} is not monic mod {modulus}"
        ));
    }
    Ok(coeffs)
}

/// Renders low-to-high coefficients as `2x^2+x+3`.
fn poly_to_string(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (degree, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (degree, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `Some((p, k))` with `n = p^k`, `k ≥ 1`.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, k))
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z_p`; both low-to-high.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Exhaustive factor check: no monic polynomial of degree `1..=deg/2` divides `f`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for index in 0..count {
            let mut g = digits(index, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Base-`base` digits of `value`, least significant first, exactly `len` of them.
fn digits(mut value: u64, base: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(value % base);
        value /= base;
    }
    out
}

/// The first monic irreducible polynomial of degree `k` over `Z_p`, ordered by
/// the integer whose base-`p` digits are its lower coefficients.
pub(crate) fn first_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    (0..p.pow(k as u32))
        .map(|index| {
            let mut f = digits(index, p, k);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Provenance of a tabulated ring, kept for weights that only make sense on
/// particular constructions (the Lee weight on `Z_m`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    Residue {
        modulus: u64,
    },
    Galois {
        prime: u64,
        degree: u32,
        modulus_poly: Vec<u64>,
    },
    Quotient {
        modulus: u64,
        coeffs: Vec<u64>,
    },
    Product(Vec<RingKind>),
    Tabulated,
}

/// Locality data: `R` is local iff its nonunits are closed under addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Locality {
    pub is_local: bool,
    /// The nonunits, when they form the maximal ideal.
    pub maximal_ideal: Option<Vec<usize>>,
    /// `q = |R/J|` for local rings.
    pub residue_field_order: Option<usize>,
}

impl Locality {
    pub fn maximal_ideal_order(&self) -> Option<usize> {
        self.maximal_ideal.as_ref().map(Vec::len)
    }
}

struct Tables {
    labels: Vec<String>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn tabulate_atom(atom: &Atom) -> (Tables, RingKind) {
    match atom {
        Atom::Residue { modulus } => {
            let m = *modulus as usize;
            let labels = (0..m).map(|i| i.to_string()).collect();
            let mut add = vec![0u32; m * m];
            let mut mul = vec![0u32; m * m];
            for a in 0..m {
                for b in 0..m {
                    add[a * m + b] = ((a + b) % m) as u32;
                    mul[a * m + b] = ((a * b) % m) as u32;
                }
            }
            (
                Tables { labels, add, mul },
                RingKind::Residue { modulus: *modulus },
            )
        }
        Atom::Galois { order } => {
            let (p, k) = prime_power(*order).expect("validated by the parser");
            let f = first_irreducible(p, k);
            let tables = tabulate_quotient(p, &f);
            (
                tables,
                RingKind::Galois {
                    prime: p,
                    degree: k,
                    modulus_poly: f,
                },
            )
        }
        Atom::Quotient { modulus, coeffs } => (
            tabulate_quotient(*modulus, coeffs),
            RingKind::Quotient {
                modulus: *modulus,
                coeffs: coeffs.clone(),
            },
        ),
    }
}

/// `Z_m[x]/(f)` with `f` monic of degree `k`; element index `Σ c_i m^i`.
fn tabulate_quotient(m: u64, f: &[u64]) -> Tables {
    let k = f.len() - 1;
    let order = m.pow(k as u32) as usize;
    let elems: Vec<Vec<u64>> = (0..order as u64).map(|i| digits(i, m, k)).collect();
    let index = |c: &[u64]| c.iter().rev().fold(0u64, |acc, &d| acc * m + d) as u32;
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for (a, ca) in elems.iter().enumerate() {
        for (b, cb) in elems.iter().enumerate() {
            let sum: Vec<u64> = ca.iter().zip(cb).map(|(x, y)| (x + y) % m).collect();
            add[a * order + b] = index(&sum);
            let mut prod = vec![0u64; 2 * k - 1];
            for (i, x) in ca.iter().enumerate() {
                for (j, y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % m;
                }
            }
            mul[a * order + b] = index(&poly_rem(&prod, f, m));
        }
    }
    let labels = elems.iter().map(|c| poly_to_string(c)).collect();
    Tables { labels, add, mul }
}

/// Direct product with lexicographic tuple order (first factor most significant).
fn tabulate_product(factors: &[Tables]) -> Tables {
    let orders: Vec<usize> = factors.iter().map(|t| t.labels.len()).collect();
    let order: usize = orders.iter().product();
    let tuples: Vec<Vec<usize>> = (0..order)
        .map(|mut i| {
            let mut t = vec![0; orders.len()];
            for (slot, &o) in t.iter_mut().zip(&orders).rev() {
                *slot = i % o;
                i /= o;
            }
            t
        })
        .collect();
    let index = |t: &[usize]| {
        t.iter()
            .zip(&orders)
            .fold(0usize, |acc, (&c, &o)| acc * o + c) as u32
    };
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    let mut scratch_a = vec![0; orders.len()];
    let mut scratch_m = vec![0; orders.len()];
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            for (f, tables) in factors.iter().enumerate() {
                let o = orders[f];
                scratch_a[f] = tables.add[ta[f] * o + tb[f]] as usize;
                scratch_m[f] = tables.mul[ta[f] * o + tb[f]] as usize;
            }
            add[a * order + b] = index(&scratch_a);
            mul[a * order + b] = index(&scratch_m);
        }
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let inner: Vec<&str> = t
                .iter()
                .enumerate()
                .map(|(f, &c)| factors[f].labels[c].as_str())
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();
    Tables { labels, add, mul }
}

/// A fully tabulated finite ring with identity.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    name: String,
    kind: RingKind,
    order: usize,
    labels: Vec<String>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    is_unit: Vec<bool>,
    units: Vec<usize>,
    principal: Vec<Vec<usize>>,
    left_ideals: Vec<Vec<usize>>,
    associate_classes: Vec<Vec<usize>>,
    locality: Locality,
}

impl FiniteRing {
    /// Parses and builds a ring under the default order cap.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::build(&spec.parse()?, default_order_cap())
    }

    /// Builds the ring described by `spec`, refusing orders above `order_cap`.
    pub fn build(spec: &RingSpec, order_cap: usize) -> Result<Self> {
        let mut order: u128 = 1;
        for atom in &spec.atoms {
            let atom_order = match atom {
                Atom::Residue { modulus } => *modulus as u128,
                Atom::Galois { order } => *order as u128,
                Atom::Quotient { modulus, coeffs } => {
                    (*modulus as u128).saturating_pow(coeffs.len() as u32 - 1)
                }
            };
            order = order.saturating_mul(atom_order);
        }
        if order > order_cap as u128 {
            return Err(Error::OrderCap {
                order,
                cap: order_cap,
            });
        }
        let (mut factors, mut kinds): (Vec<Tables>, Vec<RingKind>) =
            spec.atoms.iter().map(tabulate_atom).unzip();
        let (tables, kind) = if factors.len() == 1 {
            (factors.pop().unwrap(), kinds.pop().unwrap())
        } else {
            (tabulate_product(&factors), RingKind::Product(kinds))
        };
        Ok(Self::assemble(spec.to_string(), kind, tables))
    }

    /// Builds a ring from raw tables (row-major `order × order`), checking the
    /// ring axioms first. Labels become the element names.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Self> {
        let order = labels.len();
        if order < 2 || add.len() != order * order || mul.len() != order * order {
            return Err(Error::InvalidRing(
                "tables must be order × order with order ≥ 2".into(),
            ));
        }
        if add.iter().chain(&mul).any(|&x| x as usize >= order) {
            return Err(Error::InvalidRing("table entry out of range".into()));
        }
        let tables = Tables { labels, add, mul };
        find_identity(&tables.add, order)
            .ok_or_else(|| Error::InvalidRing("no additive identity".into()))?;
        find_identity(&tables.mul, order)
            .ok_or_else(|| Error::InvalidRing("no multiplicative identity".into()))?;
        let negatable = (0..order).all(|a| {
            let zero = find_identity(&tables.add, order).unwrap();
            (0..order).any(|b| tables.add[a * order + b] as usize == zero)
        });
        if !negatable {
            return Err(Error::InvalidRing("missing additive inverse".into()));
        }
        let ring = Self::assemble(name.into(), RingKind::Tabulated, tables);
        ring.check_axioms().map_err(Error::InvalidRing)?;
        Ok(ring)
    }

    fn assemble(name: String, kind: RingKind, tables: Tables) -> Self {
        let Tables { labels, add, mul } = tables;
        let order = labels.len();
        let zero = find_identity(&add, order).expect("additive identity");
        let one = find_identity(&mul, order).expect("multiplicative identity");
        let neg: Vec<u32> = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] as usize == zero)
                    .expect("additive inverse") as u32
            })
            .collect();
        let is_unit: Vec<bool> = (0..order)
            .map(|x| {
                (0..order).any(|y| {
                    mul[x * order + y] as usize == one && mul[y * order + x] as usize == one
                })
            })
            .collect();
        let units: Vec<usize> = (0..order).filter(|&x| is_unit[x]).collect();
        let principal: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                let mut set: Vec<usize> = (0..order).map(|r| mul[r * order + x] as usize).collect();
                set.sort_unstable();
                set.dedup();
                set
            })
            .collect();
        let left_ideals = ideal_closure(&principal, &add, order);
        let associate_classes = associate_partition(&principal);

        let nonunits: Vec<usize> = (0..order).filter(|&x| !is_unit[x]).collect();
        let closed = nonunits.iter().all(|&a| {
            nonunits
                .iter()
                .all(|&b| !is_unit[add[a * order + b] as usize])
        });
        let locality = if closed {
            let q = order / nonunits.len();
            Locality {
                is_local: true,
                maximal_ideal: Some(nonunits),
                residue_field_order: Some(q),
            }
        } else {
            Locality {
                is_local: false,
                maximal_ideal: None,
                residue_field_order: None,
            }
        };

        FiniteRing {
            name,
            kind,
            order,
            labels,
            add,
            mul,
            neg,
            zero,
            one,
            is_unit,
            units,
            principal,
            left_ideals,
            associate_classes,
            locality,
        }
    }

    /// Canonical descriptor (re-parses to the same ring).
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element with the given label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn is_unit(&self, x: usize) -> bool {
        self.is_unit[x]
    }

    /// Elements with a two-sided inverse, ascending.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// `u = |R^×|`.
    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    /// `v = |R| − 1 − u`, the number of nonzero nonunits.
    pub fn nonzero_nonunit_count(&self) -> usize {
        self.order - 1 - self.units.len()
    }

    /// `Rx = {r·x : r ∈ R}`, ascending.
    pub fn principal_left_ideal(&self, x: usize) -> &[usize] {
        &self.principal[x]
    }

    /// All left ideals, ordered by size then lexicographically; includes `{0}` and `R`.
    pub fn left_ideals(&self) -> &[Vec<usize>] {
        &self.left_ideals
    }

    /// The partition `x ~ y ⇔ Rx = Ry`, classes ordered by smallest member.
    pub fn associate_classes(&self) -> &[Vec<usize>] {
        &self.associate_classes
    }

    pub fn locality(&self) -> &Locality {
        &self.locality
    }

    pub fn is_local(&self) -> bool {
        self.locality.is_local
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `set` is an additive subgroup closed under left multiplication.
    pub fn is_left_ideal(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        member[self.zero]
            && set.iter().all(|&a| {
                member[self.neg(a)]
                    && set.iter().all(|&b| member[self.add(a, b)])
                    && (0..self.order).all(|r| member[self.mul(r, a)])
            })
    }

    /// Whether `set` is also closed under right multiplication.
    pub fn is_two_sided_ideal(&self, set: &[usize]) -> bool {
        let member: HashSet<usize> = set.iter().copied().collect();
        self.is_left_ideal(set)
            && set
                .iter()
                .all(|&a| (0..self.order).all(|r| member.contains(&self.mul(a, r))))
    }

    /// Ring axioms: exhaustive for order ≤ 64, otherwise 10⁵ sampled triples
    /// from a fixed seed. Returns a description of the first violation.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order;
        for a in 0..n {
            if self.add(a, self.zero) != a || self.add(self.zero, a) != a {
                return Err(format!(
                    "zero is not an additive identity at {}",
                    self.labels[a]
                ));
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return Err(format!(
                    "one is not a multiplicative identity at {}",
                    self.labels[a]
                ));
            }
            if self.add(a, self.neg(a)) != self.zero {
                return Err(format!("bad negation at {}", self.labels[a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!(
                        "addition not commutative at ({}, {})",
                        self.labels[a], self.labels[b]
                    ));
                }
            }
        }
        let check = |a: usize, b: usize, c: usize| -> std::result::Result<(), String> {
            let name = || {
                format!(
                    "({}, {}, {})",
                    self.labels[a], self.labels[b], self.labels[c]
                )
            };
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(format!("addition not associative at {}", name()));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(format!("multiplication not associative at {}", name()));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(format!("left distributivity fails at {}", name()));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return Err(format!("right distributivity fails at {}", name()));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5249_4e47);
            for _ in 0..SAMPLED_AXIOM_TRIPLES {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn find_identity(table: &[u32], order: usize) -> Option<usize> {
    (0..order).find(|&e| {
        (0..order).all(|a| table[e * order + a] as usize == a && table[a * order + e] as usize == a)
    })
}

/// Breadth-first closure of the principal left ideals under pairwise sums.
/// Every left ideal of a finite ring is a finite sum of principal ones, so
/// adding principal ideals to known ideals reaches all of them.
fn ideal_closure(principal: &[Vec<usize>], add: &[u32], order: usize) -> Vec<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut distinct_principal: Vec<&Vec<usize>> = Vec::new();
    for p in principal {
        if seen.insert(p.clone()) {
            distinct_principal.push(p);
            queue.push_back(p.clone());
        }
    }
    while let Some(ideal) = queue.pop_front() {
        let mut member = vec![false; order];
        for &x in &ideal {
            member[x] = true;
        }
        for p in &distinct_principal {
            if p.iter().all(|&x| member[x]) {
                continue;
            }
            let mut sum = vec![false; order];
            for &a in &ideal {
                for &b in p.iter() {
                    sum[add[a * order + b] as usize] = true;
                }
            }
            let sum: Vec<usize> = (0..order).filter(|&x| sum[x]).collect();
            if seen.insert(sum.clone()) {
                queue.push_back(sum);
            }
        }
    }
    let mut ideals: Vec<Vec<usize>> = seen.into_iter().collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    ideals
}

fn associate_partition(principal: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut by_ideal: HashMap<&[usize], usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (x, ideal) in principal.iter().enumerate() {
        let slot = *by_ideal.entry(ideal.as_slice()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(x);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(spec: &str) -> FiniteRing {
        FiniteRing::parse(spec).unwrap()
    }

    #[test]
    fn z4_basics() {
        let r = ring("Z4");
        assert_eq!(r.order(), 4);
        assert_eq!(r.labels(), ["0", "1", "2", "3"]);
        assert_eq!(r.units(), [1, 3]);
        assert_eq!((r.unit_count(), r.nonzero_nonunit_count()), (2, 1));
        assert_eq!(r.principal_left_ideal(2), [0, 2]);
        assert_eq!(r.principal_left_ideal(1), [0, 1, 2, 3]);
        assert_eq!(r.left_ideals(), [vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(r.associate_classes(), [vec![0], vec![1, 3], vec![2]]);
        let loc = r.locality();
        assert!(loc.is_local);
        assert_eq!(loc.maximal_ideal.as_deref(), Some(&[0, 2][..]));
        assert_eq!(loc.residue_field_order, Some(2));
    }

    #[test]
    fn z6_basics() {
        let r = ring("Z6");
        assert_eq!(r.units(), [1, 5]);
        assert_eq!(r.nonzero_nonunit_count(), 3);
        assert_eq!(r.principal_left_ideal(2), [0, 2, 4]);
        assert_eq!(
            r.left_ideals(),
            [vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
        assert_eq!(
            r.associate_classes(),
            [vec![0], vec![1, 5], vec![2, 4], vec![3]]
        );
        assert!(!r.is_local());
    }

    #[test]
    fn product_z2_z3_is_z6_like() {
        let r = ring("Z2xZ3");
        assert_eq!(r.order(), 6);
        assert_eq!(r.unit_count(), 2);
        assert_eq!(r.label(0), "(0,0)");
        assert_eq!(r.label(5), "(1,2)");
        assert_eq!(r.one(), 4);
        // additive order of (1,1) is 6, so the additive group is cyclic
        let g = r.element("(1,1)").unwrap();
        let mut x = g;
        let mut k = 1;
        while x != r.zero() {
            x = r.add(x, g);
            k += 1;
        }
        assert_eq!(k, 6);
    }

    #[test]
    fn gf4_is_a_field() {
        let r = ring("GF(4)");
        assert_eq!(r.order(), 4);
        assert_eq!(r.unit_count(), 3);
        assert_eq!(r.nonzero_nonunit_count(), 0);
        assert_eq!(r.labels(), ["0", "1", "x", "x+1"]);
        assert_eq!(r.left_ideals(), [vec![0], vec![0, 1, 2, 3]]);
        assert_eq!(r.associate_classes(), [vec![0], vec![1, 2, 3]]);
        // x·x = x+1 under x^2+x+1
        assert_eq!(r.mul(2, 2), 3);
        assert!(r.is_local());
        assert_eq!(r.locality().maximal_ideal_order(), Some(1));
    }

    #[test]
    fn z2xz2_not_local() {
        let r = ring("Z2xZ2");
        assert!(!r.is_local());
        let a = r.element("(0,1)").unwrap();
        let b = r.element("(1,0)").unwrap();
        assert!(!r.is_unit(a) && !r.is_unit(b));
        assert!(r.is_unit(r.add(a, b)));
    }

    #[test]
    fn irreducible_choices() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert!(!is_irreducible(&[1, 0, 1], 2));
    }

    #[test]
    fn quotient_parsing_and_reduction() {
        let spec: RingSpec = "Z4[x]/(x^2-2)".parse().unwrap();
        assert_eq!(spec.to_string(), "Z4[x]/(x^2+2)");
        let r = FiniteRing::build(&spec, 512).unwrap();
        assert_eq!(r.order(), 16);
        let x = r.element("x").unwrap();
        assert_eq!(r.label(r.mul(x, x)), "2");
        assert!(r.is_local());
        assert_eq!(r.locality().maximal_ideal_order(), Some(8));

        let spaced: RingSpec = " Z2 [x] / ( x^3 + x + 1 ) x Z3".parse().unwrap();
        assert_eq!(spaced.to_string(), "Z2[x]/(x^3+x+1)xZ3");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "Z",
            "Z1",
            "GF(6)",
            "Q4",
            "Z4[x]/(2x^2+1)",
            "Z4[x]/(3)",
            "Z4x",
            "z4",
        ] {
            assert!(bad.parse::<RingSpec>().is_err(), "{bad:?} should not parse");
        }
        assert!(matches!(
            FiniteRing::build(&"Z1000".parse().unwrap(), 512),
            Err(Error::OrderCap { .. })
        ));
        assert!(FiniteRing::build(&"Z1000".parse().unwrap(), 1000).is_ok());
    }

    #[test]
    fn from_tables_validates() {
        let r = ring("Z3");
        let ok =
            FiniteRing::from_tables("custom", r.labels().to_vec(), r.add.clone(), r.mul.clone());
        assert!(ok.is_ok());
        let mut broken = r.mul.clone();
        broken[2 * 3 + 2] = 2;
        assert!(
            FiniteRing::from_tables("broken", r.labels().to_vec(), r.add.clone(), broken).is_err()
        );
    }

    #[test]
    fn axioms_hold_for_builtin_rings() {
        for spec in [
            "Z2",
            "Z3",
            "Z4",
            "Z5",
            "Z6",
            "Z7",
            "Z8",
            "Z9",
            "Z10",
            "Z12",
            "Z16",
            "GF(4)",
            "GF(8)",
            "GF(9)",
            "Z2xZ2",
            "Z2xZ4",
            "Z4[x]/(x^2+2)",
            "Z2[x]/(x^2)",
            "Z3xZ3xZ2",
        ] {
            let r = ring(spec);
            r.check_axioms().unwrap_or_else(|e| panic!("{spec}: {e}"));
        }
        ring("GF(256)").check_axioms().unwrap();
    }

    #[test]
    fn structural_invariants() {
        for spec in [
            "Z8",
            "Z12",
            "GF(9)",
            "Z2xZ4",
            "Z4[x]/(x^2+2)",
            "Z2[x]/(x^2)xZ3",
        ] {
            let r = ring(spec);
            assert_eq!(r.unit_count() + r.nonzero_nonunit_count() + 1, r.order());
            assert!(r.units().contains(&r.one()));
            for &a in r.units() {
                for &b in r.units() {
                    assert!(r.is_unit(r.mul(a, b)));
                }
            }
            let ideals = r.left_ideals();
            assert!(ideals.iter().all(|i| r.is_left_ideal(i)));
            assert_eq!(ideals.first().unwrap(), &vec![r.zero()]);
            assert_eq!(ideals.last().unwrap().len(), r.order());
            let set: HashSet<&Vec<usize>> = ideals.iter().collect();
            for a in ideals {
                for b in ideals {
                    let mut sum: Vec<usize> = a
                        .iter()
                        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                        .map(|(x, y)| r.add(x, y))
                        .collect();
                    sum.sort_unstable();
                    sum.dedup();
                    assert!(set.contains(&sum), "{spec}: sum not an ideal in list");
                    let meet: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                    assert!(set.contains(&meet), "{spec}: meet not in list");
                }
            }
            for class in r.associate_classes() {
                for &x in class {
                    assert_eq!(r.principal_left_ideal(x), r.principal_left_ideal(class[0]));
                }
            }
            if r.is_local() {
                let j = r.locality().maximal_ideal.clone().unwrap();
                assert!(r.is_two_sided_ideal(&j));
                assert_eq!(r.order() % j.len(), 0);
                let q = r.order() / j.len();
                assert_eq!(r.locality().residue_field_order, Some(q));
                assert!(prime_power(q as u64).is_some());
            }
        }
    }
}
