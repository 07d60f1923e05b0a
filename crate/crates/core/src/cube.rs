//! Points of `{0,1}^n`, Boolean functions, set families and characters.
//!
//! Point encoding: bit `i - 1` of a point's index is `x_i`, so element `i`
//! of `[n]` belongs to the subset encoded by the point iff that bit is set.
//! Elements are always 1-based at the API surface.
//!
//! Sign convention: a family `F` corresponds to the function that is `-1`
//! exactly on the members of `F`. Under this convention the mean coefficient
//! is `1 - 2^(1-n)|F|`.

use std::fmt;

use serde::Serialize;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// Largest dimension any table in this crate may have.
pub const HARD_MAX_DIMENSION: usize = 24;

/// Default dimension cap; `UCX_MAX_N` may raise it up to [`HARD_MAX_DIMENSION`].
pub const DEFAULT_MAX_DIMENSION: usize = 20;

/// The configured dimension cap: `UCX_MAX_N` if set and valid, else 20.
pub fn dimension_cap() -> usize {
    std::env::var("UCX_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .map(|v| v.min(HARD_MAX_DIMENSION))
        .unwrap_or(DEFAULT_MAX_DIMENSION)
}

pub(crate) fn check_dimension(n: usize) -> Result<()> {
    if n == 0 || n > HARD_MAX_DIMENSION {
        return Err(Error::DimensionOutOfRange {
            n,
            max: HARD_MAX_DIMENSION,
        });
    }
    Ok(())
}

pub(crate) fn check_element(element: usize, n: usize) -> Result<()> {
    if element == 0 || element > n {
        return Err(Error::ElementOutOfRange { element, n });
    }
    Ok(())
}

/// A point of the cube, equivalently a subset of `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct CubePoint(pub u32);

impl CubePoint {
    pub const EMPTY: CubePoint = CubePoint(0);

    /// The subset containing the given 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        CubePoint(
            elements
                .into_iter()
                .fold(0u32, |acc, e| acc | (1u32 << (e - 1))),
        )
    }

    /// `[n]` itself.
    pub fn full(n: usize) -> Self {
        CubePoint(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(element: usize) -> Self {
        CubePoint(1 << (element - 1))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> (element - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, element: usize) -> Self {
        CubePoint(self.0 | 1 << (element - 1))
    }

    pub fn without(self, element: usize) -> Self {
        CubePoint(self.0 & !(1 << (element - 1)))
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(e)
        })
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, d: Dyadic) -> Dyadic {
        match self {
            Sign::Plus => d,
            Sign::Minus => -d,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

/// `sign · χ_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterSpec {
    pub support: CubePoint,
    pub sign: Sign,
}

impl CharacterSpec {
    pub fn new(support: CubePoint, sign: Sign) -> Self {
        CharacterSpec { support, sign }
    }

    pub fn dictator(element: usize) -> Self {
        CharacterSpec::new(CubePoint::singleton(element), Sign::Plus)
    }

    pub fn negated(self) -> Self {
        CharacterSpec::new(self.support, self.sign.flip())
    }
}

/// `sign · (-1)^{|x ∩ S|}`.
pub fn eval_character(spec: CharacterSpec, x: CubePoint) -> i8 {
    let parity = if (x.0 & spec.support.0).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    };
    parity * spec.sign.value()
}

/// A `±1`-valued table over all `2^n` cube points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    values: Vec<i8>,
}

impl BooleanFunction {
    pub fn new(n: usize, values: Vec<i8>) -> Result<Self> {
        check_dimension(n)?;
        if values.len() != 1 << n {
            return Err(Error::TableLength {
                expected: 1 << n,
                found: values.len(),
            });
        }
        if let Some((index, &v)) = values.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(Error::NotSign {
                index,
                value: v as i64,
            });
        }
        Ok(BooleanFunction { n, values })
    }

    /// Build from a predicate that says where the function is `-1`.
    pub fn from_minus_set<P: FnMut(CubePoint) -> bool>(n: usize, mut minus: P) -> Result<Self> {
        check_dimension(n)?;
        let values = (0..1u32 << n)
            .map(|p| if minus(CubePoint(p)) { -1 } else { 1 })
            .collect();
        Ok(BooleanFunction { n, values })
    }

    pub fn constant(n: usize, value: Sign) -> Result<Self> {
        Self::from_minus_set(n, |_| value == Sign::Minus)
    }

    pub fn character(n: usize, spec: CharacterSpec) -> Result<Self> {
        check_dimension(n)?;
        if spec.support.index() >= 1 << n {
            return Err(Error::InvalidParameter(format!(
                "character support {} outside [{n}]",
                spec.support
            )));
        }
        Self::from_minus_set(n, |x| eval_character(spec, x) == -1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn value(&self, x: CubePoint) -> i8 {
        self.values[x.index()]
    }

    /// `|f^{-1}(-1)|`.
    pub fn minus_count(&self) -> usize {
        self.values.iter().filter(|&&v| v == -1).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.minus_count() == self.values.len()
    }

    pub fn negate(&self) -> Self {
        BooleanFunction {
            n: self.n,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// Membership bitset over the `2^n` subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    words: Vec<u64>,
    size: usize,
}

impl SetFamily {
    pub fn empty(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(SetFamily {
            n,
            words: vec![0; Self::word_count(n)],
            size: 0,
        })
    }

    /// All of `2^[n]`.
    pub fn full(n: usize) -> Result<Self> {
        let mut family = Self::empty(n)?;
        let points = 1usize << n;
        for (w, word) in family.words.iter_mut().enumerate() {
            let bits = (points - 64 * w).min(64);
            *word = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        family.size = points;
        Ok(family)
    }

    pub fn from_predicate<P: FnMut(CubePoint) -> bool>(n: usize, mut keep: P) -> Result<Self> {
        let mut family = Self::empty(n)?;
        for p in 0..1u32 << n {
            if keep(CubePoint(p)) {
                family.insert(CubePoint(p));
            }
        }
        Ok(family)
    }

    /// Duplicates are ignored; every set must lie inside `[n]`.
    pub fn from_sets<I: IntoIterator<Item = CubePoint>>(n: usize, sets: I) -> Result<Self> {
        let mut family = Self::empty(n)?;
        for set in sets {
            if set.index() >= 1 << n {
                let element = 32 - set.0.leading_zeros() as usize;
                return Err(Error::ElementOutOfRange { element, n });
            }
            family.insert(set);
        }
        Ok(family)
    }

    /// The family whose membership bitset is `code`; needs `n <= 6`.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::DimensionOutOfRange { n, max: 6 });
        }
        let mask = if n == 6 {
            u64::MAX
        } else {
            (1u64 << (1 << n)) - 1
        };
        let word = code & mask;
        Ok(SetFamily {
            n,
            words: vec![word],
            size: word.count_ones() as usize,
        })
    }

    fn word_count(n: usize) -> usize {
        (1usize << n).div_ceil(64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, set: CubePoint) -> bool {
        let i = set.index();
        i < 1 << self.n && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns whether the set was newly added.
    pub fn insert(&mut self, set: CubePoint) -> bool {
        let i = set.index();
        let bit = 1u64 << (i % 64);
        let word = &mut self.words[i / 64];
        if *word & bit != 0 {
            return false;
        }
        *word |= bit;
        self.size += 1;
        true
    }

    pub fn remove(&mut self, set: CubePoint) -> bool {
        let i = set.index();
        let bit = 1u64 << (i % 64);
        let word = &mut self.words[i / 64];
        if *word & bit == 0 {
            return false;
        }
        *word &= !bit;
        self.size -= 1;
        true
    }

    /// Members in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = CubePoint> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(CubePoint(w as u32 * 64 + b))
            })
        })
    }

    /// `2^[n] \ F`.
    pub fn complement(&self) -> SetFamily {
        let mut out = SetFamily::full(self.n).expect("dimension already validated");
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out.size = (1 << self.n) - self.size;
        out
    }

    pub fn difference(&self, other: &SetFamily) -> Result<SetFamily> {
        same_dimension(self.n, other.n)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        Ok(SetFamily {
            n: self.n,
            words,
            size,
        })
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// `|F_i|`, the number of members containing `element`.
    pub fn frequency(&self, element: usize) -> usize {
        self.iter().filter(|a| a.contains(element)).count()
    }

    /// Membership as a dense boolean table indexed by point.
    pub fn membership(&self) -> Vec<bool> {
        (0..1u32 << self.n)
            .map(|p| self.contains(CubePoint(p)))
            .collect()
    }
}

pub(crate) fn same_dimension(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// `f(x) = -1` iff `x ∈ F`.
pub fn family_to_function(family: &SetFamily) -> BooleanFunction {
    BooleanFunction::from_minus_set(family.n(), |x| family.contains(x))
        .expect("dimension already validated")
}

/// The members are the points where `f = -1`.
pub fn function_to_family(f: &BooleanFunction) -> SetFamily {
    SetFamily::from_predicate(f.n(), |x| f.value(x) == -1).expect("dimension already validated")
}

/// `E_x f(x) g(x)` for an integer-valued table `g`, as an exact value with
/// denominator `2^n`.
pub fn inner_product(f: &BooleanFunction, g: &[i64]) -> Result<Dyadic> {
    if g.len() != f.values().len() {
        return Err(Error::TableLength {
            expected: f.values().len(),
            found: g.len(),
        });
    }
    let sum: i128 = f
        .values()
        .iter()
        .zip(g)
        .map(|(&a, &b)| a as i128 * b as i128)
        .sum();
    Ok(Dyadic::new(sum, f.n() as u32))
}

/// `⟨f, g⟩` for two `±1`-valued functions.
pub fn correlation(f: &BooleanFunction, g: &BooleanFunction) -> Result<Dyadic> {
    same_dimension(f.n(), g.n())?;
    let agree = f
        .values()
        .iter()
        .zip(g.values())
        .filter(|(a, b)| a == b)
        .count() as i128;
    let total = 1i128 << f.n();
    Ok(Dyadic::new(2 * agree - total, f.n() as u32))
}

/// `½(1 - ⟨f, g⟩)`: the fraction of points where `f` and `g` differ.
pub fn dist(f: &BooleanFunction, g: &BooleanFunction) -> Result<Dyadic> {
    Ok((Dyadic::ONE - correlation(f, g)?).div_pow2(1))
}

pub fn dist_to_character(f: &BooleanFunction, spec: CharacterSpec) -> Result<Dyadic> {
    let g = BooleanFunction::character(f.n(), spec)?;
    dist(f, &g)
}
