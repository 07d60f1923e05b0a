//! Named constructions, the signed dictators and the level-2 class `A_n`.
//!
//! `or_family(m)` is `{A : A ∩ [m] ≠ ∅}`. Its function has mean coefficient
//! `-(1 - 2^(1-m))` and `I^+ = I = m · 2^(1-m)`; the conjectured extremal
//! statistics `-(1 - 2^-k)` and `(k+1) 2^-k` are realized by `or_family(k+1)`.

use std::fmt;

use serde::Serialize;

use crate::cube::{
    check_dimension, check_element, family_to_function, function_to_family, BooleanFunction,
    CharacterSpec, CubePoint, SetFamily, Sign,
};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::influence::profile;
use crate::spectral::{transform, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    /// `{A : i ∉ A}`.
    HalfCubeMissing(usize),
    /// `{A : A ∩ [m] ≠ ∅}`.
    OrFamily(usize),
    /// `χ_{i}`, i.e. the family `{A : i ∈ A}`.
    Dictator(usize),
    /// `χ_S`.
    Parity(CubePoint),
    /// `or_family(2)`: `-½ + ½χ_1 + ½χ_2 + ½χ_{12}`.
    ExampleF3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedConstruction {
    pub kind: ConstructionKind,
    pub n: usize,
    pub family: SetFamily,
    pub function: BooleanFunction,
}

pub fn build(kind: ConstructionKind, n: usize) -> Result<NamedConstruction> {
    check_dimension(n)?;
    let family = match kind {
        ConstructionKind::HalfCubeMissing(i) => {
            check_element(i, n)?;
            SetFamily::from_predicate(n, |a| !a.contains(i))?
        }
        ConstructionKind::OrFamily(m) => {
            if m == 0 || m > n {
                return Err(Error::InvalidParameter(format!(
                    "or_family needs 1 <= m <= n, got m = {m}, n = {n}"
                )));
            }
            let prefix = CubePoint::full(m).0;
            SetFamily::from_predicate(n, |a| a.0 & prefix != 0)?
        }
        ConstructionKind::Dictator(i) => {
            check_element(i, n)?;
            function_to_family(&BooleanFunction::character(n, CharacterSpec::dictator(i))?)
        }
        ConstructionKind::Parity(support) => function_to_family(&BooleanFunction::character(
            n,
            CharacterSpec::new(support, Sign::Plus),
        )?),
        ConstructionKind::ExampleF3 => {
            if n < 2 {
                return Err(Error::InvalidParameter("example f3 needs n >= 2".into()));
            }
            SetFamily::from_predicate(n, |a| a.contains(1) || a.contains(2))?
        }
    };
    let function = family_to_function(&family);
    Ok(NamedConstruction {
        kind,
        n,
        family,
        function,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrFamilyStats {
    pub mean_coefficient: Dyadic,
    pub positive_influence: Dyadic,
    pub total_influence: Dyadic,
}

/// Measured statistics of `or_family(m)` in dimension `n`.
pub fn or_family_stats(m: usize, n: usize) -> Result<OrFamilyStats> {
    let c = build(ConstructionKind::OrFamily(m), n)?;
    let p = profile(&c.function);
    Ok(OrFamilyStats {
        mean_coefficient: transform(&c.function).mean(),
        positive_influence: p.positive(),
        total_influence: p.total(),
    })
}

/// `(-(1 - 2^(1-m)), m 2^(1-m), m 2^(1-m))`.
pub fn or_family_closed_form(m: usize) -> OrFamilyStats {
    let m32 = m as u32;
    let mean = -(Dyadic::ONE - Dyadic::pow2_neg(m32 - 1));
    let infl = Dyadic::new(m as i128, m32 - 1);
    OrFamilyStats {
        mean_coefficient: mean,
        positive_influence: infl,
        total_influence: infl,
    }
}

/// A member of `A_n`: `±χ_{ij}` or `±½(χ_{ij} + χ_{jk} + χ_{kl} - χ_{il})`.
/// Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KsMember {
    Pair {
        i: usize,
        j: usize,
        sign: Sign,
    },
    Quad {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        sign: Sign,
    },
}

fn pair(a: usize, b: usize) -> CubePoint {
    CubePoint::from_elements([a, b])
}

impl KsMember {
    pub fn eval(&self, x: CubePoint) -> i8 {
        let chi = |s: CubePoint| -> i8 {
            if (x.0 & s.0).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            }
        };
        match *self {
            KsMember::Pair { i, j, sign } => sign.value() * chi(pair(i, j)),
            KsMember::Quad { i, j, k, l, sign } => {
                let twice = chi(pair(i, j)) + chi(pair(j, k)) + chi(pair(k, l)) - chi(pair(i, l));
                sign.value() * twice / 2
            }
        }
    }

    /// Pointwise evaluation as a table; errors if some value is not `±1`.
    pub fn to_function(&self, n: usize) -> Result<BooleanFunction> {
        check_dimension(n)?;
        BooleanFunction::new(n, (0..1u32 << n).map(|x| self.eval(CubePoint(x))).collect())
    }

    /// `⟨f, g⟩` from the spectrum of `f`.
    pub fn correlation(&self, spec: &Spectrum) -> Dyadic {
        match *self {
            KsMember::Pair { i, j, sign } => sign.apply(spec.coefficient(pair(i, j))),
            KsMember::Quad { i, j, k, l, sign } => {
                let c = |a, b| spec.coefficient(pair(a, b));
                sign.apply((c(i, j) + c(j, k) + c(k, l) - c(i, l)).div_pow2(1))
            }
        }
    }
}

impl fmt::Display for KsMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KsMember::Pair { i, j, sign } => write!(f, "{sign}chi{{{i},{j}}}"),
            KsMember::Quad { i, j, k, l, sign } => write!(
                f,
                "{sign}1/2(chi{{{i},{j}}}+chi{{{j},{k}}}+chi{{{k},{l}}}-chi{{{i},{l}}})"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KsPart {
    Pairs,
    Quads,
    All,
}

/// Members of `A_n`: pairs `i < j` first, then ordered quadruples of distinct
/// indices, each in lexicographic index order with `+` before `-`.
pub fn ks_enumerate(n: usize, part: KsPart) -> Result<impl Iterator<Item = KsMember>> {
    let (want_pairs, want_quads) = match part {
        KsPart::Pairs => (true, false),
        KsPart::Quads => (false, true),
        KsPart::All => (true, n >= 4),
    };
    let needed = if part == KsPart::Quads { 4 } else { 2 };
    if n < needed {
        return Err(Error::InvalidParameter(format!(
            "class part {part:?} needs n >= {needed}, got {n}"
        )));
    }
    let signs = [Sign::Plus, Sign::Minus];
    let pairs = (1..=n)
        .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
        .flat_map(move |(i, j)| {
            signs
                .into_iter()
                .map(move |sign| KsMember::Pair { i, j, sign })
        })
        .filter(move |_| want_pairs);
    let quads = (1..=n)
        .flat_map(move |i| (1..=n).map(move |j| (i, j)))
        .flat_map(move |(i, j)| (1..=n).map(move |k| (i, j, k)))
        .flat_map(move |(i, j, k)| (1..=n).map(move |l| (i, j, k, l)))
        .filter(|&(i, j, k, l)| i != j && i != k && i != l && j != k && j != l && k != l)
        .flat_map(move |(i, j, k, l)| {
            signs
                .into_iter()
                .map(move |sign| KsMember::Quad { i, j, k, l, sign })
        })
        .filter(move |_| want_quads);
    Ok(pairs.chain(quads))
}

/// The member of `A_n` nearest to `f`, with the exact distance. Ties go to
/// the first member in [`ks_enumerate`] order.
pub fn ks_distance(f: &BooleanFunction) -> Result<(KsMember, Dyadic)> {
    let spec = transform(f);
    let mut best: Option<(KsMember, Dyadic)> = None;
    for member in ks_enumerate(f.n(), KsPart::All)? {
        let d = (Dyadic::ONE - member.correlation(&spec)).div_pow2(1);
        if best.is_none_or(|(_, b)| d < b) {
            best = Some((member, d));
        }
    }
    Ok(best.expect("class is nonempty for n >= 2"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NearestDictator {
    pub i: usize,
    pub sign: Sign,
    pub dist: Dyadic,
}

/// Minimizes `dist(f, ±χ_i) = ½(1 ∓ f̂({i}))`; ties go to the smallest `i`,
/// then `+`.
pub fn nearest_dictator(f: &BooleanFunction) -> NearestDictator {
    let spec = transform(f);
    let mut best: Option<NearestDictator> = None;
    for i in 1..=f.n() {
        let c = spec.coefficient(CubePoint::singleton(i));
        for sign in [Sign::Plus, Sign::Minus] {
            let dist = (Dyadic::ONE - sign.apply(c)).div_pow2(1);
            if best.is_none_or(|b| dist < b.dist) {
                best = Some(NearestDictator { i, sign, dist });
            }
        }
    }
    best.expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{is_simply_rooted, is_union_closed};

    #[test]
    fn build_examples() {
        let c = build(ConstructionKind::OrFamily(1), 3).unwrap();
        assert_eq!(
            c.family,
            SetFamily::from_predicate(3, |a| a.contains(1)).unwrap()
        );
        assert_eq!(
            c.function,
            BooleanFunction::character(3, CharacterSpec::dictator(1)).unwrap()
        );
        let c = build(ConstructionKind::OrFamily(2), 2).unwrap();
        assert_eq!(c.function.values(), &[1, -1, -1, -1]);
        assert_eq!(
            c.function,
            build(ConstructionKind::ExampleF3, 2).unwrap().function
        );
        let c = build(ConstructionKind::HalfCubeMissing(1), 3).unwrap();
        assert_eq!(c.family.len(), 4);
        assert!(c.family.iter().all(|a| !a.contains(1)));
        assert!(is_union_closed(&c.family));

        assert!(build(ConstructionKind::OrFamily(4), 3).is_err());
        assert!(build(ConstructionKind::OrFamily(0), 3).is_err());
        assert!(build(ConstructionKind::Dictator(4), 3).is_err());
        assert!(build(ConstructionKind::ExampleF3, 1).is_err());
        assert!(build(ConstructionKind::Parity(CubePoint(8)), 3).is_err());
    }

    #[test]
    fn or_family_is_union_closed_and_simply_rooted() {
        for n in 1..=6 {
            for m in 1..=n {
                let c = build(ConstructionKind::OrFamily(m), n).unwrap();
                assert!(is_union_closed(&c.family));
                assert!(is_simply_rooted(&c.family));
            }
        }
    }

    #[test]
    fn or_family_stats_examples() {
        let s = or_family_stats(1, 3).unwrap();
        assert_eq!(
            (s.mean_coefficient, s.positive_influence, s.total_influence),
            (Dyadic::ZERO, Dyadic::ONE, Dyadic::ONE)
        );
        let s = or_family_stats(2, 2).unwrap();
        assert_eq!(
            (s.mean_coefficient, s.positive_influence, s.total_influence),
            (-Dyadic::HALF, Dyadic::ONE, Dyadic::ONE)
        );
        let s = or_family_stats(3, 3).unwrap();
        let q = Dyadic::new(3, 2);
        assert_eq!(
            (s.mean_coefficient, s.positive_influence, s.total_influence),
            (-q, q, q)
        );
        assert!(or_family_stats(4, 3).is_err());
    }

    #[test]
    fn ks_examples() {
        let chi12 = BooleanFunction::character(
            4,
            CharacterSpec::new(CubePoint::from_elements([1, 2]), Sign::Plus),
        )
        .unwrap();
        assert_eq!(
            ks_distance(&chi12).unwrap(),
            (
                KsMember::Pair {
                    i: 1,
                    j: 2,
                    sign: Sign::Plus
                },
                Dyadic::ZERO
            )
        );
        assert_eq!(
            ks_distance(&chi12.negate()).unwrap(),
            (
                KsMember::Pair {
                    i: 1,
                    j: 2,
                    sign: Sign::Minus
                },
                Dyadic::ZERO
            )
        );
        let q = KsMember::Quad {
            i: 1,
            j: 2,
            k: 3,
            l: 4,
            sign: Sign::Plus,
        };
        assert_eq!(q.eval(CubePoint::EMPTY), 1);
        let g = q.to_function(4).unwrap();
        assert_eq!(ks_distance(&g).unwrap().1, Dyadic::ZERO);

        assert!(ks_enumerate(1, KsPart::Pairs).is_err());
        assert!(ks_enumerate(3, KsPart::Quads).is_err());
        assert_eq!(ks_enumerate(3, KsPart::All).unwrap().count(), 6);
        assert_eq!(ks_enumerate(4, KsPart::Quads).unwrap().count(), 48);
    }

    #[test]
    fn nearest_dictator_examples() {
        let chi1 = BooleanFunction::character(3, CharacterSpec::dictator(1)).unwrap();
        let d = nearest_dictator(&chi1);
        assert_eq!((d.i, d.sign, d.dist), (1, Sign::Plus, Dyadic::ZERO));
        let f3 = build(ConstructionKind::ExampleF3, 2).unwrap().function;
        let d = nearest_dictator(&f3);
        assert_eq!((d.i, d.sign, d.dist), (1, Sign::Plus, Dyadic::new(1, 2)));
        let one = BooleanFunction::constant(3, Sign::Plus).unwrap();
        let d = nearest_dictator(&one);
        assert_eq!((d.i, d.sign, d.dist), (1, Sign::Plus, Dyadic::HALF));
    }
}
