//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here works straight from the definitions, in exact rationals,
//! with no shared code paths beyond the basic containers.

#![allow(dead_code)]

use num_rational::Ratio;
use rand::Rng;
use ucx_core::{BooleanFunction, CubePoint, Dyadic, SetFamily};

pub type Q = Ratio<i128>;

pub fn q(d: Dyadic) -> Q {
    Q::new(d.numerator(), d.denominator())
}

pub fn frac(num: i128, den: i128) -> Q {
    Q::new(num, den)
}

pub fn points(n: usize) -> impl Iterator<Item = u32> {
    0..1u32 << n
}

fn chi(support: u32, x: u32) -> i64 {
    if (support & x).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `f̂(S)` for every `S` by the defining sum, `O(4^n)`.
pub fn naive_coefficients(f: &BooleanFunction) -> Vec<Q> {
    let n = f.n();
    let size = 1i128 << n;
    points(n)
        .map(|s| {
            let total: i64 = points(n)
                .map(|x| f.values()[x as usize] as i64 * chi(s, x))
                .sum();
            Q::new(total as i128, size)
        })
        .collect()
}

pub fn naive_level_weights(f: &BooleanFunction) -> Vec<Q> {
    let coeffs = naive_coefficients(f);
    let mut weights = vec![Q::from_integer(0); f.n() + 1];
    for (s, c) in coeffs.iter().enumerate() {
        weights[s.count_ones() as usize] += c * c;
    }
    weights
}

/// `(I^+, I^-)` by scanning every point and every coordinate it contains:
/// the edge `(x \ i, x)` enters when `f(x \ i) = +1` and `f(x) = -1`.
pub fn naive_directed_influence(f: &BooleanFunction) -> (Q, Q) {
    let n = f.n();
    let (mut up, mut down) = (0i128, 0i128);
    for x in points(n) {
        for i in 0..n {
            let bit = 1u32 << i;
            if x & bit == 0 {
                continue;
            }
            let lower = f.values()[(x ^ bit) as usize];
            let upper = f.values()[x as usize];
            if lower == 1 && upper == -1 {
                up += 1;
            } else if lower == -1 && upper == 1 {
                down += 1;
            }
        }
    }
    let scale = 1i128 << (n - 1);
    (Q::new(up, scale), Q::new(down, scale))
}

pub fn naive_union_closed(family: &SetFamily) -> bool {
    let members: Vec<CubePoint> = family.iter().collect();
    members.iter().all(|a| {
        members
            .iter()
            .all(|b| family.contains(CubePoint(a.0 | b.0)))
    })
}

/// Elements `i ∈ A` such that every `B` with `i ∈ B ⊆ A` is a member.
pub fn naive_roots(family: &SetFamily, a: CubePoint) -> u32 {
    let mut roots = 0;
    for i in a.elements() {
        let bit = 1u32 << (i - 1);
        let rest = a.0 & !bit;
        let mut sub = rest;
        let mut ok = true;
        loop {
            if !family.contains(CubePoint(sub | bit)) {
                ok = false;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        if ok {
            roots |= bit;
        }
    }
    roots
}

pub fn naive_simply_rooted(family: &SetFamily) -> bool {
    family.iter().all(|a| naive_roots(family, a) != 0)
}

pub fn naive_unique_root_count(family: &SetFamily) -> usize {
    family
        .iter()
        .filter(|&a| naive_roots(family, a).count_ones() == 1)
        .count()
}

/// Smallest union-closed superfamily, by repeated pairwise unions.
pub fn naive_closure(generators: &SetFamily) -> SetFamily {
    let mut current = generators.clone();
    loop {
        let members: Vec<CubePoint> = current.iter().collect();
        let mut grew = false;
        for a in &members {
            for b in &members {
                grew |= current.insert(CubePoint(a.0 | b.0));
            }
        }
        if !grew {
            return current;
        }
    }
}

/// `|{B ∉ F : B = A ∪ {i} for some member A}|`.
pub fn naive_deficiency(family: &SetFamily) -> usize {
    let n = family.n();
    points(n)
        .filter(|&b| !family.contains(CubePoint(b)))
        .filter(|&b| (0..n).any(|i| b & (1 << i) != 0 && family.contains(CubePoint(b ^ (1 << i)))))
        .count()
}

pub fn random_function<R: Rng>(n: usize, rng: &mut R) -> BooleanFunction {
    let values = points(n)
        .map(|_| if rng.random::<bool>() { 1 } else { -1 })
        .collect();
    BooleanFunction::new(n, values).unwrap()
}

pub fn random_family<R: Rng>(n: usize, rng: &mut R) -> SetFamily {
    SetFamily::from_predicate(n, |_| rng.random::<bool>()).unwrap()
}

/// A uniformly shuffled balanced function.
pub fn random_balanced<R: Rng>(n: usize, rng: &mut R) -> BooleanFunction {
    use rand::seq::SliceRandom;
    let half = 1usize << (n - 1);
    let mut values: Vec<i8> = (0..2 * half)
        .map(|k| if k < half { 1 } else { -1 })
        .collect();
    values.shuffle(rng);
    BooleanFunction::new(n, values).unwrap()
}

pub fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    (0..1u64 << (1 << n)).map(move |code| {
        let family = SetFamily::from_code(n, code).unwrap();
        ucx_core::cube::family_to_function(&family)
    })
}

pub fn all_families(n: usize) -> impl Iterator<Item = SetFamily> {
    (0..1u64 << (1 << n)).map(move |code| SetFamily::from_code(n, code).unwrap())
}
