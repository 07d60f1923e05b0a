//! Predicates and transforms on set families.
//!
//! `[i, A]` denotes the sets `B` with `i ∈ B ⊆ A`. A member `A` is rooted in
//! `i` when `[i, A] ⊆ F`; `F` is simply-rooted when every member has a root.
//! The empty set has no elements and therefore no root, so `∅ ∈ F` makes `F`
//! not simply-rooted.

use serde::Serialize;

use crate::cube::{family_to_function, CubePoint, SetFamily};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::influence::profile;

/// For every point `X`, the union of the members contained in `X`, and
/// whether any member is contained in `X`. Subset-sum DP, `O(n 2^n)`.
fn downward_unions(family: &SetFamily) -> (Vec<u32>, Vec<bool>) {
    let n = family.n();
    let mut unions = vec![0u32; 1 << n];
    let mut any = family.membership();
    for a in family.iter() {
        unions[a.index()] = a.0;
    }
    for i in 0..n {
        let bit = 1usize << i;
        for x in 0..1usize << n {
            if x & bit != 0 {
                unions[x] |= unions[x ^ bit];
                any[x] |= any[x ^ bit];
            }
        }
    }
    (unions, any)
}

/// Closed under pairwise union. The union of the members below `A ∪ B` is
/// `A ∪ B` itself, so it suffices that every such downward union is a member.
pub fn is_union_closed(family: &SetFamily) -> bool {
    let (unions, any) = downward_unions(family);
    (0..unions.len()).all(|x| !any[x] || family.contains(CubePoint(unions[x])))
}

/// Root masks for every point, `roots[A] = {i ∈ A : [i, A] ⊆ F}` (zero for
/// non-members).
///
/// `[i, A] = {A} ∪ ⋃_{j ∈ A, j ≠ i} [i, A \ j]`, so `i` is a root of a member
/// `A` iff it is a root of every `A \ j` with `j ≠ i`.
fn root_masks(family: &SetFamily) -> Vec<u32> {
    let n = family.n();
    let mut roots = vec![0u32; 1 << n];
    // Increasing index order visits every A \ j before A.
    for a in 0..1u32 << n {
        if !family.contains(CubePoint(a)) {
            continue;
        }
        let mut mask = a;
        let mut rest = a;
        while rest != 0 && mask != 0 {
            let j = rest & rest.wrapping_neg();
            rest &= rest - 1;
            mask &= roots[(a ^ j) as usize] | j;
        }
        roots[a as usize] = mask;
    }
    roots
}

pub fn is_simply_rooted(family: &SetFamily) -> bool {
    if family.contains(CubePoint::EMPTY) {
        return false;
    }
    let roots = root_masks(family);
    family.iter().all(|a| roots[a.index()] != 0)
}

pub fn complement(family: &SetFamily) -> SetFamily {
    family.complement()
}

/// Whether `F` is union-closed exactly when its complement is simply-rooted.
/// Holds for every family containing `∅`. A union-closed family without `∅`
/// has the rootless `∅` in its complement, so the check is false there.
pub fn duality_check(family: &SetFamily) -> bool {
    is_union_closed(family) == is_simply_rooted(&family.complement())
}

/// `⋃_{A ∈ F} {A ∪ {i} : i ∉ A}`.
pub fn upper_shadow(family: &SetFamily) -> SetFamily {
    let n = family.n();
    let mut out = SetFamily::empty(n).expect("dimension already validated");
    let full = CubePoint::full(n);
    for a in family.iter() {
        for i in CubePoint(full.0 & !a.0).elements() {
            out.insert(a.with(i));
        }
    }
    out
}

/// `⋃_{A ∈ F} {A \ {i} : i ∈ A}`.
pub fn lower_shadow(family: &SetFamily) -> SetFamily {
    let mut out = SetFamily::empty(family.n()).expect("dimension already validated");
    for a in family.iter() {
        for i in a.elements() {
            out.insert(a.without(i));
        }
    }
    out
}

/// `|∂^+ F \ F|`.
pub fn upper_shadow_deficiency(family: &SetFamily) -> usize {
    upper_shadow(family)
        .difference(family)
        .expect("same dimension")
        .len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    /// `(A, roots(A))` for every member, in increasing mask order.
    pub roots: Vec<(CubePoint, CubePoint)>,
    pub uniquely_rooted: Vec<CubePoint>,
    pub unique_root_count: usize,
}

impl RootReport {
    pub fn roots_of(&self, set: CubePoint) -> Option<CubePoint> {
        self.roots
            .binary_search_by_key(&set, |&(a, _)| a)
            .ok()
            .map(|k| self.roots[k].1)
    }
}

pub fn roots(family: &SetFamily) -> RootReport {
    let masks = root_masks(family);
    let roots: Vec<(CubePoint, CubePoint)> = family
        .iter()
        .map(|a| (a, CubePoint(masks[a.index()])))
        .collect();
    let uniquely_rooted: Vec<CubePoint> = roots
        .iter()
        .filter(|(_, r)| r.len() == 1)
        .map(|&(a, _)| a)
        .collect();
    RootReport {
        unique_root_count: uniquely_rooted.len(),
        roots,
        uniquely_rooted,
    }
}

fn missing_below(family: &SetFamily, a: CubePoint) -> CubePoint {
    CubePoint::from_elements(a.elements().filter(|&i| !family.contains(a.without(i))))
}

/// For a simply-rooted family: `∂^-A \ F` is `{A \ i}` when `A` is rooted
/// only in `i`, and empty otherwise.
pub fn shadow_lemma_check(family: &SetFamily) -> Result<bool> {
    if !is_simply_rooted(family) {
        return Err(Error::Precondition("family is not simply-rooted"));
    }
    let masks = root_masks(family);
    Ok(family.iter().all(|a| {
        let missing = missing_below(family, a);
        let r = CubePoint(masks[a.index()]);
        if r.len() == 1 {
            missing == r
        } else {
            missing.is_empty()
        }
    }))
}

/// `(|∂^+G \ G|, unique_root_count(2^[n] \ G))` for union-closed `G`. The
/// deficiency never exceeds `2^(n-1)`; the two numbers agree when `∅ ∈ G`.
pub fn theorem2_quantities(family: &SetFamily) -> Result<(usize, usize)> {
    if !is_union_closed(family) {
        return Err(Error::Precondition("family is not union-closed"));
    }
    let deficiency = upper_shadow_deficiency(family);
    let unique = roots(&family.complement()).unique_root_count;
    Ok((deficiency, unique))
}

/// For simply-rooted `F` with function `f`: `I^+(f) <= min(1, |F| / 2^(n-1))`
/// and `I^+(f) = unique_root_count / 2^(n-1)`.
pub fn positive_influence_cap_check(family: &SetFamily) -> Result<bool> {
    if !is_simply_rooted(family) {
        return Err(Error::Precondition("family is not simply-rooted"));
    }
    let n = family.n() as u32;
    let positive = profile(&family_to_function(family)).positive();
    let cap = Dyadic::ONE.min(Dyadic::new(family.len() as i128, n - 1));
    let unique = Dyadic::new(roots(family).unique_root_count as i128, n - 1);
    Ok(positive <= cap && positive == unique)
}

/// Every member covers at most one non-member.
pub fn thin_boundary_check(family: &SetFamily) -> bool {
    family.iter().all(|a| missing_below(family, a).len() <= 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub size: usize,
    /// `|F_i|`, index `i - 1`.
    pub frequencies: Vec<usize>,
    /// Elements with `|F_i| >= |F| / 2`.
    pub abundant: Vec<usize>,
    /// Elements with `|F_i| <= |F| / 2`.
    pub rare: Vec<usize>,
    /// `(2^(n-1) - |F|) / 2^n`, so that `|F| = (1/2 - δ) 2^n`.
    pub delta: Dyadic,
}

pub fn stats(family: &SetFamily) -> FamilyStats {
    let n = family.n();
    let mut frequencies = vec![0usize; n];
    for a in family.iter() {
        for i in a.elements() {
            frequencies[i - 1] += 1;
        }
    }
    let size = family.len();
    let abundant = (1..=n)
        .filter(|&i| 2 * frequencies[i - 1] >= size)
        .collect();
    let rare = (1..=n)
        .filter(|&i| 2 * frequencies[i - 1] <= size)
        .collect();
    let delta = Dyadic::new((1i128 << (n - 1)) - size as i128, n as u32);
    FamilyStats {
        size,
        frequencies,
        abundant,
        rare,
        delta,
    }
}
