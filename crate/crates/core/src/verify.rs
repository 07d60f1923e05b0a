//! Exhaustive and randomized property sweeps.
//!
//! Exhaustive sweeps walk every family of subsets of `[n]` (or every function,
//! via the family/function identification) for `n <= 4`. Random sweeps draw
//! one instance per index from a ChaCha stream keyed by `(seed, index)`, so a
//! report depends only on the plan, never on how many workers ran it.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cube::{dimension_cap, family_to_function, CubePoint, SetFamily};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::extremal::{ks_distance, nearest_dictator};
use crate::families::{
    duality_check, is_simply_rooted, is_union_closed, positive_influence_cap_check,
    shadow_lemma_check, stats, theorem2_quantities, thin_boundary_check,
};
use crate::format::write_family;
use crate::influence::{corollary_lower_bound, profile, spectral_influence};
use crate::spectral::transform;

/// Largest `n` for which the whole family space (`2^(2^n)` members) is walked.
pub const EXHAUSTIVE_MAX_N: usize = 4;
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// Smallest union-closed family containing the generators.
pub fn union_closure(generators: &SetFamily) -> SetFamily {
    let mut closure = SetFamily::empty(generators.n()).expect("dimension already validated");
    let mut members: Vec<CubePoint> = Vec::new();
    for g in generators.iter() {
        if closure.contains(g) {
            continue;
        }
        // The current closure is union-closed, so adding g and every g ∪ c
        // keeps it union-closed.
        let before = members.len();
        for k in 0..before {
            let u = CubePoint(members[k].0 | g.0);
            if closure.insert(u) {
                members.push(u);
            }
        }
        if closure.insert(g) {
            members.push(g);
        }
    }
    closure
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyFilter {
    All,
    UnionClosed,
    SimplyRooted,
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionOutOfRange {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::ExhaustiveCapExceeded {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    Ok(())
}

/// Every family over `[n]` passing `filter`, each exactly once, in order of
/// membership bitset.
pub fn enumerate_families(
    n: usize,
    filter: FamilyFilter,
) -> Result<impl Iterator<Item = SetFamily>> {
    check_exhaustive(n)?;
    Ok((0..1u64 << (1 << n))
        .map(move |code| SetFamily::from_code(n, code).expect("n <= 4"))
        .filter(move |f| match filter {
            FamilyFilter::All => true,
            FamilyFilter::UnionClosed => is_union_closed(f),
            FamilyFilter::SimplyRooted => is_simply_rooted(f),
        }))
}

fn random_subset<R: Rng>(n: usize, rng: &mut R) -> CubePoint {
    CubePoint(rng.random_range(0..1u32 << n))
}

fn random_union_closed_with<R: Rng>(n: usize, generator_count: usize, rng: &mut R) -> SetFamily {
    let mut generators = SetFamily::empty(n).expect("dimension already validated");
    for _ in 0..generator_count {
        generators.insert(random_subset(n, rng));
    }
    union_closure(&generators)
}

/// Closure of `generator_count` uniformly drawn subsets of `[n]`.
pub fn random_union_closed(n: usize, generator_count: usize, seed: u64) -> Result<SetFamily> {
    check_cap(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_union_closed_with(n, generator_count, &mut rng))
}

fn check_cap(n: usize) -> Result<()> {
    let cap = dimension_cap();
    if n == 0 || n > cap {
        return Err(Error::DimensionOutOfRange { n, max: cap });
    }
    Ok(())
}

/// Some component of the cube subgraph induced by `vertices` has edges in
/// all `n` directions. Requires `|V| > 2^(n-1)`.
pub fn kotlov_check(vertices: &SetFamily) -> Result<bool> {
    let n = vertices.n();
    if vertices.len() <= 1 << (n - 1) {
        return Err(Error::Precondition("vertex set must exceed half the cube"));
    }
    let mut parent: Vec<usize> = (0..1usize << n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::new();
    for v in vertices.iter() {
        for i in 0..n {
            let u = v.0 | 1 << i;
            if u != v.0 && vertices.contains(CubePoint(u)) {
                edges.push((v.index(), u as usize, i));
                let (a, b) = (find(&mut parent, v.index()), find(&mut parent, u as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut directions = vec![0u32; 1 << n];
    for (v, _, i) in edges {
        let root = find(&mut parent, v);
        directions[root] |= 1 << i;
    }
    let all = CubePoint::full(n).0;
    Ok(directions.contains(&all))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conjecture2Margin {
    /// Largest `k ∈ [0, n-1]` with `f̂(∅) <= -(1 - 2^-k)`.
    pub k: Option<usize>,
    /// `(k+1) 2^-k`.
    pub bound: Option<Dyadic>,
    /// `bound - I^+(f)`; negative would contradict the conjecture.
    pub margin: Option<Dyadic>,
    pub positive_influence: Dyadic,
    pub mean_coefficient: Dyadic,
}

/// `(k+1) 2^-k`.
pub fn conjecture2_bound(k: usize) -> Dyadic {
    Dyadic::new(k as i128 + 1, k as u32)
}

/// `-(1 - 2^-k)`.
pub fn mean_threshold(k: usize) -> Dyadic {
    Dyadic::pow2_neg(k as u32) - Dyadic::ONE
}

pub fn conjecture2_margin(family: &SetFamily) -> Result<Conjecture2Margin> {
    if family.is_empty() {
        return Err(Error::Precondition("family is empty"));
    }
    if !is_simply_rooted(family) {
        return Err(Error::Precondition("family is not simply-rooted"));
    }
    let n = family.n();
    let f = family_to_function(family);
    let mean = transform(&f).mean();
    let positive = profile(&f).positive();
    let k = (0..n).rev().find(|&k| mean <= mean_threshold(k));
    let bound = k.map(conjecture2_bound);
    Ok(Conjecture2Margin {
        k,
        bound,
        margin: bound.map(|b| b - positive),
        positive_influence: positive,
        mean_coefficient: mean,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Duality,
    ShadowLemma,
    Parseval,
    InfluenceIdentity,
    CorollaryLb,
    Theorem2,
    Frankl,
    Conjecture2,
    PartialClaim,
    EdgeIso,
    Kotlov,
    FknZero,
    KsZero,
    PositiveCap,
    ThinBoundary,
}

/// What a sweep instance is, and how random instances are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Any function; uniform random tables.
    Functions,
    /// Any family; uniform random membership.
    Families,
    /// Union-closed families; random closures.
    UnionClosed,
    /// Simply-rooted families; complements of random closures with `∅` added.
    SimplyRooted,
    /// Vertex sets larger than half the cube.
    LargeVertexSets,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::Duality,
        Property::ShadowLemma,
        Property::Parseval,
        Property::InfluenceIdentity,
        Property::CorollaryLb,
        Property::Theorem2,
        Property::Frankl,
        Property::Conjecture2,
        Property::PartialClaim,
        Property::EdgeIso,
        Property::Kotlov,
        Property::FknZero,
        Property::KsZero,
        Property::PositiveCap,
        Property::ThinBoundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Duality => "duality",
            Property::ShadowLemma => "shadow-lemma",
            Property::Parseval => "parseval",
            Property::InfluenceIdentity => "influence-identity",
            Property::CorollaryLb => "corollary-lb",
            Property::Theorem2 => "theorem2",
            Property::Frankl => "frankl",
            Property::Conjecture2 => "conjecture2",
            Property::PartialClaim => "partial-claim",
            Property::EdgeIso => "edge-iso",
            Property::Kotlov => "kotlov",
            Property::FknZero => "fkn-zero",
            Property::KsZero => "ks-zero",
            Property::PositiveCap => "positive-cap",
            Property::ThinBoundary => "thin-boundary",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            Property::Duality => Domain::Families,
            Property::Parseval
            | Property::InfluenceIdentity
            | Property::CorollaryLb
            | Property::EdgeIso
            | Property::FknZero
            | Property::KsZero => Domain::Functions,
            Property::Theorem2 | Property::Frankl => Domain::UnionClosed,
            Property::ShadowLemma
            | Property::Conjecture2
            | Property::PartialClaim
            | Property::PositiveCap
            | Property::ThinBoundary => Domain::SimplyRooted,
            Property::Kotlov => Domain::LargeVertexSets,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepPlan {
    pub property: Property,
    pub n: usize,
    pub mode: SweepMode,
    pub samples: u64,
    pub seed: u64,
    /// Never affects the report, so it is left out of the echo.
    #[serde(skip)]
    pub worker_count: usize,
    pub witness_cap: usize,
}

impl SweepPlan {
    pub fn exhaustive(property: Property, n: usize) -> Self {
        SweepPlan {
            property,
            n,
            mode: SweepMode::Exhaustive,
            samples: 0,
            seed: 0,
            worker_count: 1,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    pub fn random(property: Property, n: usize, samples: u64, seed: u64) -> Self {
        SweepPlan {
            property,
            n,
            mode: SweepMode::Random,
            samples,
            seed,
            worker_count: 1,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_count = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.worker_count == 0 {
            return Err(Error::InvalidPlan("worker_count must be at least 1".into()));
        }
        match self.mode {
            SweepMode::Exhaustive => check_exhaustive(self.n),
            SweepMode::Random => {
                check_cap(self.n)?;
                if self.samples == 0 {
                    return Err(Error::InvalidPlan("random mode needs samples >= 1".into()));
                }
                Ok(())
            }
        }
    }

    pub fn instance_count(&self) -> u64 {
        match self.mode {
            SweepMode::Exhaustive => 1u64 << (1 << self.n),
            SweepMode::Random => self.samples,
        }
    }

    /// The family (or function's `-1` set, or vertex set) for an index.
    pub fn instance(&self, index: u64) -> SetFamily {
        match self.mode {
            SweepMode::Exhaustive => SetFamily::from_code(self.n, index).expect("n <= 4"),
            SweepMode::Random => {
                let mut rng = instance_rng(self.seed, index);
                random_instance(self.property.domain(), self.n, &mut rng)
            }
        }
    }
}

pub(crate) fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random instance for `domain`; closures use between 1 and `2n` generators.
pub fn random_instance<R: Rng>(domain: Domain, n: usize, rng: &mut R) -> SetFamily {
    match domain {
        Domain::Functions | Domain::Families => {
            SetFamily::from_predicate(n, |_| rng.random::<bool>()).expect("dimension validated")
        }
        Domain::UnionClosed => {
            let g = rng.random_range(1..=2 * n);
            random_union_closed_with(n, g, rng)
        }
        Domain::SimplyRooted => {
            let g = rng.random_range(1..=2 * n);
            let mut closed = random_union_closed_with(n, g, rng);
            closed.insert(CubePoint::EMPTY);
            closed.complement()
        }
        Domain::LargeVertexSets => {
            let half = 1usize << (n - 1);
            let mut v = SetFamily::from_predicate(n, |_| rng.random::<bool>())
                .expect("dimension validated");
            if v.len() < half {
                v = v.complement();
            }
            while v.len() <= half {
                v.insert(random_subset(n, rng));
            }
            v
        }
    }
}

/// A counterexample, with the instance serialized in the family file format.
/// Function instances are written as the set where the function is `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance_index: u64,
    pub family: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub plan: SweepPlan,
    pub instances_checked: u64,
    /// Instances satisfying the property's hypothesis.
    pub applicable: u64,
    pub passed: bool,
    pub violation_count: u64,
    pub violations: Vec<Witness>,
    /// Largest tracked quantity (deficiency, `I^+`, ...), when the property has one.
    pub max_quantity: Option<Dyadic>,
    /// Smallest slack between bound and quantity; negative means violation.
    pub min_margin: Option<Dyadic>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_line(&self) -> String {
        format!(
            "checked={} violations={} elapsed_ms={}",
            self.instances_checked,
            self.violation_count,
            self.elapsed.as_millis()
        )
    }
}

#[derive(Debug, Default)]
struct Outcome {
    applicable: bool,
    violation: Option<String>,
    quantity: Option<Dyadic>,
    margin: Option<Dyadic>,
}

impl Outcome {
    fn skip() -> Self {
        Outcome::default()
    }

    fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Self {
        Outcome {
            applicable: true,
            violation: (!ok).then(detail),
            ..Outcome::default()
        }
    }

    fn with(mut self, quantity: Option<Dyadic>, margin: Option<Dyadic>) -> Self {
        self.quantity = quantity;
        self.margin = margin;
        self
    }
}

fn check_instance(property: Property, instance: &SetFamily) -> Result<Outcome> {
    let n = instance.n();
    let as_function = || family_to_function(instance);
    let outcome = match property {
        Property::Duality => Outcome::verdict(duality_check(instance), || {
            format!(
                "union-closed = {}, complement simply-rooted = {}",
                is_union_closed(instance),
                is_simply_rooted(&instance.complement())
            )
        }),
        Property::ShadowLemma => {
            if !is_simply_rooted(instance) {
                return Ok(Outcome::skip());
            }
            Outcome::verdict(shadow_lemma_check(instance)?, || {
                "lower shadow outside the family disagrees with unique roots".into()
            })
        }
        Property::Parseval => {
            let spec = transform(&as_function());
            let sum = spec.parseval_sum();
            let weights: Dyadic = spec.level_weights().into_iter().sum();
            Outcome::verdict(sum == 1i128 << (2 * n) && weights == Dyadic::ONE, || {
                format!("sum of squared coefficients {sum}, weight total {weights}")
            })
        }
        Property::InfluenceIdentity => {
            let f = as_function();
            let spec = transform(&f);
            let p = profile(&f);
            let (lhs, rhs) = (p.total(), spectral_influence(&spec));
            let link = (1..=n).all(|i| {
                spec.raw_at(CubePoint::singleton(i))
                    == 2 * (p.enter_counts()[i - 1] as i64 - p.exit_counts()[i - 1] as i64)
            });
            Outcome::verdict(lhs == rhs && link, || {
                format!("I = {lhs}, sum k W^k = {rhs}, spectral link holds = {link}")
            })
            .with(Some(lhs), None)
        }
        Property::CorollaryLb => {
            let f = as_function();
            let spec = transform(&f);
            let total = profile(&f).total();
            let mut margin: Option<Dyadic> = None;
            for k in 1..=n {
                let slack = total - corollary_lower_bound(&spec, k)?;
                margin = Some(margin.map_or(slack, |m| m.min(slack)));
            }
            let ok = margin.is_none_or(|m| !m.is_negative());
            Outcome::verdict(ok, || {
                format!("I = {total} below the bound by {}", -margin.unwrap())
            })
            .with(Some(total), margin)
        }
        Property::Theorem2 => {
            if !is_union_closed(instance) {
                return Ok(Outcome::skip());
            }
            let (deficiency, unique) = theorem2_quantities(instance)?;
            let cap = 1usize << (n - 1);
            Outcome::verdict(deficiency == unique && deficiency <= cap, || {
                format!("deficiency {deficiency}, complement unique roots {unique}, cap {cap}")
            })
            .with(
                Some(Dyadic::from_int(deficiency as i64)),
                Some(Dyadic::from_int(cap as i64 - deficiency as i64)),
            )
        }
        Property::Frankl => {
            let trivial =
                instance.is_empty() || (instance.len() == 1 && instance.contains(CubePoint::EMPTY));
            if trivial || !is_union_closed(instance) {
                return Ok(Outcome::skip());
            }
            let s = stats(instance);
            let best = s.frequencies.iter().max().copied().unwrap_or(0);
            let slack = 2 * best as i64 - s.size as i64;
            Outcome::verdict(!s.abundant.is_empty(), || {
                format!(
                    "no abundant element; frequencies {:?} of {}",
                    s.frequencies, s.size
                )
            })
            .with(None, Some(Dyadic::from_int(slack)))
        }
        Property::Conjecture2 => {
            if instance.is_empty() || !is_simply_rooted(instance) {
                return Ok(Outcome::skip());
            }
            let c = conjecture2_margin(instance)?;
            let Some(margin) = c.margin else {
                return Ok(Outcome::skip());
            };
            Outcome::verdict(!margin.is_negative(), || {
                format!(
                    "mean {}, k = {}, I+ = {} exceeds bound {}",
                    c.mean_coefficient,
                    c.k.unwrap(),
                    c.positive_influence,
                    c.bound.unwrap()
                )
            })
            .with(Some(c.positive_influence), Some(margin))
        }
        Property::PartialClaim => {
            if !is_simply_rooted(instance) {
                return Ok(Outcome::skip());
            }
            let f = as_function();
            let mean = transform(&f).mean();
            if mean >= -Dyadic::HALF {
                return Ok(Outcome::skip());
            }
            let positive = profile(&f).positive();
            let margin = Dyadic::ONE - positive;
            Outcome::verdict(margin.is_positive(), || {
                format!("mean {mean} < -1/2 but I+ = {positive}")
            })
            .with(Some(positive), Some(margin))
        }
        Property::EdgeIso => {
            let f = as_function();
            let mean = transform(&f).mean();
            let total = profile(&f).total();
            let mut margin: Option<Dyadic> = None;
            for k in 0..n {
                if mean_threshold(k) <= mean && !mean.is_positive() {
                    let slack = total - conjecture2_bound(k);
                    margin = Some(margin.map_or(slack, |m| m.min(slack)));
                }
            }
            if margin.is_none() {
                return Ok(Outcome::skip());
            }
            let ok = margin.is_none_or(|m| !m.is_negative());
            Outcome::verdict(ok, || {
                format!("mean {mean}, I = {total} below the isoperimetric bound")
            })
            .with(Some(total), margin)
        }
        Property::Kotlov => {
            if instance.len() <= 1 << (n - 1) {
                return Ok(Outcome::skip());
            }
            Outcome::verdict(kotlov_check(instance)?, || {
                "no component of the induced subgraph spans all directions".into()
            })
        }
        Property::FknZero => {
            let f = as_function();
            if transform(&f).level_weight(1)? != Dyadic::ONE {
                return Ok(Outcome::skip());
            }
            let d = nearest_dictator(&f);
            Outcome::verdict(d.dist.is_zero(), || {
                format!(
                    "W^1 = 1 but nearest dictator {}chi{{{}}} at {}",
                    d.sign, d.i, d.dist
                )
            })
        }
        Property::KsZero => {
            let f = as_function();
            if n < 2 || transform(&f).level_weight(2)? != Dyadic::ONE {
                return Ok(Outcome::skip());
            }
            let (member, d) = ks_distance(&f)?;
            Outcome::verdict(d.is_zero(), || {
                format!("W^2 = 1 but nearest class member {member} at {d}")
            })
        }
        Property::PositiveCap => {
            if !is_simply_rooted(instance) {
                return Ok(Outcome::skip());
            }
            let positive = profile(&as_function()).positive();
            let cap = Dyadic::ONE.min(Dyadic::new(instance.len() as i128, n as u32 - 1));
            Outcome::verdict(positive_influence_cap_check(instance)?, || {
                format!("I+ = {positive}, cap {cap}")
            })
            .with(Some(positive), Some(cap - positive))
        }
        Property::ThinBoundary => {
            if !is_simply_rooted(instance) {
                return Ok(Outcome::skip());
            }
            Outcome::verdict(thin_boundary_check(instance), || {
                "a member covers two or more non-members".into()
            })
        }
    };
    Ok(outcome)
}

/// Run a sweep. The report (apart from `elapsed`) is a function of the plan
/// alone; instances are merged in index order.
pub fn run_sweep(plan: &SweepPlan) -> Result<VerificationReport> {
    plan.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.worker_count)
        .build()
        .map_err(|e| Error::InvalidPlan(format!("cannot start workers: {e}")))?;
    let count = plan.instance_count();
    let property = plan.property;
    let outcomes: Vec<Result<(Outcome, Option<String>)>> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|index| {
                let instance = plan.instance(index);
                let outcome = check_instance(property, &instance)?;
                let serialized = outcome.violation.as_ref().map(|_| write_family(&instance));
                Ok((outcome, serialized))
            })
            .collect()
    });

    let mut report = VerificationReport {
        plan: plan.clone(),
        instances_checked: count,
        applicable: 0,
        passed: true,
        violation_count: 0,
        violations: Vec::new(),
        max_quantity: None,
        min_margin: None,
        elapsed: Duration::ZERO,
    };
    for (index, result) in outcomes.into_iter().enumerate() {
        let (outcome, serialized) = result?;
        if !outcome.applicable {
            continue;
        }
        report.applicable += 1;
        if let Some(q) = outcome.quantity {
            report.max_quantity = Some(report.max_quantity.map_or(q, |m| m.max(q)));
        }
        if let Some(m) = outcome.margin {
            report.min_margin = Some(report.min_margin.map_or(m, |x| x.min(m)));
        }
        if let Some(detail) = outcome.violation {
            report.violation_count += 1;
            if report.violations.len() < plan.witness_cap {
                report.violations.push(Witness {
                    instance_index: index as u64,
                    family: serialized.expect("serialized with the violation"),
                    detail,
                });
            }
        }
    }
    report.passed = report.violation_count == 0;
    report.elapsed = start.elapsed();
    Ok(report)
}
