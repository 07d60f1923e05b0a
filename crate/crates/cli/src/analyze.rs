//! `ucx analyze`: every per-family statistic in one report.

use std::fmt::Write as _;

use serde::Serialize;
use ucx_core::cube::family_to_function;
use ucx_core::extremal::{nearest_dictator, NearestDictator};
use ucx_core::families::{
    is_simply_rooted, is_union_closed, roots, stats, upper_shadow_deficiency,
};
use ucx_core::influence::profile;
use ucx_core::spectral::transform;
use ucx_core::verify::conjecture2_margin;
use ucx_core::{Dyadic, SetFamily};

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub size: usize,
    pub is_union_closed: bool,
    pub is_simply_rooted: bool,
    pub frequencies: Vec<usize>,
    pub abundant: Vec<usize>,
    pub rare: Vec<usize>,
    pub delta: Dyadic,
    pub mean_coefficient: Dyadic,
    pub level_weights: Vec<Dyadic>,
    pub influence: InfluenceSummary,
    pub unique_root_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_shadow_deficiency: Option<usize>,
    pub nearest_dictator: NearestDictator,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture2: Option<Conjecture2Summary>,
}

#[derive(Debug, Serialize)]
pub struct InfluenceSummary {
    pub total: Dyadic,
    pub positive: Dyadic,
    pub negative: Dyadic,
    pub per_coordinate: Vec<CoordinateInfluence>,
}

#[derive(Debug, Serialize)]
pub struct CoordinateInfluence {
    pub i: usize,
    pub total: Dyadic,
    pub positive: Dyadic,
    pub negative: Dyadic,
}

/// `k` and the derived fields are null when the mean coefficient is positive.
#[derive(Debug, Serialize)]
pub struct Conjecture2Summary {
    pub k: Option<usize>,
    pub bound: Option<Dyadic>,
    pub margin: Option<Dyadic>,
}

pub fn analyze(family: &SetFamily) -> AnalysisReport {
    let n = family.n();
    let f = family_to_function(family);
    let spec = transform(&f);
    let p = profile(&f);
    let s = stats(family);
    let union_closed = is_union_closed(family);
    let simply_rooted = is_simply_rooted(family);

    let per_coordinate = (1..=n)
        .map(|i| CoordinateInfluence {
            i,
            total: p.influence_at(i),
            positive: p.positive_at(i),
            negative: p.negative_at(i),
        })
        .collect();
    let conjecture2 = (simply_rooted && !family.is_empty()).then(|| {
        let c = conjecture2_margin(family).expect("simply-rooted and nonempty");
        Conjecture2Summary {
            k: c.k,
            bound: c.bound,
            margin: c.margin,
        }
    });

    AnalysisReport {
        n,
        size: s.size,
        is_union_closed: union_closed,
        is_simply_rooted: simply_rooted,
        frequencies: s.frequencies,
        abundant: s.abundant,
        rare: s.rare,
        delta: s.delta,
        mean_coefficient: spec.mean(),
        level_weights: spec.level_weights(),
        influence: InfluenceSummary {
            total: p.total(),
            positive: p.positive(),
            negative: p.negative(),
            per_coordinate,
        },
        unique_root_count: roots(family).unique_root_count,
        upper_shadow_deficiency: union_closed.then(|| upper_shadow_deficiency(family)),
        nearest_dictator: nearest_dictator(&f),
        conjecture2,
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        return "-".into();
    }
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn optional<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".into(), |v| v.to_string())
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Two-column text table.
    pub fn table(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("n".into(), self.n.to_string()),
            ("size".into(), self.size.to_string()),
            ("union-closed".into(), self.is_union_closed.to_string()),
            ("simply-rooted".into(), self.is_simply_rooted.to_string()),
            ("frequencies".into(), list(&self.frequencies)),
            ("abundant".into(), list(&self.abundant)),
            ("rare".into(), list(&self.rare)),
            ("delta".into(), self.delta.to_string()),
            ("mean coefficient".into(), self.mean_coefficient.to_string()),
            ("level weights".into(), list(&self.level_weights)),
            ("influence".into(), self.influence.total.to_string()),
            (
                "positive influence".into(),
                self.influence.positive.to_string(),
            ),
            (
                "negative influence".into(),
                self.influence.negative.to_string(),
            ),
        ];
        for c in &self.influence.per_coordinate {
            rows.push((
                format!("  coordinate {}", c.i),
                format!("{} (+{} / -{})", c.total, c.positive, c.negative),
            ));
        }
        rows.push(("unique roots".into(), self.unique_root_count.to_string()));
        rows.push((
            "shadow deficiency".into(),
            optional(self.upper_shadow_deficiency),
        ));
        let d = &self.nearest_dictator;
        rows.push((
            "nearest dictator".into(),
            format!("{}chi{{{}}} at distance {}", d.sign, d.i, d.dist),
        ));
        if let Some(c) = &self.conjecture2 {
            rows.push(("conjecture2 k".into(), optional(c.k)));
            rows.push(("conjecture2 bound".into(), optional(c.bound)));
            rows.push(("conjecture2 margin".into(), optional(c.margin)));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<width$}  {value}");
        }
        out
    }
}
