//! Directed and total influences.
//!
//! For coordinate `i` the cube splits into `2^(n-1)` pairs `(x, x ⊕ e_i)` with
//! `x_i = 0`. A pair *enters* when `f(x) = +1, f(x ⊕ e_i) = -1` (membership
//! is gained going up) and *exits* in the opposite case. Positive influence
//! counts entering pairs, negative influence counts exiting pairs. With this
//! orientation `f̂({i}) = I_i^+ - I_i^-`, and for a simply-rooted family
//! `I^+` counts the members rooted in exactly one element.

use crate::cube::{BooleanFunction, CubePoint};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::spectral::{transform, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceProfile {
    n: usize,
    enter: Vec<u64>,
    exit: Vec<u64>,
}

pub fn profile(f: &BooleanFunction) -> InfluenceProfile {
    let n = f.n();
    let values = f.values();
    let mut enter = vec![0u64; n];
    let mut exit = vec![0u64; n];
    for i in 0..n {
        let bit = 1usize << i;
        for lower in (0..values.len()).filter(|x| x & bit == 0) {
            match (values[lower], values[lower | bit]) {
                (1, -1) => enter[i] += 1,
                (-1, 1) => exit[i] += 1,
                _ => {}
            }
        }
    }
    InfluenceProfile { n, enter, exit }
}

impl InfluenceProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entering pair counts, index `i - 1` for coordinate `i`.
    pub fn enter_counts(&self) -> &[u64] {
        &self.enter
    }

    pub fn exit_counts(&self) -> &[u64] {
        &self.exit
    }

    pub fn pivotal(&self, element: usize) -> u64 {
        self.enter[element - 1] + self.exit[element - 1]
    }

    fn scaled(&self, count: u64) -> Dyadic {
        Dyadic::new(count as i128, self.n as u32 - 1)
    }

    pub fn positive_at(&self, element: usize) -> Dyadic {
        self.scaled(self.enter[element - 1])
    }

    pub fn negative_at(&self, element: usize) -> Dyadic {
        self.scaled(self.exit[element - 1])
    }

    pub fn influence_at(&self, element: usize) -> Dyadic {
        self.scaled(self.pivotal(element))
    }

    pub fn total_enter(&self) -> u64 {
        self.enter.iter().sum()
    }

    pub fn total_exit(&self) -> u64 {
        self.exit.iter().sum()
    }

    /// `I^+`.
    pub fn positive(&self) -> Dyadic {
        self.scaled(self.total_enter())
    }

    /// `I^-`.
    pub fn negative(&self) -> Dyadic {
        self.scaled(self.total_exit())
    }

    /// `I = I^+ + I^-`.
    pub fn total(&self) -> Dyadic {
        self.scaled(self.total_enter() + self.total_exit())
    }
}

/// `Σ_k k · W^k`.
pub fn spectral_influence(spec: &Spectrum) -> Dyadic {
    spec.level_weights()
        .into_iter()
        .enumerate()
        .map(|(k, w)| Dyadic::from_int(k as i64) * w)
        .sum()
}

/// `(I(f), Σ_k k W^k(f))`, computed independently from pair counts and from
/// the spectrum.
pub fn influence_identity_check(f: &BooleanFunction) -> (Dyadic, Dyadic) {
    (profile(f).total(), spectral_influence(&transform(f)))
}

/// `k - Σ_{i<k} (k - i) W^i`, a lower bound on `I(f)` for `1 <= k <= n`.
pub fn corollary_lower_bound(spec: &Spectrum, k: usize) -> Result<Dyadic> {
    if k == 0 || k > spec.n() {
        return Err(Error::LevelOutOfRange {
            k,
            min: 1,
            n: spec.n(),
        });
    }
    let weights = spec.level_weights();
    let deduction: Dyadic = (0..k)
        .map(|i| Dyadic::from_int((k - i) as i64) * weights[i])
        .sum();
    Ok(Dyadic::from_int(k as i64) - deduction)
}

/// `|f̂(∅)| / 2`: no balanced function is closer to `f` than this.
pub fn balanced_distance_floor(f: &BooleanFunction) -> Dyadic {
    let raw = crate::spectral::raw_coefficient(f, CubePoint::EMPTY);
    Dyadic::new(raw.abs() as i128, f.n() as u32 + 1)
}
