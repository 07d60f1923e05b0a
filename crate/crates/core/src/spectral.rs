//! Exact Fourier spectra.
//!
//! A [`Spectrum`] stores `s(S) = Σ_x f(x) χ_S(x) = 2^n · f̂(S)` as integers,
//! so every identity over it can be checked with zero tolerance.

use crate::cube::{check_element, BooleanFunction, CubePoint, SetFamily};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    n: usize,
    coeffs: Vec<i64>,
}

/// In-place Walsh–Hadamard butterfly, `O(n 2^n)`.
pub fn transform(f: &BooleanFunction) -> Spectrum {
    let mut coeffs: Vec<i64> = f.values().iter().map(|&v| v as i64).collect();
    let len = coeffs.len();
    let mut half = 1;
    while half < len {
        for block in coeffs.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half *= 2;
    }
    Spectrum { n: f.n(), coeffs }
}

/// `2^n f̂(S)` for a single `S`, by direct summation.
pub fn raw_coefficient(f: &BooleanFunction, support: CubePoint) -> i64 {
    f.values()
        .iter()
        .enumerate()
        .map(|(x, &v)| {
            if (x as u32 & support.0).count_ones().is_multiple_of(2) {
                v as i64
            } else {
                -(v as i64)
            }
        })
        .sum()
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The integer table `s`, indexed by subset mask.
    pub fn raw(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn raw_at(&self, support: CubePoint) -> i64 {
        self.coeffs[support.index()]
    }

    /// `f̂(S)`.
    pub fn coefficient(&self, support: CubePoint) -> Dyadic {
        Dyadic::new(self.raw_at(support) as i128, self.n as u32)
    }

    /// `f̂(∅)`.
    pub fn mean(&self) -> Dyadic {
        self.coefficient(CubePoint::EMPTY)
    }

    /// `Σ_S s(S)²`; equals `4^n` for every `±1`-valued function.
    pub fn parseval_sum(&self) -> i128 {
        self.coeffs.iter().map(|&c| c as i128 * c as i128).sum()
    }

    fn level_sum(&self, k: usize) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(s, _)| s.count_ones() as usize == k)
            .map(|(_, &c)| c as i128 * c as i128)
            .sum()
    }

    /// `W^k = Σ_{|S|=k} f̂(S)²`.
    pub fn level_weight(&self, k: usize) -> Result<Dyadic> {
        if k > self.n {
            return Err(Error::LevelOutOfRange {
                k,
                min: 0,
                n: self.n,
            });
        }
        Ok(Dyadic::new(self.level_sum(k), 2 * self.n as u32))
    }

    /// `W^0, …, W^n`, one pass over the table.
    pub fn level_weights(&self) -> Vec<Dyadic> {
        let mut sums = vec![0i128; self.n + 1];
        for (s, &c) in self.coeffs.iter().enumerate() {
            sums[s.count_ones() as usize] += c as i128 * c as i128;
        }
        sums.into_iter()
            .map(|v| Dyadic::new(v, 2 * self.n as u32))
            .collect()
    }
}

/// `(f̂(∅), 1 - 2^(1-n)|f^{-1}(-1)|)`; the two agree for every `f`.
pub fn mean_identity_check(f: &BooleanFunction) -> (Dyadic, Dyadic) {
    let n = f.n() as u32;
    let lhs = Dyadic::new(raw_coefficient(f, CubePoint::EMPTY) as i128, n);
    let rhs = Dyadic::ONE - Dyadic::new(f.minus_count() as i128, n - 1);
    (lhs, rhs)
}

/// `(f̂({i}), 2^(1-n)(2|F_i| - |F|))` for the function of `family`.
///
/// The coefficient is positive exactly when `i` lies in more than half the
/// members.
pub fn first_level_identity(family: &SetFamily, element: usize) -> Result<(Dyadic, Dyadic)> {
    let n = family.n();
    check_element(element, n)?;
    let f = crate::cube::family_to_function(family);
    let coefficient = Dyadic::new(
        raw_coefficient(&f, CubePoint::singleton(element)) as i128,
        n as u32,
    );
    let spread = 2 * family.frequency(element) as i128 - family.len() as i128;
    let frequency_form = Dyadic::new(spread, n as u32 - 1);
    Ok((coefficient, frequency_form))
}
