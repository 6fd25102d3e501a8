//! Closed-form spectral and metric quantities of a strongly regular graph.
//!
//! Everything here is exact integer arithmetic with overflow checks. Graphs
//! whose eigenvalues are irrational (conference graphs) are rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("parameters {0} are not a feasible non-complete srg")]
    InvalidParameters(SrgParams),
    #[error("discriminant {discriminant} is not a perfect square (conference graph)")]
    ConferenceCase { discriminant: i64 },
    #[error("multiplicity formula does not yield an integer for {0}")]
    NonIntegralMultiplicity(SrgParams),
    #[error("integer overflow while evaluating the spectrum of {0}")]
    Overflow(SrgParams),
}

/// Parameter set `(v, k, λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "srg({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl SrgParams {
    pub const fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// True for a non-complete, non-empty parameter set satisfying
    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        let SrgParams { v, k, lambda, mu } = *self;
        if k == 0 || k + 1 >= v || lambda >= k || mu > k {
            return false;
        }
        let lhs = k.checked_mul(k - lambda - 1);
        let rhs = (v - k - 1).checked_mul(mu);
        lhs.is_some() && lhs == rhs
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        SrgParams::new(v, v - k - 1, v + mu - 2 * k - 2, v + lambda - 2 * k)
    }
}

/// Integer spectrum of a non-complete srg: eigenvalues `k`, `r` (multiplicity
/// `f`) and `s` (multiplicity `v − 1 − f`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub discriminant: i64,
    pub sqrt_discriminant: i64,
    /// Second-largest eigenvalue.
    pub r: i64,
    /// Smallest eigenvalue.
    pub s: i64,
    /// Multiplicity of `r`.
    pub f: i64,
}

impl Spectrum {
    /// Multiplicity of `s`.
    pub fn g(&self, p: &SrgParams) -> i64 {
        p.v as i64 - 1 - self.f
    }
}

/// The three values taken by `⟨y_i, y_j⟩` for the columns of `A − sI`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramEntries {
    pub diag: i64,
    pub adj: i64,
    pub non: i64,
}

/// Squared distances `‖y_i − y_j‖²` for adjacent and non-adjacent pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceSquares {
    pub adj: i64,
    pub non: i64,
    /// `non − adj`, always `2·√Δ`.
    pub excess: i64,
}

fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Eigenvalues and the multiplicity `f` of the second-largest eigenvalue.
///
/// `f = ½(v − 1 − (2k + (v − 1)(λ − μ)) / √Δ)` with `Δ = (λ − μ)² + 4(k − μ)`,
/// evaluated with exact division.
pub fn spectrum(p: &SrgParams) -> Result<Spectrum, SpectrumError> {
    if !p.is_feasible() {
        return Err(SpectrumError::InvalidParameters(*p));
    }
    let overflow = || SpectrumError::Overflow(*p);
    let to_i64 = |x: u64| i64::try_from(x).map_err(|_| overflow());
    let (v, k, lambda, mu) = (to_i64(p.v)?, to_i64(p.k)?, to_i64(p.lambda)?, to_i64(p.mu)?);

    let diff = lambda - mu;
    let discriminant = diff
        .checked_mul(diff)
        .and_then(|d2| d2.checked_add(4 * (k - mu)))
        .ok_or_else(overflow)?;
    let root = exact_sqrt(discriminant).ok_or(SpectrumError::ConferenceCase { discriminant })?;
    if root == 0 {
        return Err(SpectrumError::InvalidParameters(*p));
    }

    let numerator = (v - 1)
        .checked_mul(diff)
        .and_then(|x| x.checked_add(2 * k))
        .ok_or_else(overflow)?;
    if numerator % root != 0 {
        return Err(SpectrumError::NonIntegralMultiplicity(*p));
    }
    let twice_f = v - 1 - numerator / root;
    if twice_f % 2 != 0 || twice_f <= 0 {
        return Err(SpectrumError::NonIntegralMultiplicity(*p));
    }
    let f = twice_f / 2;

    Ok(Spectrum {
        discriminant,
        sqrt_discriminant: root,
        r: (diff + root) / 2,
        s: (diff - root) / 2,
        f,
    })
}

pub fn gram_entries(p: &SrgParams, sp: &Spectrum) -> GramEntries {
    let (k, lambda, mu) = (p.k as i64, p.lambda as i64, p.mu as i64);
    GramEntries {
        diag: sp.s * sp.s + k,
        adj: lambda - 2 * sp.s,
        non: mu,
    }
}

pub fn distance_squares(p: &SrgParams, sp: &Spectrum) -> DistanceSquares {
    let (k, lambda, mu) = (p.k as i64, p.lambda as i64, p.mu as i64);
    let s = sp.s;
    let adj = 2 * (k - lambda + s * s + 2 * s);
    let non = 2 * (k - mu + s * s);
    DistanceSquares {
        adj,
        non,
        excess: non - adj,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SRG2401: SrgParams = SrgParams::new(2401, 240, 59, 20);
    const PETERSEN: SrgParams = SrgParams::new(10, 3, 0, 1);

    #[test]
    fn srg2401_spectrum() {
        let sp = spectrum(&SRG2401).unwrap();
        assert_eq!(
            sp,
            Spectrum {
                discriminant: 2401,
                sqrt_discriminant: 49,
                r: 44,
                s: -5,
                f: 240
            }
        );
        assert_eq!(gram_entries(&SRG2401, &sp), GramEntries { diag: 265, adj: 69, non: 20 });
        assert_eq!(
            distance_squares(&SRG2401, &sp),
            DistanceSquares { adj: 392, non: 490, excess: 98 }
        );
    }

    #[test]
    fn multiplicities_of_the_large_graphs() {
        assert_eq!(spectrum(&SrgParams::new(416, 100, 36, 20)).unwrap().f, 65);
        assert_eq!(spectrum(&SrgParams::new(31671, 3510, 693, 351)).unwrap().f, 782);
    }

    #[test]
    fn petersen_quantities() {
        let sp = spectrum(&PETERSEN).unwrap();
        assert_eq!((sp.r, sp.s, sp.f), (1, -2, 5));
        assert_eq!(gram_entries(&PETERSEN, &sp), GramEntries { diag: 7, adj: 4, non: 1 });
        assert_eq!(
            distance_squares(&PETERSEN, &sp),
            DistanceSquares { adj: 6, non: 12, excess: 6 }
        );
    }

    #[test]
    fn pentagon_is_a_conference_graph() {
        assert_eq!(
            spectrum(&SrgParams::new(5, 2, 0, 1)),
            Err(SpectrumError::ConferenceCase { discriminant: 5 })
        );
    }

    #[test]
    fn infeasible_parameters_rejected() {
        assert!(matches!(
            spectrum(&SrgParams::new(10, 3, 0, 2)),
            Err(SpectrumError::InvalidParameters(_))
        ));
        // complete graph
        assert!(spectrum(&SrgParams::new(4, 3, 2, 0)).is_err());
        // passes the counting identity, square discriminant, odd 2f
        assert_eq!(
            spectrum(&SrgParams::new(5, 3, 1, 3)),
            Err(SpectrumError::NonIntegralMultiplicity(SrgParams::new(5, 3, 1, 3)))
        );
    }

    #[test]
    fn complement_parameters() {
        assert_eq!(PETERSEN.complement(), SrgParams::new(10, 6, 3, 4));
        assert_eq!(PETERSEN.complement().complement(), PETERSEN);
    }

    #[test]
    fn exact_sqrt_boundaries() {
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(2401), Some(49));
        assert_eq!(exact_sqrt(2400), None);
        assert_eq!(exact_sqrt(-1), None);
    }
}
