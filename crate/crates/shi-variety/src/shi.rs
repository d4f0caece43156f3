//! Alcove-vector characterization, admissibility, and λ-extraction.
//!
//! An integer tuple k over Φ⁺ is the Shi vector of an alcove exactly when
//! every root triple α, β, α+β ∈ Φ⁺ satisfies
//!
//! ```text
//! ‖α‖²kα + ‖β‖²kβ + 1  ≤  ‖α+β‖²(k_{α+β}+1)  ≤  ‖α‖²kα + ‖β‖²kβ + ‖α‖² + ‖β‖² + ‖α+β‖² − 1
//! ```
//!
//! with squared norms normalized so the short roots have norm 1; the checker
//! divides out the global scale so the verdict cannot depend on how the Gram
//! matrix was normalized. Failures are reported triple by triple.
//!
//! Every alcove vector splits as k_θ = Σᵢ cᵢ k_{αᵢ} + λ_θ with (cᵢ) the
//! coroot coordinates of θ and λ the admitted vector naming the component
//! containing the alcove; `lambda_extract` performs this split and traps any
//! out-of-range remainder as an integrity error.

use num_traits::One;

use crate::linalg::Q;
use crate::rootsys::RootSystem;
use crate::weyl::ShiVector;
use crate::{Error, Result};

/// One failed inequality of the triple system: roots α, β, α+β by canonical
/// index, with the three evaluated sides lower ≤ middle ≤ upper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleViolation {
    pub a: usize,
    pub b: usize,
    pub sum: usize,
    pub lower: i64,
    pub middle: i64,
    pub upper: i64,
}

impl TripleViolation {
    pub fn describe(&self, rs: &RootSystem) -> String {
        format!(
            "triple ({}, {}, {}): need {} <= {} <= {}",
            rs.root_name(self.a),
            rs.root_name(self.b),
            rs.root_name(self.sum),
            self.lower,
            self.middle,
            self.upper
        )
    }
}

/// Admitted vector: an admissible λ that also satisfies the triple system,
/// i.e. the Shi vector of some alcove with zero simple coordinates. Each one
/// names an irreducible component.
///
/// Stored over the full canonical positive-root order; the simple
/// coordinates are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmittedVector {
    lambda: Vec<i64>,
}

impl AdmittedVector {
    /// Wraps raw coordinates without validation. Test scaffolding only:
    /// lets checker tests build deliberately broken posets.
    #[cfg(test)]
    pub(crate) fn from_raw(lambda: Vec<i64>) -> Self {
        AdmittedVector { lambda }
    }

    /// Wraps a full-length vector after verifying it is admitted.
    pub fn from_full(rs: &RootSystem, lambda: Vec<i64>) -> Result<Self> {
        if !is_admitted(rs, &lambda)? {
            return Err(Error::Input(format!("vector {lambda:?} is not admitted")));
        }
        Ok(AdmittedVector { lambda })
    }

    /// Builds from the non-simple coordinates in canonical order; simple
    /// coordinates are zero by definition.
    pub fn from_non_simple(rs: &RootSystem, vals: &[i64]) -> Result<Self> {
        let m = rs.num_positive_roots();
        if vals.len() != m - rs.rank() {
            return Err(Error::Input(format!(
                "expected {} non-simple coordinates, got {}",
                m - rs.rank(),
                vals.len()
            )));
        }
        let mut lambda = vec![0i64; m];
        lambda[rs.rank()..].copy_from_slice(vals);
        Self::from_full(rs, lambda)
    }

    /// Full coordinate vector in canonical positive-root order.
    pub fn coords(&self) -> &[i64] {
        &self.lambda
    }

    pub fn get(&self, idx: usize) -> i64 {
        self.lambda[idx]
    }

    /// Non-simple coordinates in display order (descending dual height).
    pub fn display_coords(&self, rs: &RootSystem) -> Vec<i64> {
        rs.display_order().iter().map(|&i| self.lambda[i]).collect()
    }

    /// Reads the vector back as a Shi vector.
    pub fn as_shi_vector(&self) -> ShiVector {
        self.lambda.clone()
    }
}

fn check_len(rs: &RootSystem, k: &[i64], what: &str) -> Result<()> {
    let m = rs.num_positive_roots();
    if k.len() != m {
        return Err(Error::Input(format!(
            "{what} has {} coordinates, expected one per positive root ({m})",
            k.len()
        )));
    }
    Ok(())
}

/// Squared norms rescaled so the short roots have norm exactly 1.
fn normalized_norms(rs: &RootSystem) -> Vec<i64> {
    let min = (0..rs.num_positive_roots())
        .map(|i| rs.norm_sq(i))
        .min()
        .expect("nonempty root system");
    (0..rs.num_positive_roots())
        .map(|i| {
            let r: Q = rs.norm_sq(i) / min;
            debug_assert!(r.is_integer());
            r.to_integer()
        })
        .collect()
}

/// All canonically-indexed triples (a, b, sum) with a < b and
/// root(a) + root(b) = root(sum).
pub fn root_triples(rs: &RootSystem) -> Vec<(usize, usize, usize)> {
    let m = rs.num_positive_roots();
    let mut triples = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let sum: Vec<i64> = rs
                .root(a)
                .iter()
                .zip(rs.root(b))
                .map(|(&x, &y)| x + y)
                .collect();
            if let Some(s) = rs.index_of(&sum) {
                triples.push((a, b, s));
            }
        }
    }
    triples
}

/// Evaluates the triple system on k and returns every violated triple;
/// an empty list means k is the Shi vector of an alcove.
pub fn alcove_violations(rs: &RootSystem, k: &[i64]) -> Result<Vec<TripleViolation>> {
    check_len(rs, k, "alcove vector candidate")?;
    let norms = normalized_norms(rs);
    let mut violations = Vec::new();
    for (a, b, sum) in root_triples(rs) {
        let base = norms[a] * k[a] + norms[b] * k[b];
        let lower = base + 1;
        let middle = norms[sum] * (k[sum] + 1);
        let upper = base + norms[a] + norms[b] + norms[sum] - 1;
        if !(lower <= middle && middle <= upper) {
            violations.push(TripleViolation {
                a,
                b,
                sum,
                lower,
                middle,
                upper,
            });
        }
    }
    Ok(violations)
}

/// Whether k satisfies the full triple system.
pub fn is_alcove_vector(rs: &RootSystem, k: &[i64]) -> Result<bool> {
    Ok(alcove_violations(rs, k)?.is_empty())
}

/// Whether λ lies in the admissible box: λ_θ ∈ [0, h(θ∨) − 1] for every
/// positive root θ. On simple roots the interval is {0}.
pub fn is_admissible(rs: &RootSystem, lambda: &[i64]) -> Result<bool> {
    check_len(rs, lambda, "admissible vector candidate")?;
    Ok(lambda
        .iter()
        .enumerate()
        .all(|(i, &l)| l >= 0 && l < rs.dual_height(i)))
}

/// Whether λ is admitted: admissible and an alcove vector.
pub fn is_admitted(rs: &RootSystem, lambda: &[i64]) -> Result<bool> {
    Ok(is_admissible(rs, lambda)? && is_alcove_vector(rs, lambda)?)
}

/// Splits an alcove vector as k_θ = Σᵢ cᵢ k_{αᵢ} + λ_θ and returns λ.
///
/// The input must be an alcove vector (rejected as an input error
/// otherwise). A remainder escaping the admissible box would contradict the
/// component decomposition and is trapped as an integrity error.
pub fn lambda_extract(rs: &RootSystem, k: &ShiVector) -> Result<AdmittedVector> {
    let violations = alcove_violations(rs, k)?;
    if !violations.is_empty() {
        return Err(Error::Input(format!(
            "not an alcove vector: {}",
            violations[0].describe(rs)
        )));
    }
    let m = rs.num_positive_roots();
    let mut lambda = Vec::with_capacity(m);
    for theta in 0..m {
        let p: i64 = rs
            .coroot_coords(theta)
            .iter()
            .enumerate()
            .map(|(i, &c)| c * k[i])
            .sum();
        lambda.push(k[theta] - p);
    }
    if !is_admissible(rs, &lambda)? {
        return Err(Error::Integrity(format!(
            "extraction of {k:?} left the admissible box: {lambda:?}"
        )));
    }
    if !is_alcove_vector(rs, &lambda)? {
        return Err(Error::Integrity(format!(
            "extraction of {k:?} produced a non-alcove remainder: {lambda:?}"
        )));
    }
    Ok(AdmittedVector { lambda })
}

/// Admitted vector of the identity component, λ ≡ 0.
pub fn zero_vector(rs: &RootSystem) -> AdmittedVector {
    AdmittedVector {
        lambda: vec![0; rs.num_positive_roots()],
    }
}

/// Top admitted vector (h(θ∨) − 1)_θ, the componentwise maximal admissible
/// vector.
pub fn top_candidate(rs: &RootSystem) -> Vec<i64> {
    (0..rs.num_positive_roots())
        .map(|i| rs.dual_height(i) - 1)
        .collect()
}

/// Verdict-preserving rescale used by the scale-robustness checks: the same
/// system with all squared norms multiplied by `factor`.
pub fn rescaled_system(rs: &RootSystem, factor: i64) -> Result<RootSystem> {
    RootSystem::with_norm_scale(rs.cartan_type(), Q::one() * crate::linalg::q(factor))
}
