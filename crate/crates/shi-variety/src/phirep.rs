//! The Φ⁺-representation: W_a acting by integer affine maps on ℤ^Φ⁺.
//!
//! A reflection s_{α,p} acts on coefficient vectors through the map
//! x ↦ L_α x + v_{p,α}, where L_α is the signed permutation recording how
//! s_α shuffles Φ⁺ ∪ −Φ⁺ and v_{p,α} is an integer offset. Folding these
//! maps over any word for w gives F(w), and the commuting square
//! F(w)(ι(u)) = ι(wu) holds exactly, with ι(u) the Shi vector of u.
//!
//! Conjugating the action by λ-extraction yields the ⋄-action on admitted
//! vectors: w ⋄ λ = lambda_extract(F(w̄)(λ)) with w̄ the finite part of w.
//! Translations act trivially, and the finite Weyl group already acts
//! transitively on the admitted set.

use crate::rootsys::RootSystem;
use crate::shi::{lambda_extract, AdmittedVector};
use crate::weyl::{finite_word, AffineElement, ShiVector};
use crate::{Error, Result};

/// Integer affine map x ↦ Lx + v on ℤ^m, m = |Φ⁺|.
///
/// `linear` is row-major: `linear[j][i]` is the entry in row j, column i,
/// both indexed by the canonical positive-root order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiRepMap {
    linear: Vec<Vec<i64>>,
    offset: Vec<i64>,
}

impl PhiRepMap {
    pub fn identity(m: usize) -> Self {
        let linear = (0..m)
            .map(|j| (0..m).map(|i| i64::from(i == j)).collect())
            .collect();
        PhiRepMap {
            linear,
            offset: vec![0; m],
        }
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    pub fn linear(&self) -> &[Vec<i64>] {
        &self.linear
    }

    pub fn offset(&self) -> &[i64] {
        &self.offset
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.dim());
        self.linear
            .iter()
            .zip(&self.offset)
            .map(|(row, &v)| row.iter().zip(x).map(|(&l, &xi)| l * xi).sum::<i64>() + v)
            .collect()
    }

    /// Composition `self ∘ other` (apply `other` first):
    /// (L₁, v₁)(L₂, v₂) = (L₁L₂, L₁v₂ + v₁).
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.dim();
        assert_eq!(m, other.dim());
        let linear = self
            .linear
            .iter()
            .map(|row| {
                (0..m)
                    .map(|i| (0..m).map(|t| row[t] * other.linear[t][i]).sum())
                    .collect()
            })
            .collect();
        let offset = self.apply(&other.offset);
        PhiRepMap { linear, offset }
    }

    pub fn is_identity(&self) -> bool {
        self == &PhiRepMap::identity(self.dim())
    }
}

/// Signed permutation matrix L_α: entry (j, i) is +1 if s_α(βᵢ) = βⱼ,
/// −1 if s_α(βᵢ) = −βⱼ, 0 otherwise.
pub fn linear_part(rs: &RootSystem, alpha: usize) -> Vec<Vec<i64>> {
    let m = rs.num_positive_roots();
    let mut l = vec![vec![0i64; m]; m];
    for (i, beta) in rs.positive_roots().iter().enumerate() {
        let img = rs.reflect(alpha, beta);
        let (j, positive) = rs.classify(&img).expect("reflection permutes the root set");
        l[j][i] = if positive { 1 } else { -1 };
    }
    l
}

/// Offset vector v_{p,α}: coordinate at γ is −p(α, s_α(γ)∨) when
/// s_α(γ) ∈ Φ⁺ and −1 − p(α, s_α(γ)∨) when s_α(γ) ∈ Φ⁻.
pub fn affine_part(rs: &RootSystem, p: i64, alpha: usize) -> Result<Vec<i64>> {
    let m = rs.num_positive_roots();
    let alpha_vec: Vec<crate::linalg::Q> = rs
        .root(alpha)
        .iter()
        .map(|&c| crate::linalg::q(c))
        .collect();
    let mut v = Vec::with_capacity(m);
    for gamma in 0..m {
        let img = rs.reflect(alpha, rs.root(gamma));
        let (j, positive) = rs.classify(&img).expect("reflection permutes the root set");
        let mut pairing = rs.inner(&alpha_vec, rs.coroot(j));
        if !positive {
            pairing = -pairing;
        }
        if !pairing.is_integer() {
            return Err(Error::Integrity(format!(
                "pairing ({}, s_a(γ)∨) = {pairing} is not an integer",
                rs.root_name(alpha)
            )));
        }
        let q = p * pairing.to_integer();
        v.push(if positive { -q } else { -1 - q });
    }
    Ok(v)
}

/// F(s_{α,p}) as one affine map.
pub fn reflection_map(rs: &RootSystem, alpha: usize, p: i64) -> Result<PhiRepMap> {
    Ok(PhiRepMap {
        linear: linear_part(rs, alpha),
        offset: affine_part(rs, p, alpha)?,
    })
}

/// F(w) for a word over the Coxeter alphabet 0..=rank (0 = s_{θ,1}).
pub fn phi_rep_word(rs: &RootSystem, word: &[usize]) -> Result<PhiRepMap> {
    let mut f = PhiRepMap::identity(rs.num_positive_roots());
    for &a in word {
        let g = if a == 0 {
            reflection_map(rs, rs.highest_short_root(), 1)?
        } else if a <= rs.rank() {
            reflection_map(rs, a - 1, 0)?
        } else {
            return Err(Error::Input(format!(
                "generator index {a} out of range 0..={}",
                rs.rank()
            )));
        };
        f = f.compose(&g);
    }
    Ok(f)
}

/// F(w) for a group element, through any reduced word.
pub fn phi_rep(rs: &RootSystem, w: &AffineElement) -> Result<PhiRepMap> {
    phi_rep_word(rs, &w.word(rs)?)
}

/// The ⋄-action on admitted vectors: w ⋄ λ = lambda_extract(F(w̄)(λ)), w̄
/// the finite part of w. Translations drop out, so the action factors
/// through the finite Weyl group.
pub fn diamond_action(
    rs: &RootSystem,
    w: &AffineElement,
    lambda: &AdmittedVector,
) -> Result<AdmittedVector> {
    let (_, lin) = w.decompose(rs)?;
    let word = finite_word(rs, &lin)?;
    let mut f = PhiRepMap::identity(rs.num_positive_roots());
    for &i in &word {
        f = f.compose(&reflection_map(rs, i, 0)?);
    }
    let image: ShiVector = f.apply(lambda.coords());
    lambda_extract(rs, &image)
}

/// ⋄-action of the finite reflection s_α for any positive root α; simple
/// roots suffice to walk finite-group orbits, non-simple ones label covers.
pub fn diamond_reflection(
    rs: &RootSystem,
    alpha: usize,
    lambda: &AdmittedVector,
) -> Result<AdmittedVector> {
    if alpha >= rs.num_positive_roots() {
        return Err(Error::Input(format!(
            "root index {alpha} out of range 0..{}",
            rs.num_positive_roots()
        )));
    }
    let f = reflection_map(rs, alpha, 0)?;
    lambda_extract(rs, &f.apply(lambda.coords()))
}
