//! Irreducible crystallographic root systems with exact rational Gram data.
//!
//! Roots live in the simple-root basis: a root is an integer coordinate
//! vector (c₁, …, cₙ) meaning c₁α₁ + ⋯ + cₙαₙ, and all inner products go
//! through an explicit Gram matrix. Short roots are normalized to squared
//! norm 1 (long roots get 2, or 3 in G₂), so every pairing ⟨β, α∨⟩ is an
//! exact small rational and the crystallographic integrality conditions can
//! be asserted rather than assumed.
//!
//! Positive roots are generated bottom-up by root addition: a candidate
//! β + αᵢ is accepted exactly when the αᵢ-string through β extends upward,
//! which only needs the Cartan pairing and the already-known lower levels.
//! The canonical order — ascending height, then descending lexicographic on
//! coordinates — fixes every downstream matrix and vector layout.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{q, qdiv, QMat, Q};
use crate::{Error, Result};

/// Cartan type label: a letter in A–G plus the rank.
///
/// Construction canonicalizes the isomorphic low-rank coincidences
/// (B₁ ≅ C₁ ≅ A₁, C₂ ≅ B₂, D₃ ≅ A₃) so that equal types compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    letter: char,
    rank: usize,
}

impl CartanType {
    /// Validates and canonicalizes a (letter, rank) pair.
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = letter.to_ascii_uppercase();
        let invalid = |reason: &str| Error::InvalidType {
            letter,
            rank,
            reason: reason.to_string(),
        };
        if rank == 0 {
            return Err(invalid("rank must be positive"));
        }
        let canonical = match (letter, rank) {
            ('A', _) => CartanType { letter: 'A', rank },
            ('B', 1) | ('C', 1) => CartanType {
                letter: 'A',
                rank: 1,
            },
            ('B', _) => CartanType { letter: 'B', rank },
            ('C', 2) => CartanType {
                letter: 'B',
                rank: 2,
            },
            ('C', _) => CartanType { letter: 'C', rank },
            ('D', 3) => CartanType {
                letter: 'A',
                rank: 3,
            },
            ('D', r) if r >= 4 => CartanType { letter: 'D', rank },
            ('D', _) => return Err(invalid("type D needs rank at least 3")),
            ('E', 6..=8) => CartanType { letter: 'E', rank },
            ('E', _) => return Err(invalid("type E exists only in ranks 6, 7, 8")),
            ('F', 4) => CartanType {
                letter: 'F',
                rank: 4,
            },
            ('F', _) => return Err(invalid("type F exists only in rank 4")),
            ('G', 2) => CartanType {
                letter: 'G',
                rank: 2,
            },
            ('G', _) => return Err(invalid("type G exists only in rank 2")),
            _ => return Err(invalid("unknown type letter (expected A-G)")),
        };
        Ok(canonical)
    }

    /// Parses labels like "B3" or "b 3".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Input("empty type label".into()))?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("cannot parse rank in type label {s:?}")))?;
        Self::new(letter, rank)
    }

    pub fn letter(&self) -> char {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Classical positive-root count m for this type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            'E' => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            'F' => 24,
            _ => 6, // G2
        }
    }

    /// Order of the finite Weyl group W.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u32;
        let fact = |k: u32| (1..=k as u64).product::<u64>();
        match self.letter {
            'A' => fact(n + 1),
            'B' | 'C' => 2u64.pow(n) * fact(n),
            'D' => 2u64.pow(n - 1) * fact(n),
            'E' => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1_152,
            _ => 12, // G2
        }
    }

    /// Index of the root lattice inside the weight lattice.
    pub fn weight_lattice_index(&self) -> u64 {
        match self.letter {
            'A' => self.rank as u64 + 1,
            'B' | 'C' => 2,
            'D' => 4,
            'E' => match self.rank {
                6 => 3,
                7 => 2,
                _ => 1,
            },
            _ => 1, // F4, G2
        }
    }

    /// Squared norms of the simple roots, short normalized to 1.
    fn simple_norms(&self) -> Vec<i64> {
        let n = self.rank;
        match self.letter {
            'B' => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            'C' => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            'F' => vec![2, 2, 1, 1],
            'G' => vec![1, 3],
            _ => vec![1; n],
        }
    }

    /// Cartan matrix C with C[i][j] = ⟨αⱼ, αᵢ∨⟩ (Bourbaki numbering).
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match self.letter {
            'A' => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            'B' => {
                for i in 0..n.saturating_sub(2) {
                    bond(i, i + 1, -1, -1);
                }
                // last bond is double; α_n is the short root
                bond(n - 2, n - 1, -1, -2);
            }
            'C' => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 2, n - 1, -2, -1);
            }
            'D' => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(n - 3, n - 1, -1, -1);
            }
            'E' => {
                // chain 1-3-4-5-..., node 2 hangs off node 4
                let chain: Vec<usize> = std::iter::once(0).chain(2..n).collect();
                for w in chain.windows(2) {
                    bond(w[0], w[1], -1, -1);
                }
                bond(1, 3, -1, -1);
            }
            'F' => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            _ => {
                // G2: α1 short, α2 long
                bond(0, 1, -3, -1);
            }
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Full combinatorial datum of an irreducible crystallographic root system.
///
/// Immutable after construction; all accessors are cheap reads, so sharing a
/// `RootSystem` across threads is safe.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: QMat,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    heights: Vec<i64>,
    norms_sq: Vec<Q>,
    coroots: Vec<Vec<Q>>,
    coroot_coords: Vec<Vec<i64>>,
    dual_heights: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    inv_cartan: QMat,
    fundamental_weights: Vec<Vec<Q>>,
    highest_short_root: usize,
    max_dual_height: i64,
}

/// Builds the root system of the given type and rank.
pub fn build_root_system(letter: char, rank: usize) -> Result<RootSystem> {
    RootSystem::with_norm_scale(CartanType::new(letter, rank)?, Q::one())
}

impl RootSystem {
    /// Builds the root system for an already-validated type.
    pub fn new(ty: CartanType) -> Result<Self> {
        Self::with_norm_scale(ty, Q::one())
    }

    /// Same system with every squared norm multiplied by `scale`.
    ///
    /// Only the Gram matrix, norms, coroots and fundamental weights change;
    /// all integral data (roots, Cartan matrix, coroot coordinates, dual
    /// heights) is scale-invariant. Used to check that verdicts that should
    /// not depend on the normalization really do not.
    pub fn with_norm_scale(ty: CartanType, scale: Q) -> Result<Self> {
        assert!(scale > Q::zero(), "norm scale must be positive");
        let n = ty.rank();
        let cartan = ty.cartan_matrix();
        let d = ty.simple_norms();
        // symmetry of the Gram matrix forces d_i C[i][j] == d_j C[j][i]
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(d[i] * cartan[i][j], d[j] * cartan[j][i]);
            }
        }
        let gram = QMat::from_fn(n, n, |i, j| qdiv(cartan[i][j] * d[i], 2) * scale);

        let positive_roots = generate_positive_roots(n, &cartan);
        let m = positive_roots.len();
        let mut root_index = HashMap::with_capacity(m);
        for (idx, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.clone(), idx);
        }
        let heights: Vec<i64> = positive_roots.iter().map(|r| r.iter().sum()).collect();

        let inner = |x: &[i64], y: &[i64]| -> Q {
            let mut acc = Q::zero();
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    if y[j] != 0 {
                        acc += q(x[i] * y[j]) * gram[(i, j)];
                    }
                }
            }
            acc
        };

        let norms_sq: Vec<Q> = positive_roots.iter().map(|r| inner(r, r)).collect();
        let mut coroots = Vec::with_capacity(m);
        let mut coroot_coords = Vec::with_capacity(m);
        let mut dual_heights = Vec::with_capacity(m);
        for (r, nsq) in positive_roots.iter().zip(&norms_sq) {
            let factor = q(2) / *nsq;
            coroots.push(r.iter().map(|&a| q(a) * factor).collect::<Vec<Q>>());
            // θ∨ = Σ aᵢ (dᵢ/‖θ‖²) αᵢ∨ — these must be nonnegative integers
            let coords: Vec<i64> = r
                .iter()
                .enumerate()
                .map(|(i, &a)| {
                    let c = q(a * d[i]) * scale / *nsq;
                    if !c.is_integer() || c < Q::zero() {
                        panic!("coroot coordinate of {r:?} is not a nonnegative integer");
                    }
                    c.to_integer()
                })
                .collect();
            dual_heights.push(coords.iter().sum());
            coroot_coords.push(coords);
        }

        let inv_cartan = QMat::from_fn(n, n, |i, j| q(cartan[i][j]))
            .inverse()
            .ok_or_else(|| Error::Integrity(format!("Cartan matrix of {ty} is singular")))?;
        for i in 0..n {
            for j in 0..n {
                if inv_cartan[(i, j)] <= Q::zero() {
                    return Err(Error::Integrity(format!(
                        "inverse Cartan matrix of {ty} has a nonpositive entry at ({i},{j})"
                    )));
                }
            }
        }
        // (αᵢ∨, ωⱼ) = δᵢⱼ reads as C·W = I in simple-root coordinates,
        // so ωⱼ is the j-th column of C⁻¹.
        let fundamental_weights: Vec<Vec<Q>> = (0..n)
            .map(|j| (0..n).map(|i| inv_cartan[(i, j)]).collect())
            .collect();

        let min_norm = norms_sq
            .iter()
            .copied()
            .min()
            .expect("nonempty root system");
        let highest_short_root = (0..m)
            .filter(|&i| norms_sq[i] == min_norm)
            .max_by_key(|&i| heights[i])
            .expect("short roots exist");
        let max_dual_height = dual_heights.iter().copied().max().unwrap();

        let rs = RootSystem {
            cartan_type: ty,
            rank: n,
            gram,
            positive_roots,
            root_index,
            heights,
            norms_sq,
            coroots,
            coroot_coords,
            dual_heights,
            cartan,
            inv_cartan,
            fundamental_weights,
            highest_short_root,
            max_dual_height,
        };
        rs.check_construction()?;
        Ok(rs)
    }

    fn check_construction(&self) -> Result<()> {
        let expected = self.cartan_type.positive_root_count();
        if self.positive_roots.len() != expected {
            return Err(Error::Integrity(format!(
                "{} closure produced {} positive roots, expected {}",
                self.cartan_type,
                self.positive_roots.len(),
                expected
            )));
        }
        // the highest short root must dualize to the highest coroot
        let hsr = &self.coroot_coords[self.highest_short_root];
        for coords in &self.coroot_coords {
            if coords.iter().zip(hsr).any(|(c, h)| c > h) {
                return Err(Error::Integrity(
                    "highest short root does not dominate all coroot coordinates".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots m.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Positive roots in canonical order (ascending height, then descending
    /// lexicographic on coordinates). The first `rank` entries are the simple
    /// roots α₁, …, αₙ.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.positive_roots[idx]
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.heights[idx]
    }

    pub fn is_simple(&self, idx: usize) -> bool {
        idx < self.rank
    }

    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    pub fn norm_sq(&self, idx: usize) -> Q {
        self.norms_sq[idx]
    }

    /// Coordinates of α∨ in the simple-root basis.
    pub fn coroot(&self, idx: usize) -> &[Q] {
        &self.coroots[idx]
    }

    /// Nonnegative integers (c₁, …, cₙ) with θ∨ = Σ cᵢ αᵢ∨.
    pub fn coroot_coords(&self, idx: usize) -> &[i64] {
        &self.coroot_coords[idx]
    }

    /// Dual height h(θ∨) = Σ cᵢ.
    pub fn dual_height(&self, idx: usize) -> i64 {
        self.dual_heights[idx]
    }

    pub fn max_dual_height(&self) -> i64 {
        self.max_dual_height
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &QMat {
        &self.inv_cartan
    }

    /// Fundamental weight ωⱼ in simple-root coordinates (0-based j).
    pub fn fundamental_weight(&self, j: usize) -> &[Q] {
        &self.fundamental_weights[j]
    }

    /// Index of the highest short root −α₀.
    pub fn highest_short_root(&self) -> usize {
        self.highest_short_root
    }

    /// Looks up a coordinate vector among the positive roots.
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Classifies an integer vector as ±(positive root): `(index, positive)`.
    pub fn classify(&self, coords: &[i64]) -> Option<(usize, bool)> {
        if let Some(i) = self.index_of(coords) {
            return Some((i, true));
        }
        let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
        self.index_of(&neg).map(|i| (i, false))
    }

    /// Inner product of two rational vectors in simple-root coordinates.
    pub fn inner(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, &xi) in x.iter().enumerate().take(self.rank) {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate().take(self.rank) {
                if !yj.is_zero() {
                    acc += xi * yj * self.gram[(i, j)];
                }
            }
        }
        acc
    }

    /// Pairing (x, α∨) of a rational point with the coroot of root `idx`.
    pub fn pair_coroot(&self, idx: usize, x: &[Q]) -> Q {
        self.inner(x, &self.coroots[idx])
    }

    /// Integer Cartan pairing ⟨β, α∨⟩ for an integer vector β.
    pub fn cartan_pairing(&self, idx: usize, beta: &[i64]) -> i64 {
        let x: Vec<Q> = beta.iter().map(|&b| q(b)).collect();
        let p = self.pair_coroot(idx, &x);
        debug_assert!(p.is_integer(), "non-integral Cartan pairing");
        p.to_integer()
    }

    /// Applies the reflection s_α (α = positive root `idx`) to an integer
    /// vector: s_α(β) = β − ⟨β, α∨⟩ α.
    pub fn reflect(&self, idx: usize, beta: &[i64]) -> Vec<i64> {
        let c = self.cartan_pairing(idx, beta);
        beta.iter()
            .zip(self.root(idx))
            .map(|(&b, &a)| b - c * a)
            .collect()
    }

    /// Exact interior point of the base alcove: c = (Σ ωᵢ) / (M + 1) where M
    /// is the maximal dual height. Every coroot pairing (θ∨, c) equals
    /// h(θ∨)/(M+1), strictly between 0 and 1.
    pub fn interior_point(&self) -> Vec<Q> {
        let denom = q(self.max_dual_height + 1);
        let mut c = vec![Q::zero(); self.rank];
        for w in &self.fundamental_weights {
            for (ci, wi) in c.iter_mut().zip(w) {
                *ci += *wi / denom;
            }
        }
        c
    }

    /// Integer interval I_θ = [0, h(θ∨) − 1] for a positive root.
    pub fn dual_height_interval(&self, idx: usize) -> Result<std::ops::RangeInclusive<i64>> {
        if idx >= self.positive_roots.len() {
            return Err(Error::Input(format!(
                "root index {idx} out of range (m = {})",
                self.positive_roots.len()
            )));
        }
        Ok(0..=self.dual_heights[idx] - 1)
    }

    /// Human-readable root name, e.g. "a1+2a2".
    pub fn root_name(&self, idx: usize) -> String {
        let mut s = String::new();
        for (i, &c) in self.positive_roots[idx].iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&c.to_string());
            }
            s.push_str(&format!("a{}", i + 1));
        }
        s
    }

    /// Non-simple root indices in display order: descending dual height,
    /// ties broken by canonical order. This matches the convention of
    /// dropping the always-zero simple coordinates when printing admitted
    /// vectors.
    pub fn display_order(&self) -> Vec<usize> {
        let mut idxs: Vec<usize> = (self.rank..self.positive_roots.len()).collect();
        idxs.sort_by_key(|&i| (-self.dual_heights[i], i));
        idxs
    }
}

/// Generates all positive roots from the Cartan matrix, level by level.
///
/// A root γ of height h+1 is always β + αᵢ for some root β of height h; the
/// sum is a root exactly when p − ⟨β, αᵢ∨⟩ > 0, where p is the number of
/// steps the αᵢ-string continues below β.
fn generate_positive_roots(n: usize, cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut known: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        known.insert(e.clone(), 1);
        level.push(e);
    }
    let pairing =
        |beta: &[i64], i: usize| -> i64 { beta.iter().zip(&cartan[i]).map(|(&b, &c)| b * c).sum() };
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut gamma = beta.clone();
                gamma[i] += 1;
                if known.contains_key(&gamma) {
                    continue;
                }
                let mut p = 0i64;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if below[i] < 0 || !known.contains_key(&below) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing(beta, i) > 0 {
                    known.insert(gamma.clone(), beta.iter().sum::<i64>() + 1);
                    next.push(gamma);
                }
            }
        }
        level = next;
    }
    let mut roots: Vec<Vec<i64>> = known.into_keys().collect();
    roots.sort_by(|a, b| {
        let (ha, hb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
        ha.cmp(&hb).then_with(|| b.cmp(a)) // descending lex within a height
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use std::collections::HashSet;

    /// Independent generation oracle: close the simple roots under all
    /// simple reflections and keep the positive half.
    fn reflection_closure(rs: &RootSystem) -> HashSet<Vec<i64>> {
        let n = rs.rank();
        let mut all: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                e
            })
            .collect();
        for r in &frontier {
            all.insert(r.clone());
        }
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                let img = rs.reflect(i, &r);
                if all.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        all.into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect()
    }

    fn all_types() -> Vec<(char, usize)> {
        vec![
            ('A', 1),
            ('A', 2),
            ('A', 3),
            ('A', 4),
            ('A', 5),
            ('B', 2),
            ('B', 3),
            ('B', 4),
            ('C', 3),
            ('C', 4),
            ('D', 4),
            ('D', 5),
            ('E', 6),
            ('E', 7),
            ('E', 8),
            ('F', 4),
            ('G', 2),
        ]
    }

    #[test]
    fn positive_root_counts_match_classical_data() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            assert_eq!(
                rs.num_positive_roots(),
                rs.cartan_type().positive_root_count(),
                "{l}{r}"
            );
        }
    }

    #[test]
    fn generation_agrees_with_reflection_closure() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let oracle = reflection_closure(&rs);
            let built: HashSet<Vec<i64>> = rs.positive_roots().iter().cloned().collect();
            assert_eq!(built, oracle, "{l}{r}");
        }
    }

    #[test]
    fn a2_positive_roots_by_hand() {
        let rs = build_root_system('A', 2).unwrap();
        assert_eq!(rs.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn b2_norms_in_canonical_order() {
        let rs = build_root_system('B', 2).unwrap();
        assert_eq!(rs.num_positive_roots(), 4);
        let norms: Vec<Q> = (0..4).map(|i| rs.norm_sq(i)).collect();
        assert_eq!(norms, vec![q(2), q(1), q(1), q(2)]);
        // Gram matrix ((2,-1),(-1,1))
        assert_eq!(rs.gram()[(0, 0)], q(2));
        assert_eq!(rs.gram()[(0, 1)], q(-1));
        assert_eq!(rs.gram()[(1, 1)], q(1));
    }

    #[test]
    fn g2_has_six_positive_roots() {
        let rs = build_root_system('G', 2).unwrap();
        assert_eq!(rs.num_positive_roots(), 6);
        let mut dual: Vec<i64> = (0..6).map(|i| rs.dual_height(i)).collect();
        dual.sort_unstable();
        assert_eq!(dual, vec![1, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn dual_height_intervals() {
        let a2 = build_root_system('A', 2).unwrap();
        let theta = a2.index_of(&[1, 1]).unwrap();
        assert_eq!(a2.dual_height_interval(theta).unwrap(), 0..=1);
        for i in 0..2 {
            assert_eq!(a2.dual_height_interval(i).unwrap(), 0..=0);
        }

        let b2 = build_root_system('B', 2).unwrap();
        let short = b2.index_of(&[1, 1]).unwrap();
        let long = b2.index_of(&[1, 2]).unwrap();
        assert_eq!(b2.dual_height_interval(short).unwrap(), 0..=2);
        assert_eq!(b2.coroot_coords(short), &[2, 1]);
        assert_eq!(b2.dual_height_interval(long).unwrap(), 0..=1);
        assert_eq!(b2.coroot_coords(long), &[1, 1]);

        assert!(b2.dual_height_interval(4).is_err());
    }

    #[test]
    fn canonicalization_and_invalid_types() {
        assert_eq!(CartanType::new('B', 1).unwrap().to_string(), "A1");
        assert_eq!(CartanType::new('C', 2).unwrap().to_string(), "B2");
        assert_eq!(CartanType::new('D', 3).unwrap().to_string(), "A3");
        assert!(CartanType::new('D', 2).is_err());
        assert!(CartanType::new('E', 9).is_err());
        assert!(CartanType::new('F', 3).is_err());
        assert!(CartanType::new('G', 3).is_err());
        assert!(CartanType::new('H', 3).is_err());
        assert!(CartanType::new('A', 0).is_err());
        assert_eq!(CartanType::parse("b3").unwrap().to_string(), "B3");
        assert!(CartanType::parse("").is_err());
    }

    #[test]
    fn gram_is_symmetric_positive_definite() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let g = rs.gram();
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(g[(i, j)], g[(j, i)], "{l}{r}");
                }
            }
            // leading principal minors all positive
            for k in 1..=n {
                let minor = QMat::from_fn(k, k, |i, j| g[(i, j)]);
                assert!(minor.det() > Q::zero(), "{l}{r} minor {k}");
            }
        }
    }

    #[test]
    fn weights_are_dual_to_simple_coroots() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    let p = rs.pair_coroot(i, rs.fundamental_weight(j));
                    let expected = if i == j { q(1) } else { q(0) };
                    assert_eq!(p, expected, "{l}{r} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn inverse_cartan_is_positive() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let inv = rs.inv_cartan();
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    assert!(inv[(i, j)] > Q::zero(), "{l}{r}");
                }
            }
        }
    }

    #[test]
    fn positive_roots_closed_under_addition() {
        // if α, β, α+β are all roots then α+β appears among the positives
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let m = rs.num_positive_roots();
            for i in 0..m {
                for j in 0..m {
                    let sum: Vec<i64> = rs
                        .root(i)
                        .iter()
                        .zip(rs.root(j))
                        .map(|(&a, &b)| a + b)
                        .collect();
                    if let Some((_, positive)) = rs.classify(&sum) {
                        assert!(positive, "{l}{r}: sum of positives classified negative");
                    }
                }
            }
        }
    }

    #[test]
    fn every_non_simple_root_splits_as_a_sum() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let m = rs.num_positive_roots();
            for t in rs.rank()..m {
                let theta = rs.root(t);
                let found = (0..m).any(|i| {
                    let diff: Vec<i64> =
                        theta.iter().zip(rs.root(i)).map(|(&a, &b)| a - b).collect();
                    rs.index_of(&diff).is_some()
                });
                assert!(found, "{l}{r}: {:?} is not a sum of two positives", theta);
            }
        }
    }

    #[test]
    fn height_one_roots_are_exactly_the_simples() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            for i in 0..rs.num_positive_roots() {
                assert_eq!(rs.height(i) == 1, rs.is_simple(i), "{l}{r}");
            }
        }
    }

    #[test]
    fn highest_short_root_dualizes_to_highest_coroot() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let top = rs.coroot_coords(rs.highest_short_root());
            for i in 0..rs.num_positive_roots() {
                for (c, t) in rs.coroot_coords(i).iter().zip(top) {
                    assert!(c <= t, "{l}{r}");
                }
            }
        }
    }

    #[test]
    fn interior_point_lies_in_base_alcove() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            let c = rs.interior_point();
            for i in 0..rs.num_positive_roots() {
                let p = rs.pair_coroot(i, &c);
                assert!(p > Q::zero() && p < q(1), "{l}{r}");
                assert!(!p.is_integer());
            }
        }
    }

    #[test]
    fn coroot_coords_reproduce_coroot() {
        for (l, r) in all_types() {
            let rs = build_root_system(l, r).unwrap();
            for t in 0..rs.num_positive_roots() {
                let mut rebuilt = vec![Q::zero(); rs.rank()];
                for (i, &c) in rs.coroot_coords(t).iter().enumerate() {
                    for (x, y) in rebuilt.iter_mut().zip(rs.coroot(i)) {
                        *x += q(c) * *y;
                    }
                }
                assert_eq!(rebuilt.as_slice(), rs.coroot(t), "{l}{r}");
            }
        }
    }

    #[test]
    fn root_names() {
        let b2 = build_root_system('B', 2).unwrap();
        let names: Vec<String> = (0..4).map(|i| b2.root_name(i)).collect();
        assert_eq!(names, vec!["a1", "a2", "a1+a2", "a1+2a2"]);
    }
}
