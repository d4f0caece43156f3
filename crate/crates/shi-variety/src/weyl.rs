//! Affine Weyl group elements as exact affine maps.
//!
//! W_a = ℤΦ ⋊ W acts on the ambient space V (simple-root coordinates) by
//! x ↦ Lx + t with L the linear part of a finite Weyl element and t a vector
//! of the root lattice. Both parts are stored as exact rationals so that
//! equality, hashing and hyperplane pairings are decidable, and so that a
//! non-integral part can be flagged as data corruption instead of silently
//! drifting.
//!
//! The Coxeter generators are the simple reflections s_{αᵢ,0} together with
//! the affine reflection s_{θ,1} in the wall (x, θ∨) = 1, θ the highest
//! short root. The Shi coefficient vector k(w, ·) reads off, for every
//! positive root α, which strip k ≤ (x, α∨) ≤ k+1 contains the alcove
//! w(A₀); it determines w uniquely and its absolute sum is the Coxeter
//! length.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::linalg::{q, qfloor, vec_to_ints, QMat, Q};
use crate::rootsys::RootSystem;
use crate::{Error, Result};

/// Element of the affine Weyl group as the exact map x ↦ Lx + t.
///
/// `linear` and `translation` are rational in type but integral in value for
/// genuine group elements; [`AffineElement::decompose`] enforces this.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    linear: QMat,
    translation: Vec<Q>,
}

/// Shi coefficient vector: kₐ in canonical positive-root order.
pub type ShiVector = Vec<i64>;

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        AffineElement {
            linear: QMat::identity(rank),
            translation: vec![Q::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    pub fn linear(&self) -> &QMat {
        &self.linear
    }

    pub fn translation(&self) -> &[Q] {
        &self.translation
    }

    /// Applies the map to a point.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut y = self.linear.mul_vec(x);
        for (yi, ti) in y.iter_mut().zip(&self.translation) {
            *yi += *ti;
        }
        y
    }

    /// Group product `self · other`, i.e. the map applying `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let linear = self.linear.mul(&other.linear);
        let mut translation = self.linear.mul_vec(&other.translation);
        for (ti, si) in translation.iter_mut().zip(&self.translation) {
            *ti += *si;
        }
        AffineElement {
            linear,
            translation,
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self
            .linear
            .inverse()
            .expect("group element has invertible linear part");
        let mut translation = inv.mul_vec(&self.translation);
        for t in translation.iter_mut() {
            *t = -*t;
        }
        AffineElement {
            linear: inv,
            translation,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.linear == QMat::identity(self.rank()) && self.translation.iter().all(|t| t.is_zero())
    }

    /// Splits w = τ_x · w̄ into the root-lattice translation x and the
    /// finite part w̄ (returned as its linear map).
    ///
    /// Fails with an integrity error when the stored data is not a genuine
    /// group element: the translation must be integral and the linear part
    /// must permute the root set.
    pub fn decompose(&self, rs: &RootSystem) -> Result<(Vec<i64>, QMat)> {
        let x = vec_to_ints(&self.translation).ok_or_else(|| {
            Error::Integrity(format!(
                "translation part {:?} is not in the root lattice",
                self.translation
            ))
        })?;
        let n = self.rank();
        let mut cols: Vec<Vec<i64>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut col = Vec::with_capacity(n);
            for i in 0..n {
                let e = self.linear[(i, j)];
                if !e.is_integer() {
                    return Err(Error::Integrity(format!(
                        "linear part has non-integer entry {e} at ({i},{j})"
                    )));
                }
                col.push(e.to_integer());
            }
            cols.push(col);
        }
        for idx in 0..rs.num_positive_roots() {
            let root = rs.root(idx);
            let mut img = vec![0i64; n];
            for (j, &c) in root.iter().enumerate() {
                for (ii, e) in img.iter_mut().enumerate() {
                    *e += c * cols[j][ii];
                }
            }
            if rs.classify(&img).is_none() {
                return Err(Error::Integrity(format!(
                    "linear part maps root {:?} outside the root system",
                    root
                )));
            }
        }
        Ok((x, self.linear.clone()))
    }

    /// Shi coefficient vector: k(w, α) = ⌊(α∨, w(c))⌋ over the canonical
    /// positive-root order, with c an exact interior point of the base
    /// alcove.
    ///
    /// An integer pairing would place the image point on a reflection wall,
    /// which no group element can do to an alcove-interior point, so that
    /// case is reported as an integrity error.
    pub fn shi_vector(&self, rs: &RootSystem) -> Result<ShiVector> {
        let img = self.apply(&rs.interior_point());
        let mut k = Vec::with_capacity(rs.num_positive_roots());
        for idx in 0..rs.num_positive_roots() {
            let p = rs.pair_coroot(idx, &img);
            if p.is_integer() {
                return Err(Error::Integrity(format!(
                    "pairing with {} is the integer {p}: image of the interior point lies on a wall",
                    rs.root_name(idx)
                )));
            }
            k.push(qfloor(p));
        }
        Ok(k)
    }

    /// Coxeter length via the coefficient formula ℓ(w) = Σ_α |k(w, α)|.
    pub fn length_from_shi(&self, rs: &RootSystem) -> Result<usize> {
        Ok(self
            .shi_vector(rs)?
            .iter()
            .map(|k| k.unsigned_abs() as usize)
            .sum())
    }

    /// Coxeter length by breadth-first search in the Cayley graph, as an
    /// oracle independent of the coefficient formula. Searches out to
    /// `max_radius` and reports a capacity error beyond it.
    pub fn length_bfs(&self, rs: &RootSystem, max_radius: usize) -> Result<usize> {
        if self.is_identity() {
            return Ok(0);
        }
        let gens = generators(rs);
        let mut seen: HashMap<AffineElement, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let e = AffineElement::identity(rs.rank());
        seen.insert(e.clone(), 0);
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            let d = seen[&w];
            if d == max_radius {
                continue;
            }
            for g in &gens {
                let next = w.compose(g);
                if next == *self {
                    return Ok(d + 1);
                }
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        Err(Error::Capacity(format!(
            "element not found within Cayley radius {max_radius}"
        )))
    }

    /// Reduced word over the generator alphabet 0..=rank, with 0 the affine
    /// generator: w = s_{a₁} ⋯ s_{aℓ}.
    ///
    /// Peels one right descent per step, detected by a strict drop in the
    /// coefficient length, so the word comes out reduced.
    pub fn word(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let gens = generators(rs);
        let mut w = self.clone();
        let mut rev = Vec::new();
        let mut len = w.length_from_shi(rs)?;
        while len > 0 {
            let mut advanced = false;
            for (a, g) in gens.iter().enumerate() {
                let next = w.compose(g);
                let nl = next.length_from_shi(rs)?;
                if nl < len {
                    rev.push(a);
                    w = next;
                    len = nl;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return Err(Error::Integrity(
                    "no descent found on an element of positive length".into(),
                ));
            }
        }
        if !w.is_identity() {
            return Err(Error::Integrity(
                "descent peeling terminated away from the identity".into(),
            ));
        }
        rev.reverse();
        Ok(rev)
    }
}

/// Word in simple reflections for a finite Weyl element given by its linear
/// part: returns 0-based simple-root indices (i₁, …, iₗ) with
/// w̄ = s_{i₁} ⋯ s_{iₗ}, reduced.
///
/// Peels right descents: i is a descent of w̄ iff w̄(αᵢ) is a negative root.
pub fn finite_word(rs: &RootSystem, linear: &QMat) -> Result<Vec<usize>> {
    let n = rs.rank();
    let mut w = linear.clone();
    let mut rev = Vec::new();
    let ident = QMat::identity(n);
    while w != ident {
        let mut descent = None;
        for i in 0..n {
            let neg = (0..n).all(|r| w[(r, i)] <= Q::zero());
            if neg {
                descent = Some(i);
                break;
            }
        }
        let i = descent.ok_or_else(|| {
            Error::Integrity("finite part has no descent but is not the identity".into())
        })?;
        w = w.mul(affine_reflection(rs, i, 0).linear());
        rev.push(i);
        if rev.len() > rs.cartan_type().weyl_order() as usize {
            return Err(Error::Integrity(
                "descent peeling exceeded the order of the finite Weyl group".into(),
            ));
        }
    }
    rev.reverse();
    Ok(rev)
}

/// Affine reflection s_{α,k} for the positive root `idx`:
/// x ↦ x − ((x, α∨) − k) α.
pub fn affine_reflection(rs: &RootSystem, idx: usize, k: i64) -> AffineElement {
    let n = rs.rank();
    let alpha = rs.root(idx);
    let linear = QMat::from_fn(n, n, |i, j| {
        let mut e = vec![0i64; n];
        e[j] = 1;
        let p = rs.cartan_pairing(idx, &e);
        let id = if i == j { 1 } else { 0 };
        q(id - p * alpha[i])
    });
    let translation: Vec<Q> = alpha.iter().map(|&a| q(k * a)).collect();
    AffineElement {
        linear,
        translation,
    }
}

/// Coxeter generator s_a: a = 0 is the affine reflection s_{θ,1} in the wall
/// (x, θ∨) = 1 with θ the highest short root; a = 1..=rank is the simple
/// reflection s_{α_a}.
pub fn affine_generator(rs: &RootSystem, a: usize) -> Result<AffineElement> {
    if a == 0 {
        return Ok(affine_reflection(rs, rs.highest_short_root(), 1));
    }
    if a > rs.rank() {
        return Err(Error::Input(format!(
            "generator index {a} out of range 0..={}",
            rs.rank()
        )));
    }
    Ok(affine_reflection(rs, a - 1, 0))
}

/// All Coxeter generators in index order s₀, s₁, …, sₙ.
pub fn generators(rs: &RootSystem) -> Vec<AffineElement> {
    (0..=rs.rank())
        .map(|a| affine_generator(rs, a).expect("index in range"))
        .collect()
}

/// Translation τ_x by a root-lattice vector: y ↦ y + x.
pub fn translation_element(rs: &RootSystem, x: &[i64]) -> AffineElement {
    AffineElement {
        linear: QMat::identity(rs.rank()),
        translation: x.iter().map(|&c| q(c)).collect(),
    }
}

/// Product of generators for a word over 0..=rank, left to right:
/// `[a, b, c]` gives s_a · s_b · s_c.
pub fn element_of_word(rs: &RootSystem, word: &[usize]) -> Result<AffineElement> {
    let mut w = AffineElement::identity(rs.rank());
    for &a in word {
        w = w.compose(&affine_generator(rs, a)?);
    }
    Ok(w)
}

/// Ball of radius `radius` in the Cayley graph: every element with
/// ℓ(w) ≤ radius, paired with its graph distance, in BFS order.
pub fn cayley_ball(rs: &RootSystem, radius: usize) -> Vec<(AffineElement, usize)> {
    let gens = generators(rs);
    let e = AffineElement::identity(rs.rank());
    let mut seen: HashMap<AffineElement, usize> = HashMap::new();
    seen.insert(e.clone(), 0);
    let mut out = vec![(e, 0usize)];
    let mut head = 0;
    while head < out.len() {
        let (w, d) = out[head].clone();
        head += 1;
        if d == radius {
            continue;
        }
        for g in &gens {
            let next = w.compose(g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), d + 1);
                out.push((next, d + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn a2_affine_generator_shi_vector() {
        let rs = build_root_system('A', 2).unwrap();
        let s0 = affine_generator(&rs, 0).unwrap();
        assert_eq!(s0.shi_vector(&rs).unwrap(), vec![0, 0, 1]);
        assert_eq!(s0.length_from_shi(&rs).unwrap(), 1);
        for a in 1..=2 {
            let s = affine_generator(&rs, a).unwrap();
            assert_eq!(s.length_from_shi(&rs).unwrap(), 1);
        }
    }

    #[test]
    fn a2_translation_shi_vector_and_length() {
        let rs = build_root_system('A', 2).unwrap();
        let tau = translation_element(&rs, &[1, 0]);
        assert_eq!(tau.shi_vector(&rs).unwrap(), vec![2, -1, 1]);
        assert_eq!(tau.length_from_shi(&rs).unwrap(), 4);
        assert_eq!(tau.length_bfs(&rs, 6).unwrap(), 4);
    }

    #[test]
    fn translation_is_two_parallel_reflections() {
        for (l, r) in [('A', 2), ('B', 2), ('G', 2), ('A', 3)] {
            let rs = build_root_system(l, r).unwrap();
            for idx in 0..rs.num_positive_roots() {
                let s1 = affine_reflection(&rs, idx, 1);
                let s0 = affine_reflection(&rs, idx, 0);
                let tau = translation_element(&rs, rs.root(idx));
                assert_eq!(s1.compose(&s0), tau, "{l}{r} root {idx}");
                assert_eq!(s0.compose(&s1), tau.inverse(), "{l}{r} root {idx}");
            }
        }
    }

    #[test]
    fn generators_are_involutions() {
        for (l, r) in [('A', 1), ('A', 3), ('B', 3), ('C', 3), ('G', 2), ('F', 4)] {
            let rs = build_root_system(l, r).unwrap();
            for g in generators(&rs) {
                assert!(g.compose(&g).is_identity(), "{l}{r}");
                assert_eq!(g.inverse(), g, "{l}{r}");
            }
        }
    }

    #[test]
    fn linear_parts_preserve_the_gram_form() {
        let rs = build_root_system('B', 3).unwrap();
        for (w, _) in cayley_ball(&rs, 4) {
            let l = w.linear();
            let g = rs.gram();
            assert_eq!(&l.transpose().mul(g).mul(l), g);
        }
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let rs = build_root_system('B', 2).unwrap();
        let ball = cayley_ball(&rs, 3);
        let pts = [
            vec![q(0), q(0)],
            vec![q(1), q(-2)],
            vec![crate::linalg::qdiv(1, 3), crate::linalg::qdiv(-5, 7)],
        ];
        for (f, _) in &ball {
            for (g, _) in &ball {
                let fg = f.compose(g);
                for p in &pts {
                    assert_eq!(fg.apply(p), f.apply(&g.apply(p)));
                }
            }
        }
    }

    #[test]
    fn decompose_splits_translation_and_finite_part() {
        let rs = build_root_system('A', 2).unwrap();
        for (w, _) in cayley_ball(&rs, 5) {
            let (x, lin) = w.decompose(&rs).unwrap();
            let rebuilt = translation_element(&rs, &x).compose(&AffineElement {
                linear: lin,
                translation: vec![Q::zero(); 2],
            });
            assert_eq!(rebuilt, w);
        }
    }

    #[test]
    fn decompose_rejects_non_lattice_translation() {
        let rs = build_root_system('A', 2).unwrap();
        let bad = AffineElement {
            linear: QMat::identity(2),
            translation: vec![crate::linalg::qdiv(1, 2), q(0)],
        };
        assert!(matches!(bad.decompose(&rs), Err(Error::Integrity(_))));
    }

    #[test]
    fn decompose_rejects_non_root_permutation() {
        let rs = build_root_system('A', 2).unwrap();
        let bad = AffineElement {
            linear: QMat::from_fn(2, 2, |_, _| q(1)),
            translation: vec![Q::zero(); 2],
        };
        assert!(matches!(bad.decompose(&rs), Err(Error::Integrity(_))));
    }

    #[test]
    fn translation_shi_vector_is_the_coroot_pairing() {
        for (l, r) in [('A', 2), ('B', 2), ('G', 2)] {
            let rs = build_root_system(l, r).unwrap();
            for x in [[1i64, 0], [0, 1], [2, -1], [-1, -1], [3, 2]] {
                let tau = translation_element(&rs, &x);
                let k = tau.shi_vector(&rs).unwrap();
                for (idx, &ki) in k.iter().enumerate() {
                    assert_eq!(ki, rs.cartan_pairing(idx, &x), "{l}{r} {x:?}");
                }
            }
        }
    }

    #[test]
    fn shi_vector_separates_ball_elements() {
        for (l, r) in [('A', 2), ('B', 2)] {
            let rs = build_root_system(l, r).unwrap();
            let ball = cayley_ball(&rs, 5);
            let mut seen = std::collections::HashSet::new();
            for (w, _) in &ball {
                assert!(seen.insert(w.shi_vector(&rs).unwrap()), "{l}{r}");
            }
        }
    }

    #[test]
    fn bfs_distance_equals_coefficient_length_on_small_balls() {
        for (l, r) in [('A', 2), ('B', 2), ('A', 1)] {
            let rs = build_root_system(l, r).unwrap();
            for (w, d) in cayley_ball(&rs, 4) {
                assert_eq!(w.length_from_shi(&rs).unwrap(), d, "{l}{r}");
            }
        }
    }

    #[test]
    fn a1_ball_grows_linearly() {
        let rs = build_root_system('A', 1).unwrap();
        for radius in 0..6 {
            assert_eq!(cayley_ball(&rs, radius).len(), 2 * radius + 1);
        }
    }

    #[test]
    fn words_reconstruct_ball_elements() {
        let rs = build_root_system('B', 2).unwrap();
        for (w, d) in cayley_ball(&rs, 5) {
            let word = w.word(&rs).unwrap();
            assert_eq!(word.len(), d);
            assert_eq!(element_of_word(&rs, &word).unwrap(), w);
        }
    }

    #[test]
    fn word_application_order() {
        let rs = build_root_system('A', 2).unwrap();
        let w = element_of_word(&rs, &[0, 1, 2]).unwrap();
        let s0 = affine_generator(&rs, 0).unwrap();
        let s1 = affine_generator(&rs, 1).unwrap();
        let s2 = affine_generator(&rs, 2).unwrap();
        assert_eq!(w, s0.compose(&s1).compose(&s2));
        let p = rs.interior_point();
        assert_eq!(w.apply(&p), s0.apply(&s1.apply(&s2.apply(&p))));
    }

    #[test]
    fn ball_images_tile_without_overlap() {
        // distinct elements move the interior point to distinct alcoves,
        // and translating back by the Shi lattice part lands inside [0,1)
        let rs = build_root_system('G', 2).unwrap();
        let c = rs.interior_point();
        let mut images = std::collections::HashSet::new();
        for (w, _) in cayley_ball(&rs, 5) {
            assert!(images.insert(w.apply(&c)));
            let k = w.shi_vector(&rs).unwrap();
            let img = w.apply(&c);
            for (idx, &ki) in k.iter().enumerate() {
                let frac = rs.pair_coroot(idx, &img) - q(ki);
                assert!(frac > Q::zero() && frac < q(1));
            }
        }
    }
}
