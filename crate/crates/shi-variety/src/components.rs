//! Enumeration of admitted vectors and the component poset.
//!
//! Two independent enumerators produce the admitted set. The breadth-first
//! one walks alcoves of the fundamental polytope P_H (coefficients zero on
//! simple roots, nonnegative everywhere) by right multiplication; P_H is an
//! intersection of half-spaces, so it is convex, any two of its alcoves are
//! joined by a gallery inside it, and pruned BFS from the identity is
//! complete. The filter enumerator scans the full admissible box and keeps
//! the vectors passing the triple system; its cost is the box volume, so it
//! refuses oversized types instead of running forever.
//!
//! Admitted vectors are ordered componentwise. The resulting poset is a
//! semidistributive lattice whose covers are unit coordinate increments
//! realized by the ⋄-action of a reflection; `check_*` functions verify each
//! of these claims exhaustively and report witnesses for any failure.

use std::collections::{HashMap, HashSet};

use crate::phirep::diamond_reflection;
use crate::rootsys::RootSystem;
use crate::shi::{top_candidate, AdmittedVector};
use crate::weyl::{generators, AffineElement};
use crate::{Error, Result};

/// Default ceiling on the admissible-box volume for the filter enumerator.
pub const DEFAULT_FILTER_BUDGET: u64 = 1_000_000;

/// Default ceiling on ℓ(top) for the weak-order interval check.
pub const DEFAULT_INTERVAL_BUDGET: usize = 16;

/// Environment override for [`DEFAULT_FILTER_BUDGET`].
pub const FILTER_BUDGET_ENV: &str = "SHI_VARIETY_FILTER_BUDGET";

/// Environment override for [`DEFAULT_INTERVAL_BUDGET`].
pub const INTERVAL_BUDGET_ENV: &str = "SHI_VARIETY_INTERVAL_BUDGET";

fn env_budget<T: std::str::FromStr>(name: &str, default: T) -> T {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

/// Classical cross-check: the number of components equals |W| divided by the
/// index of the root lattice in the weight lattice.
pub fn count_oracle(rs: &RootSystem) -> u64 {
    let ty = rs.cartan_type();
    let w = ty.weyl_order();
    let idx = ty.weight_lattice_index();
    debug_assert_eq!(w % idx, 0);
    w / idx
}

/// Volume of the admissible box Π_θ h(θ∨).
pub fn admissible_box_volume(rs: &RootSystem) -> u64 {
    (0..rs.num_positive_roots())
        .map(|i| rs.dual_height(i) as u64)
        .product()
}

/// Exhaustive scan of the admissible box, keeping admitted vectors.
/// Refuses when the box volume exceeds the budget (env-overridable).
pub fn enumerate_admitted_filter(rs: &RootSystem) -> Result<Vec<AdmittedVector>> {
    enumerate_admitted_filter_with_budget(rs, env_budget(FILTER_BUDGET_ENV, DEFAULT_FILTER_BUDGET))
}

/// Filter enumeration with an explicit box-volume budget.
pub fn enumerate_admitted_filter_with_budget(
    rs: &RootSystem,
    budget: u64,
) -> Result<Vec<AdmittedVector>> {
    let volume = admissible_box_volume(rs);
    if volume > budget {
        return Err(Error::Capacity(format!(
            "admissible box of {} holds {volume} vectors, over the filter budget of {budget}; \
             use the bfs method instead",
            rs.cartan_type()
        )));
    }
    let m = rs.num_positive_roots();
    let mut out = Vec::new();
    let mut lambda = vec![0i64; m];
    loop {
        if let Ok(v) = AdmittedVector::from_full(rs, lambda.clone()) {
            out.push(v);
        }
        let mut i = rs.rank();
        while i < m && lambda[i] == rs.dual_height(i) - 1 {
            lambda[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        lambda[i] += 1;
    }
    out.sort();
    Ok(out)
}

/// Walks the alcoves of the fundamental polytope by right multiplication
/// from the identity and returns their Shi vectors.
///
/// An element is kept when its Shi vector vanishes on the simple roots and
/// is nonnegative everywhere; only kept elements are expanded, which is
/// complete because the polytope is convex.
pub fn enumerate_admitted_bfs(rs: &RootSystem) -> Result<Vec<AdmittedVector>> {
    let gens = generators(rs);
    let e = AffineElement::identity(rs.rank());
    let mut seen: HashSet<AffineElement> = HashSet::new();
    let mut queue: Vec<AffineElement> = Vec::new();
    let mut out: Vec<AdmittedVector> = Vec::new();
    seen.insert(e.clone());
    queue.push(e.clone());
    out.push(AdmittedVector::from_full(rs, e.shi_vector(rs)?)?);
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head].clone();
        head += 1;
        for g in &gens {
            let next = w.compose(g);
            if seen.contains(&next) {
                continue;
            }
            let k = next.shi_vector(rs)?;
            let inside =
                k[..rs.rank()].iter().all(|&c| c == 0) && k[rs.rank()..].iter().all(|&c| c >= 0);
            seen.insert(next.clone());
            if inside {
                out.push(AdmittedVector::from_full(rs, k)?);
                queue.push(next);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Outcome of one structural verification: how much was examined and every
/// witness of failure, sorted for stable output.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            checked: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    fn finish(mut self) -> Self {
        self.witnesses.sort();
        self
    }
}

/// The componentwise poset on the full admitted set of one root system.
///
/// Elements are kept in ascending lexicographic order, a linear extension
/// of the componentwise order, so `leq(i, j)` implies i ≤ j as indices.
pub struct ComponentPoset {
    elements: Vec<AdmittedVector>,
    up: Vec<Vec<u64>>,
    down: Vec<Vec<u64>>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

fn bit_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

/// Builds the poset from the full admitted set, verifying the predicted
/// extremal elements.
pub fn build_poset(rs: &RootSystem, mut elements: Vec<AdmittedVector>) -> Result<ComponentPoset> {
    elements.sort();
    elements.dedup();
    let n = elements.len();
    if n == 0 {
        return Err(Error::Input("empty admitted set".into()));
    }
    let words = n.div_ceil(64);
    let mut up = vec![vec![0u64; words]; n];
    let mut down = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in 0..n {
            let le = elements[i]
                .coords()
                .iter()
                .zip(elements[j].coords())
                .all(|(a, b)| a <= b);
            if le {
                bit_set(&mut up[i], j);
                bit_set(&mut down[j], i);
            }
        }
    }

    // covers = transitive reduction: i ⋖ j iff [i, j] = {i, j}
    let mut covers = Vec::new();
    for (i, up_i) in up.iter().enumerate() {
        for (j, down_j) in down.iter().enumerate().skip(i + 1) {
            if !bit_get(up_i, j) {
                continue;
            }
            let between: u32 = up_i
                .iter()
                .zip(down_j)
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if between == 2 {
                covers.push((i, j));
            }
        }
    }

    let minimal: Vec<usize> = (0..n)
        .filter(|&i| down[i].iter().map(|w| w.count_ones()).sum::<u32>() == 1)
        .collect();
    let maximal: Vec<usize> = (0..n)
        .filter(|&i| up[i].iter().map(|w| w.count_ones()).sum::<u32>() == 1)
        .collect();
    if minimal.len() != 1 || !elements[minimal[0]].coords().iter().all(|&c| c == 0) {
        return Err(Error::Integrity(
            "the admitted poset does not have the zero vector as unique minimum".into(),
        ));
    }
    if maximal.len() != 1 {
        return Err(Error::Integrity(format!(
            "the admitted poset has {} maximal elements, expected a unique top",
            maximal.len()
        )));
    }
    let top = maximal[0];
    if elements[top].coords() != top_candidate(rs) {
        return Err(Error::Integrity(format!(
            "top admitted vector {:?} differs from the predicted maximum {:?}",
            elements[top].coords(),
            top_candidate(rs)
        )));
    }
    Ok(ComponentPoset {
        elements,
        up,
        down,
        covers,
        bottom: minimal[0],
        top,
    })
}

impl ComponentPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AdmittedVector] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &AdmittedVector {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &AdmittedVector) -> Option<usize> {
        self.elements.binary_search(v).ok()
    }

    /// Cover edges (lower, upper), sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Componentwise comparison by element index.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        bit_get(&self.up[i], j)
    }

    /// Greatest lower bound; a property violation names the offending pair.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        self.bound(a, b, true)
    }

    /// Least upper bound; a property violation names the offending pair.
    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        self.bound(a, b, false)
    }

    /// Shared meet/join scan. The candidate is the extreme member of the
    /// common bound set in the lexicographic linear extension; it is the
    /// true bound iff it dominates the whole set.
    fn bound(&self, a: usize, b: usize, lower: bool) -> Result<usize> {
        let n = self.len();
        if a >= n || b >= n {
            return Err(Error::Input(format!(
                "element index out of range: ({a}, {b}) with {n} elements"
            )));
        }
        let common: Vec<u64> = if lower {
            self.down[a]
                .iter()
                .zip(&self.down[b])
                .map(|(x, y)| x & y)
                .collect()
        } else {
            self.up[a]
                .iter()
                .zip(&self.up[b])
                .map(|(x, y)| x & y)
                .collect()
        };
        let kind = if lower { "meet" } else { "join" };
        let cand = if lower {
            (0..n).rev().find(|&i| bit_get(&common, i))
        } else {
            (0..n).find(|&i| bit_get(&common, i))
        };
        let cand = cand.ok_or_else(|| {
            Error::PropertyViolation(format!(
                "no common bound: {kind} of {:?} and {:?} does not exist",
                self.elements[a].coords(),
                self.elements[b].coords()
            ))
        })?;
        let covered = if lower {
            &self.down[cand]
        } else {
            &self.up[cand]
        };
        let dominated = common.iter().zip(covered).all(|(c, d)| c & !d == 0);
        if !dominated {
            return Err(Error::PropertyViolation(format!(
                "{kind} of {:?} and {:?} is not unique",
                self.elements[a].coords(),
                self.elements[b].coords()
            )));
        }
        Ok(cand)
    }

    /// Down-set of an element as indices.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| bit_get(&self.down[i], j))
            .collect()
    }
}

/// Exhaustive existence check for all pairwise meets and joins.
pub fn check_lattice(p: &ComponentPoset) -> CheckReport {
    let mut report = CheckReport::new("lattice");
    let n = p.len();
    for a in 0..n {
        for b in a..n {
            report.checked += 2;
            if let Err(e) = p.meet(a, b) {
                report.witnesses.push(e.to_string());
            }
            if let Err(e) = p.join(a, b) {
                report.witnesses.push(e.to_string());
            }
        }
    }
    report.finish()
}

type LatticeTable = Vec<Vec<u32>>;

fn full_tables(p: &ComponentPoset) -> Option<(LatticeTable, LatticeTable)> {
    let n = p.len();
    let mut meets = vec![vec![0u32; n]; n];
    let mut joins = vec![vec![0u32; n]; n];
    for a in 0..n {
        for b in a..n {
            let m = p.meet(a, b).ok()?;
            let j = p.join(a, b).ok()?;
            meets[a][b] = m as u32;
            meets[b][a] = m as u32;
            joins[a][b] = j as u32;
            joins[b][a] = j as u32;
        }
    }
    Some((meets, joins))
}

/// Checks both semidistributive laws:
/// SD∨: x∨y = x∨z ⇒ x∨(y∧z) = x∨y, and its order dual SD∧.
///
/// Up to 200 elements the triples (x, y, z) are scanned literally. Beyond
/// that the scan folds each class {y : x∨y = v} through ∧ and verifies
/// x∨(fold) = v, which is equivalent: any y, z in the class satisfy
/// fold ≤ y∧z ≤ y, so x∨fold = v forces x∨(y∧z) = v, and a failing fold
/// yields an explicit failing pair.
pub fn check_semidistributive(p: &ComponentPoset) -> CheckReport {
    let mut report = CheckReport::new("semidistributive");
    let n = p.len();
    let Some((meets, joins)) = full_tables(p) else {
        report.witnesses.push(
            "not a lattice: some meet or join is missing, semidistributivity undefined".into(),
        );
        return report.finish();
    };

    if n <= 200 {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    report.checked += 2;
                    if joins[x][y] == joins[x][z] {
                        let yz = meets[y][z] as usize;
                        if joins[x][yz] != joins[x][y] {
                            report.witnesses.push(sd_witness(p, "SD∨", x, y, z));
                        }
                    }
                    if meets[x][y] == meets[x][z] {
                        let yz = joins[y][z] as usize;
                        if meets[x][yz] != meets[x][y] {
                            report.witnesses.push(sd_witness(p, "SD∧", x, y, z));
                        }
                    }
                }
            }
        }
        return report.finish();
    }

    for x in 0..n {
        let mut by_join: HashMap<u32, Vec<usize>> = HashMap::new();
        let mut by_meet: HashMap<u32, Vec<usize>> = HashMap::new();
        for y in 0..n {
            by_join.entry(joins[x][y]).or_default().push(y);
            by_meet.entry(meets[x][y]).or_default().push(y);
        }
        for (v, class) in &by_join {
            report.checked += class.len() as u64 * class.len() as u64;
            let mut fold = class[0];
            for &y in &class[1..] {
                let prev = fold;
                fold = meets[fold][y] as usize;
                if joins[x][fold] != *v {
                    report.witnesses.push(sd_witness(p, "SD∨", x, prev, y));
                    break;
                }
            }
        }
        for (v, class) in &by_meet {
            report.checked += class.len() as u64 * class.len() as u64;
            let mut fold = class[0];
            for &y in &class[1..] {
                let prev = fold;
                fold = joins[fold][y] as usize;
                if meets[x][fold] != *v {
                    report.witnesses.push(sd_witness(p, "SD∧", x, prev, y));
                    break;
                }
            }
        }
    }
    report.finish()
}

fn sd_witness(p: &ComponentPoset, law: &str, x: usize, y: usize, z: usize) -> String {
    format!(
        "{law} fails at x={:?} y={:?} z={:?}",
        p.element(x).coords(),
        p.element(y).coords(),
        p.element(z).coords()
    )
}

/// Verifies that every cover edge is a unit coordinate increment realized
/// by the ⋄-action of the reflection at that coordinate's root.
pub fn check_cover_geometry(rs: &RootSystem, p: &ComponentPoset) -> Result<CheckReport> {
    let mut report = CheckReport::new("covers");
    for &(lo, hi) in p.covers() {
        report.checked += 1;
        let a = p.element(lo).coords();
        let b = p.element(hi).coords();
        let diffs: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
        let unit = diffs.len() == 1 && b[diffs[0]] - a[diffs[0]] == 1;
        if !unit {
            report.witnesses.push(format!(
                "cover {a:?} -> {b:?} is not a unit coordinate increment"
            ));
            continue;
        }
        let alpha = diffs[0];
        let image = diamond_reflection(rs, alpha, p.element(lo))?;
        if image != *p.element(hi) {
            report.witnesses.push(format!(
                "cover {a:?} -> {b:?}: reflection at {} sends the lower end to {:?}",
                rs.root_name(alpha),
                image.coords()
            ));
        }
    }
    Ok(report.finish())
}

/// Right weak order on a Cayley ball, with true graph distances.
struct WeakOrderBall {
    elements: Vec<AffineElement>,
    dist: Vec<usize>,
    index: HashMap<AffineElement, usize>,
}

fn weak_order_ball(rs: &RootSystem, radius: usize) -> Result<WeakOrderBall> {
    let gens = generators(rs);
    let e = AffineElement::identity(rs.rank());
    let mut elements = vec![e.clone()];
    let mut dist = vec![0usize];
    let mut index = HashMap::new();
    index.insert(e, 0usize);
    let mut head = 0;
    while head < elements.len() {
        let (w, d) = (elements[head].clone(), dist[head]);
        head += 1;
        if d == radius {
            continue;
        }
        for g in &gens {
            let next = w.compose(g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
                dist.push(d + 1);
            }
        }
    }
    Ok(WeakOrderBall {
        elements,
        dist,
        index,
    })
}

/// Verifies that the weak-order interval [e, w_top] is exactly the set of
/// polytope alcoves and carries the componentwise order.
///
/// Builds the Cayley ball of radius ℓ(top) with true BFS distances, peels
/// the down-set of w_top through weak-order covers (v ⋗ u iff v = u·s at
/// distance + 1), and compares both the element set and the order against
/// the admitted poset.
pub fn check_weak_order_interval(rs: &RootSystem, p: &ComponentPoset) -> Result<CheckReport> {
    check_weak_order_interval_with_budget(
        rs,
        p,
        env_budget(INTERVAL_BUDGET_ENV, DEFAULT_INTERVAL_BUDGET),
    )
}

/// Interval check with an explicit ceiling on ℓ(top).
pub fn check_weak_order_interval_with_budget(
    rs: &RootSystem,
    p: &ComponentPoset,
    budget: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("interval");
    let radius: usize = top_candidate(rs).iter().map(|&c| c as usize).sum();
    if radius > budget {
        return Err(Error::Capacity(format!(
            "ℓ(top) = {radius} for {} exceeds the interval budget of {budget}",
            rs.cartan_type()
        )));
    }
    let ball = weak_order_ball(rs, radius)?;
    let gens = generators(rs);

    let top_coords = top_candidate(rs);
    let mut top_idx = None;
    for (i, w) in ball.elements.iter().enumerate() {
        if w.shi_vector(rs)? == top_coords {
            top_idx = Some(i);
            break;
        }
    }
    let Some(top_idx) = top_idx else {
        report.witnesses.push(format!(
            "no element with Shi vector {top_coords:?} in the radius-{radius} ball"
        ));
        return Ok(report.finish());
    };

    // down-set peel: u belongs iff some chain of weak covers ascends to top
    let mut in_interval = vec![false; ball.elements.len()];
    in_interval[top_idx] = true;
    let mut stack = vec![top_idx];
    while let Some(v) = stack.pop() {
        for g in &gens {
            let u = ball.elements[v].compose(g);
            if let Some(&ui) = ball.index.get(&u) {
                if ball.dist[ui] + 1 == ball.dist[v] && !in_interval[ui] {
                    in_interval[ui] = true;
                    stack.push(ui);
                }
            }
        }
    }
    let interval: Vec<usize> = (0..ball.elements.len())
        .filter(|&i| in_interval[i])
        .collect();
    report.checked = interval.len() as u64;

    // the interval must biject onto the admitted set through Shi vectors
    let mut by_vector: HashMap<Vec<i64>, usize> = HashMap::new();
    for &i in &interval {
        let k = ball.elements[i].shi_vector(rs)?;
        if by_vector.insert(k.clone(), i).is_some() {
            report
                .witnesses
                .push(format!("two interval elements share the Shi vector {k:?}"));
        }
    }
    let admitted: HashSet<Vec<i64>> = p.elements().iter().map(|v| v.coords().to_vec()).collect();
    let found: HashSet<Vec<i64>> = by_vector.keys().cloned().collect();
    for k in admitted.difference(&found) {
        report
            .witnesses
            .push(format!("admitted vector {k:?} missing from the interval"));
    }
    for k in found.difference(&admitted) {
        report.witnesses.push(format!(
            "interval element with non-admitted Shi vector {k:?}"
        ));
    }
    if !report.witnesses.is_empty() {
        return Ok(report.finish());
    }

    // weak order within the interval = transitive closure of its cover edges
    let size = interval.len();
    let pos: HashMap<usize, usize> = interval.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let mut reach = vec![vec![false; size]; size];
    for (a, &i) in interval.iter().enumerate() {
        reach[a][a] = true;
        for g in &gens {
            let v = ball.elements[i].compose(g);
            if let Some(&vi) = ball.index.get(&v) {
                if in_interval[vi] && ball.dist[vi] == ball.dist[i] + 1 {
                    reach[a][pos[&vi]] = true;
                }
            }
        }
    }
    for mid in 0..size {
        // snapshot is safe: OR-ing a row into itself is a no-op
        let via = reach[mid].clone();
        for row in reach.iter_mut() {
            if row[mid] {
                row.iter_mut().zip(&via).for_each(|(t, &s)| *t = *t || s);
            }
        }
    }
    for a in 0..size {
        let ka = ball.elements[interval[a]].shi_vector(rs)?;
        let ia = p
            .index_of(&AdmittedVector::from_full(rs, ka)?)
            .expect("verified above");
        for b in 0..size {
            let kb = ball.elements[interval[b]].shi_vector(rs)?;
            let ib = p
                .index_of(&AdmittedVector::from_full(rs, kb)?)
                .expect("verified above");
            if reach[a][b] != p.leq(ia, ib) {
                report.witnesses.push(format!(
                    "order mismatch between {:?} and {:?}: weak order says {}, componentwise says {}",
                    p.element(ia).coords(),
                    p.element(ib).coords(),
                    reach[a][b],
                    p.leq(ia, ib)
                ));
            }
        }
    }
    Ok(report.finish())
}
