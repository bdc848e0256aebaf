//! `K̄`-extended L-convex sets, stored as difference-bound matrices.
//!
//! A set with matrix `d` has members
//! `{ p ∈ K̄^ind | d[v][w] ≥ p(w) − p(v) for all v, w }`.

use std::fmt;

use crate::enriched_cat::{validate_category, VCategory};
use crate::error::{Error, Result};
use crate::matrix::{check_labels, position, SquareMatrix};
use crate::scalar_algebra::{ext_add, ext_inf, ext_sub, ext_sup, ExtScalar, Kbar, Scalar, ScalarKind};

type Ext<K> = ExtScalar<K>;

/// An extended L-convex set in canonical matrix form. The matrix always
/// satisfies the triangle inequality and `d[v][v] ≤ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LConvexSet<K: Scalar> {
    index: Vec<String>,
    dbm: SquareMatrix<Ext<K>>,
}

impl<K: Scalar> LConvexSet<K> {
    pub fn new(index: Vec<String>, dbm: SquareMatrix<Ext<K>>) -> Result<Self> {
        check_labels(&index, dbm.size())?;
        let c = VCategory::new(Kbar::<K>::new(), index, dbm)?;
        let report = validate_category(&c)?;
        if !report.is_valid() {
            return Err(Error::InvalidCategory(report.to_string()));
        }
        Ok(LConvexSet {
            index: c.objects().to_vec(),
            dbm: c.hom_matrix().clone(),
        })
    }

    pub fn from_rows<S: Into<String>>(
        index: impl IntoIterator<Item = S>,
        rows: Vec<Vec<Ext<K>>>,
    ) -> Result<Self> {
        let index = index.into_iter().map(Into::into).collect();
        Self::new(index, SquareMatrix::from_rows(rows)?)
    }

    /// `K̄^ind` itself.
    pub fn whole(index: Vec<String>) -> Result<Self> {
        let n = index.len();
        let dbm = SquareMatrix::from_fn(n, |i, j| if i == j { Ext::zero() } else { Ext::PosInf });
        Self::new(index, dbm)
    }

    pub fn kind(&self) -> ScalarKind {
        K::KIND
    }

    pub fn index(&self) -> &[String] {
        &self.index
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn dbm(&self) -> &SquareMatrix<Ext<K>> {
        &self.dbm
    }

    pub fn entry(&self, v: usize, w: usize) -> Ext<K> {
        self.dbm[(v, w)]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        position(&self.index, label)
    }

    pub fn to_constraints(&self) -> RawConstraints<K> {
        RawConstraints {
            index: self.index.clone(),
            c: self.dbm.clone(),
        }
    }
}

impl<K: Scalar> fmt::Display for LConvexSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L-convex set on ({}): {}", self.index.join(","), self.dbm)
    }
}

/// A point of `K̄^ind`, coordinates in index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointVector<K> {
    coords: Vec<Ext<K>>,
}

impl<K: Scalar> PointVector<K> {
    pub fn new(coords: Vec<Ext<K>>) -> Self {
        PointVector { coords }
    }

    pub fn constant(n: usize, value: Ext<K>) -> Self {
        PointVector {
            coords: vec![value; n],
        }
    }

    /// Builds a point from `label=value` pairs covering `index` exactly.
    pub fn from_assignment(index: &[String], pairs: &[(&str, Ext<K>)]) -> Result<Self> {
        let mut coords = vec![None; index.len()];
        for &(label, v) in pairs {
            let i = position(index, label)?;
            if coords[i].replace(v).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::MissingLabel(index[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointVector { coords })
    }

    pub fn coords(&self) -> &[Ext<K>] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, v: usize) -> Ext<K> {
        self.coords[v]
    }
}

impl PointVector<i64> {
    pub fn ints(values: &[i64]) -> Self {
        PointVector {
            coords: values.iter().map(|&v| Ext::Fin(v)).collect(),
        }
    }
}

impl<K: Scalar> fmt::Display for PointVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A square constraint matrix with no law requirement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawConstraints<K: Scalar> {
    index: Vec<String>,
    c: SquareMatrix<Ext<K>>,
}

impl<K: Scalar> RawConstraints<K> {
    pub fn new(index: Vec<String>, c: SquareMatrix<Ext<K>>) -> Result<Self> {
        check_labels(&index, c.size())?;
        Ok(RawConstraints { index, c })
    }

    pub fn from_rows<S: Into<String>>(index: impl IntoIterator<Item = S>, rows: Vec<Vec<Ext<K>>>) -> Result<Self> {
        let index = index.into_iter().map(Into::into).collect();
        Self::new(index, SquareMatrix::from_rows(rows)?)
    }

    pub fn index(&self) -> &[String] {
        &self.index
    }

    pub fn matrix(&self) -> &SquareMatrix<Ext<K>> {
        &self.c
    }

    /// The constraints with each diagonal entry replaced by `min(c[v][v], 0)`.
    pub fn clamp_diagonal(&self) -> RawConstraints<K> {
        let mut c = self.c.clone();
        for v in 0..c.size() {
            c[(v, v)] = c[(v, v)].min(Ext::zero());
        }
        RawConstraints {
            index: self.index.clone(),
            c,
        }
    }

    /// Whether `p` satisfies every entry of the matrix as it stands.
    pub fn satisfied_by(&self, p: &PointVector<K>) -> Result<bool> {
        satisfies(&self.c, p)
    }
}

/// A finite list of points over a common index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet<K: Scalar> {
    index: Vec<String>,
    points: Vec<PointVector<K>>,
}

impl<K: Scalar> GeneratorSet<K> {
    pub fn new(index: Vec<String>, points: Vec<PointVector<K>>) -> Result<Self> {
        check_labels(&index, index.len())?;
        for p in &points {
            check_arity(index.len(), p)?;
        }
        Ok(GeneratorSet { index, points })
    }

    pub fn index(&self) -> &[String] {
        &self.index
    }

    pub fn points(&self) -> &[PointVector<K>] {
        &self.points
    }
}

fn check_arity<K>(expected: usize, p: &PointVector<K>) -> Result<()> {
    if p.coords.len() != expected {
        return Err(Error::Arity {
            expected,
            found: p.coords.len(),
        });
    }
    Ok(())
}

fn satisfies<K: Scalar>(d: &SquareMatrix<Ext<K>>, p: &PointVector<K>) -> Result<bool> {
    check_arity(d.size(), p)?;
    for v in 0..d.size() {
        for w in 0..d.size() {
            if ext_sub(p.get(w), p.get(v))? > d[(v, w)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d[v][w] ≥ p(w) − p(v)` for every ordered pair.
pub fn member<K: Scalar>(d: &LConvexSet<K>, p: &PointVector<K>) -> Result<bool> {
    satisfies(&d.dbm, p)
}

/// The smallest extended L-convex set containing `s`:
/// `d[v][w] = max_{p ∈ s} (p(w) − p(v))`, all `-∞` for empty `s`.
pub fn from_generators<K: Scalar>(s: &GeneratorSet<K>) -> Result<LConvexSet<K>> {
    let n = s.index.len();
    let mut dbm = SquareMatrix::filled(n, Ext::NegInf);
    for p in &s.points {
        for v in 0..n {
            for w in 0..n {
                let diff = ext_sub(p.get(w), p.get(v))?;
                if diff > dbm[(v, w)] {
                    dbm[(v, w)] = diff;
                }
            }
        }
    }
    LConvexSet::new(s.index.clone(), dbm)
}

fn magnitude<K: Scalar>(x: K) -> Result<K> {
    if x < K::zero() {
        K::zero().checked_sub(x).ok_or(Error::Overflow { op: "closure bound" })
    } else {
        Ok(x)
    }
}

fn times<K: Scalar>(x: K, n: usize) -> Result<K> {
    let mut acc = K::zero();
    for _ in 0..n {
        acc = acc.checked_add(x).ok_or(Error::Overflow { op: "closure bound" })?;
    }
    Ok(acc)
}

fn relax<K: Scalar>(d: &mut SquareMatrix<Ext<K>>, floor: Ext<K>) -> Result<()> {
    let n = d.size();
    for k in 0..n {
        for u in 0..n {
            let uk = d[(u, k)];
            if uk == Ext::PosInf {
                continue;
            }
            for w in 0..n {
                let mut via = ext_add(uk, d[(k, w)])?;
                if via < floor {
                    via = Ext::NegInf;
                }
                if via < d[(u, w)] {
                    d[(u, w)] = via;
                }
            }
        }
    }
    Ok(())
}

/// The largest law-satisfying matrix below the diagonal-clamped constraints.
/// It has the same feasible set as the clamped constraints, and entries
/// reachable through a negative cycle become `-∞`.
///
/// Relaxation uses `ext_add`, so a path through an `∞` entry never tightens
/// anything. Finite values below `-n·M` (with `M` the largest finite
/// magnitude) can only come from negative cycles and are saturated to `-∞`
/// on the spot, which keeps intermediate values bounded.
pub fn closure<K: Scalar>(c: &RawConstraints<K>) -> Result<LConvexSet<K>> {
    let mut d = c.clamp_diagonal().c;
    let n = d.size();
    let mut m = K::zero();
    for (_, x) in d.iter_indexed() {
        if let Some(v) = x.finite() {
            m = m.max(magnitude(v)?);
        }
    }
    // every intermediate sum stays within (2n+2)·M
    times(m, 2 * n + 2)?;
    let floor = Ext::Fin(K::zero().checked_sub(times(m, n)?).ok_or(Error::Overflow { op: "closure bound" })?);

    relax(&mut d, floor)?;
    let negative: Vec<usize> = (0..n).filter(|&v| d[(v, v)] < Ext::zero()).collect();
    for &v in &negative {
        for u in 0..n {
            if d[(u, v)] == Ext::PosInf {
                continue;
            }
            for w in 0..n {
                if d[(v, w)] != Ext::PosInf {
                    d[(u, w)] = Ext::NegInf;
                }
            }
        }
    }
    relax(&mut d, floor)?;
    LConvexSet::new(c.index.clone(), d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shift {
    Plus,
    Minus,
}

/// `p + α·1` or `p − α·1`, coordinatewise in `K̄`.
pub fn weight_shift<K: Scalar>(p: &PointVector<K>, alpha: Ext<K>, sign: Shift) -> Result<PointVector<K>> {
    let coords = p
        .coords
        .iter()
        .map(|&x| match sign {
            Shift::Plus => ext_add(x, alpha),
            Shift::Minus => ext_sub(x, alpha),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PointVector { coords })
}

fn coordinatewise<K: Scalar>(
    n: usize,
    points: &[PointVector<K>],
    op: fn(Vec<Ext<K>>) -> Ext<K>,
) -> Result<PointVector<K>> {
    for p in points {
        check_arity(n, p)?;
    }
    let coords = (0..n).map(|v| op(points.iter().map(|p| p.get(v)).collect())).collect();
    Ok(PointVector { coords })
}

/// Coordinatewise `⋁` (the usual minimum); all `∞` when `points` is empty.
pub fn point_sup<K: Scalar>(n: usize, points: &[PointVector<K>]) -> Result<PointVector<K>> {
    coordinatewise(n, points, ext_sup)
}

/// Coordinatewise `⋀` (the usual maximum); all `-∞` when `points` is empty.
pub fn point_inf<K: Scalar>(n: usize, points: &[PointVector<K>]) -> Result<PointVector<K>> {
    coordinatewise(n, points, ext_inf)
}

/// The rows `p_v = λw. d[v][w]`, one per index.
pub fn canonical_points<K: Scalar>(d: &LConvexSet<K>) -> Vec<PointVector<K>> {
    d.dbm
        .rows()
        .map(|r| PointVector { coords: r.to_vec() })
        .collect()
}

/// `{-∞} ∪ [-bound, bound] ∪ {∞}` in ascending order.
pub fn grid_values(bound: i64) -> Vec<Ext<i64>> {
    let mut g = vec![Ext::NegInf];
    g.extend((-bound..=bound).map(Ext::Fin));
    g.push(Ext::PosInf);
    g
}

/// Calls `visit` on every point of the grid over `n` coordinates, in
/// lexicographic order.
pub fn for_each_grid_point(n: usize, bound: i64, mut visit: impl FnMut(&PointVector<i64>)) {
    let g = grid_values(bound);
    let mut digits = vec![0usize; n];
    let mut p = PointVector::constant(n, g[0]);
    loop {
        visit(&p);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < g.len() {
                p.coords[i] = g[digits[i]];
                break;
            }
            digits[i] = 0;
            p.coords[i] = g[0];
        }
    }
}

/// Every member with coordinates in [`grid_values`], lexicographically.
/// Integer sets only; the grid has `(2·bound+3)^n` points.
pub fn grid_members(d: &LConvexSet<i64>, bound: i64) -> Vec<PointVector<i64>> {
    let mut out = Vec::new();
    for_each_grid_point(d.size(), bound, |p| {
        // grid values are small, so the subtraction cannot overflow
        if member(d, p).unwrap_or(false) {
            out.push(p.clone());
        }
    });
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Neg,
    Fin,
    Pos,
}

/// Constraint-side view of one matrix under a fixed infinity pattern.
struct Pattern<'a> {
    d: &'a SquareMatrix<Ext<i64>>,
    parts: &'a [Part],
}

impl Pattern<'_> {
    /// The pairs not involving two finite coordinates.
    fn static_ok(&self) -> bool {
        let n = self.d.size();
        for v in 0..n {
            for w in 0..n {
                let forced_inf = match (self.parts[v], self.parts[w]) {
                    (Part::Pos, _) | (_, Part::Neg) => false,
                    (Part::Neg, _) => true,
                    (Part::Fin, Part::Pos) => true,
                    (Part::Fin, Part::Fin) => false,
                };
                if forced_inf && self.d[(v, w)] != Ext::PosInf {
                    return false;
                }
            }
        }
        true
    }

    /// Edges `v → w` of weight `d[v][w]` encoding `x(w) − x(v) ≤ d[v][w]`,
    /// or `None` if some finite pair has entry `-∞`.
    fn edges(&self) -> Option<Vec<(usize, usize, i128)>> {
        let n = self.d.size();
        let mut out = Vec::new();
        for v in 0..n {
            for w in 0..n {
                if self.parts[v] != Part::Fin || self.parts[w] != Part::Fin {
                    continue;
                }
                match self.d[(v, w)] {
                    Ext::PosInf => {}
                    Ext::NegInf => return None,
                    Ext::Fin(x) => out.push((v, w, x as i128)),
                }
            }
        }
        Some(out)
    }

    /// Each way a point with this pattern can violate a finite pair:
    /// `None` for a pair that any finite values violate, otherwise the
    /// reversed edge `w → v` of weight `-(d[v][w] + 1)`.
    fn violations(&self) -> Vec<Option<(usize, usize, i128)>> {
        let n = self.d.size();
        let mut out = Vec::new();
        for v in 0..n {
            for w in 0..n {
                if self.parts[v] != Part::Fin || self.parts[w] != Part::Fin {
                    continue;
                }
                match self.d[(v, w)] {
                    Ext::PosInf => {}
                    Ext::NegInf => out.push(None),
                    Ext::Fin(x) => out.push(Some((w, v, -(x as i128) - 1))),
                }
            }
        }
        out
    }
}

/// Integer solution of `x(w) − x(v) ≤ c` for every edge `(v, w, c)` with
/// `|x| ≤ bound`, by Bellman–Ford from an extra zero node.
fn solve_differences(n: usize, edges: &[(usize, usize, i128)], bound: i64) -> Option<Vec<i64>> {
    let z = n;
    let mut all: Vec<(usize, usize, i128)> = edges.to_vec();
    for v in 0..n {
        all.push((z, v, bound as i128));
        all.push((v, z, bound as i128));
    }
    let mut dist = vec![i128::MAX; n + 1];
    dist[z] = 0;
    for _ in 0..=n {
        let mut changed = false;
        for &(a, b, c) in &all {
            if dist[a] != i128::MAX && dist[a] + c < dist[b] {
                dist[b] = dist[a] + c;
                changed = true;
            }
        }
        if !changed {
            return Some((0..n).map(|v| (dist[v] - dist[z]) as i64).collect());
        }
    }
    None
}

fn witness_one_side(
    keep: &Pattern<'_>,
    drop: &Pattern<'_>,
    bound: i64,
) -> Option<Vec<i64>> {
    if !keep.static_ok() {
        return None;
    }
    let base = keep.edges()?;
    let n = keep.d.size();
    if !drop.static_ok() {
        return solve_differences(n, &base, bound);
    }
    for v in drop.violations() {
        let mut edges = base.clone();
        edges.extend(v);
        if let Some(x) = solve_differences(n, &edges, bound) {
            return Some(x);
        }
    }
    None
}

/// A grid point (coordinates in [`grid_values`]) that is a member of exactly
/// one of `a` and `b`, compared positionally; `None` if their grid members
/// coincide. Exact, and polynomial in `bound` apart from the `3^n` infinity
/// patterns, so it scales to bounds where enumeration does not.
pub fn grid_difference_witness(
    a: &LConvexSet<i64>,
    b: &LConvexSet<i64>,
    bound: i64,
) -> Result<Option<PointVector<i64>>> {
    constraint_difference_witness(&a.dbm, &b.dbm, bound)
}

/// [`grid_difference_witness`] for arbitrary constraint matrices: a grid
/// point satisfying every entry of one matrix but not of the other.
pub fn constraint_difference_witness(
    a: &SquareMatrix<Ext<i64>>,
    b: &SquareMatrix<Ext<i64>>,
    bound: i64,
) -> Result<Option<PointVector<i64>>> {
    let n = a.size();
    if b.size() != n {
        return Err(Error::Arity {
            expected: n,
            found: b.size(),
        });
    }
    let mut parts = vec![Part::Neg; n];
    loop {
        let pa = Pattern { d: a, parts: &parts };
        let pb = Pattern { d: b, parts: &parts };
        let found = witness_one_side(&pa, &pb, bound).or_else(|| witness_one_side(&pb, &pa, bound));
        if let Some(x) = found {
            let coords = parts
                .iter()
                .zip(x)
                .map(|(part, v)| match part {
                    Part::Neg => Ext::NegInf,
                    Part::Fin => Ext::Fin(v),
                    Part::Pos => Ext::PosInf,
                })
                .collect();
            return Ok(Some(PointVector { coords }));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            parts[i] = match parts[i] {
                Part::Neg => Part::Fin,
                Part::Fin => Part::Pos,
                Part::Pos => Part::Neg,
            };
            if parts[i] != Part::Neg {
                break;
            }
        }
    }
}

/// Whether `a` and `b` have the same grid members at `bound`.
pub fn grid_equivalent(a: &LConvexSet<i64>, b: &LConvexSet<i64>, bound: i64) -> Result<bool> {
    Ok(grid_difference_witness(a, b, bound)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MurotaKind {
    /// Integer L-convex sets.
    LSet,
    /// Real L-convex polyhedra; topological closedness is not checked.
    LPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MurotaReport {
    pub nonempty: bool,
    pub meet_join_closed: bool,
    /// `p ± 1` is present whenever it lies in the bounding box of the list.
    pub translation_closed: bool,
    /// Always `false` for [`MurotaKind::LPoly`].
    pub closedness_checked: bool,
}

impl MurotaReport {
    pub fn holds(&self) -> bool {
        self.nonempty && self.meet_join_closed && self.translation_closed
    }
}

/// Classic L-convexity of an explicit finite point list, at toy scale.
pub fn murota_check<K: Scalar>(points: &[PointVector<K>], kind: MurotaKind) -> Result<MurotaReport> {
    let mut finite: Vec<Vec<K>> = Vec::with_capacity(points.len());
    for p in points {
        let row = p
            .coords
            .iter()
            .map(|c| c.finite().ok_or_else(|| Error::InfiniteCoordinate(p.to_string())))
            .collect::<Result<Vec<_>>>()?;
        finite.push(row);
    }
    if let Some(first) = finite.first() {
        for row in &finite {
            if row.len() != first.len() {
                return Err(Error::Arity {
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
    }
    let contains = |q: &[K]| finite.iter().any(|r| r.as_slice() == q);

    let mut meet_join_closed = true;
    'outer: for p in &finite {
        for q in &finite {
            let meet: Vec<K> = p.iter().zip(q).map(|(&a, &b)| a.min(b)).collect();
            let join: Vec<K> = p.iter().zip(q).map(|(&a, &b)| a.max(b)).collect();
            if !contains(&meet) || !contains(&join) {
                meet_join_closed = false;
                break 'outer;
            }
        }
    }

    let dim = finite.first().map_or(0, Vec::len);
    let lo: Vec<K> = (0..dim).map(|i| finite.iter().map(|r| r[i]).min().unwrap()).collect();
    let hi: Vec<K> = (0..dim).map(|i| finite.iter().map(|r| r[i]).max().unwrap()).collect();
    let one = K::from_i64(1);
    let mut translation_closed = true;
    'rows: for p in &finite {
        for step in [Shift::Plus, Shift::Minus] {
            let moved: Option<Vec<K>> = p
                .iter()
                .map(|&x| match step {
                    Shift::Plus => x.checked_add(one),
                    Shift::Minus => x.checked_sub(one),
                })
                .collect();
            let Some(moved) = moved else { continue };
            let inside = moved.iter().enumerate().all(|(i, &x)| lo[i] <= x && x <= hi[i]);
            if inside && !contains(&moved) {
                translation_closed = false;
                break 'rows;
            }
        }
    }

    Ok(MurotaReport {
        nonempty: !finite.is_empty(),
        meet_join_closed,
        translation_closed,
        closedness_checked: kind == MurotaKind::LSet,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Ext<i64>;
    const INF: E = Ext::PosInf;
    const NINF: E = Ext::NegInf;

    fn n(v: i64) -> E {
        Ext::Fin(v)
    }

    fn lcs(rows: Vec<Vec<E>>) -> LConvexSet<i64> {
        let labels = ["v", "w", "x", "y", "z"];
        let size = rows.len();
        LConvexSet::from_rows(labels[..size].iter().copied(), rows).unwrap()
    }

    fn raw(rows: Vec<Vec<E>>) -> RawConstraints<i64> {
        let labels = ["v", "w", "x", "y", "z"];
        let size = rows.len();
        RawConstraints::from_rows(labels[..size].iter().copied(), rows).unwrap()
    }

    fn pt(c: &[E]) -> PointVector<i64> {
        PointVector::new(c.to_vec())
    }

    #[test]
    fn membership_examples() {
        let band = lcs(vec![vec![n(0), n(1)], vec![n(1), n(0)]]);
        assert!(member(&band, &PointVector::ints(&[0, 1])).unwrap());
        assert!(!member(&band, &PointVector::ints(&[0, 2])).unwrap());
        let two = lcs(vec![vec![NINF, NINF], vec![NINF, NINF]]);
        assert!(member(&two, &pt(&[INF, INF])).unwrap());
        assert!(!member(&two, &pt(&[NINF, INF])).unwrap());
        assert!(matches!(member(&two, &pt(&[INF])), Err(Error::Arity { .. })));
    }

    #[test]
    fn invalid_matrices_are_rejected() {
        let r = LConvexSet::<i64>::from_rows(["v", "w"], vec![vec![n(0), n(1)], vec![n(-2), n(0)]]);
        assert!(matches!(r, Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn generator_examples() {
        let idx = vec!["v".to_string(), "w".to_string()];
        let s = GeneratorSet::new(idx.clone(), vec![PointVector::ints(&[0, 0]), PointVector::ints(&[1, 0])]).unwrap();
        assert_eq!(from_generators(&s).unwrap().dbm().to_rows(), vec![vec![n(0), n(0)], vec![n(1), n(0)]]);
        let s = GeneratorSet::new(idx.clone(), vec![]).unwrap();
        assert_eq!(from_generators(&s).unwrap().dbm().to_rows(), vec![vec![NINF, NINF], vec![NINF, NINF]]);
        let s = GeneratorSet::new(idx.clone(), vec![PointVector::ints(&[0, 0])]).unwrap();
        assert_eq!(from_generators(&s).unwrap().dbm().to_rows(), vec![vec![n(0), n(0)], vec![n(0), n(0)]]);
        assert!(GeneratorSet::new(idx, vec![PointVector::ints(&[0])]).is_err());
    }

    #[test]
    fn closure_examples() {
        let c = closure(&raw(vec![vec![n(0), n(-1)], vec![n(-1), n(0)]])).unwrap();
        assert_eq!(c.dbm().to_rows(), vec![vec![NINF, NINF], vec![NINF, NINF]]);
        assert_eq!(grid_members(&c, 3), vec![pt(&[NINF, NINF]), pt(&[INF, INF])]);

        let c = closure(&raw(vec![vec![n(0), n(3)], vec![n(4), n(0)]])).unwrap();
        assert_eq!(c.dbm().to_rows(), vec![vec![n(0), n(3)], vec![n(4), n(0)]]);

        let c = closure(&raw(vec![vec![n(0), n(1)], vec![n(1), n(5)]])).unwrap();
        assert_eq!(c.dbm().to_rows(), vec![vec![n(0), n(1)], vec![n(1), n(0)]]);
    }

    #[test]
    fn closure_collapses_only_what_a_cycle_reaches() {
        // x has a negative self-loop, v reaches it, w is cut off by ∞
        let c = closure(&raw(vec![
            vec![n(0), INF, n(2)],
            vec![INF, n(0), INF],
            vec![INF, INF, n(-1)],
        ]))
        .unwrap();
        assert_eq!(
            c.dbm().to_rows(),
            vec![vec![n(0), INF, NINF], vec![INF, n(0), INF], vec![INF, INF, NINF]]
        );
    }

    #[test]
    fn closure_never_overflows_on_long_negative_cycles() {
        let big = i64::MAX / 64;
        let m = SquareMatrix::from_fn(5, |i, j| if i == j { n(0) } else { n(-big) });
        let c = closure(&RawConstraints::new((0..5).map(|i| format!("v{i}")).collect(), m).unwrap()).unwrap();
        assert!(c.dbm().entries().iter().all(|&e| e == NINF));
        let huge = SquareMatrix::from_fn(2, |i, j| if i == j { n(0) } else { n(i64::MAX / 2) });
        assert!(matches!(
            closure(&RawConstraints::new(vec!["v".into(), "w".into()], huge).unwrap()),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn weight_shift_examples() {
        assert_eq!(weight_shift(&PointVector::ints(&[0, 1]), INF, Shift::Plus).unwrap(), pt(&[INF, INF]));
        assert_eq!(weight_shift(&pt(&[n(0), NINF]), NINF, Shift::Minus).unwrap(), pt(&[INF, NINF]));
        assert_eq!(weight_shift(&PointVector::ints(&[2, 5]), n(3), Shift::Plus).unwrap(), PointVector::ints(&[5, 8]));
    }

    #[test]
    fn sup_and_inf_examples() {
        let s = [PointVector::ints(&[0, 1]), PointVector::ints(&[1, 0])];
        assert_eq!(point_sup(2, &[]).unwrap(), pt(&[INF, INF]));
        assert_eq!(point_inf(2, &[]).unwrap(), pt(&[NINF, NINF]));
        assert_eq!(point_inf(2, &s).unwrap(), PointVector::ints(&[1, 1]));
        assert_eq!(point_sup(2, &s).unwrap(), PointVector::ints(&[0, 0]));
    }

    #[test]
    fn canonical_point_examples() {
        for rows in [
            vec![vec![n(0), n(3)], vec![n(4), n(0)]],
            vec![vec![NINF, NINF], vec![NINF, NINF]],
            vec![vec![n(0), INF], vec![INF, n(0)]],
        ] {
            let d = lcs(rows.clone());
            let pts = canonical_points(&d);
            assert_eq!(pts.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(), rows);
            for p in &pts {
                assert!(member(&d, p).unwrap());
            }
        }
    }

    #[test]
    fn grid_member_examples() {
        let d = lcs(vec![vec![NINF, NINF], vec![INF, n(0)]]);
        let got = grid_members(&d, 1);
        let want = vec![
            pt(&[NINF, NINF]),
            pt(&[INF, NINF]),
            pt(&[INF, n(-1)]),
            pt(&[INF, n(0)]),
            pt(&[INF, n(1)]),
            pt(&[INF, INF]),
        ];
        assert_eq!(got, want);

        let plane = lcs(vec![vec![n(0), INF], vec![INF, n(0)]]);
        assert_eq!(grid_members(&plane, 1).len(), 25);

        let cut = lcs(vec![vec![n(0), NINF], vec![INF, n(0)]]);
        for p in grid_members(&cut, 2) {
            assert!(!(p.get(0).is_finite() && p.get(1).is_finite()));
        }
    }

    #[test]
    fn grid_witness_agrees_with_enumeration_on_small_cases() {
        let sets = [
            lcs(vec![vec![n(0), n(1)], vec![n(1), n(0)]]),
            lcs(vec![vec![n(0), n(2)], vec![n(1), n(0)]]),
            lcs(vec![vec![n(0), INF], vec![INF, n(0)]]),
            lcs(vec![vec![n(0), NINF], vec![INF, n(0)]]),
            lcs(vec![vec![NINF, NINF], vec![INF, n(0)]]),
            lcs(vec![vec![NINF, NINF], vec![NINF, NINF]]),
            lcs(vec![vec![n(0), n(-1)], vec![n(1), n(0)]]),
        ];
        for a in &sets {
            for b in &sets {
                for bound in 0..3 {
                    let same = grid_members(a, bound) == grid_members(b, bound);
                    let w = grid_difference_witness(a, b, bound).unwrap();
                    assert_eq!(same, w.is_none(), "{a} vs {b} at {bound}");
                    if let Some(p) = w {
                        assert_ne!(member(a, &p).unwrap(), member(b, &p).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn murota_examples() {
        let yes = murota_check(&[PointVector::ints(&[0, 0]), PointVector::ints(&[1, 1])], MurotaKind::LSet).unwrap();
        assert!(yes.holds());
        let empty = murota_check::<i64>(&[], MurotaKind::LSet).unwrap();
        assert!(!empty.holds());
        let no = murota_check(
            &[PointVector::ints(&[0, 0]), PointVector::ints(&[1, 0]), PointVector::ints(&[0, 1])],
            MurotaKind::LSet,
        )
        .unwrap();
        assert!(!no.meet_join_closed);
        let poly = murota_check(&[PointVector::ints(&[0, 0])], MurotaKind::LPoly).unwrap();
        assert!(!poly.closedness_checked);
        assert!(matches!(
            murota_check(&[pt(&[INF, n(0)])], MurotaKind::LSet),
            Err(Error::InfiniteCoordinate(_))
        ));
    }
}
