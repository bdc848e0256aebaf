//! The ten shapes a two-point `K̄`-category (equivalently a two-index
//! extended L-convex set) can take, and a text rendering of such sets.

use std::fmt;

use crate::enriched_cat::{validate_category, ValidationReport, VCategory};
use crate::error::{Error, Result};
use crate::lconvex::{grid_values, member, LConvexSet, PointVector};
use crate::matrix::SquareMatrix;
use crate::scalar_algebra::{ExtScalar, Kbar, Scalar};

type Ext<K> = ExtScalar<K>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    WholePlane,
    HalfPlane,
    Band,
    OrthogonalLines,
    ParallelLines,
    LineAndPointF,
    LineAndPointG,
    FourPoints,
    ThreePoints,
    TwoPoints,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::WholePlane,
        Family::HalfPlane,
        Family::Band,
        Family::OrthogonalLines,
        Family::ParallelLines,
        Family::LineAndPointF,
        Family::LineAndPointG,
        Family::FourPoints,
        Family::ThreePoints,
        Family::TwoPoints,
    ];

    /// Shape letter, `a` through `j`.
    pub fn letter(self) -> char {
        (b'a' + Family::ALL.iter().position(|&f| f == self).unwrap() as u8) as char
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::WholePlane => "WholePlane",
            Family::HalfPlane => "HalfPlane",
            Family::Band => "Band",
            Family::OrthogonalLines => "OrthogonalLines",
            Family::ParallelLines => "ParallelLines",
            Family::LineAndPointF => "LineAndPoint(f)",
            Family::LineAndPointG => "LineAndPoint(g)",
            Family::FourPoints => "FourPoints",
            Family::ThreePoints => "ThreePoints",
            Family::TwoPoints => "TwoPoints",
        };
        f.write_str(s)
    }
}

/// A family together with its finite parameters, in canonical orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoPointShape<K> {
    WholePlane,
    HalfPlane { s: K },
    /// `s + t ≥ 0`.
    Band { s: K, t: K },
    OrthogonalLines,
    ParallelLines,
    LineAndPointF,
    LineAndPointG,
    FourPoints,
    ThreePoints,
    TwoPoints,
}

impl<K: Scalar> TwoPointShape<K> {
    pub fn family(&self) -> Family {
        match self {
            TwoPointShape::WholePlane => Family::WholePlane,
            TwoPointShape::HalfPlane { .. } => Family::HalfPlane,
            TwoPointShape::Band { .. } => Family::Band,
            TwoPointShape::OrthogonalLines => Family::OrthogonalLines,
            TwoPointShape::ParallelLines => Family::ParallelLines,
            TwoPointShape::LineAndPointF => Family::LineAndPointF,
            TwoPointShape::LineAndPointG => Family::LineAndPointG,
            TwoPointShape::FourPoints => Family::FourPoints,
            TwoPointShape::ThreePoints => Family::ThreePoints,
            TwoPointShape::TwoPoints => Family::TwoPoints,
        }
    }

    /// The labelled matrix `[[d(v,v), d(v,w)], [d(w,v), d(w,w)]]` of the shape.
    pub fn matrix(&self) -> SquareMatrix<Ext<K>> {
        use ExtScalar::{NegInf as N, PosInf as P};
        let z = Ext::zero();
        let rows = match *self {
            TwoPointShape::WholePlane => [[z, P], [P, z]],
            TwoPointShape::HalfPlane { s } => [[z, Ext::Fin(s)], [P, z]],
            TwoPointShape::Band { s, t } => [[z, Ext::Fin(s)], [Ext::Fin(t), z]],
            TwoPointShape::OrthogonalLines => [[z, N], [P, z]],
            TwoPointShape::ParallelLines => [[z, P], [P, N]],
            TwoPointShape::LineAndPointF => [[z, N], [P, N]],
            TwoPointShape::LineAndPointG => [[z, P], [N, N]],
            TwoPointShape::FourPoints => [[N, P], [P, N]],
            TwoPointShape::ThreePoints => [[N, N], [P, N]],
            TwoPointShape::TwoPoints => [[N, N], [N, N]],
        };
        SquareMatrix::from_fn(2, |i, j| rows[i][j])
    }

    /// Matches `m` against the canonical patterns without swapping indices.
    pub fn match_exact(m: &SquareMatrix<Ext<K>>) -> Option<Self> {
        use ExtScalar::{Fin as F, NegInf as N, PosInf as P};
        let z = K::zero();
        let shape = match (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]) {
            (F(a), P, P, F(d)) if a == z && d == z => TwoPointShape::WholePlane,
            (F(a), F(s), P, F(d)) if a == z && d == z => TwoPointShape::HalfPlane { s },
            (F(a), F(s), F(t), F(d)) if a == z && d == z => {
                let sum = s.checked_add(t)?;
                if sum < z {
                    return None;
                }
                TwoPointShape::Band { s, t }
            }
            (F(a), N, P, F(d)) if a == z && d == z => TwoPointShape::OrthogonalLines,
            (F(a), P, P, N) if a == z => TwoPointShape::ParallelLines,
            (F(a), N, P, N) if a == z => TwoPointShape::LineAndPointF,
            (F(a), P, N, N) if a == z => TwoPointShape::LineAndPointG,
            (N, P, P, N) => TwoPointShape::FourPoints,
            (N, N, P, N) => TwoPointShape::ThreePoints,
            (N, N, N, N) => TwoPointShape::TwoPoints,
            _ => return None,
        };
        Some(shape)
    }
}

impl<K: Scalar> fmt::Display for TwoPointShape<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoPointShape::HalfPlane { s } => write!(f, "HalfPlane s={s}"),
            TwoPointShape::Band { s, t } => write!(f, "Band s={s} t={t}"),
            other => write!(f, "{}", other.family()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification<K> {
    pub shape: TwoPointShape<K>,
    /// The indices had to be exchanged to reach the canonical orientation.
    pub swapped: bool,
}

impl<K: Scalar> fmt::Display for Classification<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)?;
        if self.swapped {
            write!(f, " (indices swapped)")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoPointClass<K> {
    Valid(Classification<K>),
    Invalid(ValidationReport<Ext<K>>),
    /// Valid, yet no family fits. Never produced if the ten shapes are
    /// exhaustive; kept so that a counterexample would surface.
    Unmatched,
}

fn swap<K: Scalar>(m: &SquareMatrix<Ext<K>>) -> SquareMatrix<Ext<K>> {
    m.pullback(&[1, 0])
}

/// Checks the laws, then matches `m` or its index swap against the ten
/// canonical patterns. When both orientations fit (a band with `s ≠ t`), the
/// lexicographically smaller matrix wins, so bands come out with `s ≤ t`.
pub fn classify_two_point<K: Scalar>(m: &SquareMatrix<Ext<K>>) -> Result<TwoPointClass<K>> {
    if m.size() != 2 {
        return Err(Error::Dimension {
            rows: m.size(),
            cols: m.size(),
            labels: 2,
        });
    }
    let c = VCategory::new(Kbar::<K>::new(), vec!["v".into(), "w".into()], m.clone())?;
    let report = validate_category(&c)?;
    if !report.is_valid() {
        return Ok(TwoPointClass::Invalid(report));
    }
    let swapped_m = swap(m);
    let straight = TwoPointShape::match_exact(m);
    let swapped = TwoPointShape::match_exact(&swapped_m);
    let class = match (straight, swapped) {
        (Some(a), Some(b)) => {
            if swapped_m.entries() < m.entries() {
                Classification { shape: b, swapped: true }
            } else {
                Classification { shape: a, swapped: false }
            }
        }
        (Some(a), None) => Classification { shape: a, swapped: false },
        (None, Some(b)) => Classification { shape: b, swapped: true },
        (None, None) => return Ok(TwoPointClass::Unmatched),
    };
    Ok(TwoPointClass::Valid(class))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub bound: i64,
    pub total: usize,
    pub valid: usize,
    pub invalid: usize,
    /// Valid matrices per family, in letter order.
    pub counts: Vec<(Family, usize)>,
    /// Matrices where validity and family membership disagree, or where
    /// more than one family fits.
    pub anomalies: Vec<String>,
}

impl PartitionReport {
    pub fn is_partition(&self) -> bool {
        self.anomalies.is_empty() && self.counts.iter().map(|c| c.1).sum::<usize>() == self.valid
    }
}

impl fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bound {}: {} matrices, {} valid, {} invalid",
            self.bound, self.total, self.valid, self.invalid
        )?;
        for (family, count) in &self.counts {
            writeln!(f, "  ({}) {:<16} {count}", family.letter(), family.to_string())?;
        }
        write!(f, "anomalies: {}", self.anomalies.len())?;
        for a in &self.anomalies {
            write!(f, "\n  {a}")?;
        }
        Ok(())
    }
}

/// Runs every 2×2 matrix over [`grid_values`] through the classifier and
/// checks that valid matrices fall in exactly one family and invalid ones in
/// none.
pub fn exhaustive_partition(bound: i64) -> Result<PartitionReport> {
    let g = grid_values(bound);
    let mut counts: Vec<(Family, usize)> = Family::ALL.iter().map(|&f| (f, 0)).collect();
    let mut report = PartitionReport {
        bound,
        total: 0,
        valid: 0,
        invalid: 0,
        counts: Vec::new(),
        anomalies: Vec::new(),
    };
    for &a in &g {
        for &b in &g {
            for &c in &g {
                for &d in &g {
                    let m = SquareMatrix::from_fn(2, |i, j| [[a, b], [c, d]][i][j]);
                    report.total += 1;
                    let mut fits: Vec<Family> = [TwoPointShape::match_exact(&m), TwoPointShape::match_exact(&swap(&m))]
                        .into_iter()
                        .flatten()
                        .map(|s| s.family())
                        .collect();
                    fits.dedup();
                    match classify_two_point(&m)? {
                        TwoPointClass::Valid(cl) => {
                            report.valid += 1;
                            counts[cl.shape.family() as usize].1 += 1;
                            if fits.len() != 1 {
                                report.anomalies.push(format!("{m} fits {fits:?}"));
                            }
                        }
                        TwoPointClass::Invalid(_) => {
                            report.invalid += 1;
                            if !fits.is_empty() {
                                report.anomalies.push(format!("invalid {m} fits {fits:?}"));
                            }
                        }
                        TwoPointClass::Unmatched => {
                            report.valid += 1;
                            report.anomalies.push(format!("valid {m} fits no family"));
                        }
                    }
                }
            }
        }
    }
    report.counts = counts;
    Ok(report)
}

/// Draws the members of a two-index set on the grid at `bound`. The first
/// index runs left to right and the second bottom to top, each from `-∞` to
/// `∞`. Members are `#`, or `*` on the `±∞` border; non-members are `.`.
pub fn render_region(d: &LConvexSet<i64>, bound: i64) -> Result<String> {
    if d.size() != 2 {
        return Err(Error::Arity {
            expected: 2,
            found: d.size(),
        });
    }
    let g = grid_values(bound);
    let mut out = format!(
        "bound {bound}, horizontal {}, vertical {}\n",
        d.index()[0],
        d.index()[1]
    );
    for &y in g.iter().rev() {
        for &x in &g {
            let p = PointVector::new(vec![x, y]);
            let glyph = if !member(d, &p)? {
                '.'
            } else if x.is_finite() && y.is_finite() {
                '#'
            } else {
                '*'
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    Ok(out)
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

    fn m(rows: [[E; 2]; 2]) -> SquareMatrix<E> {
        SquareMatrix::from_fn(2, |i, j| rows[i][j])
    }

    fn class(rows: [[E; 2]; 2]) -> Classification<i64> {
        match classify_two_point(&m(rows)).unwrap() {
            TwoPointClass::Valid(c) => c,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(class([[n(0), INF], [INF, n(0)]]).shape, TwoPointShape::WholePlane);
        let band = class([[n(0), n(1)], [n(2), n(0)]]);
        assert_eq!(band.shape, TwoPointShape::Band { s: 1, t: 2 });
        assert!(!band.swapped);
        assert_eq!(band.to_string(), "Band s=1 t=2");
        assert_eq!(class([[NINF, NINF], [NINF, NINF]]).shape, TwoPointShape::TwoPoints);
    }

    #[test]
    fn swapped_orientations() {
        let c = class([[n(0), INF], [n(3), n(0)]]);
        assert_eq!(c.shape, TwoPointShape::HalfPlane { s: 3 });
        assert!(c.swapped);
        assert_eq!(c.to_string(), "HalfPlane s=3 (indices swapped)");
        let c = class([[n(0), n(2)], [n(1), n(0)]]);
        assert_eq!(c.shape, TwoPointShape::Band { s: 1, t: 2 });
        assert!(c.swapped);
        // the line-and-point example with the zero on the second index
        let c = class([[NINF, NINF], [INF, n(0)]]);
        assert_eq!(c.shape, TwoPointShape::LineAndPointG);
        assert!(c.swapped);
    }

    #[test]
    fn shapes_reproduce_their_matrices() {
        let shapes = [
            TwoPointShape::WholePlane,
            TwoPointShape::HalfPlane { s: -2 },
            TwoPointShape::Band { s: -1, t: 3 },
            TwoPointShape::OrthogonalLines,
            TwoPointShape::ParallelLines,
            TwoPointShape::LineAndPointF,
            TwoPointShape::LineAndPointG,
            TwoPointShape::FourPoints,
            TwoPointShape::ThreePoints,
            TwoPointShape::TwoPoints,
        ];
        for s in shapes {
            let c = match classify_two_point(&s.matrix()).unwrap() {
                TwoPointClass::Valid(c) => c,
                other => panic!("{s}: {other:?}"),
            };
            assert_eq!(c.shape, s);
            assert!(!c.swapped);
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            classify_two_point(&m([[n(1), INF], [INF, n(0)]])).unwrap(),
            TwoPointClass::Invalid(_)
        ));
        assert!(matches!(
            classify_two_point(&m([[n(0), n(-2)], [n(1), n(0)]])).unwrap(),
            TwoPointClass::Invalid(_)
        ));
        assert!(classify_two_point(&SquareMatrix::filled(3, n(0))).is_err());
    }

    #[test]
    fn partition_at_bound_one() {
        let r = exhaustive_partition(1).unwrap();
        assert_eq!(r.total, 625);
        assert!(r.is_partition(), "{r}");
        assert!(r.counts.iter().all(|c| c.1 > 0));
    }

    #[test]
    fn renders() {
        let lcs = |rows: [[E; 2]; 2]| LConvexSet::from_rows(["v", "w"], rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        let plane = render_region(&lcs([[n(0), INF], [INF, n(0)]]), 1).unwrap();
        assert_eq!(
            plane,
            "bound 1, horizontal v, vertical w\n*****\n*###*\n*###*\n*###*\n*****\n"
        );
        let two = render_region(&lcs([[NINF, NINF], [NINF, NINF]]), 1).unwrap();
        assert_eq!(two.matches('*').count(), 2);
        assert_eq!(two.matches('#').count(), 0);
        let band = render_region(&lcs([[n(0), n(1)], [n(1), n(0)]]), 2).unwrap();
        let body: Vec<&str> = band.lines().skip(1).collect();
        assert_eq!(body[0], "......*");
        assert_eq!(body[6], "*......");
        assert_eq!(body[3], "..###..");
        assert_eq!(band.matches('#').count(), 13);
    }
}
