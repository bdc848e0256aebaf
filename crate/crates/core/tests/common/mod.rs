//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use kbar_core::lconvex::closure;
use kbar_core::{ExtScalar, KCategory, Kbar, LConvexSet, RawConstraints, SquareMatrix, VCategory};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type E = ExtScalar<i64>;
pub const INF: E = ExtScalar::PosInf;
pub const NINF: E = ExtScalar::NegInf;

pub fn n(v: i64) -> E {
    ExtScalar::Fin(v)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn labels(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("x{i}")).collect()
}

/// `y − x` read straight off the extended subtraction table, in i128.
pub fn oracle_sub(y: E, x: E) -> Option<i128> {
    // None stands for -∞, Some(i128::MAX) for ∞
    const TOP: i128 = i128::MAX;
    match (x, y) {
        (ExtScalar::PosInf, _) => None,
        (_, ExtScalar::NegInf) => None,
        (ExtScalar::NegInf, _) => Some(TOP),
        (_, ExtScalar::PosInf) => Some(TOP),
        (ExtScalar::Fin(s), ExtScalar::Fin(t)) => Some(t as i128 - s as i128),
    }
}

/// `a ≥ b` for values in the `oracle_sub` encoding against a matrix entry.
fn entry_allows(entry: E, diff: Option<i128>) -> bool {
    match (entry, diff) {
        (_, None) => true,
        (ExtScalar::PosInf, _) => true,
        (ExtScalar::NegInf, Some(_)) => false,
        (ExtScalar::Fin(_), Some(i128::MAX)) => false,
        (ExtScalar::Fin(d), Some(x)) => d as i128 >= x,
    }
}

pub fn oracle_satisfies(m: &[Vec<E>], p: &[E]) -> bool {
    let size = m.len();
    (0..size).all(|v| (0..size).all(|w| entry_allows(m[v][w], oracle_sub(p[w], p[v]))))
}

pub fn grid(bound: i64) -> Vec<E> {
    let mut g = vec![NINF];
    g.extend((-bound..=bound).map(n));
    g.push(INF);
    g
}

/// Every grid point over `dim` coordinates, lexicographic.
pub fn grid_points(dim: usize, bound: i64) -> Vec<Vec<E>> {
    let g = grid(bound);
    let mut out = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * g.len());
        for p in &out {
            for &x in &g {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub fn brute_members(m: &[Vec<E>], bound: i64) -> Vec<Vec<E>> {
    grid_points(m.len(), bound)
        .into_iter()
        .filter(|p| oracle_satisfies(m, p))
        .collect()
}

/// Triangle inequality and `d(a,a) ≤ 0`, evaluated with i128 and the
/// extended addition table.
pub fn oracle_valid(m: &[Vec<E>]) -> bool {
    let add = |x: E, y: E| -> E {
        match (x, y) {
            (ExtScalar::PosInf, _) | (_, ExtScalar::PosInf) => INF,
            (ExtScalar::NegInf, _) | (_, ExtScalar::NegInf) => NINF,
            (ExtScalar::Fin(a), ExtScalar::Fin(b)) => n(a + b),
        }
    };
    let size = m.len();
    (0..size).all(|a| m[a][a] <= n(0))
        && (0..size).all(|a| (0..size).all(|b| (0..size).all(|c| add(m[a][b], m[b][c]) >= m[a][c])))
}

pub fn random_entry(rng: &mut impl Rng, lo: i64, hi: i64) -> E {
    match rng.gen_range(0..10) {
        0 => NINF,
        1 | 2 => INF,
        _ => n(rng.gen_range(lo..=hi)),
    }
}

pub fn random_rows(rng: &mut impl Rng, size: usize, lo: i64, hi: i64) -> Vec<Vec<E>> {
    (0..size)
        .map(|_| (0..size).map(|_| random_entry(rng, lo, hi)).collect())
        .collect()
}

pub fn random_raw(rng: &mut impl Rng, size: usize) -> RawConstraints<i64> {
    RawConstraints::from_rows(labels(size), random_rows(rng, size, -3, 3)).unwrap()
}

/// A law-satisfying matrix: the closure of random constraints. A per-matrix
/// mode decides whether negative and `-∞` entries may appear at all, since a
/// single negative cycle collapses everything it reaches to `-∞`.
pub fn random_lcs(rng: &mut impl Rng, size: usize) -> LConvexSet<i64> {
    let mode = rng.gen_range(0..10);
    let rows = (0..size)
        .map(|v| {
            (0..size)
                .map(|w| {
                    let roll = rng.gen_range(0..20);
                    if v == w {
                        return if mode == 0 && roll < 5 { NINF } else { n(0) };
                    }
                    match (mode, roll) {
                        (0..=1, 0..=1) => NINF,
                        (_, 0..=3) => INF,
                        (0..=4, 4..=6) => n(rng.gen_range(-3..0)),
                        _ => n(rng.gen_range(0..=3)),
                    }
                })
                .collect()
        })
        .collect();
    closure(&RawConstraints::from_rows(labels(size), rows).unwrap()).unwrap()
}

pub fn random_category(rng: &mut impl Rng, size: usize) -> KCategory<i64> {
    let d = random_lcs(rng, size);
    VCategory::new(Kbar::new(), labels(size), d.dbm().clone()).unwrap()
}

pub fn kcat(rows: Vec<Vec<E>>) -> KCategory<i64> {
    let size = rows.len();
    VCategory::from_rows(Kbar::new(), labels(size), rows).unwrap()
}

pub fn lcs(rows: Vec<Vec<E>>) -> LConvexSet<i64> {
    let size = rows.len();
    LConvexSet::from_rows(labels(size), rows).unwrap()
}

pub fn max_magnitude(m: &SquareMatrix<E>) -> i64 {
    m.entries()
        .iter()
        .filter_map(|e| e.finite())
        .map(|v| v.abs())
        .max()
        .unwrap_or(0)
}

pub fn magnitude_sum(m: &SquareMatrix<E>) -> i64 {
    m.entries().iter().filter_map(|e| e.finite()).map(|v| v.abs()).sum()
}

/// Every 2×2 matrix over the grid at `bound`, row-major.
pub fn all_two_by_two(bound: i64) -> Vec<Vec<Vec<E>>> {
    grid_points(4, bound)
        .into_iter()
        .map(|p| vec![vec![p[0], p[1]], vec![p[2], p[3]]])
        .collect()
}

/// One matrix per shape, with `s, t` ranging over `params`.
pub fn family_corpus(params: &[i64]) -> Vec<Vec<Vec<E>>> {
    let z = n(0);
    let mut out = vec![vec![vec![z, INF], vec![INF, z]]];
    for &s in params {
        out.push(vec![vec![z, n(s)], vec![INF, z]]);
    }
    for &s in params {
        for &t in params {
            if s + t >= 0 {
                out.push(vec![vec![z, n(s)], vec![n(t), z]]);
            }
        }
    }
    out.extend([
        vec![vec![z, NINF], vec![INF, z]],
        vec![vec![z, INF], vec![INF, NINF]],
        vec![vec![z, NINF], vec![INF, NINF]],
        vec![vec![z, INF], vec![NINF, NINF]],
        vec![vec![NINF, INF], vec![INF, NINF]],
        vec![vec![NINF, NINF], vec![INF, NINF]],
        vec![vec![NINF, NINF], vec![NINF, NINF]],
    ]);
    out
}

/// A random preorder on `size` elements as a reflexive, transitive relation.
pub fn random_preorder(rng: &mut impl Rng, size: usize) -> Vec<Vec<bool>> {
    let mut r: Vec<Vec<bool>> = (0..size)
        .map(|i| (0..size).map(|j| i == j || rng.gen_bool(0.3)).collect())
        .collect();
    for k in 0..size {
        for i in 0..size {
            for j in 0..size {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Subsets (as membership vectors) closed downward under `le`.
pub fn lower_sets(le: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let size = le.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << size) {
        let s: Vec<bool> = (0..size).map(|i| mask & (1 << i) != 0).collect();
        let closed = (0..size).all(|b| !s[b] || (0..size).all(|a| !le[a][b] || s[a]));
        if closed {
            out.push(s);
        }
    }
    out
}
