//! Exhaustive verification of the enriching-lattice axioms over a finite grid.

use std::fmt;

use super::lattice::{check_adjointness, EnrichingLattice, LatticeName};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Adjointness,
    Associativity,
    Commutativity,
    Unit,
    TensorMonotone,
    HomMonotone,
    TensorPreservesSups,
    HomPreservesInfs,
    HomReversesSups,
    HomComposition,
    HomAsSup,
    EmptyExtremes,
    CarrierClosed,
}

impl Law {
    pub const ALL: [Law; 13] = [
        Law::Adjointness,
        Law::Associativity,
        Law::Commutativity,
        Law::Unit,
        Law::TensorMonotone,
        Law::HomMonotone,
        Law::TensorPreservesSups,
        Law::HomPreservesInfs,
        Law::HomReversesSups,
        Law::HomComposition,
        Law::HomAsSup,
        Law::EmptyExtremes,
        Law::CarrierClosed,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            Law::Adjointness => "x⊗y ⊑ z ⟺ x ⊑ [y,z]",
            Law::Associativity => "(x⊗y)⊗z = x⊗(y⊗z)",
            Law::Commutativity => "x⊗y = y⊗x",
            Law::Unit => "e⊗x = x = x⊗e",
            Law::TensorMonotone => "⊗ is monotone in both arguments",
            Law::HomMonotone => "[-,-] is antitone then monotone",
            Law::TensorPreservesSups => "(⋁S)⊗y = ⋁{s⊗y} and y⊗(⋁S) = ⋁{y⊗s}",
            Law::HomPreservesInfs => "[y,⋀S] = ⋀{[y,s]}",
            Law::HomReversesSups => "[⋁S,z] = ⋀{[s,z]}",
            Law::HomComposition => "[y,z] ⊑ [[x,y],[x,z]]",
            Law::HomAsSup => "[y,z] = ⋁{x | x⊗y ⊑ z}",
            Law::EmptyExtremes => "⋁∅ is least and ⋀∅ is greatest",
            Law::CarrierClosed => "⊗ and [-,-] stay in the carrier",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: Law,
    pub checked: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub lattice: LatticeName,
    pub grid_size: usize,
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn violation_count(&self) -> usize {
        self.outcomes.iter().map(|o| o.violations.len()).sum()
    }

    pub fn checked_count(&self) -> usize {
        self.outcomes.iter().map(|o| o.checked).sum()
    }

    pub fn passed(&self) -> bool {
        self.violation_count() == 0
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "lattice {} over a grid of {} values",
            self.lattice, self.grid_size
        )?;
        for o in &self.outcomes {
            let status = if o.violations.is_empty() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "  {status:<4} {:<40} {} checks, {} violations",
                o.law.describe(),
                o.checked,
                o.violations.len()
            )?;
            for v in o.violations.iter().take(5) {
                writeln!(f, "       {v}")?;
            }
        }
        Ok(())
    }
}

struct Tally {
    law: Law,
    checked: usize,
    violations: Vec<String>,
}

impl Tally {
    fn new(law: Law) -> Self {
        Tally {
            law,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(witness());
        }
    }

    fn finish(self) -> LawOutcome {
        LawOutcome {
            law: self.law,
            checked: self.checked,
            violations: self.violations,
        }
    }
}

/// All subsets of `grid` with at most `max` elements, the empty one included.
fn small_subsets<T: Copy>(grid: &[T], max: usize) -> Vec<Vec<T>> {
    fn extend<T: Copy>(grid: &[T], start: usize, max: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in start..grid.len() {
            cur.push(grid[i]);
            extend(grid, i + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(grid, 0, max, &mut Vec::new(), &mut out);
    out
}

fn show<V: fmt::Display>(xs: &[V]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks every lattice axiom over `lattice.test_grid(bound)`: triples for the
/// pointwise laws and subsets of size at most three for the sup/inf laws.
pub fn check_laws<L: EnrichingLattice>(lattice: &L, bound: i64) -> Result<LawReport> {
    let l = lattice;
    let grid = l.test_grid(bound);
    let e = l.unit();

    let mut adj = Tally::new(Law::Adjointness);
    let mut assoc = Tally::new(Law::Associativity);
    let mut comp = Tally::new(Law::HomComposition);
    for &x in &grid {
        for &y in &grid {
            for &z in &grid {
                adj.check(check_adjointness(l, x, y, z)?, || format!("x={x} y={y} z={z}"));
                let lhs = l.tensor(l.tensor(x, y)?, z)?;
                let rhs = l.tensor(x, l.tensor(y, z)?)?;
                assoc.check(lhs == rhs, || format!("x={x} y={y} z={z}: {lhs} vs {rhs}"));
                let yz = l.hom(y, z)?;
                let via = l.hom(l.hom(x, y)?, l.hom(x, z)?)?;
                comp.check(l.leq(yz, via), || format!("x={x} y={y} z={z}: {yz} vs {via}"));
            }
        }
    }

    let mut commut = Tally::new(Law::Commutativity);
    let mut unit = Tally::new(Law::Unit);
    let mut closed = Tally::new(Law::CarrierClosed);
    let mut as_sup = Tally::new(Law::HomAsSup);
    let mut extremes = Tally::new(Law::EmptyExtremes);
    for &x in &grid {
        unit.check(l.tensor(e, x)? == x && l.tensor(x, e)? == x, || format!("x={x}"));
        extremes.check(l.leq(l.bottom(), x) && l.leq(x, l.top()), || format!("x={x}"));
        for &y in &grid {
            let xy = l.tensor(x, y)?;
            let yx = l.tensor(y, x)?;
            commut.check(xy == yx, || format!("x={x} y={y}"));
            let h = l.hom(x, y)?;
            closed.check(l.contains(&xy) && l.contains(&h), || format!("x={x} y={y}"));
            // x plays the role of y and y of z in [y,z] = ⋁{w | w⊗y ⊑ z}
            if grid.contains(&h) {
                let mut below = Vec::new();
                for &w in &grid {
                    if l.leq(l.tensor(w, x)?, y) {
                        below.push(w);
                    }
                }
                let s = l.sup(below);
                as_sup.check(s == h, || format!("y={x} z={y}: hom {h}, sup {s}"));
            }
        }
    }

    let mut t_mono = Tally::new(Law::TensorMonotone);
    let mut h_mono = Tally::new(Law::HomMonotone);
    for &x in &grid {
        for &x2 in &grid {
            for &y in &grid {
                for &y2 in &grid {
                    if l.leq(x, x2) && l.leq(y, y2) {
                        let a = l.tensor(x, y)?;
                        let b = l.tensor(x2, y2)?;
                        t_mono.check(l.leq(a, b), || format!("{x}⊑{x2}, {y}⊑{y2}"));
                    }
                    if l.leq(x2, x) && l.leq(y, y2) {
                        let a = l.hom(x, y)?;
                        let b = l.hom(x2, y2)?;
                        h_mono.check(l.leq(a, b), || format!("{x2}⊑{x}, {y}⊑{y2}"));
                    }
                }
            }
        }
    }

    let mut t_sup = Tally::new(Law::TensorPreservesSups);
    let mut h_inf = Tally::new(Law::HomPreservesInfs);
    let mut h_sup = Tally::new(Law::HomReversesSups);
    for s in small_subsets(&grid, 3) {
        let sup_s = l.sup(s.iter().copied());
        let inf_s = l.inf(s.iter().copied());
        for &y in &grid {
            let left = l.tensor(sup_s, y)?;
            let right = l.sup(s.iter().map(|&x| l.tensor(x, y)).collect::<Result<Vec<_>>>()?);
            let left2 = l.tensor(y, sup_s)?;
            let right2 = l.sup(s.iter().map(|&x| l.tensor(y, x)).collect::<Result<Vec<_>>>()?);
            t_sup.check(left == right && left2 == right2, || {
                format!("S={} y={y}", show(&s))
            });

            let left = l.hom(y, inf_s)?;
            let right = l.inf(s.iter().map(|&x| l.hom(y, x)).collect::<Result<Vec<_>>>()?);
            h_inf.check(left == right, || format!("y={y} S={}: {left} vs {right}", show(&s)));

            let left = l.hom(sup_s, y)?;
            let right = l.inf(s.iter().map(|&x| l.hom(x, y)).collect::<Result<Vec<_>>>()?);
            h_sup.check(left == right, || format!("S={} z={y}: {left} vs {right}", show(&s)));
        }
    }

    let outcomes = vec![
        adj.finish(),
        assoc.finish(),
        commut.finish(),
        unit.finish(),
        t_mono.finish(),
        h_mono.finish(),
        t_sup.finish(),
        h_inf.finish(),
        h_sup.finish(),
        comp.finish(),
        as_sup.finish(),
        extremes.finish(),
        closed.finish(),
    ];
    Ok(LawReport {
        lattice: l.name(),
        grid_size: grid.len(),
        outcomes,
    })
}
