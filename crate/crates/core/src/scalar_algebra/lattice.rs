//! The four enriching lattices: `2`, `K̄₊`, `K̄` and `K̄₊^Cart`.
//!
//! Each is a symmetric monoidal closed complete lattice: a complete lattice
//! with a commutative, monotone tensor `⊗` with unit `e`, and an internal hom
//! `[-, -]` such that `x ⊗ y ⊑ z ⟺ x ⊑ [y, z]`. All four carriers happen to
//! be chains.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use super::scalar::{
    bool_and, bool_implies, cart_implies, cart_tensor, ext_inf, ext_sup, in_nonneg, trunc_add,
    trunc_sub, ExtScalar, Scalar,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeName {
    Two,
    KbarPlus,
    Kbar,
    KbarPlusCart,
}

impl LatticeName {
    pub const ALL: [LatticeName; 4] = [
        LatticeName::Two,
        LatticeName::KbarPlus,
        LatticeName::Kbar,
        LatticeName::KbarPlusCart,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LatticeName::Two => "two",
            LatticeName::KbarPlus => "kbar-plus",
            LatticeName::Kbar => "kbar",
            LatticeName::KbarPlusCart => "kbar-plus-cart",
        }
    }
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LatticeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticeName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Mismatch(format!("unknown lattice `{s}`")))
    }
}

/// A symmetric monoidal closed complete lattice used as the value object of
/// enriched categories.
pub trait EnrichingLattice: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Value: Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn name(&self) -> LatticeName;

    /// Whether `x` belongs to the carrier.
    fn contains(&self, x: &Self::Value) -> bool;

    /// The lattice order `x ⊑ y`.
    fn leq(&self, x: Self::Value, y: Self::Value) -> bool;

    fn tensor(&self, x: Self::Value, y: Self::Value) -> Result<Self::Value>;

    /// The internal hom `[x, y]`.
    fn hom(&self, x: Self::Value, y: Self::Value) -> Result<Self::Value>;

    fn unit(&self) -> Self::Value;

    /// Least upper bound of a finite family; the least element for an empty one.
    fn sup<I: IntoIterator<Item = Self::Value>>(&self, xs: I) -> Self::Value;

    /// Greatest lower bound of a finite family; the greatest element for an empty one.
    fn inf<I: IntoIterator<Item = Self::Value>>(&self, xs: I) -> Self::Value;

    fn bottom(&self) -> Self::Value {
        self.sup(std::iter::empty())
    }

    fn top(&self) -> Self::Value {
        self.inf(std::iter::empty())
    }

    /// The finite test grid `{-∞} ∪ [-bound, bound] ∪ {∞}` restricted to the carrier.
    fn test_grid(&self, bound: i64) -> Vec<Self::Value>;
}

/// The two-element lattice of truth values, ordered by entailment.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Two;

impl EnrichingLattice for Two {
    type Value = bool;

    fn name(&self) -> LatticeName {
        LatticeName::Two
    }

    fn contains(&self, _: &bool) -> bool {
        true
    }

    fn leq(&self, x: bool, y: bool) -> bool {
        bool_implies(x, y)
    }

    fn tensor(&self, x: bool, y: bool) -> Result<bool> {
        Ok(bool_and(x, y))
    }

    fn hom(&self, x: bool, y: bool) -> Result<bool> {
        Ok(bool_implies(x, y))
    }

    fn unit(&self) -> bool {
        true
    }

    fn sup<I: IntoIterator<Item = bool>>(&self, xs: I) -> bool {
        xs.into_iter().any(|x| x)
    }

    fn inf<I: IntoIterator<Item = bool>>(&self, xs: I) -> bool {
        xs.into_iter().all(|x| x)
    }

    fn test_grid(&self, _: i64) -> Vec<bool> {
        vec![false, true]
    }
}

/// `K̄ = K ∪ {-∞, ∞}` ordered by `≥`, with extended `+` as tensor and
/// `[x, y] = y - x` as hom.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Kbar<K>(PhantomData<K>);

impl<K> Kbar<K> {
    pub fn new() -> Self {
        Kbar(PhantomData)
    }
}

/// `K̄₊ = K₊ ∪ {∞}` ordered by `≥`, with `+` and truncated subtraction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KbarPlus<K>(PhantomData<K>);

impl<K> KbarPlus<K> {
    pub fn new() -> Self {
        KbarPlus(PhantomData)
    }
}

/// `K̄₊^Cart`: the carrier of `K̄₊` with `max` as tensor and `⊃` as hom.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KbarPlusCart<K>(PhantomData<K>);

impl<K> KbarPlusCart<K> {
    pub fn new() -> Self {
        KbarPlusCart(PhantomData)
    }
}

fn full_grid<K: Scalar>(bound: i64) -> Vec<ExtScalar<K>> {
    std::iter::once(ExtScalar::NegInf)
        .chain((-bound..=bound).map(ExtScalar::int))
        .chain(std::iter::once(ExtScalar::PosInf))
        .collect()
}

fn nonneg_grid<K: Scalar>(bound: i64) -> Vec<ExtScalar<K>> {
    (0..=bound)
        .map(ExtScalar::int)
        .chain(std::iter::once(ExtScalar::PosInf))
        .collect()
}

impl<K: Scalar> EnrichingLattice for Kbar<K> {
    type Value = ExtScalar<K>;

    fn name(&self) -> LatticeName {
        LatticeName::Kbar
    }

    fn contains(&self, _: &ExtScalar<K>) -> bool {
        true
    }

    fn leq(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> bool {
        x >= y
    }

    fn tensor(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        x.plus(y)
    }

    fn hom(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        y.minus(x)
    }

    fn unit(&self) -> ExtScalar<K> {
        ExtScalar::zero()
    }

    fn sup<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        ext_sup(xs)
    }

    fn inf<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        ext_inf(xs)
    }

    fn test_grid(&self, bound: i64) -> Vec<ExtScalar<K>> {
        full_grid(bound)
    }
}

impl<K: Scalar> EnrichingLattice for KbarPlus<K> {
    type Value = ExtScalar<K>;

    fn name(&self) -> LatticeName {
        LatticeName::KbarPlus
    }

    fn contains(&self, x: &ExtScalar<K>) -> bool {
        in_nonneg(*x)
    }

    fn leq(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> bool {
        x >= y
    }

    fn tensor(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        trunc_add(x, y)
    }

    fn hom(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        trunc_sub(y, x)
    }

    fn unit(&self) -> ExtScalar<K> {
        ExtScalar::zero()
    }

    fn sup<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        ext_sup(xs)
    }

    fn inf<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        xs.into_iter().max().unwrap_or_else(ExtScalar::zero)
    }

    fn test_grid(&self, bound: i64) -> Vec<ExtScalar<K>> {
        nonneg_grid(bound)
    }
}

impl<K: Scalar> EnrichingLattice for KbarPlusCart<K> {
    type Value = ExtScalar<K>;

    fn name(&self) -> LatticeName {
        LatticeName::KbarPlusCart
    }

    fn contains(&self, x: &ExtScalar<K>) -> bool {
        in_nonneg(*x)
    }

    fn leq(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> bool {
        x >= y
    }

    fn tensor(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        cart_tensor(x, y)
    }

    fn hom(&self, x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
        cart_implies(x, y)
    }

    fn unit(&self) -> ExtScalar<K> {
        ExtScalar::zero()
    }

    fn sup<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        ext_sup(xs)
    }

    fn inf<I: IntoIterator<Item = ExtScalar<K>>>(&self, xs: I) -> ExtScalar<K> {
        xs.into_iter().max().unwrap_or_else(ExtScalar::zero)
    }

    fn test_grid(&self, bound: i64) -> Vec<ExtScalar<K>> {
        nonneg_grid(bound)
    }
}

/// Whether `x ⊗ y ⊑ z ⟺ x ⊑ [y, z]` holds for one triple.
pub fn check_adjointness<L: EnrichingLattice>(
    lattice: &L,
    x: L::Value,
    y: L::Value,
    z: L::Value,
) -> Result<bool> {
    let left = lattice.leq(lattice.tensor(x, y)?, z);
    let right = lattice.leq(x, lattice.hom(y, z)?);
    Ok(left == right)
}
