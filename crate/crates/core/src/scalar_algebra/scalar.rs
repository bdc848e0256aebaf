//! Extended scalars `K ∪ {-∞, ∞}` over integers or reals, together with the
//! arithmetic tables forced by the enriching-lattice structure.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which number system a finite scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Integer,
    Real,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Integer => "int",
            ScalarKind::Real => "real",
        })
    }
}

/// A finite scalar: `i64` for the integer kind, [`Real`] for the real kind.
pub trait Scalar:
    Copy + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn checked_add(self, rhs: Self) -> Option<Self>;
    fn checked_sub(self, rhs: Self) -> Option<Self>;
    /// Exact for every `i64` when `Self = i64`, and for `|v| < 2^53` otherwise.
    fn from_i64(v: i64) -> Self;
    fn parse_literal(text: &str) -> Option<Self>;
}

impl Scalar for i64 {
    const KIND: ScalarKind = ScalarKind::Integer;

    fn zero() -> Self {
        0
    }

    fn checked_add(self, rhs: Self) -> Option<Self> {
        i64::checked_add(self, rhs)
    }

    fn checked_sub(self, rhs: Self) -> Option<Self> {
        i64::checked_sub(self, rhs)
    }

    fn from_i64(v: i64) -> Self {
        v
    }

    fn parse_literal(text: &str) -> Option<Self> {
        let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        text.parse().ok()
    }
}

/// A finite double-precision real. NaN and machine infinities are rejected at
/// construction, which makes the total order well defined.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Real(f64);

impl Real {
    pub fn new(v: f64) -> Option<Real> {
        if v.is_finite() {
            // -0.0 and 0.0 must hash alike
            Some(Real(if v == 0.0 { 0.0 } else { v }))
        } else {
            None
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Eq for Real {}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Hash for Real {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Scalar for Real {
    const KIND: ScalarKind = ScalarKind::Real;

    fn zero() -> Self {
        Real(0.0)
    }

    fn checked_add(self, rhs: Self) -> Option<Self> {
        Real::new(self.0 + rhs.0)
    }

    fn checked_sub(self, rhs: Self) -> Option<Self> {
        Real::new(self.0 - rhs.0)
    }

    fn from_i64(v: i64) -> Self {
        Real(v as f64)
    }

    fn parse_literal(text: &str) -> Option<Self> {
        let body = text.strip_prefix(['+', '-']).unwrap_or(text);
        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(at) => (&body[..at], Some(&body[at + 1..])),
            None => (body, None),
        };
        let mut parts = mantissa.splitn(2, '.');
        let int_part = parts.next().unwrap_or("");
        let frac_part = parts.next().unwrap_or("");
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !all_digits(int_part) || !all_digits(frac_part) {
            return None;
        }
        if let Some(exp) = exponent {
            let exp_digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
            if exp_digits.is_empty() || !all_digits(exp_digits) {
                return None;
            }
        }
        text.parse::<f64>().ok().and_then(Real::new)
    }
}

/// An element of `K̄ = K ∪ {-∞, ∞}`.
///
/// The derived ordering is the usual one (`-∞ < finite < ∞`). The enriching
/// order on `K̄` is its reverse; see [`crate::scalar_algebra::Kbar`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtScalar<K> {
    NegInf,
    Fin(K),
    PosInf,
}

use ExtScalar::{Fin, NegInf, PosInf};

impl<K: Scalar> ExtScalar<K> {
    pub fn zero() -> Self {
        Fin(K::zero())
    }

    pub fn int(v: i64) -> Self {
        Fin(K::from_i64(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Fin(_))
    }

    pub fn finite(&self) -> Option<K> {
        match self {
            Fin(k) => Some(*k),
            _ => None,
        }
    }

    /// Extended addition `self + rhs`. `∞` absorbs on either side, so
    /// `(-∞) + ∞ = ∞`.
    pub fn plus(self, rhs: Self) -> Result<Self> {
        Ok(match (self, rhs) {
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
            (Fin(s), Fin(t)) => Fin(s.checked_add(t).ok_or(Error::Overflow { op: "addition" })?),
        })
    }

    /// Extended subtraction `self - x`, the internal hom `[x, self]` of `K̄`.
    pub fn minus(self, x: Self) -> Result<Self> {
        Ok(match (self, x) {
            (_, PosInf) => NegInf,
            (NegInf, _) => NegInf,
            (_, NegInf) => PosInf,
            (PosInf, Fin(_)) => PosInf,
            (Fin(t), Fin(s)) => {
                Fin(t.checked_sub(s).ok_or(Error::Overflow { op: "subtraction" })?)
            }
        })
    }
}

impl<K: fmt::Display> fmt::Display for ExtScalar<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => f.write_str("-inf"),
            PosInf => f.write_str("inf"),
            Fin(k) => write!(f, "{k}"),
        }
    }
}

impl<K: Scalar> FromStr for ExtScalar<K> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" => Ok(PosInf),
            "-inf" => Ok(NegInf),
            _ => K::parse_literal(s)
                .map(Fin)
                .ok_or_else(|| Error::ParseScalar(s.to_string())),
        }
    }
}

/// `x + y` in `K̄`.
pub fn ext_add<K: Scalar>(x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
    x.plus(y)
}

/// `y - x` in `K̄` (note the argument order: this is the hom `[x, y]`).
pub fn ext_sub<K: Scalar>(y: ExtScalar<K>, x: ExtScalar<K>) -> Result<ExtScalar<K>> {
    y.minus(x)
}

/// Supremum for the enriching order `≥`, i.e. the usual minimum. Empty input gives `∞`.
pub fn ext_sup<K: Scalar>(xs: impl IntoIterator<Item = ExtScalar<K>>) -> ExtScalar<K> {
    xs.into_iter().min().unwrap_or(PosInf)
}

/// Infimum for the enriching order `≥`, i.e. the usual maximum. Empty input gives `-∞`.
pub fn ext_inf<K: Scalar>(xs: impl IntoIterator<Item = ExtScalar<K>>) -> ExtScalar<K> {
    xs.into_iter().max().unwrap_or(NegInf)
}

pub(crate) fn in_nonneg<K: Scalar>(x: ExtScalar<K>) -> bool {
    match x {
        NegInf => false,
        Fin(k) => k >= K::zero(),
        PosInf => true,
    }
}

fn require_nonneg<K: Scalar>(x: ExtScalar<K>, lattice: &'static str) -> Result<()> {
    if in_nonneg(x) {
        Ok(())
    } else {
        Err(Error::Domain {
            value: x.to_string(),
            lattice,
        })
    }
}

/// Addition on `K̄₊ = K₊ ∪ {∞}`.
pub fn trunc_add<K: Scalar>(x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
    require_nonneg(x, "Kbar+")?;
    require_nonneg(y, "Kbar+")?;
    x.plus(y)
}

/// Truncated subtraction `y ∸ x` on `K̄₊`; in particular `∞ ∸ ∞ = 0`.
pub fn trunc_sub<K: Scalar>(y: ExtScalar<K>, x: ExtScalar<K>) -> Result<ExtScalar<K>> {
    require_nonneg(x, "Kbar+")?;
    require_nonneg(y, "Kbar+")?;
    Ok(match (y, x) {
        (_, PosInf) => ExtScalar::zero(),
        (PosInf, _) => PosInf,
        (Fin(t), Fin(s)) => {
            if t <= s {
                ExtScalar::zero()
            } else {
                Fin(t.checked_sub(s).ok_or(Error::Overflow { op: "subtraction" })?)
            }
        }
        (NegInf, _) | (_, NegInf) => unreachable!("rejected by the carrier check"),
    })
}

/// Tensor of the cartesian lattice `K̄₊^Cart`: the usual maximum.
pub fn cart_tensor<K: Scalar>(x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
    require_nonneg(x, "Kbar+Cart")?;
    require_nonneg(y, "Kbar+Cart")?;
    Ok(x.max(y))
}

/// Implication `x ⊃ y` of `K̄₊^Cart`: `0` when `x ≥ y`, otherwise `y`.
pub fn cart_implies<K: Scalar>(x: ExtScalar<K>, y: ExtScalar<K>) -> Result<ExtScalar<K>> {
    require_nonneg(x, "Kbar+Cart")?;
    require_nonneg(y, "Kbar+Cart")?;
    Ok(if x >= y { ExtScalar::zero() } else { y })
}

pub fn bool_and(x: bool, y: bool) -> bool {
    x && y
}

pub fn bool_implies(x: bool, y: bool) -> bool {
    !x || y
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = ExtScalar<i64>;

    fn z(v: i64) -> Z {
        ExtScalar::int(v)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(ext_add(Z::NegInf, Z::PosInf).unwrap(), Z::PosInf);
        assert_eq!(ext_add(Z::NegInf, Z::NegInf).unwrap(), Z::NegInf);
        for x in [Z::NegInf, z(-2), z(5), Z::PosInf] {
            assert_eq!(ext_add(z(0), x).unwrap(), x);
            assert_eq!(ext_add(x, z(0)).unwrap(), x);
        }
    }

    #[test]
    fn subtraction_examples() {
        assert_eq!(ext_sub(Z::PosInf, Z::PosInf).unwrap(), Z::NegInf);
        assert_eq!(ext_sub(Z::PosInf, Z::NegInf).unwrap(), Z::PosInf);
        assert_eq!(ext_sub(z(7), z(3)).unwrap(), z(4));
        assert_eq!(ext_sub(Z::NegInf, Z::NegInf).unwrap(), Z::NegInf);
        assert_eq!(ext_sub(z(1), Z::NegInf).unwrap(), Z::PosInf);
    }

    #[test]
    fn truncated_examples() {
        assert_eq!(trunc_sub(Z::PosInf, Z::PosInf).unwrap(), z(0));
        assert_eq!(trunc_sub(z(3), z(5)).unwrap(), z(0));
        assert_eq!(trunc_sub(Z::PosInf, z(4)).unwrap(), Z::PosInf);
        assert_eq!(trunc_sub(z(4), Z::PosInf).unwrap(), z(0));
        assert!(matches!(
            trunc_add(Z::NegInf, z(1)),
            Err(Error::Domain { .. })
        ));
        assert!(trunc_sub(z(-1), z(1)).is_err());
    }

    #[test]
    fn cartesian_and_boolean() {
        assert!(bool_implies(false, false));
        assert!(!bool_implies(true, false));
        assert_eq!(cart_implies(z(5), z(3)).unwrap(), z(0));
        assert_eq!(cart_implies(z(2), z(7)).unwrap(), z(7));
        assert_eq!(cart_tensor(z(2), Z::PosInf).unwrap(), Z::PosInf);
        assert!(cart_implies(Z::NegInf, z(0)).is_err());
    }

    #[test]
    fn sup_and_inf() {
        assert_eq!(ext_sup::<i64>([]), Z::PosInf);
        assert_eq!(ext_inf::<i64>([]), Z::NegInf);
        assert_eq!(ext_inf([Z::NegInf, z(2), z(5)]), z(5));
        assert_eq!(ext_sup([z(3)]), z(3));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            ext_add(z(i64::MAX), z(1)),
            Err(Error::Overflow { op: "addition" })
        );
        assert!(ext_sub(z(i64::MIN), z(1)).is_err());
        // infinities never overflow
        assert_eq!(ext_add(z(i64::MAX), Z::PosInf).unwrap(), Z::PosInf);
    }

    #[test]
    fn parse_scalars() {
        assert_eq!("inf".parse::<Z>().unwrap(), Z::PosInf);
        assert_eq!("-inf".parse::<Z>().unwrap(), Z::NegInf);
        assert_eq!("-12".parse::<Z>().unwrap(), z(-12));
        assert_eq!("+3".parse::<Z>().unwrap(), z(3));
        for bad in ["Inf", "+inf", "in", "", "1.5", "--1", "1e3", " 1"] {
            assert!(bad.parse::<Z>().is_err(), "{bad:?} should be rejected");
        }
        type R = ExtScalar<Real>;
        assert_eq!("0.5".parse::<R>().unwrap(), R::Fin(Real::new(0.5).unwrap()));
        assert_eq!("-2.5e1".parse::<R>().unwrap(), R::Fin(Real::new(-25.0).unwrap()));
        assert_eq!("3".parse::<R>().unwrap(), R::int(3));
        for bad in ["nan", "NaN", "infinity", ".", "1e", "1e400", "0x10", "1.2.3"] {
            assert!(bad.parse::<R>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn real_zero_sign_is_normalized() {
        assert_eq!(Real::new(-0.0), Real::new(0.0));
        assert_eq!(Real::new(f64::NAN), None);
        assert_eq!(Real::new(f64::INFINITY), None);
    }
}
