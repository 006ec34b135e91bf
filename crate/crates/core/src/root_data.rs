//! Torus characters and root data of GSp(4).
//!
//! The diagonal torus is `T = diag(a, b, a^-1 q, b^-1 q)`, and the character
//! with coordinates `(k1, k2, r)` is
//!
//! ```text
//! a^k1 b^k2 q^(-(r + k1 + k2) / 2)
//! ```
//!
//! which is a genuine character exactly when `r ≡ k1 + k2 (mod 2)`.
//!
//! The Borel subgroup stabilizes the isotropic flag `<e1> ⊂ <e1, e2>`. Its
//! roots are `a/b`, `b^2/q`, `ab/q` and `a^2/q`; every root is trivial on the
//! centre `{a = b, q = a^2}`, so all roots have `r = 0`. The Weyl group
//! therefore fixes the `r` coordinate, and every Weyl-theoretic computation
//! below is a computation in the `(k1, k2)` plane with `r` carried along.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute value accepted for a user-supplied coordinate.
pub const WEIGHT_BOUND: i64 = 1_000_000;

/// A point of the character lattice `Z^3` without the parity constraint.
///
/// Needed for `ρ = (2, 1, 0)`, which is only a rational character, for
/// `λ + ρ`, and as the exponent type of formal characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub k1: i64,
    pub k2: i64,
    pub r: i64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent::new(0, 0, 0);

    pub const fn new(k1: i64, k2: i64, r: i64) -> Self {
        Exponent { k1, k2, r }
    }

    /// Euclidean pairing on the `(k1, k2)` plane; Weyl-invariant for C2.
    pub fn dot(self, other: Exponent) -> i64 {
        self.k1 * other.k1 + self.k2 * other.k2
    }

    /// `<self, β^∨> = 2 (self, β) / (β, β)`.
    pub fn coroot_pairing(self, root: Exponent) -> i64 {
        let norm = root.dot(root);
        debug_assert!(norm > 0 && (2 * self.dot(root)) % norm == 0);
        2 * self.dot(root) / norm
    }

    pub fn scale(self, factor: i64) -> Exponent {
        Exponent::new(self.k1 * factor, self.k2 * factor, self.r * factor)
    }

    pub fn is_character(self) -> bool {
        (self.r - self.k1 - self.k2).rem_euclid(2) == 0
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent::new(self.k1 + rhs.k1, self.k2 + rhs.k2, self.r + rhs.r)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent::new(self.k1 - rhs.k1, self.k2 - rhs.k2, self.r - rhs.r)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::new(-self.k1, -self.k2, -self.r)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k1, self.k2, self.r)
    }
}

/// A character `α(k1, k2, r)` of the diagonal torus, parity enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Exponent", into = "Exponent")]
pub struct WeightTriple {
    k1: i64,
    k2: i64,
    r: i64,
}

impl WeightTriple {
    /// Builds `α(k1, k2, r)`, rejecting odd `r - k1 - k2` and coordinates
    /// outside `[-WEIGHT_BOUND, WEIGHT_BOUND]`.
    pub fn new(k1: i64, k2: i64, r: i64) -> Result<Self> {
        for value in [k1, k2, r] {
            if value.checked_abs().is_none_or(|v| v > WEIGHT_BOUND) {
                return Err(Error::OutOfRange {
                    value,
                    bound: WEIGHT_BOUND,
                });
            }
        }
        if (r - k1 - k2).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { k1, k2, r });
        }
        Ok(WeightTriple { k1, k2, r })
    }

    const fn from_parts(k1: i64, k2: i64, r: i64) -> Self {
        WeightTriple { k1, k2, r }
    }

    /// Parity check only. Derived weights (dot-action outputs) may leave the
    /// input bound by a few units.
    pub(crate) fn from_lattice(e: Exponent) -> Option<Self> {
        e.is_character()
            .then_some(WeightTriple::from_parts(e.k1, e.k2, e.r))
    }

    pub fn k1(self) -> i64 {
        self.k1
    }

    pub fn k2(self) -> i64 {
        self.k2
    }

    pub fn r(self) -> i64 {
        self.r
    }

    pub fn exponent(self) -> Exponent {
        Exponent::new(self.k1, self.k2, self.r)
    }

    /// `k1 >= k2 >= 0`.
    pub fn is_dominant(self) -> bool {
        self.k1 >= self.k2 && self.k2 >= 0
    }

    /// `k1 > k2 > 0`.
    pub fn is_regular(self) -> bool {
        self.k1 > self.k2 && self.k2 > 0
    }

    pub fn require_dominant(self) -> Result<Self> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NotDominant(self))
        }
    }

    /// `k = min(k1 - k2, k2)`, the half-width of the avoided weight interval.
    pub fn k_invariant(self) -> Result<i64> {
        self.require_dominant()?;
        Ok((self.k1 - self.k2).min(self.k2))
    }

    /// Frobenius weight of the Levi module of highest weight `self` on the
    /// boundary stratum `m`.
    ///
    /// The weight cocharacter lands in `T` as `z ↦ diag(z, z, z^-1, z^-1)`
    /// (Siegel, `q = z^2`) or `z ↦ diag(z^2, z, 1, z)` (Klingen, `q = z^2`),
    /// where the character becomes `z^(-r + n1 + n2)` resp. `z^(-r + n1)`.
    /// The weight is minus that exponent.
    pub fn motivic_weight(self, m: Parabolic) -> i64 {
        match m {
            Parabolic::Siegel => self.r - self.k1 - self.k2,
            Parabolic::Klingen => self.r - self.k1,
        }
    }

    /// Highest weight of the restriction to the `SL2` inside the `GL2` Levi
    /// factor: `n1 - n2` for the Siegel parabolic, `n2` for the Klingen one.
    pub fn levi_restriction_weight(self, m: Parabolic) -> i64 {
        match m {
            Parabolic::Siegel => self.k1 - self.k2,
            Parabolic::Klingen => self.k2,
        }
    }
}

/// Parity-checked only; the input bound applies to [`WeightTriple::new`].
impl TryFrom<Exponent> for WeightTriple {
    type Error = Error;
    fn try_from(e: Exponent) -> Result<Self> {
        WeightTriple::from_lattice(e).ok_or(Error::ParityViolation {
            k1: e.k1,
            k2: e.k2,
            r: e.r,
        })
    }
}

impl From<WeightTriple> for Exponent {
    fn from(w: WeightTriple) -> Exponent {
        w.exponent()
    }
}

impl Add for WeightTriple {
    type Output = WeightTriple;
    fn add(self, rhs: WeightTriple) -> WeightTriple {
        WeightTriple::from_parts(self.k1 + rhs.k1, self.k2 + rhs.k2, self.r + rhs.r)
    }
}

impl Neg for WeightTriple {
    type Output = WeightTriple;
    fn neg(self) -> WeightTriple {
        WeightTriple::from_parts(-self.k1, -self.k2, -self.r)
    }
}

impl Sub for WeightTriple {
    type Output = WeightTriple;
    fn sub(self, rhs: WeightTriple) -> WeightTriple {
        self + (-rhs)
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.exponent().fmt(f)
    }
}

/// `make_weight(k1, k2, r)`; see [`WeightTriple::new`].
pub fn make_weight(k1: i64, k2: i64, r: i64) -> Result<WeightTriple> {
    WeightTriple::new(k1, k2, r)
}

/// The two maximal parabolics containing the Borel: `Q_0` stabilizes the
/// Lagrangian `<e1, e2>` (Siegel), `Q_1` the line `<e1>` (Klingen).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Parabolic {
    Siegel,
    Klingen,
}

impl Parabolic {
    pub const ALL: [Parabolic; 2] = [Parabolic::Siegel, Parabolic::Klingen];

    pub fn index(self) -> i64 {
        match self {
            Parabolic::Siegel => 0,
            Parabolic::Klingen => 1,
        }
    }

    /// Dimension of the boundary stratum `Z_m`.
    pub fn stratum_dimension(self) -> i64 {
        self.index()
    }
}

impl TryFrom<i64> for Parabolic {
    type Error = Error;
    fn try_from(m: i64) -> Result<Self> {
        match m {
            0 => Ok(Parabolic::Siegel),
            1 => Ok(Parabolic::Klingen),
            other => Err(Error::BadParabolicIndex(other)),
        }
    }
}

impl From<Parabolic> for i64 {
    fn from(m: Parabolic) -> i64 {
        m.index()
    }
}

const ALPHA_SHORT: WeightTriple = WeightTriple::from_parts(1, -1, 0);
const ALPHA_LONG: WeightTriple = WeightTriple::from_parts(0, 2, 0);
const BETA_SHORT: WeightTriple = WeightTriple::from_parts(1, 1, 0);
const BETA_LONG: WeightTriple = WeightTriple::from_parts(2, 0, 0);

/// Root datum of GSp(4) in `(k1, k2, r)` coordinates.
///
/// `rho` is a field rather than a constant so that verification code can be
/// run against a deliberately broken datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootDatum {
    rho: Exponent,
}

impl RootDatum {
    pub const GSP4: RootDatum = RootDatum {
        rho: Exponent::new(2, 1, 0),
    };

    /// A datum with a replaced `ρ`. Only useful as a negative control.
    pub fn with_rho(rho: Exponent) -> Self {
        RootDatum { rho }
    }

    /// `a/b`, `b^2/q`, `ab/q`, `a^2/q`; the first two are simple.
    pub fn positive_roots(&self) -> [WeightTriple; 4] {
        [ALPHA_SHORT, ALPHA_LONG, BETA_SHORT, BETA_LONG]
    }

    pub fn simple_roots(&self) -> [WeightTriple; 2] {
        [ALPHA_SHORT, ALPHA_LONG]
    }

    pub fn rho(&self) -> Exponent {
        self.rho
    }

    /// The positive root of the Levi factor of `Q_m`.
    pub fn levi_root(&self, m: Parabolic) -> WeightTriple {
        match m {
            Parabolic::Siegel => ALPHA_SHORT,
            Parabolic::Klingen => ALPHA_LONG,
        }
    }

    /// Roots of `Lie(W_m)`, the unipotent radical of `Q_m`.
    pub fn nilradical_roots(&self, m: Parabolic) -> [WeightTriple; 3] {
        match m {
            Parabolic::Siegel => [BETA_LONG, BETA_SHORT, ALPHA_LONG],
            Parabolic::Klingen => [ALPHA_SHORT, BETA_SHORT, BETA_LONG],
        }
    }

    pub fn is_positive_root(&self, x: Exponent) -> bool {
        self.positive_roots().iter().any(|b| b.exponent() == x)
    }
}

impl Default for RootDatum {
    fn default() -> Self {
        RootDatum::GSP4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k1: i64, k2: i64, r: i64) -> WeightTriple {
        WeightTriple::new(k1, k2, r).unwrap()
    }

    #[test]
    fn construction_enforces_parity() {
        assert_eq!(make_weight(3, 1, 4).unwrap(), w(3, 1, 4));
        assert_eq!(make_weight(0, 0, 0).unwrap(), w(0, 0, 0));
        assert_eq!(
            make_weight(1, 0, 0),
            Err(Error::ParityViolation { k1: 1, k2: 0, r: 0 })
        );
        assert!(make_weight(-3, 0, -1).is_ok());
    }

    #[test]
    fn construction_enforces_bound() {
        assert!(make_weight(WEIGHT_BOUND, 0, WEIGHT_BOUND).is_ok());
        assert!(matches!(
            make_weight(WEIGHT_BOUND + 1, 1, 0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            make_weight(0, 0, i64::MIN),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn dominance_and_regularity() {
        assert!(w(3, 1, 4).is_dominant() && w(3, 1, 4).is_regular());
        assert!(w(2, 2, 0).is_dominant() && !w(2, 2, 0).is_regular());
        assert!(w(0, 0, 0).is_dominant() && !w(0, 0, 0).is_regular());
        assert!(!w(1, 3, 0).is_dominant());
        assert!(!w(3, -1, 0).is_dominant());
    }

    #[test]
    fn k_invariant_values() {
        assert_eq!(w(3, 1, 4).k_invariant(), Ok(1));
        assert_eq!(w(5, 2, 7).k_invariant(), Ok(2));
        assert_eq!(w(2, 2, 0).k_invariant(), Ok(0));
        assert_eq!(
            w(1, 3, 0).k_invariant(),
            Err(Error::NotDominant(w(1, 3, 0)))
        );
    }

    #[test]
    fn weights_of_levi_modules() {
        assert_eq!(w(3, 1, 4).motivic_weight(Parabolic::Siegel), 0);
        assert_eq!(w(3, -3, 4).motivic_weight(Parabolic::Siegel), 4);
        assert_eq!(w(0, 4, 4).motivic_weight(Parabolic::Klingen), 4);

        assert_eq!(w(3, -3, 4).levi_restriction_weight(Parabolic::Siegel), 6);
        assert_eq!(w(3, 1, 4).levi_restriction_weight(Parabolic::Siegel), 2);
        assert_eq!(w(0, 4, 4).levi_restriction_weight(Parabolic::Klingen), 4);
    }

    #[test]
    fn parabolic_index_round_trip() {
        assert_eq!(Parabolic::try_from(0), Ok(Parabolic::Siegel));
        assert_eq!(Parabolic::try_from(1), Ok(Parabolic::Klingen));
        assert_eq!(Parabolic::try_from(2), Err(Error::BadParabolicIndex(2)));
        assert_eq!(Parabolic::try_from(-1), Err(Error::BadParabolicIndex(-1)));
    }

    #[test]
    fn root_datum_shape() {
        let datum = RootDatum::GSP4;
        let sum = datum
            .positive_roots()
            .iter()
            .fold(Exponent::ZERO, |acc, b| acc + b.exponent());
        assert_eq!(datum.rho().scale(2), sum);
        assert_eq!(datum.rho(), Exponent::new(2, 1, 0));
        assert!(!datum.rho().is_character());

        for b in datum.positive_roots() {
            assert_eq!(b.r(), 0);
            assert_eq!((b.k1() + b.k2()).rem_euclid(2), 0);
        }
        assert_eq!(datum.levi_root(Parabolic::Siegel), w(1, -1, 0));
        assert_eq!(datum.levi_root(Parabolic::Klingen), w(0, 2, 0));
    }

    #[test]
    fn nilradical_and_levi_exhaust_the_roots() {
        let datum = RootDatum::GSP4;
        let mut all: Vec<Exponent> = datum
            .positive_roots()
            .iter()
            .flat_map(|b| [b.exponent(), -b.exponent()])
            .collect();
        all.sort();
        for m in Parabolic::ALL {
            let levi = datum.levi_root(m).exponent();
            let mut parts: Vec<Exponent> = vec![levi, -levi];
            for b in datum.nilradical_roots(m) {
                parts.push(b.exponent());
                parts.push(-b.exponent());
            }
            parts.sort();
            assert_eq!(parts, all, "parabolic {m:?}");
            assert!(!datum.nilradical_roots(m).contains(&datum.levi_root(m)));
        }
    }

    #[test]
    fn serde_rejects_bad_parity() {
        let ok: WeightTriple = serde_json::from_str(r#"{"k1":3,"k2":1,"r":4}"#).unwrap();
        assert_eq!(ok, w(3, 1, 4));
        assert!(serde_json::from_str::<WeightTriple>(r#"{"k1":1,"k2":0,"r":0}"#).is_err());
        assert_eq!(
            serde_json::to_string(&ok).unwrap(),
            r#"{"k1":3,"k2":1,"r":4}"#
        );
    }
}
