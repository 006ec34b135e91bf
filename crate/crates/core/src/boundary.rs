//! Classical and perverse cohomology of `i_m^* i^* j_* μ(V_λ)` on the two
//! boundary strata of the Baily–Borel compactification.
//!
//! On a stratum `Z'` contributing to `Z_m`, the degree-`n` sheaf is
//! `⊕_{p+q=n} H^p(Γ, H^q(Lie(W_m), V_λ))` where `Γ = H_C/K_W` is a neat
//! arithmetic subgroup of `SL2` for the Siegel stratum (a point) and trivial
//! for the Klingen stratum (a modular curve).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kostant::{nilpotent_cohomology, LeviModule};
use crate::root_data::{Parabolic, WeightTriple, WEIGHT_BOUND};

/// Genus and cusp count of the modular curve attached to a Siegel cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStratum", into = "RawStratum")]
pub struct StratumDatum {
    g: i64,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct RawStratum {
    g: i64,
    c: i64,
}

impl StratumDatum {
    /// Neatness forces `c >= 1`, and `c >= 3` in genus zero.
    pub fn new(g: i64, c: i64) -> Result<Self> {
        if g < 0 || c < 1 || (g == 0 && c < 3) {
            return Err(Error::InvalidStratum { g, c });
        }
        for value in [g, c] {
            if value > WEIGHT_BOUND {
                return Err(Error::OutOfRange {
                    value,
                    bound: WEIGHT_BOUND,
                });
            }
        }
        Ok(StratumDatum { g, c })
    }

    pub fn g(self) -> i64 {
        self.g
    }

    pub fn c(self) -> i64 {
        self.c
    }

    /// `2g − 2 + c`, minus the Euler characteristic of the open curve.
    /// Positive for every neat datum.
    pub fn euler_factor(self) -> i64 {
        2 * self.g - 2 + self.c
    }
}

impl Default for StratumDatum {
    /// The smallest neat configuration, `(g, c) = (0, 3)`.
    fn default() -> Self {
        StratumDatum { g: 0, c: 3 }
    }
}

impl TryFrom<RawStratum> for StratumDatum {
    type Error = Error;
    fn try_from(raw: RawStratum) -> Result<Self> {
        StratumDatum::new(raw.g, raw.c)
    }
}

impl From<StratumDatum> for RawStratum {
    fn from(s: StratumDatum) -> Self {
        RawStratum { g: s.g, c: s.c }
    }
}

/// `dim H^p(Γ, Sym^u V_2)`.
///
/// `Γ` has cohomological dimension one. `H^0` is the invariants, nonzero only
/// for `u = 0`; `H^1` has dimension `(u+1)(2g−2+c)` for `u >= 1` and
/// `2g−1+c` for `u = 0`.
pub fn group_cohomology_dim(u: i64, s: StratumDatum, p: i64) -> Result<i64> {
    if u < 0 {
        return Err(Error::PreconditionViolation(format!(
            "Sym^{u} is not a representation"
        )));
    }
    match p {
        0 => Ok(i64::from(u == 0)),
        1 if u == 0 => Ok(2 * s.g + s.c - 1),
        1 => (u + 1)
            .checked_mul(s.euler_factor())
            .ok_or(Error::Overflow("group_cohomology_dim")),
        other => Err(Error::DegreeOutOfRange(other)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Degree range covered by the stratum computation (perverse degree `<= r+2`).
    Proven,
    /// Computed by the same recipe beyond that range.
    Derived,
}

/// One `H^p(Γ, H^q(Lie(W_m), V_λ))` summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    pub p: i64,
    pub q: i64,
    pub rank: i64,
    pub weight: i64,
}

/// A graded piece of the boundary complex on one stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyEntry {
    pub m: Parabolic,
    pub n_classical: i64,
    pub n_perverse: i64,
    /// Frobenius weight of the classical sheaf `R^n`.
    pub weight: i64,
    /// Weight of the same object seen as a perverse cohomology sheaf; a
    /// lisse sheaf on the curve `Z_1` becomes perverse after a shift by one.
    pub perverse_weight: i64,
    pub rank_lower: i64,
    pub rank_upper: i64,
    pub nonzero: bool,
    pub provenance: Provenance,
    pub origin: Vec<Contribution>,
}

impl CohomologyEntry {
    fn from_contributions(
        m: Parabolic,
        n_classical: i64,
        origin: Vec<Contribution>,
        provenance: Provenance,
    ) -> Self {
        let rank: i64 = origin.iter().map(|c| c.rank).sum();
        let weight = origin
            .iter()
            .filter(|c| c.rank > 0)
            .map(|c| c.weight)
            .max()
            .or_else(|| origin.iter().map(|c| c.weight).max())
            .expect("at least one contribution");
        CohomologyEntry {
            m,
            n_classical,
            n_perverse: n_classical,
            weight,
            perverse_weight: weight,
            rank_lower: rank,
            rank_upper: rank,
            nonzero: rank > 0,
            provenance,
            origin,
        }
    }

    /// `n_perverse − perverse_weight`; an entry of weights `<= n − k` has
    /// `gap >= k`.
    pub fn weight_gap(&self) -> i64 {
        self.n_perverse - self.perverse_weight
    }
}

/// Profile of `R^n i_m^* i^* j_* μ(V_λ)` on one stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryProfile {
    pub m: Parabolic,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<StratumDatum>,
    pub entries: Vec<CohomologyEntry>,
}

fn kostant_contribution(module: &LeviModule, p: i64, rank: i64) -> Contribution {
    Contribution {
        p,
        q: module.q as i64,
        rank,
        weight: module.motivic_weight,
    }
}

/// Siegel stratum, classical degrees `0..=4`, perverse degrees filled in.
pub fn siegel_profile(lambda: WeightTriple, s: StratumDatum) -> Result<Vec<CohomologyEntry>> {
    let modules = nilpotent_cohomology(lambda, Parabolic::Siegel)?;
    let mut entries = Vec::with_capacity(5);
    for n in 0..=4i64 {
        let mut origin = Vec::new();
        for p in [0i64, 1] {
            let q = n - p;
            if !(0..=3).contains(&q) {
                continue;
            }
            let module = &modules[q as usize];
            let rank = group_cohomology_dim(module.restriction_weight, s, p)?;
            origin.push(kostant_contribution(module, p, rank));
        }
        let provenance = if n <= 2 {
            Provenance::Proven
        } else {
            Provenance::Derived
        };
        entries.push(CohomologyEntry::from_contributions(
            Parabolic::Siegel,
            n,
            origin,
            provenance,
        ));
    }
    perverse_reindex(entries, lambda.r())
}

/// Klingen stratum, classical degrees `0..=3`. `Γ` is trivial, so `R^n` is
/// the lisse sheaf attached to `H^n(Lie(W_1), V_λ)` and has its rank.
pub fn klingen_profile(lambda: WeightTriple) -> Result<Vec<CohomologyEntry>> {
    let modules = nilpotent_cohomology(lambda, Parabolic::Klingen)?;
    let entries = modules
        .iter()
        .map(|module| {
            let n = module.q as i64;
            let provenance = if n <= 1 {
                Provenance::Proven
            } else {
                Provenance::Derived
            };
            CohomologyEntry::from_contributions(
                Parabolic::Klingen,
                n,
                vec![kostant_contribution(module, 0, module.levi_dim)],
                provenance,
            )
        })
        .collect();
    perverse_reindex(entries, lambda.r())
}

/// Fills `n_perverse = n_classical + r + dim Z_m` and the matching weight
/// shift. `R_ℓ(V) = μ(V)[−r]` accounts for `r`.
pub fn perverse_reindex(mut entries: Vec<CohomologyEntry>, r: i64) -> Result<Vec<CohomologyEntry>> {
    let Some(first) = entries.first() else {
        return Ok(entries);
    };
    let m = first.m;
    if entries.iter().any(|e| e.m != m) {
        return Err(Error::MixedStrata);
    }
    let shift = m.stratum_dimension();
    for entry in &mut entries {
        entry.n_perverse = entry.n_classical + r + shift;
        entry.perverse_weight = entry.weight + shift;
    }
    Ok(entries)
}

/// One profile per Siegel stratum followed by the Klingen profile.
pub fn boundary_profiles(
    lambda: WeightTriple,
    strata: &[StratumDatum],
) -> Result<Vec<BoundaryProfile>> {
    if strata.is_empty() {
        return Err(Error::EmptyStrata);
    }
    let mut profiles = Vec::with_capacity(strata.len() + 1);
    for &s in strata {
        profiles.push(BoundaryProfile {
            m: Parabolic::Siegel,
            stratum: Some(s),
            entries: siegel_profile(lambda, s)?,
        });
    }
    profiles.push(BoundaryProfile {
        m: Parabolic::Klingen,
        stratum: None,
        entries: klingen_profile(lambda)?,
    });
    Ok(profiles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k1: i64, k2: i64, r: i64) -> WeightTriple {
        WeightTriple::new(k1, k2, r).unwrap()
    }

    fn s(g: i64, c: i64) -> StratumDatum {
        StratumDatum::new(g, c).unwrap()
    }

    #[test]
    fn neatness_is_enforced() {
        assert!(StratumDatum::new(0, 3).is_ok());
        assert!(StratumDatum::new(1, 1).is_ok());
        assert_eq!(
            StratumDatum::new(0, 2),
            Err(Error::InvalidStratum { g: 0, c: 2 })
        );
        assert_eq!(
            StratumDatum::new(2, 0),
            Err(Error::InvalidStratum { g: 2, c: 0 })
        );
        assert!(StratumDatum::new(-1, 5).is_err());
    }

    #[test]
    fn group_cohomology_dimensions() {
        assert_eq!(group_cohomology_dim(6, s(0, 3), 1), Ok(7));
        assert_eq!(group_cohomology_dim(0, s(1, 1), 1), Ok(2));
        assert_eq!(group_cohomology_dim(2, s(0, 3), 0), Ok(0));
        assert_eq!(group_cohomology_dim(0, s(0, 3), 0), Ok(1));
        assert_eq!(
            group_cohomology_dim(1, s(0, 3), 2),
            Err(Error::DegreeOutOfRange(2))
        );
        assert_eq!(
            group_cohomology_dim(1, s(0, 3), -1),
            Err(Error::DegreeOutOfRange(-1))
        );
    }

    #[test]
    fn siegel_profile_for_3_1_4() {
        for stratum in [s(0, 3), s(1, 1), s(2, 5)] {
            let entries = siegel_profile(w(3, 1, 4), stratum).unwrap();
            assert_eq!(entries.len(), 5);
            assert!(!entries[0].nonzero);

            assert_eq!(entries[1].weight, 0);
            assert_eq!(entries[1].rank_lower, 3 * stratum.euler_factor());
            assert!(entries[1].nonzero);

            assert_eq!(entries[2].weight, 4);
            assert_eq!(entries[2].rank_lower, 7 * stratum.euler_factor());
            assert_eq!(entries[2].n_perverse, 6);
        }
    }

    #[test]
    fn siegel_degree_zero_nonzero_iff_k1_equals_k2() {
        let entries = siegel_profile(w(2, 2, 4), s(0, 3)).unwrap();
        assert!(entries[0].nonzero);
        assert_eq!(entries[0].weight, 0);
        assert_eq!(entries[0].rank_lower, 1);
        // u = 0 in degree one: 2g - 1 + c
        let entries = siegel_profile(w(2, 2, 4), s(1, 4)).unwrap();
        assert_eq!(entries[1].rank_lower, 5);
    }

    #[test]
    fn klingen_profile_for_3_1_4() {
        let entries = klingen_profile(w(3, 1, 4)).unwrap();
        assert_eq!(entries.len(), 4);
        assert_eq!(entries[0].weight, 1);
        assert_eq!(entries[1].weight, 4);
        assert_eq!(entries[1].rank_lower, 5);
        assert!(entries.iter().all(|e| e.nonzero));

        let trivial = klingen_profile(w(0, 0, 0)).unwrap();
        assert_eq!(trivial[0].weight, 0);
        assert_eq!(trivial[0].rank_lower, 1);
    }

    #[test]
    fn perverse_reindexing() {
        let siegel = siegel_profile(w(3, 1, 4), s(0, 3)).unwrap();
        assert_eq!(siegel[2].n_perverse, 6);
        assert_eq!(siegel[2].perverse_weight, siegel[2].weight);

        let klingen = klingen_profile(w(3, 1, 4)).unwrap();
        assert_eq!(klingen[1].n_perverse, 6);
        assert_eq!(klingen[1].perverse_weight, 5);

        let trivial = klingen_profile(w(0, 0, 0)).unwrap();
        assert_eq!(trivial[0].n_perverse, 1);

        let mut mixed = siegel.clone();
        mixed.push(klingen[0].clone());
        assert_eq!(perverse_reindex(mixed, 4), Err(Error::MixedStrata));
        assert_eq!(perverse_reindex(Vec::new(), 4), Ok(Vec::new()));
    }

    #[test]
    fn provenance_marks_proven_range() {
        let siegel = siegel_profile(w(3, 1, 4), s(0, 3)).unwrap();
        let r = 4;
        for e in &siegel {
            assert_eq!(e.provenance == Provenance::Proven, e.n_perverse <= r + 2);
        }
        for e in &klingen_profile(w(3, 1, 4)).unwrap() {
            assert_eq!(e.provenance == Provenance::Proven, e.n_perverse <= r + 2);
        }
    }

    #[test]
    fn boundary_profiles_need_strata() {
        assert_eq!(boundary_profiles(w(3, 1, 4), &[]), Err(Error::EmptyStrata));
        let profiles = boundary_profiles(w(3, 1, 4), &[s(0, 3), s(1, 1)]).unwrap();
        assert_eq!(profiles.len(), 3);
        assert_eq!(profiles[2].m, Parabolic::Klingen);
    }

    #[test]
    fn stratum_serde_validates() {
        let ok: StratumDatum = serde_json::from_str(r#"{"g":0,"c":3}"#).unwrap();
        assert_eq!(ok, s(0, 3));
        assert!(serde_json::from_str::<StratumDatum>(r#"{"g":0,"c":2}"#).is_err());
    }
}
