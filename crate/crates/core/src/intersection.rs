//! Boundary restriction of the intermediate extension `j_!*`, and the
//! avoided weight interval it determines.
//!
//! On `Z_1` the restriction is the truncation `τ^{≤ r+2}` of the full direct
//! image. On `Z_0` it agrees with the direct image in perverse degrees
//! `<= r+1`, vanishes from `r+3` on, and in degree `r+2` is the kernel of the
//! adjunction map
//!
//! ```text
//! ad: H^1(Γ, H^1(Lie(W_0), V_λ)) → (rank c)
//! ```
//!
//! whose source has rank `(k1+k2+3)(2g−2+c)`. Only the rank of the source and
//! target are known, so the kernel rank is reported as an interval.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boundary::{
    boundary_profiles, klingen_profile, siegel_profile, BoundaryProfile, CohomologyEntry,
    Provenance, StratumDatum,
};
use crate::error::{Error, Result};
use crate::kostant::{nilpotent_cohomology, LeviModule};
use crate::root_data::{Parabolic, WeightTriple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediateProfile {
    pub m: Parabolic,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<StratumDatum>,
    pub entries: Vec<CohomologyEntry>,
    /// Siegel stratum only: perverse degree `r+2`.
    pub kernel_entry: Option<CohomologyEntry>,
}

impl IntermediateProfile {
    /// Entries and the kernel entry, in degree order.
    pub fn all_entries(&self) -> impl Iterator<Item = &CohomologyEntry> {
        self.entries.iter().chain(self.kernel_entry.iter())
    }
}

/// Ranks of the source and target of `ad` on a Siegel stratum.
pub fn kernel_rank_bounds(lambda: WeightTriple, s: StratumDatum) -> Result<(i64, i64)> {
    lambda.require_dominant()?;
    let source = (lambda.k1() + lambda.k2() + 3)
        .checked_mul(s.euler_factor())
        .ok_or(Error::Overflow("kernel_rank_bounds"))?;
    Ok((source, s.c()))
}

pub fn siegel_intermediate(lambda: WeightTriple, s: StratumDatum) -> Result<IntermediateProfile> {
    let r = lambda.r();
    let profile = siegel_profile(lambda, s)?;
    let degree_two = profile
        .iter()
        .find(|e| e.n_perverse == r + 2)
        .cloned()
        .expect("siegel profile covers r+2");

    let (source, target) = kernel_rank_bounds(lambda, s)?;
    if degree_two.rank_upper != source {
        return Err(Error::InvariantViolation(format!(
            "degree-two rank {} differs from (k1+k2+3)(2g-2+c) = {source}",
            degree_two.rank_upper
        )));
    }
    let floor = if lambda.k1() >= 1 { 1 } else { 0 };
    let rank_lower = (source - target).max(floor).max(0);
    let kernel = CohomologyEntry {
        rank_lower,
        rank_upper: source,
        nonzero: rank_lower >= 1,
        provenance: Provenance::Proven,
        origin: degree_two
            .origin
            .iter()
            .copied()
            .filter(|c| c.rank > 0)
            .collect(),
        ..degree_two
    };

    Ok(IntermediateProfile {
        m: Parabolic::Siegel,
        stratum: Some(s),
        entries: profile
            .into_iter()
            .filter(|e| e.n_perverse <= r + 1)
            .collect(),
        kernel_entry: Some(kernel),
    })
}

pub fn klingen_intermediate(lambda: WeightTriple) -> Result<IntermediateProfile> {
    let r = lambda.r();
    Ok(IntermediateProfile {
        m: Parabolic::Klingen,
        stratum: None,
        entries: klingen_profile(lambda)?
            .into_iter()
            .filter(|e| e.n_perverse <= r + 2)
            .collect(),
        kernel_entry: None,
    })
}

/// One profile per Siegel stratum for `m = 0`, a single profile for `m = 1`.
pub fn intermediate_profile(
    lambda: WeightTriple,
    m: Parabolic,
    strata: &[StratumDatum],
) -> Result<Vec<IntermediateProfile>> {
    match m {
        Parabolic::Siegel => {
            if strata.is_empty() {
                return Err(Error::EmptyStrata);
            }
            strata
                .iter()
                .map(|&s| siegel_intermediate(lambda, s))
                .collect()
        }
        Parabolic::Klingen => Ok(vec![klingen_intermediate(lambda)?]),
    }
}

/// `(k1+k2+3)(2g−2+c) > c`: the adjunction map cannot be injective.
/// Requires `k1 >= 1`; for `λ = 0` the bound `>= 4(2g−2+c)` is unavailable.
pub fn rank_inequality_check(lambda: WeightTriple, s: StratumDatum) -> Result<bool> {
    lambda.require_dominant()?;
    if lambda.k1() < 1 {
        return Err(Error::PreconditionViolation(format!(
            "rank inequality needs k1 >= 1, got {lambda}"
        )));
    }
    let (source, target) = kernel_rank_bounds(lambda, s)?;
    Ok(source > target)
}

/// A nonzero intermediate-extension entry realizing `n_perverse − weight = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub m: Parabolic,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratum: Option<StratumDatum>,
    pub n_perverse: i64,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidedInterval {
    pub k: i64,
    pub witnesses: Vec<Witness>,
}

impl AvoidedInterval {
    /// `[−k+1, k]`, or `None` when `k = 0`.
    pub fn bounds(&self) -> Option<(i64, i64)> {
        (self.k >= 1).then_some((1 - self.k, self.k))
    }
}

fn interval_from_profiles(
    lambda: WeightTriple,
    profiles: &[IntermediateProfile],
) -> Result<AvoidedInterval> {
    let gaps: Vec<(i64, Witness)> = profiles
        .iter()
        .flat_map(|profile| {
            profile.all_entries().filter(|e| e.nonzero).map(|e| {
                (
                    e.weight_gap(),
                    Witness {
                        m: profile.m,
                        stratum: profile.stratum,
                        n_perverse: e.n_perverse,
                        weight: e.perverse_weight,
                    },
                )
            })
        })
        .collect();
    let k = gaps
        .iter()
        .map(|(gap, _)| *gap)
        .min()
        .ok_or_else(|| Error::InvariantViolation("no nonzero boundary entries".into()))?;
    let expected = lambda.k_invariant()?;
    if k != expected {
        return Err(Error::InvariantViolation(format!(
            "computed k = {k} for {lambda}, closed form min(k1-k2, k2) = {expected}"
        )));
    }
    let witnesses = gaps
        .into_iter()
        .filter(|(gap, _)| *gap == k)
        .map(|(_, w)| w)
        .collect();
    Ok(AvoidedInterval { k, witnesses })
}

fn all_intermediate_profiles(
    lambda: WeightTriple,
    strata: &[StratumDatum],
) -> Result<Vec<IntermediateProfile>> {
    let mut profiles = intermediate_profile(lambda, Parabolic::Siegel, strata)?;
    profiles.extend(intermediate_profile(lambda, Parabolic::Klingen, strata)?);
    Ok(profiles)
}

/// Largest `k` with every nonzero entry of weights `<= n − k`, over all
/// supplied Siegel strata and the Klingen stratum, with the entries that
/// attain it.
pub fn avoided_interval(lambda: WeightTriple, strata: &[StratumDatum]) -> Result<AvoidedInterval> {
    lambda.require_dominant()?;
    let profiles = all_intermediate_profiles(lambda, strata)?;
    interval_from_profiles(lambda, &profiles)
}

mod pair_or_empty {
    use super::*;

    pub fn serialize<S: Serializer>(
        value: &Option<(i64, i64)>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match value {
            Some((a, b)) => [*a, *b].serialize(s),
            None => <[i64; 0]>::default().serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<(i64, i64)>, D::Error> {
        let items = Vec::<i64>::deserialize(d)?;
        match items.as_slice() {
            [] => Ok(None),
            [a, b] => Ok(Some((*a, *b))),
            _ => Err(serde::de::Error::invalid_length(
                items.len(),
                &"0 or 2 integers",
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantTable {
    pub m: Parabolic,
    pub modules: Vec<LeviModule>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediateSection {
    pub profiles: Vec<IntermediateProfile>,
    pub witnesses: Vec<Witness>,
    /// `r + 3` for regular `λ`: interior cohomology lives in one degree.
    pub interior_concentration_degree: Option<i64>,
    /// How the occurrence of weight `k + 1` is obtained.
    pub upper_weight_source: String,
}

/// Full analysis of one weight. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub lambda: WeightTriple,
    pub k: i64,
    #[serde(with = "pair_or_empty")]
    pub avoided_interval: Option<(i64, i64)>,
    #[serde(with = "pair_or_empty")]
    pub occurring_weights: Option<(i64, i64)>,
    pub regular: bool,
    pub in_avoidance_category: bool,
    /// `s = r + 3`: Verdier duality sends the complex to its `(s)[2s]` twist.
    pub duality_twist: i64,
    pub kostant: Vec<KostantTable>,
    pub boundary: Vec<BoundaryProfile>,
    pub intermediate: IntermediateSection,
    pub strata: Vec<StratumDatum>,
}

pub fn analysis_report(lambda: WeightTriple, strata: &[StratumDatum]) -> Result<AnalysisReport> {
    lambda.require_dominant()?;
    if strata.is_empty() {
        return Err(Error::EmptyStrata);
    }
    let kostant = Parabolic::ALL
        .iter()
        .map(|&m| {
            Ok(KostantTable {
                m,
                modules: nilpotent_cohomology(lambda, m)?.to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let boundary = boundary_profiles(lambda, strata)?;
    let profiles = all_intermediate_profiles(lambda, strata)?;
    let interval = interval_from_profiles(lambda, &profiles)?;

    let regular = lambda.is_regular();
    let k = interval.k;
    if regular != (k >= 1) {
        return Err(Error::InvariantViolation(format!(
            "regularity of {lambda} disagrees with k = {k}"
        )));
    }
    let r = lambda.r();
    Ok(AnalysisReport {
        lambda,
        k,
        avoided_interval: interval.bounds(),
        occurring_weights: (k >= 1).then_some((-k, k + 1)),
        regular,
        in_avoidance_category: k >= 1,
        duality_twist: r + 3,
        kostant,
        boundary,
        intermediate: IntermediateSection {
            profiles,
            witnesses: interval.witnesses,
            interior_concentration_degree: regular.then_some(r + 3),
            upper_weight_source: "duality".to_string(),
        },
        strata: strata.to_vec(),
    })
}
