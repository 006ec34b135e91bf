//! Property suites behind `siegel-weights verify`.
//!
//! Every suite is a list of independent cases evaluated in parallel; the
//! outcome (counts and first failure in case order) does not depend on the
//! number of threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boundary::{klingen_profile, siegel_profile, StratumDatum};
use crate::error::Result;
use crate::freudenthal::freudenthal_character;
use crate::intersection::{avoided_interval, rank_inequality_check};
use crate::kostant::{character_in, euler_check_in, nilpotent_cohomology_in};
use crate::root_data::{Parabolic, RootDatum, WeightTriple};
use crate::weyl::all_elements;

/// Largest `k1` for which the Freudenthal cross-check runs.
pub const FREUDENTHAL_MAX_K1: i64 = 4;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_k1: i64,
    pub seed: u64,
    pub samples: usize,
    pub strata: Vec<StratumDatum>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_k1: 6,
            seed: 7,
            samples: 50,
            strata: vec![
                StratumDatum::default(),
                StratumDatum::new(1, 1).expect("neat"),
                StratumDatum::new(2, 5).expect("neat"),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub suite: String,
    pub lambda: Option<WeightTriple>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }

    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.suites.iter().find_map(|s| s.first_failure.as_ref())
    }
}

type CaseResult = std::result::Result<(), String>;

fn run_suite<T: Sync>(
    name: &str,
    cases: &[T],
    lambda_of: impl Fn(&T) -> Option<WeightTriple> + Sync,
    check: impl Fn(&T) -> CaseResult + Sync,
) -> SuiteOutcome {
    let results: Vec<CaseResult> = cases.par_iter().map(&check).collect();
    let failed = results.iter().filter(|r| r.is_err()).count();
    let first_failure = cases
        .iter()
        .zip(&results)
        .find_map(|(case, result)| result.as_ref().err().map(|d| (case, d.clone())))
        .map(|(case, detail)| Counterexample {
            suite: name.to_string(),
            lambda: lambda_of(case),
            detail,
        });
    SuiteOutcome {
        name: name.to_string(),
        passed: results.len() - failed,
        failed,
        first_failure,
    }
}

fn ensure(condition: bool, detail: impl FnOnce() -> String) -> CaseResult {
    if condition {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lift<T>(result: Result<T>) -> std::result::Result<T, String> {
    result.map_err(|e| format!("{}: {e}", e.kind()))
}

fn weight(k1: i64, k2: i64, r: i64) -> WeightTriple {
    WeightTriple::new(k1, k2, r).expect("parity-correct by construction")
}

/// Every dominant `(k1, k2)` with `k1 <= max_k1`, with an `r` of the right
/// parity drawn from `rng`.
pub fn dominant_grid(max_k1: i64, rng: &mut impl Rng) -> Vec<WeightTriple> {
    let mut out = Vec::new();
    for k1 in 0..=max_k1.max(0) {
        for k2 in 0..=k1 {
            let r = k1 + k2 + 2 * rng.gen_range(-3..=3);
            out.push(weight(k1, k2, r));
        }
    }
    out
}

/// `count` dominant weights with `k1 <= max_k1`.
pub fn random_dominant(count: usize, max_k1: i64, rng: &mut impl Rng) -> Vec<WeightTriple> {
    (0..count)
        .map(|_| {
            let k1 = rng.gen_range(0..=max_k1.max(0));
            let k2 = rng.gen_range(0..=k1);
            let r = k1 + k2 + 2 * rng.gen_range(-10..=10);
            weight(k1, k2, r)
        })
        .collect()
}

/// The eight highest weights of `H^q(Lie(W_m), V_λ)` in closed form.
fn closed_form_table(l: WeightTriple, m: Parabolic) -> [WeightTriple; 4] {
    let (k1, k2, r) = (l.k1(), l.k2(), l.r());
    match m {
        Parabolic::Siegel => [
            weight(k1, k2, r),
            weight(k1, -k2 - 2, r),
            weight(k2 - 1, -k1 - 3, r),
            weight(-k2 - 3, -k1 - 3, r),
        ],
        Parabolic::Klingen => [
            weight(k1, k2, r),
            weight(k2 - 1, k1 + 1, r),
            weight(-k2 - 3, k1 + 1, r),
            weight(-k1 - 4, k2, r),
        ],
    }
}

/// Weights of `H^0` and `H^1` in closed form.
fn closed_form_weights(l: WeightTriple, m: Parabolic) -> [i64; 2] {
    let (k1, k2, r) = (l.k1(), l.k2(), l.r());
    match m {
        Parabolic::Siegel => [(r + 1) - (k1 + k2) - 1, (r + 2) - (k1 - k2)],
        Parabolic::Klingen => [(r + 1) - k1 - 1, (r + 2) - k2 - 1],
    }
}

fn kostant_case(datum: &RootDatum, l: WeightTriple) -> CaseResult {
    for m in Parabolic::ALL {
        let modules = lift(nilpotent_cohomology_in(datum, l, m))?;
        let got: Vec<WeightTriple> = modules.iter().map(|x| x.highest_weight).collect();
        let want = closed_form_table(l, m);
        ensure(got == want, || {
            format!(
                "parabolic {}: highest weights {got:?}, expected {want:?}",
                m.index()
            )
        })?;
        let weights = [modules[0].motivic_weight, modules[1].motivic_weight];
        ensure(weights == closed_form_weights(l, m), || {
            format!("parabolic {}: weights {weights:?}", m.index())
        })?;
    }
    Ok(())
}

fn euler_case(datum: &RootDatum, l: WeightTriple) -> CaseResult {
    for m in Parabolic::ALL {
        ensure(lift(euler_check_in(datum, l, m))?, || {
            format!(
                "Euler characteristic identity fails for parabolic {}",
                m.index()
            )
        })?;
    }
    Ok(())
}

fn dot_case(datum: &RootDatum, l: WeightTriple) -> CaseResult {
    for a in all_elements() {
        for b in all_elements() {
            let lhs = a.dot_in(datum, b.dot_in(datum, l));
            let rhs = a.compose(*b).dot_in(datum, l);
            ensure(lhs == rhs, || {
                format!("{a} · ({b} · λ) = {lhs} but ({a}{b}) · λ = {rhs}")
            })?;
        }
    }
    Ok(())
}

fn freudenthal_case(datum: &RootDatum, l: WeightTriple) -> CaseResult {
    let weyl = lift(character_in(datum, l))?;
    let recursion = lift(freudenthal_character(l))?;
    ensure(weyl == recursion, || {
        format!(
            "Weyl character (mass {}) differs from Freudenthal (mass {})",
            weyl.mass(),
            recursion.mass()
        )
    })
}

/// Perverse degree `r+2` on both strata is nonzero with the stated weights,
/// and every entry up to `r+2` has weights `<= n − (k1−k2)` resp. `<= n − k2`.
pub fn boundary_theorem_case(l: WeightTriple, s: StratumDatum) -> CaseResult {
    let r = l.r();
    let (k1, k2) = (l.k1(), l.k2());
    let siegel = lift(siegel_profile(l, s))?;
    let klingen = lift(klingen_profile(l))?;
    for (entries, top_weight, slack, label) in [
        (&siegel, (r + 2) - (k1 - k2), k1 - k2, "Siegel"),
        (&klingen, (r + 2) - k2, k2, "Klingen"),
    ] {
        let top = entries
            .iter()
            .find(|e| e.n_perverse == r + 2)
            .ok_or_else(|| format!("{label}: no entry in degree r+2"))?;
        ensure(top.nonzero && top.perverse_weight == top_weight, || {
            format!(
                "{label}: degree r+2 nonzero={} weight={} (expected {top_weight})",
                top.nonzero, top.perverse_weight
            )
        })?;
        for e in entries
            .iter()
            .filter(|e| e.nonzero && e.n_perverse <= r + 2)
        {
            ensure(e.perverse_weight <= e.n_perverse - slack, || {
                format!(
                    "{label}: degree {} has weight {} > n - {slack}",
                    e.n_perverse, e.perverse_weight
                )
            })?;
        }
    }
    ensure(l.k1() == l.k2() || !siegel[0].nonzero, || {
        "Siegel degree r is nonzero although k1 > k2".to_string()
    })
}

/// All neat `(g, c)` with `g <= max_g`, `c <= max_c`.
pub fn neat_strata(max_g: i64, max_c: i64) -> Vec<StratumDatum> {
    (0..=max_g)
        .flat_map(|g| (1..=max_c).filter_map(move |c| StratumDatum::new(g, c).ok()))
        .collect()
}

pub fn run_verify(datum: &RootDatum, config: &VerifyConfig) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples = random_dominant(config.samples, config.max_k1, &mut rng);
    let grid = dominant_grid(config.max_k1, &mut rng);
    let some = |l: &WeightTriple| Some(*l);

    let mut suites = vec![
        run_suite("kostant_closed_forms", &samples, some, |l| {
            kostant_case(datum, *l)
        }),
        run_suite("dot_action_group_law", &samples, some, |l| {
            dot_case(datum, *l)
        }),
        run_suite("euler_characteristic", &grid, some, |l| {
            euler_case(datum, *l)
        }),
    ];

    let small: Vec<WeightTriple> = grid
        .iter()
        .copied()
        .filter(|l| l.k1() <= FREUDENTHAL_MAX_K1)
        .collect();
    suites.push(run_suite("freudenthal_multiplicities", &small, some, |l| {
        freudenthal_case(datum, *l)
    }));

    let regular: Vec<(WeightTriple, StratumDatum)> = grid
        .iter()
        .filter(|l| l.is_regular())
        .flat_map(|l| config.strata.iter().map(move |s| (*l, *s)))
        .collect();
    suites.push(run_suite(
        "boundary_theorem",
        &regular,
        |(l, _)| Some(*l),
        |(l, s)| boundary_theorem_case(*l, *s),
    ));

    let neat = neat_strata(5, 20);
    let positive: Vec<(WeightTriple, StratumDatum)> = grid
        .iter()
        .filter(|l| l.k1() >= 1)
        .flat_map(|l| neat.iter().map(move |s| (*l, *s)))
        .collect();
    suites.push(run_suite(
        "rank_inequality",
        &positive,
        |(l, _)| Some(*l),
        |(l, s)| {
            ensure(lift(rank_inequality_check(*l, *s))?, || {
                format!("(k1+k2+3)(2g-2+c) <= c at (g, c) = ({}, {})", s.g(), s.c())
            })
        },
    ));

    suites.push(run_suite("avoided_interval", &grid, some, |l| {
        let expected = lift(l.k_invariant())?;
        let mut choices: Vec<Vec<StratumDatum>> = config.strata.iter().map(|s| vec![*s]).collect();
        choices.push(config.strata.clone());
        for strata in choices.iter().filter(|c| !c.is_empty()) {
            let k = lift(avoided_interval(*l, strata))?.k;
            ensure(k == expected, || {
                format!("k = {k} with strata {strata:?}, expected {expected}")
            })?;
        }
        Ok(())
    }));

    VerifyReport { suites }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Exponent;

    #[test]
    fn default_run_passes() {
        let report = run_verify(&RootDatum::GSP4, &VerifyConfig::default());
        for suite in &report.suites {
            assert_eq!(suite.failed, 0, "{suite:?}");
            assert!(suite.passed > 0, "{}", suite.name);
        }
    }

    #[test]
    fn trivial_range_passes() {
        let config = VerifyConfig {
            max_k1: 0,
            ..VerifyConfig::default()
        };
        assert!(run_verify(&RootDatum::GSP4, &config).passed());
    }

    #[test]
    fn corrupted_rho_is_caught() {
        let datum = RootDatum::with_rho(Exponent::new(3, 1, 0));
        let report = run_verify(&datum, &VerifyConfig::default());
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        assert_eq!(failure.suite, "kostant_closed_forms");
        assert!(failure.lambda.is_some());
    }

    #[test]
    fn neat_strata_enumeration() {
        let strata = neat_strata(5, 20);
        // g = 0: c in 3..=20 (18), g = 1..=5: c in 1..=20 (100)
        assert_eq!(strata.len(), 118);
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let config = VerifyConfig::default();
        let a = run_verify(&RootDatum::GSP4, &config);
        let b = run_verify(&RootDatum::GSP4, &config);
        assert_eq!(a, b);
    }
}
