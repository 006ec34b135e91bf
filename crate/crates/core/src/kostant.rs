//! Cohomology of the nilradicals `Lie(W_m)` with coefficients in `V_λ`,
//! as representations of the Levi quotients `Q_m / W_m ≅ Gm × GL2`.
//!
//! By Kostant, `H^q(Lie(W_m), V_λ)` is the irreducible Levi module of
//! highest weight `w · λ` for the unique minimal representative `w` of
//! length `q`. The formal-character routines here exist to check that
//! statement independently (see [`euler_check`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::root_data::{Exponent, Parabolic, RootDatum, WeightTriple};
use crate::weyl::{all_elements, minimal_representatives};

/// One graded piece `H^q(Lie(W_m), V_λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviModule {
    pub m: Parabolic,
    pub q: u8,
    pub highest_weight: WeightTriple,
    /// Dimension as a `GL2` representation: `restriction_weight + 1`.
    pub levi_dim: i64,
    pub restriction_weight: i64,
    pub motivic_weight: i64,
}

impl LeviModule {
    fn new(m: Parabolic, q: u8, highest_weight: WeightTriple) -> Result<Self> {
        let restriction_weight = highest_weight.levi_restriction_weight(m);
        if restriction_weight < 0 {
            return Err(Error::InvariantViolation(format!(
                "H^{q} for parabolic {} has non-Levi-dominant highest weight {highest_weight}",
                m.index()
            )));
        }
        Ok(LeviModule {
            m,
            q,
            highest_weight,
            levi_dim: restriction_weight + 1,
            restriction_weight,
            motivic_weight: highest_weight.motivic_weight(m),
        })
    }
}

/// The four nonzero `H^q(Lie(W_m), V_λ)`, `q = 0..=3`.
pub fn nilpotent_cohomology(lambda: WeightTriple, m: Parabolic) -> Result<[LeviModule; 4]> {
    nilpotent_cohomology_in(&RootDatum::GSP4, lambda, m)
}

pub fn nilpotent_cohomology_in(
    datum: &RootDatum,
    lambda: WeightTriple,
    m: Parabolic,
) -> Result<[LeviModule; 4]> {
    lambda.require_dominant()?;
    let reps = minimal_representatives(m);
    let mut modules = Vec::with_capacity(4);
    for (q, w) in reps.iter().enumerate() {
        debug_assert_eq!(w.length(), q);
        modules.push(LeviModule::new(m, q as u8, w.dot_in(datum, lambda))?);
    }
    Ok(modules.try_into().expect("four representatives"))
}

/// Formal character of `V_λ` by the Weyl character formula.
pub fn character(lambda: WeightTriple) -> Result<LaurentPoly> {
    character_in(&RootDatum::GSP4, lambda)
}

/// Weyl numerator divided by the Weyl denominator.
///
/// The denominator is first checked to factor as `e^ρ Π_{β>0} (1 − e^{−β})`;
/// the division is then a shift followed by four exact binomial divisions.
pub fn character_in(datum: &RootDatum, lambda: WeightTriple) -> Result<LaurentPoly> {
    lambda.require_dominant()?;
    let rho = datum.rho();

    let alternating_sum = |x: Exponent| {
        let mut p = LaurentPoly::zero();
        for w in all_elements() {
            p.add_term(w.act_exponent(x), w.sign());
        }
        p
    };

    let denominator = alternating_sum(rho);
    let factored = datum
        .positive_roots()
        .iter()
        .fold(LaurentPoly::monomial(rho, 1), |acc, b| {
            &acc * &LaurentPoly::one_minus_inverse(b.exponent())
        });
    if denominator != factored {
        return Err(Error::DivisionFailure(format!(
            "Weyl denominator for ρ = {rho} does not factor over the positive roots"
        )));
    }

    let mut quotient = alternating_sum(lambda.exponent() + rho).shift(-rho);
    for b in datum.positive_roots() {
        quotient = quotient.div_one_minus_inverse(b.exponent())?;
    }
    Ok(quotient)
}

/// Character of the irreducible Levi module of highest weight `mu`, by the
/// rank-one Weyl formula `(e^μ − e^{s(μ) − α}) / (1 − e^{−α})`.
pub fn levi_character(datum: &RootDatum, mu: WeightTriple, m: Parabolic) -> Result<LaurentPoly> {
    let alpha = datum.levi_root(m).exponent();
    let mu = mu.exponent();
    let n = mu.coroot_pairing(alpha);
    if n < 0 {
        return Err(Error::PreconditionViolation(format!(
            "{mu} is not dominant for the Levi of parabolic {}",
            m.index()
        )));
    }
    let reflected = mu - alpha.scale(n);
    let mut numerator = LaurentPoly::monomial(mu, 1);
    numerator.add_term(reflected - alpha, -1);
    numerator.div_one_minus_inverse(alpha)
}

/// Euler characteristic identity
/// `Σ_q (−1)^q ch H^q(Lie(W_m), V_λ) = ch V_λ · Π_{β ∈ Φ(W_m)} (1 − e^{−β})`.
pub fn euler_check(lambda: WeightTriple, m: Parabolic) -> Result<bool> {
    euler_check_in(&RootDatum::GSP4, lambda, m)
}

pub fn euler_check_in(datum: &RootDatum, lambda: WeightTriple, m: Parabolic) -> Result<bool> {
    let modules = nilpotent_cohomology_in(datum, lambda, m)?;
    let mut lhs = LaurentPoly::zero();
    for module in &modules {
        let ch = levi_character(datum, module.highest_weight, m)?;
        lhs = if module.q % 2 == 0 {
            &lhs + &ch
        } else {
            &lhs - &ch
        };
    }
    let rhs = datum
        .nilradical_roots(m)
        .iter()
        .fold(character_in(datum, lambda)?, |acc, b| {
            &acc * &LaurentPoly::one_minus_inverse(b.exponent())
        });
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k1: i64, k2: i64, r: i64) -> WeightTriple {
        WeightTriple::new(k1, k2, r).unwrap()
    }

    fn highest_weights(lambda: WeightTriple, m: Parabolic) -> Vec<WeightTriple> {
        nilpotent_cohomology(lambda, m)
            .unwrap()
            .iter()
            .map(|module| module.highest_weight)
            .collect()
    }

    #[test]
    fn siegel_table_for_3_1_4() {
        assert_eq!(
            highest_weights(w(3, 1, 4), Parabolic::Siegel),
            vec![w(3, 1, 4), w(3, -3, 4), w(0, -6, 4), w(-4, -6, 4)]
        );
    }

    #[test]
    fn klingen_table_for_3_1_4() {
        assert_eq!(
            highest_weights(w(3, 1, 4), Parabolic::Klingen),
            vec![w(3, 1, 4), w(0, 4, 4), w(-4, 4, 4), w(-7, 1, 4)]
        );
    }

    #[test]
    fn trivial_coefficients() {
        let modules = nilpotent_cohomology(w(0, 0, 0), Parabolic::Siegel).unwrap();
        assert_eq!(modules[0].highest_weight, w(0, 0, 0));
        assert_eq!(modules[0].levi_dim, 1);
        assert_eq!(character(w(0, 0, 0)).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn non_dominant_input_is_rejected() {
        assert_eq!(
            nilpotent_cohomology(w(1, 3, 0), Parabolic::Siegel),
            Err(Error::NotDominant(w(1, 3, 0)))
        );
        assert!(matches!(character(w(0, -2, 0)), Err(Error::NotDominant(_))));
    }

    #[test]
    fn standard_representation() {
        for r in [-3, 1, 5] {
            let ch = character(w(1, 0, r)).unwrap();
            assert_eq!(ch.num_terms(), 4);
            assert!(ch.terms().all(|(x, c)| c == 1 && x.r == r));
            let mut ks: Vec<(i64, i64)> = ch.terms().map(|(x, _)| (x.k1, x.k2)).collect();
            ks.sort();
            assert_eq!(ks, vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
        }
    }

    #[test]
    fn levi_dims_and_module_data() {
        let modules = nilpotent_cohomology(w(3, 1, 4), Parabolic::Klingen).unwrap();
        assert_eq!(modules[1].restriction_weight, 4);
        assert_eq!(modules[1].levi_dim, 5);
        assert_eq!(modules[1].motivic_weight, 4);
        let ch = levi_character(
            &RootDatum::GSP4,
            modules[1].highest_weight,
            Parabolic::Klingen,
        )
        .unwrap();
        assert_eq!(ch.mass(), 5);
    }

    #[test]
    fn euler_identity_small_cases() {
        assert_eq!(euler_check(w(0, 0, 0), Parabolic::Siegel), Ok(true));
        assert_eq!(euler_check(w(1, 1, 2), Parabolic::Klingen), Ok(true));
        assert_eq!(euler_check(w(3, 1, 4), Parabolic::Siegel), Ok(true));
    }

    #[test]
    fn euler_identity_detects_an_unshifted_table() {
        // Using the linear action w(λ) instead of the dot action must fail.
        let lambda = w(3, 1, 4);
        let datum = RootDatum::GSP4;
        let m = Parabolic::Siegel;
        let mut lhs = LaurentPoly::zero();
        for (q, rep) in minimal_representatives(m).iter().enumerate() {
            let ch = levi_character(&datum, rep.act(lambda), m).unwrap();
            lhs = if q % 2 == 0 { &lhs + &ch } else { &lhs - &ch };
        }
        let rhs = datum
            .nilradical_roots(m)
            .iter()
            .fold(character(lambda).unwrap(), |acc, b| {
                &acc * &LaurentPoly::one_minus_inverse(b.exponent())
            });
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn corrupted_rho_breaks_the_character() {
        let datum = RootDatum::with_rho(Exponent::new(2, 2, 0));
        assert!(matches!(
            character_in(&datum, w(3, 1, 4)),
            Err(Error::DivisionFailure(_))
        ));
    }
}
