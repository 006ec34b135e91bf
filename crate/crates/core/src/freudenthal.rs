//! Weight multiplicities by Freudenthal's recursion.
//!
//! Shares nothing with the Weyl-character route in [`crate::kostant`] except
//! the root list: it never divides polynomials and never uses the dot action.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::root_data::{Exponent, RootDatum, WeightTriple};

fn dominant_conjugate(k1: i64, k2: i64) -> (i64, i64) {
    let (a, b) = (k1.abs(), k2.abs());
    (a.max(b), a.min(b))
}

/// `λ − μ ∈ N·(1,−1) + N·(0,2)` for dominant `μ`.
fn is_below(lambda: (i64, i64), mu: (i64, i64)) -> bool {
    let a = lambda.0 - mu.0;
    let d2 = lambda.1 - mu.1;
    a >= 0 && (a + d2) >= 0 && (a + d2) % 2 == 0
}

/// All weights of `V_λ` with multiplicities, as a formal character.
pub fn freudenthal_character(lambda: WeightTriple) -> Result<LaurentPoly> {
    lambda.require_dominant()?;
    let datum = RootDatum::GSP4;
    let top = (lambda.k1(), lambda.k2());
    let rho = datum.rho();
    let norm = |k1: i64, k2: i64| {
        let x = Exponent::new(k1, k2, 0) + rho;
        x.dot(x)
    };
    let top_norm = norm(top.0, top.1);

    let mut dominant: Vec<(i64, i64, i64)> = Vec::new();
    let span = top.0 + top.1;
    for a in 0..=2 * span {
        for b in 0..=2 * span {
            let mu = (top.0 - a, top.1 + a - 2 * b);
            if mu.0 >= mu.1 && mu.1 >= 0 {
                dominant.push((a + b, mu.0, mu.1));
            }
        }
    }
    dominant.sort();

    let mut mult: HashMap<(i64, i64), i64> = HashMap::new();
    let lookup = |mult: &HashMap<(i64, i64), i64>, k1: i64, k2: i64| {
        let conj = dominant_conjugate(k1, k2);
        if is_below(top, conj) {
            mult.get(&conj).copied().unwrap_or(0)
        } else {
            0
        }
    };

    for &(_, m1, m2) in &dominant {
        if (m1, m2) == top {
            mult.insert(top, 1);
            continue;
        }
        let mut numerator = 0i64;
        for beta in datum.positive_roots() {
            let beta = beta.exponent();
            let mut j = 1;
            loop {
                let nu = Exponent::new(m1, m2, 0) + beta.scale(j);
                if nu.k1.abs().max(nu.k2.abs()) > top.0 {
                    break;
                }
                numerator += lookup(&mult, nu.k1, nu.k2) * nu.dot(beta);
                j += 1;
            }
        }
        numerator *= 2;
        let denominator = top_norm - norm(m1, m2);
        if denominator <= 0 {
            return Err(Error::InvariantViolation(format!(
                "Freudenthal denominator {denominator} at ({m1},{m2})"
            )));
        }
        if numerator % denominator != 0 {
            return Err(Error::InvariantViolation(format!(
                "Freudenthal quotient {numerator}/{denominator} at ({m1},{m2}) is not integral"
            )));
        }
        let value = numerator / denominator;
        if value != 0 {
            mult.insert((m1, m2), value);
        }
    }

    let mut ch = LaurentPoly::zero();
    let r = lambda.r();
    for k1 in -top.0..=top.0 {
        for k2 in -top.0..=top.0 {
            let m = lookup(&mult, k1, k2);
            if m != 0 {
                ch.add_term(Exponent::new(k1, k2, r), m);
            }
        }
    }
    Ok(ch)
}

/// `dim V_λ` for C2, used only as a cross-check in tests.
pub fn weyl_dimension(lambda: WeightTriple) -> i64 {
    let (k1, k2) = (lambda.k1(), lambda.k2());
    (k1 - k2 + 1) * (k2 + 1) * (k1 + 2) * (k1 + k2 + 3) / 6
}
