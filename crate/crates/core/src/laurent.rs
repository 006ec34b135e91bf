//! Finitely supported integer functions on the character lattice, i.e.
//! Laurent polynomials in `e^x`, `x ∈ Z^3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::root_data::Exponent;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(Exponent::ZERO, 1)
    }

    pub fn monomial(exponent: Exponent, coeff: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// `1 - e^{-β}`.
    pub fn one_minus_inverse(beta: Exponent) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(-beta, -1);
        p
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: Exponent) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients (the dimension, for a character).
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplication by `e^shift`.
    pub fn shift(&self, shift: Exponent) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e + shift, *c)).collect(),
        }
    }

    /// Exact quotient by `1 - e^{-β}`.
    ///
    /// Long division from the top in the direction of `β`: each step moves
    /// the leading coefficient `c·e^x` into the quotient and replaces it in
    /// the remainder by `c·e^{x-β}`. An exact quotient never has a term
    /// lower than `min(β, ·)` over the dividend plus `(β, β)`; stepping below
    /// that bound means the remainder is nonzero.
    pub fn div_one_minus_inverse(&self, beta: Exponent) -> Result<Self> {
        let height = |x: Exponent| x.dot(beta);
        let step = height(beta);
        if step <= 0 {
            return Err(Error::DivisionFailure(format!(
                "divisor 1 - e^-{beta} has no positive direction"
            )));
        }
        let Some(floor) = self.terms.keys().map(|x| height(*x)).min() else {
            return Ok(LaurentPoly::zero());
        };
        let floor = floor + step;

        let mut remainder = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((&top, &c)) = remainder
            .terms
            .iter()
            .max_by_key(|(x, _)| (height(**x), **x))
        {
            if height(top) < floor {
                return Err(Error::DivisionFailure(format!(
                    "nonzero remainder dividing by 1 - e^-{beta} (stuck at {top})"
                )));
            }
            quotient.add_term(top, c);
            remainder.add_term(top, -c);
            remainder.add_term(top - beta, c);
        }
        Ok(quotient)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·e^{e}")?;
        }
        Ok(())
    }
}
