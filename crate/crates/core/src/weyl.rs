//! The Weyl group of type C2 as signed permutations of `(k1, k2)`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::root_data::{Exponent, Parabolic, RootDatum, WeightTriple};

/// A signed 2x2 permutation matrix acting on the `(k1, k2)` plane.
///
/// Column `j` is the image of the `j`-th coordinate axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    matrix: [[i8; 2]; 2],
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        matrix: [[1, 0], [0, 1]],
    };
    /// Reflection in `a/b`: swaps the coordinates.
    pub const S1: WeylElement = WeylElement {
        matrix: [[0, 1], [1, 0]],
    };
    /// Reflection in `b^2/q`: negates the second coordinate.
    pub const S2: WeylElement = WeylElement {
        matrix: [[1, 0], [0, -1]],
    };
    pub const LONGEST: WeylElement = WeylElement {
        matrix: [[-1, 0], [0, -1]],
    };

    fn apply(self, x: i64, y: i64) -> (i64, i64) {
        let m = self.matrix;
        (
            m[0][0] as i64 * x + m[0][1] as i64 * y,
            m[1][0] as i64 * x + m[1][1] as i64 * y,
        )
    }

    /// Linear action; the `r` coordinate is fixed.
    pub fn act_exponent(self, x: Exponent) -> Exponent {
        let (k1, k2) = self.apply(x.k1, x.k2);
        Exponent::new(k1, k2, x.r)
    }

    pub fn act(self, lambda: WeightTriple) -> WeightTriple {
        // A signed permutation changes k1 + k2 by an even amount.
        WeightTriple::from_lattice(self.act_exponent(lambda.exponent()))
            .expect("Weyl action preserves parity")
    }

    /// `self ∘ other`.
    pub fn compose(self, other: WeylElement) -> WeylElement {
        let (a, b) = (self.matrix, other.matrix);
        let mut matrix = [[0i8; 2]; 2];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        WeylElement { matrix }
    }

    pub fn inverse(self) -> WeylElement {
        let m = self.matrix;
        WeylElement {
            matrix: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]],
        }
    }

    /// Determinant, i.e. `(-1)^length`.
    pub fn sign(self) -> i64 {
        let m = self.matrix;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0]) as i64
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(self) -> usize {
        let datum = RootDatum::GSP4;
        datum
            .positive_roots()
            .iter()
            .filter(|b| !datum.is_positive_root(self.act_exponent(b.exponent())))
            .count()
    }

    pub fn order(self) -> usize {
        let mut power = self;
        let mut n = 1;
        while power != WeylElement::IDENTITY {
            power = power.compose(self);
            n += 1;
        }
        n
    }

    /// Images of the two coordinate axes, used for ordering.
    fn images(self) -> [(i8, i8); 2] {
        let m = self.matrix;
        [(m[0][0], m[1][0]), (m[0][1], m[1][1])]
    }

    /// `w · λ = w(λ + ρ) − ρ`.
    pub fn dot(self, lambda: WeightTriple) -> WeightTriple {
        self.dot_in(&RootDatum::GSP4, lambda)
    }

    pub fn dot_in(self, datum: &RootDatum, lambda: WeightTriple) -> WeightTriple {
        let rho = datum.rho();
        let shifted = self.act_exponent(lambda.exponent() + rho) - rho;
        // w(x) - x lies in the root lattice for any x, so parity is kept.
        WeightTriple::from_lattice(shifted).expect("dot action preserves parity")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axis = |(x, y): (i8, i8)| match (x, y) {
            (1, 0) => "e1",
            (-1, 0) => "-e1",
            (0, 1) => "e2",
            (0, -1) => "-e2",
            _ => "?",
        };
        let [a, b] = self.images();
        write!(f, "[{}, {}]", axis(a), axis(b))
    }
}

/// All eight elements, ordered by length and then by the images of the axes.
pub fn all_elements() -> &'static [WeylElement; 8] {
    static ELEMENTS: OnceLock<[WeylElement; 8]> = OnceLock::new();
    ELEMENTS.get_or_init(|| {
        let mut elements = Vec::with_capacity(8);
        for swapped in [false, true] {
            for s0 in [1i8, -1] {
                for s1 in [1i8, -1] {
                    let matrix = if swapped {
                        [[0, s1], [s0, 0]]
                    } else {
                        [[s0, 0], [0, s1]]
                    };
                    elements.push(WeylElement { matrix });
                }
            }
        }
        elements.sort_by_key(|w| (w.length(), w.images()));
        elements.try_into().expect("eight signed permutations")
    })
}

/// Minimal-length representatives `W^{Q_m}`: the `w` with `w^{-1}` sending
/// the Levi root to a positive root. Equivalently, `w · λ` is dominant for
/// the Levi whenever `λ` is dominant.
pub fn minimal_representatives(m: Parabolic) -> [WeylElement; 4] {
    let datum = RootDatum::GSP4;
    let levi = datum.levi_root(m).exponent();
    let reps: Vec<WeylElement> = all_elements()
        .iter()
        .copied()
        .filter(|w| datum.is_positive_root(w.inverse().act_exponent(levi)))
        .collect();
    reps.try_into().expect("|W| / |W_L| = 4")
}
