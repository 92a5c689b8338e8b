//! The Ginzburg–Kapranov pairing on degree-three operations and Koszul duals.
//!
//! The pairing is diagonal in the monomial basis. A monomial with labels read
//! as the permutation `s` pairs with itself to `sgn(s)` when it is a left comb
//! `(x*y)*z` and to `-sgn(s)` when it is a right comb `x*(y*z)`.

use num_traits::{One, Zero};

use crate::exactla::annihilator;
use crate::idlang::{RelationSpace, DEGREE_THREE_DIM};
use crate::presets;
use crate::treekit::{sequence_sign, TreeMonomial};
use crate::{Rational, Result};

/// Sign given to right combs. Left combs always pair to `+sgn`; negating
/// both would only rescale the form and leave every annihilator unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Right combs pair to `-sgn`.
    RightNegated,
    /// Right combs pair to `+sgn`.
    RightPlain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingForm {
    diag: [i8; DEGREE_THREE_DIM],
}

impl PairingForm {
    pub fn new(convention: Convention) -> PairingForm {
        let mut diag = [0i8; DEGREE_THREE_DIM];
        for (k, d) in diag.iter_mut().enumerate() {
            let m = TreeMonomial::from_index(3, k).expect("degree three");
            let sign = sequence_sign(&m.labels());
            let left = m.index().shape_rank == 0;
            *d = if left || convention == Convention::RightPlain {
                sign
            } else {
                -sign
            };
        }
        PairingForm { diag }
    }

    pub fn diagonal(&self) -> &[i8; DEGREE_THREE_DIM] {
        &self.diag
    }

    pub fn pair(&self, i: usize, j: usize) -> i8 {
        if i == j {
            self.diag[i]
        } else {
            0
        }
    }

    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        (0..DEGREE_THREE_DIM)
            .map(|i| {
                (0..DEGREE_THREE_DIM)
                    .map(|j| match self.pair(i, j) {
                        0 => Rational::zero(),
                        1 => Rational::one(),
                        _ => -Rational::one(),
                    })
                    .collect()
            })
            .collect()
    }
}

/// The pairing used throughout.
pub fn gk_pairing() -> PairingForm {
    PairingForm::new(Convention::RightNegated)
}

/// Annihilator of `r` under `form`, named `<name>-dual`.
pub fn dual_under(r: &RelationSpace, form: &PairingForm) -> Result<RelationSpace> {
    let basis = annihilator(r.basis(), &form.matrix())?;
    RelationSpace::from_basis(format!("{}-dual", r.name()), &basis)
}

pub fn koszul_dual(r: &RelationSpace) -> RelationSpace {
    dual_under(r, &gk_pairing()).expect("the pairing is nonsingular")
}

/// Result of checking a convention against the two known self-consistency
/// facts: the associative operad is self-dual and the two Novikov operads are
/// dual to each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub convention: Convention,
    pub assoc_self_dual: bool,
    pub novikov_exchanged: bool,
}

impl Calibration {
    pub fn passed(&self) -> bool {
        self.assoc_self_dual && self.novikov_exchanged
    }
}

pub fn calibrate(convention: Convention) -> Result<Calibration> {
    let form = PairingForm::new(convention);
    let assoc = presets::relation_space("assoc")?;
    let right = presets::relation_space("novikov-right")?;
    let left = presets::relation_space("novikov-left")?;
    Ok(Calibration {
        convention,
        assoc_self_dual: dual_under(&assoc, &form)?.same_span(&assoc),
        novikov_exchanged: dual_under(&right, &form)?.same_span(&left),
    })
}
