//! The moment map of the torus action on G(n,2) and the classification of
//! regular and singular points and values.

use crate::exact::Rational;
use crate::plucker::{support, PluckerVector};
use crate::polytope::{polytope_of, weight_vector, LatticePolytope};
use crate::strata::{defect, AdmissibleSet};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MomentError {
    #[error("the point is not in the open hypersimplex (coordinate sum 2, all coordinates strictly between 0 and 1)")]
    OutsideOpenHypersimplex,
}

/// A value of the moment map: a rational point of the hypersimplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentPoint {
    pub coords: Vec<Rational>,
}

impl MomentPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        MomentPoint { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// True iff the point lies in the open hypersimplex Δ°(n,2).
    pub fn in_open_hypersimplex(&self) -> bool {
        let sum = self
            .coords
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c * &Rational::one());
        sum == Rational::from_int(2)
            && self
                .coords
                .iter()
                .all(|c| c.is_positive() && (&Rational::one() - c).is_positive())
    }
}

/// μ(L) = Σ_I |P^I(L)|² Λ_I / Σ_I |P^I(L)|², computed exactly.
pub fn moment(p: &PluckerVector) -> MomentPoint {
    let n = p.n();
    let mut num = vec![Rational::zero(); n];
    let mut den = Rational::zero();
    for (&pair, coord) in p.coords() {
        let w = coord.norm_sq();
        let lambda = weight_vector(n, pair);
        for t in 0..n {
            num[t] = &num[t] + &(&w * &lambda[t]);
        }
        den = den + w;
    }
    assert!(den.is_positive(), "Plücker vectors are nonzero");
    MomentPoint::new(num.into_iter().map(|c| c / den.clone()).collect())
}

/// Rank of the moment-map differential at a point of the stratum of `p`:
/// the dimension of its admissible polytope.
pub fn dmu_rank(p: &PluckerVector) -> usize {
    polytope_of(&support(p)).affine_dim()
}

/// A point is regular iff its stratum has defect zero, i.e. the differential
/// has the maximal rank n − 1.
pub fn is_regular_point(p: &PluckerVector) -> bool {
    defect(&support(p)) == 0
}

/// The ten prisms P_ij of Δ(5,2), from the two-block partitions {i,j} | rest.
pub fn prisms() -> Vec<(usize, usize, LatticePolytope)> {
    let mut out = Vec::new();
    for i in 1..=5usize {
        for j in i + 1..=5 {
            let pairs: BTreeSet<(usize, usize)> = (1..=5)
                .filter(|t| *t != i && *t != j)
                .flat_map(|t| {
                    [(i.min(t), i.max(t)), (j.min(t), j.max(t))]
                })
                .collect();
            let sigma = AdmissibleSet::new(5, pairs).expect("prism supports are admissible");
            out.push((i, j, polytope_of(&sigma)));
        }
    }
    out
}

/// Regularity of an interior value of the moment map for n = 5: a point of
/// the open hypersimplex is singular exactly when it lies in an open prism.
pub fn is_regular_value(x: &MomentPoint) -> Result<bool, MomentError> {
    assert_eq!(x.n(), 5, "regular-value classification is defined for n = 5");
    if !x.in_open_hypersimplex() {
        return Err(MomentError::OutsideOpenHypersimplex);
    }
    Ok(prisms()
        .iter()
        .all(|(_, _, p)| !p.relative_interior_contains(&x.coords)))
}
