//! Plücker coordinates of 2-planes in Cⁿ and their supports.
//!
//! A 2-plane is represented by an n×2 matrix of Gaussian rationals of rank
//! exactly two.  Its Plücker coordinates are the 2×2 minors indexed by
//! sorted pairs {i, j} ⊂ {1..n}; they are projective (well defined up to a
//! common nonzero scalar) and satisfy the quadratic Plücker relations.

use crate::exact::{rank_rational, GaussianRational, RatMatrix, Rational};
use crate::strata::AdmissibleSet;
use serde::ser::SerializeMap;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PluckerError {
    #[error("matrix must have rank exactly 2, found rank {0}")]
    RankDeficient(usize),
    #[error("ambient dimension must be at least 2, got {0}")]
    AmbientTooSmall(usize),
    #[error("a Plücker vector must have at least one nonzero coordinate")]
    AllZero,
}

/// A sorted pair {i, j} with 1 ≤ i < j ≤ n, the index of one Plücker
/// coordinate.
pub type Pair = (usize, usize);

/// All sorted pairs {i, j} ⊂ {1..n} in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<Pair> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

/// An n×2 matrix of Gaussian rationals representing a 2-plane in Cⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneMatrix {
    n: usize,
    rows: Vec<[GaussianRational; 2]>,
}

impl PlaneMatrix {
    /// Builds a plane matrix, checking that the rank is exactly 2.
    pub fn new(rows: Vec<[GaussianRational; 2]>) -> Result<Self, PluckerError> {
        let n = rows.len();
        if n < 2 {
            return Err(PluckerError::AmbientTooSmall(n));
        }
        let m = PlaneMatrix { n, rows };
        let rank = m.rank();
        if rank != 2 {
            return Err(PluckerError::RankDeficient(rank));
        }
        Ok(m)
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(rows: Vec<[i64; 2]>) -> Result<Self, PluckerError> {
        PlaneMatrix::new(
            rows.into_iter()
                .map(|[a, b]| [GaussianRational::from_int(a), GaussianRational::from_int(b)])
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[[GaussianRational; 2]] {
        &self.rows
    }

    fn rank(&self) -> usize {
        // Rank over Q of the realified 2n×4 matrix equals twice the complex
        // rank; compute the complex rank directly by treating re/im parts as
        // a rational matrix with interleaved columns is overkill here.  A
        // 2-column complex matrix has rank 2 iff some 2×2 minor is nonzero,
        // rank 1 iff nonzero but all minors vanish, rank 0 iff zero.
        let mut nonzero = false;
        for i in 0..self.n {
            if !self.rows[i][0].is_zero() || !self.rows[i][1].is_zero() {
                nonzero = true;
            }
            for j in i + 1..self.n {
                if !self.minor(i, j).is_zero() {
                    return 2;
                }
            }
        }
        usize::from(nonzero)
    }

    /// The 2×2 minor of rows i, j (0-based).
    fn minor(&self, i: usize, j: usize) -> GaussianRational {
        &(&self.rows[i][0] * &self.rows[j][1]) - &(&self.rows[i][1] * &self.rows[j][0])
    }

    /// The realification as a rational matrix, for rank cross-checks.
    pub fn to_rat_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(
            self.rows
                .iter()
                .flat_map(|[a, b]| {
                    [
                        vec![a.re.clone(), a.im.clone(), b.re.clone(), b.im.clone()],
                        vec![-&a.im, a.re.clone(), -&b.im, b.re.clone()],
                    ]
                })
                .collect(),
        )
    }
}

/// The Plücker coordinates of a 2-plane: a projective tuple of Gaussian
/// rationals indexed by sorted pairs, with absent pairs meaning zero.
#[derive(Clone, Debug)]
pub struct PluckerVector {
    n: usize,
    coords: BTreeMap<Pair, GaussianRational>,
}

impl PluckerVector {
    /// Builds a Plücker vector from explicit coordinates.  Zero entries are
    /// dropped; at least one coordinate must be nonzero.  The Plücker
    /// relations are *not* enforced here — see [`verify_relations`].
    pub fn new(
        n: usize,
        coords: BTreeMap<Pair, GaussianRational>,
    ) -> Result<Self, PluckerError> {
        if n < 2 {
            return Err(PluckerError::AmbientTooSmall(n));
        }
        let coords: BTreeMap<Pair, GaussianRational> = coords
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        if coords.is_empty() {
            return Err(PluckerError::AllZero);
        }
        for &(i, j) in coords.keys() {
            assert!(1 <= i && i < j && j <= n, "pair ({i},{j}) out of range for n={n}");
        }
        Ok(PluckerVector { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coordinate P^{ij}; zero when absent.
    pub fn coord(&self, i: usize, j: usize) -> GaussianRational {
        assert!(i < j, "pair must be sorted");
        self.coords
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn coords(&self) -> &BTreeMap<Pair, GaussianRational> {
        &self.coords
    }

    /// Projective equality: equal up to one common nonzero scalar.
    pub fn projectively_equal(&self, other: &PluckerVector) -> bool {
        if self.n != other.n {
            return false;
        }
        if self.coords.keys().ne(other.coords.keys()) {
            return false;
        }
        let (&pair, first) = self.coords.iter().next().expect("nonempty");
        let scale = &other.coords[&pair] / first;
        self.coords
            .iter()
            .all(|(k, v)| &(v * &scale) == &other.coords[k])
    }

    /// Rescales all coordinates by a common nonzero scalar.
    pub fn rescale(&self, scalar: &GaussianRational) -> PluckerVector {
        assert!(!scalar.is_zero(), "scalar must be nonzero");
        PluckerVector {
            n: self.n,
            coords: self
                .coords
                .iter()
                .map(|(k, v)| (*k, v * scalar))
                .collect(),
        }
    }
}

impl Serialize for PluckerVector {
    /// JSON shape: `{"n": 5, "coords": {"12": "1", "13": "2+1 i", ...}}`.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            coords: CoordMap<'a>,
        }
        struct CoordMap<'a>(&'a BTreeMap<Pair, GaussianRational>);
        impl Serialize for CoordMap<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (&(i, j), v) in self.0 {
                    map.serialize_entry(&format!("{i}{j}"), &v.to_string())?;
                }
                map.end()
            }
        }
        Repr {
            n: self.n,
            coords: CoordMap(&self.coords),
        }
        .serialize(serializer)
    }
}

/// Computes the Plücker coordinates of a plane: P^{ij} is the 2×2 minor of
/// rows i and j.
pub fn plucker_coordinates(m: &PlaneMatrix) -> PluckerVector {
    let mut coords = BTreeMap::new();
    for (i, j) in all_pairs(m.n()) {
        let v = m_minor(m, i, j);
        if !v.is_zero() {
            coords.insert((i, j), v);
        }
    }
    PluckerVector::new(m.n(), coords).expect("a rank-2 matrix has a nonzero minor")
}

fn m_minor(m: &PlaneMatrix, i: usize, j: usize) -> GaussianRational {
    let a = &m.rows()[i - 1];
    let b = &m.rows()[j - 1];
    &(&a[0] * &b[1]) - &(&a[1] * &b[0])
}

/// The support of a Plücker vector: the set of pairs with nonzero
/// coordinate.
pub fn support(p: &PluckerVector) -> AdmissibleSet {
    AdmissibleSet::from_pairs_unchecked(p.n(), p.coords().keys().copied().collect())
}

/// Checks the Plücker relations
/// `P^{ij}P^{kl} + P^{jk}P^{il} = P^{ik}P^{jl}` for all i<j<k<l ≤ n.
pub fn verify_relations(p: &PluckerVector) -> bool {
    let n = p.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let lhs = &(&p.coord(i, j) * &p.coord(k, l))
                        + &(&p.coord(j, k) * &p.coord(i, l));
                    let rhs = &p.coord(i, k) * &p.coord(j, l);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Helper for oracle tests: realified rank of the plane matrix over Q.
pub fn real_rank(m: &PlaneMatrix) -> usize {
    rank_rational(&m.to_rat_matrix()) / 2
}

/// Convenience: a Gaussian rational from a pair of small rationals.
pub fn gauss(re: Rational, im: Rational) -> GaussianRational {
    GaussianRational::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::is_admissible;

    fn coordinate_plane_5() -> PlaneMatrix {
        PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [0, 0], [0, 0], [0, 0]]).unwrap()
    }

    #[test]
    fn coordinate_plane_has_single_support_pair() {
        let p = plucker_coordinates(&coordinate_plane_5());
        assert_eq!(p.coords().len(), 1);
        assert_eq!(p.coord(1, 2), GaussianRational::one());
    }

    #[test]
    fn generic_plane_has_full_support() {
        let m =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]).unwrap();
        let p = plucker_coordinates(&m);
        assert_eq!(p.coords().len(), 10);
        assert!(verify_relations(&p));
    }

    #[test]
    fn basis_change_gives_projectively_equal_vector() {
        let m1 =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]).unwrap();
        // Change of basis by [[2, 1], [1, 1]] (invertible).
        let rows2 = m1
            .rows()
            .iter()
            .map(|[a, b]| {
                [
                    &(a * &GaussianRational::from_int(2)) + b,
                    a + b,
                ]
            })
            .collect();
        let m2 = PlaneMatrix::new(rows2).unwrap();
        assert!(plucker_coordinates(&m1).projectively_equal(&plucker_coordinates(&m2)));
    }

    #[test]
    fn collinear_rows_kill_exactly_one_minor() {
        let m =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 2], [2, 4], [1, 3]]).unwrap();
        let p = plucker_coordinates(&m);
        assert!(p.coord(3, 4).is_zero());
        assert_eq!(p.coords().len(), 9);
    }

    #[test]
    fn rank_deficient_matrix_rejected() {
        let err = PlaneMatrix::from_int_rows(vec![[1, 2], [2, 4], [3, 6]]).unwrap_err();
        assert_eq!(err, PluckerError::RankDeficient(1));
    }

    #[test]
    fn relations_fail_for_two_disjoint_pairs() {
        let mut coords = BTreeMap::new();
        coords.insert((1, 2), GaussianRational::one());
        coords.insert((3, 4), GaussianRational::one());
        let p = PluckerVector::new(5, coords).unwrap();
        assert!(!verify_relations(&p));
    }

    #[test]
    fn relations_fail_for_unbalanced_n4_vector() {
        // (12,13,14,23,24,34) = (1,1,1,1,1,2): 1*2 + 1*1 != 1*1.
        let mut coords = BTreeMap::new();
        for (pair, v) in [
            ((1, 2), 1),
            ((1, 3), 1),
            ((1, 4), 1),
            ((2, 3), 1),
            ((2, 4), 1),
            ((3, 4), 2),
        ] {
            coords.insert(pair, GaussianRational::from_int(v));
        }
        let p = PluckerVector::new(4, coords).unwrap();
        assert!(!verify_relations(&p));
    }

    #[test]
    fn relations_invariant_under_rescaling() {
        let m =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]).unwrap();
        let p = plucker_coordinates(&m);
        let q = p.rescale(&GaussianRational::new(
            Rational::new(3, 7),
            Rational::new(-1, 2),
        ));
        assert!(verify_relations(&q));
        assert!(p.projectively_equal(&q));
    }

    #[test]
    fn support_is_admissible() {
        let m =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 2], [2, 4], [1, 3]]).unwrap();
        let s = support(&plucker_coordinates(&m));
        assert!(is_admissible(5, s.pairs()));
    }

    #[test]
    fn serializes_with_n_and_coord_map() {
        let p = plucker_coordinates(&coordinate_plane_5());
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["coords"]["12"], "1+0 i");
    }

    #[test]
    fn real_rank_is_two() {
        let m =
            PlaneMatrix::from_int_rows(vec![[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]).unwrap();
        assert_eq!(real_rank(&m), 2);
    }
}
