//! Enumeration of admissible sets (strata) of G(n,2).
//!
//! For k = 2 a support pattern is admissible exactly when it arises from a
//! configuration (Z, π): a set Z of zero rows together with a partition π of
//! the remaining rows into at least two collinearity blocks.  The pairs of
//! the admissible set are precisely the cross-block pairs; rows inside one
//! block are collinear, so their mutual minors vanish.

use crate::exact::GaussianRational;
use crate::plucker::{all_pairs, plucker_coordinates, support, Pair, PlaneMatrix};
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrataError {
    #[error("n = {0} is outside the supported range 3..=7")]
    OutOfRange(usize),
    #[error("the pair set is not admissible")]
    NotAdmissible,
}

/// A set σ of sorted 2-subsets of {1..n} describing the nonzero Plücker
/// support of a stratum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct AdmissibleSet {
    n: usize,
    pairs: BTreeSet<Pair>,
}

impl AdmissibleSet {
    /// Builds an admissible set, verifying admissibility.
    pub fn new(n: usize, pairs: BTreeSet<Pair>) -> Result<Self, StrataError> {
        if is_admissible(n, &pairs) {
            Ok(AdmissibleSet { n, pairs })
        } else {
            Err(StrataError::NotAdmissible)
        }
    }

    /// Wraps a pair set that is known to be admissible (e.g. the support of
    /// an actual Plücker vector).  Debug builds still assert.
    pub fn from_pairs_unchecked(n: usize, pairs: BTreeSet<Pair>) -> Self {
        debug_assert!(is_admissible(n, &pairs), "support must be admissible");
        AdmissibleSet { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &BTreeSet<Pair> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i.min(j), i.max(j)))
    }

    /// The full admissible set of the main stratum.
    pub fn full(n: usize) -> Self {
        AdmissibleSet {
            n,
            pairs: all_pairs(n).into_iter().collect(),
        }
    }

    /// The configuration (Z, π) inducing this set: zero rows and the
    /// partition of the complement into collinearity blocks.
    pub fn configuration(&self) -> (BTreeSet<usize>, Vec<BTreeSet<usize>>) {
        decompose(self.n, &self.pairs).expect("admissible by construction")
    }
}

impl Serialize for AdmissibleSet {
    /// JSON shape: a sorted list of sorted pairs, e.g. `[[1,2],[1,3]]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let list: Vec<[usize; 2]> = self.pairs.iter().map(|&(i, j)| [i, j]).collect();
        list.serialize(serializer)
    }
}

/// Attempts to reconstruct the (Z, π) configuration from a pair set.
///
/// Returns `None` when the pair set is not induced by any configuration.
fn decompose(n: usize, pairs: &BTreeSet<Pair>) -> Option<(BTreeSet<usize>, Vec<BTreeSet<usize>>)> {
    if pairs.is_empty() {
        return None;
    }
    for &(i, j) in pairs {
        if !(1 <= i && i < j && j <= n) {
            return None;
        }
    }
    // Zero rows are those appearing in no pair.
    let mut in_pair = vec![false; n + 1];
    for &(i, j) in pairs {
        in_pair[i] = true;
        in_pair[j] = true;
    }
    let z: BTreeSet<usize> = (1..=n).filter(|&i| !in_pair[i]).collect();
    let support: Vec<usize> = (1..=n).filter(|&i| in_pair[i]).collect();

    // Two support rows are in the same block iff their pair is absent.
    // Union-find over the absent-pair relation, then verify consistency.
    let mut block_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
    for &i in &support {
        let target = blocks.iter().position(|b| {
            let &rep = b.iter().next().expect("blocks are nonempty");
            !pairs.contains(&(rep.min(i), rep.max(i)))
        });
        match target {
            Some(t) => {
                blocks[t].insert(i);
                block_of.insert(i, t);
            }
            None => {
                blocks.push(BTreeSet::from([i]));
                block_of.insert(i, blocks.len() - 1);
            }
        }
    }
    if blocks.len() < 2 {
        return None;
    }
    // Verify: pairs are exactly the cross-block pairs.
    for a_idx in 0..support.len() {
        for b_idx in a_idx + 1..support.len() {
            let (a, b) = (support[a_idx], support[b_idx]);
            let cross = block_of[&a] != block_of[&b];
            if cross != pairs.contains(&(a, b)) {
                return None;
            }
        }
    }
    Some((z, blocks))
}

/// True iff `pairs` arises from some (Z, π) configuration.
pub fn is_admissible(n: usize, pairs: &BTreeSet<Pair>) -> bool {
    decompose(n, pairs).is_some()
}

/// Enumerates every admissible set of G(n,2) exactly once, in lexicographic
/// order of the pair sets.
pub fn enumerate_admissible_sets(n: usize) -> Result<Vec<AdmissibleSet>, StrataError> {
    if !(3..=7).contains(&n) {
        return Err(StrataError::OutOfRange(n));
    }
    let mut out = BTreeSet::new();
    let ground: Vec<usize> = (1..=n).collect();
    for z_mask in 0u32..(1 << n) {
        let z: BTreeSet<usize> = ground
            .iter()
            .copied()
            .filter(|&i| z_mask & (1 << (i - 1)) != 0)
            .collect();
        let rest: Vec<usize> = ground.iter().copied().filter(|i| !z.contains(i)).collect();
        if rest.len() < 2 {
            continue;
        }
        for partition in set_partitions(&rest) {
            if partition.len() < 2 {
                continue;
            }
            let mut pairs = BTreeSet::new();
            for a in 0..partition.len() {
                for b in a + 1..partition.len() {
                    for &i in &partition[a] {
                        for &j in &partition[b] {
                            pairs.insert((i.min(j), i.max(j)));
                        }
                    }
                }
            }
            out.insert(AdmissibleSet { n, pairs });
        }
    }
    Ok(out.into_iter().collect())
}

/// All partitions of a set into nonempty blocks.
fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let first = items[0];
    let mut out = Vec::new();
    for rest in set_partitions(&items[1..]) {
        // Insert `first` into each existing block, or as a new block.
        for idx in 0..rest.len() {
            let mut p = rest.clone();
            p[idx].push(first);
            out.push(p);
        }
        let mut p = rest;
        p.push(vec![first]);
        out.push(p);
    }
    out
}

/// The expected admissible-set count Σ_z C(n,z)·(Bell(n−z) − 1).
pub fn expected_count(n: usize) -> u64 {
    let bell = [1u64, 1, 2, 5, 15, 52, 203, 877];
    let mut total = 0;
    for z in 0..=n.saturating_sub(2) {
        total += binomial(n, z) * (bell[n - z] - 1);
    }
    total
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

/// A deterministic representative plane of the stratum: rows in Z are zero,
/// rows in block t of π all carry the direction (1, t).
pub fn representative(sigma: &AdmissibleSet) -> PlaneMatrix {
    let (z, blocks) = sigma.configuration();
    let mut slope_of: BTreeMap<usize, i64> = BTreeMap::new();
    for (t, block) in blocks.iter().enumerate() {
        for &i in block {
            slope_of.insert(i, t as i64);
        }
    }
    let rows = (1..=sigma.n())
        .map(|i| {
            if z.contains(&i) {
                [0, 0]
            } else {
                [1, slope_of[&i]]
            }
        })
        .collect();
    let m = PlaneMatrix::from_int_rows(rows).expect("two distinct slopes give rank 2");
    debug_assert_eq!(&support(&plucker_coordinates(&m)), sigma);
    m
}

/// A per-stratum record combining the combinatorial invariants.
#[derive(Clone, Debug, Serialize)]
pub struct StratumRecord {
    pub sigma: AdmissibleSet,
    pub stabilizer_dim: usize,
    pub defect: usize,
    pub polytope_dim: usize,
    /// Complex dimension of the space of parameters F_σ.
    pub param_dim: usize,
}

/// Dimension of the stabilizing subtorus: n − affine_dim(P_σ).
pub fn stabilizer_dim(sigma: &AdmissibleSet) -> usize {
    sigma.n() - crate::polytope::polytope_of(sigma).affine_dim()
}

/// The defect (n−1) − affine_dim(P_σ); zero exactly at regular points.
pub fn defect(sigma: &AdmissibleSet) -> usize {
    sigma.n() - 1 - crate::polytope::polytope_of(sigma).affine_dim()
}

/// Builds the full record for a stratum.
pub fn stratum_record(sigma: &AdmissibleSet) -> StratumRecord {
    let polytope_dim = crate::polytope::polytope_of(sigma).affine_dim();
    let n = sigma.n();
    // Complex dimension of F_σ = dim W_σ − (number of independent torus
    // directions + 2×2 basis freedom); combinatorially: |σ| − 1 − polytope
    // dim + (defect adjustments) is subsumed by the block count formula:
    // the parameters are the cross-ratios of the block directions, so
    // dim F_σ = max(#blocks − 3, 0).
    let (_, blocks) = sigma.configuration();
    let param_dim = blocks.len().saturating_sub(3);
    StratumRecord {
        sigma: sigma.clone(),
        stabilizer_dim: n - polytope_dim,
        defect: n - 1 - polytope_dim,
        polytope_dim,
        param_dim,
    }
}

/// A small deterministic pool of Gaussian-rational values for sampling.
pub fn sample_gaussian(pool_index: u64) -> GaussianRational {
    use crate::exact::Rational;
    // A fixed spread of small values including zero and repeats, so random
    // planes hit degenerate strata with reasonable frequency.
    let vals: [(i64, i64, i64, i64); 8] = [
        (0, 1, 0, 1),
        (1, 1, 0, 1),
        (2, 1, 0, 1),
        (1, 2, 0, 1),
        (1, 1, 1, 1),
        (0, 1, 1, 1),
        (3, 1, -1, 2),
        (-1, 1, 1, 3),
    ];
    let (a, b, c, d) = vals[(pool_index % 8) as usize];
    GaussianRational::new(Rational::new(a, b), Rational::new(c, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_is_admissible() {
        assert!(is_admissible(5, AdmissibleSet::full(5).pairs()));
    }

    #[test]
    fn two_disjoint_pairs_are_not_admissible() {
        let pairs = BTreeSet::from([(1, 2), (3, 4)]);
        assert!(!is_admissible(5, &pairs));
    }

    #[test]
    fn k45_support_is_admissible() {
        let pairs: BTreeSet<Pair> = all_pairs(5)
            .into_iter()
            .filter(|&p| p != (4, 5))
            .collect();
        assert!(is_admissible(5, &pairs));
    }

    #[test]
    fn enumeration_counts_match_formula() {
        assert_eq!(expected_count(3), 7);
        assert_eq!(expected_count(4), 36);
        assert_eq!(expected_count(5), 171);
        for n in 3..=5 {
            let sets = enumerate_admissible_sets(n).unwrap();
            assert_eq!(sets.len() as u64, expected_count(n), "n = {n}");
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            enumerate_admissible_sets(2).unwrap_err(),
            StrataError::OutOfRange(2)
        );
        assert_eq!(
            enumerate_admissible_sets(8).unwrap_err(),
            StrataError::OutOfRange(8)
        );
    }

    #[test]
    fn every_enumerated_set_is_realized_by_its_representative() {
        for sigma in enumerate_admissible_sets(4).unwrap() {
            let m = representative(&sigma);
            assert_eq!(support(&plucker_coordinates(&m)), sigma);
        }
    }

    #[test]
    fn representative_of_main_stratum_has_distinct_slopes() {
        let sigma = AdmissibleSet::full(5);
        let m = representative(&sigma);
        let rows: Vec<_> = m.rows().iter().collect();
        assert_eq!(rows.len(), 5);
        assert_eq!(support(&plucker_coordinates(&m)).len(), 10);
    }

    #[test]
    fn fixed_point_has_max_defect() {
        let sigma = AdmissibleSet::new(5, BTreeSet::from([(1, 2)])).unwrap();
        assert_eq!(stabilizer_dim(&sigma), 5);
        assert_eq!(defect(&sigma), 4);
    }

    #[test]
    fn main_stratum_has_defect_zero() {
        let sigma = AdmissibleSet::full(5);
        assert_eq!(stabilizer_dim(&sigma), 1);
        assert_eq!(defect(&sigma), 0);
    }

    #[test]
    fn prism_stratum_has_defect_one() {
        // Partition {1,2} | {3,4,5}: the 6 cross pairs form the prism P_12.
        let pairs: BTreeSet<Pair> = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
            .into_iter()
            .collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        assert_eq!(defect(&sigma), 1);
    }

    #[test]
    fn serializes_as_sorted_pair_list() {
        let sigma = AdmissibleSet::new(5, BTreeSet::from([(1, 2)])).unwrap();
        let json = serde_json::to_string(&sigma).unwrap();
        assert_eq!(json, "[[1,2]]");
    }

    #[test]
    fn configuration_round_trips() {
        for sigma in enumerate_admissible_sets(4).unwrap() {
            let (z, blocks) = sigma.configuration();
            let covered: BTreeSet<usize> =
                z.iter().copied().chain(blocks.iter().flatten().copied()).collect();
            assert_eq!(covered, (1..=4).collect::<BTreeSet<_>>());
            assert!(blocks.len() >= 2);
        }
    }
}
