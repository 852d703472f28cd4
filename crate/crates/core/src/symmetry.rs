//! The action of the symmetric group S_n on strata, its orbits and the
//! fundamental table (one generator per orbit, with the counts m_p, q_p).

use crate::polytope::{classify, polytope_of, PolytopeType};
use crate::strata::{enumerate_admissible_sets, AdmissibleSet, StrataError};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// A permutation of {1..n}, stored as its image list (1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from the images of 1..n; panics unless it is a
    /// bijection.
    pub fn new(image: Vec<usize>) -> Self {
        let n = image.len();
        let seen: BTreeSet<usize> = image.iter().copied().collect();
        assert!(
            seen.len() == n && seen.iter().all(|&i| 1 <= i && i <= n),
            "image list must be a bijection of 1..n"
        );
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a - 1, b - 1);
        p
    }

    /// The n-cycle (1 2 … n).
    pub fn cycle(n: usize) -> Self {
        Permutation {
            image: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// The composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            image: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// All n! permutations of {1..n}.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut image: Vec<usize> = (1..=n).collect();
        heap_permutations(&mut image, n, &mut out);
        out.sort();
        out
    }
}

fn heap_permutations(image: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == 1 {
        out.push(Permutation {
            image: image.clone(),
        });
        return;
    }
    for i in 0..k {
        heap_permutations(image, k - 1, out);
        if k % 2 == 0 {
            image.swap(i, k - 1);
        } else {
            image.swap(0, k - 1);
        }
    }
}

/// The induced action on admissible sets: pairs mapped elementwise.
pub fn act(s: &Permutation, sigma: &AdmissibleSet) -> AdmissibleSet {
    assert_eq!(s.n(), sigma.n());
    let pairs: BTreeSet<_> = sigma
        .pairs()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (s.apply(i), s.apply(j));
            (a.min(b), a.max(b))
        })
        .collect();
    AdmissibleSet::from_pairs_unchecked(sigma.n(), pairs)
}

/// The S_n-orbit of one admissible set, via closure under the generators
/// (1 2) and (1 2 … n).
pub fn orbit_of(sigma: &AdmissibleSet) -> BTreeSet<AdmissibleSet> {
    let n = sigma.n();
    let gens = [Permutation::transposition(n, 1, 2), Permutation::cycle(n)];
    let mut orbit = BTreeSet::from([sigma.clone()]);
    let mut frontier = vec![sigma.clone()];
    while let Some(t) = frontier.pop() {
        for g in &gens {
            let u = act(g, &t);
            if orbit.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    orbit
}

/// All S_n-orbits of admissible sets, each with its stabilizer order
/// n!/|orbit|.  Orbits are sorted by their least element.
pub fn orbit_partition(n: usize) -> Result<Vec<(Vec<AdmissibleSet>, usize)>, StrataError> {
    let all = enumerate_admissible_sets(n)?;
    let group_order: usize = (1..=n).product();
    let mut remaining: BTreeSet<AdmissibleSet> = all.into_iter().collect();
    let mut orbits = Vec::new();
    while let Some(rep) = remaining.iter().next().cloned() {
        let orbit = orbit_of(&rep);
        for s in &orbit {
            remaining.remove(s);
        }
        let size = orbit.len();
        assert_eq!(group_order % size, 0, "orbit-stabilizer must divide n!");
        orbits.push((orbit.into_iter().collect(), group_order / size));
    }
    Ok(orbits)
}

/// One row of the fundamental table: an orbit generator with its counts.
#[derive(Clone, Debug, Serialize)]
pub struct FundamentalRow {
    /// Number of Plücker coordinates supported on the stratum, |σ|.
    pub p: usize,
    /// Number of admissible sets with |σ| = p.
    pub m_p: usize,
    /// Number of S_n-orbits among the sets with |σ| = p.
    pub q_p: usize,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub polytope_type: PolytopeType,
    /// The lexicographically least member of the orbit.
    pub generator: AdmissibleSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalTable {
    pub n: usize,
    pub rows: Vec<FundamentalRow>,
}

impl FundamentalTable {
    pub fn orbit_count(&self) -> usize {
        self.rows.len()
    }

    /// TSV rendering with columns p, m_p, q_p, orbit size, stabilizer order,
    /// polytope type, generator.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("p\tm_p\tq_p\torbit_size\tstabilizer_order\ttype\tgenerator\n");
        for r in &self.rows {
            let sigma: Vec<String> = r
                .generator
                .pairs()
                .iter()
                .map(|(i, j)| format!("{i}{j}"))
                .collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.p,
                r.m_p,
                r.q_p,
                r.orbit_size,
                r.stabilizer_order,
                r.polytope_type,
                sigma.join(",")
            ));
        }
        out
    }
}

/// The fundamental table: one generator per orbit, sorted by descending p
/// and then by generator.
pub fn fundamental_table(n: usize) -> Result<FundamentalTable, StrataError> {
    let orbits = orbit_partition(n)?;
    let mut m_p: BTreeMap<usize, usize> = BTreeMap::new();
    let mut q_p: BTreeMap<usize, usize> = BTreeMap::new();
    for (orbit, _) in &orbits {
        let p = orbit[0].len();
        *m_p.entry(p).or_default() += orbit.len();
        *q_p.entry(p).or_default() += 1;
    }
    let mut rows: Vec<FundamentalRow> = orbits
        .into_iter()
        .map(|(orbit, stab)| {
            let generator = orbit[0].clone();
            let p = generator.len();
            let polytope_type = if n == 5 {
                classify(&polytope_of(&generator)).expect("n = 5 polytopes classify")
            } else {
                // Best effort for other n: reuse the (dim, count) table only
                // when it applies; fall back to Vertex for a 0-dim face.
                classify_fallback(&generator)
            };
            FundamentalRow {
                p,
                m_p: m_p[&p],
                q_p: q_p[&p],
                orbit_size: orbit.len(),
                stabilizer_order: stab,
                polytope_type,
                generator,
            }
        })
        .collect();
    rows.sort_by(|a, b| b.p.cmp(&a.p).then_with(|| a.generator.cmp(&b.generator)));
    Ok(FundamentalTable { n, rows })
}

fn classify_fallback(sigma: &AdmissibleSet) -> PolytopeType {
    let p = polytope_of(sigma);
    match (p.affine_dim(), p.vertex_count()) {
        (0, 1) => PolytopeType::Vertex,
        (1, 2) => PolytopeType::Edge,
        (2, 3) => PolytopeType::Triangle,
        (2, 4) => PolytopeType::Square,
        (3, 4) => PolytopeType::Tetrahedron,
        (3, 5) => PolytopeType::Pyramid5,
        (3, 6) => {
            if p.facets().len() == 8 {
                PolytopeType::Octahedron
            } else {
                PolytopeType::Prism6
            }
        }
        (4, 7) => PolytopeType::K7,
        (4, 8) => PolytopeType::K8,
        (4, 9) => PolytopeType::K9,
        _ => PolytopeType::Hypersimplex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::all_pairs;

    #[test]
    fn identity_fixes_everything() {
        let sigma = AdmissibleSet::full(5);
        assert_eq!(act(&Permutation::identity(5), &sigma), sigma);
    }

    #[test]
    fn transposition_stabilizes_symmetric_set() {
        // K₄₅(9): all pairs except (4,5) — symmetric in 4 and 5.
        let pairs: BTreeSet<_> = all_pairs(5).into_iter().filter(|&p| p != (4, 5)).collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        assert_eq!(act(&Permutation::transposition(5, 4, 5), &sigma), sigma);
    }

    #[test]
    fn three_cycle_moves_a_pair() {
        // (1 2 3) sends {1,2} to {2,3}.
        let sigma = AdmissibleSet::new(5, BTreeSet::from([(1, 2)])).unwrap();
        let c = Permutation::new(vec![2, 3, 1, 4, 5]);
        let moved = act(&c, &sigma);
        assert_eq!(moved.pairs(), &BTreeSet::from([(2, 3)]));
    }

    #[test]
    fn all_permutations_has_order_n_factorial() {
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn orbit_sizes_and_stabilizers_for_n5() {
        let orbits = orbit_partition(5).unwrap();
        assert_eq!(orbits.len(), 13);
        let total: usize = orbits.iter().map(|(o, _)| o.len()).sum();
        assert_eq!(total, 171);
        // Expected stabilizer orders by polytope type (triangles split).
        let mut stab_by_type: BTreeMap<(PolytopeType, usize), usize> = BTreeMap::new();
        for (orbit, stab) in &orbits {
            let ty = classify(&polytope_of(&orbit[0])).unwrap();
            stab_by_type.insert((ty, orbit.len()), *stab);
            assert_eq!(orbit.len() * stab, 120);
        }
        use PolytopeType::*;
        assert_eq!(stab_by_type[&(Hypersimplex, 1)], 120);
        assert_eq!(stab_by_type[&(K9, 10)], 12);
        assert_eq!(stab_by_type[&(K8, 15)], 8);
        assert_eq!(stab_by_type[&(K7, 10)], 12);
        assert_eq!(stab_by_type[&(Prism6, 10)], 12);
        assert_eq!(stab_by_type[&(Octahedron, 5)], 24);
        assert_eq!(stab_by_type[&(Tetrahedron, 5)], 24);
        assert_eq!(stab_by_type[&(Pyramid5, 30)], 4);
        assert_eq!(stab_by_type[&(Square, 15)], 8);
        assert_eq!(stab_by_type[&(Triangle, 20)], 6);
        assert_eq!(stab_by_type[&(Triangle, 10)], 12);
        assert_eq!(stab_by_type[&(Edge, 30)], 4);
        assert_eq!(stab_by_type[&(Vertex, 10)], 12);
    }

    #[test]
    fn fundamental_table_for_n5() {
        let table = fundamental_table(5).unwrap();
        assert_eq!(table.orbit_count(), 13);
        for row in &table.rows {
            let q = match row.p {
                3 | 4 | 6 => 2,
                _ => 1,
            };
            assert_eq!(row.q_p, q, "p = {}", row.p);
            assert_eq!(row.orbit_size * row.stabilizer_order, 120);
        }
        let m_total: usize = table
            .rows
            .iter()
            .map(|r| r.orbit_size)
            .sum();
        assert_eq!(m_total, 171);
        // The hypersimplex row: p = 10, q = 1, orbit of size 1.
        let top = &table.rows[0];
        assert_eq!((top.p, top.m_p, top.q_p, top.orbit_size), (10, 1, 1, 1));
    }

    #[test]
    fn type_is_orbit_invariant() {
        for (orbit, _) in orbit_partition(5).unwrap() {
            let ty = classify(&polytope_of(&orbit[0])).unwrap();
            for s in &orbit {
                assert_eq!(classify(&polytope_of(s)).unwrap(), ty);
                assert_eq!(s.len(), orbit[0].len());
            }
        }
    }

    #[test]
    fn tsv_has_header_and_13_rows() {
        let tsv = fundamental_table(5).unwrap().to_tsv();
        assert_eq!(tsv.lines().count(), 14);
        assert!(tsv.starts_with("p\tm_p\tq_p"));
    }
}
