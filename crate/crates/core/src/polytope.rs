//! Weight polytopes of strata and their exact face structure.
//!
//! Every stratum σ of G(n,2) determines the lattice polytope
//! P_σ = conv{Λ_ij : (i,j) ∈ σ} ⊂ R^n, where Λ_ij is the 0/1 vector with
//! ones in positions i and j.  All computations are exact over the
//! rationals: affine dimension, facet inequalities, the full face lattice,
//! and relative-interior membership.

use crate::exact::Rational;
use crate::plucker::Pair;
use crate::strata::AdmissibleSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("classification is only defined for n = 5 polytopes, got n = {0}")]
    UnsupportedAmbient(usize),
    #[error("polytope does not match any of the twelve known types")]
    Unclassifiable,
}

/// The weight vector Λ_ij ∈ Z^n (entries 0/1, ones at i and j, 1-based).
pub fn weight_vector(n: usize, pair: Pair) -> Vec<Rational> {
    let (i, j) = pair;
    assert!(1 <= i && i < j && j <= n, "pair out of range");
    (1..=n)
        .map(|t| Rational::from_int(if t == i || t == j { 1 } else { 0 }))
        .collect()
}

/// A facet inequality `normal · x ≥ offset`, tight exactly on
/// `vertex_indices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub vertex_indices: BTreeSet<usize>,
}

/// A face of the polytope, given by the vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub vertex_indices: BTreeSet<usize>,
    pub dim: usize,
}

/// The twelve combinatorial types arising for n = 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PolytopeType {
    Hypersimplex,
    K9,
    K8,
    K7,
    Octahedron,
    Prism6,
    Pyramid5,
    Tetrahedron,
    Square,
    Triangle,
    Edge,
    Vertex,
}

impl PolytopeType {
    pub fn as_str(&self) -> &'static str {
        match self {
            PolytopeType::Hypersimplex => "HYPERSIMPLEX",
            PolytopeType::K9 => "K9",
            PolytopeType::K8 => "K8",
            PolytopeType::K7 => "K7",
            PolytopeType::Octahedron => "OCTAHEDRON",
            PolytopeType::Prism6 => "PRISM6",
            PolytopeType::Pyramid5 => "PYRAMID5",
            PolytopeType::Tetrahedron => "TETRAHEDRON",
            PolytopeType::Square => "SQUARE",
            PolytopeType::Triangle => "TRIANGLE",
            PolytopeType::Edge => "EDGE",
            PolytopeType::Vertex => "VERTEX",
        }
    }
}

impl std::fmt::Display for PolytopeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A polytope given by its vertex list, with exact derived structure.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    n: usize,
    vertices: Vec<Vec<Rational>>,
    /// Basis of the linear span of {v − v₀}, rows of length n.
    basis: Vec<Vec<Rational>>,
    /// Vertices expressed in basis coordinates (length = affine dim).
    local: Vec<Vec<Rational>>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Builds a polytope from a nonempty list of distinct vertices.
    pub fn from_vertices(vertices: Vec<Vec<Rational>>) -> Self {
        assert!(!vertices.is_empty(), "a polytope needs at least one vertex");
        let n = vertices[0].len();
        assert!(vertices.iter().all(|v| v.len() == n));
        let v0 = vertices[0].clone();
        // Greedy basis of the span of the difference vectors.
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        for v in &vertices[1..] {
            let diff = sub(v, &v0);
            if !in_span(&basis, &diff) {
                basis.push(diff);
            }
        }
        let local: Vec<Vec<Rational>> = vertices
            .iter()
            .map(|v| express(&basis, &sub(v, &v0)).expect("vertex lies in affine hull"))
            .collect();
        let facets = compute_facets(&local);
        LatticePolytope {
            n,
            vertices,
            basis,
            local,
            facets,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn affine_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The point `x` in basis coordinates, or `None` if it is outside the
    /// affine hull.
    fn localize(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(x.len(), self.n);
        express(&self.basis, &sub(x, &self.vertices[0]))
    }

    /// Exact membership in the (closed) polytope.
    pub fn contains(&self, x: &[Rational]) -> bool {
        match self.localize(x) {
            None => false,
            Some(p) => self
                .facets
                .iter()
                .all(|f| !(dot(&f.normal, &p) - &f.offset).is_negative()),
        }
    }

    /// Exact membership in the relative interior: inside the affine hull
    /// and strictly on the positive side of every facet.
    pub fn relative_interior_contains(&self, x: &[Rational]) -> bool {
        match self.localize(x) {
            None => false,
            Some(p) => self
                .facets
                .iter()
                .all(|f| (dot(&f.normal, &p) - &f.offset).is_positive()),
        }
    }

    /// The full face lattice: all nonempty faces including the polytope
    /// itself and its vertices, sorted by (dim, vertex set).
    pub fn faces(&self) -> Vec<Face> {
        let full: BTreeSet<usize> = (0..self.vertices.len()).collect();
        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        sets.insert(full);
        for f in &self.facets {
            sets.insert(f.vertex_indices.clone());
        }
        // Close under intersection.
        loop {
            let mut new_sets = Vec::new();
            let list: Vec<_> = sets.iter().cloned().collect();
            for a in 0..list.len() {
                for b in a + 1..list.len() {
                    let inter: BTreeSet<usize> =
                        list[a].intersection(&list[b]).copied().collect();
                    if !inter.is_empty() && !sets.contains(&inter) {
                        new_sets.push(inter);
                    }
                }
            }
            if new_sets.is_empty() {
                break;
            }
            sets.extend(new_sets);
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|s| {
                let pts: Vec<&Vec<Rational>> = s.iter().map(|&i| &self.local[i]).collect();
                Face {
                    dim: affine_rank(&pts),
                    vertex_indices: s,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices)));
        faces
    }

    /// Edges (1-faces), as index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces()
            .into_iter()
            .filter(|f| f.dim == 1)
            .map(|f| {
                let mut it = f.vertex_indices.into_iter();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect()
    }

    /// Number of vertices whose edge degree exceeds the dimension.
    pub fn nonsimple_vertex_count(&self) -> usize {
        let d = self.affine_dim();
        let mut degree = vec![0usize; self.vertices.len()];
        for (a, b) in self.edges() {
            degree[a] += 1;
            degree[b] += 1;
        }
        degree.iter().filter(|&&deg| deg > d).count()
    }
}

impl Serialize for LatticePolytope {
    /// JSON shape: `{"vertices": [["0","1",…],…], "dim": d}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LatticePolytope", 2)?;
        let verts: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c.to_string()).collect())
            .collect();
        st.serialize_field("vertices", &verts)?;
        st.serialize_field("dim", &self.affine_dim())?;
        st.end()
    }
}

/// The hypersimplex Δ_{n,k}: convex hull of all 0/1 vectors with k ones.
pub fn hypersimplex(n: usize, k: usize) -> LatticePolytope {
    assert!(0 < k && k < n);
    let mut vertices = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            vertices.push(
                (0..n)
                    .map(|t| Rational::from_int(((mask >> t) & 1) as i64))
                    .collect(),
            );
        }
    }
    LatticePolytope::from_vertices(vertices)
}

/// The weight polytope P_σ of a stratum.
pub fn polytope_of(sigma: &AdmissibleSet) -> LatticePolytope {
    let n = sigma.n();
    let vertices = sigma
        .pairs()
        .iter()
        .map(|&p| weight_vector(n, p))
        .collect();
    LatticePolytope::from_vertices(vertices)
}

/// Classifies an n = 5 weight polytope into one of the twelve types.
pub fn classify(p: &LatticePolytope) -> Result<PolytopeType, PolytopeError> {
    if p.ambient_dim() != 5 {
        return Err(PolytopeError::UnsupportedAmbient(p.ambient_dim()));
    }
    use PolytopeType::*;
    match (p.affine_dim(), p.vertex_count()) {
        (4, 10) => Ok(Hypersimplex),
        (4, 9) => Ok(K9),
        (4, 8) => Ok(K8),
        (4, 7) => Ok(K7),
        (3, 6) => match p.facets().len() {
            8 => Ok(Octahedron),
            5 => Ok(Prism6),
            _ => Err(PolytopeError::Unclassifiable),
        },
        (3, 5) => Ok(Pyramid5),
        (3, 4) => Ok(Tetrahedron),
        (2, 4) => Ok(Square),
        (2, 3) => Ok(Triangle),
        (1, 2) => Ok(Edge),
        (0, 1) => Ok(Vertex),
        _ => Err(PolytopeError::Unclassifiable),
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals on small dense rows.

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x * y;
    }
    acc
}

/// True iff `v` lies in the row span of `basis`.
fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    express(basis, v).is_some()
}

/// Solves λ · basis = v, returning the coefficients λ, or `None` if `v` is
/// not in the span.  (Gaussian elimination on the transposed system.)
fn express(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let d = basis.len();
    let n = v.len();
    if d == 0 {
        return if v.iter().all(Rational::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Augmented n×(d+1) system: columns are basis vectors, rhs is v.
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = (0..d).map(|c| basis[c][r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let mut pivot_row_of_col = vec![usize::MAX; d];
    let mut rank = 0;
    for col in 0..d {
        let Some(pr) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].clone().recip();
        for c in col..=d {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..n {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=d {
                    m[r][c] = &m[r][c] - &(&factor * &m[rank][c]);
                }
            }
        }
        pivot_row_of_col[col] = rank;
        rank += 1;
    }
    // Inconsistent if some non-pivot row has nonzero rhs.
    for r in rank..n {
        if !m[r][d].is_zero() {
            return None;
        }
    }
    // Basis rows are independent by construction, so every column pivots.
    let mut lambda = vec![Rational::zero(); d];
    for col in 0..d {
        let pr = pivot_row_of_col[col];
        if pr != usize::MAX {
            lambda[col] = m[pr][d].clone();
        } else if !v.iter().all(Rational::is_zero) {
            // Dependent basis column: only reachable with a degenerate basis,
            // which `from_vertices` never produces.
            return None;
        }
    }
    Some(lambda)
}

/// Affine dimension of a point set.
fn affine_rank(points: &[&Vec<Rational>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for p in &points[1..] {
        let diff = sub(p, points[0]);
        if !in_span(&basis, &diff) {
            basis.push(diff);
        }
    }
    basis.len()
}

/// One-dimensional kernel vector of a (d−1)×d matrix of full rank, if any.
fn kernel_vector(rows: &[Vec<Rational>], d: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let nrows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..d {
        let Some(pr) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].clone().recip();
        for c in 0..d {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..d {
                    m[r][c] = &m[r][c] - &(&factor * &m[rank][c]);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank + 1 != d {
        return None;
    }
    let free_col = (0..d).find(|c| !pivots.contains(c)).unwrap();
    let mut u = vec![Rational::zero(); d];
    u[free_col] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        u[pc] = -(&m[r][free_col] * &Rational::one());
    }
    Some(u)
}

/// Facets of the convex hull of full-dimensional points in Q^d.
fn compute_facets(local: &[Vec<Rational>]) -> Vec<Facet> {
    let d = local.iter().map(Vec::len).next().unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let k = local.len();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut facets = Vec::new();
    for combo in combinations(k, d) {
        let p0 = &local[combo[0]];
        let rows: Vec<Vec<Rational>> =
            combo[1..].iter().map(|&i| sub(&local[i], p0)).collect();
        let Some(mut normal) = kernel_vector(&rows, d) else {
            continue;
        };
        let offset = dot(&normal, p0);
        let mut pos = false;
        let mut neg = false;
        for p in local {
            let s = dot(&normal, p) - &offset;
            if s.is_positive() {
                pos = true;
            } else if s.is_negative() {
                neg = true;
            }
        }
        if pos && neg {
            continue;
        }
        let mut offset = offset;
        if neg {
            normal = normal.iter().map(|c| -(c * &Rational::one())).collect();
            offset = -(&offset * &Rational::one());
        }
        let tight: BTreeSet<usize> = (0..k)
            .filter(|&i| (dot(&normal, &local[i]) - &offset).is_zero())
            .collect();
        if seen.insert(tight.clone()) {
            facets.push(Facet {
                normal,
                offset,
                vertex_indices: tight,
            });
        }
    }
    facets
}

/// All size-r index subsets of 0..k in lexicographic order.
fn combinations(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..r).collect();
    if r > k {
        return out;
    }
    loop {
        out.push(combo.clone());
        // Advance to the next combination.
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + k - r {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..r {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::enumerate_admissible_sets;
    use std::collections::BTreeMap;

    fn rat(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn hypersimplex_5_2_basic_invariants() {
        let h = hypersimplex(5, 2);
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.affine_dim(), 4);
        // Δ_{5,2} has 10 facets: five x_i ≥ 0 and five x_i ≤ 1.
        assert_eq!(h.facets().len(), 10);
    }

    #[test]
    fn hypersimplex_facets_are_octahedra_and_tetrahedra() {
        let h = hypersimplex(5, 2);
        let mut counts: BTreeMap<PolytopeType, usize> = BTreeMap::new();
        for f in h.facets() {
            let verts: Vec<Vec<Rational>> = f
                .vertex_indices
                .iter()
                .map(|&i| h.vertices()[i].clone())
                .collect();
            let sub = LatticePolytope::from_vertices(verts);
            *counts.entry(classify(&sub).unwrap()).or_default() += 1;
        }
        assert_eq!(counts[&PolytopeType::Octahedron], 5);
        assert_eq!(counts[&PolytopeType::Tetrahedron], 5);
        assert_eq!(counts.len(), 2);
    }

    #[test]
    fn census_of_types_for_n5() {
        let mut counts: BTreeMap<PolytopeType, usize> = BTreeMap::new();
        for sigma in enumerate_admissible_sets(5).unwrap() {
            let p = polytope_of(&sigma);
            *counts.entry(classify(&p).unwrap()).or_default() += 1;
        }
        use PolytopeType::*;
        let expected = [
            (Hypersimplex, 1),
            (K9, 10),
            (K8, 15),
            (K7, 10),
            (Octahedron, 5),
            (Prism6, 10),
            (Pyramid5, 30),
            (Tetrahedron, 5),
            (Square, 15),
            (Triangle, 30),
            (Edge, 30),
            (Vertex, 10),
        ];
        for (ty, c) in expected {
            assert_eq!(counts.get(&ty).copied().unwrap_or(0), c, "{ty}");
        }
        assert_eq!(counts.values().sum::<usize>(), 171);
    }

    #[test]
    fn nonsimple_vertex_counts() {
        use PolytopeType::*;
        let expected: BTreeMap<PolytopeType, usize> = [
            (Hypersimplex, 10),
            (K9, 9),
            (K8, 4),
            (K7, 1),
            (Octahedron, 6),
            (Pyramid5, 1),
            (Prism6, 0),
            (Tetrahedron, 0),
            (Square, 0),
            (Triangle, 0),
            (Edge, 0),
            (Vertex, 0),
        ]
        .into_iter()
        .collect();
        let mut seen: BTreeSet<PolytopeType> = BTreeSet::new();
        for sigma in enumerate_admissible_sets(5).unwrap() {
            let p = polytope_of(&sigma);
            let ty = classify(&p).unwrap();
            if seen.insert(ty) {
                assert_eq!(p.nonsimple_vertex_count(), expected[&ty], "{ty}");
            }
        }
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn octahedron_structure() {
        // Z = {1}, blocks {2},{3},{4},{5}: all pairs not touching 1.
        let pairs: BTreeSet<Pair> =
            [(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)].into_iter().collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        let p = polytope_of(&sigma);
        assert_eq!(classify(&p).unwrap(), PolytopeType::Octahedron);
        assert_eq!(p.edges().len(), 12);
        assert_eq!(p.faces().iter().filter(|f| f.dim == 2).count(), 8);
    }

    #[test]
    fn prism_structure() {
        // Partition {1,2} | {3},{4},{5}... no: prism is {1,2} vs rest as
        // singletons is K9; the prism is the two-block partition {1,2}|{3,4,5}.
        let pairs: BTreeSet<Pair> =
            [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)].into_iter().collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        let p = polytope_of(&sigma);
        assert_eq!(classify(&p).unwrap(), PolytopeType::Prism6);
        assert_eq!(p.edges().len(), 9);
        assert_eq!(p.facets().len(), 5);
    }

    #[test]
    fn k9_has_one_interior_prism_facet() {
        // K9 = all pairs except (4,5): blocks {4,5} and singletons 1,2,3.
        let pairs: BTreeSet<Pair> = crate::plucker::all_pairs(5)
            .into_iter()
            .filter(|&p| p != (4, 5))
            .collect();
        let sigma = AdmissibleSet::new(5, pairs).unwrap();
        let p = polytope_of(&sigma);
        assert_eq!(classify(&p).unwrap(), PolytopeType::K9);
        let h = hypersimplex(5, 2);
        let mut interior_prisms = 0;
        for f in p.facets() {
            let verts: Vec<Vec<Rational>> = f
                .vertex_indices
                .iter()
                .map(|&i| p.vertices()[i].clone())
                .collect();
            let sub = LatticePolytope::from_vertices(verts);
            if classify(&sub).unwrap() == PolytopeType::Prism6 {
                // Its barycenter must lie strictly inside the hypersimplex.
                let bary = barycenter(sub.vertices());
                if h.relative_interior_contains(&bary) {
                    interior_prisms += 1;
                }
            }
        }
        assert_eq!(interior_prisms, 1);
    }

    fn barycenter(verts: &[Vec<Rational>]) -> Vec<Rational> {
        let n = verts[0].len();
        let k = Rational::from_int(verts.len() as i64);
        (0..n)
            .map(|c| {
                let mut acc = Rational::zero();
                for v in verts {
                    acc = acc + &v[c] * &Rational::one();
                }
                acc / k.clone()
            })
            .collect()
    }

    #[test]
    fn relative_interior_and_membership() {
        let h = hypersimplex(5, 2);
        let center = rat(&[2, 2, 2, 2, 2])
            .into_iter()
            .map(|x| x / Rational::from_int(5))
            .collect::<Vec<_>>();
        assert!(h.contains(&center));
        assert!(h.relative_interior_contains(&center));
        // A vertex is in the polytope but not its relative interior.
        let v = rat(&[1, 1, 0, 0, 0]);
        assert!(h.contains(&v));
        assert!(!h.relative_interior_contains(&v));
        // Off the affine hull (coordinate sum ≠ 2).
        let off = rat(&[1, 1, 1, 0, 0]);
        assert!(!h.contains(&off));
    }

    #[test]
    fn faces_of_hypersimplex_are_admissible_or_vertices() {
        // Every face of Δ_{5,2} of positive dimension is P_σ for an
        // admissible σ; 0-faces are single weight vectors.
        let h = hypersimplex(5, 2);
        let all: BTreeSet<BTreeSet<Pair>> = enumerate_admissible_sets(5)
            .unwrap()
            .into_iter()
            .map(|s| s.pairs().clone())
            .collect();
        for face in h.faces() {
            let pairs: BTreeSet<Pair> = face
                .vertex_indices
                .iter()
                .map(|&i| {
                    let ones: Vec<usize> = (0..5)
                        .filter(|&c| h.vertices()[i][c].is_positive())
                        .map(|c| c + 1)
                        .collect();
                    (ones[0], ones[1])
                })
                .collect();
            if pairs.len() >= 2 {
                assert!(all.contains(&pairs), "face {:?}", pairs);
            }
        }
    }

    #[test]
    fn classify_rejects_wrong_ambient() {
        let h = hypersimplex(4, 2);
        assert_eq!(
            classify(&h).unwrap_err(),
            PolytopeError::UnsupportedAmbient(4)
        );
    }

    #[test]
    fn serializes_with_vertices_and_dim() {
        let e = LatticePolytope::from_vertices(vec![rat(&[0, 0]), rat(&[1, 1])]);
        let json = serde_json::to_value(&e).unwrap();
        assert_eq!(json["dim"], 1);
        assert_eq!(json["vertices"][1][0], "1");
    }
}
