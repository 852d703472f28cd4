//! Cellular chain complexes and exact homology for the torus orbit spaces
//! G(4,2)/T⁴ and G(5,2)/T⁵.
//!
//! The orbit space V₃ = G(5,2)/T⁵ is filtered by closed subspaces
//! V₁ ⊂ V₂ ⊂ V₃, where V₁ collects the orbit spaces of the strata over the
//! boundary of the hypersimplex, V₂ adds the strata over the interior whose
//! polytopes are proper subpolytopes of Δ(5,2), and V₃ adds the main stratum.
//! Each stage carries a small curated cell structure; homology is computed
//! exactly over Z (Smith normal form) or Z/2 (GF(2) rank), and stages are
//! glued either by building one chain complex or through the long exact
//! sequence of a pair.

use crate::exact::{
    kernel_int, rank_int, smith_decompose, smith_normal_form, Gf2Matrix, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("duplicate cell name `{0}`")]
    DuplicateCell(String),
    #[error("boundary of `{cell}` references unknown cell `{term}`")]
    UnknownCell { cell: String, term: String },
    #[error("boundary of `{cell}` has a term `{term}` that is not one dimension lower")]
    MalformedBoundary { cell: String, term: String },
    #[error("the composite boundary map out of dimension {dim} is nonzero")]
    BoundaryNotSquareZero { dim: usize },
    #[error("connecting data cannot belong to an exact sequence: {0}")]
    InexactSequence(String),
    #[error("the extension problem at degree {degree} is not resolved by the free-quotient rule")]
    AmbiguousExtension { degree: usize },
}

/// Coefficient ring for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Z,
    Z2,
}

// ---------------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------------

/// A finite chain complex of free modules with named cells graded by
/// dimension.  The boundary operator is integral and squares to zero; this is
/// verified when the complex is built.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    cells: Vec<Vec<String>>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn max_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn cell_names(&self, dim: usize) -> &[String] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cell_names(dim).len()
    }

    /// The matrix of ∂_d : C_d → C_{d−1} (rows indexed by (d−1)-cells).
    pub fn boundary_matrix(&self, dim: usize) -> &IntMatrix {
        &self.boundaries[dim]
    }
}

/// Incremental builder for a [`ChainComplex`].  Cells without a declared
/// boundary have zero boundary.
#[derive(Default)]
pub struct ChainComplexBuilder {
    cells: Vec<Vec<String>>,
    index: BTreeMap<String, (usize, usize)>,
    terms: BTreeMap<String, Vec<(String, i64)>>,
}

impl ChainComplexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cell(&mut self, dim: usize, name: impl Into<String>) -> &mut Self {
        let name = name.into();
        if self.cells.len() <= dim {
            self.cells.resize_with(dim + 1, Vec::new);
        }
        assert!(
            !self.index.contains_key(&name),
            "duplicate cell name `{name}`"
        );
        self.index.insert(name.clone(), (dim, self.cells[dim].len()));
        self.cells[dim].push(name);
        self
    }

    pub fn cells<'a>(&mut self, dim: usize, names: impl IntoIterator<Item = &'a str>) -> &mut Self {
        for n in names {
            self.cell(dim, n);
        }
        self
    }

    pub fn boundary(&mut self, cell: impl Into<String>, terms: &[(&str, i64)]) -> &mut Self {
        self.terms.insert(
            cell.into(),
            terms.iter().map(|&(n, c)| (n.to_string(), c)).collect(),
        );
        self
    }

    pub fn boundary_owned(&mut self, cell: impl Into<String>, terms: Vec<(String, i64)>) -> &mut Self {
        self.terms.insert(cell.into(), terms);
        self
    }

    pub fn build(self) -> Result<ChainComplex, HomologyError> {
        let dims = self.cells.len();
        let mut boundaries = Vec::with_capacity(dims);
        for d in 0..dims {
            let rows = if d == 0 { 0 } else { self.cells[d - 1].len() };
            boundaries.push(IntMatrix::zero(rows, self.cells[d].len()));
        }
        for (cell, terms) in &self.terms {
            let &(dim, col) = self
                .index
                .get(cell)
                .ok_or_else(|| HomologyError::UnknownCell {
                    cell: cell.clone(),
                    term: cell.clone(),
                })?;
            for (term, coeff) in terms {
                let &(tdim, row) =
                    self.index
                        .get(term)
                        .ok_or_else(|| HomologyError::UnknownCell {
                            cell: cell.clone(),
                            term: term.clone(),
                        })?;
                if dim == 0 || tdim != dim - 1 {
                    return Err(HomologyError::MalformedBoundary {
                        cell: cell.clone(),
                        term: term.clone(),
                    });
                }
                boundaries[dim][(row, col)] += BigInt::from(*coeff);
            }
        }
        for d in 2..dims {
            let composite = boundaries[d - 1].mul(&boundaries[d]);
            if !composite.is_zero() {
                return Err(HomologyError::BoundaryNotSquareZero { dim: d });
            }
        }
        Ok(ChainComplex {
            cells: self.cells,
            boundaries,
        })
    }
}

// ---------------------------------------------------------------------------
// Homology profiles
// ---------------------------------------------------------------------------

/// One homology group: free rank plus torsion coefficients sorted by
/// divisibility.  Over Z/2 the `free_rank` field holds the Z/2-dimension and
/// `torsion` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

/// Homology groups per degree; trivial degrees are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn new(mut groups: Vec<HomologyGroup>) -> Self {
        groups.retain(|g| g.free_rank > 0 || !g.torsion.is_empty());
        groups.sort_by_key(|g| g.degree);
        for g in &groups {
            assert!(g.torsion.iter().all(|&t| t > 1), "torsion coefficients > 1");
            assert!(
                g.torsion.windows(2).all(|w| w[1] % w[0] == 0),
                "torsion sorted by divisibility"
            );
        }
        HomologyProfile { groups }
    }

    /// A torsion-free profile from `(degree, rank)` pairs.
    pub fn free(ranks: &[(usize, usize)]) -> Self {
        HomologyProfile::new(
            ranks
                .iter()
                .map(|&(degree, free_rank)| HomologyGroup {
                    degree,
                    free_rank,
                    torsion: Vec::new(),
                })
                .collect(),
        )
    }

    pub fn groups(&self) -> &[HomologyGroup] {
        &self.groups
    }

    pub fn free_rank(&self, degree: usize) -> usize {
        self.groups
            .iter()
            .find(|g| g.degree == degree)
            .map_or(0, |g| g.free_rank)
    }

    pub fn torsion(&self, degree: usize) -> &[u64] {
        self.groups
            .iter()
            .find(|g| g.degree == degree)
            .map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn max_degree(&self) -> usize {
        self.groups.last().map_or(0, |g| g.degree)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// Alternating sum of the free ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| {
                let r = g.free_rank as i64;
                if g.degree % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }
}

/// Cellular homology of a chain complex over Z or Z/2.
pub fn homology(c: &ChainComplex, coefficients: Coefficients) -> HomologyProfile {
    let top = c.max_dim();
    let mut groups = Vec::new();
    for d in 0..=top {
        let n = c.cell_count(d);
        match coefficients {
            Coefficients::Z => {
                let rank_out = if d == 0 {
                    0
                } else {
                    rank_int(c.boundary_matrix(d))
                };
                let (rank_in, torsion) = if d < top {
                    let (factors, rank) = smith_normal_form(c.boundary_matrix(d + 1));
                    let torsion: Vec<u64> = factors
                        .iter()
                        .filter(|f| f.abs() > BigInt::from(1))
                        .map(|f| f.abs().to_u64().expect("small torsion coefficient"))
                        .collect();
                    (rank, torsion)
                } else {
                    (0, Vec::new())
                };
                groups.push(HomologyGroup {
                    degree: d,
                    free_rank: n - rank_out - rank_in,
                    torsion,
                });
            }
            Coefficients::Z2 => {
                let rank_out = if d == 0 {
                    0
                } else {
                    Gf2Matrix::from_int(c.boundary_matrix(d)).rank()
                };
                let rank_in = if d < top {
                    Gf2Matrix::from_int(c.boundary_matrix(d + 1)).rank()
                } else {
                    0
                };
                groups.push(HomologyGroup {
                    degree: d,
                    free_rank: n - rank_out - rank_in,
                    torsion: Vec::new(),
                });
            }
        }
    }
    HomologyProfile::new(groups)
}

// ---------------------------------------------------------------------------
// Curated complexes for the filtration stages
// ---------------------------------------------------------------------------

/// Stages of the filtration with a curated cell structure.
///
/// * `V1`: strata over the boundary of Δ(5,2); collapsing the 3-sphere
///   factor gives a wedge of five 5-spheres, recorded at homology level.
/// * `L1`: wedge of the ten 3-spheres sitting over the prisms.
/// * `L2`: the ten prisms together with the 4-dimensional bodies over the
///   K(7)- and K(8)-polytopes.
/// * `V21RelL2`: the quotient V21/L2, a wedge of ten 6-spheres and twenty
///   5-spheres.
/// * `V21`: the union of the bodies over the nine-vertex polytopes K_ij(9).
/// * `V32`: minimal model of the quotient V₃/V₂ (the compactified main
///   stratum), a join of a 3-sphere with a two-torus-like parameter quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    V1,
    L1,
    L2,
    V21RelL2,
    V21,
    V32,
}

const PAIRS: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

/// The twenty 5-cells f_ij^l of V21, each pairing off two of the fifteen
/// 4-cycles g_{ab,cd} = K8_{ab,cd} + K7_ab + K7_cd.  The integral orientation
/// is fixed as (first listed) − (second listed); any choice of orientations
/// yields the same homology because the pairing is a graph incidence.
#[allow(clippy::type_complexity)]
const F_BOUNDARIES: [(
    (usize, usize),
    u8,
    ((usize, usize), (usize, usize)),
    ((usize, usize), (usize, usize)),
); 20] = [
    ((1, 2), 1, ((1, 2), (3, 4)), ((1, 2), (4, 5))),
    ((1, 2), 2, ((1, 2), (4, 5)), ((1, 2), (3, 5))),
    ((1, 3), 1, ((1, 3), (2, 4)), ((1, 3), (4, 5))),
    ((1, 3), 2, ((1, 3), (4, 5)), ((1, 3), (2, 5))),
    ((1, 4), 1, ((1, 4), (2, 3)), ((1, 4), (3, 5))),
    ((1, 4), 2, ((1, 4), (3, 5)), ((1, 4), (2, 5))),
    ((1, 5), 1, ((1, 5), (2, 3)), ((1, 5), (3, 4))),
    ((1, 5), 2, ((1, 5), (3, 4)), ((1, 5), (2, 4))),
    ((2, 3), 1, ((1, 5), (2, 3)), ((2, 3), (4, 5))),
    ((2, 3), 2, ((2, 3), (4, 5)), ((1, 4), (2, 3))),
    ((2, 4), 1, ((1, 5), (2, 4)), ((2, 4), (3, 5))),
    ((2, 4), 2, ((2, 4), (3, 5)), ((1, 3), (2, 4))),
    ((2, 5), 1, ((1, 4), (2, 5)), ((2, 5), (3, 4))),
    ((2, 5), 2, ((2, 5), (3, 4)), ((1, 3), (2, 5))),
    ((3, 4), 1, ((1, 5), (3, 4)), ((1, 2), (3, 4))),
    ((3, 4), 2, ((1, 2), (3, 4)), ((2, 5), (3, 4))),
    ((3, 5), 1, ((1, 4), (3, 5)), ((1, 2), (3, 5))),
    ((3, 5), 2, ((1, 2), (3, 5)), ((2, 4), (3, 5))),
    ((4, 5), 1, ((2, 3), (4, 5)), ((1, 2), (4, 5))),
    ((4, 5), 2, ((1, 2), (4, 5)), ((1, 3), (4, 5))),
];

/// The four 7-cells of the main stratum lying over products of a 2-sphere
/// with one of the two 1-spheres of the parameter space, with their mod-2
/// boundary lists of 6-cells e_ij.
const M_BOUNDARIES: [(&str, [(usize, usize); 4]); 4] = [
    ("m1_1", [(1, 5), (3, 5), (2, 3), (1, 2)]),
    ("m2_1", [(3, 5), (1, 2), (2, 5), (1, 3)]),
    ("m1_2", [(1, 4), (3, 4), (2, 3), (1, 2)]),
    ("m2_2", [(1, 2), (1, 3), (2, 4), (3, 4)]),
];

/// The four 6-cells of the main stratum lying over products of two parameter
/// 1-spheres, with their mod-2 boundary lists of 5-cells f_ij^l.
const P_BOUNDARIES: [(&str, &[((usize, usize), u8)]); 4] = [
    (
        "p11",
        &[
            ((1, 4), 1),
            ((2, 3), 1),
            ((2, 3), 2),
            ((1, 5), 1),
            ((3, 4), 1),
            ((3, 5), 1),
            ((1, 2), 1),
            ((1, 2), 2),
        ],
    ),
    (
        "p12",
        &[
            ((1, 4), 2),
            ((2, 5), 1),
            ((3, 4), 2),
            ((3, 5), 1),
            ((1, 2), 1),
            ((1, 2), 2),
        ],
    ),
    (
        "p22",
        &[
            ((3, 4), 2),
            ((3, 5), 2),
            ((1, 2), 1),
            ((1, 2), 2),
            ((1, 3), 1),
            ((1, 3), 2),
            ((2, 4), 2),
            ((2, 5), 2),
        ],
    ),
    (
        "p21",
        &[
            ((1, 5), 2),
            ((3, 5), 2),
            ((3, 4), 1),
            ((1, 2), 1),
            ((1, 2), 2),
            ((2, 4), 1),
        ],
    ),
];

fn pair_name(prefix: &str, (i, j): (usize, usize)) -> String {
    format!("{prefix}{i}{j}")
}

fn f_name((i, j): (usize, usize), sheet: u8) -> String {
    format!("f{i}{j}_{sheet}")
}

fn k8_name(a: (usize, usize), b: (usize, usize)) -> String {
    format!("K8_{}{}_{}{}", a.0, a.1, b.0, b.1)
}

/// Unordered pairs of disjoint index pairs, canonically ordered.
fn k8_pairs() -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    for (x, &a) in PAIRS.iter().enumerate() {
        for &b in &PAIRS[x + 1..] {
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// ∂f expanded into the K7/K8 cells: g_{ab,cd} = K8_{ab,cd} + K7_ab + K7_cd
/// and ∂f = g_first − g_second (the shared K7 term cancels).
fn f_boundary_terms(
    first: ((usize, usize), (usize, usize)),
    second: ((usize, usize), (usize, usize)),
) -> Vec<(String, i64)> {
    let mut acc: BTreeMap<String, i64> = BTreeMap::new();
    for (g, sign) in [(first, 1), (second, -1)] {
        *acc.entry(k8_name(g.0, g.1)).or_default() += sign;
        *acc.entry(pair_name("K7_", g.0)).or_default() += sign;
        *acc.entry(pair_name("K7_", g.1)).or_default() += sign;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn add_l2_cells(b: &mut ChainComplexBuilder) {
    for p in PAIRS {
        b.cell(3, pair_name("P", p));
    }
    for p in PAIRS {
        b.cell(4, pair_name("K7_", p));
    }
    for (x, y) in k8_pairs() {
        b.cell(4, k8_name(x, y));
    }
    for p in PAIRS {
        let name = pair_name("K7_", p);
        let prism = pair_name("P", p);
        b.boundary(name, &[(prism.as_str(), 1)]);
    }
}

fn add_k8_boundaries(b: &mut ChainComplexBuilder, with_sigma: bool) {
    for (x, y) in k8_pairs() {
        let px = pair_name("P", x);
        let py = pair_name("P", y);
        let mut terms = vec![(px, -1i64), (py, -1)];
        if with_sigma {
            terms.push(("s3".to_string(), 1));
        }
        b.boundary_owned(k8_name(x, y), terms);
    }
}

fn add_f_cells(b: &mut ChainComplexBuilder) {
    for (p, sheet, first, second) in F_BOUNDARIES {
        let name = f_name(p, sheet);
        b.cell(5, name.clone());
        b.boundary_owned(name, f_boundary_terms(first, second));
    }
}

/// Fixture chain complex for one stage of the filtration.
pub fn curated_complex(stage: Stage) -> ChainComplex {
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v");
    match stage {
        Stage::V1 => {
            b.cell(3, "s3");
            for i in 1..=5 {
                b.cell(5, format!("S{i}"));
            }
        }
        Stage::L1 => {
            for p in PAIRS {
                b.cell(3, pair_name("P", p));
            }
        }
        Stage::L2 => {
            add_l2_cells(&mut b);
            add_k8_boundaries(&mut b, false);
        }
        Stage::V21RelL2 => {
            for (p, sheet, ..) in F_BOUNDARIES {
                b.cell(5, f_name(p, sheet));
            }
            for p in PAIRS {
                b.cell(6, pair_name("e", p));
            }
        }
        Stage::V21 => {
            add_l2_cells(&mut b);
            add_k8_boundaries(&mut b, false);
            add_f_cells(&mut b);
            for p in PAIRS {
                b.cell(6, pair_name("e", p));
            }
        }
        Stage::V32 => {
            for k in 0..6 {
                b.cell(6, format!("x6_{k}"));
            }
            for k in 0..5 {
                b.cell(7, format!("x7_{k}"));
            }
            b.cell(8, "x8");
        }
    }
    b.build().expect("curated complexes are valid")
}

/// The chain complex of V₂ (all strata except the main one), assembled from
/// the V₁ and V21 cells: the K8 bodies pick up the 3-sphere s3 in their
/// boundary and each e_ij closes onto the 5-spheres S_i and S_j.
pub fn v2_complex() -> ChainComplex {
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v");
    b.cell(3, "s3");
    add_l2_cells(&mut b);
    add_k8_boundaries(&mut b, true);
    for i in 1..=5 {
        b.cell(5, format!("S{i}"));
    }
    add_f_cells(&mut b);
    for p in PAIRS {
        let name = pair_name("e", p);
        b.cell(6, name.clone());
        let si = format!("S{}", p.0);
        let sj = format!("S{}", p.1);
        b.boundary_owned(name, vec![(si, 1), (sj, 1)]);
    }
    b.build().expect("the V2 complex is valid")
}

// ---------------------------------------------------------------------------
// The top stage V₃
// ---------------------------------------------------------------------------

/// The pairing of the twenty 5-cells against the fifteen 4-cycles g_{ab,cd}:
/// column f has +1 in its first g and −1 in its second.  Its kernel has rank
/// 6 over Z and dimension 6 over Z/2.
pub fn f_boundary_system() -> IntMatrix {
    let gs = k8_pairs();
    let gindex: BTreeMap<String, usize> = gs
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| (k8_name(x, y), i))
        .collect();
    let mut m = IntMatrix::zero(gs.len(), F_BOUNDARIES.len());
    for (col, (_, _, first, second)) in F_BOUNDARIES.iter().enumerate() {
        m[(gindex[&k8_name(first.0, first.1)], col)] += BigInt::from(1);
        m[(gindex[&k8_name(second.0, second.1)], col)] -= BigInt::from(1);
    }
    m
}

/// Incidence of the 6-cells e_ij on the 5-spheres S_1..S_5 (∂e_ij = S_i+S_j).
fn e_boundary_system() -> IntMatrix {
    let mut m = IntMatrix::zero(5, PAIRS.len());
    for (col, &(i, j)) in PAIRS.iter().enumerate() {
        m[(i - 1, col)] += BigInt::from(1);
        m[(j - 1, col)] += BigInt::from(1);
    }
    m
}

fn int_matrix_from_columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMatrix {
    let mut m = IntMatrix::zero(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        assert_eq!(c.len(), rows);
        for (i, v) in c.iter().enumerate() {
            m[(i, j)] = v.clone();
        }
    }
    m
}

/// Solve `k · x = v` column-by-column over the integers; `k` must have full
/// column rank.  Returns `None` when some column has no integral solution.
fn solve_exact(k: &IntMatrix, v: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(k.rows, v.rows);
    let dec = smith_decompose(k);
    let r = dec.rank();
    assert_eq!(r, k.cols, "coefficient matrix must have full column rank");
    let pv = dec.p.mul(v);
    let mut w = IntMatrix::zero(k.cols, v.cols);
    for j in 0..v.cols {
        for i in 0..k.rows {
            if i < r {
                let (q, rem) = num_integer::div_rem(pv[(i, j)].clone(), dec.d[(i, i)].clone());
                if !rem.is_zero() {
                    return None;
                }
                w[(i, j)] = q;
            } else if !pv[(i, j)].is_zero() {
                return None;
            }
        }
    }
    Some(dec.q.mul(&w))
}

fn is_unimodular(m: &IntMatrix) -> bool {
    if m.rows != m.cols {
        return false;
    }
    let (factors, rank) = smith_normal_form(m);
    rank == m.rows && factors.iter().all(|f| f.abs() == BigInt::from(1))
}

/// All sign vectors ε ∈ {±1}^k with ε₀ = +1 and Σ ε_i cols_i = 0.
fn sign_solutions(cols: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = cols.len();
    let n = cols[0].len();
    let mut out = Vec::new();
    for mask in 0..(1u32 << (k - 1)) {
        let signs: Vec<i64> = (0..k)
            .map(|i| {
                if i == 0 || mask & (1 << (i - 1)) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let mut sum = vec![0i64; n];
        for (s, c) in signs.iter().zip(cols) {
            for (acc, x) in sum.iter_mut().zip(c) {
                *acc += s * x;
            }
        }
        if sum.iter().all(|&x| x == 0) {
            out.push(signs);
        }
    }
    out
}

fn column_i64(m: &IntMatrix, j: usize) -> Vec<i64> {
    (0..m.rows)
        .map(|i| m[(i, j)].to_i64().expect("small entry"))
        .collect()
}

/// Candidate lattice vectors `basis · y` for y ∈ {−1,0,1}^k, filtered and
/// sorted by L1 norm (then enumeration order) for a deterministic search.
fn small_combinations(basis: &IntMatrix, keep: impl Fn(&[i64]) -> bool) -> Vec<(Vec<i64>, Vec<i64>)> {
    let k = basis.cols;
    let mut out = Vec::new();
    for code in 0..3usize.pow(k as u32) {
        let mut c = code;
        let y: Vec<i64> = (0..k)
            .map(|_| {
                let digit = (c % 3) as i64 - 1;
                c /= 3;
                digit
            })
            .collect();
        if y.iter().all(|&d| d == 0) {
            continue;
        }
        let v: Vec<i64> = (0..basis.rows)
            .map(|i| {
                (0..k)
                    .map(|j| basis[(i, j)].to_i64().expect("small entry") * y[j])
                    .sum()
            })
            .collect();
        if keep(&v) {
            out.push((y, v));
        }
    }
    out.sort_by_key(|(_, v)| v.iter().map(|x| x.abs()).sum::<i64>());
    out
}

/// The derived attaching data of the top stage: integral orientations for
/// the four m- and four p-cells, and the three searched cells c_Δ, c1, c2.
struct V3Extras {
    m_terms: Vec<(String, Vec<(String, i64)>)>,
    cdelta_terms: Vec<(String, i64)>,
    p_terms: Vec<(String, Vec<(String, i64)>)>,
    c1_terms: Vec<(String, i64)>,
    c2_terms: Vec<(String, i64)>,
    /// Classes of (m1_1, m2_1, m1_2, m2_2, cD) in the 6-cycle lattice basis.
    d7_classes: IntMatrix,
    /// Classes of (p11, p12, p22, p21, c1, c2) in the 5-cycle lattice basis.
    d6_classes: IntMatrix,
}

fn names_from_vector(names: &[String], v: &[i64]) -> Vec<(String, i64)> {
    names
        .iter()
        .zip(v)
        .filter(|(_, &c)| c != 0)
        .map(|(n, &c)| (n.clone(), c))
        .collect()
}

fn v3_extras() -> V3Extras {
    let e_names: Vec<String> = PAIRS.iter().map(|&p| pair_name("e", p)).collect();
    let f_names: Vec<String> = F_BOUNDARIES
        .iter()
        .map(|&(p, sheet, ..)| f_name(p, sheet))
        .collect();
    let e_sys = e_boundary_system();
    let f_sys = f_boundary_system();
    let e_kernel = int_matrix_from_columns(PAIRS.len(), &kernel_int(&e_sys));
    let f_kernel = int_matrix_from_columns(F_BOUNDARIES.len(), &kernel_int(&f_sys));
    assert_eq!(e_kernel.cols, 5);
    assert_eq!(f_kernel.cols, 6);

    let e_index: BTreeMap<(usize, usize), usize> =
        PAIRS.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let f_index: BTreeMap<((usize, usize), u8), usize> = F_BOUNDARIES
        .iter()
        .enumerate()
        .map(|(i, &(p, sheet, ..))| ((p, sheet), i))
        .collect();

    // Orient the four m-cells: choose signs on the listed e's so that the
    // S-boundaries cancel, making each ∂m a 6-cycle.
    let m_sign_options: Vec<Vec<Vec<i64>>> = M_BOUNDARIES
        .iter()
        .map(|(_, list)| {
            let cols: Vec<Vec<i64>> = list
                .iter()
                .map(|p| column_i64(&e_sys, e_index[p]))
                .collect();
            let sols = sign_solutions(&cols);
            assert!(!sols.is_empty(), "each m list admits an orientation");
            sols
        })
        .collect();

    // Candidates for ∂c_Δ: 6-cycles with unit coefficient on e45.
    let idx_e45 = e_index[&(4, 5)];
    let cdelta_candidates = small_combinations(&e_kernel, |v| v[idx_e45].abs() == 1);

    // Search: the classes of the five 7-cell boundaries must form a basis of
    // the 6-cycle lattice, so that the top stage kills H₆ of V₂ exactly.
    let mut chosen: Option<(Vec<Vec<i64>>, Vec<i64>, IntMatrix)> = None;
    'search7: for combo in cartesian(&m_sign_options) {
        let mut m_vectors = Vec::new();
        for ((_, list), signs) in M_BOUNDARIES.iter().zip(&combo) {
            let mut v = vec![0i64; PAIRS.len()];
            for (p, s) in list.iter().zip(signs.iter()) {
                v[e_index[p]] += s;
            }
            m_vectors.push(v);
        }
        for (_, cd) in &cdelta_candidates {
            let mut cols = m_vectors.clone();
            cols.push(cd.clone());
            let target = int_matrix_from_rows_i64(&transpose_i64(&cols));
            if let Some(x) = solve_exact(&e_kernel, &target) {
                if is_unimodular(&x) {
                    chosen = Some((m_vectors, cd.clone(), x));
                    break 'search7;
                }
            }
        }
    }
    let (m_vectors, cdelta_vec, d7_classes) =
        chosen.expect("orientations of the 7-cells exist");

    // Orient the four p-cells likewise (signs cancelling in the g-lattice).
    let p_sign_options: Vec<Vec<Vec<i64>>> = P_BOUNDARIES
        .iter()
        .map(|(_, list)| {
            let cols: Vec<Vec<i64>> = list
                .iter()
                .map(|key| column_i64(&f_sys, f_index[key]))
                .collect();
            let sols = sign_solutions(&cols);
            assert!(!sols.is_empty(), "each p list admits an orientation");
            sols
        })
        .collect();

    // Candidates for ∂c1 and ∂c2: 5-cycles with unit coefficient on one of
    // the two diagonal cells f45^1, f45^2 and zero on the other.
    let idx_f45_1 = f_index[&((4, 5), 1)];
    let idx_f45_2 = f_index[&((4, 5), 2)];
    let c1_candidates =
        small_combinations(&f_kernel, |v| v[idx_f45_1].abs() == 1 && v[idx_f45_2] == 0);
    let c2_candidates =
        small_combinations(&f_kernel, |v| v[idx_f45_2].abs() == 1 && v[idx_f45_1] == 0);

    // Search: together with the four p-classes, c1 and c2 must span the full
    // 5-cycle lattice so that exactly the order-two class survives in H₅.
    let mut chosen6: Option<(Vec<Vec<i64>>, Vec<i64>, Vec<i64>, IntMatrix)> = None;
    'search6: for combo in cartesian(&p_sign_options) {
        let mut p_vectors = Vec::new();
        for ((_, list), signs) in P_BOUNDARIES.iter().zip(&combo) {
            let mut v = vec![0i64; F_BOUNDARIES.len()];
            for (key, s) in list.iter().zip(signs.iter()) {
                v[f_index[key]] += s;
            }
            p_vectors.push(v);
        }
        let target = int_matrix_from_rows_i64(&transpose_i64(&p_vectors));
        let Some(p_classes) = solve_exact(&f_kernel, &target) else {
            continue;
        };
        for (c1y, c1v) in c1_candidates.iter().take(60) {
            for (c2y, c2v) in c2_candidates.iter().take(60) {
                let mut x = IntMatrix::zero(6, 6);
                for i in 0..6 {
                    for j in 0..4 {
                        x[(i, j)] = p_classes[(i, j)].clone();
                    }
                    x[(i, 4)] = BigInt::from(c1y[i]);
                    x[(i, 5)] = BigInt::from(c2y[i]);
                }
                if is_unimodular(&x) {
                    chosen6 = Some((p_vectors, c1v.clone(), c2v.clone(), x));
                    break 'search6;
                }
            }
        }
    }
    let (p_vectors, c1_vec, c2_vec, d6_classes) =
        chosen6.expect("orientations of the top 6-cells exist");

    V3Extras {
        m_terms: M_BOUNDARIES
            .iter()
            .zip(&m_vectors)
            .map(|((name, _), v)| (name.to_string(), names_from_vector(&e_names, v)))
            .collect(),
        cdelta_terms: names_from_vector(&e_names, &cdelta_vec),
        p_terms: P_BOUNDARIES
            .iter()
            .zip(&p_vectors)
            .map(|((name, _), v)| (name.to_string(), names_from_vector(&f_names, v)))
            .collect(),
        c1_terms: names_from_vector(&f_names, &c1_vec),
        c2_terms: names_from_vector(&f_names, &c2_vec),
        d7_classes,
        d6_classes,
    }
}

fn transpose_i64(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = rows[0].len();
    (0..n)
        .map(|i| rows.iter().map(|r| r[i]).collect())
        .collect()
}

fn int_matrix_from_rows_i64(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.to_vec())
}

fn cartesian(options: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<i64>>> {
    let mut acc: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::new();
        for prefix in &acc {
            for o in opts {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// The chain complex of the full orbit space V₃ = G(5,2)/T⁵: the V₂ complex
/// with the cells of the compactified main stratum attached on top.
pub fn v3_complex() -> ChainComplex {
    let extras = v3_extras();
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v");
    b.cell(3, "s3");
    add_l2_cells(&mut b);
    add_k8_boundaries(&mut b, true);
    for i in 1..=5 {
        b.cell(5, format!("S{i}"));
    }
    add_f_cells(&mut b);
    for p in PAIRS {
        let name = pair_name("e", p);
        b.cell(6, name.clone());
        let si = format!("S{}", p.0);
        let sj = format!("S{}", p.1);
        b.boundary_owned(name, vec![(si, 1), (sj, 1)]);
    }
    for (name, terms) in &extras.p_terms {
        b.cell(6, name.clone());
        b.boundary_owned(name.clone(), terms.clone());
    }
    b.cell(6, "c1");
    b.boundary_owned("c1", extras.c1_terms.clone());
    b.cell(6, "c2");
    b.boundary_owned("c2", extras.c2_terms.clone());
    for (name, terms) in &extras.m_terms {
        b.cell(7, name.clone());
        b.boundary_owned(name.clone(), terms.clone());
    }
    b.cell(7, "cD");
    b.boundary_owned("cD", extras.cdelta_terms.clone());
    b.cell(8, "top");
    b.build().expect("the V3 complex is valid")
}

// ---------------------------------------------------------------------------
// Long exact sequence of a pair
// ---------------------------------------------------------------------------

/// Input for assembling `H(X)` from a pair `A ⊂ X`: the homology of the
/// subspace, the (unreduced) homology of the quotient `X/A`, and the
/// connecting homomorphisms ∂_d : H̃_d(X/A) → H_{d−1}(A) as integer matrices.
/// Rows are indexed by the free generators of `H_{d−1}(A)` followed by its
/// torsion generators; missing degrees denote zero maps.
#[derive(Clone, Debug)]
pub struct PairAssembly {
    pub subspace: HomologyProfile,
    pub quotient: HomologyProfile,
    pub connecting: BTreeMap<usize, IntMatrix>,
}

/// Homology of the total space from the long exact sequence of the pair.
/// Each degree gives a short exact sequence
/// `0 → coker ∂_{d+1} → H_d(X) → ker ∂_d → 0` which splits because the
/// kernel is a subgroup of a free group (the quotient profile must be
/// torsion-free; otherwise the extension is reported ambiguous).
pub fn assemble_pair(a: &PairAssembly) -> Result<HomologyProfile, HomologyError> {
    if a.quotient.free_rank(0) == 0 {
        return Err(HomologyError::InexactSequence(
            "the quotient profile must contain the class of the basepoint component".into(),
        ));
    }
    if let Some(g) = a.quotient.groups().iter().find(|g| !g.torsion.is_empty()) {
        return Err(HomologyError::AmbiguousExtension { degree: g.degree });
    }
    let reduced_rank = |d: usize| {
        let r = a.quotient.free_rank(d);
        if d == 0 {
            r - 1
        } else {
            r
        }
    };
    let sub_gens = |d: usize| a.subspace.free_rank(d) + a.subspace.torsion(d).len();
    let top = a.subspace.max_degree().max(a.quotient.max_degree());

    // Validate the connecting matrices against the two profiles.
    for (&d, m) in &a.connecting {
        let rows = if d == 0 { 0 } else { sub_gens(d - 1) };
        if m.cols != reduced_rank(d) || m.rows != rows {
            return Err(HomologyError::InexactSequence(format!(
                "connecting map at degree {d} is {}x{}, expected {}x{}",
                m.rows,
                m.cols,
                rows,
                reduced_rank(d)
            )));
        }
    }

    let mut groups = Vec::new();
    for d in 0..=top {
        // Rank of ker ∂_d: congruence conditions from torsion rows do not
        // change the rank, so only the free rows count.
        let ker_rank = match a.connecting.get(&d) {
            None => reduced_rank(d),
            Some(m) => {
                let free_rows = if d == 0 { 0 } else { a.subspace.free_rank(d - 1) };
                let mut fm = IntMatrix::zero(free_rows, m.cols);
                for i in 0..free_rows {
                    for j in 0..m.cols {
                        fm[(i, j)] = m[(i, j)].clone();
                    }
                }
                m.cols - rank_int(&fm)
            }
        };

        // coker ∂_{d+1}: present H_d(A) by its torsion relations and divide
        // by the image columns.
        let gens = sub_gens(d);
        let torsion_d = a.subspace.torsion(d);
        let image_cols = a.connecting.get(&(d + 1)).map_or(0, |m| m.cols);
        let mut rel = IntMatrix::zero(gens, torsion_d.len() + image_cols);
        for (k, &t) in torsion_d.iter().enumerate() {
            rel[(a.subspace.free_rank(d) + k, k)] = BigInt::from(t);
        }
        if let Some(m) = a.connecting.get(&(d + 1)) {
            for i in 0..gens {
                for j in 0..m.cols {
                    rel[(i, torsion_d.len() + j)] = m[(i, j)].clone();
                }
            }
        }
        let (factors, rank) = smith_normal_form(&rel);
        let coker_free = gens - rank;
        let coker_torsion: Vec<u64> = factors
            .iter()
            .filter(|f| f.abs() > BigInt::from(1))
            .map(|f| f.abs().to_u64().expect("small torsion coefficient"))
            .collect();

        groups.push(HomologyGroup {
            degree: d,
            free_rank: coker_free + ker_rank,
            torsion: coker_torsion,
        });
    }
    Ok(HomologyProfile::new(groups))
}

/// The pair (V21, L2): twenty 5-cells pair against the fifteen 4-classes.
pub fn pair_v21_from_l2() -> PairAssembly {
    let mut connecting = BTreeMap::new();
    connecting.insert(5, f_boundary_system());
    PairAssembly {
        subspace: HomologyProfile::free(&[(0, 1), (4, 15)]),
        quotient: HomologyProfile::free(&[(0, 1), (5, 20), (6, 10)]),
        connecting,
    }
}

/// The pair (V₂, V₁): the ten 6-classes e_ij close onto S_i + S_j and the
/// 4-class maps isomorphically onto the 3-sphere class.
pub fn pair_v2_from_v1() -> PairAssembly {
    let mut connecting = BTreeMap::new();
    connecting.insert(6, e_boundary_system());
    connecting.insert(4, IntMatrix::from_rows(vec![vec![1]]));
    PairAssembly {
        subspace: HomologyProfile::free(&[(0, 1), (3, 1), (5, 5)]),
        quotient: HomologyProfile::free(&[(0, 1), (4, 1), (5, 6), (6, 10)]),
        connecting,
    }
}

/// The pair (V₃, V₂): the five 7-classes of the compactified main stratum
/// hit a basis of H₆(V₂) and the six 6-classes hit the free part of H₅(V₂),
/// leaving exactly the order-two class.
pub fn pair_v3_from_v2() -> PairAssembly {
    let extras = v3_extras();
    let mut connecting = BTreeMap::new();
    connecting.insert(7, extras.d7_classes);
    // Rows: six free generators of H₅(V₂), then its torsion generator.
    let mut d6 = IntMatrix::zero(7, 6);
    for i in 0..6 {
        for j in 0..6 {
            d6[(i, j)] = extras.d6_classes[(i, j)].clone();
        }
    }
    connecting.insert(6, d6);
    PairAssembly {
        subspace: HomologyProfile::new(vec![
            HomologyGroup {
                degree: 0,
                free_rank: 1,
                torsion: vec![],
            },
            HomologyGroup {
                degree: 5,
                free_rank: 6,
                torsion: vec![2],
            },
            HomologyGroup {
                degree: 6,
                free_rank: 5,
                torsion: vec![],
            },
        ]),
        quotient: HomologyProfile::free(&[(0, 1), (6, 6), (7, 5), (8, 1)]),
        connecting,
    }
}

// ---------------------------------------------------------------------------
// Orbit-space profiles
// ---------------------------------------------------------------------------

fn sphere_complex(d: usize) -> ChainComplex {
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v").cell(d, "top");
    b.build().expect("a sphere model is valid")
}

fn x_model_complex() -> ChainComplex {
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v").cell(6, "x6").cell(8, "x8");
    b.build().expect("the X model is valid")
}

fn cp2_complex() -> ChainComplex {
    let mut b = ChainComplexBuilder::new();
    b.cell(0, "v").cell(2, "c2").cell(4, "c4");
    b.build().expect("the CP2 model is valid")
}

/// Homology of G(n,2)/Tⁿ for n ∈ {4, 5}.  G(4,2)/T⁴ is the 5-sphere;
/// G(5,2)/T⁵ is computed from its full chain complex.
pub fn orbit_space_homology(n: usize, coefficients: Coefficients) -> HomologyProfile {
    match n {
        4 => homology(&sphere_complex(5), coefficients),
        5 => homology(&v3_complex(), coefficients),
        _ => panic!("orbit-space homology is tabulated for n = 4 and n = 5"),
    }
}

/// Homology of X = (G(5,2)/T⁵)/(G(4,2)/T⁴): collapsing the 5-sphere kills
/// the order-two class and leaves free classes in degrees 0, 6 and 8.
pub fn quotient_by_g42_homology() -> HomologyProfile {
    homology(&x_model_complex(), Coefficients::Z)
}

/// Z/2 profile of the quotient X, for the coefficient switch of the CLI.
pub fn quotient_by_g42_homology_mod2() -> HomologyProfile {
    homology(&x_model_complex(), Coefficients::Z2)
}

/// Reduced join formula `H̃_k(A ∗ B) = ⊕_{i+j=k−1} H̃_i(A) ⊗ H̃_j(B)` for
/// connected, torsion-free profiles.
pub fn join_profile(a: &HomologyProfile, b: &HomologyProfile) -> HomologyProfile {
    assert!(
        !a.has_torsion() && !b.has_torsion(),
        "join formula implemented for torsion-free profiles"
    );
    assert!(a.free_rank(0) == 1 && b.free_rank(0) == 1, "connected inputs");
    let reduced = |p: &HomologyProfile, d: usize| {
        if d == 0 {
            p.free_rank(0) - 1
        } else {
            p.free_rank(d)
        }
    };
    let top = a.max_degree() + b.max_degree() + 1;
    let mut ranks = vec![0usize; top + 1];
    ranks[0] = 1;
    for i in 0..=a.max_degree() {
        for j in 0..=b.max_degree() {
            ranks[i + j + 1] += reduced(a, i) * reduced(b, j);
        }
    }
    HomologyProfile::free(
        &ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| (d, r))
            .collect::<Vec<_>>(),
    )
}

/// The independent comparator for X: the join S³ ∗ CP².
pub fn join_s3_cp2_profile() -> HomologyProfile {
    let s3 = homology(&sphere_complex(3), Coefficients::Z);
    let cp2 = homology(&cp2_complex(), Coefficients::Z);
    join_profile(&s3, &cp2)
}

/// Universal-coefficient consistency: the Z/2 dimension in each degree must
/// equal the free rank plus the number of even torsion coefficients in that
/// degree and the one below.
pub fn uct_consistent(integral: &HomologyProfile, mod2: &HomologyProfile) -> bool {
    let top = integral.max_degree().max(mod2.max_degree());
    (0..=top).all(|d| {
        let even = |degree: usize| {
            integral
                .torsion(degree)
                .iter()
                .filter(|&&t| t % 2 == 0)
                .count()
        };
        let expected =
            integral.free_rank(d) + even(d) + if d > 0 { even(d - 1) } else { 0 };
        mod2.free_rank(d) == expected
    })
}
