//! The acceptance suite: nine criteria, each reported with a single
//! pass/fail line.  Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria as well.

use grastra::exact::{GaussianRational, Rational};
use grastra::homology::{
    assemble_pair, curated_complex, homology, join_s3_cp2_profile, orbit_space_homology,
    pair_v21_from_l2, pair_v2_from_v1, pair_v3_from_v2, quotient_by_g42_homology,
    quotient_by_g42_homology_mod2, uct_consistent, v2_complex, v3_complex, Coefficients,
    HomologyProfile, Stage,
};
use grastra::moment::{dmu_rank, is_regular_value, moment, prisms, MomentPoint};
use grastra::params::{
    embed_family, embed_five, embedding_identities_hold, euler_characteristic_universal,
    representative_of_params, sample_main_triples, tilde_transition_12_13, transition,
    transition_12_13_closed, virtual_space, ProjectivePoint1,
};
use grastra::plucker::{all_pairs, plucker_coordinates, support, PlaneMatrix, PluckerVector};
use grastra::polytope::{classify, polytope_of, PolytopeType};
use grastra::strata::{enumerate_admissible_sets, is_admissible, sample_gaussian};
use grastra::symmetry::fundamental_table;
use std::collections::BTreeMap;
use std::time::Instant;

const SEED: u64 = 7;

fn report(index: usize, name: &str, pass: bool) {
    println!(
        "criterion {index} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {index} ({name}) failed");
}

struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.wrapping_add(0x9e37_79b9_7f4a_7c15))
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

fn random_plane(rng: &mut Rng) -> PluckerVector {
    loop {
        let rows: Vec<[GaussianRational; 2]> = (0..5)
            .map(|_| [sample_gaussian(rng.next()), sample_gaussian(rng.next())])
            .collect();
        if let Ok(m) = PlaneMatrix::new(rows) {
            return plucker_coordinates(&m);
        }
    }
}

fn random_interior_point(rng: &mut Rng, index: usize) -> MomentPoint {
    loop {
        let mut xs: Vec<Rational> = (0..4)
            .map(|_| Rational::new((rng.next() % 95 + 1) as i64, 97))
            .collect();
        if index % 4 == 0 {
            xs[1] = &Rational::one() - &xs[0];
        }
        let sum4 = xs.iter().fold(Rational::zero(), |acc, x| &acc + x);
        let last = &Rational::from_int(2) - &sum4;
        if last.is_positive() && (&Rational::one() - &last).is_positive() {
            xs.push(last);
            let p = MomentPoint::new(xs);
            if p.in_open_hypersimplex() {
                return p;
            }
        }
    }
}

#[test]
fn criterion_1_stratum_census() {
    let start = Instant::now();
    let strata = enumerate_admissible_sets(5).unwrap();
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for sigma in &strata {
        let ty = classify(&polytope_of(sigma)).unwrap();
        *counts.entry(ty.as_str()).or_default() += 1;
    }
    let elapsed = start.elapsed();
    let expected: BTreeMap<&'static str, usize> = [
        ("HYPERSIMPLEX", 1),
        ("K9", 10),
        ("K8", 15),
        ("K7", 10),
        ("OCTAHEDRON", 5),
        ("PRISM6", 10),
        ("PYRAMID5", 30),
        ("TETRAHEDRON", 5),
        ("SQUARE", 15),
        ("TRIANGLE", 30),
        ("EDGE", 30),
        ("VERTEX", 10),
    ]
    .into_iter()
    .collect();
    let pass = strata.len() == 171 && counts == expected && elapsed.as_secs_f64() < 1.0;
    report(1, "stratum census", pass);
}

#[test]
fn criterion_2_fundamental_strata() {
    let table = fundamental_table(5).unwrap();
    let mut pass = table.orbit_count() == 13;
    let mut stab_by_type: BTreeMap<&'static str, Vec<usize>> = BTreeMap::new();
    for row in &table.rows {
        let expected_q = if matches!(row.p, 3 | 4 | 6) { 2 } else { 1 };
        pass &= row.q_p == expected_q;
        pass &= row.orbit_size * row.stabilizer_order == 120;
        stab_by_type
            .entry(row.polytope_type.as_str())
            .or_default()
            .push(row.stabilizer_order);
    }
    let expected: BTreeMap<&'static str, Vec<usize>> = [
        ("HYPERSIMPLEX", vec![120]),
        ("K9", vec![12]),
        ("K8", vec![8]),
        ("K7", vec![12]),
        ("OCTAHEDRON", vec![24]),
        ("PRISM6", vec![12]),
        ("PYRAMID5", vec![4]),
        ("TETRAHEDRON", vec![24]),
        ("SQUARE", vec![8]),
        ("TRIANGLE", vec![6, 12]),
        ("EDGE", vec![4]),
        ("VERTEX", vec![12]),
    ]
    .into_iter()
    .collect();
    for orders in stab_by_type.values_mut() {
        orders.sort_unstable();
    }
    pass &= stab_by_type == expected;
    report(2, "fundamental strata", pass);
}

#[test]
fn criterion_3_moment_oracle() {
    let mut rng = Rng::new(SEED);
    let mut failures = 0usize;
    for _ in 0..500 {
        let p = random_plane(&mut rng);
        let sup = support(&p);
        let poly = polytope_of(&sup);
        let ok = is_admissible(5, sup.pairs())
            && poly.relative_interior_contains(&moment(&p).coords)
            && dmu_rank(&p) == poly.affine_dim();
        if !ok {
            failures += 1;
        }
    }
    report(3, "moment oracle on random planes", failures == 0);
}

#[test]
fn criterion_4_singular_loci() {
    let expected: &[(PolytopeType, usize)] = &[
        (PolytopeType::Hypersimplex, 10),
        (PolytopeType::K9, 9),
        (PolytopeType::K8, 4),
        (PolytopeType::K7, 1),
        (PolytopeType::Octahedron, 6),
        (PolytopeType::Pyramid5, 1),
        (PolytopeType::Prism6, 0),
        (PolytopeType::Tetrahedron, 0),
    ];
    let table = fundamental_table(5).unwrap();
    let mut pass = true;
    for &(ty, want) in expected {
        let row = table.rows.iter().find(|r| r.polytope_type == ty).unwrap();
        pass &= polytope_of(&row.generator).nonsimple_vertex_count() == want;
    }

    let prism_polytopes = prisms();
    let mut rng = Rng::new(SEED.wrapping_add(3));
    for index in 0..200 {
        let x = random_interior_point(&mut rng, index);
        let by_oracle = is_regular_value(&x).unwrap();
        let by_prisms = !prism_polytopes
            .iter()
            .any(|(_, _, p)| p.relative_interior_contains(&x.coords));
        pass &= by_oracle == by_prisms;
    }
    report(4, "singular loci", pass);
}

#[test]
fn criterion_5_transition_calculus() {
    let mut pass = true;
    for t in sample_main_triples(SEED, 100) {
        pass &= transition((1, 2), (1, 3), &t).ok() == transition_12_13_closed(&t).ok()
            && transition_12_13_closed(&t).is_ok();
    }

    let charts = all_pairs(5);
    let probes = sample_main_triples(SEED.wrapping_add(1), 2);
    let mut checked = 0usize;
    'outer: for &a in &charts {
        for &b in &charts {
            for &c in &charts {
                if a == b || b == c || a == c {
                    continue;
                }
                if checked == 20 {
                    break 'outer;
                }
                checked += 1;
                for t in &probes {
                    let via = transition(a, b, t).and_then(|u| transition(b, c, &u));
                    let direct = transition(a, c, t);
                    pass &= direct.is_ok() && via.ok() == direct.ok();
                }
            }
        }
    }
    pass &= checked == 20;

    for sigma in enumerate_admissible_sets(5).unwrap() {
        let (Ok(fam12), Ok(fam13)) = (
            virtual_space(&sigma, (1, 2)),
            virtual_space(&sigma, (1, 3)),
        ) else {
            continue;
        };
        for u in fam12.shape.sample(SEED.wrapping_add(2), 25) {
            pass &= fam13.shape.contains(&tilde_transition_12_13(&u));
        }
    }
    report(5, "transition calculus", pass);
}

#[test]
fn criterion_6_embedding_identities() {
    let mut pass = true;
    for t in sample_main_triples(SEED.wrapping_add(4), 100) {
        pass &= representative_of_params((1, 2), &t)
            .ok()
            .map(|m| plucker_coordinates(&m))
            .and_then(|p| embed_five(&p).ok())
            .is_some_and(|x| embedding_identities_hold(&x));
    }
    let probes = [
        ProjectivePoint1::from_int(2, 1),
        ProjectivePoint1::from_int(5, 3),
        ProjectivePoint1::from_int(-3, 4),
        ProjectivePoint1::from_int(7, 2),
    ];
    let mut family_checked = 0usize;
    for sigma in enumerate_admissible_sets(5).unwrap() {
        let Ok(fam) = embed_family(&sigma, (1, 2)) else {
            continue;
        };
        for c in &probes {
            if let Some(x) = fam.eval(c) {
                family_checked += 1;
                pass &= embedding_identities_hold(&x);
            }
        }
    }
    pass &= family_checked == 140;
    pass &= euler_characteristic_universal() == 7;
    report(6, "embedding identities", pass);
}

#[test]
fn criterion_7_stagewise_homology() {
    let start = Instant::now();
    let v1 = homology(&curated_complex(Stage::V1), Coefficients::Z);
    let l1 = homology(&curated_complex(Stage::L1), Coefficients::Z);
    let l2 = homology(&curated_complex(Stage::L2), Coefficients::Z);
    let v21 = homology(&curated_complex(Stage::V21), Coefficients::Z);
    let v21_z2 = homology(&curated_complex(Stage::V21), Coefficients::Z2);
    let v2 = homology(&v2_complex(), Coefficients::Z);
    let elapsed = start.elapsed();
    let pass = v1 == HomologyProfile::free(&[(0, 1), (3, 1), (5, 5)])
        && l1 == HomologyProfile::free(&[(0, 1), (3, 10)])
        && l2 == HomologyProfile::free(&[(0, 1), (4, 15)])
        && v21 == HomologyProfile::free(&[(0, 1), (4, 1), (5, 6), (6, 10)])
        && v21_z2 == HomologyProfile::free(&[(0, 1), (4, 1), (5, 6), (6, 10)])
        && v2.free_rank(0) == 1
        && v2.free_rank(5) == 6
        && v2.torsion(5) == [2]
        && v2.free_rank(6) == 5
        && v2.groups().len() == 3
        && elapsed.as_secs_f64() < 10.0;
    report(7, "stagewise homology", pass);
}

#[test]
fn criterion_8_final_homology() {
    let g52 = orbit_space_homology(5, Coefficients::Z);
    let g52_z2 = orbit_space_homology(5, Coefficients::Z2);
    let g42 = orbit_space_homology(4, Coefficients::Z);
    let x = quotient_by_g42_homology();
    let pass = g52.groups().len() == 3
        && g52.free_rank(0) == 1
        && g52.free_rank(8) == 1
        && g52.free_rank(5) == 0
        && g52.torsion(5) == [2]
        && g52_z2 == HomologyProfile::free(&[(0, 1), (5, 1), (6, 1), (8, 1)])
        && g42 == HomologyProfile::free(&[(0, 1), (5, 1)])
        && x == HomologyProfile::free(&[(0, 1), (6, 1), (8, 1)])
        && x == join_s3_cp2_profile();
    report(8, "final homology", pass);
}

#[test]
fn criterion_9_property_suite() {
    // Building every curated complex asserts the boundary-square-zero law.
    for stage in [
        Stage::V1,
        Stage::L1,
        Stage::L2,
        Stage::V21RelL2,
        Stage::V21,
        Stage::V32,
    ] {
        let _ = curated_complex(stage);
    }
    let _ = v2_complex();
    let _ = v3_complex();

    let assembly_ok = assemble_pair(&pair_v21_from_l2()).unwrap()
        == homology(&curated_complex(Stage::V21), Coefficients::Z)
        && assemble_pair(&pair_v2_from_v1()).unwrap()
            == homology(&v2_complex(), Coefficients::Z)
        && assemble_pair(&pair_v3_from_v2()).unwrap()
            == orbit_space_homology(5, Coefficients::Z);

    let uct_ok = [
        (
            orbit_space_homology(4, Coefficients::Z),
            orbit_space_homology(4, Coefficients::Z2),
        ),
        (
            orbit_space_homology(5, Coefficients::Z),
            orbit_space_homology(5, Coefficients::Z2),
        ),
        (
            homology(&v2_complex(), Coefficients::Z),
            homology(&v2_complex(), Coefficients::Z2),
        ),
        (
            homology(&curated_complex(Stage::V21), Coefficients::Z),
            homology(&curated_complex(Stage::V21), Coefficients::Z2),
        ),
        (quotient_by_g42_homology(), quotient_by_g42_homology_mod2()),
    ]
    .iter()
    .all(|(z, z2)| uct_consistent(z, z2));

    let top_ok = [4usize, 5].iter().all(|&n| {
        let h = orbit_space_homology(n, Coefficients::Z);
        let d = 3 * n - 7;
        h.free_rank(d) == 1 && h.torsion(d).is_empty() && h.max_degree() == d
    });

    report(9, "property suite", assembly_ok && uct_ok && top_ok);
}
