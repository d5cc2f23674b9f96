//! Cross-checks between the symbolic catalog and the sampling oracle: the
//! builders' generators vanish on every sampled point, the inductive
//! membership obligations hold, the full-matrix relations pull back to the
//! traceless side, and the graded dimensions measured by evaluation match
//! both the symbolic series and the character predictions.

use comvar::catalog::{
    appendix_cases, build_cut_components, build_family_f, build_gl2_comm, build_mixed,
    build_sl2_nilcomm, AppendixCheck, FamilyLabel, VarietyId,
};
use comvar::charseries::{character_series, decompose_good_filtration, partition_count, total_multiplicity};
use comvar::oracle::{
    hilbert_function_by_evaluation, jacobian_rank_dimension, parametrizations, sample_points,
};
use comvar::{
    buchberger, hilbert_series, ideal_equal_radical, ideal_member, intersect_ideals,
    krull_dimension, normal_form, parse_polynomial, radical_member, FieldSpec, GbConfig,
    IdealPresentation, Polynomial, Scalar,
};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

#[test]
fn generators_vanish_on_all_sampled_points() {
    let ids = [
        VarietyId::Sl2Comm { r: 3 },
        VarietyId::Sl2NilComm { r: 3 },
        VarietyId::Gl2Comm { r: 2 },
        VarietyId::Sl3UComm { r: 3 },
        VarietyId::Sl3NilComm { r: 2 },
        VarietyId::Mixed { i: 2, j: 1 },
        VarietyId::CutComponent { r: 3, which: 1 },
        VarietyId::CutComponent { r: 3, which: 2 },
        VarietyId::CutComponent { r: 3, which: 3 },
    ];
    for id in ids {
        let ideal = id.build_ideal(&q()).unwrap();
        for p in parametrizations(&id).unwrap() {
            // sampling certifies generator vanishing internally; spot-check
            // a handful of points against the ideal here as well
            let samples = sample_points(&p, 100, 100).unwrap();
            for s in samples.iter().take(5) {
                let scalars: Vec<Scalar> =
                    s.point.iter().map(|x| Scalar::Rat(x.clone())).collect();
                for g in ideal.generators() {
                    assert!(g.eval(&scalars).is_zero(), "{id}: {g}");
                }
            }
        }
    }
}

/// The first inductive case at r = 2, in the exact arrangement used by
/// the reduction chains: (y2 + z2) x1 reduces to zero against the chain
/// ideal extended by y1 + z1.
#[test]
fn chain_reduction_at_r2() {
    let ideal = build_sl2_nilcomm(2, &q()).unwrap();
    let ring = ideal.ring().clone();
    let extended = ideal
        .sum(
            &IdealPresentation::new(
                ring.clone(),
                vec![parse_polynomial(&ring, "y1 + z1").unwrap()],
                false,
            )
            .unwrap(),
        )
        .unwrap();
    let gb = buchberger(&extended, &cfg()).unwrap();
    let factor = parse_polynomial(&ring, "y2 + z2").unwrap();
    let f = factor.mul(&parse_polynomial(&ring, "x1").unwrap());
    assert!(normal_form(&f, gb.basis()).unwrap().is_zero());
    // every generator also reduces to zero
    for g in extended.generators() {
        assert!(ideal_member(g, &gb).unwrap());
    }
}

#[test]
fn appendix_obligations_all_pass_r2_r3() {
    let field = FieldSpec::prime(32003).unwrap();
    let config = cfg();
    for r in 2..=3 {
        let obligations = appendix_cases(r, &field).unwrap();
        let mut cache: Option<(IdealPresentation, comvar::GroebnerBasis)> = None;
        for ob in obligations {
            let ok = match ob.check {
                AppendixCheck::NormalFormZero => {
                    let fresh = match &cache {
                        Some((ideal, _)) => *ideal != ob.ideal,
                        None => true,
                    };
                    if fresh {
                        cache = Some((ob.ideal.clone(), buchberger(&ob.ideal, &config).unwrap()));
                    }
                    let (_, gb) = cache.as_ref().unwrap();
                    normal_form(&ob.poly, gb.basis()).unwrap().is_zero()
                }
                AppendixCheck::RadicalMember => {
                    radical_member(&ob.poly, &ob.ideal, &config).unwrap()
                }
                AppendixCheck::RadicalNonMember => {
                    !radical_member(&ob.poly, &ob.ideal, &config).unwrap()
                }
            };
            assert!(ok, "r={r}: obligation {} failed", ob.label);
        }
    }
}

/// Pulling the full 2x2 commutator relations through the splitting map
/// lands them in the ideal generated by the traceless relations.
#[test]
fn gl2_relations_pull_back_to_traceless_ideal() {
    let built = build_gl2_comm(2, &q()).unwrap();
    let split_ring = built.iso.split_ring.clone();
    // traceless commuting relations inside the split ring (trace
    // variables are spectators)
    let gens: Vec<Polynomial> = [
        "x1*y2 - x2*y1",
        "y1*z2 - y2*z1",
        "x1*z2 - x2*z1",
    ]
    .iter()
    .map(|s| parse_polynomial(&split_ring, s).unwrap())
    .collect();
    let target = IdealPresentation::new(split_ring.clone(), gens, false).unwrap();
    let gb = buchberger(&target, &cfg()).unwrap();
    for g in built.ideal.generators() {
        let pulled = g
            .ring_map(&split_ring, &built.iso.gl2_images_in_split)
            .unwrap();
        assert!(
            normal_form(&pulled, gb.basis()).unwrap().is_zero(),
            "pullback of {g} escapes the ideal"
        );
    }
}

#[test]
fn gl2_point_maps_invert_on_samples() {
    let built = build_gl2_comm(2, &q()).unwrap();
    let id = VarietyId::Gl2Comm { r: 2 };
    let p = comvar::oracle::parametrize(&id).unwrap();
    for s in sample_points(&p, 17, 100).unwrap() {
        let split = built.iso.split_point(&s.point);
        let back = built.iso.unsplit_point(&split);
        assert_eq!(back, s.point);
        let forward = built.iso.split_point(&built.iso.unsplit_point(&split));
        assert_eq!(forward, split);
    }
}

#[test]
fn family_members_nest_and_max_dominates() {
    let members = build_family_f(2, &FieldSpec::prime(32003).unwrap()).unwrap();
    assert_eq!(members.len(), 10);
    let max = members
        .iter()
        .find(|m| m.label == FamilyLabel::Max)
        .unwrap();
    let gb = buchberger(&max.presentation, &cfg()).unwrap();
    for m in &members {
        for g in m.presentation.generators() {
            assert!(
                ideal_member(g, &gb).unwrap(),
                "{:?} generator escapes the maximal ideal",
                m.label
            );
        }
    }
}

#[test]
fn family_linear_members_have_expected_dimensions() {
    let field = FieldSpec::prime(32003).unwrap();
    let config = cfg();
    for r in 2..=3usize {
        let members = build_family_f(r, &field).unwrap();
        for m in &members {
            match m.label {
                FamilyLabel::P(k) => {
                    let dim = krull_dimension(&m.presentation, &config).unwrap();
                    assert_eq!(dim, (r - k) as i64, "P({k}) at r={r}");
                }
                FamilyLabel::Max => {
                    assert_eq!(krull_dimension(&m.presentation, &config).unwrap(), 0);
                }
                FamilyLabel::I(k) => {
                    // zero prefix plus a nilpotent commuting block of
                    // length k
                    let dim = krull_dimension(&m.presentation, &config).unwrap();
                    assert_eq!(dim, (k + 1) as i64, "I({k}) at r={r}");
                }
                _ => {}
            }
        }
    }
}

/// The hyperplane cut decomposes as the three listed components, as an
/// equality of radicals, and the pairwise sums have the predicted form.
#[test]
fn hypersurface_cut_decomposition_r2() {
    let field = FieldSpec::prime(32003).unwrap();
    let config = cfg();
    let nil = build_sl2_nilcomm(2, &field).unwrap();
    let ring = nil.ring().clone();
    let [v1, v2, v3] = build_cut_components(2, &field).unwrap();

    let cut = nil
        .sum(
            &IdealPresentation::new(
                ring.clone(),
                vec![parse_polynomial(&ring, "y1 + z1").unwrap()],
                false,
            )
            .unwrap(),
        )
        .unwrap();
    let meet = intersect_ideals(&intersect_ideals(&v1, &v2, &config).unwrap(), &v3, &config)
        .unwrap();
    assert!(ideal_equal_radical(&cut, &meet, &config).unwrap());

    // V1 + V2 is the line with first slot zero and opposite signs behind
    let line = IdealPresentation::new(
        ring.clone(),
        ["x1", "y1", "z1", "y2 - x2", "z2 + x2"]
            .iter()
            .map(|s| parse_polynomial(&ring, s).unwrap())
            .collect(),
        false,
    )
    .unwrap();
    let sum_basis = buchberger(&v1.sum(&v2).unwrap(), &config).unwrap();
    let line_basis = buchberger(&line, &config).unwrap();
    assert_eq!(sum_basis.basis(), line_basis.basis());

    // V2 + V3 cuts out the origin
    let maximal = IdealPresentation::new(
        ring.clone(),
        (0..ring.arity())
            .map(|i| Polynomial::variable(&ring, i))
            .collect(),
        false,
    )
    .unwrap();
    assert!(ideal_equal_radical(&v2.sum(&v3).unwrap(), &maximal, &config).unwrap());
}

/// Intersecting the two line ideals gives the ideal of the union of the
/// two lines, certified against the pairwise-product presentation by
/// mutual radical membership.
#[test]
fn two_line_intersection_is_the_union_ideal() {
    let field = FieldSpec::prime(32003).unwrap();
    let config = cfg();
    let [_, v2, v3] = build_cut_components(2, &field).unwrap();
    let meet = intersect_ideals(&v2, &v3, &config).unwrap();
    let ring = meet.ring().clone();
    let mut products = Vec::new();
    for a in v2.generators() {
        for b in v3.generators() {
            products.push(a.mul(b));
        }
    }
    let product_ideal = IdealPresentation::new(ring, products, false).unwrap();
    assert!(ideal_equal_radical(&meet, &product_ideal, &config).unwrap());
}

/// Mixed tuples: component dimensions and the scheme-intersection
/// identity for one constrained slot.
#[test]
fn mixed_components_and_intersection() {
    let field = FieldSpec::prime(32003).unwrap();
    let config = cfg();
    let m = build_mixed(1, 2, &field).unwrap();
    assert_eq!(krull_dimension(&m.nilpotent_component, &config).unwrap(), 4);
    assert_eq!(
        krull_dimension(&m.zero_prefix_component, &config).unwrap(),
        4
    );

    // sum of the two component ideals has the same radical as the ideal
    // of (0, nilpotent pair)
    let ring = m.ideal.ring().clone();
    let sum = m
        .nilpotent_component
        .sum(&m.zero_prefix_component)
        .unwrap();
    let mut gens: Vec<Polynomial> = ["x1", "y1", "z1"]
        .iter()
        .map(|s| parse_polynomial(&ring, s).unwrap())
        .collect();
    gens.extend(
        [
            "x2^2 + y2*z2",
            "x3^2 + y3*z3",
            "x2*y3 - x3*y2",
            "y2*z3 - y3*z2",
            "x2*z3 - x3*z2",
        ]
        .iter()
        .map(|s| parse_polynomial(&ring, s).unwrap()),
    );
    let target = IdealPresentation::new(ring, gens, false).unwrap();
    assert!(ideal_equal_radical(&sum, &target, &config).unwrap());
}

/// Graded dimensions three ways: symbolic Hilbert series, evaluation
/// ranks, and the closed-form character prediction.
#[test]
fn graded_dimensions_match_characters() {
    // symbolic series of the quadric cone
    let nil1 = build_sl2_nilcomm(1, &q()).unwrap();
    let gb = buchberger(&nil1, &cfg()).unwrap();
    let h = hilbert_series(&gb, 9).unwrap();
    for n in 0..=8usize {
        assert_eq!(h.coefficients[n], 2 * n as u64 + 1);
    }

    // evaluation oracle against the character prediction
    for r in 1..=2usize {
        let id = VarietyId::Sl2NilComm { r };
        for n in 0..=4usize {
            let v = 3 * r;
            let monomials = (0..n).fold(1u64, |acc, i| {
                acc * (n + v - 1 - i) as u64 / (i as u64 + 1)
            });
            let measured =
                hilbert_function_by_evaluation(&id, n, monomials.max(1), 271828).unwrap();
            let predicted = partition_count(r, n as u64) * (2 * n as u64 + 1);
            assert_eq!(measured, predicted, "r={r}, n={n}");
        }
    }
}

/// Symbolic and evaluation-measured graded dimensions agree on the
/// traceless commuting pairs as well, where the degree-2 piece drops by
/// exactly the three quadric relations.
#[test]
fn evaluation_rank_matches_symbolic_series_for_traceless_pairs() {
    let id = VarietyId::Sl2Comm { r: 2 };
    let ideal = id.build_ideal(&q()).unwrap();
    let gb = buchberger(&ideal, &cfg()).unwrap();
    let h = hilbert_series(&gb, 4).unwrap();
    assert_eq!(h.coefficients[2], 21 - 3);
    for n in 1..=3usize {
        let monomials = (0..n).fold(1u64, |acc, i| acc * (n + 5 - i) as u64 / (i as u64 + 1));
        let measured = hilbert_function_by_evaluation(&id, n, monomials, 99).unwrap();
        assert_eq!(measured, h.coefficients[n], "n={n}");
    }
}

#[test]
fn samples_are_reproducible_and_trials_monotone() {
    let id = VarietyId::Sl3NilComm { r: 2 };
    let p = comvar::oracle::parametrize(&id).unwrap();
    let a = sample_points(&p, 31, 4).unwrap();
    let b = sample_points(&p, 31, 4).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.params, y.params);
        assert_eq!(x.point, y.point);
    }
    // more trials can only raise the measured rank, and never past the
    // ambient dimension
    let one = jacobian_rank_dimension(&id, 1, 5).unwrap();
    let three = jacobian_rank_dimension(&id, 3, 5).unwrap();
    assert!(one <= three);
    assert!(three <= 16);
}

#[test]
fn degree_one_evaluation_rank_matches_character_prediction() {
    for r in 1..=3usize {
        let id = VarietyId::Sl2NilComm { r };
        let measured = hilbert_function_by_evaluation(&id, 1, 3 * r as u64, 5).unwrap();
        assert_eq!(measured, partition_count(r, 1) * 3, "r={r}");
    }
}

#[test]
fn good_filtration_multiplicities() {
    for r in 1..=3usize {
        let series = character_series(r, 6);
        let table = decompose_good_filtration(&series.degrees).unwrap();
        for m in 0..=6u64 {
            assert_eq!(
                total_multiplicity(&table, m),
                partition_count(r, m),
                "r={r}, m={m}"
            );
        }
    }
}

#[test]
fn jacobian_dimensions_of_3x3_families() {
    assert_eq!(
        jacobian_rank_dimension(&VarietyId::Sl3NilComm { r: 2 }, 2, 7).unwrap(),
        8
    );
    assert_eq!(
        jacobian_rank_dimension(&VarietyId::SubregComponent { r: 2, which: 1 }, 2, 7).unwrap(),
        6
    );
    assert_eq!(
        jacobian_rank_dimension(&VarietyId::Mixed { i: 1, j: 1 }, 2, 7).unwrap(),
        3
    );
}
