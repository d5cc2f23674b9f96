//! Self-certification of the Groebner engine on the catalog ideals:
//! S-polynomial certificates, uniqueness of the reduced basis under
//! generator permutation, agreement of radical and plain membership on
//! ideals known radical from determinantal theory, and field-independence
//! of the computed dimensions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use comvar::catalog::{
    build_gl2_comm, build_mixed, build_sl2_comm, build_sl2_nilcomm, build_sl3_nilcomm,
    build_sl3_u_comm,
};
use comvar::linalg::rank_rational;
use comvar::{
    buchberger, ideal_member, is_groebner, krull_dimension, normal_form, parse_polynomial,
    radical_member, FieldSpec, GbConfig, IdealPresentation, Polynomial,
};

fn gf() -> FieldSpec {
    FieldSpec::prime(32003).unwrap()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

/// Small desk-scale catalog used for engine-wide properties.
fn small_catalog(field: &FieldSpec) -> Vec<(String, IdealPresentation)> {
    let mut out = Vec::new();
    for r in 1..=3 {
        out.push((format!("sl2-comm:r={r}"), build_sl2_comm(r, field).unwrap()));
        out.push((
            format!("sl2-nilcomm:r={r}"),
            build_sl2_nilcomm(r, field).unwrap(),
        ));
        out.push((
            format!("sl3-u-comm:r={r}"),
            build_sl3_u_comm(r, field).unwrap(),
        ));
    }
    for r in 1..=2 {
        out.push((
            format!("gl2-comm:r={r}"),
            build_gl2_comm(r, field).unwrap().ideal,
        ));
    }
    out.push((
        "sl3-nilcomm:r=1".into(),
        build_sl3_nilcomm(1, field).unwrap(),
    ));
    out.push((
        "mixed:i=1,j=2".into(),
        build_mixed(1, 2, field).unwrap().ideal,
    ));
    out
}

#[test]
fn two_slot_traceless_generators_are_already_a_basis() {
    let ideal = build_sl2_comm(2, &gf()).unwrap();
    let gb = buchberger(&ideal, &cfg()).unwrap();
    // the reduced basis is the monic form of the three relations
    let mut expected: Vec<Polynomial> = ideal.generators().iter().map(|g| g.monic()).collect();
    let order = *ideal.ring().order();
    expected.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
        )
    });
    assert_eq!(gb.basis(), expected.as_slice());
    assert!(is_groebner(gb.basis()));
}

#[test]
fn spolynomial_certificates_across_catalog() {
    for (name, ideal) in small_catalog(&gf()) {
        let gb = buchberger(&ideal, &cfg()).unwrap();
        assert!(is_groebner(gb.basis()), "{name}");
        for g in ideal.generators() {
            assert!(
                normal_form(g, gb.basis()).unwrap().is_zero(),
                "{name}: generator fails to reduce"
            );
        }
    }
}

#[test]
fn reduced_basis_is_permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, ideal) in small_catalog(&gf()) {
        if ideal.generators().is_empty() {
            continue;
        }
        let reference = buchberger(&ideal, &cfg()).unwrap();
        for _ in 0..3 {
            let mut gens = ideal.generators().to_vec();
            gens.shuffle(&mut rng);
            let shuffled =
                IdealPresentation::new(ideal.ring().clone(), gens, false).unwrap();
            let gb = buchberger(&shuffled, &cfg()).unwrap();
            assert_eq!(gb.basis(), reference.basis(), "{name}");
        }
    }
}

#[test]
fn membership_is_multiplicative() {
    let ideal = build_sl2_nilcomm(2, &gf()).unwrap();
    let ring = ideal.ring().clone();
    let gb = buchberger(&ideal, &cfg()).unwrap();
    let members = ["x1^2 + y1*z1", "x1*y2 - x2*y1"];
    let cofactors = ["x1", "y2 + 3*z1", "x1*x2 - 7", "z2^2"];
    for m in members {
        let f = parse_polynomial(&ring, m).unwrap();
        assert!(ideal_member(&f, &gb).unwrap());
        for c in cofactors {
            let g = parse_polynomial(&ring, c).unwrap();
            assert!(ideal_member(&f.mul(&g), &gb).unwrap(), "{m} * {c}");
        }
    }
}

/// On the determinantal (known radical) ideals, radical membership agrees
/// with plain membership on a spread of members and non-members.
#[test]
fn radical_membership_agrees_on_determinantal_ideals() {
    let field = gf();
    let config = cfg();
    for r in 1..=3 {
        for (name, ideal) in [
            (
                format!("sl2-comm:r={r}"),
                build_sl2_comm(r, &field).unwrap(),
            ),
            (
                format!("sl3-u-comm:r={r}"),
                build_sl3_u_comm(r, &field).unwrap(),
            ),
        ] {
            let ring = ideal.ring().clone();
            let gb = buchberger(&ideal, &config).unwrap();
            let mut probes: Vec<Polynomial> = Vec::new();
            // members: monomial multiples and sums of generators
            for (k, g) in ideal.generators().iter().enumerate() {
                let x = Polynomial::variable(&ring, k % ring.arity());
                probes.push(g.mul(&x));
                if let Some(h) = ideal.generators().get(k + 1) {
                    probes.push(g.add(h));
                }
            }
            // non-members: variables and a generic quadric
            for k in 0..ring.arity().min(4) {
                probes.push(Polynomial::variable(&ring, k));
            }
            probes.push(parse_polynomial(&ring, "x1^2 + 5*x1*y1 - z1").unwrap());
            for f in probes {
                let plain = ideal_member(&f, &gb).unwrap();
                let radical = radical_member(&f, &ideal, &config).unwrap();
                assert_eq!(plain, radical, "{name}: {f}");
            }
        }
    }
}

#[test]
fn dimensions_agree_between_prime_field_and_rationals() {
    let config = cfg();
    let over_gf = small_catalog(&gf());
    let over_q = small_catalog(&FieldSpec::Rationals);
    assert_eq!(over_gf.len(), over_q.len());
    for ((name, a), (_, b)) in over_gf.iter().zip(&over_q) {
        let da = krull_dimension(a, &config).unwrap();
        let db = krull_dimension(b, &config).unwrap();
        assert_eq!(da, db, "{name}");
    }
}

/// The central non-radicality certificate: x1*x2 + y1*z2 lies outside the
/// generated nilpotent commuting ideal at r = 2 but inside its radical.
#[test]
fn nonradicality_witness_r2() {
    for field in [gf(), FieldSpec::Rationals] {
        let ideal = build_sl2_nilcomm(2, &field).unwrap();
        let ring = ideal.ring().clone();
        let f = parse_polynomial(&ring, "x1*x2 + y1*z2").unwrap();
        let gb = buchberger(&ideal, &cfg()).unwrap();
        assert!(!ideal_member(&f, &gb).unwrap());
        assert!(radical_member(&f, &ideal, &cfg()).unwrap());
        // the square itself reduces to zero
        assert!(normal_form(&f.pow(2), gb.basis()).unwrap().is_zero());
    }
}

/// Independent linear-algebra check that the witness is not a member: the
/// degree-2 piece of the ideal is the span of the five quadric
/// generators, and the witness quadric is not in that span.
#[test]
fn witness_escapes_the_degree_two_span() {
    let ideal = build_sl2_nilcomm(2, &FieldSpec::Rationals).unwrap();
    let ring = ideal.ring().clone();
    let f = parse_polynomial(&ring, "x1*x2 + y1*z2").unwrap();

    // coordinates of a quadric in the 21 degree-2 monomials of 6 variables
    let monos: Vec<Vec<u32>> = {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in i..6 {
                let mut e = vec![0u32; 6];
                e[i] += 1;
                e[j] += 1;
                out.push(e);
            }
        }
        out
    };
    let coords = |p: &Polynomial| -> Vec<BigRational> {
        monos
            .iter()
            .map(|e| {
                p.terms()
                    .iter()
                    .find(|(m, _)| m.exps() == e.as_slice())
                    .map(|(_, c)| c.as_rational().unwrap().clone())
                    .unwrap_or_else(|| BigRational::from(BigInt::from(0)))
            })
            .collect()
    };

    let gen_rows: Vec<Vec<BigRational>> = ideal.generators().iter().map(coords).collect();
    let base_rank = rank_rational(&gen_rows);
    assert_eq!(base_rank, 5);

    let mut with_witness = gen_rows;
    with_witness.push(coords(&f));
    assert_eq!(rank_rational(&with_witness), 6, "witness must leave the span");
}

/// A sampled point with nonvanishing first coordinate certifies that x1
/// is not in the radical, matching the engine's verdict.
#[test]
fn coordinate_is_outside_the_radical() {
    let ideal = build_sl2_nilcomm(2, &FieldSpec::Rationals).unwrap();
    let ring = ideal.ring().clone();
    let x1 = parse_polynomial(&ring, "x1").unwrap();
    assert!(!radical_member(&x1, &ideal, &cfg()).unwrap());

    let id = comvar::catalog::VarietyId::Sl2NilComm { r: 2 };
    let p = comvar::oracle::parametrize(&id).unwrap();
    let samples = comvar::oracle::sample_points(&p, 3, 10).unwrap();
    assert!(
        samples.iter().any(|s| !s.point[0].is_zero()),
        "expected a sample with x1 != 0"
    );
}

#[test]
fn krull_dimension_examples() {
    let config = cfg();
    // quadric cone in 3 variables
    let nil1 = build_sl2_nilcomm(1, &gf()).unwrap();
    assert_eq!(krull_dimension(&nil1, &config).unwrap(), 2);
    // three-slot traceless commuting tuples
    let comm3 = build_sl2_comm(3, &gf()).unwrap();
    assert_eq!(krull_dimension(&comm3, &config).unwrap(), 5);
    // unit ideal convention
    let ring = comvar::make_ring(
        &["x"],
        FieldSpec::Rationals,
        comvar::MonomialOrder::GrevLex,
    )
    .unwrap();
    let unit = IdealPresentation::new(
        ring.clone(),
        vec![Polynomial::one(&ring)],
        false,
    )
    .unwrap();
    assert_eq!(krull_dimension(&unit, &config).unwrap(), -1);
}
