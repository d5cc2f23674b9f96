//! Exact point sampling, evaluation-rank Hilbert functions, and
//! Jacobian-rank dimension estimates: the brute-force side against which
//! the symbolic results are checked.
//!
//! Every parametrization is a polynomial map over the rationals from
//! integer parameters to ambient coordinates, so points, Jacobians and
//! ranks are all exact. Parameters are drawn uniformly from [-999, 999]
//! and degenerate draws are rejected and redrawn. Rank-valued answers are
//! computed twice from independently derived seeds and returned only when
//! the two runs agree.
//!
//! Each parametrization's image is dense in its target component; this is
//! recorded per family (it follows from conjugating tuples in a fixed
//! solvable part into general position) rather than re-proved here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{subreg_slice, VarietyId, SL3_COORDS};
use crate::error::{Error, Result};
use crate::field::{is_prime, FieldSpec, Scalar};
use crate::ideal::IdealPresentation;
use crate::linalg::{rank_mod_p, rank_rational};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::polymat::{elementary, PolyMat};
use crate::ring::{make_ring, Ring};

/// Ways a parameter draw can be degenerate.
#[derive(Clone, Debug)]
enum Degeneracy {
    None,
    /// Reject when all listed parameters vanish simultaneously.
    AllZero(Vec<usize>),
}

impl Degeneracy {
    fn rejects(&self, params: &[i64]) -> bool {
        match self {
            Degeneracy::None => false,
            Degeneracy::AllZero(idx) => idx.iter().all(|&i| params[i] == 0),
        }
    }
}

/// How sampled points are certified to lie on the variety.
#[derive(Clone, Debug)]
enum Verifier {
    /// All generators of the ideal vanish at the point.
    Ideal(IdealPresentation),
    /// Tuples in the closure of the subregular orbit: each slot traceless
    /// of rank at most one, all slots pairwise commuting.
    SubregClosure,
}

/// A polynomial map from integer parameters onto a dense subset of one
/// component of a catalog variety.
pub struct Parametrization {
    pub id: VarietyId,
    /// Component tag for reducible targets.
    pub component: Option<&'static str>,
    param_ring: Ring,
    /// One polynomial per ambient coordinate, in the parameter ring.
    coords: Vec<Polynomial>,
    degeneracy: Degeneracy,
    verifier: Verifier,
}

impl Parametrization {
    pub fn parameter_count(&self) -> usize {
        self.param_ring.arity()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.coords.len()
    }

    /// Exact evaluation at an integer parameter vector.
    pub fn evaluate(&self, params: &[i64]) -> Vec<BigRational> {
        assert_eq!(params.len(), self.parameter_count());
        let field = FieldSpec::Rationals;
        let point: Vec<Scalar> = params.iter().map(|&v| field.from_i64(v)).collect();
        self.coords
            .iter()
            .map(|c| match c.eval(&point) {
                Scalar::Rat(x) => x,
                Scalar::Fp(_) => unreachable!("parametrizations are rational"),
            })
            .collect()
    }

    fn draw_params(&self, rng: &mut ChaCha8Rng) -> Vec<i64> {
        loop {
            let params: Vec<i64> = (0..self.parameter_count())
                .map(|_| rng.random_range(-999..=999))
                .collect();
            if !self.degeneracy.rejects(&params) {
                return params;
            }
        }
    }

    fn verify(&self, point: &[BigRational]) -> bool {
        match &self.verifier {
            Verifier::Ideal(ideal) => {
                let scalars: Vec<Scalar> = point.iter().map(|x| Scalar::Rat(x.clone())).collect();
                ideal.generators().iter().all(|g| g.eval(&scalars).is_zero())
            }
            Verifier::SubregClosure => verify_subreg_closure(point),
        }
    }
}

/// An exact sample, certified on construction to annihilate the variety's
/// defining conditions. Reproducible from (id, component, seed, index).
#[derive(Clone, Debug)]
pub struct VarietySample {
    pub id: VarietyId,
    pub component: Option<&'static str>,
    pub seed: u64,
    pub params: Vec<i64>,
    pub point: Vec<BigRational>,
}

/// Parametrizations of all components of the given variety. Family
/// members are ideals rather than sampled varieties and are unsupported.
pub fn parametrizations(id: &VarietyId) -> Result<Vec<Parametrization>> {
    let q = FieldSpec::Rationals;
    match id {
        VarietyId::Sl2Comm { r } => Ok(vec![sl2_scaled_matrix_map(id, *r, false, &q)?]),
        VarietyId::Sl2NilComm { r } => Ok(vec![sl2_scaled_matrix_map(id, *r, true, &q)?]),
        VarietyId::Gl2Comm { r } => Ok(vec![gl2_map(id, *r, &q)?]),
        VarietyId::Sl3UComm { r } => Ok(vec![sl3_u_map(id, *r, &q)?]),
        VarietyId::Sl3NilComm { r } => Ok(vec![sl3_nilcomm_map(id, *r, &q)?]),
        VarietyId::Mixed { i, j } => Ok(vec![
            mixed_nilpotent_map(id, *i, *j, &q)?,
            mixed_zero_prefix_map(id, *i, *j, &q)?,
        ]),
        VarietyId::CutComponent { r, which } => Ok(vec![cut_map(id, *r, *which, &q)?]),
        VarietyId::SubregComponent { r, which } => Ok(vec![subreg_map(id, *r, *which)?]),
        VarietyId::FamilyF { .. } => Err(Error::UnsupportedVariety(id.to_string())),
    }
}

/// The primary parametrization (first component).
pub fn parametrize(id: &VarietyId) -> Result<Parametrization> {
    Ok(parametrizations(id)?.remove(0))
}

/// Draws `count` certified samples from one parametrization.
pub fn sample_points(
    p: &Parametrization,
    seed: u64,
    count: usize,
) -> Result<Vec<VarietySample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let params = p.draw_params(&mut rng);
        let point = p.evaluate(&params);
        if !p.verify(&point) {
            return Err(Error::PointNotOnVariety);
        }
        out.push(VarietySample {
            id: p.id.clone(),
            component: p.component,
            seed,
            params,
            point,
        });
    }
    Ok(out)
}

fn derive_seeds(seed: u64) -> [u64; 2] {
    [seed, seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1)]
}

/// Generic rank of the parametrization differential, maximized over
/// `trials` random parameter points: a certified lower bound for the
/// dimension of the image closure, and equal to it for generic draws.
/// For reducible targets the maximum over components is returned. Both de-
/// rived seeds must agree.
pub fn jacobian_rank_dimension(id: &VarietyId, trials: usize, seed: u64) -> Result<i64> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    let comps = parametrizations(id)?;
    let mut best = 0usize;
    for p in &comps {
        best = best.max(component_jacobian_rank(p, trials, seed)?);
    }
    Ok(best as i64)
}

fn component_jacobian_rank(p: &Parametrization, trials: usize, seed: u64) -> Result<usize> {
    // partial derivatives are shared across trials
    let jac: Vec<Vec<Polynomial>> = p
        .coords
        .iter()
        .map(|c| (0..p.parameter_count()).map(|k| c.derivative(k)).collect())
        .collect();
    let field = FieldSpec::Rationals;
    let mut ranks = [0usize; 2];
    for (slot, s) in derive_seeds(seed).into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut max_rank = 0;
        for _ in 0..trials {
            let params = p.draw_params(&mut rng);
            let scalars: Vec<Scalar> = params.iter().map(|&v| field.from_i64(v)).collect();
            let rows: Vec<Vec<BigRational>> = jac
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|d| match d.eval(&scalars) {
                            Scalar::Rat(x) => x,
                            Scalar::Fp(_) => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            max_rank = max_rank.max(rank_rational(&rows));
        }
        ranks[slot] = max_rank;
    }
    if ranks[0] != ranks[1] {
        return Err(Error::SeedDisagreement(ranks[0] as u64, ranks[1] as u64));
    }
    Ok(ranks[0])
}

/// Dimension of the degree-n graded piece of the coordinate ring of the
/// sampled variety, measured as the rank of the matrix of degree-n
/// monomials evaluated at sampled points.
///
/// The rank is computed after compressing the monomial columns with
/// seeded random products of n linear forms (a generic linear projection
/// of the Veronese image, exact and rank-safe from below) and reducing
/// modulo a seeded word-size prime, so the reported value never exceeds
/// the true rank over the rationals. Both derived seeds, with independent
/// samples, forms and primes, must agree.
pub fn hilbert_function_by_evaluation(
    id: &VarietyId,
    degree: usize,
    sample_count: u64,
    seed: u64,
) -> Result<u64> {
    let comps = parametrizations(id)?;
    let ambient = comps[0].ambient_dimension();
    let monomial_count = binomial_u64(degree as u64 + ambient as u64 - 1, ambient as u64 - 1)
        .ok_or_else(|| Error::InvalidArgument("monomial count overflows".into()))?;
    if sample_count < monomial_count {
        return Err(Error::InvalidArgument(format!(
            "sample_count {sample_count} is below the degree-{degree} monomial count {monomial_count}"
        )));
    }
    if degree == 0 {
        return Ok(1);
    }
    let seeds = derive_seeds(seed);
    let a = projected_evaluation_rank(&comps, degree, sample_count, monomial_count, seeds[0])?;
    let b = projected_evaluation_rank(&comps, degree, sample_count, monomial_count, seeds[1])?;
    if a != b {
        return Err(Error::SeedDisagreement(a, b));
    }
    Ok(a)
}

fn projected_evaluation_rank(
    comps: &[Parametrization],
    degree: usize,
    sample_count: u64,
    monomial_count: u64,
    seed: u64,
) -> Result<u64> {
    let ambient = comps[0].ambient_dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime(&mut rng);

    let mut cols = 128u64.min(monomial_count);
    loop {
        let rows = (cols + 32).min(sample_count);
        // seeded points, round-robin across components, reduced mod p
        let mut points: Vec<Vec<u64>> = Vec::with_capacity(rows as usize);
        while points.len() < rows as usize {
            for comp in comps {
                if points.len() == rows as usize {
                    break;
                }
                let params = comp.draw_params(&mut rng);
                let point = comp.evaluate(&params);
                if let Some(reduced) = reduce_point_mod_p(&point, p) {
                    points.push(reduced);
                }
            }
        }
        // one product of `degree` random linear forms per column
        let mut matrix = vec![vec![0u64; cols as usize]; rows as usize];
        for c in 0..cols as usize {
            let forms: Vec<Vec<u64>> = (0..degree)
                .map(|_| (0..ambient).map(|_| rng.random_range(0..p)).collect())
                .collect();
            for (r, pt) in points.iter().enumerate() {
                let mut val = 1u64;
                for form in &forms {
                    let mut lin = 0u64;
                    for (coef, x) in form.iter().zip(pt) {
                        lin = (lin + coef * x % p) % p;
                    }
                    val = val * lin % p;
                }
                matrix[r][c] = val;
            }
        }
        let rank = rank_mod_p(matrix, p) as u64;
        if rank == cols && cols < monomial_count {
            cols = (cols * 2).min(monomial_count);
            continue;
        }
        return Ok(rank);
    }
}

fn reduce_point_mod_p(point: &[BigRational], p: u64) -> Option<Vec<u64>> {
    let p_big = BigInt::from(p);
    let mut out = Vec::with_capacity(point.len());
    for x in point {
        let den = x.denom() % &p_big;
        if den.is_zero() {
            return None;
        }
        let num = x.numer() % &p_big;
        let num = to_residue(&num, p);
        let den = to_residue(&den, p);
        out.push(num * mod_inverse(den, p) % p);
    }
    Some(out)
}

fn to_residue(x: &BigInt, p: u64) -> u64 {
    let m = x % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64_digits().1.first().copied().unwrap_or(0)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

fn random_prime(rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let candidate = rng.random_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Which listed components of a reducible variety contain the point,
/// decided from the components' literal defining conditions: nilpotency
/// of every slot, vanishing of the constrained prefix, or the coordinate-
/// plane shape of the sliced subregular components. Conjugated points of
/// the subregular families match no slice pattern and report no tags.
pub fn component_membership(id: &VarietyId, point: &[BigRational]) -> Result<Vec<&'static str>> {
    let q = FieldSpec::Rationals;
    let on_variety = |ideal: &IdealPresentation| -> bool {
        let scalars: Vec<Scalar> = point.iter().map(|x| Scalar::Rat(x.clone())).collect();
        ideal.generators().iter().all(|g| g.eval(&scalars).is_zero())
    };
    match id {
        VarietyId::Mixed { i, j } => {
            let ideal = id.build_ideal(&q)?;
            if point.len() != ideal.ring().arity() || !on_variety(&ideal) {
                return Err(Error::PointNotOnVariety);
            }
            let r = i + j;
            let mut tags = Vec::new();
            let nilpotent = (0..r).all(|m| {
                let (x, y, z) = (&point[3 * m], &point[3 * m + 1], &point[3 * m + 2]);
                (x * x + y * z).is_zero()
            });
            if nilpotent {
                tags.push("nilpotent");
            }
            let zero_prefix = (0..3 * i).all(|k| point[k].is_zero());
            if zero_prefix {
                tags.push("zero-prefix");
            }
            Ok(tags)
        }
        VarietyId::SubregComponent { r, .. } => {
            if point.len() != 8 * r || !verify_subreg_closure(point) {
                return Err(Error::PointNotOnVariety);
            }
            let mut tags = Vec::new();
            if slots_in_plane(point, *r, &[(1, 0), (2, 0)]) {
                tags.push("w1");
            }
            if slots_in_plane(point, *r, &[(1, 0), (1, 2)]) {
                tags.push("w2");
            }
            Ok(tags)
        }
        other => {
            let ideal = other.build_ideal(&q)?;
            if point.len() != ideal.ring().arity() || !on_variety(&ideal) {
                return Err(Error::PointNotOnVariety);
            }
            Ok(vec!["main"])
        }
    }
}

fn slots_in_plane(point: &[BigRational], r: usize, allowed: &[(usize, usize)]) -> bool {
    for slot in 0..r {
        for (k, (row, col)) in SL3_COORDS.iter().enumerate() {
            let v = &point[8 * slot + k];
            if !v.is_zero() && !allowed.contains(&(*row, *col)) {
                return false;
            }
        }
    }
    true
}

fn verify_subreg_closure(point: &[BigRational]) -> bool {
    if !point.len().is_multiple_of(8) {
        return false;
    }
    let r = point.len() / 8;
    let mats: Vec<[[BigRational; 3]; 3]> = (0..r).map(|s| slot_matrix(point, s)).collect();
    // rank <= 1 (all 2x2 minors vanish) per slot; trace is zero by
    // construction of the coordinates
    for m in &mats {
        for r1 in 0..3 {
            for r2 in r1 + 1..3 {
                for c1 in 0..3 {
                    for c2 in c1 + 1..3 {
                        if !(&m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    // pairwise commutators vanish
    for a in 0..r {
        for b in a + 1..r {
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = BigRational::zero();
                    for k in 0..3 {
                        acc += &mats[a][i][k] * &mats[b][k][j] - &mats[b][i][k] * &mats[a][k][j];
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn slot_matrix(point: &[BigRational], slot: usize) -> [[BigRational; 3]; 3] {
    let zero = BigRational::zero;
    let mut m = [
        [zero(), zero(), zero()],
        [zero(), zero(), zero()],
        [zero(), zero(), zero()],
    ];
    for (k, (row, col)) in SL3_COORDS.iter().enumerate() {
        m[*row][*col] = point[8 * slot + k].clone();
    }
    let m33 = -(&m[0][0] + &m[1][1]);
    m[2][2] = m33;
    m
}

// ---- parametrization builders ----

fn param_ring(names: &[String]) -> Result<Ring> {
    make_ring(names, FieldSpec::Rationals, MonomialOrder::GrevLex)
}

fn scale_names(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// Tuples of scalar multiples of one common traceless matrix; with
/// `nilpotent` set, the common matrix is the square-zero [[ab, -a^2],
/// [b^2, -ab]].
fn sl2_scaled_matrix_map(
    id: &VarietyId,
    r: usize,
    nilpotent: bool,
    q: &FieldSpec,
) -> Result<Parametrization> {
    let mut names = if nilpotent {
        vec!["a".to_string(), "b".to_string()]
    } else {
        vec!["a".to_string(), "b".to_string(), "c".to_string()]
    };
    let head = names.len();
    names.extend(scale_names("t", 1..=r));
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let (mx, my, mz) = if nilpotent {
        let a = var(0);
        let b = var(1);
        (a.mul(&b), a.mul(&a).neg(), b.mul(&b))
    } else {
        (var(0), var(1), var(2))
    };
    let mut coords = Vec::with_capacity(3 * r);
    for i in 0..r {
        let t = var(head + i);
        coords.push(t.mul(&mx));
        coords.push(t.mul(&my));
        coords.push(t.mul(&mz));
    }
    Ok(Parametrization {
        id: id.clone(),
        component: None,
        degeneracy: Degeneracy::AllZero((0..head).collect()),
        verifier: Verifier::Ideal(id.build_ideal(q)?),
        param_ring: ring,
        coords,
    })
}

/// Full 2x2 tuples: scalar multiples of a common traceless matrix shifted
/// by arbitrary scalar matrices.
fn gl2_map(id: &VarietyId, r: usize, q: &FieldSpec) -> Result<Parametrization> {
    let mut names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    names.extend(scale_names("t", 1..=r));
    names.extend(scale_names("s", 1..=r));
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let half = q.fraction(&BigInt::from(1), &BigInt::from(2))?;
    let mut coords = Vec::with_capacity(4 * r);
    for i in 0..r {
        let t = var(3 + i);
        let half_s = var(3 + r + i).scale(&half);
        coords.push(t.mul(&var(0)).add(&half_s)); // a_i
        coords.push(t.mul(&var(1))); // b_i
        coords.push(t.mul(&var(2))); // c_i
        coords.push(half_s.sub(&t.mul(&var(0)))); // d_i
    }
    Ok(Parametrization {
        id: id.clone(),
        component: None,
        degeneracy: Degeneracy::AllZero(vec![0, 1, 2]),
        verifier: Verifier::Ideal(id.build_ideal(q)?),
        param_ring: ring,
        coords,
    })
}

/// Strictly lower-triangular tuples with proportional (x, z) pairs and
/// free y coordinates.
fn sl3_u_map(id: &VarietyId, r: usize, q: &FieldSpec) -> Result<Parametrization> {
    let mut names = vec!["u".to_string(), "w".to_string()];
    names.extend(scale_names("c", 1..=r));
    names.extend(scale_names("y", 1..=r));
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let mut coords = Vec::with_capacity(3 * r);
    for i in 0..r {
        coords.push(var(2 + i).mul(&var(0))); // x_i = c_i u
        coords.push(var(2 + r + i)); // y_i free
        coords.push(var(2 + i).mul(&var(1))); // z_i = c_i w
    }
    Ok(Parametrization {
        id: id.clone(),
        component: None,
        degeneracy: Degeneracy::AllZero(vec![0, 1]),
        verifier: Verifier::Ideal(id.build_ideal(q)?),
        param_ring: ring,
        coords,
    })
}

/// A generic product of the six elementary unipotents, lower then upper,
/// together with its inverse, over the first six variables of the ring.
fn generic_unipotent(ring: &Ring) -> (PolyMat, PolyMat) {
    let var = |k: usize| Polynomial::variable(ring, k);
    let factors = [
        (1usize, 0usize),
        (2, 0),
        (2, 1),
        (0, 1),
        (0, 2),
        (1, 2),
    ];
    let mut g = PolyMat::identity(ring, 3);
    for (k, (i, j)) in factors.iter().enumerate() {
        g = g.mul(&elementary(ring, 3, *i, *j, &var(k)));
    }
    let mut g_inv = PolyMat::identity(ring, 3);
    for (k, (i, j)) in factors.iter().enumerate().rev() {
        g_inv = g_inv.mul(&elementary(ring, 3, *i, *j, &var(k).neg()));
    }
    (g, g_inv)
}

fn push_sl3_coords(coords: &mut Vec<Polynomial>, m: &PolyMat) {
    for (row, col) in SL3_COORDS {
        coords.push(m.entries[row][col].clone());
    }
}

/// Nilpotent 3x3 tuples: a commuting strictly lower-triangular tuple
/// conjugated by a generic product of elementary unipotents.
fn sl3_nilcomm_map(id: &VarietyId, r: usize, q: &FieldSpec) -> Result<Parametrization> {
    let mut names = scale_names("g", 1..=6);
    names.push("u".to_string());
    names.push("w".to_string());
    names.extend(scale_names("c", 1..=r));
    names.extend(scale_names("y", 1..=r));
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let (g, g_inv) = generic_unipotent(&ring);
    let mut coords = Vec::with_capacity(8 * r);
    for i in 0..r {
        let mut low = PolyMat::zero(&ring, 3);
        low.entries[1][0] = var(8 + i).mul(&var(6)); // x = c_i u
        low.entries[2][0] = var(8 + r + i).clone(); // y free
        low.entries[2][1] = var(8 + i).mul(&var(7)); // z = c_i w
        let conj = g.mul(&low).mul(&g_inv);
        push_sl3_coords(&mut coords, &conj);
    }
    Ok(Parametrization {
        id: id.clone(),
        component: None,
        degeneracy: Degeneracy::AllZero(vec![6, 7]),
        verifier: Verifier::Ideal(id.build_ideal(q)?),
        param_ring: ring,
        coords,
    })
}

fn mixed_nilpotent_map(
    id: &VarietyId,
    i: usize,
    j: usize,
    q: &FieldSpec,
) -> Result<Parametrization> {
    let mut p = sl2_scaled_matrix_map(id, i + j, true, q)?;
    p.component = Some("nilpotent");
    let _ = i;
    Ok(p)
}

/// Zero on the constrained prefix, a commuting traceless tuple on the
/// free slots.
fn mixed_zero_prefix_map(
    id: &VarietyId,
    i: usize,
    j: usize,
    q: &FieldSpec,
) -> Result<Parametrization> {
    let mut names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    names.extend(scale_names("t", 1..=j));
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let mut coords = vec![Polynomial::zero(&ring); 3 * i];
    for m in 0..j {
        let t = var(3 + m);
        coords.push(t.mul(&var(0)));
        coords.push(t.mul(&var(1)));
        coords.push(t.mul(&var(2)));
    }
    Ok(Parametrization {
        id: id.clone(),
        component: Some("zero-prefix"),
        degeneracy: Degeneracy::AllZero(vec![0, 1, 2]),
        verifier: Verifier::Ideal(id.build_ideal(q)?),
        param_ring: ring,
        coords,
    })
}

fn cut_map(id: &VarietyId, r: usize, which: usize, q: &FieldSpec) -> Result<Parametrization> {
    match which {
        1 => {
            // first slot zero, nilpotent commuting tuple behind it
            let mut names = vec!["a".to_string(), "b".to_string()];
            names.extend(scale_names("t", 2..=r));
            let ring = param_ring(&names)?;
            let var = |k: usize| Polynomial::variable(&ring, k);
            let a = var(0);
            let b = var(1);
            let (mx, my, mz) = (a.mul(&b), a.mul(&a).neg(), b.mul(&b));
            let mut coords = vec![Polynomial::zero(&ring); 3];
            for i in 0..r - 1 {
                let t = var(2 + i);
                coords.push(t.mul(&mx));
                coords.push(t.mul(&my));
                coords.push(t.mul(&mz));
            }
            Ok(Parametrization {
                id: id.clone(),
                component: None,
                degeneracy: Degeneracy::AllZero(vec![0, 1]),
                verifier: Verifier::Ideal(id.build_ideal(q)?),
                param_ring: ring,
                coords,
            })
        }
        2 | 3 => {
            let names = scale_names("t", 1..=r);
            let ring = param_ring(&names)?;
            let var = |k: usize| Polynomial::variable(&ring, k);
            let mut coords = Vec::with_capacity(3 * r);
            for i in 0..r {
                let t = var(i);
                coords.push(t.clone());
                if which == 2 {
                    coords.push(t.clone());
                    coords.push(t.neg());
                } else {
                    coords.push(t.neg());
                    coords.push(t.clone());
                }
            }
            Ok(Parametrization {
                id: id.clone(),
                component: None,
                degeneracy: Degeneracy::None,
                verifier: Verifier::Ideal(id.build_ideal(q)?),
                param_ring: ring,
                coords,
            })
        }
        _ => Err(Error::UnknownVariety(id.to_string())),
    }
}

/// One component of the sliced subregular closure: the base rank-one
/// nilpotent in the first slot and plane elements behind it, all
/// conjugated by a generic product of elementary unipotents.
fn subreg_map(id: &VarietyId, r: usize, which: usize) -> Result<Parametrization> {
    let slice = subreg_slice(which)?;
    let mut names = scale_names("g", 1..=6);
    for i in 2..=r {
        names.push(format!("p{i}"));
        names.push(format!("q{i}"));
    }
    let ring = param_ring(&names)?;
    let var = |k: usize| Polynomial::variable(&ring, k);
    let (g, g_inv) = generic_unipotent(&ring);

    let const_mat = |m: &[[i64; 3]; 3]| {
        let mut out = PolyMat::zero(&ring, 3);
        for (row, out_row) in m.iter().zip(out.entries.iter_mut()) {
            for (val, e) in row.iter().zip(out_row.iter_mut()) {
                *e = Polynomial::constant(&ring, FieldSpec::Rationals.from_i64(*val));
            }
        }
        out
    };

    let mut coords = Vec::with_capacity(8 * r);
    let base = const_mat(&slice.base);
    push_sl3_coords(&mut coords, &g.mul(&base).mul(&g_inv));
    for i in 0..r - 1 {
        let p = var(6 + 2 * i);
        let qv = var(6 + 2 * i + 1);
        let w = const_mat(&slice.plane[0])
            .scale(&p)
            .add(&const_mat(&slice.plane[1]).scale(&qv));
        push_sl3_coords(&mut coords, &g.mul(&w).mul(&g_inv));
    }
    let component: &'static str = if which == 1 { "w1" } else { "w2" };
    Ok(Parametrization {
        id: id.clone(),
        component: Some(component),
        degeneracy: Degeneracy::None,
        verifier: Verifier::SubregClosure,
        param_ring: ring,
        coords,
    })
}

fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}
