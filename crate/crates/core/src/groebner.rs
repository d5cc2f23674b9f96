//! Buchberger's algorithm with the coprime and chain criteria, reduced
//! Groebner bases, and the ideal-theoretic operations built on them:
//! membership, radical membership via the Rabinowitsch device,
//! elimination, intersection, and radical equality.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{normal_form_unchecked, Polynomial};
use crate::ring::{make_ring, Ring};

/// Resource caps for a single basis computation. Exceeding a cap is a hard
/// error, never a silently truncated answer.
#[derive(Clone, Copy, Debug)]
pub struct GbConfig {
    /// Maximum number of S-pairs popped from the queue.
    pub max_pairs: u64,
    /// Wall-clock cap for one basis computation.
    pub max_time: Option<Duration>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 1_000_000,
            max_time: None,
        }
    }
}

/// Counters from one Buchberger run.
#[derive(Clone, Copy, Debug, Default)]
pub struct GbStats {
    /// S-pairs popped from the queue (budgeted quantity).
    pub pairs_considered: u64,
    /// S-pairs that survived the criteria and were reduced.
    pub pairs_reduced: u64,
    /// Reductions that ended in zero.
    pub zero_reductions: u64,
    /// Size of the reduced basis.
    pub basis_size: usize,
}

/// A reduced Groebner basis: monic, mutually reduced, sorted descending by
/// leading monomial. Unique for the ideal and monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
    stats: GbStats,
    source: IdealPresentation,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn source(&self) -> &IdealPresentation {
        &self.source
    }

    /// True when the basis presents the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit_constant()
    }
}

struct PairQueue {
    // min-heap on (lcm degree, order key of lcm, i, j) — the normal
    // selection strategy
    heap: BinaryHeap<Reverse<(u64, Vec<u64>, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            heap: BinaryHeap::new(),
            pending: HashSet::new(),
        }
    }

    fn push(&mut self, order: &MonomialOrder, basis: &[Polynomial], i: usize, j: usize) {
        let lcm = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        let key = (lcm.total_degree(), order.ascending_key(&lcm), i, j);
        self.heap.push(Reverse(key));
        self.pending.insert((i, j));
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        self.heap.pop().map(|Reverse((_, _, i, j))| {
            self.pending.remove(&(i, j));
            (i, j)
        })
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pending.contains(&key)
    }
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    // both monic
    let (fm, _) = f.leading().unwrap();
    let (gm, _) = g.leading().unwrap();
    let lcm = fm.lcm(gm);
    let qf = lcm.checked_div(fm).unwrap();
    let qg = lcm.checked_div(gm).unwrap();
    let one = f.ring().field().one();
    f.mul_term(&qf, &one).sub(&g.mul_term(&qg, &one))
}

/// Computes the reduced Groebner basis of the generated ideal. Idempotent:
/// rerunning on its own output reproduces it.
pub fn buchberger(source: &IdealPresentation, config: &GbConfig) -> Result<GroebnerBasis> {
    let ring = source.ring().clone();
    let order = *ring.order();
    let start = Instant::now();
    let mut stats = GbStats::default();

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in source.generators() {
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }

    let mut queue = PairQueue::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue.push(&order, &basis, i, j);
        }
    }

    while let Some((i, j)) = queue.pop() {
        stats.pairs_considered += 1;
        if stats.pairs_considered > config.max_pairs {
            return Err(Error::Budget(format!(
                "S-pair cap of {} exceeded",
                config.max_pairs
            )));
        }
        if let Some(max) = config.max_time {
            if start.elapsed() > max {
                return Err(Error::Budget(format!(
                    "wall-clock cap of {:.1}s exceeded",
                    max.as_secs_f64()
                )));
            }
        }

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        // coprime leading terms: S-polynomial reduces to zero
        if lm_i.coprime(lm_j) {
            continue;
        }
        // chain criterion: some k divides the lcm and both flanking pairs
        // are already settled
        let lcm = lm_i.lcm(lm_j);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !queue.is_pending(i.min(k), i.max(k))
                && !queue.is_pending(j.min(k), j.max(k))
        });
        if chained {
            continue;
        }

        stats.pairs_reduced += 1;
        let s = spoly(&basis[i], &basis[j]);
        let r = normal_form_unchecked(&s, &basis);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let r = r.monic();
        let new_index = basis.len();
        basis.push(r);
        for i in 0..new_index {
            queue.push(&order, &basis, i, new_index);
        }
    }

    let basis = reduce_basis(basis);
    stats.basis_size = basis.len();
    Ok(GroebnerBasis {
        ring,
        basis,
        stats,
        source: source.clone(),
    })
}

/// Minimalizes and inter-reduces a Groebner basis, returning the unique
/// reduced form sorted descending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    let order = *ring.order();

    // minimal generating set of the leading-term ideal
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }

    // tail-reduce each element against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form_unchecked(&minimal[i], &others);
        debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
        reduced.push(r.monic());
    }

    reduced.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
        )
    });
    reduced
}

/// Certificate check: every S-polynomial of the basis reduces to zero.
pub fn is_groebner(basis: &[Polynomial]) -> bool {
    for j in 1..basis.len() {
        for i in 0..j {
            let s = spoly(&basis[i].monic(), &basis[j].monic());
            if !normal_form_unchecked(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Membership of `f` in the ideal presented by the basis: true exactly
/// when the normal form vanishes.
pub fn ideal_member(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(normal_form_unchecked(f, &gb.basis).is_zero())
}

/// Membership of `f` in the radical of the generated ideal, decided by the
/// Rabinowitsch device: f lies in the radical iff 1 lies in the ideal
/// extended by 1 - t*f in a ring with one fresh variable. The extension
/// uses grevlex; no elimination order is needed to detect the unit ideal.
pub fn radical_member(
    f: &Polynomial,
    ideal: &IdealPresentation,
    config: &GbConfig,
) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let fresh = ring.fresh_name("t");
    let mut names: Vec<String> = ring.vars().to_vec();
    names.push(fresh);
    let ext = make_ring(&names, *ring.field(), MonomialOrder::GrevLex)?;

    let lift = |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps.push(0);
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(&ext, terms)
    };

    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(&lift).collect();
    let t = Polynomial::variable(&ext, ext.arity() - 1);
    let one = Polynomial::one(&ext);
    gens.push(one.sub(&t.mul(&lift(f))));

    let presentation = IdealPresentation::new(ext, gens, false)?;
    let gb = buchberger(&presentation, config)?;
    Ok(gb.is_unit_ideal())
}

/// Generators of the contraction of the ideal to the subring omitting the
/// `drop` variables, read off a block-order basis.
pub fn eliminate(
    ideal: &IdealPresentation,
    drop: &[&str],
    config: &GbConfig,
) -> Result<IdealPresentation> {
    let ring = ideal.ring();
    let mut drop_idx = Vec::with_capacity(drop.len());
    for name in drop {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        if !drop_idx.contains(&i) {
            drop_idx.push(i);
        }
    }
    if drop_idx.is_empty() {
        return Ok(ideal.clone());
    }
    if drop_idx.len() >= ring.arity() {
        return Err(Error::InvalidArgument(
            "cannot eliminate every variable".into(),
        ));
    }
    let keep_idx: Vec<usize> = (0..ring.arity()).filter(|i| !drop_idx.contains(i)).collect();

    // elimination ring: dropped block first
    let mut names: Vec<String> = drop_idx.iter().map(|&i| ring.var_name(i).to_string()).collect();
    names.extend(keep_idx.iter().map(|&i| ring.var_name(i).to_string()));
    let elim_ring = make_ring(
        &names,
        *ring.field(),
        MonomialOrder::Block {
            split: drop_idx.len(),
        },
    )?;

    let perm: Vec<usize> = drop_idx.iter().chain(&keep_idx).copied().collect();
    let to_elim = |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let exps: Vec<u32> = perm.iter().map(|&src| m.exp(src)).collect();
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(&elim_ring, terms)
    };

    let lifted: Vec<Polynomial> = ideal.generators().iter().map(&to_elim).collect();
    let gb = buchberger(&IdealPresentation::new(elim_ring.clone(), lifted, false)?, config)?;

    let keep_names: Vec<String> = keep_idx.iter().map(|&i| ring.var_name(i).to_string()).collect();
    let target = make_ring(&keep_names, *ring.field(), MonomialOrder::GrevLex)?;
    let split = drop_idx.len();
    let mut kept_gens = Vec::new();
    for g in gb.basis() {
        if g.terms().iter().all(|(m, _)| m.exps()[..split].iter().all(|&e| e == 0)) {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial::from_exps(m.exps()[split..].to_vec()),
                        c.clone(),
                    )
                })
                .collect();
            kept_gens.push(Polynomial::from_terms(&target, terms));
        }
    }
    IdealPresentation::new(target, kept_gens, ideal.radical_closure())
}

/// Intersection of two ideals via the auxiliary-variable construction:
/// <t*I, (1-t)*J> contracted to the original variables.
pub fn intersect_ideals(
    a: &IdealPresentation,
    b: &IdealPresentation,
    config: &GbConfig,
) -> Result<IdealPresentation> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let fresh = ring.fresh_name("t");
    let mut names = vec![fresh.clone()];
    names.extend(ring.vars().iter().cloned());
    let ext = make_ring(&names, *ring.field(), MonomialOrder::Block { split: 1 })?;

    let lift = |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32];
                exps.extend_from_slice(m.exps());
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(&ext, terms)
    };

    let t = Polynomial::variable(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(t.mul(&lift(g)));
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&lift(g)));
    }

    let gb = buchberger(&IdealPresentation::new(ext, gens, false)?, config)?;
    let mut kept = Vec::new();
    for g in gb.basis() {
        if g.terms().iter().all(|(m, _)| m.exp(0) == 0) {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::from_exps(m.exps()[1..].to_vec()), c.clone()))
                .collect();
            kept.push(Polynomial::from_terms(ring, terms));
        }
    }
    IdealPresentation::new(
        ring.clone(),
        kept,
        a.radical_closure() || b.radical_closure(),
    )
}

/// Equality of radicals: every generator of each presentation lies in the
/// radical of the other.
pub fn ideal_equal_radical(
    a: &IdealPresentation,
    b: &IdealPresentation,
    config: &GbConfig,
) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    for g in a.generators() {
        if !radical_member(g, b, config)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !radical_member(g, a, config)? {
            return Ok(false);
        }
    }
    Ok(true)
}
