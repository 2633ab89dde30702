//! Orbit-level views of `(Z_p × Z_p)^n`: breadth-first closure under the
//! generators (the oracle), the brute-force partition, the stream of all normal
//! forms, and the normal-form census.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{canonicalize, CanonicalForm, Generator, Prime, SL2Matrix, VectorPair};
use crate::error::{Error, Result};
use crate::formulas::{self, Count};
use crate::BigCount;

/// Default cap on the number of vectors the brute-force partition may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// State spaces up to this size use a dense visited bitmap.
const DENSE_LIMIT: u64 = 1 << 24;

/// An orbit, identified by its normal form. Members are only materialized by
/// [`orbit_bfs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    representative: CanonicalForm,
    members: Option<Vec<VectorPair>>,
    size: u64,
}

impl Orbit {
    pub fn representative(&self) -> &CanonicalForm {
        &self.representative
    }

    /// Sorted members, when materialized.
    pub fn members(&self) -> Option<&[VectorPair]> {
        self.members.as_deref()
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn contains(&self, x: &VectorPair) -> bool {
        match &self.members {
            Some(m) => m.binary_search(x).is_ok(),
            None => canonicalize(x) == self.representative,
        }
    }
}

/// `S`, `T` and `T⁻¹`. `S` has order 4, so `S⁻¹ = S³` is redundant for closure.
fn closure_generators(p: Prime) -> [SL2Matrix; 3] {
    [
        Generator::S.matrix(p),
        Generator::T.matrix(p),
        Generator::TInv.matrix(p),
    ]
}

/// The full orbit of `x`, by breadth-first closure under the generators.
///
/// Fails with [`Error::InternalInvariantViolation`] if two members have
/// different normal forms.
pub fn orbit_bfs(x: &VectorPair) -> Result<Orbit> {
    let gens = closure_generators(x.modulus());
    let mut seen = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for g in &gens {
            let z = g.apply(&y)?;
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    let representative = canonicalize(x);
    let mut members: Vec<VectorPair> = seen.into_iter().collect();
    members.sort();
    if let Some(bad) = members.iter().find(|m| canonicalize(m) != representative) {
        return Err(Error::InternalInvariantViolation(format!(
            "{bad} lies in the orbit of {x} but normalizes to {} instead of {representative}",
            canonicalize(bad)
        )));
    }
    Ok(Orbit {
        representative,
        size: members.len() as u64,
        members: Some(members),
    })
}

/// Whether `x` and `y` lie in the same orbit, decided by normal forms. Debug
/// builds also confirm the answer against [`orbit_bfs`].
pub fn same_orbit(x: &VectorPair, y: &VectorPair) -> Result<bool> {
    x.same_shape(y)?;
    let same = canonicalize(x) == canonicalize(y);
    if cfg!(debug_assertions) {
        debug_assert_eq!(orbit_bfs(x)?.contains(y), same, "{x} vs {y}");
    }
    Ok(same)
}

/// Number of vectors in `(Z_p × Z_p)^n`, if it fits in a `u64`.
pub fn state_count(p: Prime, n: usize) -> Option<u64> {
    u64::from(p.get()).checked_pow(u32::try_from(2 * n).ok()?)
}

fn check_budget(p: Prime, n: usize, budget: u64) -> Result<u64> {
    match state_count(p, n) {
        Some(states) if states <= budget => Ok(states),
        Some(states) => Err(Error::BudgetExceeded {
            what: format!("state space of {states} vectors"),
            budget,
        }),
        None => Err(Error::BudgetExceeded {
            what: format!("state space of {}^{} vectors", p, 2 * n),
            budget,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum VisitedKind {
    Dense,
    Sparse,
}

enum Visited {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Visited {
    fn new(kind: VisitedKind, states: u64) -> Self {
        match kind {
            VisitedKind::Dense => Visited::Dense(vec![0; states.div_ceil(64) as usize]),
            VisitedKind::Sparse => Visited::Sparse(HashSet::new()),
        }
    }

    fn contains(&self, i: u64) -> bool {
        match self {
            Visited::Dense(bits) => bits[(i / 64) as usize] >> (i % 64) & 1 == 1,
            Visited::Sparse(set) => set.contains(&i),
        }
    }

    /// Marks `i`; returns whether it was new.
    fn insert(&mut self, i: u64) -> bool {
        match self {
            Visited::Dense(bits) => {
                let word = &mut bits[(i / 64) as usize];
                let mask = 1u64 << (i % 64);
                let fresh = *word & mask == 0;
                *word |= mask;
                fresh
            }
            Visited::Sparse(set) => set.insert(i),
        }
    }
}

/// Splits all of `(Z_p × Z_p)^n` into orbits by repeated breadth-first closure
/// from the smallest unvisited state. Orbits are returned in seed order with
/// materialized sizes but no member lists.
pub fn partition(p: Prime, n: usize, budget: u64) -> Result<Vec<Orbit>> {
    let states = check_budget(p, n, budget)?;
    let kind = if states <= DENSE_LIMIT {
        VisitedKind::Dense
    } else {
        VisitedKind::Sparse
    };
    partition_with(p, n, states, kind)
}

pub(crate) fn partition_with(
    p: Prime,
    n: usize,
    states: u64,
    kind: VisitedKind,
) -> Result<Vec<Orbit>> {
    let gens = closure_generators(p);
    let mut visited = Visited::new(kind, states);
    let mut orbits = Vec::new();
    let mut queue = VecDeque::new();
    let mut total = 0u64;
    for seed in 0..states {
        if visited.contains(seed) {
            continue;
        }
        let seed_pair = VectorPair::from_state_index(p, n, seed);
        let representative = canonicalize(&seed_pair);
        visited.insert(seed);
        queue.push_back(seed_pair);
        let mut size = 0u64;
        while let Some(x) = queue.pop_front() {
            size += 1;
            if canonicalize(&x) != representative {
                return Err(Error::InternalInvariantViolation(format!(
                    "{x} is reachable from {representative} but has a different normal form"
                )));
            }
            for g in &gens {
                let y = g.apply(&x)?;
                let idx = y.state_index().expect("index fits: states <= budget");
                if visited.insert(idx) {
                    queue.push_back(y);
                }
            }
        }
        total += size;
        orbits.push(Orbit {
            representative,
            members: None,
            size,
        });
    }
    if total != states {
        return Err(Error::InternalInvariantViolation(format!(
            "orbit sizes sum to {total}, expected {states}"
        )));
    }
    Ok(orbits)
}

/// `r(p, n)` by exhaustive partition of the state space.
pub fn count_orbits_bruteforce(p: Prime, n: usize, budget: u64) -> Result<BigCount> {
    Ok(BigCount::from(partition(p, n, budget)?.len()))
}

/// Number of normal forms, without enumerating them: the zero form, one flat form
/// per choice of lead column and free `u` tail, and for every pivot column `k`,
/// `(p^k − 1)·p^{2(n−1−k)}` split forms (the `p^k − 1` counts the prefixes before the
/// pivot together with the nonzero `v_k`).
pub fn count_canonical_census_as<T: Count>(p: Prime, n: usize) -> Result<T> {
    const CTX: &str = "census";
    let q = p.get();
    let mut total = T::one();
    for m in 0..n {
        total = formulas::add(&total, &formulas::pow(q, m, CTX)?, CTX)?;
    }
    for k in 0..n {
        let prefixes = formulas::pow::<T>(q, k, CTX)? - T::one();
        let tails = formulas::pow::<T>(q, 2 * (n - 1 - k), CTX)?;
        total = formulas::add(&total, &formulas::mul(&prefixes, &tails, CTX)?, CTX)?;
    }
    Ok(total)
}

pub fn count_canonical_census(p: Prime, n: usize) -> BigCount {
    count_canonical_census_as(p, n).expect("bignum arithmetic does not overflow")
}

/// A family of normal forms sharing their landmark columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    Zero,
    Flat { lead: usize },
    Split { lead: usize, pivot: usize },
}

impl Block {
    fn fits(self, n: usize) -> bool {
        match self {
            Block::Zero => true,
            Block::Flat { lead } => lead < n,
            Block::Split { lead, pivot } => lead < pivot && pivot < n,
        }
    }

    /// Mixed radices of the free entries, most significant first.
    fn radices(self, p: u32, n: usize) -> Vec<u32> {
        match self {
            Block::Zero => Vec::new(),
            Block::Flat { lead } => vec![p; n - lead - 1],
            Block::Split { lead, pivot } => {
                let mut r = vec![p; pivot - lead - 1];
                r.push(p - 1);
                r.extend(std::iter::repeat_n(p, 2 * (n - pivot - 1)));
                r
            }
        }
    }

    fn build(self, p: Prime, n: usize, digits: &[u32]) -> CanonicalForm {
        let mut u = vec![0; n];
        let mut v = vec![0; n];
        let (lead, pivot) = match self {
            Block::Zero => return CanonicalForm::zero(p, n),
            Block::Flat { lead } => {
                u[lead + 1..].copy_from_slice(digits);
                (lead, None)
            }
            Block::Split { lead, pivot } => {
                let (small, rest) = digits.split_at(pivot - lead - 1);
                u[lead + 1..pivot].copy_from_slice(small);
                v[pivot] = rest[0] + 1;
                for (i, col) in rest[1..].chunks(2).enumerate() {
                    u[pivot + 1 + i] = col[0];
                    v[pivot + 1 + i] = col[1];
                }
                (lead, Some(pivot))
            }
        };
        u[lead] = 1;
        let form = CanonicalForm::from_canonical(VectorPair::from_rows_unchecked(p, u, v))
            .expect("block layout is a normal form");
        debug_assert_eq!(form.pivot(), pivot);
        form
    }
}

/// Stream of every normal form of `(Z_p × Z_p)^n`, each exactly once.
///
/// Order: the zero form; then flat forms by lead column and then free tail; then
/// split forms by `(lead, pivot)` and then free entries. Free entries of a split
/// form are read as `u` between lead and pivot, then `v_pivot`, then `(u_i, v_i)`
/// column by column; the last entry varies fastest.
#[derive(Debug, Clone)]
pub struct OrbitForms {
    modulus: Prime,
    n: usize,
    blocks: std::vec::IntoIter<Block>,
    block: Option<Block>,
    radices: Vec<u32>,
    digits: Vec<u32>,
}

impl OrbitForms {
    fn enter(&mut self, block: Option<Block>) {
        self.block = block;
        if let Some(b) = block {
            self.radices = b.radices(self.modulus.get(), self.n);
            self.digits = vec![0; self.radices.len()];
        }
    }

    /// Odometer step; false once the block is exhausted.
    fn bump(&mut self) -> bool {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return true;
            }
            self.digits[i] = 0;
        }
        false
    }
}

impl Iterator for OrbitForms {
    type Item = CanonicalForm;

    fn next(&mut self) -> Option<CanonicalForm> {
        let block = self.block?;
        let form = block.build(self.modulus, self.n, &self.digits);
        if !self.bump() {
            let next = self.blocks.next();
            self.enter(next);
        }
        Some(form)
    }
}

/// Blocks in stream order.
pub fn orbit_blocks(n: usize) -> Vec<Block> {
    let mut blocks = vec![Block::Zero];
    blocks.extend((0..n).map(|lead| Block::Flat { lead }));
    for lead in 0..n {
        blocks.extend((lead + 1..n).map(|pivot| Block::Split { lead, pivot }));
    }
    blocks
}

pub fn enumerate_orbits(p: Prime, n: usize) -> OrbitForms {
    forms_of_blocks(p, n, orbit_blocks(n))
}

/// Normal forms of the given blocks, in order. Blocks that do not fit length `n`
/// are empty.
pub fn forms_of_blocks(p: Prime, n: usize, blocks: Vec<Block>) -> OrbitForms {
    let blocks: Vec<Block> = blocks.into_iter().filter(|b| b.fits(n)).collect();
    let mut it = OrbitForms {
        modulus: p,
        n,
        blocks: blocks.into_iter(),
        block: None,
        radices: Vec::new(),
        digits: Vec::new(),
    };
    let first = it.blocks.next();
    it.enter(first);
    it
}
