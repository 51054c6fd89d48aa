//! Generic r-th Feng-Rao distance for arbitrary numerical semigroups.
//!
//! δ_FR^r(m) is the minimum cardinality of D(m₁, …, m_r) over member tuples
//! m ≤ m₁ < … < m_r. The minimum over all tuples is already attained on a
//! finite recursive search set F_r(m), which this module enumerates; an
//! independent bounded exhaustive oracle is kept alongside it so the two
//! routes can arbitrate each other in tests and in `fengrao verify`.

use crate::error::{Error, Result};
use crate::semigroup::{merge_union, MultiplicitySequence, NumericalSemigroup, BITSET_THRESHOLD};
use std::collections::BTreeSet;

/// A strictly increasing member tuple (m₁, …, m_r) with m₁ ≥ floor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    elements: Vec<i64>,
    floor: i64,
}

impl Configuration {
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The constant E(Γ, r) with δ_FR^r(m) = m + 1 − 2g + E(Γ, r) for
/// m ≥ 2c − 1. For r ≥ 2 the value is at least 1 (and at most e(Γ) when
/// r = 2); the classical order r = 1 always yields 0, because the δ¹ tail
/// is exactly m + 1 − 2g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FengRaoNumber {
    value: i64,
    order: usize,
}

impl FengRaoNumber {
    pub fn new(value: i64, order: usize) -> Self {
        debug_assert!(order < 2 || value >= 1);
        FengRaoNumber { value, order }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// u = max(m + e − 1, c + e − 1), the ceiling of the first search level.
fn upper_limit(s: &NumericalSemigroup, m: i64) -> i64 {
    let e = s.multiplicity();
    (m + e - 1).max(s.conductor() + e - 1)
}

/// X(m; m₁, …, m_{r−1}): fresh members in (m_{r−1}, u] together with the
/// translates m_i + e, keeping only translates that clear m_{r−1}.
fn extension_candidates(s: &NumericalSemigroup, u: i64, prefix: &[i64]) -> Vec<i64> {
    let last = *prefix.last().unwrap();
    let mut x: BTreeSet<i64> = s.members_in(last + 1, u).into_iter().collect();
    let e = s.multiplicity();
    for &mi in prefix {
        if mi + e > last {
            x.insert(mi + e);
        }
    }
    x.into_iter().collect()
}

/// The finite search set F_r(m), in lexicographic order.
pub fn search_set(s: &NumericalSemigroup, r: usize, m: i64) -> Result<Vec<Configuration>> {
    if r == 0 {
        return Err(Error::OrderZero);
    }
    if !s.contains(m) {
        return Err(Error::NotAMember(m));
    }
    let u = upper_limit(s, m);
    let mut tuples: Vec<Vec<i64>> = s.members_in(m, u).into_iter().map(|x| vec![x]).collect();
    for _ in 2..=r {
        let mut next = Vec::new();
        for t in &tuples {
            for x in extension_candidates(s, u, t) {
                let mut t2 = t.clone();
                t2.push(x);
                next.push(t2);
            }
        }
        tuples = next;
    }
    Ok(tuples
        .into_iter()
        .map(|elements| Configuration { elements, floor: m })
        .collect())
}

/// Per-target divisor sets for every member in a window, so the search can
/// take union cardinalities without recomputing D(t). Small windows keep
/// sorted lists and count unions by merging; windows past the bitset
/// threshold switch to bit masks.
enum TargetSets {
    Sorted(Vec<Vec<i64>>),
    Bits { words: usize, masks: Vec<Vec<u64>> },
}

struct DivisorCache {
    base: i64,
    index: Vec<Option<u32>>,
    sets: TargetSets,
}

enum UnionAcc {
    Sorted(Vec<i64>),
    Bits(Vec<u64>),
}

impl DivisorCache {
    fn new(s: &NumericalSemigroup, lo: i64, hi: i64) -> Self {
        let targets = s.members_in(lo, hi);
        let mut index = vec![None; (hi - lo + 1).max(0) as usize];
        for (i, &t) in targets.iter().enumerate() {
            index[(t - lo) as usize] = Some(i as u32);
        }
        let sets = if hi <= BITSET_THRESHOLD {
            TargetSets::Sorted(
                targets
                    .iter()
                    .map(|&t| {
                        s.members_in(0, t)
                            .into_iter()
                            .filter(|&x| s.contains(t - x))
                            .collect()
                    })
                    .collect(),
            )
        } else {
            let words = hi as usize / 64 + 1;
            let masks = targets
                .iter()
                .map(|&t| {
                    let mut w = vec![0u64; words];
                    for x in s.members_in(0, t) {
                        if s.contains(t - x) {
                            w[x as usize / 64] |= 1 << (x as usize % 64);
                        }
                    }
                    w
                })
                .collect();
            TargetSets::Bits { words, masks }
        };
        DivisorCache { base: lo, index, sets }
    }

    fn empty(&self) -> UnionAcc {
        match &self.sets {
            TargetSets::Sorted(_) => UnionAcc::Sorted(Vec::new()),
            TargetSets::Bits { words, .. } => UnionAcc::Bits(vec![0u64; *words]),
        }
    }

    fn with_target(&self, acc: &UnionAcc, t: i64) -> UnionAcc {
        let idx = self.index[(t - self.base) as usize].expect("cached target") as usize;
        match (&self.sets, acc) {
            (TargetSets::Sorted(sets), UnionAcc::Sorted(cur)) => {
                UnionAcc::Sorted(merge_union(cur, &sets[idx]))
            }
            (TargetSets::Bits { masks, .. }, UnionAcc::Bits(cur)) => {
                let mut w = cur.clone();
                for (a, b) in w.iter_mut().zip(&masks[idx]) {
                    *a |= b;
                }
                UnionAcc::Bits(w)
            }
            _ => unreachable!("accumulator matches cache representation"),
        }
    }

    fn count(acc: &UnionAcc) -> usize {
        match acc {
            UnionAcc::Sorted(v) => v.len(),
            UnionAcc::Bits(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
        }
    }
}

/// Depth-first minimum of |D(tuple)| over tuples produced by `next`.
/// Every extension target exceeds the current maximum, so it adds at least
/// one fresh divisor; a prefix whose union plus the remaining slots cannot
/// beat the incumbent is pruned.
fn minimize<F>(cache: &DivisorCache, r: usize, next: &F) -> i64
where
    F: Fn(&[i64]) -> Vec<i64>,
{
    fn go<F>(
        cache: &DivisorCache,
        r: usize,
        next: &F,
        prefix: &mut Vec<i64>,
        acc: &UnionAcc,
        best: &mut usize,
    ) where
        F: Fn(&[i64]) -> Vec<i64>,
    {
        if prefix.len() == r {
            let n = DivisorCache::count(acc);
            if n < *best {
                *best = n;
            }
            return;
        }
        for t in next(prefix) {
            let acc2 = cache.with_target(acc, t);
            let remaining = r - prefix.len() - 1;
            if DivisorCache::count(&acc2) + remaining >= *best {
                continue;
            }
            prefix.push(t);
            go(cache, r, next, prefix, &acc2, best);
            prefix.pop();
        }
    }

    let mut best = usize::MAX;
    let mut prefix = Vec::with_capacity(r);
    go(cache, r, next, &mut prefix, &cache.empty(), &mut best);
    best as i64
}

/// δ_FR^r(m) as the minimum of |D(m₁, …, m_r)| over the finite set F_r(m).
pub fn feng_rao_distance(s: &NumericalSemigroup, r: usize, m: i64) -> Result<i64> {
    if r == 0 {
        return Err(Error::OrderZero);
    }
    if !s.contains(m) {
        return Err(Error::NotAMember(m));
    }
    let u = upper_limit(s, m);
    // every F_r entry is at most u + (r−1)e: level one stays below u and
    // each extension adds at most e above the running maximum
    let reach = u + (r as i64 - 1) * s.multiplicity();
    let cache = DivisorCache::new(s, m, reach);
    let next = |prefix: &[i64]| -> Vec<i64> {
        if prefix.is_empty() {
            s.members_in(m, u)
        } else {
            extension_candidates(s, u, prefix)
        }
    };
    Ok(minimize(&cache, r, &next))
}

/// Exhaustive reference for δ_FR^r(m): the minimum of |D(m₁, …, m_r)| over
/// *all* strictly increasing member tuples with m₁ ≥ m and m_r ≤ B, where
/// B = u + (r−1)e. B dominates every entry of F_r(m), and F_r(m) attains
/// the unbounded global minimum, so the bounded scan attains it too.
pub fn feng_rao_distance_oracle(s: &NumericalSemigroup, r: usize, m: i64) -> Result<i64> {
    if r == 0 {
        return Err(Error::OrderZero);
    }
    if !s.contains(m) {
        return Err(Error::NotAMember(m));
    }
    let bound = upper_limit(s, m) + (r as i64 - 1) * s.multiplicity();
    let cache = DivisorCache::new(s, m, bound);
    let next = |prefix: &[i64]| -> Vec<i64> {
        let lo = prefix.last().map_or(m, |&last| last + 1);
        s.members_in(lo, bound)
    };
    Ok(minimize(&cache, r, &next))
}

/// E(Γ, r), read off from the tail law at m = 2c − 1 (at m = 0 for ℕ).
pub fn feng_rao_number(s: &NumericalSemigroup, r: usize) -> Result<FengRaoNumber> {
    if r == 0 {
        return Err(Error::OrderZero);
    }
    let c = s.conductor();
    let value = if c == 0 {
        feng_rao_distance(s, r, 0)? - 1
    } else {
        feng_rao_distance(s, r, 2 * c - 1)? - 2 * c + 2 * s.genus()
    };
    Ok(FengRaoNumber::new(value, r))
}

/// E(Γ, 2) by the Apéry formula: min{|Ap(Γ, x)| : 1 ≤ x ≤ e(Γ)}, valid for
/// every numerical semigroup.
pub fn feng_rao_number_2_apery(s: &NumericalSemigroup) -> FengRaoNumber {
    let e = s.multiplicity();
    let value = (1..=e).map(|x| s.apery(x).len() as i64).min().unwrap();
    #[cfg(debug_assertions)]
    if s.is_arf() {
        debug_assert_eq!(
            value,
            feng_rao_number_2_apery_restricted(s).unwrap().value()
        );
    }
    FengRaoNumber::new(value, 2)
}

/// The restricted scan for Arf semigroups: on the way from 1 to e the
/// Apéry cardinality dips only at the distances d_i, so it is enough to
/// look at Ap(Γ, d) for d a distance between consecutive small elements.
pub fn feng_rao_number_2_apery_restricted(s: &NumericalSemigroup) -> Result<FengRaoNumber> {
    if !s.is_arf() {
        return Err(Error::NotArf);
    }
    let distances: BTreeSet<i64> = s.multiplicity_sequence().distances().iter().copied().collect();
    let value = distances
        .into_iter()
        .map(|d| s.apery(d).len() as i64)
        .min()
        .unwrap();
    Ok(FengRaoNumber::new(value, 2))
}

/// Every entry of every tuple of F_r(m) is a member, tuples are strictly
/// increasing and start at or above m; used by tests and debug checks.
#[allow(dead_code)]
pub(crate) fn configuration_is_valid(s: &NumericalSemigroup, cfg: &Configuration) -> bool {
    cfg.elements().windows(2).all(|w| w[0] < w[1])
        && cfg.elements().iter().all(|&x| s.contains(x))
        && cfg.elements().first().is_some_and(|&x| x >= cfg.floor())
}
