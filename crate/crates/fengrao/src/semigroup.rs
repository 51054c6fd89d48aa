//! Numerical semigroups in canonical small-elements form, with the
//! primitive set-valued operations everything else is built on: membership,
//! Apéry sets, divisor sets, translation, Arf detection and enumeration.
//!
//! A numerical semigroup Γ is a set of nonnegative integers containing 0,
//! closed under addition, with finite complement in ℕ. The canonical
//! representation stores every member up to and including the conductor c
//! (the least integer with c + ℕ ⊆ Γ); all queries are answered from that
//! list. Values are `i64` and the construction boundaries use checked
//! arithmetic, so an overflow is a reported error rather than a wrap.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Divisor-union cardinalities are computed by merging sorted per-target
/// lists; past this target size a bitset over [0, max target] is the
/// faster representation.
pub(crate) const BITSET_THRESHOLD: i64 = 1 << 14;

/// A numerical semigroup in canonical form.
///
/// `small_elements` holds ρ₁ = 0 < ρ₂ < … < ρ_r = c, every member that is
/// at most the conductor. For Γ = ℕ this is `[0]` with conductor 0 and
/// multiplicity 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    small_elements: Vec<i64>,
    conductor: i64,
    multiplicity: i64,
    genus: i64,
}

impl NumericalSemigroup {
    /// The semigroup ℕ of all nonnegative integers.
    pub fn nat() -> Self {
        NumericalSemigroup {
            small_elements: vec![0],
            conductor: 0,
            multiplicity: 1,
            genus: 0,
        }
    }

    /// Builds a semigroup from its small elements, validating the whole
    /// canonical-form contract: 0 first, strictly increasing, last element
    /// equal to the conductor (so c − 1 must be a gap), and additive
    /// closure below the conductor.
    pub fn from_small_elements(small: Vec<i64>) -> Result<Self> {
        if small.is_empty() {
            return Err(Error::EmptySmallElements);
        }
        if small[0] != 0 || small.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedSmallElements);
        }
        let c = *small.last().unwrap();
        if c > 0 && small.binary_search(&(c - 1)).is_ok() {
            return Err(Error::ConductorNotMinimal(c - 1));
        }
        for (i, &a) in small.iter().enumerate().skip(1) {
            for &b in &small[i..] {
                let sum = a.checked_add(b).ok_or(Error::Overflow)?;
                if sum < c && small.binary_search(&sum).is_err() {
                    return Err(Error::NotClosed { a, b, sum });
                }
            }
        }
        let multiplicity = if small.len() >= 2 { small[1] } else { 1 };
        let genus = c - (small.len() as i64 - 1);
        Ok(NumericalSemigroup {
            small_elements: small,
            conductor: c,
            multiplicity,
            genus,
        })
    }

    /// The smallest numerical semigroup containing the given generators.
    ///
    /// Fails when the gcd of the generators is not 1 (the complement would
    /// be infinite). Membership is established by dynamic programming up to
    /// the Schur bound (min−1)(max−1), which dominates the Frobenius number.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::InfiniteComplement(g));
        }
        if gens.contains(&1) {
            return Ok(Self::nat());
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        let bound = (lo - 1).checked_mul(hi - 1).ok_or(Error::Overflow)?;
        if bound > BITSET_THRESHOLD * 64 {
            return Err(Error::TooLarge(bound));
        }
        let n = bound as usize + 1;
        let mut member = vec![false; n];
        member[0] = true;
        for x in 1..n {
            member[x] = gens
                .iter()
                .any(|&g| (g as usize) <= x && member[x - g as usize]);
        }
        let frobenius = (0..n).rev().find(|&x| !member[x]).unwrap_or(0);
        let c = frobenius as i64 + 1;
        let small: Vec<i64> = (0..=c).filter(|&x| member[x as usize]).collect();
        let multiplicity = small[1];
        let genus = c - (small.len() as i64 - 1);
        Ok(NumericalSemigroup {
            small_elements: small,
            conductor: c,
            multiplicity,
            genus,
        })
    }

    /// Rebuilds the semigroup {0, d₁, d₁+d₂, …, d₁+⋯+d_{r−1}, →} from a
    /// multiplicity sequence. The partial sums are validated as a canonical
    /// small-element list, so a sequence that does not define a semigroup
    /// (or whose conductor is not minimal) is rejected.
    pub fn from_multiplicity_sequence(seq: &MultiplicitySequence) -> Result<Self> {
        let d = seq.distances();
        let mut small = Vec::with_capacity(d.len());
        small.push(0i64);
        let mut acc = 0i64;
        for &di in &d[..d.len() - 1] {
            acc = acc.checked_add(di).ok_or(Error::Overflow)?;
            small.push(acc);
        }
        Self::from_small_elements(small)
    }

    /// Membership test: true for every integer at least the conductor and
    /// for the listed small elements; false for negative integers.
    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || (x >= 0 && self.small_elements.binary_search(&x).is_ok())
    }

    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Number of small elements, i.e. the index r with ρ_r = c.
    pub fn small_count(&self) -> usize {
        self.small_elements.len()
    }

    /// All members in the closed interval [lo, hi].
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        if hi < lo {
            return Vec::new();
        }
        let start = self.small_elements.partition_point(|&x| x < lo);
        let end = self.small_elements.partition_point(|&x| x <= hi);
        let mut v: Vec<i64> = self.small_elements[start..end].to_vec();
        let tail_from = (self.conductor + 1).max(lo);
        v.extend(tail_from..=hi);
        v
    }

    /// Apéry set Ap(Γ, x) = {m ∈ Γ | m − x ∉ Γ}, defined for every integer x.
    ///
    /// The search domain is finite: members in [0, c + max(x, 0)) suffice,
    /// since m ≥ c + x forces m − x ≥ c ∈ Γ, and for x ≤ 0 a member m ≥ c
    /// has m − x ≥ c as well.
    pub fn apery(&self, x: i64) -> AperySet {
        let upper = self.conductor + x.max(0);
        let elements = self
            .members_in(0, upper - 1)
            .into_iter()
            .filter(|&m| match m.checked_sub(x) {
                Some(d) => !self.contains(d),
                // m − x only overflows for hugely negative x, where the
                // difference is astronomically positive, hence a member.
                None => false,
            })
            .collect();
        AperySet {
            elements,
            with_respect_to: x,
        }
    }

    /// Sorted divisor set of a single target: {m ∈ Γ | t − m ∈ Γ}.
    fn divisor_list(&self, t: i64) -> Vec<i64> {
        if !self.contains(t) {
            return Vec::new();
        }
        self.members_in(0, t)
            .into_iter()
            .filter(|&m| self.contains(t - m))
            .collect()
    }

    /// Divisor set D(m₁, …, m_k), the union of the single-target sets.
    /// Targets outside the semigroup contribute nothing.
    pub fn divisors(&self, targets: &[i64]) -> DivisorSet {
        let mut set = BTreeSet::new();
        for &t in targets {
            set.extend(self.divisor_list(t));
        }
        DivisorSet {
            elements: set.into_iter().collect(),
            targets: targets.to_vec(),
        }
    }

    /// Cardinality of D(m₁, …, m_k) without keeping the union around.
    pub fn divisor_count(&self, targets: &[i64]) -> usize {
        let live: Vec<i64> = targets.iter().copied().filter(|&t| self.contains(t)).collect();
        let Some(&max_t) = live.iter().max() else {
            return 0;
        };
        if max_t <= BITSET_THRESHOLD {
            let mut acc: Vec<i64> = Vec::new();
            for &t in &live {
                acc = merge_union(&acc, &self.divisor_list(t));
            }
            acc.len()
        } else {
            let words = max_t as usize / 64 + 1;
            let mut bits = vec![0u64; words];
            for &t in &live {
                for m in self.divisor_list(t) {
                    bits[m as usize / 64] |= 1 << (m as usize % 64);
                }
            }
            bits.iter().map(|w| w.count_ones() as usize).sum()
        }
    }

    /// Translation Γ_m = {0} ∪ (m + Γ) by a nonzero member m. The result
    /// has multiplicity m, conductor c + m and genus g + m − 1, and is Arf
    /// exactly when the input is.
    pub fn translate(&self, m: i64) -> Result<Self> {
        if m <= 0 {
            return Err(Error::NonPositiveTranslation(m));
        }
        if !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        if m == 1 {
            // 1 ∈ Γ forces Γ = ℕ, and ℕ_1 = ℕ.
            return Ok(Self::nat());
        }
        let mut small = Vec::with_capacity(self.small_elements.len() + 1);
        small.push(0);
        for &x in &self.small_elements {
            small.push(x.checked_add(m).ok_or(Error::Overflow)?);
        }
        Ok(NumericalSemigroup {
            small_elements: small,
            conductor: self.conductor + m,
            multiplicity: m,
            genus: self.genus + m - 1,
        })
    }

    /// The irreducible elements Γ* \ (Γ* + Γ*), i.e. the minimal generating
    /// system. Any member ≥ c + e with m > e splits off e, so candidates
    /// live in [e, c + e − 1].
    pub fn minimal_generators(&self) -> Vec<i64> {
        let e = self.multiplicity;
        let hi = (self.conductor + e - 1).max(e);
        self.members_in(e, hi)
            .into_iter()
            .filter(|&m| {
                !self
                    .members_in(e, m - e)
                    .into_iter()
                    .any(|a| self.contains(m - a))
            })
            .collect()
    }

    /// Arf test: ρ_i + ρ_j − ρ_k ∈ Γ for every i ≥ j ≥ k.
    ///
    /// Scanning the small elements is enough: with j ≥ k the difference
    /// ρ_j − ρ_k is nonnegative, so any ρ_i ≥ c makes the combination ≥ c,
    /// a member automatically.
    pub fn is_arf(&self) -> bool {
        let s = &self.small_elements;
        for (k, &rk) in s.iter().enumerate() {
            for (j, &rj) in s.iter().enumerate().skip(k) {
                for &ri in &s[j..] {
                    if !self.contains(ri + rj - rk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Distances d_i = ρ_{i+1} − ρ_i between consecutive small elements,
    /// closed with d_r = 1 (the element after the conductor is c + 1).
    pub fn multiplicity_sequence(&self) -> MultiplicitySequence {
        let mut d: Vec<i64> = self
            .small_elements
            .windows(2)
            .map(|w| w[1] - w[0])
            .collect();
        d.push(1);
        MultiplicitySequence { d }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for &x in &self.small_elements {
            write!(f, "{x}, ")?;
        }
        write!(f, "->}}")
    }
}

/// The multiplicity sequence (d₁, …, d_r) of a semigroup; d_r is always 1.
/// For an Arf semigroup the sequence is nonincreasing and reconstructs the
/// semigroup exactly, and its reversed prefix d_{r−1}, …, d₁ is the chain
/// of translations that builds the semigroup from ℕ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicitySequence {
    d: Vec<i64>,
}

impl MultiplicitySequence {
    pub fn new(d: Vec<i64>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = d.iter().find(|&&x| x <= 0) {
            return Err(Error::NonPositiveDistance(bad));
        }
        let last = *d.last().unwrap();
        if last != 1 {
            return Err(Error::SequenceMustEndInOne(last));
        }
        Ok(MultiplicitySequence { d })
    }

    pub fn distances(&self) -> &[i64] {
        &self.d
    }

    /// The index r, which equals the number of small elements.
    pub fn order(&self) -> usize {
        self.d.len()
    }

    /// Translation amounts in application order: d_{r−1} first, d₁ last.
    pub fn translations(&self) -> impl Iterator<Item = i64> + '_ {
        self.d[..self.d.len() - 1].iter().rev().copied()
    }

    pub fn realize(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_multiplicity_sequence(self)
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ap(Γ, x) as a sorted list of members, tagged with x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    elements: Vec<i64>,
    with_respect_to: i64,
}

impl AperySet {
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn with_respect_to(&self) -> i64 {
        self.with_respect_to
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// D(m₁, …, m_k) as a sorted union of members, tagged with the targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSet {
    elements: Vec<i64>,
    targets: Vec<i64>,
}

impl DivisorSet {
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn targets(&self) -> &[i64] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Every Arf semigroup with conductor at most `max_conductor`, one
/// multiplicity sequence each, sorted by conductor then lexicographically.
///
/// The enumeration translates each discovered semigroup by every nonzero
/// member m with c + m ≤ max_conductor, starting from ℕ; translation
/// preserves the Arf property in both directions and every Arf semigroup
/// arises as a translation chain from ℕ, so this is exhaustive. Results
/// are deduplicated on the canonical small-element list.
pub fn enumerate_arf(max_conductor: i64) -> Vec<MultiplicitySequence> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack = vec![NumericalSemigroup::nat()];
    seen.insert(vec![0]);
    while let Some(s) = stack.pop() {
        let budget = max_conductor - s.conductor();
        for m in s.members_in(1, budget) {
            let t = s.translate(m).expect("member translation");
            if seen.insert(t.small_elements().to_vec()) {
                stack.push(t);
            }
        }
    }
    let mut out: Vec<(i64, Vec<i64>)> = seen
        .into_iter()
        .map(|small| (*small.last().unwrap(), small))
        .collect();
    out.sort();
    out.into_iter()
        .map(|(_, small)| {
            NumericalSemigroup::from_small_elements(small)
                .expect("enumerated semigroup is canonical")
                .multiplicity_sequence()
        })
        .collect()
}

/// Union of two sorted, duplicate-free lists.
pub(crate) fn merge_union(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(small: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_small_elements(small.to_vec()).unwrap()
    }

    fn seq(d: &[i64]) -> MultiplicitySequence {
        MultiplicitySequence::new(d.to_vec()).unwrap()
    }

    /// Independent Apéry oracle: scan the definition over a generous window.
    fn naive_apery(s: &NumericalSemigroup, x: i64) -> Vec<i64> {
        let hi = s.conductor() + x.abs() + 2 * s.conductor() + 8;
        s.members_in(0, hi)
            .into_iter()
            .filter(|&m| !s.contains(m - x))
            .collect()
    }

    /// Arf check with the looser cutoff ρ_i < c + ρ_k, i ranging over all
    /// members, validating the tightened small-elements-only scan.
    fn naive_is_arf(s: &NumericalSemigroup) -> bool {
        let c = s.conductor();
        let small = s.small_elements();
        for &rk in small {
            for &rj in small.iter().filter(|&&rj| rj >= rk) {
                for ri in s.members_in(rj, c + rk - 1) {
                    if !s.contains(ri + rj - rk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn generators_trivial_and_classic() {
        let nat = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(nat.small_elements(), &[0]);
        assert_eq!(nat.conductor(), 0);
        assert_eq!(nat.multiplicity(), 1);
        assert_eq!(nat.genus(), 0);

        let h = NumericalSemigroup::from_generators(&[2, 11]).unwrap();
        assert_eq!(h.small_elements(), &[0, 2, 4, 6, 8, 10]);
        assert_eq!(h.conductor(), 10);
        assert_eq!(h.genus(), 5);

        let a = NumericalSemigroup::from_generators(&[5, 7, 9, 11, 13]).unwrap();
        assert_eq!(a.small_elements(), &[0, 5, 7, 9, 11]);
        assert_eq!(a.conductor(), 11);
    }

    #[test]
    fn generators_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, -2]),
            Err(Error::NonPositiveGenerator(-2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::InfiniteComplement(2))
        );
    }

    #[test]
    fn multiplicity_sequence_roundtrips() {
        assert_eq!(seq(&[1]).realize().unwrap(), NumericalSemigroup::nat());
        let g = seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap();
        assert_eq!(g.small_elements(), &[0, 12, 24, 32, 36, 40]);
        assert_eq!(g.conductor(), 40);
        let a = seq(&[5, 2, 2, 1]).realize().unwrap();
        assert_eq!(a.small_elements(), &[0, 5, 7, 9, 11]);

        // the other direction
        assert_eq!(g.multiplicity_sequence(), seq(&[12, 12, 8, 4, 4, 1]));
        assert_eq!(
            NumericalSemigroup::nat().multiplicity_sequence(),
            seq(&[1])
        );
        let h = NumericalSemigroup::from_generators(&[2, 11]).unwrap();
        assert_eq!(h.multiplicity_sequence(), seq(&[2, 2, 2, 2, 2, 1]));
    }

    #[test]
    fn multiplicity_sequence_rejects_bad_input() {
        assert_eq!(
            MultiplicitySequence::new(vec![]),
            Err(Error::EmptySequence)
        );
        assert_eq!(
            MultiplicitySequence::new(vec![3, 2]),
            Err(Error::SequenceMustEndInOne(2))
        );
        assert_eq!(
            MultiplicitySequence::new(vec![0, 1]),
            Err(Error::NonPositiveDistance(0))
        );
        // 2 + 2 = 4 is missing from {0, 2, 5, ->}
        assert_eq!(
            seq(&[2, 3, 1]).realize(),
            Err(Error::NotClosed { a: 2, b: 2, sum: 4 })
        );
        // {0, 2, 3} is not canonical: 2 = c - 1 is a member
        assert_eq!(
            seq(&[2, 1, 1]).realize(),
            Err(Error::ConductorNotMinimal(2))
        );
    }

    #[test]
    fn membership() {
        let s = gamma(&[0, 4, 8]);
        assert!(!s.contains(5));
        assert!(!s.contains(-3));
        assert!(s.contains(0));
        assert!(s.contains(4));
        assert!(s.contains(97));
        let g = seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap();
        assert!(g.contains(36));
        assert!(!g.contains(35));
        assert!(NumericalSemigroup::nat().contains(0));
    }

    #[test]
    fn apery_examples() {
        let h = NumericalSemigroup::from_generators(&[2, 11]).unwrap();
        let ap1 = h.apery(1);
        assert_eq!(ap1.elements(), &[0, 2, 4, 6, 8, 10]);
        assert_eq!(ap1.len(), 6);

        assert!(gamma(&[0, 4, 8]).apery(0).is_empty());
        assert!(NumericalSemigroup::nat().apery(0).is_empty());

        // |Ap(Γ, d₃)| = 2 + d₃ = 10 for Γ = {0,12,24,32,36,40,->}, frozen
        // from the independent enumeration oracle.
        let g = seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap();
        let ap8 = g.apery(8);
        assert_eq!(ap8.elements(), naive_apery(&g, 8).as_slice());
        assert_eq!(ap8.len(), 10);
    }

    #[test]
    fn apery_matches_naive_oracle_for_all_small_shifts() {
        let corpus = [
            NumericalSemigroup::nat(),
            gamma(&[0, 4, 8]),
            NumericalSemigroup::from_generators(&[3, 5]).unwrap(),
            NumericalSemigroup::from_generators(&[2, 11]).unwrap(),
            seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap(),
        ];
        for s in &corpus {
            let c = s.conductor();
            for x in -c - 3..=c + 3 {
                assert_eq!(
                    s.apery(x).elements(),
                    naive_apery(s, x).as_slice(),
                    "Ap({s}, {x})"
                );
            }
        }
    }

    #[test]
    fn apery_cardinalities() {
        let corpus = [
            gamma(&[0, 4, 8]),
            NumericalSemigroup::from_generators(&[3, 5]).unwrap(),
            seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap(),
        ];
        for s in &corpus {
            // |Ap(Γ, x)| = x for members x ≥ 0
            for x in s.members_in(0, s.conductor() + 5) {
                assert_eq!(s.apery(x).len() as i64, x);
            }
            // |Ap(Γ, x)| = |Ap(Γ, −x)| + x for every integer
            for x in -s.conductor()..=s.conductor() {
                assert_eq!(
                    s.apery(x).len() as i64,
                    s.apery(-x).len() as i64 + x,
                    "x = {x} in {s}"
                );
            }
        }
    }

    #[test]
    fn divisor_examples() {
        let s = gamma(&[0, 4, 8]);
        let d = s.divisors(&[12]);
        assert_eq!(d.elements(), &[0, 4, 8, 12]);
        assert_eq!(s.divisor_count(&[12]), 4);

        // an irreducible element has exactly the two trivial divisors
        let a = NumericalSemigroup::from_generators(&[5, 7, 9, 11, 13]).unwrap();
        assert_eq!(a.divisors(&[7]).len(), 2);

        // ordinary semigroup, the two targets of the c+e window
        let o = gamma(&[0, 5]);
        let (c, e) = (o.conductor(), o.multiplicity());
        let d2 = o.divisors(&[c + e - 1, c + e]);
        assert_eq!(d2.elements(), &[0, e, c + e - 1, c + e]);

        // non-member targets contribute the empty set
        assert!(s.divisors(&[5]).is_empty());
        assert_eq!(s.divisors(&[5, 12]).len(), 4);
    }

    #[test]
    fn divisor_lattice_properties() {
        let s = NumericalSemigroup::from_generators(&[5, 7, 9, 11, 13]).unwrap();
        let members = s.members_in(0, 2 * s.conductor());
        for &m in &members {
            assert!(!s.divisors(&[m]).is_empty());
            let is_gen = s.minimal_generators().contains(&m);
            assert_eq!(s.divisors(&[m]).len() == 2, is_gen, "m = {m}");
        }
        // D(m) ⊆ D(m') iff m ∈ D(m')
        for &m in &members {
            for &m2 in members.iter().filter(|&&m2| m2 >= m) {
                let dm = s.divisors(&[m]);
                let dm2 = s.divisors(&[m2]);
                let contained = dm.elements().iter().all(|x| dm2.elements().contains(x));
                assert_eq!(contained, dm2.elements().contains(&m));
            }
        }
    }

    #[test]
    fn divisor_count_merge_and_bitset_agree() {
        // force the bitset path with a translated semigroup beyond 2^14
        let big = NumericalSemigroup::nat()
            .translate(BITSET_THRESHOLD + 9)
            .unwrap();
        let t = big.conductor() + 3;
        assert_eq!(
            big.divisor_count(&[t, t + 1]),
            big.divisors(&[t, t + 1]).len()
        );
        let small = gamma(&[0, 4, 8]);
        assert_eq!(small.divisor_count(&[12, 13]), small.divisors(&[12, 13]).len());
    }

    #[test]
    fn translation_examples() {
        let n4 = NumericalSemigroup::nat().translate(4).unwrap();
        assert_eq!(n4.small_elements(), &[0, 4]);
        assert_eq!(n4.conductor(), 4);
        assert_eq!(n4.multiplicity(), 4);
        assert_eq!(n4.genus(), 3);

        let g2 = n4.translate(4).unwrap();
        assert_eq!(g2.small_elements(), &[0, 4, 8]);
        assert_eq!(g2.conductor(), 8);

        let g3 = gamma(&[0, 8, 12, 16]);
        let g4 = g3.translate(12).unwrap();
        assert_eq!(g4.small_elements(), &[0, 12, 20, 24, 28]);
        assert_eq!(g4.genus(), g3.genus() + 12 - 1);

        assert_eq!(NumericalSemigroup::nat().translate(1).unwrap(), NumericalSemigroup::nat());
        assert_eq!(g3.translate(9), Err(Error::NotAMember(9)));
        assert_eq!(g3.translate(0), Err(Error::NonPositiveTranslation(0)));
    }

    #[test]
    fn translation_prepends_to_multiplicity_sequence() {
        let s = gamma(&[0, 4, 8]);
        let t = s.translate(8).unwrap();
        assert_eq!(t.multiplicity_sequence(), seq(&[8, 4, 4, 1]));
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(NumericalSemigroup::nat().minimal_generators(), vec![1]);
        let o = gamma(&[0, 6]);
        assert_eq!(o.minimal_generators(), vec![6, 7, 8, 9, 10, 11]);
        let h = NumericalSemigroup::from_generators(&[2, 11]).unwrap();
        assert_eq!(h.minimal_generators(), vec![2, 11]);
        // Arf semigroups have maximal embedding dimension, and the minimal
        // system is {e} ∪ Ap(Γ, e)*
        let g = seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap();
        let gens = g.minimal_generators();
        assert_eq!(gens.len() as i64, g.multiplicity());
        let mut expect: Vec<i64> = g.apery(g.multiplicity()).elements()[1..].to_vec();
        expect.push(g.multiplicity());
        expect.sort();
        assert_eq!(gens, expect);
    }

    #[test]
    fn arf_detection() {
        assert!(NumericalSemigroup::nat().is_arf());
        assert!(seq(&[12, 12, 8, 4, 4, 1]).realize().unwrap().is_arf());
        // 5 + 5 − 3 = 7 ∉ <3,5>
        let s = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(s.small_elements(), &[0, 3, 5, 6, 8]);
        assert!(!s.is_arf());
        assert!(!NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap().is_arf());
    }

    #[test]
    fn arf_scan_matches_naive_bound() {
        for d in enumerate_arf(14) {
            assert!(naive_is_arf(&d.realize().unwrap()));
        }
        for s in [
            NumericalSemigroup::from_generators(&[3, 5]).unwrap(),
            NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap(),
            NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap(),
        ] {
            assert_eq!(s.is_arf(), naive_is_arf(&s), "{s}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let seqs = enumerate_arf(0);
        assert_eq!(seqs, vec![seq(&[1])]);

        let seqs = enumerate_arf(2);
        assert_eq!(seqs, vec![seq(&[1]), seq(&[2, 1])]);

        let seqs = enumerate_arf(4);
        let smalls: Vec<Vec<i64>> = seqs
            .iter()
            .map(|d| d.realize().unwrap().small_elements().to_vec())
            .collect();
        let expect: Vec<Vec<i64>> = vec![
            vec![0],
            vec![0, 2],
            vec![0, 3],
            vec![0, 4],
            vec![0, 2, 4],
        ];
        assert_eq!(smalls, expect);
    }

    /// Brute force every additively closed subset with conductor ≤ max_c
    /// and keep the Arf ones; the translation-based enumeration must agree.
    fn brute_force_arf(max_c: i64) -> BTreeSet<Vec<i64>> {
        let b = max_c as usize;
        let mut found = BTreeSet::new();
        for mask in 0u64..(1 << b.saturating_sub(1).min(63)) {
            // bit t says t+1 is a member (for t+1 in [1, max_c-1])
            let member = |x: i64| -> bool {
                if x == 0 || x >= max_c {
                    x >= 0
                } else {
                    mask >> (x - 1) & 1 == 1
                }
            };
            let closure_ok = (1..max_c)
                .filter(|&a| member(a))
                .all(|a| (a..max_c).filter(|&b2| member(b2)).all(|b2| member(a + b2)));
            if !closure_ok {
                continue;
            }
            let mut c = max_c;
            while c > 0 && member(c - 1) {
                c -= 1;
            }
            let small: Vec<i64> = (0..=c).filter(|&x| member(x)).collect();
            let s = NumericalSemigroup::from_small_elements(small.clone())
                .expect("brute-forced set is a semigroup");
            if s.is_arf() {
                found.insert(small);
            }
        }
        found
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for max_c in [6, 10, 12] {
            let brute = brute_force_arf(max_c);
            let enumerated: BTreeSet<Vec<i64>> = enumerate_arf(max_c)
                .into_iter()
                .map(|d| d.realize().unwrap().small_elements().to_vec())
                .collect();
            assert_eq!(enumerated, brute, "conductor bound {max_c}");
        }
    }

    #[test]
    fn enumeration_outputs_are_arf_and_nonincreasing() {
        for d in enumerate_arf(16) {
            let s = d.realize().unwrap();
            assert!(s.is_arf(), "{s}");
            assert!(d.distances().windows(2).all(|w| w[0] >= w[1]), "{d}");
            assert!(d.distances()[..d.order() - 1].iter().all(|&x| x >= 2));
            // round trip through the canonical form
            assert_eq!(s.multiplicity_sequence(), d);
        }
    }
}
