//! The Weyl groups acting on `Z^n`: the symmetric group, the full
//! hyperoctahedral group, its even-sign subgroup, and the trivial group.
//!
//! Elements are never stored as a full list; [`WeylGroup::elements`] streams
//! signed permutations (lexicographic permutation order, sign masks in
//! binary order), so operations scale to `2^n·n!` without holding the group
//! in memory.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::SignedPermutation;
use crate::weight::Weight;

/// Which subgroup of the full signed-permutation group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylKind {
    /// Only the identity.
    Trivial,
    /// Permutations without sign changes (`S_n`, type `A`).
    Symmetric,
    /// Permutations with an even number of sign changes (type `D`).
    EvenSigned,
    /// All signed permutations (types `B`, `C`, `BC`).
    Hyperoctahedral,
}

/// A Weyl group of signed permutations of fixed rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylGroup {
    kind: WeylKind,
    rank: usize,
}

impl WeylGroup {
    pub fn new(kind: WeylKind, rank: usize) -> Self {
        WeylGroup { kind, rank }
    }

    pub fn trivial(rank: usize) -> Self {
        WeylGroup::new(WeylKind::Trivial, rank)
    }

    pub fn symmetric(rank: usize) -> Self {
        WeylGroup::new(WeylKind::Symmetric, rank)
    }

    pub fn even_signed(rank: usize) -> Self {
        WeylGroup::new(WeylKind::EvenSigned, rank)
    }

    pub fn hyperoctahedral(rank: usize) -> Self {
        WeylGroup::new(WeylKind::Hyperoctahedral, rank)
    }

    pub fn kind(&self) -> WeylKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Group order: `1`, `n!`, `2^(n-1)·n!` or `2^n·n!`.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.rank as u128).product();
        match self.kind {
            WeylKind::Trivial => 1,
            WeylKind::Symmetric => fact,
            WeylKind::EvenSigned => {
                if self.rank == 0 {
                    1
                } else {
                    (1u128 << (self.rank - 1)) * fact
                }
            }
            WeylKind::Hyperoctahedral => (1u128 << self.rank) * fact,
        }
    }

    /// Containment by kind: trivial ⊆ S_n ⊆ even-signed ⊆ hyperoctahedral.
    pub fn contains(&self, other: &WeylGroup) -> bool {
        self.rank == other.rank && self.kind >= other.kind
    }

    /// Stream all elements.
    pub fn elements(&self) -> impl Iterator<Item = SignedPermutation> + '_ {
        Elements::new(*self)
    }

    /// The canonical orbit representative of a weight:
    /// coordinates sorted non-increasingly, absolute values taken where the
    /// group flips signs. For the even-sign group an odd number of flips is
    /// recorded on the last (smallest) coordinate, unless some coordinate is
    /// zero, in which case the parity is absorbable.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let mut v: Vec<i64> = w.doubled().to_vec();
        match self.kind {
            WeylKind::Trivial => {}
            WeylKind::Symmetric => {
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            WeylKind::Hyperoctahedral => {
                for c in v.iter_mut() {
                    *c = c.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            WeylKind::EvenSigned => {
                let negatives = v.iter().filter(|&&c| c < 0).count();
                let has_zero = v.contains(&0);
                for c in v.iter_mut() {
                    *c = c.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
                if negatives % 2 == 1 && !has_zero {
                    if let Some(last) = v.last_mut() {
                        *last = -*last;
                    }
                }
            }
        }
        Weight::from_doubled(v)
    }

    /// The orbit `{wλ : w ∈ W}`, generated directly from the canonical
    /// representative (distinct multiset permutations times admissible sign
    /// masks) rather than by running over all group elements.
    pub fn orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        assert_eq!(self.rank, w.rank(), "rank mismatch");
        let mut out = BTreeSet::new();
        match self.kind {
            WeylKind::Trivial => {
                out.insert(w.clone());
            }
            WeylKind::Symmetric => {
                let mut v = w.doubled().to_vec();
                v.sort_unstable();
                loop {
                    out.insert(Weight::from_doubled(v.clone()));
                    if !next_permutation(&mut v) {
                        break;
                    }
                }
            }
            WeylKind::Hyperoctahedral | WeylKind::EvenSigned => {
                let even_only = self.kind == WeylKind::EvenSigned;
                let negatives = w.doubled().iter().filter(|&&c| c < 0).count();
                let has_zero = w.doubled().contains(&0);
                let parity = negatives % 2;
                let mut v: Vec<i64> = w.doubled().iter().map(|c| c.abs()).collect();
                v.sort_unstable();
                loop {
                    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
                    for mask in 0u32..(1 << nonzero.len()) {
                        if even_only && !has_zero && mask.count_ones() as usize % 2 != parity {
                            continue;
                        }
                        let mut cand = v.clone();
                        for (bit, &i) in nonzero.iter().enumerate() {
                            if mask & (1 << bit) != 0 {
                                cand[i] = -cand[i];
                            }
                        }
                        out.insert(Weight::from_doubled(cand));
                    }
                    if !next_permutation(&mut v) {
                        break;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            WeylKind::Trivial => "1",
            WeylKind::Symmetric => "S",
            WeylKind::EvenSigned => "W_D",
            WeylKind::Hyperoctahedral => "W",
        };
        write!(f, "{}_{}", name, self.rank)
    }
}

/// Advance `v` to its next lexicographic permutation; `false` at the end.
pub(crate) fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

struct Elements {
    group: WeylGroup,
    perm: Option<Vec<usize>>,
    mask: u64,
}

impl Elements {
    fn new(group: WeylGroup) -> Self {
        Elements {
            group,
            perm: Some((0..group.rank()).collect()),
            mask: 0,
        }
    }

    fn mask_limit(&self) -> u64 {
        match self.group.kind {
            WeylKind::Trivial | WeylKind::Symmetric => 1,
            WeylKind::EvenSigned | WeylKind::Hyperoctahedral => 1 << self.group.rank(),
        }
    }

    fn mask_admissible(&self, mask: u64) -> bool {
        match self.group.kind {
            WeylKind::EvenSigned => mask.count_ones().is_multiple_of(2),
            _ => true,
        }
    }
}

impl Iterator for Elements {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let limit = self.mask_limit();
        loop {
            self.perm.as_ref()?;
            if self.mask >= limit {
                self.mask = 0;
                if self.group.kind == WeylKind::Trivial {
                    self.perm = None;
                    return None;
                }
                let perm = self.perm.as_mut().expect("checked above");
                let mut p: Vec<i64> = perm.iter().map(|&x| x as i64).collect();
                if !next_permutation(&mut p) {
                    self.perm = None;
                    return None;
                }
                *perm = p.into_iter().map(|x| x as usize).collect();
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            if !self.mask_admissible(mask) {
                continue;
            }
            let rank = self.group.rank();
            let flip: Vec<bool> = (0..rank).map(|i| mask & (1 << i) != 0).collect();
            let perm = self.perm.as_ref().expect("checked above");
            return Some(SignedPermutation::new(perm.clone(), flip));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn element_counts() {
        for rank in 1..=4 {
            for kind in [
                WeylKind::Trivial,
                WeylKind::Symmetric,
                WeylKind::EvenSigned,
                WeylKind::Hyperoctahedral,
            ] {
                let g = WeylGroup::new(kind, rank);
                assert_eq!(g.elements().count() as u128, g.order(), "{g:?}");
            }
        }
    }

    #[test]
    fn elements_are_distinct_and_closed() {
        let g = WeylGroup::even_signed(3);
        let all: Vec<_> = g.elements().collect();
        let set: BTreeSet<_> = all
            .iter()
            .map(|w| (w.perm().to_vec(), w.flips().to_vec()))
            .collect();
        assert_eq!(set.len() as u128, g.order());
        // closure under composition and inverse
        for a in all.iter().take(6) {
            assert!(set.contains(&(a.inverse().perm().to_vec(), a.inverse().flips().to_vec())));
            for b in all.iter().take(6) {
                let c = a.compose(b);
                assert!(set.contains(&(c.perm().to_vec(), c.flips().to_vec())));
            }
        }
    }

    #[test]
    fn orbit_matches_enumeration() {
        let cases = [
            (WeylGroup::hyperoctahedral(2), Weight::from_ints(&[2, 1])),
            (WeylGroup::hyperoctahedral(3), Weight::from_ints(&[1, 1, 0])),
            (WeylGroup::even_signed(2), Weight::from_ints(&[1, 1])),
            (WeylGroup::even_signed(3), Weight::from_ints(&[2, 1, 0])),
            (WeylGroup::symmetric(3), Weight::from_ints(&[1, 0, -1])),
            (WeylGroup::trivial(2), Weight::from_ints(&[1, 0])),
        ];
        for (g, lam) in cases {
            let brute: BTreeSet<Weight> = g.elements().map(|w| w.apply(&lam)).collect();
            assert_eq!(g.orbit(&lam), brute, "{g:?} {lam}");
        }
    }

    #[test]
    fn orbit_examples() {
        // fixed point of every signed permutation
        let g = WeylGroup::hyperoctahedral(2);
        assert_eq!(g.orbit(&Weight::zero(2)).len(), 1);
        // transposition orbit
        let s = WeylGroup::symmetric(2);
        let orb = s.orbit(&Weight::from_ints(&[1, 0]));
        assert_eq!(
            orb,
            BTreeSet::from([Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])])
        );
        // all eight signed permutations of rank 2 act freely on (2,1)
        assert_eq!(g.orbit(&Weight::from_ints(&[2, 1])).len(), 8);
    }

    #[test]
    fn dominant_rep_lies_in_orbit() {
        let cases = [
            (
                WeylGroup::hyperoctahedral(3),
                Weight::from_ints(&[-2, 1, 0]),
            ),
            (WeylGroup::even_signed(3), Weight::from_ints(&[-2, 1, 3])),
            (WeylGroup::even_signed(2), Weight::from_ints(&[-1, -2])),
            (WeylGroup::symmetric(3), Weight::from_ints(&[0, 2, -1])),
        ];
        for (g, lam) in cases {
            let rep = g.dominant_rep(&lam);
            let orbit = g.orbit(&lam);
            assert!(orbit.contains(&rep), "{g:?} {lam} rep {rep}");
            // representative is canonical: same for every orbit member
            for member in &orbit {
                assert_eq!(g.dominant_rep(member), rep);
            }
        }
    }

    #[test]
    fn even_signed_splits_sign_classes() {
        let g = WeylGroup::even_signed(2);
        let plus = g.orbit(&Weight::from_ints(&[2, 1]));
        let minus = g.orbit(&Weight::from_ints(&[2, -1]));
        assert_eq!(plus.len(), 4);
        assert_eq!(minus.len(), 4);
        assert!(plus.is_disjoint(&minus));
        assert_eq!(
            g.dominant_rep(&Weight::from_ints(&[-2, 1])),
            Weight::from_ints(&[2, -1])
        );
    }

    #[test]
    fn next_permutation_visits_all() {
        let mut v = vec![1, 2, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 12); // 4!/2! distinct multiset permutations
    }
}
