//! Signed permutations: elements of the hyperoctahedral group `{±1}^n ⋊ S_n`.

use alloc::vec::Vec;
use core::fmt;

use crate::weight::Weight;

/// A signed permutation acting on `Z^n` by
/// `(w·λ)_i = sign_i · λ_{perm⁻¹(i)}`.
///
/// `perm[j]` is the image position of slot `j`; `flip[i]` negates the value
/// landing at position `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flip: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        SignedPermutation {
            perm: (0..rank).collect(),
            flip: alloc::vec![false; rank],
        }
    }

    /// Build from a permutation (as images) and a flip mask. Panics if
    /// `perm` is not a bijection of `0..rank` or lengths differ.
    pub fn new(perm: Vec<usize>, flip: Vec<bool>) -> Self {
        assert_eq!(perm.len(), flip.len());
        let mut seen = alloc::vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        SignedPermutation { perm, flip }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    /// Apply to a weight: position `j` is sent to `perm[j]`, with the sign
    /// attached to the target position.
    pub fn apply(&self, w: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), w.rank());
        let mut out = alloc::vec![0i64; w.rank()];
        for (j, &c) in w.doubled().iter().enumerate() {
            let i = self.perm[j];
            out[i] = if self.flip[i] { -c } else { c };
        }
        Weight::from_doubled(out)
    }

    /// `sgn(w)`: permutation parity times `(-1)` per flipped coordinate.
    pub fn sign(&self) -> i64 {
        let mut sgn = permutation_sign(&self.perm);
        for &f in &self.flip {
            if f {
                sgn = -sgn;
            }
        }
        sgn
    }

    /// Group composition: `(a.compose(b)).apply(w) == a.apply(&b.apply(w))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.rank(), other.rank());
        let n = self.rank();
        let mut perm = alloc::vec![0usize; n];
        let mut flip = alloc::vec![false; n];
        for j in 0..n {
            let i = self.perm[other.perm[j]];
            perm[j] = i;
            flip[i] = self.flip[i] ^ other.flip[other.perm[j]];
        }
        SignedPermutation { perm, flip }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = alloc::vec![0usize; n];
        let mut flip = alloc::vec![false; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            flip[j] = self.flip[self.perm[j]];
        }
        SignedPermutation { perm, flip }
    }
}

/// Parity of a permutation given as images, by counting inversions.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.rank() {
            if j > 0 {
                write!(f, " ")?;
            }
            let i = self.perm[j];
            write!(f, "{}{}", if self.flip[i] { "-" } else { "+" }, i)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn apply_matches_definition() {
        // perm sends 0->1, 1->0; flip at position 0.
        let w = SignedPermutation::new(vec![1, 0], vec![true, false]);
        let lam = Weight::from_ints(&[2, 3]);
        // (w·λ)_0 = -λ_{perm⁻¹(0)} = -λ_1 = -3; (w·λ)_1 = λ_0 = 2.
        assert_eq!(w.apply(&lam), Weight::from_ints(&[-3, 2]));
    }

    #[test]
    fn sign_is_multiplicative() {
        let a = SignedPermutation::new(vec![1, 2, 0], vec![true, false, false]);
        let b = SignedPermutation::new(vec![0, 2, 1], vec![false, true, true]);
        assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        let lam = Weight::from_ints(&[5, -1, 2]);
        assert_eq!(a.compose(&b).apply(&lam), a.apply(&b.apply(&lam)));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let a = SignedPermutation::new(vec![2, 0, 1], vec![false, true, true]);
        assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity(3));
        assert_eq!(a.inverse().compose(&a), SignedPermutation::identity(3));
    }
}
