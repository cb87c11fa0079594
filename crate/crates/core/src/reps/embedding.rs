//! Torus-restriction embeddings `H ⊂ G`: an integer matrix sending
//! target-torus weights to source-torus weights, plus the two built-in
//! block-diagonal families inside `SU(4n+2)` and the identity/trivial maps.

use alloc::string::String;
use alloc::vec::Vec;

use super::group::{Factor, Group};
use super::irrep::WeightTable;
use crate::character::FormalCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::weight::Weight;

/// An embedding of compact groups realized on torus weights.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Group,
    target: Group,
    /// `source.rank() × target.rank()` integer matrix.
    map: Vec<Vec<i64>>,
}

impl Embedding {
    /// Build from an explicit matrix. The matrix must send the center
    /// direction `(1,...,1)` of every `SU` factor of the target into the
    /// span of `SU`-center directions of the source, otherwise restriction
    /// would depend on the choice of weight representative.
    pub fn new(source: Group, target: Group, map: Vec<Vec<i64>>) -> Result<Self> {
        if map.len() != source.rank() || map.iter().any(|row| row.len() != target.rank()) {
            return Err(Error::BadEmbedding(String::from("matrix shape mismatch")));
        }
        let e = Embedding {
            source,
            target,
            map,
        };
        for (f, offset) in e.target.factors().iter().zip(e.target.offsets()) {
            if !matches!(f, Factor::SpecialUnitary(_)) {
                continue;
            }
            let mut center = alloc::vec![0i64; e.target.rank()];
            for c in center.iter_mut().skip(offset).take(f.rank()) {
                *c = 1;
            }
            let image = e.apply_ints(&center);
            for (sf, soffset) in e.source.factors().iter().zip(e.source.offsets()) {
                let block = &image[soffset..soffset + sf.rank()];
                let constant = block.windows(2).all(|w| w[0] == w[1]);
                let su_block = matches!(sf, Factor::SpecialUnitary(_));
                if !(constant && (su_block || block.iter().all(|&c| c == 0))) {
                    return Err(Error::BadEmbedding(String::from(
                        "matrix does not respect the target center",
                    )));
                }
            }
        }
        Ok(e)
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.map
    }

    fn apply_ints(&self, coords: &[i64]) -> Vec<i64> {
        self.map
            .iter()
            .map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Push a target-torus weight to the source torus.
    pub fn apply(&self, w: &Weight) -> Weight {
        let out: Vec<i64> = self
            .map
            .iter()
            .map(|row| row.iter().zip(w.doubled()).map(|(a, b)| a * b).sum())
            .collect();
        Weight::from_doubled(out)
    }

    /// Restrict a weight-multiplicity table to the source torus, summing
    /// multiplicities of coincident images.
    pub fn restrict_table(&self, table: &WeightTable) -> Result<FormalCharacter> {
        if table.group() != &self.target {
            return Err(Error::GroupMismatch);
        }
        let mut out = FormalCharacter::zero(self.source.rank());
        for (w, &m) in table.multiplicities() {
            out.add_term(self.apply(w), Rational::from_int(m as i64));
        }
        Ok(out)
    }
}

/// The identity embedding `G ⊆ G`.
pub fn identity_embedding(group: &Group) -> Embedding {
    let rank = group.rank();
    let map: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    Embedding::new(group.clone(), group.clone(), map).expect("identity is well defined")
}

/// The trivial subgroup `1 ⊆ G`.
pub fn trivial_subgroup(group: &Group) -> Embedding {
    Embedding::new(Group::trivial(), group.clone(), Vec::new())
        .expect("empty matrix is well defined")
}

/// `U(2n+1)` embedded in `SU(4n+2)` as the pairs `(A, Ā)`.
///
/// With torus `diag(s_1,...,s_{2n+1}, s̄_1,...,s̄_{2n+1})`, a target weight
/// `(a_1,...,a_{4n+2})` restricts to `(a_i - a_{2n+1+i})_i`.
pub fn conjugate_unitary_pair(n: usize) -> Result<Embedding> {
    let m = 2 * n + 1;
    let target = Group::special_unitary(4 * n + 2);
    let source = Group::new(alloc::vec![Factor::Unitary(m)]);
    let mut map = alloc::vec![alloc::vec![0i64; 4 * n + 2]; m];
    for i in 0..m {
        map[i][i] = 1;
        map[i][m + i] = -1;
    }
    let e = Embedding::new(source, target, map)?;
    validate_defining_restriction(&e, expected_conjugate_pair(m))?;
    Ok(e)
}

/// `Sp(n) × SO(2n+2)` embedded block-diagonally in `SU(4n+2)`.
///
/// The symplectic block uses the torus `diag(u_1,...,u_n,ū_n,...,ū_1)`, the
/// orthogonal block the rotation-block torus `g_1,...,g_{n+1}`.
pub fn symplectic_orthogonal_pair(n: usize) -> Result<Embedding> {
    let target = Group::special_unitary(4 * n + 2);
    let source = Group::new(alloc::vec![
        Factor::Symplectic(n),
        Factor::OrthogonalEven(n + 1)
    ]);
    let mut map = alloc::vec![alloc::vec![0i64; 4 * n + 2]; 2 * n + 1];
    for i in 0..n {
        map[i][i] = 1; // e_i -> f_i
        map[n - 1 - i][n + i] = -1; // e_{n+i} -> -f_{n+1-i}
    }
    for j in 0..n + 1 {
        map[n + j][2 * n + 2 * j] = 1; // e_{2n+2j-1} -> g_j
        map[n + j][2 * n + 2 * j + 1] = -1; // e_{2n+2j} -> -g_j
    }
    let e = Embedding::new(source, target, map)?;
    validate_defining_restriction(&e, expected_symplectic_orthogonal(n))?;
    Ok(e)
}

/// Weights of `std ⊕ dual-std` of `U(m)`.
fn expected_conjugate_pair(m: usize) -> FormalCharacter {
    let mut ch = FormalCharacter::zero(m);
    for i in 0..m {
        let mut v = alloc::vec![0i64; m];
        v[i] = 1;
        ch.add_term(Weight::from_ints(&v), Rational::one());
        v[i] = -1;
        ch.add_term(Weight::from_ints(&v), Rational::one());
    }
    ch
}

/// Weights of `(std_Sp ⊗ 1) ⊕ (1 ⊗ std_SO)` on the rank `2n+1` torus.
fn expected_symplectic_orthogonal(n: usize) -> FormalCharacter {
    let rank = 2 * n + 1;
    let mut ch = FormalCharacter::zero(rank);
    for i in 0..rank {
        let mut v = alloc::vec![0i64; rank];
        v[i] = 1;
        ch.add_term(Weight::from_ints(&v), Rational::one());
        v[i] = -1;
        ch.add_term(Weight::from_ints(&v), Rational::one());
    }
    ch
}

/// Check that the defining representation of the target restricts to the
/// expected block decomposition; run at construction of the built-in
/// families so convention bugs surface immediately.
fn validate_defining_restriction(e: &Embedding, expected: FormalCharacter) -> Result<()> {
    let std = standard_weight(e.target())?;
    let table = super::irrep::weight_multiplicities(e.target(), &std)?;
    let restricted = e.restrict_table(&table)?;
    if restricted != expected {
        return Err(Error::BadEmbedding(String::from(
            "defining representation does not restrict to the expected blocks",
        )));
    }
    Ok(())
}

fn standard_weight(g: &Group) -> Result<super::group::HighestWeight> {
    let [Factor::SpecialUnitary(n)] = g.factors() else {
        return Err(Error::GroupMismatch);
    };
    let mut coords = alloc::vec![0i64; *n];
    coords[0] = 1;
    g.highest_weight(&[&coords])
}

/// The restriction of an irreducible character of the target, as required
/// by branching computations.
pub fn restrict_character(e: &Embedding, table: &WeightTable) -> Result<FormalCharacter> {
    e.restrict_table(table)
}
