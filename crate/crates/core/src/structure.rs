//! Cross effects, weight decompositions and the two routes to the degree of a functor.
//!
//! A weight-`s` functor value `F(ℤⁿ)` splits as a direct sum of weight spaces
//! `F(ℤⁿ)_λ`, `λ ∈ Λ(n, s)`, cut out by the idempotents `e_λ` of the diagonal
//! subalgebra of the Schur algebra. For `n ≥ s` the Eilenberg–Mac Lane degree of
//! `F` equals the largest length (number of nonzero entries) of a weight `λ` with
//! `F(ℤⁿ)_λ ≠ 0`. For free-valued functors the degree is also read off from the
//! ranks of cross effects by inclusion–exclusion; both routes are implemented.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::divpow::MultiIndex;
use crate::error::{Error, Result};
use crate::functors::{eval_dim, ClassicalFunctor, PresentedFunctorValue};
use crate::padic::{binomial, Prime};
use crate::zlinalg::{ab_structure, AbGroup, FPGroup, SparseMatrix};

/// Degree of a functor; the zero functor has degree `−∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::NegInfinity => write!(f, "-inf"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(d) => serializer.serialize_u64(*d as u64),
            Degree::NegInfinity => serializer.serialize_str("-inf"),
        }
    }
}

/// A weight `λ ∈ Λ(n, s)` together with its length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightLabel {
    weight: MultiIndex,
    length: usize,
}

impl WeightLabel {
    pub fn new(weight: MultiIndex) -> Self {
        let length = weight.support_len();
        WeightLabel { weight, length }
    }

    pub fn weight(&self) -> &MultiIndex {
        &self.weight
    }

    pub fn length(&self) -> usize {
        self.length
    }
}

/// Nonzero weight spaces of a functor value, sorted by weight in the monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    n: usize,
    s: usize,
    blocks: Vec<(WeightLabel, AbGroup)>,
}

#[derive(Serialize)]
struct BlockJson<'a> {
    weight: &'a MultiIndex,
    length: usize,
    group: &'a AbGroup,
}

impl Serialize for WeightDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.blocks.iter().map(|(l, g)| BlockJson { weight: &l.weight, length: l.length, group: g }),
        )
    }
}

impl WeightDecomposition {
    fn from_blocks(n: usize, s: usize, blocks: impl IntoIterator<Item = (MultiIndex, AbGroup)>) -> Self {
        let mut blocks: Vec<(WeightLabel, AbGroup)> = blocks
            .into_iter()
            .filter(|(_, g)| !g.is_trivial())
            .map(|(w, g)| (WeightLabel::new(w), g))
            .collect();
        blocks.sort_by(|a, b| a.0.weight.cmp(&b.0.weight));
        WeightDecomposition { n, s, blocks }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.s
    }

    pub fn blocks(&self) -> &[(WeightLabel, AbGroup)] {
        &self.blocks
    }

    pub fn block(&self, weight: &MultiIndex) -> Option<&AbGroup> {
        self.blocks.iter().find(|(l, _)| &l.weight == weight).map(|(_, g)| g)
    }

    /// The direct sum of all weight spaces.
    pub fn total(&self) -> AbGroup {
        self.blocks.iter().fold(AbGroup::trivial(), |acc, (_, g)| acc.direct_sum(g))
    }

    /// Largest length of a weight with a nonzero block.
    pub fn max_length(&self) -> Degree {
        self.blocks.iter().map(|(l, _)| Degree::Finite(l.length)).max().unwrap_or(Degree::NegInfinity)
    }

    /// Largest length of a weight whose block has a nonzero `p`-primary part.
    pub fn p_primary_max_length(&self, p: Prime) -> Degree {
        self.blocks
            .iter()
            .filter(|(_, g)| !g.p_primary(p).invariant_factors().is_empty())
            .map(|(l, _)| Degree::Finite(l.length))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// The `p`-primary part of the whole value.
    pub fn p_primary_total(&self, p: Prime) -> AbGroup {
        let torsion = AbGroup::from_orders(0, self.total().invariant_factors().iter().cloned());
        torsion.p_primary(p)
    }
}

/// Split a presentation by weight and compute the structure of every block.
pub fn weight_decomposition(v: &PresentedFunctorValue) -> Result<WeightDecomposition> {
    let labels = v.weight_labels();
    let mut generators: BTreeMap<&MultiIndex, Vec<usize>> = BTreeMap::new();
    for (i, w) in labels.iter().enumerate() {
        generators.entry(w).or_default().push(i);
    }
    let mut columns: BTreeMap<&MultiIndex, Vec<&[(usize, BigInt)]>> = BTreeMap::new();
    for (j, col) in v.presentation().relations().columns().iter().enumerate() {
        let Some((first, _)) = col.first() else {
            continue;
        };
        let w = &labels[*first];
        if let Some((bad, _)) = col.iter().find(|(i, _)| &labels[*i] != w) {
            return Err(Error::Integrity(format!("relation {j} mixes weights {w} and {}", labels[*bad])));
        }
        columns.entry(w).or_default().push(col);
    }

    let blocks: Vec<(MultiIndex, AbGroup)> = generators
        .par_iter()
        .map(|(w, gens)| {
            let local: BTreeMap<usize, usize> = gens.iter().enumerate().map(|(k, &i)| (i, k)).collect();
            let mut rel = SparseMatrix::new(gens.len());
            for col in columns.get(w).map(Vec::as_slice).unwrap_or_default() {
                rel.push_column(col.iter().map(|(i, x)| (local[i], x.clone())))
                    .expect("rows lie in the block");
            }
            let g = FPGroup::new(gens.len(), rel).expect("row count matches");
            ((*w).clone(), ab_structure(&g))
        })
        .collect();
    Ok(WeightDecomposition::from_blocks(v.rank(), v.weight(), blocks))
}

/// Weight decomposition through the rank-one fast path: each weight space of
/// `Γ^s(ℤⁿ)` is spanned by a single monomial, so its quotient is `ℤ/g` with `g` the
/// gcd of the relation coefficients landing on that monomial.
pub fn blockwise_gcd_decomposition(v: &PresentedFunctorValue) -> Result<WeightDecomposition> {
    let labels = v.weight_labels();
    let mut gcds = vec![BigInt::zero(); labels.len()];
    for (j, col) in v.presentation().relations().columns().iter().enumerate() {
        match col.as_slice() {
            [] => {}
            [(i, x)] => gcds[*i] = gcds[*i].gcd(x),
            _ => {
                return Err(Error::Integrity(format!(
                    "relation {j} touches {} monomials; weight blocks of Γ^s have rank one",
                    col.len()
                )))
            }
        }
    }
    let blocks = labels.iter().cloned().zip(gcds).map(|(w, g)| (w, AbGroup::from_orders(0, [g.abs().into_parts().1])));
    Ok(WeightDecomposition::from_blocks(v.rank(), v.weight(), blocks))
}

/// Weight decomposition of a free classical value: each block is free of rank
/// equal to the multiplicity of its weight.
pub fn classical_weight_decomposition(f: &ClassicalFunctor, n: usize) -> Result<WeightDecomposition> {
    let mut counts: BTreeMap<MultiIndex, usize> = BTreeMap::new();
    for w in f.basis_weights(n)? {
        *counts.entry(w).or_default() += 1;
    }
    Ok(WeightDecomposition::from_blocks(n, f.weight(), counts.into_iter().map(|(w, c)| (w, AbGroup::free(c)))))
}

fn check_rank_covers_weight(v: &PresentedFunctorValue) -> Result<()> {
    if v.rank() < v.weight() {
        return Err(Error::RankBelowWeight { rank: v.rank(), weight: v.weight() });
    }
    Ok(())
}

/// Degree as the maximal length of a weight with a nonzero weight space.
pub fn degree_via_weights(v: &PresentedFunctorValue) -> Result<Degree> {
    check_rank_covers_weight(v)?;
    Ok(weight_decomposition(v)?.max_length())
}

/// Degree of the `p`-primary part of the functor.
pub fn p_primary_degree(v: &PresentedFunctorValue, p: Prime) -> Result<Degree> {
    check_rank_covers_weight(v)?;
    Ok(weight_decomposition(v)?.p_primary_max_length(p))
}

/// Rank of `Cr_k F(ℤ, …, ℤ)` by inclusion–exclusion over `F(ℤ^j)`, `0 ≤ j ≤ k`.
pub fn cross_effect_rank(f: &ClassicalFunctor, k: usize) -> BigUint {
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = BigInt::from(binomial(k, j) * eval_dim(f, j));
        if (k - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("cross effect ranks are nonnegative")
}

/// Largest `k ≤ weight(F)` with a nonzero `k`-th cross effect.
pub fn degree_via_cross_effects(f: &ClassicalFunctor) -> Degree {
    (0..=f.weight())
        .rev()
        .find(|&k| !cross_effect_rank(f, k).is_zero())
        .map_or(Degree::NegInfinity, Degree::Finite)
}
