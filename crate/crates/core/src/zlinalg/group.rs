use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{IntMatrix, SparseMatrix};
use super::normal_form::{invariant_factors, ColumnLattice};
use crate::error::{Error, Result};
use crate::padic::Prime;

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `dᵢ | dᵢ₊₁`, `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigUint>,
}

/// Either a positive integer or "infinite" for groups with a free part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(BigUint),
    Infinite,
}

impl Exponent {
    /// `self | n` for a positive `n`; an infinite exponent divides nothing.
    pub fn divides(&self, n: &BigUint) -> bool {
        match self {
            Exponent::Finite(e) => !n.is_zero() && n.is_multiple_of(e),
            Exponent::Infinite => false,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => write!(f, "infinite"),
        }
    }
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbGroup { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_orders(0, [BigUint::from(order)])
    }

    /// Any list of cyclic orders; zeros count as free summands and units are dropped.
    pub fn from_orders(free_rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut free_rank = free_rank;
        let mut finite = Vec::new();
        for d in orders {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                finite.push(d);
            }
        }
        AbGroup { free_rank, invariant_factors: divisibility_chain(finite) }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> Exponent {
        if self.free_rank > 0 {
            return Exponent::Infinite;
        }
        Exponent::Finite(self.invariant_factors.last().cloned().unwrap_or_else(BigUint::one))
    }

    /// The `p`-primary torsion subgroup. The free part, when present, is carried
    /// over unchanged, so a nonzero `free_rank` on the result flags that the
    /// answer is not a finite `p`-group.
    pub fn p_primary(&self, p: Prime) -> AbGroup {
        let p = BigUint::from(p.get());
        let parts = self.invariant_factors.iter().map(|d| {
            let mut part = BigUint::one();
            let mut rest = d.clone();
            loop {
                let (q, r) = rest.div_rem(&p);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                part *= &p;
            }
            part
        });
        AbGroup::from_orders(self.free_rank, parts)
    }

    /// The primes dividing the torsion order, ascending.
    pub fn torsion_primes(&self) -> Vec<Prime> {
        let mut rest = match self.invariant_factors.last() {
            Some(d) => d.clone(),
            None => return Vec::new(),
        };
        let mut primes = Vec::new();
        let mut q = 2u64;
        while !rest.is_one() {
            if BigUint::from(q) * BigUint::from(q) > rest {
                let last = rest.to_u64().expect("prime factor beyond u64 trial division");
                primes.push(Prime::new(last).expect("trial division leaves a prime"));
                break;
            }
            if (&rest % q).is_zero() {
                primes.push(Prime::new(q).expect("smallest divisor is prime"));
                while (&rest % q).is_zero() {
                    rest /= q;
                }
            }
            q += 1;
        }
        primes
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        AbGroup::from_orders(
            self.free_rank + other.free_rank,
            self.invariant_factors.iter().chain(&other.invariant_factors).cloned(),
        )
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            r => terms.push(format!("Z^{r}")),
        }
        // Group equal factors: Z/2 + Z/2 + Z/2 prints as (Z/2)^3.
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..].iter().take_while(|x| *x == d).count();
            terms.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
            i += run;
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Sort a multiset of positive integers into an invariant-factor chain with the
/// same direct sum, via pairwise `(gcd, lcm)` replacement.
fn divisibility_chain(mut orders: Vec<BigUint>) -> Vec<BigUint> {
    for i in 0..orders.len() {
        for j in i + 1..orders.len() {
            if !orders[j].is_multiple_of(&orders[i]) {
                let g = orders[i].gcd(&orders[j]);
                let l = &orders[i] / &g * &orders[j];
                orders[i] = g;
                orders[j] = l;
            }
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Factor {
    Small(u64),
    Big(String),
}

#[derive(Serialize)]
struct AbGroupOut {
    free_rank: usize,
    invariant_factors: Vec<String>,
    exponent: String,
    primary: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
struct AbGroupIn {
    free_rank: usize,
    invariant_factors: Vec<Factor>,
}

fn decimal(xs: &[BigUint]) -> Vec<String> {
    xs.iter().map(|d| d.to_string()).collect()
}

impl Serialize for AbGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let primary = self
            .torsion_primes()
            .into_iter()
            .map(|p| (p.to_string(), decimal(&self.p_primary(p).invariant_factors)))
            .collect();
        AbGroupOut {
            free_rank: self.free_rank,
            invariant_factors: decimal(&self.invariant_factors),
            exponent: self.exponent().to_string(),
            primary,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AbGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = AbGroupIn::deserialize(deserializer)?;
        let mut factors = Vec::with_capacity(raw.invariant_factors.len());
        for f in raw.invariant_factors {
            let d = match f {
                Factor::Small(x) => BigUint::from(x),
                Factor::Big(s) => s.parse().map_err(|_| D::Error::custom(format!("bad factor {s:?}")))?,
            };
            if d < BigUint::from(2u32) {
                return Err(D::Error::custom("invariant factors must be at least 2"));
            }
            factors.push(d);
        }
        if !factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])) {
            return Err(D::Error::custom("invariant factors must form a divisibility chain"));
        }
        Ok(AbGroup { free_rank: raw.free_rank, invariant_factors: factors })
    }
}

/// A finitely presented abelian group: generators modulo the column span of `relations`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPGroup {
    generator_count: usize,
    relations: SparseMatrix,
    labels: Option<Vec<String>>,
}

impl FPGroup {
    pub fn new(generator_count: usize, relations: SparseMatrix) -> Result<Self> {
        if relations.rows() != generator_count {
            return Err(Error::DimensionMismatch(format!(
                "relations have {} rows for {generator_count} generators",
                relations.rows()
            )));
        }
        Ok(FPGroup { generator_count, relations, labels: None })
    }

    pub fn from_dense(relations: &IntMatrix) -> Self {
        FPGroup { generator_count: relations.rows(), relations: SparseMatrix::from_dense(relations), labels: None }
    }

    pub fn free(generator_count: usize) -> Self {
        FPGroup { generator_count, relations: SparseMatrix::new(generator_count), labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generator_count {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} generators",
                labels.len(),
                self.generator_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relations(&self) -> &SparseMatrix {
        &self.relations
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// Structure of a presented group.
///
/// Relation columns are deduplicated and folded into an echelon lattice basis
/// before the Smith reduction, so presentations with many more relations than
/// generators stay cheap.
pub fn ab_structure(g: &FPGroup) -> AbGroup {
    let mut seen: HashSet<&[(usize, BigInt)]> = HashSet::new();
    let mut lattice = ColumnLattice::new(g.generator_count);
    for col in g.relations.columns() {
        if col.is_empty() || !seen.insert(col.as_slice()) {
            continue;
        }
        lattice.insert_sparse(col);
    }
    group_from_relation_basis(g.generator_count, &lattice.to_matrix())
}

/// Structure via a Smith reduction of the full dense relation matrix, with no
/// preprocessing. Used as the reference for [`ab_structure`].
pub fn ab_structure_dense(g: &FPGroup) -> AbGroup {
    group_from_relation_basis(g.generator_count, &g.relations.to_dense())
}

fn group_from_relation_basis(generators: usize, relations: &IntMatrix) -> AbGroup {
    let diag = invariant_factors(relations);
    let free_rank = generators - diag.len();
    AbGroup::from_orders(free_rank, diag.into_iter().map(|d| d.into_parts().1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn structure_examples() {
        let g = FPGroup::from_dense(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        let s = ab_structure(&g);
        assert_eq!(s, AbGroup::cyclic(6));
        assert_eq!(s, ab_structure_dense(&g));
        assert_eq!(ab_structure(&FPGroup::free(4)), AbGroup::free(4));
        assert!(ab_structure(&FPGroup::from_dense(&IntMatrix::identity(3))).is_trivial());
        let g = FPGroup::from_dense(&IntMatrix::from_rows(&[[2], [0]]));
        assert_eq!(ab_structure(&g).to_string(), "Z + Z/2");
    }

    #[test]
    fn primary_parts() {
        let g = AbGroup::cyclic(12);
        assert_eq!(g.p_primary(Prime::new(2).unwrap()), AbGroup::cyclic(4));
        assert_eq!(g.p_primary(Prime::new(3).unwrap()), AbGroup::cyclic(3));
        assert!(g.p_primary(Prime::new(5).unwrap()).is_trivial());
        let mixed = AbGroup::free(1).direct_sum(&AbGroup::cyclic(6));
        let two = mixed.p_primary(Prime::new(2).unwrap());
        assert_eq!(two.free_rank(), 1);
        assert_eq!(two.invariant_factors(), &[big(2)]);
    }

    #[test]
    fn exponents() {
        let g = AbGroup::cyclic(2).direct_sum(&AbGroup::cyclic(4));
        assert_eq!(g.exponent(), Exponent::Finite(big(4)));
        assert_eq!(AbGroup::trivial().exponent(), Exponent::Finite(big(1)));
        assert_eq!(AbGroup::free(1).direct_sum(&AbGroup::cyclic(2)).exponent(), Exponent::Infinite);
        assert!(Exponent::Finite(big(4)).divides(&big(12)));
        assert!(!Exponent::Infinite.divides(&big(12)));
    }

    #[test]
    fn direct_sum_normalizes() {
        let g = AbGroup::cyclic(4).direct_sum(&AbGroup::cyclic(6));
        assert_eq!(g.invariant_factors(), &[big(2), big(12)]);
        assert_eq!(g.to_string(), "Z/2 + Z/12");
        let h = AbGroup::from_orders(0, [big(3), big(3), big(1)]);
        assert_eq!(h.to_string(), "(Z/3)^2");
    }

    #[test]
    fn json_schema() {
        let g = AbGroup::from_orders(1, [big(2), big(4)]);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"free_rank":1,"invariant_factors":["2","4"],"exponent":"infinite","primary":{"2":["2","4"]}}"#
        );
        let g = AbGroup::from_orders(0, [big(6), big(4)]);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"free_rank":0,"invariant_factors":["2","12"],"exponent":"12","primary":{"2":["2","4"],"3":["3"]}}"#);
        let huge = AbGroup::from_orders(0, [BigUint::from(u64::MAX) * 3u32]);
        let text = serde_json::to_string(&huge).unwrap();
        assert!(text.contains("\"55340232221128654845\""));
        assert_eq!(serde_json::from_str::<AbGroup>(&text).unwrap(), huge);
        assert!(serde_json::from_str::<AbGroup>(r#"{"free_rank":0,"invariant_factors":[4,2]}"#).is_err());
        assert!(serde_json::from_str::<AbGroup>(r#"{"free_rank":0,"invariant_factors":[1]}"#).is_err());
    }

    #[test]
    fn label_count_checked() {
        assert!(FPGroup::free(2).with_labels(vec!["a".into()]).is_err());
        assert!(FPGroup::new(3, SparseMatrix::new(2)).is_err());
    }
}
