//! Quasi-smoothness of the general weighted hypersurface.
//!
//! `X_d ⊂ P(a_0..a_n)` is quasi-smooth and not a linear cone iff `d != a_i`
//! for all `i` and every nonempty index set `I` either carries a degree-`d`
//! monomial in the variables of `I`, or admits at least `|I|` distinct
//! indices `j ∉ I` with `d - a_j` in the semigroup generated by `{a_i : i ∈ I}`.

use alloc::vec::Vec;
use core::fmt;

use crate::weights::{semigroup_contains, WeightSystem};
use crate::{Error, Result};

/// A set of coordinate indices, stored as a bitmask (bit `i` = index `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        IndexSet(indices.iter().fold(0, |m, &i| m | 1 << i))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 >> i & 1 == 1)
    }

    /// Indices in `0..n` that are not in the set.
    pub fn complement(self, n: usize) -> IndexSet {
        IndexSet(!self.0 & ((1u32 << n) - 1))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Which branch of the subset criterion an index set satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `d` is a nonnegative combination of the weights in `I`.
    DegreeRepresentable,
    /// At least `|I|` tangent indices `j ∉ I` exist.
    TangentIndices,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetVerdict {
    pub subset: IndexSet,
    pub branch: Branch,
    /// Every `j ∉ I` with `d - a_j` in the semigroup of `I`; empty unless the
    /// degree itself is not representable.
    pub tangent_indices: IndexSet,
}

/// Evaluates the subset criterion for one index set.
pub fn subset_condition(ws: &WeightSystem, subset: IndexSet) -> Result<SubsetVerdict> {
    let n = ws.len();
    if subset.is_empty() || !subset.is_subset(IndexSet::from_bits(ws.full_mask())) {
        return Err(Error::InvalidIndexSet(subset));
    }
    let a = ws.weights();
    let d = ws.degree();
    let generators: Vec<i64> = subset.iter().map(|i| a[i]).collect();
    if semigroup_contains(d, &generators) {
        return Ok(SubsetVerdict {
            subset,
            branch: Branch::DegreeRepresentable,
            tangent_indices: IndexSet::EMPTY,
        });
    }
    let mut tangent_indices = IndexSet::EMPTY;
    for j in subset.complement(n).iter() {
        if semigroup_contains(d - a[j], &generators) {
            tangent_indices.insert(j);
        }
    }
    let branch = if tangent_indices.len() >= subset.len() {
        Branch::TangentIndices
    } else {
        Branch::Fails
    };
    Ok(SubsetVerdict {
        subset,
        branch,
        tangent_indices,
    })
}

/// Nonempty subsets of `0..n`, by increasing size, lexicographic within a size.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = IndexSet> {
    (1..=n).flat_map(move |k| Combinations::new(n, k))
}

struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        if self.done {
            return None;
        }
        let out = IndexSet::from_indices(&self.current);
        let k = self.current.len();
        // Advance to the next combination in lexicographic order.
        let mut pos = k;
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            if self.current[pos] < self.n - k + pos {
                self.current[pos] += 1;
                for q in pos + 1..k {
                    self.current[q] = self.current[q - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Outcome of the quasi-smoothness test, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiSmoothness {
    QuasiSmooth,
    /// `d = a_index`.
    LinearCone {
        index: usize,
    },
    /// The first failing subset in size-then-lexicographic order.
    SubsetFails(SubsetVerdict),
}

impl QuasiSmoothness {
    pub fn holds(&self) -> bool {
        matches!(self, QuasiSmoothness::QuasiSmooth)
    }
}

impl fmt::Display for QuasiSmoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasiSmoothness::QuasiSmooth => f.write_str("quasi-smooth, not a linear cone"),
            QuasiSmoothness::LinearCone { index } => write!(f, "linear cone d = a_{index}"),
            QuasiSmoothness::SubsetFails(v) => write!(
                f,
                "subset I={} fails: d not representable and only {} tangent indices {}",
                v.subset,
                v.tangent_indices.len(),
                v.tangent_indices
            ),
        }
    }
}

pub fn is_quasi_smooth_not_cone(ws: &WeightSystem) -> QuasiSmoothness {
    if let Some(index) = ws.weights().iter().position(|&a| a == ws.degree()) {
        return QuasiSmoothness::LinearCone { index };
    }
    for subset in subsets_by_size(ws.len()) {
        let verdict = subset_condition(ws, subset).expect("enumerated subsets are in range");
        if verdict.branch == Branch::Fails {
            return QuasiSmoothness::SubsetFails(verdict);
        }
    }
    assert!(
        ws.weights().iter().all(|&a| a < ws.degree()),
        "quasi-smooth non-cone hypersurface with a weight >= d: {ws}"
    );
    QuasiSmoothness::QuasiSmooth
}

/// Every failing subset, in the same order as [`is_quasi_smooth_not_cone`] visits them.
pub fn failing_subsets(ws: &WeightSystem) -> Vec<SubsetVerdict> {
    subsets_by_size(ws.len())
        .map(|s| subset_condition(ws, s).expect("enumerated subsets are in range"))
        .filter(|v| v.branch == Branch::Fails)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ws(weights: &[i64], d: i64) -> WeightSystem {
        WeightSystem::new(weights.to_vec(), d).unwrap()
    }

    #[test]
    fn subset_examples() {
        let cubic = ws(&[1, 1, 1, 1, 1, 1], 3);
        let v = subset_condition(&cubic, IndexSet::from_indices(&[0])).unwrap();
        assert_eq!(v.branch, Branch::DegreeRepresentable);

        let x6 = ws(&[1, 1, 1, 2, 3, 4], 6);
        let v = subset_condition(&x6, IndexSet::from_indices(&[5])).unwrap();
        assert_eq!(v.branch, Branch::TangentIndices);
        assert!(v.tangent_indices.contains(3));
        assert!(!v.tangent_indices.contains(4));

        let bad = ws(&[1, 1, 1, 1, 5, 5], 7);
        let v = subset_condition(&bad, IndexSet::from_indices(&[4, 5])).unwrap();
        assert_eq!(v.branch, Branch::Fails);
        assert!(v.tangent_indices.is_empty());
    }

    #[test]
    fn invalid_index_sets() {
        let cubic = ws(&[1, 1, 1, 1, 1, 1], 3);
        assert!(subset_condition(&cubic, IndexSet::EMPTY).is_err());
        assert!(subset_condition(&cubic, IndexSet::from_indices(&[6])).is_err());
    }

    #[test]
    fn quasi_smooth_examples() {
        assert!(is_quasi_smooth_not_cone(&ws(&[1, 1, 1, 1, 1, 1], 3)).holds());
        assert_eq!(
            is_quasi_smooth_not_cone(&ws(&[1, 1, 1, 1, 1, 2], 2)),
            QuasiSmoothness::LinearCone { index: 5 }
        );
        match is_quasi_smooth_not_cone(&ws(&[1, 1, 1, 1, 5, 5], 7)) {
            QuasiSmoothness::SubsetFails(v) => assert_eq!(v.subset, IndexSet::from_indices(&[4])),
            other => panic!("unexpected {other:?}"),
        }
        let all = failing_subsets(&ws(&[1, 1, 1, 1, 5, 5], 7));
        assert!(all
            .iter()
            .any(|v| v.subset == IndexSet::from_indices(&[4, 5])));
    }

    #[test]
    fn visits_63_subsets_in_order() {
        let order: Vec<IndexSet> = subsets_by_size(6).collect();
        assert_eq!(order.len(), 63);
        assert_eq!(order[0], IndexSet::from_indices(&[0]));
        assert_eq!(order[6], IndexSet::from_indices(&[0, 1]));
        assert_eq!(order[7], IndexSet::from_indices(&[0, 2]));
        assert_eq!(order[62], IndexSet::from_indices(&[0, 1, 2, 3, 4, 5]));
        for w in order.windows(2) {
            assert!(w[0].len() <= w[1].len());
        }
        let mut bits: Vec<u32> = order.iter().map(|s| s.bits()).collect();
        bits.sort_unstable();
        bits.dedup();
        assert_eq!(bits.len(), 63);
    }

    #[test]
    fn display_index_set() {
        assert_eq!(
            alloc::format!("{}", IndexSet::from_indices(&[4, 5])),
            "{4,5}"
        );
    }

    fn weights6() -> impl Strategy<Value = WeightSystem> {
        (prop::collection::vec(1i64..=12, 6), 2i64..=40).prop_map(|(mut w, d)| {
            w.sort_unstable();
            WeightSystem::new(w, d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn verdict_independent_of_order(w in weights6()) {
            let forward = is_quasi_smooth_not_cone(&w).holds();
            let cone = w.weights().contains(&w.degree());
            let reverse = !cone && (1u32..64).rev().all(|m| {
                subset_condition(&w, IndexSet::from_bits(m)).unwrap().branch != Branch::Fails
            });
            prop_assert_eq!(forward, reverse);
        }

        #[test]
        fn degree_representable_is_upward_closed(w in weights6(), m in 1u32..64) {
            let v = subset_condition(&w, IndexSet::from_bits(m)).unwrap();
            if v.branch == Branch::DegreeRepresentable {
                for sup in 1u32..64 {
                    if sup & m == m {
                        let s = subset_condition(&w, IndexSet::from_bits(sup)).unwrap();
                        prop_assert_eq!(s.branch, Branch::DegreeRepresentable);
                    }
                }
            }
        }

        #[test]
        fn singleton_matches_modular_reading(w in weights6(), i in 0usize..6) {
            let a = w.weights();
            let d = w.degree();
            let direct = d % a[i] == 0
                || (0..6).any(|j| j != i && d - a[j] >= 0 && (d - a[j]) % a[i] == 0);
            let v = subset_condition(&w, IndexSet::from_indices(&[i])).unwrap();
            prop_assert_eq!(v.branch != Branch::Fails, direct);
        }
    }

    #[test]
    fn tangent_branch_needs_as_many_indices_as_subset() {
        let x6 = ws(&[1, 1, 1, 2, 3, 4], 6);
        for m in 1u32..64 {
            let v = subset_condition(&x6, IndexSet::from_bits(m)).unwrap();
            if v.branch == Branch::TangentIndices {
                assert!(v.tangent_indices.len() >= v.subset.len());
                let gens: Vec<i64> = v.subset.iter().map(|i| x6.weights()[i]).collect();
                for j in v.tangent_indices.iter() {
                    assert!(semigroup_contains(6 - x6.weights()[j], &gens));
                }
            }
        }
    }
}
