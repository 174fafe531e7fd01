//! Weight systems and the exact-integer primitives built on them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Index sets are 32-bit masks; one bit stays free for complements.
pub const MAX_WEIGHTS: usize = 31;

/// Grading degrees `a_0 <= ... <= a_n` of the coordinates together with the
/// degree `d` of the general hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSystem {
    weights: Vec<i64>,
    degree: i64,
}

impl WeightSystem {
    /// Builds a weight system from already sorted weights.
    pub fn new(weights: Vec<i64>, degree: i64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights"));
        }
        if weights.len() > MAX_WEIGHTS {
            return Err(Error::InvalidWeights("too many weights"));
        }
        if weights.iter().any(|&a| a < 1) {
            return Err(Error::InvalidWeights("weights must be positive"));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidWeights("weights must be nondecreasing"));
        }
        if degree < 1 {
            return Err(Error::InvalidWeights("degree must be positive"));
        }
        Ok(WeightSystem { weights, degree })
    }

    /// Sorts the weights, then validates.
    pub fn from_unsorted(mut weights: Vec<i64>, degree: i64) -> Result<Self> {
        weights.sort_unstable();
        Self::new(weights, degree)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// The largest weight `a_n`.
    pub fn top(&self) -> i64 {
        self.weights[self.weights.len() - 1]
    }

    /// All weights except position `index`, with the same degree.
    pub fn without(&self, index: usize) -> WeightSystem {
        let weights = self
            .weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &a)| a)
            .collect();
        WeightSystem {
            weights,
            degree: self.degree,
        }
    }

    /// gcd of the weights whose positions are set in `mask`.
    pub(crate) fn gcd_of_mask(&self, mask: u32) -> i64 {
        gcd_of(
            self.weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a),
        )
    }

    pub(crate) fn full_mask(&self) -> u32 {
        (1u32 << self.weights.len()) - 1
    }
}

impl fmt::Display for WeightSystem {
    /// Renders the canonical weight spec, `a0,a1,...,an:d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ":{}", self.degree)
    }
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd of a sequence; 0 for the empty sequence.
pub fn gcd_of(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0, gcd)
}

/// Rewrites `ws` into a well-formed weight system defining an isomorphic
/// weighted projective space. The degree is carried through untouched.
pub fn normalize_weight_system(ws: &WeightSystem) -> WeightSystem {
    let mut weights = ws.weights.clone();
    let g = gcd_of(weights.iter().copied());
    for a in weights.iter_mut() {
        *a /= g;
    }
    // Each division strictly lowers the weight sum, so this terminates.
    'outer: loop {
        for i in 0..weights.len() {
            let q = gcd_of(
                weights
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &a)| a),
            );
            if q > 1 {
                for (j, a) in weights.iter_mut().enumerate() {
                    if j != i {
                        *a /= q;
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    weights.sort_unstable();
    WeightSystem {
        weights,
        degree: ws.degree,
    }
}

/// `gcd(a_0, ..., â_i, ..., a_n) = 1` for every `i`.
pub fn is_well_formed_space(ws: &WeightSystem) -> bool {
    let full = ws.full_mask();
    (0..ws.len()).all(|i| ws.gcd_of_mask(full & !(1 << i)) == 1)
}

/// Well-formed space, and for every pair `i < j` the gcd of the remaining
/// weights divides `d`.
pub fn is_well_formed_hypersurface(ws: &WeightSystem) -> bool {
    if !is_well_formed_space(ws) {
        return false;
    }
    let full = ws.full_mask();
    let n = ws.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = ws.gcd_of_mask(full & !(1 << i) & !(1 << j));
            // Fewer than three weights leaves an empty gcd, which imposes nothing.
            if g != 0 && ws.degree % g != 0 {
                return false;
            }
        }
    }
    true
}

/// Whether `target` is a nonnegative integer combination of `generators`.
///
/// Zero exponents are allowed, so `0` is always a member. Negative targets
/// never are.
pub fn semigroup_contains(target: i64, generators: &[i64]) -> bool {
    debug_assert!(!generators.is_empty(), "semigroup needs a generator");
    debug_assert!(generators.iter().all(|&g| g > 0));
    if target < 0 {
        return false;
    }
    if target == 0 {
        return true;
    }
    match generators {
        [g] => target % g == 0,
        [g, h] => {
            let (small, large) = if g <= h { (*g, *h) } else { (*h, *g) };
            let mut rest = target;
            while rest >= 0 {
                if rest % small == 0 {
                    return true;
                }
                rest -= large;
            }
            false
        }
        _ => {
            let t = target as usize;
            let mut reachable = vec![false; t + 1];
            reachable[0] = true;
            for k in 1..=t {
                reachable[k] = generators
                    .iter()
                    .any(|&g| (g as usize) <= k && reachable[k - g as usize]);
            }
            reachable[t]
        }
    }
}

/// Gcd encoding of `dim X^sing <= 1` for six weights: every 4 weights are
/// coprime and the gcd of every 3 weights divides `d`.
pub fn dim_sing_gcd_conditions(ws: &WeightSystem) -> bool {
    debug_assert_eq!(
        ws.len(),
        6,
        "singular-locus gcd conditions are stated for fourfolds"
    );
    for mask in 0u32..1 << ws.len() {
        match mask.count_ones() {
            4 if ws.gcd_of_mask(mask) != 1 => return false,
            3 if ws.degree % ws.gcd_of_mask(mask) != 0 => return false,
            _ => {}
        }
    }
    true
}
