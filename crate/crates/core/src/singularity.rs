//! Orbifold strata of `P(a_0..a_n)`, their intersection with the general
//! hypersurface, and the Reid–Shepherd-Barron–Tai classification of the
//! resulting cyclic quotient singularities.
//!
//! A stratum is indexed by `r > 1` and the maximal index set
//! `I = {i : r | a_i}`; its open part (all `x_i`, `i ∈ I`, nonzero) has
//! stabilizer exactly `mu_r`. Nested strata are reported once per `r`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::quasismooth::IndexSet;
use crate::weights::{gcd, gcd_of, semigroup_contains, WeightSystem};
use crate::{Error, Result};

/// Cyclic quotient singularity `1/r(c_1, ..., c_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientType {
    r: i64,
    residues: Vec<i64>,
}

impl QuotientType {
    pub fn new(r: i64, residues: Vec<i64>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument("quotient order must be at least 2"));
        }
        if let Some(&residue) = residues.iter().find(|&&c| c < 1 || c >= r) {
            return Err(Error::ResidueOutOfRange { r, residue });
        }
        Ok(QuotientType { r, residues })
    }

    /// Reduces arbitrary integers mod `r` and drops the zeros.
    pub fn reduced(r: i64, raw: impl IntoIterator<Item = i64>) -> Result<Self> {
        let residues = raw
            .into_iter()
            .map(|c| c.rem_euclid(r.max(1)))
            .filter(|&c| c != 0);
        Self::new(r, residues.collect())
    }

    pub fn order(&self) -> i64 {
        self.r
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    /// No residue can be dropped without leaving a common factor with `r`.
    pub fn is_well_formed(&self) -> bool {
        (0..self.residues.len()).all(|j| {
            let others = self.residues.iter().enumerate().filter(|&(k, _)| k != j);
            gcd(self.r, gcd_of(others.map(|(_, &c)| c))) == 1
        })
    }

    /// `sum_j (k c_j mod r)` for `k = 1..r-1`; the fractional-part sums scaled by `r`.
    pub fn reid_tai_sums(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (1..self.r).map(move |k| (k, self.residues.iter().map(|&c| k * c % self.r).sum()))
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(", self.r)?;
        for (i, c) in self.residues.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Singularity class, ordered from mildest to worst.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SingClass {
    Terminal,
    /// Canonical and not terminal.
    Canonical,
    /// Strictly klt.
    Klt,
}

impl SingClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SingClass::Terminal => "terminal",
            SingClass::Canonical => "canonical",
            SingClass::Klt => "klt",
        }
    }
}

impl fmt::Display for SingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Terminal iff every sum exceeds `r`, canonical iff every sum is at least `r`.
pub fn reid_tai_classify(q: &QuotientType) -> SingClass {
    classify_sums(q.r, q.reid_tai_sums().map(|(_, s)| s))
}

/// The same test restricted to `k` coprime to `r`.
pub fn reid_tai_classify_coprime(q: &QuotientType) -> SingClass {
    classify_sums(
        q.r,
        q.reid_tai_sums()
            .filter(|&(k, _)| gcd(k, q.r) == 1)
            .map(|(_, s)| s),
    )
}

fn classify_sums(r: i64, sums: impl Iterator<Item = i64>) -> SingClass {
    let mut class = SingClass::Terminal;
    for s in sums {
        if s < r {
            return SingClass::Klt;
        }
        if s == r {
            class = SingClass::Canonical;
        }
    }
    class
}

/// How the general hypersurface meets a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Not yet computed (output of [`enumerate_strata`]).
    Unresolved,
    /// The stratum lies in `X`; `x_tangent` is a tangent variable along it.
    Contained { tangent_index: usize },
    /// `X` cuts the stratum in codimension one.
    Cut,
    /// A point stratum missed by `X`.
    Disjoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub r: i64,
    /// The maximal index set `{i : r | a_i}`.
    pub indices: IndexSet,
    pub relation: Relation,
    /// Transverse type of the stratum inside the ambient space.
    pub ambient: QuotientType,
    /// Transverse type inside `X`; equal to `ambient` unless a tangent variable was dropped.
    pub transverse: QuotientType,
    /// Dimension of the singular locus this stratum contributes to `X`, `-1` if none.
    pub locus_dim: i64,
}

impl Stratum {
    pub fn contained_in_x(&self) -> bool {
        matches!(self.relation, Relation::Contained { .. })
    }

    /// Whether `X` meets the open stratum.
    pub fn meets_x(&self) -> bool {
        matches!(self.relation, Relation::Contained { .. } | Relation::Cut)
    }

    pub fn tangent_index(&self) -> Option<usize> {
        match self.relation {
            Relation::Contained { tangent_index } => Some(tangent_index),
            _ => None,
        }
    }
}

/// One stratum per `r` in `{gcd(a_I) : I nonempty} \ {1}`, by increasing `r`.
pub fn enumerate_strata(ws: &WeightSystem) -> Vec<Stratum> {
    let orders: BTreeSet<i64> = (1..=ws.full_mask())
        .map(|mask| ws.gcd_of_mask(mask))
        .filter(|&r| r > 1)
        .collect();
    let a = ws.weights();
    orders
        .into_iter()
        .map(|r| {
            let indices = IndexSet::from_indices(
                &(0..a.len()).filter(|&i| a[i] % r == 0).collect::<Vec<_>>(),
            );
            assert_eq!(
                ws.gcd_of_mask(indices.bits()),
                r,
                "maximal index set has gcd r"
            );
            let raw: Vec<i64> = indices.complement(a.len()).iter().map(|j| a[j]).collect();
            let ambient = QuotientType::reduced(r, raw.iter().copied()).expect("r >= 2");
            assert_eq!(
                ambient.residues.len(),
                raw.len(),
                "maximal I leaves no zero residue"
            );
            Stratum {
                r,
                indices,
                relation: Relation::Unresolved,
                transverse: ambient.clone(),
                ambient,
                locus_dim: -1,
            }
        })
        .collect()
}

/// Decides whether the general member contains, cuts or misses the stratum.
pub fn stratum_relation(ws: &WeightSystem, stratum: &Stratum) -> Result<Stratum> {
    let a = ws.weights();
    let d = ws.degree();
    let r = stratum.r;
    let size = stratum.indices.len() as i64;
    let generators: Vec<i64> = stratum.indices.iter().map(|i| a[i]).collect();
    let complement = stratum.indices.complement(a.len());
    let mut out = stratum.clone();
    if !semigroup_contains(d, &generators) {
        let tangent_index = complement
            .iter()
            .find(|&j| (d - a[j]).rem_euclid(r) == 0 && a[j] < d)
            .ok_or(Error::NoTangentVariable { r })?;
        out.relation = Relation::Contained { tangent_index };
        out.transverse = QuotientType::reduced(
            r,
            complement
                .iter()
                .filter(|&j| j != tangent_index)
                .map(|j| a[j]),
        )?;
        out.locus_dim = size - 1;
    } else if size >= 2 {
        out.relation = Relation::Cut;
        out.transverse = stratum.ambient.clone();
        out.locus_dim = size - 2;
    } else {
        out.relation = Relation::Disjoint;
        out.transverse = stratum.ambient.clone();
        out.locus_dim = -1;
    }
    Ok(out)
}

fn filled_strata(ws: &WeightSystem) -> Result<Vec<Stratum>> {
    enumerate_strata(ws)
        .iter()
        .map(|s| stratum_relation(ws, s))
        .collect()
}

/// Exact dimension of `Sing X`; `-1` when `X` is smooth.
pub fn singular_locus_dimension(ws: &WeightSystem) -> Result<i64> {
    Ok(filled_strata(ws)?
        .iter()
        .map(|s| s.locus_dim)
        .max()
        .unwrap_or(-1))
}

/// Worst singularity class over the strata that meet `X`, with the full strata report.
pub fn classify_hypersurface(ws: &WeightSystem) -> Result<(SingClass, Vec<Stratum>)> {
    let strata = filled_strata(ws)?;
    let dim_x = ws.len() as i64 - 2;
    let mut class = SingClass::Terminal;
    for s in strata.iter().filter(|s| s.meets_x()) {
        debug_assert_eq!(s.locus_dim + s.transverse.residues.len() as i64, dim_x);
        assert!(
            s.transverse.is_well_formed(),
            "transverse type {} of {ws} is not well-formed",
            s.transverse
        );
        class = class.max(reid_tai_classify(&s.transverse));
    }
    Ok((class, strata))
}
