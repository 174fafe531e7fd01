//! Enumeration of weighted K3 surfaces, Fano fourfolds of K3 type with
//! `dim Sing X <= 1`, and the two `d = 2 a_5` families with a singular surface.
//!
//! Fourfolds are admitted by five numbered conditions on `(a_0..a_5; d)`:
//!
//! 1. the hypersurface is well-formed;
//! 2. `a_5 < d`;
//! 3. `sum a_i = 2d`;
//! 4. the general member is quasi-smooth and not a linear cone;
//! 5. the gcd encoding of `dim Sing X <= 1` holds.
//!
//! Every sweep here is sequential. Each one is a union of independent
//! per-degree (or per-surface) pieces, exposed separately so that callers can
//! run them in parallel and merge.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hodge::{is_fano_k3_numerics, primitive_middle_hodge, HodgeRow};
use crate::quasismooth::is_quasi_smooth_not_cone;
use crate::singularity::{
    classify_hypersurface, reid_tai_classify, reid_tai_classify_coprime, SingClass, Stratum,
};
use crate::weights::{dim_sing_gcd_conditions, is_well_formed_hypersurface, WeightSystem};
use crate::{Error, Result};

/// Upper end of the K3 sweep; the census must stabilize well below it.
pub const K3_SEARCH_BOUND: i64 = 100;

/// Largest degree of a quasi-smooth well-formed weighted K3 hypersurface.
pub const K3_MAX_DEGREE: i64 = 66;

/// One of the five admissibility conditions for fourfolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    WellFormed,
    BelowDegree,
    Fk3Sum,
    QuasiSmooth,
    SingularLocus,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::WellFormed,
        Condition::BelowDegree,
        Condition::Fk3Sum,
        Condition::QuasiSmooth,
        Condition::SingularLocus,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::WellFormed => "well-formed hypersurface",
            Condition::BelowDegree => "every weight below the degree",
            Condition::Fk3Sum => "sum of weights equals 2d",
            Condition::QuasiSmooth => "quasi-smooth and not a linear cone",
            Condition::SingularLocus => "gcd conditions for dim Sing X <= 1",
        })
    }
}

/// Which quasi-smoothness test admits fourfolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Fk3Filter {
    /// The subset criterion alone.
    #[default]
    Exact,
    /// The subset criterion plus the singleton test used to compile the
    /// published 244-row table: `d mod a_i` must be `0` or literally equal to
    /// another weight `a_j`. Stricter than the criterion whenever the only
    /// tangent variables at the vertex `P_i` have `a_j > a_i`.
    PublishedSingleton,
}

/// `d mod a_i ∈ {0} ∪ {a_j : j != i}` for every `i`.
pub fn published_singleton_test(ws: &WeightSystem) -> bool {
    let a = ws.weights();
    let d = ws.degree();
    (0..a.len()).all(|i| {
        let rem = d % a[i];
        rem == 0 || (0..a.len()).any(|j| j != i && a[j] == rem)
    })
}

/// Checks conditions (1)–(4), and (5) when asked, in numerical order.
pub fn check_conditions(
    ws: &WeightSystem,
    with_singular_locus: bool,
) -> core::result::Result<(), Condition> {
    assert_eq!(
        ws.len(),
        6,
        "admissibility conditions are stated for six weights"
    );
    if !is_well_formed_hypersurface(ws) {
        return Err(Condition::WellFormed);
    }
    if ws.top() >= ws.degree() {
        return Err(Condition::BelowDegree);
    }
    if ws.weight_sum() != 2 * ws.degree() {
        return Err(Condition::Fk3Sum);
    }
    if !is_quasi_smooth_not_cone(ws).holds() {
        return Err(Condition::QuasiSmooth);
    }
    if with_singular_locus && !dim_sing_gcd_conditions(ws) {
        return Err(Condition::SingularLocus);
    }
    Ok(())
}

/// Conditions (1)–(5) under `filter`, cheapest tests first.
pub fn is_admissible_fourfold(ws: &WeightSystem, filter: Fk3Filter) -> bool {
    ws.len() == 6
        && ws.weight_sum() == 2 * ws.degree()
        && ws.top() < ws.degree()
        && dim_sing_gcd_conditions(ws)
        && is_well_formed_hypersurface(ws)
        && (filter == Fk3Filter::Exact || published_singleton_test(ws))
        && is_quasi_smooth_not_cone(ws).holds()
}

/// Census order: by degree, then weights.
pub fn census_key(ws: &WeightSystem) -> (i64, &[i64]) {
    (ws.degree(), ws.weights())
}

fn sort_census(list: &mut [WeightSystem]) {
    list.sort_by(|x, y| census_key(x).cmp(&census_key(y)));
}

/// Quasi-smooth, well-formed, non-cone K3 hypersurfaces `S_d ⊂ P(a_0..a_3)`, `d = sum a_i`.
pub fn k3_surfaces_of_degree(d: i64) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    for a0 in 1..=d / 4 {
        for a1 in a0..=(d - a0) / 3 {
            for a2 in a1..=(d - a0 - a1) / 2 {
                let a3 = d - a0 - a1 - a2;
                let ws = WeightSystem::new(vec![a0, a1, a2, a3], d).expect("sorted positive");
                if is_well_formed_hypersurface(&ws) && is_quasi_smooth_not_cone(&ws).holds() {
                    out.push(ws);
                }
            }
        }
    }
    out
}

/// The K3 census over all `d <= K3_SEARCH_BOUND`, sorted by `(d, weights)`.
pub fn enumerate_k3_surfaces() -> Vec<WeightSystem> {
    (1..=K3_SEARCH_BOUND)
        .flat_map(k3_surfaces_of_degree)
        .collect()
}

/// Fourfolds `(k3 ∪ {s, t}; d)` over partitions `s + t = d`, `s <= t`, that pass (1)–(5).
pub fn fourfolds_from_k3(k3: &WeightSystem) -> Vec<WeightSystem> {
    fourfolds_from_k3_with(k3, Fk3Filter::Exact)
}

pub fn fourfolds_from_k3_with(k3: &WeightSystem, filter: Fk3Filter) -> Vec<WeightSystem> {
    let d = k3.degree();
    (1..=d / 2)
        .filter_map(|s| {
            let mut weights = k3.weights().to_vec();
            weights.extend([s, d - s]);
            let ws = WeightSystem::from_unsorted(weights, d).expect("positive weights");
            is_admissible_fourfold(&ws, filter).then_some(ws)
        })
        .collect()
}

/// The smooth cubic fourfold `X_3 ⊂ P^5`, the one family with `a_5 = 1`.
pub fn cubic_fourfold() -> WeightSystem {
    WeightSystem::new(vec![1; 6], 3).expect("valid")
}

/// Weight systems of the fourfold census built from `k3s`, deduplicated and sorted.
pub fn fourfold_weight_systems(k3s: &[WeightSystem], filter: Fk3Filter) -> Vec<WeightSystem> {
    let mut set: BTreeSet<WeightSystem> = BTreeSet::new();
    set.insert(cubic_fourfold());
    for k3 in k3s {
        set.extend(fourfolds_from_k3_with(k3, filter));
    }
    let mut list: Vec<WeightSystem> = set.into_iter().collect();
    sort_census(&mut list);
    list
}

pub fn enumerate_fk3_fourfolds() -> Vec<FamilyRecord> {
    enumerate_fk3_fourfolds_with(Fk3Filter::Exact)
}

pub fn enumerate_fk3_fourfolds_with(filter: Fk3Filter) -> Vec<FamilyRecord> {
    fourfold_weight_systems(&enumerate_k3_surfaces(), filter)
        .iter()
        .map(|ws| analyze_family(ws).expect("census families pass conditions (1)-(4)"))
        .collect()
}

/// Calls `visit` on every sorted six-tuple `a_0 <= ... <= a_5 < d` with `sum a_i = 2d`.
fn for_each_fourfold_tuple(d: i64, mut visit: impl FnMut([i64; 6])) {
    let total = 2 * d;
    // a_5 is the largest of six parts summing to 2d, so 6 a_5 >= 2d.
    for a5 in (total + 5) / 6..d {
        let r4 = total - a5;
        for a4 in (r4 + 4) / 5..=a5.min(r4) {
            let r3 = r4 - a4;
            for a3 in (r3 + 3) / 4..=a4.min(r3) {
                let r2 = r3 - a3;
                for a2 in (r2 + 2) / 3..=a3.min(r2) {
                    let r1 = r2 - a2;
                    for a1 in (r1 + 1) / 2..=a2.min(r1 - 1) {
                        let a0 = r1 - a1;
                        if a0 >= 1 && a0 <= a1 {
                            visit([a0, a1, a2, a3, a4, a5]);
                        }
                    }
                }
            }
        }
    }
}

/// Direct sweep of one degree with conditions (1)–(5) and no K3 detour.
pub fn brute_force_degree(d: i64, filter: Fk3Filter) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    for_each_fourfold_tuple(d, |w| {
        let ws = WeightSystem::new(w.to_vec(), d).expect("sorted positive");
        if is_admissible_fourfold(&ws, filter) {
            out.push(ws);
        }
    });
    out
}

/// Independent oracle for the fourfold census: every `d <= d_max`.
pub fn brute_force_census(d_max: i64) -> Vec<WeightSystem> {
    brute_force_census_with(d_max, Fk3Filter::Exact)
}

pub fn brute_force_census_with(d_max: i64, filter: Fk3Filter) -> Vec<WeightSystem> {
    (1..=d_max)
        .flat_map(|d| brute_force_degree(d, filter))
        .collect()
}

/// Families with `d = 2 a_5`, `a_4 | d`, `a_4 != d/2` in one degree, under (1)–(4) only.
pub fn extra_families_of_degree(d: i64) -> Vec<WeightSystem> {
    let mut out = Vec::new();
    if d % 2 != 0 {
        return out;
    }
    let a5 = d / 2;
    for_each_fourfold_tuple(d, |w| {
        if w[5] == a5 && w[4] != a5 && d % w[4] == 0 {
            let ws = WeightSystem::new(w.to_vec(), d).expect("sorted positive");
            if check_conditions(&ws, false).is_ok() {
                out.push(ws);
            }
        }
    });
    out
}

/// The extra-family sweep up to [`K3_MAX_DEGREE`], analyzed.
pub fn enumerate_extra_families() -> Vec<FamilyRecord> {
    extra_families_up_to(K3_MAX_DEGREE)
}

pub fn extra_families_up_to(d_max: i64) -> Vec<FamilyRecord> {
    (1..=d_max)
        .flat_map(extra_families_of_degree)
        .map(|ws| analyze_family(&ws).expect("swept families pass conditions (1)-(4)"))
        .collect()
}

/// The K3 surface attached to a fourfold with `a_i + a_5 = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Association {
    pub index: usize,
    /// `S_d ⊂ P({a_0..a_4} \ {a_i})`.
    pub k3: WeightSystem,
}

/// Smallest `i` in `0..5` with `a_i + a_5 = d`, when `a_5 > 1`.
pub fn associate_k3(ws: &WeightSystem) -> Option<K3Association> {
    if ws.len() != 6 || ws.top() <= 1 {
        return None;
    }
    let a = ws.weights();
    let index = (0..5).find(|&i| a[i] + a[5] == ws.degree())?;
    let k3 = WeightSystem::new(
        a[..5]
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != index)
            .map(|(_, &w)| w)
            .collect(),
        ws.degree(),
    )
    .expect("subsequence of sorted weights");
    Some(K3Association { index, k3 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rationality {
    /// Birational to a weighted blow-up of `P(a_0..a_4)` along the associated K3.
    Rational,
    /// The cubic fourfold: rationality is conjectural.
    ConjecturalCubic,
    Unknown,
}

impl Rationality {
    pub fn as_str(self) -> &'static str {
        match self {
            Rationality::Rational => "rational",
            Rationality::ConjecturalCubic => "conjectural-cubic",
            Rationality::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Rationality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// All weights 1.
    Cubic,
    /// Some `a_i + a_5 = d`: the equation is linear in `x_5`.
    LinearInLastVariable,
    /// `a_4 = a_5 = d/2`: an iterated double cover branched over a K3.
    DoubleSuspension,
    /// `2 a_5 = 3 a_4 = d`: a double cover of a triple cover branched over a del Pezzo.
    CyclicDelPezzo,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Cubic => "cubic",
            Tag::LinearInLastVariable => "linear-in-last",
            Tag::DoubleSuspension => "double-suspension",
            Tag::CyclicDelPezzo => "cyclic-del-pezzo",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The del Pezzo surface `S_d ⊂ P(a_0..a_3)` of a cyclic family, with `K_S = O(canonical_twist)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDelPezzo {
    pub surface: WeightSystem,
    pub canonical_twist: i64,
}

/// Full analysis of one fourfold family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub ws: WeightSystem,
    pub fk3: bool,
    pub hodge: HodgeRow,
    pub sing_dim: i64,
    pub sing_class: SingClass,
    pub strata: Vec<Stratum>,
    pub association: Option<K3Association>,
    pub rationality: Rationality,
    /// Sorted, no repeats.
    pub tags: Vec<Tag>,
    pub del_pezzo: Option<CyclicDelPezzo>,
    /// Whether restricting Reid–Tai to `k` coprime to `r` gives the same class.
    pub coprime_reid_tai_agrees: bool,
}

/// Assembles the record for a fourfold passing conditions (1)–(4).
pub fn analyze_family(ws: &WeightSystem) -> Result<FamilyRecord> {
    if ws.len() != 6 {
        return Err(Error::InvalidArgument("fourfold families have six weights"));
    }
    check_conditions(ws, false).map_err(Error::ConditionFailed)?;
    let hodge = primitive_middle_hodge(ws)?;
    let (sing_class, strata) = classify_hypersurface(ws)?;
    let sing_dim = strata.iter().map(|s| s.locus_dim).max().unwrap_or(-1);
    let coprime_class = strata
        .iter()
        .filter(|s| s.meets_x())
        .map(|s| reid_tai_classify_coprime(&s.transverse))
        .max()
        .unwrap_or(SingClass::Terminal);
    debug_assert_eq!(
        sing_class,
        strata
            .iter()
            .filter(|s| s.meets_x())
            .map(|s| reid_tai_classify(&s.transverse))
            .max()
            .unwrap_or(SingClass::Terminal)
    );

    let a = ws.weights();
    let d = ws.degree();
    let cubic = a.iter().all(|&w| w == 1);
    let association = associate_k3(ws);

    let mut tags = Vec::new();
    if cubic {
        tags.push(Tag::Cubic);
    }
    if association.is_some() {
        tags.push(Tag::LinearInLastVariable);
    }
    if d % 2 == 0 && a[4] == d / 2 && a[5] == d / 2 {
        tags.push(Tag::DoubleSuspension);
    }
    let del_pezzo = if 2 * a[5] == d && 3 * a[4] == d {
        tags.push(Tag::CyclicDelPezzo);
        let surface = WeightSystem::new(a[..4].to_vec(), d)?;
        let canonical_twist = d - surface.weight_sum();
        debug_assert_eq!(6 * canonical_twist, -d);
        Some(CyclicDelPezzo {
            surface,
            canonical_twist,
        })
    } else {
        None
    };

    let rationality = if cubic {
        Rationality::ConjecturalCubic
    } else if association.is_some() {
        Rationality::Rational
    } else {
        Rationality::Unknown
    };

    Ok(FamilyRecord {
        ws: ws.clone(),
        fk3: is_fano_k3_numerics(ws),
        hodge,
        sing_dim,
        sing_class,
        strata,
        association,
        rationality,
        tags,
        del_pezzo,
        coprime_reid_tai_agrees: coprime_class == sing_class,
    })
}

/// Analysis of one K3 surface in the 95-row census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRecord {
    pub ws: WeightSystem,
    pub hodge: HodgeRow,
    pub sing_dim: i64,
    pub sing_class: SingClass,
    pub strata: Vec<Stratum>,
}

pub fn analyze_surface(ws: &WeightSystem) -> Result<SurfaceRecord> {
    if ws.len() != 4 {
        return Err(Error::InvalidArgument(
            "weighted K3 surfaces have four weights",
        ));
    }
    let hodge = primitive_middle_hodge(ws)?;
    let (sing_class, strata) = classify_hypersurface(ws)?;
    let sing_dim = strata.iter().map(|s| s.locus_dim).max().unwrap_or(-1);
    Ok(SurfaceRecord {
        ws: ws.clone(),
        hodge,
        sing_dim,
        sing_class,
        strata,
    })
}
