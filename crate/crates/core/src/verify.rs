//! Cross-checks over finished censuses.
//!
//! Each check returns the list of violations it found; an empty list means the
//! property holds for every family examined.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::census::{census_key, FamilyRecord, K3_MAX_DEGREE};
use crate::hodge::hodge_correspondence_holds;
use crate::quasismooth::is_quasi_smooth_not_cone;
use crate::series::jacobian_hilbert_series;
use crate::weights::{dim_sing_gcd_conditions, is_well_formed_hypersurface, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub family: Option<WeightSystem>,
    pub detail: String,
}

impl Violation {
    fn new(check: &'static str, family: Option<&WeightSystem>, detail: String) -> Self {
        Violation {
            check,
            family: family.cloned(),
            detail,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Some(ws) => write!(f, "[{}] {}: {}", self.check, ws, self.detail),
            None => write!(f, "[{}] {}", self.check, self.detail),
        }
    }
}

/// The K3 sweep has no family above [`K3_MAX_DEGREE`] and reaches it.
pub fn k3_stabilization(k3s: &[WeightSystem]) -> Vec<Violation> {
    let mut out: Vec<Violation> = k3s
        .iter()
        .filter(|s| s.degree() > K3_MAX_DEGREE)
        .map(|s| {
            Violation::new(
                "k3-stabilization",
                Some(s),
                format!("degree above {K3_MAX_DEGREE}"),
            )
        })
        .collect();
    if !k3s.iter().any(|s| s.degree() == K3_MAX_DEGREE) {
        out.push(Violation::new(
            "k3-stabilization",
            None,
            format!("no surface of degree {K3_MAX_DEGREE}"),
        ));
    }
    out
}

/// Families present in one list and not the other.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SetDifference {
    pub only_left: Vec<WeightSystem>,
    pub only_right: Vec<WeightSystem>,
}

impl SetDifference {
    pub fn is_empty(&self) -> bool {
        self.only_left.is_empty() && self.only_right.is_empty()
    }
}

pub fn set_difference(left: &[WeightSystem], right: &[WeightSystem]) -> SetDifference {
    let l: BTreeSet<&WeightSystem> = left.iter().collect();
    let r: BTreeSet<&WeightSystem> = right.iter().collect();
    let mut diff = SetDifference {
        only_left: l.difference(&r).map(|w| (*w).clone()).collect(),
        only_right: r.difference(&l).map(|w| (*w).clone()).collect(),
    };
    diff.only_left
        .sort_by(|x, y| census_key(x).cmp(&census_key(y)));
    diff.only_right
        .sort_by(|x, y| census_key(x).cmp(&census_key(y)));
    diff
}

/// The constructed census equals the brute-force sweep as a set.
pub fn census_matches_brute_force(
    constructed: &[WeightSystem],
    brute: &[WeightSystem],
) -> Vec<Violation> {
    let diff = set_difference(constructed, brute);
    let mut out: Vec<Violation> = diff
        .only_left
        .iter()
        .map(|w| {
            Violation::new(
                "brute-force",
                Some(w),
                String::from("missing from brute force"),
            )
        })
        .collect();
    out.extend(diff.only_right.iter().map(|w| {
        Violation::new(
            "brute-force",
            Some(w),
            String::from("missing from K3 construction"),
        )
    }));
    out
}

/// No weight system occurs twice.
pub fn no_duplicates(list: &[WeightSystem]) -> Vec<Violation> {
    let mut seen = BTreeSet::new();
    list.iter()
        .filter(|w| !seen.insert(*w))
        .map(|w| Violation::new("duplicates", Some(w), String::from("listed twice")))
        .collect()
}

/// Every fourfold other than the cubic has some `a_i + a_5 = d`, and the
/// associated surface is a census K3.
pub fn association_membership(records: &[FamilyRecord], k3s: &[WeightSystem]) -> Vec<Violation> {
    let census: BTreeSet<&WeightSystem> = k3s.iter().collect();
    let mut out = Vec::new();
    for r in records {
        if r.ws.top() <= 1 || !dim_sing_gcd_conditions(&r.ws) {
            continue;
        }
        let Some(assoc) = &r.association else {
            out.push(Violation::new(
                "association",
                Some(&r.ws),
                String::from("no a_i + a_5 = d"),
            ));
            continue;
        };
        let s = &assoc.k3;
        let is_k3 = s.weight_sum() == s.degree()
            && is_well_formed_hypersurface(s)
            && is_quasi_smooth_not_cone(s).holds();
        if !is_k3 || !census.contains(s) {
            out.push(Violation::new(
                "association",
                Some(&r.ws),
                format!("associated surface {s} is not a census K3"),
            ));
        }
    }
    out
}

/// `dim (R_f)_d` agrees with the associated K3's `dim (R_g)_d`.
pub fn series_correspondence(records: &[FamilyRecord]) -> Vec<Violation> {
    records
        .iter()
        .filter_map(|r| {
            let assoc = r.association.as_ref()?;
            match hodge_correspondence_holds(&r.ws, assoc.index) {
                Ok(true) => None,
                Ok(false) => Some(Violation::new(
                    "series",
                    Some(&r.ws),
                    format!("degree-d coefficients differ from {}", assoc.k3),
                )),
                Err(e) => Some(Violation::new("series", Some(&r.ws), format!("{e}"))),
            }
        })
        .collect()
}

/// The Jacobian series is palindromic about `d` with socle degree `2d`.
pub fn series_symmetry(records: &[FamilyRecord]) -> Vec<Violation> {
    let mut out = Vec::new();
    for r in records {
        let d = r.ws.degree();
        let socle = r.ws.weights().iter().map(|&a| d - 2 * a).sum::<i64>();
        let cap = (socle.max(0) + 1) as usize;
        let series = match jacobian_hilbert_series(&r.ws, cap) {
            Ok(s) => s,
            Err(e) => {
                out.push(Violation::new("symmetry", Some(&r.ws), format!("{e}")));
                continue;
            }
        };
        let c = series.coeffs();
        let socle = socle as usize;
        let symmetric = (0..=socle).all(|k| c[k] == c[socle - k]);
        if !symmetric || c[socle] != 1 || c[socle + 1] != 0 {
            out.push(Violation::new(
                "symmetry",
                Some(&r.ws),
                format!("series is not palindromic with socle degree {socle}"),
            ));
        }
    }
    out
}

/// Fano K3 Hodge shape: `h^{4,0} = 0`, `h^{3,1} = 1`.
pub fn fk3_hodge_shape(records: &[FamilyRecord]) -> Vec<Violation> {
    records
        .iter()
        .filter(|r| {
            !(r.fk3
                && r.hodge.primitive.len() == 5
                && r.hodge.primitive[0] == 0
                && r.hodge.primitive[1] == 1)
        })
        .map(|r| {
            Violation::new(
                "hodge-shape",
                Some(&r.ws),
                format!("primitive row {:?}", r.hodge.primitive),
            )
        })
        .collect()
}

/// The computed singular dimension is at most one exactly when the gcd
/// conditions hold.
pub fn singular_dimension_consistency(records: &[FamilyRecord]) -> Vec<Violation> {
    records
        .iter()
        .filter(|r| (r.sing_dim <= 1) != dim_sing_gcd_conditions(&r.ws))
        .map(|r| {
            Violation::new(
                "singular-dimension",
                Some(&r.ws),
                format!(
                    "dim Sing = {} disagrees with the gcd conditions",
                    r.sing_dim
                ),
            )
        })
        .collect()
}

/// Every check that applies to a fourfold census.
pub fn check_fourfold_census(
    records: &[FamilyRecord],
    k3s: &[WeightSystem],
    brute: Option<&[WeightSystem]>,
) -> Vec<Violation> {
    let list: Vec<WeightSystem> = records.iter().map(|r| r.ws.clone()).collect();
    let mut out = k3_stabilization(k3s);
    out.extend(no_duplicates(&list));
    if let Some(brute) = brute {
        out.extend(census_matches_brute_force(&list, brute));
    }
    out.extend(association_membership(records, k3s));
    out.extend(series_correspondence(records));
    out.extend(series_symmetry(records));
    out.extend(fk3_hodge_shape(records));
    out.extend(singular_dimension_consistency(records));
    out
}
