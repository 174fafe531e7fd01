//! Primitive middle Hodge numbers via the Griffiths residue formula.
//!
//! For a quasi-smooth `X_d` of dimension `2t` in `P(a_0..a_{2t+1})`,
//! `h^{2t-j,j}_prim = dim (R_f)_{(j+1)d - sum a_i}` where `R_f` is the
//! Jacobian ring, whose Hilbert series is [`jacobian_hilbert_series`].

use alloc::vec::Vec;

use crate::census::Condition;
use crate::quasismooth::is_quasi_smooth_not_cone;
use crate::series::jacobian_hilbert_series;
use crate::weights::WeightSystem;
use crate::{Error, Result};

/// The primitive middle row `h^{2t-j,j}_prim`, `j = 0..=2t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeRow {
    /// Dimension `2t` of the hypersurface.
    pub dim: usize,
    pub primitive: Vec<i64>,
    /// `h^{t,t}_prim + 1`, the value including the hyperplane class.
    pub middle_total: i64,
}

impl HodgeRow {
    pub fn middle_primitive(&self) -> i64 {
        self.primitive[self.dim / 2]
    }
}

pub fn primitive_middle_hodge(ws: &WeightSystem) -> Result<HodgeRow> {
    if ws.len() % 2 != 0 || ws.len() < 2 {
        return Err(Error::InvalidArgument(
            "Hodge row needs an even number of weights",
        ));
    }
    if !is_quasi_smooth_not_cone(ws).holds() {
        return Err(Error::ConditionFailed(Condition::QuasiSmooth));
    }
    let dim = ws.len() - 2;
    let d = ws.degree();
    let sum = ws.weight_sum();
    let degree_of = |j: usize| (j as i64 + 1) * d - sum;
    let cap = degree_of(dim).max(0) as usize;
    let series = jacobian_hilbert_series(ws, cap)?;
    let primitive: Vec<i64> = (0..=dim)
        .map(|j| {
            series
                .coeff_at(degree_of(j))
                .expect("cap covers every queried degree")
        })
        .collect();
    debug_assert!(primitive.iter().all(|&h| h >= 0));
    let middle_total = primitive[dim / 2] + 1;
    Ok(HodgeRow {
        dim,
        primitive,
        middle_total,
    })
}

/// `sum a_i = d * t` for a hypersurface of dimension `2t`, `t >= 1`.
pub fn is_fano_k3_numerics(ws: &WeightSystem) -> bool {
    if ws.len() % 2 != 0 || ws.len() < 4 {
        return false;
    }
    let t = (ws.len() as i64 - 2) / 2;
    let holds = ws.weight_sum() == ws.degree() * t;
    if holds && t >= 2 {
        assert!(
            ws.degree() < ws.weight_sum(),
            "K3-type numerics without Fano index: {ws}"
        );
    }
    holds
}

/// Compares `dim (R_f)_d` for the fourfold with `dim (R_g)_d` for the K3
/// surface obtained by dropping `a_i` and `a_5`, where `a_i + a_5 = d`.
pub fn hodge_correspondence_holds(ws: &WeightSystem, i: usize) -> Result<bool> {
    if ws.len() != 6 {
        return Err(Error::InvalidArgument(
            "series correspondence needs six weights",
        ));
    }
    let a = ws.weights();
    if i >= 5 || a[i] + a[5] != ws.degree() {
        return Err(Error::InvalidArgument(
            "index does not satisfy a_i + a_5 = d",
        ));
    }
    let d = ws.degree();
    let cap = d as usize;
    let fourfold = jacobian_hilbert_series(ws, cap)?;
    let surface = WeightSystem::new(
        a[..5]
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &w)| w)
            .collect(),
        d,
    )?;
    let k3 = jacobian_hilbert_series(&surface, cap)?;
    Ok(fourfold.coeff(cap) == k3.coeff(cap))
}
