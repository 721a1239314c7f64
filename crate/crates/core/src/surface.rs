//! Numerical invariants of the surface `S` carrying a generic degree-`n`
//! cover of the symmetric square of a genus-2 curve branched on the diagonal.
//!
//! Only integers are modelled. Names follow the curves they describe:
//! `delta` the diagonal, `E` the exceptional curve, `Gamma` and `Z` their
//! pullbacks, `R` the ramification curve and `R0` the residual part of the
//! pullback of the diagonal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{transposition_count, EnumerationResult};

/// `delta^2` on the symmetric square.
const DELTA_SQ: i64 = -4;
/// `E^2`.
const E_SQ: i64 = -1;
/// `delta . E`.
const DELTA_E: i64 = 6;
/// Genus of the ramification curve, isomorphic to the diagonal.
const GENUS_R: i64 = 2;
/// Topological Euler number of the symmetric square minus the diagonal.
const CHI_TOP_COMPLEMENT: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("cover degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("result is for degree {result}, asked about degree {asked}")]
    DegreeMismatch { asked: usize, result: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub n: usize,
    /// Holomorphic Euler characteristic of the structure sheaf.
    pub chi: i64,
    #[serde(rename = "K2")]
    pub k2: i64,
    pub c2: i64,
    pub pa_z: i64,
    #[serde(rename = "Gamma2")]
    pub gamma2: i64,
    #[serde(rename = "Z2")]
    pub z2: i64,
    #[serde(rename = "GammaZ")]
    pub gamma_z: i64,
    #[serde(rename = "R2")]
    pub r2: i64,
    #[serde(rename = "RZ")]
    pub rz: i64,
    #[serde(rename = "RR0")]
    pub rr0: i64,
    #[serde(rename = "R0_2")]
    pub r0_2: i64,
    #[serde(rename = "GammaR0")]
    pub gamma_r0: i64,
    pub general_type: bool,
    pub z_reducible_forced: bool,
}

pub fn invariants_for(n: usize) -> Result<SurfaceInvariants, SurfaceError> {
    if n < 2 {
        return Err(SurfaceError::DegreeTooSmall(n));
    }
    let d = n as i64;
    // pullbacks multiply self-intersections and mixed products by the degree
    let gamma2 = d * DELTA_SQ;
    let z2 = d * E_SQ;
    let gamma_z = d * DELTA_E;
    // projection formula: R maps isomorphically onto delta
    let rz = DELTA_E;
    // adjunction on R with K = Z + R: 2g(R) - 2 = R(2R + Z)
    let r2 = (2 * GENUS_R - 2 - rz) / 2;
    let k2 = z2 + 2 * rz + r2;
    // Gamma = 2R + R0 and Gamma.R0 = (n - 2) delta^2
    let gamma_r0 = (d - 2) * DELTA_SQ;
    let four_rr0_plus_r0_2 = gamma2 - 4 * r2;
    // (4R + R0 - Gamma) R0 = 2 R R0
    let rr0 = (four_rr0_plus_r0_2 - gamma_r0) / 2;
    let r0_2 = four_rr0_plus_r0_2 - 4 * rr0;
    // additivity of the topological Euler number over S - R - R0, R, R0 (etale over delta)
    let chi_top_r = 2 - 2 * GENUS_R;
    let c2 = d * CHI_TOP_COMPLEMENT + chi_top_r + (d - 2) * chi_top_r;
    // Z(Z + K) = Z(2Z + R)
    let pa_z = (2 * z2 + rz) / 2 + 1;
    Ok(SurfaceInvariants {
        n,
        chi: 1,
        k2,
        c2,
        pa_z,
        gamma2,
        z2,
        gamma_z,
        r2,
        rz,
        rr0,
        r0_2,
        gamma_r0,
        general_type: (2..=9).contains(&n),
        z_reducible_forced: n > 4,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceReport {
    pub n: usize,
    pub exists: bool,
    pub total_count: u64,
    /// Number of isomorphism classes of covers, when orbits were computed.
    pub isomorphism_classes: Option<u64>,
    /// Degree 2 includes the quotient map from the product of the curve with itself.
    pub includes_product_cover: bool,
    pub summary: String,
}

pub fn existence_verdict(n: usize, result: &EnumerationResult) -> Result<ExistenceReport, SurfaceError> {
    if result.n != n {
        return Err(SurfaceError::DegreeMismatch { asked: n, result: result.n });
    }
    let exists = result.total_count > 0;
    let includes_product_cover = exists && n == 2;
    let summary = if exists {
        let classes = result
            .orbit_count
            .map_or_else(|| "orbit count not computed".to_string(), |c| format!("{c} isomorphism classes"));
        format!(
            "degree {n}: generic covers exist ({} representations, {}{})",
            result.total_count,
            classes,
            if includes_product_cover { ", one of them the product cover" } else { "" }
        )
    } else {
        format!("degree {n}: no generic covers exist, hence no such surfaces")
    };
    debug_assert_eq!(result.total_count, result.fixed_count * transposition_count(n));
    Ok(ExistenceReport {
        n,
        exists,
        total_count: result.total_count,
        isomorphism_classes: result.orbit_count,
        includes_product_cover,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn closed_forms() {
        for n in 2..=12usize {
            let inv = invariants_for(n).unwrap();
            let d = n as i64;
            assert_eq!(inv.chi, 1);
            assert_eq!(inv.k2, 10 - d);
            assert_eq!(inv.c2, d + 2);
            assert_eq!(inv.pa_z, 4 - d);
            assert_eq!((inv.gamma2, inv.z2, inv.gamma_z), (-4 * d, -d, 6 * d));
            assert_eq!((inv.r2, inv.rz, inv.rr0), (-2, 6, 0));
            assert_eq!(inv.z_reducible_forced, n > 4);
        }
    }

    #[test]
    fn named_degrees() {
        let i2 = invariants_for(2).unwrap();
        assert_eq!((i2.k2, i2.c2, i2.pa_z), (8, 4, 2));
        let i3 = invariants_for(3).unwrap();
        assert_eq!((i3.k2, i3.c2, i3.pa_z), (7, 5, 1));
        assert_eq!(invariants_for(4).unwrap().k2, 6);
        let i10 = invariants_for(10).unwrap();
        assert_eq!((i10.k2, i10.general_type), (0, false));
        assert!(invariants_for(9).unwrap().general_type);
        assert_eq!(invariants_for(1), Err(SurfaceError::DegreeTooSmall(1)));
    }

    #[test]
    fn noether_and_genus_formula() {
        for n in 2..=12 {
            let inv = invariants_for(n).unwrap();
            assert_eq!(inv.k2 + inv.c2, 12 * inv.chi);
            let z_dot_k = inv.z2 + inv.rz;
            assert_eq!(2 * inv.pa_z - 2, inv.z2 + z_dot_k);
            let d = n as i64;
            assert_eq!(4 * inv.rr0 + inv.r0_2, 8 - 4 * d);
            assert_eq!(inv.gamma_r0, 8 - 4 * d);
            // Gamma = 2R + R0
            assert_eq!(inv.gamma_r0, 2 * inv.rr0 + inv.r0_2);
        }
    }

    #[test]
    fn verdicts() {
        let none = EnumerationResult::from_fixed_count(5, 0, Duration::ZERO);
        let v = existence_verdict(5, &none).unwrap();
        assert!(!v.exists);
        assert!(v.summary.contains("no generic covers"));

        let mut three = EnumerationResult::from_fixed_count(3, 80, Duration::ZERO);
        three.orbit_count = Some(40);
        let v = existence_verdict(3, &three).unwrap();
        assert!(v.exists && v.total_count == 240 && v.isomorphism_classes == Some(40));

        let mut two = EnumerationResult::from_fixed_count(2, 16, Duration::ZERO);
        two.orbit_count = Some(16);
        let v = existence_verdict(2, &two).unwrap();
        assert!(v.includes_product_cover && v.isomorphism_classes == Some(16));

        assert!(existence_verdict(4, &two).is_err());
    }

    #[test]
    fn json_field_names() {
        let v = serde_json::to_value(invariants_for(3).unwrap()).unwrap();
        assert_eq!(v["K2"], 7);
        assert_eq!(v["chi"], 1);
        assert_eq!(v["pa_z"], 1);
    }
}
