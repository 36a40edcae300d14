use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::{GeometryError, Vec3};
use crate::math;

/// Angle in `[0, π]` between two nonzero vectors.
pub fn angle_between(t1: Vec3, t2: Vec3) -> Result<f64, GeometryError> {
    if t1.norm() == 0.0 || t2.norm() == 0.0 {
        return Err(GeometryError::ZeroVector);
    }
    // atan2 form keeps full precision near 0 and π, where acos does not
    Ok(math::atan2(t1.cross(t2).norm(), t1.dot(t2)))
}

fn in_range(name: &'static str, value: f64, lo: f64, hi: f64, hi_open: bool) -> Result<(), GeometryError> {
    let ok = value >= lo && if hi_open { value < hi } else { value <= hi };
    if ok {
        Ok(())
    } else {
        Err(GeometryError::DomainError { name, value })
    }
}

/// Angle between two unit segments leaving a common point on a plane, both
/// rising at elevation `beta` and whose projections meet at angle `alpha`.
///
/// `cos δ = 1 - cos²β (1 - cos α)`, evaluated as
/// `δ = 2 asin(cos β · sin(α/2))`. For `beta <= π/4`, `δ >= alpha / 2`.
pub fn lemma1_delta(alpha: f64, beta: f64) -> Result<f64, GeometryError> {
    in_range("alpha", alpha, 0.0, PI, false)?;
    in_range("beta", beta, 0.0, FRAC_PI_4, false)?;
    let s = (math::cos(beta) * math::sin(alpha / 2.0)).min(1.0);
    Ok(2.0 * math::asin(s))
}

/// Angle between a segment lying in a plane and a segment rising at
/// elevation `beta` whose projection makes angle `alpha` with the first.
///
/// `cos δ = cos α · cos β`, evaluated as
/// `δ = 2 asin(sqrt(sin²(α/2) + cos α · sin²(β/2)))`. Always `δ >= beta`.
pub fn lemma2_delta(alpha: f64, beta: f64) -> Result<f64, GeometryError> {
    in_range("alpha", alpha, 0.0, FRAC_PI_2, false)?;
    in_range("beta", beta, 0.0, FRAC_PI_4, true)?;
    let sa = math::sin(alpha / 2.0);
    let sb = math::sin(beta / 2.0);
    let s = math::sqrt(sa * sa + math::cos(alpha) * sb * sb).min(1.0);
    Ok(2.0 * math::asin(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_between_examples() {
        assert!((angle_between(Vec3::X, Vec3::Y).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angle_between(Vec3::X, Vec3::X).unwrap(), 0.0);
        assert!((angle_between(Vec3::X, -Vec3::X).unwrap() - PI).abs() < 1e-15);
        assert_eq!(angle_between(Vec3::ZERO, Vec3::X), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn lemma1_examples() {
        assert!((lemma1_delta(0.7, 0.0).unwrap() - 0.7).abs() < 1e-15);
        assert_eq!(lemma1_delta(0.0, 0.3).unwrap(), 0.0);
        // cos δ = 1 - (1/2)(1 - 0) = 1/2
        assert!((lemma1_delta(FRAC_PI_2, FRAC_PI_4).unwrap() - PI / 3.0).abs() < 1e-15);
        assert!(lemma1_delta(0.1, 0.8).is_err());
        assert!(lemma1_delta(-0.1, 0.1).is_err());
        assert!(lemma1_delta(3.2, 0.1).is_err());
    }

    #[test]
    fn lemma2_examples() {
        assert!((lemma2_delta(0.0, 0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((lemma2_delta(1.1, 0.0).unwrap() - 1.1).abs() < 1e-15);
        let want = libm::acos(libm::sqrt(3.0) / 4.0);
        assert!((lemma2_delta(PI / 3.0, PI / 6.0).unwrap() - want).abs() < 1e-15);
        assert!(lemma2_delta(0.1, FRAC_PI_4).is_err());
        assert!(lemma2_delta(1.6, 0.1).is_err());
    }
}
