use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use super::{GeometryError, Vec3};
use crate::math;

/// Which of the two tilted half-planes about the chord carries the arc.
///
/// Looking along the directed chord `a -> b` with `+z` up, `Positive` leans
/// the arc plane toward the left, `Negative` toward the right. Both coincide
/// when the plane is perpendicular to the base plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Positive,
    Negative,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Positive => 1.0,
            Side::Negative => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Option<Side> {
        match s {
            1 => Some(Side::Positive),
            -1 => Some(Side::Negative),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    A,
    B,
}

/// (sin, cos) with exact values at 0 and π/2.
fn sin_cos(angle: f64) -> (f64, f64) {
    if angle == 0.0 {
        (0.0, 1.0)
    } else if angle == FRAC_PI_2 {
        (1.0, 0.0)
    } else {
        (math::sin(angle), math::cos(angle))
    }
}

/// Circular arc from `a` to `b`.
///
/// The arc lies in a plane through the chord `ab` that makes dihedral angle
/// `plane_tilt` with the base plane, and leaves both endpoints at angle
/// `in_plane_angle` to the chord, bulging away from the base plane. An
/// in-plane angle of zero gives the straight segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularArc {
    a: Vec3,
    b: Vec3,
    in_plane_angle: f64,
    plane_tilt: f64,
    side: Side,
    // unit chord direction a -> b
    chord: Vec3,
    // unit vector in the arc plane, perpendicular to the chord, toward the bulge
    bulge: Vec3,
    length: f64,
}

impl CircularArc {
    pub fn new(a: Vec3, b: Vec3, in_plane_angle: f64, plane_tilt: f64, side: Side) -> Result<Self, GeometryError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        for (name, value) in [("in_plane_angle", in_plane_angle), ("plane_tilt", plane_tilt)] {
            if !(0.0..=FRAC_PI_2).contains(&value) {
                return Err(GeometryError::AngleOutOfRange { name, value });
            }
        }
        let chord = (b - a).normalized().ok_or(GeometryError::DegenerateChord)?;
        let length = a.distance(b);
        // base-plane normal projected off the chord; a (near) vertical chord
        // falls back to +x as its reference
        let raw = Vec3::Z - chord * Vec3::Z.dot(chord);
        let up = if raw.norm() > 1e-9 {
            raw.normalized().unwrap()
        } else {
            (Vec3::X - chord * Vec3::X.dot(chord)).normalized().unwrap()
        };
        let left = up.cross(chord);
        let (st, ct) = sin_cos(plane_tilt);
        let bulge = up * st + left * (side.sign() * ct);
        Ok(CircularArc { a, b, in_plane_angle, plane_tilt, side, chord, bulge, length })
    }

    pub fn a(&self) -> Vec3 {
        self.a
    }

    pub fn b(&self) -> Vec3 {
        self.b
    }

    pub fn in_plane_angle(&self) -> f64 {
        self.in_plane_angle
    }

    pub fn plane_tilt(&self) -> f64 {
        self.plane_tilt
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn chord_length(&self) -> f64 {
        self.length
    }

    pub fn chord_direction(&self) -> Vec3 {
        self.chord
    }

    /// In-plane unit vector perpendicular to the chord, pointing at the apex.
    pub fn bulge_direction(&self) -> Vec3 {
        self.bulge
    }

    pub fn is_segment(&self) -> bool {
        self.in_plane_angle == 0.0
    }

    /// Unit normal of the arc plane.
    pub fn plane_normal(&self) -> Vec3 {
        self.chord.cross(self.bulge)
    }

    pub fn radius(&self) -> Option<f64> {
        let (s, _) = sin_cos(self.in_plane_angle);
        (s > 0.0).then(|| self.length / (2.0 * s))
    }

    pub fn center(&self) -> Option<Vec3> {
        let (s, c) = sin_cos(self.in_plane_angle);
        (s > 0.0).then(|| self.midpoint() - self.bulge * (self.length / 2.0 * c / s))
    }

    pub fn midpoint(&self) -> Vec3 {
        self.a.lerp(self.b, 0.5)
    }

    /// Highest point of the arc over the chord.
    pub fn apex(&self) -> Vec3 {
        self.midpoint() + self.bulge * (self.length / 2.0 * math::tan(self.in_plane_angle / 2.0))
    }

    /// Unit tangent leaving the given endpoint along the arc.
    pub fn tangent_at(&self, end: Endpoint) -> Vec3 {
        let (s, c) = sin_cos(self.in_plane_angle);
        match end {
            Endpoint::A => self.chord * c + self.bulge * s,
            Endpoint::B => -self.chord * c + self.bulge * s,
        }
    }

    /// Point at fraction `t` of the arc's angular sweep from `a` (0) to `b` (1).
    pub fn point_at(&self, t: f64) -> Vec3 {
        if t <= 0.0 {
            return self.a;
        }
        if t >= 1.0 {
            return self.b;
        }
        match (self.center(), self.radius()) {
            (Some(center), Some(r)) => {
                let alpha = self.in_plane_angle;
                let phi = FRAC_PI_2 + alpha - 2.0 * alpha * t;
                let (s, c) = sin_cos(phi);
                center + (self.chord * c + self.bulge * s) * r
            }
            _ => self.a.lerp(self.b, t),
        }
    }

    /// `k` points uniformly spaced in sweep angle, from `a` to `b`
    /// inclusive. `k` below 2 is treated as 2.
    pub fn sample(&self, k: usize) -> Vec<Vec3> {
        let k = k.max(2);
        (0..k).map(|i| self.point_at(i as f64 / (k - 1) as f64)).collect()
    }

    /// Moves `p` along the bulge direction onto the chord line. For a
    /// point on the arc the result lies on the segment `ab`.
    pub fn flatten(&self, p: Vec3) -> Vec3 {
        p - self.bulge * (p - self.a).dot(self.bulge)
    }

    /// Same arc with a different in-plane angle.
    pub fn with_in_plane_angle(&self, in_plane_angle: f64) -> Result<Self, GeometryError> {
        CircularArc::new(self.a, self.b, in_plane_angle, self.plane_tilt, self.side)
    }
}
