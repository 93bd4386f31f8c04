//! Geometric primitives; deterministic point-membership rasterization.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis2 {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Below,
    Above,
}

/// Axis-aligned primitives in the simulation plane. In cylindrical mode
/// the plane coordinates are `(r, z)` and a shape describes its body of
/// revolution about `r = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Shape {
    Rectangle { center: [f64; 2], size: [f64; 2] },
    Circle { center: [f64; 2], radius: f64 },
    HalfPlane { axis: Axis2, at: f64, side: Side },
    /// Sphere generated by revolving a half-disc centred on the axis:
    /// `r^2 + (z - center_z)^2 <= radius^2` (cylindrical mode only).
    SphereSegment { center_z: f64, radius: f64 },
}

impl Shape {
    /// Point membership, boundary-inclusive on the low side so that a
    /// half-plane at a pixel boundary rasterizes the documented count.
    pub fn contains(&self, p: [f64; 2]) -> bool {
        match self {
            Shape::Rectangle { center, size } => {
                (p[0] - center[0]).abs() <= 0.5 * size[0]
                    && (p[1] - center[1]).abs() <= 0.5 * size[1]
            }
            Shape::Circle { center, radius } => {
                let dx = p[0] - center[0];
                let dy = p[1] - center[1];
                dx * dx + dy * dy <= radius * radius
            }
            Shape::HalfPlane { axis, at, side } => {
                let v = match axis {
                    Axis2::X => p[0],
                    Axis2::Y => p[1],
                };
                match side {
                    Side::Below => v < *at,
                    Side::Above => v >= *at,
                }
            }
            Shape::SphereSegment { center_z, radius } => {
                let dz = p[1] - center_z;
                p[0] * p[0] + dz * dz <= radius * radius
            }
        }
    }

    /// Conservative bounding box (cylindrical shapes clip to r >= 0).
    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        match self {
            Shape::Rectangle { center, size } => (
                [center[0] - 0.5 * size[0], center[1] - 0.5 * size[1]],
                [center[0] + 0.5 * size[0], center[1] + 0.5 * size[1]],
            ),
            Shape::Circle { center, radius } => (
                [center[0] - radius, center[1] - radius],
                [center[0] + radius, center[1] + radius],
            ),
            Shape::HalfPlane { axis, at, side } => {
                let inf = f64::INFINITY;
                match (axis, side) {
                    (Axis2::X, Side::Below) => ([-inf, -inf], [*at, inf]),
                    (Axis2::X, Side::Above) => ([*at, -inf], [inf, inf]),
                    (Axis2::Y, Side::Below) => ([-inf, -inf], [inf, *at]),
                    (Axis2::Y, Side::Above) => ([-inf, *at], [inf, inf]),
                }
            }
            Shape::SphereSegment { center_z, radius } => {
                ([0.0, center_z - radius], [*radius, center_z + radius])
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Object {
    pub name: String,
    pub shape: Shape,
    pub material: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_membership() {
        let r = Shape::Rectangle { center: [0.0, 0.0], size: [2.0, 1.0] };
        assert!(r.contains([0.9, 0.4]));
        assert!(!r.contains([1.1, 0.0]));
        assert!(!r.contains([0.0, 0.6]));
    }

    #[test]
    fn half_plane_pixel_count() {
        // PEC half-plane at x = 0.5 on a [0,1] cell at resolution 10:
        // pixel centres 0.05 .. 0.95, exactly 5 below 0.5
        let h = Shape::HalfPlane { axis: Axis2::X, at: 0.5, side: Side::Below };
        let count = (0..10)
            .filter(|i| h.contains([(*i as f64 + 0.5) / 10.0, 0.5]))
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn sphere_segment_is_axis_centred() {
        let s = Shape::SphereSegment { center_z: 1.0, radius: 0.5 };
        assert!(s.contains([0.0, 1.0]));
        assert!(s.contains([0.3, 1.3]));
        assert!(!s.contains([0.4, 1.4]));
    }
}
