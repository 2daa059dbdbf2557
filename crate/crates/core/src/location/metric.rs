use crate::tropical::Tropical;

use super::Point2;

/// `|p1 − q1| + |p2 − q2|`.
pub fn rectilinear_distance(p: Point2, q: Point2) -> f64 {
    (p.x1 - q.x1).abs() + (p.x2 - q.x2).abs()
}

/// The same distance written in `R_max,+` as
/// `(q1⁻¹p1 ⊕ p1⁻¹q1)(q2⁻¹p2 ⊕ p2⁻¹q2)`.
pub fn rectilinear_distance_tropical(p: Point2, q: Point2) -> Tropical {
    let axis = |r: f64, s: f64| {
        let (r, s) = (Tropical::finite(r), Tropical::finite(s));
        // finite operands always have inverses
        let s_inv = s.inv().unwrap_or(Tropical::ZERO);
        let r_inv = r.inv().unwrap_or(Tropical::ZERO);
        r * s_inv + s * r_inv
    };
    axis(p.x1, q.x1) * axis(p.x2, q.x2)
}
