//! The dual intersection complex and its contact-order rules.
//!
//! The complex is the closed triangle in R² with vertices (0,0), (1,0) and
//! (0,1); corners correspond to the components M₁, M₂, M₃ of the degenerate
//! fiber, open sides to the pairwise intersections and the open interior to
//! the triple intersection. An edge derivative leaving a vertex translates
//! into contact orders with the divisors adjacent to that vertex's face.
//!
//! Plane mode drops the face machinery entirely: the whole of R² behaves
//! like the interior, which recovers the classical correspondence picture
//! for plane tropical curves.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lattice::{IntVec2, Rat, RatPoint};
use crate::Result;

/// Faces of the dual intersection complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Face {
    #[serde(rename = "C1")]
    C1,
    #[serde(rename = "C2")]
    C2,
    #[serde(rename = "C3")]
    C3,
    #[serde(rename = "S12")]
    S12,
    #[serde(rename = "S13")]
    S13,
    #[serde(rename = "S23")]
    S23,
    #[serde(rename = "INT")]
    Int,
}

impl Face {
    pub fn is_corner(&self) -> bool {
        matches!(self, Face::C1 | Face::C2 | Face::C3)
    }

    pub fn is_side(&self) -> bool {
        matches!(self, Face::S12 | Face::S13 | Face::S23)
    }

    pub fn is_interior(&self) -> bool {
        matches!(self, Face::Int)
    }

    /// Position of a corner face.
    pub fn corner_position(&self) -> Option<RatPoint> {
        match self {
            Face::C1 => Some(RatPoint::from_ints(0, 0)),
            Face::C2 => Some(RatPoint::from_ints(1, 0)),
            Face::C3 => Some(RatPoint::from_ints(0, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Face::C1 => "C1",
            Face::C2 => "C2",
            Face::C3 => "C3",
            Face::S12 => "S12",
            Face::S13 => "S13",
            Face::S23 => "S23",
            Face::Int => "INT",
        };
        f.write_str(s)
    }
}

/// Whether the engine works in the compact triangle or in the whole plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Triangle,
    Plane,
}

/// The target of tropical curves: the triangle (optionally twisted by a
/// fixed vector, the Chern-class deficit of the fiber bundle) or the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domain {
    pub mode: Mode,
    pub twist: IntVec2,
}

impl Domain {
    pub fn triangle() -> Self {
        Domain {
            mode: Mode::Triangle,
            twist: IntVec2::ZERO,
        }
    }

    pub fn triangle_twisted(twist: IntVec2) -> Self {
        Domain {
            mode: Mode::Triangle,
            twist,
        }
    }

    pub fn plane() -> Self {
        Domain {
            mode: Mode::Plane,
            twist: IntVec2::ZERO,
        }
    }

    /// Face whose relative interior contains `p`. In plane mode every point
    /// classifies as interior; in triangle mode points outside the closed
    /// triangle are an error.
    pub fn classify_point(&self, p: &RatPoint) -> Result<Face> {
        if self.mode == Mode::Plane {
            return Ok(Face::Int);
        }
        let zero = Rat::zero();
        let one = Rat::one();
        let sum = &p.x + &p.y;
        if p.x < zero || p.y < zero || sum > one {
            return Err(Error::OutOfDomain(p.to_string()));
        }
        let on_x = p.x.is_zero();
        let on_y = p.y.is_zero();
        let on_diag = sum == one;
        Ok(match (on_x, on_y, on_diag) {
            (true, true, _) => Face::C1,
            (false, true, true) => Face::C2,
            (true, false, true) => Face::C3,
            (false, true, false) => Face::S12,
            (true, false, false) => Face::S13,
            (false, false, true) => Face::S23,
            (false, false, false) => Face::Int,
        })
    }
}

/// Divisors a marked point can contact. `Lfiber` is the zero/pole order
/// along the C*-fiber of a side stratum (may be negative); `L1`/`L2` are
/// the two fiber directions over the triple intersection, used for
/// interior edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Divisor {
    D12,
    D13,
    D23,
    D123,
    Lfiber,
    L1,
    L2,
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Divisor::D12 => "D12",
            Divisor::D13 => "D13",
            Divisor::D23 => "D23",
            Divisor::D123 => "D123",
            Divisor::Lfiber => "Lfiber",
            Divisor::L1 => "L1",
            Divisor::L2 => "L2",
        };
        f.write_str(s)
    }
}

/// Contact orders of one edge germ with the divisors adjacent to its
/// vertex's face.
///
/// Normalization: corner contacts store only nonzero orders; side contacts
/// always store both `Lfiber` and `D123` (a zero fiber order is meaningful
/// there); interior contacts always store `L1` and `L2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ContactData {
    orders: BTreeMap<Divisor, i64>,
}

impl ContactData {
    pub fn new() -> Self {
        ContactData::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Divisor, i64)>) -> Self {
        ContactData {
            orders: pairs.into_iter().collect(),
        }
    }

    pub fn order(&self, d: Divisor) -> i64 {
        self.orders.get(&d).copied().unwrap_or(0)
    }

    pub fn set(&mut self, d: Divisor, order: i64) {
        self.orders.insert(d, order);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Divisor, &i64)> {
        self.orders.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }
}

impl fmt::Display for ContactData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, o)) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{o}")?;
        }
        write!(f, "}}")
    }
}

/// The (α, β) frame of a side: α is the primitive vector along the side
/// from Mi toward Mj, β the primitive vector from Mi toward the remaining
/// corner. The pair is unimodular.
pub fn side_frame(side: Face) -> Option<(IntVec2, IntVec2)> {
    match side {
        Face::S12 => Some((IntVec2::new(1, 0), IntVec2::new(0, 1))),
        Face::S13 => Some((IntVec2::new(0, 1), IntVec2::new(1, 0))),
        Face::S23 => Some((IntVec2::new(-1, 1), IntVec2::new(-1, 0))),
        _ => None,
    }
}

/// Contact orders prescribed for an edge with derivative `u` oriented away
/// from a vertex on `face`.
///
/// Corners decompose `u` in the basis of the two primitive directions along
/// the adjacent sides; both coefficients are contact orders and must be
/// nonnegative. Sides decompose `u = a·α + b·β`: `a` is the fiber zero/pole
/// order (any sign), `b` the contact with the triple-intersection divisor
/// (nonnegative). Interior contact data is the derivative itself.
pub fn contact_data(face: Face, u: IntVec2) -> Result<ContactData> {
    let invalid = |reason: &str| Error::InvalidContact {
        face: face.to_string(),
        dir: u.to_string(),
        reason: reason.to_string(),
    };
    match face {
        Face::C1 | Face::C2 | Face::C3 => {
            // primitive directions along the two adjacent sides, with the
            // divisor each one runs along
            let (d_a, e_a, d_b, e_b) = match face {
                Face::C1 => (
                    Divisor::D12,
                    IntVec2::new(1, 0),
                    Divisor::D13,
                    IntVec2::new(0, 1),
                ),
                Face::C2 => (
                    Divisor::D12,
                    IntVec2::new(-1, 0),
                    Divisor::D23,
                    IntVec2::new(-1, 1),
                ),
                Face::C3 => (
                    Divisor::D13,
                    IntVec2::new(0, -1),
                    Divisor::D23,
                    IntVec2::new(1, -1),
                ),
                _ => unreachable!(),
            };
            let det = e_a.wedge(e_b);
            debug_assert_eq!(det.abs(), 1);
            let a = u.wedge(e_b) / det;
            let b = e_a.wedge(u) / det;
            if a < 0 || b < 0 {
                return Err(invalid("negative divisor contact at a corner"));
            }
            let mut c = ContactData::new();
            if a != 0 {
                c.set(d_a, a as i64);
            }
            if b != 0 {
                c.set(d_b, b as i64);
            }
            Ok(c)
        }
        Face::S12 | Face::S13 | Face::S23 => {
            let (alpha, beta) = side_frame(face).unwrap();
            let det = alpha.wedge(beta);
            debug_assert_eq!(det.abs(), 1);
            let a = u.wedge(beta) / det;
            let b = alpha.wedge(u) / det;
            if b < 0 {
                return Err(invalid(
                    "edge exits the complex: negative triple-intersection contact",
                ));
            }
            let mut c = ContactData::new();
            c.set(Divisor::Lfiber, a as i64);
            c.set(Divisor::D123, b as i64);
            Ok(c)
        }
        Face::Int => {
            let mut c = ContactData::new();
            c.set(Divisor::L1, u.x);
            c.set(Divisor::L2, u.y);
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn pt(x: Rat, y: Rat) -> RatPoint {
        RatPoint::new(x, y)
    }

    #[test]
    fn classify_examples() {
        let t = Domain::triangle();
        assert_eq!(
            t.classify_point(&RatPoint::from_ints(0, 0)).unwrap(),
            Face::C1
        );
        assert_eq!(
            t.classify_point(&pt(rat(1, 3), rat(1, 4))).unwrap(),
            Face::Int
        );
        assert_eq!(
            t.classify_point(&pt(rat(1, 2), rat(1, 2))).unwrap(),
            Face::S23
        );
        assert!(t.classify_point(&pt(rat(2, 1), rat(0, 1))).is_err());
        assert!(t
            .classify_point(&pt(rat(-1, 10), rat(1, 2)))
            .is_err());
    }

    #[test]
    fn classify_partitions_corners_and_sides() {
        let t = Domain::triangle();
        assert_eq!(
            t.classify_point(&RatPoint::from_ints(1, 0)).unwrap(),
            Face::C2
        );
        assert_eq!(
            t.classify_point(&RatPoint::from_ints(0, 1)).unwrap(),
            Face::C3
        );
        assert_eq!(
            t.classify_point(&pt(rat(1, 2), rat(0, 1))).unwrap(),
            Face::S12
        );
        assert_eq!(
            t.classify_point(&pt(rat(0, 1), rat(1, 2))).unwrap(),
            Face::S13
        );
    }

    #[test]
    fn plane_mode_is_all_interior() {
        let p = Domain::plane();
        assert_eq!(
            p.classify_point(&pt(rat(-100, 1), rat(7, 3))).unwrap(),
            Face::Int
        );
    }

    #[test]
    fn side_frames_are_unimodular() {
        for side in [Face::S12, Face::S13, Face::S23] {
            let (a, b) = side_frame(side).unwrap();
            assert_eq!(a.wedge(b).abs(), 1, "side {side}");
        }
        assert_eq!(
            side_frame(Face::S12).unwrap(),
            (IntVec2::new(1, 0), IntVec2::new(0, 1))
        );
        assert_eq!(
            side_frame(Face::S13).unwrap(),
            (IntVec2::new(0, 1), IntVec2::new(1, 0))
        );
        assert_eq!(
            side_frame(Face::S23).unwrap(),
            (IntVec2::new(-1, 1), IntVec2::new(-1, 0))
        );
    }

    #[test]
    fn corner_contacts() {
        // (C1, (1,1)) → {D12:1, D13:1}, the corner vertex of the worked
        // degree-3 example
        let c = contact_data(Face::C1, IntVec2::new(1, 1)).unwrap();
        assert_eq!(c.order(Divisor::D12), 1);
        assert_eq!(c.order(Divisor::D13), 1);
        // (C2, (−2,1)) → {D12:1, D23:1} via the (−a−b, b) rule
        let c = contact_data(Face::C2, IntVec2::new(-2, 1)).unwrap();
        assert_eq!(c.order(Divisor::D12), 1);
        assert_eq!(c.order(Divisor::D23), 1);
        // (C3, (1,-2)) → {D13:1, D23:1} via the (b, −a−b) rule
        let c = contact_data(Face::C3, IntVec2::new(1, -2)).unwrap();
        assert_eq!(c.order(Divisor::D13), 1);
        assert_eq!(c.order(Divisor::D23), 1);
        // an edge leaving the triangle is rejected
        assert!(contact_data(Face::C1, IntVec2::new(-1, 2)).is_err());
        assert!(contact_data(Face::C2, IntVec2::new(1, 0)).is_err());
    }

    #[test]
    fn side_contacts() {
        // (S13, (1,0)): α=(0,1), β=(1,0), so (1,0) = 0·α + 1·β
        let c = contact_data(Face::S13, IntVec2::new(1, 0)).unwrap();
        assert_eq!(c.order(Divisor::Lfiber), 0);
        assert_eq!(c.order(Divisor::D123), 1);
        // fiber order may be negative
        let c = contact_data(Face::S12, IntVec2::new(-2, 1)).unwrap();
        assert_eq!(c.order(Divisor::Lfiber), -2);
        assert_eq!(c.order(Divisor::D123), 1);
        // but the edge may not exit the complex
        assert!(contact_data(Face::S12, IntVec2::new(0, -1)).is_err());
    }

    #[test]
    fn side_contact_round_trip() {
        for side in [Face::S12, Face::S13, Face::S23] {
            let (alpha, beta) = side_frame(side).unwrap();
            for a in -3i64..=3 {
                for b in 0i64..=3 {
                    let u = alpha.scale(a) + beta.scale(b);
                    let c = contact_data(side, u).unwrap();
                    assert_eq!(c.order(Divisor::Lfiber), a);
                    assert_eq!(c.order(Divisor::D123), b);
                }
            }
        }
    }

    #[test]
    fn interior_contact_is_identity() {
        let u = IntVec2::new(-3, 5);
        let c = contact_data(Face::Int, u).unwrap();
        assert_eq!(c.order(Divisor::L1), -3);
        assert_eq!(c.order(Divisor::L2), 5);
    }
}
