//! Coloured circles and the incidence theorems linking them.
//!
//! A blue circle is an ordinary circle; red and green circles are rectangular
//! hyperbolas with asymptotes along the null directions of their colour.

use serde::{Serialize, Serializer};

use crate::affine::{brackets, midpoint_unchecked, BracketSet, Point, Triangle};
use crate::centers::{circumcenter_from, nine_point_center_from, orthocenter_from};
use crate::error::Result;
use crate::metric::{foot, quadrance_unchecked, Colour};
use crate::scalar::Scalar;

/// The locus `Q_colour(center, X) = K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circle {
    pub colour: Colour,
    pub center: Point,
    #[serde(rename = "K")]
    pub quadrance: Scalar,
}

impl Circle {
    pub fn new(colour: Colour, center: Point, quadrance: Scalar) -> Result<Self> {
        crate::affine::same_field(center.x(), &quadrance)?;
        Ok(Circle {
            colour,
            center,
            quadrance,
        })
    }

    pub fn contains(&self, p: &Point) -> bool {
        quadrance_unchecked(self.colour, &self.center, p) == self.quadrance
    }
}

pub fn on_circle(p: &Point, c: &Circle) -> Result<bool> {
    p.check_field(&c.center)?;
    Ok(c.contains(p))
}

/// The unique circle of `colour` through the three vertices.
pub fn circumcircle(colour: Colour, t: &Triangle) -> Circle {
    let center = circumcenter_from(colour, &brackets(t));
    let quadrance = quadrance_unchecked(colour, &center, t.vertex(1));
    Circle {
        colour,
        center,
        quadrance,
    }
}

/// Circumcircle of the triangle of side midpoints.
pub fn nine_point_circle(colour: Colour, t: &Triangle) -> Circle {
    circumcircle(colour, &t.medial())
}

/// Result of one incidence check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// A required point does not exist because a side is null in the colour.
    SkippedNull,
}

impl Outcome {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }

    pub fn is_failure(self) -> bool {
        self == Outcome::Fails
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Outcome::Holds => s.serialize_bool(true),
            Outcome::Fails => s.serialize_bool(false),
            Outcome::SkippedNull => s.serialize_str("skipped-null"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceCheck {
    pub name: String,
    pub outcome: Outcome,
}

/// Orthocenters on the other circumcircles (6 checks) and the eleven named
/// points on each nine-point circle (33 checks).
pub fn incidence_report(t: &Triangle) -> Vec<IncidenceCheck> {
    let mut out = Vec::with_capacity(39);
    visit_incidences(t, &brackets(t), |name, outcome| {
        out.push(IncidenceCheck {
            name: name(),
            outcome,
        })
    });
    out
}

/// Walks the incidence checks in a fixed order; names are built only on demand.
pub(crate) fn visit_incidences(
    t: &Triangle,
    b: &BracketSet,
    mut visit: impl FnMut(&dyn Fn() -> String, Outcome),
) {
    let circum = Colour::ALL.map(|c| {
        let center = circumcenter_from(c, b);
        let quadrance = quadrance_unchecked(c, &center, t.vertex(1));
        Circle {
            colour: c,
            center,
            quadrance,
        }
    });
    let orthos = Colour::ALL.map(|c| orthocenter_from(c, b));
    for c in Colour::ALL {
        let o = &orthos[c as usize];
        for other in c.others() {
            let circle = &circum[other as usize];
            visit(
                &|| format!("O_{} on {} circumcircle", c.initial(), other),
                Outcome::from_bool(circle.contains(o)),
            );
        }
    }

    let medial = t.medial();
    for c in Colour::ALL {
        let center = nine_point_center_from(c, b);
        let quadrance = quadrance_unchecked(c, &center, medial.vertex(1));
        let npc = Circle {
            colour: c,
            center,
            quadrance,
        };
        let s = c.initial();
        let o = &orthos[c as usize];
        for i in 1..=3 {
            let outcome = match foot(c, t.vertex(i), &t.line(i)) {
                Ok(f) => Outcome::from_bool(npc.contains(&f)),
                Err(_) => Outcome::SkippedNull,
            };
            visit(&|| format!("F{i}_{s} on {c} nine-point circle"), outcome);
        }
        for i in 1..=3 {
            let m = midpoint_unchecked(o, t.vertex(i));
            visit(
                &|| format!("midpoint(O_{s}, A{i}) on {c} nine-point circle"),
                Outcome::from_bool(npc.contains(&m)),
            );
        }
        for i in 1..=3 {
            visit(
                &|| format!("M{i} on {c} nine-point circle"),
                Outcome::from_bool(npc.contains(medial.vertex(i))),
            );
        }
        for other in c.others() {
            let cc = &circum[other as usize].center;
            visit(
                &|| format!("C_{} on {c} nine-point circle", other.initial()),
                Outcome::from_bool(npc.contains(cc)),
            );
        }
    }
}
