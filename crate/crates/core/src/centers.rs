//! Coloured orthocenters, circumcenters and nine-point centers, the Euler
//! lines, and the triangle of orthocenters.
//!
//! The production path is the closed form in antisymmetric brackets, with a
//! single division by `[x1y2]^-` (nonzero for every [`Triangle`]). The
//! `*_by_meet` functions construct the defining lines and intersect them;
//! they exist to cross-check the closed forms.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine::{
    affine_combination, brackets, centroid, centroid_of, collinear, concurrent, join, lies_on,
    meet, midpoint_unchecked, other_two, third, BracketSet, Line, Point, Triangle,
};
use crate::error::{Error, Result};
use crate::metric::{altitude, perpendicular_bisector, Colour};
use crate::scalar::Scalar;

fn over(num: Scalar, den: &Scalar) -> Scalar {
    num * den.inv().expect("[x1y2]^- is nonzero for a triangle")
}

pub fn orthocenter_from(colour: Colour, b: &BracketSet) -> Point {
    let d = &b.x1y2;
    let (x, y) = match colour {
        Colour::Blue => (&b.x1x2y2 + &b.y1y2y2, &b.x1y1y2 + &b.x1x1x2),
        Colour::Red => (&b.x1x2y2 - &b.y1y2y2, &b.x1y1y2 - &b.x1x1x2),
        Colour::Green => (&b.x1x1y2 + &b.x1x2y1, &b.x1y2y2 - &b.x1y1y2),
    };
    Point::new(over(x, d), over(y, d)).expect("single field")
}

pub fn circumcenter_from(colour: Colour, b: &BracketSet) -> Point {
    let (x, y, d) = match colour {
        Colour::Blue => (
            &b.x1x1y2 + &b.y1y1y2,
            &b.x1y2y2 + &b.x1x2x2,
            b.x1y2.scale(2),
        ),
        Colour::Red => (
            &b.x1x1y2 - &b.y1y1y2,
            &b.x1y2y2 - &b.x1x2x2,
            b.x1y2.scale(2),
        ),
        Colour::Green => (b.x1x2y2.clone(), b.x1y1y2.clone(), b.x1y2.clone()),
    };
    Point::new(over(x, &d), over(y, &d)).expect("single field")
}

pub fn nine_point_center_from(colour: Colour, b: &BracketSet) -> Point {
    let (x, y, d) = match colour {
        Colour::Blue => (
            &b.x1x1y2 - &b.y1y1y2 + b.x1x2y2.scale(2),
            &b.x1y2y2 - &b.x1x2x2 + b.x1y1y2.scale(2),
            b.x1y2.scale(4),
        ),
        Colour::Red => (
            &b.x1x1y2 + &b.y1y1y2 + b.x1x2y2.scale(2),
            &b.x1y2y2 + &b.x1x2x2 + b.x1y1y2.scale(2),
            b.x1y2.scale(4),
        ),
        Colour::Green => (b.x1x1y2.clone(), b.x1y2y2.clone(), b.x1y2.scale(2)),
    };
    Point::new(over(x, &d), over(y, &d)).expect("single field")
}

pub fn orthocenter(colour: Colour, t: &Triangle) -> Point {
    orthocenter_from(colour, &brackets(t))
}

pub fn circumcenter(colour: Colour, t: &Triangle) -> Point {
    circumcenter_from(colour, &brackets(t))
}

pub fn nine_point_center(colour: Colour, t: &Triangle) -> Point {
    nine_point_center_from(colour, &brackets(t))
}

/// The `colour` altitude from `A_i` to the opposite side.
pub fn triangle_altitude(colour: Colour, t: &Triangle, i: usize) -> Line {
    altitude(colour, t.vertex(i), &t.line(i)).expect("single field")
}

/// The `colour` perpendicular bisector of the side opposite `A_i`.
pub fn triangle_bisector(colour: Colour, t: &Triangle, i: usize) -> Line {
    let (j, k) = other_two(i);
    perpendicular_bisector(colour, t.vertex(j), t.vertex(k)).expect("distinct vertices")
}

/// Meet of the first two lines, after checking that the third passes through it.
fn meet_of_three(lines: [Line; 3]) -> Result<Point> {
    let p = meet(&lines[0], &lines[1])?;
    if !concurrent(&lines[0], &lines[1], &lines[2])? || !lies_on(&p, &lines[2])? {
        return Err(Error::InvariantViolated(
            "defining lines are not concurrent",
        ));
    }
    Ok(p)
}

/// Orthocenter as the meet of two altitudes; the third must be concurrent.
pub fn orthocenter_by_meet(colour: Colour, t: &Triangle) -> Result<Point> {
    meet_of_three([1, 2, 3].map(|i| triangle_altitude(colour, t, i)))
}

/// Circumcenter as the meet of two perpendicular bisectors; the third must be concurrent.
pub fn circumcenter_by_meet(colour: Colour, t: &Triangle) -> Result<Point> {
    meet_of_three([1, 2, 3].map(|i| triangle_bisector(colour, t, i)))
}

/// Nine-point center as the circumcenter of the medial triangle, by meets.
pub fn nine_point_center_by_meet(colour: Colour, t: &Triangle) -> Result<Point> {
    circumcenter_by_meet(colour, &t.medial())
}

/// `(1/3) p + (2/3) q`; needs 3 invertible.
pub fn one_third_two_thirds(p: &Point, q: &Point) -> Result<Point> {
    let k = third(p.field())?;
    let two_k = k.scale(2);
    Ok(affine_combination(p, &k, q, &two_k))
}

/// The Euler line `O C` of one colour.
pub fn euler_line(colour: Colour, t: &Triangle) -> Result<Line> {
    let b = brackets(t);
    let o = orthocenter_from(colour, &b);
    let c = circumcenter_from(colour, &b);
    join(&o, &c).map_err(|_| Error::EulerDegenerate(colour))
}

/// Orthocenter, circumcenter and nine-point center of one colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourCenters {
    #[serde(rename = "O")]
    pub orthocenter: Point,
    #[serde(rename = "C")]
    pub circumcenter: Point,
    #[serde(rename = "N")]
    pub nine_point_center: Point,
}

/// All ten centers of a triangle: three per colour plus the centroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSet {
    pub centroid: Point,
    pub blue: ColourCenters,
    pub red: ColourCenters,
    pub green: ColourCenters,
}

impl CenterSet {
    pub fn get(&self, colour: Colour) -> &ColourCenters {
        match colour {
            Colour::Blue => &self.blue,
            Colour::Red => &self.red,
            Colour::Green => &self.green,
        }
    }

    fn check_invariants(&self) -> Result<()> {
        let g = &self.centroid;
        for colour in Colour::ALL {
            let cc = self.get(colour);
            let (o, c, n) = (&cc.orthocenter, &cc.circumcenter, &cc.nine_point_center);
            if midpoint_unchecked(o, c) != *n {
                return Err(Error::InvariantViolated("N is not the midpoint of O and C"));
            }
            if one_third_two_thirds(o, c)? != *g || one_third_two_thirds(c, n)? != *g {
                return Err(Error::InvariantViolated(
                    "G does not divide O C as 1/3 : 2/3",
                ));
            }
            if !collinear(o, n, g)? || !collinear(o, c, g)? {
                return Err(Error::InvariantViolated("Euler points are not collinear"));
            }
            let [u, v] = colour.others();
            let (cu, cv) = (self.get(u), self.get(v));
            if midpoint_unchecked(&cu.orthocenter, &cv.orthocenter) != *c {
                return Err(Error::InvariantViolated(
                    "circumcenter is not the midpoint of the other orthocenters",
                ));
            }
            if midpoint_unchecked(&cu.circumcenter, &cv.circumcenter) != *n {
                return Err(Error::InvariantViolated(
                    "nine-point center is not the midpoint of the other circumcenters",
                ));
            }
        }
        Ok(())
    }
}

impl Serialize for CenterSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("G", &self.centroid)?;
        m.serialize_entry("blue", &self.blue)?;
        m.serialize_entry("red", &self.red)?;
        m.serialize_entry("green", &self.green)?;
        m.end()
    }
}

pub fn colour_centers(colour: Colour, b: &BracketSet) -> ColourCenters {
    ColourCenters {
        orthocenter: orthocenter_from(colour, b),
        circumcenter: circumcenter_from(colour, b),
        nine_point_center: nine_point_center_from(colour, b),
    }
}

/// Every center of `t`, with the Euler and midpoint relations verified.
pub fn center_set(t: &Triangle) -> Result<CenterSet> {
    let centroid = centroid(t)?;
    let b = brackets(t);
    let set = CenterSet {
        centroid,
        blue: colour_centers(Colour::Blue, &b),
        red: colour_centers(Colour::Red, &b),
        green: colour_centers(Colour::Green, &b),
    };
    set.check_invariants()?;
    Ok(set)
}

/// The triangle `O_b O_r O_g` of coloured orthocenters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTriangle {
    pub vertices: Triangle,
}

impl OmegaTriangle {
    /// Side midpoints in `(C_b, C_r, C_g)` order: the midpoint opposite `O_b` is `C_b`.
    pub fn side_midpoints(&self) -> [Point; 3] {
        [1, 2, 3].map(|i| self.vertices.side_midpoint(i))
    }

    /// Median from the vertex of the given colour.
    pub fn median(&self, colour: Colour) -> Line {
        let i = colour_index(colour);
        join(self.vertices.vertex(i), &self.vertices.side_midpoint(i))
            .expect("a vertex differs from the opposite midpoint")
    }
}

fn colour_index(colour: Colour) -> usize {
    match colour {
        Colour::Blue => 1,
        Colour::Red => 2,
        Colour::Green => 3,
    }
}

pub fn omega_triangle(t: &Triangle) -> Result<OmegaTriangle> {
    let b = brackets(t);
    let [ob, or, og] = Colour::ALL.map(|c| orthocenter_from(c, &b));
    let vertices = Triangle::new(ob, or, og).map_err(|e| match e {
        Error::DegenerateTriangle => Error::OmegaDegenerate,
        other => other,
    })?;
    let omega = OmegaTriangle { vertices };
    let mids = omega.side_midpoints();
    for (colour, m) in Colour::ALL.into_iter().zip(mids.iter()) {
        if *m != circumcenter_from(colour, &b) {
            return Err(Error::InvariantViolated(
                "side midpoints of the orthocenter triangle are not the circumcenters",
            ));
        }
    }
    let [p, q, r] = omega.vertices.points();
    if let Ok(g) = centroid(t) {
        if centroid_of(p, q, r)? != g {
            return Err(Error::InvariantViolated(
                "orthocenter triangle has a different centroid",
            ));
        }
    }
    Ok(omega)
}

/// Named points of a triangle keyed by label (`A1`, `O_b`, `C_r`, `G`, ...), for reports.
pub fn labelled_points(t: &Triangle, set: &CenterSet) -> BTreeMap<String, Point> {
    let mut m = BTreeMap::new();
    for i in 1..=3 {
        m.insert(format!("A{i}"), t.vertex(i).clone());
    }
    m.insert("G".into(), set.centroid.clone());
    for colour in Colour::ALL {
        let cc = set.get(colour);
        let s = colour.initial();
        m.insert(format!("O_{s}"), cc.orthocenter.clone());
        m.insert(format!("C_{s}"), cc.circumcenter.clone());
        m.insert(format!("N_{s}"), cc.nine_point_center.clone());
    }
    m
}
