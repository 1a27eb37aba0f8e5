//! Colour-independent incidence geometry: points, lines, joins and meets,
//! collinearity, midpoints, and the antisymmetric bracket polynomials that
//! the center formulas are written in.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A point (or vector) `[x, y]`; both coordinates share one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    x: Scalar,
    y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self> {
        same_field(&x, &y)?;
        Ok(Point { x, y })
    }

    pub fn from_i64(x: i64, y: i64, field: FieldSpec) -> Self {
        Point {
            x: Scalar::from_i64(x, field),
            y: Scalar::from_i64(y, field),
        }
    }

    /// Parses `"x,y"`, each coordinate in scalar syntax.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self> {
        let (x, y) = text.split_once(',').ok_or_else(|| Error::Parse {
            input: text.to_string(),
            reason: "a point is written `x,y`".into(),
        })?;
        Ok(Point {
            x: Scalar::parse(x, field)?,
            y: Scalar::parse(y, field)?,
        })
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    pub fn field(&self) -> FieldSpec {
        self.x.field()
    }

    /// Vector difference `self - other`.
    pub fn minus(&self, other: &Point) -> Point {
        Point {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn plus(&self, other: &Point) -> Point {
        Point {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn times(&self, k: &Scalar) -> Point {
        Point {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    pub fn check_field(&self, other: &Point) -> Result<()> {
        same_field(&self.x, &other.x)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.x, &self.y].serialize(s)
    }
}

pub(crate) fn same_field(a: &Scalar, b: &Scalar) -> Result<()> {
    if a.field() == b.field() {
        Ok(())
    } else {
        Err(Error::MixedFields(
            a.field().to_string(),
            b.field().to_string(),
        ))
    }
}

/// The line `a x + b y + c = 0`, stored as a canonical proportion `<a : b : c>`.
///
/// Over the rationals the coefficients are coprime integers with the first
/// nonzero of `(a, b)` positive; over `F_p` that coefficient is scaled to 1.
/// Equality of lines is therefore equality of the stored triples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        same_field(&a, &b)?;
        same_field(&a, &c)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        Ok(canonicalize(a, b, c))
    }

    pub fn from_i64(a: i64, b: i64, c: i64, field: FieldSpec) -> Result<Self> {
        Line::new(
            Scalar::from_i64(a, field),
            Scalar::from_i64(b, field),
            Scalar::from_i64(c, field),
        )
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    pub fn coefficients(&self) -> [&Scalar; 3] {
        [&self.a, &self.b, &self.c]
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} : {} : {}>", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.a, &self.b, &self.c].serialize(s)
    }
}

fn canonicalize(a: Scalar, b: Scalar, c: Scalar) -> Line {
    let lead = if a.is_zero() { &b } else { &a };
    if a.field().is_rational() {
        let qs = [&a, &b, &c].map(|s| s.as_rational().expect("rational field").clone());
        let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let negate = lead.as_rational().expect("rational field").is_negative();
        for n in ints.iter_mut() {
            *n = &*n / &gcd;
            if negate {
                *n = -&*n;
            }
        }
        let f = FieldSpec::RATIONAL;
        Line {
            a: Scalar::from_bigint(&ints[0], f),
            b: Scalar::from_bigint(&ints[1], f),
            c: Scalar::from_bigint(&ints[2], f),
        }
    } else {
        let k = lead.inv().expect("leading coefficient is nonzero");
        Line {
            a: &a * &k,
            b: &b * &k,
            c: &c * &k,
        }
    }
}

/// Three pairwise distinct, non-collinear points `A1 A2 A3` in one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    points: [Point; 3],
}

impl Triangle {
    pub fn new(a1: Point, a2: Point, a3: Point) -> Result<Self> {
        a1.check_field(&a2)?;
        a1.check_field(&a3)?;
        if collinear(&a1, &a2, &a3)? {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle {
            points: [a1, a2, a3],
        })
    }

    pub fn from_i64(coords: [(i64, i64); 3], field: FieldSpec) -> Result<Self> {
        let [p, q, r] = coords.map(|(x, y)| Point::from_i64(x, y, field));
        Triangle::new(p, q, r)
    }

    pub fn points(&self) -> &[Point; 3] {
        &self.points
    }

    /// Vertex `A_i`, `i` in `1..=3`.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.points[i - 1]
    }

    pub fn field(&self) -> FieldSpec {
        self.points[0].field()
    }

    /// The side line opposite vertex `i`: `l1 = A2A3`, `l2 = A1A3`, `l3 = A1A2`.
    pub fn line(&self, i: usize) -> Line {
        let (j, k) = other_two(i);
        join(self.vertex(j), self.vertex(k)).expect("triangle vertices are distinct")
    }

    /// Midpoint `M_i` of the side opposite vertex `i`.
    pub fn side_midpoint(&self, i: usize) -> Point {
        let (j, k) = other_two(i);
        midpoint_unchecked(self.vertex(j), self.vertex(k))
    }

    /// The triangle `M1 M2 M3` of side midpoints.
    pub fn medial(&self) -> Triangle {
        Triangle {
            points: [1, 2, 3].map(|i| self.side_midpoint(i)),
        }
    }

    /// Apply a map to every vertex; fails if the image is degenerate.
    pub fn map(&self, f: impl Fn(&Point) -> Point) -> Result<Triangle> {
        let [p, q, r] = self.points.each_ref().map(f);
        Triangle::new(p, q, r)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = &self.points;
        write!(f, "{p} {q} {r}")
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = &self.points;
        write!(f, "Triangle({p:?}, {q:?}, {r:?})")
    }
}

/// The two indices in `1..=3` other than `i`, in increasing order.
pub fn other_two(i: usize) -> (usize, usize) {
    match i {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => panic!("vertex index {i} out of range 1..=3"),
    }
}

pub fn lies_on(p: &Point, l: &Line) -> Result<bool> {
    same_field(p.x(), l.a())?;
    Ok(lies_on_unchecked(p, l))
}

pub(crate) fn lies_on_unchecked(p: &Point, l: &Line) -> bool {
    (&l.a * &p.x + &l.b * &p.y + &l.c).is_zero()
}

/// The line through two distinct points.
pub fn join(p: &Point, q: &Point) -> Result<Line> {
    p.check_field(q)?;
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    Line::new(&p.y - &q.y, &q.x - &p.x, &p.x * &q.y - &q.x * &p.y)
}

/// Intersection of two non-parallel lines.
pub fn meet(l1: &Line, l2: &Line) -> Result<Point> {
    same_field(l1.a(), l2.a())?;
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(Error::ParallelLines);
    }
    let inv = det.inv()?;
    Ok(Point {
        x: (&l1.b * &l2.c - &l2.b * &l1.c) * &inv,
        y: (&l1.c * &l2.a - &l2.c * &l1.a) * &inv,
    })
}

/// `x1y2 - x1y3 + x2y3 - x3y2 + x3y1 - x2y1`, twice the signed area.
pub fn signed_area2(p: &Point, q: &Point, r: &Point) -> Scalar {
    &p.x * &q.y - &p.x * &r.y + &q.x * &r.y - &r.x * &q.y + &r.x * &p.y - &q.x * &p.y
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> Result<bool> {
    p.check_field(q)?;
    p.check_field(r)?;
    Ok(signed_area2(p, q, r).is_zero())
}

pub fn concurrent(l1: &Line, l2: &Line, l3: &Line) -> Result<bool> {
    same_field(l1.a(), l2.a())?;
    same_field(l1.a(), l3.a())?;
    let det = &l1.a * &l2.b * &l3.c - &l1.a * &l3.b * &l2.c + &l2.a * &l3.b * &l1.c
        - &l3.a * &l2.b * &l1.c
        + &l3.a * &l1.b * &l2.c
        - &l2.a * &l1.b * &l3.c;
    Ok(det.is_zero())
}

pub fn midpoint(p: &Point, q: &Point) -> Result<Point> {
    p.check_field(q)?;
    Ok(midpoint_unchecked(p, q))
}

pub(crate) fn midpoint_unchecked(p: &Point, q: &Point) -> Point {
    Point {
        x: (&p.x + &q.x).halve(),
        y: (&p.y + &q.y).halve(),
    }
}

/// The affine combination `w_p * p + w_q * q` (weights assumed to sum to 1).
pub fn affine_combination(p: &Point, wp: &Scalar, q: &Point, wq: &Scalar) -> Point {
    p.times(wp).plus(&q.times(wq))
}

pub(crate) fn third(field: FieldSpec) -> Result<Scalar> {
    if field.characteristic() == 3 {
        return Err(Error::CharacteristicThree);
    }
    Scalar::from_i64(3, field).inv()
}

/// Average of three points; needs 3 invertible.
pub fn centroid_of(p: &Point, q: &Point, r: &Point) -> Result<Point> {
    p.check_field(q)?;
    p.check_field(r)?;
    let k = third(p.field())?;
    Ok(Point {
        x: (&p.x + &q.x + &r.x) * &k,
        y: (&p.y + &q.y + &r.y) * &k,
    })
}

pub fn centroid(t: &Triangle) -> Result<Point> {
    let [p, q, r] = t.points();
    centroid_of(p, q, r)
}

/// The six permutations of `{1, 2, 3}` (zero-based) with their signs.
const PERMUTATIONS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], true),
    ([0, 2, 1], false),
    ([1, 2, 0], true),
    ([2, 1, 0], false),
    ([2, 0, 1], true),
    ([1, 0, 2], false),
];

/// `[m]^-`: the signed sum of `m` over all six relabelings of the vertices.
///
/// `monomial` receives the relabeled vertices `(A_s(1), A_s(2), A_s(3))`.
pub fn antisymmetrize(t: &Triangle, monomial: impl Fn(&Point, &Point, &Point) -> Scalar) -> Scalar {
    let pts = t.points();
    PERMUTATIONS
        .iter()
        .fold(Scalar::zero(t.field()), |acc, (perm, even)| {
            let term = monomial(&pts[perm[0]], &pts[perm[1]], &pts[perm[2]]);
            if *even {
                acc + term
            } else {
                acc - term
            }
        })
}

/// The antisymmetric brackets that appear in the center formulas.
/// Field names spell out the monomial, e.g. `x1x1y2` is `[x1^2 y2]^-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketSet {
    pub x1y2: Scalar,
    pub x1x1y2: Scalar,
    pub y1y1y2: Scalar,
    pub x1y2y2: Scalar,
    pub x1x2x2: Scalar,
    pub x1x2y2: Scalar,
    pub x1y1y2: Scalar,
    pub y1y2y2: Scalar,
    pub x1x1x2: Scalar,
    pub x1x2y1: Scalar,
}

pub fn brackets(t: &Triangle) -> BracketSet {
    BracketSet {
        x1y2: antisymmetrize(t, |a, b, _| a.x() * b.y()),
        x1x1y2: antisymmetrize(t, |a, b, _| a.x() * a.x() * b.y()),
        y1y1y2: antisymmetrize(t, |a, b, _| a.y() * a.y() * b.y()),
        x1y2y2: antisymmetrize(t, |a, b, _| a.x() * b.y() * b.y()),
        x1x2x2: antisymmetrize(t, |a, b, _| a.x() * b.x() * b.x()),
        x1x2y2: antisymmetrize(t, |a, b, _| a.x() * b.x() * b.y()),
        x1y1y2: antisymmetrize(t, |a, b, _| a.x() * a.y() * b.y()),
        y1y2y2: antisymmetrize(t, |a, b, _| a.y() * b.y() * b.y()),
        x1x1x2: antisymmetrize(t, |a, b, _| a.x() * a.x() * b.x()),
        x1x2y1: antisymmetrize(t, |a, b, _| a.x() * b.x() * a.y()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::RATIONAL;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_i64(x, y, Q)
    }

    fn qs(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::from_i64(a, b, c, Q).unwrap()
    }

    fn worked() -> Triangle {
        Triangle::from_i64([(0, 0), (6, 1), (2, 3)], Q).unwrap()
    }

    #[test]
    fn incidence() {
        assert!(lies_on(&pt(6, 1), &line(1, -6, 0)).unwrap());
        assert!(lies_on(&pt(0, 0), &line(0, 1, 0)).unwrap());
        assert!(!lies_on(&pt(1, 1), &line(1, 0, 0)).unwrap());
    }

    #[test]
    fn joins_are_canonical() {
        assert_eq!(join(&pt(0, 0), &pt(6, 1)).unwrap(), line(1, -6, 0));
        assert_eq!(
            join(&pt(6, 1), &pt(2, 3)).unwrap().to_string(),
            "<1 : 2 : -8>"
        );
        assert_eq!(join(&pt(0, 0), &pt(0, 0)), Err(Error::CoincidentPoints));
        assert_eq!(line(-2, -4, 16), line(1, 2, -8));
        assert_eq!(line(0, -3, 6).to_string(), "<0 : 1 : -2>");
        let l = Line::new(qs("1/2"), qs("-1/3"), qs("5/6")).unwrap();
        assert_eq!(l.to_string(), "<3 : -2 : 5>");
        assert_eq!(Line::from_i64(0, 0, 1, Q), Err(Error::DegenerateLine));
    }

    #[test]
    fn canonical_over_prime_field() {
        let f = FieldSpec::prime(13).unwrap();
        let l = Line::from_i64(2, 4, 6, f).unwrap();
        assert_eq!(l.to_string(), "<1 : 2 : 3>");
        let m = Line::from_i64(0, 5, 1, f).unwrap();
        assert!(m.b().is_one());
        assert_eq!(
            Line::new(m.a().clone(), m.b().clone(), m.c().clone()).unwrap(),
            m
        );
    }

    #[test]
    fn meets() {
        let p = meet(&line(2, -1, 0), &line(1, 2, -8)).unwrap();
        assert_eq!(p, Point::new(qs("8/5"), qs("16/5")).unwrap());
        assert_eq!(meet(&line(1, 0, 0), &line(0, 1, 0)).unwrap(), pt(0, 0));
        assert_eq!(
            meet(&line(1, 1, 0), &line(1, 1, -1)),
            Err(Error::ParallelLines)
        );
        assert_eq!(
            meet(&line(1, 1, 0), &line(1, 1, 0)),
            Err(Error::ParallelLines)
        );
    }

    #[test]
    fn collinearity_and_concurrency() {
        assert!(!collinear(&pt(0, 0), &pt(6, 1), &pt(2, 3)).unwrap());
        assert_eq!(signed_area2(&pt(0, 0), &pt(6, 1), &pt(2, 3)), qs("16"));
        assert!(collinear(&pt(0, 0), &pt(1, 1), &pt(2, 2)).unwrap());
        assert!(collinear(&pt(0, 0), &pt(6, 1), &pt(12, 2)).unwrap());
        assert!(concurrent(&line(1, 0, 0), &line(0, 1, 0), &line(1, 1, 0)).unwrap());
        assert!(!concurrent(&line(1, 0, 0), &line(0, 1, 0), &line(1, 1, -1)).unwrap());
        // blue altitudes of the worked triangle all pass through [15/8, 15/4]
        let o = Point::new(qs("15/8"), qs("15/4")).unwrap();
        let t = worked();
        let alts: Vec<Line> = (1..=3)
            .map(|i| {
                let (j, k) = other_two(i);
                let d = t.vertex(k).minus(t.vertex(j));
                // blue perpendicular through A_i: d . (X - A_i) = 0
                let a = t.vertex(i);
                Line::new(
                    d.x().clone(),
                    d.y().clone(),
                    -(d.x() * a.x() + d.y() * a.y()),
                )
                .unwrap()
            })
            .collect();
        assert!(concurrent(&alts[0], &alts[1], &alts[2]).unwrap());
        assert!(alts.iter().all(|l| lies_on(&o, l).unwrap()));
    }

    #[test]
    fn midpoints_and_centroid() {
        assert_eq!(midpoint(&pt(6, 1), &pt(2, 3)).unwrap(), pt(4, 2));
        assert_eq!(midpoint(&pt(0, 0), &pt(0, 0)).unwrap(), pt(0, 0));
        let or = Point::new(qs("9/8"), qs("-9/4")).unwrap();
        let og = Point::new(qs("5"), qs("5/2")).unwrap();
        assert_eq!(
            midpoint(&or, &og).unwrap(),
            Point::new(qs("49/16"), qs("1/8")).unwrap()
        );
        let g = centroid(&worked()).unwrap();
        assert_eq!(g, Point::new(qs("8/3"), qs("4/3")).unwrap());
        let t = Triangle::from_i64([(0, 0), (3, 0), (0, 3)], Q).unwrap();
        assert_eq!(centroid(&t).unwrap(), pt(1, 1));
        let median = join(t.vertex(1), &t.side_midpoint(1)).unwrap();
        assert!(lies_on(&centroid(&t).unwrap(), &median).unwrap());
    }

    #[test]
    fn centroid_rejects_characteristic_three() {
        let f3 = FieldSpec::prime(3).unwrap();
        let t = Triangle::from_i64([(0, 0), (1, 0), (0, 1)], f3).unwrap();
        assert_eq!(centroid(&t), Err(Error::CharacteristicThree));
    }

    #[test]
    fn triangle_rejects_degenerate_and_mixed() {
        assert_eq!(
            Triangle::from_i64([(0, 0), (1, 1), (2, 2)], Q),
            Err(Error::DegenerateTriangle)
        );
        assert_eq!(
            Triangle::from_i64([(0, 0), (0, 0), (2, 3)], Q),
            Err(Error::DegenerateTriangle)
        );
        let f7 = FieldSpec::prime(7).unwrap();
        let r = Triangle::new(pt(0, 0), Point::from_i64(1, 0, f7), pt(0, 1));
        assert!(matches!(r, Err(Error::MixedFields(..))));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(brackets(&worked()).x1y2, qs("16"));
        let unit = Triangle::from_i64([(0, 0), (1, 0), (0, 1)], Q).unwrap();
        assert_eq!(brackets(&unit).x1y2, qs("1"));
        // [x1^3 y1]^- vanishes identically
        let cubed = antisymmetrize(&worked(), |a, _, _| a.x() * a.x() * a.x() * a.y());
        assert!(cubed.is_zero());
    }

    #[test]
    fn bracket_matches_explicit_expansion() {
        // [x1^2 x2 y2]^- as written out term by term
        let t = Triangle::from_i64([(2, -1), (5, 3), (-4, 7)], Q).unwrap();
        let [a, b, c] = t.points();
        let m = |p: &Point, q: &Point| p.x() * p.x() * q.x() * q.y();
        let expected = m(a, b) - m(a, c) + m(b, c) - m(c, b) + m(c, a) - m(b, a);
        assert_eq!(antisymmetrize(&t, |p, q, _| m(p, q)), expected);
    }
}
